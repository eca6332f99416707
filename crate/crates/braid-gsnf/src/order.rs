//! The inverse tower order on band words.
//!
//! The band alphabet is layered `S_n < S_{n-1} < … < S_2 < Σ^{-1}`, with
//! `Σ^{-1}` the top alphabet of the tower and the `S_n`-words at the bottom
//! ordered deg-inlex (length first, then inverse-lexicographically from the
//! last letter). At every other level a word `u = u_0 z_1 u_1 … z_k u_k`
//! (`z_i` in the level's alphabet, `u_i` over the lower levels) is compared
//! by the tuple `(k, u_k, z_k, u_{k-1}, …, z_1, u_0)`, segments recursing one
//! level down. This is a total monomial well-order: rules are oriented by it
//! and every rewrite step strictly decreases.

use crate::word::{check_strands, BandLetter, BandWord, Sign, WordError};
use std::cmp::Ordering;

/// Tower level of a letter: 0 for `Σ^{-1}`, `j-1` for `S_j`.
/// Level `n-1`, the `S_n` letters, is the innermost alphabet.
fn level(l: BandLetter) -> usize {
    match l {
        BandLetter::SigmaInv(_) => 0,
        BandLetter::Band { j, .. } => j - 1,
    }
}

/// Position in the letter chain of the letter's own alphabet:
/// `σ_1^{-1} < … < σ_{n-1}^{-1}` and
/// `s_{1,j}^{-1} < s_{1,j} < s_{2,j}^{-1} < s_{2,j} < … < s_{j-1,j}`.
fn chain_index(l: BandLetter) -> usize {
    match l {
        BandLetter::SigmaInv(k) => k - 1,
        BandLetter::Band { i, sign, .. } => 2 * (i - 1) + usize::from(sign == Sign::Plus),
    }
}

/// Compares two band words in the inverse tower order.
///
/// Returns `Equal` iff the words are letterwise equal; the empty word is the
/// unique minimum.
pub fn compare(u: &BandWord, v: &BandWord) -> Result<Ordering, WordError> {
    check_strands(u.strands(), v.strands())?;
    Ok(compare_letters(u.strands().get(), u.letters(), v.letters()))
}

/// Letter-slice comparison; both slices must be valid for `n` strands.
pub(crate) fn compare_letters(n: usize, u: &[BandLetter], v: &[BandLetter]) -> Ordering {
    cmp_at_level(n, u, v, 0)
}

fn cmp_at_level(n: usize, u: &[BandLetter], v: &[BandLetter], lvl: usize) -> Ordering {
    if lvl == n - 1 {
        return cmp_deg_inlex(u, v);
    }
    let zu: Vec<usize> = z_positions(u, lvl);
    let zv: Vec<usize> = z_positions(v, lvl);
    match zu.len().cmp(&zv.len()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let k = zu.len();
    if k == 0 {
        return cmp_at_level(n, u, v, lvl + 1);
    }
    // (u_k, z_k, u_{k-1}, z_{k-1}, …, z_1, u_0), lexicographically.
    for t in (1..=k).rev() {
        let (ut, vt) = if t == k {
            (&u[zu[k - 1] + 1..], &v[zv[k - 1] + 1..])
        } else {
            (&u[zu[t - 1] + 1..zu[t]], &v[zv[t - 1] + 1..zv[t]])
        };
        match cmp_at_level(n, ut, vt, lvl + 1) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match chain_index(u[zu[t - 1]]).cmp(&chain_index(v[zv[t - 1]])) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    cmp_at_level(n, &u[..zu[0]], &v[..zv[0]], lvl + 1)
}

fn z_positions(u: &[BandLetter], lvl: usize) -> Vec<usize> {
    u.iter()
        .enumerate()
        .filter_map(|(p, &l)| (level(l) == lvl).then_some(p))
        .collect()
}

/// Length first, then inverse-lexicographic from the last letters.
fn cmp_deg_inlex(u: &[BandLetter], v: &[BandLetter]) -> Ordering {
    match u.len().cmp(&v.len()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (a, b) in u.iter().rev().zip(v.iter().rev()) {
        match chain_index(*a).cmp(&chain_index(*b)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::StrandCount;

    fn w(text: &str, n: usize) -> BandWord {
        BandWord::parse(text, StrandCount::new(n).unwrap()).unwrap()
    }

    #[test]
    fn level_chain_examples() {
        // S_3 letters are smaller than S_2 letters: the S_2 level sees
        // k=0 on the left, k=1 on the right.
        assert_eq!(
            compare(&w("b1.3", 3), &w("b1.2", 3)).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare(&w("B1.3", 3), &w("b1.3", 3)).unwrap(),
            Ordering::Less
        );
        assert_eq!(compare(&w("", 3), &w("b1.3", 3)).unwrap(), Ordering::Less);
    }

    #[test]
    fn interleaved_segments_decide() {
        // Left tuple at the S_2 level: (1, b2.3, B1.2, ε);
        // right tuple: (1, ε, B1.2, b1.3 b2.3 B1.3). Nonempty u_1 wins.
        assert_eq!(
            compare(&w("B1.2 b2.3", 3), &w("b1.3 b2.3 B1.3 B1.2", 3)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn equal_iff_letterwise() {
        let u = w("b1.3 S2 B1.2", 3);
        assert_eq!(compare(&u, &u).unwrap(), Ordering::Equal);
        let v = w("b1.3 S2 b1.2", 3);
        assert_ne!(compare(&u, &v).unwrap(), Ordering::Equal);
    }

    #[test]
    fn sigma_runs_compare_from_the_right() {
        // z_k (the rightmost σ) is compared before earlier letters.
        assert_eq!(
            compare(&w("S2 S1 S2", 3), &w("S1 S2 S1", 3)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(compare(&w("S1 S2", 3), &w("S2 S1", 3)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(compare(&w("S1", 3), &w("S1", 4)).is_err());
    }

    #[test]
    fn deg_inlex_at_the_innermost_level() {
        // Both words are S_3-words in B_3: length decides first.
        assert_eq!(
            compare(&w("b1.3 b1.3", 3), &w("b2.3", 3)).unwrap(),
            Ordering::Greater
        );
        // Equal length: last letters decide, b2.3 > b1.3.
        assert_eq!(
            compare(&w("b2.3 b1.3", 3), &w("b1.3 b2.3", 3)).unwrap(),
            Ordering::Less
        );
    }
}
