//! Reduction of band words to normal form, word-equality decisions, and the
//! decomposition of normal forms into pure parts and a permutation tail.
//!
//! The rule set is confluent and every rule strictly decreases a word under
//! the tower order, so reduction terminates and the result is independent of
//! which redex is rewritten first. [`Strategy`] exposes two redex-selection
//! policies so that tests can exercise that independence. Both are
//! deterministic; the default is rightmost because its traces stay short —
//! see [`Strategy`] for the step-count gap.

use thiserror::Error;

use crate::rules::RuleSet;
use crate::word::{
    artin_to_band, check_strands, ArtinWord, BandLetter, BandWord, StrandCount, WordError,
};

/// Default cap on rewrite steps per reduction.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum RewriteError {
    /// The reduction did not finish within the step budget. The order is
    /// well-founded, so reduction always terminates; exhausting the budget
    /// signals a pathologically long trace, not divergence. The partial
    /// word is equal to the input in the braid group.
    #[error("step budget {budget} exhausted with a partial word of {} letters", .partial.len())]
    BudgetExceeded { budget: usize, partial: BandWord },
    /// The input to [`decompose_normal_form`] is not shaped like a normal
    /// form. Reduced words always are, so this indicates a caller bug or a
    /// deliberately corrupted rule set.
    #[error("not in normal-form shape at position {position}: {reason}")]
    Shape { position: usize, reason: &'static str },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Redex selection policy. All policies produce the same normal form, but
/// their step counts differ wildly: a rewrite step can splice in a conjugate
/// expansion whose inverse pairs only cancel once the adjacent letters meet,
/// and leftmost keeps re-expanding the left seam before they do. On random
/// four-strand words of length ≤ 16 the worst leftmost trace exceeds 10⁶
/// steps while rightmost needs under 2 000; on the hardest five-strand
/// overlap word the gap is 3 423 174 against 310.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Earliest-starting redex. Since no rule's LHS contains another's as a
    /// factor, the leftmost redex is both innermost and outermost.
    Leftmost,
    /// Latest-starting redex. The default: expansions land left of material
    /// that is already irreducible, so cancellations fire before the next
    /// expansion duplicates them.
    #[default]
    Rightmost,
}

fn find_redex(
    letters: &[BandLetter],
    rules: &RuleSet,
    strategy: Strategy,
    scan_from: usize,
) -> Option<(usize, usize)> {
    match strategy {
        Strategy::Leftmost => rules.leftmost_match(letters, scan_from),
        Strategy::Rightmost => (0..letters.len())
            .rev()
            .find_map(|p| rules.match_at(letters, p).map(|id| (p, id))),
    }
}

/// Applies rules until none matches, spending at most `budget` steps.
/// Returns the number of steps on success, `Err(())` when the budget runs
/// out (leaving the partial word in `letters`).
fn reduce_in_place(
    letters: &mut Vec<BandLetter>,
    rules: &RuleSet,
    budget: usize,
    strategy: Strategy,
) -> Result<usize, ()> {
    let mut steps = 0usize;
    // Leftmost invariant: no redex starts left of scan_from. A rewrite at
    // pos can create redexes no earlier than pos - (max LHS length - 1).
    let mut scan_from = 0usize;
    loop {
        let Some((pos, id)) = find_redex(letters, rules, strategy, scan_from) else {
            return Ok(steps);
        };
        if steps == budget {
            return Err(());
        }
        steps += 1;
        let rule = &rules.rules()[id];
        letters.splice(pos..pos + rule.lhs().len(), rule.rhs().iter().copied());
        scan_from = match strategy {
            Strategy::Leftmost => pos.saturating_sub(rules.max_lhs_len().saturating_sub(1)),
            Strategy::Rightmost => 0,
        };
    }
}

/// The unique irreducible word equal to `w` in the braid group, computed
/// with the default redex-selection policy.
pub fn normal_form(w: &BandWord, rules: &RuleSet, budget: usize) -> Result<BandWord, RewriteError> {
    normal_form_with(w, rules, budget, Strategy::default())
}

/// [`normal_form`] with an explicit redex-selection policy.
pub fn normal_form_with(
    w: &BandWord,
    rules: &RuleSet,
    budget: usize,
    strategy: Strategy,
) -> Result<BandWord, RewriteError> {
    check_strands(w.strands(), rules.strands())?;
    let mut letters = w.letters().to_vec();
    match reduce_in_place(&mut letters, rules, budget, strategy) {
        Ok(_) => Ok(BandWord::from_validated(w.strands(), letters)),
        Err(()) => Err(RewriteError::BudgetExceeded {
            budget,
            partial: BandWord::from_validated(w.strands(), letters),
        }),
    }
}

/// Every intermediate word of a reduction, starting with `w` and ending
/// with its normal form. Each word is strictly smaller than its
/// predecessor under the tower order.
pub fn reduction_trace(
    w: &BandWord,
    rules: &RuleSet,
    budget: usize,
    strategy: Strategy,
) -> Result<Vec<BandWord>, RewriteError> {
    check_strands(w.strands(), rules.strands())?;
    let mut letters = w.letters().to_vec();
    let mut trace = vec![w.clone()];
    for steps in 0.. {
        let Some((pos, id)) = find_redex(&letters, rules, strategy, 0) else {
            return Ok(trace);
        };
        if steps == budget {
            return Err(RewriteError::BudgetExceeded {
                budget,
                partial: BandWord::from_validated(w.strands(), letters),
            });
        }
        let rule = &rules.rules()[id];
        letters.splice(pos..pos + rule.lhs().len(), rule.rhs().iter().copied());
        trace.push(BandWord::from_validated(w.strands(), letters.clone()));
    }
    unreachable!()
}

/// True iff `u` and `v` represent the same element of the braid group,
/// decided by comparing normal forms letterwise.
pub fn equal_words(
    u: &BandWord,
    v: &BandWord,
    rules: &RuleSet,
    budget: usize,
) -> Result<bool, RewriteError> {
    check_strands(u.strands(), v.strands())?;
    Ok(normal_form(u, rules, budget)? == normal_form(v, rules, budget)?)
}

/// [`equal_words`] for Artin words; both are converted to band words first.
pub fn equal_artin_words(
    u: &ArtinWord,
    v: &ArtinWord,
    rules: &RuleSet,
    budget: usize,
) -> Result<bool, RewriteError> {
    equal_words(&artin_to_band(u), &artin_to_band(v), rules, budget)
}

/// The split of a normal form into pure parts `f_n … f_2` — each `f_j` a
/// freely reduced word over `S_j` — followed by the permutation tail
/// `σ(i_n,n) … σ(i_2,2)`, where `σ(i,j)` abbreviates the ascending run
/// `σ_i^{-1} σ_{i+1}^{-1} … σ_{j-1}^{-1}` and `i_j = j` encodes an empty
/// segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormDecomposition {
    strands: StrandCount,
    parts: Vec<BandWord>, // parts[j - 2] = f_j
    tail: Vec<usize>,     // tail[j - 2] = i_j
}

impl NormalFormDecomposition {
    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    /// The pure part `f_j`, for 2 ≤ j ≤ strands.
    pub fn pure_part(&self, j: usize) -> &BandWord {
        assert!(
            (2..=self.strands.get()).contains(&j),
            "level out of range: {j}"
        );
        &self.parts[j - 2]
    }

    /// The tail index `i_j` (with `i_j = j` meaning the segment is empty),
    /// for 2 ≤ j ≤ strands.
    pub fn tail_index(&self, j: usize) -> usize {
        assert!(
            (2..=self.strands.get()).contains(&j),
            "level out of range: {j}"
        );
        self.tail[j - 2]
    }

    /// The tuple `(i_n, …, i_2)`.
    pub fn tail_indices(&self) -> Vec<usize> {
        (2..=self.strands.get()).rev().map(|j| self.tail[j - 2]).collect()
    }

    /// True iff every tail segment is empty, i.e. the word is pure.
    pub fn tail_is_empty(&self) -> bool {
        self.tail.iter().enumerate().all(|(k, &i)| i == k + 2)
    }

    /// Rebuilds the exact word this decomposition was read from.
    pub fn reassemble(&self) -> BandWord {
        let n = self.strands.get();
        let mut letters = Vec::new();
        for j in (2..=n).rev() {
            letters.extend_from_slice(self.parts[j - 2].letters());
        }
        for j in (2..=n).rev() {
            letters.extend((self.tail[j - 2]..j).map(BandLetter::SigmaInv));
        }
        BandWord::from_validated(self.strands, letters)
    }

    /// JSON rendering with levels n…2 always present:
    /// `{"strands": n, "pure_parts": {"<j>": [tokens]}, "tail": {"<j>": i_j}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.strands.get();
        let mut pure = serde_json::Map::new();
        let mut tail = serde_json::Map::new();
        for j in (2..=n).rev() {
            let tokens: Vec<serde_json::Value> = self.parts[j - 2]
                .letters()
                .iter()
                .map(|l| serde_json::Value::String(l.to_string()))
                .collect();
            pure.insert(j.to_string(), serde_json::Value::Array(tokens));
            tail.insert(j.to_string(), serde_json::Value::from(self.tail[j - 2]));
        }
        serde_json::json!({
            "strands": n,
            "pure_parts": pure,
            "tail": tail,
        })
    }
}

fn shape(position: usize, reason: &'static str) -> RewriteError {
    RewriteError::Shape { position, reason }
}

/// Splits an irreducible word into its pure parts and permutation tail.
/// Errors with the offending position if the word is not of that shape;
/// this never happens for outputs of [`normal_form`] under the full rule
/// set.
pub fn decompose_normal_form(nf: &BandWord) -> Result<NormalFormDecomposition, RewriteError> {
    let n = nf.strands().get();
    let letters = nf.letters();
    let mut parts: Vec<Vec<BandLetter>> = vec![Vec::new(); n - 1];
    let mut tail: Vec<usize> = (2..=n).collect();

    let mut pos = 0;
    let mut level = n;
    while pos < letters.len() {
        let BandLetter::Band { j, .. } = letters[pos] else {
            break;
        };
        if j > level {
            return Err(shape(pos, "pure-part level increases"));
        }
        if pos > 0 && letters[pos - 1].cancels(letters[pos]) {
            return Err(shape(pos - 1, "pure part is not freely reduced"));
        }
        parts[j - 2].push(letters[pos]);
        level = j;
        pos += 1;
    }

    // The tail is a sequence of maximal ascending σ^{-1} runs; the run
    // ending at σ_{j-1} is the segment for level j, and the run ends must
    // strictly descend.
    let mut prev_end: Option<usize> = None;
    while pos < letters.len() {
        let run_start_pos = pos;
        let BandLetter::SigmaInv(start) = letters[pos] else {
            return Err(shape(pos, "band letter after the permutation tail began"));
        };
        let mut end = start;
        pos += 1;
        while pos < letters.len() {
            match letters[pos] {
                BandLetter::SigmaInv(next) if next == end + 1 => {
                    end = next;
                    pos += 1;
                }
                _ => break,
            }
        }
        if prev_end.is_some_and(|pe| end >= pe) {
            return Err(shape(run_start_pos, "tail run ends must strictly descend"));
        }
        prev_end = Some(end);
        tail[end + 1 - 2] = start;
    }

    let parts = parts
        .into_iter()
        .map(|ls| BandWord::from_validated(nf.strands(), ls))
        .collect();
    Ok(NormalFormDecomposition {
        strands: nf.strands(),
        parts,
        tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order;
    use std::cmp::Ordering;

    fn band(text: &str, n: usize) -> BandWord {
        BandWord::parse(text, StrandCount::new(n).unwrap()).unwrap()
    }

    fn artin(text: &str, n: usize) -> ArtinWord {
        ArtinWord::parse(text, StrandCount::new(n).unwrap()).unwrap()
    }

    fn nf(text: &str, n: usize, rules: &RuleSet) -> BandWord {
        normal_form(&band(text, n), rules, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn fixed_reductions() {
        let r2 = RuleSet::instantiate(StrandCount::new(2).unwrap());
        let r3 = RuleSet::instantiate(StrandCount::new(3).unwrap());
        assert_eq!(nf("S1 S1", 2, &r2), band("B1.2", 2));
        assert_eq!(nf("b1.2 S1 S1", 2, &r2), band("", 2));
        assert_eq!(nf("S1 b1.2 S1", 2, &r2), band("", 2));
        assert_eq!(nf("B1.2 b2.3", 3, &r3), band("b1.3 b2.3 B1.3 B1.2", 3));
    }

    #[test]
    fn two_strand_power_closed_form() {
        let n = StrandCount::new(2).unwrap();
        let rules = RuleSet::instantiate(n);
        for k in -6i64..=6 {
            let letters: Vec<crate::word::ArtinLetter> = (0..k.unsigned_abs())
                .map(|_| crate::word::ArtinLetter::new(1, if k >= 0 { crate::word::Sign::Plus } else { crate::word::Sign::Minus }))
                .collect();
            let w = artin_to_band(&ArtinWord::new(n, letters).unwrap());
            let got = normal_form(&w, &rules, DEFAULT_BUDGET).unwrap();
            let expected = match k {
                k if k >= 0 && k % 2 == 0 => {
                    band(&"b1.2 ".repeat(k as usize / 2), 2)
                }
                k if k > 0 => band(&format!("{}S1", "b1.2 ".repeat((k as usize + 1) / 2)), 2),
                k if k % 2 == 0 => band(&"B1.2 ".repeat(k.unsigned_abs() as usize / 2), 2),
                k => band(&format!("{}S1", "B1.2 ".repeat((k.unsigned_abs() as usize - 1) / 2)), 2),
            };
            assert_eq!(got, expected, "σ₁^{k}");
        }
    }

    #[test]
    fn equality_decisions() {
        let n = StrandCount::new(3).unwrap();
        let rules = RuleSet::instantiate(n);
        let u = artin("s1 s2 s1", 3);
        let v = artin("s2 s1 s2", 3);
        assert!(equal_artin_words(&u, &v, &rules, DEFAULT_BUDGET).unwrap());
        assert!(!equal_artin_words(&artin("s1", 3), &artin("s2", 3), &rules, DEFAULT_BUDGET).unwrap());
        // w · w^{-1} collapses to the identity
        for text in ["s1 s2 S1 s2 s2", "S2 S2 s1", "s1 s1 s2 S1 S1 S1"] {
            let w = artin(text, 3);
            let prod = artin_to_band(&w.concat(&w.inverse()).unwrap());
            assert_eq!(
                normal_form(&prod, &rules, DEFAULT_BUDGET).unwrap(),
                BandWord::identity(n),
                "{text}"
            );
        }
    }

    #[test]
    fn budget_is_respected() {
        let rules = RuleSet::instantiate(StrandCount::new(2).unwrap());
        let w = band("S1 S1", 2);
        match normal_form(&w, &rules, 0) {
            Err(RewriteError::BudgetExceeded { budget: 0, partial }) => assert_eq!(partial, w),
            other => panic!("expected budget error, got {other:?}"),
        }
        // one E16 step suffices
        assert_eq!(normal_form(&w, &rules, 1).unwrap(), band("B1.2", 2));
    }

    #[test]
    fn strategies_agree_on_fixed_words() {
        let n = StrandCount::new(4).unwrap();
        let rules = RuleSet::instantiate(n);
        for text in [
            "S3 b1.2 S1 S2 b2.4 S1",
            "B1.4 b2.3 b1.2 S2 S2 S1 S3",
            "S1 S2 S3 S1 S2 S1",
            "b3.4 B2.4 b1.3 S2 b1.2 S3 S1 S1",
        ] {
            let w = band(text, 4);
            let left = normal_form_with(&w, &rules, DEFAULT_BUDGET, Strategy::Leftmost).unwrap();
            let right = normal_form_with(&w, &rules, DEFAULT_BUDGET, Strategy::Rightmost).unwrap();
            assert_eq!(left, right, "{text}");
        }
    }

    #[test]
    fn every_trace_step_decreases() {
        let n = StrandCount::new(4).unwrap();
        let rules = RuleSet::instantiate(n);
        for text in ["S1 b1.2 S1", "B1.2 b2.3 b3.4 S2", "S2 S1 S2 S3 S2"] {
            let trace = reduction_trace(&band(text, 4), &rules, DEFAULT_BUDGET, Strategy::Leftmost)
                .unwrap();
            for pair in trace.windows(2) {
                assert_eq!(
                    order::compare(&pair[0], &pair[1]).unwrap(),
                    Ordering::Greater,
                    "{} -> {}",
                    pair[0].render(),
                    pair[1].render()
                );
            }
        }
    }

    #[test]
    fn decompose_fixed_examples() {
        // identity: everything empty
        let d = decompose_normal_form(&band("", 3)).unwrap();
        assert!(d.tail_is_empty());
        assert_eq!(d.tail_indices(), vec![3, 2]);
        assert!(d.pure_part(3).is_empty() && d.pure_part(2).is_empty());
        assert_eq!(d.reassemble(), band("", 3));

        let w = band("b1.3 b1.2 S1 S2 S1", 3);
        let d = decompose_normal_form(&w).unwrap();
        assert_eq!(d.pure_part(3), &band("b1.3", 3));
        assert_eq!(d.pure_part(2), &band("b1.2", 3));
        assert_eq!(d.tail_index(3), 1);
        assert_eq!(d.tail_index(2), 1);
        assert!(!d.tail_is_empty());
        assert_eq!(d.reassemble(), w);

        let d = decompose_normal_form(&band("B1.2", 2)).unwrap();
        assert_eq!(d.pure_part(2), &band("B1.2", 2));
        assert_eq!(d.tail_index(2), 2);
        assert!(d.tail_is_empty());
    }

    #[test]
    fn decompose_rejects_misshapen_words() {
        let cases: &[(&str, usize, usize)] = &[
            ("S1 b1.2", 2, 1),        // band letter after the tail began
            ("b1.2 b1.3", 3, 1),      // level increases
            ("b1.2 B1.2", 2, 0),      // not freely reduced
            ("S2 S1 S2", 3, 1),       // run ends 2, 2 do not descend
            ("S1 S3 S2", 4, 1),       // run ends 1, 3 do not descend
        ];
        for &(text, n, at) in cases {
            match decompose_normal_form(&band(text, n)) {
                Err(RewriteError::Shape { position, .. }) => {
                    assert_eq!(position, at, "{text}")
                }
                other => panic!("{text}: expected shape error, got {other:?}"),
            }
        }
    }

    #[test]
    fn decompose_json_schema() {
        let d = decompose_normal_form(&band("b1.3 b1.2 S1 S2 S1", 3)).unwrap();
        let v = d.to_json();
        assert_eq!(v["strands"], 3);
        assert_eq!(v["pure_parts"]["3"], serde_json::json!(["b1.3"]));
        assert_eq!(v["pure_parts"]["2"], serde_json::json!(["b1.2"]));
        assert_eq!(v["tail"]["3"], 1);
        assert_eq!(v["tail"]["2"], 1);
    }

    #[test]
    fn decompose_accepts_every_computed_normal_form() {
        let n = StrandCount::new(4).unwrap();
        let rules = RuleSet::instantiate(n);
        for text in [
            "s1 s2 s3 S2 S1",
            "S3 S3 S2 s1 s1 s1",
            "s2 s2 S3 s1 S2 s3 s1",
            "s1 S2 s3 s1 S2 s3",
        ] {
            let w = artin_to_band(&artin(text, 4));
            let f = normal_form(&w, &rules, DEFAULT_BUDGET).unwrap();
            let d = decompose_normal_form(&f).unwrap();
            assert_eq!(d.reassemble(), f, "{text}");
        }
    }

    /// σ(i,j) = σ_i^{-1} … σ_{j-1}^{-1} as a band word (empty when i = j).
    fn sigma_run(i: usize, j: usize, n: StrandCount) -> BandWord {
        BandWord::new(n, (i..j).map(BandLetter::SigmaInv).collect()).unwrap()
    }

    #[test]
    fn tail_segment_identities() {
        // σ(i,j)σ(k,j) = σ(k,j)σ(i-1,j-1) for k < i, and
        // σ(i,j)σ(k,j) = s_{i,k+1}^{-1} σ(k+1,j) σ(i,j-1) for i ≤ k < j:
        // both sides reduce to the same normal form.
        let n = StrandCount::new(4).unwrap();
        let rules = RuleSet::instantiate(n);
        for j in 2..=n.get() {
            for i in 1..=j {
                for k in 1..j {
                    let lhs = sigma_run(i, j, n).concat(&sigma_run(k, j, n)).unwrap();
                    let rhs = if k < i {
                        sigma_run(k, j, n)
                            .concat(&sigma_run(i - 1, j - 1, n))
                            .unwrap()
                    } else {
                        let head = BandWord::new(
                            n,
                            vec![BandLetter::band(i, k + 1, crate::word::Sign::Minus)],
                        )
                        .unwrap();
                        head.concat(&sigma_run(k + 1, j, n))
                            .unwrap()
                            .concat(&sigma_run(i, j - 1, n))
                            .unwrap()
                    };
                    assert!(
                        equal_words(&lhs, &rhs, &rules, DEFAULT_BUDGET).unwrap(),
                        "i={i} j={j} k={k}"
                    );
                }
            }
        }
    }
}
