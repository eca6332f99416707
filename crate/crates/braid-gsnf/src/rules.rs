//! The oriented Artin-Markov rewrite rules for a fixed strand count.
//!
//! Families E1-E6 move a `σ_k^{-1}` letter rightward past an `s_{i,j}^{δ}`
//! letter, E7-E13 swap band letters from different levels (conjugates
//! expanded), E14-E15 reorder σ runs, E16 turns `σ_i^{-2}` into
//! `s_{i,i+1}^{-1}`, and TRIV cancels adjacent mutually inverse band
//! letters. Every rule is oriented so its left side is strictly greater in
//! the inverse tower order.

use crate::order::compare_letters;
use crate::word::{check_strands, BandLetter, BandWord, Sign, StrandCount, WordError};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("conjugator contains the σ-letter `{0}`, which has no inverse in S")]
    SigmaInConjugator(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Which relation family a rule was instantiated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleFamily {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
    E8,
    E9,
    E10,
    E11,
    E12,
    E13,
    E14,
    E15,
    E16,
    Triv,
    /// Not part of the instantiated set: a consequence added by
    /// [`RuleSet::augmented`], used to exercise redundancy detection.
    Derived,
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RuleFamily::E1 => "E1",
            RuleFamily::E2 => "E2",
            RuleFamily::E3 => "E3",
            RuleFamily::E4 => "E4",
            RuleFamily::E5 => "E5",
            RuleFamily::E6 => "E6",
            RuleFamily::E7 => "E7",
            RuleFamily::E8 => "E8",
            RuleFamily::E9 => "E9",
            RuleFamily::E10 => "E10",
            RuleFamily::E11 => "E11",
            RuleFamily::E12 => "E12",
            RuleFamily::E13 => "E13",
            RuleFamily::E14 => "E14",
            RuleFamily::E15 => "E15",
            RuleFamily::E16 => "E16",
            RuleFamily::Triv => "TRIV",
            RuleFamily::Derived => "DERIVED",
        };
        f.write_str(name)
    }
}

/// One oriented semigroup relation `lhs -> rhs` with `lhs > rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    lhs: Vec<BandLetter>,
    rhs: Vec<BandLetter>,
    family: RuleFamily,
    indices: Vec<usize>,
    signs: Vec<Sign>,
}

impl RewriteRule {
    pub fn lhs(&self) -> &[BandLetter] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[BandLetter] {
        &self.rhs
    }

    pub fn family(&self) -> RuleFamily {
        self.family
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |ls: &[BandLetter]| {
            if ls.is_empty() {
                "1".to_string()
            } else {
                ls.iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        let idx = self
            .indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "{} -> {} # {}({})",
            side(&self.lhs),
            side(&self.rhs),
            self.family,
            idx
        )
    }
}

/// The full oriented rule set for one strand count, with a first-letter
/// match index (candidates ordered longest LHS first).
#[derive(Debug, Clone)]
pub struct RuleSet {
    strands: StrandCount,
    rules: Vec<RewriteRule>,
    index: HashMap<BandLetter, Vec<usize>>,
    max_lhs_len: usize,
}

/// `{a,b} = b^{-1} a b`, with adjacent inverse band-letter pairs cancelled.
///
/// The conjugator `b` must contain only `s`-letters: σ-letters have no
/// inverse in the band alphabet.
pub fn conjugate_expand(a: &BandWord, b: &BandWord) -> Result<BandWord, RuleError> {
    check_strands(a.strands(), b.strands())?;
    let letters = conjugate_letters(a.letters(), b.letters())?;
    Ok(BandWord::from_validated(a.strands(), letters))
}

fn conjugate_letters(
    a: &[BandLetter],
    b: &[BandLetter],
) -> Result<Vec<BandLetter>, RuleError> {
    let mut out = Vec::with_capacity(a.len() + 2 * b.len());
    for l in b.iter().rev() {
        let inv = l
            .inverse()
            .ok_or_else(|| RuleError::SigmaInConjugator(l.to_string()))?;
        push_cancel(&mut out, inv);
    }
    for &l in a {
        push_cancel(&mut out, l);
    }
    for &l in b {
        push_cancel(&mut out, l);
    }
    Ok(out)
}

fn push_cancel(out: &mut Vec<BandLetter>, l: BandLetter) {
    match out.last() {
        Some(&last) if last.cancels(l) => {
            out.pop();
        }
        _ => out.push(l),
    }
}

fn sig(k: usize) -> BandLetter {
    BandLetter::SigmaInv(k)
}

fn sp(i: usize, j: usize) -> BandLetter {
    BandLetter::band(i, j, Sign::Plus)
}

fn sm(i: usize, j: usize) -> BandLetter {
    BandLetter::band(i, j, Sign::Minus)
}

fn s(i: usize, j: usize, sign: Sign) -> BandLetter {
    BandLetter::band(i, j, sign)
}

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

impl RuleSet {
    /// Instantiates every Artin-Markov rule over valid index ranges for `n`
    /// strands, conjugates expanded, and checks each rule's orientation.
    pub fn instantiate(strands: StrandCount) -> RuleSet {
        let n = strands.get();
        let mut rules = Vec::new();
        let mut push = |family: RuleFamily,
                        indices: Vec<usize>,
                        signs: Vec<Sign>,
                        lhs: Vec<BandLetter>,
                        rhs: Vec<BandLetter>| {
            rules.push(RewriteRule {
                lhs,
                rhs,
                family,
                indices,
                signs,
            });
        };

        // E1: σ_k^{-1} s_{i,j}^δ -> s_{i,j}^δ σ_k^{-1}, k ∉ {i-1, i, j-1, j}.
        for k in 1..n {
            for i in 1..=n {
                for j in i + 1..=n {
                    if k == i - 1 || k == i || k == j - 1 || k == j {
                        continue;
                    }
                    for d in SIGNS {
                        push(
                            RuleFamily::E1,
                            vec![k, i, j],
                            vec![d],
                            vec![sig(k), s(i, j, d)],
                            vec![s(i, j, d), sig(k)],
                        );
                    }
                }
            }
        }
        // E2: σ_i^{-1} s_{i,i+1}^δ -> s_{i,i+1}^δ σ_i^{-1}.
        for i in 1..n {
            for d in SIGNS {
                push(
                    RuleFamily::E2,
                    vec![i],
                    vec![d],
                    vec![sig(i), s(i, i + 1, d)],
                    vec![s(i, i + 1, d), sig(i)],
                );
            }
        }
        // E3: σ_{i-1}^{-1} s_{i,j}^δ -> s_{i-1,j}^δ σ_{i-1}^{-1}, i ≥ 2.
        for i in 2..=n {
            for j in i + 1..=n {
                for d in SIGNS {
                    push(
                        RuleFamily::E3,
                        vec![i, j],
                        vec![d],
                        vec![sig(i - 1), s(i, j, d)],
                        vec![s(i - 1, j, d), sig(i - 1)],
                    );
                }
            }
        }
        // E4: σ_i^{-1} s_{i,j}^δ -> s_{i,j} s_{i+1,j}^δ s_{i,j}^{-1} σ_i^{-1}, j > i+1.
        // The conjugator is written over s_{i,j}^{-1} rather than s_{i,i+1}: the
        // two words differ by one E7 step, and only the former is irreducible.
        for i in 1..n {
            for j in i + 2..=n {
                for d in SIGNS {
                    push(
                        RuleFamily::E4,
                        vec![i, j],
                        vec![d],
                        vec![sig(i), s(i, j, d)],
                        vec![sp(i, j), s(i + 1, j, d), sm(i, j), sig(i)],
                    );
                }
            }
        }
        // E5: σ_{j-1}^{-1} s_{i,j}^δ -> s_{i,j-1}^δ σ_{j-1}^{-1}, j-1 > i.
        for i in 1..n {
            for j in i + 2..=n {
                for d in SIGNS {
                    push(
                        RuleFamily::E5,
                        vec![i, j],
                        vec![d],
                        vec![sig(j - 1), s(i, j, d)],
                        vec![s(i, j - 1, d), sig(j - 1)],
                    );
                }
            }
        }
        // E6: σ_j^{-1} s_{i,j}^δ -> s_{j,j+1}^{-1} s_{i,j+1}^δ s_{j,j+1} σ_j^{-1}, j ≤ n-1.
        for i in 1..n {
            for j in i + 1..n {
                for d in SIGNS {
                    push(
                        RuleFamily::E6,
                        vec![i, j],
                        vec![d],
                        vec![sig(j), s(i, j, d)],
                        vec![sm(j, j + 1), s(i, j + 1, d), sp(j, j + 1), sig(j)],
                    );
                }
            }
        }
        // E7-E10 over j < k < l; E11-E12 over i < j < k < l; conjugates expanded.
        for j in 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    for e in SIGNS {
                        // E7: s_{j,k}^{-1} s_{k,l}^ε -> {s_{k,l}^ε, s_{j,l}^{-1}} s_{j,k}^{-1}
                        push(
                            RuleFamily::E7,
                            vec![j, k, l],
                            vec![e],
                            vec![sm(j, k), s(k, l, e)],
                            vec![sp(j, l), s(k, l, e), sm(j, l), sm(j, k)],
                        );
                        // E8: s_{j,k} s_{k,l}^ε -> {s_{k,l}^ε, s_{j,l} s_{k,l}} s_{j,k}
                        push(
                            RuleFamily::E8,
                            vec![j, k, l],
                            vec![e],
                            vec![sp(j, k), s(k, l, e)],
                            vec![
                                sm(k, l),
                                sm(j, l),
                                s(k, l, e),
                                sp(j, l),
                                sp(k, l),
                                sp(j, k),
                            ],
                        );
                        // E9: s_{j,k}^{-1} s_{j,l}^ε -> {s_{j,l}^ε, s_{k,l}^{-1} s_{j,l}^{-1}} s_{j,k}^{-1}
                        push(
                            RuleFamily::E9,
                            vec![j, k, l],
                            vec![e],
                            vec![sm(j, k), s(j, l, e)],
                            vec![
                                sp(j, l),
                                sp(k, l),
                                s(j, l, e),
                                sm(k, l),
                                sm(j, l),
                                sm(j, k),
                            ],
                        );
                        // E10: s_{j,k} s_{j,l}^ε -> {s_{j,l}^ε, s_{k,l}} s_{j,k}
                        push(
                            RuleFamily::E10,
                            vec![j, k, l],
                            vec![e],
                            vec![sp(j, k), s(j, l, e)],
                            vec![sm(k, l), s(j, l, e), sp(k, l), sp(j, k)],
                        );
                    }
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        for e in SIGNS {
                            // E11: s_{i,k}^{-1} s_{j,l}^ε
                            //      -> {s_{j,l}^ε, s_{k,l} s_{i,l} s_{k,l}^{-1} s_{i,l}^{-1}} s_{i,k}^{-1}
                            push(
                                RuleFamily::E11,
                                vec![i, j, k, l],
                                vec![e],
                                vec![sm(i, k), s(j, l, e)],
                                vec![
                                    sp(i, l),
                                    sp(k, l),
                                    sm(i, l),
                                    sm(k, l),
                                    s(j, l, e),
                                    sp(k, l),
                                    sp(i, l),
                                    sm(k, l),
                                    sm(i, l),
                                    sm(i, k),
                                ],
                            );
                            // E12: s_{i,k} s_{j,l}^ε
                            //      -> {s_{j,l}^ε, s_{i,l}^{-1} s_{k,l}^{-1} s_{i,l} s_{k,l}} s_{i,k}
                            push(
                                RuleFamily::E12,
                                vec![i, j, k, l],
                                vec![e],
                                vec![sp(i, k), s(j, l, e)],
                                vec![
                                    sm(k, l),
                                    sm(i, l),
                                    sp(k, l),
                                    sp(i, l),
                                    s(j, l, e),
                                    sm(i, l),
                                    sm(k, l),
                                    sp(i, l),
                                    sp(k, l),
                                    sp(i, k),
                                ],
                            );
                        }
                    }
                }
            }
        }
        // E13: s_{i,k}^δ s_{j,l}^ε -> s_{j,l}^ε s_{i,k}^δ, j < i < k < l or i < k < j < l.
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        for de in SIGNS {
                            for e in SIGNS {
                                // nested: (i,k) = (b,c), (j,l) = (a,d)
                                push(
                                    RuleFamily::E13,
                                    vec![b, c, a, d],
                                    vec![de, e],
                                    vec![s(b, c, de), s(a, d, e)],
                                    vec![s(a, d, e), s(b, c, de)],
                                );
                                // disjoint: (i,k) = (a,b), (j,l) = (c,d)
                                push(
                                    RuleFamily::E13,
                                    vec![a, b, c, d],
                                    vec![de, e],
                                    vec![s(a, b, de), s(c, d, e)],
                                    vec![s(c, d, e), s(a, b, de)],
                                );
                            }
                        }
                    }
                }
            }
        }
        // E14: σ_j^{-1} σ_k^{-1} -> σ_k^{-1} σ_j^{-1}, j < k-1.
        for j in 1..n {
            for k in j + 2..n {
                push(
                    RuleFamily::E14,
                    vec![j, k],
                    vec![],
                    vec![sig(j), sig(k)],
                    vec![sig(k), sig(j)],
                );
            }
        }
        // E15: σ_j^{-1} σ_k^{-1} σ_{k+1}^{-1} … σ_j^{-1}
        //      -> σ_k^{-1} … σ_j^{-1} σ_{j-1}^{-1}, k < j.
        for j in 2..n {
            for k in 1..j {
                let mut lhs = vec![sig(j)];
                lhs.extend((k..=j).map(sig));
                let mut rhs: Vec<BandLetter> = (k..=j).map(sig).collect();
                rhs.push(sig(j - 1));
                push(RuleFamily::E15, vec![j, k], vec![], lhs, rhs);
            }
        }
        // E16: σ_i^{-1} σ_i^{-1} -> s_{i,i+1}^{-1}.
        for i in 1..n {
            push(
                RuleFamily::E16,
                vec![i],
                vec![],
                vec![sig(i), sig(i)],
                vec![sm(i, i + 1)],
            );
        }
        // TRIV: s_{i,j}^{±1} s_{i,j}^{∓1} -> 1.
        for i in 1..=n {
            for j in i + 1..=n {
                for d in SIGNS {
                    push(
                        RuleFamily::Triv,
                        vec![i, j],
                        vec![d],
                        vec![s(i, j, d), s(i, j, d.flip())],
                        vec![],
                    );
                }
            }
        }

        for r in &rules {
            assert_eq!(
                compare_letters(n, &r.lhs, &r.rhs),
                Ordering::Greater,
                "rule is not oriented: {r}"
            );
        }
        RuleSet::from_rules(strands, rules)
    }

    pub(crate) fn from_rules(strands: StrandCount, rules: Vec<RewriteRule>) -> RuleSet {
        let mut index: HashMap<BandLetter, Vec<usize>> = HashMap::new();
        for (id, r) in rules.iter().enumerate() {
            index.entry(r.lhs[0]).or_default().push(id);
        }
        for ids in index.values_mut() {
            ids.sort_by_key(|&id| (usize::MAX - rules[id].lhs.len(), id));
        }
        let max_lhs_len = rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        RuleSet {
            strands,
            rules,
            index,
            max_lhs_len,
        }
    }

    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn max_lhs_len(&self) -> usize {
        self.max_lhs_len
    }

    /// The rule whose LHS matches `word` at `pos`, longest match first.
    /// At most one rule can match at a position (no LHS is a prefix of
    /// another), so "first" is only about scan order.
    pub fn match_at(&self, word: &[BandLetter], pos: usize) -> Option<usize> {
        let candidates = self.index.get(&word[pos])?;
        candidates.iter().copied().find(|&id| {
            let lhs = &self.rules[id].lhs;
            word[pos..].len() >= lhs.len() && word[pos..pos + lhs.len()] == lhs[..]
        })
    }

    /// The earliest-starting redex at or after `from`.
    pub fn leftmost_match(&self, word: &[BandLetter], from: usize) -> Option<(usize, usize)> {
        (from..word.len()).find_map(|pos| self.match_at(word, pos).map(|id| (pos, id)))
    }

    /// Clone of this set extended by one oriented `lhs -> rhs` consequence,
    /// tagged [`RuleFamily::Derived`]. Panics if the words disagree on
    /// strand count or the rule is not a strict descent — an augmented set
    /// must still be a valid rewriting system, just possibly a redundant
    /// one.
    pub fn augmented(&self, lhs: &BandWord, rhs: &BandWord) -> RuleSet {
        assert_eq!(lhs.strands(), self.strands, "strand mismatch");
        assert_eq!(rhs.strands(), self.strands, "strand mismatch");
        assert_eq!(
            compare_letters(self.strands.get(), lhs.letters(), rhs.letters()),
            Ordering::Greater,
            "augmented rule is not oriented"
        );
        let mut rules = self.rules.clone();
        rules.push(RewriteRule {
            lhs: lhs.letters().to_vec(),
            rhs: rhs.letters().to_vec(),
            family: RuleFamily::Derived,
            indices: Vec::new(),
            signs: Vec::new(),
        });
        RuleSet::from_rules(self.strands, rules)
    }

    /// Clone of this set with the sign of one RHS letter flipped, for
    /// robustness testing. Returns `None` if the letter is a σ (no sign)
    /// or the positions are out of range. Skips orientation validation.
    pub fn with_flipped_rhs_sign(&self, rule: usize, pos: usize) -> Option<RuleSet> {
        let mut rules = self.rules.clone();
        let letter = rules.get_mut(rule)?.rhs.get_mut(pos)?;
        *letter = letter.inverse()?;
        Some(RuleSet::from_rules(self.strands, rules))
    }
}

/// The rule family whose LHS begins with `a·b` (for E15, whose LHS extends
/// `a·b`), or `None` if no LHS starts this way. The letters must be valid
/// for a common strand count.
pub fn classify_pair(a: BandLetter, b: BandLetter) -> Option<RuleFamily> {
    match (a, b) {
        (BandLetter::SigmaInv(q), BandLetter::SigmaInv(r)) => {
            if q == r {
                Some(RuleFamily::E16)
            } else if r > q + 1 {
                Some(RuleFamily::E14)
            } else if r < q {
                Some(RuleFamily::E15)
            } else {
                // ascending adjacent pair σ_q^{-1} σ_{q+1}^{-1}: irreducible
                None
            }
        }
        (BandLetter::SigmaInv(k), BandLetter::Band { i, j, .. }) => Some(if k == i - 1 {
            RuleFamily::E3
        } else if k == i {
            if j == i + 1 {
                RuleFamily::E2
            } else {
                RuleFamily::E4
            }
        } else if k == j - 1 {
            RuleFamily::E5
        } else if k == j {
            RuleFamily::E6
        } else {
            RuleFamily::E1
        }),
        (BandLetter::Band { .. }, BandLetter::SigmaInv(_)) => None,
        (
            BandLetter::Band {
                i: a1,
                j: k1,
                sign: d,
            },
            BandLetter::Band {
                i: b1, j: l1, ..
            },
        ) => {
            if k1 == l1 {
                return a.cancels(b).then_some(RuleFamily::Triv);
            }
            if k1 > l1 {
                // descending levels S_l then S_k, k < l: irreducible
                return None;
            }
            Some(if b1 == k1 {
                match d {
                    Sign::Minus => RuleFamily::E7,
                    Sign::Plus => RuleFamily::E8,
                }
            } else if b1 == a1 {
                match d {
                    Sign::Minus => RuleFamily::E9,
                    Sign::Plus => RuleFamily::E10,
                }
            } else if a1 < b1 && b1 < k1 {
                match d {
                    Sign::Minus => RuleFamily::E11,
                    Sign::Plus => RuleFamily::E12,
                }
            } else {
                // b1 < a1 (nested) or b1 > k1 (disjoint)
                RuleFamily::E13
            })
        }
    }
}
