//! Mechanical verification that a rule set is a minimal Gröbner-Shirshov
//! basis.
//!
//! Verification enumerates every intersection overlap between two rule
//! LHSs (including a rule with itself), reduces both one-step reducts of
//! the overlap word, and checks that they meet in the same normal form.
//! By the composition-diamond lemma this certifies confluence, hence that
//! irreducible words are canonical representatives. Minimality is checked
//! separately: no rule's LHS or RHS may be reducible by the other rules.

use std::fmt;

use thiserror::Error;

use crate::rewrite::{normal_form_with, Strategy, DEFAULT_BUDGET};
use crate::rules::{RewriteRule, RuleSet};
use crate::word::{BandLetter, BandWord, StrandCount};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    /// One rule's LHS occurs inside another's. Intersection-only analysis
    /// would be incomplete for such a set, and the instantiated rules never
    /// contain one.
    #[error("inclusion overlap: LHS of rule {inner} occurs in LHS of rule {outer} at {position}")]
    Inclusion {
        outer: usize,
        inner: usize,
        position: usize,
    },
}

/// An intersection overlap `w = LHS_left·b = a·LHS_right`: the last
/// `overlap` letters of the left LHS are the first `overlap` letters of
/// the right LHS, and `a`, `b` are both nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    left_id: usize,
    right_id: usize,
    left_rule: RewriteRule,
    right_rule: RewriteRule,
    overlap: usize,
    w: BandWord,
    a: BandWord,
    b: BandWord,
}

impl Ambiguity {
    pub fn left_id(&self) -> usize {
        self.left_id
    }

    pub fn right_id(&self) -> usize {
        self.right_id
    }

    pub fn left_rule(&self) -> &RewriteRule {
        &self.left_rule
    }

    pub fn right_rule(&self) -> &RewriteRule {
        &self.right_rule
    }

    /// Number of shared letters.
    pub fn overlap(&self) -> usize {
        self.overlap
    }

    /// The overlap word.
    pub fn word(&self) -> &BandWord {
        &self.w
    }

    /// The prefix with `w = a·LHS_right`.
    pub fn prefix(&self) -> &BandWord {
        &self.a
    }

    /// The suffix with `w = LHS_left·b`.
    pub fn suffix(&self) -> &BandWord {
        &self.b
    }

    /// `RHS_left·b` — the result of rewriting `w` with the left rule.
    pub fn left_reduct(&self) -> BandWord {
        let mut letters = self.left_rule.rhs().to_vec();
        letters.extend_from_slice(self.b.letters());
        BandWord::from_validated(self.w.strands(), letters)
    }

    /// `a·RHS_right` — the result of rewriting `w` with the right rule.
    pub fn right_reduct(&self) -> BandWord {
        let mut letters = self.a.letters().to_vec();
        letters.extend_from_slice(self.right_rule.rhs());
        BandWord::from_validated(self.w.strands(), letters)
    }
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}#{} / {}#{} overlap {}: w = {}",
            self.left_rule.family(),
            self.left_id,
            self.right_rule.family(),
            self.right_id,
            self.overlap,
            self.w.render()
        )
    }
}

/// Every intersection overlap between ordered rule pairs (self-overlaps
/// included), in ascending `(left_id, right_id, overlap)` order. Inclusion
/// overlaps are a hard error.
pub fn enumerate_ambiguities(rules: &RuleSet) -> Result<Vec<Ambiguity>, VerifyError> {
    let list = rules.rules();
    for (oid, outer) in list.iter().enumerate() {
        for (iid, inner) in list.iter().enumerate() {
            if oid == iid {
                continue;
            }
            if let Some(position) = find_factor(outer.lhs(), inner.lhs()) {
                return Err(VerifyError::Inclusion {
                    outer: oid,
                    inner: iid,
                    position,
                });
            }
        }
    }

    let strands = rules.strands();
    let mut out = Vec::new();
    for (left_id, f) in list.iter().enumerate() {
        for (right_id, g) in list.iter().enumerate() {
            let fl = f.lhs();
            let gl = g.lhs();
            for overlap in 1..fl.len().min(gl.len()) {
                if fl[fl.len() - overlap..] != gl[..overlap] {
                    continue;
                }
                let mut w = fl.to_vec();
                w.extend_from_slice(&gl[overlap..]);
                let a = fl[..fl.len() - overlap].to_vec();
                let b = gl[overlap..].to_vec();
                out.push(Ambiguity {
                    left_id,
                    right_id,
                    left_rule: f.clone(),
                    right_rule: g.clone(),
                    overlap,
                    w: BandWord::from_validated(strands, w),
                    a: BandWord::from_validated(strands, a),
                    b: BandWord::from_validated(strands, b),
                });
            }
        }
    }
    Ok(out)
}

fn find_factor(hay: &[BandLetter], needle: &[BandLetter]) -> Option<usize> {
    if needle.is_empty() || needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&p| hay[p..p + needle.len()] == *needle)
}

/// Why an ambiguity failed to resolve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// The two reducts have distinct normal forms: the composition is
    /// nontrivial and the set is not a basis.
    Distinct { left_nf: BandWord, right_nf: BandWord },
    /// A reduct did not reach a normal form within the budget.
    Budget { budget: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Distinct { left_nf, right_nf } => write!(
                f,
                "distinct normal forms: {} vs {}",
                left_nf.render(),
                right_nf.render()
            ),
            Failure::Budget { budget } => write!(f, "budget {budget} exceeded"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    /// Both reducts reduce to this common normal form.
    Trivial(BandWord),
    Failure(Failure),
}

/// Reduces both one-step reducts of the overlap word and compares them
/// letterwise. Budget exhaustion counts as a failure, not an error.
///
/// Any common reduct witnesses joinability, so the selection policy is
/// free; this uses the default ([`Strategy::Rightmost`]), whose traces on
/// the hardest overlaps run a few hundred steps where leftmost needs
/// millions.
pub fn resolve_ambiguity(amb: &Ambiguity, rules: &RuleSet, budget: usize) -> Resolution {
    let left = normal_form_with(&amb.left_reduct(), rules, budget, Strategy::Rightmost);
    let right = normal_form_with(&amb.right_reduct(), rules, budget, Strategy::Rightmost);
    match (left, right) {
        (Ok(l), Ok(r)) if l == r => Resolution::Trivial(l),
        (Ok(l), Ok(r)) => Resolution::Failure(Failure::Distinct {
            left_nf: l,
            right_nf: r,
        }),
        _ => Resolution::Failure(Failure::Budget { budget }),
    }
}

/// A way in which a rule set fails to be minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityViolation {
    /// `rule`'s LHS contains `by`'s LHS as a factor, so `rule` is
    /// redundant: its LHS is already reducible without it.
    RedundantLhs { rule: usize, by: usize, position: usize },
    /// `rule`'s RHS is reducible by `by`, so `rule` does not rewrite to an
    /// irreducible word in one step.
    ReducibleRhs { rule: usize, by: usize, position: usize },
}

impl fmt::Display for MinimalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinimalityViolation::RedundantLhs { rule, by, position } => {
                write!(f, "LHS of rule {rule} reducible by rule {by} at {position}")
            }
            MinimalityViolation::ReducibleRhs { rule, by, position } => {
                write!(f, "RHS of rule {rule} reducible by rule {by} at {position}")
            }
        }
    }
}

/// Checks that each rule's LHS contains no other rule's LHS as a factor
/// and that each rule's RHS is irreducible by the other rules.
pub fn check_minimality(rules: &RuleSet) -> Vec<MinimalityViolation> {
    let list = rules.rules();
    let mut out = Vec::new();
    for (rid, r) in list.iter().enumerate() {
        for (oid, other) in list.iter().enumerate() {
            if rid == oid {
                continue;
            }
            if let Some(position) = find_factor(r.lhs(), other.lhs()) {
                out.push(MinimalityViolation::RedundantLhs {
                    rule: rid,
                    by: oid,
                    position,
                });
            }
            if let Some(position) = find_factor(r.rhs(), other.lhs()) {
                out.push(MinimalityViolation::ReducibleRhs {
                    rule: rid,
                    by: oid,
                    position,
                });
            }
        }
    }
    out
}

/// The full outcome of verifying one rule set.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    strands: usize,
    rule_count: usize,
    ambiguity_count: usize,
    failures: Vec<(Ambiguity, Failure)>,
    minimality_violations: Vec<MinimalityViolation>,
}

impl VerificationReport {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn rule_count(&self) -> usize {
        self.rule_count
    }

    pub fn ambiguity_count(&self) -> usize {
        self.ambiguity_count
    }

    pub fn failures(&self) -> &[(Ambiguity, Failure)] {
        &self.failures
    }

    pub fn minimality_violations(&self) -> &[MinimalityViolation] {
        &self.minimality_violations
    }

    /// True iff there are no unresolved ambiguities and no minimality
    /// violations.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.minimality_violations.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let failures: Vec<serde_json::Value> = self
            .failures
            .iter()
            .map(|(amb, failure)| {
                serde_json::json!({
                    "left_rule": amb.left_id(),
                    "right_rule": amb.right_id(),
                    "overlap": amb.overlap(),
                    "word": amb.word().render(),
                    "failure": failure.to_string(),
                })
            })
            .collect();
        let violations: Vec<serde_json::Value> = self
            .minimality_violations
            .iter()
            .map(|v| {
                let (kind, rule, by, position) = match *v {
                    MinimalityViolation::RedundantLhs { rule, by, position } => {
                        ("redundant_lhs", rule, by, position)
                    }
                    MinimalityViolation::ReducibleRhs { rule, by, position } => {
                        ("reducible_rhs", rule, by, position)
                    }
                };
                serde_json::json!({
                    "kind": kind,
                    "rule": rule,
                    "by": by,
                    "position": position,
                })
            })
            .collect();
        serde_json::json!({
            "strands": self.strands,
            "rule_count": self.rule_count,
            "ambiguity_count": self.ambiguity_count,
            "failures": failures,
            "minimality_violations": violations,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "strands:               {}", self.strands)?;
        writeln!(f, "rules:                 {}", self.rule_count)?;
        writeln!(f, "ambiguities:           {}", self.ambiguity_count)?;
        writeln!(f, "unresolved:            {}", self.failures.len())?;
        writeln!(f, "minimality violations: {}", self.minimality_violations.len())?;
        for (amb, failure) in &self.failures {
            writeln!(f, "  FAIL {amb}: {failure}")?;
        }
        for v in &self.minimality_violations {
            writeln!(f, "  FAIL {v}")?;
        }
        write!(
            f,
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Verifies an arbitrary rule set: resolves every ambiguity and checks
/// minimality. The report is deterministic — failures follow enumeration
/// order, which is ascending `(left_id, right_id, overlap)`.
pub fn verify_rule_set(rules: &RuleSet, budget: usize) -> Result<VerificationReport, VerifyError> {
    let ambiguities = enumerate_ambiguities(rules)?;
    let mut failures = Vec::new();
    for amb in &ambiguities {
        if let Resolution::Failure(failure) = resolve_ambiguity(amb, rules, budget) {
            failures.push((amb.clone(), failure));
        }
    }
    Ok(VerificationReport {
        strands: rules.strands().get(),
        rule_count: rules.len(),
        ambiguity_count: ambiguities.len(),
        failures,
        minimality_violations: check_minimality(rules),
    })
}

/// Verifies the instantiated rule set for `n` strands with the default
/// budget.
pub fn verify_basis(n: StrandCount) -> VerificationReport {
    let rules = RuleSet::instantiate(n);
    verify_rule_set(&rules, DEFAULT_BUDGET)
        .expect("instantiated rule sets never contain inclusion overlaps")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::oracle_equal;
    use crate::rules::RuleFamily;
    use crate::word::band_to_artin;

    fn strands(n: usize) -> StrandCount {
        StrandCount::new(n).unwrap()
    }

    fn band(text: &str, n: usize) -> BandWord {
        BandWord::parse(text, strands(n)).unwrap()
    }

    #[test]
    fn e16_self_overlap_resolves() {
        let rules = RuleSet::instantiate(strands(2));
        let ambs = enumerate_ambiguities(&rules).unwrap();
        let w = band("S1 S1 S1", 2);
        let amb = ambs
            .iter()
            .find(|a| *a.word() == w)
            .expect("the σ₁³ overlap must be enumerated");
        assert_eq!(amb.left_rule().family(), RuleFamily::E16);
        assert_eq!(amb.right_rule().family(), RuleFamily::E16);
        assert_eq!(amb.left_id(), amb.right_id());
        assert_eq!(amb.overlap(), 1);
        match resolve_ambiguity(amb, &rules, DEFAULT_BUDGET) {
            Resolution::Trivial(common) => assert_eq!(common, band("B1.2 S1", 2)),
            other => panic!("expected trivial resolution, got {other:?}"),
        }
    }

    #[test]
    fn small_bases_verify() {
        for n in 2..=3 {
            let report = verify_basis(strands(n));
            assert!(report.passed(), "n={n}:\n{report}");
            assert!(report.ambiguity_count() > 0);
            assert_eq!(report.rule_count(), RuleSet::instantiate(strands(n)).len());
        }
    }

    #[test]
    fn reducts_are_oracle_equal_before_reduction() {
        let rules = RuleSet::instantiate(strands(3));
        for amb in enumerate_ambiguities(&rules).unwrap() {
            let w = band_to_artin(amb.word());
            let l = band_to_artin(&amb.left_reduct());
            let r = band_to_artin(&amb.right_reduct());
            assert!(oracle_equal(&w, &l).unwrap(), "{amb}");
            assert!(oracle_equal(&l, &r).unwrap(), "{amb}");
        }
    }

    #[test]
    fn corrupted_rule_is_caught() {
        let rules = RuleSet::instantiate(strands(3));
        let e7 = rules
            .rules()
            .iter()
            .position(|r| r.family() == RuleFamily::E7)
            .unwrap();
        let corrupted = rules.with_flipped_rhs_sign(e7, 0).unwrap();
        // the corrupted rule is unsound under the oracle …
        let bad = &corrupted.rules()[e7];
        let lhs = BandWord::from_validated(strands(3), bad.lhs().to_vec());
        let rhs = BandWord::from_validated(strands(3), bad.rhs().to_vec());
        assert!(!oracle_equal(&band_to_artin(&lhs), &band_to_artin(&rhs)).unwrap());
        // … and verification reports at least one unresolved ambiguity
        let report = verify_rule_set(&corrupted, DEFAULT_BUDGET).unwrap();
        assert!(!report.failures().is_empty());
    }

    #[test]
    fn augmented_consequence_is_redundant() {
        let rules = RuleSet::instantiate(strands(3));
        // σ(1,3)σ(1,3) = s_{1,2}^{-1}·σ(2,3)·σ(1,2) is a consequence of the
        // base set; adding it as a rule must be flagged, because its LHS
        // contains the σ₂^{-1}σ₁^{-1}σ₂^{-1} LHS as a factor.
        let lhs = band("S1 S2 S1 S2", 3);
        let rhs = band("B1.2 S2 S1", 3);
        let augmented = rules.augmented(&lhs, &rhs);
        let added = augmented.len() - 1;
        let violations = check_minimality(&augmented);
        let e15 = augmented
            .rules()
            .iter()
            .position(|r| r.family() == RuleFamily::E15)
            .unwrap();
        assert_eq!(
            violations,
            vec![MinimalityViolation::RedundantLhs {
                rule: added,
                by: e15,
                position: 1,
            }]
        );
        // the base set is clean
        assert!(check_minimality(&rules).is_empty());
    }

    #[test]
    fn empty_set_is_vacuously_fine() {
        let rules = RuleSet::from_rules(strands(3), Vec::new());
        assert!(enumerate_ambiguities(&rules).unwrap().is_empty());
        assert!(check_minimality(&rules).is_empty());
        let report = verify_rule_set(&rules, DEFAULT_BUDGET).unwrap();
        assert!(report.passed());
        assert_eq!(report.ambiguity_count(), 0);
    }

    #[test]
    fn inclusion_is_a_hard_error() {
        let rules = RuleSet::instantiate(strands(3));
        // an augmented rule whose LHS contains another LHS produces an
        // inclusion overlap
        let augmented = rules.augmented(&band("S1 S2 S1 S2", 3), &band("B1.2 S2 S1", 3));
        match enumerate_ambiguities(&augmented) {
            Err(VerifyError::Inclusion { .. }) => {}
            other => panic!("expected inclusion error, got {other:?}"),
        }
    }

    #[test]
    fn report_json_shape() {
        let report = verify_basis(strands(2));
        let v = report.to_json();
        assert_eq!(v["strands"], 2);
        assert_eq!(v["rule_count"], 5);
        assert!(v["ambiguity_count"].as_u64().unwrap() > 0);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
        assert_eq!(v["minimality_violations"].as_array().unwrap().len(), 0);
    }
}
