//! Braid-group words in Artin-Burau (band) generators: a confluent rewriting
//! system computing canonical normal forms, plus a mechanical verifier that
//! the rewriting rules form a minimal Gröbner-Shirshov basis.
//!
//! The crate is organised bottom-up:
//!
//! * [`word`] — alphabets, words, parsing, and the Artin ↔ band conversions;
//! * [`order`] — the inverse tower order on band words (the monomial order
//!   orienting every rule);
//! * [`rules`] — the rewriting rules, instantiated per strand count;
//! * [`rewrite`] — normal-form computation and the normal-form decomposition;
//! * [`verify`] — exhaustive critical-pair (composition) checking and
//!   minimality checking for the rule set;
//! * [`artin`] — the faithful action on a free group, used as an independent
//!   equality oracle;
//! * [`sym`] — the induced symmetric-group image (strand permutations).

pub mod artin;
pub mod order;
pub mod rewrite;
pub mod rules;
pub mod sym;
pub mod verify;
pub mod word;

pub use artin::oracle_equal;
pub use order::compare;
pub use rewrite::{
    decompose_normal_form, equal_artin_words, equal_words, normal_form, normal_form_with,
    NormalFormDecomposition, RewriteError, Strategy, DEFAULT_BUDGET,
};
pub use rules::{RewriteRule, RuleFamily, RuleSet};
pub use sym::{is_pure, permutation_of, sym_normal_form, Permutation, SymNormalForm};
pub use verify::{
    check_minimality, enumerate_ambiguities, resolve_ambiguity, verify_basis, verify_rule_set,
    Ambiguity, Resolution, VerificationReport,
};
pub use word::{
    artin_to_band, band_to_artin, ArtinLetter, ArtinWord, BandLetter, BandWord, Sign, StrandCount,
    WordError,
};
