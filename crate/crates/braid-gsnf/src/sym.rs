//! The projection of braid words onto the symmetric group, the canonical
//! index-tuple normal form for permutations, and the purity test.
//!
//! Conventions: permutations act on strand positions; a word's letters are
//! applied left to right, so `permutation_of(u·v)` is `permutation_of(u)`
//! followed by `permutation_of(v)`. The tuple `(i_n, …, i_2)` of
//! [`SymNormalForm`] encodes the product `S(i_n,n) … S(i_2,2)` with
//! `S(i,j) = s_i s_{i+1} … s_{j-1}` (empty when `i = j`), mirroring the
//! permutation tail of a braid normal form letter for letter.

use thiserror::Error;

use crate::rules::RuleSet;
use crate::word::{ArtinLetter, ArtinWord, BandLetter, BandWord};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("images are not a bijection of 1..={0}")]
pub struct NotAPermutation(usize);

/// A bijection of {1, …, n}, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>, // images[p - 1] is the image of p
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Permutation, NotAPermutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im < 1 || im > n || seen[im - 1] {
                return Err(NotAPermutation(n));
            }
            seen[im - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition of k and k+1 in degree `degree`.
    pub fn transposition(degree: usize, k: usize) -> Permutation {
        assert!(k >= 1 && k < degree, "transposition index out of range");
        let mut images: Vec<usize> = (1..=degree).collect();
        images.swap(k - 1, k);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, p: usize) -> usize {
        self.images[p - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &im)| im == k + 1)
    }

    /// `self` followed by `other`: the composite sends p to
    /// `other.image(self.image(p))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&im| other.image(im)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.images.len()];
        for (p, &im) in self.images.iter().enumerate() {
            images[im - 1] = p + 1;
        }
        Permutation { images }
    }

    /// All n! permutations of degree n, in a deterministic order.
    pub fn all(degree: usize) -> Vec<Permutation> {
        fn extend(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if left.is_empty() {
                out.push(Permutation {
                    images: prefix.clone(),
                });
                return;
            }
            for k in 0..left.len() {
                let v = left.remove(k);
                prefix.push(v);
                extend(prefix, left, out);
                prefix.pop();
                left.insert(k, v);
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), &mut (1..=degree).collect(), &mut out);
        out
    }
}

/// The strand permutation of a band word: σ_k^{-1} swaps k and k+1, band
/// letters are pure.
pub fn permutation_of(w: &BandWord) -> Permutation {
    let n = w.strands().get();
    let mut acc = Permutation::identity(n);
    for &l in w.letters() {
        if let BandLetter::SigmaInv(k) = l {
            acc = acc.then(&Permutation::transposition(n, k));
        }
    }
    acc
}

/// The strand permutation of an Artin word: σ_k^{±1} swaps k and k+1.
pub fn permutation_of_artin(w: &ArtinWord) -> Permutation {
    let n = w.strands().get();
    let mut acc = Permutation::identity(n);
    for &ArtinLetter { index, .. } in w.letters() {
        acc = acc.then(&Permutation::transposition(n, index));
    }
    acc
}

/// The canonical index tuple `(i_n, …, i_2)` of a permutation, `1 ≤ i_j ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymNormalForm {
    degree: usize,
    indices: Vec<usize>, // indices[k] = i_{n-k}, i.e. stored as (i_n, …, i_2)
}

impl SymNormalForm {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The tuple `(i_n, …, i_2)`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The entry `i_j`, for 2 ≤ j ≤ degree.
    pub fn index(&self, j: usize) -> usize {
        assert!((2..=self.degree).contains(&j), "level out of range: {j}");
        self.indices[self.degree - j]
    }

    pub fn is_identity(&self) -> bool {
        (2..=self.degree).all(|j| self.index(j) == j)
    }

    /// The product `S(i_n,n) … S(i_2,2)` this tuple encodes.
    pub fn permutation(&self) -> Permutation {
        let n = self.degree;
        let mut acc = Permutation::identity(n);
        for j in (2..=n).rev() {
            for k in self.index(j)..j {
                acc = acc.then(&Permutation::transposition(n, k));
            }
        }
        acc
    }
}

/// The unique tuple whose segment product equals `p`, computed greedily:
/// `i_j` is the preimage of j under what remains of `p` once the segments
/// for levels above j are stripped.
pub fn sym_normal_form(p: &Permutation) -> SymNormalForm {
    let n = p.degree();
    let mut q: Vec<usize> = p.images().to_vec();
    let mut indices = Vec::with_capacity(n.saturating_sub(1));
    for j in (2..=n).rev() {
        // q fixes every level above j, so the preimage of j is ≤ j
        let i = (1..=j).find(|&x| q[x - 1] == j).expect("bijection");
        indices.push(i);
        // strip S(i,j): replace q by S(i,j)^{-1} followed by q, which
        // shifts the preimages i..j-1 up by one and fixes j
        let mut next = q.clone();
        for y in i..j {
            next[y - 1] = q[y];
        }
        next[j - 1] = j;
        q = next;
    }
    debug_assert!(q.iter().enumerate().all(|(k, &im)| im == k + 1));
    SymNormalForm { degree: n, indices }
}

/// True iff `w` projects to the identity permutation. In debug builds this
/// is cross-checked against the permutation tail of the normal form of `w`
/// being empty; the two agree for every word.
#[cfg_attr(not(debug_assertions), allow(unused_variables))]
pub fn is_pure(w: &BandWord, rules: &RuleSet) -> bool {
    let pure = permutation_of(w).is_identity();
    #[cfg(debug_assertions)]
    {
        let reduced = crate::rewrite::normal_form(w, rules, crate::rewrite::DEFAULT_BUDGET)
            .expect("purity cross-check: reduction exceeded the default budget");
        let parts = crate::rewrite::decompose_normal_form(&reduced)
            .expect("normal forms always decompose");
        debug_assert_eq!(
            pure,
            parts.tail_is_empty(),
            "permutation purity must agree with the normal-form tail"
        );
    }
    pure
}

/// [`is_pure`] for an Artin word.
pub fn is_pure_artin(w: &ArtinWord, rules: &RuleSet) -> bool {
    is_pure(&crate::word::artin_to_band(w), rules)
}
