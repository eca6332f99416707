//! Artin's action of the braid group on the free group `F_n`.
//!
//! Each braid word induces an automorphism of the free group on
//! `x_1 … x_n`; the action is faithful, so two braid words are equal iff
//! their automorphisms have identical generator images. This gives an
//! equality oracle that is independent of the rewriting system and is used
//! to validate rules, normal forms, and compositions.

use crate::word::{check_strands, ArtinWord, Sign, StrandCount, WordError};

/// One letter `x_g^{±1}` of the free group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FreeLetter {
    pub gen: usize,
    pub sign: Sign,
}

impl FreeLetter {
    pub fn new(gen: usize, sign: Sign) -> FreeLetter {
        FreeLetter { gen, sign }
    }

    pub fn inverse(self) -> FreeLetter {
        FreeLetter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }
}

/// A freely reduced word of `F_n`, stored as a flat sign-tagged sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord::default()
    }

    pub fn generator(gen: usize) -> FreeWord {
        FreeWord {
            letters: vec![FreeLetter::new(gen, Sign::Plus)],
        }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter, cancelling against the current last letter.
    /// Keeps the word freely reduced at every step.
    pub fn push(&mut self, l: FreeLetter) {
        match self.letters.last() {
            Some(&last) if last.inverse() == l => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn push_word(&mut self, w: &FreeWord) {
        for &l in &w.letters {
            self.push(l);
        }
    }

    pub fn push_word_inverse(&mut self, w: &FreeWord) {
        for &l in w.letters.iter().rev() {
            self.push(l.inverse());
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = FreeLetter>) -> FreeWord {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }
}

/// An endomorphism of `F_n` given by the images of `x_1 … x_n`.
/// Braid-generated instances are automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGroupEndomorphism {
    strands: StrandCount,
    images: Vec<FreeWord>,
}

impl FreeGroupEndomorphism {
    pub fn identity(strands: StrandCount) -> FreeGroupEndomorphism {
        FreeGroupEndomorphism {
            strands,
            images: (1..=strands.get()).map(FreeWord::generator).collect(),
        }
    }

    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    /// Image of `x_gen`, `1 ≤ gen ≤ n`.
    pub fn image(&self, gen: usize) -> &FreeWord {
        &self.images[gen - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// The automorphism of a single Artin generator.
    ///
    /// `σ_i`: `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`, others fixed.
    /// `σ_i^{-1}`: `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}`.
    pub fn generator(strands: StrandCount, index: usize, sign: Sign) -> FreeGroupEndomorphism {
        let mut endo = FreeGroupEndomorphism::identity(strands);
        let (i, j) = (index, index + 1);
        match sign {
            Sign::Plus => {
                endo.images[i - 1] = FreeWord::from_letters([
                    FreeLetter::new(i, Sign::Plus),
                    FreeLetter::new(j, Sign::Plus),
                    FreeLetter::new(i, Sign::Minus),
                ]);
                endo.images[j - 1] = FreeWord::generator(i);
            }
            Sign::Minus => {
                endo.images[i - 1] = FreeWord::generator(j);
                endo.images[j - 1] = FreeWord::from_letters([
                    FreeLetter::new(j, Sign::Minus),
                    FreeLetter::new(i, Sign::Plus),
                    FreeLetter::new(j, Sign::Plus),
                ]);
            }
        }
        endo
    }

    /// Applies the endomorphism to a word by substitution, reducing as it goes.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in w.letters() {
            match l.sign {
                Sign::Plus => out.push_word(self.image(l.gen)),
                Sign::Minus => out.push_word_inverse(self.image(l.gen)),
            }
        }
        out
    }

    /// `self` followed by `other` (left-to-right composition).
    pub fn then(&self, other: &FreeGroupEndomorphism) -> FreeGroupEndomorphism {
        debug_assert_eq!(self.strands, other.strands);
        FreeGroupEndomorphism {
            strands: self.strands,
            images: self.images.iter().map(|w| other.apply(w)).collect(),
        }
    }
}

/// The automorphism induced by an Artin word, letters composed left to right.
pub fn word_automorphism(w: &ArtinWord) -> FreeGroupEndomorphism {
    let mut endo = FreeGroupEndomorphism::identity(w.strands());
    for l in w.letters() {
        let step = FreeGroupEndomorphism::generator(w.strands(), l.index, l.sign);
        endo = endo.then(&step);
    }
    endo
}

/// Equality in `B_n` decided through the faithful action: true iff the two
/// induced automorphisms have identical generator images.
pub fn oracle_equal(u: &ArtinWord, v: &ArtinWord) -> Result<bool, WordError> {
    check_strands(u.strands(), v.strands())?;
    Ok(word_automorphism(u).images() == word_automorphism(v).images())
}
