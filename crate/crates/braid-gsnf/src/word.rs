//! Letters and words over the Artin and Artin-Burau (band) alphabets.
//!
//! For a fixed strand count `n`, the Artin alphabet is `{σ_k^{±1} | 1 ≤ k ≤ n-1}`
//! and the band alphabet is `S = S_n ∪ … ∪ S_2 ∪ Σ^{-1}` where
//! `S_j = {s_{i,j}^{±1} | 1 ≤ i < j}` and `Σ^{-1} = {σ_k^{-1}}`. Positive σ
//! letters are not part of the band alphabet; σ_i is encoded as
//! `s_{i,i+1} σ_i^{-1}` when converting. The two word flavors are distinct
//! types and never mixed.

use std::fmt;
use thiserror::Error;

/// Errors from word construction, parsing, and conversion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("strand count must be at least 2, got {0}")]
    BadStrandCount(usize),
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("token `{0}` is not in the {1} alphabet")]
    WrongAlphabet(String, &'static str),
    #[error("letter `{letter}` out of range for {n} strands")]
    IndexOutOfRange { letter: String, n: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

/// Number of strands; always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrandCount(usize);

impl StrandCount {
    pub fn new(n: usize) -> Result<Self, WordError> {
        if n < 2 {
            return Err(WordError::BadStrandCount(n));
        }
        Ok(StrandCount(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for StrandCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sign of a generator, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One Artin-Burau generator: `σ_k^{-1}` or `s_{i,j}^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BandLetter {
    /// `σ_k^{-1}`, `1 ≤ k ≤ n-1`.
    SigmaInv(usize),
    /// `s_{i,j}^{±1}`, `1 ≤ i < j ≤ n`.
    Band { i: usize, j: usize, sign: Sign },
}

impl BandLetter {
    pub fn band(i: usize, j: usize, sign: Sign) -> BandLetter {
        BandLetter::Band { i, j, sign }
    }

    /// Formal inverse of a band generator. σ letters have no inverse in S.
    pub fn inverse(self) -> Option<BandLetter> {
        match self {
            BandLetter::SigmaInv(_) => None,
            BandLetter::Band { i, j, sign } => Some(BandLetter::Band {
                i,
                j,
                sign: sign.flip(),
            }),
        }
    }

    /// True if `self` and `other` are `s_{i,j}^{δ}`, `s_{i,j}^{-δ}`.
    pub fn cancels(self, other: BandLetter) -> bool {
        self.inverse() == Some(other)
    }

    fn validate(self, n: usize) -> Result<(), WordError> {
        let ok = match self {
            BandLetter::SigmaInv(k) => (1..n).contains(&k),
            BandLetter::Band { i, j, .. } => 1 <= i && i < j && j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(WordError::IndexOutOfRange {
                letter: self.to_string(),
                n,
            })
        }
    }
}

impl fmt::Display for BandLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BandLetter::SigmaInv(k) => write!(f, "S{k}"),
            BandLetter::Band {
                i,
                j,
                sign: Sign::Plus,
            } => write!(f, "b{i}.{j}"),
            BandLetter::Band {
                i,
                j,
                sign: Sign::Minus,
            } => write!(f, "B{i}.{j}"),
        }
    }
}

/// One Artin generator `σ_k^{±1}`, `1 ≤ k ≤ n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub index: usize,
    pub sign: Sign,
}

impl ArtinLetter {
    pub fn new(index: usize, sign: Sign) -> ArtinLetter {
        ArtinLetter { index, sign }
    }

    pub fn inverse(self) -> ArtinLetter {
        ArtinLetter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    fn validate(self, n: usize) -> Result<(), WordError> {
        if (1..n).contains(&self.index) {
            Ok(())
        } else {
            Err(WordError::IndexOutOfRange {
                letter: self.to_string(),
                n,
            })
        }
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "s{}", self.index),
            Sign::Minus => write!(f, "S{}", self.index),
        }
    }
}

/// A word over the band alphabet. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BandWord {
    strands: StrandCount,
    letters: Vec<BandLetter>,
}

/// A word over the Artin alphabet. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    strands: StrandCount,
    letters: Vec<ArtinLetter>,
}

impl BandWord {
    pub fn new(strands: StrandCount, letters: Vec<BandLetter>) -> Result<Self, WordError> {
        for l in &letters {
            l.validate(strands.get())?;
        }
        Ok(BandWord { strands, letters })
    }

    pub fn identity(strands: StrandCount) -> Self {
        BandWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Builds a word without revalidating letters. The caller guarantees
    /// every letter is valid for `strands`.
    pub(crate) fn from_validated(strands: StrandCount, letters: Vec<BandLetter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.validate(strands.get()).is_ok()));
        BandWord { strands, letters }
    }

    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BandWord) -> Result<BandWord, WordError> {
        check_strands(self.strands, other.strands)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BandWord {
            strands: self.strands,
            letters,
        })
    }

    /// Parses whitespace-separated band tokens: `S<k>`, `b<i>.<j>`, `B<i>.<j>`.
    ///
    /// Empty or whitespace-only input is the identity word. `s<k>` is
    /// rejected: positive σ letters are not band generators.
    pub fn parse(text: &str, strands: StrandCount) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            letters.push(parse_band_token(tok)?);
        }
        BandWord::new(strands, letters)
    }

    /// Renders the word in the token grammar; round-trips with `parse`.
    pub fn render(&self) -> String {
        render_tokens(self.letters.iter())
    }
}

impl ArtinWord {
    pub fn new(strands: StrandCount, letters: Vec<ArtinLetter>) -> Result<Self, WordError> {
        for l in &letters {
            l.validate(strands.get())?;
        }
        Ok(ArtinWord { strands, letters })
    }

    pub fn identity(strands: StrandCount) -> Self {
        ArtinWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> StrandCount {
        self.strands
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &ArtinWord) -> Result<ArtinWord, WordError> {
        check_strands(self.strands, other.strands)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ArtinWord {
            strands: self.strands,
            letters,
        })
    }

    /// The group inverse: reversed sequence with every sign flipped.
    pub fn inverse(&self) -> ArtinWord {
        ArtinWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Parses whitespace-separated Artin tokens: `s<k>` = σ_k, `S<k>` = σ_k^{-1}.
    pub fn parse(text: &str, strands: StrandCount) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            letters.push(parse_artin_token(tok)?);
        }
        ArtinWord::new(strands, letters)
    }

    pub fn render(&self) -> String {
        render_tokens(self.letters.iter())
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

pub(crate) fn check_strands(a: StrandCount, b: StrandCount) -> Result<(), WordError> {
    if a == b {
        Ok(())
    } else {
        Err(WordError::StrandMismatch(a.get(), b.get()))
    }
}

fn render_tokens<T: fmt::Display>(letters: impl Iterator<Item = T>) -> String {
    letters
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_index(tok: &str, digits: &str) -> Result<usize, WordError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(WordError::MalformedToken(tok.to_string()));
    }
    digits
        .parse()
        .map_err(|_| WordError::MalformedToken(tok.to_string()))
}

fn parse_band_token(tok: &str) -> Result<BandLetter, WordError> {
    let (head, rest) = split_head(tok)?;
    match head {
        'S' => Ok(BandLetter::SigmaInv(parse_index(tok, rest)?)),
        's' => Err(WordError::WrongAlphabet(tok.to_string(), "band")),
        'b' | 'B' => {
            let (i, j) = parse_pair(tok, rest)?;
            let sign = if head == 'b' { Sign::Plus } else { Sign::Minus };
            if i >= j {
                // b2.1 is malformed rather than out of range: the grammar
                // requires i < j.
                return Err(WordError::MalformedToken(tok.to_string()));
            }
            Ok(BandLetter::Band { i, j, sign })
        }
        _ => Err(WordError::MalformedToken(tok.to_string())),
    }
}

fn parse_artin_token(tok: &str) -> Result<ArtinLetter, WordError> {
    let (head, rest) = split_head(tok)?;
    match head {
        's' => Ok(ArtinLetter::new(parse_index(tok, rest)?, Sign::Plus)),
        'S' => Ok(ArtinLetter::new(parse_index(tok, rest)?, Sign::Minus)),
        'b' | 'B' => Err(WordError::WrongAlphabet(tok.to_string(), "artin")),
        _ => Err(WordError::MalformedToken(tok.to_string())),
    }
}

fn split_head(tok: &str) -> Result<(char, &str), WordError> {
    let mut chars = tok.chars();
    match chars.next() {
        Some(c) => Ok((c, chars.as_str())),
        None => Err(WordError::MalformedToken(String::new())),
    }
}

fn parse_pair(tok: &str, rest: &str) -> Result<(usize, usize), WordError> {
    let (a, b) = rest
        .split_once('.')
        .ok_or_else(|| WordError::MalformedToken(tok.to_string()))?;
    Ok((parse_index(tok, a)?, parse_index(tok, b)?))
}

/// Rewrites an Artin word over the band alphabet: `σ_i ↦ s_{i,i+1} σ_i^{-1}`
/// and `σ_i^{-1} ↦ σ_i^{-1}`.
pub fn artin_to_band(w: &ArtinWord) -> BandWord {
    let mut letters = Vec::with_capacity(2 * w.len());
    for l in w.letters() {
        match l.sign {
            Sign::Plus => {
                letters.push(BandLetter::band(l.index, l.index + 1, Sign::Plus));
                letters.push(BandLetter::SigmaInv(l.index));
            }
            Sign::Minus => letters.push(BandLetter::SigmaInv(l.index)),
        }
    }
    BandWord::from_validated(w.strands(), letters)
}

/// Expands a band word into Artin generators via
/// `s_{i,j} = σ_{j-1} … σ_{i+1} σ_i^2 σ_{i+1}^{-1} … σ_{j-1}^{-1}`,
/// with `s_{i,j}^{-1}` the formal inverse of that expansion.
pub fn band_to_artin(w: &BandWord) -> ArtinWord {
    let mut letters = Vec::new();
    for l in w.letters() {
        match *l {
            BandLetter::SigmaInv(k) => letters.push(ArtinLetter::new(k, Sign::Minus)),
            BandLetter::Band { i, j, sign } => {
                for m in (i + 1..j).rev() {
                    letters.push(ArtinLetter::new(m, Sign::Plus));
                }
                letters.push(ArtinLetter::new(i, sign));
                letters.push(ArtinLetter::new(i, sign));
                for m in i + 1..j {
                    letters.push(ArtinLetter::new(m, Sign::Minus));
                }
            }
        }
    }
    ArtinWord {
        strands: w.strands(),
        letters,
    }
}
