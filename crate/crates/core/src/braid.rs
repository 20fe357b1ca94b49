//! Braid words over the Artin presentation of `B_n`.
//!
//! Letters are signed generator indices: `j > 0` is `σ_j`, `j < 0` is
//! `σ_{|j|}^{-1}`. Words are read in functional notation, so the word
//! `l1 l2 ... lk` acts on the disk as `l1 ∘ l2 ∘ ... ∘ lk` (the last letter
//! acts first). Words are stored freely reduced.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{check_strands, Error, Result};

/// A freely reduced word in the Artin generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word, validating every letter and freely reducing.
    pub fn new(n: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedParameters(format!(
                "braid words need n >= 2, got {n}"
            )));
        }
        let mut word = Self {
            n,
            letters: Vec::new(),
        };
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::Parse(format!("letter {l} out of range for n = {n}")));
            }
            word.push(l);
        }
        Ok(word)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "braid words need n >= 2");
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// The single generator `σ_i^{±1}`.
    pub fn generator(n: usize, letter: i32) -> Result<Self> {
        Self::new(n, [letter])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    // Callers guarantee the letter is in range.
    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    /// The product `self · other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        check_strands(self.n, other.n)?;
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `f · g · f^{-1}` with `f = self`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord> {
        self.compose(g)?.compose(&self.invert())
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = BraidWord::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                out.push(l);
            }
        }
        out
    }

    /// Same letters viewed in `B_m` for `m >= n`.
    pub fn widen(&self, m: usize) -> Result<BraidWord> {
        if m < self.n {
            return Err(Error::UnsupportedParameters(format!(
                "cannot widen a word on {} strands to {m}",
                self.n
            )));
        }
        Ok(BraidWord {
            n: m,
            letters: self.letters.clone(),
        })
    }

    /// Letters shifted by `offset` and viewed in `B_m`.
    pub fn shifted(&self, offset: i32, m: usize) -> Result<BraidWord> {
        BraidWord::new(
            m,
            self.letters
                .iter()
                .map(|&l| if l > 0 { l + offset } else { l - offset }),
        )
    }

    /// The length homomorphism `L : B_n → Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            images.swap(i, i + 1);
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Punctures (1-based) left in place by the induced permutation.
    pub fn fixed_punctures(&self) -> BTreeSet<usize> {
        self.permutation().fixed_points()
    }

    /// A uniformly random word of exactly `len` letters before reduction.
    pub fn random<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> BraidWord {
        let mut out = BraidWord::identity(n);
        for _ in 0..len {
            let g = rng.gen_range(1..n as i32);
            out.push(if rng.gen_bool(0.5) { g } else { -g });
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated signed letters.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<i32>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad letter `{t}`")))
        })
        .collect()
}

pub(crate) fn parse_strands(s: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad strand count `{}`", s.trim())))
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `n; l1 l2 ... lk`
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing `;` in `{s}`")))?;
        BraidWord::new(parse_strands(n)?, parse_letters(rest)?)
    }
}

/// A permutation of the punctures `{1, …, n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images; `None` unless they form a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return None;
            }
        }
        Some(Self {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based puncture `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }
}

/// The roots of the central element and the central element itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistinguishedKind {
    /// `δ = σ_1 σ_2 ⋯ σ_{n-1}`, an n-th root of `z`.
    Delta,
    /// `γ = σ_1 δ`, an (n-1)-th root of `z`.
    Gamma,
    /// The positive half twist `Δ` on all strands.
    HalfTwistAll,
    /// `z = Δ²`, the Dehn twist about the boundary.
    FullTwist,
}

impl FromStr for DistinguishedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta" => Ok(Self::Delta),
            "gamma" => Ok(Self::Gamma),
            "half_twist_all" => Ok(Self::HalfTwistAll),
            "full_twist" => Ok(Self::FullTwist),
            _ => Err(Error::Parse(format!("unknown element `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedElement {
    pub kind: DistinguishedKind,
    pub n: usize,
    pub word: BraidWord,
}

pub fn distinguished(kind: DistinguishedKind, n: usize) -> Result<DistinguishedElement> {
    if n < 3 {
        return Err(Error::UnsupportedParameters(format!(
            "distinguished elements need n >= 3, got {n}"
        )));
    }
    let word = match kind {
        DistinguishedKind::Delta => delta(n),
        DistinguishedKind::Gamma => gamma(n),
        DistinguishedKind::HalfTwistAll => half_twist_all(n),
        DistinguishedKind::FullTwist => full_twist(n),
    };
    Ok(DistinguishedElement { kind, n, word })
}

pub fn delta(n: usize) -> BraidWord {
    BraidWord {
        n,
        letters: (1..n as i32).collect(),
    }
}

pub fn gamma(n: usize) -> BraidWord {
    let mut letters = vec![1];
    letters.extend(1..n as i32);
    BraidWord { n, letters }
}

/// `Δ_n = (σ_1 ⋯ σ_{n-1})(σ_1 ⋯ σ_{n-2}) ⋯ (σ_1)`.
pub fn half_twist_all(n: usize) -> BraidWord {
    let letters = (1..n as i32).rev().flat_map(|top| 1..=top).collect();
    BraidWord { n, letters }
}

pub fn full_twist(n: usize) -> BraidWord {
    half_twist_all(n).pow(2)
}
