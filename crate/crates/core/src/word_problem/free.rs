//! The Artin action of `B_n` on the free group `F_n`.
//!
//! Convention, used everywhere in this crate:
//! `σ_i : x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i`, other generators fixed;
//! `σ_i^{-1} : x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}`.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A freely reduced word in `x_1, …, x_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, j: i32) -> Self {
        assert!(j != 0 && j.unsigned_abs() as usize <= rank);
        Self {
            rank,
            letters: vec![j],
        }
    }

    pub fn new(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut w = Self::identity(rank);
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::Parse(format!(
                    "free letter {l} out of range for rank {rank}"
                )));
            }
            w.push(l);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    fn extend_from(&mut self, other: &[i32]) {
        for &l in other {
            self.push(l);
        }
    }

    fn extend_inverse(&mut self, other: &[i32]) {
        for &l in other.iter().rev() {
            self.push(-l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend_from(&other.letters);
        out
    }

    pub fn inverse(&self) -> FreeWord {
        let mut out = FreeWord::identity(self.rank);
        out.extend_inverse(&self.letters);
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An automorphism of `F_rank`, given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinAuto {
    rank: usize,
    images: Vec<FreeWord>,
}

impl ArtinAuto {
    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            images: (1..=rank as i32)
                .map(|j| FreeWord::generator(rank, j))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, w)| w.letters == [j as i32 + 1])
    }

    pub fn total_letters(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    /// Image of an arbitrary free word.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity(self.rank);
        for &l in &w.letters {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_from(&img.letters);
            } else {
                out.extend_inverse(&img.letters);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ArtinAuto) -> ArtinAuto {
        ArtinAuto {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Right-multiplies by the action of one braid letter, in place.
    fn push_letter(&mut self, l: i32) {
        let a = l.unsigned_abs() as usize - 1;
        let b = a + 1;
        let (lo, hi) = self.images.split_at_mut(b);
        let (x, y) = (&mut lo[a], &mut hi[0]);
        if l > 0 {
            // x_a ↦ A B A^{-1}, x_b ↦ A
            let mut new_a = x.clone();
            new_a.extend_from(&y.letters);
            new_a.extend_inverse(&x.letters);
            *y = std::mem::replace(x, new_a);
        } else {
            // x_a ↦ B, x_b ↦ B^{-1} A B
            let mut new_b = FreeWord::identity(self.rank);
            new_b.extend_inverse(&y.letters);
            new_b.extend_from(&x.letters);
            new_b.extend_from(&y.letters);
            *x = std::mem::replace(y, new_b);
        }
    }

    /// Whether `x_1 x_2 ⋯ x_n` is fixed.
    pub fn preserves_boundary_word(&self) -> bool {
        let boundary = FreeWord {
            rank: self.rank,
            letters: (1..=self.rank as i32).collect(),
        };
        self.apply(&boundary) == boundary
    }
}

impl fmt::Display for ArtinAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, w) in self.images.iter().enumerate() {
            if j > 0 {
                writeln!(f)?;
            }
            write!(f, "x{} -> {}", j + 1, w)?;
        }
        Ok(())
    }
}

/// The automorphism induced by `u`, failing once the total image length
/// passes `budget` letters.
pub fn artin_image_with_budget(u: &BraidWord, budget: usize) -> Result<ArtinAuto> {
    let mut auto = ArtinAuto::identity(u.n());
    for &l in u.letters() {
        auto.push_letter(l);
        if auto.total_letters() > budget {
            return Err(Error::BudgetExceeded(format!(
                "free-group images exceed {budget} letters"
            )));
        }
    }
    Ok(auto)
}

pub fn artin_image(u: &BraidWord) -> ArtinAuto {
    let mut auto = ArtinAuto::identity(u.n());
    for &l in u.letters() {
        auto.push_letter(l);
    }
    auto
}
