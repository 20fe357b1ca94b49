//! Exact equality of braid words and the relation queries built on it.
//!
//! The primary backend is the faithful Artin action on a free group. An
//! optional Lawrence–Krammer backend can run alongside; when both run they
//! must agree, and a disagreement is reported as an error.

pub mod free;
pub mod krammer;
pub mod laurent;

pub use free::{artin_image, ArtinAuto, FreeWord};

use crate::braid::BraidWord;
use crate::error::{check_strands, Error, Result};

/// Default cap on the total length of the free-group images.
pub const DEFAULT_LETTER_BUDGET: usize = 16_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    #[default]
    FreeGroup,
    Linear,
    /// Consult both and require agreement.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub backend: Backend,
    /// Letter budget for the free-group images.
    pub budget: usize,
    /// Seed choosing the evaluation point of the linear pre-filter.
    pub seed: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Self {
            backend: Backend::FreeGroup,
            budget: DEFAULT_LETTER_BUDGET,
            seed: 0x5eed,
        }
    }
}

impl Solver {
    pub fn with_backend(backend: Backend) -> Self {
        Self {
            backend,
            ..Self::default()
        }
    }

    pub fn equal(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        check_strands(u.n(), v.n())?;
        // cheap homomorphic invariants first
        if u.exponent_sum() != v.exponent_sum() || u.permutation() != v.permutation() {
            return Ok(false);
        }
        match self.backend {
            // the faithful linear representation takes over when the
            // free-group images outgrow the budget
            Backend::FreeGroup => match self.equal_free(u, v) {
                Err(Error::BudgetExceeded(_)) => krammer::equal(u, v, self.seed),
                other => other,
            },
            Backend::Linear => krammer::equal(u, v, self.seed),
            Backend::Both => {
                let free = self.equal_free(u, v)?;
                let linear = krammer::equal(u, v, self.seed)?;
                if free != linear {
                    return Err(Error::BackendDisagreement(format!(
                        "free group says {free}, linear says {linear} for `{u}` vs `{v}`"
                    )));
                }
                Ok(free)
            }
        }
    }

    /// `u = v` iff `u v^{-1}` acts trivially, i.e. iff both act identically.
    fn equal_free(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        let a = free::artin_image_with_budget(u, self.budget)?;
        let b = free::artin_image_with_budget(v, self.budget)?;
        Ok(a == b)
    }

    pub fn commutes(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        self.equal(&u.compose(v)?, &v.compose(u)?)
    }

    /// `u v u = v u v`.
    pub fn braid_related(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        let uvu = u.compose(v)?.compose(u)?;
        let vuv = v.compose(u)?.compose(v)?;
        self.equal(&uvu, &vuv)
    }

    pub fn is_central(&self, u: &BraidWord) -> Result<bool> {
        for i in 1..u.n() as i32 {
            if !self.commutes(u, &BraidWord::generator(u.n(), i)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Solver::default().equal(u, v)
}

pub fn commutes(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Solver::default().commutes(u, v)
}

pub fn braid_related(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    Solver::default().braid_related(u, v)
}

pub fn is_central(u: &BraidWord) -> Result<bool> {
    Solver::default().is_central(u)
}
