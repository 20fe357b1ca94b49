//! Arcs as images `β(e_i)` of straight arcs, handled purely through braids.
//!
//! The half-twist about `β(e_i)` is `β σ_i β^{-1}`. It determines the arc,
//! and commutation or braid relations between half-twists detect
//! disjointness and adjacency, so every question here reduces to the word
//! problem.

use std::fmt;
use std::str::FromStr;

use crate::braid::{parse_letters, parse_strands, BraidWord};
use crate::error::{check_strands, Error, Result};
use crate::geometry::{ArcCode, ArcDiagram};
use crate::word_problem::Solver;

/// The isotopy class `beta(e_index)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arc {
    beta: BraidWord,
    index: usize,
}

impl Arc {
    pub fn new(beta: BraidWord, index: usize) -> Result<Arc> {
        if index == 0 || index >= beta.n() {
            return Err(Error::UnsupportedParameters(format!(
                "arc index {index} outside 1..={}",
                beta.n().saturating_sub(1)
            )));
        }
        Ok(Arc { beta, index })
    }

    /// The straight arc `e_i`.
    pub fn straight(index: usize, n: usize) -> Result<Arc> {
        Arc::new(BraidWord::identity(n), index)
    }

    pub fn n(&self) -> usize {
        self.beta.n()
    }

    pub fn beta(&self) -> &BraidWord {
        &self.beta
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// `β σ_i β^{-1}`.
    pub fn half_twist(&self) -> BraidWord {
        let s = BraidWord::generator(self.n(), self.index as i32).expect("index validated");
        self.beta.conjugate(&s).expect("same n")
    }

    /// `f(a) = (f β, i)`.
    pub fn apply(&self, f: &BraidWord) -> Result<Arc> {
        Ok(Arc {
            beta: f.compose(&self.beta)?,
            index: self.index,
        })
    }

    /// The two punctures joined, smaller first.
    pub fn ends(&self) -> (usize, usize) {
        let p = self.beta.permutation();
        let (a, b) = (p.apply(self.index), p.apply(self.index + 1));
        (a.min(b), a.max(b))
    }

    /// Normal-form code of the realized arc.
    pub fn code(&self) -> Result<ArcCode> {
        ArcCode::straight(self.index, self.n())?.apply_word(self.beta.letters())
    }

    /// The realized arc, capped at `budget` polyline segments.
    pub fn realize(&self, budget: usize) -> Result<ArcDiagram> {
        crate::geometry::realize_word(self.index, self.n(), self.beta.letters(), budget)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {} @", self.n(), self.index)?;
        for l in self.beta.letters() {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for Arc {
    type Err = Error;

    /// `n; i @ l1 l2 ...`
    fn from_str(s: &str) -> Result<Self> {
        let (head, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing `;` in `{s}`")))?;
        let n = parse_strands(head)?;
        let (idx, word) = rest
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("missing `@` in `{s}`")))?;
        let index: usize = idx
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad arc index `{}`", idx.trim())))?;
        Arc::new(BraidWord::new(n, parse_letters(word)?)?, index)
    }
}

/// Algebraic predicates on arcs, decided by a word-problem solver.
#[derive(Debug, Clone, Copy, Default)]
pub struct ArcOracle {
    pub solver: Solver,
}

impl ArcOracle {
    pub fn new(solver: Solver) -> Self {
        Self { solver }
    }

    pub fn arcs_equal(&self, a: &Arc, b: &Arc) -> Result<bool> {
        check_strands(a.n(), b.n())?;
        self.solver.equal(&a.half_twist(), &b.half_twist())
    }

    /// Distinct arcs with disjoint closures.
    pub fn disjoint(&self, a: &Arc, b: &Arc) -> Result<bool> {
        check_strands(a.n(), b.n())?;
        Ok(self.solver.commutes(&a.half_twist(), &b.half_twist())? && !self.arcs_equal(a, b)?)
    }

    /// Distinct arcs sharing one end and otherwise disjoint.
    pub fn adjacent(&self, a: &Arc, b: &Arc) -> Result<bool> {
        check_strands(a.n(), b.n())?;
        Ok(self
            .solver
            .braid_related(&a.half_twist(), &b.half_twist())?
            && !self.arcs_equal(a, b)?)
    }

    pub fn fixes_arc(&self, f: &BraidWord, a: &Arc) -> Result<bool> {
        check_strands(f.n(), a.n())?;
        self.solver.commutes(f, &a.half_twist())
    }
}

pub fn arcs_equal(a: &Arc, b: &Arc) -> Result<bool> {
    ArcOracle::default().arcs_equal(a, b)
}

pub fn disjoint(a: &Arc, b: &Arc) -> Result<bool> {
    ArcOracle::default().disjoint(a, b)
}

pub fn adjacent(a: &Arc, b: &Arc) -> Result<bool> {
    ArcOracle::default().adjacent(a, b)
}

pub fn fixes_arc(f: &BraidWord, a: &Arc) -> Result<bool> {
    ArcOracle::default().fixes_arc(f, a)
}
