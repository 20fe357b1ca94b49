//! Two-variable Laurent polynomials `Z[q^±1, t^±1]` with `i128` coefficients.
//!
//! Arithmetic is checked; an overflow poisons the value instead of wrapping,
//! and callers surface poisoned results as a budget failure.

use std::collections::BTreeMap;
use std::fmt;

/// Sparse Laurent polynomial; terms sorted by `(q exponent, t exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: Vec<((i32, i32), i128)>,
    overflow: bool,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c · q^a t^b`.
    pub fn monomial(c: i128, a: i32, b: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self {
                terms: vec![((a, b), c)],
                overflow: false,
            }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i128, i32, i32)>) -> Self {
        let mut acc: BTreeMap<(i32, i32), i128> = BTreeMap::new();
        let mut overflow = false;
        for (c, a, b) in terms {
            let e = acc.entry((a, b)).or_insert(0);
            match e.checked_add(c) {
                Some(v) => *e = v,
                None => overflow = true,
            }
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
            overflow,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn overflowed(&self) -> bool {
        self.overflow
    }

    pub fn terms(&self) -> &[((i32, i32), i128)] {
        &self.terms
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut overflow = self.overflow || other.overflow;
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = self.terms[i];
            let (kb, cb) = other.terms[j];
            match ka.cmp(&kb) {
                std::cmp::Ordering::Less => {
                    out.push((ka, ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((kb, cb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    match ca.checked_add(cb) {
                        Some(0) => {}
                        Some(c) => out.push((ka, c)),
                        None => overflow = true,
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Laurent {
            terms: out,
            overflow,
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent {
                terms: Vec::new(),
                overflow: self.overflow || other.overflow,
            };
        }
        let mut overflow = self.overflow || other.overflow;
        let mut acc: BTreeMap<(i32, i32), i128> = BTreeMap::new();
        for &((a1, b1), c1) in &self.terms {
            for &((a2, b2), c2) in &other.terms {
                let Some(c) = c1.checked_mul(c2) else {
                    overflow = true;
                    continue;
                };
                let e = acc.entry((a1 + a2, b1 + b2)).or_insert(0);
                match e.checked_add(c) {
                    Some(v) => *e = v,
                    None => overflow = true,
                }
            }
        }
        Laurent {
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
            overflow,
        }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("{c}*q^{a}*t^{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q_minus_1 = Laurent::from_terms([(1, 1, 0), (-1, 0, 0)]);
        let sq = q_minus_1.mul(&q_minus_1);
        assert_eq!(sq, Laurent::from_terms([(1, 2, 0), (-2, 1, 0), (1, 0, 0)]));
        assert!(sq
            .add(&Laurent::from_terms([(-1, 2, 0), (2, 1, 0), (-1, 0, 0)]))
            .is_zero());
        let inv = Laurent::monomial(1, -1, -1);
        assert_eq!(inv.mul(&Laurent::monomial(1, 1, 1)), Laurent::one());
    }

    #[test]
    fn overflow_poisons() {
        let big = Laurent::monomial(i128::MAX / 2 + 1, 0, 0);
        assert!(big.add(&big).overflowed());
        assert!(big.mul(&Laurent::monomial(4, 0, 0)).overflowed());
    }
}
