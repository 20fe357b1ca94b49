//! The Lawrence–Krammer representation `B_n → GL_{n(n-1)/2}(Z[q^±1, t^±1])`.
//!
//! Basis `x_{i,j}`, `1 <= i < j <= n`. For the generator `σ_k`:
//!
//! ```text
//! σ_k x_{k,k+1} = t q² x_{k,k+1}
//! σ_k x_{i,k}   = (1-q) x_{i,k} + q x_{i,k+1}                    i < k
//! σ_k x_{i,k+1} = x_{i,k} + t q^{k-i+1} (q-1) x_{k,k+1}          i < k
//! σ_k x_{k,j}   = t q (q-1) x_{k,k+1} + q x_{k+1,j}              k+1 < j
//! σ_k x_{k+1,j} = x_{k,j} + (1-q) x_{k+1,j}                      k+1 < j
//! σ_k x_{i,j}   = x_{i,j} + t q^{k-i} (q-1)² x_{k,k+1}           i < k < k+1 < j
//! σ_k x_{i,j}   = x_{i,j}                                        otherwise
//! ```
//!
//! The inverse generator uses the closed-form inverse of these columns.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::laurent::Laurent;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A coefficient `c · q^a t^b` of a matrix formula.
type Term = (i128, i32, i32);

/// One changed column: target basis index and its image as
/// `(source basis index, polynomial)` pairs.
type ColumnImage = (usize, Vec<(usize, Vec<Term>)>);

pub fn dimension(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Index of `x_{i,j}` (1-based, `i < j`).
fn basis(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // rows 1..i-1 contribute (n - r) entries each
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

fn poly_q_minus_1_times(c: i128, a: i32, b: i32) -> Vec<Term> {
    vec![(c, a + 1, b), (-c, a, b)]
}

fn poly_q_minus_1_sq_times(c: i128, a: i32, b: i32) -> Vec<Term> {
    vec![(c, a + 2, b), (-2 * c, a + 1, b), (c, a, b)]
}

/// The columns of the matrix of one letter that differ from the identity.
fn letter_columns(n: usize, letter: i32) -> Vec<ColumnImage> {
    let k = letter.unsigned_abs() as usize;
    let e = basis(n, k, k + 1);
    let mut cols = Vec::new();
    if letter > 0 {
        cols.push((e, vec![(e, vec![(1, 2, 1)])]));
        for i in 1..k {
            let (ik, ik1) = (basis(n, i, k), basis(n, i, k + 1));
            cols.push((
                ik,
                vec![(ik, vec![(1, 0, 0), (-1, 1, 0)]), (ik1, vec![(1, 1, 0)])],
            ));
            let d = (k - i + 1) as i32;
            cols.push((
                ik1,
                vec![(ik, vec![(1, 0, 0)]), (e, poly_q_minus_1_times(1, d, 1))],
            ));
        }
        for j in k + 2..=n {
            let (kj, k1j) = (basis(n, k, j), basis(n, k + 1, j));
            cols.push((
                kj,
                vec![(e, poly_q_minus_1_times(1, 1, 1)), (k1j, vec![(1, 1, 0)])],
            ));
            cols.push((
                k1j,
                vec![(kj, vec![(1, 0, 0)]), (k1j, vec![(1, 0, 0), (-1, 1, 0)])],
            ));
        }
        for i in 1..k {
            for j in k + 2..=n {
                let ij = basis(n, i, j);
                let d = (k - i) as i32;
                cols.push((
                    ij,
                    vec![(ij, vec![(1, 0, 0)]), (e, poly_q_minus_1_sq_times(1, d, 1))],
                ));
            }
        }
    } else {
        cols.push((e, vec![(e, vec![(1, -2, -1)])]));
        for i in 1..k {
            let (ik, ik1) = (basis(n, i, k), basis(n, i, k + 1));
            let d = k as i32 - i as i32;
            cols.push((
                ik,
                vec![
                    (ik1, vec![(1, 0, 0)]),
                    (e, poly_q_minus_1_times(-1, d - 1, 0)),
                ],
            ));
            cols.push((
                ik1,
                vec![
                    (ik, vec![(1, -1, 0)]),
                    (ik1, vec![(1, 0, 0), (-1, -1, 0)]),
                    (e, poly_q_minus_1_sq_times(-1, d - 2, 0)),
                ],
            ));
        }
        for j in k + 2..=n {
            let (kj, k1j) = (basis(n, k, j), basis(n, k + 1, j));
            cols.push((
                kj,
                vec![
                    (kj, vec![(1, 0, 0), (-1, -1, 0)]),
                    (k1j, vec![(1, 0, 0)]),
                    (e, poly_q_minus_1_sq_times(-1, -2, 0)),
                ],
            ));
            cols.push((
                k1j,
                vec![(kj, vec![(1, -1, 0)]), (e, poly_q_minus_1_times(-1, -2, 0))],
            ));
        }
        for i in 1..k {
            for j in k + 2..=n {
                let ij = basis(n, i, j);
                let d = k as i32 - i as i32;
                cols.push((
                    ij,
                    vec![
                        (ij, vec![(1, 0, 0)]),
                        (e, poly_q_minus_1_sq_times(-1, d - 2, 0)),
                    ],
                ));
            }
        }
    }
    cols
}

/// Coefficient ring the representation is evaluated in.
pub trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Turns formula terms into ring elements.
pub trait Evaluate<S: Scalar> {
    fn eval(&self, terms: &[Term]) -> S;
}

impl Scalar for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn add(&self, other: &Self) -> Self {
        Laurent::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Laurent::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
}

/// Exact symbolic evaluation.
pub struct Symbolic;

impl Evaluate<Laurent> for Symbolic {
    fn eval(&self, terms: &[Term]) -> Laurent {
        Laurent::from_terms(terms.iter().copied())
    }
}

pub const MODULUS: u64 = (1 << 61) - 1;

/// Residues modulo the Mersenne prime `2^61 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModP(pub u64);

impl ModP {
    fn new(x: i128) -> Self {
        ModP(x.rem_euclid(MODULUS as i128) as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModP(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Self {
        self.pow(MODULUS - 2)
    }
}

impl Scalar for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn one() -> Self {
        ModP(1)
    }
    fn add(&self, other: &Self) -> Self {
        ModP((self.0 + other.0) % MODULUS)
    }
    fn mul(&self, other: &Self) -> Self {
        ModP(((self.0 as u128 * other.0 as u128) % MODULUS as u128) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

/// Evaluation at a point `(q, t)` with both coordinates invertible mod p.
pub struct AtPoint {
    q: ModP,
    t: ModP,
    q_inv: ModP,
    t_inv: ModP,
}

impl AtPoint {
    pub fn new(q: u64, t: u64) -> Self {
        let (q, t) = (ModP(q % MODULUS), ModP(t % MODULUS));
        assert!(!q.is_zero() && !t.is_zero());
        Self {
            q,
            t,
            q_inv: q.inv(),
            t_inv: t.inv(),
        }
    }

    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::new(rng.gen_range(2..MODULUS - 1), rng.gen_range(2..MODULUS - 1))
    }

    fn power(base: ModP, inv: ModP, e: i32) -> ModP {
        if e >= 0 {
            base.pow(e as u64)
        } else {
            inv.pow(e.unsigned_abs() as u64)
        }
    }
}

impl Evaluate<ModP> for AtPoint {
    fn eval(&self, terms: &[Term]) -> ModP {
        terms.iter().fold(ModP(0), |acc, &(c, a, b)| {
            let m = ModP::new(c)
                .mul(&Self::power(self.q, self.q_inv, a))
                .mul(&Self::power(self.t, self.t_inv, b));
            acc.add(&m)
        })
    }
}

/// A square matrix stored by columns.
#[derive(Debug, Clone, PartialEq)]
pub struct LkMatrix<S> {
    dim: usize,
    cols: Vec<Vec<S>>,
}

impl<S: Scalar> LkMatrix<S> {
    pub fn identity(dim: usize) -> Self {
        let cols = (0..dim)
            .map(|c| {
                (0..dim)
                    .map(|r| if r == c { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();
        Self { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row `r`, column `c`.
    pub fn entry(&self, r: usize, c: usize) -> &S {
        &self.cols[c][r]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    fn right_mul_letter<E: Evaluate<S>>(&mut self, n: usize, letter: i32, ev: &E) {
        let changes = letter_columns(n, letter);
        let new_cols: Vec<(usize, Vec<S>)> = changes
            .iter()
            .map(|(target, sources)| {
                let mut col = vec![S::zero(); self.dim];
                for (src, terms) in sources {
                    let coeff = ev.eval(terms);
                    for (r, v) in self.cols[*src].iter().enumerate() {
                        if !v.is_zero() {
                            col[r] = col[r].add(&v.mul(&coeff));
                        }
                    }
                }
                (*target, col)
            })
            .collect();
        for (target, col) in new_cols {
            self.cols[target] = col;
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                let mut col = vec![S::zero(); self.dim];
                for (k, v) in oc.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for (r, a) in self.cols[k].iter().enumerate() {
                        if !a.is_zero() {
                            col[r] = col[r].add(&a.mul(v));
                        }
                    }
                }
                col
            })
            .collect();
        Self {
            dim: self.dim,
            cols,
        }
    }
}

/// Matrix of a braid word, evaluated through `ev`.
pub fn matrix_with<S: Scalar, E: Evaluate<S>>(u: &BraidWord, ev: &E) -> LkMatrix<S> {
    let n = u.n();
    let mut m = LkMatrix::identity(dimension(n));
    for &l in u.letters() {
        m.right_mul_letter(n, l, ev);
    }
    m
}

/// Exact symbolic matrix.
pub fn matrix(u: &BraidWord) -> Result<LkMatrix<Laurent>> {
    let m = matrix_with(u, &Symbolic);
    if m.cols.iter().flatten().any(Laurent::overflowed) {
        return Err(Error::BudgetExceeded("Laurent coefficient overflow".into()));
    }
    Ok(m)
}

/// Exact equality of the two matrices, with a mod-p evaluation at a seeded
/// random point as a pre-filter: a mismatch there already proves inequality.
pub fn equal(u: &BraidWord, v: &BraidWord, seed: u64) -> Result<bool> {
    let point = AtPoint::random(seed);
    if matrix_with(u, &point) != matrix_with(v, &point) {
        return Ok(false);
    }
    Ok(matrix(u)? == matrix(v)?)
}
