//! The acceptance criteria as runnable checks.
//!
//! Every check is deterministic for a given seed and reports one line.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arc::{Arc, ArcOracle};
use crate::braid::{delta, full_twist, gamma, half_twist_all, BraidWord};
use crate::complex::{
    check_path, random_vertex, straight_path, straight_reachable, straight_vertices, straighten,
    validate_vertex, RawPath,
};
use crate::error::{Error, Result};
use crate::geometry::code_crossing_number;
use crate::morphism::{
    injectivity_sample, non_surjectivity_witness, verify_homomorphism, MorphismKind, MorphismSpec,
};
use crate::word_problem::{free, krammer, Solver};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    run: fn(u64) -> Result<String>,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<28} {} ({:.2}s, limit {}s) {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self, seed: u64) -> CriterionReport {
        let t = Instant::now();
        let outcome = (self.run)(seed);
        let elapsed = t.elapsed();
        let (passed, detail) = match outcome {
            Ok(d) if elapsed <= self.limit => (true, d),
            Ok(d) => (false, format!("{d}; over time")),
            Err(e) => (false, e.to_string()),
        };
        CriterionReport {
            id: self.id,
            name: self.name,
            passed,
            detail,
            elapsed,
            limit: self.limit,
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs, run| Criterion {
        id,
        name,
        limit: Duration::from_secs(secs),
        run,
    };
    vec![
        c(1, "relation soundness", 1, relation_soundness),
        c(2, "backend agreement", 120, backend_agreement),
        c(3, "roots of the center", 60, roots_of_center),
        c(4, "arc equality", 300, arc_equality),
        c(5, "disjointness", 300, disjointness),
        c(6, "adjacency", 300, adjacency),
        c(7, "stabilizers", 300, stabilizers),
        c(8, "straightening", 600, straightening),
        c(9, "straight connectivity", 60, straight_connectivity),
        c(10, "morphisms", 600, morphisms),
    ]
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    criteria().iter().map(|c| c.run(seed)).collect()
}

fn fail(msg: String) -> Error {
    Error::PreconditionViolated(msg)
}

fn relation_soundness(_: u64) -> Result<String> {
    let solver = Solver::default();
    let mut count = 0;
    for n in 2..=9 {
        for i in 1..n as i32 {
            let a = BraidWord::generator(n, i)?;
            for j in i + 1..n as i32 {
                let b = BraidWord::generator(n, j)?;
                let ok = if j == i + 1 {
                    solver.braid_related(&a, &b)? && !solver.commutes(&a, &b)?
                } else {
                    solver.commutes(&a, &b)?
                };
                if !ok {
                    return Err(fail(format!("relation {i} {j} fails in B_{n}")));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} relations"))
}

/// Random words plus equal and unequal rewrites that survive the cheap
/// exponent-sum and permutation filters.
fn agreement_pair(rng: &mut ChaCha8Rng) -> Result<(BraidWord, BraidWord)> {
    let n = rng.gen_range(3..=6);
    let i = rng.gen_range(1..n as i32 - 1);
    match rng.gen_range(0..3) {
        0 => {
            let u = BraidWord::random(n, rng.gen_range(0..=30), rng);
            Ok((u, BraidWord::random(n, rng.gen_range(0..=30), rng)))
        }
        1 => {
            let u = BraidWord::random(n, rng.gen_range(0..=24), rng);
            let relator = [i, i + 1, i, -(i + 1), -i, -(i + 1)];
            Ok((u.clone(), insert(&u, &relator, rng)?))
        }
        _ => {
            let u = BraidWord::random(n, rng.gen_range(0..=22), rng);
            let commutator = [i, i, i + 1, i + 1, -i, -i, -(i + 1), -(i + 1)];
            Ok((u.clone(), insert(&u, &commutator, rng)?))
        }
    }
}

fn insert(u: &BraidWord, piece: &[i32], rng: &mut ChaCha8Rng) -> Result<BraidWord> {
    let at = rng.gen_range(0..=u.len());
    let letters = u.letters()[..at]
        .iter()
        .chain(piece)
        .chain(&u.letters()[at..])
        .copied();
    BraidWord::new(u.n(), letters)
}

fn backend_agreement(seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut equal = 0;
    for _ in 0..1000 {
        let (u, v) = agreement_pair(&mut rng)?;
        // bypass the shared invariant filter so both backends really decide
        let by_free = free::artin_image(&u) == free::artin_image(&v);
        let by_linear = krammer::equal(&u, &v, rng.gen())?;
        if by_free != by_linear {
            return Err(Error::BackendDisagreement(format!("`{u}` vs `{v}`")));
        }
        equal += by_free as usize;
    }
    Ok(format!("1000 pairs, {equal} equal"))
}

fn roots_of_center(_: u64) -> Result<String> {
    let solver = Solver::default();
    for n in 4..=8 {
        let z = full_twist(n);
        let d = half_twist_all(n);
        let ok = solver.equal(&delta(n).pow(n as i64), &z)?
            && solver.equal(&gamma(n).pow(n as i64 - 1), &z)?
            && solver.equal(&d.pow(2), &z)?
            && solver.is_central(&z)?
            && !solver.is_central(&d)?;
        if !ok {
            return Err(fail(format!("roots of the center fail for n = {n}")));
        }
        for k in 1..=2 * n as i64 {
            if delta(n).pow(k).fixed_punctures().is_empty() == (k % n as i64 == 0) {
                return Err(fail(format!("delta^{k} fixed punctures wrong for n = {n}")));
            }
            if gamma(n).pow(k).fixed_punctures().is_empty() {
                return Err(fail(format!("gamma^{k} fixes nothing for n = {n}")));
            }
        }
    }
    Ok("n = 4..8".into())
}

/// A seeded mix of arc pairs: independent, equal by stabilizer, adjacent,
/// disjoint, and perturbed.
pub fn sample_arc_pairs(
    count: usize,
    max_n: usize,
    max_len: usize,
    seed: u64,
) -> Result<Vec<(Arc, Arc)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=max_n);
        let i = rng.gen_range(1..n);
        let beta = BraidWord::random(n, rng.gen_range(0..=max_len), &mut rng);
        let a = Arc::new(beta.clone(), i)?;
        let b = match rng.gen_range(0..5) {
            0 => Arc::new(
                BraidWord::random(n, rng.gen_range(0..=max_len), &mut rng),
                rng.gen_range(1..n),
            )?,
            1 => {
                let fix = stabilizer_word(n, i, &mut rng)?;
                Arc::new(beta.compose(&fix)?, i)?
            }
            2 => Arc::new(beta, if i + 1 < n { i + 1 } else { i - 1 })?,
            3 => {
                let far: Vec<usize> = (1..n).filter(|j| j.abs_diff(i) >= 2).collect();
                if far.is_empty() {
                    continue;
                }
                Arc::new(beta, far[rng.gen_range(0..far.len())])?
            }
            _ => {
                let g = BraidWord::random(n, rng.gen_range(1..=3), &mut rng);
                a.apply(&g)?
            }
        };
        if b.beta().len() <= max_len {
            out.push((a, b));
        }
    }
    Ok(out)
}

/// A short word fixing the straight arc `e_i`.
fn stabilizer_word(n: usize, i: usize, rng: &mut ChaCha8Rng) -> Result<BraidWord> {
    let allowed: Vec<i32> = (1..n)
        .filter(|&j| j == i || j.abs_diff(i) >= 2)
        .map(|j| j as i32)
        .collect();
    let len = rng.gen_range(1..=3);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let l = allowed[rng.gen_range(0..allowed.len())];
            if rng.gen() {
                l
            } else {
                -l
            }
        })
        .collect();
    BraidWord::new(n, letters)
}

/// Geometric facts about a pair: same arc, crossing number, shared ends.
fn geometry_of(a: &Arc, b: &Arc) -> Result<(bool, usize, usize)> {
    let (ca, cb) = (a.code()?, b.code()?);
    if ca == cb {
        return Ok((true, 0, 2));
    }
    let shared = [ca.start(), ca.end()]
        .iter()
        .filter(|p| [cb.start(), cb.end()].contains(p))
        .count();
    Ok((false, code_crossing_number(&ca, &cb)?, shared))
}

fn arc_pair_sample(seed: u64) -> Result<Vec<(Arc, Arc)>> {
    sample_arc_pairs(500, 7, 10, seed)
}

fn arc_equality(seed: u64) -> Result<String> {
    let oracle = ArcOracle::default();
    let mut equal = 0;
    for (a, b) in arc_pair_sample(seed)? {
        let same = geometry_of(&a, &b)?.0;
        if oracle.arcs_equal(&a, &b)? != same {
            return Err(fail(format!("equality disagrees on {a} | {b}")));
        }
        equal += same as usize;
    }
    Ok(format!("500 pairs, {equal} equal"))
}

fn disjointness(seed: u64) -> Result<String> {
    let oracle = ArcOracle::default();
    let mut disjoint = 0;
    for (a, b) in arc_pair_sample(seed)? {
        let (same, crossings, shared) = geometry_of(&a, &b)?;
        let geometric = !same && crossings == 0 && shared == 0;
        if oracle.disjoint(&a, &b)? != geometric {
            return Err(fail(format!("disjointness disagrees on {a} | {b}")));
        }
        disjoint += geometric as usize;
    }
    Ok(format!("500 pairs, {disjoint} disjoint"))
}

fn adjacency(seed: u64) -> Result<String> {
    let oracle = ArcOracle::default();
    let solver = Solver::default();
    let mut adjacent = Vec::new();
    for (a, b) in arc_pair_sample(seed)? {
        let (same, crossings, shared) = geometry_of(&a, &b)?;
        let geometric = !same && crossings == 0 && shared == 1;
        if oracle.adjacent(&a, &b)? != geometric {
            return Err(fail(format!("adjacency disagrees on {a} | {b}")));
        }
        if geometric {
            adjacent.push((a, b));
        }
    }
    if adjacent.len() < 50 {
        return Err(fail(format!(
            "only {} adjacent pairs in the sample",
            adjacent.len()
        )));
    }
    for (a, b) in &adjacent[..50] {
        let (ha, hb) = (a.half_twist().pow(2), b.half_twist().pow(2));
        if solver.braid_related(&ha, &hb)? {
            return Err(fail(format!(
                "squared half-twists braid-related for {a} | {b}"
            )));
        }
    }
    Ok(format!(
        "500 pairs, {} adjacent, 50 squared pairs unrelated",
        adjacent.len()
    ))
}

fn stabilizers(seed: u64) -> Result<String> {
    let oracle = ArcOracle::default();
    let solver = Solver::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7);
    let mut fixing = 0;
    for _ in 0..500 {
        let n = rng.gen_range(3..=7);
        let i = rng.gen_range(1..n);
        let a = Arc::new(BraidWord::random(n, rng.gen_range(0..=10), &mut rng), i)?;
        let f = if rng.gen() {
            a.beta().conjugate(&stabilizer_word(n, i, &mut rng)?)?
        } else {
            BraidWord::random(n, rng.gen_range(0..=10), &mut rng)
        };
        let image = a.apply(&f)?;
        let commutes = solver.commutes(&f, &a.half_twist())?;
        let fixed = oracle.arcs_equal(&image, &a)?;
        let drawn = image.code()? == a.code()?;
        if commutes != fixed || fixed != drawn {
            return Err(fail(format!(
                "stabilizer test disagrees for f = {f}, a = {a}"
            )));
        }
        fixing += fixed as usize;
    }
    Ok(format!("500 pairs, {fixing} fixing"))
}

/// Braid length of the random vertices used for straightening.
pub const VERTEX_WORD_LENGTH: usize = 10;

fn straightening(seed: u64) -> Result<String> {
    let oracle = ArcOracle::default();
    let mut worst = 0;
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (9, 3)] {
        for trial in 0..100 {
            let s = seed
                .wrapping_mul(1_000_003)
                .wrapping_add((n * 100 + k * 10) as u64 * 1000 + trial);
            let v = random_vertex(n, k, VERTEX_WORD_LENGTH, s)?;
            let out = straighten(&v)?;
            if out.outer_iterations > k {
                return Err(fail(format!(
                    "{} rounds for k = {k} from {v}",
                    out.outer_iterations
                )));
            }
            let report = check_path(&RawPath::from(&out.path), &oracle)?;
            if !report.ends_straight || out.path.first() != &v {
                return Err(fail(format!("bad certificate from {v}")));
            }
            worst = worst.max(out.path.len());
        }
    }
    for k in 2..=3 {
        let v = validate_vertex(
            (0..k)
                .map(|t| Arc::straight(2 * t + 1, 2 * k))
                .collect::<Result<_>>()?,
        )?;
        if !matches!(straighten(&v), Err(Error::UnsupportedParameters(_))) {
            return Err(fail(format!("n = 2k = {} was not rejected", 2 * k)));
        }
    }
    Ok(format!("600 vertices, longest path {worst}"))
}

fn straight_connectivity(_: u64) -> Result<String> {
    let oracle = ArcOracle::default();
    let mut pairs = 0;
    for n in 4..=7 {
        let all = straight_vertices(n, 2);
        let vertex = |idx: &[usize]| {
            validate_vertex(
                idx.iter()
                    .map(|&i| Arc::straight(i, n))
                    .collect::<Result<_>>()?,
            )
        };
        for a in &all {
            for b in &all {
                let (v, w) = (vertex(a)?, vertex(b)?);
                let engine = match straight_path(&v, &w) {
                    Ok(p) => {
                        let report = check_path(&RawPath::from(&p), &oracle)?;
                        let mut got: Vec<_> = p.last().codes().to_vec();
                        let mut want: Vec<_> = w.codes().to_vec();
                        got.sort();
                        want.sort();
                        report.ends_straight && got == want
                    }
                    Err(_) => false,
                };
                if engine != straight_reachable(n, 2, a, b) {
                    return Err(fail(format!(
                        "n = {n}: {a:?} to {b:?} disagrees with search"
                    )));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

/// The morphism configurations exercised by the suite.
pub fn morphism_configs(seed: u64) -> Result<Vec<MorphismSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x10);
    let mut out = Vec::new();
    for n in 4..=8 {
        for t in 1..=3 {
            out.push(MorphismSpec::new(MorphismKind::ZTwist { t }, n));
        }
        out.push(MorphismSpec::new(MorphismKind::Mirror, n));
        for t in 0..=2 {
            let h = BraidWord::random(n, rng.gen_range(0..=6), &mut rng);
            let mirror = rng.gen();
            out.push(MorphismSpec::new(
                MorphismKind::Geometric { h, mirror, t },
                n,
            ));
        }
        for s in 0..=2 {
            for t in 0..=2 {
                out.push(MorphismSpec::new(
                    MorphismKind::InclusionWithTwist { s, t },
                    n,
                ));
            }
        }
        if n <= 5 {
            out.push(MorphismSpec::new(MorphismKind::Cabling, n));
            out.push(MorphismSpec::new(MorphismKind::Doubling, n));
        }
    }
    Ok(out)
}

fn morphisms(seed: u64) -> Result<String> {
    let solver = Solver::default();
    let configs = morphism_configs(seed)?;
    let mut sampled = 0;
    for spec in &configs {
        let m = spec.build()?;
        if !verify_homomorphism(&m, &solver)?.passed() {
            return Err(fail(format!("{spec} is not a homomorphism")));
        }
        if spec.domain_n == 4 {
            let report = injectivity_sample(&m, 100, 8, seed, &solver)?;
            if !report.collisions.is_empty() {
                return Err(fail(format!("{spec} collides: {report}")));
            }
            sampled += 1;
        }
        if let MorphismKind::ZTwist { t } = spec.kind {
            let n = spec.domain_n as i64;
            if non_surjectivity_witness(spec)?.divisor != 1 + t * n * (n - 1) {
                return Err(fail(format!("{spec} witness divisor is wrong")));
            }
        }
    }
    Ok(format!(
        "{} morphisms verified, {sampled} sampled for injectivity",
        configs.len()
    ))
}
