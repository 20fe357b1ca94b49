//! Homomorphisms between braid groups given by generator images.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{delta, full_twist, BraidWord};
use crate::error::{check_strands, Error, Result};
use crate::word_problem::Solver;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismKind {
    /// `σ_i ↦ σ_i z^t`.
    ZTwist { t: i64 },
    /// `σ_i ↦ h σ_i^{±1} h⁻¹ z^t`, inverted exponent iff `mirror`.
    Geometric { h: BraidWord, mirror: bool, t: i64 },
    /// `σ_i ↦ σ_i T^s z^t` in `B_{n+1}`, `T` the full twist of the first `n` strands.
    InclusionWithTwist { s: i64, t: i64 },
    /// `σ_i ↦ σ_i⁻¹`.
    Mirror,
    /// Each strand replaced by two parallel strands, in `B_{2n}`.
    Cabling,
    /// `σ_i ↦ σ_i σ_{n+i}` in `B_{2n}`.
    Doubling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismSpec {
    pub kind: MorphismKind,
    pub domain_n: usize,
}

impl MorphismSpec {
    pub fn new(kind: MorphismKind, domain_n: usize) -> MorphismSpec {
        MorphismSpec { kind, domain_n }
    }

    pub fn codomain_n(&self) -> usize {
        match self.kind {
            MorphismKind::InclusionWithTwist { .. } => self.domain_n + 1,
            MorphismKind::Cabling | MorphismKind::Doubling => 2 * self.domain_n,
            _ => self.domain_n,
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.domain_n;
        let min = match self.kind {
            MorphismKind::ZTwist { .. }
            | MorphismKind::Geometric { .. }
            | MorphismKind::InclusionWithTwist { .. } => 4,
            _ => 2,
        };
        if n < min {
            return Err(Error::UnsupportedParameters(format!(
                "n = {n} < {min} for this kind"
            )));
        }
        if let MorphismKind::Geometric { h, .. } = &self.kind {
            check_strands(n, h.n())?;
        }
        Ok(())
    }

    pub fn build(&self) -> Result<MorphismImages> {
        self.check()?;
        let n = self.domain_n;
        let m = self.codomain_n();
        let g = |l: i32| BraidWord::generator(m, l);
        let mut images = Vec::with_capacity(n - 1);
        for i in 1..n as i32 {
            let image = match &self.kind {
                MorphismKind::ZTwist { t } => g(i)?.compose(&full_twist(m).pow(*t))?,
                MorphismKind::Geometric { h, mirror, t } => {
                    let s = g(if *mirror { -i } else { i })?;
                    h.conjugate(&s)?.compose(&full_twist(m).pow(*t))?
                }
                MorphismKind::InclusionWithTwist { s, t } => g(i)?
                    .compose(&inner_full_twist(n)?.pow(*s))?
                    .compose(&full_twist(m).pow(*t))?,
                MorphismKind::Mirror => g(-i)?,
                MorphismKind::Cabling => BraidWord::new(m, [2 * i, 2 * i + 1, 2 * i - 1, 2 * i])?,
                MorphismKind::Doubling => BraidWord::new(m, [i, n as i32 + i])?,
            };
            images.push(image);
        }
        Ok(MorphismImages {
            domain_n: n,
            codomain_n: m,
            images,
        })
    }
}

/// `(σ_1 ⋯ σ_{n-1})^n` viewed in `B_{n+1}`.
pub fn inner_full_twist(n: usize) -> Result<BraidWord> {
    delta(n).pow(n as i64).widen(n + 1)
}

impl fmt::Display for MorphismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MorphismKind::ZTwist { t } => write!(f, "kind=z_twist t={t}")?,
            MorphismKind::Geometric { h, mirror, t } => {
                let h: Vec<String> = h.letters().iter().map(i32::to_string).collect();
                write!(f, "kind=geometric h={} mirror={mirror} t={t}", h.join(","))?
            }
            MorphismKind::InclusionWithTwist { s, t } => {
                write!(f, "kind=inclusion_with_twist s={s} t={t}")?
            }
            MorphismKind::Mirror => write!(f, "kind=mirror")?,
            MorphismKind::Cabling => write!(f, "kind=cabling")?,
            MorphismKind::Doubling => write!(f, "kind=doubling")?,
        }
        write!(f, " n={}", self.domain_n)
    }
}

impl FromStr for MorphismSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut fields = std::collections::BTreeMap::new();
        for token in s.split_whitespace() {
            let (k, v) = token
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{token}`")))?;
            if fields.insert(k, v).is_some() {
                return Err(Error::Parse(format!("duplicate key `{k}`")));
            }
        }
        let mut take = |k: &str| fields.remove(k);
        let int = |v: Option<&str>, k: &str| -> Result<i64> {
            match v {
                None => Ok(0),
                Some(v) => v
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer for {k}: `{v}`"))),
            }
        };
        let n: usize = take("n")
            .ok_or_else(|| Error::Parse("missing n".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad n".into()))?;
        let kind = match take("kind").ok_or_else(|| Error::Parse("missing kind".into()))? {
            "z_twist" => MorphismKind::ZTwist {
                t: int(take("t"), "t")?,
            },
            "geometric" => {
                let h = take("h").unwrap_or("");
                let letters = h
                    .split(',')
                    .filter(|x| !x.is_empty())
                    .map(|x| {
                        x.parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad letter `{x}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let mirror = match take("mirror").unwrap_or("false") {
                    "true" => true,
                    "false" => false,
                    other => return Err(Error::Parse(format!("bad mirror flag `{other}`"))),
                };
                MorphismKind::Geometric {
                    h: BraidWord::new(n, letters)?,
                    mirror,
                    t: int(take("t"), "t")?,
                }
            }
            "inclusion_with_twist" => MorphismKind::InclusionWithTwist {
                s: int(take("s"), "s")?,
                t: int(take("t"), "t")?,
            },
            "mirror" => MorphismKind::Mirror,
            "cabling" => MorphismKind::Cabling,
            "doubling" => MorphismKind::Doubling,
            other => return Err(Error::Parse(format!("unknown kind `{other}`"))),
        };
        if let Some(k) = fields.keys().next() {
            return Err(Error::Parse(format!("unexpected key `{k}`")));
        }
        Ok(MorphismSpec { kind, domain_n: n })
    }
}

/// Images of `σ_1 … σ_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismImages {
    domain_n: usize,
    codomain_n: usize,
    images: Vec<BraidWord>,
}

impl MorphismImages {
    pub fn new(domain_n: usize, images: Vec<BraidWord>) -> Result<MorphismImages> {
        if domain_n < 2 || images.len() != domain_n - 1 {
            return Err(Error::UnsupportedParameters(format!(
                "{} images for {domain_n} strands",
                images.len()
            )));
        }
        let codomain_n = images[0].n();
        for w in &images {
            check_strands(codomain_n, w.n())?;
        }
        Ok(MorphismImages {
            domain_n,
            codomain_n,
            images,
        })
    }

    pub fn domain_n(&self) -> usize {
        self.domain_n
    }

    pub fn codomain_n(&self) -> usize {
        self.codomain_n
    }

    pub fn images(&self) -> &[BraidWord] {
        &self.images
    }

    fn image(&self, letter: i32) -> BraidWord {
        let w = &self.images[letter.unsigned_abs() as usize - 1];
        if letter > 0 {
            w.clone()
        } else {
            w.invert()
        }
    }
}

/// `images <domain n> <codomain n>` followed by one word per line.
impl fmt::Display for MorphismImages {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "images {} {}", self.domain_n, self.codomain_n)?;
        for w in &self.images {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for MorphismImages {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty morphism".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [tag, dn, cn] = parts[..] else {
            return Err(Error::Parse(format!("bad header `{header}`")));
        };
        let parse = |x: &str| {
            x.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size `{x}`")))
        };
        if tag != "images" {
            return Err(Error::Parse(format!("bad header `{header}`")));
        }
        let (dn, cn) = (parse(dn)?, parse(cn)?);
        let images = lines.map(str::parse).collect::<Result<Vec<BraidWord>>>()?;
        let m = MorphismImages::new(dn, images)?;
        if m.codomain_n != cn {
            return Err(Error::StrandMismatch {
                left: cn,
                right: m.codomain_n,
            });
        }
        Ok(m)
    }
}

/// Substitutes images letter by letter.
pub fn apply_morphism(m: &MorphismImages, w: &BraidWord) -> Result<BraidWord> {
    check_strands(m.domain_n, w.n())?;
    let mut out = BraidWord::identity(m.codomain_n);
    for &l in w.letters() {
        out = out.compose(&m.image(l))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
    Braid(usize),
    /// `σ_i σ_j = σ_j σ_i` for `|i - j| >= 2`
    Commute(usize, usize),
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Braid(i) => write!(f, "braid {i} {}", i + 1),
            Relation::Commute(i, j) => write!(f, "commute {i} {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub relations: Vec<(Relation, bool)>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.1)
    }
}

impl fmt::Display for HomomorphismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, ok) in &self.relations {
            writeln!(f, "{r} {}", if *ok { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Checks every Artin relation of the domain on the images.
pub fn verify_homomorphism(m: &MorphismImages, solver: &Solver) -> Result<HomomorphismReport> {
    let n = m.domain_n;
    let mut relations = Vec::new();
    for i in 1..n {
        if i + 1 < n {
            let ok = solver.braid_related(&m.images[i - 1], &m.images[i])?;
            relations.push((Relation::Braid(i), ok));
        }
        for j in i + 2..n {
            let ok = solver.commutes(&m.images[i - 1], &m.images[j - 1])?;
            relations.push((Relation::Commute(i, j), ok));
        }
    }
    Ok(HomomorphismReport { relations })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub trials: usize,
    /// Drawn pairs that were already equal in the domain.
    pub equal_pairs: usize,
    pub collisions: Vec<(BraidWord, BraidWord)>,
}

impl fmt::Display for InjectivityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "trials {} equal_pairs {} collisions {}",
            self.trials,
            self.equal_pairs,
            self.collisions.len()
        )?;
        for (u, v) in &self.collisions {
            writeln!(f, "collision {u} | {v}")?;
        }
        Ok(())
    }
}

/// Draws `trials` seeded pairs of domain words of length at most `max_len`;
/// for each non-equal pair, requires the images to differ.
pub fn injectivity_sample(
    m: &MorphismImages,
    trials: usize,
    max_len: usize,
    seed: u64,
    solver: &Solver,
) -> Result<InjectivityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = InjectivityReport {
        trials,
        equal_pairs: 0,
        collisions: Vec::new(),
    };
    for _ in 0..trials {
        let la = rng.gen_range(0..=max_len);
        let lb = rng.gen_range(0..=max_len);
        let u = BraidWord::random(m.domain_n, la, &mut rng);
        let v = BraidWord::random(m.domain_n, lb, &mut rng);
        if solver.equal(&u, &v)? {
            report.equal_pairs += 1;
            continue;
        }
        if solver.equal(&apply_morphism(m, &u)?, &apply_morphism(m, &v)?)? {
            report.collisions.push((u, v));
        }
    }
    Ok(report)
}

/// Every image has exponent sum a multiple of `divisor` while `σ_1` has
/// exponent sum 1, so `σ_1` is not in the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectivityWitness {
    pub divisor: i64,
    pub image_sums: Vec<i64>,
    pub missing: BraidWord,
}

impl SurjectivityWitness {
    /// Re-derives the certificate from the images alone.
    pub fn holds(&self, m: &MorphismImages) -> bool {
        let sums: Vec<i64> = m.images.iter().map(BraidWord::exponent_sum).collect();
        self.divisor.abs() > 1
            && sums == self.image_sums
            && sums.iter().all(|s| s % self.divisor == 0)
            && self.missing.exponent_sum() % self.divisor != 0
    }
}

impl fmt::Display for SurjectivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sums: Vec<String> = self.image_sums.iter().map(i64::to_string).collect();
        writeln!(f, "divisor {}", self.divisor)?;
        writeln!(f, "image_exponent_sums {}", sums.join(" "))?;
        writeln!(
            f,
            "missing {} exponent_sum {}",
            self.missing,
            self.missing.exponent_sum()
        )
    }
}

pub fn non_surjectivity_witness(spec: &MorphismSpec) -> Result<SurjectivityWitness> {
    let MorphismKind::ZTwist { t } = spec.kind else {
        return Err(Error::UnsupportedParameters(
            "witness needs kind=z_twist".into(),
        ));
    };
    if t == 0 {
        return Err(Error::UnsupportedParameters(
            "t = 0 gives the identity".into(),
        ));
    }
    let m = spec.build()?;
    let n = spec.domain_n as i64;
    let witness = SurjectivityWitness {
        divisor: 1 + t * n * (n - 1),
        image_sums: m.images.iter().map(BraidWord::exponent_sum).collect(),
        missing: BraidWord::generator(spec.domain_n, 1)?,
    };
    if !witness.holds(&m) {
        return Err(Error::PreconditionViolated(
            "exponent sums do not match the divisor".into(),
        ));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> MorphismSpec {
        s.parse().unwrap()
    }

    #[test]
    fn spec_text_round_trip() {
        for s in [
            "kind=z_twist t=1 n=5",
            "kind=geometric h=1,-2 mirror=true t=2 n=4",
            "kind=geometric h= mirror=false t=0 n=4",
            "kind=inclusion_with_twist s=1 t=2 n=4",
            "kind=mirror n=5",
            "kind=cabling n=4",
            "kind=doubling n=4",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert!("kind=z_twist t=1".parse::<MorphismSpec>().is_err());
        assert!("kind=z_twist t=1 n=4 q=2".parse::<MorphismSpec>().is_err());
    }

    #[test]
    fn twisted_templates_need_four_strands() {
        assert!(matches!(
            spec("kind=z_twist t=1 n=3").build(),
            Err(Error::UnsupportedParameters(_))
        ));
        assert!(spec("kind=mirror n=3").build().is_ok());
    }

    #[test]
    fn identity_template() {
        let m = spec("kind=geometric h= mirror=false t=0 n=5")
            .build()
            .unwrap();
        for (i, w) in m.images().iter().enumerate() {
            assert_eq!(w.letters(), &[i as i32 + 1]);
        }
    }

    #[test]
    fn squares_fail_the_braid_relation() {
        let images = (1..4).map(|i| BraidWord::new(4, [i, i]).unwrap()).collect();
        let m = MorphismImages::new(4, images).unwrap();
        let report = verify_homomorphism(&m, &Solver::default()).unwrap();
        assert!(!report.passed());
        assert!(report
            .relations
            .iter()
            .all(|(r, ok)| matches!(r, Relation::Commute(..)) == *ok));
    }

    #[test]
    fn images_text_round_trip() {
        let m = spec("kind=doubling n=4").build().unwrap();
        assert_eq!(m.to_string().parse::<MorphismImages>().unwrap(), m);
    }

    #[test]
    fn witness_divisors() {
        assert_eq!(
            non_surjectivity_witness(&spec("kind=z_twist t=1 n=4"))
                .unwrap()
                .divisor,
            13
        );
        assert_eq!(
            non_surjectivity_witness(&spec("kind=z_twist t=2 n=4"))
                .unwrap()
                .divisor,
            25
        );
        assert!(matches!(
            non_surjectivity_witness(&spec("kind=z_twist t=0 n=4")),
            Err(Error::UnsupportedParameters(_))
        ));
    }

    #[test]
    fn apply_substitutes_letters() {
        let m = spec("kind=mirror n=4").build().unwrap();
        let w = BraidWord::new(4, [1, -2, 3]).unwrap();
        assert_eq!(apply_morphism(&m, &w).unwrap().letters(), &[-1, 2, -3]);
        assert!(apply_morphism(&m, &BraidWord::identity(4))
            .unwrap()
            .is_empty());
        assert!(matches!(
            apply_morphism(&m, &BraidWord::identity(5)),
            Err(Error::StrandMismatch { .. })
        ));
    }
}
