//! The complex of k-tuples of disjoint arcs: vertices, edges, edge paths,
//! and an independent certificate checker.
//!
//! A vertex is a k-tuple of pairwise disjoint arcs with all 2k ends
//! distinct; two vertices span an edge when they share exactly k-1 arcs.

pub mod straight;
pub mod straighten;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::arc::{Arc, ArcOracle};
use crate::error::{check_strands, Error, Result};
use crate::geometry::{ArcCode, TupleDiagram};

pub use straight::{straight_path, straight_reachable, straight_vertices};
pub use straighten::{connect, random_vertex, straighten, straighten_with_budget, Straightened};

/// A validated k-tuple of arcs together with its geometric realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    n: usize,
    arcs: Vec<Arc>,
    codes: Vec<ArcCode>,
}

fn check_size(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::UnsupportedParameters(format!("k = {k} < 2")));
    }
    if n < 2 * k {
        return Err(Error::UnsupportedParameters(format!(
            "n = {n} < 2k = {}",
            2 * k
        )));
    }
    Ok(())
}

/// Validates a tuple algebraically: distinct ends, then pairwise
/// commuting half-twists.
pub fn validate_vertex(arcs: Vec<Arc>) -> Result<Vertex> {
    validate_with(&ArcOracle::default(), arcs)
}

pub fn validate_with(oracle: &ArcOracle, arcs: Vec<Arc>) -> Result<Vertex> {
    let n = arcs.first().map_or(0, Arc::n);
    for a in &arcs {
        check_strands(n, a.n())?;
    }
    check_size(n, arcs.len())?;
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            let (a, b) = (arcs[i].ends(), arcs[j].ends());
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                return Err(Error::EndsCollide(i, j));
            }
        }
    }
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if !oracle.disjoint(&arcs[i], &arcs[j])? {
                return Err(Error::NotDisjoint(i, j));
            }
        }
    }
    Vertex::trusted(arcs)
}

impl Vertex {
    /// Builds the geometric side without re-running the algebraic checks.
    pub(crate) fn trusted(arcs: Vec<Arc>) -> Result<Vertex> {
        let codes = arcs.iter().map(Arc::code).collect::<Result<Vec<_>>>()?;
        Ok(Vertex {
            n: arcs[0].n(),
            arcs,
            codes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn codes(&self) -> &[ArcCode] {
        &self.codes
    }

    pub fn diagram(&self) -> Result<TupleDiagram> {
        TupleDiagram::new(self.codes.clone())
    }

    pub fn straight_count(&self) -> usize {
        self.codes.iter().filter(|c| c.is_straight()).count()
    }

    pub fn is_all_straight(&self) -> bool {
        self.straight_count() == self.k()
    }

    /// Replaces the arc in slot `slot`.
    pub(crate) fn replaced(&self, slot: usize, arc: Arc, code: ArcCode) -> Vertex {
        let mut v = self.clone();
        v.arcs[slot] = arc;
        v.codes[slot] = code;
        v
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertex {} {}", self.n, self.k())?;
        for a in &self.arcs {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Parses a `vertex n k` header followed by `k` arc lines (unvalidated).
fn parse_block<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Result<Option<Vec<Arc>>> {
    let Some(header) = lines.next() else {
        return Ok(None);
    };
    let parts: Vec<&str> = header.split_whitespace().collect();
    let bad = || Error::Parse(format!("expected `vertex n k`, got `{header}`"));
    if parts.len() != 3 || parts[0] != "vertex" {
        return Err(bad());
    }
    let n: usize = parts[1].parse().map_err(|_| bad())?;
    let k: usize = parts[2].parse().map_err(|_| bad())?;
    let mut arcs = Vec::with_capacity(k);
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("vertex block ends early".into()))?;
        let arc: Arc = line.parse()?;
        check_strands(n, arc.n())?;
        arcs.push(arc);
    }
    Ok(Some(arcs))
}

fn content_lines(s: &str) -> impl Iterator<Item = &str> {
    s.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Reads the arcs of a vertex without validating them.
pub fn parse_vertex_arcs(s: &str) -> Result<Vec<Arc>> {
    let mut lines = content_lines(s);
    let arcs = parse_block(&mut lines)?.ok_or_else(|| Error::Parse("empty vertex".into()))?;
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected line `{extra}`")));
    }
    Ok(arcs)
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        validate_vertex(parse_vertex_arcs(s)?)
    }
}

/// Consecutive vertices with the slot replaced at each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePath {
    pub vertices: Vec<Vertex>,
    pub replaced: Vec<usize>,
}

impl EdgePath {
    pub fn trivial(v: Vertex) -> EdgePath {
        EdgePath {
            vertices: vec![v],
            replaced: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.replaced.len()
    }

    pub fn is_empty(&self) -> bool {
        self.replaced.is_empty()
    }

    pub fn first(&self) -> &Vertex {
        &self.vertices[0]
    }

    pub fn last(&self) -> &Vertex {
        self.vertices.last().expect("paths are never empty")
    }

    pub(crate) fn push(&mut self, slot: usize, v: Vertex) {
        self.replaced.push(slot);
        self.vertices.push(v);
    }

    /// The same path walked backwards.
    pub fn reversed(&self) -> EdgePath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut replaced = self.replaced.clone();
        replaced.reverse();
        EdgePath { vertices, replaced }
    }

    /// The same path with slots renamed so that its first vertex lists its
    /// arcs in the order of `v`, which must hold the same arcs.
    pub(crate) fn aligned_to(&self, v: &Vertex) -> Result<EdgePath> {
        let first = self.first().codes();
        let mut perm = vec![usize::MAX; first.len()];
        for (s, c) in first.iter().enumerate() {
            perm[s] = v
                .codes()
                .iter()
                .position(|d| d == c)
                .ok_or_else(|| Error::PreconditionViolated("paths do not meet".into()))?;
        }
        let vertices = self
            .vertices
            .iter()
            .map(|x| {
                let mut arcs = x.arcs.clone();
                let mut codes = x.codes.clone();
                for s in 0..perm.len() {
                    arcs[perm[s]] = x.arcs[s].clone();
                    codes[perm[s]] = x.codes[s].clone();
                }
                Vertex {
                    n: x.n,
                    arcs,
                    codes,
                }
            })
            .collect();
        let replaced = self.replaced.iter().map(|&r| perm[r]).collect();
        let mut out = EdgePath { vertices, replaced };
        // the shared vertex keeps the caller's own algebraic representatives
        out.vertices[0] = v.clone();
        Ok(out)
    }

    /// Concatenates a path starting where this one ends.
    pub fn join(mut self, other: EdgePath) -> EdgePath {
        debug_assert_eq!(self.last().codes(), other.first().codes());
        self.vertices.extend(other.vertices.into_iter().skip(1));
        self.replaced.extend(other.replaced);
        self
    }
}

impl fmt::Display for EdgePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                writeln!(f, "-- replaced {}", self.replaced[i - 1])?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// An edge path as read from text, before any checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPath {
    pub vertices: Vec<Vec<Arc>>,
    pub replaced: Vec<usize>,
}

impl FromStr for RawPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s).peekable();
        let mut vertices = Vec::new();
        let mut replaced = Vec::new();
        loop {
            let arcs =
                parse_block(&mut lines)?.ok_or_else(|| Error::Parse("missing vertex".into()))?;
            vertices.push(arcs);
            match lines.next() {
                None => break,
                Some(l) => {
                    let idx = l
                        .strip_prefix("-- replaced")
                        .and_then(|r| r.trim().parse().ok())
                        .ok_or_else(|| {
                            Error::Parse(format!("expected `-- replaced <index>`, got `{l}`"))
                        })?;
                    replaced.push(idx);
                }
            }
        }
        Ok(RawPath { vertices, replaced })
    }
}

/// Outcome of checking a path certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCheck {
    pub vertices: usize,
    pub edges: usize,
    /// Whether every arc of the last vertex is straight.
    pub ends_straight: bool,
}

/// Exactly `k-1` arcs of `v` match arcs of `w` under `arcs_equal`.
pub fn is_edge(v: &Vertex, w: &Vertex) -> Result<bool> {
    edge_with(&mut Checker::new(ArcOracle::default()), v.arcs(), w.arcs())
}

/// Memoizing wrapper around the algebraic predicates.
struct Checker {
    oracle: ArcOracle,
    equal: HashMap<(Arc, Arc), bool>,
    disjoint: HashMap<(Arc, Arc), bool>,
}

impl Checker {
    fn new(oracle: ArcOracle) -> Self {
        Self {
            oracle,
            equal: HashMap::new(),
            disjoint: HashMap::new(),
        }
    }

    fn equal(&mut self, a: &Arc, b: &Arc) -> Result<bool> {
        if a == b {
            return Ok(true);
        }
        let key = (a.clone(), b.clone());
        if let Some(&r) = self.equal.get(&key) {
            return Ok(r);
        }
        let r = self.oracle.arcs_equal(a, b)?;
        self.equal.insert(key, r);
        Ok(r)
    }

    fn vertex(&mut self, arcs: &[Arc]) -> Result<()> {
        let n = arcs.first().map_or(0, Arc::n);
        for a in arcs {
            check_strands(n, a.n())?;
        }
        check_size(n, arcs.len())?;
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                let (a, b) = (arcs[i].ends(), arcs[j].ends());
                if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                    return Err(Error::EndsCollide(i, j));
                }
            }
        }
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                let key = (arcs[i].clone(), arcs[j].clone());
                let ok = match self.disjoint.get(&key) {
                    Some(&r) => r,
                    None => {
                        let r = self.oracle.disjoint(&arcs[i], &arcs[j])?;
                        self.disjoint.insert(key, r);
                        r
                    }
                };
                if !ok {
                    return Err(Error::NotDisjoint(i, j));
                }
            }
        }
        Ok(())
    }

    /// Algebraic straightness: equal to `e_j` for the adjacent ends `j, j+1`.
    fn straight(&mut self, a: &Arc) -> Result<bool> {
        let (lo, hi) = a.ends();
        if hi != lo + 1 {
            return Ok(false);
        }
        self.equal(a, &Arc::straight(lo, a.n())?)
    }
}

fn edge_with(checker: &mut Checker, v: &[Arc], w: &[Arc]) -> Result<bool> {
    if v.len() != w.len() || v.is_empty() {
        return Ok(false);
    }
    check_strands(v[0].n(), w[0].n())?;
    // greedy matching is exact here: arcs within one vertex are pairwise
    // distinct, so each arc of v equals at most one arc of w
    let mut used = vec![false; w.len()];
    let mut shared = 0;
    for a in v {
        for (j, b) in w.iter().enumerate() {
            if !used[j] && checker.equal(a, b)? {
                used[j] = true;
                shared += 1;
                break;
            }
        }
    }
    Ok(shared + 1 == v.len())
}

/// Checks a path certificate using only the algebraic predicates: every
/// vertex valid, every step an edge replacing the stated slot.
pub fn check_path(path: &RawPath, oracle: &ArcOracle) -> Result<PathCheck> {
    if path.vertices.is_empty() || path.replaced.len() + 1 != path.vertices.len() {
        return Err(Error::PreconditionViolated(
            "path shape is inconsistent".into(),
        ));
    }
    let mut checker = Checker::new(*oracle);
    for (i, arcs) in path.vertices.iter().enumerate() {
        checker
            .vertex(arcs)
            .map_err(|e| Error::PreconditionViolated(format!("vertex {i} is invalid: {e}")))?;
    }
    for (i, pair) in path.vertices.windows(2).enumerate() {
        if !edge_with(&mut checker, &pair[0], &pair[1])? {
            return Err(Error::PreconditionViolated(format!(
                "step {i} is not an edge"
            )));
        }
        let slot = path.replaced[i];
        let (a, b) = (&pair[0], &pair[1]);
        if slot >= a.len() || checker.equal(&a[slot], &b[slot])? {
            return Err(Error::PreconditionViolated(format!(
                "step {i} does not replace slot {slot}"
            )));
        }
    }
    let last = path.vertices.last().expect("non-empty");
    let mut ends_straight = true;
    for a in last {
        ends_straight &= checker.straight(a)?;
    }
    Ok(PathCheck {
        vertices: path.vertices.len(),
        edges: path.replaced.len(),
        ends_straight,
    })
}

impl From<&EdgePath> for RawPath {
    fn from(p: &EdgePath) -> Self {
        RawPath {
            vertices: p.vertices.iter().map(|v| v.arcs().to_vec()).collect(),
            replaced: p.replaced.clone(),
        }
    }
}

/// DOT graph of `v` and the vertices obtained by swapping one of its arcs
/// for a candidate arc.
pub fn neighborhood_dot(v: &Vertex, candidates: &[Arc]) -> Result<String> {
    let oracle = ArcOracle::default();
    let label = |arcs: &[Arc]| {
        arcs.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join("\\n")
    };
    let mut out = String::from("graph neighborhood {\n  node [shape=box];\n");
    out.push_str(&format!(
        "  v0 [label=\"{}\", style=bold];\n",
        label(v.arcs())
    ));
    let mut count = 0;
    for slot in 0..v.k() {
        for c in candidates {
            check_strands(v.n(), c.n())?;
            if oracle.arcs_equal(&v.arcs()[slot], c)? {
                continue;
            }
            let mut arcs = v.arcs().to_vec();
            arcs[slot] = c.clone();
            if validate_with(&oracle, arcs.clone()).is_err() {
                continue;
            }
            count += 1;
            out.push_str(&format!("  v{count} [label=\"{}\"];\n", label(&arcs)));
            out.push_str(&format!("  v0 -- v{count} [label=\"{slot}\"];\n"));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, n: usize) -> Arc {
        Arc::straight(i, n).unwrap()
    }

    #[test]
    fn vertex_validation() {
        assert!(validate_vertex(vec![e(1, 5), e(3, 5)]).is_ok());
        assert!(matches!(
            validate_vertex(vec![e(1, 5), e(2, 5)]),
            Err(Error::EndsCollide(0, 1))
        ));
        assert!(validate_vertex(vec![e(1, 7), e(3, 7), e(5, 7)]).is_ok());
        assert!(matches!(
            validate_vertex(vec![e(1, 5), e(3, 5), e(4, 5)]),
            Err(Error::UnsupportedParameters(_))
        ));
        let hook: Arc = "6; 1 @ 2 2".parse().unwrap();
        assert!(matches!(
            validate_vertex(vec![hook.clone(), e(3, 6)]),
            Err(Error::NotDisjoint(0, 1))
        ));
        assert!(validate_vertex(vec![hook, e(4, 6)]).is_ok());
    }

    #[test]
    fn edges() {
        let v = validate_vertex(vec![e(1, 6), e(3, 6)]).unwrap();
        let w = validate_vertex(vec![e(1, 6), e(4, 6)]).unwrap();
        let x = validate_vertex(vec![e(2, 6), e(5, 6)]).unwrap();
        assert!(is_edge(&v, &w).unwrap());
        assert!(!is_edge(&v, &v).unwrap());
        assert!(!is_edge(&v, &x).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let v = validate_vertex(vec![e(1, 6), "6; 4 @ 5 -3".parse().unwrap()]).unwrap();
        let text = v.to_string();
        assert_eq!(text, "vertex 6 2\n6; 1 @\n6; 4 @ 5 -3\n");
        assert_eq!(text.parse::<Vertex>().unwrap(), v);
    }

    #[test]
    fn checker_rejects_bad_certificates() {
        let v = validate_vertex(vec![e(1, 6), e(3, 6)]).unwrap();
        let w = validate_vertex(vec![e(1, 6), e(4, 6)]).unwrap();
        let x = validate_vertex(vec![e(2, 6), e(5, 6)]).unwrap();
        let oracle = ArcOracle::default();
        let good = RawPath {
            vertices: vec![v.arcs().to_vec(), w.arcs().to_vec()],
            replaced: vec![1],
        };
        let report = check_path(&good, &oracle).unwrap();
        assert_eq!(report.edges, 1);
        assert!(report.ends_straight);
        let wrong_slot = RawPath {
            replaced: vec![0],
            ..good.clone()
        };
        assert!(check_path(&wrong_slot, &oracle).is_err());
        let jump = RawPath {
            vertices: vec![v.arcs().to_vec(), x.arcs().to_vec()],
            replaced: vec![0],
        };
        assert!(check_path(&jump, &oracle).is_err());
        let text = "vertex 6 2\n6; 1 @\n6; 3 @\n-- replaced 1\nvertex 6 2\n6; 1 @\n6; 4 @\n";
        let parsed: RawPath = text.parse().unwrap();
        assert!(check_path(&parsed, &oracle).is_ok());
    }

    #[test]
    fn dot_lists_neighbors() {
        let v = validate_vertex(vec![e(1, 6), e(3, 6)]).unwrap();
        let dot = neighborhood_dot(&v, &[e(4, 6), e(5, 6), e(2, 6)]).unwrap();
        assert!(dot.starts_with("graph neighborhood {"));
        // slot 1 -> e4, e5 valid; slot 0 -> e5 valid; e2 collides everywhere
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
