//! Connecting any vertex to an all-straight one.
//!
//! Each round picks the free puncture `p` nearest the ends of non-straight
//! arcs and the nearest such end `q`. Straight arcs sitting between them are
//! shuffled one at a time onto the corridor next to `p`, and finally the
//! non-straight arc ending at `q` is swapped for the straight arc `p q`.
//! Before any arc is placed on a corridor the corridor is cleared by basic
//! moves at `p`, so every step is an edge of the complex.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arc::Arc;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::geometry::{ArcCode, TupleDiagram};

use super::straight::{cancel_backtracks, straight_path};
use super::{validate_vertex, EdgePath, Vertex};

/// Default cap on basic moves per straightening.
pub const DEFAULT_MOVE_BUDGET: usize = 100_000;

#[derive(Debug, Clone)]
pub struct Straightened {
    pub path: EdgePath,
    /// Rounds of the outer loop; each adds at least one straight arc.
    pub outer_iterations: usize,
    pub basic_moves: usize,
}

fn check_connected_range(n: usize, k: usize) -> Result<()> {
    if n <= 2 * k {
        return Err(Error::UnsupportedParameters(format!(
            "the complex is disconnected unless n > 2k (n = {n}, k = {k})"
        )));
    }
    Ok(())
}

struct Engine {
    path: EdgePath,
    moves: usize,
    budget: usize,
}

impl Engine {
    fn current(&self) -> &Vertex {
        self.path.last()
    }

    fn replace(&mut self, slot: usize, code: ArcCode) -> Result<()> {
        let (word, index) = code.straightening_word()?;
        let arc = Arc::new(BraidWord::new(code.n(), word)?, index)?;
        let next = self.current().replaced(slot, arc, code);
        self.path.push(slot, next);
        Ok(())
    }

    /// Basic moves at `p` until no arc crosses the corridor `e_j`.
    fn clear(&mut self, j: usize, p: usize) -> Result<()> {
        let corridor = ArcCode::straight(j, self.current().n())?;
        loop {
            let tuple = TupleDiagram::new(self.current().codes().to_vec())?;
            if tuple.corridor_crossings(j) == 0 {
                return Ok(());
            }
            let (moved, slot) = tuple.basic_move(&corridor, p)?;
            self.moves += 1;
            if self.moves > self.budget {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} basic moves",
                    self.budget
                )));
            }
            self.replace(slot, moved.arcs()[slot].clone())?;
        }
    }

    /// Clears the straight corridor between `p` and its neighbour `r`, then
    /// moves the arc in `slot` onto it.
    fn settle(&mut self, p: usize, r: usize, slot: usize) -> Result<()> {
        let j = p.min(r);
        self.clear(j, p)?;
        let target = ArcCode::straight(j, self.current().n())?;
        if self.current().codes()[slot] != target {
            let next = self
                .current()
                .replaced(slot, Arc::straight(j, target.n())?, target);
            self.path.push(slot, next);
        }
        Ok(())
    }

    fn round(&mut self) -> Result<()> {
        let v = self.current().clone();
        let n = v.n();
        let mut ends = BTreeSet::new();
        let mut loose = BTreeSet::new();
        for c in v.codes() {
            ends.extend([c.start(), c.end()]);
            if !c.is_straight() {
                loose.extend([c.start(), c.end()]);
            }
        }
        let dist = |x: usize, set: &BTreeSet<usize>| set.iter().map(|&y| x.abs_diff(y)).min();
        let mut p = (1..=n)
            .filter(|x| !ends.contains(x))
            .min_by_key(|&x| (dist(x, &loose), x))
            .expect("n > 2k leaves a free puncture");
        let q = *loose
            .iter()
            .min_by_key(|&&y| (p.abs_diff(y), y))
            .expect("a loose arc exists");
        let toward = |x: usize| if q > x { x + 1 } else { x - 1 };
        // shuffle the straight arcs standing between p and q
        while toward(p) != q {
            let r = toward(p);
            let slot = self.slot_ending_at(r).ok_or_else(|| {
                Error::PreconditionViolated(format!("puncture {r} between {p} and {q} is free"))
            })?;
            let far = toward(r);
            if !self.current().codes()[slot].is_straight()
                || self.current().codes()[slot].ends() != (r.min(far), r.max(far))
            {
                return Err(Error::PreconditionViolated(format!(
                    "arc at {r} between {p} and {q} is not a straight neighbour"
                )));
            }
            self.settle(p, r, slot)?;
            p = far;
        }
        let slot = self.slot_ending_at(q).expect("q is an end");
        self.settle(p, q, slot)
    }

    fn slot_ending_at(&self, x: usize) -> Option<usize> {
        self.current()
            .codes()
            .iter()
            .position(|c| c.start() == x || c.end() == x)
    }
}

/// A certified path from `v` to an all-straight vertex.
pub fn straighten(v: &Vertex) -> Result<Straightened> {
    straighten_with_budget(v, DEFAULT_MOVE_BUDGET)
}

pub fn straighten_with_budget(v: &Vertex, budget: usize) -> Result<Straightened> {
    check_connected_range(v.n(), v.k())?;
    let mut engine = Engine {
        path: EdgePath::trivial(v.clone()),
        moves: 0,
        budget,
    };
    let mut outer = 0;
    while !engine.current().is_all_straight() {
        let before = engine.current().straight_count();
        engine.round()?;
        outer += 1;
        if engine.current().straight_count() <= before {
            return Err(Error::PreconditionViolated(format!(
                "round {outer} did not add a straight arc"
            )));
        }
    }
    Ok(Straightened {
        path: cancel_backtracks(engine.path),
        outer_iterations: outer,
        basic_moves: engine.moves,
    })
}

/// A certified path from `v` to `w`: straighten both, then join the
/// straight ends through straight vertices.
pub fn connect(v: &Vertex, w: &Vertex) -> Result<EdgePath> {
    crate::error::check_strands(v.n(), w.n())?;
    if v.k() != w.k() {
        return Err(Error::UnsupportedParameters(format!(
            "k = {} vs {}",
            v.k(),
            w.k()
        )));
    }
    let there = straighten(v)?.path;
    let back = straighten(w)?.path.reversed();
    let middle = straight_path(there.last(), back.first())?;
    let path = there.join(middle);
    let back = back.aligned_to(path.last())?;
    Ok(cancel_backtracks(path.join(back)))
}

/// Applies a seeded random braid of length `word_length` to a random
/// all-straight vertex.
pub fn random_vertex(n: usize, k: usize, word_length: usize, seed: u64) -> Result<Vertex> {
    check_connected_range(n, k)?;
    if k < 2 {
        return Err(Error::UnsupportedParameters(format!("k = {k} < 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices = loop {
        let mut pool: Vec<usize> = (1..n).collect();
        let mut pick = Vec::with_capacity(k);
        while pick.len() < k && !pool.is_empty() {
            let i = pool.swap_remove(rng.gen_range(0..pool.len()));
            pick.push(i);
            pool.retain(|&x| x.abs_diff(i) >= 2);
        }
        if pick.len() == k {
            break pick;
        }
    };
    let f = BraidWord::random(n, word_length, &mut rng);
    let arcs = indices
        .into_iter()
        .map(|i| Arc::new(f.clone(), i))
        .collect::<Result<Vec<_>>>()?;
    validate_vertex(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::ArcOracle;
    use crate::braid::delta;
    use crate::complex::{check_path, RawPath};

    fn e(i: usize, n: usize) -> Arc {
        Arc::straight(i, n).unwrap()
    }

    #[test]
    fn straight_vertices_need_no_moves() {
        let v = validate_vertex(vec![e(1, 5), e(3, 5)]).unwrap();
        let s = straighten(&v).unwrap();
        assert!(s.path.is_empty());
        assert_eq!(s.outer_iterations, 0);
    }

    #[test]
    fn rotated_pair_straightens() {
        let d = delta(5);
        let v =
            validate_vertex(vec![e(1, 5).apply(&d).unwrap(), e(3, 5).apply(&d).unwrap()]).unwrap();
        let s = straighten(&v).unwrap();
        assert!(s.outer_iterations <= 2);
        assert!(s.path.last().is_all_straight());
        let report = check_path(&RawPath::from(&s.path), &ArcOracle::default()).unwrap();
        assert!(report.ends_straight);
    }

    #[test]
    fn half_full_disks_are_rejected() {
        let v = validate_vertex(vec![e(1, 4), e(3, 4)]).unwrap();
        assert!(matches!(
            straighten(&v),
            Err(Error::UnsupportedParameters(_))
        ));
        assert!(matches!(
            random_vertex(4, 2, 3, 1),
            Err(Error::UnsupportedParameters(_))
        ));
    }

    #[test]
    fn random_vertices_are_deterministic() {
        let a = random_vertex(7, 3, 8, 1).unwrap();
        let b = random_vertex(7, 3, 8, 1).unwrap();
        assert_eq!(a, b);
        assert!(random_vertex(5, 2, 0, 9).unwrap().is_all_straight());
    }

    #[test]
    fn connect_paths_check_out() {
        let v = random_vertex(7, 3, 6, 2).unwrap();
        let w = random_vertex(7, 3, 6, 3).unwrap();
        let p = connect(&v, &w).unwrap();
        assert_eq!(p.first(), &v);
        let mut last: Vec<_> = p.last().codes().to_vec();
        let mut want: Vec<_> = w.codes().to_vec();
        last.sort();
        want.sort();
        assert_eq!(last, want);
        check_path(&RawPath::from(&p), &ArcOracle::default()).unwrap();
        let same = connect(&v, &v).unwrap();
        assert!(same.is_empty());
        let x = validate_vertex(vec![e(1, 6), e(3, 6)]).unwrap();
        let y = validate_vertex(vec![e(1, 6), e(4, 6)]).unwrap();
        assert_eq!(connect(&x, &y).unwrap().len(), 1);
    }
}
