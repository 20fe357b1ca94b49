//! Tuples of pairwise disjoint arcs and the basic move.

use super::code::ArcCode;
use super::diagram::{embed, ArcDiagram};
use super::layout::Layout;
use crate::error::{Error, Result};

/// Disjoint arcs with distinct ends, drawn together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleDiagram {
    arcs: Vec<ArcCode>,
}

impl TupleDiagram {
    /// Checks geometric disjointness and end distinctness.
    pub fn new(arcs: Vec<ArcCode>) -> Result<TupleDiagram> {
        if arcs.is_empty() {
            return Err(Error::UnsupportedParameters("empty tuple".into()));
        }
        let n = arcs[0].n();
        for a in &arcs {
            crate::error::check_strands(n, a.n())?;
        }
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                let (a, b) = (arcs[i].ends(), arcs[j].ends());
                if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                    return Err(Error::EndsCollide(i, j));
                }
            }
        }
        let layout = Layout::new(&arcs);
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                if arcs[i] == arcs[j] || layout.crossings_between(i, j) > 0 {
                    return Err(Error::NotDisjoint(i, j));
                }
            }
        }
        Ok(TupleDiagram { arcs })
    }

    pub fn n(&self) -> usize {
        self.arcs[0].n()
    }

    pub fn arcs(&self) -> &[ArcCode] {
        &self.arcs
    }

    /// Exact polylines for all arcs, pairwise disjoint.
    pub fn diagrams(&self) -> Vec<ArcDiagram> {
        embed(&self.arcs)
    }

    /// Crossings of all arcs with the straight corridor `e_j`.
    pub fn corridor_crossings(&self, j: usize) -> usize {
        self.arcs.iter().map(|a| a.crossings_of(j)).sum()
    }

    /// Pushes the arc crossing the straight corridor `e_j` closest to its
    /// end `p` off the corridor, around `p`. Returns the new tuple and the
    /// position of the replaced arc.
    pub fn basic_move(&self, corridor: &ArcCode, p: usize) -> Result<(TupleDiagram, usize)> {
        crate::error::check_strands(self.n(), corridor.n())?;
        let Some(j) = corridor.straight_index() else {
            return Err(Error::PreconditionViolated(format!(
                "corridor {corridor} is not a straight arc"
            )));
        };
        if p != j && p != j + 1 {
            return Err(Error::PreconditionViolated(format!(
                "{p} is not an end of the corridor"
            )));
        }
        if let Some(i) = self
            .arcs
            .iter()
            .position(|a| a.start() == p || a.end() == p)
        {
            return Err(Error::PreconditionViolated(format!(
                "{p} is an end of arc {i}"
            )));
        }
        let layout = Layout::new(&self.arcs);
        let points = layout.segment(j);
        let nearest = if p == j {
            points.first()
        } else {
            points.last()
        };
        let Some(&(which, event)) = nearest else {
            return Err(Error::PreconditionViolated(format!(
                "no arc crosses corridor {j}"
            )));
        };
        let old = &self.arcs[which];
        let detour = if p == j { j - 1 } else { j + 1 };
        let mut crossings = old.crossings().to_vec();
        crossings[event - 1] = detour;
        let new = ArcCode::new(old.n(), old.start(), old.first_side(), crossings, old.end())?;
        let mut arcs = self.arcs.clone();
        arcs[which] = new;
        Ok((TupleDiagram { arcs }, which))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::code_crossing_number;

    #[test]
    fn tuples_reject_collisions() {
        let e = |i| ArcCode::straight(i, 6).unwrap();
        assert!(TupleDiagram::new(vec![e(1), e(3)]).is_ok());
        assert!(matches!(
            TupleDiagram::new(vec![e(1), e(2)]),
            Err(Error::EndsCollide(0, 1))
        ));
        // from 1 over 2 and 3, back under 3 to 2
        let hook = ArcCode::new(6, 1, crate::geometry::Side::Upper, [3], 2).unwrap();
        assert!(matches!(
            TupleDiagram::new(vec![hook.clone(), e(3)]),
            Err(Error::NotDisjoint(0, 1))
        ));
        assert!(TupleDiagram::new(vec![hook, e(4)]).is_ok());
    }

    #[test]
    fn basic_move_clears_a_single_crossing() {
        // from 1 over 2, across segment 2, under 3 to 4
        let a = ArcCode::new(6, 1, crate::geometry::Side::Upper, [2], 4).unwrap();
        let t = TupleDiagram::new(vec![a.clone()]).unwrap();
        let corridor = ArcCode::straight(2, 6).unwrap();
        let before = t.corridor_crossings(2);
        assert!(before > 0, "{a}");
        let p = [2, 3]
            .into_iter()
            .find(|&p| a.start() != p && a.end() != p)
            .unwrap();
        let (moved, idx) = t.basic_move(&corridor, p).unwrap();
        assert_eq!(idx, 0);
        assert!(moved.corridor_crossings(2) < before);
    }

    #[test]
    fn basic_move_preconditions() {
        let e = |i| ArcCode::straight(i, 6).unwrap();
        let t = TupleDiagram::new(vec![e(1), e(4)]).unwrap();
        assert!(matches!(
            t.basic_move(&e(2), 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            t.basic_move(&e(2), 3),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn basic_moves_keep_arcs_disjoint_and_eventually_clear() {
        let e = |i| ArcCode::straight(i, 7).unwrap();
        let w = [2, -4, 3, 5, -1, 2];
        let arcs: Vec<ArcCode> = [1, 4]
            .iter()
            .map(|&i| e(i).apply_word(&w).unwrap())
            .collect();
        let mut t = TupleDiagram::new(arcs).unwrap();
        let ends: Vec<usize> = t.arcs().iter().flat_map(|a| [a.start(), a.end()]).collect();
        let Some(p) = (1..=7).find(|p| !ends.contains(p)) else {
            return;
        };
        let j = if p < 7 { p } else { p - 1 };
        let corridor = e(j);
        let mut moves = 0;
        while t.corridor_crossings(j) > 0 {
            let before = t.corridor_crossings(j);
            let (next, idx) = t.basic_move(&corridor, p).unwrap();
            assert!(next.corridor_crossings(j) < before);
            assert_eq!(next.arcs().len(), 2);
            assert_eq!(next.arcs()[1 - idx], t.arcs()[1 - idx]);
            t = TupleDiagram::new(next.arcs().to_vec()).unwrap();
            moves += 1;
            assert!(moves <= 100);
        }
        for a in t.arcs() {
            if a.straight_index() != Some(j) {
                let c = code_crossing_number(a, &corridor).unwrap();
                assert_eq!(c, 0);
            }
        }
    }
}
