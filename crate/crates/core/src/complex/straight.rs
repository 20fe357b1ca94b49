//! Vertices made of straight arcs only.
//!
//! Such a vertex is a set of indices `i` (arc `e_i`) pairwise at least two
//! apart. Replacing one straight arc by another that stays clear of the
//! rest is already an edge, so these vertices are joined by packing the
//! arcs leftwards onto `e_1, e_3, …, e_{2k-1}` one arc at a time.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::arc::Arc;
use crate::error::{Error, Result};
use crate::geometry::ArcCode;

use super::{EdgePath, Vertex};

/// All straight vertices of size `k` in the `n`-punctured disk.
pub fn straight_vertices(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            extend(n, k, i + 2, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, k, 1, &mut Vec::new(), &mut out);
    out
}

fn valid(n: usize, set: &BTreeSet<usize>) -> bool {
    set.iter().all(|&i| (1..n).contains(&i))
        && set.iter().zip(set.iter().skip(1)).all(|(a, b)| b - a >= 2)
}

/// Breadth-first reachability between straight vertices, moving one arc
/// at a time through straight vertices only.
pub fn straight_reachable(n: usize, k: usize, from: &[usize], to: &[usize]) -> bool {
    let start: BTreeSet<usize> = from.iter().copied().collect();
    let goal: BTreeSet<usize> = to.iter().copied().collect();
    let mut seen = HashMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start, ());
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            return true;
        }
        for &old in &cur {
            for new in 1..n {
                if cur.contains(&new) {
                    continue;
                }
                let mut next = cur.clone();
                next.remove(&old);
                next.insert(new);
                if next.len() == k && valid(n, &next) && !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

fn straight_arc(i: usize, n: usize) -> Result<(Arc, ArcCode)> {
    Ok((Arc::straight(i, n)?, ArcCode::straight(i, n)?))
}

/// Steps from an all-straight vertex to the packed vertex, keeping slots.
fn pack(v: &Vertex) -> Result<EdgePath> {
    let n = v.n();
    let mut order: Vec<(usize, usize)> = v
        .codes()
        .iter()
        .enumerate()
        .map(|(slot, c)| (c.straight_index().expect("all straight"), slot))
        .collect();
    order.sort();
    let mut path = EdgePath::trivial(v.clone());
    for (t, &(i, slot)) in order.iter().enumerate() {
        let target = 2 * t + 1;
        if i != target {
            let (arc, code) = straight_arc(target, n)?;
            let next = path.last().replaced(slot, arc, code);
            path.push(slot, next);
        }
    }
    Ok(path)
}

/// A path between two all-straight vertices through all-straight vertices.
pub fn straight_path(v: &Vertex, w: &Vertex) -> Result<EdgePath> {
    if !v.is_all_straight() || !w.is_all_straight() {
        return Err(Error::PreconditionViolated(
            "both vertices must be all-straight".into(),
        ));
    }
    crate::error::check_strands(v.n(), w.n())?;
    if v.k() != w.k() {
        return Err(Error::UnsupportedParameters(format!(
            "k = {} vs {}",
            v.k(),
            w.k()
        )));
    }
    let to_packed = pack(v)?;
    let from_packed = pack(w)?.reversed();
    let aligned = from_packed.aligned_to(to_packed.last())?;
    Ok(cancel_backtracks(to_packed.join(aligned)))
}

/// Removes immediate returns `v → w → v`.
pub(crate) fn cancel_backtracks(path: EdgePath) -> EdgePath {
    let mut out = EdgePath::trivial(path.vertices[0].clone());
    for (slot, v) in path
        .replaced
        .into_iter()
        .zip(path.vertices.into_iter().skip(1))
    {
        let n = out.vertices.len();
        if n >= 2 && out.vertices[n - 2].codes() == v.codes() {
            out.vertices.pop();
            out.replaced.pop();
        } else if out.last().codes() != v.codes() {
            out.push(slot, v);
        }
    }
    out
}
