//! Simultaneous placement of several normal-form arcs.
//!
//! Every piece of an arc is a chord of the upper or lower half-disk joining
//! two axis points. Placing arcs amounts to ordering their crossing points
//! along each axis segment. Two points on one segment are ordered by walking
//! both arcs in parallel until they part: chords in one half-disk must not
//! interleave, so the first place where the walks reach different axis
//! locations decides the order, and each shared segment passed on the way
//! back reverses it.

use std::cmp::Ordering;

use super::code::{ArcCode, Event, Side};

/// A crossing point: arc index and event index within that arc.
pub type PointId = (usize, usize);

/// A piece of an arc in one half-disk: `(half, left end, right end)`,
/// ends given as `(axis key, rank)`.
pub type Chord = (Side, (usize, usize), (usize, usize));

/// A joint placement of arcs: for each axis segment the crossing points
/// in left-to-right order.
#[derive(Debug, Clone)]
pub struct Layout {
    n: usize,
    arcs: Vec<ArcCode>,
    events: Vec<Vec<Event>>,
    segments: Vec<Vec<PointId>>,
    rank: Vec<Vec<usize>>,
}

impl Layout {
    pub fn new(arcs: &[ArcCode]) -> Layout {
        assert!(!arcs.is_empty(), "layout needs at least one arc");
        let n = arcs[0].n();
        assert!(arcs.iter().all(|a| a.n() == n), "arcs disagree on n");
        let events: Vec<Vec<Event>> = arcs.iter().map(ArcCode::events).collect();
        let mut layout = Layout {
            n,
            arcs: arcs.to_vec(),
            events,
            segments: vec![Vec::new(); n + 1],
            rank: Vec::new(),
        };
        for s in 0..=n {
            let mut merged: Vec<PointId> = Vec::new();
            for (a, arc) in arcs.iter().enumerate() {
                let mut own: Vec<PointId> = (1..=arc.complexity())
                    .filter(|&i| layout.events[a][i] == Event::Crossing(s))
                    .map(|i| (a, i))
                    .collect();
                merge_sort_by(&mut own, &|x, y| layout.compare_same_arc(*x, *y));
                merged = merge_by(merged, own, &|x, y| layout.compare_across(*x, *y));
            }
            layout.segments[s] = merged;
        }
        let mut rank: Vec<Vec<usize>> = events_len(&layout.events);
        for points in &layout.segments {
            for (r, &(a, i)) in points.iter().enumerate() {
                rank[a][i] = r;
            }
        }
        layout.rank = rank;
        while layout.remove_one_bigon() {}
        layout
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[ArcCode] {
        &self.arcs
    }

    /// Crossing points on segment `s`, left to right.
    pub fn segment(&self, s: usize) -> &[PointId] {
        &self.segments[s]
    }

    pub fn max_points_per_segment(&self) -> usize {
        self.segments.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// A sort key for any event along the axis, comparable across arcs.
    pub fn axis_position(&self, arc: usize, i: usize) -> (usize, usize) {
        let ev = self.events[arc][i];
        match ev {
            Event::Puncture(_) => (ev.axis_key(), 0),
            Event::Crossing(_) => (ev.axis_key(), self.rank[arc][i]),
        }
    }

    /// Rank of a crossing point within its segment.
    pub fn rank_of(&self, arc: usize, i: usize) -> usize {
        self.rank[arc][i]
    }

    pub fn events(&self, arc: usize) -> &[Event] {
        &self.events[arc]
    }

    /// Order of two points on one segment, walking arc `x` in direction
    /// `dx` and arc `y` in `dy` from the chords lying in the same half-disk.
    /// `None` when the walks never part before a shared end.
    fn walk(&self, x: PointId, dx: isize, y: PointId, dy: isize) -> Option<Ordering> {
        let (ex, ey) = (&self.events[x.0], &self.events[y.0]);
        let (mut px, mut py) = (x.1 as isize, y.1 as isize);
        let mut flips = 0usize;
        loop {
            let prev = ex[px as usize];
            let (nx, ny) = (px + dx, py + dy);
            let (a, b) = (ex[nx as usize], ey[ny as usize]);
            if a == b {
                match a {
                    Event::Puncture(_) => return None,
                    Event::Crossing(_) if x.0 == y.0 && nx == ny => return None,
                    Event::Crossing(_) => {
                        px = nx;
                        py = ny;
                        flips += 1;
                        continue;
                    }
                }
            }
            let here = prev.axis_key();
            let (ka, kb) = (a.axis_key(), b.axis_key());
            let same_side = (ka > here) == (kb > here);
            let mut ord = if same_side { kb.cmp(&ka) } else { ka.cmp(&kb) };
            if flips % 2 == 1 {
                ord = ord.reverse();
            }
            return Some(ord);
        }
    }

    /// Direction along `arc` whose first chord from point `i` lies in `half`.
    fn direction(&self, arc: usize, i: usize, half: Side) -> isize {
        if self.arcs[arc].piece_side(i) == half {
            1
        } else {
            -1
        }
    }

    fn compare_same_arc(&self, x: PointId, y: PointId) -> Ordering {
        if x == y {
            return Ordering::Equal;
        }
        for half in [Side::Upper, Side::Lower] {
            let dx = self.direction(x.0, x.1, half);
            let dy = self.direction(y.0, y.1, half);
            if let Some(o) = self.walk(x, dx, y, dy) {
                return o;
            }
        }
        x.1.cmp(&y.1)
    }

    /// Walks forward along `x`'s arc first, so that all pairs along one
    /// parallel run resolve at the same divergence point.
    fn compare_across(&self, x: PointId, y: PointId) -> Ordering {
        let half = self.arcs[x.0].piece_side(x.1);
        let dy = self.direction(y.0, y.1, half);
        if let Some(o) = self.walk(x, 1, y, dy) {
            return o;
        }
        self.walk(x, -1, y, -dy).unwrap_or(Ordering::Equal)
    }

    fn chord(&self, a: usize, piece: usize) -> ((usize, usize), (usize, usize)) {
        let p = self.axis_position(a, piece);
        let q = self.axis_position(a, piece + 1);
        (p.min(q), p.max(q))
    }

    /// Finds a bigon or half-bigon between two different arcs and removes
    /// it by swapping the rungs of its ladder. Each rung is a pair of
    /// adjacent points of the two arcs on one segment; swapping adjacent
    /// points of different arcs keeps both arcs simple, and only changes
    /// whether the chords through those two points interleave.
    fn remove_one_bigon(&mut self) -> bool {
        for a in 0..self.arcs.len() {
            for b in 0..self.arcs.len() {
                if a == b {
                    continue;
                }
                for i in 0..=self.arcs[a].complexity() {
                    for j in 0..=self.arcs[b].complexity() {
                        if let Some(rungs) = self.ladder(a, i, b, j) {
                            for (ea, eb) in rungs {
                                self.swap_points((a, ea), (b, eb));
                            }
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Rungs of a clean bigon or half-bigon with a corner at the crossing
    /// of chord `i` of arc `a` and chord `j` of arc `b`, if there is one.
    fn ladder(&self, a: usize, i: usize, b: usize, j: usize) -> Option<Vec<(usize, usize)>> {
        if self.arcs[a].piece_side(i) != self.arcs[b].piece_side(j) {
            return None;
        }
        let ((la, ra), (lb, rb)) = (self.chord(a, i), self.chord(b, j));
        if !interleave(la, ra, lb, rb) {
            return None;
        }
        // A bigon leaving the crossing through a quadrant that touches the
        // axis first meets it in two adjacent chord ends, one of each arc.
        let ends = |arc: usize, piece: usize| {
            let (p, q) = (
                self.axis_position(arc, piece),
                self.axis_position(arc, piece + 1),
            );
            [(p, piece, -1isize), (q, piece + 1, 1isize)]
        };
        for &(pa, ea, da) in &ends(a, i) {
            for &(pb, eb, db) in &ends(b, j) {
                let (lo, hi) = (pa.min(pb), pa.max(pb));
                let between = [la, ra, lb, rb].iter().any(|&e| lo < e && e < hi);
                if !between {
                    if let Some(r) = self.climb(a, ea, da, b, eb, db) {
                        return Some(r);
                    }
                }
            }
        }
        None
    }

    /// Follows two arcs away from a crossing through adjacent rungs until
    /// they cross again or meet at a common puncture.
    fn climb(
        &self,
        a: usize,
        mut ea: usize,
        da: isize,
        b: usize,
        mut eb: usize,
        db: isize,
    ) -> Option<Vec<(usize, usize)>> {
        let mut rungs = Vec::new();
        loop {
            match (self.events[a][ea], self.events[b][eb]) {
                (Event::Puncture(p), Event::Puncture(q)) if p == q && !rungs.is_empty() => {
                    return Some(rungs);
                }
                (Event::Crossing(s), Event::Crossing(t)) if s == t => {
                    if self.rank[a][ea].abs_diff(self.rank[b][eb]) != 1 {
                        return None;
                    }
                }
                _ => return None,
            }
            rungs.push((ea, eb));
            let pa = if da > 0 { ea } else { ea - 1 };
            let pb = if db > 0 { eb } else { eb - 1 };
            let ((la, ra), (lb, rb)) = (self.chord(a, pa), self.chord(b, pb));
            if interleave(la, ra, lb, rb) {
                return Some(rungs);
            }
            ea = (ea as isize + da) as usize;
            eb = (eb as isize + db) as usize;
        }
    }

    fn swap_points(&mut self, x: PointId, y: PointId) {
        let s = match self.events[x.0][x.1] {
            Event::Crossing(s) => s,
            Event::Puncture(_) => unreachable!("rungs are crossing points"),
        };
        let (rx, ry) = (self.rank[x.0][x.1], self.rank[y.0][y.1]);
        self.segments[s].swap(rx, ry);
        self.rank[x.0][x.1] = ry;
        self.rank[y.0][y.1] = rx;
    }

    /// Chords of arc `a` as `(half, left, right)` in axis positions.
    pub fn chords(&self, a: usize) -> Vec<Chord> {
        let m = self.arcs[a].complexity();
        (0..=m)
            .map(|i| {
                let p = self.axis_position(a, i);
                let q = self.axis_position(a, i + 1);
                (self.arcs[a].piece_side(i), p.min(q), p.max(q))
            })
            .collect()
    }

    /// Interior intersections between arcs `a` and `b` in this placement:
    /// pairs of chords in one half-disk whose ends strictly interleave.
    pub fn crossings_between(&self, a: usize, b: usize) -> usize {
        let ca = self.chords(a);
        let cb = self.chords(b);
        let mut count = 0;
        for &(ha, la, ra) in &ca {
            for &(hb, lb, rb) in &cb {
                if ha == hb && interleave(la, ra, lb, rb) {
                    count += 1;
                }
            }
        }
        count
    }
}

fn interleave<T: Ord>(l1: T, r1: T, l2: T, r2: T) -> bool {
    (l1 < l2 && l2 < r1 && r1 < r2) || (l2 < l1 && l1 < r2 && r2 < r1)
}

fn events_len(events: &[Vec<Event>]) -> Vec<Vec<usize>> {
    events.iter().map(|e| vec![0; e.len()]).collect()
}

/// Stable merge of two sorted runs; only ever compares the two heads, so
/// it yields a valid interleaving for any comparator.
fn merge_by<T: Copy>(left: Vec<T>, right: Vec<T>, cmp: &dyn Fn(&T, &T) -> Ordering) -> Vec<T> {
    let mut out = Vec::with_capacity(left.len() + right.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() && j < right.len() {
        if cmp(&right[j], &left[i]) == Ordering::Less {
            out.push(right[j]);
            j += 1;
        } else {
            out.push(left[i]);
            i += 1;
        }
    }
    out.extend_from_slice(&left[i..]);
    out.extend_from_slice(&right[j..]);
    out
}

fn merge_sort_by<T: Copy>(v: &mut Vec<T>, cmp: &dyn Fn(&T, &T) -> Ordering) {
    if v.len() <= 1 {
        return;
    }
    let right = v.split_off(v.len() / 2);
    let mut left = std::mem::take(v);
    let mut right = right;
    merge_sort_by(&mut left, cmp);
    merge_sort_by(&mut right, cmp);
    *v = merge_by(left, right, cmp);
}


#[cfg(test)]
mod exhaustive {
    use super::*;

    /// Every interleaving of two sequences, each kept in order.
    fn merges(x: &[PointId], y: &[PointId]) -> Vec<Vec<PointId>> {
        if x.is_empty() {
            return vec![y.to_vec()];
        }
        if y.is_empty() {
            return vec![x.to_vec()];
        }
        let mut out = Vec::new();
        for mut m in merges(&x[1..], y) {
            m.insert(0, x[0]);
            out.push(m);
        }
        for mut m in merges(x, &y[1..]) {
            m.insert(0, y[0]);
            out.push(m);
        }
        out
    }

    /// Fewest crossings over all placements that keep each arc's own order.
    fn exhaustive_minimum(a: &ArcCode, b: &ArcCode) -> usize {
        let base = Layout::new(&[a.clone(), b.clone()]);
        let n = a.n();
        let per_seg: Vec<Vec<Vec<PointId>>> = (0..=n)
            .map(|s| {
                let pts = base.segment(s);
                let xa: Vec<PointId> = pts.iter().copied().filter(|p| p.0 == 0).collect();
                let xb: Vec<PointId> = pts.iter().copied().filter(|p| p.0 == 1).collect();
                merges(&xa, &xb)
            })
            .collect();
        let mut best = usize::MAX;
        let mut idx = vec![0usize; n + 1];
        loop {
            let mut l = base.clone();
            for s in 0..=n {
                l.segments[s] = per_seg[s][idx[s]].clone();
                for (r, &(arc, i)) in l.segments[s].iter().enumerate() {
                    l.rank[arc][i] = r;
                }
            }
            best = best.min(l.crossings_between(0, 1));
            let mut s = 0;
            loop {
                if s > n {
                    return best;
                }
                idx[s] += 1;
                if idx[s] < per_seg[s].len() {
                    break;
                }
                idx[s] = 0;
                s += 1;
            }
        }
    }

    #[test]
    fn ladder_removal_reaches_the_exhaustive_minimum() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        while checked < 300 {
            let n = rng.gen_range(3..=5);
            let mut mk = || {
                let len = rng.gen_range(0..6);
                let w: Vec<i32> = (0..len)
                    .map(|_| {
                        let j = rng.gen_range(1..n) as i32;
                        if rng.gen() {
                            j
                        } else {
                            -j
                        }
                    })
                    .collect();
                ArcCode::straight(rng.gen_range(1..n), n)
                    .unwrap()
                    .apply_word(&w)
                    .unwrap()
            };
            let (a, b) = (mk(), mk());
            if a == b || a.complexity() + b.complexity() > 12 {
                continue;
            }
            let l = Layout::new(&[a.clone(), b.clone()]);
            assert_eq!(
                l.crossings_between(0, 1),
                exhaustive_minimum(&a, &b),
                "{a} | {b}"
            );
            checked += 1;
        }
    }
}
