//! Explicit polyline arcs with exact rational coordinates.
//!
//! A diagram is turned into its normal-form code by reading off where it
//! crosses the axis; codes are turned back into polylines by a fixed joint
//! embedding in which every chord of a half-disk is drawn as a box (two legs
//! and a horizontal top), nested chords lower than the chords around them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::code::{ArcCode, Event, Side};
use super::layout::Layout;
use crate::error::{Error, Result};

/// Default cap on polyline segments per diagram.
pub const DEFAULT_SEGMENT_BUDGET: usize = 100_000;

pub type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn ratio(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Point {
        Point { x, y }
    }

    pub fn puncture(j: usize) -> Point {
        Point::new(q(j as i64), Q::zero())
    }
}

/// An embedded arc: a simple polyline between two distinct punctures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    n: usize,
    vertices: Vec<Point>,
}

impl ArcDiagram {
    /// Validates and wraps a polyline.
    pub fn new(n: usize, vertices: Vec<Point>) -> Result<ArcDiagram> {
        let bad = |m: String| Err(Error::UnsupportedParameters(m));
        if n < 2 {
            return bad(format!("n = {n} < 2"));
        }
        if vertices.len() < 2 {
            return bad("a diagram needs at least two vertices".into());
        }
        let d = ArcDiagram { n, vertices };
        let (Some(a), Some(b)) = (d.puncture_at(&d.vertices[0]), d.puncture_at(d.last())) else {
            return bad("diagram must start and end at punctures".into());
        };
        if a == b {
            return bad("diagram ends coincide".into());
        }
        for (i, v) in d.vertices.iter().enumerate() {
            if i != 0 && i + 1 != d.vertices.len() && d.puncture_at(v).is_some() {
                return bad(format!("vertex {i} sits on a puncture"));
            }
            if !d.inside_disk(v) {
                return bad(format!("vertex {i} leaves the disk"));
            }
        }
        for (i, w) in d.vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return bad(format!("segment {i} is degenerate"));
            }
            for j in 1..=n {
                let p = Point::puncture(j);
                if p != w[0] && p != w[1] && on_segment(&w[0], &w[1], &p) {
                    return bad(format!("segment {i} passes through puncture {j}"));
                }
            }
        }
        if !d.is_simple() {
            return bad("polyline intersects itself".into());
        }
        Ok(d)
    }

    /// The segment from `(i,0)` to `(i+1,0)`.
    pub fn straight(i: usize, n: usize) -> Result<ArcDiagram> {
        ArcCode::straight(i, n)?;
        Ok(ArcDiagram {
            n,
            vertices: vec![Point::puncture(i), Point::puncture(i + 1)],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    fn last(&self) -> &Point {
        &self.vertices[self.vertices.len() - 1]
    }

    fn puncture_at(&self, p: &Point) -> Option<usize> {
        if !p.y.is_zero() || !p.x.is_integer() {
            return None;
        }
        let j = p.x.to_integer();
        (1..=self.n).find(|&k| BigInt::from(k) == j)
    }

    /// Disk of radius `n + 1` centred at `((n+1)/2, 0)`.
    fn inside_disk(&self, p: &Point) -> bool {
        let cx = ratio(self.n as i64 + 1, 2);
        let r = q(self.n as i64 + 1);
        let dx = &p.x - cx;
        &dx * &dx + &p.y * &p.y < &r * &r
    }

    pub fn ends(&self) -> (usize, usize) {
        let a = self.puncture_at(&self.vertices[0]).expect("validated");
        let b = self.puncture_at(self.last()).expect("validated");
        (a.min(b), a.max(b))
    }

    /// Exact self-intersection test over all segment pairs.
    pub fn is_simple(&self) -> bool {
        let v = &self.vertices;
        let m = v.len() - 1;
        for i in 0..m {
            for j in i + 1..m {
                if j == i + 1 {
                    // consecutive segments may only share their joint
                    let d1 = (&v[i + 1].x - &v[i].x, &v[i + 1].y - &v[i].y);
                    let d2 = (&v[j + 1].x - &v[j].x, &v[j + 1].y - &v[j].y);
                    let cross = &d1.0 * &d2.1 - &d1.1 * &d2.0;
                    let dot = &d1.0 * &d2.0 + &d1.1 * &d2.1;
                    if cross.is_zero() && dot.is_negative() {
                        return false;
                    }
                } else if segments_meet(&v[i], &v[i + 1], &v[j], &v[j + 1]) {
                    return false;
                }
            }
        }
        true
    }

    /// Reads the normal-form code off the polyline. Points with `y >= 0`
    /// count as upper.
    pub fn code(&self) -> Result<ArcCode> {
        let v = &self.vertices;
        let (start, end) = (
            self.puncture_at(&v[0]).expect("validated"),
            self.puncture_at(self.last()).expect("validated"),
        );
        let side = |p: &Point| {
            if p.y.is_negative() {
                Side::Lower
            } else {
                Side::Upper
            }
        };
        let inner = &v[1..v.len() - 1];
        let first = inner.first().map_or(Side::Upper, side);
        let mut crossings = Vec::new();
        for w in inner.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            if side(a) == side(b) {
                continue;
            }
            let x = if a.y.is_zero() {
                a.x.clone()
            } else if b.y.is_zero() {
                b.x.clone()
            } else {
                &a.x + (&b.x - &a.x) * (-&a.y) / (&b.y - &a.y)
            };
            crossings.push(self.segment_of(&x)?);
        }
        ArcCode::new(self.n, start, first, crossings, end)
    }

    fn segment_of(&self, x: &Q) -> Result<usize> {
        if x.is_integer() && *x >= q(1) && *x <= q(self.n as i64) {
            return Err(Error::UnsupportedParameters(format!(
                "diagram passes through puncture {x}"
            )));
        }
        if *x < q(1) {
            return Ok(0);
        }
        if *x > q(self.n as i64) {
            return Ok(self.n);
        }
        Ok(x.floor().to_integer().try_into().expect("bounded by n"))
    }

    /// Isotopy invariant: the flat normal-form code.
    pub fn canonical(&self) -> Result<Vec<i64>> {
        Ok(self.code()?.canonical())
    }

    pub fn is_straight(&self) -> Result<bool> {
        Ok(self.code()?.is_straight())
    }

    /// Embeds a code on its own.
    pub fn from_code(code: &ArcCode) -> ArcDiagram {
        if let Some(i) = code.straight_index() {
            return ArcDiagram::straight(i, code.n()).expect("index in range");
        }
        embed(std::slice::from_ref(code))
            .pop()
            .expect("one arc in, one out")
    }

    /// Image under the half-twist `σ_{|letter|}^{±1}`, re-embedded.
    pub fn apply_generator(&self, letter: i32) -> Result<ArcDiagram> {
        Ok(ArcDiagram::from_code(
            &self.code()?.apply_generator(letter)?,
        ))
    }
}

fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let v = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == 0
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// Whether closed segments `ab` and `cd` share any point.
fn segments_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let (o1, o2, o3, o4) = (
        orient(a, b, c),
        orient(a, b, d),
        orient(c, d, a),
        orient(c, d, b),
    );
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

/// Intersection point of two non-parallel segments, if any.
fn intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<Point> {
    if !segments_meet(a, b, c, d) {
        return None;
    }
    let r = (&b.x - &a.x, &b.y - &a.y);
    let s = (&d.x - &c.x, &d.y - &c.y);
    let denom = &r.0 * &s.1 - &r.1 * &s.0;
    if denom.is_zero() {
        // collinear overlap: report the first shared endpoint
        return [c, d, a, b]
            .into_iter()
            .find(|p| on_segment(a, b, p) && on_segment(c, d, p))
            .cloned();
    }
    let t = ((&c.x - &a.x) * &s.1 - (&c.y - &a.y) * &s.0) / denom;
    Some(Point::new(&a.x + &t * &r.0, &a.y + &t * &r.1))
}

/// Distinct points where two polylines meet, ignoring common punctures.
pub fn polyline_crossings(d1: &ArcDiagram, d2: &ArcDiagram) -> usize {
    let mut points = BTreeSet::new();
    for u in d1.vertices.windows(2) {
        for v in d2.vertices.windows(2) {
            if let Some(p) = intersection(&u[0], &u[1], &v[0], &v[1]) {
                if d1.puncture_at(&p).is_none() {
                    points.insert(p);
                }
            }
        }
    }
    points.len()
}

/// Joint embedding of several codes: disjoint codes give disjoint polylines,
/// and any two chords meet at most once.
pub fn embed(codes: &[ArcCode]) -> Vec<ArcDiagram> {
    let layout = Layout::new(codes);
    let n = layout.n();
    let cmax = layout.max_points_per_segment() as i64;
    let mu = ratio(1, 3 * (cmax + 1));

    let axis_x = |arc: usize, i: usize| -> Q {
        match layout.events(arc)[i] {
            Event::Puncture(j) => q(j as i64),
            Event::Crossing(s) => {
                let c = layout.segment(s).len() as i64;
                q(s as i64) + ratio(layout.rank_of(arc, i) as i64 + 1, c + 1)
            }
        }
    };

    // chord (arc, piece) -> height rank within its half
    struct Chord {
        arc: usize,
        piece: usize,
        side: Side,
        left: Q,
        right: Q,
    }
    let mut chords = Vec::new();
    for (arc, code) in codes.iter().enumerate() {
        for piece in 0..=code.complexity() {
            let (x0, x1) = (axis_x(arc, piece), axis_x(arc, piece + 1));
            let (left, right) = if x0 < x1 { (x0, x1) } else { (x1, x0) };
            chords.push(Chord {
                arc,
                piece,
                side: code.piece_side(piece),
                left,
                right,
            });
        }
    }
    let mut heights: Vec<Vec<Q>> = codes
        .iter()
        .map(|c| vec![Q::zero(); c.complexity() + 1])
        .collect();
    for half in [Side::Upper, Side::Lower] {
        let mut own: Vec<&Chord> = chords.iter().filter(|c| c.side == half).collect();
        own.sort_by(|a, b| {
            (&a.right - &a.left)
                .cmp(&(&b.right - &b.left))
                .then_with(|| a.left.cmp(&b.left))
                .then_with(|| (a.arc, a.piece).cmp(&(b.arc, b.piece)))
        });
        let total = own.len() as i64;
        for (r, c) in own.iter().enumerate() {
            let h = ratio((r as i64 + 1) * (n as i64 + 1), 2 * (total + 1));
            heights[c.arc][c.piece] = if half == Side::Upper { h } else { -h };
        }
    }

    let mut out = Vec::with_capacity(codes.len());
    for (arc, code) in codes.iter().enumerate() {
        let events = layout.events(arc);
        let mut vertices = vec![Point::new(axis_x(arc, 0), Q::zero())];
        for piece in 0..=code.complexity() {
            let h = heights[arc][piece].clone();
            let (x0, x1) = (axis_x(arc, piece), axis_x(arc, piece + 1));
            let rightward = x1 > x0;
            let leg = |x: Q, ev: Event, outward: bool| -> Q {
                match ev {
                    Event::Puncture(_) if outward => x + mu.clone(),
                    Event::Puncture(_) => x - mu.clone(),
                    Event::Crossing(_) => x,
                }
            };
            vertices.push(Point::new(
                leg(x0.clone(), events[piece], rightward),
                h.clone(),
            ));
            vertices.push(Point::new(
                leg(x1.clone(), events[piece + 1], !rightward),
                h,
            ));
            vertices.push(Point::new(x1, Q::zero()));
        }
        out.push(ArcDiagram { n, vertices });
    }
    out
}

/// Puts two diagrams into joint normal position.
pub fn normalize(d1: &ArcDiagram, d2: &ArcDiagram) -> Result<(ArcDiagram, ArcDiagram)> {
    crate::error::check_strands(d1.n, d2.n)?;
    let mut both = embed(&[d1.code()?, d2.code()?]);
    let b = both.pop().expect("two arcs");
    let a = both.pop().expect("two arcs");
    Ok((a, b))
}

/// Interior crossings of two distinct arcs in joint normal position.
pub fn crossing_number(d1: &ArcDiagram, d2: &ArcDiagram) -> Result<usize> {
    crate::error::check_strands(d1.n, d2.n)?;
    let (c1, c2) = (d1.code()?, d2.code()?);
    code_crossing_number(&c1, &c2)
}

pub fn code_crossing_number(c1: &ArcCode, c2: &ArcCode) -> Result<usize> {
    crate::error::check_strands(c1.n(), c2.n())?;
    if c1 == c2 {
        return Err(Error::PreconditionViolated(
            "crossing number of an arc with itself".into(),
        ));
    }
    Ok(Layout::new(&[c1.clone(), c2.clone()]).crossings_between(0, 1))
}

/// Applies letters in functional order (last letter first), capping the
/// polyline size at `budget` segments.
pub fn realize_word(index: usize, n: usize, letters: &[i32], budget: usize) -> Result<ArcDiagram> {
    let mut code = ArcCode::straight(index, n)?;
    for &l in letters.iter().rev() {
        code = code.apply_generator(l)?;
        if 3 * (code.complexity() + 1) > budget {
            return Err(Error::BudgetExceeded(format!(
                "diagram needs more than {budget} segments"
            )));
        }
    }
    Ok(ArcDiagram::from_code(&code))
}

fn fmt_q(v: &Q) -> String {
    format!("{}:{}", v.numer(), v.denom())
}

fn parse_q(s: &str) -> Result<Q> {
    let err = || Error::Parse(format!("bad rational `{s}`"));
    let (a, b) = s.split_once(':').unwrap_or((s, "1"));
    let num: BigInt = a.trim().parse().map_err(|_| err())?;
    let den: BigInt = b.trim().parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Q::new(num, den))
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for p in &self.vertices {
            write!(f, " {}/{}", fmt_q(&p.x), fmt_q(&p.y))?;
        }
        Ok(())
    }
}

impl FromStr for ArcDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing `;` in `{s}`")))?;
        let n = crate::braid::parse_strands(head)?;
        let mut vertices = Vec::new();
        for tok in rest.split_whitespace() {
            let (x, y) = tok
                .split_once('/')
                .ok_or_else(|| Error::Parse(format!("bad point `{tok}`")))?;
            vertices.push(Point::new(parse_q(x)?, parse_q(y)?));
        }
        ArcDiagram::new(n, vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_is_a_segment() {
        let d = ArcDiagram::straight(1, 4).unwrap();
        assert_eq!(d.to_string(), "4; 1:1/0:1 2:1/0:1");
        assert!(d.is_straight().unwrap());
        assert!(ArcDiagram::straight(4, 4).is_err());
    }

    #[test]
    fn generator_on_diagrams() {
        let e1 = ArcDiagram::straight(1, 4).unwrap();
        assert!(e1.apply_generator(1).unwrap().is_straight().unwrap());
        let d = e1.apply_generator(2).unwrap();
        assert_eq!(d.code().unwrap().ends(), (1, 3));
        assert!(!d.is_straight().unwrap());
        let back = d.apply_generator(-2).unwrap();
        assert_eq!(back.canonical().unwrap(), e1.canonical().unwrap());
    }

    #[test]
    fn detour_across_the_axis_is_removed() {
        // from 1 up, down across segment 1, back up, to 2
        let d: ArcDiagram = "4; 1:1/0:1 5:4/1:1 3:2/-1:2 7:4/1:1 2:1/0:1"
            .parse()
            .unwrap();
        assert_eq!(d.code().unwrap().complexity(), 0);
        let (a, _) = normalize(&d, &ArcDiagram::straight(3, 4).unwrap()).unwrap();
        assert!(a.is_straight().unwrap());
    }

    #[test]
    fn crossing_counts() {
        let e1 = ArcDiagram::straight(1, 4).unwrap();
        let e2 = ArcDiagram::straight(2, 4).unwrap();
        let e3 = ArcDiagram::straight(3, 4).unwrap();
        assert_eq!(crossing_number(&e1, &e3).unwrap(), 0);
        assert_eq!(crossing_number(&e1, &e2).unwrap(), 0);
        assert!(crossing_number(&e1, &e1).is_err());
    }

    #[test]
    fn rejects_invalid_polylines() {
        assert!("4; 1:1/0:1 3:1/0:1".parse::<ArcDiagram>().is_err());
        assert!("4; 1:1/0:1 3:2/1:1 3:2/-1:1 1:1/1:2 2:1/0:1"
            .parse::<ArcDiagram>()
            .is_err());
        assert!("4; 1:1/0:1 1:1/0:1".parse::<ArcDiagram>().is_err());
        assert!("4; 1:1/0:1 1:1/9:1 2:1/0:1".parse::<ArcDiagram>().is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = realize_word(1, 5, &[2, -3, 1, 4], DEFAULT_SEGMENT_BUDGET).unwrap();
        let back: ArcDiagram = d.to_string().parse().unwrap();
        assert_eq!(back, d);
    }
}
