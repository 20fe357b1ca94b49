//! Normal forms of arcs relative to the puncture axis.
//!
//! Punctures sit at `(1,0), …, (n,0)`. The horizontal axis through them is
//! cut by the punctures into `n + 1` axis segments: segment `0` runs from
//! the boundary to puncture 1, segment `s` (for `1 <= s < n`) joins
//! punctures `s` and `s + 1`, and segment `n` runs from puncture `n` to the
//! boundary. These segments cut the disk into an upper and a lower
//! half-disk, so an arc is determined up to isotopy by the side it leaves
//! its first end on and the sequence of axis segments it crosses.
//!
//! A sequence is in normal form when it crosses no segment twice in a row
//! (a bigon) and neither end piece runs straight back across a segment
//! touching its own puncture (a half-bigon). Normal forms are unique, so
//! the reduced sequence is a complete isotopy invariant.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }

    /// `self` flipped `k` times.
    pub fn flipped(self, k: usize) -> Side {
        if k.is_multiple_of(2) {
            self
        } else {
            self.flip()
        }
    }
}

/// One point where an arc meets the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    Puncture(usize),
    Crossing(usize),
}

impl Event {
    /// Position along the axis: puncture `j` is `2j`, segment `s` is `2s+1`.
    pub fn axis_key(self) -> usize {
        match self {
            Event::Puncture(j) => 2 * j,
            Event::Crossing(s) => 2 * s + 1,
        }
    }
}

/// An arc in normal form, oriented from its smaller end to its larger end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcCode {
    n: usize,
    start: usize,
    first: Side,
    crossings: Vec<usize>,
    end: usize,
}

fn touches(puncture: usize, segment: usize) -> bool {
    segment == puncture || segment + 1 == puncture
}

impl ArcCode {
    /// Reduces an arbitrary crossing sequence to normal form.
    pub fn new(
        n: usize,
        start: usize,
        first: Side,
        crossings: impl IntoIterator<Item = usize>,
        end: usize,
    ) -> Result<ArcCode> {
        if n < 2 || start == end || !(1..=n).contains(&start) || !(1..=n).contains(&end) {
            return Err(Error::UnsupportedParameters(format!(
                "arc ends {start}, {end} invalid for n = {n}"
            )));
        }
        let mut first = first;
        let mut stack: Vec<usize> = Vec::new();
        for s in crossings {
            if s > n {
                return Err(Error::UnsupportedParameters(format!(
                    "segment {s} > n = {n}"
                )));
            }
            if stack.last() == Some(&s) {
                stack.pop();
            } else if stack.is_empty() && touches(start, s) {
                first = first.flip();
            } else {
                stack.push(s);
            }
        }
        while stack.last().is_some_and(|&s| touches(end, s)) {
            stack.pop();
        }
        if stack.is_empty() && start.abs_diff(end) == 1 {
            first = Side::Upper;
        }
        let code = ArcCode {
            n,
            start,
            first,
            crossings: stack,
            end,
        };
        Ok(if start > end { code.reversed() } else { code })
    }

    /// The straight arc joining punctures `i` and `i + 1`.
    pub fn straight(i: usize, n: usize) -> Result<ArcCode> {
        if i == 0 || i >= n {
            return Err(Error::UnsupportedParameters(format!(
                "straight arc {i} needs 1 <= i <= n-1 = {}",
                n.saturating_sub(1)
            )));
        }
        Ok(ArcCode {
            n,
            start: i,
            first: Side::Upper,
            crossings: Vec::new(),
            end: i + 1,
        })
    }

    fn reversed(&self) -> ArcCode {
        ArcCode {
            n: self.n,
            start: self.end,
            first: self.last_side(),
            crossings: self.crossings.iter().rev().copied().collect(),
            end: self.start,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn first_side(&self) -> Side {
        self.first
    }

    pub fn last_side(&self) -> Side {
        self.first.flipped(self.crossings.len())
    }

    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    /// Number of axis crossings; zero exactly for arcs inside one half-disk.
    pub fn complexity(&self) -> usize {
        self.crossings.len()
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.start, self.end)
    }

    /// The straight index `i` if this is the straight arc `e_i`.
    pub fn straight_index(&self) -> Option<usize> {
        (self.crossings.is_empty() && self.end == self.start + 1).then_some(self.start)
    }

    pub fn is_straight(&self) -> bool {
        self.straight_index().is_some()
    }

    /// Times this arc crosses the axis segment `s`.
    pub fn crossings_of(&self, s: usize) -> usize {
        self.crossings.iter().filter(|&&c| c == s).count()
    }

    /// Events from start to end: a puncture, the crossings, a puncture.
    pub fn events(&self) -> Vec<Event> {
        let mut ev = Vec::with_capacity(self.crossings.len() + 2);
        ev.push(Event::Puncture(self.start));
        ev.extend(self.crossings.iter().map(|&s| Event::Crossing(s)));
        ev.push(Event::Puncture(self.end));
        ev
    }

    /// Side of the piece between event `i` and event `i + 1`.
    pub fn piece_side(&self, i: usize) -> Side {
        self.first.flipped(i)
    }

    /// The flat integer code `[n, start, side, end, m, s_1, …, s_m]`.
    pub fn canonical(&self) -> Vec<i64> {
        let mut out = vec![
            self.n as i64,
            self.start as i64,
            (self.first == Side::Lower) as i64,
            self.end as i64,
            self.crossings.len() as i64,
        ];
        out.extend(self.crossings.iter().map(|&s| s as i64));
        out
    }

    /// Image under the half-twist `σ_j^{±1}` (sign of `letter`).
    ///
    /// `σ_j` rotates a disk around punctures `j, j+1` counterclockwise by a
    /// half turn. In normal form only three things change: a crossing of
    /// segment `j` becomes the crossings `j-1, j, j+1` (read downward, so
    /// reversed when crossed upward), and an end at `j` or `j+1` moves to the
    /// other puncture, leaving on the opposite side after one extra crossing.
    pub fn apply_generator(&self, letter: i32) -> Result<ArcCode> {
        let j = letter.unsigned_abs() as usize;
        if letter == 0 || j >= self.n {
            return Err(Error::UnsupportedParameters(format!(
                "generator {letter} out of range for n = {}",
                self.n
            )));
        }
        if self.straight_index() == Some(j) {
            return Ok(self.clone());
        }
        let positive = letter > 0;
        let swap = |p: usize| {
            if p == j {
                j + 1
            } else if p == j + 1 {
                j
            } else {
                p
            }
        };
        // extra crossing picked up by a moving end whose piece lies on `side`
        let end_crossing = |side: Side| {
            if (side == Side::Upper) == positive {
                j - 1
            } else {
                j + 1
            }
        };
        let moved = |p: usize| p == j || p == j + 1;

        let mut first = self.first;
        let mut raw = Vec::with_capacity(self.crossings.len() + 4);
        if moved(self.start) {
            raw.push(end_crossing(self.first));
            first = first.flip();
        }
        for (idx, &s) in self.crossings.iter().enumerate() {
            if s != j {
                raw.push(s);
                continue;
            }
            let downward = self.piece_side(idx) == Side::Upper;
            if downward == positive {
                raw.extend([j - 1, j, j + 1]);
            } else {
                raw.extend([j + 1, j, j - 1]);
            }
        }
        if moved(self.end) {
            raw.push(end_crossing(self.last_side()));
        }
        ArcCode::new(self.n, swap(self.start), first, raw, swap(self.end))
    }

    /// Image under a braid word given by its letters in functional order.
    pub fn apply_word(&self, letters: &[i32]) -> Result<ArcCode> {
        letters
            .iter()
            .rev()
            .try_fold(self.clone(), |c, &l| c.apply_generator(l))
    }

    /// Letters moving the start puncture along the first piece until the
    /// code loses a crossing (or becomes straight), in the order applied.
    fn slide_letters(&self) -> Vec<i32> {
        let p = self.start;
        let target = match self.crossings.first() {
            // segment s lies between punctures s and s+1
            Some(&s) if s > p => s,
            Some(&s) => s + 1,
            None => {
                if self.end > p {
                    self.end - 1
                } else {
                    self.end + 1
                }
            }
        };
        let upper = self.first == Side::Upper;
        let mut letters = Vec::new();
        if target > p {
            // the moving puncture is the left one of each swapped pair
            for m in p..target {
                letters.push(if upper { -(m as i32) } else { m as i32 });
            }
        } else {
            for m in (target..p).rev() {
                letters.push(if upper { m as i32 } else { -(m as i32) });
            }
        }
        letters
    }

    /// A word `β` (functional order) and index `i` with `β(e_i) = self`.
    pub fn straightening_word(&self) -> Result<(Vec<i32>, usize)> {
        let mut current = self.clone();
        let mut applied: Vec<i32> = Vec::new();
        while current.straight_index().is_none() {
            let before = current.complexity();
            let was_flat = before == 0;
            for l in current.slide_letters() {
                current = current.apply_generator(l)?;
                applied.push(l);
            }
            if !(current.complexity() < before || (was_flat && current.is_straight())) {
                return Err(Error::PreconditionViolated(format!(
                    "slide failed to simplify arc {self}"
                )));
            }
        }
        let index = current
            .straight_index()
            .expect("loop exits on straight arcs");
        // current = g_t ⋯ g_1 (self), so self = g_1^{-1} ⋯ g_t^{-1} (e_index)
        Ok((applied.iter().map(|l| -l).collect(), index))
    }
}

impl fmt::Display for ArcCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.first {
            Side::Upper => 'U',
            Side::Lower => 'L',
        };
        write!(f, "{}; {} {}", self.n, self.start, side)?;
        for s in &self.crossings {
            write!(f, " {s}")?;
        }
        write!(f, " {}", self.end)
    }
}
