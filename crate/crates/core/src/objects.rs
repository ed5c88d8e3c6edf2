//! Auxiliary combinatorial objects: integer partitions in rectangles, rooted
//! unimodal compositions, and (two-colored) Motzkin paths with their area and
//! level statistics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Integer partitions and rectangles
// ---------------------------------------------------------------------------

/// Weakly decreasing positive parts; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// stripped, zeros elsewhere are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<IntegerPartition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Invalid("zero part before the end".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("parts must be weakly decreasing".into()));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> IntegerPartition {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part at 1-indexed row `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Weight `|lambda|`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True iff the Young diagram fits inside the rectangle.
    pub fn fits_in(&self, rect: &Rectangle) -> bool {
        self.num_parts() <= rect.rows && self.parts.first().copied().unwrap_or(0) <= rect.cols
    }

    /// Cells of the rectangle outside the diagram, rotated 180 degrees; an
    /// involution with `|lambda| + |complement| = rows * cols`.
    pub fn complement(&self, rect: &Rectangle) -> Result<IntegerPartition> {
        if !self.fits_in(rect) {
            return Err(Error::Invalid(format!(
                "partition {self} does not fit in {rect}"
            )));
        }
        let parts = (0..rect.rows)
            .map(|i| rect.cols - self.part(rect.rows - i))
            .collect();
        IntegerPartition::new(parts)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!(self.parts)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPartition{self}")
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<IntegerPartition> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.is_empty() {
            return Ok(IntegerPartition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        IntegerPartition::new(parts)
    }
}

/// An `rows x cols` rectangle of cells; either side may be zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Rectangle {
        Rectangle { rows, cols }
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    pub fn transpose(&self) -> Rectangle {
        Rectangle {
            rows: self.cols,
            cols: self.rows,
        }
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Every partition whose diagram fits in the rectangle, exactly once, in
/// lexicographic order of the part vectors.
pub fn enumerate_partitions_in(rect: &Rectangle) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::new();
    fn rec(out: &mut Vec<IntegerPartition>, parts: &mut Vec<usize>, rows_left: usize, cap: usize) {
        out.push(IntegerPartition::new(parts.clone()).unwrap());
        if rows_left == 0 {
            return;
        }
        for p in 1..=cap {
            parts.push(p);
            rec(out, parts, rows_left - 1, p);
            parts.pop();
        }
    }
    rec(&mut out, &mut parts, rect.rows, rect.cols);
    out
}

/// Bijection from partitions with `r` distinct parts (zero allowed as the
/// last part) to partitions with at most `r` parts: subtract the staircase
/// `(r-1, r-2, ..., 1, 0)`. Shrinks the weight by `binomial(r, 2)`.
pub fn delta_distinct(lambda: &IntegerPartition, r: usize) -> Result<IntegerPartition> {
    if lambda.num_parts() > r {
        return Err(Error::Invalid(format!("more than {r} parts")));
    }
    let padded: Vec<usize> = (1..=r).map(|i| lambda.part(i)).collect();
    if !padded.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::Invalid("parts are not distinct".into()));
    }
    let parts = padded
        .iter()
        .enumerate()
        .map(|(i, &p)| p - (r - 1 - i))
        .collect();
    IntegerPartition::new(parts)
}

/// Inverse of [`delta_distinct`] for the given part count.
pub fn delta_distinct_inv(mu: &IntegerPartition, r: usize) -> Result<IntegerPartition> {
    if mu.num_parts() > r {
        return Err(Error::Invalid(format!("more than {r} parts")));
    }
    let parts = (1..=r).map(|i| mu.part(i) + (r - i)).collect();
    IntegerPartition::new(parts)
}

// ---------------------------------------------------------------------------
// Rooted unimodal compositions
// ---------------------------------------------------------------------------

/// A unimodal sequence of nonnegative integers with zero endpoints and unit
/// steps, together with a distinguished root position attaining the maximum.
///
/// Text form marks the root in brackets: `0123[3]32110`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootedUnimodalComposition {
    values: Vec<usize>,
    root: usize,
}

impl RootedUnimodalComposition {
    /// Validates all defining properties; `root` is 1-indexed (0 only for the
    /// empty composition).
    pub fn new(values: Vec<usize>, root: usize) -> Result<RootedUnimodalComposition> {
        if values.is_empty() {
            if root != 0 {
                return Err(Error::Invalid("empty composition has no root".into()));
            }
            return Ok(RootedUnimodalComposition { values, root });
        }
        if root == 0 || root > values.len() {
            return Err(Error::Invalid("root out of range".into()));
        }
        let n = values.len();
        if values[0] != 0 || values[n - 1] != 0 {
            return Err(Error::Invalid("endpoints must be zero".into()));
        }
        let mut fallen = false;
        for w in values.windows(2) {
            let (a, b) = (w[0] as i64, w[1] as i64);
            if (a - b).abs() > 1 {
                return Err(Error::Invalid("steps must change by at most one".into()));
            }
            if b < a {
                fallen = true;
            } else if b > a && fallen {
                return Err(Error::Invalid("sequence is not unimodal".into()));
            }
        }
        let max = *values.iter().max().unwrap();
        if values[root - 1] != max {
            return Err(Error::Invalid("root must attain the maximum".into()));
        }
        Ok(RootedUnimodalComposition { values, root })
    }

    pub fn empty() -> RootedUnimodalComposition {
        RootedUnimodalComposition {
            values: Vec::new(),
            root: 0,
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// 1-indexed root position; 0 for the empty composition.
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Weight `|u|`, the sum of the values.
    pub fn weight(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "values": self.values, "root": self.root })
    }
}

impl fmt::Display for RootedUnimodalComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dotted = self.values.iter().max().copied().unwrap_or(0) > 9;
        for (i, v) in self.values.iter().enumerate() {
            if dotted && i > 0 {
                write!(f, ".")?;
            }
            if i + 1 == self.root {
                write!(f, "[{v}]")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for RootedUnimodalComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<RootedUnimodalComposition> {
        let s = s.trim();
        let mut values = Vec::new();
        let mut root = 0usize;
        if s.contains('.') {
            for tok in s.split('.') {
                let is_root = tok.starts_with('[') && tok.ends_with(']');
                let t = tok.trim_matches(|c| c == '[' || c == ']');
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad value {t:?}")))?;
                values.push(v);
                if is_root {
                    root = values.len();
                }
            }
        } else {
            let mut chars = s.chars();
            while let Some(c) = chars.next() {
                if c == '[' {
                    let d = chars
                        .next()
                        .and_then(|c| c.to_digit(10))
                        .ok_or_else(|| Error::Invalid("bad root marker".into()))?;
                    if chars.next() != Some(']') {
                        return Err(Error::Invalid("unclosed root marker".into()));
                    }
                    values.push(d as usize);
                    root = values.len();
                } else {
                    let d = c
                        .to_digit(10)
                        .ok_or_else(|| Error::Invalid(format!("bad character {c:?}")))?;
                    values.push(d as usize);
                }
            }
        }
        RootedUnimodalComposition::new(values, root)
    }
}

/// Every rooted unimodal composition of length `n`, ordered by value sequence
/// and then root position.
pub fn enumerate_rooted_unimodal(n: usize) -> Vec<RootedUnimodalComposition> {
    if n == 0 {
        return vec![RootedUnimodalComposition::empty()];
    }
    let mut out = Vec::new();
    let mut values = vec![0usize];
    fn rec(
        out: &mut Vec<RootedUnimodalComposition>,
        values: &mut Vec<usize>,
        n: usize,
        fallen: bool,
    ) {
        let len = values.len();
        let cur = *values.last().unwrap();
        if len == n {
            if cur == 0 {
                let max = *values.iter().max().unwrap();
                for (i, &v) in values.iter().enumerate() {
                    if v == max {
                        out.push(RootedUnimodalComposition::new(values.clone(), i + 1).unwrap());
                    }
                }
            }
            return;
        }
        let steps_left = n - len;
        let lo = cur.saturating_sub(1);
        let hi = if fallen { cur } else { cur + 1 };
        for next in lo..=hi {
            // Unit steps must still reach zero by the final position.
            if next > steps_left - 1 {
                continue;
            }
            values.push(next);
            rec(out, values, n, fallen || next < cur);
            values.pop();
        }
    }
    rec(&mut out, &mut values, n, false);
    out
}

// ---------------------------------------------------------------------------
// Motzkin paths
// ---------------------------------------------------------------------------

/// Step of a two-colored Motzkin path; the derived order `D < a < b < U`
/// fixes the enumeration order of paths.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ColoredStep {
    Down,
    FlatA,
    FlatB,
    Up,
}

impl ColoredStep {
    pub const ALL: [ColoredStep; 4] = [
        ColoredStep::Down,
        ColoredStep::FlatA,
        ColoredStep::FlatB,
        ColoredStep::Up,
    ];

    fn rise(self) -> i64 {
        match self {
            ColoredStep::Up => 1,
            ColoredStep::Down => -1,
            _ => 0,
        }
    }

    fn ch(self) -> char {
        match self {
            ColoredStep::Up => 'U',
            ColoredStep::Down => 'D',
            ColoredStep::FlatA => 'a',
            ColoredStep::FlatB => 'b',
        }
    }
}

/// Step of a plain Motzkin path, ordered `D < H < U`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PlainStep {
    Down,
    Flat,
    Up,
}

impl PlainStep {
    pub const ALL: [PlainStep; 3] = [PlainStep::Down, PlainStep::Flat, PlainStep::Up];

    fn rise(self) -> i64 {
        match self {
            PlainStep::Up => 1,
            PlainStep::Down => -1,
            PlainStep::Flat => 0,
        }
    }

    fn ch(self) -> char {
        match self {
            PlainStep::Up => 'U',
            PlainStep::Down => 'D',
            PlainStep::Flat => 'H',
        }
    }
}

fn validate_profile(rises: &[i64]) -> Result<()> {
    let mut h = 0i64;
    for &r in rises {
        h += r;
        if h < 0 {
            return Err(Error::Invalid("path dips below the axis".into()));
        }
    }
    if h != 0 {
        return Err(Error::Invalid("path does not end on the axis".into()));
    }
    Ok(())
}

/// Level of each step (its lowest y-coordinate) and the pairing matching each
/// down step with the earlier up step at the same level.
fn profile(rises: &[i64]) -> (Vec<usize>, BTreeMap<usize, usize>) {
    let mut levels = Vec::with_capacity(rises.len());
    let mut pairing = BTreeMap::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut h = 0i64;
    for (i, &r) in rises.iter().enumerate() {
        let level = if r < 0 { h - 1 } else { h };
        levels.push(level as usize);
        if r > 0 {
            stack.push(i + 1);
        } else if r < 0 {
            let up = stack.pop().expect("validated path");
            pairing.insert(i + 1, up);
        }
        h += r;
    }
    (levels, pairing)
}

fn area_of(rises: &[i64], levels: &[usize]) -> usize {
    // Each diagonal step carries a half cell above its level; flats carry none.
    let twice: usize = levels
        .iter()
        .zip(rises)
        .map(|(&l, &r)| 2 * l + usize::from(r != 0))
        .sum();
    debug_assert!(twice.is_multiple_of(2));
    twice / 2
}

macro_rules! path_impl {
    ($ty:ident, $step:ident) => {
        impl $ty {
            pub fn new(steps: Vec<$step>) -> Result<$ty> {
                let rises: Vec<i64> = steps.iter().map(|s| s.rise()).collect();
                validate_profile(&rises)?;
                Ok($ty { steps })
            }

            pub fn empty() -> $ty {
                $ty { steps: Vec::new() }
            }

            pub fn steps(&self) -> &[$step] {
                &self.steps
            }

            pub fn len(&self) -> usize {
                self.steps.len()
            }

            pub fn is_empty(&self) -> bool {
                self.steps.is_empty()
            }

            /// 1-indexed step access.
            pub fn step(&self, i: usize) -> $step {
                self.steps[i - 1]
            }

            fn rises(&self) -> Vec<i64> {
                self.steps.iter().map(|s| s.rise()).collect()
            }

            /// Levels of all steps, in order.
            pub fn levels(&self) -> Vec<usize> {
                profile(&self.rises()).0
            }

            /// Level of the 1-indexed step `i`: its lowest y-coordinate.
            pub fn step_level(&self, i: usize) -> usize {
                self.levels()[i - 1]
            }

            /// Sum of the step levels; counts the full cells below the path.
            pub fn path_level(&self) -> usize {
                self.levels().iter().sum()
            }

            /// Map from each down step to its paired up step (1-indexed).
            pub fn pairing(&self) -> BTreeMap<usize, usize> {
                profile(&self.rises()).1
            }

            /// Area enclosed between the path and the axis.
            pub fn area(&self) -> usize {
                let rises = self.rises();
                let (levels, _) = profile(&rises);
                area_of(&rises, &levels)
            }

            pub fn to_json_value(&self) -> serde_json::Value {
                serde_json::json!(self.to_string())
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for s in &self.steps {
                    write!(f, "{}", s.ch())?;
                }
                Ok(())
            }
        }
    };
}

/// A Motzkin path whose horizontal steps are colored `a` or `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TwoColoredMotzkinPath {
    steps: Vec<ColoredStep>,
}

/// A plain Motzkin path over `U`, `H`, `D`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MotzkinPath {
    steps: Vec<PlainStep>,
}

path_impl!(TwoColoredMotzkinPath, ColoredStep);
path_impl!(MotzkinPath, PlainStep);

impl TwoColoredMotzkinPath {
    /// Area share of a down step `s_i`: the cells in its row back to the
    /// paired up step not claimed by other down steps or `a`-steps, which
    /// comes to one more than the number of `U` and `b` steps strictly
    /// between the pair.
    pub fn a_stat(&self, i: usize) -> Result<usize> {
        if self.step(i) != ColoredStep::Down {
            return Err(Error::Invalid(format!("step {i} is not a down step")));
        }
        let pairing = self.pairing();
        let p = pairing[&i];
        let between = self.steps[p..i - 1]
            .iter()
            .filter(|s| matches!(s, ColoredStep::Up | ColoredStep::FlatB))
            .count();
        Ok(1 + between)
    }
}

impl FromStr for TwoColoredMotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<TwoColoredMotzkinPath> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(ColoredStep::Up),
                'D' => Ok(ColoredStep::Down),
                'a' => Ok(ColoredStep::FlatA),
                'b' => Ok(ColoredStep::FlatB),
                _ => Err(Error::Invalid(format!("bad step {c:?}"))),
            })
            .collect::<Result<_>>()?;
        TwoColoredMotzkinPath::new(steps)
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<MotzkinPath> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(PlainStep::Up),
                'D' => Ok(PlainStep::Down),
                'H' => Ok(PlainStep::Flat),
                _ => Err(Error::Invalid(format!("bad step {c:?}"))),
            })
            .collect::<Result<_>>()?;
        MotzkinPath::new(steps)
    }
}

/// All two-colored Motzkin paths of length `n` in lexicographic step order.
pub fn enumerate_two_colored(n: usize) -> Vec<TwoColoredMotzkinPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    fn rec(out: &mut Vec<TwoColoredMotzkinPath>, steps: &mut Vec<ColoredStep>, n: usize, h: i64) {
        if steps.len() == n {
            out.push(TwoColoredMotzkinPath {
                steps: steps.clone(),
            });
            return;
        }
        let left = (n - steps.len() - 1) as i64;
        for s in ColoredStep::ALL {
            let nh = h + s.rise();
            if nh < 0 || nh > left {
                continue;
            }
            steps.push(s);
            rec(out, steps, n, nh);
            steps.pop();
        }
    }
    rec(&mut out, &mut steps, n, 0);
    out
}

/// All plain Motzkin paths of length `n` in lexicographic step order.
pub fn enumerate_motzkin(n: usize) -> Vec<MotzkinPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n);
    fn rec(out: &mut Vec<MotzkinPath>, steps: &mut Vec<PlainStep>, n: usize, h: i64) {
        if steps.len() == n {
            out.push(MotzkinPath {
                steps: steps.clone(),
            });
            return;
        }
        let left = (n - steps.len() - 1) as i64;
        for s in PlainStep::ALL {
            let nh = h + s.rise();
            if nh < 0 || nh > left {
                continue;
            }
            steps.push(s);
            rec(out, steps, n, nh);
            steps.pop();
        }
    }
    rec(&mut out, &mut steps, n, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::{gaussian, pq_gaussian};
    use crate::MultiPoly;

    fn part(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    #[test]
    fn fits_and_complement() {
        let lam = part("(5,5,4,3,3)");
        let rect = Rectangle::new(6, 5);
        assert!(lam.fits_in(&rect));
        assert_eq!(lam.complement(&rect).unwrap(), part("(5,2,2,1)"));
        // Involution and weight split.
        assert_eq!(
            lam.complement(&rect).unwrap().complement(&rect).unwrap(),
            lam
        );
        assert_eq!(
            lam.weight() + lam.complement(&rect).unwrap().weight(),
            rect.area()
        );
        // Empty partition completes to the full rectangle.
        let full = IntegerPartition::empty()
            .complement(&Rectangle::new(2, 3))
            .unwrap();
        assert_eq!(full, part("(3,3)"));
        assert!(!part("(6)").fits_in(&rect));
    }

    #[test]
    fn complement_involution_exhaustive() {
        for rows in 0..=5 {
            for cols in 0..=5 {
                let rect = Rectangle::new(rows, cols);
                for lam in enumerate_partitions_in(&rect) {
                    let c = lam.complement(&rect).unwrap();
                    assert!(c.fits_in(&rect));
                    assert_eq!(c.complement(&rect).unwrap(), lam);
                    assert_eq!(lam.weight() + c.weight(), rect.area());
                }
            }
        }
    }

    #[test]
    fn partitions_in_rectangles() {
        let one = enumerate_partitions_in(&Rectangle::new(1, 1));
        assert_eq!(one, vec![IntegerPartition::empty(), part("(1)")]);

        let two = enumerate_partitions_in(&Rectangle::new(2, 2));
        let mut weights: Vec<usize> = two.iter().map(|l| l.weight()).collect();
        weights.sort_unstable();
        assert_eq!(weights, [0, 1, 2, 2, 3, 4]);

        assert_eq!(enumerate_partitions_in(&Rectangle::new(0, 7)).len(), 1);
    }

    #[test]
    fn rectangle_sums_match_gaussians() {
        for rows in 0..=5usize {
            for cols in 0..=5usize {
                let rect = Rectangle::new(rows, cols);
                let mut q_sum = MultiPoly::zero();
                let mut pq_sum = MultiPoly::zero();
                for lam in enumerate_partitions_in(&rect) {
                    let w = lam.weight() as u32;
                    let c = lam.complement(&rect).unwrap().weight() as u32;
                    q_sum = q_sum.add(&MultiPoly::monomial([w, 0, 0, 0], 1));
                    pq_sum = pq_sum.add(&MultiPoly::monomial([c, w, 0, 0], 1));
                }
                let n = (rows + cols) as i64;
                assert_eq!(q_sum, gaussian(n, cols as i64), "{rect}");
                assert_eq!(pq_sum, pq_gaussian(n, cols as i64), "{rect}");
            }
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_distinct(&part("(3,1)"), 2).unwrap(), part("(2,1)"));
        assert_eq!(
            delta_distinct(&part("(3,2,1)"), 4).unwrap(),
            IntegerPartition::empty()
        );
        let lam = part("(5,3,2)");
        let mu = delta_distinct(&lam, 3).unwrap();
        assert_eq!(mu, part("(3,2,2)"));
        assert_eq!(lam.weight(), mu.weight() + 3);
        assert_eq!(delta_distinct_inv(&mu, 3).unwrap(), lam);
        // Repeated parts are rejected.
        assert!(delta_distinct(&part("(2,2)"), 2).is_err());
    }

    #[test]
    fn delta_respects_rectangles() {
        // If lambda has r distinct parts inside r x l, then delta(lambda)
        // fits in r x (l - r + 1); checked over all candidates.
        for r in 1..=4usize {
            for l in (r - 1)..=5 {
                for lam in enumerate_partitions_in(&Rectangle::new(r, l)) {
                    if delta_distinct(&lam, r).is_ok() {
                        let mu = delta_distinct(&lam, r).unwrap();
                        assert!(mu.fits_in(&Rectangle::new(r, l + 1 - r)));
                        assert_eq!(delta_distinct_inv(&mu, r).unwrap(), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn rooted_unimodal_examples() {
        let u: RootedUnimodalComposition = "00012[2]22110000".parse().unwrap();
        assert_eq!(u.weight(), 11);
        assert_eq!(u.root(), 6);
        assert_eq!(u.to_string(), "00012[2]22110000");

        assert!(RootedUnimodalComposition::new(vec![0, 1, 2], 3).is_err()); // bad endpoint
        assert!(RootedUnimodalComposition::new(vec![0, 2, 0], 2).is_err()); // jump of two
        assert!(RootedUnimodalComposition::new(vec![0, 1, 0, 1, 0], 2).is_err()); // not unimodal
        assert!(RootedUnimodalComposition::new(vec![0, 1, 0], 1).is_err()); // root not at max
    }

    #[test]
    fn rooted_unimodal_counts() {
        assert_eq!(enumerate_rooted_unimodal(0).len(), 1);
        for n in 1..=10usize {
            let all = enumerate_rooted_unimodal(n);
            assert_eq!(all.len(), 1 << (n - 1), "n={n}");
            // Exactly-once.
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        assert_eq!(enumerate_rooted_unimodal(2).len(), 2);
    }

    #[test]
    fn motzkin_figure_goldens() {
        let p: TwoColoredMotzkinPath = "UbUaDUbDDUbD".parse().unwrap();
        assert_eq!(p.area(), 14);
        assert_eq!(p.levels(), [0, 1, 1, 2, 1, 1, 2, 1, 0, 0, 1, 0]);
        assert_eq!(p.path_level(), 10);
        let pairing = p.pairing();
        assert_eq!(pairing[&5], 3);
        assert_eq!(pairing[&8], 6);
        assert_eq!(pairing[&9], 1);
        assert_eq!(pairing[&12], 10);
        assert_eq!(p.a_stat(5).unwrap(), 1);
        assert_eq!(p.a_stat(8).unwrap(), 2);
        assert_eq!(p.a_stat(9).unwrap(), 5);
        assert_eq!(p.a_stat(12).unwrap(), 2);
        assert!(p.a_stat(1).is_err());

        let plain: MotzkinPath = "UHUHDUHDDUHD".parse().unwrap();
        assert_eq!(plain.path_level(), 10);
    }

    #[test]
    fn path_validation() {
        assert!("UD".parse::<TwoColoredMotzkinPath>().is_ok());
        assert!("DU".parse::<TwoColoredMotzkinPath>().is_err());
        assert!("UUD".parse::<TwoColoredMotzkinPath>().is_err());
        assert!("".parse::<TwoColoredMotzkinPath>().unwrap().is_empty());
    }

    #[test]
    fn enumeration_orders_and_counts() {
        let two: Vec<String> = enumerate_two_colored(2)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(two, ["aa", "ab", "ba", "bb", "UD"]);
        let plain: Vec<String> = enumerate_motzkin(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(plain, ["HHH", "HUD", "UDH", "UHD"]);
        assert_eq!(enumerate_two_colored(0).len(), 1);
        assert_eq!(enumerate_motzkin(0).len(), 1);

        // |M^2_(n-1)| = Catalan(n); |M_n| satisfies the Motzkin recurrence.
        for n in 1..=9usize {
            assert_eq!(
                enumerate_two_colored(n - 1).len() as u64,
                crate::counting::catalan(n),
                "two-colored count at {n}"
            );
        }
        let mut motzkin = vec![1u64, 1];
        for n in 2..=9 {
            let mut m = motzkin[n - 1];
            for k in 0..=n - 2 {
                m += motzkin[k] * motzkin[n - 2 - k];
            }
            motzkin.push(m);
        }
        for (n, &m) in motzkin.iter().enumerate() {
            assert_eq!(enumerate_motzkin(n).len() as u64, m, "plain count at {n}");
        }
    }

    #[test]
    fn area_decomposition_identities() {
        for n in 0..=8usize {
            for p in enumerate_two_colored(n) {
                let levels = p.levels();
                // Independent area oracle: level sum plus one per down step.
                let downs = p
                    .steps()
                    .iter()
                    .filter(|&&s| s == ColoredStep::Down)
                    .count();
                assert_eq!(p.area(), p.path_level() + downs, "oracle at {p}");
                // Row decomposition: a-steps carry their level, down steps
                // carry their level plus their back-span.
                let mut acc = 0usize;
                for (i, &s) in p.steps().iter().enumerate() {
                    match s {
                        ColoredStep::FlatA => acc += levels[i],
                        ColoredStep::Down => acc += levels[i] + p.a_stat(i + 1).unwrap(),
                        _ => {}
                    }
                }
                assert_eq!(p.area(), acc, "decomposition at {p}");
            }
        }
    }

    #[test]
    fn pairing_is_noncrossing_matching() {
        for n in 0..=7usize {
            for p in enumerate_two_colored(n) {
                let pairing = p.pairing();
                let ups = p.steps().iter().filter(|&&s| s == ColoredStep::Up).count();
                assert_eq!(pairing.len(), ups);
                for (&d, &u) in &pairing {
                    assert!(u < d);
                    assert_eq!(p.step_level(d), p.step_level(u));
                    // Non-crossing as index intervals.
                    for (&d2, &u2) in &pairing {
                        if d2 < d {
                            assert!(!(u2 < u && u < d2), "crossing pairs in {p}");
                        }
                    }
                }
            }
        }
    }
}
