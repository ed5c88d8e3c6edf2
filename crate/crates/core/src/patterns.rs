//! Pattern containment and avoidance for RGFs and set partitions.
//!
//! Throughout, "subword" means subsequence (not contiguous): an RGF `w`
//! contains the pattern `v` when some subsequence of `w` standardizes to `v`.
//! Avoidance classes are generated by a pruned depth-first walk of the growth
//! tree: a prefix that already contains a pattern is never extended, and each
//! extension is tested only for occurrences ending at the new position.

use std::collections::BTreeSet;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{Rgf, SetPartition, Word, DEFAULT_MAX_N};

/// A nonempty RGF used as a pattern.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pattern(Rgf);

impl Pattern {
    pub fn new(body: Rgf) -> Result<Pattern> {
        if body.is_empty() {
            return Err(Error::Invalid("patterns must be nonempty".into()));
        }
        Ok(Pattern(body))
    }

    pub fn body(&self) -> &Rgf {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        Pattern::new(s.parse()?)
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A deduplicated set of patterns. A pattern containing another member of the
/// set is redundant (it never changes the avoidance class); such patterns are
/// flagged, not removed, to preserve caller intent.
#[derive(Clone, Debug, Default)]
pub struct PatternSet {
    patterns: Vec<Pattern>,
    warnings: Vec<String>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Pattern>) -> PatternSet {
        let set: BTreeSet<Pattern> = patterns.into_iter().collect();
        let patterns: Vec<Pattern> = set.into_iter().collect();
        let mut warnings = Vec::new();
        for p in &patterns {
            for q in &patterns {
                if p != q && contains(p.body().word(), q) {
                    warnings.push(format!(
                        "pattern {p} contains {q} and is redundant in the set"
                    ));
                }
            }
        }
        PatternSet { patterns, warnings }
    }

    pub fn empty() -> PatternSet {
        PatternSet::default()
    }

    /// Parses a comma-separated list of pattern literals.
    pub fn parse_list(s: &str) -> Result<PatternSet> {
        let patterns: Vec<Pattern> = s
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| p.parse())
            .collect::<Result<_>>()?;
        Ok(PatternSet::new(patterns))
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

impl std::fmt::Display for PatternSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Backtracking matcher for one occurrence. `bind[j]` carries the word value
/// chosen for pattern value `j + 1`; order-isomorphism demands the binding be
/// strictly increasing in `j`. When `anchor_last` is set, the final pattern
/// letter must land exactly on that word position.
fn search(
    w: &[usize],
    v: &[usize],
    vi: usize,
    start: usize,
    anchor_last: Option<usize>,
    bind: &mut [Option<usize>],
    positions: &mut Vec<usize>,
) -> bool {
    if vi == v.len() {
        return true;
    }
    let pv = v[vi] - 1;
    let lo = bind[..pv]
        .iter()
        .rev()
        .flatten()
        .next()
        .copied()
        .unwrap_or(0);
    let hi = bind[pv + 1..].iter().flatten().next().copied();
    let is_last = vi + 1 == v.len();
    let range = match (is_last, anchor_last) {
        (true, Some(p)) => p..p + 1,
        _ => {
            let end = anchor_last.unwrap_or(w.len());
            start..end
        }
    };
    for p in range {
        let x = w[p];
        let ok = match bind[pv] {
            Some(y) => x == y,
            None => x > lo && hi.is_none_or(|h| x < h),
        };
        if !ok {
            continue;
        }
        let fresh = bind[pv].is_none();
        if fresh {
            bind[pv] = Some(x);
        }
        positions.push(p + 1);
        if search(w, v, vi + 1, p + 1, anchor_last, bind, positions) {
            return true;
        }
        positions.pop();
        if fresh {
            bind[pv] = None;
        }
    }
    false
}

fn occurrence(w: &[usize], v: &Rgf, anchor_last: Option<usize>) -> Option<Vec<usize>> {
    if v.len() > w.len() {
        return None;
    }
    let mut bind = vec![None; v.max_letter()];
    let mut positions = Vec::with_capacity(v.len());
    if search(w, v.letters(), 0, 0, anchor_last, &mut bind, &mut positions) {
        Some(positions)
    } else {
        None
    }
}

/// True iff some subsequence of `w` standardizes to `v`.
pub fn contains(w: &Word, v: &Pattern) -> bool {
    occurrence(w.letters(), v.body(), None).is_some()
}

/// As [`contains`], returning the 1-indexed positions of one occurrence.
pub fn contains_witness(w: &Word, v: &Pattern) -> Option<Vec<usize>> {
    occurrence(w.letters(), v.body(), None)
}

/// True iff `w` avoids every pattern in the set.
pub fn avoids_all(w: &Word, set: &PatternSet) -> bool {
    set.patterns().iter().all(|v| !contains(w, v))
}

/// True iff some restriction of `sigma` to a subset standardizes to `pi`.
pub fn partition_contains(sigma: &SetPartition, pi: &SetPartition) -> bool {
    let n = sigma.ground_size();
    let k = pi.ground_size();
    if k > n {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut subset: Vec<usize> = (1..=k).collect();
    loop {
        if &sigma.restrict_standardized(&subset) == pi {
            return true;
        }
        // Next k-subset of [n] in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if subset[i] < n - (k - 1 - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographic stream of `R_n(V)` with subtree pruning, using the default
/// generation ceiling.
pub fn avoiders(n: usize, set: &PatternSet) -> Result<AvoiderIter> {
    avoiders_with_limit(n, set, DEFAULT_MAX_N)
}

pub fn avoiders_with_limit(n: usize, set: &PatternSet, limit: usize) -> Result<AvoiderIter> {
    if n > limit {
        return Err(Error::ResourceLimit { n, limit });
    }
    AvoiderIter::with_prefix(n, set.clone(), &[])
}

/// The avoiding prefixes of length `min(depth, n)`, in lexicographic order.
/// The subtrees they root partition `R_n(V)`, so disjoint walks over them
/// (see [`avoiders_under_prefix`]) can run concurrently and be concatenated
/// in prefix order to reproduce the sequential stream exactly.
pub fn split_prefixes(n: usize, set: &PatternSet, depth: usize) -> Result<Vec<Vec<usize>>> {
    let d = depth.min(n);
    Ok(avoiders_with_limit(d, set, d.max(DEFAULT_MAX_N))?
        .map(|w| w.letters().to_vec())
        .collect())
}

/// Walks the avoidance subtree below one fixed prefix.
pub fn avoiders_under_prefix(n: usize, set: &PatternSet, prefix: &[usize]) -> Result<AvoiderIter> {
    AvoiderIter::with_prefix(n, set.clone(), prefix)
}

/// Depth-first pruned generator for `R_n(V)` in lexicographic order.
///
/// `visits()` reports how many search-tree nodes were entered (avoiding
/// prefixes expanded below the fixed base), the cost measure that pruned
/// search must keep an order of magnitude below the `Bell(n)` words a naive
/// filter would materialize.
pub struct AvoiderIter {
    n: usize,
    set: PatternSet,
    base: usize,
    word: Vec<usize>,
    maxes: Vec<usize>,
    next_try: Vec<usize>,
    visits: u64,
    done: bool,
}

impl AvoiderIter {
    fn with_prefix(n: usize, set: PatternSet, prefix: &[usize]) -> Result<AvoiderIter> {
        if prefix.len() > n {
            return Err(Error::Invalid("prefix longer than target length".into()));
        }
        let word = Word::new(prefix.to_vec())?;
        if !word.is_rgf() {
            return Err(Error::NotRgf(word.to_string()));
        }
        if !avoids_all(&word, &set) {
            // Nothing below this prefix; represent as an exhausted walk.
            return Ok(AvoiderIter {
                n,
                set,
                base: prefix.len(),
                word: prefix.to_vec(),
                maxes: Vec::new(),
                next_try: Vec::new(),
                visits: 0,
                done: true,
            });
        }
        let mut maxes = Vec::with_capacity(n);
        let mut max = 0;
        for &x in prefix {
            max = max.max(x);
            maxes.push(max);
        }
        Ok(AvoiderIter {
            n,
            set,
            base: prefix.len(),
            word: prefix.to_vec(),
            maxes,
            next_try: vec![1usize; n + 1],
            visits: 0,
            done: false,
        })
    }

    /// Number of search-tree nodes entered so far.
    pub fn visits(&self) -> u64 {
        self.visits
    }

    fn backtrack(&mut self) {
        self.word.pop();
        self.maxes.pop();
    }
}

impl Iterator for AvoiderIter {
    type Item = Rgf;

    fn next(&mut self) -> Option<Rgf> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.word.len();
            if depth == self.n {
                let out = Rgf::from_letters(self.word.clone()).unwrap();
                if depth == self.base {
                    // The fixed prefix is itself the full word.
                    self.done = true;
                } else {
                    self.backtrack();
                }
                return Some(out);
            }
            let ceiling = 1 + self.maxes.last().copied().unwrap_or(0);
            let c = self.next_try[depth];
            if c > ceiling {
                if depth == self.base {
                    self.done = true;
                    return None;
                }
                self.backtrack();
                continue;
            }
            self.next_try[depth] = c + 1;
            // Containment needs re-testing only at the new last position: the
            // prefix below already avoids every pattern.
            self.word.push(c);
            let blocked = self
                .set
                .patterns()
                .iter()
                .any(|v| occurrence(&self.word, v.body(), Some(self.word.len() - 1)).is_some());
            if blocked {
                self.word.pop();
                continue;
            }
            self.visits += 1;
            self.maxes
                .push(self.maxes.last().copied().unwrap_or(0).max(c));
            self.next_try[depth + 1] = 1;
        }
    }
}

/// Counts `R_n(V)` without materializing words; returns `(count, visits)`.
pub fn count_avoiders(n: usize, set: &PatternSet) -> Result<(u64, u64)> {
    count_avoiders_with_limit(n, set, DEFAULT_MAX_N)
}

pub fn count_avoiders_with_limit(n: usize, set: &PatternSet, limit: usize) -> Result<(u64, u64)> {
    let mut it = avoiders_with_limit(n, set, limit)?;
    let mut count = 0;
    while it.next().is_some() {
        count += 1;
    }
    Ok((count, it.visits()))
}

/// Parallel count over prefix-split subtrees; the sum is identical to the
/// sequential count regardless of thread schedule.
pub fn count_avoiders_par(n: usize, set: &PatternSet, limit: usize) -> Result<u64> {
    use rayon::prelude::*;
    if n > limit {
        return Err(Error::ResourceLimit { n, limit });
    }
    let prefixes = split_prefixes(n, set, 3.min(n))?;
    prefixes
        .par_iter()
        .map(|p| {
            let mut it = avoiders_under_prefix(n, set, p)?;
            let mut c = 0u64;
            while it.next().is_some() {
                c += 1;
            }
            Ok(c)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

// ---------------------------------------------------------------------------
// Arc diagrams
// ---------------------------------------------------------------------------

/// Arcs over the ground set `[n]`, each drawn left-to-right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl ArcDiagram {
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Some pair of arcs `(a,b)`, `(x,y)` with `a < x < y < b`.
    pub fn has_nesting(&self) -> bool {
        self.arcs
            .iter()
            .any(|&(a, b)| self.arcs.iter().any(|&(x, y)| a < x && y < b))
    }

    /// Some pair of arcs `(a,b)`, `(x,y)` with `a < x < b < y`.
    pub fn has_crossing(&self) -> bool {
        self.arcs
            .iter()
            .any(|&(a, b)| self.arcs.iter().any(|&(x, y)| a < x && x < b && b < y))
    }
}

/// Consecutive-element arcs: `(a, b)` for `a < b` adjacent within a block
/// written in increasing order.
pub fn arc_diagram(sigma: &SetPartition) -> ArcDiagram {
    let mut arcs = Vec::new();
    for block in sigma.blocks() {
        for pair in block.windows(2) {
            arcs.push((pair[0], pair[1]));
        }
    }
    arcs.sort_unstable();
    ArcDiagram {
        n: sigma.ground_size(),
        arcs,
    }
}

/// Element-level nonnesting condition: whenever `a < x < y < b` with `a, b`
/// in one block and `x, y` in another, the first block has an element strictly
/// between `x` and `y`. Equivalent to the consecutive arc diagram having no
/// nesting; both sides are computed independently and cross-checked.
pub fn nonnesting_by_blocks(sigma: &SetPartition) -> bool {
    let blocks = sigma.blocks();
    for first in blocks {
        for second in blocks {
            if std::ptr::eq(first, second) {
                continue;
            }
            for &a in first {
                for &b in first {
                    if a >= b {
                        continue;
                    }
                    for &x in second {
                        for &y in second {
                            if !(a < x && x < y && y < b) {
                                continue;
                            }
                            if !first.iter().any(|&c| x < c && c < y) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Left arcs: `(min B, b)` for every non-minimum `b` of each block `B`.
pub fn left_arc_diagram(sigma: &SetPartition) -> ArcDiagram {
    let mut arcs = Vec::new();
    for block in sigma.blocks() {
        for &b in &block[1..] {
            arcs.push((block[0], b));
        }
    }
    arcs.sort_unstable();
    ArcDiagram {
        n: sigma.ground_size(),
        arcs,
    }
}

// ---------------------------------------------------------------------------
// Structural characterizations of avoidance classes
// ---------------------------------------------------------------------------

/// Registry of structural membership tests, keyed by stable class ids such as
/// `R(112)`, `R(111,1212)`, or `TABLE(111,112,121)`. Every test is equivalent
/// to brute-force avoidance of [`class_patterns`] and is verified against it
/// exhaustively.
pub fn class_ids() -> Vec<&'static str> {
    vec![
        "R(111)",
        "R(112)",
        "R(121)",
        "R(122)",
        "R(123)",
        "R(111,112)",
        "R(111,121)",
        "R(111,122)",
        "R(112,121)",
        "R(112,122)",
        "R(112,123)",
        "R(121,122)",
        "R(121,123)",
        "R(122,123)",
        "TABLE(111,112,121)",
        "TABLE(111,112,122)",
        "TABLE(111,121,122)",
        "TABLE(112,121,122)",
        "TABLE(112,121,123)",
        "TABLE(112,122,123)",
        "TABLE(121,122,123)",
        "TABLE(111,112,121,122)",
        "TABLE(112,121,122,123)",
        "R(1212)",
        "R(1221)",
        "R(111,1212)",
        "R(123,1212)",
        "R(112,1221)",
        "R(123,1221)",
    ]
}

/// The pattern set whose avoidance class the id describes.
pub fn class_patterns(id: &str) -> Result<PatternSet> {
    let inner = id
        .strip_prefix("TABLE(")
        .or_else(|| id.strip_prefix("R("))
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::UnknownId(id.to_string()))?;
    if !class_ids().contains(&id) {
        return Err(Error::UnknownId(id.to_string()));
    }
    PatternSet::parse_list(inner)
}

fn multiplicities(w: &Rgf) -> Vec<usize> {
    let mut mult = vec![0usize; w.max_letter() + 1];
    for &x in w.letters() {
        mult[x] += 1;
    }
    mult
}

fn is_layered(w: &Rgf) -> bool {
    w.letters().windows(2).all(|p| p[0] <= p[1])
}

/// Subword of repeated letters (non-first occurrences), in position order.
fn repeated_subword(w: &Rgf) -> Vec<usize> {
    let mut seen = vec![false; w.max_letter() + 1];
    let mut out = Vec::new();
    for &x in w.letters() {
        if seen[x] {
            out.push(x);
        } else {
            seen[x] = true;
        }
    }
    out
}

/// Condition for avoiding 1212: once a value repeats at position `i`, every
/// later letter either stays at or below it or exceeds the running maximum.
fn no_crossing_structure(w: &Rgf) -> bool {
    let letters = w.letters();
    let mut seen = vec![false; w.max_letter() + 1];
    let mut prefix_max = 0usize;
    // Each repeat of a value x at a position with running maximum m forbids
    // every later letter in (x, m]. Keep the non-implied (cap, max) pairs.
    let mut forbidden: Vec<(usize, usize)> = Vec::new();
    for &x in letters {
        if forbidden.iter().any(|&(cap, m)| x > cap && x <= m) {
            return false;
        }
        if seen[x] {
            forbidden.retain(|&(cap, m)| cap < x || m > prefix_max);
            forbidden.push((x, prefix_max));
        } else {
            seen[x] = true;
        }
        prefix_max = prefix_max.max(x);
    }
    true
}

fn is_explicit(w: &Rgf, words: &[Vec<usize>]) -> bool {
    words.iter().any(|u| u == w.letters())
}

fn run_word(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Structural membership test for a registered class; agrees with avoiding
/// [`class_patterns`] on every RGF (checked exhaustively by the harness).
pub fn characterize(id: &str, w: &Rgf) -> Result<bool> {
    if !class_ids().contains(&id) {
        return Err(Error::UnknownId(id.to_string()));
    }
    let n = w.len();
    if n == 0 {
        return Ok(true);
    }
    let letters = w.letters();
    let mult = multiplicities(w);
    let m = w.initial_run_len();
    let tail = &letters[m..];
    let ok = match id {
        // Single length-3 patterns.
        "R(111)" => mult.iter().all(|&c| c <= 2),
        "R(112)" => tail.windows(2).all(|p| p[0] >= p[1]) && tail.first().is_none_or(|&x| x <= m),
        "R(121)" => is_layered(w),
        "R(122)" => mult.iter().skip(2).all(|&c| c <= 1),
        "R(123)" => w.max_letter() <= 2,
        // Pairs of length-3 patterns.
        "R(111,112)" => {
            tail.windows(2).all(|p| p[0] > p[1]) && tail.first().is_none_or(|&x| x <= m)
        }
        "R(111,121)" => is_layered(w) && mult.iter().all(|&c| c <= 2),
        "R(111,122)" => {
            letters == run_word(n)
                || (1..n).any(|i| {
                    let mut u = run_word(i);
                    u.push(1);
                    u.extend(i + 1..n);
                    letters == u
                })
        }
        "R(112,121)" => (1..=n).any(|k| {
            let mut u = run_word(k);
            u.extend(std::iter::repeat_n(k, n - k));
            letters == u
        }),
        "R(112,122)" => (1..=n).any(|k| {
            let mut u = run_word(k);
            u.extend(std::iter::repeat_n(1, n - k));
            letters == u
        }),
        "R(112,123)" => (0..n).any(|i| {
            let mut u = vec![1];
            u.extend(std::iter::repeat_n(2, i));
            u.extend(std::iter::repeat_n(1, n - i - 1));
            letters == u
        }),
        "R(121,122)" => (1..=n).any(|i| {
            let mut u = vec![1; i];
            u.extend(2..=n - i + 1);
            letters == u
        }),
        "R(121,123)" => (1..=n).any(|i| {
            let mut u = vec![1; i];
            u.extend(std::iter::repeat_n(2, n - i));
            letters == u
        }),
        "R(122,123)" => {
            letters == vec![1; n]
                || (1..n).any(|i| {
                    let mut u = vec![1; i];
                    u.push(2);
                    u.extend(std::iter::repeat_n(1, n - i - 1));
                    letters == u
                })
        }
        // Classes avoiding three or four length-3 patterns; for n < 3 no
        // length-3 pattern can occur, so the class is all of R_n.
        "TABLE(111,112,121)" => {
            n < 3
                || is_explicit(
                    w,
                    &[run_word(n), {
                        let mut u = run_word(n - 1);
                        u.push(n - 1);
                        u
                    }],
                )
        }
        "TABLE(111,112,122)" => {
            n < 3
                || is_explicit(
                    w,
                    &[run_word(n), {
                        let mut u = run_word(n - 1);
                        u.push(1);
                        u
                    }],
                )
        }
        "TABLE(111,121,122)" => {
            n < 3
                || is_explicit(
                    w,
                    &[run_word(n), {
                        let mut u = vec![1];
                        u.extend(1..n);
                        u
                    }],
                )
        }
        "TABLE(112,121,122)" => n < 3 || is_explicit(w, &[run_word(n), vec![1; n]]),
        "TABLE(112,121,123)" => {
            n < 3
                || is_explicit(
                    w,
                    &[vec![1; n], {
                        let mut u = vec![1];
                        u.extend(std::iter::repeat_n(2, n - 1));
                        u
                    }],
                )
        }
        "TABLE(112,122,123)" => {
            n < 3
                || is_explicit(
                    w,
                    &[vec![1; n], {
                        let mut u = vec![1, 2];
                        u.extend(std::iter::repeat_n(1, n - 2));
                        u
                    }],
                )
        }
        "TABLE(121,122,123)" => {
            n < 3
                || is_explicit(
                    w,
                    &[vec![1; n], {
                        let mut u = vec![1; n - 1];
                        u.push(2);
                        u
                    }],
                )
        }
        "TABLE(111,112,121,122)" => n < 3 || letters == run_word(n),
        "TABLE(112,121,122,123)" => n < 3 || letters == vec![1; n],
        // Length-4 patterns.
        "R(1212)" => no_crossing_structure(w),
        "R(1221)" => repeated_subword(w).windows(2).all(|p| p[0] <= p[1]),
        "R(111,1212)" => no_crossing_structure(w) && mult.iter().all(|&c| c <= 2),
        "R(123,1212)" => {
            // 1^l 2^i 1^(n-i-l) with l >= 1.
            let l = letters.iter().take_while(|&&x| x == 1).count();
            let i = letters[l..].iter().take_while(|&&x| x == 2).count();
            letters[l + i..].iter().all(|&x| x == 1)
        }
        // 12...m k^(n-m): the tail after the initial run is constant (its
        // value automatically lies in [m] for an RGF).
        "R(112,1221)" => tail.windows(2).all(|p| p[0] == p[1]),
        "R(123,1221)" => {
            if letters.iter().all(|&x| x == 1) {
                true
            } else if w.max_letter() > 2 {
                false
            } else {
                // 1 1^i 2 1^j 2^k: after the first 2, all 1s precede all 2s.
                let first2 = letters.iter().position(|&x| x == 2).unwrap();
                let rest = &letters[first2 + 1..];
                let ones = rest.iter().take_while(|&&x| x == 1).count();
                rest[ones..].iter().all(|&x| x == 2)
            }
        }
        _ => unreachable!("id validated above"),
    };
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_rgfs;

    fn rgf(s: &str) -> Rgf {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        let w = rgf("12311");
        assert!(contains(&w, &pat("121")));
        let witness = contains_witness(&w, &pat("121")).unwrap();
        assert!(witness == vec![1, 2, 4] || witness == vec![1, 3, 4]);
        assert!(!contains(&w, &pat("122")));
        assert!(contains(&w, &pat("12311")));
    }

    #[test]
    fn partition_containment_examples() {
        let sigma: SetPartition = "145/2/3".parse().unwrap();
        assert!(partition_contains(&sigma, &"1/23".parse().unwrap()));
        assert!(!partition_contains(&sigma, &"12/3".parse().unwrap()));
        assert!(partition_contains(&sigma, &sigma.clone()));
    }

    #[test]
    fn avoiders_examples() {
        let v112 = PatternSet::parse_list("112").unwrap();
        let got: Vec<String> = avoiders(3, &v112).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(got, ["111", "121", "122", "123"]);

        let v1212 = PatternSet::parse_list("1212").unwrap();
        assert_eq!(count_avoiders(4, &v1212).unwrap().0, 14);

        let fib = PatternSet::parse_list("111,112").unwrap();
        assert_eq!(count_avoiders(5, &fib).unwrap().0, 8);
    }

    #[test]
    fn avoiders_of_empty_set_match_plain_enumeration() {
        for n in 0..=6 {
            let all: Vec<Rgf> = enumerate_rgfs(n).unwrap().collect();
            let avoid: Vec<Rgf> = avoiders(n, &PatternSet::empty()).unwrap().collect();
            assert_eq!(all, avoid);
        }
    }

    #[test]
    fn pruned_stream_equals_filtered_stream() {
        // Every pattern of length <= 4, cross-checked against naive filtering.
        let mut pats: Vec<Rgf> = Vec::new();
        for len in 1..=4 {
            pats.extend(enumerate_rgfs(len).unwrap());
        }
        for v in pats {
            let set = PatternSet::new(vec![Pattern::new(v).unwrap()]);
            for n in 0..=9 {
                let filtered: Vec<Rgf> = enumerate_rgfs(n)
                    .unwrap()
                    .filter(|w| avoids_all(w, &set))
                    .collect();
                let pruned: Vec<Rgf> = avoiders(n, &set).unwrap().collect();
                assert_eq!(filtered, pruned, "mismatch for {set} at n={n}");
            }
        }
    }

    #[test]
    fn prefix_split_partitions_the_stream() {
        let set = PatternSet::parse_list("1212").unwrap();
        for depth in 0..=4 {
            let mut merged = Vec::new();
            for p in split_prefixes(7, &set, depth).unwrap() {
                merged.extend(avoiders_under_prefix(7, &set, &p).unwrap());
            }
            let direct: Vec<Rgf> = avoiders(7, &set).unwrap().collect();
            assert_eq!(merged, direct, "depth {depth}");
        }
        assert_eq!(
            count_avoiders_par(8, &set, DEFAULT_MAX_N).unwrap(),
            count_avoiders(8, &set).unwrap().0
        );
    }

    #[test]
    fn redundant_patterns_are_flagged_not_removed() {
        let set = PatternSet::parse_list("11,112").unwrap();
        assert_eq!(set.patterns().len(), 2);
        assert_eq!(set.warnings().len(), 1);
        // The avoidance class is unchanged by the redundant longer pattern.
        let tight = PatternSet::parse_list("11").unwrap();
        for n in 0..=6 {
            let a: Vec<Rgf> = avoiders(n, &set).unwrap().collect();
            let b: Vec<Rgf> = avoiders(n, &tight).unwrap().collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn arc_diagram_figures() {
        let sigma: SetPartition = "134/267/5".parse().unwrap();
        let arcs = arc_diagram(&sigma);
        assert_eq!(arcs.arcs(), [(1, 3), (2, 6), (3, 4), (6, 7)]);
        let left = left_arc_diagram(&sigma);
        assert_eq!(left.arcs(), [(1, 3), (1, 4), (2, 6), (2, 7)]);
        assert!(!left.has_nesting());
        assert!(left.has_crossing());

        let singles = SetPartition::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert!(arc_diagram(&singles).arcs().is_empty());
        assert!(left_arc_diagram(&singles).arcs().is_empty());
    }

    #[test]
    fn textbook_nesting_and_crossing() {
        let nest = ArcDiagram {
            n: 4,
            arcs: vec![(1, 4), (2, 3)],
        };
        assert!(nest.has_nesting());
        assert!(!nest.has_crossing());
        let cross = ArcDiagram {
            n: 4,
            arcs: vec![(1, 3), (2, 4)],
        };
        assert!(cross.has_crossing());
        assert!(!cross.has_nesting());
    }

    #[test]
    fn characterize_examples() {
        assert!(characterize("R(121)", &rgf("1122233")).unwrap());
        assert!(characterize("R(1221)", &rgf("1112112323")).unwrap());
        assert!(!characterize("R(112)", &rgf("12332412")).unwrap());
        assert!(characterize("R(112)", &rgf("1211")).unwrap());
        assert!(matches!(
            characterize("R(999)", &rgf("1")),
            Err(Error::UnknownId(_))
        ));
    }

    #[test]
    fn characterizations_match_brute_force_small() {
        for id in class_ids() {
            let set = class_patterns(id).unwrap();
            for n in 0..=6 {
                for w in enumerate_rgfs(n).unwrap() {
                    assert_eq!(
                        characterize(id, &w).unwrap(),
                        avoids_all(&w, &set),
                        "class {id}, word {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn left_nonnesting_is_avoiding_1221_small() {
        let v = PatternSet::parse_list("1221").unwrap();
        for n in 0..=7 {
            for w in enumerate_rgfs(n).unwrap() {
                let sigma = SetPartition::from_rgf(&w);
                assert_eq!(
                    avoids_all(&w, &v),
                    !left_arc_diagram(&sigma).has_nesting(),
                    "word {w}"
                );
            }
        }
    }
}
