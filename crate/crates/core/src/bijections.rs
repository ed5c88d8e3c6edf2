//! The constructive bijections between avoidance classes, rooted unimodal
//! compositions, partitions in rectangles, and (two-colored) Motzkin paths.
//!
//! Every map is registered with a stable id, enumerable domain and codomain,
//! an inverse where one exists, and the list of statistics it transports, so
//! a single exhaustive battery (see [`battery`]) exercises all of them.

use crate::error::{Error, Result};
use crate::objects::{
    delta_distinct, delta_distinct_inv, enumerate_motzkin, enumerate_partitions_in,
    enumerate_rooted_unimodal, enumerate_two_colored, ColoredStep, IntegerPartition, MotzkinPath,
    PlainStep, Rectangle, RootedUnimodalComposition, TwoColoredMotzkinPath,
};
use crate::patterns::{avoiders_with_limit, avoids_all, PatternSet};
use crate::statistics::{stat_letter, stat_total, Stat};
use crate::words::Rgf;

fn pattern_set(list: &str) -> PatternSet {
    PatternSet::parse_list(list).expect("static pattern list")
}

fn require_avoider(w: &Rgf, list: &str) -> Result<()> {
    if avoids_all(w, &pattern_set(list)) {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{w} does not avoid {{{list}}}")))
    }
}

// ---------------------------------------------------------------------------
// R_n(112) <-> rooted unimodal compositions
// ---------------------------------------------------------------------------

/// Sends a 112-avoider to its right-smaller profile `u_i = rs(w_i)`, rooted at
/// the first maximum of `w`; the weight of the image is `rs(w)`.
pub fn psi_112(w: &Rgf) -> Result<RootedUnimodalComposition> {
    require_avoider(w, "112")?;
    if w.is_empty() {
        return Ok(RootedUnimodalComposition::empty());
    }
    let values: Vec<usize> = (1..=w.len()).map(|j| stat_letter(w, j, Stat::Rs)).collect();
    let max = w.max_letter();
    let root = w.letters().iter().position(|&x| x == max).unwrap() + 1;
    RootedUnimodalComposition::new(values, root)
}

/// Inverse of [`psi_112`]: rebuild the initial run `1..m` from the root, then
/// read each later letter off the last index carrying the required value in
/// the rising half of `u`.
pub fn psi_112_inv(u: &RootedUnimodalComposition) -> Result<Rgf> {
    if u.is_empty() {
        return Ok(Rgf::empty());
    }
    let m = u.root();
    let values = u.values();
    let mut letters: Vec<usize> = (1..=m).collect();
    for &v in &values[m..] {
        let pos = values[..m]
            .iter()
            .rposition(|&x| x == v)
            .ok_or_else(|| Error::Invalid(format!("value {v} missing from the rising half")))?;
        letters.push(pos + 1);
    }
    let w = Rgf::from_letters(letters)?;
    require_avoider(&w, "112")?;
    Ok(w)
}

// ---------------------------------------------------------------------------
// Rooted unimodal compositions <-> partitions in rectangles
// ---------------------------------------------------------------------------

/// Reads the interior of `u` as the diagonal cell counts of a Young diagram
/// inside the `(m-1) x (n-m)` rectangle fixed by the root; preserves weight.
pub fn phi_unimodal(u: &RootedUnimodalComposition) -> Result<(IntegerPartition, Rectangle)> {
    let n = u.len();
    if n == 0 {
        return Err(Error::Invalid(
            "the empty composition has no rectangle".into(),
        ));
    }
    let m = u.root();
    let rect = Rectangle::new(m - 1, n - m);
    let mut grid = vec![vec![false; rect.cols]; rect.rows];
    for i in 2..n {
        let d = i as i64 - m as i64;
        for idx in 1..=u.values()[i - 1] {
            // Cells along diagonal offset d, counted from the end nearest the
            // (1,1) corner.
            let (row, col) = if d >= 0 {
                (idx, idx + d as usize)
            } else {
                (idx + (-d) as usize, idx)
            };
            if row > rect.rows || col > rect.cols {
                return Err(Error::Invalid(format!(
                    "diagonal count at position {i} overflows the rectangle"
                )));
            }
            grid[row - 1][col - 1] = true;
        }
    }
    // The diagonal counts of a valid composition always fill a Young diagram.
    let mut parts = Vec::new();
    for row in &grid {
        let len = row.iter().take_while(|&&c| c).count();
        if row.iter().skip(len).any(|&c| c) {
            return Err(Error::Invalid(
                "diagonal counts do not stack left-justified".into(),
            ));
        }
        parts.push(len);
    }
    let lambda = IntegerPartition::new(parts)
        .map_err(|_| Error::Invalid("diagonal counts are not weakly decreasing".into()))?;
    Ok((lambda, rect))
}

/// Inverse of [`phi_unimodal`]: the rectangle fixes the root and length, and
/// the diagonal cell counts of the diagram give back the interior values.
pub fn phi_unimodal_inv(
    lambda: &IntegerPartition,
    rect: &Rectangle,
) -> Result<RootedUnimodalComposition> {
    if !lambda.fits_in(rect) {
        return Err(Error::Invalid(format!("{lambda} does not fit in {rect}")));
    }
    let m = rect.rows + 1;
    let n = rect.rows + rect.cols + 1;
    let mut values = vec![0usize; n];
    for i in 2..n {
        let d = i as i64 - m as i64;
        let mut count = 0;
        for j in 1..=lambda.num_parts() {
            let col = j as i64 + d;
            if col >= 1 && col <= lambda.part(j) as i64 {
                count += 1;
            }
        }
        values[i - 1] = count;
    }
    RootedUnimodalComposition::new(values, m)
}

// ---------------------------------------------------------------------------
// R_n(112) <-> partitions in rectangles, directly
// ---------------------------------------------------------------------------

/// Reads the reversed tail gaps `m - w_i` of a 112-avoider as a partition in
/// the `(n-m) x (m-1)` rectangle; `lb(w)` becomes the weight.
pub fn rho_112(w: &Rgf) -> Result<(IntegerPartition, Rectangle)> {
    require_avoider(w, "112")?;
    if w.is_empty() {
        return Err(Error::Invalid("the empty word has no rectangle".into()));
    }
    let n = w.len();
    let m = w.max_letter();
    let rect = Rectangle::new(n - m, m - 1);
    let parts: Vec<usize> = w.letters()[m..].iter().rev().map(|&x| m - x).collect();
    let lambda = IntegerPartition::new(parts).expect("weakly decreasing tail gaps");
    Ok((lambda, rect))
}

/// Inverse of [`rho_112`].
pub fn rho_112_inv(lambda: &IntegerPartition, rect: &Rectangle) -> Result<Rgf> {
    if !lambda.fits_in(rect) {
        return Err(Error::Invalid(format!("{lambda} does not fit in {rect}")));
    }
    let m = rect.cols + 1;
    let n = rect.rows + m;
    let mut letters: Vec<usize> = (1..=m).collect();
    for i in 1..=rect.rows {
        letters.push(m - lambda.part(rect.rows - i + 1));
    }
    debug_assert_eq!(letters.len(), n);
    let w = Rgf::from_letters(letters)?;
    require_avoider(&w, "112")?;
    Ok(w)
}

// ---------------------------------------------------------------------------
// R_n(112) -> R_n(122), R_n(121), and R_n(122) -> R_n(123)
// ---------------------------------------------------------------------------

/// Starts from the run `1..m` and, for each tail letter `x`, inserts a 1 just
/// right of the run element `m - x + 1`. Transports `(lb, ls, rb)` to
/// `(lb, rb, ls)`.
pub fn eta_112_122(w: &Rgf) -> Result<Rgf> {
    require_avoider(w, "112")?;
    let m = w.max_letter();
    let mut out: Vec<usize> = (1..=m).collect();
    for &x in &w.letters()[m..] {
        let anchor = m - x + 1;
        let pos = out.iter().position(|&y| y == anchor).unwrap();
        out.insert(pos + 1, 1);
    }
    let v = Rgf::from_letters(out)?;
    require_avoider(&v, "122")?;
    Ok(v)
}

/// Inverse of [`eta_112_122`]: every non-initial 1 recovers one tail letter
/// from the largest non-1 value seen to its left.
pub fn eta_112_122_inv(v: &Rgf) -> Result<Rgf> {
    require_avoider(v, "122")?;
    if v.is_empty() {
        return Ok(Rgf::empty());
    }
    let m = v.max_letter();
    let mut anchor = 1usize;
    let mut tail = Vec::new();
    for &x in &v.letters()[1..] {
        if x > 1 {
            anchor = x;
        } else {
            tail.push(m - anchor + 1);
        }
    }
    let mut letters: Vec<usize> = (1..=m).collect();
    letters.extend(tail);
    let w = Rgf::from_letters(letters)?;
    require_avoider(&w, "112")?;
    Ok(w)
}

/// Sorts the letters weakly increasing, landing in the layered words
/// `R_n(121)`; preserves `ls`, which only depends on the multiset of letters.
pub fn xi_112_121(w: &Rgf) -> Result<Rgf> {
    require_avoider(w, "112")?;
    let mut letters = w.letters().to_vec();
    letters.sort_unstable();
    let v = Rgf::from_letters(letters)?;
    require_avoider(&v, "121")?;
    Ok(v)
}

/// Inverse of [`xi_112_121`]: the first element of each layer rebuilds the
/// initial run, the remaining letters follow weakly decreasing.
pub fn xi_112_121_inv(v: &Rgf) -> Result<Rgf> {
    require_avoider(v, "121")?;
    let m = v.max_letter();
    let mut rest = Vec::new();
    let mut seen = vec![false; m + 1];
    for &x in v.letters() {
        if seen[x] {
            rest.push(x);
        } else {
            seen[x] = true;
        }
    }
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let mut letters: Vec<usize> = (1..=m).collect();
    letters.extend(rest);
    let w = Rgf::from_letters(letters)?;
    require_avoider(&w, "112")?;
    Ok(w)
}

/// Collapses every letter above 1 to 2; a 122-avoider is determined by the
/// placement of its ones, so this is a bijection onto `R_n(123)` and it
/// preserves `rs` letter by letter.
pub fn f_122_123(w: &Rgf) -> Result<Rgf> {
    require_avoider(w, "122")?;
    let letters = w.letters().iter().map(|&x| x.min(2)).collect();
    let v = Rgf::from_letters(letters)?;
    require_avoider(&v, "123")?;
    Ok(v)
}

/// Inverse of [`f_122_123`]: the 2s become `2, 3, 4, ...` in order.
pub fn f_122_123_inv(v: &Rgf) -> Result<Rgf> {
    require_avoider(v, "123")?;
    let mut next = 2usize;
    let letters = v
        .letters()
        .iter()
        .map(|&x| {
            if x == 1 {
                1
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    let w = Rgf::from_letters(letters)?;
    require_avoider(&w, "122")?;
    Ok(w)
}

// ---------------------------------------------------------------------------
// Two-colored Motzkin paths <-> R_n(1212)
// ---------------------------------------------------------------------------

/// Reads a two-colored Motzkin path of length `n-1` into a 1212-avoider of
/// length `n`: up and `b` steps open new values, `a` repeats the previous
/// letter, and a down step returns to the value opened by its paired up step.
/// Area maps to `rs`.
pub fn psi_motzkin_1212(p: &TwoColoredMotzkinPath) -> Result<Rgf> {
    let pairing = p.pairing();
    let mut letters = vec![1usize];
    let mut max = 1usize;
    for (i, &s) in p.steps().iter().enumerate() {
        let next = match s {
            ColoredStep::Up | ColoredStep::FlatB => {
                max += 1;
                max
            }
            ColoredStep::FlatA => letters[i],
            ColoredStep::Down => letters[pairing[&(i + 1)] - 1],
        };
        letters.push(next);
    }
    let w = Rgf::from_letters(letters)?;
    require_avoider(&w, "1212")?;
    Ok(w)
}

/// Inverse of [`psi_motzkin_1212`], classified by how consecutive letters
/// compare and whether an increase is revisited later.
pub fn psi_motzkin_1212_inv(w: &Rgf) -> Result<TwoColoredMotzkinPath> {
    require_avoider(w, "1212")?;
    if w.is_empty() {
        return Err(Error::Invalid("the empty word has no path".into()));
    }
    let letters = w.letters();
    let n = letters.len();
    let mut steps = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let step = if letters[i] == letters[i + 1] {
            ColoredStep::FlatA
        } else if letters[i] < letters[i + 1] {
            if letters[i + 2..].contains(&letters[i]) {
                ColoredStep::Up
            } else {
                ColoredStep::FlatB
            }
        } else {
            ColoredStep::Down
        };
        steps.push(step);
    }
    TwoColoredMotzkinPath::new(steps)
}

// ---------------------------------------------------------------------------
// R_n(111, 1212) <-> plain Motzkin paths
// ---------------------------------------------------------------------------

/// First of a repeated pair becomes an up step, a singleton a horizontal
/// step, the second of a pair a down step; `rs(w_i)` equals the level of
/// step `i`.
pub fn phi_motzkin_111_1212(w: &Rgf) -> Result<MotzkinPath> {
    require_avoider(w, "111,1212")?;
    let letters = w.letters();
    let steps = letters
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if letters[i + 1..].contains(&x) {
                PlainStep::Up
            } else if letters[..i].contains(&x) {
                PlainStep::Down
            } else {
                PlainStep::Flat
            }
        })
        .collect();
    MotzkinPath::new(steps)
}

/// Inverse of [`phi_motzkin_111_1212`]: up and horizontal steps open new
/// values, down steps revisit their paired up step's value.
pub fn phi_motzkin_111_1212_inv(p: &MotzkinPath) -> Result<Rgf> {
    let pairing = p.pairing();
    let mut letters: Vec<usize> = Vec::with_capacity(p.len());
    let mut max = 0usize;
    for (j, &s) in p.steps().iter().enumerate() {
        let next = match s {
            PlainStep::Up | PlainStep::Flat => {
                max += 1;
                max
            }
            PlainStep::Down => letters[pairing[&(j + 1)] - 1],
        };
        letters.push(next);
    }
    let w = Rgf::from_letters(letters)?;
    require_avoider(&w, "111,1212")?;
    Ok(w)
}

// ---------------------------------------------------------------------------
// The inc map and the alpha embedding
// ---------------------------------------------------------------------------

/// Sorts the repeated letters weakly increasing in place, fixing every first
/// occurrence; lands in `R_n(1221)` and preserves both `lb` and `ls`.
pub fn inc(w: &Rgf) -> Rgf {
    let letters = w.letters();
    let mut seen = vec![false; w.max_letter() + 1];
    let mut repeats = Vec::new();
    let mut repeat_pos = Vec::new();
    for (i, &x) in letters.iter().enumerate() {
        if seen[x] {
            repeats.push(x);
            repeat_pos.push(i);
        } else {
            seen[x] = true;
        }
    }
    repeats.sort_unstable();
    let mut out = letters.to_vec();
    for (&pos, &val) in repeat_pos.iter().zip(&repeats) {
        out[pos] = val;
    }
    Rgf::from_letters(out).expect("inc preserves the growth condition")
}

/// Inverse of `inc` restricted to `R_n(1212)`: rebuild the unique noncrossing
/// arrangement by always reusing the largest already-opened value that still
/// has repeats to place.
pub fn inc_1212_inv(v: &Rgf) -> Result<Rgf> {
    require_avoider(v, "1221")?;
    let letters = v.letters();
    let m = v.max_letter();
    let mut need = vec![0usize; m + 1];
    let mut seen = vec![false; m + 1];
    for &x in letters {
        if seen[x] {
            need[x] += 1;
        } else {
            seen[x] = true;
        }
    }
    let mut out = Vec::with_capacity(letters.len());
    let mut opened = 0usize;
    let mut first = vec![false; m + 1];
    for &x in letters {
        if !first[x] {
            first[x] = true;
            opened = opened.max(x);
            out.push(x);
        } else {
            let pick = (1..=opened)
                .rev()
                .find(|&j| need[j] > 0)
                .ok_or_else(|| Error::Invalid("no repeat available; not an inc image".into()))?;
            need[pick] -= 1;
            out.push(pick);
        }
    }
    let w = Rgf::from_letters(out)?;
    require_avoider(&w, "1212")?;
    if inc(&w) != *v {
        return Err(Error::Invalid("reconstruction does not sort back".into()));
    }
    Ok(w)
}

/// Bumps every first occurrence of `v` by one, wraps the result in ones, and
/// resorts the repeats: an injection `R_k(1221) -> R_{k+2}(1221)`.
pub fn alpha_1221(v: &Rgf) -> Result<Rgf> {
    require_avoider(v, "1221")?;
    let mut bumped = v.letters().to_vec();
    let mut seen = vec![false; v.max_letter() + 2];
    for x in bumped.iter_mut() {
        if !seen[*x] {
            seen[*x] = true;
            *x += 1;
        }
    }
    let mut letters = vec![1usize];
    letters.extend(bumped);
    letters.push(1);
    let u = Rgf::from_letters(letters)?;
    Ok(inc(&u))
}

/// Membership test for the image of [`alpha_1221`]: the word ends in a repeat
/// and has another 1, repeats stay strictly below the running maximum, and a
/// repeat closing a block of first occurrences drops at least two below the
/// block's first value.
pub fn alpha_image_member(w: &Rgf) -> bool {
    if !avoids_all(w, &pattern_set("1221")) {
        return false;
    }
    let letters = w.letters();
    let n = letters.len();
    if n < 2 {
        return false;
    }
    // The empty word wraps to 11, where the strict drop below the running
    // maximum degenerates.
    if letters == [1, 1] {
        return true;
    }
    let mut is_repeat = vec![false; n];
    let mut seen = vec![false; w.max_letter() + 1];
    for (i, &x) in letters.iter().enumerate() {
        if seen[x] {
            is_repeat[i] = true;
        } else {
            seen[x] = true;
        }
    }
    // (i) more than one 1, and the word ends in a repeated letter.
    if letters.iter().filter(|&&x| x == 1).count() < 2 || !is_repeat[n - 1] {
        return false;
    }
    // (ii) every repeat sits strictly below the running maximum before it.
    let mut max = 0usize;
    for (i, &x) in letters.iter().enumerate() {
        if is_repeat[i] && x >= max {
            return false;
        }
        max = max.max(x);
    }
    // (iii) a repeat closing a block of first occurrences flanked by repeats
    // must be at least two below the block's first value.
    let mut i = 0;
    while i < n {
        if !is_repeat[i] {
            let start = i;
            while i < n && !is_repeat[i] {
                i += 1;
            }
            if start > 0 && i < n && letters[i] + 1 >= letters[start] {
                return false;
            }
        } else {
            i += 1;
        }
    }
    true
}

/// Inverse of [`alpha_1221`] on its image.
pub fn alpha_1221_inv(w: &Rgf) -> Result<Rgf> {
    if !alpha_image_member(w) {
        return Err(Error::Invalid(format!("{w} is not in the image of alpha")));
    }
    let letters = w.letters();
    let n = letters.len();
    let mut seen = vec![false; w.max_letter() + 1];
    let mut repeat_pos = Vec::new();
    let mut repeats = Vec::new();
    for (i, &x) in letters.iter().enumerate() {
        if seen[x] {
            repeat_pos.push(i);
            repeats.push(x);
        } else {
            seen[x] = true;
        }
    }
    // The repeats of the preimage's wrap read `r 1`; inc sorted them to `1 r`.
    if repeats.first() != Some(&1) {
        return Err(Error::Invalid("image word must repeat a 1".into()));
    }
    let mut rotated: Vec<usize> = repeats[1..].to_vec();
    rotated.push(1);
    let mut u = letters.to_vec();
    for (&pos, &val) in repeat_pos.iter().zip(&rotated) {
        u[pos] = val;
    }
    if u[0] != 1 || u[n - 1] != 1 {
        return Err(Error::Invalid(
            "unwrapped word must be fenced by ones".into(),
        ));
    }
    // Strip the fence and undo the first-occurrence bump.
    let mut inner: Vec<usize> = u[1..n - 1].to_vec();
    let mut max = 0usize;
    for x in inner.iter_mut() {
        if *x > max {
            max = *x;
            *x -= 1;
        }
    }
    let v = Rgf::from_letters(inner)?;
    require_avoider(&v, "1221")?;
    Ok(v)
}

// ---------------------------------------------------------------------------
// Two-colored Motzkin paths <-> R_n(1221)
// ---------------------------------------------------------------------------

/// The raw word `v(R)` read off a two-colored path before resorting: up and
/// `b` steps open new values, an `a` step drops its level below the maximum,
/// and a down step additionally drops by its back-span area share.
pub fn beta_word(p: &TwoColoredMotzkinPath) -> Result<Rgf> {
    let levels = p.levels();
    let mut letters = vec![1usize];
    let mut max = 1usize;
    for (i, &s) in p.steps().iter().enumerate() {
        let next = match s {
            ColoredStep::Up | ColoredStep::FlatB => max + 1,
            ColoredStep::FlatA => max - levels[i],
            ColoredStep::Down => max - p.a_stat(i + 1).unwrap() - levels[i],
        };
        if next == 0 {
            return Err(Error::Invalid("path drops below value 1".into()));
        }
        letters.push(next);
        max = max.max(next);
    }
    Rgf::from_letters(letters)
}

/// The bijection onto `R_n(1221)`: resort the repeats of [`beta_word`]; the
/// path's area becomes `lb` of the image.
pub fn beta_motzkin_1221(p: &TwoColoredMotzkinPath) -> Result<Rgf> {
    let v = beta_word(p)?;
    let w = inc(&v);
    require_avoider(&w, "1221")?;
    Ok(w)
}

/// Inverse of [`beta_motzkin_1221`], following the first-return decomposition
/// of the path: a leading `a` prepends a 1, a leading `b` shifts the rest up,
/// and a leading up step wraps an alpha image around the part before the
/// matching return to the axis, located by the breaking letter.
pub fn beta_motzkin_1221_inv(w: &Rgf) -> Result<TwoColoredMotzkinPath> {
    require_avoider(w, "1221")?;
    let steps = beta_inv_steps(w.letters())?;
    let p = TwoColoredMotzkinPath::new(steps)?;
    debug_assert_eq!(&beta_motzkin_1221(&p).unwrap(), w);
    Ok(p)
}

fn beta_inv_steps(letters: &[usize]) -> Result<Vec<ColoredStep>> {
    let n = letters.len();
    if n == 0 || letters[0] != 1 {
        return Err(Error::Invalid("image words start with 1".into()));
    }
    if n == 1 {
        return Ok(Vec::new());
    }
    if letters[1] == 1 {
        // An initial a-step prepends a second 1.
        let mut steps = vec![ColoredStep::FlatA];
        steps.extend(beta_inv_steps(&letters[1..])?);
        return Ok(steps);
    }
    if letters.iter().filter(|&&x| x == 1).count() == 1 {
        // An initial b-step shifts the remainder's image up by one.
        let shifted: Vec<usize> = letters[1..].iter().map(|&x| x - 1).collect();
        let mut steps = vec![ColoredStep::FlatB];
        steps.extend(beta_inv_steps(&shifted)?);
        return Ok(steps);
    }
    // An initial up step: the prefix up to the breaking letter (the rightmost
    // repeat whose prefix is an alpha image) came from the enclosed subpath,
    // the rest from the suffix after the first return to the axis.
    let mut is_repeat = vec![false; n];
    let mut seen = vec![false; letters.iter().max().copied().unwrap_or(0) + 1];
    for (i, &x) in letters.iter().enumerate() {
        if seen[x] {
            is_repeat[i] = true;
        } else {
            seen[x] = true;
        }
    }
    for k in (3..=n).rev() {
        if !is_repeat[k - 1] {
            continue;
        }
        let prefix = Rgf::from_letters(letters[..k].to_vec())?;
        if !alpha_image_member(&prefix) {
            continue;
        }
        let x = alpha_1221_inv(&prefix)?;
        let m = prefix.max_letter();
        let mut q_word = vec![1usize];
        for &y in &letters[k..] {
            if y < m {
                return Err(Error::Invalid(
                    "suffix letters must exceed the prefix values".into(),
                ));
            }
            q_word.push(y - (m - 1));
        }
        let mut steps = vec![ColoredStep::Up];
        steps.extend(beta_inv_steps(x.letters())?);
        steps.push(ColoredStep::Down);
        steps.extend(beta_inv_steps(&q_word)?);
        return Ok(steps);
    }
    Err(Error::Invalid(
        "no breaking letter found; not in the image of beta".into(),
    ))
}

// ---------------------------------------------------------------------------
// R_n(111, 112) <-> partitions in shrunken rectangles
// ---------------------------------------------------------------------------

/// Composite of the tail-gap reading with the distinct-parts bijection: a
/// `{111,112}`-avoider with maximum `m` maps to a partition in the
/// `(n-m) x (2m-n)` rectangle. Carries all four statistics (see
/// [`rho_prime_stat_targets`]).
pub fn rho_prime_111_112(w: &Rgf) -> Result<(IntegerPartition, Rectangle)> {
    require_avoider(w, "111,112")?;
    if w.is_empty() {
        return Err(Error::Invalid("the empty word has no rectangle".into()));
    }
    let (lambda, rect) = rho_112(w)?;
    let r = rect.rows;
    let mu = delta_distinct(&lambda, r)?;
    let gamma = Rectangle::new(r, rect.cols + 1 - r);
    debug_assert!(mu.fits_in(&gamma));
    Ok((mu, gamma))
}

/// Inverse of [`rho_prime_111_112`].
pub fn rho_prime_111_112_inv(mu: &IntegerPartition, gamma: &Rectangle) -> Result<Rgf> {
    if !mu.fits_in(gamma) {
        return Err(Error::Invalid(format!("{mu} does not fit in {gamma}")));
    }
    let r = gamma.rows;
    let lambda = delta_distinct_inv(mu, r)?;
    let rect = Rectangle::new(r, gamma.cols + r - 1);
    let w = rho_112_inv(&lambda, &rect)?;
    require_avoider(&w, "111,112")?;
    Ok(w)
}

/// The four statistics of the preimage, computed from the image alone:
/// `(lb, ls, rb, rs)` in terms of the rectangle and the weights of `mu` and
/// its complement.
pub fn rho_prime_stat_targets(
    mu: &IntegerPartition,
    gamma: &Rectangle,
) -> (usize, usize, usize, usize) {
    let r = gamma.rows;
    let m = gamma.rows + gamma.cols; // rows = n - m and cols = 2m - n
    let ch2 = |x: usize| x * x.saturating_sub(1) / 2;
    let mu_c = gamma.area() - mu.weight();
    (
        ch2(r) + mu.weight(),
        ch2(m) + ch2(r) + mu_c,
        ch2(m),
        2 * ch2(r) + mu.weight(),
    )
}

// ---------------------------------------------------------------------------
// Registry and exhaustive battery
// ---------------------------------------------------------------------------

/// Any object appearing as the domain or codomain of a registered bijection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BijObject {
    Word(Rgf),
    Composition(RootedUnimodalComposition),
    PartitionInBox(IntegerPartition, Rectangle),
    ColoredPath(TwoColoredMotzkinPath),
    PlainPath(MotzkinPath),
}

impl std::fmt::Display for BijObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BijObject::Word(w) => write!(f, "{w}"),
            BijObject::Composition(u) => write!(f, "{u}"),
            BijObject::PartitionInBox(l, r) => write!(f, "{l} in {r}"),
            BijObject::ColoredPath(p) => write!(f, "{p}"),
            BijObject::PlainPath(p) => write!(f, "{p}"),
        }
    }
}

impl BijObject {
    /// Named statistic of the object, when defined: `lb`, `ls`, `rb`, `rs` on
    /// words, `weight` on compositions and partitions, `area` and `level` on
    /// paths.
    pub fn stat(&self, name: &str) -> Option<usize> {
        match (self, name) {
            (BijObject::Word(w), _) => Stat::parse(name).map(|st| stat_total(w, st)),
            (BijObject::Composition(u), "weight") => Some(u.weight()),
            (BijObject::PartitionInBox(l, _), "weight") => Some(l.weight()),
            (BijObject::ColoredPath(p), "area") => Some(p.area()),
            (BijObject::ColoredPath(p), "level") => Some(p.path_level()),
            (BijObject::PlainPath(p), "level") => Some(p.path_level()),
            (BijObject::PlainPath(p), "area") => Some(p.area()),
            _ => None,
        }
    }
}

/// What kind of textual input a bijection side accepts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ObjectKind {
    Word,
    Composition,
    PartitionInBox,
    ColoredPath,
    PlainPath,
}

impl ObjectKind {
    pub fn describe(self) -> &'static str {
        match self {
            ObjectKind::Word => "word (e.g. 12311)",
            ObjectKind::Composition => "rooted composition (e.g. 0123[3]32110)",
            ObjectKind::PartitionInBox => "partition in a box (e.g. `(5,5,4,3,3) in 6x5`)",
            ObjectKind::ColoredPath => "two-colored Motzkin path (e.g. UbUaDUbDDUbD)",
            ObjectKind::PlainPath => "Motzkin path (e.g. UHDH)",
        }
    }

    pub fn parse(self, s: &str) -> Result<BijObject> {
        Ok(match self {
            ObjectKind::Word => BijObject::Word(s.parse()?),
            ObjectKind::Composition => BijObject::Composition(s.parse()?),
            ObjectKind::PartitionInBox => {
                let (lam, rect) = s.split_once(" in ").ok_or_else(|| {
                    Error::Invalid("expected `<partition> in <rows>x<cols>`".into())
                })?;
                let lambda: IntegerPartition = lam.trim().parse()?;
                let (rows, cols) = rect
                    .trim()
                    .split_once('x')
                    .ok_or_else(|| Error::Invalid("expected `<rows>x<cols>`".into()))?;
                let rows = rows
                    .parse()
                    .map_err(|_| Error::Invalid("bad row count".into()))?;
                let cols = cols
                    .parse()
                    .map_err(|_| Error::Invalid("bad column count".into()))?;
                BijObject::PartitionInBox(lambda, Rectangle::new(rows, cols))
            }
            ObjectKind::ColoredPath => BijObject::ColoredPath(s.parse()?),
            ObjectKind::PlainPath => BijObject::PlainPath(s.parse()?),
        })
    }
}

/// Registry entry for one bijection.
pub struct BijectionInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub input: ObjectKind,
    pub output: ObjectKind,
    /// Transported statistics as (domain stat, codomain stat) names.
    pub transports: &'static [(&'static str, &'static str)],
    pub has_inverse: bool,
    /// Smallest size parameter the map is defined at.
    pub n_min: usize,
}

pub const BIJECTION_IDS: [&str; 13] = [
    "psi112",
    "phi",
    "rho",
    "eta",
    "xi",
    "f",
    "psi_motzkin",
    "phi_motzkin",
    "inc",
    "inc1212",
    "alpha",
    "beta",
    "rho_prime",
];

pub fn registry() -> Vec<BijectionInfo> {
    use ObjectKind::*;
    vec![
        BijectionInfo {
            id: "psi112",
            summary: "R_n(112) -> rooted unimodal compositions; rs becomes the weight",
            input: Word,
            output: Composition,
            transports: &[("rs", "weight")],
            has_inverse: true,
            n_min: 0,
        },
        BijectionInfo {
            id: "phi",
            summary: "rooted compositions -> partitions in (m-1)x(n-m); weight-preserving",
            input: Composition,
            output: PartitionInBox,
            transports: &[("weight", "weight")],
            has_inverse: true,
            n_min: 1,
        },
        BijectionInfo {
            id: "rho",
            summary: "R_n(112) -> partitions in (n-m)x(m-1); lb becomes the weight",
            input: Word,
            output: PartitionInBox,
            transports: &[("lb", "weight")],
            has_inverse: true,
            n_min: 1,
        },
        BijectionInfo {
            id: "eta",
            summary: "R_n(112) -> R_n(122); carries (lb, ls, rb) to (lb, rb, ls)",
            input: Word,
            output: Word,
            transports: &[("lb", "lb"), ("ls", "rb"), ("rb", "ls")],
            has_inverse: true,
            n_min: 0,
        },
        BijectionInfo {
            id: "xi",
            summary: "R_n(112) -> R_n(121) by sorting; preserves ls",
            input: Word,
            output: Word,
            transports: &[("ls", "ls")],
            has_inverse: true,
            n_min: 0,
        },
        BijectionInfo {
            id: "f",
            summary: "R_n(122) -> R_n(123) by collapsing to twos; preserves rs",
            input: Word,
            output: Word,
            transports: &[("rs", "rs")],
            has_inverse: true,
            n_min: 0,
        },
        BijectionInfo {
            id: "psi_motzkin",
            summary: "two-colored Motzkin paths of length n-1 -> R_n(1212); area becomes rs",
            input: ColoredPath,
            output: Word,
            transports: &[("area", "rs")],
            has_inverse: true,
            n_min: 1,
        },
        BijectionInfo {
            id: "phi_motzkin",
            summary: "R_n(111,1212) -> Motzkin paths of length n; rs becomes the level sum",
            input: Word,
            output: PlainPath,
            transports: &[("rs", "level")],
            has_inverse: true,
            n_min: 0,
        },
        BijectionInfo {
            id: "inc",
            summary: "R_n -> R_n(1221), sorting repeated letters; preserves lb and ls",
            input: Word,
            output: Word,
            transports: &[("lb", "lb"), ("ls", "ls")],
            has_inverse: false,
            n_min: 0,
        },
        BijectionInfo {
            id: "inc1212",
            summary: "inc restricted to R_n(1212), a bijection onto R_n(1221)",
            input: Word,
            output: Word,
            transports: &[("lb", "lb"), ("ls", "ls")],
            has_inverse: true,
            n_min: 0,
        },
        BijectionInfo {
            id: "alpha",
            summary: "injection R_k(1221) -> R_{k+2}(1221) wrapping in ones",
            input: Word,
            output: Word,
            transports: &[],
            has_inverse: true,
            n_min: 0,
        },
        BijectionInfo {
            id: "beta",
            summary: "two-colored Motzkin paths of length n-1 -> R_n(1221); area becomes lb",
            input: ColoredPath,
            output: Word,
            transports: &[("area", "lb")],
            has_inverse: true,
            n_min: 1,
        },
        BijectionInfo {
            id: "rho_prime",
            summary: "R_n(111,112) -> partitions in (n-m)x(2m-n); carries all four statistics",
            input: Word,
            output: PartitionInBox,
            transports: &[],
            has_inverse: true,
            n_min: 1,
        },
    ]
}

pub fn info(id: &str) -> Result<BijectionInfo> {
    registry()
        .into_iter()
        .find(|b| b.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Applies a registered bijection forward.
pub fn apply(id: &str, input: &BijObject) -> Result<BijObject> {
    Ok(match (id, input) {
        ("psi112", BijObject::Word(w)) => BijObject::Composition(psi_112(w)?),
        ("phi", BijObject::Composition(u)) => {
            let (l, r) = phi_unimodal(u)?;
            BijObject::PartitionInBox(l, r)
        }
        ("rho", BijObject::Word(w)) => {
            let (l, r) = rho_112(w)?;
            BijObject::PartitionInBox(l, r)
        }
        ("eta", BijObject::Word(w)) => BijObject::Word(eta_112_122(w)?),
        ("xi", BijObject::Word(w)) => BijObject::Word(xi_112_121(w)?),
        ("f", BijObject::Word(w)) => BijObject::Word(f_122_123(w)?),
        ("psi_motzkin", BijObject::ColoredPath(p)) => BijObject::Word(psi_motzkin_1212(p)?),
        ("phi_motzkin", BijObject::Word(w)) => BijObject::PlainPath(phi_motzkin_111_1212(w)?),
        ("inc", BijObject::Word(w)) => BijObject::Word(inc(w)),
        ("inc1212", BijObject::Word(w)) => {
            require_avoider(w, "1212")?;
            BijObject::Word(inc(w))
        }
        ("alpha", BijObject::Word(w)) => BijObject::Word(alpha_1221(w)?),
        ("beta", BijObject::ColoredPath(p)) => BijObject::Word(beta_motzkin_1221(p)?),
        ("rho_prime", BijObject::Word(w)) => {
            let (l, r) = rho_prime_111_112(w)?;
            BijObject::PartitionInBox(l, r)
        }
        _ => {
            info(id)?;
            return Err(Error::Invalid(format!("wrong input kind for {id}")));
        }
    })
}

/// Applies the inverse of a registered bijection.
pub fn apply_inverse(id: &str, output: &BijObject) -> Result<BijObject> {
    Ok(match (id, output) {
        ("psi112", BijObject::Composition(u)) => BijObject::Word(psi_112_inv(u)?),
        ("phi", BijObject::PartitionInBox(l, r)) => BijObject::Composition(phi_unimodal_inv(l, r)?),
        ("rho", BijObject::PartitionInBox(l, r)) => BijObject::Word(rho_112_inv(l, r)?),
        ("eta", BijObject::Word(w)) => BijObject::Word(eta_112_122_inv(w)?),
        ("xi", BijObject::Word(w)) => BijObject::Word(xi_112_121_inv(w)?),
        ("f", BijObject::Word(w)) => BijObject::Word(f_122_123_inv(w)?),
        ("psi_motzkin", BijObject::Word(w)) => BijObject::ColoredPath(psi_motzkin_1212_inv(w)?),
        ("phi_motzkin", BijObject::PlainPath(p)) => BijObject::Word(phi_motzkin_111_1212_inv(p)?),
        ("inc", _) => return Err(Error::Invalid("inc is a surjection, not invertible".into())),
        ("inc1212", BijObject::Word(w)) => BijObject::Word(inc_1212_inv(w)?),
        ("alpha", BijObject::Word(w)) => BijObject::Word(alpha_1221_inv(w)?),
        ("beta", BijObject::Word(w)) => BijObject::ColoredPath(beta_motzkin_1221_inv(w)?),
        ("rho_prime", BijObject::PartitionInBox(l, r)) => {
            BijObject::Word(rho_prime_111_112_inv(l, r)?)
        }
        _ => {
            info(id)?;
            return Err(Error::Invalid(format!("wrong input kind for {id}")));
        }
    })
}

fn avoider_objects(n: usize, list: &str) -> Result<Vec<BijObject>> {
    let set = if list.is_empty() {
        PatternSet::empty()
    } else {
        pattern_set(list)
    };
    Ok(
        avoiders_with_limit(n, &set, n.max(crate::words::DEFAULT_MAX_N))?
            .map(BijObject::Word)
            .collect(),
    )
}

/// The domain of a bijection at size parameter `n` (word length, composition
/// length, or `n` with paths of length `n-1`).
pub fn domain(id: &str, n: usize) -> Result<Vec<BijObject>> {
    Ok(match id {
        "psi112" | "rho" | "eta" | "xi" => avoider_objects(n, "112")?,
        "phi" => enumerate_rooted_unimodal(n)
            .into_iter()
            .map(BijObject::Composition)
            .collect(),
        "f" => avoider_objects(n, "122")?,
        "psi_motzkin" | "beta" => {
            if n == 0 {
                return Err(Error::Invalid("paths need n >= 1".into()));
            }
            enumerate_two_colored(n - 1)
                .into_iter()
                .map(BijObject::ColoredPath)
                .collect()
        }
        "phi_motzkin" => avoider_objects(n, "111,1212")?,
        "inc" => avoider_objects(n, "")?,
        "inc1212" => avoider_objects(n, "1212")?,
        "alpha" => avoider_objects(n, "1221")?,
        "rho_prime" => avoider_objects(n, "111,112")?,
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

fn boxes(n: usize, transposed: bool) -> Vec<BijObject> {
    let mut out = Vec::new();
    for m in 1..=n {
        let rect = if transposed {
            Rectangle::new(n - m, m - 1)
        } else {
            Rectangle::new(m - 1, n - m)
        };
        for lam in enumerate_partitions_in(&rect) {
            out.push(BijObject::PartitionInBox(lam, rect));
        }
    }
    out
}

/// The codomain of a bijection at size `n`; for `alpha` this is the image
/// inside `R_{n+2}(1221)` cut out by [`alpha_image_member`].
pub fn codomain(id: &str, n: usize) -> Result<Vec<BijObject>> {
    Ok(match id {
        "psi112" => enumerate_rooted_unimodal(n)
            .into_iter()
            .map(BijObject::Composition)
            .collect(),
        "phi" => boxes(n, false),
        "rho" => boxes(n, true),
        "eta" => avoider_objects(n, "122")?,
        "xi" => avoider_objects(n, "121")?,
        "f" => avoider_objects(n, "123")?,
        "psi_motzkin" => avoider_objects(n, "1212")?,
        "phi_motzkin" => enumerate_motzkin(n)
            .into_iter()
            .map(BijObject::PlainPath)
            .collect(),
        "inc" | "inc1212" => avoider_objects(n, "1221")?,
        "alpha" => avoider_objects(n + 2, "1221")?
            .into_iter()
            .filter(|o| matches!(o, BijObject::Word(w) if alpha_image_member(w)))
            .collect(),
        "beta" => avoider_objects(n, "1221")?,
        "rho_prime" => {
            let mut out = Vec::new();
            for m in n.div_ceil(2)..=n {
                let rect = Rectangle::new(n - m, 2 * m - n);
                for mu in enumerate_partitions_in(&rect) {
                    out.push(BijObject::PartitionInBox(mu, rect));
                }
            }
            out
        }
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

fn check_transports(b: &BijectionInfo, x: &BijObject, y: &BijObject) -> Option<String> {
    for (sx, sy) in b.transports {
        let vx = x.stat(sx)?;
        let vy = y.stat(sy)?;
        if vx != vy {
            return Some(format!(
                "transport {sx}->{sy} broken at {x}: {vx} vs {vy} on {y}"
            ));
        }
    }
    None
}

/// Per-map claims beyond round trip and total-statistic transport: the
/// letterwise statements and structural side conditions.
fn extra_checks(id: &str, x: &BijObject, y: &BijObject) -> Option<String> {
    match (id, x, y) {
        // u_i = rs(w_i) letter by letter.
        ("psi112", BijObject::Word(w), BijObject::Composition(u)) => {
            for j in 1..=w.len() {
                if stat_letter(w, j, Stat::Rs) != u.values()[j - 1] {
                    return Some(format!("letterwise rs profile broken at {w} position {j}"));
                }
            }
            None
        }
        // rs(w_i) = l(s_i) letter by letter.
        ("phi_motzkin", BijObject::Word(w), BijObject::PlainPath(p)) => {
            let levels = p.levels();
            for j in 1..=w.len() {
                if stat_letter(w, j, Stat::Rs) != levels[j - 1] {
                    return Some(format!("letterwise level claim broken at {w} position {j}"));
                }
            }
            None
        }
        // rs preserved letter by letter under the collapse.
        ("f", BijObject::Word(w), BijObject::Word(v)) => {
            for j in 1..=w.len() {
                if stat_letter(w, j, Stat::Rs) != stat_letter(v, j, Stat::Rs) {
                    return Some(format!("letterwise rs broken at {w} position {j}"));
                }
            }
            None
        }
        // inc fixes exactly the 1221-avoiders.
        ("inc", BijObject::Word(w), BijObject::Word(v)) => {
            let fixed = w == v;
            let avoids = avoids_all(w, &pattern_set("1221"));
            if fixed != avoids {
                return Some(format!("fixed-point mismatch at {w}"));
            }
            None
        }
        // The four-statistic dictionary of the composite map.
        ("rho_prime", BijObject::Word(w), BijObject::PartitionInBox(mu, gamma)) => {
            let want = rho_prime_stat_targets(mu, gamma);
            let got = (
                stat_total(w, Stat::Lb),
                stat_total(w, Stat::Ls),
                stat_total(w, Stat::Rb),
                stat_total(w, Stat::Rs),
            );
            if got != want {
                return Some(format!(
                    "statistic dictionary broken at {w}: {got:?} vs {want:?}"
                ));
            }
            None
        }
        _ => None,
    }
}

/// Runs the full exhaustive battery for one bijection at one size: forward
/// well-definedness, codomain membership, round trips both ways, statistic
/// transports, letterwise claims, and exact image coverage. Returns a witness
/// for the first failure in lexicographic domain order, or `None` when
/// everything passes.
pub fn battery(id: &str, n: usize) -> Result<Option<String>> {
    let b = info(id)?;
    if n < b.n_min {
        return Ok(None);
    }
    let dom = domain(id, n)?;
    let cod = codomain(id, n)?;
    let mut image: Vec<String> = Vec::with_capacity(dom.len());
    for x in &dom {
        let y = match apply(id, x) {
            Ok(y) => y,
            Err(e) => return Ok(Some(format!("forward failed at {x}: {e}"))),
        };
        if !cod.contains(&y) {
            return Ok(Some(format!("image {y} of {x} is outside the codomain")));
        }
        if let Some(msg) = check_transports(&b, x, &y) {
            return Ok(Some(msg));
        }
        if let Some(msg) = extra_checks(id, x, &y) {
            return Ok(Some(msg));
        }
        if b.has_inverse {
            match apply_inverse(id, &y) {
                Ok(back) if &back == x => {}
                Ok(back) => {
                    return Ok(Some(format!(
                        "round trip {x} -> {y} -> {back} is not the identity"
                    )))
                }
                Err(e) => return Ok(Some(format!("inverse failed at {y}: {e}"))),
            }
        }
        image.push(y.to_string());
    }
    image.sort();
    let before = image.len();
    image.dedup();
    if !b.has_inverse {
        // Surjection: the image must still cover the whole codomain.
        let mut target: Vec<String> = cod.iter().map(|c| c.to_string()).collect();
        target.sort();
        target.dedup();
        if image != target {
            return Ok(Some("image does not cover the codomain".into()));
        }
        return Ok(None);
    }
    if image.len() != before {
        return Ok(Some("map is not injective".into()));
    }
    if image.len() != cod.len() {
        return Ok(Some(format!(
            "image has {} elements but the codomain has {}",
            image.len(),
            cod.len()
        )));
    }
    // Inverse on codomain samples: forward(inverse(y)) = y.
    for y in &cod {
        match apply_inverse(id, y) {
            Ok(x) => match apply(id, &x) {
                Ok(back) if &back == y => {}
                Ok(back) => {
                    return Ok(Some(format!(
                        "codomain round trip {y} -> {x} -> {back} is not the identity"
                    )))
                }
                Err(e) => return Ok(Some(format!("forward failed at {x}: {e}"))),
            },
            Err(e) => return Ok(Some(format!("inverse failed at {y}: {e}"))),
        }
    }
    Ok(None)
}
