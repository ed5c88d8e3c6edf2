//! The four fundamental statistics on words and their generating polynomials.
//!
//! For a word `w` and a position `j`, `lb(w_j)` counts the *distinct* values
//! that occur to the left of position `j` and are bigger than `w_j`; `ls`,
//! `rb`, `rs` are the left-smaller, right-bigger, and right-smaller analogues.
//! The total statistic is the sum over all positions. Statistics are defined
//! on arbitrary words, while the generating polynomials range over avoidance
//! classes of RGFs:
//!
//! `F_n(V; q, r, s, t) = sum over w in R_n(V) of q^lb(w) r^ls(w) s^rb(w) t^rs(w)`.

use crate::error::Result;
use crate::patterns::{avoiders_under_prefix, avoiders_with_limit, split_prefixes, PatternSet};
use crate::polynomials::{Q, R, S, T};
use crate::words::{Word, DEFAULT_MAX_N};
use crate::MultiPoly;

/// Which of the four statistics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stat {
    /// Distinct bigger values to the left.
    Lb,
    /// Distinct smaller values to the left.
    Ls,
    /// Distinct bigger values to the right.
    Rb,
    /// Distinct smaller values to the right.
    Rs,
}

impl Stat {
    pub const ALL: [Stat; 4] = [Stat::Lb, Stat::Ls, Stat::Rb, Stat::Rs];

    pub fn name(self) -> &'static str {
        match self {
            Stat::Lb => "lb",
            Stat::Ls => "ls",
            Stat::Rb => "rb",
            Stat::Rs => "rs",
        }
    }

    /// Variable slot carrying this statistic in the fixed (q, r, s, t) order.
    pub fn var(self) -> usize {
        match self {
            Stat::Lb => Q,
            Stat::Ls => R,
            Stat::Rb => S,
            Stat::Rs => T,
        }
    }

    pub fn parse(s: &str) -> Option<Stat> {
        match s {
            "lb" => Some(Stat::Lb),
            "ls" => Some(Stat::Ls),
            "rb" => Some(Stat::Rb),
            "rs" => Some(Stat::Rs),
            _ => None,
        }
    }
}

/// The four totals of one word.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct StatVector {
    pub lb: usize,
    pub ls: usize,
    pub rb: usize,
    pub rs: usize,
}

impl StatVector {
    pub fn get(&self, which: Stat) -> usize {
        match which {
            Stat::Lb => self.lb,
            Stat::Ls => self.ls,
            Stat::Rb => self.rb,
            Stat::Rs => self.rs,
        }
    }
}

/// Statistic of the single letter at 1-indexed position `j`; distinct values
/// are counted once.
pub fn stat_letter(w: &Word, j: usize, which: Stat) -> usize {
    assert!(j >= 1 && j <= w.len(), "position out of range");
    let letters = w.letters();
    let x = letters[j - 1];
    let side: &[usize] = match which {
        Stat::Lb | Stat::Ls => &letters[..j - 1],
        Stat::Rb | Stat::Rs => &letters[j..],
    };
    let mut seen = vec![false; w.max_letter() + 1];
    let mut count = 0;
    for &y in side {
        let hit = match which {
            Stat::Lb | Stat::Rb => y > x,
            Stat::Ls | Stat::Rs => y < x,
        };
        if hit && !seen[y] {
            seen[y] = true;
            count += 1;
        }
    }
    count
}

/// Sum of the letterwise statistic over all positions.
pub fn stat_total(w: &Word, which: Stat) -> usize {
    (1..=w.len()).map(|j| stat_letter(w, j, which)).sum()
}

/// All four totals at once.
pub fn stat_vector(w: &Word) -> StatVector {
    StatVector {
        lb: stat_total(w, Stat::Lb),
        ls: stat_total(w, Stat::Ls),
        rb: stat_total(w, Stat::Rb),
        rs: stat_total(w, Stat::Rs),
    }
}

fn monomial_of(v: &StatVector) -> MultiPoly {
    MultiPoly::monomial([v.lb as u32, v.ls as u32, v.rb as u32, v.rs as u32], 1)
}

/// Four-variable generating polynomial of `(lb, ls, rb, rs)` over `R_n(V)`.
/// Accumulation is streaming, one word at a time.
pub fn gen_poly(n: usize, set: &PatternSet) -> Result<MultiPoly> {
    gen_poly_with_limit(n, set, DEFAULT_MAX_N)
}

pub fn gen_poly_with_limit(n: usize, set: &PatternSet, limit: usize) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    for w in avoiders_with_limit(n, set, limit)? {
        acc = acc.add(&monomial_of(&stat_vector(&w)));
    }
    Ok(acc)
}

/// Univariate generating polynomial (in `q`) of one statistic over `R_n(V)`.
pub fn gen_poly_stat(n: usize, set: &PatternSet, which: Stat) -> Result<MultiPoly> {
    gen_poly_stat_with_limit(n, set, which, DEFAULT_MAX_N)
}

pub fn gen_poly_stat_with_limit(
    n: usize,
    set: &PatternSet,
    which: Stat,
    limit: usize,
) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    for w in avoiders_with_limit(n, set, limit)? {
        let e = stat_total(&w, which) as u32;
        acc = acc.add(&MultiPoly::monomial([e, 0, 0, 0], 1));
    }
    Ok(acc)
}

/// Restricts a four-variable polynomial to one statistic's variable, moved
/// into the `q` slot (the other three variables are set to 1).
pub fn specialize_stat(full: &MultiPoly, which: Stat) -> MultiPoly {
    let mut images = [[0u32; 4]; 4];
    images[which.var()] = [1, 0, 0, 0];
    full.subst_monomials(&images)
}

/// Parallel [`gen_poly`] over prefix-split subtrees; polynomial addition is
/// commutative and associative, so the result is schedule-independent.
pub fn gen_poly_par(n: usize, set: &PatternSet, limit: usize) -> Result<MultiPoly> {
    use rayon::prelude::*;
    if n > limit {
        return Err(crate::Error::ResourceLimit { n, limit });
    }
    let prefixes = split_prefixes(n, set, 3.min(n))?;
    prefixes
        .par_iter()
        .map(|p| {
            let mut acc = MultiPoly::zero();
            for w in avoiders_under_prefix(n, set, p)? {
                acc = acc.add(&monomial_of(&stat_vector(&w)));
            }
            Ok(acc)
        })
        .try_reduce(MultiPoly::zero, |a, b| Ok(a.add(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate_rgfs, Rgf};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn letterwise_examples() {
        let w = word("12332412");
        assert_eq!(stat_letter(&w, 5, Stat::Lb), 1);
        assert_eq!(stat_letter(&w, 7, Stat::Lb), 3);
        assert_eq!(stat_letter(&w, 1, Stat::Lb), 0);
        assert_eq!(stat_letter(&w, 1, Stat::Ls), 0);
        // Distinct values are counted once: both 3s left of the final 2
        // contribute a single unit.
        assert_eq!(stat_letter(&word("1332"), 4, Stat::Lb), 1);
    }

    #[test]
    fn totals_examples() {
        assert_eq!(stat_total(&word("12332412"), Stat::Lb), 6);
        assert_eq!(stat_total(&word("123"), Stat::Ls), 3);
        assert_eq!(stat_total(&word("121"), Stat::Rs), 1);
        let v = stat_vector(&word("12332412"));
        assert_eq!(v.lb, 6);
    }

    #[test]
    fn ls_is_letter_sum_and_lb_is_max_gap_on_rgfs() {
        for n in 0..=10 {
            for w in enumerate_rgfs(n).unwrap() {
                let ls: usize = w.letters().iter().map(|&x| x - 1).sum();
                assert_eq!(stat_total(&w, Stat::Ls), ls, "ls mismatch at {w}");
                // lb(w_i) = max(prefix) - w_i for every non-initial repeat;
                // left-to-right maxima contribute zero.
                let mut lb = 0usize;
                let mut max = 0usize;
                for &x in w.letters() {
                    if x <= max {
                        lb += max - x;
                    }
                    max = max.max(x);
                }
                assert_eq!(stat_total(&w, Stat::Lb), lb, "lb mismatch at {w}");
            }
        }
    }

    #[test]
    fn gen_poly_examples() {
        let v112 = PatternSet::parse_list("112").unwrap();
        let lb = gen_poly_stat(3, &v112, Stat::Lb).unwrap();
        assert_eq!(lb.to_text(), "3 + q");

        let v12 = PatternSet::parse_list("12").unwrap();
        for n in 1..=6 {
            assert_eq!(gen_poly(n, &v12).unwrap(), MultiPoly::one());
        }

        let v1212 = PatternSet::parse_list("1212").unwrap();
        let rs = gen_poly_stat(3, &v1212, Stat::Rs).unwrap();
        assert_eq!(rs.to_text(), "4 + q");
    }

    #[test]
    fn gen_poly_at_one_counts_the_class() {
        let sets = ["112", "121", "1212", "111,112"];
        for s in sets {
            let set = PatternSet::parse_list(s).unwrap();
            for n in 0..=10 {
                let full = gen_poly(n, &set).unwrap();
                let count = crate::patterns::count_avoiders(n, &set).unwrap().0;
                assert_eq!(full.eval_all_ones() as u64, count, "V={s}, n={n}");
            }
        }
    }

    #[test]
    fn specialization_and_parallel_agree() {
        let set = PatternSet::parse_list("1221").unwrap();
        for n in 0..=7 {
            let full = gen_poly(n, &set).unwrap();
            for st in Stat::ALL {
                assert_eq!(
                    specialize_stat(&full, st),
                    gen_poly_stat(n, &set, st).unwrap()
                );
            }
            assert_eq!(full, gen_poly_par(n, &set, DEFAULT_MAX_N).unwrap());
        }
    }

    #[test]
    fn empty_word_has_zero_stats() {
        let w = Rgf::empty();
        assert_eq!(stat_vector(&w), StatVector::default());
        let set = PatternSet::parse_list("112").unwrap();
        assert_eq!(gen_poly(0, &set).unwrap(), MultiPoly::one());
    }
}
