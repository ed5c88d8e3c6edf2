//! Independent brute-force oracles for the enumeration core.
//!
//! Everything here is deliberately written from scratch against the
//! definitions — naive recursive generation, bitmask subsequence search,
//! quadratic statistics — and kept free of the library's own generation,
//! matching, and pruning code paths, so that agreement is meaningful.

use std::collections::BTreeMap;

use rgflab_core::patterns::{avoiders, contains, Pattern, PatternSet};
use rgflab_core::statistics::{gen_poly, stat_vector};
use rgflab_core::words::{enumerate_rgfs, Rgf, Word};
use rgflab_core::MultiPoly;

/// Naive generator: extend by every letter up to one over the running max.
fn naive_rgfs(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let max = cur.iter().copied().max().unwrap_or(0);
        for c in 1..=max + 1 {
            cur.push(c);
            rec(cur, n, out);
            cur.pop();
        }
    }
    rec(&mut Vec::new(), n, &mut out);
    out
}

fn naive_standardize(w: &[usize]) -> Vec<usize> {
    let mut vals: Vec<usize> = w.to_vec();
    vals.sort_unstable();
    vals.dedup();
    w.iter()
        .map(|x| vals.iter().position(|v| v == x).unwrap() + 1)
        .collect()
}

/// Containment by checking every subsequence of the right length.
fn naive_contains(w: &[usize], v: &[usize]) -> bool {
    let (n, m) = (w.len(), v.len());
    if m > n {
        return false;
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let sub: Vec<usize> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| w[i])
            .collect();
        if naive_standardize(&sub) == v {
            return true;
        }
    }
    false
}

fn naive_stats(w: &[usize]) -> (usize, usize, usize, usize) {
    let distinct = |xs: &[usize]| {
        let mut v = xs.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let (mut lb, mut ls, mut rb, mut rs) = (0, 0, 0, 0);
    for j in 0..w.len() {
        let left = &w[..j];
        let right = &w[j + 1..];
        lb += distinct(
            &left
                .iter()
                .copied()
                .filter(|&x| x > w[j])
                .collect::<Vec<_>>(),
        );
        ls += distinct(
            &left
                .iter()
                .copied()
                .filter(|&x| x < w[j])
                .collect::<Vec<_>>(),
        );
        rb += distinct(
            &right
                .iter()
                .copied()
                .filter(|&x| x > w[j])
                .collect::<Vec<_>>(),
        );
        rs += distinct(
            &right
                .iter()
                .copied()
                .filter(|&x| x < w[j])
                .collect::<Vec<_>>(),
        );
    }
    (lb, ls, rb, rs)
}

/// Bell numbers by the binomial recurrence.
fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

#[test]
fn enumeration_agrees_with_naive_generation() {
    for n in 0..=8 {
        let library: Vec<Vec<usize>> = enumerate_rgfs(n)
            .unwrap()
            .map(|w| w.letters().to_vec())
            .collect();
        let mut naive = naive_rgfs(n);
        naive.sort();
        assert_eq!(library, naive, "n={n}");
    }
}

#[test]
fn counts_match_the_bell_recurrence() {
    assert_eq!(bell(12), 4_213_597);
    for n in 0..=12 {
        let mut it = enumerate_rgfs(n).unwrap();
        let mut count = 0u64;
        while it.next().is_some() {
            count += 1;
        }
        assert_eq!(count, bell(n), "n={n}");
    }
}

#[test]
fn containment_agrees_with_subsequence_search() {
    let mut patterns: Vec<Rgf> = Vec::new();
    for len in 1..=4 {
        patterns.extend(enumerate_rgfs(len).unwrap());
    }
    for n in 0..=7 {
        for w in enumerate_rgfs(n).unwrap() {
            for v in &patterns {
                let lib = contains(&w, &Pattern::new(v.clone()).unwrap());
                let naive = naive_contains(w.letters(), v.letters());
                assert_eq!(lib, naive, "w={w}, v={v}");
            }
        }
    }
}

#[test]
fn statistics_agree_with_quadratic_recount() {
    for n in 0..=8 {
        for w in enumerate_rgfs(n).unwrap() {
            let v = stat_vector(&w);
            assert_eq!((v.lb, v.ls, v.rb, v.rs), naive_stats(w.letters()), "w={w}");
        }
    }
    // Also on non-RGF words.
    let w: Word = "12332412".parse().unwrap();
    let v = stat_vector(&w);
    assert_eq!((v.lb, v.ls, v.rb, v.rs), naive_stats(w.letters()));
}

#[test]
fn generating_polynomials_agree_with_naive_everything() {
    for pats in ["112", "1212", "111,1221"] {
        let set = PatternSet::parse_list(pats).unwrap();
        let members: Vec<Vec<usize>> = pats
            .split(',')
            .map(|p| {
                p.chars()
                    .map(|c| c.to_digit(10).unwrap() as usize)
                    .collect()
            })
            .collect();
        for n in 0..=7 {
            // Polynomial assembled purely from naive pieces.
            let mut terms: BTreeMap<[u32; 4], i64> = BTreeMap::new();
            for w in naive_rgfs(n) {
                if members.iter().any(|v| naive_contains(&w, v)) {
                    continue;
                }
                let (lb, ls, rb, rs) = naive_stats(&w);
                *terms
                    .entry([lb as u32, ls as u32, rb as u32, rs as u32])
                    .or_insert(0) += 1;
            }
            let naive_poly = terms.into_iter().fold(MultiPoly::zero(), |acc, (e, c)| {
                acc.add(&MultiPoly::monomial(e, c))
            });
            assert_eq!(gen_poly(n, &set).unwrap(), naive_poly, "V={pats}, n={n}");
        }
    }
}

#[test]
fn round_trip_partitions_exhaustively() {
    use rgflab_core::SetPartition;
    for n in 0..=10 {
        for w in enumerate_rgfs(n).unwrap() {
            let sigma = SetPartition::from_rgf(&w);
            assert_eq!(sigma.to_rgf(), w, "rgf -> partition -> rgf at {w}");
        }
    }
}

#[test]
fn avoider_stream_is_strictly_increasing_and_valid() {
    for pats in ["111", "1212", "112,1221"] {
        let set = PatternSet::parse_list(pats).unwrap();
        for n in 0..=8 {
            let words: Vec<Rgf> = avoiders(n, &set).unwrap().collect();
            for w in &words {
                assert!(w.is_rgf());
            }
            for pair in words.windows(2) {
                assert!(pair[0] < pair[1], "stream not strictly increasing");
            }
        }
    }
}
