//! Registry of closed-form and recursive formulas for avoidance-class
//! generating functions, evaluated without enumeration, plus the symmetry and
//! equivalence identities relating them.
//!
//! Each registered formula id computes a polynomial (or count) directly from
//! its parameters; the claims it makes about brute-force enumeration are
//! published through [`oracle_instances`] so the verification harness can
//! check every one of them exhaustively at small sizes.

use crate::counting::{binomial, catalan, fibonacci, odd_double_factorial};
use crate::error::{Error, Result};
use crate::patterns::PatternSet;
use crate::polynomials::{gaussian, pq_gaussian, pq_int, q_factorial, q_int, Exp, Q, R, S, T};
use crate::statistics::{gen_poly_stat, Stat};
use crate::words::Rgf;
use crate::{MultiPoly, QRat};

/// Arguments for [`evaluate`]; which fields are read depends on the formula.
#[derive(Clone, Debug, Default)]
pub struct FormulaArgs {
    pub n: usize,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub pattern: Option<Rgf>,
}

impl FormulaArgs {
    pub fn n(n: usize) -> FormulaArgs {
        FormulaArgs {
            n,
            ..Default::default()
        }
    }
}

/// Result of evaluating a formula: most are polynomials, the `CARD_*` and
/// `DEG_*` entries are integers, and `C_COEFF` is a genuine rational function.
#[derive(Clone, Debug, PartialEq)]
pub enum FormulaValue {
    Poly(MultiPoly),
    Rational(QRat),
    Count(u64),
}

impl FormulaValue {
    pub fn into_poly(self) -> Result<MultiPoly> {
        match self {
            FormulaValue::Poly(p) => Ok(p),
            FormulaValue::Rational(r) => r.to_polynomial(),
            FormulaValue::Count(c) => Ok(MultiPoly::constant(c as i64)),
        }
    }

    pub fn render(&self) -> String {
        match self {
            FormulaValue::Poly(p) => p.to_text(),
            FormulaValue::Rational(r) => r.to_string(),
            FormulaValue::Count(c) => c.to_string(),
        }
    }
}

fn mono(e: Exp) -> MultiPoly {
    MultiPoly::monomial(e, 1)
}

fn int(c: i64) -> MultiPoly {
    MultiPoly::constant(c)
}

fn ch2(x: usize) -> u32 {
    (x * x.saturating_sub(1) / 2) as u32
}

/// Substitute into a bivariate `(p, q)` polynomial (with `p` in the `r`
/// slot): `p` and `q` are replaced by the given monomials.
fn pq_subst(poly: &MultiPoly, p_img: Exp, q_img: Exp) -> MultiPoly {
    poly.subst_monomials(&[q_img, p_img, [0, 0, 1, 0], [0, 0, 0, 1]])
}

const QT: Exp = [1, 0, 0, 1];
const RT: Exp = [0, 1, 0, 1];
const Q1: Exp = [1, 0, 0, 0];
const R1: Exp = [0, 1, 0, 0];
const S1: Exp = [0, 0, 1, 0];

// ---------------------------------------------------------------------------
// Single length-3 patterns
// ---------------------------------------------------------------------------

/// `LB_n(112) = RS_n(112) = LB_n(122)`: the sum of all Gaussian polynomials
/// with top row `n - 1`.
fn sum_gauss(n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let mut acc = MultiPoly::zero();
    for t in 0..n as i64 {
        acc = acc.add(&gaussian(n as i64 - 1, t));
    }
    acc
}

/// `LS_n(112) = LS_n(121) = RB_n(121) = RB_n(122)`: partitions with distinct
/// parts below `n`.
fn distinct_prod(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for i in 1..n {
        acc = acc.mul(&MultiPoly::one().add(&MultiPoly::var_pow(Q, i as u32)));
    }
    acc
}

/// `RS_n(122) = LB_n(123) = RS_n(123) = 1 + sum C(n-1, k+1) q^k`.
fn binom_shift(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for k in 0..n.saturating_sub(1) {
        let c = binomial(n as i64 - 1, k as i64 + 1);
        acc = acc.add(&int(c).mul(&MultiPoly::var_pow(Q, k as u32)));
    }
    acc
}

/// `RB_n(112) = LS_n(122) = sum C(n-1, n-m) q^binom(m,2)`.
fn triang(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for m in 0..=n {
        let c = binomial(n as i64 - 1, (n - m) as i64);
        if c != 0 {
            acc = acc.add(&int(c).mul(&MultiPoly::var_pow(Q, ch2(m))));
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Pairs of length-3 patterns: the nine four-variable formulas
// ---------------------------------------------------------------------------

pub const MULT_PATTERNS: [&str; 9] = [
    "111,112", "111,121", "111,122", "112,121", "112,122", "112,123", "121,122", "121,123",
    "122,123",
];

/// Four-variable generating function of `R_n(V)` for the `i`-th pair
/// (1-indexed into [`MULT_PATTERNS`]). For `n <= 1` every class is all of
/// `R_n`, a single word with vanishing statistics.
fn mult(i: usize, n: usize) -> Result<MultiPoly> {
    if !(1..=9).contains(&i) {
        return Err(Error::UnknownId(format!("MULT_{i}")));
    }
    if n <= 1 {
        return Ok(MultiPoly::one());
    }
    let nn = n as i64;
    Ok(match i {
        // sum over m of (qrt^2)^C(m,2) (rs)^C(n-m,2) [n-m choose m]_{r,qt}
        1 => {
            let mut acc = MultiPoly::zero();
            for m in 0..=n {
                let g = pq_gaussian(nn - m as i64, m as i64);
                if g.is_zero() {
                    continue;
                }
                let a = ch2(m);
                let b = ch2(n - m);
                let prefix = mono([a, a, 0, 2 * a]).mul(&mono([0, b, b, 0]));
                acc = acc.add(&prefix.mul(&pq_subst(&g, R1, QT)));
            }
            acc
        }
        // sum over m of (rs)^(C(m,2)+C(n-m,2)) [n-m choose m]_{r,s}
        2 => {
            let mut acc = MultiPoly::zero();
            for m in 0..=n {
                let g = pq_gaussian(nn - m as i64, m as i64);
                if g.is_zero() {
                    continue;
                }
                let e = ch2(m) + ch2(n - m);
                acc = acc.add(&mono([0, e, e, 0]).mul(&pq_subst(&g, R1, S1)));
            }
            acc
        }
        // (rs)^C(n,2) + (rs)^C(n-1,2) [n-1]_{s,qt}
        3 => {
            let a = ch2(n);
            let b = ch2(n - 1);
            mono([0, a, a, 0]).add(&mono([0, b, b, 0]).mul(&pq_subst(&pq_int(n - 1), S1, QT)))
        }
        // sum over m of r^((m-1)(n-m)) (rs)^C(m,2)
        4 => {
            let mut acc = MultiPoly::zero();
            for m in 1..=n {
                let c = ch2(m);
                acc = acc.add(&mono([0, ((m - 1) * (n - m)) as u32 + c, c, 0]));
            }
            acc
        }
        // (rs)^C(n,2) + sum over m < n of q^((m-1)(n-m)) (rs)^C(m,2) t^(m-1)
        5 => {
            let a = ch2(n);
            let mut acc = mono([0, a, a, 0]);
            for m in 1..n {
                let c = ch2(m);
                acc = acc.add(&mono([((m - 1) * (n - m)) as u32, c, c, (m - 1) as u32]));
            }
            acc
        }
        // 1 + r^(n-1) s + qrst [n-2]_{q,rt}
        6 => MultiPoly::one()
            .add(&mono([0, (n - 1) as u32, 1, 0]))
            .add(&mono([1, 1, 1, 1]).mul(&pq_subst(&pq_int(n - 2), Q1, RT))),
        // sum over m of (rs)^C(m,2) s^((m-1)(n-m))
        7 => {
            let mut acc = MultiPoly::zero();
            for m in 1..=n {
                let c = ch2(m);
                acc = acc.add(&mono([0, c, ((m - 1) * (n - m)) as u32 + c, 0]));
            }
            acc
        }
        // 1 + rs [n-1]_{r,s}
        8 => MultiPoly::one().add(&mono([0, 1, 1, 0]).mul(&pq_subst(&pq_int(n - 1), R1, S1))),
        // 1 + r s^(n-1) + qrst [n-2]_{q,s}
        9 => MultiPoly::one()
            .add(&mono([0, 1, (n - 1) as u32, 0]))
            .add(&mono([1, 1, 1, 1]).mul(&pq_subst(&pq_int(n - 2), Q1, S1))),
        _ => unreachable!(),
    })
}

// ---------------------------------------------------------------------------
// Recursion machines for prefixed patterns
// ---------------------------------------------------------------------------

/// The pattern `1(v+1)` obtained by shifting `v` up and prepending a 1.
pub fn shift_pattern(v: &Rgf) -> Rgf {
    let mut letters = vec![1usize];
    letters.extend(v.letters().iter().map(|&x| x + 1));
    Rgf::from_letters(letters).expect("shifting an RGF yields an RGF")
}

fn single(v: &Rgf) -> PatternSet {
    PatternSet::parse_list(&v.to_string()).expect("pattern from RGF")
}

/// `LS_n(1(v+1)) = sum_j C(n-1, j) q^j LS_j(v)`, with the inner generating
/// functions computed by brute force over the smaller class.
fn ls_machine(v: &Rgf, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let set = single(v);
    let mut acc = MultiPoly::zero();
    for j in 0..n {
        let c = binomial(n as i64 - 1, j as i64);
        if c == 0 {
            continue;
        }
        let inner = gen_poly_stat(j, &set, Stat::Ls)?;
        acc = acc.add(&int(c).mul(&MultiPoly::var_pow(Q, j as u32)).mul(&inner));
    }
    Ok(acc)
}

/// `RS_n(1(v+1)) = sum_j sum_k C(n+k-j-2, k) q^k RS_j(v)`.
fn rs_machine(v: &Rgf, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let set = single(v);
    let mut acc = MultiPoly::zero();
    for j in 0..n {
        let inner = gen_poly_stat(j, &set, Stat::Rs)?;
        if inner.is_zero() {
            continue;
        }
        let mut weight = MultiPoly::zero();
        for k in 0..=j {
            let c = binomial((n + k) as i64 - j as i64 - 2, k as i64);
            if c != 0 {
                weight = weight.add(&int(c).mul(&MultiPoly::var_pow(Q, k as u32)));
            }
        }
        acc = acc.add(&weight.mul(&inner));
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// The increasing-run family 12...k
// ---------------------------------------------------------------------------

/// `K(m, n) = ([m+1]^(n-1) - 1) / [m]` as an exact rational function.
fn k_mn_rational(m: usize, n: usize) -> Result<QRat> {
    if m == 0 || n == 0 {
        return Err(Error::Invalid("K(m, n) needs m, n >= 1".into()));
    }
    let num = q_int::<i64>(m + 1).pow(n as u32 - 1).sub(&MultiPoly::one());
    QRat::new(num, q_int(m))
}

/// Binomial expansion of the same function:
/// `K(m, n) = sum_j C(n-1, j) q^j [m]^(j-1)`.
pub fn k_mn_binomial_sum(m: usize, n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for j in 1..n {
        let c = binomial(n as i64 - 1, j as i64);
        if c == 0 {
            continue;
        }
        let term = int(c)
            .mul(&MultiPoly::var_pow(Q, j as u32))
            .mul(&q_int::<i64>(m).pow(j as u32 - 1));
        acc = acc.add(&term);
    }
    acc
}

/// The rational coefficients `c_3 = 1`, `c_k = 1 - sum_j c_(k-j) / [j]!`.
fn c_coeff(k: usize) -> Result<QRat> {
    if k < 3 {
        return Err(Error::Invalid("c_k needs k >= 3".into()));
    }
    let mut table: Vec<QRat> = vec![QRat::one()]; // c_3
    for kk in 4..=k {
        let mut sum = QRat::zero();
        for j in 1..=kk - 3 {
            let prev = table[kk - j - 3].clone();
            let denom = QRat::from_poly(q_factorial(j))?;
            sum = sum.add(&prev.div(&denom)?);
        }
        table.push(QRat::one().sub(&sum));
    }
    Ok(table[k - 3].clone())
}

/// `LS_n(12...k) = 1 + sum_i c_(k-i+1) K(i, n) / [i-1]!`, assembled in exact
/// rational arithmetic; the final conversion to a polynomial must succeed
/// since the identity is exact.
fn ls_12k(k: usize, n: usize) -> Result<MultiPoly> {
    if k < 3 {
        return Err(Error::Invalid("LS_12K needs k >= 3".into()));
    }
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut acc = QRat::one();
    for i in 1..=k - 2 {
        let term = c_coeff(k - i + 1)?
            .mul(&k_mn_rational(i, n)?)
            .div(&QRat::from_poly(q_factorial(i - 1))?)?;
        acc = acc.add(&term);
    }
    acc.to_polynomial()
}

/// Degree of `LS_n(12...k)` per the degree statement; the polynomial is monic.
fn deg_ls_12k(k: usize, n: usize) -> Result<u64> {
    if k < 3 || n < k {
        return Err(Error::Invalid("degree statement needs 3 <= k <= n".into()));
    }
    Ok(ch2(k - 2) as u64 + ((k - 2) * (n - k + 2)) as u64)
}

// ---------------------------------------------------------------------------
// The all-equal family 1^m
// ---------------------------------------------------------------------------

/// `LS_n(1^m) = sum_j C(n-1, j-1) q^(n-j) LS_(n-j)(1^m)`; valid for m >= 1.
fn ls_ones(m: usize, n: usize) -> Result<MultiPoly> {
    if m == 0 {
        return Err(Error::Invalid("LS_ONES needs m >= 1".into()));
    }
    let mut table: Vec<MultiPoly> = vec![MultiPoly::one()];
    for nn in 1..=n {
        let mut acc = MultiPoly::zero();
        for j in 1..m.min(nn + 1) {
            let c = binomial(nn as i64 - 1, j as i64 - 1);
            if c == 0 {
                continue;
            }
            let term = int(c)
                .mul(&MultiPoly::var_pow(Q, (nn - j) as u32))
                .mul(&table[nn - j]);
            acc = acc.add(&term);
        }
        table.push(acc);
    }
    Ok(table[n].clone())
}

/// `RS_n(1^m) = RS_(n-1)(1^m) + sum_j sum_k C(j+k-2, k) q^k RS_(n-j)(1^m)`;
/// the leading term is the `j = 1` insertion, so this needs m >= 2.
fn rs_ones(m: usize, n: usize) -> Result<MultiPoly> {
    if m < 2 {
        return Err(Error::Invalid("RS_ONES needs m >= 2".into()));
    }
    let mut table: Vec<MultiPoly> = vec![MultiPoly::one()];
    for nn in 1..=n {
        let mut acc = table[nn - 1].clone();
        for j in 2..m.min(nn + 1) {
            let mut weight = MultiPoly::zero();
            for k in 0..=nn - j {
                let c = binomial((j + k) as i64 - 2, k as i64);
                if c != 0 {
                    weight = weight.add(&int(c).mul(&MultiPoly::var_pow(Q, k as u32)));
                }
            }
            acc = acc.add(&weight.mul(&table[nn - j]));
        }
        table.push(acc);
    }
    Ok(table[n].clone())
}

// ---------------------------------------------------------------------------
// Catalan and Motzkin recursions
// ---------------------------------------------------------------------------

/// `RS_n(1212) = 2 RS_(n-1) + sum_k q^k RS_k RS_(n-k-1)`, a q-analogue of the
/// Catalan recursion.
fn rs_1212(n: usize) -> MultiPoly {
    let mut t: Vec<MultiPoly> = vec![MultiPoly::one(), MultiPoly::one()];
    for nn in 2..=n.max(1) {
        let mut acc = t[nn - 1].scale(&2);
        for k in 1..=nn - 2 {
            let term = MultiPoly::var_pow(Q, k as u32)
                .mul(&t[k])
                .mul(&t[nn - 1 - k]);
            acc = acc.add(&term);
        }
        t.push(acc);
    }
    t[n].clone()
}

/// Area generating polynomial of two-colored Motzkin paths, computed by the
/// index-shifted image of the `RS(1212)` recursion:
/// `M_n = 2 M_(n-1) + sum_k q^(k+1) M_k M_(n-k-2)`, `M_0 = 1`.
///
/// Note the widely reproduced bounds `2 M_(n-1) + sum_(k=1)^(n-2) q^k M_k
/// M_(n-k-1)` already fail at n = 2 (they give 4 where the five paths of
/// length 2 have area polynomial 4 + q); the shifted bounds here are the ones
/// consistent with the direct definition, and a regression test pins this.
fn motzkin_q(n: usize) -> MultiPoly {
    let mut t: Vec<MultiPoly> = vec![MultiPoly::one()];
    for nn in 1..=n {
        let mut acc = t[nn - 1].scale(&2);
        if nn >= 2 {
            for k in 0..=nn - 2 {
                let term = MultiPoly::var_pow(Q, k as u32 + 1)
                    .mul(&t[k])
                    .mul(&t[nn - 2 - k]);
                acc = acc.add(&term);
            }
        }
        t.push(acc);
    }
    t[n].clone()
}

/// `RS_n(111, 1212) = RS_(n-1) + sum_k q^k RS_k RS_(n-k-2)`, a q-analogue of
/// the Motzkin recursion.
fn rs_111_1212(n: usize) -> MultiPoly {
    let mut t: Vec<MultiPoly> = vec![MultiPoly::one(), MultiPoly::one()];
    for nn in 2..=n.max(1) {
        let mut acc = t[nn - 1].clone();
        for k in 0..=nn - 2 {
            let term = MultiPoly::var_pow(Q, k as u32)
                .mul(&t[k])
                .mul(&t[nn - 2 - k]);
            acc = acc.add(&term);
        }
        t.push(acc);
    }
    t[n].clone()
}

/// `LB_n(111, 1221) = L_(n-1) + L_(n-2) + sum_k q^k L_(k-1) L_(n-k-1)`.
fn lb_111_1221(n: usize) -> MultiPoly {
    let mut t: Vec<MultiPoly> = vec![MultiPoly::one(), MultiPoly::one()];
    for nn in 2..=n.max(1) {
        let mut acc = t[nn - 1].add(&t[nn - 2]);
        for k in 1..=nn - 2 {
            let term = MultiPoly::var_pow(Q, k as u32)
                .mul(&t[k - 1])
                .mul(&t[nn - 1 - k]);
            acc = acc.add(&term);
        }
        t.push(acc);
    }
    t[n].clone()
}

// ---------------------------------------------------------------------------
// Explicit small classes with 1212 / 1221
// ---------------------------------------------------------------------------

/// `LB_n(123,1212) = RS_n(123,1212) = 1 + sum_k (n-k-1) q^k`.
fn p123_1212_lb(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for k in 0..n.saturating_sub(1) {
        acc = acc.add(&int((n - k - 1) as i64).mul(&MultiPoly::var_pow(Q, k as u32)));
    }
    acc
}

/// `LS_n(123,1212) = RB_n(123,1212) = 1 + sum_k (n-k) q^k`.
fn p123_1212_ls(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for k in 1..n.max(1) {
        acc = acc.add(&int((n - k) as i64).mul(&MultiPoly::var_pow(Q, k as u32)));
    }
    acc
}

/// Four-variable generating function of `R_n(112,1221) = {12...m k^(n-m)}`.
/// The run `12...n` is a single word, so the `m = n` slice of the double sum
/// collapses to one term.
fn p112_1221_f(n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let c = ch2(n);
    let mut acc = mono([0, c, c, 0]);
    for m in 1..n {
        for k in 1..=m {
            let e = [
                ((n - m) * (m - k)) as u32,
                ch2(m) + ((n - m) * (k - 1)) as u32,
                ch2(m),
                (m - k) as u32,
            ];
            acc = acc.add(&mono(e));
        }
    }
    acc
}

/// The univariate closed forms over `R_n(112,1221)`, written as displayed:
/// one degenerate term for the full run plus a double (or single) sum.
fn p112_1221(stat: Stat, n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let mut acc;
    match stat {
        Stat::Lb => {
            acc = MultiPoly::one();
            for m in 1..n {
                for k in 1..=m {
                    acc = acc.add(&MultiPoly::var_pow(Q, ((n - m) * (m - k)) as u32));
                }
            }
        }
        Stat::Ls => {
            acc = MultiPoly::var_pow(Q, ch2(n));
            for m in 1..n {
                for k in 1..=m {
                    acc = acc.add(&MultiPoly::var_pow(Q, ch2(m) + ((n - m) * (k - 1)) as u32));
                }
            }
        }
        Stat::Rb => {
            acc = MultiPoly::var_pow(Q, ch2(n));
            for m in 1..n {
                acc = acc.add(&int(m as i64).mul(&MultiPoly::var_pow(Q, ch2(m))));
            }
        }
        Stat::Rs => {
            acc = MultiPoly::one();
            for m in 1..n {
                for k in 1..=m {
                    acc = acc.add(&MultiPoly::var_pow(Q, (m - k) as u32));
                }
            }
        }
    }
    acc
}

/// Four-variable generating function of
/// `R_n(123,1221) = {1^n} u {1 1^i 2 1^j 2^k}`, using the indicator exponents
/// displayed with the class.
fn p123_1221_f(n: usize) -> MultiPoly {
    if n <= 1 {
        return MultiPoly::one();
    }
    let mut acc = MultiPoly::one();
    for i in 0..=n - 2 {
        for j in 0..=n - 2 - i {
            let k = n - 2 - i - j;
            let e = [
                j as u32,
                (k + 1) as u32,
                (i + 1 + j * usize::from(k > 0)) as u32,
                u32::from(j > 0),
            ];
            acc = acc.add(&mono(e));
        }
    }
    acc
}

/// The displayed univariate closed forms over `R_n(123,1221)`.
fn p123_1221(stat: Stat, n: usize) -> MultiPoly {
    if n <= 1 {
        return MultiPoly::one();
    }
    let q = |e: usize| MultiPoly::var_pow(Q, e as u32);
    match stat {
        // 1 + sum_j (n-j-1) q^j
        Stat::Lb => {
            let mut acc = MultiPoly::one();
            for j in 0..=n - 2 {
                acc = acc.add(&int((n - j - 1) as i64).mul(&q(j)));
            }
            acc
        }
        // 1 + sum_k (n-k-1) q^(k+1)
        Stat::Ls => {
            let mut acc = MultiPoly::one();
            for k in 0..=n - 2 {
                acc = acc.add(&int((n - k - 1) as i64).mul(&q(k + 1)));
            }
            acc
        }
        // 1 + q^(n-1) + sum_k (k+1) q^k
        Stat::Rb => {
            let mut acc = MultiPoly::one().add(&q(n - 1));
            for k in 1..=n - 2 {
                acc = acc.add(&int(k as i64 + 1).mul(&q(k)));
            }
            acc
        }
        // n + C(n-1, 2) q
        Stat::Rs => int(n as i64).add(&int(binomial(n as i64 - 1, 2)).mul(&q(1))),
    }
}

// ---------------------------------------------------------------------------
// Cardinalities
// ---------------------------------------------------------------------------

fn card_2pow(n: usize) -> u64 {
    if n == 0 {
        1
    } else {
        1u64 << (n - 1)
    }
}

/// `|R_n(111)| = sum_i C(n, 2i) * (1 * 3 * ... * (2i - 1))`.
fn card_111(n: usize) -> u64 {
    let mut acc = 0u64;
    for i in 0..=n / 2 {
        acc += binomial(n as i64, 2 * i as i64) as u64 * odd_double_factorial(i);
    }
    acc
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// Formula metadata for listings and argument validation.
pub struct FormulaInfo {
    pub id: String,
    /// Parameters beyond `n` the formula reads.
    pub params: &'static str,
    pub describes: String,
}

pub fn formula_infos() -> Vec<FormulaInfo> {
    let fi = |id: &str, params: &'static str, describes: &str| FormulaInfo {
        id: id.to_string(),
        params,
        describes: describes.to_string(),
    };
    let mut out = vec![
        fi("SUM_GAUSS", "n", "LB_n(112) = RS_n(112) = LB_n(122)"),
        fi(
            "DISTINCT_PROD",
            "n",
            "LS_n(112) = LS_n(121) = RB_n(121) = RB_n(122)",
        ),
        fi("BINOM_SHIFT", "n", "RS_n(122) = LB_n(123) = RS_n(123)"),
        fi("TRIANG", "n", "RB_n(112) = LS_n(122)"),
    ];
    for i in 1..=9usize {
        out.push(fi(
            &format!("MULT_{i}"),
            "n",
            &format!("F_n({{{}}}; q, r, s, t)", MULT_PATTERNS[i - 1]),
        ));
    }
    out.extend([
        fi(
            "LS_MACHINE",
            "n, pattern v",
            "LS_n(1(v+1)) from the LS_j(v)",
        ),
        fi(
            "RS_MACHINE",
            "n, pattern v",
            "RS_n(1(v+1)) from the RS_j(v)",
        ),
        fi("K", "n, m", "([m+1]^(n-1) - 1) / [m] as a polynomial"),
        fi("C_COEFF", "k", "the rational coefficients c_k"),
        fi(
            "LS_12K",
            "n, k",
            "LS_n(12...k) via exact rational arithmetic",
        ),
        fi("LS_ONES", "n, m", "LS_n(1^m) by recursion"),
        fi("RS_ONES", "n, m", "RS_n(1^m) by recursion (m >= 2)"),
        fi("RS_1212", "n", "RS_n(1212), the q-Catalan recursion"),
        fi(
            "MOTZKIN_Q",
            "n",
            "area generating polynomial of two-colored Motzkin paths",
        ),
        fi(
            "RS_111_1212",
            "n",
            "RS_n(111,1212), the q-Motzkin recursion",
        ),
        fi("LB_111_1221", "n", "LB_n(111,1221) by recursion"),
        fi("P123_1212_LB", "n", "LB_n(123,1212) = RS_n(123,1212)"),
        fi("P123_1212_LS", "n", "LS_n(123,1212) = RB_n(123,1212)"),
        fi("P112_1221_F", "n", "F_n(112,1221; q, r, s, t)"),
        fi("P112_1221_LB", "n", "LB_n(112,1221)"),
        fi("P112_1221_LS", "n", "LS_n(112,1221)"),
        fi("P112_1221_RB", "n", "RB_n(112,1221)"),
        fi("P112_1221_RS", "n", "RS_n(112,1221)"),
        fi("P123_1221_F", "n", "F_n(123,1221; q, r, s, t)"),
        fi("P123_1221_LB", "n", "LB_n(123,1221)"),
        fi("P123_1221_LS", "n", "LS_n(123,1221)"),
        fi("P123_1221_RB", "n", "RB_n(123,1221)"),
        fi("P123_1221_RS", "n", "RS_n(123,1221)"),
        fi(
            "CARD_2POW",
            "n",
            "|R_n(v)| = 2^(n-1) for v in {112, 121, 122, 123}",
        ),
        fi("CARD_111", "n", "|R_n(111)| via odd double factorials"),
        fi("CARD_FIB", "n", "|R_n(111,112)| = |R_n(111,121)| = f_n"),
        fi("CARD_CATALAN", "n", "|R_n(1212)| = |R_n(1221)| = C_n"),
        fi("DEG_LS_12K", "n, k", "degree of the monic LS_n(12...k)"),
    ]);
    out
}

fn need_k(args: &FormulaArgs) -> Result<usize> {
    args.k
        .ok_or_else(|| Error::Invalid("this formula needs --k".into()))
}

fn need_m(args: &FormulaArgs) -> Result<usize> {
    args.m
        .ok_or_else(|| Error::Invalid("this formula needs --m".into()))
}

fn need_pattern(args: &FormulaArgs) -> Result<&Rgf> {
    args.pattern
        .as_ref()
        .ok_or_else(|| Error::Invalid("this formula needs --pattern".into()))
}

/// Evaluates a registered formula.
pub fn evaluate(id: &str, args: &FormulaArgs) -> Result<FormulaValue> {
    use FormulaValue::*;
    let n = args.n;
    Ok(match id {
        "SUM_GAUSS" => Poly(sum_gauss(n)),
        "DISTINCT_PROD" => Poly(distinct_prod(n)),
        "BINOM_SHIFT" => Poly(binom_shift(n)),
        "TRIANG" => Poly(triang(n)),
        _ if id.starts_with("MULT_") => {
            let i: usize = id[5..]
                .parse()
                .map_err(|_| Error::UnknownId(id.to_string()))?;
            Poly(mult(i, n)?)
        }
        "LS_MACHINE" => Poly(ls_machine(need_pattern(args)?, n)?),
        "RS_MACHINE" => Poly(rs_machine(need_pattern(args)?, n)?),
        "K" => Poly(k_mn_rational(need_m(args)?, n)?.to_polynomial()?),
        "C_COEFF" => Rational(c_coeff(need_k(args)?)?),
        "LS_12K" => Poly(ls_12k(need_k(args)?, n)?),
        "LS_ONES" => Poly(ls_ones(need_m(args)?, n)?),
        "RS_ONES" => Poly(rs_ones(need_m(args)?, n)?),
        "RS_1212" => Poly(rs_1212(n)),
        "MOTZKIN_Q" => Poly(motzkin_q(n)),
        "RS_111_1212" => Poly(rs_111_1212(n)),
        "LB_111_1221" => Poly(lb_111_1221(n)),
        "P123_1212_LB" => Poly(p123_1212_lb(n)),
        "P123_1212_LS" => Poly(p123_1212_ls(n)),
        "P112_1221_F" => Poly(p112_1221_f(n)),
        "P112_1221_LB" => Poly(p112_1221(Stat::Lb, n)),
        "P112_1221_LS" => Poly(p112_1221(Stat::Ls, n)),
        "P112_1221_RB" => Poly(p112_1221(Stat::Rb, n)),
        "P112_1221_RS" => Poly(p112_1221(Stat::Rs, n)),
        "P123_1221_F" => Poly(p123_1221_f(n)),
        "P123_1221_LB" => Poly(p123_1221(Stat::Lb, n)),
        "P123_1221_LS" => Poly(p123_1221(Stat::Ls, n)),
        "P123_1221_RB" => Poly(p123_1221(Stat::Rb, n)),
        "P123_1221_RS" => Poly(p123_1221(Stat::Rs, n)),
        "CARD_2POW" => Count(card_2pow(n)),
        "CARD_111" => Count(card_111(n)),
        "CARD_FIB" => Count(fibonacci(n)),
        "CARD_CATALAN" => Count(catalan(n)),
        "DEG_LS_12K" => Count(deg_ls_12k(need_k(args)?, n)?),
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

// ---------------------------------------------------------------------------
// Oracle claims
// ---------------------------------------------------------------------------

/// One concrete formula instantiation together with everything it claims to
/// equal under brute-force enumeration.
pub struct FormulaInstance {
    /// Display label, e.g. `LS_MACHINE(112)`.
    pub label: String,
    pub base: &'static str,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub pattern: Option<Rgf>,
    /// Claims as (comma-separated pattern list, statistic); `None` means the
    /// full four-variable polynomial.
    pub claims: Vec<(String, Option<Stat>)>,
    pub n_lo: usize,
    pub n_hi: usize,
}

impl FormulaInstance {
    pub fn args(&self, n: usize) -> FormulaArgs {
        FormulaArgs {
            n,
            k: self.k,
            m: self.m,
            pattern: self.pattern.clone(),
        }
    }

    fn plain(base: &'static str, claims: &[(&str, Option<Stat>)], n_hi: usize) -> FormulaInstance {
        FormulaInstance {
            label: base.to_string(),
            base,
            k: None,
            m: None,
            pattern: None,
            claims: claims.iter().map(|(p, s)| (p.to_string(), *s)).collect(),
            n_lo: 0,
            n_hi,
        }
    }
}

/// Every oracle-checkable formula instance at its acceptance range.
pub fn oracle_instances() -> Vec<FormulaInstance> {
    use Stat::*;
    let mut out = vec![
        FormulaInstance::plain(
            "SUM_GAUSS",
            &[("112", Some(Lb)), ("112", Some(Rs)), ("122", Some(Lb))],
            10,
        ),
        FormulaInstance::plain(
            "DISTINCT_PROD",
            &[
                ("112", Some(Ls)),
                ("121", Some(Ls)),
                ("121", Some(Rb)),
                ("122", Some(Rb)),
            ],
            10,
        ),
        FormulaInstance::plain(
            "BINOM_SHIFT",
            &[("122", Some(Rs)), ("123", Some(Lb)), ("123", Some(Rs))],
            10,
        ),
        FormulaInstance::plain("TRIANG", &[("112", Some(Rb)), ("122", Some(Ls))], 10),
    ];
    for i in 1..=9usize {
        let base: &'static str = match i {
            1 => "MULT_1",
            2 => "MULT_2",
            3 => "MULT_3",
            4 => "MULT_4",
            5 => "MULT_5",
            6 => "MULT_6",
            7 => "MULT_7",
            8 => "MULT_8",
            _ => "MULT_9",
        };
        out.push(FormulaInstance::plain(
            base,
            &[(MULT_PATTERNS[i - 1], None)],
            9,
        ));
    }
    for v in ["11", "111", "112", "121", "122", "123"] {
        let inner: Rgf = v.parse().unwrap();
        let outer = shift_pattern(&inner).to_string();
        out.push(FormulaInstance {
            label: format!("LS_MACHINE({v})"),
            base: "LS_MACHINE",
            k: None,
            m: None,
            pattern: Some(inner.clone()),
            claims: vec![(outer.clone(), Some(Ls))],
            n_lo: 0,
            n_hi: 9,
        });
        out.push(FormulaInstance {
            label: format!("RS_MACHINE({v})"),
            base: "RS_MACHINE",
            k: None,
            m: None,
            pattern: Some(inner),
            claims: vec![(outer, Some(Rs))],
            n_lo: 0,
            n_hi: 9,
        });
    }
    for k in 3..=5usize {
        let run: String = (1..=k).map(|x| x.to_string()).collect();
        out.push(FormulaInstance {
            label: format!("LS_12K(k={k})"),
            base: "LS_12K",
            k: Some(k),
            m: None,
            pattern: None,
            claims: vec![(run, Some(Ls))],
            n_lo: 1,
            n_hi: 7,
        });
    }
    for m in 1..=5usize {
        let ones = "1".repeat(m);
        out.push(FormulaInstance {
            label: format!("LS_ONES(m={m})"),
            base: "LS_ONES",
            k: None,
            m: Some(m),
            pattern: None,
            claims: vec![(ones.clone(), Some(Ls))],
            n_lo: 0,
            n_hi: 7,
        });
        if m >= 2 {
            out.push(FormulaInstance {
                label: format!("RS_ONES(m={m})"),
                base: "RS_ONES",
                k: None,
                m: Some(m),
                pattern: None,
                claims: vec![(ones, Some(Rs))],
                n_lo: 0,
                n_hi: 7,
            });
        }
    }
    out.push(FormulaInstance::plain("RS_1212", &[("1212", Some(Rs))], 8));
    out.push(FormulaInstance::plain(
        "RS_111_1212",
        &[("111,1212", Some(Rs))],
        8,
    ));
    out.push(FormulaInstance::plain(
        "LB_111_1221",
        &[("111,1221", Some(Lb))],
        8,
    ));
    out.push(FormulaInstance::plain(
        "P123_1212_LB",
        &[("123,1212", Some(Lb)), ("123,1212", Some(Rs))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P123_1212_LS",
        &[("123,1212", Some(Ls)), ("123,1212", Some(Rb))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P112_1221_F",
        &[("112,1221", None)],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P112_1221_LB",
        &[("112,1221", Some(Lb))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P112_1221_LS",
        &[("112,1221", Some(Ls))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P112_1221_RB",
        &[("112,1221", Some(Rb))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P112_1221_RS",
        &[("112,1221", Some(Rs))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P123_1221_F",
        &[("123,1221", None)],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P123_1221_LB",
        &[("123,1221", Some(Lb))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P123_1221_LS",
        &[("123,1221", Some(Ls))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P123_1221_RB",
        &[("123,1221", Some(Rb))],
        9,
    ));
    out.push(FormulaInstance::plain(
        "P123_1221_RS",
        &[("123,1221", Some(Rs))],
        9,
    ));
    out
}

/// Finds a registered formula instance claiming the given class and
/// statistic, for cross-checking enumeration against closed forms.
pub fn find_claiming(patterns: &str, stat: Option<Stat>) -> Option<FormulaInstance> {
    let canonical = match PatternSet::parse_list(patterns) {
        Ok(set) => set
            .patterns()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
        Err(_) => return None,
    };
    oracle_instances().into_iter().find(|inst| {
        inst.claims
            .iter()
            .any(|(p, s)| p == &canonical && *s == stat)
    })
}

// ---------------------------------------------------------------------------
// Symmetries and statistical equivalences
// ---------------------------------------------------------------------------

const IDENTITY_IMAGES: [Exp; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

fn swap_images(a: usize, b: usize) -> [Exp; 4] {
    let mut images = IDENTITY_IMAGES;
    images.swap(a, b);
    images
}

fn kill_t(mut images: [Exp; 4]) -> [Exp; 4] {
    images[T] = [0, 0, 0, 0];
    images
}

/// One symmetry identity: `F(lhs)` after `lhs_images` equals `F(rhs)`
/// after `rhs_images`, where F may be taken from the formula registry or from
/// brute force.
pub struct SymmetryItem {
    pub label: String,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub lhs_images: [Exp; 4],
    pub rhs_images: [Exp; 4],
}

pub fn symmetry_items() -> Vec<SymmetryItem> {
    let mut out = Vec::new();
    // q <-> t invariance for pairs containing 121, and for {111,122}.
    for pats in ["111,121", "112,121", "121,122", "121,123", "111,122"] {
        out.push(SymmetryItem {
            label: format!("F({pats}) invariant under q<->t"),
            lhs: pats,
            rhs: pats,
            lhs_images: IDENTITY_IMAGES,
            rhs_images: swap_images(Q, T),
        });
    }
    // r <-> s invariance.
    for pats in ["111,121", "112,122", "121,123"] {
        out.push(SymmetryItem {
            label: format!("F({pats}) invariant under r<->s"),
            lhs: pats,
            rhs: pats,
            lhs_images: IDENTITY_IMAGES,
            rhs_images: swap_images(R, S),
        });
    }
    // F(111,121; q,r,s,t) = F(111,112; s,r,s,1).
    let mut sub = IDENTITY_IMAGES;
    sub[Q] = [0, 0, 1, 0];
    sub[T] = [0, 0, 0, 0];
    out.push(SymmetryItem {
        label: "F(111,121; q,r,s,t) = F(111,112; s,r,s,1)".into(),
        lhs: "111,121",
        rhs: "111,112",
        lhs_images: IDENTITY_IMAGES,
        rhs_images: sub,
    });
    // F(112,121; q,r,s,t) = F(121,122; q,s,r,t).
    out.push(SymmetryItem {
        label: "F(112,121; q,r,s,t) = F(121,122; q,s,r,t)".into(),
        lhs: "112,121",
        rhs: "121,122",
        lhs_images: IDENTITY_IMAGES,
        rhs_images: swap_images(R, S),
    });
    // F(112,123; q,r,s,1) = F(122,123; q,s,r,1).
    out.push(SymmetryItem {
        label: "F(112,123; q,r,s,1) = F(122,123; q,s,r,1)".into(),
        lhs: "112,123",
        rhs: "122,123",
        lhs_images: kill_t(IDENTITY_IMAGES),
        rhs_images: kill_t(swap_images(R, S)),
    });
    out
}

/// Checks every symmetry item on the `MULT_*` formula outputs at one `n`;
/// returns the first failing label.
pub fn mult_symmetry_witness(n: usize) -> Result<Option<String>> {
    let poly_for = |pats: &str| -> Result<MultiPoly> {
        let i = MULT_PATTERNS.iter().position(|&p| p == pats).unwrap() + 1;
        mult(i, n)
    };
    for item in symmetry_items() {
        let lhs = poly_for(item.lhs)?.subst_monomials(&item.lhs_images);
        let rhs = poly_for(item.rhs)?.subst_monomials(&item.rhs_images);
        if lhs != rhs {
            return Ok(Some(format!("{} fails at n={n}", item.label)));
        }
    }
    Ok(None)
}

/// Brute-force statistical equivalence of two single patterns: the named
/// statistic has the same distribution over `R_n(v)` and `R_n(w)` for all
/// `n <= n_max`.
pub fn wilf_transport(v: &Rgf, w: &Rgf, stat: Stat, n_max: usize) -> Result<bool> {
    let sv = single(v);
    let sw = single(w);
    for n in 0..=n_max {
        if gen_poly_stat(n, &sv, stat)? != gen_poly_stat(n, &sw, stat)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three lifted equivalence families at prefix depth `k`:
/// `12...k k (k+1)` and `12...k (k+1) (k+1)` under lb, `12...k k (k+1)` and
/// `12...k (k+1) k` under ls, `12...k (k+1) (k+1)` and `12...k (k+1) (k+2)`
/// under rs.
pub fn lifted_wilf_pairs(k: usize) -> Vec<(Rgf, Rgf, Stat)> {
    let run: Vec<usize> = (1..=k).collect();
    let word = |suffix: &[usize]| {
        let mut letters = run.clone();
        letters.extend_from_slice(suffix);
        Rgf::from_letters(letters).unwrap()
    };
    vec![
        (word(&[k, k + 1]), word(&[k + 1, k + 1]), Stat::Lb),
        (word(&[k, k + 1]), word(&[k + 1, k]), Stat::Ls),
        (word(&[k + 1, k + 1]), word(&[k + 1, k + 2]), Stat::Rs),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statistics::gen_poly;

    fn poly(id: &str, n: usize) -> MultiPoly {
        evaluate(id, &FormulaArgs::n(n))
            .unwrap()
            .into_poly()
            .unwrap()
    }

    #[test]
    fn length_three_formulas() {
        assert_eq!(poly("SUM_GAUSS", 3).to_text(), "3 + q");
        assert_eq!(poly("DISTINCT_PROD", 3).to_text(), "1 + q + q^2 + q^3");
        assert_eq!(poly("BINOM_SHIFT", 3).to_text(), "3 + q");
        assert_eq!(poly("TRIANG", 3).to_text(), "1 + 2q + q^3");
        assert_eq!(poly("SUM_GAUSS", 0), MultiPoly::one());
    }

    #[test]
    fn motzkin_goldens() {
        assert_eq!(poly("MOTZKIN_Q", 0), MultiPoly::one());
        assert_eq!(poly("MOTZKIN_Q", 1).to_text(), "2");
        assert_eq!(poly("MOTZKIN_Q", 2).to_text(), "4 + q");
        // The unshifted recursion bounds would give 4 at n = 2; the area count
        // over the five paths of length 2 is 4 + q.
        let area_sum: MultiPoly = crate::objects::enumerate_two_colored(2)
            .iter()
            .fold(MultiPoly::zero(), |acc, p| {
                acc.add(&MultiPoly::var_pow(Q, p.area() as u32))
            });
        assert_eq!(area_sum, poly("MOTZKIN_Q", 2));
    }

    #[test]
    fn cardinality_formulas() {
        assert_eq!(
            evaluate("CARD_111", &FormulaArgs::n(4)).unwrap(),
            FormulaValue::Count(10)
        );
        assert_eq!(
            evaluate("CARD_FIB", &FormulaArgs::n(5)).unwrap(),
            FormulaValue::Count(8)
        );
        assert_eq!(
            evaluate("CARD_2POW", &FormulaArgs::n(11)).unwrap(),
            FormulaValue::Count(1024)
        );
        assert_eq!(
            evaluate("CARD_CATALAN", &FormulaArgs::n(4)).unwrap(),
            FormulaValue::Count(14)
        );
    }

    #[test]
    fn k_and_c_rational_values() {
        // K(1, 3) = ([2]^2 - 1) / [1] = 2q + q^2.
        let k13 = evaluate(
            "K",
            &FormulaArgs {
                n: 3,
                m: Some(1),
                ..Default::default()
            },
        )
        .unwrap()
        .into_poly()
        .unwrap();
        assert_eq!(k13.to_text(), "2q + q^2");
        // c_3 = 1, c_4 = 0, c_5 = q / (1 + q).
        assert_eq!(c_coeff(3).unwrap(), QRat::one());
        assert!(c_coeff(4).unwrap().is_zero());
        let c5 = c_coeff(5).unwrap();
        assert_eq!(c5, QRat::new(MultiPoly::var(Q), q_int(2)).unwrap());
        assert!(c5.to_polynomial().is_err());
    }

    #[test]
    fn k_identities() {
        for m in 1..=8 {
            for n in 1..=8 {
                let rational = k_mn_rational(m, n).unwrap().to_polynomial().unwrap();
                assert_eq!(rational, k_mn_binomial_sum(m, n), "K({m},{n})");
            }
        }
        // (K(m+1, n) - K(1, n)) / [m] = sum_j C(n-1, j) q^j K(m, j).
        for m in 1..=8usize {
            for n in 1..=8usize {
                let lhs = k_mn_rational(m + 1, n)
                    .unwrap()
                    .sub(&k_mn_rational(1, n).unwrap())
                    .div(&QRat::from_poly(q_int(m)).unwrap())
                    .unwrap();
                let mut rhs = MultiPoly::zero();
                for j in 1..n {
                    let c = binomial(n as i64 - 1, j as i64);
                    let term = int(c)
                        .mul(&MultiPoly::var_pow(Q, j as u32))
                        .mul(&k_mn_rational(m, j).unwrap().to_polynomial().unwrap());
                    rhs = rhs.add(&term);
                }
                assert_eq!(
                    lhs.to_polynomial().unwrap(),
                    rhs,
                    "difference identity at ({m},{n})"
                );
            }
        }
    }

    #[test]
    fn ls_12k_golden() {
        let p = evaluate(
            "LS_12K",
            &FormulaArgs {
                n: 4,
                k: Some(4),
                ..Default::default()
            },
        )
        .unwrap()
        .into_poly()
        .unwrap();
        assert_eq!(p.to_text(), "1 + 3q + 3q^2 + 4q^3 + 2q^4 + q^5");
        // k = 3 collapses to (1 + q)^(n-1).
        for n in 1..=6 {
            let p = evaluate(
                "LS_12K",
                &FormulaArgs {
                    n,
                    k: Some(3),
                    ..Default::default()
                },
            )
            .unwrap()
            .into_poly()
            .unwrap();
            assert_eq!(p, q_int::<i64>(2).pow(n as u32 - 1), "k=3, n={n}");
        }
    }

    #[test]
    fn machine_reproduces_triang() {
        // The ls machine at v = 11 computes LS_n(122), which has the
        // triangular closed form.
        let v: Rgf = "11".parse().unwrap();
        for n in 0..=9 {
            assert_eq!(ls_machine(&v, n).unwrap(), triang(n), "n={n}");
        }
    }

    #[test]
    fn oracle_battery_small() {
        for inst in oracle_instances() {
            for n in inst.n_lo..=inst.n_hi.min(6) {
                let value = evaluate(inst.base, &inst.args(n))
                    .unwrap()
                    .into_poly()
                    .unwrap();
                for (pats, stat) in &inst.claims {
                    let set = PatternSet::parse_list(pats).unwrap();
                    let brute = match stat {
                        Some(st) => gen_poly_stat(n, &set, *st).unwrap(),
                        None => gen_poly(n, &set).unwrap(),
                    };
                    assert_eq!(value, brute, "{} vs {pats} at n={n}", inst.label);
                }
            }
        }
    }

    #[test]
    fn symmetry_items_hold_on_formulas() {
        for n in 0..=8 {
            assert_eq!(mult_symmetry_witness(n).unwrap(), None, "n={n}");
        }
    }

    #[test]
    fn wilf_transport_examples() {
        let v: Rgf = "1232".parse().unwrap();
        let w: Rgf = "1223".parse().unwrap();
        assert!(wilf_transport(&w, &v, Stat::Ls, 7).unwrap());
        let v: Rgf = "1233".parse().unwrap();
        let w: Rgf = "1234".parse().unwrap();
        assert!(wilf_transport(&v, &w, Stat::Rs, 7).unwrap());
        // Reflexive case.
        assert!(wilf_transport(&v, &v, Stat::Rs, 6).unwrap());
        // A non-equivalence for contrast: lb over R_n(111) vs R_n(123).
        let a: Rgf = "111".parse().unwrap();
        let b: Rgf = "123".parse().unwrap();
        assert!(!wilf_transport(&a, &b, Stat::Lb, 5).unwrap());
    }

    #[test]
    fn lifted_wilf_families() {
        // The base equivalences at k = 1 all hold.
        for (v, w, st) in lifted_wilf_pairs(1) {
            assert!(
                wilf_transport(&v, &w, st, 7).unwrap(),
                "{v} vs {w} under {st:?}"
            );
        }
        // The ls and rs lifts hold for deeper prefixes; the lb lift does NOT:
        // exhaustive enumeration splits the distributions of 1223 and 1233 at
        // n = 5 (witness 12213: avoids 1233, contains 1223, lb = 1). Frozen
        // here as a regression so the refutation stays machine-checked.
        for k in 2..=3 {
            for (v, w, st) in lifted_wilf_pairs(k) {
                let ok = wilf_transport(&v, &w, st, 7).unwrap();
                match st {
                    Stat::Ls | Stat::Rs => assert!(ok, "{v} vs {w} under {st:?}"),
                    Stat::Lb => assert!(!ok, "{v} vs {w} under lb unexpectedly holds"),
                    Stat::Rb => unreachable!(),
                }
            }
        }
        let a = PatternSet::parse_list("1223").unwrap();
        let b = PatternSet::parse_list("1233").unwrap();
        let pa = gen_poly_stat(5, &a, Stat::Lb).unwrap();
        let pb = gen_poly_stat(5, &b, Stat::Lb).unwrap();
        assert_eq!(pa.to_text(), "11 + 12q + 12q^2 + 5q^3 + q^4");
        assert_eq!(pb.to_text(), "11 + 13q + 11q^2 + 5q^3 + q^4");
    }

    #[test]
    fn degree_statement() {
        for k in 3..=5usize {
            for n in k..=8 {
                let p = ls_12k(k, n).unwrap();
                let deg = deg_ls_12k(k, n).unwrap();
                assert_eq!(p.degree_in(Q) as u64, deg, "degree at ({k},{n})");
                assert_eq!(p.leading_coeff_univar(Q), 1, "monic at ({k},{n})");
            }
        }
    }

    #[test]
    fn unknown_and_missing_args() {
        assert!(matches!(
            evaluate("NO_SUCH", &FormulaArgs::n(1)),
            Err(Error::UnknownId(_))
        ));
        assert!(evaluate("LS_12K", &FormulaArgs::n(4)).is_err());
        assert!(evaluate(
            "RS_ONES",
            &FormulaArgs {
                n: 3,
                m: Some(1),
                ..Default::default()
            }
        )
        .is_err());
    }
}
