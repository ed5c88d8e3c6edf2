//! Sparse exact polynomials in the four formal variables `q, r, s, t`,
//! classical and bivariate q-analogues, and exact rational arithmetic over
//! univariate polynomials in `q`.
//!
//! Coefficients are generic over any signed integer scalar with checked
//! arithmetic ([`Coeff`]); overflow panics rather than wrapping. Bivariate
//! `(p, q)` polynomials reuse the `r` exponent slot for `p` and never mix with
//! statistics polynomials inside one value.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};

use crate::error::{Error, Result};

/// Number of formal variables; the fixed order is `(q, r, s, t)`.
pub const NVARS: usize = 4;

/// Exponent vector in the fixed `(q, r, s, t)` order.
pub type Exp = [u32; NVARS];

pub const VAR_NAMES: [&str; NVARS] = ["q", "r", "s", "t"];

/// Variable indices into [`Exp`].
pub const Q: usize = 0;
pub const R: usize = 1;
pub const S: usize = 2;
pub const T: usize = 3;

/// Coefficient scalar: a signed integer with checked ring operations.
pub trait Coeff:
    Clone + Eq + fmt::Debug + fmt::Display + Signed + CheckedAdd + CheckedSub + CheckedMul
{
}

impl<T> Coeff for T where
    T: Clone + Eq + fmt::Debug + fmt::Display + Signed + CheckedAdd + CheckedSub + CheckedMul
{
}

/// Sparse multivariate polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<Exp, C>,
}

fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut out = [0u32; NVARS];
    for i in 0..NVARS {
        out[i] = a[i].checked_add(b[i]).expect("exponent overflow");
    }
    out
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::monomial([0; NVARS], c)
    }

    pub fn monomial(exp: Exp, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    /// The bare variable with index `var` (see [`Q`], [`R`], [`S`], [`T`]).
    pub fn var(var: usize) -> Self {
        let mut exp = [0; NVARS];
        exp[var] = 1;
        Poly::monomial(exp, C::one())
    }

    pub fn var_pow(var: usize, e: u32) -> Self {
        let mut exp = [0; NVARS];
        exp[var] = e;
        Poly::monomial(exp, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in exponent-vector order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exp) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, exp: Exp, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(&c).expect("coefficient overflow");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, C::zero().checked_sub(c).expect("coefficient overflow"));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly::zero().sub(self)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let c = ca.checked_mul(cb).expect("coefficient overflow");
                out.add_term(exp_add(ea, eb), c);
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Poly::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes every variable by 1, i.e. sums the coefficients.
    pub fn eval_all_ones(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc = acc.checked_add(c).expect("coefficient overflow");
        }
        acc
    }

    /// Sets every variable with `keep[i] == false` to 1.
    pub fn specialize(&self, keep: [bool; NVARS]) -> Self {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut exp = [0u32; NVARS];
            for i in 0..NVARS {
                if keep[i] {
                    exp[i] = e[i];
                }
            }
            out.add_term(exp, c.clone());
        }
        out
    }

    /// Substitutes each variable by a monomial in the same variable set;
    /// `images[i]` is the exponent vector replacing variable `i`. An all-zero
    /// image sets the variable to 1, so this also performs specializations and
    /// variable swaps.
    pub fn subst_monomials(&self, images: &[Exp; NVARS]) -> Self {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut exp = [0u32; NVARS];
            for i in 0..NVARS {
                for j in 0..NVARS {
                    exp[j] = exp[j]
                        .checked_add(images[i][j].checked_mul(e[i]).expect("exponent overflow"))
                        .expect("exponent overflow");
                }
            }
            out.add_term(exp, c.clone());
        }
        out
    }

    /// Swaps two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut images = [[0u32; NVARS]; NVARS];
        for (i, image) in images.iter_mut().enumerate() {
            let j = if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            };
            image[j] = 1;
        }
        self.subst_monomials(&images)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// True iff only the variable `var` appears.
    pub fn is_univariate_in(&self, var: usize) -> bool {
        self.terms
            .keys()
            .all(|e| (0..NVARS).all(|i| i == var || e[i] == 0))
    }

    /// Coefficient of the highest power of `var`; the polynomial must be
    /// univariate in `var`.
    pub fn leading_coeff_univar(&self, var: usize) -> C {
        debug_assert!(self.is_univariate_in(var));
        let d = self.degree_in(var);
        let mut exp = [0; NVARS];
        exp[var] = d;
        self.coeff(&exp)
    }

    /// Exact division of univariate polynomials in `var`; errors unless the
    /// quotient has integer coefficients and zero remainder.
    pub fn div_exact_univar(&self, divisor: &Self, var: usize) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Invalid("division by the zero polynomial".into()));
        }
        if !self.is_univariate_in(var) || !divisor.is_univariate_in(var) {
            return Err(Error::Invalid(
                "exact division requires univariate operands".into(),
            ));
        }
        let dd = divisor.degree_in(var);
        let dlead = divisor.leading_coeff_univar(var);
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let rd = rem.degree_in(var);
            if rd < dd {
                return Err(Error::NonPolynomial(format!(
                    "remainder of degree {rd} left by divisor of degree {dd}"
                )));
            }
            let rlead = rem.leading_coeff_univar(var);
            if !(rlead.clone() % dlead.clone()).is_zero() {
                return Err(Error::NonPolynomial(
                    "leading coefficient not divisible".into(),
                ));
            }
            let c = rlead / dlead.clone();
            let mut exp = [0; NVARS];
            exp[var] = rd - dd;
            let mono = Poly::monomial(exp, c);
            rem = rem.sub(&mono.mul(divisor));
            quot = quot.add(&mono);
        }
        Ok(quot)
    }

    /// Deterministic text form: terms in graded lexicographic order, e.g.
    /// `1 + q + 2q^2 + q^3 + q^4`.
    pub fn to_text(&self) -> String {
        self.to_text_with_names(&VAR_NAMES)
    }

    pub fn to_text_with_names(&self, names: &[&str; NVARS]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut entries: Vec<(&Exp, &C)> = self.terms.iter().collect();
        entries.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), **e));
        let mut out = String::new();
        for (i, (e, c)) in entries.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                out.push_str(&mag.to_string());
            }
            for v in 0..NVARS {
                match e[v] {
                    0 => {}
                    1 => out.push_str(names[v]),
                    k => {
                        out.push_str(names[v]);
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

impl Poly<i64> {
    /// JSON form: `{"vars":["q","r","s","t"],"terms":[{"e":[..],"c":..},..]}`
    /// with terms sorted by exponent vector.
    pub fn to_json_value(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({ "e": e, "c": c }))
            .collect();
        serde_json::json!({ "vars": VAR_NAMES, "terms": terms })
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl<C: Coeff> std::ops::Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::add(self, rhs)
    }
}

impl<C: Coeff> std::ops::Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::sub(self, rhs)
    }
}

impl<C: Coeff> std::ops::Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::mul(self, rhs)
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int<C: Coeff>(n: usize) -> Poly<C> {
    let mut out = Poly::zero();
    for i in 0..n {
        out.add_term([i as u32, 0, 0, 0], C::one());
    }
    out
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial<C: Coeff>(n: usize) -> Poly<C> {
    let mut out = Poly::one();
    for i in 1..=n {
        out = out.mul(&q_int(i));
    }
    out
}

/// Gaussian polynomial (q-binomial coefficient); zero when `k < 0 or k > n`
/// by convention. Computed by the q-Pascal recurrence, so no division is
/// involved.
pub fn gaussian<C: Coeff>(n: i64, k: i64) -> Poly<C> {
    if k < 0 || k > n || n < 0 {
        return Poly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] holds [i choose j]_q while i sweeps 0..=n.
    let mut row: Vec<Poly<C>> = vec![Poly::zero(); k + 1];
    row[0] = Poly::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            // [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j]
            let shifted = row[j].mul(&Poly::var_pow(Q, j as u32));
            row[j] = row[j - 1].add(&shifted);
        }
    }
    row[k].clone()
}

/// Bivariate analogue of `n`: `[n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}`,
/// with `p` stored in the `r` exponent slot.
pub fn pq_int<C: Coeff>(n: usize) -> Poly<C> {
    let mut out = Poly::zero();
    for i in 0..n {
        out.add_term([i as u32, (n - 1 - i) as u32, 0, 0], C::one());
    }
    out
}

/// Bivariate Gaussian polynomial with `p` in the `r` slot: the homogenization
/// of [`gaussian`] to total degree `k(n-k)`, so that setting `p = 1` recovers
/// the univariate version.
pub fn pq_gaussian<C: Coeff>(n: i64, k: i64) -> Poly<C> {
    if k < 0 || k > n || n < 0 {
        return Poly::zero();
    }
    let d = (k * (n - k)) as u32;
    let g: Poly<C> = gaussian(n, k);
    let mut out = Poly::zero();
    for (e, c) in g.terms() {
        // q^j in the univariate polynomial counts partitions of weight j in
        // the box; those contribute p^j q^{d-j} when the complement is tracked.
        out.add_term([d - e[Q], e[Q], 0, 0], c.clone());
    }
    out
}

/// Exact rational function `num / den` of univariate polynomials in `q`.
///
/// The pair is reduced lazily: equality is decided by cross-multiplication
/// and [`QRational::to_polynomial`] performs one exact division, so no
/// polynomial gcd is ever needed.
#[derive(Clone)]
pub struct QRational<C: Coeff> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coeff> QRational<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        if !num.is_univariate_in(Q) || !den.is_univariate_in(Q) {
            return Err(Error::Invalid(
                "rational arithmetic is univariate in q".into(),
            ));
        }
        let mut out = QRational { num, den };
        if out.den.leading_coeff_univar(Q).is_negative() {
            out.num = out.num.neg();
            out.den = out.den.neg();
        }
        Ok(out)
    }

    pub fn from_poly(p: Poly<C>) -> Result<Self> {
        QRational::new(p, Poly::one())
    }

    pub fn zero() -> Self {
        QRational {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        QRational {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly<C> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        QRational::new(num, den).expect("nonzero denominators multiply to nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        QRational::new(num, den).expect("nonzero denominators multiply to nonzero")
    }

    pub fn mul(&self, other: &Self) -> Self {
        QRational::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators multiply to nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Invalid("division by zero rational".into()));
        }
        QRational::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Succeeds exactly when the denominator divides the numerator, returning
    /// the quotient polynomial.
    pub fn to_polynomial(&self) -> Result<Poly<C>> {
        self.num.div_exact_univar(&self.den, Q)
    }
}

impl<C: Coeff> PartialEq for QRational<C> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<C: Coeff> Eq for QRational<C> {}

impl<C: Coeff> fmt::Display for QRational<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<C: Coeff> fmt::Debug for QRational<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<i64>;

    fn q() -> P {
        Poly::var(Q)
    }

    #[test]
    fn q_analogue_basics() {
        assert_eq!(q_int::<i64>(3).to_text(), "1 + q + q^2");
        assert_eq!(q_int::<i64>(0), P::zero());
        assert_eq!(q_factorial::<i64>(3).to_text(), "1 + 2q + 2q^2 + q^3");
        assert_eq!(gaussian::<i64>(2, 1).to_text(), "1 + q");
        assert_eq!(gaussian::<i64>(4, 2).to_text(), "1 + q + 2q^2 + q^3 + q^4");
        assert_eq!(gaussian::<i64>(4, -1), P::zero());
        assert_eq!(gaussian::<i64>(4, 5), P::zero());
        assert_eq!(gaussian::<i64>(5, 0), P::one());
    }

    #[test]
    fn gaussian_symmetry_and_counting() {
        for n in 0..=12i64 {
            for k in 0..=n {
                let g: P = gaussian(n, k);
                assert_eq!(g, gaussian(n, n - k), "symmetry at ({n},{k})");
                assert_eq!(
                    g.eval_all_ones(),
                    crate::counting::binomial(n, k),
                    "value at q=1 for ({n},{k})"
                );
                // Palindromic coefficient sequence.
                let d = g.degree_in(Q);
                for j in 0..=d {
                    assert_eq!(
                        g.coeff(&[j, 0, 0, 0]),
                        g.coeff(&[d - j, 0, 0, 0]),
                        "palindrome at ({n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn bivariate_analogues() {
        assert_eq!(
            pq_int::<i64>(2).to_text_with_names(&["q", "p", "s", "t"]),
            "p + q"
        );
        assert_eq!(
            pq_gaussian::<i64>(2, 1).to_text_with_names(&["q", "p", "s", "t"]),
            "p + q"
        );
        // Setting p = 1 recovers the univariate Gaussian polynomial.
        for n in 0..=8i64 {
            for k in 0..=n {
                let pq: P = pq_gaussian(n, k);
                let at_p1 = pq.specialize([true, false, true, true]);
                assert_eq!(at_p1, gaussian(n, k), "p=1 collapse at ({n},{k})");
            }
        }
    }

    #[test]
    fn display_ordering() {
        let p = P::constant(3).add(&q());
        assert_eq!(p.to_text(), "3 + q");
        let m = P::monomial([1, 1, 1, 1], 1).add(&P::constant(1));
        assert_eq!(m.to_text(), "1 + qrst");
        let neg = P::constant(1).sub(&q().pow(2).scale(&2));
        assert_eq!(neg.to_text(), "1 - 2q^2");
        assert_eq!(P::zero().to_text(), "0");
    }

    #[test]
    fn json_schema_shape() {
        let p = P::constant(3).add(&q());
        let v = p.to_json_value();
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"c":3,"e":[0,0,0,0]},{"c":1,"e":[1,0,0,0]}],"vars":["q","r","s","t"]}"#
        );
    }

    #[test]
    fn rational_arithmetic() {
        // ([2]^2 - 1) / [1] = 2q + q^2.
        let num = q_int::<i64>(2).pow(2).sub(&P::one());
        let k = QRational::new(num, q_int(1)).unwrap();
        assert_eq!(k.to_polynomial().unwrap().to_text(), "2q + q^2");

        // x / x = 1 for any nonzero x.
        let x = QRational::new(q_int::<i64>(5), P::one()).unwrap();
        assert_eq!(x.div(&x).unwrap(), QRational::one());

        // 1 / (1 + q) is not a polynomial.
        let r = QRational::new(P::one(), q_int(2)).unwrap();
        assert!(matches!(r.to_polynomial(), Err(Error::NonPolynomial(_))));

        // Mixed arithmetic: 1/(1+q) + q/(1+q) = 1.
        let a = QRational::new(P::one(), q_int(2)).unwrap();
        let b = QRational::new(q(), q_int(2)).unwrap();
        assert_eq!(a.add(&b), QRational::one());
        assert_eq!(a.add(&b).to_polynomial().unwrap(), P::one());
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_is_a_hard_error() {
        let big = P::constant(i64::MAX);
        let _ = big.add(&P::one());
    }

    #[test]
    fn generic_over_smaller_scalars() {
        let g: Poly<i32> = gaussian(4, 2);
        assert_eq!(g.eval_all_ones(), 6);
    }
}
