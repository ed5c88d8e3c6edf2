//! Small exact counting helpers used by the closed-form registry.
//!
//! All arithmetic is checked; these panic on overflow rather than wrap, which
//! at desk scale (n well below 60) never fires.

/// Binomial coefficient with the usual combinatorial conventions:
/// `binomial(n, 0) = 1` for every integer `n` (including negative ones),
/// and `binomial(n, k) = 0` when `k < 0`, `n < 0 < k`, or `0 <= n < k`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    if n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128).expect("binomial overflow");
        acc /= (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial overflow")
}

/// `n`-th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u64 {
    let b = binomial(2 * n as i64, n as i64);
    (b as u64) / (n as u64 + 1)
}

/// Fibonacci numbers with the convention `f_0 = f_1 = 1`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        let next = a.checked_add(b).expect("fibonacci overflow");
        a = b;
        b = next;
    }
    a
}

/// Product of the first `i` odd numbers, `1 * 3 * 5 * ... * (2i - 1)`, with
/// the empty product equal to 1.
pub fn odd_double_factorial(i: usize) -> u64 {
    let mut acc = 1u64;
    for j in 1..=i {
        acc = acc
            .checked_mul(2 * j as u64 - 1)
            .expect("double factorial overflow");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(-1, 0), 1);
        assert_eq!(binomial(-1, 1), 0);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(52, 26), 495918532948104);
    }

    #[test]
    fn catalan_values() {
        let want = [
            1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
        ];
        for (n, &c) in want.iter().enumerate() {
            assert_eq!(catalan(n), c);
        }
    }

    #[test]
    fn fibonacci_values() {
        let want = [1, 1, 2, 3, 5, 8, 13, 21];
        for (n, &f) in want.iter().enumerate() {
            assert_eq!(fibonacci(n), f);
        }
    }

    #[test]
    fn odd_double_factorial_values() {
        assert_eq!(odd_double_factorial(0), 1);
        assert_eq!(odd_double_factorial(1), 1);
        assert_eq!(odd_double_factorial(2), 3);
        assert_eq!(odd_double_factorial(3), 15);
    }
}
