//! Exact rationals and the handful of integer sequences used throughout.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// (2l-1)!!, with the empty product for l = 0.
pub fn odd_double_factorial(l: u64) -> BigInt {
    (1..=l).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k - 1))
}

/// Binomial coefficient, zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn rational_to_string(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse::<Rational>().ok()
}

/// Bernoulli numbers B_0..=B_m from sum_{j<=m} C(m+1, j) B_j = 0, so B_1 = -1/2.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    b.push(Rational::one());
    for k in 1..=m {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from_integer(binomial(k as i64 + 1, j as i64)) * bj;
        }
        b.push(-s / Rational::from_integer(BigInt::from(k + 1)));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], int(0));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[8], rat(-1, 30));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(odd_double_factorial(3), BigInt::from(15));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn rationals_reduce() {
        assert_eq!(rat(2, -4), rat(-1, 2));
        assert_eq!(rat(0, 7).to_string(), "0");
        assert_eq!(parse_rational("5/24"), Some(rat(5, 24)));
    }
}
