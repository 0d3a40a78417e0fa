//! Arbitrary-precision rational scalars and small combinatorial helpers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored reduced with positive denominator
/// (enforced by `BigRational`).
pub type Q = BigRational;

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// 2^k for possibly negative k.
pub fn pow2(k: i64) -> Q {
    let two = BigInt::from(2);
    if k >= 0 {
        Q::from_integer(two.pow(k as u32))
    } else {
        Q::new(BigInt::one(), two.pow((-k) as u32))
    }
}

/// Binomial coefficient C(n, k); zero for k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn qbin(n: i64, k: i64) -> Q {
    Q::from_integer(binomial(n, k))
}

/// Render a rational without spaces, e.g. `-3/4` or `7`.
pub fn render_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_neg(x: &Q) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn pow2_negative() {
        assert_eq!(pow2(-2), qr(1, 4));
        assert_eq!(pow2(5), qi(32));
    }
}
