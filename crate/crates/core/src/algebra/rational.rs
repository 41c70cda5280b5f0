use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact fraction of arbitrary-precision integers, always in lowest terms
/// with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient `C(n, k)` for a possibly negative top entry,
/// using the falling-factorial definition. Zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
    }
    num / factorial(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn thousand_digit_sum_is_exact() {
        let big: BigInt = "7".repeat(1000).parse().unwrap();
        let other: BigInt = "3".repeat(999).parse().unwrap();
        let a = Rational::new(big.clone(), other.clone());
        let b = Rational::new(other.clone(), big.clone());
        let sum = &a + &b;
        let expected = Rational::new(&big * &big + &other * &other, &big * &other);
        assert_eq!(sum, expected);
        assert_eq!(&sum - &b, a);
    }
}
