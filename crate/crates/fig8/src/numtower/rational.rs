use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::BigRational;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root of a nonnegative rational, if it is a rational square.
pub fn rat_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    if &(&rn * &rn) != n {
        return None;
    }
    let rd = d.sqrt();
    if &(&rd * &rd) != d {
        return None;
    }
    Some(Rational::new(rn, rd))
}

pub fn is_one(x: &Rational) -> bool {
    x.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(0, 1)), Some(rat(0, 1)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-4, 1)), None);
        assert_eq!(rat_sqrt(&rat(4, 3)), None);
    }
}
