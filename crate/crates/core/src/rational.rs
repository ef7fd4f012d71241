//! Thin helpers over `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn floor_i64(r: &Rational) -> i64 {
    r.numer()
        .div_floor(r.denom())
        .to_i64()
        .expect("floor fits in i64")
}

pub fn ceil_i64(r: &Rational) -> i64 {
    r.numer()
        .div_ceil(r.denom())
        .to_i64()
        .expect("ceiling fits in i64")
}

/// `p` or `p/q`, lowest terms.
pub fn display(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floors_and_ceilings() {
        assert_eq!(floor_i64(&ratio(-1, 2)), -1);
        assert_eq!(ceil_i64(&ratio(-1, 2)), 0);
        assert_eq!(floor_i64(&ratio(7, 3)), 2);
        assert_eq!(ceil_i64(&ratio(7, 3)), 3);
        assert_eq!(floor_i64(&int(4)), 4);
    }

    #[test]
    fn display_lowest_terms() {
        assert_eq!(display(&ratio(2, 6)), "1/3");
        assert_eq!(display(&ratio(-4, 2)), "-2");
    }
}
