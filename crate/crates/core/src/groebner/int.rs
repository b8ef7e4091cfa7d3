//! Integer coefficients for fraction-free reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Int {
    S(i64),
    B(BigInt),
}

impl Int {
    fn from_i128(x: i128) -> Int {
        match i64::try_from(x) {
            Ok(v) => Int::S(v),
            Err(_) => Int::B(BigInt::from(x)),
        }
    }

    pub fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::S(v),
            None => Int::B(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::S(v) => BigInt::from(*v),
            Int::B(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::S(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::S(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::S(v) => *v < 0,
            Int::B(b) => b.is_negative(),
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::S(v) => Int::from_i128(-(*v as i128)),
            Int::B(b) => Int::from_big(-b),
        }
    }

    pub fn mul(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::S(a), Int::S(b)) => Int::from_i128(*a as i128 * *b as i128),
            (Int::S(a), Int::B(b)) | (Int::B(b), Int::S(a)) => Int::from_big(b * *a),
            (Int::B(a), Int::B(b)) => Int::B(a * b),
        }
    }

    pub fn sub(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::S(a), Int::S(b)) => Int::from_i128(*a as i128 - *b as i128),
            _ => Int::from_big(self.to_big() - o.to_big()),
        }
    }

    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::S(a), Int::S(b)) => Int::from_i128((*a as i128).gcd(&(*b as i128))),
            _ => Int::from_big(self.to_big().gcd(&o.to_big())),
        }
    }

    /// `self / o`, exact division assumed.
    pub fn div_exact(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::S(a), Int::S(b)) => Int::from_i128(*a as i128 / *b as i128),
            _ => Int::from_big(self.to_big() / o.to_big()),
        }
    }
}

/// Integer multiple of `coeffs` with content 1, and the rational factor `λ`
/// such that the result equals `λ · coeffs`.
pub(crate) fn primitive_part(coeffs: &[Rational]) -> (Vec<Int>, Rational) {
    let mut l = BigInt::one();
    for c in coeffs {
        l = l.lcm(&c.denom());
    }
    let lr = Rational::from(l.clone());
    let nums: Vec<BigInt> = coeffs.iter().map(|c| (c * &lr).numer()).collect();
    let mut g = BigInt::zero();
    for n in &nums {
        g = g.gcd(n);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    let ints = nums.into_iter().map(|n| Int::from_big(n / &g)).collect();
    (ints, &lr / &Rational::from(g))
}

pub(crate) fn content<'a>(it: impl Iterator<Item = &'a Int>) -> Int {
    let mut g = Int::S(0);
    for c in it {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn to_rational(c: &Int) -> Rational {
    match c {
        Int::S(v) => Rational::from_int(*v),
        Int::B(b) => Rational::from(b.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Int::S(i64::MAX);
        let b = a.mul(&Int::S(2));
        assert!(matches!(b, Int::B(_)));
        assert_eq!(b.div_exact(&Int::S(2)), Int::S(i64::MAX));
        assert_eq!(Int::S(i64::MIN).neg().to_big(), -BigInt::from(i64::MIN));
        assert_eq!(Int::S(12).gcd(&Int::S(-18)), Int::S(6));
    }

    #[test]
    fn primitive_parts() {
        let (v, l) = primitive_part(&[Rational::new(1, 2), Rational::new(-3, 4)]);
        assert_eq!(v, vec![Int::S(2), Int::S(-3)]);
        assert_eq!(l, Rational::from_int(4));
    }
}
