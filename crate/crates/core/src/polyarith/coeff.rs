//! Coefficient fields.
//!
//! The engine works over any type implementing [`Coeff`]. Two hooks let a
//! field keep intermediate polynomials small during reduction; the defaults
//! are correct for every field and simply work with monic polynomials.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

pub trait Coeff: Clone + Debug + PartialEq + Num + std::ops::Neg<Output = Self> + Send + Sync + 'static {
    /// Divides `coeffs` by a common non-zero factor and returns it.
    ///
    /// The default divides by the first entry, leaving a monic sequence.
    fn remove_content(coeffs: &mut [Self]) -> Self {
        let lead = coeffs[0].clone();
        for c in coeffs.iter_mut() {
            *c = c.clone() / lead.clone();
        }
        lead
    }

    /// Returns non-zero `(u, v)` with `u * target == v * pivot`.
    fn cancel_factors(target: &Self, pivot: &Self) -> (Self, Self) {
        (Self::one(), target.clone() / pivot.clone())
    }

    /// Rough size used by length-weighted pair selection.
    fn weight(&self) -> usize {
        1
    }

    /// `self * other` without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self + other` without consuming either operand.
    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
}

impl Coeff for BigRational {
    fn remove_content(coeffs: &mut [Self]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs.iter() {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in coeffs.iter() {
            let n = c.numer() * (&den / c.denom());
            g = gcd(&g, &n);
            if g.is_one() {
                break;
            }
        }
        if coeffs[0].is_negative() {
            g = -g;
        }
        let factor = BigRational::new(g.clone(), den.clone());
        for c in coeffs.iter_mut() {
            let n = c.numer() * (&den / c.denom());
            *c = BigRational::from_integer(n / &g);
        }
        factor
    }

    fn cancel_factors(target: &Self, pivot: &Self) -> (Self, Self) {
        if target.is_integer() && pivot.is_integer() {
            let (t, p) = (target.numer(), pivot.numer());
            let g = gcd(t, p);
            let (mut u, mut v) = (p / &g, t / &g);
            if u.is_negative() {
                u = -u;
                v = -v;
            }
            (BigRational::from_integer(u), BigRational::from_integer(v))
        } else {
            (Self::one(), target / pivot)
        }
    }

    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize / 32 + 1
    }

    // Integer operands skip the normalizing gcd, which is slow for large numbers.
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_integer() && other.is_integer() {
            BigRational::from_integer(self.numer() * other.numer())
        } else {
            self * other
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_integer() && other.is_integer() {
            BigRational::from_integer(self.numer() + other.numer())
        } else {
            self + other
        }
    }
}

/// Non-negative gcd by Euclidean remainders, switching to machine words once both fit.
/// Unlike the binary algorithm this is fast when one operand is much shorter than the other.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        if let (Some(x), Some(y)) = (a.to_u64(), b.to_u64()) {
            return BigInt::from(x.gcd(&y));
        }
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn content_is_removed_to_primitive_integers() {
        let mut v = vec![q(-2, 3), q(4, 9), q(2, 1)];
        let c = <BigRational as Coeff>::remove_content(&mut v);
        assert_eq!(v, vec![q(3, 1), q(-2, 1), q(-9, 1)]);
        assert_eq!(c, q(-2, 9));
    }

    #[test]
    fn cancel_factors_balance() {
        let (u, v) = <BigRational as Coeff>::cancel_factors(&q(6, 1), &q(-4, 1));
        assert_eq!(u.clone() * q(6, 1), v.clone() * q(-4, 1));
        assert_eq!((u, v), (q(2, 1), q(-3, 1)));
        let (u, v) = <BigRational as Coeff>::cancel_factors(&q(1, 2), &q(3, 1));
        assert_eq!(u * q(1, 2), v * q(3, 1));
    }

    #[test]
    fn gcd_matches_binary_gcd() {
        let a = BigInt::from(2).pow(200u32) * 3 * 7;
        let b = BigInt::from(-2).pow(77u32) * 21 * 5;
        assert_eq!(gcd(&a, &b), a.gcd(&b));
        assert_eq!(gcd(&a, &BigInt::zero()), a);
        assert_eq!(gcd(&BigInt::zero(), &b), b.abs());
    }
}
