//! Coefficient fields for the exact algebra layer.
//!
//! Everything downstream (Laurent polynomials, module orders, characteristic
//! polynomials) is generic over [`Field`]. The two instances used in practice
//! are `BigRational` and the prime fields [`Fp`].

use num_traits::{One, Zero};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::{Int, Rat};

/// An exact field. `inv` must panic only on zero.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Short tag used in serialized polynomials ("Q" or "Fp").
    fn field_tag() -> (&'static str, Option<u64>);
}

impl Field for Rat {
    fn from_i64(v: i64) -> Self {
        Rat::from(Int::from(v))
    }

    fn field_tag() -> (&'static str, Option<u64>) {
        ("Q", None)
    }
}

/// The prime field with `P` elements, `P` a small prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{}", P);
        self * rhs.pow_inv()
    }
}

impl<const P: u64> Fp<P> {
    // P is prime, so a^(P-2) inverts a.
    fn pow_inv(self) -> Self {
        let mut base = self.0 % P;
        let mut exp = P - 2;
        let mut acc: u64 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            exp >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn field_tag() -> (&'static str, Option<u64>) {
        ("Fp", Some(P))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F2;

    #[test]
    fn fp_arithmetic() {
        type F5 = Fp<5>;
        let a = F5::new(3);
        let b = F5::new(4);
        assert_eq!(a + b, F5::new(2));
        assert_eq!(a * b, F5::new(2));
        assert_eq!(a - b, F5::new(4));
        assert_eq!((a / b) * b, a);
        assert_eq!(-a, F5::new(2));
    }

    #[test]
    fn f2_inverse() {
        let one = F2::new(1);
        assert_eq!(one.inv(), one);
        assert_eq!(F2::new(3), one);
    }
}
