//! Scalar tower: big rationals, the quadratic extension Q(sqrt D) and dual
//! scalars, plus the ring traits the quaternion and series code is generic
//! over.

mod dual;
mod quad;
mod rational;

pub use dual::DualScalar;
pub use quad::{Discriminant, QuadElem};
pub use rational::{parse_rational, rat, render_rational, Rational};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;

/// Associative unital ring. Multiplication need not commute.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Marker for rings whose multiplication commutes. Quaternion and dual
/// quaternion coefficients must implement it.
pub trait CommutativeRing: Ring {}

impl CommutativeRing for Rational {}
impl CommutativeRing for QuadElem {}
impl<R: CommutativeRing> CommutativeRing for DualScalar<R> {}

/// Two-sided multiplicative inverse, when one exists.
pub trait TryInverse: Sized {
    fn try_inverse(&self) -> Result<Self>;
}

impl TryInverse for Rational {
    fn try_inverse(&self) -> Result<Self> {
        if self.is_zero() {
            Err(crate::Error::DivisionByZero("rational 0 has no inverse".into()))
        } else {
            Ok(self.recip())
        }
    }
}

/// Integer power by repeated squaring; `exp` is nonnegative.
pub fn pow<R: Ring>(base: &R, mut exp: u64) -> R {
    let mut acc = R::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}
