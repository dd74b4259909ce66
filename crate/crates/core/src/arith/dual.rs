use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Ring;

/// `real + ε·dual` with `ε² = 0`; ε commutes with every coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualScalar<R> {
    pub real: R,
    pub dual: R,
}

impl<R: Ring> DualScalar<R> {
    pub fn new(real: R, dual: R) -> Self {
        DualScalar { real, dual }
    }

    pub fn from_real(real: R) -> Self {
        DualScalar { real, dual: R::zero() }
    }

    /// The dual unit ε itself.
    pub fn epsilon() -> Self {
        DualScalar { real: R::zero(), dual: R::one() }
    }
}

impl<R: Ring> Add for DualScalar<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DualScalar { real: self.real + rhs.real, dual: self.dual + rhs.dual }
    }
}

impl<R: Ring> Sub for DualScalar<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        DualScalar { real: self.real - rhs.real, dual: self.dual - rhs.dual }
    }
}

impl<R: Ring> Mul for DualScalar<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // the ε² term is dropped
        let dual = self.real.clone() * rhs.dual + self.dual * rhs.real.clone();
        DualScalar { real: self.real * rhs.real, dual }
    }
}

impl<R: Ring> Neg for DualScalar<R> {
    type Output = Self;
    fn neg(self) -> Self {
        DualScalar { real: -self.real, dual: -self.dual }
    }
}

impl<R: Ring> Zero for DualScalar<R> {
    fn zero() -> Self {
        DualScalar { real: R::zero(), dual: R::zero() }
    }
    fn is_zero(&self) -> bool {
        self.real.is_zero() && self.dual.is_zero()
    }
}

impl<R: Ring> One for DualScalar<R> {
    fn one() -> Self {
        DualScalar::from_real(R::one())
    }
}

impl<R: fmt::Display> fmt::Display for DualScalar<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ε{}", self.real, self.dual)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};

    type D = DualScalar<Rational>;

    #[test]
    fn epsilon_is_nilpotent() {
        assert!((D::epsilon() * D::epsilon()).is_zero());
        let p = D::new(rat(0), rat(3));
        let q = D::new(rat(0), rat(-5));
        assert!((p * q).is_zero());
    }

    #[test]
    fn product_rule() {
        let x = D::new(rat(2), rat(3));
        let y = D::new(rat(5), rat(7));
        assert_eq!(x * y, D::new(rat(10), rat(2 * 7 + 3 * 5)));
    }
}
