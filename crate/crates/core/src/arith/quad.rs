use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{Rational, TryInverse};
use crate::arith::render_rational;
use crate::error::{Error, Result};

/// The radicand `D` of `Q(sqrt D)` together with its rational square root
/// when `D` happens to be a perfect square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Discriminant {
    value: Rational,
    root: Option<Rational>,
}

impl Discriminant {
    pub fn new(value: Rational) -> Self {
        let root = rational_sqrt(&value);
        Discriminant { value, root }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn is_perfect_square(&self) -> bool {
        self.root.is_some()
    }

    pub fn rational_root(&self) -> Option<&Rational> {
        self.root.as_ref()
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_rational(&self.value))
    }
}

/// Exact square root of a nonnegative rational in lowest terms, if it has one.
fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// `u + v·sqrt(D)`.
///
/// Elements built from a plain rational carry no discriminant and combine
/// with any extension. Two elements that both carry a discriminant must
/// agree on it; the `try_*` methods report a mismatch as an error and the
/// operator impls panic on it.
///
/// When `D` is a perfect square the `sqrt(D)` part is folded into `u` at
/// construction, so equality is plain component equality.
#[derive(Clone, Debug)]
pub struct QuadElem {
    u: Rational,
    v: Rational,
    disc: Option<Arc<Discriminant>>,
}

impl QuadElem {
    pub fn new(u: Rational, v: Rational, disc: &Arc<Discriminant>) -> Self {
        match disc.rational_root() {
            Some(root) => QuadElem { u: u + v * root, v: Rational::zero(), disc: Some(disc.clone()) },
            None => QuadElem { u, v, disc: Some(disc.clone()) },
        }
    }

    pub fn rational(u: Rational) -> Self {
        QuadElem { u, v: Rational::zero(), disc: None }
    }

    /// The formal symbol `sqrt(D)`.
    pub fn sqrt_d(disc: &Arc<Discriminant>) -> Self {
        Self::new(Rational::zero(), Rational::one(), disc)
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn discriminant(&self) -> Option<&Arc<Discriminant>> {
        self.disc.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    /// The rational value, or `None` if a `sqrt(D)` component remains.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.u.clone())
    }

    fn join(&self, other: &Self) -> Result<Option<Arc<Discriminant>>> {
        match (&self.disc, &other.disc) {
            (Some(x), Some(y)) if !Arc::ptr_eq(x, y) && x != y => Err(Error::DiscriminantMismatch {
                left: x.to_string(),
                right: y.to_string(),
            }),
            (Some(x), _) => Ok(Some(x.clone())),
            (None, y) => Ok(y.clone()),
        }
    }

    fn build(u: Rational, v: Rational, disc: Option<Arc<Discriminant>>) -> Self {
        match disc {
            Some(d) => QuadElem::new(u, v, &d),
            None => {
                debug_assert!(v.is_zero());
                QuadElem::rational(u)
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let disc = self.join(other)?;
        Ok(QuadElem::build(&self.u + &other.u, &self.v + &other.v, disc))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let disc = self.join(other)?;
        Ok(QuadElem::build(&self.u - &other.u, &self.v - &other.v, disc))
    }

    /// `(u1 + v1 sqrt D)(u2 + v2 sqrt D) = (u1 u2 + v1 v2 D) + (u1 v2 + v1 u2) sqrt D`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let disc = self.join(other)?;
        let cross = match &disc {
            Some(d) if !self.v.is_zero() && !other.v.is_zero() => &self.v * &other.v * d.value(),
            _ => Rational::zero(),
        };
        let u = &self.u * &other.u + cross;
        let v = &self.u * &other.v + &self.v * &other.u;
        Ok(QuadElem::build(u, v, disc))
    }

    pub fn conj(&self) -> Self {
        QuadElem { u: self.u.clone(), v: -&self.v, disc: self.disc.clone() }
    }

    /// `x · conj(x) = u² − v²D`.
    pub fn norm(&self) -> Rational {
        match &self.disc {
            Some(d) if !self.v.is_zero() => &self.u * &self.u - &self.v * &self.v * d.value(),
            _ => &self.u * &self.u,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadElem { u: &self.u * c, v: &self.v * c, disc: self.disc.clone() }
    }
}

impl TryInverse for QuadElem {
    fn try_inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero(format!("{self} has zero norm")));
        }
        let c = self.conj();
        Ok(QuadElem::build(c.u / &n, c.v / &n, c.disc))
    }
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        if self.u != other.u || self.v != other.v {
            return false;
        }
        if self.v.is_zero() {
            return true;
        }
        match (&self.disc, &other.disc) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.disc, self.v.is_zero()) {
            (Some(d), false) => write!(
                f,
                "{} + {}*sqrt({})",
                render_rational(&self.u),
                render_rational(&self.v),
                d
            ),
            _ => f.write_str(&render_rational(&self.u)),
        }
    }
}

impl From<Rational> for QuadElem {
    fn from(u: Rational) -> Self {
        QuadElem::rational(u)
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                self.$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $tr<&'a QuadElem> for &'a QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &'a QuadElem) -> QuadElem {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { u: -self.u, v: -self.v, disc: self.disc }
    }
}

impl Zero for QuadElem {
    fn zero() -> Self {
        QuadElem::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl One for QuadElem {
    fn one() -> Self {
        QuadElem::rational(Rational::one())
    }
}
