//! Hamilton quaternions over a commutative coefficient ring and dual
//! quaternions stored as `(primal, dual)` pairs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{CommutativeRing, DualScalar, Rational, TryInverse};
use crate::error::{Error, Result};

/// `w + x·i + y·j + z·k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion<R> {
    pub w: R,
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R> Quaternion<R> {
    pub fn new(w: R, x: R, y: R, z: R) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn into_components(self) -> [R; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn map<S>(&self, mut f: impl FnMut(&R) -> S) -> Quaternion<S> {
        Quaternion { w: f(&self.w), x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }

    pub fn try_map<S, E>(&self, mut f: impl FnMut(&R) -> std::result::Result<S, E>) -> std::result::Result<Quaternion<S>, E> {
        Ok(Quaternion { w: f(&self.w)?, x: f(&self.x)?, y: f(&self.y)?, z: f(&self.z)? })
    }
}

impl<R: CommutativeRing> Quaternion<R> {
    pub fn scalar(w: R) -> Self {
        Quaternion { w, x: R::zero(), y: R::zero(), z: R::zero() }
    }

    pub fn i() -> Self {
        Quaternion::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn k() -> Self {
        Quaternion::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    /// `[1, i, j, k]`.
    pub fn basis() -> [Self; 4] {
        [Self::one(), Self::i(), Self::j(), Self::k()]
    }

    pub fn conj(&self) -> Self {
        Quaternion {
            w: self.w.clone(),
            x: -self.x.clone(),
            y: -self.y.clone(),
            z: -self.z.clone(),
        }
    }

    /// `q · conj(q) = w² + x² + y² + z²`.
    pub fn norm_squared(&self) -> R {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|v| c.clone() * v.clone())
    }

    /// Hamilton product; `i² = j² = k² = ijk = −1`.
    pub fn hamilton(&self, q: &Self) -> Self {
        let p = self;
        let m = |a: &R, b: &R| a.clone() * b.clone();
        Quaternion {
            w: m(&p.w, &q.w) - m(&p.x, &q.x) - m(&p.y, &q.y) - m(&p.z, &q.z),
            x: m(&p.w, &q.x) + m(&p.x, &q.w) + m(&p.y, &q.z) - m(&p.z, &q.y),
            y: m(&p.w, &q.y) - m(&p.x, &q.z) + m(&p.y, &q.w) + m(&p.z, &q.x),
            z: m(&p.w, &q.z) + m(&p.x, &q.y) - m(&p.y, &q.x) + m(&p.z, &q.w),
        }
    }
}

impl<R: CommutativeRing> Add for Quaternion<R> {
    type Output = Self;
    fn add(self, q: Self) -> Self {
        Quaternion { w: self.w + q.w, x: self.x + q.x, y: self.y + q.y, z: self.z + q.z }
    }
}

impl<R: CommutativeRing> Sub for Quaternion<R> {
    type Output = Self;
    fn sub(self, q: Self) -> Self {
        Quaternion { w: self.w - q.w, x: self.x - q.x, y: self.y - q.y, z: self.z - q.z }
    }
}

impl<R: CommutativeRing> Neg for Quaternion<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl<R: CommutativeRing> Mul for Quaternion<R> {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        self.hamilton(&q)
    }
}

impl<'a, R: CommutativeRing> Mul<&'a Quaternion<R>> for &'a Quaternion<R> {
    type Output = Quaternion<R>;
    fn mul(self, q: &'a Quaternion<R>) -> Quaternion<R> {
        self.hamilton(q)
    }
}

impl<R: CommutativeRing> Zero for Quaternion<R> {
    fn zero() -> Self {
        Quaternion::scalar(R::zero())
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl<R: CommutativeRing> One for Quaternion<R> {
    fn one() -> Self {
        Quaternion::scalar(R::one())
    }
}

impl TryInverse for Quaternion<Rational> {
    fn try_inverse(&self) -> Result<Self> {
        let n = self.norm_squared();
        let inv = n
            .try_inverse()
            .map_err(|_| Error::DivisionByZero("zero quaternion has no inverse".into()))?;
        Ok(self.conj().scale(&inv))
    }
}

impl<R: fmt::Display> fmt::Display for Quaternion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// `primal + ε·dual` with ε central and `ε² = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualQuaternion<R> {
    pub primal: Quaternion<R>,
    pub dual: Quaternion<R>,
}

impl<R> DualQuaternion<R> {
    pub fn new(primal: Quaternion<R>, dual: Quaternion<R>) -> Self {
        DualQuaternion { primal, dual }
    }

    pub fn map<S>(&self, mut f: impl FnMut(&R) -> S) -> DualQuaternion<S> {
        DualQuaternion { primal: self.primal.map(&mut f), dual: self.dual.map(&mut f) }
    }

    pub fn try_map<S, E>(&self, mut f: impl FnMut(&R) -> std::result::Result<S, E>) -> std::result::Result<DualQuaternion<S>, E> {
        Ok(DualQuaternion { primal: self.primal.try_map(&mut f)?, dual: self.dual.try_map(&mut f)? })
    }

    /// The eight coefficients, primal `w, x, y, z` then dual `w, x, y, z`.
    pub fn coefficients(&self) -> [&R; 8] {
        let [a, b, c, d] = self.primal.components();
        let [e, f, g, h] = self.dual.components();
        [a, b, c, d, e, f, g, h]
    }
}

impl<R: CommutativeRing> DualQuaternion<R> {
    pub fn from_primal(primal: Quaternion<R>) -> Self {
        DualQuaternion { primal, dual: Quaternion::zero() }
    }

    /// `ε·q`.
    pub fn pure_dual(dual: Quaternion<R>) -> Self {
        DualQuaternion { primal: Quaternion::zero(), dual }
    }

    pub fn scale(&self, c: &R) -> Self {
        DualQuaternion { primal: self.primal.scale(c), dual: self.dual.scale(c) }
    }

    /// `(P + εP')(Q + εQ') = PQ + ε(PQ' + P'Q)`.
    pub fn dual_mul(&self, q: &Self) -> Self {
        DualQuaternion {
            primal: &self.primal * &q.primal,
            dual: &self.primal * &q.dual + &self.dual * &q.primal,
        }
    }

    /// Same element as a quaternion whose coefficients are dual scalars.
    pub fn to_dual_coefficients(&self) -> Quaternion<DualScalar<R>> {
        let d = |r: &R, e: &R| DualScalar::new(r.clone(), e.clone());
        Quaternion {
            w: d(&self.primal.w, &self.dual.w),
            x: d(&self.primal.x, &self.dual.x),
            y: d(&self.primal.y, &self.dual.y),
            z: d(&self.primal.z, &self.dual.z),
        }
    }

    pub fn from_dual_coefficients(q: &Quaternion<DualScalar<R>>) -> Self {
        DualQuaternion { primal: q.map(|c| c.real.clone()), dual: q.map(|c| c.dual.clone()) }
    }
}

impl<R: CommutativeRing> Add for DualQuaternion<R> {
    type Output = Self;
    fn add(self, q: Self) -> Self {
        DualQuaternion { primal: self.primal + q.primal, dual: self.dual + q.dual }
    }
}

impl<R: CommutativeRing> Sub for DualQuaternion<R> {
    type Output = Self;
    fn sub(self, q: Self) -> Self {
        DualQuaternion { primal: self.primal - q.primal, dual: self.dual - q.dual }
    }
}

impl<R: CommutativeRing> Neg for DualQuaternion<R> {
    type Output = Self;
    fn neg(self) -> Self {
        DualQuaternion { primal: -self.primal, dual: -self.dual }
    }
}

impl<R: CommutativeRing> Mul for DualQuaternion<R> {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        self.dual_mul(&q)
    }
}

impl<'a, R: CommutativeRing> Mul<&'a DualQuaternion<R>> for &'a DualQuaternion<R> {
    type Output = DualQuaternion<R>;
    fn mul(self, q: &'a DualQuaternion<R>) -> DualQuaternion<R> {
        self.dual_mul(q)
    }
}

impl<R: CommutativeRing> Zero for DualQuaternion<R> {
    fn zero() -> Self {
        DualQuaternion { primal: Quaternion::zero(), dual: Quaternion::zero() }
    }
    fn is_zero(&self) -> bool {
        self.primal.is_zero() && self.dual.is_zero()
    }
}

impl<R: CommutativeRing> One for DualQuaternion<R> {
    fn one() -> Self {
        DualQuaternion::from_primal(Quaternion::one())
    }
}

impl TryInverse for DualQuaternion<Rational> {
    /// `(P + εD)⁻¹ = P⁻¹ − ε P⁻¹ D P⁻¹`, defined whenever `P ≠ 0`.
    fn try_inverse(&self) -> Result<Self> {
        let p_inv = self.primal.try_inverse()?;
        let dual = -(&(&p_inv * &self.dual) * &p_inv);
        Ok(DualQuaternion { primal: p_inv, dual })
    }
}

impl<R: fmt::Display> fmt::Display for DualQuaternion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ε{}", self.primal, self.dual)
    }
}

/// Convenience for tests and presets: a rational quaternion from integers.
pub fn quat_i64(w: i64, x: i64, y: i64, z: i64) -> Quaternion<Rational> {
    use crate::arith::rat;
    Quaternion::new(rat(w), rat(x), rat(y), rat(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Quaternion<Rational>;
    type DQ = DualQuaternion<Rational>;

    #[test]
    fn hamilton_table() {
        let (one, i, j, k) = (Q::one(), Q::i(), Q::j(), Q::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -k.clone());
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &j, -i.clone());
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &k, -j.clone());
        for u in [&i, &j, &k] {
            assert_eq!(u * u, -one.clone());
        }
        assert_eq!(&(&i * &j) * &k, -one.clone());
    }

    #[test]
    fn identity_and_expansion() {
        let q = quat_i64(3, -1, 4, 2);
        assert_eq!(&Q::one() * &q, q);
        let lhs = &(Q::one() + Q::i()) * &(Q::one() + Q::j());
        assert_eq!(lhs, quat_i64(1, 1, 1, 1));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Q::i().conj(), -Q::i());
        assert_eq!((&Q::i() * &Q::j()).conj(), -Q::k());
        assert_eq!(&Q::j().conj() * &Q::i().conj(), -Q::k());
        let three = quat_i64(3, 0, 0, 0);
        assert_eq!(three.conj(), three);
        let q = quat_i64(1, 2, -3, 4);
        assert_eq!(&q * &q.conj(), Q::scalar(q.norm_squared()));
    }

    #[test]
    fn dual_products() {
        let ei = DQ::pure_dual(Q::i());
        let ej = DQ::pure_dual(Q::j());
        assert!((&ei * &ej).is_zero());

        let p = DQ::new(Q::one(), Q::i());
        let q = DQ::new(Q::j(), Q::k());
        assert_eq!(&p * &q, DQ::new(Q::j(), quat_i64(0, 0, 0, 2)));

        let a = quat_i64(1, 2, 3, 4);
        let b = quat_i64(-2, 0, 5, 1);
        assert_eq!(
            &DQ::from_primal(a.clone()) * &DQ::from_primal(b.clone()),
            DQ::from_primal(&a * &b)
        );
    }

    #[test]
    fn dual_addition() {
        let p = DQ::new(quat_i64(1, 0, 0, 0), Q::i());
        assert_eq!(p.clone() + DQ::zero(), p);
        let q = DQ::new(Q::j(), Q::k());
        assert_eq!(p.clone() + q, DQ::new(quat_i64(1, 0, 1, 0), quat_i64(0, 1, 0, 1)));
        assert!((p.clone() + p.scale(&crate::arith::rat(-1))).is_zero());
    }

    #[test]
    fn inverses() {
        let q = quat_i64(1, 2, -3, 4);
        assert_eq!(&q * &q.try_inverse().unwrap(), Q::one());
        assert!(Q::zero().try_inverse().is_err());
        let d = DQ::new(q.clone(), quat_i64(0, 5, 1, -1));
        let inv = d.try_inverse().unwrap();
        assert_eq!(&d * &inv, DQ::one());
        assert_eq!(&inv * &d, DQ::one());
    }

    #[test]
    fn dual_coefficient_round_trip() {
        let d = DQ::new(quat_i64(1, 2, 3, 4), quat_i64(5, 6, 7, 8));
        assert_eq!(DQ::from_dual_coefficients(&d.to_dual_coefficients()), d);
    }
}
