//! Truncated formal Laurent series over an arbitrary (possibly
//! noncommutative) ring.
//!
//! A series stores the coefficients for exponents `min_exp..` and an
//! optional truncation order: with `Some(n)` every coefficient above `t^n` is
//! unknown, with `None` the series is exact (a Laurent polynomial).

use std::fmt;

use num_traits::Zero;

use crate::arith::{Ring, TryInverse};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LaurentSeries<R> {
    min_exp: i64,
    coeffs: Vec<R>,
    order: Option<i64>,
}

fn min_order(x: Option<i64>, y: Option<i64>) -> Option<i64> {
    match (x, y) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

impl<R: Ring> LaurentSeries<R> {
    /// Exact Laurent polynomial `Σ coeffs[k]·t^(min_exp + k)`.
    pub fn polynomial(min_exp: i64, coeffs: Vec<R>) -> Self {
        LaurentSeries { min_exp, coeffs, order: None }.normalized()
    }

    /// Series known up to and including `t^order`.
    pub fn truncated(min_exp: i64, coeffs: Vec<R>, order: i64) -> Self {
        LaurentSeries { min_exp, coeffs, order: Some(order) }.normalized()
    }

    pub fn zero() -> Self {
        LaurentSeries { min_exp: 0, coeffs: Vec::new(), order: None }
    }

    pub fn monomial(coeff: R, exp: i64) -> Self {
        Self::polynomial(exp, vec![coeff])
    }

    pub fn constant(coeff: R) -> Self {
        Self::monomial(coeff, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(R::one(), 1)
    }

    fn normalized(mut self) -> Self {
        if let Some(n) = self.order {
            let keep = (n - self.min_exp + 1).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
        } else {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        self
    }

    /// Highest exponent with a known coefficient; `None` for exact series.
    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_none()
    }

    /// Lowest exponent with a nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.min_exp)
    }

    /// Lower bound for the exponent of the first nonzero term; for a
    /// truncated zero series this is one past its order.
    fn valuation_bound(&self) -> Option<i64> {
        self.valuation().or(self.order.map(|n| n + 1))
    }

    /// Exponents at or below which some coefficient is nonzero.
    pub fn max_stored_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^exp`, or `None` past the truncation order.
    pub fn coeff(&self, exp: i64) -> Option<R> {
        if self.order.is_some_and(|n| exp > n) {
            return None;
        }
        Some(self.coeff_unchecked(exp))
    }

    fn coeff_unchecked(&self, exp: i64) -> R {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return R::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficients of `t^lo ..= t^hi`; fails if any of them is unknown.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Result<Vec<R>> {
        if let Some(n) = self.order.filter(|&n| hi > n) {
            return Err(Error::Precondition(format!("coefficient t^{hi} requested but series is only known to t^{n}")));
        }
        Ok((lo..=hi).map(|e| self.coeff_unchecked(e)).collect())
    }

    /// `(exponent, coefficient)` for every stored nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Exponents below zero that carry a nonzero coefficient.
    pub fn negative_exponents(&self) -> Vec<i64> {
        self.terms().map(|(e, _)| e).filter(|&e| e < 0).collect()
    }

    pub fn truncate(&self, order: i64) -> Self {
        LaurentSeries { min_exp: self.min_exp, coeffs: self.coeffs.clone(), order: min_order(self.order, Some(order)) }
            .normalized()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { min_exp: self.min_exp + k, coeffs: self.coeffs.clone(), order: self.order.map(|n| n + k) }
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> LaurentSeries<S> {
        LaurentSeries { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(f).collect(), order: self.order }
            .normalized()
    }

    /// Left multiplication of every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    fn combine(&self, other: &Self, f: impl Fn(R, R) -> R) -> Self {
        let order = min_order(self.order, other.order);
        let lo = match (self.valuation(), other.valuation()) {
            (Some(x), Some(y)) => x.min(y),
            (x, y) => x.or(y).unwrap_or(0),
        };
        let hi = match (self.max_stored_exp(), other.max_stored_exp()) {
            (Some(x), Some(y)) => x.max(y),
            (x, y) => x.or(y).unwrap_or(lo - 1),
        };
        let hi = order.map_or(hi, |n| hi.min(n));
        let coeffs = (lo..=hi).map(|e| f(self.coeff_unchecked(e), other.coeff_unchecked(e))).collect();
        LaurentSeries { min_exp: lo, coeffs, order }.normalized()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |x, y| x - y)
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    /// Cauchy product. The result is known up to
    /// `min(val(x) + ord(y), val(y) + ord(x))`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = match (self.valuation_bound(), other.valuation_bound()) {
            (Some(vx), Some(vy)) => min_order(self.order.map(|n| n + vy), other.order.map(|n| n + vx)),
            // an exact zero factor
            _ => None,
        };
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return LaurentSeries { min_exp: 0, coeffs: Vec::new(), order };
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + x.clone() * y.clone();
            }
        }
        LaurentSeries { min_exp: self.min_exp + other.min_exp, coeffs, order }.normalized()
    }
}

impl<R: Ring + TryInverse> LaurentSeries<R> {
    /// The series `q` with `q·den = self`, computed up to `t^max_order` (or
    /// less, if the operands' truncation orders do not determine that many
    /// coefficients).
    pub fn div(&self, den: &Self, max_order: i64) -> Result<Self> {
        let vd = den
            .valuation()
            .ok_or_else(|| Error::DivisionByZero("series division by a zero series".into()))?;
        let d0_inv = den.coeffs[0].try_inverse()?;
        // d(t) = den / t^vd has invertible constant term and is known to ord(den) − vd.
        let d_order = den.order.map(|n| n - vd);
        let num_order = self.order;
        let derived = match self.valuation_bound() {
            Some(vn) => min_order(num_order, d_order.map(|n| n + vn)).map(|n| n - vd),
            None => None,
        };
        let order = derived.map_or(max_order, |n| n.min(max_order));
        let Some(vn) = self.valuation() else {
            return Ok(LaurentSeries { min_exp: 0, coeffs: Vec::new(), order: Some(order) });
        };
        let start = vn - vd;
        let mut q: Vec<R> = Vec::new();
        for e in start..=order {
            // coefficient of t^(e + vd) in q·den must equal num's
            let mut acc = self.coeff_unchecked(e + vd);
            for (k, qk) in q.iter().enumerate() {
                let j = e - (start + k as i64);
                if let Some(dj) = den.coeffs.get(j as usize) {
                    acc = acc - qk.clone() * dj.clone();
                }
            }
            q.push(acc * d0_inv.clone());
        }
        Ok(LaurentSeries { min_exp: start, coeffs: q, order: Some(order) }.normalized())
    }
}

impl<R: Ring> PartialEq for LaurentSeries<R> {
    /// Compares exponents up to the smaller of the two truncation orders.
    fn eq(&self, other: &Self) -> bool {
        let limit = min_order(self.order, other.order);
        let lo = self.min_exp.min(other.min_exp);
        let hi = self
            .max_stored_exp()
            .unwrap_or(lo)
            .max(other.max_stored_exp().unwrap_or(lo));
        let hi = limit.map_or(hi, |n| hi.min(n));
        (lo..=hi).all(|e| self.coeff_unchecked(e) == other.coeff_unchecked(e))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})t^{e}")?;
        }
        if first {
            f.write_str("0")?;
        }
        if let Some(n) = self.order {
            write!(f, " + O(t^{})", n + 1)?;
        }
        Ok(())
    }
}
