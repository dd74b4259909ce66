//! Closed-form evaluation of `Fₙ` and `Q̃ₙ` in `Q(sqrt D)`.
//!
//! The characteristic roots are `α = (ab + sqrt D)/2` and
//! `β = (ab − sqrt D)/2`, the roots of `x² − abx − ab = 0`. Every
//! evaluation is carried out exactly and the `sqrt D` part of the result is
//! required to vanish before the rational value is returned.

use num_traits::One;

use crate::arith::{pow, rat, render_rational, QuadElem, Rational, TryInverse};
use crate::error::{Error, Result};
use crate::quaternion::{DualQuaternion, Quaternion};
use crate::sequence::{is_even, xi, BiperiodicParams};

pub type QuadQuat = Quaternion<QuadElem>;

/// `α, β` and the quaternion coefficients used by the two parity branches:
///
/// - `α* = a + αi + (a/ab)α²j + (1/ab)α³k`
/// - `α** = 1 + (a/ab)αi + (1/ab)α²j + (a/(ab)²)α³k`
///
/// and likewise for `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinetConstants {
    pub alpha: QuadElem,
    pub beta: QuadElem,
    pub alpha_star: QuadQuat,
    pub beta_star: QuadQuat,
    pub alpha_star2: QuadQuat,
    pub beta_star2: QuadQuat,
}

impl BinetConstants {
    pub fn new(params: &BiperiodicParams) -> Result<Self> {
        params.check_nondegenerate()?;
        let disc = params.discriminant();
        let ab = params.ab();
        let half = Rational::new(1.into(), 2.into());
        let alpha = QuadElem::new(&ab * &half, half.clone(), disc);
        let beta = QuadElem::new(&ab * &half, -half, disc);

        let a = params.a().clone();
        let inv_ab = ab.recip();
        let a_over_ab = &a * &inv_ab;
        let a_over_ab2 = &a_over_ab * &inv_ab;

        let star = |root: &QuadElem| {
            let sq = root * root;
            let cube = &sq * root;
            Quaternion::new(
                QuadElem::rational(a.clone()),
                root.clone(),
                sq.scale(&a_over_ab),
                cube.scale(&inv_ab),
            )
        };
        let star2 = |root: &QuadElem| {
            let sq = root * root;
            let cube = &sq * root;
            Quaternion::new(
                QuadElem::one(),
                root.scale(&a_over_ab),
                sq.scale(&inv_ab),
                cube.scale(&a_over_ab2),
            )
        };

        Ok(BinetConstants {
            alpha_star: star(&alpha),
            beta_star: star(&beta),
            alpha_star2: star2(&alpha),
            beta_star2: star2(&beta),
            alpha,
            beta,
        })
    }

    /// The same constants with `α` and `β` exchanged (componentwise
    /// conjugation).
    pub fn conjugated(&self) -> Self {
        BinetConstants {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            alpha_star: self.beta_star.clone(),
            beta_star: self.alpha_star.clone(),
            alpha_star2: self.beta_star2.clone(),
            beta_star2: self.alpha_star2.clone(),
        }
    }

    /// `(starred constant for α, starred constant for β)` used at index `m`:
    /// `α*`/`β*` for even `m`, `α**`/`β**` for odd `m`.
    pub fn branch(&self, m: i64) -> (&QuadQuat, &QuadQuat) {
        if is_even(m) {
            (&self.alpha_star, &self.beta_star)
        } else {
            (&self.alpha_star2, &self.beta_star2)
        }
    }
}

/// Reduces a closed-form value to a rational, failing if any `sqrt D`
/// component survives.
pub fn collapse(x: &QuadElem, context: &str) -> Result<Rational> {
    x.to_rational().ok_or_else(|| Error::IrrationalResidue {
        context: context.to_string(),
        residue: render_rational(x.v()),
    })
}

pub fn collapse_quat(q: &QuadQuat, context: &str) -> Result<Quaternion<Rational>> {
    q.try_map(|c| collapse(c, context))
}

pub fn collapse_dual_quat(q: &DualQuaternion<QuadElem>, context: &str) -> Result<DualQuaternion<Rational>> {
    q.try_map(|c| collapse(c, context))
}

/// Closed-form evaluator for one parameter set.
#[derive(Clone, Debug)]
pub struct Binet {
    params: BiperiodicParams,
    constants: BinetConstants,
    ab: Rational,
    inv_diff: QuadElem,
}

impl Binet {
    pub fn new(params: &BiperiodicParams) -> Result<Self> {
        let constants = BinetConstants::new(params)?;
        Self::from_constants(params, constants)
    }

    pub fn from_constants(params: &BiperiodicParams, constants: BinetConstants) -> Result<Self> {
        let inv_diff = (&constants.alpha - &constants.beta).try_inverse()?;
        Ok(Binet { params: params.clone(), constants, ab: params.ab(), inv_diff })
    }

    pub fn constants(&self) -> &BinetConstants {
        &self.constants
    }

    pub fn params(&self) -> &BiperiodicParams {
        &self.params
    }

    fn ab_pow(&self, e: i64) -> Rational {
        num_traits::pow(self.ab.clone(), e as usize)
    }

    /// `a^{ξ(n+1)} / (ab)^{⌊n/2⌋} · (αⁿ − βⁿ)/(α − β)`, before collapsing.
    pub fn scalar_raw(&self, n: u64) -> QuadElem {
        let c = &self.constants;
        let num = &pow(&c.alpha, n) - &pow(&c.beta, n);
        let n = n as i64;
        let mut factor = self.ab_pow(n.div_euclid(2)).recip();
        if xi(n + 1) == 1 {
            factor *= self.params.a();
        }
        (&num * &self.inv_diff).scale(&factor)
    }

    /// `Fₙ` from the closed form. Negative `n` goes through the sign rule.
    pub fn scalar(&self, n: i64) -> Result<Rational> {
        if n < 0 {
            let v = self.scalar(-n)?;
            return Ok(if is_even(-n - 1) { v } else { -v });
        }
        collapse(&self.scalar_raw(n as u64), &format!("scalar Binet at n = {n}"))
    }

    /// `(Aα^m − Bβ^m) / ((ab)^{⌊m/2⌋}(α − β))` with the branch constants
    /// `A, B` chosen by the parity of `m`.
    pub fn quat_raw(&self, m: u64) -> QuadQuat {
        let (sa, sb) = self.constants.branch(m as i64);
        self.quat_with(sa, sb, m)
    }

    /// Same shape as [`Binet::quat_raw`] with caller-supplied constants.
    pub fn quat_with(&self, sa: &QuadQuat, sb: &QuadQuat, m: u64) -> QuadQuat {
        let c = &self.constants;
        let am = pow(&c.alpha, m);
        let bm = pow(&c.beta, m);
        let scale = QuadElem::rational(self.ab_pow((m / 2) as i64).recip()) * self.inv_diff.clone();
        (sa.scale(&am) - sb.scale(&bm)).scale(&scale)
    }

    /// `Q̃ₙ` by the two-branch closed form, before collapsing: the primal
    /// part at index `n` and the ε-part at index `n + 1`, each with the
    /// starred constants for its own parity.
    pub fn dual_quat_raw(&self, n: u64) -> DualQuaternion<QuadElem> {
        DualQuaternion::new(self.quat_raw(n), self.quat_raw(n + 1))
    }

    pub fn dual_quat(&self, n: i64) -> Result<DualQuaternion<Rational>> {
        if n < 0 {
            return Err(Error::Precondition(format!("dual-quaternion Binet form needs n >= 0, got {n}")));
        }
        collapse_dual_quat(&self.dual_quat_raw(n as u64), &format!("dual-quaternion Binet at n = {n}"))
    }
}

pub fn binet_constants(params: &BiperiodicParams) -> Result<BinetConstants> {
    BinetConstants::new(params)
}

pub fn binet_scalar(params: &BiperiodicParams, n: i64) -> Result<Rational> {
    Binet::new(params)?.scalar(n)
}

pub fn binet_dual_quat(params: &BiperiodicParams, n: i64) -> Result<DualQuaternion<Rational>> {
    Binet::new(params)?.dual_quat(n)
}

/// One algebraic relation between `α`, `β`, `ab` and `D`, checked exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootRelation {
    pub relation: &'static str,
    pub holds: bool,
}

/// Checks the root relations the closed forms lean on, together with
/// `α − β = −ab` (which is false in general; `αβ = −ab` is the true
/// relation).
pub fn root_relations(params: &BiperiodicParams) -> Result<Vec<RootRelation>> {
    let c = BinetConstants::new(params)?;
    let ab = QuadElem::rational(params.ab());
    let d = QuadElem::rational(params.discriminant().value().clone());
    let (al, be) = (&c.alpha, &c.beta);
    let diff = al - be;
    let checks = [
        ("alpha + beta = ab", al + be == ab),
        ("alpha * beta = -ab", al * be == -ab.clone()),
        ("(alpha - beta)^2 = D", &diff * &diff == d),
        ("alpha^2 + beta^2 = ab(ab + 2)", &(al * al) + &(be * be) == &ab * &(&ab + &QuadElem::rational(rat(2)))),
        ("alpha - beta = -ab", diff == -ab),
    ];
    Ok(checks.into_iter().map(|(relation, holds)| RootRelation { relation, holds }).collect())
}
