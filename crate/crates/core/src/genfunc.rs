//! Generating functions: the scalar `F(x)`, the odd-part series `f(t)`, the
//! correction series `R(t)` and `S(t)`, and the dual-quaternion generating
//! function `G(t) = Σ Q̃ₙtⁿ` assembled from them.

use num_traits::Zero;

use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::quaternion::{DualQuaternion, Quaternion};
use crate::sequence::{fib_quat, BiperiodicParams, SequenceCache};
use crate::series::LaurentSeries;

pub type Series = LaurentSeries<Rational>;
pub type QuatSeries = LaurentSeries<Quaternion<Rational>>;
pub type DualQuatSeries = LaurentSeries<DualQuaternion<Rational>>;

/// Default truncation order for quaternion-valued series.
pub const DEFAULT_QUAT_ORDER: i64 = 24;
/// Default truncation order for the scalar generating function.
pub const DEFAULT_SCALAR_ORDER: i64 = 32;

fn check_order(order: i64, min: i64, what: &str) -> Result<()> {
    if order < min {
        return Err(Error::Precondition(format!("{what} needs order >= {min}, got {order}")));
    }
    Ok(())
}

/// `F(x) = (x + ax² − x³) / (1 − (ab+2)x² + x⁴)` expanded to `x^order`.
pub fn gf_scalar(params: &BiperiodicParams, order: i64) -> Result<Series> {
    check_order(order, 0, "gf_scalar")?;
    let num = Series::polynomial(1, vec![rat(1), params.a().clone(), rat(-1)]);
    let den = Series::polynomial(0, vec![rat(1), rat(0), -(params.ab() + rat(2)), rat(0), rat(1)]);
    num.div(&den, order)
}

/// `f(t) = Σ_{k≥1} F_{2k−1} t^{2k−1}`, known to `t^order`.
pub fn f_odd(params: &BiperiodicParams, order: i64) -> Result<Series> {
    check_order(order, 1, "f_odd")?;
    let mut cache = SequenceCache::new(params.clone());
    cache.fill(0, order);
    let coeffs = (1..=order)
        .map(|e| if e % 2 == 1 { cache.get(e).expect("filled").clone() } else { Rational::zero() })
        .collect();
    Ok(Series::truncated(1, coeffs, order))
}

/// Interleaves four scalar series into one quaternion-valued series.
pub fn quaternion_series(parts: [&Series; 4]) -> QuatSeries {
    let order = parts.iter().filter_map(|s| s.order()).min();
    let lo = parts.iter().filter_map(|s| s.valuation()).min().unwrap_or(0);
    let hi = parts.iter().filter_map(|s| s.max_stored_exp()).max().unwrap_or(lo - 1);
    let hi = order.map_or(hi, |n| hi.min(n));
    let coeffs = (lo..=hi)
        .map(|e| {
            let c = |s: &Series| s.coeff(e).unwrap_or_else(Rational::zero);
            Quaternion::new(c(parts[0]), c(parts[1]), c(parts[2]), c(parts[3]))
        })
        .collect();
    match order {
        Some(n) => QuatSeries::truncated(lo, coeffs, n),
        None => QuatSeries::polynomial(lo, coeffs),
    }
}

fn assert_nonnegative(component: &Series, context: &str) -> Result<()> {
    match component.negative_exponents().first() {
        Some(&exponent) => Err(Error::NegativeExponent { context: context.to_string(), exponent }),
        None => Ok(()),
    }
}

/// Scalar component series of `R(t)` and `S(t)`, in `w, x, y, z` order.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectionParts {
    pub components: [Series; 4],
}

impl CorrectionParts {
    pub fn assemble(&self, name: &str) -> Result<QuatSeries> {
        for (c, label) in self.components.iter().zip(["1", "i", "j", "k"]) {
            assert_nonnegative(c, &format!("{name}(t), {label}-component"))?;
        }
        let [w, x, y, z] = &self.components;
        Ok(quaternion_series([w, x, y, z]))
    }
}

fn t_pow(e: i64) -> Series {
    Series::monomial(rat(1), e)
}

/// `R(t) = t·f + (f − t)i + (f/t − 1)j + (f/t² − 1/t − (ab+1)t)k`, each
/// component truncated at `t^order`.
pub fn r_parts(params: &BiperiodicParams, order: i64) -> Result<CorrectionParts> {
    check_order(order, 2, "R(t)")?;
    let f = f_odd(params, order + 3)?;
    let ab1 = params.ab() + rat(1);
    let components = [
        f.shift(1),
        f.sub(&t_pow(1)),
        f.shift(-1).sub(&t_pow(0)),
        f.shift(-2).sub(&t_pow(-1)).sub(&Series::monomial(ab1, 1)),
    ]
    .map(|c| c.truncate(order));
    Ok(CorrectionParts { components })
}

/// `S(t) = (f − t) + (f/t − 1)i + (f/t² − 1/t − (ab+1)t)j
///       + (f/t³ − 1/t² − (ab+1))k`, each component truncated at `t^order`.
pub fn s_parts(params: &BiperiodicParams, order: i64) -> Result<CorrectionParts> {
    check_order(order, 2, "S(t)")?;
    let f = f_odd(params, order + 3)?;
    let ab1 = params.ab() + rat(1);
    let components = [
        f.sub(&t_pow(1)),
        f.shift(-1).sub(&t_pow(0)),
        f.shift(-2).sub(&t_pow(-1)).sub(&Series::monomial(ab1.clone(), 1)),
        f.shift(-3).sub(&t_pow(-2)).sub(&Series::constant(ab1)),
    ]
    .map(|c| c.truncate(order));
    Ok(CorrectionParts { components })
}

pub fn build_r(params: &BiperiodicParams, order: i64) -> Result<QuatSeries> {
    r_parts(params, order)?.assemble("R")
}

pub fn build_s(params: &BiperiodicParams, order: i64) -> Result<QuatSeries> {
    s_parts(params, order)?.assemble("S")
}

/// `1 − bt − t²`.
fn denominator(params: &BiperiodicParams) -> LaurentSeries<DualQuaternion<Rational>> {
    let lift = |r: Rational| DualQuaternion::from_primal(Quaternion::scalar(r));
    LaurentSeries::polynomial(0, vec![lift(rat(1)), lift(-params.b().clone()), lift(rat(-1))])
}

/// `Q_first + (Q_second − b·Q_first)t + correction`.
fn numerator(params: &BiperiodicParams, first: i64, correction: Option<&QuatSeries>) -> QuatSeries {
    let q0 = fib_quat(params, first);
    let q1 = fib_quat(params, first + 1);
    let linear = q1 - q0.scale(params.b());
    let base = QuatSeries::polynomial(0, vec![q0, linear]);
    match correction {
        Some(c) => base.add(c),
        None => base,
    }
}

fn combine_dual(primal: &QuatSeries, dual: &QuatSeries) -> DualQuatSeries {
    let order = match (primal.order(), dual.order()) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let lo = primal.valuation().into_iter().chain(dual.valuation()).min().unwrap_or(0);
    let hi = primal.max_stored_exp().into_iter().chain(dual.max_stored_exp()).max().unwrap_or(lo - 1);
    let hi = order.map_or(hi, |n| hi.min(n));
    let coeffs = (lo..=hi)
        .map(|e| {
            let c = |s: &QuatSeries| s.coeff(e).unwrap_or_else(Quaternion::zero);
            DualQuaternion::new(c(primal), c(dual))
        })
        .collect();
    match order {
        Some(n) => DualQuatSeries::truncated(lo, coeffs, n),
        None => DualQuatSeries::polynomial(lo, coeffs),
    }
}

/// `G(t) = [Q₀ + (Q₁ − bQ₀)t + (a−b)R(t)] / (1 − bt − t²)
///       + ε [Q₁ + (Q₂ − bQ₁)t + (a−b)S(t)] / (1 − bt − t²)`,
/// expanded to `t^order`.
pub fn gf_dual_quat(params: &BiperiodicParams, order: i64) -> Result<DualQuatSeries> {
    check_order(order, 0, "gf_dual_quat")?;
    let inner = order.max(2);
    let amb = params.a() - params.b();
    let r = build_r(params, inner)?.map(|q| q.scale(&amb));
    let s = build_s(params, inner)?.map(|q| q.scale(&amb));
    let num = combine_dual(&numerator(params, 0, Some(&r)), &numerator(params, 1, Some(&s)));
    let g = num.div(&denominator(params), order)?;
    if let Some(&exponent) = g.negative_exponents().first() {
        return Err(Error::NegativeExponent { context: "G(t)".into(), exponent });
    }
    Ok(g)
}

/// The `a = b` form without correction terms:
/// `(Q₀ + (Q₁ − bQ₀)t)/(1 − bt − t²) + ε(Q₁ + (Q₂ − bQ₁)t)/(1 − bt − t²)`.
pub fn gf_dual_quat_reduced(params: &BiperiodicParams, order: i64) -> Result<DualQuatSeries> {
    check_order(order, 0, "gf_dual_quat_reduced")?;
    let num = combine_dual(&numerator(params, 0, None), &numerator(params, 1, None));
    num.truncate(order).div(&denominator(params), order)
}

/// Outcome of checking the two intermediate series identities behind `G(t)`:
/// `Σ_{n≥2}(Qₙ − bQₙ₋₁ − Qₙ₋₂)tⁿ = (a−b)R(t)` and the ε-part analogue
/// `Σ_{n≥2}(Qₙ₊₁ − bQₙ − Qₙ₋₁)tⁿ = (a−b)S(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStepCheck {
    pub order: i64,
    /// Exponents where the primal identity fails.
    pub r_mismatches: Vec<i64>,
    /// Exponents where the ε-part identity fails.
    pub s_mismatches: Vec<i64>,
}

impl ProofStepCheck {
    pub fn holds(&self) -> bool {
        self.r_mismatches.is_empty() && self.s_mismatches.is_empty()
    }
}

pub fn proof_step_check(params: &BiperiodicParams, order: i64) -> Result<ProofStepCheck> {
    check_order(order, 2, "proof_step_check")?;
    let amb = params.a() - params.b();
    let r = build_r(params, order)?.map(|q| q.scale(&amb));
    let s = build_s(params, order)?.map(|q| q.scale(&amb));
    let mut cache = SequenceCache::new(params.clone());
    cache.fill(0, order + 4);
    let q = |n: i64| cache.quat(n).expect("filled");
    let residual = |n: i64, shift: i64| q(n + shift) - q(n + shift - 1).scale(params.b()) - q(n + shift - 2);
    let mismatches = |series: &QuatSeries, shift: i64| {
        (0..=order)
            .filter(|&n| {
                let lhs = if n >= 2 { residual(n, shift) } else { Quaternion::zero() };
                series.coeff(n) != Some(lhs)
            })
            .collect::<Vec<_>>()
    };
    Ok(ProofStepCheck { order, r_mismatches: mismatches(&r, 0), s_mismatches: mismatches(&s, 1) })
}
