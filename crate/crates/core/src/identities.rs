//! Catalan and Cassini identities for `Q̃ₙ`.
//!
//! The left side is always computed from the recurrence; the right side is
//! the printed closed form in terms of `α, β, α*, β*, α**, β**`, evaluated in
//! `Q(sqrt D)` with the noncommutative product order kept exactly as
//! written. Two exploratory variants help localize a discrepancy should one
//! appear: the uniform-power variant replaces the odd-branch primal
//! denominator `(ab)^{r−1}` by `(ab)^r`, and the symmetrized variant
//! reverses every product of two starred constants.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{pow, QuadElem, Rational};
use crate::binet::{collapse_dual_quat, Binet, BinetConstants, QuadQuat};
use crate::error::{Error, Result};
use crate::quaternion::DualQuaternion;
use crate::sequence::{is_even, BiperiodicParams, SequenceCache};

type DQ = DualQuaternion<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    Catalan,
    CassiniOdd,
    CassiniEven,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Catalan => "catalan",
            IdentityKind::CassiniOdd => "cassini-odd",
            IdentityKind::CassiniEven => "cassini-even",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// How the right-hand side is transcribed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhsVariant {
    Printed,
    UniformPower,
    Symmetrized,
}

impl RhsVariant {
    pub fn name(self) -> &'static str {
        match self {
            RhsVariant::Printed => "printed",
            RhsVariant::UniformPower => "uniform-power",
            RhsVariant::Symmetrized => "symmetrized",
        }
    }
}

/// `Strict` rejects odd `r`; `Exploratory` evaluates it and tags the case
/// as outside the theorem's hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Strict,
    Exploratory,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

impl Status {
    pub fn of(matched: bool) -> Self {
        if matched {
            Status::Match
        } else {
            Status::Mismatch
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VariantOutcome {
    pub variant: &'static str,
    pub status: Status,
}

/// One adjudicated case. `status` is `Match` iff `delta` is exactly zero.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub kind: IdentityKind,
    pub params: BiperiodicParams,
    pub n: i64,
    pub r: i64,
    pub lhs: DQ,
    /// `None` when the printed form failed to collapse to a rational value.
    pub rhs: Option<DQ>,
    pub delta: Option<DQ>,
    pub status: Status,
    pub in_hypothesis: bool,
    pub variants: Vec<VariantOutcome>,
    pub note: Option<String>,
}

impl IdentityCheck {
    fn adjudicate(
        kind: IdentityKind,
        params: &BiperiodicParams,
        n: i64,
        r: i64,
        lhs: DQ,
        rhs: Result<DQ>,
        in_hypothesis: bool,
        variants: Vec<VariantOutcome>,
    ) -> Result<Self> {
        let (rhs, delta, status, note) = match rhs {
            Ok(rhs) => {
                let delta = lhs.clone() - rhs.clone();
                let status = Status::of(delta.is_zero());
                (Some(rhs), Some(delta), status, None)
            }
            Err(e @ Error::IrrationalResidue { .. }) => (None, None, Status::Mismatch, Some(e.to_string())),
            Err(e) => return Err(e),
        };
        Ok(IdentityCheck { kind, params: params.clone(), n, r, lhs, rhs, delta, status, in_hypothesis, variants, note })
    }
}

fn lhs_from_cache(cache: &SequenceCache, n: i64, r: i64) -> DQ {
    let q = |m: i64| cache.dual_quat(m).expect("cache filled for identity window");
    q(n - r).dual_mul(&q(n + r)) - q(n).dual_mul(&q(n))
}

/// `Q̃ₙ₋ᵣQ̃ₙ₊ᵣ − Q̃ₙ²` from the recurrence; requires `n ≥ r ≥ 0`.
pub fn catalan_lhs(params: &BiperiodicParams, n: i64, r: i64) -> Result<DQ> {
    check_catalan_indices(n, r)?;
    let mut cache = SequenceCache::new(params.clone());
    cache.fill_dual_quat_windows(n - r, n + r);
    Ok(lhs_from_cache(&cache, n, r))
}

fn check_catalan_indices(n: i64, r: i64) -> Result<()> {
    if r < 0 || n < r {
        return Err(Error::Precondition(format!("Catalan identity needs n >= r >= 0, got n = {n}, r = {r}")));
    }
    Ok(())
}

/// Shared pieces of the closed-form right-hand sides.
struct RhsTerms<'a> {
    c: &'a BinetConstants,
    ab: Rational,
    /// `(α − β)²`
    diff_sq: QuadElem,
    reverse: bool,
}

impl<'a> RhsTerms<'a> {
    fn new(binet: &'a Binet, reverse: bool) -> Self {
        let c = binet.constants();
        let diff = &c.alpha - &c.beta;
        RhsTerms { c, ab: binet.params().ab(), diff_sq: &diff * &diff, reverse }
    }

    fn mul(&self, p: &QuadQuat, q: &QuadQuat) -> QuadQuat {
        if self.reverse {
            q * p
        } else {
            p * q
        }
    }

    /// `((ab)^r − β^{2r}, (ab)^r − α^{2r})`
    fn gaps(&self, r: u64) -> (QuadElem, QuadElem) {
        let abr = QuadElem::rational(num_traits::pow(self.ab.clone(), r as usize));
        (&abr - &pow(&self.c.beta, 2 * r), &abr - &pow(&self.c.alpha, 2 * r))
    }

    /// `1 / ((ab)^e (α − β)²)`
    fn inv_den(&self, e: i64) -> Result<QuadElem> {
        use crate::arith::TryInverse;
        let abe = if e >= 0 {
            num_traits::pow(self.ab.clone(), e as usize)
        } else {
            num_traits::pow(self.ab.clone(), (-e) as usize).recip()
        };
        self.diff_sq.scale(&abe).try_inverse()
    }

    fn even_primal(&self, xb: &QuadElem, xa: &QuadElem) -> QuadQuat {
        let c = self.c;
        self.mul(&c.alpha_star, &c.beta_star).scale(xb) + self.mul(&c.beta_star, &c.alpha_star).scale(xa)
    }

    fn odd_primal(&self, xb: &QuadElem, xa: &QuadElem) -> QuadQuat {
        let c = self.c;
        self.mul(&c.alpha_star2, &c.beta_star2).scale(xb) + self.mul(&c.beta_star2, &c.alpha_star2).scale(xa)
    }

    /// `(α**β*α + α*β**β)X_β + (β*α**α + β**α*β)X_α`
    fn even_dual(&self, xb: &QuadElem, xa: &QuadElem) -> QuadQuat {
        let c = self.c;
        let (al, be) = (&c.alpha, &c.beta);
        let first = self.mul(&c.alpha_star2, &c.beta_star).scale(al) + self.mul(&c.alpha_star, &c.beta_star2).scale(be);
        let second = self.mul(&c.beta_star, &c.alpha_star2).scale(al) + self.mul(&c.beta_star2, &c.alpha_star).scale(be);
        first.scale(xb) + second.scale(xa)
    }

    /// `(α*β**α + α**β*β)X_β + (β*α**β + β**α*α)X_α`
    fn odd_dual(&self, xb: &QuadElem, xa: &QuadElem) -> QuadQuat {
        let c = self.c;
        let (al, be) = (&c.alpha, &c.beta);
        let first = self.mul(&c.alpha_star, &c.beta_star2).scale(al) + self.mul(&c.alpha_star2, &c.beta_star).scale(be);
        let second = self.mul(&c.beta_star, &c.alpha_star2).scale(be) + self.mul(&c.beta_star2, &c.alpha_star).scale(al);
        first.scale(xb) + second.scale(xa)
    }
}

fn catalan_rhs_raw(binet: &Binet, n: i64, r: i64, variant: RhsVariant) -> Result<DualQuaternion<QuadElem>> {
    let t = RhsTerms::new(binet, variant == RhsVariant::Symmetrized);
    let (xb, xa) = t.gaps(r as u64);
    if is_even(n) {
        let inv = t.inv_den(r)?;
        Ok(DualQuaternion::new(t.even_primal(&xb, &xa).scale(&inv), t.even_dual(&xb, &xa).scale(&inv)))
    } else {
        let primal_exp = if variant == RhsVariant::UniformPower { r } else { r - 1 };
        let primal = -t.odd_primal(&xb, &xa).scale(&t.inv_den(primal_exp)?);
        let dual = -t.odd_dual(&xb, &xa).scale(&t.inv_den(r)?);
        Ok(DualQuaternion::new(primal, dual))
    }
}

fn catalan_rhs_eval(binet: &Binet, n: i64, r: i64, variant: RhsVariant) -> Result<DQ> {
    let raw = catalan_rhs_raw(binet, n, r, variant)?;
    collapse_dual_quat(&raw, &format!("Catalan right side ({}) at n = {n}, r = {r}", variant.name()))
}

/// The printed Catalan right-hand side. Strict mode requires even `r`.
pub fn catalan_rhs(params: &BiperiodicParams, n: i64, r: i64, mode: Mode) -> Result<DQ> {
    catalan_rhs_variant(params, n, r, mode, RhsVariant::Printed)
}

pub fn catalan_rhs_variant(params: &BiperiodicParams, n: i64, r: i64, mode: Mode, variant: RhsVariant) -> Result<DQ> {
    check_catalan_indices(n, r)?;
    check_r_parity(r, mode)?;
    catalan_rhs_eval(&Binet::new(params)?, n, r, variant)
}

fn check_r_parity(r: i64, mode: Mode) -> Result<()> {
    if mode == Mode::Strict && !is_even(r) {
        return Err(Error::Precondition(format!("Catalan identity is stated for even r, got r = {r}")));
    }
    Ok(())
}

/// The printed Cassini right-hand sides, transcribed on their own rather
/// than derived from Catalan's.
fn cassini_rhs_raw(binet: &Binet, parity: Parity, variant: RhsVariant) -> Result<DualQuaternion<QuadElem>> {
    let t = RhsTerms::new(binet, variant == RhsVariant::Symmetrized);
    let (xb, xa) = t.gaps(2);
    let c = t.c;
    match parity {
        Parity::Odd => {
            let primal_exp = if variant == RhsVariant::UniformPower { 2 } else { 1 };
            let primal = -t.odd_primal(&xb, &xa).scale(&t.inv_den(primal_exp)?);
            // α[X_β α*β** + X_α β**α*] + β[X_α β*α** + X_β α**β*]
            let with_alpha = t.mul(&c.alpha_star, &c.beta_star2).scale(&xb) + t.mul(&c.beta_star2, &c.alpha_star).scale(&xa);
            let with_beta = t.mul(&c.beta_star, &c.alpha_star2).scale(&xa) + t.mul(&c.alpha_star2, &c.beta_star).scale(&xb);
            let dual = -(with_alpha.scale(&c.alpha) + with_beta.scale(&c.beta)).scale(&t.inv_den(2)?);
            Ok(DualQuaternion::new(primal, dual))
        }
        Parity::Even => {
            let inv = t.inv_den(2)?;
            Ok(DualQuaternion::new(t.even_primal(&xb, &xa).scale(&inv), t.even_dual(&xb, &xa).scale(&inv)))
        }
    }
}

fn cassini_indices(m: i64, parity: Parity) -> (i64, i64) {
    // (n, r) with the middle index n
    match parity {
        Parity::Odd => (2 * m + 1, 2),
        Parity::Even => (2 * m, 2),
    }
}

/// Which closed form a memoized right-hand side belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum RhsKey {
    /// `(n mod 2, r, variant)`
    Catalan(i64, i64, RhsVariant),
    Cassini(Parity, RhsVariant),
}

/// Evaluator for many cases of one parameter set. Fill the sequence cache
/// once, then evaluate cases concurrently.
///
/// Right-hand sides depend only on the parity of `n`, on `r` and on the
/// variant, so each is evaluated once and shared.
pub struct IdentityChecker {
    params: BiperiodicParams,
    binet: Binet,
    cache: SequenceCache,
    rhs_memo: Mutex<HashMap<RhsKey, Result<DQ>>>,
}

impl IdentityChecker {
    pub fn new(params: &BiperiodicParams) -> Result<Self> {
        Ok(IdentityChecker {
            params: params.clone(),
            binet: Binet::new(params)?,
            cache: SequenceCache::new(params.clone()),
            rhs_memo: Mutex::new(HashMap::new()),
        })
    }

    fn rhs(&self, key: RhsKey) -> Result<DQ> {
        if let Some(v) = self.rhs_memo.lock().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = match key {
            RhsKey::Catalan(n, r, variant) => catalan_rhs_eval(&self.binet, n, r, variant),
            RhsKey::Cassini(parity, variant) => cassini_rhs_raw(&self.binet, parity, variant)
                .and_then(|raw| collapse_dual_quat(&raw, &format!("Cassini right side ({})", variant.name()))),
        };
        self.rhs_memo.lock().expect("memo lock").insert(key, v.clone());
        v
    }

    fn catalan_rhs_memo(&self, n: i64, r: i64, variant: RhsVariant) -> Result<DQ> {
        self.rhs(RhsKey::Catalan(n.rem_euclid(2), r, variant))
    }

    /// Ensures every `Q̃ₘ` with `lo <= m <= hi` can be read.
    pub fn prepare(&mut self, lo: i64, hi: i64) {
        self.cache.fill_dual_quat_windows(lo, hi);
    }

    pub fn params(&self) -> &BiperiodicParams {
        &self.params
    }

    pub fn catalan_lhs(&self, n: i64, r: i64) -> Result<DQ> {
        check_catalan_indices(n, r)?;
        self.window_check(n - r, n + r)?;
        Ok(lhs_from_cache(&self.cache, n, r))
    }

    fn window_check(&self, lo: i64, hi: i64) -> Result<()> {
        let (clo, chi) = self.cache.range();
        if lo < clo || hi + 4 > chi {
            return Err(Error::Precondition(format!("indices {lo}..={hi} not prepared")));
        }
        Ok(())
    }

    pub fn catalan(&self, n: i64, r: i64, mode: Mode) -> Result<IdentityCheck> {
        check_r_parity(r, mode)?;
        let lhs = self.catalan_lhs(n, r)?;
        let variants = [RhsVariant::UniformPower, RhsVariant::Symmetrized]
            .into_iter()
            .map(|v| VariantOutcome {
                variant: v.name(),
                status: Status::of(self.catalan_rhs_memo(n, r, v).is_ok_and(|rhs| rhs == lhs)),
            })
            .collect();
        let rhs = self.catalan_rhs_memo(n, r, RhsVariant::Printed);
        IdentityCheck::adjudicate(IdentityKind::Catalan, &self.params, n, r, lhs, rhs, is_even(r), variants)
    }

    pub fn cassini(&self, m: i64, parity: Parity) -> Result<IdentityCheck> {
        let (n, r) = cassini_indices(m, parity);
        self.window_check(n - r, n + r)?;
        let lhs = lhs_from_cache(&self.cache, n, r);
        let eval = |v| self.rhs(RhsKey::Cassini(parity, v));
        let mut variants: Vec<VariantOutcome> = [RhsVariant::UniformPower, RhsVariant::Symmetrized]
            .into_iter()
            .map(|v| VariantOutcome { variant: v.name(), status: Status::of(eval(v).is_ok_and(|rhs| rhs == lhs)) })
            .collect();
        // Catalan's printed form at r = 2, re-derived rather than trusted
        variants.push(VariantOutcome {
            variant: "catalan-r2",
            status: Status::of(self.catalan_rhs_memo(n, r, RhsVariant::Printed).is_ok_and(|rhs| rhs == lhs)),
        });
        let kind = match parity {
            Parity::Odd => IdentityKind::CassiniOdd,
            Parity::Even => IdentityKind::CassiniEven,
        };
        IdentityCheck::adjudicate(kind, &self.params, n, r, lhs, eval(RhsVariant::Printed), true, variants)
    }

    /// `Q̃ₙ₋ᵣQ̃ₙ₊ᵣ − Q̃ₙ²` without the `n ≥ r` precondition, for the
    /// Cassini/Catalan reduction check.
    fn lhs_any(&self, n: i64, r: i64) -> DQ {
        lhs_from_cache(&self.cache, n, r)
    }
}

/// One Cassini case from scratch.
pub fn cassini(params: &BiperiodicParams, m: i64, parity: Parity) -> Result<IdentityCheck> {
    let mut checker = IdentityChecker::new(params)?;
    let (n, r) = cassini_indices(m, parity);
    checker.prepare(n - r, n + r);
    checker.cassini(m, parity)
}

/// Grid of indices for a report.
#[derive(Clone, Debug, PartialEq)]
pub enum Grid {
    /// `r` over the given values, `n` over `r..=n_max`.
    Catalan { r_values: Vec<i64>, n_max: i64, mode: Mode },
    /// `m` over `m_min..=m_max`.
    Cassini { parity: Parity, m_min: i64, m_max: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyCheck {
    pub check: String,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Mixed,
}

impl Verdict {
    /// Confirmed iff every status matches (vacuously for no cases); refuted
    /// iff there is at least one case and none match.
    pub fn from_statuses(statuses: impl IntoIterator<Item = Status>) -> Self {
        let (mut matched, mut total) = (0usize, 0usize);
        for s in statuses {
            total += 1;
            matched += usize::from(s == Status::Match);
        }
        if matched == total {
            Verdict::Confirmed
        } else if matched == 0 {
            Verdict::Refuted
        } else {
            Verdict::Mixed
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Mixed => "mixed",
        }
    }
}

/// Identity checks for one parameter set over one grid.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub params: BiperiodicParams,
    pub grid: Grid,
    pub cases: Vec<IdentityCheck>,
    pub consistency: Vec<ConsistencyCheck>,
}

impl IdentityReport {
    pub fn matched(&self) -> usize {
        self.cases.iter().filter(|c| c.status == Status::Match).count()
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_statuses(self.cases.iter().map(|c| c.status))
    }

    pub fn consistent(&self) -> bool {
        self.consistency.iter().all(|c| c.holds)
    }
}

fn grid_window(grid: &Grid) -> Option<(i64, i64)> {
    match grid {
        Grid::Catalan { r_values, n_max, .. } => {
            let rmax = r_values.iter().copied().filter(|&r| r <= *n_max).max()?;
            Some((0, n_max + rmax))
        }
        Grid::Cassini { parity, m_min, m_max } => {
            if m_min > m_max {
                return None;
            }
            let (lo, _) = cassini_indices(*m_min, *parity);
            let (hi, _) = cassini_indices(*m_max, *parity);
            Some(((lo - 2).min(0), hi + 2))
        }
    }
}

/// Evaluates every case of `grid` for one parameter set. Cases are ordered
/// by `(r, n)` for Catalan and by `m` for Cassini regardless of how the
/// evaluation was scheduled.
pub fn run_identity(params: &BiperiodicParams, grid: &Grid) -> Result<IdentityReport> {
    let mut checker = IdentityChecker::new(params)?;
    if let Some((lo, hi)) = grid_window(grid) {
        checker.prepare(lo, hi);
    }
    let checker = &checker;
    let (kind, cases, consistency) = match grid {
        Grid::Catalan { r_values, n_max, mode } => {
            for &r in r_values {
                check_r_parity(r, *mode)?;
                if r < 0 {
                    return Err(Error::Precondition(format!("r must be nonnegative, got {r}")));
                }
            }
            let idx: Vec<(i64, i64)> = r_values.iter().flat_map(|&r| (r..=*n_max).map(move |n| (n, r))).collect();
            let cases = idx
                .par_iter()
                .map(|&(n, r)| checker.catalan(n, r, *mode))
                .collect::<Result<Vec<_>>>()?;
            let r0: Vec<&IdentityCheck> = cases.iter().filter(|c| c.r == 0).collect();
            let consistency = vec![
                ConsistencyCheck {
                    check: "catalan lhs vanishes at r = 0".into(),
                    holds: r0.iter().all(|c| c.lhs.is_zero()),
                },
                ConsistencyCheck {
                    check: "catalan rhs vanishes at r = 0".into(),
                    holds: r0.iter().all(|c| c.rhs.as_ref().is_some_and(Zero::is_zero)),
                },
            ];
            (IdentityKind::Catalan, cases, consistency)
        }
        Grid::Cassini { parity, m_min, m_max } => {
            let cases =
                (*m_min..=*m_max).into_par_iter().map(|m| checker.cassini(m, *parity)).collect::<Result<Vec<_>>>()?;
            let reduction = cases
                .iter()
                .filter(|c| c.n >= c.r)
                .all(|c| checker.catalan_lhs(c.n, c.r).is_ok_and(|l| l == c.lhs) && checker.lhs_any(c.n, c.r) == c.lhs);
            let kind = match parity {
                Parity::Odd => IdentityKind::CassiniOdd,
                Parity::Even => IdentityKind::CassiniEven,
            };
            let consistency = vec![ConsistencyCheck {
                check: format!("{} lhs equals catalan lhs at r = 2", kind.name()),
                holds: reduction,
            }];
            (kind, cases, consistency)
        }
    };
    Ok(IdentityReport { kind, params: params.clone(), grid: grid.clone(), cases, consistency })
}

/// Runs one grid over a whole parameter matrix, in matrix order.
pub fn run_report(matrix: &[BiperiodicParams], grid: &Grid) -> Result<Vec<IdentityReport>> {
    matrix.iter().map(|p| run_identity(p, grid)).collect()
}
