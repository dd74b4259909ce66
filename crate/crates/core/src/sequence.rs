//! Bi-periodic Fibonacci numbers and the dual / quaternion / dual-quaternion
//! sequences built from them.
//!
//! `F₀ = 0`, `F₁ = 1`, and `Fₙ = a·Fₙ₋₁ + Fₙ₋₂` for even `n`,
//! `Fₙ = b·Fₙ₋₁ + Fₙ₋₂` for odd `n`. The same recurrence, solved for
//! `Fₙ₋₂`, extends the sequence to negative indices and agrees with
//! `F₋ₙ = (−1)ⁿ⁻¹Fₙ`. Parity always means `n mod 2 ∈ {0, 1}`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{rat, render_rational, Discriminant, DualScalar, Rational};
use crate::error::{Error, Result};
use crate::quaternion::{DualQuaternion, Quaternion};

/// `n mod 2`, in `{0, 1}` for every integer.
pub fn xi(n: i64) -> i64 {
    n.rem_euclid(2)
}

pub fn is_even(n: i64) -> bool {
    xi(n) == 0
}

#[derive(Clone, Debug, PartialEq)]
pub struct BiperiodicParams {
    a: Rational,
    b: Rational,
    disc: Arc<Discriminant>,
}

impl BiperiodicParams {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroParameter { name: "a" });
        }
        if b.is_zero() {
            return Err(Error::ZeroParameter { name: "b" });
        }
        let ab = &a * &b;
        let disc = Arc::new(Discriminant::new(&ab * &ab + rat(4) * &ab));
        Ok(BiperiodicParams { a, b, disc })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(rat(a), rat(b))
    }

    pub fn fibonacci() -> Self {
        Self::from_ints(1, 1).expect("nonzero")
    }

    pub fn pell() -> Self {
        Self::from_ints(2, 2).expect("nonzero")
    }

    pub fn k_fibonacci(k: Rational) -> Result<Self> {
        Self::new(k.clone(), k)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn ab(&self) -> Rational {
        &self.a * &self.b
    }

    /// `D = a²b² + 4ab`.
    pub fn discriminant(&self) -> &Arc<Discriminant> {
        &self.disc
    }

    /// Multiplier applied at step `n`: `a` for even `n`, `b` for odd `n`.
    pub fn step_coefficient(&self, n: i64) -> &Rational {
        if is_even(n) {
            &self.a
        } else {
            &self.b
        }
    }

    /// Binet evaluation needs two distinct roots and nonzero `ab`.
    pub fn check_nondegenerate(&self) -> Result<()> {
        let ab = self.ab();
        let reason = if ab.is_zero() {
            "ab = 0"
        } else if self.disc.value().is_zero() {
            "ab + 4 = 0, so D = a²b² + 4ab = 0 and the characteristic roots coincide"
        } else {
            return Ok(());
        };
        Err(Error::DegenerateParameters {
            a: render_rational(&self.a),
            b: render_rational(&self.b),
            reason: reason.to_string(),
        })
    }
}

impl std::fmt::Display for BiperiodicParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "a={}, b={}", render_rational(&self.a), render_rational(&self.b))
    }
}

/// Memoized `Fₙ` for one parameter set, grown on demand in both directions.
///
/// Filling takes `&mut self`; once a range is filled the read methods take
/// `&self` and can be shared across threads.
#[derive(Clone, Debug)]
pub struct SequenceCache {
    params: BiperiodicParams,
    // forward[k] = F_k
    forward: Vec<Rational>,
    // backward[k] = F_{-(k+1)}
    backward: Vec<Rational>,
}

impl SequenceCache {
    pub fn new(params: BiperiodicParams) -> Self {
        SequenceCache { params, forward: vec![Rational::zero(), Rational::one()], backward: Vec::new() }
    }

    pub fn params(&self) -> &BiperiodicParams {
        &self.params
    }

    /// Lowest and highest cached index.
    pub fn range(&self) -> (i64, i64) {
        (-(self.backward.len() as i64), self.forward.len() as i64 - 1)
    }

    /// Extends the cache so that every index in `lo..=hi` is available.
    pub fn fill(&mut self, lo: i64, hi: i64) {
        while (self.forward.len() as i64) <= hi {
            let n = self.forward.len() as i64;
            let next = self.params.step_coefficient(n) * &self.forward[n as usize - 1]
                + &self.forward[n as usize - 2];
            self.forward.push(next);
        }
        while -(self.backward.len() as i64) > lo {
            let m = -(self.backward.len() as i64) - 1;
            // F_m = F_{m+2} − c(m+2)·F_{m+1}
            let next = self.stored(m + 2) - self.params.step_coefficient(m + 2) * self.stored(m + 1);
            debug_assert_eq!(next, sign_rule(&self.forward_or_compute(-m), -m));
            self.backward.push(next);
        }
    }

    fn forward_or_compute(&mut self, n: i64) -> Rational {
        self.fill(0, n);
        self.forward[n as usize].clone()
    }

    fn stored(&self, n: i64) -> &Rational {
        if n >= 0 {
            &self.forward[n as usize]
        } else {
            &self.backward[(-n - 1) as usize]
        }
    }

    pub fn get(&self, n: i64) -> Option<&Rational> {
        let (lo, hi) = self.range();
        (lo..=hi).contains(&n).then(|| self.stored(n))
    }

    pub fn fib(&mut self, n: i64) -> Rational {
        self.fill(n.min(0), n.max(1));
        self.stored(n).clone()
    }

    pub fn quat(&self, n: i64) -> Option<Quaternion<Rational>> {
        Some(Quaternion::new(
            self.get(n)?.clone(),
            self.get(n + 1)?.clone(),
            self.get(n + 2)?.clone(),
            self.get(n + 3)?.clone(),
        ))
    }

    pub fn dual_quat(&self, n: i64) -> Option<DualQuaternion<Rational>> {
        Some(DualQuaternion::new(self.quat(n)?, self.quat(n + 1)?))
    }

    /// Fills the window needed by `dual_quat(lo..=hi)` and returns `Q̃ₙ`.
    pub fn dual_fib_quat(&mut self, n: i64) -> DualQuaternion<Rational> {
        self.fill(n.min(0), (n + 4).max(1));
        self.dual_quat(n).expect("window filled")
    }

    /// Fills everything `dual_quat(n)` needs for `n` in `lo..=hi`.
    pub fn fill_dual_quat_windows(&mut self, lo: i64, hi: i64) {
        self.fill(lo.min(0), (hi + 4).max(1));
    }
}

fn sign_rule(f_n: &Rational, n: i64) -> Rational {
    // F₋ₙ = (−1)ⁿ⁻¹ Fₙ
    if is_even(n - 1) {
        f_n.clone()
    } else {
        -f_n.clone()
    }
}

/// `Fₙ` for any integer `n`.
pub fn fib(params: &BiperiodicParams, n: i64) -> Rational {
    if n < 0 {
        return sign_rule(&fib(params, -n), -n);
    }
    let (mut prev, mut cur) = (Rational::zero(), Rational::one());
    if n == 0 {
        return prev;
    }
    for m in 2..=n {
        let next = params.step_coefficient(m) * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F̃ₙ = Fₙ + εFₙ₊₁`.
pub fn dual_fib(params: &BiperiodicParams, n: i64) -> DualScalar<Rational> {
    DualScalar::new(fib(params, n), fib(params, n + 1))
}

/// `Qₙ = Fₙ + Fₙ₊₁i + Fₙ₊₂j + Fₙ₊₃k`; windows may straddle zero.
pub fn fib_quat(params: &BiperiodicParams, n: i64) -> Quaternion<Rational> {
    let mut cache = SequenceCache::new(params.clone());
    cache.fill(n.min(0), (n + 3).max(1));
    cache.quat(n).expect("window filled")
}

/// `Q̃ₙ = Qₙ + εQₙ₊₁`.
pub fn dual_fib_quat(params: &BiperiodicParams, n: i64) -> DualQuaternion<Rational> {
    SequenceCache::new(params.clone()).dual_fib_quat(n)
}
