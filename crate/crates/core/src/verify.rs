//! Suite runners: each compares the recurrence against one family of closed
//! forms for a single parameter set and produces a [`CheckReport`].

use crate::arith::{rat, Rational};
use crate::binet::{root_relations, Binet};
use crate::error::{Error, Result};
use crate::genfunc::{build_r, build_s, gf_dual_quat, gf_dual_quat_reduced, gf_scalar, proof_step_check};
use crate::identities::{run_identity, Grid, Mode, Parity};
use crate::report::{Case, CheckReport, Consistency, Value};
use crate::sequence::{fib, BiperiodicParams, SequenceCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Binet,
    Gf,
    Catalan,
    Cassini,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Binet, Suite::Gf, Suite::Catalan, Suite::Cassini];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Binet => "binet",
            Suite::Gf => "gf",
            Suite::Catalan => "catalan",
            Suite::Cassini => "cassini",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Highest index for Binet and identity checks.
    pub to: i64,
    /// Truncation order for the dual-quaternion generating function.
    pub order: i64,
    /// Truncation order for the scalar generating function.
    pub scalar_order: i64,
    /// Largest `r` in the Catalan grid.
    pub rmax: i64,
    pub mode: Mode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            to: 20,
            order: crate::genfunc::DEFAULT_QUAT_ORDER,
            scalar_order: crate::genfunc::DEFAULT_SCALAR_ORDER,
            rmax: 4,
            mode: Mode::Strict,
        }
    }
}

/// The parameter sets used when none are given: the three named
/// specializations plus three `a ≠ b` sets.
pub fn default_matrix() -> Vec<BiperiodicParams> {
    [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (5, 7)]
        .into_iter()
        .map(|(a, b)| BiperiodicParams::from_ints(a, b).expect("nonzero"))
        .collect()
}

pub fn run_suite(params: &BiperiodicParams, suite: Suite, opts: &VerifyOptions) -> Result<CheckReport> {
    if opts.to < 0 || opts.order < 0 || opts.scalar_order < 0 || opts.rmax < 0 {
        return Err(Error::Precondition("to, order, scalar order and rmax must be nonnegative".into()));
    }
    match suite {
        Suite::Binet => binet_suite(params, opts.to),
        Suite::Gf => gf_suite(params, opts.order, opts.scalar_order),
        Suite::Catalan => {
            if opts.mode == Mode::Strict && opts.rmax % 2 != 0 {
                return Err(Error::Precondition(format!("rmax must be even in strict mode, got {}", opts.rmax)));
            }
            let step = if opts.mode == Mode::Strict { 2 } else { 1 };
            let r_values = (0..=opts.rmax).step_by(step).collect();
            let grid = Grid::Catalan { r_values, n_max: opts.to, mode: opts.mode };
            let report = run_identity(params, &grid)?;
            Ok(CheckReport::from_identity_reports(params, suite.name(), &[report]))
        }
        Suite::Cassini => {
            let m_max = opts.to / 2;
            let reports = [Parity::Odd, Parity::Even]
                .into_iter()
                .map(|parity| run_identity(params, &Grid::Cassini { parity, m_min: 0, m_max }))
                .collect::<Result<Vec<_>>>()?;
            Ok(CheckReport::from_identity_reports(params, suite.name(), &reports))
        }
    }
}

fn binet_suite(params: &BiperiodicParams, to: i64) -> Result<CheckReport> {
    let binet = Binet::new(params)?;
    let mut cache = SequenceCache::new(params.clone());
    cache.fill(-to.max(1), to + 5);
    let mut cases = Vec::new();
    for n in 0..=to {
        let lhs = Value::Scalar(cache.get(n).expect("filled").clone());
        cases.push(match binet.scalar(n) {
            Ok(v) => Case::compare("binet-scalar", n, lhs, Value::Scalar(v)),
            Err(e @ Error::IrrationalResidue { .. }) => Case::failed("binet-scalar", n, lhs, e.to_string()),
            Err(e) => return Err(e),
        });
    }
    for n in 0..=to {
        let lhs = Value::DualQuat(cache.dual_quat(n).expect("filled"));
        cases.push(match binet.dual_quat(n) {
            Ok(v) => Case::compare("binet-dualquat", n, lhs, Value::DualQuat(v)),
            Err(e @ Error::IrrationalResidue { .. }) => Case::failed("binet-dualquat", n, lhs, e.to_string()),
            Err(e) => return Err(e),
        });
    }

    let sign = |n: i64| if (n - 1) % 2 == 0 { rat(1) } else { rat(-1) };
    let sign_rule = (1..=to.max(1)).all(|n| {
        let direct = fib(params, -n);
        direct == sign(n) * fib(params, n) && cache.get(-n) == Some(&direct)
    });
    let order4 = (4..=to + 4).all(|n| {
        let f = |m: i64| cache.get(m).expect("filled").clone();
        f(n) == (params.ab() + rat(2)) * f(n - 2) - f(n - 4)
    });
    let consistency = vec![
        Consistency { check: "sign rule F(-n) = (-1)^(n-1) F(n) agrees with the backward recurrence".into(), holds: sign_rule, required: true },
        Consistency { check: "F(n) = (ab+2) F(n-2) - F(n-4)".into(), holds: order4, required: true },
    ];
    let notes = root_relations(params)?
        .into_iter()
        .map(|r| format!("{}: {}", r.relation, if r.holds { "holds" } else { "does not hold" }))
        .collect();
    Ok(CheckReport::new(params, Suite::Binet.name(), cases, consistency, notes))
}

fn gf_suite(params: &BiperiodicParams, order: i64, scalar_order: i64) -> Result<CheckReport> {
    let mut cache = SequenceCache::new(params.clone());
    cache.fill(0, order.max(scalar_order) + 5);
    let mut cases = Vec::new();

    let f = gf_scalar(params, scalar_order)?;
    for n in 0..=scalar_order {
        let lhs: Rational = cache.get(n).expect("filled").clone();
        let rhs = f.coeff(n).expect("within order");
        cases.push(Case::compare("gf-scalar", n, Value::Scalar(lhs), Value::Scalar(rhs)));
    }

    let inner = order.max(2);
    let cancel = build_r(params, inner).and(build_s(params, inner));
    let mut consistency = vec![Consistency {
        check: "negative-exponent terms of R(t) and S(t) cancel".into(),
        holds: cancel.is_ok(),
        required: true,
    }];
    let mut notes = Vec::new();
    match gf_dual_quat(params, order) {
        Ok(g) => {
            for n in 0..=order {
                let lhs = cache.dual_quat(n).expect("filled");
                let rhs = g.coeff(n).expect("within order");
                cases.push(Case::compare("gf-dualquat", n, Value::DualQuat(lhs), Value::DualQuat(rhs)));
            }
        }
        Err(e @ Error::NegativeExponent { .. }) => notes.push(e.to_string()),
        Err(e) => return Err(e),
    }
    if params.a() == params.b() {
        let g = gf_dual_quat_reduced(params, order)?;
        for n in 0..=order {
            let lhs = cache.dual_quat(n).expect("filled");
            let rhs = g.coeff(n).expect("within order");
            cases.push(Case::compare("gf-reduced", n, Value::DualQuat(lhs), Value::DualQuat(rhs)));
        }
    }
    let steps = proof_step_check(params, inner)?;
    consistency.push(Consistency {
        check: "intermediate series identities for (a-b)R(t) and (a-b)S(t)".into(),
        holds: steps.holds(),
        required: false,
    });
    Ok(CheckReport::new(params, Suite::Gf.name(), cases, consistency, notes))
}
