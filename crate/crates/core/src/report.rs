//! Serializable check reports.
//!
//! Exact values are rendered losslessly: rationals as `"p/q"` strings (just
//! `"p"` for integers), quaternions as 4-arrays in `w, x, y, z` order and
//! dual quaternions as `{"primal": [...], "dual": [...]}`. Field order is
//! fixed, so identical runs serialize byte-identically.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::{render_rational, Rational};
use crate::identities::{IdentityCheck, IdentityReport, Status, Verdict};
use crate::quaternion::{DualQuaternion, Quaternion};
use crate::sequence::BiperiodicParams;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Rational),
    DualQuat(DualQuaternion<Rational>),
}

impl Value {
    /// The eight exact coefficients (primal then dual); a scalar occupies
    /// the first slot.
    pub fn flatten(&self) -> [String; 8] {
        match self {
            Value::Scalar(x) => {
                let mut out: [String; 8] = Default::default();
                out.fill_with(|| "0".to_string());
                out[0] = render_rational(x);
                out
            }
            Value::DualQuat(d) => d.coefficients().map(render_rational),
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Scalar(x) => f.write_str(&render_rational(x)),
            Value::DualQuat(d) => f.write_str(&render_dual_quat(d)),
        }
    }
}

/// `(w, x, y, z)` with exact components.
pub fn render_quat(q: &Quaternion<Rational>) -> String {
    let [w, x, y, z] = q.components().map(render_rational);
    format!("({w}, {x}, {y}, {z})")
}

/// `(w, x, y, z) + ε(w, x, y, z)`.
pub fn render_dual_quat(d: &DualQuaternion<Rational>) -> String {
    format!("{} + ε{}", render_quat(&d.primal), render_quat(&d.dual))
}

/// Serializes a quaternion as a 4-array of exact strings.
pub struct QuatJson<'a>(pub &'a Quaternion<Rational>);

impl Serialize for QuatJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.components().map(render_rational).serialize(s)
    }
}

/// Serializes a dual quaternion as `{primal, dual}`.
pub struct DualQuatJson<'a>(pub &'a DualQuaternion<Rational>);

impl Serialize for DualQuatJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DualQuaternion", 2)?;
        st.serialize_field("primal", &QuatJson(&self.0.primal))?;
        st.serialize_field("dual", &QuatJson(&self.0.dual))?;
        st.end()
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Scalar(x) => s.serialize_str(&render_rational(x)),
            Value::DualQuat(d) => DualQuatJson(d).serialize(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsView {
    pub a: String,
    pub b: String,
}

impl From<&BiperiodicParams> for ParamsView {
    fn from(p: &BiperiodicParams) -> Self {
        ParamsView { a: render_rational(p.a()), b: render_rational(p.b()) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VariantView {
    pub variant: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub identity: String,
    pub n: i64,
    pub r: Option<i64>,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Option<Value>,
    pub delta: Option<Value>,
    pub in_hypothesis: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    /// A recurrence-versus-closed-form comparison.
    pub fn compare(identity: &str, n: i64, lhs: Value, rhs: Value) -> Self {
        let delta = match (&lhs, &rhs) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x - y),
            (Value::DualQuat(x), Value::DualQuat(y)) => Value::DualQuat(x.clone() - y.clone()),
            _ => panic!("mixed value kinds in {identity} case"),
        };
        let zero = match &delta {
            Value::Scalar(x) => num_traits::Zero::is_zero(x),
            Value::DualQuat(x) => num_traits::Zero::is_zero(x),
        };
        Case {
            identity: identity.to_string(),
            n,
            r: None,
            status: Status::of(zero),
            lhs,
            rhs: Some(rhs),
            delta: Some(delta),
            in_hypothesis: true,
            variants: Vec::new(),
            note: None,
        }
    }

    /// A closed form that could not be evaluated.
    pub fn failed(identity: &str, n: i64, lhs: Value, note: String) -> Self {
        Case {
            identity: identity.to_string(),
            n,
            r: None,
            status: Status::Mismatch,
            lhs,
            rhs: None,
            delta: None,
            in_hypothesis: true,
            variants: Vec::new(),
            note: Some(note),
        }
    }
}

impl From<&IdentityCheck> for Case {
    fn from(c: &IdentityCheck) -> Self {
        Case {
            identity: c.kind.name().to_string(),
            n: c.n,
            r: Some(c.r),
            status: c.status,
            lhs: Value::DualQuat(c.lhs.clone()),
            rhs: c.rhs.clone().map(Value::DualQuat),
            delta: c.delta.clone().map(Value::DualQuat),
            in_hypothesis: c.in_hypothesis,
            variants: c.variants.iter().map(|v| VariantView { variant: v.variant.to_string(), status: v.status }).collect(),
            note: c.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consistency {
    pub check: String,
    pub holds: bool,
    /// Required checks gate the report's pass/fail; the others are findings.
    pub required: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub version: &'static str,
    pub params: ParamsView,
    pub suite: String,
    pub cases: Vec<Case>,
    pub verdict: Verdict,
    pub summary: Summary,
    pub consistency: Vec<Consistency>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(params: &BiperiodicParams, suite: &str, cases: Vec<Case>, consistency: Vec<Consistency>, notes: Vec<String>) -> Self {
        let matched = cases.iter().filter(|c| c.status == Status::Match).count();
        let summary = Summary { total: cases.len(), matched, mismatched: cases.len() - matched };
        CheckReport {
            version: REPORT_VERSION,
            params: params.into(),
            suite: suite.to_string(),
            verdict: Verdict::from_statuses(cases.iter().map(|c| c.status)),
            cases,
            summary,
            consistency,
            notes,
        }
    }

    /// Confirmed verdict and every required consistency check holds.
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Confirmed && self.consistency.iter().filter(|c| c.required).all(|c| c.holds)
    }

    /// Merges identity reports for the same parameter set into one suite
    /// report, keeping their order.
    pub fn from_identity_reports(params: &BiperiodicParams, suite: &str, reports: &[IdentityReport]) -> Self {
        let cases = reports.iter().flat_map(|r| r.cases.iter().map(Case::from)).collect();
        let consistency = reports
            .iter()
            .flat_map(|r| r.consistency.iter().map(|c| Consistency { check: c.check.clone(), holds: c.holds, required: true }))
            .collect();
        CheckReport::new(params, suite, cases, consistency, Vec::new())
    }
}
