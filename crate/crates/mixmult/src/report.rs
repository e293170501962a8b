//! Verification reports: structured pass/fail/not-applicable outcomes of
//! identity checks, with both sides echoed, renderable as plain text or
//! JSON.

use std::time::Instant;

use serde_json::{json, Value};

use crate::hilbert::MixedMultiplicitySet;
use crate::ideal::MonomialIdeal;
use crate::module::MonomialModule;

/// Verdict of one check. `NotApplicable` records instances outside a
/// theorem's hypotheses (e.g. rank zero); it does not fail a report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl CheckStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail(_))
    }

    pub fn word(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail(_) => "FAIL",
            CheckStatus::NotApplicable(_) => "N/A",
        }
    }
}

/// One executed check: what was compared, what came out, how long it took.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    /// Check family, e.g. `thm3.4`.
    pub kind: String,
    /// Human-readable description of the instance.
    pub label: String,
    /// Inputs echoed in serialized form.
    pub inputs: Value,
    /// Computed left-hand side (Null when unavailable).
    pub left: Value,
    /// Computed right-hand side (Null when unavailable).
    pub right: Value,
    pub status: CheckStatus,
    pub elapsed_ms: u128,
}

impl CheckOutcome {
    pub fn finish(
        kind: &str,
        label: String,
        inputs: Value,
        left: Value,
        right: Value,
        status: CheckStatus,
        started: Instant,
    ) -> CheckOutcome {
        CheckOutcome {
            kind: kind.to_string(),
            label,
            inputs,
            left,
            right,
            status,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }

    pub fn render_text(&self) -> String {
        let note = match &self.status {
            CheckStatus::Pass => String::new(),
            CheckStatus::Fail(why) | CheckStatus::NotApplicable(why) => format!(" ({why})"),
        };
        let sides = if self.left.is_null() && self.right.is_null() {
            String::new()
        } else {
            format!(": left = {}, right = {}", self.left, self.right)
        };
        format!("[{:4}] {} {}{}{}", self.status.word(), self.kind, self.label, sides, note)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.stable_json();
        v["elapsed_ms"] = json!(self.elapsed_ms);
        v
    }

    /// JSON without timing, for byte-identical comparisons across runs.
    pub fn stable_json(&self) -> Value {
        let (status, note) = match &self.status {
            CheckStatus::Pass => ("pass", Value::Null),
            CheckStatus::Fail(why) => ("fail", json!(why)),
            CheckStatus::NotApplicable(why) => ("not-applicable", json!(why)),
        };
        json!({
            "kind": self.kind,
            "label": self.label,
            "inputs": self.inputs,
            "left": self.left,
            "right": self.right,
            "status": status,
            "note": note,
        })
    }
}

/// An ordered collection of check outcomes.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn new(checks: Vec<CheckOutcome>) -> VerificationReport {
        VerificationReport { checks }
    }

    pub fn single(outcome: CheckOutcome) -> VerificationReport {
        VerificationReport { checks: vec![outcome] }
    }

    /// True when no check failed; not-applicable outcomes do not fail.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.status.is_fail())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            out.push_str(&check.render_text());
            out.push('\n');
        }
        let passes = self.checks.iter().filter(|c| c.status.is_pass()).count();
        let fails = self.checks.iter().filter(|c| c.status.is_fail()).count();
        let skips = self.checks.len() - passes - fails;
        out.push_str(&format!(
            "{} checks: {passes} passed, {fails} failed, {skips} not applicable\n",
            self.checks.len()
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }

    /// JSON without timing, for determinism tests.
    pub fn stable_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| c.stable_json()).collect::<Vec<_>>(),
        })
    }
}

/// Serialize an ideal as an array of exponent arrays.
pub fn ideal_value(ideal: &MonomialIdeal) -> Value {
    json!(ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>())
}

/// Serialize a module as its shifts plus `[generator, exponents]` relations.
pub fn module_value(module: &MonomialModule) -> Value {
    let shifts: Vec<Vec<u32>> =
        module.shifts().iter().map(|s| s.entries().to_vec()).collect();
    let mut relations: Vec<Value> = Vec::new();
    for (i, k) in module.coordinate_ideals().iter().enumerate() {
        for g in k.generators() {
            relations.push(json!([i, g.exponents().to_vec()]));
        }
    }
    json!({ "shifts": shifts, "relations": relations })
}

/// Serialize a multiplicity set as `{degree, values: [{type, value}]}`.
pub fn multiplicity_set_value(set: &MixedMultiplicitySet) -> Value {
    json!({
        "degree": set.total_degree(),
        "values": set
            .iter()
            .map(|(k, v)| json!({ "type": k, "value": v }))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{GradedRing, Monomial};

    #[test]
    fn report_passes_unless_a_check_fails() {
        let start = Instant::now();
        let pass = CheckOutcome::finish(
            "thm3.4",
            "demo".into(),
            Value::Null,
            json!(3),
            json!(3),
            CheckStatus::Pass,
            start,
        );
        let na = CheckOutcome::finish(
            "thm3.4",
            "torsion".into(),
            Value::Null,
            Value::Null,
            Value::Null,
            CheckStatus::NotApplicable("rank zero".into()),
            start,
        );
        let report = VerificationReport::new(vec![pass.clone(), na]);
        assert!(report.passed());

        let fail = CheckOutcome::finish(
            "cor3.8",
            "demo".into(),
            Value::Null,
            json!(3),
            json!(4),
            CheckStatus::Fail("3 != 4".into()),
            start,
        );
        let report = VerificationReport::new(vec![pass, fail]);
        assert!(!report.passed());
        let text = report.render_text();
        assert!(text.contains("PASS"));
        assert!(text.contains("FAIL"));
        assert!(text.contains("1 failed"));
    }

    #[test]
    fn stable_json_strips_timing() {
        let outcome = CheckOutcome::finish(
            "rank",
            "demo".into(),
            Value::Null,
            json!(1),
            json!(1),
            CheckStatus::Pass,
            Instant::now(),
        );
        assert!(outcome.to_json().get("elapsed_ms").is_some());
        assert!(outcome.stable_json().get("elapsed_ms").is_none());
    }

    #[test]
    fn input_serializers_round_trip_shapes() {
        let ring = GradedRing::standard(2);
        let ideal =
            MonomialIdeal::new(&ring, vec![Monomial::new(vec![2, 0]), Monomial::new(vec![0, 3])]);
        assert_eq!(ideal_value(&ideal), json!([[2, 0], [0, 3]]));

        let module = crate::module::MonomialModule::quotient(
            &ring,
            MonomialIdeal::new(&ring, vec![Monomial::new(vec![1, 0])]),
        )
        .unwrap();
        let v = module_value(&module);
        assert_eq!(v["shifts"], json!([[0]]));
        assert_eq!(v["relations"], json!([[0, [1, 0]]]));
    }
}
