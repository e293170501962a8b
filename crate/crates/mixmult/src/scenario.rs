//! Scenario files: one JSON document declaring a graded ring, named
//! ideals, modules and extensions, and a batch of checks to run against
//! them. Parsing is strict (versioned schema, every reference declared),
//! execution is parallel, and the resulting report is deterministic.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::extension::{MonomialExtension, MonomialMapComponent};
use crate::hilbert::{graded_mixed_multiplicities, FitControl};
use crate::ideal::MonomialIdeal;
use crate::mixed::IdealSystem;
use crate::module::MonomialModule;
use crate::oracle::{brute_force_length, raw_multipower, raw_product};
use crate::report::{
    ideal_value, module_value, multiplicity_set_value, CheckOutcome, CheckStatus,
    VerificationReport,
};
use crate::ring::{GradedRing, Monomial, Multidegree};
use crate::verify::check_thm_3_1;

/// The one schema version this build reads and writes.
pub const SCHEMA_VERSION: u64 = 1;

/// Problems with the scenario itself — the file, its declarations, or its
/// references — as opposed to a check that ran and failed.
#[derive(thiserror::Error, Debug)]
pub enum ScenarioError {
    #[error("cannot read scenario: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unsupported schema version {0} (this build reads schema {SCHEMA_VERSION})")]
    Schema(u64),
    #[error("undeclared {kind} `{name}`")]
    Undeclared { kind: &'static str, name: String },
    #[error("invalid scenario: {0}")]
    Semantic(String),
}

impl From<Error> for ScenarioError {
    fn from(e: Error) -> Self {
        ScenarioError::Semantic(e.to_string())
    }
}

/// Ring declaration: `degrees[i]` is the multidegree of variable `i + 1`.
/// When omitted, a singly graded ring gets the standard grading.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct RingDecl {
    pub vars: usize,
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<Vec<u32>>>,
}

/// Module declaration: one shift per free generator, plus relations
/// `[generator index, exponent array]` (0-based indices).
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ModuleDecl {
    pub shifts: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<(usize, Vec<u32>)>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ComponentDecl {
    pub vars: usize,
    pub images: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ExtensionDecl {
    pub components: Vec<ComponentDecl>,
}

/// Reference to an ideal: the name of a declaration, or an inline array
/// of exponent arrays.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum IdealRef {
    Name(String),
    Inline(Vec<Vec<u32>>),
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum ModuleRef {
    Name(String),
    Inline(ModuleDecl),
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum ExtensionRef {
    Name(String),
    Inline(ExtensionDecl),
}

/// An expected multiplicity value at one type, for `mixed` and
/// `ideal-mixed` checks. Listed entries are compared; unlisted types are
/// reported but unconstrained.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ExpectEntry {
    #[serde(rename = "type")]
    pub key: Vec<u32>,
    pub value: u64,
}

/// One requested check, dispatched on `kind`.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(tag = "kind")]
pub enum CheckDecl {
    #[serde(rename = "thm3.1")]
    Thm31 { module: ModuleRef },
    #[serde(rename = "thm3.4")]
    Thm34 {
        #[serde(rename = "J")]
        j: IdealRef,
        ideals: Vec<IdealRef>,
        module: ModuleRef,
    },
    #[serde(rename = "prop2.1")]
    Prop21 {
        #[serde(rename = "J")]
        j: IdealRef,
        ideals: Vec<IdealRef>,
        module: ModuleRef,
        index: usize,
    },
    #[serde(rename = "cor3.8")]
    Cor38 {
        #[serde(rename = "J")]
        j: IdealRef,
        ideals: Vec<IdealRef>,
        module: ModuleRef,
    },
    #[serde(rename = "thm3.9")]
    Thm39 {
        #[serde(rename = "J")]
        j: IdealRef,
        ideals: Vec<IdealRef>,
        extension: ExtensionRef,
    },
    #[serde(rename = "mixed")]
    Mixed {
        module: ModuleRef,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Vec<ExpectEntry>>,
    },
    #[serde(rename = "ideal-mixed")]
    IdealMixed {
        #[serde(rename = "J")]
        j: IdealRef,
        ideals: Vec<IdealRef>,
        module: ModuleRef,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<Vec<ExpectEntry>>,
    },
    #[serde(rename = "rank")]
    Rank {
        module: ModuleRef,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect: Option<u64>,
    },
}

/// The parsed (but unresolved) scenario document.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct ScenarioFile {
    pub schema: u64,
    pub ring: RingDecl,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extensions: BTreeMap<String, ExtensionDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckDecl>,
}

impl ScenarioFile {
    /// Canonical JSON form; `parse` then `to_json` is idempotent.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("scenario serialization is infallible")
    }
}

/// Parse a scenario document, rejecting unknown schema versions.
pub fn parse_scenario(text: &str) -> Result<ScenarioFile, ScenarioError> {
    let file: ScenarioFile = serde_json::from_str(text).map_err(|e| ScenarioError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.schema != SCHEMA_VERSION {
        return Err(ScenarioError::Schema(file.schema));
    }
    Ok(file)
}

/// The declarations of a scenario, resolved into engine objects.
pub struct ResolvedScenario {
    ring: GradedRing,
    ideals: BTreeMap<String, MonomialIdeal>,
    modules: BTreeMap<String, MonomialModule>,
    extensions: BTreeMap<String, MonomialExtension>,
}

fn build_ring(decl: &RingDecl) -> Result<GradedRing, ScenarioError> {
    match &decl.degrees {
        Some(rows) => {
            let degrees: Vec<Multidegree> =
                rows.iter().map(|r| Multidegree::new(r.clone())).collect();
            Ok(GradedRing::new(decl.vars, decl.s, &degrees)?)
        }
        None if decl.s == 1 => {
            if decl.vars == 0 {
                return Err(ScenarioError::Semantic("the ring needs at least one variable".into()));
            }
            Ok(GradedRing::standard(decl.vars))
        }
        None => Err(ScenarioError::Semantic(
            "a multigraded ring must declare the variable degrees".into(),
        )),
    }
}

fn build_ideal(ring: &GradedRing, exps: &[Vec<u32>]) -> Result<MonomialIdeal, ScenarioError> {
    Ok(MonomialIdeal::from_exponents(ring, exps)?)
}

fn build_module(ring: &GradedRing, decl: &ModuleDecl) -> Result<MonomialModule, ScenarioError> {
    let shifts: Vec<Multidegree> =
        decl.shifts.iter().map(|s| Multidegree::new(s.clone())).collect();
    let relations: Vec<(usize, Monomial)> = decl
        .relations
        .iter()
        .map(|(i, e)| (*i, Monomial::new(e.clone())))
        .collect();
    Ok(MonomialModule::from_relations(ring, shifts, &relations)?)
}

fn build_extension(
    ring: &GradedRing,
    decl: &ExtensionDecl,
) -> Result<MonomialExtension, ScenarioError> {
    let mut components = Vec::with_capacity(decl.components.len());
    for c in &decl.components {
        if c.images.len() != c.vars || c.images.iter().any(|img| img.len() != c.vars) {
            return Err(ScenarioError::Semantic(format!(
                "component declares {} variables but its image matrix is not {0}x{0}",
                c.vars
            )));
        }
        components
            .push(MonomialMapComponent::new(c.images.iter().map(|e| Monomial::new(e.clone())).collect())?);
    }
    Ok(MonomialExtension::new(ring, components)?)
}

impl ResolvedScenario {
    pub fn resolve(file: &ScenarioFile) -> Result<ResolvedScenario, ScenarioError> {
        let ring = build_ring(&file.ring)?;
        let mut ideals = BTreeMap::new();
        for (name, exps) in &file.ideals {
            let ideal = build_ideal(&ring, exps)
                .map_err(|e| named_error(e, "ideal", name))?;
            ideals.insert(name.clone(), ideal);
        }
        let mut modules = BTreeMap::new();
        for (name, decl) in &file.modules {
            let module = build_module(&ring, decl)
                .map_err(|e| named_error(e, "module", name))?;
            modules.insert(name.clone(), module);
        }
        let mut extensions = BTreeMap::new();
        for (name, decl) in &file.extensions {
            let ext = build_extension(&ring, decl)
                .map_err(|e| named_error(e, "extension", name))?;
            extensions.insert(name.clone(), ext);
        }
        Ok(ResolvedScenario { ring, ideals, modules, extensions })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    /// Look up a declared ideal by name.
    pub fn named_ideal(&self, name: &str) -> Result<&MonomialIdeal, ScenarioError> {
        self.ideals
            .get(name)
            .ok_or_else(|| ScenarioError::Undeclared { kind: "ideal", name: name.into() })
    }

    /// Look up a declared module by name; with `None`, the unique declared
    /// module (an error if there is not exactly one).
    pub fn named_module(&self, name: Option<&str>) -> Result<&MonomialModule, ScenarioError> {
        match name {
            Some(n) => self
                .modules
                .get(n)
                .ok_or_else(|| ScenarioError::Undeclared { kind: "module", name: n.into() }),
            None => {
                if self.modules.len() == 1 {
                    Ok(self.modules.values().next().expect("just checked"))
                } else {
                    Err(ScenarioError::Semantic(format!(
                        "pass --module to pick one of the {} declared modules",
                        self.modules.len()
                    )))
                }
            }
        }
    }

    /// Assemble an ideal system from declared names; the module defaults
    /// to the ring itself (free of rank 1).
    pub fn build_system(
        &self,
        j: &str,
        ideals: &[String],
        module: Option<&str>,
    ) -> Result<IdealSystem, ScenarioError> {
        let j = self.named_ideal(j)?.clone();
        let ideals = ideals
            .iter()
            .map(|n| self.named_ideal(n).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        let module = match module {
            Some(n) => self.named_module(Some(n))?.clone(),
            None => MonomialModule::free(&self.ring, 1),
        };
        Ok(IdealSystem::new(&self.ring, j, ideals, module)?)
    }

    fn ideal(&self, r: &IdealRef) -> Result<MonomialIdeal, ScenarioError> {
        match r {
            IdealRef::Name(n) => self
                .ideals
                .get(n)
                .cloned()
                .ok_or_else(|| ScenarioError::Undeclared { kind: "ideal", name: n.clone() }),
            IdealRef::Inline(exps) => build_ideal(&self.ring, exps),
        }
    }

    fn module(&self, r: &ModuleRef) -> Result<MonomialModule, ScenarioError> {
        match r {
            ModuleRef::Name(n) => self
                .modules
                .get(n)
                .cloned()
                .ok_or_else(|| ScenarioError::Undeclared { kind: "module", name: n.clone() }),
            ModuleRef::Inline(decl) => build_module(&self.ring, decl),
        }
    }

    fn extension(&self, r: &ExtensionRef) -> Result<MonomialExtension, ScenarioError> {
        match r {
            ExtensionRef::Name(n) => self
                .extensions
                .get(n)
                .cloned()
                .ok_or_else(|| ScenarioError::Undeclared { kind: "extension", name: n.clone() }),
            ExtensionRef::Inline(decl) => build_extension(&self.ring, decl),
        }
    }

    fn system(
        &self,
        j: &IdealRef,
        ideals: &[IdealRef],
        module: MonomialModule,
    ) -> Result<IdealSystem, ScenarioError> {
        let j = self.ideal(j)?;
        let ideals = ideals.iter().map(|r| self.ideal(r)).collect::<Result<Vec<_>, _>>()?;
        Ok(IdealSystem::new(&self.ring, j, ideals, module)?)
    }
}

fn named_error(e: ScenarioError, kind: &'static str, name: &str) -> ScenarioError {
    match e {
        ScenarioError::Semantic(msg) => {
            ScenarioError::Semantic(format!("{kind} `{name}`: {msg}"))
        }
        other => other,
    }
}

enum SystemKind {
    Thm34,
    Prop21(usize),
    Cor38,
}

enum ResolvedCheck {
    Thm31 { module: MonomialModule },
    System { which: SystemKind, sys: IdealSystem },
    Thm39 { ext: MonomialExtension, sys: IdealSystem },
    Mixed { module: MonomialModule, expect: Option<Vec<ExpectEntry>> },
    IdealMixed { sys: IdealSystem, expect: Option<Vec<ExpectEntry>> },
    Rank { module: MonomialModule, expect: Option<u64> },
}

fn resolve_check(
    decls: &ResolvedScenario,
    decl: &CheckDecl,
) -> Result<ResolvedCheck, ScenarioError> {
    let s = decls.ring.grading_arity();
    match decl {
        CheckDecl::Thm31 { module } => {
            Ok(ResolvedCheck::Thm31 { module: decls.module(module)? })
        }
        CheckDecl::Thm34 { j, ideals, module } => Ok(ResolvedCheck::System {
            which: SystemKind::Thm34,
            sys: decls.system(j, ideals, decls.module(module)?)?,
        }),
        CheckDecl::Prop21 { j, ideals, module, index } => {
            if *index == 0 || *index > ideals.len() {
                return Err(ScenarioError::Semantic(format!(
                    "prop2.1 index {index} out of range 1..={}",
                    ideals.len()
                )));
            }
            Ok(ResolvedCheck::System {
                which: SystemKind::Prop21(*index),
                sys: decls.system(j, ideals, decls.module(module)?)?,
            })
        }
        CheckDecl::Cor38 { j, ideals, module } => Ok(ResolvedCheck::System {
            which: SystemKind::Cor38,
            sys: decls.system(j, ideals, decls.module(module)?)?,
        }),
        CheckDecl::Thm39 { j, ideals, extension } => {
            let ext = decls.extension(extension)?;
            let sys = decls.system(j, ideals, MonomialModule::free(&decls.ring, 1))?;
            Ok(ResolvedCheck::Thm39 { ext, sys })
        }
        CheckDecl::Mixed { module, expect } => {
            validate_expect_arity(expect, s, "mixed")?;
            Ok(ResolvedCheck::Mixed { module: decls.module(module)?, expect: expect.clone() })
        }
        CheckDecl::IdealMixed { j, ideals, module, expect } => {
            validate_expect_arity(expect, ideals.len() + 1, "ideal-mixed")?;
            Ok(ResolvedCheck::IdealMixed {
                sys: decls.system(j, ideals, decls.module(module)?)?,
                expect: expect.clone(),
            })
        }
        CheckDecl::Rank { module, expect } => {
            Ok(ResolvedCheck::Rank { module: decls.module(module)?, expect: *expect })
        }
    }
}

fn validate_expect_arity(
    expect: &Option<Vec<ExpectEntry>>,
    arity: usize,
    kind: &str,
) -> Result<(), ScenarioError> {
    if let Some(entries) = expect {
        for e in entries {
            if e.key.len() != arity {
                return Err(ScenarioError::Semantic(format!(
                    "{kind} expectation type {:?} has length {}, need {arity}",
                    e.key,
                    e.key.len()
                )));
            }
        }
    }
    Ok(())
}

/// One-point cross-check of the engine's fiber length against the raw
/// enumeration oracle, run on every system-based check that passed. A
/// mismatch demotes the outcome to a failure.
fn oracle_spot_check(sys: &IdealSystem) -> Option<String> {
    let nvars = sys.ring().nvars();
    let j_raw: Vec<Monomial> = sys.j_ideal().generators().to_vec();
    let mut lists: Vec<Vec<Monomial>> = vec![j_raw.clone()];
    lists.extend(sys.ideals().iter().map(|i| i.generators().to_vec()));
    let exps = vec![1u32; lists.len()];
    let l1 = raw_multipower(&lists, &exps, nvars);
    let l2 = raw_product(&j_raw, &l1);
    let ones = vec![1u32; sys.ideals().len()];
    let engine = match sys.fiber_hilbert(1, &ones) {
        Ok(v) => v,
        Err(e) => return Some(format!("engine refused the sample point: {e}")),
    };
    let oracle = match brute_force_length(nvars, &l1, &l2, Some(sys.module()), None) {
        Ok(v) => v,
        Err(e) => return Some(format!("oracle refused the sample point: {e}")),
    };
    if engine == oracle {
        None
    } else {
        Some(format!("fiber length at the all-ones point: engine {engine}, oracle {oracle}"))
    }
}

fn with_oracle_guard(sys: &IdealSystem, outcome: CheckOutcome) -> CheckOutcome {
    if !outcome.status.is_pass() {
        return outcome;
    }
    match oracle_spot_check(sys) {
        None => outcome,
        Some(msg) => CheckOutcome {
            status: CheckStatus::Fail(format!("oracle cross-check failed: {msg}")),
            ..outcome
        },
    }
}

fn engine_failure(kind: &str, label: String, e: &Error) -> CheckOutcome {
    CheckOutcome::finish(
        kind,
        label,
        Value::Null,
        Value::Null,
        Value::Null,
        CheckStatus::Fail(format!("engine error: {e}")),
        std::time::Instant::now(),
    )
}

fn compare_expected(
    computed: impl Fn(&[u32]) -> u64,
    expect: &[ExpectEntry],
) -> CheckStatus {
    for e in expect {
        let got = computed(&e.key);
        if got != e.value {
            return CheckStatus::Fail(format!(
                "expected {} at type {:?}, computed {got}",
                e.value, e.key
            ));
        }
    }
    CheckStatus::Pass
}

fn run_check(check: &ResolvedCheck, ctl: &FitControl) -> CheckOutcome {
    match check {
        ResolvedCheck::Thm31 { module } => check_thm_3_1(module, ctl),
        ResolvedCheck::System { which, sys } => {
            let outcome = match which {
                SystemKind::Thm34 => sys.check_thm_3_4(ctl),
                SystemKind::Prop21(i) => sys.check_prop_2_1(*i, ctl),
                SystemKind::Cor38 => sys.check_cor_3_8(ctl),
            };
            let kind = match which {
                SystemKind::Thm34 => "thm3.4",
                SystemKind::Prop21(_) => "prop2.1",
                SystemKind::Cor38 => "cor3.8",
            };
            match outcome {
                Ok(o) => with_oracle_guard(sys, o),
                Err(e) => engine_failure(kind, sys.describe(), &e),
            }
        }
        ResolvedCheck::Thm39 { ext, sys } => match ext.check_thm_3_9(sys, ctl) {
            Ok(o) => with_oracle_guard(sys, o),
            Err(e) => engine_failure("thm3.9", sys.describe(), &e),
        },
        ResolvedCheck::Mixed { module, expect } => {
            let started = std::time::Instant::now();
            let label = format!(
                "module with {} generator(s) over {} variable(s)",
                module.generator_count(),
                module.ring().nvars()
            );
            let inputs = json!({ "module": module_value(module), "expect": expect_value(expect) });
            match graded_mixed_multiplicities(module, ctl) {
                Ok(set) => {
                    let status = match expect {
                        Some(entries) => compare_expected(|k| set.get(k), entries),
                        None => CheckStatus::Pass,
                    };
                    CheckOutcome::finish(
                        "mixed",
                        label,
                        inputs,
                        multiplicity_set_value(&set),
                        expect_value(expect),
                        status,
                        started,
                    )
                }
                Err(e) => CheckOutcome::finish(
                    "mixed",
                    label,
                    inputs,
                    Value::Null,
                    expect_value(expect),
                    CheckStatus::Fail(format!("engine error: {e}")),
                    started,
                ),
            }
        }
        ResolvedCheck::IdealMixed { sys, expect } => {
            let started = std::time::Instant::now();
            let label = sys.describe();
            let inputs = json!({
                "J": ideal_value(sys.j_ideal()),
                "ideals": sys.ideals().iter().map(ideal_value).collect::<Vec<_>>(),
                "module": module_value(sys.module()),
                "expect": expect_value(expect),
            });
            let outcome = match sys.ideal_mixed_multiplicities(ctl) {
                Ok(local) => {
                    let status = match expect {
                        Some(entries) => compare_expected(|k| local.value(k), entries),
                        None => CheckStatus::Pass,
                    };
                    CheckOutcome::finish(
                        "ideal-mixed",
                        label,
                        inputs,
                        local.to_value(),
                        expect_value(expect),
                        status,
                        started,
                    )
                }
                Err(e) => CheckOutcome::finish(
                    "ideal-mixed",
                    label,
                    inputs,
                    Value::Null,
                    expect_value(expect),
                    CheckStatus::Fail(format!("engine error: {e}")),
                    started,
                ),
            };
            with_oracle_guard(sys, outcome)
        }
        ResolvedCheck::Rank { module, expect } => {
            let started = std::time::Instant::now();
            let label = format!(
                "rank of module with {} generator(s)",
                module.generator_count()
            );
            let inputs = json!({ "module": module_value(module), "expect": expect });
            let rank = module.rank() as u64;
            let status = match expect {
                Some(want) if *want != rank => {
                    CheckStatus::Fail(format!("expected rank {want}, computed {rank}"))
                }
                _ => CheckStatus::Pass,
            };
            CheckOutcome::finish(
                "rank",
                label,
                inputs,
                json!(rank),
                json!(expect),
                status,
                started,
            )
        }
    }
}

fn expect_value(expect: &Option<Vec<ExpectEntry>>) -> Value {
    match expect {
        None => Value::Null,
        Some(entries) => json!(entries
            .iter()
            .map(|e| json!({ "type": e.key, "value": e.value }))
            .collect::<Vec<_>>()),
    }
}

/// Run a parsed scenario: resolve every declaration and reference first
/// (so semantic problems surface before any computation), then execute
/// the checks in parallel and report them in declaration order.
pub fn run_scenario_file(
    file: &ScenarioFile,
    ctl: &FitControl,
) -> Result<VerificationReport, ScenarioError> {
    let decls = ResolvedScenario::resolve(file)?;
    let resolved = file
        .checks
        .iter()
        .map(|c| resolve_check(&decls, c))
        .collect::<Result<Vec<_>, _>>()?;
    let outcomes: Vec<CheckOutcome> =
        resolved.par_iter().map(|c| run_check(c, ctl)).collect();
    Ok(VerificationReport::new(outcomes))
}

/// Parse and run a scenario from a JSON string.
pub fn run_scenario_str(
    text: &str,
    ctl: &FitControl,
) -> Result<VerificationReport, ScenarioError> {
    run_scenario_file(&parse_scenario(text)?, ctl)
}

/// Parse and run a scenario from a file on disk.
pub fn run_scenario(
    path: &Path,
    ctl: &FitControl,
) -> Result<VerificationReport, ScenarioError> {
    let text = std::fs::read_to_string(path)?;
    run_scenario_str(&text, ctl)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctl() -> FitControl {
        FitControl::default()
    }

    fn staircase_scenario() -> String {
        json!({
            "schema": 1,
            "ring": { "vars": 2, "s": 1 },
            "ideals": {
                "J": [[1, 0], [0, 1]],
                "I": [[2, 0], [0, 3]]
            },
            "modules": {
                "N": { "shifts": [[0], [0]], "relations": [[1, [1, 0]]] }
            },
            "checks": [
                { "kind": "thm3.4", "J": "J", "ideals": ["I"], "module": "N" },
                { "kind": "ideal-mixed", "J": "J", "ideals": ["I"], "module": "N",
                  "expect": [ { "type": [1, 0], "value": 1 }, { "type": [0, 1], "value": 2 } ] },
                { "kind": "rank", "module": "N", "expect": 1 }
            ]
        })
        .to_string()
    }

    #[test]
    fn staircase_scenario_passes_with_expected_values() {
        let report = run_scenario_str(&staircase_scenario(), &ctl()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.checks.len(), 3);
        // The transmutation check reports the module-side values (1, 2).
        let left = &report.checks[0].left;
        assert_eq!(left["q"], json!(2));
        let values = left["multiplicities"]["values"].as_array().unwrap();
        assert!(values.contains(&json!({ "type": [1, 0], "value": 1 })));
        assert!(values.contains(&json!({ "type": [0, 1], "value": 2 })));
    }

    #[test]
    fn doubling_extension_scenario_passes() {
        let text = json!({
            "schema": 1,
            "ring": { "vars": 1, "s": 1 },
            "ideals": { "x": [[1]] },
            "extensions": { "B": { "components": [ { "vars": 1, "images": [[2]] } ] } },
            "checks": [
                { "kind": "thm3.9", "J": "x", "ideals": ["x"], "extension": "B" }
            ]
        })
        .to_string();
        let report = run_scenario_str(&text, &ctl()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        // 1 = 2 / 2: the quotient equals the base-side value.
        let right = &report.checks[0].right;
        assert_eq!(right["rank"], json!(2));
        assert_eq!(right["component_sum"][0]["value"], json!(2));
    }

    #[test]
    fn undeclared_references_are_semantic_errors() {
        let text = json!({
            "schema": 1,
            "ring": { "vars": 2, "s": 1 },
            "checks": [
                { "kind": "thm3.4", "J": "missing", "ideals": [[[2, 0]]], "module": { "shifts": [[0]] } }
            ]
        })
        .to_string();
        match run_scenario_str(&text, &ctl()) {
            Err(ScenarioError::Undeclared { kind: "ideal", name }) => {
                assert_eq!(name, "missing");
            }
            other => panic!("expected an undeclared-ideal error, got {other:?}"),
        }
    }

    #[test]
    fn parse_and_schema_errors_are_reported_with_positions() {
        match run_scenario_str("{ \"schema\": 1, ", &ctl()) {
            Err(ScenarioError::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert!(column > 0);
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        let text = json!({ "schema": 7, "ring": { "vars": 1, "s": 1 } }).to_string();
        assert!(matches!(run_scenario_str(&text, &ctl()), Err(ScenarioError::Schema(7))));
    }

    #[test]
    fn multigraded_scenario_runs_module_checks() {
        let text = json!({
            "schema": 1,
            "ring": { "vars": 2, "s": 2, "degrees": [[1, 0], [0, 1]] },
            "modules": {
                "M": { "shifts": [[1, 0], [0, 0]] }
            },
            "checks": [
                { "kind": "thm3.1", "module": "M" },
                { "kind": "mixed", "module": "M",
                  "expect": [ { "type": [0, 0], "value": 2 } ] },
                { "kind": "rank", "module": "M", "expect": 2 }
            ]
        })
        .to_string();
        let report = run_scenario_str(&text, &ctl()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn failed_expectations_fail_the_report_but_not_the_run() {
        let text = json!({
            "schema": 1,
            "ring": { "vars": 2, "s": 1 },
            "modules": { "N": { "shifts": [[0]] } },
            "checks": [ { "kind": "rank", "module": "N", "expect": 5 } ]
        })
        .to_string();
        let report = run_scenario_str(&text, &ctl()).unwrap();
        assert!(!report.passed());
        assert!(report.checks[0].status.is_fail());
    }

    #[test]
    fn bad_index_and_bad_arity_are_semantic_errors() {
        let text = json!({
            "schema": 1,
            "ring": { "vars": 2, "s": 1 },
            "ideals": { "J": [[1, 0], [0, 1]], "I": [[2, 0], [0, 3]] },
            "modules": { "N": { "shifts": [[0]] } },
            "checks": [
                { "kind": "prop2.1", "J": "J", "ideals": ["I"], "module": "N", "index": 2 }
            ]
        })
        .to_string();
        assert!(matches!(run_scenario_str(&text, &ctl()), Err(ScenarioError::Semantic(_))));

        let text = json!({
            "schema": 1,
            "ring": { "vars": 2, "s": 1 },
            "ideals": { "J": [[1, 0, 0]] },
            "checks": []
        })
        .to_string();
        assert!(matches!(run_scenario_str(&text, &ctl()), Err(ScenarioError::Semantic(_))));
    }

    #[test]
    fn round_trip_is_idempotent_and_reports_are_deterministic() {
        let text = staircase_scenario();
        let parsed = parse_scenario(&text).unwrap();
        let once = parsed.to_json();
        let reparsed = parse_scenario(&once.to_string()).unwrap();
        assert_eq!(parsed, reparsed);
        assert_eq!(once, reparsed.to_json());

        let a = run_scenario_str(&text, &ctl()).unwrap();
        let b = run_scenario_str(&text, &ctl()).unwrap();
        assert_eq!(a.stable_json(), b.stable_json());
    }

    #[test]
    fn inline_system_declarations_run() {
        let text = json!({
            "schema": 1,
            "ring": { "vars": 2, "s": 1 },
            "checks": [
                { "kind": "cor3.8",
                  "J": [[1, 0], [0, 1]],
                  "ideals": [ [[1, 0]] ],
                  "module": { "shifts": [[0], [0]] } }
            ]
        })
        .to_string();
        let report = run_scenario_str(&text, &ctl()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
