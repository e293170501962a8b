//! Scenario files end to end: declare a ring, ideals, modules and an
//! extension in one JSON document, run every requested check, and render
//! the verification report as text and as JSON.
//!
//! Run with `cargo run --example scenario_verify`.

use mixmult::hilbert::FitControl;
use mixmult::scenario::{parse_scenario, run_scenario_file};

const SCENARIO: &str = r#"{
  "schema": 1,
  "ring": { "vars": 2, "s": 1 },
  "ideals": {
    "J": [[1, 0], [0, 1]],
    "I": [[2, 0], [0, 3]],
    "x": [[1, 0]]
  },
  "modules": {
    "N": { "shifts": [[0], [0]], "relations": [[1, [1, 0]]] }
  },
  "extensions": {
    "B": { "components": [ { "vars": 2, "images": [[2, 0], [0, 1]] } ] }
  },
  "checks": [
    { "kind": "thm3.4", "J": "J", "ideals": ["I"], "module": "N" },
    { "kind": "ideal-mixed", "J": "J", "ideals": ["I"], "module": "N",
      "expect": [ { "type": [1, 0], "value": 1 }, { "type": [0, 1], "value": 2 } ] },
    { "kind": "prop2.1", "J": "J", "ideals": ["x"], "module": "N", "index": 1 },
    { "kind": "cor3.8", "J": "J", "ideals": ["I"], "module": "N" },
    { "kind": "thm3.9", "J": "J", "ideals": ["x"], "extension": "B" },
    { "kind": "rank", "module": "N", "expect": 1 }
  ]
}"#;

fn main() {
    let file = parse_scenario(SCENARIO).expect("the embedded scenario is well-formed");
    println!(
        "scenario declares {} ideal(s), {} module(s), {} extension(s), {} check(s)",
        file.ideals.len(),
        file.modules.len(),
        file.extensions.len(),
        file.checks.len()
    );

    let report = run_scenario_file(&file, &FitControl::default())
        .expect("every reference in the embedded scenario resolves");
    println!("{}", report.render_text());
    println!();
    println!("as JSON:");
    println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));

    // The report drives the process exit code in the CLI: zero only when
    // every check passed.
    assert!(report.passed());
}
