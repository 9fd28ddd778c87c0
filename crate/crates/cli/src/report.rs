use serde::{Deserialize, Serialize};
use serde_json::Value;

use jesman_core::residues::Rule;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuleRef {
    pub id: String,
    pub statement: String,
}

impl From<Rule> for RuleRef {
    fn from(r: Rule) -> Self {
        RuleRef { id: r.id().to_string(), statement: r.statement().to_string() }
    }
}

/// Machine-readable result of one subcommand. Apart from `wall_time_ms`, which
/// is only filled in on request, the JSON is a pure function of the inputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub rules: Vec<RuleRef>,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, rules: Vec<RuleRef>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results,
            rules,
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_ms: None,
        }
    }
}

/// `value` on success, `{"error": message}` otherwise.
pub fn value_or_error<T: Serialize, E: std::fmt::Display>(r: &Result<T, E>) -> Value {
    match r {
        Ok(v) => serde_json::to_value(v).expect("report values serialize"),
        Err(e) => serde_json::json!({ "error": e.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new(
            "verify",
            serde_json::json!({"m": "4", "n": "3"}),
            serde_json::json!({"solutions": []}),
            vec![Rule::Mod16.into()],
        );
        let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
        r.wall_time_ms = Some(1.5);
        let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
