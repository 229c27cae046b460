//! Result documents: a versioned JSON schema with canonicalized inputs and
//! provenance, deterministic for fixed inputs and seed (serde_json maps are
//! ordered), plus TSV rendering for tabular commands.

use serde::Serialize;
use serde_json::{json, Map, Value};
use solvcoh_algebra::exterior::ExteriorBasis;
use solvcoh_exact::scalar::Rat;

pub const SCHEMA: &str = "solvcoh/1";

#[derive(Serialize)]
pub struct ResultDocument {
    pub schema: &'static str,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub provenance: Provenance,
}

#[derive(Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
}

impl ResultDocument {
    pub fn new(command: &str, inputs: Value, results: Value, seed: u64) -> Self {
        ResultDocument {
            schema: SCHEMA,
            command: command.to_string(),
            inputs,
            results,
            provenance: Provenance {
                tool: "solvcoh",
                version: env!("CARGO_PKG_VERSION"),
                seed,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

pub fn rat_value(q: &Rat) -> Value {
    if solvcoh_exact::scalar::rat_is_integer(q) {
        match i64::try_from(q.numer().clone()) {
            Ok(n) => json!(n),
            Err(_) => json!(q.to_string()),
        }
    } else {
        json!(q.to_string())
    }
}

/// A chain vector as a list of "a145"-style terms with coefficients;
/// single-term unit vectors print as the bare name.
pub fn form_string(n: usize, degree: usize, v: &[Rat]) -> String {
    let basis = ExteriorBasis::new(n, degree);
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let label: String = basis.indices[i].iter().map(|d| (d + 1).to_string()).collect();
        let name = if degree == 0 { "1".to_string() } else { format!("a{label}") };
        if c == &Rat::from_integer(1.into()) {
            parts.push(name);
        } else if c == &Rat::from_integer((-1).into()) {
            parts.push(format!("-{name}"));
        } else {
            parts.push(format!("{c}*{name}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+").replace("+-", "-")
    }
}

pub fn params_value(params: &std::collections::BTreeMap<String, Rat>) -> Value {
    let mut m = Map::new();
    for (k, v) in params {
        m.insert(k.clone(), rat_value(v));
    }
    Value::Object(m)
}

/// Render rows as TSV with a header.
pub fn tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}
