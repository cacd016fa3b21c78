//! The structured run report written by `solve --report` and `oracle --report`.

use serde::Serialize;
use sha2::{Digest, Sha256};

use hypercut::{random_cut_coefficient, Hypergraph, KCut, Rational};

/// Everything in a report except timing. Field order is the serialized key
/// order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportBody {
    pub command: String,
    pub input_digest: String,
    pub seed: u64,
    pub parameters: String,
    pub route: String,
    pub r: usize,
    pub n: usize,
    pub m: u64,
    pub k: usize,
    pub assignment: Vec<usize>,
    pub cut_value: u64,
    pub surplus: String,
    pub surplus_value: f64,
    pub coefficient: String,
}

/// A flat JSON document. `report_digest` hashes the body only, so two runs
/// with the same command line and seed share a digest even though their
/// wall times differ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    #[serde(flatten)]
    pub body: ReportBody,
    pub wall_time_ms: f64,
    pub report_digest: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn ratio_text(q: Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl RunReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        command: &str,
        input: &[u8],
        seed: u64,
        parameters: String,
        route: &str,
        h: &Hypergraph,
        cut: &KCut,
        wall_time_ms: f64,
    ) -> RunReport {
        let coefficient = random_cut_coefficient(h.uniformity(), cut.k()).map(ratio_text).unwrap_or_default();
        let body = ReportBody {
            command: command.to_string(),
            input_digest: sha256_hex(input),
            seed,
            parameters,
            route: route.to_string(),
            r: h.uniformity(),
            n: h.vertex_count(),
            m: h.edge_count(),
            k: cut.k(),
            assignment: cut.assignment().to_vec(),
            cut_value: cut.cut_value(),
            surplus: ratio_text(cut.surplus()),
            surplus_value: cut.surplus_f64(),
            coefficient,
        };
        let digest = sha256_hex(&serde_json::to_vec(&body).expect("report body serializes"));
        RunReport { body, wall_time_ms, report_digest: digest }
    }

    /// One key per line with compact values, so reports diff cleanly.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let fields: Vec<String> = value
            .as_object()
            .expect("report is an object")
            .iter()
            .map(|(k, v)| format!("  {}: {}", serde_json::Value::from(k.as_str()), v))
            .collect();
        format!("{{\n{}\n}}\n", fields.join(",\n"))
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let b = &self.body;
        format!(
            "route: {}\nr={} n={} m={} k={}\ncut_value: {}\nsurplus: {} ({:.6})\ncoefficient: {}\nassignment: {}\n",
            b.route,
            b.r,
            b.n,
            b.m,
            b.k,
            b.cut_value,
            b.surplus,
            b.surplus_value,
            b.coefficient,
            b.assignment.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
        )
    }
}
