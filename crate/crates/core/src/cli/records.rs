//! Output records. `records` format prints one JSON object per line; the
//! human format renders the same objects as `kind  key=value ...` lines.

use serde::Serialize;
use serde_json::Value;

use crate::census::{LayerPartition, SequenceFamily};
use crate::closedness::LayerReport;
use crate::clustering::BoundVerdicts;
use crate::graph::{Labeling, VertexSet};

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Input {
        n: usize,
        m: usize,
        connected: bool,
    },
    Check {
        closed_by_definition: bool,
        violation: Option<String>,
        closed_by_intervals: Option<bool>,
        layers: Option<Vec<VertexSet>>,
        h: Option<usize>,
        diameter: Option<usize>,
    },
    LayerTheorems(LayerReport),
    Find {
        labeling: Option<Labeling>,
    },
    Count {
        classes: Vec<VertexSet>,
        formula: String,
        oracle: Option<String>,
        agree: Option<bool>,
    },
    Labeling {
        index: u64,
        labeling: Labeling,
    },
    Page {
        offset: u64,
        emitted: u64,
        total: String,
    },
    CensusCount {
        partition: LayerPartition,
        count: String,
    },
    CensusTotal {
        n: usize,
        compositions: String,
        total: String,
    },
    ClosedGraph {
        index: u64,
        partition: LayerPartition,
        sequences: SequenceFamily,
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    Vertex {
        vertex: usize,
        degree: usize,
        c_v: String,
        c_v_approx: String,
    },
    Clustering {
        n: usize,
        cws: String,
        cws_approx: String,
        high_degree: usize,
        closed_wedges: usize,
        open_wedges: usize,
        leaves: usize,
        isolated: usize,
    },
    Bounds {
        status: String,
        h: Option<usize>,
        cws_floor: Option<String>,
        verdicts: Option<BoundVerdicts>,
    },
    OracleCheck {
        n: usize,
        bound: usize,
        oracle_count: u64,
        search_agrees: bool,
        least_labeling_agrees: bool,
        formula: Option<String>,
        formula_agrees: Option<bool>,
        enumeration_agrees: Option<bool>,
    },
    CensusCheck {
        n: usize,
        formula: String,
        bruteforce: u64,
        agree: bool,
    },
    Warning {
        message: String,
    },
}

impl Record {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_human(&self) -> String {
        let value = serde_json::to_value(self).expect("records serialize");
        let Value::Object(map) = value else {
            unreachable!("records are tagged objects")
        };
        let kind = map["record"].as_str().unwrap_or_default().to_string();
        if let Record::ClosedGraph { index, partition, sequences, n, edges } = self {
            let seqs: Vec<String> = sequences
                .seqs()
                .iter()
                .map(|s| format!("({})", join(s)))
                .collect();
            let mut out = format!(
                "# graph {index}  partition={partition}  sequences={}\n{n} {}\n",
                seqs.join(" "),
                edges.len()
            );
            for (u, v) in edges {
                out.push_str(&format!("{u} {v}\n"));
            }
            out.pop();
            return out;
        }
        let mut parts = vec![kind];
        for (key, val) in map.iter().filter(|(k, _)| k.as_str() != "record") {
            match val {
                Value::Object(inner) => {
                    for (k2, v2) in inner {
                        parts.push(format!("{k2}={}", human_value(v2)));
                    }
                }
                _ => parts.push(format!("{key}={}", human_value(val))),
            }
        }
        parts.join("  ")
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn human_value(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(Value::is_array) => items
            .iter()
            .map(|inner| {
                let Value::Array(xs) = inner else { unreachable!() };
                let xs: Vec<String> = xs.iter().map(human_value).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
