//! File formats: poset and network JSON (big integers carried as decimal
//! strings, ranks always recomputed on load) and Graphviz DOT export.

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flownet::{FlowAssignment, Network};
use crate::poset::GradedPoset;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub weights: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkJson {
    pub capacities: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlowJsonEntry {
    pub edge: (usize, usize),
    pub value: String,
}

fn parse_scalar<W: Scalar>(text: &str, what: &'static str) -> Result<W> {
    W::from_str_radix(text.trim(), 10).map_err(|_| Error::Parse {
        what,
        detail: format!("bad decimal integer {text:?}"),
    })
}

/// Formats an exact rational as `p/q` (always with the denominator).
pub fn format_ratio<W: Scalar>(value: &Ratio<W>) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn parse_ratio<W: Scalar>(text: &str) -> Result<Ratio<W>> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (parse_scalar(n, "rational")?, parse_scalar(d, "rational")?),
        None => (parse_scalar(text, "rational")?, W::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse {
            what: "rational",
            detail: format!("zero denominator in {text:?}"),
        });
    }
    Ok(Ratio::new(num, den))
}

pub fn poset_to_json<W: Scalar>(poset: &GradedPoset<W>) -> String {
    let doc = PosetJson {
        labels: poset.labels().to_vec(),
        covers: poset.covers().to_vec(),
        weights: poset.weights().iter().map(ToString::to_string).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("poset serializes")
}

pub fn poset_from_json<W: Scalar>(text: &str) -> Result<GradedPoset<W>> {
    let doc: PosetJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        what: "poset JSON",
        detail: e.to_string(),
    })?;
    let weights = doc
        .weights
        .iter()
        .map(|w| parse_scalar(w, "weight"))
        .collect::<Result<Vec<W>>>()?;
    GradedPoset::new(doc.labels, doc.covers, weights)
}

pub fn network_to_json<W: Scalar>(network: &Network<W>) -> String {
    let doc = NetworkJson {
        capacities: network
            .capacities()
            .iter()
            .map(ToString::to_string)
            .collect(),
        edges: network.edges().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("network serializes")
}

pub fn network_from_json<W: Scalar>(text: &str) -> Result<Network<W>> {
    let doc: NetworkJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        what: "network JSON",
        detail: e.to_string(),
    })?;
    let capacities = doc
        .capacities
        .iter()
        .map(|c| parse_scalar(c, "capacity"))
        .collect::<Result<Vec<W>>>()?;
    Network::new(capacities, doc.edges)
}

pub fn flow_to_entries<W: Scalar>(
    network: &Network<W>,
    flow: &FlowAssignment<W>,
) -> Vec<FlowJsonEntry> {
    network
        .edges()
        .iter()
        .zip(flow.values())
        .map(|(&edge, value)| FlowJsonEntry {
            edge,
            value: format_ratio(value),
        })
        .collect()
}

pub fn flow_from_entries<W: Scalar>(
    network: &Network<W>,
    entries: &[FlowJsonEntry],
) -> Result<FlowAssignment<W>> {
    let mut values = vec![Ratio::zero(); network.edges().len()];
    for entry in entries {
        let idx = network
            .edges()
            .binary_search(&entry.edge)
            .map_err(|_| Error::EdgeMismatch)?;
        values[idx] = parse_ratio(&entry.value)?;
    }
    FlowAssignment::new(network, values)
}

fn dot_escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT export: one node per element labeled `label (rank, weight)`, one edge
/// per cover, lower to higher.
pub fn poset_to_dot<W: Scalar>(poset: &GradedPoset<W>) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for id in 0..poset.len() {
        out.push_str(&format!(
            "  n{id} [label=\"{} ({}, {})\"];\n",
            dot_escape(poset.label(id)),
            poset.rank(id),
            poset.weight(id)
        ));
    }
    for &(lo, hi) in poset.covers() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}
