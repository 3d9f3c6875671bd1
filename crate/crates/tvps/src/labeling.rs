//! Total labelings, product degrees and the irregularity verifier.
//!
//! Product degrees are computed in arbitrary precision: the prime-chain
//! labeler multiplies primes that grow with the cycle length and a fixed
//! width would overflow silently.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{make_cycle, Graph};

/// A labeling of every vertex and every edge of a graph with positive
/// integers. Edge labels are stored parallel to the graph's canonical
/// edge order. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalLabeling {
    graph: Graph,
    vertex_labels: Vec<u64>,
    edge_labels: Vec<u64>,
}

/// Per-vertex product degrees pd(v) = w(v) * prod of incident edge labels.
/// For an isolated vertex pd(v) = w(v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductDegreeMap {
    pds: Vec<BigUint>,
}

impl ProductDegreeMap {
    pub fn pd(&self, v: usize) -> &BigUint {
        &self.pds[v]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.pds
    }

    pub fn into_vec(self) -> Vec<BigUint> {
        self.pds
    }

    /// Sorted copy of the product degrees (the pd multiset).
    pub fn sorted(&self) -> Vec<BigUint> {
        let mut v = self.pds.clone();
        v.sort();
        v
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeLabelJson {
    u: usize,
    v: usize,
    w: u64,
}

#[derive(Serialize, Deserialize)]
struct LabelingJson {
    vertex_labels: Vec<u64>,
    edge_labels: Vec<EdgeLabelJson>,
}

impl TotalLabeling {
    /// Builds a labeling from per-vertex labels and per-edge labels given
    /// in the graph's canonical edge order.
    pub fn new(graph: Graph, vertex_labels: Vec<u64>, edge_labels: Vec<u64>) -> Result<TotalLabeling> {
        if vertex_labels.len() != graph.vertex_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} vertex labels for {} vertices",
                vertex_labels.len(),
                graph.vertex_count()
            )));
        }
        if edge_labels.len() != graph.edge_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} edge labels for {} edges",
                edge_labels.len(),
                graph.edge_count()
            )));
        }
        if vertex_labels.iter().chain(&edge_labels).any(|&w| w == 0) {
            return Err(Error::InvalidParameter("labels must be >= 1".into()));
        }
        Ok(TotalLabeling {
            graph,
            vertex_labels,
            edge_labels,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_labels(&self) -> &[u64] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[u64] {
        &self.edge_labels
    }

    pub fn vertex_label(&self, v: usize) -> u64 {
        self.vertex_labels[v]
    }

    pub fn edge_label(&self, u: usize, v: usize) -> Option<u64> {
        self.graph.edge_index(u, v).map(|i| self.edge_labels[i])
    }

    /// Maximum label used on vertices and edges.
    pub fn strength(&self) -> u64 {
        self.vertex_labels
            .iter()
            .chain(&self.edge_labels)
            .copied()
            .max()
            .unwrap_or(1)
    }

    /// Exact product degrees of all vertices.
    pub fn product_degrees(&self) -> ProductDegreeMap {
        let mut pds: Vec<BigUint> = self.vertex_labels.iter().map(|&w| BigUint::from(w)).collect();
        for (i, &(u, v)) in self.graph.edges().iter().enumerate() {
            let w = BigUint::from(self.edge_labels[i]);
            pds[u] *= &w;
            pds[v] *= &w;
        }
        ProductDegreeMap { pds }
    }

    /// `None` when all product degrees are pairwise distinct; otherwise
    /// the lexicographically first colliding pair (u, v), u < v.
    pub fn irregularity_witness(&self) -> Option<(usize, usize)> {
        let pds = self.product_degrees();
        let mut groups: HashMap<&BigUint, Vec<usize>> = HashMap::new();
        for (v, pd) in pds.values().iter().enumerate() {
            groups.entry(pd).or_default().push(v);
        }
        groups
            .values()
            .filter(|g| g.len() > 1)
            .map(|g| (g[0], g[1]))
            .min()
    }

    pub fn is_product_irregular(&self) -> bool {
        self.irregularity_witness().is_none()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edge_labels = self
            .graph
            .edges()
            .iter()
            .zip(&self.edge_labels)
            .map(|(&(u, v), &w)| EdgeLabelJson { u, v, w })
            .collect();
        serde_json::to_value(LabelingJson {
            vertex_labels: self.vertex_labels.clone(),
            edge_labels,
        })
        .expect("labeling serialization cannot fail")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("labeling serialization cannot fail")
    }

    /// Reads a labeling for `graph` from its JSON form; the edge set must
    /// match the graph exactly.
    pub fn from_json_str(graph: Graph, s: &str) -> Result<TotalLabeling> {
        let raw: LabelingJson = serde_json::from_str(s)?;
        let mut edge_labels = vec![0u64; graph.edge_count()];
        if raw.edge_labels.len() != graph.edge_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} edge labels for {} edges",
                raw.edge_labels.len(),
                graph.edge_count()
            )));
        }
        for e in &raw.edge_labels {
            let idx = graph
                .edge_index(e.u, e.v)
                .ok_or_else(|| Error::ShapeMismatch(format!("edge ({},{}) not in graph", e.u, e.v)))?;
            edge_labels[idx] = e.w;
        }
        TotalLabeling::new(graph, raw.vertex_labels, edge_labels)
    }
}

/// Alternating label sequence of a cycle: vertex of v1, edge v1v2, vertex
/// of v2, ..., vertex of vn, edge vn v1. Length 2n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSequence(Vec<u64>);

impl CycleSequence {
    pub fn new(entries: Vec<u64>) -> Result<CycleSequence> {
        if entries.len() < 6 || entries.len() % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "cycle sequence needs even length >= 6, got {}",
                entries.len()
            )));
        }
        if entries.iter().any(|&w| w == 0) {
            return Err(Error::InvalidParameter("labels must be >= 1".into()));
        }
        Ok(CycleSequence(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn cycle_len(&self) -> usize {
        self.0.len() / 2
    }

    /// Decodes onto the standard cycle: entry 2i is the label of vertex i,
    /// entry 2i+1 the label of edge (i, i+1 mod n).
    pub fn decode(&self) -> Result<TotalLabeling> {
        let n = self.cycle_len();
        let graph = make_cycle(n)?;
        let vertex_labels: Vec<u64> = (0..n).map(|i| self.0[2 * i]).collect();
        let mut edge_labels = vec![0u64; n];
        for i in 0..n {
            let idx = graph
                .edge_index(i, (i + 1) % n)
                .expect("cycle edge present by construction");
            edge_labels[idx] = self.0[2 * i + 1];
        }
        TotalLabeling::new(graph, vertex_labels, edge_labels)
    }

    /// Inverse of [`CycleSequence::decode`]; requires a cycle-family graph.
    pub fn encode(labeling: &TotalLabeling) -> Result<CycleSequence> {
        let g = labeling.graph();
        let n = g.vertex_count();
        if g.family().tag != crate::graph::FamilyTag::Cycle {
            return Err(Error::ShapeMismatch("encode expects a cycle graph".into()));
        }
        let mut entries = Vec::with_capacity(2 * n);
        for i in 0..n {
            entries.push(labeling.vertex_label(i));
            entries.push(
                labeling
                    .edge_label(i, (i + 1) % n)
                    .expect("cycle edge present"),
            );
        }
        CycleSequence::new(entries)
    }
}

// Label sequences achieving the optimal strength for cycles of length
// 3..=16, in the alternating vertex/edge order of CycleSequence. The
// transcription test below re-verifies irregularity and the strength row.
const CYCLE_TABLE: [&[u64]; 14] = [
    &[1, 1, 2, 2, 2, 2],
    &[1, 1, 1, 1, 2, 2, 2, 2],
    &[1, 1, 2, 2, 3, 3, 3, 3, 2, 2],
    &[1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 2, 2],
    &[1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1],
    &[1, 1, 3, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1],
    &[1, 1, 1, 3, 2, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1],
    &[1, 1, 1, 3, 1, 3, 2, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1],
    &[1, 3, 1, 3, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 3, 3, 2],
    &[1, 3, 1, 3, 1, 1, 4, 1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 3, 3, 2],
    &[4, 1, 2, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4, 3, 3, 3, 3, 2, 2],
    &[4, 1, 2, 1, 4, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4, 3, 3, 3, 3, 2, 2],
    &[4, 1, 2, 1, 3, 1, 4, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4, 3, 3, 3, 3, 2, 2],
    &[4, 1, 2, 1, 1, 1, 3, 1, 4, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4, 3, 3, 3, 3, 2, 2],
];

/// Optimal strengths for cycles of length 3..=16.
pub const CYCLE_OPTIMA: [u64; 14] = [2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4];

/// The stored optimal label sequence for a cycle of length 3..=16.
pub fn builtin_cycle_sequence(n: usize) -> Result<CycleSequence> {
    if !(3..=16).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "builtin cycle sequences cover 3..=16, got {n}"
        )));
    }
    CycleSequence::new(CYCLE_TABLE[n - 3].to_vec())
}

/// Decoded optimal labeling for a cycle of length 3..=16.
pub fn builtin_cycle_labeling(n: usize) -> Result<TotalLabeling> {
    builtin_cycle_sequence(n)?.decode()
}
