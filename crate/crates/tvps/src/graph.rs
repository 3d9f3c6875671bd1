//! Simple undirected graphs: representation, family generators and the
//! Cartesian product.
//!
//! Vertices are `0..n`. Edges are stored in canonical `(min, max)` form,
//! sorted lexicographically, so equal graphs serialize identically.
//! Graphs are immutable after construction and safe to share across
//! threads.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Cycle,
    Path,
    Grid,
    ToroidalGrid,
    Complete,
    CompleteMultipartite,
    Generic,
}

/// Family tag plus its integer parameters (cycle length, grid dimensions,
/// multipartite part sizes, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub tag: FamilyTag,
    pub params: Vec<usize>,
}

impl Family {
    pub fn generic() -> Self {
        Family {
            tag: FamilyTag::Generic,
            params: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    family: Family,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    family: Family,
}

impl Graph {
    /// Builds a graph from an edge list; rejects loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!("duplicate edge ({u},{v})")));
            }
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph {
            n,
            edges,
            adj,
            family: Family::generic(),
        })
    }

    pub fn with_family(mut self, family: Family) -> Graph {
        self.family = family;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` edges in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// Position of the canonical edge in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Pairs `(d, n_d)` for every degree d that occurs, ascending.
    pub fn degree_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for v in 0..self.n {
            *counts.entry(self.degree(v)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            family: self.family.clone(),
        })
        .expect("graph serialization cannot fail")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("graph serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_str(s)?;
        let g = Graph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))?;
        Ok(g.with_family(raw.family))
    }

    /// DOT rendering for visualization.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Cycle on n >= 3 vertices with edges (i, i+1 mod n).
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n));
    Ok(Graph::new(n, edges)?.with_family(Family {
        tag: FamilyTag::Cycle,
        params: vec![n],
    }))
}

/// Path on n >= 2 vertices with edges (i, i+1).
pub fn make_path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("path needs n >= 2, got {n}")));
    }
    let edges = (0..n - 1).map(|i| (i, i + 1));
    Ok(Graph::new(n, edges)?.with_family(Family {
        tag: FamilyTag::Path,
        params: vec![n],
    }))
}

/// Complete graph on n >= 1 vertices.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::new(n, edges)?.with_family(Family {
        tag: FamilyTag::Complete,
        params: vec![n],
    }))
}

/// Complete multipartite graph: vertices fall into consecutive blocks of
/// the given sizes, adjacent iff they lie in different blocks.
pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(Error::InvalidParameter(
            "multipartite graph needs at least 2 parts".into(),
        ));
    }
    if parts.iter().any(|&m| m == 0) {
        return Err(Error::InvalidParameter("empty part in multipartite spec".into()));
    }
    let n: usize = parts.iter().sum();
    let mut block = vec![0usize; n];
    let mut v = 0;
    for (b, &m) in parts.iter().enumerate() {
        for _ in 0..m {
            block[v] = b;
            v += 1;
        }
    }
    let edges = (0..n).flat_map(|u| {
        let block = &block;
        (u + 1..n).filter_map(move |w| (block[u] != block[w]).then_some((u, w)))
    });
    Ok(Graph::new(n, edges)?.with_family(Family {
        tag: FamilyTag::CompleteMultipartite,
        params: parts.to_vec(),
    }))
}

/// Graph with n vertices and no edges.
pub fn make_empty(n: usize) -> Result<Graph> {
    Graph::new(n, std::iter::empty())
}

/// Bijection between composite coordinates and flat vertex indices for
/// product graphs. Row-major: the first dimension is most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexIndexer {
    dims: Vec<usize>,
}

impl VertexIndexer {
    pub fn new(dims: Vec<usize>) -> Result<VertexIndexer> {
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::InvalidParameter("indexer dims must be non-empty and positive".into()));
        }
        Ok(VertexIndexer { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.dims.len());
        let mut idx = 0;
        for (c, d) in coords.iter().zip(&self.dims) {
            debug_assert!(c < d);
            idx = idx * d + c;
        }
        idx
    }

    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for j in (0..self.dims.len()).rev() {
            out[j] = index % self.dims[j];
            index /= self.dims[j];
        }
        out
    }
}

/// Cartesian product of the factors: composite vertices are coordinate
/// tuples, adjacent iff they differ in exactly one coordinate by an edge
/// of that factor. Products of cycles are tagged toroidal grids, products
/// of paths are tagged grids.
pub fn cartesian_product(factors: &[Graph]) -> Result<(Graph, VertexIndexer)> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("empty factor list".into()));
    }
    if factors.iter().any(|f| f.vertex_count() == 0) {
        return Err(Error::InvalidParameter("empty factor graph".into()));
    }
    let dims: Vec<usize> = factors.iter().map(|f| f.vertex_count()).collect();
    let indexer = VertexIndexer::new(dims.clone())?;
    let n = indexer.len();

    let mut edges = Vec::new();
    for v in 0..n {
        let coords = indexer.coords(v);
        for (j, factor) in factors.iter().enumerate() {
            for &w in factor.neighbors(coords[j]) {
                // each factor edge once: only take the higher endpoint
                if w < coords[j] {
                    continue;
                }
                let mut other = coords.clone();
                other[j] = w;
                edges.push((v, indexer.index(&other)));
            }
        }
    }

    let all = |tag: FamilyTag| factors.iter().all(|f| f.family().tag == tag);
    let family = if factors.len() == 1 {
        factors[0].family().clone()
    } else if all(FamilyTag::Cycle) {
        Family {
            tag: FamilyTag::ToroidalGrid,
            params: dims.clone(),
        }
    } else if all(FamilyTag::Path) {
        Family {
            tag: FamilyTag::Grid,
            params: dims.clone(),
        }
    } else {
        Family::generic()
    };

    Ok((Graph::new(n, edges)?.with_family(family), indexer))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_basics() {
        let g = make_cycle(3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);

        let g = make_cycle(5).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));

        assert!(make_cycle(2).is_err());
    }

    #[test]
    fn path_basics() {
        let g = make_path(2).unwrap();
        assert_eq!(g.edge_count(), 1);

        let g = make_path(4).unwrap();
        let degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 2, 1]);

        assert!(make_path(1).is_err());
    }

    #[test]
    fn multipartite_basics() {
        let g = make_complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);

        let g = make_complete_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(g.edges(), make_cycle(3).unwrap().edges());

        // In K_{2,3,4} a vertex of the smallest block sees all 7 others.
        let g = make_complete_multipartite(&[2, 3, 4]).unwrap();
        assert_eq!(g.max_degree(), 7);
        assert_eq!(g.degree(0), 7);

        assert!(make_complete_multipartite(&[5]).is_err());
    }

    #[test]
    fn product_examples() {
        let c3 = make_cycle(3).unwrap();
        let (t, _) = cartesian_product(&[c3.clone(), c3.clone()]).unwrap();
        assert_eq!(t.vertex_count(), 9);
        assert_eq!(t.edge_count(), 18);
        assert!((0..9).all(|v| t.degree(v) == 4));
        assert_eq!(t.family().tag, FamilyTag::ToroidalGrid);

        let p2 = make_path(2).unwrap();
        let (q, _) = cartesian_product(&[p2.clone(), p2]).unwrap();
        assert_eq!(q.vertex_count(), 4);
        assert_eq!(q.edge_count(), 4);
        assert!((0..4).all(|v| q.degree(v) == 2));

        let c5 = make_cycle(5).unwrap();
        let (same, idx) = cartesian_product(&[c5.clone()]).unwrap();
        assert_eq!(same.edges(), c5.edges());
        assert_eq!(idx.dims(), &[5]);

        assert!(cartesian_product(&[]).is_err());
    }

    #[test]
    fn composite_degree_is_sum_of_factor_degrees() {
        let p4 = make_path(4).unwrap();
        let c3 = make_cycle(3).unwrap();
        let (g, idx) = cartesian_product(&[p4.clone(), c3.clone()]).unwrap();
        for v in 0..g.vertex_count() {
            let c = idx.coords(v);
            assert_eq!(g.degree(v), p4.degree(c[0]) + c3.degree(c[1]));
        }
    }

    #[test]
    fn degree_sum_matches_edge_count() {
        let g = make_complete_multipartite(&[2, 3, 4]).unwrap();
        let sum: usize = g.degree_counts().iter().map(|&(d, nd)| d * nd).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn json_round_trip() {
        let g = make_cycle(5).unwrap();
        let s = g.to_json_string();
        let back = Graph::from_json_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(s.contains("\"cycle\""));
    }

    #[test]
    fn dot_output() {
        let g = make_path(3).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 -- 2;"));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn indexer_round_trip() {
        let idx = VertexIndexer::new(vec![3, 4, 2]).unwrap();
        for v in 0..idx.len() {
            assert_eq!(idx.index(&idx.coords(v)), v);
        }
        // Dimension 0 is most significant.
        assert_eq!(idx.index(&[1, 0, 0]), 8);
        assert_eq!(idx.index(&[0, 1, 0]), 2);
        assert_eq!(idx.index(&[0, 0, 1]), 1);
    }

    proptest::proptest! {
        // |E(product)| = sum_j |E_j| * prod_{i != j} n_i
        #[test]
        fn product_edge_count_formula(sizes in proptest::collection::vec(2usize..6, 1..4)) {
            let factors: Vec<Graph> = sizes
                .iter()
                .map(|&n| if n == 2 { make_path(2).unwrap() } else { make_cycle(n).unwrap() })
                .collect();
            let (product, _) = cartesian_product(&factors).unwrap();
            let expected: usize = (0..factors.len())
                .map(|j| {
                    factors[j].edge_count()
                        * factors
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != j)
                            .map(|(_, f)| f.vertex_count())
                            .product::<usize>()
                })
                .sum();
            proptest::prop_assert_eq!(product.edge_count(), expected);
        }
    }
}
