//! Exact computation of the total vertex product irregularity strength on
//! small graphs by branch and bound.
//!
//! Edges are labeled first along a DFS edge order; the moment a vertex
//! has all incident edges labeled its edge product is final, and more
//! than s vertices sharing an edge product can never be separated by
//! vertex labels from 1..=s. Vertex labels are assigned afterwards with
//! immediate collision pruning. Degree classes whose distinct-product
//! count cannot cover their vertex count refute a strength outright.

use std::time::{Duration, Instant};

use crate::bounds::{
    count_distinct_products, counting_lower_bound, cycle_cuberoot_lower_bound,
    exact_multiset_lower_bound, greedy_upper_labeling, multipartite_lower_bound,
};
use crate::cycles::auto_label_cycle;
use crate::error::{Error, Result};
use crate::graph::{FamilyTag, Graph};
use crate::labeling::TotalLabeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchOrder {
    /// Edges in depth-first discovery order (default).
    DfsEdges,
    /// Edges in canonical input order.
    InputOrder,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Largest strength the ascent will try before bracketing.
    pub max_strength: u64,
    pub node_budget: u64,
    pub time_budget: Duration,
    pub order: BranchOrder,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_strength: 16,
            node_budget: 1_000_000_000,
            time_budget: Duration::from_secs(300),
            order: BranchOrder::DfsEdges,
        }
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    /// A verified product-irregular labeling with all labels <= s.
    Found(TotalLabeling),
    /// Exhaustively refuted.
    No,
    /// Node or time budget ran out before the search finished.
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub enum TvpsOutcome {
    Exact { value: u64, witness: TotalLabeling },
    /// tvps lies in [lower, upper]; upper comes from a verified
    /// construction when one applies.
    Bracket { lower: u64, upper: Option<u64> },
}

struct Search<'a> {
    graph: &'a Graph,
    s: u64,
    edge_order: Vec<usize>,
    symmetric: bool,
    edge_labels: Vec<u64>,
    products: Vec<u128>,
    remaining: Vec<usize>,
    group_counts: std::collections::HashMap<u128, u32>,
    used_pds: std::collections::HashSet<u128>,
    vertex_labels: Vec<u64>,
    nodes: u64,
    node_budget: u64,
    deadline: Instant,
    exhausted: bool,
}

enum Step {
    Found,
    NotHere,
    Exhausted,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, s: u64, cfg: &SearchConfig) -> Search<'a> {
        let n = graph.vertex_count();
        let edge_order = match cfg.order {
            BranchOrder::InputOrder => (0..graph.edge_count()).collect(),
            BranchOrder::DfsEdges => dfs_edge_order(graph),
        };
        // cycles and complete graphs are edge-transitive: the first edge
        // may be assumed to carry the minimum label
        let symmetric = matches!(graph.family().tag, FamilyTag::Cycle | FamilyTag::Complete);
        Search {
            graph,
            s,
            edge_order,
            symmetric,
            edge_labels: vec![0; graph.edge_count()],
            products: vec![1; n],
            remaining: (0..n).map(|v| graph.degree(v)).collect(),
            group_counts: std::collections::HashMap::new(),
            used_pds: std::collections::HashSet::new(),
            vertex_labels: vec![0; n],
            nodes: 0,
            node_budget: cfg.node_budget,
            deadline: Instant::now() + cfg.time_budget,
            exhausted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            self.exhausted = true;
            return false;
        }
        if self.nodes % 8192 == 0 && Instant::now() > self.deadline {
            self.exhausted = true;
            return false;
        }
        true
    }

    fn assign_edges(&mut self, k: usize) -> Step {
        if k == self.edge_order.len() {
            return self.assign_vertices(0);
        }
        let e = self.edge_order[k];
        let (u, v) = self.graph.edges()[e];
        let lo = if self.symmetric && k > 0 {
            self.edge_labels[self.edge_order[0]]
        } else {
            1
        };
        for lab in lo..=self.s {
            if !self.tick() {
                return Step::Exhausted;
            }
            self.edge_labels[e] = lab;
            let mut ok = true;
            for &w in &[u, v] {
                self.products[w] *= lab as u128;
                self.remaining[w] -= 1;
                if self.remaining[w] == 0 {
                    let count = self.group_counts.entry(self.products[w]).or_insert(0);
                    *count += 1;
                    // more than s vertices with one edge product cannot
                    // receive distinct product degrees
                    if u64::from(*count) > self.s {
                        ok = false;
                    }
                }
            }
            if ok {
                match self.assign_edges(k + 1) {
                    Step::NotHere => {}
                    done => return done,
                }
            }
            for &w in &[u, v] {
                if self.remaining[w] == 0 {
                    let count = self.group_counts.get_mut(&self.products[w]).expect("group present");
                    *count -= 1;
                    if *count == 0 {
                        self.group_counts.remove(&self.products[w]);
                    }
                }
                self.remaining[w] += 1;
                self.products[w] /= lab as u128;
            }
            self.edge_labels[e] = 0;
        }
        Step::NotHere
    }

    fn assign_vertices(&mut self, v: usize) -> Step {
        if v == self.graph.vertex_count() {
            return Step::Found;
        }
        for lab in 1..=self.s {
            if !self.tick() {
                return Step::Exhausted;
            }
            let pd = self.products[v] * lab as u128;
            if self.used_pds.contains(&pd) {
                continue;
            }
            self.used_pds.insert(pd);
            self.vertex_labels[v] = lab;
            match self.assign_vertices(v + 1) {
                Step::NotHere => {}
                done => return done,
            }
            self.used_pds.remove(&pd);
            self.vertex_labels[v] = 0;
        }
        Step::NotHere
    }
}

fn dfs_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen_edge = vec![false; g.edge_count()];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut stack = Vec::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        stack.push(root);
        while let Some(u) = stack.pop() {
            if !visited[u] {
                visited[u] = true;
                for &w in g.neighbors(u).iter().rev() {
                    stack.push(w);
                }
            }
            for &w in g.neighbors(u) {
                let e = g.edge_index(u, w).expect("adjacency edge");
                if !seen_edge[e] {
                    seen_edge[e] = true;
                    order.push(e);
                }
            }
        }
    }
    order
}

/// Decides whether a product-irregular labeling with all labels <= s
/// exists. `No` is exhaustive; budget exhaustion is reported separately.
pub fn exists_labeling(g: &Graph, s: u64, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("strength must be >= 1".into()));
    }
    // refute by counting before searching
    for (d, nd) in g.degree_counts() {
        match count_distinct_products(s, (d + 1) as u64) {
            Ok(c) if (c as usize) < nd => return Ok(SearchOutcome::No),
            _ => {}
        }
    }
    let mut search = Search::new(g, s, cfg);
    match search.assign_edges(0) {
        Step::Found => {
            let labeling = TotalLabeling::new(
                g.clone(),
                search.vertex_labels.clone(),
                search.edge_labels.clone(),
            )?;
            if !labeling.is_product_irregular() {
                return Err(Error::Internal("search witness failed verification".into()));
            }
            Ok(SearchOutcome::Found(labeling))
        }
        Step::NotHere => Ok(SearchOutcome::No),
        Step::Exhausted => Ok(SearchOutcome::BudgetExhausted),
    }
}

/// Best lower bound available from the closed forms and enumerations.
pub fn best_lower_bound(g: &Graph) -> u64 {
    let mut best = counting_lower_bound(g);
    if let Ok(v) = exact_multiset_lower_bound(g) {
        best = best.max(v);
    }
    match g.family().tag {
        FamilyTag::Cycle => best = best.max(cycle_cuberoot_lower_bound(g.vertex_count())),
        FamilyTag::CompleteMultipartite => {
            if let Ok(v) = multipartite_lower_bound(&g.family().params) {
                best = best.max(v);
            }
        }
        FamilyTag::Complete => {
            if g.vertex_count() >= 2 {
                best = best.max(2);
            }
        }
        _ => {}
    }
    best
}

fn constructive_upper(g: &Graph) -> Option<u64> {
    let mut best: Option<u64> = None;
    let mut consider = |v: u64| {
        best = Some(best.map_or(v, |b: u64| b.min(v)));
    };
    if let Ok(l) = greedy_upper_labeling(g, None) {
        consider(l.strength());
    }
    if g.family().tag == FamilyTag::Cycle {
        if let Ok(l) = auto_label_cycle(g.vertex_count()) {
            consider(l.strength());
        }
    }
    best
}

/// Minimal strength of a product-irregular labeling, by ascending
/// decision calls from the best lower bound. Budget exhaustion returns a
/// bracketing interval instead of an exact value.
pub fn tvps_exact(g: &Graph, cfg: &SearchConfig) -> Result<TvpsOutcome> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let mut s = best_lower_bound(g).max(1);
    while s <= cfg.max_strength {
        match exists_labeling(g, s, cfg)? {
            SearchOutcome::Found(witness) => return Ok(TvpsOutcome::Exact { value: s, witness }),
            SearchOutcome::No => s += 1,
            SearchOutcome::BudgetExhausted => {
                return Ok(TvpsOutcome::Bracket {
                    lower: s,
                    upper: constructive_upper(g),
                })
            }
        }
    }
    Ok(TvpsOutcome::Bracket {
        lower: s,
        upper: constructive_upper(g),
    })
}
