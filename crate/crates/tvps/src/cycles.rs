//! Constructive labelers for cycles and their derivations.
//!
//! Three constructions cover all cycle lengths:
//!
//! * the stored optimal tables for lengths 3..=16;
//! * inductive extensions that splice a fixed window into a tracked
//!   anchor subsequence, growing the cycle by 3 (strength ceil(n/3)) or
//!   by 4 (strength ceil(n/4)) per step;
//! * the prime-chain construction: residue chains mod a prime p are
//!   concatenated into multichains whose adjacent residue pairs never
//!   repeat, substituted through the indexed label sequence 1,2,3,5,...,
//!   replicated, patched to the exact length by doubling edges, and
//!   finished with distinguishing vertex primes.
//!
//! Paths inherit cycle labelings by deleting a 1-labeled edge; graphs
//! with a Hamiltonian cycle or path inherit them by labeling all
//! remaining edges 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{make_cycle, make_path, Graph};
use crate::labeling::{builtin_cycle_labeling, builtin_cycle_sequence, CycleSequence, TotalLabeling};
use crate::primes;

/// The stored optimal labeling for a cycle of length 3..=16.
pub fn label_cycle_small(n: usize) -> Result<TotalLabeling> {
    builtin_cycle_labeling(n)
}

// ---------------------------------------------------------------------
// inductive extensions

#[derive(Clone, Copy)]
enum Extension {
    ByThree,
    ByFour,
}

impl Extension {
    fn base_len(self, n: usize) -> usize {
        match self {
            Extension::ByThree => match n % 3 {
                0 => 9,
                1 => 7,
                _ => 8,
            },
            Extension::ByFour => match n % 4 {
                0 => 16,
                1 => 13,
                2 => 14,
                _ => 15,
            },
        }
    }

    fn base_level(self) -> u64 {
        match self {
            Extension::ByThree => 3,
            Extension::ByFour => 4,
        }
    }

    // Anchor window at parameter s, starting on an edge entry.
    fn pattern(self, s: u64) -> Vec<u64> {
        match self {
            Extension::ByThree => vec![s - 1, s - 1, s, s, s, s, s - 1],
            Extension::ByFour => vec![s - 1, s, s, s - 2, s, s, s, s - 1, s - 1],
        }
    }

    // Window replacing the middle edge of the anchor; first and last
    // entries repeat the removed edge label, so the pds of the two
    // boundary vertices are untouched.
    fn insert_block(self, s: u64) -> Vec<u64> {
        match self {
            Extension::ByThree => vec![s, s, s + 1, s + 1, s + 1, s + 1, s],
            Extension::ByFour => vec![s, s + 1, s + 1, s - 1, s + 1, s + 1, s + 1, s, s],
        }
    }

    // Product degrees of the inserted vertices; all exceed s^3, the
    // running maximum, and are pairwise distinct.
    fn new_pds(self, s: u64) -> Vec<u64> {
        match self {
            Extension::ByThree => vec![s * s * (s + 1), (s + 1).pow(3), s * (s + 1) * (s + 1)],
            Extension::ByFour => vec![
                s * (s + 1) * (s + 1),
                (s - 1) * (s + 1) * (s + 1),
                (s + 1).pow(3),
                s * s * (s + 1),
            ],
        }
    }
}

fn find_anchor(seq: &[u64], pattern: &[u64]) -> Option<usize> {
    let len = seq.len();
    (1..len)
        .step_by(2)
        .find(|&k| pattern.iter().enumerate().all(|(i, &p)| seq[(k + i) % len] == p))
}

fn extend_cycle(kind: Extension, n: usize, verify_each_step: bool) -> Result<TotalLabeling> {
    let base_n = kind.base_len(n);
    let mut level = kind.base_level();

    let mut seq = builtin_cycle_sequence(base_n)?.entries().to_vec();
    let anchor = find_anchor(&seq, &kind.pattern(level))
        .ok_or_else(|| Error::Internal(format!("anchor missing in base table for n={base_n}")))?;
    // Keep the anchor at index 1; rotations preserve the labeling up to
    // renumbering and the shift is even, so vertex/edge parity survives.
    seq.rotate_left(anchor - 1);

    let base = CycleSequence::new(seq.clone())?.decode()?;
    if !base.is_product_irregular() {
        return Err(Error::Internal("base table failed verification".into()));
    }
    let mut max_pd = level.pow(3);
    debug_assert!(base
        .product_degrees()
        .values()
        .iter()
        .all(|pd| pd <= &num_bigint::BigUint::from(max_pd)));

    while seq.len() < 2 * n {
        let s = level;
        let pattern = kind.pattern(s);
        for (i, &p) in pattern.iter().enumerate() {
            if seq[1 + i] != p {
                return Err(Error::Internal(format!(
                    "anchor window corrupted at level {s}"
                )));
            }
        }
        let block = kind.insert_block(s);
        debug_assert_eq!(block[0], seq[5]);
        debug_assert_eq!(*block.last().expect("non-empty"), seq[5]);

        let new_pds = kind.new_pds(s);
        let mut sorted = new_pds.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != new_pds.len() || sorted[0] <= max_pd {
            return Err(Error::Internal(format!(
                "extension at level {s} does not produce fresh product degrees"
            )));
        }

        seq.splice(5..6, block);
        seq.rotate_left(4); // anchor moved to index 5; bring it back to 1
        level = s + 1;
        max_pd = level.pow(3);

        if verify_each_step {
            let partial = CycleSequence::new(seq.clone())?.decode()?;
            if !partial.is_product_irregular() {
                return Err(Error::Internal(format!(
                    "extension step to length {} broke irregularity",
                    seq.len() / 2
                )));
            }
        }
    }

    let labeling = CycleSequence::new(seq)?.decode()?;
    if !labeling.is_product_irregular() {
        return Err(Error::Internal("extension output failed verification".into()));
    }
    Ok(labeling)
}

/// Product-irregular labeling of the n-cycle with strength at most
/// max(3, ceil(n/3)), built by repeated 3-vertex extensions.
pub fn label_cycle_div3(n: usize) -> Result<TotalLabeling> {
    if n < 7 {
        return Err(Error::InvalidParameter(format!(
            "3-step extension needs n >= 7, got {n}"
        )));
    }
    let labeling = extend_cycle(Extension::ByThree, n, false)?;
    debug_assert!(labeling.strength() <= 3.max(n.div_ceil(3) as u64));
    Ok(labeling)
}

/// Product-irregular labeling of the n-cycle with strength at most
/// max(4, ceil(n/4)), built by repeated 4-vertex extensions.
pub fn label_cycle_div4(n: usize) -> Result<TotalLabeling> {
    if n < 13 {
        return Err(Error::InvalidParameter(format!(
            "4-step extension needs n >= 13, got {n}"
        )));
    }
    let labeling = extend_cycle(Extension::ByFour, n, false)?;
    debug_assert!(labeling.strength() <= 4.max(n.div_ceil(4) as u64));
    Ok(labeling)
}

#[cfg(test)]
pub(crate) fn extend_cycle_fully_checked(by_four: bool, n: usize) -> Result<TotalLabeling> {
    extend_cycle(
        if by_four { Extension::ByFour } else { Extension::ByThree },
        n,
        true,
    )
}

// ---------------------------------------------------------------------
// prime-chain construction

/// Resolved parameters of the prime-chain construction.
#[derive(Debug, Clone, Serialize)]
pub struct ChainPlan {
    /// Target cycle length.
    pub n: usize,
    /// Strength budget the plan was derived from.
    pub budget: u64,
    /// Chain prime p; residue chains live in Z_p.
    pub prime: u64,
    /// Step values q of the chains in use, ascending, each below p/2.
    pub steps: Vec<u64>,
    /// Number of multichain copies laid around the cycle.
    pub copies: usize,
    /// Edges created by doubling to reach the exact length.
    pub leftover: usize,
    /// Residue-to-label substitution: index a maps to 1 for a=0 and to
    /// the a-th prime otherwise.
    pub substitution: Vec<u64>,
    /// One prime per copy, all larger than every edge label, used to
    /// separate vertices that share a product degree.
    pub distinguishing: Vec<u64>,
}

impl ChainPlan {
    /// Edges laid per copy before doubling.
    pub fn copy_len(&self) -> usize {
        self.steps.len() * self.prime as usize
    }
}

// Plan arithmetic for a candidate budget; returns None when the budget
// cannot cover n.
fn try_plan(n: usize, budget: u64) -> Option<ChainPlan> {
    let pis = primes::prime_count(budget);
    let cap = 2 * pis as u64 / 3;
    if cap < 3 {
        return None;
    }
    let p = primes::greatest_prime_le(cap).ok()?;
    let pu = p as usize;
    let copies = (2 * n).div_ceil(pu * (pu - 1));
    if copies > pis.div_ceil(3) {
        return None;
    }
    let chains = ((pu - 1) / 2).min(n / (copies * pu));
    if chains == 0 {
        return None;
    }
    let leftover = n - copies * chains * pu;
    debug_assert!(leftover < copies * pu);

    let substitution: Vec<u64> = (0..pu).map(primes::nth_indexed_label).collect();
    let distinguishing: Vec<u64> = (pu..pu + copies).map(primes::nth_indexed_label).collect();
    // p and the copy cap together keep every label index below pi(budget),
    // so the strength never exceeds the budget.
    debug_assert!(distinguishing.iter().all(|&q| q <= budget));

    Some(ChainPlan {
        n,
        budget,
        prime: p,
        steps: (1..=chains as u64).collect(),
        copies,
        leftover,
        substitution,
        distinguishing,
    })
}

/// Smallest strength budget for which the chain construction reaches an
/// n-cycle, or None when no budget does (tiny n only).
pub fn minimal_chain_budget(n: usize) -> Option<u64> {
    if n < 3 {
        return None;
    }
    let mut idx = 5; // need pi(s) >= 5 before the chain prime reaches 3
    loop {
        let s = primes::nth_indexed_label(idx);
        if try_plan(n, s).is_some() {
            return Some(s);
        }
        if 2 * idx as u64 / 3 > 2 * n as u64 + 4 {
            return None;
        }
        idx += 1;
    }
}

/// The chain plan for a budget, or the capacity error naming the minimal
/// feasible budget.
pub fn chain_plan(n: usize, budget: u64) -> Result<ChainPlan> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    match try_plan(n, budget) {
        Some(plan) => Ok(plan),
        None => match minimal_chain_budget(n) {
            Some(minimal) => Err(Error::ChainCapacity { n, budget, minimal }),
            None => Err(Error::ChainInfeasible(n)),
        },
    }
}

/// Residue sequence of the multichain over Z_p with the given number of
/// chains: chains q = 1, 2, ... concatenated at their shared zeros. Every
/// unordered pair of adjacent residues occurs at most once per traversal.
pub fn multichain_residues(p: u64, chains: usize) -> Vec<u64> {
    debug_assert!(p >= 3 && (chains as u64) < p);
    let mut out = Vec::with_capacity(chains * p as usize);
    for q in 1..=chains as u64 {
        out.push(0);
        for i in 1..p {
            out.push(i * q % p);
        }
    }
    out
}

/// Edge labels of one multichain copy after substitution, before any
/// doubling: the stage the no-square property is asserted on.
pub fn multichain_labels(plan: &ChainPlan) -> Vec<u64> {
    multichain_residues(plan.prime, plan.steps.len())
        .into_iter()
        .map(|r| plan.substitution[r as usize])
        .collect()
}

/// Prime-chain labeling of the n-cycle within the given strength budget.
///
/// Pipeline: residue chains -> multichain -> substitution through the
/// indexed label sequence -> `copies` concatenated copies closed into a
/// cycle -> `leftover` edges doubled in the last chains of the copies ->
/// distinguishing vertex primes for every group of vertices sharing a
/// product degree.
pub fn label_cycle_prime_chain(n: usize, budget: u64) -> Result<(TotalLabeling, ChainPlan)> {
    let plan = chain_plan(n, budget)?;
    let labeling = build_from_plan(&plan)?;
    Ok((labeling, plan))
}

fn build_from_plan(plan: &ChainPlan) -> Result<TotalLabeling> {
    let n = plan.n;
    let p = plan.prime as usize;
    let chains = plan.steps.len();
    let copies = plan.copies;
    let t = plan.leftover;
    let copy_len = chains * p;

    let block = multichain_labels(plan);
    debug_assert_eq!(block.len(), copy_len);

    // Edge labels in cycle order; doubled edges sit at the tail of each
    // copy's last chain, lexicographically last first, spread over the
    // copies as evenly as possible.
    let mut edge_labels: Vec<u64> = Vec::with_capacity(n);
    for copy in 0..copies {
        let quota = t / copies + usize::from(copy < t % copies);
        debug_assert!(quota <= p);
        let first_doubled = copy_len - quota;
        for (pos, &lab) in block.iter().enumerate() {
            edge_labels.push(lab);
            if pos >= first_doubled {
                edge_labels.push(lab);
            }
        }
    }
    if edge_labels.len() != n {
        return Err(Error::Internal(format!(
            "chain assembly produced {} edges for n={n}",
            edge_labels.len()
        )));
    }

    // Vertex i sits between cycle edges i-1 and i.
    let pd_base = |i: usize| -> u128 {
        edge_labels[(i + n - 1) % n] as u128 * edge_labels[i] as u128
    };

    // Group vertices by their pre-step-6 product degree, ascending, and
    // separate group members with the distinguishing primes; the member
    // of least index keeps vertex label 1.
    let mut groups: std::collections::BTreeMap<u128, Vec<usize>> = std::collections::BTreeMap::new();
    for v in 0..n {
        groups.entry(pd_base(v)).or_default().push(v);
    }
    let mut vertex_labels = vec![1u64; n];
    for members in groups.values() {
        if members.len() > plan.copies {
            return Err(Error::Internal(format!(
                "product degree shared by {} vertices exceeds copy count {}",
                members.len(),
                plan.copies
            )));
        }
        for (slot, &v) in members.iter().enumerate().skip(1) {
            vertex_labels[v] = plan.distinguishing[slot - 1];
        }
    }

    let graph = make_cycle(n)?;
    let mut canonical = vec![0u64; n];
    for i in 0..n {
        let idx = graph.edge_index(i, (i + 1) % n).expect("cycle edge");
        canonical[idx] = edge_labels[i];
    }
    let labeling = TotalLabeling::new(graph, vertex_labels, canonical)?;
    if !labeling.is_product_irregular() {
        return Err(Error::Internal("chain labeling failed verification".into()));
    }
    debug_assert!(labeling.strength() <= plan.budget);
    Ok(labeling)
}

/// Chain labeling with an explicitly chosen chain prime and copy count,
/// used by the grid composer to respect pre-carved prime pools.
pub fn label_cycle_chain_with_prime(n: usize, prime: u64, copies: usize) -> Result<(TotalLabeling, ChainPlan)> {
    if prime < 3 || !primes::is_prime(prime) {
        return Err(Error::InvalidParameter(format!("chain prime must be a prime >= 3, got {prime}")));
    }
    if copies == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    let pu = prime as usize;
    let chains = ((pu - 1) / 2).min(n / (copies * pu));
    if chains == 0 {
        return Err(Error::ChainInfeasible(n));
    }
    let leftover = n - copies * chains * pu;
    if leftover >= copies * pu {
        return Err(Error::ChainInfeasible(n));
    }
    let substitution: Vec<u64> = (0..pu).map(primes::nth_indexed_label).collect();
    let distinguishing: Vec<u64> = (pu..pu + copies).map(primes::nth_indexed_label).collect();
    let plan = ChainPlan {
        n,
        budget: *distinguishing.last().expect("at least one copy"),
        prime,
        steps: (1..=chains as u64).collect(),
        copies,
        leftover,
        substitution,
        distinguishing,
    };
    let labeling = build_from_plan(&plan)?;
    Ok((labeling, plan))
}

// ---------------------------------------------------------------------
// strategy dispatch and derivations

/// Best verified labeling of the n-cycle among the applicable
/// constructions (table, 4-step, 3-step, prime chain).
pub fn auto_label_cycle(n: usize) -> Result<TotalLabeling> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut best: Option<TotalLabeling> = None;
    let mut consider = |candidate: TotalLabeling| {
        let better = match &best {
            Some(b) => candidate.strength() < b.strength(),
            None => true,
        };
        if better {
            best = Some(candidate);
        }
    };

    if n <= 16 {
        consider(label_cycle_small(n)?);
    }
    if n >= 13 {
        consider(label_cycle_div4(n)?);
    }
    if n >= 7 {
        consider(label_cycle_div3(n)?);
    }
    if n >= 17 {
        if let Some(budget) = minimal_chain_budget(n) {
            consider(label_cycle_prime_chain(n, budget)?.0);
        }
    }
    best.ok_or_else(|| Error::Internal("no cycle construction applied".into()))
}

/// Product-irregular path labeling: for n >= 3 a cycle labeling with a
/// 1-labeled edge removed (product degrees are unchanged), for n = 2 the
/// forced smallest case.
pub fn label_path(n: usize) -> Result<TotalLabeling> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("path needs n >= 2, got {n}")));
    }
    if n == 2 {
        return TotalLabeling::new(make_path(2)?, vec![1, 2], vec![1]);
    }
    cycle_to_path(&auto_label_cycle(n)?)
}

/// Deletes a 1-labeled edge of a cycle labeling; no product degree
/// changes, so the resulting path labeling is product-irregular with the
/// same strength and pd multiset.
pub fn cycle_to_path(cycle: &TotalLabeling) -> Result<TotalLabeling> {
    let n = cycle.graph().vertex_count();
    let cut = (0..n)
        .find(|&i| cycle.edge_label(i, (i + 1) % n) == Some(1))
        .ok_or_else(|| Error::Internal("cycle labeling has no 1-labeled edge".into()))?;

    let graph = make_path(n)?;
    let vertex_labels: Vec<u64> = (0..n).map(|j| cycle.vertex_label((cut + 1 + j) % n)).collect();
    let mut edge_labels = vec![0u64; n - 1];
    for j in 0..n - 1 {
        let a = (cut + 1 + j) % n;
        let lab = cycle.edge_label(a, (a + 1) % n).expect("cycle edge");
        edge_labels[graph.edge_index(j, j + 1).expect("path edge")] = lab;
    }
    let labeling = TotalLabeling::new(graph, vertex_labels, edge_labels)?;
    debug_assert_eq!(
        labeling.product_degrees().sorted(),
        cycle.product_degrees().sorted()
    );
    if !labeling.is_product_irregular() {
        return Err(Error::Internal("path labeling failed verification".into()));
    }
    Ok(labeling)
}

/// Labels a graph through a supplied Hamiltonian cycle (closed walk) or
/// Hamiltonian path: the walk edges carry the cycle/path labeling, every
/// other edge carries 1, so the product degrees coincide with the walk's.
/// The witness is validated, never searched.
pub fn label_hamiltonian(g: &Graph, walk: &[usize]) -> Result<TotalLabeling> {
    let n = g.vertex_count();
    if walk.len() != n {
        return Err(Error::InvalidWitness(format!(
            "walk visits {} of {} vertices",
            walk.len(),
            n
        )));
    }
    if n < 3 {
        return Err(Error::InvalidWitness("need at least 3 vertices".into()));
    }
    let mut seen = vec![false; n];
    for &v in walk {
        if v >= n || seen[v] {
            return Err(Error::InvalidWitness(format!("vertex {v} repeated or out of range")));
        }
        seen[v] = true;
    }
    for w in walk.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::InvalidWitness(format!(
                "({},{}) is not an edge",
                w[0], w[1]
            )));
        }
    }
    let closed = g.has_edge(walk[n - 1], walk[0]);

    let source = if closed { auto_label_cycle(n)? } else { label_path(n)? };

    let mut vertex_labels = vec![0u64; n];
    for (i, &v) in walk.iter().enumerate() {
        vertex_labels[v] = source.vertex_label(i);
    }
    let mut edge_labels = vec![1u64; g.edge_count()];
    let walk_edges = if closed { n } else { n - 1 };
    for i in 0..walk_edges {
        let (u, v) = (walk[i], walk[(i + 1) % n]);
        let lab = if closed {
            source.edge_label(i, (i + 1) % n)
        } else {
            source.edge_label(i, i + 1)
        }
        .expect("source edge");
        edge_labels[g.edge_index(u, v).expect("validated walk edge")] = lab;
    }
    let labeling = TotalLabeling::new(g.clone(), vertex_labels, edge_labels)?;
    if !labeling.is_product_irregular() {
        return Err(Error::Internal("walk-derived labeling failed verification".into()));
    }
    Ok(labeling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete;
    use num_bigint::BigUint;

    #[test]
    fn small_table_strengths() {
        assert_eq!(label_cycle_small(4).unwrap().strength(), 2);
        assert_eq!(label_cycle_small(9).unwrap().strength(), 3);
        assert_eq!(label_cycle_small(16).unwrap().strength(), 4);
        assert!(label_cycle_small(17).is_err());
    }

    fn contains_window(l: &TotalLabeling, window: &[u64]) -> bool {
        let seq = CycleSequence::encode(l).unwrap();
        let entries = seq.entries();
        let len = entries.len();
        (0..len).any(|k| window.iter().enumerate().all(|(i, &w)| entries[(k + i) % len] == w))
    }

    #[test]
    fn div3_examples() {
        let l = label_cycle_div3(9).unwrap();
        assert_eq!(l.strength(), 3);

        let l = label_cycle_div3(12).unwrap();
        assert_eq!(l.strength(), 4);
        assert!(contains_window(&l, &[3, 3, 4, 4, 4, 4, 3]));

        let l = label_cycle_div3(3000).unwrap();
        assert_eq!(l.strength(), 1000);
        assert!(label_cycle_div3(6).is_err());
    }

    #[test]
    fn div4_examples() {
        let l = label_cycle_div4(16).unwrap();
        assert_eq!(l.strength(), 4);

        let l = label_cycle_div4(20).unwrap();
        assert_eq!(l.strength(), 5);
        // the middle inserted vertex reaches (s+1)^3 = 125 for s = 4
        assert!(l
            .product_degrees()
            .values()
            .iter()
            .any(|pd| *pd == BigUint::from(125u32)));
        assert!(contains_window(&l, &[4, 5, 5, 3, 5, 5, 5, 4, 4]));

        let l = label_cycle_div4(4000).unwrap();
        assert_eq!(l.strength(), 1000);
        assert!(label_cycle_div4(12).is_err());
    }

    #[test]
    fn extensions_verify_at_every_step() {
        extend_cycle_fully_checked(false, 120).unwrap();
        extend_cycle_fully_checked(true, 121).unwrap();
    }

    #[test]
    fn multichain_examples() {
        // p = 5 with chains q = 1, 2 merges into
        // 0,1,2,3,4,0,2,4,1,3 and substitutes to 1,2,3,5,7,1,3,7,2,5.
        assert_eq!(multichain_residues(5, 2), vec![0, 1, 2, 3, 4, 0, 2, 4, 1, 3]);
        let plan = ChainPlan {
            n: 10,
            budget: 7,
            prime: 5,
            steps: vec![1, 2],
            copies: 1,
            leftover: 0,
            substitution: vec![1, 2, 3, 5, 7],
            distinguishing: vec![11],
        };
        let labels = multichain_labels(&plan);
        assert_eq!(labels, vec![1, 2, 3, 5, 7, 1, 3, 7, 2, 5]);
        // adjacent products around the closed cycle are all distinct
        let products: Vec<u64> = (0..labels.len())
            .map(|i| labels[i] * labels[(i + 1) % labels.len()])
            .collect();
        assert_eq!(products, vec![2, 6, 15, 35, 7, 3, 21, 14, 10, 5]);
    }

    #[test]
    fn pair_uniqueness_within_multichain() {
        for p in [3u64, 5, 7, 11, 13] {
            let chains = ((p - 1) / 2) as usize;
            let seq = multichain_residues(p, chains);
            let len = seq.len();
            let mut seen = std::collections::HashSet::new();
            for i in 0..len {
                let (a, b) = (seq[i], seq[(i + 1) % len]);
                assert_ne!(a, b, "adjacent residues equal for p={p}");
                let pair = (a.min(b), a.max(b));
                assert!(seen.insert(pair), "pair {pair:?} repeats for p={p}");
            }
        }
    }

    #[test]
    fn chain_plan_shapes() {
        let plan = chain_plan(78, 71).unwrap();
        assert_eq!(plan.prime, 13);
        assert_eq!(plan.copies, 1);
        assert_eq!(plan.steps.len(), 6);
        assert_eq!(plan.leftover, 0);

        // capacity error names the minimal feasible budget
        match chain_plan(1000, 11) {
            Err(Error::ChainCapacity { minimal, .. }) => {
                assert!(chain_plan(1000, minimal).is_ok());
                if minimal > 2 {
                    assert!(chain_plan(1000, minimal - 1).is_err());
                }
            }
            other => panic!("expected capacity error, got {other:?}"),
        }

        // n = 4 admits no plan at all
        assert!(matches!(chain_plan(4, 1000), Err(Error::ChainInfeasible(4))));
    }

    #[test]
    fn chain_labelings_verify() {
        for n in [30usize, 78, 100, 1000] {
            let budget = minimal_chain_budget(n).unwrap();
            let (l, plan) = label_cycle_prime_chain(n, budget).unwrap();
            assert!(l.is_product_irregular());
            assert!(l.strength() <= budget);
            assert_eq!(plan.n, n);
        }
    }

    #[test]
    fn chain_doubling_duplicates_copies() {
        // two copies of the p=5, q in {1,2} multichain fill C20 exactly;
        // before step 6 every product degree appears exactly twice.
        let plan = chain_plan(20, 23).unwrap();
        assert_eq!((plan.prime, plan.copies, plan.steps.len(), plan.leftover), (5, 2, 2, 0));
        assert_eq!(plan.distinguishing, vec![11, 13]);
        let labels = multichain_labels(&plan);
        let mut counts = std::collections::HashMap::new();
        let doubled: Vec<u64> = labels.iter().chain(labels.iter()).copied().collect();
        for i in 0..doubled.len() {
            let prod = doubled[i] * doubled[(i + 1) % doubled.len()];
            *counts.entry(prod).or_insert(0u32) += 1;
        }
        assert!(counts.values().all(|&c| c == 2));

        let (l, _) = label_cycle_prime_chain(20, 23).unwrap();
        assert!(l.is_product_irregular());
    }

    #[test]
    fn no_squares_before_doubling() {
        for n in [78usize, 200, 1000] {
            let plan = chain_plan(n, minimal_chain_budget(n).unwrap()).unwrap();
            let labels = multichain_labels(&plan);
            let len = labels.len();
            for i in 0..len {
                let prod = labels[i] as u128 * labels[(i + 1) % len] as u128;
                let r = (prod as f64).sqrt() as u128;
                for cand in r.saturating_sub(1)..=r + 1 {
                    assert_ne!(cand * cand, prod, "square product degree before doubling");
                }
            }
        }
    }

    #[test]
    fn auto_picks_the_best() {
        assert_eq!(auto_label_cycle(10).unwrap().strength(), 3);
        assert_eq!(auto_label_cycle(100).unwrap().strength(), 25);
        let l = auto_label_cycle(2000).unwrap();
        assert!(l.strength() < 500);
        assert!(l.is_product_irregular());
    }

    #[test]
    fn path_labelings() {
        let l = label_path(2).unwrap();
        let pds = l.product_degrees();
        assert_eq!(pds.values(), &[BigUint::from(1u32), BigUint::from(2u32)]);

        let l = label_path(3).unwrap();
        let mut pds: Vec<BigUint> = l.product_degrees().values().to_vec();
        pds.sort();
        assert_eq!(pds, vec![BigUint::from(2u32), BigUint::from(4u32), BigUint::from(8u32)]);

        let l = label_path(50).unwrap();
        assert!(l.is_product_irregular());
        assert!(l.strength() <= 13);
    }

    #[test]
    fn hamiltonian_on_k4() {
        let k4 = make_complete(4).unwrap();
        let l = label_hamiltonian(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(l.strength(), 2);
        // the chords carry label 1
        assert_eq!(l.edge_label(0, 2), Some(1));
        assert_eq!(l.edge_label(1, 3), Some(1));
    }

    #[test]
    fn hamiltonian_on_cycle_is_identity_case() {
        let c5 = make_cycle(5).unwrap();
        let l = label_hamiltonian(&c5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(l.strength(), label_cycle_small(5).unwrap().strength());
    }

    #[test]
    fn hamiltonian_path_on_petersen() {
        // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
            edges.push((i, i + 5));
        }
        let petersen = Graph::new(10, edges).unwrap();
        let walk = [0usize, 1, 2, 3, 4, 9, 6, 8, 5, 7];
        let l = label_hamiltonian(&petersen, &walk).unwrap();
        assert!(l.is_product_irregular());
        assert_eq!(l.strength(), label_path(10).unwrap().strength());
    }

    #[test]
    fn hamiltonian_rejects_bad_witness() {
        let k4 = make_complete(4).unwrap();
        assert!(label_hamiltonian(&k4, &[0, 1, 2]).is_err());
        assert!(label_hamiltonian(&k4, &[0, 1, 1, 2]).is_err());
        let c5 = make_cycle(5).unwrap();
        assert!(label_hamiltonian(&c5, &[0, 2, 4, 1, 3]).is_err());
    }
}
