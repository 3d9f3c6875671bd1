//! Composition of factor labelings into grid and toroidal-grid labelings.
//!
//! If every factor labeling uses only 1 and primes, and the prime
//! supports of the factors are pairwise disjoint, then labeling each
//! product edge with the corresponding factor edge label and each product
//! vertex with the product of its factor vertex labels yields a
//! product-irregular labeling: the product degree of a composite vertex
//! factors as the product of its factor product degrees, and unique
//! factorization separates the factors again. The verifier confirms every
//! composition independently.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cycles::{auto_label_cycle, cycle_to_path, label_cycle_chain_with_prime, label_path};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, make_cycle, make_path, Graph, VertexIndexer};
use crate::labeling::TotalLabeling;
use crate::primes;

// ---------------------------------------------------------------------
// prime-support remapping

fn prime_support(l: &TotalLabeling) -> Result<BTreeSet<u64>> {
    let mut support = BTreeSet::new();
    for &w in l.vertex_labels().iter().chain(l.edge_labels()) {
        if w == 1 {
            continue;
        }
        if !primes::is_prime(w) {
            return Err(Error::UnsupportedLabeling(w));
        }
        support.insert(w);
    }
    Ok(support)
}

fn remap_labels(l: &TotalLabeling, mapping: &std::collections::BTreeMap<u64, u64>) -> TotalLabeling {
    let apply = |w: u64| mapping.get(&w).copied().unwrap_or(w);
    let vertex_labels = l.vertex_labels().iter().map(|&w| apply(w)).collect();
    let edge_labels = l.edge_labels().iter().map(|&w| apply(w)).collect();
    TotalLabeling::new(l.graph().clone(), vertex_labels, edge_labels)
        .expect("remapping preserves shape and positivity")
}

/// Injectively replaces the i-th smallest prime label with `pool[i]`,
/// fixing 1. Distinctness of product degrees is preserved by unique
/// factorization; the output is verified all the same.
pub fn remap_prime_support(l: &TotalLabeling, pool: &[u64]) -> Result<TotalLabeling> {
    let support = prime_support(l)?;
    if pool.len() < support.len() {
        return Err(Error::PoolTooSmall {
            need: support.len(),
            have: pool.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for &q in &pool[..support.len()] {
        if !primes::is_prime(q) {
            return Err(Error::InvalidParameter(format!("pool entry {q} is not prime")));
        }
        if !seen.insert(q) {
            return Err(Error::InvalidParameter(format!("pool entry {q} repeats")));
        }
    }
    let mapping: std::collections::BTreeMap<u64, u64> =
        support.iter().copied().zip(pool.iter().copied()).collect();
    let out = remap_labels(l, &mapping);
    if !out.is_product_irregular() {
        return Err(Error::InvalidParameter(
            "input labeling is not product-irregular".into(),
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// budget planning

/// Feasible prime-chain parameters for one dimension.
#[derive(Debug, Clone, Serialize)]
pub struct DimPlan {
    /// Chain prime; also the number of edge labels including 1.
    pub prime: u64,
    /// Multichain copies; also the vertex-prime allowance.
    pub copies: usize,
}

/// Per-dimension label budgets and the disjoint prime pools carved from
/// them. The targets follow the exponent n^(k/(2k+1)) for edges and
/// n^(1/(2k+1)) for vertices; the working plans bump the edge target up
/// to the nearest feasible chain prime.
#[derive(Debug, Clone, Serialize)]
pub struct FactorBudget {
    pub dims: Vec<usize>,
    pub toroidal: bool,
    /// floor(n_j^(k/(2k+1))) per dimension, by exact integer root.
    pub target_edge_labels: Vec<u64>,
    /// ceil(n_j^(1/(2k+1))) per dimension, by exact integer root.
    pub target_vertex_labels: Vec<u64>,
    pub plans: Vec<DimPlan>,
    /// Vertex pools come first and take the smallest primes.
    pub vertex_pools: Vec<Vec<u64>>,
    pub edge_pools: Vec<Vec<u64>>,
}

impl FactorBudget {
    /// Sum over dimensions of edge primes plus vertex primes allowed by
    /// the working plans; composed labelings never use more.
    pub fn total_primes(&self) -> usize {
        self.plans
            .iter()
            .map(|p| (p.prime as usize - 1) + p.copies)
            .sum()
    }
}

fn floor_root_pow(n: u64, num: u32, den: u32) -> u64 {
    // floor(n^(num/den)) = floor((n^num)^(1/den)), exactly
    let v = num_bigint::BigUint::from(n).pow(num).nth_root(den);
    u64::try_from(&v).expect("root fits u64")
}

fn ceil_root(n: u64, den: u32) -> u64 {
    let r = floor_root_pow(n, 1, den);
    if num_bigint::BigUint::from(r).pow(den) == num_bigint::BigUint::from(n) {
        r
    } else {
        r + 1
    }
}

fn feasible_dim_plan(n: usize, start: u64) -> Result<DimPlan> {
    let mut p = primes::smallest_prime_ge(start.max(3));
    while p as usize <= n {
        let pu = p as usize;
        let copies = (2 * n).div_ceil(pu * (pu - 1));
        if copies * pu <= n {
            return Ok(DimPlan { prime: p, copies });
        }
        p = primes::smallest_prime_ge(p + 1);
    }
    Err(Error::ChainInfeasible(n))
}

/// Chooses per-dimension budgets and carves pairwise-disjoint prime
/// pools, smallest primes to the vertex roles.
pub fn plan_grid_budgets(dims: &[usize], toroidal: bool) -> Result<FactorBudget> {
    if dims.is_empty() {
        return Err(Error::InvalidParameter("no dimensions".into()));
    }
    if dims.iter().any(|&d| d < 3) {
        return Err(Error::InvalidParameter(format!(
            "grid dimensions must be at least 3, got {dims:?}"
        )));
    }
    let k = dims.len() as u32;
    let mut target_edge_labels = Vec::new();
    let mut target_vertex_labels = Vec::new();
    let mut plans = Vec::new();
    for &n in dims {
        let target_e = floor_root_pow(n as u64, k, 2 * k + 1);
        let target_v = ceil_root(n as u64, 2 * k + 1);
        target_edge_labels.push(target_e);
        target_vertex_labels.push(target_v);
        plans.push(feasible_dim_plan(n, target_e)?);
    }

    // vertex pools first, then edge pools, all from the ascending primes
    let mut next_index = 1usize;
    let mut take = |count: usize| -> Vec<u64> {
        let pool: Vec<u64> = (next_index..next_index + count)
            .map(primes::nth_indexed_label)
            .collect();
        next_index += count;
        pool
    };
    let vertex_pools: Vec<Vec<u64>> = plans.iter().map(|p| take(p.copies)).collect();
    let edge_pools: Vec<Vec<u64>> = plans.iter().map(|p| take(p.prime as usize - 1)).collect();

    Ok(FactorBudget {
        dims: dims.to_vec(),
        toroidal,
        target_edge_labels,
        target_vertex_labels,
        plans,
        vertex_pools,
        edge_pools,
    })
}

// ---------------------------------------------------------------------
// composition

/// Combines factor labelings over pairwise-disjoint prime supports into
/// a labeling of their Cartesian product: dimension-j edges inherit the
/// factor-j edge label, composite vertices take the product of their
/// factor vertex labels.
pub fn compose_product_labeling(
    factors: &[TotalLabeling],
    product: &Graph,
    indexer: &VertexIndexer,
) -> Result<TotalLabeling> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("no factors".into()));
    }
    if factors.len() != indexer.dims().len()
        || factors
            .iter()
            .zip(indexer.dims())
            .any(|(f, &d)| f.graph().vertex_count() != d)
        || product.vertex_count() != indexer.len()
    {
        return Err(Error::ShapeMismatch(
            "factors do not match the product indexer".into(),
        ));
    }

    let supports: Vec<BTreeSet<u64>> = factors.iter().map(prime_support).collect::<Result<_>>()?;
    for i in 0..supports.len() {
        for j in i + 1..supports.len() {
            if let Some(&q) = supports[i].intersection(&supports[j]).next() {
                return Err(Error::OverlappingSupports(q));
            }
        }
    }

    let n = product.vertex_count();
    let mut vertex_labels = Vec::with_capacity(n);
    for v in 0..n {
        let coords = indexer.coords(v);
        let mut w: u64 = 1;
        for (f, &c) in factors.iter().zip(&coords) {
            w = w
                .checked_mul(f.vertex_label(c))
                .ok_or_else(|| Error::Internal("composite vertex label overflow".into()))?;
        }
        vertex_labels.push(w);
    }

    let mut edge_labels = Vec::with_capacity(product.edge_count());
    for &(a, b) in product.edges() {
        let ca = indexer.coords(a);
        let cb = indexer.coords(b);
        let mut diff = (0..factors.len()).filter(|&j| ca[j] != cb[j]);
        let j = diff
            .next()
            .ok_or_else(|| Error::ShapeMismatch("product edge with equal coordinates".into()))?;
        if diff.next().is_some() {
            return Err(Error::ShapeMismatch(
                "product edge differs in more than one coordinate".into(),
            ));
        }
        let lab = factors[j]
            .edge_label(ca[j], cb[j])
            .ok_or_else(|| Error::ShapeMismatch(format!("missing factor edge in dimension {j}")))?;
        edge_labels.push(lab);
    }

    let labeling = TotalLabeling::new(product.clone(), vertex_labels, edge_labels)?;
    if !labeling.is_product_irregular() {
        return Err(Error::Internal(
            "composition produced colliding product degrees".into(),
        ));
    }
    Ok(labeling)
}

// ---------------------------------------------------------------------
// end-to-end grid pipeline

/// A verified grid or toroidal-grid labeling with its budget plan.
#[derive(Debug, Clone)]
pub struct GridLabeling {
    pub labeling: TotalLabeling,
    pub graph: Graph,
    pub indexer: VertexIndexer,
    /// Remapped factor labelings, one per dimension.
    pub factors: Vec<TotalLabeling>,
    pub budget: FactorBudget,
    /// Largest edge label over all factors.
    pub max_edge_label: u64,
    /// Product of the per-factor maximum vertex labels; the strength
    /// never exceeds max(max_edge_label, vertex_label_bound).
    pub vertex_label_bound: u64,
    /// Distinct primes used across all factors.
    pub used_primes: usize,
}

// Splits a factor's primes into vertex-role (appears on some vertex) and
// edge-only, and checks both fit the carved pools.
fn role_split(l: &TotalLabeling) -> Result<(BTreeSet<u64>, BTreeSet<u64>)> {
    let support = prime_support(l)?;
    let vertex_role: BTreeSet<u64> = l
        .vertex_labels()
        .iter()
        .copied()
        .filter(|&w| w != 1)
        .collect();
    let edge_only: BTreeSet<u64> = support.difference(&vertex_role).copied().collect();
    Ok((vertex_role, edge_only))
}

fn remap_into_pools(
    l: &TotalLabeling,
    vertex_pool: &[u64],
    edge_pool: &[u64],
) -> Result<TotalLabeling> {
    let (vertex_role, edge_only) = role_split(l)?;
    if vertex_role.len() > vertex_pool.len() || edge_only.len() > edge_pool.len() {
        return Err(Error::PoolTooSmall {
            need: vertex_role.len() + edge_only.len(),
            have: vertex_pool.len() + edge_pool.len(),
        });
    }
    // Build the positional pool matching the ascending support order.
    let mut target = Vec::new();
    let mut vi = 0;
    let mut ei = 0;
    for q in prime_support(l)? {
        if vertex_role.contains(&q) {
            target.push(vertex_pool[vi]);
            vi += 1;
        } else {
            target.push(edge_pool[ei]);
            ei += 1;
        }
    }
    remap_prime_support(l, &target)
}

/// Labels the grid (product of paths) or toroidal grid (product of
/// cycles) with the given dimensions: plan budgets, label each factor,
/// remap onto disjoint prime pools, compose, verify.
pub fn label_grid(dims: &[usize], toroidal: bool) -> Result<GridLabeling> {
    let budget = plan_grid_budgets(dims, toroidal)?;

    if dims.len() == 1 {
        let n = dims[0];
        let (labeling, graph) = if toroidal {
            (auto_label_cycle(n)?, make_cycle(n)?)
        } else {
            (label_path(n)?, make_path(n)?)
        };
        let max_edge_label = labeling.edge_labels().iter().copied().max().unwrap_or(1);
        let vertex_label_bound = labeling.vertex_labels().iter().copied().max().unwrap_or(1);
        let used = prime_support(&labeling).map(|s| s.len()).unwrap_or(0);
        let indexer = VertexIndexer::new(vec![n])?;
        return Ok(GridLabeling {
            factors: vec![labeling.clone()],
            labeling,
            graph,
            indexer,
            budget,
            max_edge_label,
            vertex_label_bound,
            used_primes: used,
        });
    }

    let mut factors = Vec::new();
    for (j, &n) in dims.iter().enumerate() {
        let plan = &budget.plans[j];
        let preferred = if toroidal {
            auto_label_cycle(n)?
        } else {
            label_path(n)?
        };
        let fits = role_split(&preferred)
            .map(|(vr, eo)| {
                vr.len() <= budget.vertex_pools[j].len() && eo.len() <= budget.edge_pools[j].len()
            })
            .unwrap_or(false);
        let raw = if fits {
            preferred
        } else {
            // fall back to the chain labeler shaped by the plan; its
            // edge support is exactly prime-1 primes and its vertex
            // support stays below the copy count
            let chain = label_cycle_chain_with_prime(n, plan.prime, plan.copies)?.0;
            if toroidal {
                chain
            } else {
                cycle_to_path(&chain)?
            }
        };
        factors.push(remap_into_pools(
            &raw,
            &budget.vertex_pools[j],
            &budget.edge_pools[j],
        )?);
    }

    let factor_graphs: Vec<Graph> = dims
        .iter()
        .map(|&n| if toroidal { make_cycle(n) } else { make_path(n) })
        .collect::<Result<_>>()?;
    let (graph, indexer) = cartesian_product(&factor_graphs)?;
    let labeling = compose_product_labeling(&factors, &graph, &indexer)?;

    let max_edge_label = factors
        .iter()
        .flat_map(|f| f.edge_labels().iter().copied())
        .max()
        .unwrap_or(1);
    let vertex_label_bound = factors
        .iter()
        .map(|f| f.vertex_labels().iter().copied().max().unwrap_or(1))
        .product();
    let used_primes: usize = factors
        .iter()
        .map(|f| prime_support(f).map(|s| s.len()).unwrap_or(0))
        .sum();

    debug_assert!(labeling.strength() <= max_edge_label.max(vertex_label_bound));
    debug_assert!(used_primes <= budget.total_primes());

    Ok(GridLabeling {
        labeling,
        graph,
        indexer,
        factors,
        budget,
        max_edge_label,
        vertex_label_bound,
        used_primes,
    })
}
