//! Lower bounds on the total vertex product irregularity strength and the
//! greedy strength-at-most-n upper bound construction.
//!
//! The closed-form bounds involve the irrational constant e and real
//! roots, so a plain float ceiling is a correctness trap near integer
//! boundaries. Where an exact integer test exists (the cube-root bound)
//! we use it; for the counting bound we evaluate the expression as a
//! shrinking fixed-point interval until the ceiling is unambiguous, which
//! always happens because the value is provably irrational.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FamilyTag, Graph};
use crate::labeling::TotalLabeling;

// ---------------------------------------------------------------------
// fixed-point interval evaluation of ceil((d+1)/e * nd^(1/(d+1)) - d)

// Bounds on e scaled by `scale`, from the series sum 1/k! with floored
// divisions; each step loses less than one unit and the dropped tail is
// below two units.
fn e_scaled_bounds(scale: &BigUint) -> (BigUint, BigUint) {
    let zero = BigUint::from(0u32);
    let mut acc = scale * 2u32;
    let mut term = scale.clone();
    let mut k = 2u64;
    let mut steps = 0u64;
    loop {
        term /= k;
        if term == zero {
            break;
        }
        acc += &term;
        k += 1;
        steps += 1;
    }
    let hi = &acc + BigUint::from(2 * steps + 2);
    (acc, hi)
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    (a + b - 1u32) / b
}

// Smallest integer >= (d+1)/e * nd^(1/(d+1)) - d, clamped below at 1.
fn counting_term(d: usize, nd: usize) -> u64 {
    let m = (d + 1) as u32;
    for digits in [40u32, 80, 160, 320] {
        let scale = BigUint::from(10u32).pow(digits);
        let (e_lo, e_hi) = e_scaled_bounds(&scale);
        // floor(nd^(1/m) * scale) = floor((nd * scale^m)^(1/m))
        let root_lo = (BigUint::from(nd as u64) * scale.pow(m)).nth_root(m);
        let root_hi = &root_lo + 1u32;
        // y = m * nd^(1/m) / e, scaled
        let y_lo = (BigUint::from(m) * &root_lo * &scale) / &e_hi;
        let y_hi = ceil_div(&(BigUint::from(m) * &root_hi * &scale), &e_lo);
        let c_lo = ceil_div(&y_lo, &scale);
        let c_hi = ceil_div(&y_hi, &scale);
        if c_lo == c_hi {
            let c = u64::try_from(&c_lo).expect("bound value fits u64");
            return (c as i128 - d as i128).max(1) as u64;
        }
    }
    // (d+1)/e * nd^(1/(d+1)) is transcendental, never an integer, so the
    // interval separates from integers at some finite precision.
    unreachable!("interval refinement exhausted for d={d}, nd={nd}")
}

/// Counting lower bound: the best value of the per-degree-class term
/// ceil((d+1)/e * n_d^(1/(d+1)) - d) over the degree classes that occur,
/// never below 1.
pub fn counting_lower_bound(g: &Graph) -> u64 {
    g.degree_counts()
        .iter()
        .map(|&(d, nd)| counting_term(d, nd))
        .max()
        .unwrap_or(1)
        .max(1)
}

// ---------------------------------------------------------------------
// distinct-product enumeration

fn multiset_count(s: u64, k: u64) -> u128 {
    // C(s+k-1, k), saturating
    let n = (s + k - 1) as u128;
    let mut num: u128 = 1;
    for i in 0..k as u128 {
        num = num.saturating_mul(n - i);
        num /= i + 1;
    }
    num
}

const ENUMERATION_LIMIT: u128 = 20_000_000;

/// Number of distinct products of multisets of the given size over
/// {1..=s}, by exhaustive enumeration. Strictly sharper than the binomial
/// multiset count because products collide.
pub fn count_distinct_products(s: u64, multiset_size: u64) -> Result<u64> {
    if s == 0 || multiset_size == 0 {
        return Err(Error::InvalidParameter("need s >= 1 and size >= 1".into()));
    }
    if multiset_count(s, multiset_size) > ENUMERATION_LIMIT {
        return Err(Error::EnumerationRefused(format!(
            "{} multisets of size {multiset_size} over 1..={s}",
            multiset_count(s, multiset_size)
        )));
    }
    let mut products = HashSet::new();
    let mut stack: Vec<(u64, u64, u128)> = vec![(1, multiset_size, 1)];
    while let Some((min_val, remaining, prod)) = stack.pop() {
        if remaining == 0 {
            products.insert(prod);
            continue;
        }
        for v in min_val..=s {
            match prod.checked_mul(v as u128) {
                Some(p) => stack.push((v, remaining - 1, p)),
                None => {
                    return Err(Error::EnumerationRefused(
                        "product exceeds 128 bits".into(),
                    ))
                }
            }
        }
    }
    Ok(products.len() as u64)
}

/// Smallest s such that every degree class d has at least n_d distinct
/// products of (d+1)-element multisets over {1..=s}. Exact but limited to
/// small maximum degree.
pub fn exact_multiset_lower_bound(g: &Graph) -> Result<u64> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    if g.max_degree() > 8 {
        return Err(Error::EnumerationRefused(format!(
            "max degree {} too large for distinct-product enumeration",
            g.max_degree()
        )));
    }
    let classes = g.degree_counts();
    for s in 1u64.. {
        let mut ok = true;
        for &(d, nd) in &classes {
            if count_distinct_products(s, (d + 1) as u64)? < nd as u64 {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(s);
        }
    }
    unreachable!()
}

// ---------------------------------------------------------------------
// cycle cube-root bound

fn integer_cbrt(x: u64) -> u64 {
    let mut c = (x as f64).cbrt() as u64;
    while c.pow(3) > x {
        c -= 1;
    }
    while (c + 1).pow(3) <= x {
        c += 1;
    }
    c
}

/// Cycle lower bound ceil((6n)^(1/3) - 1), decided by the exact integer
/// test (s+1)^3 >= 6n.
pub fn cycle_cuberoot_lower_bound(n: usize) -> u64 {
    debug_assert!(n >= 3);
    let v = 6 * n as u64;
    let c = integer_cbrt(v);
    if c.pow(3) == v {
        c - 1
    } else {
        c
    }
}

/// Two-label weight-count bound for complete multipartite graphs: with
/// labels {1,2} at most Delta+2 distinct product degrees arise, so when
/// the smallest part has size >= 3 at least three labels are needed.
pub fn multipartite_lower_bound(parts: &[usize]) -> Result<u64> {
    if parts.len() < 2 || parts.iter().any(|&m| m == 0) {
        return Err(Error::InvalidParameter("need at least 2 non-empty parts".into()));
    }
    let smallest = *parts.iter().min().expect("non-empty");
    Ok(if smallest >= 3 { 3 } else { 2 })
}

// ---------------------------------------------------------------------
// greedy upper construction

/// Labels the vertices 1..=n in non-decreasing order of the temporary
/// product degrees taken with all vertex labels 1 (ties by vertex index),
/// keeping the given edge labels (default all ones). The final product
/// degrees are strictly increasing, so the result is always
/// product-irregular with strength at most max(n, largest edge label).
pub fn greedy_upper_labeling(g: &Graph, edge_seed: Option<&[u64]>) -> Result<TotalLabeling> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let edge_labels: Vec<u64> = match edge_seed {
        Some(seed) => {
            if seed.len() != g.edge_count() {
                return Err(Error::ShapeMismatch(format!(
                    "{} edge labels for {} edges",
                    seed.len(),
                    g.edge_count()
                )));
            }
            if seed.iter().any(|&w| w == 0) {
                return Err(Error::InvalidParameter("labels must be >= 1".into()));
            }
            seed.to_vec()
        }
        None => vec![1; g.edge_count()],
    };

    let temp = TotalLabeling::new(g.clone(), vec![1; n], edge_labels.clone())?;
    let temp_pds = temp.product_degrees();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| temp_pds.pd(a).cmp(temp_pds.pd(b)).then(a.cmp(&b)));

    let mut vertex_labels = vec![0u64; n];
    for (rank, &v) in order.iter().enumerate() {
        vertex_labels[v] = rank as u64 + 1;
    }

    let labeling = TotalLabeling::new(g.clone(), vertex_labels, edge_labels)?;
    if !labeling.is_product_irregular() {
        return Err(Error::Internal(
            "greedy labeling failed verification".into(),
        ));
    }
    Ok(labeling)
}

// ---------------------------------------------------------------------
// aggregated report

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    pub value: u64,
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub bounds: Vec<BoundEntry>,
    pub best_lower: Option<u64>,
    pub best_upper: Option<u64>,
}

/// Collects every applicable bound for the graph, with constructive upper
/// bounds taken from verified labelings.
pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let mut bounds = Vec::new();
    let mut push = |name: &str, kind: BoundKind, value: u64, reference: &str| {
        bounds.push(BoundEntry {
            name: name.into(),
            kind,
            value,
            reference: reference.into(),
        });
    };

    push(
        "degree_class_counting",
        BoundKind::Lower,
        counting_lower_bound(g),
        "pigeonhole on the number of label multisets per degree class",
    );
    if let Ok(v) = exact_multiset_lower_bound(g) {
        push(
            "distinct_products",
            BoundKind::Lower,
            v,
            "exhaustive count of distinct multiset products per degree class",
        );
    }
    match g.family().tag {
        FamilyTag::Cycle => {
            let n = g.vertex_count();
            push(
                "cube_root",
                BoundKind::Lower,
                cycle_cuberoot_lower_bound(n),
                "integer test (s+1)^3 >= 6n for cycles",
            );
        }
        FamilyTag::CompleteMultipartite => {
            if let Ok(v) = multipartite_lower_bound(&g.family().params) {
                push(
                    "two_label_weights",
                    BoundKind::Lower,
                    v,
                    "two labels give at most Delta+2 distinct product degrees",
                );
            }
        }
        FamilyTag::Complete => {
            let parts = vec![1usize; g.vertex_count()];
            if let Ok(v) = multipartite_lower_bound(&parts) {
                push(
                    "two_label_weights",
                    BoundKind::Lower,
                    v,
                    "two labels give at most Delta+2 distinct product degrees",
                );
            }
        }
        _ => {}
    }

    let greedy = greedy_upper_labeling(g, None)?;
    push(
        "greedy",
        BoundKind::Upper,
        greedy.strength(),
        "vertex labels 1..=n assigned in temporary product-degree order",
    );
    match g.family().tag {
        FamilyTag::Cycle => {
            let l = crate::cycles::auto_label_cycle(g.vertex_count())?;
            push(
                "cycle_construction",
                BoundKind::Upper,
                l.strength(),
                "best verified cycle labeler (table, extension or chain)",
            );
        }
        FamilyTag::Path => {
            let l = crate::cycles::label_path(g.vertex_count())?;
            push(
                "path_construction",
                BoundKind::Upper,
                l.strength(),
                "cycle labeling with a 1-labeled edge removed",
            );
        }
        FamilyTag::Grid | FamilyTag::ToroidalGrid => {
            let toroidal = g.family().tag == FamilyTag::ToroidalGrid;
            let grid = crate::compose::label_grid(&g.family().params, toroidal)?;
            push(
                "grid_composition",
                BoundKind::Upper,
                grid.labeling.strength(),
                "factor labelings over disjoint prime supports composed per dimension",
            );
        }
        _ => {}
    }

    let best_lower = bounds
        .iter()
        .filter(|b| b.kind == BoundKind::Lower)
        .map(|b| b.value)
        .max();
    let best_upper = bounds
        .iter()
        .filter(|b| b.kind == BoundKind::Upper)
        .map(|b| b.value)
        .min();
    Ok(BoundReport {
        bounds,
        best_lower,
        best_upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_empty, make_path};

    #[test]
    fn distinct_product_counts_small() {
        assert_eq!(count_distinct_products(2, 3).unwrap(), 4);
        assert_eq!(count_distinct_products(3, 3).unwrap(), 10);
        assert_eq!(count_distinct_products(4, 3).unwrap(), 16);
        assert_eq!(count_distinct_products(1, 5).unwrap(), 1);
    }

    #[test]
    fn distinct_products_never_exceed_multiset_count() {
        for s in 1..=6u64 {
            for k in 1..=5u64 {
                let distinct = count_distinct_products(s, k).unwrap();
                assert!(distinct as u128 <= multiset_count(s, k), "s={s} k={k}");
            }
        }
    }

    #[test]
    fn multiset_lower_bounds_for_cycles() {
        assert_eq!(exact_multiset_lower_bound(&make_cycle(3).unwrap()).unwrap(), 2);
        assert_eq!(exact_multiset_lower_bound(&make_cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(exact_multiset_lower_bound(&make_cycle(11).unwrap()).unwrap(), 4);
        assert_eq!(exact_multiset_lower_bound(&make_cycle(17).unwrap()).unwrap(), 5);
    }

    #[test]
    fn multiset_bound_refuses_large_degree() {
        let g = make_complete(12).unwrap();
        assert!(matches!(
            exact_multiset_lower_bound(&g),
            Err(Error::EnumerationRefused(_))
        ));
    }

    #[test]
    fn counting_bound_values() {
        // One vertex per degree class keeps every term at the floor.
        let g = make_path(2).unwrap();
        assert_eq!(counting_lower_bound(&g), 1);

        // 2-regular on 1000 vertices: ceil(3/e * 10 - 2) = ceil(9.0364) = 10.
        let g = make_cycle(1000).unwrap();
        assert_eq!(counting_lower_bound(&g), 10);

        // 2-regular on 216 vertices: the cube root is exactly 6 and
        // 18/e - 2 = 4.6218..., so the ceiling is 5.
        let g = make_cycle(216).unwrap();
        assert_eq!(counting_lower_bound(&g), 5);
    }

    #[test]
    fn counting_bound_matches_float_away_from_boundaries() {
        for d in 1usize..=4 {
            for nd in [1usize, 7, 19, 64, 300, 4096] {
                let exact = counting_term(d, nd);
                let float =
                    ((d as f64 + 1.0) / std::f64::consts::E * (nd as f64).powf(1.0 / (d as f64 + 1.0))
                        - d as f64)
                        .ceil()
                        .max(1.0) as u64;
                assert_eq!(exact, float, "d={d} nd={nd}");
            }
        }
    }

    #[test]
    fn cuberoot_bound_values() {
        assert_eq!(cycle_cuberoot_lower_bound(36), 5); // 6*36 = 216 = 6^3 exactly
        assert_eq!(cycle_cuberoot_lower_bound(3), 2);
        assert_eq!(cycle_cuberoot_lower_bound(100), 8);
    }

    #[test]
    fn multipartite_bound_values() {
        assert_eq!(multipartite_lower_bound(&[3, 3]).unwrap(), 3);
        assert_eq!(multipartite_lower_bound(&[3, 4, 5]).unwrap(), 3);
        assert_eq!(multipartite_lower_bound(&[1, 1]).unwrap(), 2);
        assert!(multipartite_lower_bound(&[4]).is_err());
    }

    #[test]
    fn greedy_on_path() {
        let g = make_path(3).unwrap();
        let l = greedy_upper_labeling(&g, None).unwrap();
        assert_eq!(l.vertex_labels(), &[1, 2, 3]);
        let pds = l.product_degrees();
        let got: Vec<u64> = pds.values().iter().map(|p| u64::try_from(p).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 3]);
    }

    #[test]
    fn greedy_on_empty_graph() {
        let g = make_empty(4).unwrap();
        let l = greedy_upper_labeling(&g, None).unwrap();
        assert_eq!(l.vertex_labels(), &[1, 2, 3, 4]);
        assert_eq!(l.strength(), 4);
    }

    #[test]
    fn greedy_on_triangle() {
        let g = make_complete(3).unwrap();
        let l = greedy_upper_labeling(&g, None).unwrap();
        let pds = l.product_degrees();
        let got: Vec<u64> = pds.values().iter().map(|p| u64::try_from(p).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 3]);
        assert_eq!(l.strength(), 3);
    }

    #[test]
    fn greedy_respects_edge_seed() {
        let g = make_cycle(4).unwrap();
        let l = greedy_upper_labeling(&g, Some(&[5, 1, 1, 2])).unwrap();
        assert!(l.is_product_irregular());
        assert!(l.strength() <= 5.max(4));
    }

    #[test]
    fn report_on_cycle() {
        let report = bound_report(&make_cycle(9).unwrap()).unwrap();
        let lower = report.best_lower.unwrap();
        let upper = report.best_upper.unwrap();
        assert_eq!(lower, 3);
        assert_eq!(upper, 3);
        assert!(report.bounds.iter().any(|b| b.name == "cube_root"));
    }
}
