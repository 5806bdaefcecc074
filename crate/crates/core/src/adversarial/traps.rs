//! Instances on which greedy's competitive ratio grows with `k`.
//!
//! Each family has one heavy element worth `1−ε` that blocks `k` elements worth
//! `1−2ε` each, plus `k` independent crumbs worth `ε²`. Greedy takes the heavy
//! element and then only crumbs, staying below 1 while the optimum at
//! cardinality `k` approaches `k`.

use crate::error::{Error, Result};
use crate::objectives::knapsack::{Item, KnapsackInstance};
use crate::objectives::packing::{independent_set_system, SetSystem};
use crate::objectives::paths::{DemandPair, PathSystem};

/// `1/(4k)`, the largest ε for which all `k` mid-weight items fit together.
pub fn default_trap_eps(k: usize) -> f64 {
    1.0 / (4 * k) as f64
}

fn check(k: usize, eps: f64) -> Result<()> {
    if k == 0 {
        return Err(Error::input("trap size k must be at least 1"));
    }
    if !(eps > 0.0 && eps <= default_trap_eps(k)) {
        return Err(Error::input(format!("epsilon must lie in (0, 1/(4k)] = (0, {}], got {eps}", default_trap_eps(k))));
    }
    Ok(())
}

/// Item 0 is the big item, items `1..=k` the mid items, the rest the crumbs.
pub fn gen_knapsack_trap(k: usize, eps: f64) -> Result<KnapsackInstance> {
    check(k, eps)?;
    let mut items = vec![Item {
        size: 1.0 - eps,
        value: 1.0 - eps,
    }];
    items.extend((0..k).map(|_| Item {
        size: 2.0 * eps,
        value: 1.0 - 2.0 * eps,
    }));
    items.extend((0..k).map(|_| Item {
        size: eps * eps,
        value: eps * eps,
    }));
    Ok(KnapsackInstance { items })
}

/// Vertex 0 is the centre of a star with leaves `1..=k`; vertices `k+1..=2k`
/// are isolated. Encoded as set packing, one set per vertex.
pub fn gen_independent_set_trap(k: usize, eps: f64) -> Result<SetSystem> {
    check(k, eps)?;
    let edges: Vec<(usize, usize)> = (1..=k).map(|leaf| (0, leaf)).collect();
    let mut weights = vec![1.0 - eps];
    weights.extend(std::iter::repeat_n(1.0 - 2.0 * eps, k));
    weights.extend(std::iter::repeat_n(eps * eps, k));
    Ok(independent_set_system(2 * k + 1, &edges, &weights))
}

/// A path `0 – 1 – … – 2k` and `k` isolated edges. Pair 0 joins the path's
/// endpoints, pairs `1..=2k` are the path edges, pairs `2k+1..=3k` the
/// isolated edges. Alternate path edges are vertex-disjoint, so `k` of them
/// route together.
pub fn gen_disjoint_paths_trap(k: usize, eps: f64) -> Result<PathSystem> {
    check(k, eps)?;
    let path_len = 2 * k;
    let mut edges: Vec<(usize, usize)> = (0..path_len).map(|v| (v, v + 1)).collect();
    let first_free = path_len + 1;
    edges.extend((0..k).map(|j| (first_free + 2 * j, first_free + 2 * j + 1)));

    let mut pairs = vec![DemandPair {
        source: 0,
        target: path_len,
        weight: 1.0 - eps,
        paths: vec![(0..=path_len).collect()],
    }];
    pairs.extend((0..path_len).map(|v| DemandPair {
        source: v,
        target: v + 1,
        weight: 1.0 - 2.0 * eps,
        paths: vec![vec![v, v + 1]],
    }));
    pairs.extend((0..k).map(|j| {
        let (a, b) = (first_free + 2 * j, first_free + 2 * j + 1);
        DemandPair {
            source: a,
            target: b,
            weight: eps * eps,
            paths: vec![vec![a, b]],
        }
    }));
    let ps = PathSystem {
        vertices: first_free + 2 * k,
        edges,
        pairs,
    };
    ps.validate()?;
    Ok(ps)
}
