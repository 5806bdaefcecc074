//! Set packing and maximum coverage over a weighted set family.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{GroundSet, IncrementalInstance, ObjectiveTraits};
use crate::subset::Subset;

pub const MAX_PACKING_SETS: usize = 64;
pub const MAX_COVERAGE_SETS_WITH_COSTS: usize = 20;

/// A family of subsets of `0..universe`. Missing weights default to 1, missing
/// costs to "no opening costs".
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetSystem {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opening_costs: Option<Vec<f64>>,
}

fn check_weights(name: &str, w: &Option<Vec<f64>>, len: usize) -> Result<()> {
    if let Some(w) = w {
        if w.len() != len {
            return Err(Error::input(format!("{name}: expected {len} entries, got {}", w.len())));
        }
        if w.iter().any(|x| !(*x >= 0.0) || !x.is_finite()) {
            return Err(Error::input(format!("{name} must be finite and nonnegative")));
        }
    }
    Ok(())
}

impl SetSystem {
    pub fn validate(&self) -> Result<()> {
        if self.sets.is_empty() {
            return Err(Error::input("set family is empty"));
        }
        for (i, s) in self.sets.iter().enumerate() {
            if let Some(&x) = s.iter().find(|&&x| x >= self.universe) {
                return Err(Error::input(format!("set {i} contains {x}, outside the universe")));
            }
        }
        check_weights("set_weights", &self.set_weights, self.sets.len())?;
        check_weights("element_weights", &self.element_weights, self.universe)?;
        check_weights("opening_costs", &self.opening_costs, self.sets.len())?;
        Ok(())
    }

    fn members(&self) -> Vec<Subset> {
        self.sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    fn set_weight(&self, i: usize) -> f64 {
        self.set_weights.as_ref().map_or(1.0, |w| w[i])
    }

    fn element_weight(&self, x: usize) -> f64 {
        self.element_weights.as_ref().map_or(1.0, |w| w[x])
    }
}

/// Vertex-weighted independent set as set packing: vertex `v` becomes the set of
/// its incident edges plus a private token, so two vertices conflict exactly when
/// they are adjacent.
pub fn independent_set_system(vertices: usize, edges: &[(usize, usize)], weights: &[f64]) -> SetSystem {
    let mut sets: Vec<Vec<usize>> = (0..vertices).map(|v| vec![edges.len() + v]).collect();
    for (e, &(u, v)) in edges.iter().enumerate() {
        sets[u].push(e);
        sets[v].push(e);
    }
    for s in &mut sets {
        s.sort_unstable();
    }
    SetSystem {
        universe: edges.len() + vertices,
        sets,
        set_weights: Some(weights.to_vec()),
        element_weights: None,
        opening_costs: None,
    }
}

struct Packing {
    members: Vec<Subset>,
    weights: Vec<f64>,
}

impl Packing {
    fn best(&self, s: &Subset) -> f64 {
        let mut order: Vec<usize> = s.iter().filter(|&i| self.weights[i] > 0.0).collect();
        order.sort_by(|&a, &b| self.weights[b].total_cmp(&self.weights[a]));
        let mut suffix = vec![0.0; order.len() + 1];
        for j in (0..order.len()).rev() {
            suffix[j] = suffix[j + 1] + self.weights[order[j]];
        }
        let mut best = 0.0;
        self.branch(&order, &suffix, 0, &Subset::empty(), 0.0, &mut best);
        best
    }

    fn branch(&self, order: &[usize], suffix: &[f64], j: usize, used: &Subset, value: f64, best: &mut f64) {
        if value > *best {
            *best = value;
        }
        if j == order.len() || value + suffix[j] <= *best {
            return;
        }
        let set = &self.members[order[j]];
        if set.is_disjoint(used) {
            self.branch(order, suffix, j + 1, &used.union(set), value + self.weights[order[j]], best);
        }
        self.branch(order, suffix, j + 1, used, value, best);
    }
}

/// `f(S)` = maximum total weight of pairwise disjoint sets in `S`.
pub fn set_packing_objective(sys: &SetSystem, label: &str) -> Result<IncrementalInstance<f64>> {
    sys.validate()?;
    if sys.sets.len() > MAX_PACKING_SETS {
        return Err(Error::resource(
            "set packing family",
            sys.sets.len() as u128,
            MAX_PACKING_SETS as u128,
        ));
    }
    let packing = Packing {
        members: sys.members(),
        weights: (0..sys.sets.len()).map(|i| sys.set_weight(i)).collect(),
    };
    Ok(IncrementalInstance::new(
        GroundSet::new(sys.sets.len())?,
        label,
        ObjectiveTraits::INCREMENTAL,
        move |s: &Subset| packing.best(s),
    ))
}

struct Coverage {
    members: Vec<Subset>,
    element_weights: Vec<f64>,
    costs: Option<Vec<f64>>,
}

impl Coverage {
    fn covered(&self, chosen: impl Iterator<Item = usize>) -> f64 {
        let union = chosen.fold(Subset::empty(), |acc, i| acc.union(&self.members[i]));
        union.iter().map(|x| self.element_weights[x]).sum()
    }

    fn value(&self, s: &Subset) -> f64 {
        let Some(costs) = &self.costs else {
            return self.covered(s.iter());
        };
        let idx = s.to_vec();
        let mut best = 0.0f64;
        for m in 1u32..1 << idx.len() {
            let chosen = || idx.iter().enumerate().filter(move |(j, _)| m & (1 << j) != 0).map(|(_, &i)| i);
            let cost: f64 = chosen().map(|i| costs[i]).sum();
            best = best.max(self.covered(chosen()) - cost);
        }
        best
    }
}

/// `f(S)` = covered element weight; with opening costs, the best net value over
/// subfamilies of `S` (never below zero, since the empty subfamily is allowed).
pub fn coverage_objective(sys: &SetSystem, label: &str) -> Result<IncrementalInstance<f64>> {
    sys.validate()?;
    if sys.opening_costs.is_some() && sys.sets.len() > MAX_COVERAGE_SETS_WITH_COSTS {
        return Err(Error::resource(
            "coverage family with opening costs",
            sys.sets.len() as u128,
            MAX_COVERAGE_SETS_WITH_COSTS as u128,
        ));
    }
    let coverage = Coverage {
        members: sys.members(),
        element_weights: (0..sys.universe).map(|x| sys.element_weight(x)).collect(),
        costs: sys.opening_costs.clone(),
    };
    Ok(IncrementalInstance::new(
        GroundSet::new(sys.sets.len())?,
        label,
        ObjectiveTraits::INCREMENTAL,
        move |s: &Subset| coverage.value(s),
    ))
}
