use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{GroundSet, IncrementalInstance, ObjectiveTraits};
use crate::subset::Subset;

pub const MAX_PAIRS: usize = 64;
pub const MAX_CANDIDATES: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DemandPair {
    pub source: usize,
    pub target: usize,
    pub weight: f64,
    /// Candidate routes as vertex sequences from `source` to `target`.
    pub paths: Vec<Vec<usize>>,
}

/// Undirected graph with weighted demand pairs, each restricted to explicit candidate paths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathSystem {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub pairs: Vec<DemandPair>,
}

impl PathSystem {
    pub fn validate(&self) -> Result<()> {
        if self.pairs.is_empty() {
            return Err(Error::input("no demand pairs"));
        }
        if self.pairs.len() > MAX_PAIRS {
            return Err(Error::resource("demand pairs", self.pairs.len() as u128, MAX_PAIRS as u128));
        }
        let edges: HashSet<(usize, usize)> = self
            .edges
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect();
        for (i, p) in self.pairs.iter().enumerate() {
            if !(p.weight >= 0.0) || !p.weight.is_finite() {
                return Err(Error::input(format!("pair {i} has a negative or non-finite weight")));
            }
            if p.paths.len() > MAX_CANDIDATES {
                return Err(Error::resource(
                    format!("candidate paths of pair {i}"),
                    p.paths.len() as u128,
                    MAX_CANDIDATES as u128,
                ));
            }
            for path in &p.paths {
                let ok = path.first() == Some(&p.source)
                    && path.last() == Some(&p.target)
                    && path.iter().all(|&v| v < self.vertices)
                    && path.windows(2).all(|w| edges.contains(&(w[0], w[1])))
                    && path.iter().collect::<HashSet<_>>().len() == path.len();
                if !ok {
                    return Err(Error::input(format!(
                        "pair {i} has a candidate that is not a simple path from {} to {}",
                        p.source, p.target
                    )));
                }
            }
        }
        Ok(())
    }
}

struct Routing {
    weights: Vec<f64>,
    candidates: Vec<Vec<Subset>>,
}

impl Routing {
    fn best(&self, s: &Subset) -> f64 {
        let mut order: Vec<usize> = s
            .iter()
            .filter(|&i| self.weights[i] > 0.0 && !self.candidates[i].is_empty())
            .collect();
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
        let pair = order[j];
        for path in &self.candidates[pair] {
            if path.is_disjoint(used) {
                self.branch(order, suffix, j + 1, &used.union(path), value + self.weights[pair], best);
            }
        }
        self.branch(order, suffix, j + 1, used, value, best);
    }
}

/// `f(S)` = maximum weight of pairs in `S` routable on mutually vertex-disjoint candidate paths.
pub fn disjoint_paths_objective(ps: &PathSystem, label: &str) -> Result<IncrementalInstance<f64>> {
    ps.validate()?;
    let routing = Routing {
        weights: ps.pairs.iter().map(|p| p.weight).collect(),
        candidates: ps
            .pairs
            .iter()
            .map(|p| p.paths.iter().map(|path| path.iter().copied().collect()).collect())
            .collect(),
    };
    Ok(IncrementalInstance::new(
        GroundSet::new(ps.pairs.len())?,
        label,
        ObjectiveTraits::INCREMENTAL,
        move |s: &Subset| routing.best(s),
    ))
}
