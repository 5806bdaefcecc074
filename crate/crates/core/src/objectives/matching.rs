use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{GroundSet, IncrementalInstance, ObjectiveTraits};
use crate::subset::Subset;

pub const MAX_MATCHING_EDGES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// Undirected graph with edge weights and optional vertex capacities `b(v)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedGraph {
    pub vertices: usize,
    pub edges: Vec<WeightedEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capacities: Option<Vec<u32>>,
}

impl WeightedGraph {
    pub fn unit(vertices: usize, edges: &[(usize, usize)]) -> Self {
        WeightedGraph {
            vertices,
            edges: edges.iter().map(|&(u, v)| WeightedEdge { u, v, weight: 1.0 }).collect(),
            capacities: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::input("graph has no edges"));
        }
        if self.edges.len() > MAX_MATCHING_EDGES {
            return Err(Error::resource(
                "matching edges",
                self.edges.len() as u128,
                MAX_MATCHING_EDGES as u128,
            ));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.u >= self.vertices || e.v >= self.vertices {
                return Err(Error::input(format!("edge {i} has an endpoint out of range")));
            }
            if e.u == e.v {
                return Err(Error::input(format!("edge {i} is a self-loop")));
            }
            if !(e.weight >= 0.0) || !e.weight.is_finite() {
                return Err(Error::input(format!("edge {i} has a negative or non-finite weight")));
            }
        }
        if let Some(b) = &self.capacities {
            if b.len() != self.vertices {
                return Err(Error::input("one capacity per vertex is required"));
            }
        }
        Ok(())
    }

    fn capacity(&self, v: usize) -> u32 {
        self.capacities.as_ref().map_or(1, |b| b[v])
    }

    /// Maximum weight of a `b`-matching using only edges of `s`.
    pub fn best_matching(&self, s: &Subset) -> f64 {
        let mut edges: Vec<WeightedEdge> = s.iter().map(|i| self.edges[i]).filter(|e| e.weight > 0.0).collect();
        edges.sort_by(|a, b| b.weight.total_cmp(&a.weight));
        let mut suffix = vec![0.0; edges.len() + 1];
        for i in (0..edges.len()).rev() {
            suffix[i] = suffix[i + 1] + edges[i].weight;
        }
        let mut room: Vec<u32> = (0..self.vertices).map(|v| self.capacity(v)).collect();
        let mut best = 0.0;
        branch(&edges, &suffix, 0, 0.0, &mut room, &mut best);
        best
    }
}

fn branch(edges: &[WeightedEdge], suffix: &[f64], i: usize, value: f64, room: &mut [u32], best: &mut f64) {
    if value > *best {
        *best = value;
    }
    if i == edges.len() || value + suffix[i] <= *best {
        return;
    }
    let e = edges[i];
    if room[e.u] > 0 && room[e.v] > 0 {
        room[e.u] -= 1;
        room[e.v] -= 1;
        branch(edges, suffix, i + 1, value + e.weight, room, best);
        room[e.u] += 1;
        room[e.v] += 1;
    }
    branch(edges, suffix, i + 1, value, room, best);
}

/// `f(S)` = maximum weight `b`-matching inside `S`.
pub fn matching_objective(g: &WeightedGraph, label: &str) -> Result<IncrementalInstance<f64>> {
    g.validate()?;
    let owned = g.clone();
    Ok(IncrementalInstance::new(
        GroundSet::new(g.edges.len())?,
        label,
        ObjectiveTraits::INCREMENTAL,
        move |s: &Subset| owned.best_matching(s),
    ))
}
