//! Exact max-flow and the flow-based objectives.
//!
//! Augmentation follows shortest residual paths (BFS, lowest edge id first), so
//! both the flow value and the flow itself are deterministic.

use std::collections::VecDeque;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::instance::{GroundSet, IncrementalInstance, ObjectiveTraits};
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Capacity {
    Finite(Rational),
    Infinite,
}

impl Capacity {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Capacity::Finite(c) => Some(c),
            Capacity::Infinite => None,
        }
    }
}

/// Serialized as `"p/q"` or `"inf"`.
impl Serialize for Capacity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Capacity::Finite(c) => serializer.serialize_str(&format_rational(c)),
            Capacity::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Capacity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        if text.trim() == "inf" {
            return Ok(Capacity::Infinite);
        }
        parse_rational(&text)
            .map(Capacity::Finite)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid capacity {text:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: Capacity,
}

impl Arc {
    pub fn new(from: usize, to: usize, capacity: Rational) -> Self {
        Arc {
            from,
            to,
            capacity: Capacity::Finite(capacity),
        }
    }

    pub fn unbounded(from: usize, to: usize) -> Self {
        Arc {
            from,
            to,
            capacity: Capacity::Infinite,
        }
    }
}

/// Residual network supporting capacity increases between augmentations.
#[derive(Debug, Clone)]
pub struct FlowNetwork<V: Scalar> {
    adjacency: Vec<Vec<usize>>,
    // residual edge 2i is arc i forward, 2i+1 its reverse
    heads: Vec<usize>,
    residual: Vec<V>,
    value: V,
}

impl<V: Scalar> FlowNetwork<V> {
    pub fn new(vertices: usize) -> Self {
        FlowNetwork {
            adjacency: vec![Vec::new(); vertices],
            heads: Vec::new(),
            residual: Vec::new(),
            value: V::zero(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.adjacency.len()
    }

    /// Adds an arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: V) -> usize {
        let id = self.heads.len() / 2;
        self.adjacency[from].push(2 * id);
        self.adjacency[to].push(2 * id + 1);
        self.heads.push(to);
        self.heads.push(from);
        self.residual.push(capacity);
        self.residual.push(V::zero());
        id
    }

    /// Raises the capacity of arc `id` by `extra`, keeping the current flow valid.
    pub fn add_capacity(&mut self, id: usize, extra: V) {
        let r = self.residual[2 * id].clone();
        self.residual[2 * id] = r + extra;
    }

    /// Current flow on arc `id`.
    pub fn flow(&self, id: usize) -> V {
        self.residual[2 * id + 1].clone()
    }

    pub fn value(&self) -> &V {
        &self.value
    }

    /// Augments along shortest paths until none remain; returns the total flow value.
    pub fn augment(&mut self, s: usize, t: usize) -> V {
        let n = self.vertices();
        loop {
            let mut parent: Vec<Option<usize>> = vec![None; n];
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &e in &self.adjacency[u] {
                    let v = self.heads[e];
                    if !seen[v] && self.residual[e] > V::zero() {
                        seen[v] = true;
                        parent[v] = Some(e);
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return self.value.clone();
            }
            let mut bottleneck: Option<V> = None;
            let mut v = t;
            while let Some(e) = parent[v] {
                let r = &self.residual[e];
                if bottleneck.as_ref().is_none_or(|b| r < b) {
                    bottleneck = Some(r.clone());
                }
                v = self.heads[e ^ 1];
            }
            let delta = bottleneck.expect("path from s to t has an edge");
            let mut v = t;
            while let Some(e) = parent[v] {
                self.residual[e] = self.residual[e].clone() - delta.clone();
                self.residual[e ^ 1] = self.residual[e ^ 1].clone() + delta.clone();
                v = self.heads[e ^ 1];
            }
            self.value = self.value.clone() + delta;
        }
    }
}

/// Exact maximum `s`-`t` flow value.
pub fn max_flow<V: Scalar>(vertices: usize, arcs: &[(usize, usize, V)], s: usize, t: usize) -> Result<V> {
    if s == t {
        return Err(Error::input("source and sink coincide"));
    }
    if s >= vertices || t >= vertices {
        return Err(Error::input("source or sink out of range"));
    }
    let mut net = FlowNetwork::new(vertices);
    for (from, to, cap) in arcs {
        if *from >= vertices || *to >= vertices {
            return Err(Error::input(format!("arc ({from}, {to}) out of range")));
        }
        if cap.is_negative() {
            return Err(Error::input("negative capacity"));
        }
        net.add_arc(*from, *to, cap.clone());
    }
    Ok(net.augment(s, t))
}

/// Replaces infinite capacities with one more than the sum of all finite ones.
///
/// Any cut that contains an infinite arc then costs more than every cut that
/// does not, so the min cut (and max flow) is unchanged whenever it is finite.
pub fn finite_capacities(arcs: &[Arc]) -> Vec<Rational> {
    let total = arcs
        .iter()
        .filter_map(|a| a.capacity.finite())
        .fold(<Rational as Zero>::zero(), |acc, c| acc + c);
    let surrogate = total + <Rational as One>::one();
    arcs.iter()
        .map(|a| a.capacity.finite().cloned().unwrap_or_else(|| surrogate.clone()))
        .collect()
}

/// A directed graph where only the arcs of a one-way `s`-`t` cut are purchased.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BridgeFlowInstance {
    pub vertices: usize,
    pub source: usize,
    pub sink: usize,
    pub arcs: Vec<Arc>,
    /// Arc ids of the cut; position `i` is ground element `i`.
    pub cut: Vec<usize>,
    /// `true` for vertices on the source side `U` of the partition.
    pub source_side: Vec<bool>,
}

impl BridgeFlowInstance {
    /// Checks the cut structure: `s ∈ U`, `t ∈ W`, the cut is exactly the set of
    /// `U → W` arcs, and no arc runs from `W` back to `U`.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertices;
        if self.source_side.len() != n {
            return Err(Error::input("partition does not cover every vertex"));
        }
        if self.source >= n || self.sink >= n || self.source == self.sink {
            return Err(Error::input("invalid source or sink"));
        }
        if !self.source_side[self.source] || self.source_side[self.sink] {
            return Err(Error::input("source must lie in U and sink in W"));
        }
        if self.cut.is_empty() {
            return Err(Error::input("the cut is empty"));
        }
        let mut in_cut = vec![false; self.arcs.len()];
        for &c in &self.cut {
            if c >= self.arcs.len() || in_cut[c] {
                return Err(Error::input(format!("cut arc {c} is invalid or repeated")));
            }
            in_cut[c] = true;
        }
        for (id, a) in self.arcs.iter().enumerate() {
            if a.from >= n || a.to >= n {
                return Err(Error::input(format!("arc {id} has an endpoint out of range")));
            }
            if let Capacity::Finite(c) = &a.capacity {
                if c.is_negative() {
                    return Err(Error::input(format!("arc {id} has negative capacity")));
                }
            }
            let forward = self.source_side[a.from] && !self.source_side[a.to];
            let backward = !self.source_side[a.from] && self.source_side[a.to];
            if backward {
                return Err(Error::input(format!("arc {id} runs from W back to U")));
            }
            if forward != in_cut[id] {
                return Err(Error::input(format!(
                    "arc {id} crosses from U to W but is not in the cut, or the reverse"
                )));
            }
        }
        Ok(())
    }

    pub fn ground_size(&self) -> usize {
        self.cut.len()
    }

    /// Flow network with every cut arc present at zero capacity; cut element `i`
    /// is arc id `self.cut[i]` in the network.
    pub fn network(&self) -> (FlowNetwork<Rational>, Vec<Rational>) {
        let caps = finite_capacities(&self.arcs);
        let mut in_cut = vec![false; self.arcs.len()];
        for &c in &self.cut {
            in_cut[c] = true;
        }
        let mut net = FlowNetwork::new(self.vertices);
        for (id, a) in self.arcs.iter().enumerate() {
            let cap = if in_cut[id] { <Rational as Zero>::zero() } else { caps[id].clone() };
            net.add_arc(a.from, a.to, cap);
        }
        (net, caps)
    }

    /// `f(S)`: max flow with the cut arcs outside `S` removed.
    pub fn value(&self, s: &Subset) -> Rational {
        let (mut net, caps) = self.network();
        for i in s.iter() {
            let id = self.cut[i];
            net.add_capacity(id, caps[id].clone());
        }
        net.augment(self.source, self.sink)
    }
}

/// Flow value kept up to date while cut arcs are purchased one at a time.
pub struct IncrementalBridgeFlow<'a> {
    inst: &'a BridgeFlowInstance,
    net: FlowNetwork<Rational>,
    caps: Vec<Rational>,
    bought: Subset,
}

impl<'a> IncrementalBridgeFlow<'a> {
    pub fn new(inst: &'a BridgeFlowInstance) -> Self {
        let (net, caps) = inst.network();
        IncrementalBridgeFlow {
            inst,
            net,
            caps,
            bought: Subset::empty(),
        }
    }

    /// Buys cut element `i` and returns the new flow value.
    pub fn buy(&mut self, i: usize) -> Rational {
        if self.bought.insert(i) {
            let id = self.inst.cut[i];
            self.net.add_capacity(id, self.caps[id].clone());
        }
        self.net.augment(self.inst.source, self.inst.sink)
    }

    pub fn value(&self) -> &Rational {
        self.net.value()
    }
}

/// Bridge-flow objective over the cut arcs.
pub fn bridge_flow_objective(inst: &BridgeFlowInstance, label: &str) -> Result<IncrementalInstance<Rational>> {
    inst.validate()?;
    let ground = GroundSet::new(inst.ground_size())?;
    let owned = inst.clone();
    Ok(IncrementalInstance::new(
        ground,
        label,
        ObjectiveTraits::INCREMENTAL,
        move |s: &Subset| owned.value(s),
    ))
}

/// Plain `s`-`t` flow where every arc must be purchased.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlowGraph {
    pub vertices: usize,
    pub source: usize,
    pub sink: usize,
    pub arcs: Vec<Arc>,
}

impl FlowGraph {
    pub fn validate(&self) -> Result<()> {
        if self.source >= self.vertices || self.sink >= self.vertices || self.source == self.sink {
            return Err(Error::input("invalid source or sink"));
        }
        if self.arcs.is_empty() {
            return Err(Error::input("flow graph has no arcs"));
        }
        for a in &self.arcs {
            if a.from >= self.vertices || a.to >= self.vertices {
                return Err(Error::input("arc endpoint out of range"));
            }
        }
        Ok(())
    }

    pub fn value(&self, s: &Subset) -> Rational {
        let caps = finite_capacities(&self.arcs);
        let mut net = FlowNetwork::new(self.vertices);
        for i in s.iter() {
            let a = &self.arcs[i];
            net.add_arc(a.from, a.to, caps[i].clone());
        }
        net.augment(self.source, self.sink)
    }
}

/// Ground set = all arcs; `f(S)` = max flow in the subgraph `(V, S)`.
///
/// Monotone but in general neither sub-additive nor accountable.
pub fn subgraph_flow_objective(g: &FlowGraph, label: &str) -> Result<IncrementalInstance<Rational>> {
    g.validate()?;
    let ground = GroundSet::new(g.arcs.len())?;
    let owned = g.clone();
    let traits = ObjectiveTraits {
        incremental: false,
        accountable: false,
        zero_on_empty: true,
    };
    Ok(IncrementalInstance::new(ground, label, traits, move |s: &Subset| owned.value(s)))
}
