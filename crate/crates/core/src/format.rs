//! JSON instance files.
//!
//! A document is an object whose `"kind"` field selects the objective; the
//! remaining fields are that objective's definition. Exact rationals are
//! written as `"p/q"` strings and infinite capacities as `"inf"`.
//!
//! ```json
//! {"kind": "knapsack", "items": [{"size": 0.5, "value": 1.0}]}
//! {"kind": "region_choosing", "regions": 4, "densities": {"beta": 0.86}}
//! {"kind": "table", "n": 2, "values": {"1": 1.0, "3": "1/2"}}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::IncrementalInstance;
use crate::objectives::{
    bridge_flow_objective, coverage_objective, disjoint_paths_objective, knapsack_objective, matching_objective,
    region_choosing_objective, set_packing_objective, subgraph_flow_objective, table_objective, BridgeFlowInstance,
    FlowGraph, KnapsackInstance, PathSystem, RegionSpec, SetSystem, TableObjective, WeightedGraph,
};
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};

/// A table entry: a JSON number for float tables, a `"p/q"` string for exact ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableValue {
    Float(f64),
    Exact(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableSpec {
    pub n: usize,
    /// Decimal bitmask → value; missing masks are 0.
    pub values: BTreeMap<String, TableValue>,
}

impl TableSpec {
    pub fn is_exact(&self) -> bool {
        self.values.values().any(|v| matches!(v, TableValue::Exact(_)))
    }

    fn entries<V>(&self, convert: impl Fn(&TableValue) -> Option<V>) -> Result<BTreeMap<u64, V>> {
        self.values
            .iter()
            .map(|(mask, v)| {
                let m: u64 = mask
                    .trim()
                    .parse()
                    .map_err(|_| Error::input(format!("table key {mask:?} is not a decimal bitmask")))?;
                let v = convert(v).ok_or_else(|| Error::input(format!("table value for mask {mask} is invalid")))?;
                Ok((m, v))
            })
            .collect()
    }

    pub fn float_table(&self) -> Result<TableObjective<f64>> {
        let values = self.entries(|v| match v {
            TableValue::Float(x) => Some(*x),
            TableValue::Exact(s) => parse_rational(s).map(|r| Scalar::to_f64(&r)),
        })?;
        TableObjective::new(self.n, values)
    }

    pub fn exact_table(&self) -> Result<TableObjective<Rational>> {
        let values = self.entries(|v| match v {
            TableValue::Float(x) => Rational::from_float(*x),
            TableValue::Exact(s) => parse_rational(s),
        })?;
        TableObjective::new(self.n, values)
    }

    pub fn from_exact(table: &TableObjective<Rational>) -> Self {
        TableSpec {
            n: table.n,
            values: table
                .values
                .iter()
                .map(|(m, v)| (m.to_string(), TableValue::Exact(format_rational(v))))
                .collect(),
        }
    }

    pub fn from_float(table: &TableObjective<f64>) -> Self {
        TableSpec {
            n: table.n,
            values: table
                .values
                .iter()
                .map(|(m, v)| (m.to_string(), TableValue::Float(*v)))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceFile {
    Knapsack(KnapsackInstance),
    Matching(WeightedGraph),
    SetPacking(SetSystem),
    Coverage(SetSystem),
    DisjointPaths(PathSystem),
    RegionChoosing(RegionSpec),
    BridgeFlow(BridgeFlowInstance),
    /// Plain flow where every arc is purchasable.
    Flow(FlowGraph),
    Table(TableSpec),
}

/// An instance in whichever value type its objective uses.
#[derive(Debug, Clone)]
pub enum AnyInstance {
    Float(IncrementalInstance<f64>),
    Exact(IncrementalInstance<Rational>),
}

impl AnyInstance {
    pub fn n(&self) -> usize {
        match self {
            AnyInstance::Float(i) => i.n(),
            AnyInstance::Exact(i) => i.n(),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            AnyInstance::Float(i) => &i.label,
            AnyInstance::Exact(i) => &i.label,
        }
    }
}

impl InstanceFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceFile::Knapsack(_) => "knapsack",
            InstanceFile::Matching(_) => "matching",
            InstanceFile::SetPacking(_) => "set_packing",
            InstanceFile::Coverage(_) => "coverage",
            InstanceFile::DisjointPaths(_) => "disjoint_paths",
            InstanceFile::RegionChoosing(_) => "region_choosing",
            InstanceFile::BridgeFlow(_) => "bridge_flow",
            InstanceFile::Flow(_) => "flow",
            InstanceFile::Table(_) => "table",
        }
    }

    pub fn build(&self, label: &str) -> Result<AnyInstance> {
        Ok(match self {
            InstanceFile::Knapsack(k) => AnyInstance::Float(knapsack_objective(k, label)?),
            InstanceFile::Matching(g) => AnyInstance::Float(matching_objective(g, label)?),
            InstanceFile::SetPacking(s) => AnyInstance::Float(set_packing_objective(s, label)?),
            InstanceFile::Coverage(s) => AnyInstance::Float(coverage_objective(s, label)?),
            InstanceFile::DisjointPaths(p) => AnyInstance::Float(disjoint_paths_objective(p, label)?),
            InstanceFile::RegionChoosing(r) => AnyInstance::Float(region_choosing_objective(r, label)?),
            InstanceFile::BridgeFlow(b) => AnyInstance::Exact(bridge_flow_objective(b, label)?),
            InstanceFile::Flow(g) => AnyInstance::Exact(subgraph_flow_objective(g, label)?),
            InstanceFile::Table(t) if t.is_exact() => AnyInstance::Exact(table_objective(&t.exact_table()?, label)?),
            InstanceFile::Table(t) => AnyInstance::Float(table_objective(&t.float_table()?, label)?),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("invalid instance file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files always serialize")
    }
}
