//! Named instance generators: `name` or `name:key=value,key=value`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use incmax::adversarial::{
    default_trap_eps, fig1_flow, fig3_bridge_flow, gen_bridge_flow_gk, gen_disjoint_paths_trap,
    gen_independent_set_trap, gen_knapsack_trap, p3_matching,
};
use incmax::format::InstanceFile;
use incmax::objectives::RegionSpec;

pub const GENERATORS: &str = "region:N=..,beta=.. | gk:k=.. | knapsack_trap:k=..[,eps=..] | is_trap:k=..[,eps=..] \
                              | paths_trap:k=..[,eps=..] | fig1 | p3 | fig3";

struct Params {
    name: String,
    values: BTreeMap<String, String>,
}

impl Params {
    fn parse(spec: &str) -> Result<Self> {
        let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let mut values = BTreeMap::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| input(format!("generator parameter {part:?} is not key=value")))?;
            values.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params {
            name: name.trim().to_string(),
            values,
        })
    }

    fn take<T: std::str::FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        match self.values.remove(key) {
            None => Ok(None),
            Some(v) => match v.parse() {
                Ok(x) => Ok(Some(x)),
                Err(_) => bail!(input(format!("{}: invalid value {v:?} for {key}", self.name))),
            },
        }
    }

    fn require<T: std::str::FromStr>(&mut self, key: &str) -> Result<T> {
        match self.take(key)? {
            Some(x) => Ok(x),
            None => bail!(input(format!("{} needs parameter {key}", self.name))),
        }
    }

    fn finish(self) -> Result<()> {
        match self.values.keys().next() {
            Some(k) => bail!(input(format!("{}: unknown parameter {k}", self.name))),
            None => Ok(()),
        }
    }
}

fn input(msg: String) -> incmax::Error {
    incmax::Error::input(msg)
}

/// The generated instance plus the name of its built-in witness fixture, if any.
pub struct Generated {
    pub file: InstanceFile,
    pub label: String,
    pub fixture: Option<&'static str>,
}

pub fn generate(spec: &str) -> Result<Generated> {
    let mut p = Params::parse(spec)?;
    let mut fixture = None;
    let file = match p.name.as_str() {
        "region" => {
            let n: usize = p.require("N")?;
            let beta: f64 = p.require("beta")?;
            InstanceFile::RegionChoosing(RegionSpec::beta(n, beta)?)
        }
        "gk" => InstanceFile::BridgeFlow(gen_bridge_flow_gk(p.require("k")?)?),
        "knapsack_trap" | "is_trap" | "paths_trap" => {
            let k: usize = p.require("k")?;
            let eps = p.take("eps")?.unwrap_or_else(|| default_trap_eps(k.max(1)));
            match p.name.as_str() {
                "knapsack_trap" => InstanceFile::Knapsack(gen_knapsack_trap(k, eps)?),
                "is_trap" => InstanceFile::SetPacking(gen_independent_set_trap(k, eps)?),
                _ => InstanceFile::DisjointPaths(gen_disjoint_paths_trap(k, eps)?),
            }
        }
        "fig1" => {
            fixture = Some("fig1-flow");
            InstanceFile::Flow(fig1_flow())
        }
        "p3" => {
            fixture = Some("p3-matching");
            InstanceFile::Matching(p3_matching())
        }
        "fig3" => {
            fixture = Some("fig3-bridge-flow");
            InstanceFile::BridgeFlow(fig3_bridge_flow())
        }
        other => bail!(input(format!("unknown generator {other:?}; expected {GENERATORS}"))),
    };
    p.finish()?;
    Ok(Generated {
        file,
        label: spec.to_string(),
        fixture,
    })
}

pub fn load(path: &std::path::Path) -> Result<Generated> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow!(input(format!("cannot read {}: {e}", path.display()))))?;
    let file = InstanceFile::from_json(&text).with_context(|| format!("in {}", path.display()))?;
    Ok(Generated {
        file,
        label: path.display().to_string(),
        fixture: None,
    })
}
