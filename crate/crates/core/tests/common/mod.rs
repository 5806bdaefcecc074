//! Seeded fixture suite shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use incmax::adversarial::{fig3_bridge_flow, gen_bridge_flow_gk, gen_knapsack_trap, p3_matching};
use incmax::format::AnyInstance;
use incmax::objectives::{
    bridge_flow_objective, coverage_objective, knapsack_objective, matching_objective, region_choosing_objective,
    set_packing_objective, Item, KnapsackInstance, RegionSpec, SetSystem, WeightedEdge, WeightedGraph,
};
use incmax::oracle::{optimum_table, OptimumTable, DEFAULT_BUDGET};
use incmax::{IncrementalInstance, Result, Scalar};

pub struct Fixture {
    pub name: String,
    pub inst: AnyInstance,
    /// Closed-form optimum, for instances too large to enumerate quickly.
    pub region: Option<RegionSpec>,
}

impl Fixture {
    fn float(name: String, inst: IncrementalInstance<f64>) -> Self {
        Fixture {
            name,
            inst: AnyInstance::Float(inst),
            region: None,
        }
    }

    pub fn n(&self) -> usize {
        self.inst.n()
    }
}

pub fn table_for<V: Scalar>(inst: &IncrementalInstance<V>, k_max: usize) -> Result<OptimumTable<V>> {
    optimum_table(inst, k_max, DEFAULT_BUDGET)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_knapsack(seed: u64, n: usize) -> KnapsackInstance {
    let mut r = rng(seed);
    KnapsackInstance {
        items: (0..n)
            .map(|_| Item {
                size: r.gen_range(0.05..0.7),
                value: r.gen_range(0.1..2.0),
            })
            .collect(),
    }
}

pub fn random_graph(seed: u64, vertices: usize, edges: usize) -> WeightedGraph {
    let mut r = rng(seed);
    let mut list = Vec::new();
    while list.len() < edges {
        let u = r.gen_range(0..vertices);
        let v = r.gen_range(0..vertices);
        if u != v {
            list.push(WeightedEdge {
                u,
                v,
                weight: r.gen_range(0.1..3.0),
            });
        }
    }
    WeightedGraph {
        vertices,
        edges: list,
        capacities: None,
    }
}

pub fn random_set_system(seed: u64, universe: usize, sets: usize) -> SetSystem {
    let mut r = rng(seed);
    SetSystem {
        universe,
        sets: (0..sets)
            .map(|_| {
                let mut s: Vec<usize> = (0..universe).filter(|_| r.gen_bool(0.3)).collect();
                if s.is_empty() {
                    s.push(r.gen_range(0..universe));
                }
                s
            })
            .collect(),
        set_weights: Some((0..sets).map(|_| r.gen_range(0.2..2.0)).collect()),
        element_weights: Some((0..universe).map(|_| r.gen_range(0.2..2.0)).collect()),
        opening_costs: None,
    }
}

/// Random knapsack, matching, set packing and coverage instances with n ≤ 10,
/// region choosing with N ≤ 4, and the small named fixtures.
pub fn small_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for (i, n) in [6, 7, 8, 9, 10, 10, 8, 7].into_iter().enumerate() {
        let k = random_knapsack(100 + i as u64, n);
        out.push(Fixture::float(format!("knapsack-{i}"), knapsack_objective(&k, "knapsack").unwrap()));
    }
    for (i, m) in [5, 6, 7, 8, 9, 10, 8, 6].into_iter().enumerate() {
        let g = random_graph(200 + i as u64, 6, m);
        out.push(Fixture::float(format!("matching-{i}"), matching_objective(&g, "matching").unwrap()));
    }
    for (i, m) in [6, 7, 8, 9, 10].into_iter().enumerate() {
        let s = random_set_system(300 + i as u64, 8, m);
        out.push(Fixture::float(format!("packing-{i}"), set_packing_objective(&s, "packing").unwrap()));
    }
    for (i, m) in [6, 7, 8, 9, 10].into_iter().enumerate() {
        let s = random_set_system(400 + i as u64, 10, m);
        out.push(Fixture::float(format!("coverage-{i}"), coverage_objective(&s, "coverage").unwrap()));
    }
    for regions in 1..=4 {
        let spec = RegionSpec::beta(regions, 0.86).unwrap();
        let inst = region_choosing_objective(&spec, "region").unwrap();
        out.push(Fixture {
            name: format!("region-{regions}"),
            inst: AnyInstance::Float(inst),
            region: Some(spec),
        });
    }
    out.push(Fixture::float("p3".into(), matching_objective(&p3_matching(), "p3").unwrap()));
    out.push(Fixture::float(
        "knapsack-trap-2".into(),
        knapsack_objective(&gen_knapsack_trap(2, 0.125).unwrap(), "trap").unwrap(),
    ));
    out.push(Fixture {
        name: "fig3".into(),
        inst: AnyInstance::Exact(bridge_flow_objective(&fig3_bridge_flow(), "fig3").unwrap()),
        region: None,
    });
    out.push(Fixture {
        name: "g2".into(),
        inst: AnyInstance::Exact(bridge_flow_objective(&gen_bridge_flow_gk(2).unwrap(), "g2").unwrap()),
        region: None,
    });
    out
}

/// Region choosing with `N = 5..=8`; ground sets too large for exhaustive checks.
pub fn large_region_fixtures() -> Vec<Fixture> {
    (5..=8)
        .map(|regions| {
            let spec = RegionSpec::beta(regions, 0.86).unwrap();
            Fixture {
                name: format!("region-{regions}"),
                inst: AnyInstance::Float(region_choosing_objective(&spec, "region").unwrap()),
                region: Some(spec),
            }
        })
        .collect()
}

/// Runs `$body` with `$inst` bound to the instance, whatever its value type.
#[macro_export]
macro_rules! on_instance {
    ($any:expr, $inst:ident => $body:expr) => {
        match $any {
            incmax::format::AnyInstance::Float($inst) => $body,
            incmax::format::AnyInstance::Exact($inst) => $body,
        }
    };
}
