//! Small fixtures that separate the objective classes, with the verdicts the
//! checkers must reach on them.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::instance::IncrementalInstance;
use crate::objectives::flow::{bridge_flow_objective, subgraph_flow_objective, Arc, BridgeFlowInstance, FlowGraph};
use crate::objectives::matching::{matching_objective, WeightedGraph};
use crate::properties::{Property, PropertyReport, Verdict, Witness};
use crate::scalar::{rational, Rational};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq)]
pub enum FixtureInstance {
    Flow(FlowGraph),
    Matching(WeightedGraph),
    BridgeFlow(BridgeFlowInstance),
}

/// One expected checker outcome; also the entry format of expectation files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub property: Property,
    pub verdict: Verdict,
    /// The first violation in scan order, for failing verdicts. Omitted
    /// witnesses are not compared.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessFixture {
    pub name: &'static str,
    pub instance: FixtureInstance,
    pub expected: Vec<Expectation>,
}

impl Expectation {
    /// Whether a checker report agrees with this expectation.
    pub fn matches(&self, report: &PropertyReport) -> bool {
        report.property == self.property
            && report.verdict == self.verdict
            && self.witness.as_ref().is_none_or(|w| *w == report.witness)
    }
}

pub enum BuiltFixture {
    Float(IncrementalInstance<f64>),
    Exact(IncrementalInstance<Rational>),
}

impl WitnessFixture {
    pub fn build(&self) -> Result<BuiltFixture> {
        Ok(match &self.instance {
            FixtureInstance::Flow(g) => BuiltFixture::Exact(subgraph_flow_objective(g, self.name)?),
            FixtureInstance::Matching(g) => BuiltFixture::Float(matching_objective(g, self.name)?),
            FixtureInstance::BridgeFlow(b) => BuiltFixture::Exact(bridge_flow_objective(b, self.name)?),
        })
    }
}

fn holds(property: Property) -> Expectation {
    Expectation {
        property,
        verdict: Verdict::Holds,
        witness: Some(Witness::None),
    }
}

fn fails(property: Property, witness: Witness) -> Expectation {
    Expectation {
        property,
        verdict: Verdict::Fails,
        witness: Some(witness),
    }
}

fn pair(s: &[usize], t: &[usize]) -> Witness {
    Witness::Pair {
        s: s.iter().copied().collect(),
        t: t.iter().copied().collect(),
    }
}

/// Arcs `s→v`, `v→t` with capacity 1 and `s→t` with capacity `ε = 1/1000`;
/// every arc must be bought.
pub fn fig1_flow() -> FlowGraph {
    let (s, v, t) = (0, 1, 2);
    FlowGraph {
        vertices: 3,
        source: s,
        sink: t,
        arcs: vec![
            Arc::new(s, v, rational(1, 1)),
            Arc::new(v, t, rational(1, 1)),
            Arc::new(s, t, rational(1, 1000)),
        ],
    }
}

/// Path `e₁ e₂ e₃` on four vertices, unit weights.
pub fn p3_matching() -> WeightedGraph {
    WeightedGraph::unit(4, &[(0, 1), (1, 2), (2, 3)])
}

/// Unit capacities; `U = {s, v₁}`, `W = {v₂, t}`; cut `e₁ = s→v₂`,
/// `e₂ = v₁→v₂`, `e₃ = v₁→t`.
pub fn fig3_bridge_flow() -> BridgeFlowInstance {
    let (s, v1, v2, t) = (0, 1, 2, 3);
    let one = || rational(1, 1);
    BridgeFlowInstance {
        vertices: 4,
        source: s,
        sink: t,
        arcs: vec![
            Arc::new(s, v1, one()),
            Arc::new(s, v2, one()),
            Arc::new(v1, v2, one()),
            Arc::new(v1, t, one()),
            Arc::new(v2, t, one()),
        ],
        cut: vec![1, 2, 3],
        source_side: vec![true, true, false, false],
    }
}

pub fn gen_witnesses() -> Vec<WitnessFixture> {
    let two = Property::AlphaAugmentable(2.0);
    vec![
        WitnessFixture {
            name: "fig1-flow",
            instance: FixtureInstance::Flow(fig1_flow()),
            expected: vec![
                holds(Property::Monotone),
                fails(Property::SubAdditive, pair(&[0], &[1])),
                fails(
                    Property::Accountable,
                    Witness::Set {
                        s: Subset::from_indices([0, 1]),
                    },
                ),
            ],
        },
        WitnessFixture {
            name: "p3-matching",
            instance: FixtureInstance::Matching(p3_matching()),
            expected: vec![
                holds(Property::Monotone),
                holds(Property::SubAdditive),
                holds(Property::Accountable),
                fails(Property::Submodular, pair(&[0, 1], &[1, 2])),
                fails(Property::AlphaAugmentable(1.0), pair(&[1], &[0, 2])),
                holds(two.clone()),
            ],
        },
        WitnessFixture {
            name: "fig3-bridge-flow",
            instance: FixtureInstance::BridgeFlow(fig3_bridge_flow()),
            expected: vec![
                holds(Property::Monotone),
                holds(Property::SubAdditive),
                holds(Property::Accountable),
                fails(Property::Submodular, pair(&[0, 1], &[1, 2])),
                holds(two),
            ],
        },
    ]
}
