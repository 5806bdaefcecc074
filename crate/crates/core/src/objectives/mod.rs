//! Concrete incremental objectives, each packaged as an [`IncrementalInstance`](crate::IncrementalInstance) factory.

pub mod flow;
pub mod knapsack;
pub mod matching;
pub mod packing;
pub mod paths;
pub mod region;
pub mod table;

pub use flow::{
    bridge_flow_objective, max_flow, subgraph_flow_objective, Arc, BridgeFlowInstance, Capacity, FlowGraph,
    FlowNetwork, IncrementalBridgeFlow,
};
pub use knapsack::{knapsack_objective, Item, KnapsackInstance};
pub use matching::{matching_objective, WeightedEdge, WeightedGraph};
pub use packing::{coverage_objective, independent_set_system, set_packing_objective, SetSystem};
pub use paths::{disjoint_paths_objective, DemandPair, PathSystem};
pub use region::{region_choosing_objective, Densities, RegionSpec};
pub use table::{table_objective, TableObjective};
