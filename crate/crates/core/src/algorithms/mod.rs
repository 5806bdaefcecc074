//! The phase algorithm and the greedy algorithm.

pub mod greedy;
pub mod phase;

pub use greedy::{greedy, greedy_bound, GreedyStep, GreedyTrace};
pub use phase::{
    floor_phi, next_cardinality, phase_algorithm, phase_algorithm_with_oracle, Phase, PhaseRun, PhaseSchedule, PHI,
};
