//! Generators for the adversarial instance families and the Region Choosing
//! lower-bound verifiers.

pub mod gk;
pub mod region;
pub mod traps;
pub mod witnesses;

pub use gk::{gen_bridge_flow_gk, gk_greedy_value, gk_optimum, gk_ratio_closed_form};
pub use region::{
    best_region_schedule, certify_problematic, check_schedule_condition, gen_region_choosing, h_function,
    schedule_ratio, ProblematicPairCertificate, ScheduleCheck, ScheduleSequence,
};
pub use traps::{default_trap_eps, gen_disjoint_paths_trap, gen_independent_set_trap, gen_knapsack_trap};
pub use witnesses::{
    fig1_flow, fig3_bridge_flow, gen_witnesses, p3_matching, BuiltFixture, Expectation, FixtureInstance, WitnessFixture,
};
