//! The phase algorithm: optimum solutions of growing cardinality, each emitted
//! in greedy order.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{IncrementalInstance, IncrementalOrder};
use crate::oracle::{brute_force_optimum, greedy_order};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// The golden ratio `(1 + √5) / 2`.
pub const PHI: f64 = 1.618_033_988_749_895;

/// `⌊φ·k⌋`, exactly. Since `φk = (k + √(5k²)) / 2` and `√(5k²)` is irrational
/// for `k ≥ 1`, the floor equals `(k + ⌊√(5k²)⌋) / 2` rounded down.
pub fn floor_phi(k: u128) -> u128 {
    let k_big = BigUint::from(k);
    let root = (&k_big * &k_big * 5u32).sqrt();
    ((k_big + root) / 2u32).to_u128().expect("⌊φk⌋ < 2k fits whenever k does")
}

/// `⌈(1+φ)·k⌉ = k + ⌊φk⌋ + 1` for `k ≥ 1` (φk is never an integer).
pub fn next_cardinality(k: u128) -> u128 {
    k + floor_phi(k) + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Phase {
    /// Cardinality of the optimum fetched in this phase.
    pub k: u128,
    /// Steps taken through the end of this phase, duplicates included.
    pub t: u128,
}

/// `k_0 = 1`, `k_i = ⌈(1+φ)k_{i−1}⌉`, `t_i = t_{i−1} + k_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseSchedule {
    pub phases: Vec<Phase>,
}

impl PhaseSchedule {
    /// The first `count` phases.
    pub fn new(count: usize) -> Self {
        let mut phases = Vec::with_capacity(count);
        let (mut k, mut t) = (1u128, 1u128);
        for i in 0..count {
            if i > 0 {
                k = next_cardinality(k);
                t += k;
            }
            phases.push(Phase { k, t });
        }
        PhaseSchedule { phases }
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn cardinalities(&self) -> Vec<u128> {
        self.phases.iter().map(|p| p.k).collect()
    }

    pub fn steps(&self) -> Vec<u128> {
        self.phases.iter().map(|p| p.t).collect()
    }

    /// First phase `i` with `t_i > ⌊φ k_i⌋`, if any.
    pub fn first_invariant_violation(&self) -> Option<usize> {
        self.phases.iter().position(|p| p.t > floor_phi(p.k))
    }
}

/// Output of a phase-algorithm run.
#[derive(Debug, Clone)]
pub struct PhaseRun {
    pub order: IncrementalOrder,
    pub schedule: PhaseSchedule,
    /// Guaranteed competitive ratio: `α(1+φ)`, with `α = 1` for an exact oracle.
    pub claimed_bound: f64,
}

/// Runs the phase algorithm with the exact brute-force oracle.
pub fn phase_algorithm<V: Scalar>(inst: &IncrementalInstance<V>, k_max: usize, budget: u128) -> Result<PhaseRun> {
    phase_algorithm_with_oracle(inst, k_max, |k| brute_force_optimum(inst, k, budget), 1.0)
}

/// Runs the phase algorithm with a caller-supplied oracle whose `k`-sets are
/// assumed to be within a factor `alpha` of optimal.
///
/// Phase cardinalities beyond `n` are clamped to `n`, elements already emitted
/// are skipped, and the order is cut at `k_max`.
pub fn phase_algorithm_with_oracle<V, F>(
    inst: &IncrementalInstance<V>,
    k_max: usize,
    mut oracle: F,
    alpha: f64,
) -> Result<PhaseRun>
where
    V: Scalar,
    F: FnMut(usize) -> Result<(Subset, V)>,
{
    let n = inst.n();
    if k_max == 0 || k_max > n {
        return Err(Error::input(format!("k_max {k_max} outside 1..={n}")));
    }
    if !(alpha >= 1.0) {
        return Err(Error::input(format!("oracle factor must be at least 1, got {alpha}")));
    }
    let mut seen = Subset::empty();
    let mut sequence = Vec::with_capacity(k_max);
    let mut phases = Vec::new();
    let (mut k, mut t) = (1u128, 0u128);
    while sequence.len() < k_max {
        if !phases.is_empty() {
            k = next_cardinality(k);
        }
        t += k;
        phases.push(Phase { k, t });
        let size = k.min(n as u128) as usize;
        let (set, _) = oracle(size)?;
        inst.ground.check(&set)?;
        if set.len() != size {
            return Err(Error::input(format!(
                "oracle returned {} elements for cardinality {size}",
                set.len()
            )));
        }
        for x in greedy_order(inst, &set)? {
            if seen.insert(x) {
                sequence.push(x);
            }
        }
    }
    let mut order = IncrementalOrder::new(sequence, n)?;
    order.truncate(k_max);
    Ok(PhaseRun {
        order,
        schedule: PhaseSchedule { phases },
        claimed_bound: alpha * (1.0 + PHI),
    })
}
