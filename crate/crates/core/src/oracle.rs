//! Exhaustive optimum oracles and density utilities.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::IncrementalInstance;
use crate::scalar::Scalar;
use crate::subset::{binomial, combinations_with_first, Subset};

/// Default cap on the number of subsets a single enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`] in the CLI.
pub const BUDGET_ENV: &str = "INCMAX_BUDGET";

/// An optimum of cardinality `k` by exhaustive enumeration of all `k`-subsets.
///
/// Among subsets whose value is within tolerance of the maximum, the
/// lexicographically smallest index list wins. The scan is split by smallest
/// element across threads; the answer is identical to a sequential scan.
pub fn brute_force_optimum<V: Scalar>(
    inst: &IncrementalInstance<V>,
    k: usize,
    budget: u128,
) -> Result<(Subset, V)> {
    let n = inst.n();
    if k == 0 || k > n {
        return Err(Error::input(format!("cardinality {k} outside 1..={n}")));
    }
    let required = binomial(n, k);
    if required > budget {
        return Err(Error::resource(format!("enumerating {k}-subsets of {n} elements"), required, budget));
    }

    let best = (0..=n - k)
        .into_par_iter()
        .filter_map(|first| {
            combinations_with_first(n, k, first)
                .map(|s| inst.value(&s))
                .reduce(|a, b| if b > a { b } else { a })
        })
        .reduce_with(|a, b| if b > a { b } else { a })
        .expect("at least one k-subset");

    let witness = (0..=n - k)
        .into_par_iter()
        .find_map_first(|first| {
            combinations_with_first(n, k, first).find_map(|s| {
                let v = inst.value(&s);
                v.ge_tol(&best).then_some((s, v))
            })
        })
        .expect("the maximum is attained");
    Ok(witness)
}

/// `v*_k` with one optimum witness for each `k = 1..=k_max`.
#[derive(Debug, Clone, Serialize)]
pub struct OptimumTable<V: Scalar> {
    values: Vec<V>,
    witnesses: Vec<Subset>,
}

impl<V: Scalar> OptimumTable<V> {
    /// Builds a table from known optima; entry `i` is cardinality `i + 1`.
    pub fn from_parts(values: Vec<V>, witnesses: Vec<Subset>) -> Result<Self> {
        if values.len() != witnesses.len() {
            return Err(Error::input("values and witnesses differ in length"));
        }
        for (i, w) in witnesses.iter().enumerate() {
            if w.len() != i + 1 {
                return Err(Error::input(format!("witness for k={} has size {}", i + 1, w.len())));
            }
        }
        Ok(OptimumTable { values, witnesses })
    }

    pub fn k_max(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, k: usize) -> &V {
        &self.values[k - 1]
    }

    pub fn witness(&self, k: usize) -> &Subset {
        &self.witnesses[k - 1]
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn density(&self, k: usize) -> V {
        self.value(k).clone() / V::from_usize(k)
    }

    /// First `k` with `v*_{k+1}/(k+1) > v*_k/k` beyond tolerance.
    pub fn first_density_increase(&self) -> Option<usize> {
        (1..self.k_max()).find(|&k| !self.density(k).ge_tol(&self.density(k + 1)))
    }
}

/// Repeated [`brute_force_optimum`] for `k = 1..=k_max`.
///
/// When the instance is flagged accountable the densities must be nonincreasing;
/// a violation is reported as [`Error::DensityIncrease`].
pub fn optimum_table<V: Scalar>(
    inst: &IncrementalInstance<V>,
    k_max: usize,
    budget: u128,
) -> Result<OptimumTable<V>> {
    if k_max == 0 || k_max > inst.n() {
        return Err(Error::input(format!("k_max {k_max} outside 1..={}", inst.n())));
    }
    let mut values = Vec::with_capacity(k_max);
    let mut witnesses = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let (w, v) = brute_force_optimum(inst, k, budget)?;
        values.push(v);
        witnesses.push(w);
    }
    let table = OptimumTable { values, witnesses };
    if inst.traits.accountable {
        if let Some(k) = table.first_density_increase() {
            return Err(Error::DensityIncrease { k });
        }
    }
    Ok(table)
}

/// `f(s) / |s|`.
pub fn density<V: Scalar>(inst: &IncrementalInstance<V>, s: &Subset) -> Result<V> {
    if s.is_empty() {
        return Err(Error::input("density of the empty set is undefined"));
    }
    Ok(inst.evaluate(s)? / V::from_usize(s.len()))
}

/// Orders `s` so that prefix densities never increase.
///
/// Peels elements off the back: from the current set `X` remove an element `x`
/// with `f(X \ {x}) >= f(X) - f(X)/|X|`, preferring the one that keeps the most
/// value and then the smallest index. The removal sequence, reversed, is the order.
pub fn greedy_order<V: Scalar>(inst: &IncrementalInstance<V>, s: &Subset) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::input("greedy order of the empty set"));
    }
    inst.ground.check(s)?;
    let mut rest = s.clone();
    let mut removed = Vec::with_capacity(s.len());
    while !rest.is_empty() {
        let whole = inst.value(&rest);
        let threshold = whole.clone() - whole.clone() / V::from_usize(rest.len());
        let slack = whole.slack();
        let mut pick: Option<(usize, V)> = None;
        for x in rest.iter() {
            let v = inst.value(&rest.without(x));
            if v.clone() + slack.clone() < threshold {
                continue;
            }
            let better = match &pick {
                None => true,
                Some((_, best)) => !best.ge_tol(&v),
            };
            if better {
                pick = Some((x, v));
            }
        }
        let Some((x, _)) = pick else {
            return Err(Error::AccountabilityViolation { set: rest });
        };
        rest.remove(x);
        removed.push(x);
    }
    removed.reverse();
    Ok(removed)
}
