//! Competitive ratio of an incremental order against an optimum table.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::instance::{IncrementalInstance, IncrementalOrder};
use crate::oracle::OptimumTable;
use crate::scalar::Scalar;

/// `v*_k / f(S_k)`, or `Infinite` when the order has value zero where the optimum does not.
#[derive(Debug, Clone, PartialEq)]
pub enum RatioValue<V> {
    Finite(V),
    Infinite,
}

impl<V: Scalar> RatioValue<V> {
    pub fn of(opt: &V, alg: &V) -> Self {
        if alg.is_zero() {
            if opt.is_zero() {
                RatioValue::Finite(V::one())
            } else {
                RatioValue::Infinite
            }
        } else {
            RatioValue::Finite(opt.clone() / alg.clone())
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RatioValue::Finite(v) => v.to_f64(),
            RatioValue::Infinite => f64::INFINITY,
        }
    }

    pub fn finite(&self) -> Option<&V> {
        match self {
            RatioValue::Finite(v) => Some(v),
            RatioValue::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, RatioValue::Infinite)
    }

    /// `self <= bound`, with the usual float slack.
    pub fn within(&self, bound: &V) -> bool {
        match self {
            RatioValue::Finite(v) => bound.ge_tol(v),
            RatioValue::Infinite => false,
        }
    }

    /// `"inf"` or the exact string form of the value.
    pub fn to_exact_string(&self) -> String {
        match self {
            RatioValue::Finite(v) => v.to_exact_string(),
            RatioValue::Infinite => "inf".to_string(),
        }
    }
}

impl<V: Scalar> PartialOrd for RatioValue<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (RatioValue::Infinite, RatioValue::Infinite) => Some(Ordering::Equal),
            (RatioValue::Infinite, _) => Some(Ordering::Greater),
            (_, RatioValue::Infinite) => Some(Ordering::Less),
            (RatioValue::Finite(a), RatioValue::Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl<V: Scalar> fmt::Display for RatioValue<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

impl<V: Scalar> Serialize for RatioValue<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_exact_string())
    }
}

#[derive(Debug, Clone)]
pub struct RatioRow<V> {
    pub k: usize,
    pub alg_value: V,
    pub opt_value: V,
    pub ratio: RatioValue<V>,
}

#[derive(Debug, Clone)]
pub struct CompetitivenessReport<V> {
    pub rows: Vec<RatioRow<V>>,
    pub worst_ratio: RatioValue<V>,
    /// Smallest `k` attaining the worst ratio.
    pub argmax_k: usize,
}

impl<V: Scalar> CompetitivenessReport<V> {
    pub fn row(&self, k: usize) -> &RatioRow<V> {
        &self.rows[k - 1]
    }

    pub fn ratio(&self, k: usize) -> &RatioValue<V> {
        &self.rows[k - 1].ratio
    }
}

/// Per-cardinality ratios `v*_k / f(S_k)` for `k = 1..=table.k_max()`.
pub fn competitive_ratio<V: Scalar>(
    inst: &IncrementalInstance<V>,
    order: &IncrementalOrder,
    table: &OptimumTable<V>,
) -> Result<CompetitivenessReport<V>> {
    if order.len() < table.k_max() {
        return Err(Error::input(format!(
            "order has {} elements but the table goes up to k={}",
            order.len(),
            table.k_max()
        )));
    }
    let mut rows = Vec::with_capacity(table.k_max());
    for k in 1..=table.k_max() {
        let alg_value = inst.evaluate(&order.prefix(k))?;
        let opt_value = table.value(k).clone();
        let ratio = RatioValue::of(&opt_value, &alg_value);
        rows.push(RatioRow {
            k,
            alg_value,
            opt_value,
            ratio,
        });
    }
    let mut argmax_k = 1;
    for row in &rows {
        if row.ratio > rows[argmax_k - 1].ratio {
            argmax_k = row.k;
        }
    }
    Ok(CompetitivenessReport {
        worst_ratio: rows[argmax_k - 1].ratio.clone(),
        argmax_k,
        rows,
    })
}
