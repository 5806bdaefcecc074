use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{GroundSet, IncrementalInstance, ObjectiveTraits};
use crate::subset::Subset;

pub const MAX_KNAPSACK_ITEMS: usize = 64;

/// Absorbs round-off when summing item sizes against the unit capacity.
const CAPACITY_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Item {
    pub size: f64,
    pub value: f64,
}

/// Items for a knapsack of capacity 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnapsackInstance {
    pub items: Vec<Item>,
}

impl KnapsackInstance {
    pub fn validate(&self) -> Result<()> {
        if self.items.is_empty() {
            return Err(Error::input("knapsack has no items"));
        }
        if self.items.len() > MAX_KNAPSACK_ITEMS {
            return Err(Error::resource(
                "knapsack items",
                self.items.len() as u128,
                MAX_KNAPSACK_ITEMS as u128,
            ));
        }
        for (i, it) in self.items.iter().enumerate() {
            if !(it.size >= 0.0 && it.value >= 0.0) || !it.size.is_finite() || !it.value.is_finite() {
                return Err(Error::input(format!("item {i} has a negative or non-finite size/value")));
            }
        }
        Ok(())
    }

    /// Best packing value using only items of `s`.
    pub fn best_packing(&self, s: &Subset) -> f64 {
        let mut items: Vec<Item> = s
            .iter()
            .map(|i| self.items[i])
            .filter(|it| it.value > 0.0 && it.size <= 1.0 + CAPACITY_SLACK)
            .collect();
        // density order makes the fractional bound tight
        items.sort_by(|a, b| {
            let da = a.value / a.size.max(f64::MIN_POSITIVE);
            let db = b.value / b.size.max(f64::MIN_POSITIVE);
            db.total_cmp(&da)
        });
        let mut best = 0.0;
        branch(&items, 0, 0.0, 0.0, &mut best);
        best
    }
}

fn fractional_bound(items: &[Item], mut room: f64) -> f64 {
    let mut bound = 0.0;
    for it in items {
        if it.size <= room {
            room -= it.size;
            bound += it.value;
        } else {
            bound += it.value * room / it.size;
            break;
        }
    }
    bound
}

fn branch(items: &[Item], i: usize, used: f64, value: f64, best: &mut f64) {
    if value > *best {
        *best = value;
    }
    if i == items.len() {
        return;
    }
    let room = (1.0 + CAPACITY_SLACK - used).max(0.0);
    if value + fractional_bound(&items[i..], room) <= *best {
        return;
    }
    let it = items[i];
    if used + it.size <= 1.0 + CAPACITY_SLACK {
        branch(items, i + 1, used + it.size, value + it.value, best);
    }
    branch(items, i + 1, used, value, best);
}

/// `f(S)` = largest total value of a subset of `S` with total size at most 1.
pub fn knapsack_objective(inst: &KnapsackInstance, label: &str) -> Result<IncrementalInstance<f64>> {
    inst.validate()?;
    let owned = inst.clone();
    Ok(IncrementalInstance::new(
        GroundSet::new(inst.items.len())?,
        label,
        ObjectiveTraits::INCREMENTAL,
        move |s: &Subset| owned.best_packing(s),
    ))
}
