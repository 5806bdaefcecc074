use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::instance::{GroundSet, IncrementalInstance, ObjectiveTraits};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// A set function listed value by value; subsets absent from the table map to 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TableObjective<V> {
    pub n: usize,
    pub values: BTreeMap<u64, V>,
}

impl<V: Scalar> TableObjective<V> {
    pub fn new(n: usize, values: BTreeMap<u64, V>) -> Result<Self> {
        let t = TableObjective { n, values };
        t.validate()?;
        Ok(t)
    }

    /// Tabulates `f` on every subset of `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(&Subset) -> V) -> Result<Self> {
        if n > 20 {
            return Err(Error::resource("table entries", 1u128 << n, 1 << 20));
        }
        let values = (0..1u64 << n).map(|m| (m, f(&Subset::from_mask(m)))).collect();
        TableObjective::new(n, values)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 64 {
            return Err(Error::input(format!("table ground size must lie in 1..=64, got {}", self.n)));
        }
        for (mask, v) in &self.values {
            if self.n < 64 && mask >> self.n != 0 {
                return Err(Error::input(format!("mask {mask} exceeds the ground size {}", self.n)));
            }
            if v.is_negative() {
                return Err(Error::input(format!("mask {mask} has a negative value")));
            }
        }
        Ok(())
    }

    pub fn value(&self, s: &Subset) -> V {
        s.to_mask()
            .and_then(|m| self.values.get(&m).cloned())
            .unwrap_or_else(V::zero)
    }
}

pub fn table_objective<V: Scalar>(table: &TableObjective<V>, label: &str) -> Result<IncrementalInstance<V>> {
    table.validate()?;
    let owned = table.clone();
    Ok(IncrementalInstance::new(
        GroundSet::new(table.n)?,
        label,
        ObjectiveTraits::UNKNOWN,
        move |s: &Subset| owned.value(s),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_defaults_to_zero() {
        let t = TableObjective::new(2, BTreeMap::from([(1, 1.0), (3, 0.0)])).unwrap();
        assert_eq!(t.value(&Subset::from_mask(1)), 1.0);
        assert_eq!(t.value(&Subset::from_mask(2)), 0.0);
        assert!(TableObjective::new(2, BTreeMap::from([(4, 1.0)])).is_err());
        assert!(TableObjective::new(1, BTreeMap::from([(1, -1.0)])).is_err());
    }
}
