//! Ground sets, objectives and incremental orders.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset::Subset;

/// Elements are the dense indices `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("ground set must contain at least one element"));
        }
        Ok(GroundSet { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn check(&self, s: &Subset) -> Result<()> {
        if s.bound() > self.n {
            return Err(Error::input(format!(
                "subset {s} has an element outside the ground set of size {}",
                self.n
            )));
        }
        Ok(())
    }
}

/// A set function over element-index subsets. Implementations must be pure.
pub trait Objective<V: Scalar>: Send + Sync {
    fn value(&self, s: &Subset) -> V;
}

impl<V: Scalar, F> Objective<V> for F
where
    F: Fn(&Subset) -> V + Send + Sync,
{
    fn value(&self, s: &Subset) -> V {
        self(s)
    }
}

/// What an objective family is known to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ObjectiveTraits {
    /// Monotone, sub-additive and accountable.
    pub incremental: bool,
    pub accountable: bool,
    pub zero_on_empty: bool,
}

impl ObjectiveTraits {
    pub const INCREMENTAL: ObjectiveTraits = ObjectiveTraits {
        incremental: true,
        accountable: true,
        zero_on_empty: true,
    };

    pub const UNKNOWN: ObjectiveTraits = ObjectiveTraits {
        incremental: false,
        accountable: false,
        zero_on_empty: false,
    };
}

#[derive(Clone)]
pub struct IncrementalInstance<V: Scalar> {
    pub ground: GroundSet,
    pub label: String,
    pub traits: ObjectiveTraits,
    objective: Arc<dyn Objective<V>>,
}

impl<V: Scalar> fmt::Debug for IncrementalInstance<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IncrementalInstance")
            .field("n", &self.ground.len())
            .field("label", &self.label)
            .field("traits", &self.traits)
            .finish()
    }
}

impl<V: Scalar> IncrementalInstance<V> {
    pub fn new(
        ground: GroundSet,
        label: impl Into<String>,
        traits: ObjectiveTraits,
        objective: impl Objective<V> + 'static,
    ) -> Self {
        IncrementalInstance {
            ground,
            label: label.into(),
            traits,
            objective: Arc::new(objective),
        }
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// `f(s)`, rejecting indices outside the ground set.
    pub fn evaluate(&self, s: &Subset) -> Result<V> {
        self.ground.check(s)?;
        Ok(self.objective.value(s))
    }

    /// `f(s)` for a subset already known to lie in the ground set.
    pub fn value(&self, s: &Subset) -> V {
        debug_assert!(s.bound() <= self.n());
        self.objective.value(s)
    }

    /// The same objective with element `i` renamed to `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut inverse = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::input("permutation length differs from ground set size"));
        }
        for (old, &new) in perm.iter().enumerate() {
            if new >= n || inverse[new] != usize::MAX {
                return Err(Error::input("not a permutation of the ground set"));
            }
            inverse[new] = old;
        }
        let inner = Arc::clone(&self.objective);
        let objective = move |s: &Subset| inner.value(&s.iter().map(|i| inverse[i]).collect());
        Ok(IncrementalInstance {
            ground: self.ground,
            label: format!("{} (relabeled)", self.label),
            traits: self.traits,
            objective: Arc::new(objective),
        })
    }
}

/// A duplicate-free sequence of element indices; the prefix of length `k` is `S_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncrementalOrder {
    sequence: Vec<usize>,
}

impl IncrementalOrder {
    pub fn new(sequence: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = Subset::empty();
        for &x in &sequence {
            if x >= n {
                return Err(Error::input(format!("element {x} outside ground set of size {n}")));
            }
            if !seen.insert(x) {
                return Err(Error::input(format!("element {x} appears twice in the order")));
            }
        }
        Ok(IncrementalOrder { sequence })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn prefix(&self, k: usize) -> Subset {
        self.sequence[..k.min(self.sequence.len())].iter().copied().collect()
    }

    pub fn truncate(&mut self, k: usize) {
        self.sequence.truncate(k);
    }

    /// The order with every element renamed through `perm`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        IncrementalOrder {
            sequence: self.sequence.iter().map(|&x| perm[x]).collect(),
        }
    }
}
