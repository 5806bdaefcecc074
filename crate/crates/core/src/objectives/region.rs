use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{GroundSet, IncrementalInstance, ObjectiveTraits};
use crate::oracle::OptimumTable;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Densities {
    /// `δ(i) = i^(β-1)`.
    Beta(f64),
    /// `δ(1..=N)` listed explicitly.
    Explicit(Vec<f64>),
}

/// `N` regions; region `R_i` (1-based) holds `i` elements with density `δ(i)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub regions: usize,
    pub densities: Densities,
}

impl RegionSpec {
    pub fn beta(regions: usize, beta: f64) -> Result<Self> {
        let spec = RegionSpec {
            regions,
            densities: Densities::Beta(beta),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.regions == 0 {
            return Err(Error::input("region count must be at least 1"));
        }
        match &self.densities {
            Densities::Beta(b) => {
                if !(*b > 0.0 && *b < 1.0) {
                    return Err(Error::input(format!("beta must lie in (0, 1), got {b}")));
                }
            }
            Densities::Explicit(d) => {
                if d.len() != self.regions {
                    return Err(Error::input(format!(
                        "expected {} densities, got {}",
                        self.regions,
                        d.len()
                    )));
                }
                if d.iter().any(|x| !(*x >= 0.0) || !x.is_finite()) {
                    return Err(Error::input("densities must be finite and nonnegative"));
                }
            }
        }
        Ok(())
    }

    pub fn ground_size(&self) -> usize {
        self.regions * (self.regions + 1) / 2
    }

    pub fn density(&self, i: usize) -> f64 {
        match &self.densities {
            Densities::Beta(b) => (i as f64).powf(b - 1.0),
            Densities::Explicit(d) => d[i - 1],
        }
    }

    /// Value of the whole region, `i·δ(i)`.
    pub fn region_value(&self, i: usize) -> f64 {
        match &self.densities {
            Densities::Beta(b) => (i as f64).powf(*b),
            Densities::Explicit(d) => i as f64 * d[i - 1],
        }
    }

    /// Element indices of `R_i`.
    pub fn block(&self, i: usize) -> Range<usize> {
        let start = i * (i - 1) / 2;
        start..start + i
    }

    pub fn region_of(&self, e: usize) -> usize {
        // largest i with i(i-1)/2 <= e
        let mut i = ((2.0 * e as f64 + 0.25).sqrt() + 0.5) as usize;
        while i * (i - 1) / 2 > e {
            i -= 1;
        }
        while (i + 1) * i / 2 <= e {
            i += 1;
        }
        i
    }

    pub fn value(&self, s: &Subset) -> f64 {
        let mut counts = vec![0usize; self.regions + 1];
        for e in s.iter() {
            counts[self.region_of(e)] += 1;
        }
        counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| c as f64 * self.density(i))
            .fold(0.0, f64::max)
    }
}

impl RegionSpec {
    /// An optimum of cardinality `k` in closed form: the region maximizing
    /// `min(k, i)·δ(i)` (smallest `i` on ties), topped up with the lowest
    /// indices outside it.
    pub fn optimum(&self, k: usize) -> Result<(Subset, f64)> {
        let n = self.ground_size();
        if k == 0 || k > n {
            return Err(Error::input(format!("cardinality {k} outside 1..={n}")));
        }
        let (mut best_i, mut best) = (1, f64::NEG_INFINITY);
        for i in 1..=self.regions {
            let v = k.min(i) as f64 * self.density(i);
            if v > best {
                (best_i, best) = (i, v);
            }
        }
        let block = self.block(best_i);
        let mut set: Subset = block.clone().take(k).collect();
        let mut filler = (0..n).filter(|e| !block.contains(e));
        while set.len() < k {
            set.insert(filler.next().expect("k <= n"));
        }
        let value = self.value(&set);
        Ok((set, value))
    }

    /// [`OptimumTable`] for `k = 1..=k_max` without enumeration.
    pub fn optimum_table(&self, k_max: usize) -> Result<OptimumTable<f64>> {
        let mut values = Vec::with_capacity(k_max);
        let mut witnesses = Vec::with_capacity(k_max);
        for k in 1..=k_max {
            let (w, v) = self.optimum(k)?;
            values.push(v);
            witnesses.push(w);
        }
        OptimumTable::from_parts(values, witnesses)
    }
}

/// `f(S) = max_i |R_i ∩ S|·δ(i)`.
pub fn region_choosing_objective(spec: &RegionSpec, label: &str) -> Result<IncrementalInstance<f64>> {
    spec.validate()?;
    let owned = spec.clone();
    Ok(IncrementalInstance::new(
        GroundSet::new(spec.ground_size())?,
        label,
        ObjectiveTraits::INCREMENTAL,
        move |s: &Subset| owned.value(s),
    ))
}
