use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{IncrementalInstance, IncrementalOrder};
use crate::scalar::Scalar;
use crate::subset::Subset;

#[derive(Debug, Clone, Serialize)]
pub struct GreedyStep<V> {
    pub element: usize,
    /// Marginal gain `f(S_k) − f(S_{k−1})`.
    pub gain: V,
    /// `f(S_k)`.
    pub value: V,
    /// Number of candidates that tied for the best value.
    pub ties: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GreedyTrace<V> {
    pub steps: Vec<GreedyStep<V>>,
}

impl<V: Scalar> GreedyTrace<V> {
    pub fn elements(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.element).collect()
    }

    pub fn values(&self) -> Vec<V> {
        self.steps.iter().map(|s| s.value.clone()).collect()
    }
}

/// Adds, at every step, the element whose addition gives the largest value;
/// ties (within float tolerance) go to the smallest index.
pub fn greedy<V: Scalar>(inst: &IncrementalInstance<V>, k_max: usize) -> Result<(IncrementalOrder, GreedyTrace<V>)> {
    let n = inst.n();
    if k_max == 0 || k_max > n {
        return Err(Error::input(format!("k_max {k_max} outside 1..={n}")));
    }
    let mut chosen = Subset::empty();
    let mut current = inst.value(&chosen);
    let mut steps = Vec::with_capacity(k_max);
    for _ in 0..k_max {
        let candidates: Vec<(usize, V)> = (0..n)
            .into_par_iter()
            .filter(|&x| !chosen.contains(x))
            .map(|x| (x, inst.value(&chosen.with(x))))
            .collect();
        let best = candidates
            .iter()
            .map(|(_, v)| v)
            .fold(None::<&V>, |acc, v| match acc {
                Some(a) if a >= v => Some(a),
                _ => Some(v),
            })
            .expect("k_max <= n leaves a candidate")
            .clone();
        let mut tied = candidates.into_iter().filter(|(_, v)| v.ge_tol(&best));
        let (element, value) = tied.next().expect("the maximum ties with itself");
        let ties = 1 + tied.count();
        chosen.insert(element);
        steps.push(GreedyStep {
            element,
            gain: value.clone() - current,
            value: value.clone(),
            ties,
        });
        current = value;
    }
    let order = IncrementalOrder::new(steps.iter().map(|s| s.element).collect(), n)?;
    Ok((order, GreedyTrace { steps }))
}

/// `α·e^α / (e^α − 1)`, the greedy guarantee for α-augmentable objectives.
pub fn greedy_bound(alpha: f64) -> f64 {
    alpha / -(-alpha).exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{GroundSet, ObjectiveTraits};

    #[test]
    fn bound_values() {
        let e = std::f64::consts::E;
        assert!((greedy_bound(1.0) - e / (e - 1.0)).abs() < 1e-12);
        assert!((greedy_bound(2.0) - 2.313_035_285_4).abs() < 1e-9);
        assert!((greedy_bound(1e-6) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn ties_go_to_smallest_index() {
        let w = [1.0, 3.0, 3.0, 2.0];
        let inst = IncrementalInstance::new(
            GroundSet::new(4).unwrap(),
            "modular",
            ObjectiveTraits::INCREMENTAL,
            move |s: &Subset| s.iter().map(|i| w[i]).sum::<f64>(),
        );
        let (order, trace) = greedy(&inst, 4).unwrap();
        assert_eq!(order.as_slice(), &[1, 2, 3, 0]);
        assert_eq!(trace.steps[0].ties, 2);
        assert_eq!(trace.steps[1].ties, 1);
        let total: f64 = trace.steps.iter().map(|s| s.gain).sum();
        assert_eq!(total, 9.0);
    }
}
