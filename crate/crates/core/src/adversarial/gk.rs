//! The bridge-flow family `G_k` on which greedy loses a factor approaching
//! `2e²/(e²−1)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::objectives::flow::{Arc, BridgeFlowInstance};
use crate::scalar::{rational_pow, Rational};

/// `q = k/(k−1)`.
pub fn gk_base(k: usize) -> Rational {
    Rational::new(BigInt::from(k), BigInt::from(k - 1))
}

struct Layout {
    k: usize,
}

impl Layout {
    const SOURCE: usize = 0;
    const SINK: usize = 1;

    fn v1(&self, i: usize) -> usize {
        2 + (i - 1)
    }
    fn v2(&self, i: usize) -> usize {
        2 + 2 * self.k + (i - 1)
    }
    fn v3(&self, i: usize) -> usize {
        2 + 6 * self.k + (i - 1)
    }
    fn v4(&self, i: usize) -> usize {
        2 + 10 * self.k + (i - 1)
    }
    fn vertices(&self) -> usize {
        2 + 12 * self.k
    }
}

/// Builds `G_k` for `k ≥ 2`.
///
/// Ground element order: the bridges `(v²_j, v³_j)` for `j = k+1..=3k` first,
/// then `j = 1..=k`, then `j = 3k+1..=4k`. Smallest-index tie-breaking thus
/// makes greedy buy the capacitated middle bridges in order.
pub fn gen_bridge_flow_gk(k: usize) -> Result<BridgeFlowInstance> {
    if k < 2 {
        return Err(Error::input(format!("G_k needs k >= 2, got {k}")));
    }
    let l = Layout { k };
    let (s, t) = (Layout::SOURCE, Layout::SINK);
    let q = gk_base(k);
    let one = Rational::one();
    let share = Rational::new(BigInt::one(), BigInt::from(k));
    let mut arcs = Vec::new();
    let mut bridge = vec![usize::MAX; 4 * k + 1];

    for i in 1..=k {
        arcs.push(Arc::new(s, l.v2(i), one.clone()));
        arcs.push(Arc::new(l.v3(3 * k + i), t, one.clone()));
        arcs.push(Arc::unbounded(s, l.v2(3 * k + i)));
        arcs.push(Arc::unbounded(l.v3(i), t));
        bridge[i] = arcs.len();
        arcs.push(Arc::unbounded(l.v2(i), l.v3(i)));
        bridge[3 * k + i] = arcs.len();
        arcs.push(Arc::unbounded(l.v2(3 * k + i), l.v3(3 * k + i)));
    }
    for i in 1..=2 * k {
        let cap = rational_pow(&q, (2 * k + 1 - i) as u32);
        arcs.push(Arc::new(s, l.v1(i), cap.clone()));
        arcs.push(Arc::new(l.v1(i), l.v2(k + i), cap.clone()));
        bridge[k + i] = arcs.len();
        arcs.push(Arc::new(l.v2(k + i), l.v3(k + i), cap.clone()));
        arcs.push(Arc::new(l.v3(k + i), l.v4(i), cap.clone()));
        arcs.push(Arc::new(l.v4(i), t, cap.clone()));
        let side = &cap * &share;
        for j in 1..=k {
            arcs.push(Arc::new(l.v1(i), l.v2(j), side.clone()));
            arcs.push(Arc::new(l.v3(3 * k + j), l.v4(i), side.clone()));
        }
    }

    let cut = (k + 1..=3 * k)
        .chain(1..=k)
        .chain(3 * k + 1..=4 * k)
        .map(|j| bridge[j])
        .collect();
    let mut source_side = vec![false; l.vertices()];
    source_side[s] = true;
    for i in 1..=2 * k {
        source_side[l.v1(i)] = true;
    }
    for i in 1..=4 * k {
        source_side[l.v2(i)] = true;
    }
    let inst = BridgeFlowInstance {
        vertices: l.vertices(),
        source: s,
        sink: t,
        arcs,
        cut,
        source_side,
    };
    inst.validate()?;
    Ok(inst)
}

/// Flow after greedy's first `j` purchases: `Σ_{i=2k+1−j}^{2k} q^i`.
pub fn gk_greedy_value(k: usize, j: usize) -> Rational {
    let q = gk_base(k);
    (2 * k + 1 - j..=2 * k)
        .map(|i| rational_pow(&q, i as u32))
        .fold(Rational::from_integer(0.into()), |acc, x| acc + x)
}

/// `v*_{2k} = 2(k−1)q^{2k+1}`, the full-graph max flow.
pub fn gk_optimum(k: usize) -> Rational {
    Rational::from_integer(BigInt::from(2 * (k - 1))) * rational_pow(&gk_base(k), (2 * k + 1) as u32)
}

/// `2q^{2k} / (q^{2k} − 1)`, greedy's ratio at cardinality `2k`.
pub fn gk_ratio_closed_form(k: usize) -> Rational {
    let p = rational_pow(&gk_base(k), (2 * k) as u32);
    Rational::from_integer(2.into()) * &p / (p - Rational::one())
}
