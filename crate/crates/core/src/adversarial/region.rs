//! Region Choosing lower-bound machinery: problematic pairs, schedule
//! conditions, and the best structured schedule on a finite instance.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::IncrementalInstance;
use crate::objectives::region::{region_choosing_objective, RegionSpec};
use crate::scalar::Rational;

pub const MAX_SCHEDULE_REGIONS: usize = 40;

/// ε values tried by [`certify_problematic`], coarsest first.
pub const EPSILON_GRID: [f64; 6] = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6];
pub const GRID_POINTS: usize = 100_000;

/// Left end of the sampled interval; the first cell still reaches down to 1.
const GRID_START_OFFSET: f64 = 1e-9;

/// Margin absorbing round-off in the cell bounds.
const CERTIFY_MARGIN: f64 = 1e-12;

/// β-decreasing Region Choosing with `δ(i) = i^(β−1)`.
pub fn gen_region_choosing(regions: usize, beta: f64) -> Result<(RegionSpec, IncrementalInstance<f64>)> {
    let spec = RegionSpec::beta(regions, beta)?;
    let inst = region_choosing_objective(&spec, &format!("region:N={regions},beta={beta}"))?;
    Ok((spec, inst))
}

fn check_pair(rho: f64, beta: f64) -> Result<()> {
    if !(rho >= 1.0) || !rho.is_finite() {
        return Err(Error::input(format!("rho must be at least 1, got {rho}")));
    }
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::input(format!("beta must lie in (0, 1), got {beta}")));
    }
    Ok(())
}

fn first_term(r: f64, beta: f64, eps: f64, x: f64) -> f64 {
    (r + eps - x).powf(1.0 / (1.0 - beta))
}

fn second_term(eps: f64, x: f64) -> f64 {
    x / (x - 1.0 + eps)
}

/// `h(x) = (ρ^(1/β) + ε − x)^(1/(1−β)) − x/(x − 1 + ε)` on `(1, ρ^(1/β)]`.
pub fn h_function(rho: f64, beta: f64, eps: f64, x: f64) -> Result<f64> {
    check_pair(rho, beta)?;
    if !(eps > 0.0) {
        return Err(Error::input(format!("epsilon must be positive, got {eps}")));
    }
    let r = rho.powf(1.0 / beta);
    if !(x > 1.0 && x <= r) {
        return Err(Error::input(format!("x = {x} outside (1, {r}]")));
    }
    Ok(first_term(r, beta, eps, x) - second_term(eps, x))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProblematicPairCertificate {
    pub rho: f64,
    pub beta: f64,
    /// The ε that certified, or the most promising one tried.
    pub epsilon: f64,
    pub grid_points: usize,
    /// Largest sampled value of `h` and where it occurs.
    pub sampled_max: f64,
    pub worst_x: f64,
    /// Upper bound on `h` over the whole interval, valid between samples.
    pub rigorous_sup: f64,
    pub certified: bool,
}

struct Scan {
    sampled_max: f64,
    worst_x: f64,
    rigorous_sup: f64,
}

/// Both terms of `h` decrease in `x` when `ε < 1`, so on a cell `[a, b]`
/// `h ≤ A(a) − B(b)`; the first cell starts at 1 to cover `(1, 1 + 10⁻⁹)`.
fn scan(r: f64, beta: f64, eps: f64) -> Scan {
    let lo = 1.0 + GRID_START_OFFSET;
    let step = (r - lo) / (GRID_POINTS - 1) as f64;
    let point = |j: usize| if j + 1 == GRID_POINTS { r } else { lo + j as f64 * step };
    let (sampled_max, worst) = (0..GRID_POINTS)
        .into_par_iter()
        .map(|j| {
            let x = point(j);
            (first_term(r, beta, eps, x) - second_term(eps, x), j)
        })
        .reduce(|| (f64::NEG_INFINITY, usize::MAX), pick_max);
    let rigorous_sup = (0..GRID_POINTS)
        .into_par_iter()
        .map(|j| {
            let a = if j == 0 { 1.0 } else { point(j - 1) };
            first_term(r, beta, eps, a) - second_term(eps, point(j))
        })
        .reduce(|| f64::NEG_INFINITY, f64::max);
    Scan {
        sampled_max,
        worst_x: point(worst),
        rigorous_sup,
    }
}

fn pick_max(a: (f64, usize), b: (f64, usize)) -> (f64, usize) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

/// Certifies that `h < 0` on `(1, ρ^(1/β)]` for some ε in [`EPSILON_GRID`].
pub fn certify_problematic(rho: f64, beta: f64) -> Result<ProblematicPairCertificate> {
    check_pair(rho, beta)?;
    let r = rho.powf(1.0 / beta);
    let mut cert = ProblematicPairCertificate {
        rho,
        beta,
        epsilon: EPSILON_GRID[0],
        grid_points: GRID_POINTS,
        sampled_max: f64::NAN,
        worst_x: f64::NAN,
        rigorous_sup: f64::INFINITY,
        certified: false,
    };
    // an empty interval certifies nothing
    if r <= 1.0 + GRID_START_OFFSET {
        return Ok(cert);
    }
    for eps in EPSILON_GRID {
        let s = scan(r, beta, eps);
        let improves = s.rigorous_sup < cert.rigorous_sup;
        if improves {
            cert.epsilon = eps;
            cert.sampled_max = s.sampled_max;
            cert.worst_x = s.worst_x;
            cert.rigorous_sup = s.rigorous_sup;
        }
        if s.rigorous_sup < -CERTIFY_MARGIN {
            cert.certified = true;
            break;
        }
    }
    Ok(cert)
}

/// Region indices `k_0 < k_1 < … < k_m` of a structured schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScheduleSequence {
    pub ks: Vec<u64>,
}

impl ScheduleSequence {
    pub fn new(ks: Vec<u64>) -> Result<Self> {
        if ks.is_empty() || ks[0] == 0 {
            return Err(Error::input("schedule must start with a positive region index"));
        }
        if ks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("schedule must be strictly increasing"));
        }
        Ok(ScheduleSequence { ks })
    }

    /// `α_i = (k_0 + … + k_i) / k_i`.
    pub fn alphas(&self) -> Vec<Rational> {
        let mut total = 0u64;
        self.ks
            .iter()
            .map(|&k| {
                total += k;
                Rational::new(total.into(), k.into())
            })
            .collect()
    }

    /// `q_i = k_i / k_{i−1}` for `i ≥ 1`.
    pub fn ratios(&self) -> Vec<Rational> {
        self.ks
            .windows(2)
            .map(|w| Rational::new(w[1].into(), w[0].into()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScheduleCheck {
    pub holds: bool,
    pub first_violation: Option<usize>,
}

/// Checks `α_i ≤ ρ^(1/β)` for every `i`. The threshold is the exact rational
/// value of its double, so each comparison is exact.
pub fn check_schedule_condition(seq: &ScheduleSequence, rho: f64, beta: f64) -> Result<ScheduleCheck> {
    check_pair(rho, beta)?;
    let threshold = Rational::from_float(rho.powf(1.0 / beta))
        .ok_or_else(|| Error::input("rho^(1/beta) is not finite"))?;
    let first_violation = seq.alphas().iter().position(|a| *a > threshold);
    Ok(ScheduleCheck {
        holds: first_violation.is_none(),
        first_violation,
    })
}

/// Tables for exact evaluation of structured schedules on the β-instance.
struct RegionTables {
    regions: usize,
    /// `i^β` for `i = 0..=N`.
    value: Vec<f64>,
    /// `i^(β−1)` for `i = 0..=N` (entry 0 unused).
    density: Vec<f64>,
}

impl RegionTables {
    fn new(regions: usize, beta: f64) -> Self {
        RegionTables {
            regions,
            value: (0..=regions).map(|i| (i as f64).powf(beta)).collect(),
            density: (0..=regions).map(|i| (i as f64).powf(beta - 1.0)).collect(),
        }
    }

    /// Worst ratio over the cardinalities `T+1..=T+q` spent filling region `q`
    /// after region `p` was completed.
    fn phase_ratio(&self, p: usize, consumed: usize, q: usize) -> f64 {
        let held = self.value[p];
        (1..=q)
            .map(|j| {
                let opt = self.value[(consumed + j).min(self.regions)];
                opt / held.max(j as f64 * self.density[q])
            })
            .fold(1.0, f64::max)
    }
}

/// Worst ratio of the order that fills the regions of `seq` one after another.
pub fn schedule_ratio(seq: &ScheduleSequence, regions: usize, beta: f64) -> Result<f64> {
    RegionSpec::beta(regions, beta)?;
    if *seq.ks.last().expect("nonempty") as usize > regions {
        return Err(Error::input(format!("schedule uses a region beyond N = {regions}")));
    }
    let tables = RegionTables::new(regions, beta);
    let (mut p, mut consumed, mut worst) = (0usize, 0usize, 1.0f64);
    for &q in &seq.ks {
        let q = q as usize;
        worst = worst.max(tables.phase_ratio(p, consumed, q));
        p = q;
        consumed += q;
    }
    Ok(worst)
}

/// The structured schedule ending in region `N` whose order has the smallest
/// worst ratio, found by a minimax dynamic program over (last region, elements
/// used). Ties keep the first schedule found in increasing region order.
pub fn best_region_schedule(regions: usize, beta: f64) -> Result<(ScheduleSequence, f64)> {
    RegionSpec::beta(regions, beta)?;
    if regions > MAX_SCHEDULE_REGIONS {
        return Err(Error::resource(
            "schedule search regions",
            regions as u128,
            MAX_SCHEDULE_REGIONS as u128,
        ));
    }
    let tables = RegionTables::new(regions, beta);
    let width = regions * (regions + 1) / 2 + 1;
    // best[p][t]: smallest worst ratio of a schedule ending in region p after t elements
    let mut best = vec![vec![f64::INFINITY; width]; regions + 1];
    let mut parent = vec![vec![usize::MAX; width]; regions + 1];
    best[0][0] = 1.0;
    for p in 0..regions {
        for t in 0..width {
            let here = best[p][t];
            if here.is_infinite() {
                continue;
            }
            for q in p + 1..=regions {
                let cand = here.max(tables.phase_ratio(p, t, q));
                if cand < best[q][t + q] {
                    best[q][t + q] = cand;
                    parent[q][t + q] = p;
                }
            }
        }
    }
    let (mut t, ratio) = best[regions]
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (t, &v)| if v < acc.1 { (t, v) } else { acc });
    let mut ks = Vec::new();
    let mut q = regions;
    while q != 0 {
        ks.push(q as u64);
        let p = parent[q][t];
        t -= q;
        q = p;
    }
    ks.reverse();
    Ok((ScheduleSequence::new(ks)?, ratio))
}
