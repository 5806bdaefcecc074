//! Exhaustive and sampled checkers for set-function properties.
//!
//! Exhaustive mode tabulates `f` on all `2^n` subsets once and then scans
//! candidates in ascending bitmask order (first `S`, then `T` or `x`), returning
//! the first violation. Sampled mode draws candidates from a seeded generator.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::instance::IncrementalInstance;
use crate::scalar::Scalar;
use crate::subset::Subset;

/// Largest ground set for the exhaustive single-element monotonicity scan.
pub const MAX_N_MONOTONE: usize = 14;
/// Largest ground set for exhaustive scans over pairs of subsets.
pub const MAX_N_PAIRWISE: usize = 10;
/// Largest ground set for exhaustive scans over single subsets.
pub const MAX_N_PER_SUBSET: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { seed: u64, trials: usize },
}

/// Which cardinality divides the right-hand side of the augmentability inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AugmentDenominator {
    /// `|T|`, the definition used for the greedy guarantee.
    #[default]
    WholeSet,
    /// `|T \ S|`, the form suggested by submodularity. Experimental.
    NewElements,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Property {
    Monotone,
    SubAdditive,
    Accountable,
    AlphaAugmentable(f64),
    Submodular,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Monotone => f.write_str("monotone"),
            Property::SubAdditive => f.write_str("sub-additive"),
            Property::Accountable => f.write_str("accountable"),
            Property::AlphaAugmentable(a) => write!(f, "alpha-augmentable({a})"),
            Property::Submodular => f.write_str("submodular"),
        }
    }
}

/// Accepts the display names, `subadditive`, and `augmentable(α)` for short.
impl FromStr for Property {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim().to_ascii_lowercase();
        let alpha = t
            .strip_prefix("alpha-augmentable(")
            .or_else(|| t.strip_prefix("augmentable("))
            .and_then(|rest| rest.strip_suffix(')'));
        if let Some(a) = alpha {
            return match a.trim().parse::<f64>() {
                Ok(a) if a > 0.0 && a.is_finite() => Ok(Property::AlphaAugmentable(a)),
                _ => Err(Error::input(format!("invalid alpha in {text:?}"))),
            };
        }
        match t.as_str() {
            "monotone" => Ok(Property::Monotone),
            "sub-additive" | "subadditive" => Ok(Property::SubAdditive),
            "accountable" => Ok(Property::Accountable),
            "submodular" => Ok(Property::Submodular),
            _ => Err(Error::input(format!("unknown property {text:?}"))),
        }
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Property {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Witness {
    None,
    Set { s: Subset },
    Extension { s: Subset, x: usize },
    Pair { s: Subset, t: Subset },
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub verdict: Verdict,
    pub witness: Witness,
    pub pairs_checked: u64,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// `f` either tabulated over all masks or evaluated on demand.
struct Values<'a, V: Scalar> {
    inst: &'a IncrementalInstance<V>,
    table: Option<Vec<V>>,
}

impl<'a, V: Scalar> Values<'a, V> {
    fn tabulated(inst: &'a IncrementalInstance<V>) -> Self {
        let n = inst.n();
        let table = (0..1u64 << n)
            .into_par_iter()
            .map(|m| inst.value(&Subset::from_mask(m)))
            .collect();
        Values { inst, table: Some(table) }
    }

    fn lazy(inst: &'a IncrementalInstance<V>) -> Self {
        Values { inst, table: None }
    }

    fn get(&self, s: &Subset) -> V {
        match (&self.table, s.to_mask()) {
            (Some(t), Some(m)) => t[m as usize].clone(),
            _ => self.inst.value(s),
        }
    }
}

fn exhaustive_guard<V: Scalar>(inst: &IncrementalInstance<V>, cap: usize, what: &str) -> Result<()> {
    if inst.n() > cap {
        return Err(Error::resource(
            format!("exhaustive {what} check"),
            inst.n() as u128,
            cap as u128,
        ));
    }
    Ok(())
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Subset {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Scans single subsets `S` (ascending masks when exhaustive).
fn scan_sets<V: Scalar>(
    inst: &IncrementalInstance<V>,
    mode: CheckMode,
    cap: usize,
    what: &str,
    ok: impl Fn(&Values<V>, &Subset) -> bool,
) -> Result<(Witness, u64)> {
    let mut checked = 0u64;
    match mode {
        CheckMode::Exhaustive => {
            exhaustive_guard(inst, cap, what)?;
            let vals = Values::tabulated(inst);
            for m in 0..1u64 << inst.n() {
                let s = Subset::from_mask(m);
                checked += 1;
                if !ok(&vals, &s) {
                    return Ok((Witness::Set { s }, checked));
                }
            }
        }
        CheckMode::Sampled { seed, trials } => {
            let vals = Values::lazy(inst);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let s = random_subset(&mut rng, inst.n());
                checked += 1;
                if !ok(&vals, &s) {
                    return Ok((Witness::Set { s }, checked));
                }
            }
        }
    }
    Ok((Witness::None, checked))
}

/// Scans ordered pairs `(S, T)`.
fn scan_pairs<V: Scalar>(
    inst: &IncrementalInstance<V>,
    mode: CheckMode,
    what: &str,
    ok: impl Fn(&Values<V>, &Subset, &Subset) -> bool,
) -> Result<(Witness, u64)> {
    let mut checked = 0u64;
    match mode {
        CheckMode::Exhaustive => {
            exhaustive_guard(inst, MAX_N_PAIRWISE, what)?;
            let vals = Values::tabulated(inst);
            let full = 1u64 << inst.n();
            for ms in 0..full {
                let s = Subset::from_mask(ms);
                for mt in 0..full {
                    let t = Subset::from_mask(mt);
                    checked += 1;
                    if !ok(&vals, &s, &t) {
                        return Ok((Witness::Pair { s, t }, checked));
                    }
                }
            }
        }
        CheckMode::Sampled { seed, trials } => {
            let vals = Values::lazy(inst);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let s = random_subset(&mut rng, inst.n());
                let t = random_subset(&mut rng, inst.n());
                checked += 1;
                if !ok(&vals, &s, &t) {
                    return Ok((Witness::Pair { s, t }, checked));
                }
            }
        }
    }
    Ok((Witness::None, checked))
}

fn report(property: Property, (witness, pairs_checked): (Witness, u64)) -> PropertyReport {
    let verdict = if witness == Witness::None {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    PropertyReport {
        property,
        verdict,
        witness,
        pairs_checked,
    }
}

/// `S ⊆ T ⇒ f(S) ≤ f(T)`, checked in the equivalent form `f(S) ≤ f(S ∪ {x})`.
pub fn check_monotone<V: Scalar>(inst: &IncrementalInstance<V>, mode: CheckMode) -> Result<PropertyReport> {
    let n = inst.n();
    let ok = |vals: &Values<V>, s: &Subset, x: usize| vals.get(&s.with(x)).ge_tol(&vals.get(s));
    let mut checked = 0u64;
    let mut witness = Witness::None;
    match mode {
        CheckMode::Exhaustive => {
            exhaustive_guard(inst, MAX_N_MONOTONE, "monotonicity")?;
            let vals = Values::tabulated(inst);
            'scan: for m in 0..1u64 << n {
                let s = Subset::from_mask(m);
                for x in (0..n).filter(|&x| !s.contains(x)) {
                    checked += 1;
                    if !ok(&vals, &s, x) {
                        witness = Witness::Extension { s, x };
                        break 'scan;
                    }
                }
            }
        }
        CheckMode::Sampled { seed, trials } => {
            let vals = Values::lazy(inst);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let s = random_subset(&mut rng, n);
                if s.len() == n {
                    continue;
                }
                let outside: Vec<usize> = (0..n).filter(|&x| !s.contains(x)).collect();
                let x = outside[rng.gen_range(0..outside.len())];
                checked += 1;
                if !ok(&vals, &s, x) {
                    witness = Witness::Extension { s, x };
                    break;
                }
            }
        }
    }
    Ok(report(Property::Monotone, (witness, checked)))
}

/// `f(S) + f(T) ≥ f(S ∪ T)`.
pub fn check_subadditive<V: Scalar>(inst: &IncrementalInstance<V>, mode: CheckMode) -> Result<PropertyReport> {
    let found = scan_pairs(inst, mode, "sub-additivity", |vals, s, t| {
        (vals.get(s) + vals.get(t)).ge_tol(&vals.get(&s.union(t)))
    })?;
    Ok(report(Property::SubAdditive, found))
}

/// Every nonempty `S` has some `s` with `f(S \ {s}) ≥ f(S) − f(S)/|S|`.
pub fn check_accountable<V: Scalar>(inst: &IncrementalInstance<V>, mode: CheckMode) -> Result<PropertyReport> {
    let found = scan_sets(inst, mode, MAX_N_PER_SUBSET, "accountability", |vals, s| {
        if s.is_empty() {
            return true;
        }
        let whole = vals.get(s);
        let threshold = whole.clone() - whole.clone() / V::from_usize(s.len());
        let slack = whole.slack();
        s.iter()
            .any(|x| vals.get(&s.without(x)) + slack.clone() >= threshold)
    })?;
    Ok(report(Property::Accountable, found))
}

/// For all `S, T` with `T \ S ≠ ∅` some `t ∈ T \ S` has
/// `f(S ∪ {t}) − f(S) ≥ (f(S ∪ T) − α f(S)) / |T|`.
pub fn check_alpha_augmentable<V: Scalar>(
    inst: &IncrementalInstance<V>,
    alpha: &V,
    mode: CheckMode,
) -> Result<PropertyReport> {
    check_alpha_augmentable_with(inst, alpha, mode, AugmentDenominator::WholeSet)
}

pub fn check_alpha_augmentable_with<V: Scalar>(
    inst: &IncrementalInstance<V>,
    alpha: &V,
    mode: CheckMode,
    denominator: AugmentDenominator,
) -> Result<PropertyReport> {
    if !(*alpha > V::zero()) {
        return Err(Error::input("alpha must be positive"));
    }
    let found = scan_pairs(inst, mode, "augmentability", |vals, s, t| {
        let fresh = t.difference(s);
        if fresh.is_empty() {
            return true;
        }
        let base = vals.get(s);
        let joint = vals.get(&s.union(t));
        let scaled = alpha.clone() * base.clone();
        let slack = if joint >= scaled { joint.slack() } else { scaled.slack() };
        let size = match denominator {
            AugmentDenominator::WholeSet => t.len(),
            AugmentDenominator::NewElements => fresh.len(),
        };
        let need = (joint - scaled) / V::from_usize(size);
        let met = fresh
            .iter()
            .any(|x| vals.get(&s.with(x)) - base.clone() + slack.clone() >= need);
        met
    })?;
    Ok(report(Property::AlphaAugmentable(alpha.to_f64()), found))
}

/// `f(S) + f(T) ≥ f(S ∪ T) + f(S ∩ T)`.
pub fn check_submodular<V: Scalar>(inst: &IncrementalInstance<V>, mode: CheckMode) -> Result<PropertyReport> {
    let found = scan_pairs(inst, mode, "submodularity", |vals, s, t| {
        (vals.get(s) + vals.get(t)).ge_tol(&(vals.get(&s.union(t)) + vals.get(&s.intersection(t))))
    })?;
    Ok(report(Property::Submodular, found))
}

/// Runs the checker for `property`.
pub fn check_property<V: Scalar>(
    inst: &IncrementalInstance<V>,
    property: &Property,
    mode: CheckMode,
) -> Result<PropertyReport> {
    match property {
        Property::Monotone => check_monotone(inst, mode),
        Property::SubAdditive => check_subadditive(inst, mode),
        Property::Accountable => check_accountable(inst, mode),
        Property::Submodular => check_submodular(inst, mode),
        Property::AlphaAugmentable(a) => {
            let alpha = V::from_f64(*a).ok_or_else(|| Error::input(format!("invalid alpha {a}")))?;
            check_alpha_augmentable(inst, &alpha, mode)
        }
    }
}

/// Exhaustive when the ground set is within `cap`, otherwise sampled.
pub fn auto_mode(n: usize, cap: usize, seed: u64, trials: usize) -> CheckMode {
    if n <= cap {
        CheckMode::Exhaustive
    } else {
        CheckMode::Sampled { seed, trials }
    }
}

/// Monotone, sub-additive and accountable, each in exhaustive mode when the
/// size caps allow and sampled otherwise.
pub fn check_incremental<V: Scalar>(
    inst: &IncrementalInstance<V>,
    seed: u64,
    trials: usize,
) -> Result<Vec<PropertyReport>> {
    let n = inst.n();
    Ok(vec![
        check_monotone(inst, auto_mode(n, MAX_N_MONOTONE, seed, trials))?,
        check_subadditive(inst, auto_mode(n, MAX_N_PAIRWISE, seed, trials))?,
        check_accountable(inst, auto_mode(n, MAX_N_PER_SUBSET, seed, trials))?,
    ])
}
