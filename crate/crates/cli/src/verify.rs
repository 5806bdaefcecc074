//! `incmax verify`: property checks, optionally against expected verdicts.

use anyhow::{anyhow, Result};
use incmax::adversarial::{gen_witnesses, Expectation};
use incmax::format::{AnyInstance, InstanceFile};
use incmax::properties::{
    auto_mode, check_property, CheckMode, Property, PropertyReport, Witness, MAX_N_MONOTONE, MAX_N_PAIRWISE, MAX_N_PER_SUBSET,
};
use incmax::IncrementalInstance;
use incmax::Scalar;
use serde_json::json;

use crate::{Format, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ModeArg {
    Auto,
    Exhaustive,
    Sampled,
}

pub struct VerifyOptions {
    pub properties: Vec<Property>,
    pub mode: ModeArg,
    pub seed: u64,
    pub trials: usize,
}

pub fn default_properties() -> Vec<Property> {
    vec![
        Property::Monotone,
        Property::SubAdditive,
        Property::Accountable,
        Property::Submodular,
        Property::AlphaAugmentable(2.0),
    ]
}

/// Reads an expectation file, or the built-in expectations when `source` is
/// `builtin` and the instance is a named witness fixture.
pub fn load_expectations(source: &str, fixture: Option<&str>) -> Result<Vec<Expectation>> {
    if source == "builtin" {
        let name = fixture.ok_or_else(|| {
            anyhow!(incmax::Error::input("built-in expectations exist only for --gen fig1, p3 and fig3"))
        })?;
        let fx = gen_witnesses()
            .into_iter()
            .find(|f| f.name == name)
            .expect("generator names match the fixtures");
        return Ok(fx.expected);
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| anyhow!(incmax::Error::input(format!("cannot read {source}: {e}"))))?;
    serde_json::from_str(&text).map_err(|e| anyhow!(incmax::Error::input(format!("invalid expectation file {source}: {e}"))))
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::None => String::new(),
        Witness::Set { s } => format!("S={s}"),
        Witness::Extension { s, x } => format!("S={s} x={x}"),
        Witness::Pair { s, t } => format!("S={s} T={t}"),
    }
}

fn mode_for(property: &Property, n: usize, opts: &VerifyOptions) -> CheckMode {
    let sampled = CheckMode::Sampled {
        seed: opts.seed,
        trials: opts.trials,
    };
    match opts.mode {
        ModeArg::Exhaustive => CheckMode::Exhaustive,
        ModeArg::Sampled => sampled,
        ModeArg::Auto => {
            let cap = match property {
                Property::Monotone => MAX_N_MONOTONE,
                Property::Accountable => MAX_N_PER_SUBSET,
                _ => MAX_N_PAIRWISE,
            };
            auto_mode(n, cap, opts.seed, opts.trials)
        }
    }
}

fn check_all<V: Scalar>(inst: &IncrementalInstance<V>, opts: &VerifyOptions) -> Result<Vec<(PropertyReport, bool)>> {
    opts.properties
        .iter()
        .map(|p| {
            let mode = mode_for(p, inst.n(), opts);
            let sampled = matches!(mode, CheckMode::Sampled { .. });
            Ok((check_property(inst, p, mode)?, sampled))
        })
        .collect()
}

pub fn cmd_verify(
    file: &InstanceFile,
    label: &str,
    opts: &VerifyOptions,
    expected: Option<&[Expectation]>,
    format: Format,
) -> Result<(String, Status)> {
    let reports = match file.build(label)? {
        AnyInstance::Float(inst) => check_all(&inst, opts)?,
        AnyInstance::Exact(inst) => check_all(&inst, opts)?,
    };
    let verdicts: Vec<Option<bool>> = reports
        .iter()
        .map(|(r, _)| {
            expected.map(|list| list.iter().filter(|e| e.property == r.property).all(|e| e.matches(r)))
        })
        .collect();
    let status = if verdicts.contains(&Some(false)) {
        Status::Violated
    } else {
        Status::Ok
    };
    let text = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["property", "verdict", "mode", "witness", "checked", "matches_expected"])?;
            for ((r, sampled), m) in reports.iter().zip(&verdicts) {
                w.write_record([
                    r.property.to_string(),
                    r.verdict.to_string(),
                    if *sampled { "sampled" } else { "exhaustive" }.to_string(),
                    witness_text(&r.witness),
                    r.pairs_checked.to_string(),
                    crate::output::optional(*m),
                ])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Json => {
            let rows: Vec<_> = reports
                .iter()
                .zip(&verdicts)
                .map(|((r, sampled), m)| {
                    json!({
                        "property": r.property,
                        "verdict": r.verdict,
                        "mode": if *sampled { "sampled" } else { "exhaustive" },
                        "witness": r.witness,
                        "checked": r.pairs_checked,
                        "matches_expected": m,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({ "instance": label, "reports": rows }))? + "\n"
        }
    };
    Ok((text, status))
}
