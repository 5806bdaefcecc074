//! `incmax lowerbound`: the Region Choosing and `G_k` lower-bound computations.

use anyhow::Result;
use incmax::adversarial::{
    best_region_schedule, certify_problematic, gen_bridge_flow_gk, gk_ratio_closed_form,
};
use incmax::algorithms::{greedy, greedy_bound};
use incmax::objectives::bridge_flow_objective;
use incmax::{Scalar, Subset};
use serde_json::json;

use crate::output::sig9;
use crate::{Format, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LowerBoundMode {
    ProblematicPair,
    RegionSearch,
    GkTable,
}

pub struct LowerBoundOptions {
    pub mode: LowerBoundMode,
    pub rho: f64,
    pub beta: f64,
    pub regions: Vec<usize>,
    pub k_min: usize,
    pub k_max: usize,
}

pub fn cmd_lowerbound(opts: &LowerBoundOptions, format: Format) -> Result<(String, Status)> {
    match opts.mode {
        LowerBoundMode::ProblematicPair => problematic_pair(opts, format),
        LowerBoundMode::RegionSearch => region_search(opts, format),
        LowerBoundMode::GkTable => gk_table(opts, format),
    }
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>, footer: Vec<String>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    for f in footer {
        w.write_record([f])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn pretty(v: serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn problematic_pair(opts: &LowerBoundOptions, format: Format) -> Result<(String, Status)> {
    let c = certify_problematic(opts.rho, opts.beta)?;
    let text = match format {
        Format::Json => pretty(serde_json::to_value(&c)?)?,
        Format::Csv => csv_text(
            &["rho", "beta", "epsilon", "grid_points", "sampled_max", "worst_x", "rigorous_sup", "certified"],
            vec![vec![
                c.rho.to_string(),
                c.beta.to_string(),
                c.epsilon.to_string(),
                c.grid_points.to_string(),
                sig9(c.sampled_max),
                sig9(c.worst_x),
                sig9(c.rigorous_sup),
                c.certified.to_string(),
            ]],
            vec![],
        )?,
    };
    Ok((text, Status::Ok))
}

fn region_search(opts: &LowerBoundOptions, format: Format) -> Result<(String, Status)> {
    let mut results = Vec::new();
    for &n in &opts.regions {
        let (schedule, ratio) = best_region_schedule(n, opts.beta)?;
        results.push((n, schedule.ks, ratio));
    }
    let text = match format {
        Format::Json => pretty(json!({
            "beta": opts.beta,
            "results": results.iter().map(|(n, ks, r)| json!({
                "regions": n, "worst_ratio": r, "schedule": ks,
            })).collect::<Vec<_>>(),
        }))?,
        Format::Csv => csv_text(
            &["regions", "worst_ratio", "schedule"],
            results
                .iter()
                .map(|(n, ks, r)| {
                    let ks: Vec<String> = ks.iter().map(u64::to_string).collect();
                    vec![n.to_string(), sig9(*r), ks.join(" ")]
                })
                .collect(),
            vec![],
        )?,
    };
    Ok((text, Status::Ok))
}

fn gk_table(opts: &LowerBoundOptions, format: Format) -> Result<(String, Status)> {
    if opts.k_min < 2 || opts.k_min > opts.k_max {
        anyhow::bail!(incmax::Error::input(format!(
            "need 2 <= kmin <= kmax, got {}..{}",
            opts.k_min, opts.k_max
        )));
    }
    let mut rows = Vec::new();
    let mut all_match = true;
    for k in opts.k_min..=opts.k_max {
        let inst = bridge_flow_objective(&gen_bridge_flow_gk(k)?, "gk")?;
        let (order, _) = greedy(&inst, 2 * k)?;
        let simulated = inst.value(&Subset::full(inst.n())) / inst.value(&order.prefix(2 * k));
        let closed = gk_ratio_closed_form(k);
        let matches = simulated == closed;
        all_match &= matches;
        rows.push((k, simulated, matches));
    }
    let limit = greedy_bound(2.0);
    let text = match format {
        Format::Json => pretty(json!({
            "limit": limit,
            "rows": rows.iter().map(|(k, r, m)| json!({
                "k": k, "ratio": r.to_exact_string(), "equals_closed_form": m,
            })).collect::<Vec<_>>(),
        }))?,
        Format::Csv => csv_text(
            &["k", "ratio", "equals_closed_form"],
            rows.iter()
                .map(|(k, r, m)| vec![k.to_string(), sig9(r.to_f64()), m.to_string()])
                .collect(),
            vec![format!("# limit={}", sig9(limit))],
        )?,
    };
    Ok((text, if all_match { Status::Ok } else { Status::Violated }))
}
