//! `incmax run`: competitive ratios of the phase algorithm and greedy.

use anyhow::{bail, Result};
use incmax::algorithms::{greedy, greedy_bound, phase_algorithm, phase_algorithm_with_oracle};
use incmax::format::{AnyInstance, InstanceFile};
use incmax::oracle::optimum_table;
use incmax::{competitive_ratio, IncrementalInstance, IncrementalOrder, OptimumTable, Subset};
use serde_json::{json, Value};

use crate::output::{optional, ratio_json, sig9, JsonScalar};
use crate::{Algorithm, Format, Status};

pub struct RunOptions {
    pub alg: Algorithm,
    pub k_max: Option<usize>,
    pub budget: u128,
    /// Oracle quality assumed for greedy's bound; no bound without it.
    pub alpha: Option<f64>,
}

struct Row {
    k: usize,
    alg: (Value, f64),
    opt: (Value, f64),
    ratio: (Value, f64),
}

struct AlgRun {
    name: &'static str,
    order: Vec<usize>,
    rows: Vec<Row>,
    worst: (Value, f64),
    argmax_k: usize,
    bound: Option<f64>,
}

impl AlgRun {
    fn satisfied(&self) -> Option<bool> {
        self.bound.map(|b| self.worst.1 <= b + 1e-9)
    }
}

type Oracle<'a, V> = Option<Box<dyn Fn(usize) -> incmax::Result<(Subset, V)> + 'a>>;

fn evaluate<V: JsonScalar>(
    name: &'static str,
    inst: &IncrementalInstance<V>,
    order: IncrementalOrder,
    table: &OptimumTable<V>,
    bound: Option<f64>,
) -> Result<AlgRun> {
    let report = competitive_ratio(inst, &order, table)?;
    let rows = report
        .rows
        .iter()
        .map(|r| Row {
            k: r.k,
            alg: (r.alg_value.json(), r.alg_value.to_f64()),
            opt: (r.opt_value.json(), r.opt_value.to_f64()),
            ratio: (ratio_json(&r.ratio), r.ratio.to_f64()),
        })
        .collect();
    Ok(AlgRun {
        name,
        order: order.as_slice().to_vec(),
        rows,
        worst: (ratio_json(&report.worst_ratio), report.worst_ratio.to_f64()),
        argmax_k: report.argmax_k,
        bound,
    })
}

fn run_all<V: JsonScalar>(
    inst: &IncrementalInstance<V>,
    opts: &RunOptions,
    oracle: Oracle<'_, V>,
    table: Option<OptimumTable<V>>,
) -> Result<Vec<AlgRun>> {
    let n = inst.n();
    let k_max = opts.k_max.unwrap_or(n);
    if k_max == 0 || k_max > n {
        bail!(incmax::Error::input(format!("--kmax {k_max} outside 1..={n}")));
    }
    let table = match table {
        Some(t) => t,
        None => optimum_table(inst, k_max, opts.budget)?,
    };
    let mut runs = Vec::new();
    if matches!(opts.alg, Algorithm::Phase | Algorithm::Both) {
        let run = match &oracle {
            Some(o) => phase_algorithm_with_oracle(inst, k_max, o, 1.0)?,
            None => phase_algorithm(inst, k_max, opts.budget)?,
        };
        runs.push(evaluate("phase", inst, run.order, &table, Some(run.claimed_bound))?);
    }
    if matches!(opts.alg, Algorithm::Greedy | Algorithm::Both) {
        let (order, _) = greedy(inst, k_max)?;
        runs.push(evaluate("greedy", inst, order, &table, opts.alpha.map(greedy_bound))?);
    }
    Ok(runs)
}

pub fn cmd_run(file: &InstanceFile, label: &str, opts: &RunOptions, format: Format) -> Result<(String, Status)> {
    let built = file.build(label)?;
    let runs = match (&built, file) {
        // region choosing has a closed-form optimum, so no enumeration is needed
        (AnyInstance::Float(inst), InstanceFile::RegionChoosing(spec)) => {
            let k_max = opts.k_max.unwrap_or(inst.n()).clamp(1, inst.n());
            let oracle: Oracle<'_, f64> = Some(Box::new(|k| spec.optimum(k)));
            run_all(inst, opts, oracle, Some(spec.optimum_table(k_max)?))?
        }
        (AnyInstance::Float(inst), _) => run_all(inst, opts, None, None)?,
        (AnyInstance::Exact(inst), _) => run_all(inst, opts, None, None)?,
    };
    let status = if runs.iter().any(|r| r.satisfied() == Some(false)) {
        Status::Violated
    } else {
        Status::Ok
    };
    let text = match format {
        Format::Csv => csv_report(&runs)?,
        Format::Json => json_report(label, built.n(), &runs),
    };
    Ok((text, status))
}

fn csv_report(runs: &[AlgRun]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for run in runs {
        if runs.len() > 1 {
            w.write_record([format!("# algorithm={}", run.name)])?;
        }
        w.write_record(["k", "alg_value", "opt_value", "ratio"])?;
        for r in &run.rows {
            w.write_record([r.k.to_string(), sig9(r.alg.1), sig9(r.opt.1), sig9(r.ratio.1)])?;
        }
        w.write_record([format!("# worst_ratio={}", sig9(run.worst.1))])?;
        w.write_record([format!("# argmax_k={}", run.argmax_k)])?;
        w.write_record([format!("# bound={}", optional(run.bound.map(sig9)))])?;
        w.write_record([format!("# bound_satisfied={}", optional(run.satisfied()))])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_report(label: &str, n: usize, runs: &[AlgRun]) -> String {
    let runs: Vec<Value> = runs
        .iter()
        .map(|run| {
            json!({
                "algorithm": run.name,
                "order": run.order,
                "rows": run.rows.iter().map(|r| json!({
                    "k": r.k,
                    "alg_value": r.alg.0,
                    "opt_value": r.opt.0,
                    "ratio": r.ratio.0,
                })).collect::<Vec<_>>(),
                "worst_ratio": run.worst.0,
                "argmax_k": run.argmax_k,
                "bound": run.bound,
                "bound_satisfied": run.satisfied(),
            })
        })
        .collect();
    let doc = json!({ "instance": label, "n": n, "runs": runs });
    serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
}
