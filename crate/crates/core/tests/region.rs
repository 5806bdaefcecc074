use incmax::adversarial::{
    best_region_schedule, certify_problematic, check_schedule_condition, gen_region_choosing, h_function,
    schedule_ratio, ScheduleSequence,
};
use incmax::algorithms::{greedy, phase_algorithm_with_oracle};
use incmax::oracle::{optimum_table, DEFAULT_BUDGET};
use incmax::properties::{check_accountable, check_monotone, check_subadditive, CheckMode};
use incmax::{competitive_ratio, IncrementalOrder, Subset};

#[test]
fn certifies_the_known_pair() {
    let cert = certify_problematic(2.18, 0.86).unwrap();
    assert!(cert.certified);
    assert!(cert.rigorous_sup < 0.0);
    assert!(cert.sampled_max <= cert.rigorous_sup);
    let again = h_function(cert.rho, cert.beta, cert.epsilon, cert.worst_x).unwrap();
    assert_eq!(again, cert.sampled_max);
    assert_eq!(certify_problematic(2.18, 0.86).unwrap(), cert);
}

#[test]
fn rejects_trivial_and_weak_pairs() {
    assert!(!certify_problematic(1.0, 0.5).unwrap().certified);
    // a certified 2.7 would contradict the (1+φ) upper bound
    assert!(!certify_problematic(2.7, 0.86).unwrap().certified);
    // weaker bounds certify too
    assert!(certify_problematic(1.5, 0.86).unwrap().certified);
}

#[test]
fn generated_instance_matches_region_values() {
    let (spec, inst) = gen_region_choosing(3, 0.86).unwrap();
    assert_eq!(inst.n(), 6);
    let table = optimum_table(&inst, 3, DEFAULT_BUDGET).unwrap();
    for k in 1..=3 {
        assert!((table.value(k) - (k as f64).powf(0.86)).abs() < 1e-12);
        assert!((spec.density(k) - (k as f64).powf(-0.14)).abs() < 1e-15);
    }
    let (_, single) = gen_region_choosing(1, 0.86).unwrap();
    assert_eq!(single.value(&Subset::full(1)), 1.0);
    for report in [
        check_monotone(&inst, CheckMode::Exhaustive).unwrap(),
        check_subadditive(&inst, CheckMode::Exhaustive).unwrap(),
        check_accountable(&inst, CheckMode::Exhaustive).unwrap(),
    ] {
        assert!(report.holds(), "{}", report.property);
    }
}

fn all_schedules_ending_at(n: u64) -> Vec<ScheduleSequence> {
    (0u64..1 << (n - 1))
        .map(|m| {
            let mut ks: Vec<u64> = (1..n).filter(|i| m & (1 << (i - 1)) != 0).collect();
            ks.push(n);
            ScheduleSequence::new(ks).unwrap()
        })
        .collect()
}

#[test]
fn search_agrees_with_enumeration() {
    for n in 1..=9u64 {
        let (seq, ratio) = best_region_schedule(n as usize, 0.86).unwrap();
        let best = all_schedules_ending_at(n)
            .iter()
            .map(|s| schedule_ratio(s, n as usize, 0.86).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert_eq!(ratio, best, "N={n}");
        assert_eq!(schedule_ratio(&seq, n as usize, 0.86).unwrap(), ratio);
    }
}

#[test]
fn schedule_ratio_matches_the_induced_order() {
    let (spec, inst) = gen_region_choosing(4, 0.86).unwrap();
    let seq = ScheduleSequence::new(vec![1, 2, 4]).unwrap();
    let order: Vec<usize> = seq.ks.iter().flat_map(|&k| spec.block(k as usize)).collect();
    let order = IncrementalOrder::new(order, inst.n()).unwrap();
    let table = optimum_table(&inst, 7, DEFAULT_BUDGET).unwrap();
    let report = competitive_ratio(&inst, &order, &table).unwrap();
    let want = schedule_ratio(&seq, 4, 0.86).unwrap();
    assert!((report.worst_ratio.to_f64() - want).abs() < 1e-12);
}

#[test]
fn best_schedule_trend() {
    let ratios: Vec<f64> = [5, 10, 20, 40]
        .iter()
        .map(|&n| best_region_schedule(n, 0.86).unwrap().1)
        .collect();
    assert!(ratios.windows(2).all(|w| w[0] < w[1]), "{ratios:?}");
    assert!(ratios[3] > 1.5 && ratios[3] < 2.18, "{ratios:?}");
    assert!(best_region_schedule(41, 0.86).unwrap_err().is_resource());
}

#[test]
fn schedule_condition_examples() {
    let geometric = ScheduleSequence::new(vec![1, 3, 8, 21]).unwrap();
    let alpha = geometric.alphas()[3].clone();
    assert!((incmax::Scalar::to_f64(&alpha) - 1.571).abs() < 1e-3);
    assert!(check_schedule_condition(&ScheduleSequence::new(vec![1]).unwrap(), 1.0, 0.5).unwrap().holds);
}

#[test]
fn phase_and_greedy_on_region_choosing() {
    let (spec, inst) = gen_region_choosing(8, 0.86).unwrap();
    let table = spec.optimum_table(8).unwrap();
    let run = phase_algorithm_with_oracle(&inst, 8, |k| spec.optimum(k), 1.0).unwrap();
    let report = competitive_ratio(&inst, &run.order, &table).unwrap();
    assert!(report.worst_ratio.to_f64() <= 1.0 + incmax::algorithms::PHI + 1e-9);
    let (order, _) = greedy(&inst, 8).unwrap();
    assert_eq!(competitive_ratio(&inst, &order, &table).unwrap().rows.len(), 8);
}

/// Minimum worst ratio over every order of the region-choosing instance,
/// enumerated as sequences of region labels (elements of a region are interchangeable).
fn best_over_all_orders(regions: usize, beta: f64) -> f64 {
    fn walk(left: &mut [usize], counts: &mut [usize], c: usize, worst: f64, regions: usize, beta: f64, best: &mut f64) {
        if worst >= *best {
            return;
        }
        if left.iter().all(|&x| x == 0) {
            *best = worst;
            return;
        }
        for i in 1..=regions {
            if left[i] == 0 {
                continue;
            }
            left[i] -= 1;
            counts[i] += 1;
            let alg = (1..=regions)
                .map(|r| counts[r] as f64 * (r as f64).powf(beta - 1.0))
                .fold(0.0, f64::max);
            let opt = ((c + 1).min(regions) as f64).powf(beta);
            walk(left, counts, c + 1, worst.max(opt / alg), regions, beta, best);
            left[i] += 1;
            counts[i] -= 1;
        }
    }
    let mut left: Vec<usize> = (0..=regions).collect();
    let mut counts = vec![0; regions + 1];
    let mut best = f64::INFINITY;
    walk(&mut left, &mut counts, 0, 1.0, regions, beta, &mut best);
    best
}

#[test]
fn structured_schedules_are_optimal_on_small_instances() {
    for n in 1..=4 {
        for beta in [0.5, 0.86] {
            let (_, dp) = best_region_schedule(n, beta).unwrap();
            let brute = best_over_all_orders(n, beta);
            assert!((dp - brute).abs() < 1e-12, "N={n}, beta={beta}: {dp} vs {brute}");
        }
    }
}
