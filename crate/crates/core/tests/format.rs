mod common;

use common::{random_graph, random_knapsack, random_set_system};
use incmax::adversarial::{
    fig1_flow, fig3_bridge_flow, gen_bridge_flow_gk, gen_disjoint_paths_trap, gen_independent_set_trap,
    gen_knapsack_trap, gen_region_choosing, p3_matching,
};
use incmax::format::{AnyInstance, InstanceFile, TableSpec, TableValue};
use incmax::objectives::{Densities, Item, KnapsackInstance, RegionSpec, SetSystem};
use incmax::Subset;
use proptest::prelude::*;

fn all_generated() -> Vec<InstanceFile> {
    let cover = random_set_system(1, 6, 4);
    vec![
        InstanceFile::Knapsack(random_knapsack(3, 7)),
        InstanceFile::Knapsack(gen_knapsack_trap(4, 1.0 / 16.0).unwrap()),
        InstanceFile::Matching(random_graph(4, 6, 8)),
        InstanceFile::Matching(p3_matching()),
        InstanceFile::SetPacking(gen_independent_set_trap(3, 1.0 / 12.0).unwrap()),
        InstanceFile::Coverage(SetSystem {
            opening_costs: Some(vec![0.1, 0.2, 0.3, 0.4]),
            ..cover
        }),
        InstanceFile::DisjointPaths(gen_disjoint_paths_trap(2, 0.125).unwrap()),
        InstanceFile::RegionChoosing(gen_region_choosing(6, 0.86).unwrap().0),
        InstanceFile::RegionChoosing(RegionSpec {
            regions: 3,
            densities: Densities::Explicit(vec![1.0, 0.75, 0.1]),
        }),
        InstanceFile::BridgeFlow(gen_bridge_flow_gk(3).unwrap()),
        InstanceFile::BridgeFlow(fig3_bridge_flow()),
        InstanceFile::Flow(fig1_flow()),
        InstanceFile::Table(TableSpec {
            n: 2,
            values: [("1".into(), TableValue::Exact("1/3".into())), ("3".into(), TableValue::Exact("2".into()))]
                .into_iter()
                .collect(),
        }),
    ]
}

fn values(inst: &AnyInstance) -> Vec<String> {
    let n = inst.n().min(8);
    (0u64..1 << n)
        .map(|m| {
            let s = Subset::from_mask(m);
            match inst {
                AnyInstance::Float(i) => i.value(&s).to_bits().to_string(),
                AnyInstance::Exact(i) => i.value(&s).to_string(),
            }
        })
        .collect()
}

#[test]
fn generated_instances_round_trip_exactly() {
    for file in all_generated() {
        let text = file.to_json();
        let back = InstanceFile::from_json(&text).unwrap();
        assert_eq!(back, file, "{}", file.kind());
        assert_eq!(back.to_json(), text);
        let (a, b) = (file.build("a").unwrap(), back.build("b").unwrap());
        assert_eq!(values(&a), values(&b), "{}", file.kind());
    }
}

#[test]
fn exact_values_are_written_as_fractions() {
    let text = InstanceFile::BridgeFlow(gen_bridge_flow_gk(2).unwrap()).to_json();
    assert!(text.contains("\"16\""));
    assert!(text.contains("\"inf\""));
    let text = InstanceFile::BridgeFlow(gen_bridge_flow_gk(3).unwrap()).to_json();
    assert!(text.contains("\"729/64\""));
}

#[test]
fn malformed_files_are_input_errors() {
    for text in [
        "not json",
        r#"{"kind": "knapsack"}"#,
        r#"{"kind": "knapsack", "items": [{"size": -1.0, "value": 1.0}]}"#,
        r#"{"kind": "table", "n": 2, "values": {"x": 1.0}}"#,
        r#"{"kind": "table", "n": 2, "values": {"1": "1/0"}}"#,
        r#"{"kind": "region_choosing", "regions": 2, "densities": {"beta": 1.5}}"#,
    ] {
        let err = InstanceFile::from_json(text).and_then(|f| f.build("bad").map(|_| ()));
        assert!(matches!(err, Err(incmax::Error::Input(_))), "{text}");
    }
}

proptest! {
    #[test]
    fn arbitrary_float_items_round_trip_bit_for_bit(
        items in prop::collection::vec((1e-12f64..1.0, 0.0f64..1e9), 1..12)
    ) {
        let file = InstanceFile::Knapsack(KnapsackInstance {
            items: items.into_iter().map(|(size, value)| Item { size, value }).collect(),
        });
        let back = InstanceFile::from_json(&file.to_json()).unwrap();
        let (InstanceFile::Knapsack(a), InstanceFile::Knapsack(b)) = (&file, &back) else { unreachable!() };
        for (x, y) in a.items.iter().zip(&b.items) {
            prop_assert_eq!(x.size.to_bits(), y.size.to_bits());
            prop_assert_eq!(x.value.to_bits(), y.value.to_bits());
        }
    }
}
