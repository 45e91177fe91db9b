use proptest::prelude::*;
use weighted_motzkin::enumeration::plane_trees;
use weighted_motzkin::weights::{
    balanced_up_down_weight, dotted_step_total, dotted_weighting, merge_levels, path_weight,
    rebalance_up_down, theorem1_edge_weights, theorem1_step_weights, theorem2_edge_weights,
    theorem2_step_weights, total_motzkin_weight, total_path_weight, total_path_weight_dp,
    total_tree_weight, tree_weight, EdgeWeighting, StepWeighting,
};
use weighted_motzkin::{phi, Error, Poly};

#[test]
fn bijection_transports_builtin_weights() {
    let pairs = [
        (theorem1_edge_weights(), theorem1_step_weights()),
        (theorem2_edge_weights(), theorem2_step_weights()),
    ];
    for (edges, steps) in &pairs {
        for n in 1..=8 {
            for t in plane_trees(n) {
                let p = phi(&t).unwrap();
                assert_eq!(
                    tree_weight(&t, edges).unwrap(),
                    path_weight(&p, steps),
                    "{t}"
                );
            }
            assert_eq!(
                total_tree_weight(n, edges).unwrap(),
                total_path_weight(n - 1, steps)
            );
        }
    }
}

#[test]
fn transport_with_nontrivial_critical_weight() {
    let critical = Poly::from_i64s(&[2, 0, 1]);
    let w = EdgeWeighting {
        critical: critical.clone(),
        ..theorem2_edge_weights()
    };
    for n in 1..=6 {
        for t in plane_trees(n) {
            let p = phi(&t).unwrap();
            assert_eq!(
                tree_weight(&t, &w).unwrap(),
                &critical * &path_weight(&p, &w.transported())
            );
        }
    }
}

#[test]
fn theorem2_reduction_chain() {
    let steps = theorem2_step_weights();
    let g = balanced_up_down_weight();
    let rebalanced = rebalance_up_down(&steps, g.clone(), g.clone()).unwrap();
    let merged = merge_levels(&rebalanced);
    assert_eq!(merged, dotted_weighting(&g));
    for m in 0..=7 {
        let direct = total_path_weight(m, &steps);
        assert_eq!(total_path_weight(m, &rebalanced), direct, "rebalance m={m}");
        assert_eq!(total_motzkin_weight(m, &merged), direct, "merge m={m}");
        assert_eq!(dotted_step_total(m, &g), direct, "dotted m={m}");
        assert_eq!(
            total_tree_weight(m + 1, &theorem2_edge_weights()).unwrap(),
            dotted_step_total(m, &g)
        );
    }
}

#[test]
fn rebalance_rejects_changed_product() {
    let steps = theorem1_step_weights();
    assert!(matches!(
        rebalance_up_down(&steps, Poly::one(), Poly::one()),
        Err(Error::ProductMismatch { .. })
    ));
    // x = x * 1 = 1 * x: swapping is allowed
    let swapped = rebalance_up_down(&steps, Poly::x(), Poly::one()).unwrap();
    for m in 0..=8 {
        assert_eq!(total_path_weight(m, &swapped), total_path_weight(m, &steps));
    }
}

fn arb_small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-3i64..=3, 0..3).prop_map(|c| Poly::from_i64s(&c))
}

fn arb_step_weighting() -> impl Strategy<Value = StepWeighting> {
    (
        arb_small_poly(),
        arb_small_poly(),
        arb_small_poly(),
        arb_small_poly(),
    )
        .prop_map(|(up, down, straight_level, wavy_level)| StepWeighting {
            up,
            down,
            straight_level,
            wavy_level,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn level_merge_preserves_totals(w in arb_step_weighting(), m in 0usize..=8) {
        prop_assert_eq!(total_motzkin_weight(m, &merge_levels(&w)), total_path_weight(m, &w));
    }

    #[test]
    fn rebalance_preserves_totals(w in arb_step_weighting(), g in arb_small_poly(), m in 0usize..=8) {
        // (g^2, 1) -> (g, g), and (up, down) -> (down, up)
        let squared = StepWeighting { up: g.clone(), down: g.clone(), ..w.clone() };
        let square = &g * &g;
        let target = StepWeighting { up: square.clone(), down: Poly::one(), ..w.clone() };
        let moved = rebalance_up_down(&target, g.clone(), g.clone()).unwrap();
        prop_assert_eq!(&moved, &squared);
        prop_assert_eq!(total_path_weight(m, &moved), total_path_weight(m, &target));
        let swapped = rebalance_up_down(&w, w.down.clone(), w.up.clone()).unwrap();
        prop_assert_eq!(total_path_weight(m, &swapped), total_path_weight(m, &w));
    }

    #[test]
    fn dp_agrees_with_enumeration(w in arb_step_weighting(), m in 0usize..=8) {
        prop_assert_eq!(total_path_weight_dp(m, &w), total_path_weight(m, &w));
    }
}
