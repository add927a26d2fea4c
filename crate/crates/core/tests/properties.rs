//! Property tests for the graph operators and solvers beyond the
//! acceptance list: power monotonicity, edge-list round trips on
//! arbitrary graphs, and solver/oracle agreement on random instances.

use proptest::prelude::*;

use chromyc::{
    chromatic_number, clique_lower_bound, diameter, extremal_coloring, graph_power,
    greedy_coloring, is_independent_set, mycielskian, oracle_extremal, parse_edgelist,
    write_edgelist, Family, FamilyInstance, Graph, OptMode,
};

fn arb_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = (n * n.saturating_sub(1) / 2) as usize;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn arb_family() -> impl Strategy<Value = FamilyInstance> {
    prop_oneof![
        (1u32..=8).prop_map(|n| FamilyInstance::simple(Family::Path, n).unwrap()),
        (3u32..=8).prop_map(|n| FamilyInstance::simple(Family::Cycle, n).unwrap()),
        (1u32..=6).prop_map(|n| FamilyInstance::simple(Family::Complete, n).unwrap()),
        (1u32..=4, 1u32..=4).prop_map(|(a, b)| FamilyInstance::bipartite(a, b).unwrap()),
        (3u32..=7).prop_map(|n| FamilyInstance::simple(Family::Wheel, n).unwrap()),
        (1u32..=7).prop_map(|n| FamilyInstance::simple(Family::Fan, n).unwrap()),
    ]
}

proptest! {
    #[test]
    fn power_is_monotone_and_diameter_completes(fam in arb_family(), r in 1u32..=3, extra in 0u32..=3) {
        let g = fam.build().unwrap();
        let small = graph_power(&g, r).unwrap();
        let big = graph_power(&g, r + extra).unwrap();
        for (u, v) in small.edges() {
            prop_assert!(big.has_edge(u, v), "edge ({u},{v}) lost when raising the power");
        }
        if g.is_connected() && g.vertex_count() >= 2 {
            let d = diameter(&g).unwrap();
            let complete = graph_power(&g, d).unwrap();
            let n = complete.vertex_count() as usize;
            prop_assert_eq!(complete.edge_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn power_one_is_identity(fam in arb_family()) {
        let g = fam.build().unwrap();
        prop_assert_eq!(graph_power(&g, 1).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(g in arb_graph(12)) {
        let text = write_edgelist(&g);
        prop_assert_eq!(parse_edgelist(&text).unwrap(), g);
    }

    #[test]
    fn greedy_and_clique_bracket_chi(g in arb_graph(9)) {
        let chi = chromatic_number(&g);
        let witness = greedy_coloring(&g);
        prop_assert!(witness.is_proper(&g));
        prop_assert!(clique_lower_bound(&g) <= chi);
        prop_assert!(chi <= witness.k());
    }

    #[test]
    fn solver_matches_oracle_on_random_graphs(g in arb_graph(8)) {
        let chi = chromatic_number(&g);
        for mode in [OptMode::Min, OptMode::Max] {
            let solver = extremal_coloring(&g, chi, mode).unwrap();
            let oracle = oracle_extremal(&g, chi, mode).unwrap();
            prop_assert_eq!(solver.omega, oracle.result.omega);
            prop_assert_eq!(&solver.size_vector, &oracle.result.size_vector);
            // witnesses are proper, surjective and realize omega
            prop_assert!(solver.witness.is_proper(&g));
            prop_assert_eq!(solver.witness.omega(), solver.omega);
            for class in solver.witness.classes() {
                prop_assert!(is_independent_set(&g, &class).unwrap());
            }
        }
    }

    #[test]
    fn min_sum_below_max_sum_with_constant_equality(g in arb_graph(8)) {
        let chi = chromatic_number(&g);
        let min = oracle_extremal(&g, chi, OptMode::Min).unwrap();
        let max = oracle_extremal(&g, chi, OptMode::Max).unwrap();
        prop_assert!(min.result.omega <= max.result.omega);
        let all_constant = min
            .optimal_size_vectors
            .iter()
            .chain(max.optimal_size_vectors.iter())
            .all(|v| v.sizes().iter().all(|&t| t == v.sizes()[0]));
        prop_assert_eq!(min.result.omega == max.result.omega, all_constant);
    }

    #[test]
    fn extremal_results_are_deterministic(g in arb_graph(8), pick_max in any::<bool>()) {
        let chi = chromatic_number(&g);
        let mode = if pick_max { OptMode::Max } else { OptMode::Min };
        let first = extremal_coloring(&g, chi, mode).unwrap();
        let second = extremal_coloring(&g, chi, mode).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn mycielskian_raises_chi_by_one(fam in arb_family()) {
        let g = fam.build().unwrap();
        prop_assume!(g.edge_count() > 0);
        prop_assume!(g.vertex_count() <= 6);
        let m = mycielskian(&g);
        prop_assert_eq!(chromatic_number(&m), chromatic_number(&g) + 1);
    }
}
