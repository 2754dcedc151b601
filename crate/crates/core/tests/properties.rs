use proptest::prelude::*;

use pathfactor::{
    brute_force_factor, build_pseudo_factor, check_biregular, generate, parse_graph,
    serialize_graph, solve, validate_path_factor, validate_pseudo_factor, EdgeSubgraph, GenConfig,
    TieBreakPolicy,
};

fn policy() -> impl Strategy<Value = TieBreakPolicy> {
    prop_oneof![
        Just(TieBreakPolicy::Lexicographic),
        any::<u64>().prop_map(TieBreakPolicy::Seeded),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn generated_graphs_are_simple_and_biregular(k in 1usize..=20, seed in any::<u64>()) {
        let g = generate(&GenConfig::new(k, seed)).unwrap();
        prop_assert!(g.is_simple());
        prop_assert_eq!(check_biregular(&g), Ok(k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serialize_then_parse_is_identity(k in 1usize..=20, seed in any::<u64>()) {
        let g = generate(&GenConfig::new(k, seed)).unwrap();
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text, false).unwrap(), g);
    }

    #[test]
    fn subgraph_degree_sums_match(
        k in 1usize..=6,
        seed in any::<u64>(),
        mask in proptest::collection::vec(any::<bool>(), 72),
    ) {
        let g = generate(&GenConfig::new(k, seed)).unwrap();
        let s = EdgeSubgraph::from_edges(&g, (0..g.edge_count()).filter(|&e| mask[e]));
        let y_sum: usize = g.y_vertices().map(|y| s.degree(y)).sum();
        let x_sum: usize = g.x_vertices().map(|x| s.degree(x)).sum();
        prop_assert_eq!(y_sum, s.len());
        prop_assert_eq!(x_sum, s.len());
        prop_assert!(s.counters_consistent());
    }

    #[test]
    fn pseudo_factor_validates_and_is_deterministic(
        k in prop::sample::select(vec![1usize, 2, 3, 5, 10]),
        seed in any::<u64>(),
        policy in policy(),
    ) {
        let g = generate(&GenConfig::new(k, seed)).unwrap();
        let a = build_pseudo_factor(&g, policy).unwrap();
        let b = build_pseudo_factor(&g, policy).unwrap();
        prop_assert!(validate_pseudo_factor(&g, a.subgraph()).is_valid());
        prop_assert!(a.subgraph().same_edges(b.subgraph()));
        prop_assert_eq!(a.edge_count(), 2 * g.x_count());
    }

    #[test]
    fn solve_yields_k_even_paths(k in 1usize..=20, seed in any::<u64>(), policy in policy()) {
        let g = generate(&GenConfig::new(k, seed)).unwrap();
        let factor = solve(&g, policy).unwrap();
        let report = validate_path_factor(&g, &factor);
        prop_assert!(report.is_valid(), "{}", report);
        prop_assert_eq!(factor.path_count(), k);
        prop_assert_eq!(factor.edge_count(), 6 * k);
        prop_assert_eq!(solve(&g, policy).unwrap(), factor);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn oracle_agrees_with_solver(k in 1usize..=2, seed in any::<u64>()) {
        let g = generate(&GenConfig::new(k, seed)).unwrap();
        let witness = brute_force_factor(&g).unwrap();
        prop_assert!(witness.is_some());
        prop_assert!(validate_path_factor(&g, &witness.unwrap()).is_valid());
        prop_assert!(solve(&g, TieBreakPolicy::Lexicographic).is_ok());
    }

    #[test]
    fn validator_is_pure(k in 1usize..=4, seed in any::<u64>()) {
        let g = generate(&GenConfig::new(k, seed)).unwrap();
        let factor = solve(&g, TieBreakPolicy::Lexicographic).unwrap();
        prop_assert_eq!(validate_path_factor(&g, &factor), validate_path_factor(&g, &factor));
    }
}
