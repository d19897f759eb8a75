mod common;

use lapspec::energy::complete_target;
use lapspec::rational::{int, to_f64};
use lapspec::realize::JacobiOptions;
use lapspec::spectrum::{complement_spectrum, join_spectra, union_spectra};
use lapspec::{
    is_cospectral, is_l_borderenergetic, laplacian_energy, parse, realize, spectrum_of, GraphExpr,
    Rational, Spectrum,
};
use proptest::prelude::*;

fn expr_strategy(max_order: u64, max_depth: usize) -> impl Strategy<Value = GraphExpr> {
    any::<u64>().prop_map(move |seed| {
        common::random_expr(&mut common::rng(seed), max_order, max_depth)
    })
}

fn components(g: &lapspec::DenseGraph) -> u64 {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for (v, flag) in seen.iter_mut().enumerate() {
                if u != v && g.has_edge(u, v) && !*flag {
                    *flag = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_then_parse_is_identity(e in expr_strategy(40, 6)) {
        let text = e.render();
        prop_assert_eq!(parse(&text).unwrap(), e.clone());
        prop_assert_eq!(e.to_string(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn spectrum_basic_invariants(e in expr_strategy(30, 6)) {
        let s = spectrum_of(&e);
        let n = e.order();
        prop_assert_eq!(s.order(), n);
        prop_assert_eq!(s.entries().iter().map(|(_, k)| *k).sum::<u64>(), n);
        prop_assert_eq!(s.trace(), int(2 * e.edge_count() as i128));
        prop_assert!(s.multiplicity_of_zero() >= 1);
        prop_assert!(s.max() <= int(n as i128));
        prop_assert!(s.values().all(|mu| mu >= int(0)));
    }

    #[test]
    fn zero_multiplicity_counts_components(e in expr_strategy(14, 6)) {
        let g = realize(&e).unwrap();
        prop_assert_eq!(spectrum_of(&e).multiplicity_of_zero(), components(&g));
    }

    #[test]
    fn complement_is_an_involution(e in expr_strategy(30, 6)) {
        let s = spectrum_of(&e);
        prop_assert_eq!(complement_spectrum(&complement_spectrum(&s)), s.clone());
        let twice = GraphExpr::complement(GraphExpr::complement(e.clone()));
        prop_assert_eq!(spectrum_of(&twice), s);
    }

    #[test]
    fn join_and_union_commute(a in expr_strategy(15, 4), b in expr_strategy(15, 4)) {
        let (sa, sb) = (spectrum_of(&a), spectrum_of(&b));
        prop_assert_eq!(join_spectra(&sa, &sb), join_spectra(&sb, &sa));
        prop_assert_eq!(union_spectra(&sa, &sb), union_spectra(&sb, &sa));
        prop_assert_eq!(
            spectrum_of(&GraphExpr::join(a.clone(), b.clone())),
            spectrum_of(&GraphExpr::join(b, a))
        );
    }

    #[test]
    fn join_is_complement_of_union_of_complements(a in expr_strategy(15, 4), b in expr_strategy(15, 4)) {
        let direct = spectrum_of(&GraphExpr::join(a.clone(), b.clone()));
        let via = spectrum_of(&GraphExpr::complement(GraphExpr::union(
            GraphExpr::complement(a),
            GraphExpr::complement(b),
        )));
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn repeat_matches_iterated_union(e in expr_strategy(10, 4), m in 1u64..6) {
        let mut unrolled = e.clone();
        for _ in 1..m {
            unrolled = GraphExpr::union(unrolled, e.clone());
        }
        prop_assert_eq!(spectrum_of(&GraphExpr::repeat(m, e)), spectrum_of(&unrolled));
    }

    #[test]
    fn exact_energy_matches_float_sum(e in expr_strategy(12, 6)) {
        let s = spectrum_of(&e);
        let exact = to_f64(&laplacian_energy(&s));
        let g = realize(&e).unwrap();
        let eig = g.laplacian_eigenvalues(JacobiOptions::default()).unwrap();
        let dbar = 2.0 * g.edge_count() as f64 / g.order() as f64;
        let numeric: f64 = eig.iter().map(|mu| (mu - dbar).abs()).sum();
        prop_assert!((exact - numeric).abs() <= 1e-9 * exact.abs().max(1.0),
            "{}: exact {} numeric {}", e, exact, numeric);
    }

    #[test]
    fn energy_is_invariant_under_relabelling(seed in any::<u64>(), n in 1usize..12) {
        use rand::seq::SliceRandom;
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, 0.5);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = common::relabel(&g, &perm);
        let a = g.laplacian_eigenvalues(JacobiOptions::default()).unwrap();
        let b = h.laplacian_eigenvalues(JacobiOptions::default()).unwrap();
        prop_assert!(common::max_abs_diff(&a, &b) <= 1e-9);
    }

    #[test]
    fn cospectrality_is_an_equivalence(a in expr_strategy(5, 3), b in expr_strategy(5, 3), c in expr_strategy(5, 3)) {
        let (sa, sb, sc) = (spectrum_of(&a), spectrum_of(&b), spectrum_of(&c));
        prop_assert!(is_cospectral(&sa, &sa));
        prop_assert_eq!(is_cospectral(&sa, &sb), is_cospectral(&sb, &sa));
        if is_cospectral(&sa, &sb) && is_cospectral(&sb, &sc) {
            prop_assert!(is_cospectral(&sa, &sc));
        }
    }

    #[test]
    fn borderenergetic_witness_is_consistent(e in expr_strategy(20, 6)) {
        let s = spectrum_of(&e);
        let w = is_l_borderenergetic(&s);
        prop_assert_eq!(w.le, laplacian_energy(&s));
        prop_assert_eq!(w.target, complete_target(e.order()));
        prop_assert_eq!(w.holds, w.le == int(w.target));
    }

    #[test]
    fn spectrum_json_round_trips(e in expr_strategy(20, 6)) {
        let s = spectrum_of(&e);
        let text = serde_json::to_string(&s).unwrap();
        let back: Spectrum = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn complete_graph_energy_targets() {
    for n in 1..=500u64 {
        let s = spectrum_of(&GraphExpr::complete(n));
        assert_eq!(laplacian_energy(&s), Rational::from_integer(2 * n as i128 - 2));
        assert!(is_l_borderenergetic(&s).holds);
    }
}

#[test]
fn complement_of_complete_is_empty() {
    for n in 1..=20u64 {
        let s = spectrum_of(&GraphExpr::complement(GraphExpr::complete(n)));
        assert_eq!(s.entries(), &[(int(0), n)]);
        assert_eq!(laplacian_energy(&s), int(0));
    }
}
