//! Cross-validation of the production algorithms against the
//! definition-direct oracles, on randomized and corpus instances.

#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use domcert::domination::{build_conflict_graph, dominating_set};
use domcert::generators;
use domcert::graph::{Graph, Vertex};
use domcert::oracles::{self, OracleBudget};
use domcert::orderings::{
    admissibility_ordering, backconnectivity_at_most, degeneracy_ordering, greedy_disjoint_paths,
    ordering_stats, weak_reach_sets, AdmMode, VertexOrdering,
};

fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            let edges: Vec<(Vertex, Vertex)> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::new(n, &edges).expect("filtered edges are valid")
        })
    })
}

fn arb_ordering(n: usize) -> impl Strategy<Value = VertexOrdering> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|order| VertexOrdering::from_order(order).expect("shuffle is a permutation"))
}

fn arb_graph_with_ordering(
    max_n: usize,
    max_m: usize,
) -> impl Strategy<Value = (Graph, VertexOrdering)> {
    arb_graph(max_n, max_m).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_ordering(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_build_is_order_insensitive(
        (g, shuffled) in arb_graph(10, 24).prop_flat_map(|g| {
            let edges: Vec<_> = g.edges().collect();
            let n = g.n();
            (Just(g), Just(edges).prop_shuffle().prop_map(move |e| {
                // duplicates in either orientation must collapse too
                let mut doubled: Vec<_> = e.clone();
                doubled.extend(e.iter().map(|&(u, v)| (v, u)));
                Graph::new(n, &doubled).unwrap()
            }))
        })
    ) {
        prop_assert_eq!(g, shuffled);
    }

    #[test]
    fn bfs_matches_all_pairs_reference((g, cap) in (arb_graph(20, 40), 0usize..6)) {
        let apd = oracles::all_pairs_distances(&g);
        for s in 0..g.n() {
            let bfs = g.bfs_capped(&[s], cap).unwrap();
            for v in 0..g.n() {
                let expected = apd[s][v].filter(|&d| d <= cap);
                prop_assert_eq!(bfs.get(v), expected);
            }
        }
    }

    #[test]
    fn subdivision_count_formulas((g, t) in (arb_graph(8, 14), 0usize..4)) {
        let sd = g.subdivide(t);
        prop_assert_eq!(sd.n(), g.n() + t * g.m_edges());
        prop_assert_eq!(sd.m_edges(), (t + 1) * g.m_edges());
    }

    #[test]
    fn weak_reach_matches_path_search(((g, ord), m) in (arb_graph_with_ordering(9, 18), 1usize..4)) {
        let wr = weak_reach_sets(&g, &ord, m);
        for v in 0..g.n() {
            let by_paths = oracles::weak_reach_by_paths(&g, &ord, v, m);
            for i in 1..=m {
                prop_assert_eq!(wr.q(v, i), &by_paths[i - 1][..], "v={} i={}", v, i);
            }
        }
    }

    #[test]
    fn strong_reach_matches_path_search(((g, ord), m) in (arb_graph_with_ordering(9, 18), 1usize..4)) {
        let stats = ordering_stats(&g, &ord, m);
        let max_r = (0..g.n())
            .map(|v| oracles::strong_reach_by_paths(&g, &ord, v, m)[m - 1].len())
            .max()
            .unwrap_or(0);
        prop_assert_eq!(stats.max_r, max_r);
    }

    #[test]
    fn backconnectivity_decision_matches_exact(
        ((g, ord), m) in (arb_graph_with_ordering(9, 16), 1usize..4)
    ) {
        let budget = OracleBudget::default();
        // prefix sets of a random ordering make natural S samples
        let mut in_s = vec![false; g.n()];
        for i in 0..g.n() {
            let v = ord.vertex_at(i);
            in_s[v] = true;
            let exact = oracles::exact_backconnectivity(&g, &in_s, v, m, &budget).unwrap();
            for p in 0..=exact + 1 {
                prop_assert_eq!(
                    backconnectivity_at_most(&g, &in_s, v, m, p),
                    exact <= p,
                    "v={} m={} p={} exact={}", v, m, p, exact
                );
            }
        }
    }

    #[test]
    fn greedy_packing_stays_in_factor_window(
        ((g, ord), m) in (arb_graph_with_ordering(10, 20), 1usize..4)
    ) {
        let budget = OracleBudget::default();
        let mut in_s = vec![false; g.n()];
        for i in 0..g.n() {
            let v = ord.vertex_at(i);
            in_s[v] = true;
            let (count, paths) = greedy_disjoint_paths(&g, &in_s, v, m);
            let exact = oracles::exact_backconnectivity(&g, &in_s, v, m, &budget).unwrap();
            prop_assert!(count <= exact);
            prop_assert!(count >= exact.div_ceil(m));
            // returned paths really are a packing
            let mut seen = vec![false; g.n()];
            for p in &paths {
                prop_assert!(p.len() >= 2 && p.len() <= m + 1);
                prop_assert_eq!(p[0], v);
                prop_assert!(in_s[*p.last().unwrap()]);
                for &x in &p[1..p.len() - 1] {
                    prop_assert!(!in_s[x]);
                }
                for &x in &p[1..] {
                    prop_assert!(!seen[x], "paths share {}", x);
                    seen[x] = true;
                }
            }
        }
    }

    #[test]
    fn certificates_hold_on_random_graphs((g, k, m_off) in (arb_graph(12, 22), 1usize..3, 0usize..5)) {
        let m = 1 + m_off.min(2 * k);
        let (ord, _) = degeneracy_ordering(&g);
        let cert = dominating_set(&g, &ord, k, m).unwrap();
        let check = oracles::verify_certificate(&g, &cert).unwrap();
        prop_assert!(check.all_ok());
        // the reported constant is exactly the measured reach bound
        let wr = weak_reach_sets(&g, &ord, m);
        prop_assert_eq!(cert.c, 1 + wr.max_q_m());
    }
}

#[test]
fn exact_admissibility_matches_oracle_on_corpus() {
    // includes every corpus graph the subset oracle can take, plus a size-10
    // instance with a raised ceiling
    let budget = OracleBudget {
        max_n_order: 10,
        ..OracleBudget::default()
    };
    for ng in generators::corpus(10, 11) {
        let g = &ng.graph;
        for m in 1..=4usize {
            let alg = admissibility_ordering(
                g,
                m,
                AdmMode::Exact {
                    p_max: g.n().max(1),
                },
            )
            .unwrap();
            let oracle = oracles::exact_adm(g, m, &budget).unwrap();
            assert_eq!(alg.adm, oracle, "{} m={m}", ng.name);
        }
    }
}

#[test]
fn approx_admissibility_window_holds() {
    let budget = OracleBudget::default();
    for ng in generators::corpus(12, 23) {
        let g = &ng.graph;
        for m in 1..=3usize {
            let approx = admissibility_ordering(g, m, AdmMode::Approx).unwrap();
            let realized =
                oracles::realized_admissibility(g, &approx.ordering, m, &budget).unwrap();
            assert!(
                approx.adm <= realized && realized <= m * approx.adm.max(1),
                "{} m={m}: surrogate {} realized {}",
                ng.name,
                approx.adm,
                realized
            );
        }
    }
}

#[test]
fn degeneracy_matches_radius_one_oracles() {
    let budget = OracleBudget::default();
    for ng in generators::corpus(8, 5) {
        let g = &ng.graph;
        if g.n() == 0 {
            continue;
        }
        let (_, degeneracy) = degeneracy_ordering(g);
        assert_eq!(oracles::exact_wcol(g, 1, &budget).unwrap(), degeneracy + 1);
        assert_eq!(oracles::exact_col(g, 1, &budget).unwrap(), degeneracy + 1);
        assert_eq!(oracles::exact_adm(g, 1, &budget).unwrap(), degeneracy);
    }
}

#[test]
fn independence_lower_bounds_domination() {
    let budget = OracleBudget::default();
    for ng in generators::corpus(14, 5) {
        let g = &ng.graph;
        if g.n() > budget.max_n_dom {
            continue;
        }
        for k in 1..=2usize {
            let (alpha, _) = oracles::exact_max_independent(g, 2 * k, &budget).unwrap();
            let (dom, _) = oracles::exact_min_dominating(g, k, &budget).unwrap();
            assert!(alpha <= dom, "{} k={k}: alpha={alpha} dom={dom}", ng.name);
        }
    }
}

#[test]
fn center_separation_property() {
    // every later center stays at distance > k from the earlier center's
    // dominated circle
    for ng in generators::corpus(14, 5) {
        let g = &ng.graph;
        let (ord, _) = degeneracy_ordering(g);
        for k in 1..=2usize {
            for m in 1..=(2 * k + 1) {
                let cert = dominating_set(g, &ord, k, m).unwrap();
                let wr = weak_reach_sets(g, &ord, m);
                let apd = oracles::all_pairs_distances(g);
                for (j, &early) in cert.centers.iter().enumerate() {
                    let mut circle = vec![early];
                    circle.extend_from_slice(wr.q_m(early));
                    for &late in &cert.centers[j + 1..] {
                        for &w in &circle {
                            let d = apd[late][w];
                            assert!(
                                d.is_none_or(|d| d > k),
                                "{} k={k} m={m}: centers {early},{late} too close via {w}",
                                ng.name
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn conflict_graph_is_a_bounded_supergraph() {
    // contains every pair of centers at distance <= m, with back-degree < c
    for ng in generators::corpus(14, 5) {
        let g = &ng.graph;
        let (ord, _) = degeneracy_ordering(g);
        for k in 1..=2usize {
            for m in 1..=(2 * k + 1) {
                let cert = dominating_set(g, &ord, k, m).unwrap();
                let wr = weak_reach_sets(g, &ord, m);
                let cg = build_conflict_graph(g, &ord, &wr, &cert.centers, k, m).unwrap();
                assert!(cg.max_back_degree() < cert.c.max(1));
                let apd = oracles::all_pairs_distances(g);
                for i in 0..cg.centers.len() {
                    for j in 0..i {
                        let (a_i, a_j) = (cg.centers[i], cg.centers[j]);
                        if apd[a_i][a_j].is_some_and(|d| d <= m) {
                            assert!(
                                cg.back_edges[i].contains(&a_j),
                                "{} k={k} m={m}: close pair {a_j},{a_i} missing",
                                ng.name
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn conflict_edges_trace_back_through_short_subpaths() {
    // every short path between centers dips to a vertex that is weakly
    // reachable from both ends, with the early side's detour of length at
    // most m - k - 1
    for ng in generators::corpus(12, 5) {
        let g = &ng.graph;
        let (ord, _) = degeneracy_ordering(g);
        for (k, m) in [(1usize, 2usize), (1, 3), (2, 4), (2, 5)] {
            let cert = dominating_set(g, &ord, k, m).unwrap();
            let wr = weak_reach_sets(g, &ord, m);
            for i in 0..cert.centers.len() {
                for j in 0..i {
                    let (a_i, a_j) = (cert.centers[i], cert.centers[j]);
                    for path in all_simple_paths(g, a_j, a_i, m) {
                        let z = *path
                            .iter()
                            .min_by_key(|&&x| ord.position(x))
                            .expect("path is non-empty");
                        assert!(
                            z == a_i || wr.q_m(a_i).contains(&z),
                            "{} k={k} m={m}: min vertex {z} not reachable from {a_i}",
                            ng.name
                        );
                        assert!(
                            z == a_j || wr.q_m(a_j).contains(&z),
                            "{} k={k} m={m}: min vertex {z} not reachable from {a_j}",
                            ng.name
                        );
                        let z_idx = path.iter().position(|&x| x == z).unwrap();
                        assert!(
                            z_idx + k < m,
                            "{} k={k} m={m}: detour from {a_j} to {z} too long",
                            ng.name
                        );
                    }
                }
            }
        }
    }
}

// All simple paths from s to t of length at most max_len, as vertex lists
// starting at s.
fn all_simple_paths(g: &Graph, s: Vertex, t: Vertex, max_len: usize) -> Vec<Vec<Vertex>> {
    fn dfs(
        g: &Graph,
        t: Vertex,
        max_len: usize,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let tail = *path.last().unwrap();
        if tail == t {
            out.push(path.clone());
            return;
        }
        if path.len() > max_len {
            return;
        }
        for &x in g.neighbors(tail) {
            if !on_path[x] {
                on_path[x] = true;
                path.push(x);
                dfs(g, t, max_len, path, on_path, out);
                path.pop();
                on_path[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    on_path[s] = true;
    dfs(g, t, max_len, &mut vec![s], &mut on_path, &mut out);
    out
}

#[test]
fn oracle_minimum_never_exceeds_a_realization() {
    let budget = OracleBudget::default();
    let inst = generators::lower_bound_gn(3, 1);
    let realized = ordering_stats(&inst.graph, &inst.prescribed_ordering, 1).realized_wcol();
    assert!(oracles::exact_wcol(&inst.graph, 1, &budget).unwrap() <= realized);
}

#[test]
fn lower_bound_family_has_small_weak_reach() {
    for k in 1..=2usize {
        for n in 3..=8usize {
            let inst = generators::lower_bound_gn(n, k);
            let stats = ordering_stats(&inst.graph, &inst.prescribed_ordering, 2 * k - 1);
            assert!(
                stats.realized_wcol() <= 2 * k + 2,
                "n={n} k={k}: realized wcol {} exceeds {}",
                stats.realized_wcol(),
                2 * k + 2
            );
        }
    }
}

#[test]
fn spider_family_separates_domination_from_independence() {
    let budget = OracleBudget::default();
    for legs in 3..=8usize {
        let spider = generators::star(legs).subdivide(1);
        let (dom, _) = oracles::exact_min_dominating(&spider, 1, &budget).unwrap();
        let (alpha, _) = oracles::exact_max_independent(&spider, 4, &budget).unwrap();
        assert!(dom >= legs);
        assert!(alpha <= 2);
    }
}

#[test]
fn seeded_instances_match_decision_and_exact_oracles() {
    let budget = OracleBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1701);
    for _ in 0..120 {
        let n = rng.gen_range(3..=12);
        let max_m = n * (n - 1) / 2;
        let m_edges = rng.gen_range(0..=max_m.min(2 * n));
        let g = generators::random_sparse(n, m_edges, rng.gen()).unwrap();
        let m = rng.gen_range(1..=4);
        let v = rng.gen_range(0..n);
        let mut in_s = vec![false; n];
        in_s[v] = true;
        for u in 0..n {
            if rng.gen_bool(0.5) {
                in_s[u] = true;
            }
        }
        let exact = oracles::exact_backconnectivity(&g, &in_s, v, m, &budget).unwrap();
        assert!(backconnectivity_at_most(&g, &in_s, v, m, exact));
        if exact > 0 {
            assert!(!backconnectivity_at_most(&g, &in_s, v, m, exact - 1));
        }
    }
}
