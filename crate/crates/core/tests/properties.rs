use proptest::prelude::*;
use rlvd::graph::{write_dimacs, write_edgelist};
use rlvd::ivd::{
    hardness_gadget, independent_mincut, independent_oct, lift_iii_small, lift_iv, reed_auxiliary_graph, MincutBackend,
    OCTWitness,
};
use rlvd::oracle::{brute_is_rl, brute_is_rl_bitmask, brute_vd};
use rlvd::subroutines::{min_independent_vertex_cover, solve_oct, solve_restricted_oct, RestrictedInstance};
use rlvd::vd::{lift_add_clique, lift_complement, solve_22};
use rlvd::{parse_graph, Format, SolverConfig, VertexSet};
use rlvd::{solve, verify_partition, witness::verify_partition_on, Graph, ProblemSpec, RestrictedBackend};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn subset_of(g: &Graph, mask: u32) -> VertexSet {
    (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect()
}

fn cell() -> impl Strategy<Value = (usize, usize)> {
    (0..=2usize, 0..=2usize)
}

/// Checks a solver answer against the instance, independently of the solver.
fn answer_ok(g: &Graph, spec: &ProblemSpec, s: &VertexSet, w: &rlvd::RLPartition) -> bool {
    let rest = g.vertices().difference(s);
    s.len() <= spec.k
        && (!spec.independent || g.is_independent(s.as_slice()))
        && spec.restricted.as_ref().is_none_or(|d| s.is_subset(d))
        && w.r() == spec.r
        && w.l() == spec.l
        && verify_partition_on(g, &rest, w)
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 96, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn solver_matches_oracle(g in graph(7), (r, l) in cell(), k in 0..=2usize, independent: bool, mask: u32) {
        let mut spec = ProblemSpec::new(r, l, k);
        if independent {
            spec = spec.independent();
        }
        if mask % 3 == 0 {
            spec = spec.restricted(subset_of(&g, mask >> 2));
        }
        let sol = solve(&g, &spec, &SolverConfig::default()).unwrap();
        let truth = brute_vd(&g, &spec).unwrap();
        prop_assert_eq!(sol.feasible, truth.is_some());
        if let (Some(s), Some(w)) = (&sol.deletion_set, &sol.witness) {
            prop_assert!(answer_ok(&g, &spec, s, w));
        }
    }

    #[test]
    fn lifting_disabled_agrees(g in graph(7), (r, l) in cell(), k in 0..=2usize) {
        let spec = ProblemSpec::new(r, l, k);
        let slow = SolverConfig { fast_paths: false, ..SolverConfig::default() };
        let a = solve(&g, &spec, &SolverConfig::default()).unwrap();
        let b = solve(&g, &spec, &slow).unwrap();
        prop_assert_eq!(a.feasible, b.feasible);
    }

    #[test]
    fn complement_duality(g in graph(8), (r, l) in cell(), k in 0..=2usize, independent: bool) {
        prop_assume!(!independent || r.max(l) > 0);
        let cfg = SolverConfig::default();
        let here = solve(&g, &ProblemSpec::new(r, l, k), &cfg).unwrap().feasible;
        let (h, swapped) = lift_complement(&g, r, l, k);
        prop_assert_eq!(here, solve(&h, &swapped, &cfg).unwrap().feasible);
    }

    #[test]
    fn budget_monotone(g in graph(8), (r, l) in cell(), k in 0..=2usize, independent: bool) {
        let cfg = SolverConfig::default();
        let mut spec = ProblemSpec::new(r, l, k);
        if independent {
            spec = spec.independent();
        }
        let mut more = spec.clone();
        more.k += 1;
        if solve(&g, &spec, &cfg).unwrap().feasible {
            prop_assert!(solve(&g, &more, &cfg).unwrap().feasible);
        }
    }

    #[test]
    fn heredity(g in graph(8), (r, l) in cell(), k in 0..=2usize, mask: u32) {
        let cfg = SolverConfig::default();
        let spec = ProblemSpec::new(r, l, k);
        if solve(&g, &spec, &cfg).unwrap().feasible {
            let (h, _) = g.remove_vertices(&subset_of(&g, mask));
            prop_assert!(solve(&h, &spec, &cfg).unwrap().feasible);
        }
    }

    #[test]
    fn clique_lift_is_sound(g in graph(6), r in 0..=2usize, l in 0..=1usize, k in 0..=2usize) {
        let (h, relabel) = lift_add_clique(&g, r, l, k);
        prop_assert_eq!(h.n(), g.n() + r + k + 1);
        prop_assert!(relabel.iter().take(g.n()).enumerate().all(|(i, v)| *v == Some(i)));
        let before = brute_vd(&g, &ProblemSpec::new(r, l, k)).unwrap().is_some();
        let after = brute_vd(&h, &ProblemSpec::new(r, l + 1, k)).unwrap().is_some();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn independent_lifts_are_sound(g in graph(6), r in 0..=1usize, l in 0..=1usize, k in 0..=2usize) {
        let spec = |r, l| ProblemSpec::new(r, l, k).independent();
        let before = brute_vd(&g, &spec(r, l)).unwrap().is_some();
        let (h, _) = lift_iii_small(&g, r, l, k);
        prop_assert_eq!(before, brute_vd(&h, &spec(r, l + 1)).unwrap().is_some());
        let (h, _) = lift_iv(&g, r, l, k);
        prop_assert_eq!(before, brute_vd(&h, &spec(r + 1, l)).unwrap().is_some());
    }

    #[test]
    fn lifted_answers_project(g in graph(6), r in 0..=2usize, l in 0..=1usize, k in 0..=2usize) {
        let (h, _) = lift_add_clique(&g, r, l, k);
        let sol = solve(&h, &ProblemSpec::new(r, l + 1, k), &SolverConfig::default()).unwrap();
        if let Some(s) = sol.deletion_set {
            let kept: VertexSet = s.iter().filter(|&v| v < g.n()).collect();
            let (rest, _) = g.remove_vertices(&kept);
            prop_assert!(brute_is_rl(&rest, r, l).is_some());
        }
        let direct = solve(&g, &ProblemSpec::new(r, l, k), &SolverConfig::default()).unwrap();
        if let Some(s) = direct.deletion_set {
            prop_assert!(s.last().is_none_or(|v| v < g.n()));
        }
    }

    #[test]
    fn compression_counters_bounded(g in graph(9), k in 0..=2usize) {
        let sol = solve_22(&g, k).unwrap();
        let n = g.n() as u64;
        prop_assert!(sol.stats.disjoint_calls <= n * (1 << (k + 1)));
        let bound: u64 = (0..=4).map(|i| binom(n, i)).sum();
        prop_assert!(sol.stats.max_perturbations_per_call <= bound * bound);
    }

    #[test]
    fn independent_oct_matches_oracle(g in graph(8), k in 0..=3usize) {
        let found = independent_oct(&g, k);
        let truth = brute_vd(&g, &ProblemSpec::new(2, 0, k).independent()).unwrap();
        prop_assert_eq!(found.is_some(), truth.is_some());
        if let Some(s) = found {
            prop_assert!(s.len() <= k && g.is_independent(s.as_slice()));
            prop_assert!(g.remove_vertices(&s).0.is_bipartite());
        }
    }

    #[test]
    fn auxiliary_graph_is_bipartite(g in graph(9)) {
        let x = solve_oct(&g, g.n()).unwrap();
        let sides = g.two_coloring_of(g.vertices().difference(&x).as_slice()).unwrap();
        let w = OCTWitness { x: x.clone(), sides };
        let aux = reed_auxiliary_graph(&g, &w).unwrap();
        prop_assert!(aux.g_prime.is_bipartite());
        prop_assert_eq!(aux.g_prime.n(), g.n() + x.len());
        prop_assert_eq!(aux.copy_map.len(), x.len());
    }

    #[test]
    fn mincut_backends_agree(g in graph(10), masks in (any::<u32>(), any::<u32>(), any::<u32>()), k in 0..=3usize) {
        let (sources, sinks, forbidden) = split_terminals(&g, masks);
        let allowed = g.vertices().difference(&sources).difference(&sinks);
        let brute = independent_mincut(&g, &sources, &sinks, &allowed, &forbidden, k, MincutBackend::Brute).unwrap();
        let dp = independent_mincut(&g, &sources, &sinks, &allowed, &forbidden, k, MincutBackend::Twdp).unwrap();
        prop_assert_eq!(brute.as_ref().map(VertexSet::len), dp.as_ref().map(VertexSet::len));
    }

    #[test]
    fn gadget_preserves_oct(g in graph(5), k in 0..=1usize) {
        let (h, _) = hardness_gadget(&g, k);
        prop_assert_eq!(solve_oct(&g, k).is_some(), independent_oct(&h, k).is_some());
    }

    #[test]
    fn restricted_oct_backends_agree(g in graph(9), mask: u32, k in 0..=3usize) {
        let inst = RestrictedInstance { g: g.clone(), d: subset_of(&g, mask), k };
        let a = solve_restricted_oct(&inst, RestrictedBackend::Gadget);
        let b = solve_restricted_oct(&inst, RestrictedBackend::Native);
        prop_assert_eq!(a.is_some(), b.is_some());
        let truth = brute_vd(&g, &ProblemSpec::new(2, 0, k).restricted(inst.d.clone())).unwrap();
        prop_assert_eq!(a.is_some(), truth.is_some());
    }

    #[test]
    fn ivc_is_minimum(g in graph(10), mask: u32) {
        prop_assume!(g.is_bipartite());
        let d = (mask % 2 == 0).then(|| subset_of(&g, mask >> 1));
        let found = min_independent_vertex_cover(&g, d.as_ref());
        let best = brute_ivc(&g, d.as_ref());
        prop_assert_eq!(found.as_ref().map(VertexSet::len), best);
        if let Some(c) = found {
            prop_assert!(g.is_independent(c.as_slice()));
            prop_assert!(g.edges().all(|(u, v)| c.contains(u) || c.contains(v)));
        }
    }

    #[test]
    fn text_formats_round_trip(g in graph(12)) {
        let d = parse_graph(&write_dimacs(&g), Format::Dimacs, None).unwrap();
        prop_assert_eq!(&d, &g);
        let e = parse_graph(&write_edgelist(&g), Format::Edgelist, Some(g.n())).unwrap();
        prop_assert_eq!(&e, &g);
    }

    #[test]
    fn oracle_implementations_agree(g in graph(6), (r, l) in cell()) {
        prop_assert_eq!(brute_is_rl(&g, r, l).is_some(), brute_is_rl_bitmask(&g, r, l).unwrap());
        if let Some(p) = brute_is_rl(&g, r, l) {
            prop_assert!(verify_partition(&g, &p));
        }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Non-empty disjoint source and sink sets plus a forbidden set.
fn split_terminals(g: &Graph, (a, b, c): (u32, u32, u32)) -> (VertexSet, VertexSet, VertexSet) {
    let n = g.n();
    if n < 2 {
        return (VertexSet::new(), VertexSet::new(), VertexSet::new());
    }
    let mut sources = subset_of(g, a & b);
    let mut sinks = subset_of(g, !a & (b >> 8)).difference(&sources);
    sources.insert((a as usize) % n);
    sinks.remove((a as usize) % n);
    if sinks.is_empty() {
        let v = (0..n).find(|&v| !sources.contains(v));
        v.into_iter().for_each(|v| {
            sinks.insert(v);
        });
    }
    (sources, sinks, subset_of(g, c & (c >> 3)))
}

fn brute_ivc(g: &Graph, d: Option<&VertexSet>) -> Option<usize> {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&m| d.is_none_or(|d| (0..n).all(|v| m >> v & 1 == 0 || d.contains(v))))
        .filter(|&m| g.edges().all(|(u, v)| (m >> u & 1 == 1) != (m >> v & 1 == 1)))
        .map(|m| m.count_ones() as usize)
        .min()
}
