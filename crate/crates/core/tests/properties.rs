use proptest::prelude::*;

use steiner_core::canon::canonical_labeling;
use steiner_core::graph6;
use steiner_core::steiner::{steiner_distance_oracle, Method, SteinerContext, TerminalSet};
use steiner_core::{ExtendedNat, Graph};

/// Random graph of order `lo..=hi`; `connected` adds a random spanning tree first.
fn graph(lo: usize, hi: usize, connected: bool) -> impl Strategy<Value = Graph> {
    (lo..=hi)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), pairs),
                proptest::collection::vec(any::<prop::sample::Index>(), n),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(move |(n, bits, parents, perm)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            if connected {
                for v in 1..n {
                    let u = parents[v].index(v);
                    if !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap().permuted(&perm)
        })
}

fn fin(v: usize) -> ExtendedNat {
    ExtendedNat::Finite(v as u64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph(1, 10, false)) {
        prop_assert_eq!(g.complement().complement(), g);
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.order() * (g.order() - 1) / 2);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(1, 9, false), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
        prop_assert!(g.is_isomorphic(&h));
        let (lg, lh) = (canonical_labeling(&g), canonical_labeling(&h));
        prop_assert_eq!(lg.canonical_graph(), lh.canonical_graph());
    }

    #[test]
    fn automorphism_generators_preserve_edges(g in graph(1, 10, false)) {
        let lab = canonical_labeling(&g);
        for gen in lab.generators() {
            let perm: Vec<usize> = gen.iter().map(|&v| v as usize).collect();
            prop_assert_eq!(g.permuted(&perm), g);
        }
    }

    #[test]
    fn distances_form_a_metric(g in graph(1, 12, false)) {
        let d = g.all_pairs_distances();
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), fin(0));
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == fin(1), g.has_edge(u, v));
                for w in 0..n {
                    if let (Some(a), Some(b), Some(c)) = (d.get(u, v).finite(), d.get(v, w).finite(), d.get(u, w).finite()) {
                        prop_assert!(c <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn steiner_methods_agree(g in graph(3, 9, false), picks in proptest::collection::vec(any::<prop::sample::Index>(), 2..6)) {
        let n = g.order();
        let mut s: Vec<usize> = picks.iter().map(|i| i.index(n)).collect();
        s.sort_unstable();
        s.dedup();
        prop_assume!(s.len() >= 2);
        let k = s.len();
        let ts = TerminalSet::new(s, n).unwrap();
        let cx = SteinerContext::new(&g);
        let oracle = steiner_distance_oracle(&g, &ts).unwrap();
        prop_assert_eq!(cx.distance(&ts, Method::SubsetDp).unwrap(), oracle);
        prop_assert_eq!(cx.distance(&ts, Method::Superset).unwrap(), oracle);
        prop_assert_eq!(cx.distance(&ts, Method::Auto).unwrap(), oracle);
        if k <= 3 {
            prop_assert_eq!(cx.distance(&ts, Method::Median).unwrap(), oracle);
        }
        let (value, witness) = cx.distance_with_witness(&ts, Method::Auto).unwrap();
        prop_assert_eq!(value, oracle);
        match witness {
            Some(w) => {
                prop_assert!(w.is_valid_for(&g, &ts));
                prop_assert_eq!(fin(w.tree_edges.len()), value);
            }
            None => prop_assert_eq!(value, ExtendedNat::Infinity),
        }
    }

    #[test]
    fn sdiam_bounds_and_monotonicity(g in graph(2, 9, true)) {
        let n = g.order();
        let cx = SteinerContext::new(&g);
        let sd: Vec<ExtendedNat> = (2..=n).map(|k| cx.sdiam(k).unwrap()).collect();
        for (i, v) in sd.iter().enumerate() {
            let k = i + 2;
            prop_assert!(*v >= fin(k - 1) && *v <= fin(n - 1));
            prop_assert_eq!(cx.sdiam_at_most(k, v.finite().unwrap()).unwrap(), true);
            if k > 2 || n > 2 {
                prop_assert_eq!(cx.sdiam_at_most(k, v.finite().unwrap() - 1).unwrap(), false);
            }
            prop_assert!(cx.srad(k).unwrap() <= *v);
        }
        prop_assert!(sd.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(sd[0], g.all_pairs_distances().diameter());
    }

    #[test]
    fn deleting_an_edge_never_lowers_sdiam(g in graph(3, 9, true), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        let e = edges[pick.index(edges.len())];
        let h = g.without_edges(&[e]);
        for k in 2..=g.order().min(5) {
            prop_assert!(SteinerContext::new(&g).sdiam(k).unwrap() <= SteinerContext::new(&h).sdiam(k).unwrap());
        }
    }

    #[test]
    fn graph6_round_trips(g in graph(1, 62, false)) {
        let text = graph6::encode(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }
}

#[test]
fn canonical_forms_separate_non_isomorphic_graphs() {
    // all labeled graphs on 5 vertices: equal forms exactly when some permutation maps one to the other
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..5).collect();
    permute(&mut p, 0, &mut perms);
    let mut by_form = std::collections::HashMap::new();
    for bits in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        let key = perms.iter().map(|p: &Vec<usize>| g.permuted(p)).min().unwrap();
        let prev = by_form.entry(g.canonical_form()).or_insert(key);
        assert_eq!(*prev, key, "two classes share a form");
    }
    assert_eq!(by_form.len(), 34);

    fn permute(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            permute(p, i + 1, out);
            p.swap(i, j);
        }
    }
}
