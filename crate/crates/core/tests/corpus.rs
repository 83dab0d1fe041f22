use std::collections::{HashSet, VecDeque};

use noverlap::corpus::{generate, initial_layout, mix_seed, CorpusSpec, GraphModel};
use noverlap::SizedGraph;
use proptest::prelude::*;

fn is_simple(g: &SizedGraph) -> bool {
    let mut seen = HashSet::new();
    g.edges()
        .iter()
        .all(|&(u, v)| u < v && v < g.n() && seen.insert((u, v)))
}

fn connected(g: &SizedGraph) -> bool {
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_build_simple_graphs(model in 0usize..4, n in 2usize..120, seed in any::<u64>()) {
        let model = GraphModel::ALL[model];
        let g = generate(model, n, seed).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert!(is_simple(&g));
        prop_assert_eq!(&g, &generate(model, n, seed).unwrap());
        match model {
            GraphModel::Random => prop_assert_eq!(g.m(), (2 * n).min(n * (n - 1) / 2)),
            GraphModel::Tree => {
                prop_assert_eq!(g.m(), n - 1);
                prop_assert!(connected(&g));
            }
            GraphModel::SmallWorld if n >= 5 => {
                prop_assert_eq!(g.m(), 2 * n);
                prop_assert!(g.degrees().iter().all(|&d| d >= 2));
            }
            GraphModel::ScaleFree => {
                prop_assert!(connected(&g));
                if n >= 3 {
                    prop_assert_eq!(g.m(), 3 + 2 * (n - 3));
                }
            }
            _ => {}
        }
    }

    #[test]
    fn layouts_are_deterministic_and_finite(model in 0usize..4, n in 2usize..40, seed in any::<u64>()) {
        let g = generate(GraphModel::ALL[model], n, seed).unwrap();
        let a = initial_layout(&g, seed, 50);
        prop_assert!(a.positions().iter().all(|p| p.is_finite()));
        prop_assert_eq!(a, initial_layout(&g, seed, 50));
    }
}

#[test]
fn scale_free_graphs_have_hubs() {
    for seed in 0..50 {
        let g = generate(GraphModel::ScaleFree, 200, seed).unwrap();
        let mut d = g.degrees();
        d.sort_unstable();
        assert!(d[d.len() - 1] > d[d.len() / 2], "seed {seed}");
    }
}

#[test]
fn corpus_specs_have_the_expected_shape() {
    let full = CorpusSpec::full_scale();
    assert_eq!(full.graph_count(), 840);
    let entries = full.entries();
    assert_eq!(entries.len(), 840);
    let ids: HashSet<_> = entries.iter().map(|e| e.graph_id.clone()).collect();
    assert_eq!(ids.len(), 840);
    assert!(entries.windows(2).all(|w| w[0].graph_id < w[1].graph_id));

    let desk = CorpusSpec::desk_scale();
    assert_eq!(desk.graph_count(), 84);
    let entry = &desk.entries()[0];
    let (g, e) = desk.build(entry).unwrap();
    assert_eq!(g.graph_id(), entry.graph_id);
    assert_eq!(e.len(), entry.n);
    assert_eq!(desk.build(entry).unwrap(), (g, e));
}

#[test]
fn seeds_mix_every_part() {
    let base = mix_seed(&[1, 2, 3]);
    assert_ne!(base, mix_seed(&[1, 2, 4]));
    assert_ne!(base, mix_seed(&[2, 1, 3]));
    assert_ne!(base, mix_seed(&[1, 2]));
    assert_eq!(base, mix_seed(&[1, 2, 3]));
}
