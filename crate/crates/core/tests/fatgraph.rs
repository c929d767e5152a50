use std::collections::HashSet;

use bigon_core::fatgraph::*;
use proptest::prelude::*;

/// Random connected graph: a spanning path plus extra edges, each vertex
/// rotation shuffled by the given keys.
fn graph() -> impl Strategy<Value = EmbeddedGraph> {
    (1usize..6)
        .prop_flat_map(|v| {
            let extra = prop::collection::vec((1..=v, 1..=v), 0..7);
            (Just(v), extra, prop::collection::vec(any::<u32>(), 40))
        })
        .prop_map(|(v, extra, keys)| {
            let mut edges: Vec<Edge> = (1..v).map(|k| Edge::new(k, k, k + 1)).collect();
            for (a, b) in extra {
                edges.push(Edge::new(edges.len() + 1, a, b));
            }
            if edges.is_empty() {
                edges.push(Edge::new(1, 1, 1));
            }
            let mut rot: Vec<Vec<Dart>> = vec![Vec::new(); v];
            for e in &edges {
                rot[e.tail - 1].push(Dart::tail(e.id));
                rot[e.head - 1].push(Dart::head(e.id));
            }
            let mut k = keys.into_iter().cycle();
            for r in &mut rot {
                let mut keyed: Vec<(u32, Dart)> = r.iter().map(|&d| (k.next().unwrap(), d)).collect();
                keyed.sort();
                *r = keyed.into_iter().map(|(_, d)| d).collect();
            }
            EmbeddedGraph::new(v, edges, rot).unwrap()
        })
}

fn slope() -> impl Strategy<Value = SlopeClass> {
    (-30i64..30, -30i64..30).prop_filter_map("primitive", |(p, q)| SlopeClass::new(p, q))
}

proptest! {
    #[test]
    fn faces_partition_darts(g in graph()) {
        let f = g.faces();
        prop_assert_eq!(f.lengths().iter().sum::<usize>(), 2 * g.edge_count());
        let mut seen = HashSet::new();
        for c in &f.circuits {
            for d in c {
                prop_assert!(seen.insert(*d));
            }
        }
    }

    #[test]
    fn euler_gives_genus(g in graph()) {
        let chi = g.euler_characteristic();
        prop_assert!(chi <= 2);
        prop_assert_eq!(chi % 2, 0);
        prop_assert_eq!(g.genus().unwrap() as i64, (2 - chi) / 2);
        prop_assert_eq!(g.mirror().faces().len(), g.faces().len());
        prop_assert_eq!(g.is_toroidal_cellular(), chi == 0);
    }

    #[test]
    fn parallel_classes_partition_edges(g in graph()) {
        let classes = g.parallelism_classes().unwrap();
        let mut all: Vec<EdgeId> = classes.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, g.edge_ids().collect::<Vec<_>>());
        let sizes = g.reduced_graph().unwrap().sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>(), g.edge_count());
    }

    #[test]
    fn json_round_trip(g in graph()) {
        let s = serde_json::to_string(&g).unwrap();
        let h: EmbeddedGraph = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(h, g);
    }

    #[test]
    fn delta_symmetric(a in slope(), b in slope()) {
        prop_assert_eq!(delta(a, b), delta(b, a));
        prop_assert_eq!(delta(a, a), 0);
        prop_assert_eq!(SlopeClass::new(-a.p, -a.q), Some(a));
    }
}

#[test]
fn delta_examples() {
    let s = |p, q| SlopeClass::new(p, q).unwrap();
    assert_eq!(delta(s(1, 0), s(0, 1)), 1);
    assert_eq!(delta(s(1, 2), s(3, 1)), 5);
    assert_eq!(SlopeClass::new(-2, -4), Some(s(1, 2)));
    assert_eq!(SlopeClass::new(0, 0), None);
}
