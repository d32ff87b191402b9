use arlab_core::graph::{all_graphs, forests, parse_graph, Graph};
use arlab_core::packing::{
    be_exception_pairs, be_packable, is_blocker, is_minimal_blocker, min_overlap, pack, BeVerdict,
};

#[test]
fn be_exceptions_do_not_pack() {
    for (a, b) in be_exception_pairs() {
        assert!(pack(&a, &b, a.order()).unwrap().is_none(), "{a} / {b}");
    }
}

#[test]
fn be_guarantee_is_sound_up_to_six_vertices() {
    let graphs = all_graphs(6);
    for n in 2..=6 {
        let level = &graphs[n];
        for (i, a) in level.iter().enumerate() {
            for b in &level[i..] {
                if be_packable(a, b) == BeVerdict::Guaranteed {
                    let w = pack(a, b, n).unwrap().unwrap_or_else(|| panic!("{a} / {b} should pack"));
                    assert!(w.verify(a, b));
                }
            }
        }
    }
}

#[test]
fn overlap_monotone_in_p_and_under_edge_deletion() {
    let graphs = all_graphs(5);
    let pool: Vec<&Graph> = graphs.iter().flatten().filter(|g| g.edge_count() > 0 && g.order() >= 2).collect();
    for h in &pool {
        for g in &pool {
            let lo = h.order().max(g.order());
            let mut prev = usize::MAX;
            for p in lo..=6 {
                let r = min_overlap(h, g, p).unwrap();
                assert!(r.min_overlap <= prev);
                assert!(r.min_overlap <= h.edge_count().min(g.edge_count()));
                assert_eq!(r.min_overlap == 0, pack(h, g, p).unwrap().is_some());
                prev = r.min_overlap;
            }
            let base = min_overlap(h, g, lo).unwrap().min_overlap;
            for (u, v) in h.edges() {
                let mut smaller = (*h).clone();
                smaller.remove_edge(u, v);
                assert!(min_overlap(&smaller, g, lo).unwrap().min_overlap <= base);
            }
        }
    }
}

/// Smallest admissible `(t, p)` for each clause: `(H, G, p)`.
fn minimal_blocker_clauses() -> Vec<(&'static str, Graph, Graph, usize)> {
    let k = Graph::complete;
    vec![
        ("C3+tK2, t=1", parse_graph("K3+K2").unwrap(), k(4), 5),
        ("tK2, t=3", parse_graph("M3").unwrap(), k(9), 10),
        ("P_{2t+1}, t=2", parse_graph("P5").unwrap(), k(4), 5),
        ("C_{2t}, t=2", parse_graph("C4").unwrap(), k(3), 4),
        ("C_{2t+1}+K2, t=1", parse_graph("C3+K2").unwrap(), k(4), 5),
        ("tP3, t=2", parse_graph("2P3").unwrap(), k(5), 6),
    ]
}

#[test]
fn minimal_blocker_clauses_hold() {
    for (name, h, g, p) in minimal_blocker_clauses() {
        assert!(is_minimal_blocker(&h, &g, p).unwrap(), "{name}");
    }
}

#[test]
fn minimal_blocker_clauses_t_two() {
    let k = Graph::complete;
    let cases = [("C3+2K2", k(5), 7), ("P5", k(4), 5), ("C4", k(3), 4), ("C5+K2", k(5), 7), ("2P3", k(5), 6)];
    for (h, g, p) in cases {
        assert!(is_minimal_blocker(&parse_graph(h).unwrap(), &g, p).unwrap(), "{h}");
    }
}

#[test]
fn star_blocks_cycle() {
    for p in 4..=7 {
        assert!(is_minimal_blocker(&Graph::star(p - 1), &Graph::cycle(p), p).unwrap(), "p={p}");
    }
    assert!(!is_blocker(&Graph::star(3), &Graph::cycle(5), 5).unwrap());
}

#[test]
fn sparse_forests_pack_with_cycles() {
    for p in 5..=7 {
        let cycle = Graph::cycle(p);
        for t in forests(p).into_iter().filter(|t| t.max_degree() + 3 <= p) {
            let w = pack(&t, &cycle, p).unwrap().unwrap_or_else(|| panic!("{t} with C{p}"));
            assert!(w.verify(&t, &cycle));
        }
    }
}
