use arlab_core::coloring::{
    build_pattern, embed_forest_rainbow_in_lex, find_min_order_rainbow, EdgeColoring, Pattern, PatternParams,
};
use arlab_core::graph::{are_isomorphic, forests, subsets_of_size, Graph};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn random_coloring(rng: &mut StdRng, n: usize, palette: usize) -> EdgeColoring {
    EdgeColoring::from_fn(n, |_, _| rng.gen_range(0..palette)).unwrap()
}

#[test]
fn lex_classes_are_stars_inside_every_subset() {
    let lex = build_pattern(&PatternParams { pattern: Pattern::Lex, n: 7, m: None }).unwrap();
    for k in 2..=7 {
        for s in subsets_of_size(7, k) {
            for (_, class) in lex.classes_on(s) {
                assert!(are_isomorphic(&class, &Graph::star(class.edge_count())), "{class}");
            }
        }
    }
}

#[test]
fn classes_partition_the_edges() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let c = random_coloring(&mut rng, 7, 5);
        for k in 2..=7 {
            for s in subsets_of_size(7, k) {
                let total: usize = c.classes_on(s).iter().map(|(_, g)| g.edge_count()).sum();
                assert_eq!(total, k * (k - 1) / 2);
            }
        }
    }
}

#[test]
fn min_order_rainbow_within_two_k_minus_two() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 4..=7 {
        for _ in 0..200 {
            let palette = rng.gen_range(3..=n * (n - 1) / 2);
            let c = random_coloring(&mut rng, n, palette);
            for k in 3..=c.color_count().min(6) {
                let r = find_min_order_rainbow(&c, k).unwrap();
                assert!(r.order() <= 2 * k - 2, "k={k}, order={}", r.order());
                assert_eq!(r.edges.len(), k);
                assert!(c.is_rainbow(&r.edges));
            }
        }
    }
    for n in 4..=7 {
        for pattern in [Pattern::Lex, Pattern::Rainbow] {
            let c = build_pattern(&PatternParams { pattern, n, m: None }).unwrap();
            for k in 3..=c.color_count().min(6) {
                assert!(find_min_order_rainbow(&c, k).unwrap().order() <= 2 * k - 2);
            }
        }
    }
}

#[test]
fn min_order_rainbow_is_minimal() {
    // No smaller vertex set spans k colours.
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..100 {
        let c = random_coloring(&mut rng, 6, 4);
        if c.color_count() < 3 {
            continue;
        }
        let r = find_min_order_rainbow(&c, 3).unwrap();
        for s in subsets_of_size(6, r.order() - 1) {
            assert!(c.classes_on(s).len() < 3);
        }
    }
}

#[test]
fn every_forest_embeds_rainbow_in_lex() {
    for n in 1..=7 {
        let lex = build_pattern(&PatternParams { pattern: Pattern::Lex, n, m: None }).unwrap();
        for f in forests(n) {
            let phi = embed_forest_rainbow_in_lex(&f, n).unwrap();
            let image: Vec<_> = f.edges().map(|(u, v)| (phi[u], phi[v])).collect();
            assert!(lex.is_rainbow(&image), "{f}");
        }
    }
}
