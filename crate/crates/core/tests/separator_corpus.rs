use proptest::prelude::*;
use rayon::prelude::*;

use fiedler_core::corpus::{self, prufer_decode, random_triangulation, random_triangulations};
use fiedler_core::embeddings::certify;
use fiedler_core::families::{self, FamilySpec};
use fiedler_core::graph::{Graph, VertexSet};
use fiedler_core::separators::{
    bfs_separator, build_dual_tree, outerplanar_separator, refine_balanced, tree_centroid, tree_separator,
    MaximalOuterplanarGraph,
};
use fiedler_core::Error;

const SEED: u64 = 0x5eed_0001;

fn log_three_halves_ceil(n: usize) -> usize {
    (n as f64).ln().div_euclid(1.5f64.ln()) as usize + 1
}

fn centroid_ok(t: &Graph) -> bool {
    let n = t.vertex_count();
    let c = tree_centroid(t).unwrap();
    let largest = t.components_after_removal(&VertexSet::new([c])).largest().map_or(0, |p| p.len());
    2 * largest <= n
}

#[test]
fn centroid_on_every_labelled_tree() {
    for n in 2..=9usize {
        let count = (n as u64).pow(n as u32 - 2);
        let all_ok = (0..count).into_par_iter().all(|index| {
            let mut rest = index;
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = (rest % n as u64) as usize;
                    rest /= n as u64;
                    d
                })
                .collect();
            centroid_ok(&prufer_decode(&seq))
        });
        assert!(all_ok, "centroid postcondition failed for some tree on {n} vertices");
    }
}

#[test]
fn dual_trees_of_random_triangulations() {
    for p in random_triangulations(200, 40, SEED) {
        let n = p.vertex_count();
        let dual = build_dual_tree(&p).unwrap();
        assert_eq!(dual.faces.len(), n - 2);
        assert_eq!(dual.tree.vertex_count(), n - 2);
        assert_eq!(dual.tree.edge_count(), n - 3);
        assert!(dual.tree.is_connected());
        assert!(dual.tree.max_degree() <= 3);
        assert!(dual.faces.windows(2).all(|w| w[0] < w[1]));
    }
}

fn check_outerplanar(p: &MaximalOuterplanarGraph) -> Result<(), String> {
    let n = p.vertex_count();
    let sep = outerplanar_separator(p).map_err(|e| e.to_string())?;
    let g = p.to_graph();
    if !(2..=3).contains(&sep.separator.len()) {
        return Err(format!("separator size {}", sep.separator.len()));
    }
    let parts = g.components_after_removal(&sep.separator);
    if parts.sizes().iter().any(|&c| 2 * c > n - sep.separator.len()) {
        return Err(format!("unbalanced: {:?}", parts.sizes()));
    }
    let cert = certify(&g, &sep.separator).map_err(|e| e.to_string())?;
    if cert.cross_edges > n {
        return Err(format!("{} cross edges", cert.cross_edges));
    }
    if cert.bound > n as f64 / (n as f64 - 3.0) {
        return Err(format!("bound {}", cert.bound));
    }
    Ok(())
}

#[test]
fn outerplanar_separators_on_the_corpus() {
    for (i, p) in random_triangulations(200, 40, SEED).iter().enumerate() {
        if let Err(e) = check_outerplanar(p) {
            panic!("triangulation #{i}: {e}");
        }
    }
    for n in 4..=40 {
        check_outerplanar(&MaximalOuterplanarGraph::fan(n).unwrap()).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn outerplanar_separators_on_random_ears(n in 4usize..=60, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = random_triangulation(n, &mut rng);
        prop_assert_eq!(check_outerplanar(&p), Ok(()));
    }
}

#[test]
fn refinement_iterations_are_logarithmic() {
    for n in 3..=9 {
        for t in corpus::free_trees(n) {
            let r = tree_separator(&t).unwrap();
            assert!(r.iterations <= log_three_halves_ceil(n));
            let r = refine_balanced(&t, &VertexSet::empty(), fiedler_core::separators::centroid_finder).unwrap();
            assert!(r.iterations <= log_three_halves_ceil(n));
        }
    }
    for p in random_triangulations(200, 40, SEED) {
        let g = p.to_graph();
        let r = bfs_separator(&g).unwrap();
        assert!(r.iterations <= log_three_halves_ceil(g.vertex_count()));
    }
    for (name, g) in corpus::planar_corpus() {
        if g.is_complete() {
            continue;
        }
        let r = bfs_separator(&g).unwrap();
        assert!(r.iterations <= log_three_halves_ceil(g.vertex_count()), "{name}");
        let parts = g.components_after_removal(&r.separator);
        assert!(parts.len() >= 2, "{name}");
    }
}

#[test]
fn refinement_examples() {
    // already balanced: fixed point
    let p7 = families::path(7).unwrap();
    let r = refine_balanced(&p7, &VertexSet::new([3]), fiedler_core::separators::centroid_finder).unwrap();
    assert_eq!((r.separator, r.iterations), (VertexSet::new([3]), 0));
    // star from the empty set: the centre after one pass
    let s = families::star(8).unwrap();
    let r = refine_balanced(&s, &VertexSet::empty(), fiedler_core::separators::centroid_finder).unwrap();
    assert_eq!((r.separator, r.iterations), (VertexSet::new([0]), 1));
    // P_9 from the empty set
    let p9 = families::path(9).unwrap();
    let r = refine_balanced(&p9, &VertexSet::empty(), fiedler_core::separators::centroid_finder).unwrap();
    assert!((1..=2).contains(&r.iterations));
    let parts = p9.components_after_removal(&r.separator);
    assert!(parts.sizes().iter().all(|&c| 2 * c <= 9 - r.separator.len()));
}

#[test]
fn finder_contract_violations_are_reported() {
    let g = families::cycle(8).unwrap();
    let empty = refine_balanced(&g, &VertexSet::empty(), |_| Ok(VertexSet::empty()));
    assert!(matches!(empty, Err(Error::FinderContract(_))));
    let lopsided = refine_balanced(&g, &VertexSet::empty(), |_| Ok(VertexSet::new([0])));
    assert!(matches!(lopsided, Err(Error::FinderContract(_))));
}

#[test]
fn fan_triangulation_matches_the_family() {
    for n in 3..=20 {
        assert_eq!(MaximalOuterplanarGraph::fan(n + 1).unwrap().to_graph(), families::fan(n).unwrap());
    }
    let spec: FamilySpec = "fan:6".parse().unwrap();
    assert_eq!(spec.build().unwrap().vertex_count(), 7);
}
