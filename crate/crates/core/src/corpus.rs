//! Deterministic graph collections used by the checks and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use crate::families::{self, FamilySpec};
use crate::graph::Graph;
use crate::separators::MaximalOuterplanarGraph;

/// Random triangulation of a convex `n`-gon by repeatedly cutting a random
/// ear (any vertex of a convex polygon is an ear).
pub fn random_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MaximalOuterplanarGraph {
    assert!(n >= 3, "polygon needs at least 3 vertices");
    let mut ring: Vec<usize> = (0..n).collect();
    let mut diagonals = Vec::with_capacity(n - 3);
    while ring.len() > 3 {
        let len = ring.len();
        let i = rng.random_range(0..len);
        let prev = ring[(i + len - 1) % len];
        let next = ring[(i + 1) % len];
        diagonals.push((prev, next));
        ring.remove(i);
    }
    MaximalOuterplanarGraph::new(n, &diagonals).expect("ear cutting yields a triangulation")
}

/// `count` seeded random triangulations with `n` drawn from `4..=max_n`.
pub fn random_triangulations(count: usize, max_n: usize, seed: u64) -> Vec<MaximalOuterplanarGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(4..=max_n);
            random_triangulation(n, &mut rng)
        })
        .collect()
}

/// Decodes a Prüfer sequence over `0..n` (`n = seq.len() + 2`).
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = *leaves.iter().next().expect("a leaf always exists");
        leaves.remove(&leaf);
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Calls `visit` on every labelled tree on `n ≥ 2` vertices (`n^(n-2)` of them).
pub fn for_each_labelled_tree(n: usize, mut visit: impl FnMut(&Graph)) {
    assert!(n >= 2);
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        visit(&prufer_decode(&seq));
        // odometer increment
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

fn rooted_code(g: &Graph, root: usize, parent: usize) -> String {
    let mut children: Vec<String> = g
        .neighbors(root)
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_code(g, c, root))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Isomorphism-invariant encoding of a tree (AHU code at the centre).
pub fn tree_canonical_form(tree: &Graph) -> String {
    let n = tree.vertex_count();
    if n <= 2 {
        return format!("#{n}");
    }
    let mut degree = tree.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in tree.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(tree, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn free_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut current = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &current {
            for v in 0..size - 1 {
                let mut edges: Vec<_> = t.edges().collect();
                edges.push((v, size - 1));
                let grown = Graph::from_edge_list(size, &edges).expect("valid tree");
                if seen.insert(tree_canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
}

fn named(specs: impl IntoIterator<Item = FamilySpec>) -> Vec<(String, Graph)> {
    specs
        .into_iter()
        .filter_map(|s| s.build().ok().map(|g| (s.to_string(), g)))
        .collect()
}

/// Planar graphs from every family, small enough for dense solves.
pub fn planar_corpus() -> Vec<(String, Graph)> {
    let mut specs = Vec::new();
    specs.extend((2..=4).map(FamilySpec::Complete));
    specs.extend((3..=12).map(FamilySpec::Cycle));
    specs.extend((2..=12).map(FamilySpec::Path));
    specs.extend((2..=12).map(FamilySpec::Star));
    specs.extend((3..=12).map(FamilySpec::Wheel));
    specs.extend((4..=20).step_by(2).map(FamilySpec::Doublewheel));
    specs.extend((4..=20).step_by(2).map(FamilySpec::Quadrangulation));
    specs.extend((2..=15).map(FamilySpec::Fan));
    specs.extend((1..=10).map(|b| FamilySpec::CompleteBipartite(2, b)));
    specs.extend((1..=6).map(|b| FamilySpec::CompleteBipartite(1, b)));
    specs.push(FamilySpec::Cube);
    for r in 2..=5 {
        for c in r..=6 {
            specs.push(FamilySpec::Grid(r, c));
        }
    }
    named(specs)
}

/// Bounded-degree planar graphs: grids, cycles and the cube.
pub fn bounded_degree_corpus() -> Vec<(String, Graph)> {
    let mut specs = Vec::new();
    for r in 1..=8 {
        for c in r.max(2)..=10 {
            specs.push(FamilySpec::Grid(r, c));
        }
    }
    specs.extend((3..=40).map(FamilySpec::Cycle));
    specs.push(FamilySpec::Cube);
    named(specs)
}

/// Non-complete connected graphs on at most 12 vertices.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = planar_corpus()
        .into_iter()
        .filter(|(_, g)| g.vertex_count() <= 12 && g.vertex_count() >= 3 && !g.is_complete())
        .collect();
    for n in 3..=9 {
        for (i, t) in free_trees(n).into_iter().enumerate() {
            out.push((format!("tree:{n}#{i}"), t));
        }
    }
    out.extend(named([FamilySpec::KhExtremal { h: 5, n: 6 }, FamilySpec::KhExtremal { h: 6, n: 8 }]));
    out
}

/// Whether `g` is `K_4` or `K_{2,2,2}` (the planar graphs with `λ2 = 4`).
pub fn is_k4_or_octahedron(g: &Graph) -> bool {
    let k4 = families::complete(4).expect("K_4");
    let octa = families::doublewheel(4).expect("K_2,2,2");
    match g.vertex_count() {
        // both graphs are determined by their vertex count and regularity
        4 => g.edge_count() == k4.edge_count(),
        6 => g.edge_count() == octa.edge_count() && g.degrees().iter().all(|&d| d == 4),
        _ => false,
    }
}
