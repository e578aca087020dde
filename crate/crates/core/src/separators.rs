//! Constructive balanced separators.
//!
//! * [`tree_centroid`]: one vertex leaving components of at most `n/2`.
//! * [`outerplanar_separator`]: two or three vertices of a triangulated
//!   convex polygon, found at the centroid of the dual tree.
//! * [`refine_balanced`]: grows a separator until every component of
//!   `G - X` has at most `(n - |X|)/2` vertices, by re-separating oversized
//!   components with a caller-supplied finder.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex whose removal leaves components of at most `n/2` vertices; the
/// lowest such id when there are two.
pub fn tree_centroid(tree: &Graph) -> Result<usize> {
    let n = tree.vertex_count();
    if n == 0 {
        return Err(Error::NotATree("no vertices".into()));
    }
    if tree.edge_count() != n - 1 {
        return Err(Error::NotATree(format!("{} edges on {} vertices", tree.edge_count(), n)));
    }
    if !tree.is_connected() {
        return Err(Error::NotATree("disconnected".into()));
    }

    // iterative DFS from 0: parent pointers and preorder
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in tree.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut size = vec![1usize; n];
    let mut heaviest_child = vec![0usize; n];
    for &u in order.iter().skip(1).rev() {
        let p = parent[u];
        size[p] += size[u];
        heaviest_child[p] = heaviest_child[p].max(size[u]);
    }
    (0..n)
        .find(|&v| 2 * heaviest_child[v].max(n - size[v]) <= n)
        .ok_or_else(|| Error::NotATree("no centroid found".into()))
}

/// A convex polygon on vertices `0..n` (in cyclic order) triangulated by
/// `n - 3` non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalOuterplanarGraph {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

impl MaximalOuterplanarGraph {
    pub fn new(n: usize, diagonals: &[(usize, usize)]) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidTriangulation(msg));
        if n < 3 {
            return invalid(format!("polygon needs at least 3 vertices, got {n}"));
        }
        if diagonals.len() != n - 3 {
            return invalid(format!("expected {} diagonals, got {}", n - 3, diagonals.len()));
        }
        let mut diags: Vec<(usize, usize)> = Vec::with_capacity(diagonals.len());
        for &(u, v) in diagonals {
            let (a, b) = (u.min(v), u.max(v));
            if b >= n {
                return invalid(format!("diagonal ({u}, {v}) out of range"));
            }
            if b - a < 2 || (a == 0 && b == n - 1) {
                return invalid(format!("({u}, {v}) is not a diagonal"));
            }
            diags.push((a, b));
        }
        diags.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        for w in diags.windows(2) {
            if w[0] == w[1] {
                return invalid(format!("duplicate diagonal ({}, {})", w[0].0, w[0].1));
            }
        }
        // laminar check: sorted by (start asc, end desc), every interval must
        // nest inside the innermost open one
        let mut open: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in &diags {
            while open.last().is_some_and(|&(_, end)| end <= a) {
                open.pop();
            }
            if let Some(&(oa, ob)) = open.last() {
                if ob < b {
                    return invalid(format!("diagonals ({oa}, {ob}) and ({a}, {b}) cross"));
                }
            }
            open.push((a, b));
        }
        diags.sort_unstable();
        Ok(MaximalOuterplanarGraph { n, diagonals: diags })
    }

    /// Fan triangulation with all diagonals at the last vertex `n - 1`; the
    /// resulting graph is `fan(n - 1)` with the same labels.
    pub fn fan(n: usize) -> Result<Self> {
        let diags: Vec<_> = (1..n.saturating_sub(2)).map(|i| (i, n - 1)).collect();
        Self::new(n, &diags)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges: Vec<_> = (0..self.n).map(|i| (i, (i + 1) % self.n)).collect();
        edges.extend_from_slice(&self.diagonals);
        Graph::from_edge_list(self.n, &edges).expect("validated triangulation")
    }
}

/// Interior faces of a triangulated polygon and their adjacency.
#[derive(Debug, Clone, PartialEq)]
pub struct DualTree {
    /// Triangles as sorted vertex triples, in lexicographic order.
    pub faces: Vec<[usize; 3]>,
    /// One node per face; edges join faces sharing a diagonal.
    pub tree: Graph,
    shared: HashMap<(usize, usize), (usize, usize)>,
}

impl DualTree {
    /// The diagonal shared by two adjacent faces.
    pub fn shared_diagonal(&self, f: usize, g: usize) -> Option<(usize, usize)> {
        self.shared.get(&(f.min(g), f.max(g))).copied()
    }
}

pub fn build_dual_tree(p: &MaximalOuterplanarGraph) -> Result<DualTree> {
    let n = p.n;
    let g = p.to_graph();
    let mut faces = Vec::with_capacity(n - 2);
    for i in 0..n {
        // convex position: angular order at i is cyclic index order after i
        let mut around: Vec<usize> = g.neighbors(i).to_vec();
        around.sort_by_key(|&j| (j + n - i) % n);
        for w in around.windows(2) {
            let mut t = [i, w[0], w[1]];
            t.sort_unstable();
            faces.push(t);
        }
    }
    faces.sort_unstable();
    faces.dedup();
    if faces.len() != n - 2 {
        return Err(Error::InvalidTriangulation(format!(
            "found {} faces, expected {}",
            faces.len(),
            n - 2
        )));
    }

    let mut by_diagonal: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (f, t) in faces.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            if p.diagonals.binary_search(&(a, b)).is_ok() {
                by_diagonal.entry((a, b)).or_default().push(f);
            }
        }
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(3));
    let mut shared = HashMap::new();
    for (&diag, fs) in &by_diagonal {
        if fs.len() != 2 {
            return Err(Error::InvalidTriangulation(format!(
                "diagonal ({}, {}) borders {} faces",
                diag.0,
                diag.1,
                fs.len()
            )));
        }
        edges.push((fs[0], fs[1]));
        shared.insert((fs[0].min(fs[1]), fs[0].max(fs[1])), diag);
    }
    let tree = Graph::from_edge_list(n - 2, &edges)?;
    Ok(DualTree { faces, tree, shared })
}

/// Result of the dual-tree separator construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarSeparator {
    pub separator: VertexSet,
    /// 1: a dual component holds exactly `(n-2)/2` faces and `X` is the
    /// diagonal into it. 2: `X` is the centroid face.
    pub case: u8,
    /// Index of the centroid face.
    pub face: usize,
    /// Neighbouring face across the chosen diagonal (case 1 only).
    pub toward: Option<usize>,
}

impl OuterplanarSeparator {
    pub fn describe(&self) -> String {
        match self.toward {
            Some(f) => format!("outerplanar case 1, centroid face {} toward face {}", self.face, f),
            None => format!("outerplanar case 2, centroid face {}", self.face),
        }
    }
}

pub fn outerplanar_separator(p: &MaximalOuterplanarGraph) -> Result<OuterplanarSeparator> {
    let n = p.n;
    if n < 4 {
        return Err(Error::TooFewVertices { required: 4, got: n });
    }
    let dual = build_dual_tree(p)?;
    let face = tree_centroid(&dual.tree)?;
    let parts = dual.tree.components_after_removal(&VertexSet::new([face]));

    let faces = n - 2;
    if faces.is_multiple_of(2) {
        // components come ordered by lowest face index, so ties resolve to it
        if let Some(big) = parts.components().iter().find(|c| 2 * c.len() == faces) {
            let toward = dual
                .tree
                .neighbors(face)
                .iter()
                .copied()
                .find(|&w| big.contains(w))
                .expect("component of T - v touches v");
            let (a, b) = dual.shared_diagonal(face, toward).expect("dual edge has a diagonal");
            return Ok(OuterplanarSeparator {
                separator: VertexSet::new([a, b]),
                case: 1,
                face,
                toward: Some(toward),
            });
        }
    }
    Ok(OuterplanarSeparator {
        separator: VertexSet::new(dual.faces[face]),
        case: 2,
        face,
        toward: None,
    })
}

/// A balanced separator and the number of refinement passes it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub separator: VertexSet,
    pub iterations: usize,
}

/// Grows `x0` until every component of `G - X` has at most `(n - |X|)/2`
/// vertices.
///
/// Each pass hands every oversized component (as an induced subgraph with
/// local ids) to `finder`, which must return a non-empty separator leaving
/// no piece larger than 2/3 of the component.
pub fn refine_balanced<F>(g: &Graph, x0: &VertexSet, finder: F) -> Result<Refinement>
where
    F: Fn(&Graph) -> Result<VertexSet>,
{
    g.check_vertex_set(x0)?;
    let n = g.vertex_count();
    let mut x = x0.clone();
    let mut iterations = 0;
    loop {
        let parts = g.components_after_removal(&x);
        let limit = n - x.len();
        let oversized: Vec<&VertexSet> = parts.components().iter().filter(|c| 2 * c.len() > limit).collect();
        if oversized.is_empty() {
            return Ok(Refinement { separator: x, iterations });
        }
        iterations += 1;
        let mut added = Vec::new();
        for component in oversized {
            let (sub, map) = g.induced_subgraph(component);
            let local = finder(&sub)?;
            sub.check_vertex_set(&local)
                .map_err(|e| Error::FinderContract(e.to_string()))?;
            if local.is_empty() {
                return Err(Error::FinderContract(format!(
                    "empty separator for component of {} vertices",
                    sub.vertex_count()
                )));
            }
            let k = sub.vertex_count();
            let pieces = sub.components_after_removal(&local);
            if let Some(piece) = pieces.components().iter().find(|c| 3 * c.len() > 2 * k) {
                return Err(Error::FinderContract(format!(
                    "piece of {} vertices left in a component of {k}",
                    piece.len()
                )));
            }
            added.extend(local.iter().map(|v| map[v]));
        }
        x = x.union(&VertexSet::new(added));
    }
}

/// Finder for trees: the centroid.
pub fn centroid_finder(tree: &Graph) -> Result<VertexSet> {
    Ok(VertexSet::new([tree_centroid(tree)?]))
}

fn bfs_layers(g: &Graph, root: usize) -> Vec<Vec<usize>> {
    let mut level = vec![usize::MAX; g.vertex_count()];
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut layers: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(u) = queue.pop_front() {
        layers[level[u]].push(u);
        for &v in g.neighbors(u) {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                if layers.len() <= level[v] {
                    layers.push(Vec::new());
                }
                queue.push_back(v);
            }
        }
    }
    layers
}

/// Finder for any connected graph: over all BFS roots and layers, the
/// smallest layer whose removal leaves no piece above 2/3 of the vertices
/// (ties: smaller largest piece, then lower root, then shallower layer).
///
/// For each root the first layer at which the layers so far reach half the
/// vertices always qualifies, so a candidate exists.
pub fn bfs_level_finder(g: &Graph) -> Result<VertexSet> {
    let k = g.vertex_count();
    if k == 0 {
        return Err(Error::TooFewVertices { required: 1, got: 0 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best: Option<((usize, usize), VertexSet)> = None;
    for root in 0..k {
        for layer in bfs_layers(g, root) {
            let x = VertexSet::new(layer);
            let largest = g.components_after_removal(&x).largest().map_or(0, |c| c.len());
            if 3 * largest > 2 * k {
                continue;
            }
            let key = (x.len(), largest);
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                best = Some((key, x));
            }
        }
    }
    Ok(best.expect("the half-way layer always qualifies").1)
}

/// Centroid followed by centroid refinement: a balanced separator of a tree.
pub fn tree_separator(tree: &Graph) -> Result<Refinement> {
    let c = tree_centroid(tree)?;
    refine_balanced(tree, &VertexSet::new([c]), centroid_finder)
}

/// BFS-layer refinement from the empty set: a balanced separator of any
/// connected graph (possibly large).
pub fn bfs_separator(g: &Graph) -> Result<Refinement> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    refine_balanced(g, &VertexSet::empty(), bfs_level_finder)
}
