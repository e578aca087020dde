//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every graph in the crate flows through [`Graph`]. Construction rejects
//! self-loops and silently merges repeated edges, so the adjacency lists are
//! always sorted, duplicate-free and symmetric.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Sorted list of distinct vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    /// Boolean membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// Connected components of `G - X`, ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    components: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(VertexSet::len).collect()
    }

    pub fn total(&self) -> usize {
        self.components.iter().map(VertexSet::len).sum()
    }

    pub fn largest(&self) -> Option<&VertexSet> {
        // ties go to the component listed first, i.e. lowest minimum id
        self.components
            .iter()
            .rev()
            .max_by_key(|c| c.len())
    }
}

/// The Laplacian `L = D - A`, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix(DenseMatrix);

impl LaplacianMatrix {
    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> DenseMatrix {
        self.0
    }
}

impl AsRef<DenseMatrix> for LaplacianMatrix {
    fn as_ref(&self) -> &DenseMatrix {
        &self.0
    }
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: degree_sum / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components_after_removal(&VertexSet::empty()).len() == 1
    }

    pub fn laplacian(&self) -> LaplacianMatrix {
        let n = self.vertex_count();
        let mut m = DenseMatrix::zeros(n);
        for (u, list) in self.adjacency.iter().enumerate() {
            m.set(u, u, list.len() as f64);
            for &v in list {
                m.set(u, v, -1.0);
            }
        }
        LaplacianMatrix(m)
    }

    /// Disjoint union of `self` and `other` plus every edge between them.
    /// Vertices of `other` are shifted by `self.vertex_count()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.vertex_count();
        let n2 = other.vertex_count();
        let mut adjacency = Vec::with_capacity(n1 + n2);
        for list in &self.adjacency {
            let mut row = list.clone();
            row.extend(n1..n1 + n2);
            adjacency.push(row);
        }
        for list in &other.adjacency {
            let mut row: Vec<usize> = (0..n1).collect();
            row.extend(list.iter().map(|&v| v + n1));
            adjacency.push(row);
        }
        Graph {
            adjacency,
            edge_count: self.edge_count + other.edge_count + n1 * n2,
        }
    }

    /// Connected components of the subgraph induced on `V \ X`.
    ///
    /// Vertex ids in `removed` must be in range; out-of-range ids panic.
    pub fn components_after_removal(&self, removed: &VertexSet) -> ComponentPartition {
        let n = self.vertex_count();
        let mut seen = removed.mask(n);
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            components.push(VertexSet::new(members));
        }
        ComponentPartition { components }
    }

    /// Number of edges with exactly one endpoint in `x`.
    pub fn cross_edge_count(&self, x: &VertexSet) -> usize {
        let mask = x.mask(self.vertex_count());
        self.edges().filter(|&(u, v)| mask[u] != mask[v]).count()
    }

    pub fn high_degree_set(&self, threshold: usize) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) >= threshold)
            .collect()
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the order given
    /// by the (sorted) set. Returns the subgraph and the local → global map.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = vertices.as_slice().to_vec();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut adjacency = vec![Vec::new(); map.len()];
        let mut degree_sum = 0;
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adjacency[v] {
                if local[w] != usize::MAX {
                    adjacency[i].push(local[w]);
                }
            }
            degree_sum += adjacency[i].len();
        }
        (
            Graph {
                adjacency,
                edge_count: degree_sum / 2,
            },
            map,
        )
    }

    /// Minimum number of vertices whose removal disconnects the graph, by
    /// exhaustive search over vertex subsets. Limited to 16 vertices.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        const LIMIT: usize = 16;
        let n = self.vertex_count();
        if n > LIMIT {
            return Err(Error::SizeLimitExceeded { n, limit: LIMIT });
        }
        if self.is_complete() {
            return Err(Error::CompleteGraph);
        }
        let adj: Vec<u32> = self
            .adjacency
            .iter()
            .map(|list| list.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect();
        let full: u32 = (1u32 << n) - 1;
        let connected = |alive: u32| -> bool {
            if alive == 0 {
                return true;
            }
            let mut reached = 1u32 << alive.trailing_zeros();
            let mut frontier = reached;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[u] & alive & !reached;
                reached |= fresh;
                frontier |= fresh;
            }
            reached == alive
        };
        if !connected(full) {
            return Ok(0);
        }
        let mut best = n - 1;
        for cut in 1..full {
            let size = cut.count_ones() as usize;
            if size >= best || size + 2 > n {
                continue;
            }
            if !connected(full & !cut) {
                best = size;
            }
        }
        Ok(best)
    }

    /// Fails unless every id in `x` is a vertex of this graph.
    pub fn check_vertex_set(&self, x: &VertexSet) -> Result<()> {
        x.check_range(self.vertex_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn builds_k2_and_c4() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert_eq!(c4.edge_count(), 4);
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 })
        ));
    }

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn laplacian_entries() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let l = k2.laplacian();
        assert_eq!(l.matrix().row(0), &[1.0, -1.0]);
        assert_eq!(l.matrix().row(1), &[-1.0, 1.0]);

        let k1 = Graph::empty(1).laplacian();
        assert_eq!(k1.get(0, 0), 0.0);

        let c3 = complete(3).laplacian();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c3.get(i, j), if i == j { 2.0 } else { -1.0 });
            }
        }
    }

    #[test]
    fn join_counts() {
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let octa = c4.join(&Graph::empty(2));
        assert_eq!(octa.vertex_count(), 6);
        assert_eq!(octa.edge_count(), 12);
        assert!(octa.degrees().iter().all(|&d| d == 4));
        assert!(!octa.has_edge(4, 5));

        assert_eq!(Graph::empty(1).join(&Graph::empty(1)), path(2));
        assert_eq!(path(2).join(&Graph::empty(1)), complete(3));
    }

    #[test]
    fn components_and_cross_edges() {
        let p5 = path(5);
        let x = VertexSet::new([2]);
        let parts = p5.components_after_removal(&x);
        assert_eq!(parts.components(), &[VertexSet::new([0, 1]), VertexSet::new([3, 4])]);
        assert_eq!(p5.cross_edge_count(&x), 2);

        let k4 = complete(4);
        let x = VertexSet::new([0, 1]);
        assert_eq!(k4.components_after_removal(&x).components(), &[VertexSet::new([2, 3])]);
        assert_eq!(k4.cross_edge_count(&x), 4);

        let star = Graph::from_edge_list(7, &(1..7).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        let center = VertexSet::new([0]);
        assert_eq!(star.components_after_removal(&center).sizes(), vec![1; 6]);
        assert_eq!(star.cross_edge_count(&center), 6);
    }

    #[test]
    fn connectivity_brute_force() {
        let c5 = Graph::from_edge_list(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>()).unwrap();
        assert_eq!(c5.vertex_connectivity(), Ok(2));
        assert_eq!(path(6).vertex_connectivity(), Ok(1));
        let mut k24 = Vec::new();
        for a in 0..2 {
            for b in 2..6 {
                k24.push((a, b));
            }
        }
        let k24 = Graph::from_edge_list(6, &k24).unwrap();
        assert_eq!(k24.vertex_connectivity(), Ok(2));
        assert_eq!(complete(4).vertex_connectivity(), Err(Error::CompleteGraph));
        assert!(matches!(path(17).vertex_connectivity(), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn high_degree() {
        let star = Graph::from_edge_list(10, &(1..10).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        assert_eq!(star.high_degree_set(5), VertexSet::new([0]));
        let c6 = Graph::from_edge_list(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        assert!(c6.high_degree_set(3).is_empty());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p5 = path(5);
        let (sub, map) = p5.induced_subgraph(&VertexSet::new([1, 2, 4]));
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(sub.edge_count(), 1);
        assert!(sub.has_edge(0, 1));
    }
}
