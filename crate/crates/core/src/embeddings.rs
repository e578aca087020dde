//! Zero-sum planar embeddings and separator certificates.
//!
//! A separator `X` whose removal leaves components of at most
//! `(n - |X|)/2` vertices gives an explicit upper bound on `λ2`: put `X` at
//! the origin, put each component at one point of the unit circle so that the
//! size-weighted points cancel, and evaluate the embedding quotient
//! `Σ_E ‖v_i - v_j‖² / Σ_V ‖v_i‖²`. Only edges leaving `X` have non-zero
//! length (exactly 1), so the quotient is `|E(X, G - X)| / (n - |X|)`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{ComponentPartition, Graph, VertexSet};
use crate::spectra::fiedler_value;

/// Zero-sum tolerance used for separator embeddings.
pub const EMBEDDING_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub const ORIGIN: PlanarPoint = PlanarPoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        PlanarPoint { x, y }
    }

    pub fn on_circle(angle: f64) -> Self {
        PlanarPoint {
            x: angle.cos(),
            y: angle.sin(),
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist_sq(&self, other: &PlanarPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn scaled(&self, k: f64) -> PlanarPoint {
        PlanarPoint::new(k * self.x, k * self.y)
    }
}

impl std::ops::Add for PlanarPoint {
    type Output = PlanarPoint;

    fn add(self, rhs: PlanarPoint) -> PlanarPoint {
        PlanarPoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::iter::Sum for PlanarPoint {
    fn sum<I: Iterator<Item = PlanarPoint>>(iter: I) -> Self {
        iter.fold(PlanarPoint::ORIGIN, |a, b| a + b)
    }
}

/// One point per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub points: Vec<PlanarPoint>,
    pub tolerance: f64,
}

impl Embedding {
    pub fn new(points: Vec<PlanarPoint>, tolerance: f64) -> Self {
        Embedding { points, tolerance }
    }

    pub fn sum(&self) -> PlanarPoint {
        self.points.iter().copied().sum()
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sum().norm() <= self.tolerance
    }
}

/// Unit vectors `w1, w2, w3` with `a·w1 + b·w2 + c·w3 = 0`.
///
/// Uses the triangle with sides `a, b, c`: `w1 = (1, 0)`, `w2` at angle
/// `π + γ` and `w3` at `π - β`, where `β` and `γ` are the angles opposite `b`
/// and `c`.
pub fn three_point_placement(a: f64, b: f64, c: f64) -> Result<[PlanarPoint; 3]> {
    let positive = |x: f64| x > 0.0 && x.is_finite();
    if !(positive(a) && positive(b) && positive(c) && a < b + c && b < c + a && c < a + b) {
        return Err(Error::DegenerateTriangle(a, b, c));
    }
    let cos_gamma = ((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0);
    let cos_beta = ((a * a + c * c - b * b) / (2.0 * a * c)).clamp(-1.0, 1.0);
    let gamma = cos_gamma.acos();
    let beta = cos_beta.acos();
    Ok([
        PlanarPoint::new(1.0, 0.0),
        PlanarPoint::on_circle(PI + gamma),
        PlanarPoint::on_circle(PI - beta),
    ])
}

/// Unit vectors `v_i` with `Σ k_i v_i = 0`, returned in input order.
///
/// Requires at least two weights, all positive and none above half the total.
pub fn balanced_circle_placement(weights: &[f64]) -> Result<Vec<PlanarPoint>> {
    let r = weights.len();
    if r < 2 {
        return Err(Error::TooFewWeights(r));
    }
    let total: f64 = weights.iter().sum();
    for (index, &weight) in weights.iter().enumerate() {
        if !(weight > 0.0) || 2.0 * weight > total {
            return Err(Error::UnbalancedWeight { index, weight, total });
        }
    }

    // stable sort keeps equal weights in index order
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| weights[i].total_cmp(&weights[j]));
    let sorted: Vec<f64> = order.iter().map(|&i| weights[i]).collect();

    let mut prefix = 0.0;
    let mut split = r - 1;
    for (l, &k) in sorted.iter().enumerate() {
        prefix += k;
        if prefix >= total - prefix {
            split = l;
            break;
        }
    }
    let suffix = total - prefix;

    let mut placed = vec![PlanarPoint::ORIGIN; r];
    let equal = (prefix - suffix).abs() <= 1e-12 * total;
    if equal {
        for (pos, &i) in order.iter().enumerate() {
            placed[i] = if pos <= split {
                PlanarPoint::new(1.0, 0.0)
            } else {
                PlanarPoint::new(-1.0, 0.0)
            };
        }
    } else {
        let a = prefix - sorted[split];
        let [w1, w2, w3] = three_point_placement(a, sorted[split], suffix)?;
        for (pos, &i) in order.iter().enumerate() {
            placed[i] = match pos.cmp(&split) {
                std::cmp::Ordering::Less => w1,
                std::cmp::Ordering::Equal => w2,
                std::cmp::Ordering::Greater => w3,
            };
        }
    }
    Ok(placed)
}

/// Largest component size allowed by the balance condition, `(n - |X|)/2`.
pub fn balance_limit(n: usize, separator_size: usize) -> f64 {
    (n - separator_size) as f64 / 2.0
}

/// First component violating `|C| ≤ (n - |X|)/2`, if any.
pub fn find_unbalanced(
    partition: &ComponentPartition,
    n: usize,
    separator_size: usize,
) -> Option<&VertexSet> {
    let limit = n - separator_size;
    partition.components().iter().find(|c| 2 * c.len() > limit)
}

fn checked_partition(g: &Graph, x: &VertexSet) -> Result<ComponentPartition> {
    g.check_vertex_set(x)?;
    let partition = g.components_after_removal(x);
    let n = g.vertex_count();
    if let Some(c) = find_unbalanced(&partition, n, x.len()) {
        return Err(Error::UnbalancedComponent {
            min_vertex: c.min().unwrap_or(0),
            size: c.len(),
            limit: balance_limit(n, x.len()),
        });
    }
    if partition.len() < 2 {
        return Err(Error::TooFewComponents(partition.len()));
    }
    Ok(partition)
}

/// `X` at the origin, component `i` at the `i`-th balanced circle point.
pub fn separator_embedding(g: &Graph, x: &VertexSet) -> Result<Embedding> {
    let partition = checked_partition(g, x)?;
    embed_partition(g.vertex_count(), &partition)
}

fn embed_partition(n: usize, partition: &ComponentPartition) -> Result<Embedding> {
    let sizes: Vec<f64> = partition.sizes().into_iter().map(|s| s as f64).collect();
    let placed = balanced_circle_placement(&sizes)?;
    let mut points = vec![PlanarPoint::ORIGIN; n];
    for (component, point) in partition.components().iter().zip(placed) {
        for v in component.iter() {
            points[v] = point;
        }
    }
    Ok(Embedding::new(points, EMBEDDING_TOL))
}

/// `Σ_E ‖v_i - v_j‖² / Σ_V ‖v_i‖²` for a zero-sum embedding.
pub fn embedding_quotient(g: &Graph, emb: &Embedding) -> Result<f64> {
    if emb.points.len() != g.vertex_count() {
        return Err(Error::EmbeddingSize {
            expected: g.vertex_count(),
            got: emb.points.len(),
        });
    }
    let norm = emb.sum().norm();
    if norm > emb.tolerance {
        return Err(Error::NotZeroSum {
            norm,
            tol: emb.tolerance,
        });
    }
    let denominator: f64 = emb.points.iter().map(PlanarPoint::norm_sq).sum();
    if denominator == 0.0 {
        return Err(Error::AllZeroEmbedding);
    }
    let numerator: f64 = g
        .edges()
        .map(|(u, v)| emb.points[u].dist_sq(&emb.points[v]))
        .sum();
    Ok(numerator / denominator)
}

/// An explicit upper bound on `λ2` from a balanced separator.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparatorCertificate {
    pub separator: VertexSet,
    pub partition: ComponentPartition,
    pub cross_edges: usize,
    /// `n - |X|`, the denominator of the bound.
    pub remaining: usize,
    pub bound: f64,
    pub embedding: Embedding,
    pub quotient: f64,
    /// How the separator was obtained, when it was not supplied by hand.
    pub origin: Option<String>,
}

/// Outcome of comparing a certificate with the computed `λ2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Soundness {
    pub lambda2: f64,
    pub quotient_minus_bound: f64,
    pub upper_bound_holds: bool,
    pub matches_bound: bool,
}

impl Soundness {
    pub fn ok(&self) -> bool {
        self.upper_bound_holds && self.matches_bound
    }
}

impl SeparatorCertificate {
    /// The bound as an unreduced fraction, e.g. `6/6`.
    pub fn bound_fraction(&self) -> String {
        format!("{}/{}", self.cross_edges, self.remaining)
    }

    pub fn with_origin(mut self, origin: impl Into<String>) -> Self {
        self.origin = Some(origin.into());
        self
    }

    /// Checks `quotient ≥ λ2 - 1e-8` and `|quotient - bound| ≤ 1e-9`.
    pub fn soundness(&self, g: &Graph, tol: f64) -> Result<Soundness> {
        let lambda2 = fiedler_value(g, tol)?;
        let diff = self.quotient - self.bound;
        Ok(Soundness {
            lambda2,
            quotient_minus_bound: diff,
            upper_bound_holds: self.quotient >= lambda2 - 1e-8,
            matches_bound: diff.abs() <= 1e-9,
        })
    }

    /// Plain-text serialization; coordinates carry 15 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sizes: Vec<String> = self.partition.sizes().iter().map(|s| s.to_string()).collect();
        let x: Vec<String> = self.separator.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "vertices: {}", self.embedding.points.len());
        if let Some(origin) = &self.origin {
            let _ = writeln!(out, "origin: {origin}");
        }
        let _ = writeln!(out, "separator: {}", x.join(" "));
        let _ = writeln!(out, "component_sizes: {}", sizes.join(" "));
        let _ = writeln!(out, "cross_edges: {}", self.cross_edges);
        let _ = writeln!(out, "bound: {}", self.bound_fraction());
        let _ = writeln!(out, "quotient: {:.14e}", self.quotient);
        let _ = writeln!(out, "coordinates:");
        for (v, p) in self.embedding.points.iter().enumerate() {
            let _ = writeln!(out, "{v} {:.14e} {:.14e}", p.x, p.y);
        }
        out
    }
}

/// Builds the separator certificate for `(g, x)`.
pub fn certify(g: &Graph, x: &VertexSet) -> Result<SeparatorCertificate> {
    let partition = checked_partition(g, x)?;
    let embedding = embed_partition(g.vertex_count(), &partition)?;
    let quotient = embedding_quotient(g, &embedding)?;
    let cross_edges = g.cross_edge_count(x);
    let remaining = g.vertex_count() - x.len();
    Ok(SeparatorCertificate {
        separator: x.clone(),
        partition,
        cross_edges,
        remaining,
        bound: cross_edges as f64 / remaining as f64,
        embedding,
        quotient,
        origin: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path, star};
    use crate::spectra::DEFAULT_TOL;

    fn residual(weights: &[f64], points: &[PlanarPoint]) -> f64 {
        weights
            .iter()
            .zip(points)
            .map(|(&k, p)| p.scaled(k))
            .sum::<PlanarPoint>()
            .norm()
    }

    #[test]
    fn equilateral_placement() {
        let pts = three_point_placement(1.0, 1.0, 1.0).unwrap();
        assert!(residual(&[1.0, 1.0, 1.0], &pts) <= 1e-12);
        for i in 0..3 {
            for j in i + 1..3 {
                // 2π/3 apart: chord length sqrt(3)
                assert!((pts[i].dist_sq(&pts[j]) - 3.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn right_triangle_placement() {
        let [w1, w2, w3] = three_point_placement(3.0, 4.0, 5.0).unwrap();
        assert_eq!(w1, PlanarPoint::new(1.0, 0.0));
        assert!(w2.x.abs() < 1e-15 && (w2.y + 1.0).abs() < 1e-15);
        assert!((w3.x + 0.6).abs() < 1e-15 && (w3.y - 0.8).abs() < 1e-15);
        assert!(residual(&[3.0, 4.0, 5.0], &[w1, w2, w3]) <= 1e-12);
    }

    #[test]
    fn degenerate_triangles_rejected() {
        assert!(matches!(three_point_placement(1.0, 1.0, 2.0), Err(Error::DegenerateTriangle(..))));
        assert!(three_point_placement(0.0, 1.0, 1.0).is_err());
        assert!(three_point_placement(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn balanced_examples() {
        let pts = balanced_circle_placement(&[1.0, 1.0]).unwrap();
        assert_eq!(pts, vec![PlanarPoint::new(1.0, 0.0), PlanarPoint::new(-1.0, 0.0)]);

        let pts = balanced_circle_placement(&[2.0, 3.0, 3.0]).unwrap();
        assert_eq!(pts.to_vec(), three_point_placement(2.0, 3.0, 3.0).unwrap().to_vec());
        assert!(residual(&[2.0, 3.0, 3.0], &pts) <= 1e-10);

        let pts = balanced_circle_placement(&[1.0; 4]).unwrap();
        let (e, w) = (PlanarPoint::new(1.0, 0.0), PlanarPoint::new(-1.0, 0.0));
        assert_eq!(pts, vec![e, e, w, w]);

        assert!(matches!(
            balanced_circle_placement(&[5.0, 1.0]),
            Err(Error::UnbalancedWeight { index: 0, .. })
        ));
        assert_eq!(balanced_circle_placement(&[1.0]), Err(Error::TooFewWeights(1)));
    }

    #[test]
    fn placement_restores_input_order() {
        let weights = [3.0, 1.0, 2.0, 2.0];
        let pts = balanced_circle_placement(&weights).unwrap();
        assert!(residual(&weights, &pts) <= 1e-12);
        // sorted (1,2,2,3): prefix first exceeds suffix at the third weight, so a=3, b=2, c=3
        let [w1, w2, w3] = three_point_placement(3.0, 2.0, 3.0).unwrap();
        assert_eq!(pts, vec![w3, w1, w1, w2]);
    }

    #[test]
    fn separator_embeddings() {
        let s = star(7).unwrap();
        let emb = separator_embedding(&s, &VertexSet::new([0])).unwrap();
        assert!(emb.sum().norm() <= 1e-9);
        assert_eq!(emb.points[0], PlanarPoint::ORIGIN);

        let p5 = path(5).unwrap();
        let emb = separator_embedding(&p5, &VertexSet::new([2])).unwrap();
        let (e, w) = (PlanarPoint::new(1.0, 0.0), PlanarPoint::new(-1.0, 0.0));
        assert_eq!(emb.points, vec![e, e, PlanarPoint::ORIGIN, w, w]);

        let k4 = complete(4).unwrap();
        assert!(matches!(
            separator_embedding(&k4, &VertexSet::new([0, 1])),
            Err(Error::UnbalancedComponent { min_vertex: 2, size: 2, .. })
        ));
        // a lone component always outweighs half the remainder
        let k3 = complete(3).unwrap();
        assert!(matches!(
            separator_embedding(&k3, &VertexSet::new([0, 1])),
            Err(Error::UnbalancedComponent { min_vertex: 2, size: 1, .. })
        ));
    }

    #[test]
    fn certificates() {
        let s = star(7).unwrap();
        let cert = certify(&s, &VertexSet::new([0])).unwrap();
        assert_eq!(cert.bound_fraction(), "6/6");
        assert_eq!(cert.bound, 1.0);
        let sound = cert.soundness(&s, DEFAULT_TOL).unwrap();
        assert!(sound.ok());
        assert!((sound.lambda2 - 1.0).abs() < 1e-10);

        let p5 = path(5).unwrap();
        let cert = certify(&p5, &VertexSet::new([2])).unwrap();
        assert_eq!(cert.bound, 0.5);
        let sound = cert.soundness(&p5, DEFAULT_TOL).unwrap();
        assert!(sound.ok());
        assert!((sound.lambda2 - (2.0 - 2.0 * (PI / 5.0).cos())).abs() < 1e-10);

        let diamond = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let cert = certify(&diamond, &VertexSet::new([0, 2])).unwrap();
        assert_eq!(cert.bound_fraction(), "4/2");
        let sound = cert.soundness(&diamond, DEFAULT_TOL).unwrap();
        assert!(sound.ok());
        assert!((sound.lambda2 - 2.0).abs() < 1e-10);
    }

    #[test]
    fn quotient_examples() {
        let k2 = complete(2).unwrap();
        let emb = Embedding::new(vec![PlanarPoint::new(1.0, 0.0), PlanarPoint::new(-1.0, 0.0)], 1e-12);
        assert_eq!(embedding_quotient(&k2, &emb).unwrap(), 2.0);

        let c4 = crate::families::cycle(4).unwrap();
        let pts = (0..4).map(|i| PlanarPoint::on_circle(PI / 2.0 * i as f64)).collect();
        let q = embedding_quotient(&c4, &Embedding::new(pts, 1e-12)).unwrap();
        assert!((q - 2.0).abs() < 1e-12);

        // two disjoint edges, each side at one antipode: no edge is stretched
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let (e, w) = (PlanarPoint::new(1.0, 0.0), PlanarPoint::new(-1.0, 0.0));
        let q = embedding_quotient(&two, &Embedding::new(vec![e, e, w, w], 1e-12)).unwrap();
        assert_eq!(q, 0.0);

        let zero = Embedding::new(vec![PlanarPoint::ORIGIN; 2], 1e-12);
        assert_eq!(embedding_quotient(&k2, &zero), Err(Error::AllZeroEmbedding));
        let skewed = Embedding::new(vec![e, e], 1e-12);
        assert!(matches!(embedding_quotient(&k2, &skewed), Err(Error::NotZeroSum { .. })));
    }

    #[test]
    fn certificate_text() {
        let p5 = path(5).unwrap();
        let text = certify(&p5, &VertexSet::new([2])).unwrap().to_text();
        assert!(text.contains("separator: 2\n"));
        assert!(text.contains("component_sizes: 2 2\n"));
        assert!(text.contains("bound: 2/4\n"));
        assert!(text.contains("0 1.00000000000000e0 0.00000000000000e0\n"));
    }
}
