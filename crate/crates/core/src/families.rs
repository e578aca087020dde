//! Graph families and their closed-form Laplacian spectra.
//!
//! Labelling is fixed so that closed forms can be checked coordinate by
//! coordinate:
//!
//! * `cycle(n)`, `path(n)`: vertices `0..n` in order.
//! * `star(n)`: center `0`, leaves `1..n`.
//! * `complete_bipartite(a, b)`: sides `0..a` and `a..a+b`.
//! * `wheel`, `doublewheel`, `fan`: rim first, apex(es) last.
//! * `quadrangulation(n)`: cycle `0..n`, apex `n` on the even rim vertices
//!   and apex `n + 1` on the odd ones. With 1-based rim labels this is the
//!   usual "odd apex" / "even apex" wiring shifted by one.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Star(usize),
    Empty(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cube,
    Grid(usize, usize),
    Wheel(usize),
    Doublewheel(usize),
    Quadrangulation(usize),
    Fan(usize),
    KhExtremal { h: usize, n: usize },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Path(_) => "path",
            FamilySpec::Star(_) => "star",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Cube => "cube",
            FamilySpec::Grid(..) => "grid",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Doublewheel(_) => "doublewheel",
            FamilySpec::Quadrangulation(_) => "quadrangulation",
            FamilySpec::Fan(_) => "fan",
            FamilySpec::KhExtremal { .. } => "kh",
        }
    }

    /// The family's size parameter `n` (rim length for the apex families).
    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Star(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Doublewheel(n)
            | FamilySpec::Quadrangulation(n)
            | FamilySpec::Fan(n)
            | FamilySpec::KhExtremal { n, .. } => n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Cube => 8,
            FamilySpec::Grid(r, c) => r * c,
        }
    }

    /// Same family with a different size parameter. Families with two free
    /// parameters keep the first one.
    pub fn with_n(&self, n: usize) -> FamilySpec {
        match *self {
            FamilySpec::Cycle(_) => FamilySpec::Cycle(n),
            FamilySpec::Path(_) => FamilySpec::Path(n),
            FamilySpec::Star(_) => FamilySpec::Star(n),
            FamilySpec::Empty(_) => FamilySpec::Empty(n),
            FamilySpec::Complete(_) => FamilySpec::Complete(n),
            FamilySpec::CompleteBipartite(a, _) => FamilySpec::CompleteBipartite(a, n.saturating_sub(a)),
            FamilySpec::Cube => FamilySpec::Cube,
            FamilySpec::Grid(r, _) => FamilySpec::Grid(r, n / r.max(1)),
            FamilySpec::Wheel(_) => FamilySpec::Wheel(n),
            FamilySpec::Doublewheel(_) => FamilySpec::Doublewheel(n),
            FamilySpec::Quadrangulation(_) => FamilySpec::Quadrangulation(n),
            FamilySpec::Fan(_) => FamilySpec::Fan(n),
            FamilySpec::KhExtremal { h, .. } => FamilySpec::KhExtremal { h, n },
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Path(n) => path(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::Empty(n) => empty(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(a, b),
            FamilySpec::Cube => Ok(cube()),
            FamilySpec::Grid(r, c) => grid(r, c),
            FamilySpec::Wheel(n) => wheel(n),
            FamilySpec::Doublewheel(n) => doublewheel(n),
            FamilySpec::Quadrangulation(n) => quadrangulation(n),
            FamilySpec::Fan(n) => fan(n),
            FamilySpec::KhExtremal { h, n } => kh_extremal(h, n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Cube => write!(f, "cube"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            FamilySpec::Grid(r, c) => write!(f, "grid:{r}:{c}"),
            FamilySpec::KhExtremal { h, n } => write!(f, "kh:{h}:{n}"),
            other => write!(f, "{}:{}", other.name(), other.n()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `family:param[:param]`, e.g. `doublewheel:10` or `kh:5:20`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let mut parts = s.trim().split(':');
        let name = parts.next().ok_or_else(unknown)?.to_ascii_lowercase();
        let params = parts
            .map(|p| p.trim().parse::<usize>().map_err(|_| unknown()))
            .collect::<Result<Vec<_>>>()?;
        let spec = match (name.as_str(), params.as_slice()) {
            ("cycle", &[n]) => FamilySpec::Cycle(n),
            ("path", &[n]) => FamilySpec::Path(n),
            ("star", &[n]) => FamilySpec::Star(n),
            ("empty", &[n]) => FamilySpec::Empty(n),
            ("complete", &[n]) => FamilySpec::Complete(n),
            ("complete_bipartite" | "bipartite", &[a, b]) => FamilySpec::CompleteBipartite(a, b),
            ("cube", &[]) => FamilySpec::Cube,
            ("grid", &[r, c]) => FamilySpec::Grid(r, c),
            ("wheel", &[n]) => FamilySpec::Wheel(n),
            ("doublewheel", &[n]) => FamilySpec::Doublewheel(n),
            ("quadrangulation", &[n]) => FamilySpec::Quadrangulation(n),
            ("fan", &[n]) => FamilySpec::Fan(n),
            ("kh" | "kh_extremal", &[h, n]) => FamilySpec::KhExtremal { h, n },
            _ => return Err(unknown()),
        };
        Ok(spec)
    }
}

fn param_error(msg: impl Into<String>) -> Error {
    Error::FamilyParameter(msg.into())
}

fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("family constructors emit valid edges")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_error(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(from_edges(n, &edges))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param_error("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(from_edges(n, &edges))
}

/// `K_{1,n-1}`: `n` vertices in total.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param_error("star needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(from_edges(n, &edges))
}

pub fn empty(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param_error("empty graph needs n >= 1"));
    }
    Ok(Graph::empty(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param_error("complete graph needs n >= 1"));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(from_edges(n, &edges))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(param_error(format!("complete bipartite needs a, b >= 1, got ({a}, {b})")));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Ok(from_edges(a + b, &edges))
}

/// The 3-cube `Q_3`; vertices are 3-bit words, adjacent when they differ in one bit.
pub fn cube() -> Graph {
    let mut edges = Vec::with_capacity(12);
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    from_edges(8, &edges)
}

/// `rows x cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows < 1 || cols < 1 {
        return Err(param_error(format!("grid needs positive sides, got {rows}x{cols}")));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(from_edges(rows * cols, &edges))
}

/// `C_n * K_1`, hub at `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param_error(format!("wheel needs n >= 3, got {n}")));
    }
    Ok(cycle(n)?.join(&Graph::empty(1)))
}

/// `C_n * 2K_1`, apexes `n` and `n + 1` (non-adjacent).
pub fn doublewheel(n: usize) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(param_error(format!("doublewheel needs even n >= 4, got {n}")));
    }
    Ok(cycle(n)?.join(&Graph::empty(2)))
}

/// `C_n` plus apex `n` joined to the even rim vertices and apex `n + 1`
/// joined to the odd ones.
pub fn quadrangulation(n: usize) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(param_error(format!("quadrangulation needs even n >= 4, got {n}")));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        edges.push((i, if i % 2 == 0 { n } else { n + 1 }));
    }
    Ok(from_edges(n + 2, &edges))
}

/// `P_n * K_1`, apex at `n`.
pub fn fan(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(param_error(format!("fan needs n >= 2, got {n}")));
    }
    Ok(path(n)?.join(&Graph::empty(1)))
}

/// `K_{h-2, n-h+2}`, which has no `K_h` minor.
pub fn kh_extremal(h: usize, n: usize) -> Result<Graph> {
    if h < 4 || n < 2 * h - 4 {
        return Err(param_error(format!("kh_extremal needs h >= 4 and n >= 2h - 4, got h={h}, n={n}")));
    }
    complete_bipartite(h - 2, n - h + 2)
}

/// Values of `n` for which a closed form holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validity {
    pub min_n: usize,
    pub even_only: bool,
}

impl Validity {
    pub fn contains(&self, n: usize) -> bool {
        n >= self.min_n && (!self.even_only || n.is_multiple_of(2))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub family: FamilySpec,
    pub lambda2_predicted: f64,
    pub full_spectrum_predicted: Option<Vec<f64>>,
    pub validity: Validity,
    /// Value `λ2` approaches as `n` grows.
    pub limit: f64,
}

impl ClosedForm {
    pub fn is_valid(&self) -> bool {
        self.validity.contains(self.family.n())
    }
}

/// Closed-form `λ2` for the extremal families (doublewheel, quadrangulation,
/// fan, `K_h`-minor-free bipartite).
///
/// The formula value is returned even outside the validity range; check
/// [`ClosedForm::is_valid`]. The quadrangulation formula is only valid from
/// `n = 6`: at `n = 4` an apex mode drops below it.
pub fn predicted_lambda2(spec: &FamilySpec) -> Result<ClosedForm> {
    let (lambda2, validity, limit) = match *spec {
        FamilySpec::Doublewheel(n) => (
            4.0 - 2.0 * (2.0 * PI / n as f64).cos(),
            Validity { min_n: 4, even_only: true },
            2.0,
        ),
        FamilySpec::Quadrangulation(n) => (
            3.0 - 2.0 * (2.0 * PI / n as f64).cos(),
            Validity { min_n: 6, even_only: true },
            1.0,
        ),
        FamilySpec::Fan(n) => (
            3.0 - 2.0 * (PI / n as f64).cos(),
            Validity { min_n: 2, even_only: false },
            1.0,
        ),
        FamilySpec::KhExtremal { h, .. } => {
            if h < 4 {
                return Err(param_error(format!("kh_extremal needs h >= 4, got {h}")));
            }
            (
                (h - 2) as f64,
                Validity { min_n: 2 * h - 4, even_only: false },
                (h - 2) as f64,
            )
        }
        other => return Err(Error::NoClosedForm(other.name().to_string())),
    };
    if spec.n() == 0 {
        return Err(param_error("n must be positive"));
    }
    Ok(ClosedForm {
        family: *spec,
        lambda2_predicted: lambda2,
        full_spectrum_predicted: predicted_full_spectrum(spec).ok(),
        validity,
        limit,
    })
}

/// Full Laplacian spectrum (ascending) for doublewheel, fan, cycle and path.
pub fn predicted_full_spectrum(spec: &FamilySpec) -> Result<Vec<f64>> {
    let mut values = match *spec {
        FamilySpec::Doublewheel(n) => {
            if n < 4 || n % 2 != 0 {
                return Err(param_error(format!("doublewheel needs even n >= 4, got {n}")));
            }
            let nf = n as f64;
            let mut v = vec![0.0, 6.0, nf, nf + 2.0];
            for k in 1..n / 2 {
                let x = 4.0 - 2.0 * (2.0 * PI * k as f64 / nf).cos();
                v.extend([x, x]);
            }
            v
        }
        FamilySpec::Fan(n) => {
            if n < 2 {
                return Err(param_error(format!("fan needs n >= 2, got {n}")));
            }
            let nf = n as f64;
            let mut v = vec![0.0, nf + 1.0];
            v.extend((1..n).map(|k| 3.0 - 2.0 * (PI * k as f64 / nf).cos()));
            v
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(param_error(format!("cycle needs n >= 3, got {n}")));
            }
            (0..n)
                .map(|k| 2.0 - 2.0 * (2.0 * PI * k as f64 / n as f64).cos())
                .collect()
        }
        FamilySpec::Path(n) => {
            if n < 1 {
                return Err(param_error("path needs n >= 1"));
            }
            (0..n)
                .map(|k| 2.0 - 2.0 * (PI * k as f64 / n as f64).cos())
                .collect()
        }
        other => return Err(Error::NoClosedForm(other.name().to_string())),
    };
    values.sort_by(f64::total_cmp);
    // cos(π/2) and friends leave ~1e-16 noise around exact zero
    if let Some(first) = values.first_mut() {
        *first = 0.0;
    }
    Ok(values)
}

/// An eigenvector together with its eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub vector: Vec<f64>,
    pub value: f64,
}

/// The rim-supported eigenpairs of `quadrangulation(n)`: for each
/// `k = 1..n/2-1` the sine and cosine waves `sin(2πik/n)`, `cos(2πik/n)`
/// on rim vertex `i` (apexes zero), with eigenvalue `3 - 2cos(2πk/n)`.
///
/// Rim vertex `i` here is rim label `i + 1` in 1-based numbering; the shift
/// is a phase change inside each eigenspace.
pub fn quadrangulation_trig_eigenpairs(n: usize) -> Result<Vec<EigenPair>> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(param_error(format!("quadrangulation needs even n >= 4, got {n}")));
    }
    let nf = n as f64;
    let mut pairs = Vec::with_capacity(n - 2);
    for k in 1..n / 2 {
        let value = 3.0 - 2.0 * (2.0 * PI * k as f64 / nf).cos();
        for wave in [f64::sin, f64::cos] {
            let mut vector: Vec<f64> = (0..n)
                .map(|i| wave(2.0 * PI * ((i + 1) * k) as f64 / nf))
                .collect();
            vector.extend([0.0, 0.0]);
            pairs.push(EigenPair { vector, value });
        }
    }
    Ok(pairs)
}

/// The two alternating eigenpairs of `quadrangulation(n)`.
///
/// With `±1` alternating on the rim and `a`, `-a` on the two apexes, the rim
/// equation gives `λ = 5 - a` and the apex equation `(n/2) a - n/2 = λ a`,
/// so `a² + (n/2 - 5) a - n/2 = 0`. Both roots are real for every `n`.
pub fn quadrangulation_apex_eigenpairs(n: usize) -> Result<[EigenPair; 2]> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(param_error(format!("quadrangulation needs even n >= 4, got {n}")));
    }
    let half = n as f64 / 2.0;
    let b = half - 5.0;
    let disc = (b * b + 4.0 * half).sqrt();
    let roots = [(-b + disc) / 2.0, (-b - disc) / 2.0];
    Ok(roots.map(|a| {
        let mut vector: Vec<f64> = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        vector.extend([a, -a]);
        EigenPair { vector, value: 5.0 - a }
    }))
}
