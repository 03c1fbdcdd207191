//! Kodaira fiber types, their affine Dynkin dual graphs, and recognition of a
//! fiber type from the dual graph of a cluster of curves.
//!
//! A cluster is described by its Gram matrix. Complete fibers are exactly the
//! connected negative semi-definite configurations with a one-dimensional
//! kernel; the primitive kernel vector gives the multiplicities. Clusters that
//! are negative definite are proper subconfigurations of a fiber, and are
//! reported together with the affine diagrams that contain them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use petgraph::algo::{connected_components, is_isomorphic_matching, subgraph_isomorphisms_iter};
use petgraph::graph::UnGraph;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{inertia, kernel_basis, mat_vec, primitive_integer};

/// Largest number of components a fiber can have on a surface of Picard
/// number 16: `m - 1 ≤ 14`.
pub const MAX_FIBER_COMPONENTS: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiberError {
    #[error("empty cluster")]
    Empty,
    #[error("pairing matrix is not square and symmetric")]
    NotSymmetric,
    #[error("component `{name}` has self-intersection {value}, expected -2")]
    BadSelfIntersection { name: String, value: i64 },
    #[error("components `{0}` and `{1}` have negative intersection")]
    NegativeIntersection(String, String),
    #[error("cluster is not connected")]
    NotConnected,
    #[error("kernel of the pairing matrix has dimension {0}, expected 1")]
    KernelDimension(usize),
    #[error("kernel vector is not positive")]
    NotPositive,
    #[error("cluster does not embed in any affine Dynkin diagram with at most {MAX_FIBER_COMPONENTS} vertices")]
    NotEmbeddable,
    #[error("unknown Kodaira type `{0}`")]
    UnknownType(String),
}

/// A Kodaira fiber type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    /// `I_n`; `I_0` is a smooth fiber.
    I(u32),
    /// `I_n*`.
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

/// Class of the j-invariant at a singular fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JClass {
    Zero,
    J1728,
    Infinity,
    Finite,
}

/// Counts of special components, simple special components and simple
/// ordinary components of a fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpecialProfile {
    pub specials: u32,
    pub simple_specials: u32,
    pub simple_ordinaries: u32,
}

const fn sp(specials: u32, simple_specials: u32, simple_ordinaries: u32) -> SpecialProfile {
    SpecialProfile { specials, simple_specials, simple_ordinaries }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberTypeInfo {
    pub euler: u32,
    /// Number of irreducible components (vertices of the dual graph).
    pub components: u32,
    /// The component count as printed in the classical invariants table,
    /// which uses `ν+1` for `I_ν` and `1` for `I_0*`.
    pub table_components: u32,
    pub j_class: JClass,
    /// Allowed special/simple-component counts on the six-line K3; empty if
    /// the type cannot occur there.
    pub profiles: Vec<SpecialProfile>,
}

impl KodairaType {
    pub fn euler(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    pub fn components(self) -> u32 {
        match self {
            KodairaType::I(0) | KodairaType::I(1) => 1,
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }

    /// `m - 1`, the contribution to the Shioda–Tate sum.
    pub fn rank_contribution(self) -> u32 {
        self.components() - 1
    }

    pub fn table_components(self) -> u32 {
        match self {
            KodairaType::I(0) => 1,
            KodairaType::I(n) => n + 1,
            KodairaType::IStar(0) => 1,
            other => other.components(),
        }
    }

    pub fn j_class(self) -> JClass {
        match self {
            KodairaType::I(0) | KodairaType::IStar(0) => JClass::Finite,
            KodairaType::I(_) | KodairaType::IStar(_) => JClass::Infinity,
            KodairaType::II | KodairaType::IV | KodairaType::IVStar | KodairaType::IIStar => JClass::Zero,
            KodairaType::III | KodairaType::IIIStar => JClass::J1728,
        }
    }

    /// Special-component data for the types that occur on the six-line K3.
    pub fn special_profiles(self) -> Vec<SpecialProfile> {
        match self {
            KodairaType::I(1) | KodairaType::II => vec![sp(0, 0, 0)],
            KodairaType::I(2) | KodairaType::III => vec![sp(0, 0, 2), sp(1, 1, 1)],
            KodairaType::I(n @ (4 | 6 | 8 | 10)) => vec![sp(n / 2, n / 2, n / 2)],
            KodairaType::IStar(n @ (0 | 2 | 4 | 6)) => vec![sp(n / 2 + 1, 0, 4)],
            KodairaType::IVStar => vec![sp(4, 3, 0)],
            KodairaType::IIIStar => vec![sp(3, 0, 2)],
            KodairaType::IIStar => vec![sp(4, 0, 1)],
            _ => Vec::new(),
        }
    }

    pub fn occurs_on_x(self) -> bool {
        !self.special_profiles().is_empty()
    }

    /// Types with at most two components (`I_1`, `I_2`, `II`, `III`).
    pub fn is_small(self) -> bool {
        matches!(self, KodairaType::I(1) | KodairaType::I(2) | KodairaType::II | KodairaType::III)
    }

    pub fn info(self) -> FiberTypeInfo {
        FiberTypeInfo {
            euler: self.euler(),
            components: self.components(),
            table_components: self.table_components(),
            j_class: self.j_class(),
            profiles: self.special_profiles(),
        }
    }

    /// The affine Dynkin diagram of a reducible fiber.
    pub fn diagram(self) -> Option<AffineDiagram> {
        match self {
            KodairaType::I(n) if n >= 2 => Some(AffineDiagram::A(n - 1)),
            KodairaType::III => Some(AffineDiagram::A(1)),
            KodairaType::IV => Some(AffineDiagram::A(2)),
            KodairaType::IStar(n) => Some(AffineDiagram::D(n + 4)),
            KodairaType::IVStar => Some(AffineDiagram::E6),
            KodairaType::IIIStar => Some(AffineDiagram::E7),
            KodairaType::IIStar => Some(AffineDiagram::E8),
            _ => None,
        }
    }

    /// The types that occur on the six-line K3.
    pub fn on_x() -> Vec<KodairaType> {
        let mut v = vec![KodairaType::I(1), KodairaType::I(2), KodairaType::II, KodairaType::III];
        v.extend([4, 6, 8, 10].map(KodairaType::I));
        v.extend([0, 2, 4, 6].map(KodairaType::IStar));
        v.extend([KodairaType::IVStar, KodairaType::IIIStar, KodairaType::IIStar]);
        v
    }
}

/// Table lookup for a Kodaira type.
pub fn type_info(t: KodairaType) -> FiberTypeInfo {
    t.info()
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I_{n}"),
            KodairaType::IStar(n) => write!(f, "I_{n}*"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IVStar => f.write_str("IV*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IIStar => f.write_str("II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = FiberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FiberError::UnknownType(s.to_string());
        let t = match s {
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                let rest = s.strip_prefix("I_").or_else(|| s.strip_prefix('I')).ok_or_else(bad)?;
                match rest.strip_suffix('*') {
                    Some(n) => KodairaType::IStar(n.parse().map_err(|_| bad())?),
                    None => KodairaType::I(rest.parse().map_err(|_| bad())?),
                }
            }
        };
        Ok(t)
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A fiber type as far as the lattice can tell: `I_2`/`III` and `I_3`/`IV`
/// share their dual graphs, `I_1`/`II` are both irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberLabel {
    Type(KodairaType),
    I1OrII,
    I2OrIII,
    I3OrIV,
}

impl FiberLabel {
    pub fn candidates(self) -> Vec<KodairaType> {
        match self {
            FiberLabel::Type(t) => vec![t],
            FiberLabel::I1OrII => vec![KodairaType::I(1), KodairaType::II],
            FiberLabel::I2OrIII => vec![KodairaType::I(2), KodairaType::III],
            FiberLabel::I3OrIV => vec![KodairaType::I(3), KodairaType::IV],
        }
    }

    pub fn components(self) -> u32 {
        self.candidates()[0].components()
    }

    pub fn rank_contribution(self) -> u32 {
        self.components() - 1
    }

    pub fn exact(self) -> Option<KodairaType> {
        match self {
            FiberLabel::Type(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_small(self) -> bool {
        self.candidates().iter().all(|t| t.is_small())
    }
}

impl fmt::Display for FiberLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberLabel::Type(t) => write!(f, "{t}"),
            FiberLabel::I1OrII => f.write_str("I_1/II"),
            FiberLabel::I2OrIII => f.write_str("I_2/III"),
            FiberLabel::I3OrIV => f.write_str("I_3/IV"),
        }
    }
}

impl Serialize for FiberLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Affine Dynkin diagrams `Ã_n (n ≥ 1)`, `D̃_n (n ≥ 4)`, `Ẽ_6`, `Ẽ_7`, `Ẽ_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineDiagram {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl AffineDiagram {
    pub fn vertex_count(self) -> usize {
        match self {
            AffineDiagram::A(n) | AffineDiagram::D(n) => n as usize + 1,
            AffineDiagram::E6 => 7,
            AffineDiagram::E7 => 8,
            AffineDiagram::E8 => 9,
        }
    }

    pub fn label(self) -> FiberLabel {
        match self {
            AffineDiagram::A(1) => FiberLabel::I2OrIII,
            AffineDiagram::A(2) => FiberLabel::I3OrIV,
            AffineDiagram::A(n) => FiberLabel::Type(KodairaType::I(n + 1)),
            AffineDiagram::D(n) => FiberLabel::Type(KodairaType::IStar(n - 4)),
            AffineDiagram::E6 => FiberLabel::Type(KodairaType::IVStar),
            AffineDiagram::E7 => FiberLabel::Type(KodairaType::IIIStar),
            AffineDiagram::E8 => FiberLabel::Type(KodairaType::IIStar),
        }
    }

    /// Edges `(u, v, weight)` of the diagram.
    pub fn edges(self) -> Vec<(usize, usize, i64)> {
        match self {
            AffineDiagram::A(1) => vec![(0, 1, 2)],
            AffineDiagram::A(n) => {
                let n = n as usize + 1;
                (0..n).map(|k| (k, (k + 1) % n, 1)).collect()
            }
            AffineDiagram::D(n) => {
                // leaves 0,1 on chain vertex 2; chain 2..=n-2; leaves n-1, n on n-2
                let n = n as usize;
                let mut e = vec![(0, 2, 1), (1, 2, 1)];
                e.extend((2..n - 2).map(|k| (k, k + 1, 1)));
                e.extend([(n - 1, n - 2, 1), (n, n - 2, 1)]);
                e
            }
            AffineDiagram::E6 => star(&[2, 2, 2]),
            AffineDiagram::E7 => star(&[1, 3, 3]),
            AffineDiagram::E8 => star(&[1, 2, 5]),
        }
    }

    /// Fiber multiplicities in the vertex order of [`AffineDiagram::edges`].
    pub fn multiplicities(self) -> Vec<i64> {
        match self {
            AffineDiagram::A(n) => vec![1; n as usize + 1],
            AffineDiagram::D(n) => {
                let n = n as usize;
                let mut m = vec![2; n + 1];
                m[0] = 1;
                m[1] = 1;
                m[n - 1] = 1;
                m[n] = 1;
                m
            }
            AffineDiagram::E6 => vec![3, 2, 1, 2, 1, 2, 1],
            AffineDiagram::E7 => vec![4, 2, 3, 2, 1, 3, 2, 1],
            AffineDiagram::E8 => vec![6, 3, 4, 2, 5, 4, 3, 2, 1],
        }
    }

    pub fn gram(self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut g = vec![vec![0; n]; n];
        for (k, row) in g.iter_mut().enumerate() {
            row[k] = -2;
        }
        for (u, v, w) in self.edges() {
            g[u][v] = w;
            g[v][u] = w;
        }
        g
    }

    /// All affine diagrams with at most `max_vertices` vertices.
    pub fn all_up_to(max_vertices: usize) -> Vec<AffineDiagram> {
        let mut v = Vec::new();
        for n in 1..max_vertices as u32 {
            v.push(AffineDiagram::A(n));
        }
        for n in 4..max_vertices as u32 {
            v.push(AffineDiagram::D(n));
        }
        for e in [AffineDiagram::E6, AffineDiagram::E7, AffineDiagram::E8] {
            if e.vertex_count() <= max_vertices {
                v.push(e);
            }
        }
        v
    }
}

impl fmt::Display for AffineDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineDiagram::A(n) => write!(f, "A~{n}"),
            AffineDiagram::D(n) => write!(f, "D~{n}"),
            AffineDiagram::E6 => f.write_str("E~6"),
            AffineDiagram::E7 => f.write_str("E~7"),
            AffineDiagram::E8 => f.write_str("E~8"),
        }
    }
}

impl Serialize for AffineDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Center 0 with arms of the given lengths, numbered arm by arm outward.
fn star(arms: &[usize]) -> Vec<(usize, usize, i64)> {
    let mut e = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            e.push((prev, next, 1));
            prev = next;
            next += 1;
        }
    }
    e
}

/// The dual graph of a cluster of curves, given by their pairing matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    names: Vec<String>,
    gram: Vec<Vec<i64>>,
}

impl DualGraph {
    pub fn new(names: Vec<String>, gram: Vec<Vec<i64>>) -> Result<DualGraph, FiberError> {
        let n = names.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(FiberError::NotSymmetric);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(FiberError::NotSymmetric);
                }
            }
        }
        Ok(DualGraph { names, gram })
    }

    /// An unnamed graph; vertices are called `v0, v1, …`.
    pub fn from_gram(gram: Vec<Vec<i64>>) -> Result<DualGraph, FiberError> {
        let names = (0..gram.len()).map(|k| format!("v{k}")).collect();
        DualGraph::new(names, gram)
    }

    pub fn of_diagram(d: AffineDiagram) -> DualGraph {
        DualGraph::from_gram(d.gram()).expect("diagram gram is symmetric")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn to_graph(&self) -> UnGraph<(), i64> {
        weighted_graph(&self.gram)
    }

    pub fn is_connected(&self) -> bool {
        self.len() <= 1 || connected_components(&self.to_graph()) == 1
    }

    /// Induced subgraph on the given vertices.
    pub fn subgraph(&self, vertices: &[usize]) -> DualGraph {
        let names = vertices.iter().map(|&v| self.names[v].clone()).collect();
        let gram = vertices
            .iter()
            .map(|&a| vertices.iter().map(|&b| self.gram[a][b]).collect())
            .collect();
        DualGraph { names, gram }
    }

    fn check_simple_curves(&self) -> Result<(), FiberError> {
        let n = self.len();
        for i in 0..n {
            if self.gram[i][i] != -2 {
                return Err(FiberError::BadSelfIntersection {
                    name: self.names[i].clone(),
                    value: self.gram[i][i],
                });
            }
            for j in 0..i {
                if self.gram[i][j] < 0 {
                    return Err(FiberError::NegativeIntersection(
                        self.names[j].clone(),
                        self.names[i].clone(),
                    ));
                }
            }
        }
        Ok(())
    }
}

fn weighted_graph(gram: &[Vec<i64>]) -> UnGraph<(), i64> {
    let n = gram.len();
    let mut g = UnGraph::with_capacity(n, n);
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for i in 0..n {
        for j in i + 1..n {
            if gram[i][j] != 0 {
                g.add_edge(nodes[i], nodes[j], gram[i][j]);
            }
        }
    }
    g
}

/// The primitive positive kernel vector of the pairing matrix.
pub fn null_vector(g: &DualGraph) -> Result<Vec<i64>, FiberError> {
    let kernel = kernel_basis(g.gram());
    if kernel.len() != 1 {
        return Err(FiberError::KernelDimension(kernel.len()));
    }
    let m = primitive_integer(&kernel[0]);
    if m.iter().any(|&x| x <= 0) {
        return Err(FiberError::NotPositive);
    }
    debug_assert!(mat_vec(g.gram(), &m).iter().all(|&x| x == 0));
    Ok(m)
}

/// A way of completing a partial cluster to a full fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Completion {
    pub diagram: AffineDiagram,
    pub label: FiberLabel,
    /// Number of components the cluster is missing.
    pub added: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecognitionResult {
    Exact { kodaira: KodairaType, multiplicities: Vec<i64> },
    AmbiguousI2OrIII { multiplicities: Vec<i64> },
    AmbiguousI3OrIV { multiplicities: Vec<i64> },
    AmbiguousI1OrII,
    /// Sorted by number of added components.
    Partial { completions: Vec<Completion> },
}

impl RecognitionResult {
    /// The fiber label of a complete cluster.
    pub fn label(&self) -> Option<FiberLabel> {
        match self {
            RecognitionResult::Exact { kodaira, .. } => Some(FiberLabel::Type(*kodaira)),
            RecognitionResult::AmbiguousI2OrIII { .. } => Some(FiberLabel::I2OrIII),
            RecognitionResult::AmbiguousI3OrIV { .. } => Some(FiberLabel::I3OrIV),
            RecognitionResult::AmbiguousI1OrII => Some(FiberLabel::I1OrII),
            RecognitionResult::Partial { .. } => None,
        }
    }

    pub fn multiplicities(&self) -> Option<&[i64]> {
        match self {
            RecognitionResult::Exact { multiplicities, .. }
            | RecognitionResult::AmbiguousI2OrIII { multiplicities }
            | RecognitionResult::AmbiguousI3OrIV { multiplicities } => Some(multiplicities),
            RecognitionResult::AmbiguousI1OrII => Some(&[1]),
            RecognitionResult::Partial { .. } => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        !matches!(self, RecognitionResult::Partial { .. })
    }

    /// Completions with the fewest added components.
    pub fn minimal_completions(&self) -> Vec<&Completion> {
        match self {
            RecognitionResult::Partial { completions } => {
                let best = completions.iter().map(|c| c.added).min();
                completions.iter().filter(|c| Some(c.added) == best).collect()
            }
            _ => Vec::new(),
        }
    }
}

/// Identifies the fiber type of a connected cluster.
pub fn recognize(g: &DualGraph) -> Result<RecognitionResult, FiberError> {
    if g.is_empty() {
        return Err(FiberError::Empty);
    }
    if g.len() == 1 && g.gram()[0][0] == 0 {
        return Ok(RecognitionResult::AmbiguousI1OrII);
    }
    g.check_simple_curves()?;
    if !g.is_connected() {
        return Err(FiberError::NotConnected);
    }
    let n = g.len();
    let max_off = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).map(|(i, j)| g.gram()[i][j]).max();
    match max_off {
        Some(w) if w > 2 => return Err(FiberError::NotEmbeddable),
        Some(2) if n == 2 => {
            return Ok(RecognitionResult::AmbiguousI2OrIII { multiplicities: vec![1, 1] })
        }
        Some(2) => return Err(FiberError::NotEmbeddable),
        _ => {}
    }
    let inert = inertia(g.gram());
    if inert.positive > 0 {
        return Err(FiberError::NotEmbeddable);
    }
    match inert.zero {
        0 => {
            let completions = completions(g, MAX_FIBER_COMPONENTS);
            if completions.is_empty() {
                Err(FiberError::NotEmbeddable)
            } else {
                Ok(RecognitionResult::Partial { completions })
            }
        }
        1 => {
            let multiplicities = null_vector(g)?;
            let diagram = identify_affine(g).ok_or(FiberError::NotEmbeddable)?;
            Ok(match diagram.label() {
                FiberLabel::Type(kodaira) => RecognitionResult::Exact { kodaira, multiplicities },
                FiberLabel::I2OrIII => RecognitionResult::AmbiguousI2OrIII { multiplicities },
                FiberLabel::I3OrIV => RecognitionResult::AmbiguousI3OrIV { multiplicities },
                FiberLabel::I1OrII => RecognitionResult::AmbiguousI1OrII,
            })
        }
        _ => Err(FiberError::NotEmbeddable),
    }
}

/// The affine diagram isomorphic to `g`, if any.
pub fn identify_affine(g: &DualGraph) -> Option<AffineDiagram> {
    let target = g.to_graph();
    AffineDiagram::all_up_to(g.len())
        .into_iter()
        .filter(|d| d.vertex_count() == g.len())
        .find(|d| {
            is_isomorphic_matching(&weighted_graph(&d.gram()), &target, |_, _| true, |a, b| a == b)
        })
}

/// All induced embeddings of `g` into the diagram, as vertex maps
/// `g`-vertex → diagram vertex.
pub fn embeddings(g: &DualGraph, d: AffineDiagram) -> Vec<Vec<usize>> {
    let small = g.to_graph();
    let big = weighted_graph(&d.gram());
    let mut nm = |_: &(), _: &()| true;
    let mut em = |a: &i64, b: &i64| a == b;
    let (a, b) = (&small, &big);
    let found: Vec<Vec<usize>> = subgraph_isomorphisms_iter(&a, &b, &mut nm, &mut em)
        .map(|it| it.collect())
        .unwrap_or_default();
    found
}

/// Affine diagrams with at most `max_vertices` vertices that contain the
/// cluster as an induced subgraph, sorted by the number of added vertices.
pub fn completions(g: &DualGraph, max_vertices: usize) -> Vec<Completion> {
    let mut out: Vec<Completion> = AffineDiagram::all_up_to(max_vertices)
        .into_iter()
        .filter(|d| d.vertex_count() > g.len())
        .filter(|d| !embeddings(g, *d).is_empty())
        .map(|d| Completion { diagram: d, label: d.label(), added: d.vertex_count() - g.len() })
        .collect();
    out.sort_by_key(|c| (c.added, c.diagram));
    out
}

/// Labellings of the vertices of a configuration as special (`true`) or
/// ordinary (`false`) compatible with the intersection rules on the six-line
/// K3: special curves are pairwise disjoint, distinct ordinary curves meet
/// evenly, and an ordinary curve meets the special curves of the fiber at
/// most twice in total (it meets the branch curve exactly twice).
///
/// Odd edges force opposite labels, so each connected component of the odd
/// edges admits two labellings.
pub fn valid_labellings(gram: &[Vec<i64>]) -> Vec<Vec<bool>> {
    let n = gram.len();
    let mut comp = vec![usize::MAX; n];
    let mut parity = vec![false; n];
    let mut roots = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let c = roots.len();
        roots.push(s);
        comp[s] = c;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if v == u || gram[u][v] % 2 == 0 {
                    continue;
                }
                if comp[v] == usize::MAX {
                    comp[v] = c;
                    parity[v] = !parity[u];
                    stack.push(v);
                } else if parity[v] == parity[u] {
                    return Vec::new();
                }
            }
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << roots.len() {
        let lab: Vec<bool> = (0..n).map(|v| parity[v] ^ (mask >> comp[v] & 1 == 1)).collect();
        if labelling_is_valid(gram, &lab) {
            out.push(lab);
        }
    }
    out
}

/// Checks the three labelling rules directly.
pub fn labelling_is_valid(gram: &[Vec<i64>], special: &[bool]) -> bool {
    let n = gram.len();
    for u in 0..n {
        for v in 0..n {
            if u == v || gram[u][v] == 0 {
                continue;
            }
            if special[u] && special[v] {
                return false;
            }
            if !special[u] && !special[v] && gram[u][v] % 2 != 0 {
                return false;
            }
        }
    }
    contact_deficits(gram, special).iter().all(|d| d.is_none_or(|d| d >= 0))
}

/// For every ordinary vertex, `2` minus its intersection with the special
/// vertices: the number of intersections with the branch curve left for
/// special curves outside the configuration. `None` for special vertices.
pub fn contact_deficits(gram: &[Vec<i64>], special: &[bool]) -> Vec<Option<i64>> {
    (0..gram.len())
        .map(|u| {
            (!special[u]).then(|| {
                2 - (0..gram.len()).filter(|&v| v != u && special[v]).map(|v| gram[u][v]).sum::<i64>()
            })
        })
        .collect()
}

fn profile_of(special: &[bool], multiplicities: &[i64]) -> SpecialProfile {
    let mut p = sp(0, 0, 0);
    for (&s, &m) in special.iter().zip(multiplicities) {
        if s {
            p.specials += 1;
        }
        if m == 1 {
            if s {
                p.simple_specials += 1;
            } else {
                p.simple_ordinaries += 1;
            }
        }
    }
    p
}

/// A reducible fiber type together with a valid special/ordinary labelling
/// of its components, reduced to the data the classification needs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabelledFiber {
    pub diagram: AffineDiagram,
    pub profile: SpecialProfile,
    /// `(multiplicity, deficit)` of each ordinary component, sorted.
    pub ordinary: Vec<(i64, i64)>,
}

impl LabelledFiber {
    pub fn from_labelling(diagram: AffineDiagram, special: &[bool]) -> LabelledFiber {
        let mult = diagram.multiplicities();
        let deficits = contact_deficits(&diagram.gram(), special);
        let mut ordinary: Vec<(i64, i64)> =
            deficits.iter().zip(&mult).filter_map(|(d, m)| d.map(|d| (*m, d))).collect();
        ordinary.sort();
        LabelledFiber { diagram, profile: profile_of(special, &mult), ordinary }
    }

    /// Total deficit of the ordinary components.
    pub fn deficit_total(&self) -> i64 {
        self.ordinary.iter().map(|(_, d)| d).sum()
    }

    /// Whether some simple ordinary component still meets the branch curve
    /// outside the fiber, as the zero section would have to.
    pub fn has_simple_ordinary_with_deficit(&self) -> bool {
        self.ordinary.iter().any(|&(m, d)| m == 1 && d > 0)
    }
}

/// All labelled forms of a fiber type, one per distinct reduced data.
pub fn labelled_forms(t: KodairaType) -> Vec<LabelledFiber> {
    let Some(d) = t.diagram() else { return Vec::new() };
    let forms: BTreeSet<LabelledFiber> = valid_labellings(&d.gram())
        .iter()
        .map(|lab| LabelledFiber::from_labelling(d, lab))
        .collect();
    forms.into_iter().collect()
}

/// Profiles realised by valid labellings of the type's dual graph.
pub fn derived_profiles(t: KodairaType) -> Vec<SpecialProfile> {
    if matches!(t, KodairaType::I(1) | KodairaType::II) {
        return vec![sp(0, 0, 0)];
    }
    let set: BTreeSet<SpecialProfile> = labelled_forms(t).into_iter().map(|f| f.profile).collect();
    set.into_iter().collect()
}

/// A component of a fiber cluster as seen by [`special_count_consistent`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentTag {
    pub special: bool,
    pub multiplicity: i64,
}

/// Whether the special/ordinary make-up of a complete fiber agrees with the
/// allowed profiles for its type.
pub fn special_count_consistent(t: KodairaType, components: &[ComponentTag]) -> bool {
    if matches!(t, KodairaType::I(1) | KodairaType::II) {
        return components.len() == 1 && !components[0].special;
    }
    if components.len() != t.components() as usize {
        return false;
    }
    let special: Vec<bool> = components.iter().map(|c| c.special).collect();
    let mult: Vec<i64> = components.iter().map(|c| c.multiplicity).collect();
    t.special_profiles().contains(&profile_of(&special, &mult))
}

/// A completion of a labelled cluster into a labelled affine diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledCompletion {
    pub diagram: AffineDiagram,
    pub label: FiberLabel,
    /// Diagram vertex of each cluster vertex.
    pub mapping: Vec<usize>,
    /// Labelling of all diagram vertices.
    pub special: Vec<bool>,
    pub multiplicities: Vec<i64>,
    /// `(multiplicity, deficit)` of each added component, sorted.
    pub added: Vec<(i64, i64)>,
}

impl LabelledCompletion {
    pub fn added_count(&self) -> usize {
        self.added.len()
    }

    /// Multiplicity of each cluster vertex in the completed fiber.
    pub fn cluster_multiplicities(&self) -> Vec<i64> {
        self.mapping.iter().map(|&v| self.multiplicities[v]).collect()
    }
}

/// Completions of a labelled cluster in which every added component is
/// ordinary, the labelling is valid, and the result is a fiber type allowed
/// on the six-line K3 with an allowed profile. Completions that differ only
/// by a symmetry of the diagram are reported once.
pub fn labelled_completions(
    g: &DualGraph,
    special: &[bool],
    max_vertices: usize,
) -> Vec<LabelledCompletion> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for d in AffineDiagram::all_up_to(max_vertices) {
        if d.vertex_count() <= g.len() {
            continue;
        }
        let types: Vec<KodairaType> = d.label().candidates();
        if !types.iter().any(|t| t.occurs_on_x()) {
            continue;
        }
        let gram = d.gram();
        let mult = d.multiplicities();
        let labellings = valid_labellings(&gram);
        for map in embeddings(g, d) {
            for lab in &labellings {
                if map.iter().zip(special).any(|(&v, &s)| lab[v] != s) {
                    continue;
                }
                let in_cluster: BTreeSet<usize> = map.iter().copied().collect();
                let added_vertices: Vec<usize> =
                    (0..gram.len()).filter(|v| !in_cluster.contains(v)).collect();
                if added_vertices.iter().any(|&v| lab[v]) {
                    continue;
                }
                let profile = profile_of(lab, &mult);
                if !types.iter().any(|t| t.special_profiles().contains(&profile)) {
                    continue;
                }
                let deficits = contact_deficits(&gram, lab);
                let mut added: Vec<(i64, i64)> = added_vertices
                    .iter()
                    .map(|&v| (mult[v], deficits[v].expect("added vertices are ordinary")))
                    .collect();
                added.sort();
                let cluster_mult: Vec<i64> = map.iter().map(|&v| mult[v]).collect();
                if !seen.insert((d, added.clone(), cluster_mult)) {
                    continue;
                }
                out.push(LabelledCompletion {
                    diagram: d,
                    label: d.label(),
                    mapping: map.clone(),
                    special: lab.clone(),
                    multiplicities: mult.clone(),
                    added,
                });
            }
        }
    }
    out.sort_by_key(|c| (c.added.len(), c.diagram));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> DualGraph {
        DualGraph::of_diagram(AffineDiagram::A(n as u32 - 1))
    }

    fn path(n: usize) -> DualGraph {
        let mut g = vec![vec![0; n]; n];
        for k in 0..n {
            g[k][k] = -2;
            if k + 1 < n {
                g[k][k + 1] = 1;
                g[k + 1][k] = 1;
            }
        }
        DualGraph::from_gram(g).unwrap()
    }

    #[test]
    fn table_rows() {
        assert_eq!(type_info(KodairaType::IStar(0)).euler, 6);
        assert_eq!(type_info(KodairaType::IStar(0)).components, 5);
        assert_eq!(type_info(KodairaType::IStar(0)).table_components, 1);
        assert_eq!(type_info(KodairaType::IIStar).euler, 10);
        assert_eq!(type_info(KodairaType::IIStar).components, 9);
        assert_eq!(type_info(KodairaType::I(2)).table_components, 3);
        assert_eq!(type_info(KodairaType::I(2)).components, 2);
        for n in 1..=8 {
            assert_eq!(KodairaType::IStar(n).euler(), 6 + n);
            assert_eq!(KodairaType::IStar(n).components(), n + 5);
            assert_eq!(KodairaType::IStar(n).table_components(), n + 5);
            assert_eq!(KodairaType::I(n).table_components(), n + 1);
        }
        assert_eq!(KodairaType::III.j_class(), JClass::J1728);
        assert_eq!(KodairaType::IStar(0).j_class(), JClass::Finite);
        assert_eq!(KodairaType::I(3).j_class(), JClass::Infinity);
    }

    #[test]
    fn diagram_vertex_counts_match_components() {
        for t in KodairaType::on_x().into_iter().chain([KodairaType::IStar(9), KodairaType::I(13)]) {
            if let Some(d) = t.diagram() {
                assert_eq!(d.vertex_count() as u32, t.components(), "{t}");
                assert_eq!(d.multiplicities().len(), d.vertex_count());
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for t in KodairaType::on_x() {
            assert_eq!(t.to_string().parse::<KodairaType>().unwrap(), t);
        }
        assert_eq!("I10".parse::<KodairaType>().unwrap(), KodairaType::I(10));
        assert_eq!("I_2*".parse::<KodairaType>().unwrap(), KodairaType::IStar(2));
        assert!("V".parse::<KodairaType>().is_err());
    }

    #[test]
    fn null_vector_examples() {
        assert_eq!(null_vector(&cycle(4)).unwrap(), vec![1, 1, 1, 1]);
        let d4 = DualGraph::of_diagram(AffineDiagram::D(4));
        assert_eq!(null_vector(&d4).unwrap(), vec![1, 1, 2, 1, 1]);
        assert!(matches!(null_vector(&path(3)), Err(FiberError::KernelDimension(0))));
    }

    #[test]
    fn recognizes_cycles() {
        for n in 4..=12 {
            assert_eq!(
                recognize(&cycle(n)).unwrap(),
                RecognitionResult::Exact { kodaira: KodairaType::I(n as u32), multiplicities: vec![1; n] }
            );
        }
        assert!(matches!(recognize(&cycle(3)).unwrap(), RecognitionResult::AmbiguousI3OrIV { .. }));
        assert_eq!(
            recognize(&cycle(2)).unwrap(),
            RecognitionResult::AmbiguousI2OrIII { multiplicities: vec![1, 1] }
        );
    }

    #[test]
    fn single_vertices() {
        let zero = DualGraph::from_gram(vec![vec![0]]).unwrap();
        assert_eq!(recognize(&zero).unwrap(), RecognitionResult::AmbiguousI1OrII);
        let rational = DualGraph::from_gram(vec![vec![-2]]).unwrap();
        let r = recognize(&rational).unwrap();
        let min = r.minimal_completions();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].label, FiberLabel::I2OrIII);
    }

    #[test]
    fn star_with_three_ends_is_partial_d4() {
        let mut g = vec![vec![0; 4]; 4];
        for k in 0..4 {
            g[k][k] = -2;
        }
        for k in 1..4 {
            g[0][k] = 1;
            g[k][0] = 1;
        }
        let r = recognize(&DualGraph::from_gram(g).unwrap()).unwrap();
        let min = r.minimal_completions();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].label, FiberLabel::Type(KodairaType::IStar(0)));
        assert_eq!(min[0].added, 1);
    }

    #[test]
    fn rejects_non_fibers() {
        // two disjoint vertices
        let g = DualGraph::from_gram(vec![vec![-2, 0], vec![0, -2]]).unwrap();
        assert_eq!(recognize(&g), Err(FiberError::NotConnected));
        // triangle plus a pendant vertex is indefinite
        let mut t = AffineDiagram::A(2).gram();
        for r in t.iter_mut() {
            r.push(0);
        }
        t.push(vec![1, 0, 0, -2]);
        t[0][3] = 1;
        assert_eq!(recognize(&DualGraph::from_gram(t).unwrap()), Err(FiberError::NotEmbeddable));
        let g = DualGraph::from_gram(vec![vec![-2, 3], vec![3, -2]]).unwrap();
        assert_eq!(recognize(&g), Err(FiberError::NotEmbeddable));
        let g = DualGraph::from_gram(vec![vec![-2, -1], vec![-1, -2]]).unwrap();
        assert!(matches!(recognize(&g), Err(FiberError::NegativeIntersection(..))));
        assert!(DualGraph::from_gram(vec![vec![-2, 1], vec![0, -2]]).is_err());
    }

    #[test]
    fn embeddings_are_induced() {
        // a 3-vertex path does not sit inside a triangle as an induced subgraph
        assert!(embeddings(&path(3), AffineDiagram::A(2)).is_empty());
        assert!(!embeddings(&path(3), AffineDiagram::A(3)).is_empty());
    }

    #[test]
    fn special_count_examples() {
        let tag = |special, multiplicity| ComponentTag { special, multiplicity };
        let i4 = [tag(true, 1), tag(false, 1), tag(true, 1), tag(false, 1)];
        assert!(special_count_consistent(KodairaType::I(4), &i4));
        let i0s_ordinary_center =
            [tag(false, 2), tag(true, 1), tag(true, 1), tag(true, 1), tag(true, 1)];
        assert!(!special_count_consistent(KodairaType::IStar(0), &i0s_ordinary_center));
        assert!(special_count_consistent(KodairaType::II, &[tag(false, 1)]));
    }

    #[test]
    fn profile_table_matches_labelling_rules() {
        for t in KodairaType::on_x() {
            assert_eq!(derived_profiles(t), t.special_profiles(), "{t}");
        }
    }

    #[test]
    fn deficit_totals() {
        let total = |t: KodairaType| -> Vec<i64> {
            labelled_forms(t).iter().map(LabelledFiber::deficit_total).collect()
        };
        assert_eq!(total(KodairaType::IStar(0)), vec![4]);
        assert_eq!(total(KodairaType::IStar(6)), vec![4]);
        assert_eq!(total(KodairaType::IIIStar), vec![3]);
        assert_eq!(total(KodairaType::IIStar), vec![2]);
        assert_eq!(total(KodairaType::IVStar), vec![0]);
        assert_eq!(total(KodairaType::I(8)), vec![0]);
    }
}
