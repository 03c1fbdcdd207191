//! The rank-16 lattice `N` spanned over Q by `ℓ₁` and the fifteen exceptional
//! curves `ℓᵢⱼ`, with its intersection pairing.
//!
//! Classes are stored with doubled integer coordinates, so every class with
//! half-integral coordinates is represented exactly and without allocation.
//! Coordinates and pairings are handed out as [`Rational`] values.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Exact rational number used for coordinates and pairings.
pub type Rational = Ratio<i64>;

/// Number of basis vectors.
pub const RANK: usize = 16;

/// Number of branch lines.
pub const LINES: u8 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("line index {0} out of range 1..=6")]
    LineIndex(u8),
    #[error("invalid node pair ({0}, {1}): need two distinct indices in 1..=6")]
    NodePair(u8, u8),
    #[error("expected {RANK} coordinates, got {0}")]
    Length(usize),
    #[error("coordinate {value} at position {position} is not a multiple of 1/2")]
    Denominator { position: usize, value: Rational },
}

/// An unordered pair of distinct line indices, i.e. a node `P_ij` of the
/// arrangement. Always stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodePair {
    lo: u8,
    hi: u8,
}

impl NodePair {
    pub fn new(i: u8, j: u8) -> Result<Self, LatticeError> {
        if i == j || !(1..=LINES).contains(&i) || !(1..=LINES).contains(&j) {
            return Err(LatticeError::NodePair(i, j));
        }
        Ok(NodePair { lo: i.min(j), hi: i.max(j) })
    }

    pub fn lo(self) -> u8 {
        self.lo
    }

    pub fn hi(self) -> u8 {
        self.hi
    }

    pub fn contains(self, k: u8) -> bool {
        self.lo == k || self.hi == k
    }

    pub fn is_disjoint(self, other: NodePair) -> bool {
        !other.contains(self.lo) && !other.contains(self.hi)
    }

    /// All 15 pairs in lexicographic order.
    pub fn all() -> impl Iterator<Item = NodePair> {
        (1..=LINES).flat_map(|i| (i + 1..=LINES).map(move |j| NodePair { lo: i, hi: j }))
    }

    /// Position of this pair in [`NodePair::all`].
    pub fn index(self) -> usize {
        let (i, j) = (self.lo as usize, self.hi as usize);
        // pairs (a, b) with a < i come first
        let before: usize = (1..i).map(|a| 6 - a).sum();
        before + (j - i - 1)
    }

    /// Parses two adjacent digits such as `"13"`.
    pub fn parse_digits(s: &str) -> Option<NodePair> {
        let b = s.as_bytes();
        if b.len() != 2 || !b[0].is_ascii_digit() || !b[1].is_ascii_digit() {
            return None;
        }
        let (i, j) = (b[0] - b'0', b[1] - b'0');
        if i >= j {
            return None;
        }
        NodePair::new(i, j).ok()
    }
}

impl fmt::Display for NodePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lo, self.hi)
    }
}

/// A basis vector of `N ⊗ Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    L1,
    Exc(NodePair),
}

impl BasisIndex {
    pub fn all() -> impl Iterator<Item = BasisIndex> {
        std::iter::once(BasisIndex::L1).chain(NodePair::all().map(BasisIndex::Exc))
    }

    pub fn position(self) -> usize {
        match self {
            BasisIndex::L1 => 0,
            BasisIndex::Exc(p) => 1 + p.index(),
        }
    }

    pub fn from_position(pos: usize) -> Option<BasisIndex> {
        BasisIndex::all().nth(pos)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::L1 => write!(f, "l1"),
            BasisIndex::Exc(p) => write!(f, "e{p}"),
        }
    }
}

/// An element of `N ⊗ Q` with half-integral coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    half: [i64; RANK],
}

impl Default for DivisorClass {
    fn default() -> Self {
        Self::zero()
    }
}

impl DivisorClass {
    pub const fn zero() -> Self {
        DivisorClass { half: [0; RANK] }
    }

    pub fn basis(idx: BasisIndex) -> Self {
        let mut half = [0; RANK];
        half[idx.position()] = 2;
        DivisorClass { half }
    }

    /// Builds a class from doubled coordinates.
    pub const fn from_doubled(half: [i64; RANK]) -> Self {
        DivisorClass { half }
    }

    pub fn doubled(&self) -> &[i64; RANK] {
        &self.half
    }

    pub fn from_coords(coords: &[Rational]) -> Result<Self, LatticeError> {
        if coords.len() != RANK {
            return Err(LatticeError::Length(coords.len()));
        }
        let mut half = [0; RANK];
        for (k, c) in coords.iter().enumerate() {
            let d = c * 2;
            if !d.is_integer() {
                return Err(LatticeError::Denominator { position: k, value: *c });
            }
            half[k] = d.to_integer();
        }
        Ok(DivisorClass { half })
    }

    pub fn coord(&self, idx: BasisIndex) -> Rational {
        Ratio::new(self.half[idx.position()], 2)
    }

    pub fn coords(&self) -> [Rational; RANK] {
        self.half.map(|h| Ratio::new(h, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.half.iter().all(|&h| h == 0)
    }

    /// True if every coordinate is an integer.
    pub fn has_integral_coords(&self) -> bool {
        self.half.iter().all(|h| h % 2 == 0)
    }

    pub fn pairing(&self, other: &DivisorClass) -> Rational {
        pairing(self, other)
    }

    pub fn square(&self) -> Rational {
        pairing(self, self)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(mut self, rhs: DivisorClass) -> DivisorClass {
        self += rhs;
        self
    }
}

impl AddAssign for DivisorClass {
    fn add_assign(&mut self, rhs: DivisorClass) {
        for (a, b) in self.half.iter_mut().zip(rhs.half) {
            *a += b;
        }
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { half: self.half.map(|h| -h) }
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass { half: rhs.half.map(|h| h * self) }
    }
}

impl std::iter::Sum for DivisorClass {
    fn sum<I: Iterator<Item = DivisorClass>>(iter: I) -> DivisorClass {
        iter.fold(DivisorClass::zero(), Add::add)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for idx in BasisIndex::all() {
            let c = self.coord(idx);
            if c == Rational::from_integer(0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c == Rational::from_integer(1) {
                write!(f, "{idx}")?;
            } else {
                write!(f, "({c}){idx}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        v.serialize(s)
    }
}

/// Intersection pairing on `N ⊗ Q`.
///
/// Uses the sparse shape of the Gram matrix: `-2` on the diagonal and `1`
/// between `ℓ₁` and each `ℓ₁ⱼ`.
pub fn pairing(a: &DivisorClass, b: &DivisorClass) -> Rational {
    let (x, y) = (&a.half, &b.half);
    let mut s: i64 = x.iter().zip(y).map(|(p, q)| -2 * p * q).sum();
    // ℓ₁₂..ℓ₁₆ sit at positions 1..=5
    for k in 1..=5 {
        s += x[0] * y[k] + x[k] * y[0];
    }
    Ratio::new(s, 4)
}

/// The 16×16 integer Gram matrix in the basis `(ℓ₁; ℓᵢⱼ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: [[i64; RANK]; RANK],
}

impl GramMatrix {
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.iter().map(|r| r.to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..RANK).all(|i| (0..RANK).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn determinant(&self) -> i128 {
        crate::linalg::determinant(&self.rows())
    }

    pub fn inertia(&self) -> crate::linalg::Inertia {
        crate::linalg::inertia(&self.rows())
    }
}

pub fn gram_matrix() -> GramMatrix {
    let mut entries = [[0; RANK]; RANK];
    let basis: Vec<DivisorClass> = BasisIndex::all().map(DivisorClass::basis).collect();
    for i in 0..RANK {
        for j in 0..RANK {
            entries[i][j] = pairing(&basis[i], &basis[j]).to_integer();
        }
    }
    GramMatrix { entries }
}

/// The exceptional curve `ℓᵢⱼ` over the node `P_ij`.
pub fn exceptional(p: NodePair) -> DivisorClass {
    DivisorClass::basis(BasisIndex::Exc(p))
}

/// The special curve `ℓᵢ`, the reduced preimage of the i-th branch line.
pub fn special_line(i: u8) -> Result<DivisorClass, LatticeError> {
    if !(1..=LINES).contains(&i) {
        return Err(LatticeError::LineIndex(i));
    }
    let mut half = [0; RANK];
    half[0] = 2;
    if i > 1 {
        for j in 2..=LINES {
            if j == i {
                continue;
            }
            half[1 + NodePair { lo: 1, hi: j }.index()] += 1;
            half[1 + NodePair::new(i, j)?.index()] -= 1;
        }
    }
    Ok(DivisorClass { half })
}

/// `H = 2ℓ₁ + Σⱼ ℓ₁ⱼ`, the pull-back of a general line.
pub fn hyperplane() -> DivisorClass {
    let l1 = DivisorClass::basis(BasisIndex::L1);
    2 * l1 + (2..=LINES).map(|j| exceptional(NodePair { lo: 1, hi: j })).sum()
}

/// `B = ℓ₁ + … + ℓ₆`.
pub fn branch_divisor() -> DivisorClass {
    (1..=LINES).map(|i| special_line(i).expect("index in range")).sum()
}

/// `1 + D²/2`.
pub fn arithmetic_genus(d: &DivisorClass) -> Rational {
    Rational::from_integer(1) + d.square() / 2
}
