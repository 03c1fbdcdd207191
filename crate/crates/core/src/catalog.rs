//! The catalog of named (-2)-curves: the six special curves `ℓᵢ`, the fifteen
//! exceptional curves `ℓᵢⱼ`, the 45 strict transforms `μ` of lines through two
//! nodes with no common index, and optionally strict transforms of conics
//! through five nodes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{
    branch_divisor, exceptional, hyperplane, special_line, DivisorClass, LatticeError, NodePair,
    Rational, LINES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("node pairs {0} and {1} share an index")]
    OverlappingPairs(NodePair, NodePair),
    #[error("a conic needs 5 distinct nodes, got {0}")]
    ConicNodeCount(usize),
    #[error("conic node set {0} is not admissible")]
    InadmissibleConic(String),
    #[error("unknown curve name `{0}`")]
    UnknownName(String),
    #[error("curve `{0}` is not in the catalog (build it with conics?)")]
    NotInCatalog(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Special,
    Exceptional,
    OrdinaryLine,
    OrdinaryConic,
}

impl CurveKind {
    pub fn is_special(self) -> bool {
        self == CurveKind::Special
    }

    pub fn label(self) -> &'static str {
        match self {
            CurveKind::Special => "special",
            CurveKind::Exceptional => "exceptional",
            CurveKind::OrdinaryLine => "line",
            CurveKind::OrdinaryConic => "conic",
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A parsed curve name in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveName {
    Special(u8),
    Exceptional(NodePair),
    Line(NodePair, NodePair),
    Conic([NodePair; 5]),
}

impl CurveName {
    pub fn kind(&self) -> CurveKind {
        match self {
            CurveName::Special(_) => CurveKind::Special,
            CurveName::Exceptional(_) => CurveKind::Exceptional,
            CurveName::Line(..) => CurveKind::OrdinaryLine,
            CurveName::Conic(_) => CurveKind::OrdinaryConic,
        }
    }

    pub fn class(&self) -> Result<DivisorClass, CatalogError> {
        match self {
            CurveName::Special(i) => Ok(special_line(*i)?),
            CurveName::Exceptional(p) => Ok(exceptional(*p)),
            CurveName::Line(a, b) => class_mu(*a, *b),
            CurveName::Conic(nodes) => class_conic(nodes),
        }
    }

    pub fn line(a: NodePair, b: NodePair) -> Result<CurveName, CatalogError> {
        if !a.is_disjoint(b) {
            return Err(CatalogError::OverlappingPairs(a, b));
        }
        Ok(CurveName::Line(a.min(b), a.max(b)))
    }

    pub fn conic(nodes: &[NodePair]) -> Result<CurveName, CatalogError> {
        let mut v = nodes.to_vec();
        v.sort();
        v.dedup();
        if v.len() != 5 || nodes.len() != 5 {
            return Err(CatalogError::ConicNodeCount(v.len()));
        }
        Ok(CurveName::Conic([v[0], v[1], v[2], v[3], v[4]]))
    }
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveName::Special(i) => write!(f, "l{i}"),
            CurveName::Exceptional(p) => write!(f, "e{p}"),
            CurveName::Line(a, b) => write!(f, "mu_{a}_{b}"),
            CurveName::Conic(n) => write!(f, "conic_{}_{}_{}_{}_{}", n[0], n[1], n[2], n[3], n[4]),
        }
    }
}

impl FromStr for CurveName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CatalogError::UnknownName(s.to_string());
        if let Some(rest) = s.strip_prefix("mu_") {
            let parts: Vec<_> = rest.split('_').collect();
            let [a, b] = parts[..] else { return Err(unknown()) };
            let a = NodePair::parse_digits(a).ok_or_else(unknown)?;
            let b = NodePair::parse_digits(b).ok_or_else(unknown)?;
            return CurveName::line(a, b);
        }
        if let Some(rest) = s.strip_prefix("conic_") {
            let nodes = rest
                .split('_')
                .map(|p| NodePair::parse_digits(p).ok_or_else(unknown))
                .collect::<Result<Vec<_>, _>>()?;
            return CurveName::conic(&nodes);
        }
        if let Some(rest) = s.strip_prefix('e') {
            return NodePair::parse_digits(rest).map(CurveName::Exceptional).ok_or_else(unknown);
        }
        if let Some(rest) = s.strip_prefix('l') {
            return match rest.parse::<u8>() {
                Ok(i) if (1..=LINES).contains(&i) && rest.len() == 1 => Ok(CurveName::Special(i)),
                _ => Err(unknown()),
            };
        }
        Err(unknown())
    }
}

/// Class of the strict transform of the line through `P_a` and `P_b`:
/// `H - ℓ_a - ℓ_b`.
pub fn class_mu(a: NodePair, b: NodePair) -> Result<DivisorClass, CatalogError> {
    if !a.is_disjoint(b) {
        return Err(CatalogError::OverlappingPairs(a, b));
    }
    Ok(hyperplane() - exceptional(a) - exceptional(b))
}

/// How many of the given nodes lie on each line `L₁..L₆`.
pub fn incidence_counts(nodes: &[NodePair]) -> [u8; 6] {
    let mut c = [0; 6];
    for p in nodes {
        c[(p.lo() - 1) as usize] += 1;
        c[(p.hi() - 1) as usize] += 1;
    }
    c
}

/// Whether a conic through the five given nodes is an irreducible smooth
/// conic whose pull-back is a (-2)-curve.
///
/// The only condition is that no three of the nodes are collinear, i.e. no
/// line `Lₙ` carries three of them. Under the Picard-number-16 assumption
/// the pull-back of such a conic never splits, whatever the parity of the
/// incidence counts.
pub fn conic_admissible(nodes: &[NodePair]) -> bool {
    let mut v = nodes.to_vec();
    v.sort();
    v.dedup();
    v.len() == 5 && nodes.len() == 5 && incidence_counts(&v).iter().all(|&c| c <= 2)
}

/// `2H - Σ ℓ_s` over the five nodes.
pub fn class_conic(nodes: &[NodePair]) -> Result<DivisorClass, CatalogError> {
    let name = CurveName::conic(nodes)?;
    if !conic_admissible(nodes) {
        return Err(CatalogError::InadmissibleConic(name.to_string()));
    }
    Ok(2 * hyperplane() - nodes.iter().map(|p| exceptional(*p)).sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Curve {
    pub name: String,
    pub kind: CurveKind,
    #[serde(rename = "class")]
    pub cls: DivisorClass,
}

impl Curve {
    fn new(name: CurveName) -> Curve {
        let cls = name.class().expect("catalog names are valid");
        Curve { name: name.to_string(), kind: name.kind(), cls }
    }

    pub fn square(&self) -> Rational {
        self.cls.square()
    }

    pub fn b_pairing(&self) -> Rational {
        self.cls.pairing(&branch_divisor())
    }
}

/// An ordered, immutable list of curves with a cached pairing table.
#[derive(Debug, Clone)]
pub struct Catalog {
    curves: Vec<Curve>,
    by_name: HashMap<String, usize>,
    pairings: Vec<i64>,
}

impl Catalog {
    pub fn build(include_conics: bool) -> Catalog {
        let mut names: Vec<CurveName> = (1..=LINES).map(CurveName::Special).collect();
        names.extend(NodePair::all().map(CurveName::Exceptional));
        let pairs: Vec<NodePair> = NodePair::all().collect();
        for (k, a) in pairs.iter().enumerate() {
            for b in &pairs[k + 1..] {
                if a.is_disjoint(*b) {
                    names.push(CurveName::Line(*a, *b));
                }
            }
        }
        if include_conics {
            for_each_subset(&pairs, 5, &mut |nodes| {
                if conic_admissible(nodes) {
                    names.push(CurveName::conic(nodes).expect("five distinct nodes"));
                }
            });
        }
        let curves: Vec<Curve> = names.into_iter().map(Curve::new).collect();
        let n = curves.len();
        let mut pairings = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let p = curves[i].cls.pairing(&curves[j].cls);
                assert!(p.is_integer(), "non-integral pairing {} . {}", curves[i].name, curves[j].name);
                pairings[i * n + j] = p.to_integer();
                pairings[j * n + i] = p.to_integer();
            }
        }
        let by_name = curves.iter().enumerate().map(|(k, c)| (c.name.clone(), k)).collect();
        Catalog { curves, by_name, pairings }
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn curve(&self, idx: usize) -> &Curve {
        &self.curves[idx]
    }

    pub fn count(&self, kind: CurveKind) -> usize {
        self.curves.iter().filter(|c| c.kind == kind).count()
    }

    pub fn includes_conics(&self) -> bool {
        self.count(CurveKind::OrdinaryConic) > 0
    }

    /// Cached pairing of two catalog curves.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.pairings[i * self.curves.len() + j]
    }

    /// Looks up a curve by any accepted spelling of its name.
    pub fn resolve(&self, name: &str) -> Result<usize, CatalogError> {
        let canonical = name.parse::<CurveName>()?;
        if let CurveName::Conic(nodes) = &canonical {
            if !conic_admissible(nodes) {
                return Err(CatalogError::InadmissibleConic(canonical.to_string()));
            }
        }
        let key = canonical.to_string();
        self.by_name.get(&key).copied().ok_or(CatalogError::NotInCatalog(key))
    }

    pub fn get(&self, name: &str) -> Option<&Curve> {
        self.resolve(name).ok().map(|k| &self.curves[k])
    }
}

/// Convenience wrapper for [`Catalog::build`].
pub fn build_catalog(include_conics: bool) -> Catalog {
    Catalog::build(include_conics)
}

fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn np(s: &str) -> NodePair {
        NodePair::parse_digits(s).unwrap()
    }

    fn nodes(list: &[&str]) -> Vec<NodePair> {
        list.iter().map(|s| np(s)).collect()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn mu_examples() {
        let m = class_mu(np("13"), np("26")).unwrap();
        assert_eq!(m.square(), r(-2));
        assert_eq!(m.pairing(&branch_divisor()), r(2));
        let m2 = class_mu(np("23"), np("56")).unwrap();
        assert_eq!(m2.pairing(&special_line(1).unwrap()), r(1));
        assert!(matches!(
            class_mu(np("12"), np("13")),
            Err(CatalogError::OverlappingPairs(..))
        ));
    }

    #[test]
    fn conic_examples() {
        let c = class_conic(&nodes(&["13", "15", "23", "46", "56"])).unwrap();
        assert_eq!(c.square(), r(-2));
        assert_eq!(c.pairing(&branch_divisor()), r(2));
        assert_eq!(c.pairing(&exceptional(np("24"))), r(0));
    }

    #[test]
    fn admissibility_examples() {
        assert!(conic_admissible(&nodes(&["13", "15", "23", "46", "56"])));
        assert!(!conic_admissible(&nodes(&["12", "13", "14", "25", "36"])));
        let n = nodes(&["12", "13", "24", "34", "56"]);
        assert_eq!(incidence_counts(&n), [2, 2, 2, 2, 1, 1]);
        assert!(conic_admissible(&n));
        // a pentagon: every count even, still admissible
        let pentagon = nodes(&["12", "23", "34", "45", "15"]);
        assert_eq!(incidence_counts(&pentagon), [2, 2, 2, 2, 2, 0]);
        assert!(conic_admissible(&pentagon));
        assert!(!conic_admissible(&nodes(&["12", "12", "34", "45", "15"])));
        assert!(class_conic(&nodes(&["12", "13", "14", "25", "36"])).is_err());
    }

    #[test]
    fn name_parsing_canonicalizes() {
        assert_eq!("mu_56_23".parse::<CurveName>().unwrap().to_string(), "mu_23_56");
        assert_eq!(
            "conic_56_13_15_23_46".parse::<CurveName>().unwrap().to_string(),
            "conic_13_15_23_46_56"
        );
        for bad in ["l0", "l7", "l12", "e21", "e11", "e17", "mu_12_13", "mu_12", "x", "H", "conic_12_34"] {
            assert!(bad.parse::<CurveName>().is_err(), "{bad}");
        }
    }

    #[test]
    fn catalog_counts() {
        let cat = build_catalog(false);
        assert_eq!(cat.count(CurveKind::Special), 6);
        assert_eq!(cat.count(CurveKind::Exceptional), 15);
        assert_eq!(cat.count(CurveKind::OrdinaryLine), 45);
        assert_eq!(cat.len(), 66);
        assert!(!cat.includes_conics());
        assert!(matches!(
            cat.resolve("conic_13_15_23_46_56"),
            Err(CatalogError::NotInCatalog(_))
        ));
        let full = build_catalog(true);
        assert_eq!(full.count(CurveKind::OrdinaryConic), oracle_conic_count());
        assert_eq!(full.resolve("mu_56_23").unwrap(), full.resolve("mu_23_56").unwrap());
    }

    /// Counts 5-subsets of nodes with no line through three of them by
    /// brute force over bitmasks.
    fn oracle_conic_count() -> usize {
        let pairs: Vec<(u8, u8)> = (1..=6u8).flat_map(|i| (i + 1..=6).map(move |j| (i, j))).collect();
        (0u32..1 << 15)
            .filter(|m| m.count_ones() == 5)
            .filter(|m| {
                (1..=6u8).all(|line| {
                    (0..15).filter(|&k| m >> k & 1 == 1 && (pairs[k].0 == line || pairs[k].1 == line)).count()
                        <= 2
                })
            })
            .count()
    }

    #[test]
    fn conic_count_is_537() {
        assert_eq!(oracle_conic_count(), 537);
    }

    #[test]
    fn mu_meets_exactly_the_two_free_lines() {
        let cat = build_catalog(false);
        for c in cat.curves().iter().filter(|c| c.kind == CurveKind::OrdinaryLine) {
            let CurveName::Line(a, b) = c.name.parse::<CurveName>().unwrap() else { unreachable!() };
            for n in 1..=6u8 {
                let expected = if a.contains(n) || b.contains(n) { 0 } else { 1 };
                assert_eq!(c.cls.pairing(&special_line(n).unwrap()), r(expected), "{} . l{n}", c.name);
            }
        }
    }

    #[test]
    fn curve_invariants_hold_on_full_catalog() {
        let cat = build_catalog(true);
        let b = branch_divisor();
        for (i, c) in cat.curves().iter().enumerate() {
            assert_eq!(c.square(), r(-2), "{}", c.name);
            if !c.kind.is_special() {
                assert_eq!(c.cls.pairing(&b), r(2), "{}", c.name);
            }
            for (j, d) in cat.curves().iter().enumerate() {
                assert_eq!(Rational::from_integer(cat.pairing(i, j)), c.cls.pairing(&d.cls));
                if i != j && c.kind.is_special() && d.kind.is_special() {
                    assert_eq!(cat.pairing(i, j), 0);
                }
                if i != j && !c.kind.is_special() && !d.kind.is_special() {
                    assert_eq!(cat.pairing(i, j) % 2, 0, "{} . {}", c.name, d.name);
                }
            }
        }
    }
}
