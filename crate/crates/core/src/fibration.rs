//! Elliptic fibrations given by an explicit fiber divisor.
//!
//! The pipeline checks that the divisor is a fiber, splits the catalog curves
//! orthogonal to it into clusters, identifies or completes each cluster as a
//! fiber, and does the Shioda–Tate and Euler-number bookkeeping for a surface
//! of Picard number 16.
//!
//! Each cluster is completed on its own; merging two catalog clusters into a
//! single fiber is never considered.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{Catalog, CatalogError, CurveKind};
use crate::divisor::{DivisorError, DivisorLiteral};
use crate::fiber::{
    labelled_completions, recognize, special_count_consistent, ComponentTag, DualGraph,
    FiberError, FiberLabel, KodairaType, LabelledCompletion, RecognitionResult,
    MAX_FIBER_COMPONENTS,
};
use crate::lattice::{DivisorClass, Rational};

/// `ρ(X) - 2` for Picard number 16.
pub const RANK_BUDGET: u32 = 14;
/// Sum of the Euler numbers of the singular fibers of an elliptic K3.
pub const EULER_TOTAL: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibrationError {
    #[error(transparent)]
    Divisor(#[from] DivisorError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("not a fiber class: D²={square}")]
    NotFiberClass { square: Rational },
    #[error("arithmetic genus is {genus}, expected 1")]
    GenusNotOne { genus: Rational },
    #[error("support of the divisor is not connected")]
    NotConnected,
    #[error("divisor is not nef: D·{curve} = {pairing}")]
    NotNef { curve: String, pairing: Rational },
    #[error("divisor is {factor} times a fiber, not a fiber")]
    NotPrimitive { factor: i64 },
    #[error("multiplicities {given:?} do not match the fiber multiplicities {expected:?}")]
    WrongMultiplicities { given: Vec<i64>, expected: Vec<i64> },
    #[error("support of the divisor is not a complete fiber")]
    SupportNotFiber,
    #[error("`{curve}` is orthogonal to the divisor and meets its support but is not part of it")]
    SupportIncomplete { curve: String },
    #[error("cluster {cluster:?}: {source}")]
    Cluster { cluster: Vec<String>, source: FiberError },
    #[error("cluster {cluster:?} admits no completion compatible with the branch-curve contacts")]
    NoCompletion { cluster: Vec<String> },
    #[error("inconsistent configuration: {0}")]
    Inconsistent(String),
}

/// A divisor together with the catalog its names refer to.
#[derive(Debug, Clone)]
pub struct FibrationInput<'a> {
    pub fiber_divisor: DivisorLiteral,
    pub catalog: &'a Catalog,
}

impl<'a> FibrationInput<'a> {
    pub fn new(fiber_divisor: DivisorLiteral, catalog: &'a Catalog) -> Self {
        FibrationInput { fiber_divisor, catalog }
    }

    pub fn from_terms(terms: &[(&str, i64)], catalog: &'a Catalog) -> Result<Self, FibrationError> {
        Ok(FibrationInput { fiber_divisor: DivisorLiteral::from_terms(terms.iter().copied())?, catalog })
    }
}

/// A divisor that passed all fiber checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedFiber {
    pub class: DivisorClass,
    /// Catalog indices of the support.
    pub support: Vec<usize>,
    pub multiplicities: Vec<i64>,
    pub recognition: RecognitionResult,
}

fn graph_of(catalog: &Catalog, members: &[usize]) -> DualGraph {
    let names = members.iter().map(|&k| catalog.curve(k).name.clone()).collect();
    let gram = members
        .iter()
        .map(|&a| members.iter().map(|&b| catalog.pairing(a, b)).collect())
        .collect();
    DualGraph::new(names, gram).expect("catalog pairings are symmetric")
}

/// Checks that the divisor is the class of a fiber: `D² = 0`, genus one,
/// connected support, nef on the catalog, and multiplicities equal to the
/// primitive null vector of its support.
pub fn validate_fiber_divisor(inp: &FibrationInput) -> Result<ValidatedFiber, FibrationError> {
    let cat = inp.catalog;
    let mut support = Vec::new();
    let mut multiplicities = Vec::new();
    for (name, m) in inp.fiber_divisor.curves()? {
        support.push(cat.resolve(&name.to_string())?);
        multiplicities.push(m);
    }
    let class: DivisorClass =
        support.iter().zip(&multiplicities).map(|(&k, &m)| m * cat.curve(k).cls).sum();
    let square = class.square();
    if square != Rational::from_integer(0) {
        return Err(FibrationError::NotFiberClass { square });
    }
    let genus = crate::lattice::arithmetic_genus(&class);
    if genus != Rational::from_integer(1) {
        return Err(FibrationError::GenusNotOne { genus });
    }
    let graph = graph_of(cat, &support);
    if !graph.is_connected() {
        return Err(FibrationError::NotConnected);
    }
    for c in cat.curves() {
        let p = class.pairing(&c.cls);
        if p < Rational::from_integer(0) {
            return Err(FibrationError::NotNef { curve: c.name.clone(), pairing: p });
        }
    }
    let recognition = recognize(&graph).map_err(|source| FibrationError::Cluster {
        cluster: graph.names().to_vec(),
        source,
    })?;
    let expected = recognition.multiplicities().ok_or(FibrationError::SupportNotFiber)?.to_vec();
    if expected != multiplicities {
        let factor = multiplicities[0] / expected[0];
        if factor > 1 && expected.iter().zip(&multiplicities).all(|(e, m)| e * factor == *m) {
            return Err(FibrationError::NotPrimitive { factor });
        }
        return Err(FibrationError::WrongMultiplicities { given: multiplicities, expected });
    }
    Ok(ValidatedFiber { class, support, multiplicities, recognition })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multisection {
    pub curve: String,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SectionSummary {
    pub sections: Vec<String>,
    pub multisections: Vec<Multisection>,
}

/// Catalog curves meeting the fiber once (sections) or `d ≥ 2` times.
pub fn find_sections(f: &DivisorClass, catalog: &Catalog) -> SectionSummary {
    let mut out = SectionSummary::default();
    for c in catalog.curves() {
        let p = f.pairing(&c.cls);
        if p == Rational::from_integer(1) {
            out.sections.push(c.name.clone());
        } else if p > Rational::from_integer(1) {
            out.multisections.push(Multisection { curve: c.name.clone(), degree: p.to_integer() });
        }
    }
    out
}

/// A connected set of catalog curves orthogonal to the fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    pub members: Vec<usize>,
    pub graph: DualGraph,
    pub recognition: RecognitionResult,
}

impl Cluster {
    pub fn names(&self) -> &[String] {
        self.graph.names()
    }
}

/// Connected components of the catalog curves orthogonal to `f`, each
/// passed through [`recognize`].
pub fn orthogonal_fibers(f: &DivisorClass, catalog: &Catalog) -> Result<Vec<Cluster>, FibrationError> {
    let zero = Rational::from_integer(0);
    let orth: Vec<usize> = (0..catalog.len()).filter(|&k| f.pairing(&catalog.curve(k).cls) == zero).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &orth {
        if !seen.insert(start) {
            continue;
        }
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &orth {
                if catalog.pairing(u, v) > 0 && seen.insert(v) {
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort();
        let graph = graph_of(catalog, &members);
        let recognition = recognize(&graph)
            .map_err(|source| FibrationError::Cluster { cluster: graph.names().to_vec(), source })?;
        out.push(Cluster { members, graph, recognition });
    }
    Ok(out)
}

/// `14 - Σ(m-1) - small`: the Mordell–Weil rank left over when the given
/// fibers and `small_fibers` further two-component fibers are present.
pub fn shioda_tate_rank(fibers: &[KodairaType], small_fibers: u32) -> Result<u32, FibrationError> {
    let used: u32 = fibers.iter().map(|t| t.rank_contribution()).sum::<u32>() + small_fibers;
    RANK_BUDGET.checked_sub(used).ok_or_else(|| {
        FibrationError::Inconsistent(format!("Σ(m-1) = {used} exceeds {RANK_BUDGET}"))
    })
}

/// `(Σ e, 24 - Σ e)` over the given fibers.
pub fn euler_accounting(fibers: &[KodairaType]) -> Result<(u32, u32), FibrationError> {
    let used: u32 = fibers.iter().map(|t| t.euler()).sum();
    let residual = EULER_TOTAL.checked_sub(used).ok_or_else(|| {
        FibrationError::Inconsistent(format!("Euler numbers sum to {used} > {EULER_TOTAL}"))
    })?;
    Ok((used, residual))
}

/// Whether every special curve is a fiber component (infinite Mordell–Weil
/// group) or some special curve is horizontal (finite group).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Infinite,
    Finite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub name: String,
    pub kind: CurveKind,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AddedComponent {
    pub multiplicity: i64,
    /// Intersections with the horizontal special curves.
    pub branch_contacts: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternativeCompletion {
    pub label: FiberLabel,
    pub added: usize,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChosenCompletion {
    pub diagram: crate::fiber::AffineDiagram,
    pub added: Vec<AddedComponent>,
    pub alternatives: Vec<AlternativeCompletion>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub label: FiberLabel,
    /// The fiber given by the input divisor.
    pub given: bool,
    /// Whether the fiber enters the rank and Euler sums; two-component
    /// fibers in finite mode are instead absorbed by the small-fiber budget.
    pub counted: bool,
    pub components: Vec<ComponentReport>,
    pub recognition: RecognitionResult,
    pub completion: Option<ChosenCompletion>,
}

impl FiberReport {
    pub fn kodaira(&self) -> Option<KodairaType> {
        self.label.exact()
    }

    pub fn contains(&self, curve: &str) -> bool {
        self.components.iter().any(|c| c.name == curve)
    }

    pub fn rank_contribution(&self) -> u32 {
        self.label.rank_contribution()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationReport {
    pub divisor: BTreeMap<String, i64>,
    pub fiber_class: DivisorClass,
    pub mode: Mode,
    pub fibers: Vec<FiberReport>,
    pub sections: Vec<String>,
    pub multisections: Vec<Multisection>,
    pub vertical_specials: Vec<String>,
    pub horizontal_specials: Vec<String>,
    pub mw_rank: u32,
    /// Order of the Mordell–Weil group in finite mode.
    pub mw_order: Option<u32>,
    pub mw_group: Option<String>,
    /// `Σ(m-1)` over the counted fibers.
    pub rank_sum: u32,
    /// Number of `I_2`/`III` fibers the rank budget leaves room for.
    pub small_fiber_budget: u32,
    pub small_fibers_identified: u32,
    pub euler_used: u32,
    pub euler_residual: u32,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

impl FibrationReport {
    pub fn fiber_containing(&self, curve: &str) -> Option<&FiberReport> {
        self.fibers.iter().find(|f| f.contains(curve))
    }

    pub fn given_fiber(&self) -> &FiberReport {
        self.fibers.iter().find(|f| f.given).expect("report always has the given fiber")
    }

    /// Labels of the counted fibers, sorted.
    pub fn counted_labels(&self) -> Vec<FiberLabel> {
        let mut v: Vec<FiberLabel> = self.fibers.iter().filter(|f| f.counted).map(|f| f.label).collect();
        v.sort();
        v
    }
}

/// Mordell–Weil group named by its order, for the orders that occur.
pub fn mw_group_label(order: u32) -> String {
    match order {
        1 => "1".into(),
        2 => "Z/2Z".into(),
        4 => "(Z/2Z)^2".into(),
        n => format!("order {n}"),
    }
}

/// Runs the whole pipeline on a fiber divisor.
pub fn build_fibration(inp: &FibrationInput) -> Result<FibrationReport, FibrationError> {
    let cat = inp.catalog;
    let fiber = validate_fiber_divisor(inp)?;
    let f = fiber.class;
    let clusters = orthogonal_fibers(&f, cat)?;
    let support: BTreeSet<usize> = fiber.support.iter().copied().collect();
    let main = clusters
        .iter()
        .position(|c| c.members.contains(&fiber.support[0]))
        .expect("support curves are orthogonal to the fiber");
    if let Some(&extra) = clusters[main].members.iter().find(|k| !support.contains(k)) {
        return Err(FibrationError::SupportIncomplete { curve: cat.curve(extra).name.clone() });
    }

    let specials: Vec<usize> = (0..cat.len()).filter(|&k| cat.curve(k).kind.is_special()).collect();
    let vertical: BTreeSet<usize> = clusters.iter().flat_map(|c| c.members.iter().copied()).collect();
    let vertical_specials: Vec<usize> = specials.iter().copied().filter(|k| vertical.contains(k)).collect();
    let horizontal_specials: Vec<usize> = specials.iter().copied().filter(|k| !vertical.contains(k)).collect();
    let mode = if horizontal_specials.is_empty() { Mode::Infinite } else { Mode::Finite };

    let mut notes = Vec::new();
    let mut warnings = Vec::new();
    let mut fibers = Vec::new();
    let mut pending = Vec::new();
    for (ci, c) in clusters.iter().enumerate() {
        let kinds: Vec<CurveKind> = c.members.iter().map(|&k| cat.curve(k).kind).collect();
        match c.recognition.label() {
            Some(label) => {
                let mult = c.recognition.multiplicities().expect("complete").to_vec();
                check_profile(label, &kinds, &mult, c.names(), &mut warnings);
                fibers.push(FiberReport {
                    label,
                    given: ci == main,
                    counted: true,
                    components: component_reports(cat, &c.members, &mult),
                    recognition: c.recognition.clone(),
                    completion: None,
                });
            }
            None => {
                let special: Vec<bool> = kinds.iter().map(|k| k.is_special()).collect();
                let options: Vec<LabelledCompletion> =
                    labelled_completions(&c.graph, &special, MAX_FIBER_COMPONENTS)
                        .into_iter()
                        .filter(|lc| completion_feasible(cat, &f, c, lc, &horizontal_specials))
                        .collect();
                if options.is_empty() {
                    return Err(FibrationError::NoCompletion { cluster: c.names().to_vec() });
                }
                pending.push((fibers.len(), ci, options));
                fibers.push(FiberReport {
                    label: FiberLabel::I1OrII,
                    given: false,
                    counted: true,
                    components: Vec::new(),
                    recognition: c.recognition.clone(),
                    completion: None,
                });
            }
        }
    }

    // Fewest added components for every partial cluster, then test whether
    // any larger alternative would still fit the budgets.
    for (slot, ci, options) in &pending {
        let chosen = &options[0];
        let c = &clusters[*ci];
        let mult = chosen.cluster_multiplicities();
        fibers[*slot].label = chosen.label;
        fibers[*slot].components = component_reports(cat, &c.members, &mult);
        let ties: BTreeSet<String> = options
            .iter()
            .filter(|o| o.added.len() == chosen.added.len())
            .map(|o| o.label.to_string())
            .collect();
        if ties.len() > 1 {
            notes.push(format!(
                "cluster {:?} has several minimal completions: {}",
                c.names(),
                ties.into_iter().collect::<Vec<_>>().join(", ")
            ));
        }
        fibers[*slot].completion = Some(ChosenCompletion {
            diagram: chosen.diagram,
            added: chosen
                .added
                .iter()
                .map(|&(multiplicity, branch_contacts)| AddedComponent { multiplicity, branch_contacts })
                .collect(),
            alternatives: Vec::new(),
        });
    }

    resolve_small_labels(mode, &mut fibers, &mut notes);
    for fr in fibers.iter_mut() {
        fr.counted = mode == Mode::Infinite || !fr.label.is_small();
    }
    let small_identified = fibers.iter().filter(|f| !f.counted).count() as u32;

    let rank_sum: u32 = fibers.iter().filter(|f| f.counted).map(|f| f.rank_contribution()).sum();
    if rank_sum > RANK_BUDGET {
        return Err(FibrationError::Inconsistent(format!("Σ(m-1) = {rank_sum} exceeds {RANK_BUDGET}")));
    }
    let euler_used: u32 = fibers.iter().filter(|f| f.counted).map(|f| min_euler(f.label)).sum();
    if euler_used > EULER_TOTAL {
        return Err(FibrationError::Inconsistent(format!("Euler numbers sum to {euler_used}")));
    }
    let euler_residual = EULER_TOTAL - euler_used;

    let (mw_rank, slack) = match mode {
        Mode::Infinite => {
            let reducible = fibers.len();
            if reducible != 2 {
                warnings.push(format!(
                    "all special curves are vertical, so there must be exactly two reducible fibers; found {reducible}"
                ));
            }
            notes.push(
                "all special curves are vertical: the two reducible fibers are the only ones, so the small-fiber budget is 0"
                    .into(),
            );
            (RANK_BUDGET - rank_sum, 0)
        }
        Mode::Finite => {
            let slack = RANK_BUDGET - rank_sum;
            if small_identified > slack {
                return Err(FibrationError::Inconsistent(format!(
                    "{small_identified} two-component fibers found but the rank budget leaves room for {slack}"
                )));
            }
            if euler_residual < 2 * slack {
                return Err(FibrationError::Inconsistent(format!(
                    "{slack} two-component fibers need Euler number at least {} but only {euler_residual} is left",
                    2 * slack
                )));
            }
            (0, slack)
        }
    };

    // Now that budgets are known, judge the larger completions.
    for (slot, _, options) in &pending {
        let chosen_added = options[0].added.len();
        let current = fibers[*slot].label;
        let mut alternatives = Vec::new();
        let mut seen = BTreeSet::new();
        for o in options.iter().skip(1) {
            if !seen.insert((o.label, o.added.len())) || (o.label == current && o.added.len() == chosen_added) {
                continue;
            }
            let delta_rank = o.label.rank_contribution() as i64
                - if fibers[*slot].counted { current.rank_contribution() as i64 } else { 0 };
            let small_after = small_identified as i64 - i64::from(!fibers[*slot].counted && !o.label.is_small());
            let budget_left = RANK_BUDGET as i64 - rank_sum as i64 - delta_rank - small_after;
            let verdict = if budget_left < 0 {
                format!("excluded: Σ(m-1) would exceed {RANK_BUDGET}")
            } else {
                "not excluded by the budgets; the completion with fewer added components is reported".into()
            };
            alternatives.push(AlternativeCompletion { label: o.label, added: o.added.len(), verdict });
        }
        if let Some(c) = fibers[*slot].completion.as_mut() {
            c.alternatives = alternatives;
        }
    }

    let sections = find_sections(&f, cat);
    let name = |k: &usize| cat.curve(*k).name.clone();
    let (mw_order, mw_group) = match mode {
        Mode::Infinite => (None, None),
        Mode::Finite => {
            let special_sections = sections
                .sections
                .iter()
                .filter(|s| cat.get(s).is_some_and(|c| c.kind.is_special()))
                .count() as u32;
            if let Some(s) = sections.sections.iter().find(|s| cat.get(s).is_some_and(|c| !c.kind.is_special())) {
                warnings.push(format!("ordinary curve {s} is a section, but with a finite group every section is special"));
            }
            if special_sections == 0 {
                warnings.push("no special curve is a section".into());
            }
            (Some(special_sections), Some(mw_group_label(special_sections)))
        }
    };
    if mode == Mode::Finite {
        for fr in fibers.iter().filter(|f| f.counted) {
            if let Some(KodairaType::I(_)) = fr.kodaira() {
                warnings.push(format!("fiber of type {} with a finite group; only I_1 and I_2 are possible", fr.label));
            }
        }
    }

    Ok(FibrationReport {
        divisor: fiber
            .support
            .iter()
            .zip(&fiber.multiplicities)
            .map(|(&k, &m)| (cat.curve(k).name.clone(), m))
            .collect(),
        fiber_class: f,
        mode,
        fibers,
        sections: sections.sections,
        multisections: sections.multisections,
        vertical_specials: vertical_specials.iter().map(name).collect(),
        horizontal_specials: horizontal_specials.iter().map(name).collect(),
        mw_rank,
        mw_order,
        mw_group,
        rank_sum,
        small_fiber_budget: slack,
        small_fibers_identified: small_identified,
        euler_used,
        euler_residual,
        notes,
        warnings,
    })
}

fn min_euler(label: FiberLabel) -> u32 {
    label.candidates().iter().map(|t| t.euler()).min().unwrap_or(0)
}

fn component_reports(cat: &Catalog, members: &[usize], mult: &[i64]) -> Vec<ComponentReport> {
    members
        .iter()
        .zip(mult)
        .map(|(&k, &m)| ComponentReport { name: cat.curve(k).name.clone(), kind: cat.curve(k).kind, multiplicity: m })
        .collect()
}

fn check_profile(label: FiberLabel, kinds: &[CurveKind], mult: &[i64], names: &[String], warnings: &mut Vec<String>) {
    let tags: Vec<ComponentTag> = kinds
        .iter()
        .zip(mult)
        .map(|(k, &m)| ComponentTag { special: k.is_special(), multiplicity: m })
        .collect();
    if !label.candidates().iter().any(|t| special_count_consistent(*t, &tags)) {
        warnings.push(format!("special components of {names:?} do not fit any allowed profile of {label}"));
    }
}

/// With every special curve vertical, `III` next to `I_10` is impossible, so
/// the ambiguous two-component fiber is `I_2`.
fn resolve_small_labels(mode: Mode, fibers: &mut [FiberReport], notes: &mut Vec<String>) {
    if mode != Mode::Infinite {
        return;
    }
    let has_i10 = fibers.iter().any(|f| f.kodaira() == Some(KodairaType::I(10)));
    for fr in fibers.iter_mut() {
        if fr.label == FiberLabel::I2OrIII && has_i10 {
            fr.label = FiberLabel::Type(KodairaType::I(2));
            notes.push("I_2/III next to I_10 resolved to I_2: the configuration I_10 + III does not exist".into());
        }
    }
}

/// Whether the branch-curve contacts of the added components can be met.
///
/// Every added component is ordinary, so it meets the branch curve in two
/// points: its in-fiber special neighbours use part of that, the rest
/// (`deficit`) must go to horizontal special curves. Conversely a horizontal
/// curve `s` meets the fiber `F·s` times, and whatever the catalog part of the
/// fiber does not account for must be supplied by added components.
fn completion_feasible(
    cat: &Catalog,
    f: &DivisorClass,
    cluster: &Cluster,
    lc: &LabelledCompletion,
    horizontal_specials: &[usize],
) -> bool {
    let mult = lc.cluster_multiplicities();
    let spare_of = |k: usize| -> i64 {
        let fs = f.pairing(&cat.curve(k).cls).to_integer();
        let known: i64 = cluster.members.iter().zip(&mult).map(|(&c, &m)| m * cat.pairing(k, c)).sum();
        fs - known
    };
    let special_spares: Vec<i64> = horizontal_specials.iter().map(|&k| spare_of(k)).collect();
    if special_spares.iter().any(|&s| s < 0) {
        return false;
    }
    let zero = Rational::from_integer(0);
    let member_set: BTreeSet<usize> = cluster.members.iter().copied().collect();
    let coins: Vec<i64> = lc.added.iter().map(|&(m, _)| m).collect();
    for k in 0..cat.len() {
        let c = cat.curve(k);
        if c.kind.is_special() || member_set.contains(&k) || f.pairing(&c.cls) == zero {
            continue;
        }
        let spare = spare_of(k);
        if spare < 0 || spare % 2 != 0 || !representable(spare / 2, &coins) {
            return false;
        }
    }
    assign_contacts(&lc.added, 0, &mut special_spares.clone())
}

/// Is `target` a nonnegative integer combination of `coins`?
fn representable(target: i64, coins: &[i64]) -> bool {
    if target == 0 {
        return true;
    }
    let t = target as usize;
    let mut ok = vec![false; t + 1];
    ok[0] = true;
    for v in 1..=t {
        ok[v] = coins.iter().any(|&c| c as usize <= v && ok[v - c as usize]);
    }
    ok[t]
}

/// Distributes each added component's deficit over the horizontal special
/// curves so that every spare count is used exactly.
fn assign_contacts(added: &[(i64, i64)], idx: usize, spares: &mut [i64]) -> bool {
    if idx == added.len() {
        return spares.iter().all(|&s| s == 0);
    }
    let (m, d) = added[idx];
    distribute(d, m, 0, spares, &mut |sp| assign_contacts(added, idx + 1, sp))
}

fn distribute(left: i64, m: i64, s: usize, spares: &mut [i64], next: &mut dyn FnMut(&mut [i64]) -> bool) -> bool {
    if left == 0 {
        return next(spares);
    }
    if s == spares.len() {
        return false;
    }
    for x in (0..=left).rev() {
        if x * m > spares[s] {
            continue;
        }
        spares[s] -= x * m;
        let ok = distribute(left - x, m, s + 1, spares, next);
        spares[s] += x * m;
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shioda_tate_examples() {
        use KodairaType::*;
        assert_eq!(shioda_tate_rank(&[I(10), I(2)], 0).unwrap(), 4);
        assert_eq!(shioda_tate_rank(&[IVStar, I(4)], 0).unwrap(), 5);
        assert_eq!(shioda_tate_rank(&[IIStar], 6).unwrap(), 0);
        assert!(shioda_tate_rank(&[IStar(0); 4], 0).is_err());
    }

    #[test]
    fn euler_examples() {
        use KodairaType::*;
        assert_eq!(euler_accounting(&[IIStar]).unwrap(), (10, 14));
        assert_eq!(euler_accounting(&[IStar(2), IStar(0), IStar(0)]).unwrap(), (20, 4));
        assert_eq!(euler_accounting(&[]).unwrap(), (0, 24));
        assert!(euler_accounting(&[IIStar, IIStar, IIStar]).is_err());
    }

    #[test]
    fn contact_assignment() {
        // one component of deficit 2 against spares (0, 2)
        assert!(assign_contacts(&[(1, 2)], 0, &mut [0, 2]));
        assert!(assign_contacts(&[(1, 2)], 0, &mut [1, 1]));
        assert!(!assign_contacts(&[(1, 2)], 0, &mut [0, 3]));
        // a multiplicity-2 component with deficit 1 needs a spare of 2
        assert!(assign_contacts(&[(2, 1)], 0, &mut [2]));
        assert!(!assign_contacts(&[(2, 1)], 0, &mut [1]));
        assert!(representable(0, &[]));
        assert!(!representable(1, &[]));
        assert!(representable(5, &[2, 3]));
        assert!(!representable(1, &[2]));
    }
}
