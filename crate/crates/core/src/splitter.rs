//! Removing one or two elements from an internally 4-connected `M` while
//! keeping internal 4-connectivity and an `N`-minor.
//!
//! The search tries a candidate element first, then the fan and quad moves
//! that usually finish the job, and finally every removal sequence of length
//! one or two. Every certificate is re-verified before it is returned.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::families::{construct, FamilySpec};
use crate::iso::{are_isomorphic, IsoWitness};
use crate::matroid::{BinaryMatroid, ElementSet};
use crate::minor::{has_minor_target, Budget, MinorCertificate, MinorTarget, SearchLimits};
use crate::structure::{connectivity_class, fans, quads, triads, triangles, ConnectivityClass};

/// Theorem mode enforces `|E(N)| >= 7`; oracle mode drops the size threshold
/// so that small instances can still be compared against the blind search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Theorem,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RemovalKind {
    Delete,
    Contract,
}

impl RemovalKind {
    pub fn dual(self) -> Self {
        match self {
            RemovalKind::Delete => RemovalKind::Contract,
            RemovalKind::Contract => RemovalKind::Delete,
        }
    }
}

impl fmt::Display for RemovalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RemovalKind::Delete => "delete",
            RemovalKind::Contract => "contract",
        })
    }
}

/// One step of a removal sequence; `element` indexes the ground set of `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Removal {
    pub element: usize,
    pub kind: RemovalKind,
}

impl Removal {
    pub fn delete(element: usize) -> Self {
        Removal { element, kind: RemovalKind::Delete }
    }

    pub fn contract(element: usize) -> Self {
        Removal { element, kind: RemovalKind::Contract }
    }
}

fn removal_sets(removals: &[Removal]) -> (ElementSet, ElementSet) {
    removals.iter().fold((ElementSet::EMPTY, ElementSet::EMPTY), |(d, c), r| match r.kind {
        RemovalKind::Delete => (d.with(r.element), c),
        RemovalKind::Contract => (d, c.with(r.element)),
    })
}

fn format_removals(m: &BinaryMatroid, removals: &[Removal]) -> String {
    let parts: Vec<String> = removals.iter().map(|r| format!("{} {}", r.kind, m.label(r.element))).collect();
    parts.join(", ")
}

/// Whether deleting (or contracting) `element` of the triangle (or triad)
/// `set` leaves an `N`-minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementCheck {
    pub set: ElementSet,
    pub element: usize,
    pub violated: bool,
}

#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub proper_minor: bool,
    pub minor_certificate: Option<MinorCertificate>,
    pub n_size_ok: bool,
    pub m_class: ConnectivityClass,
    pub n_class: ConnectivityClass,
    pub m_i4c: bool,
    pub n_i4c: bool,
    pub triangle_condition: Vec<ElementCheck>,
    pub triad_condition: Vec<ElementCheck>,
}

impl HypothesisReport {
    pub fn triangle_condition_holds(&self) -> bool {
        self.triangle_condition.iter().all(|c| !c.violated)
    }

    pub fn triad_condition_holds(&self) -> bool {
        self.triad_condition.iter().all(|c| !c.violated)
    }

    pub fn passes(&self, mode: Mode) -> bool {
        self.failures(mode).is_empty()
    }

    /// Human-readable reasons the hypotheses fail, empty when they hold.
    pub fn failures(&self, mode: Mode) -> Vec<String> {
        let mut out = Vec::new();
        if !self.proper_minor {
            out.push("N is not isomorphic to a proper minor of M".to_string());
        }
        if mode == Mode::Theorem && !self.n_size_ok {
            out.push("|E(N)| < 7".to_string());
        }
        if !self.m_i4c {
            out.push(format!("M is {}", self.m_class));
        }
        if !self.n_i4c {
            out.push(format!("N is {}", self.n_class));
        }
        if !self.triangle_condition_holds() {
            out.push("deleting an element of a triangle keeps an N-minor".to_string());
        }
        if !self.triad_condition_holds() {
            out.push("contracting an element of a triad keeps an N-minor".to_string());
        }
        out
    }

    pub fn display(&self, m: &BinaryMatroid) -> String {
        let mut lines = vec![
            format!("proper_minor={}", self.proper_minor),
            format!("n_size_ok={}", self.n_size_ok),
            format!("m_class={}", self.m_class),
            format!("n_class={}", self.n_class),
        ];
        for (name, checks) in [("triangle", &self.triangle_condition), ("triad", &self.triad_condition)] {
            for c in checks {
                lines.push(format!(
                    "{name}={} element={} violated={}",
                    m.format_set(c.set),
                    m.label(c.element),
                    c.violated
                ));
            }
        }
        lines.join("\n")
    }
}

/// Evaluates every hypothesis of the splitter theorem for `(m, n)`.
pub fn check_hypotheses(m: &BinaryMatroid, n: &BinaryMatroid, limits: SearchLimits) -> Result<HypothesisReport> {
    let mut budget = Budget::new(limits);
    let target = MinorTarget::new(n);
    report(m, n, &target, &mut budget, false)
}

/// Cheap checks first; with `stop_early` the triangle and triad lists end at
/// the first violation.
fn report(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    target: &MinorTarget,
    budget: &mut Budget,
    stop_early: bool,
) -> Result<HypothesisReport> {
    let m_class = connectivity_class(m);
    let n_class = connectivity_class(n);
    let mut rep = HypothesisReport {
        proper_minor: false,
        minor_certificate: None,
        n_size_ok: n.len() >= 7,
        m_class,
        n_class,
        m_i4c: m_class.is_internally_four_connected(),
        n_i4c: n_class.is_internally_four_connected(),
        triangle_condition: Vec::new(),
        triad_condition: Vec::new(),
    };
    if stop_early && !(rep.m_i4c && rep.n_i4c && n.len() < m.len()) {
        return Ok(rep);
    }
    if n.len() < m.len() {
        rep.minor_certificate = has_minor_target(m, target, ElementSet::EMPTY, budget)?;
        rep.proper_minor = rep.minor_certificate.is_some();
    }
    if stop_early && !rep.proper_minor {
        return Ok(rep);
    }
    for (sets, kind) in [(triangles(m), RemovalKind::Delete), (triads(m), RemovalKind::Contract)] {
        let mut memo: Vec<Option<bool>> = vec![None; m.len()];
        for set in sets {
            for e in set.iter() {
                let violated = match memo[e] {
                    Some(v) => v,
                    None => {
                        let (del, con) = removal_sets(&[Removal { element: e, kind }]);
                        let v = has_minor_target(&m.minor(del, con)?, target, ElementSet::EMPTY, budget)?.is_some();
                        memo[e] = Some(v);
                        v
                    }
                };
                let list = match kind {
                    RemovalKind::Delete => &mut rep.triangle_condition,
                    RemovalKind::Contract => &mut rep.triad_condition,
                };
                list.push(ElementCheck { set, element: e, violated });
                if violated && stop_early {
                    return Ok(rep);
                }
            }
        }
    }
    Ok(rep)
}

/// Fast yes/no form of [`check_hypotheses`] for sweeps over many pairs.
pub fn hypotheses_hold(m: &BinaryMatroid, n: &BinaryMatroid, mode: Mode, limits: SearchLimits) -> Result<bool> {
    if mode == Mode::Theorem && n.len() < 7 {
        return Ok(false);
    }
    let mut budget = Budget::new(limits);
    let target = MinorTarget::new(n);
    Ok(report(m, n, &target, &mut budget, true)?.passes(mode))
}

/// Outcome of the candidate-element search or the family classification.
#[derive(Clone, Debug)]
pub enum DichotomyResult {
    /// `M \ e` or `M / e` is (4,4)-connected with an `N`-minor.
    Candidate {
        element: usize,
        kind: RemovalKind,
        class: ConnectivityClass,
        certificate: MinorCertificate,
    },
    /// `M` (or `M*` when `dualized`) is isomorphic to the family member; the
    /// witness maps that matroid onto `construct(spec)`.
    Family {
        spec: FamilySpec,
        dualized: bool,
        witness: IsoWitness,
    },
    Neither(String),
}

impl DichotomyResult {
    /// Re-derives the claim from scratch. `n` is needed for candidates.
    pub fn verify(&self, m: &BinaryMatroid, n: Option<&BinaryMatroid>) -> bool {
        match self {
            DichotomyResult::Candidate { element, kind, class, certificate } => {
                let Some(n) = n else { return false };
                let Ok(side) = single_removal(m, Removal { element: *element, kind: *kind }) else {
                    return false;
                };
                let actual = connectivity_class(&side);
                actual == *class && actual.is_four_four_connected() && certificate.verify(&side, n)
            }
            DichotomyResult::Family { spec, dualized, witness } => {
                let Ok(fam) = construct(spec) else { return false };
                let source = if *dualized { m.dual() } else { m.clone() };
                witness.verify(&source, &fam)
            }
            DichotomyResult::Neither(_) => true,
        }
    }

    pub fn display(&self, m: &BinaryMatroid) -> String {
        match self {
            DichotomyResult::Candidate { element, kind, class, .. } => {
                format!("kind=candidate element={} side={kind} class={class}", m.label(*element))
            }
            DichotomyResult::Family { spec, dualized, .. } => {
                format!("kind=family family={} n={} dualized={dualized}", spec.name(), spec.parameter().unwrap_or(0))
            }
            DichotomyResult::Neither(why) => format!("kind=neither reason={why}"),
        }
    }
}

fn single_removal(m: &BinaryMatroid, r: Removal) -> Result<BinaryMatroid> {
    let (del, con) = removal_sets(&[r]);
    m.minor(del, con)
}

type Ladder = fn(usize) -> FamilySpec;

/// Tests `m` and its dual against the four ladder families at the one
/// parameter compatible with `|E(m)|`.
pub fn zhou_dichotomy_classify(m: &BinaryMatroid) -> DichotomyResult {
    let size = m.len();
    let (n, specs): (usize, [Ladder; 2]) = match size % 3 {
        0 => (size / 3, [FamilySpec::Biwheel, FamilySpec::MobiusDeltaMinusZ]),
        1 => (size / 3, [FamilySpec::BiwheelPlus, FamilySpec::MobiusDelta]),
        _ => return DichotomyResult::Neither(format!("{size} elements is not 3n or 3n+1")),
    };
    if n < 4 {
        return DichotomyResult::Neither(format!("{size} elements is below the smallest family member"));
    }
    let dual = m.dual();
    for dualized in [false, true] {
        let source = if dualized { &dual } else { m };
        for make in specs {
            let spec = make(n);
            let Ok(fam) = construct(&spec) else { continue };
            if let Some(witness) = are_isomorphic(source, &fam) {
                return DichotomyResult::Family { spec, dualized, witness };
            }
        }
    }
    DichotomyResult::Neither(format!("not isomorphic to a ladder family member with n={n} or its dual"))
}

/// Scans elements in label order for a removal leaving a (4,4)-connected
/// matroid with an `N`-minor, deletion before contraction. Falls back to the
/// family classification when no element works. No hypotheses are checked.
pub fn candidate_scan(m: &BinaryMatroid, n: &BinaryMatroid, limits: SearchLimits) -> Result<DichotomyResult> {
    let mut budget = Budget::new(limits);
    let target = MinorTarget::new(n);
    if let Some(c) = scan(m, &target, &mut budget, |_, _| false)? {
        return Ok(c);
    }
    Ok(match zhou_dichotomy_classify(m) {
        DichotomyResult::Neither(why) => {
            DichotomyResult::Neither(format!("no single removal is (4,4)-connected with an N-minor; {why}"))
        }
        family => family,
    })
}

/// Like [`candidate_scan`], after requiring the hypotheses to hold.
pub fn find_candidate_element(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    mode: Mode,
    limits: SearchLimits,
) -> Result<DichotomyResult> {
    let rep = check_hypotheses(m, n, limits)?;
    if !rep.passes(mode) {
        return Err(Error::Precondition(rep.failures(mode).join("; ")));
    }
    candidate_scan(m, n, limits)
}

/// `stop(side, class)` may end the scan early at a removal that is already
/// good enough; the candidate returned is then that removal.
fn scan(
    m: &BinaryMatroid,
    target: &MinorTarget,
    budget: &mut Budget,
    mut stop: impl FnMut(&BinaryMatroid, ConnectivityClass) -> bool,
) -> Result<Option<DichotomyResult>> {
    let mut first = None;
    for element in 0..m.len() {
        for kind in [RemovalKind::Delete, RemovalKind::Contract] {
            let side = single_removal(m, Removal { element, kind })?;
            let class = connectivity_class(&side);
            if !class.is_four_four_connected() {
                continue;
            }
            if let Some(certificate) = has_minor_target(&side, target, ElementSet::EMPTY, budget)? {
                let found = DichotomyResult::Candidate { element, kind, class, certificate };
                if stop(&side, class) {
                    return Ok(Some(found));
                }
                first.get_or_insert(found);
            }
        }
    }
    Ok(first)
}

/// Which part of the search produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// The candidate removal is already internally 4-connected.
    Candidate,
    /// Candidate removal followed by the end of a 4-fan.
    FanEnd,
    /// Candidate removal followed by an element of a quad.
    QuadElement,
    /// Blind search over all removal sequences.
    Exhaustive,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Candidate => "candidate",
            Strategy::FanEnd => "fan-end",
            Strategy::QuadElement => "quad-element",
            Strategy::Exhaustive => "exhaustive",
        })
    }
}

/// An internally 4-connected minor `M'` of `M` with an `N`-minor, reached by
/// one or two removals.
#[derive(Clone, Debug)]
pub struct SplitterCertificate {
    pub removals: Vec<Removal>,
    pub result: BinaryMatroid,
    pub class: ConnectivityClass,
    pub minor_certificate: MinorCertificate,
    pub strategy: Strategy,
}

impl SplitterCertificate {
    /// Replays the removals, recomputes the connectivity class and replays
    /// the minor certificate.
    pub fn verify(&self, m: &BinaryMatroid, n: &BinaryMatroid) -> bool {
        let k = self.removals.len();
        if !(1..=2).contains(&k) || self.removals.iter().any(|r| r.element >= m.len()) {
            return false;
        }
        if k == 2 && self.removals[0].element == self.removals[1].element {
            return false;
        }
        let (del, con) = removal_sets(&self.removals);
        let Ok(replayed) = m.minor(del, con) else { return false };
        if replayed.labels() != self.result.labels() || !replayed.same_matroid(&self.result) {
            return false;
        }
        let class = connectivity_class(&replayed);
        class == self.class && class.is_internally_four_connected() && self.minor_certificate.verify(&replayed, n)
    }

    pub fn size_drop(&self, m: &BinaryMatroid) -> usize {
        m.len() - self.result.len()
    }

    pub fn display(&self, m: &BinaryMatroid, n: &BinaryMatroid) -> String {
        format!(
            "removals={}\nstrategy={}\nresult_size={}\nresult_rank={}\nresult_class={}\nminor={}",
            format_removals(m, &self.removals),
            self.strategy,
            self.result.len(),
            self.result.rank(),
            self.class,
            self.minor_certificate.display(&self.result, n)
        )
    }
}

/// Every sequence of one or two removals, singles first, deletions before
/// contractions, elements in label order.
pub fn removal_sequences(size: usize) -> Vec<Vec<Removal>> {
    let mut out = Vec::new();
    for kind in [RemovalKind::Delete, RemovalKind::Contract] {
        for e in 0..size {
            out.push(vec![Removal { element: e, kind }]);
        }
    }
    let kinds = [
        (RemovalKind::Delete, RemovalKind::Delete),
        (RemovalKind::Delete, RemovalKind::Contract),
        (RemovalKind::Contract, RemovalKind::Delete),
        (RemovalKind::Contract, RemovalKind::Contract),
    ];
    for (k1, k2) in kinds {
        for a in 0..size {
            for b in a + 1..size {
                out.push(vec![Removal { element: a, kind: k1 }, Removal { element: b, kind: k2 }]);
            }
        }
    }
    out
}

struct Attempts<'a> {
    m: &'a BinaryMatroid,
    target: &'a MinorTarget,
    tried: HashSet<(ElementSet, ElementSet)>,
    transcript: Vec<String>,
}

impl Attempts<'_> {
    fn attempt(
        &mut self,
        removals: Vec<Removal>,
        strategy: Strategy,
        budget: &mut Budget,
    ) -> Result<Option<SplitterCertificate>> {
        let (del, con) = removal_sets(&removals);
        if !self.tried.insert((del, con)) {
            return Ok(None);
        }
        let result = self.m.minor(del, con)?;
        let class = connectivity_class(&result);
        let mut minor = None;
        if class.is_internally_four_connected() {
            minor = has_minor_target(&result, self.target, ElementSet::EMPTY, budget)?;
        }
        self.transcript.push(format!(
            "{}: class={class} n_minor={}",
            format_removals(self.m, &removals),
            if class.is_internally_four_connected() {
                if minor.is_some() {
                    "yes"
                } else {
                    "no"
                }
            } else {
                "unchecked"
            }
        ));
        Ok(minor.map(|minor_certificate| SplitterCertificate { removals, result, class, minor_certificate, strategy }))
    }
}

/// Blind search over [`removal_sequences`], returning the first success.
/// Hypotheses are not checked.
pub fn exhaustive_removal_search(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    limits: SearchLimits,
) -> Result<Option<SplitterCertificate>> {
    let mut budget = Budget::new(limits);
    let target = MinorTarget::new(n);
    let mut att = Attempts { m, target: &target, tried: HashSet::new(), transcript: Vec::new() };
    for seq in removal_sequences(m.len()) {
        if let Some(c) = att.attempt(seq, Strategy::Exhaustive, &mut budget)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// The splitter step. Requires the hypotheses (per `mode`) and returns a
/// verified certificate, or [`Error::NoCertificate`] with the full transcript
/// of removal sequences tried.
pub fn splitter_step(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    mode: Mode,
    limits: SearchLimits,
) -> Result<SplitterCertificate> {
    let mut budget = Budget::new(limits);
    let target = MinorTarget::new(n);
    let rep = report(m, n, &target, &mut budget, true)?;
    if !rep.passes(mode) {
        return Err(Error::Precondition(rep.failures(mode).join("; ")));
    }
    let cert = search_certificate(m, &target, &mut budget)?;
    if !cert.verify(m, n) {
        return Err(Error::NoCertificate(format!(
            "internal error: certificate {} failed verification",
            format_removals(m, &cert.removals)
        )));
    }
    Ok(cert)
}

fn search_certificate(m: &BinaryMatroid, target: &MinorTarget, budget: &mut Budget) -> Result<SplitterCertificate> {
    let mut att = Attempts { m, target, tried: HashSet::new(), transcript: Vec::new() };
    let candidate = scan(m, target, budget, |_, class| class.is_internally_four_connected())?;
    if let Some(DichotomyResult::Candidate { element, kind, .. }) = candidate {
        let first = Removal { element, kind };
        if let Some(c) = att.attempt(vec![first], Strategy::Candidate, budget)? {
            return Ok(c);
        }
        for second in follow_ups(m, first)? {
            let (removals, strategy) = second;
            if let Some(c) = att.attempt(removals, strategy, budget)? {
                return Ok(c);
            }
        }
    }
    for seq in removal_sequences(m.len()) {
        if let Some(c) = att.attempt(seq, Strategy::Exhaustive, budget)? {
            return Ok(c);
        }
    }
    Err(Error::NoCertificate(format!(
        "no sequence of one or two removals gives an internally 4-connected minor with an N-minor; tried:\n{}",
        att.transcript.join("\n")
    )))
}

/// Second removals suggested by the structure of `M \ e` (or `M / e`):
/// the end of each 4-fan, then each element of each quad. In `M \ e` a fan
/// starting with a triangle ends in an element to contract; dually for `M / e`.
fn follow_ups(m: &BinaryMatroid, first: Removal) -> Result<Vec<(Vec<Removal>, Strategy)>> {
    let side = single_removal(m, first)?;
    let back = |i: usize| m.index_of(side.label(i)).expect("minor labels come from M");
    let mut out = Vec::new();
    for f in fans(&side, 4) {
        let d = back(*f.elements.last().expect("4 elements"));
        let kind = if f.starts_with_triangle == (first.kind == RemovalKind::Delete) {
            RemovalKind::Contract
        } else {
            RemovalKind::Delete
        };
        out.push((vec![first, Removal { element: d, kind }], Strategy::FanEnd));
    }
    for q in quads(&side) {
        for x in q.elements.iter() {
            for kind in [first.kind.dual(), first.kind] {
                out.push((vec![first, Removal { element: back(x), kind }], Strategy::QuadElement));
            }
        }
    }
    for (seq, _) in &mut out {
        seq.sort();
    }
    Ok(out)
}
