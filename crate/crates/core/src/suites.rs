//! Property suites run over catalogs of small binary matroids.
//!
//! Each suite checks one structural statement on every instance in scope and
//! counts how many instances the statement actually applied to, so that an
//! empty test set is reported as vacuous rather than as a pass.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bmx::emit_matroid;
use crate::enumerate::{catalog, CatalogEntry, CatalogFilter};
use crate::error::{Error, Result};
use crate::families::{construct, FamilySpec};
use crate::iso::are_isomorphic;
use crate::matroid::BinaryMatroid;
use crate::matroid::ElementSet;
use crate::minor::{has_minor_target, minor_ground_sets, Budget, MinorTarget, SearchLimits};
use crate::splitter::{exhaustive_removal_search, hypotheses_hold, Mode, RemovalKind};
use crate::structure::{connectivity_class, fans, is_four_fan, quads, triads, triangles, FanKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Every fan has connectivity at most 2.
    Fans3Sep,
    /// A 4-element side of a 3-separation of a 3-connected matroid is a quad or a 4-fan.
    Quad4Fan,
    /// Deleting any two elements of a quad gives isomorphic matroids.
    QuadIso,
    /// A 4-fan `(s1..s4)` gives an `N`-minor in `M\s1` or `M/s4`; the 5-fan clauses likewise.
    MinorsOf45Fans,
    /// Circuits and cocircuits meet in an even number of elements.
    EvenIntersection,
    /// The symmetric difference of two circuits is a disjoint union of circuits.
    CircuitSymDiff,
    /// Both binary axioms.
    BinaryAxioms,
    /// On hypothesis-passing pairs every triangle and triad survives in every `N`-minor.
    Persistence,
    /// Quad deletions and 4-fans in a minimal counterexample, checked on
    /// pairs that turn out to be counterexamples.
    CounterexampleLemmas,
    /// Deliberately false: every 4-element 3-separating set is a quad.
    SelfTest,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Fans3Sep,
        Suite::Quad4Fan,
        Suite::QuadIso,
        Suite::MinorsOf45Fans,
        Suite::EvenIntersection,
        Suite::CircuitSymDiff,
        Suite::BinaryAxioms,
        Suite::Persistence,
        Suite::CounterexampleLemmas,
        Suite::SelfTest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fans3Sep => "fans3sep",
            Suite::Quad4Fan => "quad4fan",
            Suite::QuadIso => "quadiso",
            Suite::MinorsOf45Fans => "minorsof45fans",
            Suite::EvenIntersection => "even-intersection",
            Suite::CircuitSymDiff => "circuit-symdiff",
            Suite::BinaryAxioms => "binary-axioms",
            Suite::Persistence => "persistence",
            Suite::CounterexampleLemmas => "counterexample-lemmas",
            Suite::SelfTest => "self-test",
        }
    }

    fn uses_pairs(self) -> bool {
        matches!(self, Suite::Persistence | Suite::CounterexampleLemmas)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .or(match s {
                "binary" => Some(Suite::BinaryAxioms),
                "nodeletequads" | "no4fans" => Some(Suite::CounterexampleLemmas),
                "selftest" | "weakened-quad4fan" => Some(Suite::SelfTest),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Extra inputs. `n` fixes the second matroid of pair suites and the target
/// of `minorsof45fans` (default AG(3,2)).
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: Option<BinaryMatroid>,
    pub limits: SearchLimits,
    pub mode: Mode,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n: None, limits: SearchLimits::default(), mode: Mode::Theorem }
    }
}

/// A failed check with enough data to re-run it by hand.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub instance: String,
    pub matroid: BinaryMatroid,
    pub witness: ElementSet,
    pub detail: String,
}

impl Counterexample {
    pub fn render(&self) -> String {
        let text = emit_matroid(&sanitize(&self.instance), &self.matroid).unwrap_or_default();
        let body: Vec<String> = text.lines().map(|l| format!("  {l}")).collect();
        format!(
            "counterexample instance={} witness={} detail={}\n{}",
            self.instance,
            self.matroid.format_set(self.witness),
            self.detail,
            body.join("\n")
        )
    }
}

fn sanitize(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_graphic() { c } else { '_' }).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Vacuous => "VACUOUS",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub scope: String,
    pub instances: usize,
    /// Instances on which the statement applied.
    pub triggered: usize,
    /// Individual checks performed.
    pub checks: usize,
    pub failures: Vec<Counterexample>,
    pub lines: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn verdict(&self) -> Verdict {
        if !self.failures.is_empty() {
            Verdict::Fail
        } else if self.triggered == 0 {
            Verdict::Vacuous
        } else {
            Verdict::Pass
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "suite={} scope={} instances={} triggered={} checks={} failures={} result={}",
            self.suite,
            self.scope,
            self.instances,
            self.triggered,
            self.checks,
            self.failures.len(),
            self.verdict()
        )
    }

    pub fn render(&self) -> String {
        let mut out: Vec<String> = self.lines.clone();
        out.extend(self.notes.iter().map(|n| format!("note {n}")));
        out.extend(self.failures.iter().map(Counterexample::render));
        out.push(self.summary());
        out.join("\n")
    }
}

struct Outcome {
    triggered: bool,
    checks: usize,
    failures: Vec<Counterexample>,
    line: String,
}

impl Outcome {
    fn new(name: &str) -> Self {
        Outcome { triggered: false, checks: 0, failures: Vec::new(), line: format!("instance={name}") }
    }

    fn fail(&mut self, name: &str, m: &BinaryMatroid, witness: ElementSet, detail: impl Into<String>) {
        self.failures.push(Counterexample {
            instance: name.to_string(),
            matroid: m.clone(),
            witness,
            detail: detail.into(),
        });
    }

    fn finish(mut self, extra: &str) -> Self {
        let status = if !self.failures.is_empty() {
            "FAIL"
        } else if self.triggered {
            "PASS"
        } else {
            "not-triggered"
        };
        self.line = format!("{} checks={} {extra}{status}", self.line, self.checks);
        self
    }
}

/// Builds the catalog for `scope` and runs `suite` on it.
pub fn verify_lemma_suite(suite: Suite, scope: &CatalogFilter, options: &SuiteOptions) -> Result<SuiteReport> {
    let entries = catalog(scope)?;
    verify_suite_on(suite, &scope.to_string(), &entries, options)
}

/// Runs `suite` over explicit instances; `scope` only labels the report.
pub fn verify_suite_on(
    suite: Suite,
    scope: &str,
    entries: &[CatalogEntry],
    options: &SuiteOptions,
) -> Result<SuiteReport> {
    let mut notes = Vec::new();
    let outcomes: Vec<Outcome> = if suite.uses_pairs() {
        let fixed = options.n.as_ref().map(|n| CatalogEntry { name: "N".to_string(), matroid: n.clone() });
        let pairs = hypothesis_pairs(entries, fixed.as_ref(), options)?;
        notes.push(format!("hypothesis_passing_pairs={}", pairs.len()));
        pairs
            .par_iter()
            .map(|&(m, n)| match suite {
                Suite::Persistence => persistence(m, n, options),
                _ => counterexample_lemmas(m, n, options),
            })
            .collect::<Result<_>>()?
    } else {
        let target = match suite {
            Suite::MinorsOf45Fans => {
                let n = match &options.n {
                    Some(n) => n.clone(),
                    None => construct(&FamilySpec::Ag32)?,
                };
                let class = connectivity_class(&n);
                let applies = class.is_internally_four_connected() && n.len() >= 8;
                notes.push(format!("target_size={} target_class={class} statement_applies={applies}", n.len()));
                if !applies {
                    notes.push(
                        "the target is not an internally 4-connected matroid with at least 8 elements, so \
                         conclusions below are informational and no instance counts as triggered"
                            .to_string(),
                    );
                }
                Some((n, applies))
            }
            _ => None,
        };
        entries
            .par_iter()
            .map(|e| match suite {
                Suite::Fans3Sep => Ok(fans3sep(e)),
                Suite::Quad4Fan => Ok(quad4fan(e, false)),
                Suite::SelfTest => Ok(quad4fan(e, true)),
                Suite::QuadIso => Ok(quadiso(e)),
                Suite::EvenIntersection => Ok(even_intersection(e)),
                Suite::CircuitSymDiff => Ok(circuit_symdiff(e)),
                Suite::BinaryAxioms => Ok(binary_axioms(e)),
                Suite::MinorsOf45Fans => {
                    let (n, applies) = target.as_ref().expect("target prepared above");
                    minors_of_45_fans(e, n, *applies, options)
                }
                Suite::Persistence | Suite::CounterexampleLemmas => unreachable!("pair suites handled above"),
            })
            .collect::<Result<_>>()?
    };
    let mut report = SuiteReport {
        suite,
        scope: scope.to_string(),
        instances: outcomes.len(),
        triggered: 0,
        checks: 0,
        failures: Vec::new(),
        lines: Vec::new(),
        notes,
    };
    for o in outcomes {
        report.triggered += o.triggered as usize;
        report.checks += o.checks;
        report.failures.extend(o.failures);
        report.lines.push(format!("suite={suite} {}", o.line));
    }
    Ok(report)
}

fn fans3sep(e: &CatalogEntry) -> Outcome {
    let m = &e.matroid;
    let mut out = Outcome::new(&e.name);
    for len in 3..=m.len() {
        let fs = fans(m, len);
        if fs.is_empty() {
            break;
        }
        out.triggered = true;
        for f in fs {
            out.checks += 1;
            let lambda = m.lambda_mask(f.set().bits());
            if !f.verify(m) || lambda > 2 {
                out.fail(&e.name, m, f.set(), format!("fan {} has lambda {lambda}", f.display(m)));
            }
        }
    }
    out.finish("")
}

/// All `k`-subsets of `0..n` as bit masks, in increasing order.
fn subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit && n > cur).then_some(n)
        };
        Some(cur)
    })
}

/// With `weakened`, the 4-fan alternative is dropped and sides of two
/// elements count; the resulting statement is false and must fail.
fn quad4fan(e: &CatalogEntry, weakened: bool) -> Outcome {
    let m = &e.matroid;
    let mut out = Outcome::new(&e.name);
    if !weakened && !crate::structure::is_three_connected(m) {
        return out.finish("skipped=not-3-connected ");
    }
    let tri: HashSet<ElementSet> = triangles(m).into_iter().collect();
    let tad: HashSet<ElementSet> = triads(m).into_iter().collect();
    let quad_sets: HashSet<ElementSet> = quads(m).into_iter().map(|q| q.elements).collect();
    let min_other = if weakened { 2 } else { 3 };
    if m.len() < 4 + min_other {
        return out.finish("");
    }
    for x in subsets(m.len(), 4).map(ElementSet) {
        if m.lambda_mask(x.bits()) > 2 {
            continue;
        }
        out.triggered = true;
        out.checks += 1;
        let is_quad = quad_sets.contains(&x);
        let ok = if weakened { is_quad } else { is_quad || is_four_fan(&tri, &tad, x) };
        if !ok {
            let what = if weakened { "not a quad" } else { "neither a quad nor a 4-fan" };
            let fan = if is_four_fan(&tri, &tad, x) { " (it is a 4-fan)" } else { "" };
            out.fail(&e.name, m, x, format!("3-separating 4-set {} is {what}{fan}", m.format_set(x)));
        }
    }
    out.finish("")
}

fn quadiso(e: &CatalogEntry) -> Outcome {
    let m = &e.matroid;
    let mut out = Outcome::new(&e.name);
    for q in quads(m) {
        out.triggered = true;
        let elems = q.elements.indices();
        let deletions: Vec<BinaryMatroid> = elems.iter().map(|&x| m.delete(x).expect("element of m")).collect();
        for i in 0..4 {
            for j in i + 1..4 {
                out.checks += 1;
                let ok = are_isomorphic(&deletions[i], &deletions[j])
                    .is_some_and(|w| w.verify(&deletions[i], &deletions[j]));
                if !ok {
                    out.fail(
                        &e.name,
                        m,
                        q.elements,
                        format!(
                            "deleting {} and {} from quad {} differ",
                            m.label(elems[i]),
                            m.label(elems[j]),
                            m.format_set(q.elements)
                        ),
                    );
                }
            }
        }
    }
    out.finish("")
}

fn even_intersection_into(e: &CatalogEntry, out: &mut Outcome) {
    let m = &e.matroid;
    let circuits = m.circuits(m.len());
    let cocircuits = m.cocircuits(m.len());
    out.triggered |= !circuits.is_empty() && !cocircuits.is_empty();
    for c in &circuits {
        for d in &cocircuits {
            out.checks += 1;
            let meet = c.intersection(*d);
            if meet.len() % 2 == 1 {
                out.fail(
                    &e.name,
                    m,
                    meet,
                    format!("circuit {} meets cocircuit {} in an odd set", m.format_set(*c), m.format_set(*d)),
                );
            }
        }
    }
}

fn even_intersection(e: &CatalogEntry) -> Outcome {
    let mut out = Outcome::new(&e.name);
    even_intersection_into(e, &mut out);
    out.finish("")
}

/// Splits `s` into disjoint circuits drawn from `circuits`, if possible.
fn circuit_partition(s: ElementSet, circuits: &[ElementSet]) -> Option<Vec<ElementSet>> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    let first = s.iter().next().expect("nonempty");
    for &c in circuits.iter().filter(|c| c.contains(first) && c.is_subset(s)) {
        if let Some(mut rest) = circuit_partition(s.difference(c), circuits) {
            rest.push(c);
            return Some(rest);
        }
    }
    None
}

fn circuit_symdiff_into(e: &CatalogEntry, out: &mut Outcome) {
    let m = &e.matroid;
    let circuits = m.circuits(m.len());
    out.triggered |= circuits.len() >= 2;
    for (i, a) in circuits.iter().enumerate() {
        for b in &circuits[i + 1..] {
            out.checks += 1;
            let d = a.symmetric_difference(*b);
            match circuit_partition(d, &circuits) {
                Some(parts) if parts.iter().fold(ElementSet::EMPTY, |acc, p| acc.union(*p)) == d => {}
                _ => out.fail(
                    &e.name,
                    m,
                    d,
                    format!("{} xor {} is not a disjoint union of circuits", m.format_set(*a), m.format_set(*b)),
                ),
            }
        }
    }
}

fn circuit_symdiff(e: &CatalogEntry) -> Outcome {
    let mut out = Outcome::new(&e.name);
    circuit_symdiff_into(e, &mut out);
    out.finish("")
}

fn binary_axioms(e: &CatalogEntry) -> Outcome {
    let mut out = Outcome::new(&e.name);
    even_intersection_into(e, &mut out);
    circuit_symdiff_into(e, &mut out);
    out.finish("")
}

/// Memoized "does `M \ del / con` have an `N`-minor".
struct MinorOracle<'a> {
    m: &'a BinaryMatroid,
    target: &'a MinorTarget,
    budget: Budget,
    memo: HashMap<(ElementSet, ElementSet), bool>,
}

impl<'a> MinorOracle<'a> {
    fn new(m: &'a BinaryMatroid, target: &'a MinorTarget, limits: SearchLimits) -> Self {
        MinorOracle { m, target, budget: Budget::new(limits), memo: HashMap::new() }
    }

    fn has(&mut self, del: &[usize], con: &[usize]) -> Result<bool> {
        let key = (ElementSet::from_indices(del.iter().copied()), ElementSet::from_indices(con.iter().copied()));
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let minor = self.m.minor(key.0, key.1)?;
        let v = has_minor_target(&minor, self.target, ElementSet::EMPTY, &mut self.budget)?.is_some();
        self.memo.insert(key, v);
        Ok(v)
    }
}

fn minors_of_45_fans(e: &CatalogEntry, n: &BinaryMatroid, applies: bool, options: &SuiteOptions) -> Result<Outcome> {
    let m = &e.matroid;
    let mut out = Outcome::new(&e.name);
    let four: Vec<_> = fans(m, 4).into_iter().filter(|f| f.kind == FanKind::FourFan).collect();
    let five: Vec<_> = fans(m, 5).into_iter().filter(|f| f.kind == FanKind::FiveFan).collect();
    if four.is_empty() && five.is_empty() {
        return Ok(out.finish("fans=0 "));
    }
    let target = MinorTarget::new(n);
    let mut oracle = MinorOracle::new(m, &target, options.limits);
    if !oracle.has(&[], &[])? {
        return Ok(out.finish(&format!("fans={} n_minor=no ", four.len() + five.len())));
    }
    out.triggered = applies;
    let mut informational_misses = 0;
    let mut record = |out: &mut Outcome, ok: bool, set: ElementSet, detail: String| {
        out.checks += 1;
        if !ok {
            if applies {
                out.fail(&e.name, m, set, detail);
            } else {
                informational_misses += 1;
            }
        }
    };
    for f in &four {
        let s = &f.elements;
        let ok = oracle.has(&[s[0]], &[])? || oracle.has(&[], &[s[3]])?;
        record(&mut out, ok, f.set(), format!("4-fan {}: neither M\\s1 nor M/s4 has an N-minor", f.display(m)));
    }
    for f in &five {
        let s = &f.elements;
        let both =
            oracle.has(&[s[0], s[4]], &[])? || (oracle.has(&[s[0]], &[s[1]])? && oracle.has(&[s[4]], &[s[3]])?);
        record(&mut out, both, f.set(), format!("5-fan {}: first clause fails", f.display(m)));
        let each = oracle.has(&[s[0]], &[])? && oracle.has(&[s[4]], &[])?;
        record(&mut out, each, f.set(), format!("5-fan {}: M\\s1 or M\\s5 lacks an N-minor", f.display(m)));
    }
    let extra = format!("fans={} n_minor=yes conclusion_misses={informational_misses} ", four.len() + five.len());
    Ok(out.finish(&extra))
}

/// Ordered pairs `(M, N)` of instances passing the splitter hypotheses
/// under `options.mode`, or `(M, options.n)` when `n` is given.
pub fn hypothesis_pairs<'a>(
    entries: &'a [CatalogEntry],
    fixed: Option<&'a CatalogEntry>,
    options: &SuiteOptions,
) -> Result<Vec<(&'a CatalogEntry, &'a CatalogEntry)>> {
    let mut candidates = Vec::new();
    for m in entries {
        match fixed {
            Some(n) => candidates.push((m, n)),
            None => candidates.extend(entries.iter().filter(|n| n.matroid.len() < m.matroid.len()).map(|n| (m, n))),
        }
    }
    let keep: Vec<bool> = candidates
        .par_iter()
        .map(|(m, n)| hypotheses_hold(&m.matroid, &n.matroid, options.mode, options.limits))
        .collect::<Result<_>>()?;
    Ok(candidates.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect())
}

fn pair_name(m: &CatalogEntry, n: &CatalogEntry) -> String {
    format!("{}>{}", m.name, n.name)
}

fn persistence(m: &CatalogEntry, n: &CatalogEntry, options: &SuiteOptions) -> Result<Outcome> {
    let name = pair_name(m, n);
    let mm = &m.matroid;
    let mut out = Outcome::new(&name);
    let small: Vec<ElementSet> = triangles(mm).into_iter().chain(triads(mm)).collect();
    if small.is_empty() {
        return Ok(out.finish("triangles_and_triads=0 "));
    }
    let grounds = minor_ground_sets(mm, &n.matroid, options.limits)?;
    out.triggered = !grounds.is_empty();
    for g in &grounds {
        for t in &small {
            out.checks += 1;
            if !t.is_subset(*g) {
                out.fail(
                    &name,
                    mm,
                    *t,
                    format!("{} is not inside the N-minor on {}", mm.format_set(*t), mm.format_set(*g)),
                );
            }
        }
    }
    Ok(out.finish(&format!("minors={} ", grounds.len())))
}

/// Configurations from the quad and fan lemmas: an element `e` with `M\e`
/// (4,4)-connected with an `N`-minor (or dually `M/e`). The lemmas describe
/// a minimal counterexample, so their conclusions are only required when
/// the pair has no splitter certificate; otherwise they are tallied.
fn counterexample_lemmas(m: &CatalogEntry, n: &CatalogEntry, options: &SuiteOptions) -> Result<Outcome> {
    let name = pair_name(m, n);
    let mm = &m.matroid;
    let mut out = Outcome::new(&name);
    let counterexample = exhaustive_removal_search(mm, &n.matroid, options.limits)?.is_none();
    let target = MinorTarget::new(&n.matroid);
    let mut oracle = MinorOracle::new(mm, &target, options.limits);
    let (mut configurations, mut conclusion_holds) = (0usize, 0usize);
    for e in 0..mm.len() {
        for kind in [RemovalKind::Delete, RemovalKind::Contract] {
            let first: (&[usize], &[usize]) = match kind {
                RemovalKind::Delete => (&[e], &[]),
                RemovalKind::Contract => (&[], &[e]),
            };
            let side = mm.minor(
                ElementSet::from_indices(first.0.iter().copied()),
                ElementSet::from_indices(first.1.iter().copied()),
            )?;
            if !connectivity_class(&side).is_four_four_connected() || !oracle.has(first.0, first.1)? {
                continue;
            }
            let back = |i: usize| mm.index_of(side.label(i)).expect("labels of a minor of M");
            let side_quads = quads(&side);
            // A 4-fan of M\e; dually a fan of M/e that starts with a triad.
            let bad_fans =
                fans(&side, 4).into_iter().filter(|f| f.starts_with_triangle == (kind == RemovalKind::Delete)).count();
            if side_quads.is_empty() && bad_fans == 0 {
                continue;
            }
            configurations += 1;
            let mut ok = bad_fans == 0;
            for q in &side_quads {
                for x in q.elements.iter().map(back) {
                    let (mut del, mut con) = (first.0.to_vec(), first.1.to_vec());
                    match kind {
                        RemovalKind::Delete => del.push(x),
                        RemovalKind::Contract => con.push(x),
                    }
                    ok &= !oracle.has(&del, &con)?;
                }
            }
            conclusion_holds += ok as usize;
            if counterexample {
                out.triggered = true;
                out.checks += 1;
                if !ok {
                    out.fail(
                        &name,
                        mm,
                        ElementSet::singleton(e),
                        format!("{kind} {}: lemma conclusion fails", mm.label(e)),
                    );
                }
            }
        }
    }
    Ok(out.finish(&format!(
        "counterexample={counterexample} configurations={configurations} conclusion_holds={conclusion_holds} "
    )))
}

/// A fixed 16-element rank-8 matroid `[I_8 | C]` where column `i` of `C`
/// is `e_i + e_{i+1} + e_{i+3}` (indices mod 8).
pub fn rank8_sixteen_instance() -> BinaryMatroid {
    let mut cols: Vec<u64> = (0..8).map(|i| 1 << i).collect();
    cols.extend((0..8).map(|i| 1 << i | 1 << ((i + 1) % 8) | 1 << ((i + 3) % 8)));
    let labels = (1..=16).map(|i| format!("e{i}")).collect();
    BinaryMatroid::from_columns(labels, 8, &cols).expect("16 columns over 8 rows")
}
