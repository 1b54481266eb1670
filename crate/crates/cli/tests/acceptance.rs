//! Acceptance run: one line per criterion, `PASS` or `FAIL`, with timings.
//!
//! Runs without the libtest harness so the lines always reach the terminal.
//! The process fails if any criterion fails, except criterion 5 whose
//! failure is a known defect of its stated target; that criterion still
//! prints FAIL and the run asserts the documented outcome exactly.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use binmat_core::bmx::{emit_matroid, MatroidFile};
use binmat_core::enumerate::{catalog, CatalogEntry, CatalogFilter};
use binmat_core::oracle::{brute_class, brute_has_minor, brute_isomorphic, brute_violator, RankTable};
use binmat_core::splitter::{exhaustive_removal_search, splitter_step, Mode};
use binmat_core::structure::{triads, triangles};
use binmat_core::suites::{hypothesis_pairs, verify_suite_on, Suite, SuiteOptions, Verdict};
use binmat_core::{
    are_isomorphic, connectivity_class, construct, find_violator, graphic_from_edges, has_minor, BinaryMatroid,
    ElementSet, FamilySpec, SearchLimits,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn scope(s: &str) -> CatalogFilter {
    s.parse().expect("valid scope")
}

fn ladder(n: usize) -> [FamilySpec; 4] {
    [FamilySpec::Biwheel(n), FamilySpec::BiwheelPlus(n), FamilySpec::MobiusDelta(n), FamilySpec::MobiusDeltaMinusZ(n)]
}

fn within(elapsed: Duration, budget: Duration) -> bool {
    elapsed <= budget
}

fn family_fidelity() -> Outcome {
    let start = Instant::now();
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut bad = Vec::new();
    let mut compared = 0;
    for n in 4..=8 {
        for spec in [FamilySpec::BiwheelPlus(n), FamilySpec::MobiusDelta(n)] {
            let m = construct(&spec).unwrap();
            let name = format!("{}{n}", spec.name());
            let golden = std::fs::read_to_string(dir.join(format!("{name}.bmx"))).unwrap();
            let shape = m.len() == 3 * n + 1 && m.rank() == n + 1 && m.rep().rows() == n + 1;
            if !shape || emit_matroid(&name, &m).unwrap() != golden {
                bad.push(name);
            }
            compared += 1;
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && within(elapsed, Duration::from_secs(1));
    Outcome::new(pass, format!("golden_files={compared} mismatches={bad:?} time={elapsed:.2?} budget=1s"))
}

fn family_structure() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut checked = 0;
    let mut brute_checked = 0;
    for n in 4..=8 {
        for spec in ladder(n) {
            let m = construct(&spec).unwrap();
            for (dual, x) in [(false, m.clone()), (true, m.dual())] {
                let tag = format!("{spec}{}", if dual { "*" } else { "" });
                let class = connectivity_class(&x);
                if !class.is_internally_four_connected() {
                    problems.push(format!("{tag} is {class}"));
                }
                let covered = triangles(&x).into_iter().chain(triads(&x)).fold(ElementSet::EMPTY, |a, s| a.union(s));
                if covered != x.ground() {
                    problems.push(format!("{tag} uncovered {}", x.format_set(x.ground().difference(covered))));
                }
                if n == 4 {
                    let b = brute_class(&x);
                    if b != class {
                        problems.push(format!("{tag} subset scan says {b}"));
                    }
                    brute_checked += 1;
                }
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = problems.is_empty() && within(elapsed, Duration::from_secs(300));
    Outcome::new(
        pass,
        format!("matroids={checked} subset_scan_confirmed={brute_checked} problems={problems:?} time={elapsed:.2?} budget=5min"),
    )
}

fn cross_construction() -> Outcome {
    let start = Instant::now();
    // Vertices 0..3 form the cycle, 4 and 5 are the hubs u and v.
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for i in 0..4 {
        edges.push((4, i));
        edges.push((5, i));
    }
    edges.push((4, 5));
    let g = graphic_from_edges(6, &edges).unwrap();
    let d = construct(&FamilySpec::BiwheelPlus(4)).unwrap();
    let witness = are_isomorphic(&g, &d);
    let verified = witness.as_ref().is_some_and(|w| w.verify(&g, &d));
    let elapsed = start.elapsed();
    let brute = brute_isomorphic(&RankTable::of(&g), &RankTable::of(&d));
    let pass = verified && brute && within(elapsed, Duration::from_secs(1));
    Outcome::new(
        pass,
        format!("witness_verified={verified} circuit_search_agrees={brute} time={elapsed:.2?} budget=1s"),
    )
}

const LEMMA_SCOPE: &str = "rank<=4,size<=10,3connected,cosimple";

fn lemma_suites() -> Outcome {
    let start = Instant::now();
    let filter = scope(LEMMA_SCOPE);
    let entries = catalog(&filter).unwrap();
    let fano = construct(&FamilySpec::Fano).unwrap();
    let has_fano = entries.iter().any(|e| are_isomorphic(&e.matroid, &fano).is_some());
    let options = SuiteOptions::default();
    let mut pass = has_fano;
    let mut parts = vec![format!("instances={} fano_present={has_fano}", entries.len())];
    for suite in [Suite::Fans3Sep, Suite::Quad4Fan, Suite::QuadIso, Suite::EvenIntersection, Suite::CircuitSymDiff] {
        let r = verify_suite_on(suite, LEMMA_SCOPE, &entries, &options).unwrap();
        pass &= r.verdict() == Verdict::Pass && r.triggered > 0;
        parts.push(format!("{suite}:{}/triggered={}/checks={}", r.verdict(), r.triggered, r.checks));
    }
    let st = verify_suite_on(Suite::SelfTest, LEMMA_SCOPE, &entries, &options).unwrap();
    pass &= st.verdict() == Verdict::Fail;
    parts.push(format!("self-test:refuted={}", st.verdict() == Verdict::Fail));
    let elapsed = start.elapsed();
    pass &= within(elapsed, Duration::from_secs(600));
    parts.push(format!("time={elapsed:.2?} budget=10min"));
    Outcome::new(pass, parts.join(" "))
}

const FAN_SCOPE: &str = "rank<=6,size<=13,duals";

/// Number of instances with a fan and an `N`-minor, and conclusion misses among them.
fn fan_conclusions(lines: &[String]) -> (usize, usize) {
    let with_minor: Vec<&String> = lines.iter().filter(|l| l.contains("n_minor=yes")).collect();
    let misses = with_minor.iter().filter(|l| !l.contains("conclusion_misses=0")).count();
    (with_minor.len(), misses)
}

/// Returns the outcome and whether it matches the documented analysis of the
/// stated target.
fn minors_of_fans() -> (Outcome, bool) {
    let start = Instant::now();
    let ag32 = construct(&FamilySpec::Ag32).unwrap();
    let class = connectivity_class(&ag32);
    let precheck = class.is_internally_four_connected();
    let filter = scope(FAN_SCOPE);
    let entries = catalog(&filter).unwrap();
    let with = |n: &BinaryMatroid| {
        let options = SuiteOptions { n: Some(n.clone()), ..SuiteOptions::default() };
        verify_suite_on(Suite::MinorsOf45Fans, FAN_SCOPE, &entries, &options).unwrap()
    };
    let r = with(&ag32);
    let (instances, misses) = fan_conclusions(&r.lines);
    let vacuous = entries.len() - instances;
    let sub = entries.iter().find(|e| e.name == "r5n9#28").expect("substitute in scope").matroid.clone();
    let sub_class = connectivity_class(&sub);
    let rs = with(&sub);
    let elapsed = start.elapsed();
    let in_time = within(elapsed, Duration::from_secs(900));
    let pass = precheck && r.verdict() == Verdict::Pass && misses == 0 && in_time;
    let documented = !precheck
        && class.is_four_four_connected()
        && r.verdict() == Verdict::Vacuous
        && instances > 0
        && misses == 0
        && sub_class.is_internally_four_connected()
        && rs.verdict() == Verdict::Pass
        && rs.triggered > 0
        && in_time;
    let detail = format!(
        "ag32_class={class} i4c_precheck={} | N=ag32 over {FAN_SCOPE}: instances={} with_fan_and_minor={instances} \
         conclusion_misses={misses} vacuous={vacuous} suite_verdict={} | i4c substitute N=r5n9#28 ({sub_class}): \
         {}/triggered={}/checks={} | time={elapsed:.2?} budget=15min",
        if precheck { "pass" } else { "fail" },
        r.instances,
        r.verdict(),
        rs.verdict(),
        rs.triggered,
        rs.checks
    );
    (Outcome::new(pass, detail), documented)
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let entries = catalog(&scope("rank<=6,size<=10,duals")).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut pairs = Vec::new();
    while pairs.len() < 200 {
        let m = entries.choose(&mut rng).unwrap();
        let n = entries.choose(&mut rng).unwrap();
        if n.matroid.len() <= m.matroid.len() && m.matroid.len() - n.matroid.len() <= 3 {
            pairs.push((m, n));
        }
    }
    let minor_results: Vec<(bool, Option<String>)> = pairs
        .par_iter()
        .map(|(m, n)| {
            let fast = has_minor(&m.matroid, &n.matroid, ElementSet::EMPTY, SearchLimits::unlimited()).unwrap();
            let blind = brute_has_minor(&m.matroid, &n.matroid);
            let ok = fast.as_ref().is_none_or(|c| c.verify(&m.matroid, &n.matroid)) && fast.is_some() == blind;
            (blind, (!ok).then(|| format!("{}>{}", m.name, n.name)))
        })
        .collect();
    let positives = minor_results.iter().filter(|r| r.0).count();
    let minor_disagree: Vec<String> = minor_results.into_iter().filter_map(|r| r.1).collect();
    let violator_disagree: Vec<String> = entries
        .par_iter()
        .flat_map_iter(|e| {
            [3, 4].into_iter().filter_map(move |k| {
                let fast = find_violator(&e.matroid, k);
                let ok = fast.is_some_and(|s| s.is_violator(&e.matroid, k)) == brute_violator(&e.matroid, k).is_some();
                (!ok).then(|| format!("{} k={k}", e.name))
            })
        })
        .collect();
    let elapsed = start.elapsed();
    Outcome::new(
        minor_disagree.is_empty() && violator_disagree.is_empty(),
        format!(
            "minor_pairs=200 minor_positive={positives} minor_disagreements={minor_disagree:?} violator_matroids={} \
             violator_disagreements={violator_disagree:?} time={elapsed:.2?}",
            entries.len()
        ),
    )
}

const DESK_SCOPE: &str = "rank<=6,size<=13,i4c,duals";

fn desk_theorem() -> Outcome {
    let start = Instant::now();
    let entries: Vec<CatalogEntry> = catalog(&scope(DESK_SCOPE)).unwrap();
    let options = SuiteOptions::default();
    let pairs = hypothesis_pairs(&entries, None, &options).unwrap();
    let pair_time = start.elapsed();
    if pairs.is_empty() {
        return Outcome::new(true, format!("VACUOUS: no hypothesis-passing pairs in {DESK_SCOPE}"));
    }
    let results: Vec<Result<(usize, String), String>> = pairs
        .par_iter()
        .map(|(m, n)| {
            let name = format!("{}>{}", m.name, n.name);
            let (m, n) = (&m.matroid, &n.matroid);
            let cert =
                splitter_step(m, n, Mode::Theorem, SearchLimits::default()).map_err(|e| format!("{name}: {e}"))?;
            let drop = cert.size_drop(m);
            if !cert.verify(m, n) || !(1..=2).contains(&drop) {
                return Err(format!("{name}: certificate does not replay"));
            }
            let blind = exhaustive_removal_search(m, n, SearchLimits::default())
                .map_err(|e| format!("{name}: oracle {e}"))?
                .ok_or_else(|| format!("{name}: oracle finds no removal"))?;
            if !blind.verify(m, n) || blind.size_drop(m) > drop {
                return Err(format!("{name}: oracle disagrees"));
            }
            Ok((drop, cert.strategy.to_string()))
        })
        .collect();
    let mut drops = BTreeMap::new();
    let mut strategies = BTreeMap::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok((d, s)) => {
                *drops.entry(d).or_insert(0) += 1;
                *strategies.entry(s).or_insert(0) += 1;
            }
            Err(e) => errors.push(e),
        }
    }
    let elapsed = start.elapsed();
    let pass = errors.is_empty() && within(elapsed, Duration::from_secs(7200));
    errors.truncate(5);
    Outcome::new(
        pass,
        format!(
            "catalog={DESK_SCOPE} entries={} hypothesis_pairs={} size_drops={drops:?} strategies={strategies:?} \
             errors={errors:?} pair_scan={pair_time:.2?} time={elapsed:.2?} budget=2h",
            entries.len(),
            pairs.len()
        ),
    )
}

fn performance_floor() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_binmat")).args(["bench", "--seconds", "1"]).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let rate = text.lines().find_map(|l| l.strip_prefix("rank_queries_per_sec=")).and_then(|v| v.parse::<f64>().ok());
    match rate {
        Some(r) => Outcome::new(out.status.success() && r >= 1e5, format!("rank_queries_per_sec={r:.0} floor=100000")),
        None => Outcome::new(false, format!("bench output unreadable: {text}")),
    }
}

fn round_trip_one(name: &str, m: &BinaryMatroid) -> bool {
    let text = emit_matroid(name, m).unwrap();
    match MatroidFile::parse(&text) {
        Ok(f) => f.name == name && &f.matroid == m && emit_matroid(name, &f.matroid).unwrap() == text,
        Err(_) => false,
    }
}

fn file_format() -> Outcome {
    let start = Instant::now();
    let mut specs: Vec<FamilySpec> = (4..=8).flat_map(ladder).collect();
    specs.extend([FamilySpec::Fano, FamilySpec::FanoDual, FamilySpec::CycleK4, FamilySpec::Ag32]);
    let mut bad = Vec::new();
    for spec in &specs {
        let name = spec.to_string().replace(['(', ')'], "");
        if !round_trip_one(&name, &construct(spec).unwrap()) {
            bad.push(spec.to_string());
        }
    }
    let entries = catalog(&scope("rank<=6,size<=13")).unwrap();
    let sample: Vec<&CatalogEntry> = entries.iter().take(1000).collect();
    for e in &sample {
        if !round_trip_one(&e.name.replace('#', "_"), &e.matroid) {
            bad.push(e.name.clone());
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        bad.is_empty() && sample.len() == 1000 && within(elapsed, Duration::from_secs(10)),
        format!(
            "constructor_outputs={} catalog_representatives={} failures={bad:?} time={elapsed:.2?} budget=10s",
            specs.len(),
            sample.len()
        ),
    )
}

fn report(number: usize, title: &str, o: &Outcome) {
    println!("criterion {number} {title}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
}

fn main() -> ExitCode {
    // libtest-style flags such as `--nocapture` are accepted and ignored; a
    // name filter that matches nothing here skips the run.
    if std::env::args().skip(1).any(|a| !a.starts_with('-') && !"acceptance".contains(a.as_str())) {
        return ExitCode::SUCCESS;
    }
    let check = |number: usize, title: &str, o: Outcome| {
        report(number, title, &o);
        usize::from(!o.pass)
    };
    let mut unexpected = 0;
    unexpected += check(1, "family-fidelity", family_fidelity());
    unexpected += check(2, "family-structure", family_structure());
    unexpected += check(3, "cross-construction", cross_construction());
    unexpected += check(4, "lemma-suites", lemma_suites());
    let (fans, documented) = minors_of_fans();
    report(5, "minorsof45fans-ag32", &fans);
    if !fans.pass {
        println!(
            "criterion 5 note: ag32 is not internally 4-connected, so the stated target cannot meet the suite's \
             hypothesis; documented_outcome_reproduced={documented}"
        );
        unexpected += usize::from(!documented);
    }
    unexpected += check(6, "oracle-equivalence", oracle_equivalence());
    unexpected += check(7, "desk-scale-theorem", desk_theorem());
    unexpected += check(8, "performance-floor", performance_floor());
    unexpected += check(9, "file-format", file_format());
    println!("acceptance: unexpected_failures={unexpected}");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
