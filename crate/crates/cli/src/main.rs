//! `binmat`: command-line front end for binary matroid analysis.
//!
//! Exit codes: 0 success, 1 negative answer (not isomorphic, no minor, no
//! certificate, failed suite), 2 usage or input error, 3 search budget
//! exhausted.

use std::fs;
use std::hint::black_box;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use binmat_core::bmx::{emit_matroid, MatroidFile};
use binmat_core::enumerate::{catalog, CatalogFilter};
use binmat_core::minor::SearchLimits;
use binmat_core::splitter::{splitter_step, zhou_dichotomy_classify, DichotomyResult, Mode};
use binmat_core::structure::{fans, find_violator, quads, triads, triangles, FanKind};
use binmat_core::suites::{rank8_sixteen_instance, verify_lemma_suite, Suite, SuiteOptions, Verdict};
use binmat_core::{are_isomorphic, connectivity_class, construct, has_minor, BinaryMatroid, Error, FamilySpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "binmat", version, about = "Binary matroid analysis: structure, minors and splitter steps")]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named matroid as a .bmx file.
    Family {
        /// biwheel, biwheel_plus, mobius_delta, mobius_delta_minus_z, fano, fano_dual, cycle_K4, ag32.
        #[arg(long)]
        name: String,
        /// Parameter of the ladder families (n >= 4).
        #[arg(long)]
        n: Option<usize>,
        /// Output file (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report structure and connectivity of a matroid.
    Analyze { matroid: String },
    /// Test two matroids for isomorphism.
    Iso { first: String, second: String },
    /// Search for an N-minor of M.
    Minor {
        m: String,
        n: String,
        /// Comma-separated labels of M that must survive in the minor.
        #[arg(long, default_value = "")]
        fix: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Remove one or two elements keeping internal 4-connectivity and an N-minor.
    Split {
        m: String,
        n: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Theorem)]
        mode: ModeArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run a property suite over a catalog.
    Verify {
        /// Suite name; see `--list`.
        #[arg(long)]
        suite: Option<String>,
        /// Catalog scope, e.g. `rank<=4,size<=10,3connected`.
        #[arg(long, default_value = "rank<=4,size<=10,3connected")]
        catalog: String,
        /// Run the deliberately false statement; succeeds when it is refuted.
        #[arg(long)]
        self_test: bool,
        /// Second matroid for pair suites, or the target of minorsof45fans.
        #[arg(long)]
        n: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Theorem)]
        mode: ModeArg,
        /// Print only the summary and counterexamples.
        #[arg(long)]
        quiet: bool,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// List (and optionally write) catalog matroids.
    Enum {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        size: Option<usize>,
        /// Extra filters: cosimple, 3connected, i4c, duals.
        #[arg(long, default_value = "")]
        filter: String,
        /// Full catalog scope; overrides --rank/--size.
        #[arg(long)]
        catalog: Option<String>,
        /// Write one .bmx file per matroid into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Measure subset-rank throughput on a fixed 16-element rank-8 matroid.
    Bench {
        #[arg(long, default_value_t = 1.0)]
        seconds: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Search nodes allowed before giving up.
    #[arg(long, default_value_t = SearchLimits::DEFAULT_NODES)]
    node_budget: u64,
    /// Wall-clock seconds allowed before giving up.
    #[arg(long, default_value_t = SearchLimits::DEFAULT_TIME.as_secs_f64())]
    time_budget: f64,
}

impl BudgetArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits { node_budget: self.node_budget, time_budget: Some(Duration::from_secs_f64(self.time_budget)) }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Theorem,
    Oracle,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Theorem => Mode::Theorem,
            ModeArg::Oracle => Mode::Oracle,
        }
    }
}

/// Failure of a command, with its exit code.
enum Failure {
    Negative,
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceExhausted { .. } => 3,
                Error::Precondition(_) | Error::NoCertificate(_) => 1,
                _ => 2,
            })
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Family { name, n, output } => family(&name, n, output.as_deref()),
        Command::Analyze { matroid } => analyze(&matroid),
        Command::Iso { first, second } => iso(&first, &second),
        Command::Minor { m, n, fix, budget } => minor(&m, &n, &fix, budget.limits()),
        Command::Split { m, n, mode, budget } => split(&m, &n, mode.into(), budget.limits()),
        Command::Verify { suite, catalog, self_test, n, mode, quiet, list, budget } => {
            if list {
                for s in Suite::ALL {
                    println!("{s}");
                }
                return Ok(());
            }
            verify(suite.as_deref(), &catalog, self_test, n.as_deref(), mode.into(), quiet, budget.limits())
        }
        Command::Enum { rank, size, filter, catalog, out_dir } => {
            enumerate(rank, size, &filter, catalog.as_deref(), out_dir.as_deref())
        }
        Command::Bench { seconds, seed } => bench(seconds, seed),
    }
}

/// A matroid argument: a .bmx path, or `family:<spec>` such as `family:biwheel_plus(4)`.
fn load(arg: &str) -> Result<MatroidFile, Failure> {
    if let Some(spec) = arg.strip_prefix("family:") {
        let spec: FamilySpec = spec.parse()?;
        return Ok(MatroidFile::new(spec.to_string(), construct(&spec)?));
    }
    let text = fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read `{arg}`: {e}")))?;
    MatroidFile::parse(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
}

fn family(name: &str, n: Option<usize>, output: Option<&Path>) -> CmdResult {
    let spec = match n {
        Some(_) => FamilySpec::from_name(name, n)?,
        None => name.parse()?,
    };
    let m = construct(&spec)?;
    let file_name = match spec.parameter() {
        Some(n) => format!("{}{n}", spec.name()),
        None => spec.name().to_string(),
    };
    let text = emit_matroid(&file_name, &m)?;
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write `{}`: {e}", path.display())))?;
            println!("wrote={} elements={} rank={}", path.display(), m.len(), m.rank());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn analyze(arg: &str) -> CmdResult {
    let file = load(arg)?;
    let m = &file.matroid;
    let all_fans = |len| fans(m, len);
    let four = all_fans(4);
    let five = all_fans(5);
    println!("name={}", file.name);
    println!("elements={}", m.len());
    println!("rank={}", m.rank());
    println!("corank={}", m.corank());
    println!("class={}", connectivity_class(m));
    println!("triangles={}", triangles(m).len());
    println!("triads={}", triads(m).len());
    println!("quads={}", quads(m).len());
    println!("fans4={}", four.iter().filter(|f| f.kind == FanKind::FourFan).count());
    println!("fans5={}", five.iter().filter(|f| f.kind == FanKind::FiveFan).count());
    println!("cofans5={}", five.iter().filter(|f| f.kind == FanKind::FiveCofan).count());
    for k in [3, 4] {
        match find_violator(m, k) {
            Some(s) => println!("violator_4_{k}={}", s.display(m)),
            None => println!("violator_4_{k}=none"),
        }
    }
    match zhou_dichotomy_classify(m) {
        DichotomyResult::Family { spec, dualized, .. } => println!("family={spec} dualized={dualized}"),
        _ => println!("family=none"),
    }
    Ok(())
}

fn iso(a: &str, b: &str) -> CmdResult {
    let (fa, fb) = (load(a)?, load(b)?);
    match are_isomorphic(&fa.matroid, &fb.matroid) {
        Some(w) => {
            println!("isomorphic=yes");
            println!("witness_verified={}", w.verify(&fa.matroid, &fb.matroid));
            let pairs: Vec<String> =
                w.label_pairs(&fa.matroid, &fb.matroid).into_iter().map(|(x, y)| format!("{x}->{y}")).collect();
            println!("map={}", pairs.join(","));
            Ok(())
        }
        None => {
            println!("isomorphic=no");
            Err(Failure::Negative)
        }
    }
}

fn minor(m: &str, n: &str, fix: &str, limits: SearchLimits) -> CmdResult {
    let (fm, fn_) = (load(m)?, load(n)?);
    let labels: Vec<&str> = fix.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let fix = fm.matroid.element_set(&labels)?;
    match has_minor(&fm.matroid, &fn_.matroid, fix, limits)? {
        Some(cert) => {
            println!("minor=yes");
            println!("certificate_verified={}", cert.verify(&fm.matroid, &fn_.matroid));
            println!("{}", cert.display(&fm.matroid, &fn_.matroid));
            Ok(())
        }
        None => {
            println!("minor=no");
            Err(Failure::Negative)
        }
    }
}

fn split(m: &str, n: &str, mode: Mode, limits: SearchLimits) -> CmdResult {
    let (fm, fn_) = (load(m)?, load(n)?);
    let (m, n) = (&fm.matroid, &fn_.matroid);
    match splitter_step(m, n, mode, limits) {
        Ok(cert) => {
            println!("certificate=yes");
            println!("size_drop={}", cert.size_drop(m));
            println!("verified={}", cert.verify(m, n));
            println!("{}", cert.display(m, n));
            Ok(())
        }
        Err(Error::Precondition(why)) => {
            println!("hypotheses=fail");
            for reason in why.split("; ") {
                println!("reason={reason}");
            }
            eprintln!("hypotheses fail: {why}");
            Err(Failure::Negative)
        }
        Err(Error::NoCertificate(transcript)) => {
            println!("certificate=no");
            println!("{transcript}");
            eprintln!("NO CERTIFICATE: the pair passes the hypotheses but no removal works; this is a counterexample candidate");
            Err(Failure::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(
    suite: Option<&str>,
    scope: &str,
    self_test: bool,
    n: Option<&str>,
    mode: Mode,
    quiet: bool,
    limits: SearchLimits,
) -> CmdResult {
    let suite: Suite = match (suite, self_test) {
        (_, true) => Suite::SelfTest,
        (Some(s), false) => s.parse()?,
        (None, false) => return Err(Failure::Usage("give --suite <name> or --self-test".to_string())),
    };
    let scope: CatalogFilter = scope.parse()?;
    let options = SuiteOptions { n: n.map(load).transpose()?.map(|f| f.matroid), limits, mode };
    let report = verify_lemma_suite(suite, &scope, &options)?;
    if quiet {
        for note in &report.notes {
            println!("note {note}");
        }
        for c in &report.failures {
            println!("{}", c.render());
        }
        println!("{}", report.summary());
    } else {
        println!("{}", report.render());
    }
    let verdict = report.verdict();
    if suite == Suite::SelfTest {
        println!("self_test={}", if verdict == Verdict::Fail { "ok" } else { "broken" });
        return if verdict == Verdict::Fail { Ok(()) } else { Err(Failure::Negative) };
    }
    if verdict == Verdict::Fail {
        Err(Failure::Negative)
    } else {
        Ok(())
    }
}

fn enumerate(
    rank: Option<usize>,
    size: Option<usize>,
    filter: &str,
    scope_arg: Option<&str>,
    out_dir: Option<&Path>,
) -> CmdResult {
    let scope: CatalogFilter = match (scope_arg, rank, size) {
        (Some(s), _, _) => s.parse()?,
        (None, Some(r), Some(s)) => format!("rank<={r},size<={s},size>={s},{filter}").parse()?,
        _ => return Err(Failure::Usage("give --rank and --size, or --catalog".to_string())),
    };
    let mut entries = catalog(&scope)?;
    if let (None, Some(r)) = (scope_arg, rank) {
        entries.retain(|e| e.matroid.rank() == r);
    }
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("cannot create `{}`: {e}", dir.display())))?;
    }
    for e in &entries {
        println!("matroid={} elements={} rank={}", e.name, e.matroid.len(), e.matroid.rank());
        if let Some(dir) = out_dir {
            let file = file_stem(&e.name);
            let path = dir.join(format!("{file}.bmx"));
            fs::write(&path, emit_matroid(&file, &e.matroid)?)
                .map_err(|err| Failure::Usage(format!("cannot write `{}`: {err}", path.display())))?;
        }
    }
    println!("count={}", entries.len());
    Ok(())
}

fn file_stem(name: &str) -> String {
    name.replace('#', "_").replace('*', "_dual")
}

/// Random subsets of the ground set, ranked through the matroid's oracle.
fn bench(seconds: f64, seed: u64) -> CmdResult {
    let m: BinaryMatroid = rank8_sixteen_instance();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = (1u64 << m.len()) - 1;
    let masks: Vec<u64> = (0..4096).map(|_| rng.gen::<u64>() & full).collect();
    let budget = Duration::from_secs_f64(seconds.max(0.01));
    let start = Instant::now();
    let mut queries = 0u64;
    let mut checksum = 0usize;
    while start.elapsed() < budget {
        for &mask in &masks {
            checksum += m.rank_mask(black_box(mask));
        }
        queries += masks.len() as u64;
    }
    let elapsed = start.elapsed().as_secs_f64();
    black_box(checksum);
    println!("instance=rank8_sixteen elements={} rank={}", m.len(), m.rank());
    println!("queries={queries}");
    println!("seconds={elapsed:.3}");
    println!("rank_queries_per_sec={:.0}", queries as f64 / elapsed);
    Ok(())
}
