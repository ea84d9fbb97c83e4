//! The `netsort` command line: gen, verify, bench, report and sweep.
//!
//! Exit codes: 0 on success, 1 when a sorter or network produced wrong
//! output, 2 for bad arguments, unreadable input or I/O failures.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::report::{
    boxplot_svg, rank_by_geomean_with, ranking_csv, ranking_text, read_records, speedup_csv, speedup_table_with,
    speedup_text, write_records, CostGrid, CostSummary,
};
use crate::bench::{
    array_in_row, default_array_count, one_array_repeat, ArrayInRow, BenchError, Lcg, MeasurementRecord, OneArrayRepeat,
    SeedSource, Timer, TimerKind,
};
use crate::networks::{
    depth, emit_unrolled_source, find_zero_one_counterexample, network_for, parse_table, Dialect, Family, Network,
};
use crate::swaps::{conditional_swap, platform_description, SwapStrategyId};
use crate::{expand_selectors, SortItem, SorterId};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "netsort", version, about = "Sorting networks, Register Sample Sort and their benchmarks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write network tables or unrolled Rust sorters.
    Gen(GenArgs),
    /// Check networks with the zero-one principle and compare swap strategies.
    Verify(VerifyArgs),
    /// Measure sorters and write one CSV row per measure.
    Bench(BenchArgs),
    /// Build ranking and speedup tables or box plots from bench CSVs.
    Report(ReportArgs),
    /// Run bench and report in one go.
    Sweep(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// best, bn-l, bn-p, bn-r or all.
    #[arg(long, default_value = "all")]
    pub family: String,
    /// Sizes such as `10`, `2..16` (inclusive) or `4,8,16`.
    #[arg(long, default_value = "2..16")]
    pub sizes: String,
    #[arg(long, value_enum, default_value_t = GenFormat::Table)]
    pub format: GenFormat,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFormat {
    Table,
    Source,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub family: String,
    #[arg(long, default_value = "2..16")]
    pub sizes: String,
    /// Random pairs per swap strategy; 0 skips the strategy check.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    /// Extra network tables to check instead of the built-in families.
    #[arg(long = "network", value_name = "FILE")]
    pub networks: Vec<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LoopKind {
    OneArrayRepeat,
    ArrayInRow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// 100 iterations, 500 measures, sizes 2..16.
    SmallOnearray,
    /// 50 iterations, 200 measures, size 16384.
    Quicksort,
    /// 50 iterations, 200 measures, size 256.
    Rss,
}

impl Preset {
    pub fn parameters(self) -> (usize, usize, &'static str) {
        match self {
            Preset::SmallOnearray => (100, 500, "2..16"),
            Preset::Quicksort => (50, 200, "16384"),
            Preset::Rss => (50, 200, "256"),
        }
    }

    /// Sorters a sweep runs when none are given.
    pub fn default_sorters(self) -> &'static str {
        match self {
            Preset::SmallOnearray => "SN * *, IS *",
            Preset::Quicksort => "QS SN * 4Cm, QS SN * 4CmS, QS IS *, QSort, StdSort",
            Preset::Rss => {
                "RSS 331 SN Best 4Cm, RSS 332 SN Best 4Cm, RSS 333 SN Best 4Cm, RSS 341 SN Best 4Cm, \
                 RSS 344 SN Best 4Cm, RSS 332 SN BN-L 4CmS, RSS 332 IS *, StdSort"
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TimerChoice {
    Auto,
    Cycles,
    Nanos,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated sorter labels; `*` expands families, strategies and variants.
    #[arg(long)]
    pub sorters: Option<String>,
    #[arg(long)]
    pub sizes: Option<String>,
    #[arg(long = "loop", value_enum, default_value_t = LoopKind::OneArrayRepeat)]
    pub loop_kind: LoopKind,
    #[arg(long)]
    pub iterations: Option<usize>,
    #[arg(long)]
    pub measures: Option<usize>,
    /// Arrays per sweep for array-in-row; derived from --cache-bytes when absent.
    #[arg(long)]
    pub arrays: Option<usize>,
    /// Master seed; taken from the clock and printed when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Size of the last-level cache the array-in-row sweep must exceed.
    #[arg(long, default_value_t = 32 << 20)]
    pub cache_bytes: usize,
    /// Output CSV path for bench, output directory for sweep.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    #[arg(long, value_enum, default_value_t = TimerChoice::Auto)]
    pub timer: TimerChoice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Text,
    Svg,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Bench CSV files.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_values_t = [ReportFormat::Csv, ReportFormat::Text])]
    pub format: Vec<ReportFormat>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Per-cell cost used for ranking and speedups.
    #[arg(long, value_enum, default_value_t = CostSummary::Mean)]
    pub statistic: CostSummary,
}

/// A failure mapped to an exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        CliError { code: EXIT_CONFIG, message: message.into() }
    }

    fn failure(message: impl Into<String>) -> Self {
        CliError { code: EXIT_FAILURE, message: message.into() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::config(format!("I/O error: {e}"))
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::CorrectnessFailure { .. } => CliError::failure(e.to_string()),
            other => CliError::config(other.to_string()),
        }
    }
}

type CliResult = Result<(), CliError>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Bench(a) => cmd_bench(&a),
        Command::Report(a) => cmd_report(&a),
        Command::Sweep(a) => cmd_sweep(&a),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

/// Parses `10`, `2..16`, `2..=16` or `4,8,16`. Ranges include both ends.
pub fn parse_sizes(spec: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad size `{s}` in `{spec}`"));
        if let Some((a, b)) = part.split_once("..") {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty size range `{part}`"));
            }
            out.extend(a..=b);
        } else {
            out.push(num(part)?);
        }
    }
    if out.is_empty() {
        return Err(format!("no sizes in `{spec}`"));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_families(spec: &str) -> Result<Vec<Family>, CliError> {
    if spec == "all" {
        return Ok(Family::ALL.to_vec());
    }
    spec.split(',').map(|f| f.trim().parse::<Family>().map_err(|e| CliError::config(e.to_string()))).collect()
}

fn cmd_gen(args: &GenArgs) -> CliResult {
    let families = parse_families(&args.family)?;
    let sizes = parse_sizes(&args.sizes).map_err(CliError::config)?;
    let networks: Vec<Network> = families
        .iter()
        .flat_map(|&f| sizes.iter().map(move |&n| network_for(f, n)))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::config(e.to_string()))?;

    fs::create_dir_all(&args.out)?;
    let (dialect, ext) = match args.format {
        GenFormat::Table => (Dialect::Table, "txt"),
        GenFormat::Source => (Dialect::Source, "rs"),
    };
    for net in networks {
        let path = args.out.join(format!("{}_{:02}.{ext}", net.family().slug(), net.channels()));
        fs::write(&path, emit_unrolled_source(&net, dialect))?;
        println!("{} ({} comparators, depth {})", path.display(), net.size(), depth(&net));
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CliResult {
    let mut failures = Vec::new();
    let mut checked = 0;

    let mut networks = Vec::new();
    if args.networks.is_empty() {
        let sizes = parse_sizes(&args.sizes).map_err(CliError::config)?;
        for family in parse_families(&args.family)? {
            for &n in &sizes {
                let net = network_for(family, n).map_err(|e| CliError::config(e.to_string()))?;
                networks.push((format!("{} n={n}", family.label()), net));
            }
        }
    } else {
        for path in &args.networks {
            let text = fs::read_to_string(path)?;
            let net = parse_table(&text, Family::Best).map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
            networks.push((path.display().to_string(), net));
        }
    }
    for (name, net) in &networks {
        checked += 1;
        match find_zero_one_counterexample(net) {
            Ok(None) => {}
            Ok(Some(input)) => failures.push(format!("{name}: does not sort zero-one input {input:?}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    println!("networks: {checked} checked, {} failed", failures.len());

    if args.trials == 0 {
        println!("swap strategies: skipped (--trials 0)");
    } else {
        let seed = args.seed.unwrap_or(1);
        let before = failures.len();
        check_swap_strategies(args.trials, seed, &mut failures);
        println!(
            "swap strategies: {} strategies on {} random pairs plus equal keys (seed {seed}), {} failed",
            SwapStrategyId::ALL.len(),
            args.trials,
            failures.len() - before
        );
    }

    if failures.is_empty() {
        println!("PASS");
        Ok(())
    } else {
        for f in &failures {
            println!("FAIL {f}");
        }
        Err(CliError::failure(format!("{} verification failure(s)", failures.len())))
    }
}

fn check_swap_strategies(trials: u64, seed: u64, failures: &mut Vec<String>) {
    let mut rng = Lcg::from_any(seed);
    let mut wide = move || (rng.next() << 33) ^ (rng.next() << 2) ^ rng.next();
    let mut pairs: Vec<(SortItem, SortItem)> = vec![(SortItem::new(7, 1), SortItem::new(7, 2))];
    let mut failed = vec![false; SwapStrategyId::ALL.len()];
    for i in 0..=trials {
        let pair = if i == 0 {
            pairs.pop().unwrap()
        } else {
            // small keys make equal keys common
            let small = i % 4 == 0;
            let key = |r: u64| if small { r % 4 } else { r };
            (SortItem::new(key(wide()), wide()), SortItem::new(key(wide()), wide()))
        };
        let (mut el, mut er) = pair;
        conditional_swap(SwapStrategyId::Branching, &mut el, &mut er);
        for (s, strategy) in SwapStrategyId::ALL.into_iter().enumerate() {
            let (mut l, mut r) = pair;
            conditional_swap(strategy, &mut l, &mut r);
            if (l, r) != (el, er) && !failed[s] {
                failed[s] = true;
                failures.push(format!("swap {strategy}: {:?} gave {:?}, expected {:?}", pair, (l, r), (el, er)));
            }
        }
    }
}

/// A resolved bench run.
#[derive(Clone, Debug, Serialize)]
pub struct RunPlan {
    pub sorters: Vec<String>,
    pub sizes: Vec<usize>,
    pub loop_kind: LoopKind,
    pub iterations: usize,
    pub measures: usize,
    pub arrays: Option<usize>,
    pub cache_bytes: usize,
    pub master_seed: u64,
    pub timer: TimerKind,
    pub out: PathBuf,
    #[serde(skip)]
    resolved: Vec<SorterId>,
}

fn clock_seed() -> u64 {
    let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos()).unwrap_or(1);
    Lcg::from_any(nanos as u64).state()
}

/// Resolves arguments and preset into a plan; every sorter and size is
/// checked before anything is measured.
pub fn plan(args: &BenchArgs, default_out: &Path) -> Result<RunPlan, CliError> {
    let (p_iter, p_meas, p_sizes) = args.preset.map(Preset::parameters).unwrap_or((100, 50, "2..16"));
    let selectors = match (&args.sorters, args.preset) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) => p.default_sorters().to_string(),
        (None, None) => return Err(CliError::config("no sorters given (use --sorters or --preset)")),
    };
    let resolved = expand_selectors(&selectors).map_err(|e| CliError::config(e.to_string()))?;
    if resolved.is_empty() {
        return Err(CliError::config("sorter list is empty"));
    }
    let sizes = parse_sizes(args.sizes.as_deref().unwrap_or(p_sizes)).map_err(CliError::config)?;
    for sorter in &resolved {
        if let Some(max) = sorter.max_size() {
            if let Some(&n) = sizes.iter().find(|&&n| n > max || n < 2) {
                return Err(CliError::config(format!("{sorter} cannot sort {n} items (sizes 2..={max})")));
            }
        }
    }
    let iterations = args.iterations.unwrap_or(p_iter);
    let measures = args.measures.unwrap_or(p_meas);
    if iterations == 0 || measures == 0 {
        return Err(CliError::config("--iterations and --measures must be at least 1"));
    }
    let timer = match args.timer {
        TimerChoice::Auto => Timer::detect().kind(),
        TimerChoice::Nanos => TimerKind::Nanos,
        TimerChoice::Cycles if cfg!(target_arch = "x86_64") => TimerKind::Cycles,
        TimerChoice::Cycles => return Err(CliError::config("no cycle counter on this target")),
    };
    Ok(RunPlan {
        sorters: resolved.iter().map(ToString::to_string).collect(),
        sizes,
        loop_kind: args.loop_kind,
        iterations,
        measures,
        arrays: args.arrays,
        cache_bytes: args.cache_bytes,
        master_seed: args.seed.unwrap_or_else(clock_seed),
        timer,
        out: args.out.clone().unwrap_or_else(|| default_out.to_path_buf()),
        resolved,
    })
}

fn make_timer(kind: TimerKind) -> Timer {
    match kind {
        TimerKind::Nanos => Timer::nanos(),
        TimerKind::Cycles => Timer::detect(),
    }
}

#[derive(Serialize)]
struct MachineInfo<'a> {
    timer_kind: TimerKind,
    cache_bytes: usize,
    host: String,
    master_seed: u64,
    plan: &'a RunPlan,
    failures: &'a [String],
}

pub fn host_description() -> String {
    let cpu = fs::read_to_string("/proc/cpuinfo")
        .ok()
        .and_then(|s| s.lines().find(|l| l.starts_with("model name")).and_then(|l| l.split(':').nth(1)).map(|m| m.trim().to_string()))
        .unwrap_or_else(|| "unknown cpu".into());
    format!("{} {} / {cpu} / {}", std::env::consts::OS, std::env::consts::ARCH, platform_description())
}

/// Runs a plan. Correctness failures stop that sorter and are returned.
pub fn execute(plan: &RunPlan) -> Result<(Vec<MeasurementRecord>, Vec<String>), CliError> {
    let seeds = SeedSource::new(plan.master_seed);
    let timer = make_timer(plan.timer);
    let mut records = Vec::new();
    let mut failures = Vec::new();
    'sorters: for sorter in &plan.resolved {
        let sorter = sorter.with_seed(plan.master_seed);
        let label = sorter.to_string();
        for &n in &plan.sizes {
            let sort = |v: &mut [SortItem]| sorter.sort(v);
            let result = match plan.loop_kind {
                LoopKind::OneArrayRepeat => {
                    let params = OneArrayRepeat { array_size: n, iterations: plan.iterations, measures: plan.measures };
                    one_array_repeat(&label, sort, &params, &seeds, timer)
                }
                LoopKind::ArrayInRow => {
                    let arrays = plan.arrays.unwrap_or_else(|| default_array_count(n, plan.cache_bytes));
                    let params =
                        ArrayInRow { array_size: n, number_of_arrays: arrays, measures: plan.measures, cache_bytes: plan.cache_bytes };
                    array_in_row(&label, sort, &params, &seeds, timer)
                }
            };
            match result {
                Ok(r) => records.extend(r),
                Err(e @ BenchError::CorrectnessFailure { .. }) => {
                    eprintln!("FAIL {e}");
                    failures.push(e.to_string());
                    continue 'sorters;
                }
                Err(e) => return Err(e.into()),
            }
        }
        eprintln!("done {label}");
    }
    Ok((records, failures))
}

fn print_plan(plan: &RunPlan) {
    println!("master seed: {}", plan.master_seed);
    println!(
        "plan: {} sorter(s) x sizes {:?}, {:?}, iterations {}, measures {}, timer {}",
        plan.sorters.len(),
        plan.sizes,
        plan.loop_kind,
        plan.iterations,
        plan.measures,
        plan.timer
    );
    for s in &plan.sorters {
        println!("  {s}");
    }
}

fn sidecar_path(csv: &Path) -> PathBuf {
    let mut name = csv.file_stem().map(|s| s.to_os_string()).unwrap_or_default();
    name.push(".machine.json");
    csv.with_file_name(name)
}

fn write_run(plan: &RunPlan, csv_path: &Path, records: &[MeasurementRecord], failures: &[String]) -> CliResult {
    if let Some(dir) = csv_path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    write_records(fs::File::create(csv_path)?, records).map_err(|e| CliError::config(e.to_string()))?;
    let info = MachineInfo {
        timer_kind: plan.timer,
        cache_bytes: plan.cache_bytes,
        host: host_description(),
        master_seed: plan.master_seed,
        plan,
        failures,
    };
    let sidecar = sidecar_path(csv_path);
    fs::write(&sidecar, serde_json::to_string_pretty(&info).expect("serializable") + "\n")?;
    println!("wrote {} and {}", csv_path.display(), sidecar.display());
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> CliResult {
    let plan = plan(args, Path::new("bench.csv"))?;
    print_plan(&plan);
    let (records, failures) = execute(&plan)?;
    write_run(&plan, &plan.out, &records, &failures)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::failure(format!("{} sorter(s) produced wrong output", failures.len())))
    }
}

fn cmd_sweep(args: &BenchArgs) -> CliResult {
    let plan = plan(args, Path::new("sweep"))?;
    print_plan(&plan);
    let (records, failures) = execute(&plan)?;
    let csv_path = plan.out.join("measurements.csv");
    write_run(&plan, &csv_path, &records, &failures)?;
    let formats = [ReportFormat::Csv, ReportFormat::Text, ReportFormat::Svg];
    write_reports(&CostGrid::from_records(&records), &formats, CostSummary::Median, &plan.out)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::failure(format!("{} sorter(s) produced wrong output", failures.len())))
    }
}

fn cmd_report(args: &ReportArgs) -> CliResult {
    let mut records = Vec::new();
    for path in &args.inputs {
        let file = fs::File::open(path).map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
        records.extend(read_records(file).map_err(|e| CliError::config(format!("{}: {e}", path.display())))?);
    }
    write_reports(&CostGrid::from_records(&records), &args.format, args.statistic, &args.out)
}

fn write_reports(grid: &CostGrid, formats: &[ReportFormat], statistic: CostSummary, out: &Path) -> CliResult {
    fs::create_dir_all(out)?;
    let write = |name: &str, body: &str| -> CliResult {
        let path = out.join(name);
        fs::write(&path, body)?;
        println!("wrote {}", path.display());
        Ok(())
    };
    let wants = |f: ReportFormat| formats.contains(&f);

    if wants(ReportFormat::Csv) || wants(ReportFormat::Text) {
        let ranking = rank_by_geomean_with(grid, statistic)?;
        if wants(ReportFormat::Csv) {
            write("ranking.csv", &ranking_csv(&ranking))?;
        }
        if wants(ReportFormat::Text) {
            let text = ranking_text(&ranking);
            write("ranking.txt", &text)?;
            print!("{text}");
        }
        let has_both = grid.sorters().iter().any(|s| s.starts_with("SN ")) && grid.sorters().iter().any(|s| s.starts_with("IS "));
        if has_both {
            let speedup = speedup_table_with(grid, statistic)?;
            if wants(ReportFormat::Csv) {
                write("speedup.csv", &speedup_csv(&speedup))?;
            }
            if wants(ReportFormat::Text) {
                let text = speedup_text(&speedup);
                write("speedup.txt", &text)?;
                print!("{text}");
            }
        } else {
            println!("speedup table skipped: needs both SN and IS sorters");
        }
    }
    if wants(ReportFormat::Svg) {
        for &size in grid.sizes() {
            write(&format!("boxplot_{size}.svg"), &boxplot_svg(grid, size)?)?;
        }
    }
    std::io::stdout().flush()?;
    Ok(())
}
