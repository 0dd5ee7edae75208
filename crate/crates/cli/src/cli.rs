//! Argument definitions and command dispatch.
//!
//! Commands render into an [`Output`] instead of printing, so batch mode can
//! buffer each line and emit results in input order.

use std::fmt::Write as _;
use std::io::BufRead;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use requitable_core::classic::{self, BalancedInstance, ThresholdClause};
use requitable_core::feasibility::{chromatic_number_detail, chromatic_threshold_detail};
use requitable_core::oracle::{self, CheckKind, SweepGrid};
use requitable_core::{
    feasible, iso_feasible, plan_coloring, split_part, ColoringPlan, EquityQuery,
    FeasibilityWitness, PartiteSizes,
};

use crate::format::write_plan;
use crate::json::{Report, Witness};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "requitable",
    version,
    about = "r-equitable colorings of complete multipartite graphs"
)]
pub struct Cli {
    /// Print one JSON object per result instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether an r-equitable k-coloring exists
    Feasible(Query),
    /// Print the r-equitable chromatic number (and threshold)
    Chi(ChiArgs),
    /// Print an explicit r-equitable k-coloring in the text coloring format
    Color(Query),
    /// Decide by exhaustive search, or sweep the formula-vs-search grid
    Oracle(OracleArgs),
    /// Evaluate the classical equitable (r = 1) formulas
    Classic(ClassicArgs),
    /// Read one command line per stdin line and run them all
    Batch,
}

/// Comma-separated part sizes, e.g. `3,5,7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeList(pub Vec<u64>);

fn parse_sizes(s: &str) -> Result<SizeList, String> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| format!("{tok:?} is not a nonnegative integer"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(SizeList)
}

#[derive(Debug, Args)]
pub struct Query {
    /// Part sizes, comma separated (any order)
    #[arg(long, value_parser = parse_sizes)]
    pub sizes: SizeList,
    /// Allowed spread between color class sizes
    #[arg(long = "r")]
    pub r: u64,
    /// Number of colors
    #[arg(long = "k")]
    pub k: u64,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[arg(long, value_parser = parse_sizes)]
    pub sizes: SizeList,
    #[arg(long = "r")]
    pub r: u64,
    /// Ignored; accepted so instance lines can be reused across commands
    #[arg(long = "k")]
    pub k: Option<u64>,
    /// Also print the r-equitable chromatic threshold
    #[arg(long)]
    pub threshold: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_parser = parse_sizes, required_unless_present = "sweep")]
    pub sizes: Option<SizeList>,
    #[arg(long = "r", required_unless_present = "sweep")]
    pub r: Option<u64>,
    #[arg(long = "k", required_unless_present = "sweep")]
    pub k: Option<u64>,
    /// Compare the closed forms with the oracle over a grid of instances
    #[arg(long, conflicts_with_all = ["sizes", "r", "k"])]
    pub sweep: bool,
    /// Sweep: largest part size
    #[arg(long, default_value_t = 6)]
    pub max_part: u64,
    /// Sweep: largest number of colors
    #[arg(long, default_value_t = 14)]
    pub max_k: u64,
    /// Sweep: largest spread r
    #[arg(long, default_value_t = 3)]
    pub max_r: u64,
    /// Sweep: largest number of parts
    #[arg(long, default_value_t = 3)]
    pub max_parts: usize,
}

#[derive(Debug, Args)]
pub struct ClassicArgs {
    #[arg(long, value_parser = parse_sizes)]
    pub sizes: SizeList,
    /// Also decide equitable k-colorability
    #[arg(long = "k")]
    pub k: Option<u64>,
}

/// What a command produced.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

impl Output {
    fn usage(stderr: &mut String, msg: impl std::fmt::Display) -> Output {
        let _ = writeln!(stderr, "error: {msg}");
        Output {
            stdout: String::new(),
            stderr: std::mem::take(stderr),
            status: EXIT_USAGE,
        }
    }
}

enum Instance {
    Isolated(u64),
    Multipartite(PartiteSizes),
}

impl Instance {
    fn sizes_vec(&self) -> Vec<u64> {
        match self {
            Instance::Isolated(n) => vec![*n],
            Instance::Multipartite(s) => s.as_slice().to_vec(),
        }
    }
}

fn instance(list: &SizeList, notes: &mut String) -> Result<Instance, String> {
    match list.0[..] {
        [] => Err("at least one part size is required".into()),
        [0] => Err("part 1 has size 0; sizes must be >= 1".into()),
        [n] => {
            // range check only
            iso_feasible(n, 1, 0).map_err(|e| e.to_string())?;
            Ok(Instance::Isolated(n))
        }
        _ => {
            let (sizes, reordered) =
                PartiteSizes::from_unsorted(list.0.clone()).map_err(|e| e.to_string())?;
            if reordered {
                let shown: Vec<String> = sizes.iter().map(|n| n.to_string()).collect();
                let _ = writeln!(notes, "note: sizes reordered to {}", shown.join(","));
            }
            Ok(Instance::Multipartite(sizes))
        }
    }
}

fn multipartite(list: &SizeList, notes: &mut String) -> Result<PartiteSizes, String> {
    match instance(list, notes)? {
        Instance::Multipartite(s) => Ok(s),
        Instance::Isolated(_) => Err("this command needs at least 2 parts".into()),
    }
}

/// Class sizes and witness for `n` isolated vertices, when feasible.
fn isolated_plan(n: u64, q: EquityQuery) -> Option<(FeasibilityWitness, ColoringPlan)> {
    if !iso_feasible(n, q.k(), q.r()).ok()? {
        return None;
    }
    let classes = split_part(n, q.k()).ok()?;
    let nonempty: Vec<u64> = classes.iter().copied().filter(|&c| c > 0).collect();
    let unused = q.k() - nonempty.len() as u64;
    let witness = if unused == 0 {
        FeasibilityWitness::Full {
            level: n / q.k(),
            counts: vec![q.k()],
        }
    } else {
        FeasibilityWitness::Missing {
            counts: vec![nonempty.len() as u64],
            unused,
        }
    };
    let level = (unused == 0).then_some(n / q.k());
    let plan = ColoringPlan {
        part_classes: vec![nonempty],
        unused,
        r: q.r(),
        k: q.k(),
        level,
    };
    Some((witness, plan))
}

fn witness_and_plan(
    inst: &Instance,
    q: EquityQuery,
) -> Result<Option<(FeasibilityWitness, ColoringPlan)>, String> {
    match inst {
        Instance::Isolated(n) => Ok(isolated_plan(*n, q)),
        Instance::Multipartite(s) => match feasible(s, q) {
            None => Ok(None),
            Some(w) => {
                let plan = plan_coloring(s, q, &w).map_err(|e| e.to_string())?;
                Ok(Some((w, plan)))
            }
        },
    }
}

fn describe(w: &FeasibilityWitness) -> String {
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    match w {
        FeasibilityWitness::Full { level, counts } => {
            format!("FEASIBLE (full, m={level}, counts={})", join(counts))
        }
        FeasibilityWitness::Missing { counts, unused } => {
            format!(
                "FEASIBLE (missing, unused={unused}, counts={})",
                join(counts)
            )
        }
    }
}

fn cmd_feasible(args: &Query, json: bool, notes: &mut String) -> Output {
    let inst = match instance(&args.sizes, notes) {
        Ok(i) => i,
        Err(e) => return Output::usage(notes, e),
    };
    let q = match EquityQuery::new(args.r, args.k) {
        Ok(q) => q,
        Err(e) => return Output::usage(notes, e),
    };
    let found = match witness_and_plan(&inst, q) {
        Ok(f) => f,
        Err(e) => return Output::usage(notes, e),
    };
    let stdout = if json {
        Report {
            sizes: inst.sizes_vec(),
            r: Some(q.r()),
            k: Some(q.k()),
            verdict: Some(found.is_some()),
            witness: found.as_ref().map(|(w, _)| Witness::from(w)),
            ..Report::default()
        }
        .to_line()
    } else {
        match &found {
            Some((w, _)) => format!("{}\n", describe(w)),
            None => "INFEASIBLE\n".to_string(),
        }
    };
    let status = if found.is_some() { EXIT_YES } else { EXIT_NO };
    Output {
        stdout,
        stderr: std::mem::take(notes),
        status,
    }
}

fn cmd_color(args: &Query, json: bool, notes: &mut String) -> Output {
    let inst = match instance(&args.sizes, notes) {
        Ok(i) => i,
        Err(e) => return Output::usage(notes, e),
    };
    let q = match EquityQuery::new(args.r, args.k) {
        Ok(q) => q,
        Err(e) => return Output::usage(notes, e),
    };
    let found = match witness_and_plan(&inst, q) {
        Ok(f) => f,
        Err(e) => return Output::usage(notes, e),
    };
    let Some((w, plan)) = found else {
        let stdout = if json {
            Report {
                sizes: inst.sizes_vec(),
                r: Some(q.r()),
                k: Some(q.k()),
                verdict: Some(false),
                ..Report::default()
            }
            .to_line()
        } else {
            "INFEASIBLE\n".to_string()
        };
        return Output {
            stdout,
            stderr: std::mem::take(notes),
            status: EXIT_NO,
        };
    };
    let stdout = if json {
        Report {
            sizes: inst.sizes_vec(),
            r: Some(q.r()),
            k: Some(q.k()),
            verdict: Some(true),
            witness: Some(Witness::from(&w)),
            ..Report::default()
        }
        .to_line()
    } else {
        write_plan(&plan)
    };
    Output {
        stdout,
        stderr: std::mem::take(notes),
        status: EXIT_YES,
    }
}

fn cmd_chi(args: &ChiArgs, json: bool, notes: &mut String) -> Output {
    let inst = match instance(&args.sizes, notes) {
        Ok(i) => i,
        Err(e) => return Output::usage(notes, e),
    };
    if args.r > requitable_core::MAX_QUANTITY {
        return Output::usage(notes, "r exceeds the supported range (2^62)");
    }
    if args.threshold && args.r == 0 {
        return Output::usage(notes, requitable_core::Error::ThresholdUndefined);
    }
    let (chi, theta, chistar) = match &inst {
        // one class holding every vertex; with r >= 1 every k works
        Instance::Isolated(n) => (1, *n, args.threshold.then_some(1)),
        Instance::Multipartite(s) => {
            let number = chromatic_number_detail(s, args.r);
            let star = if args.threshold {
                match chromatic_threshold_detail(s, args.r) {
                    Ok(v) => Some(v.value),
                    Err(e) => return Output::usage(notes, e),
                }
            } else {
                None
            };
            (number.value, number.theta, star)
        }
    };
    let stdout = if json {
        Report {
            sizes: inst.sizes_vec(),
            r: Some(args.r),
            chi: Some(chi),
            chistar,
            theta: Some(theta),
            ..Report::default()
        }
        .to_line()
    } else {
        let mut line = format!("chi={chi} theta={theta}");
        if let Some(star) = chistar {
            let _ = write!(line, " chistar={star}");
        }
        line.push('\n');
        line
    };
    Output {
        stdout,
        stderr: std::mem::take(notes),
        status: EXIT_YES,
    }
}

fn cmd_oracle(args: &OracleArgs, json: bool, notes: &mut String) -> Output {
    if args.sweep {
        return sweep(args, json, notes);
    }
    let (Some(sizes), Some(r), Some(k)) = (&args.sizes, args.r, args.k) else {
        return Output::usage(notes, "--sizes, --r and --k are required without --sweep");
    };
    let s = match multipartite(sizes, notes) {
        Ok(s) => s,
        Err(e) => return Output::usage(notes, e),
    };
    let q = match EquityQuery::new(r, k) {
        Ok(q) => q,
        Err(e) => return Output::usage(notes, e),
    };
    let report = match oracle::oracle_feasible(&s, q) {
        Ok(rep) => rep,
        Err(e) => return Output::usage(notes, e),
    };
    let stdout = if json {
        Report {
            sizes: s.as_slice().to_vec(),
            r: Some(r),
            k: Some(k),
            verdict: Some(report.verdict),
            ..Report::default()
        }
        .to_line()
    } else {
        let mut out = format!("{}\nsearch_space {}\n", report.verdict, report.search_space);
        if let Some(cert) = &report.certificate {
            let parts: Vec<String> = cert
                .part_classes
                .iter()
                .map(|c| c.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(
                out,
                "certificate {} unused {}",
                parts.join(" | "),
                cert.unused
            );
        }
        out
    };
    let status = if report.verdict { EXIT_YES } else { EXIT_NO };
    Output {
        stdout,
        stderr: std::mem::take(notes),
        status,
    }
}

fn sweep(args: &OracleArgs, json: bool, notes: &mut String) -> Output {
    let grid = SweepGrid {
        min_parts: 2,
        max_parts: args.max_parts,
        max_part: args.max_part,
        max_r: args.max_r,
        max_k: args.max_k,
    };
    let report = match oracle::agreement_sweep(grid) {
        Ok(rep) => rep,
        Err(e) => return Output::usage(notes, e),
    };
    let stdout = if json {
        Report {
            verdict: Some(report.all_pass()),
            ..Report::default()
        }
        .to_line()
    } else {
        let mut out = String::new();
        for m in &report.mismatches {
            let what = match m.check {
                CheckKind::Feasible { k } => format!("feasible k={k}"),
                CheckKind::ChromaticNumber => "chi".to_string(),
                CheckKind::ChromaticThreshold => "chistar".to_string(),
            };
            let _ = writeln!(
                out,
                "MISMATCH sizes={:?} r={} {what}: formula={} oracle={}",
                m.sizes, m.r, m.formula, m.oracle
            );
        }
        if report.all_pass() {
            let _ = writeln!(
                out,
                "AGREEMENT: all pass ({} instances, {} checks)",
                report.instances, report.checks
            );
        } else {
            let _ = writeln!(
                out,
                "AGREEMENT: {} of {} checks failed",
                report.mismatches.len(),
                report.checks
            );
        }
        out
    };
    let status = if report.all_pass() { EXIT_YES } else { EXIT_NO };
    Output {
        stdout,
        stderr: std::mem::take(notes),
        status,
    }
}

fn cmd_classic(args: &ClassicArgs, json: bool, notes: &mut String) -> Output {
    let s = match multipartite(&args.sizes, notes) {
        Ok(s) => s,
        Err(e) => return Output::usage(notes, e),
    };
    if args.k == Some(0) {
        return Output::usage(notes, "number of colors k must be >= 1");
    }
    let wu = classic::wu_chi(&s);
    let lam = classic::lam_chi(&s);
    let star = classic::wu_chi_star_detail(&s);
    let verdict = args.k.map(|k| classic::wu_equitable_feasible(&s, k));
    let stdout = if json {
        Report {
            sizes: s.as_slice().to_vec(),
            k: args.k,
            verdict,
            chi: Some(wu),
            chistar: Some(star.value),
            ..Report::default()
        }
        .to_line()
    } else {
        let clause = match star.clause {
            ThresholdClause::ShortPart => "short-part",
            ThresholdClause::TwoNonDivisible => "two-non-divisible",
            ThresholdClause::Both => "both",
        };
        let mut out = format!(
            "wu_chi={wu} lam_chi={lam} wu_chistar={} h={} clause={clause}\n",
            star.value, star.h
        );
        if let Some(b) = BalancedInstance::from_sizes(&s) {
            let _ = writeln!(
                out,
                "balanced t={} n={} lin_chang_chistar={}",
                b.t(),
                b.n(),
                classic::lin_chang_chi_star(b)
            );
        }
        if let (Some(k), Some(v)) = (args.k, verdict) {
            let _ = writeln!(out, "wu_feasible k={k}: {v}");
        }
        out
    };
    let status = match verdict {
        Some(false) => EXIT_NO,
        _ => EXIT_YES,
    };
    Output {
        stdout,
        stderr: std::mem::take(notes),
        status,
    }
}

/// Runs one parsed command. `stdin` is only read by `batch`.
pub fn run(cli: &Cli, stdin: &mut dyn BufRead) -> Output {
    let mut notes = String::new();
    match &cli.command {
        Command::Feasible(q) => cmd_feasible(q, cli.json, &mut notes),
        Command::Color(q) => cmd_color(q, cli.json, &mut notes),
        Command::Chi(a) => cmd_chi(a, cli.json, &mut notes),
        Command::Oracle(a) => cmd_oracle(a, cli.json, &mut notes),
        Command::Classic(a) => cmd_classic(a, cli.json, &mut notes),
        Command::Batch => batch(stdin, cli.json),
    }
}

/// Parses and runs one batch line. Blank lines and `#` comments yield nothing.
fn run_line(line: &str, json: bool) -> Option<Output> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return None;
    }
    let mut argv = vec!["requitable"];
    if json {
        argv.push("--json");
    }
    argv.extend(line.split_whitespace());
    let out = match Cli::try_parse_from(argv) {
        Ok(Cli {
            command: Command::Batch,
            ..
        }) => Output {
            stderr: "error: batch cannot be nested\n".into(),
            status: EXIT_USAGE,
            ..Output::default()
        },
        Ok(cli) => run(&cli, &mut std::io::empty()),
        Err(e) => Output {
            stderr: e.render().to_string(),
            status: EXIT_USAGE,
            ..Output::default()
        },
    };
    Some(out)
}

fn batch(stdin: &mut dyn BufRead, json: bool) -> Output {
    let lines: Vec<String> = match stdin.lines().collect() {
        Ok(lines) => lines,
        Err(e) => {
            return Output {
                stderr: format!("error: reading stdin: {e}\n"),
                status: EXIT_USAGE,
                ..Output::default()
            }
        }
    };
    let results: Vec<(usize, Output)> = lines
        .par_iter()
        .enumerate()
        .filter_map(|(i, line)| run_line(line, json).map(|out| (i + 1, out)))
        .collect();
    let mut total = Output::default();
    for (line_no, out) in results {
        total.stdout.push_str(&out.stdout);
        for msg in out.stderr.lines().filter(|l| !l.trim().is_empty()) {
            let _ = writeln!(total.stderr, "line {line_no}: {msg}");
        }
        total.status = total.status.max(out.status);
    }
    total
}
