use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use albertson_core::bounds::{dirac_edges, gallai_edges, join_refined_edges, ks_edges, min_edges, CriticalParams};
use albertson_core::crossing::{
    counting_lower, cr_nmp, crossing_lemma_lower, linear_bound, linear_lower, optimize_p, zarankiewicz,
    LinearRuleId, SamplingParams,
};
use albertson_core::exact::{parse_rational, to_decimal, to_fraction, Rational};
use albertson_core::graph::{
    build_family, chromatic_number, contains_topological_clique, is_critical, parse_graph6_list, serialize_graph6,
    Budget, FamilySpec, Graph,
};
use albertson_core::verifier::{
    catlin_check, lemma357_check, remark2_check, render_report, tail_certificate, verify_with, RangeCheck,
    ReportFormat, Verdict, VerifyOptions,
};
use albertson_core::{Error, Execution};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "albertson", version, about = "Exact crossing-number checks for color-critical graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Node limit for each exact graph search.
    #[arg(long, global = true, env = "ALBERTSON_SEARCH_BUDGET")]
    max_nodes: Option<u64>,
    /// Largest graph accepted by the coloring routines.
    #[arg(long, global = true)]
    coloring_vertices: Option<usize>,
    /// Largest graph accepted by the subdivision search.
    #[arg(long, global = true)]
    subdivision_vertices: Option<usize>,
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
}

impl GlobalOpts {
    fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(v) = self.max_nodes {
            b.max_nodes = v;
        }
        if let Some(v) = self.coloring_vertices {
            b.coloring_vertices = v;
        }
        if let Some(v) = self.subdivision_vertices {
            b.subdivision_vertices = v;
        }
        b
    }

    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Markdown,
    Csv,
    Structured,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Markdown => ReportFormat::Markdown,
            Format::Csv => ReportFormat::Csv,
            Format::Structured => ReportFormat::Structured,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full case analysis for K_r-free drawings of r-critical graphs.
    Verify {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Use the best linear rule and the smallest certified tail instead
        /// of the tabulated choices.
        #[arg(long)]
        automatic: bool,
    },
    /// Case rows only.
    Table {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Edge lower bounds for an r-critical graph on n vertices.
    Edges {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
    },
    /// Every crossing lower bound for n vertices and m edges.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        /// Sampling probability, e.g. 0.719 or 719/1000. Optimized when omitted.
        #[arg(long, value_parser = parse_probability)]
        p: Option<Rational>,
    },
    /// Averaged linear bound over all s-vertex subsets.
    Counting {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        s: u32,
        /// Linear rule applied to each subset, 1 to 5.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=5))]
        rule: u8,
    },
    /// Counting-argument check on 3.57r ≤ n ≤ 4r.
    Lemma357 {
        #[arg(long)]
        r: u32,
    },
    /// Crossing-lemma chain on r ≤ n ≤ 3.57r.
    Remark2 {
        #[arg(long)]
        r: u32,
    },
    /// Tail certificate for a fixed sampling probability.
    Tail {
        #[arg(long)]
        r: u32,
        #[arg(long, value_parser = parse_probability)]
        p: Rational,
        #[arg(long)]
        n0: u32,
    },
    /// Drawing-count comparison for the blown-up 5-cycles up to k.
    Catlin {
        #[arg(long)]
        k: u64,
    },
    /// Build a family member and check it.
    Families {
        /// delta, e, catlin, complete or join.
        #[arg(long)]
        kind: String,
        /// Comma-separated sizes, e.g. `2,1,2` for delta; for join, two
        /// specs separated by `+`.
        #[arg(long)]
        params: String,
    },
    /// Check every graph6 line of a file for r-criticality and a topological K_r.
    CheckList {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        r: usize,
    },
}

fn parse_probability(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: {s:?}"))
}

/// Exact value followed by a 4-place decimal.
fn q(x: &Rational) -> String {
    if x.is_integer() {
        to_fraction(x)
    } else {
        format!("{} ≈ {}", to_fraction(x), to_decimal(x, 4))
    }
}

struct Output {
    text: String,
    ok: bool,
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let budget = cli.global.budget();
    let mode = cli.global.execution();
    let mut out = String::new();
    let ok = match &cli.command {
        Command::Verify { r, format, automatic } => {
            let options = if *automatic { VerifyOptions::automatic() } else { VerifyOptions::published(*r) };
            let report = verify_with(*r, &options.with_execution(mode))?;
            out.push_str(&render_report(&report, (*format).into()));
            if report.verdict == Verdict::GapsRemain && !matches!(format, Format::Markdown) {
                let gaps: Vec<String> = report.gaps.iter().map(u32::to_string).collect();
                eprintln!("gaps: n = {}", gaps.join(", "));
            }
            report.verdict == Verdict::Verified
        }
        Command::Table { r, format } => {
            let report = verify_with(*r, &VerifyOptions::published(*r).with_execution(mode))?;
            match format {
                Format::Markdown => {
                    let full = render_report(&report, ReportFormat::Markdown);
                    for line in full.lines().filter(|l| l.starts_with('|')) {
                        writeln!(out, "{line}").unwrap();
                    }
                }
                Format::Csv => out.push_str(&render_report(&report, ReportFormat::Csv)),
                Format::Structured => {
                    out.push_str(&serde_json::to_string_pretty(&report.rows).expect("rows serialize"));
                    out.push('\n');
                }
            }
            report.rows.iter().all(|row| row.satisfied)
        }
        Command::Edges { r, n } => {
            let params = CriticalParams::new(*r, *n)?;
            writeln!(out, "r = {r}, n = {n}").unwrap();
            writeln!(out, "Dirac: {}", dirac_edges(params).m_min).unwrap();
            match gallai_edges(params) {
                Ok(b) => writeln!(out, "Gallai: {}", b.m_min).unwrap(),
                Err(_) => writeln!(out, "Gallai: n/a").unwrap(),
            }
            writeln!(out, "KS: {}", ks_edges(params).m_min).unwrap();
            if *n == 2 * r - 2 {
                writeln!(out, "JoinRefined: {}", join_refined_edges(*r)?.m_min).unwrap();
            }
            if let Ok(best) = min_edges(params) {
                writeln!(out, "min_edges: {} ({}, excess {})", best.m_min, best.rule.name(), best.excess).unwrap();
            }
            true
        }
        Command::Bound { n, m, p } => {
            writeln!(out, "n = {n}, m = {m}").unwrap();
            for id in LinearRuleId::ALL {
                let b = linear_bound(id, *n, *m)?;
                writeln!(out, "linear {id}: {} (raw {})", b.value, q(&b.raw)).unwrap();
            }
            let best = linear_lower(*n, *m)?;
            writeln!(out, "best linear: {} via {:?}", best.value, best.method).unwrap();
            match crossing_lemma_lower(*n, *m) {
                Ok(b) => writeln!(out, "crossing lemma: {} (raw {}) via {:?}", b.value, q(&b.raw), b.method).unwrap(),
                Err(Error::Inapplicable(_)) => writeln!(out, "crossing lemma: n/a").unwrap(),
                Err(e) => return Err(e),
            }
            let p = match p {
                Some(p) => p.clone(),
                None => optimize_p(*n, *m)?,
            };
            let b = cr_nmp(*n, *m, &p)?;
            writeln!(out, "p: {}", q(&p)).unwrap();
            writeln!(out, "sampling: {} (raw {})", b.value, q(&b.raw)).unwrap();
            true
        }
        Command::Counting { n, m, s, rule } => {
            let base = LinearRuleId::from_index(*rule).expect("range checked by clap");
            let b = counting_lower(*n, *m, SamplingParams::new(*s, base))?;
            writeln!(out, "counting (s = {s}, rule {base}): {} (raw {})", b.value, q(&b.raw)).unwrap();
            true
        }
        Command::Lemma357 { r } => range_check(&mut out, "3.57r counting", *r, lemma357_check(*r, mode)?),
        Command::Remark2 { r } => range_check(&mut out, "crossing-lemma chain", *r, remark2_check(*r)?),
        Command::Tail { r, p, n0 } => {
            let c = tail_certificate(*r, p, *n0)?;
            writeln!(out, "r = {r}, p = {}, n0 = {n0}, target Z(r) = {}", q(&c.p), c.target).unwrap();
            writeln!(out, "slope: {}", q(&c.slope)).unwrap();
            writeln!(out, "intercept: {}", q(&c.intercept)).unwrap();
            writeln!(out, "tail term at n0: {}", q(&c.tail_term_at_n0)).unwrap();
            writeln!(out, "anchor: {}", q(&c.anchor)).unwrap();
            writeln!(out, "slope positive: {}", c.slope_positive).unwrap();
            writeln!(out, "tail decreasing: {}", c.tail_decreasing).unwrap();
            writeln!(out, "anchor meets target: {}", c.anchor_meets_target).unwrap();
            writeln!(out, "valid: {}", c.valid).unwrap();
            c.valid
        }
        Command::Catlin { k } => {
            let report = catlin_check(*k, mode)?;
            writeln!(out, "lower coefficient: {}", q(&report.lower_coefficient)).unwrap();
            writeln!(out, "upper coefficient: {}", q(&report.upper_coefficient)).unwrap();
            writeln!(out, "k,lower,upper,holds").unwrap();
            for row in &report.rows {
                writeln!(out, "{},{},{},{}", row.k, row.lower, row.upper, row.holds).unwrap();
            }
            let failing: Vec<String> = report.failures.iter().filter(|&&k| k >= 2).map(u64::to_string).collect();
            match report.holds_from {
                Some(k0) => writeln!(out, "holds from k = {k0}").unwrap(),
                None => writeln!(out, "does not hold at k = {k}").unwrap(),
            }
            if !failing.is_empty() {
                writeln!(out, "fails for k = {}", failing.join(", ")).unwrap();
            }
            report.lower_coefficient > report.upper_coefficient && failing.is_empty()
        }
        Command::Families { kind, params } => {
            let spec: FamilySpec = format!("{kind}:{params}").parse()?;
            let g = build_family(&spec)?;
            writeln!(out, "family: {spec}").unwrap();
            let chi = chromatic_number(&g, &budget)?;
            writeln!(out, "vertices: {}, edges: {}, chromatic number: {chi}", g.vertex_count(), g.edge_count())
                .unwrap();
            writeln!(out, "graph6: {}", serialize_graph6(&g)).unwrap();
            let critical = is_critical(&g, chi, &budget, mode)?;
            writeln!(out, "{chi}-critical: {critical}").unwrap();
            hajos_line(&mut out, &g, chi, &budget)?
        }
        Command::CheckList { file, r } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", file.display())))?;
            let graphs = parse_graph6_list(&text)?;
            let mut all_ok = true;
            for (i, g) in graphs.iter().enumerate() {
                let critical = is_critical(g, *r, &budget, mode)?;
                writeln!(
                    out,
                    "graph {}: {} vertices, {} edges, {r}-critical: {critical}",
                    i + 1,
                    g.vertex_count(),
                    g.edge_count()
                )
                .unwrap();
                let has_clique = hajos_line(&mut out, g, *r, &budget)?;
                all_ok &= critical && has_clique;
            }
            writeln!(out, "{} graph(s), all pass: {all_ok}", graphs.len()).unwrap();
            all_ok
        }
    };
    Ok(Output { text: out, ok })
}

fn hajos_line(out: &mut String, g: &Graph, t: usize, budget: &Budget) -> Result<bool, Error> {
    match contains_topological_clique(g, t, budget)? {
        Some(w) => {
            writeln!(out, "topological K_{t}: yes").unwrap();
            for line in w.to_string().lines() {
                writeln!(out, "  {line}").unwrap();
            }
            Ok(true)
        }
        None => {
            writeln!(out, "topological K_{t}: no").unwrap();
            Ok(false)
        }
    }
}

fn range_check(out: &mut String, label: &str, r: u32, check: RangeCheck) -> bool {
    writeln!(out, "{label} for r = {r}: {}", if check.holds { "holds" } else { "fails" }).unwrap();
    writeln!(out, "smallest margin: {} at n = {}", q(&check.min_margin), check.argmin_n).unwrap();
    writeln!(out, "target Z(r) = {}", zarankiewicz(u64::from(r))).unwrap();
    if !check.failures.is_empty() {
        let f: Vec<String> = check.failures.iter().map(u32::to_string).collect();
        writeln!(out, "failing n: {}", f.join(", ")).unwrap();
    }
    check.holds
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{}", output.text);
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ (Error::Domain(_) | Error::Construction(_) | Error::Parse { .. } | Error::Inapplicable(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
