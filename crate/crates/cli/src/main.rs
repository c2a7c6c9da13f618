//! `perrin-cordial` command-line tool.
//!
//! Exit codes: 0 success / feasible / cordial, 1 infeasible / not cordial,
//! 2 input or capability error.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use perrin_cordial::claims::{
    self, bistar_by_sum, bistar_sums_markdown, builtin_claims, claim_for, default_grid, parse_grid,
    sweep, to_csv, to_markdown, Claim, ClaimCheckRow,
};
use perrin_cordial::constructors::{construct, Outcome};
use perrin_cordial::io::{export_dot, read_graph, read_labeling, write_graph, write_labeling};
use perrin_cordial::labeling::{is_cordial, tally_labeling, validate_for};
use perrin_cordial::oracle::{decide_exhaustive, SearchConfig, Verdict, DEFAULT_MAX_VERTICES};
use perrin_cordial::perrin::{perrin_parity, perrin_value};
use perrin_cordial::{Error, Family, FamilySpec, Graph, PerrinLabeling};

#[derive(Parser)]
#[command(
    name = "perrin-cordial",
    version,
    about = "Perrin cordial labelings of graphs"
)]
struct Cli {
    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format: tsv (seq), json (gen, label, decide), csv or md (sweep), dot (export-dot).
    #[arg(long, global = true)]
    format: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FamilyArgs {
    /// path, cycle, complete, complete-bipartite, star, wheel, bistar,
    /// triangular-snake, friendship or jellyfish
    family: String,
    params: Vec<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let fam = Family::parse(&self.family)
            .with_context(|| format!("unknown family {:?}", self.family))?;
        Ok(fam.spec(&self.params)?)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print Perrin numbers P_0..=P_N as TSV.
    Seq {
        #[arg(long)]
        upto: usize,
        /// Add a parity column.
        #[arg(long)]
        parity: bool,
    },
    /// Generate a family graph as JSON.
    Gen(FamilyArgs),
    /// Build a labeling with the family constructor.
    Label {
        #[command(flatten)]
        family: FamilyArgs,
        /// Write the labeling JSON here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write a DOT rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a labeling against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Decide feasibility of an arbitrary graph by exhaustive search.
    Decide {
        #[arg(long)]
        graph: PathBuf,
        /// Vertex cap for the search.
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_n: usize,
        /// Emit the least witness labeling.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Compare a built-in claim with the deciders over a grid.
    Sweep {
        /// A family name, or `all` for every claim on its default grid.
        family: String,
        /// `a..b`, `a..=b`, `a,b,c`; two-parameter families take `X x Y`.
        #[arg(long)]
        range: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_n: usize,
        /// Write one witness JSON per feasible row into this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Render a labeled graph as DOT.
    ExportDot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
    },
}

/// Failure that maps to exit code 1 rather than 2.
struct Negative;

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn check_format(format: Option<&str>, allowed: &[&str]) -> Result<String> {
    let f = format.unwrap_or(allowed[0]);
    if !allowed.contains(&f) {
        bail!("format {f:?} not supported here (expected one of {allowed:?})");
    }
    Ok(f.to_string())
}

fn load_graph(p: &Path) -> Result<Graph> {
    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
    read_graph(&text).with_context(|| format!("parsing graph {}", p.display()))
}

fn load_labeling(p: &Path) -> Result<PerrinLabeling> {
    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
    read_labeling(&text).with_context(|| format!("parsing labeling {}", p.display()))
}

fn run(cli: Cli) -> Result<Result<(), Negative>> {
    let out = cli.out.as_deref();
    let format = cli.format.as_deref();
    match cli.cmd {
        Cmd::Seq { upto, parity } => {
            check_format(format, &["tsv"])?;
            let mut text = String::from(if parity {
                "index\tvalue\tparity\n"
            } else {
                "index\tvalue\n"
            });
            for i in 0..=upto {
                text.push_str(&format!("{i}\t{}", perrin_value(i)));
                if parity {
                    text.push_str(&format!("\t{}", perrin_parity(i)));
                }
                text.push('\n');
            }
            emit(out, &text)?;
        }
        Cmd::Gen(fam) => {
            check_format(format, &["json"])?;
            let g = fam.spec()?.generate()?;
            emit(out, &(write_graph(&g) + "\n"))?;
        }
        Cmd::Label { family, json, dot } => {
            check_format(format, &["json"])?;
            let spec = family.spec()?;
            match construct(spec)? {
                Outcome::Constructed(c) => {
                    eprintln!(
                        "{spec}: cordial, e0 = {}, e1 = {}, skipped index {}",
                        c.tally.e0,
                        c.tally.e1,
                        c.labeling.skipped_index().expect("valid labeling")
                    );
                    let text = write_labeling(&c.labeling) + "\n";
                    match json.as_deref() {
                        Some(p) => emit(Some(p), &text)?,
                        None if dot.is_none() || out.is_some() => emit(out, &text)?,
                        None => {}
                    }
                    if let Some(p) = dot {
                        emit(Some(&p), &export_dot(&c.graph, &c.labeling)?)?;
                    }
                }
                Outcome::Infeasible(i) => {
                    eprintln!("{spec}: constructor found no labeling: {}", i.reason);
                    return Ok(Err(Negative));
                }
            }
        }
        Cmd::Verify { graph, labeling } => {
            let g = load_graph(&graph)?;
            let f = load_labeling(&labeling)?;
            validate_for(&g, &f).context("labeling is not a valid Perrin labeling")?;
            let t = tally_labeling(&g, &f)?;
            let cordial = is_cordial(&t);
            let verdict = if cordial { "cordial" } else { "not cordial" };
            emit(out, &format!("{verdict}: e0 = {}, e1 = {}\n", t.e0, t.e1))?;
            if !cordial {
                return Ok(Err(Negative));
            }
        }
        Cmd::Decide {
            graph,
            max_n,
            witness,
            parallel,
        } => {
            check_format(format, &["json"])?;
            if max_n > DEFAULT_MAX_VERTICES {
                eprintln!("warning: vertex cap raised to {max_n}; the search may take very long");
            }
            let g = load_graph(&graph)?;
            let cfg = SearchConfig {
                max_vertices: max_n,
                parallel,
                want_witness: witness,
            };
            let verdict = match decide_exhaustive(&g, &cfg) {
                Err(e @ Error::GraphTooLarge { .. }) => bail!(e),
                other => other?,
            };
            match verdict {
                Verdict::Feasible { witness, searched } => {
                    eprintln!("feasible ({searched} even sets examined)");
                    if let Some(w) = witness {
                        emit(out, &(write_labeling(&w) + "\n"))?;
                    }
                }
                Verdict::Infeasible { reason, .. } => {
                    eprintln!("infeasible: {reason}");
                    return Ok(Err(Negative));
                }
            }
        }
        Cmd::Sweep {
            family,
            range,
            max_n,
            witness_dir,
        } => {
            let fmt = check_format(format, &["csv", "md"])?;
            let cfg = SearchConfig {
                max_vertices: max_n,
                ..SearchConfig::default()
            };
            let targets: Vec<(Claim, Vec<Vec<usize>>)> = if family == "all" {
                if range.is_some() {
                    bail!("--range cannot be combined with `all`");
                }
                builtin_claims()
                    .into_iter()
                    .map(|c| (c, default_grid(c.family)))
                    .collect()
            } else {
                let fam =
                    Family::parse(&family).with_context(|| format!("unknown family {family:?}"))?;
                let grid = match range {
                    Some(r) => parse_grid(&r, fam.arity()).map_err(anyhow::Error::msg)?,
                    None => default_grid(fam),
                };
                vec![(claim_for(fam), grid)]
            };
            let mut all_rows: Vec<ClaimCheckRow> = Vec::new();
            let mut md = String::new();
            for (claim, grid) in &targets {
                let rows = sweep(claim, grid, &cfg)?;
                if fmt == "md" {
                    md.push_str(&to_markdown(claim, &rows));
                    if claim.family == Family::Bistar {
                        md.push_str("\nBy m+n:\n\n");
                        md.push_str(&bistar_sums_markdown(&bistar_by_sum(&rows)));
                    }
                    md.push('\n');
                }
                let c = claims::agree_counts(&rows);
                eprintln!(
                    "{}: {} rows, {} agree, {} disagree, {} not comparable",
                    claim.family,
                    rows.len(),
                    c.agree,
                    c.disagree,
                    c.unknown
                );
                all_rows.extend(rows);
            }
            if let Some(dir) = &witness_dir {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for r in &all_rows {
                    if let (Some(name), Some(w)) = (r.witness_file(), &r.witness) {
                        fs::write(dir.join(name), write_labeling(w) + "\n")?;
                    }
                }
            }
            let text = if fmt == "md" {
                md
            } else {
                to_csv(&all_rows, witness_dir.is_some())
            };
            emit(out, &text)?;
        }
        Cmd::ExportDot { graph, labeling } => {
            check_format(format, &["dot"])?;
            let g = load_graph(&graph)?;
            let f = load_labeling(&labeling)?;
            emit(out, &export_dot(&g, &f)?)?;
        }
    }
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Negative)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
