//! `crosskit`: evaluate crossing predicates, check the hierarchy, render SVG.
//!
//! Exit codes: 0 clean, 1 error, 2 ambiguity flags, 3 hierarchy violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crosskit_core::constructions::PairName;
use crosskit_core::hierarchy::{run_suite, ExtraPair, PairSource, SuiteSpec};
use crosskit_core::raster::{RasterGrid, DEFAULT_RESOLUTION};
use crosskit_core::report::{PairReport, ReportDocument};
use crosskit_core::shapefile::ShapeFile;
use crosskit_core::svg::{render, SvgOptions};
use crosskit_core::tangency::{common_supporting_lines, SearchConfig};
use crosskit_core::ConvexBody;

const EXIT_ERROR: u8 = 1;
const EXIT_AMBIGUOUS: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "crosskit",
    version,
    about = "Crossing relations of planar convex bodies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the five crossing predicates for a pair of bodies.
    Eval(EvalArgs),
    /// Check the implication chain over named constructions and random pairs.
    Hierarchy(HierarchyArgs),
    /// Render bodies, common supporting lines and shaded differences as SVG.
    Render(RenderArgs),
    /// Print the explicit geometry of a named construction as a shape file.
    Export {
        /// Construction name, e.g. hexagon_pair.
        name: String,
    },
}

#[derive(Args, Clone)]
struct SearchArgs {
    /// Support-gap samples over the full turn.
    #[arg(long, env = "CROSSKIT_DEFAULT_GRID", default_value_t = 4096)]
    grid_n: usize,
    /// Zero and tie tolerance.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig> {
        if self.grid_n < 16 {
            bail!("--grid-n must be at least 16");
        }
        // boundary events are verified to 1e-6; the band must stay well inside
        if !(self.tol > 0.0 && self.tol <= 1e-7) {
            bail!("--tol must lie in (0, 1e-7]");
        }
        Ok(SearchConfig {
            zero_tol: self.tol,
            tie_tol: self.tol,
            ..SearchConfig::with_grid(self.grid_n)
        })
    }
}

#[derive(Args, Clone)]
struct Input {
    /// Shape file (JSON, version 1).
    #[arg(required_unless_present = "named", conflicts_with = "named")]
    file: Option<PathBuf>,
    /// Use a named construction instead of a file.
    #[arg(long)]
    named: Option<String>,
    /// Body indices in file order, e.g. 0,1.
    #[arg(long, value_parser = parse_pair)]
    pair: Option<(usize, usize)>,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two indices i,j")?;
    let idx = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad index `{t}`: {e}"))
    };
    Ok((idx(a)?, idx(b)?))
}

struct Loaded {
    label: String,
    bodies: Vec<ConvexBody>,
    expected: Option<crosskit_core::crossing::Predicates>,
}

impl Input {
    fn load(&self) -> Result<Loaded> {
        if let Some(name) = &self.named {
            let known = || PairName::ALL.map(|p| p.as_str()).join(", ");
            let pn = PairName::parse(name)
                .with_context(|| format!("unknown construction `{name}` (known: {})", known()))?;
            let np = pn.build();
            return Ok(Loaded {
                label: np.name.clone(),
                bodies: vec![np.d, np.l],
                expected: Some(np.expected),
            });
        }
        let path = self.file.as_ref().expect("clap requires a file or --named");
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = ShapeFile::parse(&text)?;
        let bodies = file.bodies()?;
        // a file holding exactly one named pair carries its expectations
        let expected = match file.shapes.as_slice() {
            [crosskit_core::shapefile::Shape::Named { name, member: None }] => {
                PairName::parse(name).map(|p| p.build().expected)
            }
            _ => None,
        };
        Ok(Loaded {
            label: path.display().to_string(),
            bodies,
            expected,
        })
    }

    fn select<'a>(
        &self,
        loaded: &'a Loaded,
    ) -> Result<(usize, usize, &'a ConvexBody, &'a ConvexBody)> {
        let (i, j) = self.pair.unwrap_or((0, 1));
        let n = loaded.bodies.len();
        if i >= n || j >= n {
            bail!("--pair {i},{j} out of range: {n} bodies available");
        }
        Ok((i, j, &loaded.bodies[i], &loaded.bodies[j]))
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    search: SearchArgs,
    /// Also run the raster referee.
    #[arg(long)]
    oracle: bool,
    /// Referee resolution.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    oracle_n: usize,
    /// Write the referee bitmap (binary PGM) here.
    #[arg(long)]
    pgm: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Include wall-clock timing (makes output non-deterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct HierarchyArgs {
    #[command(flatten)]
    search: SearchArgs,
    /// Number of random polygon pairs.
    #[arg(long, default_value_t = 10_000)]
    random: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Comma-separated construction names; default all.
    #[arg(long, value_delimiter = ',')]
    named: Option<Vec<String>>,
    /// Skip the named constructions.
    #[arg(long, conflicts_with = "named")]
    no_named: bool,
    /// Shape files whose first two bodies join the suite; an `expected`
    /// block in the file is checked as well.
    #[arg(long = "pairs", value_name = "FILE")]
    pairs: Vec<PathBuf>,
    /// Run the raster referee at this resolution on every pair.
    #[arg(long)]
    oracle_n: Option<usize>,
    /// Directory for replay files of violating pairs.
    #[arg(long, default_value = ".")]
    replay_dir: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    search: SearchArgs,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Omit common supporting lines.
    #[arg(long)]
    no_lines: bool,
    /// Image size in pixels.
    #[arg(long, default_value_t = 640)]
    size: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Hierarchy(a) => cmd_hierarchy(a),
        Command::Render(a) => cmd_render(a),
        Command::Export { name } => cmd_export(&name),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn cmd_eval(a: EvalArgs) -> Result<u8> {
    let cfg = a.search.config()?;
    let loaded = a.input.load()?;
    let (i, j, d, l) = a.input.select(&loaded)?;
    let start = Instant::now();
    let mut pr = PairReport::evaluate(&loaded.label, d, l, &cfg, a.oracle.then_some(a.oracle_n))?;
    if a.timing {
        pr.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    pr.indices = Some((i, j));
    if a.input.pair.unwrap_or((0, 1)) == (0, 1) {
        pr.expected = loaded.expected;
    }
    if let Some(path) = &a.pgm {
        let grid = RasterGrid::new(d, l, a.oracle_n)?;
        let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        grid.write_pgm(std::io::BufWriter::new(f))?;
    }
    let violations = pr.report.predicates.violations();
    let mut doc = ReportDocument::new(cfg);
    doc.pairs.push(pr);
    if a.json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_text());
    }
    if !violations.is_empty() {
        bail!("internal consistency failure: {}", violations.join(", "));
    }
    Ok(if doc.is_ambiguous() {
        EXIT_AMBIGUOUS
    } else {
        0
    })
}

fn cmd_hierarchy(a: HierarchyArgs) -> Result<u8> {
    let config = a.search.config()?;
    let named = if a.no_named {
        Vec::new()
    } else if let Some(names) = &a.named {
        names
            .iter()
            .map(|n| {
                PairName::parse(n.trim()).with_context(|| format!("unknown construction `{n}`"))
            })
            .collect::<Result<_>>()?
    } else {
        PairName::ALL.to_vec()
    };
    let mut extra = Vec::new();
    for path in &a.pairs {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = ShapeFile::parse(&text).with_context(|| path.display().to_string())?;
        let mut bodies = file
            .bodies()
            .with_context(|| path.display().to_string())?
            .into_iter();
        let (Some(d), Some(l)) = (bodies.next(), bodies.next()) else {
            bail!("{}: need at least two bodies", path.display());
        };
        extra.push(ExtraPair {
            label: path.display().to_string(),
            d,
            l,
            expected: file.expected,
        });
    }
    let spec = SuiteSpec {
        named,
        random_pairs: a.random,
        seed: a.seed,
        config,
        oracle_n: a.oracle_n,
        extra,
    };
    let start = Instant::now();
    let summary = run_suite(&spec, |o| {
        if o.ambiguous {
            eprintln!("excluded (ambiguous): {}", o.source);
        }
        if let Some(e) = &o.error {
            eprintln!("error: {}: {e}", o.source);
        }
    });
    let elapsed = start.elapsed();

    for (k, v) in summary.violations.iter().enumerate() {
        let path = a.replay_dir.join(format!("violation-{k}.json"));
        write_replay(&path, &v.replay)?;
        eprintln!(
            "violation on {} ({}): replay in {}",
            v.source,
            v.implications.join(", "),
            path.display()
        );
    }
    for (k, s) in summary
        .separations
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.holds)
    {
        let np = s.pair.build();
        let path = a.replay_dir.join(format!("separation-{k}.json"));
        write_replay(&path, &ShapeFile::from_pair(&np))?;
        eprintln!(
            "separation `{}` failed on {}: replay in {}",
            s.claim,
            s.pair.as_str(),
            path.display()
        );
    }

    if a.json {
        let mut v = serde_json::to_value(&summary)?;
        if a.timing {
            v["timing_s"] = serde_json::json!(elapsed.as_secs_f64());
        }
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("pairs evaluated: {}", summary.evaluated);
        println!(
            "ambiguous (excluded): {} ({:.3}%)",
            summary.ambiguous.len(),
            100.0 * summary.ambiguous_fraction()
        );
        println!("errors: {}", summary.errors.len());
        println!("implication violations: {}", summary.violations.len());
        for s in &summary.separations {
            println!(
                "separation {:<14} {:<22} {}",
                s.pair.as_str(),
                s.claim,
                if s.holds { "ok" } else { "FAILED" }
            );
        }
        if summary.oracle_compared > 0 {
            println!(
                "referee τ agreement: {}/{} ({:.3}%), count agreement {}/{}",
                summary.oracle_tau_agree,
                summary.oracle_compared,
                100.0 * summary.oracle_tau_agree as f64 / summary.oracle_compared as f64,
                summary.oracle_count_agree,
                summary.oracle_compared
            );
            for s in &summary.oracle_tau_disagreements {
                if let PairSource::Random { seed, index } = s {
                    println!("  τ disagreement: seed {seed} index {index}");
                }
            }
        }
        if a.timing {
            println!("time: {:.2} s", elapsed.as_secs_f64());
        }
    }
    if !summary.violations.is_empty() || summary.separations.iter().any(|s| !s.holds) {
        return Ok(EXIT_VIOLATION);
    }
    if !summary.errors.is_empty() {
        return Ok(EXIT_ERROR);
    }
    Ok(0)
}

fn write_replay(path: &Path, file: &ShapeFile) -> Result<()> {
    fs::write(path, file.to_json() + "\n").with_context(|| format!("writing {}", path.display()))
}

fn cmd_render(a: RenderArgs) -> Result<u8> {
    let cfg = a.search.config()?;
    let loaded = a.input.load()?;
    let opts = SvgOptions {
        size_px: a.size,
        ..SvgOptions::default()
    };
    let svg = if loaded.bodies.len() == 1 {
        render(&[&loaded.bodies[0]], &[], &opts)
    } else {
        let (_, _, d, l) = a.input.select(&loaded)?;
        let lines = if a.no_lines {
            Vec::new()
        } else {
            common_supporting_lines(d, l, &cfg).lines
        };
        render(&[d, l], &lines, &opts)
    };
    match &a.output {
        Some(p) => fs::write(p, svg).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{svg}"),
    }
    Ok(0)
}

fn cmd_export(name: &str) -> Result<u8> {
    let pn = PairName::parse(name).with_context(|| format!("unknown construction `{name}`"))?;
    println!("{}", ShapeFile::from_pair(&pn.build()).to_json());
    Ok(0)
}
