use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skewhook::counting;
use skewhook::excited::enumerate_excited;
use skewhook::hillman_grassl::{hg_forward, hg_inverse, RppLambda, WeightArray};
use skewhook::json::{ArrayJson, DiagramJson, TableauJson};
use skewhook::phi::{phi, phi_inverse, verify_bijection, verify_commutation};
use skewhook::render;
use skewhook::report::VerificationReport;
use skewhook::shape::{Partition, SkewShape};
use skewhook::strips::verify_gamma_theta;
use skewhook::sweep::skew_shapes_up_to;
use skewhook::tableaux::{
    enumerate_flagged_skew, enumerate_min_via_moves, enumerate_oot, SkewTableau,
};
use skewhook::Error;

/// Exact enumeration and verification for skew-shape hook-length formulas.
#[derive(Parser)]
#[command(name = "skewhook", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List combinatorial objects of one shape in canonical order.
    Enumerate {
        what: EnumerateWhat,
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Print at most this many items (the count line is unaffected).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Count standard Young tableaux of a skew shape.
    Count {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Run a verification suite on one shape or on a sweep of shapes.
    Verify {
        suite: Suite,
        #[command(flatten)]
        shape: OptionalShapeArgs,
        /// Sweep every skew shape with |λ| up to this size.
        #[arg(long, conflicts_with_all = ["outer", "inner"])]
        sweep_max_size: Option<usize>,
        /// Truncation degree for the q-series suites.
        #[arg(long, default_value_t = 12)]
        degree: usize,
        /// Seed for randomized checks (fixed default for reproducibility).
        #[arg(long, default_value_t = 0x5eed_cafe)]
        seed: u64,
    },
    /// Apply the bijection between excited diagrams and minimal tableaux.
    Map {
        direction: MapDirection,
        #[command(flatten)]
        shape: OptionalShapeArgs,
        /// Input file (defaults to stdin).
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
    /// The Hillman–Grassl correspondence on arrays of shape λ.
    Hg {
        direction: HgDirection,
        /// Input file (defaults to stdin).
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateWhat {
    Excited,
    SsytMin,
    Sf,
    Oot,
    Broken,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Hlf,
    Nhlf,
    Oof,
    Minimal,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    GammaTheta,
    Commutation,
    Bijection,
    PhiHg,
    RestrictedHg,
    Additivity,
    Qnhlf,
    Littlewood,
    LeadingTerms,
    TermCounts,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapDirection {
    Phi,
    PhiInverse,
}

#[derive(Clone, Copy, ValueEnum)]
enum HgDirection {
    Apply,
    Invert,
}

#[derive(Args)]
struct ShapeArgs {
    /// Outer partition, comma-separated, e.g. 5,5,3,3,2.
    #[arg(long)]
    outer: String,
    /// Inner partition; omit for a straight shape.
    #[arg(long, default_value = "")]
    inner: String,
}

#[derive(Args)]
struct OptionalShapeArgs {
    #[arg(long)]
    outer: Option<String>,
    #[arg(long, default_value = "")]
    inner: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, String>;

fn parse_shape(outer: &str, inner: &str) -> CliResult<SkewShape> {
    let outer = Partition::parse(outer).map_err(|e| e.to_string())?;
    let inner = Partition::parse(inner).map_err(|e| e.to_string())?;
    SkewShape::new(outer, inner).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Enumerate {
            what,
            shape,
            format,
            limit,
        } => {
            let s = parse_shape(&shape.outer, &shape.inner)?;
            enumerate(what, &s, format, limit)
        }
        Command::Count { shape, method } => {
            let s = parse_shape(&shape.outer, &shape.inner)?;
            count(&s, method)
        }
        Command::Verify {
            suite,
            shape,
            sweep_max_size,
            degree,
            seed,
        } => verify(suite, shape, sweep_max_size, degree, seed),
        Command::Map {
            direction,
            shape,
            input,
        } => map_cmd(direction, shape, input),
        Command::Hg { direction, input } => hg_cmd(direction, input),
    }
}

fn read_input(input: Option<std::path::PathBuf>) -> CliResult<String> {
    match input {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn enumerate(
    what: EnumerateWhat,
    s: &SkewShape,
    format: Format,
    limit: Option<usize>,
) -> CliResult<ExitCode> {
    let mut lines: Vec<String> = Vec::new();
    let count;
    match what {
        EnumerateWhat::Excited => {
            let items = enumerate_excited(s);
            count = items.len();
            for d in items {
                lines.push(match format {
                    Format::Json => serde_json::to_string(&DiagramJson::from(&d)).unwrap(),
                    Format::Ascii => render::render_diagram(&d),
                });
            }
        }
        EnumerateWhat::Broken => {
            let items = enumerate_excited(s);
            count = items.len();
            for d in items {
                lines.push(match format {
                    Format::Json => {
                        let broken: Vec<[usize; 2]> =
                            d.broken().iter().map(|c| [c.row, c.col]).collect();
                        serde_json::json!({ "broken": broken }).to_string()
                    }
                    Format::Ascii => render::render_broken(&d),
                });
            }
        }
        EnumerateWhat::SsytMin => {
            let items = enumerate_min_via_moves(s).map_err(|e| e.to_string())?;
            count = items.len();
            for t in items {
                lines.push(match format {
                    Format::Json => serde_json::to_string(&TableauJson::from(&t)).unwrap(),
                    Format::Ascii => render::render_tableau(&t),
                });
            }
        }
        EnumerateWhat::Sf => {
            let items = enumerate_flagged_skew(s);
            count = items.len();
            for t in items {
                lines.push(match format {
                    Format::Json => serde_json::to_string(&TableauJson::from(&t)).unwrap(),
                    Format::Ascii => render::render_tableau(&t),
                });
            }
        }
        EnumerateWhat::Oot => {
            let items = enumerate_oot(s);
            count = items.len();
            for t in items {
                lines.push(match format {
                    Format::Json => serde_json::json!({
                        "mu": t.mu().parts(),
                        "rows": t.row_entries(),
                    })
                    .to_string(),
                    Format::Ascii => render::render_mu_tableau(&t),
                });
            }
        }
    }
    let shown = limit.unwrap_or(lines.len()).min(lines.len());
    for line in &lines[..shown] {
        println!("{line}");
        if matches!(format, Format::Ascii) {
            println!();
        }
    }
    println!("count {count}");
    Ok(ExitCode::SUCCESS)
}

fn count(s: &SkewShape, method: Method) -> CliResult<ExitCode> {
    let straight_only = |s: &SkewShape| -> CliResult<()> {
        if !s.inner().is_empty() {
            return Err("the hook-length formula needs an empty inner shape".into());
        }
        Ok(())
    };
    match method {
        Method::Brute => println!("{}", skewhook::tableaux::count_syt(s)),
        Method::Hlf => {
            straight_only(s)?;
            println!("{}", counting::f_hlf(s.outer()).map_err(|e| e.to_string())?);
        }
        Method::Nhlf => println!("{}", counting::f_nhlf(s).map_err(|e| e.to_string())?),
        Method::Oof => println!("{}", counting::f_oof(s).map_err(|e| e.to_string())?),
        Method::Minimal => println!("{}", counting::f_minimal(s).map_err(|e| e.to_string())?),
        Method::All => {
            let brute = skewhook::tableaux::count_syt(s);
            let mut values = vec![("brute", brute.to_string())];
            values.push((
                "nhlf",
                counting::f_nhlf(s).map_err(|e| e.to_string())?.to_string(),
            ));
            values.push((
                "oof",
                counting::f_oof(s).map_err(|e| e.to_string())?.to_string(),
            ));
            if s.is_connected() {
                values.push((
                    "minimal",
                    counting::f_minimal(s).map_err(|e| e.to_string())?.to_string(),
                ));
            }
            if s.inner().is_empty() {
                values.push((
                    "hlf",
                    counting::f_hlf(s.outer())
                        .map_err(|e| e.to_string())?
                        .to_string(),
                ));
            }
            for (name, v) in &values {
                println!("{name} {v}");
            }
            let all_equal = values.iter().all(|(_, v)| *v == values[0].1);
            if !all_equal {
                eprintln!("error: methods disagree");
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Runs one suite on one shape. `Err` carries shape-level unsupportedness;
/// suites that cannot run on a shape report it as skipped at the sweep level.
fn run_suite(
    suite: Suite,
    s: &SkewShape,
    degree: usize,
    seed: u64,
) -> Result<VerificationReport, Error> {
    match suite {
        Suite::GammaTheta => verify_gamma_theta(s),
        Suite::Commutation => verify_commutation(s),
        Suite::Bijection => verify_bijection(s),
        Suite::PhiHg => skewhook::hillman_grassl::verify_phi_vs_hg(s),
        Suite::RestrictedHg => Ok(skewhook::hillman_grassl::verify_restricted(s, seed, 50)),
        Suite::Additivity => skewhook::hillman_grassl::verify_additivity(s),
        Suite::Qnhlf => Ok(counting::verify_qnhlf(s, degree)),
        Suite::Littlewood => {
            if !s.inner().is_empty() {
                return Err(Error::UnsupportedShape(
                    "littlewood applies to straight shapes",
                ));
            }
            Ok(counting::verify_littlewood(s.outer(), degree))
        }
        Suite::LeadingTerms => counting::verify_leading_terms(s),
        Suite::TermCounts => counting::verify_term_counts(s),
    }
}

fn verify(
    suite: Suite,
    shape: OptionalShapeArgs,
    sweep_max_size: Option<usize>,
    degree: usize,
    seed: u64,
) -> CliResult<ExitCode> {
    let report = match (shape.outer, sweep_max_size) {
        (Some(outer), None) => {
            let s = parse_shape(&outer, &shape.inner)?;
            run_suite(suite, &s, degree, seed).map_err(|e| e.to_string())?
        }
        (None, Some(max)) => {
            let shapes = skew_shapes_up_to(max);
            let suite_name = run_suite_name(suite);
            let mut total =
                VerificationReport::new(suite_name, &format!("sweep(max|λ|={max})"));
            let reports: Vec<Result<VerificationReport, Error>> = {
                use rayon::prelude::*;
                let pool = rayon_pool()?;
                pool.install(|| {
                    shapes
                        .par_iter()
                        .map(|s| run_suite(suite, s, degree, seed))
                        .collect()
                })
            };
            for r in reports {
                match r {
                    Ok(r) => total.absorb(r),
                    Err(Error::UnsupportedShape(_)) => total.skip(1),
                    Err(e) => return Err(e.to_string()),
                }
            }
            total.finish()
        }
        _ => {
            return Err("pass either --outer [--inner] or --sweep-max-size".into());
        }
    };
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::GammaTheta => "gamma-theta",
        Suite::Commutation => "commutation",
        Suite::Bijection => "bijection",
        Suite::PhiHg => "phi-hg",
        Suite::RestrictedHg => "restricted-hg",
        Suite::Additivity => "additivity",
        Suite::Qnhlf => "qnhlf",
        Suite::Littlewood => "littlewood",
        Suite::LeadingTerms => "leading-terms",
        Suite::TermCounts => "term-counts",
    }
}

/// Thread pool honoring the SKEWHOOK_THREADS cap.
fn rayon_pool() -> CliResult<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("SKEWHOOK_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| format!("SKEWHOOK_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            return Err("SKEWHOOK_THREADS must be positive".into());
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

fn map_cmd(
    direction: MapDirection,
    shape: OptionalShapeArgs,
    input: Option<std::path::PathBuf>,
) -> CliResult<ExitCode> {
    let text = read_input(input)?;
    match direction {
        MapDirection::Phi => {
            let outer = shape
                .outer
                .ok_or("map phi needs --outer (and --inner) for the diagram's shape")?;
            let s = parse_shape(&outer, &shape.inner)?;
            let j: DiagramJson =
                serde_json::from_str(&text).map_err(|e| format!("bad diagram JSON: {e}"))?;
            let d = j.into_diagram(&s).map_err(|e| e.to_string())?;
            let t = phi(&d).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&TableauJson::from(&t)).unwrap());
        }
        MapDirection::PhiInverse => {
            let j: TableauJson =
                serde_json::from_str(&text).map_err(|e| format!("bad tableau JSON: {e}"))?;
            let t = SkewTableau::try_from(j).map_err(|e| e.to_string())?;
            let d = phi_inverse(&t).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string(&DiagramJson::from(&d)).unwrap()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn hg_cmd(direction: HgDirection, input: Option<std::path::PathBuf>) -> CliResult<ExitCode> {
    let text = read_input(input)?;
    let j: ArrayJson = serde_json::from_str(&text).map_err(|e| format!("bad array JSON: {e}"))?;
    match direction {
        HgDirection::Apply => {
            let rpp = RppLambda::try_from(j).map_err(|e| e.to_string())?;
            let array = hg_forward(&rpp);
            println!("{}", serde_json::to_string(&ArrayJson::from(&array)).unwrap());
        }
        HgDirection::Invert => {
            let array = WeightArray::try_from(j).map_err(|e| e.to_string())?;
            let rpp = hg_inverse(&array);
            println!("{}", serde_json::to_string(&ArrayJson::from(&rpp)).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}
