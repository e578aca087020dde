use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use fiedler_core::embeddings::certify;
use fiedler_core::families::{predicted_lambda2, FamilySpec};
use fiedler_core::io::{parse_graph_file, GraphFile};
use fiedler_core::separators::{bfs_separator, outerplanar_separator, tree_separator, MaximalOuterplanarGraph};
use fiedler_core::spectra::{fiedler_value, laplacian_spectrum};
use fiedler_core::verify::{run_checks, sweep, sweep_to_csv, CheckKind};
use fiedler_core::{Error, Graph, VertexSet};

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_CHECK: u8 = 4;

#[derive(Parser)]
#[command(name = "fiedler", version, about = "Fiedler values, separator certificates and planar extremal families")]
struct Cli {
    /// Eigensolver tolerance (relative off-diagonal mass).
    #[arg(long, global = true, env = "FF_TOL", default_value_t = 1e-10)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print λ2 of a graph.
    Fiedler {
        /// Edge-list or triangulation file, or a family spec such as `doublewheel:10`.
        input: String,
    },
    /// Print the Laplacian spectrum, one eigenvalue per line.
    Spectrum { input: String },
    /// Build and verify a separator certificate.
    Certify(CertifyArgs),
    /// Run the inequality checks over the built-in corpora.
    Check {
        /// Checks to run (default: all). One of: fiedler, molitierno,
        /// spielman-teng, connectivity, bipartite-edges, bipartite-two.
        checks: Vec<String>,
        /// Print failing rows only.
        #[arg(long)]
        failures_only: bool,
    },
    /// Compare numeric λ2 with the closed form over a range of sizes (CSV).
    Sweep(SweepArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["x", "auto_outerplanar", "auto_tree", "auto_bfs"])))]
struct CertifyArgs {
    input: String,
    /// Separator vertices, comma separated.
    #[arg(long, value_delimiter = ',')]
    x: Vec<usize>,
    /// Dual-tree construction; needs a triangulation file or `fan:n`.
    #[arg(long)]
    auto_outerplanar: bool,
    /// Centroid plus refinement; needs a tree.
    #[arg(long)]
    auto_tree: bool,
    /// BFS-layer refinement; any connected graph.
    #[arg(long)]
    auto_bfs: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Family: doublewheel, quadrangulation, fan or kh:<h>.
    family: String,
    /// Smallest n (default: start of the closed form's validity range).
    #[arg(long)]
    from: Option<usize>,
    #[arg(long, default_value_t = 200)]
    to: usize,
    /// Step between sizes (default: 2 for even-only families, else 1).
    #[arg(long)]
    step: Option<usize>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also emit rows outside the validity range, without a closed form.
    #[arg(long)]
    include_exceptions: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: EXIT_PARSE, message: message.into() }
    }

    fn precondition(e: impl ToString) -> Self {
        Failure { code: EXIT_PRECONDITION, message: e.to_string() }
    }
}

/// Loaded input: the graph, and the triangulation when one is known.
struct Input {
    graph: Graph,
    triangulation: Option<MaximalOuterplanarGraph>,
    label: String,
}

fn load(input: &str) -> Result<Input, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::parse(format!("{input}: {e}")))?;
        let file = parse_graph_file(&text).map_err(|e| Failure::parse(format!("{input}: {e}")))?;
        let triangulation = match &file {
            GraphFile::Triangulation(p) => Some(p.clone()),
            GraphFile::EdgeList(_) => None,
        };
        return Ok(Input { graph: file.graph(), triangulation, label: input.to_string() });
    }
    let spec: FamilySpec = input.parse().map_err(|e: Error| {
        Failure::parse(format!("{e} (and no file named `{input}` exists)"))
    })?;
    let graph = spec.build().map_err(|e| Failure::parse(format!("{input}: {e}")))?;
    let triangulation = match spec {
        FamilySpec::Fan(n) => Some(MaximalOuterplanarGraph::fan(n + 1).map_err(Failure::precondition)?),
        _ => None,
    };
    Ok(Input { graph, triangulation, label: spec.to_string() })
}

/// Twelve decimals, without a negative sign on zero.
fn fmt_value(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn cmd_fiedler(input: &str, tol: f64) -> Result<(), Failure> {
    let g = load(input)?.graph;
    let l2 = fiedler_value(&g, tol).map_err(Failure::precondition)?;
    println!("{}", fmt_value(l2));
    Ok(())
}

fn cmd_spectrum(input: &str, tol: f64) -> Result<(), Failure> {
    let g = load(input)?.graph;
    let s = laplacian_spectrum(&g, false, tol).map_err(Failure::precondition)?;
    for v in s.eigenvalues {
        println!("{}", fmt_value(v));
    }
    Ok(())
}

fn cmd_certify(args: &CertifyArgs, tol: f64) -> Result<(), Failure> {
    let input = load(&args.input)?;
    let g = &input.graph;
    let (x, origin) = if args.auto_outerplanar {
        let p = input.triangulation.as_ref().ok_or_else(|| {
            Failure::precondition(format!(
                "{}: --auto-outerplanar needs a triangulation file or a fan spec",
                input.label
            ))
        })?;
        let sep = outerplanar_separator(p).map_err(Failure::precondition)?;
        (sep.separator.clone(), Some(sep.describe()))
    } else if args.auto_tree {
        let r = tree_separator(g).map_err(Failure::precondition)?;
        let origin = format!("tree centroid, {} refinement pass(es)", r.iterations);
        (r.separator, Some(origin))
    } else if args.auto_bfs {
        let r = bfs_separator(g).map_err(Failure::precondition)?;
        let origin = format!("bfs layers, {} refinement pass(es)", r.iterations);
        (r.separator, Some(origin))
    } else {
        (VertexSet::new(args.x.iter().copied()), None)
    };
    let mut cert = certify(g, &x).map_err(Failure::precondition)?;
    if let Some(origin) = origin {
        cert = cert.with_origin(origin);
    }
    print!("{}", cert.to_text());
    let sound = cert.soundness(g, tol).map_err(Failure::precondition)?;
    eprintln!(
        "lambda2 {} <= quotient {} (bound {} = {}); |quotient - bound| = {:.3e}",
        fmt_value(sound.lambda2),
        fmt_value(cert.quotient),
        cert.bound_fraction(),
        fmt_value(cert.bound),
        sound.quotient_minus_bound.abs()
    );
    if sound.ok() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_CHECK,
            message: format!(
                "certificate not sound: upper bound holds = {}, matches bound = {}",
                sound.upper_bound_holds, sound.matches_bound
            ),
        })
    }
}

fn cmd_check(names: &[String], failures_only: bool, tol: f64) -> Result<(), Failure> {
    let kinds: Vec<CheckKind> = if names.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|n| n.parse().map_err(|_| Failure::parse(format!("unknown check `{n}`"))))
            .collect::<Result<_, _>>()?
    };
    let reports = run_checks(&kinds, tol).map_err(Failure::precondition)?;
    let failures: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    for r in &reports {
        if !failures_only || !r.pass {
            println!("{r}");
        }
    }
    println!("{} rows, {} failures", reports.len(), failures.len());
    if failures.is_empty() {
        return Ok(());
    }
    let listed: Vec<String> = failures.iter().map(|r| r.to_string()).collect();
    Err(Failure { code: EXIT_CHECK, message: format!("failing rows:\n{}", listed.join("\n")) })
}

fn parse_family_template(s: &str) -> Result<FamilySpec, Failure> {
    s.parse()
        .or_else(|_| format!("{s}:1").parse())
        .map_err(|e: Error| Failure::parse(e.to_string()))
}

fn cmd_sweep(args: &SweepArgs, tol: f64) -> Result<(), Failure> {
    let template = parse_family_template(&args.family)?;
    let cf = predicted_lambda2(&template).map_err(Failure::precondition)?;
    let (from, default_step) = match (args.from, args.include_exceptions) {
        (Some(from), _) => (from, if cf.validity.even_only { 2 } else { 1 }),
        // unbuildable sizes are skipped, so scan everything below the range too
        (None, true) => (1, 1),
        (None, false) => (cf.validity.min_n, if cf.validity.even_only { 2 } else { 1 }),
    };
    let step = args.step.unwrap_or(default_step);
    if step == 0 {
        return Err(Failure::parse("--step must be positive"));
    }
    let rows = sweep(&template, (from..=args.to).step_by(step), args.include_exceptions, tol)
        .map_err(Failure::precondition)?;
    let csv = sweep_to_csv(&rows).map_err(Failure::precondition)?;
    match &args.out {
        Some(path) => fs::write(path, csv)
            .map_err(|e| Failure::precondition(format!("{}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    let worst = rows.iter().filter_map(|r| r.abs_gap).fold(0.0, f64::max);
    let exceptions = rows.iter().filter(|r| r.closed_form.is_none()).count();
    eprintln!("{} rows ({exceptions} without closed form), max |gap| {worst:.3e}", rows.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli.tol;
    let result = match &cli.command {
        Command::Fiedler { input } => cmd_fiedler(input, tol),
        Command::Spectrum { input } => cmd_spectrum(input, tol),
        Command::Certify(args) => cmd_certify(args, tol),
        Command::Check { checks, failures_only } => cmd_check(checks, *failures_only, tol),
        Command::Sweep(args) => cmd_sweep(args, tol),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
