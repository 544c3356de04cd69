//! `gckit`: command-line access to graph complex computations.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gckit_core::complex::{cocycle_kernel, differential, is_cocycle, parse_graph_or_sum};
use gckit_core::graphs::parse_graph;
use gckit_core::orient::{
    crosscheck_rules, fold_sink_swap, normalize_orgraph, orient, parse_orgraph, parse_orgraph_sum,
    shared_images, OrientError,
};
use gckit_core::superalgebra::{
    evaluate_orgraph, parse_multivector, parse_multivector_file, schouten, verify_corollary,
    Multivector,
};
use gckit_core::FORMAT_VERSION;

#[derive(Parser, Debug)]
#[command(
    name = "gckit",
    about = "Exact computations in the Kontsevich graph complex",
    disable_version_flag = true
)]
struct Cli {
    /// Print the text format version and exit.
    #[arg(long)]
    version: bool,
    /// Worker threads; affects speed only, never output.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Dimension for multivector files without a `dim` header.
    #[arg(long, global = true)]
    dim: Option<usize>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Differential of a graph or graph sum.
    D { input: PathBuf },
    /// Whether a graph or graph sum is annihilated by the differential.
    Cocycle { input: PathBuf },
    /// A basis of cocycles spanned by graphs with the given bigrading.
    Kernel {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        disconnected: bool,
    },
    /// Orientation morphism applied to a graph or graph sum.
    Orient {
        input: PathBuf,
        /// Divide out the content of the coefficients.
        #[arg(long)]
        reduce: bool,
    },
    /// Normal form of each orgraph, one per line.
    Normalize { input: PathBuf },
    /// Compares the sign rules with reading parities for every witness pair.
    RulesCheck { input: PathBuf },
    /// Evaluates an orgraph sum at each bivector of a Poisson file.
    Eval {
        #[arg(long)]
        poisson: PathBuf,
        input: PathBuf,
    },
    /// Schouten bracket of two multivectors.
    Schouten { f: PathBuf, g: PathBuf },
    /// Checks the graph-to-Schouten identity for the differential.
    VerifyCorollary {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        poisson: PathBuf,
    },
    /// Groups an orgraph sum into sink-swap pairs.
    Fold { input: PathBuf },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

fn input_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(path, e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input_error(path, e))
}

/// A `dim` file, or a bare expression list when `--dim` is given.
fn read_multivectors(
    path: &Path,
    dim: Option<usize>,
) -> Result<(usize, Vec<Multivector>), CliError> {
    let text = read(path)?;
    let has_header = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    if has_header.is_some_and(|l| l.starts_with("dim")) {
        let file = parse_multivector_file(&text).map_err(|e| input_error(path, e))?;
        if let Some(d) = dim {
            if d != file.dim {
                return Err(input_error(
                    path,
                    format!("dimension {} contradicts --dim {d}", file.dim),
                ));
            }
        }
        return Ok((file.dim, file.entries));
    }
    let Some(d) = dim else {
        return Err(input_error(
            path,
            "missing 'dim <d>' header and no --dim given",
        ));
    };
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let m = parse_multivector(body, d).map_err(|mut e| {
            e.line = i + 1;
            input_error(path, e)
        })?;
        out.push(m);
    }
    Ok((d, out))
}

fn single(path: &Path, dim: Option<usize>) -> Result<Multivector, CliError> {
    let (_, mut v) = read_multivectors(path, dim)?;
    if v.len() != 1 {
        return Err(input_error(
            path,
            format!("expected one multivector, found {}", v.len()),
        ));
    }
    Ok(v.remove(0))
}

fn run(cmd: Command, dim: Option<usize>, out: &mut String) -> Result<(), CliError> {
    match cmd {
        Command::D { input } => {
            let s = parse_graph_or_sum(&read(&input)?).map_err(|e| input_error(&input, e))?;
            out.push_str(&differential(&s).to_text());
        }
        Command::Cocycle { input } => {
            let s = parse_graph_or_sum(&read(&input)?).map_err(|e| input_error(&input, e))?;
            if is_cocycle(&s) {
                out.push_str("cocycle: yes\n");
            } else {
                out.push_str("cocycle: no\n");
                return Err(CliError::Failure("differential is nonzero".into()));
            }
        }
        Command::Kernel {
            vertices,
            edges,
            disconnected,
        } => {
            if vertices == 0 {
                return Err(CliError::Input("--vertices must be positive".into()));
            }
            let basis = cocycle_kernel(vertices, edges, !disconnected);
            out.push_str(&format!("# kernel dimension {}\n", basis.len()));
            for (i, v) in basis.iter().enumerate() {
                out.push_str(&format!("# vector {}\n", i + 1));
                out.push_str(&v.to_text());
            }
        }
        Command::Orient { input, reduce } => {
            let s = parse_graph_or_sum(&read(&input)?).map_err(|e| input_error(&input, e))?;
            let shared = shared_images(&s);
            if !shared.is_empty() {
                eprintln!(
                    "warning: {} orgraph(s) arise from more than one graph of the sum; their signs rely on the coefficients alone",
                    shared.len()
                );
            }
            let o = orient(&s);
            let o = if reduce { o.reduced().0 } else { o };
            out.push_str(&o.to_text());
        }
        Command::Normalize { input } => {
            let os = parse_orgraph(&read(&input)?).map_err(|e| input_error(&input, e))?;
            for o in os {
                let n = normalize_orgraph(&o);
                if n.is_zero {
                    out.push_str(&format!("0 # {}\n", n.orgraph));
                } else {
                    let c = if n.sign.is_negative() { "-1" } else { "1" };
                    out.push_str(&format!("{c} * {}\n", n.orgraph));
                }
            }
        }
        Command::RulesCheck { input } => {
            let g = parse_graph(&read(&input)?).map_err(|e| input_error(&input, e))?;
            let report = crosscheck_rules(&g);
            out.push_str(&report.to_string());
            if !report.applicable {
                return Err(CliError::Failure(
                    "the sign rules only cover bivector orgraphs".into(),
                ));
            }
            if !report.consistent() {
                return Err(CliError::Failure(
                    "sign rules disagree with reading parities".into(),
                ));
            }
        }
        Command::Eval { poisson, input } => {
            let (_, ps) = read_multivectors(&poisson, dim)?;
            let s = parse_orgraph_sum(&read(&input)?).map_err(|e| input_error(&input, e))?;
            for p in &ps {
                let q = evaluate_orgraph(&s, p).map_err(|e| input_error(&input, e))?;
                out.push_str(&format!("{q}\n"));
            }
        }
        Command::Schouten { f, g } => {
            let a = single(&f, dim)?;
            let b = single(&g, dim)?;
            if a.dim() != b.dim() {
                return Err(CliError::Input(format!(
                    "dimension mismatch: {} vs {}",
                    a.dim(),
                    b.dim()
                )));
            }
            out.push_str(&format!("{}\n", schouten(&a, &b)));
        }
        Command::VerifyCorollary { graph, poisson } => {
            let s = parse_graph_or_sum(&read(&graph)?).map_err(|e| input_error(&graph, e))?;
            let (_, ps) = read_multivectors(&poisson, dim)?;
            let mut failed = 0;
            for (i, p) in ps.iter().enumerate() {
                if !p.is_bivector() && !p.is_zero() {
                    return Err(input_error(
                        &poisson,
                        format!("entry {} is not a bivector", i + 1),
                    ));
                }
                let r = verify_corollary(&s, p).map_err(|e| input_error(&graph, e))?;
                if r.holds() {
                    out.push_str(&format!("corollary {}: holds\n", i + 1));
                } else {
                    failed += 1;
                    out.push_str(&format!(
                        "corollary {}: fails\nlhs: {}\nrhs: {}\n",
                        i + 1,
                        r.lhs,
                        r.rhs
                    ));
                }
            }
            if failed > 0 {
                return Err(CliError::Failure(format!(
                    "identity fails for {failed} bivector(s)"
                )));
            }
        }
        Command::Fold { input } => {
            let s = parse_orgraph_sum(&read(&input)?).map_err(|e| input_error(&input, e))?;
            match fold_sink_swap(&s) {
                Ok(f) => out.push_str(&f.to_text()),
                Err(e @ OrientError::SkewSymmetryViolated(_)) => {
                    return Err(CliError::Failure(e.to_string()))
                }
                Err(e) => return Err(input_error(&input, e)),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.version {
        println!("{FORMAT_VERSION}");
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: no command given; see 'gckit --help'");
        return ExitCode::from(2);
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut out = String::new();
    let result = pool.install(|| run(command, cli.dim, &mut out));
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
