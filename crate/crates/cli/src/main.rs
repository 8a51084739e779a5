use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hrg_cli::report::{AnalyzeOptions, Format};
use hrg_cli::{parse_graph, write_graph, GraphFormat};
use hrg_core::{
    complement_construction, p_family_member, product_construction, torus, wl_graph, Graph,
    DEFAULT_SPECTRAL_TOL,
};

const EXIT_GATE: u8 = 1;
const EXIT_IO: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hrg",
    about = "Analyze and construct highly-regular graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormatArg {
    Graph6,
    EdgeList,
}

#[derive(Subcommand)]
enum Command {
    /// Read a graph (graph6 or edge list, auto-detected) and report its
    /// high-regularity analysis.
    Analyze {
        /// Input path, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Include the eigenvalue and idempotent checks.
        #[arg(long)]
        spectral: bool,
        /// Include the generalized intersection-number bounds.
        #[arg(long)]
        bounds: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Build a named graph family member and print it.
    Construct {
        /// Toroidal grid C_n x C_m.
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        torus: Option<Vec<usize>>,
        /// Norm graph over F_{p^r} joining x ~ y when N(y - x) = l.
        #[arg(long, num_args = 3, value_names = ["P", "R", "L"])]
        wl: Option<Vec<u64>>,
        /// Complement construction applied to the graph in FILE.
        #[arg(long, value_name = "FILE")]
        complement_of: Option<PathBuf>,
        /// Cartesian product of the graphs in the given files (first factor
        /// must be highly regular and not distance-regular).
        #[arg(long, num_args = 1.., value_name = "FILE")]
        product: Option<Vec<PathBuf>>,
        /// Fixed-valency family member: K R1 R2 R3 with K = R1 + 3 R2 + 4 R3.
        #[arg(long, num_args = 4, value_names = ["K", "R1", "R2", "R3"])]
        p_family: Option<Vec<usize>>,
        /// Valency-3 torus factor T(2, M) for the p-family (repeat R2 times;
        /// defaults to T(2,3)).
        #[arg(long = "f1", value_name = "M")]
        f1: Vec<usize>,
        /// Valency-4 torus factor "N,M" for the p-family (repeat R3 times;
        /// defaults to T(3,4)).
        #[arg(long = "f2", value_name = "N,M")]
        f2: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        out_format: OutFormatArg,
    },
    /// Emit DOT, optionally coloring vertices by refinement cell at a root.
    ExportDot {
        /// Input path, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Root vertex for cell coloring.
        #[arg(long)]
        root: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn gate(message: impl ToString) -> CliError {
    CliError {
        code: EXIT_GATE,
        message: message.to_string(),
    }
}

fn io_error(message: impl ToString) -> CliError {
    CliError {
        code: EXIT_IO,
        message: message.to_string(),
    }
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| io_error(format!("reading stdin: {e}")))?;
        Ok(buffer)
    } else {
        fs::read_to_string(input).map_err(|e| io_error(format!("reading {input}: {e}")))
    }
}

fn load_graph(input: &str) -> Result<(Graph, String), CliError> {
    let text = read_input(input)?;
    let (g, format) = parse_graph(&text).map_err(io_error)?;
    let kind = match format {
        GraphFormat::Graph6 => "graph6",
        GraphFormat::EdgeList => "edge-list",
    };
    let descriptor = if input == "-" {
        format!("stdin ({kind})")
    } else {
        format!("{input} ({kind})")
    };
    Ok((g, descriptor))
}

fn spectral_tol() -> Result<f64, CliError> {
    match std::env::var("HRG_TOL") {
        Ok(raw) => raw
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| *t > 0.0)
            .ok_or_else(|| io_error(format!("HRG_TOL must be a positive number, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_SPECTRAL_TOL),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            input,
            spectral,
            bounds,
            format,
        } => {
            let (g, descriptor) = load_graph(&input)?;
            let opts = AnalyzeOptions {
                bounds,
                spectral,
                tol: spectral_tol()?,
            };
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            };
            print!(
                "{}",
                hrg_cli::report::render_report(&descriptor, &g, &opts, format)
            );
            Ok(())
        }
        Command::Construct {
            torus: torus_args,
            wl,
            complement_of,
            product,
            p_family,
            f1,
            f2,
            out_format,
        } => {
            let selected = [
                torus_args.is_some(),
                wl.is_some(),
                complement_of.is_some(),
                product.is_some(),
                p_family.is_some(),
            ]
            .iter()
            .filter(|&&x| x)
            .count();
            if selected != 1 {
                return Err(gate(
                    "choose exactly one of --torus, --wl, --complement-of, --product, --p-family",
                ));
            }
            let g = construct(torus_args, wl, complement_of, product, p_family, &f1, &f2)?;
            let format = match out_format {
                OutFormatArg::Graph6 => GraphFormat::Graph6,
                OutFormatArg::EdgeList => GraphFormat::EdgeList,
            };
            print!("{}", write_graph(&g, format).map_err(gate)?);
            Ok(())
        }
        Command::ExportDot { input, root } => {
            let (g, _) = load_graph(&input)?;
            if let Some(r) = root {
                if r >= g.order() {
                    return Err(gate(format!(
                        "root {r} out of range for graph of order {}",
                        g.order()
                    )));
                }
            }
            print!("{}", hrg_cli::dot::export(&g, root));
            Ok(())
        }
    }
}

fn construct(
    torus_args: Option<Vec<usize>>,
    wl: Option<Vec<u64>>,
    complement_of: Option<PathBuf>,
    product: Option<Vec<PathBuf>>,
    p_family: Option<Vec<usize>>,
    f1: &[usize],
    f2: &[String],
) -> Result<Graph, CliError> {
    if let Some(args) = torus_args {
        return torus(args[0], args[1]).map_err(gate);
    }
    if let Some(args) = wl {
        return wl_graph(args[0], args[1] as usize, args[2]).map_err(gate);
    }
    if let Some(path) = complement_of {
        let (g, _) = load_graph(path.to_str().ok_or_else(|| io_error("non-UTF8 path"))?)?;
        return complement_construction(&g).map_err(gate);
    }
    if let Some(paths) = product {
        if paths.len() < 2 {
            return Err(gate("--product needs at least two factor files"));
        }
        let mut graphs = Vec::new();
        for path in &paths {
            let (g, _) = load_graph(path.to_str().ok_or_else(|| io_error("non-UTF8 path"))?)?;
            graphs.push(g);
        }
        let mut iter = graphs.into_iter();
        let mut acc = iter.next().expect("at least two factors");
        for g in iter {
            acc = product_construction(&acc, &g).map_err(gate)?;
        }
        return Ok(acc);
    }
    if let Some(args) = p_family {
        let (k, r1, r2, r3) = (args[0], args[1], args[2], args[3]);
        let factors1: Vec<usize> = if f1.is_empty() { vec![3; r2] } else { f1.to_vec() };
        let factors2: Vec<(usize, usize)> = if f2.is_empty() {
            vec![(3, 4); r3]
        } else {
            f2.iter()
                .map(|s| {
                    let mut parts = s.split(',');
                    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next())
                    else {
                        return Err(gate(format!("--f2 expects \"N,M\", got {s:?}")));
                    };
                    let n = a.trim().parse().map_err(|_| gate("bad N in --f2"))?;
                    let m = b.trim().parse().map_err(|_| gate("bad M in --f2"))?;
                    Ok((n, m))
                })
                .collect::<Result<_, _>>()?
        };
        return p_family_member(k, r1, r2, r3, &factors1, &factors2).map_err(gate);
    }
    unreachable!("argument selection was validated")
}
