use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use parity_polytope::bases::{
    self, character_matrix, marginal_matrix, monomial_matrix, parity_matrix, parity_words,
    BasisKind, StatisticMatrix,
};
use parity_polytope::classify::{
    approx_decimal, count_cnk, enumerate_pn_with, lift_conditions, GroupPolytope,
    HARD_ENUMERATION_N, MAX_ENUMERATION_N,
};
use parity_polytope::codes::{
    code_from_hypergraph, distance_formula, hypergraph_from_generator, min_distance,
    verify_homomorphism,
};
use parity_polytope::geometry::{
    face_lattice_with, lattice_json, parse_vertex_json, parse_vrep, vertex_json, vrep,
    SizeLimits, VertexSet01,
};
use parity_polytope::gf2::{index2_subgroups, standard_form, GF2Matrix};
use parity_polytope::hypergraph::{uniform, PreHypergraph};

/// Parity polytopes, their codes and XOR-group 0/1 polytopes.
#[derive(Parser)]
#[command(name = "pp", version)]
struct Cli {
    /// Worker threads for the parallel parts; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Raise the size guards to this dimension.
    #[arg(long, global = true, env = "PP_MAX_DIM")]
    max_dim: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the statistic matrix of a hypergraph, one row per configuration.
    Vertices {
        #[arg(long)]
        hypergraph: String,
        #[arg(long, default_value = "parity")]
        basis: String,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Print the f-vector, its sum and simpleness of a parity polytope or a
    /// vertex file.
    Fvector {
        #[command(flatten)]
        input: PolytopeInput,
        /// Print the whole face lattice as JSON instead.
        #[arg(long)]
        json: bool,
    },
    /// Convert between hypergraphs and generator matrices.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Enumerate the XOR-group polytopes of dimension n.
    Classify {
        #[arg(long)]
        n: usize,
        /// Also print every polytope, one per line.
        #[arg(long)]
        list: bool,
    },
    /// Print the counts c_n(k) for all n up to the given value.
    Count {
        #[arg(long)]
        n: usize,
        /// Print only the totals, in short scientific form.
        #[arg(long)]
        approx: bool,
    },
    /// Convert a vertex set between JSON and V-representation.
    Convert {
        /// Input file (`-` for standard input); the format is detected.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        to: VertexFormat,
    },
    /// Run the basis, homomorphism and lift checks on a hypergraph.
    Check {
        #[arg(long)]
        hypergraph: String,
    },
}

#[derive(Subcommand)]
enum CodeAction {
    /// Print the generator matrix `(E_N | H)` of a hypergraph.
    FromHypergraph {
        #[arg(long)]
        hypergraph: String,
    },
    /// Read a hypergraph off a generator matrix file (`-` for standard input).
    ToHypergraph {
        #[arg(long)]
        generator: String,
        /// Bring the matrix into standard form first.
        #[arg(long)]
        standardize: bool,
    },
    /// Print length, dimension and minimum distance of a hypergraph's code.
    Distance {
        #[arg(long)]
        hypergraph: String,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct PolytopeInput {
    /// `uniform:k,n` or a hypergraph JSON file.
    #[arg(long)]
    hypergraph: Option<String>,
    /// A vertex set as JSON or V-representation (`-` for standard input).
    #[arg(long)]
    vertices: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VertexFormat {
    Json,
    Vrep,
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
    }
}

/// `uniform:k,n` or the path of a hypergraph JSON file.
fn load_hypergraph(spec: &str) -> Result<PreHypergraph> {
    if let Some(args) = spec.strip_prefix("uniform:") {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let [k, n] = parts[..] else {
            bail!("expected uniform:k,n, found {spec:?}");
        };
        let k: usize = k.parse().with_context(|| format!("bad k in {spec:?}"))?;
        let n: usize = n.parse().with_context(|| format!("bad n in {spec:?}"))?;
        return Ok(uniform(k, n)?);
    }
    Ok(PreHypergraph::parse_json(&read_input(spec)?)?)
}

fn load_vertices(path: &str) -> Result<VertexSet01> {
    let text = read_input(path)?;
    if text.trim_start().starts_with('{') {
        Ok(parse_vertex_json(&text)?)
    } else {
        Ok(parse_vrep(&text)?)
    }
}

fn statistic_matrix(a: &PreHypergraph, basis: BasisKind) -> Result<StatisticMatrix> {
    Ok(match basis {
        BasisKind::Parity => parity_matrix(a)?,
        BasisKind::Character => character_matrix(a)?,
        BasisKind::Monomial => monomial_matrix(a)?,
        BasisKind::Marginal => marginal_matrix(a)?,
    })
}

fn matrix_tsv(m: &StatisticMatrix) -> Result<String> {
    let mut out = String::from("x");
    for c in &m.columns {
        write!(out, "\t{c}")?;
    }
    out.push('\n');
    for (x, row) in bases::configurations(m.n)?.iter().zip(&m.entries) {
        write!(out, "{x}")?;
        for v in row {
            write!(out, "\t{v}")?;
        }
        out.push('\n');
    }
    Ok(out)
}

fn parity_vertex_set(a: &PreHypergraph) -> Result<VertexSet01> {
    Ok(VertexSet01::from_words(&parity_words(a)?)?)
}

fn limits(max_dim: Option<usize>) -> SizeLimits {
    max_dim.map_or_else(SizeLimits::default, SizeLimits::with_max_dim)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "y"
    } else {
        "n"
    }
}

fn run(cli: Cli) -> Result<String> {
    let mut out = String::new();
    match cli.command {
        Command::Vertices {
            hypergraph,
            basis,
            format,
        } => {
            let basis: BasisKind = basis.parse()?;
            let m = statistic_matrix(&load_hypergraph(&hypergraph)?, basis)?;
            match format {
                Format::Tsv => out = matrix_tsv(&m)?,
                Format::Json => writeln!(out, "{}", m.to_json())?,
            }
        }
        Command::Fvector { input, json } => {
            let v = match (input.hypergraph, input.vertices) {
                (Some(spec), _) => parity_vertex_set(&load_hypergraph(&spec)?)?,
                (None, Some(path)) => load_vertices(&path)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let lattice = face_lattice_with(&v, limits(cli.max_dim))?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&lattice_json(&v, &lattice))?)?;
            } else {
                out = lattice.to_table();
            }
        }
        Command::Code { action } => match action {
            CodeAction::FromHypergraph { hypergraph } => {
                let code = code_from_hypergraph(&load_hypergraph(&hypergraph)?)?;
                out = code.generator().to_text();
            }
            CodeAction::ToHypergraph {
                generator,
                standardize,
            } => {
                let mut g = GF2Matrix::parse(&read_input(&generator)?)?;
                if standardize {
                    let (s, order) = standard_form(&g)?;
                    let order: Vec<String> = order.iter().map(|c| (c + 1).to_string()).collect();
                    eprintln!("column order: {}", order.join(" "));
                    g = s;
                }
                let (a, duplicates) = hypergraph_from_generator(&g)?;
                for d in &duplicates {
                    eprintln!(
                        "column {} repeats column {}",
                        d.column + 1,
                        d.duplicate_of + 1
                    );
                }
                writeln!(out, "{}", serde_json::to_string(&a.to_json())?)?;
            }
            CodeAction::Distance { hypergraph } => {
                let a = load_hypergraph(&hypergraph)?;
                let code = code_from_hypergraph(&a)?;
                writeln!(out, "length {}", code.length())?;
                writeln!(out, "dimension {}", code.dim())?;
                writeln!(out, "min_distance {}", min_distance(&code)?)?;
                if let Some(k) = uniform_rank(&a) {
                    writeln!(out, "formula {}", distance_formula(k, a.ground_size())?)?;
                }
            }
        },
        Command::Classify { n, list } => {
            let max_n = match cli.max_dim {
                Some(_) => HARD_ENUMERATION_N,
                None => MAX_ENUMERATION_N,
            };
            let e = enumerate_pn_with(n, max_n)?;
            for (k, count) in e.counts_by_k(n).iter().enumerate().skip(1) {
                writeln!(out, "{k} {count}")?;
            }
            writeln!(out, "total {}", e.polytopes.len())?;
            if list {
                for p in &e.polytopes {
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Count { n, approx } => {
            let table = count_cnk(n)?;
            if approx {
                for m in 1..=n {
                    writeln!(out, "{m}\t{}", approx_decimal(&table.total(m), 3))?;
                }
            } else {
                out = table.to_tsv();
            }
        }
        Command::Convert { input, to } => {
            let v = load_vertices(&input)?;
            match to {
                VertexFormat::Json => writeln!(out, "{}", serde_json::to_string(&vertex_json(&v))?)?,
                VertexFormat::Vrep => out = vrep(&v),
            }
        }
        Command::Check { hypergraph } => {
            let a = load_hypergraph(&hypergraph)?;
            out = check(&a)?;
        }
    }
    Ok(out)
}

/// `k` if `a` is exactly `𝒜_{k,N}`.
fn uniform_rank(a: &PreHypergraph) -> Option<usize> {
    (1..=a.ground_size()).find(|&k| uniform(k, a.ground_size()).is_ok_and(|u| &u == a))
}

/// Largest ground set for the lift checks in `check`.
const MAX_CHECK_N: usize = 4;

fn check(a: &PreHypergraph) -> Result<String> {
    let mut out = String::new();
    match bases::verify_parity_basis(a) {
        Ok(ok) => writeln!(out, "basis {}", yes_no(ok))?,
        Err(e) => writeln!(out, "basis skipped ({e})")?,
    }
    match verify_homomorphism(a) {
        Ok(ok) => writeln!(out, "homomorphism {}", yes_no(ok))?,
        Err(e) => writeln!(out, "homomorphism skipped ({e})")?,
    }
    if a.ground_size() > MAX_CHECK_N {
        writeln!(out, "lift skipped (N = {} exceeds {MAX_CHECK_N})", a.ground_size())?;
        return Ok(out);
    }
    let p = GroupPolytope::new(parity_words(a)?)?;
    let subgroups = index2_subgroups(p.vertices())?;
    let mut agree = 0;
    let mut liftable = 0;
    for s in &subgroups {
        let c = lift_conditions(&p, &s.kernel)?;
        agree += usize::from(c.all_equal());
        liftable += usize::from(c.full_dimensional);
    }
    writeln!(
        out,
        "lift {} ({agree} of {} index-2 subgroups agree, {liftable} give full-dimensional lifts)",
        yes_no(agree == subgroups.len()),
        subgroups.len()
    )?;
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
