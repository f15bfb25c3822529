use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use klcells::coxcore::{CoxeterModel, DihedralGroup, FiniteGroup, Permutation, SymmetricGroup};
use klcells::klengine::{
    build_with_cache, cells, load_cache, read_header, save_cache, CellPartition, CellSide, KLTable,
};
use klcells::modinv::{gkdim_of_w, gkdim_weight, GKReport};
use klcells::tableaux::{tableau_of_permutation, tableau_of_weight, weight_to_permutation};
use klcells::varieties::{orbital_variety_label, steinberg_orbit};
use klcells::verify::{run, Target, VerifyOptions};
use klcells::weight::WeightVector;
use klcells::Error;

// KL tables above S6 do not fit the dense layout comfortably
const MAX_KL_N: usize = 6;
const MAX_RS_N: usize = 9;

#[derive(Parser)]
#[command(
    name = "klcells",
    version,
    about = "KL cells, tableaux, GK dimension and orbital varieties for sl(n)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Insertion tableau of a weight or permutation.
    Tableau(Input),
    /// Gelfand-Kirillov dimension of L(lambda) or L_w.
    Gkdim(Input),
    /// Label of the associated variety.
    Variety(Input),
    /// Cell partition of S_n or I2(m).
    Cells(CellsArgs),
    /// Kazhdan-Lusztig polynomial P_{x,w}.
    Klpoly(KlpolyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Build or inspect a KL table cache.
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// lambda + rho as comma-separated integers or fractions a/b.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Permutation in one-line notation, e.g. 2,3,4,1.
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Rs,
    Kl,
}

#[derive(Args)]
struct GroupArgs {
    /// Rank of S_n.
    #[arg(
        long,
        required_unless_present = "dihedral",
        conflicts_with = "dihedral"
    )]
    n: Option<usize>,
    /// Use the dihedral group I2(m) instead of S_n.
    #[arg(long)]
    dihedral: Option<usize>,
    /// KL table cache; loaded if present, written otherwise.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct CellsArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, default_value = "right")]
    side: String,
    #[arg(long, value_enum, default_value_t = Method::Kl)]
    method: Method,
}

#[derive(Args)]
struct KlpolyArgs {
    #[arg(long)]
    x: String,
    #[arg(long)]
    w: String,
    /// Elements are words like s1s2 in I2(m).
    #[arg(long)]
    dihedral: Option<usize>,
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// engine, thm1, thm2, thm3 or corollaries.
    target: String,
    /// Check this n only; default is the full supported range.
    #[arg(long)]
    n: Option<usize>,
    /// Raise the engine and thm1 bound to n = 6.
    #[arg(long)]
    big: bool,
    /// Weights per n for the sampled suite.
    #[arg(long, default_value_t = VerifyOptions::default().samples)]
    samples: usize,
    #[arg(long, default_value_t = VerifyOptions::default().seed)]
    seed: u64,
}

#[derive(Subcommand)]
enum CacheCommand {
    /// Compute a KL table and write it to --cache.
    Build(GroupArgs),
    /// Validate a cache file and summarize it.
    Inspect {
        #[arg(long)]
        cache: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    let out = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable output") + "\n",
        Format::Text => text(),
    };
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = stdout.write_all(out.as_bytes());
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

enum Parsed {
    Weight(WeightVector),
    Perm(Permutation),
}

fn parse_input(input: &Input) -> Result<Parsed, Failure> {
    match (&input.weight, &input.perm) {
        (Some(w), None) => Ok(Parsed::Weight(w.parse()?)),
        (None, Some(p)) => Ok(Parsed::Perm(p.parse()?)),
        _ => Err(usage("give exactly one of --weight or --perm")),
    }
}

#[derive(Serialize)]
struct TableauOut {
    tableau: String,
    shape: Vec<usize>,
    columns: Vec<usize>,
    a: usize,
}

fn cmd_tableau(input: &Input, format: Format) -> CliResult {
    let out = match parse_input(input)? {
        Parsed::Weight(t) => {
            let tab = tableau_of_weight(&t)?;
            TableauOut {
                tableau: tab.to_string(),
                shape: tab.shape().into_parts(),
                columns: tab.column_lengths(),
                a: tab.a_value(),
            }
        }
        Parsed::Perm(w) => {
            let tab = tableau_of_permutation(&w);
            TableauOut {
                tableau: tab.to_string(),
                shape: tab.shape().into_parts(),
                columns: tab.column_lengths(),
                a: tab.a_value(),
            }
        }
    };
    emit(format, &out, || {
        format!(
            "{}\nshape: {}\ncolumns: {}\na: {}\n",
            out.tableau,
            join(&out.shape),
            join(&out.columns),
            out.a
        )
    });
    Ok(())
}

fn cmd_gkdim(input: &Input, format: Format) -> CliResult {
    let report: GKReport = match parse_input(input)? {
        Parsed::Weight(t) => gkdim_weight(&t)?,
        Parsed::Perm(w) => {
            let report = gkdim_weight(&w.shifted_highest_weight())?;
            debug_assert_eq!(report.gkdim, gkdim_of_w(&w));
            report
        }
    };
    emit(format, &report, || {
        format!(
            "{}\nweight: {}\ncolumns: {}\na: {}\n",
            report.gkdim,
            report.weight,
            join(&report.columns),
            report.a_value
        )
    });
    Ok(())
}

#[derive(Serialize)]
struct VarietyOut {
    label: String,
    w: String,
    orbit: String,
    dim: usize,
}

fn cmd_variety(input: &Input, format: Format) -> CliResult {
    let w = match parse_input(input)? {
        Parsed::Weight(t) => weight_to_permutation(&t)?,
        Parsed::Perm(w) => w,
    };
    let label = orbital_variety_label(&w);
    let out = VarietyOut {
        label: label.to_string(),
        w: w.to_string(),
        orbit: steinberg_orbit(&w).to_string(),
        dim: label.dim(w.n()),
    };
    emit(format, &out, || {
        format!(
            "{}\nw: {}\norbit: {}\ndim: {}\n",
            out.label, out.w, out.orbit, out.dim
        )
    });
    Ok(())
}

fn kl_table<M: CoxeterModel>(model: M, cache: Option<&Path>) -> Result<KLTable<M>, Failure> {
    let group = FiniteGroup::new(model)?;
    Ok(match cache {
        Some(path) => build_with_cache(group, path)?,
        None => KLTable::build(group),
    })
}

fn check_kl_rank(n: usize) -> CliResult {
    if n == 0 || n > MAX_KL_N {
        return Err(usage(format!("KL tables need 1 <= n <= {MAX_KL_N}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct CellsOut {
    group: String,
    side: String,
    method: String,
    count: usize,
    cells: Vec<Vec<String>>,
}

fn cells_out<E: ToString>(
    group: String,
    side: CellSide,
    method: &str,
    elements: &[E],
    p: &CellPartition,
) -> CellsOut {
    CellsOut {
        group,
        side: side.to_string(),
        method: method.into(),
        count: p.num_cells(),
        cells: p
            .cells()
            .map(|(_, members)| members.iter().map(|&x| elements[x].to_string()).collect())
            .collect(),
    }
}

fn cmd_cells(args: &CellsArgs, format: Format) -> CliResult {
    let side: CellSide = args.side.parse()?;
    let cache = args.group.cache.as_deref();
    let out = match (args.group.dihedral, args.method) {
        (Some(m), Method::Kl) => {
            let table = kl_table(DihedralGroup::new(m)?, cache)?;
            let g = table.group();
            cells_out(
                g.model().model_id(),
                side,
                "kl",
                g.elements(),
                &cells(&table, side),
            )
        }
        (Some(_), Method::Rs) => return Err(usage("--method rs needs a symmetric group")),
        (None, method) => {
            let n = args.group.n.expect("clap requires --n without --dihedral");
            match method {
                Method::Kl => {
                    check_kl_rank(n)?;
                    let table = kl_table(SymmetricGroup::new(n), cache)?;
                    let g = table.group();
                    cells_out(
                        g.model().model_id(),
                        side,
                        "kl",
                        g.elements(),
                        &cells(&table, side),
                    )
                }
                Method::Rs => {
                    if n == 0 || n > MAX_RS_N {
                        return Err(usage(format!("--method rs needs 1 <= n <= {MAX_RS_N}")));
                    }
                    let elements: Vec<Permutation> = Permutation::all(n).collect();
                    let keys: Vec<String> = elements
                        .iter()
                        .map(|w| match side {
                            CellSide::Right => tableau_of_permutation(w).to_string(),
                            CellSide::Left => tableau_of_permutation(&w.inverse()).to_string(),
                            CellSide::TwoSided => tableau_of_permutation(w).shape().to_string(),
                        })
                        .collect();
                    let p = CellPartition::from_keys(side, &keys);
                    cells_out(format!("S{n}"), side, "rs", &elements, &p)
                }
            }
        }
    };
    emit(format, &out, || {
        let mut s = format!(
            "{} {} cells of {} ({}):\n",
            out.count, out.side, out.group, out.method
        );
        for cell in &out.cells {
            s.push_str(&format!("  [{}] {}\n", cell.len(), cell.join(" ")));
        }
        s
    });
    Ok(())
}

#[derive(Serialize)]
struct KlpolyOut {
    x: String,
    w: String,
    polynomial: String,
    coefficients: Vec<i64>,
    mu: i64,
}

fn klpoly_in<M: CoxeterModel>(model: M, args: &KlpolyArgs, format: Format) -> CliResult {
    let x = model.parse_element(&args.x)?;
    let w = model.parse_element(&args.w)?;
    let table = kl_table(model, args.cache.as_deref())?;
    let p = table.kl_polynomial(&x, &w)?;
    let out = KlpolyOut {
        x: x.to_string(),
        w: w.to_string(),
        polynomial: p.to_string(),
        coefficients: p.coeffs().to_vec(),
        mu: table.mu(&x, &w)?,
    };
    emit(format, &out, || format!("{}\n", out.polynomial));
    Ok(())
}

fn cmd_klpoly(args: &KlpolyArgs, format: Format) -> CliResult {
    match args.dihedral {
        Some(m) => klpoly_in(DihedralGroup::new(m)?, args, format),
        None => {
            let n = args.x.split(',').count();
            check_kl_rank(n)?;
            klpoly_in(SymmetricGroup::new(n), args, format)
        }
    }
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> CliResult {
    let target: Target = args.target.parse()?;
    let range = match args.n {
        Some(n) => n..=n,
        None => target.default_range(args.big),
    };
    let opts = VerifyOptions {
        big: args.big,
        samples: args.samples,
        seed: args.seed,
    };
    let report = run(target, range, &opts)?;
    emit(format, &report, || report.to_string());
    eprintln!("elapsed {:.2?}", report.elapsed);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct CacheSummary {
    model: String,
    elements: usize,
    records: usize,
    nontrivial: usize,
    max_degree: usize,
    mu_edges: usize,
}

fn summarize<M: CoxeterModel>(table: &KLTable<M>) -> CacheSummary {
    let pairs: Vec<_> = table.comparable_pairs().collect();
    CacheSummary {
        model: table.model_id(),
        elements: table.group().len(),
        records: pairs.len(),
        nontrivial: pairs
            .iter()
            .filter(|&&(x, w)| table.poly_or_zero(x, w).degree() != Some(0))
            .count(),
        max_degree: pairs
            .iter()
            .filter_map(|&(x, w)| table.poly_or_zero(x, w).degree())
            .max()
            .unwrap_or(0),
        mu_edges: table.mu_edges().count(),
    }
}

fn print_summary(format: Format, s: &CacheSummary) {
    emit(format, s, || {
        format!(
            "model: {}\nelements: {}\nrecords: {}\nnontrivial polynomials: {}\nmax degree: {}\nmu edges: {}\n",
            s.model, s.elements, s.records, s.nontrivial, s.max_degree, s.mu_edges
        )
    });
}

fn cmd_cache(cmd: &CacheCommand, format: Format) -> CliResult {
    match cmd {
        CacheCommand::Build(args) => {
            let path = args
                .cache
                .as_deref()
                .ok_or_else(|| usage("cache build needs --cache PATH"))?;
            let summary = match (args.dihedral, args.n) {
                (Some(m), _) => {
                    let table = KLTable::build(FiniteGroup::new(DihedralGroup::new(m)?)?);
                    save_cache(&table, path)?;
                    summarize(&table)
                }
                (None, Some(n)) => {
                    check_kl_rank(n)?;
                    let table = KLTable::build(FiniteGroup::new(SymmetricGroup::new(n))?);
                    save_cache(&table, path)?;
                    summarize(&table)
                }
                (None, None) => return Err(usage("give --n or --dihedral")),
            };
            print_summary(format, &summary);
        }
        CacheCommand::Inspect { cache } => {
            let (_, model) =
                read_header(&mut BufReader::new(File::open(cache).map_err(Error::from)?))?;
            let summary = if let Some(n) = model.strip_prefix('S').and_then(|n| n.parse().ok()) {
                check_kl_rank(n)?;
                summarize(&load_cache(
                    FiniteGroup::new(SymmetricGroup::new(n))?,
                    cache,
                )?)
            } else if let Some(m) = model
                .strip_prefix("I2(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|m| m.parse().ok())
            {
                summarize(&load_cache(
                    FiniteGroup::new(DihedralGroup::new(m)?)?,
                    cache,
                )?)
            } else {
                return Err(usage(format!("unknown model {model:?} in cache header")));
            };
            print_summary(format, &summary);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Tableau(input) => cmd_tableau(input, cli.format),
        Command::Gkdim(input) => cmd_gkdim(input, cli.format),
        Command::Variety(input) => cmd_variety(input, cli.format),
        Command::Cells(args) => cmd_cells(args, cli.format),
        Command::Klpoly(args) => cmd_klpoly(args, cli.format),
        Command::Verify(args) => cmd_verify(args, cli.format),
        Command::Cache(cmd) => cmd_cache(cmd, cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
