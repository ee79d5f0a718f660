//! Command-line surface.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or input errors.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use coherence_core::bounds::best_lower;
use coherence_core::mat::FieldTag;
use coherence_core::measures::{
    first_moment, is_isotropic, iso_bound_check, lone_estimate, second_moment,
};
use coherence_core::packings::construct_best;

use crate::certificate::{verify_gram, DEFAULT_TOL};
use crate::format::{fmt_f64, parse_matrix, parse_measure, write_matrix};
use crate::table::{emit_table, to_csv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "C", alias = "c")]
    C,
}

impl From<FieldArg> for FieldTag {
    fn from(f: FieldArg) -> FieldTag {
        match f {
            FieldArg::R => FieldTag::Real,
            FieldArg::C => FieldTag::Complex,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "coherence-forge",
    about = "Construct and certify near-orthogonal systems of d+k unit vectors",
    version
)]
pub struct Cli {
    /// Optional compiled features to require (e.g. `k23` for the 276-line
    /// equiangular path)
    #[arg(long, global = true, value_name = "FEATURE")]
    pub features: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[arg(long, value_enum)]
    pub field: FieldArg,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Welch and first-moment lower bounds and the known upper
    /// constructions
    Bounds {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Build the best available Gram system and its certificate
    Construct {
        #[command(flatten)]
        params: ParamArgs,
        /// write `<PREFIX>.gram.txt` and `<PREFIX>.cert.json` instead of
        /// printing to stdout
        #[arg(long, value_name = "PREFIX")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Check an externally supplied Gram matrix and emit a certificate
    Verify {
        #[arg(long, value_name = "FILE")]
        gram: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// require rank exactly d rather than rank at most d
        #[arg(long)]
        strict_rank: bool,
    },
    /// Emit a CSV of bounds and achieved coherence over a dimension range
    Table {
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d_min: usize,
        #[arg(long)]
        d_max: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Operations on finite measures (JSON input)
    Measure {
        #[command(subcommand)]
        op: MeasureOp,
    },
}

#[derive(Subcommand, Debug)]
pub enum MeasureOp {
    /// Second moment, isotropy, and the first-moment functional
    Moment {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
    /// Sound upper estimate of the Lambda packing functional
    Lone {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 3600)]
        grid: usize,
        /// RNG seed; defaults to COHERENCE_FORGE_SEED or 0
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

/// Write via a temporary file in the same directory, then rename.
fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = path.with_extension("tmp-write");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    if let Some(dir) = dir {
        let _ = std::fs::File::open(dir).and_then(|d| d.sync_all());
    }
    Ok(())
}

fn default_seed() -> u64 {
    std::env::var("COHERENCE_FORGE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes; parse errors are usage errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Some(feature) = &cli.features {
        match feature.as_str() {
            "k23" => {
                if !cfg!(feature = "k23") {
                    return usage_error("this binary was built without the `k23` feature");
                }
            }
            other => return usage_error(&format!("unknown feature `{other}`")),
        }
    }
    match cli.command {
        Command::Bounds { params } => cmd_bounds(params),
        Command::Construct { params, out, tol } => cmd_construct(params, out, tol),
        Command::Verify {
            gram,
            params,
            tol,
            strict_rank,
        } => cmd_verify(gram, params, tol, strict_rank),
        Command::Table {
            field,
            k,
            d_min,
            d_max,
            out,
        } => cmd_table(field.into(), k, d_min, d_max, out),
        Command::Measure { op } => cmd_measure(op),
    }
}

fn cmd_bounds(params: ParamArgs) -> i32 {
    let field: FieldTag = params.field.into();
    if params.k == 0 || params.d == 0 {
        return usage_error("d and k must be positive");
    }
    let r = best_lower(field, params.d, params.k);
    println!("field: {}", field.symbol());
    println!("d: {}", r.d);
    println!("k: {}", r.k);
    println!("welch: {}", fmt_f64(r.welch));
    println!("improved: {}", fmt_f64(r.improved));
    println!("best_lower: {}", fmt_f64(r.best_lower));
    match r.exact {
        Some(v) => println!("exact: {}", fmt_f64(v)),
        None => println!("exact: unknown"),
    }
    for c in &r.upper_candidates {
        println!("upper {}: {}", c.construction_id, fmt_f64(c.value));
    }
    EXIT_OK
}

fn cmd_construct(params: ParamArgs, out: Option<PathBuf>, tol: f64) -> i32 {
    let field: FieldTag = params.field.into();
    if params.k == 0 || params.d == 0 {
        return usage_error("d and k must be positive");
    }
    let built = match construct_best(field, params.d, params.k) {
        Ok(c) => c,
        Err(e) => return usage_error(&format!("construction failed: {e}")),
    };
    let mut cert =
        match verify_gram(&built.system.gram, field, params.d, params.k, tol, false) {
            Ok(c) => c,
            Err(e) => return usage_error(&format!("verification failed: {e}")),
        };
    cert.construction_id = built.construction_id;
    match out {
        Some(prefix) => {
            let gram_path = prefix.with_extension("gram.txt");
            let cert_path = prefix.with_extension("cert.json");
            let body = write_matrix(&built.system.gram);
            if let Err(e) = write_atomic(&gram_path, &body) {
                return usage_error(&format!("cannot write {}: {e}", gram_path.display()));
            }
            if let Err(e) = write_atomic(&cert_path, &cert.to_json()) {
                return usage_error(&format!("cannot write {}: {e}", cert_path.display()));
            }
            println!(
                "wrote {} and {}",
                gram_path.display(),
                cert_path.display()
            );
        }
        None => print!("{}", cert.to_json()),
    }
    EXIT_OK
}

fn cmd_verify(gram: PathBuf, params: ParamArgs, tol: f64, strict_rank: bool) -> i32 {
    let field: FieldTag = params.field.into();
    let text = match std::fs::read_to_string(&gram) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", gram.display())),
    };
    let a = match parse_matrix(&text) {
        Ok(a) => a,
        Err(e) => return usage_error(&format!("cannot parse {}: {e}", gram.display())),
    };
    let cert = match verify_gram(&a, field, params.d, params.k, tol, strict_rank) {
        Ok(c) => c,
        Err(e) => return usage_error(&format!("verification failed: {e}")),
    };
    print!("{}", cert.to_json());
    if cert.checks.all() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn cmd_table(field: FieldTag, k: usize, d_min: usize, d_max: usize, out: Option<PathBuf>) -> i32 {
    if d_min > d_max || k == 0 || d_min == 0 {
        return usage_error("need 1 <= d_min <= d_max and k >= 1");
    }
    let csv = to_csv(&emit_table(field, k, d_min, d_max));
    match out {
        Some(path) => {
            if let Err(e) = write_atomic(&path, &csv) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
            println!("wrote {}", path.display());
        }
        None => print!("{csv}"),
    }
    EXIT_OK
}

fn cmd_measure(op: MeasureOp) -> i32 {
    match op {
        MeasureOp::Moment { input } => {
            let mu = match read_measure(&input) {
                Ok(m) => m,
                Err(code) => return code,
            };
            let m = second_moment(&mu);
            print!("{}", write_matrix(&m));
            println!("first_moment: {}", fmt_f64(first_moment(&mu)));
            println!("isotropic: {}", is_isotropic(&mu));
            if let Ok(c) = iso_bound_check(&mu) {
                println!("bound: {}", fmt_f64(c.bound));
                println!("ok: {}", c.ok);
                println!("extremal: {}", c.extremal);
            }
            EXIT_OK
        }
        MeasureOp::Lone {
            input,
            restarts,
            grid,
            seed,
        } => {
            let mu = match read_measure(&input) {
                Ok(m) => m,
                Err(code) => return code,
            };
            let seed = seed.unwrap_or_else(default_seed);
            match lone_estimate(&mu, restarts, grid, seed) {
                Ok(v) => {
                    // upper estimate only: the true infimum may be lower
                    println!("lone_upper_estimate: {}", fmt_f64(v));
                    EXIT_OK
                }
                Err(e) => usage_error(&format!("estimator failed: {e}")),
            }
        }
    }
}

fn read_measure(path: &Path) -> Result<coherence_core::measures::FiniteMeasure, i32> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(&format!("cannot read {}: {e}", path.display())))?;
    parse_measure(&text).map_err(|e| usage_error(&format!("cannot parse {}: {e}", path.display())))
}
