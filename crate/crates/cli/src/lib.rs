//! `toricap` command line.
//!
//! Exit codes: 0 success, 1 domain or semantic error (including an oracle
//! mismatch), 2 usage error.

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use toricap::domain_file::domain_to_value;
use toricap::oracle::{brute_concave_ck, brute_convex_ck, brute_mk, DEFAULT_ENUMERATION_CAP};
use toricap::{
    asymptotic_slope, capacity_sequence, capacity_sequence_par, cube_capacity,
    gromov_width_concave, lagrangian_lower_bound, obstruct, parse_domain, CapacitySequence,
    Rational, ToricDomain,
};

use report::Format;

#[derive(Parser, Debug)]
#[command(
    name = "toricap",
    version,
    about = "Exact symplectic capacities of toric domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for evaluating capacities across k
    #[arg(long, env = "TORICAP_THREADS", global = true)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct DomainArg {
    /// Domain description (JSON)
    #[arg(short = 'd', long)]
    domain: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Capacity sequence c_1..c_K
    Caps {
        #[command(flatten)]
        domain: DomainArg,
        #[arg(short = 'k', long, default_value_t = 10)]
        kmax: u64,
        /// Append brute-force oracle values; exits 1 on any mismatch
        #[arg(long)]
        oracle: bool,
    },
    /// Cube capacity: largest δ with (δ,…,δ) in the moment image
    Cube {
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Gromov width of a concave domain (or finite ellipsoid)
    Gromov {
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Compare c_k(source) with c_k(target) for k ≤ K
    Obstruct {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(short = 'k', long, default_value_t = 10)]
        kmax: u64,
    },
    /// c_K/K next to its limit, the cube capacity
    Slope {
        #[command(flatten)]
        domain: DomainArg,
        #[arg(short = 'k', long, default_value_t = 10)]
        kmax: u64,
    },
    /// Cube capacity as a lower bound for the Lagrangian capacity
    LagrangianBound {
        #[command(flatten)]
        domain: DomainArg,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    if cli.threads == Some(0) {
        let _ = writeln!(stderr, "error: --threads must be at least 1");
        return 2;
    }
    if let Some(k) = kmax_of(&cli.command) {
        if k == 0 {
            let _ = writeln!(stderr, "error: --kmax must be at least 1");
            return 2;
        }
    }

    let (text, ok) = match execute(&cli) {
        Ok(pair) => pair,
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 1;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return 1;
    }
    if !ok {
        let _ = writeln!(stderr, "error: oracle disagrees with the engine");
        return 1;
    }
    0
}

fn kmax_of(c: &Command) -> Option<u64> {
    match c {
        Command::Caps { kmax, .. }
        | Command::Obstruct { kmax, .. }
        | Command::Slope { kmax, .. } => Some(*kmax),
        _ => None,
    }
}

fn load(path: &Path) -> Result<ToricDomain, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_domain(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn sequence(
    d: &ToricDomain,
    kmax: u64,
    threads: Option<usize>,
) -> Result<CapacitySequence, Failure> {
    match threads {
        None | Some(1) => Ok(capacity_sequence(d, kmax)?),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            Ok(pool.install(|| capacity_sequence_par(d, kmax))?)
        }
    }
}

/// Brute-force reference value of `c_k`, independent of the search code.
fn oracle_value(d: &ToricDomain, k: u64) -> Result<Rational, Failure> {
    let cap = DEFAULT_ENUMERATION_CAP;
    Ok(match d {
        ToricDomain::Ellipsoid(a) => {
            let finite: Vec<Rational> = a.iter().filter_map(|x| x.finite().cloned()).collect();
            brute_mk(&finite, k)?
        }
        ToricDomain::Polydisk(_) | ToricDomain::Cube { .. } | ToricDomain::Convex(_) => {
            brute_convex_ck(&d.to_convex().expect("convex family"), k, cap)?
        }
        ToricDomain::CylinderUnion { .. } | ToricDomain::Concave(_) => {
            brute_concave_ck(&d.to_concave().expect("concave family"), k, cap)?
        }
    })
}

fn execute(cli: &Cli) -> Result<(String, bool), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Caps {
            domain,
            kmax,
            oracle,
        } => {
            let d = load(&domain.domain)?;
            let seq = sequence(&d, *kmax, cli.threads)?;
            let oracle_vals = if *oracle {
                Some(
                    (1..=*kmax)
                        .map(|k| oracle_value(&d, k))
                        .collect::<Result<Vec<_>, _>>()?,
                )
            } else {
                None
            };
            let ok = oracle_vals.as_ref().is_none_or(|o| {
                seq.values
                    .iter()
                    .zip(o)
                    .all(|(r, v)| r.value.finite() == Some(v))
            });
            let o = oracle_vals.as_deref();
            let text = match fmt {
                Format::Table => report::caps_table(&seq, o),
                Format::Csv => report::caps_csv(&seq, o),
                Format::Json => report::caps_json(domain_to_value(&d), &seq, o),
            };
            Ok((text, ok))
        }
        Command::Cube { domain } => {
            let d = load(&domain.domain)?;
            let v = cube_capacity(&d)?;
            Ok((report::scalar(fmt, "cube_capacity", "", &v), true))
        }
        Command::Gromov { domain } => {
            let d = load(&domain.domain)?;
            let concave = match &d {
                ToricDomain::Concave(c) => c.clone(),
                ToricDomain::Ellipsoid(_) => d.to_concave().ok_or_else(|| {
                    Failure(
                        "Gromov width needs a compact domain; ellipsoid has an infinite axis"
                            .into(),
                    )
                })?,
                other => {
                    return Err(Failure(format!(
                        "Gromov width is only computed for concave domains and ellipsoids, got {}",
                        other.kind()
                    )))
                }
            };
            let v = gromov_width_concave(&concave);
            Ok((report::scalar(fmt, "gromov_width", "", &v), true))
        }
        Command::Obstruct {
            source,
            target,
            kmax,
        } => {
            let s = load(source)?;
            let t = load(target)?;
            let r = if cli.threads.is_some_and(|n| n > 1) {
                let cs = sequence(&s, *kmax, cli.threads)?;
                let ct = sequence(&t, *kmax, cli.threads)?;
                toricap::embedding::obstruct_sequences(s.n(), t.n(), &cs, &ct)?
            } else {
                obstruct(&s, &t, *kmax)?
            };
            Ok((
                report::obstruction(fmt, &s.to_string(), &t.to_string(), &r),
                true,
            ))
        }
        Command::Slope { domain, kmax } => {
            let d = load(&domain.domain)?;
            let r = asymptotic_slope(&d, *kmax)?;
            Ok((report::slope(fmt, &d.to_string(), &r), true))
        }
        Command::LagrangianBound { domain } => {
            let d = load(&domain.domain)?;
            let v = lagrangian_lower_bound(&d)?;
            Ok((
                report::scalar(fmt, "lagrangian_lower_bound", "c_L >= ", &v),
                true,
            ))
        }
    }
}
