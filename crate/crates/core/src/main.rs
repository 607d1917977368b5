use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use oberwolfach::format::{dot, edges, text, Certificate};
use oberwolfach::hosts::{HostDescriptor, HostKind};
use oberwolfach::hstar::factorize_h_star;
use oberwolfach::jmachine::recursion::{j_decompose, w_star_factorization};
use oberwolfach::jmachine::tables;
use oberwolfach::solver::{solve, SolveOptions};
use oberwolfach::{CycleType, Error, Outcome};

#[derive(Parser)]
#[command(name = "oberwolfach", version, about = "Bipartite directed 2-factorizations of K*_n, n = 2 mod 4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Edges,
    Dot,
    Text,
}

#[derive(Copy, Clone, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum Host {
    HStar,
    WStar,
    JStar,
}

#[derive(Subcommand)]
enum Command {
    /// Factorize K*_n into copies of a 2-factor type.
    Solve {
        #[arg(long)]
        n: u32,
        /// Cycle type such as "[2^3,4]" or "[2,2,2,4]".
        #[arg(long)]
        factor: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Limit for the order-6 and order-10 search.
        #[arg(long)]
        timeout_ms: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a JSON certificate.
    Verify {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Solve and verify every even type for each n = 2 mod 4 up to max-n.
    Selftest {
        #[arg(long, default_value_t = 14)]
        max_n: u32,
    },
    /// Audit the embedded cap and small-decomposition tables.
    Tables {
        /// Check the tables (the default).
        #[arg(long, conflicts_with = "dump")]
        check: bool,
        /// Print the tables as JSON instead of checking them.
        #[arg(long)]
        dump: bool,
    },
    /// Write the decomposition of an auxiliary host (H*, W* or J*).
    Export {
        #[arg(long, value_enum)]
        host: Host,
        #[arg(long)]
        factor: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn render(cert: &Certificate, format: Format) -> String {
    match format {
        Format::Json => cert.to_json(),
        Format::Edges => edges(cert),
        Format::Dot => dot(cert),
        Format::Text => text(cert),
    }
}

fn emit(body: &str, out: Option<&PathBuf>) -> oberwolfach::Result<()> {
    match out {
        Some(p) => std::fs::write(p, body).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn cmd_solve(
    n: u32,
    factor: &str,
    format: Format,
    seed: u64,
    timeout_ms: Option<u64>,
    out: Option<&PathBuf>,
) -> oberwolfach::Result<ExitCode> {
    let ty: CycleType = factor.parse()?;
    let opts = SolveOptions {
        seed,
        timeout: timeout_ms.map(Duration::from_millis),
        cache: std::env::var_os("OBERWOLFACH_CACHE").map(PathBuf::from),
    };
    match solve(n, &ty, &opts)? {
        Outcome::Found(s) => {
            let mut cert = Certificate::new(HostDescriptor::complete_symmetric(n), ty, &s.factors, seed);
            cert.verified = s.report.passed;
            emit(&render(&cert, format), out)?;
            Ok(ExitCode::SUCCESS)
        }
        Outcome::Nonexistent => {
            eprintln!("K*_{n} has no {ty}-factorization (nonexistence proved by exhaustive search)");
            Ok(ExitCode::from(2))
        }
    }
}

fn cmd_verify(file: &PathBuf, json: bool) -> oberwolfach::Result<ExitCode> {
    let body = std::fs::read_to_string(file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
    let cert = Certificate::from_json(&body)?;
    let report = cert.verify()?;
    if json {
        println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    } else {
        println!("{} {}: {}", cert.host, cert.factor_type, if report.passed { "PASS" } else { "FAIL" });
        print!("{report}");
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_selftest(max_n: u32) -> oberwolfach::Result<ExitCode> {
    let mut failures = 0;
    println!("{:>4} {:>6} {:>6} {:>12} {:>6}", "n", "types", "solved", "nonexistent", "failed");
    for n in (6..=max_n).step_by(4) {
        let (mut solved, mut none, mut failed) = (0, 0, 0);
        let types = CycleType::bipartite_types(n);
        for ty in &types {
            let started = Instant::now();
            let res = solve(n, ty, &SolveOptions::default());
            let ms = started.elapsed().as_millis();
            let status = match res {
                Ok(Outcome::Found(s)) if s.report.passed && s.factors.len() == n as usize - 1 => {
                    solved += 1;
                    format!("ok {:?}", s.route)
                }
                Ok(Outcome::Nonexistent) if n == 6 && ty.lengths() == [6] => {
                    none += 1;
                    "nonexistent".to_string()
                }
                Ok(Outcome::Nonexistent) => {
                    failed += 1;
                    "FAIL unexpected nonexistence".to_string()
                }
                Ok(Outcome::Found(s)) => {
                    failed += 1;
                    format!("FAIL\n{}", s.report)
                }
                Err(e) => {
                    failed += 1;
                    format!("FAIL {e}")
                }
            };
            eprintln!("  n={n} {ty}: {status} ({ms} ms)");
        }
        println!("{n:>4} {:>6} {solved:>6} {none:>12} {failed:>6}", types.len());
        failures += failed;
    }
    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_tables(dump: bool) -> oberwolfach::Result<ExitCode> {
    if dump {
        let caps: Vec<_> = tables::RIGHT_CAPS
            .iter()
            .map(|(f, s0, rows)| serde_json::json!({"family": f, "s0": s0, "elements": rows}))
            .collect();
        let small: Vec<_> = tables::SMALL
            .iter()
            .chain(tables::SUPPLEMENTARY)
            .map(|(ty, rows)| serde_json::json!({"type": ty, "factors": rows}))
            .collect();
        let doc = serde_json::json!({
            "left_cap": tables::LEFT_CAP,
            "centre": tables::CENTRE,
            "right_caps": caps,
            "small": small,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("tables serialize"));
        return Ok(ExitCode::SUCCESS);
    }
    let rows = tables::audit()?;
    let mut bad = 0;
    for r in &rows {
        println!("{} {}", if r.report.passed { "PASS" } else { "FAIL" }, r.name);
        if !r.report.passed {
            bad += 1;
            for c in r.report.failures() {
                println!("    {}: {}", c.name, c.detail);
            }
        }
    }
    println!("{} rows, {bad} failed", rows.len());
    Ok(if bad == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_export(host: Host, factor: &str, format: Format, out: Option<&PathBuf>) -> oberwolfach::Result<ExitCode> {
    let ty: CycleType = factor.parse()?;
    let m = ty.order() / 2;
    let (kind, factors) = match host {
        Host::HStar => (HostKind::HStar, factorize_h_star(&ty, m)?.factors),
        Host::WStar => (HostKind::WStar, w_star_factorization(&ty)?),
        Host::JStar => (HostKind::JStar, j_decompose(&ty)?.factors),
    };
    let mut cert = Certificate::new(HostDescriptor { kind, m }, ty, &factors, 0);
    cert.verified = cert.verify()?.passed;
    emit(&render(&cert, format), out)?;
    Ok(if cert.verified { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Solve {
            n,
            factor,
            format,
            seed,
            timeout_ms,
            out,
        } => cmd_solve(*n, factor, *format, *seed, *timeout_ms, out.as_ref()),
        Command::Verify { file, json } => cmd_verify(file, *json),
        Command::Selftest { max_n } => cmd_selftest(*max_n),
        Command::Tables { dump, .. } => cmd_tables(*dump),
        Command::Export {
            host,
            factor,
            format,
            out,
        } => cmd_export(*host, factor, *format, out.as_ref()),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
