use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skewcoh::algebras::{families, smash_presentation, QuotientAlgebra};
use skewcoh::anick::{chain_sets, AnickResolution};
use skewcoh::barcoh::DEFAULT_BUDGET_MB;
use skewcoh::ffmat::PrimeField;
use skewcoh::freealg::Presentation;
use skewcoh::verify::{self, Config, Suite};
use skewcoh::Exec;

#[derive(Parser)]
#[command(name = "skewcoh", version, about = "Cohomology of A_p, gr A_p and A_p # kC_p over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report.
    Verify {
        #[arg(long, default_value_t = 3, value_parser = parse_prime)]
        p: u32,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET_MB)]
        budget_mb: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Treat skipped checks as failures.
        #[arg(long)]
        strict: bool,
        /// Worker threads; 1 runs everything sequentially.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Print the Anick n-chains of A_p.
    Chains {
        #[arg(long, default_value_t = 3, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        n: usize,
    },
    /// Write a presentation file for A, B or smash.
    Export {
        #[arg(long, value_enum)]
        name: Family,
        #[arg(long, default_value_t = 3, value_parser = parse_prime)]
        p: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Resolve the trivial module over an algebra read from a presentation file.
    Resolve {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "smash")]
    Smash,
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|_| format!("{s} is not a number"))?;
    PrimeField::new(p).map(|_| p).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Suite::EACH.iter().map(|s| s.name()).chain(["all"]).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn exec_for(jobs: usize) -> Exec {
    if jobs <= 1 {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

#[cfg(feature = "parallel")]
fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> skewcoh::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| skewcoh::Error::Invalid(e.to_string()))?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<T: Send>(_jobs: usize, f: impl FnOnce() -> T + Send) -> skewcoh::Result<T> {
    Ok(f())
}

fn emit(text: &str, out: Option<&PathBuf>) -> skewcoh::Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> skewcoh::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            p,
            suite,
            max_degree,
            budget_mb,
            format,
            out,
            strict,
            jobs,
            seed,
        } => {
            let cfg = Config {
                p,
                max_degree,
                budget_mb,
                seed,
                exec: exec_for(jobs),
            };
            let report = with_jobs(jobs, || verify::run(suite, &cfg))??;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            emit(&text, out.as_ref())?;
            let ok = report.passed() && !(strict && report.has_skipped());
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Chains { p, n } => {
            let alg = families::build_a(p)?;
            let sets = chain_sets(alg.presented().gb(), n);
            let mut words = sets[n].words();
            words.reverse();
            let shown: Vec<String> = words.iter().map(|w| w.display(alg.names())).collect();
            println!("{{{}}}", shown.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { name, p, out } => {
            let pres = match name {
                Family::A => families::presentation_a(p)?,
                Family::B => families::presentation_b(p)?,
                Family::Smash => smash_presentation(&families::presentation_a(p)?, &families::shear_action(p)?)?,
            };
            emit(&families::export_text(&pres), out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve { file, max_degree } => {
            let pres: Presentation = fs::read_to_string(&file)?.parse()?;
            let cap = 4 * pres.relations.iter().map(|r| r.max_len()).max().unwrap_or(1) + 4;
            let alg = QuotientAlgebra::new(file.display().to_string(), pres, cap)?;
            let res = AnickResolution::new(&alg, max_degree + 1, Exec::default())?;
            let ext = res.ext_dims(max_degree)?;
            println!("dimension {}", alg.dim());
            println!("n  chains  dim H^n  minimal");
            for n in 0..=max_degree {
                println!(
                    "{n:<2} {:>7} {:>8}  {}",
                    res.chain_set(n).len(),
                    ext.dims[n],
                    ext.minimal[n]
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
