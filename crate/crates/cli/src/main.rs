//! `orchard`: build, check and draw orchard-type configurations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orchard::bounds::{format_table, table1, verify_brass, witness, BrassInstance};
use orchard::constructions as build;
use orchard::polytopal::{self, Ideal};
use orchard::projgeom::{orchard_check, spanned_lines};
use orchard::render::{render_svg, DEFAULT_PRECISION};
use orchard::{Configuration, Error};

#[derive(Parser)]
#[command(name = "orchard", version, about = "Exact orchard-problem configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a configuration family and write it as JSON.
    Construct {
        family: Family,
        /// Size parameter (grid side, star order, number of parallels).
        #[arg(long, visible_alias = "N")]
        n: Option<u32>,
        /// Multiplier for collapsed-star (N = 12m).
        #[arg(long)]
        m: Option<u32>,
        /// collapsed-star only: emit the (N−1)² configuration left after
        /// removing one point from each pair.
        #[arg(long)]
        removal: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print spanned-line statistics of a configuration file.
    Stats {
        file: PathBuf,
        /// Fail unless no line carries r or more points.
        #[arg(long)]
        orchard: Option<usize>,
    },
    /// Check a Brass instance (or a configuration with named
    /// "parallels"/"transversals").
    BrassVerify { file: PathBuf },
    /// Instance achieving M(N) transversals.
    Witness {
        #[arg(long = "N", visible_alias = "n")]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Table1 {
        #[arg(long, default_value_t = 5)]
        from: u32,
        #[arg(long, default_value_t = 30)]
        to: u32,
        #[arg(long)]
        json: bool,
    },
    FinitePlane {
        #[arg(long)]
        q: u8,
    },
    Reduce { target: ReduceTarget },
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    SquareGrid,
    NineTree,
    Dudeney21,
    DoubleStar,
    TriplePentagram,
    Figure5Search,
    PencilOdd,
    PencilEven,
    CollapsedStar,
    SquarePlusInfinity,
    Icosahedral,
    Octahedral,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceTarget {
    OctahedralMod3,
    IcosahedralTwo,
    IcosahedralSqrt5,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) | Error::SearchFailed(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn need(v: Option<u32>, flag: &str) -> Result<u32, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("this family needs --{flag}")))
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn load_config(path: &PathBuf) -> Result<Configuration, Failure> {
    Configuration::from_json(&read(path)?).map_err(|e| Failure::Usage(e.to_string()))
}

fn construct(family: Family, n: Option<u32>, m: Option<u32>, removal: bool) -> Result<Configuration, Failure> {
    Ok(match family {
        Family::SquareGrid => build::square_grid(need(n, "n")?)?,
        Family::NineTree => build::nine_tree()?,
        Family::Dudeney21 => build::dudeney21()?,
        Family::DoubleStar => build::double_star(need(n, "n")?)?,
        Family::TriplePentagram => build::triple_pentagram()?,
        Family::Figure5Search => build::reconstruct_figure5()?.config,
        Family::PencilOdd => build::pencil_odd(need(n, "n")?)?.1,
        Family::PencilEven => build::pencil_even_configuration(need(n, "n")?)?,
        Family::CollapsedStar => {
            let c = build::collapsed_star(need(m, "m")?)?;
            if removal {
                c.removal
            } else {
                c.complete
            }
        }
        Family::SquarePlusInfinity => build::square_plus_infinity(need(n, "n")?)?,
        Family::Icosahedral => polytopal::icosahedral().to_configuration()?,
        Family::Octahedral => polytopal::octahedral().to_configuration()?,
    })
}

fn brass_from_file(path: &PathBuf) -> Result<BrassInstance, Failure> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    if value.get("parallels").is_some() {
        serde_json::from_value(value).map_err(|e| Failure::Usage(e.to_string()))
    } else {
        let c = Configuration::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(BrassInstance::from_configuration(&c)?)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Construct {
            family,
            n,
            m,
            removal,
            out,
        } => {
            let c = construct(family, n, m, removal)?;
            emit(&c.to_json(), out.as_ref())?;
            if let Some(p) = out {
                println!("wrote {} ({} points)", p.display(), c.len());
            }
            Ok(())
        }
        Command::Stats { file, orchard } => {
            let c = load_config(&file)?;
            let stats = spanned_lines(&c).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut v = stats.to_json();
            if let Some(r) = orchard {
                let ok = orchard_check(&c, r).map_err(|e| Failure::Usage(e.to_string()))?;
                v["orchard"] = serde_json::json!({ "r": r, "holds": ok });
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
                if !ok {
                    return Err(Failure::Verification(format!(
                        "{} lines carry {r} or more points",
                        stats.big_t(r)
                    )));
                }
                return Ok(());
            }
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            Ok(())
        }
        Command::BrassVerify { file } => {
            let b = brass_from_file(&file)?;
            let (ok, counts) = verify_brass(&b);
            println!(
                "{}",
                serde_json::json!({ "N": b.n(), "M": b.m(), "counts": counts, "ok": ok })
            );
            if ok {
                Ok(())
            } else {
                let worst = counts.iter().max().copied().unwrap_or(0);
                Err(Failure::Verification(format!(
                    "a parallel carries {worst} points, more than N = {}",
                    b.n()
                )))
            }
        }
        Command::Witness { n, out } => {
            let b = witness(n)?;
            emit(&b.to_json(), out.as_ref())?;
            if let Some(p) = out {
                println!("wrote {} (N = {}, M = {})", p.display(), b.n(), b.m());
            }
            Ok(())
        }
        Command::Table1 { from, to, json } => {
            let rows = table1(from, to)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).expect("json"));
            } else {
                print!("{}", format_table(&rows));
            }
            Ok(())
        }
        Command::FinitePlane { q } => {
            let p = polytopal::finite_plane(q)?;
            println!("{}", serde_json::to_string_pretty(&p).expect("json"));
            Ok(())
        }
        Command::Reduce { target } => {
            let (map, report) = match target {
                ReduceTarget::OctahedralMod3 => polytopal::reduce_octahedral_mod3()?,
                ReduceTarget::IcosahedralTwo => polytopal::reduce_icosahedral(Ideal::Two)?,
                ReduceTarget::IcosahedralSqrt5 => polytopal::reduce_icosahedral(Ideal::Sqrt5)?,
            };
            let v = serde_json::json!({ "map": map, "report": report });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            Ok(())
        }
        Command::Render {
            file,
            out,
            precision,
        } => {
            let c = load_config(&file)?;
            let svg = render_svg(&c, precision)?;
            emit(&svg, Some(&out))
        }
    }
}

fn main() -> ExitCode {
    let threads = std::env::var("INCIDENCE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0);
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
