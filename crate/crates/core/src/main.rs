use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use clifford_factor::catalog::{self, corrections, routes, spec};
use clifford_factor::clifford::parse_multivector;
use clifford_factor::repmap::{element_inverse, represent};
use clifford_factor::verify::{check_catalog, check_suite, sort_reports, CheckReport};
use clifford_factor::{classify, Error, Ring, RingMatrix, Route, Signature};

#[derive(Parser)]
#[command(name = "clifford-factor", version, about = "Exact matrix representations of real Clifford algebras")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the matrix of an element.
    Rep {
        #[arg(long)]
        sig: Signature,
        #[arg(long)]
        route: Option<Route>,
        /// Multivector expression, or `-` to read stdin.
        expr: String,
    },
    /// Invert an element inside the algebra.
    Inverse {
        #[arg(long)]
        sig: Signature,
        #[arg(long)]
        route: Option<Route>,
        expr: String,
    },
    /// Ring and matrix size of `R_{p,q}`.
    Classify {
        #[arg(long)]
        sig: Signature,
    },
    /// Classification grid for `p + q <= max-n`.
    Table {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Run the property suite.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        sig: Option<Signature>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        route: Option<Route>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Write `catalog.txt` and `corrections.md`.
    Catalog {
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Width { .. } | Error::SignatureTooLarge(_) | Error::DegenerateSignature => 2,
        Error::CatalogMiss { .. } => 3,
        _ => 1,
    }
}

fn read_expr(expr: &str) -> std::io::Result<String> {
    if expr == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s.trim().to_string())
    } else {
        Ok(expr.to_string())
    }
}

fn ring_cell(ring: Ring, size: usize) -> String {
    if size == 1 {
        ring.to_string()
    } else {
        format!("{ring}({size})")
    }
}

fn matrix_records(sig: Signature, route: Route, m: &RingMatrix) -> String {
    let mut out = String::new();
    for (b, blk) in m.blocks().iter().enumerate() {
        for i in 0..blk.size() {
            for j in 0..blk.size() {
                out.push_str(&format!("{sig}\t{route}\t{}\t{}\t{b}\t{i}\t{j}\t{}\n", m.ring(), m.size(), blk.get(i, j)));
            }
        }
    }
    out
}

fn table(max_n: u32, format: Format) -> String {
    let mut out = String::new();
    for n in 1..=max_n {
        let mut cells = Vec::new();
        for p in (0..=n).rev() {
            let sig = Signature::of(p, n - p);
            let (ring, size) = classify(sig);
            let built = !routes(sig).is_empty();
            match format {
                Format::Records => out.push_str(&format!("{sig}\t{ring}\t{size}\t{}\n", if built { "constructed" } else { "-" })),
                Format::Text => cells.push(format!("{sig} {}{}", ring_cell(ring, size), if built { "*" } else { "" })),
            }
        }
        if format == Format::Text {
            out.push_str(&format!("n={n:<2} {}\n", cells.join("  ")));
        }
    }
    if format == Format::Text {
        out.push_str("* constructed transform available\n");
    }
    out
}

fn print_reports(reports: &[CheckReport], format: Format) -> bool {
    for r in reports {
        match format {
            Format::Text => println!("{}", r.text()),
            Format::Records => println!("{}", r.record()),
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if format == Format::Text {
        println!("{} checks, {} passed, {failed} failed", reports.len(), reports.len() - failed);
    }
    failed == 0
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Rep { sig, route, expr } => {
            let src = read_expr(&expr).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
            let a = parse_multivector(sig, &src)?;
            let img = represent(&a, route)?;
            match format {
                Format::Text => println!("{}", img.value),
                Format::Records => print!("{}", matrix_records(img.sig, img.route, &img.value)),
            }
        }
        Cmd::Inverse { sig, route, expr } => {
            let src = read_expr(&expr).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
            let a = parse_multivector(sig, &src)?;
            let inv = element_inverse(&a, route)?;
            let text = inv.map_or_else(|| "non-invertible".to_string(), |b| b.to_string());
            match format {
                Format::Text => println!("{text}"),
                Format::Records => println!("{sig}\t{a}\t{text}"),
            }
        }
        Cmd::Classify { sig } => {
            let (ring, size) = classify(sig);
            match format {
                Format::Text => println!("{sig} {}", ring_cell(ring, size)),
                Format::Records => println!("{sig}\t{ring}\t{size}"),
            }
        }
        Cmd::Table { max_n } => {
            if max_n > 32 {
                return Err(Error::Parse { pos: 0, msg: "--max-n is capped at 32".into() });
            }
            print!("{}", table(max_n, format));
        }
        Cmd::Verify { sig, all, route, seed, trials } => {
            let mut reports = if all {
                check_catalog(seed, trials, false)
            } else {
                let sig = sig.expect("clap requires --sig without --all");
                let rs = match route {
                    Some(r) => vec![r],
                    None => routes(sig),
                };
                if rs.is_empty() {
                    catalog::default_route(sig)?;
                }
                for r in &rs {
                    spec(sig, *r)?;
                }
                rs.into_iter().flat_map(|r| check_suite(sig, r, seed, trials)).collect()
            };
            sort_reports(&mut reports);
            if !print_reports(&reports, format) {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Catalog { out } => {
            let io = |e: std::io::Error| Error::Structure(format!("writing to {}: {e}", out.display()));
            std::fs::create_dir_all(&out).map_err(io)?;
            let cat = catalog::catalog_text()?;
            let ledger = corrections::ledger()?;
            std::fs::write(out.join("catalog.txt"), &cat).map_err(io)?;
            std::fs::write(out.join("corrections.md"), corrections::render(&ledger)).map_err(io)?;
            let amended = ledger.iter().filter(|c| !c.passed).count();
            match format {
                Format::Text => println!(
                    "wrote {} ({} entries) and {} ({amended} corrections, {} confirmed)",
                    out.join("catalog.txt").display(),
                    cat.lines().count(),
                    out.join("corrections.md").display(),
                    ledger.len() - amended
                ),
                Format::Records => print!("{cat}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
