use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use abelian_lattice::action::{
    coinvariant_lattice, fixed_point_count, invariant_lattice, wedge_square, ActionError,
};
use abelian_lattice::catalog::{self, CatalogError, VerificationReport};
use abelian_lattice::classification::{enumerate_table, full_table, TextTable};
use abelian_lattice::io::read_matrix;
use abelian_lattice::lattice::{delta_invariant, discriminant, genus_fingerprint, Lattice};
use abelian_lattice::linalg::IntMatrix;
use abelian_lattice::selfcheck;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "abelian-lattice", version, about = "Lattices of automorphisms of complex 2-tori")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant lattices of non-symplectic prime-order actions
    Table {
        #[arg(long, value_parser = ["2", "3", "5"])]
        p: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the catalog of examples
    List,
    /// Re-verify catalog examples
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the JSON report to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Invariants of the lattice given by a Gram matrix file
    LatticeInfo { file: PathBuf },
    /// Action on H^2 of a 4x4 integer matrix acting on H^1
    Wedge {
        file: PathBuf,
        /// Also count fixed points on the torus
        #[arg(long)]
        fixed: bool,
    },
    /// Run the randomized self-checks
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = selfcheck::DEFAULT_CASES)]
        cases: usize,
    },
}

/// Error carrying the exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table { p, format } => cmd_table(p.map(|s| s.parse().expect("validated")), format),
        Command::List => cmd_list(),
        Command::Verify {
            name,
            all,
            format,
            report,
        } => cmd_verify(name.as_deref(), all, format, report.as_deref()),
        Command::LatticeInfo { file } => cmd_lattice_info(&file),
        Command::Wedge { file, fixed } => cmd_wedge(&file, fixed),
        Command::Check { seed, cases } => cmd_check(seed, cases),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn cmd_table(p: Option<u32>, format: Format) -> Result<String, Failure> {
    let rows = match p {
        Some(p) => enumerate_table(p),
        None => full_table(),
    }
    .map_err(usage)?;
    Ok(match format {
        Format::Text => TextTable(&rows).to_string(),
        Format::Json => to_json(&rows),
    })
}

fn cmd_list() -> Result<String, Failure> {
    let mut out = String::new();
    for rec in catalog::list_examples() {
        writeln!(
            out,
            "{:<20} p={}  T = {:<14} {}",
            rec.name,
            rec.p,
            rec.expected_t.to_string(),
            rec.description
        )
        .expect("string write");
    }
    Ok(out)
}

fn cmd_verify(
    name: Option<&str>,
    all: bool,
    format: Format,
    report_path: Option<&Path>,
) -> Result<String, Failure> {
    let reports: Vec<VerificationReport> = if all {
        catalog::verify_all()
    } else {
        let name = name.expect("clap requires a name without --all");
        vec![catalog::verify_example(name).map_err(|e| match e {
            CatalogError::UnknownExample(_) => usage(e),
            other => Failure {
                code: EXIT_FAILURE,
                message: other.to_string(),
            },
        })?]
    };
    if let Some(path) = report_path {
        std::fs::write(path, to_json(&reports))
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let out = match format {
        Format::Json => to_json(&reports),
        Format::Text if all => {
            let mut out = String::new();
            for r in &reports {
                let failed = r.checks.iter().filter(|c| !c.pass).count();
                writeln!(
                    out,
                    "{:<20} {}  {}/{} checks",
                    r.example,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.checks.len() - failed,
                    r.checks.len()
                )
                .expect("string write");
            }
            for r in reports.iter().filter(|r| !r.passed) {
                write!(out, "\n{r}").expect("string write");
            }
            out
        }
        Format::Text => reports.iter().map(ToString::to_string).collect(),
    };
    if reports.iter().all(|r| r.passed) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure {
            code: EXIT_FAILURE,
            message: "verification failed".into(),
        })
    }
}

fn load(path: &Path) -> Result<IntMatrix, Failure> {
    read_matrix(path).map_err(usage)
}

fn elementary_summary(l: &Lattice) -> String {
    let factors = discriminant(l).invariant_factors;
    let Some(first) = factors.first() else {
        return "unimodular".into();
    };
    let prime = is_prime(first);
    if !prime || factors.iter().any(|d| d != first) {
        return "not p-elementary".into();
    }
    let mut s = format!("{first}-elementary a={}", factors.len());
    if *first == BigInt::from(2) {
        match delta_invariant(l) {
            Ok(d) => write!(s, ", δ={d}").expect("string write"),
            Err(_) => s.push_str(", δ undefined (odd lattice)"),
        }
    }
    s
}

fn is_prime(n: &BigInt) -> bool {
    let Ok(n) = u64::try_from(n) else {
        return false;
    };
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn describe_lattice(out: &mut String, l: &Lattice, indent: &str) {
    let (plus, minus) = l.signature();
    writeln!(
        out,
        "{indent}rank {}, signature ({plus},{minus}), d={}, {}",
        l.rank(),
        l.discriminant_order(),
        elementary_summary(l)
    )
    .expect("string write");
    writeln!(out, "{indent}det: {}", l.det()).expect("string write");
    writeln!(out, "{indent}parity: {}", if l.is_even() { "even" } else { "odd" }).expect("string write");
    match genus_fingerprint(l) {
        Ok(fp) => writeln!(out, "{indent}fingerprint: {fp}").expect("string write"),
        Err(e) => writeln!(out, "{indent}fingerprint: unavailable ({e})").expect("string write"),
    }
}

fn cmd_lattice_info(path: &Path) -> Result<String, Failure> {
    let l = Lattice::new(load(path)?).map_err(usage)?;
    let mut out = String::new();
    describe_lattice(&mut out, &l, "");
    Ok(out)
}

fn order_text(o: Option<u32>) -> String {
    o.map_or("infinite (or above 12)".into(), |n| n.to_string())
}

fn cmd_wedge(path: &Path, fixed: bool) -> Result<String, Failure> {
    let g = load(path)?;
    let action = wedge_square(&g).map_err(usage)?;
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "Λ²g = {}", action.phi).expect("string write");
    writeln!(w, "det g = {}", action.det_g()).expect("string write");
    writeln!(
        w,
        "order on H^1: {}, order on H^2: {}",
        order_text(action.order_h1),
        order_text(action.order_h2)
    )
    .expect("string write");
    match invariant_lattice(&action) {
        Ok(t) => {
            writeln!(w, "invariant lattice T: basis {}", t.basis).expect("string write");
            writeln!(w, "  Gram {}", t.lattice.gram()).expect("string write");
            if t.rank() > 0 {
                describe_lattice(w, &t.lattice, "  ");
            }
            let s = coinvariant_lattice(&action).map_err(usage)?;
            writeln!(w, "coinvariant lattice S: rank {}, Gram {}", s.rank(), s.lattice.gram())
                .expect("string write");
        }
        Err(ActionError::OrientationReversing) => {
            writeln!(w, "invariant lattice: not computed, det g = -1 reverses orientation")
                .expect("string write");
        }
        Err(e) => return Err(usage(e)),
    }
    if fixed {
        match fixed_point_count(&g) {
            Ok(n) => writeln!(w, "fixed points: {n}").expect("string write"),
            Err(ActionError::PositiveDimensional) => {
                writeln!(w, "fixed points: positive-dimensional").expect("string write")
            }
            Err(e) => return Err(usage(e)),
        }
    }
    Ok(out)
}

fn cmd_check(seed: u64, cases: usize) -> Result<String, Failure> {
    let results = selfcheck::run(seed, cases);
    let mut out = format!("seed {seed}, {cases} cases per property\n");
    for r in &results {
        writeln!(out, "{r}").expect("string write");
    }
    if results.iter().all(|r| r.passed()) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure {
            code: EXIT_FAILURE,
            message: "self-check failed".into(),
        })
    }
}
