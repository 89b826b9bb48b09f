use clap::{Parser, Subcommand, ValueEnum};
use lambda_count::limits::{DEFAULT_MAX_CELLS, DEFAULT_MAX_ENUM};
use lambda_count::named::{build_f_table, raffalli_f};
use lambda_count::polynomials::{poly_nf, poly_t};
use lambda_count::series::gf;
use lambda_count::terms::enumerate;
use lambda_count::{build_table, count, CatalogName, CountKind, Error, Limits};
use lambda_count_cli::format::{report_json, report_text};
use lambda_count_cli::{emit_table, run_suite, Suite, SuiteParams, TableDoc, TableFormat};
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lcount",
    version,
    about = "Count lambda terms and check the formulas around them"
)]
struct Cli {
    /// Refuse enumerations predicted to produce more terms than this.
    #[arg(long, global = true, env = "LC_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM)]
    max_enum: u64,
    /// Refuse tables with more cells than this.
    #[arg(long, global = true, env = "LC_MAX_CELLS", default_value_t = DEFAULT_MAX_CELLS)]
    max_cells: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    #[value(name = "T")]
    T,
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "f")]
    Named,
}

impl TableKind {
    fn count_kind(self) -> Option<CountKind> {
        match self {
            TableKind::T => Some(CountKind::T),
            TableKind::F => Some(CountKind::F),
            TableKind::G => Some(CountKind::G),
            TableKind::Named => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    #[value(name = "T")]
    T,
    #[value(name = "NF")]
    Nf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single count.
    Count {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        free: usize,
    },
    /// Print the rectangle of counts for sizes 1..=max-size.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        max_free: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// List every term of a size, one per line.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        free: usize,
        /// Only normal forms.
        #[arg(long)]
        normal: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print the polynomial m -> count(n, m).
    Poly {
        #[arg(long, value_enum)]
        kind: PolyFamily,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print coefficients of a generating function.
    Series {
        /// C, Od, Ev, Sod, Sev, Tod, Fod, Fev, FodBar, FevBar, SFod, SFodBar,
        /// SFev, SFevBar or Vertical(m).
        #[arg(long)]
        name: CatalogName,
        #[arg(long)]
        order: usize,
    },
    /// Run verification checks and print a report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 18)]
        max_size: usize,
        #[arg(long, default_value_t = 64)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
}

#[derive(Serialize)]
struct EnumerationDoc {
    size: usize,
    free: usize,
    normal: bool,
    terms: Vec<String>,
}

#[derive(Serialize)]
struct PolyDoc {
    kind: &'static str,
    size: usize,
    /// Ascending powers of m.
    coefficients: Vec<String>,
    text: String,
}

enum Outcome {
    Done,
    Failed,
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome, Error> {
    let limits = Limits {
        max_cells: cli.max_cells,
        max_enum: cli.max_enum,
    };
    match cli.command {
        Command::Count { kind, size, free } => {
            let v = match kind.count_kind() {
                Some(k) => count(k, size, free),
                None => raffalli_f(size, free),
            };
            writeln!(out, "{v}").expect("stdout");
        }
        Command::Table {
            kind,
            max_size,
            max_free,
            format,
        } => {
            let doc = match kind.count_kind() {
                Some(k) => {
                    TableDoc::from_count_table(&build_table(k, max_size, max_free, &limits)?)
                }
                None => TableDoc::from_f_table(&build_f_table(max_size, max_free, &limits)?),
            };
            out.write_all(emit_table(&doc, format).as_bytes())
                .expect("stdout");
        }
        Command::Enumerate {
            size,
            free,
            normal,
            format,
        } => {
            let terms = enumerate(size, free, normal, &limits)?;
            match format {
                TextFormat::Text => {
                    for t in terms {
                        writeln!(out, "{t}").expect("stdout");
                    }
                }
                TextFormat::Json => {
                    let doc = EnumerationDoc {
                        size,
                        free,
                        normal,
                        terms: terms.map(|t| t.to_string()).collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&doc).expect("plain data"))
                        .expect("stdout");
                }
            }
        }
        Command::Poly { kind, size, format } => {
            let (label, p) = match kind {
                PolyFamily::T => ("T", poly_t(size)),
                PolyFamily::Nf => ("NF", poly_nf(size).0),
            };
            match format {
                TextFormat::Text => writeln!(out, "{p}").expect("stdout"),
                TextFormat::Json => {
                    let doc = PolyDoc {
                        kind: label,
                        size,
                        coefficients: p.coeffs().iter().map(ToString::to_string).collect(),
                        text: p.to_string(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&doc).expect("plain data"))
                        .expect("stdout");
                }
            }
        }
        Command::Series { name, order } => {
            let table = match name {
                CatalogName::Vertical(m) => Some(build_table(CountKind::T, order, m, &limits)?),
                _ => None,
            };
            write!(out, "{}", gf(name, order, table.as_ref())?).expect("stdout");
        }
        Command::Verify {
            suite,
            max_size,
            order,
            format,
        } => {
            let params = SuiteParams {
                max_size,
                order,
                limits,
            };
            let report = run_suite(suite, &params)?;
            let text = match format {
                TextFormat::Text => report_text(&report),
                TextFormat::Json => report_json(&report),
            };
            out.write_all(text.as_bytes()).expect("stdout");
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    out.flush().expect("stdout");
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e @ Error::ResourceLimit { .. }) => {
            eprintln!("lcount: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("lcount: {e}");
            ExitCode::from(1)
        }
    }
}
