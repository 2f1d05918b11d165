use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;
mod text;

use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "detcurve", version, about = "Defining equations of monomial curves in 3-space, checked exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derived quantities and their identities.
    Derive(CurveArgs),
    /// The binomials f, f1, f2, the monomial matrix and its selected minors.
    Binomials {
        #[command(flatten)]
        curve: CurveArgs,
        /// Which defining triple to emit.
        #[arg(long, value_enum, default_value_t = Variant::Minors)]
        variant: Variant,
    },
    /// Symbolic and finite-field verification of both defining triples.
    Verify(VerifyArgs),
    /// Single-column radical-reduction criterion for a 2 x r monomial matrix.
    Prop1(Prop1Args),
    /// Normal forms of a simple 2 x 3 monomial matrix over four variables.
    Classify(MatrixArgs),
    /// Valla's pair (f, g) for (a^m, b^n, c^p / b^r, c^s, a^u).
    Valla(VallaArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Minors,
    Binomials,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    /// Degree of the curve.
    #[arg(long, requires_all = ["eps1", "eps2"], conflicts_with = "affine")]
    pub delta: Option<u64>,
    /// Exponent of xi in x1.
    #[arg(long, requires = "delta")]
    pub eps1: Option<u64>,
    /// Exponent of xi in x2.
    #[arg(long, requires = "delta")]
    pub eps2: Option<u64>,
    /// Affine curve (t^A, t^B, t^C), read on the chart x0 = 1.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], required_unless_present = "delta")]
    pub affine: Option<Vec<u64>>,
    /// Divide the exponents by their common gcd first.
    #[arg(long)]
    pub normalize_gcd: bool,
    /// Comma-separated names for x0..x3.
    #[arg(long)]
    pub vars: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Primes for the finite-field oracle.
    #[arg(long = "prime", num_args = 1.., default_values_t = [5u64, 7, 11])]
    pub primes: Vec<u64>,
    /// Requested extension degree K for curve images.
    #[arg(long, default_value_t = 6)]
    pub max_ext: usize,
    /// Stop at K instead of escalating up to the hard cap.
    #[arg(long)]
    pub no_escalate: bool,
    /// Symbolic checks only.
    #[arg(long)]
    pub skip_oracle: bool,
    /// Additional polynomial claimed to vanish on the curve (repeatable).
    #[arg(long = "extra-poly")]
    pub extra_polys: Vec<String>,
}

#[derive(Args, Debug, Clone)]
pub struct MatrixArgs {
    /// Matrix as `row;row` with comma-separated monomial entries, e.g. `a*d,b,c;b,a,d`.
    #[arg(long)]
    pub matrix: String,
    /// Comma-separated variable names (default a,b,c,d).
    #[arg(long)]
    pub vars: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Prop1Args {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    /// Only this column (1-based).
    #[arg(long)]
    pub column: Option<usize>,
    /// Cross-check V(J) = V(J_k) over these primes for every column that holds.
    #[arg(long = "oracle-prime", num_args = 1..)]
    pub oracle_primes: Vec<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct VallaArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub s: u64,
    #[arg(long)]
    pub u: u64,
    /// Check that f and g vanish on (t^ALPHA, t^BETA, t^GAMMA).
    #[arg(long, num_args = 3, value_names = ["ALPHA", "BETA", "GAMMA"])]
    pub check_curve: Option<Vec<u64>>,
    /// Compare V(J) with V(f, g) over these primes.
    #[arg(long = "prime", num_args = 1..)]
    pub primes: Vec<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report: RunReport = match &cli.command {
        Command::Derive(curve) => commands::derive(curve),
        Command::Binomials { curve, variant } => commands::binomials(curve, *variant),
        Command::Verify(args) => commands::verify(args),
        Command::Prop1(args) => commands::prop1(args),
        Command::Classify(args) => commands::classify(args),
        Command::Valla(args) => commands::valla(args),
    };
    if let Some(err) = &report.error {
        eprintln!("error: {err}");
    }
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", text::render(&report)),
    }
    ExitCode::from(report.exit_code)
}
