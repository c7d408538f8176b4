use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "specht",
    version,
    about = "Exact Specht modules, one-box-shift maps and Jantzen filtrations"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Accept degrees above the default limit of 12 (up to 16).
    #[arg(long, global = true)]
    pub force: bool,

    /// Permit p = 2 for the brute-force commands (`hom`, `jantzen` without `--contain`).
    #[arg(long = "allow-p2", global = true)]
    pub allow_p2: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Semistandard α-tableaux of one-box-shift type β and their sets.
    Tableaux(ShiftArgs),
    /// Brute-force Hom(S^α, S^β) over GF(p).
    Hom(HomArgs),
    /// The explicit one-box-shift map, over ℤ or mod p.
    CpMap(CpMapArgs),
    /// The map induced by a polynomial in L_{n+1} on the Specht series of S^λ↓.
    JmMap(JmMapArgs),
    /// Endomorphism ring of a restricted or induced Specht module.
    Endo(EndoArgs),
    /// Jantzen filtration of S^β and containment of one-box-shift images.
    Jantzen(JantzenArgs),
    /// Run the relation, uniqueness, JM and Jantzen sweeps up to a degree.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ShiftArgs {
    #[arg(long)]
    pub alpha: String,
    #[arg(long, required_unless_present_all = ["a", "b"], conflicts_with_all = ["a", "b"])]
    pub beta: Option<String>,
    /// Row losing a node (with `--b` instead of `--beta`).
    #[arg(long, requires = "b")]
    pub a: Option<usize>,
    /// Row gaining a node.
    #[arg(long, requires = "a")]
    pub b: Option<usize>,
}

#[derive(Debug, Args)]
pub struct HomArgs {
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub beta: String,
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct CpMapArgs {
    #[command(flatten)]
    pub shift: ShiftArgs,
    /// Reduce mod p (requires p | h_a); omit to work over ℤ.
    #[arg(short = 'p', long = "prime")]
    pub p: Option<u64>,
    /// `row-reading` or a bijective α-tableau such as `1234/567`.
    #[arg(long = "image-of")]
    pub image_of: Option<String>,
    /// Include the full matrix on standard bases (mod p) or into M^β (over ℤ).
    #[arg(long)]
    pub matrix: bool,
}

#[derive(Debug, Args)]
pub struct JmMapArgs {
    #[arg(long, conflicts_with_all = ["alpha", "beta"], requires_all = ["from", "to"])]
    pub lambda: Option<String>,
    /// Source layer (1-based, numbered top-down by removable node).
    #[arg(long)]
    pub from: Option<usize>,
    /// Target layer.
    #[arg(long)]
    pub to: Option<usize>,
    #[arg(long, requires = "beta")]
    pub alpha: Option<String>,
    #[arg(long, requires = "alpha")]
    pub beta: Option<String>,
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    #[arg(long)]
    pub matrix: bool,
}

#[derive(Debug, Args)]
pub struct EndoArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    #[arg(long, conflicts_with = "induce", required_unless_present = "induce")]
    pub restrict: bool,
    #[arg(long)]
    pub induce: bool,
}

#[derive(Debug, Args)]
pub struct JantzenArgs {
    #[arg(long)]
    pub beta: String,
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    /// Check that the one-box-shift image of S^ALPHA lies in J^{v_p(h_a)}.
    #[arg(long)]
    pub contain: Option<String>,
    /// Include mod-p bases of the filtration levels.
    #[arg(long)]
    pub bases: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "max-n", default_value_t = 6)]
    pub max_n: usize,
    /// Comma-separated odd primes.
    #[arg(short = 'p', long = "primes", value_delimiter = ',', default_values_t = [3u64, 5, 7])]
    pub primes: Vec<u64>,
}
