use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "superjack", version, about = "Pieri rules for Jack and Macdonald polynomials in superspace")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Monomial expansion of a Jack polynomial
    Jack(ExpansionArgs),
    /// Monomial expansion of a Macdonald polynomial
    Macdonald(ExpansionArgs),
    /// Closed-form Pieri coefficients
    Pieri(PieriArgs),
    /// Check the e and ẽ rules against the brute-force expansion
    VerifyPieri(VerifyArgs),
    /// Check the g and g̃ rules and the conjugation transport
    VerifyDual(VerifyDualArgs),
    /// Check ẽ₀, Q̃, q⊥ and their commutation relations
    VerifyCommutators(VerifyArgs),
    /// Check norms and the ω̂ duality
    VerifyDuality(VerifyArgs),
    /// Check the conjectured Macdonald rules
    VerifyMacdonald(VerifyMacdonaldArgs),
    /// Weighted sum over alternating sign matrices
    AsmSum(AsmSumArgs),
    /// Check the determinant, ASM and Izergin–Korepin identities
    VerifySixvertex(VerifySixvertexArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    E,
    Etilde,
    G,
    Gtilde,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldArg {
    Alpha,
    Qt,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Worker threads; defaults to the number of cores
    #[arg(long, env = "SUPERJACK_JOBS")]
    pub jobs: Option<usize>,
    /// Write the document here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExpansionArgs {
    #[arg(long)]
    pub lambda: String,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct PieriArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, value_enum, default_value = "alpha")]
    pub field: FieldArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct Range {
    /// Largest |Λ*| (for the operator and duality checks, largest n+m)
    #[arg(long, default_value_t = 4)]
    pub max_degree: u32,
    /// Largest m; defaults to 2 where |Λ*| bounds the range and to no bound where n+m does
    #[arg(long)]
    pub max_fermion: Option<usize>,
    /// Largest n of the generators
    #[arg(long = "n", default_value_t = 2)]
    pub max_n: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub range: Range,
    /// Restrict to one generator family
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransportArg {
    /// ‖P_Ω‖²/‖P_Λ‖²
    Printed,
    /// ‖P_Λ‖²/‖P_Ω‖²
    Inverted,
}

#[derive(Args, Debug)]
pub struct VerifyDualArgs {
    #[command(flatten)]
    pub verify: VerifyArgs,
    /// Norm ratio used in the conjugation transport
    #[arg(long, value_enum, default_value = "inverted")]
    pub transport: TransportArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TPowerArg {
    /// t^d
    D,
    /// t^-d
    MinusD,
}

#[derive(Args, Debug)]
pub struct VerifyMacdonaldArgs {
    #[arg(long, default_value_t = 3)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 2)]
    pub max_fermion: usize,
    #[arg(long = "n", default_value_t = 2)]
    pub max_n: u32,
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// Power of t in the coefficients
    #[arg(long, value_enum, default_value = "d")]
    pub t_power: TPowerArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct AsmSumArgs {
    /// Matrix size; inferred from --x when given
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated x values; formal x1..xn when omitted
    #[arg(long)]
    pub x: Option<String>,
    /// Comma-separated y values; formal y1..yn when omitted
    #[arg(long)]
    pub y: Option<String>,
    /// Weights: alpha (Jack limit) or qt
    #[arg(long, value_enum, default_value = "alpha")]
    pub field: FieldArg,
    /// Crossing parameter; α for alpha, u = q^(1/2) for qt by default
    #[arg(long)]
    pub a: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifySixvertexArgs {
    #[command(flatten)]
    pub range: Range,
    /// Largest size for the symbolic Det = D′ check
    #[arg(long, default_value_t = 3)]
    pub symbolic_size: usize,
    #[command(flatten)]
    pub output: Output,
}
