use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chain-conic", version, about = "Closed circle chains and their inscribed conics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw a random exact-rational configuration and print it as JSON.
    Generate(GenerateArgs),
    /// Check closure, the inscribed conic and (n=6) Brianchon concurrency.
    Verify(VerifyArgs),
    /// Run many seeded verifications and summarize the results.
    Sweep(SweepArgs),
    /// Render a configuration as an SVG scene.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileName {
    /// c(K) strictly inside c(L): ellipse regime.
    KInside,
    /// carriers externally disjoint: hyperbola regime.
    KOutside,
    /// c(L) is a line: parabola regime.
    LLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Chain length (number of P-points); must exceed 2.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ProfileName::KInside)]
    pub profile: ProfileName,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
    /// Pretty-print the JSON document.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Configuration file ('-' for stdin).
    #[arg(value_name = "CONFIG", conflicts_with = "scenario")]
    pub config: Option<String>,
    /// Built-in scene: fig2-ellipse | fig3-parabola | hyperbola.
    #[arg(long)]
    pub scenario: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Backend::Exact)]
    pub backend: Backend,
    /// Relative tolerance for the float backend
    /// (default: $CHAIN_CONIC_TOL, else 1e-9).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<String>,
    /// Human-readable table instead of the JSON report.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated chain lengths, e.g. 4,6,8.
    #[arg(long = "n-list", value_name = "N,N,...")]
    pub n_list: String,
    /// Verifications per chain length.
    #[arg(long)]
    pub trials: u32,
    /// First seed; trial k uses seed0 + k.
    #[arg(long, default_value_t = 0)]
    pub seed0: u64,
    #[arg(long, value_enum, default_value_t = ProfileName::KInside)]
    pub profile: ProfileName,
    #[arg(long, value_enum, default_value_t = Backend::Exact)]
    pub backend: Backend,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<String>,
    /// Human-readable table instead of the JSON summary.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub out: Option<String>,
    /// Render even if verification fails (degenerate chains still refuse).
    #[arg(long)]
    pub force: bool,
}

/// `--tol` beats `$CHAIN_CONIC_TOL` beats the built-in 1e-9.
pub fn resolve_tolerance(flag: Option<f64>) -> Result<f64, String> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("CHAIN_CONIC_TOL") {
            Ok(raw) => raw
                .parse::<f64>()
                .map_err(|_| format!("CHAIN_CONIC_TOL is not a number: {raw:?}"))?,
            Err(_) => 1e-9,
        },
    };
    if !tol.is_finite() || tol < 0.0 {
        return Err(format!("tolerance must be finite and non-negative, got {tol}"));
    }
    Ok(tol)
}
