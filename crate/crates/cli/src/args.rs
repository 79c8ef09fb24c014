use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "degeul", version, about = "Exact tables, expansions and identity checks for Eulerian families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a triangle or sequence up to n_max.
    Table {
        kind: TableKind,
        #[arg(long, allow_negative_numbers = true)]
        n_max: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Expand a generating function; values are n! times the coefficients.
    Expand {
        gf: GfKind,
        #[arg(long, allow_negative_numbers = true)]
        order: i64,
        /// Fix a variable to an exact rational, e.g. `t=2` or `λ=1/3`.
        #[arg(long = "bind", value_name = "VAR=P/Q")]
        bindings: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run identity checks and report pass/fail with counterexamples.
    Verify {
        /// Identity tags, or `all`.
        ids: Vec<String>,
        #[arg(long = "identity", value_name = "TAG")]
        identity: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        n_max: i64,
        /// Second index bound for two-index identities.
        #[arg(long, allow_negative_numbers = true)]
        m_max: Option<i64>,
        /// Compare at random points from this seed instead of symbolically.
        #[arg(long)]
        sample_seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Json)]
        format: VerifyFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Eulerian,
    Stirling1,
    Stirling2,
    DegEulerian,
    DegStirling1,
    OrderedBell,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Eulerian => "eulerian",
            TableKind::Stirling1 => "stirling1",
            TableKind::Stirling2 => "stirling2",
            TableKind::DegEulerian => "deg-eulerian",
            TableKind::DegStirling1 => "deg-stirling1",
            TableKind::OrderedBell => "ordered-bell",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GfKind {
    Eulerian,
    DegEulerian,
    OrderedBell,
    FrobeniusEuler,
}

impl GfKind {
    pub fn name(self) -> &'static str {
        match self {
            GfKind::Eulerian => "eulerian",
            GfKind::DegEulerian => "deg-eulerian",
            GfKind::OrderedBell => "ordered-bell",
            GfKind::FrobeniusEuler => "frobenius-euler",
        }
    }
}
