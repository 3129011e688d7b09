use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "coxinv",
    version,
    about = "Involution products and excess in finite Coxeter groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub group: GroupArgs,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Annotate type A elements with cycle notation (text output only).
    #[arg(long, global = true)]
    pub cycles: bool,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Type symbol such as A3, B4, D4, F4, H3, H4, I2(7).
    #[arg(long = "type", global = true, value_name = "SYMBOL", conflicts_with = "matrix")]
    pub symbol: Option<String>,

    /// JSON file `{"rank": n, "m": [[...], ...]}`.
    #[arg(long, global = true, value_name = "PATH")]
    pub matrix: Option<PathBuf>,

    /// Positive-root cap; closure past it reports a non-finite group.
    #[arg(long, global = true, value_name = "N", default_value_t = coxinv_core::DEFAULT_ROOT_CAP)]
    pub root_cap: usize,
}

#[derive(Args, Debug)]
pub struct ElementArg {
    /// Word in the generators, e.g. "1 2 3". The empty string is the identity.
    #[arg(long, value_name = "WORD", allow_hyphen_values = true)]
    pub element: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order and root data of the group.
    Info,
    /// Length and reduced word of an element.
    Length(ElementArg),
    /// Excess of an element.
    Excess {
        #[command(flatten)]
        element: ElementArg,
        /// Only allow reversers of order exactly 2 (moves the identity to excess 2).
        #[arg(long)]
        nontrivial_reversers: bool,
    },
    /// All involution factorizations attaining the excess.
    Pairs(ElementArg),
    /// Histogram of excess values over the whole group.
    Distribution {
        /// Worker threads.
        #[arg(long, value_name = "N", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        parallel: u16,
        /// Only allow reversers of order exactly 2 (moves the identity to excess 2).
        #[arg(long)]
        nontrivial_reversers: bool,
    },
    /// Zero-excess conjugate with certificate, for one element or every class.
    Witness {
        /// Element to witness; every class representative when omitted.
        #[arg(long, value_name = "WORD", allow_hyphen_values = true)]
        element: Option<String>,
        /// Minimize by greedy descent instead of over the whole orbit.
        #[arg(long)]
        greedy: bool,
    },
    /// Conjugacy classes with their representatives and sizes.
    Classes,
    /// Run the self-check battery; exits 1 if any check fails.
    Verify {
        /// Random pairs per sampled check.
        #[arg(long, value_name = "N", default_value_t = coxinv_core::verify::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_name = "SEED", default_value_t = coxinv_core::verify::DEFAULT_SEED)]
        seed: u64,
        /// Use greedy minimization in the witness check.
        #[arg(long)]
        greedy: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}
