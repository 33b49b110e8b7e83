//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cherednik",
    version,
    about = "Supports of simple modules in cyclotomic category O"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

/// `κ` with either charges or, for `κ = 0`, rank-one values.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// `κ` as an integer, `p/q`, `generic-neg` or `generic-pos`.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: String,

    /// Charges `s_1,…,s_ℓ`.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,

    /// Rank-one values `h_1,…,h_ℓ`, used when `κ = 0`.
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct LabelArg {
    /// Multipartition, e.g. `2,1|-|1`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    E,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Km,
    Heis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Axioms,
    Counting,
    Wilcox,
    Example,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Support `(p, q)` of one simple module.
    Support {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        label: LabelArg,
    },
    /// Supports of every label of size `n`.
    Table {
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
    },
    /// Labels of size `n` with finite-dimensional simples.
    FiniteDims {
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long)]
        n: usize,
    },
    /// The `ŝl_e` crystal.
    #[command(subcommand)]
    Crystal(CrystalCommand),
    /// The Heisenberg crystal.
    #[command(subcommand)]
    Heis(HeisCommand),
    /// Wall-crossing bijections.
    #[command(subcommand)]
    Wc(WcCommand),
    /// Essential walls for labels of size at most `n`.
    Walls {
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive verification suites.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Comma-separated `key=value` pairs, e.g. `e=2,n=8`.
        #[arg(long, default_value = "")]
        bounds: String,
        #[command(flatten)]
        param: OptionalParamArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct OptionalParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum CrystalCommand {
    /// Apply `ẽ_z` or `f̃_z`.
    Apply {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        label: LabelArg,
        #[arg(long, value_enum)]
        op: Op,
        /// Residue, read as a content.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Crystal graph in DOT, edges in the `f̃` direction.
    Graph {
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "km")]
        which: Which,
    },
    /// Depth, singular head and ascent word.
    Depth {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        label: LabelArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeisCommand {
    /// Apply `ẽ^∞_i` or `f̃^∞_i`.
    Apply {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        label: LabelArg,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// Depth `q` in the Heisenberg crystal.
    Q {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        label: LabelArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum WcCommand {
    /// Tabulate `wc_m` on bipartitions of size `n`.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        n: usize,
        /// Side of the pair crystal the bijection is read from.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        side: u8,
    },
    /// Level-one wall-crossing.
    Typea {
        #[arg(long)]
        e: usize,
        #[command(flatten)]
        label: LabelArg,
    },
    /// Transport a label into the chamber where component `J` is asymptotic.
    Transport {
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        label: LabelArg,
        /// 1-based component.
        #[arg(long)]
        to_asymptotic: usize,
    },
}
