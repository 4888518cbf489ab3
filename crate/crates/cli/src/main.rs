//! `tracecurve`: point counts of y^d = a·x·Tr(x) + b over F_{q^n}.

mod commands;
mod literal;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tracecurve_core::DEFAULT_SIZE_CAP;

use literal::ElementLiteral;

#[derive(Parser, Debug)]
#[command(name = "tracecurve", version, about = "Point counts of y^d = a*x*Tr(x) + b over F_{q^n}")]
pub struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest field size that gets log/trace tables
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    pub cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    #[arg(long)]
    pub n: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Gauss,
    D2,
    B0,
    Bnz,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count affine points of one curve
    Count {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: u64,
        /// g^k, 0, 1, -1 or comma-separated coefficients
        #[arg(long, allow_hyphen_values = true)]
        a: ElementLiteral,
        #[arg(long, allow_hyphen_values = true)]
        b: ElementLiteral,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Grid of counts over (q, n) as CSV
    Table {
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        a: ElementLiteral,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        b: ElementLiteral,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,9,11,25")]
        q_list: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6")]
        n_list: Vec<u32>,
        #[arg(long, default_value_t = 2)]
        d: u64,
    },
    /// Random cases checked against enumeration
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 12)]
        max_d: u64,
        #[arg(long, default_value_t = 50)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Elements with both x and Tr(x) square (odd n)
    QrCount {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Modulus and generator of the field model
    FieldInfo {
        #[command(flatten)]
        field: FieldArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(fail) => {
            if let Some(out) = &fail.output {
                print!("{out}");
            }
            eprintln!("error: {}", fail.message);
            ExitCode::from(fail.code)
        }
    }
}
