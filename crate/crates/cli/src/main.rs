use clap::Parser;
use pauli_pse_cli::{main_with_args, Args};

fn main() {
    std::process::exit(main_with_args(Args::parse()));
}
