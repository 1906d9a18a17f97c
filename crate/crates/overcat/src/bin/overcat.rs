use clap::Parser;

use overcat::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
