use clap::Parser;

fn main() {
    let cli = opaque_bounds::cli::Cli::parse();
    std::process::exit(opaque_bounds::cli::run(cli));
}
