mod cli;
mod graph_spec;
mod records;

fn main() {
    std::process::exit(cli::run());
}
