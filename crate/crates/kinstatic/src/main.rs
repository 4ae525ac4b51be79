use clap::Parser;
use kinstatic::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match execute(&cli) {
        Ok(outcome) => {
            if let Some(path) = out_path {
                if let Err(e) = std::fs::write(&path, &outcome.stdout) {
                    eprintln!("error: writing {}: {e}", path.display());
                    std::process::exit(2);
                }
            } else {
                print!("{}", outcome.stdout);
            }
            std::process::exit(outcome.exit_code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
