//! The full reproduction report, at a reduced size by default. Pass
//! `--full` for the default configuration used by `minksum verify-paper`.

use minksum::harness::{all_passed, render_table, verify_paper, RunConfig};

fn main() -> minksum::Result<()> {
    let config = if std::env::args().any(|a| a == "--full") {
        RunConfig::default()
    } else {
        RunConfig { max_k: 2, random_seed: 1, sample_count: 5, dim_cap: 5 }
    };
    let checks = verify_paper(&config)?;
    print!("{}", render_table(&config, &checks, false));
    println!("all passed: {}", all_passed(&checks));
    Ok(())
}
