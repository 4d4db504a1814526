//! Run an experiment config through the harness and print its checks.
//!
//! `cargo run --example run_config -- configs/lemma4.conf`; without an
//! argument an inline config is used.

use apstrip::harness::{list_experiments, parse_config, run_experiment, write_outputs, OutputFormat};

const INLINE: &str = "\
# bump power inequality on a coarse grid
experiment = lemma4
p = 1, 1.5, 2, 3
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => INLINE.to_string(),
    };
    print!("{}", list_experiments());
    let cfg = parse_config(&text)?;
    let table = run_experiment(&cfg)?;
    for c in &table.checks {
        println!("{c}");
    }
    let dir = std::env::temp_dir().join("apstrip-example");
    for path in write_outputs(&table, &dir, OutputFormat::Both)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}
