//! Track every facet degeneration path of a network with random generic data.
//!
//! ```text
//! cargo run --release --example solve_network -- crates/core/networks/cycle5.json 7
//! ```

use std::time::Instant;

use kuramoto_facets::homotopy::{solve_network, SolveOptions};
use kuramoto_facets::network::parse_network;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "crates/core/networks/cycle5.json".into());
    let seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let net = parse_network(&std::fs::read_to_string(&path)?)?;

    let clock = Instant::now();
    let opts = SolveOptions { seed, generic: true, workers: std::thread::available_parallelism()?.get(), ..SolveOptions::default() };
    let set = solve_network(&net, &opts)?;
    println!("{}", set.summary());
    let worst = set.solutions.iter().map(|s| s.residual).fold(0.0, f64::max);
    let steps: usize = set.tracked.iter().map(|t| t.result.steps).sum();
    println!("largest residual {worst:.2e}, {steps} tracker steps, {:.2?}", clock.elapsed());
    Ok(())
}
