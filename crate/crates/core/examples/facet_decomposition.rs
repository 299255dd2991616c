//! Enumerate the facet subnetworks of a network file.
//!
//! ```text
//! cargo run --release --example facet_decomposition -- crates/core/networks/chordal4.json
//! ```

use std::collections::BTreeMap;

use kuramoto_facets::facets::facet_subnetworks;
use kuramoto_facets::network::parse_network;
use kuramoto_facets::polytope::{adjacency_polytope, enumerate_facets};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "crates/core/networks/triangle.json".into());
    let net = parse_network(&std::fs::read_to_string(&path)?)?;
    let pc = adjacency_polytope(&net);
    let facets = enumerate_facets(&pc)?;
    let subs = facet_subnetworks(&facets, &pc)?;

    let mut by_size: BTreeMap<usize, (usize, u64)> = BTreeMap::new();
    for s in &subs {
        let entry = by_size.entry(s.n_edges()).or_default();
        entry.0 += 1;
        entry.1 = s.root_count;
    }
    println!("{}: {} facets, {} primitive", net.name.as_deref().unwrap_or(&path), subs.len(), subs.iter().filter(|s| s.primitive).count());
    println!("edges  facets  root count");
    for (size, (count, roots)) in by_size {
        println!("{size:>5}  {count:>6}  {roots:>10}");
    }
    if subs.len() <= 12 {
        for s in &subs {
            println!("levels {:?}: {:?}", s.levels.iter().map(|l| l.to_integer()).collect::<Vec<_>>(), s.edges);
        }
    }
    Ok(())
}
