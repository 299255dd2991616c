//! Root-count bound of each bundled network, checked against the direct
//! volume of the adjacency polytope.

use kuramoto_facets::network::parse_network;
use kuramoto_facets::polytope::{adjacency_polytope, direct_normalized_volume, enumerate_facets, normalized_volume_pyramid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/networks");
    println!("{:<10} {:>7} {:>9} {:>7}", "network", "facets", "pyramids", "direct");
    for name in ["edge", "triangle", "tree5", "cycle5", "chordal4", "wheel10"] {
        let net = parse_network(&std::fs::read_to_string(format!("{dir}/{name}.json"))?)?;
        let pc = adjacency_polytope(&net);
        let facets = enumerate_facets(&pc)?;
        let mut bound = 0;
        for f in &facets {
            bound += normalized_volume_pyramid(f, &pc)?;
        }
        println!("{name:<10} {:>7} {bound:>9} {:>7}", facets.len(), direct_normalized_volume(&pc)?);
    }
    Ok(())
}
