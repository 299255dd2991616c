//! Check the topological properties of every facet subnetwork of the bundled networks.

use kuramoto_facets::cli::verify_subnetworks;
use kuramoto_facets::facets::facet_subnetworks;
use kuramoto_facets::network::parse_network;
use kuramoto_facets::polytope::{adjacency_polytope, enumerate_facets};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/networks");
    for name in ["edge", "triangle", "tree5", "cycle5", "chordal4", "wheel10"] {
        let net = parse_network(&std::fs::read_to_string(format!("{dir}/{name}.json"))?)?;
        let pc = adjacency_polytope(&net);
        let subs = facet_subnetworks(&enumerate_facets(&pc)?, &pc)?;
        let report = verify_subnetworks(&net, &subs)?;
        match report.first_violation {
            None => println!("{name}: {} subnetworks ok", report.facets),
            Some(v) => println!("{name}: violated {v}"),
        }
    }
    Ok(())
}
