//! Write the chordal-4 facet subnetworks as Graphviz digraphs.
//!
//! ```text
//! cargo run --example dot_export -- /tmp/chordal4
//! dot -Tsvg /tmp/chordal4/facet_0.dot > facet_0.svg
//! ```

use kuramoto_facets::facets::facet_subnetworks;
use kuramoto_facets::network::Network;
use kuramoto_facets::polytope::{adjacency_polytope, enumerate_facets};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| std::env::temp_dir().join("chordal4").display().to_string());
    std::fs::create_dir_all(&out)?;
    let net = Network::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])?;
    let pc = adjacency_polytope(&net);
    for sub in facet_subnetworks(&enumerate_facets(&pc)?, &pc)? {
        let path = format!("{out}/facet_{}.dot", sub.facet_id.unwrap());
        std::fs::write(&path, sub.to_dot())?;
        println!("{path}: {} edges, root count {}", sub.n_edges(), sub.root_count);
    }
    Ok(())
}
