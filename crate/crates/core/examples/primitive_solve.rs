//! Solve every primitive facet subsystem of the tree-5 network in closed form.

use kuramoto_facets::facets::{facet_subnetworks, facet_subsystem};
use kuramoto_facets::network::{build_algebraic_system, build_unmixed_system, random_mixing, residual_algebraic, Network};
use kuramoto_facets::polytope::{adjacency_polytope, enumerate_facets};
use kuramoto_facets::solver::solve_primitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let net = Network::unit(5, &[(1, 0), (2, 1), (1, 3), (4, 0)])?.generic(&mut rng);
    let sys = build_unmixed_system(&build_algebraic_system(&net), random_mixing(net.dim(), &mut rng))?;
    let pc = adjacency_polytope(&net);
    for sub in facet_subnetworks(&enumerate_facets(&pc)?, &pc)? {
        let fs = facet_subsystem(&sys, &sub)?;
        let x = solve_primitive(&fs)?;
        let moduli: Vec<String> = x.iter().map(|z| format!("{:.3}", z.norm())).collect();
        println!("{:?}  |x| = [{}]  residual {:.1e}", sub.edges, moduli.join(", "), residual_algebraic(&fs, &x)?);
    }
    Ok(())
}
