//! Real equilibria of a weighted 4-oscillator network and their stability.
//!
//! Every complex solution is found first; the real ones sit on the unit torus.

use kuramoto_facets::homotopy::{solve_network, SolveOptions};
use kuramoto_facets::network::Network;
use kuramoto_facets::postprocess::torus_reflection;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let net = Network::from_real(
        4,
        &[(0, 1, 1.3), (1, 2, 0.7), (2, 3, 2.0), (0, 3, 0.4), (0, 2, 1.1)],
        &[-0.6, 0.2, 0.1, 0.3],
    )?;
    let set = solve_network(&net, &SolveOptions { seed: 5, ..SolveOptions::default() })?;
    println!("{}", set.summary());
    for s in set.solutions.iter().filter(|s| s.real) {
        let theta: Vec<String> = s.theta.as_ref().unwrap().iter().map(|t| format!("{t:+.4}")).collect();
        println!("theta = [{}]  {:?}", theta.join(", "), s.stability.unwrap());
    }

    // non-real solutions pair up under x -> 1 / conj(x)
    let points: Vec<_> = set.solutions.iter().map(|s| s.point()).collect();
    let paired = points.iter().all(|x| {
        let r = torus_reflection(x);
        points.iter().any(|y| y.iter().zip(&r).all(|(a, b)| (a - b).norm() < 1e-6))
    });
    println!("closed under torus reflection: {paired}");
    Ok(())
}
