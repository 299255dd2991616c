//! All torus solutions of `x1^2 x2 = 3i`, `x1 x2^-2 = -1`.

use kuramoto_facets::solver::{solve_binomial, BinomialSystem};
use kuramoto_facets::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bs = BinomialSystem::new(vec![vec![2, 1], vec![1, -2]], vec![Complex64::new(0.0, 3.0), Complex64::new(-1.0, 0.0)])?;
    let sols = solve_binomial(&bs)?;
    println!("{} solutions (|det| = 5)", sols.len());
    for x in &sols {
        println!("x1 = {:.6}, x2 = {:.6}, residual {:.1e}", x[0], x[1], bs.relative_residual(x));
    }
    Ok(())
}
