//! Square binomial systems `x^{v_k} = b_k`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `x^{V_k} = b_k`, `V_k` the `k`-th column of the exponent matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomialSystem {
    /// `columns[k]` is the exponent vector of equation `k`.
    pub columns: Vec<Vec<i64>>,
    pub rhs: Vec<Complex64>,
}

impl BinomialSystem {
    pub fn new(columns: Vec<Vec<i64>>, rhs: Vec<Complex64>) -> Result<Self> {
        let n = rhs.len();
        if columns.len() != n {
            return Err(Error::Dimension { expected: n, got: columns.len() });
        }
        if let Some(c) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::Dimension { expected: n, got: c.len() });
        }
        if let Some(k) = rhs.iter().position(|b| b.norm() == 0.0) {
            return Err(Error::ZeroCoordinate(k + 1));
        }
        Ok(Self { columns, rhs })
    }

    pub fn dim(&self) -> usize {
        self.rhs.len()
    }

    /// `max_k |x^{V_k} - b_k| / |b_k|`.
    pub fn relative_residual(&self, x: &[Complex64]) -> f64 {
        self.columns
            .iter()
            .zip(&self.rhs)
            .map(|(v, b)| {
                let m: Complex64 = v.iter().zip(x).map(|(&e, z)| z.powi(e as i32)).product();
                ((m - b) / b).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// Lower-triangular `L = P U` for the matrix `P` whose rows are the exponent
/// vectors, with `U` unimodular; returns `(L, U)`.
fn triangularize(rows: &[Vec<i64>]) -> Result<(Vec<Vec<i128>>, Vec<Vec<i128>>)> {
    let n = rows.len();
    let mut l: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    // column op: col[dst] -= q * col[src]
    let axpy = |m: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| -> Result<()> {
        for row in m.iter_mut() {
            row[dst] = q.checked_mul(row[src]).and_then(|t| row[dst].checked_sub(t)).ok_or(Error::Overflow)?;
        }
        Ok(())
    };
    let swap = |m: &mut Vec<Vec<i128>>, a: usize, b: usize| m.iter_mut().for_each(|row| row.swap(a, b));
    for r in 0..n {
        loop {
            let pivot = (r..n).filter(|&c| l[r][c] != 0).min_by_key(|&c| l[r][c].abs());
            let Some(p) = pivot else { return Err(Error::SingularExponents) };
            swap(&mut l, r, p);
            swap(&mut u, r, p);
            let mut done = true;
            for c in r + 1..n {
                if l[r][c] != 0 {
                    let q = l[r][c].div_euclid(l[r][r]);
                    axpy(&mut l, c, r, q)?;
                    axpy(&mut u, c, r, q)?;
                    done &= l[r][c] == 0;
                }
            }
            if done {
                break;
            }
        }
    }
    Ok((l, u))
}

/// All `|det V|` torus solutions, ordered lexicographically by branch index.
pub fn solve_binomial(bs: &BinomialSystem) -> Result<Vec<Vec<Complex64>>> {
    let n = bs.dim();
    let (l, u) = triangularize(&bs.columns)?;
    let log_b: Vec<Complex64> = bs.rhs.iter().map(|b| b.ln()).collect();
    let degrees: Vec<usize> = (0..n).map(|r| l[r][r].unsigned_abs() as usize).collect();
    let total: usize = degrees.iter().product();
    let mut out = Vec::with_capacity(total);
    let mut branch = vec![0usize; n];
    for _ in 0..total {
        let mut log_y = vec![Complex64::new(0.0, 0.0); n];
        for r in 0..n {
            let mut acc = log_b[r] + Complex64::new(0.0, 2.0 * PI * branch[r] as f64);
            for c in 0..r {
                acc -= log_y[c] * l[r][c] as f64;
            }
            log_y[r] = acc / l[r][r] as f64;
        }
        let x = (0..n)
            .map(|i| (0..n).map(|c| log_y[c] * u[i][c] as f64).sum::<Complex64>().exp())
            .collect();
        out.push(x);
        for r in (0..n).rev() {
            branch[r] += 1;
            if branch[r] < degrees[r] {
                break;
            }
            branch[r] = 0;
        }
    }
    Ok(out)
}
