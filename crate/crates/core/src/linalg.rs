//! Small dense complex linear algebra used by the solvers and the tracker.

use num_complex::Complex64;

/// Row-major square complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).take(self.n).collect()
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * x[j]).sum())
            .collect()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// LU factorisation with partial pivoting; `None` when a pivot vanishes.
    pub fn lu(&self) -> Option<Lu> {
        Lu::factor(self.clone())
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

#[derive(Clone, Debug)]
pub struct Lu {
    lu: CMatrix,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    fn factor(mut a: CMatrix) -> Option<Self> {
        let n = a.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for col in 0..n {
            let (piv, piv_abs) = (col..n)
                .map(|r| (r, a[(r, col)].norm()))
                .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if !(piv_abs > 0.0) || !piv_abs.is_finite() {
                return None;
            }
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                }
                perm.swap(piv, col);
                sign = -sign;
            }
            let d = a[(col, col)];
            for r in col + 1..n {
                let f = a[(r, col)] / d;
                a[(r, col)] = f;
                if f != Complex64::new(0.0, 0.0) {
                    for j in col + 1..n {
                        let v = a[(col, j)];
                        a[(r, j)] -= f * v;
                    }
                }
            }
        }
        Some(Self { lu: a, perm, sign })
    }

    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.lu.n;
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let v = x[j];
                x[i] -= self.lu[(i, j)] * v;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let v = x[j];
                x[i] -= self.lu[(i, j)] * v;
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }

    pub fn det(&self) -> Complex64 {
        (0..self.lu.n).map(|i| self.lu[(i, i)]).product::<Complex64>() * self.sign
    }

    /// Ratio of largest to smallest pivot modulus, a cheap conditioning proxy.
    pub fn pivot_ratio(&self) -> f64 {
        let mods: Vec<f64> = (0..self.lu.n).map(|i| self.lu[(i, i)].norm()).collect();
        let max = mods.iter().cloned().fold(0.0, f64::max);
        let min = mods.iter().cloned().fold(f64::INFINITY, f64::min);
        max / min
    }

    pub fn inverse(&self) -> CMatrix {
        let n = self.lu.n;
        let mut inv = CMatrix::zeros(n);
        for j in 0..n {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[j] = Complex64::new(1.0, 0.0);
            let col = self.solve(&e);
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        inv
    }
}

/// Max-norm of a complex vector; non-finite entries count as infinite.
pub fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| if z.is_finite() { z.norm() } else { f64::INFINITY }).fold(0.0, f64::max)
}
