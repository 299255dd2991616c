//! Exact integer linear algebra: fraction-free determinants, ranks and
//! hyperplanes through lattice points.

use crate::error::{Error, Result};

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(rows: &[Vec<i64>]) -> Result<i128> {
    let n = rows.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), n);
            r.iter().map(|&v| v as i128).collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = sub(mul(a[i][j], a[k][k])?, mul(a[i][k], a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Rank of an integer matrix (rows of equal length).
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c] != 0 {
                let (f, g) = (a[i][c], a[r][c]);
                for j in c..cols {
                    a[i][j] = sub(mul(a[i][j], g)?, mul(a[r][j], f)?)?;
                }
                let content = a[i].iter().fold(0i128, |acc, &v| gcd(acc, v));
                if content > 1 {
                    a[i].iter_mut().for_each(|v| *v /= content);
                }
            }
        }
        r += 1;
    }
    Ok(r)
}

/// Rank of the affine hull of `points` (number of independent differences).
pub fn affine_rank(points: &[&[i64]]) -> Result<usize> {
    match points.split_first() {
        None => Ok(0),
        Some((first, rest)) => {
            let diffs: Vec<Vec<i64>> = rest.iter().map(|p| p.iter().zip(*first).map(|(a, b)| a - b).collect()).collect();
            rank(&diffs)
        }
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Primitive normal `g` and offset `h = <p, g>` of the affine hyperplane
/// through `d` points of `Z^d`; `None` when the points are affinely dependent.
/// The sign of `g` is unspecified.
pub fn hyperplane(points: &[&[i64]]) -> Result<Option<(Vec<i64>, i64)>> {
    let d = points[0].len();
    debug_assert_eq!(points.len(), d);
    let diffs: Vec<Vec<i64>> =
        points[1..].iter().map(|p| p.iter().zip(points[0]).map(|(a, b)| a - b).collect()).collect();
    let mut normal = Vec::with_capacity(d);
    for col in 0..d {
        let minor: Vec<Vec<i64>> = diffs
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, &v)| v).collect())
            .collect();
        let m = determinant(&minor)?;
        normal.push(if col % 2 == 0 { m } else { -m });
    }
    let content = normal.iter().fold(0i128, |acc, &v| gcd(acc, v));
    if content == 0 {
        return Ok(None);
    }
    let normal: Vec<i64> = normal
        .into_iter()
        .map(|v| i64::try_from(v / content).map_err(|_| Error::Overflow))
        .collect::<Result<_>>()?;
    let h = dot(points[0], &normal)?;
    Ok(Some((normal, h)))
}

pub fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (&x, &y)| {
        x.checked_mul(y).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
    })
}
