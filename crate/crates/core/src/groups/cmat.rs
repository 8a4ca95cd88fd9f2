//! Small dense complex matrices.

use num_complex::Complex64;

use super::cyclotomic::parse_cyclotomic;
use crate::error::{Error, Result};

pub type CMat = Vec<Vec<Complex64>>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn zeros(r: usize, c: usize) -> CMat {
    vec![vec![ZERO; c]; r]
}

pub fn identity(n: usize) -> CMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { ONE } else { ZERO }).collect()).collect()
}

pub fn mul(a: &CMat, b: &CMat) -> CMat {
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

pub fn add(a: &CMat, b: &CMat) -> CMat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn scale(a: &CMat, k: Complex64) -> CMat {
    a.iter().map(|r| r.iter().map(|x| x * k).collect()).collect()
}

pub fn trace(a: &CMat) -> Complex64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

pub fn conj_transpose(a: &CMat) -> CMat {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].conj()).collect()).collect()
}

pub fn approx_eq(a: &CMat, b: &CMat, tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(r, s)| r.len() == s.len() && r.iter().zip(s).all(|(x, y)| (x - y).norm() < tol))
}

/// Determinant by partial-pivot elimination.
pub fn det(a: &CMat) -> Complex64 {
    let n = a.len();
    let mut m = a.clone();
    let mut d = ONE;
    for c in 0..n {
        let Some(p) = (c..n).max_by(|&i, &j| m[i][c].norm().total_cmp(&m[j][c].norm())) else { return ZERO };
        if m[p][c].norm() < 1e-14 {
            return ZERO;
        }
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c];
        for i in c + 1..n {
            let f = m[i][c] / m[c][c];
            for j in c..n {
                let sub = f * m[c][j];
                m[i][j] -= sub;
            }
        }
    }
    d
}

pub fn inverse(a: &CMat) -> Result<CMat> {
    let n = a.len();
    let mut m: CMat = a.iter().zip(identity(n)).map(|(r, e)| r.iter().copied().chain(e).collect()).collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| m[i][c].norm().total_cmp(&m[j][c].norm())).ok_or(Error::DivisionByZero)?;
        if m[p][c].norm() < 1e-12 {
            return Err(Error::DivisionByZero);
        }
        m.swap(p, c);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for i in 0..n {
            if i != c {
                let f = m[i][c];
                if f.norm() > 0.0 {
                    for j in 0..2 * n {
                        let sub = f * m[c][j];
                        m[i][j] -= sub;
                    }
                }
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Right nullspace by reduced row echelon form; entries below `tol` count as zero.
pub fn nullspace(a: &CMat, cols: usize, tol: f64) -> Vec<Vec<Complex64>> {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let p = (r..m.len()).max_by(|&i, &j| m[i][c].norm().total_cmp(&m[j][c].norm())).expect("nonempty");
        if m[p][c].norm() < tol {
            continue;
        }
        m.swap(r, p);
        let piv = m[r][c];
        for x in m[r].iter_mut() {
            *x /= piv;
        }
        for i in 0..m.len() {
            if i != r {
                let f = m[i][c];
                if f.norm() > 0.0 {
                    for j in 0..cols {
                        let sub = f * m[r][j];
                        m[i][j] -= sub;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![ZERO; cols];
            v[f] = ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f];
            }
            v
        })
        .collect()
}

/// Parses rows of cyclotomic strings.
pub fn from_strings(rows: &[Vec<String>]) -> Result<CMat> {
    rows.iter().map(|r| r.iter().map(|s| parse_cyclotomic(s)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_nullspace() {
        let a = vec![vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)], vec![Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)]];
        let inv = inverse(&a).unwrap();
        assert!(approx_eq(&mul(&a, &inv), &identity(2), 1e-12));
        assert!((det(&a) - Complex64::new(1.0, -2.0)).norm() < 1e-12);
        let sing = vec![vec![ONE, ONE], vec![ONE, ONE]];
        let n = nullspace(&sing, 2, 1e-9);
        assert_eq!(n.len(), 1);
        assert!((n[0][0] + n[0][1]).norm() < 1e-12);
    }
}
