//! Character tables by the Burnside–Dixon method: common eigenvectors of the
//! class matrices over a prime field, lifted to complex values through
//! eigenvalue multiplicities.

use num_complex::Complex64;

use super::character::{inner_raw, snap_int, Character, ORTHO_TOL};
use super::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::scalars::poly::modp::is_prime;

/// Groups above this order are refused.
pub const TABLE_ORDER_BOUND: usize = 5000;

/// Irreducible characters with class data.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub irreps: Vec<Character>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<i64> {
        self.irreps.iter().map(|c| c.degree().round() as i64).collect()
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    /// Multiplicity of each irreducible in `chi`.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<i64>> {
        let m = self.irreps.iter().map(|psi| super::character::inner(chi, psi)).collect::<Result<Vec<i64>>>()?;
        if m.iter().any(|&x| x < 0) {
            return Err(Error::NotIrreducible("negative multiplicity: not a character".into()));
        }
        Ok(m)
    }

    /// Index of the irreducible equal to `chi`, if any.
    pub fn index_of(&self, chi: &Character) -> Option<usize> {
        self.irreps.iter().position(|c| c.approx_eq(chi))
    }
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

/// Basis of the right nullspace of `m` (`rows × cols`) over `𝔽_p`.
fn nullspace_mod(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = mulm(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[row][f]) % p;
            }
            v
        })
        .collect()
}

fn choose_prime(exponent: u64, order: usize) -> u64 {
    let floor = 2.0 * (order as f64).sqrt();
    let mut p = exponent + 1;
    while !(is_prime(p) && p as f64 > floor) {
        p += exponent;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut f = 2;
    while f * f <= m {
        if m.is_multiple_of(f) {
            factors.push(f);
            while m.is_multiple_of(f) {
                m /= f;
            }
        }
        f += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| powmod(g, (p - 1) / q, p) != 1)).expect("prime field has a primitive root")
}

/// Computes the irreducible characters, ordered by degree and then by values
/// (largest real parts first), so the trivial character comes first.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let n = g.order();
    if n > TABLE_ORDER_BOUND {
        return Err(Error::SizeBound(format!("character table of a group of order {n} > {TABLE_ORDER_BOUND}")));
    }
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let mut class_of = vec![0usize; n];
    for (i, cls) in classes.iter().enumerate() {
        for &x in cls {
            class_of[x] = i;
        }
    }
    let e = g.exponent();
    let p = choose_prime(e, n);

    // a[j][i][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_i}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (l, cls) in classes.iter().enumerate() {
        let z = cls[0];
        for x in 0..n {
            let i = class_of[g.mul(g.inv(x), z)];
            a[class_of[x]][i][l] += 1;
        }
    }

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect()];
    for mj in a.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // Columns of `mb` are M_j b for b in the basis.
            let mb: Vec<Vec<u64>> =
                basis.iter().map(|b| (0..k).map(|i| (0..k).fold(0u64, |acc, l| (acc + mulm(mj[i][l] % p, b[l], p)) % p)).collect()).collect();
            let mut found = 0;
            for lam in 0..p {
                let rows: Vec<Vec<u64>> = (0..k).map(|i| basis.iter().zip(&mb).map(|(b, m)| (m[i] + p - mulm(lam, b[i], p)) % p).collect()).collect();
                let null = nullspace_mod(rows, basis.len(), p);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                let sub: Vec<Vec<u64>> =
                    null.iter().map(|y| (0..k).map(|i| basis.iter().zip(y).fold(0u64, |acc, (b, &c)| (acc + mulm(b[i], c, p)) % p)).collect()).collect();
                next.push(sub);
                if found == basis.len() {
                    break;
                }
            }
            if found != basis.len() {
                return Err(Error::SnapFailure("class matrices are not simultaneously diagonalizable mod p".into()));
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::SnapFailure(format!("found {} eigenvectors for {k} classes", spaces.len())));
    }

    let inv_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c[0])]).collect();
    let g_root = primitive_root(p);
    let z = powmod(g_root, (p - 1) / e, p);
    let e_inv = inv_mod(e % p, p);
    let zeta: Vec<Complex64> = (0..e).map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / e as f64)).collect();
    let powers: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut out = Vec::with_capacity(e as usize);
            let mut x = 0;
            for _ in 0..e {
                out.push(class_of[x]);
                x = g.mul(x, c[0]);
            }
            out
        })
        .collect();

    let mut irreps = Vec::with_capacity(k);
    for space in spaces {
        let w = &space[0];
        let w0 = inv_mod(w[0], p);
        let omega: Vec<u64> = w.iter().map(|&x| mulm(x, w0, p)).collect();
        let s = (0..k).fold(0u64, |acc, j| {
            let term = mulm(mulm(omega[j], omega[inv_class[j]], p), inv_mod(classes[j].len() as u64 % p, p), p);
            (acc + term) % p
        });
        let d2 = mulm(n as u64 % p, inv_mod(s, p), p);
        let d = (1..=((n as f64).sqrt() as u64 + 1)).find(|&d| d * d % p == d2).ok_or_else(|| Error::SnapFailure("no degree matches".into()))?;
        let chi_p: Vec<u64> = (0..k).map(|j| mulm(mulm(d, omega[j], p), inv_mod(classes[j].len() as u64 % p, p), p)).collect();
        let mut vals = Vec::with_capacity(k);
        for pw in &powers {
            let mut v = Complex64::new(0.0, 0.0);
            for kk in 0..e {
                let mut acc = 0u64;
                for l in 0..e {
                    let zpow = powmod(z, (e - (kk * l) % e) % e, p);
                    acc = (acc + mulm(chi_p[pw[l as usize]], zpow, p)) % p;
                }
                let m = mulm(acc, e_inv, p);
                if m > d {
                    return Err(Error::SnapFailure(format!("eigenvalue multiplicity {m} exceeds degree {d}")));
                }
                v += zeta[kk as usize] * m as f64;
            }
            vals.push(v);
        }
        irreps.push(Character::from_class_values(g, &classes, &vals));
    }

    let key = |c: &Character, classes: &[Vec<usize>]| -> Vec<(i64, i64)> {
        classes
            .iter()
            .map(|cl| {
                let v = c.values[cl[0]];
                (-(v.re * 1e6).round() as i64, -(v.im * 1e6).round() as i64)
            })
            .collect()
    };
    irreps.sort_by(|x, y| {
        let (dx, dy) = (x.degree().round() as i64, y.degree().round() as i64);
        dx.cmp(&dy).then_with(|| key(x, &classes).cmp(&key(y, &classes)))
    });

    let total: i64 = irreps.iter().map(|c| (c.degree().round() as i64).pow(2)).sum();
    if total != n as i64 {
        return Err(Error::SnapFailure(format!("sum of squared degrees {total} != {n}")));
    }
    for (i, x) in irreps.iter().enumerate() {
        for (j, y) in irreps.iter().enumerate() {
            let ip = inner_raw(x, y);
            let target = if i == j { 1.0 } else { 0.0 };
            if (ip.re - target).abs() > ORTHO_TOL || ip.im.abs() > ORTHO_TOL {
                return Err(Error::SnapFailure(format!("row orthogonality fails for ({i}, {j}): {ip}")));
            }
        }
        snap_int(x.values[0], "degree")?;
    }
    Ok(CharacterTable { classes, class_of, irreps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_over_small_prime() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let null = nullspace_mod(m, 3, 7);
        assert_eq!(null.len(), 2);
        for v in null {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }

    #[test]
    fn prime_choice_respects_exponent_and_bound() {
        let p = choose_prime(6, 24);
        assert_eq!(p % 6, 1);
        assert!(p as f64 > 2.0 * 24f64.sqrt());
        assert_eq!(primitive_root(7), 3);
    }
}
