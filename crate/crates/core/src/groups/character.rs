use num_complex::Complex64;

use super::group::FiniteGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Values within this distance of an integer snap to it.
pub const SNAP_TOL: f64 = 1e-6;
/// Orthogonality tolerance before snapping.
pub const ORTHO_TOL: f64 = 1e-8;

/// Class function stored per element.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub values: Vec<Complex64>,
}

pub fn snap_int(z: Complex64, what: &str) -> Result<i64> {
    let r = z.re.round();
    if (z.re - r).abs() > SNAP_TOL || z.im.abs() > SNAP_TOL {
        return Err(Error::SnapFailure(format!("{what} = {z} is not within {SNAP_TOL} of an integer")));
    }
    Ok(r as i64)
}

impl Character {
    pub fn trivial(order: usize) -> Self {
        Character { values: vec![Complex64::new(1.0, 0.0); order] }
    }

    pub fn zero(order: usize) -> Self {
        Character { values: vec![Complex64::new(0.0, 0.0); order] }
    }

    /// The regular character.
    pub fn regular(order: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); order];
        v[0] = Complex64::new(order as f64, 0.0);
        Character { values: v }
    }

    pub fn from_class_values(g: &FiniteGroup, classes: &[Vec<usize>], vals: &[Complex64]) -> Self {
        let mut values = vec![Complex64::new(0.0, 0.0); g.order()];
        for (cls, v) in classes.iter().zip(vals) {
            for &x in cls {
                values[x] = *v;
            }
        }
        Character { values }
    }

    pub fn degree(&self) -> f64 {
        self.values[0].re
    }

    pub fn degree_int(&self) -> Result<i64> {
        snap_int(self.values[0], "degree")
    }

    pub fn add(&self, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: f64) -> Character {
        Character { values: self.values.iter().map(|a| a * k).collect() }
    }

    /// Pointwise product (tensor product of representations).
    pub fn tensor(&self, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }

    pub fn conj(&self) -> Character {
        Character { values: self.values.iter().map(Complex64::conj).collect() }
    }

    pub fn approx_eq(&self, other: &Character) -> bool {
        self.values.len() == other.values.len() && self.values.iter().zip(&other.values).all(|(a, b)| (a - b).norm() < SNAP_TOL)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|a| a.norm() < SNAP_TOL)
    }

    /// Kernel `{g : χ(g) = χ(1)}`.
    pub fn kernel(&self) -> Vec<usize> {
        let d = self.values[0];
        (0..self.values.len()).filter(|&g| (self.values[g] - d).norm() < SNAP_TOL).collect()
    }

    pub fn is_class_function(&self, g: &FiniteGroup) -> bool {
        let gens: Vec<usize> = if g.generators().is_empty() { (0..g.order()).collect() } else { g.generators().to_vec() };
        (0..g.order()).all(|a| gens.iter().all(|&h| (self.values[g.conj(h, a)] - self.values[a]).norm() < SNAP_TOL))
    }
}

/// `(1/|G|) Σ χ(g) conj(ψ(g))`, unsnapped.
pub fn inner_raw(a: &Character, b: &Character) -> Complex64 {
    let n = a.values.len() as f64;
    a.values.iter().zip(&b.values).map(|(x, y)| x * y.conj()).sum::<Complex64>() / n
}

pub fn inner(a: &Character, b: &Character) -> Result<i64> {
    if a.values.len() != b.values.len() {
        return Err(Error::NotSubgroup("inner product of characters of different groups".into()));
    }
    snap_int(inner_raw(a, b), "inner product")
}

pub fn restrict(chi: &Character, sub: &Subgroup) -> Character {
    Character { values: sub.embed.iter().map(|&e| chi.values[e]).collect() }
}

/// `Ind_H^G χ(g) = (|G| / (|H||C_g|)) Σ_{h ∈ H ∩ C_g} χ(h)`.
pub fn induce(chi: &Character, sub: &Subgroup, parent: &FiniteGroup, classes: &[Vec<usize>]) -> Result<Character> {
    if chi.values.len() != sub.order() || sub.embed.last().is_some_and(|&e| e >= parent.order()) {
        return Err(Error::NotSubgroup("character does not live on this subgroup".into()));
    }
    let local = sub.local_index();
    let mut vals = Vec::with_capacity(classes.len());
    for cls in classes {
        let s: Complex64 = cls.iter().filter_map(|x| local.get(x)).map(|&i| chi.values[i]).sum();
        vals.push(s * (parent.order() as f64) / (sub.order() as f64 * cls.len() as f64));
    }
    Ok(Character::from_class_values(parent, classes, &vals))
}

/// Pulls a character of `G/Z` back along the projection.
pub fn inflate(chi: &Character, projection: &[usize]) -> Character {
    Character { values: projection.iter().map(|&q| chi.values[q]).collect() }
}
