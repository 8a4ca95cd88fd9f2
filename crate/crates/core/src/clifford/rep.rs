use std::collections::VecDeque;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::groups::cmat::{self, CMat};
use crate::groups::{Character, FiniteGroup};

const HOM_TOL: f64 = 1e-9;

/// Matrix representation with one matrix per group element.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub dim: usize,
    pub mats: Vec<CMat>,
}

impl MatrixRep {
    /// Extends matrices on generators to the whole group, checking
    /// `ρ(x g) = ρ(x) ρ(g)` for every element `x` and generator `g`.
    pub fn from_generators(group: &FiniteGroup, gens: &[usize], images: &[CMat]) -> Result<Self> {
        if gens.len() != images.len() {
            return Err(Error::ShapeMismatch(format!("{} generators, {} matrices", gens.len(), images.len())));
        }
        let dim = images.first().map_or(1, Vec::len);
        if images.iter().any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim)) {
            return Err(Error::ShapeMismatch("generator matrices must be square of one size".into()));
        }
        let mut mats: Vec<Option<CMat>> = vec![None; group.order()];
        mats[0] = Some(cmat::identity(dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mx = mats[x].clone().expect("queued elements are assigned");
            for (&g, img) in gens.iter().zip(images) {
                let y = group.mul(x, g);
                let my = cmat::mul(&mx, img);
                match &mats[y] {
                    Some(existing) if !cmat::approx_eq(existing, &my, HOM_TOL) => {
                        return Err(Error::NotHomomorphism(format!("relation fails at element {y} of {}", group.name())));
                    }
                    Some(_) => {}
                    None => {
                        mats[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let mats =
            mats.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| Error::NotHomomorphism(format!("generators do not generate {}", group.name())))?;
        Ok(MatrixRep { dim, mats })
    }

    /// One-dimensional representation from a linear character.
    pub fn linear(group: &FiniteGroup, chi: &Character) -> Result<Self> {
        if chi.values.len() != group.order() {
            return Err(Error::ShapeMismatch("character length differs from the group order".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if (chi.values[group.mul(a, b)] - chi.values[a] * chi.values[b]).norm() > HOM_TOL {
                    return Err(Error::NotHomomorphism(format!("character is not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(MatrixRep { dim: 1, mats: chi.values.iter().map(|&v| vec![vec![v]]).collect() })
    }

    pub fn character(&self) -> Character {
        Character { values: self.mats.iter().map(cmat::trace).collect() }
    }

    pub fn trace_of(&self, x: usize) -> Complex64 {
        cmat::trace(&self.mats[x])
    }
}
