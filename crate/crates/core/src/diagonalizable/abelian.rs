use std::fmt;

use super::snf::{imat_mul, imat_vec, in_column_lattice, integer_kernel, smith_normal_form, IMatrix};
use crate::error::{Error, Result};

/// `ℤ^gens / R ℤ^nrel`, with `R` a `gens × nrel` integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGenAbGroup {
    gens: usize,
    relations: IMatrix,
    nrel: usize,
    torsion: Vec<i128>,
    free_rank: usize,
}

impl FinGenAbGroup {
    pub fn from_relations(gens: usize, relations: IMatrix) -> Result<Self> {
        if relations.len() != gens {
            return Err(Error::IncompatiblePresentation(format!("{} relation rows for {gens} generators", relations.len())));
        }
        let nrel = relations.first().map_or(0, Vec::len);
        if relations.iter().any(|r| r.len() != nrel) {
            return Err(Error::IncompatiblePresentation("ragged relation matrix".into()));
        }
        let s = smith_normal_form(&relations, gens, nrel);
        let diag = s.diagonal();
        let torsion = diag.iter().copied().filter(|&d| d > 1).collect();
        let free_rank = gens - s.rank();
        Ok(FinGenAbGroup { gens, relations, nrel, torsion, free_rank })
    }

    pub fn free(rank: usize) -> Self {
        Self::from_relations(rank, vec![Vec::new(); rank]).expect("free presentation")
    }

    /// `⊕ ℤ/nᵢ` (an entry `0` gives a free summand).
    pub fn cyclic_sum(orders: &[i128]) -> Self {
        let n = orders.len();
        let rel = (0..n).map(|i| (0..n).map(|j| if i == j { orders[i] } else { 0 }).collect()).collect();
        Self::from_relations(n, rel).expect("diagonal presentation")
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &IMatrix {
        &self.relations
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> &[i128] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn order(&self) -> Option<i128> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn isomorphic(&self, other: &FinGenAbGroup) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }

    /// Whether `v ∈ ℤ^gens` is zero in the group.
    pub fn is_zero(&self, v: &[i128]) -> bool {
        in_column_lattice(&self.relations, self.gens, self.nrel, v)
    }

    /// Presentation of the subgroup generated by the columns of `g`
    /// (`gens × k`), on `k` generators.
    pub fn subgroup(&self, g: &IMatrix, k: usize) -> Result<FinGenAbGroup> {
        let stacked = hstack(g, k, &self.relations, self.nrel, self.gens);
        let ker = integer_kernel(&stacked, self.gens, k + self.nrel);
        let rel = (0..k).map(|i| ker.iter().map(|v| v[i]).collect()).collect();
        FinGenAbGroup::from_relations(k, rel)
    }
}

impl fmt::Display for FinGenAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn hstack(a: &IMatrix, acols: usize, b: &IMatrix, bcols: usize, rows: usize) -> IMatrix {
    (0..rows)
        .map(|i| {
            let mut r: Vec<i128> = if acols > 0 { a[i].clone() } else { Vec::new() };
            if bcols > 0 {
                r.extend_from_slice(&b[i]);
            }
            r
        })
        .collect()
}

/// Homomorphism given on generators by a `target.gens × source.gens` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    pub source: FinGenAbGroup,
    pub target: FinGenAbGroup,
    pub matrix: IMatrix,
}

impl AbHom {
    /// Verifies that relations of the source map to zero in the target.
    pub fn new(source: FinGenAbGroup, target: FinGenAbGroup, matrix: IMatrix) -> Result<Self> {
        if matrix.len() != target.gens || matrix.iter().any(|r| r.len() != source.gens) {
            return Err(Error::IncompatiblePresentation(format!("map matrix must be {}x{}", target.gens, source.gens)));
        }
        for j in 0..source.nrel {
            let col: Vec<i128> = source.relations.iter().map(|r| r[j]).collect();
            if !target.is_zero(&imat_vec(&matrix, &col)) {
                return Err(Error::IncompatiblePresentation(format!("relation {j} of the source does not map to zero")));
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    /// The canonical surjection `ℤ^n → ℤ^n / R`.
    pub fn projection(target: FinGenAbGroup) -> Self {
        let n = target.gens;
        let m = super::snf::identity(n);
        AbHom::new(FinGenAbGroup::free(n), target, m).expect("identity respects free relations")
    }

    pub fn compose(&self, first: &AbHom) -> Result<AbHom> {
        if first.target != self.source {
            return Err(Error::IncompatiblePresentation("maps are not composable".into()));
        }
        let m = if self.source.gens == 0 { vec![vec![0; first.source.gens]; self.target.gens] } else { imat_mul(&self.matrix, &first.matrix) };
        AbHom::new(first.source.clone(), self.target.clone(), m)
    }

    /// Generators (as source vectors) of the kernel.
    fn kernel_generators(&self) -> Vec<Vec<i128>> {
        let (s, t) = (self.source.gens, &self.target);
        let stacked = hstack(&self.matrix, s, &t.relations, t.nrel, t.gens);
        let mut gens: Vec<Vec<i128>> = if t.gens == 0 {
            (0..s).map(|i| (0..s).map(|j| i128::from(i == j)).collect()).collect()
        } else {
            integer_kernel(&stacked, t.gens, s + t.nrel).into_iter().map(|v| v[..s].to_vec()).collect()
        };
        gens.retain(|v| v.iter().any(|&x| x != 0));
        gens
    }

    pub fn kernel(&self) -> Result<FinGenAbGroup> {
        let gens = self.kernel_generators();
        let k = gens.len();
        let g = (0..self.source.gens).map(|i| gens.iter().map(|v| v[i]).collect()).collect();
        self.source.subgroup(&g, k)
    }

    pub fn cokernel(&self) -> Result<FinGenAbGroup> {
        let t = &self.target;
        FinGenAbGroup::from_relations(t.gens, hstack(&self.matrix, self.source.gens, &t.relations, t.nrel, t.gens))
    }

    pub fn image(&self) -> Result<FinGenAbGroup> {
        self.target.subgroup(&self.matrix, self.source.gens)
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.is_trivial())
    }
}

/// `image(f) = kernel(g)` inside the middle group.
pub fn check_exact(f: &AbHom, g: &AbHom) -> Result<bool> {
    let comp = g.compose(f)?;
    let vanishes = (0..f.source.gens).all(|j| {
        let col: Vec<i128> = comp.matrix.iter().map(|r| r[j]).collect();
        g.target.is_zero(&col)
    });
    if !vanishes {
        return Ok(false);
    }
    let mid = &f.target;
    let span = hstack(&f.matrix, f.source.gens, &mid.relations, mid.nrel, mid.gens);
    let cols = f.source.gens + mid.nrel;
    Ok(g.kernel_generators().iter().all(|k| if cols == 0 { k.iter().all(|&x| x == 0) } else { in_column_lattice(&span, mid.gens, cols, k) }))
}

/// Injective, exact in the middle and surjective.
pub fn check_short_exact(f: &AbHom, g: &AbHom) -> Result<bool> {
    Ok(f.is_injective()? && check_exact(f, g)? && g.is_surjective()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_by_n_sequence_is_exact() {
        let z = FinGenAbGroup::free(1);
        let zn = FinGenAbGroup::cyclic_sum(&[5]);
        let f = AbHom::new(z.clone(), z.clone(), vec![vec![5]]).unwrap();
        let g = AbHom::projection(zn);
        assert!(check_short_exact(&f, &g).unwrap());
        let truncated = AbHom::new(z.clone(), z, vec![vec![10]]).unwrap();
        assert!(!check_exact(&truncated, &g).unwrap());
    }

    #[test]
    fn incompatible_map_is_rejected() {
        let z2 = FinGenAbGroup::cyclic_sum(&[2]);
        let z3 = FinGenAbGroup::cyclic_sum(&[3]);
        assert!(matches!(AbHom::new(z2, z3, vec![vec![1]]), Err(Error::IncompatiblePresentation(_))));
    }

    #[test]
    fn kernel_image_and_display() {
        let z6 = FinGenAbGroup::cyclic_sum(&[6]);
        let h = AbHom::new(z6.clone(), z6, vec![vec![2]]).unwrap();
        assert_eq!(h.kernel().unwrap().torsion(), &[2]);
        assert_eq!(h.image().unwrap().torsion(), &[3]);
        assert_eq!(h.cokernel().unwrap().to_string(), "Z/2");
        assert_eq!(FinGenAbGroup::cyclic_sum(&[2, 3, 0]).to_string(), "Z + Z/6");
    }
}
