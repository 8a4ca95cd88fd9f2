//! Character lattices of split tori and finite diagonalizable groups.

mod abelian;
mod snf;

pub use abelian::{check_exact, check_short_exact, AbHom, FinGenAbGroup};
pub use snf::{identity, idet, imat_mul, imat_vec, in_column_lattice, integer_kernel, smith_normal_form, transpose, IMatrix, Smith};

use crate::error::{Error, Result};

/// Dual of `1 → ∏ μ_{nᵢ} → ∏ G_m →(z ↦ z^{nᵢ})→ ∏ G_m → 1`:
/// `0 → ℤ^r →diag(n)→ ℤ^r → ⊕ ℤ/nᵢ → 0`. Returns exactness and `X(Z)`.
pub fn example1_check(ns: &[i128]) -> Result<(bool, FinGenAbGroup)> {
    let r = ns.len();
    let lattice = FinGenAbGroup::free(r);
    let diag = (0..r).map(|i| (0..r).map(|j| if i == j { ns[i] } else { 0 }).collect()).collect();
    let f = AbHom::new(lattice.clone(), lattice, diag)?;
    let xz = FinGenAbGroup::cyclic_sum(ns);
    let g = AbHom::projection(xz.clone());
    Ok((check_short_exact(&f, &g)?, xz))
}

/// Dual of `1 → Res¹ → Res G_m →N→ G_m → 1` for `K = F^d`:
/// `0 → ℤ →(1,…,1)→ ℤ^d → X(Z) → 0`. Returns exactness and `X(Z)`.
pub fn example2_check(d: usize) -> Result<(bool, FinGenAbGroup)> {
    let ones: IMatrix = vec![vec![1]; d];
    let f = AbHom::new(FinGenAbGroup::free(1), FinGenAbGroup::free(d), ones.clone())?;
    let xz = FinGenAbGroup::from_relations(d, ones)?;
    let g = AbHom::projection(xz.clone());
    Ok((check_short_exact(&f, &g)?, xz))
}

/// Outcome of `example3_criterion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example3 {
    pub iso: bool,
    pub kernel_dual: FinGenAbGroup,
    pub det: i128,
}

/// Lattice matrix `A = J − nI` of `x ↦ N(x)x^{−n}` on `Res_{F^d/F} G_m`.
/// `iso` holds iff `coker(Aᵀ) ≅ (ℤ/n)^{d−1}`.
pub fn example3_criterion(n: i128, d: usize) -> Result<Example3> {
    if n < 1 || d < 1 {
        return Err(Error::IncompatiblePresentation(format!("need n >= 1 and d >= 1, got ({n}, {d})")));
    }
    let a: IMatrix = (0..d).map(|i| (0..d).map(|j| 1 - if i == j { n } else { 0 }).collect()).collect();
    let at = transpose(&a, d, d);
    let kernel_dual = FinGenAbGroup::from_relations(d, at)?;
    let expected = FinGenAbGroup::cyclic_sum(&vec![n; d - 1]);
    Ok(Example3 { iso: kernel_dual.isomorphic(&expected), kernel_dual, det: idet(&a) })
}

/// Outcome of `center_iso_check`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterIso {
    pub quotient_order: usize,
    pub norm_one_order: usize,
    pub well_defined: bool,
    pub iso: bool,
}

/// Enumerates `μ_n^d` in exponent form and tests that `x ↦ N(x)x^{−d}`
/// induces an isomorphism `μ_n^d/μ_n → Res¹(μ_n)`. For `(n,d) = (2,3)` this
/// is `(a,b,c) ↦ (bc,ca,ab)`.
pub fn center_iso_check(n: u64, d: u32) -> Result<CenterIso> {
    let total = n.checked_pow(d).filter(|&t| t <= 1 << 20).ok_or_else(|| Error::SizeBound(format!("mu_{n}^{d} is too large")))?;
    let decode = |mut idx: u64| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let e = idx % n;
                idx /= n;
                e
            })
            .collect()
    };
    let map = |e: &[u64]| -> Vec<u64> {
        let s: u64 = e.iter().sum();
        e.iter().map(|&x| (s + (n - x % n) * u64::from(d)) % n).collect()
    };
    let diag_class = |e: &[u64]| -> Vec<u64> {
        let shift = e[0];
        e.iter().map(|&x| (x + n - shift) % n).collect()
    };
    let elems: Vec<Vec<u64>> = (0..total).map(decode).collect();
    let well_defined = (0..n).all(|l| map(&vec![l; d as usize]).iter().all(|&x| x == 0));
    let mut classes = std::collections::HashMap::new();
    for e in &elems {
        classes.entry(diag_class(e)).or_insert_with(|| map(e));
    }
    let norm_one: std::collections::HashSet<Vec<u64>> = elems.iter().filter(|e| e.iter().sum::<u64>() % n == 0).cloned().collect();
    let images: std::collections::HashSet<Vec<u64>> = classes.values().cloned().collect();
    let iso = well_defined && images.len() == classes.len() && images == norm_one;
    Ok(CenterIso { quotient_order: classes.len(), norm_one_order: norm_one.len(), well_defined, iso })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_two_three() {
        let (exact, xz) = example1_check(&[2, 3]).unwrap();
        assert!(exact);
        assert_eq!(xz.torsion(), &[6]);
    }

    #[test]
    fn example2_cokernels_are_free() {
        for d in 1..=4 {
            let (exact, xz) = example2_check(d).unwrap();
            assert!(exact);
            assert_eq!(xz.free_rank(), d - 1);
            assert!(xz.torsion().is_empty());
        }
    }

    #[test]
    fn example3_named_points() {
        let e = example3_criterion(2, 3).unwrap();
        assert!(e.iso);
        assert_eq!(e.kernel_dual.torsion(), &[2, 2]);
        let e = example3_criterion(3, 2).unwrap();
        assert!(e.iso);
        assert_eq!(e.kernel_dual.torsion(), &[3]);
        let e = example3_criterion(2, 2).unwrap();
        assert!(!e.iso);
        assert_eq!(e.det, 0);
    }

    #[test]
    fn center_iso_examples() {
        let c = center_iso_check(2, 3).unwrap();
        assert_eq!((c.quotient_order, c.norm_one_order), (4, 4));
        assert!(c.iso);
        let c = center_iso_check(3, 2).unwrap();
        assert_eq!((c.quotient_order, c.norm_one_order), (3, 3));
        assert!(c.iso);
        assert!(center_iso_check(1, 3).unwrap().iso);
    }
}
