use rand::Rng;

use crate::check::{run_cases, witness, EXHAUSTIVE_BOUND};
use crate::error::{Error, Result};
use crate::scalars::{self, Ext, ExtSpec, Scalar};

/// Scalar with a distinguished involution `σ`.
pub trait Involutive: Scalar {
    fn sigma(&self) -> Self;
}

impl<M: ExtSpec> Involutive for Ext<M> {
    fn sigma(&self) -> Self {
        self.conj()
    }
}

/// `(V, Q)` over `K` with `Q(v)(w) = h(v,w)·v`, where
/// `h(v,w) = Σ v_i H_ij σ(w_j)`. `Q(v)` is `K`-linear on `V^σ`, that is
/// `Q(v)(λw) = σ(λ)Q(v)(w)`, and `Q(λv) = λ²Q(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianPair<K: Involutive> {
    h: Vec<Vec<K>>,
}

impl<K: Involutive> HermitianPair<K> {
    pub fn new(h: Vec<Vec<K>>) -> Result<Self> {
        let n = h.len();
        if h.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("Hermitian form must be square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if h[j][i] != h[i][j].sigma() {
                    return Err(Error::DegenerateForm(format!("entry ({i},{j}) is not sigma-Hermitian")));
                }
            }
        }
        if scalars::mat_det(&h).is_zero() {
            return Err(Error::DegenerateForm("Hermitian form is degenerate".into()));
        }
        Ok(HermitianPair { h })
    }

    pub fn dim(&self) -> usize {
        self.h.len()
    }

    pub fn form(&self, v: &[K], w: &[K]) -> K {
        let mut acc = K::zero();
        for (i, vi) in v.iter().enumerate() {
            for (j, wj) in w.iter().enumerate() {
                acc = acc + vi.clone() * self.h[i][j].clone() * wj.sigma();
            }
        }
        acc
    }

    pub fn q(&self, v: &[K], w: &[K]) -> Vec<K> {
        scalars::vscale(&self.form(v, w), v)
    }

    /// `uᵀ H σ(u) = H`.
    pub fn is_unitary(&self, u: &[Vec<K>]) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut acc = K::zero();
                for k in 0..n {
                    for l in 0..n {
                        acc = acc + u[k][i].clone() * self.h[k][l].clone() * u[l][j].sigma();
                    }
                }
                acc == self.h[i][j]
            })
        })
    }

    /// Tests `u Q(v)(w) = Q(uv)(uw)` on all pairs when few, else on samples.
    pub fn is_automorphism<R: Rng + ?Sized>(&self, u: &[Vec<K>], trials: u64, rng: &mut R) -> Result<bool> {
        let n = self.dim();
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("expected a {n}x{n} matrix")));
        }
        let res = run_cases::<K, _, _>(n, 2, trials, EXHAUSTIVE_BOUND, rng, |args| {
            let (v, w) = (&args[0], &args[1]);
            let lhs = scalars::mat_vec(u, &self.q(v, w));
            let rhs = self.q(&scalars::mat_vec(u, v), &scalars::mat_vec(u, w));
            if lhs != rhs {
                return Err(Error::violation("Q-equivariance", witness(args)));
            }
            Ok(())
        });
        match res {
            Ok(_) => Ok(true),
            Err(Error::PropertyViolation { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// All unitary matrices of `h` by brute force over `K^{n×n}`.
pub fn unitary_group<K: Involutive>(pair: &HermitianPair<K>) -> Result<Vec<Vec<Vec<K>>>> {
    let n = pair.dim();
    let all = crate::check::tuple_space::<K>(n * n, 1)
        .filter(|&t| t <= 1_000_000)
        .and_then(|_| scalars::all_vectors::<K>(n * n))
        .ok_or_else(|| Error::SizeBound("unitary enumeration needs |K|^(n^2) <= 10^6".into()))?;
    Ok(all.into_iter().map(|flat| flat.chunks(n).map(<[K]>::to_vec).collect::<Vec<_>>()).filter(|u| pair.is_unitary(u)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, Gf9Spec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type K = Ext<Gf9Spec>;

    fn k(a: u64, b: u64) -> K {
        K::from_coeffs(vec![Fp::new(a), Fp::new(b)])
    }

    fn standard() -> HermitianPair<K> {
        HermitianPair::new(vec![vec![k(1, 0), k(0, 0)], vec![k(0, 0), k(1, 0)]]).unwrap()
    }

    #[test]
    fn unitary_group_of_gf9_plane_has_order_96_and_acts_by_automorphisms() {
        let p = standard();
        let group = unitary_group(&p).unwrap();
        assert_eq!(group.len(), 96);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for u in group.iter().step_by(7) {
            assert!(p.is_automorphism(u, 10, &mut rng).unwrap());
        }
    }

    #[test]
    fn unitary_scalar_is_an_automorphism_and_nonunitary_one_is_not() {
        let p = standard();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let lam = k(0, 1);
        assert_eq!(lam.clone() * lam.sigma(), k(1, 0));
        let scalar = vec![vec![lam.clone(), k(0, 0)], vec![k(0, 0), lam]];
        assert!(p.is_automorphism(&scalar, 10, &mut rng).unwrap());
        let bad = vec![vec![k(1, 1), k(0, 0)], vec![k(0, 0), k(1, 0)]];
        assert!(!p.is_unitary(&bad));
        assert!(!p.is_automorphism(&bad, 10, &mut rng).unwrap());
    }

    #[test]
    fn diag_two_one_is_unitary_over_gf9() {
        let p = standard();
        let d = vec![vec![k(2, 0), k(0, 0)], vec![k(0, 0), k(1, 0)]];
        assert!(p.is_unitary(&d));
    }

    #[test]
    fn degenerate_and_non_hermitian_forms_are_rejected() {
        let zero = vec![vec![k(1, 0), k(1, 0)], vec![k(1, 0), k(1, 0)]];
        assert!(matches!(HermitianPair::new(zero), Err(Error::DegenerateForm(_))));
        let skew = vec![vec![k(1, 0), k(0, 1)], vec![k(0, 1), k(1, 0)]];
        assert!(matches!(HermitianPair::new(skew), Err(Error::DegenerateForm(_))));
    }
}
