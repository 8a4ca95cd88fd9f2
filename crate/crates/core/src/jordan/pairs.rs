use std::marker::PhantomData;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{JordanPair, Sign};
use crate::cubic::{check_cubic_axioms, unit_vec, CubicNorm};
use crate::error::{Error, Result};
use crate::scalars::{self, Scalar};

/// `(V, V*)` with `Q⁺(v)(v*) = ⟨v,v*⟩v` and `Q⁻(v*)(v) = ⟨v,v*⟩v*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualSpacePair {
    dim: usize,
}

impl DualSpacePair {
    pub fn new(dim: usize) -> Self {
        DualSpacePair { dim }
    }
}

impl<S: Scalar> JordanPair<S> for DualSpacePair {
    fn dim(&self, _eps: Sign) -> usize {
        self.dim
    }

    fn q(&self, _eps: Sign, x: &[S], y: &[S]) -> Vec<S> {
        scalars::vscale(&scalars::dot(x, y), x)
    }

    fn name(&self) -> String {
        format!("dualspace(dim={})", self.dim)
    }
}

/// `(J, J)` with `Q⁺ = Q⁻ = U`.
#[derive(Clone, Debug)]
pub struct CubicPair<S: Scalar, J: CubicNorm<S>> {
    j: J,
    _s: PhantomData<S>,
}

impl<S: Scalar, J: CubicNorm<S>> CubicPair<S, J> {
    /// Screens `j` with a seeded axiom check before wrapping it.
    pub fn new(j: J) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        check_cubic_axioms(&j, 10, &mut rng).map_err(|e| match e {
            Error::PropertyViolation { identity, witness } => Error::AxiomFailure { identity, witness },
            other => other,
        })?;
        Ok(CubicPair { j, _s: PhantomData })
    }

    pub fn cubic(&self) -> &J {
        &self.j
    }
}

impl<S: Scalar, J: CubicNorm<S>> JordanPair<S> for CubicPair<S, J> {
    fn dim(&self, _eps: Sign) -> usize {
        self.j.dim()
    }

    fn q(&self, _eps: Sign, x: &[S], y: &[S]) -> Vec<S> {
        self.j.u_op(x, y)
    }

    fn name(&self) -> String {
        format!("cubic({})", self.j.name())
    }
}

/// Pair with `Q^ε` stored as coefficients of `x_i x_j y_l` (`i ≤ j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPair<S: Scalar> {
    dims: [usize; 2],
    coeffs: [Vec<Vec<S>>; 2],
    name: String,
}

fn sign_index(eps: Sign) -> usize {
    match eps {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

impl<S: Scalar> TensorPair<S> {
    /// Materializes the quadratic maps of `p` by polarization on basis vectors.
    pub fn from_pair<P: JordanPair<S>>(p: &P) -> Self {
        let dims = [p.dim(Sign::Plus), p.dim(Sign::Minus)];
        let coeffs = Sign::BOTH.map(|eps| {
            let (d, e) = (p.dim(eps), p.dim(eps.neg()));
            let mut out = Vec::new();
            for i in 0..d {
                for j in i..d {
                    for l in 0..e {
                        let y = unit_vec::<S>(e, l);
                        let ei = unit_vec::<S>(d, i);
                        let v = if i == j {
                            p.q(eps, &ei, &y)
                        } else {
                            let ej = unit_vec::<S>(d, j);
                            p.bracket(eps, &ei, &y, &ej)
                        };
                        out.push(v);
                    }
                }
            }
            out
        });
        TensorPair { dims, coeffs, name: format!("tensor({})", p.name()) }
    }
}

impl<S: Scalar> JordanPair<S> for TensorPair<S> {
    fn dim(&self, eps: Sign) -> usize {
        self.dims[sign_index(eps)]
    }

    fn q(&self, eps: Sign, x: &[S], y: &[S]) -> Vec<S> {
        let (d, e) = (self.dim(eps), self.dim(eps.neg()));
        let table = &self.coeffs[sign_index(eps)];
        let mut out: Vec<S> = scalars::vzero(d);
        let mut idx = 0;
        for i in 0..d {
            for j in i..d {
                let xx = x[i].clone() * x[j].clone();
                for l in 0..e {
                    if !xx.is_zero() && !y[l].is_zero() {
                        let c = xx.clone() * y[l].clone();
                        for (o, t) in out.iter_mut().zip(&table[idx]) {
                            *o = o.clone() + c.clone() * t.clone();
                        }
                    }
                    idx += 1;
                }
            }
        }
        out
    }

    fn name(&self) -> String {
        self.name.clone()
    }
}

/// Negates `Q⁺`; a negative control.
#[derive(Clone, Debug)]
pub struct CorruptedPair<P> {
    pub inner: P,
}

impl<S: Scalar, P: JordanPair<S>> JordanPair<S> for CorruptedPair<P> {
    fn dim(&self, eps: Sign) -> usize {
        self.inner.dim(eps)
    }

    fn q(&self, eps: Sign, x: &[S], y: &[S]) -> Vec<S> {
        let v = self.inner.q(eps, x, y);
        if eps == Sign::Plus {
            scalars::vneg(&v)
        } else {
            v
        }
    }

    fn name(&self) -> String {
        format!("corrupted({})", self.inner.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Mode;
    use crate::composition::CompositionAlgebra;
    use crate::cubic::HermitianJ;
    use crate::jordan::{check_jp, check_jp_bounded, Sign};
    use crate::scalars::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F3 = Fp<3>;
    type F5 = Fp<5>;

    #[test]
    fn dual_space_examples() {
        let p = DualSpacePair::new(1);
        let e = vec![F5::new(1)];
        assert_eq!(p.q(Sign::Plus, &e, &e), e);
        let two = vec![F5::new(2)];
        assert_eq!(p.q(Sign::Plus, &two, &e), vec![F5::new(4)]);
        let p2 = DualSpacePair::new(2);
        let (v, vs, w) = (vec![F5::new(1), F5::new(2)], vec![F5::new(3), F5::new(1)], vec![F5::new(4), F5::new(0)]);
        let expected = scalars::vadd(&scalars::vscale(&scalars::dot(&v, &vs), &w), &scalars::vscale(&scalars::dot(&w, &vs), &v));
        assert_eq!(p2.bracket(Sign::Plus, &v, &vs, &w), expected);
    }

    #[test]
    fn dual_space_dim_two_is_exhaustive_over_gf3() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let s = check_jp::<F3, _, _>(&DualSpacePair::new(2), 10, &mut rng).unwrap();
        assert_eq!(s.mode, Mode::Exhaustive);
        assert_eq!(s.cases, 4 * 729);
        let _ = check_jp::<F3, _, _>(&DualSpacePair::new(1), 10, &mut rng).unwrap();
    }

    #[test]
    fn corrupted_dual_space_fails_with_witness() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let err = check_jp::<F3, _, _>(&CorruptedPair { inner: DualSpacePair::new(2) }, 10, &mut rng).unwrap_err();
        assert!(matches!(err, Error::PropertyViolation { .. }));
    }

    #[test]
    fn cubic_pair_and_its_tensor_agree() {
        let c = CompositionAlgebra::new(&[F5::new(2)]).unwrap();
        let p = CubicPair::new(HermitianJ::new(c).unwrap()).unwrap();
        let t = TensorPair::from_pair(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            let (x, y) = (p.cubic().random(&mut rng), p.cubic().random(&mut rng));
            assert_eq!(p.q(Sign::Plus, &x, &y), t.q(Sign::Plus, &x, &y));
        }
        let one = p.cubic().unit();
        let y = p.cubic().random(&mut rng);
        assert_eq!(p.q(Sign::Plus, &one, &y), y);
        assert!(scalars::is_zero_vec(&p.q(Sign::Plus, &[F5::new(0); 9], &y)));
        check_jp_bounded(&t, 30, 0, &mut rng).unwrap();
    }
}
