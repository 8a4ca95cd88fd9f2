use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{unit_vec, CubicNorm};
use crate::composition::TwistedComposition;
use crate::error::{Error, Result};
use crate::scalars::{self, require_char_not_2_3, EtaleElement, Scalar};

/// Springer construction on `E ⊕ V` with
/// `N(e,v) = N_E(e) − T_E(e·Q(v)) + b_Q(v, β(v))`. The trace form and the
/// adjoint are derived from `N` by polarization.
#[derive(Clone, Debug)]
pub struct Springer<S: Scalar> {
    t: TwistedComposition<S>,
    gram_inv: Vec<Vec<S>>,
}

impl<S: Scalar> Springer<S> {
    pub fn new(t: TwistedComposition<S>) -> Result<Self> {
        require_char_not_2_3::<S>()?;
        let mut j = Springer { t, gram_inv: Vec::new() };
        let gram = j.gram();
        j.gram_inv = scalars::mat_inverse(&gram).map_err(|_| Error::DegenerateForm("trace form of the Springer construction".into()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..8 {
            let x = j.random(&mut rng);
            if j.sharp(&j.sharp(&x)) != scalars::vscale(&j.norm(&x), &x) {
                return Err(Error::AxiomFailure { identity: "x^## = N(x)x".into(), witness: scalars::fmt_vec(&x) });
            }
        }
        Ok(j)
    }

    pub fn twisted(&self) -> &TwistedComposition<S> {
        &self.t
    }

    fn split<'a>(&self, x: &'a [S]) -> (EtaleElement<S>, &'a [S]) {
        (EtaleElement { coords: x[..3].to_vec() }, &x[3..])
    }

    /// `D1(x,y) = (N(x+y) − N(x−y))/2 − N(y)`, linear in `y`.
    fn d1(&self, x: &[S], y: &[S]) -> S {
        let half = S::from_i64(2).try_inv().expect("characteristic is not 2");
        half * (self.norm(&scalars::vadd(x, y)) - self.norm(&scalars::vsub(x, y))) - self.norm(y)
    }

    /// `D2(x,y) = (N(x+y) + N(x−y))/2 − N(x)`, quadratic in `y`.
    fn d2(&self, x: &[S], y: &[S]) -> S {
        let half = S::from_i64(2).try_inv().expect("characteristic is not 2");
        half * (self.norm(&scalars::vadd(x, y)) + self.norm(&scalars::vsub(x, y))) - self.norm(x)
    }

    pub fn linear_trace(&self, x: &[S]) -> S {
        self.d1(&self.unit(), x)
    }

    pub fn quadratic_trace(&self, x: &[S]) -> S {
        self.d2(&self.unit(), x)
    }

    /// Maps `(e; v1,v2,v3)` to `(e0,e1,e2; v̄1, v̄2, v̄3)` in `J(C)`.
    pub fn to_hermitian(&self, x: &[S]) -> Vec<S> {
        let c = self.t.composition();
        let (e, v) = self.split(x);
        let mut out = e.coords;
        for slot in self.t.slots(v) {
            out.extend(c.conj(slot));
        }
        out
    }
}

impl<S: Scalar> CubicNorm<S> for Springer<S> {
    fn dim(&self) -> usize {
        3 + self.t.dim()
    }

    fn norm(&self, x: &[S]) -> S {
        let e_alg = self.t.etale();
        let (e, v) = self.split(x);
        e_alg.norm(&e) - e_alg.trace(&e_alg.mul(&e, &self.t.q(v))) + self.t.cubic_term(v)
    }

    fn sharp(&self, x: &[S]) -> Vec<S> {
        let n = self.dim();
        let rhs: Vec<S> = (0..n).map(|j| self.d1(x, &unit_vec(n, j))).collect();
        scalars::mat_vec(&self.gram_inv, &rhs)
    }

    /// `T(x,y) = T(x)T(y) − (S(x+y) − S(x) − S(y))`.
    fn trace_form(&self, x: &[S], y: &[S]) -> S {
        let s_xy = self.quadratic_trace(&scalars::vadd(x, y)) - self.quadratic_trace(x) - self.quadratic_trace(y);
        self.linear_trace(x) * self.linear_trace(y) - s_xy
    }

    fn unit(&self) -> Vec<S> {
        let mut u = vec![S::one(); 3];
        u.extend(scalars::vzero(self.t.dim()));
        u
    }

    fn name(&self) -> String {
        format!("springer(dim C = {})", self.t.composition().dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::CompositionAlgebra;
    use crate::cubic::{check_cubic_axioms, HermitianJ};
    use crate::scalars::{EtaleAlgebra, Fp};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F5 = Fp<5>;
    type F7 = Fp<7>;

    #[test]
    fn matches_hermitian_norm_exhaustively_over_gf5() {
        let c = CompositionAlgebra::<F5>::base();
        let s = Springer::new(TwistedComposition::from_tensor(c.clone(), EtaleAlgebra::split(3)).unwrap()).unwrap();
        let j = HermitianJ::new(c).unwrap();
        let all = scalars::all_vectors::<F5>(6).unwrap();
        assert_eq!(all.len(), 15625);
        for x in &all {
            assert_eq!(s.norm(x), j.norm(&s.to_hermitian(x)));
        }
    }

    #[test]
    fn quaternion_springer_passes_axioms_and_matches_hermitian() {
        let c = CompositionAlgebra::new(&[F7::new(3), F7::new(5)]).unwrap();
        let s = Springer::new(TwistedComposition::from_tensor(c.clone(), EtaleAlgebra::split(3)).unwrap()).unwrap();
        let j = HermitianJ::new(c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        check_cubic_axioms(&s, 20, &mut rng).unwrap();
        for _ in 0..50 {
            let x = s.random(&mut rng);
            let y = s.random(&mut rng);
            let (hx, hy) = (s.to_hermitian(&x), s.to_hermitian(&y));
            assert_eq!(s.norm(&x), j.norm(&hx));
            assert_eq!(s.to_hermitian(&s.sharp(&x)), j.sharp(&hx));
            assert_eq!(s.trace_form(&x, &y), j.trace_form(&hx, &hy));
        }
    }

    #[test]
    fn corrupted_composition_is_rejected() {
        let c = CompositionAlgebra::new(&[F7::new(3), F7::new(5)]).unwrap().corrupted();
        let t = TwistedComposition::from_tensor(c, EtaleAlgebra::split(3)).unwrap();
        assert!(matches!(Springer::new(t), Err(Error::AxiomFailure { .. })));
    }
}
