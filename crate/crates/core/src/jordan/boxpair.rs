use rand::Rng;

use super::{run_slots, slot_witness, JordanPair, Sign};
use crate::check::{run_cases, witness, CheckSummary, EXHAUSTIVE_BOUND};
use crate::cubic::CubicNorm;
use crate::error::{Error, Result};
use crate::scalars::{self, Scalar};

/// `J⁺ × J⁻` as an `F×F`-module with `Q^□(x)(y) = (Q⁺(x⁺)y⁻, Q⁻(x⁻)y⁺)`.
#[derive(Clone, Debug)]
pub struct BoxPair<P> {
    pub pair: P,
}

impl<P> BoxPair<P> {
    pub fn new(pair: P) -> Self {
        BoxPair { pair }
    }
}

impl<P> BoxPair<P> {
    fn split<'a, S: Scalar>(&self, x: &'a [S], d_plus: usize) -> (&'a [S], &'a [S]) {
        x.split_at(d_plus)
    }

    pub fn dim<S: Scalar>(&self) -> usize
    where
        P: JordanPair<S>,
    {
        self.pair.dim(Sign::Plus) + self.pair.dim(Sign::Minus)
    }

    pub fn q<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S>
    where
        P: JordanPair<S>,
    {
        let d = self.pair.dim(Sign::Plus);
        let (xp, xm) = self.split(x, d);
        let (yp, ym) = self.split(y, d);
        let mut out = self.pair.q(Sign::Plus, xp, ym);
        out.extend(self.pair.q(Sign::Minus, xm, yp));
        out
    }

    /// `(a, b)·(x⁺, x⁻) = (a x⁺, b x⁻)`.
    pub fn act<S: Scalar>(&self, a: &S, b: &S, x: &[S]) -> Vec<S>
    where
        P: JordanPair<S>,
    {
        let (xp, xm) = self.split(x, self.pair.dim(Sign::Plus));
        let mut out = scalars::vscale(a, xp);
        out.extend(scalars::vscale(b, xm));
        out
    }

    /// `(x⁺, x⁻) ↦ (x⁻, x⁺)`; requires `J⁺` and `J⁻` of equal dimension.
    pub fn swap<S: Scalar>(&self, x: &[S]) -> Result<Vec<S>>
    where
        P: JordanPair<S>,
    {
        let (dp, dm) = (self.pair.dim(Sign::Plus), self.pair.dim(Sign::Minus));
        if dp != dm {
            return Err(Error::ShapeMismatch(format!("cannot swap factors of dimensions {dp} and {dm}")));
        }
        let (xp, xm) = self.split(x, dp);
        let mut out = xm.to_vec();
        out.extend_from_slice(xp);
        Ok(out)
    }

    /// Checks `σ² = id`, `σ((a,b)x) = (b,a)σ(x)` and `Q^□(σx)(σy) = σ(Q^□(x)(y))`.
    pub fn sigma_swap_check<S: Scalar, R: Rng + ?Sized>(&self, trials: u64, rng: &mut R) -> Result<CheckSummary>
    where
        P: JordanPair<S>,
    {
        let n = self.dim::<S>();
        let (a, b) = (S::from_i64(2), S::from_i64(5));
        run_slots::<S, _, _>(&[n, n], trials, EXHAUSTIVE_BOUND, rng, |s| {
            let (x, y) = (s[0], s[1]);
            let sx = self.swap(x)?;
            if self.swap(&sx)? != x {
                return Err(Error::violation("swap is an involution", slot_witness(s)));
            }
            if self.swap(&self.act(&a, &b, x))? != self.act(&b, &a, &sx) {
                return Err(Error::violation("swap is sigma-semilinear", slot_witness(s)));
            }
            if self.q(&sx, &self.swap(y)?) != self.swap(&self.q(x, y))? {
                return Err(Error::violation("swap preserves Q", slot_witness(s)));
            }
            Ok(())
        })
    }
}

/// `T(U_x y, z) = T(y, U_x z)`: the trace form identifies `J` with its dual
/// compatibly with `U`.
pub fn check_trace_self_adjoint<S: Scalar, J: CubicNorm<S>, R: Rng + ?Sized>(j: &J, trials: u64, rng: &mut R) -> Result<CheckSummary> {
    run_cases::<S, _, _>(j.dim(), 3, trials, EXHAUSTIVE_BOUND, rng, |args| {
        let (x, y, z) = (&args[0], &args[1], &args[2]);
        if j.trace_form(&j.u_op(x, y), z) != j.trace_form(y, &j.u_op(x, z)) {
            return Err(Error::violation("T(U_x y, z) = T(y, U_x z)", witness(args)));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::CompositionAlgebra;
    use crate::cubic::HermitianJ;
    use crate::jordan::{CubicPair, DualSpacePair, TensorPair};
    use crate::scalars::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F7 = Fp<7>;

    #[test]
    fn module_structure_and_swap() {
        let b = BoxPair::new(DualSpacePair::new(2));
        let x: Vec<F7> = [1, 2, 3, 4].iter().map(|&n| F7::new(n)).collect();
        let e1 = b.act(&F7::new(1), &F7::new(0), &x);
        assert_eq!(e1, vec![F7::new(1), F7::new(2), F7::new(0), F7::new(0)]);
        assert_eq!(b.swap(&b.swap(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn cubic_box_pair_has_swap_automorphism() {
        let j = HermitianJ::new(CompositionAlgebra::<F7>::base()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        check_trace_self_adjoint(&j, 100, &mut rng).unwrap();
        let b = BoxPair::new(CubicPair::new(j).unwrap());
        b.sigma_swap_check(100, &mut rng).unwrap();
    }

    #[test]
    fn unequal_dimensions_cannot_swap() {
        let t = TensorPair::from_pair(&crate::jordan::CorruptedPair { inner: DualSpacePair::new(1) });
        let b = BoxPair::new(t);
        assert!(b.swap(&[F7::new(1), F7::new(1)]).is_ok());
        let v: Vec<F7> = vec![F7::new(1); 3];
        let lopsided = BoxPair::new(Lopsided);
        assert!(matches!(lopsided.swap(&v), Err(Error::ShapeMismatch(_))));
    }

    struct Lopsided;

    impl JordanPair<F7> for Lopsided {
        fn dim(&self, eps: Sign) -> usize {
            if eps == Sign::Plus {
                1
            } else {
                2
            }
        }

        fn q(&self, eps: Sign, _x: &[F7], _y: &[F7]) -> Vec<F7> {
            vec![F7::new(0); self.dim(eps)]
        }

        fn name(&self) -> String {
            "lopsided".into()
        }
    }
}
