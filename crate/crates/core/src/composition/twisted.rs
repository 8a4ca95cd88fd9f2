use rand::Rng;

use super::CompositionAlgebra;
use crate::check::{run_cases, witness, CheckSummary, EXHAUSTIVE_BOUND};
use crate::error::{Error, Result};
use crate::scalars::{self, EtaleAlgebra, EtaleElement, Scalar};

/// `C ⊗ E` over split `E = F³`, carrier `V = C³`, with
/// `Q(v) = (N(v1), N(v2), N(v3))` and `β(v) = (v̄2 v̄3, v̄3 v̄1, v̄1 v̄2)`.
#[derive(Clone, Debug)]
pub struct TwistedComposition<S: Scalar> {
    c: CompositionAlgebra<S>,
    e: EtaleAlgebra<S>,
    corrupt_beta: bool,
}

impl<S: Scalar> TwistedComposition<S> {
    pub fn from_tensor(c: CompositionAlgebra<S>, e: EtaleAlgebra<S>) -> Result<Self> {
        if e.rank() != 3 {
            return Err(Error::RankMismatch { expected: 3, found: e.rank() });
        }
        if !e.is_split() {
            return Err(Error::Unsupported("twisted compositions over non-split cubic algebras".into()));
        }
        Ok(TwistedComposition { c, e, corrupt_beta: false })
    }

    /// Flips the sign of the first slot of β; a negative control.
    pub fn corrupted(&self) -> Self {
        TwistedComposition { corrupt_beta: true, ..self.clone() }
    }

    pub fn composition(&self) -> &CompositionAlgebra<S> {
        &self.c
    }

    pub fn etale(&self) -> &EtaleAlgebra<S> {
        &self.e
    }

    /// Dimension of `V` over the base field.
    pub fn dim(&self) -> usize {
        3 * self.c.dim()
    }

    pub fn slots<'a>(&self, v: &'a [S]) -> [&'a [S]; 3] {
        let d = self.c.dim();
        [&v[..d], &v[d..2 * d], &v[2 * d..]]
    }

    pub fn q(&self, v: &[S]) -> EtaleElement<S> {
        let [a, b, c] = self.slots(v);
        EtaleElement { coords: vec![self.c.norm(a), self.c.norm(b), self.c.norm(c)] }
    }

    /// `b_Q(v, w) = Q(v+w) − Q(v) − Q(w)`.
    pub fn polar(&self, v: &[S], w: &[S]) -> EtaleElement<S> {
        let [v1, v2, v3] = self.slots(v);
        let [w1, w2, w3] = self.slots(w);
        EtaleElement { coords: vec![self.c.polar(v1, w1), self.c.polar(v2, w2), self.c.polar(v3, w3)] }
    }

    pub fn beta(&self, v: &[S]) -> Vec<S> {
        let [a, b, c] = self.slots(v);
        let (ca, cb, cc) = (self.c.conj(a), self.c.conj(b), self.c.conj(c));
        let mut first = self.c.mul(&cb, &cc);
        if self.corrupt_beta {
            first = scalars::vneg(&first);
        }
        let mut out = first;
        out.extend(self.c.mul(&cc, &ca));
        out.extend(self.c.mul(&ca, &cb));
        out
    }

    /// `b_Q(v, β(v))` read as a base scalar (its first component).
    pub fn cubic_term(&self, v: &[S]) -> S {
        self.polar(v, &self.beta(v)).coords[0].clone()
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<S> {
        scalars::random_vec(self.dim(), rng)
    }
}

/// Verifies `Q(β(v)) = Q(v)^#` and that `b_Q(v, β(v))` is diagonal in `E`.
pub fn check_twisted<S: Scalar, R: Rng + ?Sized>(t: &TwistedComposition<S>, trials: u64, rng: &mut R) -> Result<CheckSummary> {
    check_twisted_bounded(t, trials, EXHAUSTIVE_BOUND, rng)
}

pub fn check_twisted_bounded<S: Scalar, R: Rng + ?Sized>(t: &TwistedComposition<S>, trials: u64, bound: u64, rng: &mut R) -> Result<CheckSummary> {
    run_cases::<S, _, _>(t.dim(), 1, trials, bound, rng, |args| {
        let v = &args[0];
        let b = t.beta(v);
        let sharp = t.e.sharp_cubic(&t.q(v))?;
        if t.q(&b) != sharp {
            return Err(Error::violation("Q(beta(v)) = Q(v)^#", witness(args)));
        }
        let p = t.polar(v, &b).coords;
        if p[0] != p[1] || p[1] != p[2] {
            return Err(Error::violation("b_Q(v, beta(v)) is diagonal", witness(args)));
        }
        Ok(())
    })
}

/// Tests `β(β(v)) = b_Q(v,β(v))·v` on samples; returns the first failing `v`.
/// This normalization is not forced by the two checked properties.
pub fn beta_square_counterexample<S: Scalar, R: Rng + ?Sized>(t: &TwistedComposition<S>, trials: u64, rng: &mut R) -> Option<Vec<S>> {
    (0..trials).map(|_| t.random(rng)).find(|v| {
        let lhs = t.beta(&t.beta(v));
        let rhs = scalars::vscale(&t.cubic_term(v), v);
        lhs != rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F7 = Fp<7>;

    fn over_f() -> TwistedComposition<F7> {
        TwistedComposition::from_tensor(CompositionAlgebra::base(), EtaleAlgebra::split(3)).unwrap()
    }

    #[test]
    fn scalar_case_matches_sharp() {
        let t = over_f();
        let v = vec![F7::new(2), F7::new(3), F7::new(4)];
        assert_eq!(t.beta(&v), vec![F7::new(12), F7::new(8), F7::new(6)]);
        let e = t.etale();
        assert_eq!(t.beta(&v), e.sharp_cubic(&e.element(v.clone()).unwrap()).unwrap().coords);
        let ones = vec![F7::new(1); 3];
        assert_eq!(t.q(&ones).coords, ones);
        assert_eq!(t.beta(&ones), ones);
        let zero = vec![F7::new(0); 3];
        assert_eq!(t.beta(&zero), zero);
    }

    #[test]
    fn scalar_case_is_exhaustive_and_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let s = check_twisted(&over_f(), 10, &mut rng).unwrap();
        assert_eq!(s.cases, 343);
    }

    #[test]
    fn corrupted_beta_fails() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(check_twisted(&over_f().corrupted(), 10, &mut rng).is_err());
    }

    #[test]
    fn beta_square_normalization_fails_beyond_dimension_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = CompositionAlgebra::new(&[F7::new(3)]).unwrap();
        let t = TwistedComposition::from_tensor(c, EtaleAlgebra::split(3)).unwrap();
        assert!(beta_square_counterexample(&t, 50, &mut rng).is_some());
    }
}
