mod hermitian;
mod similitude;
mod springer;

use rand::Rng;

use crate::check::{run_cases, witness, CheckSummary};
use crate::error::{Error, Result};
use crate::scalars::{self, Scalar};

pub use hermitian::{parse_hermitian_element, HermitianJ};
pub use similitude::{congruence_map, is_similitude, rescale_map, LinearOp};
pub use springer::Springer;

/// Cubic norm structure on coordinate vectors: norm `N`, adjoint `#`,
/// bilinear trace `T` and unit.
pub trait CubicNorm<S: Scalar>: Send + Sync {
    fn dim(&self) -> usize;
    fn norm(&self, x: &[S]) -> S;
    fn sharp(&self, x: &[S]) -> Vec<S>;
    fn trace_form(&self, x: &[S], y: &[S]) -> S;
    fn unit(&self) -> Vec<S>;
    fn name(&self) -> String;

    /// `x × y = (x+y)^# − x^# − y^#`.
    fn cross(&self, x: &[S], y: &[S]) -> Vec<S> {
        let s = self.sharp(&scalars::vadd(x, y));
        scalars::vsub(&scalars::vsub(&s, &self.sharp(x)), &self.sharp(y))
    }

    /// `U_x(y) = T(x,y)x − x^# × y`.
    fn u_op(&self, x: &[S], y: &[S]) -> Vec<S> {
        let t = self.trace_form(x, y);
        scalars::vsub(&scalars::vscale(&t, x), &self.cross(&self.sharp(x), y))
    }

    fn trace(&self, x: &[S]) -> S {
        self.trace_form(&self.unit(), x)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<S>
    where
        Self: Sized,
    {
        scalars::random_vec(self.dim(), rng)
    }

    /// Gram matrix of `T` on the coordinate basis.
    fn gram(&self) -> Vec<Vec<S>> {
        let n = self.dim();
        let basis: Vec<Vec<S>> = (0..n).map(|i| unit_vec(n, i)).collect();
        (0..n).map(|i| (0..n).map(|j| self.trace_form(&basis[i], &basis[j])).collect()).collect()
    }
}

pub(crate) fn unit_vec<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = scalars::vzero(n);
    v[i] = S::one();
    v
}

/// Verifies `N(1)=1`, `1^#=1`, `x^## = N(x)x`, `T(x^#,x) = 3N(x)`,
/// `U_1 = id` and `U_{U_x y} = U_x U_y U_x`.
pub fn check_cubic_axioms<S: Scalar, J: CubicNorm<S>, R: Rng + ?Sized>(j: &J, trials: u64, rng: &mut R) -> Result<CheckSummary> {
    check_cubic_axioms_bounded(j, trials, crate::check::EXHAUSTIVE_BOUND, rng)
}

pub fn check_cubic_axioms_bounded<S: Scalar, J: CubicNorm<S>, R: Rng + ?Sized>(j: &J, trials: u64, bound: u64, rng: &mut R) -> Result<CheckSummary> {
    let one = j.unit();
    if !j.norm(&one).is_one() {
        return Err(Error::violation("N(1) = 1", scalars::fmt_vec(&one)));
    }
    if j.sharp(&one) != one {
        return Err(Error::violation("1^# = 1", scalars::fmt_vec(&one)));
    }
    let three = S::from_i64(3);
    run_cases::<S, _, _>(j.dim(), 3, trials, bound, rng, |args| {
        let (x, y, z) = (&args[0], &args[1], &args[2]);
        let n = j.norm(x);
        let xs = j.sharp(x);
        if j.sharp(&xs) != scalars::vscale(&n, x) {
            return Err(Error::violation("x^## = N(x)x", witness(args)));
        }
        if j.trace_form(&xs, x) != three.clone() * n {
            return Err(Error::violation("T(x^#, x) = 3N(x)", witness(args)));
        }
        if j.u_op(&one, y) != *y {
            return Err(Error::violation("U_1 = id", witness(args)));
        }
        let uxy = j.u_op(x, y);
        let lhs = j.u_op(&uxy, z);
        let rhs = j.u_op(x, &j.u_op(y, &j.u_op(x, z)));
        if lhs != rhs {
            return Err(Error::violation("U_{U_x y} = U_x U_y U_x", witness(args)));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::CompositionAlgebra;
    use crate::scalars::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F7 = Fp<7>;

    #[test]
    fn corrupted_norm_breaks_the_adjoint_identity() {
        let c = CompositionAlgebra::new(&[F7::new(3)]).unwrap();
        let j = HermitianJ::new(c).unwrap().corrupted();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        match check_cubic_axioms(&j, 100, &mut rng) {
            Err(Error::PropertyViolation { identity, .. }) => assert_eq!(identity, "x^## = N(x)x"),
            other => panic!("expected a violation, got {other:?}"),
        }
    }
}
