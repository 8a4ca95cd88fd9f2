use super::{unit_vec, CubicNorm, HermitianJ};
use crate::error::{Error, Result};
use crate::scalars::{self, Scalar};

/// Dense linear map on coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOp<S: Scalar> {
    pub matrix: Vec<Vec<S>>,
}

impl<S: Scalar> LinearOp<S> {
    /// Builds the matrix of `f` column by column.
    pub fn from_fn(dim: usize, f: impl Fn(&[S]) -> Vec<S>) -> Self {
        let cols: Vec<Vec<S>> = (0..dim).map(|j| f(&unit_vec(dim, j))).collect();
        let matrix = (0..dim).map(|i| (0..dim).map(|j| cols[j][i].clone()).collect()).collect();
        LinearOp { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        scalars::mat_vec(&self.matrix, v)
    }

    pub fn compose(&self, other: &LinearOp<S>) -> LinearOp<S> {
        LinearOp { matrix: scalars::mat_mul(&self.matrix, &other.matrix) }
    }
}

/// `diag(t, t, 1/t; 1, 1, t)`, a similitude of `J(C)` with factor `t`.
pub fn rescale_map<S: Scalar>(j: &HermitianJ<S>, t: &S) -> Result<LinearOp<S>> {
    let inv = t.try_inv()?;
    let d = j.composition().dim();
    let mut factors = vec![t.clone(), t.clone(), inv];
    factors.extend(std::iter::repeat_n(S::one(), 2 * d));
    factors.extend(std::iter::repeat_n(t.clone(), d));
    let n = factors.len();
    let matrix = (0..n).map(|i| (0..n).map(|k| if i == k { factors[i].clone() } else { S::zero() }).collect()).collect();
    Ok(LinearOp { matrix })
}

/// `X ↦ m X mᵀ` on `J(F)`; a similitude with factor `det(m)²`.
pub fn congruence_map<S: Scalar>(j: &HermitianJ<S>, m: &[[S; 3]; 3]) -> Result<LinearOp<S>> {
    j.to_matrix(&j.unit())?;
    Ok(LinearOp::from_fn(j.dim(), |x| {
        let xm = j.to_matrix(x).expect("C = F");
        let out: [[S; 3]; 3] = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let mut acc = S::zero();
                for k in 0..3 {
                    for l in 0..3 {
                        acc = acc + m[r][k].clone() * xm[k][l].clone() * m[c][l].clone();
                    }
                }
                acc
            })
        });
        j.from_matrix(&out)
    }))
}

/// Returns the factor `t` with `N(gx) = t N(x)` on every sample, or `None` if
/// no single factor fits. The factor is read off the first anisotropic sample.
pub fn is_similitude<S: Scalar, J: CubicNorm<S>>(g: &LinearOp<S>, j: &J, sample: &[Vec<S>]) -> Result<Option<S>> {
    let anchor = sample.iter().find(|x| !j.norm(x).is_zero()).ok_or_else(|| Error::InsufficientSample("every sample is isotropic".into()))?;
    let t = j.norm(&g.apply(anchor)).try_div(&j.norm(anchor))?;
    let fits = sample.iter().all(|x| j.norm(&g.apply(x)) == t.clone() * j.norm(x));
    Ok(fits.then_some(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::CompositionAlgebra;
    use crate::scalars::{Fp, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F7 = Fp<7>;

    fn sample<S: Scalar, J: CubicNorm<S>>(j: &J, n: usize) -> Vec<Vec<S>> {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        (0..n).map(|_| j.random(&mut rng)).collect()
    }

    #[test]
    fn rescale_has_exact_factor_over_q() {
        let c = CompositionAlgebra::new(&[Rational::from_i64(-1), Rational::from_i64(-3)]).unwrap();
        let j = HermitianJ::new(c).unwrap();
        let t = Rational::from_i64(5) / Rational::from_i64(3);
        let g = rescale_map(&j, &t).unwrap();
        assert_eq!(is_similitude(&g, &j, &sample(&j, 20)).unwrap(), Some(t));
    }

    #[test]
    fn congruence_factor_is_det_squared() {
        let j = HermitianJ::new(CompositionAlgebra::<F7>::base()).unwrap();
        let m = [[F7::new(1), F7::new(2), F7::new(0)], [F7::new(3), F7::new(1), F7::new(4)], [F7::new(0), F7::new(5), F7::new(2)]];
        let det = scalars::mat_det(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        let g = congruence_map(&j, &m).unwrap();
        assert_eq!(is_similitude(&g, &j, &sample(&j, 40)).unwrap(), Some(det * det));
    }

    #[test]
    fn generic_map_is_not_a_similitude() {
        let j = HermitianJ::new(CompositionAlgebra::<F7>::base()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let matrix = (0..6).map(|_| scalars::random_vec(6, &mut rng)).collect();
        let g = LinearOp { matrix };
        assert_eq!(is_similitude(&g, &j, &sample(&j, 40)).unwrap(), None);
    }

    #[test]
    fn isotropic_sample_is_insufficient() {
        let j = HermitianJ::new(CompositionAlgebra::<F7>::base()).unwrap();
        let g = rescale_map(&j, &F7::new(2)).unwrap();
        let zero = vec![vec![F7::new(0); 6]];
        assert!(matches!(is_similitude(&g, &j, &zero), Err(Error::InsufficientSample(_))));
    }
}
