use rand::Rng;

use crate::check::{run_cases, witness, CheckSummary, EXHAUSTIVE_BOUND};
use crate::error::{Error, Result};
use crate::scalars::{self, FieldDesc, Scalar};

/// Cayley–Dickson algebra of dimension 1, 2, 4 or 8 with a precomputed
/// monomial structure table: `e_i e_j = coef · e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionAlgebra<S: Scalar> {
    gammas: Vec<S>,
    dim: usize,
    table: Vec<(usize, S)>,
    norm_weights: Vec<S>,
}

/// Recursive doubling product `(a,b)(c,d) = (ac + γ d̄ b, da + b c̄)`.
fn cd_mul<S: Scalar>(x: &[S], y: &[S], gammas: &[S]) -> Vec<S> {
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = n / 2;
    let inner = &gammas[..gammas.len() - 1];
    let gamma = gammas.last().expect("one parameter per doubling");
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let left = scalars::vadd(&cd_mul(a, c, inner), &scalars::vscale(gamma, &cd_mul(&cd_conj(d), b, inner)));
    let right = scalars::vadd(&cd_mul(d, a, inner), &cd_mul(b, &cd_conj(c), inner));
    left.into_iter().chain(right).collect()
}

fn cd_conj<S: Scalar>(x: &[S]) -> Vec<S> {
    x.iter().enumerate().map(|(i, c)| if i == 0 { c.clone() } else { -c.clone() }).collect()
}

impl<S: Scalar> CompositionAlgebra<S> {
    /// The base field as a 1-dimensional composition algebra.
    pub fn base() -> Self {
        CompositionAlgebra { gammas: Vec::new(), dim: 1, table: vec![(0, S::one())], norm_weights: vec![S::one()] }
    }

    /// Iterated doubling with the given parameters.
    pub fn new(gammas: &[S]) -> Result<Self> {
        let mut c = Self::base();
        for g in gammas {
            c = c.double(g.clone())?;
        }
        Ok(c)
    }

    pub fn double(&self, gamma: S) -> Result<Self> {
        if self.dim >= 8 {
            return Err(Error::DimensionLimit(self.dim));
        }
        if gamma.is_zero() {
            return Err(Error::DegenerateForm("doubling parameter must be nonzero".into()));
        }
        let mut gammas = self.gammas.clone();
        gammas.push(gamma.clone());
        let dim = 2 * self.dim;
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = cd_mul(&unit::<S>(dim, i), &unit::<S>(dim, j), &gammas);
                let k = p.iter().position(|c| !c.is_zero()).expect("basis products are monomial");
                table.push((k, p[k].clone()));
            }
        }
        let mut norm_weights = self.norm_weights.clone();
        norm_weights.extend(self.norm_weights.iter().map(|w| -(gamma.clone() * w.clone())));
        Ok(CompositionAlgebra { gammas, dim, table, norm_weights })
    }

    /// Copy with the sign of one structure constant flipped; a negative control.
    pub fn corrupted(&self) -> Self {
        let mut c = self.clone();
        let idx = (self.dim - 1) * self.dim + (self.dim - 1);
        c.table[idx].1 = -c.table[idx].1.clone();
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gammas(&self) -> &[S] {
        &self.gammas
    }

    pub fn one(&self) -> Vec<S> {
        unit(self.dim, 0)
    }

    pub fn scalar(&self, s: S) -> Vec<S> {
        let mut v = scalars::vzero(self.dim);
        v[0] = s;
        v
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<S> {
        scalars::random_vec(self.dim, rng)
    }

    pub fn mul(&self, x: &[S], y: &[S]) -> Vec<S> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out: Vec<S> = scalars::vzero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let (k, c) = &self.table[i * self.dim + j];
                out[*k] = out[*k].clone() + c.clone() * xi.clone() * yj.clone();
            }
        }
        out
    }

    pub fn try_mul(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::IncompatibleAlgebras(format!("operands of length {} and {} in dimension {}", x.len(), y.len(), self.dim)));
        }
        Ok(self.mul(x, y))
    }

    pub fn conj(&self, x: &[S]) -> Vec<S> {
        cd_conj(x)
    }

    pub fn norm(&self, x: &[S]) -> S {
        x.iter().zip(&self.norm_weights).fold(S::zero(), |acc, (c, w)| acc + w.clone() * c.clone() * c.clone())
    }

    pub fn trace(&self, x: &[S]) -> S {
        x[0].clone() + x[0].clone()
    }

    /// Polar form `N(x+y) − N(x) − N(y) = T(x ȳ)`.
    pub fn polar(&self, x: &[S], y: &[S]) -> S {
        x.iter().zip(y).zip(&self.norm_weights).fold(S::zero(), |acc, ((a, b), w)| acc + w.clone() * (a.clone() * b.clone() + a.clone() * b.clone()))
    }

    /// Searches random triples for `(xy)z ≠ x(yz)`.
    pub fn nonassociative_witness<R: Rng + ?Sized>(&self, tries: usize, rng: &mut R) -> Option<[Vec<S>; 3]> {
        (0..tries).find_map(|_| {
            let (x, y, z) = (self.random(rng), self.random(rng), self.random(rng));
            let l = self.mul(&self.mul(&x, &y), &z);
            let r = self.mul(&x, &self.mul(&y, &z));
            (l != r).then_some([x, y, z])
        })
    }
}

fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = scalars::vzero(n);
    v[i] = S::one();
    v
}

/// Verifies multiplicativity of N, both alternative laws, that conjugation is
/// an anti-automorphism, `x x̄ = N(x)·1` and `x² = T(x)x − N(x)·1`.
pub fn check_composition<S: Scalar, R: Rng + ?Sized>(c: &CompositionAlgebra<S>, trials: u64, rng: &mut R) -> Result<CheckSummary> {
    check_composition_bounded(c, trials, EXHAUSTIVE_BOUND, rng)
}

pub fn check_composition_bounded<S: Scalar, R: Rng + ?Sized>(c: &CompositionAlgebra<S>, trials: u64, bound: u64, rng: &mut R) -> Result<CheckSummary> {
    let fail = |identity: &str, args: &[Vec<S>]| Err(Error::violation(identity, witness(args)));
    run_cases::<S, _, _>(c.dim, 2, trials, bound, rng, |args| {
        let (x, y) = (&args[0], &args[1]);
        let xy = c.mul(x, y);
        if c.norm(&xy) != c.norm(x) * c.norm(y) {
            return fail("norm multiplicativity", args);
        }
        let xx = c.mul(x, x);
        if c.mul(x, &xy) != c.mul(&xx, y) {
            return fail("left alternativity", args);
        }
        if c.mul(&c.mul(y, x), x) != c.mul(y, &xx) {
            return fail("right alternativity", args);
        }
        if c.conj(&xy) != c.mul(&c.conj(y), &c.conj(x)) {
            return fail("conjugation anti-automorphism", args);
        }
        if c.mul(x, &c.conj(x)) != c.scalar(c.norm(x)) {
            return fail("norm equals x times conjugate", args);
        }
        let rank2 = scalars::vsub(&scalars::vscale(&c.trace(x), x), &c.scalar(c.norm(x)));
        if xx != rank2 {
            return fail("rank-two characteristic identity", args);
        }
        Ok(())
    })
}

/// Parses `cd(base; γ1,γ2,γ3)`; `gf7` abbreviates `gf(7)`.
pub fn parse_cd(s: &str) -> Result<(FieldDesc, Vec<i64>)> {
    let bad = || Error::Parse(format!("composition algebra '{s}': expected cd(base; g1,...)"));
    let inner = s.trim().strip_prefix("cd(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let (base, params) = inner.split_once(';').unwrap_or((inner, ""));
    let base = base.trim();
    let base = match base.strip_prefix("gf") {
        Some(p) if p.chars().all(|c| c.is_ascii_digit()) && !p.is_empty() => format!("gf({p})"),
        _ => base.to_string(),
    };
    let desc: FieldDesc = base.parse()?;
    let gammas = params.split(',').map(str::trim).filter(|t| !t.is_empty()).map(|t| t.parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
    if gammas.len() > 3 {
        return Err(Error::DimensionLimit(8));
    }
    Ok((desc, gammas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F5 = Fp<5>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn complex_doubling_has_sum_of_squares_norm() {
        let c = CompositionAlgebra::new(&[q(-1)]).unwrap();
        assert_eq!(c.norm(&[q(3), q(4)]), q(25));
        let i = vec![q(0), q(1)];
        assert_eq!(c.mul(&i, &i), vec![q(-1), q(0)]);
    }

    #[test]
    fn split_octonions_are_isotropic_and_nonassociative() {
        let o = CompositionAlgebra::new(&[F5::new(1), F5::new(1), F5::new(1)]).unwrap();
        assert_eq!(o.dim(), 8);
        let mut v = vec![F5::new(0); 8];
        v[0] = F5::new(1);
        v[1] = F5::new(1);
        assert_eq!(o.norm(&v), F5::new(0));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(o.nonassociative_witness(100, &mut rng).is_some());
        assert!(matches!(o.double(F5::new(2)), Err(Error::DimensionLimit(8))));
    }

    #[test]
    fn unit_norm_and_conjugation() {
        let h = CompositionAlgebra::new(&[q(-1), q(-1)]).unwrap();
        assert_eq!(h.norm(&h.one()), q(1));
        assert_eq!(h.conj(&h.one()), h.one());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let h = CompositionAlgebra::new(&[F5::new(2), F5::new(3)]).unwrap().corrupted();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert!(matches!(check_composition(&h, 200, &mut rng), Err(Error::PropertyViolation { .. })));
    }

    #[test]
    fn parses_descriptor_strings() {
        let (d, g) = parse_cd("cd(gf7;1,1,1)").unwrap();
        assert_eq!(d, FieldDesc::Prime(7));
        assert_eq!(g, vec![1, 1, 1]);
        let (d, g) = parse_cd("cd(Q; -1)").unwrap();
        assert_eq!(d, FieldDesc::Rationals);
        assert_eq!(g, vec![-1]);
        assert!(parse_cd("cd(Q;1,1,1,1)").is_err());
    }
}
