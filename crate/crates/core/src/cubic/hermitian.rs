use super::CubicNorm;
use crate::composition::CompositionAlgebra;
use crate::error::{Error, Result};
use crate::scalars::{self, require_char_not_2_3, Scalar};

/// Hermitian 3×3 matrices over `C`. The element `(α,β,γ;a,b,c)`, stored as
/// `[α,β,γ,a..,b..,c..]`, is the matrix `[[α,c,b̄],[c̄,β,a],[b,ā,γ]]`.
#[derive(Clone, Debug)]
pub struct HermitianJ<S: Scalar> {
    c: CompositionAlgebra<S>,
    drop_cubic_term: bool,
}

impl<S: Scalar> HermitianJ<S> {
    pub fn new(c: CompositionAlgebra<S>) -> Result<Self> {
        require_char_not_2_3::<S>()?;
        Ok(HermitianJ { c, drop_cubic_term: false })
    }

    /// Norm without the `T((ab)c)` term; a negative control.
    pub fn corrupted(&self) -> Self {
        HermitianJ { drop_cubic_term: true, ..self.clone() }
    }

    pub fn composition(&self) -> &CompositionAlgebra<S> {
        &self.c
    }

    pub fn parts<'a>(&self, x: &'a [S]) -> (&'a S, &'a S, &'a S, &'a [S], &'a [S], &'a [S]) {
        let d = self.c.dim();
        (&x[0], &x[1], &x[2], &x[3..3 + d], &x[3 + d..3 + 2 * d], &x[3 + 2 * d..])
    }

    pub fn assemble(&self, diag: [S; 3], a: &[S], b: &[S], c: &[S]) -> Vec<S> {
        let mut v: Vec<S> = diag.to_vec();
        v.extend_from_slice(a);
        v.extend_from_slice(b);
        v.extend_from_slice(c);
        v
    }

    /// The symmetric matrix for `C = F`.
    pub fn to_matrix(&self, x: &[S]) -> Result<[[S; 3]; 3]> {
        if self.c.dim() != 1 {
            return Err(Error::Unsupported("matrix form is only available for C = F".into()));
        }
        let (al, be, ga, a, b, c) = self.parts(x);
        Ok([[al.clone(), c[0].clone(), b[0].clone()], [c[0].clone(), be.clone(), a[0].clone()], [b[0].clone(), a[0].clone(), ga.clone()]])
    }

    pub fn from_matrix(&self, m: &[[S; 3]; 3]) -> Vec<S> {
        vec![m[0][0].clone(), m[1][1].clone(), m[2][2].clone(), m[1][2].clone(), m[2][0].clone(), m[0][1].clone()]
    }
}

impl<S: Scalar> CubicNorm<S> for HermitianJ<S> {
    fn dim(&self) -> usize {
        3 + 3 * self.c.dim()
    }

    fn norm(&self, x: &[S]) -> S {
        let (al, be, ga, a, b, c) = self.parts(x);
        let cn = &self.c;
        let mut n = al.clone() * be.clone() * ga.clone() - al.clone() * cn.norm(a) - be.clone() * cn.norm(b) - ga.clone() * cn.norm(c);
        if !self.drop_cubic_term {
            n = n + cn.trace(&cn.mul(&cn.mul(a, b), c));
        }
        n
    }

    fn sharp(&self, x: &[S]) -> Vec<S> {
        let (al, be, ga, a, b, c) = self.parts(x);
        let cn = &self.c;
        let d0 = be.clone() * ga.clone() - cn.norm(a);
        let d1 = ga.clone() * al.clone() - cn.norm(b);
        let d2 = al.clone() * be.clone() - cn.norm(c);
        let na = scalars::vsub(&cn.conj(&cn.mul(b, c)), &scalars::vscale(al, a));
        let nb = scalars::vsub(&cn.conj(&cn.mul(c, a)), &scalars::vscale(be, b));
        let nc = scalars::vsub(&cn.conj(&cn.mul(a, b)), &scalars::vscale(ga, c));
        self.assemble([d0, d1, d2], &na, &nb, &nc)
    }

    fn trace_form(&self, x: &[S], y: &[S]) -> S {
        let (a1, b1, g1, a, b, c) = self.parts(x);
        let (a2, b2, g2, a_, b_, c_) = self.parts(y);
        let cn = &self.c;
        a1.clone() * a2.clone() + b1.clone() * b2.clone() + g1.clone() * g2.clone() + cn.polar(a, a_) + cn.polar(b, b_) + cn.polar(c, c_)
    }

    fn unit(&self) -> Vec<S> {
        let z = scalars::vzero(self.c.dim());
        self.assemble([S::one(), S::one(), S::one()], &z, &z, &z)
    }

    fn name(&self) -> String {
        format!("herm_J(dim C = {})", self.c.dim())
    }
}

/// Parses `(α,β,γ;[a],[b],[c])` with integer or `p/q` entries.
pub fn parse_hermitian_element<S: Scalar>(s: &str, comp_dim: usize) -> Result<Vec<S>> {
    let bad = |m: &str| Error::Parse(format!("cubic element '{s}': {m}"));
    let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(|| bad("missing parentheses"))?;
    let (diag, off) = inner.split_once(';').ok_or_else(|| bad("missing ';'"))?;
    let parse_num = |t: &str| -> Result<S> {
        let t = t.trim();
        match t.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad("bad numerator"))?;
                let q: i64 = q.trim().parse().map_err(|_| bad("bad denominator"))?;
                S::from_i64(p).try_div(&S::from_i64(q))
            }
            None => Ok(S::from_i64(t.parse().map_err(|_| bad("bad entry"))?)),
        }
    };
    let mut out = diag.split(',').map(parse_num).collect::<Result<Vec<S>>>()?;
    if out.len() != 3 {
        return Err(bad("expected three diagonal entries"));
    }
    let lists: Vec<&str> = off.split(']').map(str::trim).filter(|t| !t.is_empty()).collect();
    if lists.len() != 3 {
        return Err(bad("expected three bracketed lists"));
    }
    for l in lists {
        let body = l.trim_start_matches(',').trim().strip_prefix('[').ok_or_else(|| bad("missing '['"))?;
        let entries = body.split(',').map(parse_num).collect::<Result<Vec<S>>>()?;
        if entries.len() != comp_dim {
            return Err(bad("off-diagonal entry has the wrong dimension"));
        }
        out.extend(entries);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::check_cubic_axioms;
    use crate::scalars::{Fp, Rational};
    use num_traits::{One, Zero};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F7 = Fp<7>;

    #[test]
    fn dimensions_follow_the_table() {
        let dims: Vec<usize> = (0..4)
            .map(|k| {
                let c = CompositionAlgebra::new(&vec![F7::new(1); k]).unwrap();
                HermitianJ::new(c).unwrap().dim()
            })
            .collect();
        assert_eq!(dims, vec![6, 9, 15, 27]);
    }

    #[test]
    fn identity_has_norm_one_and_cross_doubles_sharp() {
        let j = HermitianJ::new(CompositionAlgebra::<Rational>::base()).unwrap();
        assert!(j.norm(&j.unit()).is_one());
        let x: Vec<Rational> = [1, 2, 3, 4, 5, 6].iter().map(|&n| Rational::from_i64(n)).collect();
        let two = Rational::from_i64(2);
        assert_eq!(j.cross(&x, &x), scalars::vscale(&two, &j.sharp(&x)));
        assert!(j.u_op(&x, &scalars::vzero(6)).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn characteristic_three_is_rejected() {
        let c = CompositionAlgebra::<Fp<3>>::base();
        assert!(matches!(HermitianJ::new(c), Err(Error::BadCharacteristic(3))));
    }

    #[test]
    fn octonion_albert_algebra_passes_axioms() {
        let c = CompositionAlgebra::new(&[F7::new(1), F7::new(3), F7::new(5)]).unwrap();
        let j = HermitianJ::new(c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        check_cubic_axioms(&j, 30, &mut rng).unwrap();
    }

    #[test]
    fn parses_fixture_elements() {
        let x: Vec<F7> = parse_hermitian_element("(1,2,3;[1,0],[0,1],[2,2])", 2).unwrap();
        assert_eq!(x.len(), 9);
        assert_eq!(x[8], F7::new(2));
        assert!(parse_hermitian_element::<F7>("(1,2;[1],[0],[2])", 1).is_err());
    }
}
