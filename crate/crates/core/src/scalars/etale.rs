use rand::Rng;

use super::{poly, Scalar};
use crate::error::{Error, Result};

/// Finite product of simple extensions `S[u]/(f_i)` of the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleAlgebra<S: Scalar> {
    /// Monic moduli; degree 1 means a copy of the base.
    moduli: Vec<Vec<S>>,
    offsets: Vec<usize>,
    rank: usize,
}

/// Element stored as concatenated power-basis coordinates per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaleElement<S: Scalar> {
    pub coords: Vec<S>,
}

/// Base-fixing automorphism: component permutation composed with a Frobenius power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EtaleAutomorphism {
    /// `perm[i]` is the component receiving component `i`.
    Permutation(Vec<usize>),
    /// `x ↦ x^(q^k)` on a single extension of a finite field of order q.
    Frobenius { q: u64, k: usize },
    /// `u ↦ -c1 - u` on a single quadratic extension.
    QuadraticConjugation,
}

impl<S: Scalar> EtaleAlgebra<S> {
    /// Validates each modulus as monic and irreducible.
    pub fn new(moduli: Vec<Vec<S>>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidField("étale algebra needs at least one component".into()));
        }
        for m in &moduli {
            let d = poly::degree(m).ok_or_else(|| Error::InvalidField("zero modulus".into()))?;
            if d == 0 || m.len() != d + 1 || !m[d].is_one() {
                return Err(Error::InvalidField("modulus must be monic of positive degree".into()));
            }
            if d > 1 && !is_irreducible::<S>(m)? {
                return Err(Error::InvalidField("component modulus is reducible".into()));
            }
        }
        let mut offsets = Vec::with_capacity(moduli.len());
        let mut rank = 0;
        for m in &moduli {
            offsets.push(rank);
            rank += m.len() - 1;
        }
        Ok(EtaleAlgebra { moduli, offsets, rank })
    }

    /// `S^n` with componentwise operations.
    pub fn split(n: usize) -> Self {
        let lin = vec![S::zero(), S::one()];
        EtaleAlgebra::new(vec![lin; n.max(1)]).expect("split algebra is valid")
    }

    /// Single extension `S[u]/(f)`.
    pub fn field(modulus: Vec<S>) -> Result<Self> {
        EtaleAlgebra::new(vec![modulus])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> usize {
        self.moduli.len()
    }

    pub fn component_degree(&self, i: usize) -> usize {
        self.moduli[i].len() - 1
    }

    pub fn is_split(&self) -> bool {
        self.moduli.iter().all(|m| m.len() == 2)
    }

    pub fn element(&self, coords: Vec<S>) -> Result<EtaleElement<S>> {
        if coords.len() != self.rank {
            return Err(Error::ShapeMismatch(format!("expected {} coordinates, got {}", self.rank, coords.len())));
        }
        Ok(EtaleElement { coords })
    }

    pub fn zero(&self) -> EtaleElement<S> {
        EtaleElement { coords: vec![S::zero(); self.rank] }
    }

    pub fn one(&self) -> EtaleElement<S> {
        self.scalar(S::one())
    }

    pub fn scalar(&self, s: S) -> EtaleElement<S> {
        let mut c = vec![S::zero(); self.rank];
        for &o in &self.offsets {
            c[o] = s.clone();
        }
        EtaleElement { coords: c }
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> EtaleElement<S> {
        EtaleElement { coords: super::random_vec(self.rank, rng) }
    }

    fn component<'a>(&self, x: &'a EtaleElement<S>, i: usize) -> &'a [S] {
        let o = self.offsets[i];
        &x.coords[o..o + self.component_degree(i)]
    }

    fn check(&self, x: &EtaleElement<S>) -> Result<()> {
        if x.coords.len() == self.rank {
            Ok(())
        } else {
            Err(Error::IncompatibleFields(format!("element of rank {} in algebra of rank {}", x.coords.len(), self.rank)))
        }
    }

    pub fn add(&self, x: &EtaleElement<S>, y: &EtaleElement<S>) -> EtaleElement<S> {
        EtaleElement { coords: super::vadd(&x.coords, &y.coords) }
    }

    pub fn sub(&self, x: &EtaleElement<S>, y: &EtaleElement<S>) -> EtaleElement<S> {
        EtaleElement { coords: super::vsub(&x.coords, &y.coords) }
    }

    pub fn scale(&self, s: &S, x: &EtaleElement<S>) -> EtaleElement<S> {
        EtaleElement { coords: super::vscale(s, &x.coords) }
    }

    pub fn mul(&self, x: &EtaleElement<S>, y: &EtaleElement<S>) -> EtaleElement<S> {
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.components() {
            let d = self.component_degree(i);
            let mut p = poly::rem(&poly::mul(self.component(x, i), self.component(y, i)), &self.moduli[i]);
            p.resize(d, S::zero());
            out.extend(p);
        }
        EtaleElement { coords: out }
    }

    pub fn try_mul(&self, x: &EtaleElement<S>, y: &EtaleElement<S>) -> Result<EtaleElement<S>> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn inv(&self, x: &EtaleElement<S>) -> Result<EtaleElement<S>> {
        let m = self.mul_matrix(x);
        let inv = super::mat_inverse(&m)?;
        let one = self.one();
        Ok(EtaleElement { coords: super::mat_vec(&inv, &one.coords) })
    }

    /// Matrix of `y ↦ x·y` on coordinate columns.
    pub fn mul_matrix(&self, x: &EtaleElement<S>) -> Vec<Vec<S>> {
        let n = self.rank;
        let mut m = vec![vec![S::zero(); n]; n];
        for j in 0..n {
            let mut e = vec![S::zero(); n];
            e[j] = S::one();
            let col = self.mul(x, &EtaleElement { coords: e });
            for i in 0..n {
                m[i][j] = col.coords[i].clone();
            }
        }
        m
    }

    pub fn norm(&self, x: &EtaleElement<S>) -> S {
        super::mat_det(&self.mul_matrix(x))
    }

    pub fn trace(&self, x: &EtaleElement<S>) -> S {
        let m = self.mul_matrix(x);
        (0..self.rank).fold(S::zero(), |acc, i| acc + m[i][i].clone())
    }

    /// Second characteristic coefficient: sum of principal 2×2 minors.
    pub fn quadratic_trace(&self, x: &EtaleElement<S>) -> S {
        let m = self.mul_matrix(x);
        let mut s = S::zero();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                s = s + m[i][i].clone() * m[j][j].clone() - m[i][j].clone() * m[j][i].clone();
            }
        }
        s
    }

    /// Norm as the product of Frobenius conjugates, for finite base fields.
    pub fn norm_by_frobenius(&self, x: &EtaleElement<S>) -> Result<S> {
        let q = S::order().ok_or_else(|| Error::Unsupported("Frobenius norm needs a finite base".into()))?;
        let mut acc = S::one();
        for i in 0..self.components() {
            let d = self.component_degree(i);
            let m = &self.moduli[i];
            let xi = self.component(x, i).to_vec();
            let mut prod = vec![S::one()];
            let mut conj = xi.clone();
            for _ in 0..d {
                prod = poly::mulmod(&prod, &conj, m);
                conj = poly::powmod(&conj, q, m);
            }
            let c = prod.first().cloned().unwrap_or_else(S::zero);
            if poly::degree(&prod).unwrap_or(0) != 0 {
                return Err(Error::Unsupported("conjugate product left the base field".into()));
            }
            acc = acc * c;
        }
        Ok(acc)
    }

    /// `x^# = x² − T(x)x + S(x)·1`, total on rank-3 algebras.
    pub fn sharp_cubic(&self, x: &EtaleElement<S>) -> Result<EtaleElement<S>> {
        if self.rank != 3 {
            return Err(Error::RankMismatch { expected: 3, found: self.rank });
        }
        self.check(x)?;
        let x2 = self.mul(x, x);
        let t = self.trace(x);
        let s = self.quadratic_trace(x);
        Ok(self.add(&self.sub(&x2, &self.scale(&t, x)), &self.scalar(s)))
    }

    pub fn automorphisms(&self) -> Result<Vec<EtaleAutomorphism>> {
        if self.is_split() {
            return Ok(permutations(self.components()).into_iter().map(EtaleAutomorphism::Permutation).collect());
        }
        if self.components() == 1 {
            let d = self.rank;
            if let Some(q) = S::order() {
                return Ok((0..d).map(|k| EtaleAutomorphism::Frobenius { q, k }).collect());
            }
            if d == 2 {
                return Ok(vec![EtaleAutomorphism::Permutation(vec![0]), EtaleAutomorphism::QuadraticConjugation]);
            }
            return Err(Error::Unsupported("automorphisms of non-quadratic extensions of Q".into()));
        }
        Err(Error::Unsupported("automorphisms of mixed non-split products".into()))
    }

    pub fn apply(&self, aut: &EtaleAutomorphism, x: &EtaleElement<S>) -> EtaleElement<S> {
        match aut {
            EtaleAutomorphism::Permutation(perm) => {
                let mut out = vec![S::zero(); self.rank];
                for (i, &target) in perm.iter().enumerate() {
                    let src = self.component(x, i);
                    let o = self.offsets[target];
                    out[o..o + src.len()].clone_from_slice(src);
                }
                EtaleElement { coords: out }
            }
            EtaleAutomorphism::Frobenius { q, k } => {
                let m = &self.moduli[0];
                let mut y = x.coords.clone();
                for _ in 0..*k {
                    y = poly::powmod(&y, *q, m);
                }
                y.resize(self.rank, S::zero());
                EtaleElement { coords: y }
            }
            EtaleAutomorphism::QuadraticConjugation => {
                let c1 = self.moduli[0][1].clone();
                let a = x.coords[0].clone();
                let b = x.coords[1].clone();
                EtaleElement { coords: vec![a - b.clone() * c1, -b] }
            }
        }
    }
}

fn is_irreducible<S: Scalar>(m: &[S]) -> Result<bool> {
    if let Some(q) = S::order() {
        return Ok(poly::is_irreducible_finite(m, q));
    }
    let d = m.len() - 1;
    if d > 3 {
        return Err(Error::Unsupported("irreducibility over Q beyond degree 3".into()));
    }
    // Degree ≤ 3 over Q: irreducible iff rootless. Candidate roots come from
    // the rational root theorem after clearing denominators.
    let roots = rational_root_candidates(m)?;
    Ok(!roots.iter().any(|r| poly::eval(m, r).is_zero()))
}

fn rational_root_candidates<S: Scalar>(m: &[S]) -> Result<Vec<S>> {
    let text: Vec<String> = m.iter().map(|c| c.to_string()).collect();
    let parsed: Option<Vec<(i64, i64)>> = text
        .iter()
        .map(|t| match t.split_once('/') {
            Some((a, b)) => Some((a.parse().ok()?, b.parse().ok()?)),
            None => Some((t.parse().ok()?, 1)),
        })
        .collect();
    let parsed = parsed.ok_or_else(|| Error::Unsupported("coefficients too large for root search".into()))?;
    let lcm = parsed.iter().fold(1i64, |acc, &(_, b)| num_integer::lcm(acc, b));
    let ints: Vec<i64> = parsed.iter().map(|&(a, b)| a * (lcm / b)).collect();
    let divisors = |n: i64| -> Vec<i64> {
        let n = n.abs();
        (1..=n).filter(|d| n % d == 0).collect()
    };
    let c0 = ints[0];
    if c0 == 0 {
        return Ok(vec![S::zero()]);
    }
    let lead = *ints.last().expect("nonempty");
    let mut out = Vec::new();
    for p in divisors(c0) {
        for q in divisors(lead) {
            let r = S::from_i64(p).try_div(&S::from_i64(q))?;
            out.push(r.clone());
            out.push(-r);
        }
    }
    Ok(out)
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, Rational};
    use num_traits::{One, Zero};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F3 = Fp<3>;
    type F7 = Fp<7>;

    fn gf9() -> EtaleAlgebra<F3> {
        EtaleAlgebra::field(vec![F3::one(), F3::zero(), F3::one()]).unwrap()
    }

    #[test]
    fn split_norm_trace_sharp() {
        let e = EtaleAlgebra::<F7>::split(3);
        let x = e.element(vec![F7::new(2), F7::new(3), F7::new(5)]).unwrap();
        assert_eq!(e.norm(&x), F7::new(30));
        assert_eq!(e.trace(&x), F7::new(10));
        let s = e.sharp_cubic(&x).unwrap();
        assert_eq!(s.coords, vec![F7::new(15), F7::new(10), F7::new(6)]);
        let y = e.element(vec![F7::one(), F7::one(), F7::zero()]).unwrap();
        assert_eq!(e.sharp_cubic(&y).unwrap().coords, vec![F7::zero(), F7::zero(), F7::one()]);
        assert_eq!(e.trace(&e.one()), F7::new(3));
    }

    #[test]
    fn gf9_norm_of_u_matches_frobenius_orbit() {
        let k = gf9();
        let u = k.element(vec![F3::zero(), F3::one()]).unwrap();
        // u·u³ = u⁴ = (u²)² = 1 and u + u³ = u − u = 0.
        assert_eq!(k.norm(&u), F3::one());
        assert_eq!(k.norm_by_frobenius(&u).unwrap(), F3::one());
        assert_eq!(k.trace(&u), F3::zero());
    }

    #[test]
    fn sharp_requires_rank_three() {
        let e = EtaleAlgebra::<F7>::split(2);
        assert_eq!(e.sharp_cubic(&e.one()), Err(Error::RankMismatch { expected: 3, found: 2 }));
    }

    #[test]
    fn automorphism_groups_have_expected_size() {
        assert_eq!(EtaleAlgebra::<F7>::split(3).automorphisms().unwrap().len(), 6);
        assert_eq!(EtaleAlgebra::<F7>::split(2).automorphisms().unwrap().len(), 2);
        assert_eq!(gf9().automorphisms().unwrap().len(), 2);
        let mixed = EtaleAlgebra::new(vec![vec![F3::zero(), F3::one()], vec![F3::one(), F3::zero(), F3::one()]]).unwrap();
        assert!(matches!(mixed.automorphisms(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rejects_reducible_components() {
        let r = EtaleAlgebra::<F3>::field(vec![F3::new(2), F3::zero(), F3::one()]);
        assert!(r.is_err());
        let q = EtaleAlgebra::<Rational>::field(vec![Rational::from_i64(-4), Rational::zero(), Rational::one()]);
        assert!(q.is_err());
        let qi = EtaleAlgebra::<Rational>::field(vec![Rational::one(), Rational::zero(), Rational::one()]);
        assert!(qi.is_ok());
    }

    #[test]
    fn frobenius_norm_agrees_with_determinant_on_gf9() {
        let k = gf9();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let x = k.random(&mut rng);
            assert_eq!(k.norm(&x), k.norm_by_frobenius(&x).unwrap());
        }
    }
}
