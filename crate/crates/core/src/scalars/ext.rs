use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::Rng;

use super::{Fp, Rational, Scalar};
use crate::error::Result;

/// Compile-time description of a simple extension `Base[u]/(f(u))`.
pub trait ExtSpec: Clone + Copy + PartialEq + Eq + Hash + fmt::Debug + Default + Send + Sync + 'static {
    type Base: Scalar;
    /// Monic modulus, coefficients from the constant term upward.
    const MODULUS: &'static [i64];
    const NAME: &'static str;

    fn degree() -> usize {
        Self::MODULUS.len() - 1
    }
}

macro_rules! ext_spec {
    ($name:ident, $base:ty, $modulus:expr, $label:expr) => {
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
        pub struct $name;
        impl ExtSpec for $name {
            type Base = $base;
            const MODULUS: &'static [i64] = $modulus;
            const NAME: &'static str = $label;
        }
    };
}

ext_spec!(Gf4Spec, Fp<2>, &[1, 1, 1], "gf(2^2;u^2+u+1)");
ext_spec!(Gf9Spec, Fp<3>, &[1, 0, 1], "gf(3^2;u^2+1)");
ext_spec!(Gf25Spec, Fp<5>, &[-2, 0, 1], "gf(5^2;u^2-2)");
ext_spec!(Gf49Spec, Fp<7>, &[1, 0, 1], "gf(7^2;u^2+1)");
ext_spec!(QiSpec, Rational, &[1, 0, 1], "Q(u;u^2+1)");

/// Element of `M::Base[u]/(f)` in the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ext<M: ExtSpec> {
    coeffs: Vec<M::Base>,
    _spec: PhantomData<M>,
}

impl<M: ExtSpec> Ext<M> {
    pub fn from_coeffs(mut coeffs: Vec<M::Base>) -> Self {
        let d = M::degree();
        assert!(coeffs.len() <= d, "too many coefficients for degree {d}");
        coeffs.resize(d, M::Base::zero());
        Ext { coeffs, _spec: PhantomData }
    }

    pub fn from_base(b: M::Base) -> Self {
        Self::from_coeffs(vec![b])
    }

    /// The class of `u`.
    pub fn generator() -> Self {
        let mut c = vec![M::Base::zero(); M::degree()];
        if M::degree() > 1 {
            c[1] = M::Base::one();
            Self::from_coeffs(c)
        } else {
            Self::from_base(-M::Base::from_i64(M::MODULUS[0]))
        }
    }

    pub fn coeffs(&self) -> &[M::Base] {
        &self.coeffs
    }

    fn modulus() -> Vec<M::Base> {
        M::MODULUS.iter().map(|&c| M::Base::from_i64(c)).collect()
    }

    /// Matrix of multiplication by `self` acting on coordinate columns.
    pub fn mul_matrix(&self) -> Vec<Vec<M::Base>> {
        let d = M::degree();
        let mut cols = Vec::with_capacity(d);
        let mut basis = Self::one();
        for _ in 0..d {
            cols.push((self.clone() * basis.clone()).coeffs);
            basis = basis * Self::generator();
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn norm(&self) -> M::Base {
        super::mat_det(&self.mul_matrix())
    }

    pub fn trace(&self) -> M::Base {
        let m = self.mul_matrix();
        (0..m.len()).fold(M::Base::zero(), |acc, i| acc + m[i][i].clone())
    }

    /// The nontrivial automorphism of a quadratic extension: `u ↦ -c1 - u`.
    pub fn conj(&self) -> Self {
        assert_eq!(M::degree(), 2, "conjugation is defined for quadratic extensions");
        let c1 = M::Base::from_i64(M::MODULUS[1]);
        let a = self.coeffs[0].clone();
        let b = self.coeffs[1].clone();
        Self::from_coeffs(vec![a - b.clone() * c1, -b])
    }
}

impl<M: ExtSpec> fmt::Debug for Ext<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<M: ExtSpec> fmt::Display for Ext<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*u"),
                _ => format!("{c}*u^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl<M: ExtSpec> Add for Ext<M> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Ext { coeffs: super::vadd(&self.coeffs, &rhs.coeffs), _spec: PhantomData }
    }
}

impl<M: ExtSpec> Sub for Ext<M> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Ext { coeffs: super::vsub(&self.coeffs, &rhs.coeffs), _spec: PhantomData }
    }
}

impl<M: ExtSpec> Neg for Ext<M> {
    type Output = Self;
    fn neg(self) -> Self {
        Ext { coeffs: super::vneg(&self.coeffs), _spec: PhantomData }
    }
}

impl<M: ExtSpec> Mul for Ext<M> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = M::degree();
        let mut prod = vec![M::Base::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = prod[i + j].clone() + a.clone() * b.clone();
            }
        }
        let m = Self::modulus();
        for k in (d..prod.len()).rev() {
            let lead = prod[k].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, mi) in m.iter().enumerate().take(d) {
                prod[k - d + i] = prod[k - d + i].clone() - lead.clone() * mi.clone();
            }
            prod[k] = M::Base::zero();
        }
        prod.truncate(d);
        Ext { coeffs: prod, _spec: PhantomData }
    }
}

impl<M: ExtSpec> Zero for Ext<M> {
    fn zero() -> Self {
        Ext { coeffs: vec![M::Base::zero(); M::degree()], _spec: PhantomData }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<M: ExtSpec> One for Ext<M> {
    fn one() -> Self {
        Self::from_base(M::Base::one())
    }
}

impl<M: ExtSpec> Scalar for Ext<M> {
    fn try_inv(&self) -> Result<Self> {
        let inv = super::mat_inverse(&self.mul_matrix())?;
        Ok(Self::from_coeffs(inv.iter().map(|row| row[0].clone()).collect()))
    }

    fn characteristic() -> u64 {
        M::Base::characteristic()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_base(M::Base::from_i64(n))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_coeffs((0..M::degree()).map(|_| M::Base::random(rng)).collect())
    }

    fn elements() -> Option<Vec<Self>> {
        Some(
            super::all_vectors::<M::Base>(M::degree())?
                .into_iter()
                .map(|mut v| {
                    v.reverse();
                    Self::from_coeffs(v)
                })
                .collect(),
        )
    }

    fn order() -> Option<u64> {
        M::Base::order().map(|q| q.pow(M::degree() as u32))
    }

    fn descriptor() -> String {
        M::NAME.to_string()
    }
}
