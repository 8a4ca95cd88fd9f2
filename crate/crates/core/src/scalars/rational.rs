use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::Scalar;
use crate::error::{Error, Result};

pub type Rational = BigRational;

impl Scalar for BigRational {
    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn characteristic() -> u64 {
        0
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    /// Small numerators and denominators keep products of many samples cheap.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=4) };
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn order() -> Option<u64> {
        None
    }

    fn descriptor() -> String {
        "Q".to_string()
    }

    fn square(&self) -> Self {
        self * self
    }
}
