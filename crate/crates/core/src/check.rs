//! Shared driver for exhaustive-or-random identity checks.

use rand::Rng;

use crate::error::Result;
use crate::scalars::Scalar;

/// Argument-tuple spaces at or below this size are enumerated exhaustively.
pub const EXHAUSTIVE_BOUND: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
        }
    }
}

/// Outcome of a passing check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub mode: Mode,
    pub cases: u64,
}

/// Size of the tuple space `(S^dim)^arity`, if finite and representable.
pub fn tuple_space<S: Scalar>(dim: usize, arity: usize) -> Option<u64> {
    let q = S::order()?;
    let mut total: u64 = 1;
    for _ in 0..dim * arity {
        total = total.checked_mul(q)?;
    }
    Some(total)
}

/// Runs `f` on every tuple of `arity` vectors of length `dim` when the space is
/// small, otherwise on `trials` seeded random tuples.
pub fn run_cases<S, R, F>(dim: usize, arity: usize, trials: u64, bound: u64, rng: &mut R, mut f: F) -> Result<CheckSummary>
where
    S: Scalar,
    R: Rng + ?Sized,
    F: FnMut(&[Vec<S>]) -> Result<()>,
{
    if let Some(total) = tuple_space::<S>(dim, arity).filter(|&t| t <= bound) {
        let elems = S::elements().expect("finite field");
        let q = elems.len() as u64;
        let mut args = vec![vec![S::zero(); dim]; arity];
        for idx in 0..total {
            let mut r = idx;
            for a in args.iter_mut() {
                for c in a.iter_mut() {
                    *c = elems[(r % q) as usize].clone();
                    r /= q;
                }
            }
            f(&args)?;
        }
        return Ok(CheckSummary { mode: Mode::Exhaustive, cases: total });
    }
    for _ in 0..trials {
        let args: Vec<Vec<S>> = (0..arity).map(|_| crate::scalars::random_vec(dim, rng)).collect();
        f(&args)?;
    }
    Ok(CheckSummary { mode: Mode::Random, cases: trials })
}

/// Formats a witness tuple for error payloads.
pub fn witness<S: Scalar>(args: &[Vec<S>]) -> String {
    let parts: Vec<String> = args.iter().map(|v| crate::scalars::fmt_vec(v)).collect();
    format!("({})", parts.join(", "))
}
