mod boxpair;
mod hermitian;
mod pairs;

use std::fmt;

use rand::Rng;

use crate::check::{run_cases, CheckSummary, EXHAUSTIVE_BOUND};
use crate::cubic::LinearOp;
use crate::error::{Error, Result};
use crate::scalars::{self, Scalar};

pub use boxpair::{check_trace_self_adjoint, BoxPair};
pub use hermitian::{unitary_group, HermitianPair, Involutive};
pub use pairs::{CorruptedPair, CubicPair, DualSpacePair, TensorPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Pair of spaces `J⁺, J⁻` with quadratic maps `Q^ε(x)(y)`, `x ∈ J^ε`, `y ∈ J^{−ε}`.
pub trait JordanPair<S: Scalar>: Send + Sync {
    fn dim(&self, eps: Sign) -> usize;
    fn q(&self, eps: Sign, x: &[S], y: &[S]) -> Vec<S>;
    fn name(&self) -> String;

    /// `{x,y,z}^ε = Q^ε(x+z)(y) − Q^ε(x)(y) − Q^ε(z)(y)`.
    fn bracket(&self, eps: Sign, x: &[S], y: &[S], z: &[S]) -> Vec<S> {
        let s = self.q(eps, &scalars::vadd(x, z), y);
        scalars::vsub(&scalars::vsub(&s, &self.q(eps, x, y)), &self.q(eps, z, y))
    }

    fn try_bracket(&self, eps: Sign, x: &[S], y: &[S], z: &[S]) -> Result<Vec<S>> {
        let (d, e) = (self.dim(eps), self.dim(eps.neg()));
        if x.len() != d || z.len() != d || y.len() != e {
            return Err(Error::SlotMismatch(format!("bracket^{eps} takes slots of sizes ({d}, {e}, {d}), got ({}, {}, {})", x.len(), y.len(), z.len())));
        }
        Ok(self.bracket(eps, x, y, z))
    }
}

/// Runs `f` over tuples of vectors with the given lengths, exhaustively when
/// the flattened tuple space is within `bound`.
pub(crate) fn run_slots<S, R, F>(dims: &[usize], trials: u64, bound: u64, rng: &mut R, mut f: F) -> Result<CheckSummary>
where
    S: Scalar,
    R: Rng + ?Sized,
    F: FnMut(&[&[S]]) -> Result<()>,
{
    let total: usize = dims.iter().sum();
    run_cases::<S, _, _>(total, 1, trials, bound, rng, |args| {
        let mut slots = Vec::with_capacity(dims.len());
        let mut rest: &[S] = &args[0];
        for &d in dims {
            let (head, tail) = rest.split_at(d);
            slots.push(head);
            rest = tail;
        }
        f(&slots)
    })
}

fn slot_witness<S: Scalar>(slots: &[&[S]]) -> String {
    let parts: Vec<String> = slots.iter().map(|s| scalars::fmt_vec(s)).collect();
    format!("({})", parts.join(", "))
}

/// Verifies, for both signs,
/// JP1 `{x,y,Q(x)z} = Q(x){y,x,z}`,
/// JP2 `{Q(x)y,y,z} = {x,Q(y)x,z}` and
/// JP3 `Q(Q(x)y) = Q(x)Q(y)Q(x)`.
pub fn check_jp<S: Scalar, P: JordanPair<S>, R: Rng + ?Sized>(pair: &P, trials: u64, rng: &mut R) -> Result<CheckSummary> {
    check_jp_bounded(pair, trials, EXHAUSTIVE_BOUND, rng)
}

pub fn check_jp_bounded<S: Scalar, P: JordanPair<S>, R: Rng + ?Sized>(pair: &P, trials: u64, bound: u64, rng: &mut R) -> Result<CheckSummary> {
    let mut cases = 0;
    let mut mode = crate::check::Mode::Exhaustive;
    for eps in Sign::BOTH {
        let (d, e) = (pair.dim(eps), pair.dim(eps.neg()));
        let fail = |axiom: &str, slots: &[&[S]]| Err(Error::violation(format!("{axiom} (eps = {eps})"), slot_witness(slots)));
        let s1 = run_slots::<S, _, _>(&[d, e, e], trials, bound, rng, |s| {
            let (x, y, z) = (s[0], s[1], s[2]);
            let qx_z = pair.q(eps, x, z);
            if pair.bracket(eps, x, y, &qx_z) != pair.q(eps, x, &pair.bracket(eps.neg(), y, x, z)) {
                return fail("JP1", s);
            }
            let qxy = pair.q(eps, x, y);
            if pair.q(eps, &qxy, z) != pair.q(eps, x, &pair.q(eps.neg(), y, &pair.q(eps, x, z))) {
                return fail("JP3", s);
            }
            Ok(())
        })?;
        let s2 = run_slots::<S, _, _>(&[d, e, d], trials, bound, rng, |s| {
            let (x, y, z) = (s[0], s[1], s[2]);
            let qxy = pair.q(eps, x, y);
            let qyx = pair.q(eps.neg(), y, x);
            if pair.bracket(eps, &qxy, y, z) != pair.bracket(eps, x, &qyx, z) {
                return fail("JP2", s);
            }
            Ok(())
        })?;
        for s in [s1, s2] {
            cases += s.cases;
            if s.mode == crate::check::Mode::Random {
                mode = s.mode;
            }
        }
    }
    Ok(CheckSummary { mode, cases })
}

/// Tests `φ^ε(Q_J^ε(x)(y)) = Q_V^ε(φ^ε x)(φ^{−ε} y)` for both signs.
pub fn is_hom<S, A, B, R>(phi_plus: &LinearOp<S>, phi_minus: &LinearOp<S>, source: &A, target: &B, trials: u64, rng: &mut R) -> Result<bool>
where
    S: Scalar,
    A: JordanPair<S>,
    B: JordanPair<S>,
    R: Rng + ?Sized,
{
    for (eps, phi) in [(Sign::Plus, phi_plus), (Sign::Minus, phi_minus)] {
        let cols = phi.matrix.first().map_or(0, Vec::len);
        if phi.dim() != target.dim(eps) || cols != source.dim(eps) {
            return Err(Error::ShapeMismatch(format!("phi^{eps} is {}x{cols}, expected {}x{}", phi.dim(), target.dim(eps), source.dim(eps))));
        }
    }
    let phi = |eps: Sign| if eps == Sign::Plus { phi_plus } else { phi_minus };
    for eps in Sign::BOTH {
        let dims = [source.dim(eps), source.dim(eps.neg())];
        let res = run_slots::<S, _, _>(&dims, trials, EXHAUSTIVE_BOUND, rng, |s| {
            let lhs = phi(eps).apply(&source.q(eps, s[0], s[1]));
            let rhs = target.q(eps, &phi(eps).apply(s[0]), &phi(eps.neg()).apply(s[1]));
            if lhs != rhs {
                return Err(Error::violation("homomorphism", slot_witness(s)));
            }
            Ok(())
        });
        match res {
            Ok(_) => {}
            Err(Error::PropertyViolation { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// `(g, (g⁻¹)ᵀ)`, an automorphism of the dual-space pair.
pub fn contragredient<S: Scalar>(g: &[Vec<S>]) -> Result<(LinearOp<S>, LinearOp<S>)> {
    let inv = scalars::mat_inverse(g)?;
    let n = inv.len();
    let t = (0..n).map(|i| (0..n).map(|j| inv[j][i].clone()).collect()).collect();
    Ok((LinearOp { matrix: g.to_vec() }, LinearOp { matrix: t }))
}
