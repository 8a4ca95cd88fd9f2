use algver_core::check::Mode;
use algver_core::check::{CheckSummary, EXHAUSTIVE_BOUND};
use algver_core::composition::{parse_cd, CompositionAlgebra};
use algver_core::cubic::HermitianJ;
use algver_core::jordan::{check_jp_bounded, CorruptedPair, CubicPair, DualSpacePair, JordanPair};
use algver_core::{FieldDesc, Scalar};
use rand_chacha::ChaCha8Rng;

use super::{control, sampled, Ctx};
use crate::error::{CliError, CliResult};
use crate::fixtures::{Expect, JordanEntry, JordanFixture};
use crate::report::Entry;
use crate::with_field;

pub const AXIOMS: &str = "jordan.axioms";
pub const CONTROL: &str = "jordan.negative_control";

const FILE: &str = "jordan.json";

/// `dualspace(dim=n)`, `cubic(hermJ(cd(...)))` or `corrupted(<pair>)`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum PairSpec {
    Dual(usize),
    Cubic { base: FieldDesc, gammas: Vec<i64> },
    Corrupted(Box<PairSpec>),
}

impl PairSpec {
    fn parse(s: &str) -> Result<PairSpec, String> {
        let s = s.trim();
        let call = |name: &str| s.strip_prefix(name).and_then(|r| r.strip_prefix('(')).and_then(|r| r.strip_suffix(')'));
        if let Some(inner) = call("corrupted") {
            return Ok(PairSpec::Corrupted(Box::new(PairSpec::parse(inner)?)));
        }
        if let Some(inner) = call("dualspace") {
            let dim = inner.trim().strip_prefix("dim=").and_then(|d| d.trim().parse().ok()).ok_or_else(|| format!("pair '{s}': expected dualspace(dim=n)"))?;
            return Ok(PairSpec::Dual(dim));
        }
        if let Some(inner) = call("cubic") {
            let cd =
                inner.trim().strip_prefix("hermJ(").and_then(|r| r.strip_suffix(')')).ok_or_else(|| format!("pair '{s}': expected cubic(hermJ(cd(...)))"))?;
            let (base, gammas) = parse_cd(cd).map_err(|e| e.to_string())?;
            return Ok(PairSpec::Cubic { base, gammas });
        }
        Err(format!("unknown pair '{s}'"))
    }

    fn base(&self) -> Option<&FieldDesc> {
        match self {
            PairSpec::Dual(_) => None,
            PairSpec::Cubic { base, .. } => Some(base),
            PairSpec::Corrupted(p) => p.base(),
        }
    }

    fn label(&self, field: &FieldDesc) -> String {
        match self {
            PairSpec::Dual(d) => format!("dualspace(dim={d}) over {field}"),
            PairSpec::Cubic { gammas, .. } => format!("cubic(hermJ({}))", super::cd_label(field, gammas)),
            PairSpec::Corrupted(p) => format!("corrupted({})", p.label(field)),
        }
    }
}

fn hermitian<S: Scalar>(gammas: &[i64]) -> algver_core::Result<HermitianJ<S>> {
    let g: Vec<S> = gammas.iter().map(|&x| S::from_i64(x)).collect();
    HermitianJ::new(CompositionAlgebra::new(&g)?)
}

fn check<S: Scalar, P: JordanPair<S>>(p: &P, samples: u64, rng: &mut ChaCha8Rng) -> algver_core::Result<CheckSummary> {
    check_jp_bounded(p, samples, EXHAUSTIVE_BOUND, rng)
}

fn run_spec<S: Scalar>(spec: &PairSpec, samples: u64, rng: &mut ChaCha8Rng) -> algver_core::Result<CheckSummary> {
    match spec {
        PairSpec::Dual(d) => check::<S, _>(&DualSpacePair::new(*d), samples, rng),
        PairSpec::Cubic { gammas, .. } => check(&CubicPair::new(hermitian::<S>(gammas)?)?, samples, rng),
        PairSpec::Corrupted(inner) => match inner.as_ref() {
            PairSpec::Dual(d) => check::<S, _>(&CorruptedPair { inner: DualSpacePair::new(*d) }, samples, rng),
            PairSpec::Cubic { gammas, .. } => check(&CorruptedPair { inner: CubicPair::new(hermitian::<S>(gammas)?)? }, samples, rng),
            PairSpec::Corrupted(_) => Err(algver_core::Error::Unsupported("nested corruption".into())),
        },
    }
}

fn entry<S: Scalar>(ctx: &Ctx, spec: &PairSpec, label: String, e: &JordanEntry, samples: u64) -> Entry {
    let id = match e.expect {
        Expect::Pass => AXIOMS,
        Expect::Fail => CONTROL,
    };
    let mut rng = ctx.rng(id, &label);
    let result = run_spec::<S>(spec, samples, &mut rng);
    if e.exhaustive {
        if let Ok(s) = &result {
            if s.mode != Mode::Exhaustive {
                return Entry::fail(id, label, format!("argument space not enumerated ({} sampled cases)", s.cases));
            }
        }
    }
    match e.expect {
        Expect::Pass => sampled(id, label, result, samples),
        Expect::Fail => control(id, label, result),
    }
}

pub fn run(ctx: &Ctx) -> CliResult<Vec<Entry>> {
    let fx: JordanFixture = ctx.fixtures.load("jordan")?;
    let mut out = Vec::new();
    for e in &fx.pairs {
        let spec = PairSpec::parse(&e.pair).map_err(|m| CliError::fixture(FILE, m))?;
        let named = match (&e.field, spec.base()) {
            (Some(f), _) => f.parse::<FieldDesc>().map_err(|err| CliError::fixture(FILE, err))?,
            (None, Some(b)) => b.clone(),
            (None, None) => return Err(CliError::fixture(FILE, format!("pair '{}' needs a field", e.pair))),
        };
        let (field, kind) = ctx.field_kind(&named, FILE)?;
        let samples = ctx.cfg.trials.or(e.samples).unwrap_or(500);
        let label = spec.label(&field);
        out.push(with_field!(kind, S => entry::<S>(ctx, &spec, label, e, samples)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_grammar() {
        assert_eq!(PairSpec::parse("dualspace(dim=2)").unwrap(), PairSpec::Dual(2));
        let c = PairSpec::parse("corrupted(cubic(hermJ(cd(gf7;1,1,1))))").unwrap();
        assert_eq!(c.base(), Some(&FieldDesc::Prime(7)));
        assert!(PairSpec::parse("dualspace(2)").is_err());
    }
}
