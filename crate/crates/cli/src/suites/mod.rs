use algver_core::check::{CheckSummary, Mode};
use algver_core::FieldDesc;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::config::{Suite, SuiteConfig};
use crate::error::{CliError, CliResult};
use crate::field::FieldKind;
use crate::fixtures::FixtureSource;
use crate::report::Entry;

pub mod clifford;
pub mod composition;
pub mod cubic;
pub mod jordan;
pub mod similitude;
pub mod theta;
pub mod tori;

/// Every check id a suite can emit; the anchor registry must match it exactly.
pub const CHECK_IDS: &[&str] = &[
    composition::IDENTITIES,
    composition::CONTROL,
    cubic::AXIOMS,
    cubic::ORACLE,
    cubic::RESCALE,
    cubic::CONTROL,
    jordan::AXIOMS,
    jordan::CONTROL,
    tori::GRID,
    tori::KERNEL,
    tori::DET,
    tori::CENTER,
    clifford::DECOMPOSITION,
    clifford::COCYCLE,
    clifford::HOMOGENEITY,
    clifford::GENUINE,
    theta::SEQUENCES,
    theta::INDUCTION,
    theta::CENTRAL,
    theta::OMEGA_CHI,
    theta::RESTRICTION,
    theta::HOWE,
    theta::SEESAW,
    theta::MULTIPLICITY_TWO,
    similitude::GL2E,
    similitude::TORUS,
    similitude::GU,
    similitude::CONTROL,
];

/// Shared inputs of a suite run.
pub struct Ctx<'a> {
    pub cfg: &'a SuiteConfig,
    pub fixtures: FixtureSource,
}

impl Ctx<'_> {
    /// Fresh generator for one check, independent of every other check.
    pub fn rng(&self, check: &str, case: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(fnv1a(&[&self.cfg.seed.to_le_bytes(), check.as_bytes(), b"\0", case.as_bytes()]))
    }

    /// Resolves a field named by a fixture, or by `--field` when set.
    pub fn field_kind(&self, fixture_desc: &FieldDesc, file: &str) -> CliResult<(FieldDesc, FieldKind)> {
        match &self.cfg.field {
            Some(d) => FieldKind::of(d).map(|k| (d.clone(), k)).ok_or_else(|| CliError::Config(format!("--field {d} is not supported"))),
            None => FieldKind::of(fixture_desc)
                .map(|k| (fixture_desc.clone(), k))
                .ok_or_else(|| CliError::fixture(file, format!("field {fixture_desc} is not supported"))),
        }
    }
}

fn fnv1a(parts: &[&[u8]]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in parts.iter().flat_map(|p| p.iter()) {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

pub fn run_suite(suite: Suite, ctx: &Ctx) -> CliResult<Vec<Entry>> {
    match suite {
        Suite::Composition => composition::run(ctx),
        Suite::Cubic => cubic::run(ctx),
        Suite::Jordan => jordan::run(ctx),
        Suite::Tori => tori::run(ctx),
        Suite::Clifford => clifford::run(ctx),
        Suite::Theta => theta::run(ctx),
        Suite::Similitude => similitude::run(ctx),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

/// Entry for a sampled identity check that needs `min_cases` random cases
/// unless the argument space was enumerated.
pub fn sampled(check: &'static str, case: String, result: algver_core::Result<CheckSummary>, min_cases: u64) -> Entry {
    match result {
        Ok(s) => {
            let detail = json!({ "mode": s.mode.as_str(), "cases": s.cases });
            let enough = s.mode == Mode::Exhaustive || s.cases >= min_cases;
            Entry::expect(check, case, enough, || format!("only {} cases checked", s.cases)).with_detail(detail)
        }
        Err(e) => Entry::fail(check, case, e.to_string()),
    }
}

/// Entry for a negative control: the check must fail with a property violation.
pub fn control(check: &'static str, case: String, result: algver_core::Result<CheckSummary>) -> Entry {
    use algver_core::Error;
    match result {
        Err(Error::PropertyViolation { identity, witness } | Error::AxiomFailure { identity, witness }) => {
            Entry::pass(check, case).with_detail(json!({ "identity": identity, "witness": witness }))
        }
        Err(e) => Entry::fail(check, case, format!("expected a property violation, got: {e}")),
        Ok(s) => Entry::fail(check, case, format!("corrupted structure passed {} cases", s.cases)),
    }
}

/// `cd(base; γ…)` strings, rebased onto `--field` when set and deduplicated.
pub fn algebras(ctx: &Ctx, specs: &[String], file: &str) -> CliResult<Vec<(FieldDesc, FieldKind, Vec<i64>)>> {
    let mut out: Vec<(FieldDesc, FieldKind, Vec<i64>)> = Vec::new();
    for s in specs {
        let (desc, gammas) = algver_core::composition::parse_cd(s).map_err(|e| CliError::fixture(file, e))?;
        let (desc, kind) = ctx.field_kind(&desc, file)?;
        if !out.iter().any(|(d, _, g)| *d == desc && *g == gammas) {
            out.push((desc, kind, gammas));
        }
    }
    Ok(out)
}

pub fn cd_label(desc: &FieldDesc, gammas: &[i64]) -> String {
    let g: Vec<String> = gammas.iter().map(i64::to_string).collect();
    format!("cd({desc};{})", g.join(","))
}
