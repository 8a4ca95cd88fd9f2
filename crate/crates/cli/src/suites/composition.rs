use algver_core::check::EXHAUSTIVE_BOUND;
use algver_core::composition::{check_composition_bounded, CompositionAlgebra};
use algver_core::Scalar;

use super::{algebras, cd_label, control, sampled, Ctx};
use crate::error::CliResult;
use crate::fixtures::CompositionFixture;
use crate::report::Entry;
use crate::with_field;

pub const IDENTITIES: &str = "composition.identities";
pub const CONTROL: &str = "composition.negative_control";

fn algebra<S: Scalar>(gammas: &[i64]) -> algver_core::Result<CompositionAlgebra<S>> {
    let g: Vec<S> = gammas.iter().map(|&x| S::from_i64(x)).collect();
    CompositionAlgebra::new(&g)
}

fn identities<S: Scalar>(ctx: &Ctx, label: String, gammas: &[i64], samples: u64) -> Entry {
    let mut rng = ctx.rng(IDENTITIES, &label);
    let result = algebra::<S>(gammas).and_then(|c| check_composition_bounded(&c, samples, EXHAUSTIVE_BOUND, &mut rng));
    let mut e = sampled(IDENTITIES, label, result, samples);
    if let Some(d) = e.detail.as_object_mut() {
        d.insert("dim".into(), (1usize << gammas.len()).into());
    }
    e
}

fn corrupted<S: Scalar>(ctx: &Ctx, label: String, gammas: &[i64], samples: u64) -> Entry {
    let mut rng = ctx.rng(CONTROL, &label);
    let result = algebra::<S>(gammas).and_then(|c| check_composition_bounded(&c.corrupted(), samples, EXHAUSTIVE_BOUND, &mut rng));
    control(CONTROL, label, result)
}

pub fn run(ctx: &Ctx) -> CliResult<Vec<Entry>> {
    let fx: CompositionFixture = ctx.fixtures.load("composition")?;
    let samples = ctx.cfg.trials_or(fx.samples);
    let mut out = Vec::new();
    for (desc, kind, gammas) in algebras(ctx, &fx.algebras, "composition.json")? {
        let label = cd_label(&desc, &gammas);
        out.push(with_field!(kind, S => identities::<S>(ctx, label, &gammas, samples)));
    }
    for (desc, kind, gammas) in algebras(ctx, std::slice::from_ref(&fx.control), "composition.json")? {
        let label = cd_label(&desc, &gammas);
        out.push(with_field!(kind, S => corrupted::<S>(ctx, label, &gammas, samples)));
    }
    Ok(out)
}
