use algver_core::theta::{sim_image_gl2e, sim_image_gu, sim_image_torus, SimImage};
use algver_core::{FieldDesc, Scalar};
use serde_json::json;

use super::Ctx;
use crate::error::{CliError, CliResult};
use crate::field::FieldKind;
use crate::fixtures::{SimilitudeEntry, SimilitudeFixture};
use crate::report::Entry;
use crate::with_field;

pub const GL2E: &str = "similitude.gl2e";
pub const TORUS: &str = "similitude.torus";
pub const GU: &str = "similitude.gu";
pub const CONTROL: &str = "similitude.control";

const FILE: &str = "similitude.json";

fn over_field<S: Scalar>(map: &str) -> algver_core::Result<SimImage> {
    match map {
        "gl2e" => sim_image_gl2e::<S>(true),
        "sl2" => sim_image_gl2e::<S>(false),
        "torus" => sim_image_torus::<S>(false),
        _ => sim_image_torus::<S>(true),
    }
}

fn unitary<S: Scalar>(n: usize, only_unitary: bool) -> algver_core::Result<SimImage> {
    sim_image_gu::<S>(n, only_unitary)
}

fn evaluate(e: &SimilitudeEntry) -> CliResult<(&'static str, String, algver_core::Result<SimImage>)> {
    let bad = |m: &str| CliError::fixture(FILE, format!("entry {}: {m}", e.map));
    match e.map.as_str() {
        "gl2e" | "sl2" | "torus" | "torus_frozen" => {
            let desc: FieldDesc = e.field.as_deref().ok_or_else(|| bad("needs a field"))?.parse().map_err(|err| bad(&format!("{err}")))?;
            let kind = FieldKind::of(&desc).ok_or_else(|| bad("unsupported field"))?;
            let id = match e.map.as_str() {
                "gl2e" => GL2E,
                "torus" => TORUS,
                _ => CONTROL,
            };
            Ok((id, format!("{} over {desc}", e.map), with_field!(kind, S => over_field::<S>(&e.map))))
        }
        "gu" | "gu_unitary" => {
            let (q, n) = (e.q.ok_or_else(|| bad("needs q"))?, e.n.ok_or_else(|| bad("needs n"))?);
            let kind = FieldKind::quadratic_over(q).ok_or_else(|| bad("unsupported q"))?;
            let only_unitary = e.map == "gu_unitary";
            let id = if only_unitary { CONTROL } else { GU };
            Ok((id, format!("{} q={q} n={n}", e.map), with_field!(kind, S => unitary::<S>(n, only_unitary))))
        }
        other => Err(bad(&format!("unknown map '{other}'"))),
    }
}

pub fn run(ctx: &Ctx) -> CliResult<Vec<Entry>> {
    let fx: SimilitudeFixture = ctx.fixtures.load("similitude")?;
    let results: Vec<CliResult<_>> = std::thread::scope(|scope| {
        let handles: Vec<_> = fx.entries.iter().map(|e| scope.spawn(move || evaluate(e))).collect();
        handles.into_iter().map(|h| h.join().expect("similitude worker panicked")).collect()
    });
    let mut out = Vec::new();
    for (e, r) in fx.entries.iter().zip(results) {
        let (id, case, image) = r?;
        out.push(match image {
            Ok(img) => Entry::expect(id, case, img.surjective() == e.surjective, || {
                format!("image {} of {}, expected surjective = {}", img.image, img.target, e.surjective)
            })
            .with_detail(json!({ "image": img.image, "target": img.target })),
            Err(err) => Entry::fail(id, case, err.to_string()),
        });
    }
    Ok(out)
}
