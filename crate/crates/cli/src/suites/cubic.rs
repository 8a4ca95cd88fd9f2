use algver_core::composition::CompositionAlgebra;
use algver_core::cubic::{check_cubic_axioms, is_similitude, rescale_map, CubicNorm, HermitianJ};
use algver_core::{Error, FieldDesc, Scalar};
use serde_json::json;

use super::{algebras, cd_label, control, sampled, Ctx};
use crate::error::{CliError, CliResult};
use crate::field::FieldKind;
use crate::fixtures::CubicFixture;
use crate::report::Entry;
use crate::with_field;

pub const AXIOMS: &str = "cubic.axioms";
pub const ORACLE: &str = "cubic.det_adj_oracle";
pub const RESCALE: &str = "cubic.rescale_factor";
pub const CONTROL: &str = "cubic.negative_control";

fn hermitian<S: Scalar>(gammas: &[i64]) -> algver_core::Result<HermitianJ<S>> {
    let g: Vec<S> = gammas.iter().map(|&x| S::from_i64(x)).collect();
    HermitianJ::new(CompositionAlgebra::new(&g)?)
}

/// Parses `a` or `a/b` with integer `a, b`.
fn parse_factor<S: Scalar>(s: &str) -> Result<S, String> {
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad factor '{s}'"));
    match s.split_once('/') {
        Some((a, b)) => S::from_i64(int(a)?).try_div(&S::from_i64(int(b)?)).map_err(|e| format!("factor '{s}': {e}")),
        None => Ok(S::from_i64(int(s)?)),
    }
}

fn det3<S: Scalar>(m: &[[S; 3]; 3]) -> S {
    let mut acc = S::zero();
    for (p, sign) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)] {
        let term = m[0][p[0]].clone() * m[1][p[1]].clone() * m[2][p[2]].clone();
        acc = if sign > 0 { acc + term } else { acc - term };
    }
    acc
}

fn adjugate<S: Scalar>(m: &[[S; 3]; 3]) -> [[S; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            m[r0][c0].clone() * m[r1][c1].clone() - m[r0][c1].clone() * m[r1][c0].clone()
        })
    })
}

fn axioms<S: Scalar>(ctx: &Ctx, label: String, gammas: &[i64], trials: u64) -> Entry {
    let mut rng = ctx.rng(AXIOMS, &label);
    sampled(AXIOMS, label, hermitian::<S>(gammas).and_then(|j| check_cubic_axioms(&j, trials, &mut rng)), trials)
}

fn oracle<S: Scalar>(ctx: &Ctx, label: String, count: u64) -> Entry {
    let mut rng = ctx.rng(ORACLE, &label);
    let result = (|| -> algver_core::Result<Option<String>> {
        let j = hermitian::<S>(&[])?;
        for _ in 0..count {
            let x = j.random(&mut rng);
            let m = j.to_matrix(&x)?;
            if j.norm(&x) != det3(&m) {
                return Ok(Some(format!("N(x) != det at {}", algver_core::scalars::fmt_vec(&x))));
            }
            if j.sharp(&x) != j.from_matrix(&adjugate(&m)) {
                return Ok(Some(format!("x# != adj at {}", algver_core::scalars::fmt_vec(&x))));
            }
        }
        Ok(None)
    })();
    match result {
        Ok(None) => Entry::pass(ORACLE, label).with_detail(json!({ "matrices": count })),
        Ok(Some(w)) => Entry::fail(ORACLE, label, w),
        Err(e) => Entry::fail(ORACLE, label, e.to_string()),
    }
}

fn rescale<S: Scalar>(ctx: &Ctx, label: String, gammas: &[i64], factor: &str, samples: u64) -> CliResult<Entry> {
    let t: S = parse_factor(factor).map_err(|e| CliError::fixture("cubic.json", e))?;
    let case = format!("{label} t={factor}");
    let mut rng = ctx.rng(RESCALE, &case);
    let result = (|| -> algver_core::Result<Option<S>> {
        let j = hermitian::<S>(gammas)?;
        let g = rescale_map(&j, &t)?;
        let sample: Vec<Vec<S>> = (0..samples).map(|_| j.random(&mut rng)).collect();
        is_similitude(&g, &j, &sample)
    })();
    Ok(match result {
        Ok(Some(f)) if f == t => Entry::pass(RESCALE, case).with_detail(json!({ "samples": samples })),
        Ok(Some(f)) => Entry::fail(RESCALE, case, format!("factor {f:?}, expected {t:?}")),
        Ok(None) => Entry::fail(RESCALE, case, "no single similitude factor fits the sample"),
        Err(Error::InsufficientSample(m)) => Entry::fail(RESCALE, case, m),
        Err(e) => Entry::fail(RESCALE, case, e.to_string()),
    })
}

fn corrupted<S: Scalar>(ctx: &Ctx, label: String, gammas: &[i64], trials: u64) -> Entry {
    let mut rng = ctx.rng(CONTROL, &label);
    control(CONTROL, label, hermitian::<S>(gammas).and_then(|j| check_cubic_axioms(&j.corrupted(), trials, &mut rng)))
}

pub fn run(ctx: &Ctx) -> CliResult<Vec<Entry>> {
    let fx: CubicFixture = ctx.fixtures.load("cubic")?;
    let trials = ctx.cfg.trials_or(fx.trials);
    let algs = algebras(ctx, &fx.algebras, "cubic.json")?;
    let mut out = Vec::new();
    for (desc, kind, gammas) in &algs {
        let label = format!("hermJ({})", cd_label(desc, gammas));
        out.push(with_field!(*kind, S => axioms::<S>(ctx, label, gammas, trials)));
    }
    let mut fields: Vec<(FieldDesc, FieldKind)> = Vec::new();
    for (desc, kind, _) in &algs {
        if !fields.iter().any(|(d, _)| d == desc) {
            fields.push((desc.clone(), *kind));
        }
    }
    let count = ctx.cfg.trials_or(fx.oracle_matrices);
    for (desc, kind) in &fields {
        out.push(with_field!(*kind, S => oracle::<S>(ctx, format!("{desc}"), count)));
    }
    for (desc, kind, gammas) in &algs {
        let label = format!("hermJ({})", cd_label(desc, gammas));
        for factor in &fx.rescale_factors {
            out.push(with_field!(*kind, S => rescale::<S>(ctx, label.clone(), gammas, factor, fx.rescale_samples))?);
        }
    }
    for (desc, kind, gammas) in algebras(ctx, std::slice::from_ref(&fx.control), "cubic.json")? {
        let label = format!("hermJ({})", cd_label(&desc, &gammas));
        out.push(with_field!(kind, S => corrupted::<S>(ctx, label, &gammas, trials)));
    }
    Ok(out)
}
