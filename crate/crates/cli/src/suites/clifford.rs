use algver_core::clifford::{
    clifford_restriction, cocycle_order_check, decompose_induction, extension, genuine_dim_check, intertwiners, radical, CliffordContext, MatrixRep,
};
use algver_core::groups::{character_table, cmat, CharacterTable};
use serde_json::json;

use super::Ctx;
use crate::error::{CliError, CliResult};
use crate::fixtures::{parse_group, resolve, resolve_all, resolve_subset, select_char, CliffordEntry, CliffordFixture, RepSpec};
use crate::report::Entry;

pub const DECOMPOSITION: &str = "clifford.isotypic_decomposition";
pub const COCYCLE: &str = "clifford.cocycle";
pub const HOMOGENEITY: &str = "clifford.restriction_homogeneity";
pub const GENUINE: &str = "clifford.genuine_dimension";

const FILE: &str = "clifford.json";

fn fixture_err(name: &str, m: impl std::fmt::Display) -> CliError {
    CliError::fixture(FILE, format!("{name}: {m}"))
}

/// Every `U` the fixture asks for, labelled.
fn representations(f: &CliffordEntry, ctx: &CliffordContext, table_n: &CharacterTable) -> CliResult<Vec<(String, MatrixRep)>> {
    let mut out = Vec::new();
    for (k, rep) in f.reps.iter().enumerate() {
        match rep {
            RepSpec::Linear => {
                for (i, chi) in table_n.irreps.iter().enumerate().filter(|(_, c)| c.degree_int().ok() == Some(1)) {
                    let u = MatrixRep::linear(&ctx.n.group, chi).map_err(|e| fixture_err(&f.name, e))?;
                    out.push((format!("{} U=chi{i}", f.name), u));
                }
            }
            RepSpec::Matrices { gens, images } => {
                let in_g = resolve_all(&ctx.g, &f.names, gens).map_err(|e| fixture_err(&f.name, e))?;
                let local = in_g
                    .iter()
                    .map(|&x| ctx.local(x).ok_or_else(|| fixture_err(&f.name, format!("generator {x} is not in N"))))
                    .collect::<CliResult<Vec<_>>>()?;
                let mats = images.iter().map(|m| cmat::from_strings(m)).collect::<algver_core::Result<Vec<_>>>().map_err(|e| fixture_err(&f.name, e))?;
                let u = MatrixRep::from_generators(&ctx.n.group, &local, &mats).map_err(|e| fixture_err(&f.name, e))?;
                out.push((format!("{} U=matrices{k}", f.name), u));
            }
        }
    }
    Ok(out)
}

fn run_fixture(f: &CliffordEntry) -> CliResult<Vec<Entry>> {
    let g = parse_group(&f.group).map_err(|e| fixture_err(&f.name, e))?;
    let normal_gens = resolve_subset(&g, &f.names, &f.normal).map_err(|e| fixture_err(&f.name, e))?;
    let normal = g.closure(&normal_gens);
    let ctx = CliffordContext::new(g, &normal).map_err(|e| fixture_err(&f.name, e))?;
    let table_n = character_table(&ctx.n.group).map_err(|e| fixture_err(&f.name, e))?;
    let table_g = character_table(&ctx.g).map_err(|e| fixture_err(&f.name, e))?;
    let mut out = Vec::new();
    for (case, u) in representations(f, &ctx, &table_n)? {
        match decompose_induction(&ctx, &u) {
            Ok(d) => {
                let dims: Vec<i64> = d.summands.iter().map(|s| s.dim_e).collect();
                out.push(Entry::pass(DECOMPOSITION, case.clone()).with_detail(json!({
                    "stabilizer_order": d.stabilizer.order(),
                    "dim_e": dims,
                    "class_trivial": d.class_trivial,
                })));
                out.push(match cocycle_order_check(&d.data) {
                    Ok(ok) => Entry::expect(COCYCLE, case, ok, || format!("some c(a,b)^{} != 1", d.data.m)).with_detail(json!({ "m": d.data.m })),
                    Err(e) => Entry::fail(COCYCLE, case, e.to_string()),
                });
            }
            Err(e) => {
                out.push(Entry::fail(DECOMPOSITION, case.clone(), e.to_string()));
                out.push(Entry::fail(COCYCLE, case, format!("no cocycle: {e}")));
            }
        }
    }
    let mut bad = Vec::new();
    for (i, pi) in table_g.irreps.iter().enumerate() {
        match clifford_restriction(&ctx, pi, &table_n) {
            Ok(r) => {
                let orbit_deg: f64 = r.orbit.iter().map(|&k| table_n.irreps[k].degree()).sum();
                if (r.e as f64 * orbit_deg - pi.degree()).abs() > 1e-9 {
                    bad.push(format!("irreducible {i}: e*orbit degree {} != {}", r.e as f64 * orbit_deg, pi.degree()));
                }
            }
            Err(e) => bad.push(format!("irreducible {i}: {e}")),
        }
    }
    out.push(Entry::expect(HOMOGENEITY, f.name.clone(), bad.is_empty(), || bad.join("; ")).with_detail(json!({ "irreducibles": table_g.irreps.len() })));
    if let Some(spec) = &f.genuine {
        out.push(genuine(f, &ctx, &table_n, spec.dim, &spec.rep)?);
    }
    Ok(out)
}

fn genuine(f: &CliffordEntry, ctx: &CliffordContext, table_n: &CharacterTable, dim: i64, sel: &crate::fixtures::CharSel) -> CliResult<Entry> {
    let idx = select_char(table_n, sel, |s| {
        s.at.as_ref().map(|e| resolve(&ctx.g, &f.names, e).and_then(|x| ctx.local(x).ok_or_else(|| format!("element {x} is not in N")))).transpose()
    })
    .map_err(|e| fixture_err(&f.name, e))?;
    let case = format!("{} U=chi{idx}", f.name);
    let u = MatrixRep::linear(&ctx.n.group, &table_n.irreps[idx]).map_err(|e| fixture_err(&f.name, e))?;
    let result = (|| -> algver_core::Result<(bool, Vec<i64>, usize)> {
        let data = intertwiners(ctx, &u)?;
        let ext = extension(&ctx.a, &data)?;
        let ok = genuine_dim_check(&ctx.a, &data, &ext)?;
        let dims = ext.genuine_chars().map(|c| c.degree_int()).collect::<algver_core::Result<Vec<_>>>()?;
        Ok((ok, dims, radical(&ctx.a, &data)?.len()))
    })();
    Ok(match result {
        Ok((ok, dims, rad)) => {
            let matches = ok && dims.iter().all(|&d| d == dim);
            Entry::expect(GENUINE, case, matches, || format!("genuine dimensions {dims:?}, expected {dim}"))
                .with_detail(json!({ "quotient_order": ctx.m(), "radical": rad, "genuine_dims": dims }))
        }
        Err(e) => Entry::fail(GENUINE, case, e.to_string()),
    })
}

pub fn run(ctx: &Ctx) -> CliResult<Vec<Entry>> {
    let fx: CliffordFixture = ctx.fixtures.load("clifford")?;
    let results: Vec<CliResult<Vec<Entry>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = fx.fixtures.iter().map(|f| scope.spawn(move || run_fixture(f))).collect();
        handles.into_iter().map(|h| h.join().expect("clifford worker panicked")).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}
