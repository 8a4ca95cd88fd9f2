use std::collections::BTreeMap;

use algver_core::groups::{character_table, FiniteGroup};
use algver_core::theta::{
    build_jsim, build_similitude, central_character_check, howe_check, induced_omega, omega_blocks_exhaust, omega_chi_check, restriction_decomposition_check,
    seesaw_check, theta_from_induced, theta_lift, OmegaSpec, SimilitudeGroup, ThetaInstance,
};
use algver_core::Error;
use serde_json::json;

use super::Ctx;
use crate::error::{CliError, CliResult};
use crate::fixtures::{parse_group, resolve, resolve_all, resolve_subset, select_char, ElemRef, NamedSide, OmegaFixture, SideSpec, ThetaEntry, ThetaFixture};
use crate::report::Entry;

pub const SEQUENCES: &str = "theta.similitude_sequences";
pub const INDUCTION: &str = "theta.lift_equals_induction";
pub const CENTRAL: &str = "theta.central_character";
pub const OMEGA_CHI: &str = "theta.omega_chi";
pub const RESTRICTION: &str = "theta.restriction";
pub const HOWE: &str = "theta.howe";
pub const SEESAW: &str = "theta.seesaw";
pub const MULTIPLICITY_TWO: &str = "theta.multiplicity_two";

const FILE: &str = "theta.json";

/// A built side with the group its fixture words refer to.
struct Side {
    sim: SimilitudeGroup,
    source: FiniteGroup,
    names: Vec<String>,
}

impl Side {
    /// Element of `G̃` named by a fixture element.
    fn point(&self, e: &ElemRef) -> Result<usize, String> {
        resolve(&self.source, &self.names, e).map(|x| self.sim.source[x])
    }
}

fn build_side(side: &NamedSide) -> CliResult<Side> {
    let err = |m: String| CliError::fixture(FILE, format!("side {}: {m}", side.name));
    match &side.spec {
        SideSpec::Literal(l) => {
            let g = parse_group(&l.group).map_err(err)?;
            let t = parse_group(&l.t).map_err(err)?;
            let z = resolve_subset(&g, &l.names, &l.z).map_err(err)?;
            let j = resolve_all(&t, &l.t_names, &l.j).map_err(err)?;
            let sim = build_similitude(&g, &z, &t, &j).map_err(|e| err(e.to_string()))?;
            Ok(Side { sim, source: g, names: l.names.clone() })
        }
        SideSpec::Points(p) => {
            let full = parse_group(&p.group).map_err(err)?;
            let s = parse_group(&p.s).map_err(err)?;
            let t = parse_group(&p.t).map_err(err)?;
            let sim_gens = resolve_all(&s, &[], &p.sim).map_err(err)?;
            let t_embed = resolve_all(&full, &p.names, &p.t_embed).map_err(err)?;
            let t_to_s = resolve_all(&s, &[], &p.t_to_s).map_err(err)?;
            let sim = SimilitudeGroup::from_points(full.clone(), &sim_gens, s, t, &t_embed, &t_to_s).map_err(|e| err(e.to_string()))?;
            Ok(Side { sim, source: full, names: p.names.clone() })
        }
    }
}

fn omega_spec(entry: &ThetaEntry, g: &Side, h: &Side, jsim: &algver_core::theta::JsimGroup) -> Result<OmegaSpec, String> {
    Ok(match &entry.omega {
        OmegaFixture::Trivial => OmegaSpec::Trivial,
        OmegaFixture::Regular => OmegaSpec::Regular,
        OmegaFixture::Tensor(terms) => {
            let tg = character_table(&jsim.gside.g.group).map_err(|e| e.to_string())?;
            let th = character_table(&jsim.hside.g.group).map_err(|e| e.to_string())?;
            let (lg, lh) = (jsim.gside.g.local_index(), jsim.hside.g.local_index());
            let local = |side: &Side, map: &std::collections::HashMap<usize, usize>, e: &ElemRef| -> Result<usize, String> {
                let x = side.point(e)?;
                map.get(&x).copied().ok_or_else(|| format!("element {x} has nontrivial similitude"))
            };
            let mut out = Vec::new();
            for (a, b, m) in terms {
                let i = select_char(&tg, a, |s| s.at.as_ref().map(|e| local(g, &lg, e)).transpose())?;
                let k = select_char(&th, b, |s| s.at.as_ref().map(|e| local(h, &lh, e)).transpose())?;
                out.push((i, k, *m));
            }
            OmegaSpec::Tensor(out)
        }
        OmegaFixture::Irreducibles(terms) => {
            let tq = character_table(&jsim.quotient).map_err(|e| e.to_string())?;
            let mut out = Vec::new();
            for (sel, m) in terms {
                let i = select_char(&tq, sel, |s| {
                    s.at_pair
                        .as_ref()
                        .map(|(a, b)| {
                            let key = (g.point(a)?, h.point(b)?);
                            jsim.index.get(&key).map(|&x| jsim.iota[x]).ok_or_else(|| format!("pair {key:?} is not in J~sim"))
                        })
                        .transpose()
                })?;
                out.push((i, *m));
            }
            OmegaSpec::Irreducibles(out)
        }
    })
}

fn all_ok<I: IntoIterator<Item = algver_core::Result<bool>>>(items: I) -> Result<(), String> {
    for (k, r) in items.into_iter().enumerate() {
        match r {
            Ok(true) => {}
            Ok(false) => return Err(format!("fails at item {k}")),
            Err(e) => return Err(format!("item {k}: {e}")),
        }
    }
    Ok(())
}

fn entry(check: &'static str, case: &str, r: Result<(), String>) -> Entry {
    match r {
        Ok(()) => Entry::pass(check, case),
        Err(w) => Entry::fail(check, case, w),
    }
}

/// Checks on one instance and the largest restriction multiplicity seen.
fn run_instance(e: &ThetaEntry, sides: &BTreeMap<String, Side>) -> CliResult<(Vec<Entry>, i64)> {
    let side = |n: &str| sides.get(n).ok_or_else(|| CliError::fixture(FILE, format!("instance {}: unknown side {n}", e.name)));
    let (g, h) = (side(&e.g)?, side(&e.h)?);
    let name = e.name.as_str();
    let later = [INDUCTION, CENTRAL, OMEGA_CHI, RESTRICTION, HOWE, SEESAW];
    let jsim = match build_jsim(&g.sim, &h.sim) {
        Ok(j) => j,
        Err(err @ Error::IdentityFailure { .. }) => {
            let mut out = vec![Entry::fail(SEQUENCES, name, err.to_string())];
            out.extend(later.iter().map(|c| Entry::skip(c, name, "J~sim failed its exactness checks")));
            return Ok((out, 0));
        }
        Err(err) => return Err(CliError::fixture(FILE, format!("instance {name}: {err}"))),
    };
    let sides_ok = g.sim.verify().and_then(|_| h.sim.verify());
    let mut out = vec![match sides_ok {
        Ok(()) => Entry::pass(SEQUENCES, name).with_detail(json!({
            "jsim": jsim.group.order(),
            "g_plus": jsim.g_plus.order(),
            "h_plus": jsim.h_plus.order(),
        })),
        Err(err) => Entry::fail(SEQUENCES, name, err.to_string()),
    }];
    let spec = omega_spec(e, g, h, &jsim).map_err(|m| CliError::fixture(FILE, format!("instance {name}: {m}")))?;
    let inst = ThetaInstance::new(name, jsim, &spec).map_err(|err| CliError::fixture(FILE, format!("instance {name}: {err}")))?;
    let pis = &inst.table_gplus.irreps;

    let induction = induced_omega(&inst)
        .map_err(|err| err.to_string())
        .and_then(|ind| all_ok(pis.iter().map(|pi| theta_lift(&inst, pi).map(|a| a.approx_eq(&theta_from_induced(&inst, &ind, pi))))));
    out.push(entry(INDUCTION, name, induction).with_detail(json!({ "irreducibles": pis.len() })));
    out.push(entry(CENTRAL, name, all_ok(pis.iter().map(|pi| central_character_check(&inst, pi)))));
    let blocks = all_ok(inst.table_t.irreps.iter().map(|chi| omega_chi_check(&inst, chi))).and_then(|_| all_ok([omega_blocks_exhaust(&inst)]));
    out.push(entry(OMEGA_CHI, name, blocks));

    let mut max_m = 0;
    let mut restriction = Ok(());
    for (k, pi) in pis.iter().enumerate() {
        match restriction_decomposition_check(&inst, pi) {
            Ok(r) if r.holds() => max_m = max_m.max(r.m),
            Ok(r) => {
                restriction = Err(format!("irreducible {k}: {r:?}"));
                break;
            }
            Err(err) => {
                restriction = Err(format!("irreducible {k}: {err}"));
                break;
            }
        }
    }
    out.push(entry(RESTRICTION, name, restriction).with_detail(json!({ "max_multiplicity": max_m })));

    out.push(match howe_check(&inst) {
        Ok(f) => {
            let expected = e.howe_isometry.is_none_or(|v| v == f.isometry);
            Entry::expect(HOWE, name, f.agree() && expected, || format!("{f:?}, expected isometry flag {:?}", e.howe_isometry))
                .with_detail(json!({ "isometry": f.isometry, "similitude": f.similitude, "degenerate": f.degenerate }))
        }
        Err(err) => Entry::fail(HOWE, name, err.to_string()),
    });

    let hs = &inst.jsim.hside;
    let subgroups: Vec<Vec<usize>> = match &e.seesaw {
        Some(sets) => {
            let mut v = Vec::new();
            for set in sets {
                let gens =
                    set.iter().map(|x| h.point(x)).collect::<Result<Vec<_>, _>>().map_err(|m| CliError::fixture(FILE, format!("instance {name}: {m}")))?;
                v.push(hs.full.closure(&gens));
            }
            v
        }
        None => {
            let mut v = vec![hs.g.embed.clone()];
            for &x in &hs.g.embed {
                let c = hs.full.closure(&[x]);
                if !v.contains(&c) {
                    v.push(c);
                }
            }
            v
        }
    };
    out.push(entry(SEESAW, name, all_ok(subgroups.iter().map(|s| seesaw_check(&inst, s)))).with_detail(json!({ "subgroups": subgroups.len() })));
    Ok((out, max_m))
}

pub fn run(ctx: &Ctx) -> CliResult<Vec<Entry>> {
    let fx: ThetaFixture = ctx.fixtures.load("theta")?;
    let mut sides = BTreeMap::new();
    for s in &fx.sides {
        if sides.insert(s.name.clone(), build_side(s)?).is_some() {
            return Err(CliError::fixture(FILE, format!("duplicate side {}", s.name)));
        }
    }
    let sides = &sides;
    let results: Vec<CliResult<(Vec<Entry>, i64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = fx.instances.iter().map(|e| scope.spawn(move || run_instance(e, sides))).collect();
        handles.into_iter().map(|h| h.join().expect("theta worker panicked")).collect()
    });
    let mut out = Vec::new();
    let mut max_m = 0;
    for r in results {
        let (entries, m) = r?;
        out.extend(entries);
        max_m = max_m.max(m);
    }
    out.push(Entry::expect(MULTIPLICITY_TWO, "all instances", max_m == 2, || format!("largest restriction multiplicity is {max_m}")));
    Ok(out)
}
