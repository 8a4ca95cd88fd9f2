use algver_core::groups::{abelian, cyclic, inner, quaternion, symmetric, Character, CharacterTable, FiniteGroup};
use algver_core::theta::{
    build_jsim, build_similitude, central_character_check, howe_check, isometry_lift, omega_blocks_exhaust, omega_chi_check, restriction_decomposition_check,
    seesaw_check, theta_lift, theta_via_induction, JsimGroup, OmegaSpec, SimilitudeGroup, ThetaInstance,
};
use algver_core::Error;
use num_complex::Complex64;

/// Index of the irreducible of a cyclic group of order 4 sending its first
/// element of order 4 to `i^k`.
fn cyclic_char(g: &FiniteGroup, table: &CharacterTable, k: u32) -> usize {
    let gen = (0..g.order()).find(|&x| g.element_order(x) == 4).unwrap();
    let target = Complex64::i().powu(k);
    table.irreps.iter().position(|c| (c.values[gen] - target).norm() < 1e-9).unwrap()
}

fn z4_literal() -> JsimGroup {
    let z4 = cyclic(4);
    let s = build_similitude(&z4, &[0, 2], &z4, &[0, 2]).unwrap();
    build_jsim(&s, &s).unwrap()
}

fn q8_literal() -> JsimGroup {
    let z4 = cyclic(4);
    let q8 = quaternion();
    let g = build_similitude(&q8, &q8.center(), &z4, &[0, 2]).unwrap();
    let h = build_similitude(&z4, &[0, 2], &z4, &[0, 2]).unwrap();
    build_jsim(&g, &h).unwrap()
}

fn nonsurjective() -> JsimGroup {
    let s3 = symmetric(3).unwrap();
    let gfull = s3.direct_product(&cyclic(4)).unwrap();
    let hfull = s3.direct_product(&cyclic(2)).unwrap();
    let g = SimilitudeGroup::from_points(gfull, &[0, 0, 1], cyclic(4), cyclic(2), &[2], &[2]).unwrap();
    let h = SimilitudeGroup::from_points(hfull, &[0, 0, 2], cyclic(4), cyclic(2), &[1], &[2]).unwrap();
    g.verify().unwrap();
    h.verify().unwrap();
    build_jsim(&g, &h).unwrap()
}

fn extraspecial() -> JsimGroup {
    let q8 = quaternion();
    let minus = q8.eval_word(&["i", "j"], "i^2").unwrap();
    let side = SimilitudeGroup::from_points(q8, &[2, 1], abelian(&[2, 2]).unwrap(), cyclic(2), &[minus], &[0]).unwrap();
    side.verify().unwrap();
    build_jsim(&side, &side).unwrap()
}

fn instances() -> Vec<ThetaInstance> {
    let mut out = Vec::new();
    let j = z4_literal();
    let t = algver_core::groups::character_table(&j.gside.g.group).unwrap();
    let graph: Vec<(usize, usize, i64)> = (0..4).map(|k| (cyclic_char(&j.gside.g.group, &t, k), cyclic_char(&j.gside.g.group, &t, k), 1)).collect();
    out.push(ThetaInstance::new("z4-graph", j.clone(), &OmegaSpec::Tensor(graph)).unwrap());
    out.push(ThetaInstance::new("z4-regular", j.clone(), &OmegaSpec::Regular).unwrap());
    out.push(ThetaInstance::new("z4-trivial", j.clone(), &OmegaSpec::Trivial).unwrap());
    let g = &j.gside.g.group;
    let (a, b, c) = (cyclic_char(g, &t, 1), cyclic_char(g, &t, 1), cyclic_char(g, &t, 3));
    out.push(ThetaInstance::new("z4-howe-fail", j, &OmegaSpec::Tensor(vec![(a, b, 1), (a, c, 1)])).unwrap());
    let j = q8_literal();
    let th = algver_core::groups::character_table(&j.hside.g.group).unwrap();
    let faithful = cyclic_char(&j.hside.g.group, &th, 1);
    out.push(ThetaInstance::new("q8-z4", j, &OmegaSpec::Tensor(vec![(4, faithful, 1), (0, 0, 1)])).unwrap());
    let j = nonsurjective();
    out.push(ThetaInstance::new("nonsurjective", j, &OmegaSpec::Regular).unwrap());
    let j = extraspecial();
    out.push(ThetaInstance::new("extraspecial-regular", j.clone(), &OmegaSpec::Regular).unwrap());
    let lambda = odd_on_minus_one(&j);
    out.push(ThetaInstance::new("extraspecial-m2", j, &OmegaSpec::Irreducibles(vec![(lambda, 1)])).unwrap());
    out
}

/// First irreducible of `J^sim` taking the value `-1` on the image of `(-1, 1)`.
fn odd_on_minus_one(j: &JsimGroup) -> usize {
    let minus = j.gside.t_embed[1];
    let x = j.iota[j.index[&(minus, 0)]];
    let t = algver_core::groups::character_table(&j.quotient).unwrap();
    t.irreps.iter().position(|c| (c.values[x] + 1.0).norm() < 1e-9).unwrap()
}

fn find<'a>(all: &'a [ThetaInstance], name: &str) -> &'a ThetaInstance {
    all.iter().find(|i| i.name == name).unwrap()
}

#[test]
fn jsim_invariants() {
    let j = z4_literal();
    assert_eq!((j.group.order(), j.g_plus.order(), j.h_plus.order()), (32, 8, 8));
    let j = q8_literal();
    assert_eq!((j.gside.full.order(), j.hside.full.order()), (16, 8));
    let j = nonsurjective();
    assert_eq!(j.g_plus.order(), 12);
    assert_eq!(j.gside.full.order(), 24);
    assert_eq!(j.h_plus.order(), j.hside.full.order());
    assert!(j.iso);
    let j = extraspecial();
    assert_eq!(j.group.order(), 16);
    assert_eq!(j.quotient.order(), 8);
    assert!(j.quotient.is_abelian());
    assert_eq!(j.g_plus.order(), 8);
}

#[test]
fn theta_definitions_agree() {
    for inst in instances() {
        for pi in &inst.table_gplus.irreps {
            let a = theta_lift(&inst, pi).unwrap();
            let b = theta_via_induction(&inst, pi).unwrap();
            assert!(a.approx_eq(&b), "{}", inst.name);
            inst.table_hplus.decompose(&a).unwrap();
        }
        let reducible = inst.table_gplus.irreps[0].add(&inst.table_gplus.irreps[0]);
        assert!(matches!(theta_lift(&inst, &reducible), Err(Error::NotIrreducible(_))));
    }
}

#[test]
fn trivial_omega_lifts() {
    let all = instances();
    let inst = find(&all, "z4-trivial");
    let triv = &inst.table_gplus.irreps[0];
    assert!(theta_lift(inst, triv).unwrap().approx_eq(&Character::trivial(inst.jsim.h_plus.order())));
    let g_local = inst.jsim.g_in_gplus();
    for pi in &inst.table_gplus.irreps[1..] {
        let on_g_trivial = g_local.iter().all(|&g| (pi.values[g] - 1.0).norm() < 1e-9);
        assert_eq!(theta_lift(inst, pi).unwrap().is_zero(), !on_g_trivial);
    }
}

/// `Θ(π̃)` against the brute-force pairing oracle: `σ̃` occurs with
/// multiplicity `⟨Ω, π̃ ⊗ σ̃⟩` on `J̃^sim`.
#[test]
fn abelian_lift_matches_pairing_oracle() {
    let all = instances();
    for name in ["z4-graph", "z4-regular", "z4-howe-fail"] {
        let inst = find(&all, name);
        let j = &inst.jsim;
        for pi in &inst.table_gplus.irreps {
            let theta = theta_lift(inst, pi).unwrap();
            let mult = inst.table_hplus.decompose(&theta).unwrap();
            for (sigma, &m) in inst.table_hplus.irreps.iter().zip(&mult) {
                let pulled = Character { values: (0..j.group.order()).map(|x| pi.values[j.p_g[x]] * sigma.values[j.p_h[x]]).collect() };
                assert_eq!(inner(&inst.omega, &pulled).unwrap(), m, "{name}");
            }
        }
    }
}

#[test]
fn central_characters_are_preserved() {
    for inst in instances() {
        for pi in &inst.table_gplus.irreps {
            assert!(central_character_check(&inst, pi).unwrap(), "{}", inst.name);
        }
    }
}

#[test]
fn omega_chi_blocks() {
    for inst in instances() {
        for chi in &inst.table_t.irreps {
            assert!(omega_chi_check(&inst, chi).unwrap(), "{}", inst.name);
        }
        assert!(omega_blocks_exhaust(&inst).unwrap(), "{}", inst.name);
    }
}

#[test]
fn restriction_decomposition() {
    let mut saw_m2 = false;
    for inst in instances() {
        for pi in &inst.table_gplus.irreps {
            let r = restriction_decomposition_check(&inst, pi).unwrap();
            assert!(r.holds(), "{}: {r:?}", inst.name);
            if r.m == 2 {
                saw_m2 = true;
                assert_eq!(inst.jsim.gside.full.name(), "Q8");
            }
        }
    }
    assert!(saw_m2);
    let all = instances();
    let inst = find(&all, "extraspecial-m2");
    let pi = inst.table_gplus.irreps.iter().find(|c| c.degree_int().unwrap() == 2).unwrap();
    let theta = theta_lift(inst, pi).unwrap();
    assert_eq!(inner(&theta, &theta).unwrap(), 1);
    assert_eq!(theta.degree_int().unwrap(), 2);
    let sign = inst.table_g.irreps.iter().find(|c| !c.approx_eq(&Character::trivial(2))).unwrap();
    assert_eq!(isometry_lift(inst, sign).degree_int().unwrap(), 1);
}

#[test]
fn howe_flags_agree() {
    let expect = [("z4-graph", true), ("z4-regular", false), ("z4-trivial", true), ("z4-howe-fail", false), ("extraspecial-m2", true)];
    for inst in instances() {
        let flags = howe_check(&inst).unwrap();
        assert!(flags.agree(), "{}: {flags:?}", inst.name);
        if let Some(&(_, v)) = expect.iter().find(|(n, _)| *n == inst.name) {
            assert_eq!(flags.isometry, v, "{}", inst.name);
        }
    }
}

#[test]
fn seesaw_pairs() {
    for inst in instances() {
        let h = &inst.jsim.hside;
        assert!(seesaw_check(&inst, &h.g.embed).unwrap(), "{}", inst.name);
        for &x in &h.g.embed {
            let sub = h.full.closure(&[x]);
            assert!(seesaw_check(&inst, &sub).unwrap(), "{}", inst.name);
        }
        if let Some(bad) = (0..h.full.order()).find(|&x| !h.g.contains(x)) {
            assert!(matches!(seesaw_check(&inst, &h.full.closure(&[bad])), Err(Error::BadSeesawFixture(_))));
        }
    }
}
