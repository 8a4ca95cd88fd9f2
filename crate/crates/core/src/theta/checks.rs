use num_complex::Complex64;

use super::instance::ThetaInstance;
use super::lift::{induced_omega, isometry_lift, isometry_lift_rev, theta_lift, theta_lift_rev};
use crate::clifford::{clifford_restriction, CliffordContext};
use crate::error::{Error, Result};
use crate::groups::{character_table, induce, inner, Character, Subgroup, SNAP_TOL};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < SNAP_TOL
}

/// `T`-central character `π̃(t)/π̃(1)` of an irreducible of `G̃⁺`.
pub fn central_character(inst: &ThetaInstance, pi: &Character) -> Vec<Complex64> {
    let d = pi.values[0];
    (0..inst.jsim.gside.t.order()).map(|t| pi.values[inst.jsim.t_in_gplus(t)] / d).collect()
}

/// Every constituent of `Θ(π̃)` has the `T`-central character of `π̃`.
pub fn central_character_check(inst: &ThetaInstance, pi: &Character) -> Result<bool> {
    let chi = central_character(inst, pi);
    let theta = theta_lift(inst, pi)?;
    let mult = inst.table_hplus.decompose(&theta)?;
    let nt = inst.jsim.gside.t.order();
    Ok(mult
        .iter()
        .zip(&inst.table_hplus.irreps)
        .filter(|(m, _)| **m > 0)
        .all(|(_, sigma)| (0..nt).all(|t| close(sigma.values[inst.jsim.t_in_hplus(t)] / sigma.values[0], chi[t]))))
}

/// `T × T` inside `G̃⁺ × H̃⁺`, index `t·|T| + t'`.
fn torus_pairs(inst: &ThetaInstance) -> Vec<usize> {
    let j = &inst.jsim;
    let (nt, nh) = (j.gside.t.order(), j.h_plus.order());
    (0..nt * nt).map(|k| j.t_in_gplus(k / nt) * nh + j.t_in_hplus(k % nt)).collect()
}

/// `χ ⊗ χ`-isotypic block of `Ω̃` against the induced extension `Ω_χ` from
/// `J̃^sim·(T × T)`. `J̃^sim ∩ (T × T) = T^∇·(j(Z) × 1)`, so `Ω_χ` is built
/// from the part of `Ω` where `j(Z) × 1` acts by `χ`.
pub fn omega_chi_check(inst: &ThetaInstance, chi: &Character) -> Result<bool> {
    let ind = induced_omega(inst)?;
    let block = isotypic_block(inst, &ind, chi);
    let rhs = induced_extension(inst, &ind, chi)?;
    Ok(block.approx_eq(&rhs))
}

/// The blocks over all characters of `T` sum to `Ω̃`.
pub fn omega_blocks_exhaust(inst: &ThetaInstance) -> Result<bool> {
    let ind = induced_omega(inst)?;
    let mut total = Character::zero(ind.group.order());
    for chi in &inst.table_t.irreps {
        total = total.add(&isotypic_block(inst, &ind, chi));
    }
    Ok(total.approx_eq(&ind.omega_tilde))
}

fn isotypic_block(inst: &ThetaInstance, ind: &super::lift::InducedOmega, chi: &Character) -> Character {
    let tt = torus_pairs(inst);
    let nt = inst.jsim.gside.t.order();
    let scale = (nt * nt) as f64;
    let values = (0..ind.group.order())
        .map(|x| {
            tt.iter()
                .enumerate()
                .map(|(k, &p)| (chi.values[k / nt] * chi.values[k % nt]).conj() * ind.omega_tilde.values[ind.group.mul(x, p)])
                .sum::<Complex64>()
                / scale
        })
        .collect();
    Character { values }
}

fn induced_extension(inst: &ThetaInstance, ind: &super::lift::InducedOmega, chi: &Character) -> Result<Character> {
    let j = &inst.jsim;
    let tt = torus_pairs(inst);
    let nt = j.gside.t.order();
    let z_pairs: Vec<(usize, usize)> = j.gside.z_in_t.iter().map(|&z| (z, j.index[&(j.gside.t_embed[z], 0)])).collect();
    let omega_z = |y: usize| -> Complex64 {
        z_pairs.iter().map(|&(z, zj)| chi.values[z].conj() * inst.omega.values[j.group.mul(y, zj)]).sum::<Complex64>() / z_pairs.len() as f64
    };
    let mut in_j = vec![usize::MAX; ind.group.order()];
    for (pos, &p) in ind.jsub.embed.iter().enumerate() {
        in_j[p] = ind.jsub_to_j[pos];
    }
    let mut y_elems: Vec<usize> = ind.jsub.embed.iter().flat_map(|&a| tt.iter().map(move |&b| (a, b))).map(|(a, b)| ind.group.mul(a, b)).collect();
    y_elems.sort_unstable();
    y_elems.dedup();
    let y = Subgroup::from_elements(&ind.group, &y_elems)?;
    let mut values = Vec::with_capacity(y.order());
    for &p in &y.embed {
        let mut value: Option<Complex64> = None;
        for (k, &q) in tt.iter().enumerate() {
            let r = in_j[ind.group.mul(p, ind.group.inv(q))];
            if r == usize::MAX {
                continue;
            }
            let v = chi.values[k / nt] * chi.values[k % nt] * omega_z(r);
            match value {
                Some(w) if !close(v, w) => {
                    return Err(Error::IdentityFailure { identity: "Omega_chi well defined on J~sim.(T x T)".into(), lhs: format!("{v}"), rhs: format!("{w}") })
                }
                Some(_) => {}
                None => value = Some(v),
            }
        }
        values.push(value.expect("every element of Y factors"));
    }
    induce(&Character { values }, &y, &ind.group, &ind.classes)
}

/// Outcome of comparing `Θ(π̃)|_H` with `m·⊕ Θ(π_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub m: i64,
    pub orbit: usize,
    pub big_theta: bool,
    pub small_theta: bool,
    pub zero_iff_all_zero: bool,
}

impl RestrictionCheck {
    pub fn holds(&self) -> bool {
        self.big_theta && self.small_theta && self.zero_iff_all_zero
    }
}

pub fn restriction_decomposition_check(inst: &ThetaInstance, pi: &Character) -> Result<RestrictionCheck> {
    let j = &inst.jsim;
    let ctx = CliffordContext::new(j.g_plus.group.clone(), &j.g_in_gplus())?;
    let table_n = character_table(&ctx.n.group)?;
    let r = clifford_restriction(&ctx, pi, &table_n)?;
    let theta = theta_lift(inst, pi)?;
    let lhs = Character { values: j.h_in_hplus().iter().map(|&h| theta.values[h]).collect() };
    let lifts: Vec<Character> = r.orbit.iter().map(|&i| isometry_lift(inst, &table_n.irreps[i])).collect();
    let mut rhs = Character::zero(j.hside.g.order());
    for l in &lifts {
        rhs = rhs.add(&l.scale(r.e as f64));
    }
    let small_theta = inst.table_h.decompose(&lhs)? == inst.table_h.decompose(&rhs)?;
    Ok(RestrictionCheck {
        m: r.e,
        orbit: r.orbit.len(),
        big_theta: lhs.approx_eq(&rhs),
        small_theta,
        zero_iff_all_zero: theta.is_zero() == lifts.iter().all(Character::is_zero),
    })
}

/// Howe duality flags at the isometry and similitude levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HoweFlags {
    pub isometry: bool,
    pub similitude: bool,
    /// Every isometry-level lift is zero.
    pub degenerate: bool,
}

impl HoweFlags {
    pub fn agree(&self) -> bool {
        self.isometry == self.similitude
    }
}

fn zero_or_irreducible(chi: &Character) -> Result<bool> {
    Ok(inner(chi, chi)? <= 1)
}

pub fn howe_check(inst: &ThetaInstance) -> Result<HoweFlags> {
    let mut isometry = true;
    let mut degenerate = true;
    for pi in &inst.table_g.irreps {
        let l = isometry_lift(inst, pi);
        degenerate &= l.is_zero();
        isometry &= zero_or_irreducible(&l)?;
    }
    for sigma in &inst.table_h.irreps {
        let l = isometry_lift_rev(inst, sigma);
        degenerate &= l.is_zero();
        isometry &= zero_or_irreducible(&l)?;
    }
    let mut similitude = true;
    for pi in &inst.table_gplus.irreps {
        similitude &= zero_or_irreducible(&theta_lift(inst, pi)?)?;
    }
    for sigma in &inst.table_hplus.irreps {
        similitude &= zero_or_irreducible(&theta_lift_rev(inst, sigma)?)?;
    }
    Ok(HoweFlags { isometry, similitude, degenerate })
}

/// `⟨Θ(σ), π̃|_G⟩_G = ⟨Θ(π̃)|_{H′}, σ⟩_{H′}` for every `π̃ ∈ Irr(G̃⁺)` and
/// `σ ∈ Irr(H′)`, with `H′ ≤ H` given as elements of `H̃`.
pub fn seesaw_check(inst: &ThetaInstance, h_prime: &[usize]) -> Result<bool> {
    let j = &inst.jsim;
    if let Some(&h) = h_prime.iter().find(|&&h| !j.hside.g.contains(h)) {
        return Err(Error::BadSeesawFixture(format!("element {h} of H' has nontrivial similitude, so G x H' is not in J~sim")));
    }
    let hp = Subgroup::from_elements(&j.hside.full, h_prime).map_err(|e| Error::BadSeesawFixture(e.to_string()))?;
    let table = character_table(&hp.group)?;
    let lh = j.h_plus.local_index();
    let hp_in_hplus: Vec<usize> = hp.embed.iter().map(|e| lh[e]).collect();
    let g_in_gplus = j.g_in_gplus();
    let ng = j.gside.g.order();
    for pi in &inst.table_gplus.irreps {
        let theta = theta_lift(inst, pi)?;
        let theta_hp = Character { values: hp_in_hplus.iter().map(|&h| theta.values[h]).collect() };
        let pi_g = Character { values: g_in_gplus.iter().map(|&g| pi.values[g]).collect() };
        for sigma in &table.irreps {
            let mut lift = vec![ZERO; ng];
            for (g, &ge) in j.gside.g.embed.iter().enumerate() {
                for (k, &he) in hp.embed.iter().enumerate() {
                    lift[g] += inst.omega.values[j.index[&(ge, he)]] * sigma.values[k].conj();
                }
                lift[g] /= hp.order() as f64;
            }
            if inner(&Character { values: lift }, &pi_g)? != inner(&theta_hp, sigma)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
