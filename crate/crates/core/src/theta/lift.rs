use num_complex::Complex64;

use super::instance::ThetaInstance;
use crate::error::{Error, Result};
use crate::groups::{induce, inner, Character, FiniteGroup, Subgroup};

fn require_irreducible(pi: &Character, order: usize, what: &str) -> Result<()> {
    if pi.values.len() != order || inner(pi, pi)? != 1 {
        return Err(Error::NotIrreducible(format!("character of {what}")));
    }
    Ok(())
}

/// `Θ(π̃) = (Ω ⊗ π̃^∨)_G` as a character of `H̃⁺ = J̃^sim/G`: the value at `h`
/// is the average of `Ω·conj(π̃)` over the fiber of `h`.
pub fn theta_lift(inst: &ThetaInstance, pi: &Character) -> Result<Character> {
    let j = &inst.jsim;
    require_irreducible(pi, j.g_plus.order(), "G~+")?;
    let mut values = vec![Complex64::new(0.0, 0.0); j.h_plus.order()];
    for x in 0..j.group.order() {
        values[j.p_h[x]] += inst.omega.values[x] * pi.values[j.p_g[x]].conj();
    }
    let n = j.gside.g.order() as f64;
    Ok(Character { values: values.into_iter().map(|v| v / n).collect() })
}

/// Lift in the other direction, `(Ω ⊗ σ̃^∨)_H` on `G̃⁺`.
pub fn theta_lift_rev(inst: &ThetaInstance, sigma: &Character) -> Result<Character> {
    let j = &inst.jsim;
    require_irreducible(sigma, j.h_plus.order(), "H~+")?;
    let mut values = vec![Complex64::new(0.0, 0.0); j.g_plus.order()];
    for x in 0..j.group.order() {
        values[j.p_g[x]] += inst.omega.values[x] * sigma.values[j.p_h[x]].conj();
    }
    let n = j.hside.g.order() as f64;
    Ok(Character { values: values.into_iter().map(|v| v / n).collect() })
}

/// Isometry-level lift `(Ω ⊗ π^∨)_G` of a character of `G` to `H`.
pub fn isometry_lift(inst: &ThetaInstance, pi: &Character) -> Character {
    let j = &inst.jsim;
    let (ng, nh) = (j.gside.g.order(), j.hside.g.order());
    let values = (0..nh).map(|h| (0..ng).map(|g| inst.omega.values[j.of_gh(g, h)] * pi.values[g].conj()).sum::<Complex64>() / ng as f64).collect();
    Character { values }
}

/// `(Ω ⊗ σ^∨)_H` on `G`.
pub fn isometry_lift_rev(inst: &ThetaInstance, sigma: &Character) -> Character {
    let j = &inst.jsim;
    let (ng, nh) = (j.gside.g.order(), j.hside.g.order());
    let values = (0..ng).map(|g| (0..nh).map(|h| inst.omega.values[j.of_gh(g, h)] * sigma.values[h].conj()).sum::<Complex64>() / nh as f64).collect();
    Character { values }
}

/// `G̃⁺ × H̃⁺` with `J̃^sim` inside it and `Ω̃ = Ind Ω`.
pub struct InducedOmega {
    pub group: FiniteGroup,
    pub classes: Vec<Vec<usize>>,
    pub jsub: Subgroup,
    /// Element of `J̃^sim` at each position of `jsub.embed`.
    pub jsub_to_j: Vec<usize>,
    pub omega_tilde: Character,
}

pub fn induced_omega(inst: &ThetaInstance) -> Result<InducedOmega> {
    let j = &inst.jsim;
    let nh = j.h_plus.order();
    let group = j.g_plus.group.direct_product(&j.h_plus.group)?;
    let in_p: Vec<usize> = (0..j.group.order()).map(|x| j.p_g[x] * nh + j.p_h[x]).collect();
    let jsub = Subgroup::from_elements(&group, &in_p)?;
    let mut jsub_to_j = vec![0; jsub.order()];
    let local = jsub.local_index();
    for (x, p) in in_p.iter().enumerate() {
        jsub_to_j[local[p]] = x;
    }
    let omega_local = Character { values: jsub_to_j.iter().map(|&x| inst.omega.values[x]).collect() };
    let classes = group.conjugacy_classes();
    let omega_tilde = induce(&omega_local, &jsub, &group, &classes)?;
    Ok(InducedOmega { group, classes, jsub, jsub_to_j, omega_tilde })
}

/// `Θ(π̃)` through `Ω̃ = Ind_{J̃^sim}^{G̃⁺ × H̃⁺} Ω`: the `H̃⁺`-character of
/// `(Ω̃ ⊗ π̃^∨)_{G̃⁺}`.
pub fn theta_via_induction(inst: &ThetaInstance, pi: &Character) -> Result<Character> {
    let j = &inst.jsim;
    require_irreducible(pi, j.g_plus.order(), "G~+")?;
    let ind = induced_omega(inst)?;
    Ok(theta_from_induced(inst, &ind, pi))
}

pub fn theta_from_induced(inst: &ThetaInstance, ind: &InducedOmega, pi: &Character) -> Character {
    let j = &inst.jsim;
    let (ng, nh) = (j.g_plus.order(), j.h_plus.order());
    let values = (0..nh).map(|h| (0..ng).map(|g| ind.omega_tilde.values[g * nh + h] * pi.values[g].conj()).sum::<Complex64>() / ng as f64).collect();
    Character { values }
}
