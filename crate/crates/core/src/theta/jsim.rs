use std::collections::HashMap;

use super::similitude::SimilitudeGroup;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Subgroup};

/// `J̃^sim = {(g, h) : sim_G(g)·sim_H(h) = 1}` with its projections onto the
/// plus-subgroups and the quotient `J^sim = J̃^sim/T^∇`.
#[derive(Clone, Debug)]
pub struct JsimGroup {
    pub gside: SimilitudeGroup,
    pub hside: SimilitudeGroup,
    pub group: FiniteGroup,
    /// Element `x` of `J̃^sim` is the pair `pairs[x]` of `G̃ × H̃`.
    pub pairs: Vec<(usize, usize)>,
    pub index: HashMap<(usize, usize), usize>,
    /// `{(t, t⁻¹)}` as sorted elements of `J̃^sim`.
    pub t_nabla: Vec<usize>,
    pub g_plus: Subgroup,
    pub h_plus: Subgroup,
    /// Projections to local indices of the plus-subgroups.
    pub p_g: Vec<usize>,
    pub p_h: Vec<usize>,
    /// `J^sim = J̃^sim/T^∇` and `ι`.
    pub quotient: FiniteGroup,
    pub iota: Vec<usize>,
    /// `G × H` (index `a·|H| + b` over the sorted elements of `G` and `H`) into `J̃^sim`.
    pub gh_embed: Vec<usize>,
    /// Whether `(G × H)/Z^∇ → J̃^sim/T^∇` is bijective.
    pub iso: bool,
}

fn fail<T>(identity: &str, lhs: impl ToString, rhs: impl ToString) -> Result<T> {
    Err(Error::IdentityFailure { identity: identity.into(), lhs: lhs.to_string(), rhs: rhs.to_string() })
}

fn plus_subgroup(side: &SimilitudeGroup, other: &SimilitudeGroup) -> Vec<usize> {
    let allowed = other.sim_image();
    (0..side.full.order()).filter(|&x| allowed.binary_search(&side.s.inv(side.sim[x])).is_ok()).collect()
}

pub fn build_jsim(gside: &SimilitudeGroup, hside: &SimilitudeGroup) -> Result<JsimGroup> {
    if gside.s != hside.s || gside.t != hside.t || gside.t_to_s != hside.t_to_s {
        return Err(Error::MismatchedS(format!("{} and {}", gside.full.name(), hside.full.name())));
    }
    let (gf, hf) = (&gside.full, &hside.full);
    let s = &gside.s;
    let mut pairs = Vec::new();
    for g in 0..gf.order() {
        for h in 0..hf.order() {
            if s.mul(gside.sim[g], hside.sim[h]) == 0 {
                pairs.push((g, h));
            }
        }
    }
    let n = pairs.len();
    if n > crate::groups::TABLE_BOUND {
        return Err(Error::SizeBound(format!("J~sim of order {n}")));
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut table = vec![0u16; n * n];
    for (a, &(g1, h1)) in pairs.iter().enumerate() {
        for (b, &(g2, h2)) in pairs.iter().enumerate() {
            table[a * n + b] = index[&(gf.mul(g1, g2), hf.mul(h1, h2))] as u16;
        }
    }
    let group = FiniteGroup::from_table(format!("Jsim({},{})", gf.name(), hf.name()), n, table)?;
    let t = &gside.t;
    let mut t_nabla: Vec<usize> = (0..t.order()).map(|x| index[&(gside.t_embed[x], hside.t_embed[t.inv(x)])]).collect();
    t_nabla.sort_unstable();
    let (quotient, iota) = group.quotient(&t_nabla)?;

    let g_plus = Subgroup::from_elements(gf, &plus_subgroup(gside, hside))?;
    let h_plus = Subgroup::from_elements(hf, &plus_subgroup(hside, gside))?;
    let (lg, lh) = (g_plus.local_index(), h_plus.local_index());
    let p_g: Vec<usize> = pairs.iter().map(|(g, _)| lg[g]).collect();
    let p_h: Vec<usize> = pairs.iter().map(|(_, h)| lh[h]).collect();

    let (ge, he) = (&gside.g.embed, &hside.g.embed);
    let gh_embed: Vec<usize> = ge.iter().flat_map(|&a| he.iter().map(move |&b| (a, b))).map(|p| index[&p]).collect();
    let mut gh_image: Vec<usize> = gh_embed.iter().map(|&x| iota[x]).collect();
    gh_image.sort_unstable();
    gh_image.dedup();
    let iso = gh_image.len() == quotient.order();

    let out = JsimGroup { gside: gside.clone(), hside: hside.clone(), group, pairs, index, t_nabla, g_plus, h_plus, p_g, p_h, quotient, iota, gh_embed, iso };
    out.verify(gh_image.len())?;
    Ok(out)
}

impl JsimGroup {
    fn verify(&self, gh_image: usize) -> Result<()> {
        let kernel: Vec<usize> = (0..self.group.order()).filter(|&x| self.iota[x] == 0).collect();
        if kernel != self.t_nabla {
            return fail("ker(iota) = T^nabla", format!("{kernel:?}"), format!("{:?}", self.t_nabla));
        }
        let z = self.gside.z_in_t.len();
        if gh_image * z != self.gside.g.order() * self.hside.g.order() {
            return fail("(G x H)/Z^nabla injects into J~sim/T^nabla", gh_image, format!("|G||H|/{z}"));
        }
        if self.gside.literal && self.hside.literal && !self.iso {
            return fail("(G x H)/Z^nabla = J~sim/T^nabla", gh_image, self.quotient.order());
        }
        for (side, plus, proj, other) in [(&self.gside, &self.g_plus, &self.p_g, &self.hside), (&self.hside, &self.h_plus, &self.p_h, &self.gside)] {
            let mut image: Vec<usize> = proj.iter().map(|&i| plus.embed[i]).collect();
            image.sort_unstable();
            image.dedup();
            if image != plus.embed {
                return fail("projection image = plus-subgroup", image.len(), plus.order());
            }
            if !side.t_times_g().iter().all(|&x| plus.contains(x)) {
                return fail("T.G in plus-subgroup", "not contained", plus.order());
            }
            let contained = side.sim_image().iter().all(|x| other.sim_image().contains(x));
            if contained != (plus.order() == side.full.order()) {
                return fail("plus-subgroup is everything iff sim images nest", plus.order(), format!("containment {contained}"));
            }
        }
        let order = self.group.order();
        if order != self.g_plus.order() * self.hside.g.order() || order != self.gside.g.order() * self.h_plus.order() {
            return fail(
                "|J~sim| = |G~+||H| = |G||H~+|",
                order,
                format!("{}*{}, {}*{}", self.g_plus.order(), self.hside.g.order(), self.gside.g.order(), self.h_plus.order()),
            );
        }
        Ok(())
    }

    /// `J̃^sim` element of `(g, h) ∈ G × H`, given as local indices.
    pub fn of_gh(&self, g: usize, h: usize) -> usize {
        self.gh_embed[g * self.hside.g.order() + h]
    }

    /// Local index in `G̃⁺` of `t ∈ T`.
    pub fn t_in_gplus(&self, t: usize) -> usize {
        self.g_plus.local_index()[&self.gside.t_embed[t]]
    }

    pub fn t_in_hplus(&self, t: usize) -> usize {
        self.h_plus.local_index()[&self.hside.t_embed[t]]
    }

    /// Local indices in `G̃⁺` of the elements of `G`, in the order of `G`.
    pub fn g_in_gplus(&self) -> Vec<usize> {
        let l = self.g_plus.local_index();
        self.gside.g.embed.iter().map(|e| l[e]).collect()
    }

    pub fn h_in_hplus(&self) -> Vec<usize> {
        let l = self.h_plus.local_index();
        self.hside.g.embed.iter().map(|e| l[e]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;
    use crate::theta::build_similitude;

    #[test]
    fn abelian_literal() {
        let z4 = cyclic(4);
        let s = build_similitude(&z4, &[0, 2], &z4, &[0, 2]).unwrap();
        let j = build_jsim(&s, &s).unwrap();
        assert_eq!(j.group.order(), 32);
        assert_eq!(j.g_plus.order(), 8);
        assert!(j.iso);
        assert_eq!(j.t_nabla.len(), 4);
        let other = build_similitude(&z4, &[0], &cyclic(2), &[0]).unwrap();
        assert!(matches!(build_jsim(&s, &other), Err(Error::MismatchedS(_))));
    }
}
