use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Subgroup};

/// `G̃` with `G = ker(sim)` normal, `T` central, and `sim: G̃ → S` where `S`
/// is abelian and contains `T/j(Z)` through `t_to_s`.
#[derive(Clone, Debug)]
pub struct SimilitudeGroup {
    pub full: FiniteGroup,
    pub g: Subgroup,
    pub t: FiniteGroup,
    /// `T → G̃`.
    pub t_embed: Vec<usize>,
    pub s: FiniteGroup,
    /// `T → S`, with kernel `j(Z)`.
    pub t_to_s: Vec<usize>,
    /// `G̃ → S`.
    pub sim: Vec<usize>,
    /// `j(Z)` as elements of `T`.
    pub z_in_t: Vec<usize>,
    /// Whether `G̃ = (G × T)/Z^∇` was built literally.
    pub literal: bool,
    /// Image in `G̃` of each element of the input group: `G` for the literal
    /// model, `G̃` itself for the general one.
    pub source: Vec<usize>,
}

fn require_abelian(g: &FiniteGroup, what: &str) -> Result<()> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian(format!("{what} ({})", g.name())));
    }
    Ok(())
}

fn check_hom(src: &FiniteGroup, dst: &FiniteGroup, map: &[usize], what: &str) -> Result<()> {
    for a in 0..src.order() {
        for b in 0..src.order() {
            if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                return Err(Error::NotHomomorphism(format!("{what} at ({a}, {b})")));
            }
        }
    }
    Ok(())
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `G̃ = (G × T)/Z^∇` with `Z^∇ = {(z, j(z)⁻¹)}` and `sim[g, t] = t·j(Z)`.
/// `z` lists elements of `Z(G)` and `j[k]` is the image of `z[k]` in `T`.
pub fn build_similitude(g: &FiniteGroup, z: &[usize], t: &FiniteGroup, j: &[usize]) -> Result<SimilitudeGroup> {
    if z.len() != j.len() {
        return Err(Error::ShapeMismatch(format!("{} elements of Z, {} images under j", z.len(), j.len())));
    }
    require_abelian(t, "T")?;
    if !g.is_subgroup(z) {
        return Err(Error::NotSubgroup("Z is not a subgroup of G".into()));
    }
    if let Some(&a) = z.iter().find(|&&a| (0..g.order()).any(|b| !g.commutes(a, b))) {
        return Err(Error::NotCentral(format!("element {a} of Z is not central in {}", g.name())));
    }
    if sorted(j.to_vec()).len() != j.len() {
        return Err(Error::NotInjective("j identifies two elements of Z".into()));
    }
    for (p, &a) in z.iter().enumerate() {
        for (q, &b) in z.iter().enumerate() {
            let r = z.iter().position(|&c| c == g.mul(a, b)).expect("Z is closed");
            if j[r] != t.mul(j[p], j[q]) {
                return Err(Error::NotHomomorphism(format!("j fails at ({a}, {b})")));
            }
        }
    }
    let nt = t.order();
    let prod = g.direct_product(t)?;
    let nabla: Vec<usize> = z.iter().zip(j).map(|(&a, &b)| a * nt + t.inv(b)).collect();
    let (full, proj) = prod.central_quotient(&nabla)?;
    let z_in_t = sorted(j.to_vec());
    let (s, t_to_s) = t.quotient(&z_in_t)?;
    let mut sim = vec![usize::MAX; full.order()];
    for x in 0..prod.order() {
        let v = t_to_s[x % nt];
        if sim[proj[x]] != usize::MAX && sim[proj[x]] != v {
            return Err(Error::NotHomomorphism("sim is not constant on Z^∇-cosets".into()));
        }
        sim[proj[x]] = v;
    }
    let g_elems: Vec<usize> = (0..g.order()).map(|a| proj[a * nt]).collect();
    let t_embed: Vec<usize> = (0..nt).map(|b| proj[b]).collect();
    let out = SimilitudeGroup {
        g: Subgroup::from_elements(&full, &g_elems)?,
        source: g_elems,
        full: full.with_name(format!("({}x{})/Z", g.name(), t.name())),
        t: t.clone(),
        t_embed,
        s,
        t_to_s,
        sim,
        z_in_t,
        literal: true,
    };
    out.verify_literal(g, z.len())?;
    Ok(out)
}

impl SimilitudeGroup {
    /// General model: `G̃` with generator images of `sim` in `S`, the central
    /// embedding `T → G̃` on generators of `T`, and `T → S` on generators.
    pub fn from_points(full: FiniteGroup, sim_gens: &[usize], s: FiniteGroup, t: FiniteGroup, t_embed_gens: &[usize], t_to_s_gens: &[usize]) -> Result<Self> {
        require_abelian(&s, "S")?;
        require_abelian(&t, "T")?;
        let sim = full.hom_from_generators(sim_gens, &s)?;
        let t_embed = t.hom_from_generators(t_embed_gens, &full)?;
        let t_to_s = t.hom_from_generators(t_to_s_gens, &s)?;
        if sorted(t_embed.clone()).len() != t.order() {
            return Err(Error::NotInjective("T → G̃ is not injective".into()));
        }
        if let Some(&a) = t_embed.iter().find(|&&a| (0..full.order()).any(|b| !full.commutes(a, b))) {
            return Err(Error::NotCentral(format!("image {a} of T is not central")));
        }
        if (0..t.order()).any(|x| sim[t_embed[x]] != t_to_s[x]) {
            return Err(Error::IdentityFailure { identity: "sim restricted to T equals T → S".into(), lhs: "sim∘embed".into(), rhs: "t_to_s".into() });
        }
        let kernel: Vec<usize> = (0..full.order()).filter(|&x| sim[x] == 0).collect();
        let z_in_t: Vec<usize> = (0..t.order()).filter(|&x| t_to_s[x] == 0).collect();
        let source = (0..full.order()).collect();
        Ok(SimilitudeGroup { g: Subgroup::from_elements(&full, &kernel)?, full, t, t_embed, s, t_to_s, sim, z_in_t, literal: false, source })
    }

    /// `|G̃| = |G|·|T|/|Z|`, exactness of `G → G̃ → S` at `G̃` and of
    /// `T → G̃ → G/Z → 1`, by counting.
    fn verify_literal(&self, g: &FiniteGroup, z_order: usize) -> Result<()> {
        let fail = |identity: &str, lhs: String, rhs: String| Err(Error::IdentityFailure { identity: identity.into(), lhs, rhs });
        if self.full.order() * z_order != g.order() * self.t.order() {
            return fail("|G~| = |G||T|/|Z|", self.full.order().to_string(), format!("{}*{}/{}", g.order(), self.t.order(), z_order));
        }
        let kernel: Vec<usize> = (0..self.full.order()).filter(|&x| self.sim[x] == 0).collect();
        if kernel != self.g.embed {
            return fail("ker(sim) = G", format!("{} elements", kernel.len()), format!("{} elements", self.g.order()));
        }
        let image = sorted(self.sim.clone());
        if image.len() != self.s.order() {
            return fail("sim onto T/j(Z)", image.len().to_string(), self.s.order().to_string());
        }
        let t_img = sorted(self.t_embed.clone());
        let (q, _) = self.full.quotient(&t_img)?;
        if q.order() * z_order != g.order() {
            return fail("G~/T = G/Z", q.order().to_string(), format!("{}/{}", g.order(), z_order));
        }
        Ok(())
    }

    pub fn sim_image(&self) -> Vec<usize> {
        sorted(self.sim.clone())
    }

    /// `j(Z)` as elements of `G̃`.
    pub fn z_embed(&self) -> Vec<usize> {
        self.z_in_t.iter().map(|&z| self.t_embed[z]).collect()
    }

    /// `T·G` as sorted elements of `G̃`.
    pub fn t_times_g(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.t_embed.iter().flat_map(|&t| self.g.embed.iter().map(move |&g| (t, g))).map(|(t, g)| self.full.mul(t, g)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Exactness checks for the general model: `T ∩ G = j(Z)` and `sim` a
    /// homomorphism.
    pub fn verify(&self) -> Result<()> {
        check_hom(&self.full, &self.s, &self.sim, "sim")?;
        let meet: Vec<usize> = sorted(self.t_embed.iter().copied().filter(|&x| self.g.contains(x)).collect());
        if meet != sorted(self.z_embed()) {
            return Err(Error::IdentityFailure { identity: "T ∩ G = j(Z)".into(), lhs: format!("{meet:?}"), rhs: format!("{:?}", self.z_embed()) });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, quaternion};

    #[test]
    fn literal_orders() {
        let z4 = cyclic(4);
        let s = build_similitude(&z4, &[0, 2], &z4, &[0, 2]).unwrap();
        assert_eq!(s.full.order(), 8);
        assert_eq!(s.s.order(), 2);
        s.verify().unwrap();
        let q8 = quaternion();
        let s = build_similitude(&q8, &q8.center(), &z4, &[0, 2]).unwrap();
        assert_eq!(s.full.order(), 16);
        assert_eq!(s.sim_image().len(), 2);
        assert!(matches!(build_similitude(&z4, &[0, 2], &z4, &[0, 0]), Err(Error::NotInjective(_))));
        let d8 = crate::groups::dihedral(4);
        assert!(matches!(build_similitude(&d8, &[0, d8.generators()[1]], &cyclic(2), &[0, 1]), Err(Error::NotCentral(_))));
    }
}
