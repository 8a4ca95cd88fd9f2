//! Clifford theory for a normal subgroup of finite index: conjugate
//! characters, stabilizers, projective intertwiners with their μ_m cocycles,
//! and the isotypic decomposition of `Ind_N^G U`.

mod decompose;
mod projective;
mod rep;

use crate::error::{Error, Result};
use crate::groups::{induce, inner, restrict, Character, CharacterTable, FiniteGroup, Subgroup};

pub use decompose::{decompose_induction, twist_check, Decomposition, Summand};
pub use projective::{abelian_skew, cocycle_order_check, extension, genuine_dim_check, intertwiners, radical, Extension, ProjectiveData};
pub use rep::MatrixRep;

/// `G ⊇ N` normal, with `A = G/N` and coset representatives `s(a)`.
#[derive(Clone, Debug)]
pub struct CliffordContext {
    pub g: FiniteGroup,
    pub n: Subgroup,
    pub a: FiniteGroup,
    /// Coset of each element of `G`.
    pub proj: Vec<usize>,
    /// `s(a)`, the smallest element of each coset; `s(1)` is the identity.
    pub reps: Vec<usize>,
    n_local: Vec<Option<usize>>,
}

impl CliffordContext {
    pub fn new(g: FiniteGroup, normal: &[usize]) -> Result<Self> {
        let n = Subgroup::from_elements(&g, normal)?;
        if !g.is_normal(&n.embed) {
            return Err(Error::NotNormal(format!("{} elements of {}", n.order(), g.name())));
        }
        let (a, proj) = g.quotient(&n.embed)?;
        let mut reps = vec![usize::MAX; a.order()];
        for (x, &c) in proj.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        let mut n_local = vec![None; g.order()];
        for (i, &e) in n.embed.iter().enumerate() {
            n_local[e] = Some(i);
        }
        Ok(CliffordContext { g, n, a, proj, reps, n_local })
    }

    /// `m = |A|`.
    pub fn m(&self) -> usize {
        self.a.order()
    }

    /// Local index in `N` of a parent element.
    pub fn local(&self, x: usize) -> Option<usize> {
        self.n_local[x]
    }

    /// Context for `H ⊇ N` with `H` given as a subgroup of `G`.
    pub fn restrict_to(&self, h: &Subgroup) -> Result<Self> {
        let local = h.local_index();
        let normal = self
            .n
            .embed
            .iter()
            .map(|e| local.get(e).copied().ok_or_else(|| Error::NotSubgroup("subgroup does not contain N".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(h.group.clone(), &normal)
    }

    /// Factors `x = ν · s(a)` with `ν ∈ N`; returns `(local index of ν, a)`.
    pub fn split(&self, x: usize) -> (usize, usize) {
        let a = self.proj[x];
        let nu = self.g.mul(x, self.g.inv(self.reps[a]));
        (self.n_local[nu].expect("coset factorization lands in N"), a)
    }

    fn check_len(&self, chi: &Character) -> Result<()> {
        if chi.values.len() != self.n.order() {
            return Err(Error::NotSubgroup(format!("character has {} values, N has order {}", chi.values.len(), self.n.order())));
        }
        Ok(())
    }
}

/// `χ^g(n) = χ(g n g⁻¹)`.
pub fn conj_char(ctx: &CliffordContext, chi: &Character, g: usize) -> Result<Character> {
    ctx.check_len(chi)?;
    let values = ctx.n.embed.iter().map(|&n| chi.values[ctx.local(ctx.g.conj(g, n)).expect("N is normal")]).collect();
    Ok(Character { values })
}

/// `G_χ = {g : χ^g = χ}`.
pub fn stabilizer(ctx: &CliffordContext, chi: &Character) -> Result<Subgroup> {
    ctx.check_len(chi)?;
    let mut elems = Vec::new();
    for g in 0..ctx.g.order() {
        if conj_char(ctx, chi, g)?.approx_eq(chi) {
            elems.push(g);
        }
    }
    Subgroup::from_elements(&ctx.g, &elems)
}

/// Restriction of an irreducible: common multiplicity and the orbit, as
/// indices into the table of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub e: i64,
    pub orbit: Vec<usize>,
}

pub fn clifford_restriction(ctx: &CliffordContext, pi: &Character, table_n: &CharacterTable) -> Result<Restriction> {
    if pi.values.len() != ctx.g.order() || inner(pi, pi)? != 1 {
        return Err(Error::NotIrreducible(format!("character of {} has norm other than 1", ctx.g.name())));
    }
    let mult = table_n.decompose(&restrict(pi, &ctx.n))?;
    let support: Vec<usize> = (0..mult.len()).filter(|&i| mult[i] > 0).collect();
    let first = table_n.irreps[support[0]].clone();
    let mut orbit = Vec::new();
    for &s in &ctx.reps {
        let c = conj_char(ctx, &first, s)?;
        let i = table_n.index_of(&c).ok_or_else(|| Error::SnapFailure("conjugate character is not in the table".into()))?;
        orbit.push(i);
    }
    orbit.sort_unstable();
    orbit.dedup();
    let e = mult[support[0]];
    if orbit != support || support.iter().any(|&i| mult[i] != e) {
        return Err(Error::IdentityFailure {
            identity: "restriction is e times one orbit".into(),
            lhs: format!("multiplicities {mult:?}"),
            rhs: format!("orbit {orbit:?}"),
        });
    }
    Ok(Restriction { e, orbit })
}

/// Restriction of a character of `H ⊇ N` to `N`.
pub fn restrict_to_n(ctx: &CliffordContext, h: &Subgroup, v: &Character) -> Result<Character> {
    let local = h.local_index();
    let values = ctx
        .n
        .embed
        .iter()
        .map(|e| local.get(e).map(|&i| v.values[i]).ok_or_else(|| Error::NotSubgroup("subgroup does not contain N".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Character { values })
}

/// Whether `Ind_{G_U}^G V` is irreducible for an irreducible `V` of `G_U`
/// lying over `U`.
pub fn induced_irreducibility_check(ctx: &CliffordContext, gu: &Subgroup, v: &Character, u: &Character) -> Result<bool> {
    ctx.check_len(u)?;
    if inner(&restrict_to_n(ctx, gu, v)?, u)? <= 0 {
        return Err(Error::HypothesisFailure("U does not occur in the restriction of V to N".into()));
    }
    let classes = ctx.g.conjugacy_classes();
    let ind = induce(v, gu, &ctx.g, &classes)?;
    Ok(inner(&ind, &ind)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{character_table, cyclic, dihedral, quaternion, symmetric};

    fn s3_ctx() -> CliffordContext {
        let s3 = symmetric(3).unwrap();
        let a3 = s3.closure(&[s3.generators()[1]]);
        CliffordContext::new(s3, &a3).unwrap()
    }

    #[test]
    fn context_rejects_non_normal() {
        let s3 = symmetric(3).unwrap();
        let t = s3.closure(&[s3.generators()[0]]);
        assert!(matches!(CliffordContext::new(s3, &t), Err(Error::NotNormal(_))));
        let ctx = s3_ctx();
        assert_eq!(ctx.m(), 2);
        assert_eq!(ctx.reps[0], 0);
    }

    #[test]
    fn cubic_character_of_a3_has_stabilizer_a3() {
        let ctx = s3_ctx();
        let tn = character_table(&ctx.n.group).unwrap();
        let omega = &tn.irreps[1];
        assert_eq!(stabilizer(&ctx, omega).unwrap().embed, ctx.n.embed);
        for &n in &ctx.n.embed {
            assert!(conj_char(&ctx, omega, n).unwrap().approx_eq(omega));
        }
        let t = ctx.reps[1];
        assert!(conj_char(&ctx, omega, t).unwrap().approx_eq(&omega.conj()));
    }

    #[test]
    fn restrictions() {
        let ctx = s3_ctx();
        let tg = character_table(&ctx.g).unwrap();
        let tn = character_table(&ctx.n.group).unwrap();
        let r = clifford_restriction(&ctx, &tg.irreps[2], &tn).unwrap();
        assert_eq!(r, Restriction { e: 1, orbit: vec![1, 2] });
        let q8 = quaternion();
        let z = q8.center();
        let ctx = CliffordContext::new(q8, &z).unwrap();
        let tg = character_table(&ctx.g).unwrap();
        let tn = character_table(&ctx.n.group).unwrap();
        let r = clifford_restriction(&ctx, &tg.irreps[4], &tn).unwrap();
        assert_eq!(r.e, 2);
        assert_eq!(r.orbit.len(), 1);
        let reducible = tg.irreps[0].add(&tg.irreps[1]);
        assert!(matches!(clifford_restriction(&ctx, &reducible, &tn), Err(Error::NotIrreducible(_))));
    }

    #[test]
    fn induced_irreducibility() {
        let ctx = s3_ctx();
        let tn = character_table(&ctx.n.group).unwrap();
        let omega = &tn.irreps[1];
        let gu = stabilizer(&ctx, omega).unwrap();
        assert!(induced_irreducibility_check(&ctx, &gu, omega, omega).unwrap());
        assert!(matches!(induced_irreducibility_check(&ctx, &gu, omega, &tn.irreps[0]), Err(Error::HypothesisFailure(_))));
        let d8 = dihedral(4);
        let r2 = d8.eval_word(&["r", "s"], "r^2").unwrap();
        let s = d8.eval_word(&["r", "s"], "s").unwrap();
        let klein = d8.closure(&[r2, s]);
        let ctx = CliffordContext::new(d8, &klein).unwrap();
        let tn = character_table(&ctx.n.group).unwrap();
        let moved: Vec<&Character> = tn.irreps.iter().filter(|chi| stabilizer(&ctx, chi).unwrap().order() == 4).collect();
        assert_eq!(moved.len(), 2);
        let gu = stabilizer(&ctx, moved[0]).unwrap();
        assert_eq!(gu.index_in(&ctx.g), 2);
        assert!(induced_irreducibility_check(&ctx, &gu, moved[0], moved[0]).unwrap());
        let z4 = cyclic(4);
        let ctx = CliffordContext::new(z4.clone(), &z4.closure(&[2])).unwrap();
        assert_eq!(ctx.split(3).1, ctx.proj[3]);
    }
}
