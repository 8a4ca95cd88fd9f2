use super::projective::{extension, intertwiners, radical, Extension, ProjectiveData};
use super::rep::MatrixRep;
use super::{stabilizer, CliffordContext};
use crate::error::{Error, Result};
use crate::groups::cmat;
use crate::groups::{character_table, induce, inflate, inner, Character, Subgroup};

/// One isotypic summand `dim(E) · Ind_{G_U}^G(U ⊗ E)`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub dim_e: i64,
    pub induced: Character,
}

/// Certificate for `Ind_N^G U = ⊕_E dim(E) · Ind_{G_U}^G(U ⊗ E)`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub stabilizer: Subgroup,
    pub data: ProjectiveData,
    pub extension_order: usize,
    pub r: usize,
    pub class_trivial: bool,
    pub lhs: Character,
    pub summands: Vec<Summand>,
}

fn fmt_char(chi: &Character) -> String {
    let vals: Vec<String> = chi.values.iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
    format!("[{}]", vals.join(", "))
}

/// Character of `U ⊗ E` on `G_U`: `χ(ν s(a)) = tr(U(ν) A_a) · χ_E(1, a)`.
fn tensor_character(sub: &CliffordContext, u: &MatrixRep, data: &ProjectiveData, e: &Character) -> Character {
    let values = (0..sub.g.order())
        .map(|x| {
            let (nu, a) = sub.split(x);
            cmat::trace(&cmat::mul(&u.mats[nu], &data.intertwiners[a])) * Extension::at_section(e, a)
        })
        .collect();
    Character { values }
}

pub fn decompose_induction(ctx: &CliffordContext, u: &MatrixRep) -> Result<Decomposition> {
    if u.mats.len() != ctx.n.order() {
        return Err(Error::ShapeMismatch(format!("{} matrices for N of order {}", u.mats.len(), ctx.n.order())));
    }
    let chi_u = u.character();
    let gu = stabilizer(ctx, &chi_u)?;
    let sub = ctx.restrict_to(&gu)?;
    let data = intertwiners(&sub, u)?;
    let ext = extension(&sub.a, &data)?;
    let classes = ctx.g.conjugacy_classes();
    let lhs = induce(&chi_u, &ctx.n, &ctx.g, &classes)?;
    let mut summands = Vec::new();
    let mut rhs = Character::zero(ctx.g.order());
    for e in ext.genuine_chars() {
        let dim_e = e.degree_int()?;
        let induced = induce(&tensor_character(&sub, u, &data, e), &gu, &ctx.g, &classes)?;
        rhs = rhs.add(&induced.scale(dim_e as f64));
        summands.push(Summand { dim_e, induced });
    }
    if !lhs.approx_eq(&rhs) {
        return Err(Error::IdentityFailure { identity: "Ind_N^G U = sum of dim(E) Ind(U x E)".into(), lhs: fmt_char(&lhs), rhs: fmt_char(&rhs) });
    }
    for (i, x) in summands.iter().enumerate() {
        for (j, y) in summands.iter().enumerate() {
            let ip = inner(&x.induced, &y.induced)?;
            if ip != i64::from(i == j) {
                return Err(Error::IdentityFailure {
                    identity: "summands are irreducible and pairwise distinct".into(),
                    lhs: format!("<{i}, {j}> = {ip}"),
                    rhs: format!("{}", i64::from(i == j)),
                });
            }
        }
    }
    Ok(Decomposition { stabilizer: gu, extension_order: ext.group.order(), r: ext.r, class_trivial: ext.class_is_trivial(), data, lhs, summands })
}

/// For `G_U = G` and abelian `A`: twisting one constituent by the characters
/// of `A` reaches every irreducible over `U`, and two twists agree exactly
/// when the characters agree on the radical of the skew form.
pub fn twist_check(ctx: &CliffordContext, u: &MatrixRep) -> Result<bool> {
    let data = intertwiners(ctx, u)?;
    let rad = radical(&ctx.a, &data)?;
    let ext = extension(&ctx.a, &data)?;
    let over_u: Vec<Character> = ext.genuine_chars().map(|e| tensor_character(ctx, u, &data, e)).collect();
    let a_chars = character_table(&ctx.a)?.irreps;
    let lambdas: Vec<Character> = a_chars.iter().map(|l| inflate(l, &ctx.proj)).collect();
    let twists: Vec<Character> = lambdas.iter().map(|l| over_u[0].tensor(l)).collect();
    let covers = over_u.iter().all(|chi| twists.iter().any(|t| t.approx_eq(chi)));
    let closed = twists.iter().all(|t| over_u.iter().any(|chi| chi.approx_eq(t)));
    let agree_on_rad = |x: &Character, y: &Character| rad.iter().all(|&a| (x.values[a] - y.values[a]).norm() < 1e-6);
    let mut criterion = true;
    for i in 0..twists.len() {
        for j in 0..twists.len() {
            criterion &= twists[i].approx_eq(&twists[j]) == agree_on_rad(&a_chars[i], &a_chars[j]);
        }
    }
    Ok(covers && closed && criterion)
}
