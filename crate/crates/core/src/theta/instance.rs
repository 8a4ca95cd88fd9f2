use super::jsim::JsimGroup;
use crate::error::{Error, Result};
use crate::groups::{character_table, Character, CharacterTable};

/// How `Ω` is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaSpec {
    Trivial,
    /// Regular character of `J^sim`.
    Regular,
    /// `(index into Irr(J^sim), multiplicity)`.
    Irreducibles(Vec<(usize, i64)>),
    /// `(index into Irr(G), index into Irr(H), multiplicity)`; needs
    /// `J̃^sim/T^∇ = (G × H)/Z^∇`.
    Tensor(Vec<(usize, usize, i64)>),
}

/// Dual pair data with `Ω` stored on `J̃^sim` (trivial on `T^∇`) and the
/// character tables every check needs.
#[derive(Clone, Debug)]
pub struct ThetaInstance {
    pub name: String,
    pub jsim: JsimGroup,
    pub omega: Character,
    pub table_g: CharacterTable,
    pub table_h: CharacterTable,
    pub table_gplus: CharacterTable,
    pub table_hplus: CharacterTable,
    pub table_t: CharacterTable,
}

impl ThetaInstance {
    pub fn new(name: impl Into<String>, jsim: JsimGroup, spec: &OmegaSpec) -> Result<Self> {
        let on_quotient = |chi: Character| Character { values: jsim.iota.iter().map(|&q| chi.values[q]).collect() };
        let table_g = character_table(&jsim.gside.g.group)?;
        let table_h = character_table(&jsim.hside.g.group)?;
        let omega = match spec {
            OmegaSpec::Trivial => Character::trivial(jsim.group.order()),
            OmegaSpec::Regular => on_quotient(Character::regular(jsim.quotient.order())),
            OmegaSpec::Irreducibles(list) => {
                let t = character_table(&jsim.quotient)?;
                let mut chi = Character::zero(jsim.quotient.order());
                for &(i, m) in list {
                    let psi = t.irreps.get(i).ok_or_else(|| Error::ShapeMismatch(format!("J^sim has {} irreducibles, asked for {i}", t.irreps.len())))?;
                    chi = chi.add(&psi.scale(m as f64));
                }
                on_quotient(chi)
            }
            OmegaSpec::Tensor(list) => {
                let (ng, nh) = (jsim.gside.g.order(), jsim.hside.g.order());
                let mut chi = Character::zero(ng * nh);
                for &(i, j, m) in list {
                    let (a, b) = match (table_g.irreps.get(i), table_h.irreps.get(j)) {
                        (Some(a), Some(b)) => (a, b),
                        _ => return Err(Error::ShapeMismatch(format!("no irreducible pair ({i}, {j})"))),
                    };
                    for x in 0..ng {
                        for y in 0..nh {
                            chi.values[x * nh + y] += a.values[x] * b.values[y] * m as f64;
                        }
                    }
                }
                return Self::from_gh_character(name, jsim, &chi);
            }
        };
        Self::assemble(name.into(), jsim, omega, table_g, table_h)
    }

    /// `Ω` given on `G × H`; it must be trivial on `Z^∇` and the natural map
    /// `(G × H)/Z^∇ → J̃^sim/T^∇` must be onto.
    pub fn from_gh_character(name: impl Into<String>, jsim: JsimGroup, chi: &Character) -> Result<Self> {
        let (ng, nh) = (jsim.gside.g.order(), jsim.hside.g.order());
        if chi.values.len() != ng * nh {
            return Err(Error::ShapeMismatch(format!("{} values for G x H of order {}", chi.values.len(), ng * nh)));
        }
        if !jsim.iso {
            return Err(Error::HypothesisFailure("J~sim/T^nabla is larger than (G x H)/Z^nabla".into()));
        }
        let (lg, lh) = (jsim.gside.g.local_index(), jsim.hside.g.local_index());
        let t = &jsim.gside.t;
        for &z in &jsim.gside.z_in_t {
            let n = lg[&jsim.gside.t_embed[z]] * nh + lh[&jsim.hside.t_embed[t.inv(z)]];
            if (chi.values[n] - chi.values[0]).norm() > crate::groups::SNAP_TOL {
                return Err(Error::HypothesisFailure(format!("Omega is not trivial on Z^nabla at {z}")));
            }
        }
        let mut lift = vec![usize::MAX; jsim.quotient.order()];
        for (i, &x) in jsim.gh_embed.iter().enumerate() {
            if lift[jsim.iota[x]] == usize::MAX {
                lift[jsim.iota[x]] = i;
            }
        }
        let omega = Character { values: jsim.iota.iter().map(|&q| chi.values[lift[q]]).collect() };
        let table_g = character_table(&jsim.gside.g.group)?;
        let table_h = character_table(&jsim.hside.g.group)?;
        Self::assemble(name.into(), jsim, omega, table_g, table_h)
    }

    fn assemble(name: String, jsim: JsimGroup, omega: Character, table_g: CharacterTable, table_h: CharacterTable) -> Result<Self> {
        if omega.values.len() != jsim.group.order() || !omega.is_class_function(&jsim.group) {
            return Err(Error::HypothesisFailure("Omega is not a class function on J~sim".into()));
        }
        Ok(ThetaInstance {
            name,
            table_gplus: character_table(&jsim.g_plus.group)?,
            table_hplus: character_table(&jsim.h_plus.group)?,
            table_t: character_table(&jsim.gside.t)?,
            jsim,
            omega,
            table_g,
            table_h,
        })
    }
}
