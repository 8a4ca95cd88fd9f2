use std::path::PathBuf;

use algver_core::groups::{self, parse_cyclotomic, CharacterTable, FiniteGroup};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

const EMBEDDED: [(&str, &str); 7] = [
    ("composition", include_str!("../fixtures/composition.json")),
    ("cubic", include_str!("../fixtures/cubic.json")),
    ("jordan", include_str!("../fixtures/jordan.json")),
    ("tori", include_str!("../fixtures/tori.json")),
    ("clifford", include_str!("../fixtures/clifford.json")),
    ("theta", include_str!("../fixtures/theta.json")),
    ("similitude", include_str!("../fixtures/similitude.json")),
];

/// Built-in fixtures, optionally shadowed by `<dir>/<suite>.json`.
#[derive(Clone, Debug, Default)]
pub struct FixtureSource {
    pub dir: Option<PathBuf>,
}

impl FixtureSource {
    pub fn load<T: DeserializeOwned>(&self, suite: &str) -> CliResult<T> {
        let file = format!("{suite}.json");
        let text = match self.dir.as_ref().map(|d| d.join(&file)).filter(|p| p.is_file()) {
            Some(path) => std::fs::read_to_string(&path).map_err(|e| CliError::fixture(&path.display().to_string(), e))?,
            None => EMBEDDED.iter().find(|(n, _)| *n == suite).map(|(_, t)| t.to_string()).ok_or_else(|| CliError::fixture(&file, "no such fixture"))?,
        };
        serde_json::from_str(&text).map_err(|e| CliError::fixture(&file, e))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionFixture {
    pub samples: u64,
    pub algebras: Vec<String>,
    pub control: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubicFixture {
    pub trials: u64,
    pub oracle_matrices: u64,
    pub rescale_samples: u64,
    pub rescale_factors: Vec<String>,
    pub algebras: Vec<String>,
    pub control: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JordanEntry {
    pub pair: String,
    #[serde(default)]
    pub field: Option<String>,
    pub expect: Expect,
    #[serde(default)]
    pub exhaustive: bool,
    #[serde(default)]
    pub samples: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JordanFixture {
    pub pairs: Vec<JordanEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToriFixture {
    pub grid: usize,
    pub kernel_cases: Vec<(i128, usize)>,
    pub center_cases: Vec<(u64, u32)>,
}

/// Group element as a Cayley-table index or a word in the generator names.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(usize),
    Word(String),
}

/// Subset of a group: `"center"` or a list of elements.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SubsetSpec {
    Named(String),
    Elements(Vec<ElemRef>),
}

/// Irreducible chosen by its position, degree, or value at one element.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharSel {
    #[serde(default)]
    pub index: Option<usize>,
    #[serde(default)]
    pub degree: Option<i64>,
    #[serde(default)]
    pub at: Option<ElemRef>,
    #[serde(default)]
    pub at_pair: Option<(ElemRef, ElemRef)>,
    #[serde(default)]
    pub value: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepSpec {
    /// Every linear character of `N`.
    Linear,
    Matrices {
        gens: Vec<ElemRef>,
        images: Vec<Vec<Vec<String>>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenuineSpec {
    pub rep: CharSel,
    pub dim: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliffordEntry {
    pub name: String,
    pub group: String,
    #[serde(default)]
    pub names: Vec<String>,
    pub normal: SubsetSpec,
    pub reps: Vec<RepSpec>,
    #[serde(default)]
    pub genuine: Option<GenuineSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliffordFixture {
    pub fixtures: Vec<CliffordEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiteralSide {
    pub group: String,
    #[serde(default)]
    pub names: Vec<String>,
    pub z: SubsetSpec,
    pub t: String,
    #[serde(default)]
    pub t_names: Vec<String>,
    /// Images in `T` of the elements of `z`, in order.
    pub j: Vec<ElemRef>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsSide {
    pub group: String,
    #[serde(default)]
    pub names: Vec<String>,
    /// Images in `s` of the generators of `group`.
    pub sim: Vec<ElemRef>,
    pub s: String,
    pub t: String,
    /// Images in `group` of the generators of `t`.
    pub t_embed: Vec<ElemRef>,
    /// Images in `s` of the generators of `t`.
    pub t_to_s: Vec<ElemRef>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Literal(LiteralSide),
    Points(PointsSide),
}

#[derive(Debug, Deserialize)]
pub struct NamedSide {
    pub name: String,
    #[serde(flatten)]
    pub spec: SideSpec,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OmegaFixture {
    Trivial,
    Regular,
    /// `(character of G, character of H, multiplicity)`.
    Tensor(Vec<(CharSel, CharSel, i64)>),
    /// `(character of J^sim, multiplicity)`.
    Irreducibles(Vec<(CharSel, i64)>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaEntry {
    pub name: String,
    pub g: String,
    pub h: String,
    pub omega: OmegaFixture,
    #[serde(default)]
    pub howe_isometry: Option<bool>,
    /// Generator sets of subgroups `H′ ≤ H`, as elements of `H̃`.
    #[serde(default)]
    pub seesaw: Option<Vec<Vec<ElemRef>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaFixture {
    pub sides: Vec<NamedSide>,
    pub instances: Vec<ThetaEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimilitudeEntry {
    pub map: String,
    #[serde(default)]
    pub field: Option<String>,
    #[serde(default)]
    pub q: Option<u64>,
    #[serde(default)]
    pub n: Option<usize>,
    pub surjective: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimilitudeFixture {
    pub entries: Vec<SimilitudeEntry>,
}

/// Splits `s` at top-level commas.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|a| !a.is_empty());
    out
}

fn parse_usizes(args: &[&str], spec: &str) -> Result<Vec<usize>, String> {
    args.iter().map(|a| a.parse::<usize>().map_err(|_| format!("group '{spec}': bad parameter '{a}'"))).collect()
}

/// Builds a group from `cyclic(4)`, `dihedral(4)`, `quaternion`, `klein`,
/// `symmetric(3)`, `alternating(4)`, `sl2(3)`, `abelian(2,2)`,
/// `product(A,B)` or `perm(3; (1 2), (1 2 3))`.
pub fn parse_group(spec: &str) -> Result<FiniteGroup, String> {
    let spec = spec.trim();
    let (head, inner) = match spec.split_once('(') {
        Some((h, rest)) => (h.trim(), rest.strip_suffix(')').ok_or_else(|| format!("group '{spec}': unbalanced parentheses"))?),
        None => (spec, ""),
    };
    let one = |args: &[usize]| match args {
        [n] => Ok(*n),
        _ => Err(format!("group '{spec}': expected one parameter")),
    };
    let core = |r: algver_core::Result<FiniteGroup>| r.map_err(|e| format!("group '{spec}': {e}"));
    if head == "perm" {
        let (degree, gens) = inner.split_once(';').ok_or_else(|| format!("group '{spec}': expected perm(degree; cycles, ...)"))?;
        let degree = degree.trim().parse::<usize>().map_err(|_| format!("group '{spec}': bad degree"))?;
        let gens: Vec<&str> = gens.split(',').map(str::trim).collect();
        return core(groups::from_cycles(spec, &gens, degree));
    }
    let args = split_args(inner);
    match head {
        "quaternion" if args.is_empty() => Ok(groups::quaternion()),
        "klein" if args.is_empty() => Ok(groups::klein()),
        "cyclic" => Ok(groups::cyclic(one(&parse_usizes(&args, spec)?)?)),
        "dihedral" => Ok(groups::dihedral(one(&parse_usizes(&args, spec)?)?)),
        "symmetric" => core(groups::symmetric(one(&parse_usizes(&args, spec)?)?)),
        "alternating" => core(groups::alternating(one(&parse_usizes(&args, spec)?)?)),
        "sl2" => core(groups::sl2(one(&parse_usizes(&args, spec)?)? as u64)),
        "abelian" => core(groups::abelian(&parse_usizes(&args, spec)?)),
        "product" => match args.as_slice() {
            [a, b] => core(parse_group(a)?.direct_product(&parse_group(b)?)),
            _ => Err(format!("group '{spec}': product takes two groups")),
        },
        _ => Err(format!("unknown group '{spec}'")),
    }
}

/// Resolves an element against `g` with generator names `names`.
pub fn resolve(g: &FiniteGroup, names: &[String], e: &ElemRef) -> Result<usize, String> {
    match e {
        ElemRef::Index(i) if *i < g.order() => Ok(*i),
        ElemRef::Index(i) => Err(format!("element {i} out of range for {} of order {}", g.name(), g.order())),
        ElemRef::Word(w) => {
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            g.eval_word(&names, w).map_err(|e| format!("{}: {e}", g.name()))
        }
    }
}

pub fn resolve_all(g: &FiniteGroup, names: &[String], es: &[ElemRef]) -> Result<Vec<usize>, String> {
    es.iter().map(|e| resolve(g, names, e)).collect()
}

pub fn resolve_subset(g: &FiniteGroup, names: &[String], s: &SubsetSpec) -> Result<Vec<usize>, String> {
    match s {
        SubsetSpec::Named(n) if n == "center" => Ok(g.center()),
        SubsetSpec::Named(n) => Err(format!("unknown subset '{n}'")),
        SubsetSpec::Elements(es) => resolve_all(g, names, es),
    }
}

/// Index in `table` of the first irreducible matching `sel`. `point` maps
/// the selector's element to an index of the table's group.
pub fn select_char(table: &CharacterTable, sel: &CharSel, point: impl Fn(&CharSel) -> Result<Option<usize>, String>) -> Result<usize, String> {
    let at = point(sel)?;
    let value = sel.value.as_deref().map(|v| parse_cyclotomic(v).map_err(|e| e.to_string())).transpose()?;
    if at.is_some() != value.is_some() {
        return Err("'value' and 'at' must be given together".into());
    }
    table
        .irreps
        .iter()
        .enumerate()
        .position(|(i, chi)| {
            sel.index.is_none_or(|k| k == i)
                && sel.degree.is_none_or(|d| chi.degree_int().ok() == Some(d))
                && match (at, value) {
                    (Some(x), Some(v)) => (chi.values[x] - v).norm() < groups::SNAP_TOL,
                    _ => true,
                }
        })
        .ok_or_else(|| format!("no irreducible matches {sel:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_grammar() {
        assert_eq!(parse_group("product(symmetric(3),cyclic(4))").unwrap().order(), 24);
        assert_eq!(parse_group("abelian(2,2)").unwrap().order(), 4);
        assert_eq!(parse_group("perm(4; (1 2 3 4), (1 3))").unwrap().order(), 8);
        assert_eq!(parse_group("sl2(3)").unwrap().order(), 24);
        assert!(parse_group("cyclic(x)").is_err());
        assert!(parse_group("monster").is_err());
    }

    #[test]
    fn embedded_fixtures_parse() {
        let src = FixtureSource::default();
        src.load::<CompositionFixture>("composition").unwrap();
        src.load::<CubicFixture>("cubic").unwrap();
        src.load::<JordanFixture>("jordan").unwrap();
        src.load::<ToriFixture>("tori").unwrap();
        src.load::<CliffordFixture>("clifford").unwrap();
        src.load::<ThetaFixture>("theta").unwrap();
        src.load::<SimilitudeFixture>("similitude").unwrap();
    }
}
