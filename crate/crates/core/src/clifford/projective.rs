use std::f64::consts::TAU;

use num_complex::Complex64;

use super::rep::MatrixRep;
use super::{conj_char, CliffordContext};
use crate::error::{Error, Result};
use crate::groups::cmat::{self, CMat};
use crate::groups::{character_table, Character, CharacterTable, FiniteGroup, SNAP_TOL};

const NULL_TOL: f64 = 1e-8;

/// Normalized intertwiners `A_a = A_{s(a)}` and their cocycle
/// `A_a A_b = c(a, b) U(s(a)s(b)s(ab)⁻¹) A_{ab}`.
#[derive(Clone, Debug)]
pub struct ProjectiveData {
    pub m: usize,
    pub dim: usize,
    pub intertwiners: Vec<CMat>,
    pub cocycle: Vec<Vec<Complex64>>,
    /// `c(a, b) = exp(2πi k / m)` with `k` stored here.
    pub exponents: Vec<Vec<usize>>,
    /// Number of determinant-one scalings left for each `a`.
    pub residual_choices: usize,
}

impl ProjectiveData {
    /// `r`: the lcm of the orders of the cocycle values.
    pub fn value_order(&self) -> usize {
        self.exponents.iter().flatten().map(|&k| self.m / num_integer::gcd(k, self.m)).fold(1, num_integer::lcm)
    }
}

fn solve_intertwiner(ctx: &CliffordContext, u: &MatrixRep, g: usize) -> Result<CMat> {
    let k = u.dim;
    let mut rows = Vec::with_capacity(ctx.n.order() * k * k);
    for (i, &n) in ctx.n.embed.iter().enumerate() {
        let un = &u.mats[i];
        let ug = &u.mats[ctx.local(ctx.g.conj(g, n)).expect("N is normal")];
        for p in 0..k {
            for q in 0..k {
                let mut row = vec![Complex64::new(0.0, 0.0); k * k];
                for r in 0..k {
                    row[r * k + q] += ug[p][r];
                    row[p * k + r] -= un[r][q];
                }
                rows.push(row);
            }
        }
    }
    let null = cmat::nullspace(&rows, k * k, NULL_TOL);
    if null.len() != 1 {
        return Err(Error::SchurFailure(null.len()));
    }
    Ok((0..k).map(|p| null[0][p * k..(p + 1) * k].to_vec()).collect())
}

fn scalar_part(m: &CMat) -> Result<Complex64> {
    let c = m[0][0];
    if !cmat::approx_eq(m, &cmat::scale(&cmat::identity(m.len()), c), 1e-7 * (1.0 + c.norm())) {
        return Err(Error::SnapFailure("intertwiner product is not a scalar multiple of U".into()));
    }
    Ok(c)
}

fn raw_cocycle(ctx: &CliffordContext, u: &MatrixRep, t: &[CMat]) -> Result<Vec<Vec<Complex64>>> {
    let m = ctx.m();
    let mut c = vec![vec![Complex64::new(0.0, 0.0); m]; m];
    for a in 0..m {
        for b in 0..m {
            let ab = ctx.a.mul(a, b);
            let g = &ctx.g;
            let nu = g.mul(g.mul(ctx.reps[a], ctx.reps[b]), g.inv(ctx.reps[ab]));
            let rhs = cmat::mul(&u.mats[ctx.local(nu).expect("defect lies in N")], &t[ab]);
            let lhs = cmat::mul(&t[a], &t[b]);
            c[a][b] = scalar_part(&cmat::mul(&lhs, &cmat::inverse(&rhs)?))?;
        }
    }
    Ok(c)
}

fn perm_sign(perm: &[usize]) -> f64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1.0;
    for s in 0..perm.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn root_exponent(z: Complex64, m: usize) -> Result<usize> {
    let k = (z.arg().rem_euclid(TAU) * m as f64 / TAU).round() as usize % m;
    if (z - Complex64::from_polar(1.0, TAU * k as f64 / m as f64)).norm() > SNAP_TOL {
        return Err(Error::SnapFailure(format!("cocycle value {z} is not an {m}-th root of unity")));
    }
    Ok(k)
}

/// Solves `A U(n) = U(s n s⁻¹) A` for each coset representative, rescales
/// so that left multiplication on the twisted group algebra `⊕_b ℂ e_b`,
/// `e_a e_b = c(a, b) e_{ab}`, has determinant 1 (least argument among the
/// `m` choices), and extracts the cocycle. Requires `G_U = G`.
pub fn intertwiners(ctx: &CliffordContext, u: &MatrixRep) -> Result<ProjectiveData> {
    if u.mats.len() != ctx.n.order() {
        return Err(Error::ShapeMismatch(format!("{} matrices for N of order {}", u.mats.len(), ctx.n.order())));
    }
    let chi = u.character();
    for &s in &ctx.reps {
        if !conj_char(ctx, &chi, s)?.approx_eq(&chi) {
            return Err(Error::HypothesisFailure(format!("U is not stable under element {s} of {}", ctx.g.name())));
        }
    }
    let m = ctx.m();
    let mut t = vec![cmat::identity(u.dim)];
    for &s in &ctx.reps[1..] {
        t.push(solve_intertwiner(ctx, u, s)?);
    }
    let raw = raw_cocycle(ctx, u, &t)?;
    for a in 1..m {
        let perm: Vec<usize> = (0..m).map(|b| ctx.a.mul(a, b)).collect();
        let det = raw[a].iter().fold(Complex64::new(perm_sign(&perm), 0.0), |acc, &c| acc * c);
        let modulus = det.norm().powf(-1.0 / m as f64);
        let base = -det.arg() / m as f64;
        let theta = (0..m).map(|k| (base + TAU * k as f64 / m as f64).rem_euclid(TAU)).fold(f64::INFINITY, f64::min);
        t[a] = cmat::scale(&t[a], Complex64::from_polar(modulus, theta));
    }
    let cocycle = raw_cocycle(ctx, u, &t)?;
    let exponents = cocycle.iter().map(|row| row.iter().map(|&z| root_exponent(z, m)).collect()).collect::<Result<Vec<Vec<_>>>>()?;
    for a in 0..m {
        for b in 0..m {
            for d in 0..m {
                let (ab, bd) = (ctx.a.mul(a, b), ctx.a.mul(b, d));
                let lhs = (exponents[a][b] + exponents[ab][d]) % m;
                let rhs = (exponents[a][bd] + exponents[b][d]) % m;
                if lhs != rhs {
                    return Err(Error::IdentityFailure {
                        identity: "c(a,b)c(ab,d) = c(a,bd)c(b,d)".into(),
                        lhs: format!("exp(2πi {lhs}/{m}) at ({a}, {b}, {d})"),
                        rhs: format!("exp(2πi {rhs}/{m})"),
                    });
                }
            }
        }
    }
    Ok(ProjectiveData { m, dim: u.dim, intertwiners: t, cocycle, exponents, residual_choices: m })
}

/// Every `c(a, b)^m` snaps to 1.
pub fn cocycle_order_check(data: &ProjectiveData) -> Result<bool> {
    let mut ok = true;
    for &z in data.cocycle.iter().flatten() {
        if (z.norm() - 1.0).abs() > SNAP_TOL {
            return Err(Error::SnapFailure(format!("cocycle value {z} is off the unit circle")));
        }
        ok &= (z.powu(data.m as u32) - 1.0).norm() < SNAP_TOL;
    }
    Ok(ok)
}

/// The central extension `μ_r × A` with product
/// `(z, a)(w, b) = (z w c(a, b), ab)`; element `(ζ_r^k, a)` has index `k·m + a`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub group: FiniteGroup,
    pub r: usize,
    pub m: usize,
    pub table: CharacterTable,
    /// Indices into `table.irreps` on which `ζ_r` acts by `ζ_r⁻¹`.
    pub genuine: Vec<usize>,
}

impl Extension {
    pub fn genuine_chars(&self) -> impl Iterator<Item = &Character> {
        self.genuine.iter().map(|&i| &self.table.irreps[i])
    }

    /// Value of a character at the section element `(1, a)`.
    pub fn at_section(chi: &Character, a: usize) -> Complex64 {
        chi.values[a]
    }

    /// Whether the cocycle class is trivial, i.e. some genuine irreducible is linear.
    pub fn class_is_trivial(&self) -> bool {
        self.genuine_chars().any(|chi| (chi.degree() - 1.0).abs() < SNAP_TOL)
    }
}

pub fn extension(a: &FiniteGroup, data: &ProjectiveData) -> Result<Extension> {
    let (m, r) = (data.m, data.value_order());
    let n = r * m;
    let mut table = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            let (z, p, w, q) = (x / m, x % m, y / m, y % m);
            let c = data.exponents[p][q] * r / m;
            table[x * n + y] = (((z + w + c) % r) * m + a.mul(p, q)) as u16;
        }
    }
    let group = FiniteGroup::from_table(format!("mu{r}.{}", a.name()), n, table)?;
    let ct = character_table(&group)?;
    let zeta_inv = Complex64::from_polar(1.0, -TAU / r as f64);
    let genuine = (0..ct.irreps.len())
        .filter(|&i| {
            let chi = &ct.irreps[i];
            r == 1 || (chi.values[m] - zeta_inv * chi.degree()).norm() < SNAP_TOL
        })
        .collect();
    Ok(Extension { group, r, m, table: ct, genuine })
}

fn require_abelian(a: &FiniteGroup) -> Result<()> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian(a.name().to_string()));
    }
    Ok(())
}

/// `⟨a, b⟩ = [s(a), s(b)] = c(a, b) / c(b, a)`, as an exponent mod `m`.
pub fn abelian_skew(a_group: &FiniteGroup, data: &ProjectiveData, a: usize, b: usize) -> Result<usize> {
    require_abelian(a_group)?;
    Ok((data.exponents[a][b] + data.m - data.exponents[b][a]) % data.m)
}

/// Kernel of the skew form.
pub fn radical(a_group: &FiniteGroup, data: &ProjectiveData) -> Result<Vec<usize>> {
    require_abelian(a_group)?;
    let m = data.m;
    let mut out = Vec::new();
    for a in 0..m {
        if (0..m).try_fold(true, |ok, b| Ok::<_, Error>(ok && abelian_skew(a_group, data, a, b)? == 0))? {
            out.push(a);
        }
    }
    Ok(out)
}

/// Every genuine irreducible has `dim² = |A / radical|`, and
/// `dim² · #genuine = |A|`.
pub fn genuine_dim_check(a_group: &FiniteGroup, data: &ProjectiveData, ext: &Extension) -> Result<bool> {
    let rad = radical(a_group, data)?;
    let quotient = data.m / rad.len();
    let dims: Vec<i64> = ext.genuine_chars().map(Character::degree_int).collect::<Result<_>>()?;
    Ok(!dims.is_empty() && dims.iter().all(|&d| (d * d) as usize == quotient && (d * d) as usize * dims.len() == data.m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, quaternion};

    #[test]
    fn sign_of_permutations() {
        assert_eq!(perm_sign(&[0, 1, 2]), 1.0);
        assert_eq!(perm_sign(&[1, 0, 2]), -1.0);
        assert_eq!(perm_sign(&[1, 2, 0]), 1.0);
        assert_eq!(perm_sign(&[1, 0, 3, 2]), 1.0);
    }

    #[test]
    fn cyclic_four_over_two() {
        let z4 = cyclic(4);
        let ctx = CliffordContext::new(z4.clone(), &z4.closure(&[2])).unwrap();
        let sign = Character { values: vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)] };
        let u = MatrixRep::linear(&ctx.n.group, &sign).unwrap();
        let data = intertwiners(&ctx, &u).unwrap();
        assert!(cocycle_order_check(&data).unwrap());
        assert_eq!(data.exponents[1][1], 1);
        let ext = extension(&ctx.a, &data).unwrap();
        assert_eq!(ext.group.order(), 4);
        assert!(ext.group.is_abelian());
        assert!(ext.class_is_trivial());
        assert_eq!(ext.genuine.len(), 2);
        assert!(genuine_dim_check(&ctx.a, &data, &ext).unwrap());
    }

    #[test]
    fn quaternion_over_center_is_nonsplit() {
        let q8 = quaternion();
        let z = q8.center();
        let ctx = CliffordContext::new(q8, &z).unwrap();
        let sign = Character { values: vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)] };
        let u = MatrixRep::linear(&ctx.n.group, &sign).unwrap();
        let data = intertwiners(&ctx, &u).unwrap();
        assert!(cocycle_order_check(&data).unwrap());
        let ext = extension(&ctx.a, &data).unwrap();
        assert!(!ext.class_is_trivial());
        assert_eq!(radical(&ctx.a, &data).unwrap(), vec![0]);
        assert!(genuine_dim_check(&ctx.a, &data, &ext).unwrap());
        assert_eq!(ext.genuine.len(), 1);
    }

    #[test]
    fn reducible_u_fails_schur() {
        let z4 = cyclic(4);
        let ctx = CliffordContext::new(z4.clone(), &z4.closure(&[2])).unwrap();
        let one = cmat::identity(2);
        let u = MatrixRep { dim: 2, mats: vec![one.clone(), one] };
        assert!(matches!(intertwiners(&ctx, &u), Err(Error::SchurFailure(4))));
    }
}
