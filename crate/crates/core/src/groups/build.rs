use super::group::{parse_cycles, FiniteGroup};
use crate::error::Result;

pub fn cyclic(n: usize) -> FiniteGroup {
    let (g, _) = FiniteGroup::from_generators(format!("Z{n}"), 0usize, &[1 % n.max(1)], |a, b| (a + b) % n.max(1)).expect("small cyclic group");
    g
}

/// `ℤ/n₁ × … × ℤ/n_k` with `(a₁, …, a_k)` at mixed-radix index, first coordinate most significant.
pub fn abelian(orders: &[usize]) -> Result<FiniteGroup> {
    let mut g = cyclic(1);
    for (i, &n) in orders.iter().enumerate() {
        g = if i == 0 { cyclic(n) } else { g.direct_product(&cyclic(n))? };
    }
    let name = orders.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x");
    Ok(g.with_name(if name.is_empty() { "1".into() } else { name }))
}

/// Dihedral group of order `2n`: `(i, s)` stands for `r^i s^s`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let mul = |a: &(usize, bool), b: &(usize, bool)| {
        let i = if a.1 { (a.0 + n - b.0) % n } else { (a.0 + b.0) % n };
        (i, a.1 ^ b.1)
    };
    let (g, _) = FiniteGroup::from_generators(format!("D{}", 2 * n), (0, false), &[(1 % n, false), (0, true)], mul).expect("small dihedral group");
    g
}

/// `{±1, ±i, ±j, ±k}`; an element is `(negative, unit)` with unit `0..4` for `1, i, j, k`.
pub fn quaternion() -> FiniteGroup {
    const TABLE: [[(bool, u8); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mul = |a: &(bool, u8), b: &(bool, u8)| {
        let (neg, u) = TABLE[a.1 as usize][b.1 as usize];
        (neg ^ a.0 ^ b.0, u)
    };
    let (g, _) = FiniteGroup::from_generators("Q8", (false, 0u8), &[(false, 1), (false, 2)], mul).expect("Q8");
    g
}

pub fn klein() -> FiniteGroup {
    let (g, _) = FiniteGroup::from_generators("V4", (0u8, 0u8), &[(1, 0), (0, 1)], |a, b| (a.0 ^ b.0, a.1 ^ b.1)).expect("V4");
    g
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n <= 1 {
        return Ok(cyclic(1).with_name(format!("S{n}")));
    }
    let cycle = format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
    let gens = vec![parse_cycles("(1 2)", n)?, parse_cycles(&cycle, n)?];
    FiniteGroup::from_permutations(format!("S{n}"), &gens, 1 << 20)
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if n <= 2 {
        return Ok(cyclic(1).with_name(format!("A{n}")));
    }
    let gens = (3..=n).map(|k| parse_cycles(&format!("(1 2 {k})"), n)).collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(format!("A{n}"), &gens, 1 << 20)
}

/// `SL₂(𝔽_p)` on matrices `[a, b, c, d]`.
pub fn sl2(p: u64) -> Result<FiniteGroup> {
    let mul = move |x: &[u64; 4], y: &[u64; 4]| {
        [(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p]
    };
    let (g, _) = FiniteGroup::from_generators(format!("SL2(F{p})"), [1, 0, 0, 1], &[[1, 1, 0, 1], [0, p - 1, 1, 0]], mul)?;
    Ok(g)
}

/// Permutation group from generators in cycle notation on points `1..=degree`.
pub fn from_cycles(name: &str, gens: &[&str], degree: usize) -> Result<FiniteGroup> {
    let perms = gens.iter().map(|g| parse_cycles(g, degree)).collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(name, &perms, 1 << 20)
}
