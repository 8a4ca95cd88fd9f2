use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Groups up to this order store a Cayley table.
pub const TABLE_BOUND: usize = 4096;

#[derive(Clone)]
enum Repr {
    Table { mul: Arc<Vec<u16>> },
    Perm { perms: Arc<Vec<Vec<u16>>>, index: Arc<HashMap<Vec<u16>, u32>> },
}

/// Finite group on element indices `0..order`, with `0` the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    repr: Repr,
    inv: Arc<Vec<u32>>,
    gens: Vec<usize>,
    name: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == other.mul(a, b)))
    }
}

impl FiniteGroup {
    /// Closes `gens` under `mul` by breadth-first search. The identity gets
    /// index 0 and generators keep their discovery order.
    pub fn from_generators<E, F>(name: impl Into<String>, identity: E, gens: &[E], mul: F) -> Result<(Self, Vec<E>)>
    where
        E: Clone + Eq + Hash,
        F: Fn(&E, &E) -> E,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<E, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = mul(&elems[i], g);
                if !index.contains_key(&p) {
                    if elems.len() >= TABLE_BOUND {
                        return Err(Error::SizeBound(format!("closure exceeds {TABLE_BOUND} elements")));
                    }
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&mul(&elems[a], &elems[b])] as u16;
            }
        }
        let gen_idx = gens.iter().map(|g| index[g]).collect();
        Ok((Self::from_table_unchecked(name.into(), n, table, gen_idx), elems))
    }

    /// Builds from a Cayley table, validating closure, identity at 0 and inverses.
    pub fn from_table(name: impl Into<String>, n: usize, table: Vec<u16>) -> Result<Self> {
        if table.len() != n * n || table.iter().any(|&x| x as usize >= n) {
            return Err(Error::NotSubgroup("Cayley table has the wrong shape".into()));
        }
        if (0..n).any(|a| table[a] as usize != a || table[a * n] as usize != a) {
            return Err(Error::NotSubgroup("index 0 is not the identity".into()));
        }
        if (0..n).any(|a| !(0..n).any(|b| table[a * n + b] == 0)) {
            return Err(Error::NotSubgroup("some element has no inverse".into()));
        }
        let g = Self::from_table_unchecked(name.into(), n, table, Vec::new());
        Ok(g)
    }

    fn from_table_unchecked(name: String, n: usize, table: Vec<u16>, gens: Vec<usize>) -> Self {
        let inv = (0..n).map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("inverse exists") as u32).collect();
        FiniteGroup { order: n, repr: Repr::Table { mul: Arc::new(table) }, inv: Arc::new(inv), gens, name }
    }

    /// Permutation group on `0..degree` generated by `gens`; stores a Cayley
    /// table when the order is at most `TABLE_BOUND`.
    pub fn from_permutations(name: impl Into<String>, gens: &[Vec<u16>], max_order: usize) -> Result<Self> {
        let degree = gens.first().map_or(0, Vec::len);
        if gens.iter().any(|g| g.len() != degree || !is_permutation(g)) {
            return Err(Error::Parse("generators must be permutations of one degree".into()));
        }
        let name = name.into();
        let compose = |a: &Vec<u16>, b: &Vec<u16>| -> Vec<u16> { (0..degree).map(|i| b[a[i] as usize]).collect() };
        let id: Vec<u16> = (0..degree as u16).collect();
        match Self::from_generators(name.clone(), id.clone(), gens, compose) {
            Ok((g, _)) => Ok(g),
            Err(Error::SizeBound(_)) => {
                let mut perms = vec![id.clone()];
                let mut index: HashMap<Vec<u16>, u32> = HashMap::from([(id, 0)]);
                let mut queue = VecDeque::from([0usize]);
                while let Some(i) = queue.pop_front() {
                    for g in gens {
                        let p = compose(&perms[i], g);
                        if !index.contains_key(&p) {
                            if perms.len() >= max_order {
                                return Err(Error::SizeBound(format!("permutation group exceeds {max_order} elements")));
                            }
                            index.insert(p.clone(), perms.len() as u32);
                            queue.push_back(perms.len());
                            perms.push(p);
                        }
                    }
                }
                let inv = perms
                    .iter()
                    .map(|p| {
                        let mut q = vec![0u16; degree];
                        for (i, &x) in p.iter().enumerate() {
                            q[x as usize] = i as u16;
                        }
                        index[&q]
                    })
                    .collect();
                let gen_idx = gens.iter().map(|g| index[g] as usize).collect();
                Ok(FiniteGroup {
                    order: perms.len(),
                    repr: Repr::Perm { perms: Arc::new(perms), index: Arc::new(index) },
                    inv: Arc::new(inv),
                    gens: gen_idx,
                    name,
                })
            }
            Err(e) => Err(e),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn has_table(&self) -> bool {
        matches!(self.repr, Repr::Table { .. })
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Table { mul } => mul[a * self.order + b] as usize,
            Repr::Perm { perms, index } => {
                let (pa, pb) = (&perms[a], &perms[b]);
                let p: Vec<u16> = pa.iter().map(|&i| pb[i as usize]).collect();
                index[&p] as usize
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let (mut base, mut acc) = (a, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates a word such as `"r^2 s"` or `"a*b^-1"`, where `names[i]`
    /// names generator `i`; `"1"` is the identity.
    pub fn eval_word(&self, names: &[&str], word: &str) -> Result<usize> {
        let bad = |m: &str| Error::Parse(format!("word '{word}': {m}"));
        if names.len() != self.gens.len() {
            return Err(bad("generator names do not match the generators"));
        }
        let mut acc = 0;
        for tok in word.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            if tok == "1" {
                continue;
            }
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                None => (tok, 1),
            };
            let i = names.iter().position(|&n| n == name).ok_or_else(|| bad("unknown generator"))?;
            let base = if e < 0 { self.inv(self.gens[i]) } else { self.gens[i] };
            acc = self.mul(acc, self.pow(base, e.unsigned_abs()));
        }
        Ok(acc)
    }

    /// Extends generator images to a homomorphism into `target`, checking
    /// `φ(x g) = φ(x) φ(g)` along the Cayley graph.
    pub fn hom_from_generators(&self, images: &[usize], target: &FiniteGroup) -> Result<Vec<usize>> {
        if images.len() != self.gens.len() {
            return Err(Error::ShapeMismatch(format!("{} images for {} generators", images.len(), self.gens.len())));
        }
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in self.gens.iter().zip(images) {
                let (y, fy) = (self.mul(x, g), target.mul(map[x], img));
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return Err(Error::NotHomomorphism(format!("relation fails at element {y} of {}", self.name)));
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::NotHomomorphism(format!("generators do not generate {}", self.name)));
        }
        Ok(map)
    }

    /// `g a g⁻¹`.
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<usize> = if self.gens.is_empty() { (0..self.order).collect() } else { self.gens.clone() };
        gens.iter().all(|&a| gens.iter().all(|&b| self.commutes(a, b)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.commutes(a, b))).collect()
    }

    /// Identity and inverse laws exhaustively, associativity on `samples` triples.
    pub fn validate(&self, samples: usize) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a || self.mul(a, self.inv(a)) != 0 {
                return Err(Error::NotSubgroup(format!("identity or inverse law fails at {a}")));
            }
        }
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for _ in 0..samples {
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            let (a, b, c) = (next(), next(), next());
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::NotSubgroup(format!("associativity fails at ({a}, {b}, {c})")));
            }
        }
        Ok(())
    }

    /// Closure of `gens` inside this group, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &e in elems {
            member[e] = true;
        }
        member[0] && elems.iter().all(|&a| member[self.inv(a)] && elems.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &e in elems {
            member[e] = true;
        }
        let conjugators: Vec<usize> = if self.gens.is_empty() { (0..self.order).collect() } else { self.gens.clone() };
        elems.iter().all(|&a| conjugators.iter().all(|&g| member[self.conj(g, a)]))
    }

    /// Direct product with elements indexed `a·|H| + b`.
    pub fn direct_product(&self, h: &FiniteGroup) -> Result<FiniteGroup> {
        let (m, k) = (self.order, h.order);
        let n = m * k;
        if n > TABLE_BOUND {
            return Err(Error::SizeBound(format!("direct product of order {n}")));
        }
        let mut table = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a1, b1, a2, b2) = (x / k, x % k, y / k, y % k);
                table[x * n + y] = (self.mul(a1, a2) * k + h.mul(b1, b2)) as u16;
            }
        }
        let mut gens: Vec<usize> = self.gens.iter().map(|&a| a * k).collect();
        gens.extend(h.gens.iter().copied());
        let mut g = Self::from_table_unchecked(format!("{}x{}", self.name, h.name), n, table, gens);
        if self.gens.is_empty() || h.gens.is_empty() {
            g.gens.clear();
        }
        Ok(g)
    }

    /// Quotient by a normal subgroup; returns the quotient and the projection.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotSubgroup("quotient by a non-subgroup".into()));
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal("quotient by a non-normal subgroup".into()));
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if coset[a] == usize::MAX {
                let id = reps.len();
                reps.push(a);
                for &z in normal {
                    coset[self.mul(a, z)] = id;
                }
            }
        }
        let q = reps.len();
        let mut table = vec![0u16; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q + j] = coset[self.mul(a, b)] as u16;
            }
        }
        let gens: Vec<usize> = self.gens.iter().map(|&g| coset[g]).collect();
        Ok((Self::from_table_unchecked(format!("{}/N", self.name), q, table, gens), coset))
    }

    /// Quotient by a central subgroup.
    pub fn central_quotient(&self, z: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(z) {
            return Err(Error::NotSubgroup("central quotient by a non-subgroup".into()));
        }
        if let Some(&a) = z.iter().find(|&&a| (0..self.order).any(|b| !self.commutes(a, b))) {
            return Err(Error::NotCentral(format!("element {a} is not central")));
        }
        self.quotient(z)
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..self.order).map(|g| self.conj(g, a)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls);
        }
        classes
    }
}

fn is_permutation(p: &[u16]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| (x as usize) < p.len() && !std::mem::replace(&mut seen[x as usize], true))
}

/// Parses `"(1 2 3)(4 5)"` into a permutation of `0..degree` (points are 1-based).
pub fn parse_cycles(s: &str, degree: usize) -> Result<Vec<u16>> {
    let bad = |m: &str| Error::Parse(format!("cycle notation '{s}': {m}"));
    let mut perm: Vec<u16> = (0..degree as u16).collect();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let pts = open[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
            .collect::<Result<Vec<_>>>()?;
        if pts.iter().any(|&p| p == 0 || p > degree) {
            return Err(bad("point out of range"));
        }
        for (i, &p) in pts.iter().enumerate() {
            let next = pts[(i + 1) % pts.len()];
            perm[p - 1] = (next - 1) as u16;
        }
        rest = open[close + 1..].trim_start();
    }
    if !is_permutation(&perm) {
        return Err(bad("cycles overlap"));
    }
    Ok(perm)
}
