//! Smith normal form over the integers.

pub type IMatrix = Vec<Vec<i128>>;

/// Result of `smith_normal_form`: `u * m * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IMatrix,
    pub d: IMatrix,
    pub v: IMatrix,
}

impl Smith {
    /// Diagonal entries of `d`.
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.d.len().min(self.v.len())).map(|i| self.d[i][i]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn identity(n: usize) -> IMatrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

pub fn imat_mul(a: &IMatrix, b: &IMatrix) -> IMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

pub fn imat_vec(a: &IMatrix, v: &[i128]) -> Vec<i128> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn transpose(a: &IMatrix, rows: usize, cols: usize) -> IMatrix {
    (0..cols).map(|j| (0..rows).map(|i| a[i][j]).collect()).collect()
}

/// Fraction-free Bareiss determinant.
pub fn idet(a: &IMatrix) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m = a.clone();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn swap_cols(m: &mut IMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn add_row(m: &mut IMatrix, target: usize, src: usize, q: i128) {
    if q == 0 {
        return;
    }
    let src_row = m[src].clone();
    for (t, s) in m[target].iter_mut().zip(src_row) {
        *t += q * s;
    }
}

fn add_col(m: &mut IMatrix, target: usize, src: usize, q: i128) {
    if q == 0 {
        return;
    }
    for row in m.iter_mut() {
        row[target] += q * row[src];
    }
}

/// `(U, D, V)` with `U`, `V` unimodular, `UMV = D` diagonal and `dᵢ | dᵢ₊₁`.
/// `m` has `rows` rows and `cols` columns; empty dimensions are allowed.
pub fn smith_normal_form(m: &IMatrix, rows: usize, cols: usize) -> Smith {
    let mut d = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    for t in 0..rows.min(cols) {
        let pivot = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))).filter(|&(i, j)| d[i][j] != 0).min_by_key(|&(i, j)| d[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            for i in t + 1..rows {
                let q = d[i][t] / d[t][t];
                add_row(&mut d, i, t, -q);
                add_row(&mut u, i, t, -q);
            }
            for j in t + 1..cols {
                let q = d[t][j] / d[t][t];
                add_col(&mut d, j, t, -q);
                add_col(&mut v, j, t, -q);
            }
            let smaller_row = (t + 1..rows).filter(|&i| d[i][t] != 0).min_by_key(|&i| d[i][t].abs());
            if let Some(i) = smaller_row {
                d.swap(t, i);
                u.swap(t, i);
                continue;
            }
            let smaller_col = (t + 1..cols).filter(|&j| d[t][j] != 0).min_by_key(|&j| d[t][j].abs());
            if let Some(j) = smaller_col {
                swap_cols(&mut d, t, j);
                swap_cols(&mut v, t, j);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % d[t][t] != 0));
            match bad {
                Some(i) => {
                    add_row(&mut d, t, i, 1);
                    add_row(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    let s = Smith { u, d, v };
    assert_postconditions(m, rows, cols, &s);
    s
}

fn assert_postconditions(m: &IMatrix, rows: usize, cols: usize, s: &Smith) {
    assert_eq!(idet(&s.u).abs(), 1, "U is unimodular");
    assert_eq!(idet(&s.v).abs(), 1, "V is unimodular");
    if rows > 0 && cols > 0 {
        assert_eq!(&imat_mul(&imat_mul(&s.u, m), &s.v), &s.d, "UMV = D");
    }
    for i in 0..rows {
        for j in 0..cols {
            assert!(i == j || s.d[i][j] == 0, "D is diagonal");
        }
    }
    let diag = s.diagonal();
    for w in diag.windows(2) {
        assert!(w[0] >= 0 && (w[0] == 0 && w[1] == 0 || w[0] != 0 && w[1] % w[0] == 0), "divisibility chain");
    }
}

/// Basis of `{x ∈ ℤ^cols : m x = 0}`.
pub fn integer_kernel(m: &IMatrix, rows: usize, cols: usize) -> Vec<Vec<i128>> {
    let s = smith_normal_form(m, rows, cols);
    let r = s.rank();
    (r..cols).map(|j| (0..cols).map(|i| s.v[i][j]).collect()).collect()
}

/// Whether `target` lies in the column lattice of `m`.
pub fn in_column_lattice(m: &IMatrix, rows: usize, cols: usize, target: &[i128]) -> bool {
    let s = smith_normal_form(m, rows, cols);
    let w = imat_vec(&s.u, target);
    let diag = s.diagonal();
    w.iter().enumerate().all(|(i, &x)| match diag.get(i) {
        Some(&di) if di != 0 => x % di == 0,
        _ => x == 0,
    })
}
