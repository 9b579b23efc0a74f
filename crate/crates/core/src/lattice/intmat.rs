//! Small exact integer linear algebra on row vectors.

use num_integer::Integer;

use crate::algebra::{q, Rational};

pub(crate) fn gcd_vec(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides by the gcd of the entries. The zero vector is returned as is.
pub(crate) fn primitive(v: &[i64]) -> Vec<i64> {
    let g = gcd_vec(v);
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Determinant of a square matrix by fraction-free elimination.
pub(crate) fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank over ℚ.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    hnf(rows).len()
}

/// Row-style Hermite normal form: the nonzero rows of an echelon basis of
/// the ℤ-span of `rows`, with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`.
pub(crate) fn hnf(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(n) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut r = 0;
    for c in 0..n {
        // gcd-combine all rows at or below r into row r for column c
        loop {
            let nz: Vec<usize> = (r..a.len()).filter(|&i| a[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).expect("nonempty");
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c] != 0 {
                    let f = a[i][c].div_euclid(a[r][c]);
                    let pivot = a[r].clone();
                    for (x, t) in a[i].iter_mut().zip(&pivot) {
                        *x -= f * t;
                    }
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && a[r][c] != 0 {
            if a[r][c] < 0 {
                for x in a[r].iter_mut() {
                    *x = -*x;
                }
            }
            for i in 0..r {
                let f = a[i][c].div_euclid(a[r][c]);
                if f != 0 {
                    let pivot = a[r].clone();
                    for (x, t) in a[i].iter_mut().zip(&pivot) {
                        *x -= f * t;
                    }
                }
            }
            r += 1;
            if r == a.len() {
                break;
            }
        }
    }
    a.truncate(r);
    a.into_iter()
        .filter(|row| row.iter().any(|&x| x != 0))
        .map(|row| row.into_iter().map(|x| x as i64).collect())
        .collect()
}

/// A ℤ-basis (in Hermite form) of `{x ∈ ℤ^n : A x = 0}`, for `A` given by
/// rows of length `n`.
pub(crate) fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    // column operations on A tracked in a unimodular U, so that A U is in
    // column echelon form; the columns of U past the rank span the kernel
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let col_op = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, f: i128| {
        for row in a.iter_mut() {
            row[dst] -= f * row[src];
        }
        for row in u.iter_mut() {
            row[dst] -= f * row[src];
        }
    };
    let swap = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in u.iter_mut() {
            row.swap(x, y);
        }
    };
    let mut p = 0;
    for i in 0..a.len() {
        if p == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (p..n).filter(|&j| a[i][j] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let m = *nz.iter().min_by_key(|&&j| a[i][j].abs()).expect("nonempty");
            swap(&mut a, &mut u, p, m);
            let mut done = true;
            for j in p + 1..n {
                if a[i][j] != 0 {
                    let f = a[i][j].div_euclid(a[i][p]);
                    col_op(&mut a, &mut u, j, p, f);
                    if a[i][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[i][p] != 0 {
            p += 1;
        }
    }
    let kernel: Vec<Vec<i64>> = (p..n).map(|j| (0..n).map(|i| u[i][j] as i64).collect()).collect();
    hnf(&kernel)
}

/// Solves `Σ x_i rows[i] = v` over ℚ when the rows are independent.
pub(crate) fn solve_combination(rows: &[Vec<i64>], v: &[i64]) -> Option<Vec<Rational>> {
    let k = rows.len();
    let n = v.len();
    // augmented system with unknowns x_i: for every coordinate j,
    // Σ_i rows[i][j] x_i = v[j]
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut r: Vec<Rational> = (0..k).map(|i| q(rows[i][j])).collect();
            r.push(q(v[j]));
            r
        })
        .collect();
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let Some(p) = (row..n).find(|&i| m[i][col] != q(0)) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != row && m[i][col] != q(0) {
                let f = m[i][col].clone();
                let pivot = m[row][..=k].to_vec();
                for (x, t) in m[i].iter_mut().zip(&pivot) {
                    *x -= t * &f;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() < k {
        return None;
    }
    if (row..n).any(|i| m[i][k] != q(0)) {
        return None;
    }
    let mut x = vec![q(0); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][k].clone();
    }
    Some(x)
}

/// Indices of columns that are independent on the row space; projecting
/// onto them is injective on the span of the rows.
pub(crate) fn pivot_columns(rows: &[Vec<i64>]) -> Vec<usize> {
    let h = hnf(rows);
    h.iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
        .collect()
}

/// The `(n-1)` maximal minors of `n-1` vectors in `ℤ^n`, as a normal vector
/// (generalized cross product).
pub(crate) fn normal_of(rows: &[Vec<i64>], n: usize) -> Vec<i64> {
    debug_assert_eq!(rows.len() + 1, n);
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let d = det(&minor);
            let s = if j % 2 == 0 { d } else { -d };
            i64::try_from(s).expect("minor fits in i64")
        })
        .collect()
}
