//! Smith normal form of small integer matrices.

use alloc::vec;
use alloc::vec::Vec;

/// `D = U·A·V` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors, positive and in divisibility order.
    pub invariants: Vec<i64>,
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

fn swap_rows(m: &mut [Vec<i128>], i: usize, j: usize) {
    m.swap(i, j);
}

fn swap_cols(m: &mut [Vec<i128>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i -= q·row_j
fn row_op(m: &mut [Vec<i128>], i: usize, j: usize, q: i128) {
    let rj = m[j].clone();
    for (x, y) in m[i].iter_mut().zip(rj) {
        *x -= q * y;
    }
}

/// col_i -= q·col_j
fn col_op(m: &mut [Vec<i128>], i: usize, j: usize, q: i128) {
    for row in m.iter_mut() {
        let y = row[j];
        row[i] -= q * y;
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

pub fn smith_normal_form(a: &[Vec<i64>], cols: usize) -> SmithForm {
    let rows = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut m, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut m, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t].div_euclid(p);
                if q != 0 {
                    row_op(&mut m, i, t, q);
                    row_op(&mut u, i, t, q);
                }
                if m[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(p);
                if q != 0 {
                    col_op(&mut m, j, t, q);
                    col_op(&mut v, j, t, q);
                }
                if m[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // Pivot must divide the rest of the submatrix.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        row_op(&mut m, t, i, -1);
                        row_op(&mut u, t, i, -1);
                        continue;
                    }
                }
            }
            // Move the smallest nonzero entry of row/column t to the pivot.
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                swap_rows(&mut m, t, best.0);
                swap_rows(&mut u, t, best.0);
            }
            if best.1 != t {
                swap_cols(&mut m, t, best.1);
                swap_cols(&mut v, t, best.1);
            }
        }
        if m[t][t] < 0 {
            for x in m[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }
    let invariants = (0..rows.min(cols)).map(|i| m[i][i] as i64).filter(|&x| x != 0).collect();
    let cast = |x: Vec<Vec<i128>>| -> Vec<Vec<i64>> { x.into_iter().map(|r| r.into_iter().map(|y| y as i64).collect()).collect() };
    SmithForm { invariants, u: cast(u), v: cast(v) }
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![0i64; n];
            for (k, x) in row.iter().enumerate() {
                for (j, o) in out.iter_mut().enumerate() {
                    *o += x * b[k][j];
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: Vec<Vec<i64>>, cols: usize, expected: &[i64]) {
        let s = smith_normal_form(&a, cols);
        assert_eq!(s.invariants, expected);
        let d = mat_mul(&mat_mul(&s.u, &a), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j && i < s.invariants.len() { s.invariants[i] } else { 0 };
                assert_eq!(x, want, "D = UAV at ({}, {})", i, j);
            }
        }
    }

    #[test]
    fn small_cases() {
        check(vec![vec![3, -1], vec![-1, -2]], 2, &[1, 7]);
        check(vec![vec![2, 0], vec![0, 3]], 2, &[1, 6]);
        check(vec![vec![1, -1]], 2, &[1]);
        check(vec![vec![4, 6], vec![6, 9], vec![2, 3]], 2, &[1]);
        check(vec![vec![3, 0], vec![0, 3], vec![3, -3]], 2, &[3, 3]);
        check(vec![vec![0, 0]], 2, &[]);
    }
}
