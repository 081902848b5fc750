//! Dense exact linear algebra over any [`Field`].

use super::Field;

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduced row echelon form and pivot columns.
pub fn row_reduce<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inverse().unwrap();
        for x in a[r].iter_mut() {
            *x = x.times(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let v = a[r][j].times(&f);
                    a[i][j] = a[i][j].minus(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    row_reduce(m).1.len()
}

/// Basis of {v : m·v = 0}; `cols` is needed when m has no rows.
pub fn kernel<F: Field>(m: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    let (a, pivots) = row_reduce(m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = a[i][free].negate();
        }
        out.push(v);
    }
    out
}

/// One solution of m·x = b, if any.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    let aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (a, pivots) = row_reduce(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = a[i][cols].clone();
    }
    Some(x)
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = det.negate();
        }
        det = det.times(&a[c][c]);
        let inv = a[c][c].inverse().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].times(&inv);
            for j in c..n {
                let v = a[c][j].times(&f);
                a[i][j] = a[i][j].minus(&v);
            }
        }
    }
    det
}
