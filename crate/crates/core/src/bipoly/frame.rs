use super::{linear_form_x, linear_form_y, BiPoly};
use crate::error::Error;
use crate::scalars::{common_field, determinant, Field, FieldCtx, Scalar};

/// A pair (g2, g3) of invertible matrices acting by (g·f)(x,y) = f(x·g2, y·g3),
/// with x and y row vectors. Row 0 of g2 and g3 is therefore the point sent
/// to the base point [1,0]×[1,0,0].
#[derive(Clone, Debug, PartialEq)]
pub struct FrameChange {
    pub g2: [[Scalar; 2]; 2],
    pub g3: [[Scalar; 3]; 3],
}

fn to_vecs<const N: usize>(m: &[[Scalar; N]; N]) -> Vec<Vec<Scalar>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn mat_mul<const N: usize>(a: &[[Scalar; N]; N], b: &[[Scalar; N]; N]) -> [[Scalar; N]; N] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..N).fold(Scalar::zero(), |s, k| s.plus(&a[i][k].times(&b[k][j]))))
    })
}

fn mat_inv<const N: usize>(a: &[[Scalar; N]; N]) -> Option<[[Scalar; N]; N]> {
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.to_vec();
            row.extend((0..N).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    for c in 0..N {
        let p = (c..N).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].inverse()?;
        for x in m[c].iter_mut() {
            *x = x.times(&inv);
        }
        for i in 0..N {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..2 * N {
                    let v = m[c][j].times(&f);
                    m[i][j] = m[i][j].minus(&v);
                }
            }
        }
    }
    Some(std::array::from_fn(|i| std::array::from_fn(|j| m[i][N + j].clone())))
}

fn int_matrix<const N: usize>(rows: [[i64; N]; N]) -> [[Scalar; N]; N] {
    rows.map(|r| r.map(Scalar::int))
}

impl FrameChange {
    pub fn new(g2: [[Scalar; 2]; 2], g3: [[Scalar; 3]; 3]) -> Result<Self, Error> {
        let f = FrameChange { g2, g3 };
        if f.det2().is_zero() || f.det3().is_zero() {
            return Err(Error::Precondition("singular frame matrix".into()));
        }
        Ok(f)
    }

    pub fn identity() -> Self {
        FrameChange {
            g2: int_matrix([[1, 0], [0, 1]]),
            g3: int_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        }
    }

    pub fn from_ints(g2: [[i64; 2]; 2], g3: [[i64; 3]; 3]) -> Result<Self, Error> {
        FrameChange::new(int_matrix(g2), int_matrix(g3))
    }

    /// Permutation frame: x_i ↦ x_{px[i]}, y_j ↦ y_{py[j]}.
    pub fn permutation(px: [usize; 2], py: [usize; 3]) -> Self {
        let g2 = std::array::from_fn(|i| std::array::from_fn(|j| Scalar::int((px[j] == i) as i64)));
        let g3 = std::array::from_fn(|i| std::array::from_fn(|j| Scalar::int((py[j] == i) as i64)));
        FrameChange { g2, g3 }
    }

    pub fn diagonal(t: [Scalar; 2], s: [Scalar; 3]) -> Result<Self, Error> {
        let g2 = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { t[i].clone() } else { Scalar::zero() }));
        let g3 = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { s[i].clone() } else { Scalar::zero() }));
        FrameChange::new(g2, g3)
    }

    pub fn det2(&self) -> Scalar {
        determinant(&to_vecs(&self.g2))
    }

    pub fn det3(&self) -> Scalar {
        determinant(&to_vecs(&self.g3))
    }

    pub fn field(&self) -> Result<FieldCtx, Error> {
        common_field(self.g2.iter().flatten().chain(self.g3.iter().flatten()))
    }

    pub fn is_rational(&self) -> bool {
        self.g2.iter().flatten().chain(self.g3.iter().flatten()).all(|c| c.as_rational().is_some())
    }

    /// self·o, so that act(self, act(o, f)) = act(self·o, f).
    pub fn compose(&self, o: &Self) -> Self {
        FrameChange { g2: mat_mul(&self.g2, &o.g2), g3: mat_mul(&self.g3, &o.g3) }
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        let g2 = mat_inv(&self.g2).ok_or_else(|| Error::Precondition("singular frame matrix".into()))?;
        let g3 = mat_inv(&self.g3).ok_or_else(|| Error::Precondition("singular frame matrix".into()))?;
        Ok(FrameChange { g2, g3 })
    }

    /// Image under x ↦ x·g2 of a point (row vector).
    pub fn map_x(&self, p: &[Scalar; 2]) -> [Scalar; 2] {
        std::array::from_fn(|j| (0..2).fold(Scalar::zero(), |s, i| s.plus(&p[i].times(&self.g2[i][j]))))
    }

    pub fn map_y(&self, q: &[Scalar; 3]) -> [Scalar; 3] {
        std::array::from_fn(|j| (0..3).fold(Scalar::zero(), |s, i| s.plus(&q[i].times(&self.g3[i][j]))))
    }

    /// (g·f)(x, y) = f(x·g2, y·g3).
    pub fn act(&self, f: &BiPoly) -> BiPoly {
        let xs: Vec<BiPoly> = (0..2).map(|j| linear_form_x(&[self.g2[0][j].clone(), self.g2[1][j].clone()])).collect();
        let ys: Vec<BiPoly> = (0..3)
            .map(|j| linear_form_y(&[self.g3[0][j].clone(), self.g3[1][j].clone(), self.g3[2][j].clone()]))
            .collect();
        let (d1, d2) = f.bidegree();
        let xp: Vec<Vec<BiPoly>> = xs.iter().map(|l| (0..=d1).map(|e| l.pow(e)).collect()).collect();
        let yp: Vec<Vec<BiPoly>> = ys.iter().map(|l| (0..=d2).map(|e| l.pow(e)).collect()).collect();
        let mut out = BiPoly::zero(f.bidegree());
        for (m, c) in f.terms() {
            let t = xp[0][m.alpha[0] as usize]
                .mul(&xp[1][m.alpha[1] as usize])
                .mul(&yp[0][m.beta[0] as usize])
                .mul(&yp[1][m.beta[1] as usize])
                .mul(&yp[2][m.beta[2] as usize]);
            out = out.add(&t.scale(c));
        }
        out
    }

    pub fn to_rows(&self) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        (to_vecs(&self.g2), to_vecs(&self.g3))
    }

    pub fn from_rows(g2: &[Vec<Scalar>], g3: &[Vec<Scalar>]) -> Result<Self, Error> {
        let bad = || Error::Parse("frame matrices must be 2x2 and 3x3".into());
        if g2.len() != 2 || g3.len() != 3 || g2.iter().any(|r| r.len() != 2) || g3.iter().any(|r| r.len() != 3) {
            return Err(bad());
        }
        FrameChange::new(
            std::array::from_fn(|i| std::array::from_fn(|j| g2[i][j].clone())),
            std::array::from_fn(|i| std::array::from_fn(|j| g3[i][j].clone())),
        )
    }
}

pub fn act(g: &FrameChange, f: &BiPoly) -> BiPoly {
    g.act(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse;

    #[test]
    fn swap_and_inverse() {
        let f = parse("x0^2*y0^2").unwrap();
        let g = FrameChange::permutation([1, 0], [0, 1, 2]);
        assert_eq!(g.act(&f), parse("x1^2*y0^2").unwrap());
        let h = FrameChange::from_ints([[1, 2], [0, 1]], [[1, 0, 3], [0, 1, 0], [1, 0, 2]]).unwrap();
        let f = parse("x0*x1*y0*y2 + x1^2*y1^2 - 3*x0^2*y0*y1").unwrap();
        let back = h.inverse().unwrap().act(&h.act(&f));
        assert_eq!(back, f);
        assert_eq!(h.act(&g.act(&f)), h.compose(&g).act(&f));
    }

    #[test]
    fn base_point_is_row_zero() {
        let g = FrameChange::from_ints([[2, 1], [1, 1]], [[1, 2, 3], [0, 1, 0], [0, 0, 1]]).unwrap();
        let f = parse("x0*x1*y0*y2 + x1^2*y1^2 - 3*x0^2*y0*y1").unwrap();
        let one = Scalar::int(1);
        let z = Scalar::int(0);
        let lhs = g.act(&f).eval(&[one.clone(), z.clone()], &[one.clone(), z.clone(), z.clone()]);
        let rhs = f.eval(&[Scalar::int(2), Scalar::int(1)], &[Scalar::int(1), Scalar::int(2), Scalar::int(3)]);
        assert_eq!(lhs, rhs);
    }
}
