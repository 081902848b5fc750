//! The conic bundle p1: S → P¹ and the contracted sections of p2.

use crate::bipoly::{BiMonomial, BiPoly, FrameChange, Var};
use crate::error::Error;
use crate::forms::{
    binary_roots, complete_basis, eval_y, is_zero_vec, lift_poly, matrix_rank3, restrict_to_line, points_on_line,
    ternary_gcd_all,
};
use crate::scalars::{Field, Poly, Scalar};

/// M(x) with yᵀ M(x) y = 2 f: diagonal entries 2·coef(y_j²), off-diagonal
/// entries coef(y_j y_k). Entries are binary quadratic forms.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicPencil {
    pub m: [[BiPoly; 3]; 3],
}

impl ConicPencil {
    pub fn at(&self, p: &[Scalar; 2]) -> [[Scalar; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| crate::forms::eval_x(&self.m[i][j], p)))
    }

    /// yᵀ M y / 2.
    pub fn to_poly(&self) -> BiPoly {
        let ys = [Var::Y0, Var::Y1, Var::Y2].map(BiPoly::var);
        let mut out = BiPoly::zero((2, 2));
        for i in 0..3 {
            for j in 0..3 {
                out = out.add(&self.m[i][j].mul(&ys[i]).mul(&ys[j]));
            }
        }
        out.scale(&Scalar::Rat(crate::scalars::rat_frac(1, 2)))
    }
}

pub fn fibre_matrix(f: &BiPoly) -> ConicPencil {
    let mut m: [[BiPoly; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| BiPoly::zero((2, 0))));
    for (yb, form) in f.y_coefficients() {
        let idx: Vec<usize> = (0..3).flat_map(|j| std::iter::repeat(j).take(yb[j] as usize)).collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            m[i][i] = form.scale(&Scalar::int(2));
        } else {
            m[i][j] = form.clone();
            m[j][i] = form;
        }
    }
    ConicPencil { m }
}

/// det M(x), a binary form of degree 6 (possibly zero).
pub fn discriminant(pencil: &ConicPencil) -> BiPoly {
    let m = &pencil.m;
    let t = |a: usize, b: usize, c: usize| m[0][a].mul(&m[1][b]).mul(&m[2][c]);
    let d = t(0, 1, 2).add(&t(1, 2, 0)).add(&t(2, 0, 1)).sub(&t(2, 1, 0)).sub(&t(0, 2, 1)).sub(&t(1, 0, 2));
    if d.is_zero() {
        BiPoly::zero((6, 0))
    } else {
        d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FibreLabel {
    Smooth,
    TwoDistinctLines,
    DoubleLine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FibreClass {
    pub rank: usize,
    pub label: FibreLabel,
}

/// The fibre conic over p1 by the rank of M(p1). A whole-plane fibre
/// (rank 0) is reported as an error since it is not a conic.
pub fn classify_fibre(f: &BiPoly, p1: &[Scalar; 2]) -> Result<FibreClass, Error> {
    if is_zero_vec(p1) {
        return Err(Error::Precondition("invalid point of P1".into()));
    }
    let rank = matrix_rank3(&fibre_matrix(f).at(p1));
    let label = match rank {
        3 => FibreLabel::Smooth,
        2 => FibreLabel::TwoDistinctLines,
        1 => FibreLabel::DoubleLine,
        _ => return Err(Error::Precondition("the fibre is the whole plane".into())),
    };
    Ok(FibreClass { rank, label })
}

#[derive(Clone, Debug, PartialEq)]
pub enum ContractedSections {
    /// One representative point per Galois orbit.
    Finite(Vec<[Scalar; 3]>),
    /// A common component of A, B, C.
    CurveOfSections(BiPoly),
}

/// Points P2 with f(·, P2) ≡ 0, i.e. common zeros of the coefficient conics.
pub fn contracted_sections(f: &BiPoly) -> Result<ContractedSections, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let conics: Vec<BiPoly> = f.x_coefficients().into_iter().filter(|q| !q.is_zero()).collect();
    common_zeros(&conics)
}

/// Common zeros in P² of nonzero ternary quadrics.
pub fn common_zeros(forms: &[BiPoly]) -> Result<ContractedSections, Error> {
    let g = ternary_gcd_all(forms);
    if g.bidegree().1 >= 1 {
        return Ok(ContractedSections::CurveOfSections(g));
    }
    if forms.iter().any(|q| q.bidegree().1 != 2) {
        // a nonzero constant gcd with a form of degree 0 means no zeros
        return Ok(ContractedSections::Finite(vec![]));
    }
    let n = forms.len();
    let combos: Vec<Vec<i64>> = (1..3i64.pow(n as u32))
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = k % 3;
                    k /= 3;
                    d
                })
                .collect()
        })
        .collect();
    let shears: [(i64, i64); 12] =
        [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (2, 3), (3, 2), (5, 2), (2, 5)];
    let e0 = [1, 0, 0].map(Scalar::int);
    'shear: for (k1, k2) in shears {
        let frame = FrameChange::from_ints([[1, 0], [0, 1]], [[1, k1, k2], [0, 1, 0], [0, 0, 1]]).unwrap();
        let qs: Vec<BiPoly> = forms.iter().map(|q| frame.act(q)).collect();
        let combine = |w: &[i64]| {
            qs.iter().zip(w).fold(BiPoly::zero((0, 2)), |s, (q, &c)| s.add(&q.scale(&Scalar::int(c))))
        };
        let usable: Vec<BiPoly> =
            combos.iter().map(|w| combine(w)).filter(|q| !q.is_zero() && !eval_y(q, &e0).is_zero()).collect();
        for i in 0..usable.len() {
            for j in i + 1..usable.len() {
                let res = resultant_y0(&usable[i], &usable[j]);
                if res.is_zero() {
                    continue;
                }
                let mut pts = Vec::new();
                for root in binary_roots(&res)? {
                    let beta = root.point.clone();
                    let g = qs
                        .iter()
                        .map(|q| y0_poly(&lift_poly(q, &root.extension), &beta))
                        .fold(Poly::zero(), |acc: Poly<Scalar>, p| acc.gcd(&p));
                    let y0 = match g.degree() {
                        Some(0) | None => continue,
                        Some(1) => g.coeff(0).negate().divide(&g.coeff(1)),
                        Some(2) => {
                            // a double root: the conics are both singular there
                            let (a, b, c) = (g.coeff(2), g.coeff(1), g.coeff(0));
                            if !b.times(&b).minus(&Scalar::int(4).times(&a).times(&c)).is_zero() {
                                continue 'shear;
                            }
                            b.negate().divide(&Scalar::int(2).times(&a))
                        }
                        Some(_) => continue 'shear,
                    };
                    let y = frame.map_y(&[y0, beta[0].clone(), beta[1].clone()]);
                    pts.push(crate::points::normalize_projective(y).unwrap());
                }
                return Ok(ContractedSections::Finite(pts));
            }
        }
    }
    Err(Error::Precondition("failed to separate common zeros of the coefficient conics".into()))
}

/// a y0² + b y0 + c with b, c evaluated at (y1, y2) = beta.
fn y0_poly(q: &BiPoly, beta: &[Scalar; 2]) -> Poly<Scalar> {
    let d = q.bidegree().1;
    let mut coeffs = vec![Scalar::zero(); d as usize + 1];
    for (m, c) in q.terms() {
        let v = c
            .times(&crate::bipoly::pow_scalar(&beta[0], m.beta[1]))
            .times(&crate::bipoly::pow_scalar(&beta[1], m.beta[2]));
        coeffs[m.beta[0] as usize] = coeffs[m.beta[0] as usize].plus(&v);
    }
    Poly::new(coeffs)
}

/// y0-coefficients of a ternary quadric as binary forms in (y1, y2), written
/// in the x variables.
fn y0_coefficients(q: &BiPoly) -> [BiPoly; 3] {
    let mut out: [BiPoly; 3] = std::array::from_fn(|k| BiPoly::zero((2 - k as u32, 0)));
    for (m, c) in q.terms() {
        let k = m.beta[0] as usize;
        out[k] = out[k].add(&BiPoly::monomial(c.clone(), BiMonomial::new([m.beta[1], m.beta[2]], [0, 0, 0])));
    }
    out
}

/// Res_{y0}(q1, q2) for two conics with nonzero y0² coefficient:
/// (a f - c d)² - (a e - b d)(b f - c e).
fn resultant_y0(q1: &BiPoly, q2: &BiPoly) -> BiPoly {
    let [c, b, a] = y0_coefficients(q1);
    let [f, e, d] = y0_coefficients(q2);
    let t1 = a.mul(&f).sub(&c.mul(&d));
    let t2 = a.mul(&e).sub(&b.mul(&d));
    let t3 = b.mul(&f).sub(&c.mul(&e));
    let r = t1.mul(&t1).sub(&t2.mul(&t3));
    if r.is_zero() {
        BiPoly::zero((4, 0))
    } else {
        r
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PhiSigma {
    Constant([Scalar; 3]),
    NonConstant,
    Undefined,
}

/// A frame whose g3 sends [1,0,0] to q (g2 the identity).
pub fn frame_moving_y(q: &[Scalar; 3]) -> Result<FrameChange, Error> {
    let g3 = complete_basis(vec![q.clone()]).ok_or_else(|| Error::Precondition("zero point".into()))?;
    let g2 = [[Scalar::int(1), Scalar::int(0)], [Scalar::int(0), Scalar::int(1)]];
    FrameChange::new(g2, g3)
}

/// Whether the tangent lines at P2 of the fibre conics are all the same line.
pub fn phi_sigma_constant(f: &BiPoly, p2: &[Scalar; 3]) -> Result<PhiSigma, Error> {
    if f.x_coefficients().iter().any(|q| !eval_y(q, p2).is_zero()) {
        return Err(Error::Precondition("point is not a contracted section".into()));
    }
    let frame = frame_moving_y(p2)?;
    let g = frame.act(f);
    let rows: Vec<[Scalar; 2]> = g
        .x_coefficients()
        .iter()
        .map(|q| [q.coeff(&BiMonomial::new([0, 0], [1, 1, 0])), q.coeff(&BiMonomial::new([0, 0], [1, 0, 1]))])
        .collect();
    let mat: Vec<Vec<Scalar>> = rows.iter().map(|r| r.to_vec()).collect();
    match crate::scalars::rank(&mat) {
        0 => Ok(PhiSigma::Undefined),
        1 => {
            let r = rows.iter().find(|r| !is_zero_vec(*r)).unwrap();
            let lp = [Scalar::zero(), r[0].clone(), r[1].clone()];
            // ℓ'(y') = ℓ(y' g3) means ℓ' = g3 ℓ, so ℓ = g3⁻¹ ℓ'
            let inv = frame.inverse()?;
            let l: [Scalar; 3] =
                std::array::from_fn(|i| (0..3).fold(Scalar::zero(), |s, k| s.plus(&inv.g3[i][k].times(&lp[k]))));
            Ok(PhiSigma::Constant(crate::points::normalize_projective(l).unwrap()))
        }
        _ => Ok(PhiSigma::NonConstant),
    }
}

/// A direction in P¹ transverse to p1.
pub fn transverse(p1: &[Scalar; 2]) -> [Scalar; 2] {
    if p1[1].is_zero() {
        [Scalar::int(0), Scalar::int(1)]
    } else {
        [Scalar::int(1), Scalar::int(0)]
    }
}

/// The x-derivative of f at p1 in a direction transverse to p1, a (0,2) form.
pub fn transverse_derivative(f: &BiPoly, p1: &[Scalar; 2]) -> BiPoly {
    let q = transverse(p1);
    f.partial(Var::X0).subst_x(p1).scale(&q[0]).add(&f.partial(Var::X1).subst_x(p1).scale(&q[1]))
}

/// Whether the transverse x-derivative at p1 vanishes identically on the
/// line Z(line) ⊂ fibre over p1.
pub fn ramified_along(f: &BiPoly, p1: &[Scalar; 2], line: &[Scalar; 3]) -> Result<bool, Error> {
    if is_zero_vec(line) {
        return Err(Error::Precondition("zero linear form".into()));
    }
    let [a, b] = points_on_line(line);
    if !restrict_to_line(&f.subst_x(p1), &a, &b).is_zero() {
        return Err(Error::Precondition("line is not contained in the fibre".into()));
    }
    Ok(restrict_to_line(&transverse_derivative(f, p1), &a, &b).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse;

    #[test]
    fn pencil_round_trip_and_discriminant() {
        let f = parse("x0^2*y0^2 + x0*x1*y1^2 + x1^2*y2^2").unwrap();
        let p = fibre_matrix(&f);
        assert_eq!(p.to_poly(), f);
        let d = discriminant(&p);
        assert!(d.proportional(&crate::bipoly::parse_bidegree("x0^3*x1^3").unwrap()));
    }

    #[test]
    fn sections_of_thm311_instance() {
        let f = parse("x0^2*(y1^2+y0*y2+y2^2+y1*y2)+x0*x1*(y1^2+y0*y2)+x1^2*(y1^2+y0*y2+y1*y2)").unwrap();
        let s = contracted_sections(&f).unwrap();
        let one = Scalar::int(1);
        let z = Scalar::int(0);
        assert_eq!(s, ContractedSections::Finite(vec![[one.clone(), z.clone(), z.clone()]]));
        let phi = phi_sigma_constant(&f, &[one.clone(), z.clone(), z.clone()]).unwrap();
        assert_eq!(phi, PhiSigma::Constant([z.clone(), z, one]));
    }

    #[test]
    fn curve_of_sections() {
        let f = parse("x0*x1*(y0*y2+y1^2)").unwrap();
        assert!(matches!(contracted_sections(&f).unwrap(), ContractedSections::CurveOfSections(_)));
    }
}
