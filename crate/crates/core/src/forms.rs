//! Binary forms in (x0,x1) and ternary forms in (y0,y1,y2), stored as
//! [`BiPoly`] of bidegree (d,0) or (0,d).

use crate::bipoly::{linear_form_x, linear_form_y, y_linear_coeffs, BiMonomial, BiPoly, FrameChange};
use crate::error::Error;
use crate::scalars::{adjoin_root, factor_over, kernel, Adjoined, Field, FieldCtx, Poly, Scalar};

/// F(t, 1) together with the multiplicity of the root [1:0].
pub fn binary_to_uni(form: &BiPoly) -> (Poly<Scalar>, u32) {
    let d = form.bidegree().0;
    let p = Poly::new((0..=d).map(|k| form.coeff(&BiMonomial::new([k, d - k], [0, 0, 0]))).collect());
    let inf = match p.degree() {
        Some(e) => d - e as u32,
        None => 0,
    };
    (p, inf)
}

/// Homogenize p(t) to degree d in (x0, x1) with t = x0/x1.
pub fn uni_to_binary(p: &Poly<Scalar>, d: u32) -> BiPoly {
    let terms = p.coeffs().iter().enumerate().map(|(k, c)| (BiMonomial::new([k as u32, d - k as u32], [0, 0, 0]), c.clone()));
    BiPoly::from_terms((d, 0), terms).expect("degree of p exceeds d")
}

/// Greatest common divisor of binary forms, normalized by its leading
/// coefficient; the zero form if all inputs are zero.
pub fn binary_gcd(forms: &[BiPoly]) -> BiPoly {
    let mut acc: Option<(Poly<Scalar>, u32)> = None;
    for f in forms.iter().filter(|f| !f.is_zero()) {
        let (p, inf) = binary_to_uni(f);
        acc = Some(match acc {
            None => (p.monic(), inf),
            Some((q, i)) => (q.gcd(&p), i.min(inf)),
        });
    }
    match acc {
        None => BiPoly::zero((0, 0)),
        Some((p, inf)) => {
            let d = p.deg0() as u32 + inf;
            uni_to_binary(&p, d)
        }
    }
}

/// A representative root class of a binary form: one root of an irreducible
/// factor, possibly in an extension field.
#[derive(Clone, Debug)]
pub struct BinaryRoot {
    pub point: [Scalar; 2],
    /// The irreducible factor as a binary form over the base field.
    pub factor: BiPoly,
    pub multiplicity: usize,
    /// Set when the point lives in a proper extension of the base field.
    pub extension: Option<Adjoined>,
}

impl BinaryRoot {
    /// Map a scalar of the base field into the field of the point.
    pub fn lift(&self, s: &Scalar) -> Scalar {
        match &self.extension {
            Some(a) => a.embed(s),
            None => s.clone(),
        }
    }

    pub fn degree(&self) -> usize {
        self.factor.bidegree().0 as usize
    }
}

/// One representative per irreducible factor of a nonzero binary form.
pub fn binary_roots(form: &BiPoly) -> Result<Vec<BinaryRoot>, Error> {
    if form.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = form.field()?;
    let (p, inf) = binary_to_uni(form);
    let mut out = Vec::new();
    if inf > 0 {
        out.push(BinaryRoot {
            point: [Scalar::int(1), Scalar::int(0)],
            factor: BiPoly::var(crate::bipoly::Var::X1),
            multiplicity: inf as usize,
            extension: None,
        });
    }
    if p.deg0() > 0 {
        for (h, mult) in factor_over(&p, &ctx)? {
            let factor = uni_to_binary(&h, h.deg0() as u32);
            if h.deg0() == 1 {
                let r = h.coeff(0).negate().times(&h.leading().inverse().unwrap());
                out.push(BinaryRoot { point: [r, Scalar::int(1)], factor, multiplicity: mult, extension: None });
            } else {
                let adj = adjoin_root(&h, &ctx)?;
                let point = [Scalar::Nf(adj.root.clone()), Scalar::int(1)];
                out.push(BinaryRoot { point, factor, multiplicity: mult, extension: Some(adj) });
            }
        }
    }
    Ok(out)
}

/// Map every coefficient through a field embedding.
pub fn lift_poly(f: &BiPoly, ext: &Option<Adjoined>) -> BiPoly {
    match ext {
        None => f.clone(),
        Some(a) => BiPoly::from_terms(f.bidegree(), f.terms().map(|(m, c)| (*m, a.embed(c)))).unwrap(),
    }
}

pub fn lift_vec<const N: usize>(v: &[Scalar; N], ext: &Option<Adjoined>) -> [Scalar; N] {
    match ext {
        None => v.clone(),
        Some(a) => std::array::from_fn(|i| a.embed(&v[i])),
    }
}

pub fn cross3(a: &[Scalar; 3], b: &[Scalar; 3]) -> [Scalar; 3] {
    [
        a[1].times(&b[2]).minus(&a[2].times(&b[1])),
        a[2].times(&b[0]).minus(&a[0].times(&b[2])),
        a[0].times(&b[1]).minus(&a[1].times(&b[0])),
    ]
}

pub fn dot3(a: &[Scalar; 3], b: &[Scalar; 3]) -> Scalar {
    (0..3).fold(Scalar::zero(), |s, i| s.plus(&a[i].times(&b[i])))
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// 2·Gram matrix of a ternary quadratic form: q(y) = yᵀ M y / 2.
pub fn conic_matrix(q: &BiPoly) -> [[Scalar; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut b = [0u32; 3];
            b[i] += 1;
            b[j] += 1;
            let c = q.coeff(&BiMonomial::new([0, 0], b));
            if i == j {
                c.times(&Scalar::int(2))
            } else {
                c
            }
        })
    })
}

pub fn matrix_rank3(m: &[[Scalar; 3]; 3]) -> usize {
    crate::scalars::rank(&m.iter().map(|r| r.to_vec()).collect())
}

pub fn kernel3(m: &[[Scalar; 3]; 3]) -> Vec<[Scalar; 3]> {
    kernel(&m.iter().map(|r| r.to_vec()).collect(), 3)
        .into_iter()
        .map(|v| [v[0].clone(), v[1].clone(), v[2].clone()])
        .collect()
}

/// A nonzero vector orthogonal-complement basis: two independent points on
/// the line with coefficient vector l.
pub fn points_on_line(l: &[Scalar; 3]) -> [[Scalar; 3]; 2] {
    let k = kernel(&vec![l.to_vec()], 3);
    debug_assert_eq!(k.len(), 2);
    [0, 1].map(|i| [k[i][0].clone(), k[i][1].clone(), k[i][2].clone()])
}

/// Restrict a ternary form to the line through p and q: F(s·p + t·q) as a
/// binary form in (x0, x1) = (s, t).
pub fn restrict_to_line(f: &BiPoly, p: &[Scalar; 3], q: &[Scalar; 3]) -> BiPoly {
    let d = f.bidegree().1;
    let s = linear_form_x(&[Scalar::int(1), Scalar::int(0)]);
    let t = linear_form_x(&[Scalar::int(0), Scalar::int(1)]);
    let img: Vec<BiPoly> = (0..3).map(|j| s.scale(&p[j]).add(&t.scale(&q[j]))).collect();
    let mut out = BiPoly::zero((d, 0));
    for (m, c) in f.terms() {
        let term = img[0].pow(m.beta[0]).mul(&img[1].pow(m.beta[1])).mul(&img[2].pow(m.beta[2])).scale(c);
        out = out.add(&term);
    }
    out
}

/// Evaluate a (0,d) form at a point of P².
pub fn eval_y(f: &BiPoly, q: &[Scalar; 3]) -> Scalar {
    f.subst_y(q).coeff(&BiMonomial::one())
}

/// Evaluate a (d,0) form at a point of P¹.
pub fn eval_x(f: &BiPoly, p: &[Scalar; 2]) -> Scalar {
    f.subst_x(p).coeff(&BiMonomial::one())
}

/// Gradient of a (0,d) form at q.
pub fn gradient_y(f: &BiPoly, q: &[Scalar; 3]) -> [Scalar; 3] {
    use crate::bipoly::Var;
    [Var::Y0, Var::Y1, Var::Y2].map(|v| eval_y(&f.partial(v), q))
}

/// Greatest common divisor of two ternary forms over their common field, via
/// the largest k admitting a syzygy a·Q1 + b·Q2 = 0 with deg a = d2 - k,
/// deg b = d1 - k. Zero inputs behave as the identity.
pub fn ternary_gcd(q1: &BiPoly, q2: &BiPoly) -> BiPoly {
    if q1.is_zero() {
        return q2.monic();
    }
    if q2.is_zero() {
        return q1.monic();
    }
    let d1 = q1.bidegree().1;
    let d2 = q2.bidegree().1;
    for k in (1..=d1.min(d2)).rev() {
        let ba = BiMonomial::basis(0, d2 - k);
        let bb = BiMonomial::basis(0, d1 - k);
        let target = BiMonomial::basis(0, d1 + d2 - k);
        let cols: Vec<BiPoly> = ba
            .iter()
            .map(|m| q1.mul(&BiPoly::monomial(Scalar::int(1), *m)))
            .chain(bb.iter().map(|m| q2.mul(&BiPoly::monomial(Scalar::int(1), *m))))
            .collect();
        let mat: Vec<Vec<Scalar>> = target.iter().map(|t| cols.iter().map(|c| c.coeff(t)).collect()).collect();
        let ker = kernel(&mat, cols.len());
        if let Some(v) = ker.first() {
            let a = ba.iter().zip(v).fold(BiPoly::zero((0, d2 - k)), |s, (m, c)| s.add(&BiPoly::monomial(c.clone(), *m)));
            if a.is_zero() {
                // q2 vanishes identically against q1; cannot happen for nonzero q2
                continue;
            }
            if let Some(g) = q2.div_exact(&a) {
                return g.monic();
            }
        }
    }
    BiPoly::constant(Scalar::int(1))
}

pub fn ternary_gcd_all(qs: &[BiPoly]) -> BiPoly {
    qs.iter().fold(BiPoly::zero((0, 0)), |acc, q| if acc.is_zero() { q.monic() } else { ternary_gcd(&acc, q) })
}

/// f(x, v(x)) for binary forms v_j of a common degree: a binary form.
pub fn subst_y_forms(f: &BiPoly, v: &[BiPoly; 3]) -> BiPoly {
    let e = v.iter().map(|p| p.bidegree().0).max().unwrap_or(0);
    let (d1, d2) = f.bidegree();
    let mut out = BiPoly::zero((d1 + d2 * e, 0));
    for (m, c) in f.terms() {
        let xpart = BiPoly::monomial(c.clone(), BiMonomial::new(m.alpha, [0, 0, 0]));
        let t = xpart.mul(&v[0].pow(m.beta[0])).mul(&v[1].pow(m.beta[1])).mul(&v[2].pow(m.beta[2]));
        out = out.add(&t);
    }
    out
}

/// Line through two distinct points.
pub fn line_through(p: &[Scalar; 3], q: &[Scalar; 3]) -> [Scalar; 3] {
    cross3(p, q)
}

pub fn line_poly(l: &[Scalar; 3]) -> BiPoly {
    linear_form_y(l)
}

pub fn line_coeffs(l: &BiPoly) -> [Scalar; 3] {
    y_linear_coeffs(l)
}

/// Complete a nonzero vector to a basis: the first standard unit vectors
/// that keep the rows independent.
pub fn complete_basis<const N: usize>(rows: Vec<[Scalar; N]>) -> Option<[[Scalar; N]; N]> {
    let mut out = rows;
    for i in 0..N {
        if out.len() == N {
            break;
        }
        let mut e: [Scalar; N] = std::array::from_fn(|_| Scalar::zero());
        e[i] = Scalar::int(1);
        let mut trial = out.clone();
        trial.push(e);
        let m: Vec<Vec<Scalar>> = trial.iter().map(|r| r.to_vec()).collect();
        if crate::scalars::rank(&m) == trial.len() {
            out = trial;
        }
    }
    if out.len() != N {
        return None;
    }
    let m: Vec<Vec<Scalar>> = out.iter().map(|r| r.to_vec()).collect();
    if crate::scalars::rank(&m) != N {
        return None;
    }
    Some(std::array::from_fn(|i| out[i].clone()))
}

/// Frame whose g2 has the given first row and g3 the given rows (completed
/// to a basis).
pub fn frame_with_rows(x_rows: Vec<[Scalar; 2]>, y_rows: Vec<[Scalar; 3]>) -> Result<FrameChange, Error> {
    let bad = || Error::Precondition("alignment data does not determine an invertible frame".into());
    let g2 = complete_basis(x_rows).ok_or_else(bad)?;
    let g3 = complete_basis(y_rows).ok_or_else(bad)?;
    FrameChange::new(g2, g3)
}

/// The field generated by all coefficients of several polynomials.
pub fn field_of(polys: &[&BiPoly]) -> Result<FieldCtx, Error> {
    crate::scalars::common_field(polys.iter().flat_map(|p| p.terms().map(|(_, c)| c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse_bidegree;

    #[test]
    fn binary_gcd_and_roots() {
        let a = parse_bidegree("x0^2 - x1^2").unwrap();
        let b = parse_bidegree("x0*x1 - x1^2").unwrap();
        assert!(binary_gcd(&[a.clone(), b]).proportional(&parse_bidegree("x0 - x1").unwrap()));
        let c = parse_bidegree("x0*x1^2 + 2*x1^3").unwrap();
        let d = parse_bidegree("x1^3").unwrap();
        assert!(binary_gcd(&[c, d]).proportional(&parse_bidegree("x1^2").unwrap()));
        let roots = binary_roots(&parse_bidegree("x0^3*x1 - 2*x0*x1^3").unwrap()).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().any(|r| r.extension.is_some()));
    }

    #[test]
    fn ternary_gcd_examples() {
        let l = parse_bidegree("y0 + y1").unwrap();
        let q1 = l.mul(&parse_bidegree("y2").unwrap());
        let q2 = l.mul(&parse_bidegree("y0 - y2").unwrap());
        assert!(ternary_gcd(&q1, &q2).proportional(&l));
        let c = parse_bidegree("y0*y2 + y1^2").unwrap();
        assert!(ternary_gcd(&c, &c.scale(&Scalar::int(3))).proportional(&c));
        assert_eq!(ternary_gcd(&c, &parse_bidegree("y0^2").unwrap()).bidegree(), (0, 0));
    }
}
