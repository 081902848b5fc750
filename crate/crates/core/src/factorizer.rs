//! Factorization of (2,2) forms into irreducible bihomogeneous factors over
//! the algebraic closure of the rationals.

use num_traits::Signed;

use crate::bipoly::{BiMonomial, BiPoly, Var};
use crate::error::Error;
use crate::forms::{
    binary_gcd, binary_roots, conic_matrix, cross3, is_zero_vec, kernel3, line_poly, matrix_rank3, restrict_to_line,
    ternary_gcd_all,
};
use crate::scalars::{Field, NfElem, NumberField, Rational, Scalar, UniPoly};

/// Factors conjugate over Q, together with their rational product.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorGroup {
    pub rational: BiPoly,
    pub factors: Vec<BiPoly>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub x_content: BiPoly,
    pub y_content: BiPoly,
    pub primitive: BiPoly,
    pub groups: Vec<FactorGroup>,
}

impl Factorization {
    /// All geometric factors, with repetition.
    pub fn factors(&self) -> Vec<&BiPoly> {
        self.groups.iter().flat_map(|g| g.factors.iter()).collect()
    }

    pub fn bidegrees(&self) -> Vec<(u32, u32)> {
        self.factors().iter().map(|f| f.bidegree()).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors().len() == 1
    }

    /// Product of the rational groups; equals the input up to a scalar.
    pub fn rational_product(&self) -> BiPoly {
        BiPoly::product(self.groups.iter().map(|g| &g.rational))
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// E with E² = q / lc(q), by formal coefficient matching from the leading term.
fn monic_sqrt(q: &BiPoly) -> Option<BiPoly> {
    let (lm, lc) = q.leading()?;
    if lm.alpha.iter().chain(lm.beta.iter()).any(|e| e % 2 == 1) {
        return None;
    }
    let m = BiMonomial::new(lm.alpha.map(|e| e / 2), lm.beta.map(|e| e / 2));
    let target = q.scale(&lc.inverse().unwrap());
    let half = Scalar::Rat(crate::scalars::rat_frac(1, 2));
    let mut e = BiPoly::monomial(Scalar::int(1), m);
    for _ in 0..64 {
        let r = target.sub(&e.mul(&e));
        let Some((rm, rc)) = r.leading() else {
            return Some(e);
        };
        if !m.divides(&rm) {
            return None;
        }
        let t = m.quotient(&rm);
        if t >= m {
            return None;
        }
        e = e.add(&BiPoly::monomial(rc.times(&half), t));
    }
    None
}

/// A square root of a rational form, possibly over Q(√c); None if not a square.
pub fn form_sqrt(q: &BiPoly) -> Result<Option<BiPoly>, Error> {
    if q.is_zero() {
        return Ok(Some(q.clone()));
    }
    let Some(e) = monic_sqrt(q) else {
        return Ok(None);
    };
    let lc = q.leading().unwrap().1.as_rational().ok_or_else(|| Error::Precondition("rational form expected".into()))?;
    let root = match rational_sqrt(&lc) {
        Some(r) => Scalar::Rat(r),
        None => {
            let modulus = UniPoly::new(vec![-lc, Rational::from_integer(0.into()), Rational::from_integer(1.into())]);
            let field = NumberField::new(&modulus)?;
            Scalar::Nf(NfElem::new(&field, UniPoly::from_ints(&[0, 1])))
        }
    };
    Ok(Some(e.scale(&root)))
}

fn linear_x_factors(form: &BiPoly) -> Result<Vec<FactorGroup>, Error> {
    let mut out = Vec::new();
    if form.bidegree().0 == 0 {
        return Ok(out);
    }
    for r in binary_roots(form)? {
        let factors = match r.degree() {
            1 => {
                let [p0, p1] = &r.point;
                vec![BiPoly::var(Var::X0).scale(p1).sub(&BiPoly::var(Var::X1).scale(p0)).monic()]
            }
            2 => {
                // root [ρ : 1] of a·t² + b·t + c; the conjugate is -b/a - ρ
                let (p, _) = crate::forms::binary_to_uni(&r.factor);
                let rho = r.point[0].clone();
                let conj = p.coeff(1).negate().divide(&p.coeff(2)).embed(&rho.field()).minus(&rho);
                [rho, conj].iter().map(|z| BiPoly::var(Var::X0).sub(&BiPoly::var(Var::X1).scale(z))).collect()
            }
            _ => return Err(Error::Precondition("binary content of degree above 2".into())),
        };
        for _ in 0..r.multiplicity {
            out.push(FactorGroup { rational: r.factor.monic(), factors: factors.clone() });
        }
    }
    Ok(out)
}

pub(crate) fn conic_factors(q: &BiPoly) -> Result<Vec<FactorGroup>, Error> {
    match q.bidegree().1 {
        0 => Ok(Vec::new()),
        1 => Ok(vec![FactorGroup { rational: q.monic(), factors: vec![q.monic()] }]),
        2 => {
            let m = conic_matrix(q);
            match matrix_rank3(&m) {
                3 => Ok(vec![FactorGroup { rational: q.monic(), factors: vec![q.monic()] }]),
                1 => {
                    let row = m.iter().find(|r| !is_zero_vec(*r)).unwrap().clone();
                    let l = line_poly(&row).monic();
                    Ok(vec![FactorGroup { rational: l.clone(), factors: vec![l.clone()] }; 2])
                }
                _ => {
                    let v = kernel3(&m).pop().unwrap();
                    let basis = crate::forms::complete_basis(vec![v.clone()]).unwrap();
                    let (a, b) = (&basis[1], &basis[2]);
                    let h = restrict_to_line(q, a, b);
                    let mut out = Vec::new();
                    for r in binary_roots(&h)? {
                        let pts: Vec<[Scalar; 3]> = match r.degree() {
                            1 => vec![std::array::from_fn(|j| r.point[0].times(&a[j]).plus(&r.point[1].times(&b[j])))],
                            _ => {
                                let (p, _) = crate::forms::binary_to_uni(&r.factor);
                                let rho = r.point[0].clone();
                                let conj = p.coeff(1).negate().divide(&p.coeff(2)).embed(&rho.field()).minus(&rho);
                                [rho, conj]
                                    .iter()
                                    .map(|z| std::array::from_fn(|j| z.times(&a[j]).plus(&b[j])))
                                    .collect()
                            }
                        };
                        let lines: Vec<BiPoly> = pts.iter().map(|p| line_poly(&cross3(&v, p)).monic()).collect();
                        let rational = if lines.len() == 1 { lines[0].clone() } else { lines[0].mul(&lines[1]).simplify().monic() };
                        for _ in 0..r.multiplicity {
                            out.push(FactorGroup { rational: rational.clone(), factors: lines.clone() });
                        }
                    }
                    Ok(out)
                }
            }
        }
        _ => Err(Error::Precondition("ternary content of degree above 2".into())),
    }
}

/// Split a primitive (2,2) form through the square root of B² - 4AC.
fn split_primitive(p: &BiPoly) -> Result<Vec<FactorGroup>, Error> {
    let whole = || Ok(vec![FactorGroup { rational: p.monic(), factors: vec![p.monic()] }]);
    if p.bidegree() != (2, 2) {
        return whole();
    }
    let [a, b, c] = <[BiPoly; 3]>::try_from(p.x_coefficients()).unwrap();
    let disc = b.mul(&b).sub(&a.mul(&c).scale(&Scalar::int(4)));
    let Some(d) = form_sqrt(&disc)? else {
        return whole();
    };
    let two_a = a.scale(&Scalar::int(2));
    let bm = b.sub(&d);
    let content = ternary_gcd_all(&[two_a.clone(), bm.clone()]);
    let f1 = BiPoly::var(Var::X0).mul(&two_a).add(&BiPoly::var(Var::X1).mul(&bm));
    let f1 = f1.div_exact(&content).ok_or_else(|| Error::Precondition("content does not divide".into()))?.monic();
    let f2 = p.div_exact(&f1).ok_or_else(|| Error::Precondition("factor does not divide".into()))?.monic();
    if f1.is_rational() {
        let (f1, f2) = (f1.simplify(), f2.simplify());
        let mut v = vec![f1, f2];
        v.sort_by_key(|f| f.bidegree());
        Ok(v.into_iter().map(|f| FactorGroup { rational: f.clone(), factors: vec![f] }).collect())
    } else {
        Ok(vec![FactorGroup { rational: p.monic(), factors: vec![f1, f2] }])
    }
}

/// Factor a nonzero rational (2,2) form.
pub fn bihomogeneous_factor(f: &BiPoly) -> Result<Factorization, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.bidegree() != (2, 2) {
        return Err(Error::Precondition("bidegree (2,2) expected".into()));
    }
    if !f.is_rational() {
        return Err(Error::Precondition("factorization requires rational coefficients".into()));
    }
    let ycoef: Vec<BiPoly> = f.y_coefficients().into_iter().map(|(_, q)| q).collect();
    let x_content = binary_gcd(&ycoef);
    let after_x = f.div_exact(&x_content).expect("binary content divides");
    let xc: Vec<BiPoly> = after_x.x_coefficients().into_iter().filter(|q| !q.is_zero()).collect();
    let y_content = ternary_gcd_all(&xc);
    let primitive = after_x.div_exact(&y_content).expect("ternary content divides");
    let mut groups = linear_x_factors(&x_content)?;
    groups.extend(conic_factors(&y_content)?);
    if primitive.bidegree() != (0, 0) {
        groups.extend(split_primitive(&primitive)?);
    }
    Ok(Factorization { x_content, y_content, primitive, groups })
}
