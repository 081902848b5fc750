//! Polynomials over a number field K: factorization and root adjunction.
//!
//! Both work in the ℚ-algebra A = K[y]/(g), of dimension n·deg g. For a
//! separating element γ = y + kα (α the generator of K) the minimal polynomial
//! of γ over ℚ has full degree, its ℚ-factors correspond to the K-factors of
//! g, and when g is irreducible it defines the extension field K(β) = ℚ(γ).

use std::sync::Arc;

use super::factor::uv_factorize_with_cap;
use super::numfield::NumberField;
use super::{solve, Field, FieldCtx, Matrix, NfElem, Poly, Rational, Scalar, UniPoly, MAX_FIELD_DEGREE};
use crate::error::Error;

fn to_vector(a: &Poly<Scalar>, d: usize, n: usize) -> Vec<Rational> {
    let mut v = vec![<Rational as Field>::zero(); d * n];
    for j in 0..d {
        match a.coeff(j) {
            Scalar::Rat(q) => v[j * n] = q,
            Scalar::Nf(x) => {
                for i in 0..n {
                    v[j * n + i] = x.residue().coeff(i);
                }
            }
        }
    }
    v
}

fn generator_of(ctx: &FieldCtx) -> Scalar {
    match ctx {
        Some(k) => Scalar::Nf(k.generator()),
        None => Scalar::int(0),
    }
}

/// Minimal polynomial over ℚ of γ = y + kα in K[y]/(g), via the first linear
/// dependency among its powers.
fn min_poly_in_algebra(g: &Poly<Scalar>, ctx: &FieldCtx, k: i64) -> UniPoly {
    let n = ctx.as_ref().map_or(1, |f| f.degree());
    let d = g.deg0();
    let dim = n * d;
    let shift = generator_of(ctx).times(&Scalar::int(k));
    let gamma = Poly::new(vec![shift, Scalar::int(1)]).rem(g);
    let mut powers = vec![to_vector(&Poly::one(), d, n)];
    let mut cur: Poly<Scalar> = Poly::one();
    for i in 1..=dim {
        cur = cur.mul(&gamma).rem(g);
        let v = to_vector(&cur, d, n);
        let m: Matrix<Rational> = (0..dim).map(|r| powers.iter().map(|p| p[r].clone()).collect()).collect();
        if let Some(c) = solve(&m, &v) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(<Rational as Field>::one());
            debug_assert_eq!(coeffs.len(), i + 1);
            return Poly::new(coeffs);
        }
        powers.push(v);
    }
    unreachable!("minimal polynomial degree exceeds algebra dimension")
}

fn shifts() -> impl Iterator<Item = i64> {
    (0..).flat_map(|k: i64| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// p(y + c) for p with rational coefficients, as a polynomial over K.
fn compose_shift(p: &UniPoly, c: &Scalar) -> Poly<Scalar> {
    p.map(|q| Scalar::Rat(q.clone())).shift(c)
}

/// Monic irreducible factors of g over K, with multiplicity.
pub fn factor_over(g: &Poly<Scalar>, ctx: &FieldCtx) -> Result<Vec<(Poly<Scalar>, usize)>, Error> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (sq, mult) in super::uv_squarefree_decomposition(g)? {
        for f in factor_squarefree_over(&sq, ctx)? {
            out.push((f, mult));
        }
    }
    out.sort_by_key(|(f, _)| f.deg0());
    Ok(out)
}

fn factor_squarefree_over(g: &Poly<Scalar>, ctx: &FieldCtx) -> Result<Vec<Poly<Scalar>>, Error> {
    let g = g.monic();
    if g.deg0() <= 1 {
        return Ok(if g.deg0() == 1 { vec![g] } else { vec![] });
    }
    let Some(k) = ctx else {
        let q: UniPoly = g.map(|s| s.as_rational().expect("rational polynomial"));
        return Ok(uv_factorize_with_cap(&q, 2 * MAX_FIELD_DEGREE)?
            .into_iter()
            .map(|(f, _)| f.map(|c| Scalar::Rat(c.clone())))
            .collect());
    };
    let dim = k.degree() * g.deg0();
    if dim > 2 * MAX_FIELD_DEGREE {
        return Err(Error::DegreeCap { degree: dim, cap: 2 * MAX_FIELD_DEGREE });
    }
    for s in shifts() {
        let mu = min_poly_in_algebra(&g, ctx, s);
        if mu.deg0() < dim {
            continue;
        }
        let shift = generator_of(ctx).times(&Scalar::int(s));
        let mut out = Vec::new();
        for (h, _) in uv_factorize_with_cap(&mu, 2 * MAX_FIELD_DEGREE)? {
            let hk = compose_shift(&h, &shift);
            let f = g.gcd(&hk);
            if f.deg0() > 0 {
                out.push(f);
            }
        }
        return Ok(out);
    }
    unreachable!()
}

/// Roots of g lying in K.
pub fn roots_over(g: &Poly<Scalar>, ctx: &FieldCtx) -> Result<Vec<Scalar>, Error> {
    Ok(factor_over(g, ctx)?
        .into_iter()
        .filter(|(f, _)| f.deg0() == 1)
        .map(|(f, _)| f.coeff(0).negate())
        .collect())
}

/// K(β) for a root β of an irreducible h over K, as an absolute field
/// L = ℚ(γ), together with the images of K's generator and of β.
#[derive(Clone, Debug)]
pub struct Adjoined {
    pub field: Arc<NumberField>,
    pub base_generator: Option<NfElem>,
    pub root: NfElem,
}

impl Adjoined {
    /// Image in L of a scalar from K (or ℚ).
    pub fn embed(&self, s: &Scalar) -> Scalar {
        match s {
            Scalar::Rat(q) => Scalar::Nf(NfElem::from_rational(&self.field, q)),
            Scalar::Nf(x) => {
                let a = Scalar::Nf(self.base_generator.clone().expect("base field generator"));
                x.residue().eval_with(&a, |q| Scalar::Rat(q.clone()))
            }
        }
    }

    pub fn ctx(&self) -> FieldCtx {
        Some(self.field.clone())
    }
}

pub fn adjoin_root(h: &Poly<Scalar>, ctx: &FieldCtx) -> Result<Adjoined, Error> {
    let h = h.monic();
    let d = h.deg0();
    if d < 2 {
        return Err(Error::InvalidModulus("adjoining a root of a linear polynomial".into()));
    }
    let Some(k) = ctx else {
        let q: UniPoly = h.map(|s| s.as_rational().expect("rational polynomial"));
        if d > MAX_FIELD_DEGREE {
            return Err(Error::DegreeCap { degree: d, cap: MAX_FIELD_DEGREE });
        }
        let field = NumberField::new_unchecked(q);
        let root = field.generator();
        return Ok(Adjoined { field, base_generator: None, root });
    };
    let n = k.degree();
    let dim = n * d;
    if dim > MAX_FIELD_DEGREE {
        return Err(Error::DegreeCap { degree: dim, cap: MAX_FIELD_DEGREE });
    }
    for s in shifts() {
        let mu = min_poly_in_algebra(&h, ctx, s);
        if mu.deg0() < dim {
            continue;
        }
        let field = NumberField::new_unchecked(mu);
        // express α in powers of γ
        let shift = generator_of(ctx).times(&Scalar::int(s));
        let gamma = Poly::new(vec![shift, Scalar::int(1)]).rem(&h);
        let mut cols = Vec::with_capacity(dim);
        let mut cur: Poly<Scalar> = Poly::one();
        for _ in 0..dim {
            cols.push(to_vector(&cur, d, n));
            cur = cur.mul(&gamma).rem(&h);
        }
        let m: Matrix<Rational> = (0..dim).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let alpha_vec = to_vector(&Poly::constant(generator_of(ctx)), d, n);
        let c = solve(&m, &alpha_vec).expect("γ generates the extension");
        let alpha = field.element(Poly::new(c));
        let z = field.generator();
        let root = z.try_sub(&alpha.scale(&super::rat(s))).unwrap();
        return Ok(Adjoined { field, base_generator: Some(alpha), root });
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn sp(c: &[i64]) -> Poly<Scalar> {
        Poly::new(c.iter().map(|&x| Scalar::int(x)).collect())
    }

    #[test]
    fn sqrt3_over_sqrt2() {
        let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let ctx = Some(k.clone());
        let g = sp(&[-3, 0, 1]);
        assert_eq!(factor_over(&g, &ctx).unwrap().len(), 1);
        let adj = adjoin_root(&g, &ctx).unwrap();
        assert_eq!(adj.field.degree(), 4);
        let b = adj.root.clone();
        assert_eq!(b.try_mul(&b).unwrap().as_rational(), Some(rat(3)));
        let a = adj.embed(&Scalar::Nf(k.generator()));
        assert_eq!((&a * &a).as_rational(), Some(rat(2)));
    }

    #[test]
    fn splits_over_its_own_field() {
        // y^2 - 8 = (y - 2t)(y + 2t) over Q(t), t^2 = 2
        let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let ctx = Some(k.clone());
        let roots = roots_over(&sp(&[-8, 0, 1]), &ctx).unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert_eq!((&r * &r).as_rational(), Some(rat(8)));
        }
    }

    #[test]
    fn over_rationals() {
        let r = roots_over(&sp(&[-4, 0, 1]), &None).unwrap();
        assert_eq!(r.len(), 2);
        let adj = adjoin_root(&sp(&[1, 0, 1]), &None).unwrap();
        let i = Scalar::Nf(adj.root.clone());
        assert_eq!((&i * &i).as_rational(), Some(rat(-1)));
    }
}
