//! Bihomogeneous polynomials in (x0,x1; y0,y1,y2).

mod affine;
mod frame;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

pub use affine::{degree_part, AffinePoly, Chart};
pub use frame::{act, FrameChange};
pub use parse::{parse, parse_bidegree};

use crate::error::Error;
use crate::scalars::{common_field, Field, FieldCtx, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X0,
    X1,
    Y0,
    Y1,
    Y2,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X0, Var::X1, Var::Y0, Var::Y1, Var::Y2];

    pub fn name(self) -> &'static str {
        match self {
            Var::X0 => "x0",
            Var::X1 => "x1",
            Var::Y0 => "y0",
            Var::Y1 => "y1",
            Var::Y2 => "y2",
        }
    }
}

/// x^alpha y^beta. The derived order is lex on (α0, α1, β0, β1, β2), a
/// monomial order; on a fixed bidegree it is lex on (α0, β0, β1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiMonomial {
    pub alpha: [u32; 2],
    pub beta: [u32; 3],
}

impl BiMonomial {
    pub const fn new(alpha: [u32; 2], beta: [u32; 3]) -> Self {
        BiMonomial { alpha, beta }
    }

    pub fn one() -> Self {
        BiMonomial::new([0, 0], [0, 0, 0])
    }

    pub fn var(v: Var) -> Self {
        let mut m = BiMonomial::one();
        match v {
            Var::X0 => m.alpha[0] = 1,
            Var::X1 => m.alpha[1] = 1,
            Var::Y0 => m.beta[0] = 1,
            Var::Y1 => m.beta[1] = 1,
            Var::Y2 => m.beta[2] = 1,
        }
        m
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.alpha.iter().sum(), self.beta.iter().sum())
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X0 => self.alpha[0],
            Var::X1 => self.alpha[1],
            Var::Y0 => self.beta[0],
            Var::Y1 => self.beta[1],
            Var::Y2 => self.beta[2],
        }
    }

    fn exponent_mut(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::X0 => &mut self.alpha[0],
            Var::X1 => &mut self.alpha[1],
            Var::Y0 => &mut self.beta[0],
            Var::Y1 => &mut self.beta[1],
            Var::Y2 => &mut self.beta[2],
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        BiMonomial::new(
            [self.alpha[0] + o.alpha[0], self.alpha[1] + o.alpha[1]],
            [self.beta[0] + o.beta[0], self.beta[1] + o.beta[1], self.beta[2] + o.beta[2]],
        )
    }

    pub fn divides(&self, o: &Self) -> bool {
        Var::ALL.iter().all(|&v| self.exponent(v) <= o.exponent(v))
    }

    /// o / self, assuming divisibility.
    pub fn quotient(&self, o: &Self) -> Self {
        let mut m = *o;
        for v in Var::ALL {
            *m.exponent_mut(v) -= self.exponent(v);
        }
        m
    }

    /// All monomials of the given bidegree, in ascending canonical order.
    pub fn basis(d1: u32, d2: u32) -> Vec<BiMonomial> {
        let mut out = Vec::new();
        for a0 in 0..=d1 {
            for b0 in 0..=d2 {
                for b1 in 0..=d2 - b0 {
                    out.push(BiMonomial::new([a0, d1 - a0], [b0, b1, d2 - b0 - b1]));
                }
            }
        }
        out.sort();
        out
    }

    /// The 18 monomials of bidegree (2,2).
    pub fn basis22() -> Vec<BiMonomial> {
        BiMonomial::basis(2, 2)
    }
}

impl fmt::Display for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for v in Var::ALL {
            match self.exponent(v) {
                0 => {}
                1 => parts.push(v.name().to_string()),
                e => parts.push(format!("{}^{e}", v.name())),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A bihomogeneous polynomial with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    bidegree: (u32, u32),
    terms: BTreeMap<BiMonomial, Scalar>,
}

impl BiPoly {
    pub fn zero(bidegree: (u32, u32)) -> Self {
        BiPoly { bidegree, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        BiPoly::monomial(c, BiMonomial::one())
    }

    pub fn monomial(c: Scalar, m: BiMonomial) -> Self {
        let mut p = BiPoly::zero(m.bidegree());
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        BiPoly::monomial(Scalar::int(1), BiMonomial::var(v))
    }

    /// Build from terms; errors when a monomial has the wrong bidegree.
    pub fn from_terms(
        bidegree: (u32, u32),
        terms: impl IntoIterator<Item = (BiMonomial, Scalar)>,
    ) -> Result<Self, Error> {
        let mut p = BiPoly::zero(bidegree);
        for (m, c) in terms {
            if m.bidegree() != bidegree {
                return Err(Error::Parse(format!("monomial {m} does not have bidegree {bidegree:?}")));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: BiMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.bidegree(), self.bidegree);
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old.plus(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BiMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<BiMonomial> {
        self.terms.keys().copied().collect()
    }

    pub fn coeff(&self, m: &BiMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading term in the lex monomial order.
    pub fn leading(&self) -> Option<(BiMonomial, Scalar)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    pub fn field(&self) -> Result<FieldCtx, Error> {
        common_field(self.terms.values())
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.as_rational().is_some())
    }

    /// Collapse coefficients that are rational.
    pub fn simplify(&self) -> BiPoly {
        BiPoly {
            bidegree: self.bidegree,
            terms: self.terms.iter().map(|(m, c)| (*m, c.clone().simplify())).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        assert_eq!(self.bidegree, o.bidegree, "adding polynomials of different bidegree");
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        BiPoly { bidegree: self.bidegree, terms: self.terms.iter().map(|(m, c)| (*m, c.negate())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut p = BiPoly::zero(self.bidegree);
        for (m, x) in &self.terms {
            p.add_term(*m, x.times(c));
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let bd = (self.bidegree.0 + o.bidegree.0, self.bidegree.1 + o.bidegree.1);
        let mut p = BiPoly::zero(bd);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.add_term(m1.mul(m2), c1.times(c2));
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = BiPoly::constant(Scalar::int(1));
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn product<'a>(items: impl IntoIterator<Item = &'a BiPoly>) -> BiPoly {
        items.into_iter().fold(BiPoly::constant(Scalar::int(1)), |acc, p| acc.mul(p))
    }

    /// Exact quotient self / d, or None when d does not divide self.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading()?;
        if d.bidegree.0 > self.bidegree.0 || d.bidegree.1 > self.bidegree.1 {
            return if self.is_zero() { Some(BiPoly::zero((0, 0))) } else { None };
        }
        let qd = (self.bidegree.0 - d.bidegree.0, self.bidegree.1 - d.bidegree.1);
        let inv = lc.inverse()?;
        let mut r = self.clone();
        let mut q = BiPoly::zero(qd);
        while let Some((m, c)) = r.leading() {
            if !lm.divides(&m) {
                return None;
            }
            let t = BiPoly::monomial(c.times(&inv), lm.quotient(&m));
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// True when the two are nonzero scalar multiples of each other (or both zero).
    pub fn proportional(&self, o: &Self) -> bool {
        match (self.leading(), o.leading()) {
            (None, None) => true,
            (Some((m1, c1)), Some((m2, c2))) if m1 == m2 => self.scale(&c2) == o.scale(&c1),
            _ => false,
        }
    }

    pub fn partial(&self, v: Var) -> Self {
        let (d1, d2) = self.bidegree;
        let bd = match v {
            Var::X0 | Var::X1 => (d1.saturating_sub(1), d2),
            _ => (d1, d2.saturating_sub(1)),
        };
        let mut p = BiPoly::zero(bd);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            *m2.exponent_mut(v) -= 1;
            p.add_term(m2, c.times(&Scalar::int(e as i64)));
        }
        p
    }

    pub fn eval(&self, x: &[Scalar; 2], y: &[Scalar; 3]) -> Scalar {
        let mut s = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, xi) in x.iter().enumerate() {
                t = t.times(&pow_scalar(xi, m.alpha[i]));
            }
            for (j, yj) in y.iter().enumerate() {
                t = t.times(&pow_scalar(yj, m.beta[j]));
            }
            s = s.plus(&t);
        }
        s
    }

    /// f(p, y): a form of bidegree (0, d2).
    pub fn subst_x(&self, p: &[Scalar; 2]) -> BiPoly {
        let mut out = BiPoly::zero((0, self.bidegree.1));
        for (m, c) in &self.terms {
            let k = c.times(&pow_scalar(&p[0], m.alpha[0])).times(&pow_scalar(&p[1], m.alpha[1]));
            out.add_term(BiMonomial::new([0, 0], m.beta), k);
        }
        out
    }

    /// f(x, q): a form of bidegree (d1, 0).
    pub fn subst_y(&self, q: &[Scalar; 3]) -> BiPoly {
        let mut out = BiPoly::zero((self.bidegree.0, 0));
        for (m, c) in &self.terms {
            let mut k = c.clone();
            for j in 0..3 {
                k = k.times(&pow_scalar(&q[j], m.beta[j]));
            }
            out.add_term(BiMonomial::new(m.alpha, [0, 0, 0]), k);
        }
        out
    }

    /// Coefficients of x0^{d1-i} x1^i as forms in y, i = 0..=d1 (for d1 = 2: A, B, C).
    pub fn x_coefficients(&self) -> Vec<BiPoly> {
        let (d1, d2) = self.bidegree;
        let mut out = vec![BiPoly::zero((0, d2)); d1 as usize + 1];
        for (m, c) in &self.terms {
            out[m.alpha[1] as usize].add_term(BiMonomial::new([0, 0], m.beta), c.clone());
        }
        out
    }

    /// Coefficient forms in x of each y-monomial, over the y-basis of degree d2.
    pub fn y_coefficients(&self) -> Vec<([u32; 3], BiPoly)> {
        let (d1, d2) = self.bidegree;
        BiMonomial::basis(0, d2)
            .into_iter()
            .map(|yb| {
                let mut form = BiPoly::zero((d1, 0));
                for (m, c) in &self.terms {
                    if m.beta == yb.beta {
                        form.add_term(BiMonomial::new(m.alpha, [0, 0, 0]), c.clone());
                    }
                }
                (yb.beta, form)
            })
            .collect()
    }

    /// Swap x0 ↔ x1 and/or reverse the y variables (y0 ↔ y2).
    pub fn swap_vars(&self, swap_x: bool, swap_y: bool) -> BiPoly {
        let mut p = BiPoly::zero(self.bidegree);
        for (m, c) in &self.terms {
            let mut m2 = *m;
            if swap_x {
                m2.alpha.swap(0, 1);
            }
            if swap_y {
                m2.beta.swap(0, 2);
            }
            p.add_term(m2, c.clone());
        }
        p
    }

    /// Scale the coefficient of x^α y^β by t^α σ^β.
    pub fn diagonal_scale(&self, t: &[Scalar; 2], s: &[Scalar; 3]) -> BiPoly {
        let mut p = BiPoly::zero(self.bidegree);
        for (m, c) in &self.terms {
            let mut k = c.clone();
            for i in 0..2 {
                k = k.times(&pow_scalar(&t[i], m.alpha[i]));
            }
            for j in 0..3 {
                k = k.times(&pow_scalar(&s[j], m.beta[j]));
            }
            p.add_term(*m, k);
        }
        p
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> BiPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inverse().unwrap()),
            None => self.clone(),
        }
    }

    pub fn embed(&self, ctx: &FieldCtx) -> BiPoly {
        BiPoly {
            bidegree: self.bidegree,
            terms: self.terms.iter().map(|(m, c)| (*m, c.embed(ctx))).collect(),
        }
    }

    /// Human-readable canonical form, terms in descending order.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = m.to_string();
            let (neg, body) = match c.as_rational() {
                Some(q) => {
                    let neg = q.is_negative();
                    let a = Scalar::Rat(q.abs());
                    let body = if a == Scalar::int(1) {
                        mono.clone()
                    } else if mono == "1" {
                        a.to_spec_string()
                    } else {
                        format!("{}*{mono}", a.to_spec_string())
                    };
                    (neg, body)
                }
                None => (false, if mono == "1" { format!("({c})") } else { format!("({c})*{mono}") }),
            };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&body);
        }
        s
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub(crate) fn pow_scalar(x: &Scalar, e: u32) -> Scalar {
    let mut r = Scalar::one();
    for _ in 0..e {
        r = r.times(x);
    }
    r
}

/// The linear form c0·v0 + c1·v1 (+ c2·v2) in the x or y variables.
pub fn linear_form_x(c: &[Scalar; 2]) -> BiPoly {
    BiPoly::var(Var::X0).scale(&c[0]).add(&BiPoly::var(Var::X1).scale(&c[1]))
}

pub fn linear_form_y(c: &[Scalar; 3]) -> BiPoly {
    BiPoly::var(Var::Y0)
        .scale(&c[0])
        .add(&BiPoly::var(Var::Y1).scale(&c[1]))
        .add(&BiPoly::var(Var::Y2).scale(&c[2]))
}

/// Coefficient vector of a (0,1) form.
pub fn y_linear_coeffs(l: &BiPoly) -> [Scalar; 3] {
    [0, 1, 2].map(|j| l.coeff(&BiMonomial::var([Var::Y0, Var::Y1, Var::Y2][j])))
}

/// Coefficient vector of a (1,0) form.
pub fn x_linear_coeffs(l: &BiPoly) -> [Scalar; 2] {
    [l.coeff(&BiMonomial::var(Var::X0)), l.coeff(&BiMonomial::var(Var::X1))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(BiMonomial::basis22().len(), 18);
        assert_eq!(BiMonomial::basis(1, 2).len(), 12);
        assert_eq!(BiMonomial::basis(0, 2).len(), 6);
    }

    #[test]
    fn partial_and_division() {
        let f = parse("x0^2*y0^2").unwrap();
        assert_eq!(f.partial(Var::X0), parse_bidegree("2*x0*y0^2").unwrap());
        let g = parse("x0*x1*(y0*y2 + y1^2)").unwrap();
        let x0 = BiPoly::var(Var::X0);
        let q = g.div_exact(&x0).unwrap();
        assert_eq!(q.mul(&x0), g);
        assert!(g.div_exact(&BiPoly::var(Var::Y0)).is_none());
    }
}
