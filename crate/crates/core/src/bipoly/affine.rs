use std::collections::BTreeMap;
use std::fmt;

use super::{BiMonomial, BiPoly};
use crate::scalars::{Field, Scalar};

/// The affine chart x_i = 1, y_j = 1. The remaining coordinates are, in order,
/// the other x variable and the two other y variables by increasing index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chart {
    pub x: usize,
    pub y: usize,
}

impl Chart {
    pub const BASE: Chart = Chart { x: 0, y: 0 };

    pub fn new(x: usize, y: usize) -> Self {
        assert!(x < 2 && y < 3, "chart indices out of range");
        Chart { x, y }
    }

    fn other_y(&self) -> [usize; 2] {
        match self.y {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    }

    pub fn var_names(&self) -> [String; 3] {
        let oy = self.other_y();
        [format!("x{}", 1 - self.x), format!("y{}", oy[0]), format!("y{}", oy[1])]
    }
}

/// Polynomial in three affine variables.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct AffinePoly {
    terms: BTreeMap<[u32; 3], Scalar>,
}

impl AffinePoly {
    pub fn zero() -> Self {
        AffinePoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u32; 3], Scalar)>) -> Self {
        let mut p = AffinePoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int_terms(terms: &[([u32; 3], i64)]) -> Self {
        AffinePoly::from_terms(terms.iter().map(|(e, c)| (*e, Scalar::int(*c))))
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        AffinePoly::from_terms([(e, Scalar::int(1))])
    }

    pub fn constant(c: Scalar) -> Self {
        AffinePoly::from_terms([([0, 0, 0], c)])
    }

    fn add_term(&mut self, e: [u32; 3], c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let s = old.plus(&c);
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree present.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn degree_part(&self, d: u32) -> AffinePoly {
        AffinePoly {
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        AffinePoly::from_terms(self.terms.iter().map(|(e, x)| (*e, x.times(c))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = AffinePoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                p.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1.times(c2));
            }
        }
        p
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = AffinePoly::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = *e;
                e2[i] -= 1;
                p.add_term(e2, c.times(&Scalar::int(e[i] as i64)));
            }
        }
        p
    }

    pub fn eval(&self, v: &[Scalar; 3]) -> Scalar {
        let mut s = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..3 {
                t = t.times(&super::pow_scalar(&v[i], e[i]));
            }
            s = s.plus(&t);
        }
        s
    }

    /// Terms with total degree < k.
    pub fn truncate(&self, k: u32) -> AffinePoly {
        AffinePoly {
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() < k).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Substitute affine linear forms for the three variables.
    pub fn compose_linear(&self, images: &[AffinePoly; 3]) -> AffinePoly {
        let mut out = AffinePoly::zero();
        for (e, c) in &self.terms {
            let mut t = AffinePoly::constant(c.clone());
            for i in 0..3 {
                for _ in 0..e[i] {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Symmetric matrix of second partials of the degree-2 part.
    pub fn hessian_matrix(&self) -> Vec<Vec<Scalar>> {
        let q = self.degree_part(2);
        (0..3).map(|i| (0..3).map(|j| q.partial(i).partial(j).coeff([0, 0, 0])).collect()).collect()
    }

    pub fn to_text_in(&self, names: &[String; 3]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono: Vec<String> = Vec::new();
            for i in 0..3 {
                match e[i] {
                    0 => {}
                    1 => mono.push(names[i].clone()),
                    k => mono.push(format!("{}^{k}", names[i])),
                }
            }
            let coeff = c.to_spec_string();
            let body = if mono.is_empty() {
                coeff
            } else if coeff == "1" {
                mono.join("*")
            } else if c.as_rational().is_some() {
                format!("{coeff}*{}", mono.join("*"))
            } else {
                format!("({coeff})*{}", mono.join("*"))
            };
            parts.push(body);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for AffinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_in(&["u".into(), "v".into(), "w".into()]))
    }
}

impl BiPoly {
    pub fn dehomogenize(&self, chart: Chart) -> AffinePoly {
        let oy = chart.other_y();
        AffinePoly::from_terms(self.terms().map(|(m, c)| {
            ([m.alpha[1 - chart.x], m.beta[oy[0]], m.beta[oy[1]]], c.clone())
        }))
    }
}

impl AffinePoly {
    /// Inverse of dehomogenize for the given bidegree; None if some term has
    /// too large a degree.
    pub fn rehomogenize(&self, chart: Chart, bidegree: (u32, u32)) -> Option<BiPoly> {
        let oy = chart.other_y();
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if e[0] > bidegree.0 || e[1] + e[2] > bidegree.1 {
                return None;
            }
            let mut alpha = [0; 2];
            alpha[1 - chart.x] = e[0];
            alpha[chart.x] = bidegree.0 - e[0];
            let mut beta = [0; 3];
            beta[oy[0]] = e[1];
            beta[oy[1]] = e[2];
            beta[chart.y] = bidegree.1 - e[1] - e[2];
            terms.push((BiMonomial::new(alpha, beta), c.clone()));
        }
        BiPoly::from_terms(bidegree, terms).ok()
    }
}

pub fn degree_part(p: &AffinePoly, d: u32) -> AffinePoly {
    p.degree_part(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse;

    #[test]
    fn chart_round_trip() {
        let f = parse("x0^2*y0^2 + 3*x0*x1*y1*y2 - x1^2*y2^2").unwrap();
        for x in 0..2 {
            for y in 0..3 {
                let c = Chart::new(x, y);
                assert_eq!(f.dehomogenize(c).rehomogenize(c, (2, 2)).unwrap(), f);
            }
        }
        assert_eq!(parse("x0^2*y0^2").unwrap().dehomogenize(Chart::BASE), AffinePoly::constant(Scalar::int(1)));
    }

    #[test]
    fn degree_parts() {
        let p = AffinePoly::from_int_terms(&[([0, 0, 0], 1), ([0, 1, 0], 1), ([0, 1, 1], 1)]);
        assert_eq!(degree_part(&p, 2), AffinePoly::from_int_terms(&[([0, 1, 1], 1)]));
        let sum = (0..=4).fold(AffinePoly::zero(), |s, d| s.add(&p.degree_part(d)));
        assert_eq!(sum, p);
    }
}
