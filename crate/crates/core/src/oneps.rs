//! One-parameter subgroups λ(t) = diag(t^r0, t^r1) × diag(t^s0, t^s1, t^s2),
//! the Hilbert–Mumford function μ (minimum weight over the support) and limits.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::bipoly::{BiMonomial, BiPoly};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub r: [i64; 2],
    pub s: [i64; 3],
}

impl Weight {
    /// Errors unless both tuples sum to zero.
    pub fn new(r: [i64; 2], s: [i64; 3]) -> Result<Self, Error> {
        if r.iter().sum::<i64>() != 0 || s.iter().sum::<i64>() != 0 {
            return Err(Error::Precondition(format!("weight {r:?},{s:?} is not trace-free")));
        }
        Ok(Weight { r, s })
    }

    pub const fn new_unchecked(r: [i64; 2], s: [i64; 3]) -> Self {
        Weight { r, s }
    }

    pub fn is_trivial(&self) -> bool {
        self.r == [0, 0] && self.s == [0, 0, 0]
    }

    pub fn is_normalized(&self) -> bool {
        self.r[0] <= self.r[1] && self.s[0] <= self.s[1] && self.s[1] <= self.s[2]
    }

    /// Normalized, nontrivial, trace-free, and r0 + s0 < 0.
    pub fn validate(&self) -> Result<(), Error> {
        Weight::new(self.r, self.s)?;
        if !self.is_normalized() {
            return Err(Error::Precondition(format!("weight {self} is not normalized")));
        }
        if self.is_trivial() {
            return Err(Error::Precondition("trivial weight".into()));
        }
        debug_assert!(self.r[0] + self.s[0] < 0);
        Ok(())
    }

    /// Subtract the means and clear the resulting denominators by one common
    /// factor so both tuples stay integral.
    pub fn recenter(raw_r: [i64; 2], raw_s: [i64; 3]) -> Weight {
        let sr: i64 = raw_r.iter().sum();
        let ss: i64 = raw_s.iter().sum();
        // entries of 2r - sr and 3s - ss are integral multiples of the centered weight
        let kr = if sr % 2 == 0 { 1 } else { 2 };
        let ks = if ss % 3 == 0 { 1 } else { 3 };
        let k = kr.lcm(&ks);
        let r = raw_r.map(|x| k * x - k * sr / 2);
        let s = raw_s.map(|x| k * x - k * ss / 3);
        Weight { r, s }
    }

    pub fn parse(text: &str) -> Result<Weight, Error> {
        let bad = || Error::Parse(format!("weight must look like \"r0,r1;s0,s1,s2\", got {text:?}"));
        let (a, b) = text.split_once(';').ok_or_else(bad)?;
        let nums = |s: &str| -> Result<Vec<i64>, Error> {
            s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| bad())).collect()
        };
        let r = nums(a)?;
        let s = nums(b)?;
        if r.len() != 2 || s.len() != 3 {
            return Err(bad());
        }
        Weight::new([r[0], r[1]], [s[0], s[1], s[2]])
    }

    /// The weight w' with mu(act(P, f), w) = mu(f, w') for the permutation
    /// frame x_i ↦ x_{px[i]}, y_j ↦ y_{py[j]}.
    pub fn pullback_permutation(&self, px: [usize; 2], py: [usize; 3]) -> Weight {
        Weight { r: [self.r[px[0]], self.r[px[1]]], s: [self.s[py[0]], self.s[py[1]], self.s[py[2]]] }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{},{}))", self.r[0], self.r[1], self.s[0], self.s[1], self.s[2])
    }
}

pub fn monomial_weight(m: &BiMonomial, w: &Weight) -> i64 {
    (0..2).map(|i| w.r[i] * m.alpha[i] as i64).sum::<i64>() + (0..3).map(|j| w.s[j] * m.beta[j] as i64).sum::<i64>()
}

pub fn mu(f: &BiPoly, w: &Weight) -> Result<i64, Error> {
    f.terms().map(|(m, _)| monomial_weight(m, w)).min().ok_or(Error::ZeroPolynomial)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Limit {
    DoesNotExist,
    Zero,
    Poly(BiPoly),
}

/// lim_{t→0} λ(t)·f, classified by the sign of μ.
pub fn limit(f: &BiPoly, w: &Weight) -> Result<Limit, Error> {
    let m = mu(f, w)?;
    Ok(match m.cmp(&0) {
        std::cmp::Ordering::Less => Limit::DoesNotExist,
        std::cmp::Ordering::Greater => Limit::Zero,
        std::cmp::Ordering::Equal => Limit::Poly(weight_zero_part(f, w)),
    })
}

/// The terms of f of weight exactly 0.
pub fn weight_zero_part(f: &BiPoly, w: &Weight) -> BiPoly {
    BiPoly::from_terms(
        f.bidegree(),
        f.terms().filter(|(m, _)| monomial_weight(m, w) == 0).map(|(m, c)| (*m, c.clone())),
    )
    .unwrap()
}

/// Monomials of bidegree (2,2) with weight > 0.
pub fn m_plus(w: &Weight) -> BTreeSet<BiMonomial> {
    BiMonomial::basis22().into_iter().filter(|m| monomial_weight(m, w) > 0).collect()
}

/// Monomials of bidegree (2,2) with weight ≥ 0.
pub fn m_oplus(w: &Weight) -> BTreeSet<BiMonomial> {
    BiMonomial::basis22().into_iter().filter(|m| monomial_weight(m, w) >= 0).collect()
}

/// The weight-0 slice of M⊕.
pub fn m_zero(w: &Weight) -> BTreeSet<BiMonomial> {
    BiMonomial::basis22().into_iter().filter(|m| monomial_weight(m, w) == 0).collect()
}
