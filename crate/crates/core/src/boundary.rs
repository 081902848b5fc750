//! Boundary of the compactified moduli: minimal-orbit limits and the strata
//! Γ1 (a point) and Γ2, Γ3, Γ4 (rational curves through Γ1).

use std::fmt;

use crate::bipoly::{parse, BiMonomial, BiPoly, FrameChange};
use crate::classifier::{Certificate, MuSign};
use crate::error::Error;
use crate::points::format_projective;
use crate::scalars::{Field, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stratum {
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryPoint {
    pub stratum: Stratum,
    /// Normalized projective pair; None for Γ1.
    pub coordinate: Option<[Scalar; 2]>,
}

impl BoundaryPoint {
    /// The [1:0] point of each curve is Γ1.
    pub fn equals_gamma1(&self) -> bool {
        match &self.coordinate {
            None => true,
            Some([_, v]) => v.is_zero(),
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coordinate {
            None => write!(f, "{}", self.stratum),
            Some(c) => {
                write!(f, "{} {}", self.stratum, format_projective(c))?;
                if self.equals_gamma1() {
                    write!(f, " = Gamma1")?;
                }
                Ok(())
            }
        }
    }
}

/// dim P(V) − dim G = (3·6 − 1) − (3 + 8).
pub fn moduli_dimension() -> usize {
    let proj_dim = BiMonomial::basis22().len() - 1;
    let group_dim = (2 * 2 - 1) + (3 * 3 - 1);
    proj_dim - group_dim
}

/// The weight-zero limit of a Zero-sign certificate.
pub fn minimal_orbit_limit(f: &BiPoly, cert: &Certificate) -> Result<BiPoly, Error> {
    if cert.claimed_mu_sign != MuSign::Zero {
        return Err(Error::CertificateFailed("a Zero-sign certificate is required".into()));
    }
    cert.limit_poly(f).map(|p| p.simplify())
}

fn m(a: [u32; 2], b: [u32; 3]) -> BiMonomial {
    BiMonomial::new(a, b)
}

fn supported_in(f: &BiPoly, pattern: &[BiMonomial]) -> bool {
    f.terms().all(|(mono, _)| pattern.contains(mono))
}

fn pair(u: Scalar, v: Scalar) -> Option<[Scalar; 2]> {
    crate::points::normalize_projective([u, v])
}

fn match_gamma1(f: &BiPoly) -> Option<BoundaryPoint> {
    let pattern = [m([1, 1], [0, 2, 0]), m([1, 1], [1, 0, 1])];
    (f.len() == 2 && supported_in(f, &pattern)).then_some(BoundaryPoint { stratum: Stratum::Gamma1, coordinate: None })
}

fn match_gamma2(f: &BiPoly) -> Option<BoundaryPoint> {
    let (a12, b11, b02, c01) = (m([2, 0], [0, 1, 1]), m([1, 1], [0, 2, 0]), m([1, 1], [1, 0, 1]), m([0, 2], [1, 1, 0]));
    if !supported_in(f, &[a12, b11, b02, c01]) {
        return None;
    }
    let c = |x| f.coeff(&x);
    if c(b02).is_zero() || (c(b11).is_zero() && (c(a12).is_zero() || c(c01).is_zero())) {
        return None;
    }
    let coordinate = pair(c(b11).times(&c(b02)), c(a12).times(&c(c01)))?;
    Some(BoundaryPoint { stratum: Stratum::Gamma2, coordinate: Some(coordinate) })
}

fn match_gamma3(f: &BiPoly) -> Option<BoundaryPoint> {
    let (a22, b11, b02, c00) = (m([2, 0], [0, 0, 2]), m([1, 1], [0, 2, 0]), m([1, 1], [1, 0, 1]), m([0, 2], [2, 0, 0]));
    if !supported_in(f, &[a22, b11, b02, c00]) {
        return None;
    }
    let c = |x| f.coeff(&x);
    if c(b11).is_zero() || (c(b02).is_zero() && (c(a22).is_zero() || c(c00).is_zero())) {
        return None;
    }
    let coordinate = pair(c(b02).times(&c(b02)), c(a22).times(&c(c00)))?;
    Some(BoundaryPoint { stratum: Stratum::Gamma3, coordinate: Some(coordinate) })
}

/// f = P(x)·y1² + R(x)·y0y2 with the SL(2)-invariants of the pair (P, R).
fn match_gamma4(f: &BiPoly) -> Option<BoundaryPoint> {
    let ys = [[0, 2, 0], [1, 0, 1]];
    let xs = [[2, 0], [1, 1], [0, 2]];
    let pattern: Vec<BiMonomial> = ys.iter().flat_map(|y| xs.iter().map(move |x| m(*x, *y))).collect();
    if !supported_in(f, &pattern) {
        return None;
    }
    let coeffs = |y: [u32; 3]| -> [Scalar; 3] { xs.map(|x| f.coeff(&m(x, y))) };
    let ([a11, b11, c11], [a02, b02, c02]) = (coeffs(ys[0]), coeffs(ys[1]));
    let four = Scalar::int(4);
    let two = Scalar::int(2);
    let joint = two.times(&a11).times(&c02).plus(&two.times(&c11).times(&a02)).minus(&b11.times(&b02));
    let d_p = b11.times(&b11).minus(&four.times(&a11).times(&c11));
    let d_r = b02.times(&b02).minus(&four.times(&a02).times(&c02));
    let j2 = joint.times(&joint);
    let coordinate = pair(j2.clone(), j2.minus(&d_p.times(&d_r)))?;
    Some(BoundaryPoint { stratum: Stratum::Gamma4, coordinate: Some(coordinate) })
}

/// Recognize a minimal-orbit limit, up to the swaps x0 ↔ x1 and y0 ↔ y2.
pub fn stratum_of(limit_poly: &BiPoly) -> Result<BoundaryPoint, Error> {
    if limit_poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let variants: Vec<BiPoly> =
        [(false, false), (true, false), (false, true), (true, true)].iter().map(|&(a, b)| limit_poly.swap_vars(a, b)).collect();
    let matchers: [fn(&BiPoly) -> Option<BoundaryPoint>; 4] = [match_gamma1, match_gamma2, match_gamma3, match_gamma4];
    for matcher in matchers {
        if let Some(p) = variants.iter().find_map(matcher) {
            return Ok(p);
        }
    }
    Err(Error::Precondition("polynomial does not reduce to a boundary stratum".into()))
}

fn scalar_pow(base: &Scalar, e: i64) -> Scalar {
    let b = if e < 0 { base.inverse().expect("nonzero base") } else { base.clone() };
    (0..e.unsigned_abs()).fold(Scalar::int(1), |acc, _| acc.times(&b))
}

/// Representative of a curve stratum at (u, v).
pub fn representative(stratum: Stratum, u: &Scalar, v: &Scalar) -> Result<BiPoly, Error> {
    let one = Scalar::int(1);
    let terms: Vec<(BiMonomial, Scalar)> = match stratum {
        Stratum::Gamma1 => return parse("x0*x1*(y0*y2 + y1^2)"),
        Stratum::Gamma2 => vec![
            (m([2, 0], [0, 1, 1]), one.clone()),
            (m([1, 1], [0, 2, 0]), u.clone()),
            (m([1, 1], [1, 0, 1]), one),
            (m([0, 2], [1, 1, 0]), v.clone()),
        ],
        Stratum::Gamma3 => vec![
            (m([2, 0], [0, 0, 2]), one.clone()),
            (m([1, 1], [0, 2, 0]), one),
            (m([1, 1], [1, 0, 1]), u.clone()),
            (m([0, 2], [2, 0, 0]), v.clone()),
        ],
        Stratum::Gamma4 => vec![
            (m([2, 0], [1, 0, 1]), one.clone()),
            (m([1, 1], [0, 2, 0]), one),
            (m([1, 1], [1, 0, 1]), u.clone()),
            (m([0, 2], [1, 0, 1]), v.clone()),
        ],
    };
    BiPoly::from_terms((2, 2), terms)
}

/// The parameter action of the scaling, and the diagonal frame (exponents in
/// twelfths of log r) that undoes it.
fn scaling_data(stratum: Stratum) -> Option<([i64; 2], [i64; 2], [i64; 3])> {
    match stratum {
        Stratum::Gamma1 => None,
        Stratum::Gamma2 => Some(([1, 1], [3, -3], [2, -4, 2])),
        Stratum::Gamma3 => Some(([1, 2], [0, 0], [-8, 4, 4])),
        Stratum::Gamma4 => Some(([1, 2], [6, -6], [-2, 4, -2])),
    }
}

/// Whether the explicit diagonal frame, with r = ρ¹², carries the
/// representative at the scaled parameters to a multiple of the one at (u, v).
pub fn scaling_equivalence(stratum: Stratum, u: &Scalar, v: &Scalar, rho: &Rational) -> Result<bool, Error> {
    let rho = Scalar::Rat(rho.clone());
    if rho.is_zero() {
        return Err(Error::Precondition("rho must be nonzero".into()));
    }
    let Some((param, ex, ey)) = scaling_data(stratum) else {
        return Ok(true);
    };
    let r = scalar_pow(&rho, 12);
    let (su, sv) = (u.times(&scalar_pow(&r, param[0])), v.times(&scalar_pow(&r, param[1])));
    let scaled = representative(stratum, &su, &sv)?;
    let frame = FrameChange::diagonal(ex.map(|e| scalar_pow(&rho, e)), ey.map(|e| scalar_pow(&rho, e)))?;
    Ok(frame.act(&scaled).proportional(&representative(stratum, u, v)?))
}

/// The Γ2 case of [`scaling_equivalence`].
pub fn gamma2_scaling_equivalence(u: &Scalar, v: &Scalar, rho: &Rational) -> Result<bool, Error> {
    scaling_equivalence(Stratum::Gamma2, u, v, rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strata_of_representatives() {
        let one = Scalar::int(1);
        let zero = Scalar::zero();
        assert_eq!(stratum_of(&representative(Stratum::Gamma1, &one, &one).unwrap()).unwrap().stratum, Stratum::Gamma1);
        let g2 = stratum_of(&representative(Stratum::Gamma2, &one, &one).unwrap()).unwrap();
        assert_eq!(g2.coordinate, Some([one.clone(), one.clone()]));
        for s in [Stratum::Gamma2, Stratum::Gamma3, Stratum::Gamma4] {
            let p = stratum_of(&representative(s, &one, &zero).unwrap()).unwrap();
            assert_eq!(p.stratum, s);
            assert!(p.equals_gamma1());
        }
    }

    #[test]
    fn scaling_frames() {
        for s in [Stratum::Gamma2, Stratum::Gamma3, Stratum::Gamma4] {
            for rho in [2, 3] {
                let rho = Rational::from_integer(rho.into());
                assert!(scaling_equivalence(s, &Scalar::int(1), &Scalar::int(1), &rho).unwrap());
                assert!(scaling_equivalence(s, &Scalar::int(0), &Scalar::int(1), &rho).unwrap());
            }
        }
        assert_eq!(moduli_dimension(), 6);
    }
}
