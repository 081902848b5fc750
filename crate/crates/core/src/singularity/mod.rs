//! Singular points of S = Z(f) and their local type.

mod local;
mod locus;

pub use local::{is_quasi_homogeneous, local_algebra_dim, milnor_dim, LocalDim, QuasiHomogeneous};
pub use locus::{singular_locus, CurveComponent, SingularLocus};

use std::fmt;

use crate::bipoly::{AffinePoly, BiPoly, Chart, FrameChange, Var};
use crate::error::Error;
use crate::forms::frame_with_rows;
use crate::points::Point;
use crate::scalars::{determinant, Field, Scalar};

pub const DEFAULT_CUTOFF: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalType {
    A1,
    A2,
    A3,
    An(usize),
    NonIsolatedSuspected(u32),
    OtherIsolated,
}

impl LocalType {
    pub fn from_an(n: usize) -> LocalType {
        match n {
            1 => LocalType::A1,
            2 => LocalType::A2,
            3 => LocalType::A3,
            _ => LocalType::An(n),
        }
    }

    pub fn is_a1(&self) -> bool {
        *self == LocalType::A1
    }
}

impl fmt::Display for LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalType::A1 => write!(f, "A1"),
            LocalType::A2 => write!(f, "A2"),
            LocalType::A3 => write!(f, "A3"),
            LocalType::An(n) => write!(f, "A{n}"),
            LocalType::NonIsolatedSuspected(c) => write!(f, "NonIsolatedSuspected({c})"),
            LocalType::OtherIsolated => write!(f, "OtherIsolated"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularPointRecord {
    pub point: Point,
    pub local_type: LocalType,
    /// Degree-2 part of the local equation at the point, in the chart
    /// variables (x1, y1, y2) after moving the point to [1,0]×[1,0,0].
    pub tangent_cone: AffinePoly,
    pub hessian_det: Scalar,
}

/// A frame sending [1,0]×[1,0,0] to P, completed with unit vectors.
pub fn frame_to_point(p: &Point) -> Result<FrameChange, Error> {
    frame_with_rows(vec![p.x.clone()], vec![p.y.clone()])
}

pub fn is_on_surface(f: &BiPoly, p: &Point) -> bool {
    f.eval(&p.x, &p.y).is_zero()
}

pub fn is_singular_at(f: &BiPoly, p: &Point) -> Result<bool, Error> {
    if !is_on_surface(f, p) {
        return Err(Error::Precondition(format!("point {p} is not on the surface")));
    }
    Ok(Var::ALL.iter().all(|&v| f.partial(v).eval(&p.x, &p.y).is_zero()))
}

/// Local equation of f at P in the chart (x1, y1, y2) centred at P.
pub fn local_equation(f: &BiPoly, p: &Point) -> Result<AffinePoly, Error> {
    let frame = frame_to_point(p)?;
    Ok(frame.act(f).dehomogenize(Chart::BASE))
}

pub fn tangent_cone(f: &BiPoly, p: &Point) -> Result<AffinePoly, Error> {
    if !is_singular_at(f, p)? {
        return Err(Error::Precondition(format!("point {p} is not singular")));
    }
    Ok(local_equation(f, p)?.degree_part(2))
}

pub fn hessian_det(cone: &AffinePoly) -> Scalar {
    determinant(&cone.hessian_matrix())
}

pub fn cone_rank(cone: &AffinePoly) -> usize {
    crate::scalars::rank(&cone.hessian_matrix())
}

/// Local type of an affine germ singular at the origin.
pub fn classify_germ(g: &AffinePoly, cutoff: u32) -> Result<LocalType, Error> {
    let cone = g.degree_part(2);
    if !hessian_det(&cone).is_zero() {
        return Ok(LocalType::A1);
    }
    Ok(match local_algebra_dim(g, cutoff)? {
        LocalDim::NotStabilized => LocalType::NonIsolatedSuspected(cutoff),
        LocalDim::Stabilized(n) if cone_rank(&cone) == 2 => LocalType::from_an(n),
        LocalDim::Stabilized(_) => LocalType::OtherIsolated,
    })
}

pub fn classify_singularity(f: &BiPoly, p: &Point, cutoff: u32) -> Result<LocalType, Error> {
    if !is_singular_at(f, p)? {
        return Err(Error::Precondition(format!("point {p} is not singular")));
    }
    classify_germ(&local_equation(f, p)?, cutoff)
}

pub fn point_record(f: &BiPoly, p: &Point, cutoff: u32) -> Result<SingularPointRecord, Error> {
    let g = local_equation(f, p)?;
    let cone = g.degree_part(2);
    let local_type = classify_germ(&g, cutoff)?;
    Ok(SingularPointRecord { point: p.clone(), local_type, hessian_det: hessian_det(&cone), tangent_cone: cone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse;

    #[test]
    fn hessian_examples() {
        let c = AffinePoly::from_int_terms(&[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], 1)]);
        assert_eq!(hessian_det(&c), Scalar::int(8));
        let d = AffinePoly::from_int_terms(&[([2, 0, 0], 1), ([0, 2, 0], 1)]);
        assert_eq!(hessian_det(&d), Scalar::int(0));
    }

    #[test]
    fn singular_points() {
        let f = parse("x0^2*y0^2").unwrap();
        assert!(is_singular_at(&f, &Point::from_ints([0, 1], [0, 1, 0]).unwrap()).unwrap());
        assert!(is_singular_at(&f, &Point::from_ints([1, 0], [1, 0, 0]).unwrap()).is_err());
    }
}
