//! Points of P¹×P² with coordinates in ℚ or a number field.

use std::fmt;

use crate::error::Error;
use crate::scalars::{common_field, Field, FieldCtx, Scalar};

/// Projective coordinates scaled so that the first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub x: [Scalar; 2],
    pub y: [Scalar; 3],
}

pub fn normalize_projective<const N: usize>(v: [Scalar; N]) -> Option<[Scalar; N]> {
    let k = v.iter().position(|c| !c.is_zero())?;
    let inv = v[k].inverse()?;
    Some(v.map(|c| c.times(&inv).simplify()))
}

impl Point {
    pub fn new(x: [Scalar; 2], y: [Scalar; 3]) -> Result<Self, Error> {
        let bad = || Error::Precondition("projective point with all coordinates zero".into());
        Ok(Point { x: normalize_projective(x).ok_or_else(bad)?, y: normalize_projective(y).ok_or_else(bad)? })
    }

    pub fn from_ints(x: [i64; 2], y: [i64; 3]) -> Result<Self, Error> {
        Point::new(x.map(Scalar::int), y.map(Scalar::int))
    }

    /// [1,0]×[1,0,0].
    pub fn base() -> Self {
        Point::from_ints([1, 0], [1, 0, 0]).unwrap()
    }

    pub fn field(&self) -> Result<FieldCtx, Error> {
        common_field(self.x.iter().chain(self.y.iter()))
    }
}

pub fn format_projective(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_spec_string()).collect();
    format!("[{}]", parts.join(" : "))
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", format_projective(&self.x), format_projective(&self.y))
    }
}
