use std::fmt;

use crate::bipoly::{BiPoly, FrameChange};
use crate::error::Error;
use crate::oneps::{limit, mu, Limit, Weight};
use crate::scalars::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MuSign {
    Positive,
    Zero,
}

impl fmt::Display for MuSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MuSign::Positive => "Positive",
            MuSign::Zero => "Zero",
        })
    }
}

/// A frame and a normalized weight such that μ(act(frame, f), weight) has
/// the claimed sign.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub frame: FrameChange,
    pub weight: Weight,
    pub claimed_mu_sign: MuSign,
}

impl Certificate {
    pub fn new(frame: FrameChange, weight: Weight, claimed_mu_sign: MuSign) -> Self {
        Certificate { frame, weight, claimed_mu_sign }
    }

    /// The transformed polynomial act(frame, f).
    pub fn transformed(&self, f: &BiPoly) -> BiPoly {
        self.frame.act(f).simplify()
    }

    /// Recompute μ from scratch; Ok(μ) when the claim holds.
    pub fn verify(&self, f: &BiPoly) -> Result<i64, Error> {
        let fail = |msg: String| Err(Error::CertificateFailed(msg));
        if let Err(e) = self.weight.validate() {
            return fail(e.to_string());
        }
        if self.frame.det2().is_zero() || self.frame.det3().is_zero() {
            return fail("singular frame".into());
        }
        let g = self.transformed(f);
        let m = mu(&g, &self.weight)?;
        match self.claimed_mu_sign {
            MuSign::Positive if m > 0 => Ok(m),
            MuSign::Zero if m == 0 => match limit(&g, &self.weight)? {
                Limit::Poly(p) if !p.is_zero() => Ok(m),
                _ => fail("limit is zero".into()),
            },
            s => fail(format!("claimed {s} but mu = {m}")),
        }
    }

    /// The limit polynomial of a Zero-sign certificate.
    pub fn limit_poly(&self, f: &BiPoly) -> Result<BiPoly, Error> {
        self.verify(f)?;
        match limit(&self.transformed(f), &self.weight)? {
            Limit::Poly(p) => Ok(p),
            _ => Err(Error::CertificateFailed("mu is not zero".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse;

    #[test]
    fn verify_and_reject() {
        let f = parse("x1^2*y2^2").unwrap();
        let w = Weight::new_unchecked([-1, 1], [-1, 0, 1]);
        let c = Certificate::new(FrameChange::identity(), w, MuSign::Positive);
        assert_eq!(c.verify(&f).unwrap(), 4);
        let bad = Certificate { claimed_mu_sign: MuSign::Zero, ..c.clone() };
        assert!(bad.verify(&f).is_err());
        let unnormalized = Certificate { weight: Weight::new_unchecked([1, -1], [-1, 0, 1]), ..c };
        assert!(unnormalized.verify(&f).is_err());
    }
}
