//! Stability verdicts for (2,2) forms, each backed by a re-checkable certificate.

mod certificate;
mod irreducible;
mod reducible;
mod search;

pub use certificate::{Certificate, MuSign};
pub use irreducible::{check_semistability_conditions, check_stability_conditions};
pub use reducible::classify_reducible;
pub use search::{random_destabilize_search, random_unimodular_frame};

use std::fmt;

use crate::bipoly::{BiPoly, FrameChange};
use crate::error::Error;
use crate::factorizer::bihomogeneous_factor;
use crate::fibration::PhiSigma;
use crate::forms::{cross3, frame_with_rows, is_zero_vec, points_on_line};
use crate::oneps::Weight;
use crate::points::Point;
use crate::scalars::{Field, Scalar};
use crate::singularity::LocalType;
use crate::weightlp::find_destabilizing_weight;

pub const W_PULLBACK_CONE: Weight = Weight::new_unchecked([-4, 4], [-10, 5, 5]);
pub const W_DOUBLE_FIBRE: Weight = Weight::new_unchecked([-3, 3], [-2, -2, 4]);
pub const W_LINE_COMPONENT: Weight = Weight::new_unchecked([-2, 2], [-5, -1, 6]);
pub const W_SINGULAR_SECTION: Weight = Weight::new_unchecked([-1, 1], [-4, 2, 2]);
pub const W_CONSTANT_PHI: Weight = Weight::new_unchecked([0, 0], [-1, 0, 1]);
pub const W_SECTION_POINT: Weight = Weight::new_unchecked([-1, 1], [-2, 0, 2]);
pub const W_DOUBLE_FIBRE_POINT: Weight = Weight::new_unchecked([-1, 1], [-1, 0, 1]);
pub const W_LINEAR_FACTOR: Weight = Weight::new_unchecked([-1, 1], [-3, -1, 4]);
pub const W_VERTICAL_FACTOR: Weight = Weight::new_unchecked([-2, 2], [-1, 0, 1]);

/// The four weights whose M⁺ sets carry every unstable form in a suitable frame.
pub const UNSTABLE_FAMILY: [Weight; 4] = [W_DOUBLE_FIBRE, W_PULLBACK_CONE, W_LINEAR_FACTOR, W_LINE_COMPONENT];
/// The four weights whose M⊕ sets carry every strictly semistable form.
pub const SEMISTABLE_FAMILY: [Weight; 4] = [W_CONSTANT_PHI, W_SECTION_POINT, W_DOUBLE_FIBRE_POINT, W_VERTICAL_FACTOR];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityClass::Stable => "Stable",
            StabilityClass::StrictlySemistable => "StrictlySemistable",
            StabilityClass::Unstable => "Unstable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducibleCase {
    LinearFactorInY,
    DoubleVerticalFactor,
    VerticalTimesConic,
    SingularVerticalSlice,
    SmoothVerticalSlice,
    CommonFibre,
    DistinctFibres,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// The tangent cone at a singular point is pulled back from P².
    PullbackTangentCone,
    /// A double-line fibre whose line lies in the ramification locus.
    RamifiedDoubleFibre,
    /// A line of a line-pair fibre, ramified, equal to the constant φσ of a
    /// contracted section through the vertex.
    RamifiedLineComponent,
    /// A contracted section made of singular points.
    SingularContractedSection,
    ConstantPhiSigma,
    NonA1OnContractedSection,
    NonA1OnDoubleFibre,
    Reducible(ReducibleCase),
}

impl Clause {
    pub fn name(&self) -> String {
        match self {
            Clause::Reducible(c) => format!("Reducible({c:?})"),
            c => format!("{c:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub clause: Clause,
    pub point: Option<Point>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointReport {
    pub point: Point,
    pub local_type: LocalType,
    pub fibre_rank: usize,
    pub on_contracted_section: bool,
    pub pullback_cone: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectionReport {
    pub point: [Scalar; 3],
    pub phi: PhiSigma,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct ConditionReport {
    pub factor_bidegrees: Vec<(u32, u32)>,
    pub points: Vec<PointReport>,
    pub curve_kinds: Vec<String>,
    pub sections: Vec<SectionReport>,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub class: StabilityClass,
    pub certificate: Option<Certificate>,
    pub report: ConditionReport,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Alignment {
    PointOnly,
    /// Send the line to Z(y2).
    TangentLine([Scalar; 3]),
    /// Send the first line to Z(y1) and the second to Z(y2).
    FibreComponents([Scalar; 3], [Scalar; 3]),
}

fn other_point_on_line(line: &[Scalar; 3], p: &[Scalar; 3]) -> [Scalar; 3] {
    let [a, b] = points_on_line(line);
    if is_zero_vec(&cross3(&a, p)) {
        b
    } else {
        a
    }
}

/// A frame sending P to [1,0]×[1,0,0] and the alignment lines to coordinate lines.
pub fn normalize_frame(f: &BiPoly, p: &Point, alignment: &Alignment) -> Result<FrameChange, Error> {
    if !f.eval(&p.x, &p.y).is_zero() {
        return Err(Error::Precondition(format!("point {p} is not on the surface")));
    }
    let inconsistent = || Error::Precondition("alignment is inconsistent with the point".into());
    let on = |l: &[Scalar; 3], q: &[Scalar; 3]| crate::forms::dot3(l, q).is_zero();
    let y_rows = match alignment {
        Alignment::PointOnly => vec![p.y.clone()],
        Alignment::TangentLine(l) => {
            if is_zero_vec(l) || !on(l, &p.y) {
                return Err(inconsistent());
            }
            vec![p.y.clone(), other_point_on_line(l, &p.y)]
        }
        Alignment::FibreComponents(l1, l2) => {
            let v = cross3(l1, l2);
            if is_zero_vec(&v) || !is_zero_vec(&cross3(&v, &p.y)) {
                return Err(inconsistent());
            }
            let r2 = other_point_on_line(l1, &p.y);
            let r1 = other_point_on_line(l2, &p.y);
            let frame = frame_with_rows(vec![p.x.clone()], vec![p.y.clone(), r1.clone()])?;
            let mut g3 = frame.g3.clone();
            g3[2] = r2;
            return FrameChange::new(frame.g2, g3);
        }
    };
    frame_with_rows(vec![p.x.clone()], y_rows)
}

/// Verify a proposed certificate; if the fixed weight fails, search the
/// transformed support for one of the claimed sign.
pub(crate) fn certify(f: &BiPoly, frame: FrameChange, weight: Weight, sign: MuSign) -> Result<Certificate, Error> {
    let cert = Certificate::new(frame, weight, sign);
    if cert.verify(f).is_ok() {
        return Ok(cert);
    }
    let g = cert.transformed(f);
    let support = g.support();
    let strict = sign == MuSign::Positive;
    if let Some(w) = find_destabilizing_weight(&support, strict)? {
        let alt = Certificate::new(cert.frame.clone(), w, sign);
        if alt.verify(f).is_ok() {
            return Ok(alt);
        }
    }
    Err(Error::CertificateFailed(format!("no weight of sign {sign} for the adapted frame")))
}

/// Full verdict for a nonzero rational (2,2) form.
pub fn classify(f: &BiPoly) -> Result<Verdict, Error> {
    classify_with_cutoff(f, crate::singularity::DEFAULT_CUTOFF)
}

pub fn classify_with_cutoff(f: &BiPoly, cutoff: u32) -> Result<Verdict, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.bidegree() != (2, 2) {
        return Err(Error::Precondition("bidegree (2,2) expected".into()));
    }
    if !f.is_rational() {
        return Err(Error::Precondition("classification requires rational coefficients".into()));
    }
    let fz = bihomogeneous_factor(f)?;
    let verdict = if fz.is_irreducible() {
        let report = irreducible::analyse(f, cutoff, true)?;
        let class = if report.violations.iter().any(|v| v.certificate.claimed_mu_sign == MuSign::Positive) {
            StabilityClass::Unstable
        } else if !report.violations.is_empty() {
            StabilityClass::StrictlySemistable
        } else {
            StabilityClass::Stable
        };
        let certificate = report.violations.first().map(|v| v.certificate.clone());
        Verdict { class, certificate, report }
    } else {
        classify_reducible(f, &fz)?
    };
    if let Some(c) = &verdict.certificate {
        c.verify(f)?;
    }
    Ok(verdict)
}
