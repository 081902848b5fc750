//! Local and fibrewise conditions for irreducible forms.

use crate::bipoly::{BiMonomial, BiPoly, FrameChange};
use crate::error::Error;
use crate::factorizer::bihomogeneous_factor;
use crate::fibration::{contracted_sections, fibre_matrix, phi_sigma_constant, ramified_along, ContractedSections, PhiSigma};
use crate::forms::{
    binary_gcd, binary_roots, cross3, frame_with_rows, is_zero_vec, kernel3, lift_vec, matrix_rank3, points_on_line,
    restrict_to_line,
};
use crate::oneps::Weight;
use crate::points::Point;
use crate::scalars::{Field, Scalar};
use crate::singularity::{frame_to_point, singular_locus, CurveComponent, SingularLocus, DEFAULT_CUTOFF};

use super::{
    certify, other_point_on_line, Clause, ConditionReport, MuSign, PointReport, SectionReport, Violation,
    W_CONSTANT_PHI, W_DOUBLE_FIBRE, W_DOUBLE_FIBRE_POINT, W_LINE_COMPONENT, W_PULLBACK_CONE, W_SECTION_POINT,
    W_SINGULAR_SECTION,
};

struct Context<'a> {
    f: &'a BiPoly,
    locus: SingularLocus,
    sections: Vec<([Scalar; 3], PhiSigma)>,
}

impl Context<'_> {
    fn violation(
        &self,
        clause: Clause,
        point: Option<Point>,
        frame: FrameChange,
        weight: Weight,
        sign: MuSign,
    ) -> Result<Violation, Error> {
        Ok(Violation { clause, point, certificate: certify(self.f, frame, weight, sign)? })
    }
}

fn on_contracted_section(f: &BiPoly, q: &[Scalar; 3]) -> bool {
    f.x_coefficients().iter().all(|c| crate::forms::eval_y(c, q).is_zero())
}

fn fibre_rank(f: &BiPoly, p1: &[Scalar; 2]) -> usize {
    matrix_rank3(&fibre_matrix(f).at(p1))
}

fn require_irreducible(f: &BiPoly) -> Result<(), Error> {
    if !bihomogeneous_factor(f)?.is_irreducible() {
        return Err(Error::Precondition("form is reducible".into()));
    }
    Ok(())
}

/// Violations of the semistability criterion for an irreducible form, with
/// one report entry per isolated singular point.
pub fn check_semistability_conditions(f: &BiPoly) -> Result<ConditionReport, Error> {
    require_irreducible(f)?;
    analyse(f, DEFAULT_CUTOFF, false)
}

/// Violations of the stability criterion for an irreducible semistable form.
pub fn check_stability_conditions(f: &BiPoly) -> Result<ConditionReport, Error> {
    require_irreducible(f)?;
    let report = analyse(f, DEFAULT_CUTOFF, true)?;
    if report.violations.iter().any(|v| v.certificate.claimed_mu_sign == MuSign::Positive) {
        return Err(Error::Precondition("form is not semistable".into()));
    }
    Ok(report)
}

pub(crate) fn analyse(f: &BiPoly, cutoff: u32, stability: bool) -> Result<ConditionReport, Error> {
    let locus = singular_locus(f, cutoff)?;
    let sections = match contracted_sections(f)? {
        ContractedSections::Finite(pts) => pts,
        ContractedSections::CurveOfSections(_) => {
            return Err(Error::Precondition("a curve of contracted sections forces a factor in y".into()))
        }
    };
    let sections = sections
        .into_iter()
        .map(|q| phi_sigma_constant(f, &q).map(|phi| (q, phi)))
        .collect::<Result<Vec<_>, _>>()?;
    let ctx = Context { f, locus, sections };
    let mut report = ConditionReport {
        factor_bidegrees: vec![f.bidegree()],
        curve_kinds: ctx.locus.curves.iter().map(|c| c.kind().to_string()).collect(),
        sections: ctx.sections.iter().map(|(q, phi)| SectionReport { point: q.clone(), phi: phi.clone() }).collect(),
        ..Default::default()
    };
    for rec in &ctx.locus.points {
        report.points.push(PointReport {
            point: rec.point.clone(),
            local_type: rec.local_type,
            fibre_rank: fibre_rank(f, &rec.point.x),
            on_contracted_section: on_contracted_section(f, &rec.point.y),
            pullback_cone: pullback_cone(&rec.tangent_cone),
        });
    }
    report.violations = semistability_violations(&ctx, &report.points)?;
    if stability && report.violations.is_empty() {
        report.violations = stability_violations(&ctx, &report.points)?;
    }
    Ok(report)
}

/// No term of the cone involves the base direction x1.
fn pullback_cone(cone: &crate::bipoly::AffinePoly) -> bool {
    cone.terms().all(|(e, _)| e[0] == 0)
}

fn semistability_violations(ctx: &Context, points: &[PointReport]) -> Result<Vec<Violation>, Error> {
    let f = ctx.f;
    let mut out = Vec::new();
    for p in points.iter().filter(|p| p.pullback_cone) {
        let frame = frame_to_point(&p.point)?;
        out.push(ctx.violation(Clause::PullbackTangentCone, Some(p.point.clone()), frame, W_PULLBACK_CONE, MuSign::Positive)?);
    }
    for (q, _) in ctx.sections.iter().filter(|(_, phi)| *phi == PhiSigma::Undefined) {
        let point = Point::new([Scalar::int(1), Scalar::int(0)], q.clone())?;
        let frame = frame_to_point(&point)?;
        out.push(ctx.violation(Clause::PullbackTangentCone, Some(point), frame, W_PULLBACK_CONE, MuSign::Positive)?);
    }
    for (p1, line) in ctx.locus.fibre_lines() {
        let [a, b] = points_on_line(line);
        let frame = frame_with_rows(vec![p1.clone()], vec![a.clone(), b])?;
        let point = Point::new(p1.clone(), a)?;
        out.push(ctx.violation(Clause::RamifiedDoubleFibre, Some(point), frame, W_DOUBLE_FIBRE, MuSign::Positive)?);
    }
    for (p2, phi) in &ctx.sections {
        if let PhiSigma::Constant(l) = phi {
            for (p1, lp2, ll) in ramified_line_components(f, p2, l)? {
                let frame = frame_with_rows(vec![p1.clone()], vec![lp2.clone(), other_point_on_line(&ll, &lp2)])?;
                let point = Point::new(p1, lp2)?;
                out.push(ctx.violation(Clause::RamifiedLineComponent, Some(point), frame, W_LINE_COMPONENT, MuSign::Positive)?);
            }
        }
    }
    for (q, _) in ctx.sections.iter().filter(|(_, phi)| *phi == PhiSigma::Undefined) {
        let frame = frame_with_rows(vec![], vec![q.clone()])?;
        out.push(ctx.violation(Clause::SingularContractedSection, None, frame, W_SINGULAR_SECTION, MuSign::Positive)?);
    }
    Ok(out)
}

/// Fibres over p1 that split into two lines through p2, one of them Z(l),
/// ramified along Z(l). Returned data is lifted to the field of p1.
#[allow(clippy::type_complexity)]
fn ramified_line_components(
    f: &BiPoly,
    p2: &[Scalar; 3],
    l: &[Scalar; 3],
) -> Result<Vec<([Scalar; 2], [Scalar; 3], [Scalar; 3])>, Error> {
    let [a, b] = points_on_line(l);
    let restricted: Vec<BiPoly> = f.x_coefficients().iter().map(|c| restrict_to_line(c, &a, &b)).collect();
    // the fibre over x contains Z(l) iff every (s,t)-coefficient of f(x,·)|_l vanishes
    let x_forms: Vec<BiPoly> = (0..3u32)
        .map(|k| {
            let mono = BiMonomial::new([2 - k, k], [0, 0, 0]);
            BiPoly::from_terms(
                (2, 0),
                (0..3u32).map(|i| (BiMonomial::new([2 - i, i], [0, 0, 0]), restricted[i as usize].coeff(&mono))),
            )
            .expect("bidegree (2,0) terms")
        })
        .collect();
    let g = binary_gcd(&x_forms);
    if g.is_zero() {
        return Err(Error::Precondition("a line lies in every fibre".into()));
    }
    let mut out = Vec::new();
    if g.bidegree().0 == 0 {
        return Ok(out);
    }
    for r in binary_roots(&g)? {
        let p1 = r.point.clone();
        let (lp2, ll) = (lift_vec(p2, &r.extension), lift_vec(l, &r.extension));
        let m = fibre_matrix(f).at(&p1);
        if matrix_rank3(&m) != 2 {
            continue;
        }
        let vertex = kernel3(&m).pop().expect("rank 2 matrix has a kernel");
        if !is_zero_vec(&cross3(&vertex, &lp2)) {
            continue;
        }
        if ramified_along(f, &p1, &ll)? {
            out.push((p1, lp2, ll));
        }
    }
    Ok(out)
}

fn non_a1_points(ctx: &Context, points: &[PointReport]) -> Vec<Point> {
    let mut out: Vec<Point> = points.iter().filter(|p| !p.local_type.is_a1()).map(|p| p.point.clone()).collect();
    for c in &ctx.locus.curves {
        if let CurveComponent::PlaneCurveImage { special_points, .. } = c {
            for p in special_points {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
        }
    }
    out
}

fn stability_violations(ctx: &Context, points: &[PointReport]) -> Result<Vec<Violation>, Error> {
    let f = ctx.f;
    let mut out = Vec::new();
    for (p2, phi) in &ctx.sections {
        if let PhiSigma::Constant(l) = phi {
            let frame = frame_with_rows(vec![], vec![p2.clone(), other_point_on_line(l, p2)])?;
            let point = Point::new([Scalar::int(1), Scalar::int(0)], p2.clone())?;
            out.push(ctx.violation(Clause::ConstantPhiSigma, Some(point), frame, W_CONSTANT_PHI, MuSign::Zero)?);
        }
    }
    let special = non_a1_points(ctx, points);
    for p in special.iter().filter(|p| on_contracted_section(f, &p.y)) {
        let frame = section_point_frame(f, p)?;
        out.push(ctx.violation(Clause::NonA1OnContractedSection, Some(p.clone()), frame, W_SECTION_POINT, MuSign::Zero)?);
    }
    for p in special.iter().filter(|p| fibre_rank(f, &p.x) == 1) {
        let m = fibre_matrix(f).at(&p.x);
        let line = m.iter().find(|r| !is_zero_vec(*r)).unwrap().clone();
        let frame = frame_with_rows(vec![p.x.clone()], vec![p.y.clone(), other_point_on_line(&line, &p.y)])?;
        out.push(ctx.violation(Clause::NonA1OnDoubleFibre, Some(p.clone()), frame, W_DOUBLE_FIBRE_POINT, MuSign::Zero)?);
    }
    Ok(out)
}

/// Move P to the base point, then shear y2 so that the x0x1·y0y1 term vanishes.
fn section_point_frame(f: &BiPoly, p: &Point) -> Result<FrameChange, Error> {
    let f1 = frame_to_point(p)?;
    let g = f1.act(f);
    let b01 = g.coeff(&BiMonomial::new([1, 1], [1, 1, 0]));
    let b02 = g.coeff(&BiMonomial::new([1, 1], [1, 0, 1]));
    let one = || Scalar::int(1);
    let zero = Scalar::zero;
    let id2 = [[one(), zero()], [zero(), one()]];
    let fix = if !b02.is_zero() {
        let k = b01.negate().divide(&b02);
        FrameChange::new(id2, [[one(), zero(), zero()], [zero(), one(), k], [zero(), zero(), one()]])?
    } else {
        FrameChange::permutation([0, 1], [0, 2, 1])
    };
    Ok(fix.compose(&f1))
}
