//! Verdicts for reducible forms, by the bidegrees of the geometric factors.

use crate::bipoly::{x_linear_coeffs, y_linear_coeffs, BiPoly, FrameChange};
use crate::error::Error;
use crate::factorizer::{conic_factors, Factorization};
use crate::forms::{
    binary_gcd, binary_roots, conic_matrix, cross3, dot3, frame_with_rows, gradient_y, is_zero_vec, lift_poly,
    lift_vec, matrix_rank3, points_on_line, restrict_to_line,
};
use crate::oneps::Weight;
use crate::points::Point;
use crate::scalars::{Field, Scalar};

use super::{
    certify, other_point_on_line, Certificate, Clause, ConditionReport, MuSign, ReducibleCase, StabilityClass, Verdict,
    Violation, W_DOUBLE_FIBRE, W_LINEAR_FACTOR, W_SECTION_POINT, W_VERTICAL_FACTOR,
};

fn unit(i: usize) -> [Scalar; 3] {
    std::array::from_fn(|j| Scalar::int((i == j) as i64))
}

fn x_root(l: &BiPoly) -> [Scalar; 2] {
    let [c0, c1] = x_linear_coeffs(l);
    [c1.negate(), c0]
}

struct Outcome {
    class: StabilityClass,
    case: ReducibleCase,
    point: Option<Point>,
    certificate: Certificate,
}

/// Verdict for a form with at least two geometric factors.
pub fn classify_reducible(f: &BiPoly, fz: &Factorization) -> Result<Verdict, Error> {
    let factors = fz.factors();
    if factors.len() < 2 {
        return Err(Error::Precondition("form is irreducible".into()));
    }
    let outcome = route(f, &factors)?;
    let report = ConditionReport {
        factor_bidegrees: fz.bidegrees(),
        violations: vec![Violation {
            clause: Clause::Reducible(outcome.case),
            point: outcome.point,
            certificate: outcome.certificate.clone(),
        }],
        ..Default::default()
    };
    Ok(Verdict { class: outcome.class, certificate: Some(outcome.certificate), report })
}

fn route(f: &BiPoly, factors: &[&BiPoly]) -> Result<Outcome, Error> {
    if let Some(l) = factors.iter().find(|g| g.bidegree() == (0, 1)) {
        return linear_y_factor(f, l);
    }
    let xs: Vec<&BiPoly> = factors.iter().copied().filter(|g| g.bidegree() == (1, 0)).collect();
    match xs.len() {
        2 => {
            let conic = factors.iter().find(|g| g.bidegree() == (0, 2)).expect("remaining (0,2) factor");
            if xs[0].proportional(xs[1]) {
                let frame = frame_with_rows(vec![x_root(xs[0])], vec![])?;
                return unstable(f, ReducibleCase::DoubleVerticalFactor, frame, W_DOUBLE_FIBRE);
            }
            let conic = conic.embed(&xs[0].field()?);
            smooth_slice(f, x_root(xs[0]), &conic, ReducibleCase::VerticalTimesConic)
        }
        1 => {
            let lx = xs[0];
            let f2 = f.div_exact(lx).ok_or_else(|| Error::Precondition("vertical factor does not divide".into()))?;
            let p1 = x_root(lx);
            let slice = f2.subst_x(&p1);
            if matrix_rank3(&conic_matrix(&slice)) == 3 {
                return smooth_slice(f, p1, &slice, ReducibleCase::SmoothVerticalSlice);
            }
            let groups = conic_factors(&slice)?;
            let line = groups
                .iter()
                .flat_map(|g| g.factors.iter())
                .find(|g| g.bidegree() == (0, 1))
                .ok_or_else(|| Error::Precondition("slice of the residual factor vanishes".into()))?;
            let ctx = line.field()?;
            let [a, b] = points_on_line(&y_linear_coeffs(line));
            let p1: [Scalar; 2] = std::array::from_fn(|i| p1[i].embed(&ctx));
            let frame = frame_with_rows(vec![p1], vec![a, b])?;
            unstable(f, ReducibleCase::SingularVerticalSlice, frame, W_DOUBLE_FIBRE)
        }
        _ => {
            let pair: Vec<&BiPoly> = factors.iter().copied().filter(|g| g.bidegree() == (1, 1)).collect();
            if pair.len() != 2 {
                return Err(Error::Precondition(format!("unexpected factor pattern {:?}", factors.iter().map(|g| g.bidegree()).collect::<Vec<_>>())));
            }
            two_sections(f, pair[0], pair[1])
        }
    }
}

fn unstable(f: &BiPoly, case: ReducibleCase, frame: FrameChange, w: Weight) -> Result<Outcome, Error> {
    let certificate = certify(f, frame, w, MuSign::Positive)?;
    Ok(Outcome { class: StabilityClass::Unstable, case, point: None, certificate })
}

/// f = l·g with l linear in y: a point of Z(l) where g vanishes over [1,0]
/// goes to the base point, Z(l) to Z(y2).
fn linear_y_factor(f: &BiPoly, l: &BiPoly) -> Result<Outcome, Error> {
    let g = f.div_exact(l).ok_or_else(|| Error::Precondition("linear factor does not divide".into()))?;
    let lc = y_linear_coeffs(l);
    let hc = y_linear_coeffs(&g.subst_x(&[Scalar::int(1), Scalar::int(0)]));
    let cross = cross3(&lc, &hc);
    let q = if is_zero_vec(&cross) { points_on_line(&lc)[0].clone() } else { cross };
    let r = other_point_on_line(&lc, &q);
    let frame = frame_with_rows(vec![], vec![q, r])?;
    unstable(f, ReducibleCase::LinearFactorInY, frame, W_LINEAR_FACTOR)
}

/// A vertical factor through p1 whose residual slice is a smooth conic:
/// p1 to [1,0], a point of the conic to [1,0,0], its tangent to Z(y2).
fn smooth_slice(f: &BiPoly, p1: [Scalar; 2], conic: &BiPoly, case: ReducibleCase) -> Result<Outcome, Error> {
    let h = restrict_to_line(conic, &unit(1), &unit(2));
    let r = binary_roots(&h)?.into_iter().next().ok_or_else(|| Error::Precondition("conic has no point".into()))?;
    let c: [Scalar; 3] = std::array::from_fn(|j| match j {
        0 => Scalar::zero(),
        1 => r.point[0].clone(),
        _ => r.point[1].clone(),
    });
    let lifted = lift_poly(conic, &r.extension);
    let p1 = lift_vec(&p1, &r.extension);
    let tangent = gradient_y(&lifted, &c);
    let frame = frame_with_rows(vec![p1.clone()], vec![c.clone(), other_point_on_line(&tangent, &c)])?;
    let certificate = certify(f, frame, W_VERTICAL_FACTOR, MuSign::Zero)?;
    Ok(Outcome { class: StabilityClass::StrictlySemistable, case, point: Some(Point::new(p1, c)?), certificate })
}

fn coeff_vectors(g: &BiPoly) -> ([Scalar; 3], [Scalar; 3]) {
    let u = y_linear_coeffs(&g.subst_x(&[Scalar::int(1), Scalar::int(0)]));
    let w = y_linear_coeffs(&g.subst_x(&[Scalar::int(0), Scalar::int(1)]));
    (u, w)
}

/// Two (1,1) factors x0·u_i + x1·w_i.
fn two_sections(f: &BiPoly, f1: &BiPoly, f2: &BiPoly) -> Result<Outcome, Error> {
    let (u1, w1) = coeff_vectors(f1);
    let (u2, w2) = coeff_vectors(f2);
    let x0 = BiPoly::var(crate::bipoly::Var::X0);
    let x1 = BiPoly::var(crate::bipoly::Var::X1);
    let pencil = |u: &[Scalar; 3], w: &[Scalar; 3]| -> [BiPoly; 3] { std::array::from_fn(|j| x0.scale(&u[j]).add(&x1.scale(&w[j]))) };
    let (l1, l2) = (pencil(&u1, &w1), pencil(&u2, &w2));
    let cross: Vec<BiPoly> =
        (0..3).map(|i| l1[(i + 1) % 3].mul(&l2[(i + 2) % 3]).sub(&l1[(i + 2) % 3].mul(&l2[(i + 1) % 3]))).collect();
    let g = binary_gcd(&cross);
    let common = if g.is_zero() {
        Some(([Scalar::int(1), Scalar::int(0)], None))
    } else if g.bidegree().0 > 0 {
        let r = binary_roots(&g)?.into_iter().next().unwrap();
        Some((r.point.clone(), r.extension))
    } else {
        None
    };
    if let Some((alpha, ext)) = common {
        let (u1, w1) = (lift_vec(&u1, &ext), lift_vec(&w1, &ext));
        let line: [Scalar; 3] = std::array::from_fn(|j| alpha[0].times(&u1[j]).plus(&alpha[1].times(&w1[j])));
        let [a, b] = points_on_line(&line);
        let frame = frame_with_rows(vec![alpha], vec![a, b])?;
        return unstable(f, ReducibleCase::CommonFibre, frame, W_DOUBLE_FIBRE);
    }
    let attempt = |u1: &[Scalar; 3], w1: &[Scalar; 3], u2: &[Scalar; 3], w2: &[Scalar; 3]| -> Result<(FrameChange, Point), Error> {
        let p1 = cross3(u1, w1);
        let mut q1 = [dot3(w2, &p1), dot3(u2, &p1).negate()];
        if is_zero_vec(&q1) {
            q1 = [Scalar::int(1), Scalar::int(0)];
        }
        let line: [Scalar; 3] = std::array::from_fn(|j| q1[0].times(&u1[j]).plus(&q1[1].times(&w1[j])));
        let frame = frame_with_rows(vec![q1.clone()], vec![p1.clone(), other_point_on_line(&line, &p1)])?;
        Ok((frame, Point::new(q1, p1)?))
    };
    let first = attempt(&u1, &w1, &u2, &w2)?;
    let second = attempt(&u2, &w2, &u1, &w1)?;
    for (frame, point) in [first.clone(), second] {
        let c = Certificate::new(frame, W_SECTION_POINT, MuSign::Zero);
        if c.verify(f).is_ok() {
            return Ok(Outcome { class: StabilityClass::StrictlySemistable, case: ReducibleCase::DistinctFibres, point: Some(point), certificate: c });
        }
    }
    let certificate = certify(f, first.0, W_SECTION_POINT, MuSign::Zero)?;
    Ok(Outcome { class: StabilityClass::StrictlySemistable, case: ReducibleCase::DistinctFibres, point: Some(first.1), certificate })
}
