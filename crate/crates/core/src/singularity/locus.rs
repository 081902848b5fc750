//! The singular locus of S = Z(f), assembled fibre by fibre over P¹.

use crate::bipoly::{BiPoly, Var};
use crate::error::Error;
use crate::fibration::{discriminant, fibre_matrix, transverse_derivative, ConicPencil};
use crate::forms::{
    binary_gcd, binary_roots, cross3, eval_x, is_zero_vec, kernel3, lift_poly, lift_vec, matrix_rank3,
    points_on_line, restrict_to_line, subst_y_forms, BinaryRoot,
};
use crate::points::Point;
use crate::scalars::{Field, Scalar};

use super::{point_record, SingularPointRecord};

#[derive(Clone, Debug, PartialEq)]
pub enum CurveComponent {
    /// P¹ × {q}.
    HorizontalSection([Scalar; 3]),
    /// {p1} × Z(line).
    FibreLine { p1: [Scalar; 2], line: [Scalar; 3] },
    /// {p1} × Z(conic), inside a fibre that is the whole plane.
    FibreConic { p1: [Scalar; 2], conic: BiPoly },
    /// The image of x ↦ (x, v(x)) for binary forms v of positive degree.
    PlaneCurveImage { v: [BiPoly; 3], special_points: Vec<Point> },
    /// A non-reduced component: every point of it is singular.
    SurfaceComponent(BiPoly),
}

impl CurveComponent {
    pub fn kind(&self) -> &'static str {
        match self {
            CurveComponent::HorizontalSection(_) => "HorizontalSection",
            CurveComponent::FibreLine { .. } => "FibreLine",
            CurveComponent::FibreConic { .. } => "FibreConic",
            CurveComponent::PlaneCurveImage { .. } => "PlaneCurveImage",
            CurveComponent::SurfaceComponent(_) => "SurfaceComponent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SingularLocus {
    /// One record per Galois orbit of isolated singular points.
    pub points: Vec<SingularPointRecord>,
    pub curves: Vec<CurveComponent>,
}

impl SingularLocus {
    pub fn is_finite(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn is_smooth(&self) -> bool {
        self.points.is_empty() && self.curves.is_empty()
    }

    pub fn fibre_lines(&self) -> impl Iterator<Item = (&[Scalar; 2], &[Scalar; 3])> {
        self.curves.iter().filter_map(|c| match c {
            CurveComponent::FibreLine { p1, line } => Some((p1, line)),
            _ => None,
        })
    }
}

fn adjugate(p: &ConicPencil) -> [[BiPoly; 3]; 3] {
    let m = &p.m;
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // cofactor of m[j][i]
            let r: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let c: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let d = m[r[0]][c[0]].mul(&m[r[1]][c[1]]).sub(&m[r[0]][c[1]].mul(&m[r[1]][c[0]]));
            if (i + j) % 2 == 1 {
                d.neg()
            } else {
                d
            }
        })
    })
}

fn lift_root_x(root: &BinaryRoot) -> [Scalar; 2] {
    root.point.clone()
}

/// Singular points and curves inside the fibre over alpha.
fn fibre_analysis(f: &BiPoly, alpha: &[Scalar; 2], points: &mut Vec<Point>, curves: &mut Vec<CurveComponent>) -> Result<(), Error> {
    let pencil = fibre_matrix(f);
    let m = pencil.at(alpha);
    let g = transverse_derivative(f, alpha);
    match matrix_rank3(&m) {
        3 => {}
        2 => {
            let v = kernel3(&m).pop().expect("rank 2 matrix has a kernel");
            if g.subst_y(&v).coeff(&crate::bipoly::BiMonomial::one()).is_zero() {
                points.push(Point::new(alpha.clone(), v)?);
            }
        }
        1 => {
            let row = m.iter().find(|r| !is_zero_vec(*r)).unwrap().clone();
            let [a, b] = points_on_line(&row);
            let h = restrict_to_line(&g, &a, &b);
            if h.is_zero() {
                let line = crate::points::normalize_projective(row).unwrap();
                curves.push(CurveComponent::FibreLine { p1: alpha.clone(), line });
            } else {
                for r in binary_roots(&h)? {
                    let (s, t) = (&r.point[0], &r.point[1]);
                    let (a, b) = (lift_vec(&a, &r.extension), lift_vec(&b, &r.extension));
                    let y: [Scalar; 3] = std::array::from_fn(|j| s.times(&a[j]).plus(&t.times(&b[j])));
                    points.push(Point::new(lift_vec(alpha, &r.extension), y)?);
                }
            }
        }
        _ => {
            if g.is_zero() {
                curves.push(CurveComponent::SurfaceComponent(f.clone()));
            } else {
                curves.push(CurveComponent::FibreConic { p1: alpha.clone(), conic: g.monic() });
            }
        }
    }
    Ok(())
}

fn eval_forms(v: &[BiPoly; 3], x: &[Scalar; 2]) -> [Scalar; 3] {
    std::array::from_fn(|j| if v[j].is_zero() { Scalar::zero() } else { eval_x(&v[j], x) })
}

fn lies_on_rational_curve(p: &Point, c: &CurveComponent) -> bool {
    match c {
        CurveComponent::HorizontalSection(q) => is_zero_vec(&cross3(q, &p.y)),
        CurveComponent::PlaneCurveImage { v, .. } => is_zero_vec(&cross3(&eval_forms(v, &p.x), &p.y)),
        _ => false,
    }
}

/// Points (x, v(x)) at the roots of a binary form.
fn points_on_section(form: &BiPoly, v: &[BiPoly; 3]) -> Result<Vec<Point>, Error> {
    if form.is_zero() || form.bidegree().0 == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for r in binary_roots(form)? {
        let lv: [BiPoly; 3] = std::array::from_fn(|j| lift_poly(&v[j], &r.extension));
        let x = lift_root_x(&r);
        out.push(Point::new(x.clone(), eval_forms(&lv, &x))?);
    }
    Ok(out)
}

/// Singular locus of Z(f) for a nonzero rational (2,2) form f. Isolated
/// points are typed with the given cutoff for the local algebra.
pub fn singular_locus(f: &BiPoly, cutoff: u32) -> Result<SingularLocus, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_rational() {
        return Err(Error::Precondition("singular locus requires rational coefficients".into()));
    }
    let pencil = fibre_matrix(f);
    let delta = discriminant(&pencil);
    let mut points = Vec::new();
    let mut curves = Vec::new();
    if !delta.is_zero() {
        for r in binary_roots(&delta)? {
            fibre_analysis(f, &r.point, &mut points, &mut curves)?;
        }
    } else {
        let adj = adjugate(&pencil);
        let entries: Vec<BiPoly> = adj.iter().flatten().cloned().collect();
        if entries.iter().all(BiPoly::is_zero) {
            curves.push(CurveComponent::SurfaceComponent(f.clone()));
            return finish(f, points, curves, cutoff);
        }
        let col = (0..3).find(|&j| (0..3).any(|i| !adj[i][j].is_zero())).unwrap();
        let raw: [BiPoly; 3] = std::array::from_fn(|i| adj[i][col].clone());
        let content = binary_gcd(&raw);
        let v: [BiPoly; 3] = std::array::from_fn(|i| raw[i].div_exact(&content).expect("gcd divides"));
        let big_g = binary_gcd(&entries);
        let h0 = subst_y_forms(&f.partial(Var::X0), &v);
        let h1 = subst_y_forms(&f.partial(Var::X1), &v);
        let h = binary_gcd(&[h0, h1]);
        let mut rational_curve = None;
        if h.is_zero() {
            let e = v.iter().map(|p| p.bidegree().0).max().unwrap();
            if e == 0 {
                let q = eval_forms(&v, &[Scalar::int(1), Scalar::int(0)]);
                rational_curve = Some(CurveComponent::HorizontalSection(crate::points::normalize_projective(q).unwrap()));
            } else {
                let abc: Vec<BiPoly> = f.x_coefficients().iter().map(|q| subst_y_forms(q, &v)).collect();
                let mut special = points_on_section(&binary_gcd(&abc), &v)?;
                for p in points_on_section(&big_g, &v)? {
                    if !special.contains(&p) {
                        special.push(p);
                    }
                }
                rational_curve = Some(CurveComponent::PlaneCurveImage { v: v.clone(), special_points: special });
            }
        } else if h.bidegree().0 > 0 {
            for r in binary_roots(&h)? {
                let lg = lift_poly(&big_g, &r.extension);
                if !big_g.is_zero() && big_g.bidegree().0 > 0 && eval_x(&lg, &r.point).is_zero() {
                    continue;
                }
                let lv: [BiPoly; 3] = std::array::from_fn(|j| lift_poly(&v[j], &r.extension));
                points.push(Point::new(r.point.clone(), eval_forms(&lv, &r.point))?);
            }
        }
        if big_g.bidegree().0 > 0 {
            let mut fibre_points = Vec::new();
            for r in binary_roots(&big_g)? {
                fibre_analysis(f, &r.point, &mut fibre_points, &mut curves)?;
            }
            for p in fibre_points {
                let on_curve = rational_curve.as_ref().is_some_and(|c| lies_on_rational_curve(&p, c));
                if !on_curve {
                    points.push(p);
                }
            }
        }
        if let Some(c) = rational_curve {
            curves.insert(0, c);
        }
    }
    finish(f, points, curves, cutoff)
}

fn finish(f: &BiPoly, points: Vec<Point>, mut curves: Vec<CurveComponent>, cutoff: u32) -> Result<SingularLocus, Error> {
    if curves.iter().any(|c| matches!(c, CurveComponent::SurfaceComponent(_))) {
        curves.retain(|c| matches!(c, CurveComponent::SurfaceComponent(_)));
        curves.truncate(1);
    }
    let points = points.iter().map(|p| point_record(f, p, cutoff)).collect::<Result<Vec<_>, _>>()?;
    Ok(SingularLocus { points, curves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse;
    use crate::singularity::LocalType;

    #[test]
    fn smooth_diagonal() {
        let f = parse("x0^2*y0^2 + x0*x1*y1^2 + x1^2*y2^2 + x0^2*y1^2 + x1^2*y0^2").unwrap();
        let s = singular_locus(&f, 10).unwrap();
        assert!(s.curves.is_empty());
        for p in &s.points {
            assert!(crate::singularity::is_singular_at(&f, &p.point).unwrap());
        }
    }

    #[test]
    fn single_a1_node() {
        // local equation x1*y1 + y2^2 + ... at the base point
        let f = parse("x0*x1*y0*y1 + x0^2*y2^2 + x1^2*y0^2 + x1^2*y1^2 + x0^2*y1^2").unwrap();
        let s = singular_locus(&f, 10).unwrap();
        assert!(s.curves.is_empty());
        let base = s.points.iter().find(|r| r.point == Point::base()).expect("base point is singular");
        assert_eq!(base.local_type, LocalType::A1);
    }

    #[test]
    fn double_surface_and_fibre_line() {
        let f = parse("x0^2*y0^2").unwrap();
        let s = singular_locus(&f, 10).unwrap();
        assert!(matches!(s.curves.as_slice(), [CurveComponent::SurfaceComponent(_)]));
        let g = parse("x0^2*y1^2 + x0*x1*y0*y2 + x1^2*y0^2").unwrap();
        let t = singular_locus(&g, 10).unwrap();
        for (p1, line) in t.fibre_lines() {
            let [a, b] = points_on_line(line);
            assert!(restrict_to_line(&g.subst_x(p1), &a, &b).is_zero());
        }
    }
}
