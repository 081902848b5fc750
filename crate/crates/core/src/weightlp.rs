//! Exact search for normalized weights that make every monomial of a support
//! positive (strict) or non-negative (weak).
//!
//! Coordinates are v = (r0, s0, s1) with r1 = -r0 and s2 = -s0 - s1, so the
//! weight of x^α y^β is r0(α0-α1) + s0(β0-β2) + s1(β1-β2). Normalization is the
//! pointed cone r0 ≤ 0, s0 ≤ s1, s0 + 2 s1 ≤ 0; adding the support
//! inequalities keeps it pointed, so it is generated by its extreme rays,
//! each the cross product of two constraint normals.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::bipoly::BiMonomial;
use crate::error::Error;
use crate::oneps::{monomial_weight, Weight};

type V3 = [i64; 3];

const NORMALIZATION: [V3; 3] = [[-1, 0, 0], [0, -1, 1], [0, -1, -2]];

fn dot(a: &V3, b: &V3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &V3, b: &V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn primitive(v: V3) -> V3 {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g == 0 {
        v
    } else {
        v.map(|x| x / g)
    }
}

pub fn monomial_normal(m: &BiMonomial) -> V3 {
    let a = m.alpha.map(|x| x as i64);
    let b = m.beta.map(|x| x as i64);
    [a[0] - a[1], b[0] - b[2], b[1] - b[2]]
}

pub fn weight_from_coords(v: V3) -> Weight {
    Weight::new_unchecked([v[0], -v[0]], [v[1], v[2], -v[1] - v[2]])
}

/// Primitive extreme rays of {v : n·v ≥ 0 for every normalization and support normal}.
pub fn extreme_rays(support: &[BiMonomial]) -> Vec<V3> {
    let mut normals: BTreeSet<V3> = NORMALIZATION.iter().copied().collect();
    for m in support {
        let n = monomial_normal(m);
        if n != [0, 0, 0] {
            normals.insert(primitive(n));
        }
    }
    let normals: Vec<V3> = normals.into_iter().collect();
    let mut rays = BTreeSet::new();
    for i in 0..normals.len() {
        for j in i + 1..normals.len() {
            let c = cross(&normals[i], &normals[j]);
            if c == [0, 0, 0] {
                continue;
            }
            for cand in [c, c.map(|x| -x)] {
                if normals.iter().all(|n| dot(n, &cand) >= 0) {
                    rays.insert(primitive(cand));
                }
            }
        }
    }
    rays.into_iter().collect()
}

/// A normalized nontrivial weight positive (strict) or non-negative (weak)
/// on every monomial of the support; None proves that none exists.
pub fn find_destabilizing_weight(support: &[BiMonomial], strict: bool) -> Result<Option<Weight>, Error> {
    if support.is_empty() {
        return Err(Error::Precondition("empty support".into()));
    }
    if support.iter().any(|m| m.bidegree() != (2, 2)) {
        return Err(Error::Precondition("support monomials must have bidegree (2,2)".into()));
    }
    let rays = extreme_rays(support);
    let normals: Vec<V3> = support.iter().map(monomial_normal).collect();
    let is_strict = |v: &V3| normals.iter().all(|n| dot(n, v) > 0);
    let found = if !strict {
        rays.first().copied()
    } else if let Some(r) = rays.iter().find(|r| is_strict(r)) {
        Some(*r)
    } else {
        let sum = rays.iter().fold([0, 0, 0], |s, r| [s[0] + r[0], s[1] + r[1], s[2] + r[2]]);
        let sum = primitive(sum);
        (sum != [0, 0, 0] && is_strict(&sum)).then_some(sum)
    };
    let w = found.map(weight_from_coords);
    if let Some(w) = &w {
        debug_assert!(w.is_normalized() && !w.is_trivial());
        debug_assert!(support.iter().all(|m| {
            let x = monomial_weight(m, w);
            if strict {
                x > 0
            } else {
                x >= 0
            }
        }));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oneps::m_plus;

    fn mono(a: [u32; 2], b: [u32; 3]) -> BiMonomial {
        BiMonomial::new(a, b)
    }

    #[test]
    fn small_supports() {
        let s = [mono([2, 0], [2, 0, 0])];
        assert_eq!(find_destabilizing_weight(&s, true).unwrap(), None);
        assert_eq!(find_destabilizing_weight(&s, false).unwrap(), None);
        let t = [mono([0, 2], [0, 0, 2])];
        let w = find_destabilizing_weight(&t, true).unwrap().unwrap();
        assert!(monomial_weight(&t[0], &w) > 0);
        let w0 = Weight::new_unchecked([-3, 3], [-2, -2, 4]);
        let mp: Vec<BiMonomial> = m_plus(&w0).into_iter().collect();
        assert!(find_destabilizing_weight(&mp, true).unwrap().is_some());
        assert!(find_destabilizing_weight(&[], true).is_err());
    }
}
