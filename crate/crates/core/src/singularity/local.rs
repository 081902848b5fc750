//! Truncated linear algebra in the local ring K[[u,v,w]] at the origin.

use std::collections::{BTreeMap, HashMap};

use crate::bipoly::AffinePoly;
use crate::error::Error;
use crate::scalars::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalDim {
    Stabilized(usize),
    NotStabilized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasiHomogeneous {
    Yes,
    No,
    Unknown(u32),
}

/// Monomials of total degree < k, with an index map.
fn monomials_below(k: u32) -> (Vec<[u32; 3]>, HashMap<[u32; 3], usize>) {
    let mut list = Vec::new();
    for d in 0..k {
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                list.push([a, b, d - a - b]);
            }
        }
    }
    let index = list.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    (list, index)
}

/// Sparse row echelon accumulator over a field.
struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, Scalar>>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce v against the pivots; returns the remainder.
    fn reduce(&self, mut v: BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        loop {
            let Some((&c, _)) = v.iter().find(|(c, _)| self.pivots.contains_key(c)) else {
                return v;
            };
            let factor = v.remove(&c).unwrap();
            let row = &self.pivots[&c];
            for (j, x) in row {
                if *j == c {
                    continue;
                }
                let e = v.entry(*j).or_insert_with(Scalar::zero);
                *e = e.minus(&x.times(&factor));
                if e.is_zero() {
                    v.remove(j);
                }
            }
        }
    }

    /// Insert v; returns true if it was independent.
    fn insert(&mut self, v: BTreeMap<usize, Scalar>) -> bool {
        let r = self.reduce(v);
        let Some((&c, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inverse().unwrap();
        let row: BTreeMap<usize, Scalar> = r.iter().map(|(j, x)| (*j, x.times(&inv))).collect();
        self.pivots.insert(c, row);
        true
    }
}

fn truncated_vector(p: &AffinePoly, index: &HashMap<[u32; 3], usize>) -> BTreeMap<usize, Scalar> {
    p.terms().filter_map(|(e, c)| index.get(e).map(|&i| (i, c.clone()))).collect()
}

fn shifted(p: &AffinePoly, m: &[u32; 3], k: u32) -> AffinePoly {
    let deg: u32 = m.iter().sum();
    AffinePoly::from_terms(
        p.terms()
            .filter(|(e, _)| e.iter().sum::<u32>() + deg < k)
            .map(|(e, c)| ([e[0] + m[0], e[1] + m[1], e[2] + m[2]], c.clone())),
    )
}

/// The span of (monomial · generator) mod m^k.
fn ideal_mod_power(gens: &[AffinePoly], k: u32) -> (Echelon, HashMap<[u32; 3], usize>, usize) {
    let (list, index) = monomials_below(k);
    let mut ech = Echelon::new();
    for g in gens {
        for m in &list {
            let v = truncated_vector(&shifted(g, m, k), &index);
            if !v.is_empty() {
                ech.insert(v);
            }
        }
    }
    (ech, index, list.len())
}

fn quotient_dim(gens: &[AffinePoly], k: u32) -> usize {
    let (ech, _, n) = ideal_mod_power(gens, k);
    n - ech.rank()
}

fn check_singular(f: &AffinePoly) -> Result<(), Error> {
    if !f.coeff([0, 0, 0]).is_zero() || (0..3).any(|i| !f.partial(i).coeff([0, 0, 0]).is_zero()) {
        return Err(Error::Precondition("origin is not a singular point".into()));
    }
    Ok(())
}

fn stabilization(gens: &[AffinePoly], cutoff: u32) -> Option<(u32, usize)> {
    let mut prev = quotient_dim(gens, 1);
    for k in 2..=cutoff {
        let d = quotient_dim(gens, k);
        if d == prev {
            return Some((k - 1, d));
        }
        prev = d;
    }
    None
}

/// dim K[[u,v,w]]/(f, ∂f) computed modulo m^k for k = 1..=cutoff; it is the
/// true dimension once two consecutive levels agree (then m^k lies in the ideal).
pub fn local_algebra_dim(f: &AffinePoly, cutoff: u32) -> Result<LocalDim, Error> {
    check_singular(f)?;
    let gens = [f.clone(), f.partial(0), f.partial(1), f.partial(2)];
    Ok(match stabilization(&gens, cutoff) {
        Some((_, d)) => LocalDim::Stabilized(d),
        None => LocalDim::NotStabilized,
    })
}

/// Milnor algebra K[[u,v,w]]/(∂f) dimension, same truncation scheme.
pub fn milnor_dim(f: &AffinePoly, cutoff: u32) -> Result<LocalDim, Error> {
    check_singular(f)?;
    let gens = [f.partial(0), f.partial(1), f.partial(2)];
    Ok(match stabilization(&gens, cutoff) {
        Some((_, d)) => LocalDim::Stabilized(d),
        None => LocalDim::NotStabilized,
    })
}

/// Whether f lies in its Jacobian ideal, tested modulo m^k for k ≤ cutoff.
pub fn is_quasi_homogeneous(f: &AffinePoly, cutoff: u32) -> Result<QuasiHomogeneous, Error> {
    check_singular(f)?;
    let jac = [f.partial(0), f.partial(1), f.partial(2)];
    let stable_at = stabilization(&jac, cutoff).map(|(k, _)| k);
    for k in 1..=cutoff {
        let (ech, index, _) = ideal_mod_power(&jac, k);
        let v = truncated_vector(&f.truncate(k), &index);
        if !ech.reduce(v).is_empty() {
            return Ok(QuasiHomogeneous::No);
        }
        if stable_at == Some(k) {
            return Ok(QuasiHomogeneous::Yes);
        }
    }
    Ok(QuasiHomogeneous::Unknown(cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn an(n: u32) -> AffinePoly {
        AffinePoly::from_int_terms(&[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, n + 1], 1)])
    }

    #[test]
    fn an_normal_forms() {
        for n in 1..=5 {
            assert_eq!(local_algebra_dim(&an(n), 10).unwrap(), LocalDim::Stabilized(n as usize));
            assert_eq!(is_quasi_homogeneous(&an(n), 10).unwrap(), QuasiHomogeneous::Yes);
        }
        let line = AffinePoly::from_int_terms(&[([2, 0, 0], 1), ([0, 2, 0], 1)]);
        assert_eq!(local_algebra_dim(&line, 10).unwrap(), LocalDim::NotStabilized);
        assert!(local_algebra_dim(&AffinePoly::from_int_terms(&[([1, 0, 0], 1)]), 10).is_err());
    }

    #[test]
    fn non_quasi_homogeneous() {
        // T(2,5,5): Milnor number 11, Tjurina number 10
        let f = AffinePoly::from_int_terms(&[([2, 0, 0], 1), ([0, 5, 0], 1), ([0, 0, 5], 1), ([0, 2, 2], 1)]);
        let mu = milnor_dim(&f, 12).unwrap();
        let tau = local_algebra_dim(&f, 12).unwrap();
        assert_ne!(mu, tau);
        assert_eq!(is_quasi_homogeneous(&f, 12).unwrap(), QuasiHomogeneous::No);
    }
}
