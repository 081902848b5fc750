use std::fmt;
use std::sync::Arc;

use super::factor::uv_factorize_with_cap;
use super::poly::UniPoly;
use super::{Field, Poly, Rational, MAX_FIELD_DEGREE};
use crate::error::Error;

/// ℚ[t]/(m) with m monic irreducible of degree ≥ 2.
#[derive(Clone, PartialEq, Debug)]
pub struct NumberField {
    modulus: UniPoly,
}

impl NumberField {
    pub fn new(modulus: &UniPoly) -> Result<Arc<Self>, Error> {
        let m = modulus.monic();
        let d = m.deg0();
        if d < 2 || d > MAX_FIELD_DEGREE {
            return Err(Error::InvalidModulus(format!("degree {d} outside 2..={MAX_FIELD_DEGREE}")));
        }
        let f = uv_factorize_with_cap(&m, MAX_FIELD_DEGREE)?;
        if f.len() != 1 || f[0].1 != 1 {
            return Err(Error::InvalidModulus(format!("{m} is reducible")));
        }
        Ok(Arc::new(NumberField { modulus: m }))
    }

    /// Caller guarantees irreducibility.
    pub(crate) fn new_unchecked(modulus: UniPoly) -> Arc<Self> {
        Arc::new(NumberField { modulus: modulus.monic() })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg0()
    }

    pub fn generator(self: &Arc<Self>) -> NfElem {
        NfElem::new(self, UniPoly::from_ints(&[0, 1]))
    }

    pub fn element(self: &Arc<Self>, residue: UniPoly) -> NfElem {
        NfElem::new(self, residue)
    }
}

pub fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || a.modulus == b.modulus
}

#[derive(Clone, Debug)]
pub struct NfElem {
    field: Arc<NumberField>,
    residue: UniPoly,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.residue == other.residue
    }
}

impl NfElem {
    pub fn new(field: &Arc<NumberField>, residue: UniPoly) -> Self {
        let residue = residue.rem(&field.modulus);
        NfElem { field: field.clone(), residue }
    }

    pub fn from_rational(field: &Arc<NumberField>, q: &Rational) -> Self {
        NfElem::new(field, Poly::constant(q.clone()))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn residue(&self) -> &UniPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// Some(q) when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.residue.degree() {
            None => Some(<Rational as Field>::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            _ => None,
        }
    }

    fn check(&self, o: &Self) -> Result<(), Error> {
        if same_field(&self.field, &o.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, Error> {
        self.check(o)?;
        Ok(NfElem { field: self.field.clone(), residue: self.residue.add(&o.residue) })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, Error> {
        self.check(o)?;
        Ok(NfElem { field: self.field.clone(), residue: self.residue.sub(&o.residue) })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, Error> {
        self.check(o)?;
        Ok(NfElem::new(&self.field, self.residue.mul(&o.residue)))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, Error> {
        self.check(o)?;
        let inv = o.inv().ok_or(Error::DivisionByZero)?;
        self.try_mul(&inv)
    }

    pub fn neg(&self) -> Self {
        NfElem { field: self.field.clone(), residue: self.residue.neg() }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        NfElem { field: self.field.clone(), residue: self.residue.scale(q) }
    }

    /// Inverse via extended Euclid on the residue and the modulus.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.residue.ext_gcd(&self.field.modulus);
        debug_assert_eq!(g.deg0(), 0);
        Some(NfElem::new(&self.field, s))
    }

    /// "residue mod modulus", both in t.
    pub fn to_spec_string(&self) -> String {
        format!("{} mod {}", self.residue, self.field.modulus)
    }

    pub fn parse_spec_string(s: &str) -> Option<Self> {
        let (r, m) = s.split_once("mod")?;
        let r = super::poly::parse_unipoly(r, 't')?;
        let m = super::poly::parse_unipoly(m, 't')?;
        let field = NumberField::new(&m).ok()?;
        Some(NfElem::new(&field, r))
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_frac};

    #[test]
    fn square_root_of_two() {
        let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let t = k.generator();
        assert_eq!(t.try_mul(&t).unwrap().as_rational(), Some(rat(2)));
    }

    #[test]
    fn inverse_in_gaussian_field() {
        let k = NumberField::new(&UniPoly::from_ints(&[1, 0, 1])).unwrap();
        let t = k.generator();
        let one = NfElem::from_rational(&k, &rat(1));
        let x = t.try_add(&one).unwrap();
        let inv = x.inv().unwrap();
        let expect = k.element(Poly::new(vec![rat_frac(1, 2), rat_frac(-1, 2)]));
        assert_eq!(inv, expect);
        assert_eq!(x.try_mul(&inv).unwrap(), one);
    }

    #[test]
    fn mismatch_and_zero_division() {
        let k1 = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let k2 = NumberField::new(&UniPoly::from_ints(&[-3, 0, 1])).unwrap();
        assert!(matches!(k1.generator().try_add(&k2.generator()), Err(Error::FieldMismatch)));
        let z = NfElem::from_rational(&k1, &rat(0));
        assert!(matches!(k1.generator().try_div(&z), Err(Error::DivisionByZero)));
        assert!(NumberField::new(&UniPoly::from_ints(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn spec_string_round_trip() {
        let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let x = k.element(Poly::new(vec![rat(1), rat_frac(1, 2)]));
        let s = x.to_spec_string();
        assert_eq!(s, "1/2*t + 1 mod t^2 - 2");
        assert_eq!(NfElem::parse_spec_string(&s).unwrap(), x);
    }
}
