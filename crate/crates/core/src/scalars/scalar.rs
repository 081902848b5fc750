use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;


use super::numfield::{same_field, NfElem, NumberField};
use super::{format_rational, Field, Rational};
use crate::error::Error;

/// The field a scalar lives in: ℚ (None) or a number field.
pub type FieldCtx = Option<Arc<NumberField>>;

/// A rational or a number-field element. Mixed operations promote to the
/// number field; two different number fields in one operation panic in the
/// operator impls and error in the `try_*` methods.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rational),
    Nf(NfElem),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Nf(a), Scalar::Nf(b)) => a == b,
            (Scalar::Rat(a), Scalar::Nf(b)) | (Scalar::Nf(b), Scalar::Rat(a)) => b.as_rational().as_ref() == Some(a),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rat(q)
    }
}

impl From<NfElem> for Scalar {
    fn from(x: NfElem) -> Self {
        Scalar::Nf(x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Rat(super::rat(n))
    }
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::from(n)
    }

    pub fn field(&self) -> FieldCtx {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Nf(x) => Some(x.field().clone()),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(q) => Some(q.clone()),
            Scalar::Nf(x) => x.as_rational(),
        }
    }

    /// Lift into the given field (rationals move, number-field elements must
    /// already live there).
    pub fn embed(&self, ctx: &FieldCtx) -> Scalar {
        match (self, ctx) {
            (Scalar::Rat(q), Some(k)) => Scalar::Nf(NfElem::from_rational(k, q)),
            _ => self.clone(),
        }
    }

    /// Collapse number-field elements that happen to be rational.
    pub fn simplify(self) -> Scalar {
        match &self {
            Scalar::Nf(x) => match x.as_rational() {
                Some(q) => Scalar::Rat(q),
                None => self,
            },
            _ => self,
        }
    }

    fn binop(
        &self,
        o: &Self,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        nf: impl Fn(&NfElem, &NfElem) -> Result<NfElem, Error>,
    ) -> Result<Scalar, Error> {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(rat(a, b))),
            (Scalar::Nf(a), Scalar::Nf(b)) => nf(a, b).map(Scalar::Nf),
            (Scalar::Rat(a), Scalar::Nf(b)) => nf(&NfElem::from_rational(b.field(), a), b).map(Scalar::Nf),
            (Scalar::Nf(a), Scalar::Rat(b)) => nf(a, &NfElem::from_rational(a.field(), b)).map(Scalar::Nf),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Scalar, Error> {
        self.binop(o, |a, b| a + b, |a, b| a.try_add(b))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Scalar, Error> {
        self.binop(o, |a, b| a - b, |a, b| a.try_sub(b))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Scalar, Error> {
        self.binop(o, |a, b| a * b, |a, b| a.try_mul(b))
    }

    pub fn try_div(&self, o: &Self) -> Result<Scalar, Error> {
        if Field::is_zero(o) {
            return Err(Error::DivisionByZero);
        }
        self.binop(o, |a, b| a / b, |a, b| a.try_div(b))
    }

    /// Rational string "p/q" or number-field string "r(t) mod m(t)".
    pub fn to_spec_string(&self) -> String {
        match self {
            Scalar::Rat(q) => format_rational(q),
            Scalar::Nf(x) => match x.as_rational() {
                Some(q) => format_rational(&q),
                None => x.to_spec_string(),
            },
        }
    }

    pub fn parse_spec_string(s: &str) -> Option<Scalar> {
        if s.contains("mod") {
            NfElem::parse_spec_string(s).map(Scalar::Nf)
        } else {
            super::parse_rational(s).map(Scalar::Rat)
        }
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::Rat(<Rational as Field>::zero())
    }
    fn one() -> Self {
        Scalar::Rat(<Rational as Field>::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Nf(x) => x.is_zero(),
        }
    }
    fn plus(&self, o: &Self) -> Self {
        self.try_add(o).expect("scalar field mismatch")
    }
    fn minus(&self, o: &Self) -> Self {
        self.try_sub(o).expect("scalar field mismatch")
    }
    fn times(&self, o: &Self) -> Self {
        self.try_mul(o).expect("scalar field mismatch")
    }
    fn negate(&self) -> Self {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Nf(x) => Scalar::Nf(x.neg()),
        }
    }
    fn inverse(&self) -> Option<Self> {
        match self {
            Scalar::Rat(q) => (!q.is_zero()).then(|| Scalar::Rat(q.recip())),
            Scalar::Nf(x) => x.inv().map(Scalar::Nf),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Scalar::Rat(q.clone())
    }
}

macro_rules! scalar_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Field::$f(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                Field::$f(&self, &o)
            }
        }
    };
}

scalar_op!(Add, add, plus);
scalar_op!(Sub, sub, minus);
scalar_op!(Mul, mul, times);
scalar_op!(Div, div, divide);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negate()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negate()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec_string())
    }
}

/// The unique number field among the inputs, or ℚ; error on two distinct fields.
pub fn common_field<'a>(items: impl IntoIterator<Item = &'a Scalar>) -> Result<FieldCtx, Error> {
    let mut ctx: FieldCtx = None;
    for s in items {
        if let Scalar::Nf(x) = s {
            match &ctx {
                None => ctx = Some(x.field().clone()),
                Some(k) if same_field(k, x.field()) => {}
                Some(_) => return Err(Error::FieldMismatch),
            }
        }
    }
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, UniPoly};

    #[test]
    fn promotion() {
        let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let t = Scalar::Nf(k.generator());
        let two = Scalar::int(2);
        let s = &t * &t;
        assert_eq!(s, two);
        assert_eq!((&s - &two).simplify(), Scalar::Rat(rat(0)));
        assert_eq!(common_field([&t, &two]).unwrap().unwrap().degree(), 2);
    }
}
