#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use stab22::bipoly::{parse, BiMonomial, BiPoly};
use stab22::oneps::Weight;
use stab22::scalars::Scalar;

const COEFFS: [i64; 16] = [2, 3, -5, 7, 11, -13, 17, 19, -23, 29, 31, -37, 41, 43, 47, -53];

/// Fill each `#` of a template with successive fixed nonzero integers.
pub fn instantiate(template: &str) -> String {
    let mut it = COEFFS.iter();
    template
        .chars()
        .map(|c| match c {
            '#' => format!("({})", it.next().expect("enough coefficients")),
            c => c.to_string(),
        })
        .collect()
}

pub fn poly(text: &str) -> BiPoly {
    parse(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn w(r: [i64; 2], s: [i64; 3]) -> Weight {
    Weight::new(r, s).expect("trace-free weight")
}

pub struct Witness {
    pub name: &'static str,
    pub family: String,
    pub weight: Weight,
    /// Monomials of the quoted limit; None for unstable constructions.
    pub limit: Option<&'static [&'static str]>,
}

impl Witness {
    /// The family's own terms on the quoted limit monomials.
    pub fn expected_limit(&self) -> Option<BiPoly> {
        let f = poly(&self.family);
        let keep: Vec<BiMonomial> = self.limit?.iter().map(|m| poly(m).support()[0]).collect();
        Some(BiPoly::from_terms((2, 2), f.terms().filter(|(m, _)| keep.contains(m)).map(|(m, c)| (*m, c.clone()))).unwrap())
    }
}

pub fn witnesses() -> Vec<Witness> {
    let unstable = |name, template: &str, weight| Witness { name, family: instantiate(template), weight, limit: None };
    let semistable = |name, template: &str, weight, limit| Witness { name, family: instantiate(template), weight, limit: Some(limit) };
    vec![
        unstable(
            "singular section",
            "#*x0^2*y1^2 + #*x0^2*y2^2 + #*x0^2*y1*y2 + #*x0*x1*y1^2 + #*x0*x1*y2^2 + #*x0*x1*y1*y2 \
             + #*x1^2*y1^2 + #*x1^2*y2^2 + #*x1^2*y1*y2",
            w([-1, 1], [-4, 2, 2]),
        ),
        unstable(
            "pullback cone",
            "#*x0^2*y1^2 + #*x0^2*y2^2 + #*x0^2*y1*y2 + #*x0*x1*y1^2 + #*x0*x1*y2^2 + #*x0*x1*y1*y2 \
             + #*x1^2*y1^2 + #*x1^2*y2^2 + #*x1^2*y0*y1 + #*x1^2*y0*y2 + #*x1^2*y1*y2",
            w([-4, 4], [-10, 5, 5]),
        ),
        unstable(
            "ramified double fibre",
            "#*x0^2*y2^2 + #*x0*x1*y2^2 + #*x0*x1*y0*y2 + #*x0*x1*y1*y2 \
             + #*x1^2*y0^2 + #*x1^2*y1^2 + #*x1^2*y2^2 + #*x1^2*y0*y1 + #*x1^2*y0*y2 + #*x1^2*y1*y2",
            w([-3, 3], [-2, -2, 4]),
        ),
        unstable(
            "ramified line",
            "#*x0^2*y2^2 + #*x0^2*y1*y2 + #*x0*x1*y2^2 + #*x0*x1*y0*y2 + #*x0*x1*y1*y2 \
             + #*x1^2*y1^2 + #*x1^2*y2^2 + #*x1^2*y0*y2 + #*x1^2*y1*y2",
            w([-2, 2], [-5, -1, 6]),
        ),
        semistable(
            "constant tangent map",
            "#*x0^2*y1^2 + #*x0^2*y2^2 + #*x0^2*y1*y2 + #*x0^2*y0*y2 \
             + #*x0*x1*y1^2 + #*x0*x1*y2^2 + #*x0*x1*y0*y2 + #*x0*x1*y1*y2 \
             + #*x1^2*y1^2 + #*x1^2*y2^2 + #*x1^2*y0*y2 + #*x1^2*y1*y2",
            w([0, 0], [-1, 0, 1]),
            &["x0^2*y1^2", "x0^2*y0*y2", "x0*x1*y1^2", "x0*x1*y0*y2", "x1^2*y1^2", "x1^2*y0*y2"],
        ),
        semistable(
            "non-A1 on a section",
            "#*x0^2*y2^2 + #*x0^2*y1*y2 + #*x0*x1*y1^2 + #*x0*x1*y2^2 + #*x0*x1*y0*y2 + #*x0*x1*y1*y2 \
             + #*x1^2*y1^2 + #*x1^2*y2^2 + #*x1^2*y0*y1 + #*x1^2*y0*y2 + #*x1^2*y1*y2",
            w([-1, 1], [-2, 0, 2]),
            &["x0^2*y1*y2", "x0*x1*y1^2", "x0*x1*y0*y2", "x1^2*y0*y1"],
        ),
        semistable(
            "non-A1 on a double fibre",
            "#*x0^2*y2^2 + #*x0*x1*y1^2 + #*x0*x1*y2^2 + #*x0*x1*y0*y2 + #*x0*x1*y1*y2 \
             + #*x1^2*y0^2 + #*x1^2*y1^2 + #*x1^2*y2^2 + #*x1^2*y0*y1 + #*x1^2*y0*y2 + #*x1^2*y1*y2",
            w([-1, 1], [-1, 0, 1]),
            &["x0^2*y2^2", "x0*x1*y1^2", "x0*x1*y0*y2", "x1^2*y0^2"],
        ),
        unstable(
            "linear factor in y",
            "#*y2*(x0*x1*y0 + y1*(#*x0^2 + #*x0*x1 + #*x1^2) + y2*(#*x0^2 + #*x0*x1 + #*x1^2))",
            w([-1, 1], [-3, -1, 4]),
        ),
        unstable(
            "common fibre",
            "(#*x0*y2 + x1*(#*y0 + #*y1 + #*y2))*(#*x0*y2 + x1*(#*y0 + #*y1 + #*y2))",
            w([-3, 3], [-2, -2, 4]),
        ),
    ]
}

/// Irreducible stable surfaces with a singular point at the base point.
pub fn stable_fixtures() -> Vec<BiPoly> {
    [
        "x0^2*(y1^2 + y1*y2) + x0*x1*(2*y1^2 + 3*y2^2 + y0*y2 + 5*y1*y2) + x1^2*(y0^2 + 7*y1^2 - y2^2 + 2*y0*y2 + 3*y1*y2)",
        "x0^2*(y1^2 + y1*y2) + x0*x1*(2*y1^2 + 3*y2^2 + y0*y2 + 5*y1*y2) + x1^2*(-y0^2 + 7*y1^2 - y2^2 + 2*y0*y2 + 3*y1*y2)",
    ]
    .iter()
    .map(|s| poly(s))
    .collect()
}

pub fn unstable_fixtures() -> Vec<BiPoly> {
    let mut out: Vec<BiPoly> = witnesses().iter().filter(|x| x.limit.is_none()).map(|x| poly(&x.family)).collect();
    for s in [
        "x0^2*(y1^2 + y2^2) + x0*x1*y1*y2 + x1^2*(y0*y1 + y2^2)",
        "x0^2*y0^2 - 2*x1^2*y1^2",
        "x1^2*(y0*y2 + y1^2)",
        "x0*x1*(y0*y2 - y2^2)",
        "(x0*y0 + x1*y1)*(x0*y0 + x1*y2)",
    ] {
        out.push(poly(s));
    }
    out
}

pub fn semistable_fixtures() -> Vec<BiPoly> {
    let mut out: Vec<BiPoly> = witnesses().iter().filter(|x| x.limit.is_some()).map(|x| poly(&x.family)).collect();
    for s in [
        "x0*x1*(y0*y2 + y1^2)",
        "(x0*y2 + x1*y1)*(x0*y1 + x1*y0)",
        "x0*(x0*y0*y1 + x1*y1^2 + x1*y0*y2 + x0*y2^2)",
        "(2*x0*y2 + x1*(3*y1 + 5*y2))*(x0*(7*y1 + 11*y2) + x1*(13*y0 + 17*y1 + 19*y2))",
    ] {
        out.push(poly(s));
    }
    out
}

fn random_coeff(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

pub fn random_support(rng: &mut ChaCha8Rng, pool: &[BiMonomial], k: usize) -> Vec<BiMonomial> {
    let mut p = pool.to_vec();
    p.shuffle(rng);
    p.truncate(k.min(p.len()));
    p
}

pub fn poly_on(rng: &mut ChaCha8Rng, support: &[BiMonomial], bound: i64) -> BiPoly {
    let terms: Vec<_> = support.iter().map(|m| (*m, Scalar::int(random_coeff(rng, bound)))).collect();
    BiPoly::from_terms((2, 2), terms).expect("(2,2) monomials")
}

fn random_form(rng: &mut ChaCha8Rng, d: (u32, u32)) -> BiPoly {
    let basis = BiMonomial::basis(d.0, d.1);
    let mut terms = Vec::new();
    for m in &basis {
        if rng.gen_bool(0.7) {
            terms.push((*m, Scalar::int(random_coeff(rng, 3))));
        }
    }
    let f = BiPoly::from_terms(d, terms).expect("basis monomials");
    if f.is_zero() {
        BiPoly::monomial(Scalar::int(1), basis[0])
    } else {
        f
    }
}

/// A mix of sparse, dense, torus-special and reducible (2,2) forms.
pub fn random_poly(rng: &mut ChaCha8Rng) -> BiPoly {
    use stab22::classifier::{SEMISTABLE_FAMILY, UNSTABLE_FAMILY};
    use stab22::oneps::{m_oplus, m_plus};
    let basis = BiMonomial::basis22();
    loop {
        let f = match rng.gen_range(0..5) {
            0 => {
                let k = rng.gen_range(3..=9);
                let support = random_support(rng, &basis, k);
                poly_on(rng, &support, 3)
            }
            1 => poly_on(rng, &basis, 4),
            2 => {
                let pool: Vec<BiMonomial> = m_plus(UNSTABLE_FAMILY.choose(rng).unwrap()).into_iter().collect();
                let k = rng.gen_range(2..=pool.len());
                let support = random_support(rng, &pool, k);
                poly_on(rng, &support, 3)
            }
            3 => {
                let pool: Vec<BiMonomial> = m_oplus(SEMISTABLE_FAMILY.choose(rng).unwrap()).into_iter().collect();
                let k = rng.gen_range(3..=pool.len());
                let support = random_support(rng, &pool, k);
                poly_on(rng, &support, 3)
            }
            _ => {
                let split = *[(1, 0), (1, 1), (0, 1), (2, 0), (0, 2)].choose(rng).unwrap();
                random_form(rng, split).mul(&random_form(rng, (2 - split.0, 2 - split.1)))
            }
        };
        if !f.is_zero() && f.bidegree() == (2, 2) {
            return f;
        }
    }
}
