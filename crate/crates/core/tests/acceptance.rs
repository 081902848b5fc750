//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

mod common;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use stab22::bipoly::{linear_form_x, linear_form_y, AffinePoly, BiMonomial, BiPoly};
use stab22::boundary::{minimal_orbit_limit, moduli_dimension, representative, scaling_equivalence, stratum_of, Stratum};
use stab22::classifier::{
    classify, random_destabilize_search, random_unimodular_frame, Certificate, MuSign, StabilityClass,
    SEMISTABLE_FAMILY, UNSTABLE_FAMILY,
};
use stab22::json::{certificate_from_json, certificate_json};
use stab22::oneps::{limit, m_oplus, m_plus, m_zero, monomial_weight, mu, Limit, Weight};
use stab22::points::Point;
use stab22::scalars::{parse_rational, Rational, Scalar};
use stab22::singularity::{
    classify_germ, classify_singularity, local_algebra_dim, local_equation, singular_locus, LocalDim, LocalType,
};
use stab22::weightlp::find_destabilizing_weight;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: stab22::Error) -> String {
    e.to_string()
}

// 1

fn witness_families() -> Check {
    let mut unstable = 0;
    let mut semistable = 0;
    for x in witnesses() {
        let f = poly(&x.family);
        let m = mu(&f, &x.weight).map_err(err)?;
        match x.expected_limit() {
            None => {
                ensure(m > 0, || format!("{}: mu = {m}, expected > 0", x.name))?;
                unstable += 1;
            }
            Some(expected) => {
                ensure(m == 0, || format!("{}: mu = {m}, expected 0", x.name))?;
                let got = limit(&f, &x.weight).map_err(err)?;
                ensure(got == Limit::Poly(expected.clone()), || {
                    format!("{}: limit {got:?}, expected {}", x.name, expected.to_text())
                })?;
                semistable += 1;
            }
        }
    }
    Ok(format!("{unstable} unstable constructions with mu > 0, {semistable} limits reproduced"))
}

// 2

fn pairwise_distinct(sets: &[BTreeSet<BiMonomial>]) -> bool {
    (0..sets.len()).all(|i| (i + 1..sets.len()).all(|j| sets[i] != sets[j]))
}

fn monomial_sets() -> Check {
    let plus: Vec<_> = UNSTABLE_FAMILY.iter().map(m_plus).collect();
    let oplus: Vec<_> = SEMISTABLE_FAMILY.iter().map(m_oplus).collect();
    let zero: Vec<_> = SEMISTABLE_FAMILY.iter().map(m_zero).collect();
    ensure(pairwise_distinct(&plus), || "M+ sets coincide".into())?;
    ensure(pairwise_distinct(&oplus), || "M(+) sets coincide".into())?;
    let embeds = |support: &[BiMonomial], sets: &[BTreeSet<BiMonomial>]| {
        sets.iter().any(|s| support.iter().all(|m| s.contains(m)))
    };
    let unstable = unstable_fixtures();
    for f in &unstable {
        let v = classify(f).map_err(err)?;
        ensure(v.class == StabilityClass::Unstable, || format!("{} is {}", f.to_text(), v.class))?;
        let support = v.certificate.as_ref().unwrap().transformed(f).support();
        ensure(embeds(&support, &plus), || format!("{}: transformed support not in any M+", f.to_text()))?;
    }
    let semistable = semistable_fixtures();
    for f in &semistable {
        let v = classify(f).map_err(err)?;
        ensure(v.class == StabilityClass::StrictlySemistable, || format!("{} is {}", f.to_text(), v.class))?;
        let lim = minimal_orbit_limit(f, v.certificate.as_ref().unwrap()).map_err(err)?;
        ensure(embeds(&lim.support(), &zero), || format!("{}: limit support not in any weight-0 slice", f.to_text()))?;
    }
    Ok(format!("4 + 4 distinct sets; {} unstable and {} semistable fixtures embed", unstable.len(), semistable.len()))
}

// 3

/// act(g, f) by substituting x_i -> (x·g2)_i and y_j -> (y·g3)_j term by term.
fn substitute(f: &BiPoly, c: &Certificate) -> BiPoly {
    let g2 = &c.frame.g2;
    let g3 = &c.frame.g3;
    let xs: Vec<BiPoly> = (0..2).map(|i| linear_form_x(&[g2[0][i].clone(), g2[1][i].clone()])).collect();
    let ys: Vec<BiPoly> =
        (0..3).map(|j| linear_form_y(&[g3[0][j].clone(), g3[1][j].clone(), g3[2][j].clone()])).collect();
    let mut out = BiPoly::zero((2, 2));
    for (m, coeff) in f.terms() {
        let mut t = BiPoly::constant(coeff.clone());
        for (i, x) in xs.iter().enumerate() {
            t = t.mul(&x.pow(m.alpha[i]));
        }
        for (j, y) in ys.iter().enumerate() {
            t = t.mul(&y.pow(m.beta[j]));
        }
        out = out.add(&t);
    }
    out.simplify()
}

fn independent_mu(f: &BiPoly, c: &Certificate) -> Option<i64> {
    let g = substitute(f, c);
    g.terms().map(|(m, _)| (0..2).map(|i| c.weight.r[i] * m.alpha[i] as i64).sum::<i64>()
        + (0..3).map(|j| c.weight.s[j] * m.beta[j] as i64).sum::<i64>()).min()
}

fn sign_holds(sign: MuSign, m: i64) -> bool {
    match sign {
        MuSign::Positive => m > 0,
        MuSign::Zero => m == 0,
    }
}

fn certificate_soundness() -> Check {
    let mut emitted: Vec<(BiPoly, Certificate)> = Vec::new();
    for f in unstable_fixtures().into_iter().chain(semistable_fixtures()) {
        let v = classify(&f).map_err(err)?;
        let c = v.certificate.ok_or_else(|| format!("{} has no certificate", f.to_text()))?;
        emitted.push((f, c));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..40 {
        let f = random_poly(&mut rng);
        if let Ok(v) = classify(&f) {
            if let Some(c) = v.certificate {
                emitted.push((f.clone(), c));
            }
        }
        if k % 4 == 0 {
            if let Some(c) = random_destabilize_search(&f, 30, k).map_err(err)? {
                emitted.push((f, c));
            }
        }
    }
    for (f, c) in &emitted {
        let m = independent_mu(f, c).ok_or("transformed polynomial vanished")?;
        ensure(sign_holds(c.claimed_mu_sign, m), || format!("{}: claimed {} but mu = {m}", f.to_text(), c.claimed_mu_sign))?;
        let checked = c.verify(f).map_err(err)?;
        ensure(checked == m, || format!("{}: verify gave {checked}, recomputed {m}", f.to_text()))?;
        if c.claimed_mu_sign == MuSign::Zero {
            ensure(!limit(&substitute(f, c), &c.weight).map_err(err)?.eq(&Limit::Zero), || "zero limit".into())?;
        }
        let mut doc = certificate_json(c);
        let flipped = match c.claimed_mu_sign {
            MuSign::Positive => "Zero",
            MuSign::Zero => "Positive",
        };
        doc["claimed_mu_sign"] = serde_json::json!(flipped);
        let mutated = certificate_from_json(&doc).map_err(err)?;
        ensure(mutated.verify(f).is_err(), || format!("{}: sign-flipped certificate accepted", f.to_text()))?;
        let mut skewed = c.clone();
        skewed.weight = Weight::new_unchecked([c.weight.r[0], c.weight.r[1] + 1], c.weight.s);
        ensure(skewed.verify(f).is_err(), || format!("{}: non-trace-free weight accepted", f.to_text()))?;
    }
    Ok(format!("{} certificates re-verified, every mutation rejected", emitted.len()))
}

// 4

fn g_invariance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut counts = [0usize; 3];
    for _ in 0..200 {
        let f = random_poly(&mut rng);
        let g = random_unimodular_frame(&mut rng);
        let moved = g.act(&f);
        let a = classify(&f).map_err(|e| format!("{}: {e}", f.to_text()))?.class;
        let b = classify(&moved).map_err(|e| format!("{}: {e}", moved.to_text()))?.class;
        ensure(a == b, || format!("{} is {a} but its translate {} is {b}", f.to_text(), moved.to_text()))?;
        counts[a as usize] += 1;
    }
    Ok(format!("200 pairs agree ({} stable, {} strictly semistable, {} unstable)", counts[0], counts[1], counts[2]))
}

// 5

fn smooth_semistable() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let basis = BiMonomial::basis22();
    let mut smooth = 0;
    let mut draws = 0;
    while smooth < 100 {
        draws += 1;
        ensure(draws <= 400, || format!("only {smooth} smooth surfaces in {draws} draws"))?;
        let f = poly_on(&mut rng, &basis, 5);
        let Ok(locus) = singular_locus(&f, 10) else { continue };
        if !locus.is_smooth() {
            continue;
        }
        smooth += 1;
        let v = classify(&f).map_err(err)?;
        ensure(v.class != StabilityClass::Unstable, || format!("smooth {} classified Unstable", f.to_text()))?;
    }
    let fixtures = stable_fixtures();
    for f in &fixtures {
        let v = classify(f).map_err(err)?;
        ensure(v.class == StabilityClass::Stable, || format!("{} is {}", f.to_text(), v.class))?;
        let hit = random_destabilize_search(f, 500, 2026).map_err(err)?;
        ensure(hit.as_ref().map_or(true, |c| c.claimed_mu_sign != MuSign::Positive), || {
            format!("strict certificate found for stable {}", f.to_text())
        })?;
    }
    Ok(format!("100 smooth surfaces semistable; 500 trials on {} stable fixtures find no strict certificate", fixtures.len()))
}

// 6

struct BasePointFamily {
    a11: Rational,
    a12: Rational,
    b02: Rational,
    b11: Rational,
    b22: Rational,
    b12: Rational,
    c00: Rational,
    c11: Rational,
    c22: Rational,
    c02: Rational,
    c12: Rational,
}

impl BasePointFamily {
    fn new(c: [&str; 11]) -> BasePointFamily {
        let q = |s: &str| parse_rational(s).expect("rational");
        BasePointFamily {
            a11: q(c[0]),
            a12: q(c[1]),
            b02: q(c[2]),
            b11: q(c[3]),
            b22: q(c[4]),
            b12: q(c[5]),
            c00: q(c[6]),
            c11: q(c[7]),
            c22: q(c[8]),
            c02: q(c[9]),
            c12: q(c[10]),
        }
    }

    fn poly(&self) -> BiPoly {
        let t = |c: &Rational, m: &str| format!("({c})*{m}");
        poly(
            &[
                t(&self.a11, "x0^2*y1^2"),
                t(&self.a12, "x0^2*y1*y2"),
                t(&self.b11, "x0*x1*y1^2"),
                t(&self.b22, "x0*x1*y2^2"),
                t(&self.b02, "x0*x1*y0*y2"),
                t(&self.b12, "x0*x1*y1*y2"),
                t(&self.c00, "x1^2*y0^2"),
                t(&self.c11, "x1^2*y1^2"),
                t(&self.c22, "x1^2*y2^2"),
                t(&self.c02, "x1^2*y0*y2"),
                t(&self.c12, "x1^2*y1*y2"),
            ]
            .join(" + "),
        )
    }

    fn hessian(&self) -> Rational {
        let two = Rational::from_integer(2.into());
        -(two.clone() * &self.a11 * &self.b02 * &self.b02) - two * &self.a12 * &self.a12 * &self.c00
    }

    /// The degree-two coefficient with the units evaluated at the base point.
    fn quadratic_term(&self) -> Rational {
        let n = |k: i64| Rational::from_integer(k.into());
        let (a12, b02, b11, b22, b12, c00, c02) = (&self.a12, &self.b02, &self.b11, &self.b22, &self.b12, &self.c00, &self.c02);
        let al1 = n(-2) * &self.a11 / a12;
        let al2 = -a12.clone() / b02;
        al2.clone() * &al2 * n(2) * a12 * c00 * c02 - b11.clone() * b02 * a12 - al1.clone() * &al1 * b22 * b02 * a12
            + al2.clone() * (n(2) * a12 * b12 * c00 + n(2) * b11 * b02 * b02)
            + al1.clone() * &al2 * (n(4) * a12 * b22 * c00 + b12.clone() * b02 * b02 - n(2) * a12 * b02 * c02)
            - al1 * a12 * b02 * b12
    }

    /// The degree-three coefficient, read literally.
    fn cubic_term(&self) -> Rational {
        let n = |k: i64| Rational::from_integer(k.into());
        let (a12, b02, c00, c11, c22, c12) = (&self.a12, &self.b02, &self.c00, &self.c11, &self.c22, &self.c12);
        let al1 = n(-2) * &self.a11 / a12;
        let al2 = -a12.clone() / b02;
        al2.clone() * &al2 * (n(2) * a12 * c00 * c12 + n(2) * c00 * b02 * b02)
            + al1.clone() * &al2 * &al2 * (n(4) * a12 * c00 * c22 + b02.clone() * b02 * c12)
            - al2.clone() * n(2) * a12 * b02 * c11
            - al1.clone() * &al1 * &al2 * n(2) * a12 * b02 * c11
            - al1 * al2 * n(2) * a12 * b02 * c00
    }

    fn regime(&self) -> LocalType {
        let zero = Rational::from_integer(0.into());
        if self.hessian() != zero {
            LocalType::A1
        } else if self.quadratic_term() != zero {
            LocalType::A2
        } else if self.cubic_term() != zero {
            LocalType::A3
        } else {
            LocalType::NonIsolatedSuspected(10)
        }
    }
}

fn singularity_oracle() -> Check {
    for n in 1..=5u32 {
        let g = AffinePoly::from_int_terms(&[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, n + 1], 1)]);
        let t = classify_germ(&g, 10).map_err(err)?;
        ensure(t == LocalType::from_an(n as usize), || format!("x^2+y^2+z^{}: {t}", n + 1))?;
        let d = local_algebra_dim(&g, 10).map_err(err)?;
        ensure(d == LocalDim::Stabilized(n as usize), || format!("x^2+y^2+z^{}: dimension {d:?}", n + 1))?;
    }
    let g = AffinePoly::from_int_terms(&[([2, 0, 0], 1), ([0, 2, 0], 1)]);
    let t = classify_germ(&g, 10).map_err(err)?;
    ensure(matches!(t, LocalType::NonIsolatedSuspected(_)), || format!("x^2+y^2: {t}"))?;
    let instances = [
        ("H != 0", ["1", "1", "1", "2", "3", "5", "1", "7", "-1", "2", "3"], LocalType::A1, LocalDim::Stabilized(1)),
        ("quadratic term != 0", ["1", "1", "1", "2", "3", "5", "-1", "7", "-1", "2", "3"], LocalType::A2, LocalDim::Stabilized(2)),
        ("cubic term != 0", ["1", "1", "1", "-2", "-1", "-2", "-1", "-2", "-2", "1", "-1"], LocalType::A3, LocalDim::Stabilized(3)),
        (
            "both zero",
            ["1", "1", "1", "4", "1", "4", "-1", "-1/4", "-1/16", "0", "-1/4"],
            LocalType::NonIsolatedSuspected(10),
            LocalDim::NotStabilized,
        ),
    ];
    for (name, coeffs, expected, dim) in instances {
        let inst = BasePointFamily::new(coeffs);
        ensure(inst.regime() == expected, || format!("{name}: instance falls in regime {}", inst.regime()))?;
        let f = inst.poly();
        let base = Point::base();
        let t = classify_singularity(&f, &base, 10).map_err(err)?;
        ensure(t == expected, || format!("{name}: classified {t}, expected {expected}"))?;
        let d = local_algebra_dim(&local_equation(&f, &base).map_err(err)?, 10).map_err(err)?;
        ensure(d == dim, || format!("{name}: local algebra {d:?}, expected {dim:?}"))?;
    }
    Ok("A1..A5 normal forms, x^2+y^2, and four coefficient regimes agree".into())
}

// 7

fn positive_on(support: &[BiMonomial], w: &Weight, strict: bool) -> bool {
    support.iter().all(|m| {
        let v = monomial_weight(m, w);
        if strict {
            v > 0
        } else {
            v >= 0
        }
    })
}

fn brute_force(support: &[BiMonomial], strict: bool, bound: i64) -> Option<Weight> {
    for a in 0..=bound {
        for s0 in -bound..=0 {
            for s1 in s0..=bound {
                let s2 = -s0 - s1;
                if s2 < s1 || s2 > bound {
                    continue;
                }
                let w = Weight::new_unchecked([-a, a], [s0, s1, s2]);
                if !w.is_trivial() && positive_on(support, &w, strict) {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn weightlp_completeness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let basis = BiMonomial::basis22();
    let mut found = 0;
    let mut revalidated = 0;
    for _ in 0..100 {
        let k = rng.gen_range(1..=8);
        let support = random_support(&mut rng, &basis, k);
        for strict in [true, false] {
            let lp = find_destabilizing_weight(&support, strict).map_err(err)?;
            if let Some(w) = &lp {
                ensure(w.is_normalized() && !w.is_trivial() && positive_on(&support, w, strict), || {
                    format!("{support:?}: returned weight {w} does not qualify")
                })?;
            }
            let mut brute = brute_force(&support, strict, 6);
            if brute.is_some() != lp.is_some() {
                revalidated += 1;
                brute = brute_force(&support, strict, 12);
            }
            ensure(brute.is_some() == lp.is_some(), || {
                format!("{support:?} (strict {strict}): weightlp {lp:?}, brute force {brute:?}")
            })?;
            found += lp.is_some() as usize;
        }
    }
    Ok(format!("200 queries agree ({found} Some), {revalidated} settled at bound 12"))
}

// 8

fn stratum_via_classify(f: &BiPoly) -> Result<stab22::boundary::BoundaryPoint, String> {
    let v = classify(f).map_err(err)?;
    ensure(v.class == StabilityClass::StrictlySemistable, || format!("{} is {}", f.to_text(), v.class))?;
    let lim = minimal_orbit_limit(f, v.certificate.as_ref().unwrap()).map_err(err)?;
    stratum_of(&lim).map_err(err)
}

fn boundary_suite() -> Check {
    ensure(moduli_dimension() == 6, || format!("moduli dimension {}", moduli_dimension()))?;
    let mut notes = Vec::new();
    let families = [
        ("(1,0)x(1,2)", "x0*(x0*y0*y1 + x1*y1^2 + x1*y0*y2 + x0*y2^2)"),
        ("(1,1)x(1,1)", "(2*x0*y2 + x1*(3*y1 + 5*y2))*(x0*(7*y1 + 11*y2) + x1*(13*y0 + 17*y1 + 19*y2))"),
    ];
    let mut family_failures = Vec::new();
    for (name, text) in families {
        let p = stratum_via_classify(&poly(text))?;
        notes.push(format!("{name} -> {p}"));
        if p.stratum != Stratum::Gamma1 {
            family_failures.push(format!("{name} family degenerates to {p}, not Gamma1"));
        }
    }
    let int = Scalar::int;
    let coordinate = |s: Stratum, u: i64, v: i64| -> [Scalar; 2] {
        match s {
            Stratum::Gamma2 => [int(u), int(v)],
            Stratum::Gamma3 => [int(u * u), int(v)],
            _ => [int(u * u), int(4 * v)],
        }
    };
    let params = [(1, 1), (2, 3), (-1, 5), (3, -2)];
    for s in [Stratum::Gamma2, Stratum::Gamma3, Stratum::Gamma4] {
        for (u, v) in params {
            let rep = representative(s, &int(u), &int(v)).map_err(err)?;
            let p = stratum_of(&rep).map_err(err)?;
            let want = stab22::points::normalize_projective(coordinate(s, u, v));
            ensure(p.stratum == s && p.coordinate == want, || format!("{s} ({u},{v}) read back as {p}"))?;
            let torus = stab22::bipoly::FrameChange::diagonal([int(2), int(-3)], [int(5), int(1), int(-7)]).map_err(err)?;
            let moved = stratum_of(&torus.act(&rep).swap_vars(true, true)).map_err(err)?;
            ensure(moved == p, || format!("{s} ({u},{v}): coordinate moved to {moved} under the torus"))?;
            for rho in [2, 3] {
                let rho = Rational::from_integer(rho.into());
                ensure(scaling_equivalence(s, &int(u), &int(v), &rho).map_err(err)?, || {
                    format!("{s} ({u},{v}): scaling by rho = {rho} not undone")
                })?;
            }
        }
        let rep = representative(s, &int(1), &int(0)).map_err(err)?;
        let direct = stratum_of(&rep).map_err(err)?;
        ensure(direct.stratum == s && direct.equals_gamma1(), || format!("{s} [1:0] read as {direct}"))?;
        let via = stratum_via_classify(&rep)?;
        ensure(via.stratum == Stratum::Gamma1, || format!("{s} [1:0] degenerates to {via}"))?;
    }
    ensure(family_failures.is_empty(), || format!("{} ({})", family_failures.join("; "), notes.join(", ")))?;
    Ok(format!("dimension 6; {}; three curves meet at Gamma1", notes.join(", ")))
}

// 9

fn cli_determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_stab22");
    let stable = stable_fixtures()[0].to_text();
    let runs: Vec<Vec<String>> = vec![
        vec!["--json", "--trials", "64", "--seed", "11", "classify", &stable],
        vec!["--trials", "64", "--seed", "11", "classify", "x0*x1*(y0*y2 + y1^2) + x0^2*y1*y2"],
        vec!["--json", "classify", "(x0*y2 + x1*y1)*(x0*y1 + x1*y0)"],
        vec!["--json", "singular-locus", "x0*x1*(y0*y2 + y1^2)"],
        vec!["--json", "--weight", "-1,1;-1,0,1", "limit", "x1^2*y2^2 + x0*x1*y0*y2"],
        vec!["--json", "--weight", "-3,3;-2,-2,4", "msets"],
        vec!["fibres", &stable],
        vec!["--json", "factor", "x0^2*y0^2 - 2*x1^2*y1^2"],
    ]
    .into_iter()
    .map(|r| r.into_iter().map(String::from).collect())
    .collect();
    for args in &runs {
        let go = || Command::new(bin).args(args).output().map_err(|e| e.to_string());
        let (a, b) = (go()?, go()?);
        ensure(a.status.success(), || format!("{args:?} exited with {}", a.status))?;
        ensure(a.stdout == b.stdout && a.status == b.status, || format!("{args:?} is not reproducible"))?;
    }
    Ok(format!("{} invocations byte-identical across runs", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 9] = [
        ("witness families", witness_families, Some(Duration::from_secs(1))),
        ("monomial sets", monomial_sets, Some(Duration::from_secs(1))),
        ("certificate soundness", certificate_soundness, None),
        ("G-invariance", g_invariance, Some(Duration::from_secs(30))),
        ("smooth surfaces semistable", smooth_semistable, Some(Duration::from_secs(60))),
        ("singularity oracle", singularity_oracle, Some(Duration::from_secs(10))),
        ("weightlp completeness", weightlp_completeness, Some(Duration::from_secs(10))),
        ("boundary", boundary_suite, Some(Duration::from_secs(5))),
        ("CLI determinism", cli_determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > *b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += outcome.is_err() as usize;
        println!("criterion {} {name}: {tag} [{elapsed:.2?}] {detail}", i + 1);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
