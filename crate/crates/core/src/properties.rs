//! Property tests over the public API.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bipoly::{parse, BiMonomial, BiPoly, FrameChange};
use crate::boundary::{representative, stratum_of, Stratum};
use crate::classifier::{classify, random_destabilize_search, random_unimodular_frame, MuSign, StabilityClass};
use crate::oneps::{limit, m_oplus, m_plus, m_zero, mu, Limit, Weight};
use crate::scalars::Scalar;
use crate::weightlp::find_destabilizing_weight;

fn build(coeffs: &[i64]) -> BiPoly {
    let terms = BiMonomial::basis22().into_iter().zip(coeffs).map(|(m, &c)| (m, Scalar::int(c)));
    BiPoly::from_terms((2, 2), terms).unwrap()
}

fn sparse_coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], 18)
}

fn frame(seed: u64) -> FrameChange {
    random_unimodular_frame(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn weight() -> impl Strategy<Value = Weight> {
    (0i64..=4, -6i64..=6, -6i64..=6)
        .prop_map(|(a, s0, s1)| {
            let mut s = [s0, s1, -s0 - s1];
            s.sort();
            Weight::new_unchecked([-a, a], s)
        })
        .prop_filter("nontrivial", |w| !w.is_trivial())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_composes(c in sparse_coeffs(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let f = build(&c);
        let (g, h) = (frame(s1), frame(s2));
        prop_assert_eq!(g.act(&h.act(&f)), g.compose(&h).act(&f));
    }

    #[test]
    fn text_round_trip(c in sparse_coeffs()) {
        let f = build(&c);
        prop_assume!(!f.is_zero());
        prop_assert_eq!(parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn monomial_sets_nest(w in weight()) {
        let (plus, oplus, zero) = (m_plus(&w), m_oplus(&w), m_zero(&w));
        prop_assert!(plus.is_subset(&oplus));
        prop_assert!(zero.is_subset(&oplus) && zero.is_disjoint(&plus));
        prop_assert_eq!(plus.len() + zero.len(), oplus.len());
    }

    #[test]
    fn support_in_m_plus_means_positive_mu(w in weight(), c in sparse_coeffs()) {
        let f = build(&c);
        prop_assume!(!f.is_zero());
        let m = mu(&f, &w).unwrap();
        let inside = f.support().iter().all(|x| m_plus(&w).contains(x));
        prop_assert_eq!(inside, m > 0);
        if m > 0 {
            prop_assert_eq!(limit(&f, &w).unwrap(), Limit::Zero);
        }
    }

    #[test]
    fn weightlp_answers_verify(c in sparse_coeffs(), strict in any::<bool>()) {
        let f = build(&c);
        prop_assume!(!f.is_zero());
        if let Some(w) = find_destabilizing_weight(&f.support(), strict).unwrap() {
            let m = mu(&f, &w).unwrap();
            prop_assert!(w.is_normalized() && !w.is_trivial());
            let ok = if strict { m > 0 } else { m >= 0 };
            prop_assert!(ok);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certificates_verify(c in sparse_coeffs()) {
        let f = build(&c);
        prop_assume!(!f.is_zero());
        let v = classify(&f).unwrap();
        match (&v.class, &v.certificate) {
            (StabilityClass::Stable, None) => {}
            (StabilityClass::Unstable, Some(cert)) => {
                prop_assert_eq!(cert.claimed_mu_sign, MuSign::Positive);
                prop_assert!(cert.verify(&f).unwrap() > 0);
            }
            (StabilityClass::StrictlySemistable, Some(cert)) => {
                prop_assert_eq!(cert.claimed_mu_sign, MuSign::Zero);
                prop_assert_eq!(cert.verify(&f).unwrap(), 0);
            }
            (class, cert) => prop_assert!(false, "{} with certificate {:?}", class, cert),
        }
    }

    #[test]
    fn class_is_frame_invariant(c in sparse_coeffs(), seed in any::<u64>()) {
        let f = build(&c);
        prop_assume!(!f.is_zero());
        let moved = frame(seed).act(&f);
        prop_assert_eq!(classify(&f).unwrap().class, classify(&moved).unwrap().class);
    }

    #[test]
    fn search_agrees_with_classify(c in sparse_coeffs(), seed in any::<u64>()) {
        let f = build(&c);
        prop_assume!(!f.is_zero());
        let class = classify(&f).unwrap().class;
        if let Some(cert) = random_destabilize_search(&f, 16, seed).unwrap() {
            prop_assert!(cert.verify(&f).is_ok());
            match cert.claimed_mu_sign {
                MuSign::Positive => prop_assert_eq!(class, StabilityClass::Unstable),
                MuSign::Zero => prop_assert_ne!(class, StabilityClass::Stable),
            }
        }
    }

    #[test]
    fn one_stratum_per_limit(u in 1i64..=9, v in -9i64..=9, seed in 0usize..3, t in 1i64..=5) {
        let s = [Stratum::Gamma2, Stratum::Gamma3, Stratum::Gamma4][seed];
        let rep = representative(s, &Scalar::int(u), &Scalar::int(v)).unwrap();
        let p = stratum_of(&rep).unwrap();
        prop_assert_eq!(p.stratum, s);
        prop_assert_eq!(p.equals_gamma1(), v == 0);
        let torus = FrameChange::diagonal(
            [Scalar::int(t), Scalar::int(1)],
            [Scalar::int(1), Scalar::int(t + 1), Scalar::int(2)],
        ).unwrap();
        prop_assert_eq!(stratum_of(&torus.act(&rep)).unwrap(), p);
    }
}
