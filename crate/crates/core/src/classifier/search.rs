//! Randomized falsification oracle: rational unimodular frames plus the
//! weight LP on each transformed support.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bipoly::{BiPoly, FrameChange};
use crate::error::Error;
use crate::scalars::Scalar;
use crate::weightlp::find_destabilizing_weight;

use super::{Certificate, MuSign};

fn unimodular<const N: usize>(rng: &mut ChaCha8Rng) -> [[Scalar; N]; N] {
    let mut l = [[0i64; N]; N];
    let mut u = [[0i64; N]; N];
    for i in 0..N {
        l[i][i] = 1;
        u[i][i] = 1;
        for j in 0..i {
            l[i][j] = rng.gen_range(-3..=3);
            u[j][i] = rng.gen_range(-3..=3);
        }
    }
    let mut perm: Vec<usize> = (0..N).collect();
    perm.shuffle(rng);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| Scalar::int((0..N).map(|k| l[perm[i]][k] * u[k][j]).sum()))
    })
}

/// A random integer frame with determinants ±1.
pub fn random_unimodular_frame(rng: &mut ChaCha8Rng) -> FrameChange {
    let g2 = unimodular::<2>(rng);
    let g3 = unimodular::<3>(rng);
    FrameChange::new(g2, g3).expect("unimodular matrices are invertible")
}

const Y_PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn trial_frame(i: usize, seed: u64) -> FrameChange {
    match i {
        0 => FrameChange::identity(),
        1..=12 => {
            let k = i - 1;
            let px = if k < 6 { [0, 1] } else { [1, 0] };
            FrameChange::permutation(px, Y_PERMS[k % 6])
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            random_unimodular_frame(&mut rng)
        }
    }
}

fn attempt(f: &BiPoly, frame: FrameChange, sign: MuSign) -> Option<Certificate> {
    let support = frame.act(f).simplify().support();
    let w = find_destabilizing_weight(&support, sign == MuSign::Positive).ok()??;
    let cert = Certificate::new(frame, w, sign);
    cert.verify(f).is_ok().then_some(cert)
}

/// The first verifying certificate over `trials` frames: a Positive one if
/// any frame admits it, otherwise a Zero one. Deterministic given the seed.
pub fn random_destabilize_search(f: &BiPoly, trials: usize, seed: u64) -> Result<Option<Certificate>, Error> {
    if trials == 0 {
        return Err(Error::Precondition("trials must be positive".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.bidegree() != (2, 2) {
        return Err(Error::Precondition("bidegree (2,2) expected".into()));
    }
    for sign in [MuSign::Positive, MuSign::Zero] {
        let hit = (0..trials).into_par_iter().map(|i| attempt(f, trial_frame(i, seed), sign)).find_first(Option::is_some);
        if let Some(c) = hit.flatten() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
