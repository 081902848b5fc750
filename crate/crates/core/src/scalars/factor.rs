//! Factorization over the rationals: squarefree split, then Berlekamp–Zassenhaus
//! (Cantor–Zassenhaus modulo a small prime, Hensel lifting, subset recombination).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{uv_squarefree_decomposition, UniPoly};
use super::{Poly, Rational};
use crate::error::Error;

/// Complete factorization into monic irreducibles with multiplicities.
/// Factors are sorted by degree, then coefficients.
pub fn uv_factorize(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>, Error> {
    uv_factorize_with_cap(p, 12)
}

pub fn uv_factorize_with_cap(p: &UniPoly, cap: usize) -> Result<Vec<(UniPoly, usize)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg0() > cap {
        return Err(Error::DegreeCap { degree: p.deg0(), cap });
    }
    let mut out = Vec::new();
    for (sq, m) in uv_squarefree_decomposition(p)? {
        for g in factor_squarefree_int(&to_primitive_int(&sq)) {
            out.push((from_int_poly(&g).monic(), m));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg0()
            .cmp(&b.0.deg0())
            .then_with(|| cmp_coeffs(a.0.coeffs(), b.0.coeffs()))
    });
    Ok(out)
}

fn cmp_coeffs(a: &[Rational], b: &[Rational]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

type IntPoly = Vec<BigInt>;

fn trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn to_primitive_int(p: &UniPoly) -> IntPoly {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let v: IntPoly = p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    primitive(v)
}

fn primitive(v: IntPoly) -> IntPoly {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return v;
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

fn from_int_poly(v: &IntPoly) -> UniPoly {
    Poly::new(v.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact division of integer polynomials with monic divisor.
fn int_div_monic(a: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut rem = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    rem.iter().all(|c| c.is_zero()).then(|| trim(q))
}

/// Irreducible primitive factors of a squarefree primitive integer polynomial.
fn factor_squarefree_int(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![f.clone()];
    }
    // x-content first: f(0) = 0 means t | f.
    if f[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_int(&f[1..].to_vec()));
        return out;
    }
    // Monic transform F(x) = lc^(n-1) f(x/lc).
    let lc = f[n].clone();
    // F_i = f_i · lc^(n-1-i), F_n = 1
    let mut monic_f = vec![BigInt::one(); n + 1];
    let mut pw = BigInt::one();
    for i in (0..n).rev() {
        monic_f[i] = &f[i] * &pw;
        pw *= &lc;
    }
    let factors = factor_monic_squarefree(&monic_f);
    factors
        .into_iter()
        .map(|g| {
            // g(lc·x), then primitive part
            let mut pw = BigInt::one();
            let v: IntPoly = g
                .iter()
                .map(|c| {
                    let r = c * &pw;
                    pw *= &lc;
                    r
                })
                .collect();
            primitive(v)
        })
        .collect()
}

fn factor_monic_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let (p, modp) = choose_prime(f);
    if modp.len() == 1 {
        return vec![f.clone()];
    }
    let bound = coefficient_bound(f);
    let mut k = 1u32;
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &modp, p, k);
    recombine(f, lifted, &pk)
}

/// 2·2^n·‖f‖₂ + 1, a safe bound on twice the coefficients of any factor.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let root = norm2.sqrt() + BigInt::one();
    (root << (n + 1)) + BigInt::one()
}

const SMALL_PRIMES_START: u64 = 101;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn choose_prime(f: &IntPoly) -> (u64, Vec<Vec<u64>>) {
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    let mut p = SMALL_PRIMES_START;
    while tried < 5 {
        p += 1;
        if !is_prime(p) {
            continue;
        }
        let fp = reduce_mod(f, p);
        if fp.len() != f.len() {
            continue;
        }
        let d = mp_derivative(&fp, p);
        if mp_gcd(&fp, &d, p).len() != 1 {
            continue;
        }
        tried += 1;
        let fac = mp_factor(&fp, p);
        if best.as_ref().is_none_or(|(_, b)| fac.len() < b.len()) {
            best = Some((p, fac));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    best.unwrap()
}

fn reduce_mod(f: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let v: Vec<u64> = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    mp_trim(v)
}

// ---- arithmetic in F_p[x] ----

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn mp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    mp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn mp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    mp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn mp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    mp_trim(out)
}

fn mp_divrem(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dd = d.len() - 1;
    if a.len() <= dd {
        return (Vec::new(), a.to_vec());
    }
    let inv = invmod(d[dd], p);
    let mut rem = a.to_vec();
    let mut q = vec![0u64; a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = mulmod(rem[k + dd], inv, p);
        if c == 0 {
            continue;
        }
        for (j, &dj) in d.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - mulmod(c, dj, p)) % p;
        }
        q[k] = c;
    }
    rem.truncate(dd);
    (mp_trim(q), mp_trim(rem))
}

fn mp_monic(a: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() {
        return Vec::new();
    }
    let inv = invmod(*a.last().unwrap(), p);
    a.iter().map(|&c| mulmod(c, inv, p)).collect()
}

fn mp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = mp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    mp_monic(&a, p)
}

/// s·a + t·b = 1 for coprime a, b.
fn mp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = mp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = mp_sub(&s0, &mp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = mp_sub(&t0, &mp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = invmod(r0[0], p);
    (
        s0.iter().map(|&c| mulmod(c, inv, p)).collect(),
        t0.iter().map(|&c| mulmod(c, inv, p)).collect(),
    )
}

fn mp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    mp_trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect())
}

fn mp_powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = mp_divrem(base, m, p).1;
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            result = mp_divrem(&mp_mul(&result, &b, p), m, p).1;
        }
        b = mp_divrem(&mp_mul(&b, &b, p), m, p).1;
    }
    result
}

/// Monic irreducible factors of a squarefree polynomial over F_p (p odd).
fn mp_factor(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let f = mp_monic(f, p);
    let mut out = Vec::new();
    // distinct-degree factorization
    let mut rest = f.clone();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 0;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push((rest.clone(), rest.len() - 1));
            break;
        }
        h = mp_powmod(&h, &pb, &rest, p);
        let g = mp_gcd(&mp_sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            rest = mp_divrem(&rest, &g, p).0;
            h = mp_divrem(&h, &rest, p).1;
            out.push((g, d));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut irreducible = Vec::new();
    for (g, d) in out {
        equal_degree_split(&g, d, p, &mut rng, &mut irreducible);
    }
    irreducible.sort();
    irreducible
}

fn equal_degree_split(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u64>>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.to_vec());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a: Vec<u64> = mp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = mp_sub(&mp_powmod(&a, &e, g, p), &[1], p);
        let h = mp_gcd(&b, g, p);
        if h.len() > 1 && h.len() < g.len() {
            let q = mp_divrem(g, &h, p).0;
            equal_degree_split(&h, d, p, rng, out);
            equal_degree_split(&mp_monic(&q, p), d, p, rng, out);
            return;
        }
    }
}

// ---- Hensel lifting ----

fn to_big(a: &[u64]) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn big_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn big_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn big_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn from_big_mod_p(a: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    mp_trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Lift f ≡ ∏ factors (mod p) to a factorization modulo p^k, all monic.
fn hensel_lift(f: &IntPoly, factors: &[Vec<u64>], p: u64, k: u32) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(k);
        return vec![big_mod(f, &m)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left.iter().fold(vec![1u64], |acc, x| mp_mul(&acc, x, p));
    let h0 = right.iter().fold(vec![1u64], |acc, x| mp_mul(&acc, x, p));
    let (g, h) = lift_pair(f, &g0, &h0, p, k);
    let mut out = hensel_lift(&g, left, p, k);
    out.extend(hensel_lift(&h, right, p, k));
    out
}

fn lift_pair(f: &IntPoly, g0: &[u64], h0: &[u64], p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (s, t) = mp_ext_gcd(g0, h0, p);
    let mut g = to_big(g0);
    let mut h = to_big(h0);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    for _ in 1..k {
        let e = big_sub(f, &int_mul(&g, &h));
        let e: IntPoly = e.iter().map(|c| c / &m).collect();
        let ep = from_big_mod_p(&e, p);
        let et = mp_mul(&ep, &t, p);
        let (q, dg) = mp_divrem(&et, g0, p);
        let dh = mp_add(&mp_mul(&ep, &s, p), &mp_mul(&q, h0, p), p);
        let dh = mp_divrem(&dh, h0, p).1;
        let dg_b: IntPoly = to_big(&dg).iter().map(|c| c * &m).collect();
        let dh_b: IntPoly = to_big(&dh).iter().map(|c| c * &m).collect();
        g = big_add(&g, &dg_b);
        h = big_add(&h, &dh_b);
        m *= &pb;
        g = big_mod(&g, &m);
        h = big_mod(&h, &m);
    }
    (g, h)
}

fn symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, m: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), s) {
            let prod = subset.iter().fold(vec![BigInt::one()], |acc, &i| big_mod(&int_mul(&acc, &lifted[i]), m));
            let cand = symmetric(&prod, m);
            if !rest[0].is_zero() && !cand[0].is_zero() && !(&rest[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = int_div_monic(&rest, &cand) {
                out.push(cand);
                rest = q;
                let keep: Vec<IntPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
