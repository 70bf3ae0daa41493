//! Rational roots of univariate polynomials.
//!
//! The squarefree part is taken over QQ, reduced modulo a prime where it stays
//! squarefree, and each root mod p is lifted by Newton iteration to a modulus
//! large enough for rational reconstruction. Every candidate is verified exactly.

use num_bigint::{BigInt, Sign};
use num_integer::{Integer};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactmath::is_prime;

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn derivative(p: &QPoly) -> QPoly {
    p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(k.into())).collect()
}

fn rem(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &f * c;
        }
        trim(&mut r);
    }
    r
}

fn quot(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &f * c;
        }
        q[shift] = f;
        trim(&mut r);
    }
    trim(&mut q);
    q
}

fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn to_primitive_integers(p: &QPoly) -> Vec<BigInt> {
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

fn mod_poly(p: &[BigInt], m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut v: Vec<u64> = p.iter().map(|c| c.mod_floor(&mb).to_u64().unwrap()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let inv = fp_pow(*b.last().unwrap(), p - 2, p);
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() * inv % p;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] = (r[i + shift] + p - f * c % p) % p;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_squarefree(f: &[u64], p: u64) -> bool {
    let df: Vec<u64> = {
        let mut d: Vec<u64> = f.iter().enumerate().skip(1).map(|(k, c)| (k as u64 % p) * c % p).collect();
        while d.last() == Some(&0) {
            d.pop();
        }
        d
    };
    if df.is_empty() {
        return false;
    }
    let (mut a, mut b) = (f.to_vec(), df);
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn eval_mod(p: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn eval_exact(p: &[BigInt], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

fn reconstruct(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Distinct rational roots of `sum coeffs[k] t^k`, in increasing order.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut f: QPoly = coeffs.to_vec();
    trim(&mut f);
    let mut roots = Vec::new();
    if f.len() <= 1 {
        return roots;
    }
    if f[0].is_zero() {
        roots.push(BigRational::zero());
        let lead_zeros = f.iter().take_while(|c| c.is_zero()).count();
        f.drain(..lead_zeros);
    }
    if f.len() > 1 {
        let g = gcd(&f, &derivative(&f));
        let sqfree = if g.len() > 1 { quot(&f, &g) } else { f };
        let ints = to_primitive_integers(&sqfree);
        roots.extend(lifted_roots(&ints));
    }
    roots.sort();
    roots.dedup();
    roots
}

fn lifted_roots(f: &[BigInt]) -> Vec<BigRational> {
    if f.len() == 2 {
        return vec![BigRational::new(-f[0].clone(), f[1].clone())];
    }
    let lc = f.last().unwrap().abs();
    let c0 = f[0].abs();
    let big = lc.clone().max(c0);
    let needed: BigInt = &big * &big * 2u32;
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();

    let mut p = 1009u64;
    loop {
        let fp = mod_poly(f, p);
        if fp.len() == f.len() && fp_squarefree(&fp, p) {
            break;
        }
        p += 2;
        while !is_prime(p) {
            p += 2;
        }
    }
    let pb = BigInt::from(p);
    let fp = mod_poly(f, p);
    let mut out = Vec::new();
    for r0 in 0..p {
        let v = fp.iter().rev().fold(0u64, |acc, c| (acc * r0 + c) % p);
        if v != 0 {
            continue;
        }
        let mut r = BigInt::from(r0);
        let mut m = pb.clone();
        while m <= needed {
            m = &m * &m;
            let fr = eval_mod(f, &r, &m);
            let dfr = eval_mod(&df, &r, &m);
            let inv = dfr.extended_gcd(&m);
            debug_assert!(inv.gcd.is_one(), "simple root mod p stays simple");
            r = (&r - fr * inv.x).mod_floor(&m);
        }
        if let Some(q) = reconstruct(&r, &m).or_else(|| {
            let shifted = &r - &m;
            (shifted.sign() == Sign::Minus).then(|| reconstruct(&shifted.abs(), &m).map(|q| -q)).flatten()
        }) {
            if eval_exact(f, &q).is_zero() {
                out.push(q);
            }
        }
    }
    out
}
