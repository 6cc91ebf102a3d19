//! Independent reference computations and random generators shared by the
//! integration tests. Nothing here calls into the library's algorithms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

use eudoxus::{CfSeq, EndoNode, Fuel};

/// Floor of the square root.
pub fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

/// `floor(sqrt(2) * 10^digits)`.
pub fn sqrt2_scaled(digits: u32) -> BigInt {
    isqrt(&(BigInt::from(2) * BigInt::from(10).pow(2 * digits)))
}

/// Continued fraction of `(a*sqrt(2) + b) / c` by exact integer floors.
pub fn surd_cf(mut a: BigInt, mut b: BigInt, mut c: BigInt, terms: usize) -> Vec<BigInt> {
    assert!(!c.is_zero());
    let mut out = Vec::new();
    for _ in 0..terms {
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        // floor(a*sqrt2) = sign-aware isqrt(2a^2)
        let root = isqrt(&(BigInt::from(2) * &a * &a));
        let floor_a_sqrt2 = if a.is_negative() { -root - 1 } else { root };
        let t = (floor_a_sqrt2 + &b).div_floor(&c);
        out.push(t.clone());
        // 1 / ((a*sqrt2 + b - t*c)/c) = c*(a*sqrt2 - b') / (2a^2 - b'^2)
        let b1 = &b - &t * &c;
        let den = BigInt::from(2) * &a * &a - &b1 * &b1;
        let (na, nb) = (&c * &a, -(&c * &b1));
        let g = na.gcd(&nb).gcd(&den);
        a = na / &g;
        b = nb / &g;
        c = den / &g;
    }
    out
}

/// Euclid's algorithm on `p/q` with `q > 0`.
pub fn euclid_cf(mut p: BigInt, mut q: BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    while !q.is_zero() {
        let (t, r) = p.div_mod_floor(&q);
        out.push(t);
        p = q;
        q = r;
    }
    out
}

/// `a^-1 mod m` by brute force.
pub fn brute_inverse(a: u64, m: u64) -> u64 {
    (0..m)
        .find(|x| (a as u128 * *x as u128) % m as u128 == 1)
        .expect("invertible")
}

/// `s` with `s^2 = 2 mod 7^k` and `s = 3 mod 7`, found digit by digit.
pub fn hensel_sqrt2_mod_7(k: u32) -> u64 {
    let mut s = 3u64;
    let mut m = 7u64;
    for _ in 1..k {
        let next = m * 7;
        s = (0..7)
            .map(|d| s + d * m)
            .find(|c| (c * c) % next == 2)
            .expect("lift exists");
        m = next;
    }
    s
}

/// Base-`p` digits, least significant first, padded to `len`.
pub fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

pub fn random_leaf(rng: &mut impl Rng) -> EndoNode {
    match rng.gen_range(0..3) {
        0 => EndoNode::int(rng.gen_range(-50i64..=50)),
        1 => {
            let p = rng.gen_range(-50i64..=50);
            let q = rng.gen_range(1i64..=50);
            EndoNode::rat(p, q).unwrap()
        }
        _ => {
            let len = rng.gen_range(1..=6);
            let mut terms = vec![rng.gen_range(-5i64..=5)];
            terms.extend((1..len).map(|_| rng.gen_range(1i64..=50)));
            EndoNode::cf(CfSeq::from_i64s(&terms).unwrap())
        }
    }
}

/// Random expression DAG of the given maximal depth; shared subterms appear
/// when a child is reused.
pub fn random_dag(rng: &mut impl Rng, depth: u32) -> EndoNode {
    if depth == 0 || rng.gen_bool(0.25) {
        return random_leaf(rng);
    }
    let f = random_dag(rng, depth - 1);
    match rng.gen_range(0..5) {
        0 => {
            let g = if rng.gen_bool(0.2) {
                f.clone()
            } else {
                random_dag(rng, depth - 1)
            };
            &f + &g
        }
        1 => -&f,
        2 => {
            let g = random_dag(rng, depth - 1);
            &f * &g
        }
        3 => eudoxus::real::invert(&f, Fuel::new(24).unwrap()).unwrap_or(f),
        _ => {
            let g = random_dag(rng, depth - 1);
            &f - &g
        }
    }
}
