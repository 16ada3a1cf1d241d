//! Exact rational linear algebra: characteristic polynomials and
//! determinants without rounding.
//!
//! [`char_poly_exact`] clears denominators, computes the characteristic
//! polynomial of the integer matrix modulo enough word-sized primes (Hessenberg
//! reduction over each prime field) and lifts the coefficients by Chinese
//! remaindering against a Hadamard-style coefficient bound. It runs in
//! `O(n^3)` per prime, fast enough for orders in the low hundreds.
//! [`char_poly_faddeev_leverrier`] and [`det_bareiss`] are slower
//! fraction-preserving routes kept as independent cross-checks.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::matrix::{Matrix, Scalar, SymMatrix};
use crate::poly::Polynomial;

/// Exact characteristic polynomial `det(xI - M)`, monic of degree `n`.
pub fn char_poly_exact(m: &SymMatrix<BigRational>) -> Polynomial<BigRational> {
    char_poly_exact_general(m.as_matrix())
}

/// Same as [`char_poly_exact`] for a square, not necessarily symmetric, matrix.
pub fn char_poly_exact_general(m: &Matrix<BigRational>) -> Polynomial<BigRational> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let (b, denom) = clear_denominators(m);
    let int_coeffs = char_poly_integer(&b, n);
    // charpoly(L*M) has x^k coefficient L^(n-k) * c_k(M).
    let mut out = Vec::with_capacity(n + 1);
    for (k, c) in int_coeffs.into_iter().enumerate() {
        let scale = num_traits::pow(denom.clone(), n - k);
        out.push(BigRational::new(c, scale));
    }
    Polynomial::new(out)
}

fn clear_denominators(m: &Matrix<BigRational>) -> (Vec<BigInt>, BigInt) {
    let denom = m
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints = m
        .entries()
        .iter()
        .map(|v| v.numer() * (&denom / v.denom()))
        .collect();
    (ints, denom)
}

/// Log2 bound on the absolute value of every characteristic polynomial
/// coefficient of an integer matrix given in row-major order.
fn coefficient_bits(b: &[BigInt], n: usize) -> f64 {
    // |c_k| <= C(n,k) * max over k-subsets of the product of column norms.
    let mut total = n as f64;
    for j in 0..n {
        let sq: f64 = (0..n)
            .map(|i| {
                let v = b[i * n + j].to_f64().unwrap_or(f64::MAX);
                v * v
            })
            .sum();
        if sq > 1.0 {
            total += 0.5 * sq.log2();
        }
    }
    total + 2.0
}

fn char_poly_integer(b: &[BigInt], n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let needed = coefficient_bits(b, n);
    let mut primes = Vec::new();
    let mut bits = 0.0;
    let mut idx = 0;
    while bits < needed + 1.0 {
        let p = word_prime(idx);
        bits += (p as f64).log2();
        primes.push(p);
        idx += 1;
    }
    let residues: Vec<Vec<u64>> = primes
        .par_iter()
        .map(|&p| {
            let bp = BigInt::from(p);
            let a: Vec<u64> = b
                .iter()
                .map(|v| v.mod_floor(&bp).to_u64().expect("residue fits in u64"))
                .collect();
            char_poly_mod(a, n, p)
        })
        .collect();

    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); n + 1];
    for (p, res) in primes.iter().zip(&residues) {
        let bp = BigInt::from(*p);
        let inv = BigInt::from(inv_mod(
            modulus.mod_floor(&bp).to_u64().unwrap(),
            *p,
        ));
        for (a, &r) in acc.iter_mut().zip(res) {
            let diff = (BigInt::from(r) - &*a).mod_floor(&bp);
            let t = (diff * &inv).mod_floor(&bp);
            *a += &modulus * t;
        }
        modulus *= bp;
    }
    let half = &modulus >> 1usize;
    for a in &mut acc {
        if *a > half {
            *a -= &modulus;
        }
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Characteristic polynomial coefficients (ascending) of an `n x n` matrix
/// over GF(p), via reduction to upper Hessenberg form.
fn char_poly_mod(mut h: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    let at = |i: usize, j: usize| i * n + j;
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[at(i, m - 1)] != 0) else {
            continue;
        };
        if piv != m {
            for k in 0..n {
                h.swap(at(piv, k), at(m, k));
            }
            for k in 0..n {
                h.swap(at(k, piv), at(k, m));
            }
        }
        let tinv = inv_mod(h[at(m, m - 1)], p);
        for j in m + 1..n {
            let hj = h[at(j, m - 1)];
            if hj == 0 {
                continue;
            }
            let u = mul_mod(hj, tinv, p);
            for k in 0..n {
                let sub = mul_mod(u, h[at(m, k)], p);
                h[at(j, k)] = (h[at(j, k)] + p - sub) % p;
            }
            for k in 0..n {
                let add = mul_mod(u, h[at(k, j)], p);
                h[at(k, m)] = (h[at(k, m)] + add) % p;
            }
        }
    }

    // polys[k] is the characteristic polynomial of the leading k x k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        let diag = h[at(m, m)];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - mul_mod(diag, c, p)) % p;
        }
        let mut t = 1u64;
        for i in 1..=m {
            t = mul_mod(t, h[at(m - i + 1, m - i)], p);
            let coef = mul_mod(t, h[at(m - i, m)], p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i].iter().enumerate() {
                next[k] = (next[k] + p - mul_mod(coef, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// The `idx`-th prime below 2^31, counting downward.
fn word_prime(idx: usize) -> u64 {
    let mut cache = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    let mut candidate = cache.last().copied().unwrap_or((1 << 31) + 1);
    while cache.len() <= idx {
        candidate -= 2;
        if is_prime(candidate) {
            cache.push(candidate);
        }
    }
    cache[idx]
}

fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    if v.is_multiple_of(2) {
        return v == 2;
    }
    let mut d = 3;
    while d * d <= v {
        if v.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Faddeev–LeVerrier recurrence over the rationals: `O(n^4)` exact
/// operations, intended for small matrices.
pub fn char_poly_faddeev_leverrier(a: &Matrix<BigRational>) -> Polynomial<BigRational> {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let id = Matrix::<BigRational>::identity(n);
    let mut mk = Matrix::<BigRational>::zeros(n, n);
    for k in 1..=n {
        mk = a.matmul(&mk).add(&id.scale(&coeffs[n - k + 1]));
        let tr = a.matmul(&mk).trace();
        coeffs[n - k] = -tr / BigRational::from_i64(k as i64);
    }
    Polynomial::new(coeffs)
}

/// Determinant by fraction-free (Bareiss) elimination on the integer
/// matrix obtained after clearing denominators.
pub fn det_bareiss(a: &Matrix<BigRational>) -> BigRational {
    assert!(a.is_square());
    let n = a.rows();
    if n == 0 {
        return BigRational::one();
    }
    let (mut m, denom) = clear_denominators(a);
    let at = |i: usize, j: usize| i * n + j;
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[at(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[at(i, k)].is_zero()) else {
                return BigRational::zero();
            };
            for j in 0..n {
                m.swap(at(k, j), at(swap, j));
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[at(i, j)] * &m[at(k, k)] - &m[at(i, k)] * &m[at(k, j)];
                m[at(i, j)] = v / &prev;
            }
        }
        prev = m[at(k, k)].clone();
    }
    let det_int = sign * &m[at(n - 1, n - 1)];
    BigRational::new(det_int, num_traits::pow(denom, n))
}

/// Parses `p/q`, an integer, or a finite decimal into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let v = BigRational::new(digits, num_traits::pow(BigInt::from(10), frac.len()));
    Some(if neg { -v } else { v })
}

/// Exact rational value of a finite `f64`.
pub fn rational_from_f64(v: f64) -> Option<BigRational> {
    BigRational::from_float(v)
}
