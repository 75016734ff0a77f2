//! Characteristic polynomials of integer matrices by reduction modulo
//! word-sized primes and Chinese remaindering.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Characteristic polynomial `det(xI - M)` modulo `p`, ascending
/// coefficients, via similarity reduction to upper Hessenberg form.
pub fn charpoly_mod_p(m: &[Vec<i128>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i128) as u64).collect()).collect();
    let sub = |a: u64, b: u64| if a >= b { a - b } else { a + p - b };
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = powmod(h[k + 1][k], p - 2, p);
        for i in k + 2..n {
            if h[i][k] == 0 {
                continue;
            }
            let f = mulmod(h[i][k], inv, p);
            // row_i -= f * row_{k+1}
            for j in 0..n {
                let t = mulmod(f, h[k + 1][j], p);
                h[i][j] = sub(h[i][j], t);
            }
            // col_{k+1} += f * col_i
            for row in h.iter_mut() {
                let t = mulmod(f, row[i], p);
                row[k + 1] = (row[k + 1] + t) % p;
            }
        }
    }
    // p_0 = 1; p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = sub(next[i], mulmod(h[k][k], c, p));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mulmod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let coef = mulmod(h[i][k], prod, p);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = sub(next[j], mulmod(coef, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Exact characteristic polynomial of an integer matrix, coefficients
/// ascending. `log2_bound` must bound `log2 |c_k|` for every coefficient.
pub fn charpoly_crt(m: &[Vec<i128>], log2_bound: f64) -> Vec<BigInt> {
    let n = m.len();
    let needed_bits = log2_bound + 2.0;
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut candidate = (1u64 << 62) - 57;
    let mut bits = 0.0;
    while bits < needed_bits {
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        let p = candidate;
        candidate -= 2;
        let r = charpoly_mod_p(m, p);
        let pb = BigInt::from(p);
        // x = acc + modulus * t, t = (r - acc) / modulus mod p
        let minv = powmod((&modulus % &pb).to_u64().unwrap(), p - 2, p);
        for (c, &rc) in acc.iter_mut().zip(&r) {
            let cur = (&*c % &pb + &pb) % &pb;
            let diff = (rc as i128 - cur.to_u64().unwrap() as i128).rem_euclid(p as i128) as u64;
            let t = mulmod(diff, minv, p);
            *c += &modulus * BigInt::from(t);
        }
        modulus *= pb;
        bits += (p as f64).log2();
    }
    let half = &modulus >> 1;
    acc.into_iter().map(|c| if c > half { c - &modulus } else { c }).collect()
}
