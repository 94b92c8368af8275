//! Exact integer combinatorics.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n!!`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial with signed arguments, zero outside `0 ≤ k ≤ n`.
pub fn binomial_i(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Stirling numbers of the second kind `S(n, k)`.
pub fn stirling2(n: u64, k: u64) -> BigUint {
    let mut row = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = vec![BigUint::zero(); i as usize + 1];
        for j in 1..=i as usize {
            let keep = if j < row.len() { &row[j] * j } else { BigUint::zero() };
            next[j] = keep + &row[j - 1];
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

pub fn bell(n: u64) -> BigUint {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

/// Partitions of `n`; with `p > 0`, only `p`-regular ones (no part repeated `p` times).
pub fn partition_count(n: u64, p: u64) -> u64 {
    fn rec(n: u64, max: u64, p: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for part in (1..=max.min(n)).rev() {
            let max_mult = if p > 0 { (p - 1).min(n / part) } else { n / part };
            for mult in 1..=max_mult {
                total += rec(n - part * mult, part - 1, p);
            }
        }
        total
    }
    rec(n, n, p)
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Least `r` with `r^k ≥ x`, i.e. `⌈x^{1/k}⌉` for `k ≥ 1`.
pub fn ceil_root(x: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1);
    if x.is_zero() {
        return BigUint::zero();
    }
    let mut r = x.nth_root(k);
    if r.pow(k) < *x {
        r += 1u32;
    }
    r
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Prime factorization as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(catalan(12), BigUint::from(208012u32));
        assert_eq!(double_factorial(11), BigUint::from(10395u32));
        assert_eq!(double_factorial(-1), BigUint::one());
        assert_eq!(bell(8), BigUint::from(4140u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(binomial(24, 12), BigUint::from(2704156u32));
        assert_eq!(binomial_i(3, -1), BigUint::zero());
    }

    #[test]
    fn partitions() {
        assert_eq!(partition_count(4, 0), 5);
        assert_eq!(partition_count(4, 2), 2); // 4, 3+1
        assert_eq!(partition_count(3, 3), 2); // 3, 2+1
        assert_eq!(partition_count(0, 0), 1);
    }

    #[test]
    fn roots_and_numbers() {
        assert_eq!(ceil_root(&BigUint::from(3u32), 6), BigUint::from(2u32));
        assert_eq!(ceil_root(&BigUint::from(64u32), 3), BigUint::from(4u32));
        assert_eq!(ceil_root(&BigUint::from(65u32), 3), BigUint::from(5u32));
        assert_eq!(isqrt(24), 4);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }
}
