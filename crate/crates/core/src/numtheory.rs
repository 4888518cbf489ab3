//! Small integer helpers: primality, trial-division factorization, gcd.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Distinct prime factors of `n` in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = (base % m) as u128;
    let mut r = 1u128;
    let m = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    r as u64
}

/// Splits a prime power `q = p^s` into `(p, s)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let fs = prime_factors(q);
    if fs.len() != 1 {
        return None;
    }
    let p = fs[0];
    let mut s = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        s += 1;
    }
    Some((p, s))
}

/// Smallest `r >= 1` with `d | p^r + 1`, if any. Only meaningful for `d > 2`.
pub fn minimal_admissible_exponent(d: u64, p: u64) -> Option<u32> {
    if d <= 2 {
        return None;
    }
    let target = d - 1;
    let mut acc = p % d;
    // p^r mod d is periodic with period dividing d - 1 once gcd(p, d) = 1.
    for r in 1..=d as u32 {
        if acc == target {
            return Some(r);
        }
        acc = (acc as u128 * p as u128 % d as u128) as u64;
    }
    None
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(3) && is_prime(13) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_factors(80), vec![2, 5]);
        assert_eq!(prime_factors(728), vec![2, 7, 13]);
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn admissible_exponents() {
        assert_eq!(minimal_admissible_exponent(4, 3), Some(1));
        assert_eq!(minimal_admissible_exponent(5, 3), Some(2));
        // 7^r + 1 = 2 mod 3 for every r
        assert_eq!(minimal_admissible_exponent(3, 7), None);
        assert_eq!(minimal_admissible_exponent(2, 3), None);
    }
}
