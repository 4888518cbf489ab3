//! Dense polynomials over F_p, used to pick the modulus and to do arithmetic
//! in contexts built without exp/log tables.

use crate::numtheory::{pow_mod, prime_factors};

/// Coefficients, constant term first. Trailing zeros are allowed in inputs.
pub(crate) type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Remainder of `a` modulo the monic-or-not nonzero polynomial `m`.
fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let m = trim(m.to_vec());
    let mut a = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while a.len() > dm {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            let shift = top - dm;
            for (j, &mj) in m.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - c * mj % p) % p;
            }
        }
        a.pop();
        a = trim(a);
    }
    a
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Multiplication modulo a monic modulus of degree `modulus.len() - 1`.
/// Inputs must already be reduced (length <= degree).
pub(crate) fn mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Poly {
    let deg = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * deg.max(1)];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (deg..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for j in 0..deg {
            prod[k - deg + j] = (prod[k - deg + j] + p - c * modulus[j] % p) % p;
        }
    }
    prod.truncate(deg);
    prod
}

pub(crate) fn pow_mod_poly(base: &[u64], mut exp: u128, modulus: &[u64], p: u64) -> Poly {
    let deg = modulus.len() - 1;
    let mut result = vec![0u64; deg];
    result[0] = 1;
    let mut b = base.to_vec();
    b.resize(deg, 0);
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(&result, &b, modulus, p);
        }
        exp >>= 1;
        if exp > 0 {
            b = mul_mod(&b, &b, modulus, p);
        }
    }
    result
}

/// Rabin's test: `f` (monic, degree N) is irreducible iff x^{p^N} = x mod f and
/// gcd(x^{p^{N/l}} - x, f) = 1 for every prime l | N.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    let mut x = vec![0u64; deg];
    x[1] = 1;
    // frob[k] = x^{p^k} mod f
    let mut frob = Vec::with_capacity(deg + 1);
    frob.push(x.clone());
    for k in 1..=deg {
        let next = pow_mod_poly(&frob[k - 1], p as u128, f, p);
        frob.push(next);
    }
    if frob[deg] != x {
        return false;
    }
    for l in prime_factors(deg as u64) {
        let k = deg / l as usize;
        let mut h = frob[k].clone();
        h[1] = (h[1] + p - 1) % p;
        let g = gcd(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible polynomial of degree `deg`, enumerating the lower
/// coefficient list (constant term first) in lexicographic order.
pub(crate) fn first_irreducible(p: u64, deg: usize) -> Poly {
    let mut lower = vec![0u64; deg];
    loop {
        let mut f = lower.clone();
        f.push(1);
        if lower[0] != 0 || deg == 1 {
            if is_irreducible(&f, p) {
                return f;
            }
        }
        // lexicographic increment: the last coefficient varies fastest
        let mut i = deg;
        loop {
            assert!(i > 0, "an irreducible polynomial exists in every degree");
            i -= 1;
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_over_f3() {
        // x^2 + 1 and x^2 + 2x + 2 are irreducible; x^2 + 2 = (x+1)(x+2) is not
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(is_irreducible(&[2, 2, 1], 3));
        assert!(!is_irreducible(&[2, 0, 1], 3));
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(first_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn brute_force_agreement_degree_three() {
        // a cubic is irreducible iff it has no root
        let p = 5;
        for c0 in 0..p {
            for c1 in 0..p {
                for c2 in 0..p {
                    let f = [c0, c1, c2, 1];
                    let has_root = (0..p).any(|x| (c0 + c1 * x + c2 * x * x + x * x * x) % p == 0);
                    assert_eq!(is_irreducible(&f, p), !has_root, "{f:?}");
                }
            }
        }
    }
}
