//! Exact values: Gaussian integers, roots of unity, and sums of
//! Gaussian multiples of half-integer powers of q.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::gcd;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussianInt {
    pub re: i128,
    pub im: i128,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };

    pub fn new(re: i128, im: i128) -> Self {
        GaussianInt { re, im }
    }

    pub fn from_int(re: i128) -> Self {
        GaussianInt { re, im: 0 }
    }

    /// i^k
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianInt::new(1, 0),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = GaussianInt::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn conj(self) -> Self {
        GaussianInt::new(self.re, -self.im)
    }

    pub fn scale(self, k: i128) -> Self {
        GaussianInt::new(self.re * k, self.im * k)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re as f64, self.im as f64)
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianInt::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianInt::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianInt::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

/// exp(2πi·k/M), kept normalized with 0 ≤ k < M and gcd(k, M) = 1 (M = 1 for the unit).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub k: u64,
    #[serde(rename = "M")]
    pub m: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { k: 0, m: 1 };

    pub fn new(k: i128, m: u64) -> Self {
        assert!(m > 0, "root of unity order must be positive");
        let k = k.rem_euclid(m as i128) as u64;
        let g = gcd(k, m);
        RootOfUnity { k: k / g, m: m / g }
    }

    /// Multiplicative order of the value.
    pub fn order(self) -> u64 {
        self.m
    }

    pub fn is_one(self) -> bool {
        self.m == 1
    }

    pub fn conj(self) -> Self {
        RootOfUnity::new(-(self.k as i128), self.m)
    }

    pub fn pow(self, e: i128) -> Self {
        let k = (self.k as i128 * e.rem_euclid(self.m as i128)) % self.m as i128;
        RootOfUnity::new(k, self.m)
    }

    /// ±1 when real, None otherwise.
    pub fn as_sign(self) -> Option<i8> {
        match self.m {
            1 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Value in Z[i] when the order divides 4.
    pub fn to_gaussian(self) -> Option<GaussianInt> {
        match self.m {
            1 | 2 | 4 => Some(GaussianInt::i_pow((self.k * (4 / self.m)) as i64)),
            _ => None,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * self.k as f64 / self.m as f64)
    }
}

impl Mul for RootOfUnity {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let m = self.m / gcd(self.m, o.m) * o.m;
        let k = self.k as i128 * (m / self.m) as i128 + o.k as i128 * (m / o.m) as i128;
        RootOfUnity::new(k, m)
    }
}

/// A multiplicative character value: a root of unity, or 0 for χ(0) with χ nontrivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharValue {
    Zero,
    Root(RootOfUnity),
}

impl CharValue {
    pub fn is_zero(self) -> bool {
        matches!(self, CharValue::Zero)
    }

    pub fn root(self) -> Option<RootOfUnity> {
        match self {
            CharValue::Zero => None,
            CharValue::Root(r) => Some(r),
        }
    }

    /// 0, ±1 when real-integral; None for a non-real root.
    pub fn as_int(self) -> Option<i8> {
        match self {
            CharValue::Zero => Some(0),
            CharValue::Root(r) => r.as_sign(),
        }
    }

    pub fn to_gaussian(self) -> Option<GaussianInt> {
        match self {
            CharValue::Zero => Some(GaussianInt::ZERO),
            CharValue::Root(r) => r.to_gaussian(),
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            CharValue::Zero => Complex64::new(0.0, 0.0),
            CharValue::Root(r) => r.to_complex(),
        }
    }
}

/// coeff · q^{half_q_exp / 2}
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactGauss {
    #[serde(flatten)]
    pub coeff: GaussianInt,
    pub half_q_exp: u32,
}

impl ExactGauss {
    pub fn new(coeff: GaussianInt, half_q_exp: u32) -> Self {
        ExactGauss { coeff, half_q_exp }
    }

    pub fn to_complex(self, q: u64) -> Complex64 {
        self.coeff.to_complex() * (q as f64).powf(self.half_q_exp as f64 / 2.0)
    }

    /// |value|^2 as an integer power of q times |coeff|^2.
    pub fn norm_sqr(self, q: u64) -> i128 {
        let c = self.coeff.re * self.coeff.re + self.coeff.im * self.coeff.im;
        c * (q as i128).pow(self.half_q_exp)
    }
}

/// Accumulates Σ c_j · q^{h_j/2} with c_j ∈ Z[i] and h_j ≥ −2, exactly.
///
/// Internally stores q·(value) = even + odd·√q with even, odd ∈ Z[i].
#[derive(Clone, Debug)]
pub struct QSurd {
    p: u64,
    s: u32,
    even: GaussianInt,
    odd: GaussianInt,
}

impl QSurd {
    pub fn new(p: u64, s: u32) -> Self {
        QSurd { p, s, even: GaussianInt::ZERO, odd: GaussianInt::ZERO }
    }

    fn q(&self) -> i128 {
        (self.p as i128).pow(self.s)
    }

    pub fn add_term(&mut self, coeff: GaussianInt, half_q_exp: i32) {
        assert!(half_q_exp >= -2, "exponent below q^-1 is not representable");
        let h = (half_q_exp + 2) as u32;
        let scaled = coeff.scale(self.q().pow(h / 2));
        if h % 2 == 0 {
            self.even = self.even + scaled;
        } else {
            self.odd = self.odd + scaled;
        }
    }

    pub fn add_int(&mut self, k: i128) {
        self.add_term(GaussianInt::from_int(k), 0);
    }

    /// The value as a rational integer, or `NonIntegerResult`.
    pub fn to_integer(&self) -> Result<i128> {
        let mut even = self.even;
        let mut odd = self.odd;
        if self.s % 2 == 0 {
            even = even + odd.scale((self.p as i128).pow(self.s / 2));
            odd = GaussianInt::ZERO;
        }
        if !odd.is_zero() {
            return Err(Error::NonIntegerResult(format!(
                "irrational part {}+{}i times sqrt(q)",
                odd.re, odd.im
            )));
        }
        if even.im != 0 {
            return Err(Error::NonIntegerResult(format!("imaginary part {}", even.im)));
        }
        let q = self.q();
        if even.re % q != 0 {
            return Err(Error::NonIntegerResult(format!("{} is not divisible by q", even.re)));
        }
        Ok(even.re / q)
    }

    pub fn to_complex(&self) -> Complex64 {
        let q = self.q() as f64;
        (self.even.to_complex() + self.odd.to_complex() * q.sqrt()) / q
    }
}

/// τ = 1 for p ≡ 1 (mod 4), i for p ≡ 3 (mod 4).
pub fn tau(p: u64) -> GaussianInt {
    if p % 4 == 1 {
        GaussianInt::ONE
    } else {
        GaussianInt::I
    }
}

/// τ^k as an element of Z[i].
pub fn tau_pow(p: u64, k: u64) -> GaussianInt {
    if p % 4 == 1 {
        GaussianInt::ONE
    } else {
        GaussianInt::i_pow((k % 4) as i64)
    }
}

/// (−1)^k
pub fn sign_pow(k: u64) -> i128 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn roots_normalize() {
        assert_eq!(RootOfUnity::new(6, 8), RootOfUnity { k: 3, m: 4 });
        assert_eq!(RootOfUnity::new(-1, 4), RootOfUnity { k: 3, m: 4 });
        assert_eq!(RootOfUnity::new(8, 8), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(1, 4).to_gaussian(), Some(GaussianInt::I));
        assert_eq!(RootOfUnity::new(1, 3).to_gaussian(), None);
    }

    #[test]
    fn surd_cancels_half_powers() {
        // q = 3: 2·3^{3/2} − 2·3^{1/2}·3 + 5·3^{-1}·3 = 5
        let mut s = QSurd::new(3, 1);
        s.add_term(GaussianInt::from_int(2), 3);
        s.add_term(GaussianInt::from_int(-6), 1);
        s.add_term(GaussianInt::from_int(15), -2);
        assert_eq!(s.to_integer().unwrap(), 5);
        let mut t = QSurd::new(3, 1);
        t.add_term(GaussianInt::ONE, 1);
        assert!(matches!(t.to_integer(), Err(Error::NonIntegerResult(_))));
        // q = 9: sqrt(q) = 3 folds into the integer part
        let mut u = QSurd::new(3, 2);
        u.add_term(GaussianInt::ONE, 1);
        assert_eq!(u.to_integer().unwrap(), 3);
    }

    #[test]
    fn serialization_shapes() {
        let g = ExactGauss::new(GaussianInt::new(3, 0), 2);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"re":3,"im":0,"half_q_exp":2}"#);
        let r = RootOfUnity::new(1, 4);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"k":1,"M":4}"#);
    }

    proptest! {
        #[test]
        fn root_product_is_exact(k1 in 0i128..100, m1 in 1u64..40, k2 in 0i128..100, m2 in 1u64..40) {
            let a = RootOfUnity::new(k1, m1);
            let b = RootOfUnity::new(k2, m2);
            let c = a * b;
            let diff = c.to_complex() - a.to_complex() * b.to_complex();
            prop_assert!(diff.norm() < 1e-9);
            prop_assert_eq!(crate::numtheory::lcm(a.m, b.m) % c.m, 0);
            prop_assert!((c.to_complex().norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn gaussian_ring_axioms(a in -50i128..50, b in -50i128..50, c in -50i128..50, d in -50i128..50, e in -50i128..50, f in -50i128..50) {
            let x = GaussianInt::new(a, b);
            let y = GaussianInt::new(c, d);
            let z = GaussianInt::new(e, f);
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(x - x, GaussianInt::ZERO);
        }
    }
}
