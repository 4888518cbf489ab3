//! Multiplicative and additive characters of F_{q^n} and F_q, Gauss sums,
//! admissibility and the θ constant.
//!
//! χ_m = χ_{q^n−1}^{(q^n−1)/m} where χ_{q^n−1}(g) = exp(2πi/(q^n−1)) for the
//! context generator g. On F_q the reference generator is h = g^{(q^n−1)/(q−1)}.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{sign_pow, tau_pow, CharValue, ExactGauss, GaussianInt, RootOfUnity};
use crate::field::{FieldContext, FieldElement};
use crate::numtheory::{checked_pow, gcd, minimal_admissible_exponent};

/// Which field a character or Gauss sum lives on: F_{q^n} or F_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Full,
    Subfield,
}

fn check_order(ctx: &FieldContext, m: u64) -> Result<()> {
    let order = ctx.group_order();
    if m == 0 || order % m != 0 {
        return Err(Error::OrderDoesNotDivide { m, group_order: order });
    }
    Ok(())
}

/// χ_m^ell(x). χ(0) is 0 for a nontrivial power and 1 for the trivial one.
pub fn mult_char_eval(ctx: &FieldContext, m: u64, ell: i64, x: FieldElement) -> Result<CharValue> {
    check_order(ctx, m)?;
    let ell = ell.rem_euclid(m as i64) as i128;
    if x.is_zero() {
        return Ok(if ell == 0 { CharValue::Root(RootOfUnity::ONE) } else { CharValue::Zero });
    }
    let k = ctx.log_mod(x, m)? as i128;
    Ok(CharValue::Root(RootOfUnity::new(ell * k, m)))
}

/// χ_m^ell restricted to F_q, computed through the subfield logarithm:
/// χ_m^ell(h^t) = exp(2πi·ell·t·T/m) with T = (q^n−1)/(q−1).
pub fn restricted_char_eval(ctx: &FieldContext, m: u64, ell: i64, x: FieldElement) -> Result<CharValue> {
    check_order(ctx, m)?;
    if !ctx.is_in_subfield(x) {
        return Err(Error::NotInSubfield);
    }
    let ell = ell.rem_euclid(m as i64) as i128;
    if x.is_zero() {
        return Ok(if ell == 0 { CharValue::Root(RootOfUnity::ONE) } else { CharValue::Zero });
    }
    let step = ctx.subfield_step();
    let g = gcd(m, step);
    let big_m = m / g;
    let t = ctx.subfield_log(x)? as i128;
    Ok(CharValue::Root(RootOfUnity::new(ell * t * (step / g) as i128, big_m)))
}

/// ψ(x) = ζ_p^{Tr_{F_{q^n}/F_p}(x)} at the full level, ψ̃ with Tr_{F_q/F_p} on F_q.
pub fn additive_char_eval(ctx: &FieldContext, x: FieldElement, level: Level) -> Result<RootOfUnity> {
    let t = match level {
        Level::Full => ctx.absolute_trace(x),
        Level::Subfield => ctx.subfield_absolute_trace(x)?,
    };
    Ok(RootOfUnity::new(t as i128, ctx.p()))
}

fn unit_table(m: u64) -> Vec<Complex64> {
    (0..m)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / m as f64))
        .collect()
}

/// Exponent e with χ_m^ell = χ_{q^n−1}^e.
fn full_exponent(ctx: &FieldContext, m: u64, ell: i64) -> u64 {
    let order = ctx.group_order();
    (ell.rem_euclid(m as i64) as u128 * (order / m) as u128 % order as u128) as u64
}

/// Σ_{x≠0} χ_m^ell(x)·ψ(x) by direct summation (floating point).
pub fn gauss_sum_direct(ctx: &FieldContext, m: u64, ell: i64, level: Level) -> Result<Complex64> {
    check_order(ctx, m)?;
    gauss_sum_direct_exp(ctx, full_exponent(ctx, m, ell), level)
}

/// Direct Gauss sum of χ_{q^n−1}^e (level `Full`) or of its restriction to
/// F_q, h^t ↦ exp(2πi·e·t/(q−1)) (level `Subfield`).
pub fn gauss_sum_direct_exp(ctx: &FieldContext, e: u64, level: Level) -> Result<Complex64> {
    let add = unit_table(ctx.p());
    match level {
        Level::Full => {
            ctx.require_tables()?;
            let order = ctx.group_order();
            let g = gcd(e % order, order);
            let big_m = order / g;
            let step = (e % order) / g;
            let chi = unit_table(big_m);
            let mut acc = Complex64::new(0.0, 0.0);
            let mut idx = 0u64;
            for k in 0..order {
                let x = ctx.gen_pow(k);
                acc += chi[idx as usize] * add[ctx.absolute_trace(x) as usize];
                idx += step;
                if idx >= big_m {
                    idx -= big_m;
                }
            }
            Ok(acc)
        }
        Level::Subfield => {
            let qm1 = ctx.q() - 1;
            let g = gcd(e % qm1, qm1);
            let big_m = qm1 / g;
            let step = (e % qm1) / g;
            let chi = unit_table(big_m);
            let h = ctx.subfield_generator();
            let mut x = FieldElement::ONE;
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..qm1 {
                let a = ctx.subfield_absolute_trace(x)?;
                acc += chi[(t * step % big_m) as usize] * add[a as usize];
                x = ctx.mul(x, h);
            }
            Ok(acc)
        }
    }
}

/// Closed form of a Gauss sum of a character of the given order over a field
/// of absolute degree `deg` and size q^h:
/// order 1 → −1; order 2 → −(−1)^deg τ^deg q^{h/2}; order m' > 2 with
/// m' | p^r+1 (r minimal) and 2r | deg → −(−1)^{deg(u+1)/2r} q^{h/2}, u = (p^r+1)/m'.
pub fn gauss_closed_by_order(p: u64, deg: u64, h: u32, order: u64) -> Option<ExactGauss> {
    match order {
        1 => Some(ExactGauss::new(GaussianInt::from_int(-1), 0)),
        2 => {
            let c = tau_pow(p, deg).scale(-sign_pow(deg));
            Some(ExactGauss::new(c, h))
        }
        _ => {
            let r = minimal_admissible_exponent(order, p)? as u64;
            if deg % (2 * r) != 0 {
                return None;
            }
            let u = (checked_pow(p, r as u32)? + 1) / order;
            let sign = -sign_pow(deg * (u + 1) / (2 * r));
            Some(ExactGauss::new(GaussianInt::from_int(sign), h))
        }
    }
}

/// Order of χ_{q^n−1}^e, or of its restriction to F_q.
pub fn character_order(ctx: &FieldContext, e: u64, level: Level) -> u64 {
    let modulus = match level {
        Level::Full => ctx.group_order(),
        Level::Subfield => ctx.q() - 1,
    };
    modulus / gcd(e % modulus, modulus)
}

/// Closed form of G(χ_m^ell) when one is available, None otherwise.
pub fn gauss_sum_closed(ctx: &FieldContext, m: u64, ell: i64, level: Level) -> Option<ExactGauss> {
    check_order(ctx, m).ok()?;
    gauss_sum_closed_exp(ctx, full_exponent(ctx, m, ell), level)
}

pub fn gauss_sum_closed_exp(ctx: &FieldContext, e: u64, level: Level) -> Option<ExactGauss> {
    let order = character_order(ctx, e, level);
    let (deg, h) = match level {
        Level::Full => (ctx.s() as u64 * ctx.n() as u64, ctx.n()),
        Level::Subfield => (ctx.s() as u64, 1),
    };
    gauss_closed_by_order(ctx.p(), deg, h, order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdmissibilityReason {
    /// d ≤ 2: admissibility is only defined for d > 2
    TooSmall,
    /// no r with d | p^r + 1
    NoExponent,
    /// r exists but 2r does not divide the relevant degree
    ParityFailure,
    /// p^r + 1 does not fit in 64 bits
    Overflow,
}

/// Admissibility constants of `d` over F_p, both in the role of the curve
/// degree (r, u, ε with ε = (−1)^{ns/2r}) and in the role of the quotient
/// D (r0, u0, ε0 with ε0 = (−1)^{s/2r0}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityData {
    pub d: u64,
    pub r: Option<u32>,
    pub u: Option<u64>,
    pub epsilon: Option<i8>,
    pub r0: Option<u32>,
    pub u0: Option<u64>,
    pub epsilon0: Option<i8>,
    pub reason: Option<AdmissibilityReason>,
    pub reason0: Option<AdmissibilityReason>,
}

pub fn admissibility(d: u64, p: u64, s: u32, n: u32) -> AdmissibilityData {
    let mut out = AdmissibilityData {
        d,
        r: None,
        u: None,
        epsilon: None,
        r0: None,
        u0: None,
        epsilon0: None,
        reason: None,
        reason0: None,
    };
    if d <= 2 {
        out.reason = Some(AdmissibilityReason::TooSmall);
        out.reason0 = Some(AdmissibilityReason::TooSmall);
        return out;
    }
    let Some(r) = minimal_admissible_exponent(d, p) else {
        out.reason = Some(AdmissibilityReason::NoExponent);
        out.reason0 = Some(AdmissibilityReason::NoExponent);
        return out;
    };
    out.r = Some(r);
    out.r0 = Some(r);
    let Some(pr1) = checked_pow(p, r).and_then(|x| x.checked_add(1)) else {
        out.reason = Some(AdmissibilityReason::Overflow);
        out.reason0 = Some(AdmissibilityReason::Overflow);
        return out;
    };
    out.u = Some(pr1 / d);
    out.u0 = Some(if d % 2 == 1 { pr1 / (2 * d) } else { pr1 / d });
    let ns = s as u64 * n as u64;
    if ns % (2 * r as u64) == 0 {
        out.epsilon = Some(sign_pow(ns / (2 * r as u64)) as i8);
    } else {
        out.reason = Some(AdmissibilityReason::ParityFailure);
    }
    if s as u64 % (2 * r as u64) == 0 {
        out.epsilon0 = Some(sign_pow(s as u64 / (2 * r as u64)) as i8);
    } else {
        out.reason0 = Some(AdmissibilityReason::ParityFailure);
    }
    out
}

/// θ_m(a, ε) = m − 1 if χ_m(a) = ε, −1 otherwise (including non-real χ_m(a)).
pub fn theta(ctx: &FieldContext, m: u64, a: FieldElement, eps: i8) -> Result<i64> {
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if eps != 1 && eps != -1 {
        return Err(Error::InvalidParameter(format!("epsilon must be ±1, got {eps}")));
    }
    let v = mult_char_eval(ctx, m, 1, a)?;
    Ok(if v.as_int() == Some(eps) { m as i64 - 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_SIZE_CAP;

    fn ctx(p: u64, s: u32, n: u32) -> FieldContext {
        FieldContext::new(p, s, n, DEFAULT_SIZE_CAP).unwrap()
    }

    #[test]
    fn quadratic_character_on_squares() {
        let f9 = ctx(3, 1, 2);
        let v = mult_char_eval(&f9, 2, 1, f9.gen_pow(4)).unwrap();
        assert_eq!(v.as_int(), Some(1));
        assert!(matches!(mult_char_eval(&f9, 3, 1, f9.generator()), Err(Error::OrderDoesNotDivide { .. })));
    }

    #[test]
    fn restriction_trivial_for_even_n() {
        let f9 = ctx(3, 1, 2);
        for x in [f9.from_int(1), f9.from_int(2)] {
            assert_eq!(restricted_char_eval(&f9, 2, 1, x).unwrap(), CharValue::Root(RootOfUnity::ONE));
        }
        assert_eq!(restricted_char_eval(&f9, 2, 1, f9.generator()), Err(Error::NotInSubfield));
    }

    #[test]
    fn small_gauss_sums() {
        let f5 = ctx(5, 1, 1);
        let g = gauss_sum_direct(&f5, 4, 0, Level::Full).unwrap();
        assert!((g - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        let f3 = ctx(3, 1, 1);
        let g = gauss_sum_direct(&f3, 2, 1, Level::Full).unwrap();
        assert!((g - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);
        let f9 = ctx(3, 1, 2);
        let g = gauss_sum_direct(&f9, 4, 1, Level::Full).unwrap();
        assert!((g - Complex64::new(-3.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn closed_forms() {
        let f9 = ctx(3, 1, 2);
        // +3 = 1·q^{2/2}
        let g2 = gauss_sum_closed(&f9, 2, 1, Level::Full).unwrap();
        assert_eq!(g2, ExactGauss::new(GaussianInt::ONE, 2));
        assert!((g2.to_complex(3) - Complex64::new(3.0, 0.0)).norm() < 1e-12);
        let f81 = ctx(3, 1, 4);
        for j in 1..5 {
            let closed = gauss_sum_closed(&f81, 5, j, Level::Full).unwrap();
            // −(−1)^{4(2j+1)/4}·9
            let expected = -sign_pow(2 * j as u64 + 1) * 9;
            assert_eq!(closed.to_complex(3).re.round() as i128, expected);
            let direct = gauss_sum_direct(&f81, 5, j, Level::Full).unwrap();
            assert!((direct - closed.to_complex(3)).norm() < 1e-6);
        }
        let f7 = ctx(7, 1, 1);
        assert_eq!(gauss_sum_closed(&f7, 3, 1, Level::Full), None);
    }

    #[test]
    fn admissibility_scan() {
        let a = admissibility(4, 3, 1, 1);
        assert_eq!((a.r, a.u), (Some(1), Some(1)));
        let a = admissibility(5, 3, 1, 4);
        assert_eq!((a.r, a.u, a.epsilon), (Some(2), Some(2), Some(-1)));
        assert_eq!(admissibility(2, 3, 1, 1).reason, Some(AdmissibilityReason::TooSmall));
        assert_eq!(admissibility(3, 7, 1, 1).reason, Some(AdmissibilityReason::NoExponent));
        let a = admissibility(4, 3, 1, 1);
        assert_eq!(a.epsilon0, None);
        assert_eq!(a.reason0, Some(AdmissibilityReason::ParityFailure));
        let a = admissibility(4, 3, 2, 1);
        assert_eq!((a.r0, a.u0, a.epsilon0), (Some(1), Some(1), Some(-1)));
    }

    #[test]
    fn theta_values() {
        let f9 = ctx(3, 1, 2);
        assert_eq!(theta(&f9, 4, f9.gen_pow(2), -1).unwrap(), 3);
        assert_eq!(theta(&f9, 2, f9.generator(), 1).unwrap(), -1);
        assert_eq!(theta(&f9, 2, FieldElement::ZERO, 1), Err(Error::ZeroArgument));
        let f49 = ctx(7, 1, 2);
        assert_eq!(theta(&f49, 3, f49.gen_pow(3), 1).unwrap(), 2);
        // χ_4(g) = i is not real
        assert_eq!(theta(&f9, 4, f9.generator(), 1).unwrap(), -1);
    }
}
