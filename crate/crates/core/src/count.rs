//! Affine point counts of X_{d,a,b}: y^d = a·x·Tr(x) + b over F_{q^n}.
//!
//! Every path reports N = count − main_term with
//! main_term = q^n + q^{n−1}·Σ_{ℓ=1}^{d−1} χ_d^ℓ(b).

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{
    admissibility, gauss_sum_direct_exp, mult_char_eval, theta, AdmissibilityData, Level,
};
use crate::error::{Error, Result};
use crate::exact::{sign_pow, tau_pow, GaussianInt, QSurd};
use crate::field::{FieldContext, FieldElement};
use crate::numtheory::gcd;

pub const SIGN_CONVENTION: &str =
    "N = count - q^n - q^(n-1)*sum_{l=1}^{d-1} chi_d^l(b); the main term carries no (-1)^s factor";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub d_raw: u64,
    /// gcd(d_raw, q^n − 1)
    pub d: u64,
    pub a: FieldElement,
    pub b: FieldElement,
    /// gcd(d, (q^n − 1)/(q − 1))
    pub v: u64,
    /// d / v
    pub big_d: u64,
    /// Tr(b/a), absent when a = 0
    pub big_b: Option<FieldElement>,
    pub adm_d: AdmissibilityData,
    pub adm_v: AdmissibilityData,
    pub adm_2v: AdmissibilityData,
    pub adm_big_d: AdmissibilityData,
}

impl CurveSpec {
    pub fn is_degenerate(&self) -> bool {
        self.a.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    Gauss,
    ClosedD2,
    ClosedB0,
    ClosedBnz,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub p: u64,
    pub s: u32,
    pub n: u32,
    pub modulus: Vec<u64>,
    pub d_raw: u64,
    pub d: u64,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub v: u64,
    #[serde(rename = "D")]
    pub big_d: u64,
    #[serde(rename = "B")]
    pub big_b: Option<Vec<u64>>,
    pub count: u64,
    #[serde(rename = "N")]
    pub n_term: i64,
    pub method: Method,
    pub bound: Option<f64>,
    pub hw_bound: Option<f64>,
    pub oracle_checked: bool,
    pub main_term: i64,
    /// (N₁, N₂, N₃) with N = N₁q^{n/2} + N₂q^{(n−1)/2} + N₃q^{(n−2)/2}
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<[GaussianInt; 3]>,
    pub convention: String,
}

/// Result of a closed form whose hypotheses may not hold for the input.
#[derive(Clone, Debug, PartialEq)]
pub enum ClosedOutcome {
    Count(Box<CountReport>),
    NotApplicable(String),
}

impl ClosedOutcome {
    pub fn report(self) -> Option<CountReport> {
        match self {
            ClosedOutcome::Count(r) => Some(*r),
            ClosedOutcome::NotApplicable(_) => None,
        }
    }
}

fn not_applicable(reason: impl Into<String>) -> Result<ClosedOutcome> {
    Ok(ClosedOutcome::NotApplicable(reason.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub bound: f64,
    pub hw_bound: f64,
    pub genus_min: f64,
}

pub fn curve_ingest(ctx: &FieldContext, d_raw: u64, a: FieldElement, b: FieldElement) -> Result<CurveSpec> {
    if d_raw == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let (p, s, n) = (ctx.p(), ctx.s(), ctx.n());
    let d = gcd(d_raw, ctx.group_order());
    let v = gcd(d, ctx.subfield_step());
    let big_b = if a.is_zero() {
        None
    } else {
        Some(ctx.trace_to_subfield(ctx.div(b, a)?))
    };
    Ok(CurveSpec {
        d_raw,
        d,
        a,
        b,
        v,
        big_d: d / v,
        big_b,
        adm_d: admissibility(d, p, s, n),
        adm_v: admissibility(v, p, s, n),
        adm_2v: admissibility(2 * v, p, s, n),
        adm_big_d: admissibility(d / v, p, s, n),
    })
}

fn q_pow(ctx: &FieldContext, k: u32) -> i128 {
    (ctx.q() as i128).pow(k)
}

/// q^n + q^{n−1}·Σ_{ℓ=1}^{d−1} χ_d^ℓ(b)
pub fn main_term(ctx: &FieldContext, spec: &CurveSpec) -> Result<i128> {
    let big = ctx.size() as i128;
    let low = q_pow(ctx, ctx.n() - 1);
    if spec.b.is_zero() {
        return Ok(big);
    }
    let d = spec.d as i128;
    Ok(if ctx.log_mod(spec.b, spec.d)? == 0 {
        big + (d - 1) * low
    } else {
        big - low
    })
}

pub fn n_bounds(ctx: &FieldContext, spec: &CurveSpec) -> Result<Bounds> {
    let Some(big_b) = spec.big_b else {
        return Err(Error::DegenerateCurve);
    };
    let q = ctx.q() as f64;
    let n = ctx.n() as f64;
    let d = spec.d as f64;
    let v = spec.v as f64;
    let bound = if !big_b.is_zero() {
        (d - 1.0) * (q.powf(n / 2.0) + q.powf((n - 1.0) / 2.0))
    } else if spec.big_d % 2 == 1 {
        (v - 1.0) * (q - 1.0) * q.powf(n / 2.0 - 1.0)
    } else {
        (q - 1.0) * (v * q.powf((n - 1.0) / 2.0) + (v - 1.0) * q.powf(n / 2.0 - 1.0))
    };
    let genus_min = 0.5 * (d - 1.0) * (q.powf(n - 1.0) - 1.0) - d + 1.0;
    Ok(Bounds { bound, hw_bound: 2.0 * genus_min * q.powf(n / 2.0), genus_min })
}

fn build_report(
    ctx: &FieldContext,
    spec: &CurveSpec,
    count: i128,
    method: Method,
    decomposition: Option<[GaussianInt; 3]>,
) -> Result<CountReport> {
    if count < 0 {
        return Err(Error::NonIntegerResult(format!("negative count {count}")));
    }
    let main = main_term(ctx, spec)?;
    let bounds = n_bounds(ctx, spec).ok();
    Ok(CountReport {
        p: ctx.p(),
        s: ctx.s(),
        n: ctx.n(),
        modulus: ctx.modulus().to_vec(),
        d_raw: spec.d_raw,
        d: spec.d,
        a: ctx.digits(spec.a),
        b: ctx.digits(spec.b),
        v: spec.v,
        big_d: spec.big_d,
        big_b: spec.big_b.map(|x| ctx.digits(x)),
        count: count as u64,
        n_term: (count - main) as i64,
        method,
        bound: bounds.map(|b| b.bound),
        hw_bound: bounds.map(|b| b.hw_bound),
        oracle_checked: false,
        main_term: main as i64,
        decomposition,
        convention: SIGN_CONVENTION.to_string(),
    })
}

/// Number of y with y^d = t, given log t (None for t = 0).
fn roots(log_t: Option<u64>, d: u64) -> u64 {
    match log_t {
        None => 1,
        Some(l) if l % d == 0 => d,
        Some(_) => 0,
    }
}

/// The enumeration oracle: Σ_x #{y : y^d = a·x·Tr(x) + b}, in parallel over x.
pub fn count_brute(ctx: &FieldContext, spec: &CurveSpec) -> Result<CountReport> {
    ctx.require_tables()?;
    let order = ctx.group_order();
    let d = spec.d;
    let log_a = ctx.raw_log(spec.a.code()).map(u64::from);
    let log_b = ctx.raw_log(spec.b.code()).map(u64::from);
    // contribution when a·x·Tr(x) = 0
    let at_b = roots(log_b, d);
    let per_index = |k: u64| -> u64 {
        let Some(la) = log_a else { return at_b };
        let tr = ctx.raw_trace_code(ctx.raw_exp(k));
        let Some(lt) = ctx.raw_log(tr) else { return at_b };
        let l = (la + k + lt as u64) % order;
        match log_b {
            None => roots(Some(l), d),
            Some(lb) => {
                let z = ctx.raw_zech((l + order - lb) % order);
                roots(z.map(|z| (lb + z as u64) % order), d)
            }
        }
    };
    let count: u64 = at_b
        + (0..order as usize)
            .into_par_iter()
            .with_min_len(1 << 12)
            .map(|k| per_index(k as u64))
            .sum::<u64>();
    build_report(ctx, spec, count as i128, Method::Brute, None)
}

fn chi_c(ctx: &FieldContext, m: u64, ell: i64, x: FieldElement) -> Result<Complex64> {
    Ok(mult_char_eval(ctx, m, ell, x)?.to_complex())
}

/// main_term + N with N evaluated from Gauss sums of F_{q^n} and F_q, rounded.
pub fn count_gauss(ctx: &FieldContext, spec: &CurveSpec) -> Result<CountReport> {
    let Some(big_b) = spec.big_b else {
        return Err(Error::DegenerateCurve);
    };
    let d = spec.d;
    let main = main_term(ctx, spec)?;
    if d == 1 {
        return build_report(ctx, spec, ctx.size() as i128, Method::Gauss, None);
    }
    let order = ctx.group_order();
    let q = ctx.q() as f64;
    let s = ctx.s() as u64;
    let tau_s = tau_pow(ctx.p(), s).to_complex();
    let sqrt_q = q.sqrt();
    let e_step = order / d;
    let gn = |ell: u64| gauss_sum_direct_exp(ctx, ell % d * e_step, Level::Full);
    let minus_a = ctx.neg(spec.a);
    let v = spec.v;
    let dd = spec.big_d;

    let n_term: Complex64 = if big_b.is_zero() {
        let tail = |ctx: &FieldContext| -> Result<Complex64> {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..v {
                acc += gn(j * dd)? * chi_c(ctx, d, (j * dd) as i64, minus_a)?;
            }
            Ok(acc)
        };
        if dd % 2 == 1 {
            -(q - 1.0) / q * tail(ctx)?
        } else {
            let mut half = Complex64::new(0.0, 0.0);
            for j in 0..v {
                let ell = j * dd + dd / 2;
                half += gn(ell)? * chi_c(ctx, d, ell as i64, minus_a)?;
            }
            let lead = sign_pow(s + 1) as f64 * tau_s * sqrt_q * half;
            (q - 1.0) / q * (lead - tail(ctx)?)
        }
    } else {
        let mab = ctx.mul(minus_a, big_b);
        let eta_b = ctx.eta2_subfield(big_b)? as f64;
        let qm1 = ctx.q() - 1;
        let mut acc = Complex64::new(0.0, 0.0);
        for ell in 1..d {
            // restriction exponents of conj(χ_d)^ℓ·η_2 and conj(χ_d)^ℓ
            let e2 = (order - ell * e_step % order) % order;
            let e1 = (e2 % qm1 + qm1 / 2) % qm1;
            let g1_twisted = gauss_sum_direct_exp(ctx, e1, Level::Subfield)?;
            let g1_plain = gauss_sum_direct_exp(ctx, e2, Level::Subfield)?;
            let inner = sign_pow(s + 1) as f64 * eta_b * tau_s * sqrt_q * g1_twisted - g1_plain;
            acc += gn(ell)? * chi_c(ctx, d, ell as i64, mab)? * inner;
        }
        acc / q
    };

    let value = main as f64 + n_term.re;
    let rounded = value.round();
    if (value - rounded).abs() > 0.25 || n_term.im.abs() > 0.25 {
        return Err(Error::NumericallyUnstable { value });
    }
    build_report(ctx, spec, rounded as i128, Method::Gauss, None)
}

fn chi2_g(ctx: &FieldContext, x: FieldElement) -> GaussianInt {
    GaussianInt::from_int(ctx.chi2(x) as i128)
}

/// Exact count for d = 2.
pub fn count_d2(ctx: &FieldContext, spec: &CurveSpec) -> Result<CountReport> {
    if spec.d != 2 {
        return Err(Error::WrongDegree { expected: 2, got: spec.d });
    }
    let Some(big_b) = spec.big_b else {
        return Err(Error::DegenerateCurve);
    };
    let (p, s, n) = (ctx.p(), ctx.s() as u64, ctx.n());
    let ni = n as i32;
    let tau_ns = tau_pow(p, n as u64 * s);
    let tau_s = tau_pow(p, s);
    let qm1 = ctx.q() as i128 - 1;
    let minus_a = ctx.neg(spec.a);

    let mut acc = QSurd::new(p, ctx.s());
    acc.add_int(ctx.size() as i128);
    acc.add_term(chi2_g(ctx, spec.b), 2 * ni - 2);
    if big_b.is_zero() {
        let base = tau_ns * chi2_g(ctx, minus_a);
        if n % 2 == 0 {
            acc.add_term(base.scale(qm1), ni - 2);
        } else {
            acc.add_term((base * tau_s).scale(qm1), ni - 1);
        }
    } else {
        let eta_b = GaussianInt::from_int(ctx.eta2_subfield(big_b)? as i128);
        let mab = chi2_g(ctx, ctx.mul(minus_a, big_b));
        if n % 2 == 0 {
            let lead = chi2_g(ctx, minus_a) * eta_b * tau_pow(p, 2 * s);
            acc.add_term(-(tau_ns * lead), ni);
            acc.add_term(-(tau_ns * mab), ni - 2);
        } else {
            acc.add_term(-(tau_ns * tau_s * (chi2_g(ctx, minus_a) + mab)), ni - 1);
        }
    }
    build_report(ctx, spec, acc.to_integer()?, Method::ClosedD2, None)
}

fn gauss_of(ctx: &FieldContext, m: u64, x: FieldElement) -> Result<GaussianInt> {
    let v = mult_char_eval(ctx, m, 1, x)?;
    v.to_gaussian()
        .ok_or_else(|| Error::NonIntegerResult(format!("chi_{m} value {v:?} is not in Z[i]")))
}

fn eps_pow(eps: i8, k: u64) -> i128 {
    if eps == 1 {
        1
    } else {
        sign_pow(k)
    }
}

/// Closed form for B = 0 and d > 2, when v (D odd) or 2v (D even) is
/// admissible, or v ∈ {1, 2}.
pub fn count_b0_admissible(ctx: &FieldContext, spec: &CurveSpec) -> Result<ClosedOutcome> {
    let Some(big_b) = spec.big_b else {
        return Err(Error::DegenerateCurve);
    };
    if spec.d <= 2 {
        return not_applicable("d <= 2");
    }
    if !big_b.is_zero() {
        return not_applicable("B != 0");
    }
    let (p, s, n) = (ctx.p(), ctx.s() as u64, ctx.n() as i32);
    let qm1 = ctx.q() as i128 - 1;
    let tau_s = tau_pow(p, s);
    let a = spec.a;
    let minus_a = ctx.neg(a);
    let v = spec.v;

    let mut acc = QSurd::new(p, ctx.s());
    acc.add_int(main_term(ctx, spec)?);
    if spec.big_d % 2 == 1 {
        match v {
            1 => {}
            2 => acc.add_term((tau_pow(p, s * n as u64) * chi2_g(ctx, a)).scale(qm1), n - 2),
            _ => {
                let adm = &spec.adm_v;
                let (Some(eps), Some(u)) = (adm.epsilon, adm.u) else {
                    return not_applicable(format!("v = {v} is not admissible with 2r | ns"));
                };
                let th = theta(ctx, v, minus_a, eps_pow(eps, u) as i8)? as i128;
                acc.add_term(GaussianInt::from_int(eps as i128 * th * qm1), n - 2);
            }
        }
    } else if v == 1 {
        let c = tau_pow(p, (n as u64 + 1) * s) * chi2_g(ctx, minus_a);
        acc.add_term(c.scale(qm1), n - 1);
    } else {
        let adm = &spec.adm_2v;
        let (Some(eps), Some(u)) = (adm.epsilon, adm.u) else {
            return not_applicable(format!("2v = {} is not admissible with 2r | ns", 2 * v));
        };
        let eps = eps as i128;
        let lead_sign = sign_pow(s);
        if v == 2 {
            let c4 = gauss_of(ctx, 4, minus_a)?;
            let lead = (tau_s * (c4 + c4.conj())).scale(lead_sign * eps_pow(eps as i8, u + 1));
            acc.add_term(lead.scale(qm1), n - 1);
            acc.add_term((tau_pow(p, s * n as u64) * chi2_g(ctx, a)).scale(qm1), n - 2);
        } else {
            let th = theta(ctx, v, minus_a, 1)? as i128;
            if th != -1 {
                let c2v = gauss_of(ctx, 2 * v, minus_a)?;
                let lead = (tau_s * c2v).scale(eps * lead_sign * eps_pow(eps as i8, u) * (1 + th));
                acc.add_term(lead.scale(qm1), n - 1);
            }
            acc.add_term(GaussianInt::from_int(eps * th * qm1), n - 2);
        }
    }
    let count = acc.to_integer()?;
    Ok(ClosedOutcome::Count(Box::new(build_report(ctx, spec, count, Method::ClosedB0, None)?)))
}

/// Closed form for B ≠ 0 with d admissible and D > 2 admissible, split by the
/// parity of D into N = N₁q^{n/2} + N₂q^{(n−1)/2} + N₃q^{(n−2)/2}.
pub fn count_bnz_admissible(ctx: &FieldContext, spec: &CurveSpec) -> Result<ClosedOutcome> {
    let Some(big_b) = spec.big_b else {
        return Err(Error::DegenerateCurve);
    };
    if spec.d <= 2 {
        return not_applicable("d <= 2");
    }
    if big_b.is_zero() {
        return not_applicable("B = 0");
    }
    let (Some(eps), Some(u)) = (spec.adm_d.epsilon, spec.adm_d.u) else {
        return not_applicable(format!("d = {} is not admissible with 2r | ns", spec.d));
    };
    let big_d = spec.big_d;
    if big_d <= 2 {
        return not_applicable(format!("D = {big_d} <= 2"));
    }
    let adm0 = &spec.adm_big_d;
    let (Some(r0), Some(u0)) = (adm0.r0, adm0.u0) else {
        return not_applicable(format!("D = {big_d} is not admissible"));
    };
    let Some(eps0) = adm0.epsilon0 else {
        return Err(Error::UnsupportedHypotheses(format!(
            "2r0 = {} does not divide s = {}",
            2 * r0,
            ctx.s()
        )));
    };
    let (p, s, n) = (ctx.p(), ctx.s() as u64, ctx.n() as i32);
    let tau_s = tau_pow(p, s);
    let (e, e0) = (eps as i128, eps0 as i128);
    let mab = ctx.mul(ctx.neg(spec.a), big_b);
    let eta_b = ctx.eta2_subfield(big_b)? as i128;
    let (d, v) = (spec.d, spec.v);
    let g = GaussianInt::from_int;

    let [n1, n2, n3] = if big_d % 2 == 1 {
        let eu = eps_pow(eps, u) as i8;
        let td = theta(ctx, d, mab, eu)? as i128;
        let tv = theta(ctx, v, mab, eu)? as i128;
        let n1 = tau_s.scale(sign_pow(s + 1) * e * eps_pow(eps0, 1 + u0 * big_d) * eta_b * td);
        [n1, g(e * e0 * (tv - td)), g(-e * tv)]
    } else {
        let a1 = theta(ctx, d, mab, (eps_pow(eps, u) * eps_pow(eps0, u0)) as i8)? as i128;
        let a2 = theta(ctx, v, mab, 1)? as i128;
        // χ_{2v}(−aB)·(1 + α₂): α₂ = −1 unless χ_v(−aB) = 1, and then χ_{2v}(−aB) = ±1
        let c2v = if a2 == -1 { GaussianInt::ZERO } else { gauss_of(ctx, 2 * v, mab)?.scale(1 + a2) };
        let half_d = big_d / 2;
        let inner = g(-eps_pow(eps0, u0 * half_d) * a1) + c2v.scale(eps_pow(eps, u * half_d));
        let n1 = (tau_s * inner).scale(sign_pow(s) * e * e0 * eta_b);
        let n2 = g(e * e0 * (a2 - a1)) - (tau_s * c2v).scale(sign_pow(s) * eps_pow(eps, u * half_d + 1) * eta_b);
        [n1, n2, g(-e * a2)]
    };
    let mut acc = QSurd::new(p, ctx.s());
    acc.add_int(main_term(ctx, spec)?);
    acc.add_term(n1, n);
    acc.add_term(n2, n - 1);
    acc.add_term(n3, n - 2);
    let count = acc.to_integer()?;
    let report = build_report(ctx, spec, count, Method::ClosedBnz, Some([n1, n2, n3]))?;
    Ok(ClosedOutcome::Count(Box::new(report)))
}

/// Dispatch to one counting path.
pub fn count_with(ctx: &FieldContext, spec: &CurveSpec, method: Method) -> Result<ClosedOutcome> {
    let wrap = |r: CountReport| ClosedOutcome::Count(Box::new(r));
    match method {
        Method::Brute => count_brute(ctx, spec).map(wrap),
        Method::Gauss => count_gauss(ctx, spec).map(wrap),
        Method::ClosedD2 => count_d2(ctx, spec).map(wrap),
        Method::ClosedB0 => count_b0_admissible(ctx, spec),
        Method::ClosedBnz => count_bnz_admissible(ctx, spec),
    }
}

/// Closed forms in the order d2, b0, bnz, then the Gauss-sum expression.
/// Degenerate curves (a = 0) and d = 1 go straight to enumeration.
pub fn count_auto(ctx: &FieldContext, spec: &CurveSpec) -> Result<CountReport> {
    if spec.is_degenerate() || spec.d == 1 {
        if spec.d == 1 {
            return build_report(ctx, spec, ctx.size() as i128, Method::Brute, None);
        }
        return count_brute(ctx, spec);
    }
    if spec.d == 2 {
        return count_d2(ctx, spec);
    }
    for method in [Method::ClosedB0, Method::ClosedBnz] {
        match count_with(ctx, spec, method) {
            Ok(ClosedOutcome::Count(r)) => return Ok(*r),
            Ok(ClosedOutcome::NotApplicable(_)) | Err(Error::UnsupportedHypotheses(_)) => {}
            Err(e) => return Err(e),
        }
    }
    count_gauss(ctx, spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QrCount {
    pub formula: u64,
    pub brute: Option<u64>,
}

/// Number of α ∈ F_{q^n} with α and Tr(α) both quadratic residues (0 included),
/// for odd n: (q^n + q^{n−1} + τ^{s(n−1)}(q−1)q^{(n−1)/2} + 2)/4.
pub fn qr_trace_count(ctx: &FieldContext) -> Result<QrCount> {
    let n = ctx.n();
    if n % 2 == 0 {
        return Err(Error::EvenExtensionDegree);
    }
    let mut acc = QSurd::new(ctx.p(), ctx.s());
    acc.add_int(ctx.size() as i128 + q_pow(ctx, n - 1) + 2);
    let t = tau_pow(ctx.p(), ctx.s() as u64 * (n as u64 - 1));
    acc.add_term(t.scale(ctx.q() as i128 - 1), n as i32 - 1);
    let total = acc.to_integer()?;
    if total % 4 != 0 {
        return Err(Error::NonIntegerResult(format!("{total}/4")));
    }
    let brute = if ctx.has_tables() {
        let c = ctx
            .elements()
            .filter(|&x| ctx.chi2(x) >= 0 && ctx.eta2_subfield(ctx.trace_to_subfield(x)).unwrap_or(-1) >= 0)
            .count();
        Some(c as u64)
    } else {
        None
    };
    Ok(QrCount { formula: (total / 4) as u64, brute })
}
