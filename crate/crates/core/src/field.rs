//! The tower F_p ⊂ F_q ⊂ F_{q^n}, realized as F_p[x]/(f) with deg f = s·n.
//!
//! Elements are stored by their coefficient code: the base-p integer whose
//! digit i is the coefficient of x^i. Contexts within the size cap carry
//! exp/log/Zech/trace tables; larger contexts fall back to polynomial
//! arithmetic and support only the operations the closed forms need.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{checked_pow, is_prime, prime_factors};
use crate::poly;

pub const DEFAULT_SIZE_CAP: u64 = 1 << 22;

/// Largest field handled without tables. Keeps q^n (and q^n·q) inside i128 comfortably.
const FORMULA_ONLY_LIMIT: u64 = 1 << 62;

const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn from_code(code: u64) -> Self {
        FieldElement(code)
    }

    pub fn code(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow,
}

/// Second operand of [`FieldContext::arith`].
#[derive(Clone, Copy, Debug)]
pub enum Operand {
    Elem(FieldElement),
    Int(i128),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextSummary {
    pub p: u64,
    pub s: u32,
    pub n: u32,
    pub modulus_coeffs: Vec<u64>,
    pub generator_index_coeffs: Vec<u64>,
}

#[derive(Clone, Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[j] = log(1 + g^j), or NO_LOG when 1 + g^j = 0
    zech: Vec<u32>,
    trace: Vec<u32>,
    abs_trace: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct FieldContext {
    p: u64,
    s: u32,
    n: u32,
    q: u64,
    size: u64,
    degree: usize,
    pow_p: Vec<u64>,
    modulus: Vec<u64>,
    generator: FieldElement,
    group_factors: Vec<u64>,
    tables: Option<Tables>,
}

fn validate(p: u64, s: u32, n: u32) -> Result<()> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s == 0 || n == 0 {
        return Err(Error::InvalidParameter("s and n must be positive".into()));
    }
    Ok(())
}

fn field_size(p: u64, s: u32, n: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..(s as u64 * n as u64) {
        acc = acc.saturating_mul(p as u128);
    }
    acc
}

impl FieldContext {
    /// Builds F_{p^{s·n}} with exp/log tables. Fails with `FieldTooLarge` above `size_cap`.
    pub fn new(p: u64, s: u32, n: u32, size_cap: u64) -> Result<Self> {
        validate(p, s, n)?;
        let size = field_size(p, s, n);
        if size > size_cap as u128 || size > u32::MAX as u128 {
            return Err(Error::FieldTooLarge { size, cap: size_cap });
        }
        let modulus = poly::first_irreducible(p, (s * n) as usize);
        Self::assemble(p, s, n, modulus, true)
    }

    /// Same as [`FieldContext::new`] with an explicitly chosen modulus
    /// (monic, constant term first).
    pub fn with_modulus(p: u64, s: u32, n: u32, modulus: &[u64], size_cap: u64) -> Result<Self> {
        validate(p, s, n)?;
        let size = field_size(p, s, n);
        if size > size_cap as u128 || size > u32::MAX as u128 {
            return Err(Error::FieldTooLarge { size, cap: size_cap });
        }
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if modulus.len() != (s * n) as usize + 1 || modulus.last() != Some(&1) {
            return Err(Error::InvalidParameter(format!(
                "modulus must be monic of degree {}",
                s * n
            )));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::InvalidParameter("modulus is reducible".into()));
        }
        Self::assemble(p, s, n, modulus, true)
    }

    /// Context without tables, for fields beyond the cap. Only polynomial
    /// arithmetic, traces and character values modulo small orders are available.
    pub fn formula_only(p: u64, s: u32, n: u32) -> Result<Self> {
        validate(p, s, n)?;
        let size = field_size(p, s, n);
        if size > FORMULA_ONLY_LIMIT as u128 {
            return Err(Error::FieldTooLarge { size, cap: FORMULA_ONLY_LIMIT });
        }
        let modulus = poly::first_irreducible(p, (s * n) as usize);
        Self::assemble(p, s, n, modulus, false)
    }

    /// Tables when `p^{s·n} <= size_cap`, formula-only otherwise.
    pub fn build(p: u64, s: u32, n: u32, size_cap: u64) -> Result<Self> {
        validate(p, s, n)?;
        if field_size(p, s, n) <= size_cap as u128 {
            Self::new(p, s, n, size_cap)
        } else {
            Self::formula_only(p, s, n)
        }
    }

    fn assemble(p: u64, s: u32, n: u32, modulus: Vec<u64>, with_tables: bool) -> Result<Self> {
        let degree = (s * n) as usize;
        let size = checked_pow(p, s * n).expect("size checked by caller");
        let q = checked_pow(p, s).expect("q <= size");
        let pow_p = (0..=degree as u32).map(|i| checked_pow(p, i).unwrap()).collect();
        let mut ctx = FieldContext {
            p,
            s,
            n,
            q,
            size,
            degree,
            pow_p,
            modulus,
            generator: FieldElement::ONE,
            group_factors: prime_factors(size - 1),
            tables: None,
        };
        ctx.generator = ctx.find_generator();
        if with_tables {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    fn find_generator(&self) -> FieldElement {
        let order = self.size - 1;
        let one = self.digits(FieldElement::ONE);
        for code in 1..self.size {
            let x = self.digits(FieldElement(code));
            let primitive = self.group_factors.iter().all(|&l| {
                poly::pow_mod_poly(&x, (order / l) as u128, &self.modulus, self.p) != one
            });
            if primitive {
                return FieldElement(code);
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> Tables {
        let order = (self.size - 1) as usize;
        let g = self.digits(self.generator);
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![NO_LOG; self.size as usize];
        let mut cur = self.digits(FieldElement::ONE);
        for k in 0..order {
            let code = self.encode(&cur);
            exp.push(code as u32);
            log[code as usize] = k as u32;
            cur = poly::mul_mod(&g, &cur, &self.modulus, self.p);
        }

        let zech = exp
            .iter()
            .map(|&c| {
                let c = c as u64;
                let d0 = c % self.p;
                let shifted = c - d0 + (d0 + 1) % self.p;
                log[shifted as usize]
            })
            .collect();

        // Both traces are F_p-linear: fill by peeling off the top digit.
        let basis_tr: Vec<u64> = (0..self.degree)
            .map(|i| self.trace_poly(FieldElement(self.pow_p[i])).0)
            .collect();
        let basis_abs: Vec<u64> = (0..self.degree)
            .map(|i| self.abs_trace_poly(FieldElement(self.pow_p[i])))
            .collect();
        let mut trace = vec![0u32; self.size as usize];
        let mut abs_trace = vec![0u32; self.size as usize];
        for i in 0..self.degree {
            let lo = self.pow_p[i] as usize;
            let hi = self.pow_p[i + 1] as usize;
            let scaled: Vec<u64> = (0..self.p)
                .map(|t| self.scale_code(basis_tr[i], t))
                .collect();
            for c in lo..hi {
                let top = (c / lo) as u64;
                let rest = c % lo;
                trace[c] = self.add_codes(trace[rest] as u64, scaled[top as usize]) as u32;
                abs_trace[c] = ((abs_trace[rest] as u64 + top * basis_abs[i]) % self.p) as u32;
            }
        }
        Tables { exp, log, zech, trace, abs_trace }
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    /// q^n
    pub fn size(&self) -> u64 {
        self.size
    }
    /// q^n − 1
    pub fn group_order(&self) -> u64 {
        self.size - 1
    }
    /// s·n
    pub fn degree(&self) -> usize {
        self.degree
    }
    /// (q^n − 1)/(q − 1): the index step of the subfield.
    pub fn subfield_step(&self) -> u64 {
        (self.size - 1) / (self.q - 1)
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    pub fn generator(&self) -> FieldElement {
        self.generator
    }
    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    fn tables(&self) -> Result<&Tables> {
        self.tables.as_ref().ok_or(Error::TablesRequired)
    }

    pub fn summary(&self) -> ContextSummary {
        ContextSummary {
            p: self.p,
            s: self.s,
            n: self.n,
            modulus_coeffs: self.modulus.clone(),
            generator_index_coeffs: self.digits(self.generator),
        }
    }

    /// All elements, in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size).map(FieldElement)
    }

    /// The elements of F_q, zero first, then h^0, h^1, ... with h = g^{(q^n−1)/(q−1)}.
    pub fn subfield_elements(&self) -> Vec<FieldElement> {
        let h = self.subfield_generator();
        let mut out = Vec::with_capacity(self.q as usize);
        out.push(FieldElement::ZERO);
        let mut x = FieldElement::ONE;
        for _ in 0..self.q - 1 {
            out.push(x);
            x = self.mul(x, h);
        }
        out
    }

    pub fn subfield_generator(&self) -> FieldElement {
        self.gen_pow(self.subfield_step())
    }

    // ---- coefficient codes ----

    pub fn digits(&self, x: FieldElement) -> Vec<u64> {
        let mut c = x.0;
        (0..self.degree)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    /// Element from coefficients over F_p (constant term first), reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.degree {
            return Err(Error::InvalidParameter(format!(
                "expected at most {} coefficients, got {}",
                self.degree,
                coeffs.len()
            )));
        }
        let p = self.p as i64;
        let d: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
        Ok(FieldElement(self.encode(&d)))
    }

    pub fn from_int(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p as i64) as u64)
    }

    fn add_codes(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for i in 0..self.degree {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * self.pow_p[i];
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn scale_code(&self, a: u64, t: u64) -> u64 {
        let mut a = a;
        let mut out = 0;
        for i in 0..self.degree {
            out += (a % self.p) * t % self.p * self.pow_p[i];
            a /= self.p;
        }
        out
    }

    // ---- arithmetic ----

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(self.add_codes(x.0, y.0))
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.scale_code(x.0, self.p - 1))
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.is_zero() || y.is_zero() {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let k = (t.log[x.0 as usize] as u64 + t.log[y.0 as usize] as u64) % (self.size - 1);
                FieldElement(t.exp[k as usize] as u64)
            }
            None => {
                let r = poly::mul_mod(&self.digits(x), &self.digits(y), &self.modulus, self.p);
                FieldElement(self.encode(&r))
            }
        }
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.pow(x, -1)
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// x^e for any integer e; negative e needs x ≠ 0.
    pub fn pow(&self, x: FieldElement, e: i128) -> Result<FieldElement> {
        let order = (self.size - 1) as i128;
        if x.is_zero() {
            return match e {
                0 => Ok(FieldElement::ONE),
                e if e > 0 => Ok(FieldElement::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let e = e.rem_euclid(order) as u128;
        Ok(match &self.tables {
            Some(t) => {
                let k = (t.log[x.0 as usize] as u128 * e % order as u128) as usize;
                FieldElement(t.exp[k] as u64)
            }
            None => self.pow_poly(x, e),
        })
    }

    fn pow_poly(&self, x: FieldElement, e: u128) -> FieldElement {
        FieldElement(self.encode(&poly::pow_mod_poly(&self.digits(x), e, &self.modulus, self.p)))
    }

    /// Single entry point over [`ArithOp`]; `Pow` takes an integer operand.
    pub fn arith(&self, op: ArithOp, x: FieldElement, y: Operand) -> Result<FieldElement> {
        let elem = || match y {
            Operand::Elem(e) => Ok(e),
            _ => Err(Error::InvalidParameter(format!("{op:?} needs an element operand"))),
        };
        match op {
            ArithOp::Add => Ok(self.add(x, elem()?)),
            ArithOp::Sub => Ok(self.sub(x, elem()?)),
            ArithOp::Mul => Ok(self.mul(x, elem()?)),
            ArithOp::Div => self.div(x, elem()?),
            ArithOp::Neg => Ok(self.neg(x)),
            ArithOp::Inv => self.inv(x),
            ArithOp::Pow => match y {
                Operand::Int(e) => self.pow(x, e),
                _ => Err(Error::InvalidParameter("pow needs an integer exponent".into())),
            },
        }
    }

    /// g^k
    pub fn gen_pow(&self, k: u64) -> FieldElement {
        let k = k % (self.size - 1);
        match &self.tables {
            Some(t) => FieldElement(t.exp[k as usize] as u64),
            None => self.pow_poly(self.generator, k as u128),
        }
    }

    /// x^{p^k}
    pub fn frobenius(&self, x: FieldElement, k: u64) -> FieldElement {
        if x.is_zero() {
            return x;
        }
        let k = (k % self.degree as u64) as usize;
        match &self.tables {
            Some(t) => {
                let idx = t.log[x.0 as usize] as u128 * self.pow_p[k] as u128 % (self.size - 1) as u128;
                FieldElement(t.exp[idx as usize] as u64)
            }
            None => self.pow_poly(x, self.pow_p[k] as u128),
        }
    }

    fn trace_poly(&self, x: FieldElement) -> FieldElement {
        (0..self.n as u64).fold(FieldElement::ZERO, |acc, j| {
            self.add(acc, self.frobenius(x, j * self.s as u64))
        })
    }

    fn abs_trace_poly(&self, x: FieldElement) -> u64 {
        let t = (0..self.degree as u64)
            .fold(FieldElement::ZERO, |acc, j| self.add(acc, self.frobenius(x, j)));
        debug_assert!(t.0 < self.p);
        t.0
    }

    /// Tr(x) = Σ_{i<n} x^{q^i}, an element of F_q.
    pub fn trace_to_subfield(&self, x: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.trace[x.0 as usize] as u64),
            None => self.trace_poly(x),
        }
    }

    /// Trace down to F_p, as a residue in [0, p).
    pub fn absolute_trace(&self, x: FieldElement) -> u64 {
        match &self.tables {
            Some(t) => t.abs_trace[x.0 as usize] as u64,
            None => self.abs_trace_poly(x),
        }
    }

    /// Trace from F_q to F_p of a subfield element.
    pub fn subfield_absolute_trace(&self, x: FieldElement) -> Result<u64> {
        if !self.is_in_subfield(x) {
            return Err(Error::NotInSubfield);
        }
        let t = (0..self.s as u64).fold(FieldElement::ZERO, |acc, j| self.add(acc, self.frobenius(x, j)));
        debug_assert!(t.0 < self.p);
        Ok(t.0)
    }

    pub fn is_in_subfield(&self, x: FieldElement) -> bool {
        if x.is_zero() {
            return true;
        }
        match &self.tables {
            Some(t) => t.log[x.0 as usize] as u64 % self.subfield_step() == 0,
            None => self.frobenius(x, self.s as u64) == x,
        }
    }

    /// k with g^k = x.
    pub fn discrete_log(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::LogOfZero);
        }
        Ok(self.tables()?.log[x.0 as usize] as u64)
    }

    /// log(x) mod m for m | q^n − 1. Works without tables by matching
    /// x^{(q^n−1)/m} against the powers of g^{(q^n−1)/m}.
    pub fn log_mod(&self, x: FieldElement, m: u64) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::LogOfZero);
        }
        let order = self.size - 1;
        if m == 0 || order % m != 0 {
            return Err(Error::OrderDoesNotDivide { m, group_order: order });
        }
        if let Some(t) = &self.tables {
            return Ok(t.log[x.0 as usize] as u64 % m);
        }
        let e = (order / m) as u128;
        let target = self.pow_poly(x, e);
        let step = self.pow_poly(self.generator, e);
        let mut cur = FieldElement::ONE;
        for j in 0..m {
            if cur == target {
                return Ok(j);
            }
            cur = self.mul(cur, step);
        }
        unreachable!("x^((Q-1)/m) lies in the order-m subgroup")
    }

    /// t with x = h^t where h generates F_q*.
    pub fn subfield_log(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::LogOfZero);
        }
        if !self.is_in_subfield(x) {
            return Err(Error::NotInSubfield);
        }
        if let Some(t) = &self.tables {
            return Ok(t.log[x.0 as usize] as u64 / self.subfield_step());
        }
        let h = self.subfield_generator();
        let mut cur = FieldElement::ONE;
        for t in 0..self.q - 1 {
            if cur == x {
                return Ok(t);
            }
            cur = self.mul(cur, h);
        }
        unreachable!("h generates F_q*")
    }

    /// Quadratic character of F_q: 0, 1 or −1.
    pub fn eta2_subfield(&self, x: FieldElement) -> Result<i8> {
        if x.is_zero() {
            return Ok(0);
        }
        if !self.is_in_subfield(x) {
            return Err(Error::NotInSubfield);
        }
        let r = self.pow(x, ((self.q - 1) / 2) as i128)?;
        Ok(if r == FieldElement::ONE { 1 } else { -1 })
    }

    /// Quadratic character of F_{q^n}: 0, 1 or −1.
    pub fn chi2(&self, x: FieldElement) -> i8 {
        if x.is_zero() {
            return 0;
        }
        let r = self.pow(x, ((self.size - 1) / 2) as i128).expect("nonzero");
        if r == FieldElement::ONE {
            1
        } else {
            -1
        }
    }

    /// Brute-force helpers: raw table views, used by the enumeration paths.
    pub(crate) fn raw_log(&self, code: u64) -> Option<u32> {
        self.tables.as_ref().and_then(|t| {
            let l = t.log[code as usize];
            (l != NO_LOG).then_some(l)
        })
    }

    pub(crate) fn raw_zech(&self, j: u64) -> Option<u32> {
        self.tables.as_ref().and_then(|t| {
            let z = t.zech[j as usize];
            (z != NO_LOG).then_some(z)
        })
    }

    pub(crate) fn raw_trace_code(&self, code: u64) -> u64 {
        self.tables.as_ref().expect("tables").trace[code as usize] as u64
    }

    pub(crate) fn raw_exp(&self, k: u64) -> u64 {
        self.tables.as_ref().expect("tables").exp[k as usize] as u64
    }

    pub(crate) fn require_tables(&self) -> Result<()> {
        self.tables().map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9_classic() -> FieldContext {
        // x^2 - x - 1 over F_3
        FieldContext::with_modulus(3, 1, 2, &[2, 2, 1], DEFAULT_SIZE_CAP).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldContext::new(2, 1, 3, 100).unwrap_err(), Error::EvenCharacteristic);
        assert_eq!(FieldContext::new(9, 1, 1, 100).unwrap_err(), Error::NotPrime(9));
        assert!(matches!(FieldContext::new(3, 1, 5, 100), Err(Error::FieldTooLarge { size: 243, .. })));
    }

    #[test]
    fn small_fields() {
        let f9 = FieldContext::new(3, 1, 2, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(f9.group_order(), 8);
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        let f125 = FieldContext::new(5, 1, 3, DEFAULT_SIZE_CAP).unwrap();
        let g = f125.generator();
        let mut x = g;
        let mut order = 1;
        while x != FieldElement::ONE {
            x = f125.mul(x, g);
            order += 1;
        }
        assert_eq!(order, 124);
    }

    #[test]
    fn subfield_of_729() {
        let ctx = FieldContext::new(3, 2, 3, DEFAULT_SIZE_CAP).unwrap();
        let fixed = ctx.elements().filter(|&x| ctx.frobenius(x, 2) == x).count();
        let member = ctx.elements().filter(|&x| ctx.is_in_subfield(x)).count();
        assert_eq!(fixed, 9);
        assert_eq!(member, 9);
    }

    #[test]
    fn index_arithmetic() {
        let ctx = FieldContext::new(3, 1, 2, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(ctx.mul(ctx.gen_pow(3), ctx.gen_pow(5)), FieldElement::ONE);
        for k in 1..8 {
            assert_eq!(ctx.inv(ctx.gen_pow(k)).unwrap(), ctx.gen_pow(8 - k));
        }
        assert_eq!(ctx.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
        assert_eq!(ctx.arith(ArithOp::Pow, ctx.generator(), Operand::Int(8)).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn frobenius_and_trace_in_classic_f9() {
        let ctx = f9_classic();
        let w = ctx.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(ctx.frobenius(w, 1), ctx.from_coeffs(&[1, 2]).unwrap());
        assert_eq!(ctx.trace_to_subfield(w), FieldElement::ONE);
        assert_eq!(ctx.trace_to_subfield(FieldElement::ONE), ctx.from_int(2));
        assert_eq!(ctx.absolute_trace(FieldElement::ONE), 2);
        assert_eq!(ctx.frobenius(FieldElement::ZERO, 1), FieldElement::ZERO);
    }

    #[test]
    fn tables_match_polynomial_paths() {
        let with = FieldContext::new(3, 2, 2, DEFAULT_SIZE_CAP).unwrap();
        let without = FieldContext::formula_only(3, 2, 2).unwrap();
        assert_eq!(with.generator(), without.generator());
        for x in with.elements() {
            assert_eq!(with.trace_to_subfield(x), without.trace_to_subfield(x));
            assert_eq!(with.absolute_trace(x), without.absolute_trace(x));
            assert_eq!(with.is_in_subfield(x), without.is_in_subfield(x));
            let y = with.gen_pow(x.code() * 7 + 3);
            assert_eq!(with.mul(x, y), without.mul(x, y));
            if !x.is_zero() {
                assert_eq!(with.log_mod(x, 16).unwrap(), without.log_mod(x, 16).unwrap());
                assert_eq!(with.chi2(x), without.chi2(x));
                if with.is_in_subfield(x) {
                    assert_eq!(with.subfield_log(x).unwrap(), without.subfield_log(x).unwrap());
                }
            }
        }
    }

    #[test]
    fn discrete_log_round_trip_125() {
        let ctx = FieldContext::new(5, 1, 3, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(ctx.discrete_log(FieldElement::ONE).unwrap(), 0);
        assert_eq!(ctx.discrete_log(ctx.generator()).unwrap(), 1);
        for k in 0..124 {
            assert_eq!(ctx.discrete_log(ctx.gen_pow(k)).unwrap(), k);
        }
        assert_eq!(ctx.discrete_log(FieldElement::ZERO), Err(Error::LogOfZero));
    }

    #[test]
    fn transitivity_of_traces() {
        let ctx = FieldContext::new(3, 2, 2, DEFAULT_SIZE_CAP).unwrap();
        for x in ctx.elements() {
            let t = ctx.trace_to_subfield(x);
            assert!(ctx.is_in_subfield(t));
            assert_eq!(ctx.absolute_trace(x), ctx.subfield_absolute_trace(t).unwrap());
        }
    }
}
