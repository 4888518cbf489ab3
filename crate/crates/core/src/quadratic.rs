//! The quadratic form Q_c(x) = Tr(c·x·Tr(x)) on F_{q^n} viewed as F_q^n.
//!
//! Matrices hold subfield elements of the big field; all arithmetic goes
//! through the context.

use num_complex::Complex64;
use serde::Serialize;

use crate::characters::{additive_char_eval, Level};
use crate::error::{Error, Result};
use crate::exact::{sign_pow, tau_pow, ExactGauss, GaussianInt};
use crate::field::{FieldContext, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub entries: Matrix,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entries as subfield logarithms (t with entry = h^t), `None` for zero.
    pub fn to_index_json(&self, ctx: &FieldContext) -> serde_json::Value {
        let rows: Vec<Vec<Option<u64>>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| ctx.subfield_log(x).ok()).collect())
            .collect();
        serde_json::to_value(rows).expect("plain arrays serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalForm {
    pub diag: Vec<FieldElement>,
    pub rank: usize,
    pub delta: FieldElement,
    pub eta2_delta: i8,
    /// M with M·U·Mᵀ = diag(a_1, …, a_l, 0, …, 0)
    #[serde(skip)]
    pub transform: Matrix,
    #[serde(skip)]
    pub dim: usize,
}

/// The F_q-basis 1, w, …, w^{n−1} where w is the class of the indeterminate.
pub fn q_power_basis(ctx: &FieldContext) -> Vec<FieldElement> {
    let n = ctx.n() as usize;
    if n == 1 {
        return vec![FieldElement::ONE];
    }
    let w = ctx.from_coeffs(&[0, 1]).expect("degree is at least 2");
    let mut out = Vec::with_capacity(n);
    let mut cur = FieldElement::ONE;
    for _ in 0..n {
        out.push(cur);
        cur = ctx.mul(cur, w);
    }
    out
}

/// Q_c(x) = Tr(c·x·Tr(x))
pub fn q_c(ctx: &FieldContext, c: FieldElement, x: FieldElement) -> FieldElement {
    ctx.trace_to_subfield(ctx.mul(c, ctx.mul(x, ctx.trace_to_subfield(x))))
}

pub fn gram_matrix(ctx: &FieldContext, c: FieldElement) -> Result<GramMatrix> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let basis = q_power_basis(ctx);
    let n = basis.len();
    let half = ctx.inv(ctx.from_int(2))?;
    let diag: Vec<FieldElement> = basis.iter().map(|&v| q_c(ctx, c, v)).collect();
    let mut entries = vec![vec![FieldElement::ZERO; n]; n];
    for i in 0..n {
        entries[i][i] = diag[i];
        for j in i + 1..n {
            let joint = q_c(ctx, c, ctx.add(basis[i], basis[j]));
            let b = ctx.mul(half, ctx.sub(ctx.sub(joint, diag[i]), diag[j]));
            entries[i][j] = b;
            entries[j][i] = b;
        }
    }
    Ok(GramMatrix { entries })
}

/// X·U·Xᵀ for a coordinate row vector X.
pub fn eval_form(ctx: &FieldContext, u: &Matrix, x: &[FieldElement]) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for (i, row) in u.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        let mut inner = FieldElement::ZERO;
        for (j, &e) in row.iter().enumerate() {
            inner = ctx.add(inner, ctx.mul(e, x[j]));
        }
        acc = ctx.add(acc, ctx.mul(x[i], inner));
    }
    acc
}

fn row_axpy(ctx: &FieldContext, m: &mut Matrix, dst: usize, f: FieldElement, src: usize) {
    let srow = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(srow) {
        *d = ctx.add(*d, ctx.mul(f, s));
    }
}

fn col_axpy(ctx: &FieldContext, m: &mut Matrix, dst: usize, f: FieldElement, src: usize) {
    for row in m.iter_mut() {
        row[dst] = ctx.add(row[dst], ctx.mul(f, row[src]));
    }
}

fn swap_sym(m: &mut Matrix, i: usize, j: usize) {
    m.swap(i, j);
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

/// Symmetric congruence diagonalization over F_q (odd characteristic).
pub fn diagonalize(ctx: &FieldContext, gram: &GramMatrix) -> DiagonalForm {
    let n = gram.dim();
    let mut a = gram.entries.clone();
    let mut m: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO }).collect())
        .collect();
    let one = FieldElement::ONE;
    let mut rank = 0;
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                // zero diagonal: adding row/col j to i makes a_ii = 2·a_ij ≠ 0
                let hit = (k..n).find_map(|i| (i + 1..n).find(|&j| !a[i][j].is_zero()).map(|j| (i, j)));
                let Some((i, j)) = hit else { break };
                row_axpy(ctx, &mut a, i, one, j);
                col_axpy(ctx, &mut a, i, one, j);
                row_axpy(ctx, &mut m, i, one, j);
                i
            }
        };
        if pivot != k {
            swap_sym(&mut a, pivot, k);
            m.swap(pivot, k);
        }
        let inv = ctx.inv(a[k][k]).expect("pivot is nonzero");
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = ctx.neg(ctx.mul(a[r][k], inv));
            row_axpy(ctx, &mut a, r, f, k);
            col_axpy(ctx, &mut a, r, f, k);
            row_axpy(ctx, &mut m, r, f, k);
        }
        rank += 1;
    }
    let diag: Vec<FieldElement> = (0..rank).map(|i| a[i][i]).collect();
    let delta = diag.iter().fold(FieldElement::ONE, |acc, &x| ctx.mul(acc, x));
    let eta2_delta = ctx.eta2_subfield(delta).expect("entries lie in F_q");
    DiagonalForm { diag, rank, delta, eta2_delta, transform: m, dim: n }
}

/// Rank by ordinary Gaussian elimination, independent of the congruence path.
pub fn matrix_rank(ctx: &FieldContext, u: &Matrix) -> usize {
    let mut a = u.clone();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(piv, rank);
        let inv = ctx.inv(a[rank][col]).expect("nonzero pivot");
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = ctx.neg(ctx.mul(a[r][col], inv));
                row_axpy(ctx, &mut a, r, f, rank);
            }
        }
        rank += 1;
    }
    rank
}

pub fn radical_dimension(ctx: &FieldContext, c: FieldElement) -> Result<usize> {
    let g = gram_matrix(ctx, c)?;
    Ok(ctx.n() as usize - diagonalize(ctx, &g).rank)
}

/// η_2(δ) for Q_c: η_2(c) when c ∈ F_q*, η_2(−1) otherwise.
pub fn eta2_delta(ctx: &FieldContext, c: FieldElement) -> Result<i8> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if ctx.is_in_subfield(c) {
        ctx.eta2_subfield(c)
    } else {
        ctx.eta2_subfield(ctx.from_int(-1))
    }
}

/// Σ_x ψ(c·x·Tr(x)) in closed form:
/// (−1)^{s+1}·η_2(c)·τ^s·q^{n−1/2} for c ∈ F_q*, q^{n−1} otherwise.
pub fn quad_char_sum(ctx: &FieldContext, c: FieldElement) -> Result<ExactGauss> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let n = ctx.n();
    if ctx.is_in_subfield(c) {
        let s = ctx.s() as u64;
        let eta = ctx.eta2_subfield(c)? as i128;
        let coeff = tau_pow(ctx.p(), s).scale(sign_pow(s + 1) * eta);
        Ok(ExactGauss::new(coeff, 2 * n - 1))
    } else {
        Ok(ExactGauss::new(GaussianInt::ONE, 2 * n - 2))
    }
}

pub fn quad_char_sum_direct(ctx: &FieldContext, c: FieldElement) -> Result<Complex64> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for x in ctx.elements() {
        acc += additive_char_eval(ctx, ctx.mul(c, ctx.mul(x, ctx.trace_to_subfield(x))), Level::Full)?.to_complex();
    }
    Ok(acc)
}

/// Σ_{X ∈ F_q^m} ψ̃(X·U·Xᵀ) = (−1)^{l(s+1)}·τ^{ls}·η_2(δ)·q^{m−l/2}, l the rank.
pub fn form_char_sum_closed(ctx: &FieldContext, form: &DiagonalForm) -> ExactGauss {
    let l = form.rank as u64;
    let s = ctx.s() as u64;
    let coeff = tau_pow(ctx.p(), l * s).scale(sign_pow(l * (s + 1)) * form.eta2_delta as i128);
    ExactGauss::new(coeff, (2 * form.dim as u64 - l) as u32)
}

pub fn form_char_sum_direct(ctx: &FieldContext, u: &Matrix) -> Result<Complex64> {
    let sub = ctx.subfield_elements();
    let q = sub.len();
    let m = u.len();
    let mut digits = vec![0usize; m];
    let mut acc = Complex64::new(0.0, 0.0);
    loop {
        let x: Vec<FieldElement> = digits.iter().map(|&d| sub[d]).collect();
        acc += additive_char_eval(ctx, eval_form(ctx, u, &x), Level::Subfield)?.to_complex();
        let mut i = 0;
        loop {
            if i == m {
                return Ok(acc);
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
