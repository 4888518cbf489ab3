//! Benchmark fixtures: fields and curves reused across benches.

use tracecurve_core::count::curve_ingest;
use tracecurve_core::{CurveSpec, FieldContext, DEFAULT_SIZE_CAP};

/// (p, s, n) for a small, a medium and a large tabulated field.
pub const FIELDS: [(u64, u32, u32); 3] = [(3, 1, 4), (7, 1, 4), (5, 2, 4)];

pub fn field(p: u64, s: u32, n: u32) -> FieldContext {
    FieldContext::new(p, s, n, DEFAULT_SIZE_CAP).expect("fixture field")
}

/// y^d = g·x·Tr(x) + g^3
pub fn curve(ctx: &FieldContext, d: u64) -> CurveSpec {
    curve_ingest(ctx, d, ctx.gen_pow(1), ctx.gen_pow(3)).expect("fixture curve")
}

pub fn label(ctx: &FieldContext) -> String {
    format!("{}^{}", ctx.q(), ctx.n())
}
