//! Point counts of y^d = a·x·Tr(x) + b over F_{q^n}: table-driven finite field
//! arithmetic, exact character values, Gauss sums, the quadratic form
//! Q_c(x) = Tr(c·x·Tr(x)), and closed-form and brute-force counting.

pub mod characters;
pub mod count;
pub mod error;
pub mod exact;
pub mod field;
pub mod numtheory;
mod poly;
pub mod quadratic;

pub use characters::{AdmissibilityData, AdmissibilityReason, Level};
pub use error::{Error, Result};
pub use exact::{CharValue, ExactGauss, GaussianInt, QSurd, RootOfUnity};
pub use field::{ContextSummary, FieldContext, FieldElement, DEFAULT_SIZE_CAP};
pub use count::{ClosedOutcome, CountReport, CurveSpec, Method};
pub use quadratic::{DiagonalForm, GramMatrix};
