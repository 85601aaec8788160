//! Exact exterior-algebra toolkit for orthogonal Plücker-type relation
//! checks.
//!
//! The crate provides, in layers:
//!
//! * [`space`], [`blade`], [`form`] — sparse exterior algebra over a
//!   diagonal ±1 metric with exact rational (or ℚ(√3)) coefficients:
//!   wedge, contraction, musical isomorphisms, form inner product, Hodge
//!   dual, and the infinitesimal rotation action of 2-forms.
//! * [`plucker`] — the classical simplicity test `ι_Ξ F ∧ F = 0` and the
//!   orthogonal relation `[ι_Ξ F, F] = 0`, with full residual reports and
//!   a coordinate-expression cross-check.
//! * [`decomp`] — verification and best-effort discovery of splittings of
//!   a form into mutually orthogonal simple parts.
//! * [`nlie`] — metric n-Lie (Filippov) brackets built from forms and
//!   back, Jacobi/invariance residuals, double extensions, and catalogs
//!   of low-dimensional metric Lie algebras.
//! * [`normal_form`] — floating-point skew normal forms of 2-forms
//!   (euclidean and lorentzian), the one numerically approximate module,
//!   bridged back to exact arithmetic by rationalization.
//! * [`ansatz`], [`harness`] — the built-in parametrized case table with
//!   its polynomial constraints, seeded randomized trials, and reports.
//! * [`io`] — JSON formats for forms, brackets, decompositions and
//!   reports shared with the CLI.

pub mod ansatz;
pub mod blade;
pub mod decomp;
pub mod error;
pub mod form;
pub mod harness;
pub mod io;
pub mod linalg;
pub mod nlie;
pub mod normal_form;
pub mod plucker;
pub mod scalar;
pub mod space;

pub use blade::Blade;
pub use error::{AlgebraError, Result};
pub use form::{Form, Plane, Polyvector};
pub use scalar::{Rat, Scalar, Sqrt3};
pub use space::MetricSpace;
