//! Exact symmetric-function algebra over the rational-function field in the
//! parameters `q`, `t`, `u`.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalars`] — sparse multivariate polynomials and reduced rational
//!   functions with arbitrary-precision rational coefficients; the
//!   coefficient field for everything else.
//! * [`shapes`] — partitions, Ferrers and skew diagrams, semi-standard and
//!   standard tableaux, RSK, and the charge/cocharge machinery.
//! * [`symfunc`] — the ring of symmetric functions with its six classical
//!   bases plus the `π`-basis, basis conversion, products, scalar products,
//!   skewing, Kronecker products, and Jacobi–Trudi determinants.
//! * [`plethysm`] — plethystic substitution `f[A]` for alphabets built from
//!   variables, parameters, and symmetric functions.
//! * [`macdonald`] — the deformed scalar products, Macdonald `P_μ` and `H_μ`
//!   bases, `q,t`-Kostka polynomials, and the eigenoperators `Δ`, `∇`,
//!   `Δ_f`, `D₀` with their `t = 1` and `t = 1/q` specializations.
//! * [`rectangular`] — `(m,n)`-staircases, Dyck paths, parking functions,
//!   rectangular Catalan counts (direct, cyclic-sum, constant-term), the
//!   `Q_{mn}` operator family, and seed expansions.
//! * [`tamari`] — the rotation order on `(m,n)`-Dyck paths with interval and
//!   decorated-interval enumeration and interval Schur sums.
//!
//! All arithmetic is exact; every value is canonical, so equality of results
//! is structural equality.

#![deny(missing_docs)]
#![forbid(unsafe_code)]

pub(crate) mod linalg;
pub mod macdonald;
pub mod plethysm;
pub mod rectangular;
pub mod scalars;
pub mod shapes;
pub mod symfunc;

pub use macdonald::EigenOp;
pub use rectangular::{DyckPath, EhaOperator, ParkingFunction, RectangularError};
pub use scalars::{Param, ParamRat, ScalarError};
pub use shapes::{Biword, Partition, ShapeError, SkewShape, SsytFilter, Tableau};
pub use symfunc::{Basis, SymFunc};
