//! Exact computations on linear systems of binary forms.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, a prime field, and dense exact linear algebra.
//! * [`binform`]: binary forms in `u, v` (the spaces `V_n`).
//! * [`mpoly`]: sparse multivariate polynomials in `x0..x{k+1}`, polynomial
//!   matrices and their determinants, projective points and lines.
//! * [`syzygy`]: syzygies of a linear system, the splitting type of its kernel
//!   bundle, and the three codimension counts of a syzygy stratum.
//! * [`poncelet`]: Schwarzenberger band matrices, Poncelet hypersurfaces,
//!   osculating hyperplanes, vertex/line configurations.

pub mod binform;
pub mod error;
pub mod exact;
pub mod mpoly;
pub mod poncelet;
pub mod syzygy;

pub use binform::BinForm;
pub use error::{Error, Result};
pub use exact::{ExactMatrix, Field, Fp, Matrix, Rational};
pub use mpoly::{MPoly, PolyMatrix, ProjLine, ProjPoint};
pub use syzygy::{LinearSystem, SplittingType, Syzygy};
