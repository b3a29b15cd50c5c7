//! Interval tensor certification library.
//!
//! Decides positive (semi-)definiteness and Hurwitz stability of interval
//! tensors `[A_c - Delta, A_c + Delta]` through the finite vertex-tensor
//! reduction, with eigenvalue-based certificates, explicit 4th-order
//! 3-dimensional sufficient conditions, and brute-force oracles at desk
//! scale.
//!
//! Layout:
//! - [`tensor`]: dense symmetric-aware tensors and homogeneous forms;
//! - [`interval`]: interval tensors, sign vectors, vertex tensors;
//! - [`spectra`]: inclusion disks and H-/Z-eigenvalue solvers;
//! - [`certify`]: decision procedures, sufficient conditions, oracles;
//! - [`corpus`]: built-in boundary instances.

pub mod certify;
pub mod corpus;
pub mod error;
pub mod interval;
pub mod spectra;
pub mod tensor;

pub use certify::{
    check_corollary_43, check_hurwitz_general, check_hurwitz_symmetric, check_interval_pd,
    check_interval_pd_via_symmetrization, check_point_pd, check_theorem_5x_interval,
    oracle_extreme_points_pd, oracle_quotient_min, oracle_sphere_min, Certificate, CheckOptions,
    Mode, SphereTarget, Status, Verdict,
};
pub use error::{Error, Result};
pub use interval::{enumerate_sign_vectors, IntervalTensor, SignVector, VertexMode};
pub use spectra::{EigenEstimate, EigenKind, Extremum, SolverOptions};
pub use tensor::DenseTensor;
