//! Floating-point special functions: the normalized Gegenbauer kernel
//! `Q_{n,t}`, its roots and minimum, and Bessel functions of the first kind.

mod bessel;
mod gegenbauer;

pub use bessel::{bessel_first_zero, bessel_j, BesselSpec, ZERO_SCAN_STEP};
pub use gegenbauer::{
    dim_harmonic, jacobi_symmetric_p, kernel_value, q_eval, q_min, q_roots, KernelSpec,
    MinimumMethod, MinimumReport, MIN_RELATIVE_TOL, ROOT_RESIDUAL_TOL,
};
