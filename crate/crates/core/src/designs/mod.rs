//! Point sets on spheres: generators, the lifting construction from a
//! spherical design on `S^{n-2}`, and kernel-sum verification.

mod generators;
mod h4;
mod kernel;
mod lift;
mod pointset;

pub use generators::{generate, is_lex_positive, GeneratorKind};
pub use h4::{eval_h4_basis, eval_h4_basis_sum, eval_h4_printed_fifth, H4_BASIS, H4_PRINTED_FIFTH};
pub use kernel::{
    harmonic_index_spectrum, inner_product_set, kernel_sum, verify_harmonic_index,
    verify_spherical_design, DegreeResidual, InnerProductSet, KernelCertificate, DEFAULT_TOL,
    HIGH_DEGREE_TOL, MERGE_TOL,
};
pub use lift::{lift_by_root_index, lift_design, separated_component_sums, ComponentSum};
pub use pointset::{format_coordinate, PointSet, DISTINCT_TOL, NORM_TOL};
