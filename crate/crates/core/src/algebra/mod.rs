//! Integer and modular linear algebra on chain complexes.

mod chain;
mod cohomology;
mod homology;
mod matrix;
pub(crate) mod modp;

pub use chain::{boundary_matrix, coboundary};
pub use cohomology::{cohomology_basis, cohomology_basis_degree, is_lattice_basis, CohomologyBasis};
pub use homology::{
    homology, homology_with_jobs, invariant_factors_of, universal_coefficients, Coefficients, DegreeGroup,
    HomologyGroups,
};
pub(crate) use homology::homology_invariant_factors;
pub use matrix::{smith_normal_form, smith_normal_form_with_inverses, IntMatrix, Snf};
pub use modp::is_prime;
