//! Exact computation of dimensions and degrees of k-flex loci of general
//! hypersurfaces, the ruled locus and line counts, via Schubert calculus
//! on the Grassmannian of lines — together with an exact contact-order
//! oracle for explicit hypersurface/line pairs.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there are no floating-point numbers anywhere in the crate. The degree
//! of the k-flex locus is computed by three independent routes (a direct
//! coefficient summation, a Catalan-trapezoid summation, and a Chern-class
//! pairing on the incidence variety) which must agree.

pub mod catalan;
pub mod chow_phi;
pub mod contact;
pub mod error;
pub mod formulas;
pub mod poly;
pub mod schubert;
pub mod verify;

pub use error::{Error, Result};

pub use catalan::{binomial, catalan_closed, catalan_recursive};
pub use chow_phi::{
    chern_total, degree_phi, degree_vk_chern, phi_mul, top_grade_component, zeta_power,
    PhiElement,
};
pub use contact::{
    affine_contact_order, contact_order, is_kflex_line, jacobian_rank_check,
    jacobian_rank_check_truncated, submersion_witness, taylor_coeffs,
    taylor_coeffs_via_derivatives, ContactOrder,
};
pub use formulas::{
    build_report, classify_locus, dim_gamma_k, flex_degree_closed, lambda_coeffs,
    lines_on_general_hypersurface, mu_coeffs, mu_direct, n_k_lambda, n_k_mu, ruled_locus,
    Coefficients1D, FlexReport, LocusClass, RouteValue,
};
pub use poly::{parse_poly, MultiPoly, ProjPoint, Rational};
pub use schubert::{
    chow_mul, degree_grassmannian, mul_sigma1_power_closed, mul_sigma1_power_iter,
    pieri_sigma1, ChowElement, SchubertIndex,
};
pub use verify::{run_suite, Suite, SuiteResult};
