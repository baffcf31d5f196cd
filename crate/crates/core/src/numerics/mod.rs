//! Desk-scale numerical zeta engine.

pub mod gamma;
pub mod riemann_siegel;
pub mod scan;
pub mod zeros;
pub mod zeta;

pub use riemann_siegel::{riemann_siegel_theta, riemann_siegel_z, theta_from_gamma};
pub use scan::{mu_scan, MuScanReport};
pub use zeros::{
    argument_principle_count, check_asymptotic, count_zeros, empirical_n_sigma_t, rvm_main_term,
    Certificate, SigmaCount, ZeroCountReport,
};
pub use zeta::{chi, zeta, zeta_alternating, zeta_em, ComplexPoint, ZetaEval};
