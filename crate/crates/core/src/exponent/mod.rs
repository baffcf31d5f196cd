//! Exact exponent calculus for zero-density bounds.
//!
//! Bounds are written in η = 1 - σ on `(0, 1/2]`, with B(η) = A(1 - η) and
//! `N(σ, T) ≪ T^{B(η)·η + ε}`. Everything here is exact rational
//! arithmetic except the power-law record, which is handled through
//! certified enclosures.

pub mod bound;
pub mod calculus;
pub mod crossover;
pub mod envelope;
pub mod mu;
pub mod registry;

pub use bound::{BoundExpr, BoundRecord, EtaInterval, Value};
pub use calculus::{
    asymptotic_annotation, best_max_form, closed_form_bound, closed_form_record, max_form_bound,
    max_form_record, max_form_validity, max_form_validity_note, montgomery_bound,
    montgomery_bound_with, montgomery_pieces, prime_gap_exponent, u_ell, v_ell,
};
pub use crossover::{crossover, crossover_exprs, default_width, Crossover, Root};
pub use envelope::{
    dh_break_range, envelope, sigma_of, sup_a, trivial_from, DhRange, Envelope, Segment, SupA,
    SupValue,
};
pub use mu::{alpha_ell, mu_hl, mu_vdc, HypothesisMode, MuPoint, MuSource, MuTable, ELL_CAP};
pub use registry::{default_registry, named_bound, records_for, BoundId};
