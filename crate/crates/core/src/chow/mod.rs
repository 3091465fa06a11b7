//! Projection formulas, ideals of Chow equations and Chow hulls.

pub mod ideals;
pub mod projection;
pub mod sample;

pub use ideals::{
    axes_chow_monomial, axes_projection_pullback, axes_ring, chow_hull, chow_ideal_axes,
    chow_ideal_hypersurface_pair, derivative_ideal, find_weight_subset, CycleSpec, PairForm,
};
pub use projection::{apply_projection, ProjectionSpec};
pub use sample::{axes_cycle, sample_chow_ideal, SampleOptions, SampleReport};
