//! First-order deformations over `k[ε]` of plane curve singularities and of the coordinate
//! axes, with decision procedures for flatness, C-flatness and K-flatness.

pub mod cartier;
pub mod cn;
pub mod format;
pub mod plane;
pub mod semigroup;

pub use cartier::{cartier_principal_test, example_ideal_generators, CartierReport, ExampleIdeal, ExampleKind};
pub use cn::{
    cn_central_fiber_ideal, cn_central_fiber_ideal_general, cn_central_fiber_torsion, cn_chow_vanishing, cn_is_flat,
    cn_is_kflat, cn_normalize, cn_projection_equation, cn_refute_kflat, cn_smoothing, cn_smoothing_span_rank, CnDeformation,
    ProjectionEquation, Refutation, RefuteOptions, Smoothing, SpanRank,
};
pub use format::{format_cn, format_plane, parse_cn, parse_plane};
pub use plane::{plane_classify, section_mul, CurveSectionRep, PlaneCurveDeformation, PlaneFlags};
pub use semigroup::{
    check_semigroup_lemma, monomial_cflat_nonglobal_dim, semigroup_gaps, semigroup_member, LemmaPart, MonomialCurve,
    NumericalSemigroup, SemigroupLemmaReport,
};
