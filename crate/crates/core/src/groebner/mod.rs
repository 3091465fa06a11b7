//! Gröbner bases and the ideal operations built on them.

pub mod buchberger;
pub mod ideal;
pub mod ops;

pub use buchberger::{buchberger, is_groebner_basis, normal_form};
pub use ideal::Ideal;
pub use ops::{
    elementwise_power, eliminate, ideal_equal, intersect, intersect_all, power, pure_part, pure_part_by,
    quotient, quotient_ideal, quotient_length, relative_length, saturate, saturate_ideal, saturate_maximal,
    torsion_length, PowerScalars,
};
