//! `SO_5` over a small prime field: enumeration, the class `C`, and the
//! line-count and coset-model evaluations of the virtual character `Φ`.

mod check;
mod classc;
pub mod field;
mod induced;
pub mod matrix;
mod space;

pub use check::{split_line_type, verify_so5, verify_so5_exhaustive, verify_so5_sampled, DEFAULT_SAMPLES};
pub use classc::{
    anisotropic_lines, fixed_line_scalar, in_class_c, is_unipotent_22_type, phi, trace_phi, trace_phi_over,
    ClassCLabel,
};
pub use field::PrimeField;
pub use induced::{perp_witt, phi_coset, CosetModel, SubgroupChar, Witt};
pub use space::{
    enumerate_group, generators, LineType, OrthElement, ProjLine, QuadraticSpace5, DEFAULT_ENUMERATION_CAP,
};
