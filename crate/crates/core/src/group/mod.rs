//! Uniform interface over every finite-group realization: element
//! arithmetic, exhaustive enumeration, and the order statistics derived
//! from them.

mod analysis;
mod element;
pub mod perm;
mod realize;
mod spec;
mod spectrum;
pub mod table;

pub use analysis::{
    center_order, commuting_witness, count_cyclic_subgroups, cyclic_count_max,
    enumerated_spectrum, exponent, order_spectrum, phi, report, report_from_spectrum, PhiReport,
};
pub use element::Element;
pub use perm::Perm;
pub use realize::{
    enumeration_cap, mathieu11_generators, Elements, CAP_ENV_VAR, DEFAULT_ENUMERATION_CAP,
    MAX_ENUMERATED_DEGREE,
};
pub use spec::{
    AbelianType, GroupSpec, MetacyclicParams, MetacyclicPreset, PGroupParams,
};
pub use spectrum::Spectrum;
pub use table::{CayleyTable, CayleyTableFile, PermGroup};
