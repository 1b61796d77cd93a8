//! Cohomology spaces and characteristic classes of extensions.

mod classes;
mod cohomology;

pub use classes::{
    chern_weil, delta_f, f_sigma, invariant_for_sections, secondary_class, verify_main_theorem,
    CharacteristicClass, DeltaF, InvarianceMode, TheoremReport,
};
pub use cohomology::{
    betti_numbers, classes_equal, cohomology_space, differential_matrix, trivial_betti_numbers,
    CohomologySpace,
};
