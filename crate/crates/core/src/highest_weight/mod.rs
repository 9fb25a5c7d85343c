//! Weight posets, standard and costandard modules, `Ext` groups and
//! standard/costandard filtrations.

mod ext;
mod filtration;
mod poset;
mod registry;
mod verify;

pub use ext::{
    ext1, ext1_dim, ext1_from_presentation, ext1_witness_factor, ext2_dim, projective_presentation, pushout, Ext1,
    Extension, Presentation, ProjectiveSummand,
};
pub use filtration::{subquotient, FiltrationKind, FiltrationWitness};
pub use poset::WeightPoset;
pub use registry::{candidate_covers, Registry, Weight};
pub use verify::{verify_standard_category, CategoryReport, Check};
pub use verify::{END_IS_FIELD, EXT1_VANISHING, EXT2_VANISHING, EXT_DIRECTION, HIGHEST_WEIGHT, HOM_VANISHING, SPLIT};
