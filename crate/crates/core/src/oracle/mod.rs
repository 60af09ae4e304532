//! Independent reference implementations used to cross-check the main code
//! paths. They favour directness over speed and share no intermediate
//! tables with the routines they check.

pub mod characters;
pub mod schubert;
pub mod weyl;
