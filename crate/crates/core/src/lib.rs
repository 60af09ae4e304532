//! Exact computations around the saturated tensor cone of an untwisted
//! affine Kac-Moody algebra: root data, affine Weyl group combinatorics,
//! Schubert structure constants, truncated tensor multiplicities and the
//! inequality description of the cone.

pub mod cone;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod repmult;
pub mod root_data;
pub mod scalar;
pub mod schubert;
pub mod selfcheck;
pub mod syntax;
pub mod weyl;

pub use error::{Error, Result};
pub use root_data::{AffineCoweight, AffineRootData, AffineWeight, CartanType, FiniteRootData};
pub use poly::IntPoly;
pub use scalar::Scalar;
pub use schubert::{LocalizationTable, StructureTable};
pub use weyl::{AffineWeylElt, AffineWeylGroup, Ball, ParabolicSpec};

/// Arbitrary-precision rational numbers; the default scalar.
pub type Rat = num_rational::BigRational;
pub type Weight = AffineWeight<Rat>;
pub type Coweight = AffineCoweight<Rat>;
pub type RootData = AffineRootData<Rat>;
pub type FiniteData = FiniteRootData<Rat>;
