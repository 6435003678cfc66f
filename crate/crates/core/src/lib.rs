//! Schur rigidity of Schubert classes in cominuscule homogeneous spaces,
//! decided from root-system combinatorics.

pub mod cominuscule;
pub mod error;
pub mod golden;
pub mod invariants;
pub mod rigidity;
pub mod translation;
pub mod root_system;
pub mod verify;
pub mod weyl;

pub use cominuscule::{build_space, CominusculeSpace, HassePoset, SchubertClass, SpaceKind};
pub use error::{Error, Result};
pub use invariants::{AJInvariant, Bigrade, ClassInvariant, Direction};
pub use rigidity::{classify, flex_certificate, Classification, FlexCertificate, ObstructionReport};
pub use root_system::{build_root_system, Family, Root, RootSystem};
pub use weyl::{poincare_dual, WeylWord};
