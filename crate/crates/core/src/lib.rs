//! Fusion rings given by integer structure constants, and the invariants used
//! to study nilpotent fusion categories and their universal grading groups.
//!
//! The central type is [`FusionRing`]. Everything else is a pure function of
//! one or more rings: Frobenius-Perron dimensions, subrings and the upper
//! central series ([`structure`]), the universal grading ([`grading`]), named
//! families and isomorphism ([`families`]), theorem checks ([`analysis`]), and
//! the text formats ([`io`]).

pub mod analysis;
pub mod error;
pub mod families;
pub mod grading;
pub mod group;
pub mod io;
pub mod ring;
pub mod structure;

pub use error::{AxiomViolation, Error, Identity, Result};
pub use grading::{GradingMap, UniversalGrading};
pub use group::{GroupHom, GroupProfile, GroupTable};
pub use ring::FusionRing;
pub use structure::BasisSubset;
