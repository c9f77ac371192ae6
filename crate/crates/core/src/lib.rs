//! Quasi-prime spectra of finite commutative rings.

pub mod battery;
pub mod bitset;
pub mod checks;
pub mod dsl;
pub mod error;
pub mod finring;
pub mod ideals;
pub mod report;
pub mod spectra;
mod syntax;
pub mod topspace;

pub use bitset::BitSet;
pub use dsl::{build_ring, parse_ring, RingExpr};
pub use error::{Error, Result};
pub use finring::{AxiomCheck, Elem, FiniteRing, RingHom, RingOptions};
pub use ideals::{enumerate_ideals, max_regular_ideals, Ideal, IdealClassification};
pub use spectra::{SpectralData, Spectrum, SpectrumKind, SpectrumMap};
pub use topspace::{ContinuousMap, FinTopSpace, TSpace, TopOptions};
pub use checks::{run_checks, CheckOptions, CheckResult, Status};
pub use report::Report;
