//! Exact symbolic intersection theory on a small family of ambient spaces.
//!
//! The engine computes, with checked integer arithmetic throughout:
//!
//! * Chow-ring arithmetic for products of projective spaces and for surface
//!   Picard lattices, including blow-ups and blow-down pushforwards
//!   ([`chow`]);
//! * total Chern class arithmetic: Whitney products and quotients, duals,
//!   tangent classes, structure-sheaf classes of divisors ([`chern`]);
//! * CSM classes of complements of simple-normal-crossing arrangements and
//!   of all their strata, pushed into the ambient ring ([`log_csm`]);
//! * the compactly supported characteristic class by localization and
//!   Mayer–Vietoris, with step-by-step verifiers for the identities that
//!   relate it to the CSM class ([`char_class`]);
//! * integer and Grothendieck–Witt-valued compactly supported Euler
//!   characteristics by scissor relations ([`motivic`]).
//!
//! All values are immutable after construction and every operation is pure,
//! so everything here is safe to use from any number of threads.

mod error;

pub mod char_class;
pub mod chern;
pub mod chow;
pub mod log_csm;
pub mod motivic;

pub use char_class::{
    CompactificationDiagram, CompatReport, InductionLevel, InductionReport, MainIdentityReport,
};
pub use chern::TotalChernClass;
pub use chow::{AmbientSpace, BlowDownMap, ChowClass, SurfaceLattice};
pub use error::{Error, Result};
pub use log_csm::{AdditivityReport, DivisorArrangement};
pub use motivic::{GWElement, SpaceExpression, SpaceKind};
