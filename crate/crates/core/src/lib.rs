//! Hesitant fuzzy sets over finite universes, hesitant fuzzy soft sets,
//! β-covering neighborhoods and the rough approximations built on them.
//!
//! All arithmetic is exact: degrees are fixed-point integers and means are
//! rationals, so every inclusion test is decided without tolerance.
//!
//! ```
//! use hfsc_core::{HesitantElement, InclusionKind};
//!
//! let a: HesitantElement = "0.2,0.3,0.4".parse().unwrap();
//! let b: HesitantElement = "0.2,0.4,0.5".parse().unwrap();
//! assert_eq!(a.intersect(&b).to_string(), "{0.4,0.4,0.3,0.2,0.2}");
//! assert!(a.included_in(InclusionKind::A, &b));
//! ```

pub mod approx;
pub mod degree;
pub mod element;
pub mod error;
pub mod hfs;
pub mod neighborhood;
pub mod soft;

pub use approx::{ApproxReport, ApproximationPair, CrispApproximationPair};
pub use degree::{Degree, DegreeLiteral, DEFAULT_PRECISION, MAX_PRECISION};
pub use element::{HesitantElement, InclusionKind};
pub use error::Error;
pub use hfs::{family_intersect, family_union, HesitantFuzzySet, ObjectSet, Universe};
pub use neighborhood::{crisp_of, CrispNeighborhood, FuzzyNeighborhood, NeighborhoodRow, NeighborhoodTable};
pub use soft::{CoveringSpace, HesitantFuzzySoftSet, PairTable};
