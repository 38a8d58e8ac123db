//! Exact Bott residue localization for the degree of the locus of degree-`d`
//! hypersurfaces in `P^n` that are singular along a member of a family `W`.
//!
//! The crate is organised bottom-up:
//!
//! - [`charalg`]: torus characters and virtual representations.
//! - [`monideal`]: monomial ideals, degree slices and Hilbert functions.
//! - [`polyfit`]: exact rational polynomials and Lagrange interpolation.
//! - [`localize`]: weights, elementary symmetric functions, Grassmannian
//!   tangents, blow-ups and the Bott sum itself.
//! - [`families`]: fixed-point generators for the six supported families.
//!
//! A typical computation generates the fixed points of a family once and
//! evaluates [`localize::bott_sum`] at each degree of interest:
//!
//! ```
//! use bott_core::families::Family;
//! use bott_core::localize::bott_sum;
//!
//! let lines = Family::Linear { k: 1, n: 3 };
//! let points = lines.fixed_points().unwrap();
//! let w = lines.default_weights();
//! assert_eq!(bott_sum(&points, 3, &w).unwrap().to_string(), "504");
//! ```

pub mod charalg;
pub mod error;
pub mod families;
pub mod localize;
pub mod monideal;
pub mod polyfit;

pub use error::{Error, Result};
