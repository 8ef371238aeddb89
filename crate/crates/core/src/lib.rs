//! Exact point counts of quiver Grassmannians for the Kronecker quiver.
//!
//! Counts are returned as polynomials in `q`, the size of the ground field:
//!
//! ```
//! use kgrass::engine::count;
//! use kgrass::kronecker_model::KroneckerDescriptor;
//!
//! let m: KroneckerDescriptor = "P0 + P1".parse().unwrap();
//! assert_eq!(count(&m, 1, 0).to_string(), "q^2 + q + 1");
//! ```

pub mod cli;
pub mod closed_form;
pub mod engine;
pub mod hall_polys;
pub mod kronecker_model;
pub mod oracle;
pub mod qbinom;
