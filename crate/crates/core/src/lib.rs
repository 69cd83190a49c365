//! Exact Kazhdan-Lusztig polynomials, Z-polynomials and tau-invariants of
//! matroids given by their lattices of flats.
//!
//! Everything numeric is generic over a [`Coefficient`] ring; the `Int*`
//! aliases fix it to arbitrary-precision integers. Fixed-width
//! coefficients (`i64`, ...) panic on overflow rather than wrap.
//!
//! ```
//! use matkl::{Family, IntPoly};
//!
//! let m = Family::Cycle(6).build().unwrap().graphic_matroid().unwrap();
//! let p: IntPoly = matkl::kl_polynomial(&m);
//! assert_eq!(p.to_string(), "1 + 9t + 5t^2");
//! ```

pub mod bitset;
pub mod catalog;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod hecke;
pub mod io;
pub mod kl;
pub mod matroid;
pub mod poly;
pub mod scalar;
pub mod series;

use num_bigint::BigInt;

pub use bitset::ElementSet;
pub use error::{Axiom, Error, Result};
pub use graph::{parallel_connection, Family, Graph};
pub use hecke::{delta_map, DeletionMap, HElement, HeckeModule, NamedCheck};
pub use kl::{
    char_polynomial, kl_polynomial, s_set, tau, verify_deletion, z_polynomial, CheckStatus,
    DeletionReport, KlTable,
};
pub use matroid::{boolean_matroid, uniform_matroid, Matroid, DEFAULT_CAP};
pub use poly::LaurentPoly;
pub use scalar::Coefficient;
pub use series::BivariateSeries;

pub type IntPoly = LaurentPoly<BigInt>;
pub type IntKlTable = KlTable<BigInt>;
pub type IntHElement = HElement<BigInt>;
pub type IntHeckeModule = HeckeModule<BigInt>;
pub type IntSeries = BivariateSeries<BigInt>;
pub type IntDeletionReport = DeletionReport<BigInt>;
