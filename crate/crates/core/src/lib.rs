//! Exact computational algebra for small 2-groups and quadratic form arithmetic.
//!
//! The crate has three layers:
//!
//! * [`group`] and [`fp`] — Cayley-table groups, categorical constructions
//!   (products, pullbacks, central products, quotients), coset enumeration of
//!   finite presentations, and a registry of named groups (`D`, `C`, `Q8`,
//!   `G1`, `G2`, the pullbacks `DwC`, `DwD`, the central product `DD`, ...).
//! * [`field`] and [`rigidity`] — finite square-class models of concrete
//!   fields with exact Hilbert-symbol tables, value sets of binary forms,
//!   rigidity profiles and the realizability deciders for `G1`/`G2`.
//! * [`tower`] — exact arithmetic in iterated quadratic extensions of the
//!   rationals, norm-equation searches, and automorphism-group computation,
//!   used to build the Galois towers realizing `DwC`/`G1` and `DwD`/`G2`.
//!
//! [`laws`] cross-checks the group laws and structure facts that the rest of
//! the crate relies on, over the whole zoo of named groups.

pub mod field;
pub mod fp;
pub mod group;
pub mod laws;
pub mod rigidity;
pub mod tower;
