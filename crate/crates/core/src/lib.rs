//! Exact computation of BPS invariants of planar curve singularities through
//! normal rulings of rainbow closures of positive braids, with closed-form
//! cross-checks for torus knots and ADE singularities and the sequence
//! predicates (log-concavity, no internal zeros, unimodality) they are
//! tested against.
//!
//! Module map:
//!
//! - [`exactalg`]: sparse Laurent polynomials in `q^{1/2}`, `z`, `(a, q^{1/2})`
//! - [`braidcore`]: positive braid words and their classical invariants
//! - [`rulingdp`]: normal-ruling enumeration over involution states
//! - [`closedforms`]: torus-knot and ADE closed forms, independence polynomials
//! - [`concavity`]: sequence predicates and convolution
//! - [`scanner`]: multiplicativity checks, single-peak evaluation, parallel scans

pub mod braidcore;
pub mod closedforms;
pub mod concavity;
pub mod exactalg;
pub mod rulingdp;
pub mod scanner;

pub use braidcore::BraidWord;
pub use exactalg::{BpsSequence, HalfLaurent, ZLaurent};
