//! Generic initial ideals in the reverse-lexicographic order over prime
//! fields, Borel-fixed monomial ideals and the monomial invariants of
//! codimension-two projective varieties.

#![no_std]

extern crate alloc;

pub mod corpus;
pub mod error;
pub mod field;
pub mod gin;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod monomial_ideal;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Elem, PrimeField, DEFAULT_PRIME};
pub use gin::{
    check_connectedness, connectedness_report, gin, variety_invariants, ConnectednessReport, GinConfig, GinResult,
    VarietyInvariants,
};
pub use groebner::Ideal;
pub use monomial::{revlex_cmp, Monomial, MonomialOrder, MAX_VARS};
pub use monomial_ideal::{InvariantProfile, InvariantTable, MonomialIdeal, MultiIndex, Violation};
pub use poly::{LinearChange, LinearForm, Polynomial, Ring, Term};
