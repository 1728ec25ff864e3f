//! Computer algebra for finite Boolean rings, centered on power-set rings.
//!
//! A power-set ring P(X) carries symmetric difference as addition and
//! intersection as multiplication; every element is idempotent. This crate
//! provides:
//!
//! - ring arithmetic over an arbitrary finite ground set ([`GroundSet`],
//!   [`RingElem`]), with the canonical order, atoms, and pointwise evaluation;
//! - finitely generated ideals in canonical principal form ([`Ideal`]), with
//!   membership, sums, intersections, products, radicals, and the
//!   prime/primary/maximal predicates;
//! - the maximal spectrum and certified reduced primary decompositions
//!   ([`decompose`], [`Decomposition`]), together with an exhaustive
//!   uniqueness search and a prime-power analogue over the integers;
//! - quotients P(X)/P(A) ≅ P(X − A) ([`quotient`]), characteristic-function
//!   tables, and the identification of a generic finite Boolean ring with the
//!   power-set ring over its atoms ([`GenericBoolRing`], [`StoneMap`]);
//! - the finite–cofinite algebra over a countable universe ([`FinCofElem`]),
//!   whose nonzero witnesses show that no finite family of point ideals can
//!   intersect to zero — why an infinite universe admits no finite reduced
//!   decomposition of (0);
//! - definitional brute-force oracles and runnable verification suites
//!   ([`verify`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be freely shared across threads.

pub mod error;
mod ground;
mod elem;
pub mod ideal;
pub mod spectrum;
pub mod intdemo;
pub mod quotient;
pub mod generic;
pub mod fincof;
pub mod verify;

pub use error::{Error, Result};
pub use ground::GroundSet;
pub use elem::RingElem;
pub use ideal::{enumerate_ideals, enumerate_ideals_bounded, Ideal, DEFAULT_ORACLE_BOUND};
pub use spectrum::{
    contained_factor_index, decompose, maximal_ideals, search_reduced_decompositions,
    Decomposition, MaxIdealDescriptor,
};
pub use intdemo::{divisibility_cross_check, prime_power_factors};
pub use quotient::{from_function_table, quotient, to_function_table, QuotientMap};
pub use generic::{GenericBoolRing, StoneMap, STONE_DEFAULT_BOUND};
pub use fincof::{witness_nonzero, FinCofElem};
pub use verify::{run_all, VerifyConfig, VerifyReport};
