//! Finite bounded posets, their lattice properties, and posets of
//! `m`-multichains.
//!
//! The poset of `m`-multichains `P^(m)` of a bounded poset `P` consists of
//! the weakly increasing tuples `p_1 <= ... <= p_m`, ordered componentwise.
//! This crate constructs it, checks which structural properties carry over
//! from `P`, builds product EL-labelings, and counts multichains through the
//! zeta polynomial.

mod bits;
pub mod error;
pub mod families;
pub mod incidence;
pub mod io;
pub mod isomorphism;
pub mod lattice;
pub mod multichain;
pub mod poset;
pub mod shellability;

pub use bits::{BitMatrix, BitSet};
pub use error::{LatticeFailure, PosetError, Result};
pub use poset::{direct_power, direct_product, element_cap, set_element_cap, ElementId, Poset, Subposet};
