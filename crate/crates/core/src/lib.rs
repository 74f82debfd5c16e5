//! Finite inverse semigroups, their ordered groupoids, premorphisms, holomorphs
//! and heap-preserving maps, plus bounded-window arithmetic in bicyclic and
//! polycyclic monoids.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod esn;
pub mod flow;
pub mod groupoid;
pub mod heap;
pub mod holomorph;
pub mod io;
pub mod morphisms;
pub mod polycyclic;
pub mod report;
pub mod search;
pub mod semigroup;
pub mod sog;

pub use error::{Error, Result};
pub use groupoid::OrderedGroupoid;
pub use report::Report;
pub use semigroup::{FiniteGroup, InverseSemigroup};
