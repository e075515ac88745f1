//! Exact arithmetic for noncommutative Jordan superalgebras.

pub mod algebra;
pub mod catalog;
pub mod constructions;
pub mod field;
pub mod identities;
pub mod io;
pub mod linalg;
pub mod module;
pub mod peirce;
pub mod poly;
pub mod representations;
pub mod structure;
pub mod suite;
