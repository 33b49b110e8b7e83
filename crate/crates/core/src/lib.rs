//! Combinatorics of supports of simple modules in cyclotomic rational Cherednik
//! category O for the groups `G(ℓ,1,n)`.
//!
//! Simples are labelled by ℓ-multipartitions. The support of a simple is
//! determined by two integers `(p, q)`: `p` is the depth of the label in the
//! Kac-Moody crystal on charged multipartitions and `q` is its depth in the
//! commuting level-one Heisenberg crystal. The latter is computed by moving the
//! parameter to an asymptotic chamber with explicit wall-crossing bijections.
//!
//! Everything is exact: parameters and contents are arbitrary precision
//! rationals and no floating point is used anywhere in the engine.

pub mod chambers;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod heisenberg;
pub mod oracles;
pub mod partitions;
pub mod rank_one;
pub mod rat;
pub mod supports;
pub mod wallcross;

pub use chambers::{CrossingStep, Path, Wall};
pub use crystal::{CrystalWord, KmCrystal};
pub use error::{Error, Result};
pub use fock::{
    Conventions, FockParam, GenericSign, Kappa, OrderKey, ResidueClass, Sign, ZSignature,
};
pub use partitions::{BoxRef, Cell, Multipartition, Partition};
pub use rank_one::RankOneParam;
pub use rat::Rat;
pub use supports::{support, Parameter, SupportResult, TraceEvent};
pub use wallcross::PairSide;
