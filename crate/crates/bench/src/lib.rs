//! Workload fixtures shared by the benchmarks.

use cherednik_core::rat::frac;
use cherednik_core::{FockParam, Multipartition, Parameter, RankOneParam};

/// The four chambers of `κ = -1/2`, `ℓ = 2`, by their second charge.
pub const CHAMBER_CHARGES: [i64; 4] = [-4, -2, 0, 2];

pub fn chamber(s2: i64) -> FockParam {
    FockParam::rational(frac(-1, 2), &[0, s2]).expect("valid parameter")
}

/// A level-three parameter whose charges form one class.
pub fn level_three() -> FockParam {
    FockParam::rational(frac(-1, 3), &[0, 1, -2]).expect("valid parameter")
}

/// `κ = 0` with one finite rank-one component.
pub fn kappa_zero() -> Parameter {
    RankOneParam::new(vec![frac(1, 2), frac(0, 1)])
        .expect("valid parameter")
        .into()
}

pub fn labels(level: usize, n: usize) -> Vec<Multipartition> {
    Multipartition::all(level, n)
}
