//! The `κ = 0` case: the algebra is a product of rank-one algebras for the
//! cyclic group `ℤ/ℓ`, and supports are read off from which rank-one simples
//! are infinite dimensional.
//!
//! Parameters are the values `h_1, …, h_ℓ` (indices modulo `ℓ`, defined up to
//! a common summand); `c = 0` is the case of equal values. The standard
//! module of component `i` is `ℂ[x] ⊗ χ_i` where the generator of `ℤ/ℓ` acts
//! on `χ_i` by `ζ^i` and on `x` by `ζ`. The lowering generator `y` sends
//! `x^m ⊗ v` to `a_m x^{m-1} ⊗ v`, and the defining commutation relation
//! gives
//!
//! ```text
//! a_m = a_{m-1} + 1 - D(m - 1 + i),   D(u) = -ℓ (h_{-u} - h_{-u-1}),
//! ```
//!
//! `D(u)` being the eigenvalue of the reflection term on the weight line of
//! character `ζ^u`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::Multipartition;
use crate::rat::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankOneParam {
    h: Vec<Rat>,
}

impl RankOneParam {
    pub fn new(h: Vec<Rat>) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::InvalidParameter(
                "at least one h value is required".into(),
            ));
        }
        Ok(RankOneParam { h })
    }

    /// All reflection parameters zero.
    pub fn zero(level: usize) -> Self {
        RankOneParam {
            h: vec![Rat::zero(); level.max(1)],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        RankOneParam::new(rat::parse_list(text)?)
    }

    pub fn level(&self) -> usize {
        self.h.len()
    }

    pub fn h_values(&self) -> &[Rat] {
        &self.h
    }

    /// `h_k` with `k` read modulo `ℓ`, `h_ℓ = h_0`.
    pub fn h(&self, k: i64) -> &Rat {
        let ell = self.level() as i64;
        let r = k.rem_euclid(ell);
        let idx = if r == 0 { ell } else { r };
        &self.h[idx as usize - 1]
    }

    /// Reflection term `D(u)` on the weight line of character `ζ^u`.
    pub fn reflection_term(&self, u: i64) -> Rat {
        let ell = rat::int(self.level() as i64);
        -(ell * (self.h(-u) - self.h(-u - 1)))
    }

    /// `a_1, …, a_count` for the standard module of component `i`
    /// (1-based), by applying the commutation relation degree by degree.
    pub fn lowering_scalars(&self, i: usize, count: usize) -> Vec<Rat> {
        let mut out = Vec::with_capacity(count);
        let mut a = Rat::zero();
        for m in 1..=count as i64 {
            a = a + rat::int(1) - self.reflection_term(m - 1 + i as i64);
            out.push(a.clone());
        }
        out
    }

    /// `S(r) = Σ_{k<r} D(k + i)` for `r = 0..ℓ`; `a_m = m - S(m mod ℓ)`.
    fn offsets(&self, i: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero()];
        let mut acc = Rat::zero();
        for k in 0..self.level() as i64 {
            acc += self.reflection_term(k + i as i64);
            out.push(acc.clone());
        }
        let full = out.pop().expect("ℓ + 1 entries");
        assert!(
            full.is_zero(),
            "reflection terms over a period sum to {full}"
        );
        out
    }

    /// Bound `B` such that `a_m ≠ 0` for all `m > B`: since `a_m - m` is
    /// ℓ-periodic, a zero satisfies `m = |a_m - m| ≤ max_r |S(r)|`.
    pub fn search_bound(&self, i: usize) -> usize {
        let max = self
            .offsets(i)
            .iter()
            .map(|s| s.abs().ceil())
            .max()
            .unwrap_or_else(Rat::zero);
        rat::to_i64(&max).expect("bound fits in i64") as usize
    }

    /// Dimension of the simple quotient of the standard module of component
    /// `i`, or `None` when it is infinite dimensional.
    pub fn finite_dimension(&self, i: usize) -> Option<usize> {
        let bound = self.search_bound(i);
        self.lowering_scalars(i, bound)
            .iter()
            .position(Rat::is_zero)
            .map(|k| k + 1)
    }

    /// Components whose rank-one simple has one-dimensional support.
    pub fn infinite_components(&self) -> Vec<usize> {
        (1..=self.level())
            .filter(|&i| self.finite_dimension(i).is_none())
            .collect()
    }

    /// `q(λ) = Σ_{i ∈ I} |λ^{(i)}|` over the infinite components `I`.
    pub fn kappa_zero_q(&self, lam: &Multipartition) -> Result<usize> {
        if lam.level() != self.level() {
            return Err(Error::LevelMismatch {
                expected: self.level(),
                found: lam.level(),
            });
        }
        Ok(self
            .infinite_components()
            .into_iter()
            .map(|i| lam.comp(i - 1).size())
            .sum())
    }
}

impl fmt::Display for RankOneParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "κ=0 h=({})", rat::display_list(&self.h))
    }
}
