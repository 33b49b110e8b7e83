//! Essential walls in charge coordinates and lattice paths into an
//! asymptotic chamber.
//!
//! The wall `h_i - h_j = κm` with `h_i = κs_i - i/ℓ` reads
//! `s_i - s_j = m + (i - j)/(κℓ)` in charge coordinates.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fock::FockParam;
use crate::rat::{self, Rat};

/// The hyperplane `h_i - h_j = κm`, `i < j` (0-based), relevant for
/// multipartitions of size below `n_scope`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    pub i: usize,
    pub j: usize,
    pub m: i64,
    pub n_scope: usize,
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}-h{}={}κ", self.i + 1, self.j + 1, self.m)
    }
}

/// Signed distance `(s_i - s_j) - (m + (i - j)/(κℓ))` of the charges from
/// the wall.
pub fn wall_position_at(w: &Wall, p: &FockParam, charges: &[Rat]) -> Result<Rat> {
    let kappa = p.kappa().as_rational().ok_or_else(|| Error::Unsupported {
        branch: "walls",
        detail: "walls need a rational κ".into(),
    })?;
    let ell = rat::int(p.level() as i64);
    let offset = rat::int(w.i as i64 - w.j as i64) / (kappa * ell);
    Ok((&charges[w.i] - &charges[w.j]) - (rat::int(w.m) + offset))
}

pub fn wall_position(w: &Wall, p: &FockParam) -> Result<Rat> {
    wall_position_at(w, p, p.charges())
}

/// All `(i, j, m)` with `i < j`, `|m| < n` and `s_i - s_j - m ∈ κ⁻¹ℤ`.
pub fn essential_walls(p: &FockParam, n: usize) -> Result<Vec<Wall>> {
    let modulus = p.modulus().ok_or_else(|| Error::Unsupported {
        branch: "walls",
        detail: "walls need a rational κ".into(),
    })?;
    let bound = n as i64 - 1;
    let mut out = Vec::new();
    for i in 0..p.level() {
        for j in i + 1..p.level() {
            let d = p.charge(i) - p.charge(j);
            for m in -bound..=bound {
                if rat::modulo(&(&d - rat::int(m)), &modulus).is_zero() {
                    out.push(Wall {
                        i,
                        j,
                        m,
                        n_scope: n,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `s_j < s_i - n` for every `i ≠ j`.
pub fn is_asymptotic_at(charges: &[Rat], j: usize, n: usize) -> bool {
    let n = rat::int(n as i64);
    charges
        .iter()
        .enumerate()
        .all(|(i, s)| i == j || charges[j] < s - &n)
}

pub fn is_asymptotic(p: &FockParam, j: usize, n: usize) -> bool {
    is_asymptotic_at(p.charges(), j, n)
}

/// Crossing of one wall between two parameters that no other essential wall
/// separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingStep {
    pub wall: Wall,
    /// Sign of the change of `s_i - s_j`.
    pub direction: i8,
    pub source: Vec<Rat>,
    pub target: Vec<Rat>,
}

impl CrossingStep {
    pub fn reversed(&self) -> CrossingStep {
        CrossingStep {
            wall: self.wall.clone(),
            direction: -self.direction,
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }
}

impl fmt::Display for CrossingStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}) -> ({})",
            self.wall,
            rat::display_list(&self.source),
            rat::display_list(&self.target)
        )
    }
}

/// Planned sequence of crossings from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub start: Vec<Rat>,
    pub end: Vec<Rat>,
    pub steps: Vec<CrossingStep>,
}

impl Path {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn reversed(&self) -> Path {
        Path {
            start: self.end.clone(),
            end: self.start.clone(),
            steps: self
                .steps
                .iter()
                .rev()
                .map(CrossingStep::reversed)
                .collect(),
        }
    }
}

/// Moves `s_j` down by the modulus `|1/κ|` until the parameter is asymptotic
/// for size `n`, recording each essential wall crossed.
///
/// Between two consecutive crossings the path needs a parameter strictly
/// inside the chamber; the first lattice point in that gap is used, and the
/// midpoint of the gap when it contains no lattice point.
pub fn plan_path(p: &FockParam, j: usize, n: usize) -> Result<Path> {
    if j >= p.level() {
        return Err(Error::Path(format!("component {} out of range", j + 1)));
    }
    let step = p.modulus().ok_or_else(|| Error::Unsupported {
        branch: "plan_path",
        detail: "path planning needs a rational κ".into(),
    })?;
    let walls: Vec<Wall> = essential_walls(p, n)?
        .into_iter()
        .filter(|w| w.i == j || w.j == j)
        .collect();
    let start = p.charges().to_vec();
    let at = |g: &Rat| -> Vec<Rat> {
        let mut s = start.clone();
        s[j] = &s[j] - &step * g;
        s
    };

    // crossing parameters g, measured in moves from the start
    let mut crossings: Vec<(Rat, Wall)> = Vec::new();
    let mut moves = 0i64;
    loop {
        let here = at(&rat::int(moves));
        for w in &walls {
            if wall_position_at(w, p, &here)?.is_zero() {
                return Err(Error::Path(format!(
                    "lattice point ({}) lies on {w}",
                    rat::display_list(&here)
                )));
            }
        }
        if is_asymptotic_at(&here, j, n) {
            break;
        }
        let next = at(&rat::int(moves + 1));
        let mut in_move: Vec<(Rat, Wall)> = Vec::new();
        for w in &walls {
            let a = wall_position_at(w, p, &here)?;
            let b = wall_position_at(w, p, &next)?;
            if a.is_positive() != b.is_positive() {
                let tau = &a / (&a - &b);
                in_move.push((rat::int(moves) + tau, w.clone()));
            }
        }
        in_move.sort_by(|x, y| x.0.cmp(&y.0));
        for pair in in_move.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::Path(format!(
                    "walls {} and {} are met at the same point",
                    pair[0].1, pair[1].1
                )));
            }
        }
        crossings.extend(in_move);
        moves += 1;
    }
    let total = rat::int(moves);

    // one representative per gap between consecutive crossings
    let mut reps: Vec<Rat> = vec![Rat::zero()];
    for k in 1..crossings.len() {
        let (lo, hi) = (&crossings[k - 1].0, &crossings[k].0);
        let first_int = lo.floor() + rat::int(1);
        reps.push(if &first_int < hi {
            first_int
        } else {
            (lo + hi) / rat::int(2)
        });
    }
    reps.push(total.clone());

    let steps = crossings
        .into_iter()
        .enumerate()
        .map(|(k, (_, wall))| {
            // moving s_j down raises s_i - s_j when j is the wall's second index
            let direction = if wall.j == j { 1 } else { -1 };
            CrossingStep {
                wall,
                direction,
                source: at(&reps[k]),
                target: at(&reps[k + 1]),
            }
        })
        .collect();
    Ok(Path {
        start: start.clone(),
        end: at(&total),
        steps,
    })
}

/// Index of the smallest charge, the first one on ties.
pub fn asymptotic_target(p: &FockParam) -> usize {
    let charges = p.charges();
    (0..charges.len())
        .min_by(|&a, &b| charges[a].cmp(&charges[b]).then(a.cmp(&b)))
        .expect("at least one charge")
}
