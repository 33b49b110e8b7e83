//! Wall-crossing bijections on labels.
//!
//! Near a wall `h_i - h_j = κm` only the components `j` and `i` interact, and
//! the crystal on such a pair is one of two `sl_∞`-crystals on bipartitions
//! `(A, B)`: a box of `A` has label `x - y`, a box of `B` has label
//! `x - y + m`, and at equal label side [`PairSide::First`] lists the box of
//! `A` first while [`PairSide::Second`] lists the box of `B` first. `wc_m` is
//! the size-preserving bijection intertwining the two.

use std::fmt;

use crate::chambers::{CrossingStep, Path};
use crate::crystal::{mullineux, Crystal, CrystalWord};
use crate::error::{Error, Result};
use crate::fock::{FockParam, Sign};
use crate::partitions::{BoxRef, Cell, Multipartition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairSide {
    First,
    Second,
}

impl PairSide {
    pub fn other(self) -> PairSide {
        match self {
            PairSide::First => PairSide::Second,
            PairSide::Second => PairSide::First,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            PairSide::First => 1,
            PairSide::Second => 2,
        }
    }
}

impl fmt::Display for PairSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.number())
    }
}

/// One of the two crystals on bipartitions attached to `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCrystal {
    pub m: i64,
    pub side: PairSide,
}

impl PairCrystal {
    pub fn new(m: i64, side: PairSide) -> Self {
        PairCrystal { m, side }
    }

    fn label(&self, slot: usize, cell: Cell) -> i64 {
        if slot == 0 {
            cell.content()
        } else {
            cell.content() + self.m
        }
    }

    /// Signed boxes of label `i`, in listing order.
    fn signature(&self, a: &Partition, b: &Partition, i: i64) -> Vec<(usize, Sign, Cell)> {
        let mut out = Vec::with_capacity(2);
        for (slot, p) in [(0, a), (1, b)] {
            let unshifted = if slot == 0 { i } else { i - self.m };
            if let Some(c) = p.addable_with_content(unshifted) {
                out.push((slot, Sign::Plus, c));
            }
            if let Some(c) = p.removable_with_content(unshifted) {
                out.push((slot, Sign::Minus, c));
            }
        }
        if self.side == PairSide::Second {
            out.reverse();
        }
        // a lone "-+" pair cancels; nothing else can
        if out.len() == 2 && out[0].1 == Sign::Minus && out[1].1 == Sign::Plus {
            out.clear();
        }
        out
    }

    pub fn pair_e(&self, a: &Partition, b: &Partition, i: i64) -> Option<(Partition, Partition)> {
        let sig = self.signature(a, b, i);
        let (slot, _, cell) = sig.into_iter().find(|e| e.1 == Sign::Minus)?;
        Some(if slot == 0 {
            (a.with_removed(cell)?, b.clone())
        } else {
            (a.clone(), b.with_removed(cell)?)
        })
    }

    pub fn pair_f(&self, a: &Partition, b: &Partition, i: i64) -> Option<(Partition, Partition)> {
        let sig = self.signature(a, b, i);
        let (slot, _, cell) = sig.into_iter().rev().find(|e| e.1 == Sign::Plus)?;
        Some(if slot == 0 {
            (a.with_added(cell)?, b.clone())
        } else {
            (a.clone(), b.with_added(cell)?)
        })
    }

    fn labels_of(
        &self,
        a: &Partition,
        b: &Partition,
        cells: fn(&Partition) -> Vec<Cell>,
    ) -> Vec<i64> {
        let mut out: Vec<i64> = cells(a)
            .into_iter()
            .map(|c| self.label(0, c))
            .chain(cells(b).into_iter().map(|c| self.label(1, c)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The singular bipartition of the given size, if there is one: a
    /// rectangle `A` whose corner has label `m` on side [1], a rectangle `B`
    /// whose corner has label `0` on side [2].
    pub fn singular_of_size(&self, size: usize) -> Option<(Partition, Partition)> {
        if size == 0 {
            return Some((Partition::empty(), Partition::empty()));
        }
        // corner of a c×r rectangle has content c - r
        let diff = match self.side {
            PairSide::First => self.m,
            PairSide::Second => -self.m,
        };
        (1..=size).find_map(|rows| {
            let cols = rows as i64 + diff;
            (cols >= 1 && cols as usize * rows == size).then(|| {
                let rect = Partition::rectangle(cols as usize, rows);
                match self.side {
                    PairSide::First => (rect, Partition::empty()),
                    PairSide::Second => (Partition::empty(), rect),
                }
            })
        })
    }
}

fn pair_of(lam: &Multipartition) -> (&Partition, &Partition) {
    assert_eq!(lam.level(), 2, "pair crystals act on bipartitions");
    (lam.comp(0), lam.comp(1))
}

fn bipartition(pair: (Partition, Partition)) -> Multipartition {
    Multipartition::from(vec![pair.0, pair.1])
}

impl Crystal for PairCrystal {
    type Label = i64;

    fn labels(&self, lam: &Multipartition) -> Vec<i64> {
        let (a, b) = pair_of(lam);
        self.labels_of(a, b, Partition::removable)
    }

    fn creation_labels(&self, lam: &Multipartition) -> Vec<i64> {
        let (a, b) = pair_of(lam);
        self.labels_of(a, b, Partition::addable)
    }

    fn e(&self, lam: &Multipartition, i: &i64) -> Option<Multipartition> {
        let (a, b) = pair_of(lam);
        self.pair_e(a, b, *i).map(bipartition)
    }

    fn f(&self, lam: &Multipartition, i: &i64) -> Option<Multipartition> {
        let (a, b) = pair_of(lam);
        self.pair_f(a, b, *i).map(bipartition)
    }
}

/// `wc_m(A, B)` seen from `from`: ascend in the `from` crystal, swap the
/// singular head for the singular element of the same size on the other
/// side, and descend there along the same word.
pub fn wc_pair(
    a: &Partition,
    b: &Partition,
    m: i64,
    from: PairSide,
) -> Result<(Partition, Partition)> {
    let source = PairCrystal::new(m, from);
    let target = PairCrystal::new(m, from.other());
    let start = bipartition((a.clone(), b.clone()));
    let (head, word): (Multipartition, CrystalWord<i64>) = source.ascend(&start);
    let size = head.size();
    let expected = source.singular_of_size(size).map(bipartition);
    if expected.as_ref() != Some(&head) {
        return Err(Error::WallCrossing(format!(
            "wc_{m} from side {from}: ({a}, {b}) ascends to ({}, {}), which is not a \
             singular rectangle pair",
            head.comp(0),
            head.comp(1)
        )));
    }
    let other_head = target
        .singular_of_size(size)
        .map(bipartition)
        .ok_or_else(|| {
            Error::WallCrossing(format!(
                "wc_{m}: side {} has no singular element of size {size}",
                from.other()
            ))
        })?;
    let image = target.descend(&other_head, &word).ok_or_else(|| {
        Error::WallCrossing(format!(
            "wc_{m} from side {from}: replaying {word} from ({}, {}) hits zero",
            other_head.comp(0),
            other_head.comp(1)
        ))
    })?;
    let mut comps = image.into_comps();
    let b2 = comps.pop().expect("two components");
    let a2 = comps.pop().expect("two components");
    Ok((a2, b2))
}

/// Side of the pair crystal seen from a parameter off the wall: the slot
/// whose box has the smaller order key at equal label is listed first.
pub fn side_at(step: &CrossingStep, p: &FockParam) -> PairSide {
    let source = p.with_charges(step.source.clone());
    let (i, j, m) = (step.wall.i, step.wall.j, step.wall.m);
    // label 0 in both slots: (1,1) in component j, content -m in component i
    let j_box = BoxRef::new(j, 1, 1);
    let i_box = BoxRef::new(i, (1 - m).max(1) as usize, (1 + m).max(1) as usize);
    if source.order_key(&j_box) < source.order_key(&i_box) {
        PairSide::First
    } else {
        PairSide::Second
    }
}

/// Crossing a single wall `(i, j, m)`: `(λ^{(j)}, λ^{(i)})` is replaced by
/// its image under `wc_m`, other components are unchanged.
pub fn wc_wall(lam: &Multipartition, step: &CrossingStep, p: &FockParam) -> Result<Multipartition> {
    let (i, j, m) = (step.wall.i, step.wall.j, step.wall.m);
    let (a, b) = wc_pair(lam.comp(j), lam.comp(i), m, side_at(step, p))?;
    Ok(lam.with_comp(j, a).with_comp(i, b))
}

pub fn transport(lam: &Multipartition, path: &Path, p: &FockParam) -> Result<Multipartition> {
    path.steps
        .iter()
        .try_fold(lam.clone(), |cur, step| wc_wall(&cur, step, p))
}

/// Level-one wall-crossing: `λ = eλ' + λ''` goes to `(e·λ'^t + M(λ''))^t`.
pub fn wc_type_a(lam: &Partition, e: usize) -> Result<Partition> {
    if e < 2 {
        return Err(Error::precondition("wc_type_a", "e must be at least 2"));
    }
    let (quot, rem) = lam.div_rem(e);
    let m = mullineux(&rem, e)?;
    Ok(quot.transpose().scale(e).add(&m).transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chambers::plan_path;
    use crate::rat::frac;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn wc(s: &str, m: i64, from: PairSide) -> String {
        let lam: Multipartition = s.parse().unwrap();
        let (a, b) = wc_pair(lam.comp(0), lam.comp(1), m, from).unwrap();
        bipartition((a, b)).to_string()
    }

    #[test]
    fn empty_pair() {
        for m in -3..=3 {
            for side in [PairSide::First, PairSide::Second] {
                assert_eq!(wc("-|-", m, side), "-|-");
                let c = PairCrystal::new(m, side);
                for i in -5..=5 {
                    assert!(c
                        .pair_e(&Partition::empty(), &Partition::empty(), i)
                        .is_none());
                }
            }
        }
    }

    #[test]
    fn singular_rectangles() {
        let first = PairCrystal::new(-2, PairSide::First);
        let second = PairCrystal::new(-2, PairSide::Second);
        assert_eq!(
            first.singular_of_size(3),
            Some((part("1,1,1"), Partition::empty()))
        );
        assert_eq!(
            second.singular_of_size(3),
            Some((Partition::empty(), part("3")))
        );
        assert_eq!(first.singular_of_size(2), None);
        let tall: Multipartition = "1,1,1|-".parse().unwrap();
        let wide: Multipartition = "-|3".parse().unwrap();
        assert!(first.is_singular(&tall));
        assert!(second.is_singular(&wide));
    }

    #[test]
    fn zero_wall_swaps() {
        for n in 0..=4 {
            for lam in Multipartition::all(2, n) {
                let swapped = bipartition((lam.comp(1).clone(), lam.comp(0).clone()));
                for side in [PairSide::First, PairSide::Second] {
                    assert_eq!(wc(&lam.to_string(), 0, side), swapped.to_string());
                }
            }
        }
    }

    #[test]
    fn short_walls_are_trivial() {
        for m in [-3i64, -2, 2, 3] {
            for n in 0..(m.unsigned_abs() as usize) {
                for lam in Multipartition::all(2, n) {
                    for side in [PairSide::First, PairSide::Second] {
                        assert_eq!(wc(&lam.to_string(), m, side), lam.to_string());
                    }
                }
            }
        }
    }

    #[test]
    fn minus_two_on_size_three() {
        assert_eq!(wc("-|3", -2, PairSide::First), "1|2");
        assert_eq!(wc("1|2", -2, PairSide::First), "1,1|1");
        assert_eq!(wc("1,1|1", -2, PairSide::First), "1,1,1|-");
        assert_eq!(wc("1,1,1|-", -2, PairSide::First), "-|3");
    }

    #[test]
    fn relabelled_wall_gives_same_map() {
        for m in -3..=3 {
            for side in [PairSide::First, PairSide::Second] {
                for lam in Multipartition::all_up_to(2, 5) {
                    let (a, b) = wc_pair(lam.comp(0), lam.comp(1), m, side).unwrap();
                    let (b2, a2) = wc_pair(lam.comp(1), lam.comp(0), -m, side.other()).unwrap();
                    assert_eq!((a, b), (a2, b2));
                }
            }
        }
    }

    #[test]
    fn crossing_first_wall_of_worked_example() {
        let p = FockParam::rational(frac(-1, 2), &[0, -2]).unwrap();
        let path = plan_path(&p, 1, 3).unwrap();
        assert_eq!(path.len(), 1);
        // crossing back from chamber (1) into chamber (2)
        let back = path.reversed();
        let cycle = ["-|3", "1|2", "1,1|1", "1,1,1|-", "-|3"];
        for pair in cycle.windows(2) {
            let lam: Multipartition = pair[0].parse().unwrap();
            assert_eq!(
                wc_wall(&lam, &back.steps[0], &p).unwrap().to_string(),
                pair[1]
            );
        }
    }

    #[test]
    fn type_a_examples() {
        for e in [2usize, 3] {
            let row = Partition::new(vec![2 * e]).unwrap();
            assert_eq!(
                wc_type_a(&row, e).unwrap(),
                Partition::new(vec![2; e]).unwrap()
            );
            let square = Partition::new(vec![e, e]).unwrap();
            assert_eq!(
                wc_type_a(&square, e).unwrap(),
                Partition::new(vec![1; 2 * e]).unwrap()
            );
        }
        assert_eq!(
            wc_type_a(&Partition::empty(), 2).unwrap(),
            Partition::empty()
        );
    }
}
