//! The signature-rule crystal on charged multipartitions (`ŝl_e`, or `sl_∞`
//! when `κ` is formal) and the Mullineux involution.

use std::fmt;

use crate::error::{Error, Result};
use crate::fock::{Conventions, FockParam, Kappa, ResidueClass};
use crate::partitions::{Multipartition, Partition};
use crate::rat;

/// Labels of annihilation operators in application order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CrystalWord<L = ResidueClass> {
    steps: Vec<L>,
}

impl<L> CrystalWord<L> {
    pub fn new() -> Self {
        CrystalWord { steps: Vec::new() }
    }

    pub fn push(&mut self, label: L) {
        self.steps.push(label);
    }

    pub fn steps(&self) -> &[L] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl<L: fmt::Display> fmt::Display for CrystalWord<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, l) in self.steps.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

/// A crystal on multipartitions given by partial operators `ẽ_z`, `f̃_z`.
pub trait Crystal {
    type Label: Clone + Ord + fmt::Debug + fmt::Display;

    /// Labels whose annihilation operator may act on `λ`; every other label
    /// must kill it.
    fn labels(&self, lam: &Multipartition) -> Vec<Self::Label>;

    /// Labels whose creation operator may act on `λ`.
    fn creation_labels(&self, lam: &Multipartition) -> Vec<Self::Label>;

    fn e(&self, lam: &Multipartition, z: &Self::Label) -> Option<Multipartition>;

    fn f(&self, lam: &Multipartition, z: &Self::Label) -> Option<Multipartition>;

    /// Multiset of labels that `ẽ_z` must remove exactly one copy of, if the
    /// crystal has a block invariant.
    fn block(&self, _lam: &Multipartition) -> Option<Vec<Self::Label>> {
        None
    }

    fn is_singular(&self, lam: &Multipartition) -> bool {
        self.labels(lam).iter().all(|z| self.e(lam, z).is_none())
    }

    /// Applies annihilation operators, smallest label first, until the result
    /// is singular.
    fn ascend(&self, lam: &Multipartition) -> (Multipartition, CrystalWord<Self::Label>) {
        let mut cur = lam.clone();
        let mut word = CrystalWord::new();
        'outer: loop {
            for z in self.labels(&cur) {
                if let Some(next) = self.e(&cur, &z) {
                    cur = next;
                    word.push(z);
                    continue 'outer;
                }
            }
            return (cur, word);
        }
    }

    /// Replays `word` backwards with creation operators.
    fn descend(
        &self,
        head: &Multipartition,
        word: &CrystalWord<Self::Label>,
    ) -> Option<Multipartition> {
        let mut cur = head.clone();
        for z in word.steps().iter().rev() {
            cur = self.f(&cur, z)?;
        }
        Some(cur)
    }
}

/// The crystal of a level-ℓ charged Fock space.
#[derive(Clone, Debug)]
pub struct KmCrystal {
    param: FockParam,
    conv: Conventions,
}

impl KmCrystal {
    pub fn new(param: FockParam) -> Self {
        KmCrystal {
            param,
            conv: Conventions::default(),
        }
    }

    /// A crystal built with nonstandard conventions, for mutation tests.
    pub fn with_conventions(param: FockParam, conv: Conventions) -> Self {
        KmCrystal { param, conv }
    }

    pub fn param(&self) -> &FockParam {
        &self.param
    }

    pub fn e_op(&self, lam: &Multipartition, z: &ResidueClass) -> Option<Multipartition> {
        let sig = self.param.z_signature_with(lam, z, &self.conv).reduced();
        let b = sig.leftmost_minus()?.bx;
        lam.with_removed(b)
    }

    pub fn f_op(&self, lam: &Multipartition, z: &ResidueClass) -> Option<Multipartition> {
        let sig = self.param.z_signature_with(lam, z, &self.conv).reduced();
        let b = sig.rightmost_plus()?.bx;
        lam.with_added(b)
    }

    /// The depth `p` of `λ`: the length of the ascent to its singular head.
    pub fn depth(&self, lam: &Multipartition) -> usize {
        lam.size() - self.ascend(lam).0.size()
    }

    /// Residue class of a content given as an integer.
    pub fn residue(&self, content: i64) -> ResidueClass {
        self.param.residue_of(&rat::int(content))
    }

    /// All residue classes meeting integer contents; `None` when `κ` is formal
    /// (infinitely many classes).
    pub fn all_residues(&self) -> Option<Vec<ResidueClass>> {
        let m = self.param.modulus()?;
        // ℤ meets e residue classes modulo e/|a|
        let e = self.param.e()? as i64;
        let mut out = Vec::new();
        for s in self.param.charges() {
            for k in 0..e {
                out.push(ResidueClass(rat::modulo(&(s + rat::int(k)), &m)));
            }
        }
        out.sort();
        out.dedup();
        Some(out)
    }
}

impl Crystal for KmCrystal {
    type Label = ResidueClass;

    fn labels(&self, lam: &Multipartition) -> Vec<ResidueClass> {
        self.param.residues_of_removable(lam)
    }

    fn creation_labels(&self, lam: &Multipartition) -> Vec<ResidueClass> {
        let mut out: Vec<ResidueClass> = lam
            .addable()
            .iter()
            .map(|b| self.param.residue(b))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn e(&self, lam: &Multipartition, z: &ResidueClass) -> Option<Multipartition> {
        self.e_op(lam, z)
    }

    fn f(&self, lam: &Multipartition, z: &ResidueClass) -> Option<Multipartition> {
        self.f_op(lam, z)
    }

    fn block(&self, lam: &Multipartition) -> Option<Vec<ResidueClass>> {
        Some(self.param.block_id(lam))
    }
}

/// Level-one parameter `κ = -1/e`, charge 0.
fn level_one(e: usize) -> FockParam {
    FockParam::new(Kappa::Rational(rat::frac(-1, e as i64)), vec![rat::int(0)])
        .expect("valid level-one parameter")
}

/// The Mullineux involution on the component of `∅` in the level-one
/// crystal with `κ = -1/e`, which consists of the `e`-co-restricted
/// partitions.
pub fn mullineux(lam: &Partition, e: usize) -> Result<Partition> {
    if e == 0 {
        return Err(Error::precondition("mullineux", "e must be positive"));
    }
    if !lam.is_e_corestricted(e) {
        return Err(Error::precondition(
            "mullineux",
            format!("{lam} is not {e}-co-restricted"),
        ));
    }
    let crystal = KmCrystal::new(level_one(e));
    let start = Multipartition::from(vec![lam.clone()]);
    let (head, word) = crystal.ascend(&start);
    if head.size() != 0 {
        return Err(Error::Invariant(format!(
            "{lam} ascends to {head} rather than the empty partition"
        )));
    }
    let modulus = rat::int(e as i64);
    let mut cur = head;
    for z in word.steps().iter().rev() {
        let neg = ResidueClass(rat::modulo(&-z.0.clone(), &modulus));
        cur = crystal.f_op(&cur, &neg).ok_or_else(|| {
            Error::Invariant(format!("f̃_{neg} kills {cur} while computing M({lam})"))
        })?;
    }
    Ok(cur.into_comps().pop().expect("level one"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    fn chamber(s2: i64) -> KmCrystal {
        KmCrystal::new(FockParam::rational(frac(-1, 2), &[0, s2]).unwrap())
    }

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_operators() {
        let c = chamber(-4);
        let (r0, r1) = (c.residue(0), c.residue(1));
        assert_eq!(c.f_op(&mp("-|-"), &r0), Some(mp("-|1")));
        assert_eq!(c.f_op(&mp("-|-"), &r1), None);
        assert_eq!(c.f_op(&mp("1,1|-"), &r1), Some(mp("2,1|-")));
        assert_eq!(c.e_op(&mp("-|1"), &r0), Some(mp("-|-")));
        assert_eq!(c.e_op(&mp("1,1,1|-"), &r0), None);
        for z in [&r0, &r1] {
            assert_eq!(c.e_op(&mp("-|-"), z), None);
        }
    }

    #[test]
    fn singular_heads() {
        let c = chamber(-4);
        assert!(c.is_singular(&mp("-|-")));
        assert!(c.is_singular(&mp("1,1,1|-")));
        assert!(!c.is_singular(&mp("-|3")));
        let (head, word) = c.ascend(&mp("-|3"));
        assert_eq!(head, mp("-|2"));
        assert_eq!(word.steps(), &[c.residue(0)]);
        assert_eq!(c.descend(&head, &word), Some(mp("-|3")));
    }

    #[test]
    fn depths() {
        let c = chamber(-4);
        assert_eq!(c.depth(&mp("-|2,1")), 3);
        assert_eq!(c.depth(&mp("2|1")), 1);
        let one = KmCrystal::new(level_one(2));
        assert_eq!(one.depth(&mp("2,2")), 0);
    }

    #[test]
    fn ascent_replays_for_small_sizes() {
        let c = chamber(-2);
        for lam in Multipartition::all_up_to(2, 5) {
            let (head, word) = c.ascend(&lam);
            assert!(c.is_singular(&head));
            assert_eq!(word.len(), c.depth(&lam));
            assert_eq!(c.descend(&head, &word).as_ref(), Some(&lam));
        }
    }

    #[test]
    fn empty_component_is_corestricted() {
        for e in [2, 3] {
            let one = KmCrystal::new(level_one(e));
            for n in 0..=8 {
                for lam in Partition::all(n) {
                    let reaches_empty = one.depth(&Multipartition::from(vec![lam.clone()])) == n;
                    assert_eq!(reaches_empty, lam.is_e_corestricted(e), "{lam} e={e}");
                }
            }
        }
    }

    #[test]
    fn mullineux_small_cases() {
        assert_eq!(
            mullineux(&Partition::empty(), 3).unwrap(),
            Partition::empty()
        );
        assert!(mullineux(&part("2"), 2).is_err());
        assert_eq!(mullineux(&part("1,1"), 2).unwrap(), part("1,1"));
        for n in 0..=8 {
            for lam in Partition::all(n)
                .into_iter()
                .filter(|l| l.is_e_corestricted(2))
            {
                assert_eq!(mullineux(&lam, 2).unwrap(), lam);
            }
            for lam in Partition::all(n)
                .into_iter()
                .filter(|l| l.is_e_corestricted(3))
            {
                let m = mullineux(&lam, 3).unwrap();
                assert_eq!(m.size(), n);
                assert_eq!(mullineux(&m, 3).unwrap(), lam);
            }
        }
    }

    #[test]
    fn mullineux_is_not_trivial_for_three() {
        let moved = (0..=6)
            .flat_map(Partition::all)
            .filter(|l| l.is_e_corestricted(3))
            .filter(|l| mullineux(l, 3).unwrap() != *l)
            .count();
        assert!(moved > 0);
    }

    #[test]
    fn all_residues_count() {
        assert_eq!(chamber(-4).all_residues().unwrap().len(), 2);
        let c = KmCrystal::new(FockParam::rational(frac(-2, 3), &[0]).unwrap());
        assert_eq!(c.all_residues().unwrap().len(), 3);
    }
}
