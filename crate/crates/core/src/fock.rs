//! Charged multipartitions: parameters, shifted contents, residues, the order
//! on equivalent boxes and z-signatures.
//!
//! Conventions used throughout the crate:
//!
//! * the shifted content of a box `(x, y)` of component `i` is `x - y + s_i`;
//! * two boxes are equivalent when their contents agree modulo `κ⁻¹ℤ`;
//! * the order key of a box is `v(b) = κ·ℓ·cont(b) - i` (with `i` 1-based),
//!   and a z-signature lists its boxes by ascending `v`;
//! * reduction cancels adjacent `-+` pairs.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::{BoxRef, Multipartition};
use crate::rat::{self, Rat};

/// Sign of a formal, transcendental `κ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenericSign {
    Neg,
    Pos,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kappa {
    /// A nonzero rational `a/e` in lowest terms.
    Rational(Rat),
    /// A formal irrational of the given sign; its denominator `e` is infinite
    /// and two contents are equivalent only when they are equal.
    Generic(GenericSign),
}

impl Kappa {
    pub fn is_negative(&self) -> bool {
        match self {
            Kappa::Rational(k) => k.is_negative(),
            Kappa::Generic(s) => *s == GenericSign::Neg,
        }
    }

    pub fn negated(&self) -> Kappa {
        match self {
            Kappa::Rational(k) => Kappa::Rational(-k),
            Kappa::Generic(GenericSign::Neg) => Kappa::Generic(GenericSign::Pos),
            Kappa::Generic(GenericSign::Pos) => Kappa::Generic(GenericSign::Neg),
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Kappa::Rational(k) => Some(k),
            Kappa::Generic(_) => None,
        }
    }

    /// Accepts a rational, `generic-neg` or `generic-pos`. Zero is rejected.
    pub fn parse(text: &str) -> Result<Kappa> {
        match text.trim() {
            "generic-neg" => Ok(Kappa::Generic(GenericSign::Neg)),
            "generic-pos" => Ok(Kappa::Generic(GenericSign::Pos)),
            t => {
                let k = rat::parse(t)?;
                if k.is_zero() {
                    return Err(Error::InvalidParameter(
                        "κ = 0 has no charged Fock space; use the rank-one parameters".into(),
                    ));
                }
                Ok(Kappa::Rational(k))
            }
        }
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kappa::Rational(k) => write!(f, "{k}"),
            Kappa::Generic(GenericSign::Neg) => f.write_str("generic-neg"),
            Kappa::Generic(GenericSign::Pos) => f.write_str("generic-pos"),
        }
    }
}

/// Parameter `(κ, s_1, …, s_ℓ)` of a level-ℓ charged Fock space.
///
/// Charges are kept exactly as given; shifting them by a common summand is an
/// explicit operation ([`FockParam::normalized`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockParam {
    kappa: Kappa,
    charges: Vec<Rat>,
}

/// Key `v(b)`, totally ordered. For rational `κ` the `lead` term is zero and
/// `tail` is `v(b)` itself; for a formal `κ` the key `κ·α + β` is compared
/// lexicographically after orienting `α` by the sign of `κ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderKey {
    lead: Rat,
    tail: Rat,
}

impl OrderKey {
    /// The value of the key when `κ` is rational.
    pub fn value(&self) -> Option<&Rat> {
        self.lead.is_zero().then_some(&self.tail)
    }
}

impl fmt::Display for OrderKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lead.is_zero() {
            write!(f, "{}", self.tail)
        } else {
            write!(f, "[{}; {}]", self.lead, self.tail)
        }
    }
}

/// A residue `cont mod κ⁻¹ℤ`, stored as its least nonnegative representative
/// (or the content itself when `κ` is formal).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueClass(pub Rat);

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FockParam {
    pub fn new(kappa: Kappa, charges: Vec<Rat>) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::InvalidParameter(
                "at least one charge is required".into(),
            ));
        }
        if let Kappa::Rational(k) = &kappa {
            if k.is_zero() {
                return Err(Error::InvalidParameter("κ must be nonzero".into()));
            }
        }
        Ok(FockParam { kappa, charges })
    }

    /// Rational `κ` and integer charges.
    pub fn rational(kappa: Rat, charges: &[i64]) -> Result<Self> {
        FockParam::new(
            Kappa::Rational(kappa),
            charges.iter().map(|&s| rat::int(s)).collect(),
        )
    }

    pub fn parse(kappa: &str, charges: &str) -> Result<Self> {
        FockParam::new(Kappa::parse(kappa)?, rat::parse_list(charges)?)
    }

    pub fn kappa(&self) -> &Kappa {
        &self.kappa
    }

    pub fn charges(&self) -> &[Rat] {
        &self.charges
    }

    pub fn charge(&self, i: usize) -> &Rat {
        &self.charges[i]
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    /// Denominator `e` of `κ`; `None` stands for `e = ∞`.
    pub fn e(&self) -> Option<usize> {
        self.kappa.as_rational().map(|k| {
            k.denom()
                .to_usize()
                .expect("denominator of κ fits in usize")
        })
    }

    /// Positive generator `|1/κ|` of `κ⁻¹ℤ`; `None` when `κ` is formal.
    pub fn modulus(&self) -> Option<Rat> {
        self.kappa.as_rational().map(|k| k.recip().abs())
    }

    pub fn with_charges(&self, charges: Vec<Rat>) -> FockParam {
        assert_eq!(charges.len(), self.level());
        FockParam {
            kappa: self.kappa.clone(),
            charges,
        }
    }

    /// `(-κ, -s)`.
    pub fn flipped(&self) -> FockParam {
        FockParam {
            kappa: self.kappa.negated(),
            charges: self.charges.iter().map(|s| -s).collect(),
        }
    }

    /// Shifts all charges so that the smallest one is zero; returns the
    /// shifted parameter and the shift that was subtracted.
    pub fn normalized(&self) -> (FockParam, Rat) {
        let shift = self.charges.iter().min().expect("nonempty").clone();
        let charges = self.charges.iter().map(|s| s - &shift).collect();
        (self.with_charges(charges), shift)
    }

    /// Shifted content `x - y + s_i`.
    pub fn content(&self, b: &BoxRef) -> Rat {
        self.content_with(b, ContentSign::Standard)
    }

    fn content_with(&self, b: &BoxRef, sign: ContentSign) -> Rat {
        let unshifted = match sign {
            ContentSign::Standard => b.col as i64 - b.row as i64,
            ContentSign::Reversed => b.row as i64 - b.col as i64,
        };
        rat::int(unshifted) + &self.charges[b.comp]
    }

    pub fn residue_of(&self, content: &Rat) -> ResidueClass {
        match self.modulus() {
            Some(m) => ResidueClass(rat::modulo(content, &m)),
            None => ResidueClass(content.clone()),
        }
    }

    pub fn residue(&self, b: &BoxRef) -> ResidueClass {
        self.residue_of(&self.content(b))
    }

    pub fn equivalent(&self, a: &BoxRef, b: &BoxRef) -> bool {
        self.residue(a) == self.residue(b)
    }

    /// `v(b) = κ·ℓ·cont(b) - i`, `i` the 1-based component.
    pub fn order_key(&self, b: &BoxRef) -> OrderKey {
        self.order_key_of(&self.content(b), b.comp)
    }

    fn order_key_of(&self, content: &Rat, comp: usize) -> OrderKey {
        let ell = rat::int(self.level() as i64);
        let idx = rat::int(comp as i64 + 1);
        match &self.kappa {
            Kappa::Rational(k) => OrderKey {
                lead: Rat::zero(),
                tail: k * &ell * content - idx,
            },
            // κ·α + β with α = ℓ·cont: for κ → -∞ larger α means smaller key
            Kappa::Generic(GenericSign::Neg) => OrderKey {
                lead: -(&ell * content),
                tail: -idx,
            },
            Kappa::Generic(GenericSign::Pos) => OrderKey {
                lead: &ell * content,
                tail: -idx,
            },
        }
    }

    /// Residues of all addable and removable boxes of `λ`, sorted, without
    /// repetition.
    pub fn active_residues(&self, lam: &Multipartition) -> Vec<ResidueClass> {
        let mut out: Vec<ResidueClass> = lam
            .addable()
            .iter()
            .chain(lam.removable().iter())
            .map(|b| self.residue(b))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn residues_of_removable(&self, lam: &Multipartition) -> Vec<ResidueClass> {
        let mut out: Vec<ResidueClass> = lam.removable().iter().map(|b| self.residue(b)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn z_signature(&self, lam: &Multipartition, z: &ResidueClass) -> ZSignature {
        self.z_signature_with(lam, z, &Conventions::default())
    }

    /// z-signature under explicit conventions. Only the default conventions
    /// are meaningful; the others exist so tests can check that every choice
    /// is load-bearing.
    pub fn z_signature_with(
        &self,
        lam: &Multipartition,
        z: &ResidueClass,
        conv: &Conventions,
    ) -> ZSignature {
        assert_eq!(lam.level(), self.level(), "level of λ and parameter differ");
        let mut entries = Vec::new();
        for (sign, boxes) in [(Sign::Plus, lam.addable()), (Sign::Minus, lam.removable())] {
            for b in boxes {
                let c = self.content_with(&b, conv.content);
                if &self.residue_of(&c) == z {
                    entries.push(SignedBox {
                        bx: b,
                        sign,
                        key: self.order_key_of(&c, b.comp),
                    });
                }
            }
        }
        entries.sort_by(|a, b| a.key.cmp(&b.key));
        for w in entries.windows(2) {
            assert!(
                w[0].key != w[1].key,
                "equivalent boxes {} and {} share the order key {}",
                w[0].bx,
                w[1].bx,
                w[0].key
            );
        }
        if conv.order == ListOrder::DescendingKey {
            entries.reverse();
        }
        ZSignature {
            entries,
            cancel: conv.cancel,
        }
    }

    /// Sorted multiset of residues of all boxes of `λ`.
    pub fn block_id(&self, lam: &Multipartition) -> Vec<ResidueClass> {
        let mut out: Vec<ResidueClass> = lam.boxes().map(|b| self.residue(&b)).collect();
        out.sort();
        out
    }

    /// `s_i - s_j ∈ ℤ + κ⁻¹ℤ` (`∈ ℤ` for formal κ).
    pub fn components_related(&self, i: usize, j: usize) -> bool {
        let d = &self.charges[i] - &self.charges[j];
        match &self.kappa {
            // ℤ + (e/a)ℤ = (1/|a|)ℤ since gcd(a, e) = 1
            Kappa::Rational(k) => rat::is_integer(&(d * Rat::from_integer(k.numer().abs()))),
            Kappa::Generic(_) => rat::is_integer(&d),
        }
    }

    /// Classes of components that can carry equivalent boxes, each sorted,
    /// ordered by smallest member. Indices are 0-based.
    pub fn component_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.level() {
            match classes
                .iter_mut()
                .find(|c| self.components_related(c[0], i))
            {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        classes
    }

    /// Sub-parameter and sub-multipartition on the components of `class`, in
    /// their original order.
    pub fn restrict_to_class(
        &self,
        lam: &Multipartition,
        class: &[usize],
    ) -> (FockParam, Multipartition) {
        let charges = class.iter().map(|&i| self.charges[i].clone()).collect();
        let comps = class.iter().map(|&i| lam.comp(i).clone()).collect();
        (
            FockParam {
                kappa: self.kappa.clone(),
                charges,
            },
            Multipartition::new(comps).expect("class is nonempty"),
        )
    }

    /// `κ·e·s_i ∈ ℤ` for all `i`; the setting of the Heisenberg crystal.
    pub fn has_integral_charges(&self) -> bool {
        match &self.kappa {
            Kappa::Rational(k) => {
                let ke = k * Rat::from_integer(k.denom().clone());
                self.charges.iter().all(|s| rat::is_integer(&(&ke * s)))
            }
            Kappa::Generic(_) => false,
        }
    }
}

impl fmt::Display for FockParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "κ={} s=({})",
            self.kappa,
            rat::display_list(&self.charges)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContentSign {
    /// `x - y + s_i`
    Standard,
    /// `y - x + s_i`
    Reversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListOrder {
    AscendingKey,
    DescendingKey,
}

/// Which adjacent pair is cancelled during reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CancelPair {
    MinusPlus,
    PlusMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conventions {
    pub content: ContentSign,
    pub order: ListOrder,
    pub cancel: CancelPair,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            content: ContentSign::Standard,
            order: ListOrder::AscendingKey,
            cancel: CancelPair::MinusPlus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedBox {
    pub bx: BoxRef,
    pub sign: Sign,
    pub key: OrderKey,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSignature {
    entries: Vec<SignedBox>,
    cancel: CancelPair,
}

impl ZSignature {
    pub fn entries(&self) -> &[SignedBox] {
        &self.entries
    }

    pub fn signs(&self) -> String {
        self.entries.iter().map(|e| e.sign.symbol()).collect()
    }

    /// Deletes adjacent cancelling pairs until none remain.
    pub fn reduced(&self) -> ZSignature {
        let (first, second) = match self.cancel {
            CancelPair::MinusPlus => (Sign::Minus, Sign::Plus),
            CancelPair::PlusMinus => (Sign::Plus, Sign::Minus),
        };
        let mut stack: Vec<SignedBox> = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            if e.sign == second && stack.last().is_some_and(|t| t.sign == first) {
                stack.pop();
            } else {
                stack.push(e.clone());
            }
        }
        ZSignature {
            entries: stack,
            cancel: self.cancel,
        }
    }

    /// Leftmost `-` of the reduced signature.
    pub fn leftmost_minus(&self) -> Option<&SignedBox> {
        self.entries.iter().find(|e| e.sign == Sign::Minus)
    }

    /// Rightmost `+` of the reduced signature.
    pub fn rightmost_plus(&self) -> Option<&SignedBox> {
        self.entries.iter().rev().find(|e| e.sign == Sign::Plus)
    }
}

impl fmt::Display for ZSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.signs())
    }
}

/// Reduction on a bare sign string, `-+` cancelling.
pub fn reduce_signs(signs: &str) -> String {
    let mut stack: Vec<char> = Vec::new();
    for c in signs.chars() {
        if c == '+' && stack.last() == Some(&'-') {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    stack.into_iter().collect()
}
