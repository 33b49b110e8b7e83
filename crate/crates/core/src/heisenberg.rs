//! The level-one `sl_∞` (Heisenberg) crystal and its depth `q`.
//!
//! In an asymptotic chamber for component `j` the crystal acts on singular
//! multipartitions through the quotient `λ'` of `λ^{(j)} = e·λ'`; the label
//! of an operator is the unshifted content `x - y` of the box of `λ'` it adds
//! or removes. Elsewhere it is obtained by transporting into the asymptotic
//! chamber along wall-crossings, conjugating by the `ŝl_e`-crystal ascent.

use crate::chambers::{asymptotic_target, is_asymptotic, plan_path, Path};
use crate::crystal::{Crystal, CrystalWord, KmCrystal};
use crate::error::{Error, Result};
use crate::fock::FockParam;
use crate::partitions::{Multipartition, Partition};
use crate::wallcross::transport;

fn denominator(p: &FockParam) -> Result<usize> {
    p.e().ok_or_else(|| Error::Unsupported {
        branch: "heisenberg",
        detail: "the Heisenberg crystal needs a rational κ".into(),
    })
}

fn check_asymptotic_singular(
    op: &'static str,
    lam: &Multipartition,
    p: &FockParam,
    j: usize,
    n: usize,
) -> Result<()> {
    if !is_asymptotic(p, j, n) {
        return Err(Error::precondition(
            op,
            format!("{p} is not asymptotic for component {} and size {n}", j + 1),
        ));
    }
    if !KmCrystal::new(p.clone()).is_singular(lam) {
        return Err(Error::precondition(
            op,
            format!("{lam} is not singular at {p}"),
        ));
    }
    Ok(())
}

fn quotient(op: &'static str, lam: &Multipartition, j: usize, e: usize) -> Result<Partition> {
    lam.comp(j).divide_exact(e).ok_or_else(|| {
        Error::precondition(
            op,
            format!("component {} of {lam} is not divisible by {e}", j + 1),
        )
    })
}

/// `ẽ^∞_i` on a singular `λ` in the asymptotic chamber of component `j`.
pub fn asym_e_inf(
    lam: &Multipartition,
    i: i64,
    p: &FockParam,
    j: usize,
) -> Result<Option<Multipartition>> {
    let e = denominator(p)?;
    check_asymptotic_singular("asym_e_inf", lam, p, j, lam.size())?;
    let q = quotient("asym_e_inf", lam, j, e)?;
    Ok(q.removable_with_content(i)
        .and_then(|c| q.with_removed(c))
        .map(|q2| lam.with_comp(j, q2.scale(e))))
}

/// `f̃^∞_i` on a singular `λ`; the parameter must stay asymptotic for the
/// enlarged size.
pub fn asym_f_inf(
    lam: &Multipartition,
    i: i64,
    p: &FockParam,
    j: usize,
) -> Result<Option<Multipartition>> {
    let e = denominator(p)?;
    check_asymptotic_singular("asym_f_inf", lam, p, j, lam.size() + e)?;
    let q = quotient("asym_f_inf", lam, j, e)?;
    Ok(q.addable_with_content(i)
        .and_then(|c| q.with_added(c))
        .map(|q2| lam.with_comp(j, q2.scale(e))))
}

/// `ã_μ λ`: replaces the empty component `j` of a singular `λ` by `e·μ`.
pub fn asym_a_mu(
    lam: &Multipartition,
    mu: &Partition,
    p: &FockParam,
    j: usize,
) -> Result<Multipartition> {
    let e = denominator(p)?;
    check_asymptotic_singular("asym_a_mu", lam, p, j, lam.size() + e * mu.size())?;
    if !lam.comp(j).is_empty() {
        return Err(Error::precondition(
            "asym_a_mu",
            format!("component {} of {lam} is not empty", j + 1),
        ));
    }
    Ok(lam.with_comp(j, mu.scale(e)))
}

/// A view of `λ` from the asymptotic chamber: the transport path, the
/// parameter at its end, and the singular head of the image with its word.
struct AsymptoticView {
    path: Path,
    target: FockParam,
    head: Multipartition,
    word: CrystalWord,
}

/// The Heisenberg crystal at a parameter with `κ < 0` rational whose
/// components all lie in one class.
#[derive(Clone, Debug)]
pub struct HeisenbergCrystal {
    param: FockParam,
    j: usize,
    e: usize,
}

impl HeisenbergCrystal {
    pub fn new(param: FockParam) -> Result<Self> {
        let e = denominator(&param)?;
        if !param.kappa().is_negative() {
            return Err(Error::Unsupported {
                branch: "heisenberg",
                detail: "κ must be negative; flip the parameter first".into(),
            });
        }
        if param.component_classes().len() != 1 {
            return Err(Error::Unsupported {
                branch: "heisenberg",
                detail: "charges must form a single class; restrict first".into(),
            });
        }
        let j = asymptotic_target(&param);
        Ok(HeisenbergCrystal { param, j, e })
    }

    pub fn param(&self) -> &FockParam {
        &self.param
    }

    /// Component that becomes asymptotic (the smallest charge).
    pub fn target_component(&self) -> usize {
        self.j
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// Path into the asymptotic chamber valid for multipartitions of size
    /// at most `n`.
    pub fn path(&self, n: usize) -> Result<Path> {
        plan_path(&self.param, self.j, n)
    }

    /// Image of `λ` in the asymptotic chamber for size `n ≥ |λ|`.
    pub fn transported(&self, lam: &Multipartition, n: usize) -> Result<(Multipartition, Path)> {
        let path = self.path(n)?;
        Ok((transport(lam, &path, &self.param)?, path))
    }

    fn view(&self, lam: &Multipartition, n: usize) -> Result<AsymptoticView> {
        let (image, path) = self.transported(lam, n)?;
        let target = self.param.with_charges(path.end.clone());
        let (head, word) = KmCrystal::new(target.clone()).ascend(&image);
        Ok(AsymptoticView {
            path,
            target,
            head,
            word,
        })
    }

    fn finish(
        &self,
        view: &AsymptoticView,
        moved: Option<Multipartition>,
        op: &str,
        i: i64,
    ) -> Result<Option<Multipartition>> {
        let Some(moved) = moved else {
            return Ok(None);
        };
        let km = KmCrystal::new(view.target.clone());
        let replayed = km.descend(&moved, &view.word).ok_or_else(|| {
            Error::Invariant(format!(
                "{op}_{i}: replaying {} from {moved} at {} hits zero",
                view.word, view.target
            ))
        })?;
        transport(&replayed, &view.path.reversed(), &self.param).map(Some)
    }

    pub fn e_inf(&self, lam: &Multipartition, i: i64) -> Result<Option<Multipartition>> {
        let view = self.view(lam, lam.size())?;
        let moved = asym_e_inf(&view.head, i, &view.target, self.j)?;
        self.finish(&view, moved, "ẽ^∞", i)
    }

    pub fn f_inf(&self, lam: &Multipartition, i: i64) -> Result<Option<Multipartition>> {
        let view = self.view(lam, lam.size() + self.e)?;
        let moved = asym_f_inf(&view.head, i, &view.target, self.j)?;
        self.finish(&view, moved, "f̃^∞", i)
    }

    /// Quotient `λ'` of the distinguished component of the transported head.
    fn head_quotient(&self, lam: &Multipartition, n: usize) -> Result<Partition> {
        let view = self.view(lam, n)?;
        quotient("heisenberg labels", &view.head, self.j, self.e)
    }

    /// `q` from the remainder-free part of the transported component:
    /// `q = |λ'|` for `λ^{(j)} = eλ' + λ''`.
    pub fn q_remark(&self, lam: &Multipartition) -> Result<usize> {
        let (image, _) = self.transported(lam, lam.size())?;
        Ok(image.comp(self.j).div_rem(self.e).0.size())
    }

    /// `q` from the singular head: ascend at the original parameter,
    /// transport, and divide the size of the distinguished component by `e`.
    pub fn q_singular(&self, lam: &Multipartition) -> Result<usize> {
        let (head, _) = KmCrystal::new(self.param.clone()).ascend(lam);
        let (image, path) = self.transported(&head, lam.size())?;
        let target = self.param.with_charges(path.end.clone());
        if !KmCrystal::new(target.clone()).is_singular(&image) {
            return Err(Error::Invariant(format!(
                "transport of the singular {head} to {target} gives the non-singular {image}"
            )));
        }
        Ok(quotient("q_singular", &image, self.j, self.e)?.size())
    }

    /// Depth of `λ` in the Heisenberg crystal, computed both ways.
    pub fn q_depth(&self, lam: &Multipartition) -> Result<usize> {
        let a = self.q_remark(lam)?;
        let b = self.q_singular(lam)?;
        if a != b {
            return Err(Error::Invariant(format!(
                "q({lam}) at {}: {a} via the transported remainder, {b} via the singular head",
                self.param
            )));
        }
        Ok(a)
    }
}

impl Crystal for HeisenbergCrystal {
    type Label = i64;

    fn labels(&self, lam: &Multipartition) -> Vec<i64> {
        let q = self
            .head_quotient(lam, lam.size())
            .unwrap_or_else(|err| panic!("Heisenberg labels of {lam}: {err}"));
        q.removable().into_iter().map(|c| c.content()).collect()
    }

    fn creation_labels(&self, lam: &Multipartition) -> Vec<i64> {
        let q = self
            .head_quotient(lam, lam.size() + self.e)
            .unwrap_or_else(|err| panic!("Heisenberg labels of {lam}: {err}"));
        q.addable().into_iter().map(|c| c.content()).collect()
    }

    fn e(&self, lam: &Multipartition, i: &i64) -> Option<Multipartition> {
        self.e_inf(lam, *i)
            .unwrap_or_else(|err| panic!("ẽ^∞_{i}({lam}): {err}"))
    }

    fn f(&self, lam: &Multipartition, i: &i64) -> Option<Multipartition> {
        self.f_inf(lam, *i)
            .unwrap_or_else(|err| panic!("f̃^∞_{i}({lam}): {err}"))
    }
}
