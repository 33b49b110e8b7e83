//! Exhaustive verifiers and the worked-example report.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Deserialize;

use crate::chambers::{plan_path, CrossingStep};
use crate::crystal::{Crystal, KmCrystal};
use crate::error::{Error, Result};
use crate::fock::{FockParam, Kappa};
use crate::heisenberg::HeisenbergCrystal;
use crate::partitions::{Multipartition, Partition};
use crate::rat;
use crate::supports::{support, table, Parameter};
use crate::wallcross::{wc_pair, wc_wall, PairSide};

/// Outcome of an exhaustive check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub bounds: String,
    pub checked: usize,
    pub details: Vec<String>,
    pub violations: Vec<String>,
}

impl Report {
    fn new(name: impl Into<String>, bounds: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            bounds: bounds.into(),
            ..Report::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.details.extend(other.details);
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{}]: {} checks, {} violations",
            self.name,
            self.bounds,
            self.checked,
            self.violations.len()
        )?;
        for d in &self.details {
            writeln!(f, "  {d}")?;
        }
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        Ok(())
    }
}

/// Longest and shortest annihilation chains from every element of `universe`.
fn chain_lengths<C: Crystal>(
    crystal: &C,
    lam: &Multipartition,
    memo: &mut HashMap<Multipartition, (usize, usize)>,
) -> (usize, usize) {
    if let Some(v) = memo.get(lam) {
        return *v;
    }
    let mut lo = usize::MAX;
    let mut hi = 0;
    for z in crystal.labels(lam) {
        if let Some(mu) = crystal.e(lam, &z) {
            let (a, b) = chain_lengths(crystal, &mu, memo);
            lo = lo.min(a + 1);
            hi = hi.max(b + 1);
        }
    }
    let v = if hi == 0 { (0, 0) } else { (lo, hi) };
    memo.insert(lam.clone(), v);
    v
}

/// Partial-inverse axioms, block compatibility and path independence of the
/// depth over `universe`.
pub fn verify_crystal_axioms<C: Crystal>(
    crystal: &C,
    universe: &[Multipartition],
    bounds: &str,
) -> Report {
    let mut report = Report::new("crystal axioms", bounds);
    let mut memo = HashMap::new();
    for lam in universe {
        for z in crystal.labels(lam) {
            report.checked += 1;
            if let Some(mu) = crystal.e(lam, &z) {
                if crystal.f(&mu, &z).as_ref() != Some(lam) {
                    report
                        .violations
                        .push(format!("f_{z}(e_{z}({lam})) != {lam}"));
                }
                if let (Some(mut before), Some(after)) = (crystal.block(lam), crystal.block(&mu)) {
                    match before.iter().position(|x| *x == z) {
                        Some(k) => {
                            before.remove(k);
                            if before != after {
                                report
                                    .violations
                                    .push(format!("e_{z}({lam}) changes the block beyond one {z}"));
                            }
                        }
                        None => report.violations.push(format!(
                            "e_{z}({lam}) removes a residue absent from the block"
                        )),
                    }
                }
            }
        }
        for z in crystal.creation_labels(lam) {
            report.checked += 1;
            if let Some(mu) = crystal.f(lam, &z) {
                if crystal.e(&mu, &z).as_ref() != Some(lam) {
                    report
                        .violations
                        .push(format!("e_{z}(f_{z}({lam})) != {lam}"));
                }
            }
        }
        let (lo, hi) = chain_lengths(crystal, lam, &mut memo);
        report.checked += 1;
        if lo != hi {
            report.violations.push(format!(
                "maximal annihilation chains from {lam} have lengths {lo}..{hi}"
            ));
        }
    }
    report
}

/// Axioms of the `ŝl_e`-crystal at `p` over all sizes up to `n_max`.
pub fn verify_km_axioms(p: &FockParam, n_max: usize) -> Report {
    let universe = Multipartition::all_up_to(p.level(), n_max);
    let mut r = verify_crystal_axioms(
        &KmCrystal::new(p.clone()),
        &universe,
        &format!("{p}, n<={n_max}"),
    );
    r.name = "ŝl_e crystal axioms".into();
    r
}

/// `#{p = 0, q = q₀ at n} = P(q₀)·#{p = q = 0 at n - e·q₀}`.
pub fn verify_counting(p: &FockParam, n_max: usize) -> Result<Report> {
    let e = p.e().ok_or_else(|| Error::Unsupported {
        branch: "verify_counting",
        detail: "needs a rational κ".into(),
    })?;
    let param = Parameter::Fock(p.clone());
    let mut report = Report::new("counting identity", format!("{p}, n<={n_max}"));
    let mut counts: Vec<BTreeMap<usize, u64>> = Vec::new();
    for n in 0..=n_max {
        let mut by_q = BTreeMap::new();
        for r in table(&param, n)? {
            if r.p == 0 {
                *by_q.entry(r.q).or_insert(0u64) += 1;
            }
        }
        counts.push(by_q);
    }
    for n in 0..=n_max {
        for q0 in 0..=n / e.max(1) {
            let lhs = counts[n].get(&q0).copied().unwrap_or(0);
            let rhs = Partition::count(q0) * counts[n - e * q0].get(&0).copied().unwrap_or(0);
            report.checked += 1;
            report.details.push(format!("n={n} q0={q0}: {lhs} = {rhs}"));
            if lhs != rhs {
                report.violations.push(format!(
                    "n={n} q0={q0}: {lhs} labels with p=0, q=q0, expected {rhs}"
                ));
            }
        }
    }
    Ok(report)
}

/// Level one: `p = |λ''|` and `q = |λ'|` for `λ = eλ' + λ''`.
pub fn verify_wilcox(e: usize, n_max: usize) -> Result<Report> {
    let p = FockParam::new(Kappa::Rational(rat::frac(-1, e as i64)), vec![rat::int(0)])?;
    let param = Parameter::Fock(p);
    let mut report = Report::new("level-one division", format!("e={e}, n<={n_max}"));
    for n in 0..=n_max {
        for r in table(&param, n)? {
            let (quot, rem) = r.lambda.comp(0).div_rem(e);
            let expected = if e == 1 {
                (0, quot.size())
            } else {
                (rem.size(), quot.size())
            };
            report.checked += 1;
            if (r.p, r.q) != expected {
                report.violations.push(format!(
                    "{}: (p, q) = ({}, {}), expected {:?}",
                    r.lambda, r.p, r.q, expected
                ));
            }
        }
    }
    Ok(report)
}

/// `wc(ẽ_z λ) = ẽ_z(wc λ)` for one crossing, with the `ŝl_e`-operators
/// taken at the source and target parameters.
pub fn verify_crossing_intertwines(
    p: &FockParam,
    step: &CrossingStep,
    n_max: usize,
) -> Result<Report> {
    let source = KmCrystal::new(p.with_charges(step.source.clone()));
    let target = KmCrystal::new(p.with_charges(step.target.clone()));
    let residues = source.all_residues().ok_or_else(|| Error::Unsupported {
        branch: "verify_crossing_intertwines",
        detail: "needs a rational κ".into(),
    })?;
    let mut report = Report::new("wall-crossing intertwines ẽ", format!("{step}, n<={n_max}"));
    let universe = Multipartition::all_up_to(p.level(), n_max);
    let images: HashMap<Multipartition, Multipartition> = universe
        .par_iter()
        .map(|lam| wc_wall(lam, step, p).map(|w| (lam.clone(), w)))
        .collect::<Result<_>>()?;
    for lam in &universe {
        let w = &images[lam];
        report.checked += 1;
        if source.depth(lam) != target.depth(w) {
            report
                .violations
                .push(format!("depth changes from {lam} to {w}"));
        }
        for z in &residues {
            report.checked += 1;
            let left = source.e_op(lam, z).map(|mu| images[&mu].clone());
            let right = target.e_op(w, z);
            if left != right {
                report.violations.push(format!(
                    "z={z}: wc(e({lam})) = {left:?}, e(wc({lam})) = {right:?}"
                ));
            }
        }
    }
    Ok(report)
}

/// Every single crossing on the path from `p` into its asymptotic chamber.
pub fn verify_path_intertwines(p: &FockParam, n_max: usize) -> Result<Report> {
    let j = crate::chambers::asymptotic_target(p);
    let path = plan_path(p, j, n_max)?;
    let mut report = Report::new("wall-crossing intertwines ẽ", format!("{p}, n<={n_max}"));
    for step in &path.steps {
        report.absorb(verify_crossing_intertwines(p, step, n_max)?);
        let back = step.reversed();
        report.absorb(verify_crossing_intertwines(p, &back, n_max)?);
    }
    Ok(report)
}

/// `ẽ_z` and `ẽ^∞_i` commute wherever both sides are defined.
pub fn verify_heisenberg_commutation(p: &FockParam, n_max: usize) -> Result<Report> {
    let km = KmCrystal::new(p.clone());
    let heis = HeisenbergCrystal::new(p.clone())?;
    let residues = km.all_residues().expect("rational κ");
    let mut report = Report::new("ẽ and ẽ^∞ commute", format!("{p}, n<={n_max}"));
    let universe = Multipartition::all_up_to(p.level(), n_max);
    let found: Vec<Report> = universe
        .par_iter()
        .map(|lam| -> Result<Report> {
            let mut r = Report::default();
            for i in heis.labels(lam) {
                let Some(a) = heis.e_inf(lam, i)? else {
                    continue;
                };
                for z in &residues {
                    let Some(b) = km.e_op(lam, z) else { continue };
                    r.checked += 1;
                    let ab = km.e_op(&a, z);
                    let ba = heis.e_inf(&b, i)?;
                    if ab != ba {
                        r.violations.push(format!(
                            "{lam}, z={z}, i={i}: e_z e∞_i = {ab:?}, e∞_i e_z = {ba:?}"
                        ));
                    }
                }
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    for r in found {
        report.absorb(r);
    }
    Ok(report)
}

// --- worked example -------------------------------------------------------

#[derive(Debug, Deserialize)]
struct ExampleData {
    kappa: String,
    max_size: usize,
    chamber: Vec<ChamberData>,
    arrow: Vec<ArrowData>,
    chamber1: Chamber1Data,
    chamber2_override: Vec<OverrideData>,
    wall_crossing: Vec<WallCrossingData>,
    allowlist: Vec<AllowlistEntry>,
}

#[derive(Debug, Deserialize)]
struct ChamberData {
    number: u8,
    charges: String,
}

#[derive(Debug, Deserialize)]
struct ArrowData {
    source: String,
    residue: i64,
    target: String,
}

#[derive(Debug, Deserialize)]
struct Chamber1Data {
    p_equals_n: Vec<String>,
    p_equals_n_minus_1: Vec<String>,
    p_equals_n_minus_2: Vec<String>,
    p_zero_size_3: Vec<String>,
    q_one: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct OverrideData {
    lambda: String,
    p: usize,
    q: usize,
}

#[derive(Debug, Deserialize)]
struct WallCrossingData {
    m: i64,
    #[serde(default)]
    swaps: Vec<[String; 2]>,
    #[serde(default)]
    component_swap: bool,
}

/// A printed value known to be wrong, with the argument.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct AllowlistEntry {
    pub id: String,
    pub justification: String,
}

const EXAMPLE_DATA: &str = include_str!("../data/worked_example.toml");

fn example_data() -> Result<ExampleData> {
    toml::from_str(EXAMPLE_DATA).map_err(|e| Error::Invariant(format!("worked example data: {e}")))
}

/// The allowlisted discrepancies with their justifications.
pub fn example_allowlist() -> Result<Vec<AllowlistEntry>> {
    Ok(example_data()?.allowlist)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diff {
    pub id: String,
    pub printed: String,
    pub computed: String,
    pub allowlisted: bool,
}

/// Recomputed worked-example data against the printed values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleReport {
    pub section: String,
    pub checked: usize,
    pub diffs: Vec<Diff>,
    /// Allowlist entries for this section that no longer differ.
    pub stale: Vec<String>,
}

impl ExampleReport {
    pub fn unexpected(&self) -> impl Iterator<Item = &Diff> {
        self.diffs.iter().filter(|d| !d.allowlisted)
    }

    pub fn passed(&self) -> bool {
        self.unexpected().next().is_none() && self.stale.is_empty()
    }
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} values, {} differ ({} allowlisted)",
            self.section,
            self.checked,
            self.diffs.len(),
            self.diffs.iter().filter(|d| d.allowlisted).count()
        )?;
        for d in &self.diffs {
            let tag = if d.allowlisted {
                "allowlisted"
            } else {
                "UNEXPECTED"
            };
            writeln!(
                f,
                "  {tag} {}: printed {}, computed {}",
                d.id, d.printed, d.computed
            )?;
        }
        for s in &self.stale {
            writeln!(f, "  stale allowlist entry {s}")?;
        }
        Ok(())
    }
}

struct Comparison<'a> {
    section: String,
    prefix: String,
    allow: &'a [AllowlistEntry],
    checked: usize,
    diffs: Vec<Diff>,
}

impl<'a> Comparison<'a> {
    fn new(section: String, prefix: String, allow: &'a [AllowlistEntry]) -> Self {
        Comparison {
            section,
            prefix,
            allow,
            checked: 0,
            diffs: Vec::new(),
        }
    }

    fn compare(&mut self, key: &str, printed: String, computed: String) {
        self.checked += 1;
        if printed != computed {
            let id = format!("{}: {key}", self.prefix);
            let allowlisted = self.allow.iter().any(|a| a.id == id);
            self.diffs.push(Diff {
                id,
                printed,
                computed,
                allowlisted,
            });
        }
    }

    fn finish(self) -> ExampleReport {
        let stale = self
            .allow
            .iter()
            .filter(|a| a.id.starts_with(&format!("{}: ", self.prefix)))
            .filter(|a| !self.diffs.iter().any(|d| d.id == a.id))
            .map(|a| a.id.clone())
            .collect();
        ExampleReport {
            section: self.section,
            checked: self.checked,
            diffs: self.diffs,
            stale,
        }
    }
}

fn parse_label(s: &str) -> Result<Multipartition> {
    Multipartition::parse_with_level(s, 2)
}

fn swapped(lam: &Multipartition) -> Multipartition {
    Multipartition::from(vec![lam.comp(1).clone(), lam.comp(0).clone()])
}

fn show(p: usize, q: usize) -> String {
    format!("(p,q)=({p},{q})")
}

/// Printed `(p, q)` for every label of size at most 3 in the given chamber.
fn printed_supports(
    data: &ExampleData,
    chamber: u8,
) -> Result<BTreeMap<Multipartition, (usize, usize)>> {
    let c1 = &data.chamber1;
    let mut first = BTreeMap::new();
    for lam in Multipartition::all_up_to(2, data.max_size) {
        let n = lam.size();
        let key = lam.to_string();
        let has = |list: &[String]| list.contains(&key);
        let p = if has(&c1.p_equals_n) {
            n
        } else if has(&c1.p_equals_n_minus_1) {
            n - 1
        } else if has(&c1.p_equals_n_minus_2) {
            n - 2
        } else if has(&c1.p_zero_size_3) {
            0
        } else {
            return Err(Error::Invariant(format!("printed chamber 1 omits {lam}")));
        };
        let q = usize::from(has(&c1.q_one));
        first.insert(lam, (p, q));
    }
    let mut second = first.clone();
    for o in &data.chamber2_override {
        second.insert(parse_label(&o.lambda)?, (o.p, o.q));
    }
    let mirror = |m: &BTreeMap<Multipartition, (usize, usize)>| {
        m.iter()
            .map(|(k, v)| (swapped(k), *v))
            .collect::<BTreeMap<_, _>>()
    };
    Ok(match chamber {
        1 => first,
        2 => second,
        3 => mirror(&second),
        _ => mirror(&first),
    })
}

/// Worked-example report for chamber 1 to 4: crystal arrows (chamber 1
/// only) and the support of every label of size at most 3.
pub fn example_report(chamber: u8) -> Result<ExampleReport> {
    if !(1..=4).contains(&chamber) {
        return Err(Error::InvalidParameter(format!(
            "chamber {chamber} is not one of 1..4"
        )));
    }
    let data = example_data()?;
    let charges = &data
        .chamber
        .iter()
        .find(|c| c.number == chamber)
        .ok_or_else(|| Error::Invariant(format!("no representative for chamber {chamber}")))?
        .charges;
    let p = FockParam::parse(&data.kappa, charges)?;
    let mut cmp = Comparison::new(
        format!("chamber {chamber} ({p})"),
        format!("chamber {chamber}"),
        &data.allowlist,
    );
    let mut arrows = Comparison::new(String::new(), format!("arrow {chamber}"), &data.allowlist);
    if chamber == 1 {
        let km = KmCrystal::new(p.clone());
        for a in &data.arrow {
            let source = parse_label(&a.source)?;
            let computed = km
                .f_op(&source, &km.residue(a.residue))
                .map_or_else(|| "zero".to_string(), |l| l.to_string());
            arrows.compare(
                &format!("f{}({})", a.residue, a.source),
                a.target.clone(),
                computed,
            );
        }
    }
    let param = Parameter::Fock(p);
    for (lam, (pp, qq)) in printed_supports(&data, chamber)? {
        let r = support(&lam, &param)?;
        cmp.compare(&lam.to_string(), show(pp, qq), show(r.p, r.q));
    }
    let arrows = arrows.finish();
    let mut report = cmp.finish();
    report.checked += arrows.checked;
    report.diffs.splice(0..0, arrows.diffs);
    report.stale.extend(arrows.stale);
    Ok(report)
}

/// Wall-crossing bijections `wc_m` for `m ∈ {-2, 0, 2}`, seen from side [1],
/// on bipartitions `(λ^{(1)}, λ^{(2)})` of size at most 3.
pub fn example_wc_report() -> Result<ExampleReport> {
    let data = example_data()?;
    let mut section = ExampleReport {
        section: "wall-crossing bijections".into(),
        checked: 0,
        diffs: Vec::new(),
        stale: Vec::new(),
    };
    for wc in &data.wall_crossing {
        let mut cmp = Comparison::new(String::new(), format!("wc {}", wc.m), &data.allowlist);
        let mut swaps = BTreeMap::new();
        for [a, b] in &wc.swaps {
            swaps.insert(a.clone(), b.clone());
            swaps.insert(b.clone(), a.clone());
        }
        for lam in Multipartition::all_up_to(2, data.max_size) {
            let key = lam.to_string();
            let printed = if wc.component_swap {
                swapped(&lam).to_string()
            } else {
                swaps.get(&key).cloned().unwrap_or_else(|| key.clone())
            };
            let (a, b) = wc_pair(lam.comp(0), lam.comp(1), wc.m, PairSide::First)?;
            let computed = Multipartition::from(vec![a, b]).to_string();
            cmp.compare(&key, printed, computed);
        }
        let r = cmp.finish();
        section.checked += r.checked;
        section.diffs.extend(r.diffs);
        section.stale.extend(r.stale);
    }
    Ok(section)
}

/// Every section of the worked example.
pub fn example_report_all() -> Result<Vec<ExampleReport>> {
    let mut out = (1..=4).map(example_report).collect::<Result<Vec<_>>>()?;
    out.push(example_wc_report()?);
    Ok(out)
}
