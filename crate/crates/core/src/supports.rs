//! The support pipeline: from a label and a parameter to `(p, q)`.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::crystal::KmCrystal;
use crate::error::{Error, Result};
use crate::fock::{FockParam, Kappa};
use crate::heisenberg::HeisenbergCrystal;
use crate::partitions::Multipartition;
use crate::rank_one::RankOneParam;
use crate::rat::{self, Rat};

/// Any parameter the pipeline accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parameter {
    Fock(FockParam),
    /// `κ = 0`, where charges are meaningless and the rank-one `h` values
    /// are given instead.
    KappaZero(RankOneParam),
}

impl Parameter {
    pub fn level(&self) -> usize {
        match self {
            Parameter::Fock(p) => p.level(),
            Parameter::KappaZero(r) => r.level(),
        }
    }

    /// Denominator of `κ`, `None` when infinite or undefined.
    pub fn e(&self) -> Option<usize> {
        match self {
            Parameter::Fock(p) => p.e(),
            Parameter::KappaZero(_) => None,
        }
    }

    /// `κ` as text with either charges or, for `κ = 0`, the `h` values.
    pub fn parse(kappa: &str, charges: Option<&str>, h: Option<&str>) -> Result<Parameter> {
        let is_zero = rat::parse(kappa).map(|k| k.is_zero()).unwrap_or(false);
        if is_zero {
            let h = h.ok_or_else(|| {
                Error::InvalidParameter("κ = 0 needs the rank-one values --h".into())
            })?;
            return Ok(Parameter::KappaZero(RankOneParam::parse(h)?));
        }
        if h.is_some() {
            return Err(Error::InvalidParameter(
                "--h is only meaningful for κ = 0".into(),
            ));
        }
        let charges =
            charges.ok_or_else(|| Error::InvalidParameter("charges --s are required".into()))?;
        Ok(Parameter::Fock(FockParam::parse(kappa, charges)?))
    }
}

impl From<FockParam> for Parameter {
    fn from(p: FockParam) -> Self {
        Parameter::Fock(p)
    }
}

impl From<RankOneParam> for Parameter {
    fn from(p: RankOneParam) -> Self {
        Parameter::KappaZero(p)
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Fock(p) => write!(f, "{p}"),
            Parameter::KappaZero(r) => write!(f, "{r}"),
        }
    }
}

/// One decision taken by the pipeline. Components are 1-based in text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    KappaZero {
        infinite: Vec<usize>,
    },
    FormalKappa,
    Flipped {
        param: String,
        label: Multipartition,
    },
    ClassSplit {
        classes: Vec<Vec<usize>>,
    },
    Normalized {
        class: Vec<usize>,
        shift: Rat,
    },
    Transported {
        class: Vec<usize>,
        component: usize,
        walls: Vec<String>,
        image: Multipartition,
    },
    DepthOverride {
        computed: usize,
    },
    ConventionExtension(String),
}

fn one_based(class: &[usize]) -> String {
    class
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::KappaZero { infinite } => {
                write!(f, "kappa-zero: infinite rank-one components {{{}}}", {
                    infinite
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
            }
            TraceEvent::FormalKappa => {
                f.write_str("formal kappa: q = 0, p from the sl_inf crystal")
            }
            TraceEvent::Flipped { param, label } => write!(f, "flip: {param}, label {label}"),
            TraceEvent::ClassSplit { classes } => {
                let parts: Vec<String> = classes
                    .iter()
                    .map(|c| format!("{{{}}}", one_based(c)))
                    .collect();
                write!(f, "classes: {}", parts.join(" "))
            }
            TraceEvent::Normalized { class, shift } => {
                write!(
                    f,
                    "normalize {{{}}}: charges shifted by {}",
                    one_based(class),
                    -shift
                )
            }
            TraceEvent::Transported {
                class,
                component,
                walls,
                image,
            } => write!(
                f,
                "transport {{{}}} to asymptotic component {} across [{}]: {image}",
                one_based(class),
                component + 1,
                walls.join("; ")
            ),
            TraceEvent::DepthOverride { computed } => {
                write!(f, "e = 1: p set to 0 (crystal depth {computed})")
            }
            TraceEvent::ConventionExtension(detail) => write!(f, "convention-extension: {detail}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportResult {
    pub lambda: Multipartition,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub e: Option<usize>,
    pub dim_support: usize,
    pub finite_dim: bool,
    pub trace: Vec<TraceEvent>,
}

impl SupportResult {
    fn new(
        lambda: Multipartition,
        p: usize,
        q: usize,
        e: Option<usize>,
        trace: Vec<TraceEvent>,
    ) -> Result<Self> {
        let n = lambda.size();
        if let Some(e) = e {
            if p + e * q > n {
                return Err(Error::Invariant(format!(
                    "p + eq = {p} + {e}·{q} exceeds n = {n} for {lambda}"
                )));
            }
        }
        Ok(SupportResult {
            lambda,
            n,
            p,
            q,
            e,
            dim_support: p + q,
            finite_dim: p == 0 && q == 0,
            trace,
        })
    }
}

/// Computes `(p, q)` for `λ`.
pub fn support(lam: &Multipartition, param: &Parameter) -> Result<SupportResult> {
    if lam.level() != param.level() {
        return Err(Error::LevelMismatch {
            expected: param.level(),
            found: lam.level(),
        });
    }
    match param {
        Parameter::KappaZero(r) => {
            let q = r.kappa_zero_q(lam)?;
            let trace = vec![TraceEvent::KappaZero {
                infinite: r.infinite_components(),
            }];
            SupportResult::new(lam.clone(), 0, q, None, trace)
        }
        Parameter::Fock(p) => {
            let mut trace = Vec::new();
            let (pp, q) = fock_support(lam, p, &mut trace)?;
            SupportResult::new(lam.clone(), pp, q, p.e(), trace)
        }
    }
}

fn fock_support(
    lam: &Multipartition,
    p: &FockParam,
    trace: &mut Vec<TraceEvent>,
) -> Result<(usize, usize)> {
    match p.kappa() {
        Kappa::Generic(_) => {
            trace.push(TraceEvent::FormalKappa);
            Ok((KmCrystal::new(p.clone()).depth(lam), 0))
        }
        Kappa::Rational(k) if !k.is_zero() && !p.kappa().is_negative() => {
            let flipped = p.flipped();
            let lt = lam.transpose();
            trace.push(TraceEvent::Flipped {
                param: flipped.to_string(),
                label: lt.clone(),
            });
            fock_support(&lt, &flipped, trace)
        }
        Kappa::Rational(_) => negative_support(lam, p, trace),
    }
}

fn negative_support(
    lam: &Multipartition,
    p: &FockParam,
    trace: &mut Vec<TraceEvent>,
) -> Result<(usize, usize)> {
    let classes = p.component_classes();
    if classes.len() > 1 {
        trace.push(TraceEvent::ClassSplit {
            classes: classes.clone(),
        });
    }
    let e = p.e().expect("rational κ");
    let (mut total_p, mut total_q) = (0, 0);
    for class in &classes {
        let (sub, mu) = p.restrict_to_class(lam, class);
        let (sub, shift) = sub.normalized();
        if !shift.is_zero() {
            trace.push(TraceEvent::Normalized {
                class: class.clone(),
                shift,
            });
        }
        let depth = KmCrystal::new(sub.clone()).depth(&mu);
        let heis = HeisenbergCrystal::new(sub)?;
        let (image, path) = heis.transported(&mu, mu.size())?;
        if !path.is_empty() {
            trace.push(TraceEvent::Transported {
                class: class.clone(),
                component: class[heis.target_component()],
                walls: path.steps.iter().map(|s| s.wall.to_string()).collect(),
                image,
            });
        }
        if e == 1 {
            trace.push(TraceEvent::DepthOverride { computed: depth });
            if class.len() > 1 {
                trace.push(TraceEvent::ConventionExtension(
                    "e = 1 with several components: q from the transported component".into(),
                ));
            }
            total_q += heis.q_remark(&mu)?;
        } else {
            total_p += depth;
            total_q += heis.q_depth(&mu)?;
        }
    }
    Ok((total_p, total_q))
}

/// Supports of all `λ ∈ 𝒫_ℓ(n)`, in the order of [`Multipartition::all`].
pub fn table(param: &Parameter, n: usize) -> Result<Vec<SupportResult>> {
    Multipartition::all(param.level(), n)
        .par_iter()
        .map(|lam| support(lam, param))
        .collect()
}

/// Labels of size `n` with finite-dimensional simples.
pub fn finite_dims(param: &Parameter, n: usize) -> Result<Vec<Multipartition>> {
    Ok(table(param, n)?
        .into_iter()
        .filter(|r| r.finite_dim)
        .map(|r| r.lambda)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::GenericSign;
    use crate::rat::{frac, int};

    fn chamber_one() -> Parameter {
        FockParam::rational(frac(-1, 2), &[0, -4]).unwrap().into()
    }

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_supports() {
        let r = support(&mp("-|3"), &chamber_one()).unwrap();
        assert_eq!((r.p, r.q, r.dim_support, r.finite_dim), (1, 1, 2, false));
        let r = support(&mp("1,1,1|-"), &chamber_one()).unwrap();
        assert_eq!((r.p, r.q), (0, 0));
        assert!(r.finite_dim);
    }

    #[test]
    fn level_one_wilcox() {
        let p: Parameter = FockParam::rational(frac(-1, 2), &[0]).unwrap().into();
        let r = support(&mp("4,2"), &p).unwrap();
        assert_eq!((r.p, r.q), (0, 3));
    }

    #[test]
    fn finite_dimensional_labels() {
        let found: Vec<String> = finite_dims(&chamber_one(), 3)
            .unwrap()
            .into_iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(found, vec!["3|-", "1,1,1|-"]);
        assert_eq!(finite_dims(&chamber_one(), 0).unwrap(), vec![mp("-|-")]);
    }

    #[test]
    fn flip_is_recorded() {
        let p: Parameter = FockParam::rational(frac(1, 2), &[0, 4]).unwrap().into();
        let r = support(&mp("-|1,1,1"), &p).unwrap();
        assert_eq!((r.p, r.q), (1, 1));
        assert!(matches!(r.trace[0], TraceEvent::Flipped { .. }));
    }

    #[test]
    fn formal_kappa() {
        let p: Parameter = FockParam::new(Kappa::Generic(GenericSign::Neg), vec![int(0), int(0)])
            .unwrap()
            .into();
        let r = support(&mp("2|1"), &p).unwrap();
        assert_eq!(r.q, 0);
        assert_eq!(r.e, None);
    }

    #[test]
    fn split_classes() {
        let p: Parameter = FockParam::new(Kappa::Rational(frac(-1, 2)), vec![int(0), frac(1, 3)])
            .unwrap()
            .into();
        let r = support(&mp("2|2"), &p).unwrap();
        assert_eq!((r.p, r.q), (0, 2));
        assert!(r
            .trace
            .iter()
            .any(|t| matches!(t, TraceEvent::ClassSplit { .. })));
    }

    #[test]
    fn kappa_zero() {
        let p = Parameter::parse("0", None, Some("1/2,0")).unwrap();
        let r = support(&mp("2,1|1"), &p).unwrap();
        assert_eq!((r.p, r.q), (0, 3));
        assert!(Parameter::parse("0", Some("0,0"), None).is_err());
    }

    #[test]
    fn level_mismatch() {
        assert!(matches!(
            support(&mp("1"), &chamber_one()),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn e_equal_one() {
        let p: Parameter = FockParam::rational(int(-1), &[0, -3]).unwrap().into();
        let r = support(&mp("1|2"), &p).unwrap();
        assert_eq!(r.p, 0);
        assert!(r
            .trace
            .iter()
            .any(|t| matches!(t, TraceEvent::ConventionExtension(_))));
    }
}
