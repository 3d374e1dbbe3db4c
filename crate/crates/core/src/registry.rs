//! Invariants addressable by name, each behind the [`Invariant`] trait.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{self, BivariatePoly, SymFnQT, Tutte};
use crate::pmcore::{Limits, Polymatroid};
use crate::qsym::{Basis, QSymFn};
use crate::schur::SymFn;
use crate::special;

/// What an invariant is evaluated on.
#[derive(Debug, Clone)]
pub enum Input {
    Polymatroid(Polymatroid),
    QSym(QSymFn),
}

impl Input {
    fn polymatroid(&self, what: &str) -> Result<&Polymatroid> {
        match self {
            Input::Polymatroid(pm) => Ok(pm),
            Input::QSym(_) => Err(Error::Malformed(format!("`{what}` needs a polymatroid document"))),
        }
    }

    /// The input itself, or `G` of the input polymatroid.
    fn qsym(&self, limits: &Limits) -> Result<QSymFn> {
        match self {
            Input::Polymatroid(pm) => invariants::g_invariant(pm, limits),
            Input::QSym(f) => Ok(f.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub limits: Limits,
    /// Schur degree cutoff for symmetric outputs, or the number of Rees terms.
    pub truncate: Option<usize>,
}

/// A computed value. The JSON form is tagged by `kind` and parses back to the
/// same value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Output {
    Sym(SymFn),
    SymQt(SymFnQT),
    #[serde(rename = "qsym")]
    QSym(QSymFn),
    Poly(BivariatePoly),
    Tutte { laurent: bool, poly: BivariatePoly },
    Series(Vec<SymFnQT>),
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Output::Sym(v) => write!(f, "{v}"),
            Output::SymQt(v) => write!(f, "{v}"),
            Output::QSym(v) => write!(f, "{v}"),
            Output::Poly(v) => write!(f, "{v}"),
            Output::Tutte { laurent, poly } => {
                if *laurent {
                    write!(f, "{poly}  (Laurent in u = x - 1, v = y - 1)")
                } else {
                    write!(f, "{poly}")
                }
            }
            Output::Series(vs) => {
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        writeln!(f)?;
                    }
                    write!(f, "[{i}] {v}")?;
                }
                Ok(())
            }
        }
    }
}

fn cut(f: SymFn, opts: &Options) -> SymFn {
    match opts.truncate {
        Some(d) => f.truncate(d).into_exact(),
        None => f,
    }
}

fn cut_qt(h: SymFnQT, opts: &Options) -> SymFnQT {
    match opts.truncate {
        Some(d) => {
            let mut out = SymFnQT::zero();
            for (q, t, f) in h.slices() {
                out.add_slice(q, t, &f.truncate(d));
            }
            out
        }
        None => h,
    }
}

/// A named computation selectable at runtime.
pub trait Invariant: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output>;
}

struct PInvariant;
struct HInvariant;
struct GInvariant;
struct TutteInvariant;
struct RankGen;
struct Rees;
struct BjrF;
struct TauMap;
struct XiMap;
struct ThetaMap;

impl Invariant for PInvariant {
    fn name(&self) -> &'static str {
        "p"
    }
    fn summary(&self) -> &'static str {
        "symmetric function P[X] in the Schur basis"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        let pm = input.polymatroid(self.name())?;
        Ok(Output::Sym(cut(invariants::p_invariant(pm, &opts.limits)?, opts)))
    }
}

impl Invariant for HInvariant {
    fn name(&self) -> &'static str {
        "h"
    }
    fn summary(&self) -> &'static str {
        "H[X](q,t) in Sym[q,t]"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        let pm = input.polymatroid(self.name())?;
        Ok(Output::SymQt(cut_qt(invariants::h_invariant(pm, &opts.limits)?, opts)))
    }
}

impl Invariant for GInvariant {
    fn name(&self) -> &'static str {
        "g"
    }
    fn summary(&self) -> &'static str {
        "quasi-symmetric G[X] in the U basis"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        let pm = input.polymatroid(self.name())?;
        Ok(Output::QSym(invariants::g_invariant(pm, &opts.limits)?))
    }
}

impl Invariant for TutteInvariant {
    fn name(&self) -> &'static str {
        "tutte"
    }
    fn summary(&self) -> &'static str {
        "Tutte polynomial (Laurent in x-1, y-1 for non-matroids)"
    }
    fn compute(&self, input: &Input, _: &Options) -> Result<Output> {
        let Tutte { poly, laurent } = invariants::tutte(input.polymatroid(self.name())?);
        Ok(Output::Tutte { laurent, poly })
    }
}

impl Invariant for RankGen {
    fn name(&self) -> &'static str {
        "rankgen"
    }
    fn summary(&self) -> &'static str {
        "rank generating function R(q,t)"
    }
    fn compute(&self, input: &Input, _: &Options) -> Result<Output> {
        Ok(Output::Poly(invariants::rank_gen(input.polymatroid(self.name())?)))
    }
}

impl Invariant for Rees {
    fn name(&self) -> &'static str {
        "rees"
    }
    fn summary(&self) -> &'static str {
        "H of the direct powers X^0..X^k (k from --truncate, default 2)"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        let pm = input.polymatroid(self.name())?;
        let k = opts.truncate.unwrap_or(2);
        Ok(Output::Series(invariants::rees_series(pm, k, &opts.limits)?))
    }
}

impl Invariant for BjrF {
    fn name(&self) -> &'static str {
        "f"
    }
    fn summary(&self) -> &'static str {
        "matroid quasi-symmetric function F in the M basis"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        Ok(Output::QSym(special::bjr_f(input.polymatroid(self.name())?, &opts.limits)?))
    }
}

impl Invariant for TauMap {
    fn name(&self) -> &'static str {
        "tau"
    }
    fn summary(&self) -> &'static str {
        "tau of a U-basis element (or of G[X]) in Sym[q,t]"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        Ok(Output::SymQt(cut_qt(special::tau(&input.qsym(&opts.limits)?)?, opts)))
    }
}

impl Invariant for XiMap {
    fn name(&self) -> &'static str {
        "xi"
    }
    fn summary(&self) -> &'static str {
        "xi of a 0/1 U-basis element (or of G[X]) in Sym"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        Ok(Output::Sym(cut(special::xi(&input.qsym(&opts.limits)?)?, opts)))
    }
}

impl Invariant for ThetaMap {
    fn name(&self) -> &'static str {
        "theta"
    }
    fn summary(&self) -> &'static str {
        "theta of a 0/1 U-basis element (or of G[X]) in the M basis"
    }
    fn compute(&self, input: &Input, opts: &Options) -> Result<Output> {
        let f = input.qsym(&opts.limits)?;
        if f.basis() == Basis::M {
            return Err(Error::BasisMismatch {
                expected: "U or P",
                found: "M",
            });
        }
        Ok(Output::QSym(special::theta_map(&f)?))
    }
}

/// Name-keyed collection of invariants.
pub struct Registry {
    entries: BTreeMap<&'static str, Box<dyn Invariant>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            entries: BTreeMap::new(),
        }
    }

    /// Every built-in invariant.
    pub fn standard() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(PInvariant));
        r.register(Box::new(HInvariant));
        r.register(Box::new(GInvariant));
        r.register(Box::new(TutteInvariant));
        r.register(Box::new(RankGen));
        r.register(Box::new(Rees));
        r.register(Box::new(BjrF));
        r.register(Box::new(TauMap));
        r.register(Box::new(XiMap));
        r.register(Box::new(ThetaMap));
        r
    }

    /// Replaces any invariant already registered under the same name.
    pub fn register(&mut self, inv: Box<dyn Invariant>) {
        self.entries.insert(inv.name(), inv);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Invariant> {
        self.entries.get(name).map(|b| b.as_ref()).ok_or_else(|| Error::Unknown {
            kind: "invariant",
            name: name.to_string(),
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::standard()
    }
}
