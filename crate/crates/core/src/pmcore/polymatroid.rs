use std::fmt;

use crate::error::{Error, Result};

/// Subset of the ground set `0..n` as a bitmask.
pub type Subset = u32;

/// Largest ground set the dense rank table can address at all.
pub const ABSOLUTE_MAX_N: usize = 24;

/// Default ground-set cap for subset and chain enumerations.
pub const DEFAULT_MAX_N: usize = 12;

/// Default cap for the `n!` chain enumeration behind `G`.
pub const DEFAULT_MAX_CHAINS: usize = 10;

/// Enumeration caps. Raising them past the defaults is a caller decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_chains: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            max_chains: DEFAULT_MAX_CHAINS,
        }
    }
}

impl Limits {
    pub fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded {
                what: "ground-set size (--max-n)",
                limit: self.max_n,
                got: n,
            });
        }
        Ok(())
    }

    pub fn check_chains(&self, n: usize) -> Result<()> {
        if n > self.max_chains {
            return Err(Error::CapExceeded {
                what: "chain enumeration (--max-chains)",
                limit: self.max_chains,
                got: n,
            });
        }
        Ok(())
    }
}

/// First axiom failure found by [`Polymatroid::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Normalization { rank: u64 },
    Monotonicity { subset: Subset, superset: Subset },
    Submodularity { a: Subset, b: Subset },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Normalization { rank } => write!(f, "normalization: rk(empty) = {rank}"),
            Violation::Monotonicity { subset, superset } => write!(
                f,
                "monotonicity: rk({}) > rk({})",
                fmt_subset(*subset),
                fmt_subset(*superset)
            ),
            Violation::Submodularity { a, b } => write!(
                f,
                "submodularity: A = {}, B = {}",
                fmt_subset(*a),
                fmt_subset(*b)
            ),
        }
    }
}

/// `{0,2,3}` style rendering of a bitmask.
pub fn fmt_subset(s: Subset) -> String {
    let elems: Vec<String> = elements(s).map(|e| e.to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

pub fn elements(s: Subset) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| s >> i & 1 == 1)
}

pub fn size(s: Subset) -> usize {
    s.count_ones() as usize
}

pub fn full(n: usize) -> Subset {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn mask_of(elems: &[usize], n: usize) -> Result<Subset> {
    elems.iter().try_fold(0, |m, &e| {
        if e >= n {
            Err(Error::OutOfRange { element: e, n })
        } else {
            Ok(m | 1 << e)
        }
    })
}

/// Spreads the low bits of `compact` onto the set bits of `host`.
pub(crate) fn deposit(compact: Subset, host: Subset) -> Subset {
    let mut out = 0;
    for (j, e) in elements(host).enumerate() {
        if compact >> j & 1 == 1 {
            out |= 1 << e;
        }
    }
    out
}

/// A discrete polymatroid on the ground set `0..n` with a dense rank table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polymatroid {
    n: usize,
    rank: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Polymatroid {
    /// Wraps a rank table indexed by subset bitmask. Only the table length is
    /// checked here; call [`validate`](Self::validate) for the axioms.
    pub fn from_table(n: usize, rank: Vec<u64>) -> Result<Self> {
        if n > ABSOLUTE_MAX_N {
            return Err(Error::CapExceeded {
                what: "rank table size",
                limit: ABSOLUTE_MAX_N,
                got: n,
            });
        }
        if rank.len() != 1 << n {
            return Err(Error::Malformed(format!(
                "rank table for n = {n} needs {} entries, got {}",
                1usize << n,
                rank.len()
            )));
        }
        Ok(Polymatroid {
            n,
            rank,
            labels: None,
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(Subset) -> u64) -> Result<Self> {
        if n > ABSOLUTE_MAX_N {
            return Err(Error::CapExceeded {
                what: "rank table size",
                limit: ABSOLUTE_MAX_N,
                got: n,
            });
        }
        Self::from_table(n, (0..1u32 << n).map(f).collect())
    }

    pub fn empty() -> Self {
        Polymatroid {
            n: 0,
            rank: vec![0],
            labels: None,
        }
    }

    pub fn loop_matroid() -> Self {
        Polymatroid {
            n: 1,
            rank: vec![0, 0],
            labels: None,
        }
    }

    pub fn coloop() -> Self {
        Polymatroid {
            n: 1,
            rank: vec![0, 1],
            labels: None,
        }
    }

    /// `U_{r,n}`: rank `min(r, |A|)`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::Malformed(format!("uniform matroid needs r <= n, got r = {r}, n = {n}")));
        }
        Self::from_fn(n, |a| size(a).min(r) as u64)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Malformed(format!(
                "{} labels for a ground set of size {}",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        full(self.n)
    }

    #[inline]
    pub fn rank(&self, a: Subset) -> u64 {
        self.rank[a as usize]
    }

    pub fn total_rank(&self) -> u64 {
        self.rank(self.full())
    }

    pub fn table(&self) -> &[u64] {
        &self.rank
    }

    /// Checks all three axioms over every pair of subsets.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        if self.rank[0] != 0 {
            return Err(Violation::Normalization { rank: self.rank[0] });
        }
        let all = 1u32 << self.n;
        for a in 0..all {
            for b in 0..all {
                let (ra, rb) = (self.rank(a), self.rank(b));
                if a & b == a && ra > rb {
                    return Err(Violation::Monotonicity {
                        subset: a,
                        superset: b,
                    });
                }
                if self.rank(a | b) + self.rank(a & b) > ra + rb {
                    return Err(Violation::Submodularity { a, b });
                }
            }
        }
        Ok(())
    }

    /// Equivalent local check: one-element monotonicity and diminishing
    /// returns on pairs `A+i`, `A+j`. `O(2^n n^2)`.
    pub fn validate_local(&self) -> std::result::Result<(), Violation> {
        if self.rank[0] != 0 {
            return Err(Violation::Normalization { rank: self.rank[0] });
        }
        for a in 0..1u32 << self.n {
            for i in 0..self.n {
                let ai = a | 1 << i;
                if ai == a {
                    continue;
                }
                if self.rank(a) > self.rank(ai) {
                    return Err(Violation::Monotonicity {
                        subset: a,
                        superset: ai,
                    });
                }
                for j in i + 1..self.n {
                    let aj = a | 1 << j;
                    if aj == a {
                        continue;
                    }
                    if self.rank(ai | aj) + self.rank(a) > self.rank(ai) + self.rank(aj) {
                        return Err(Violation::Submodularity { a: ai, b: aj });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_matroid(&self) -> bool {
        (0..self.n).all(|i| self.rank(1 << i) <= 1)
    }

    fn check_subset(&self, a: Subset) -> Result<()> {
        match elements(a & !self.full()).next() {
            Some(e) => Err(Error::OutOfRange {
                element: e,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    fn sub_labels(&self, a: Subset) -> Option<Vec<String>> {
        self.labels
            .as_ref()
            .map(|ls| elements(a).map(|e| ls[e].clone()).collect())
    }

    /// `X|_A`, with the elements of `A` relabeled `0..|A|` in increasing order.
    pub fn restrict(&self, a: Subset) -> Result<Self> {
        self.check_subset(a)?;
        let k = size(a);
        let rank = (0..1u32 << k).map(|b| self.rank(deposit(b, a))).collect();
        Ok(Polymatroid {
            n: k,
            rank,
            labels: self.sub_labels(a),
        })
    }

    pub fn delete(&self, a: Subset) -> Result<Self> {
        self.check_subset(a)?;
        self.restrict(self.full() & !a)
    }

    /// `X/A`: ground set `A^c`, rank `B -> rk(A u B) - rk(A)`.
    pub fn contract(&self, a: Subset) -> Result<Self> {
        self.check_subset(a)?;
        let rest = self.full() & !a;
        let base = self.rank(a);
        let k = size(rest);
        let rank = (0..1u32 << k)
            .map(|b| self.rank(a | deposit(b, rest)) - base)
            .collect();
        Ok(Polymatroid {
            n: k,
            rank,
            labels: self.sub_labels(rest),
        })
    }

    /// Disjoint union; `other`'s elements follow `self`'s.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        if n > ABSOLUTE_MAX_N {
            return Err(Error::CapExceeded {
                what: "rank table size",
                limit: ABSOLUTE_MAX_N,
                got: n,
            });
        }
        let lo = self.full();
        let rank = (0..1u32 << n)
            .map(|c| self.rank(c & lo) + other.rank(c >> self.n))
            .collect();
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            (l, r) => {
                let side = |ls: &Option<Vec<String>>, m: usize, tag: &str| -> Vec<String> {
                    ls.clone()
                        .unwrap_or_else(|| (0..m).map(|i| format!("{tag}{i}")).collect())
                };
                let mut all = side(l, self.n, "a");
                all.extend(side(r, other.n, "b"));
                Some(all)
            }
        };
        Ok(Polymatroid { n, rank, labels })
    }

    /// Matroid dual `|A| - rk(X) + rk(X \ A)`.
    pub fn dual(&self) -> Result<Self> {
        if !self.is_matroid() {
            return Err(Error::NotMatroid);
        }
        let total = self.total_rank();
        let f = self.full();
        let rank = (0..1u32 << self.n)
            .map(|a| size(a) as u64 + self.rank(f & !a) - total)
            .collect();
        Ok(Polymatroid {
            n: self.n,
            rank,
            labels: self.labels.clone(),
        })
    }

    /// Relabels so that new element `i` is old element `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Malformed(format!("{perm:?} is not a permutation of 0..{}", self.n)));
        }
        let rank = (0..1u32 << self.n)
            .map(|b| {
                let old = elements(b).fold(0, |m, i| m | 1 << perm[i]);
                self.rank(old)
            })
            .collect();
        Ok(Polymatroid {
            n: self.n,
            rank,
            labels: self
                .labels
                .as_ref()
                .map(|ls| perm.iter().map(|&p| ls[p].clone()).collect()),
        })
    }
}
