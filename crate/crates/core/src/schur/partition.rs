use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Integer partition with strictly positive, weakly decreasing parts.
///
/// Ordered by weight, then by descending lexicographic order of the parts,
/// which is the canonical order for rendering.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Malformed(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Malformed(format!("{parts:?} has a zero part")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    /// Single row `(k)`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// Single column `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, in canonical order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of weight `<= n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of).collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Calls `f` on every `mu` with `mu / lambda` a horizontal strip of size
/// `min..=max`.
pub(crate) fn for_each_horizontal_strip(
    lambda: &Partition,
    min: usize,
    max: usize,
    f: &mut impl FnMut(Partition, usize),
) {
    fn go(
        lambda: &[u32],
        i: usize,
        left: usize,
        added: usize,
        min: usize,
        cur: &mut Vec<u32>,
        f: &mut impl FnMut(Partition, usize),
    ) {
        let old = lambda.get(i).copied().unwrap_or(0);
        if i > lambda.len() {
            if added >= min {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                f(Partition::from_parts_unchecked(parts), added);
            }
            return;
        }
        let cap = if i == 0 {
            left as u32
        } else {
            (lambda[i - 1] - old).min(left as u32)
        };
        for extra in 0..=cap {
            cur.push(old + extra);
            go(lambda, i + 1, left - extra as usize, added + extra as usize, min, cur, f);
            cur.pop();
        }
    }
    go(lambda.parts(), 0, max, 0, min, &mut Vec::with_capacity(lambda.len() + 1), f);
}

/// Calls `f` on every `mu` with `mu / lambda` a vertical strip of size `k`.
pub(crate) fn for_each_vertical_strip(lambda: &Partition, k: usize, f: &mut impl FnMut(Partition)) {
    fn go(lambda: &[u32], i: usize, left: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(Partition)) {
        if left == 0 {
            let mut parts = cur.clone();
            parts.extend_from_slice(&lambda[i.min(lambda.len())..]);
            f(Partition::from_parts_unchecked(parts));
            return;
        }
        let old = lambda.get(i).copied().unwrap_or(0);
        if i < lambda.len() {
            cur.push(old);
            go(lambda, i + 1, left, cur, f);
            cur.pop();
        }
        let above = if i == 0 { u32::MAX } else { cur[i - 1] };
        if old + 1 <= above {
            cur.push(old + 1);
            go(lambda, i + 1, left - 1, cur, f);
            cur.pop();
        }
    }
    go(lambda.parts(), 0, k, &mut Vec::new(), f);
}
