use std::cmp::Ordering;
use std::fmt;

/// A finite word of nonnegative integers: a composition in the `M` and `P`
/// bases (letters `>= 1`), or a rank-increment vector in the `U` basis
/// (letters `>= 0`).
///
/// Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the letters.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn prefix(&self, i: usize) -> Word {
        Word(self.0[..i].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `(a_1, ..., a_d) -> (a_1 + 1, ..., a_d + 1)`.
    pub fn shifted_up(&self) -> Word {
        Word(self.0.iter().map(|a| a + 1).collect())
    }

    /// All `(prefix, suffix)` splits, `len + 1` of them.
    pub fn deconcatenations(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.len()).map(|i| (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec())))
    }

    /// Every way to cut the word into consecutive nonempty blocks.
    pub fn block_cuts(&self) -> Vec<Vec<&[u32]>> {
        let n = self.len();
        if n == 0 {
            return vec![Vec::new()];
        }
        (0..1u32 << (n - 1))
            .map(|mask| {
                let mut blocks = Vec::new();
                let mut start = 0;
                for i in 0..n - 1 {
                    if mask >> i & 1 == 1 {
                        blocks.push(&self.0[start..=i]);
                        start = i + 1;
                    }
                }
                blocks.push(&self.0[start..]);
                blocks
            })
            .collect()
    }

    /// Multiset of shuffles with multiplicities; total count is
    /// `binomial(len a + len b, len a)`.
    pub fn shuffles(&self, other: &Word) -> Vec<(Word, u64)> {
        let (a, b) = (&self.0, &other.0);
        let total = a.len() + b.len();
        let mut out: std::collections::BTreeMap<Word, u64> = std::collections::BTreeMap::new();
        let mut positions: Vec<usize> = (0..a.len()).collect();
        loop {
            let mut w = Vec::with_capacity(total);
            let (mut ia, mut ib) = (0, 0);
            for slot in 0..total {
                if ia < a.len() && positions[ia] == slot {
                    w.push(a[ia]);
                    ia += 1;
                } else {
                    w.push(b[ib]);
                    ib += 1;
                }
            }
            *out.entry(Word(w)).or_insert(0) += 1;
            if !next_combination(&mut positions, total) {
                break;
            }
        }
        out.into_iter().collect()
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl From<&[u32]> for Word {
    fn from(v: &[u32]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}
