//! Schur-times-Schur product rules.

use std::collections::BTreeMap;

use super::partition::{for_each_horizontal_strip, Partition};

/// A rule for expanding `s_lambda * s_mu` in the Schur basis, keeping only
/// terms of weight `<= max_degree`.
pub trait ProductRule: Send + Sync {
    fn name(&self) -> &'static str;
    fn expand(&self, lambda: &Partition, mu: &Partition, max_degree: usize) -> Vec<(Partition, i64)>;
}

/// Counts Littlewood-Richardson tableaux of shape `nu / lambda` and content
/// `mu`, built one label at a time as horizontal strips, pruned by the
/// lattice-word condition.
#[derive(Debug, Default, Clone, Copy)]
pub struct LittlewoodRichardson;

impl ProductRule for LittlewoodRichardson {
    fn name(&self) -> &'static str {
        "littlewood-richardson"
    }

    fn expand(&self, lambda: &Partition, mu: &Partition, max_degree: usize) -> Vec<(Partition, i64)> {
        if lambda.weight() + mu.weight() > max_degree {
            return Vec::new();
        }
        let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
        // fill[r][k]: number of label-k cells in row r
        let mut fill: Vec<Vec<u32>> = Vec::new();
        place(lambda.clone(), mu.parts(), 0, &mut fill, &mut out);
        out.into_iter().collect()
    }
}

fn place(
    shape: Partition,
    content: &[u32],
    label: usize,
    fill: &mut Vec<Vec<u32>>,
    out: &mut BTreeMap<Partition, i64>,
) {
    if label == content.len() {
        *out.entry(shape).or_insert(0) += 1;
        return;
    }
    let k = content[label] as usize;
    let mut strips = Vec::new();
    for_each_horizontal_strip(&shape, k, k, &mut |nu, _| strips.push(nu));
    for nu in strips {
        let rows = nu.len();
        if fill.len() < rows {
            fill.resize(rows, Vec::new());
        }
        for r in 0..rows {
            let added = nu.part(r) - shape.part(r);
            let row = &mut fill[r];
            if row.len() <= label {
                row.resize(label + 1, 0);
            }
            row[label] = added;
        }
        if lattice_ok(fill, label) {
            place(nu, content, label + 1, fill, out);
        }
        for row in fill.iter_mut() {
            if row.len() > label {
                row[label] = 0;
            }
        }
    }
}

/// Reading rows top to bottom and right to left, the label just placed never
/// outnumbers the previous label. The binding prefixes end right after the
/// new label's cells in each row.
fn lattice_ok(fill: &[Vec<u32>], label: usize) -> bool {
    if label == 0 {
        return true;
    }
    let get = |r: usize, k: usize| fill[r].get(k).copied().unwrap_or(0);
    let (mut cur, mut prev) = (0u32, 0u32);
    for r in 0..fill.len() {
        cur += get(r, label);
        if cur > prev {
            return false;
        }
        prev += get(r, label - 1);
    }
    true
}

/// Jacobi-Trudi: `s_mu = det(h_{mu_i - i + j})`, each `h` applied by Pieri.
#[derive(Debug, Default, Clone, Copy)]
pub struct JacobiTrudi;

impl ProductRule for JacobiTrudi {
    fn name(&self) -> &'static str {
        "jacobi-trudi"
    }

    fn expand(&self, lambda: &Partition, mu: &Partition, max_degree: usize) -> Vec<(Partition, i64)> {
        if lambda.weight() + mu.weight() > max_degree {
            return Vec::new();
        }
        let l = mu.len();
        let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
        let mut perm: Vec<usize> = (0..l).collect();
        loop {
            let hs: Option<Vec<usize>> = (0..l)
                .map(|i| {
                    let v = mu.part(i) as i64 - i as i64 + perm[i] as i64;
                    (v >= 0).then_some(v as usize)
                })
                .collect();
            if let Some(hs) = hs {
                let sign = permutation_sign(&perm);
                let mut terms: BTreeMap<Partition, i64> = BTreeMap::from([(lambda.clone(), sign)]);
                for k in hs {
                    let mut next = BTreeMap::new();
                    for (nu, c) in terms {
                        for_each_horizontal_strip(&nu, k, k, &mut |rho, _| {
                            *next.entry(rho).or_insert(0) += c;
                        });
                    }
                    terms = next;
                }
                for (nu, c) in terms {
                    *out.entry(nu).or_insert(0) += c;
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out.into_iter().filter(|(_, c)| *c != 0).collect()
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classic_coefficient() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let terms = LittlewoodRichardson.expand(&p(&[2, 1]), &p(&[2, 1]), 6);
        let c = terms.iter().find(|(nu, _)| *nu == p(&[3, 2, 1])).unwrap().1;
        assert_eq!(c, 2);
        let total: i64 = terms.iter().map(|(_, c)| c).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn rules_agree_on_small_shapes() {
        for a in Partition::all_up_to(4) {
            for b in Partition::all_up_to(4) {
                assert_eq!(
                    LittlewoodRichardson.expand(&a, &b, 8),
                    JacobiTrudi.expand(&a, &b, 8),
                    "{a} * {b}"
                );
            }
        }
    }

    #[test]
    fn truncation() {
        assert!(LittlewoodRichardson.expand(&p(&[2]), &p(&[1]), 2).is_empty());
    }
}
