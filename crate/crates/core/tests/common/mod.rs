//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use polyinv::pmcore::{Graph, Polymatroid, VectorConfig};
use polyinv::schur::{Partition, SymFn};

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn graph_strategy(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(move |v| {
        prop::collection::vec((0..v, 0..v), 0..=max_edges).prop_map(move |edges| Graph::new(v, edges).unwrap())
    })
}

/// Points in `Q^dim` with small integer coordinates, one per element.
pub fn point_config_strategy(max_n: usize) -> impl Strategy<Value = VectorConfig> {
    (1..=3usize, 1..=max_n).prop_flat_map(|(dim, n)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, dim), n).prop_map(move |pts| {
            let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
            VectorConfig::points(dim, &refs).unwrap()
        })
    })
}

/// Subspaces spanned by up to two generators each; gives genuine polymatroids.
pub fn subspace_config_strategy(max_n: usize) -> impl Strategy<Value = VectorConfig> {
    (1..=4usize, 1..=max_n).prop_flat_map(|(dim, n)| {
        prop::collection::vec(prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..=2), n).prop_map(
            move |subs| {
                let subspaces = subs
                    .into_iter()
                    .map(|gens| gens.into_iter().map(|v| v.into_iter().map(q).collect()).collect())
                    .collect();
                VectorConfig::new(dim, subspaces).unwrap()
            },
        )
    })
}

/// `rk(A) = min(cap, |union of S_x for x in A|)`, a truncated coverage function.
pub fn coverage_strategy(max_n: usize) -> impl Strategy<Value = Polymatroid> {
    (1..=max_n, 1..=6u32).prop_flat_map(|(n, cap)| {
        prop::collection::vec(0u32..16, n).prop_map(move |sets| {
            Polymatroid::from_fn(n, |a| {
                let cover = (0..n).filter(|i| a >> i & 1 == 1).fold(0u32, |m, i| m | sets[i]);
                u64::from(cover.count_ones().min(cap))
            })
            .unwrap()
        })
    })
}

pub fn matroid_strategy(max_n: usize) -> impl Strategy<Value = Polymatroid> {
    prop_oneof![
        graph_strategy(5, max_n).prop_map(|g| g.to_polymatroid().unwrap()),
        point_config_strategy(max_n).prop_map(|c| c.to_polymatroid().unwrap()),
        (0..=max_n).prop_flat_map(|n| (0..=n, Just(n))).prop_map(|(r, n)| Polymatroid::uniform(r, n).unwrap()),
    ]
}

pub fn polymatroid_strategy(max_n: usize) -> impl Strategy<Value = Polymatroid> {
    prop_oneof![
        matroid_strategy(max_n),
        subspace_config_strategy(max_n).prop_map(|c| c.to_polymatroid().unwrap()),
        coverage_strategy(max_n),
    ]
}

pub fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Connected components by depth-first search over an adjacency list.
pub fn components(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); vertices];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; vertices];
    let mut count = 0;
    for s in 0..vertices {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Rank over Q by plain Gaussian elimination with rational pivots.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for k in 0..cols {
                    let sub = &f * &rows[rank][k];
                    rows[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Polynomial in `k` commuting variables, keyed by exponent vector.
pub type Poly = HashMap<Vec<u32>, BigInt>;

/// `s_shape(x_1..x_k)` by enumerating semistandard tableaux row by row.
pub fn schur_poly(shape: &[u32], k: usize) -> Poly {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = Poly::new();
    fill(&cells, 0, k, &mut filling, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], i: usize, k: usize, t: &mut HashMap<(usize, usize), usize>, out: &mut Poly) {
    if i == cells.len() {
        let mut exp = vec![0u32; k];
        for &v in t.values() {
            exp[v] += 1;
        }
        *out.entry(exp).or_insert_with(BigInt::zero) += 1;
        return;
    }
    let (r, c) = cells[i];
    let lo_row = if c > 0 { t[&(r, c - 1)] } else { 0 };
    let lo_col = if r > 0 { t[&(r - 1, c)] + 1 } else { 0 };
    for v in lo_row.max(lo_col)..k {
        t.insert((r, c), v);
        fill(cells, i + 1, k, t, out);
    }
    t.remove(&(r, c));
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expands a symmetric polynomial in the Schur basis by peeling off the
/// lexicographically largest dominant monomial. Exact when `k` is at least
/// the degree.
pub fn to_schur(mut p: Poly, k: usize) -> SymFn {
    let mut out = SymFn::zero();
    loop {
        p.retain(|_, c| !c.is_zero());
        let Some(top) = p.keys().filter(|e| e.windows(2).all(|w| w[0] >= w[1])).max().cloned() else {
            assert!(p.is_empty(), "not symmetric");
            return out;
        };
        let c = p[&top].clone();
        let parts: Vec<u32> = top.iter().copied().filter(|&x| x > 0).collect();
        let s = schur_poly(&parts, k);
        for (e, v) in s {
            *p.entry(e).or_insert_with(BigInt::zero) -= &c * v;
        }
        out.add_term(Partition::new(parts).unwrap(), BigRational::from_integer(c));
    }
}

pub fn symfn_poly(f: &SymFn, k: usize) -> Poly {
    let mut out = Poly::new();
    for (lambda, c) in f.terms() {
        assert!(c.is_integer());
        for (e, v) in schur_poly(lambda.parts(), k) {
            *out.entry(e).or_insert_with(BigInt::zero) += c.to_integer() * v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn one_poly(k: usize) -> Poly {
    Poly::from([(vec![0; k], BigInt::one())])
}
