use crate::error::{Error, Result};

use super::polymatroid::{elements, Polymatroid, ABSOLUTE_MAX_N};

/// Multigraph; self-loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

struct DisjointSets {
    parent: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertices {
                    return Err(Error::OutOfRange {
                        element: w,
                        n: vertices,
                    });
                }
            }
        }
        Ok(Graph { vertices, edges })
    }

    /// Cycle on `m` vertices.
    pub fn polygon(m: usize) -> Self {
        Graph {
            vertices: m,
            edges: (0..m).map(|i| (i, (i + 1) % m)).collect(),
        }
    }

    /// Two vertices joined by `m` parallel edges.
    pub fn multiedge(m: usize) -> Self {
        Graph {
            vertices: 2,
            edges: vec![(0, 1); m],
        }
    }

    /// Graphic matroid: `rk(A) = |V| - #components(V, A)`.
    pub fn to_polymatroid(&self) -> Result<Polymatroid> {
        let m = self.edges.len();
        if m > ABSOLUTE_MAX_N {
            return Err(Error::CapExceeded {
                what: "rank table size",
                limit: ABSOLUTE_MAX_N,
                got: m,
            });
        }
        Polymatroid::from_fn(m, |a| {
            let mut ds = DisjointSets::new(self.vertices);
            for e in elements(a) {
                let (u, v) = self.edges[e];
                ds.union(u, v);
            }
            (self.vertices - ds.components) as u64
        })
    }
}

pub fn from_graph(g: &Graph) -> Result<Polymatroid> {
    g.to_polymatroid()
}
