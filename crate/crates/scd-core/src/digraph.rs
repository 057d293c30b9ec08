use fixedbitset::FixedBitSet;

use crate::error::{CoreError, Result};

/// Dense semi-complete digraph on vertices `0..n`.
///
/// Every pair of distinct vertices is joined by at least one arc; both
/// directions may be present. Rows of the adjacency matrix are stored as
/// bitsets together with the transposed matrix, so in- and out-neighbourhood
/// queries are equally cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiCompleteDigraph {
    n: usize,
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
    outdeg: Vec<usize>,
}

impl std::fmt::Debug for SemiCompleteDigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SemiCompleteDigraph(n={})", self.n)?;
        for u in 0..self.n {
            let row: String = (0..self.n).map(|v| if self.arc(u, v) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl SemiCompleteDigraph {
    /// Validates a square boolean matrix and caches outdegrees.
    pub fn build(n: usize, matrix: &[Vec<bool>]) -> Result<Self> {
        if matrix.len() != n {
            return Err(CoreError::ShapeError { expected: n, row: matrix.len(), found: 0 });
        }
        for (row, r) in matrix.iter().enumerate() {
            if r.len() != n {
                return Err(CoreError::ShapeError { expected: n, row, found: r.len() });
            }
        }
        Self::from_fn(n, |u, v| matrix[u][v])
    }

    /// Builds the digraph whose arcs are given by `arc(u, v)`.
    pub fn from_fn(n: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut out = vec![FixedBitSet::with_capacity(n); n];
        let mut inn = vec![FixedBitSet::with_capacity(n); n];
        for u in 0..n {
            for v in 0..n {
                if arc(u, v) {
                    if u == v {
                        return Err(CoreError::LoopArc(u));
                    }
                    out[u].insert(v);
                    inn[v].insert(u);
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if !out[u].contains(v) && !out[v].contains(u) {
                    return Err(CoreError::NotSemiComplete(u, v));
                }
            }
        }
        let outdeg = out.iter().map(|r| r.count_ones(..)).collect();
        Ok(SemiCompleteDigraph { n, out, inn, outdeg })
    }

    /// Rejects digons; returns the digraph unchanged otherwise.
    pub fn require_tournament(self) -> Result<Self> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.arc(u, v) && self.arc(v, u) {
                    return Err(CoreError::Digon(u, v));
                }
            }
        }
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    #[inline]
    pub fn outdeg(&self, v: usize) -> usize {
        self.outdeg[v]
    }

    #[inline]
    pub fn indeg(&self, v: usize) -> usize {
        self.inn[v].count_ones(..)
    }

    pub fn outdegrees(&self) -> &[usize] {
        &self.outdeg
    }

    /// Outneighbourhood of `v` as a bitset over `0..n`.
    #[inline]
    pub fn out_set(&self, v: usize) -> &FixedBitSet {
        &self.out[v]
    }

    #[inline]
    pub fn in_set(&self, v: usize) -> &FixedBitSet {
        &self.inn[v]
    }

    pub fn out_neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].ones()
    }

    pub fn in_neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[v].ones()
    }

    pub fn arc_count(&self) -> usize {
        self.outdeg.iter().sum()
    }

    pub fn is_tournament(&self) -> bool {
        self.arc_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].ones().map(move |v| (u, v)))
    }

    /// Number of arcs leading from `from` into `to`.
    pub fn arcs_between(&self, from: &FixedBitSet, to: &FixedBitSet) -> usize {
        from.ones().map(|u| self.out[u].intersection_count(to)).sum()
    }

    /// Semi-complete digraph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SemiCompleteDigraph {
        SemiCompleteDigraph::from_fn(vertices.len(), |i, j| self.arc(vertices[i], vertices[j]))
            .expect("induced subdigraph of a semi-complete digraph is semi-complete")
    }

    /// Vertex set `0..n` as a full bitset.
    pub fn full_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        s.insert_range(..);
        s
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.n)
    }
}

/// Bitset over `0..n` holding the given vertices.
pub fn vertex_set(n: usize, vertices: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for v in vertices {
        s.insert(v);
    }
    s
}
