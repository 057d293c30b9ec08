use crate::digraph::SemiCompleteDigraph;
use crate::error::{CoreError, Result};

/// A permutation of `0..n`; `as_slice()[..a]` is the prefix π[a].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(n: usize, pi: Vec<usize>) -> Result<Self> {
        if pi.len() != n {
            return Err(CoreError::NotPermutation(n));
        }
        let mut seen = vec![false; n];
        for &v in &pi {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(CoreError::NotPermutation(n));
            }
        }
        Ok(VertexOrdering(pi))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Position of every vertex in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Vertices sorted by nondecreasing outdegree, ties by ascending index.
pub fn outdegree_ordering(t: &SemiCompleteDigraph) -> VertexOrdering {
    let mut pi: Vec<usize> = (0..t.n()).collect();
    pi.sort_by_key(|&v| (t.outdeg(v), v));
    VertexOrdering(pi)
}

/// Cut sizes |E(π[a], V∖π[a])| for a = 0..=n.
///
/// Moving `v` to the left side adds its arcs into the remaining right side
/// and removes the arcs that entered it from the left side.
pub fn prefix_cuts(t: &SemiCompleteDigraph, pi: &VertexOrdering) -> Vec<usize> {
    let n = t.n();
    let mut left = vec![false; n];
    let mut cuts = Vec::with_capacity(n + 1);
    let mut cut = 0usize;
    cuts.push(0);
    for &v in pi.as_slice() {
        left[v] = true;
        let gained = t.out_neighbours(v).filter(|&w| !left[w]).count();
        let lost = t.in_neighbours(v).filter(|&u| left[u]).count();
        cut = cut + gained - lost;
        cuts.push(cut);
    }
    cuts
}

pub fn ordering_width(t: &SemiCompleteDigraph, pi: &VertexOrdering) -> usize {
    prefix_cuts(t, pi).into_iter().max().unwrap_or(0)
}
