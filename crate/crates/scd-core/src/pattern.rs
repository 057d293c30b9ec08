use std::collections::HashSet;

use thiserror::Error;

use crate::digraph::SemiCompleteDigraph;
use crate::error::{CoreError, Result};

/// A simple digraph H to be found inside a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(u, v) in &arcs {
            if u >= n {
                return Err(CoreError::BadVertex(u));
            }
            if v >= n {
                return Err(CoreError::BadVertex(v));
            }
            if u == v {
                return Err(CoreError::LoopArc(u));
            }
            if !seen.insert((u, v)) {
                return Err(CoreError::BadParameter(format!("duplicate arc ({u},{v})")));
            }
        }
        Ok(Pattern { n, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// |V(H)| + |E(H)|
    pub fn size(&self) -> usize {
        self.n + self.arcs.len()
    }

    pub fn single_vertex() -> Self {
        Pattern { n: 1, arcs: vec![] }
    }

    pub fn single_arc() -> Self {
        Pattern { n: 2, arcs: vec![(0, 1)] }
    }

    pub fn digon() -> Self {
        Pattern { n: 2, arcs: vec![(0, 1), (1, 0)] }
    }

    pub fn directed_cycle(n: usize) -> Self {
        Pattern { n, arcs: (0..n).map(|i| (i, (i + 1) % n)).collect() }
    }

    /// Every labelled simple digraph with at least one vertex and |V| + |E| ≤ `max_size`.
    pub fn all_up_to_size(max_size: usize) -> Vec<Pattern> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            let slots: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
            let budget = max_size - n;
            for mask in 0u64..(1u64 << slots.len()) {
                if mask.count_ones() as usize > budget {
                    continue;
                }
                let arcs = slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a).collect();
                out.push(Pattern { n, arcs });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// Internally vertex-disjoint paths avoiding other images.
    Expansion,
    /// Arc-disjoint paths.
    Immersion,
}

/// Images of pattern vertices and one host path per pattern arc (same order as `Pattern::arcs`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelMap {
    pub kind: ModelKind,
    pub vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelViolation {
    #[error("expected {expected} {what}, found {found}")]
    Count { what: &'static str, expected: usize, found: usize },
    #[error("host vertex {0} is out of range")]
    BadVertex(usize),
    #[error("pattern vertices {0} and {1} share an image")]
    NotInjective(usize, usize),
    #[error("path for arc #{0} has wrong endpoints")]
    Endpoints(usize),
    #[error("path for arc #{arc} uses missing arc ({u},{v})")]
    MissingArc { arc: usize, u: usize, v: usize },
    #[error("path for arc #{0} repeats a vertex")]
    NotSimple(usize),
    #[error("host vertex {0} is used twice")]
    VertexReused(usize),
    #[error("host arc ({0},{1}) is used twice")]
    ArcReused(usize, usize),
}

impl ModelMap {
    /// Checks the model against host and pattern independently of how it was built.
    pub fn verify(&self, t: &SemiCompleteDigraph, h: &Pattern) -> std::result::Result<(), ModelViolation> {
        if self.vertices.len() != h.vertex_count() {
            return Err(ModelViolation::Count {
                what: "vertex images",
                expected: h.vertex_count(),
                found: self.vertices.len(),
            });
        }
        if self.paths.len() != h.arc_count() {
            return Err(ModelViolation::Count { what: "paths", expected: h.arc_count(), found: self.paths.len() });
        }
        let n = t.n();
        for (i, &x) in self.vertices.iter().enumerate() {
            if x >= n {
                return Err(ModelViolation::BadVertex(x));
            }
            if let Some(j) = self.vertices[..i].iter().position(|&y| y == x) {
                return Err(ModelViolation::NotInjective(j, i));
            }
        }
        let mut used_vertices: HashSet<usize> = self.vertices.iter().copied().collect();
        let mut used_arcs = HashSet::new();
        for (idx, (&(hu, hv), path)) in h.arcs().iter().zip(&self.paths).enumerate() {
            if path.len() < 2 || path[0] != self.vertices[hu] || *path.last().expect("nonempty") != self.vertices[hv] {
                return Err(ModelViolation::Endpoints(idx));
            }
            if let Some(&x) = path.iter().find(|&&x| x >= n) {
                return Err(ModelViolation::BadVertex(x));
            }
            let mut on_path = HashSet::new();
            if !path.iter().all(|&x| on_path.insert(x)) {
                return Err(ModelViolation::NotSimple(idx));
            }
            for w in path.windows(2) {
                if !t.arc(w[0], w[1]) {
                    return Err(ModelViolation::MissingArc { arc: idx, u: w[0], v: w[1] });
                }
                if self.kind == ModelKind::Immersion && !used_arcs.insert((w[0], w[1])) {
                    return Err(ModelViolation::ArcReused(w[0], w[1]));
                }
            }
            if self.kind == ModelKind::Expansion {
                for &x in &path[1..path.len() - 1] {
                    if !used_vertices.insert(x) {
                        return Err(ModelViolation::VertexReused(x));
                    }
                }
            }
        }
        Ok(())
    }
}
