use scd_core::SemiCompleteDigraph;

use crate::error::Violation;

fn check_vertices(t: &SemiCompleteDigraph, vs: &[usize], seen: &mut [bool]) -> Result<(), Violation> {
    for &v in vs {
        if v >= t.n() {
            return Err(Violation::BadVertex(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Violation::Repeated(v));
        }
    }
    Ok(())
}

/// At least `k` vertices whose outdegrees pairwise differ by at most `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTangle {
    pub x: Vec<usize>,
    pub k: usize,
    pub ell: usize,
}

impl DegreeTangle {
    pub fn verify(&self, t: &SemiCompleteDigraph) -> Result<(), Violation> {
        check_vertices(t, &self.x, &mut vec![false; t.n()])?;
        if self.x.len() < self.k {
            return Err(Violation::TooSmall { have: self.x.len(), need: self.k });
        }
        let lo = self.x.iter().copied().min_by_key(|&v| (t.outdeg(v), v));
        let hi = self.x.iter().copied().max_by_key(|&v| (t.outdeg(v), v));
        if let (Some(v), Some(w)) = (lo, hi) {
            if t.outdeg(w) - t.outdeg(v) > self.ell {
                return Err(Violation::DegreeSpread { v, w, ell: self.ell });
            }
        }
        Ok(())
    }
}

/// Disjoint X, Y of size `k` with arcs x[i] → y[i] and every Y outdegree
/// exceeding every X outdegree by more than `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingTangle {
    pub x: Vec<usize>,
    /// `y[i]` is the partner of `x[i]`.
    pub y: Vec<usize>,
    pub k: usize,
    pub ell: usize,
}

impl MatchingTangle {
    pub fn verify(&self, t: &SemiCompleteDigraph) -> Result<(), Violation> {
        if self.x.len() != self.k || self.y.len() != self.k {
            return Err(Violation::SideSizes { x: self.x.len(), y: self.y.len(), k: self.k });
        }
        let mut seen = vec![false; t.n()];
        check_vertices(t, &self.x, &mut seen)?;
        for &w in &self.y {
            if w >= t.n() {
                return Err(Violation::BadVertex(w));
            }
            if self.x.contains(&w) {
                return Err(Violation::NotDisjoint(w));
            }
        }
        check_vertices(t, &self.y, &mut seen)?;
        for (&v, &w) in self.x.iter().zip(&self.y) {
            if !t.arc(v, w) {
                return Err(Violation::MissingMatchingArc(v, w));
            }
        }
        let v = self.x.iter().copied().max_by_key(|&v| (t.outdeg(v), v));
        let w = self.y.iter().copied().min_by_key(|&w| (t.outdeg(w), w));
        if let (Some(v), Some(w)) = (v, w) {
            if t.outdeg(w) <= t.outdeg(v) + self.ell {
                return Err(Violation::DegreeGap { v, w, ell: self.ell });
            }
        }
        Ok(())
    }
}

/// A partition (X, Y) with at least `k` arcs from X to Y and every Y
/// outdegree at least every X outdegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardTangle {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub k: usize,
}

impl BackwardTangle {
    pub fn arcs_forward(&self, t: &SemiCompleteDigraph) -> usize {
        let xs = scd_core::vertex_set(t.n(), self.x.iter().copied());
        let ys = scd_core::vertex_set(t.n(), self.y.iter().copied());
        t.arcs_between(&xs, &ys)
    }

    pub fn verify(&self, t: &SemiCompleteDigraph) -> Result<(), Violation> {
        let mut seen = vec![false; t.n()];
        check_vertices(t, &self.x, &mut seen)?;
        for &w in &self.y {
            if w < t.n() && self.x.contains(&w) {
                return Err(Violation::NotDisjoint(w));
            }
        }
        check_vertices(t, &self.y, &mut seen)?;
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Violation::NotPartition(v));
        }
        let have = self.arcs_forward(t);
        if have < self.k {
            return Err(Violation::TooFewArcs { have, need: self.k });
        }
        let v = self.x.iter().copied().max_by_key(|&v| (t.outdeg(v), v));
        let w = self.y.iter().copied().min_by_key(|&w| (t.outdeg(w), w));
        if let (Some(v), Some(w)) = (v, w) {
            if t.outdeg(w) < t.outdeg(v) {
                return Err(Violation::BackwardDegree { v, w });
            }
        }
        Ok(())
    }
}

/// m(k) = 100k² + 22k + 1, the width guaranteed by the outdegree ordering.
pub fn cutwidth_m(k: usize) -> usize {
    100 * k * k + 22 * k + 1
}

/// Largest k with |X| ≥ 5k+2 and ℓ ≤ k; such a tangle certifies pw(T) > k.
pub fn pathwidth_bound_from_degree_tangle(tangle: &DegreeTangle) -> Option<usize> {
    let k = tangle.k.checked_sub(2)? / 5;
    (k >= tangle.ell).then_some(k)
}

/// Largest k with size ≥ k+1 and gap ≥ k; certifies pw(T) > k.
pub fn pathwidth_bound_from_matching_tangle(tangle: &MatchingTangle) -> Option<usize> {
    tangle.k.checked_sub(1).map(|s| s.min(tangle.ell))
}

/// Largest k with arc count ≥ m(k)+1; certifies ctw(T) > k.
pub fn cutwidth_bound_from_backward_tangle(tangle: &BackwardTangle) -> Option<usize> {
    if tangle.k < cutwidth_m(0) + 1 {
        return None;
    }
    let mut k = 0;
    while cutwidth_m(k + 1) < tangle.k {
        k += 1;
    }
    Some(k)
}
