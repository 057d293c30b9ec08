//! Short jungles and their extraction from tangles.

use std::collections::{BTreeMap, HashSet};

use scd_core::{FixedBitSet, SemiCompleteDigraph};
use scd_selectors::DynamicBipartiteGraph;

use crate::error::{ObstacleError, Violation};
use crate::tangle::{BackwardTangle, DegreeTangle, MatchingTangle};
use crate::thresholds::Thresholds;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JungleKind {
    VertexDisjoint,
    EdgeDisjoint,
}

impl JungleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            JungleKind::VertexDisjoint => "vertex_disjoint",
            JungleKind::EdgeDisjoint => "edge_disjoint",
        }
    }
}

/// A set X with, for every ordered pair of distinct vertices, `k` stored
/// paths of length at most `d`, pairwise internally vertex-disjoint or
/// pairwise arc-disjoint depending on `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortJungle {
    pub x: Vec<usize>,
    pub k: usize,
    pub d: usize,
    pub kind: JungleKind,
    pub paths: BTreeMap<(usize, usize), Vec<Vec<usize>>>,
}

impl ShortJungle {
    pub fn paths(&self, v: usize, w: usize) -> &[Vec<usize>] {
        self.paths.get(&(v, w)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn verify(&self, t: &SemiCompleteDigraph) -> Result<(), Violation> {
        let mut seen = vec![false; t.n()];
        for &v in &self.x {
            if v >= t.n() {
                return Err(Violation::BadVertex(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Violation::Repeated(v));
            }
        }
        if self.x.len() < self.k {
            return Err(Violation::TooSmall { have: self.x.len(), need: self.k });
        }
        for &v in &self.x {
            for &w in &self.x {
                if v != w {
                    self.verify_pair(t, v, w)?;
                }
            }
        }
        Ok(())
    }

    fn verify_pair(&self, t: &SemiCompleteDigraph, v: usize, w: usize) -> Result<(), Violation> {
        let family = self.paths(v, w);
        if family.len() < self.k {
            return Err(Violation::MissingPaths { v, w, have: family.len(), need: self.k });
        }
        let bad = |idx: usize, reason: &str| Violation::BadPath { v, w, idx, reason: reason.to_string() };
        for (idx, p) in family.iter().enumerate() {
            if p.len() < 2 || p[0] != v || p[p.len() - 1] != w {
                return Err(bad(idx, "wrong endpoints"));
            }
            if p.len() - 1 > self.d {
                return Err(bad(idx, "too long"));
            }
            if let Some(&x) = p.iter().find(|&&x| x >= t.n()) {
                return Err(Violation::BadVertex(x));
            }
            let mut on = HashSet::new();
            if !p.iter().all(|&x| on.insert(x)) {
                return Err(bad(idx, "repeats a vertex"));
            }
            if let Some(a) = p.windows(2).find(|a| !t.arc(a[0], a[1])) {
                return Err(bad(idx, &format!("arc ({},{}) is missing", a[0], a[1])));
            }
        }
        for i in 0..family.len() {
            for j in i + 1..family.len() {
                let (p, q) = (&family[i], &family[j]);
                let clash = match self.kind {
                    JungleKind::VertexDisjoint => {
                        let inner: HashSet<usize> = p[1..p.len() - 1].iter().copied().collect();
                        (p.len() == 2 && q.len() == 2) || q[1..q.len() - 1].iter().any(|x| inner.contains(x))
                    }
                    JungleKind::EdgeDisjoint => {
                        let arcs: HashSet<(usize, usize)> = p.windows(2).map(|a| (a[0], a[1])).collect();
                        q.windows(2).any(|a| arcs.contains(&(a[0], a[1])))
                    }
                };
                if clash {
                    return Err(Violation::PathsNotDisjoint { v, w, i, j });
                }
            }
        }
        Ok(())
    }
}

/// Result of extracting an immersion jungle from a backward tangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BackwardJungle {
    Found(ShortJungle),
    /// Many high-outdegree tails formed a degree tangle; this is the vertex-disjoint
    /// (4k,3)-jungle extracted from it, which is also a (k,4) immersion jungle.
    Delegated(ShortJungle),
}

impl BackwardJungle {
    pub fn jungle(&self) -> &ShortJungle {
        match self {
            BackwardJungle::Found(j) | BackwardJungle::Delegated(j) => j,
        }
    }

    pub fn into_jungle(self) -> ShortJungle {
        match self {
            BackwardJungle::Found(j) | BackwardJungle::Delegated(j) => j,
        }
    }
}

fn contradiction(msg: impl Into<String>) -> ObstacleError {
    ObstacleError::InternalContradiction(msg.into())
}

fn unmet(msg: impl Into<String>) -> ObstacleError {
    ObstacleError::PreconditionUnmet(msg.into())
}

/// A jungle of at most one vertex has no pairs to connect.
fn trivial(x: &[usize], k: usize, d: usize, kind: JungleKind) -> ShortJungle {
    ShortJungle { x: x.iter().copied().take(k).collect(), k, d, kind, paths: BTreeMap::new() }
}

fn set_of(n: usize, vs: &[usize]) -> FixedBitSet {
    scd_core::vertex_set(n, vs.iter().copied())
}

/// Extracts a (k,3)-short jungle from a (c·k, k)-degree tangle X, c = `degree_jungle`.
pub fn jungle_from_degree_tangle(
    t: &SemiCompleteDigraph,
    x: &[usize],
    k: usize,
    th: &Thresholds,
) -> Result<ShortJungle, ObstacleError> {
    let need = th.degree_jungle * k;
    let tangle = DegreeTangle { x: x.to_vec(), k: need, ell: k };
    tangle.verify(t).map_err(|e| unmet(format!("not a ({need},{k})-degree tangle: {e}")))?;
    let mut x: Vec<usize> = x.to_vec();
    x.sort_unstable();
    if k <= 1 {
        return Ok(trivial(&x, k, 3, JungleKind::VertexDisjoint));
    }
    x.truncate(need);
    let n = t.n();
    let xs = set_of(n, &x);
    let mut paths = BTreeMap::new();
    for &v in &x {
        for &w in &x {
            if v == w {
                continue;
            }
            match pair_paths_degree(t, &x, &xs, v, w, k)? {
                PairOutcome::Paths(ps) => {
                    paths.insert((v, w), ps);
                }
                PairOutcome::Inner(j) => return Ok(j),
            }
        }
    }
    Ok(ShortJungle { x, k, d: 3, kind: JungleKind::VertexDisjoint, paths })
}

enum PairOutcome {
    Paths(Vec<Vec<usize>>),
    Inner(ShortJungle),
}

fn pair_paths_degree(
    t: &SemiCompleteDigraph,
    x: &[usize],
    xs: &FixedBitSet,
    v: usize,
    w: usize,
    k: usize,
) -> Result<PairOutcome, ObstacleError> {
    let n = t.n();
    let mut others = t.full_set();
    others.set(v, false);
    others.set(w, false);
    let both = |a: &FixedBitSet, b: &FixedBitSet| {
        let mut s = a.clone();
        s.intersect_with(b);
        s.intersect_with(&others);
        s
    };
    let vpp = both(t.out_set(v), t.out_set(w));
    let vpm = both(t.out_set(v), t.in_set(w));
    let vmm = both(t.in_set(v), t.in_set(w));
    if vpm.count_ones(..) >= k {
        let ps = vpm.ones().take(k).map(|y| vec![v, y, w]).collect();
        return Ok(PairOutcome::Paths(ps));
    }
    let mut a = vpp.clone();
    a.difference_with(&vpm);
    let mut b = vmm.clone();
    b.difference_with(&vpm);
    let mut h = DynamicBipartiteGraph::new(0);
    for y in b.ones() {
        h.add_right(y, &[]).expect("fresh label");
    }
    for y in a.ones() {
        let nb: Vec<usize> = t.out_set(y).intersection(&b).collect();
        h.add_left(y, &nb).expect("fresh label, known neighbours");
    }
    if h.matching_size() >= k {
        let ps = h.matching().into_iter().take(k).map(|(p, q)| vec![v, p, q, w]).collect();
        return Ok(PairOutcome::Paths(ps));
    }
    let cover: HashSet<usize> = h.konig_cover().into_iter().collect();
    let a_in_x = a.intersection(xs).count();
    if a_in_x < 16 * k {
        return Err(contradiction(format!(
            "pair ({v},{w}): neither paths nor a large A-side ({a_in_x} < {}) exist",
            16 * k
        )));
    }
    // Y: 15k tangle vertices of A outside the cover
    let y: Vec<usize> = x.iter().copied().filter(|&u| a.contains(u) && !cover.contains(&u)).take(15 * k).collect();
    if y.len() < 15 * k {
        return Err(contradiction(format!("pair ({v},{w}): only {} cover-free A vertices", y.len())));
    }
    let ys = set_of(n, &y);
    let indeg_in_y = |u: usize| t.in_set(u).intersection(&ys).count();
    let z: Vec<usize> = y.iter().copied().filter(|&u| indeg_in_y(u) >= 6 * k).take(k).collect();
    if z.len() < k {
        return Err(contradiction(format!("pair ({v},{w}): fewer than {k} high-indegree vertices in Y")));
    }
    let mut paths = BTreeMap::new();
    for &z1 in &z {
        for &z2 in &z {
            if z1 == z2 {
                continue;
            }
            let mids: Vec<usize> =
                t.out_set(z1).intersection(t.in_set(z2)).filter(|&u| ys.contains(u)).take(k).collect();
            if mids.len() < k {
                return Err(contradiction(format!("inner pair ({z1},{z2}) has {} middles", mids.len())));
            }
            paths.insert((z1, z2), mids.into_iter().map(|m| vec![z1, m, z2]).collect());
        }
    }
    Ok(PairOutcome::Inner(ShortJungle { x: z, k, d: 3, kind: JungleKind::VertexDisjoint, paths }))
}

/// Extracts a (k,4)-short jungle inside Y from an (s·k, g·k)-matching tangle.
pub fn jungle_from_matching_tangle(
    t: &SemiCompleteDigraph,
    tangle: &MatchingTangle,
    k: usize,
    th: &Thresholds,
) -> Result<ShortJungle, ObstacleError> {
    let size = th.matching_jungle_size * k;
    let gap = th.matching_jungle_gap * k;
    tangle.verify(t).map_err(|e| unmet(format!("matching tangle does not verify: {e}")))?;
    if tangle.k < size || tangle.ell < gap {
        return Err(unmet(format!("need a ({size},{gap})-matching tangle, got ({},{})", tangle.k, tangle.ell)));
    }
    if k <= 1 {
        return Ok(trivial(&tangle.y, k, 4, JungleKind::VertexDisjoint));
    }
    let xv: Vec<usize> = tangle.x[..size].to_vec();
    let yv: Vec<usize> = tangle.y[..size].to_vec();
    let n = t.n();
    let ys = set_of(n, &yv);
    let z: Vec<usize> = yv.iter().copied().filter(|&u| t.in_set(u).intersection(&ys).count() > k).take(k).collect();
    if z.len() < k {
        return Err(contradiction(format!("fewer than {k} vertices of Y with indegree above {k}")));
    }
    let preimage = |r: usize| xv[yv.iter().position(|&y| y == r).expect("r lies in Y")];
    let mut paths = BTreeMap::new();
    for &v in &z {
        for &w in &z {
            if v == w {
                continue;
            }
            let r: Vec<usize> = t.in_set(w).intersection(&ys).filter(|&u| u != v).take(k).collect();
            if r.len() < k {
                return Err(contradiction(format!("w = {w} has too few in-neighbours in Y")));
            }
            let p: Vec<usize> = r.iter().map(|&u| preimage(u)).collect();
            let blocked: HashSet<usize> = p.iter().chain(&r).copied().collect();
            let mut used: HashSet<usize> = HashSet::new();
            let mut family = Vec::with_capacity(k);
            for (&pi, &ri) in p.iter().zip(&r) {
                let q = t
                    .out_set(v)
                    .intersection(t.in_set(pi))
                    .find(|q| !blocked.contains(q) && !used.contains(q))
                    .ok_or_else(|| contradiction(format!("no free middle vertex from {v} to {pi}")))?;
                used.insert(q);
                if q == w {
                    family.push(vec![v, w]);
                } else {
                    family.push(vec![v, q, pi, ri, w]);
                }
            }
            paths.insert((v, w), family);
        }
    }
    Ok(ShortJungle { x: z, k, d: 4, kind: JungleKind::VertexDisjoint, paths })
}

/// Removes cycles from a walk, keeping a subset of its arcs.
fn shortcut(walk: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(walk.len());
    let mut i = 0;
    while i < walk.len() {
        let j = walk.iter().rposition(|&u| u == walk[i]).expect("present");
        out.push(walk[i]);
        i = j + 1;
    }
    out
}

/// Extracts a (k,4)-short immersion jungle from a backward tangle with at
/// least a·k forward arcs.
pub fn immersion_jungle_from_backward_tangle(
    t: &SemiCompleteDigraph,
    tangle: &BackwardTangle,
    k: usize,
    th: &Thresholds,
) -> Result<BackwardJungle, ObstacleError> {
    tangle.verify(t).map_err(|e| unmet(format!("backward tangle does not verify: {e}")))?;
    let need = th.backward_arcs * k;
    if tangle.k < need {
        return Err(unmet(format!("tangle certifies {} forward arcs, needs {need}", tangle.k)));
    }
    let n = t.n();
    let xs = set_of(n, &tangle.x);
    let ys = set_of(n, &tangle.y);
    let mut x_sorted = tangle.x.clone();
    x_sorted.sort_unstable();
    let mut y_sorted = tangle.y.clone();
    y_sorted.sort_unstable();
    // tails in X and heads in Y of forward arcs
    let p0: Vec<usize> =
        x_sorted.iter().copied().filter(|&u| t.out_set(u).intersection(&ys).next().is_some()).collect();
    let q0: Vec<usize> = y_sorted.iter().copied().filter(|&u| t.in_set(u).intersection(&xs).next().is_some()).collect();
    if k <= 1 {
        let pick: Vec<usize> = p0.iter().chain(&q0).copied().take(1).collect();
        return Ok(BackwardJungle::Found(trivial(&pick, k, 4, JungleKind::EdgeDisjoint)));
    }
    let side = th.backward_side * k;
    if p0.len() >= side {
        let alpha = tangle.y.iter().map(|&w| t.outdeg(w)).min().unwrap_or(0);
        let p1: Vec<usize> = p0.iter().copied().filter(|&u| t.outdeg(u) + 4 * k >= alpha).collect();
        if p1.len() >= th.backward_delegate * k {
            return jungle_from_degree_tangle(t, &p1, 4 * k, th).map(BackwardJungle::Delegated);
        }
        let p: Vec<usize> = p0.iter().copied().filter(|u| !p1.contains(u)).take(5 * k).collect();
        if p.len() < 5 * k {
            return Err(contradiction(format!("only {} low-outdegree tails", p.len())));
        }
        let ps = set_of(n, &p);
        let z: Vec<usize> =
            p.iter().copied().filter(|&u| t.out_set(u).intersection(&ps).count() >= k).take(k).collect();
        if z.len() < k {
            return Err(contradiction("fewer than k tails with outdegree k inside P"));
        }
        let mut paths = BTreeMap::new();
        for &v in &z {
            for &w in &z {
                if v == w {
                    continue;
                }
                let firsts: Vec<usize> = t.out_set(v).intersection(&ps).take(k).collect();
                let mut starts = Vec::with_capacity(k);
                for &f in &firsts {
                    if f == w {
                        starts.push(vec![v, w]);
                    } else {
                        let h = t.out_set(f).intersection(&ys).next().expect("tails have a head in Y");
                        starts.push(vec![v, f, h]);
                    }
                }
                let family = finish_forward(t, &starts, w, k)?;
                paths.insert((v, w), family);
            }
        }
        return Ok(BackwardJungle::Found(ShortJungle { x: z, k, d: 4, kind: JungleKind::EdgeDisjoint, paths }));
    }
    if q0.len() >= side {
        let beta = tangle.x.iter().map(|&u| t.outdeg(u)).max().unwrap_or(0);
        let q1: Vec<usize> = q0.iter().copied().filter(|&u| t.outdeg(u) <= beta + 4 * k).collect();
        if q1.len() >= th.backward_delegate * k {
            return jungle_from_degree_tangle(t, &q1, 4 * k, th).map(BackwardJungle::Delegated);
        }
        let q: Vec<usize> = q0.iter().copied().filter(|u| !q1.contains(u)).take(5 * k).collect();
        if q.len() < 5 * k {
            return Err(contradiction(format!("only {} high-outdegree heads", q.len())));
        }
        let qs = set_of(n, &q);
        let z: Vec<usize> = q.iter().copied().filter(|&u| t.in_set(u).intersection(&qs).count() >= k).take(k).collect();
        if z.len() < k {
            return Err(contradiction("fewer than k heads with indegree k inside Q"));
        }
        let mut paths = BTreeMap::new();
        for &v in &z {
            for &w in &z {
                if v == w {
                    continue;
                }
                let lasts: Vec<usize> = t.in_set(w).intersection(&qs).take(k).collect();
                let mut ends = Vec::with_capacity(k);
                for &l in &lasts {
                    if l == v {
                        ends.push(vec![v, w]);
                    } else {
                        let h = t.in_set(l).intersection(&xs).next().expect("heads have a tail in X");
                        ends.push(vec![h, l, w]);
                    }
                }
                let family = finish_backward(t, &ends, v, k)?;
                paths.insert((v, w), family);
            }
        }
        return Ok(BackwardJungle::Found(ShortJungle { x: z, k, d: 4, kind: JungleKind::EdgeDisjoint, paths }));
    }
    Err(unmet(format!("neither {} tails nor {} heads of forward arcs reach {side}", p0.len(), q0.len())))
}

fn arcs_of(p: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.windows(2).map(|a| (a[0], a[1]))
}

/// Completes partial paths v→f→h with two fresh arcs h→u→w each.
fn finish_forward(
    t: &SemiCompleteDigraph,
    starts: &[Vec<usize>],
    w: usize,
    k: usize,
) -> Result<Vec<Vec<usize>>, ObstacleError> {
    let mut used: HashSet<(usize, usize)> = starts.iter().flat_map(|p| arcs_of(p)).collect();
    let mut family = Vec::with_capacity(k);
    for s in starts {
        if s.len() == 2 {
            family.push(s.clone());
            continue;
        }
        let h = s[2];
        let u = t
            .out_set(h)
            .intersection(t.in_set(w))
            .find(|&u| !used.contains(&(h, u)) && !used.contains(&(u, w)))
            .ok_or_else(|| contradiction(format!("no free completion from {h} to {w}")))?;
        used.insert((h, u));
        used.insert((u, w));
        family.push(shortcut(&[s[0], s[1], h, u, w]));
    }
    Ok(family)
}

/// Prepends two fresh arcs v→q→h to partial paths h→l→w.
fn finish_backward(
    t: &SemiCompleteDigraph,
    ends: &[Vec<usize>],
    v: usize,
    k: usize,
) -> Result<Vec<Vec<usize>>, ObstacleError> {
    let mut used: HashSet<(usize, usize)> = ends.iter().flat_map(|p| arcs_of(p)).collect();
    let mut family = Vec::with_capacity(k);
    for e in ends {
        if e[0] == v {
            family.push(e.clone());
            continue;
        }
        let h = e[0];
        let q = t
            .out_set(v)
            .intersection(t.in_set(h))
            .find(|&q| !used.contains(&(v, q)) && !used.contains(&(q, h)))
            .ok_or_else(|| contradiction(format!("no free prefix from {v} to {h}")))?;
        used.insert((v, q));
        used.insert((q, h));
        family.push(shortcut(&[v, q, h, e[1], e[2]]));
    }
    Ok(family)
}
