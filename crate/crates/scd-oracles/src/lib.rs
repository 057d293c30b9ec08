//! Brute-force ground truth at desk scale: subset dynamic programs for
//! cutwidth and pathwidth, backtracking for containment, and enumeration of
//! maximum matchings for the matching selector.

use std::collections::HashSet;

use scd_core::{
    ordering_width, verify_path_decomposition, ModelKind, ModelMap, PathDecomposition, Pattern, SemiCompleteDigraph,
    VertexOrdering,
};
use thiserror::Error;

pub const MAX_CUTWIDTH_N: usize = 20;
pub const MAX_PATHWIDTH_N: usize = 18;
pub const MAX_CONTAINS_N: usize = 8;
pub const MAX_CONTAINS_PATTERN: usize = 6;
pub const MAX_SELECTOR_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {found}, oracle budget is {limit}")]
    BudgetExceeded { what: &'static str, limit: usize, found: usize },
}

fn budget(what: &'static str, limit: usize, found: usize) -> Result<(), OracleError> {
    if found > limit {
        Err(OracleError::BudgetExceeded { what, limit, found })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<V, W> {
    pub value: V,
    pub witness: W,
    pub method: &'static str,
}

/// Out-neighbourhood masks.
fn out_masks(t: &SemiCompleteDigraph) -> Vec<u32> {
    (0..t.n()).map(|u| t.out_neighbours(u).fold(0u32, |m, v| m | 1 << v)).collect()
}

/// Minimum over orderings of the largest forward cut, by DP over prefix sets.
pub fn oracle_cutwidth(t: &SemiCompleteDigraph) -> Result<OracleResult<usize, VertexOrdering>, OracleError> {
    let n = t.n();
    budget("vertex count", MAX_CUTWIDTH_N, n)?;
    let out = out_masks(t);
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let size = 1usize << n;
    let mut cut = vec![0u32; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        // moving v into the prefix: gains its arcs leaving S, loses arcs from rest into v
        let gained = (out[v] & !(s as u32) & full).count_ones();
        let lost = (0..n).filter(|&u| rest >> u & 1 == 1 && out[u] >> v & 1 == 1).count() as u32;
        cut[s] = cut[rest] + gained - lost;
    }
    let mut f = vec![u32::MAX; size];
    let mut last = vec![usize::MAX; size];
    f[0] = 0;
    for s in 1..size {
        let mut best = u32::MAX;
        let mut arg = usize::MAX;
        for v in 0..n {
            if s >> v & 1 == 1 {
                let c = f[s & !(1 << v)];
                if c < best {
                    best = c;
                    arg = v;
                }
            }
        }
        f[s] = best.max(cut[s]);
        last[s] = arg;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full as usize;
    while s != 0 {
        order.push(last[s]);
        s &= !(1 << last[s]);
    }
    order.reverse();
    let ordering = VertexOrdering::new(n, order).expect("reconstructed permutation");
    let value = f[full as usize] as usize;
    debug_assert_eq!(ordering_width(t, &ordering), value);
    Ok(OracleResult { value, witness: ordering, method: "subset DP over prefix sets" })
}

/// Exhaustive over all n! orderings; used to cross-check the DP.
pub fn cutwidth_by_enumeration(t: &SemiCompleteDigraph) -> Result<usize, OracleError> {
    let n = t.n();
    budget("vertex count", 9, n)?;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut perm, 0, &mut |p| {
        let w = ordering_width(t, &VertexOrdering::new(n, p.to_vec()).expect("permutation"));
        best = best.min(w);
    });
    Ok(if n == 0 { 0 } else { best })
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

/// Vertices of A with an out-neighbour outside A.
fn boundary(out: &[u32], a: u32) -> u32 {
    let mut s = 0;
    for (u, &o) in out.iter().enumerate() {
        if a >> u & 1 == 1 && o & !a != 0 {
            s |= 1 << u;
        }
    }
    s
}

/// Minimum over orderings of max |S(A_{i−1}) ∪ {v_i}| − 1.
pub fn oracle_pathwidth(t: &SemiCompleteDigraph) -> Result<OracleResult<usize, PathDecomposition>, OracleError> {
    let n = t.n();
    budget("vertex count", MAX_PATHWIDTH_N, n)?;
    if n == 0 {
        return Ok(OracleResult { value: 0, witness: PathDecomposition::default(), method: "empty" });
    }
    let out = out_masks(t);
    let size = 1usize << n;
    let bsize: Vec<u8> = (0..size).map(|a| boundary(&out, a as u32).count_ones() as u8).collect();
    let mut g = vec![u8::MAX; size];
    let mut last = vec![u8::MAX; size];
    g[0] = 0;
    for a in 1..size {
        for v in 0..n {
            if a >> v & 1 == 0 {
                continue;
            }
            let prev = a & !(1 << v);
            // v is never in S(prev), so the bag has |S(prev)| + 1 vertices
            let c = g[prev].max(bsize[prev]);
            if c < g[a] {
                g[a] = c;
                last[a] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut a = size - 1;
    while a != 0 {
        let v = last[a] as usize;
        order.push(v);
        a &= !(1 << v);
    }
    order.reverse();
    let mut bags = Vec::with_capacity(n);
    let mut prefix = 0u32;
    for &v in &order {
        let s = boundary(&out, prefix) | 1 << v;
        bags.push((0..n).filter(|&u| s >> u & 1 == 1).collect());
        prefix |= 1 << v;
    }
    let witness = PathDecomposition::new(bags);
    let value = g[size - 1] as usize;
    let checked = verify_path_decomposition(t, &witness).expect("oracle decomposition verifies");
    debug_assert_eq!(checked, value);
    Ok(OracleResult { value, witness, method: "subset DP over one-vertex-step chains with minimal separators" })
}

/// Minimax search over all separation chains; n ≤ 6.
pub fn pathwidth_by_chain_search(t: &SemiCompleteDigraph) -> Result<usize, OracleError> {
    let n = t.n();
    budget("vertex count", 6, n)?;
    if n == 0 {
        return Ok(0);
    }
    let out = out_masks(t);
    let full = (1u32 << n) - 1;
    let mut seps: Vec<(u32, u32)> = Vec::new();
    for a in 0..=full {
        for b in 0..=full {
            if a | b != full {
                continue;
            }
            let a_only = a & !b;
            let b_only = b & !a;
            if (0..n).any(|u| a_only >> u & 1 == 1 && out[u] & b_only != 0) {
                continue;
            }
            seps.push((a, b));
        }
    }
    let start = seps.iter().position(|&s| s == (0, full)).expect("(∅,V)");
    let goal = seps.iter().position(|&s| s == (full, 0)).expect("(V,∅)");
    // Bellman-Ford style relaxation on the bottleneck value
    let mut best = vec![u32::MAX; seps.len()];
    best[start] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..seps.len() {
            if best[i] == u32::MAX {
                continue;
            }
            let (a, b) = seps[i];
            for (j, &(a2, b2)) in seps.iter().enumerate() {
                if i == j || a & !a2 != 0 || b2 & !b != 0 {
                    continue;
                }
                let w = (a2 & b).count_ones().max(1) - 1;
                let c = best[i].max(w);
                if c < best[j] {
                    best[j] = c;
                    changed = true;
                }
            }
        }
    }
    Ok(best[goal] as usize)
}

/// Searches injective vertex maps and internally disjoint paths.
pub fn oracle_contains(
    t: &SemiCompleteDigraph,
    h: &Pattern,
) -> Result<OracleResult<bool, Option<ModelMap>>, OracleError> {
    budget("host size", MAX_CONTAINS_N, t.n())?;
    budget("pattern size", MAX_CONTAINS_PATTERN, h.size())?;
    let mut images = Vec::with_capacity(h.vertex_count());
    let model = search_images(t, h, &mut images);
    if let Some(m) = &model {
        m.verify(t, h).expect("oracle model verifies");
    }
    Ok(OracleResult {
        value: model.is_some(),
        witness: model,
        method: "backtracking over vertex maps and disjoint paths",
    })
}

fn search_images(t: &SemiCompleteDigraph, h: &Pattern, images: &mut Vec<usize>) -> Option<ModelMap> {
    if images.len() == h.vertex_count() {
        let mut used: HashSet<usize> = images.iter().copied().collect();
        let mut paths = Vec::with_capacity(h.arc_count());
        if route(t, h, images, 0, &mut used, &mut paths) {
            return Some(ModelMap { kind: ModelKind::Expansion, vertices: images.clone(), paths });
        }
        return None;
    }
    for x in 0..t.n() {
        if images.contains(&x) {
            continue;
        }
        images.push(x);
        if let Some(m) = search_images(t, h, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

fn route(
    t: &SemiCompleteDigraph,
    h: &Pattern,
    images: &[usize],
    idx: usize,
    used: &mut HashSet<usize>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    if idx == h.arc_count() {
        return true;
    }
    let (hu, hv) = h.arcs()[idx];
    let (src, dst) = (images[hu], images[hv]);
    let mut path = vec![src];
    extend_path(t, dst, &mut path, used, &mut |path, used| {
        paths.push(path.to_vec());
        if route(t, h, images, idx + 1, used, paths) {
            return true;
        }
        paths.pop();
        false
    })
}

/// Depth-first over simple paths to `dst` through unused vertices; stops when `done` accepts.
fn extend_path(
    t: &SemiCompleteDigraph,
    dst: usize,
    path: &mut Vec<usize>,
    used: &mut HashSet<usize>,
    done: &mut dyn FnMut(&[usize], &mut HashSet<usize>) -> bool,
) -> bool {
    let cur = *path.last().expect("path starts at the source");
    if t.arc(cur, dst) {
        path.push(dst);
        let ok = done(path, used);
        path.pop();
        if ok {
            return true;
        }
    }
    let next: Vec<usize> = t.out_neighbours(cur).filter(|w| *w != dst && !used.contains(w)).collect();
    for w in next {
        used.insert(w);
        path.push(w);
        let ok = extend_path(t, dst, path, used, done);
        path.pop();
        used.remove(&w);
        if ok {
            return true;
        }
    }
    false
}

/// A bipartite graph given explicitly by labels and (left, right) edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Vertices matched in every maximum matching, by enumerating all matchings.
pub fn oracle_matching_selector(g: &BipartiteInstance) -> Result<OracleResult<Vec<usize>, usize>, OracleError> {
    budget("vertex count", MAX_SELECTOR_VERTICES, g.left.len() + g.right.len())?;
    let mut best = 0usize;
    let mut common: Option<HashSet<usize>> = None;
    let mut current: Vec<(usize, usize)> = Vec::new();
    let mut taken: HashSet<usize> = HashSet::new();
    enumerate_matchings(g, 0, &mut current, &mut taken, &mut |m| {
        let covered: HashSet<usize> = m.iter().flat_map(|&(x, y)| [x, y]).collect();
        if m.len() > best {
            best = m.len();
            common = Some(covered);
        } else if m.len() == best {
            common = Some(match common.take() {
                Some(c) => c.intersection(&covered).copied().collect(),
                None => covered,
            });
        }
    });
    let mut chosen: Vec<usize> = common.unwrap_or_default().into_iter().collect();
    chosen.sort_unstable();
    Ok(OracleResult { value: chosen, witness: best, method: "enumeration of all matchings" })
}

type Matching = [(usize, usize)];

fn enumerate_matchings(
    g: &BipartiteInstance,
    i: usize,
    current: &mut Vec<(usize, usize)>,
    taken: &mut HashSet<usize>,
    visit: &mut dyn FnMut(&Matching),
) {
    if i == g.left.len() {
        visit(current);
        return;
    }
    let x = g.left[i];
    enumerate_matchings(g, i + 1, current, taken, visit);
    for &(a, y) in &g.edges {
        if a != x || taken.contains(&y) {
            continue;
        }
        taken.insert(y);
        current.push((x, y));
        enumerate_matchings(g, i + 1, current, taken, visit);
        current.pop();
        taken.remove(&y);
    }
}
