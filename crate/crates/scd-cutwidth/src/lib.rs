//! Cutwidth of semi-complete digraphs.
//!
//! [`approx_cutwidth`] reads the answer off the outdegree ordering.
//! [`exact_cutwidth`] searches the partitions that can occur as prefixes of a
//! width-k ordering: each is a prefix of the outdegree ordering plus a subset
//! of a short window after it, so a state is a boundary index and a bit mask.

use std::collections::{HashMap, VecDeque};

use scd_core::{outdegree_ordering, prefix_cuts, FixedBitSet, SemiCompleteDigraph, VertexOrdering};
use scd_obstacles::{BackwardTangle, DegreeTangle, Thresholds};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutwidthOutcome {
    Ordering {
        ordering: VertexOrdering,
        width: usize,
    },
    /// Approximation failed: cutwidth exceeds the requested k.
    Backward(BackwardTangle),
    /// Exact search refused early: cutwidth exceeds the requested k.
    Degree(DegreeTangle),
    /// Exact search exhausted every state without reaching the full set.
    Exhausted,
}

impl CutwidthOutcome {
    pub fn ordering(&self) -> Option<&VertexOrdering> {
        match self {
            CutwidthOutcome::Ordering { ordering, .. } => Some(ordering),
            _ => None,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, CutwidthOutcome::Ordering { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub states: usize,
    pub transitions: usize,
    pub window: usize,
}

impl SearchStats {
    /// 2^window · n + 1: every boundary index carries at most 2^window masks,
    /// plus the final full state.
    pub fn state_bound(&self, n: usize) -> u128 {
        if self.window >= 100 {
            return u128::MAX;
        }
        (1u128 << self.window).saturating_mul(n as u128).saturating_add(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCutwidth {
    pub outcome: CutwidthOutcome,
    pub stats: SearchStats,
}

pub fn approx_cutwidth(t: &SemiCompleteDigraph, k: usize, th: &Thresholds) -> CutwidthOutcome {
    let m = th.cutwidth_bound(k);
    let sigma = outdegree_ordering(t);
    let cuts = prefix_cuts(t, &sigma);
    if let Some(a) = cuts.iter().position(|&c| c > m) {
        let s = sigma.as_slice();
        return CutwidthOutcome::Backward(BackwardTangle { x: s[..a].to_vec(), y: s[a..].to_vec(), k: m + 1 });
    }
    let width = cuts.into_iter().max().unwrap_or(0);
    CutwidthOutcome::Ordering { ordering: sigma, width }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    alpha: usize,
    mask: FixedBitSet,
}

struct Node {
    key: Key,
    parent: usize,
    moved: usize,
    cut: usize,
}

pub fn exact_cutwidth(t: &SemiCompleteDigraph, k: usize, th: &Thresholds) -> ExactCutwidth {
    let n = t.n();
    let w = th.cutwidth_window * k;
    let mut stats = SearchStats { window: w, ..SearchStats::default() };
    let sigma = outdegree_ordering(t);
    let s = sigma.as_slice();
    let d: Vec<usize> = s.iter().map(|&v| t.outdeg(v)).collect();

    for i in 0..n.saturating_sub(w + 1) {
        if d[i + w + 1] <= d[i] + 2 * k {
            let tangle = DegreeTangle { x: s[i..=i + w + 1].to_vec(), k: w + 2, ell: 2 * k };
            return ExactCutwidth { outcome: CutwidthOutcome::Degree(tangle), stats };
        }
    }

    // positions in sigma stand in for vertices from here on
    let p = t.induced(s);
    let in_x = |key: &Key, q: usize| {
        q < key.alpha || (q > key.alpha && q <= key.alpha + w && key.mask.contains(q - key.alpha - 1))
    };

    let start = Key { alpha: 0, mask: FixedBitSet::with_capacity(w) };
    let mut nodes = vec![Node { key: start.clone(), parent: usize::MAX, moved: usize::MAX, cut: 0 }];
    let mut seen: HashMap<Key, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut goal = if n == 0 { Some(0) } else { None };

    while let Some(idx) = queue.pop_front() {
        if goal.is_some() {
            break;
        }
        let key = nodes[idx].key.clone();
        let cut = nodes[idx].cut;
        let mut x = FixedBitSet::with_capacity(n);
        x.insert_range(..key.alpha);
        for q in key.mask.ones() {
            if key.alpha + 1 + q < n {
                x.insert(key.alpha + 1 + q);
            }
        }
        let top = (key.alpha + w).min(n - 1);
        for u in key.alpha..=top {
            if in_x(&key, u) {
                continue;
            }
            stats.transitions += 1;
            let into_u = p.in_set(u).intersection_count(&x);
            let from_u_to_x = p.out_set(u).intersection_count(&x);
            let new_cut = cut + (p.outdeg(u) - from_u_to_x) - into_u;
            if new_cut > k {
                continue;
            }
            x.insert(u);
            let mut alpha = key.alpha;
            while alpha < n && x.contains(alpha) {
                alpha += 1;
            }
            let highest = x.maximum().expect("u was just inserted");
            let passes = alpha == n || d[highest] <= d[alpha] + k + 1;
            if passes {
                let mut mask = FixedBitSet::with_capacity(w);
                for q in alpha + 1..=(alpha + w).min(n.saturating_sub(1)) {
                    if x.contains(q) {
                        mask.insert(q - alpha - 1);
                    }
                }
                let next = Key { alpha, mask };
                if !seen.contains_key(&next) {
                    let id = nodes.len();
                    seen.insert(next.clone(), id);
                    nodes.push(Node { key: next, parent: idx, moved: u, cut: new_cut });
                    if alpha == n {
                        goal = Some(id);
                        break;
                    }
                    queue.push_back(id);
                }
            }
            x.set(u, false);
        }
    }
    stats.states = nodes.len();

    let Some(mut at) = goal else {
        return ExactCutwidth { outcome: CutwidthOutcome::Exhausted, stats };
    };
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    while nodes[at].parent != usize::MAX {
        order.push(s[nodes[at].moved]);
        width = width.max(nodes[at].cut);
        at = nodes[at].parent;
    }
    order.reverse();
    let ordering = VertexOrdering::new(n, order).expect("search moves every vertex exactly once");
    ExactCutwidth { outcome: CutwidthOutcome::Ordering { ordering, width }, stats }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalCutwidth {
    pub value: usize,
    pub ordering: VertexOrdering,
    /// Search statistics for each k tried, starting from 0.
    pub runs: Vec<SearchStats>,
}

/// Smallest k accepted by [`exact_cutwidth`]. The outdegree ordering's width
/// caps the loop.
pub fn cutwidth(t: &SemiCompleteDigraph, th: &Thresholds) -> OptimalCutwidth {
    let sigma = outdegree_ordering(t);
    let cap = prefix_cuts(t, &sigma).into_iter().max().unwrap_or(0);
    let mut runs = Vec::new();
    for k in 0..cap {
        let run = exact_cutwidth(t, k, th);
        runs.push(run.stats);
        if let CutwidthOutcome::Ordering { ordering, width } = run.outcome {
            return OptimalCutwidth { value: width, ordering, runs };
        }
    }
    OptimalCutwidth { value: cap, ordering: sigma, runs }
}
