use std::collections::{HashMap, VecDeque};

use scd_core::{
    chain_to_decomposition, outdegree_ordering, verify_path_decomposition, FixedBitSet, PathDecomposition,
    SemiCompleteDigraph, Separation, SeparationChain,
};
use scd_obstacles::{DegreeTangle, MatchingTangle};
use scd_selectors::DynamicBipartiteGraph;

use crate::PathwidthOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ThinStats {
    /// Characterizations that passed the separation check, summed over β.
    pub candidates: usize,
    /// Distinct separations among them.
    pub nodes: usize,
    pub arcs_tested: usize,
    /// (n+1) · 3^(5k+1) · (Σ_{j≤k} C(m²+m, j))², saturating.
    pub characterization_bound: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPathwidth {
    pub outcome: PathwidthOutcome,
    pub stats: ThinStats,
}

fn binomial_prefix(n: u128, k: usize) -> u128 {
    let mut total = 0u128;
    let mut term = 1u128;
    for j in 0..=k as u128 {
        if j > n {
            break;
        }
        total = total.saturating_add(term);
        term = term.saturating_mul(n - j) / (j + 1);
    }
    total
}

fn characterization_bound(n: usize, k: usize) -> u128 {
    let m = (6 * k + 1) as u128;
    let subsets = binomial_prefix(m * m + m, k);
    3u128
        .checked_pow(5 * k as u32 + 1)
        .unwrap_or(u128::MAX)
        .saturating_mul(subsets)
        .saturating_mul(subsets)
        .saturating_mul(n as u128 + 1)
}

/// H_i: left σ[..i], right σ[i..], edges the forward arcs. Advancing moves σ[i] across.
struct Sweep<'a> {
    t: &'a SemiCompleteDigraph,
    sigma: &'a [usize],
    at: usize,
    h: DynamicBipartiteGraph,
}

impl<'a> Sweep<'a> {
    fn new(t: &'a SemiCompleteDigraph, sigma: &'a [usize], m: usize) -> Self {
        let mut h = DynamicBipartiteGraph::new(m);
        for &v in sigma {
            h.add_right(v, &[]).expect("fresh vertex");
        }
        Sweep { t, sigma, at: 0, h }
    }

    fn advance_to(&mut self, i: usize) {
        while self.at < i {
            let v = self.sigma[self.at];
            self.h.remove_right(v).expect("vertex is on the right");
            let later = &self.sigma[self.at + 1..];
            let nbrs: Vec<usize> = later.iter().copied().filter(|&y| self.t.arc(v, y)).collect();
            self.h.add_left(v, &nbrs).expect("fresh vertex");
            self.at += 1;
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Choice {
    /// Buss-selected vertex of X_α: left side or separator.
    LeftOrSep,
    Any,
    /// Reverse-Buss-selected vertex of Y_β: right side or separator.
    RightOrSep,
}

struct Enumerator<'a> {
    t: &'a SemiCompleteDigraph,
    k: usize,
    free: Vec<(usize, Choice)>,
    left: FixedBitSet,
    right: FixedBitSet,
    sep: FixedBitSet,
    found: Vec<(FixedBitSet, FixedBitSet)>,
}

impl Enumerator<'_> {
    fn run(&mut self, idx: usize) {
        let Some(&(u, choice)) = self.free.get(idx) else {
            let mut a = self.left.clone();
            a.union_with(&self.sep);
            let mut b = self.right.clone();
            b.union_with(&self.sep);
            self.found.push((a, b));
            return;
        };
        if choice != Choice::RightOrSep && self.t.out_set(u).is_disjoint(&self.right) {
            self.left.insert(u);
            self.run(idx + 1);
            self.left.set(u, false);
        }
        if self.sep.count_ones(..) < self.k {
            self.sep.insert(u);
            self.run(idx + 1);
            self.sep.set(u, false);
        }
        if choice != Choice::LeftOrSep && self.t.in_set(u).is_disjoint(&self.left) {
            self.right.insert(u);
            self.run(idx + 1);
            self.right.set(u, false);
        }
    }
}

struct Node {
    a: FixedBitSet,
    b: FixedBitSet,
    betas: Vec<usize>,
}

/// Decomposition of width at most k, or a reason why none exists.
pub fn exact_pathwidth(t: &SemiCompleteDigraph, k: usize) -> ExactPathwidth {
    let n = t.n();
    let mut stats = ThinStats { characterization_bound: characterization_bound(n, k), ..ThinStats::default() };
    let done = |outcome, stats| ExactPathwidth { outcome, stats };
    let sigma = outdegree_ordering(t);
    let s = sigma.as_slice();
    let d: Vec<usize> = s.iter().map(|&v| t.outdeg(v)).collect();
    let span = 5 * k + 1;
    let m = 6 * k + 1;


    for i in 0..n.saturating_sub(span) {
        if d[i + span] <= d[i] + k {
            let tangle = DegreeTangle { x: s[i..=i + span].to_vec(), k: span + 1, ell: k };
            return done(PathwidthOutcome::Degree(tangle), stats);
        }
    }
    if n == 0 {
        let outcome = PathwidthOutcome::Decomposition { decomposition: PathDecomposition::default(), width: 0 };
        return done(outcome, stats);
    }

    let mut pos = vec![0; n];
    for (i, &v) in s.iter().enumerate() {
        pos[v] = i;
    }
    let mut h_alpha = Sweep::new(t, s, m);
    let mut h_beta = Sweep::new(t, s, m);
    let mut nodes: Vec<Node> = Vec::new();
    let mut index: HashMap<(FixedBitSet, FixedBitSet), usize> = HashMap::new();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];

    for beta in 0..=n {
        let alpha = beta.saturating_sub(span);
        h_alpha.advance_to(alpha);
        h_beta.advance_to(beta);

        if h_alpha.h.buss_count() > m * m + m {
            let pairs = h_alpha.h.extract_buss_matching().expect("selector exceeds m² + m");
            let kept: Vec<(usize, usize)> = pairs.into_iter().filter(|&(_, y)| pos[y] >= beta).take(k + 1).collect();
            assert_eq!(kept.len(), k + 1, "at most 5k+1 matching edges end inside the window");
            return done(matching_tangle(&kept, k), stats);
        }
        if h_beta.h.buss_reversed_count() > m * m + m {
            let pairs = h_beta.h.extract_buss_reversed_matching().expect("selector exceeds m² + m");
            let kept: Vec<(usize, usize)> = pairs.into_iter().filter(|&(x, _)| pos[x] < alpha).take(k + 1).collect();
            assert_eq!(kept.len(), k + 1, "at most 5k+1 matching edges start inside the window");
            return done(matching_tangle(&kept, k), stats);
        }

        let buss = h_alpha.h.buss_selector().chosen;
        let buss_rev = h_beta.h.buss_reversed().chosen;
        let mut left = FixedBitSet::with_capacity(n);
        left.extend(s[..alpha].iter().copied());
        let mut right = FixedBitSet::with_capacity(n);
        right.extend(s[beta..].iter().copied());
        let mut free: Vec<(usize, Choice)> = Vec::new();
        for &v in &buss {
            left.set(v, false);
            free.push((v, Choice::LeftOrSep));
        }
        free.extend(s[alpha..beta].iter().map(|&v| (v, Choice::Any)));
        for &v in &buss_rev {
            right.set(v, false);
            free.push((v, Choice::RightOrSep));
        }
        free.sort_by_key(|&(v, _)| pos[v]);
        if t.arcs_between(&left, &right) > 0 {
            continue;
        }
        let mut en = Enumerator { t, k, free, left, right, sep: FixedBitSet::with_capacity(n), found: Vec::new() };
        en.run(0);
        stats.candidates += en.found.len();
        for key in en.found {
            let id = *index.entry(key.clone()).or_insert_with(|| {
                nodes.push(Node { a: key.0, b: key.1, betas: Vec::new() });
                nodes.len() - 1
            });
            nodes[id].betas.push(beta);
            buckets[beta].push(id);
        }
    }
    stats.nodes = nodes.len();

    let start = index.get(&(t.empty_set(), t.full_set())).copied();
    let goal = index.get(&(t.full_set(), t.empty_set())).copied();
    let (Some(start), Some(goal)) = (start, goal) else {
        return done(PathwidthOutcome::Exhausted, stats);
    };
    let reach = 6 * k + 2;
    let mut parent = vec![usize::MAX; nodes.len()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == goal {
            break;
        }
        for &beta in &nodes[u].betas {
            for bucket in &buckets[beta.saturating_sub(reach)..=(beta + reach).min(n)] {
                for &v in bucket {
                    if parent[v] != usize::MAX {
                        continue;
                    }
                    stats.arcs_tested += 1;
                    let (x, y) = (&nodes[u], &nodes[v]);
                    if x.a.is_subset(&y.a) && y.b.is_subset(&x.b) && y.a.intersection_count(&x.b) <= k + 1 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    if parent[goal] == usize::MAX {
        return done(PathwidthOutcome::Exhausted, stats);
    }

    let mut path = vec![goal];
    while *path.last().expect("nonempty") != start {
        path.push(parent[*path.last().expect("nonempty")]);
    }
    path.reverse();
    if path.len() == 1 {
        path.push(goal);
    }
    let seps: Vec<Separation> = path
        .iter()
        .map(|&i| Separation::new(t, nodes[i].a.clone(), nodes[i].b.clone()).expect("candidates are separations"))
        .collect();
    let chain = SeparationChain::new(t, seps).expect("arcs of D are nested");
    let decomposition = chain_to_decomposition(&chain);
    let width = verify_path_decomposition(t, &decomposition).expect("chain yields a decomposition");
    assert!(width <= k, "bags of a path in D have at most k+1 vertices");
    done(PathwidthOutcome::Decomposition { decomposition, width }, stats)
}

fn matching_tangle(pairs: &[(usize, usize)], k: usize) -> PathwidthOutcome {
    PathwidthOutcome::Matching(MatchingTangle {
        x: pairs.iter().map(|p| p.0).collect(),
        y: pairs.iter().map(|p| p.1).collect(),
        k: k + 1,
        ell: k,
    })
}
