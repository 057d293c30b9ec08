use std::collections::{BTreeMap, HashMap};

use petgraph::algo::ford_fulkerson;
use petgraph::graph::{DiGraph, NodeIndex};
use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scd_core::{
    directed_triangle, generate, outdegree_ordering, prefix_cuts, transitive, Model, Pattern, SemiCompleteDigraph,
};
use scd_obstacles::*;

fn qr(n: usize) -> SemiCompleteDigraph {
    generate(Model::QuadraticResidue, n, 0).unwrap()
}

/// u → v iff (v − u) mod n ∈ s; regular with outdegree |s|.
fn circulant(n: usize, s: &[usize]) -> SemiCompleteDigraph {
    SemiCompleteDigraph::from_fn(n, |u, v| s.contains(&((v + n - u) % n))).unwrap()
}

/// A random connection set covering every nonzero residue up to sign, with some digons.
fn random_circulant(n: usize, seed: u64, p_digon: f64) -> SemiCompleteDigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Vec::new();
    for d in 1..=n / 2 {
        let e = n - d;
        if d == e || rng.random_bool(p_digon) {
            s.push(d);
            if d != e {
                s.push(e);
            }
        } else if rng.random_bool(0.5) {
            s.push(d);
        } else {
            s.push(e);
        }
    }
    circulant(n, &s)
}

/// Transitive host (higher index beats lower) plus the digon arcs in `extra`.
fn transitive_with(n: usize, extra: &[(usize, usize)]) -> SemiCompleteDigraph {
    SemiCompleteDigraph::from_fn(n, |u, v| u != v && (u > v || extra.contains(&(u, v)))).unwrap()
}

fn max_flow(family: &[Vec<usize>], v: usize, w: usize, kind: JungleKind) -> u32 {
    let mut g: DiGraph<(), u32> = DiGraph::new();
    let mut ins: HashMap<usize, NodeIndex> = HashMap::new();
    let mut outs: HashMap<usize, NodeIndex> = HashMap::new();
    let vertices: Vec<usize> = family.iter().flatten().copied().collect();
    for &x in &vertices {
        if ins.contains_key(&x) {
            continue;
        }
        let a = g.add_node(());
        let split = kind == JungleKind::VertexDisjoint && x != v && x != w;
        let b = if split { g.add_node(()) } else { a };
        if split {
            g.add_edge(a, b, 1);
        }
        ins.insert(x, a);
        outs.insert(x, b);
    }
    let mut seen = std::collections::HashSet::new();
    for p in family {
        for e in p.windows(2) {
            if seen.insert((e[0], e[1])) {
                g.add_edge(outs[&e[0]], ins[&e[1]], 1);
            }
        }
    }
    if family.is_empty() {
        return 0;
    }
    ford_fulkerson(&g, outs[&v], ins[&w]).0
}

/// Verifies the jungle, then checks 5 random pairs with an independent flow computation.
fn check_jungle(t: &SemiCompleteDigraph, j: &ShortJungle, seed: u64) {
    j.verify(t).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if j.x.len() < 2 {
        return;
    }
    for _ in 0..5 {
        let pair: Vec<usize> = j.x.choose_multiple(&mut rng, 2).copied().collect();
        let (v, w) = (pair[0], pair[1]);
        assert!(max_flow(j.paths(v, w), v, w, j.kind) >= j.k as u32, "pair ({v},{w})");
    }
}

#[test]
fn verify_examples() {
    let q = qr(7);
    let all = DegreeTangle { x: (0..7).collect(), k: 7, ell: 0 };
    assert_eq!(all.verify(&q), Ok(()));

    let tt = transitive(3);
    let bad = DegreeTangle { x: vec![0, 2], k: 2, ell: 1 };
    assert!(matches!(bad.verify(&tt), Err(Violation::DegreeSpread { .. })));

    let single = ShortJungle { x: vec![1], k: 1, d: 3, kind: JungleKind::VertexDisjoint, paths: BTreeMap::new() };
    assert_eq!(single.verify(&tt), Ok(()));
}

#[test]
fn verify_rejects_broken_certificates() {
    let tt = transitive(6);
    assert_eq!(DegreeTangle { x: vec![1, 1], k: 2, ell: 9 }.verify(&tt), Err(Violation::Repeated(1)));
    assert_eq!(DegreeTangle { x: vec![9], k: 1, ell: 0 }.verify(&tt), Err(Violation::BadVertex(9)));
    assert!(matches!(DegreeTangle { x: vec![1], k: 2, ell: 0 }.verify(&tt), Err(Violation::TooSmall { .. })));

    // transitive arcs go from high to low, so (0,5) is missing
    let m = MatchingTangle { x: vec![0], y: vec![5], k: 1, ell: 0 };
    assert_eq!(m.verify(&tt), Err(Violation::MissingMatchingArc(0, 5)));
    let t2 = transitive_with(6, &[(0, 5)]);
    assert_eq!(m.verify(&t2), Ok(()));
    let gap = MatchingTangle { x: vec![0], y: vec![5], k: 1, ell: 4 };
    assert!(matches!(gap.verify(&t2), Err(Violation::DegreeGap { .. })));
    let shared = MatchingTangle { x: vec![0], y: vec![0], k: 1, ell: 0 };
    assert_eq!(shared.verify(&t2), Err(Violation::NotDisjoint(0)));

    let b = BackwardTangle { x: vec![0, 1, 2], y: vec![3, 4], k: 1 };
    assert_eq!(b.verify(&tt), Err(Violation::NotPartition(5)));
    let b = BackwardTangle { x: vec![0, 1, 2], y: vec![3, 4, 5], k: 1 };
    assert!(matches!(b.verify(&tt), Err(Violation::TooFewArcs { have: 0, need: 1 })));
    let b = BackwardTangle { x: vec![3, 4, 5], y: vec![0, 1, 2], k: 1 };
    assert!(matches!(b.verify(&tt), Err(Violation::BackwardDegree { .. })));

    let tri = directed_triangle();
    let mut paths = BTreeMap::new();
    paths.insert((0, 1), vec![vec![0, 1]]);
    paths.insert((1, 0), vec![vec![1, 2, 0]]);
    let j = ShortJungle { x: vec![0, 1], k: 1, d: 2, kind: JungleKind::VertexDisjoint, paths: paths.clone() };
    assert_eq!(j.verify(&tri), Ok(()));
    let short = ShortJungle { d: 1, ..j.clone() };
    assert!(matches!(short.verify(&tri), Err(Violation::BadPath { .. })));
    paths.insert((0, 1), vec![vec![0, 1], vec![0, 1]]);
    let twice = ShortJungle { x: vec![0, 1], k: 2, d: 2, kind: JungleKind::VertexDisjoint, paths };
    assert!(matches!(twice.verify(&tri), Err(Violation::MissingPaths { .. } | Violation::PathsNotDisjoint { .. })));
}

#[test]
fn bound_examples() {
    let d = |k, ell| DegreeTangle { x: vec![], k, ell };
    assert_eq!(pathwidth_bound_from_degree_tangle(&d(7, 0)), Some(1));
    assert_eq!(pathwidth_bound_from_degree_tangle(&d(2, 0)), Some(0));
    assert_eq!(pathwidth_bound_from_degree_tangle(&d(12, 1)), Some(2));
    assert_eq!(pathwidth_bound_from_degree_tangle(&d(1, 0)), None);
    assert_eq!(pathwidth_bound_from_degree_tangle(&d(6, 1)), None);

    let m = MatchingTangle { x: vec![], y: vec![], k: 2, ell: 1 };
    assert_eq!(pathwidth_bound_from_matching_tangle(&m), Some(1));

    let b = |k| BackwardTangle { x: vec![], y: vec![], k };
    assert_eq!(cutwidth_bound_from_backward_tangle(&b(1)), None);
    assert_eq!(cutwidth_bound_from_backward_tangle(&b(2)), Some(0));
    assert_eq!(cutwidth_bound_from_backward_tangle(&b(123)), Some(0));
    assert_eq!(cutwidth_bound_from_backward_tangle(&b(124)), Some(1));
    assert_eq!(cutwidth_m(1), 123);
}

#[test]
fn degree_jungle_small_k() {
    let th = Thresholds::default();
    let q = qr(31);
    let x: Vec<usize> = (0..26).collect();
    let j = jungle_from_degree_tangle(&q, &x, 1, &th).unwrap();
    assert_eq!(j.x.len(), 1);
    check_jungle(&q, &j, 1);

    let x: Vec<usize> = (0..25).collect();
    assert!(matches!(jungle_from_degree_tangle(&q, &x, 1, &th), Err(ObstacleError::PreconditionUnmet(_))));
    let j = jungle_from_degree_tangle(&q, &[], 0, &th).unwrap();
    assert!(j.x.is_empty());
}

#[test]
fn degree_jungle_regular_hosts() {
    let th = Thresholds::default();
    let q = qr(59);
    let x: Vec<usize> = (0..52).collect();
    let j = jungle_from_degree_tangle(&q, &x, 2, &th).unwrap();
    assert_eq!(j.x, x);
    check_jungle(&q, &j, 2);

    for seed in 0..6 {
        let t = random_circulant(60 + seed as usize, seed, 0.3);
        let x: Vec<usize> = (0..t.n()).collect();
        let j = jungle_from_degree_tangle(&t, &x, 2, &th).unwrap();
        check_jungle(&t, &j, seed);
    }
    let t = random_circulant(80, 9, 0.2);
    let x: Vec<usize> = (0..80).step_by(1).take(78).collect();
    let j = jungle_from_degree_tangle(&t, &x, 3, &th).unwrap();
    check_jungle(&t, &j, 3);
}

/// v = 0 and w = 1 beat a symmetric clique A that beats v back; the pair (0,1)
/// has no length-2 paths and no A-to-B matching, so the inner jungle is returned.
#[test]
fn degree_jungle_inner_case() {
    let th = Thresholds::default();
    for k in [2usize, 3] {
        let n = 26 * k;
        let t = SemiCompleteDigraph::from_fn(n, |u, v| match (u, v) {
            _ if u == v => false,
            (0, 1) => true,
            (1, 0) => false,
            (0 | 1, _) => true,
            (_, 0) => true,
            (_, 1) => false,
            _ => u != v,
        })
        .unwrap();
        let x: Vec<usize> = (0..n).collect();
        let j = jungle_from_degree_tangle(&t, &x, k, &th).unwrap();
        assert_eq!(j.x.len(), k);
        assert!(j.x.iter().all(|&z| z >= 2));
        check_jungle(&t, &j, k as u64);
    }
}

fn matching_instance(n: usize, size: usize, y0: usize, noise: u64) -> (SemiCompleteDigraph, MatchingTangle) {
    let pairs: Vec<(usize, usize)> = (0..size).map(|i| (i, y0 + i)).collect();
    let mut extra = pairs.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(noise);
    for _ in 0..noise as usize * 3 {
        let a = rng.random_range(size..y0);
        let b = rng.random_range(a + 1..n);
        extra.push((a, b));
    }
    let t = transitive_with(n, &extra);
    let gap = t.outdeg(y0) - t.outdeg(size - 1) - 1;
    let tangle = MatchingTangle {
        x: pairs.iter().map(|p| p.0).collect(),
        y: pairs.iter().map(|p| p.1).collect(),
        k: size,
        ell: gap,
    };
    tangle.verify(&t).unwrap();
    (t, tangle)
}

#[test]
fn matching_jungle() {
    let th = Thresholds::default();
    let (t, tangle) = matching_instance(40, 5, 35, 0);
    let j = jungle_from_matching_tangle(&t, &MatchingTangle { ell: 3, ..tangle.clone() }, 1, &th).unwrap();
    assert_eq!(j.x.len(), 1);
    check_jungle(&t, &j, 0);

    for noise in 0..4 {
        let (t, tangle) = matching_instance(60, 10, 50, noise);
        let j = jungle_from_matching_tangle(&t, &tangle, 2, &th).unwrap();
        assert!(j.x.iter().all(|z| tangle.y.contains(z)));
        check_jungle(&t, &j, noise);
    }

    let (t, tangle) = matching_instance(60, 10, 50, 0);
    let weak = MatchingTangle { ell: 4, ..tangle };
    assert!(matches!(jungle_from_matching_tangle(&t, &weak, 2, &th), Err(ObstacleError::PreconditionUnmet(_))));
}

#[test]
fn matching_jungle_from_noisy_generator() {
    let th = Thresholds::default();
    let k = 2;
    let mut found = 0;
    for seed in 0..40 {
        let t = generate(Model::TransitiveNoise(0.08), 70, seed).unwrap();
        let order = outdegree_ordering(&t);
        let low = &order.as_slice()[..25];
        let high = &order.as_slice()[45..];
        let mut g = scd_selectors::DynamicBipartiteGraph::new(0);
        for &y in high {
            g.add_right(y, &[]).unwrap();
        }
        for &x in low {
            let nb: Vec<usize> = high.iter().copied().filter(|&y| t.arc(x, y)).collect();
            g.add_left(x, &nb).unwrap();
        }
        let m = g.matching();
        if m.len() < 5 * k {
            continue;
        }
        let m = &m[..5 * k];
        let x: Vec<usize> = m.iter().map(|p| p.0).collect();
        let y: Vec<usize> = m.iter().map(|p| p.1).collect();
        let hi_x = x.iter().map(|&v| t.outdeg(v)).max().unwrap();
        let lo_y = y.iter().map(|&v| t.outdeg(v)).min().unwrap();
        if lo_y <= hi_x + 3 * k {
            continue;
        }
        let tangle = MatchingTangle { x, y, k: 5 * k, ell: lo_y - hi_x - 1 };
        tangle.verify(&t).unwrap();
        let j = jungle_from_matching_tangle(&t, &tangle, k, &th).unwrap();
        check_jungle(&t, &j, seed);
        found += 1;
    }
    assert!(found > 0);
}

fn small_backward_thresholds() -> Thresholds {
    Thresholds { backward_arcs: 2, backward_side: 15, backward_delegate: 104, ..Thresholds::default() }
}

#[test]
fn backward_jungle_small_k() {
    let tri = directed_triangle();
    let th = Thresholds { backward_arcs: 2, ..Thresholds::default() };
    // X = {0}, Y = {1, 2}: the only forward arc is 0 → 1, so use a host with two
    let t = transitive_with(4, &[(0, 2), (0, 3)]);
    let tangle = BackwardTangle { x: vec![0, 1], y: vec![2, 3], k: 2 };
    tangle.verify(&t).unwrap();
    let out = immersion_jungle_from_backward_tangle(&t, &tangle, 1, &th).unwrap();
    check_jungle(&t, out.jungle(), 0);
    assert_eq!(out.jungle().x.len(), 1);

    let one = BackwardTangle { x: vec![0], y: vec![1, 2], k: 1 };
    one.verify(&tri).unwrap();
    assert!(matches!(
        immersion_jungle_from_backward_tangle(&tri, &one, 1, &th),
        Err(ObstacleError::PreconditionUnmet(_))
    ));
}

#[test]
fn backward_jungle_tail_side() {
    let th = small_backward_thresholds();
    // 30 low tails each with one digon arc into the top half
    let extra: Vec<(usize, usize)> = (0..30).map(|x| (x, 79 - x)).collect();
    let t = transitive_with(80, &extra);
    let tangle = BackwardTangle { x: (0..40).collect(), y: (40..80).collect(), k: 30 };
    tangle.verify(&t).unwrap();
    let out = immersion_jungle_from_backward_tangle(&t, &tangle, 2, &th).unwrap();
    assert!(matches!(out, BackwardJungle::Found(_)));
    assert_eq!(out.jungle().kind, JungleKind::EdgeDisjoint);
    check_jungle(&t, out.jungle(), 7);
}

#[test]
fn backward_jungle_head_side() {
    let th = small_backward_thresholds();
    let mut extra = Vec::new();
    for x in 0..2 {
        for y in 50..80 {
            extra.push((x, y));
        }
    }
    let t = transitive_with(80, &extra);
    let tangle = BackwardTangle { x: (0..40).collect(), y: (40..80).collect(), k: 60 };
    tangle.verify(&t).unwrap();
    let out = immersion_jungle_from_backward_tangle(&t, &tangle, 2, &th).unwrap();
    assert!(matches!(out, BackwardJungle::Found(_)));
    assert!(out.jungle().x.iter().all(|&z| z >= 50));
    check_jungle(&t, out.jungle(), 8);
}

#[test]
fn backward_jungle_delegates_on_regular_host() {
    let th = Thresholds::default();
    let t = random_circulant(500, 4, 0.1);
    let tangle = BackwardTangle { x: (0..250).collect(), y: (250..500).collect(), k: 0 };
    let k = tangle.arcs_forward(&t);
    let tangle = BackwardTangle { k, ..tangle };
    tangle.verify(&t).unwrap();
    assert!(k >= 109 * 109 * 2);
    let out = immersion_jungle_from_backward_tangle(&t, &tangle, 2, &th).unwrap();
    assert!(matches!(out, BackwardJungle::Delegated(_)));
    assert_eq!(out.jungle().k, 8);
    check_jungle(&t, out.jungle(), 9);
}

#[test]
fn backward_jungle_threshold_and_open_case() {
    let th = Thresholds::default();
    let t = transitive_with(10, &[(0, 9)]);
    let tangle = BackwardTangle { x: (0..5).collect(), y: (5..10).collect(), k: 1 };
    tangle.verify(&t).unwrap();
    assert!(matches!(
        immersion_jungle_from_backward_tangle(&t, &tangle, 1, &th),
        Err(ObstacleError::PreconditionUnmet(_))
    ));
    let low = Thresholds { backward_arcs: 1, ..th };
    let both_small = BackwardTangle { k: 1, ..tangle };
    assert!(matches!(
        immersion_jungle_from_backward_tangle(&t, &both_small, 2, &Thresholds { backward_arcs: 0, ..low }),
        Err(ObstacleError::PreconditionUnmet(_))
    ));
}

/// The prefix of the outdegree ordering with the largest forward cut.
fn widest_prefix(t: &SemiCompleteDigraph) -> BackwardTangle {
    let order = outdegree_ordering(t);
    let cuts = prefix_cuts(t, &order);
    let (a, &c) = cuts.iter().enumerate().max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i))).unwrap();
    let s = order.as_slice();
    BackwardTangle { x: s[..a].to_vec(), y: s[a..].to_vec(), k: c }
}

#[test]
fn backward_pipeline_on_random_tournament() {
    let th = Thresholds::default();
    let mut seen = 0;
    for seed in 0..5 {
        let t = generate(Model::Random, 60, seed).unwrap();
        let tangle = widest_prefix(&t);
        if tangle.k < cutwidth_m(1) + 1 {
            continue;
        }
        tangle.verify(&t).unwrap();
        let k = 1;
        let th1 = Thresholds { backward_arcs: tangle.k, ..th };
        let out = immersion_jungle_from_backward_tangle(&t, &tangle, k, &th1).unwrap();
        check_jungle(&t, out.jungle(), seed);
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn embed_examples() {
    let (t, tangle) = matching_instance(60, 10, 50, 1);
    let j = jungle_from_matching_tangle(&t, &tangle, 2, &Thresholds::default()).unwrap();
    assert!(matches!(embed_pattern(&j, &Pattern::single_vertex()), Err(ObstacleError::PreconditionUnmet(_))));

    let (t, tangle) = matching_instance(160, 60, 100, 2);
    let j = jungle_from_matching_tangle(&t, &tangle, 12, &Thresholds::default()).unwrap();
    let m = embed_pattern(&j, &Pattern::single_vertex()).unwrap();
    assert_eq!(m.vertices.len(), 1);
    m.verify(&t, &Pattern::single_vertex()).unwrap();
    let h = Pattern::single_arc();
    let m = embed_pattern(&j, &h).unwrap();
    m.verify(&t, &h).unwrap();
    assert!(m.paths[0].len() <= 5);
}

#[test]
fn embed_triangle_into_large_jungle() {
    let (t, tangle) = matching_instance(320, 120, 200, 3);
    let j = jungle_from_matching_tangle(&t, &tangle, 24, &Thresholds::default()).unwrap();
    check_jungle(&t, &j, 24);
    let h = Pattern::directed_cycle(3);
    assert_eq!(h.size(), 6);
    let m = embed_pattern(&j, &h).unwrap();
    m.verify(&t, &h).unwrap();
    for h in Pattern::all_up_to_size(6).iter().filter(|h| h.size() <= 6) {
        embed_pattern(&j, h).unwrap().verify(&t, h).unwrap();
    }
}

#[test]
fn embed_immersion_from_edge_jungle() {
    let th = small_backward_thresholds();
    let extra: Vec<(usize, usize)> = (0..190).map(|x| (x, 399 - x)).collect();
    let t = transitive_with(400, &extra);
    let tangle = BackwardTangle { x: (0..200).collect(), y: (200..400).collect(), k: 190 };
    tangle.verify(&t).unwrap();
    let out = immersion_jungle_from_backward_tangle(&t, &tangle, 12, &th).unwrap();
    check_jungle(&t, out.jungle(), 12);
    let h = Pattern::single_arc();
    let m = embed_pattern(out.jungle(), &h).unwrap();
    assert_eq!(m.kind, scd_core::ModelKind::Immersion);
    m.verify(&t, &h).unwrap();
}

#[test]
fn certificate_round_trip() {
    let (t, tangle) = matching_instance(60, 10, 50, 1);
    let j = jungle_from_matching_tangle(&t, &tangle, 2, &Thresholds::default()).unwrap();
    let obstacles = vec![
        Obstacle::Degree(DegreeTangle { x: vec![3, 1, 2], k: 3, ell: 1 }),
        Obstacle::Matching(tangle),
        Obstacle::Backward(BackwardTangle { x: vec![0, 1], y: vec![2], k: 1 }),
        Obstacle::Jungle(j),
    ];
    for o in obstacles {
        let text = format_obstacle(&o);
        assert_eq!(parse_obstacle(&text).unwrap(), o, "{text}");
    }
    assert!(parse_obstacle("TANGLE 1").is_err());
    assert!(parse_obstacle("JUNGLE 1 2 weird\n0\n").is_err());
    assert!(parse_obstacle("JUNGLE 1 2 edge_disjoint\n0 1\n0 1\n").is_err());
}

#[test]
fn thresholds_by_name() {
    let mut th = Thresholds::default();
    for key in Thresholds::KEYS {
        th.set(key, 3).unwrap();
    }
    assert_eq!(th.degree_jungle, 3);
    assert_eq!(th.cutwidth_bound(5), 3);
    assert!(matches!(th.set("nope", 1), Err(ObstacleError::BadConstant(_))));
    assert_eq!(Thresholds::default().cutwidth_bound(1), 123);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_bounds_are_sound(n in 2usize..=8, seed in any::<u64>()) {
        let t = generate(Model::SemiComplete(0.2), n, seed).unwrap();
        let order = outdegree_ordering(&t);
        let pw = scd_oracles::oracle_pathwidth(&t).unwrap().value;
        let s = order.as_slice();
        for i in 0..n {
            for j in i + 1..=n {
                let x = s[i..j].to_vec();
                let ell = t.outdeg(s[j - 1]) - t.outdeg(s[i]);
                let tangle = DegreeTangle { k: x.len(), x, ell };
                prop_assert!(tangle.verify(&t).is_ok());
                if let Some(b) = pathwidth_bound_from_degree_tangle(&tangle) {
                    prop_assert!(pw > b);
                }
            }
        }
    }

    #[test]
    fn matching_bounds_are_sound(n in 2usize..=8, seed in any::<u64>()) {
        let t = generate(Model::SemiComplete(0.2), n, seed).unwrap();
        let pw = scd_oracles::oracle_pathwidth(&t).unwrap().value;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..40 {
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(&mut rng);
            let s = rng.random_range(1..=n / 2);
            let x = vs[..s].to_vec();
            let y = vs[s..2 * s].to_vec();
            let hi = x.iter().map(|&v| t.outdeg(v)).max().unwrap();
            let lo = y.iter().map(|&v| t.outdeg(v)).min().unwrap();
            if lo <= hi {
                continue;
            }
            let tangle = MatchingTangle { x, y, k: s, ell: lo - hi - 1 };
            if tangle.verify(&t).is_ok() {
                let b = pathwidth_bound_from_matching_tangle(&tangle).unwrap();
                prop_assert!(pw > b);
            }
        }
    }

    #[test]
    fn backward_bounds_are_sound(n in 2usize..=10, seed in any::<u64>()) {
        let t = generate(Model::SemiComplete(0.2), n, seed).unwrap();
        let ctw = scd_oracles::oracle_cutwidth(&t).unwrap().value;
        let order = outdegree_ordering(&t);
        let cuts = prefix_cuts(&t, &order);
        for a in 1..n {
            let s = order.as_slice();
            let tangle = BackwardTangle { x: s[..a].to_vec(), y: s[a..].to_vec(), k: cuts[a] };
            prop_assert!(tangle.verify(&t).is_ok());
            if let Some(b) = cutwidth_bound_from_backward_tangle(&tangle) {
                prop_assert!(ctw > b);
            }
        }
    }

    #[test]
    fn degree_tangles_weaken(n in 1usize..=12, seed in any::<u64>(), dk in 0usize..4, dl in 0usize..4) {
        let t = generate(Model::SemiComplete(0.3), n, seed).unwrap();
        let order = outdegree_ordering(&t);
        let x = order.as_slice()[..n.div_ceil(2)].to_vec();
        let ell = x.iter().map(|&v| t.outdeg(v)).max().unwrap() - x.iter().map(|&v| t.outdeg(v)).min().unwrap();
        let tangle = DegreeTangle { k: x.len(), x, ell };
        prop_assert!(tangle.verify(&t).is_ok());
        let weaker = DegreeTangle { k: tangle.k.saturating_sub(dk), ell: tangle.ell + dl, x: tangle.x.clone() };
        prop_assert!(weaker.verify(&t).is_ok());
    }

    #[test]
    fn degree_jungles_on_random_regular_hosts(n in 52usize..=70, seed in any::<u64>(), p in 0.0f64..0.6) {
        let t = random_circulant(n, seed, p);
        let x: Vec<usize> = (0..n).collect();
        let j = jungle_from_degree_tangle(&t, &x, 2, &Thresholds::default()).unwrap();
        check_jungle(&t, &j, seed);
        let h = Pattern::single_arc();
        if j.k >= 3 * h.size() {
            embed_pattern(&j, &h).unwrap().verify(&t, &h).unwrap();
        }
    }
}
