use scd_core::{
    chain_to_decomposition, outdegree_ordering, verify_path_decomposition, FixedBitSet, PathDecomposition,
    SemiCompleteDigraph, Separation, SeparationChain,
};
use scd_obstacles::{DegreeTangle, MatchingTangle};
use scd_selectors::{DynamicBipartiteGraph, Side};

use crate::PathwidthOutcome;

fn finish(t: &SemiCompleteDigraph, decomposition: PathDecomposition) -> PathwidthOutcome {
    let width = verify_path_decomposition(t, &decomposition).expect("emitted chain yields a valid decomposition");
    PathwidthOutcome::Decomposition { decomposition, width }
}

/// Decomposition of width at most `ell + 2k`, or a tangle showing pw(T) > k.
///
/// Window i covers positions i..i+ell of the outdegree ordering; H_i joins
/// everything before it to everything after it by forward arcs.
pub fn approx_pathwidth(t: &SemiCompleteDigraph, k: usize, ell: usize) -> PathwidthOutcome {
    let n = t.n();
    let sigma = outdegree_ordering(t);
    let s = sigma.as_slice();
    let d: Vec<usize> = s.iter().map(|&v| t.outdeg(v)).collect();

    for i in 0..n.saturating_sub(ell + 1) {
        if d[i + ell + 1] <= d[i] + k {
            return PathwidthOutcome::Degree(DegreeTangle { x: s[i..=i + ell + 1].to_vec(), k: ell + 2, ell: k });
        }
    }
    if n == 0 {
        return PathwidthOutcome::Decomposition { decomposition: PathDecomposition::default(), width: 0 };
    }
    if n <= ell + 2 * k + 1 {
        return finish(t, PathDecomposition::new(vec![(0..n).collect()]));
    }

    let mut h = DynamicBipartiteGraph::new(k);
    for &y in &s[ell..] {
        h.add_right(y, &[]).expect("fresh vertex");
    }
    let mut seps = vec![Separation::new(t, t.empty_set(), t.full_set()).expect("trivial separation")];
    for i in 0..=n - ell {
        if i > 0 {
            let (gone, joined) = (s[i + ell - 1], s[i - 1]);
            h.remove_right(gone).expect("window vertex was on the right");
            let nbrs: Vec<usize> = t.out_neighbours(joined).filter(|&y| h.side(y) == Some(Side::Right)).collect();
            h.add_left(joined, &nbrs).expect("fresh vertex");
        }
        if h.matching_size() > k {
            let pairs: Vec<(usize, usize)> = h.matching().into_iter().take(k + 1).collect();
            return PathwidthOutcome::Matching(MatchingTangle {
                x: pairs.iter().map(|p| p.0).collect(),
                y: pairs.iter().map(|p| p.1).collect(),
                k: k + 1,
                ell: k,
            });
        }
        let mut a = FixedBitSet::with_capacity(n);
        let mut b = FixedBitSet::with_capacity(n);
        a.extend(s[..i + ell].iter().copied());
        b.extend(s[i..].iter().copied());
        for v in h.matching_selector().chosen {
            a.insert(v);
            b.insert(v);
        }
        let sep = Separation::new(t, a, b).expect("matching selector is a vertex cover");
        let prev = seps.last().expect("chain starts with (∅,V)");
        if *prev != sep {
            assert!(
                prev.a().is_subset(sep.a()) && sep.b().is_subset(prev.b()),
                "separations at window {i} are not nested"
            );
            seps.push(sep);
        }
    }
    let last = Separation::new(t, t.full_set(), t.empty_set()).expect("trivial separation");
    if *seps.last().expect("nonempty") != last {
        seps.push(last);
    }
    let chain = SeparationChain::new(t, seps).expect("nested separations from (∅,V) to (V,∅)");
    finish(t, chain_to_decomposition(&chain))
}
