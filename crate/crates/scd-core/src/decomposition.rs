use fixedbitset::FixedBitSet;

use crate::digraph::SemiCompleteDigraph;
use crate::error::{CoreError, Result};

/// A pair (A,B) with A ∪ B = V and no arc from A∖B to B∖A.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Separation {
    a: FixedBitSet,
    b: FixedBitSet,
    separator: FixedBitSet,
}

impl Separation {
    pub fn new(t: &SemiCompleteDigraph, a: FixedBitSet, b: FixedBitSet) -> Result<Self> {
        let n = t.n();
        if a.len() != n || b.len() != n {
            return Err(CoreError::InvalidSeparation(format!("sets must range over 0..{n}")));
        }
        let mut union = a.clone();
        union.union_with(&b);
        if let Some(v) = union.zeroes().next() {
            return Err(CoreError::InvalidSeparation(format!("vertex {v} is in neither side")));
        }
        let mut a_only = a.clone();
        a_only.difference_with(&b);
        let mut b_only = b.clone();
        b_only.difference_with(&a);
        for u in a_only.ones() {
            if let Some(w) = t.out_set(u).intersection(&b_only).next() {
                return Err(CoreError::InvalidSeparation(format!("arc ({u},{w}) leads from A\\B to B\\A")));
            }
        }
        let mut separator = a.clone();
        separator.intersect_with(&b);
        Ok(Separation { a, b, separator })
    }

    pub fn from_vertices(
        t: &SemiCompleteDigraph,
        a: impl IntoIterator<Item = usize>,
        b: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let n = t.n();
        let mut sa = FixedBitSet::with_capacity(n);
        let mut sb = FixedBitSet::with_capacity(n);
        for v in a {
            if v >= n {
                return Err(CoreError::BadVertex(v));
            }
            sa.insert(v);
        }
        for v in b {
            if v >= n {
                return Err(CoreError::BadVertex(v));
            }
            sb.insert(v);
        }
        Separation::new(t, sa, sb)
    }

    pub fn a(&self) -> &FixedBitSet {
        &self.a
    }

    pub fn b(&self) -> &FixedBitSet {
        &self.b
    }

    pub fn separator(&self) -> &FixedBitSet {
        &self.separator
    }

    pub fn order(&self) -> usize {
        self.separator.count_ones(..)
    }
}

/// Separations from (∅,V) to (V,∅) with A growing and B shrinking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationChain {
    seps: Vec<Separation>,
}

impl SeparationChain {
    pub fn new(t: &SemiCompleteDigraph, seps: Vec<Separation>) -> Result<Self> {
        let n = t.n();
        let (first, last) = match (seps.first(), seps.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(CoreError::InvalidChain("empty sequence".into())),
        };
        if first.a.count_ones(..) != 0 || first.b.count_ones(..) != n {
            return Err(CoreError::InvalidChain("first separation is not (∅,V)".into()));
        }
        if last.a.count_ones(..) != n || last.b.count_ones(..) != 0 {
            return Err(CoreError::InvalidChain("last separation is not (V,∅)".into()));
        }
        for (i, w) in seps.windows(2).enumerate() {
            if !w[0].a.is_subset(&w[1].a) || !w[1].b.is_subset(&w[0].b) {
                return Err(CoreError::InvalidChain(format!("separations {i} and {} are not nested", i + 1)));
            }
        }
        Ok(SeparationChain { seps })
    }

    pub fn separations(&self) -> &[Separation] {
        &self.seps
    }

    /// max |A_i ∩ B_i|
    pub fn width(&self) -> usize {
        self.seps.iter().map(Separation::order).max().unwrap_or(0)
    }
}

/// Bags W_1..W_r, each a sorted list of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn new(mut bags: Vec<Vec<usize>>) -> Self {
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        PathDecomposition { bags }
    }

    /// max |W_i| − 1, or `None` when every bag is empty.
    pub fn width(&self) -> Option<usize> {
        self.bags.iter().map(Vec::len).max().and_then(|m| m.checked_sub(1))
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }
}

/// Checks properties (i)–(iii) and returns the width (0 for an all-empty decomposition).
pub fn verify_path_decomposition(t: &SemiCompleteDigraph, w: &PathDecomposition) -> Result<usize> {
    let n = t.n();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    let mut count = vec![0usize; n];
    for (i, bag) in w.bags.iter().enumerate() {
        let mut seen = std::collections::HashSet::with_capacity(bag.len());
        for &v in bag {
            if v >= n {
                return Err(CoreError::BadVertex(v));
            }
            if !seen.insert(v) {
                continue;
            }
            first[v] = first[v].min(i);
            last[v] = i;
            count[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| count[v] == 0) {
        return Err(CoreError::CoverageViolation(v));
    }
    for v in 0..n {
        if last[v] - first[v] + 1 != count[v] {
            let j =
                (first[v]..last[v]).find(|&j| !w.bags[j].contains(&v)).expect("a gap exists when the count is short");
            return Err(CoreError::ContiguityViolation { v, i: first[v], j, k: last[v] });
        }
    }
    for (u, v) in t.arcs() {
        if last[u] < first[v] {
            return Err(CoreError::ArcViolation(u, v));
        }
    }
    Ok(w.width().unwrap_or(0))
}

/// W_i = A_i ∩ B_{i−1} for i = 1..r.
pub fn chain_to_decomposition(c: &SeparationChain) -> PathDecomposition {
    let bags = c.seps.windows(2).map(|w| w[1].a.intersection(&w[0].b).collect()).collect();
    PathDecomposition::new(bags)
}

/// (A_i, B_i) = (∪_{j≤i} W_j, ∪_{j>i} W_j) after merging consecutive equal bags.
pub fn decomposition_to_chain(t: &SemiCompleteDigraph, w: &PathDecomposition) -> Result<SeparationChain> {
    verify_path_decomposition(t, w)?;
    let n = t.n();
    let mut bags: Vec<&Vec<usize>> = Vec::with_capacity(w.bags.len());
    for bag in &w.bags {
        if bags.last().is_none_or(|b| *b != bag) {
            bags.push(bag);
        }
    }
    let r = bags.len();
    let mut prefix = vec![FixedBitSet::with_capacity(n); r + 1];
    for i in 0..r {
        let mut s = prefix[i].clone();
        s.extend(bags[i].iter().copied());
        prefix[i + 1] = s;
    }
    let mut suffix = vec![FixedBitSet::with_capacity(n); r + 1];
    for i in (0..r).rev() {
        let mut s = suffix[i + 1].clone();
        s.extend(bags[i].iter().copied());
        suffix[i] = s;
    }
    let mut seps = Vec::with_capacity(r + 1);
    for i in 0..=r {
        seps.push(Separation::new(t, prefix[i].clone(), suffix[i].clone())?);
    }
    if r == 0 {
        seps.push(seps[0].clone());
    }
    SeparationChain::new(t, seps)
}

/// Nice form: empty end bags, and between consecutive bags first forget the
/// vertices that leave (ascending), then introduce the ones that enter (ascending).
pub fn make_nice(w: &PathDecomposition) -> PathDecomposition {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    let end = Vec::new();
    let targets = w.bags.iter().chain(std::iter::once(&end));
    for target in targets {
        let mut cur = out.last().cloned().unwrap_or_default();
        let leaving: Vec<usize> = cur.iter().copied().filter(|v| !target.contains(v)).collect();
        for v in leaving {
            cur.retain(|&x| x != v);
            out.push(cur.clone());
        }
        let entering: Vec<usize> = target.iter().copied().filter(|v| !cur.contains(v)).collect();
        for v in entering {
            let pos = cur.partition_point(|&x| x < v);
            cur.insert(pos, v);
            out.push(cur.clone());
        }
    }
    PathDecomposition { bags: out }
}

/// One step of a nice decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceStep {
    Introduce(usize),
    Forget(usize),
}

/// Steps between consecutive bags of a nice decomposition.
pub fn nice_steps(w: &PathDecomposition) -> Vec<NiceStep> {
    w.bags
        .windows(2)
        .map(|p| {
            if p[1].len() > p[0].len() {
                let v = *p[1].iter().find(|v| !p[0].contains(v)).expect("introduced vertex");
                NiceStep::Introduce(v)
            } else {
                let v = *p[0].iter().find(|v| !p[1].contains(v)).expect("forgotten vertex");
                NiceStep::Forget(v)
            }
        })
        .collect()
}
