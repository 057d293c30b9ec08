//! Bipartite graphs under single-vertex updates.
//!
//! [`DynamicBipartiteGraph`] keeps a maximum matching (one augmenting-path
//! search per update) together with the degree and unimportant-neighbour
//! counters behind the Buss selector. Vertices carry stable external labels.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelectorError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("vertex {0} is already in the graph")]
    DuplicateVertex(usize),
    #[error("selector has {size} vertices, needs more than {bound}")]
    PreconditionUnmet { size: usize, bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectorKind {
    Matching,
    Buss,
    BussReversed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectorSnapshot {
    /// Sorted labels.
    pub chosen: Vec<usize>,
    pub kind: SelectorKind,
    pub ell: Option<usize>,
}

impl SelectorSnapshot {
    pub fn contains(&self, v: usize) -> bool {
        self.chosen.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone)]
struct Slot {
    side: Side,
    /// Insertion stamp; fixes the search order.
    stamp: u64,
    adj: Vec<usize>,
    mate: Option<usize>,
    /// Neighbours of degree ≤ ℓ.
    unimportant: usize,
    buss: bool,
}

#[derive(Debug, Clone)]
pub struct DynamicBipartiteGraph {
    ell: usize,
    slots: Vec<Option<Slot>>,
    left: Vec<usize>,
    right: Vec<usize>,
    next_stamp: u64,
    matched: usize,
    buss_left: usize,
    buss_right: usize,
}

impl DynamicBipartiteGraph {
    pub fn new(ell: usize) -> Self {
        DynamicBipartiteGraph {
            ell,
            slots: Vec::new(),
            left: Vec::new(),
            right: Vec::new(),
            next_stamp: 0,
            matched: 0,
            buss_left: 0,
            buss_right: 0,
        }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Changes the Buss threshold and recomputes every counter.
    pub fn set_ell(&mut self, ell: usize) {
        self.ell = ell;
        let labels: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        for &v in &labels {
            let cnt = self.slot(v).adj.iter().filter(|&&w| self.slot(w).adj.len() <= ell).count();
            self.slot_mut(v).unimportant = cnt;
        }
        self.buss_left = 0;
        self.buss_right = 0;
        for v in labels {
            self.slot_mut(v).buss = false;
            self.refresh(v);
        }
    }

    fn slot(&self, v: usize) -> &Slot {
        self.slots[v].as_ref().expect("present vertex")
    }

    fn slot_mut(&mut self, v: usize) -> &mut Slot {
        self.slots[v].as_mut().expect("present vertex")
    }

    pub fn contains(&self, v: usize) -> bool {
        self.slots.get(v).is_some_and(Option::is_some)
    }

    pub fn side(&self, v: usize) -> Option<Side> {
        self.slots.get(v).and_then(|s| s.as_ref()).map(|s| s.side)
    }

    /// Left labels in insertion order.
    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.slot(v).adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.slot(v).adj.len()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.slot(v).mate
    }

    pub fn edge_count(&self) -> usize {
        self.left.iter().map(|&v| self.degree(v)).sum()
    }

    pub fn matching_size(&self) -> usize {
        self.matched
    }

    /// Matching edges as (left, right), in left insertion order.
    pub fn matching(&self) -> Vec<(usize, usize)> {
        self.left.iter().filter_map(|&x| self.slot(x).mate.map(|y| (x, y))).collect()
    }

    pub fn add_left(&mut self, v: usize, neighbours: &[usize]) -> Result<(), SelectorError> {
        self.add(v, Side::Left, neighbours)
    }

    pub fn add_right(&mut self, v: usize, neighbours: &[usize]) -> Result<(), SelectorError> {
        self.add(v, Side::Right, neighbours)
    }

    pub fn remove_left(&mut self, v: usize) -> Result<(), SelectorError> {
        self.remove(v, Side::Left)
    }

    pub fn remove_right(&mut self, v: usize) -> Result<(), SelectorError> {
        self.remove(v, Side::Right)
    }

    fn add(&mut self, v: usize, side: Side, neighbours: &[usize]) -> Result<(), SelectorError> {
        if self.contains(v) {
            return Err(SelectorError::DuplicateVertex(v));
        }
        let mut nbrs: Vec<usize> = Vec::with_capacity(neighbours.len());
        for &w in neighbours {
            if self.side(w) != Some(side.other()) {
                return Err(SelectorError::UnknownVertex(w));
            }
            if !nbrs.contains(&w) {
                nbrs.push(w);
            }
        }
        if self.slots.len() <= v {
            self.slots.resize(v + 1, None);
        }
        let ell = self.ell;
        self.slots[v] =
            Some(Slot { side, stamp: self.next_stamp, adj: Vec::new(), mate: None, unimportant: 0, buss: false });
        self.next_stamp += 1;
        match side {
            Side::Left => self.left.push(v),
            Side::Right => self.right.push(v),
        }
        // neighbours that cross the threshold stop being unimportant for their old neighbours
        for &w in &nbrs {
            self.slot_mut(w).adj.push(v);
            if self.degree(w) == ell + 1 {
                let old: Vec<usize> = self.slot(w).adj.iter().copied().filter(|&z| z != v).collect();
                for z in old {
                    self.slot_mut(z).unimportant -= 1;
                    self.refresh(z);
                }
            }
        }
        let unimportant = nbrs.iter().filter(|&&w| self.degree(w) <= ell).count();
        let v_unimportant = nbrs.len() <= ell;
        {
            let s = self.slot_mut(v);
            s.adj = nbrs.clone();
            s.unimportant = unimportant;
        }
        self.refresh(v);
        for &w in &nbrs {
            if v_unimportant {
                self.slot_mut(w).unimportant += 1;
            }
            self.refresh(w);
        }
        self.augment();
        Ok(())
    }

    fn remove(&mut self, v: usize, side: Side) -> Result<(), SelectorError> {
        if self.side(v) != Some(side) {
            return Err(SelectorError::UnknownVertex(v));
        }
        let ell = self.ell;
        let nbrs = std::mem::take(&mut self.slot_mut(v).adj);
        let v_unimportant = nbrs.len() <= ell;
        if self.slot(v).buss {
            match side {
                Side::Left => self.buss_left -= 1,
                Side::Right => self.buss_right -= 1,
            }
        }
        if let Some(m) = self.slot(v).mate {
            self.slot_mut(m).mate = None;
            self.matched -= 1;
        }
        for &w in &nbrs {
            let s = self.slot_mut(w);
            s.adj.retain(|&z| z != v);
            if v_unimportant {
                s.unimportant -= 1;
            }
            if s.adj.len() == ell {
                let others = s.adj.clone();
                for z in others {
                    self.slot_mut(z).unimportant += 1;
                    self.refresh(z);
                }
            }
            self.refresh(w);
        }
        self.slots[v] = None;
        match side {
            Side::Left => self.left.retain(|&x| x != v),
            Side::Right => self.right.retain(|&x| x != v),
        }
        self.augment();
        Ok(())
    }

    fn refresh(&mut self, v: usize) {
        let ell = self.ell;
        let s = self.slot_mut(v);
        let now = s.adj.len() > ell || s.unimportant > 0;
        if now == s.buss {
            return;
        }
        s.buss = now;
        let side = s.side;
        let counter = match side {
            Side::Left => &mut self.buss_left,
            Side::Right => &mut self.buss_right,
        };
        if now {
            *counter += 1;
        } else {
            *counter -= 1;
        }
    }

    /// One breadth-first search for an augmenting path from all free left
    /// vertices; augments along the first one found.
    fn augment(&mut self) -> bool {
        let mut parent: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        let mut visited_left = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        for &x in &self.left {
            if self.slot(x).mate.is_none() {
                visited_left.insert(x);
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.slot(x).adj {
                if parent.contains_key(&y) {
                    continue;
                }
                parent.insert(y, x);
                match self.slot(y).mate {
                    None => {
                        let mut y = y;
                        loop {
                            let x = parent[&y];
                            let prev = self.slot(x).mate;
                            self.slot_mut(x).mate = Some(y);
                            self.slot_mut(y).mate = Some(x);
                            match prev {
                                Some(py) => y = py,
                                None => break,
                            }
                        }
                        self.matched += 1;
                        return true;
                    }
                    Some(x2) => {
                        if visited_left.insert(x2) {
                            queue.push_back(x2);
                        }
                    }
                }
            }
        }
        false
    }

    /// True when no augmenting path exists for the stored matching.
    pub fn is_maximum(&self) -> bool {
        let mut probe = self.clone();
        !probe.augment()
    }

    /// Vertices reachable by alternating paths from the free vertices of `side`,
    /// restricted to `side`, under the given mate function.
    fn alternating_reach(&self, side: Side, mate: &dyn Fn(usize) -> Option<usize>) -> Vec<bool> {
        let starts = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        let mut reached = vec![false; self.slots.len()];
        let mut queue = VecDeque::new();
        for &x in starts {
            if mate(x).is_none() {
                reached[x] = true;
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.slot(x).adj {
                if mate(x) == Some(y) {
                    continue;
                }
                if let Some(x2) = mate(y) {
                    if !reached[x2] {
                        reached[x2] = true;
                        queue.push_back(x2);
                    }
                }
            }
        }
        reached
    }

    fn selector_with(&self, mate: &dyn Fn(usize) -> Option<usize>) -> Vec<usize> {
        let a = self.alternating_reach(Side::Left, mate);
        let b = self.alternating_reach(Side::Right, mate);
        let mut chosen: Vec<usize> =
            self.left.iter().filter(|&&x| !a[x]).chain(self.right.iter().filter(|&&y| !b[y])).copied().collect();
        chosen.sort_unstable();
        chosen
    }

    /// Vertices matched in every maximum matching: everything outside the
    /// alternating reach of the free vertices on either side.
    pub fn matching_selector(&self) -> SelectorSnapshot {
        SelectorSnapshot { chosen: self.selector_with(&|v| self.slot(v).mate), kind: SelectorKind::Matching, ell: None }
    }

    /// Same characterization evaluated against an arbitrary maximum matching
    /// given as (left, right) pairs.
    pub fn matching_selector_for(&self, matching: &[(usize, usize)]) -> Vec<usize> {
        let mut mate = vec![None; self.slots.len()];
        for &(x, y) in matching {
            mate[x] = Some(y);
            mate[y] = Some(x);
        }
        self.selector_with(&|v| mate[v])
    }

    /// Minimum vertex cover from the stored maximum matching: left vertices not
    /// reached from free left vertices by alternating paths, plus right vertices
    /// that are reached.
    pub fn konig_cover(&self) -> Vec<usize> {
        let mut reached = vec![false; self.slots.len()];
        let mut queue = VecDeque::new();
        for &x in &self.left {
            if self.slot(x).mate.is_none() {
                reached[x] = true;
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.slot(x).adj {
                if reached[y] || self.slot(x).mate == Some(y) {
                    continue;
                }
                reached[y] = true;
                if let Some(x2) = self.slot(y).mate {
                    if !reached[x2] {
                        reached[x2] = true;
                        queue.push_back(x2);
                    }
                }
            }
        }
        let mut cover: Vec<usize> = self
            .left
            .iter()
            .filter(|&&x| !reached[x])
            .chain(self.right.iter().filter(|&&y| reached[y]))
            .copied()
            .collect();
        cover.sort_unstable();
        cover
    }

    /// Left vertices of degree > ℓ or with a neighbour of degree ≤ ℓ.
    pub fn buss_selector(&self) -> SelectorSnapshot {
        self.buss_snapshot(Side::Left, SelectorKind::Buss)
    }

    /// The Buss selector of the graph with sides swapped.
    pub fn buss_reversed(&self) -> SelectorSnapshot {
        self.buss_snapshot(Side::Right, SelectorKind::BussReversed)
    }

    fn buss_snapshot(&self, side: Side, kind: SelectorKind) -> SelectorSnapshot {
        let pool = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        let mut chosen: Vec<usize> = pool.iter().copied().filter(|&v| self.slot(v).buss).collect();
        chosen.sort_unstable();
        SelectorSnapshot { chosen, kind, ell: Some(self.ell) }
    }

    pub fn buss_count(&self) -> usize {
        self.buss_left
    }

    pub fn buss_reversed_count(&self) -> usize {
        self.buss_right
    }

    /// A matching of size ℓ+1 when |𝔅_ℓ| > ℓ²+ℓ, as (left, right) pairs.
    pub fn extract_buss_matching(&self) -> Result<Vec<(usize, usize)>, SelectorError> {
        self.extract(Side::Left).map(|m| m.into_iter().collect())
    }

    /// Reversed variant; pairs are still reported as (left, right).
    pub fn extract_buss_reversed_matching(&self) -> Result<Vec<(usize, usize)>, SelectorError> {
        self.extract(Side::Right).map(|m| m.into_iter().map(|(y, x)| (x, y)).collect())
    }

    /// Greedy extraction; pairs are (chosen-side vertex, other-side vertex).
    fn extract(&self, side: Side) -> Result<Vec<(usize, usize)>, SelectorError> {
        let ell = self.ell;
        let chosen = match side {
            Side::Left => self.buss_selector(),
            Side::Right => self.buss_reversed(),
        };
        let bound = ell * ell + ell;
        if chosen.chosen.len() <= bound {
            return Err(SelectorError::PreconditionUnmet { size: chosen.chosen.len(), bound });
        }
        let pool: Vec<usize> = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
        .iter()
        .copied()
        .filter(|&v| self.slot(v).buss)
        .collect();
        let important: Vec<usize> = pool.iter().copied().filter(|&v| self.degree(v) > ell).collect();
        let mut out = Vec::with_capacity(ell + 1);
        if important.len() > ell {
            let mut used = std::collections::HashSet::new();
            for &v in important.iter().take(ell + 1) {
                let w = *self
                    .neighbours(v)
                    .iter()
                    .find(|w| !used.contains(*w))
                    .expect("an important vertex has more than ℓ neighbours");
                used.insert(w);
                out.push((v, w));
            }
            return Ok(out);
        }
        let mut marked = std::collections::HashSet::new();
        for &v in &pool {
            if out.len() == ell + 1 {
                break;
            }
            if marked.contains(&v) {
                continue;
            }
            let Some(&w) = self.neighbours(v).iter().find(|&&w| self.degree(w) <= ell) else {
                continue;
            };
            out.push((v, w));
            marked.extend(self.neighbours(w).iter().copied());
        }
        assert_eq!(out.len(), ell + 1, "marking greedy runs out only below the size bound");
        Ok(out)
    }

    /// Insertion stamp of a present vertex.
    pub fn stamp(&self, v: usize) -> u64 {
        self.slot(v).stamp
    }
}
