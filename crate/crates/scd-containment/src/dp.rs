use std::collections::HashMap;

use scd_core::{
    make_nice, nice_steps, verify_path_decomposition, FixedBitSet, ModelKind, ModelMap, NiceStep, PathDecomposition,
    Pattern, SemiCompleteDigraph,
};

use crate::signature::{signature_bound, End, Signature, Slot};
use crate::ContainmentError;

/// Live entries a single table may hold before the DP gives up.
pub const DEFAULT_TABLE_BUDGET: usize = 1_000_000;
/// Parent pointers kept for reconstruction, as a multiple of the table budget.
pub const HISTORY_FACTOR: usize = 16;

/// What happened to the introduced vertex in a partial expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Unused,
    Forget,
    /// A one-vertex piece inserted before piece `gap` of `arc`.
    NewPiece {
        arc: usize,
        gap: usize,
    },
    ExtendBegin {
        arc: usize,
        piece: usize,
    },
    ExtendEnd {
        arc: usize,
        piece: usize,
    },
    /// Joins pieces `piece` and `piece + 1`.
    Merge {
        arc: usize,
        piece: usize,
    },
    /// Image of `vertex`; `extend[j]` says whether the j-th incident arc (in arc
    /// order) grows an existing piece rather than starting a new one.
    Image {
        vertex: usize,
        extend: Vec<bool>,
    },
}

/// Reachable signatures on one separation, with the entry of the previous
/// table each was reached from.
#[derive(Debug, Clone)]
pub struct DpTable {
    pub separator: Vec<usize>,
    pub signatures: Vec<Signature>,
    pub parents: Vec<(usize, Move)>,
    index: HashMap<Signature, usize>,
}

impl DpTable {
    pub fn initial(h: &Pattern) -> Self {
        let mut table = DpTable::empty(Vec::new());
        table.insert(Signature::initial(h), 0, Move::Unused);
        table
    }

    /// A table holding the given signatures, with no history.
    pub fn from_signatures(mut separator: Vec<usize>, signatures: Vec<Signature>) -> Self {
        separator.sort_unstable();
        let mut table = DpTable::empty(separator);
        for s in signatures {
            table.insert(s, 0, Move::Unused);
        }
        table
    }

    fn empty(separator: Vec<usize>) -> Self {
        DpTable { separator, signatures: Vec::new(), parents: Vec::new(), index: HashMap::new() }
    }

    fn insert(&mut self, sig: Signature, parent: usize, mv: Move) {
        if !self.index.contains_key(&sig) {
            self.index.insert(sig.clone(), self.signatures.len());
            self.signatures.push(sig);
            self.parents.push((parent, mv));
        }
    }

    pub fn len(&self) -> usize {
        self.signatures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signatures.is_empty()
    }

    pub fn position(&self, sig: &Signature) -> Option<usize> {
        self.index.get(sig).copied()
    }
}

/// Successors of one signature when `v` joins the separator.
fn introduce_moves(t: &SemiCompleteDigraph, h: &Pattern, sig: &Signature, v: usize) -> Vec<(Signature, Move)> {
    let into = |b: End| match b {
        End::At(x) => t.arc(v, x),
        // nothing forgotten can point at a vertex introduced later
        End::Forgotten => true,
    };
    let from = |e: End| matches!(e, End::At(x) if t.arc(x, v));
    let single = (End::At(v), End::At(v));
    let mut out = vec![(sig.clone(), Move::Unused)];

    for (arc, pairs) in sig.amap.iter().enumerate() {
        for gap in 0..=pairs.len() {
            let mut s = sig.clone();
            s.amap[arc].insert(gap, single);
            out.push((s, Move::NewPiece { arc, gap }));
        }
        for (piece, &(b, e)) in pairs.iter().enumerate() {
            if into(b) {
                let mut s = sig.clone();
                s.amap[arc][piece].0 = End::At(v);
                out.push((s, Move::ExtendBegin { arc, piece }));
            }
            if from(e) {
                let mut s = sig.clone();
                s.amap[arc][piece].1 = End::At(v);
                out.push((s, Move::ExtendEnd { arc, piece }));
                if let Some(&(next_b, next_e)) = pairs.get(piece + 1) {
                    if into(next_b) {
                        let mut s = sig.clone();
                        s.amap[arc][piece] = (b, next_e);
                        s.amap[arc].remove(piece + 1);
                        out.push((s, Move::Merge { arc, piece }));
                    }
                }
            }
        }
    }

    for (u, &slot) in sig.vmap.iter().enumerate() {
        if slot != Slot::Unknown {
            continue;
        }
        let incident: Vec<usize> = (0..h.arc_count()).filter(|&a| h.arcs()[a].0 == u || h.arcs()[a].1 == u).collect();
        'choice: for mask in 0u32..1 << incident.len() {
            let mut s = sig.clone();
            s.vmap[u] = Slot::At(v);
            let mut extend = Vec::with_capacity(incident.len());
            for (j, &a) in incident.iter().enumerate() {
                let grow = mask >> j & 1 == 1;
                extend.push(grow);
                let pairs = &mut s.amap[a];
                let outgoing = h.arcs()[a].0 == u;
                match (outgoing, grow) {
                    (true, false) => pairs.insert(0, single),
                    (false, false) => pairs.push(single),
                    (true, true) => match pairs.first_mut() {
                        Some(p) if into(p.0) => p.0 = End::At(v),
                        _ => continue 'choice,
                    },
                    (false, true) => match pairs.last_mut() {
                        Some(p) if from(p.1) => p.1 = End::At(v),
                        _ => continue 'choice,
                    },
                }
            }
            out.push((s, Move::Image { vertex: u, extend }));
        }
    }
    out
}

/// Table on the separator grown by `v`.
pub fn introduce_vertex(t: &SemiCompleteDigraph, h: &Pattern, table: &DpTable, v: usize) -> DpTable {
    introduce_within(t, h, table, v, usize::MAX).expect("no budget")
}

fn introduce_within(
    t: &SemiCompleteDigraph,
    h: &Pattern,
    table: &DpTable,
    v: usize,
    budget: usize,
) -> Result<DpTable, ContainmentError> {
    let mut sep = table.separator.clone();
    let pos = sep.partition_point(|&x| x < v);
    sep.insert(pos, v);
    let mut next = DpTable::empty(sep);
    for (i, sig) in table.signatures.iter().enumerate() {
        for (s, mv) in introduce_moves(t, h, sig, v) {
            if s.is_valid(h, &next.separator) {
                next.insert(s, i, mv);
            }
        }
        if next.len() > budget {
            return Err(ContainmentError::TableBudgetExceeded { entries: next.len(), budget });
        }
    }
    Ok(next)
}

/// Table on the separator without `w`.
pub fn forget_vertex(h: &Pattern, table: &DpTable, w: usize) -> DpTable {
    let sep: Vec<usize> = table.separator.iter().copied().filter(|&x| x != w).collect();
    let mut next = DpTable::empty(sep);
    for (i, sig) in table.signatures.iter().enumerate() {
        let s = sig.forget(w);
        if s.is_valid(h, &next.separator) {
            next.insert(s, i, Move::Forget);
        }
    }
    next
}

/// Necessary conditions for extending `sig` with the vertices of `future`,
/// which are exactly the ones not introduced yet.
fn completable(t: &SemiCompleteDigraph, h: &Pattern, sig: &Signature, future: &FixedBitSet) -> bool {
    let left = future.count_ones(..);
    let mut demand = sig.vmap.iter().filter(|&&s| s == Slot::Unknown).count();
    let reaches = |x: usize| !t.out_set(x).is_disjoint(future);
    let reached = |x: usize| !t.in_set(x).is_disjoint(future);
    for (&(u, w), pairs) in h.arcs().iter().zip(&sig.amap) {
        let Some(last) = pairs.len().checked_sub(1) else { continue };
        demand += last;
        for (i, &(b, e)) in pairs.iter().enumerate() {
            let after = i < last || sig.vmap[w] == Slot::Unknown;
            if after && e.vertex().is_some_and(|x| !reaches(x)) {
                return false;
            }
            let before = i > 0 || sig.vmap[u] == Slot::Unknown;
            if before && b.vertex().is_some_and(|x| !reached(x)) {
                return false;
            }
        }
    }
    demand <= left
}

/// Drops entries no completion can reach, keeping history aligned.
fn prune(t: &SemiCompleteDigraph, h: &Pattern, table: DpTable, future: &FixedBitSet) -> DpTable {
    let mut next = DpTable::empty(table.separator);
    for (sig, (parent, mv)) in table.signatures.into_iter().zip(table.parents) {
        if completable(t, h, &sig, future) {
            next.insert(sig, parent, mv);
        }
    }
    next
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableStats {
    /// Separator size.
    pub m: usize,
    pub size: usize,
    pub bound: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpRun {
    pub accepted: bool,
    /// Expansion rebuilt from the accepting entry.
    pub model: Option<ModelMap>,
    /// One entry per separation of the nice decomposition, starting at (∅, V).
    pub tables: Vec<TableStats>,
}

impl DpRun {
    pub fn max_table(&self) -> usize {
        self.tables.iter().map(|s| s.size).max().unwrap_or(0)
    }
}

pub fn contains_on_decomposition(
    t: &SemiCompleteDigraph,
    h: &Pattern,
    w: &PathDecomposition,
) -> Result<DpRun, ContainmentError> {
    contains_on_decomposition_with_budget(t, h, w, DEFAULT_TABLE_BUDGET)
}

/// Runs the signature DP along the nice form of `w`, dropping entries that
/// cannot be completed by the vertices still to come.
pub fn contains_on_decomposition_with_budget(
    t: &SemiCompleteDigraph,
    h: &Pattern,
    w: &PathDecomposition,
    budget: usize,
) -> Result<DpRun, ContainmentError> {
    verify_path_decomposition(t, w)?;
    let steps = nice_steps(&make_nice(w));
    let (k, ell) = (h.vertex_count(), h.arc_count());
    let stats = |table: &DpTable| {
        let m = table.separator.len();
        TableStats { m, size: table.len(), bound: signature_bound(k, ell, m) }
    };

    let mut table = DpTable::initial(h);
    let mut tables = vec![stats(&table)];
    let mut history: Vec<Vec<(usize, Move)>> = Vec::with_capacity(steps.len());
    let mut future = t.full_set();
    let mut stored = 0usize;
    for &step in &steps {
        table = match step {
            NiceStep::Introduce(v) => {
                future.set(v, false);
                prune(t, h, introduce_within(t, h, &table, v, budget)?, &future)
            }
            NiceStep::Forget(v) => forget_vertex(h, &table, v),
        };
        if table.len() > budget {
            return Err(ContainmentError::TableBudgetExceeded { entries: table.len(), budget });
        }
        tables.push(stats(&table));
        stored += table.len();
        if stored > budget.saturating_mul(HISTORY_FACTOR) {
            return Err(ContainmentError::HistoryBudgetExceeded {
                entries: stored,
                budget: budget.saturating_mul(HISTORY_FACTOR),
            });
        }
        history.push(std::mem::take(&mut table.parents));
    }

    let Some(mut at) = table.position(&Signature::accepting(h)) else {
        return Ok(DpRun { accepted: false, model: None, tables });
    };
    let mut moves = Vec::with_capacity(steps.len());
    for parents in history.iter().rev() {
        let (prev, mv) = &parents[at];
        moves.push(mv);
        at = *prev;
    }
    moves.reverse();
    let model = replay(h, &steps, &moves);
    debug_assert!(model.verify(t, h).is_ok());
    Ok(DpRun { accepted: true, model: Some(model), tables })
}

/// Builds the concrete expansion by applying the chosen moves in order.
fn replay(h: &Pattern, steps: &[NiceStep], moves: &[&Move]) -> ModelMap {
    let mut images = vec![usize::MAX; h.vertex_count()];
    let mut pieces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); h.arc_count()];
    for (&step, &mv) in steps.iter().zip(moves) {
        let NiceStep::Introduce(v) = step else { continue };
        match mv {
            Move::Unused | Move::Forget => {}
            Move::NewPiece { arc, gap } => pieces[*arc].insert(*gap, vec![v]),
            Move::ExtendBegin { arc, piece } => pieces[*arc][*piece].insert(0, v),
            Move::ExtendEnd { arc, piece } => pieces[*arc][*piece].push(v),
            Move::Merge { arc, piece } => {
                let tail = pieces[*arc].remove(piece + 1);
                let joined = &mut pieces[*arc][*piece];
                joined.push(v);
                joined.extend(tail);
            }
            Move::Image { vertex, extend } => {
                images[*vertex] = v;
                let incident = (0..h.arc_count()).filter(|&a| h.arcs()[a].0 == *vertex || h.arcs()[a].1 == *vertex);
                for (a, &grow) in incident.zip(extend) {
                    let ps = &mut pieces[a];
                    match (h.arcs()[a].0 == *vertex, grow) {
                        (true, false) => ps.insert(0, vec![v]),
                        (false, false) => ps.push(vec![v]),
                        (true, true) => ps[0].insert(0, v),
                        (false, true) => ps.last_mut().expect("piece to extend").push(v),
                    }
                }
            }
        }
    }
    let paths = pieces
        .into_iter()
        .map(|mut ps| {
            assert_eq!(ps.len(), 1, "accepted signature has one piece per arc");
            ps.pop().expect("one piece")
        })
        .collect();
    ModelMap { kind: ModelKind::Expansion, vertices: images, paths }
}
