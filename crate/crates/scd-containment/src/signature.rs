use std::collections::HashMap;

use scd_core::Pattern;

use crate::ContainmentError;

/// Where a pattern vertex sits relative to a separation (A,B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    /// Mapped to this separator vertex.
    At(usize),
    /// Mapped into A \ B.
    Forgotten,
    /// Mapped into B \ A, not yet seen.
    Unknown,
}

/// Endpoint of a maximal subpath inside A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    At(usize),
    Forgotten,
}

impl End {
    pub fn vertex(self) -> Option<usize> {
        match self {
            End::At(x) => Some(x),
            End::Forgotten => None,
        }
    }
}

/// How a partial expansion of H crosses a separation: images of the pattern
/// vertices, and for every arc the endpoints of the maximal pieces of its
/// path that lie inside A, in path order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub vmap: Vec<Slot>,
    pub amap: Vec<Vec<(End, End)>>,
}

pub const FORGOTTEN_CODE: u32 = u32::MAX - 1;
pub const UNKNOWN_CODE: u32 = u32::MAX;

impl Signature {
    /// Nothing placed yet: the only signature on (∅, V).
    pub fn initial(h: &Pattern) -> Self {
        Signature { vmap: vec![Slot::Unknown; h.vertex_count()], amap: vec![Vec::new(); h.arc_count()] }
    }

    /// A complete expansion seen from (V, ∅).
    pub fn accepting(h: &Pattern) -> Self {
        Signature {
            vmap: vec![Slot::Forgotten; h.vertex_count()],
            amap: vec![vec![(End::Forgotten, End::Forgotten)]; h.arc_count()],
        }
    }

    /// Vertex map, then per arc its length and pairs; separator vertices are
    /// written as indices into the sorted separator.
    pub fn encode(&self, separator: &[usize]) -> Vec<u32> {
        let idx = |x: usize| separator.binary_search(&x).expect("endpoint lies in the separator") as u32;
        let end = |e: End| match e {
            End::At(x) => idx(x),
            End::Forgotten => FORGOTTEN_CODE,
        };
        let mut out: Vec<u32> = self
            .vmap
            .iter()
            .map(|s| match *s {
                Slot::At(x) => idx(x),
                Slot::Forgotten => FORGOTTEN_CODE,
                Slot::Unknown => UNKNOWN_CODE,
            })
            .collect();
        for pairs in &self.amap {
            out.push(pairs.len() as u32);
            for &(b, e) in pairs {
                out.push(end(b));
                out.push(end(e));
            }
        }
        out
    }

    /// Checks the signature invariants against a sorted separator.
    pub fn is_valid(&self, h: &Pattern, separator: &[usize]) -> bool {
        if self.vmap.len() != h.vertex_count() || self.amap.len() != h.arc_count() {
            return false;
        }
        let in_sep = |x: usize| separator.binary_search(&x).is_ok();
        for (u, s) in self.vmap.iter().enumerate() {
            if let Slot::At(x) = *s {
                if !in_sep(x) || self.vmap[..u].contains(s) {
                    return false;
                }
            }
        }
        let owner = |x: usize| self.vmap.iter().position(|&s| s == Slot::At(x));
        // non-image endpoints with the (arc, pair) that holds them
        let mut seen: Vec<(usize, usize, usize)> = Vec::new();
        for (a, (&(u, w), pairs)) in h.arcs().iter().zip(&self.amap).enumerate() {
            let Some(last) = pairs.len().checked_sub(1) else {
                if self.vmap[u] != Slot::Unknown || self.vmap[w] != Slot::Unknown {
                    return false;
                }
                continue;
            };
            let start_ok = match self.vmap[u] {
                Slot::At(x) => pairs[0].0 == End::At(x),
                Slot::Forgotten => pairs[0].0 == End::Forgotten,
                Slot::Unknown => true,
            };
            let finish_ok = match self.vmap[w] {
                Slot::At(x) => pairs[last].1 == End::At(x),
                Slot::Forgotten => pairs[last].1 == End::Forgotten,
                Slot::Unknown => pairs[last].1 != End::Forgotten,
            };
            if !start_ok || !finish_ok || pairs[..last].iter().any(|p| p.1 == End::Forgotten) {
                return false;
            }
            for (i, &(b, e)) in pairs.iter().enumerate() {
                for x in [b, e].into_iter().filter_map(End::vertex) {
                    if !in_sep(x) {
                        return false;
                    }
                    match owner(x) {
                        Some(o) => {
                            if !((o == u && i == 0) || (o == w && i == last)) {
                                return false;
                            }
                        }
                        None => match seen.iter().find(|s| s.0 == x) {
                            Some(&(_, sa, si)) if (sa, si) != (a, i) => return false,
                            Some(_) => {}
                            None => seen.push((x, a, i)),
                        },
                    }
                }
            }
        }
        true
    }

    /// Renames `w` to FORGOTTEN everywhere.
    pub(crate) fn forget(&self, w: usize) -> Signature {
        let slot = |s: Slot| if s == Slot::At(w) { Slot::Forgotten } else { s };
        let end = |e: End| if e == End::At(w) { End::Forgotten } else { e };
        Signature {
            vmap: self.vmap.iter().map(|&s| slot(s)).collect(),
            amap: self.amap.iter().map(|ps| ps.iter().map(|&(b, e)| (end(b), end(e))).collect()).collect(),
        }
    }
}

/// (m+2)^(k+m+ℓ) · m^ℓ · m!, saturating, for k pattern vertices and ℓ arcs.
pub fn signature_bound(k: usize, ell: usize, m: usize) -> u128 {
    let base = m as u128 + 2;
    let mut bound = base.checked_pow((k + m + ell) as u32).unwrap_or(u128::MAX);
    bound = bound.saturating_mul((m as u128).checked_pow(ell as u32).unwrap_or(u128::MAX));
    for f in 2..=m as u128 {
        bound = bound.saturating_mul(f);
    }
    bound
}

/// Every valid signature of `h` on a separator, by generate-and-filter.
pub fn enumerate_signatures(
    separator: &[usize],
    h: &Pattern,
    budget: u128,
) -> Result<Vec<Signature>, ContainmentError> {
    let mut sep = separator.to_vec();
    sep.sort_unstable();
    sep.dedup();
    let bound = signature_bound(h.vertex_count(), h.arc_count(), sep.len());
    if bound > budget {
        return Err(ContainmentError::BudgetExceeded { bound, budget });
    }
    let mut slots: Vec<Slot> = sep.iter().map(|&x| Slot::At(x)).collect();
    slots.extend([Slot::Forgotten, Slot::Unknown]);
    let mut ends: Vec<End> = sep.iter().map(|&x| End::At(x)).collect();
    ends.push(End::Forgotten);

    let mut gen = Generator { h, sep: &sep, ends, sig: Signature::initial(h), used: HashMap::new(), out: Vec::new() };
    let k = h.vertex_count();
    let total = slots.len().pow(k as u32);
    for code in 0..total {
        let mut c = code;
        for u in 0..k {
            gen.sig.vmap[u] = slots[c % slots.len()];
            c /= slots.len();
        }
        let mut images: Vec<usize> =
            gen.sig.vmap.iter().filter_map(|s| if let Slot::At(x) = s { Some(*x) } else { None }).collect();
        images.sort_unstable();
        if images.windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        gen.arc(0);
    }
    Ok(gen.out)
}

struct Generator<'a> {
    h: &'a Pattern,
    sep: &'a [usize],
    ends: Vec<End>,
    sig: Signature,
    /// Non-image separator vertices already used as endpoints.
    used: HashMap<usize, usize>,
    out: Vec<Signature>,
}

impl Generator<'_> {
    fn image_owner(&self, x: usize) -> Option<usize> {
        self.sig.vmap.iter().position(|&s| s == Slot::At(x))
    }

    fn arc(&mut self, a: usize) {
        if a == self.h.arc_count() {
            if self.sig.is_valid(self.h, self.sep) {
                self.out.push(self.sig.clone());
            }
            return;
        }
        self.sig.amap[a].clear();
        self.arc(a + 1);
        self.pieces(a);
    }

    /// Appends one more pair to arc `a`. Only an end not used before can be followed by another pair.
    fn pieces(&mut self, a: usize) {
        let (u, w) = self.h.arcs()[a];
        let i = self.sig.amap[a].len();
        for bi in 0..self.ends.len() {
            for ei in 0..self.ends.len() {
                let (b, e) = (self.ends[bi], self.ends[ei]);
                let mut taken = Vec::new();
                let mut ok = true;
                for x in [b, e].into_iter().filter_map(End::vertex) {
                    if taken.contains(&x) {
                        continue;
                    }
                    match self.image_owner(x) {
                        Some(o) => ok &= (o == u && i == 0) || o == w,
                        None => {
                            ok &= !self.used.contains_key(&x);
                            taken.push(x);
                        }
                    }
                }
                if !ok {
                    continue;
                }
                for &x in &taken {
                    self.used.insert(x, a);
                }
                self.sig.amap[a].push((b, e));
                self.arc(a + 1);
                let fresh = |x: usize| taken.contains(&x) || (i == 0 && self.image_owner(x) == Some(u));
                if e.vertex().is_some_and(fresh) {
                    self.pieces(a);
                }
                self.sig.amap[a].pop();
                for x in taken {
                    self.used.remove(&x);
                }
            }
        }
    }
}
