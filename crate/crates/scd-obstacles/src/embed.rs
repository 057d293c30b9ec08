use std::collections::HashSet;

use scd_core::{ModelKind, ModelMap, Pattern};

use crate::error::ObstacleError;
use crate::jungle::{JungleKind, ShortJungle};

/// Greedy model of `h` inside a (d·|H|, d)-short jungle: the first jungle
/// vertices become the images, and each arc takes the first stored path that
/// avoids everything used so far.
pub fn embed_pattern(jungle: &ShortJungle, h: &Pattern) -> Result<ModelMap, ObstacleError> {
    let need = jungle.d * h.size();
    if jungle.k < need || jungle.x.len() < h.vertex_count() {
        return Err(ObstacleError::PreconditionUnmet(format!(
            "pattern of size {} needs a ({need},{}) jungle, got ({},{}) on {} vertices",
            h.size(),
            jungle.d,
            jungle.k,
            jungle.d,
            jungle.x.len()
        )));
    }
    let images: Vec<usize> = jungle.x[..h.vertex_count()].to_vec();
    let mut used_vertices: HashSet<usize> = images.iter().copied().collect();
    let mut used_arcs: HashSet<(usize, usize)> = HashSet::new();
    let mut paths = Vec::with_capacity(h.arc_count());
    for &(a, b) in h.arcs() {
        let (v, w) = (images[a], images[b]);
        let chosen = jungle
            .paths(v, w)
            .iter()
            .find(|p| match jungle.kind {
                JungleKind::VertexDisjoint => p[1..p.len() - 1].iter().all(|x| !used_vertices.contains(x)),
                JungleKind::EdgeDisjoint => p.windows(2).all(|e| !used_arcs.contains(&(e[0], e[1]))),
            })
            .ok_or_else(|| {
                ObstacleError::InternalContradiction(format!("every stored path from {v} to {w} is blocked"))
            })?;
        used_vertices.extend(chosen[1..chosen.len() - 1].iter().copied());
        used_arcs.extend(chosen.windows(2).map(|e| (e[0], e[1])));
        paths.push(chosen.clone());
    }
    let kind = match jungle.kind {
        JungleKind::VertexDisjoint => ModelKind::Expansion,
        JungleKind::EdgeDisjoint => ModelKind::Immersion,
    };
    Ok(ModelMap { kind, vertices: images, paths })
}
