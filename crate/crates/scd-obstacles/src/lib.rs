//! Obstacles to small cutwidth and pathwidth: degree, matching and backward
//! tangles, the lower bounds they certify, short jungles extracted from them,
//! and greedy embedding of small patterns into jungles.

pub mod certificate;
pub mod embed;
pub mod error;
pub mod jungle;
pub mod tangle;
pub mod thresholds;

pub use certificate::{format_obstacle, parse_obstacle, Obstacle};
pub use embed::embed_pattern;
pub use error::{ObstacleError, Violation};
pub use jungle::{
    immersion_jungle_from_backward_tangle, jungle_from_degree_tangle, jungle_from_matching_tangle, BackwardJungle,
    JungleKind, ShortJungle,
};
pub use tangle::{
    cutwidth_bound_from_backward_tangle, cutwidth_m, pathwidth_bound_from_degree_tangle,
    pathwidth_bound_from_matching_tangle, BackwardTangle, DegreeTangle, MatchingTangle,
};
pub use thresholds::Thresholds;
