//! Text format for obstacle certificates.
//!
//! ```text
//! DEGREE_TANGLE k ell        MATCHING_TANGLE k ell      BACKWARD_TANGLE k     JUNGLE k d kind
//! x1 x2 ...                  x1 y1                      x1 x2 ...             x1 x2 ...
//!                            x2 y2                      y1 y2 ...             PAIR v w
//!                            ...                                              v a b w
//! ```

use std::collections::BTreeMap;

use scd_core::SemiCompleteDigraph;

use crate::error::{ObstacleError, Violation};
use crate::jungle::{JungleKind, ShortJungle};
use crate::tangle::{BackwardTangle, DegreeTangle, MatchingTangle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstacle {
    Degree(DegreeTangle),
    Matching(MatchingTangle),
    Backward(BackwardTangle),
    Jungle(ShortJungle),
}

impl Obstacle {
    pub fn verify(&self, t: &SemiCompleteDigraph) -> Result<(), Violation> {
        match self {
            Obstacle::Degree(o) => o.verify(t),
            Obstacle::Matching(o) => o.verify(t),
            Obstacle::Backward(o) => o.verify(t),
            Obstacle::Jungle(o) => o.verify(t),
        }
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn format_obstacle(o: &Obstacle) -> String {
    let mut s = String::new();
    match o {
        Obstacle::Degree(d) => {
            s += &format!("DEGREE_TANGLE {} {}\n{}\n", d.k, d.ell, join(&d.x));
        }
        Obstacle::Matching(m) => {
            s += &format!("MATCHING_TANGLE {} {}\n", m.k, m.ell);
            for (x, y) in m.x.iter().zip(&m.y) {
                s += &format!("{x} {y}\n");
            }
        }
        Obstacle::Backward(b) => {
            s += &format!("BACKWARD_TANGLE {}\n{}\n{}\n", b.k, join(&b.x), join(&b.y));
        }
        Obstacle::Jungle(j) => {
            s += &format!("JUNGLE {} {} {}\n{}\n", j.k, j.d, j.kind.as_str(), join(&j.x));
            for ((v, w), family) in &j.paths {
                s += &format!("PAIR {v} {w}\n");
                for p in family {
                    s += &join(p);
                    s.push('\n');
                }
            }
        }
    }
    s
}

fn err(line: usize, msg: impl Into<String>) -> ObstacleError {
    ObstacleError::Parse { line, msg: msg.into() }
}

fn nums(line: &str, ln: usize) -> Result<Vec<usize>, ObstacleError> {
    line.split_whitespace().map(|tok| tok.parse().map_err(|_| err(ln, format!("bad number `{tok}`")))).collect()
}

fn header_args(tokens: &[&str], count: usize, ln: usize) -> Result<Vec<usize>, ObstacleError> {
    if tokens.len() != count + 1 {
        return Err(err(ln, format!("`{}` takes {count} arguments", tokens[0])));
    }
    nums(&tokens[1..].join(" "), ln)
}

pub fn parse_obstacle(text: &str) -> Result<Obstacle, ObstacleError> {
    let lines: Vec<&str> = text.lines().collect();
    let header = lines.first().ok_or_else(|| err(1, "empty certificate"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let line = |i: usize| lines.get(i).copied().unwrap_or("");
    match tokens.first().copied() {
        Some("DEGREE_TANGLE") => {
            let a = header_args(&tokens, 2, 1)?;
            Ok(Obstacle::Degree(DegreeTangle { x: nums(line(1), 2)?, k: a[0], ell: a[1] }))
        }
        Some("MATCHING_TANGLE") => {
            let a = header_args(&tokens, 2, 1)?;
            let (mut x, mut y) = (Vec::new(), Vec::new());
            for (i, l) in lines.iter().enumerate().skip(1) {
                if l.trim().is_empty() {
                    continue;
                }
                let pair = nums(l, i + 1)?;
                if pair.len() != 2 {
                    return Err(err(i + 1, "expected a pair `x y`"));
                }
                x.push(pair[0]);
                y.push(pair[1]);
            }
            Ok(Obstacle::Matching(MatchingTangle { x, y, k: a[0], ell: a[1] }))
        }
        Some("BACKWARD_TANGLE") => {
            let a = header_args(&tokens, 1, 1)?;
            Ok(Obstacle::Backward(BackwardTangle { x: nums(line(1), 2)?, y: nums(line(2), 3)?, k: a[0] }))
        }
        Some("JUNGLE") => {
            if tokens.len() != 4 {
                return Err(err(1, "`JUNGLE` takes k, d and kind"));
            }
            let a = nums(&tokens[1..3].join(" "), 1)?;
            let kind = match tokens[3] {
                "vertex_disjoint" => JungleKind::VertexDisjoint,
                "edge_disjoint" => JungleKind::EdgeDisjoint,
                other => return Err(err(1, format!("unknown jungle kind `{other}`"))),
            };
            let x = nums(line(1), 2)?;
            let mut paths: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
            let mut current: Option<(usize, usize)> = None;
            for (i, l) in lines.iter().enumerate().skip(2) {
                let l = l.trim();
                if l.is_empty() {
                    continue;
                }
                if let Some(rest) = l.strip_prefix("PAIR") {
                    let vw = nums(rest, i + 1)?;
                    if vw.len() != 2 {
                        return Err(err(i + 1, "expected `PAIR v w`"));
                    }
                    current = Some((vw[0], vw[1]));
                    paths.entry((vw[0], vw[1])).or_default();
                } else {
                    let key = current.ok_or_else(|| err(i + 1, "path before any `PAIR` header"))?;
                    paths.get_mut(&key).expect("entry created").push(nums(l, i + 1)?);
                }
            }
            Ok(Obstacle::Jungle(ShortJungle { x, k: a[0], d: a[1], kind, paths }))
        }
        _ => Err(err(1, format!("unknown certificate kind `{}`", header.trim()))),
    }
}
