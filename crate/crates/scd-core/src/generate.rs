//! Seeded instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::SemiCompleteDigraph;
use crate::error::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    /// Each pair oriented by a fair coin.
    Random,
    /// arc(v_i, v_j) iff i > j.
    Transitive,
    /// arc(i, j) iff j − i is a nonzero square mod n; n prime, n ≡ 3 (mod 4).
    QuadraticResidue,
    /// Transitive tournament with each arc reversed with probability p.
    TransitiveNoise(f64),
    /// Each pair becomes a digon with probability p, otherwise a fair coin.
    SemiComplete(f64),
}

impl std::str::FromStr for Model {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        let parse_p = |p: &str| {
            p.parse::<f64>()
                .ok()
                .filter(|p| (0.0..=1.0).contains(p))
                .ok_or_else(|| CoreError::BadParameter(format!("bad probability `{p}`")))
        };
        match s {
            "random" => Ok(Model::Random),
            "transitive" => Ok(Model::Transitive),
            "quadratic_residue" | "qr" => Ok(Model::QuadraticResidue),
            _ => {
                if let Some(p) = s.strip_prefix("transitive_noise:") {
                    Ok(Model::TransitiveNoise(parse_p(p)?))
                } else if let Some(p) = s.strip_prefix("semicomplete:") {
                    Ok(Model::SemiComplete(parse_p(p)?))
                } else {
                    Err(CoreError::BadParameter(format!("unknown model `{s}`")))
                }
            }
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn generate(model: Model, n: usize, seed: u64) -> Result<SemiCompleteDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = vec![vec![false; n]; n];
    match model {
        Model::Random => {
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(0.5) {
                        m[i][j] = true;
                    } else {
                        m[j][i] = true;
                    }
                }
            }
        }
        Model::Transitive => {
            for i in 0..n {
                for j in 0..i {
                    m[i][j] = true;
                }
            }
        }
        Model::QuadraticResidue => {
            if !is_prime(n) || n % 4 != 3 {
                return Err(CoreError::BadParameter(format!("quadratic_residue needs a prime n ≡ 3 (mod 4), got {n}")));
            }
            let mut square = vec![false; n];
            for x in 1..n {
                square[x * x % n] = true;
            }
            for i in 0..n {
                for j in 0..n {
                    m[i][j] = i != j && square[(j + n - i) % n];
                }
            }
        }
        Model::TransitiveNoise(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(CoreError::BadParameter(format!("probability {p}")));
            }
            for i in 0..n {
                for j in 0..i {
                    if rng.random_bool(p) {
                        m[j][i] = true;
                    } else {
                        m[i][j] = true;
                    }
                }
            }
        }
        Model::SemiComplete(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(CoreError::BadParameter(format!("probability {p}")));
            }
            for i in 0..n {
                for j in i + 1..n {
                    if rng.random_bool(p) {
                        m[i][j] = true;
                        m[j][i] = true;
                    } else if rng.random_bool(0.5) {
                        m[i][j] = true;
                    } else {
                        m[j][i] = true;
                    }
                }
            }
        }
    }
    SemiCompleteDigraph::build(n, &m)
}

/// Tournament on `n` vertices encoded by the bits of `code`, one bit per pair
/// i < j in lexicographic order (bit set means arc i → j).
pub fn tournament_from_code(n: usize, code: u64) -> SemiCompleteDigraph {
    let mut bit = 0;
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                m[i][j] = true;
            } else {
                m[j][i] = true;
            }
            bit += 1;
        }
    }
    SemiCompleteDigraph::build(n, &m).expect("every code yields a tournament")
}
