//! Seeded random instances and named fixtures.
//!
//! Random graphs come from the configuration model: three stubs per `y`, four
//! per `x`, matched by a seeded shuffle. Parallel edges are then removed by
//! double-edge swaps `(y1,x1),(y2,x2) -> (y1,x2),(y2,x1)`, each of which
//! preserves every degree. The distribution is not uniform; only validity and
//! reproducibility are promised.
//!
//! The random stream is ChaCha8 seeded with `seed_from_u64(seed)`. A restart
//! after a failed repair switches to stream `attempt` of the same seed.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Bigraph, X_DEGREE, Y_DEGREE};

/// Restarts allowed before [`generate`] gives up.
pub const MAX_ATTEMPTS: u64 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub k: usize,
    pub seed: u64,
    pub max_repair_rounds: usize,
}

impl GenConfig {
    pub fn new(k: usize, seed: u64) -> Self {
        GenConfig {
            k,
            seed,
            max_repair_rounds: 1000,
        }
    }
}

/// A simple (3,4)-biregular graph with `4k` y-vertices and `3k` x-vertices,
/// edges in canonical order. Deterministic in `(k, seed)`.
pub fn generate(cfg: &GenConfig) -> Result<Bigraph> {
    if cfg.k == 0 {
        return Err(Error::Generation("k must be at least 1".into()));
    }
    if cfg.max_repair_rounds == 0 {
        return Err(Error::Generation("max_repair_rounds must be positive".into()));
    }
    let (y_count, x_count) = (4 * cfg.k, 3 * cfg.k);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for attempt in 0..MAX_ATTEMPTS {
        rng.set_stream(attempt);
        rng.set_word_pos(0);
        let mut edges = pair_stubs(y_count, x_count, &mut rng);
        if repair(&mut edges, cfg.max_repair_rounds, &mut rng) {
            edges.sort_unstable();
            return Bigraph::new(y_count, x_count, edges);
        }
    }
    Err(Error::Generation(format!(
        "could not remove parallel edges for k = {} seed = {} after {MAX_ATTEMPTS} attempts",
        cfg.k, cfg.seed
    )))
}

fn pair_stubs(y_count: usize, x_count: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut x_stubs: Vec<usize> = (0..x_count)
        .flat_map(|x| std::iter::repeat_n(x, X_DEGREE))
        .collect();
    x_stubs.shuffle(rng);
    (0..y_count)
        .flat_map(|y| std::iter::repeat_n(y, Y_DEGREE))
        .zip(x_stubs)
        .collect()
}

/// Swaps parallel edges away. Returns `false` if some remain after
/// `max_rounds` swap attempts.
fn repair(edges: &mut [(usize, usize)], max_rounds: usize, rng: &mut ChaCha8Rng) -> bool {
    let mut mult: HashMap<(usize, usize), usize> = HashMap::new();
    for &e in edges.iter() {
        *mult.entry(e).or_default() += 1;
    }
    let mut rounds = 0;
    loop {
        let parallel: Vec<usize> = (0..edges.len())
            .filter(|&i| mult[&edges[i]] > 1)
            .collect();
        if parallel.is_empty() {
            return true;
        }
        if rounds == max_rounds {
            return false;
        }
        rounds += 1;
        let i = parallel[rng.random_range(0..parallel.len())];
        let j = rng.random_range(0..edges.len());
        let ((y1, x1), (y2, x2)) = (edges[i], edges[j]);
        if y1 == y2 || x1 == x2 || mult.contains_key(&(y1, x2)) || mult.contains_key(&(y2, x1)) {
            continue;
        }
        for old in [(y1, x1), (y2, x2)] {
            let n = mult.get_mut(&old).unwrap();
            *n -= 1;
            if *n == 0 {
                mult.remove(&old);
            }
        }
        edges[i] = (y1, x2);
        edges[j] = (y2, x1);
        *mult.entry(edges[i]).or_default() += 1;
        *mult.entry(edges[j]).or_default() += 1;
        debug_assert!(degrees_intact(edges));
    }
}

fn degrees_intact(edges: &[(usize, usize)]) -> bool {
    let mut y_deg: HashMap<usize, usize> = HashMap::new();
    let mut x_deg: HashMap<usize, usize> = HashMap::new();
    for &(y, x) in edges {
        *y_deg.entry(y).or_default() += 1;
        *x_deg.entry(x).or_default() += 1;
    }
    y_deg.values().all(|&d| d == Y_DEGREE) && x_deg.values().all(|&d| d == X_DEGREE)
}

/// Named instances: `k34` (the complete bipartite graph K_{3,4}) and
/// `counterexample`, the multigraph made of three triple edges `y_i x_{i-1}`
/// (i = 1..3) plus `y0` joined once to each `x`. The latter has no path
/// factor with degree-3 endpoints.
pub fn fixture(name: &str) -> Result<Bigraph> {
    match name {
        "k34" => Bigraph::new(4, 3, (0..4).flat_map(|y| (0..3).map(move |x| (y, x))).collect()),
        "counterexample" => {
            let mut edges = vec![(0, 0), (0, 1), (0, 2)];
            for i in 1..=3 {
                edges.extend(std::iter::repeat_n((i, i - 1), 3));
            }
            Bigraph::new(4, 3, edges)
        }
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

pub const FIXTURES: [&str; 2] = ["k34", "counterexample"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{check_biregular, VertexId};

    #[test]
    fn k1_is_always_k34() {
        let k34 = fixture("k34").unwrap();
        for seed in 0..200 {
            assert_eq!(generate(&GenConfig::new(1, seed)).unwrap(), k34, "seed {seed}");
        }
    }

    #[test]
    fn seed_seven_k2() {
        let g = generate(&GenConfig::new(2, 7)).unwrap();
        assert_eq!(check_biregular(&g), Ok(2));
        assert!(g.is_simple());
        assert!(g.is_canonical());
    }

    #[test]
    fn deterministic() {
        let cfg = GenConfig::new(9, 123);
        assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
        assert_ne!(
            generate(&cfg).unwrap(),
            generate(&GenConfig::new(9, 124)).unwrap()
        );
    }

    #[test]
    fn bad_configs() {
        assert!(matches!(generate(&GenConfig::new(0, 1)), Err(Error::Generation(_))));
        let cfg = GenConfig {
            max_repair_rounds: 0,
            ..GenConfig::new(2, 1)
        };
        assert!(generate(&cfg).is_err());
    }

    #[test]
    fn fixtures() {
        let bad = fixture("counterexample").unwrap();
        assert!(!bad.is_simple());
        assert_eq!(bad.edge_count(), 12);
        assert_eq!(check_biregular(&bad), Ok(1));
        for y in bad.y_vertices() {
            assert_eq!(bad.degree(y), 3);
        }
        for x in bad.x_vertices() {
            assert_eq!(bad.degree(x), 4);
        }
        assert_eq!(bad.incident(VertexId::y(2)).len(), 3);
        assert_eq!(fixture("k34").unwrap().edge_count(), 12);
        assert!(matches!(fixture("bogus"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn swaps_preserve_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut edges = pair_stubs(40, 30, &mut rng);
        assert!(degrees_intact(&edges));
        assert!(repair(&mut edges, 1000, &mut rng));
        assert!(degrees_intact(&edges));
        let g = Bigraph::new(40, 30, edges).unwrap();
        assert!(g.is_simple());
    }
}
