//! Tie-breaking for the places where the algorithms may pick any eligible
//! candidate.

use std::fmt;
use std::str::FromStr;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// How arbitrary choices are resolved.
///
/// `Lexicographic` always takes the smallest candidate and sorts orderings.
/// `Seeded` draws from a ChaCha8 stream, so runs are reproducible per seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreakPolicy {
    #[default]
    Lexicographic,
    Seeded(u64),
}

impl TieBreakPolicy {
    pub fn chooser(self) -> Chooser {
        match self {
            TieBreakPolicy::Lexicographic => Chooser { rng: None },
            TieBreakPolicy::Seeded(seed) => Chooser {
                rng: Some(ChaCha8Rng::seed_from_u64(seed)),
            },
        }
    }
}

impl fmt::Display for TieBreakPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreakPolicy::Lexicographic => f.write_str("lex"),
            TieBreakPolicy::Seeded(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for TieBreakPolicy {
    type Err = String;

    /// Accepts `lex` or `random:<seed>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "lex" {
            return Ok(TieBreakPolicy::Lexicographic);
        }
        if let Some(seed) = s.strip_prefix("random:") {
            return seed
                .parse()
                .map(TieBreakPolicy::Seeded)
                .map_err(|_| format!("bad seed in policy `{s}`"));
        }
        Err(format!("unknown policy `{s}` (expected `lex` or `random:<seed>`)"))
    }
}

/// Running state of a [`TieBreakPolicy`].
#[derive(Debug, Clone)]
pub struct Chooser {
    rng: Option<ChaCha8Rng>,
}

impl Chooser {
    /// Picks one candidate, or `None` if there are none.
    pub fn pick<T: Copy + Ord>(&mut self, candidates: &[T]) -> Option<T> {
        match &mut self.rng {
            None => candidates.iter().min().copied(),
            Some(rng) => candidates.choose(rng).copied(),
        }
    }

    /// Picks from an ordered set, by position.
    pub fn pick_from_set<T: Copy + Ord>(&mut self, set: &std::collections::BTreeSet<T>) -> Option<T> {
        match &mut self.rng {
            None => set.first().copied(),
            Some(rng) if !set.is_empty() => {
                use rand::Rng;
                let i = rng.random_range(0..set.len());
                set.iter().nth(i).copied()
            }
            Some(_) => None,
        }
    }

    /// Puts `items` in policy order: sorted, or shuffled.
    pub fn order<T: Ord>(&mut self, items: &mut [T]) {
        match &mut self.rng {
            None => items.sort(),
            Some(rng) => {
                items.sort();
                items.shuffle(rng);
            }
        }
    }
}
