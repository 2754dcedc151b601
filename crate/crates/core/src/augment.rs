//! Absorbing uncovered `y` vertices into a pseudo path factor, and the full
//! solver built on it.
//!
//! From an uncovered `y0` the trail alternates a non-F edge into some `x` and
//! an F edge out of it. While the `x` reached sits on a length-2 path the trail
//! continues from that path's other end; once it reaches an `x` on a path of
//! length at least 4 it leaves through an interior `y` and stops. Swapping F
//! and non-F edges along the trail covers `y0`, keeps every `x` at degree 2,
//! and never lengthens the longest path.

use std::collections::BTreeSet;

use crate::builder::build_pseudo_factor_with;
use crate::error::{Error, Result};
use crate::factor::{PathFactor, PseudoPathFactor};
use crate::graph::{Bigraph, EdgeId, VertexId};
use crate::oracle::{validate_path_factor, validate_pseudo_factor};
use crate::policy::{Chooser, TieBreakPolicy};

/// `y0 -> x1 -> y1 -> ... -> x_{i+1} -> y_{i+1}`; edges at even positions are
/// outside F, edges at odd positions are in F.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AugmentingTrail {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl AugmentingTrail {
    pub(crate) fn from_parts(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        debug_assert_eq!(vertices.len(), edges.len() + 1);
        AugmentingTrail { vertices, edges }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn origin(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn terminal(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// Number of edges, always `2(i + 1)`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// How many length-2 paths the trail passes through before its last `x`.
    pub fn passes(&self) -> usize {
        self.edges.len() / 2 - 1
    }

    /// Checks the trail against `pf`: alternation, distinct edges, distinct
    /// intermediate `y`s, intermediate `x`s on length-2 paths, and a terminal
    /// `x` on a longer path left through a `y` of F-degree 2.
    pub fn check(&self, pf: &PseudoPathFactor<'_>) -> Result<(), String> {
        let g = pf.graph();
        let n = self.edges.len();
        if n < 2 || n % 2 == 1 || self.vertices.len() != n + 1 {
            return Err(format!("trail has {n} edges"));
        }
        if pf.degree(self.origin()) != 0 {
            return Err(format!("origin {} is covered", self.origin()));
        }
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err("trail repeats an edge".into());
        }
        for (j, &e) in self.edges.iter().enumerate() {
            let (a, b) = (self.vertices[j], self.vertices[j + 1]);
            let (y, x) = g.endpoints(e);
            if !((a, b) == (y, x) || (a, b) == (x, y)) {
                return Err(format!("edge {e} does not join {a} and {b}"));
            }
            if pf.contains(e) != (j % 2 == 1) {
                return Err(format!("edge {a}{b} at position {j} breaks alternation"));
            }
        }
        let inner_ys: Vec<VertexId> = self.vertices[2..n].iter().step_by(2).copied().collect();
        let mut sorted = inner_ys.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != inner_ys.len() {
            return Err("intermediate y vertices repeat".into());
        }
        for &x in self.vertices[1..n - 1].iter().step_by(2) {
            if pf.component_len(x) != 2 {
                return Err(format!("{x} is not on a length-2 path"));
            }
        }
        let last_x = self.vertices[n - 1];
        if pf.component_len(last_x) < 4 || pf.degree(self.terminal()) != 2 {
            return Err(format!(
                "terminal {} -> {} is not a length-4+ exit",
                last_x,
                self.terminal()
            ));
        }
        Ok(())
    }
}

/// Builds the augmenting trail from the uncovered `y0`, resolving each choice
/// of edge through `chooser`.
pub fn find_trail(
    pf: &PseudoPathFactor<'_>,
    y0: VertexId,
    chooser: &mut Chooser,
) -> Result<AugmentingTrail> {
    let g = pf.graph();
    if !y0.is_y() || !g.contains_vertex(y0) || pf.degree(y0) != 0 {
        return Err(Error::Precondition(format!("{y0} is not an uncovered y vertex")));
    }
    let mut vertices = vec![y0];
    let mut edges: Vec<EdgeId> = Vec::new();
    let mut used = BTreeSet::new();
    let mut seen_y = BTreeSet::new();
    let mut y = y0;
    loop {
        if edges.len() >= g.edge_count() {
            return Err(Error::Defect(format!("trail from {y0} does not terminate")));
        }
        let out: Vec<(VertexId, EdgeId)> = g
            .incident(y)
            .iter()
            .filter(|&&e| !pf.contains(e) && !used.contains(&e))
            .map(|&e| (g.other_end(e, y), e))
            .collect();
        let Some((x, e)) = chooser.pick(&out) else {
            return Err(Error::Defect(format!(
                "no unused non-F edge at {y} on the trail from {y0}"
            )));
        };
        used.insert(e);
        vertices.push(x);
        edges.push(e);

        let long = pf.component_len(x) >= 4;
        let exits: Vec<(VertexId, EdgeId)> = g
            .incident(x)
            .iter()
            .filter(|&&f| pf.contains(f) && !used.contains(&f))
            .map(|&f| (g.other_end(f, x), f))
            .filter(|&(next, _)| {
                if long {
                    pf.degree(next) == 2
                } else {
                    !seen_y.contains(&next)
                }
            })
            .collect();
        let Some((next, f)) = chooser.pick(&exits) else {
            return Err(Error::Defect(format!(
                "no admissible F edge out of {x} on the trail from {y0}"
            )));
        };
        used.insert(f);
        vertices.push(next);
        edges.push(f);
        if long {
            return Ok(AugmentingTrail { vertices, edges });
        }
        seen_y.insert(next);
        y = next;
    }
}

/// Swaps F and non-F edges along `trail`, covering its origin.
pub fn rewire<'g>(
    mut pf: PseudoPathFactor<'g>,
    trail: &AugmentingTrail,
) -> Result<PseudoPathFactor<'g>> {
    trail.check(&pf).map_err(Error::Precondition)?;
    let covered = pf.covered_count();
    let longest = pf.max_path_len();
    let remove: Vec<EdgeId> = trail.edges.iter().skip(1).step_by(2).copied().collect();
    let add: Vec<EdgeId> = trail.edges.iter().step_by(2).copied().collect();
    pf.swap_edges(&remove, &add, &trail.vertices)?;
    if pf.covered_count() != covered + 1 {
        return Err(Error::Defect(format!(
            "covered count went from {covered} to {} after rewiring",
            pf.covered_count()
        )));
    }
    if pf.max_path_len() > longest {
        return Err(Error::Defect(format!(
            "longest path grew from {longest} to {} after rewiring",
            pf.max_path_len()
        )));
    }
    Ok(pf)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Re-verify every invariant after every step and every rewiring.
    pub checked: bool,
    /// Collect human-readable trace lines.
    pub trace: bool,
}

impl SolveOptions {
    pub fn checked() -> Self {
        SolveOptions {
            checked: true,
            trace: false,
        }
    }
}

/// One absorbed vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentRecord {
    pub y0: VertexId,
    pub trail_len: usize,
    pub covered_before: usize,
    pub covered_after: usize,
    pub max_path_before: usize,
    pub max_path_after: usize,
}

impl AugmentRecord {
    /// `augment y<i> trail_len <n> max_path <m>`
    pub fn render(&self) -> String {
        format!(
            "augment {} trail_len {} max_path {}",
            self.y0, self.trail_len, self.max_path_after
        )
    }
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub factor: PathFactor,
    /// Longest path of the pseudo path factor before any augmentation.
    pub initial_max_path: usize,
    pub augmentations: Vec<AugmentRecord>,
    pub trace: Vec<String>,
}

/// Finds a path factor whose paths all end in `Y`.
pub fn solve(g: &Bigraph, policy: TieBreakPolicy) -> Result<PathFactor> {
    solve_with(g, policy, SolveOptions::default()).map(|out| out.factor)
}

pub fn solve_with(g: &Bigraph, policy: TieBreakPolicy, opts: SolveOptions) -> Result<SolveOutcome> {
    let mut chooser = policy.chooser();
    let (mut pf, steps) = build_pseudo_factor_with(g, &mut chooser, opts.checked)?;
    let mut trace = Vec::new();
    if opts.trace {
        trace.extend(steps.iter().map(|r| r.render(g)));
    }
    let initial_max_path = pf.max_path_len();
    let mut uncovered: BTreeSet<usize> = pf.uncovered().map(|y| y.index).collect();
    let mut augmentations = Vec::with_capacity(uncovered.len());

    while let Some(y0) = chooser.pick_from_set(&uncovered).map(VertexId::y) {
        if augmentations.len() >= g.y_count() {
            return Err(Error::Defect("augmentation loop did not terminate".into()));
        }
        let max_path_before = pf.max_path_len();
        if max_path_before < 4 {
            return Err(Error::Defect(format!(
                "{y0} is uncovered but no component has length 4 or more"
            )));
        }
        let covered_before = pf.covered_count();
        let trail = find_trail(&pf, y0, &mut chooser)?;
        pf = rewire(pf, &trail)?;
        if opts.checked {
            let report = validate_pseudo_factor(g, pf.subgraph());
            if !report.is_valid() {
                return Err(Error::Defect(format!(
                    "rewiring at {y0} broke the pseudo path factor:\n{report}"
                )));
            }
        }
        uncovered.remove(&y0.index);
        let record = AugmentRecord {
            y0,
            trail_len: trail.len(),
            covered_before,
            covered_after: pf.covered_count(),
            max_path_before,
            max_path_after: pf.max_path_len(),
        };
        if opts.trace {
            trace.push(record.render());
        }
        augmentations.push(record);
    }

    let factor = pf.into_path_factor()?;
    let report = validate_path_factor(g, &factor);
    if !report.is_valid() {
        return Err(Error::Defect(format!("final factor is invalid:\n{report}")));
    }
    Ok(SolveOutcome {
        factor,
        initial_max_path,
        augmentations,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::build_pseudo_factor;
    use crate::generate::{fixture, generate, GenConfig};
    use crate::oracle::brute_force_trails;

    fn lex() -> Chooser {
        TieBreakPolicy::Lexicographic.chooser()
    }

    #[test]
    fn k34_never_augments() {
        let g = fixture("k34").unwrap();
        let out = solve_with(&g, TieBreakPolicy::Lexicographic, SolveOptions::checked()).unwrap();
        assert!(out.augmentations.is_empty());
        assert_eq!(out.factor.path_count(), 1);
        assert_eq!(out.factor.paths()[0].len(), 7);
    }

    #[test]
    fn seed_seven_trail_matches_enumeration() {
        let g = generate(&GenConfig::new(2, 7)).unwrap();
        let pf = build_pseudo_factor(&g, TieBreakPolicy::Lexicographic).unwrap();
        for y0 in pf.uncovered().collect::<Vec<_>>() {
            let trail = find_trail(&pf, y0, &mut lex()).unwrap();
            trail.check(&pf).unwrap();
            let all = brute_force_trails(&pf, y0).unwrap();
            assert!(all.contains(&trail), "{trail:?} not among {} trails", all.len());
        }
    }

    #[test]
    fn direct_and_extended_trails_both_occur() {
        let (mut direct, mut extended) = (0, 0);
        for seed in 0..200 {
            let g = generate(&GenConfig::new(5, seed)).unwrap();
            let pf = build_pseudo_factor(&g, TieBreakPolicy::Lexicographic).unwrap();
            for y0 in pf.uncovered().collect::<Vec<_>>() {
                let trail = find_trail(&pf, y0, &mut lex()).unwrap();
                trail.check(&pf).unwrap();
                let v = trail.vertices();
                if trail.passes() == 0 {
                    // the first x already lies on a long path
                    assert!(pf.component_len(v[1]) >= 4);
                    assert_eq!(pf.degree(v[2]), 2);
                    direct += 1;
                } else {
                    assert_eq!(pf.component_len(v[1]), 2);
                    assert_eq!(pf.degree(v[2]), 1);
                    extended += 1;
                }
            }
        }
        assert!(direct > 0 && extended > 0, "direct {direct}, extended {extended}");
    }

    #[test]
    fn rewire_swaps_along_the_trail() {
        let mut short_seen = false;
        for seed in 0..100 {
            let g = generate(&GenConfig::new(4, seed)).unwrap();
            let pf = build_pseudo_factor(&g, TieBreakPolicy::Lexicographic).unwrap();
            let Some(y0) = pf.uncovered().next() else { continue };
            let trail = find_trail(&pf, y0, &mut lex()).unwrap();
            let before: BTreeSet<EdgeId> = pf.subgraph().edges().collect();
            let covered = pf.covered_count();
            let after_pf = rewire(pf, &trail).unwrap();
            let after: BTreeSet<EdgeId> = after_pf.subgraph().edges().collect();
            assert_eq!(before.len(), after.len());
            assert_eq!(after_pf.covered_count(), covered + 1);
            assert!(after_pf.is_covered(y0));
            let mut expected = before.clone();
            for (j, &e) in trail.edges().iter().enumerate() {
                if j % 2 == 1 {
                    assert!(expected.remove(&e));
                } else {
                    assert!(expected.insert(e));
                }
            }
            assert_eq!(expected, after);
            if trail.len() == 2 {
                short_seen = true;
                let [e0, e1] = trail.edges()[..] else { unreachable!() };
                let mut f = before;
                f.remove(&e1);
                f.insert(e0);
                assert_eq!(f, after);
            }
            assert!(validate_pseudo_factor(&g, after_pf.subgraph()).is_valid());
        }
        assert!(short_seen);
    }

    #[test]
    fn rewire_rejects_stale_trail() {
        for seed in 0..50 {
            let g = generate(&GenConfig::new(4, seed)).unwrap();
            let pf = build_pseudo_factor(&g, TieBreakPolicy::Lexicographic).unwrap();
            let Some(y0) = pf.uncovered().next() else { continue };
            let trail = find_trail(&pf, y0, &mut lex()).unwrap();
            let pf = rewire(pf, &trail).unwrap();
            assert!(matches!(rewire(pf, &trail), Err(Error::Precondition(_))));
            return;
        }
        panic!("no instance with an uncovered vertex");
    }

    #[test]
    fn find_trail_needs_uncovered_origin() {
        let g = fixture("k34").unwrap();
        let pf = build_pseudo_factor(&g, TieBreakPolicy::Lexicographic).unwrap();
        assert!(matches!(
            find_trail(&pf, VertexId::y(0), &mut lex()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn solve_counts() {
        for k in [1, 2, 3, 7] {
            for seed in 0..20 {
                let g = generate(&GenConfig::new(k, seed)).unwrap();
                let out = solve_with(&g, TieBreakPolicy::Seeded(seed), SolveOptions::checked()).unwrap();
                assert_eq!(out.factor.path_count(), k);
                assert_eq!(out.factor.edge_count(), 6 * k);
                assert!(out.factor.lengths().all(|l| l % 2 == 0 && l >= 2));
                assert!(out.augmentations.len() < k);
                for r in &out.augmentations {
                    assert_eq!(r.covered_after, r.covered_before + 1);
                    assert!(r.max_path_after <= r.max_path_before);
                }
            }
        }
    }

    #[test]
    fn solve_rejects_multigraph() {
        let g = fixture("counterexample").unwrap();
        assert!(matches!(solve(&g, TieBreakPolicy::Lexicographic), Err(Error::NotSimple)));
    }

    #[test]
    fn trace_lines() {
        let g = generate(&GenConfig::new(6, 3)).unwrap();
        let opts = SolveOptions { checked: true, trace: true };
        let out = solve_with(&g, TieBreakPolicy::Lexicographic, opts).unwrap();
        assert!(out.trace[0].starts_with("step 0 case 0 "));
        let augments: Vec<&String> = out.trace.iter().filter(|l| l.starts_with("augment ")).collect();
        assert_eq!(augments.len(), out.augmentations.len());
        for (line, r) in augments.iter().zip(&out.augmentations) {
            assert_eq!(**line, format!("augment {} trail_len {} max_path {}", r.y0, r.trail_len, r.max_path_after));
        }
    }
}
