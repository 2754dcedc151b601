//! Greedy construction of a pseudo path factor.
//!
//! Each step takes the current `x` (F-degree at most 1), follows one of its
//! unassigned edges to an unscanned `y`, and commits all three edges at `y`
//! either to `F` (kept) or `U` (rejected). The case analysis on the F-degrees
//! of the other two neighbors of `y` keeps every component of `F` a path and
//! never leaves an `x` with F-degree at most 1 short of unassigned edges.

use std::collections::BTreeSet;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::factor::PseudoPathFactor;
use crate::graph::{check_biregular, components_as_paths, Bigraph, EdgeId, EdgeSubgraph, VertexId};
use crate::policy::{Chooser, TieBreakPolicy};

/// Which branch a step took.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepCase {
    /// The opening step at the first `y`.
    Start,
    /// Both other neighbors already have F-degree 2.
    BothFull,
    /// One other neighbor has F-degree 2, the other at most 1.
    OneFull,
    /// Some other neighbor has F-degree 0.
    OneEmpty,
    /// Both other neighbors have F-degree 1.
    BothHalf,
}

impl StepCase {
    pub fn label(self) -> &'static str {
        match self {
            StepCase::Start => "0",
            StepCase::BothFull => "1",
            StepCase::OneFull => "2",
            StepCase::OneEmpty => "3a",
            StepCase::BothHalf => "3b",
        }
    }
}

impl fmt::Display for StepCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// What one step committed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub index: usize,
    pub case: StepCase,
    pub y: VertexId,
    pub to_f: Vec<EdgeId>,
    pub to_u: Vec<EdgeId>,
    /// Current vertex handed to the next step; `None` once finished.
    pub next: Option<VertexId>,
}

impl StepRecord {
    /// `step <n> case <c> y<i> F:[..] U:[..]`
    pub fn render(&self, g: &Bigraph) -> String {
        let list = |edges: &[EdgeId]| {
            edges
                .iter()
                .map(|&e| {
                    let (y, x) = g.endpoints(e);
                    format!("{y}{x}")
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "step {} case {} {} F:[{}] U:[{}]",
            self.index,
            self.case,
            self.y,
            list(&self.to_f),
            list(&self.to_u)
        )
    }
}

/// Union-find over the components of `F`, with the two endpoints of each
/// component stored at its root.
#[derive(Debug, Clone)]
struct ComponentTracker {
    sets: UnionFind<usize>,
    ends: Vec<(usize, usize)>,
}

impl ComponentTracker {
    fn new(n: usize) -> Self {
        ComponentTracker {
            sets: UnionFind::new(n),
            ends: (0..n).map(|i| (i, i)).collect(),
        }
    }

    fn same(&self, a: usize, b: usize) -> bool {
        self.sets.find(a) == self.sets.find(b)
    }

    /// Joins two path ends with an edge.
    fn link(&mut self, a: usize, b: usize) -> Result<(), String> {
        let (ra, rb) = (self.sets.find(a), self.sets.find(b));
        if ra == rb {
            return Err("edge would close a cycle".into());
        }
        let far = |ends: (usize, usize), v: usize| match ends {
            (p, q) if p == v => Ok(q),
            (p, q) if q == v => Ok(p),
            _ => Err(format!("vertex {v} is not a path end")),
        };
        let fa = far(self.ends[ra], a)?;
        let fb = far(self.ends[rb], b)?;
        self.sets.union(ra, rb);
        let root = self.sets.find(ra);
        self.ends[root] = (fa, fb);
        Ok(())
    }
}

/// The evolving `(F, U)` pair together with scan status and the current `x`.
#[derive(Debug, Clone)]
pub struct FactorState<'g> {
    graph: &'g Bigraph,
    f: EdgeSubgraph<'g>,
    u: EdgeSubgraph<'g>,
    scanned: Vec<bool>,
    current: Option<usize>,
    tracker: ComponentTracker,
    steps: usize,
    /// `x` vertices with F-degree at most 1.
    open: BTreeSet<usize>,
}

impl<'g> FactorState<'g> {
    /// Initial state. Rejects multigraphs and graphs that are not
    /// (3,4)-biregular.
    pub fn new(graph: &'g Bigraph) -> Result<Self> {
        if !graph.is_simple() {
            return Err(Error::NotSimple);
        }
        check_biregular(graph)?;
        Ok(FactorState {
            graph,
            f: EdgeSubgraph::new(graph),
            u: EdgeSubgraph::new(graph),
            scanned: vec![false; graph.y_count()],
            current: None,
            tracker: ComponentTracker::new(graph.vertex_count()),
            steps: 0,
            open: (0..graph.x_count()).collect(),
        })
    }

    pub fn graph(&self) -> &'g Bigraph {
        self.graph
    }

    pub fn f(&self) -> &EdgeSubgraph<'g> {
        &self.f
    }

    pub fn u(&self) -> &EdgeSubgraph<'g> {
        &self.u
    }

    pub fn current(&self) -> Option<VertexId> {
        self.current.map(VertexId::x)
    }

    pub fn is_scanned(&self, y: VertexId) -> bool {
        self.scanned[y.index]
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// True once every `x` has F-degree 2.
    pub fn is_done(&self) -> bool {
        self.steps > 0 && self.open.is_empty()
    }

    fn is_initial(&self) -> bool {
        self.steps == 0 && self.f.is_empty() && self.u.is_empty()
    }

    /// Opening step: with `y0`'s neighbors in policy order `[x0, x1, w]`, put
    /// `w y0` and `y0 x0` in `F`, `y0 x1` in `U`, and make `x1` current.
    pub fn step_zero(&mut self, chooser: &mut Chooser) -> Result<StepRecord> {
        if !self.is_initial() {
            return Err(Error::Precondition("step zero on a non-initial state".into()));
        }
        let g = self.graph;
        let ys: Vec<VertexId> = g.y_vertices().collect();
        let y0 = chooser.pick(&ys).expect("graph has y vertices");
        let mut nbrs: Vec<(VertexId, EdgeId)> = g
            .incident(y0)
            .iter()
            .map(|&e| (g.other_end(e, y0), e))
            .collect();
        chooser.order(&mut nbrs);
        let [(_, e_x0), (x1, e_x1), (_, e_w)] = nbrs[..] else {
            return Err(self.defect(&format!("{y0} does not have three neighbors")));
        };
        for e in [e_w, e_x0] {
            self.add_to_f(e)?;
        }
        self.u.insert(e_x1);
        self.scanned[y0.index] = true;
        self.current = Some(x1.index);
        self.steps = 1;
        Ok(StepRecord {
            index: 0,
            case: StepCase::Start,
            y: y0,
            to_f: vec![e_w, e_x0],
            to_u: vec![e_x1],
            next: Some(x1),
        })
    }

    /// One step from the current `x`.
    pub fn step(&mut self, chooser: &mut Chooser) -> Result<StepRecord> {
        let g = self.graph;
        let xi = self
            .current()
            .ok_or_else(|| Error::Precondition("no current vertex".into()))?;
        if self.f.degree(xi) > 1 {
            return Err(self.defect(&format!("current {xi} already has F-degree 2")));
        }
        if self.u.degree(xi) > 2 {
            return Err(self.defect(&format!(
                "current {xi} has F-degree {} but U-degree {}",
                self.f.degree(xi),
                self.u.degree(xi)
            )));
        }

        let mut free = Vec::new();
        for &e in g.incident(xi) {
            if self.f.contains(e) || self.u.contains(e) {
                continue;
            }
            let y = g.other_end(e, xi);
            if self.scanned[y.index] {
                return Err(self.defect(&format!("unassigned edge {y}{xi} leads to scanned {y}")));
            }
            free.push((y, e));
        }
        let Some((yi, e_in)) = chooser.pick(&free) else {
            return Err(self.defect(&format!("current {xi} has no unassigned edge")));
        };

        let mut others: Vec<(VertexId, EdgeId)> = g
            .incident(yi)
            .iter()
            .filter(|&&e| e != e_in)
            .map(|&e| (g.other_end(e, yi), e))
            .collect();
        chooser.order(&mut others);
        let [a, b] = others[..] else {
            return Err(self.defect(&format!("{yi} does not have three neighbors")));
        };
        let (da, db) = (self.f.degree(a.0), self.f.degree(b.0));

        // (case, F edges, U edges, next current); `w1` is listed before `w2`.
        let (case, to_f, to_u, next) = match (da, db) {
            (2, 2) => (StepCase::BothFull, vec![e_in], vec![a.1, b.1], None),
            (2, _) => (StepCase::OneFull, vec![e_in], vec![a.1, b.1], Some(b.0)),
            (_, 2) => (StepCase::OneFull, vec![e_in], vec![b.1, a.1], Some(a.0)),
            (0, _) => (StepCase::OneEmpty, vec![e_in, a.1], vec![b.1], Some(b.0)),
            (_, 0) => (StepCase::OneEmpty, vec![e_in, b.1], vec![a.1], Some(a.0)),
            (1, 1) => {
                // yi joins xi's component, so yi-w closes a cycle iff w is
                // already in it.
                let xi_idx = g.vertex_index(xi);
                let (w1, w2) = if !self.tracker.same(g.vertex_index(a.0), xi_idx) {
                    (a, b)
                } else if !self.tracker.same(g.vertex_index(b.0), xi_idx) {
                    (b, a)
                } else {
                    return Err(self.defect(&format!(
                        "both {} and {} would close a cycle at {yi}",
                        a.0, b.0
                    )));
                };
                (StepCase::BothHalf, vec![e_in, w1.1], vec![w2.1], Some(w2.0))
            }
            _ => return Err(self.defect(&format!("F-degrees ({da}, {db}) exceed 2"))),
        };

        for &e in &to_f {
            self.add_to_f(e)?;
        }
        for &e in &to_u {
            self.u.insert(e);
        }
        self.scanned[yi.index] = true;
        self.current = match next {
            Some(w) => Some(w.index),
            None => chooser.pick_from_set(&self.open),
        };
        let index = self.steps;
        self.steps += 1;
        Ok(StepRecord {
            index,
            case,
            y: yi,
            to_f,
            to_u,
            next: self.current(),
        })
    }

    fn add_to_f(&mut self, e: EdgeId) -> Result<()> {
        let g = self.graph;
        let (y, x) = g.endpoints(e);
        if let Err(why) = self.tracker.link(g.vertex_index(y), g.vertex_index(x)) {
            return Err(self.defect(&format!("adding {y}{x} to F: {why}")));
        }
        self.f.insert(e);
        if self.f.degree(x) >= 2 {
            self.open.remove(&x.index);
        }
        Ok(())
    }

    /// Verifies every state invariant; `Err` is always a defect.
    pub fn check_invariants(&self) -> Result<()> {
        let g = self.graph;
        if let Some(e) = self.f.edges().find(|&e| self.u.contains(e)) {
            let (y, x) = g.endpoints(e);
            return Err(self.defect(&format!("{y}{x} is in both F and U")));
        }
        if !self.f.counters_consistent() || !self.u.counters_consistent() {
            return Err(self.defect("degree counters disagree with membership"));
        }
        if let Err(why) = components_as_paths(&self.f) {
            return Err(self.defect(&format!("F is not a union of paths: {why}")));
        }
        for y in g.y_vertices() {
            let (df, du) = (self.f.degree(y), self.u.degree(y));
            let scanned = self.scanned[y.index];
            if scanned != (df + du == g.degree(y)) || (!scanned && df + du != 0) {
                return Err(self.defect(&format!(
                    "{y} scanned={scanned} with F-degree {df}, U-degree {du}"
                )));
            }
        }
        for x in g.x_vertices() {
            let (df, du) = (self.f.degree(x), self.u.degree(x));
            if df <= 1 && du > 2 {
                return Err(self.defect(&format!("{x} has F-degree {df} and U-degree {du}")));
            }
            if (df <= 1) != self.open.contains(&x.index) {
                return Err(self.defect(&format!("open set out of sync at {x}")));
            }
        }
        if let Some(x) = self.current() {
            if self.f.degree(x) > 1 {
                return Err(self.defect(&format!("current {x} has F-degree 2")));
            }
        }
        Ok(())
    }

    fn defect(&self, what: &str) -> Error {
        let g = self.graph;
        let list = |s: &EdgeSubgraph<'_>| {
            s.edges()
                .map(|e| {
                    let (y, x) = g.endpoints(e);
                    format!("{y}{x}")
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        let scanned: Vec<String> = g
            .y_vertices()
            .filter(|y| self.scanned[y.index])
            .map(|y| y.to_string())
            .collect();
        Error::Defect(format!(
            "{what}\n  step={} current={:?}\n  F=[{}]\n  U=[{}]\n  scanned=[{}]",
            self.steps,
            self.current().map(|x| x.to_string()),
            list(&self.f),
            list(&self.u),
            scanned.join(",")
        ))
    }

    /// Converts a finished state into a validated pseudo path factor.
    pub fn finish(self) -> Result<PseudoPathFactor<'g>> {
        if !self.is_done() {
            return Err(Error::Precondition("construction has not finished".into()));
        }
        let f = self.f.clone();
        PseudoPathFactor::new(f)
            .map_err(|report| self.defect(&format!("result is not a pseudo path factor: {report}")))
    }
}

/// Builds a pseudo path factor of a simple (3,4)-biregular graph.
pub fn build_pseudo_factor(g: &Bigraph, policy: TieBreakPolicy) -> Result<PseudoPathFactor<'_>> {
    build_pseudo_factor_with(g, &mut policy.chooser(), false).map(|(pf, _)| pf)
}

/// Runs the construction with an existing chooser, returning the per-step
/// records. With `checked`, all state invariants are verified after every
/// step.
pub fn build_pseudo_factor_with<'g>(
    g: &'g Bigraph,
    chooser: &mut Chooser,
    checked: bool,
) -> Result<(PseudoPathFactor<'g>, Vec<StepRecord>)> {
    let mut state = FactorState::new(g)?;
    let mut records = vec![state.step_zero(chooser)?];
    if checked {
        state.check_invariants()?;
    }
    while !state.is_done() {
        if state.steps() > g.edge_count() {
            return Err(state.defect("step bound exceeded"));
        }
        let before = (state.f.len(), state.u.len());
        records.push(state.step(chooser)?);
        if checked {
            if state.f.len() <= before.0 || state.u.len() < before.1 {
                return Err(state.defect("F or U failed to grow"));
            }
            state.check_invariants()?;
        }
    }
    Ok((state.finish()?, records))
}
