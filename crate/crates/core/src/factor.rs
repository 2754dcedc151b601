//! Pseudo path factors and path factors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{components_as_paths, Bigraph, EdgeId, EdgeSubgraph, VertexId};
use crate::oracle::{validate_pseudo_factor, ValidationReport};

const NO_COMPONENT: usize = usize::MAX;

/// An edge subgraph in which every `x` has degree 2 and every component is a
/// path of even length, i.e. both ends lie in `Y`. It need not touch every `y`.
///
/// Component membership and lengths are cached and refreshed locally whenever
/// edges are swapped, so length queries during augmentation are O(1).
#[derive(Debug, Clone)]
pub struct PseudoPathFactor<'g> {
    f: EdgeSubgraph<'g>,
    component: Vec<usize>,
    component_len: Vec<usize>,
    /// Length -> number of live components with that length.
    lengths: BTreeMap<usize, usize>,
    covered: usize,
}

impl<'g> PseudoPathFactor<'g> {
    /// Wraps `f` after checking it against the pseudo path factor rules.
    pub fn new(f: EdgeSubgraph<'g>) -> Result<Self, ValidationReport> {
        let report = validate_pseudo_factor(f.graph(), &f);
        if !report.is_valid() {
            return Err(report);
        }
        let g = f.graph();
        let covered = g.y_vertices().filter(|&y| f.degree(y) > 0).count();
        let mut pf = PseudoPathFactor {
            component: vec![NO_COMPONENT; g.vertex_count()],
            component_len: Vec::new(),
            lengths: BTreeMap::new(),
            covered,
            f,
        };
        let all: Vec<VertexId> = g.vertices().collect();
        pf.relabel(&all)
            .expect("validated factor has path components");
        Ok(pf)
    }

    pub fn graph(&self) -> &'g Bigraph {
        self.f.graph()
    }

    pub fn subgraph(&self) -> &EdgeSubgraph<'g> {
        &self.f
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.f.contains(e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.f.degree(v)
    }

    pub fn edge_count(&self) -> usize {
        self.f.len()
    }

    /// `|V_F|`: how many `y` have positive degree.
    pub fn covered_count(&self) -> usize {
        self.covered
    }

    pub fn is_covered(&self, y: VertexId) -> bool {
        self.f.degree(y) > 0
    }

    pub fn uncovered(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.graph().y_vertices().filter(|&y| self.f.degree(y) == 0)
    }

    pub fn first_uncovered(&self) -> Option<VertexId> {
        self.uncovered().next()
    }

    pub fn is_spanning(&self) -> bool {
        self.covered == self.graph().y_count()
    }

    /// Edge count of the component holding `v`; 0 for an uncovered vertex.
    pub fn component_len(&self, v: VertexId) -> usize {
        match self.component[self.graph().vertex_index(v)] {
            NO_COMPONENT => 0,
            c => self.component_len[c],
        }
    }

    pub fn max_path_len(&self) -> usize {
        self.lengths.keys().next_back().copied().unwrap_or(0)
    }

    pub fn component_count(&self) -> usize {
        self.lengths.values().sum()
    }

    /// Canonical path list.
    pub fn paths(&self) -> Vec<Vec<VertexId>> {
        components_as_paths(&self.f).expect("pseudo path factor components are paths")
    }

    /// Replaces `remove` by `add` and refreshes the components around
    /// `touched`. Every vertex whose component changes must be reachable from
    /// `touched` afterwards.
    pub(crate) fn swap_edges(
        &mut self,
        remove: &[EdgeId],
        add: &[EdgeId],
        touched: &[VertexId],
    ) -> Result<()> {
        let g = self.graph();
        let mut ys: Vec<VertexId> = remove
            .iter()
            .chain(add)
            .map(|&e| g.endpoints(e).0)
            .collect();
        ys.sort();
        ys.dedup();
        let before = ys.iter().filter(|&&y| self.f.degree(y) > 0).count();
        for &e in remove {
            if !self.f.remove(e) {
                return Err(Error::Defect(format!("edge {e} to remove is not in F")));
            }
        }
        for &e in add {
            if !self.f.insert(e) {
                return Err(Error::Defect(format!("edge {e} to add is already in F")));
            }
        }
        let after = ys.iter().filter(|&&y| self.f.degree(y) > 0).count();
        self.covered = self.covered + after - before;
        self.relabel(touched)
    }

    /// Re-walks the components through `touched`, retiring their old ids.
    fn relabel(&mut self, touched: &[VertexId]) -> Result<()> {
        let g = self.graph();
        for &v in touched {
            let c = self.component[g.vertex_index(v)];
            if c != NO_COMPONENT && self.component_len[c] != NO_COMPONENT {
                let len = self.component_len[c];
                retire(&mut self.lengths, len);
                self.component_len[c] = NO_COMPONENT;
            }
        }
        let fresh_from = self.component_len.len();
        for &v in touched {
            let vi = g.vertex_index(v);
            let c = self.component[vi];
            if c != NO_COMPONENT && c >= fresh_from {
                continue;
            }
            if self.f.degree(v) == 0 {
                self.component[vi] = NO_COMPONENT;
                continue;
            }
            let path = self.trace_component(v)?;
            let len = path.len() - 1;
            let (a, b) = (path[0], path[len]);
            if len % 2 == 1 || !a.is_y() || !b.is_y() {
                return Err(Error::Defect(format!(
                    "component {a}..{b} of length {len} is not an even path"
                )));
            }
            let id = self.component_len.len();
            self.component_len.push(len);
            for u in path {
                self.component[g.vertex_index(u)] = id;
            }
            *self.lengths.entry(len).or_default() += 1;
        }
        Ok(())
    }

    /// The path through `v`, end to end.
    fn trace_component(&self, v: VertexId) -> Result<Vec<VertexId>> {
        let g = self.graph();
        let degree = self.f.degree(v);
        if degree > 2 {
            return Err(Error::Defect(format!("{v} has degree {degree} in F")));
        }
        let mut halves = Vec::new();
        for first in self.f.incident(v) {
            let mut half = Vec::new();
            let (mut prev, mut cur) = (first, g.other_end(first, v));
            loop {
                if cur == v {
                    return Err(Error::Defect(format!("F has a cycle through {v}")));
                }
                if self.f.degree(cur) > 2 {
                    return Err(Error::Defect(format!("{cur} has degree > 2 in F")));
                }
                half.push(cur);
                match self.f.incident(cur).find(|&e| e != prev) {
                    Some(e) => {
                        prev = e;
                        cur = g.other_end(e, cur);
                    }
                    None => break,
                }
            }
            halves.push(half);
        }
        let mut path: Vec<VertexId> = halves.first().cloned().unwrap_or_default();
        path.reverse();
        path.push(v);
        if let Some(second) = halves.get(1) {
            path.extend(second);
        }
        Ok(path)
    }

    /// Reinterprets a spanning pseudo path factor as a path factor.
    pub fn into_path_factor(self) -> Result<PathFactor> {
        if !self.is_spanning() {
            return Err(Error::Precondition(format!(
                "{} of {} y vertices covered",
                self.covered,
                self.graph().y_count()
            )));
        }
        Ok(PathFactor::from_paths(self.paths()))
    }
}

fn retire(lengths: &mut BTreeMap<usize, usize>, len: usize) {
    if let Some(n) = lengths.get_mut(&len) {
        *n -= 1;
        if *n == 0 {
            lengths.remove(&len);
        }
    }
}

/// A spanning set of vertex-disjoint paths, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFactor {
    paths: Vec<Vec<VertexId>>,
}

impl PathFactor {
    /// Orients and sorts `paths`. No validation; see
    /// [`crate::oracle::validate_path_factor`].
    pub fn from_paths(paths: Vec<Vec<VertexId>>) -> Self {
        PathFactor {
            paths: crate::graph::canonical_paths(paths),
        }
    }

    pub fn paths(&self) -> &[Vec<VertexId>] {
        &self.paths
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    /// Edge count of each path.
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.iter().map(|p| p.len().saturating_sub(1))
    }

    pub fn edge_count(&self) -> usize {
        self.lengths().sum()
    }

    pub fn max_path_len(&self) -> usize {
        self.lengths().max().unwrap_or(0)
    }

    /// The factor file body.
    pub fn to_text(&self) -> String {
        crate::graph::format_paths(&self.paths)
    }
}
