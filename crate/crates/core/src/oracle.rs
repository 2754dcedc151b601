//! Independent checkers and exhaustive searches.
//!
//! Nothing here reuses the solver's bookkeeping: components, degrees, and
//! lengths are recomputed from the raw edge sets, so a verdict from this module
//! is an independent opinion on the solver's output.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use petgraph::unionfind::UnionFind;

use crate::augment::AugmentingTrail;
use crate::error::{Error, Result};
use crate::factor::{PathFactor, PseudoPathFactor};
use crate::graph::{check_biregular, components_as_paths, Bigraph, EdgeSubgraph, VertexId};

/// Largest `k` the exhaustive searches accept.
pub const ORACLE_MAX_K: usize = 2;

/// Stable identifiers for validation failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Subgraph,
    MaxDegree,
    Cycle,
    OddPath,
    XDegree,
    GraphShape,
    VertexRange,
    NonEdge,
    RepeatedVertex,
    TrivialPath,
    OddLength,
    EndpointDegree,
    Spanning,
    PathCount,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Subgraph => "subgraph",
            Rule::MaxDegree => "max-degree",
            Rule::Cycle => "cycle",
            Rule::OddPath => "odd-path",
            Rule::XDegree => "x-degree",
            Rule::GraphShape => "graph-shape",
            Rule::VertexRange => "vertex-range",
            Rule::NonEdge => "non-edge",
            Rule::RepeatedVertex => "repeated-vertex",
            Rule::TrivialPath => "trivial-path",
            Rule::OddLength => "odd-length",
            Rule::EndpointDegree => "endpoint-degree",
            Rule::Spanning => "spanning",
            Rule::PathCount => "path-count",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub vertices: Vec<VertexId>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn push(&mut self, rule: Rule, vertices: Vec<VertexId>, message: String) {
        self.violations.push(Violation {
            rule,
            vertices,
            message,
        });
    }

    /// `OK`, or one `FAIL <rule> <detail>` line per violation.
    pub fn render(&self) -> String {
        if self.is_valid() {
            return "OK\n".to_string();
        }
        let mut out = String::new();
        for v in &self.violations {
            writeln!(out, "FAIL {} {}", v.rule, v.message).unwrap();
        }
        out
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.render().trim_end())
    }
}

fn names(vs: &[VertexId]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Checks that `f` is a subgraph of `g` whose components are all even paths
/// (ends in `Y`) and in which every `x` has degree exactly 2. Reports every
/// violation found.
pub fn validate_pseudo_factor(g: &Bigraph, f: &EdgeSubgraph<'_>) -> ValidationReport {
    let mut report = ValidationReport::default();
    if !std::ptr::eq(f.graph(), g) && f.graph() != g {
        report.push(
            Rule::Subgraph,
            vec![],
            "edge set belongs to a different graph".into(),
        );
        return report;
    }

    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in f.edges() {
        let (y, x) = g.endpoints(e);
        let (a, b) = (g.vertex_index(y), g.vertex_index(x));
        adj[a].push(b);
        adj[b].push(a);
    }

    for (i, nbrs) in adj.iter().enumerate() {
        if nbrs.len() > 2 {
            let v = g.vertex_at(i);
            report.push(
                Rule::MaxDegree,
                vec![v],
                format!("{v} has degree {} in F", nbrs.len()),
            );
        }
    }

    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let edges: usize = members.iter().map(|&u| adj[u].len()).sum::<usize>() / 2;
        let mut vertices: Vec<VertexId> = members.iter().map(|&u| g.vertex_at(u)).collect();
        vertices.sort();
        if edges >= members.len() {
            report.push(
                Rule::Cycle,
                vertices.clone(),
                format!("component {{{}}} contains a cycle", names(&vertices)),
            );
            continue;
        }
        if members.iter().any(|&u| adj[u].len() > 2) {
            // already reported as max-degree; not a path
            continue;
        }
        let ends: Vec<VertexId> = members
            .iter()
            .filter(|&&u| adj[u].len() == 1)
            .map(|&u| g.vertex_at(u))
            .collect();
        if edges % 2 == 1 || ends.iter().any(|v| v.is_x()) {
            report.push(
                Rule::OddPath,
                ends.clone(),
                format!(
                    "path between {} has length {edges}; expected even with both ends in Y",
                    names(&ends)
                ),
            );
        }
    }

    for x in g.x_vertices() {
        let d = adj[g.vertex_index(x)].len();
        if d != 2 {
            report.push(Rule::XDegree, vec![x], format!("{x} has degree {d} in F, expected 2"));
        }
    }
    report
}

/// Checks that `factor` is a spanning set of vertex-disjoint paths of `g`,
/// each of even length with both endpoints of degree 3, and that there are
/// exactly `k` of them.
pub fn validate_path_factor(g: &Bigraph, factor: &PathFactor) -> ValidationReport {
    validate_paths(g, factor.paths())
}

/// [`validate_path_factor`] on raw vertex sequences, which need not be
/// canonical.
pub fn validate_paths(g: &Bigraph, paths: &[Vec<VertexId>]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let k = match check_biregular(g) {
        Ok(k) => Some(k),
        Err(e) => {
            report.push(Rule::GraphShape, vec![], e.to_string());
            None
        }
    };

    let mut seen = vec![false; g.vertex_count()];
    for path in paths {
        for &v in path {
            if !g.contains_vertex(v) {
                report.push(Rule::VertexRange, vec![v], format!("{v} is not a vertex of the graph"));
                continue;
            }
            let i = g.vertex_index(v);
            if seen[i] {
                report.push(Rule::RepeatedVertex, vec![v], format!("{v} appears more than once"));
            }
            seen[i] = true;
        }
        for pair in path.windows(2) {
            if g.find_edge(pair[0], pair[1]).is_none() {
                report.push(
                    Rule::NonEdge,
                    pair.to_vec(),
                    format!("{} {} is not an edge", pair[0], pair[1]),
                );
            }
        }
        let len = path.len().saturating_sub(1);
        if len == 0 {
            report.push(Rule::TrivialPath, path.clone(), format!("path `{}` has no edges", names(path)));
            continue;
        }
        if len % 2 == 1 {
            report.push(
                Rule::OddLength,
                vec![path[0], path[len]],
                format!("path from {} to {} has odd length {len}", path[0], path[len]),
            );
        }
        for end in [path[0], path[len]] {
            if !g.contains_vertex(end) {
                continue;
            }
            let degree = g.degree(end);
            if !end.is_y() || degree != 3 {
                report.push(
                    Rule::EndpointDegree,
                    vec![end],
                    format!("endpoint {end} has degree {degree}, expected 3"),
                );
            }
        }
    }

    let missing: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&i| !seen[i])
        .map(|i| g.vertex_at(i))
        .collect();
    if !missing.is_empty() {
        let shown: Vec<VertexId> = missing.iter().copied().take(8).collect();
        let more = if missing.len() > 8 { ",..." } else { "" };
        report.push(
            Rule::Spanning,
            missing.clone(),
            format!("not spanning: {} uncovered ({}{more})", missing.len(), names(&shown)),
        );
    }
    if let Some(k) = k {
        if paths.len() != k {
            report.push(
                Rule::PathCount,
                vec![],
                format!("{} paths, expected k = {k}", paths.len()),
            );
        }
    }
    report
}

fn oracle_k(g: &Bigraph) -> Result<usize> {
    let k = check_biregular(g)?;
    if k > ORACLE_MAX_K {
        return Err(Error::TooLarge {
            k,
            limit: ORACLE_MAX_K,
        });
    }
    Ok(k)
}

/// Exhaustive search for a path factor with degree-3 endpoints.
///
/// Every `x` keeps exactly two of its four edge occurrences, so the search
/// runs over the 6 pairs per `x` (at most 6^6 leaves for `k = 2`), pruning any
/// `y` that reaches degree 3. Works on multigraphs. Returns the first witness
/// in enumeration order (x0 first, pairs in lexicographic order of incident
/// edge position), or `None` if no factor exists.
pub fn brute_force_factor(g: &Bigraph) -> Result<Option<PathFactor>> {
    brute_force_factor_counted(g).map(|(found, _)| found)
}

/// [`brute_force_factor`], also returning how many complete pair assignments
/// were examined.
pub fn brute_force_factor_counted(g: &Bigraph) -> Result<(Option<PathFactor>, u64)> {
    oracle_k(g)?;
    let mut search = FactorSearch {
        g,
        y_deg: vec![0; g.y_count()],
        chosen: Vec::with_capacity(2 * g.x_count()),
        leaves: 0,
    };
    if !search.descend(0) {
        return Ok((None, search.leaves));
    }
    let f = EdgeSubgraph::from_edges(g, search.chosen.iter().copied());
    let paths = components_as_paths(&f)
        .map_err(|e| Error::Defect(format!("oracle witness is not a path forest: {e}")))?;
    Ok((Some(PathFactor::from_paths(paths)), search.leaves))
}

/// Number of leaves [`brute_force_factor`] would visit with pruning disabled.
pub fn brute_force_space(g: &Bigraph) -> u64 {
    6u64.pow(g.x_count() as u32)
}

struct FactorSearch<'a> {
    g: &'a Bigraph,
    y_deg: Vec<usize>,
    chosen: Vec<usize>,
    leaves: u64,
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl FactorSearch<'_> {
    fn descend(&mut self, x: usize) -> bool {
        if x == self.g.x_count() {
            self.leaves += 1;
            return self.accept();
        }
        let inc = self.g.incident(VertexId::x(x));
        for (a, b) in PAIRS {
            let (ea, eb) = (inc[a], inc[b]);
            let (ya, yb) = (self.g.edges()[ea].0, self.g.edges()[eb].0);
            self.y_deg[ya] += 1;
            self.y_deg[yb] += 1;
            if self.y_deg[ya] <= 2 && self.y_deg[yb] <= 2 {
                self.chosen.push(ea);
                self.chosen.push(eb);
                if self.descend(x + 1) {
                    return true;
                }
                self.chosen.truncate(self.chosen.len() - 2);
            }
            self.y_deg[ya] -= 1;
            self.y_deg[yb] -= 1;
        }
        false
    }

    fn accept(&self) -> bool {
        if self.y_deg.contains(&0) {
            return false;
        }
        let mut uf = UnionFind::<usize>::new(self.g.vertex_count());
        self.chosen.iter().all(|&e| {
            let (y, x) = self.g.endpoints(e);
            uf.union(self.g.vertex_index(y), self.g.vertex_index(x))
        })
    }
}

/// Enumerates every trail from `y0` that alternates non-F / F edges, never
/// repeats an edge or an intermediate `y`, passes only through `x` vertices on
/// length-2 components, and ends with an F edge from an `x` on a component of
/// length at least 4 to a `y` of F-degree 2.
pub fn brute_force_trails(pf: &PseudoPathFactor<'_>, y0: VertexId) -> Result<Vec<AugmentingTrail>> {
    let g = pf.graph();
    oracle_k(g)?;
    if !y0.is_y() || !g.contains_vertex(y0) {
        return Err(Error::Precondition(format!("{y0} is not a y vertex")));
    }
    let f = pf.subgraph();
    if f.degree(y0) != 0 {
        return Err(Error::Precondition(format!("{y0} is already covered")));
    }
    let comp_len = component_lengths(g, f);
    let mut out = Vec::new();
    let mut ctx = TrailSearch {
        g,
        f,
        comp_len,
        used_edge: vec![false; g.edge_count()],
        used_y: vec![false; g.y_count()],
        vertices: vec![y0],
        edges: Vec::new(),
    };
    ctx.extend(&mut out);
    Ok(out)
}

/// Length of the component through each vertex (dense index), computed by BFS.
fn component_lengths(g: &Bigraph, f: &EdgeSubgraph<'_>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut len = vec![0; n];
    let mut seen = vec![false; n];
    for start in g.vertices() {
        let si = g.vertex_index(start);
        if seen[si] {
            continue;
        }
        let mut members = vec![si];
        let mut queue = VecDeque::from([start]);
        seen[si] = true;
        let mut degree_sum = 0;
        while let Some(u) = queue.pop_front() {
            for w in f.neighbors(u) {
                degree_sum += 1;
                let wi = g.vertex_index(w);
                if !seen[wi] {
                    seen[wi] = true;
                    members.push(wi);
                    queue.push_back(w);
                }
            }
        }
        for m in members {
            len[m] = degree_sum / 2;
        }
    }
    len
}

struct TrailSearch<'a, 'g> {
    g: &'a Bigraph,
    f: &'a EdgeSubgraph<'g>,
    comp_len: Vec<usize>,
    used_edge: Vec<bool>,
    used_y: Vec<bool>,
    vertices: Vec<VertexId>,
    edges: Vec<usize>,
}

impl TrailSearch<'_, '_> {
    fn extend(&mut self, out: &mut Vec<AugmentingTrail>) {
        let g = self.g;
        let y = *self.vertices.last().unwrap();
        for &e in g.incident(y) {
            if self.f.contains(e) || self.used_edge[e] {
                continue;
            }
            let x = g.other_end(e, y);
            let len = self.comp_len[g.vertex_index(x)];
            for &e2 in g.incident(x) {
                if !self.f.contains(e2) || self.used_edge[e2] {
                    continue;
                }
                let y2 = g.other_end(e2, x);
                let terminal = len >= 4 && self.f.degree(y2) == 2;
                let through = len == 2 && !self.used_y[y2.index];
                if !terminal && !through {
                    continue;
                }
                self.used_edge[e] = true;
                self.used_edge[e2] = true;
                self.vertices.extend([x, y2]);
                self.edges.extend([e, e2]);
                if terminal {
                    out.push(AugmentingTrail::from_parts(self.vertices.clone(), self.edges.clone()));
                } else {
                    self.used_y[y2.index] = true;
                    self.extend(out);
                    self.used_y[y2.index] = false;
                }
                self.vertices.truncate(self.vertices.len() - 2);
                self.edges.truncate(self.edges.len() - 2);
                self.used_edge[e] = false;
                self.used_edge[e2] = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::fixture;

    fn k34() -> Bigraph {
        fixture("k34").unwrap()
    }

    fn sub<'g>(g: &'g Bigraph, pairs: &[(usize, usize)]) -> EdgeSubgraph<'g> {
        EdgeSubgraph::from_edges(
            g,
            pairs
                .iter()
                .map(|&(y, x)| g.find_edge(VertexId::y(y), VertexId::x(x)).unwrap()),
        )
    }

    fn seq(names: &str) -> Vec<VertexId> {
        names.split_whitespace().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn single_six_path_is_a_pseudo_factor() {
        let g = k34();
        // y1-x0-y0-x2-y2-x1-y3
        let f = sub(&g, &[(0, 0), (1, 0), (2, 1), (3, 1), (0, 2), (2, 2)]);
        let report = validate_pseudo_factor(&g, &f);
        assert!(report.is_valid(), "{report}");
        assert_eq!(report.render(), "OK\n");
        assert_eq!(
            components_as_paths(&f).unwrap(),
            vec![seq("y1 x0 y0 x2 y2 x1 y3")]
        );
    }

    #[test]
    fn pseudo_factor_rules() {
        let g = k34();
        let f = sub(&g, &[(0, 0), (1, 1), (2, 1), (0, 2), (3, 2)]);
        let report = validate_pseudo_factor(&g, &f);
        assert!(report.has(Rule::XDegree));
        assert_eq!(report.violations.iter().filter(|v| v.rule == Rule::XDegree).count(), 1);
        assert!(report.has(Rule::OddPath));

        let f = sub(&g, &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let report = validate_pseudo_factor(&g, &f);
        assert!(report.has(Rule::Cycle));
        // x2 untouched too
        assert!(report.has(Rule::XDegree));

        let f = sub(&g, &[(0, 0), (1, 0), (2, 0)]);
        assert!(validate_pseudo_factor(&g, &f).has(Rule::MaxDegree));

        let moved = Bigraph::new(4, 3, vec![(0, 0)]).unwrap();
        let f = EdgeSubgraph::new(&moved);
        assert!(validate_pseudo_factor(&g, &f).has(Rule::Subgraph));
    }

    #[test]
    fn path_factor_rules() {
        let g = k34();
        let good = PathFactor::from_paths(vec![seq("y0 x0 y1 x1 y2 x2 y3")]);
        assert!(validate_path_factor(&g, &good).is_valid());

        let short = PathFactor::from_paths(vec![seq("y0 x0 y1 x1 y2")]);
        let report = validate_path_factor(&g, &short);
        assert!(report.has(Rule::Spanning));
        assert_eq!(report.violations.len(), 1);

        let short = PathFactor::from_paths(vec![seq("y0 x0 y1 x1 y2 x2"), seq("y3")]);
        let report = validate_path_factor(&g, &short);
        assert!(report.has(Rule::EndpointDegree));
        assert!(report.has(Rule::OddLength));
        assert!(report.has(Rule::TrivialPath));
        assert!(report.has(Rule::PathCount));
        assert!(report.render().contains("FAIL endpoint-degree endpoint x2 has degree 4, expected 3"));

        let bad = PathFactor::from_paths(vec![seq("y0 x0 y0 x1 y2 x2 y3"), seq("y1 x5 y9")]);
        let report = validate_path_factor(&g, &bad);
        assert!(report.has(Rule::RepeatedVertex));
        assert!(report.has(Rule::VertexRange));
        assert!(report.has(Rule::NonEdge));
    }

    #[test]
    fn oracle_on_fixtures() {
        let found = brute_force_factor(&k34()).unwrap().unwrap();
        assert_eq!(found.path_count(), 1);
        assert_eq!(found.edge_count(), 6);
        assert!(validate_path_factor(&k34(), &found).is_valid());

        let bad = fixture("counterexample").unwrap();
        assert_eq!(brute_force_factor(&bad).unwrap(), None);
    }

    #[test]
    fn oracle_size_limit() {
        let g = crate::generate::generate(&crate::generate::GenConfig::new(3, 0)).unwrap();
        assert!(matches!(
            brute_force_factor(&g),
            Err(Error::TooLarge { k: 3, limit: 2 })
        ));
        assert_eq!(brute_force_space(&k34()), 216);
    }

    #[test]
    fn trails_require_uncovered_origin() {
        let g = k34();
        let f = sub(&g, &[(0, 0), (1, 0), (2, 1), (3, 1), (0, 2), (2, 2)]);
        let pf = PseudoPathFactor::new(f).unwrap();
        assert!(matches!(
            brute_force_trails(&pf, VertexId::y(0)),
            Err(Error::Precondition(_))
        ));
    }
}
