//! Bipartite graphs with bipartition `(Y, X)`, edge subgraphs over them, and
//! the line-oriented text formats used for graphs and path factors.
//!
//! Vertices are positional: `y0..y{n-1}` and `x0..x{m-1}`. Edges are stored as
//! occurrences, so a multigraph keeps every parallel copy as its own
//! [`EdgeId`].

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{BiregularError, Error, Result};

/// Degree of every vertex in `Y`.
pub const Y_DEGREE: usize = 3;
/// Degree of every vertex in `X`.
pub const X_DEGREE: usize = 4;

pub type EdgeId = usize;

/// The side of the bipartition a vertex lives on. `Y` sorts before `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Y,
    X,
}

/// A vertex named by side and 0-based index.
///
/// The derived order (all of `Y` by index, then all of `X`) is the order used
/// for canonical path orientation and sorting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub const fn y(index: usize) -> Self {
        VertexId { side: Side::Y, index }
    }

    pub const fn x(index: usize) -> Self {
        VertexId { side: Side::X, index }
    }

    pub fn is_y(self) -> bool {
        self.side == Side::Y
    }

    pub fn is_x(self) -> bool {
        self.side == Side::X
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Y => write!(f, "y{}", self.index),
            Side::X => write!(f, "x{}", self.index),
        }
    }
}

impl FromStr for VertexId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (side, digits) = match s.as_bytes().first() {
            Some(b'y') => (Side::Y, &s[1..]),
            Some(b'x') => (Side::X, &s[1..]),
            _ => return Err(format!("bad vertex name `{s}`")),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad vertex name `{s}`"));
        }
        let index = digits
            .parse()
            .map_err(|_| format!("bad vertex index in `{s}`"))?;
        Ok(VertexId { side, index })
    }
}

/// A bipartite (multi)graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bigraph {
    y_count: usize,
    x_count: usize,
    edges: Vec<(usize, usize)>,
    y_adj: Vec<Vec<EdgeId>>,
    x_adj: Vec<Vec<EdgeId>>,
    simple: bool,
}

impl Bigraph {
    /// Builds a graph from `(y, x)` index pairs. Repeated pairs are kept as
    /// parallel edges and clear the `simple` flag.
    pub fn new(y_count: usize, x_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if y_count == 0 || x_count == 0 {
            return Err(Error::InvalidGraph(
                "both sides must have at least one vertex".into(),
            ));
        }
        let mut y_adj = vec![Vec::new(); y_count];
        let mut x_adj = vec![Vec::new(); x_count];
        for (e, &(y, x)) in edges.iter().enumerate() {
            if y >= y_count || x >= x_count {
                return Err(Error::InvalidGraph(format!(
                    "edge y{y} x{x} out of range for {y_count} x {x_count}"
                )));
            }
            y_adj[y].push(e);
            x_adj[x].push(e);
        }
        let simple = y_adj
            .iter()
            .all(|inc| pairwise_distinct(inc.iter().map(|&e| edges[e].1)));
        Ok(Bigraph {
            y_count,
            x_count,
            edges,
            y_adj,
            x_adj,
            simple,
        })
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.y_count + self.x_count
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// `(y, x)` index pairs, one per edge occurrence.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (y, x) = self.edges[e];
        (VertexId::y(y), VertexId::x(x))
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (y, x) = self.endpoints(e);
        if v == y {
            x
        } else {
            debug_assert_eq!(v, x, "edge {e} is not incident to {v}");
            y
        }
    }

    /// Edge occurrences incident to `v`, in ascending edge order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        match v.side {
            Side::Y => &self.y_adj[v.index],
            Side::X => &self.x_adj[v.index],
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        match v.side {
            Side::Y => v.index < self.y_count,
            Side::X => v.index < self.x_count,
        }
    }

    /// Some edge joining `a` and `b`, if any.
    pub fn find_edge(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let (y, x) = match (a.side, b.side) {
            (Side::Y, Side::X) => (a, b),
            (Side::X, Side::Y) => (b, a),
            _ => return None,
        };
        if !self.contains_vertex(y) || !self.contains_vertex(x) {
            return None;
        }
        self.y_adj[y.index]
            .iter()
            .copied()
            .find(|&e| self.edges[e].1 == x.index)
    }

    /// Dense index in `0..vertex_count()`: Y vertices first, then X.
    pub fn vertex_index(&self, v: VertexId) -> usize {
        match v.side {
            Side::Y => v.index,
            Side::X => self.y_count + v.index,
        }
    }

    pub fn vertex_at(&self, i: usize) -> VertexId {
        if i < self.y_count {
            VertexId::y(i)
        } else {
            VertexId::x(i - self.y_count)
        }
    }

    /// All vertices in canonical order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(|i| self.vertex_at(i))
    }

    pub fn y_vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.y_count).map(VertexId::y)
    }

    pub fn x_vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.x_count).map(VertexId::x)
    }

    /// The same graph with edges sorted by `(y, x)`.
    pub fn canonicalized(&self) -> Bigraph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Bigraph::new(self.y_count, self.x_count, edges).expect("indices already validated")
    }

    pub fn is_canonical(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] <= w[1])
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &Bigraph) -> Bigraph {
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(
                other
                    .edges
                    .iter()
                    .map(|&(y, x)| (y + self.y_count, x + self.x_count)),
            )
            .collect();
        Bigraph::new(
            self.y_count + other.y_count,
            self.x_count + other.x_count,
            edges,
        )
        .expect("indices in range by construction")
    }
}

fn pairwise_distinct(items: impl Iterator<Item = usize>) -> bool {
    let mut seen: Vec<usize> = items.collect();
    let n = seen.len();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == n
}

/// Checks degrees and shape together and returns `k` with `|Y| = 4k`,
/// `|X| = 3k`.
pub fn check_biregular(g: &Bigraph) -> Result<usize, BiregularError> {
    let shape = BiregularError::Shape {
        y_count: g.y_count(),
        x_count: g.x_count(),
    };
    if !g.y_count().is_multiple_of(4) || !g.x_count().is_multiple_of(3) || g.y_count() / 4 != g.x_count() / 3 {
        return Err(shape);
    }
    let k = g.y_count() / 4;
    if k == 0 {
        return Err(shape);
    }
    for v in g.vertices() {
        let expected = if v.is_y() { Y_DEGREE } else { X_DEGREE };
        let degree = g.degree(v);
        if degree != expected {
            return Err(BiregularError::Degree {
                vertex: v,
                degree,
                expected,
            });
        }
    }
    Ok(k)
}

/// Parses the graph file format:
///
/// ```text
/// c optional comment
/// p bbg <y_count> <x_count> <edge_count>
/// e y<i> x<j>
/// ```
///
/// Repeated edge lines are parallel edges and are rejected unless
/// `allow_multi` is set.
pub fn parse_graph(text: &str, allow_multi: bool) -> Result<Bigraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let err = |message: String| Error::Parse {
            line: lineno,
            message,
        };
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate header".into()));
                }
                if fields.len() != 5 || fields[1] != "bbg" {
                    return Err(err(format!("malformed header `{line}`")));
                }
                let num = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| err(format!("bad number `{s}` in header")))
                };
                header = Some((num(fields[2])?, num(fields[3])?, num(fields[4])?));
            }
            "e" => {
                let Some((y_count, x_count, _)) = header else {
                    return Err(err("edge before header".into()));
                };
                if fields.len() != 3 {
                    return Err(err(format!("malformed edge `{line}`")));
                }
                let y: VertexId = fields[1].parse().map_err(err)?;
                let x: VertexId = fields[2].parse().map_err(err)?;
                if !y.is_y() || !x.is_x() {
                    return Err(err(format!("edge must be `e y<i> x<j>`, got `{line}`")));
                }
                if y.index >= y_count || x.index >= x_count {
                    return Err(err(format!("vertex out of declared range in `{line}`")));
                }
                if !seen.insert((y.index, x.index)) && !allow_multi {
                    return Err(err(format!("duplicate edge {y} {x}")));
                }
                edges.push((y.index, x.index));
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }

    let (y_count, x_count, edge_count) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `p bbg` header".into(),
    })?;
    if edges.len() != edge_count {
        return Err(Error::Parse {
            line: 0,
            message: format!(
                "header declares {edge_count} edges, found {}",
                edges.len()
            ),
        });
    }
    Bigraph::new(y_count, x_count, edges)
}

/// Writes the graph with edges in canonical `(y, x)` order.
pub fn serialize_graph(g: &Bigraph) -> String {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let mut out = format!("p bbg {} {} {}\n", g.y_count(), g.x_count(), edges.len());
    for (y, x) in edges {
        writeln!(out, "e y{y} x{x}").unwrap();
    }
    out
}

/// Writes one path per line, assuming the paths are already canonical.
pub fn format_paths(paths: &[Vec<VertexId>]) -> String {
    let mut out = String::new();
    for path in paths {
        let line: Vec<String> = path.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a factor file: one whitespace-separated vertex sequence per line.
pub fn parse_paths(text: &str) -> Result<Vec<Vec<VertexId>>> {
    let mut paths = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let path = line
            .split_whitespace()
            .map(|s| s.parse())
            .collect::<Result<Vec<VertexId>, _>>()
            .map_err(|message| Error::Parse {
                line: i + 1,
                message,
            })?;
        paths.push(path);
    }
    Ok(paths)
}

/// Reverses `path` if needed so the smaller endpoint comes first.
pub fn orient(path: &mut [VertexId]) {
    if let (Some(first), Some(last)) = (path.first(), path.last()) {
        if last < first {
            path.reverse();
        }
    }
}

/// Orients every path and sorts the list.
pub fn canonical_paths(mut paths: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    for p in &mut paths {
        orient(p);
    }
    paths.sort();
    paths
}

/// A subset of a graph's edge occurrences, with per-vertex degree counters.
#[derive(Debug, Clone)]
pub struct EdgeSubgraph<'g> {
    graph: &'g Bigraph,
    member: Vec<bool>,
    y_deg: Vec<usize>,
    x_deg: Vec<usize>,
    len: usize,
}

impl<'g> EdgeSubgraph<'g> {
    pub fn new(graph: &'g Bigraph) -> Self {
        EdgeSubgraph {
            graph,
            member: vec![false; graph.edge_count()],
            y_deg: vec![0; graph.y_count()],
            x_deg: vec![0; graph.x_count()],
            len: 0,
        }
    }

    pub fn from_edges(graph: &'g Bigraph, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut s = EdgeSubgraph::new(graph);
        for e in edges {
            s.insert(e);
        }
        s
    }

    pub fn graph(&self) -> &'g Bigraph {
        self.graph
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.member[e]
    }

    /// Returns `false` if `e` was already a member.
    pub fn insert(&mut self, e: EdgeId) -> bool {
        if self.member[e] {
            return false;
        }
        self.member[e] = true;
        let (y, x) = self.graph.edges()[e];
        self.y_deg[y] += 1;
        self.x_deg[x] += 1;
        self.len += 1;
        true
    }

    /// Returns `false` if `e` was not a member.
    pub fn remove(&mut self, e: EdgeId) -> bool {
        if !self.member[e] {
            return false;
        }
        self.member[e] = false;
        let (y, x) = self.graph.edges()[e];
        self.y_deg[y] -= 1;
        self.x_deg[x] -= 1;
        self.len -= 1;
        true
    }

    pub fn degree(&self, v: VertexId) -> usize {
        match v.side {
            Side::Y => self.y_deg[v.index],
            Side::X => self.x_deg[v.index],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(e, &m)| m.then_some(e))
    }

    /// Member edges incident to `v`.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| self.member[e])
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident(v).map(move |e| self.graph.other_end(e, v))
    }

    /// Recounts degrees from the membership flags and compares.
    pub fn counters_consistent(&self) -> bool {
        let mut y_deg = vec![0; self.graph.y_count()];
        let mut x_deg = vec![0; self.graph.x_count()];
        for e in self.edges() {
            let (y, x) = self.graph.edges()[e];
            y_deg[y] += 1;
            x_deg[x] += 1;
        }
        y_deg == self.y_deg && x_deg == self.x_deg && self.edges().count() == self.len
    }

    pub fn same_edges(&self, other: &EdgeSubgraph<'_>) -> bool {
        self.member == other.member
    }
}

/// Why an edge subgraph is not a disjoint union of paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonPath {
    Branch { vertex: VertexId, degree: usize },
    /// Vertices of the cyclic component, sorted.
    Cycle { vertices: Vec<VertexId> },
}

impl fmt::Display for NonPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonPath::Branch { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            NonPath::Cycle { vertices } => {
                let names: Vec<String> = vertices.iter().map(ToString::to_string).collect();
                write!(f, "cycle through {{{}}}", names.join(","))
            }
        }
    }
}

/// Decomposes `s` into vertex sequences, one per component with at least one
/// edge, in canonical orientation and sorted. Reports the first branch vertex
/// or the cycle containing the smallest vertex if some component is not a path.
pub fn components_as_paths(s: &EdgeSubgraph<'_>) -> Result<Vec<Vec<VertexId>>, NonPath> {
    let g = s.graph();
    for v in g.vertices() {
        let degree = s.degree(v);
        if degree > 2 {
            return Err(NonPath::Branch { vertex: v, degree });
        }
    }

    let mut used = vec![false; g.edge_count()];
    let mut paths = Vec::new();
    for start in g.vertices() {
        if s.degree(start) != 1 {
            continue;
        }
        let first = s.incident(start).next().expect("degree 1");
        if used[first] {
            continue;
        }
        paths.push(walk(s, start, first, &mut used));
    }

    // Anything left over lies on a cycle.
    for v in g.vertices() {
        if let Some(e) = s.incident(v).find(|&e| !used[e]) {
            let mut vertices = walk(s, v, e, &mut used);
            vertices.pop();
            vertices.sort();
            return Err(NonPath::Cycle { vertices });
        }
    }

    Ok(canonical_paths(paths))
}

/// Follows member edges from `start` along `first` until it can't continue,
/// marking edges used. On a cycle the start vertex is repeated at the end.
fn walk(s: &EdgeSubgraph<'_>, start: VertexId, first: EdgeId, used: &mut [bool]) -> Vec<VertexId> {
    let g = s.graph();
    let mut seq = vec![start];
    let mut cur = start;
    let mut edge = Some(first);
    while let Some(e) = edge {
        used[e] = true;
        cur = g.other_end(e, cur);
        seq.push(cur);
        edge = s.incident(cur).find(|&f| !used[f]);
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k34() -> Bigraph {
        let edges = (0..4).flat_map(|y| (0..3).map(move |x| (y, x))).collect();
        Bigraph::new(4, 3, edges).unwrap()
    }

    const COUNTEREXAMPLE: &str = "\
c three triple edges plus a claw at y0
p bbg 4 3 12
e y0 x0
e y0 x1
e y0 x2
e y1 x0
e y1 x0
e y1 x0
e y2 x1
e y2 x1
e y2 x1
e y3 x2
e y3 x2
e y3 x2
";

    #[test]
    fn vertex_names_round_trip() {
        assert_eq!("y12".parse::<VertexId>().unwrap(), VertexId::y(12));
        assert_eq!(VertexId::x(3).to_string(), "x3");
        assert!("z1".parse::<VertexId>().is_err());
        assert!("y".parse::<VertexId>().is_err());
        assert!("y-1".parse::<VertexId>().is_err());
        assert!(VertexId::y(100) < VertexId::x(0));
    }

    #[test]
    fn parse_k34() {
        let text = serialize_graph(&k34());
        assert!(text.starts_with("p bbg 4 3 12\n"));
        let g = parse_graph(&text, false).unwrap();
        assert_eq!(g.y_count(), 4);
        assert_eq!(g.x_count(), 3);
        assert!(g.is_simple());
        assert_eq!(g, k34());
    }

    #[test]
    fn parse_counterexample_needs_allow_multi() {
        let g = parse_graph(COUNTEREXAMPLE, true).unwrap();
        assert!(!g.is_simple());
        assert_eq!(g.edge_count(), 12);
        match parse_graph(COUNTEREXAMPLE, false) {
            Err(Error::Parse { line: 7, message }) => assert!(message.contains("duplicate")),
            other => panic!("expected duplicate-edge error, got {other:?}"),
        }
    }

    #[test]
    fn multigraph_round_trip_keeps_multiplicity() {
        let g = parse_graph(COUNTEREXAMPLE, true).unwrap();
        let text = serialize_graph(&g);
        assert_eq!(text.matches("e y1 x0\n").count(), 3);
        let body: String = COUNTEREXAMPLE.lines().skip(1).map(|l| format!("{l}\n")).collect();
        assert_eq!(text, body);
        assert_eq!(parse_graph(&text, true).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        let cases = [
            ("e y0 x0\n", "before header"),
            ("p bbg 1 1 1\ne y0 x1\n", "out of declared range"),
            ("p bbg 1 1 2\ne y0 x0\n", "declares 2"),
            ("p bbg 1 1 1\ne x0 y0\n", "must be"),
            ("p bbg 1 1\n", "malformed header"),
            ("p bbg 1 1 1\nq\n", "unknown line"),
            ("", "missing"),
        ];
        for (text, needle) in cases {
            let err = parse_graph(text, false).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn empty_edge_graph_serializes_header_only() {
        let g = Bigraph::new(4, 3, vec![]).unwrap();
        assert_eq!(serialize_graph(&g), "p bbg 4 3 0\n");
    }

    #[test]
    fn biregular_shapes() {
        assert_eq!(check_biregular(&k34()), Ok(1));
        assert_eq!(check_biregular(&k34().disjoint_union(&k34())), Ok(2));
        let square = Bigraph::new(4, 4, vec![]).unwrap();
        assert!(matches!(
            check_biregular(&square),
            Err(BiregularError::Shape { .. })
        ));
        let mut edges = k34().edges().to_vec();
        edges.pop();
        let short = Bigraph::new(4, 3, edges).unwrap();
        assert_eq!(
            check_biregular(&short),
            Err(BiregularError::Degree {
                vertex: VertexId::y(3),
                degree: 2,
                expected: 3
            })
        );
    }

    #[test]
    fn path_components() {
        let g = k34();
        let e = |y, x| g.find_edge(VertexId::y(y), VertexId::x(x)).unwrap();
        assert_eq!(components_as_paths(&EdgeSubgraph::new(&g)), Ok(vec![]));

        let s = EdgeSubgraph::from_edges(&g, [e(1, 0), e(0, 0)]);
        assert_eq!(
            components_as_paths(&s),
            Ok(vec![vec![VertexId::y(0), VertexId::x(0), VertexId::y(1)]])
        );

        let s = EdgeSubgraph::from_edges(&g, [e(0, 0), e(1, 0), e(1, 1), e(0, 1)]);
        assert_eq!(
            components_as_paths(&s),
            Err(NonPath::Cycle {
                vertices: vec![VertexId::y(0), VertexId::y(1), VertexId::x(0), VertexId::x(1)]
            })
        );

        let s = EdgeSubgraph::from_edges(&g, [e(0, 0), e(1, 0), e(2, 0)]);
        assert_eq!(
            components_as_paths(&s),
            Err(NonPath::Branch {
                vertex: VertexId::x(0),
                degree: 3
            })
        );
    }

    #[test]
    fn parallel_pair_is_a_cycle() {
        let g = parse_graph(COUNTEREXAMPLE, true).unwrap();
        let s = EdgeSubgraph::from_edges(&g, [3, 4]);
        assert_eq!(
            components_as_paths(&s),
            Err(NonPath::Cycle {
                vertices: vec![VertexId::y(1), VertexId::x(0)]
            })
        );
    }

    #[test]
    fn subgraph_degree_bookkeeping() {
        let g = k34();
        let mut s = EdgeSubgraph::new(&g);
        assert!(s.insert(0));
        assert!(!s.insert(0));
        assert!(s.insert(5));
        assert_eq!(s.len(), 2);
        assert!(s.remove(0));
        assert!(!s.remove(0));
        assert!(s.counters_consistent());
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn factor_text_round_trip() {
        let paths = vec![vec![VertexId::y(0), VertexId::x(2), VertexId::y(3)]];
        let text = format_paths(&paths);
        assert_eq!(text, "y0 x2 y3\n");
        assert_eq!(parse_paths(&format!("c hi\n{text}")).unwrap(), paths);
        assert!(parse_paths("y0 q1\n").is_err());
    }
}
