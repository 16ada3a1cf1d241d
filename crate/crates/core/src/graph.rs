//! Undirected simple graphs, standard generators, and matrix extractors.
//!
//! Vertex orderings are fixed per generator so that every derived matrix is
//! reproducible bit-for-bit:
//!
//! | family | ordering |
//! |--------|----------|
//! | `complete n` | `0..n` |
//! | `complete_bipartite p q` | part of size `p` first (`0..p`), then `p..p+q` |
//! | `cycle n` | `i ~ i+1 mod n` |
//! | `path n` | `i ~ i+1` |
//! | `petersen` | outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5` |
//! | `shrikhande` | Cayley graph on Z4 x Z4, `(a,b) -> 4a+b`, steps `±(0,1), ±(1,0), ±(1,1)` |
//! | `rook4x4` | cell `(i,j) -> 4i+j`, adjacent when sharing a row or column |
//!
//! Edges are kept in lexicographic `(i, j)` order with `i < j`; incidence
//! matrix columns follow that order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Scalar, SymMatrix};

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("label", &self.label)
            .field("n", &self.n)
            .field("m", &self.edges.len())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from unordered pairs. Duplicates (in either
    /// orientation) collapse; self-loops and out-of-range indices are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Parameter {
                    family: "graph".into(),
                    reason: format!("self-loop at vertex {a}"),
                });
            }
            if a >= n || b >= n {
                return Err(Error::Parameter {
                    family: "graph".into(),
                    reason: format!("edge ({a}, {b}) out of range for n = {n}"),
                });
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self {
            n,
            edges: out,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> &str {
        self.label.as_deref().unwrap_or("G")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> DegreeSequence {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        DegreeSequence(d)
    }

    /// Common degree if every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        self.degrees().regular()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph {
            n: self.n,
            edges,
            label: Some(format!("co-{}", self.label())),
        }
    }

    pub fn adjacency_matrix<T: Scalar>(&self) -> SymMatrix<T> {
        SymMatrix::from_upper(self.n, |i, j| {
            if i != j && self.has_edge(i, j) {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    pub fn degree_matrix<T: Scalar>(&self) -> SymMatrix<T> {
        let d = self.degrees();
        SymMatrix::from_upper(self.n, |i, j| {
            if i == j {
                T::from_i64(d.0[i] as i64)
            } else {
                T::zero()
            }
        })
    }

    /// Vertex-by-edge 0/1 matrix, columns in lexicographic edge order.
    pub fn incidence_matrix<T: Scalar>(&self) -> Matrix<T> {
        let mut r = Matrix::zeros(self.n, self.edges.len());
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            r.set(a, k, T::one());
            r.set(b, k, T::one());
        }
        r
    }

    /// Number of triangles inside each vertex's neighbourhood, i.e. the
    /// number of 4-cliques through the vertex, as a sorted profile.
    ///
    /// Cheap non-isomorphism certificate: isomorphic graphs have equal
    /// profiles. Separates the Shrikhande graph (neighbourhoods are 6-cycles)
    /// from the 4x4 rook graph (neighbourhoods are two disjoint triangles).
    pub fn local_clique_profile(&self) -> Vec<usize> {
        let adj = self.neighbors();
        let mut profile: Vec<usize> = adj
            .iter()
            .map(|nb| {
                let mut t = 0;
                for (x, &a) in nb.iter().enumerate() {
                    for (y, &b) in nb.iter().enumerate().skip(x + 1) {
                        if !self.has_edge(a, b) {
                            continue;
                        }
                        t += nb[y + 1..].iter().filter(|&&c| self.has_edge(a, c) && self.has_edge(b, c)).count();
                    }
                }
                t
            })
            .collect();
        profile.sort_unstable();
        profile
    }

    /// Serializes to the edge-list text format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

/// Degree of every vertex, in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn regular(&self) -> Option<usize> {
        let first = *self.0.first()?;
        self.0.iter().all(|&d| d == first).then_some(first)
    }

    /// Degrees sorted in descending order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Parses `n` on the first non-blank line, then one `i j` pair per line.
///
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: first_line,
        reason: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let tok = parts.next().ok_or_else(|| Error::Parse {
                line,
                reason: format!("missing {what} endpoint"),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line,
                reason: format!("invalid vertex index {tok:?}"),
            })
        };
        let a = next("first")?;
        let b = next("second")?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                line,
                reason: "expected exactly two indices".into(),
            });
        }
        if a >= n || b >= n {
            return Err(Error::Parse {
                line,
                reason: format!("index out of range: ({a}, {b}) with n = {n}"),
            });
        }
        if a == b {
            return Err(Error::Parse {
                line,
                reason: format!("self-loop at vertex {a}"),
            });
        }
        edges.push((a, b));
    }
    Graph::new(n, edges)
}

/// Named graph families available to [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Petersen,
    Shrikhande,
    Rook4x4,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::CompleteBipartite,
        Family::Cycle,
        Family::Path,
        Family::Petersen,
        Family::Shrikhande,
        Family::Rook4x4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Petersen => "petersen",
            Family::Shrikhande => "shrikhande",
            Family::Rook4x4 => "rook4x4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Parameter {
                family: s.into(),
                reason: format!(
                    "unknown family; expected one of {}",
                    Family::ALL.map(Family::name).join(", ")
                ),
            })
    }
}

/// Builds a member of a named family.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    let bad = |reason: &str| Error::Parameter {
        family: family.name().into(),
        reason: reason.into(),
    };
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(bad(&format!("expected {k} parameter(s), got {}", params.len())))
        }
    };
    let g = match family {
        Family::Complete => {
            arity(1)?;
            let n = params[0];
            if n < 1 {
                return Err(bad("n must be at least 1"));
            }
            let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::new(n, edges)?.with_label(format!("K{n}"))
        }
        Family::CompleteBipartite => {
            arity(2)?;
            let (p, q) = (params[0], params[1]);
            if p < 1 || q < 1 {
                return Err(bad("p and q must be at least 1"));
            }
            let edges = (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j)));
            Graph::new(p + q, edges)?.with_label(format!("K{p},{q}"))
        }
        Family::Cycle => {
            arity(1)?;
            let n = params[0];
            if n < 3 {
                return Err(bad("a cycle needs at least 3 vertices"));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_label(format!("C{n}"))
        }
        Family::Path => {
            arity(1)?;
            let n = params[0];
            if n < 1 {
                return Err(bad("n must be at least 1"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))?.with_label(format!("P{n}"))
        }
        Family::Petersen => {
            arity(0)?;
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            Graph::new(10, outer.chain(spokes).chain(inner))?.with_label("Petersen")
        }
        Family::Shrikhande => {
            arity(0)?;
            let steps = [(0, 1), (1, 0), (1, 1)];
            let mut edges = Vec::new();
            for a in 0..4 {
                for b in 0..4 {
                    for (da, db) in steps {
                        edges.push((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4));
                    }
                }
            }
            Graph::new(16, edges)?.with_label("Shrikhande")
        }
        Family::Rook4x4 => {
            arity(0)?;
            let mut edges = Vec::new();
            for u in 0..16 {
                for v in u + 1..16 {
                    if u / 4 == v / 4 || u % 4 == v % 4 {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(16, edges)?.with_label("Rook4x4")
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, p: &[usize]) -> Graph {
        generate(f, p).unwrap()
    }

    #[test]
    fn generator_counts() {
        let k4 = g(Family::Complete, &[4]);
        assert_eq!((k4.order(), k4.size(), k4.regularity()), (4, 6, Some(3)));
        let p = g(Family::Petersen, &[]);
        assert_eq!((p.order(), p.size(), p.regularity()), (10, 15, Some(3)));
        let kb = g(Family::CompleteBipartite, &[2, 3]);
        assert_eq!((kb.order(), kb.size()), (5, 6));
        assert_eq!(kb.degrees().0, vec![3, 3, 2, 2, 2]);
        for f in [Family::Shrikhande, Family::Rook4x4] {
            let h = g(f, &[]);
            assert_eq!((h.order(), h.size(), h.regularity()), (16, 48, Some(6)));
        }
    }

    #[test]
    fn invalid_params() {
        assert!(generate(Family::Complete, &[0]).is_err());
        assert!(generate(Family::CompleteBipartite, &[0, 3]).is_err());
        assert!(generate(Family::Cycle, &[2]).is_err());
        assert!(generate(Family::Petersen, &[1]).is_err());
        assert!("tesseract".parse::<Family>().is_err());
        assert_eq!("rook4x4".parse::<Family>().unwrap(), Family::Rook4x4);
    }

    #[test]
    fn parse_examples() {
        let k3 = parse_edge_list("3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3, g(Family::Complete, &[3]));
        let k2 = parse_edge_list("2\n0 1\n1 0").unwrap();
        assert_eq!(k2, g(Family::Complete, &[2]));
        match parse_edge_list("2\n0 2") {
            Err(Error::Parse { line: 2, reason }) => assert!(reason.contains("out of range")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list("3\n1 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        for f in Family::ALL {
            let params: &[usize] = match f {
                Family::Complete | Family::Cycle | Family::Path => &[5],
                Family::CompleteBipartite => &[2, 3],
                _ => &[],
            };
            let h = g(f, params);
            assert_eq!(parse_edge_list(&h.to_edge_list()).unwrap(), h);
        }
    }

    #[test]
    fn matrices() {
        let k2 = g(Family::Complete, &[2]);
        assert_eq!(
            k2.adjacency_matrix::<f64>().as_matrix().entries(),
            &[0.0, 1.0, 1.0, 0.0]
        );
        let k3 = g(Family::Complete, &[3]);
        let r = k3.incidence_matrix::<f64>();
        let rrt = r.matmul(&r.transpose());
        let expect = k3
            .adjacency_matrix::<f64>()
            .as_matrix()
            .add(&Matrix::identity(3).scale(&2.0));
        assert_eq!(rrt, expect);
        let kb = g(Family::CompleteBipartite, &[2, 3]);
        let d = kb.degree_matrix::<f64>();
        assert_eq!((0..5).map(|i| *d.get(i, i)).collect::<Vec<_>>(), vec![3.0, 3.0, 2.0, 2.0, 2.0]);
    }

    #[test]
    fn complement_cases() {
        let k5 = g(Family::Complete, &[5]);
        assert_eq!(k5.complement().size(), 0);
        let c5 = g(Family::Cycle, &[5]);
        let cc5 = c5.complement();
        assert_eq!(cc5.regularity(), Some(2));
        assert!(cc5.is_connected());
        let p = g(Family::Petersen, &[]);
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn regularity_cases() {
        assert_eq!(g(Family::Petersen, &[]).regularity(), Some(3));
        assert_eq!(g(Family::CompleteBipartite, &[2, 3]).regularity(), None);
        assert_eq!(g(Family::Complete, &[1]).regularity(), Some(0));
    }

    #[test]
    fn shrikhande_and_rook_differ() {
        let s = g(Family::Shrikhande, &[]).local_clique_profile();
        let r = g(Family::Rook4x4, &[]).local_clique_profile();
        assert_eq!(s, vec![0; 16]);
        assert_eq!(r, vec![2; 16]);
    }
}
