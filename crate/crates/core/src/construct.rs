//! Central graph and central vertex join.
//!
//! Vertex order is fixed: the original vertices of `G` (or `G1`) first, then
//! one subdivision vertex per edge in lexicographic edge order, then (for
//! the join) the vertices of `G2`.

use crate::graph::Graph;

/// `C(G)`: subdivide every edge once and join every non-adjacent pair of
/// original vertices.
pub fn central_graph(g: &Graph) -> Graph {
    let n = g.order();
    let edges = central_edges(g);
    Graph::new(n + g.size(), edges)
        .expect("central graph edges are valid by construction")
        .with_label(format!("C({})", g.label()))
}

fn central_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.size() + n * n.saturating_sub(1) / 2);
    for (k, &(a, b)) in g.edges().iter().enumerate() {
        edges.push((a, n + k));
        edges.push((b, n + k));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// `G1 ∨̇ G2`: `C(G1)` plus a copy of `G2`, with every original vertex of
/// `G1` joined to every vertex of `G2`.
///
/// The result has `n1 + m1 + n2` vertices and
/// `m1 + n1(n1 - 1)/2 + m2 + n1*n2` edges.
pub fn central_vertex_join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, m1, n2) = (g1.order(), g1.size(), g2.order());
    let base = n1 + m1;
    let mut edges = central_edges(g1);
    edges.extend(g2.edges().iter().map(|&(a, b)| (base + a, base + b)));
    for i in 0..n1 {
        edges.extend((0..n2).map(|v| (i, base + v)));
    }
    Graph::new(base + n2, edges)
        .expect("join edges are valid by construction")
        .with_label(format!("{}∨̇{}", g1.label(), g2.label()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::spectra::eigenvalues_sym;

    fn fam(f: Family, p: &[usize]) -> Graph {
        generate(f, p).unwrap()
    }

    #[test]
    fn central_of_triangle_is_hexagon() {
        let c = central_graph(&fam(Family::Complete, &[3]));
        assert_eq!((c.order(), c.size(), c.regularity()), (6, 6, Some(2)));
        assert!(c.is_connected());
        let s1 = eigenvalues_sym(&c.adjacency_matrix()).unwrap();
        let s2 = eigenvalues_sym(&fam(Family::Cycle, &[6]).adjacency_matrix()).unwrap();
        assert!(s1.max_deviation(&s2).unwrap() < 1e-12);
    }

    #[test]
    fn central_counts() {
        let c = central_graph(&fam(Family::Petersen, &[]));
        assert_eq!((c.order(), c.size()), (25, 60));
        let p3 = central_graph(&fam(Family::Complete, &[2]));
        assert_eq!(p3, Graph::new(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(p3.degrees().sorted_desc(), vec![2, 1, 1]);
    }

    #[test]
    fn central_degrees() {
        for g in [fam(Family::Petersen, &[]), fam(Family::CompleteBipartite, &[2, 3]), fam(Family::Path, &[4])] {
            let n = g.order();
            let d = central_graph(&g).degrees();
            assert!(d.0[..n].iter().all(|&x| x == n - 1));
            assert!(d.0[n..].iter().all(|&x| x == 2));
        }
    }

    #[test]
    fn degenerate_inputs_allowed() {
        let single = Graph::new(1, []).unwrap();
        assert_eq!(central_graph(&single).order(), 1);
        let empty3 = Graph::new(3, []).unwrap();
        let c = central_graph(&empty3);
        assert_eq!((c.order(), c.size()), (3, 3));
    }

    #[test]
    fn join_counts_and_structure() {
        let (g1, g2) = (fam(Family::Complete, &[3]), fam(Family::Complete, &[2]));
        let j = central_vertex_join(&g1, &g2);
        // n1 + m1 + n2 vertices; m1 + n1(n1-1)/2 + m2 + n1*n2 edges.
        assert_eq!((j.order(), j.size()), (8, 13));
        let (n1, m1) = (3, 3);
        let d = j.degrees();
        for v in 0..2 {
            let w = n1 + m1 + v;
            assert_eq!(d.0[w], 1 + n1);
            for s in n1..n1 + m1 {
                assert!(!j.has_edge(w, s));
            }
        }
    }

    #[test]
    fn join_a_alpha_block_structure() {
        use crate::spectra::a_alpha_matrix;
        let pairs = [
            (fam(Family::Complete, &[3]), fam(Family::Complete, &[2])),
            (fam(Family::Petersen, &[]), fam(Family::Cycle, &[5])),
            (fam(Family::Cycle, &[4]), fam(Family::Path, &[3])),
        ];
        for (g1, g2) in &pairs {
            let (n1, m1, n2) = (g1.order(), g1.size(), g2.order());
            let a = 0.3;
            let m = a_alpha_matrix(&central_vertex_join(g1, g2), a).unwrap();
            let r = g1.incidence_matrix::<f64>();
            let deg2 = g2.degrees().0;
            let s = n1 + m1;
            let expect = |i: usize, j: usize| -> f64 {
                match (i < n1, i < s, j < n1, j < s) {
                    (true, _, true, _) if i == j => a * (n1 - 1 + n2) as f64,
                    (true, _, true, _) => (1.0 - a) * f64::from(u8::from(!g1.has_edge(i, j))),
                    (true, _, false, true) => (1.0 - a) * r.get(i, j - n1),
                    (false, true, true, _) => (1.0 - a) * r.get(j, i - n1),
                    (false, true, false, true) => if i == j { 2.0 * a } else { 0.0 },
                    (true, _, false, false) | (false, false, true, _) => 1.0 - a,
                    (false, true, false, false) | (false, false, false, true) => 0.0,
                    (false, false, false, false) => {
                        let (u, v) = (i - s, j - s);
                        if u == v {
                            a * (deg2[u] + n1) as f64
                        } else {
                            (1.0 - a) * f64::from(u8::from(g2.has_edge(u, v)))
                        }
                    }
                }
            };
            for i in 0..s + n2 {
                for j in 0..s + n2 {
                    assert!((m.get(i, j) - expect(i, j)).abs() < 1e-15, "({i},{j})");
                }
            }
        }
    }
}
