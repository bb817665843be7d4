//! Hypergraphs with multiset hyperedges, the dominance hypergraph of a graph,
//! associated bipartite graphs and the bipartite double `G^⋈`.

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("hypergraph parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("not an involution: {0}")]
    NotInvolution(String),
}

/// Ground set `{0..n-1}` with an ordered list of hyperedges.
///
/// Duplicates are allowed and list position is the hyperedge's identity:
/// hyperedge `j` becomes vertex `n + j` of the associated bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "ground set {n} exceeds capacity {MAX_VERTICES}"
        );
        let ground = VertexSet::full(n);
        for e in &edges {
            assert!(
                e.is_subset(&ground),
                "hyperedge {e} outside ground set of size {n}"
            );
        }
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// `D_G`: the closed neighbourhoods `[N[0], .., N[n-1]]`, duplicates kept.
    pub fn dominance(g: &Graph) -> Self {
        Hypergraph::new(
            g.n(),
            (0..g.n()).map(|v| g.closed_neighborhood(v)).collect(),
        )
    }

    /// No hyperedge is a subset of `sigma`.
    pub fn is_independent(&self, sigma: &VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_subset(sigma))
    }

    /// `s` meets every hyperedge.
    pub fn is_transversal(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(s))
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(VertexSet::is_empty)
    }

    /// `B_H` on `n + m` vertices: ground vertex `i`, hyperedge vertex `n + j`,
    /// adjacent iff `i ∈ edges[j]`.
    ///
    /// Panics if `n + m` exceeds [`MAX_VERTICES`].
    pub fn associated_bipartite(&self) -> Graph {
        let mut g = Graph::new(self.n + self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            for i in e.iter() {
                g.add_edge(i, self.n + j);
            }
        }
        g
    }

    /// Inclusion-minimal hyperedges, deduplicated, in first-occurrence order.
    pub fn minimal_edges(&self) -> Hypergraph {
        let mut kept: Vec<VertexSet> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let dominated = self
                .edges
                .iter()
                .enumerate()
                .any(|(j, f)| f.is_subset(e) && (f != e || j < i));
            if !dominated {
                kept.push(*e);
            }
        }
        Hypergraph {
            n: self.n,
            edges: kept,
        }
    }

    /// Text form: `n m`, then one hyperedge per line (a blank line is the
    /// empty hyperedge).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, HypergraphError> {
    let err = |line: usize, reason: String| HypergraphError::Parse { line, reason };
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| err(1, "missing header \"n m\"".into()))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = nums.as_slice() else {
        return Err(err(1, format!("expected \"n m\", found {header:?}")));
    };
    let n: usize = n
        .parse()
        .map_err(|_| err(1, format!("bad ground-set size {n:?}")))?;
    let m: usize = m
        .parse()
        .map_err(|_| err(1, format!("bad edge count {m:?}")))?;
    if n > MAX_VERTICES {
        return Err(err(1, format!("ground set {n} exceeds {MAX_VERTICES}")));
    }
    let mut edges = Vec::with_capacity(m);
    for j in 0..m {
        let line_no = j + 2;
        let line = lines.next().unwrap_or("");
        let mut e = VertexSet::EMPTY;
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| err(line_no, format!("not a vertex: {tok:?}")))?;
            if v >= n {
                return Err(err(line_no, format!("vertex {v} out of range for n={n}")));
            }
            e.insert(v);
        }
        edges.push(e);
    }
    if let Some((i, extra)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(
            m + 2 + i,
            format!("unexpected content after {m} hyperedges: {extra:?}"),
        ));
    }
    Ok(Hypergraph { n, edges })
}

/// `G^⋈` on `2n` vertices: `v` is `(+, v)`, `n + w` is `(−, w)`, and
/// `(+, v) ~ (−, w)` iff `v ∈ N[w]`.
pub fn bowtie(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = Graph::new(2 * n);
    for w in 0..n {
        for v in g.closed_neighborhood(w).iter() {
            b.add_edge(v, n + w);
        }
    }
    b
}

/// A permutation of a ground set that squares to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    image: Vec<usize>,
}

impl Involution {
    pub fn new(image: Vec<usize>) -> Result<Self, HypergraphError> {
        let n = image.len();
        for (v, &w) in image.iter().enumerate() {
            if w >= n {
                return Err(HypergraphError::NotInvolution(format!(
                    "{v} maps to {w} >= {n}"
                )));
            }
            if image[w] != v {
                return Err(HypergraphError::NotInvolution(format!(
                    "{v} -> {w} but {w} -> {}",
                    image[w]
                )));
            }
        }
        Ok(Involution { image })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            image: (0..n).collect(),
        }
    }

    /// `γ` on `2n` vertices swapping `v` and `n + v`.
    pub fn bowtie(n: usize) -> Self {
        Involution {
            image: (0..2 * n)
                .map(|v| if v < n { v + n } else { v - n })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn apply_set(&self, s: &VertexSet) -> VertexSet {
        s.map(|v| self.image[v])
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.image.len())
            .filter(|&v| self.image[v] == v)
            .collect()
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.image.len() == g.n()
            && g.edges()
                .into_iter()
                .all(|(u, v)| g.has_edge(self.image[u], self.image[v]))
    }
}
