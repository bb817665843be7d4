//! Simple undirected graphs on `{0, .., n-1}`: parsing, generators and the
//! exact invariants the rest of the crate consumes (`N[v]`, domination, α, τ).

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

/// Largest order the short graph6 form can encode.
pub const GRAPH6_MAX_N: usize = 62;

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A simple undirected graph with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph order {n} exceeds capacity {MAX_VERTICES}"
        );
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds `{u, v}`. Re-adding an edge is a no-op.
    ///
    /// Panics on self-loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.n && v < self.n,
            "edge ({u},{v}) out of range for n={}",
            self.n
        );
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// `N[v] = {v} ∪ adj(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Whether every vertex is in `s` or adjacent to a member of `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        (0..self.n).all(|v| self.closed_neighborhood(v).intersects(s))
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// A maximum independent set, by branch and bound.
    ///
    /// Branches on the vertex of highest degree among the remaining
    /// candidates (lowest index on ties), include-branch first, and prunes
    /// when the candidates cannot beat the incumbent. Deterministic.
    pub fn max_independent_set(&self) -> VertexSet {
        let mut best = VertexSet::EMPTY;
        self.mis_branch(self.vertices(), VertexSet::EMPTY, &mut best);
        best
    }

    fn mis_branch(&self, cand: VertexSet, cur: VertexSet, best: &mut VertexSet) {
        if cur.len() + cand.len() <= best.len() {
            return;
        }
        let mut pick = None;
        let mut pick_deg = 0;
        for v in cand.iter() {
            let d = self.adj[v].intersection(&cand).len();
            if pick.is_none() || d > pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
        }
        let Some(v) = pick else {
            *best = cur;
            return;
        };
        if pick_deg == 0 {
            // remaining candidates are pairwise non-adjacent
            *best = cur.union(&cand);
            return;
        }
        self.mis_branch(
            cand.difference(&self.closed_neighborhood(v)),
            cur.with(v),
            best,
        );
        self.mis_branch(cand.without(v), cur, best);
    }

    /// α(G).
    pub fn independence_number(&self) -> usize {
        self.max_independent_set().len()
    }

    /// τ(G) = n − α(G).
    pub fn vertex_cover_number(&self) -> usize {
        self.n - self.independence_number()
    }

    /// A minimum dominating set by exhaustive search in order of size.
    /// Returns `None` when `n > max_n`.
    pub fn min_dominating_set(&self, max_n: usize) -> Option<VertexSet> {
        if self.n > max_n {
            return None;
        }
        let all = self.vertices();
        (0..=self.n).find_map(|k| {
            all.subsets_of_size(k)
                .into_iter()
                .find(|s| self.is_dominating(s))
        })
    }

    pub fn component_count(&self) -> usize {
        let mut seen = VertexSet::EMPTY;
        let mut count = 0;
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            count += 1;
            let mut frontier = VertexSet::singleton(start);
            seen.insert(start);
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let fresh = self.adj[v].difference(&seen);
                seen = seen.union(&fresh);
                frontier = frontier.union(&fresh);
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.n
    }

    /// Connected and 2-regular on at least 3 vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Chordality via maximum cardinality search and a perfect elimination
    /// ordering test.
    pub fn is_chordal(&self) -> bool {
        let mut order = Vec::with_capacity(self.n);
        let mut visited = VertexSet::EMPTY;
        let mut weight = vec![0usize; self.n];
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex");
            visited.insert(v);
            order.push(v);
            for u in self.adj[v].difference(&visited) {
                weight[u] += 1;
            }
        }
        let mut position = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        order.iter().all(|&v| {
            let earlier: VertexSet = self.adj[v]
                .iter()
                .filter(|&u| position[u] < position[v])
                .collect();
            match earlier.iter().max_by_key(|&u| position[u]) {
                None => true,
                Some(parent) => earlier.without(parent).is_subset(&self.adj[parent]),
            }
        })
    }

    /// Short-form graph6 encoding (no header, no newline).
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        if self.n > GRAPH6_MAX_N {
            return Err(GraphError::InvalidArgument(format!(
                "graph6 short form supports n <= {GRAPH6_MAX_N}, got {}",
                self.n
            )));
        }
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((acc << (6 - filled)) + 63) as char);
        }
        Ok(out)
    }

    /// Edge-list text: `n` on the first line, then one `u v` per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let (body, base) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, GRAPH6_HEADER.len()),
        None => (line, 0),
    };
    let body = body.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: String| GraphError::Graph6 {
        offset: base + offset,
        reason,
    };

    let Some(&first) = body.first() else {
        return Err(err(0, "empty input".into()));
    };
    if first == 126 {
        return Err(err(
            0,
            format!("long form (n > {GRAPH6_MAX_N}) is not supported"),
        ));
    }
    if !(63..=125).contains(&first) {
        return Err(err(
            0,
            format!("byte {first:#04x} is not a valid order character"),
        ));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    for (i, &b) in body.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(
                i,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    if body.len() < 1 + expected {
        return Err(err(
            body.len(),
            format!(
                "truncated: n={n} needs {expected} data bytes, found {}",
                body.len() - 1
            ),
        ));
    }
    if body.len() > 1 + expected {
        return Err(err(
            1 + expected,
            "trailing bytes after the adjacency data".into(),
        ));
    }
    let data = &body[1..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if !bits.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(expected, "nonzero padding bits".into()));
        }
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses `n` followed by `u v` lines. Blank lines are ignored; duplicate
/// edges are idempotent.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, reason: String| GraphError::EdgeList { line, reason };

    let (first_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| {
        err(
            first_line,
            format!("expected a vertex count, found {header:?}"),
        )
    })?;
    if n > MAX_VERTICES {
        return Err(err(
            first_line,
            format!("vertex count {n} exceeds {MAX_VERTICES}"),
        ));
    }
    let mut g = Graph::new(n);
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(
                line,
                format!("expected two vertices, found {content:?}"),
            ));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| err(line, format!("not a vertex index: {tok:?}")))?;
            if *slot >= n {
                return Err(err(line, format!("vertex {slot} out of range for n={n}")));
            }
        }
        if ends[0] == ends[1] {
            return Err(err(line, format!("self-loop at vertex {}", ends[0])));
        }
        g.add_edge(ends[0], ends[1]);
    }
    Ok(g)
}

/// Graph families the generator knows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n-1}` with centre 0.
    Star(usize),
    /// Uniform labelled tree via a Prüfer sequence.
    RandomTree(usize),
    /// Simplicial-vertex accretion: each new vertex is attached to a
    /// random clique of the graph built so far.
    RandomChordal(usize),
    Gnp(usize, f64),
}

impl Family {
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::RandomTree(n)
            | Family::RandomChordal(n)
            | Family::Gnp(n, _) => n,
        }
    }
}

/// Builds a member of `family`. Random families are deterministic per seed.
pub fn generate(family: Family, seed: u64) -> Result<Graph, GraphError> {
    let n = family.order();
    if n == 0 {
        return Err(GraphError::InvalidArgument("generators need n >= 1".into()));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::InvalidArgument(format!(
            "n={n} exceeds {MAX_VERTICES}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    match family {
        Family::Path(_) => {
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
        }
        Family::Cycle(_) => {
            if n < 3 {
                return Err(GraphError::InvalidArgument(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        }
        Family::Complete(_) => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
        }
        Family::Star(_) => {
            for v in 1..n {
                g.add_edge(0, v);
            }
        }
        Family::RandomTree(_) => {
            if n == 2 {
                g.add_edge(0, 1);
            } else if n > 2 {
                let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
                for (u, v) in prufer_edges(n, &prufer) {
                    g.add_edge(u, v);
                }
            }
        }
        Family::RandomChordal(_) => {
            // clique each vertex was attached to when it was added
            let mut attached: Vec<VertexSet> = vec![VertexSet::EMPTY];
            for v in 1..n {
                let u = rng.gen_range(0..v);
                let mut clique = VertexSet::singleton(u);
                for w in attached[u].iter() {
                    if rng.gen_bool(0.5) {
                        clique.insert(w);
                    }
                }
                for w in clique.iter() {
                    g.add_edge(v, w);
                }
                attached.push(clique);
            }
        }
        Family::Gnp(_, p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GraphError::InvalidArgument(format!(
                    "p must lie in [0,1], got {p}"
                )));
            }
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    Ok(g)
}

fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n)
            .find(|&u| degree[u] == 1)
            .expect("Prüfer decoding has a leaf");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Shuffled copy of `g` under a random vertex relabelling; used by tests
/// that want labelling-independent inputs.
pub fn relabel_random(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::from_edges(g.n(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        generate(Family::Complete(n), 0).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(Family::Cycle(n), 0).unwrap()
    }

    #[test]
    fn graph6_small_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), k(2));
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
        assert_eq!(parse_graph6("Bw").unwrap(), k(3));
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), k(3));
        assert_eq!(parse_graph6("?").unwrap(), Graph::new(0));
        assert_eq!(cycle(4).to_graph6().unwrap(), "Cl");
        assert_eq!(
            generate(Family::Path(5), 0).unwrap().to_graph6().unwrap(),
            "DhC"
        );
    }

    #[test]
    fn graph6_petersen() {
        let edges = [
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 6),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 9),
            (5, 7),
            (5, 8),
            (6, 8),
            (6, 9),
            (7, 9),
        ];
        let g = Graph::from_edges(10, &edges);
        assert_eq!(g.to_graph6().unwrap(), "IheA@GUAo");
        assert_eq!(parse_graph6("IheA@GUAo").unwrap(), g);
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(GraphError::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("B"),
            Err(GraphError::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(GraphError::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("B "),
            Err(GraphError::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("~"),
            Err(GraphError::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("5"),
            Err(GraphError::Graph6 { offset: 0, .. })
        ));
        // "Bx" sets a padding bit
        assert!(matches!(
            parse_graph6("Bx"),
            Err(GraphError::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(">>graph6<<Bww"),
            Err(GraphError::Graph6 { offset: 12, .. })
        ));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(
            parse_edge_list("3\n0 1\n1 2").unwrap(),
            generate(Family::Path(3), 0).unwrap()
        );
        assert_eq!(parse_edge_list("2\n").unwrap(), Graph::new(2));
        assert_eq!(parse_edge_list("4\n0 1\n1 2\n2 3\n3 0").unwrap(), cycle(4));
        assert_eq!(parse_edge_list("3\n0 1\n1 0\n0 1").unwrap().edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        let line = |r: Result<Graph, GraphError>| match r {
            Err(GraphError::EdgeList { line, .. }) => line,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(line(parse_edge_list("3\n0 1\n1 3")), 3);
        assert_eq!(line(parse_edge_list("3\n0 0")), 2);
        assert_eq!(line(parse_edge_list("3\n0 x")), 2);
        assert_eq!(line(parse_edge_list("three")), 1);
        assert_eq!(line(parse_edge_list("3\n0 1 2")), 2);
        assert_eq!(line(parse_edge_list("")), 1);
    }

    #[test]
    fn generator_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(generate(Family::Path(1), 0).unwrap(), Graph::new(1));
        let t = generate(Family::RandomTree(8), 7).unwrap();
        assert_eq!(t.edge_count(), 7);
        assert!(t.is_connected());
        assert_eq!(generate(Family::Star(5), 0).unwrap().degree(0), 4);
        assert!(generate(Family::Cycle(2), 0).is_err());
        assert!(generate(Family::Gnp(4, 1.5), 0).is_err());
        assert!(generate(Family::Path(0), 0).is_err());
        assert_eq!(generate(Family::Gnp(6, 1.0), 3).unwrap(), k(6));
        assert_eq!(generate(Family::Gnp(6, 0.0), 3).unwrap(), Graph::new(6));
    }

    #[test]
    fn seeded_generators_are_deterministic() {
        for seed in 0..5 {
            for fam in [
                Family::RandomTree(9),
                Family::RandomChordal(9),
                Family::Gnp(9, 0.4),
            ] {
                assert_eq!(generate(fam, seed).unwrap(), generate(fam, seed).unwrap());
            }
        }
    }

    #[test]
    fn random_trees_and_chordal_graphs_have_their_shape() {
        for seed in 0..40 {
            let n = 1 + (seed as usize % 12);
            let t = generate(Family::RandomTree(n), seed).unwrap();
            assert!(t.is_forest() && t.is_connected(), "seed {seed}: {t:?}");
            let c = generate(Family::RandomChordal(n), seed).unwrap();
            assert!(c.is_chordal(), "seed {seed}: {c:?}");
        }
    }

    #[test]
    fn shape_predicates() {
        assert!(cycle(5).is_cycle());
        assert!(!cycle(5).is_forest());
        assert!(!cycle(5).is_chordal());
        assert!(cycle(3).is_chordal());
        assert!(!cycle(4).is_chordal());
        assert!(Graph::new(3).is_forest());
        assert!(k(5).is_chordal());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!two_triangles.is_cycle());
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(cycle(4).closed_neighborhood(0), VertexSet::from([0, 1, 3]));
        assert_eq!(Graph::new(1).closed_neighborhood(0), VertexSet::from([0]));
        let p3 = generate(Family::Path(3), 0).unwrap();
        assert_eq!(p3.closed_neighborhood(1), VertexSet::from([0, 1, 2]));
    }

    #[test]
    fn domination() {
        let p3 = generate(Family::Path(3), 0).unwrap();
        assert!(p3.is_dominating(&VertexSet::from([1])));
        assert!(!p3.is_dominating(&VertexSet::from([0])));
        assert!(p3.is_dominating(&p3.vertices()));
        assert!(!p3.is_dominating(&VertexSet::EMPTY));
        assert!(Graph::new(0).is_dominating(&VertexSet::EMPTY));
        assert_eq!(p3.min_dominating_set(18), Some(VertexSet::from([1])));
        assert_eq!(cycle(6).min_dominating_set(18).unwrap().len(), 2);
        assert_eq!(cycle(6).min_dominating_set(5), None);
    }

    #[test]
    fn independence_and_cover_numbers() {
        let c4 = cycle(4);
        let s = c4.max_independent_set();
        assert_eq!(s.len(), 2);
        assert!(c4.is_independent_set(&s));
        assert_eq!(k(6).independence_number(), 1);
        assert_eq!(Graph::new(5).independence_number(), 5);
        assert_eq!(cycle(5).vertex_cover_number(), 3);
        assert_eq!(c4.vertex_cover_number(), 2);
        assert_eq!(Graph::new(5).vertex_cover_number(), 0);
        assert_eq!(Graph::new(0).vertex_cover_number(), 0);
        for n in 3..=14 {
            assert_eq!(cycle(n).vertex_cover_number(), n.div_ceil(2));
        }
    }

    #[test]
    fn max_independent_set_is_deterministic() {
        let g = generate(Family::Gnp(14, 0.3), 11).unwrap();
        assert_eq!(g.max_independent_set(), g.max_independent_set());
        assert_eq!(cycle(4).max_independent_set(), VertexSet::from([0, 2]));
    }

    #[test]
    fn relabelling_preserves_invariants() {
        let g = generate(Family::Gnp(10, 0.35), 5).unwrap();
        let h = relabel_random(&g, 99);
        assert_eq!(g.edge_count(), h.edge_count());
        assert_eq!(g.independence_number(), h.independence_number());
    }
}
