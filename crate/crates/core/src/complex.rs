//! Abstract simplicial complexes stored by their facets.
//!
//! A complex always carries its ground set `{0..n-1}` explicitly, because the
//! combinatorial Alexander dual is taken relative to it and unused ground
//! vertices change the dual. The void complex (no faces) and the empty
//! complex (only the empty face) are different values: the first has
//! `facets == []`, the second `facets == [∅]`.

use std::collections::HashSet;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::Graph;
use crate::hypergraph::{bowtie, Hypergraph, Involution};

/// Largest ground set the generic minimal-non-face scan will attempt.
pub const NONFACE_SCAN_MAX_N: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("{0} is undefined on the void complex")]
    Void(&'static str),
    #[error("ground set of size {n} exceeds the limit {limit} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("dimension {dim} out of range (complex has dimension {top})")]
    DimensionOutOfRange { dim: isize, top: isize },
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("map is not a valid embedding: {reason} (face {face})")]
    Embedding { reason: String, face: VertexSet },
    #[error("facet text parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// No faces at all.
    Void,
    /// Exactly the empty face.
    Empty,
    NonEmpty,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Antichain, sorted lexicographically.
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces` on ground set `{0..n-1}`. Non-maximal
    /// and repeated generators are dropped.
    ///
    /// Panics if a generator leaves the ground set.
    pub fn from_facets(n: usize, faces: impl IntoIterator<Item = VertexSet>) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "ground set {n} exceeds capacity {MAX_VERTICES}"
        );
        let ground = VertexSet::full(n);
        let mut gens: Vec<VertexSet> = faces.into_iter().collect();
        for f in &gens {
            assert!(
                f.is_subset(&ground),
                "face {f} outside ground set of size {n}"
            );
        }
        // larger sets first so every kept set is already maximal
        gens.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        gens.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(gens.len());
        for g in gens {
            if !facets.iter().any(|f| g.is_subset(f)) {
                facets.push(g);
            }
        }
        facets.sort();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        Self::from_facets(n, [])
    }

    pub fn empty(n: usize) -> Self {
        Self::from_facets(n, [VertexSet::EMPTY])
    }

    pub fn full_simplex(n: usize) -> Self {
        Self::from_facets(n, [VertexSet::full(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Empty,
            _ => ComplexKind::NonEmpty,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == VertexSet::full(self.n)
    }

    /// `None` for the void complex, `Some(-1)` for the empty complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains(&self, sigma: &VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(f))
    }

    /// Faces of dimension `d` (`d + 1` vertices) in lexicographic order.
    /// Dimension `-1` yields the empty face unless the complex is void.
    pub fn faces_of_dim(&self, d: isize) -> Vec<VertexSet> {
        if d < -1 {
            return Vec::new();
        }
        let k = (d + 1) as usize;
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in self.facets.iter().filter(|f| f.len() >= k) {
            if f.len() == k {
                seen.insert(*f);
            } else {
                seen.extend(f.subsets_of_size(k));
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// Face counts in dimensions `0..=dim`; the empty face is implied.
    pub fn f_vector(&self) -> Result<Vec<usize>, ComplexError> {
        let top = self.dim().ok_or(ComplexError::Void("f-vector"))?;
        Ok((0..=top).map(|d| self.faces_of_dim(d).len()).collect())
    }

    pub fn is_antichain(&self) -> bool {
        self.facets.iter().enumerate().all(|(i, a)| {
            self.facets
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset(b))
        })
    }

    /// Inclusion-minimal subsets of the ground set that are not faces,
    /// found level by level: a set is a candidate only if all its maximal
    /// proper subsets are faces.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::Void("minimal non-faces"));
        }
        if self.n > NONFACE_SCAN_MAX_N {
            return Err(ComplexError::TooLarge {
                what: "the minimal non-face scan",
                n: self.n,
                limit: NONFACE_SCAN_MAX_N,
            });
        }
        let mut out = Vec::new();
        let mut level = vec![VertexSet::EMPTY];
        let mut d = 0isize;
        while !level.is_empty() {
            for f in &level {
                let start = f.last().map_or(0, |m| m + 1);
                for v in start..self.n {
                    let c = f.with(v);
                    if !self.contains(&c) && c.iter().all(|u| self.contains(&c.without(u))) {
                        out.push(c);
                    }
                }
            }
            level = self.faces_of_dim(d);
            d += 1;
        }
        out.sort();
        Ok(out)
    }

    /// `K^∨ = { σ ⊆ X : X \ σ ∉ K }` on the same ground set.
    pub fn alexander_dual(&self) -> Result<Self, ComplexError> {
        if self.is_void() {
            return Ok(Self::full_simplex(self.n));
        }
        let nonfaces = self.minimal_nonfaces()?;
        Ok(Self::from_facets(
            self.n,
            nonfaces.iter().map(|s| s.complement(self.n)),
        ))
    }

    /// Suspension with apexes `n` and `n + 1`.
    pub fn suspension(&self) -> Result<Self, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::Void("suspension"));
        }
        let (a0, a1) = (self.n, self.n + 1);
        let facets = self.facets.iter().flat_map(|f| [f.with(a0), f.with(a1)]);
        Ok(Self::from_facets(self.n + 2, facets))
    }

    /// Whether `gamma` acts freely: for every facet `σ`, `γσ` is a face and
    /// `σ ∩ γσ = ∅`. Faces inherit the intersection property from facets.
    pub fn is_free_involution(&self, gamma: &[usize]) -> Result<bool, ComplexError> {
        let gamma = Involution::new(gamma.to_vec())
            .map_err(|e| ComplexError::InvalidInvolution(e.to_string()))?;
        if gamma.len() != self.n {
            return Err(ComplexError::InvalidInvolution(format!(
                "permutation of {} points on a ground set of {}",
                gamma.len(),
                self.n
            )));
        }
        Ok(self.facets.iter().all(|f| {
            let image = gamma.apply_set(f);
            self.contains(&image) && !image.intersects(f)
        }))
    }

    /// Facet text: `n k`, then one facet per line (blank = empty facet).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.facets.len());
        for f in &self.facets {
            let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Reads one complex in facet text format. Generators are normalised to an
/// antichain.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let err = |line: usize, reason: String| ComplexError::Parse { line, reason };
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| err(1, "missing header \"n k\"".into()))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, k] = nums.as_slice() else {
        return Err(err(1, format!("expected \"n k\", found {header:?}")));
    };
    let n: usize = n
        .parse()
        .map_err(|_| err(1, format!("bad ground-set size {n:?}")))?;
    let k: usize = k
        .parse()
        .map_err(|_| err(1, format!("bad facet count {k:?}")))?;
    if n > MAX_VERTICES {
        return Err(err(1, format!("ground set {n} exceeds {MAX_VERTICES}")));
    }
    let mut facets = Vec::with_capacity(k);
    for j in 0..k {
        let line_no = j + 2;
        let mut f = VertexSet::EMPTY;
        for tok in lines.next().unwrap_or("").split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| err(line_no, format!("not a vertex: {tok:?}")))?;
            if v >= n {
                return Err(err(line_no, format!("vertex {v} out of range for n={n}")));
            }
            f.insert(v);
        }
        facets.push(f);
    }
    if let Some((i, extra)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(
            k + 2 + i,
            format!("unexpected content after {k} facets: {extra:?}"),
        ));
    }
    Ok(SimplicialComplex::from_facets(n, facets))
}

/// Maximal subsets of `{0..n-1}` containing none of `edges`, by
/// backtracking over vertices in increasing order.
fn maximal_independent_sets(n: usize, edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut through: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    for e in edges {
        for v in e.iter() {
            through[v].push(*e);
        }
    }
    let mut out = Vec::new();
    extend_independent(0, n, &through, VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
    out
}

fn extend_independent(
    v: usize,
    n: usize,
    through: &[Vec<VertexSet>],
    inside: VertexSet,
    outside: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    // an excluded vertex must stay blockable: some edge through it has its
    // other vertices still available
    let available = outside.complement(n);
    let blockable =
        |u: usize, avail: &VertexSet| through[u].iter().any(|e| e.without(u).is_subset(avail));
    if !outside.iter().all(|u| blockable(u, &available)) {
        return;
    }
    if v == n {
        out.push(inside);
        return;
    }
    let grown = inside.with(v);
    if through[v].iter().all(|e| !e.is_subset(&grown)) {
        extend_independent(v + 1, n, through, grown, outside, out);
    }
    if blockable(v, &available.without(v)) {
        extend_independent(v + 1, n, through, inside, outside.with(v), out);
    }
}

/// `I(G)`: facets are the maximal independent sets of `g`.
pub fn independence_complex_graph(g: &Graph) -> SimplicialComplex {
    let edges: Vec<VertexSet> = g
        .edges()
        .into_iter()
        .map(|(u, v)| VertexSet::from([u, v]))
        .collect();
    SimplicialComplex::from_facets(g.n(), maximal_independent_sets(g.n(), &edges))
}

/// `I(H)`: faces are the sets containing no hyperedge. Void if some
/// hyperedge is empty.
pub fn independence_complex_hyper(h: &Hypergraph) -> SimplicialComplex {
    if h.has_empty_edge() {
        return SimplicialComplex::void(h.n());
    }
    let minimal = h.minimal_edges();
    SimplicialComplex::from_facets(h.n(), maximal_independent_sets(h.n(), minimal.edges()))
}

/// `D(G) = I(D_G)`: sets whose complement dominates `g`.
pub fn dominance_complex(g: &Graph) -> SimplicialComplex {
    independence_complex_hyper(&Hypergraph::dominance(g))
}

/// `I^∨(H)` via the minimal hyperedges, which are exactly the minimal
/// non-faces of `I(H)`. Faces are the non-transversal sets.
pub fn independence_dual(h: &Hypergraph) -> SimplicialComplex {
    let n = h.n();
    SimplicialComplex::from_facets(n, h.minimal_edges().edges().iter().map(|e| e.complement(n)))
}

/// `D^∨(G)`.
pub fn dominance_dual(g: &Graph) -> SimplicialComplex {
    independence_dual(&Hypergraph::dominance(g))
}

/// Largest `m` accepted by [`cross_polytope_boundary`].
pub const CROSS_POLYTOPE_MAX_M: usize = 24;

/// `A_m`, the boundary of the `(m+1)`-dimensional cross-polytope, on ground
/// set `{0..2m+1}`; vertex `2i` is `+(i+1)` and `2i+1` is `−(i+1)`.
///
/// Panics if `m > CROSS_POLYTOPE_MAX_M`.
pub fn cross_polytope_boundary(m: usize) -> SimplicialComplex {
    assert!(m <= CROSS_POLYTOPE_MAX_M, "A_{m} has 2^{} facets", m + 1);
    let mut facets = vec![VertexSet::EMPTY];
    for i in 0..=m {
        facets = facets
            .into_iter()
            .flat_map(|f| [f.with(2 * i), f.with(2 * i + 1)])
            .collect();
    }
    SimplicialComplex::from_facets(2 * (m + 1), facets)
}

/// The antipodal involution of `A_m`, swapping `2i` and `2i + 1`.
pub fn antipodal(m: usize) -> Involution {
    Involution::new((0..2 * (m + 1)).map(|x| x ^ 1).collect()).expect("x ^ 1 is an involution")
}

/// A vertex map between two complexes. Validity is checked, not assumed.
#[derive(Clone, Debug)]
pub struct SimplicialVertexMap {
    pub domain: SimplicialComplex,
    pub codomain: SimplicialComplex,
    pub map: Vec<usize>,
}

impl SimplicialVertexMap {
    pub fn image(&self, s: &VertexSet) -> VertexSet {
        s.map(|v| self.map[v])
    }

    pub fn image_facets(&self) -> Vec<VertexSet> {
        self.domain.facets().iter().map(|f| self.image(f)).collect()
    }

    pub fn is_injective(&self) -> bool {
        let img: HashSet<usize> = self.map.iter().copied().collect();
        img.len() == self.map.len()
    }

    /// Every facet of the domain lands on a face of the codomain. On
    /// failure the offending domain facet is returned.
    pub fn check_simplicial(&self) -> Result<(), ComplexError> {
        if self.map.len() != self.domain.n() || self.map.iter().any(|&w| w >= self.codomain.n()) {
            return Err(ComplexError::Embedding {
                reason: "vertex map does not match the ground sets".into(),
                face: VertexSet::EMPTY,
            });
        }
        match self
            .domain
            .facets()
            .iter()
            .find(|f| !self.codomain.contains(&self.image(f)))
        {
            None => Ok(()),
            Some(f) => Err(ComplexError::Embedding {
                reason: format!("image {} is not a face of the codomain", self.image(f)),
                face: *f,
            }),
        }
    }

    /// `f ∘ s = t ∘ f`.
    pub fn is_equivariant(&self, s: &Involution, t: &Involution) -> bool {
        (0..self.map.len()).all(|v| self.map[s.apply(v)] == t.apply(self.map[v]))
    }
}

/// The equivariant embedding `A_{α-1} ↪ I(G^⋈)` sending `+i ↦ (+, v_i)` and
/// `−i ↦ (−, v_i)` for the maximum independent set `{v_1 < .. < v_α}`.
///
/// Fails with the offending face if the map is not injective, not
/// simplicial or not equivariant.
pub fn lemma7_embedding(g: &Graph) -> Result<SimplicialVertexMap, ComplexError> {
    let sigma = g.max_independent_set().to_vec();
    let alpha = sigma.len();
    if alpha == 0 {
        return Err(ComplexError::Embedding {
            reason: "graph has no vertices, α = 0".into(),
            face: VertexSet::EMPTY,
        });
    }
    let n = g.n();
    let domain = cross_polytope_boundary(alpha - 1);
    let codomain = independence_complex_graph(&bowtie(g));
    let map: Vec<usize> = (0..2 * alpha)
        .map(|x| {
            if x % 2 == 0 {
                sigma[x / 2]
            } else {
                n + sigma[x / 2]
            }
        })
        .collect();
    let f = SimplicialVertexMap {
        domain,
        codomain,
        map,
    };
    if !f.is_injective() {
        return Err(ComplexError::Embedding {
            reason: "vertex map is not injective".into(),
            face: VertexSet::full(2 * alpha),
        });
    }
    f.check_simplicial()?;
    if !f.is_equivariant(&antipodal(alpha - 1), &Involution::bowtie(n)) {
        return Err(ComplexError::Embedding {
            reason: "map does not commute with the involutions".into(),
            face: VertexSet::full(2 * alpha),
        });
    }
    Ok(f)
}
