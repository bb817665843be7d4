//! Brute-force oracles and random inputs shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use domcx::homology::{boundary_matrix, reduced_betti};
use domcx::{Graph, Hypergraph, SimplicialComplex, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn set_of_mask(mask: u64) -> VertexSet {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Smallest vertex cover by scanning all `2^n` subsets.
pub fn brute_tau(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    (0u64..1 << n)
        .filter(|&m| {
            edges
                .iter()
                .all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1)
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Every vertex lies in `s` or has a neighbour in `s`, tested edge by edge.
pub fn brute_dominates(g: &Graph, s: u64) -> bool {
    (0..g.n()).all(|v| s >> v & 1 == 1 || (0..g.n()).any(|u| s >> u & 1 == 1 && g.has_edge(u, v)))
}

/// All faces of `k` as bitmasks, via its facets.
pub fn faces(k: &SimplicialComplex) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for f in k.facets() {
        let fm = mask_of(f);
        let mut sub = fm;
        loop {
            out.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & fm;
        }
    }
    out
}

pub fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

/// The complex whose faces are the subsets of `{0..n-1}` accepted by `pred`.
pub fn complex_from_predicate(n: usize, pred: impl Fn(u64) -> bool) -> SimplicialComplex {
    let faces: Vec<u64> = (0u64..1 << n).filter(|&m| pred(m)).collect();
    let maximal = faces
        .iter()
        .filter(|&&a| !faces.iter().any(|&b| b != a && a & b == a))
        .map(|&m| set_of_mask(m));
    SimplicialComplex::from_facets(n, maximal)
}

/// Rank over GF(2) by textbook row reduction on a boolean table.
pub fn naive_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Every simplicial complex on `{0..n-1}` (including void and the full
/// simplex), enumerated as down-sets of the Boolean lattice.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let mut order: Vec<u64> = (0u64..1 << n).collect();
    order.sort_by_key(|m| (m.count_ones(), *m));
    let mut out = Vec::new();
    let mut chosen = vec![false; 1 << n];
    fn rec(
        i: usize,
        n: usize,
        order: &[u64],
        chosen: &mut [bool],
        out: &mut Vec<SimplicialComplex>,
    ) {
        if i == order.len() {
            let faces: Vec<u64> = (0u64..1 << n).filter(|&m| chosen[m as usize]).collect();
            let maximal = faces
                .iter()
                .filter(|&&a| !(0..n).any(|v| a >> v & 1 == 0 && chosen[(a | 1 << v) as usize]))
                .map(|&m| set_of_mask(m));
            out.push(SimplicialComplex::from_facets(n, maximal));
            return;
        }
        let m = order[i];
        rec(i + 1, n, order, chosen, out);
        let allowed = (0..n)
            .filter(|&v| m >> v & 1 == 1)
            .all(|v| chosen[(m & !(1 << v)) as usize]);
        if allowed {
            chosen[m as usize] = true;
            rec(i + 1, n, order, chosen, out);
            chosen[m as usize] = false;
        }
    }
    rec(0, n, &order, &mut chosen, &mut out);
    out
}

/// A random complex generated by up to `max_facets` random subsets.
pub fn random_complex(rng: &mut ChaCha8Rng, n: usize, max_facets: usize) -> SimplicialComplex {
    let k = rng.gen_range(1..=max_facets);
    let gens = (0..k).map(|_| set_of_mask(rng.gen_range(0u64..1 << n)));
    SimplicialComplex::from_facets(n, gens)
}

/// `n` in `1..=max_n`, `1..=max_edges` hyperedges, each vertex kept with
/// probability 0.4; duplicates and empty edges can occur.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, max_n: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_edges);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        if !edges.is_empty() && rng.gen_bool(0.15) {
            let j = rng.gen_range(0..edges.len());
            edges.push(edges[j]);
        } else {
            edges.push((0..n).filter(|_| rng.gen_bool(0.4)).collect());
        }
    }
    Hypergraph::new(n, edges)
}

/// `K^∨` straight from its definition.
pub fn brute_dual(k: &SimplicialComplex) -> SimplicialComplex {
    let n = k.n();
    let fk = faces(k);
    let full = (1u64 << n) - 1;
    complex_from_predicate(n, |m| !fk.contains(&(full & !m)))
}

/// `∂∂ = 0` in every degree, the Euler identity, and
/// `β̃_{i+1}(ΣK) = β̃_i(K)`. Void complexes pass vacuously.
pub fn engine_sanity(k: &SimplicialComplex) -> Result<(), String> {
    let Some(top) = k.dim() else { return Ok(()) };
    for d in 1..=top {
        let lower = boundary_matrix(k, d - 1).map_err(|e| e.to_string())?;
        let upper = boundary_matrix(k, d).map_err(|e| e.to_string())?;
        if !lower.mul(&upper).is_zero() {
            return Err(format!("boundary of boundary nonzero at d={d}"));
        }
    }
    let p = reduced_betti(k);
    if !p.euler_identity_holds() {
        return Err(format!("Euler identity fails: {p}"));
    }
    let fv = k.f_vector().map_err(|e| e.to_string())?;
    if p.face_count(-1) != 1 || (0..fv.len()).any(|i| fv[i] != p.face_count(i as isize)) {
        return Err(format!("face counts disagree with f-vector {fv:?}"));
    }
    let s = reduced_betti(&k.suspension().map_err(|e| e.to_string())?);
    let top = top + 2;
    if (-1..=top).any(|i| s.get(i + 1) != p.get(i)) || s.get(-1) != 0 {
        return Err(format!("suspension shift fails: {p} vs {s}"));
    }
    Ok(())
}
