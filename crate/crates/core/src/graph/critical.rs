use super::families::{build_family, FamilySpec};
use super::{coloring::is_colorable, Budget, Graph};
use crate::error::{Error, Result};
use crate::exact::{ceil, ratio, Rational};
use crate::exec::{self, Execution};
use num_traits::ToPrimitive;

/// True iff `χ(g) = r` and every proper subgraph has smaller chromatic
/// number.
///
/// Only edge deletions are tried: once every edge is critical and no vertex
/// is isolated, deleting a vertex removes an edge and so cannot keep χ at
/// `r`. The edge tests run under `mode`.
pub fn is_critical(g: &Graph, r: usize, budget: &Budget, mode: Execution) -> Result<bool> {
    let n = g.vertex_count();
    if r == 0 {
        return Ok(false);
    }
    if r == 1 {
        return Ok(n == 1);
    }
    if (0..n).any(|v| g.degree(v) == 0) {
        return Ok(false);
    }
    if !is_colorable(g, r, budget)? || is_colorable(g, r - 1, budget)? {
        return Ok(false);
    }
    let results = exec::map(mode, g.edges(), |(u, v)| is_colorable(&g.without_edge(u, v), r - 1, budget));
    for res in results {
        if !res? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices adjacent to every other vertex (degree `n − 1`). This is the
/// dominating-vertex sense, not the clique-neighbourhood one.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

/// `⌈(3/2)((5/3)r − n)⌉`, the guaranteed number of simplicial vertices of an
/// r-critical graph with `n < 5r/3`.
pub fn gallai_simplicial_threshold(r: usize, n: usize) -> i64 {
    let x: Rational = ratio(3, 2) * (ratio(5 * r as i64, 3) - ratio(n as i64, 1));
    ceil(&x).to_i64().expect("small")
}

/// Checks that an r-critical graph on fewer than `5r/3` vertices has the
/// guaranteed number of simplicial vertices. Returns `Inapplicable` when `g`
/// is not r-critical or is too large.
pub fn gallai_simplicial_check(g: &Graph, r: usize, budget: &Budget) -> Result<bool> {
    let n = g.vertex_count();
    if r < 3 || 3 * n >= 5 * r {
        return Err(Error::inapplicable(format!("needs r ≥ 3 and n < 5r/3, got r = {r}, n = {n}")));
    }
    if !is_critical(g, r, budget, Execution::default())? {
        return Err(Error::inapplicable(format!("graph is not {r}-critical")));
    }
    Ok(simplicial_vertices(g).len() as i64 >= gallai_simplicial_threshold(r, n))
}

/// For every part-size split of `Δ_{p+1}`, the join `K_{r−p−1} ∨ Δ` attains
/// `2m = (r−1)n + p(r−p) − 2` exactly.
pub fn gallai_equality_check(r: usize, p: usize) -> Result<bool> {
    if p < 2 || p + 1 > r {
        return Err(Error::domain(format!("needs 2 ≤ p ≤ r − 1, got r = {r}, p = {p}")));
    }
    let clique = Graph::complete(r - p - 1);
    for b1 in 1..p {
        let delta = build_family(&FamilySpec::Delta { a: p - 1, b1, b2: p - b1 })?;
        let g = clique.join(&delta);
        let n = g.vertex_count() as i64;
        let (r, p) = (r as i64, p as i64);
        if n != r + p || 2 * g.edge_count() as i64 != (r - 1) * n + p * (r - p) - 2 {
            return Ok(false);
        }
    }
    Ok(true)
}
