use super::{Budget, Graph};
use crate::error::{Error, Result};

fn masks_within(g: &Graph, budget: &Budget) -> Result<Vec<u128>> {
    if g.vertex_count() > budget.coloring_vertices {
        return Err(Error::Budget(format!(
            "coloring limited to {} vertices, graph has {}",
            budget.coloring_vertices,
            g.vertex_count()
        )));
    }
    g.masks().ok_or_else(|| Error::Budget("coloring limited to 128 vertices".into()))
}

/// Size of a maximum clique (Bron–Kerbosch with pivoting).
pub fn max_clique(g: &Graph) -> usize {
    fn expand(adj: &[u128], size: usize, mut cand: u128, mut excl: u128, best: &mut usize) {
        if cand == 0 {
            if excl == 0 {
                *best = (*best).max(size);
            }
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let pivot_pool = cand | excl;
        let pivot = (0..128)
            .filter(|&u| pivot_pool >> u & 1 == 1)
            .max_by_key(|&u| (adj[u] & cand).count_ones())
            .expect("non-empty");
        let mut todo = cand & !adj[pivot];
        while todo != 0 {
            let v = todo.trailing_zeros() as usize;
            todo &= todo - 1;
            expand(adj, size + 1, cand & adj[v], excl & adj[v], best);
            cand &= !(1 << v);
            excl |= 1 << v;
        }
    }
    let Some(adj) = g.masks() else {
        return 0;
    };
    let n = g.vertex_count();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = 0;
    expand(&adj, 0, all, 0, &mut best);
    best
}

struct Colorer<'a> {
    adj: &'a [u128],
    k: usize,
    colors: Vec<Option<usize>>,
    nodes: u64,
    max_nodes: u64,
}

impl Colorer<'_> {
    /// Uncolored vertex of maximum saturation, ties broken by uncolored degree.
    fn pick(&self) -> Option<(usize, u128)> {
        let mut best: Option<(usize, (u32, u32), u128)> = None;
        for v in 0..self.colors.len() {
            if self.colors[v].is_some() {
                continue;
            }
            let mut used = 0u128;
            let mut free_deg = 0;
            let mut nbrs = self.adj[v];
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                match self.colors[u] {
                    Some(c) => used |= 1 << c,
                    None => free_deg += 1,
                }
            }
            let key = (used.count_ones(), free_deg);
            if best.is_none_or(|(_, k, _)| key > k) {
                best = Some((v, key, used));
            }
        }
        best.map(|(v, _, used)| (v, used))
    }

    fn search(&mut self, max_used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Budget(format!("coloring search exceeded {} nodes", self.max_nodes)));
        }
        let Some((v, used)) = self.pick() else {
            return Ok(true);
        };
        // Colors beyond max_used + 1 are symmetric to max_used + 1.
        let limit = (max_used + 1).min(self.k);
        for c in 0..limit {
            if used >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = Some(c);
            if self.search(max_used.max(c + 1))? {
                return Ok(true);
            }
        }
        self.colors[v] = None;
        Ok(false)
    }
}

/// Exact k-colorability by DSATUR-ordered backtracking.
pub fn is_colorable(g: &Graph, k: usize, budget: &Budget) -> Result<bool> {
    let adj = masks_within(g, budget)?;
    if g.vertex_count() == 0 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    if k >= g.vertex_count() {
        return Ok(true);
    }
    let mut colorer =
        Colorer { adj: &adj, k, colors: vec![None; g.vertex_count()], nodes: 0, max_nodes: budget.max_nodes };
    colorer.search(0)
}

/// Number of colors used by greedy DSATUR; an upper bound on χ.
fn greedy_colors(adj: &[u128]) -> usize {
    let n = adj.len();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut used_max = 0;
    for _ in 0..n {
        let (v, used) = (0..n)
            .filter(|&v| colors[v].is_none())
            .map(|v| {
                let used = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .filter_map(|u| colors[u])
                    .fold(0u128, |m, c| m | (1 << c));
                (v, used)
            })
            .max_by_key(|&(v, used)| (used.count_ones(), adj[v].count_ones(), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let c = (!used).trailing_zeros() as usize;
        colors[v] = Some(c);
        used_max = used_max.max(c + 1);
    }
    used_max
}

/// Exact chromatic number: clique lower bound, greedy upper bound, and a
/// colorability test for every value in between.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let adj = masks_within(g, budget)?;
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let lower = max_clique(g).max(1);
    let upper = greedy_colors(&adj);
    for k in lower..upper {
        if is_colorable(g, k, budget)? {
            return Ok(k);
        }
    }
    Ok(upper)
}
