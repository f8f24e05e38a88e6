//! Exact search for a subdivision of `K_t`.

use std::fmt;

use super::{Budget, Graph};
use crate::error::{Error, Result};

/// Branch vertices of a topological `K_t` and one path per branch pair.
///
/// `paths` is ordered by pair `(i, j)`, `i < j`, lexicographically; the path
/// for that pair runs from `branch[i]` to `branch[j]` inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologicalWitness {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl TopologicalWitness {
    /// Re-checks the witness against `g` from scratch: every path exists in
    /// `g`, connects the right branch pair, and the interiors are pairwise
    /// disjoint and avoid the branch set.
    pub fn verify(&self, g: &Graph) -> bool {
        let t = self.branch.len();
        let n = g.vertex_count();
        if self.paths.len() != t * t.saturating_sub(1) / 2 {
            return false;
        }
        let mut owner = vec![false; n];
        for &b in &self.branch {
            if b >= n || owner[b] {
                return false;
            }
            owner[b] = true;
        }
        let pairs = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j)));
        for ((i, j), path) in pairs.zip(&self.paths) {
            if path.len() < 2 || path[0] != self.branch[i] || *path.last().unwrap() != self.branch[j] {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if v >= n || owner[v] {
                    return false;
                }
                owner[v] = true;
            }
        }
        true
    }
}

impl fmt::Display for TopologicalWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "branch: {}", join(&self.branch))?;
        let t = self.branch.len();
        let pairs = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j)));
        for ((i, j), path) in pairs.zip(&self.paths) {
            writeln!(f, "path {}-{}: {}", self.branch[i], self.branch[j], join(path))?;
        }
        Ok(())
    }
}

struct Search<'a> {
    adj: &'a [u128],
    branch: u128,
    used: u128,
    pairs: Vec<(usize, usize)>,
    paths: Vec<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Budget(format!("subdivision search exceeded {} nodes", self.max_nodes)));
        }
        Ok(())
    }

    fn free(&self) -> u128 {
        !(self.branch | self.used)
    }

    /// Every unresolved pair needs its own free neighbour at both ends.
    fn feasible(&self, from: usize) -> bool {
        let mut demand = [0u32; 128];
        for &(u, v) in &self.pairs[from..] {
            if self.adj[u] >> v & 1 == 0 {
                demand[u] += 1;
                demand[v] += 1;
            }
        }
        let free = self.free();
        (0..128).filter(|&b| demand[b] > 0).all(|b| (self.adj[b] & free).count_ones() >= demand[b])
    }

    fn solve(&mut self, idx: usize) -> Result<bool> {
        self.tick()?;
        if idx == self.pairs.len() {
            return Ok(true);
        }
        let (u, v) = self.pairs[idx];
        // A direct edge uses no interior vertex, so it is never worse.
        if self.adj[u] >> v & 1 == 1 {
            self.paths[idx] = vec![u, v];
            return self.solve(idx + 1);
        }
        if !self.feasible(idx) {
            return Ok(false);
        }
        let mut path = vec![u];
        self.extend(idx, &mut path, v)
    }

    /// Grows a chordless path from `path[0]` toward `target` through free
    /// vertices. Any path with a chord can be shortcut to one using a subset
    /// of its vertices, so chordless paths suffice.
    fn extend(&mut self, idx: usize, path: &mut Vec<usize>, target: usize) -> Result<bool> {
        self.tick()?;
        let last = *path.last().expect("non-empty");
        if path.len() > 1 && self.adj[last] >> target & 1 == 1 {
            path.push(target);
            self.paths[idx] = path.clone();
            if self.solve(idx + 1)? {
                return Ok(true);
            }
            path.pop();
            return Ok(false);
        }
        let on_path = path.iter().fold(0u128, |m, &p| m | 1 << p);
        let earlier = on_path & !(1u128 << last);
        let mut options = self.adj[last] & self.free() & !on_path;
        while options != 0 {
            let w = options.trailing_zeros() as usize;
            options &= options - 1;
            if self.adj[w] & earlier != 0 {
                continue;
            }
            self.used |= 1 << w;
            path.push(w);
            let found = self.extend(idx, path, target)?;
            path.pop();
            self.used &= !(1u128 << w);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let t = idx.len();
    for i in (0..t).rev() {
        if idx[i] < n - t + i {
            idx[i] += 1;
            for j in i + 1..t {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Finds a subdivision of `K_t` in `g`, if any.
///
/// Branch sets are tried over vertices of degree at least `t − 1`, highest
/// degree first; for each set the pairwise paths are found by full
/// backtracking, so the answer is exact.
pub fn contains_topological_clique(g: &Graph, t: usize, budget: &Budget) -> Result<Option<TopologicalWitness>> {
    let n = g.vertex_count();
    if n > budget.subdivision_vertices {
        return Err(Error::Budget(format!(
            "subdivision search limited to {} vertices, graph has {n}",
            budget.subdivision_vertices
        )));
    }
    let adj = g.masks().ok_or_else(|| Error::Budget("subdivision search limited to 128 vertices".into()))?;
    if t == 0 {
        return Ok(Some(TopologicalWitness { branch: vec![], paths: vec![] }));
    }
    let mut candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 >= t).collect();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    if candidates.len() < t {
        return Ok(None);
    }

    let pairs_of = |branch: &[usize]| -> Vec<(usize, usize)> {
        (0..t).flat_map(|i| (i + 1..t).map(move |j| (branch[i], branch[j]))).collect()
    };
    let mut nodes = 0;
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        let branch: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
        let mask = branch.iter().fold(0u128, |m, &b| m | 1 << b);
        let mut search = Search {
            adj: &adj,
            branch: mask,
            used: 0,
            pairs: pairs_of(&branch),
            paths: vec![Vec::new(); t * (t - 1) / 2],
            nodes,
            max_nodes: budget.max_nodes,
        };
        let found = search.feasible(0) && search.solve(0)?;
        nodes = search.nodes;
        if found {
            return Ok(Some(TopologicalWitness { branch, paths: search.paths }));
        }
        if !next_combination(&mut idx, candidates.len()) {
            return Ok(None);
        }
    }
}
