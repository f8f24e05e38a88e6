use serde::{Deserialize, Serialize};

use super::{maximum_matching, Graph};

/// Structure of the complement graph used when classifying dense critical
/// graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementSummary {
    pub components: usize,
    /// Maximum number of independent edges in the complement.
    pub matching: usize,
    pub has_triangle: bool,
}

pub fn complement_analysis(g: &Graph) -> ComplementSummary {
    let comp = g.complement();
    ComplementSummary {
        components: component_count(&comp),
        matching: maximum_matching(&comp).len(),
        has_triangle: has_triangle(&comp),
    }
}

pub(crate) fn component_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().into_iter().any(|(u, v)| g.neighbors(u).any(|w| w != v && g.has_edge(v, w)))
}
