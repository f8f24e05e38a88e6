use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// A named graph family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Hajós graph: cliques on `A` and `B1 ∪ B2`, apex `a` on `A ∪ B1`,
    /// apex `b` on `A ∪ B2`. Requires `b1 + b2 = a + 1`; `r = a + 2`.
    Delta { a: usize, b1: usize, b2: usize },
    /// Cliques `A = A1 ∪ A2`, `B = B1 ∪ B2`, all of `A2 × B2`, apex `c` on
    /// `A1 ∪ B1`. Requires `a1 + a2 = b1 + b2` and `a2 + b2 ≤ a1 + a2`;
    /// `r = a1 + a2 + 1`.
    EFamily { a1: usize, a2: usize, b1: usize, b2: usize },
    /// `C_5` with every vertex blown up to `K_k`.
    Catlin { k: usize },
    Complete { n: usize },
    Join(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Construction(msg));
        match *self {
            FamilySpec::Delta { a, b1, b2 } => {
                if a == 0 || b1 == 0 || b2 == 0 {
                    return bad(format!("Delta parts must be non-empty, got |A|={a}, |B1|={b1}, |B2|={b2}"));
                }
                if b1 + b2 != a + 1 {
                    return bad(format!("Delta needs |B1|+|B2| = |A|+1, got {b1}+{b2} vs {a}+1"));
                }
            }
            FamilySpec::EFamily { a1, a2, b1, b2 } => {
                if [a1, a2, b1, b2].contains(&0) {
                    return bad("EFamily parts must be non-empty".into());
                }
                if a1 + a2 != b1 + b2 {
                    return bad(format!("EFamily needs |A1|+|A2| = |B1|+|B2|, got {} vs {}", a1 + a2, b1 + b2));
                }
                if a2 + b2 > a1 + a2 {
                    return bad(format!("EFamily needs |A2|+|B2| ≤ r−1 = {}, got {}", a1 + a2, a2 + b2));
                }
            }
            FamilySpec::Catlin { k } => {
                if k == 0 {
                    return bad("Catlin needs k ≥ 1".into());
                }
            }
            FamilySpec::Complete { .. } => {}
            FamilySpec::Join(ref left, ref right) => {
                left.validate()?;
                right.validate()?;
            }
        }
        Ok(())
    }

    /// The chromatic number the construction is known to have.
    pub fn nominal_chromatic(&self) -> usize {
        match *self {
            FamilySpec::Delta { a, .. } => a + 2,
            FamilySpec::EFamily { a1, a2, .. } => a1 + a2 + 1,
            FamilySpec::Catlin { k } => (5 * k).div_ceil(2),
            FamilySpec::Complete { n } => n,
            FamilySpec::Join(ref l, ref r) => l.nominal_chromatic() + r.nominal_chromatic(),
        }
    }

    /// Every valid `Δ_r` split.
    pub fn delta_members(r: usize) -> Vec<FamilySpec> {
        if r < 3 {
            return Vec::new();
        }
        (1..r - 1).map(|b1| FamilySpec::Delta { a: r - 2, b1, b2: r - 1 - b1 }).collect()
    }

    /// Every valid `E_r` split.
    pub fn e_members(r: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        if r < 3 {
            return out;
        }
        for a2 in 1..r - 1 {
            for b2 in 1..r - 1 {
                if a2 + b2 < r {
                    out.push(FamilySpec::EFamily { a1: r - 1 - a2, a2, b1: r - 1 - b2, b2 });
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Delta { a, b1, b2 } => write!(f, "delta:{a},{b1},{b2}"),
            FamilySpec::EFamily { a1, a2, b1, b2 } => write!(f, "e:{a1},{a2},{b1},{b2}"),
            FamilySpec::Catlin { k } => write!(f, "catlin:{k}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Join(l, r) => write!(f, "join:{l}+{r}"),
        }
    }
}

/// Parses `delta:A,B1,B2`, `e:A1,A2,B1,B2`, `catlin:K`, `complete:N`, and
/// `join:LEFT+RIGHT` (right-nested).
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Construction(format!("cannot parse family {text:?}"));
        let (kind, rest) = text.trim().split_once(':').ok_or_else(bad)?;
        if kind.eq_ignore_ascii_case("join") {
            let (left, right) = rest.split_once('+').ok_or_else(bad)?;
            return Ok(FamilySpec::Join(Box::new(left.parse()?), Box::new(right.parse()?)));
        }
        let nums = rest
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let spec = match (kind.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("delta", &[a, b1, b2]) => FamilySpec::Delta { a, b1, b2 },
            ("e" | "efamily", &[a1, a2, b1, b2]) => FamilySpec::EFamily { a1, a2, b1, b2 },
            ("catlin", &[k]) => FamilySpec::Catlin { k },
            ("complete", &[n]) => FamilySpec::Complete { n },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

fn add_clique(g: &mut Graph, vertices: impl IntoIterator<Item = usize> + Clone) {
    for u in vertices.clone() {
        for v in vertices.clone() {
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
}

fn connect(g: &mut Graph, from: usize, to: std::ops::Range<usize>) {
    for v in to {
        g.add_edge(from, v);
    }
}

/// Builds the family member. Vertex order follows the part order in the `FamilySpec` variant
/// with apex vertices last.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Delta { a, b1, b2 } => {
            let n = a + b1 + b2 + 2;
            let (apex_a, apex_b) = (n - 2, n - 1);
            let mut g = Graph::empty(n);
            add_clique(&mut g, 0..a);
            add_clique(&mut g, a..a + b1 + b2);
            connect(&mut g, apex_a, 0..a + b1);
            connect(&mut g, apex_b, 0..a);
            connect(&mut g, apex_b, a + b1..a + b1 + b2);
            g
        }
        FamilySpec::EFamily { a1, a2, b1, b2 } => {
            let a = a1 + a2;
            let n = a + b1 + b2 + 1;
            let c = n - 1;
            let mut g = Graph::empty(n);
            add_clique(&mut g, 0..a);
            add_clique(&mut g, a..a + b1 + b2);
            for u in a1..a {
                for v in a + b1..a + b1 + b2 {
                    g.add_edge(u, v);
                }
            }
            connect(&mut g, c, 0..a1);
            connect(&mut g, c, a..a + b1);
            g
        }
        FamilySpec::Catlin { k } => {
            let mut g = Graph::empty(5 * k);
            for block in 0..5 {
                add_clique(&mut g, block * k..(block + 1) * k);
                let next = (block + 1) % 5;
                for u in block * k..(block + 1) * k {
                    for v in next * k..(next + 1) * k {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        FamilySpec::Complete { n } => Graph::complete(n),
        FamilySpec::Join(ref l, ref r) => build_family(l)?.join(&build_family(r)?),
    };
    Ok(g)
}
