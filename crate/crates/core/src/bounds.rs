//! Lower bounds on the edge count of an r-critical graph that contains no
//! topological `K_r`.
//!
//! Every rule has the shape `2m ≥ X`; since `m` is an integer the certified
//! minimum is `⌈X/2⌉`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ceil_half;

/// Target chromatic number `r` and vertex count `n` of a hypothetical
/// r-critical graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CriticalParams {
    r: u32,
    n: u32,
}

impl CriticalParams {
    pub fn new(r: u32, n: u32) -> Result<Self> {
        if r < 4 {
            return Err(Error::domain(format!("r = {r} must be at least 4")));
        }
        if n < r {
            return Err(Error::domain(format!("n = {n} must be at least r = {r}")));
        }
        Ok(CriticalParams { r, n })
    }

    pub fn r(self) -> u32 {
        self.r
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// `n − r`, the excess of vertices over the chromatic number.
    pub fn surplus(self) -> u32 {
        self.n - self.r
    }

    /// `(r − 1)·n`, twice the minimum-degree edge bound.
    fn degree_sum(self) -> i64 {
        i64::from(self.r - 1) * i64::from(self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeRule {
    /// `2m ≥ (r−1)n + (r−3)` for non-complete r-critical graphs.
    Dirac,
    /// `2m ≥ (r−1)n + p(r−p) − 1` with `p = n − r ∈ [2, r−1]`.
    Gallai,
    /// `2m ≥ (r−1)n + 2r − 6`.
    KostochkaStiebitz,
    /// Gallai at `n = 2r − 2` strengthened by the join decomposition.
    JoinRefined,
}

impl EdgeRule {
    pub fn name(self) -> &'static str {
        match self {
            EdgeRule::Dirac => "Dirac",
            EdgeRule::Gallai => "Gallai",
            EdgeRule::KostochkaStiebitz => "KS",
            EdgeRule::JoinRefined => "JoinRefined",
        }
    }
}

/// A certified minimum edge count together with the rule that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub params: CriticalParams,
    pub m_min: u64,
    pub rule: EdgeRule,
    /// `2·m_min − (r−1)·n`.
    pub excess: u64,
}

impl EdgeBound {
    fn from_doubled(params: CriticalParams, doubled: i64, rule: EdgeRule) -> Self {
        let m_min = ceil_half(doubled);
        let excess = 2 * m_min - params.degree_sum();
        debug_assert!(excess >= 0);
        EdgeBound { params, m_min: m_min as u64, rule, excess: excess as u64 }
    }
}

/// `⌈(r−1)n/2⌉`, the bound every r-critical graph meets.
pub fn degree_edges(params: CriticalParams) -> u64 {
    ceil_half(params.degree_sum()) as u64
}

pub fn dirac_edges(params: CriticalParams) -> EdgeBound {
    let r = i64::from(params.r);
    EdgeBound::from_doubled(params, params.degree_sum() + r - 3, EdgeRule::Dirac)
}

pub fn gallai_edges(params: CriticalParams) -> Result<EdgeBound> {
    let p = params.surplus();
    if p < 2 || p > params.r - 1 {
        return Err(Error::inapplicable(format!(
            "Gallai bound needs 2 ≤ n − r ≤ r − 1, got n − r = {p} for r = {}",
            params.r
        )));
    }
    let (r, p) = (i64::from(params.r), i64::from(p));
    Ok(EdgeBound::from_doubled(params, params.degree_sum() + p * (r - p) - 1, EdgeRule::Gallai))
}

pub fn ks_edges(params: CriticalParams) -> EdgeBound {
    let r = i64::from(params.r);
    EdgeBound::from_doubled(params, params.degree_sum() + 2 * r - 6, EdgeRule::KostochkaStiebitz)
}

/// Pointwise maximum over every applicable rule. Ties prefer Gallai, then KS.
pub fn min_edges(params: CriticalParams) -> Result<EdgeBound> {
    if params.n < params.r + 2 {
        return Err(Error::domain(format!(
            "min_edges needs n ≥ r + 2, got r = {}, n = {}",
            params.r, params.n
        )));
    }
    let candidates = [gallai_edges(params).ok(), Some(ks_edges(params)), Some(dirac_edges(params))];
    let best = candidates
        .into_iter()
        .flatten()
        .reduce(|best, next| if next.m_min > best.m_min { next } else { best })
        .expect("KS always applies");
    Ok(best)
}

/// The strengthened bound at `n = 2r − 2`: an r-critical graph on that many
/// vertices is a join `G1 ∨ G2` of smaller critical graphs, and the degree
/// count over the join gains `(n1 − r1)·n2 + (n2 − r2)·n1 ≥ r − 2` over the
/// Gallai bound (minimum at `n2 = r2 = 1`).
pub fn join_refined_edges(r: u32) -> Result<EdgeBound> {
    let params = CriticalParams::new(r, 2 * r - 2)?;
    let gallai = gallai_edges(params)?;
    let gain = ceil_half(i64::from(r) - 2) as u64;
    let m_min = gallai.m_min + gain;
    Ok(EdgeBound {
        params,
        m_min,
        rule: EdgeRule::JoinRefined,
        excess: (2 * m_min as i64 - params.degree_sum()) as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: u32, n: u32) -> CriticalParams {
        CriticalParams::new(r, n).unwrap()
    }

    #[test]
    fn gallai_matches_published_rows() {
        assert_eq!(gallai_edges(p(13, 18)).unwrap().m_min, 128);
        assert_eq!(gallai_edges(p(16, 21)).unwrap().m_min, 185);
        assert_eq!(gallai_edges(p(17, 32)).unwrap().m_min, 271);
    }

    #[test]
    fn gallai_boundaries() {
        assert!(matches!(gallai_edges(p(13, 14)), Err(Error::Inapplicable(_))));
        assert!(matches!(gallai_edges(p(13, 13)), Err(Error::Inapplicable(_))));
        assert!(gallai_edges(p(13, 25)).is_ok());
        assert!(matches!(gallai_edges(p(13, 26)), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn ks_values() {
        // 2m ≥ 12n + 20, m ≥ 7n + 12, m ≥ 7.5n + 13
        assert_eq!(ks_edges(p(13, 22)).m_min, 142);
        assert_eq!(ks_edges(p(15, 28)).m_min, 208);
        assert_eq!(ks_edges(p(16, 32)).m_min, 253);
    }

    #[test]
    fn params_domain() {
        assert!(CriticalParams::new(3, 10).is_err());
        assert!(CriticalParams::new(5, 4).is_err());
        assert!(min_edges(p(13, 14)).is_err());
    }

    #[test]
    fn dispatch_takes_the_maximum() {
        let b = min_edges(p(13, 18)).unwrap();
        assert_eq!((b.m_min, b.rule), (128, EdgeRule::Gallai));
        // Gallai: ⌈(264 + 36 − 1)/2⌉ = 150 beats KS 142 at n = 22.
        let b = min_edges(p(13, 22)).unwrap();
        assert_eq!((b.m_min, b.rule), (150, EdgeRule::Gallai));
        // Gallai at p = 12 gives 156, KS gives 160.
        let b = min_edges(p(13, 25)).unwrap();
        assert_eq!((b.m_min, b.rule), (160, EdgeRule::KostochkaStiebitz));
        // Past 2r − 2 the appendix switches to KS; so does the maximum here.
        let b = min_edges(p(16, 31)).unwrap();
        assert_eq!((b.m_min, b.rule), (246, EdgeRule::KostochkaStiebitz));
    }

    #[test]
    fn dirac_never_wins() {
        for r in 4..30 {
            for n in r + 2..4 * r {
                assert_ne!(min_edges(p(r, n)).unwrap().rule, EdgeRule::Dirac);
            }
        }
    }

    #[test]
    fn join_refinement() {
        assert_eq!(join_refined_edges(17).unwrap().m_min, 279);
        assert_eq!(join_refined_edges(5).unwrap().m_min, gallai_edges(p(5, 8)).unwrap().m_min + 2);
        assert_eq!(join_refined_edges(4).unwrap().m_min, gallai_edges(p(4, 6)).unwrap().m_min + 1);
        assert!(join_refined_edges(3).is_err());
    }

    #[test]
    fn excess_is_consistent() {
        let b = gallai_edges(p(13, 18)).unwrap();
        assert_eq!(b.excess, 2 * 128 - 12 * 18);
    }
}
