//! Lower bounds on the crossing number of a graph with `n` vertices and `m`
//! edges, plus the Zarankiewicz reference values they are compared against.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, ceil_nonneg, int, pow, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LinearRuleId {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
}

impl LinearRuleId {
    pub const ALL: [LinearRuleId; 5] =
        [LinearRuleId::Eq1, LinearRuleId::Eq2, LinearRuleId::Eq3, LinearRuleId::Eq4, LinearRuleId::Eq5];

    /// 1-based position in the family.
    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_index(i: u8) -> Option<Self> {
        Self::ALL.get(usize::from(i).checked_sub(1)?).copied()
    }

    pub fn rule(self) -> LinearRule {
        let (a, b) = match self {
            LinearRuleId::Eq1 => (int(1), int(3)),
            LinearRuleId::Eq2 => (ratio(7, 3), ratio(25, 3)),
            LinearRuleId::Eq3 => (int(3), ratio(35, 3)),
            LinearRuleId::Eq4 => (int(4), ratio(103, 6)),
            LinearRuleId::Eq5 => (int(5), int(25)),
        };
        LinearRule { a, b, id: self }
    }
}

impl fmt::Display for LinearRuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.index())
    }
}

/// `cr(G) ≥ a·m − b·(n − 2)`, valid for every graph with `n ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRule {
    pub a: Rational,
    pub b: Rational,
    pub id: LinearRuleId,
}

impl LinearRule {
    pub fn all() -> Vec<LinearRule> {
        LinearRuleId::ALL.iter().map(|id| id.rule()).collect()
    }

    pub fn eval(&self, n: u64, m: u64) -> Rational {
        &self.a * int(m as i64) - &self.b * (int(n as i64) - int(2))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundMethod {
    Linear(LinearRuleId),
    /// `m³ / (64 n²)` for `m ≥ 4n`.
    CrossingLemma64,
    /// `m³ / (31.1 n²)` for `m ≥ 103n/16`.
    CrossingLemma311,
    Probabilistic(#[serde(with = "crate::exact::serde_rational")] Rational),
    Counting { sample: u32, base: LinearRuleId },
}

/// An integer lower bound on `cr(G)`. `value = max(0, ⌈raw⌉)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingLowerBound {
    pub value: u64,
    pub method: BoundMethod,
    pub raw: Rational,
}

impl CrossingLowerBound {
    fn new(raw: Rational, method: BoundMethod) -> Self {
        CrossingLowerBound { value: ceil_nonneg(&raw), method, raw }
    }
}

pub fn linear_bound(rule: LinearRuleId, n: u64, m: u64) -> Result<CrossingLowerBound> {
    if n < 3 {
        return Err(Error::domain(format!("linear bounds need n ≥ 3, got {n}")));
    }
    Ok(CrossingLowerBound::new(rule.rule().eval(n, m), BoundMethod::Linear(rule)))
}

/// Best of the five linear rules. Ties go to the lower-numbered rule.
pub fn linear_lower(n: u64, m: u64) -> Result<CrossingLowerBound> {
    let mut best: Option<CrossingLowerBound> = None;
    for id in LinearRuleId::ALL {
        let cand = linear_bound(id, n, m)?;
        if best.as_ref().is_none_or(|b| cand.raw > b.raw) {
            best = Some(cand);
        }
    }
    Ok(best.expect("five rules"))
}

/// `Z(r) = ¼⌊r/2⌋⌊(r−1)/2⌋⌊(r−2)/2⌋⌊(r−3)/2⌋`, an upper bound on `cr(K_r)`.
pub fn zarankiewicz(r: u64) -> u64 {
    if r < 4 {
        return 0;
    }
    // The product of four consecutive halves always has two even factors.
    (r / 2) * ((r - 1) / 2) * ((r - 2) / 2) * ((r - 3) / 2) / 4
}

/// `⌈0.86·Z(r)⌉`, the known lower bound on `cr(K_r)`.
pub fn klerk_lower(r: u64) -> u64 {
    ceil_nonneg(&(ratio(86, 100) * int(zarankiewicz(r) as i64)))
}

/// `⌊a/2⌋⌊(a−1)/2⌋⌊b/2⌋⌊(b−1)/2⌋`, the Zarankiewicz drawing count for `K_{a,b}`.
pub fn bipartite_zarankiewicz(a: u64, b: u64) -> u64 {
    let half = |x: u64| (x / 2) * (x.saturating_sub(1) / 2);
    half(a) * half(b)
}

pub fn crossing_lemma_lower(n: u64, m: u64) -> Result<CrossingLowerBound> {
    if n == 0 {
        return Err(Error::domain("crossing lemma needs n ≥ 1"));
    }
    let cube_over_sq = Rational::new(BigInt::from(m).pow(3), BigInt::from(n).pow(2));
    let mut best: Option<CrossingLowerBound> = None;
    if m >= 4 * n {
        best = Some(CrossingLowerBound::new(&cube_over_sq / int(64), BoundMethod::CrossingLemma64));
    }
    if 16 * m >= 103 * n {
        let cand = CrossingLowerBound::new(&cube_over_sq * ratio(10, 311), BoundMethod::CrossingLemma311);
        if best.as_ref().is_none_or(|b| cand.raw > b.raw) {
            best = Some(cand);
        }
    }
    best.ok_or_else(|| {
        Error::inapplicable(format!("crossing lemma needs m ≥ 4n or m ≥ 103n/16, got n = {n}, m = {m}"))
    })
}

/// The tail term `5n²(1−p)^{n−2}/p⁴` of the sampling bound.
pub fn sampling_tail_term(n: u64, p: &Rational) -> Rational {
    let n_r = int(n as i64);
    let q = int(1) - p;
    int(5) * &n_r * &n_r * pow(&q, (n - 2) as u32) / pow(p, 4)
}

/// The exact sampling bound
/// `4m/p² − (103/6)n/p³ + (103/3)/p⁴ − 5n²(1−p)^{n−2}/p⁴`,
/// valid for every graph when `n ≥ 10` and `0 < p ≤ 1`.
pub fn cr_nmp_raw(n: u64, m: &Rational, p: &Rational) -> Result<Rational> {
    if n < 10 {
        return Err(Error::domain(format!("sampling bound needs n ≥ 10, got {n}")));
    }
    if !p.is_positive() || *p > int(1) {
        return Err(Error::domain(format!("sampling probability must lie in (0, 1], got {p}")));
    }
    let n_r = int(n as i64);
    let p2 = pow(p, 2);
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    Ok(int(4) * m / p2 - ratio(103, 6) * n_r / p3 + ratio(103, 3) / p4 - sampling_tail_term(n, p))
}

pub fn cr_nmp(n: u64, m: u64, p: &Rational) -> Result<CrossingLowerBound> {
    let raw = cr_nmp_raw(n, &int(m as i64), p)?;
    Ok(CrossingLowerBound::new(raw, BoundMethod::Probabilistic(p.clone())))
}

/// Sampling probability with denominator 1000 that (nearly) maximises the
/// sampling bound.
///
/// With `x = 1/p` the polynomial part is `f(x) = 4m x² − (103/6)n x³ +
/// (103/3)x⁴`; its interior critical points solve
/// `(412/3)x² − (103/2)n·x + 8m = 0`. The smaller root is taken and
/// `1/x` is snapped to the 1/1000 grid. Any `p ∈ (0, 1]` gives a valid
/// bound, so the snap costs optimality only.
pub fn optimize_p(n: u64, m: u64) -> Result<Rational> {
    if n < 10 || m < 1 {
        return Err(Error::domain(format!("optimize_p needs n ≥ 10 and m ≥ 1, got n = {n}, m = {m}")));
    }
    let a = ratio(412, 3);
    let b = ratio(103, 2) * int(n as i64);
    let c = int(8 * m as i64);
    let disc = &b * &b - int(4) * &a * &c;
    if disc.is_negative() {
        return Ok(int(1));
    }
    let (a, b, disc) = (to_f64(&a), to_f64(&b), to_f64(&disc));
    let x = (b - disc.sqrt()) / (2.0 * a);
    if x.is_nan() || x <= 1.0 {
        return Ok(int(1));
    }
    let thousandths = (1000.0 / x).round().clamp(1.0, 1000.0) as i64;
    Ok(ratio(thousandths, 1000))
}

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("finite")
}

/// Sample size and the linear rule applied to every spanned sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingParams {
    pub s: u32,
    pub base: LinearRuleId,
}

impl SamplingParams {
    pub fn new(s: u32, base: LinearRuleId) -> Self {
        SamplingParams { s, base }
    }
}

impl Default for SamplingParams {
    fn default() -> Self {
        SamplingParams { s: 52, base: LinearRuleId::Eq4 }
    }
}

/// Averaging bound over all spanned `s`-vertex subgraphs: each edge lies in
/// exactly `C(n−2, s−2)` samples and each crossing in at most `C(n−4, s−4)`,
/// so `cr(G) ≥ [a·m·C(n−2,s−2) − b(s−2)·C(n,s)] / C(n−4,s−4)`.
pub fn counting_lower(n: u64, m: u64, params: SamplingParams) -> Result<CrossingLowerBound> {
    let s = u64::from(params.s);
    if s < 5 || s > n {
        return Err(Error::domain(format!("counting bound needs 5 ≤ s ≤ n, got s = {s}, n = {n}")));
    }
    let rule = params.base.rule();
    let edge_hits = Rational::from_integer(binomial(n - 2, s - 2));
    let samples = Rational::from_integer(binomial(n, s));
    let crossing_hits = binomial(n - 4, s - 4);
    debug_assert!(!crossing_hits.is_zero());
    let total = &rule.a * int(m as i64) * edge_hits - &rule.b * int(s as i64 - 2) * samples;
    let raw = total / Rational::from_integer(crossing_hits);
    Ok(CrossingLowerBound::new(raw, BoundMethod::Counting { sample: params.s, base: params.base }))
}

/// `r(r−1)(r−2)(r−3)/64`, the quartic the counting bound is compared with.
pub fn quartic_reference(r: u64) -> Rational {
    let r = BigInt::from(r);
    let one = BigInt::one();
    let prod = &r * (&r - &one) * (&r - BigInt::from(2)) * (&r - BigInt::from(3));
    Rational::new(prod, BigInt::from(64))
}
