use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::crossing::{sampling_tail_term, zarankiewicz};
use crate::error::{Error, Result};
use crate::exact::{ceil_nonneg, int, pow, ratio, Rational};

/// Finite certificate that the sampling bound with a fixed `p` reaches
/// `Z(r)` for every `n ≥ n0`.
///
/// With the KS edge count `m(n) = ((r−1)n + 2r − 6)/2` the polynomial part of
/// the bound is `slope·n + intercept`; the tail term `5n²(1−p)^{n−2}/p⁴`
/// decreases from `n0` on once its step ratio `(1−p)((n+1)/n)²` is below 1
/// at `n0`, since that ratio decreases in `n`. So the bound at `n` is at
/// least its value at `n0` plus `slope·(n − n0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailCertificate {
    pub r: u32,
    #[serde(with = "crate::exact::serde_rational")]
    pub p: Rational,
    pub n0: u32,
    /// `2(r−1)/p² − (103/6)/p³`.
    #[serde(with = "crate::exact::serde_rational")]
    pub slope: Rational,
    /// `2(2r−6)/p² + (103/3)/p⁴`.
    #[serde(with = "crate::exact::serde_rational")]
    pub intercept: Rational,
    #[serde(with = "crate::exact::serde_rational")]
    pub tail_term_at_n0: Rational,
    /// Full bound at `n0`: `slope·n0 + intercept − tail_term_at_n0`.
    #[serde(with = "crate::exact::serde_rational")]
    pub anchor: Rational,
    pub target: u64,
    pub slope_positive: bool,
    pub tail_decreasing: bool,
    pub anchor_meets_target: bool,
    pub valid: bool,
}

/// KS edge count before rounding, `((r−1)n + 2r − 6)/2`.
pub fn ks_edges_exact(r: u32, n: u32) -> Rational {
    ratio(i64::from(r - 1) * i64::from(n) + 2 * i64::from(r) - 6, 2)
}

pub fn tail_certificate(r: u32, p: &Rational, n0: u32) -> Result<TailCertificate> {
    if r < 4 {
        return Err(Error::domain(format!("tail certificate needs r ≥ 4, got {r}")));
    }
    if n0 < 10.max(r + 5) {
        return Err(Error::domain(format!("tail anchor n0 = {n0} must be at least max(10, r + 5) = {}", 10.max(r + 5))));
    }
    if !p.is_positive() || *p > int(1) {
        return Err(Error::domain(format!("p must lie in (0, 1], got {p}")));
    }
    let p2 = pow(p, 2);
    let p3 = &p2 * p;
    let p4 = &p3 * p;
    let r_i = i64::from(r);
    let slope = int(2 * (r_i - 1)) / &p2 - ratio(103, 6) / &p3;
    let intercept = int(2 * (2 * r_i - 6)) / &p2 + ratio(103, 3) / &p4;
    let tail_term_at_n0 = sampling_tail_term(u64::from(n0), p);
    let anchor = &slope * int(i64::from(n0)) + &intercept - &tail_term_at_n0;
    let step = (int(1) - p) * pow(&ratio(i64::from(n0) + 1, i64::from(n0)), 2);
    let target = zarankiewicz(u64::from(r));

    let slope_positive = slope.is_positive();
    let tail_decreasing = step < int(1);
    let anchor_meets_target = ceil_nonneg(&anchor) >= target;
    Ok(TailCertificate {
        r,
        p: p.clone(),
        n0,
        slope,
        intercept,
        tail_term_at_n0,
        anchor,
        target,
        slope_positive,
        tail_decreasing,
        anchor_meets_target,
        valid: slope_positive && tail_decreasing && anchor_meets_target,
    })
}
