//! Range sweeps backing the large-n lemma, the order-of-magnitude remark and
//! the Catlin-graph comparison.

use serde::{Deserialize, Serialize};

use crate::crossing::{bipartite_zarankiewicz, counting_lower, quartic_reference, zarankiewicz, SamplingParams};
use crate::error::{Error, Result};
use crate::exact::{ceil, ceil_half, int, pow, ratio, Rational};
use crate::exec::{self, Execution};
use num_traits::ToPrimitive;

/// Outcome of an exact check over a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeCheck {
    pub holds: bool,
    /// Smallest `lhs − rhs` over the range and where it occurs.
    pub min_margin: Rational,
    pub argmin_n: u32,
    pub failures: Vec<u32>,
}

fn collect(results: Vec<(u32, Rational, bool)>) -> RangeCheck {
    let failures = results.iter().filter(|(_, _, ok)| !ok).map(|(n, _, _)| *n).collect::<Vec<_>>();
    let (argmin_n, min_margin, _) = results
        .into_iter()
        .reduce(|best, next| if next.1 < best.1 { next } else { best })
        .expect("non-empty range");
    RangeCheck { holds: failures.is_empty(), min_margin, argmin_n, failures }
}

/// For every `n ∈ [⌈3.57r⌉, 4r]` with `m = ⌈(r−1)n/2⌉`, the 52-vertex
/// counting bound based on the `4m − (103/6)(n−2)` rule strictly exceeds
/// `r(r−1)(r−2)(r−3)/64`.
pub fn lemma357_check(r: u32, mode: Execution) -> Result<RangeCheck> {
    if r < 17 {
        return Err(Error::domain(format!("the 3.57r sweep applies to r ≥ 17, got {r}")));
    }
    let lo = ceil(&ratio(357 * i64::from(r), 100)).to_u32().expect("small");
    let hi = 4 * r;
    let reference = quartic_reference(u64::from(r));
    let ns: Vec<u32> = (lo..=hi).collect();
    let results = exec::map(mode, ns, |n| {
        let m = ceil_half(i64::from(r - 1) * i64::from(n)) as u64;
        let bound = counting_lower(u64::from(n), m, SamplingParams::default()).expect("n ≥ 52");
        let margin = bound.raw - &reference;
        let ok = margin > int(0);
        (n, margin, ok)
    });
    Ok(collect(results))
}

/// Checks, for `n ∈ [r, ⌈3.57r⌉]` and `m = (r−1)n/2`, that the 1/31.1
/// crossing lemma applies (`m ≥ 103n/16`) and that
/// `(r−1)³n/(31.1·8) ≥ r(r−1)³/250 ≥ Z(r)/4`. The margin reported is
/// `(r−1)³n/(31.1·8) − Z(r)/4`.
pub fn remark2_check(r: u32) -> Result<RangeCheck> {
    if r < 14 {
        return Err(Error::domain(format!(
            "needs r ≥ 14 so that m = (r−1)n/2 reaches the 103n/16 threshold of the 1/31.1 crossing lemma, got {r}"
        )));
    }
    let hi = ceil(&ratio(357 * i64::from(r), 100)).to_u32().expect("small");
    let r_q = int(i64::from(r));
    let cube = pow(&(&r_q - int(1)), 3);
    let middle = &r_q * &cube / int(250);
    let quarter_z = ratio(zarankiewicz(u64::from(r)) as i64, 4);
    let results = (r..=hi)
        .map(|n| {
            let n_q = int(i64::from(n));
            let m = (&r_q - int(1)) * &n_q / int(2);
            let applicable = m >= ratio(103, 16) * &n_q;
            // ((r−1)n/2)³ / (31.1 n²) = (r−1)³ n / (31.1 · 8)
            let lower = pow(&m, 3) / (ratio(311, 10) * &n_q * &n_q);
            debug_assert_eq!(lower, &cube * &n_q / ratio(311 * 8, 10));
            let ok = applicable && lower >= middle && middle >= quarter_z;
            (n, lower - &quarter_z, ok)
        })
        .collect();
    Ok(collect(results))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatlinRow {
    pub k: u64,
    /// `2·Z(2k) + Z(k) + 3·Z(k, k)`.
    pub lower: u64,
    /// `Z(⌈5k/2⌉)`.
    pub upper: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatlinReport {
    /// Leading coefficient of the lower side in `k⁴`.
    pub lower_coefficient: Rational,
    /// Leading coefficient of the upper side in `k⁴`.
    pub upper_coefficient: Rational,
    pub rows: Vec<CatlinRow>,
    /// Smallest `k` from which the strict comparison holds through `k_max`.
    pub holds_from: Option<u64>,
    pub failures: Vec<u64>,
}

/// Compares the drawing-count lower side for `C_5^k` against `Z(χ(C_5^k))`
/// for every `k ≤ k_max`, and reports the exact asymptotic coefficients:
/// `Z(r) ~ r⁴/64` and `Z(k, k) ~ k⁴/16` give
/// `2·16/64 + 1/64 + 3/16 = 45/64` against `(5/2)⁴/64 = 625/1024`.
pub fn catlin_check(k_max: u64, mode: Execution) -> Result<CatlinReport> {
    if k_max < 1 {
        return Err(Error::domain("catlin check needs k_max ≥ 1"));
    }
    let z_lead = ratio(1, 64);
    let bz_lead = ratio(1, 16);
    let lower_coefficient = int(2) * pow(&int(2), 4) * &z_lead + &z_lead + int(3) * &bz_lead;
    let upper_coefficient = pow(&ratio(5, 2), 4) * &z_lead;

    let rows = exec::map(mode, (1..=k_max).collect(), |k| {
        let lower = 2 * zarankiewicz(2 * k) + zarankiewicz(k) + 3 * bipartite_zarankiewicz(k, k);
        let upper = zarankiewicz((5 * k).div_ceil(2));
        CatlinRow { k, lower, upper, holds: lower > upper }
    });
    let failures: Vec<u64> = rows.iter().filter(|r| !r.holds).map(|r| r.k).collect();
    let holds_from = match failures.last() {
        None => Some(1),
        Some(&k) if k < k_max => Some(k + 1),
        Some(_) => None,
    };
    Ok(CatlinReport { lower_coefficient, upper_coefficient, rows, holds_from, failures })
}
