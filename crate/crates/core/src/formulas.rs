//! Closed forms for the edge thresholds of the monochromatic connection
//! number over connected `n`-vertex graphs:
//!
//! * `f(n, k)`: least `F` such that every graph with `m >= F` has `mc >= k`;
//! * `g(n, k)`: greatest `G` such that every graph with `m <= G` has `mc <= k`;
//! * `t(n, k) = g(n, k - 1) + 1`, the fewest edges of a graph with `mc >= k`;
//! * `s(n, k) = f(n, k + 1) - 1`, the most edges of a graph with `mc <= k`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::choose2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("({n}, {k}) outside the domain n >= 2, {lo} <= k <= {hi}")]
    OutOfRange {
        n: usize,
        k: usize,
        lo: usize,
        hi: usize,
    },
    #[error("no edge window contains k = {k} for n = {n}")]
    NoWindow { n: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Function {
    F,
    G,
    T,
    S,
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Function::F => "f",
            Function::G => "g",
            Function::T => "t",
            Function::S => "s",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub function: Function,
    pub n: usize,
    pub k: usize,
    pub value: usize,
    /// Which piece of the piecewise definition produced `value`.
    pub regime: String,
}

fn check(n: usize, k: usize, lo: usize, hi: usize) -> Result<(), FormulaError> {
    if n < 2 || k < lo || k > hi {
        Err(FormulaError::OutOfRange { n, k, lo, hi })
    } else {
        Ok(())
    }
}

/// `ceil(num / 2)` for a nonpositive numerator `-neg`, rounding toward +inf.
fn ceil_half_of_negative(neg: usize) -> i64 {
    -((neg / 2) as i64)
}

pub fn f_value(n: usize, k: usize) -> Result<FormulaResult, FormulaError> {
    let total = choose2(n);
    check(n, k, 1, total)?;
    // Linear piece: 1 <= k <= C(n,2) - 2n + 4.
    let (value, regime) = if k + 2 * n <= total + 4 {
        (n + k - 2, "f:linear")
    } else {
        let v = total as i64 + ceil_half_of_negative(total - k);
        (v as usize, "f:half-step")
    };
    Ok(FormulaResult {
        function: Function::F,
        n,
        k,
        value,
        regime: regime.to_string(),
    })
}

/// One window of the piecewise definition of `g`: for `t`, the interior
/// `lo..=top - 1` maps to `k + t - 1` and `top` to `k + t - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GWindow {
    pub t: usize,
    pub lo: usize,
    pub top: usize,
}

/// Windows for `t = 2..=n-1`, in that order.
pub fn g_windows(n: usize) -> Vec<GWindow> {
    (2..n)
        .map(|t| {
            let lo = choose2(n - t) + t * (n - t - 1) + 1;
            let top = choose2(n - t) + t * (n - t);
            GWindow { t, lo, top }
        })
        .collect()
}

pub fn g_value(n: usize, k: usize) -> Result<FormulaResult, FormulaError> {
    let total = choose2(n);
    check(n, k, 1, total)?;
    let result = |value, regime: String| FormulaResult {
        function: Function::G,
        n,
        k,
        value,
        regime,
    };
    if k == total {
        return Ok(result(total, "g:complete".to_string()));
    }
    let hits: Vec<GWindow> = g_windows(n)
        .into_iter()
        .filter(|w| (w.lo..=w.top).contains(&k))
        .collect();
    match hits.as_slice() {
        [w] if k == w.top => Ok(result(k + w.t - 2, format!("g:t={}:top", w.t))),
        [w] => Ok(result(k + w.t - 1, format!("g:t={}:interior", w.t))),
        _ => Err(FormulaError::NoWindow { n, k }),
    }
}

/// `t(n, k) = g(n, k - 1) + 1` for `k >= 2`; `t(n, 1) = n - 1`, the size of
/// a spanning tree.
pub fn t_min_edges(n: usize, k: usize) -> Result<FormulaResult, FormulaError> {
    check(n, k, 1, choose2(n))?;
    let (value, regime) = if k == 1 {
        (n - 1, "t:spanning-tree".to_string())
    } else {
        let g = g_value(n, k - 1)?;
        (g.value + 1, format!("t:from-{}", g.regime))
    };
    Ok(FormulaResult {
        function: Function::T,
        n,
        k,
        value,
        regime,
    })
}

/// `s(n, k) = f(n, k + 1) - 1` for `k < C(n,2)`; `s(n, C(n,2)) = C(n,2)`.
pub fn s_max_edges(n: usize, k: usize) -> Result<FormulaResult, FormulaError> {
    let total = choose2(n);
    check(n, k, 1, total)?;
    let (value, regime) = if k == total {
        (total, "s:complete".to_string())
    } else {
        let f = f_value(n, k + 1)?;
        (f.value - 1, format!("s:from-{}", f.regime))
    };
    Ok(FormulaResult {
        function: Function::S,
        n,
        k,
        value,
        regime,
    })
}

pub fn evaluate(function: Function, n: usize, k: usize) -> Result<FormulaResult, FormulaError> {
    match function {
        Function::F => f_value(n, k),
        Function::G => g_value(n, k),
        Function::T => t_min_edges(n, k),
        Function::S => s_max_edges(n, k),
    }
}

/// `function(n, k)` for every `k` in `1..=C(n,2)`.
pub fn table(function: Function, n: usize) -> Result<Vec<FormulaResult>, FormulaError> {
    (1..=choose2(n).max(1)).map(|k| evaluate(function, n, k)).collect()
}
