//! Entropy measures over posteriors (in bits), closed-form minima, the
//! `g`-chain and the moment-based entropy estimate.

mod deletion;

pub use deletion::{
    double_deletion_classes, single_deletion_classes, string_count_identity, weight_sum_identity, CaseSummary,
    DeletionClasses, Identity,
};

use std::fmt;
use std::str::FromStr;

use crate::bits::{apply_g, rle_decode, rle_encode, BitString, Rle};
use crate::count::{binomial, BigCount};
use crate::error::{domain, Error, Result};
use crate::superspace::{build_posterior_capped, total_masks, Posterior, WeightClasses, DEFAULT_MAX_BITS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntropyMeasure {
    Shannon,
    /// Rényi entropy of order `α > 0`, `α ≠ 1`.
    Renyi(f64),
    Min,
    /// `log2 |Υ|`.
    Hartley,
}

impl EntropyMeasure {
    pub fn renyi(alpha: f64) -> Result<Self> {
        // NaN fails the range test.
        if !(alpha.is_finite() && alpha > 0.0) || alpha == 1.0 {
            return domain(format!("Rényi order must be positive, finite and ≠ 1, got {alpha}"));
        }
        Ok(EntropyMeasure::Renyi(alpha))
    }

    /// Column label: `shannon`, `renyi2`, `renyi0.5`, `min`, `hartley`.
    pub fn label(&self) -> String {
        match self {
            EntropyMeasure::Shannon => "shannon".into(),
            EntropyMeasure::Renyi(a) => format!("renyi{a}"),
            EntropyMeasure::Min => "min".into(),
            EntropyMeasure::Hartley => "hartley".into(),
        }
    }
}

impl fmt::Display for EntropyMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Accepts the labels of [`EntropyMeasure::label`] plus `renyi:α`.
impl FromStr for EntropyMeasure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "shannon" | "h" => return Ok(EntropyMeasure::Shannon),
            "min" | "hmin" | "min-entropy" => return Ok(EntropyMeasure::Min),
            "hartley" | "h0" => return Ok(EntropyMeasure::Hartley),
            _ => {}
        }
        let order = t
            .strip_prefix("renyi:")
            .or_else(|| t.strip_prefix("renyi"))
            .or_else(|| t.strip_prefix('r'))
            .ok_or_else(|| Error::Parse(format!("unknown entropy measure {s:?}")))?;
        let alpha: f64 = order
            .parse()
            .map_err(|_| Error::Parse(format!("bad Rényi order in {s:?}")))?;
        EntropyMeasure::renyi(alpha).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Measure of the distribution `{weight/Σ weight·mult}` given by a class
/// histogram. Classes are summed in their stored order (weight descending),
/// so results are reproducible bit for bit.
pub fn entropy_of_classes(wc: &WeightClasses, measure: EntropyMeasure) -> f64 {
    let mu = wc.mask_count();
    if let (EntropyMeasure::Min, Some((top, _))) = (measure, wc.classes.first()) {
        return exact_min_entropy(&mu, top);
    }
    let lmu = mu.log2();
    let classes = wc.classes.iter().map(|(w, c)| (w.log2(), c.to_f64()));
    entropy_from_log_classes(classes, lmu, measure)
}

pub fn entropy(p: &Posterior, measure: EntropyMeasure) -> f64 {
    if let (EntropyMeasure::Min, Some(&top)) = (measure, p.weights().iter().max()) {
        return exact_min_entropy(p.mu(), &BigCount::from(top));
    }
    let mut ws = p.weights().to_vec();
    ws.sort_unstable_by(|a, b| b.cmp(a));
    let mut classes: Vec<(f64, f64)> = Vec::new();
    let mut i = 0;
    while i < ws.len() {
        let j = i + ws[i..].iter().take_while(|&&w| w == ws[i]).count();
        classes.push(((ws[i] as f64).log2(), (j - i) as f64));
        i = j;
    }
    entropy_from_log_classes(classes.into_iter(), p.mu().log2(), measure)
}

/// `log2(μ/w_max)`, taken from the exact quotient when it divides evenly
/// (always the case for constant `x`, where the result is `n - m`).
fn exact_min_entropy(mu: &BigCount, top: &BigCount) -> f64 {
    match mu.exact_div(top) {
        Some(q) => q.log2(),
        None => mu.log2() - top.log2(),
    }
}

fn entropy_from_log_classes(classes: impl Iterator<Item = (f64, f64)>, lmu: f64, measure: EntropyMeasure) -> f64 {
    let classes: Vec<(f64, f64)> = classes.collect();
    let h = match measure {
        EntropyMeasure::Shannon => classes
            .iter()
            .map(|&(lw, c)| {
                let lp = lw - lmu;
                -c * lp.exp2() * lp
            })
            .sum::<f64>(),
        EntropyMeasure::Renyi(a) => {
            let s: f64 = classes.iter().map(|&(lw, c)| c * (a * (lw - lmu)).exp2()).sum();
            s.log2() / (1.0 - a)
        }
        EntropyMeasure::Min => {
            let top = classes.iter().map(|&(lw, _)| lw).fold(f64::NEG_INFINITY, f64::max);
            lmu - top
        }
        EntropyMeasure::Hartley => classes.iter().map(|&(_, c)| c).sum::<f64>().log2(),
    };
    // A point mass gives -0.0 or rounding dust.
    if h.abs() < 1e-12 {
        0.0
    } else {
        h
    }
}

fn check_mn(n: usize, m: usize) -> Result<()> {
    if m > n {
        return domain(format!("m = {m} exceeds n = {n}"));
    }
    Ok(())
}

/// Shannon entropy of the constant string's posterior:
/// `-Σ_j C(n,j)·(C(n-j,m)/μ)·log2(C(n-j,m)/μ)`.
pub fn min_shannon_closed(n: usize, m: usize) -> Result<f64> {
    check_mn(n, m)?;
    let lmu = total_masks(n, m)?.log2();
    let h: f64 = (0..=n - m)
        .map(|j| {
            let lp = binomial((n - j) as i64, m as i64).log2() - lmu;
            -binomial(n as i64, j as i64).to_f64() * lp.exp2() * lp
        })
        .sum();
    Ok(if h.abs() < 1e-12 { 0.0 } else { h })
}

/// `-log2 Σ_j C(n,j)·(C(n-j,m)/μ)²`.
pub fn min_renyi2_closed(n: usize, m: usize) -> Result<f64> {
    check_mn(n, m)?;
    let lmu = total_masks(n, m)?.log2();
    let s: f64 = (0..=n - m)
        .map(|j| {
            let lp = binomial((n - j) as i64, m as i64).log2() - lmu;
            binomial(n as i64, j as i64).to_f64() * (2.0 * lp).exp2()
        })
        .sum();
    let h = -s.log2();
    Ok(if h.abs() < 1e-12 { 0.0 } else { h })
}

/// `n - m`: the heaviest string `0^n` carries `C(n,m)` of `C(n,m)·2^{n-m}` masks.
pub fn min_minentropy_closed(n: usize, m: usize) -> Result<f64> {
    check_mn(n, m)?;
    Ok((n - m) as f64)
}

/// `Δ1(k1,k2) = e(k1+1) + e(k2+1) - e(k1+k2+1)` with `e(t) = -t·log2 t`.
/// For a single deletion, `Δ1 = 2n·(H_n(x) - H_n(g(x)))`.
pub fn delta1(k1: usize, k2: usize) -> f64 {
    assert!(k1 >= 1 && k2 >= 1, "run lengths must be positive");
    let e = |t: usize| -(t as f64) * (t as f64).log2();
    e(k1 + 1) + e(k2 + 1) - e(k1 + k2 + 1)
}

/// `x, g(x), g²(x), ...` down to the single-run string (just `x` if it is
/// already constant or empty).
pub fn g_chain(x: &BitString) -> Vec<Rle> {
    let mut r = rle_encode(x);
    let mut out = vec![r.clone()];
    while r.ell() > 1 {
        r = apply_g(&r);
        out.push(r.clone());
    }
    out
}

pub fn g_chain_entropies(x: &BitString, n: usize, measure: EntropyMeasure) -> Result<Vec<f64>> {
    g_chain_entropies_capped(x, n, measure, DEFAULT_MAX_BITS)
}

pub fn g_chain_entropies_capped(x: &BitString, n: usize, measure: EntropyMeasure, max_bits: usize) -> Result<Vec<f64>> {
    g_chain(x)
        .iter()
        .map(|r| Ok(entropy(&build_posterior_capped(&rle_decode(r), n, max_bits)?, measure)))
        .collect()
}

/// Exact entropy next to its moment-based estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentEstimate {
    pub exact: f64,
    pub estimate: f64,
    /// Upper bound on `|estimate - exact|` from the fourth-order Taylor remainder.
    pub bound: f64,
    /// Moments of `ω` under the uniform distribution on `Υ_{n,x}`:
    /// mean `E = μ/|Υ|` and central moments of order 2, 3, 4.
    pub mean: f64,
    pub variance: f64,
    pub third: f64,
    pub fourth: f64,
}

/// Estimates `H_n(x)` from the moments of `ω` over `Υ_{n,x}`.
///
/// With `Ω` uniform on `Υ`, `H = log2 μ - E[Ω ln Ω]/(E ln 2)` and the Taylor
/// expansion of `t ln t` around `E` gives
/// `E[Ω ln Ω] ≈ E ln E + V/(2E) - M3/(6E²)`. The remainder term is
/// `∫ (Ω-t)³/(3t³) dt`; since `Ω ≥ 1` it is at most `(10/3)·M4/E³` in
/// expectation, so the estimate is within `(10/3)·M4/(E⁴ ln 2)` bits.
pub fn entropy_estimate_from_moments(p: &Posterior) -> MomentEstimate {
    let exact = entropy(p, EntropyMeasure::Shannon);
    let count = p.len() as f64;
    let mean = p.mu().to_f64() / count;
    let (mut v, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for &w in p.weights() {
        let d = w as f64 - mean;
        let d2 = d * d;
        v += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    let (v, m3, m4) = (v / count, m3 / count, m4 / count);
    let ln2 = std::f64::consts::LN_2;
    let e_omega_ln = mean * mean.ln() + v / (2.0 * mean) - m3 / (6.0 * mean * mean);
    let estimate = p.mu().log2() - e_omega_ln / (mean * ln2);
    let bound = 10.0 / 3.0 * m4 / (mean.powi(4) * ln2);
    MomentEstimate {
        exact,
        estimate: if estimate.abs() < 1e-12 { 0.0 } else { estimate },
        bound,
        mean,
        variance: v,
        third: m3,
        fourth: m4,
    }
}

/// Convenience over [`Posterior`]s built with the default cap.
pub fn entropy_of(x: &BitString, n: usize, measure: EntropyMeasure) -> Result<f64> {
    Ok(entropy(&build_posterior_capped(x, n, DEFAULT_MAX_BITS)?, measure))
}
