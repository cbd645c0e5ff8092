//! Hidden-word statistics: the autocorrelation coefficient `κ²(x)` and the
//! leading-order moments of `Ω_n`, the number of embeddings of `x` in a
//! uniform random `y ∈ {0,1}^n`.

use rayon::prelude::*;

use crate::bits::BitString;
use crate::count::{binomial, BigCount};
use crate::entropy::{entropy, EntropyMeasure};
use crate::error::{domain, Result};
use crate::superspace::{build_posterior_capped, Posterior};

/// `B[r][s] = [x_r = x_s]` and `M[r][s] = C(r+s-2, r-1)·C(2m-r-s, m-r)`
/// (stored 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaMatrices {
    pub b: Vec<Vec<u8>>,
    pub m: Vec<Vec<BigCount>>,
}

impl KappaMatrices {
    pub fn new(x: &BitString) -> Self {
        let xs = x.as_slice();
        let len = xs.len() as i64;
        let b = xs
            .iter()
            .map(|&p| xs.iter().map(|&q| u8::from(p == q)).collect())
            .collect();
        let m = (1..=len)
            .map(|r| {
                (1..=len)
                    .map(|s| binomial(r + s - 2, r - 1) * binomial(2 * len - r - s, len - r))
                    .collect()
            })
            .collect();
        KappaMatrices { b, m }
    }

    /// `Σ B∘M`.
    pub fn kappa_squared(&self) -> BigCount {
        self.b
            .iter()
            .zip(&self.m)
            .flat_map(|(br, mr)| br.iter().zip(mr).filter(|(&b, _)| b == 1).map(|(_, v)| v))
            .sum()
    }

    /// `Σ M`, which equals `κ²` of a constant string.
    pub fn total(&self) -> BigCount {
        self.m.iter().flatten().sum()
    }
}

/// `κ²(x) = Σ_{r,s} C(r+s-2, r-1)·C(2m-r-s, m-r)·[x_r = x_s]`.
pub fn kappa_squared(x: &BitString) -> BigCount {
    KappaMatrices::new(x).kappa_squared()
}

/// `m·C(2m-1, m)`, attained exactly by the constant strings.
pub fn kappa_max(m: usize) -> BigCount {
    assert!(m >= 1, "κ² needs a nonempty string");
    BigCount::from(m) * binomial(2 * m as i64 - 1, m as i64)
}

/// Leading variance coefficient `Σ_{r,s} M[r][s]·(2[x_r = x_s] - 1)
/// = 2κ²(x) - κ²_max(m)`.
///
/// For a uniform source each pair of overlapping occurrences contributes
/// `[x_r = x_s]/p - 1` with `p = 1/2`; `κ²` alone keeps only the first part.
/// The two agree at `m = 1` and for constant strings.
pub fn variance_coefficient(x: &BitString) -> BigCount {
    let k = KappaMatrices::new(x);
    BigCount::from(2u8) * k.kappa_squared() - k.total()
}

/// `E[Ω_n] ~ (2^{-m}/m!)·n^m`.
pub fn omega_mean_asymptotic(n: usize, m: usize) -> f64 {
    let log = m as f64 * (n as f64).log2() - m as f64 - log2_factorial(m);
    log.exp2()
}

/// `V[Ω_n] ~ (2^{-2m}/(2m-1)!)·(2κ² - κ²_max)·n^{2m-1}`, see
/// [`variance_coefficient`].
pub fn omega_variance_asymptotic(n: usize, x: &BitString) -> f64 {
    let m = x.len();
    assert!(m >= 1, "the variance expansion needs a nonempty x");
    let log = (2 * m - 1) as f64 * (n as f64).log2() - (2 * m) as f64 - log2_factorial(2 * m - 1);
    variance_coefficient(x).to_f64() * log.exp2()
}

/// The same leading term with `κ²(x)` in place of the corrected coefficient,
/// kept for comparison.
pub fn omega_variance_asymptotic_kappa(n: usize, x: &BitString) -> f64 {
    let m = x.len();
    assert!(m >= 1, "the variance expansion needs a nonempty x");
    let log = (2 * m - 1) as f64 * (n as f64).log2() - (2 * m) as f64 - log2_factorial(2 * m - 1);
    kappa_squared(x).to_f64() * log.exp2()
}

fn log2_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).log2()).sum()
}

/// Exact mean and variance of `Ω_n` over all `2^n` strings (zeros included).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaMoments {
    pub mean: f64,
    pub variance: f64,
}

pub fn omega_moments(p: &Posterior) -> OmegaMoments {
    let n = p.n();
    let mut sq: u128 = 0;
    let mut big = BigCount::zero();
    for &w in p.weights() {
        let w2 = w as u128 * w as u128;
        match sq.checked_add(w2) {
            Some(v) => sq = v,
            None => {
                big += BigCount::from(sq);
                sq = w2;
            }
        }
    }
    big += BigCount::from(sq);
    let total = (n as f64).exp2();
    let mean = p.mu().to_f64() / total;
    let second = big.to_f64() / total;
    OmegaMoments {
        mean,
        variance: second - mean * mean,
    }
}

/// `E[Ω_n] = C(n,m)/2^m` by linearity over masks.
pub fn omega_mean_exact(n: usize, m: usize) -> f64 {
    binomial(n as i64, m as i64).to_f64() / (m as f64).exp2()
}

#[derive(Debug, Clone, PartialEq)]
pub struct KappaRow {
    pub x: BitString,
    pub kappa2: BigCount,
    pub entropy: f64,
}

/// One row per `x ∈ {0,1}^m` with its exact Shannon entropy at length `n`,
/// sorted by `κ²` descending and then by `x` ascending.
pub fn kappa_entropy_table(n: usize, m: usize, max_bits: usize) -> Result<Vec<KappaRow>> {
    if m > n {
        return domain(format!("m = {m} exceeds n = {n}"));
    }
    if m == 0 {
        return domain("κ² needs m ≥ 1");
    }
    let mut rows: Vec<KappaRow> = BitString::all(m)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|x| {
            let p = build_posterior_capped(&x, n, max_bits)?;
            Ok(KappaRow {
                kappa2: kappa_squared(&x),
                entropy: entropy(&p, EntropyMeasure::Shannon),
                x,
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| b.kappa2.cmp(&a.kappa2).then_with(|| a.x.cmp(&b.x)));
    Ok(rows)
}

/// Pairs of rows `(i, j)` with `κ²_i > κ²_j` but `H_i > H_j`: places where
/// ordering by `κ²` fails to order the entropies.
pub fn ordering_inversions(rows: &[KappaRow]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i].kappa2 > rows[j].kappa2 && rows[i].entropy > rows[j].entropy + 1e-12 {
                out.push((i, j));
            }
        }
    }
    out
}
