//! The uncertainty set `Υ_{n,x}` of length-`n` supersequences of `x`, its
//! posterior, and distinct-subsequence statistics.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bits::{hamming_weight, BitString};
use crate::count::{binomial, BigCount};
use crate::embeddings::count_embeddings_packed;
use crate::error::{domain, Error, Result};

/// Default bound on `n` for operations that enumerate all `2^n` strings.
pub const DEFAULT_MAX_BITS: usize = 22;

/// Packed strings hold at most this many bits.
pub const HARD_MAX_BITS: usize = 63;

/// `|Υ_{n,x}| = Σ_{r=m}^{n} C(n,r)`, the same for every `x` of length `m`.
pub fn uncertainty_cardinality(n: usize, m: usize) -> Result<BigCount> {
    if m > n {
        return domain(format!("m = {m} exceeds n = {n}"));
    }
    Ok((m..=n).map(|r| binomial(n as i64, r as i64)).sum())
}

/// `μ_{n,m} = C(n,m)·2^{n-m}`, the total number of masks over `Υ_{n,x}`.
pub fn total_masks(n: usize, m: usize) -> Result<BigCount> {
    if m > n {
        return domain(format!("m = {m} exceeds n = {n}"));
    }
    Ok(binomial(n as i64, m as i64) * BigCount::pow2(n - m))
}

/// Masks whose supersequence lies in cluster `a`: `C(n,m)·C(n-m,a)`.
pub fn masks_per_cluster(n: usize, m: usize, a: usize) -> Result<BigCount> {
    if m > n || a > n - m {
        return domain(format!("cluster {a} out of range for n = {n}, m = {m}"));
    }
    Ok(binomial(n as i64, m as i64) * binomial((n - m) as i64, a as i64))
}

/// `{(y, ω_x(y))}` over `Υ_{n,x}`, sorted by `y` ascending.
///
/// Strings are packed most-significant-bit first and weights held as `u64`,
/// which is exact since enumeration never exceeds 63 bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Posterior {
    x: BitString,
    n: usize,
    ys: Vec<u64>,
    weights: Vec<u64>,
    mu: BigCount,
}

impl Posterior {
    pub fn x(&self) -> &BitString {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn mu(&self) -> &BigCount {
        &self.mu
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn packed(&self) -> &[u64] {
        &self.ys
    }

    pub fn iter(&self) -> impl Iterator<Item = (BitString, u64)> + '_ {
        let n = self.n;
        self.ys
            .iter()
            .zip(&self.weights)
            .map(move |(&y, &w)| (BitString::from_u64(y, n), w))
    }

    pub fn weight_of(&self, y: &BitString) -> u64 {
        if y.len() != self.n {
            return 0;
        }
        match self.ys.binary_search(&y.to_u64()) {
            Ok(i) => self.weights[i],
            Err(_) => 0,
        }
    }

    /// `P_x(y) = ω_x(y)/μ` for every entry, in entry order.
    pub fn probabilities(&self) -> Vec<f64> {
        let mu = self.mu.to_f64();
        self.weights.iter().map(|&w| w as f64 / mu).collect()
    }

    /// Entry count per Hamming cluster `c = h(y) - h(x)`, for `c = 0..=n-m`.
    pub fn cluster_census(&self) -> Vec<u64> {
        let hx = hamming_weight(&self.x);
        let mut out = vec![0u64; self.n - self.x.len() + 1];
        for &y in &self.ys {
            out[y.count_ones() as usize - hx] += 1;
        }
        out
    }
}

pub fn build_posterior(x: &BitString, n: usize) -> Result<Posterior> {
    build_posterior_capped(x, n, DEFAULT_MAX_BITS)
}

/// [`build_posterior`] with an explicit enumeration cap (clamped to 63).
pub fn build_posterior_capped(x: &BitString, n: usize, max_bits: usize) -> Result<Posterior> {
    let m = x.len();
    if m > n {
        return domain(format!("|x| = {m} exceeds n = {n}"));
    }
    let cap = max_bits.min(HARD_MAX_BITS);
    if n > cap {
        return Err(Error::SizeCap { n, cap });
    }
    let xv = x.to_u64();
    let pairs: Vec<(u64, u64)> = (0..1usize << n)
        .into_par_iter()
        .filter_map(|y| {
            let w = count_embeddings_packed(xv, m, y as u64, n);
            (w > 0).then_some((y as u64, w))
        })
        .collect();
    let (ys, weights): (Vec<u64>, Vec<u64>) = pairs.into_iter().unzip();
    Ok(Posterior {
        x: x.clone(),
        n,
        ys,
        weights,
        mu: total_masks(n, m)?,
    })
}

/// Histogram of weights: `(weight, multiplicity)` sorted by weight descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightClasses {
    pub classes: Vec<(BigCount, BigCount)>,
}

impl WeightClasses {
    pub fn from_weights<I: IntoIterator<Item = BigCount>>(weights: I) -> Self {
        let mut hist: BTreeMap<BigCount, u64> = BTreeMap::new();
        for w in weights {
            *hist.entry(w).or_default() += 1;
        }
        WeightClasses {
            classes: hist.into_iter().rev().map(|(w, c)| (w, BigCount::from(c))).collect(),
        }
    }

    /// `Σ multiplicity`, the number of strings.
    pub fn string_count(&self) -> BigCount {
        self.classes.iter().map(|(_, c)| c).sum()
    }

    /// `Σ weight·multiplicity`, the number of masks.
    pub fn mask_count(&self) -> BigCount {
        self.classes.iter().map(|(w, c)| w * c).sum()
    }

    /// Pairs as `u64`, for display and small-case tests.
    pub fn to_u64_pairs(&self) -> Vec<(u64, u64)> {
        self.classes
            .iter()
            .map(|(w, c)| {
                (
                    w.to_u64().expect("weight fits u64"),
                    c.to_u64().expect("count fits u64"),
                )
            })
            .collect()
    }
}

pub fn weight_classes(p: &Posterior) -> WeightClasses {
    WeightClasses::from_weights(p.weights.iter().map(|&w| BigCount::from(w)))
}

/// Number of distinct length-`m` subsequences of `y`.
pub fn count_distinct_subsequences(y: &BitString, m: usize) -> BigCount {
    let ys = y.as_slice();
    let n = ys.len();
    if m > n {
        return BigCount::zero();
    }
    // next[i][c]: first position ≥ i holding symbol c.
    let mut next = vec![[n; 2]; n + 1];
    for i in (0..n).rev() {
        next[i] = next[i + 1];
        next[i][ys[i] as usize] = i;
    }
    // cnt[i] = distinct subsequences of the current length in ys[i..].
    let mut cnt = vec![BigCount::one(); n + 2];
    for _ in 0..m {
        let mut nxt = vec![BigCount::zero(); n + 2];
        for i in 0..=n {
            let mut acc = BigCount::zero();
            for &j in &next[i] {
                if j < n {
                    acc += &cnt[j + 1];
                }
            }
            nxt[i] = acc;
        }
        cnt = nxt;
    }
    cnt.swap_remove(0)
}

/// `E_t(n) = Σ_{i=0}^{t} C(n-t-1+i, i)·2^{-i}`: the expected number of
/// distinct length-`(n-t)` subsequences of a uniform `y ∈ {0,1}^n`.
pub fn expected_distinct_subsequences(n: usize, t: usize) -> f64 {
    assert!(t <= n, "t = {t} exceeds n = {n}");
    (0..=t)
        .map(|i| binomial(n as i64 - t as i64 - 1 + i as i64, i as i64).to_f64() * 0.5f64.powi(i as i32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn bc(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn cardinality_and_masks() {
        assert_eq!(uncertainty_cardinality(5, 3).unwrap(), bc(16));
        assert_eq!(uncertainty_cardinality(7, 7).unwrap(), bc(1));
        assert_eq!(uncertainty_cardinality(9, 0).unwrap(), bc(512));
        assert!(uncertainty_cardinality(2, 3).is_err());
        assert_eq!(total_masks(5, 3).unwrap(), bc(40));
        assert_eq!(total_masks(6, 6).unwrap(), bc(1));
        assert_eq!(total_masks(4, 3).unwrap(), bc(8));
        assert!(total_masks(1, 2).is_err());
    }

    #[test]
    fn masks_per_cluster_examples() {
        assert_eq!(masks_per_cluster(7, 5, 0).unwrap(), bc(21));
        assert_eq!(masks_per_cluster(7, 5, 1).unwrap(), bc(42));
        assert!(masks_per_cluster(7, 5, 3).is_err());
        for n in 0..15 {
            for m in 0..=n {
                let s: BigCount = (0..=n - m).map(|a| masks_per_cluster(n, m, a).unwrap()).sum();
                assert_eq!(s, total_masks(n, m).unwrap());
            }
        }
    }

    #[test]
    fn posterior_small() {
        let p = build_posterior(&bs("0"), 2).unwrap();
        let got: Vec<(String, u64)> = p.iter().map(|(y, w)| (y.to_string(), w)).collect();
        assert_eq!(got, vec![("00".into(), 2), ("01".into(), 1), ("10".into(), 1)]);
        assert_eq!(p.mu(), &bc(4));

        let p = build_posterior(&bs("110"), 5).unwrap();
        assert_eq!(p.len(), 16);
        assert_eq!(p.weights().iter().sum::<u64>(), 40);
        assert_eq!(p.weight_of(&bs("11100")), 6);
        assert_eq!(p.weight_of(&bs("11110")), 6);
        assert_eq!(p.weight_of(&bs("11010")), 4);

        let p = build_posterior(&bs("1011"), 4).unwrap();
        assert_eq!(p.iter().collect::<Vec<_>>(), vec![(bs("1011"), 1)]);

        assert!(build_posterior(&bs("11"), 1).is_err());
        assert_eq!(
            build_posterior_capped(&bs("1"), 10, 8),
            Err(Error::SizeCap { n: 10, cap: 8 })
        );
    }

    #[test]
    fn weight_class_examples() {
        let wc = weight_classes(&build_posterior(&bs("0"), 2).unwrap());
        assert_eq!(wc.to_u64_pairs(), vec![(2, 1), (1, 2)]);
        let wc = weight_classes(&build_posterior(&bs("10"), 4).unwrap());
        assert_eq!(wc.to_u64_pairs(), vec![(4, 1), (3, 3), (2, 4), (1, 3)]);
        for n in 3..10 {
            for m in 1..=3 {
                let wc = weight_classes(&build_posterior(&BitString::constant(m, 0), n).unwrap());
                let expect: Vec<(u64, u64)> = (0..=n - m)
                    .map(|j| {
                        (
                            binomial((n - j) as i64, m as i64).to_u64().unwrap(),
                            binomial(n as i64, j as i64).to_u64().unwrap(),
                        )
                    })
                    .collect();
                assert_eq!(wc.to_u64_pairs(), expect);
            }
        }
    }

    #[test]
    fn posterior_laws_exhaustive() {
        for n in 0..=10 {
            for m in 0..=n {
                let card = uncertainty_cardinality(n, m).unwrap();
                let mu = total_masks(n, m).unwrap();
                for x in BitString::all(m) {
                    let p = build_posterior(&x, n).unwrap();
                    assert_eq!(BigCount::from(p.len()), card);
                    let wc = weight_classes(&p);
                    assert_eq!(wc.string_count(), card);
                    assert_eq!(wc.mask_count(), mu);
                    let total: f64 = p.probabilities().iter().sum();
                    assert!((total - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    fn distinct_oracle(y: &BitString, m: usize) -> usize {
        let n = y.len();
        let mut seen = HashSet::new();
        for sel in 0..1u64 << n {
            if sel.count_ones() as usize == m {
                let mask: Vec<usize> = (1..=n).filter(|&i| sel >> (i - 1) & 1 == 1).collect();
                seen.insert(y.project(&mask));
            }
        }
        seen.len()
    }

    #[test]
    fn distinct_subsequences_examples() {
        assert_eq!(count_distinct_subsequences(&bs("00"), 1), bc(1));
        assert_eq!(count_distinct_subsequences(&bs("01"), 1), bc(2));
        let y = bs("0011010001");
        assert_eq!(count_distinct_subsequences(&y, 8), bc(distinct_oracle(&y, 8) as u64));
        for n in 0..=8 {
            for y in BitString::all(n) {
                for m in 0..=n {
                    assert_eq!(count_distinct_subsequences(&y, m), bc(distinct_oracle(&y, m) as u64));
                }
            }
        }
    }

    #[test]
    fn expected_distinct_examples() {
        assert!((expected_distinct_subsequences(2, 1) - 1.5).abs() < 1e-15);
        assert_eq!(expected_distinct_subsequences(7, 0), 1.0);
        assert_eq!(expected_distinct_subsequences(5, 5), 1.0);
        for n in 0..=10 {
            for t in 0..=n {
                let total: f64 = BitString::all(n)
                    .map(|y| count_distinct_subsequences(&y, n - t).to_f64())
                    .sum();
                let avg = total / (1u64 << n) as f64;
                assert!((avg - expected_distinct_subsequences(n, t)).abs() < 1e-9, "n={n} t={t}");
            }
        }
    }
}
