//! Hamming-weight clusters of `Υ_{n,x}`, maximal initial embeddings and
//! singleton counting.
//!
//! Cluster `c` holds the supersequences with `h(y) = h(x) + c`.

use std::collections::HashMap;

use crate::bits::{hamming_weight, rle_encode, BitString};
use crate::count::{binomial, BigCount};
use crate::embeddings::Mask;
use crate::error::{domain, Result};
use crate::superspace::Posterior;

/// The lexicographically first mask of `x` in `y` (greedy left-to-right
/// match), or `None` when `x` is not a subsequence of `y`.
pub fn canonical_embedding(x: &BitString, y: &BitString) -> Option<Mask> {
    let mut mask = Vec::with_capacity(x.len());
    let mut ys = y.as_slice().iter().enumerate();
    for &b in x.as_slice() {
        let (j, _) = ys.find(|(_, &c)| c == b)?;
        mask.push(j + 1);
    }
    Some(mask)
}

/// True when the canonical embedding ends at the last position of `y`.
pub fn is_maximal_initial(x: &BitString, y: &BitString) -> bool {
    match canonical_embedding(x, y) {
        Some(mask) => mask.last().copied().unwrap_or(0) == y.len(),
        None => false,
    }
}

/// `|M_{n,x}| = C(n-1, m-1)`.
pub fn maximal_initials_total(n: usize, m: usize) -> Result<BigCount> {
    if m == 0 || m > n {
        return domain(format!("need 1 ≤ m ≤ n, got m = {m}, n = {n}"));
    }
    Ok(binomial(n as i64 - 1, m as i64 - 1))
}

/// `|M^c_{n,x}| = C((n-m-c)+h(x)-1, n-m-c)·C(c+(m-h(x))-1, c)`.
pub fn maximal_initials_cluster(n: usize, m: usize, hx: usize, c: usize) -> Result<BigCount> {
    check_cluster_args(n, m, hx, c)?;
    if m == 0 {
        return domain("maximal initials need a nonempty x");
    }
    Ok(maximal_initials_formula(n, m, hx, c))
}

fn maximal_initials_formula(n: usize, m: usize, hx: usize, c: usize) -> BigCount {
    let z = (n - m - c) as i64;
    let (m, hx, c) = (m as i64, hx as i64, c as i64);
    binomial(z + hx - 1, z) * binomial(c + (m - hx) - 1, c)
}

fn check_cluster_args(n: usize, m: usize, hx: usize, c: usize) -> Result<()> {
    if m > n || hx > m || c > n - m {
        return domain(format!("out of range: n = {n}, m = {m}, h(x) = {hx}, c = {c}"));
    }
    Ok(())
}

/// `|Υ^c_{n,x}| = Σ_{p=h(x)}^{h(x)+z} C(p-1, h(x)-1)·C(n-p, c)` with
/// `z = n-m-c`; `C(n, c)` when `h(x) = 0`.
pub fn cluster_size_closed(n: usize, m: usize, hx: usize, c: usize) -> Result<BigCount> {
    check_cluster_args(n, m, hx, c)?;
    if hx == 0 {
        return Ok(binomial(n as i64, c as i64));
    }
    let z = n - m - c;
    Ok((hx..=hx + z)
        .map(|p| binomial(p as i64 - 1, hx as i64 - 1) * binomial((n - p) as i64, c as i64))
        .sum())
}

/// The stars-and-bars double sum over the end `ℓ` of the maximal initial
/// and the extra ones `g` it covers.
pub fn cluster_size_stars_and_bars(n: usize, m: usize, hx: usize, c: usize) -> Result<BigCount> {
    check_cluster_args(n, m, hx, c)?;
    if m == 0 {
        return Ok(binomial(n as i64, c as i64));
    }
    let mut total = BigCount::zero();
    for l in m..=n {
        let lb = c.saturating_sub(n - l);
        let ub = c.min(l - m);
        for g in lb..=ub {
            total += maximal_initials_formula(l, m, hx, g) * binomial((n - l) as i64, (c - g) as i64);
        }
    }
    Ok(total)
}

/// Cluster size by the first-bit recurrence, memoized on
/// `(n, suffix of x, c)`:
/// `Υ^c_{n,0·s} = Υ^c_{n-1,s} + Υ^{c-1}_{n-1,0·s}`,
/// `Υ^c_{n,1·s} = Υ^c_{n-1,s} + Υ^c_{n-1,1·s}`, `Υ^c_{n,ε} = C(n,c)`.
pub fn cluster_size_recurrence(n: usize, x: &BitString, c: usize) -> BigCount {
    fn go(
        n: usize,
        xs: &[u8],
        start: usize,
        c: usize,
        memo: &mut HashMap<(usize, usize, usize), BigCount>,
    ) -> BigCount {
        let rest = xs.len() - start;
        if c + rest > n {
            return BigCount::zero();
        }
        if rest == 0 {
            return binomial(n as i64, c as i64);
        }
        if let Some(v) = memo.get(&(n, start, c)) {
            return v.clone();
        }
        let matched = go(n - 1, xs, start + 1, c, memo);
        let skipped = match xs[start] {
            0 if c == 0 => BigCount::zero(),
            0 => go(n - 1, xs, start, c - 1, memo),
            _ => go(n - 1, xs, start, c, memo),
        };
        let v = matched + skipped;
        memo.insert((n, start, c), v.clone());
        v
    }
    go(n, x.as_slice(), 0, c, &mut HashMap::new())
}

/// Brute-force count of maximal initials per cluster.
pub fn maximal_initials_census(p: &Posterior) -> Vec<u64> {
    let x = p.x();
    let hx = hamming_weight(x);
    let mut out = vec![0u64; p.n() - x.len() + 1];
    for (y, _) in p.iter() {
        if is_maximal_initial(x, &y) {
            out[hamming_weight(&y) - hx] += 1;
        }
    }
    out
}

/// Insertion-slot counts `ρ_0(x)`, `ρ_1(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoProfile {
    pub rho0: usize,
    pub rho1: usize,
}

/// Each run `r` contributes `|r|+1` if it spans all of `x`, `|r|` if it
/// touches exactly one end and `|r|-1` otherwise.
pub fn rho(x: &BitString) -> Result<RhoProfile> {
    if x.is_empty() {
        return domain("ρ is undefined for the empty string");
    }
    let r = rle_encode(x);
    let ell = r.ell();
    let mut acc = [0usize; 2];
    for (i, &k) in r.runs().iter().enumerate() {
        let ends = usize::from(i == 0) + usize::from(i + 1 == ell);
        acc[r.run_symbol(i) as usize] += k + ends - 1;
    }
    Ok(RhoProfile {
        rho0: acc[0],
        rho1: acc[1],
    })
}

/// Number of `y ∈ Υ_{n,x}` with `ω_x(y) = 1`:
/// `C(n-m+ρ_0+ρ_1-1, n-m)`.
pub fn count_singletons(n: usize, x: &BitString) -> Result<BigCount> {
    let m = x.len();
    if m > n {
        return domain(format!("|x| = {m} exceeds n = {n}"));
    }
    if m == 0 {
        return Ok(BigCount::pow2(n));
    }
    let r = rho(x)?;
    let d = (n - m) as i64;
    Ok(binomial(d + (r.rho0 + r.rho1) as i64 - 1, d))
}
