//! Counting embeddings (masks) of `x` in `y` three ways: brute-force
//! enumeration, the distinct-occurrence DP, and run-based counting over
//! block maps.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::{rle_encode, BitString, Rle};
use crate::count::{binomial, BigCount};

/// Strictly increasing 1-based positions `π` with `y_π = x`.
pub type Mask = Vec<usize>;

/// A strictly increasing map from the runs of `x` to the runs of `y` with
/// `f(i) ≡ i (mod 2)`; `f[i-1]` holds `f(i)`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockMap {
    pub f: Vec<usize>,
}

/// Every mask of `x` in `y`, in lexicographic order.
pub fn enumerate_masks(x: &BitString, y: &BitString) -> Vec<Mask> {
    let (xs, ys) = (x.as_slice(), y.as_slice());
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(xs.len());
    fn rec(xs: &[u8], ys: &[u8], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Mask>) {
        let i = cur.len();
        if i == xs.len() {
            out.push(cur.clone());
            return;
        }
        let remaining = xs.len() - i;
        for j in start..ys.len() {
            if ys.len() - j < remaining {
                break;
            }
            if ys[j] == xs[i] {
                cur.push(j + 1);
                rec(xs, ys, j + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(xs, ys, 0, &mut cur, &mut out);
    out
}

/// `ω_x(y)` via `W(i,j) = W(i,j-1) + [x_i = y_j]·W(i-1,j-1)`.
pub fn count_embeddings_dp(x: &BitString, y: &BitString) -> BigCount {
    let (xs, ys) = (x.as_slice(), y.as_slice());
    if xs.len() > ys.len() {
        return BigCount::zero();
    }
    // Every intermediate value is at most C(|y|, i) < 2^127.
    if ys.len() < 128 {
        let mut w = vec![0u128; xs.len() + 1];
        w[0] = 1;
        for &b in ys {
            for i in (1..=xs.len()).rev() {
                if xs[i - 1] == b {
                    w[i] += w[i - 1];
                }
            }
        }
        return BigCount::from(w[xs.len()]);
    }
    let mut w = vec![BigUint::zero(); xs.len() + 1];
    w[0] = BigUint::one();
    for &b in ys {
        for i in (1..=xs.len()).rev() {
            if xs[i - 1] == b {
                let prev = w[i - 1].clone();
                w[i] += prev;
            }
        }
    }
    BigCount::from(w.pop().unwrap())
}

/// The same DP on strings packed most-significant-bit first (see
/// [`BitString::from_u64`]). Exact for `n ≤ 63`.
pub fn count_embeddings_packed(x: u64, m: usize, y: u64, n: usize) -> u64 {
    debug_assert!(n < 64);
    if m > n {
        return 0;
    }
    let mut w = [0u64; 64];
    w[0] = 1;
    for j in (0..n).rev() {
        let b = (y >> j) & 1;
        for i in (1..=m).rev() {
            if (x >> (m - i)) & 1 == b {
                w[i] += w[i - 1];
            }
        }
    }
    w[m]
}

/// All block maps between the runs of `x` and of `y`. Both must start with
/// the same symbol; the list has `C(ℓ'+u, u)` entries with
/// `u = ⌊(ℓ-ℓ')/2⌋`.
pub fn block_maps(x_rle: &Rle, y_rle: &Rle) -> Vec<BlockMap> {
    block_maps_for_counts(x_rle.ell(), y_rle.ell())
}

fn block_maps_for_counts(lx: usize, ly: usize) -> Vec<BlockMap> {
    if lx > ly {
        return Vec::new();
    }
    let u = (ly - lx) / 2;
    // f(i) = i + 2·d_i with 0 ≤ d_1 ≤ ... ≤ d_ℓ' ≤ u.
    let mut out = Vec::new();
    let mut d = vec![0usize; lx];
    loop {
        out.push(BlockMap {
            f: d.iter().enumerate().map(|(i, &di)| i + 1 + 2 * di).collect(),
        });
        let Some(pos) = (0..lx).rev().find(|&i| d[i] < u) else {
            break;
        };
        let v = d[pos] + 1;
        for di in d.iter_mut().skip(pos) {
            *di = v;
        }
    }
    out
}

/// Per-map decomposition `ω_x(y) = Σ_f |ω_f|`, maps in lexicographic order.
/// When `x` and `y` start with different symbols, `y`'s first run is
/// deleted first and the maps refer to the remaining runs.
pub fn embedding_decomposition(x: &BitString, y: &BitString) -> Vec<(BlockMap, BigCount)> {
    let xr = rle_encode(x);
    let (yk, _) = aligned_y_runs(&xr, y);
    let Some(yk) = yk else {
        return Vec::new();
    };
    let xk = xr.runs();
    block_maps_for_counts(xk.len(), yk.len())
        .into_iter()
        .map(|map| {
            let w = map_weight(xk, &yk, &map);
            (map, w)
        })
        .collect()
}

/// `ω_x(y)` by run-based counting.
pub fn count_embeddings_runs(x: &BitString, y: &BitString) -> BigCount {
    if x.is_empty() {
        return BigCount::one();
    }
    embedding_decomposition(x, y).into_iter().map(|(_, w)| w).sum()
}

/// `|ω_f| = Π_i [C(Σ_{F̄*(i)} k_j, k'_i) − C(Σ_{F̄*(i)∖{f(i)}} k_j, k'_i)]`
/// where `F̄*(i) = {f(i-1)+1, f(i-1)+3, ..., f(i)}`.
fn map_weight(xk: &[usize], yk: &[usize], map: &BlockMap) -> BigCount {
    let mut acc = BigCount::one();
    let mut prev = 0usize;
    for (i, &fi) in map.f.iter().enumerate() {
        // Runs are 1-based: run j has length yk[j-1].
        let before: usize = (prev + 1..fi).step_by(2).map(|j| yk[j - 1]).sum();
        let with_last = before + yk[fi - 1];
        let k = xk[i] as i64;
        let term = binomial(with_last as i64, k).saturating_sub(&binomial(before as i64, k));
        if term.is_zero() {
            return term;
        }
        acc = acc * term;
        prev = fi;
    }
    acc
}

/// Runs of `y` after aligning its first symbol with `x`'s, and whether the
/// first run was stripped. `None` when no alignment exists.
fn aligned_y_runs(xr: &Rle, y: &BitString) -> (Option<Vec<usize>>, bool) {
    let yr = rle_encode(y);
    match (xr.first_symbol(), yr.first_symbol()) {
        (None, _) => (Some(yr.runs().to_vec()), false),
        (Some(_), None) => (None, false),
        (Some(a), Some(b)) if a == b => (Some(yr.runs().to_vec()), false),
        (Some(_), Some(_)) => (Some(yr.runs()[1..].to_vec()), true),
    }
}

/// The block map that owns `mask`: `f(i)` is the run of `y` holding the last
/// position of `x`'s `i`-th run, numbered as in [`embedding_decomposition`].
pub fn block_map_of_mask(x: &BitString, y: &BitString, mask: &[usize]) -> BlockMap {
    let xr = rle_encode(x);
    let (_, stripped) = aligned_y_runs(&xr, y);
    let ys = y.as_slice();
    let mut run_of = Vec::with_capacity(ys.len());
    let mut run = 1usize;
    for (j, &b) in ys.iter().enumerate() {
        if j > 0 && ys[j - 1] != b {
            run += 1;
        }
        run_of.push(run);
    }
    let mut f = Vec::with_capacity(xr.ell());
    let mut end = 0usize;
    for &k in xr.runs() {
        end += k;
        f.push(run_of[mask[end - 1] - 1] - usize::from(stripped));
    }
    BlockMap { f }
}
