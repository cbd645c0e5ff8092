//! Weight classes of `Υ_{m+d,x}` for one and two deletions, generated from
//! the run-length encoding of `x` without enumerating `2^{m+d}` strings.
//!
//! Two insertions are labelled by how many of them lengthen an original
//! run (`2/0`, `1/1`, `0/2`); the remaining ones split a run or extend the
//! string by the opposite symbol at an end.

use std::collections::HashMap;

use crate::bits::{rle_decode, BitString, Rle};
use crate::count::{binomial, BigCount};
use crate::embeddings::count_embeddings_dp;
use crate::error::{domain, Result};
use crate::superspace::{total_masks, uncertainty_cardinality, WeightClasses};

/// Strings and masks contributed by one insertion case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSummary {
    pub case: &'static str,
    pub strings: BigCount,
    pub masks: BigCount,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionClasses {
    pub deletions: usize,
    pub classes: WeightClasses,
    pub cases: Vec<CaseSummary>,
}

impl DeletionClasses {
    pub fn string_count(&self) -> BigCount {
        self.classes.string_count()
    }

    pub fn mask_count(&self) -> BigCount {
        self.classes.mask_count()
    }
}

/// One side of a closed-form identity evaluated term by term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    /// `(case, term)` in the order `2/0, 0/2, 1/1` (or `1/0, 0/1`).
    pub terms: Vec<(&'static str, BigCount)>,
    pub rhs: BigCount,
}

impl Identity {
    pub fn lhs(&self) -> BigCount {
        self.terms.iter().map(|(_, t)| t).sum()
    }

    pub fn holds(&self) -> bool {
        self.lhs() == self.rhs
    }
}

fn check(x_rle: &Rle) -> Result<()> {
    if x_rle.is_empty() {
        return domain("deletion classes need a nonempty x");
    }
    Ok(())
}

/// One deletion: `ℓ` strings of weight `k_i + 1` (lengthen run `i`) and
/// `m - ℓ + 2` singletons (split a run or extend at an end).
pub fn single_deletion_classes(x_rle: &Rle) -> Result<DeletionClasses> {
    check(x_rle)?;
    let (m, ell) = (x_rle.total_len(), x_rle.ell());
    let mut weights: Vec<BigCount> = x_rle.runs().iter().map(|&k| BigCount::from(k + 1)).collect();
    let lengthen_masks: BigCount = weights.iter().sum();
    let singletons = m - ell + 2;
    weights.extend(std::iter::repeat_n(BigCount::one(), singletons));
    Ok(DeletionClasses {
        deletions: 1,
        classes: WeightClasses::from_weights(weights),
        cases: vec![
            CaseSummary {
                case: "1/0",
                strings: BigCount::from(ell),
                masks: lengthen_masks,
            },
            CaseSummary {
                case: "0/1",
                strings: BigCount::from(singletons),
                masks: BigCount::from(singletons),
            },
        ],
    })
}

/// Two deletions by construction: every two-step single-bit insertion is
/// applied, duplicates merged, and each resulting `y` weighted by its actual
/// embedding count. A `y` is filed under the case with the most run
/// lengthenings among its derivations (`2/0` before `1/1` before `0/2`).
///
/// Lengthening the fresh run made by the first split still counts as a
/// split: it does not grow a run of `x`.
pub fn double_deletion_classes(x_rle: &Rle) -> Result<DeletionClasses> {
    check(x_rle)?;
    let x = rle_decode(x_rle);
    let xs = x.as_slice();
    // origin[i]: the symbol belongs to a run holding an original bit of x.
    let base: Vec<(u8, bool)> = xs.iter().map(|&b| (b, true)).collect();
    let mut best: HashMap<Vec<u8>, u8> = HashMap::new();
    for (s1, l1) in insertions(&base) {
        for (s2, l2) in insertions(&s1) {
            let key: Vec<u8> = s2.iter().map(|&(b, _)| b).collect();
            let l = l1 + l2;
            best.entry(key).and_modify(|v| *v = (*v).max(l)).or_insert(l);
        }
    }
    let mut per_case: [(BigCount, BigCount); 3] = Default::default();
    let mut keys: Vec<(Vec<u8>, u8)> = best.into_iter().collect();
    keys.sort();
    let mut weights = Vec::with_capacity(keys.len());
    for (y, l) in keys {
        let w = count_embeddings_dp(&x, &BitString::new(y).expect("binary"));
        let slot = &mut per_case[[1, 2, 0][l as usize]];
        slot.0 += BigCount::one();
        slot.1 += &w;
        weights.push(w);
    }
    let names = ["2/0", "0/2", "1/1"];
    Ok(DeletionClasses {
        deletions: 2,
        classes: WeightClasses::from_weights(weights),
        cases: names
            .iter()
            .zip(per_case)
            .map(|(&case, (strings, masks))| CaseSummary { case, strings, masks })
            .collect(),
    })
}

/// All single-bit insertions into `s`, tagged with 1 when the new bit joins
/// a run that holds an original bit.
fn insertions(s: &[(u8, bool)]) -> Vec<(Vec<(u8, bool)>, u8)> {
    let mut out = Vec::with_capacity(2 * (s.len() + 1));
    for p in 0..=s.len() {
        for b in 0..2u8 {
            let joins = |q: Option<&(u8, bool)>| q.is_some_and(|&(c, _)| c == b);
            let left = p.checked_sub(1).and_then(|i| s.get(i));
            let right = s.get(p);
            let lengthens = (joins(left) && run_is_original(s, p - 1)) || (joins(right) && run_is_original(s, p));
            let mut t = Vec::with_capacity(s.len() + 1);
            t.extend_from_slice(&s[..p]);
            t.push((b, lengthens));
            t.extend_from_slice(&s[p..]);
            out.push((t, u8::from(lengthens)));
        }
    }
    out
}

fn run_is_original(s: &[(u8, bool)], i: usize) -> bool {
    let sym = s[i].0;
    let lo = (0..=i).rev().take_while(|&j| s[j].0 == sym).last().unwrap();
    let hi = (i..s.len()).take_while(|&j| s[j].0 == sym).last().unwrap();
    s[lo..=hi].iter().any(|&(_, orig)| orig)
}

/// `k̃_i`: `k_i - 1` for interior runs, `k_i` for the first and last run and
/// `k_1 + 1` when `x` is a single run (it touches both ends).
fn k_tilde(runs: &[usize]) -> Vec<i64> {
    let ell = runs.len();
    runs.iter()
        .enumerate()
        .map(|(i, &k)| {
            let ends = i64::from(i == 0) + i64::from(i + 1 == ell);
            k as i64 + ends - 1
        })
        .collect()
}

/// `F = Σ_{i<j} k̃_i k̃_j + Σ_i C(k̃_i + 1, 2)`, the number of `0/2` strings.
fn f_term(runs: &[usize]) -> BigCount {
    let kt = k_tilde(runs);
    let mut acc = BigCount::zero();
    for i in 0..kt.len() {
        for j in i + 1..kt.len() {
            acc += BigCount::from((kt[i] * kt[j]) as u64);
        }
        acc += binomial(kt[i] + 1, 2);
    }
    acc
}

/// String-count identity, per case.
///
/// Two deletions: `ℓ(ℓ+1)/2 + F + ℓ(m-ℓ+2) + 1 = C(m+2,2) + (m+2) + 1`.
/// One deletion: `ℓ + (m-ℓ+2) = m + 2`.
pub fn string_count_identity(x_rle: &Rle, deletions: usize) -> Result<Identity> {
    check(x_rle)?;
    let (m, ell) = (x_rle.total_len(), x_rle.ell());
    let rhs = uncertainty_cardinality(m + deletions, m)?;
    let terms = match deletions {
        1 => vec![("1/0", BigCount::from(ell)), ("0/1", BigCount::from(m - ell + 2))],
        2 => vec![
            ("2/0", BigCount::from(ell * (ell + 1) / 2)),
            ("0/2", f_term(x_rle.runs())),
            ("1/1", BigCount::from(ell * (m - ell + 2) + 1)),
        ],
        d => return domain(format!("only 1 or 2 deletions are supported, got {d}")),
    };
    Ok(Identity { terms, rhs })
}

/// Mask-count identity, per case.
///
/// Two deletions:
/// `Σ C(k_i+2,2) + Σ_{i<j}(k_i+1)(k_j+1)` for `2/0`, `F` for `0/2` and
/// `Σ_i [c_i(k_i+1) + k_i + k_{i+1} + 1]` for `1/1` with `k_{ℓ+1} = 0`,
/// `c_1 = m-ℓ+2` and `c_i = m-ℓ+1` for `i > 1`; the total is `4·C(m+2,2)`.
/// One deletion: `(m + ℓ) + (m - ℓ + 2) = 2(m+1)`.
pub fn weight_sum_identity(x_rle: &Rle, deletions: usize) -> Result<Identity> {
    check(x_rle)?;
    let (m, ell) = (x_rle.total_len(), x_rle.ell());
    let k = x_rle.runs();
    let rhs = total_masks(m + deletions, m)?;
    let terms = match deletions {
        1 => vec![("1/0", BigCount::from(m + ell)), ("0/1", BigCount::from(m - ell + 2))],
        2 => {
            let mut t20 = BigCount::zero();
            for i in 0..ell {
                t20 += binomial(k[i] as i64 + 2, 2);
                for j in i + 1..ell {
                    t20 += BigCount::from((k[i] + 1) * (k[j] + 1));
                }
            }
            let mut t11 = BigCount::zero();
            for i in 0..ell {
                let c = if i == 0 { m - ell + 2 } else { m - ell + 1 };
                let next = k.get(i + 1).copied().unwrap_or(0);
                t11 += BigCount::from(c * (k[i] + 1) + k[i] + next + 1);
            }
            vec![("2/0", t20), ("0/2", f_term(k)), ("1/1", t11)]
        }
        d => return domain(format!("only 1 or 2 deletions are supported, got {d}")),
    };
    Ok(Identity { terms, rhs })
}
