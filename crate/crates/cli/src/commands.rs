//! One function per subcommand. Each returns a [`Table`]; rendering and exit
//! codes live in `main`.

use delseq_core::clustering::{
    cluster_size_closed, cluster_size_recurrence, cluster_size_stars_and_bars, count_singletons,
    maximal_initials_census, maximal_initials_cluster, rho,
};
use delseq_core::embeddings::{
    block_map_of_mask, count_embeddings_dp, count_embeddings_runs, embedding_decomposition, enumerate_masks,
};
use delseq_core::entropy::{
    double_deletion_classes, single_deletion_classes, string_count_identity, weight_sum_identity,
};
use delseq_core::entropy::{entropy, entropy_estimate_from_moments, g_chain, EntropyMeasure};
use delseq_core::hws::{kappa_squared, variance_coefficient};
use delseq_core::superspace::{build_posterior_capped, masks_per_cluster, weight_classes};
use delseq_core::{hamming_weight, rle_decode, BigCount, BitString, Error, Rle};

use crate::table::{Cell, Table};

pub fn posterior(x: &BitString, n: usize, max_bits: usize) -> Result<Table, Error> {
    let p = build_posterior_capped(x, n, max_bits)?;
    let mut t = Table::new("posterior", &["y", "omega", "prob", "count"])
        .param("x", x.to_string())
        .param("n", n);
    for ((y, w), prob) in p.iter().zip(p.probabilities()) {
        t.push(vec![y.to_string().into(), w.into(), prob.into(), 1u64.into()]);
    }
    t.push(vec!["total".into(), p.mu().into(), 1.0.into(), p.len().into()]);
    Ok(t)
}

fn check_mn(n: usize, m: usize) -> Result<(), Error> {
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    Ok(())
}

pub fn entropy_scan(n: usize, m: usize, measures: &[EntropyMeasure], max_bits: usize) -> Result<Table, Error> {
    check_mn(n, m)?;
    let mut cols = vec!["x".to_string(), "kappa2".to_string()];
    cols.extend(measures.iter().map(|mm| mm.label()));
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut t = Table::new("entropy-scan", &col_refs).param("n", n).param("m", m);
    for x in BitString::all(m) {
        let p = build_posterior_capped(&x, n, max_bits)?;
        let mut row: Vec<Cell> = vec![x.to_string().into(), kappa_squared(&x).into()];
        row.extend(measures.iter().map(|&mm| Cell::Real(entropy(&p, mm))));
        t.push(row);
    }
    Ok(t)
}

/// Strings of length `m` by `κ²` descending, then `x` ascending. The
/// Shannon entropy column appears only when `n` is given.
pub fn kappa(m: usize, n: Option<usize>, max_bits: usize) -> Result<Table, Error> {
    if m == 0 {
        return Err(Error::Domain("κ² needs m ≥ 1".into()));
    }
    let mut rows: Vec<(BitString, BigCount, BigCount)> = BitString::all(m)
        .map(|x| {
            let (k, v) = (kappa_squared(&x), variance_coefficient(&x));
            (x, k, v)
        })
        .collect();
    rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let mut t = match n {
        Some(n) => {
            check_mn(n, m)?;
            Table::new("kappa", &["x", "kappa2", "variance_coeff", "shannon"]).param("n", n)
        }
        None => Table::new("kappa", &["x", "kappa2", "variance_coeff"]),
    }
    .param("m", m);
    for (x, k, v) in rows {
        let mut row: Vec<Cell> = vec![x.to_string().into(), k.into(), v.into()];
        if let Some(n) = n {
            let p = build_posterior_capped(&x, n, max_bits)?;
            row.push(entropy(&p, EntropyMeasure::Shannon).into());
        }
        t.push(row);
    }
    Ok(t)
}

pub fn clusters(x: &BitString, n: usize, max_bits: usize) -> Result<Table, Error> {
    let m = x.len();
    let p = build_posterior_capped(x, n, max_bits)?;
    let hx = hamming_weight(x);
    let census = p.cluster_census();
    let initials = maximal_initials_census(&p);
    let mut mask_census = vec![0u64; n - m + 1];
    for (y, w) in p.iter() {
        mask_census[hamming_weight(&y) - hx] += w;
    }
    let mut t = Table::new(
        "clusters",
        &[
            "c",
            "size_closed",
            "size_stars_bars",
            "size_recurrence",
            "size_bruteforce",
            "maximal_initials",
            "maximal_initials_bruteforce",
            "masks_formula",
            "masks_bruteforce",
        ],
    )
    .param("x", x.to_string())
    .param("n", n);
    for c in 0..=n - m {
        // The maximal-initial formula needs a last symbol to anchor on.
        let mi: Cell = if m == 0 {
            Cell::Text(String::new())
        } else {
            maximal_initials_cluster(n, m, hx, c)?.into()
        };
        t.push(vec![
            c.into(),
            cluster_size_closed(n, m, hx, c)?.into(),
            cluster_size_stars_and_bars(n, m, hx, c)?.into(),
            cluster_size_recurrence(n, x, c).into(),
            census[c].into(),
            mi,
            initials[c].into(),
            masks_per_cluster(n, m, c)?.into(),
            mask_census[c].into(),
        ]);
    }
    Ok(t)
}

pub fn singletons(x: &BitString, n: usize, max_bits: usize) -> Result<Table, Error> {
    let r = rho(x)?;
    let formula = count_singletons(n, x)?;
    let p = build_posterior_capped(x, n, max_bits)?;
    let brute = p.weights().iter().filter(|&&w| w == 1).count();
    let mut t = Table::new("singletons", &["rho0", "rho1", "count_formula", "count_bruteforce"])
        .param("x", x.to_string())
        .param("n", n);
    t.push(vec![r.rho0.into(), r.rho1.into(), formula.into(), brute.into()]);
    Ok(t)
}

/// Weight classes for one or two deletions with the string-count and
/// weight-sum identities, plus a brute-force census check when `m + d`
/// fits under the enumeration cap.
pub fn classes(x_rle: &Rle, deletions: usize, max_bits: usize) -> Result<Table, Error> {
    let dc = match deletions {
        1 => single_deletion_classes(x_rle)?,
        2 => double_deletion_classes(x_rle)?,
        d => return Err(Error::Domain(format!("--deletions must be 1 or 2, got {d}"))),
    };
    let strings = string_count_identity(x_rle, deletions)?;
    let masks = weight_sum_identity(x_rle, deletions)?;
    let n = x_rle.total_len() + deletions;
    let census = if n <= max_bits {
        let p = build_posterior_capped(&rle_decode(x_rle), n, max_bits)?;
        Cell::Bool(weight_classes(&p) == dc.classes)
    } else {
        Cell::Text("skipped".into())
    };
    let mut t = Table::new(
        "classes",
        &[
            "weight",
            "multiplicity",
            "strings_identity",
            "masks_identity",
            "census_match",
        ],
    )
    .param("x_rle", x_rle.to_string())
    .param("deletions", deletions)
    .param("strings_lhs", strings.lhs())
    .param("strings_rhs", strings.rhs.clone())
    .param("masks_lhs", masks.lhs())
    .param("masks_rhs", masks.rhs.clone());
    for case in &dc.cases {
        t = t
            .param(&format!("case_{}_strings", case.case), case.strings.clone())
            .param(&format!("case_{}_masks", case.case), case.masks.clone());
    }
    for (w, c) in &dc.classes.classes {
        t.push(vec![
            w.into(),
            c.into(),
            strings.holds().into(),
            masks.holds().into(),
            census.clone(),
        ]);
    }
    Ok(t)
}

pub fn gchain(x: &BitString, n: usize, measure: EntropyMeasure, max_bits: usize) -> Result<Table, Error> {
    if x.len() > n {
        return Err(Error::Domain(format!("|x| = {} exceeds n = {n}", x.len())));
    }
    let mut t = Table::new("gchain", &["step", "x", "x_rle", "entropy"])
        .param("n", n)
        .param("measure", measure.label());
    for (step, r) in g_chain(x).iter().enumerate() {
        let xi = rle_decode(r);
        let h = entropy(&build_posterior_capped(&xi, n, max_bits)?, measure);
        t.push(vec![step.into(), xi.to_string().into(), r.to_string().into(), h.into()]);
    }
    Ok(t)
}

pub fn estimate(x: &BitString, n: usize, max_bits: usize) -> Result<Table, Error> {
    let p = build_posterior_capped(x, n, max_bits)?;
    let e = entropy_estimate_from_moments(&p);
    let err = (e.estimate - e.exact).abs();
    let mut t = Table::new(
        "estimate",
        &[
            "exact_H",
            "moment_estimate",
            "error",
            "error_bound",
            "within_bound",
            "mean",
            "variance",
            "third_central",
            "fourth_central",
        ],
    )
    .param("x", x.to_string())
    .param("n", n);
    t.push(vec![
        e.exact.into(),
        e.estimate.into(),
        err.into(),
        e.bound.into(),
        (err <= e.bound).into(),
        e.mean.into(),
        e.variance.into(),
        e.third.into(),
        e.fourth.into(),
    ]);
    Ok(t)
}

/// Per-block-map decomposition of `ω_x(y)`, then the totals from the run
/// formula, the DP and mask enumeration. Enumeration is skipped when `|y|`
/// exceeds the cap.
pub fn embed(x: &BitString, y: &BitString, max_bits: usize) -> Result<Table, Error> {
    if x.len() > y.len() {
        return Err(Error::Domain(format!("|x| = {} exceeds |y| = {}", x.len(), y.len())));
    }
    let masks = if y.len() <= max_bits {
        Some(enumerate_masks(x, y))
    } else {
        None
    };
    let mut t = Table::new("embed", &["kind", "f", "omega", "enumerated"])
        .param("x", x.to_string())
        .param("y", y.to_string());
    let fmt_map = |f: &[usize]| f.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let enumerated = |count: usize| -> Cell {
        match masks {
            Some(_) => count.into(),
            None => Cell::Text("skipped".into()),
        }
    };
    for (map, w) in embedding_decomposition(x, y) {
        let owned = masks.as_ref().map_or(0, |ms| {
            ms.iter().filter(|mk| block_map_of_mask(x, y, mk) == map).count()
        });
        t.push(vec!["map".into(), fmt_map(&map.f).into(), w.into(), enumerated(owned)]);
    }
    let total = masks.as_ref().map_or(0, Vec::len);
    t.push(vec![
        "runs".into(),
        "".into(),
        count_embeddings_runs(x, y).into(),
        enumerated(total),
    ]);
    t.push(vec![
        "dp".into(),
        "".into(),
        count_embeddings_dp(x, y).into(),
        enumerated(total),
    ]);
    Ok(t)
}
