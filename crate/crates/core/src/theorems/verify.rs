use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::expansion::ExpansionMemo;
use crate::posets::{build_poset, classes_of, full_poset, Order};
use crate::shapes::{dominance_leq, skew_shapes, Composition, Partition, Ribbon, SkewShape};

use super::equitable::{enumerate_equitable, predicted_support};
use super::geometry::conjectured_max_ribbon;
use super::Report;

fn shape_set(ribbons: impl IntoIterator<Item = Ribbon>) -> BTreeSet<SkewShape> {
    ribbons.into_iter().map(|r| r.to_skew()).collect()
}

fn names(shapes: &[SkewShape]) -> Vec<String> {
    shapes
        .iter()
        .map(|s| Ribbon::from_skew(s).map_or_else(|| s.to_string(), |r| r.to_string()))
        .collect()
}

/// In the connected part of the support poset there is exactly one maximal
/// class per row count, it is the set of equitable ribbons with that many
/// rows, and their support is everything fitting in the bounding box.
pub fn verify_theorem_main(n: usize, memo: &ExpansionMemo) -> Report {
    let poset = full_poset(n, Order::Support, memo);
    let maximal = poset.maximal_connected();
    let mut bad = Vec::new();
    let row_counts: Vec<usize> = maximal.iter().map(|&i| poset.classes[i].num_rows()).collect();
    let distinct: BTreeSet<usize> = row_counts.iter().copied().collect();
    if maximal.len() != n || distinct != (1..=n).collect() {
        bad.push(json!({"part": "a", "maximal_row_counts": row_counts}));
    }
    for &i in &maximal {
        let class = &poset.classes[i];
        let l = class.num_rows();
        let members: BTreeSet<SkewShape> = class.members.iter().cloned().collect();
        if members != shape_set(enumerate_equitable(n, l)) {
            bad.push(json!({"part": "b", "rows": l, "members": names(&class.members)}));
        }
    }
    bad.extend(verify_support_prediction(n, memo).counterexamples);
    Report::new("main", n, bad)
}

/// Every equitable ribbon with `n` boxes has exactly the predicted support.
pub fn verify_support_prediction(n: usize, memo: &ExpansionMemo) -> Report {
    let ribbons: Vec<Ribbon> = (1..=n).flat_map(|l| enumerate_equitable(n, l)).collect();
    let bad: Vec<serde_json::Value> = ribbons
        .par_iter()
        .filter_map(|r| {
            let got = memo.expand(&r.to_skew()).support();
            let want = predicted_support(n, r.num_rows());
            (got != want).then(|| {
                json!({
                    "part": "c",
                    "ribbon": r.rows(),
                    "missing": want.difference(&got).collect::<Vec<_>>(),
                    "unexpected": got.difference(&want).collect::<Vec<_>>(),
                })
            })
        })
        .collect();
    Report::new("support", n, bad)
}

/// The connected part of the Schur-positivity poset has one maximal class per
/// row count, and each is `{R, R rotated}` for the diagonal ribbon `R`.
pub fn verify_conjecture_max(n: usize, memo: &ExpansionMemo) -> Report {
    let poset = full_poset(n, Order::Schur, memo);
    let maximal = poset.maximal_connected();
    let mut bad = Vec::new();
    let row_counts: Vec<usize> = maximal.iter().map(|&i| poset.classes[i].num_rows()).collect();
    let distinct: BTreeSet<usize> = row_counts.iter().copied().collect();
    if maximal.len() != n || distinct != (1..=n).collect() {
        bad.push(json!({"part": "a", "maximal_row_counts": row_counts}));
    }
    for &i in &maximal {
        let class = &poset.classes[i];
        let l = class.num_rows();
        let r = conjectured_max_ribbon(n, l).expect("1 <= l <= n");
        let members: BTreeSet<SkewShape> = class.members.iter().cloned().collect();
        if members != shape_set([r.clone(), r.rotate180()]) {
            bad.push(json!({"part": "b", "rows": l, "predicted": r.rows(), "members": names(&class.members)}));
        }
    }
    Report::new("max", n, bad)
}

/// `rib(λ_1, λ_3, λ_5, …, λ_6, λ_4, λ_2)`.
pub fn minrib_prediction(lambda: &Partition) -> Ribbon {
    let p = lambda.parts();
    let mut rows: Vec<usize> = p.iter().step_by(2).copied().collect();
    rows.extend(p.iter().skip(1).step_by(2).rev());
    Ribbon::new(Composition::from_parts_unchecked(rows))
}

/// Distinct orderings of a multiset, in lexicographic order.
pub fn distinct_rearrangements(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = parts.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Among ribbons with row lengths `lambda`, the Schur-positivity order has a
/// unique minimal class and it contains [`minrib_prediction`].
pub fn verify_conjecture_minrib(lambda: &Partition, memo: &ExpansionMemo) -> Result<Report> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument("need a nonempty partition".into()));
    }
    let shapes: Vec<SkewShape> = distinct_rearrangements(lambda.parts())
        .into_iter()
        .map(|rows| Ribbon::new(Composition::from_parts_unchecked(rows)).to_skew())
        .collect();
    let poset = build_poset(classes_of(&shapes, Order::Schur, memo), Order::Schur);
    let minimal = poset.minimal();
    let predicted = minrib_prediction(lambda);
    let mut bad = Vec::new();
    let holds = minimal.len() == 1 && poset.classes[minimal[0]].members.contains(&predicted.to_skew());
    if !holds {
        let found: Vec<Vec<String>> = minimal.iter().map(|&i| names(&poset.classes[i].members)).collect();
        bad.push(json!({"lambda": lambda, "predicted": predicted.rows(), "minimal": found}));
    }
    Ok(Report::new("minrib", lambda.size(), bad))
}

/// Every support element lies in `[rows(A), cols(A)^t]` and both endpoints
/// occur with coefficient 1, for all skew shapes with `n` boxes.
pub fn verify_lemma_extreme(n: usize, memo: &ExpansionMemo) -> Report {
    let bad: Vec<serde_json::Value> = skew_shapes(n)
        .par_iter()
        .filter_map(|shape| {
            let e = memo.expand(shape);
            let lo = shape.rows_of();
            let hi = shape.cols_of().transpose();
            let outside: Vec<Partition> = e
                .support()
                .into_iter()
                .filter(|p| !(dominance_leq(&lo, p).unwrap() && dominance_leq(p, &hi).unwrap()))
                .collect();
            let ok = outside.is_empty() && e.coefficient(&lo) == 1 && e.coefficient(&hi) == 1;
            (!ok).then(|| {
                json!({
                    "shape": shape,
                    "outside": outside,
                    "rows_coeff": e.coefficient(&lo),
                    "cols_coeff": e.coefficient(&hi),
                })
            })
        })
        .collect();
    Report::new("extreme", n, bad)
}
