use std::collections::BTreeSet;

use rayon::prelude::*;

use schurkit::expansion::lr_expand;
use schurkit::shapes::{partitions, ribbons};
use schurkit::tableaux::{enumerate_syt_with_descents, Filling};
use schurkit::theorems::*;
use schurkit::{Composition, ExpansionMemo, Partition, Ribbon};

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

/// All (α, λ) with rib(α) equitable and λ in its bounding box, by brute force
/// over compositions rather than through `enumerate_equitable`.
fn admissible_pairs(n: usize) -> Vec<(Composition, Partition)> {
    let mut out = Vec::new();
    for r in ribbons(n) {
        let rows = r.rows().parts();
        let cols = r.column_lengths();
        let spread = |xs: &[usize]| xs.iter().max().unwrap() - xs.iter().min().unwrap();
        if spread(rows) > 1 || spread(&cols) > 1 {
            continue;
        }
        let l = rows.len();
        for lam in partitions(n) {
            if lam.len() <= l && lam.width() <= n + 1 - l {
                out.push((r.rows().clone(), lam));
            }
        }
    }
    out
}

#[test]
fn witness_for_every_admissible_pair() {
    for n in 1..=9 {
        let pairs = admissible_pairs(n);
        pairs.par_iter().for_each(|(alpha, lam)| {
            let t = construct_witness_syt(alpha, lam).unwrap_or_else(|e| panic!("{alpha} {lam}: {e}"));
            assert!(t.is_standard());
            assert_eq!(t.shape().outer(), lam);
            assert!(t.shape().is_straight());
            assert_eq!(t.descent_set().unwrap(), alpha.descent_set(), "{alpha} {lam}");
        });
    }
}

#[test]
fn witness_is_among_the_enumerated_tableaux() {
    for n in 1..=8 {
        admissible_pairs(n).par_iter().for_each(|(alpha, lam)| {
            let all = enumerate_syt_with_descents(lam, &alpha.descent_set()).unwrap();
            let t = construct_witness_syt(alpha, lam).unwrap();
            assert!(all.contains(&t), "{alpha} {lam}");
        });
    }
}

#[test]
fn equitable_enumeration_matches_brute_force() {
    for n in 1..=10 {
        for l in 1..=n {
            let fast: BTreeSet<Ribbon> = enumerate_equitable(n, l).into_iter().collect();
            let slow: BTreeSet<Ribbon> = ribbons(n)
                .into_iter()
                .filter(|r| r.num_rows() == l && is_equitable(r))
                .collect();
            assert_eq!(fast, slow, "n = {n}, l = {l}");
        }
    }
}

#[test]
fn equitable_supports_fill_the_box() {
    let memo = ExpansionMemo::new();
    for n in 1..=10 {
        let report = verify_support_prediction(n, &memo);
        assert!(report.pass, "{report:?}");
    }
}

#[test]
fn equitable_ribbons_have_full_support() {
    for n in 1..=8 {
        for l in 1..=n {
            for r in enumerate_equitable(n, l) {
                assert!(has_full_support(&r.to_skew()), "{r}");
            }
        }
    }
}

#[test]
fn worked_example_non_rectangle() {
    let inner = Filling::straight(vec![
        vec![1, 2, 3, 6, 8, 9, 11, 12],
        vec![4, 5, 7, 10],
        vec![13, 14, 15],
    ])
    .unwrap();
    let step = extend_witness(&comp("333333"), &part("10,4,4"), &inner).unwrap();
    assert_eq!(
        step.filled.rows(),
        &[
            vec![1, 2, 3, 6, 8, 9, 11, 12, 17, 18],
            vec![4, 5, 7, 10],
            vec![13, 14, 15, 16]
        ]
    );
    assert_eq!(step.correction, Correction::NonRectangle(vec![17, 16, 15]));
    assert_eq!(
        step.result.rows(),
        &[
            vec![1, 2, 3, 6, 8, 9, 11, 12, 15, 18],
            vec![4, 5, 7, 10],
            vec![13, 14, 16, 17]
        ]
    );
    assert_eq!(step.result.descent_set().unwrap().positions(), &[3, 6, 9, 12, 15]);
}

#[test]
fn worked_example_rectangle() {
    let inner = Filling::straight(vec![vec![1, 2, 3, 5, 6, 8, 9, 11, 12], vec![4, 7, 10, 13, 14, 15]]).unwrap();
    let step = extend_witness(&comp("333333"), &part("99"), &inner).unwrap();
    assert_eq!(step.filled.rows()[1], vec![4, 7, 10, 13, 14, 15, 16, 17, 18]);
    assert_eq!(step.correction, Correction::Rectangle(vec![13, 14, 15, 12, 11]));
    assert_eq!(
        step.result.rows(),
        &[
            vec![1, 2, 3, 5, 6, 8, 9, 12, 15],
            vec![4, 7, 10, 11, 13, 14, 16, 17, 18]
        ]
    );
    assert_eq!(step.result.descent_set().unwrap().positions(), &[3, 6, 9, 12, 15]);
}

#[test]
fn step_rejects_bad_inner_tableaux() {
    let wrong_shape = Filling::straight(vec![vec![1, 2, 3], vec![4]]).unwrap();
    assert!(extend_witness(&comp("333333"), &part("99"), &wrong_shape).is_err());
    // Right shape, but 1,2,…,9 along the top row has no descent at 3.
    let wrong_descents =
        Filling::straight(vec![vec![1, 2, 3, 4, 5, 6, 7, 8, 9], vec![10, 11, 12, 13, 14, 15]]).unwrap();
    assert!(extend_witness(&comp("333333"), &part("99"), &wrong_descents).is_err());
    // rib(111) has longer columns than rows.
    let one = Filling::straight(vec![vec![1], vec![2]]).unwrap();
    assert!(extend_witness(&comp("111"), &part("111"), &one).is_err());
}

#[test]
fn trace_records_the_normalization() {
    let t = witness_trace(&comp("1111"), &part("1111")).unwrap();
    assert!(t.complemented);
    let t = witness_trace(&comp("221"), &part("32")).unwrap();
    assert!(t.complemented);
    assert_eq!(t.inner.as_ref().unwrap().alpha, comp("122"));
    let t = witness_trace(&comp("122"), &part("32")).unwrap();
    assert!(!t.complemented);
    assert!(t.step.is_some());
}

#[test]
fn diagonal_ribbon_is_equitable() {
    for n in 1..=40 {
        for l in 1..=n {
            let r = conjectured_max_ribbon(n, l).unwrap();
            assert_eq!(r.size(), n);
            assert_eq!(r.num_rows(), l);
            assert!(is_equitable(&r), "{r}");
        }
    }
}

#[test]
fn diagonal_ribbon_of_transposed_grid() {
    // The grid for (n, n - l + 1) is the transpose of the one for (n, l).
    for n in 1..=20 {
        for l in 1..=n {
            let r = conjectured_max_ribbon(n, l).unwrap();
            let t = conjectured_max_ribbon(n, n + 1 - l).unwrap();
            let expected: BTreeSet<Ribbon> = [r.transpose(), r.transpose().rotate180()].into();
            assert!(expected.contains(&t), "{r} {t}");
        }
    }
}

#[test]
fn boundary_words() {
    for n in 1..=9 {
        for r in ribbons(n) {
            let w = boundary_word(&r);
            assert_eq!(w.len(), n + 1);
            assert_eq!(w.matches('h').count(), r.num_cols());
            assert_eq!(w.matches('v').count(), r.num_rows());
            let upper_reversed: String = upper_boundary_word(&r).chars().rev().collect();
            assert_eq!(boundary_word(&r.rotate180()), upper_reversed, "{r}");
        }
    }
    assert_eq!(boundary_word(&Ribbon::new(comp("5"))), "hhhhhv");
    assert_eq!(boundary_word(&Ribbon::new(comp("1111"))), "hvvvv");
}

#[test]
fn theorem_and_conjectures_through_seven() {
    let memo = ExpansionMemo::new();
    for n in 1..=7 {
        let main = verify_theorem_main(n, &memo);
        assert!(main.pass, "{main:?}");
        let max = verify_conjecture_max(n, &memo);
        assert!(max.pass, "{max:?}");
    }
}

#[test]
fn minimal_ribbon_conjecture_through_eight() {
    let memo = ExpansionMemo::new();
    for n in 1..=8 {
        for lam in partitions(n) {
            let r = verify_conjecture_minrib(&lam, &memo).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
    assert_eq!(minrib_prediction(&part("222")).rows().to_string(), "222");
    assert_eq!(minrib_prediction(&part("322")).rows().to_string(), "322");
    assert_eq!(minrib_prediction(&part("332")).rows().to_string(), "323");
}

#[test]
fn extreme_coefficients_report() {
    let memo = ExpansionMemo::new();
    for n in 1..=7 {
        assert!(verify_lemma_extreme(n, &memo).pass);
    }
    let e = lr_expand(&"443/2".parse().unwrap());
    assert_eq!(e.coefficient(&part("432")), 1);
    assert_eq!(e.coefficient(&part("441")), 1);
}

#[test]
fn full_support_classification() {
    for s in ["442", "424", "242"] {
        assert!(has_full_support(&Ribbon::new(comp(s)).to_skew()), "{s}");
    }
    assert!(!has_full_support(&Ribbon::new(comp("422")).to_skew()));
    assert!(has_full_support(&"431".parse().unwrap()));
}
