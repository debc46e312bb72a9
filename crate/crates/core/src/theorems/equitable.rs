use std::collections::BTreeSet;

use serde::Serialize;

use crate::expansion::support_of;
use crate::shapes::{dominance_leq, partitions, Composition, Partition, Ribbon, SkewShape};

/// Row lengths of an equitable ribbon are `a` or `a + 1`, column lengths `b`
/// or `b + 1`, and both `a` and `b` occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquitableProfile {
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub n: usize,
}

impl EquitableProfile {
    /// `None` when the ribbon is not equitable.
    pub fn of(ribbon: &Ribbon) -> Option<Self> {
        let rows = ribbon.rows().parts();
        let cols = ribbon.column_lengths();
        let spread = |xs: &[usize]| {
            let lo = *xs.iter().min().unwrap();
            (xs.iter().max().unwrap() - lo <= 1).then_some(lo)
        };
        Some(EquitableProfile {
            a: spread(rows)?,
            b: spread(&cols)?,
            l: rows.len(),
            n: ribbon.size(),
        })
    }
}

/// Row lengths pairwise differ by at most one, and so do column lengths.
pub fn is_equitable(ribbon: &Ribbon) -> bool {
    EquitableProfile::of(ribbon).is_some()
}

/// All equitable ribbons with `n` boxes and `l` rows, in reverse-lex order of
/// their row compositions.
pub fn enumerate_equitable(n: usize, l: usize) -> Vec<Ribbon> {
    if l == 0 || l > n {
        return Vec::new();
    }
    // Rows take the values a and a + 1 with a = n / l; exactly n % l of them are long.
    let a = n / l;
    let long = n % l;
    let mut out = Vec::new();
    let mut rows = vec![a; l];
    choose_long_rows(&mut rows, 0, long, &mut out);
    out.sort_by(|x: &Ribbon, y| y.rows().parts().cmp(x.rows().parts()));
    out
}

fn choose_long_rows(rows: &mut Vec<usize>, from: usize, left: usize, out: &mut Vec<Ribbon>) {
    if left == 0 {
        let ribbon = Ribbon::new(Composition::from_parts_unchecked(rows.clone()));
        if is_equitable(&ribbon) {
            out.push(ribbon);
        }
        return;
    }
    for i in from..=rows.len() - left {
        rows[i] += 1;
        choose_long_rows(rows, i + 1, left - 1, out);
        rows[i] -= 1;
    }
}

/// Partitions of `n` fitting in an `l × (n - l + 1)` box.
pub fn predicted_support(n: usize, l: usize) -> BTreeSet<Partition> {
    if l == 0 || l > n {
        return BTreeSet::new();
    }
    partitions(n)
        .into_iter()
        .filter(|p| p.len() <= l && p.width() <= n - l + 1)
        .collect()
}

/// `{λ : lo ⊴ λ ⊴ hi}`; empty when the sizes differ.
pub fn dominance_interval(lo: &Partition, hi: &Partition) -> BTreeSet<Partition> {
    if lo.size() != hi.size() {
        return BTreeSet::new();
    }
    partitions(lo.size())
        .into_iter()
        .filter(|p| dominance_leq(lo, p).unwrap() && dominance_leq(p, hi).unwrap())
        .collect()
}

/// The support is the whole dominance interval `[rows(A), cols(A)^t]`.
pub fn has_full_support(shape: &SkewShape) -> bool {
    support_of(shape) == dominance_interval(&shape.rows_of(), &shape.cols_of().transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rib(s: &str) -> Ribbon {
        Ribbon::new(s.parse().unwrap())
    }

    #[test]
    fn equitability() {
        assert!(is_equitable(&rib("233")));
        assert!(!is_equitable(&rib("422")));
        assert!(is_equitable(&rib("7")));
        // Rows 2,2 are fine but the columns are 1,2,1.
        assert!(is_equitable(&rib("22")));
        // Rows 3,1,3 differ by two.
        assert!(!is_equitable(&rib("313")));
        assert_eq!(
            EquitableProfile::of(&rib("233")),
            Some(EquitableProfile { a: 2, b: 1, l: 3, n: 8 })
        );
    }

    #[test]
    fn equitable_ribbons_of_eight_with_three_rows() {
        let got: Vec<String> = enumerate_equitable(8, 3).iter().map(|r| r.rows().to_string()).collect();
        assert_eq!(got, ["332", "323", "233"]);
        assert_eq!(enumerate_equitable(6, 1), vec![rib("6")]);
    }

    #[test]
    fn staircases_of_five() {
        let got: Vec<String> = enumerate_equitable(5, 3).iter().map(|r| r.rows().to_string()).collect();
        // 212 has a column of length 3.
        assert_eq!(got, ["221", "122"]);
    }

    #[test]
    fn predicted_support_examples() {
        let got: Vec<String> = predicted_support(8, 3).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["62", "611", "53", "521", "44", "431", "422", "332"]);
        assert_eq!(
            predicted_support(5, 1).into_iter().collect::<Vec<_>>(),
            vec![Partition::row(5)]
        );
        assert_eq!(
            predicted_support(5, 5).into_iter().collect::<Vec<_>>(),
            vec![Partition::column(5)]
        );
    }

    #[test]
    fn full_support_examples() {
        for s in ["442", "424", "242"] {
            assert!(has_full_support(&rib(s).to_skew()), "{s}");
        }
        assert!(!has_full_support(&rib("422").to_skew()));
    }
}
