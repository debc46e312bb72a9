//! Exhaustive enumerators. Every list comes back in the crate's fixed
//! reverse-lexicographic order.

use super::composition::Composition;
use super::partition::Partition;
use super::ribbon::Ribbon;
use super::skew::SkewShape;

/// All partitions of `n`, e.g. `4, 31, 22, 211, 1111`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `2^(n-1)` compositions of `n >= 1`, e.g. `3, 21, 12, 111`.
pub fn compositions(n: usize) -> Vec<Composition> {
    compositions_filtered(n, |_| true)
}

/// Compositions of `n` with exactly `len` parts.
pub fn compositions_with_len(n: usize, len: usize) -> Vec<Composition> {
    compositions_filtered(n, |c| c.len() == len)
}

fn compositions_filtered(n: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Composition> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            go(rest - p, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.into_iter()
        .filter(|c| keep(c))
        .map(Composition::from_parts_unchecked)
        .collect()
}

/// One ribbon per composition of `n`.
pub fn ribbons(n: usize) -> Vec<Ribbon> {
    compositions(n).into_iter().map(Ribbon::new).collect()
}

/// Every canonical skew shape with exactly `n` boxes, connected or not, each
/// once, sorted by `(outer, inner)`.
///
/// Rows are grown upward from the bottom row, which always starts in column
/// 0. A row placed above `[s, e)` must start in `s..=e` (no empty column can
/// open up between them) and end at or beyond `e`.
pub fn skew_shapes(n: usize) -> Vec<SkewShape> {
    fn go(rest: usize, below: (usize, usize), rows: &mut Vec<(usize, usize)>, out: &mut Vec<SkewShape>) {
        if rest == 0 {
            let top_down: Vec<_> = rows.iter().rev().copied().collect();
            out.push(SkewShape::from_intervals(&top_down));
            return;
        }
        let (s, e) = below;
        for start in s..=e {
            let min_len = (e - start).max(1);
            for len in min_len..=rest {
                rows.push((start, start + len));
                go(rest - len, (start, start + len), rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    for len in 1..=n {
        let mut rows = vec![(0, len)];
        go(n - len, (0, len), &mut rows, &mut out);
    }
    out.sort();
    out
}
