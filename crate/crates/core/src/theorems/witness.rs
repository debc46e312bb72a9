//! A standard tableau of shape λ with descent set S(α) for every λ in the
//! support of an equitable ribbon rib(α), built one row of α at a time.
//!
//! Each step removes a horizontal strip λ/μ of size α_l from λ, fills μ with
//! a witness for (α_1, …, α_{l-1}), puts N_{l-1}+1, …, N into the strip from
//! left to right, and then permutes a few entries along a cycle if N_{l-1}
//! did not come out as a descent.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{Composition, DescentSet, Partition, Ribbon};
use crate::tableaux::Filling;

use super::equitable::EquitableProfile;

/// The data of one extension step, for an already normalized α.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessContext {
    pub alpha: Composition,
    pub lambda: Partition,
    /// N_1 < … < N_{l-1}.
    pub descents: Vec<usize>,
    pub mu: Partition,
    /// Cells of λ/μ from left to right, as (row, column), zero based.
    pub strip: Vec<(usize, usize)>,
    /// Boxes of λ in row l.
    pub r: usize,
    /// Boxes of row 1 beyond the widest column μ may use.
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "cycle", rename_all = "snake_case")]
pub enum Correction {
    /// N_{l-1} was already a descent.
    None,
    NonRectangle(Vec<usize>),
    Rectangle(Vec<usize>),
}

impl Correction {
    pub fn cycle(&self) -> &[usize] {
        match self {
            Correction::None => &[],
            Correction::NonRectangle(c) | Correction::Rectangle(c) => c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessStep {
    pub context: WitnessContext,
    /// μ filled with the inner witness, the strip with N_{l-1}+1, …, N.
    pub filled: Filling,
    pub correction: Correction,
    pub result: Filling,
}

/// How a witness was obtained. When `complemented` is set the problem was
/// solved for the complementary composition and λ^t, and `tableau` is the
/// transpose of that solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessTrace {
    pub alpha: Composition,
    pub lambda: Partition,
    pub complemented: bool,
    pub step: Option<WitnessStep>,
    pub inner: Option<Box<WitnessTrace>>,
    pub tableau: Filling,
}

/// An SYT of shape `lambda` whose descent set is `S(alpha)`.
///
/// Requires rib(α) to be equitable, `|λ| = |α|`, `ℓ(λ) ≤ ℓ(α)` and
/// `λ_1 ≤ |α| - ℓ(α) + 1`.
pub fn construct_witness_syt(alpha: &Composition, lambda: &Partition) -> Result<Filling> {
    witness_trace(alpha, lambda).map(|t| t.tableau)
}

/// [`construct_witness_syt`] together with every intermediate step.
pub fn witness_trace(alpha: &Composition, lambda: &Partition) -> Result<WitnessTrace> {
    check_preconditions(alpha, lambda)?;
    let trace = solve(alpha, lambda)?;
    let t = &trace.tableau;
    if !t.is_standard() || t.shape().outer() != lambda || t.descent_set()? != alpha.descent_set() {
        return Err(Error::WitnessInternal(format!(
            "result for {alpha} and {lambda} fails the final check:\n{t}"
        )));
    }
    Ok(trace)
}

fn check_preconditions(alpha: &Composition, lambda: &Partition) -> Result<()> {
    let n = alpha.size();
    let l = alpha.len();
    if EquitableProfile::of(&Ribbon::new(alpha.clone())).is_none() {
        return Err(Error::WitnessPrecondition(format!("rib({alpha}) is not equitable")));
    }
    if lambda.size() != n {
        return Err(Error::WitnessPrecondition(format!(
            "|{lambda}| = {} but |{alpha}| = {n}",
            lambda.size()
        )));
    }
    if lambda.len() > l {
        return Err(Error::WitnessPrecondition(format!(
            "{lambda} has {} rows, more than {l}",
            lambda.len()
        )));
    }
    if lambda.width() > n - l + 1 {
        return Err(Error::WitnessPrecondition(format!(
            "{lambda} has {} columns, more than {}",
            lambda.width(),
            n - l + 1
        )));
    }
    Ok(())
}

/// Normalizes so that a ≥ b and only the top row may have length 1, then
/// runs the step recursion.
fn solve(alpha: &Composition, lambda: &Partition) -> Result<WitnessTrace> {
    if needs_complement(alpha) {
        // Transposing an SYT complements its descent set.
        let inner = solve(&alpha.complement(), &lambda.transpose())?;
        return Ok(WitnessTrace {
            alpha: alpha.clone(),
            lambda: lambda.clone(),
            complemented: true,
            step: None,
            tableau: inner.tableau.transpose(),
            inner: Some(Box::new(inner)),
        });
    }
    if alpha.len() == 1 {
        let tableau = Filling::straight(vec![(1..=alpha.size()).collect()])?;
        return Ok(WitnessTrace {
            alpha: alpha.clone(),
            lambda: lambda.clone(),
            complemented: false,
            step: None,
            inner: None,
            tableau,
        });
    }
    let context = choose_strip(alpha, lambda)?;
    let head = Composition::from_parts_unchecked(alpha.parts()[..alpha.len() - 1].to_vec());
    let inner = solve(&head, &context.mu)?;
    let step = extend_with_context(context, &inner.tableau)?;
    Ok(WitnessTrace {
        alpha: alpha.clone(),
        lambda: lambda.clone(),
        complemented: false,
        tableau: step.result.clone(),
        step: Some(step),
        inner: Some(Box::new(inner)),
    })
}

/// Whether rib(α) has shorter rows than columns, or a row of length 1 other
/// than the top one. Either way the complementary composition does not.
fn needs_complement(alpha: &Composition) -> bool {
    let Some(profile) = EquitableProfile::of(&Ribbon::new(alpha.clone())) else {
        return false;
    };
    let last = *alpha.parts().last().unwrap();
    alpha.len() > 1 && (profile.a < profile.b || (profile.a == 1 && last == 1))
}

/// Picks the horizontal strip λ/μ for a normalized α with at least two rows.
///
/// Forced boxes: the `c` boxes of row 1 past the allowed width, the `r` boxes
/// of row l, one box of the bottom row and, when `r = 0`, the bottom box of
/// the rightmost column. Any remaining boxes are taken from the highest rows
/// that can give one.
pub fn choose_strip(alpha: &Composition, lambda: &Partition) -> Result<WitnessContext> {
    let parts = alpha.parts();
    let l = parts.len();
    if l < 2 {
        return Err(Error::InvalidArgument("a strip step needs at least two rows".into()));
    }
    let n = alpha.size();
    let last = parts[l - 1];
    let width = n - last + 2 - l;
    let r = lambda.part(l - 1);
    let c = lambda.width().saturating_sub(width);
    let rows = lambda.len();
    let cap: Vec<usize> = (0..rows).map(|i| lambda.part(i) - lambda.part(i + 1)).collect();
    let mut take = vec![0usize; rows];
    if r > 0 {
        take[l - 1] = r;
    }
    take[0] = take[0].max(c);
    take[rows - 1] = take[rows - 1].max(1);
    if r == 0 {
        let t = (0..rows).rev().find(|&i| lambda.part(i) == lambda.width()).unwrap();
        take[t] = take[t].max(1);
    }
    if (0..rows).any(|i| take[i] > cap[i]) || take.iter().sum::<usize>() > last {
        return Err(Error::WitnessInternal(format!(
            "forced strip boxes {take:?} do not fit {lambda} with {last} boxes"
        )));
    }
    let mut extra = last - take.iter().sum::<usize>();
    for i in 0..rows {
        let add = extra.min(cap[i] - take[i]);
        take[i] += add;
        extra -= add;
    }
    if extra > 0 {
        return Err(Error::WitnessInternal(format!(
            "{lambda} has no horizontal strip of size {last}"
        )));
    }
    let mu = Partition::new((0..rows).map(|i| lambda.part(i) - take[i]).collect())?;
    if mu.len() > l - 1 || mu.width() > width {
        return Err(Error::WitnessInternal(format!(
            "inner shape {mu} exceeds {} rows or {width} columns",
            l - 1
        )));
    }
    let mut strip: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (mu.part(i)..lambda.part(i)).map(move |j| (i, j)))
        .collect();
    strip.sort_by_key(|&(i, j)| (j, i));
    let descents = alpha.descent_set().positions().to_vec();
    Ok(WitnessContext {
        alpha: alpha.clone(),
        lambda: lambda.clone(),
        descents,
        mu,
        strip,
        r,
        c,
    })
}

/// One extension step with a caller-supplied inner tableau.
///
/// `inner` must be an SYT of the shape μ chosen by [`choose_strip`] with
/// descent set `S(α_1, …, α_{l-1})`.
pub fn extend_witness(alpha: &Composition, lambda: &Partition, inner: &Filling) -> Result<WitnessStep> {
    check_preconditions(alpha, lambda)?;
    if needs_complement(alpha) {
        return Err(Error::InvalidArgument(format!(
            "rib({alpha}) must have rows at least as long as its columns and no short row below the top"
        )));
    }
    let context = choose_strip(alpha, lambda)?;
    if inner.shape().outer() != &context.mu || !inner.shape().is_straight() || !inner.is_standard() {
        return Err(Error::InvalidArgument(format!(
            "inner tableau must be an SYT of shape {}",
            context.mu
        )));
    }
    let mut expected = context.descents.clone();
    expected.pop();
    if inner.descent_set()? != DescentSet::new(expected) {
        return Err(Error::InvalidArgument("inner tableau has the wrong descent set".into()));
    }
    extend_with_context(context, inner)
}

fn extend_with_context(context: WitnessContext, inner: &Filling) -> Result<WitnessStep> {
    let lambda = &context.lambda;
    let n = context.alpha.size();
    let top = n - context.alpha.parts().last().unwrap();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&len| vec![0; len]).collect();
    for (i, row) in inner.rows().iter().enumerate() {
        grid[i][..row.len()].copy_from_slice(row);
    }
    for (k, &(i, j)) in context.strip.iter().enumerate() {
        grid[i][j] = top + 1 + k;
    }
    let filled = Filling::straight(grid.clone())?;
    let correction = correction_for(&context, &grid)?;
    let cycle = correction.cycle();
    if !cycle.is_empty() {
        let pos = positions(&grid, n);
        for (k, &t) in cycle.iter().enumerate() {
            let (i, j) = pos[cycle[(k + 1) % cycle.len()]];
            grid[i][j] = t;
        }
    }
    let result = Filling::straight(grid)?;
    Ok(WitnessStep {
        context,
        filled,
        correction,
        result,
    })
}

fn positions(grid: &[Vec<usize>], n: usize) -> Vec<(usize, usize)> {
    let mut pos = vec![(0, 0); n + 1];
    for (i, row) in grid.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            pos[v] = (i, j);
        }
    }
    pos
}

fn correction_for(context: &WitnessContext, grid: &[Vec<usize>]) -> Result<Correction> {
    let n = context.alpha.size();
    let d = &context.descents;
    let top = *d.last().unwrap();
    let pos = positions(grid, n);
    let row = |v: usize| pos[v].0;
    if row(top) < row(top + 1) {
        return Ok(Correction::None);
    }
    if row(n) < row(top + 1) {
        let first = (top + 2..=n).find(|&v| row(v) < row(top + 1)).unwrap();
        return Ok(Correction::NonRectangle((top..=first).rev().collect()));
    }
    if !context.lambda.is_rectangle() {
        return Err(Error::WitnessInternal(format!(
            "{} is not a rectangle but N sits in the bottom row",
            context.lambda
        )));
    }
    let bottom = grid.len() - 1;
    let earlier = &d[..d.len() - 1];
    let largest = (1..=n)
        .rev()
        .find(|&v| row(v) < bottom && !earlier.contains(&v))
        .ok_or_else(|| Error::WitnessInternal("no non-descent entry above the bottom row".into()))?;
    let j = earlier
        .iter()
        .position(|&nj| nj == largest + 1)
        .ok_or_else(|| Error::WitnessInternal(format!("{largest} is not one less than a descent")))?;
    let nj = earlier[j];
    let floor = if j == 0 { 0 } else { earlier[j - 1] };
    let mut low = nj - 1;
    while low - 1 > floor && row(low - 1) < bottom {
        low -= 1;
    }
    let skipped = &earlier[j + 1..];
    let mut cycle: Vec<usize> = (nj + 1..=top).filter(|v| !skipped.contains(v)).collect();
    cycle.extend(earlier[j..].iter().rev());
    cycle.extend((low..nj).rev());
    Ok(Correction::Rectangle(cycle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_row() {
        let t = construct_witness_syt(&comp("5"), &part("5")).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn strip_for_ten_four_four() {
        let ctx = choose_strip(&comp("333333"), &part("10,4,4")).unwrap();
        assert_eq!(ctx.mu, part("843"));
        assert_eq!(ctx.strip, vec![(2, 3), (0, 8), (0, 9)]);
        assert_eq!((ctx.r, ctx.c), (0, 0));
    }

    #[test]
    fn strip_for_nine_nine() {
        let ctx = choose_strip(&comp("333333"), &part("99")).unwrap();
        assert_eq!(ctx.mu, part("96"));
        assert_eq!(ctx.strip, vec![(1, 6), (1, 7), (1, 8)]);
    }

    #[test]
    fn preconditions_are_named() {
        let err = construct_witness_syt(&comp("422"), &part("8")).unwrap_err();
        assert!(err.to_string().contains("not equitable"));
        let err = construct_witness_syt(&comp("233"), &part("71")).unwrap_err();
        assert!(err.to_string().contains("columns"));
        let err = construct_witness_syt(&comp("233"), &part("5111")).unwrap_err();
        assert!(err.to_string().contains("rows"));
        let err = construct_witness_syt(&comp("233"), &part("7")).unwrap_err();
        assert!(matches!(err, Error::WitnessPrecondition(_)));
    }

    #[test]
    fn every_shape_for_two_three_three() {
        for p in crate::theorems::predicted_support(8, 3) {
            let t = construct_witness_syt(&comp("233"), &p).unwrap();
            assert_eq!(t.descent_set().unwrap().positions(), &[2, 5]);
        }
    }
}
