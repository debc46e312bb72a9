use crate::error::{Error, Result};
use crate::shapes::{Ribbon, SkewShape};

use super::equitable::is_equitable;

/// The ribbon cut out of an `l × (n - l + 1)` grid by the diagonal from the
/// bottom-left to the top-right corner: a box is kept when the diagonal
/// crosses its interior or passes through its top-left corner.
///
/// All tests are done in integer arithmetic on the scaled line `l·x = w·y`.
pub fn conjectured_max_ribbon(n: usize, l: usize) -> Result<Ribbon> {
    if l == 0 || l > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= l <= n, got n = {n}, l = {l}"
        )));
    }
    let w = n - l + 1;
    // y counts rows from the bottom; box (x, y) is [x, x+1] × [y, y+1].
    let keep = |x: usize, y: usize| {
        let crosses = l * x < w * (y + 1) && l * (x + 1) > w * y;
        let top_left_on_line = l * x == w * (y + 1);
        crosses || top_left_on_line
    };
    let mut intervals = Vec::with_capacity(l);
    for y in (0..l).rev() {
        let xs: Vec<usize> = (0..w).filter(|&x| keep(x, y)).collect();
        let (first, last) = (xs[0], *xs.last().unwrap());
        assert_eq!(
            last + 1 - first,
            xs.len(),
            "row {y} of the diagonal ribbon is not contiguous"
        );
        intervals.push((first, last + 1));
    }
    let shape = SkewShape::from_intervals(&intervals);
    let ribbon = Ribbon::from_skew(&shape).expect("diagonal cells form a ribbon");
    assert_eq!(ribbon.size(), n);
    assert_eq!(ribbon.num_rows(), l);
    assert!(is_equitable(&ribbon), "{ribbon} is not equitable");
    Ok(ribbon)
}

/// Lower-right border of the ribbon as a lattice path from its bottom-left
/// corner to its top-right corner: `h` for a unit step right, `v` for up.
///
/// The word is `h^{α_l} v h^{α_{l-1}-1} v … h^{α_1-1} v`, with `n - l + 1`
/// letters `h` and `l` letters `v`.
pub fn boundary_word(ribbon: &Ribbon) -> String {
    let mut word = String::with_capacity(ribbon.size() + 1);
    for (k, &len) in ribbon.rows().parts().iter().rev().enumerate() {
        let run = if k == 0 { len } else { len - 1 };
        word.extend(std::iter::repeat_n('h', run));
        word.push('v');
    }
    word
}

/// Upper-left border between the same corners:
/// `v h^{α_l-1} v h^{α_{l-1}-1} … v h^{α_1}`.
///
/// Rotation swaps the two borders, so the boundary word of the rotated ribbon
/// is this word reversed.
pub fn upper_boundary_word(ribbon: &Ribbon) -> String {
    let rows = ribbon.rows().parts();
    let mut word = String::with_capacity(ribbon.size() + 1);
    for (k, &len) in rows.iter().rev().enumerate() {
        let run = if k + 1 == rows.len() { len } else { len - 1 };
        word.push('v');
        word.extend(std::iter::repeat_n('h', run));
    }
    word
}
