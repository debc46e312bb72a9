use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{parse_parts, write_parts};
use crate::error::{Error, Result};

/// An ordered sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && !parts.contains(&0));
        Composition { parts }
    }

    /// The composition whose partial-sum set is `descents` inside `{1, …, n-1}`.
    pub fn from_descent_set(n: usize, descents: &DescentSet) -> Result<Self> {
        descents.check(n)?;
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents.positions() {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Composition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    /// `S(α)`: the proper partial sums `α₁, α₁+α₂, …, α₁+⋯+α_{l-1}`.
    pub fn descent_set(&self) -> DescentSet {
        let mut acc = 0;
        let positions = self.parts[..self.parts.len() - 1]
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect();
        DescentSet { positions }
    }

    /// The composition whose descent set is the complement of this one's.
    pub fn complement(&self) -> Composition {
        let n = self.size();
        let descents = self.descent_set().complement(n);
        Composition::from_descent_set(n, &descents).expect("complement is a valid descent set")
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Composition::new(parts).map_err(|_| Error::Parse {
            token: s.to_string(),
            reason: "composition parts must be positive".to_string(),
        })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

/// A strictly increasing set of positive integers, read as a subset of
/// `{1, …, n-1}` for some tableau or composition size `n`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DescentSet {
    positions: Vec<usize>,
}

impl DescentSet {
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        DescentSet { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Fails unless every position lies in `1..n`.
    pub fn check(&self, n: usize) -> Result<()> {
        if self.positions.iter().any(|&i| i == 0 || i >= n) {
            return Err(Error::InvalidDescentSet {
                n,
                positions: self.positions.clone(),
            });
        }
        Ok(())
    }

    pub fn complement(&self, n: usize) -> DescentSet {
        DescentSet {
            positions: (1..n).filter(|&i| !self.contains(i)).collect(),
        }
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.positions).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_set_of_composition() {
        let a: Composition = "213".parse().unwrap();
        assert_eq!(a.descent_set().positions(), &[2, 3]);
        let b: Composition = "333333".parse().unwrap();
        assert_eq!(b.descent_set().positions(), &[3, 6, 9, 12, 15]);
        let one: Composition = "5".parse().unwrap();
        assert!(one.descent_set().is_empty());
    }

    #[test]
    fn descent_set_round_trip() {
        let a: Composition = "2,5,2,2".parse().unwrap();
        let back = Composition::from_descent_set(a.size(), &a.descent_set()).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn complement_composition() {
        let a: Composition = "21".parse().unwrap();
        assert_eq!(a.complement(), "12".parse().unwrap());
        let b: Composition = "2221".parse().unwrap();
        assert_eq!(b.complement(), "1222".parse().unwrap());
        let c: Composition = "4".parse().unwrap();
        assert_eq!(c.complement(), "1111".parse().unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0]).is_err());
        assert!(DescentSet::new(vec![3]).check(3).is_err());
        assert!(DescentSet::new(vec![0]).check(3).is_err());
    }
}
