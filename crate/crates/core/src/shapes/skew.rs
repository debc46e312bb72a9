use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A skew shape `outer/inner` kept in canonical form: no empty rows and no
/// empty columns.
///
/// Disconnected shapes therefore always have their components stacked
/// corner to corner. The derived `Ord` compares `(outer, inner)` with the
/// reverse-lexicographic order of [`Partition`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "RawSkew")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkew {
    outer: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkew) -> Result<Self> {
        SkewShape::new(Partition::new(raw.outer)?, Partition::new(raw.inner)?)
    }
}

impl SkewShape {
    /// Builds `outer/inner` and strips empty rows and columns.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        if outer.size() == inner.size() {
            return Err(Error::EmptyShape(format!("{outer}/{inner}")));
        }
        let rows: Vec<(usize, usize)> = (0..outer.len())
            .map(|i| (inner.part(i), outer.part(i)))
            .filter(|(s, e)| e > s)
            .collect();
        Ok(Self::from_intervals(&rows))
    }

    /// The straight shape `λ/∅`.
    pub fn straight(shape: &Partition) -> Result<Self> {
        SkewShape::new(shape.clone(), Partition::empty())
    }

    /// Builds a shape from nonempty row intervals `[start, end)` listed top to
    /// bottom, squeezing out empty columns. Rows must already be nonempty and
    /// have weakly decreasing endpoints.
    pub(crate) fn from_intervals(rows: &[(usize, usize)]) -> Self {
        debug_assert!(!rows.is_empty());
        debug_assert!(rows.iter().all(|(s, e)| s < e));
        debug_assert!(rows.windows(2).all(|w| w[0].0 >= w[1].0 && w[0].1 >= w[1].1));
        let width = rows[0].1;
        let mut occupied = vec![false; width];
        for &(s, e) in rows {
            occupied[s..e].iter_mut().for_each(|c| *c = true);
        }
        let mut rank = vec![0; width + 1];
        for j in 0..width {
            rank[j + 1] = rank[j] + usize::from(occupied[j]);
        }
        let outer = rows.iter().map(|&(s, e)| rank[s] + (e - s)).collect();
        let inner = rows.iter().map(|&(s, _)| rank[s]).collect();
        SkewShape {
            outer: Partition::from_parts_unchecked(outer),
            inner: Partition::new(inner).expect("row starts are weakly decreasing"),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.width()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Column interval `[start, end)` occupied by row `i`.
    pub fn row(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn row_intervals(&self) -> impl DoubleEndedIterator<Item = (usize, usize)> + ExactSizeIterator + '_ {
        (0..self.num_rows()).map(move |i| self.row(i))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        let (s, e) = self.row(i);
        i < self.num_rows() && s <= j && j < e
    }

    /// Cells `(row, column)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.row_intervals()
            .enumerate()
            .flat_map(|(i, (s, e))| (s..e).map(move |j| (i, j)))
    }

    /// Row lengths from top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.row_intervals().map(|(s, e)| e - s).collect()
    }

    /// Column lengths from left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        let mut cols = vec![0; self.num_cols()];
        for (s, e) in self.row_intervals() {
            cols[s..e].iter_mut().for_each(|c| *c += 1);
        }
        cols
    }

    /// `rows(A)`: the row lengths sorted into a partition.
    pub fn rows_of(&self) -> Partition {
        Partition::from_multiset(self.row_lengths())
    }

    /// `cols(A)`: the column lengths sorted into a partition.
    pub fn cols_of(&self) -> Partition {
        Partition::from_multiset(self.column_lengths())
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape::new(self.outer.transpose(), self.inner.transpose()).expect("transpose of a nonempty skew shape")
    }

    /// Antipodal (180 degree) rotation.
    pub fn rotate180(&self) -> SkewShape {
        let width = self.num_cols();
        let rows: Vec<_> = self
            .row_intervals()
            .rev()
            .map(|(s, e)| (width - e, width - s))
            .collect();
        SkewShape::from_intervals(&rows)
    }

    /// Number of columns shared by every row in each window of `k` adjacent
    /// rows, listed top to bottom. For `k = 1` these are the row lengths; for
    /// `k = 2` the adjacent-row overlaps.
    pub fn overlaps(&self, k: usize) -> Vec<usize> {
        assert!(k >= 1, "overlap window must be positive");
        let rows: Vec<_> = self.row_intervals().collect();
        if rows.len() < k {
            return Vec::new();
        }
        rows.windows(k)
            .map(|w| {
                let start = w.iter().map(|r| r.0).max().unwrap();
                let end = w.iter().map(|r| r.1).min().unwrap();
                end.saturating_sub(start)
            })
            .collect()
    }

    /// The `k`-row overlap multiset, sorted weakly decreasing. Zeros are kept,
    /// so for `k = 2` the number of zeros is one less than the number of
    /// connected components.
    pub fn overlap_partition(&self, k: usize) -> Vec<usize> {
        let mut v = self.overlaps(k);
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn components(&self) -> usize {
        1 + self.overlaps(2).iter().filter(|&&o| o == 0).count()
    }

    pub fn is_connected(&self) -> bool {
        self.overlaps(2).iter().all(|&o| o > 0)
    }

    /// Connected with every pair of adjacent rows sharing exactly one column.
    pub fn is_ribbon(&self) -> bool {
        self.overlaps(2).iter().all(|&o| o == 1)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Parses `outer/inner` or a bare `outer`, e.g. `3321/211`, `10,4,4/2`.
    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        let outer: Partition = outer.parse().map_err(|_| Error::Parse {
            token: s.to_string(),
            reason: "bad outer partition".to_string(),
        })?;
        let inner: Partition = inner.parse().map_err(|_| Error::Parse {
            token: s.to_string(),
            reason: "bad inner partition".to_string(),
        })?;
        SkewShape::new(outer, inner).map_err(|e| Error::Parse {
            token: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SkewShape", 2)?;
        st.serialize_field("outer", &self.outer)?;
        st.serialize_field("inner", &self.inner)?;
        st.end()
    }
}
