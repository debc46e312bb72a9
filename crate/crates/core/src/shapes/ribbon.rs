use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use super::skew::SkewShape;

/// A ribbon, recorded by its row lengths from top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ribbon {
    #[serde(rename = "ribbon")]
    rows: Composition,
}

impl Ribbon {
    pub fn new(rows: Composition) -> Self {
        Ribbon { rows }
    }

    /// Recovers the row composition of a skew shape that is a ribbon.
    pub fn from_skew(shape: &SkewShape) -> Option<Ribbon> {
        shape.is_ribbon().then(|| Ribbon {
            rows: Composition::from_parts_unchecked(shape.row_lengths()),
        })
    }

    pub fn rows(&self) -> &Composition {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.size()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Always `size - num_rows + 1`.
    pub fn num_cols(&self) -> usize {
        self.size() + 1 - self.num_rows()
    }

    /// The skew shape: bottom row starts in column 0, and each row above
    /// starts in the last column of the row below it.
    pub fn to_skew(&self) -> SkewShape {
        let parts = self.rows.parts();
        let mut intervals = vec![(0, 0); parts.len()];
        let mut start = 0;
        for (i, &len) in parts.iter().enumerate().rev() {
            intervals[i] = (start, start + len);
            start += len - 1;
        }
        SkewShape::from_intervals(&intervals)
    }

    /// Rotating a ribbon by 180 degrees reverses its rows.
    pub fn rotate180(&self) -> Ribbon {
        Ribbon {
            rows: self.rows.reversed(),
        }
    }

    /// Column lengths from left to right; these are the rows of the transpose.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.to_skew().column_lengths()
    }

    pub fn transpose(&self) -> Ribbon {
        Ribbon::from_skew(&self.to_skew().transpose()).expect("transpose of a ribbon is a ribbon")
    }
}

impl From<Composition> for Ribbon {
    fn from(rows: Composition) -> Self {
        Ribbon { rows }
    }
}

impl fmt::Display for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rib({})", self.rows)
    }
}

impl fmt::Debug for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
