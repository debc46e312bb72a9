//! Fillings of skew shapes, lattice words, Littlewood–Richardson fillings and
//! standard Young tableaux with a prescribed descent set.

use std::collections::HashMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{DescentSet, Partition, SkewShape};

/// Positive integers placed in the boxes of a skew shape.
///
/// `rows[i]` holds the entries of row `i` from left to right, covering the
/// columns `inner[i]..outer[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Filling {
    /// Checks row lengths and positivity only; use [`Filling::is_semistandard`]
    /// or [`Filling::is_standard`] for the tableau conditions.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::InvalidFilling(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let (s, e) = shape.row(i);
            if row.len() != e - s {
                return Err(Error::InvalidFilling(format!("row {i} should have {} entries", e - s)));
            }
            if row.contains(&0) {
                return Err(Error::InvalidFilling("entries must be positive".into()));
            }
        }
        Ok(Filling { shape, rows })
    }

    /// A filling of the straight shape `shape` given row by row.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Filling::new(SkewShape::straight(&shape)?, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        let (s, e) = self.shape.row(i);
        (i < self.rows.len() && s <= j && j < e).then(|| self.rows[i][j - s])
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        rows_ok
            && self
                .shape
                .cells()
                .all(|(i, j)| match (i.checked_sub(1)).and_then(|up| self.get(up, j)) {
                    Some(above) => above < self.get(i, j).unwrap(),
                    None => true,
                })
    }

    /// Semistandard with entries exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let mut seen = vec![false; self.size() + 1];
        for v in self.entries() {
            if v > self.size() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.is_semistandard()
    }

    /// `c(T)`: `content[k]` counts the entries equal to `k + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.entries().max().unwrap_or(0);
        let mut c = vec![0; max];
        for v in self.entries() {
            c[v - 1] += 1;
        }
        c
    }

    /// Rows read right to left, top row first.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// Row and column of every entry of a standard filling, indexed by value.
    pub fn positions(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let mut pos = vec![(0, 0); self.size() + 1];
        for (i, j) in self.shape.cells() {
            pos[self.get(i, j).unwrap()] = (i, j);
        }
        Ok(pos)
    }

    /// Entries `i` of a standard filling with `i + 1` in a strictly lower row.
    pub fn descent_set(&self) -> Result<DescentSet> {
        let pos = self.positions()?;
        Ok(DescentSet::new(
            (1..self.size()).filter(|&i| pos[i + 1].0 > pos[i].0).collect(),
        ))
    }

    /// Reflects the filling across the main diagonal.
    pub fn transpose(&self) -> Filling {
        let shape = self.shape.transpose();
        let mut rows: Vec<Vec<usize>> = shape.row_lengths().into_iter().map(|l| vec![0; l]).collect();
        // Transposing canonical shapes keeps coordinates: (i, j) -> (j, i).
        for (i, j) in self.shape.cells() {
            let (s, _) = shape.row(j);
            rows[j][i - s] = self.get(i, j).unwrap();
        }
        Filling { shape, rows }
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries().max().unwrap_or(0).to_string().len();
        for (i, row) in self.rows.iter().enumerate() {
            let (s, _) = self.shape.row(i);
            write!(f, "{}", " ".repeat((width + 1) * s))?;
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling({}, {:?})", self.shape, self.rows)
    }
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Option<usize>>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let (s, _) = self.shape.row(i);
                std::iter::repeat_n(None, s)
                    .chain(r.iter().copied().map(Some))
                    .collect()
            })
            .collect();
        let mut st = serializer.serialize_struct("Filling", 2)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            shape: SkewShape,
            rows: Vec<Vec<Option<usize>>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let rows = raw
            .rows
            .into_iter()
            .map(|r| r.into_iter().flatten().collect())
            .collect();
        Filling::new(raw.shape, rows).map_err(serde::de::Error::custom)
    }
}

/// At every prefix, each letter `i + 1` has appeared no more often than `i`.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// Backtracking over semistandard fillings with a lattice reverse reading
/// word. Boxes are filled in reading order (top row first, right to left), so
/// the right neighbour and the box above are always already placed and the
/// ballot condition is a prefix test.
struct LrSearch<'a> {
    cells: Vec<(usize, usize)>,
    shape: &'a SkewShape,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    bound: Option<&'a [usize]>,
}

impl<'a> LrSearch<'a> {
    fn new(shape: &'a SkewShape, bound: Option<&'a [usize]>) -> Self {
        let cells = shape
            .row_intervals()
            .enumerate()
            .flat_map(|(i, (s, e))| (s..e).rev().map(move |j| (i, j)))
            .collect();
        let grid = shape.row_lengths().into_iter().map(|l| vec![0; l]).collect();
        LrSearch {
            cells,
            shape,
            grid,
            counts: vec![0; shape.num_rows() + 1],
            bound,
        }
    }

    fn at(&self, i: usize, j: usize) -> usize {
        self.grid[i][j - self.shape.row(i).0]
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<usize>], &[usize])) {
        if k == self.cells.len() {
            let used = self.counts.iter().take_while(|&&c| c > 0).count();
            visit(&self.grid, &self.counts[..used]);
            return;
        }
        let (i, j) = self.cells[k];
        let (s, e) = self.shape.row(i);
        let lo = if i > 0 && self.shape.contains_cell(i - 1, j) {
            self.at(i - 1, j) + 1
        } else {
            1
        };
        // Lattice words never skip a letter, and a column forces at most i+1.
        let distinct = self.counts.iter().take_while(|&&c| c > 0).count();
        let mut hi = (distinct + 1).min(i + 1);
        if j + 1 < e {
            hi = hi.min(self.at(i, j + 1));
        }
        for v in lo..=hi {
            if v > 1 && self.counts[v - 1] >= self.counts[v - 2] {
                continue;
            }
            if let Some(b) = self.bound {
                if self.counts[v - 1] >= b.get(v - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            self.counts[v - 1] += 1;
            self.grid[i][j - s] = v;
            self.run(k + 1, visit);
            self.counts[v - 1] -= 1;
        }
        self.grid[i][j - s] = 0;
    }
}

/// All LR fillings of `shape`, in lexicographic order of their row-major
/// entry sequence.
pub fn enumerate_lr_fillings(shape: &SkewShape) -> Vec<Filling> {
    let mut out = Vec::new();
    LrSearch::new(shape, None).run(0, &mut |grid, _| {
        out.push(Filling {
            shape: shape.clone(),
            rows: grid.to_vec(),
        });
    });
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out
}

/// Number of LR fillings of `shape` for each content, keyed by content.
pub(crate) fn lr_counts(shape: &SkewShape) -> HashMap<Vec<usize>, u64> {
    let mut out: HashMap<Vec<usize>, u64> = HashMap::new();
    LrSearch::new(shape, None).run(0, &mut |_, content| {
        *out.entry(content.to_vec()).or_insert(0) += 1;
    });
    out
}

/// Number of LR fillings of `shape` with content exactly `content`.
pub(crate) fn lr_count_with_content(shape: &SkewShape, content: &Partition) -> u64 {
    let mut n = 0;
    LrSearch::new(shape, Some(content.parts())).run(0, &mut |_, c| {
        if c == content.parts() {
            n += 1;
        }
    });
    n
}

/// Places `1, 2, …, n` one at a time into addable corners of the straight
/// shape, deciding the descent status of `v - 1` as soon as `v` lands.
struct SytSearch<'a> {
    shape: &'a Partition,
    descents: &'a DescentSet,
    filled: Vec<usize>,
    row_of: Vec<usize>,
    grid: Vec<Vec<usize>>,
}

impl<'a> SytSearch<'a> {
    fn run(&mut self, v: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        let n = self.shape.size();
        if v > n {
            visit(&self.grid);
            return;
        }
        for r in 0..self.shape.len() {
            let c = self.filled[r];
            if c == self.shape.part(r) || (r > 0 && self.filled[r - 1] <= c) {
                continue;
            }
            if v > 1 {
                let prev = self.row_of[v - 1];
                let is_descent = r > prev;
                if is_descent != self.descents.contains(v - 1) {
                    continue;
                }
            }
            self.filled[r] += 1;
            self.row_of[v] = r;
            self.grid[r][c] = v;
            self.run(v + 1, visit);
            self.filled[r] -= 1;
        }
    }
}

fn syt_search(shape: &Partition, descents: &DescentSet, visit: &mut dyn FnMut(&[Vec<usize>])) -> Result<()> {
    descents.check(shape.size().max(1))?;
    let mut search = SytSearch {
        shape,
        descents,
        filled: vec![0; shape.len()],
        row_of: vec![0; shape.size() + 1],
        grid: shape.parts().iter().map(|&l| vec![0; l]).collect(),
    };
    search.run(1, visit);
    Ok(())
}

/// All standard Young tableaux of straight shape `shape` whose descent set is
/// exactly `descents`, in lexicographic row-major order.
pub fn enumerate_syt_with_descents(shape: &Partition, descents: &DescentSet) -> Result<Vec<Filling>> {
    let skew = SkewShape::straight(shape)?;
    let mut out = Vec::new();
    syt_search(shape, descents, &mut |grid| {
        out.push(Filling {
            shape: skew.clone(),
            rows: grid.to_vec(),
        });
    })?;
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(out)
}

/// `|enumerate_syt_with_descents(shape, descents)|` without materialising the
/// tableaux.
pub fn count_syt_with_descents(shape: &Partition, descents: &DescentSet) -> Result<u64> {
    let mut n = 0;
    syt_search(shape, descents, &mut |_| n += 1)?;
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn reading_word_of_sample_ssyt() {
        let t = Filling::new(sk("443/2"), vec![vec![1, 2], vec![1, 1, 2, 3], vec![5, 7, 7]]).unwrap();
        assert!(t.is_semistandard());
        assert_eq!(t.reverse_reading_word(), vec![2, 1, 3, 2, 1, 1, 7, 7, 5]);
        assert_eq!(t.content(), vec![3, 2, 1, 0, 1, 0, 2]);
        assert!(!is_lattice(&t.reverse_reading_word()));
    }

    #[test]
    fn trivial_reading_words() {
        let single = Filling::straight(vec![vec![1]]).unwrap();
        assert_eq!(single.reverse_reading_word(), vec![1]);
        let row = Filling::straight(vec![vec![1, 1, 2]]).unwrap();
        assert_eq!(row.reverse_reading_word(), vec![2, 1, 1]);
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice(&[1, 1, 2, 2, 1, 1, 3, 2, 2]));
        assert!(is_lattice(&[1, 1, 2, 2, 1, 1, 3, 3, 2]));
        assert!(!is_lattice(&[2, 1, 3, 2, 1, 1, 7, 7, 5]));
        assert!(is_lattice(&[]));
        assert!(!is_lattice(&[1, 2, 2]));
    }

    #[test]
    fn lr_fillings_of_443_over_2() {
        let fillings = enumerate_lr_fillings(&sk("443/2"));
        let mut words: Vec<Vec<usize>> = fillings.iter().map(|f| f.reverse_reading_word()).collect();
        words.sort();
        assert_eq!(
            words,
            vec![vec![1, 1, 2, 2, 1, 1, 3, 2, 2], vec![1, 1, 2, 2, 1, 1, 3, 3, 2]]
        );
        for f in &fillings {
            assert!(f.is_semistandard());
        }
    }

    #[test]
    fn lr_fillings_of_straight_shape_and_column() {
        let f = enumerate_lr_fillings(&sk("431"));
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].rows(), &[vec![1, 1, 1, 1], vec![2, 2, 2], vec![3]]);
        let col = enumerate_lr_fillings(&sk("1111"));
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].entries().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn descent_set_of_sample_syt() {
        let t = Filling::straight(vec![vec![1, 2, 3, 6], vec![4, 5, 7, 9], vec![8]]).unwrap();
        assert_eq!(t.descent_set().unwrap().positions(), &[3, 6, 7]);
        let row = Filling::straight(vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(row.descent_set().unwrap().is_empty());
        let col = Filling::straight(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(col.descent_set().unwrap().positions(), &[1, 2]);
    }

    #[test]
    fn descent_set_rejects_non_standard() {
        let t = Filling::straight(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.descent_set(), Err(Error::NotStandard));
    }

    #[test]
    fn syt_with_descents_small() {
        let found = enumerate_syt_with_descents(&p("21"), &DescentSet::new(vec![2])).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].rows(), &[vec![1, 2], vec![3]]);
        assert!(enumerate_syt_with_descents(&p("21"), &DescentSet::new(vec![1, 2]))
            .unwrap()
            .is_empty());
        assert_eq!(count_syt_with_descents(&p("5"), &DescentSet::default()).unwrap(), 1);
        assert!(enumerate_syt_with_descents(&p("21"), &DescentSet::new(vec![3])).is_err());
    }

    #[test]
    fn transpose_complements_descents() {
        let t = Filling::straight(vec![vec![1, 2, 3, 6], vec![4, 5, 7, 9], vec![8]]).unwrap();
        let tt = t.transpose();
        assert!(tt.is_standard());
        assert_eq!(tt.shape().outer(), &p("3222"));
        assert_eq!(tt.descent_set().unwrap(), t.descent_set().unwrap().complement(9));
        assert_eq!(tt.transpose(), t);
    }

    #[test]
    fn json_rows_have_nulls_for_inner_cells() {
        let t = Filling::new(sk("443/2"), vec![vec![1, 1], vec![1, 2, 2, 2], vec![2, 3, 3]]).unwrap();
        let js = serde_json::to_value(&t).unwrap();
        assert_eq!(js["rows"][0], serde_json::json!([null, null, 1, 1]));
        let back: Filling = serde_json::from_value(js).unwrap();
        assert_eq!(back, t);
    }
}
