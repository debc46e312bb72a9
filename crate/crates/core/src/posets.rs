//! Equivalence classes of skew shapes under equal Schur expansion or equal
//! support, and the partial orders on them.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize};

use crate::expansion::{ExpansionMemo, SchurExpansion};
use crate::shapes::{skew_shapes, Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// `[B] ≤ [A]` when `s_A - s_B` is Schur-positive.
    Schur,
    /// `[B] ≤ [A]` when `supp(B) ⊆ supp(A)`.
    Support,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::Schur => "schur",
            Order::Support => "support",
        })
    }
}

impl std::str::FromStr for Order {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "schur" => Ok(Order::Schur),
            "support" => Ok(Order::Support),
            _ => Err(crate::Error::Parse {
                token: s.into(),
                reason: "expected schur or support".into(),
            }),
        }
    }
}

/// Skew shapes sharing one Schur expansion (or one support).
///
/// The structural fields are read off the first member; [`Self::is_uniform`]
/// checks that every member agrees.
#[derive(Clone, Debug)]
pub struct EquivalenceClass {
    pub members: Vec<SkewShape>,
    /// Expansion of the first member. For support classes other members may
    /// have different coefficients.
    pub expansion: Arc<SchurExpansion>,
    pub support: Arc<BTreeSet<Partition>>,
    pub connected: bool,
    pub rows: Partition,
    pub cols: Partition,
    pub components: usize,
    pub ribbon: bool,
}

impl EquivalenceClass {
    fn new(members: Vec<SkewShape>, expansion: Arc<SchurExpansion>) -> Self {
        let rep = &members[0];
        EquivalenceClass {
            support: Arc::new(expansion.support()),
            expansion,
            connected: rep.is_connected(),
            rows: rep.rows_of(),
            cols: rep.cols_of(),
            components: rep.components(),
            ribbon: rep.is_ribbon(),
            members,
        }
    }

    pub fn representative(&self) -> &SkewShape {
        &self.members[0]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// All members agree on rows, columns, component count and ribbon-ness.
    pub fn is_uniform(&self) -> bool {
        self.members.iter().all(|m| {
            m.rows_of() == self.rows
                && m.cols_of() == self.cols
                && m.components() == self.components
                && m.is_ribbon() == self.ribbon
                && m.is_connected() == self.connected
        })
    }

    /// `self ≤ other` in the given order.
    pub fn leq(&self, other: &EquivalenceClass, order: Order) -> bool {
        match order {
            Order::Schur => self.expansion.is_dominated_by(&other.expansion),
            Order::Support => {
                self.expansion.degree() == other.expansion.degree() && self.support.is_subset(&other.support)
            }
        }
    }
}

impl Serialize for EquivalenceClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(2))?;
        m.serialize_entry("members", &self.members)?;
        m.serialize_entry("connected", &self.connected)?;
        m.end()
    }
}

/// Partitions `shapes` into classes of equal expansion (or equal support).
/// Classes appear in order of their first member.
pub fn classes_of(shapes: &[SkewShape], order: Order, memo: &ExpansionMemo) -> Vec<EquivalenceClass> {
    let expansions: Vec<Arc<SchurExpansion>> = shapes.par_iter().map(|s| memo.expand(s)).collect();
    let mut groups: Vec<(Arc<SchurExpansion>, Vec<SkewShape>)> = Vec::new();
    match order {
        Order::Schur => {
            let mut index: HashMap<Arc<SchurExpansion>, usize> = HashMap::new();
            for (shape, e) in shapes.iter().zip(expansions) {
                let k = *index.entry(Arc::clone(&e)).or_insert_with(|| {
                    groups.push((e, Vec::new()));
                    groups.len() - 1
                });
                groups[k].1.push(shape.clone());
            }
        }
        Order::Support => {
            let mut index: HashMap<BTreeSet<Partition>, usize> = HashMap::new();
            for (shape, e) in shapes.iter().zip(expansions) {
                let k = *index.entry(e.support()).or_insert_with(|| {
                    groups.push((e, Vec::new()));
                    groups.len() - 1
                });
                groups[k].1.push(shape.clone());
            }
        }
    }
    groups
        .into_iter()
        .map(|(e, members)| EquivalenceClass::new(members, e))
        .collect()
}

/// Classes of all `n`-box skew shapes under equal Schur expansion.
pub fn schur_classes(n: usize, memo: &ExpansionMemo) -> Vec<EquivalenceClass> {
    classes_of(&skew_shapes(n), Order::Schur, memo)
}

/// Classes of all `n`-box skew shapes under equal support.
pub fn support_classes(n: usize, memo: &ExpansionMemo) -> Vec<EquivalenceClass> {
    classes_of(&skew_shapes(n), Order::Support, memo)
}

/// A finite poset of equivalence classes with its Hasse diagram.
#[derive(Clone, Debug)]
pub struct OrderedFamily {
    pub n: usize,
    pub order: Order,
    pub classes: Vec<EquivalenceClass>,
    /// `up[i]` has bit `j` set iff `classes[i] ≤ classes[j]`.
    up: Vec<FixedBitSet>,
    /// Cover pairs `(lower, upper)`, sorted.
    covers: Vec<(usize, usize)>,
}

/// Builds the poset on `classes`, comparing one representative per class.
pub fn build_poset(classes: Vec<EquivalenceClass>, order: Order) -> OrderedFamily {
    let m = classes.len();
    let up: Vec<FixedBitSet> = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(m);
            for j in 0..m {
                if i == j || classes[i].leq(&classes[j], order) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let n = classes.first().map_or(0, |c| c.representative().size());
    OrderedFamily::from_relation(n, order, classes, up)
}

/// The poset on all `n`-box skew shapes in the given order.
pub fn full_poset(n: usize, order: Order, memo: &ExpansionMemo) -> OrderedFamily {
    let classes = match order {
        Order::Schur => schur_classes(n, memo),
        Order::Support => support_classes(n, memo),
    };
    build_poset(classes, order)
}

impl OrderedFamily {
    fn from_relation(n: usize, order: Order, classes: Vec<EquivalenceClass>, up: Vec<FixedBitSet>) -> Self {
        let covers = transitive_reduction(&up);
        OrderedFamily {
            n,
            order,
            classes,
            up,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// All related pairs `(i, j)` with `classes[i] ≤ classes[j]`, including `i == j`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.up[i].ones().map(move |j| (i, j)))
            .collect()
    }

    /// Index of the class containing `shape`.
    pub fn class_of(&self, shape: &SkewShape) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(shape))
    }

    /// Induced subposet on the classes accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(&EquivalenceClass) -> bool) -> OrderedFamily {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(&self.classes[i])).collect();
        let up = kept
            .iter()
            .map(|&i| {
                let mut row = FixedBitSet::with_capacity(kept.len());
                for (b, &j) in kept.iter().enumerate() {
                    if self.leq(i, j) {
                        row.insert(b);
                    }
                }
                row
            })
            .collect();
        let classes = kept.iter().map(|&i| self.classes[i].clone()).collect();
        OrderedFamily::from_relation(self.n, self.order, classes, up)
    }

    pub fn connected_subposet(&self) -> OrderedFamily {
        self.restrict(|c| c.connected)
    }

    /// Indices of maximal elements.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].count_ones(..) == 1).collect()
    }

    /// Indices of minimal elements.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| (0..self.len()).all(|i| !self.lt(i, j)))
            .collect()
    }

    /// Indices (into this family) of classes maximal among the connected ones.
    pub fn maximal_connected(&self) -> Vec<usize> {
        let connected: Vec<usize> = (0..self.len()).filter(|&i| self.classes[i].connected).collect();
        connected
            .iter()
            .copied()
            .filter(|&i| connected.iter().all(|&j| !self.lt(i, j)))
            .collect()
    }

    /// For every comparable pair `x < y`, all maximal chains from `x` to `y`
    /// have the same length.
    pub fn is_graded(&self) -> bool {
        let order = self.linear_extension();
        let m = self.len();
        let mut children = vec![Vec::new(); m];
        for &(a, b) in &self.covers {
            children[a].push(b);
        }
        for &x in &order {
            let mut shortest = vec![usize::MAX; m];
            let mut longest = vec![0usize; m];
            shortest[x] = 0;
            for &v in order.iter().skip_while(|&&v| v != x) {
                if shortest[v] == usize::MAX {
                    continue;
                }
                for &w in &children[v] {
                    shortest[w] = shortest[w].min(shortest[v] + 1);
                    longest[w] = longest[w].max(longest[v] + 1);
                }
            }
            if (0..m).any(|y| shortest[y] != usize::MAX && shortest[y] != longest[y]) {
                return false;
            }
        }
        true
    }

    /// Every maximal chain of the whole poset has the same length.
    pub fn has_uniform_maximal_chains(&self) -> bool {
        let order = self.linear_extension();
        let m = self.len();
        let mut parents = vec![Vec::new(); m];
        for &(a, b) in &self.covers {
            parents[b].push(a);
        }
        let mut shortest = vec![0usize; m];
        let mut longest = vec![0usize; m];
        for &v in &order {
            if let Some(s) = parents[v].iter().map(|&p| shortest[p] + 1).min() {
                shortest[v] = s;
                longest[v] = parents[v].iter().map(|&p| longest[p] + 1).max().unwrap();
            }
        }
        let tops = self.maximal();
        let lengths: BTreeSet<usize> = tops.iter().flat_map(|&t| [shortest[t], longest[t]]).collect();
        lengths.len() <= 1
    }

    /// Every pair of elements has a least upper bound.
    pub fn is_join_semilattice(&self) -> bool {
        self.first_pair_without_join().is_none()
    }

    /// A pair of classes with no least upper bound, if any.
    pub fn first_pair_without_join(&self) -> Option<(usize, usize)> {
        let m = self.len();
        for i in 0..m {
            for j in (i + 1)..m {
                let mut common = self.up[i].clone();
                common.intersect_with(&self.up[j]);
                let has_least = common.ones().any(|k| common.is_subset(&self.up[k]));
                if !has_least {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn linear_extension(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(self.up[i].count_ones(..)));
        idx
    }

    /// Hasse diagram in DOT, bottom to top, one node per class labelled by its
    /// first member.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = match self.order {
            Order::Schur => "P",
            Order::Support => "Supp",
        };
        writeln!(out, "digraph {name}{} {{", self.n).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (i, c) in self.classes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\"];", c.representative()).unwrap();
        }
        for &(a, b) in &self.covers {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

impl Serialize for OrderedFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("OrderedFamily", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("classes", &self.classes)?;
        st.serialize_field("leq", &self.relation_pairs())?;
        st.serialize_field("covers", &self.covers)?;
        st.end()
    }
}

/// Cover pairs of a reflexive, transitive relation given as up-sets.
fn transitive_reduction(up: &[FixedBitSet]) -> Vec<(usize, usize)> {
    let m = up.len();
    let strict = |i: usize| {
        let mut s = up[i].clone();
        s.set(i, false);
        s
    };
    let mut covers: Vec<(usize, usize)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let above = strict(i);
            let mut reachable_in_two = FixedBitSet::with_capacity(m);
            for k in above.ones() {
                reachable_in_two.union_with(&strict(k));
            }
            let mut cover = above;
            cover.difference_with(&reachable_in_two);
            cover.ones().map(move |j| (i, j)).collect::<Vec<_>>()
        })
        .collect();
    covers.sort_unstable();
    covers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(n: usize, order: Order) -> OrderedFamily {
        full_poset(n, order, &ExpansionMemo::new())
    }

    #[test]
    fn singleton_family() {
        let f = family(1, Order::Schur);
        assert_eq!(f.len(), 1);
        assert!(f.covers().is_empty());
        assert_eq!(f.maximal_connected(), vec![0]);
        assert!(f.is_graded());
        assert!(f.is_join_semilattice());
        assert_eq!(
            f.to_dot(),
            "digraph P1 {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"1\"];\n}\n"
        );
    }

    #[test]
    fn covers_generate_the_relation() {
        let f = family(5, Order::Schur);
        let m = f.len();
        // Transitive closure of the covers, by repeated squaring.
        let mut reach = vec![FixedBitSet::with_capacity(m); m];
        for (i, r) in reach.iter_mut().enumerate() {
            r.insert(i);
        }
        for &(a, b) in f.covers() {
            reach[a].insert(b);
        }
        loop {
            let mut changed = false;
            for i in 0..m {
                let ones: Vec<usize> = reach[i].ones().collect();
                for k in ones {
                    let before = reach[i].count_ones(..);
                    let add = reach[k].clone();
                    reach[i].union_with(&add);
                    changed |= reach[i].count_ones(..) != before;
                }
            }
            if !changed {
                break;
            }
        }
        for (i, row) in reach.iter().enumerate() {
            for j in 0..m {
                assert_eq!(row.contains(j), f.leq(i, j), "pair {i} {j}");
            }
        }
    }

    #[test]
    fn relation_is_a_partial_order() {
        let f = family(5, Order::Support);
        let m = f.len();
        for i in 0..m {
            assert!(f.leq(i, i));
            for j in 0..m {
                if i != j {
                    assert!(!(f.leq(i, j) && f.leq(j, i)));
                }
                for k in 0..m {
                    if f.leq(i, j) && f.leq(j, k) {
                        assert!(f.leq(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output_is_stable() {
        let a = family(4, Order::Schur).connected_subposet().to_dot();
        let b = family(4, Order::Schur).connected_subposet().to_dot();
        assert_eq!(a, b);
        assert_eq!(a.matches(" [label=").count(), 7);
    }

    #[test]
    fn json_layout() {
        let f = family(2, Order::Schur);
        let js = serde_json::to_value(&f).unwrap();
        assert_eq!(js["n"], 2);
        assert_eq!(js["order"], "schur");
        assert_eq!(js["classes"].as_array().unwrap().len(), 3);
        assert!(js["leq"].as_array().unwrap().contains(&serde_json::json!([0, 0])));
    }
}
