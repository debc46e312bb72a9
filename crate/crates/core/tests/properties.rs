use proptest::prelude::*;

use schurkit::expansion::{lr_expand, ribbon_expand};
use schurkit::shapes::dominance_leq;
use schurkit::theorems::{construct_witness_syt, is_equitable};
use schurkit::{Composition, Partition, Ribbon, SchurExpansion, SkewShape};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew_shape() -> impl Strategy<Value = SkewShape> {
    (partition(5, 5), prop::collection::vec(0usize..=5, 5)).prop_filter_map("empty shape", |(outer, cuts)| {
        // Shrink each row by a cut, then repair into a partition inside outer.
        let mut inner: Vec<usize> = (0..outer.len())
            .map(|i| outer.part(i).saturating_sub(cuts[i]))
            .collect();
        for i in (0..inner.len().saturating_sub(1)).rev() {
            inner[i] = inner[i].max(inner[i + 1]);
        }
        let inner = Partition::new(inner).ok()?;
        SkewShape::new(outer, inner).ok()
    })
}

fn same_size_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..=14).prop_flat_map(|n| {
        let ps = schurkit::shapes::partitions(n);
        let k = ps.len();
        (0..k, 0..k).prop_map(move |(i, j)| (ps[i].clone(), ps[j].clone()))
    })
}

fn composition(max_len: usize, max_part: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn small_expansion() -> impl Strategy<Value = SchurExpansion> {
    (1usize..=3).prop_flat_map(|n| {
        let shapes = schurkit::shapes::partitions(n);
        prop::collection::vec((0..shapes.len(), 1u64..4), 1..=3).prop_map(move |terms| {
            SchurExpansion::from_terms(n, terms.into_iter().map(|(i, c)| (shapes[i].clone(), c))).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition(8, 8)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn dominance_reverses_under_transpose((p, q) in same_size_pair()) {
        prop_assert_eq!(dominance_leq(&p, &q).unwrap(), dominance_leq(&q.transpose(), &p.transpose()).unwrap());
    }

    #[test]
    fn skew_symmetries(a in skew_shape()) {
        prop_assert_eq!(a.rotate180().rotate180(), a.clone());
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        let e = lr_expand(&a);
        prop_assert_eq!(&e, &lr_expand(&a.rotate180()));
        prop_assert_eq!(e.omega(), lr_expand(&a.transpose()));
    }

    #[test]
    fn ribbon_routes_agree(alpha in composition(5, 3)) {
        let r = Ribbon::new(alpha.clone());
        prop_assert_eq!(ribbon_expand(&alpha), lr_expand(&r.to_skew()));
        let s = r.to_skew();
        prop_assert_eq!(s.rows_of().len() + s.cols_of().len(), r.size() + 1);
    }

    #[test]
    fn descent_set_round_trip(alpha in composition(8, 4)) {
        let back = Composition::from_descent_set(alpha.size(), &alpha.descent_set()).unwrap();
        prop_assert_eq!(back, alpha.clone());
        prop_assert_eq!(alpha.complement().complement(), alpha);
    }

    #[test]
    fn product_is_commutative_and_associative(
        f in small_expansion(), g in small_expansion(), h in small_expansion()
    ) {
        prop_assert_eq!(f.multiply(&g).unwrap(), g.multiply(&f).unwrap());
        prop_assert_eq!(
            f.multiply(&g).unwrap().multiply(&h).unwrap(),
            f.multiply(&g.multiply(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!(f.multiply(&g).unwrap().omega(), f.omega().multiply(&g.omega()).unwrap());
    }

    #[test]
    fn json_round_trips(a in skew_shape(), alpha in composition(5, 4)) {
        let back: SkewShape = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a.clone());
        let e = lr_expand(&a);
        let back: SchurExpansion = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
        prop_assert_eq!(back, e);
        let r = Ribbon::new(alpha);
        let back: Ribbon = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn witness_on_random_equitable_inputs(l in 2usize..=6, a in 1usize..=4, extra in 0usize..6, pick in any::<u64>()) {
        let n = l * a + extra % l;
        let ribbons = schurkit::theorems::enumerate_equitable(n, l);
        prop_assume!(!ribbons.is_empty());
        let r = &ribbons[(pick as usize) % ribbons.len()];
        prop_assert!(is_equitable(r));
        let shapes: Vec<Partition> = schurkit::theorems::predicted_support(n, l).into_iter().collect();
        let lam = &shapes[(pick as usize / 7) % shapes.len()];
        let t = construct_witness_syt(r.rows(), lam).unwrap();
        prop_assert_eq!(t.descent_set().unwrap(), r.rows().descent_set());
        prop_assert_eq!(t.shape().outer(), lam);
    }
}
