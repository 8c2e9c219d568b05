mod common;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use hosoya_core::canon::canonical_code;
use hosoya_core::edge_list;
use hosoya_core::families::FamilySpec;
use hosoya_core::fib::{check_cassini_like, check_splitting_identity, fib, fib_nat};
use hosoya_core::hosoya::{hosoya_fast, hosoya_recursive};
use hosoya_core::{hosoya, matching_polynomial, Graph};

use common::{fib_iter, matching_counts, matchings};

/// Arbitrary simple graph on up to `max_n` vertices with up to `max_m` edges.
fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = max_m.min(pairs.len());
        proptest::sample::subsequence(pairs, 0..=m).prop_map(move |e| Graph::from_edge_list(n, e).unwrap())
    })
}

/// A connected unicyclic graph: random recursive tree plus one extra edge.
fn unicyclic(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            (Just(n), parents, any::<proptest::sample::Index>())
        })
        .prop_filter_map("tree was complete", |(n, parents, pick)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let tree = Graph::from_edge_list(n, edges.clone()).unwrap();
            let free: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !tree.has_edge(u, v))
                .collect();
            if free.is_empty() {
                return None;
            }
            edges.push(*pick.get(&free));
            Some(Graph::from_edge_list(n, edges).unwrap())
        })
}

fn permuted(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.vertex_count();
    (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn family() -> impl Strategy<Value = FamilySpec> {
    (6usize..=120).prop_flat_map(|n| {
        prop_oneof![
            (3..=n).prop_map(move |k| FamilySpec::Lollipop { n, k }),
            (3..=n - 3).prop_map(move |k| FamilySpec::L1Max { n, k }),
            (3..=n - 3).prop_map(move |k| FamilySpec::L3Max { n, k }),
            (3..=n - 2).prop_flat_map(move |k| (1..=n - k - 1).prop_map(move |s| FamilySpec::L1 {
                n,
                k,
                s,
                t: n - k - s
            })),
            Just(FamilySpec::UPrime(n)),
            Just(FamilySpec::UDoublePrime(n)),
            Just(FamilySpec::Cycle(n)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hosoya_matches_oracle(g in graph(10, 16)) {
        prop_assert_eq!(hosoya(&g), matchings(&g));
        prop_assert_eq!(hosoya_recursive(&g), matchings(&g));
    }

    #[test]
    fn polynomial_shape(g in graph(10, 16)) {
        let p = matching_polynomial(&g);
        let c = p.coeffs();
        prop_assert_eq!(c.len(), g.vertex_count() / 2 + 1);
        prop_assert_eq!(&c[0], &BigUint::from(1u8));
        if c.len() > 1 {
            prop_assert_eq!(&c[1], &BigUint::from(g.edge_count()));
        }
        prop_assert_eq!(p.total(), hosoya(&g));
        let oracle: Vec<BigUint> = matching_counts(&g).into_iter().map(BigUint::from).collect();
        prop_assert_eq!(c, oracle.as_slice());
    }

    #[test]
    fn edge_recurrence(g in graph(12, 20), pick in any::<proptest::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let (u, v) = *pick.get(g.edges());
        let rhs = hosoya(&g.delete_edge(u, v).unwrap()) + hosoya(&g.delete_vertices(&[u, v]).unwrap());
        prop_assert_eq!(hosoya(&g), rhs);
    }

    #[test]
    fn vertex_recurrence(g in graph(12, 20), pick in any::<proptest::sample::Index>()) {
        let v = pick.index(g.vertex_count());
        let mut rhs = hosoya(&g.delete_vertices(&[v]).unwrap());
        for &w in g.neighbors(v) {
            rhs += hosoya(&g.delete_vertices(&[v, w]).unwrap());
        }
        prop_assert_eq!(hosoya(&g), rhs);
    }

    #[test]
    fn multiplicative(a in graph(8, 12), b in graph(8, 12)) {
        prop_assert_eq!(hosoya(&a.disjoint_union(&b)), hosoya(&a) * hosoya(&b));
    }

    #[test]
    fn relabeling_invariance((g, perm) in graph(10, 18).prop_flat_map(permuted)) {
        prop_assert_eq!(hosoya(&g.relabel(&perm)), hosoya(&g));
    }

    #[test]
    fn unicyclic_fast_path((g, perm) in unicyclic(40).prop_flat_map(permuted)) {
        prop_assert!(g.is_unicyclic());
        let z = hosoya(&g);
        prop_assert_eq!(hosoya_fast(&g).unwrap(), z.clone());
        prop_assert_eq!(hosoya_recursive(&g), z);
        prop_assert_eq!(canonical_code(&g.relabel(&perm)).unwrap(), canonical_code(&g).unwrap());
    }

    #[test]
    fn edge_list_round_trip(g in graph(12, 30)) {
        prop_assert_eq!(edge_list::parse(&edge_list::write(&g)).unwrap(), g);
    }

    #[test]
    fn family_closed_forms(spec in family()) {
        let g = spec.build().unwrap();
        prop_assert_eq!(g.vertex_count(), spec.order());
        prop_assert!(g.is_unicyclic());
        prop_assert_eq!(spec.closed_form_z().unwrap(), hosoya(&g));
    }

    #[test]
    fn fib_recurrence_and_sign(n in -5000i64..=5000) {
        prop_assert_eq!(fib(n + 2), fib(n + 1) + fib(n));
        let sign = if n.rem_euclid(2) == 1 { 1 } else { -1 };
        prop_assert_eq!(fib(-n), fib(n) * BigInt::from(sign));
    }

    #[test]
    fn fib_matches_iteration(n in 0usize..=3000) {
        prop_assert_eq!(fib_nat(n), fib_iter(n));
    }

    #[test]
    fn splitting_identity(n in 1i64..=2000, k in 1i64..=2000) {
        prop_assume!(k <= n);
        prop_assert_eq!(check_splitting_identity(n, k), Ok(true));
    }

    #[test]
    fn splitting_identity_domain(n in 1i64..=500, k in 501i64..=600) {
        prop_assert!(check_splitting_identity(n, k).is_err());
        prop_assert!(check_splitting_identity(n, 0).is_err());
    }

    #[test]
    fn cassini_like(m in -500i64..=2000, n in -500i64..=2000) {
        prop_assert!(check_cassini_like(m, n));
    }
}
