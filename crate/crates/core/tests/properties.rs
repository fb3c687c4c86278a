//! Randomized invariants across modules.

use std::collections::BTreeMap;

use proptest::prelude::*;

use spinfh::clifford::oracle_product_sign;
use spinfh::combinatorics::{even_partitions_fitting, even_partitions_of, partitions_of};
use spinfh::groupalgebra::{decompose_central, reconstruct, structure_coefficient, structure_constants};
use spinfh::jm::a_coefficients;
use spinfh::spingroup::spin_mul;
use spinfh::{Partition, Perm, SpinElement, Variant};

fn perm_of(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|line| Perm::from_one_line(&line).unwrap())
}

fn spin_of(n: usize) -> impl Strategy<Value = SpinElement> {
    (perm_of(n), any::<bool>()).prop_map(move |(p, neg)| SpinElement::new(n, p, if neg { -1 } else { 1 }).unwrap())
}

/// A degree and two classes that fit in it, for the given variant.
fn class_pair(variant: Variant) -> impl Strategy<Value = (usize, Partition, Partition)> {
    (2usize..=7).prop_flat_map(move |n| {
        let basis: Vec<Partition> = match variant {
            Variant::Spin => even_partitions_fitting(n),
            Variant::Ordinary => (0..n).flat_map(partitions_of).filter(|l| l.support() <= n).collect(),
        };
        let pick = prop::sample::select(basis);
        (Just(n), pick.clone(), pick)
    })
}

fn combination(n: usize) -> impl Strategy<Value = BTreeMap<Partition, i64>> {
    let basis = even_partitions_fitting(n);
    prop::collection::vec(-5i64..=5, basis.len()).prop_map(move |cs| {
        basis.iter().cloned().zip(cs).filter(|(_, c)| *c != 0).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn projection_is_multiplicative((x, y) in (1usize..=12).prop_flat_map(|n| (spin_of(n), spin_of(n)))) {
        let xy = spin_mul(&x, &y).unwrap();
        prop_assert_eq!(*xy.perm(), x.perm().compose(y.perm()));
    }

    #[test]
    fn oracle_product_is_associative(
        (n, a, b, c) in (1usize..=6).prop_flat_map(|n| (Just(n), perm_of(n), perm_of(n), perm_of(n)))
    ) {
        let mul = |(p, e): (Perm, i8), (q, f): (Perm, i8)| {
            let (pq, g) = oracle_product_sign(&p, &q, n).unwrap();
            (pq, e * f * g)
        };
        let left = mul(mul((a, 1), (b, 1)), (c, 1));
        let right = mul((a, 1), mul((b, 1), (c, 1)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn spin_structure_constants_commute((n, a, b) in class_pair(Variant::Spin)) {
        let ab = structure_constants(&a, &b, n, Variant::Spin).unwrap();
        let ba = structure_constants(&b, &a, n, Variant::Spin).unwrap();
        prop_assert_eq!(&ab.entries, &ba.entries);
        for nu in ab.entries.keys() {
            prop_assert!(nu.size() <= a.size() + b.size());
        }
    }

    #[test]
    fn ordinary_structure_constants_commute((n, a, b) in class_pair(Variant::Ordinary)) {
        let ab = structure_constants(&a, &b, n, Variant::Ordinary).unwrap();
        let ba = structure_constants(&b, &a, n, Variant::Ordinary).unwrap();
        prop_assert_eq!(&ab.entries, &ba.entries);
        for nu in ab.entries.keys() {
            prop_assert!(nu.size() <= a.size() + b.size());
        }
    }

    #[test]
    fn decompose_inverts_reconstruct(
        (n, coords) in (1usize..=7).prop_flat_map(|n| (Just(n), combination(n)))
    ) {
        let elem = reconstruct(&coords, n, Variant::Spin).unwrap();
        prop_assert_eq!(decompose_central(&elem).unwrap(), coords);
    }
}

#[test]
fn top_degree_constants_are_stable_over_five_degrees() {
    let all: Vec<Partition> = (0..=6).step_by(2).flat_map(even_partitions_of).collect();
    for a in &all {
        for b in &all {
            if a > b || a.size() + b.size() > 6 {
                continue;
            }
            for nu in even_partitions_of(a.size() + b.size()) {
                let n0 = nu.support();
                let first = structure_coefficient(a, b, &nu, n0, Variant::Spin).unwrap();
                for n in n0 + 1..=n0 + 4 {
                    assert_eq!(structure_coefficient(a, b, &nu, n, Variant::Spin).unwrap(), first, "{a} {b} {nu} n={n}");
                }
            }
        }
    }
}

#[test]
fn stable_coefficients_agree_one_degree_higher() {
    for (r, n) in [(1, 3), (1, 5), (2, 5), (2, 6), (2, 7), (3, 7), (3, 8)] {
        let here = a_coefficients(r, n).unwrap();
        let there = a_coefficients(r, n + 1).unwrap();
        for (lam, c) in &here.coords {
            assert_eq!(there.get(lam), Some(*c), "r={r} n={n} {lam}");
        }
    }
}
