use num_bigint::BigUint;
use proptest::prelude::*;
use qpart_core::partitions::*;
use qpart_core::HalfInteger;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..9, 0..9).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

#[test]
fn enumeration_counts_follow_partition_numbers() {
    assert_eq!(enumerate_partitions(0).unwrap().collect::<Vec<_>>(), vec![Partition::empty()]);
    assert_eq!(enumerate_partitions(4).unwrap().count(), 12);
    // Euler's pentagonal recurrence as an independent oracle.
    let mut pn = vec![1i64; 31];
    for n in 1..=30i64 {
        let mut s = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            s += sign * pn[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                s += sign * pn[(n - g2) as usize];
            }
        }
        pn[n as usize] = s;
    }
    for n in 0..=30usize {
        assert_eq!(PartitionsOf::new(n).count() as i64, pn[n], "n={n}");
    }
    assert!(enumerate_partitions(61).is_err());
}

#[test]
fn enumeration_order_is_size_then_descending() {
    let all: Vec<Partition> = enumerate_partitions(8).unwrap().collect();
    for w in all.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        assert!(a.size() < b.size() || (a.size() == b.size() && a.parts() > b.parts()));
    }
}

#[test]
fn cell_stats_small_cases() {
    let e = cell_stats(&Partition::empty());
    assert_eq!(e.b_of_lambda, 0);
    assert_eq!(e.dim_lambda, BigUint::from(1u8));
    let s = cell_stats(&p(&[2, 1]));
    let mut hooks = s.hooks.clone();
    hooks.sort_unstable();
    assert_eq!(hooks, vec![1, 1, 3]);
    assert_eq!(s.dim_lambda, BigUint::from(2u8));
    assert_eq!(s.b_of_lambda, 1);
    assert_eq!(s.contents, vec![0, 1, -1]);
}

#[test]
fn frobenius_young_exactly() {
    let mut fact = BigUint::from(1u8);
    for n in 0..=8usize {
        if n > 0 {
            fact *= n;
        }
        let total: BigUint = PartitionsOf::new(n).map(|l| {
            let d = cell_stats(&l).dim_lambda;
            &d * &d
        }).sum();
        assert_eq!(total, fact, "n={n}");
    }
}

#[test]
fn dim_counts_standard_tableaux() {
    // Oracle: branching rule, dim λ = ∑ over removable corners.
    fn branching(l: &[usize]) -> u64 {
        if l.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..l.len() {
            let removable = i + 1 == l.len() || l[i] > l[i + 1];
            if removable {
                let mut m = l.to_vec();
                m[i] -= 1;
                if m[i] == 0 {
                    m.pop();
                }
                total += branching(&m);
            }
        }
        total
    }
    for l in enumerate_partitions(10).unwrap() {
        assert_eq!(cell_stats(&l).dim_lambda, BigUint::from(branching(l.parts())), "{l}");
    }
}

#[test]
fn b_identity_by_enumeration() {
    for l in enumerate_partitions(20).unwrap() {
        let hs: usize = l.hooks().iter().sum();
        assert_eq!(l.b() + l.transpose().b() + l.size(), hs, "{l}");
    }
}

#[test]
fn fermionic_examples() {
    let e = fermionic_coordinates(&Partition::empty(), 3);
    let v: Vec<f64> = e.entries.iter().map(|r| r.value()).collect();
    assert_eq!(v, vec![-0.5, -1.5, -2.5]);
    let f = fermionic_coordinates(&p(&[3, 1]), 2);
    let v: Vec<f64> = f.entries.iter().map(|r| r.value()).collect();
    assert_eq!(v, vec![2.5, -0.5]);
}

#[test]
fn schur_examples() {
    let spec = Specialization::Principal { xi: 0.3f64, q: 0.5 };
    assert_eq!(schur_specialized(&Partition::empty(), spec), 1.0);
    assert_eq!(schur_specialized(&Partition::empty(), Specialization::Exponential { xi: 0.7f64 }), 1.0);
    let one = schur_specialized(&p(&[1]), spec);
    assert!((one - 0.3 * 0.5f64.sqrt() / 0.5).abs() < 1e-16);
    let e = schur_specialized(&p(&[2, 1]), Specialization::Exponential { xi: 1.0f64 });
    assert!((e - 1.0 / 3.0).abs() < 1e-16);
}

#[test]
fn principal_schur_matches_finite_variable_sum() {
    // Oracle: s_λ(x_1..x_m) by semistandard tableaux for tiny shapes, x_i = ξ q^{i−1/2}.
    let (xi, q) = (0.4f64, 0.3f64);
    let m = 40;
    let x: Vec<f64> = (0..m).map(|i| xi * q.powf(i as f64 + 0.5)).collect();
    // s_(1) = ∑ x_i; s_(1,1) = e_2; s_(2) = h_2.
    let p1: f64 = x.iter().sum();
    let p2: f64 = x.iter().map(|v| v * v).sum();
    let spec = Specialization::Principal { xi, q };
    assert!((schur_specialized(&p(&[1]), spec) - p1).abs() < 1e-15);
    assert!((schur_specialized(&p(&[2]), spec) - (p1 * p1 + p2) / 2.0).abs() < 1e-15);
    assert!((schur_specialized(&p(&[1, 1]), spec) - (p1 * p1 - p2) / 2.0).abs() < 1e-15);
}

#[test]
fn occupation_via_boson_fermion_map() {
    let l = p(&[4, 2, 2]);
    let set: Vec<i64> = l.fermionic(12).entries.iter().map(|r| r.twice()).collect();
    for twice in (-21..=11).step_by(2) {
        let r = HalfInteger::from_twice(twice).unwrap();
        assert_eq!(occupies(&l, r), set.contains(&twice));
    }
}

proptest! {
    #[test]
    fn transpose_is_involution(l in arb_partition()) {
        let t = l.transpose();
        prop_assert_eq!(t.transpose(), l.clone());
        prop_assert_eq!(t.size(), l.size());
        prop_assert_eq!(l.length(), t.first());
    }

    #[test]
    fn hooks_transpose_with_cells(l in arb_partition()) {
        let t = l.transpose();
        let hl = l.hooks();
        let ht = t.hooks();
        let mut idx = 0;
        for (i, &row) in l.parts().iter().enumerate() {
            for j in 0..row {
                let tpos: usize = t.parts()[..j].iter().sum::<usize>() + i;
                prop_assert_eq!(hl[idx], ht[tpos]);
                prop_assert!(hl[idx] >= 1);
                idx += 1;
            }
        }
    }

    #[test]
    fn fermionic_strictly_decreasing(l in arb_partition(), depth in 1usize..20) {
        let f = l.fermionic(depth);
        prop_assert!(f.entries.windows(2).all(|w| w[0] > w[1]));
        for (i, r) in f.entries.iter().enumerate() {
            if i >= l.length() {
                prop_assert_eq!(r.twice(), -2 * (i as i64 + 1) + 1);
            }
        }
    }

    #[test]
    fn yielded_partitions_are_valid(n in 0usize..18) {
        for l in PartitionsOf::new(n) {
            prop_assert_eq!(l.size(), n);
            prop_assert!(Partition::new(l.parts().to_vec()).is_ok());
        }
    }
}
