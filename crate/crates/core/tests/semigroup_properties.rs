use std::collections::BTreeSet;

use proptest::prelude::*;

use invhol::esn::{esn_back, esn_forward};
use invhol::heap::{enumerate_sha, verify_sha};
use invhol::holomorph::{enumerate_holomorph_from, verify_holomorph};
use invhol::io;
use invhol::morphisms::{enumerate_premorphisms, is_endomorphism, is_ordered, ElementMap};
use invhol::search::Budget;
use invhol::semigroup::{build_symmetric_inverse_monoid, InverseSemigroup, NaturalOrder};

/// Inverse subsemigroup of I_k generated by `gens` (indices taken mod |I_k|).
fn generated(k: usize, gens: &[usize]) -> InverseSemigroup {
    let big = build_symmetric_inverse_monoid(k, 1000).unwrap();
    let mut set: BTreeSet<usize> = gens.iter().map(|g| g % big.len()).flat_map(|g| [g, big.inv(g)]).collect();
    loop {
        let extra: Vec<usize> = set
            .iter()
            .flat_map(|&a| set.iter().map(move |&b| (a, b)))
            .map(|(a, b)| big.mul(a, b))
            .filter(|x| !set.contains(x))
            .collect();
        if extra.is_empty() {
            break;
        }
        set.extend(extra);
    }
    let elems: Vec<usize> = set.into_iter().collect();
    let pos = |x: usize| elems.binary_search(&x).unwrap();
    let names = elems.iter().map(|&e| big.name(e).to_string()).collect();
    InverseSemigroup::from_fn(names, |a, b| pos(big.mul(elems[a], elems[b]))).unwrap()
}

fn budget() -> Budget {
    Budget::new(10_000_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverses_and_order(gens in prop::collection::vec(0usize..34, 1..4)) {
        let s = generated(3, &gens);
        let order = NaturalOrder::new(&s);
        prop_assert!(order.partial_order_violation().is_none());
        prop_assert!(order.compatibility_violation(&s).is_none());
        for a in 0..s.len() {
            prop_assert_eq!(s.mul3(a, s.inv(a), a), a);
            prop_assert_eq!(s.inv(s.inv(a)), a);
            if s.natural_leq(a, s.mul(a, a)) {
                prop_assert_eq!(s.mul(a, a), a);
            }
            for b in 0..s.len() {
                if order.leq(a, b) {
                    prop_assert!(order.leq(s.inv(a), s.inv(b)));
                }
            }
        }
        for &e in s.idempotents() {
            for &f in s.idempotents() {
                let ef = s.meet_idempotents(e, f).unwrap();
                prop_assert_eq!(ef, s.meet_idempotents(f, e).unwrap());
                for &g in s.idempotents() {
                    prop_assert_eq!(
                        s.meet_idempotents(ef, g).unwrap(),
                        s.meet_idempotents(e, s.meet_idempotents(f, g).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn esn_and_file_round_trips(gens in prop::collection::vec(0usize..34, 1..4)) {
        let s = generated(3, &gens);
        let g = esn_forward(&s);
        prop_assert!(g.is_inductive());
        for a in 0..g.len() {
            for b in 0..g.len() {
                for c in 0..g.len() {
                    let left = g.pseudoproduct(a, b).and_then(|ab| g.pseudoproduct(ab, c));
                    let right = g.pseudoproduct(b, c).and_then(|bc| g.pseudoproduct(a, bc));
                    prop_assert_eq!(left, right);
                }
            }
        }
        prop_assert_eq!(esn_back(&g).unwrap(), s.clone());
        let text = io::write_semigroup(&s);
        prop_assert_eq!(io::parse_semigroup_file(&text).unwrap().build(1000).unwrap(), s);
    }

    #[test]
    fn premorphisms_holomorph_and_heap(gens in prop::collection::vec(0usize..7, 1..3)) {
        let s = generated(2, &gens);
        let prems = enumerate_premorphisms(&s, &budget()).unwrap();
        prop_assert!(prems.contains(&ElementMap::identity(s.len())));
        for p in &prems {
            prop_assert!(is_ordered(&s, &s, p.theta()));
            for q in &prems {
                prop_assert!(prems.contains(&p.then(q)));
            }
        }
        let mut sorted = prems.clone();
        sorted.sort_by(|a, b| a.theta().cmp(b.theta()));
        prop_assert_eq!(&sorted, &prems);
        // every endomorphism is a premorphism
        let n = s.len();
        let mut theta = vec![0usize; n];
        loop {
            if is_endomorphism(&s, &theta) {
                prop_assert!(prems.iter().any(|p| p.theta() == theta.as_slice()));
            }
            let mut i = 0;
            while i < n && theta[i] == n - 1 {
                theta[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            theta[i] += 1;
        }
        let hol = enumerate_holomorph_from(&s, &prems, &budget()).unwrap();
        let r = verify_holomorph(&s, &hol);
        prop_assert!(r.all_passed(), "{}", r);
        let sha = enumerate_sha(&s, &budget()).unwrap();
        let r = verify_sha(&s, &sha, Some(&hol)).unwrap();
        prop_assert!(r.all_passed(), "{}", r);
    }
}

#[test]
fn premorphisms_of_groups_are_endomorphisms() {
    for name in ["z2", "z3", "z4", "z5", "klein", "s3"] {
        let g = invhol::catalog::build(name, 100).unwrap();
        let prems = enumerate_premorphisms(&g, &budget()).unwrap();
        let n = g.len();
        let mut endos = 0;
        let mut theta = vec![0usize; n];
        loop {
            endos += is_endomorphism(&g, &theta) as usize;
            let mut i = 0;
            while i < n && theta[i] == n - 1 {
                theta[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            theta[i] += 1;
        }
        assert_eq!(prems.len(), endos, "{name}");
        assert!(prems.iter().all(|p| is_endomorphism(&g, p.theta())), "{name}");
    }
}
