mod common;

use std::collections::HashMap;

use num_bigint::BigUint;
use proptest::prelude::*;

use apfilter::boolmat::{incidence_matrices, BoolMatrix, BoolVector};
use apfilter::automata::Dfa;
use common::{arb_dfa, config};

fn arb_matrix(max_dim: usize) -> impl Strategy<Value = BoolMatrix> {
    (1..=max_dim).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * n)).prop_map(|bits| {
        let n = bits.len().isqrt();
        let mut m = BoolMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, bits[i * n + j]);
            }
        }
        m
    })
}

/// States reachable from `i` by exactly `k` moves, found by walking every
/// word of length `k`.
fn reach_by_words(d: &Dfa, i: usize, k: usize) -> Vec<bool> {
    let mut hit = vec![false; d.state_count()];
    for w in d.alphabet().words_of_length(k) {
        hit[d.run_from(i, &w).unwrap()] = true;
    }
    hit
}

/// `(index, period)` by listing powers until one repeats.
fn orbit_by_listing(m: &BoolMatrix) -> (usize, usize) {
    let mut first: HashMap<BoolMatrix, usize> = HashMap::new();
    let mut p = BoolMatrix::identity(m.dim());
    for k in 0.. {
        if let Some(&j) = first.get(&p) {
            return (j, k - j);
        }
        first.insert(p.clone(), k);
        p = &p * m;
    }
    unreachable!()
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn powers_count_paths(d in arb_dfa(5, 1, 3)) {
        let (_, m) = incidence_matrices(&d);
        for k in 0..=6u64 {
            let mk = m.pow_u64(k);
            for i in 0..d.state_count() {
                let hit = reach_by_words(&d, i, k as usize);
                for (j, &h) in hit.iter().enumerate() {
                    prop_assert_eq!(mk.get(i, j), h, "k = {}, {} -> {}", k, i, j);
                }
            }
        }
    }

    #[test]
    fn letter_matrices_are_one_hot(d in arb_dfa(6, 1, 3)) {
        let (letters, _) = incidence_matrices(&d);
        let n = d.state_count();
        for mc in &letters {
            for i in 0..n {
                prop_assert_eq!(mc.row_count_ones(i), 1);
                let v = &BoolVector::unit(n, i) * mc;
                prop_assert_eq!(v.count_ones(), 1);
            }
        }
    }

    #[test]
    fn orbit_matches_listing(m in arb_matrix(4)) {
        let orbit = m.power_orbit();
        let (index, period) = orbit_by_listing(&m);
        prop_assert_eq!((orbit.index, orbit.period), (index, period));
        prop_assert_eq!(orbit.len(), index + period);
    }

    #[test]
    fn pow_is_repeated_product(m in arb_matrix(5)) {
        let orbit = m.power_orbit();
        let mut p = BoolMatrix::identity(m.dim());
        for k in 0..=orbit.len() + 4 {
            prop_assert_eq!(&m.pow_u64(k as u64), &p);
            prop_assert_eq!(&m.pow(&BigUint::from(k)), &p);
            prop_assert_eq!(orbit.power_small(k), &p);
            p = &p * &m;
        }
        // a huge exponent lands where its residue says
        let big = BigUint::from(10u32).pow(25);
        prop_assert_eq!(m.pow(&big), m.pow_u64(orbit.position(&big) as u64));
    }
}
