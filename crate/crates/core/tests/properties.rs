//! Property tests for the sequence machinery and monomial-order structure.

use gorstick::hilbert::{ci_hvector, linked_hvector, sum_linked_hvector};
use gorstick::monomials::{lex_segment_ideal, loim, monomials_of_degree, phi};
use gorstick::sequences::{
    difference, integrate, is_o_sequence, is_si_sequence, macaulay_bound, si_params, HVector,
};
use proptest::prelude::*;

fn hv(v: &[i64]) -> HVector {
    HVector::new(v.to_vec())
}

/// Growth-respecting generator of O-sequences with h_1 <= 4 and socle <= 5.
fn arb_o_sequence() -> impl Strategy<Value = HVector> {
    (1i64..=4, proptest::collection::vec(0.0f64..1.0, 0..5)).prop_map(|(h1, fracs)| {
        let mut entries = vec![1i64, h1];
        for (i, frac) in fracs.iter().enumerate() {
            let prev = *entries.last().unwrap();
            if prev == 0 {
                break;
            }
            let bound = macaulay_bound(prev, i as i64 + 1).unwrap();
            entries.push(((bound as f64 + 1.0) * frac).floor() as i64);
        }
        HVector::new(entries)
    })
}

/// Symmetric SI-sequences built by integrating an O-sequence half.
fn arb_si_sequence() -> impl Strategy<Value = HVector> {
    (arb_o_sequence(), 0usize..=3).prop_map(|(g, pad)| {
        // integrate g to a nondecreasing half, hold the peak, mirror
        let half = integrate(&g);
        let s = 2 * half.socle_degree() + pad;
        let full: Vec<i64> = (0..=s as i64)
            .map(|i| {
                let i = i.min(s as i64 - i).min(half.socle_degree() as i64);
                half.get(i)
            })
            .collect();
        HVector::new(full)
    })
}

proptest! {
    #[test]
    fn integrate_inverts_difference(entries in proptest::collection::vec(0i64..50, 1..8)) {
        let mut entries = entries;
        entries[0] = 1;
        let h = HVector::new(entries);
        prop_assert_eq!(integrate(&difference(&h)), h);
    }

    #[test]
    fn si_sequences_are_symmetric_with_small_flat_start(h in arb_si_sequence()) {
        prop_assert!(is_si_sequence(&h));
        let reversed: Vec<i64> = h.entries().iter().rev().cloned().collect();
        prop_assert_eq!(&HVector::new(reversed), &h);
        let p = si_params(&h).unwrap();
        prop_assert!(p.s >= 2 * p.t);
        prop_assert_eq!(p.c, h.get(1) as usize);
    }

    #[test]
    fn generated_o_sequences_validate_and_round_trip(h in arb_o_sequence()) {
        prop_assert!(is_o_sequence(&h));
        let c = h.get(1).max(1) as usize;
        let ideal = lex_segment_ideal(&h, c).unwrap();
        let counts = ideal.standard_monomial_counts(h.socle_degree() + 1);
        prop_assert_eq!(&HVector::new(counts), &h);
        // LOIM degree counts match the h-vector
        let l = loim(&h, c).unwrap();
        for d in 0..=h.socle_degree() as i64 {
            let count = l.iter().filter(|m| m.degree() as i64 == d).count() as i64;
            prop_assert_eq!(count, h.get(d));
        }
    }

    #[test]
    fn phi_reverses_orders(d in 1u32..4, c in 1usize..5) {
        let monos = monomials_of_degree(c, d);
        for a in &monos {
            for b in &monos {
                prop_assert_eq!(a.cmp_lex(b), phi(a).cmp_revlex(&phi(b)));
            }
        }
    }

    #[test]
    fn ci_hvectors_are_symmetric_si(degrees in proptest::collection::vec(1usize..5, 1..4)) {
        let h = ci_hvector(&degrees);
        prop_assert!(h.is_symmetric());
        prop_assert!(is_si_sequence(&h));
    }

    #[test]
    fn sum_linked_symmetric_for_first_half_supports(
        degrees in proptest::collection::vec(2usize..5, 2..4),
        cut in 0usize..3,
        drop in 0i64..3,
    ) {
        let cvec = ci_hvector(&degrees);
        let s = cvec.socle_degree();
        // gvec: a truncation of cvec to degrees <= s/2, with a reduced top
        let top = (s / 2).saturating_sub(cut);
        let gvec: Vec<i64> = (0..=top as i64)
            .map(|i| {
                if i == top as i64 {
                    (cvec.get(i) - drop).max(1)
                } else {
                    cvec.get(i)
                }
            })
            .collect();
        let gvec = HVector::new(gvec);
        if gvec.entries().iter().enumerate().all(|(i, &e)| e <= cvec.get(i as i64)) {
            let sum = sum_linked_hvector(&cvec, &gvec).unwrap();
            prop_assert!(sum.is_symmetric(), "cvec {} gvec {} sum {}", cvec, gvec, sum);
        }
    }

    #[test]
    fn linked_hvector_involution(degrees in proptest::collection::vec(2usize..5, 2..4), cut in 1usize..4) {
        let cvec = ci_hvector(&degrees);
        let top = cvec.socle_degree() / cut.max(1);
        let gvec: Vec<i64> = (0..=top as i64).map(|i| cvec.get(i)).collect();
        let gvec = HVector::new(gvec);
        let gp = linked_hvector(&cvec, &gvec).unwrap();
        prop_assert_eq!(linked_hvector(&cvec, &gp).unwrap(), gvec);
    }
}

proptest! {
    #[test]
    fn lex_betti_euler_characteristic(h in arb_o_sequence()) {
        // the alternating column sums of the Betti table are the numerator
        // coefficients of the Hilbert series: (sum h_i z^i)(1-z)^c
        let c = h.get(1).max(1) as usize;
        let table = gorstick::betti::lex_betti(&h, c).unwrap();
        let maxj = table.entries().map(|(_, j, _)| j).max().unwrap_or(0);
        for j in 0..=maxj {
            let alt: i64 = table
                .entries()
                .filter(|&(_, jj, _)| jj == j)
                .map(|(i, _, r)| if i % 2 == 0 { r } else { -r })
                .sum();
            let numer: i64 = (0..=c.min(j))
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * gorstick::sequences::binomial(c as i64, k as i64).unwrap()
                        * h.get((j - k) as i64)
                })
                .sum();
            prop_assert_eq!(alt, numer, "degree {} of {}", j, h);
        }
    }
}

#[test]
fn deterministic_edge_cases() {
    assert_eq!(integrate(&hv(&[1, 0, -1])), hv(&[1, 1]));
    assert!(is_o_sequence(&HVector::zero()));
    assert!(!is_si_sequence(&HVector::zero()));
    assert!(is_si_sequence(&hv(&[1])));
}
