//! Cross-module invariants beyond the acceptance criteria: exhaustive
//! matching-oracle agreement, the universal-vertex factorization,
//! translation pairs, and the two-way matching condition.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bichroma_core::chromatic::interesting_factor_right_clique;
use bichroma_core::oracle::matchings_bruteforce;
use bichroma_core::verify::{check_translation_pairs, random_spec};
use bichroma_core::{
    chromatic_polynomial, falling_factorial, find_reflection, interesting_factor_3k,
    matching_numbers, strip_universal, theorem2_condition, verify_family, BicliqueSpec,
    complement_matching_numbers, from_params, matchings, prop5_pair, prop6_pair, prop7_pair,
};

#[test]
fn matching_numbers_match_bruteforce_exhaustively() {
    // every complement subset of K_{j,k} with j*k <= 16 (j <= k)
    let mut cases = 0u64;
    for j in 1..=4usize {
        for k in j..=16 {
            if j * k > 16 {
                continue;
            }
            let cells: Vec<(usize, usize)> = (0..j)
                .flat_map(|l| (0..k).map(move |r| (l, r)))
                .collect();
            for bits in 0u32..(1 << cells.len()) {
                let edges: Vec<_> = cells
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let spec = BicliqueSpec::new(j, k, edges.iter().copied()).unwrap();
                assert_eq!(
                    matching_numbers(&spec),
                    matchings_bruteforce(j, k, &edges).unwrap(),
                    "j={j} k={k} edges={edges:?}"
                );
                cases += 1;
            }
        }
    }
    // sum of 2^(j*k) over 1 <= j <= k with j*k <= 16
    assert_eq!(cases, 321_358);
}

#[test]
fn matching_numbers_match_bruteforce_random_larger() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..500 {
        let s = random_spec(&mut rng, 5, 9);
        let edges: Vec<_> = s.complement_edges.iter().copied().collect();
        if edges.len() > 20 {
            continue; // brute-force guard
        }
        assert_eq!(
            matching_numbers(&s),
            matchings_bruteforce(s.j, s.k, &edges).unwrap()
        );
    }
}

#[test]
fn strict_specs_have_edge_count_one_matchings() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..200 {
        let s = bichroma_core::verify::random_strict_spec(&mut rng, 4, 8);
        let m = matching_numbers(&s);
        assert_eq!(m.get(0), BigInt::from(1u32));
        assert_eq!(m.get(1), BigInt::from(s.complement_edges.len()));
    }
}

#[test]
fn strictness_does_not_force_full_matchings() {
    // Every vertex has complement degree >= 1 here, yet no 3-matching
    // exists: left vertices 1 and 2 share their only neighbour, so Hall's
    // condition fails. Counterexample to the tempting "strict implies
    // m^i >= 1 up to min(j,k)".
    let s = BicliqueSpec::new(3, 3, [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]).unwrap();
    assert!(s.is_strict());
    let m = matching_numbers(&s);
    assert_eq!(
        m.counts(),
        &[1, 5, 4, 0].map(BigInt::from)
    );
}

#[test]
fn complement_transform_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..300 {
        let s = random_spec(&mut rng, 4, 8);
        let m = matching_numbers(&s);
        let once = complement_matching_numbers(&m, s.j, s.k).unwrap();
        let twice = complement_matching_numbers(&once, s.j, s.k).unwrap();
        assert_eq!(twice, m);
    }
}

#[test]
fn universal_vertex_factorization() {
    // P_G(x) = (x)_p * P_H(x - p) for random (mostly non-strict) specs
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let mut non_strict_seen = 0;
    for _ in 0..200 {
        // sparse edges make universal vertices common
        let j = rng.gen_range(1..=4usize);
        let k = rng.gen_range(j..=8usize);
        let mut edges = Vec::new();
        for l in 0..j {
            for r in 0..k {
                if rng.gen_bool(0.25) {
                    edges.push((l, r));
                }
            }
        }
        let s = BicliqueSpec::new(j, k, edges).unwrap();
        if !s.is_strict() {
            non_strict_seen += 1;
        }
        let p_full = chromatic_polynomial(&s);
        let strip = strip_universal(&s);
        let p = strip.removed_total() as i64;
        let reconstructed = match &strip.reduced {
            Some(reduced) => {
                falling_factorial(p as usize, 0).mul(&chromatic_polynomial(reduced).shift(-p))
            }
            None => falling_factorial(s.j + s.k, 0),
        };
        assert_eq!(p_full, reconstructed, "spec {s:?}");
    }
    assert!(non_strict_seen >= 100, "sampling produced enough non-strict specs");
}

#[test]
fn translation_pairs_shift_by_host_difference() {
    check_translation_pairs(200, 59).expect("translation invariant");
}

#[test]
fn reflection_found_iff_condition_holds() {
    // two-way check on family pairs and on perturbed non-pairs
    for (prop, r, s, t, u) in [(5u8, 1, 0, 2, 3), (6, 1, 2, 1, 4), (7, 0, 1, 1, 2)] {
        let (gp, hp, c) = match prop {
            5 => prop5_pair(r, s, t, u).unwrap(),
            6 => prop6_pair(r, s, t, u).unwrap(),
            _ => prop7_pair(r, s, t, u).unwrap(),
        };
        let g = interesting_factor_3k(&gp);
        let h = interesting_factor_3k(&hp);
        let m_g = matching_numbers(&from_params(&gp).unwrap());
        let m_h = matching_numbers(&from_params(&hp).unwrap());
        let found = find_reflection(&g, &h).unwrap();
        assert_eq!(found, Some(c));
        assert!(theorem2_condition(&m_g, &m_h, 3, gp.k() as i64, hp.k() as i64, c));
        // wrong shift: both sides must deny it
        assert!(!theorem2_condition(&m_g, &m_h, 3, gp.k() as i64, hp.k() as i64, c + 1));
        let wrong = g.reflect(c + 1);
        assert_ne!(wrong, h);
    }
}

#[test]
fn family_reports_flag_below_convention() {
    let report = verify_family(5, 0, 0, 0, 1).unwrap(); // k_G = 1
    assert!(report.below_convention);
    assert!(report.verified);
    let report = verify_family(5, 1, 1, 1, 2).unwrap(); // k = 7, 8
    assert!(!report.below_convention);
}

#[test]
fn factor_right_clique_is_exact_divisor_for_any_sides() {
    // the right-clique factorization holds even when k < j
    for (j, k, edges) in [
        (3usize, 1usize, vec![(0, 0), (2, 0)]),
        (4, 2, vec![(0, 0), (1, 1), (3, 0)]),
        (2, 5, vec![(0, 3), (1, 1), (1, 4)]),
    ] {
        let s = BicliqueSpec::new(j, k, edges).unwrap();
        let g = interesting_factor_right_clique(&s);
        assert_eq!(g.degree(), Some(j));
        let p = chromatic_polynomial(&s);
        assert_eq!(
            p.exact_div(&falling_factorial(k, 0)).expect("divides"),
            g
        );
    }
}

#[test]
fn padded_condition_handles_short_sequences() {
    // j > min(j,k): sequences are zero-padded up to length j+1
    let s = BicliqueSpec::new(3, 1, [(0, 0), (1, 0), (2, 0)]).unwrap();
    let m = matching_numbers(&s);
    assert_eq!(m.len(), 2);
    let padded = m.padded(4);
    assert_eq!(padded.len(), 4);
    assert_eq!(padded[2], BigInt::from(0u32));
    // matchings module re-exported type stays consistent
    let _: &matchings::MatchingNumbers = &m;
}
