//! Cross-check harness: every formula-based path against its independent
//! brute-force oracle, at configurable sizes. Shared by the CLI `verify`
//! subcommand and the acceptance suite.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphan::{alpha_plus_n, cubic_roots_f64, eval_complex};
use crate::chromatic::{
    acyclic_count, chromatic_polynomial, interesting_factor, interesting_factor_3k,
    reflection_count_identity,
};
use crate::error::{Error, Result};
use crate::graph::{
    complement_partner, from_params, to_simple_graph, BicliqueSpec, SimpleGraph,
    ThreeCliqueParams,
};
use crate::matchings::{complement_matching_numbers, matching_numbers, theorem2_condition};
use crate::oracle::{
    acyclic_orientations_bruteforce, chromatic_poly_bruteforce, matchings_bruteforce,
};
use crate::poly::IntPoly;
use crate::reflect::{find_reflection, find_translation, verify_family};

/// Outcome of one check: its label and how many cases were exercised.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
}

fn fail(name: &str, detail: String) -> Error {
    Error::FormulaIntegrity(format!("{name}: {detail}"))
}

/// Uniformly random biclique with j ≤ k and each complement edge present
/// with probability 1/2.
pub fn random_spec(rng: &mut ChaCha8Rng, j_max: usize, k_max: usize) -> BicliqueSpec {
    let j = rng.gen_range(1..=j_max);
    let k = rng.gen_range(j..=k_max.max(j));
    let mut edges = Vec::new();
    for l in 0..j {
        for r in 0..k {
            if rng.gen_bool(0.5) {
                edges.push((l, r));
            }
        }
    }
    BicliqueSpec::new(j, k, edges).expect("generated edges are in range")
}

/// Random spec in which every vertex keeps complement degree ≥ 1.
pub fn random_strict_spec(rng: &mut ChaCha8Rng, j_max: usize, k_max: usize) -> BicliqueSpec {
    loop {
        let s = random_spec(rng, j_max, k_max);
        if s.is_strict() {
            return s;
        }
    }
}

/// Every complement-edge subset of K_{j,k}, as specs.
fn exhaustive_specs(j: usize, k: usize) -> impl Iterator<Item = BicliqueSpec> {
    let cells: Vec<(usize, usize)> = (0..j)
        .flat_map(|l| (0..k).map(move |r| (l, r)))
        .collect();
    (0u64..(1 << cells.len())).map(move |bits| {
        let edges = cells
            .iter()
            .enumerate()
            .filter(|(idx, _)| bits & (1 << idx) != 0)
            .map(|(_, &e)| e);
        BicliqueSpec::new(j, k, edges).expect("in range")
    })
}

fn check_spec_against_oracle(s: &BicliqueSpec) -> Result<()> {
    let fast = chromatic_polynomial(s);
    let slow = chromatic_poly_bruteforce(&to_simple_graph(s))?;
    if fast != slow {
        return Err(fail(
            "eq1",
            format!(
                "matching formula {fast} != deletion-contraction {slow} on j={}, k={}, edges {:?}",
                s.j, s.k, s.complement_edges
            ),
        ));
    }
    Ok(())
}

/// Matching-sum chromatic polynomial vs deletion–contraction: exhaustive
/// over all complement subsets with j ≤ 3, j ≤ k, j+k ≤ 7, plus `samples`
/// random bicliques with j ≤ 4, k ≤ 8.
pub fn check_chromatic_vs_oracle(samples: usize, seed: u64) -> Result<CheckOutcome> {
    let mut cases = 0;
    for j in 1..=3usize {
        for k in j..=(7 - j) {
            for s in exhaustive_specs(j, k) {
                check_spec_against_oracle(&s)?;
                cases += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let s = random_spec(&mut rng, 4, 8);
        check_spec_against_oracle(&s)?;
        cases += 1;
    }
    Ok(CheckOutcome {
        name: "chromatic polynomial vs deletion-contraction",
        cases,
    })
}

/// The matching-sum interesting factor vs the direct inclusion–exclusion
/// cubic, exhaustively over 6-tuples in \[0,bound\]^6.
pub fn check_factor_routes(bound: u64) -> Result<CheckOutcome> {
    let mut cases = 0;
    let range = 0..=bound;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    for e in range.clone() {
                        for f in range.clone() {
                            let p = ThreeCliqueParams::new(a, b, c, d, e, f);
                            cases += 1;
                            if p.k() == 0 {
                                if from_params(&p).is_ok() {
                                    return Err(fail(
                                        "eq2",
                                        "degenerate tuple must be rejected".into(),
                                    ));
                                }
                                continue;
                            }
                            let via_matchings =
                                crate::chromatic::interesting_factor_right_clique(
                                    &from_params(&p)?,
                                );
                            let via_cp = interesting_factor_3k(&p);
                            if via_matchings != via_cp {
                                return Err(fail(
                                    "eq2",
                                    format!("{:?}: {via_matchings} != {via_cp}", p.as_array()),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(CheckOutcome {
        name: "matching-sum factor vs inclusion-exclusion cubic",
        cases,
    })
}

/// Complement matching-number transform vs direct enumeration, plus the
/// round-trip identity, on random subgraphs of K_{j,k} with j ≤ 4, k ≤ 8.
pub fn check_complement_transform(samples: usize, seed: u64) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..samples {
        // both the subgraph and its partner must fit the enumeration guard
        let s = loop {
            let s = random_spec(&mut rng, 4, 8);
            let m = s.complement_edges.len();
            if m <= 20 && s.j * s.k - m <= 20 {
                break s;
            }
        };
        let edges: Vec<_> = s.complement_edges.iter().copied().collect();
        let m_sub = matchings_bruteforce(s.j, s.k, &edges)?;
        let partner = complement_partner(&s);
        let partner_edges: Vec<_> = partner.complement_edges.iter().copied().collect();
        let m_partner = matchings_bruteforce(s.j, s.k, &partner_edges)?;

        let transformed = complement_matching_numbers(&m_sub, s.j, s.k)?;
        if transformed != m_partner {
            return Err(fail(
                "lemma3",
                format!(
                    "sample {idx}: transform {:?} != enumeration {:?}",
                    transformed.counts(),
                    m_partner.counts()
                ),
            ));
        }
        let back = complement_matching_numbers(&transformed, s.j, s.k)?;
        if back != m_sub {
            return Err(fail("lemma3", format!("sample {idx}: round trip broke")));
        }
    }
    Ok(CheckOutcome {
        name: "complement matching transform vs enumeration",
        cases: samples,
    })
}

/// Complementary partners reflect with shift j+k−1, and the matching
/// condition confirms it, on random strict specs.
pub fn check_partner_reflection(samples: usize, seed: u64) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..samples {
        let s = random_strict_spec(&mut rng, 4, 8);
        let partner = complement_partner(&s);
        let g = interesting_factor(&s);
        let h = interesting_factor(&partner);
        let expected = (s.j + s.k - 1) as i64;
        let found = find_reflection(&g, &h)?;
        if found != Some(expected) {
            return Err(fail(
                "partner reflection",
                format!("sample {idx}: found {found:?}, expected {expected}"),
            ));
        }
        let cond = theorem2_condition(
            &matching_numbers(&s),
            &matching_numbers(&partner),
            s.j,
            s.k as i64,
            s.k as i64,
            expected,
        );
        if !cond {
            return Err(fail(
                "partner reflection",
                format!("sample {idx}: matching condition failed at c={expected}"),
            ));
        }
    }
    Ok(CheckOutcome {
        name: "complementary-partner reflection shift",
        cases: samples,
    })
}

/// Every feasible family tuple with entries ≤ bound reflects with exactly
/// the stated shift, and the matching condition agrees.
pub fn check_families(bound: u64) -> Result<CheckOutcome> {
    let mut cases = 0;
    for prop in [5u8, 6, 7] {
        for r in 0..=bound {
            for s in 0..=bound {
                for t in 0..=bound {
                    for u in 0..=bound {
                        let report = match verify_family(prop, r, s, t, u) {
                            Ok(rep) => rep,
                            Err(Error::InfeasibleFamily(_)) => continue,
                            Err(e) => return Err(e),
                        };
                        cases += 1;
                        if !report.verified {
                            return Err(fail(
                                "families",
                                format!("prop {prop} at ({r},{s},{t},{u}): {report:?}"),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(CheckOutcome {
        name: "reflection families (all feasible tuples)",
        cases,
    })
}

/// The worked colouring/orientation instance: P_G(6) = 8520 = C(6,3)·426.
pub fn check_acyclic_instance() -> Result<CheckOutcome> {
    let g = from_params(&ThreeCliqueParams::new(1, 1, 1, 0, 0, 0))?;
    let h = from_params(&ThreeCliqueParams::new(0, 0, 0, 1, 1, 1))?;
    let lhs = chromatic_polynomial(&g).eval_i64(6);
    if lhs != BigInt::from(8520) {
        return Err(fail("acyclic instance", format!("P_G(6) = {lhs} != 8520")));
    }
    let orientations = acyclic_orientations_bruteforce(&to_simple_graph(&h))?;
    if orientations != BigInt::from(426) {
        return Err(fail(
            "acyclic instance",
            format!("orientation count {orientations} != 426"),
        ));
    }
    if acyclic_count(&h) != BigInt::from(426) {
        return Err(fail("acyclic instance", "sign formula disagrees".into()));
    }
    if !reflection_count_identity(&g, &h, 5)? {
        return Err(fail("acyclic instance", "count identity failed".into()));
    }
    Ok(CheckOutcome {
        name: "worked colouring/orientation instance",
        cases: 1,
    })
}

/// Stanley's identity (−1)^n P(−1) = #acyclic orientations over the small
/// test corpus (every graph within the orientation guard).
pub fn check_stanley() -> Result<CheckOutcome> {
    let mut corpus: Vec<SimpleGraph> = vec![
        SimpleGraph::new(1, [])?,
        SimpleGraph::new(2, [(0, 1)])?,
        SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)])?,
        SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)])?,
        SimpleGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?,
        SimpleGraph::new(6, [(0, 1), (2, 3), (4, 5)])?,
        SimpleGraph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)])?,
    ];
    for j in 1..=3usize {
        for k in j..=(7 - j) {
            for s in exhaustive_specs(j, k) {
                let g = to_simple_graph(&s);
                if g.edge_count() <= 18 {
                    corpus.push(g);
                }
            }
        }
    }
    let cases = corpus.len();
    for (idx, g) in corpus.into_iter().enumerate() {
        let p = chromatic_poly_bruteforce(&g)?;
        let sign = if g.n % 2 == 1 { -1 } else { 1 };
        let lhs = p.eval_i64(-1) * sign;
        let rhs = acyclic_orientations_bruteforce(&g)?;
        if lhs != rhs {
            return Err(fail(
                "stanley",
                format!("graph {idx} ({} vertices): {lhs} != {rhs}", g.n),
            ));
        }
    }
    Ok(CheckOutcome {
        name: "acyclic-orientation identity over the corpus",
        cases,
    })
}

/// Runs the cubic constructor over the full coefficient grid
/// {−1,0,1} × [−bound,bound]², checking success, the printed constraints,
/// the exact certificate, and determinism across a second run.
pub fn check_alphan_grid(bound: i64) -> Result<CheckOutcome> {
    let mut cases = 0;
    for a2 in -1..=1i64 {
        for a1 in -bound..=bound {
            for a0 in -bound..=bound {
                let q = IntPoly::from_coeffs_i64(&[a0, a1, a2, 1]);
                let res = alpha_plus_n(&q)?;
                let again = alpha_plus_n(&q)?;
                if res.params != again.params || res.total_shift != again.total_shift {
                    return Err(fail(
                        "alphan grid",
                        format!("({a2},{a1},{a0}): nondeterministic result"),
                    ));
                }
                let i = res.state.i;
                if res.n < 2 * i + 3 || res.total_shift < 0 {
                    return Err(fail(
                        "alphan grid",
                        format!("({a2},{a1},{a0}): constraint violation {res:?}"),
                    ));
                }
                if res.factor != q.shift(-res.total_shift) {
                    return Err(fail(
                        "alphan grid",
                        format!("({a2},{a1},{a0}): certificate mismatch"),
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(CheckOutcome {
        name: "cubic constructor grid",
        cases,
    })
}

/// Floating sanity on top of the exact certificates: for the `count` grid
/// cubics with the smallest biclique, every root α of q drives P_G(α+N)
/// below 1e−6 relative to the coefficient scale.
pub fn check_numeric_roots(count: usize, bound: i64) -> Result<CheckOutcome> {
    // deterministic pick: smallest k first, ties by coefficient tuple
    let mut grid = Vec::new();
    for a2 in -1..=1i64 {
        for a1 in -bound..=bound {
            for a0 in -bound..=bound {
                let q = IntPoly::from_coeffs_i64(&[a0, a1, a2, 1]);
                let res = alpha_plus_n(&q)?;
                grid.push((res.params.k(), (a2, a1, a0), res));
            }
        }
    }
    grid.sort_by_key(|(k, tuple, _)| (*k, *tuple));
    grid.truncate(count);
    for (_, tuple, res) in &grid {
        let spec = from_params(&res.params)?;
        let p_g = chromatic_polynomial(&spec);
        let tolerance = 1e-6 * p_g.coeff_scale().max(1.0);
        let roots = cubic_roots_f64(&res.input)?;
        let shift = res.total_shift.to_f64().expect("shift fits f64");
        for alpha in roots {
            let value = eval_complex(&p_g, alpha + shift);
            // NaN must fail too
            if !matches!(value.norm().partial_cmp(&tolerance), Some(std::cmp::Ordering::Less)) {
                return Err(fail(
                    "numeric roots",
                    format!(
                        "{tuple:?}: |P_G(alpha+N)| = {} >= {tolerance}",
                        value.norm()
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome {
        name: "floating root evaluation sanity",
        cases: grid.len(),
    })
}

/// Matching-equivalent complements embedded in two host sizes translate by
/// exactly the host difference.
pub fn check_translation_pairs(samples: usize, seed: u64) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..samples {
        let base = random_spec(&mut rng, 4, 8);
        let delta = rng.gen_range(0..=4usize);
        let wider = BicliqueSpec::new(
            base.j,
            base.k + delta,
            base.complement_edges.iter().copied(),
        )?;
        let g = interesting_factor(&base);
        let h = interesting_factor(&wider);
        let found = find_translation(&g, &h)?;
        if found != Some(delta as i64) {
            return Err(fail(
                "translation pairs",
                format!("sample {idx}: found {found:?}, expected {delta}"),
            ));
        }
    }
    Ok(CheckOutcome {
        name: "matching-equivalent translation shift",
        cases: samples,
    })
}

/// All checks at the given budget, in a fixed order.
pub fn run_all(samples: usize, seed: u64) -> Vec<(&'static str, Result<CheckOutcome>)> {
    vec![
        ("eq1", check_chromatic_vs_oracle(samples, seed)),
        ("eq2", check_factor_routes(3)),
        ("lemma3", check_complement_transform(samples, seed ^ 1)),
        ("prop4", check_partner_reflection(samples, seed ^ 2)),
        ("families", check_families(4)),
        ("acyclic", check_acyclic_instance()),
        ("stanley", check_stanley()),
        ("alphan", check_alphan_grid(10)),
        ("numeric", check_numeric_roots(50, 10)),
        ("prop1", check_translation_pairs(samples.min(200), seed ^ 3)),
    ]
}
