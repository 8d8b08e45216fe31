//! Constructive realization of any monic integer cubic as an integer shift
//! of a biclique chromatic root, with an exact identity certificate.
//!
//! The pipeline: reduce the cubic so its x² coefficient lies in {−1,0,1},
//! pick one of three parameter assignments for a (3,k)-biclique, scan the
//! free integers (i, n) deterministically until all six counts are
//! non-negative, then certify g(x) = q(x−N) coefficient-for-coefficient.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::chromatic::three_clique_factor_signed;
use crate::error::{Error, Result};
use crate::graph::ThreeCliqueParams;
use crate::poly::{bigint_to_f64, IntPoly};

/// Default cap on the scan variable; far beyond anything desk-scale inputs
/// need.
pub const SCAN_CAP: i64 = 10_000;

/// A monic cubic with x² coefficient in {−1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCubic {
    pub a2: i8,
    pub a1: BigInt,
    pub a0: BigInt,
}

impl ReducedCubic {
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(vec![
            self.a0.clone(),
            self.a1.clone(),
            BigInt::from(self.a2),
            BigInt::one(),
        ])
    }
}

/// Which of the three parameter assignments was used (labelled by the
/// reduced x² coefficient: 1 ↔ −1, 2 ↔ 0, 3 ↔ +1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchState {
    pub case: u8,
    pub t: i64,
    pub i: i64,
}

/// One feasible scan point: the six counts, the case-level shift n, and
/// where the scan found it.
#[derive(Clone, Debug)]
pub struct CaseSolution {
    pub params: ThreeCliqueParams,
    pub n: BigInt,
    pub state: SearchState,
}

/// Result of the full construction, including the exact certificate
/// g(x) = q(x − N).
#[derive(Clone, Debug)]
pub struct AlphaNResult {
    pub params: ThreeCliqueParams,
    /// Case-level shift: the interesting factor equals p_reduced(x − n).
    pub n: i64,
    /// Reduction shift: q(x) = p_reduced(x + n0).
    pub n0: i64,
    /// Total shift N = n0 + n; every root α of q has P_G(α + N) = 0.
    pub total_shift: i64,
    pub state: SearchState,
    /// The interesting factor of the constructed biclique.
    pub factor: IntPoly,
    /// The input cubic q.
    pub input: IntPoly,
    /// Always true on a returned result; a failed identity check aborts
    /// with a formula-integrity error instead.
    pub verified: bool,
}

/// Shifts a monic integer cubic to x² coefficient in {−1, 0, 1}.
///
/// Returns the reduced polynomial and the unique n0 with
/// a2(q) − 3·n0 ∈ {−1,0,1}; the identity q(x) = p_red(x + n0) is exact.
/// n0 is negative when a2(q) < −1, which [`alpha_plus_n`] absorbs via its
/// minimum-shift floor.
pub fn reduce_cubic(q: &IntPoly) -> Result<(ReducedCubic, i64)> {
    if q.degree() != Some(3) || !q.is_monic() {
        return Err(Error::InvalidCubic(format!("{q}")));
    }
    let a2 = q.coeff(2);
    let n0: BigInt = match a2.mod_floor(&BigInt::from(3)).to_i8().unwrap() {
        0 => &a2 / 3,
        1 => (&a2 - 1) / 3,
        _ => (&a2 + 1) / 3,
    };
    let n0 = n0
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("reduction shift for a2 = {a2}")))?;
    let reduced = q.shift(-n0);
    let r2 = reduced.coeff(2).to_i8().expect("reduced a2 in {-1,0,1}");
    debug_assert!((-1..=1).contains(&r2));
    Ok((
        ReducedCubic {
            a2: r2,
            a1: reduced.coeff(1),
            a0: reduced.coeff(0),
        },
        n0,
    ))
}

fn case1_values(a0: &BigInt, a1: &BigInt, i: &BigInt, n: &BigInt) -> [BigInt; 6] {
    let sq = (2 * n + a0) * (2 * n + a0);
    [
        &sq - 11 * a0 + 35 + a1 - (8 * a0 - 45) * i - (16 * i + 24) * n + 16 * i * i,
        -2 * i + n - 3,
        &sq - 13 * a0 + 46 + a1 - (8 * a0 - 53) * i - (16 * i + 28) * n + 16 * i * i,
        i + 1,
        -&sq + 12 * a0 - 41 - a1 + (8 * a0 - 50) * i + (16 * i + 27) * n - 16 * i * i,
        i.clone(),
    ]
}

fn case2_values(a0: &BigInt, a1: &BigInt, i: &BigInt, n: &BigInt) -> [BigInt; 6] {
    let sq = (n + a0) * (n + a0);
    [
        &sq + a1 + 14 + 19 * i + 9 * i * i - (6 * i + 8) * n - (6 * i + 6) * a0,
        -2 * i + n - 3,
        &sq + a1 + 20 + 25 * i + 9 * i * i - (6 * i + 10) * n - (6 * i + 8) * a0,
        i + 1,
        -&sq - a1 - 18 - 23 * i - 9 * i * i + (6 * i + 10) * n + (6 * i + 7) * a0,
        i.clone(),
    ]
}

fn case3_values(a0: &BigInt, a1: &BigInt, i: &BigInt, n: &BigInt) -> [BigInt; 6] {
    let sq = a0 * a0;
    [
        &sq + 5 - a0 + a1 + (3 - 4 * a0) * i - 2 * n + 4 * i * i,
        -2 * i + n - 3,
        &sq + 6 - 3 * a0 + a1 + (7 - 4 * a0) * i - 2 * n + 4 * i * i,
        i + 1,
        -&sq - 7 + 2 * a0 - a1 - (6 - 4 * a0) * i + 3 * n - 4 * i * i,
        i.clone(),
    ]
}

/// The six raw (possibly negative) case values at a scan point.
pub fn case_values(case: u8, p: &ReducedCubic, i: &BigInt, n: &BigInt) -> [BigInt; 6] {
    match case {
        1 => case1_values(&p.a0, &p.a1, i, n),
        2 => case2_values(&p.a0, &p.a1, i, n),
        3 => case3_values(&p.a0, &p.a1, i, n),
        _ => unreachable!("case id is 1, 2 or 3"),
    }
}

fn to_params(vals: &[BigInt; 6]) -> Result<ThreeCliqueParams> {
    let mut out = [0u64; 6];
    for (slot, v) in out.iter_mut().zip(vals) {
        debug_assert!(!v.is_negative());
        *slot = v
            .to_u64()
            .ok_or_else(|| Error::Overflow(format!("biclique count {v}")))?;
    }
    Ok(ThreeCliqueParams::new(
        out[0], out[1], out[2], out[3], out[4], out[5],
    ))
}

/// Walks the deterministic feasibility scan, collecting up to `limit`
/// solutions in scan order.
///
/// Cases 1 and 2 iterate t = 0,1,2,… with n = ⌈−a0/2⌉ + 2i + t (case 1)
/// or n = −a0 + 3i + t (case 2); the inner i loop stops as soon as the
/// first count goes negative, which it does monotonically (slope −3
/// resp. −5 in i). Case 3 iterates i = 0,1,2,… and takes each n in the
/// window forced by the three sign conditions.
pub fn feasible_solutions(
    p: &ReducedCubic,
    min_n: &BigInt,
    limit: usize,
) -> Result<Vec<CaseSolution>> {
    let mut found = Vec::new();
    if limit == 0 {
        return Ok(found);
    }
    match p.a2 {
        -1 | 0 => {
            let case: u8 = if p.a2 == -1 { 1 } else { 2 };
            // case 1: n = ceil(-a0/2) + 2i + t; case 2: n = -a0 + 3i + t
            let base = if case == 1 {
                (-&p.a0).div_ceil(&BigInt::from(2))
            } else {
                -&p.a0
            };
            let i_step = if case == 1 { 2 } else { 3 };
            for t in 0..=SCAN_CAP {
                let mut i = BigInt::zero();
                loop {
                    let n = &base + i_step * &i + t;
                    let vals = case_values(case, p, &i, &n);
                    if vals[0].is_negative() {
                        break;
                    }
                    if vals.iter().all(|v| !v.is_negative())
                        && n >= 2 * &i + 3
                        && &n >= min_n
                    {
                        found.push(CaseSolution {
                            params: to_params(&vals)?,
                            n,
                            state: SearchState {
                                case,
                                t,
                                i: i.to_i64().unwrap_or(i64::MAX),
                            },
                        });
                        if found.len() == limit {
                            return Ok(found);
                        }
                    }
                    i += 1;
                }
            }
        }
        1 => {
            for i in 0..=SCAN_CAP {
                let ib = BigInt::from(i);
                let sq = &p.a0 * &p.a0;
                let four_i2 = 4 * &ib * &ib;
                let upper_a: BigInt =
                    &sq + 5 - &p.a0 + &p.a1 + (3 - 4 * &p.a0) * &ib + &four_i2;
                let upper_c: BigInt =
                    &sq + 6 - 3 * &p.a0 + &p.a1 + (7 - 4 * &p.a0) * &ib + &four_i2;
                let lower_e: BigInt =
                    &sq + 7 - 2 * &p.a0 + &p.a1 + (6 - 4 * &p.a0) * &ib + &four_i2;
                let n_high = upper_a.min(upper_c).div_floor(&BigInt::from(2));
                let n_low = lower_e
                    .div_ceil(&BigInt::from(3))
                    .max(BigInt::from(2 * i + 3))
                    .max(min_n.clone());
                let mut n = n_low;
                while n <= n_high {
                    let vals = case_values(3, p, &ib, &n);
                    if vals.iter().any(|v| v.is_negative()) {
                        return Err(Error::FormulaIntegrity(format!(
                            "case 3 window produced a negative count at i={i}, n={n}"
                        )));
                    }
                    // record t as the substitution variable a0/2 - i, floored
                    let paper_t: BigInt = &p.a0 - 2 * &ib;
                    let t = paper_t
                        .div_floor(&BigInt::from(2))
                        .to_i64()
                        .unwrap_or(i64::MIN);
                    found.push(CaseSolution {
                        params: to_params(&vals)?,
                        n: n.clone(),
                        state: SearchState { case: 3, t, i },
                    });
                    if found.len() == limit {
                        return Ok(found);
                    }
                    n += 1;
                }
            }
        }
        other => {
            return Err(Error::InvalidCubic(format!(
                "reduced x^2 coefficient {other} outside {{-1,0,1}}"
            )))
        }
    }
    if found.is_empty() {
        Err(Error::ScanExhausted {
            case: match p.a2 {
                -1 => 1,
                0 => 2,
                _ => 3,
            },
            cap: SCAN_CAP,
        })
    } else {
        Ok(found)
    }
}

/// First feasible assignment in scan order with all six counts ≥ 0,
/// n ≥ 2i+3 and n ≥ min_n, with the identity g(x) = p(x−n) verified
/// exactly before returning.
pub fn construct_case(p: &ReducedCubic, min_n: &BigInt) -> Result<CaseSolution> {
    let sol = feasible_solutions(p, min_n, 1)?
        .pop()
        .expect("feasible_solutions returns at least one or errors");
    let n = sol
        .n
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("case shift n = {}", sol.n)))?;
    let vals = sol.params.as_array().map(BigInt::from);
    let g = three_clique_factor_signed(&vals);
    let expected = p.to_poly().shift(-n);
    if g != expected {
        return Err(Error::FormulaIntegrity(format!(
            "case {} at (t={}, i={}): factor {} != shifted target {}",
            sol.state.case, sol.state.t, sol.state.i, g, expected
        )));
    }
    Ok(sol)
}

/// Full pipeline: reduce, construct, certify. The returned total shift
/// N = n0 + n is ≥ 0, and the certificate g(x) = q(x−N) is exact, so every
/// root α of q satisfies P_G(α + N) = 0 for the constructed biclique.
pub fn alpha_plus_n(q: &IntPoly) -> Result<AlphaNResult> {
    let (reduced, n0) = reduce_cubic(q)?;
    let min_n = BigInt::from((-n0).max(0));
    let sol = construct_case(&reduced, &min_n)?;
    let n = sol.n.to_i64().expect("checked in construct_case");
    let total = n0
        .checked_add(n)
        .ok_or_else(|| Error::Overflow("total shift n0 + n".into()))?;
    let vals = sol.params.as_array().map(BigInt::from);
    let factor = three_clique_factor_signed(&vals);
    let expected = q.shift(-total);
    if factor != expected {
        return Err(Error::FormulaIntegrity(format!(
            "certificate mismatch: {factor} != {expected}"
        )));
    }
    Ok(AlphaNResult {
        params: sol.params,
        n,
        n0,
        total_shift: total,
        state: sol.state,
        factor,
        input: q.clone(),
        verified: true,
    })
}

/// Roots of a monic cubic as complex doubles (Durand–Kerner iteration).
/// Used only for the redundant numeric sanity check on top of the exact
/// certificate.
pub fn cubic_roots_f64(q: &IntPoly) -> Result<[Complex64; 3]> {
    if q.degree() != Some(3) || !q.is_monic() {
        return Err(Error::InvalidCubic(format!("{q}")));
    }
    let coeffs: Vec<f64> = q.coeffs().iter().map(bigint_to_f64).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots = [seed, seed * seed, seed * seed * seed];
    for _ in 0..200 {
        let mut delta: f64 = 0.0;
        for idx in 0..3 {
            let z = roots[idx];
            let mut denom = Complex64::new(1.0, 0.0);
            for (jdx, w) in roots.iter().enumerate() {
                if jdx != idx {
                    denom *= z - w;
                }
            }
            let step = eval(z) / denom;
            roots[idx] = z - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    Ok(roots)
}

/// Horner evaluation of an exact polynomial at a complex double.
pub fn eval_complex(p: &IntPoly, z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in p.coeffs().iter().rev() {
        acc = acc * z + bigint_to_f64(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(a2: i64, a1: i64, a0: i64) -> IntPoly {
        IntPoly::from_coeffs_i64(&[a0, a1, a2, 1])
    }

    #[test]
    fn reduce_examples() {
        let (p, n0) = reduce_cubic(&cubic(5, 1, 1)).unwrap();
        assert_eq!(n0, 2);
        assert_eq!(p.to_poly(), cubic(-1, -7, 11));
        // q(x) = p_red(x + n0)
        assert_eq!(p.to_poly().shift(2), cubic(5, 1, 1));

        let (p, n0) = reduce_cubic(&cubic(0, 0, 0)).unwrap();
        assert_eq!((p.a2, n0), (0, 0));
        assert_eq!(p.to_poly(), cubic(0, 0, 0));

        let (p, n0) = reduce_cubic(&cubic(-1, 4, -9)).unwrap();
        assert_eq!((p.a2, n0), (-1, 0));
        assert_eq!(p.to_poly(), cubic(-1, 4, -9));

        let (p, n0) = reduce_cubic(&cubic(-4, 0, 0)).unwrap();
        assert_eq!((p.a2, n0), (-1, -1));
        assert_eq!(p.to_poly().shift(-1), cubic(-4, 0, 0));
    }

    #[test]
    fn reduce_rejects_non_cubics() {
        assert!(reduce_cubic(&IntPoly::from_coeffs_i64(&[1, 1])).is_err());
        assert!(reduce_cubic(&IntPoly::from_coeffs_i64(&[1, 0, 0, 2])).is_err());
        assert!(reduce_cubic(&IntPoly::zero()).is_err());
    }

    #[test]
    fn frozen_case2_instance() {
        // q = x^3: deterministic scan lands on (t=9, i=2), n = 15
        let res = alpha_plus_n(&cubic(0, 0, 0)).unwrap();
        assert_eq!(res.params.as_array(), [13, 8, 1, 3, 5, 2]);
        assert_eq!(res.n, 15);
        assert_eq!(res.n0, 0);
        assert_eq!(res.total_shift, 15);
        assert_eq!(res.state, SearchState { case: 2, t: 9, i: 2 });
        // g = (x - 15)^3
        assert_eq!(res.factor, cubic(0, 0, 0).shift(-15));
        assert_eq!(res.factor.coeff(2), BigInt::from(-45));
        assert!(res.verified);
    }

    #[test]
    fn named_case1_instance() {
        // q = x^3 + 5x^2 + x + 1 reduces with n0 = 2 and certifies
        let res = alpha_plus_n(&cubic(5, 1, 1)).unwrap();
        assert_eq!(res.n0, 2);
        assert_eq!(res.total_shift, res.n + 2);
        assert_eq!(res.state.case, 1);
        assert_eq!(res.factor, cubic(5, 1, 1).shift(-res.total_shift));
        // constraints from the construction
        let i = res.state.i;
        assert_eq!(res.params.b as i64, res.n - 2 * i - 3);
        assert_eq!(res.params.d as i64, i + 1);
        assert_eq!(res.params.f as i64, i);
        assert!(res.n >= 2 * i + 3);
    }

    #[test]
    fn negative_reduction_shift_absorbed() {
        // a2 = -4 gives n0 = -1, so min_n = 1 and N = n - 1 >= 0
        let res = alpha_plus_n(&cubic(-4, 0, 0)).unwrap();
        assert_eq!(res.n0, -1);
        assert!(res.n >= 1);
        assert_eq!(res.total_shift, res.n - 1);
        assert!(res.total_shift >= 0);
        assert_eq!(res.factor, cubic(-4, 0, 0).shift(-res.total_shift));
    }

    #[test]
    fn case3_instance() {
        let res = alpha_plus_n(&cubic(1, 0, 0)).unwrap();
        assert_eq!(res.state.case, 3);
        assert_eq!(res.factor, cubic(1, 0, 0).shift(-res.total_shift));
    }

    #[test]
    fn arbitrary_leading_coefficients() {
        for a2 in -9..=9i64 {
            for a1 in [-3, 0, 5] {
                for a0 in [-3, 0, 5] {
                    let q = cubic(a2, a1, a0);
                    let res = alpha_plus_n(&q).unwrap();
                    assert!(res.total_shift >= 0, "{q}");
                    assert_eq!(res.factor, q.shift(-res.total_shift), "{q}");
                    assert_eq!(res.n0 + res.n, res.total_shift);
                }
            }
        }
    }

    #[test]
    fn min_n_is_monotone_floor() {
        for (a2, a1, a0) in [(0i64, 2, -3), (-1, -5, 4), (1, 0, 7)] {
            let (p, _) = reduce_cubic(&cubic(a2, a1, a0)).unwrap();
            let mut last = -1;
            for m in (0..=50).step_by(5) {
                let sol = construct_case(&p, &BigInt::from(m)).unwrap();
                let n = sol.n.to_i64().unwrap();
                assert!(n >= m, "n = {n} < min_n = {m}");
                assert!(n >= last);
                last = n;
            }
        }
    }

    #[test]
    fn identity_holds_at_every_feasible_point() {
        // not only the scan's first: the derivation is an identity in (i, n)
        for (a2, a1, a0) in [(-1i64, 3, -5), (0, -4, 7), (1, 2, 6)] {
            let (p, _) = reduce_cubic(&cubic(a2, a1, a0)).unwrap();
            let sols = feasible_solutions(&p, &BigInt::zero(), 100).unwrap();
            assert_eq!(sols.len(), 100);
            for sol in sols {
                let vals = sol.params.as_array().map(BigInt::from);
                let g = three_clique_factor_signed(&vals);
                let n = sol.n.to_i64().unwrap();
                assert_eq!(g, p.to_poly().shift(-n), "at {:?}", sol.state);
            }
        }
    }

    #[test]
    fn identity_is_algebraic_in_i_and_n() {
        // raw case values need not be non-negative for the identity itself
        for case in 1u8..=3 {
            let p = match case {
                1 => ReducedCubic { a2: -1, a1: BigInt::from(4), a0: BigInt::from(-6) },
                2 => ReducedCubic { a2: 0, a1: BigInt::from(-2), a0: BigInt::from(9) },
                _ => ReducedCubic { a2: 1, a1: BigInt::from(7), a0: BigInt::from(3) },
            };
            for (i, n) in [(0i64, 0i64), (2, -5), (7, 40), (13, 6), (1, 99)] {
                let vals = case_values(case, &p, &BigInt::from(i), &BigInt::from(n));
                let g = three_clique_factor_signed(&vals);
                assert_eq!(g, p.to_poly().shift(-n), "case {case} at i={i}, n={n}");
            }
        }
    }

    #[test]
    fn cubic_roots_converge() {
        // roots of (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let roots = cubic_roots_f64(&cubic(-6, 11, -6)).unwrap();
        let mut re: Vec<f64> = roots.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (got, want) in re.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-9);
        }
        for z in roots {
            assert!(z.im.abs() < 1e-9);
        }
    }
}
