//! Chromatic polynomials of bicliques from matching numbers, the degree-j
//! "interesting factor", the direct j=3 inclusion–exclusion form, and the
//! colouring/orientation count identities.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{BicliqueSpec, ThreeCliqueParams};
use crate::matchings::matching_numbers;
use crate::poly::{binomial_big, falling_factorial, IntPoly};

/// P_G(x) = Σᵢ mⁱ (x)_{j+k−i}, summing one falling factorial per matching
/// of the bipartite complement.
pub fn chromatic_polynomial(s: &BicliqueSpec) -> IntPoly {
    let m = matching_numbers(s);
    let total = s.j + s.k;
    let mut p = IntPoly::zero();
    for (i, mi) in m.counts().iter().enumerate() {
        p = p.add(&falling_factorial(total - i, 0).scale(mi));
    }
    p
}

/// The monic degree-min(j,k) factor g with P_G(x) = (x)_max(j,k) · g(x):
/// g(x) = Σᵢ mⁱ (x−k)_{j−i}. When j > k the sides swap silently so the
/// factored-out clique is the larger one.
pub fn interesting_factor(s: &BicliqueSpec) -> IntPoly {
    let s = s.normalized();
    interesting_factor_right_clique(&s)
}

/// As [`interesting_factor`] but always factoring out the right clique
/// (x)_k, regardless of which side is larger. The result has degree j.
///
/// The identity P_G = (x)_k · g is exact for any j, k ≥ 1, so this is the
/// form the (3,k)-family relations use even when k < 3.
pub fn interesting_factor_right_clique(s: &BicliqueSpec) -> IntPoly {
    let m = matching_numbers(s);
    let mut g = IntPoly::zero();
    for (i, mi) in m.counts().iter().enumerate() {
        g = g.add(&falling_factorial(s.j - i, s.k as i64).scale(mi));
    }
    g
}

/// Signed inclusion–exclusion core of the j=3 interesting factor:
///
/// g = (x−a−e−f)(x−b−d−f)(x−c−d−e)
///   − (x−a−b−d−e−f)(x−c−d−e) − (x−a−c−d−e−f)(x−b−d−f)
///   − (x−b−c−d−e−f)(x−a−e−f) + 2(x−a−b−c−d−e−f).
///
/// Accepts arbitrary (possibly negative) integers; the identity behind the
/// cubic-root construction holds as polynomial algebra for any inputs.
pub fn three_clique_factor_signed(vals: &[BigInt; 6]) -> IntPoly {
    let [a, b, c, d, e, f] = vals;
    let lin = |sum: BigInt| IntPoly::new(vec![-sum, BigInt::one()]);
    let p1 = lin(a + e + f);
    let p2 = lin(b + d + f);
    let p3 = lin(c + d + e);
    let p12 = lin(a + b + d + e + f);
    let p13 = lin(a + c + d + e + f);
    let p23 = lin(b + c + d + e + f);
    let pall = lin(a + b + c + d + e + f);
    p1.mul(&p2)
        .mul(&p3)
        .sub(&p12.mul(&p3))
        .sub(&p13.mul(&p2))
        .sub(&p23.mul(&p1))
        .add(&pall.scale(&BigInt::from(2)))
}

/// The j=3 interesting factor straight from the 6-tuple, no graph or
/// matching enumeration involved. Always a monic cubic; agrees with
/// [`interesting_factor`] on every parameter tuple.
pub fn interesting_factor_3k(p: &ThreeCliqueParams) -> IntPoly {
    let [a, b, c, d, e, f] = p.as_array();
    three_clique_factor_signed(&[
        BigInt::from(a),
        BigInt::from(b),
        BigInt::from(c),
        BigInt::from(d),
        BigInt::from(e),
        BigInt::from(f),
    ])
}

/// (−1)^{j+k} · P_G(−1): the number of acyclic orientations of the biclique.
pub fn acyclic_count(s: &BicliqueSpec) -> BigInt {
    let value = chromatic_polynomial(s).eval_i64(-1);
    if (s.j + s.k) % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Checks P_G(c+1) = C(c+1, k) · (−1)^{j+k} · P_H(−1) exactly. Both specs
/// must describe (j,k)-bicliques with the same j and k after normalization.
pub fn reflection_count_identity(
    s_g: &BicliqueSpec,
    s_h: &BicliqueSpec,
    c: i64,
) -> Result<bool> {
    let g = s_g.normalized();
    let h = s_h.normalized();
    if (g.j, g.k) != (h.j, h.k) {
        return Err(Error::InvalidSpec(format!(
            "count identity needs matching clique sizes, got ({},{}) vs ({},{})",
            g.j, g.k, h.j, h.k
        )));
    }
    let lhs = chromatic_polynomial(&g).eval_i64(c + 1);
    let rhs = binomial_big(&BigInt::from(c + 1), g.k) * acyclic_count(&h);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement_partner, from_params};
    use crate::poly::to_complete_graph_basis;

    fn params(a: u64, b: u64, c: u64, d: u64, e: u64, f: u64) -> ThreeCliqueParams {
        ThreeCliqueParams::new(a, b, c, d, e, f)
    }

    fn poly(v: &[i64]) -> IntPoly {
        IntPoly::from_coeffs_i64(v)
    }

    #[test]
    fn chromatic_small_cases() {
        // one complement edge in K_{1,1}: two isolated vertices
        let s = BicliqueSpec::new(1, 1, [(0, 0)]).unwrap();
        assert_eq!(chromatic_polynomial(&s), poly(&[0, 0, 1]));

        // one complement edge in K_{1,2}: path on 3 vertices, x(x-1)^2
        let s = BicliqueSpec::new(1, 2, [(0, 0)]).unwrap();
        assert_eq!(chromatic_polynomial(&s), poly(&[0, 1, -2, 1]));

        // 6-cycle complement: (x)_3 (x^3 - 6x^2 + 14x - 13)
        let s = from_params(&params(1, 1, 1, 0, 0, 0)).unwrap();
        let expected = falling_factorial(3, 0).mul(&poly(&[-13, 14, -6, 1]));
        assert_eq!(chromatic_polynomial(&s), expected);
    }

    #[test]
    fn interesting_factor_examples() {
        let s = from_params(&params(1, 1, 1, 0, 0, 0)).unwrap();
        assert_eq!(interesting_factor(&s), poly(&[-13, 14, -6, 1]));

        let s = from_params(&params(0, 0, 0, 1, 1, 1)).unwrap();
        assert_eq!(interesting_factor(&s), poly(&[-32, 29, -9, 1]));

        for k in 1..=5usize {
            let s = BicliqueSpec::new(1, k, []).unwrap();
            assert_eq!(interesting_factor(&s), poly(&[-(k as i64), 1]));
        }
    }

    #[test]
    fn factor_divides_chromatic_polynomial() {
        for spec in [
            from_params(&params(1, 1, 1, 0, 0, 0)).unwrap(),
            from_params(&params(2, 0, 1, 3, 0, 2)).unwrap(),
            BicliqueSpec::new(4, 2, [(0, 0), (1, 1), (3, 0)]).unwrap(),
        ] {
            let n = spec.normalized();
            let p = chromatic_polynomial(&n);
            let g = interesting_factor(&n);
            assert!(g.is_monic());
            assert_eq!(g.degree(), Some(n.j));
            let quotient = p.exact_div(&falling_factorial(n.k, 0)).unwrap();
            assert_eq!(quotient, g);
        }
    }

    #[test]
    fn three_clique_factor_matches_matching_route() {
        for tuple in [
            (1, 1, 1, 0, 0, 0),
            (0, 0, 0, 0, 0, 1),
            (2, 0, 0, 0, 0, 1),
            (1, 2, 0, 3, 0, 1),
            (0, 0, 0, 1, 1, 1),
        ] {
            let p = params(tuple.0, tuple.1, tuple.2, tuple.3, tuple.4, tuple.5);
            let s = from_params(&p).unwrap();
            assert_eq!(
                interesting_factor_3k(&p),
                interesting_factor_right_clique(&s),
                "tuple {tuple:?}"
            );
        }
    }

    #[test]
    fn three_clique_factor_below_convention() {
        // k=1 < j=3: the right-clique factor is still an exact divisor
        let p = params(0, 0, 0, 0, 0, 1);
        let s = from_params(&p).unwrap();
        let g = interesting_factor_3k(&p);
        assert_eq!(g.degree(), Some(3));
        let full = chromatic_polynomial(&s);
        assert_eq!(full.exact_div(&falling_factorial(s.k, 0)).unwrap(), g);
    }

    #[test]
    fn acyclic_count_examples() {
        let k2 = BicliqueSpec::new(1, 1, []).unwrap();
        assert_eq!(acyclic_count(&k2), BigInt::from(2));

        let two_isolated = BicliqueSpec::new(1, 1, [(0, 0)]).unwrap();
        assert_eq!(acyclic_count(&two_isolated), BigInt::from(1));

        let s = from_params(&params(0, 0, 0, 1, 1, 1)).unwrap();
        assert_eq!(acyclic_count(&s), BigInt::from(426));
    }

    #[test]
    fn count_identity_worked_instance() {
        let g = from_params(&params(1, 1, 1, 0, 0, 0)).unwrap();
        let h = from_params(&params(0, 0, 0, 1, 1, 1)).unwrap();
        assert_eq!(chromatic_polynomial(&g).eval_i64(6), BigInt::from(8520));
        assert!(reflection_count_identity(&g, &h, 5).unwrap());
        assert!(!reflection_count_identity(&g, &g, 5).unwrap());
        assert!(reflection_count_identity(&g, &complement_partner(&g), 5).unwrap());
    }

    #[test]
    fn basis_coefficients_are_matching_numbers() {
        let s = from_params(&params(1, 2, 0, 1, 0, 2)).unwrap();
        let m = matching_numbers(&s);
        let basis = to_complete_graph_basis(&chromatic_polynomial(&s));
        let total = s.j + s.k;
        for (i, mi) in m.counts().iter().enumerate() {
            assert_eq!(&basis.coeff(total - i), mi);
        }
    }
}
