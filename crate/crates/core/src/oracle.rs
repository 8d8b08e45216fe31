//! Deliberately naive brute-force computations used to validate every
//! formula-based path at desk scale. Guards are hard errors, never silent
//! truncations.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::matchings::MatchingNumbers;
use crate::poly::IntPoly;

const CHROMATIC_VERTEX_GUARD: usize = 12;
const MATCHING_EDGE_GUARD: usize = 20;
const ORIENTATION_EDGE_GUARD: usize = 18;

/// Internal compact graph: adjacency bitmasks over active vertices.
/// Coefficients stay within i64 for ≤ 12 vertices (bounded by the unsigned
/// Stirling numbers of K_12).
#[derive(Clone)]
struct MaskGraph {
    adj: Vec<u16>,
    active: u16,
}

impl MaskGraph {
    fn from_simple(g: &SimpleGraph) -> Self {
        let mut adj = vec![0u16; g.n];
        for &(u, v) in &g.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        MaskGraph {
            adj,
            active: if g.n == 0 { 0 } else { (1u16 << g.n) - 1 },
        }
    }

    fn vertex_count(&self) -> u32 {
        self.active.count_ones()
    }

    fn edge_count(&self) -> u32 {
        let mut total = 0;
        let mut rest = self.active;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (self.adj[v] & rest).count_ones();
        }
        total
    }
}

fn poly_sub(a: &mut Vec<i64>, b: &[i64]) {
    if b.len() > a.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// x^m as a coefficient vector.
fn monomial(m: u32) -> Vec<i64> {
    let mut v = vec![0i64; m as usize + 1];
    v[m as usize] = 1;
    v
}

/// (x)_m as a coefficient vector.
fn falling(m: u32) -> Vec<i64> {
    let mut out = vec![1i64];
    for t in 0..m as i64 {
        out = poly_mul(&out, &[-t, 1]);
    }
    out
}

/// Deletion–contraction on bitmask graphs: P(G) = P(G−e) − P(G/e), with
/// complete and edgeless base cases, isolated-vertex stripping, and
/// component splitting. Contraction collapses multi-edges by construction
/// (bitmask union).
fn chromatic_rec(g: &MaskGraph) -> Vec<i64> {
    // strip isolated vertices: each contributes a factor of x
    let mut isolated = 0u32;
    let mut work = g.clone();
    let mut rest = work.active;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if work.adj[v] & work.active & !(1 << v) == 0 {
            work.active &= !(1 << v as u16);
            isolated += 1;
        }
    }
    let n = work.vertex_count();
    if n == 0 {
        return monomial(isolated);
    }
    // split off one connected component
    let start = work.active.trailing_zeros() as usize;
    let mut comp = 1u16 << start;
    loop {
        let mut grown = comp;
        let mut scan = comp;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            grown |= work.adj[v] & work.active;
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }
    if comp != work.active {
        let mut left = work.clone();
        left.active = comp;
        let mut right = work.clone();
        right.active &= !comp;
        let product = poly_mul(&chromatic_rec(&left), &chromatic_rec(&right));
        return poly_mul(&product, &monomial(isolated));
    }
    // complete base case
    let nn = work.vertex_count();
    if work.edge_count() == nn * (nn - 1) / 2 {
        return poly_mul(&falling(nn), &monomial(isolated));
    }
    // pick an edge incident to a maximum-degree vertex
    let (mut best_v, mut best_deg) = (usize::MAX, 0);
    let mut scan = work.active;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let deg = (work.adj[v] & work.active & !(1 << v)).count_ones();
        if deg > best_deg {
            best_deg = deg;
            best_v = v;
        }
    }
    let u = best_v;
    let v = (work.adj[u] & work.active & !(1 << u)).trailing_zeros() as usize;

    // deletion
    let mut deleted = work.clone();
    deleted.adj[u] &= !(1 << v);
    deleted.adj[v] &= !(1 << u);
    let mut result = chromatic_rec(&deleted);

    // contraction: fold v into u
    let mut contracted = work.clone();
    let v_neighbours = contracted.adj[v] & contracted.active & !(1 << u);
    contracted.adj[u] |= v_neighbours;
    contracted.adj[u] &= !(1 << u);
    let mut nb = v_neighbours;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        contracted.adj[w] |= 1 << u;
    }
    contracted.active &= !(1 << v as u16);
    poly_sub(&mut result, &chromatic_rec(&contracted));

    poly_mul(&result, &monomial(isolated))
}

/// Exact chromatic polynomial by deletion–contraction. Guard: n ≤ 12.
pub fn chromatic_poly_bruteforce(g: &SimpleGraph) -> Result<IntPoly> {
    if g.n > CHROMATIC_VERTEX_GUARD {
        return Err(Error::SizeGuard {
            what: "vertex count for deletion-contraction",
            limit: CHROMATIC_VERTEX_GUARD,
            got: g.n,
        });
    }
    let coeffs = chromatic_rec(&MaskGraph::from_simple(g));
    Ok(IntPoly::new(coeffs.into_iter().map(BigInt::from).collect()))
}

/// Counts proper q-colourings by enumerating all q^n assignments.
/// Only sensible at tiny sizes; used to spot-check the oracle itself.
pub fn count_colorings_direct(g: &SimpleGraph, q: u64) -> Result<BigInt> {
    if g.n > 8 || q > 6 {
        return Err(Error::SizeGuard {
            what: "direct colouring enumeration",
            limit: 8,
            got: g.n.max(q as usize),
        });
    }
    if q == 0 {
        // no colours: only the empty graph on zero vertices has a colouring
        return Ok(BigInt::from(u32::from(g.n == 0)));
    }
    let mut count = BigInt::from(0u32);
    let mut assignment = vec![0u64; g.n];
    'outer: loop {
        if g.edges
            .iter()
            .all(|&(u, v)| assignment[u] != assignment[v])
        {
            count += 1;
        }
        for slot in assignment.iter_mut() {
            *slot += 1;
            if *slot < q {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Ok(count)
}

/// Matching counts of an explicit bipartite edge set, by inspecting every
/// edge subset. Guard: |edges| ≤ 20.
pub fn matchings_bruteforce(
    j: usize,
    k: usize,
    edges: &[(usize, usize)],
) -> Result<MatchingNumbers> {
    if edges.len() > MATCHING_EDGE_GUARD {
        return Err(Error::SizeGuard {
            what: "edge count for matching enumeration",
            limit: MATCHING_EDGE_GUARD,
            got: edges.len(),
        });
    }
    for &(l, r) in edges {
        if l >= j || r >= k {
            return Err(Error::InvalidSpec(format!(
                "edge ({l},{r}) out of range for K_{{{j},{k}}}"
            )));
        }
    }
    let limit = j.min(k);
    let mut counts = vec![BigInt::from(0u32); limit + 1];
    let m = edges.len();
    // remap incident vertices to compact indices so masks fit 64 bits
    // whatever j and k are (at most 2*20 endpoints)
    let mut left_ids = std::collections::BTreeMap::new();
    let mut right_ids = std::collections::BTreeMap::new();
    let compact: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(l, r)| {
            let next_l = left_ids.len();
            let next_r = right_ids.len();
            (
                *left_ids.entry(l).or_insert(next_l),
                *right_ids.entry(r).or_insert(next_r),
            )
        })
        .collect();
    for subset in 0u32..(1 << m) {
        let mut lmask = 0u64;
        let mut rmask = 0u64;
        let mut ok = true;
        let mut size = 0usize;
        for (idx, &(l, r)) in compact.iter().enumerate() {
            if subset & (1 << idx) == 0 {
                continue;
            }
            if lmask & (1 << l) != 0 || rmask & (1 << r) != 0 {
                ok = false;
                break;
            }
            lmask |= 1 << l;
            rmask |= 1 << r;
            size += 1;
        }
        if ok {
            counts[size] += 1;
        }
    }
    Ok(MatchingNumbers::new(counts))
}

/// Counts acyclic orientations by enumerating all 2^|E| orientations and
/// testing each for a directed cycle. Guard: |E| ≤ 18.
pub fn acyclic_orientations_bruteforce(g: &SimpleGraph) -> Result<BigInt> {
    if g.edge_count() > ORIENTATION_EDGE_GUARD {
        return Err(Error::SizeGuard {
            what: "edge count for orientation enumeration",
            limit: ORIENTATION_EDGE_GUARD,
            got: g.edge_count(),
        });
    }
    // isolated vertices orient nothing; remap the incident ones to compact
    // indices so the neighbour masks stay in range (at most 2*18 endpoints)
    let mut ids = std::collections::BTreeMap::new();
    let edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let nu = ids.len();
            let u = *ids.entry(u).or_insert(nu);
            let nv = ids.len();
            let v = *ids.entry(v).or_insert(nv);
            (u, v)
        })
        .collect();
    let n = ids.len();
    let m = edges.len();
    let mut count = 0u64;
    let mut out = vec![0u64; n];
    let mut indeg = vec![0u8; n];
    let mut queue = vec![0usize; n];
    for bits in 0u32..(1 << m) {
        out.fill(0);
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if bits & (1 << idx) == 0 {
                out[u] |= 1 << v;
            } else {
                out[v] |= 1 << u;
            }
        }
        // Kahn peeling: acyclic iff every vertex can be removed
        indeg.fill(0);
        for &mask in &out {
            let mut rest = mask;
            while rest != 0 {
                indeg[rest.trailing_zeros() as usize] += 1;
                rest &= rest - 1;
            }
        }
        let mut top = 0;
        for (v, &deg) in indeg.iter().enumerate() {
            if deg == 0 {
                queue[top] = v;
                top += 1;
            }
        }
        let mut removed = 0;
        while top > 0 {
            top -= 1;
            let v = queue[top];
            removed += 1;
            let mut rest = out[v];
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue[top] = w;
                    top += 1;
                }
            }
        }
        if removed == n {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{from_params, to_simple_graph, ThreeCliqueParams};
    use crate::poly::falling_factorial;

    fn poly(v: &[i64]) -> IntPoly {
        IntPoly::from_coeffs_i64(v)
    }

    #[test]
    fn chromatic_bruteforce_basics() {
        let k2 = SimpleGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(chromatic_poly_bruteforce(&k2).unwrap(), poly(&[0, -1, 1]));

        let empty3 = SimpleGraph::new(3, []).unwrap();
        assert_eq!(chromatic_poly_bruteforce(&empty3).unwrap(), poly(&[0, 0, 0, 1]));

        let triangle = SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            chromatic_poly_bruteforce(&triangle).unwrap(),
            falling_factorial(3, 0)
        );

        let s = from_params(&ThreeCliqueParams::new(1, 1, 1, 0, 0, 0)).unwrap();
        let expected = falling_factorial(3, 0).mul(&poly(&[-13, 14, -6, 1]));
        assert_eq!(
            chromatic_poly_bruteforce(&to_simple_graph(&s)).unwrap(),
            expected
        );

        let too_big = SimpleGraph::new(13, []).unwrap();
        assert!(chromatic_poly_bruteforce(&too_big).is_err());
    }

    #[test]
    fn chromatic_bruteforce_matches_direct_counting() {
        let graphs = [
            SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap(),
            SimpleGraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
            SimpleGraph::new(6, [(0, 1), (2, 3), (4, 5), (1, 2)]).unwrap(),
        ];
        for g in graphs {
            let p = chromatic_poly_bruteforce(&g).unwrap();
            for q in 0..=4u64 {
                assert_eq!(
                    p.eval_i64(q as i64),
                    count_colorings_direct(&g, q).unwrap(),
                    "q = {q}"
                );
            }
        }
    }

    #[test]
    fn matchings_bruteforce_examples() {
        let single = matchings_bruteforce(1, 1, &[(0, 0)]).unwrap();
        assert_eq!(single.counts(), &[BigInt::from(1), BigInt::from(1)]);

        let k22: Vec<_> = (0..2).flat_map(|l| (0..2).map(move |r| (l, r))).collect();
        let m = matchings_bruteforce(2, 2, &k22).unwrap();
        assert_eq!(
            m.counts(),
            &[BigInt::from(1), BigInt::from(4), BigInt::from(2)]
        );

        // the 6-cycle as K_{3,3} minus a perfect matching
        let s = from_params(&ThreeCliqueParams::new(1, 1, 1, 0, 0, 0)).unwrap();
        let edges: Vec<_> = s.complement_edges.iter().copied().collect();
        let m = matchings_bruteforce(3, 3, &edges).unwrap();
        assert_eq!(
            m.counts(),
            &[1, 6, 9, 2].map(BigInt::from)
        );

        // sparse labels far beyond 64 still work via endpoint remapping
        let wide = matchings_bruteforce(100, 100, &[(0, 99), (99, 0), (50, 50)]).unwrap();
        assert_eq!(wide.get(1), BigInt::from(3));
        assert_eq!(wide.get(3), BigInt::from(1));

        assert!(matchings_bruteforce(5, 5, &vec![(0, 0); 21]).is_err());
    }

    #[test]
    fn acyclic_orientation_examples() {
        let edge = SimpleGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            acyclic_orientations_bruteforce(&edge).unwrap(),
            BigInt::from(2)
        );

        // isolated vertices and sparse labels change nothing
        let sparse = SimpleGraph::new(90, [(3, 77), (77, 89)]).unwrap();
        assert_eq!(
            acyclic_orientations_bruteforce(&sparse).unwrap(),
            BigInt::from(4)
        );
        let lonely = SimpleGraph::new(4, []).unwrap();
        assert_eq!(
            acyclic_orientations_bruteforce(&lonely).unwrap(),
            BigInt::from(1)
        );

        let triangle = SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            acyclic_orientations_bruteforce(&triangle).unwrap(),
            BigInt::from(6)
        );

        let s = from_params(&ThreeCliqueParams::new(0, 0, 0, 1, 1, 1)).unwrap();
        let g = to_simple_graph(&s);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(
            acyclic_orientations_bruteforce(&g).unwrap(),
            BigInt::from(426)
        );
    }

    #[test]
    fn stanley_identity_spot_checks() {
        for g in [
            SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
            SimpleGraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap(),
            SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap(),
        ] {
            let p = chromatic_poly_bruteforce(&g).unwrap();
            let sign = if g.n % 2 == 1 { -1 } else { 1 };
            assert_eq!(
                p.eval_i64(-1) * sign,
                acyclic_orientations_bruteforce(&g).unwrap()
            );
        }
    }
}
