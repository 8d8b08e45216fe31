//! Matching-number sequences of bipartite complements and the two
//! inclusion–exclusion transforms on them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::BicliqueSpec;
use crate::poly::{binomial, falling_factorial_int};

/// The sequence (m⁰, m¹, …, m^L) of i-matching counts, L = min(j,k).
/// m⁰ is always 1 (the empty matching).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingNumbers {
    counts: Vec<BigInt>,
}

impl MatchingNumbers {
    pub fn new(counts: Vec<BigInt>) -> Self {
        debug_assert!(counts.first().is_some_and(One::is_one));
        MatchingNumbers { counts }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.counts.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Padded copy of length `len` (Theorem-style checks index 0..=j
    /// regardless of realizability).
    pub fn padded(&self, len: usize) -> Vec<BigInt> {
        let mut out = self.counts.clone();
        out.resize(len, BigInt::zero());
        out
    }
}

/// Counts the i-matchings of Ḡ for every i, by branching over the vertices
/// of the larger side with a memoized bitmask over the smaller side.
pub fn matching_numbers(s: &BicliqueSpec) -> MatchingNumbers {
    let small = s.j.min(s.k);
    let limit = small;
    // the memo state is a bitmask over the smaller side
    assert!(small <= 64, "matching enumeration supports min(j,k) <= 64");
    let big = s.j.max(s.k);
    let mut adj = vec![0u64; big];
    for &(l, r) in &s.complement_edges {
        let (pos, mask_bit) = if s.j <= s.k { (r, l) } else { (l, r) };
        adj[pos] |= 1u64 << mask_bit;
    }

    // counts[sz] of matchings using vertices pos.. with `used` small-side mask
    fn go(
        pos: usize,
        used: u64,
        adj: &[u64],
        limit: usize,
        memo: &mut HashMap<(usize, u64), Vec<BigInt>>,
    ) -> Vec<BigInt> {
        if pos == adj.len() {
            let mut base = vec![BigInt::zero(); limit + 1];
            base[0] = BigInt::one();
            return base;
        }
        if let Some(hit) = memo.get(&(pos, used)) {
            return hit.clone();
        }
        // leave this vertex unmatched
        let mut out = go(pos + 1, used, adj, limit, memo);
        // or match it to each available neighbour
        let mut avail = adj[pos] & !used;
        while avail != 0 {
            let bit = avail & avail.wrapping_neg();
            avail ^= bit;
            let sub = go(pos + 1, used | bit, adj, limit, memo);
            for sz in 1..=limit {
                let add = sub[sz - 1].clone();
                out[sz] += add;
            }
        }
        memo.insert((pos, used), out.clone());
        out
    }

    let mut memo = HashMap::new();
    let counts = go(0, 0, &adj, limit, &mut memo);
    MatchingNumbers::new(counts)
}

/// Matching numbers of the K_{j,k}-complement of a graph with matching
/// numbers `m_h`, by the inclusion–exclusion identity
/// mⁱ = Σ_l (−1)^l m_h^l C(j−l, j−i) (k−l)_{i−l}.
///
/// Requires j ≤ k (normalize by swapping sides first). A negative output
/// entry means `m_h` was not realizable inside K_{j,k}.
pub fn complement_matching_numbers(
    m_h: &MatchingNumbers,
    j: usize,
    k: usize,
) -> Result<MatchingNumbers> {
    if j > k {
        return Err(Error::InvalidSpec(format!(
            "complement transform requires j <= k, got j={j}, k={k}"
        )));
    }
    let h = m_h.padded(j + 1);
    let mut out = Vec::with_capacity(j + 1);
    for i in 0..=j {
        let mut acc = BigInt::zero();
        for (l, ml) in h.iter().enumerate().take(i + 1) {
            let mut term = ml
                * binomial((j - l) as i64, (j - i) as i64)
                * falling_factorial_int(&BigInt::from((k - l) as i64), i - l);
            if l % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        if acc.sign() == num_bigint::Sign::Minus {
            return Err(Error::InconsistentMatchingNumbers { j, k, index: i });
        }
        out.push(acc);
    }
    Ok(MatchingNumbers::new(out))
}

/// The reflection condition of the matching-sequence theorem: true iff
/// m_gⁱ = Σ_l (−1)^l m_h^l C(j−l, j−i) (k_g+k_h+j−c−l−1)_{i−l} for every
/// 0 ≤ i ≤ j, evaluated exactly.
pub fn theorem2_condition(
    m_g: &MatchingNumbers,
    m_h: &MatchingNumbers,
    j: usize,
    k_g: i64,
    k_h: i64,
    c: i64,
) -> bool {
    let g = m_g.padded(j + 1);
    let h = m_h.padded(j + 1);
    for (i, expected) in g.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (l, ml) in h.iter().enumerate().take(i + 1) {
            let base = BigInt::from(k_g + k_h + j as i64 - c - l as i64 - 1);
            let mut term =
                ml * binomial((j - l) as i64, (j - i) as i64) * falling_factorial_int(&base, i - l);
            if l % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        if acc != *expected {
            return false;
        }
    }
    true
}
