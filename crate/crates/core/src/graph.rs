//! Bicliques represented through their bipartite complement, the 6-tuple
//! parameterization of (3,k)-bicliques, and structural transforms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A (j,k)-biclique, given by the edge set of its bipartite complement Ḡ
/// inside K_{j,k}.
///
/// Left vertices are indexed 0..j, right vertices 0..k. An edge (l, r) of
/// `complement_edges` is a *non*-edge of the biclique itself; every pair not
/// listed is a bridging edge of G.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicliqueSpec {
    pub j: usize,
    pub k: usize,
    pub complement_edges: BTreeSet<(usize, usize)>,
}

impl BicliqueSpec {
    pub fn new(
        j: usize,
        k: usize,
        complement_edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if j == 0 || k == 0 {
            return Err(Error::InvalidSpec(format!(
                "clique sizes must be positive, got j={j}, k={k}"
            )));
        }
        let mut edges = BTreeSet::new();
        for (l, r) in complement_edges {
            if l >= j || r >= k {
                return Err(Error::InvalidSpec(format!(
                    "complement edge ({l},{r}) out of range for K_{{{j},{k}}}"
                )));
            }
            if !edges.insert((l, r)) {
                return Err(Error::InvalidSpec(format!(
                    "duplicate complement edge ({l},{r})"
                )));
            }
        }
        Ok(BicliqueSpec {
            j,
            k,
            complement_edges: edges,
        })
    }

    /// True when every vertex of Ḡ has degree ≥ 1, i.e. no vertex of the
    /// biclique is adjacent to every other vertex.
    pub fn is_strict(&self) -> bool {
        let mut left = vec![false; self.j];
        let mut right = vec![false; self.k];
        for &(l, r) in &self.complement_edges {
            left[l] = true;
            right[r] = true;
        }
        left.into_iter().all(|b| b) && right.into_iter().all(|b| b)
    }

    /// Ḡ-degree of each left vertex.
    pub fn left_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.j];
        for &(l, _) in &self.complement_edges {
            d[l] += 1;
        }
        d
    }

    /// Ḡ-degree of each right vertex.
    pub fn right_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.k];
        for &(_, r) in &self.complement_edges {
            d[r] += 1;
        }
        d
    }

    /// The same biclique with the two sides exchanged.
    pub fn swap_sides(&self) -> BicliqueSpec {
        BicliqueSpec {
            j: self.k,
            k: self.j,
            complement_edges: self.complement_edges.iter().map(|&(l, r)| (r, l)).collect(),
        }
    }

    /// Side-swapped if necessary so that j ≤ k.
    pub fn normalized(&self) -> BicliqueSpec {
        if self.j <= self.k {
            self.clone()
        } else {
            self.swap_sides()
        }
    }

    /// Parse the plain-text edge-list form: first line "j k", then one
    /// "l r" pair per line.
    pub fn from_edge_list_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list input".into()))?;
        let mut head = header.split_whitespace();
        let j: usize = head
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line {header:?}")))?;
        let k: usize = head
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line {header:?}")))?;
        if head.next().is_some() {
            return Err(Error::Parse(format!("bad header line {header:?}")));
        }
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let l: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            let r: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("bad edge line {line:?}")));
            }
            edges.push((l, r));
        }
        BicliqueSpec::new(j, k, edges)
    }
}

/// The 6-tuple (a,b,c,d,e,f) describing a (3,k)-biclique: a,b,c count right
/// vertices adjacent (in G) to exactly v1, v2, v3 respectively; d,e,f count
/// those adjacent to exactly {v2,v3}, {v1,v3}, {v1,v2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreeCliqueParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub f: u64,
}

impl ThreeCliqueParams {
    pub fn new(a: u64, b: u64, c: u64, d: u64, e: u64, f: u64) -> Self {
        ThreeCliqueParams { a, b, c, d, e, f }
    }

    pub fn as_array(&self) -> [u64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// Size of the right clique: k = a+b+c+d+e+f.
    pub fn k(&self) -> u64 {
        self.as_array().iter().sum()
    }
}

/// Materializes the biclique described by a 6-tuple. Right vertices are laid
/// out in blocks [a|b|c|d|e|f]; complement edges join each block to the
/// left vertices its class is *not* adjacent to in G.
pub fn from_params(p: &ThreeCliqueParams) -> Result<BicliqueSpec> {
    if p.k() == 0 {
        return Err(Error::DegenerateParameters);
    }
    let k = usize::try_from(p.k())
        .map_err(|_| Error::Overflow("right-clique size exceeds usize".into()))?;
    let mut edges = BTreeSet::new();
    let blocks: [(u64, &[usize]); 6] = [
        (p.a, &[1, 2]),
        (p.b, &[0, 2]),
        (p.c, &[0, 1]),
        (p.d, &[0]),
        (p.e, &[1]),
        (p.f, &[2]),
    ];
    let mut idx = 0usize;
    for (count, targets) in blocks {
        for _ in 0..count {
            for &t in targets {
                edges.insert((t, idx));
            }
            idx += 1;
        }
    }
    debug_assert_eq!(idx, k);
    BicliqueSpec::new(3, k, edges)
}

/// The biclique whose bridging edges are exactly the non-bridging pairs of
/// `s`: complement_edges ↦ K_{j,k} minus complement_edges. An involution.
pub fn complement_partner(s: &BicliqueSpec) -> BicliqueSpec {
    let mut edges = BTreeSet::new();
    for l in 0..s.j {
        for r in 0..s.k {
            if !s.complement_edges.contains(&(l, r)) {
                edges.insert((l, r));
            }
        }
    }
    BicliqueSpec {
        j: s.j,
        k: s.k,
        complement_edges: edges,
    }
}

/// Outcome of removing universal vertices (the Ḡ-isolated ones).
///
/// With p = removed_left + removed_right, the chromatic polynomial of the
/// original graph is (x)_p · P_reduced(x − p); `reduced` is `None` exactly
/// when every vertex was universal (the graph was complete on j+k vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripResult {
    pub removed_left: usize,
    pub removed_right: usize,
    pub reduced: Option<BicliqueSpec>,
}

impl StripResult {
    pub fn removed_total(&self) -> usize {
        self.removed_left + self.removed_right
    }
}

/// Removes every vertex that is isolated in Ḡ (universal in G) from both
/// sides. Removing such vertices cannot isolate others, so one pass
/// normalizes fully.
pub fn strip_universal(s: &BicliqueSpec) -> StripResult {
    let ldeg = s.left_degrees();
    let rdeg = s.right_degrees();
    let lmap: Vec<Option<usize>> = {
        let mut next = 0;
        ldeg.iter()
            .map(|&d| {
                if d > 0 {
                    let i = next;
                    next += 1;
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    };
    let rmap: Vec<Option<usize>> = {
        let mut next = 0;
        rdeg.iter()
            .map(|&d| {
                if d > 0 {
                    let i = next;
                    next += 1;
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    };
    let kept_left = lmap.iter().flatten().count();
    let kept_right = rmap.iter().flatten().count();
    let removed_left = s.j - kept_left;
    let removed_right = s.k - kept_right;
    if kept_left == 0 || kept_right == 0 {
        // Ḡ has no edges at all: G was the complete graph K_{j+k}.
        debug_assert!(s.complement_edges.is_empty());
        return StripResult {
            removed_left: s.j,
            removed_right: s.k,
            reduced: None,
        };
    }
    let edges = s
        .complement_edges
        .iter()
        .map(|&(l, r)| (lmap[l].unwrap(), rmap[r].unwrap()))
        .collect();
    StripResult {
        removed_left,
        removed_right,
        reduced: Some(BicliqueSpec {
            j: kept_left,
            k: kept_right,
            complement_edges: edges,
        }),
    }
}

/// Plain graph used as oracle input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidSpec(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidSpec(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// The biclique as a plain graph: both cliques filled in, bridging pairs
/// are exactly the non-complement pairs. Left vertices come first.
pub fn to_simple_graph(s: &BicliqueSpec) -> SimpleGraph {
    let n = s.j + s.k;
    let mut edges = BTreeSet::new();
    for u in 0..s.j {
        for v in (u + 1)..s.j {
            edges.insert((u, v));
        }
    }
    for u in 0..s.k {
        for v in (u + 1)..s.k {
            edges.insert((s.j + u, s.j + v));
        }
    }
    for l in 0..s.j {
        for r in 0..s.k {
            if !s.complement_edges.contains(&(l, r)) {
                edges.insert((l, s.j + r));
            }
        }
    }
    SimpleGraph { n, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: u64, b: u64, c: u64, d: u64, e: u64, f: u64) -> ThreeCliqueParams {
        ThreeCliqueParams::new(a, b, c, d, e, f)
    }

    #[test]
    fn from_params_block_rule() {
        // (1,1,1,0,0,0): K_{3,3} minus a perfect matching (the 6-cycle)
        let s = from_params(&params(1, 1, 1, 0, 0, 0)).unwrap();
        assert_eq!((s.j, s.k), (3, 3));
        assert_eq!(s.complement_edges.len(), 6);
        assert_eq!(s.left_degrees(), vec![2, 2, 2]);
        assert_eq!(s.right_degrees(), vec![2, 2, 2]);

        // (0,0,0,1,1,1): a perfect matching of K_{3,3}
        let s = from_params(&params(0, 0, 0, 1, 1, 1)).unwrap();
        assert_eq!(s.complement_edges.len(), 3);
        assert_eq!(s.left_degrees(), vec![1, 1, 1]);

        assert!(matches!(
            from_params(&params(0, 0, 0, 0, 0, 0)),
            Err(Error::DegenerateParameters)
        ));
    }

    #[test]
    fn from_params_degree_formulas() {
        // deg(v1) = b+c+d, deg(v2) = a+c+e, deg(v3) = a+b+f, over [0,4]^6
        for a in 0..=4u64 {
            for b in 0..=4u64 {
                for c in 0..=4u64 {
                    for d in 0..=4u64 {
                        for e in 0..=4u64 {
                            for f in 0..=4u64 {
                                let p = params(a, b, c, d, e, f);
                                if p.k() == 0 {
                                    continue;
                                }
                                let s = from_params(&p).unwrap();
                                let deg = s.left_degrees();
                                assert_eq!(deg[0] as u64, b + c + d);
                                assert_eq!(deg[1] as u64, a + c + e);
                                assert_eq!(deg[2] as u64, a + b + f);
                                assert_eq!(
                                    s.complement_edges.len() as u64,
                                    2 * a + 2 * b + 2 * c + d + e + f
                                );
                                assert_eq!(s.j as u64 + s.k as u64, p.k() + 3);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partner_is_involution() {
        let s = from_params(&params(0, 0, 0, 1, 1, 1)).unwrap();
        let partner = complement_partner(&s);
        assert_eq!(partner.complement_edges.len(), 9 - 3);
        assert_eq!(complement_partner(&partner), s);

        let empty = BicliqueSpec::new(2, 3, []).unwrap();
        assert_eq!(complement_partner(&empty).complement_edges.len(), 6);
    }

    #[test]
    fn strip_universal_cases() {
        // j=2, k=3, one complement edge: one left and two right vertices
        // are universal.
        let s = BicliqueSpec::new(2, 3, [(0, 0)]).unwrap();
        let r = strip_universal(&s);
        assert_eq!((r.removed_left, r.removed_right), (1, 2));
        let reduced = r.reduced.unwrap();
        assert_eq!((reduced.j, reduced.k), (1, 1));
        assert_eq!(reduced.complement_edges.len(), 1);

        // strict specs are untouched
        let s = from_params(&params(1, 1, 1, 0, 0, 0)).unwrap();
        assert!(s.is_strict());
        let r = strip_universal(&s);
        assert_eq!((r.removed_left, r.removed_right), (0, 0));
        assert_eq!(r.reduced.unwrap(), s);

        // empty complement: everything universal, G complete
        let s = BicliqueSpec::new(1, 1, []).unwrap();
        let r = strip_universal(&s);
        assert_eq!(r.removed_total(), 2);
        assert!(r.reduced.is_none());
    }

    #[test]
    fn to_simple_graph_counts() {
        let s = BicliqueSpec::new(1, 1, [(0, 0)]).unwrap();
        assert_eq!(to_simple_graph(&s).edge_count(), 0);
        let s = BicliqueSpec::new(1, 1, []).unwrap();
        assert_eq!(to_simple_graph(&s).edge_count(), 1);
        let s = from_params(&params(1, 1, 1, 0, 0, 0)).unwrap();
        assert_eq!(to_simple_graph(&s).edge_count(), 9);
    }

    #[test]
    fn complement_edge_budget() {
        for spec in [
            BicliqueSpec::new(2, 3, [(0, 0), (1, 2)]).unwrap(),
            from_params(&params(2, 0, 1, 0, 3, 1)).unwrap(),
        ] {
            let g = to_simple_graph(&spec);
            let bridging = g
                .edges
                .iter()
                .filter(|&&(u, v)| u < spec.j && v >= spec.j)
                .count();
            assert_eq!(spec.complement_edges.len() + bridging, spec.j * spec.k);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(BicliqueSpec::new(0, 3, []).is_err());
        assert!(BicliqueSpec::new(2, 2, [(2, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, [(0, 5)]).is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let s = BicliqueSpec::from_edge_list_text("2 3\n0 0\n1 2\n").unwrap();
        assert_eq!((s.j, s.k), (2, 3));
        assert_eq!(s.complement_edges.len(), 2);
        assert!(BicliqueSpec::from_edge_list_text("").is_err());
        assert!(BicliqueSpec::from_edge_list_text("2\n").is_err());
        assert!(BicliqueSpec::from_edge_list_text("2 2\n0 7\n").is_err());
    }
}
