//! All-subsets Cheeger constant. Deliberately independent of the optimized
//! metrics: it reads only the edge list and does its own counting.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::multigraph::{ExpansionCertificate, MultiGraph, VertexId, VertexSubset};
use crate::rational::Rational;

/// Default vertex cap for the brute-force oracle.
pub const DEFAULT_CAP: usize = 16;

/// Hard ceiling: masks are `u64` and enumeration is `2^n`.
pub const MAX_CAP: usize = 24;

struct EdgeTable {
    ids: Vec<VertexId>,
    /// `(i, j, multiplicity)` with `i <= j` as indices into `ids`.
    edges: Vec<(usize, usize, u64)>,
}

impl EdgeTable {
    fn new(g: &MultiGraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: VertexId| ids.binary_search(&v).expect("edge endpoint is a vertex");
        let edges = g.edges().map(|(u, v, m)| (index(u), index(v), m as u64)).collect();
        EdgeTable { ids, edges }
    }

    /// `(e(X, X̄), vol(X), vol(X̄))` for the set encoded by `mask`.
    fn measure(&self, mask: u64) -> (u64, u64, u64) {
        let (mut cut, mut inside, mut outside) = (0, 0, 0);
        for &(i, j, m) in &self.edges {
            let a = mask >> i & 1 == 1;
            let b = mask >> j & 1 == 1;
            match (a, b) {
                (true, true) => inside += 2 * m,
                (false, false) => outside += 2 * m,
                _ => {
                    cut += m;
                    inside += m;
                    outside += m;
                }
            }
        }
        (cut, inside, outside)
    }

    fn subset(&self, mask: u64) -> VertexSubset {
        (0..self.ids.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.ids[i]).collect()
    }
}

/// Exact Cheeger constant by enumerating every nonempty proper subset.
///
/// A set with empty boundary scores `0`; a set with nonzero boundary always
/// has both sides of positive volume. The witness is the minimiser with the
/// smallest mask (vertices in ascending id order, lowest id in bit 0).
pub fn brute_force_cheeger(g: &MultiGraph, cap: usize) -> Result<(Rational, ExpansionCertificate)> {
    let n = g.vertex_count();
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(Error::TooLarge { vertices: n, cap });
    }
    if n < 2 {
        return Err(Error::Degenerate("the Cheeger constant needs at least two vertices".into()));
    }
    let table = EdgeTable::new(g);
    let full = (1u64 << n) - 1;
    // best as (cut, smaller volume, mask); value cut/vol, or 0 when cut is 0
    let mut best: Option<(u64, u64, u64)> = None;
    for mask in 1..full {
        let (cut, a, b) = table.measure(mask);
        let small = a.min(b);
        let better = match best {
            None => true,
            Some((bc, bs, _)) => compare(cut, small, bc, bs) == Ordering::Less,
        };
        if better {
            best = Some((cut, small, mask));
            if cut == 0 {
                break;
            }
        }
    }
    let (cut, small, mask) = best.expect("n >= 2 gives a proper subset");
    let cert = ExpansionCertificate {
        witness_set: table.subset(mask),
        boundary_edges: cut,
        min_side_volume: small,
        h_value: value(cut, small),
    };
    Ok((cert.h_value, cert))
}

/// Edge expansion of one set computed by the oracle's own counting.
pub fn brute_force_expansion(g: &MultiGraph, x: &VertexSubset) -> Result<Rational> {
    let table = EdgeTable::new(g);
    if table.ids.len() > 64 {
        return Err(Error::TooLarge { vertices: table.ids.len(), cap: 64 });
    }
    let mut mask = 0u64;
    for v in x.iter() {
        let i = table.ids.binary_search(&v).map_err(|_| Error::UnknownVertex(v))?;
        mask |= 1 << i;
    }
    let (cut, a, b) = table.measure(mask);
    if cut > 0 || a.min(b) > 0 {
        Ok(value(cut, a.min(b)))
    } else if x.is_empty() || mask.count_ones() as usize == table.ids.len() {
        Err(Error::Degenerate("expansion of an empty or full set".into()))
    } else {
        Ok(Rational::from_integer(0))
    }
}

fn value(cut: u64, small: u64) -> Rational {
    if cut == 0 {
        Rational::from_integer(0)
    } else {
        Rational::new(cut as i128, small as i128)
    }
}

fn compare(c1: u64, s1: u64, c2: u64, s2: u64) -> Ordering {
    match (c1 == 0, c2 == 0) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => (c1 as u128 * s2 as u128).cmp(&(c2 as u128 * s1 as u128)),
    }
}
