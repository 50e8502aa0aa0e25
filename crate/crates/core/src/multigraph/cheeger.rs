use std::cmp::Ordering;

use super::dense::{find_in_order, DenseView};
use super::{ExpansionCertificate, MultiGraph};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest vertex count accepted by the exhaustive subset searches.
pub const ENUMERATION_LIMIT: usize = 30;

/// Exact Cheeger constant with an attaining vertex set.
///
/// Only sets `X` with `G[X]` connected and `vol(X) <= vol(X̄)` are visited, in
/// order of increasing size and lexicographically within a size; the first
/// minimiser is the witness. A disconnected graph gets `0`, witnessed by its
/// first component.
pub fn cheeger_constant(g: &MultiGraph) -> Result<(Rational, ExpansionCertificate)> {
    if g.vertex_count() < 2 {
        return Err(Error::Degenerate(
            "the Cheeger constant needs at least two vertices".into(),
        ));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        let first = comps.into_iter().next().unwrap();
        let vol = g.volume(&first)? as u64;
        let rest = 2 * g.edge_count() as u64 - vol;
        let cert = ExpansionCertificate::new(first, 0, vol.min(rest));
        return Ok((Rational::from_integer(0), cert));
    }

    let dense = DenseView::new(g, ENUMERATION_LIMIT)?;
    let n = dense.len();
    // best as (cut, vol, mask)
    let mut best: Option<(u64, u64, u64)> = None;
    find_in_order(n, 1..=n - 1, |mask| {
        let vol = dense.volume(mask);
        if 2 * vol > dense.total_volume || !dense.is_connected(mask) {
            return false;
        }
        let cut = dense.cut(mask);
        let better = match best {
            None => true,
            Some((bc, bv, _)) => {
                (cut as u128 * bv as u128).cmp(&(bc as u128 * vol as u128)) == Ordering::Less
            }
        };
        if better {
            best = Some((cut, vol, mask));
        }
        false
    });
    // a connected graph with two or more vertices always has a singleton on the smaller side
    let (cut, vol, mask) = best.expect("some connected set has the smaller volume");
    let cert = ExpansionCertificate::new(dense.subset(mask), cut, vol);
    Ok((cert.h_value, cert))
}

/// Outcome of [`is_kappa_expander`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpanderCheck {
    pub holds: bool,
    pub cheeger: Rational,
    /// A set with expansion below the threshold, when `holds` is false.
    pub violation: Option<ExpansionCertificate>,
}

/// Whether `h_G(X) >= kappa` for all `X`, i.e. the Cheeger constant is at least `kappa`.
pub fn is_kappa_expander(g: &MultiGraph, kappa: Rational) -> Result<ExpanderCheck> {
    let (cheeger, cert) = cheeger_constant(g)?;
    let holds = cheeger >= kappa;
    Ok(ExpanderCheck {
        holds,
        cheeger,
        violation: (!holds).then_some(cert),
    })
}
