//! Discriminants of genus-one fibrations on (2,2,2) forms.

use super::{ComponentKind, SurfaceModel};
use crate::error::{Error, Result};
use crate::fp::FactorProfile;
use crate::poly::{disc_binary_quadratic, disc_binary_quartic, MultiPoly};

/// For a (2,2,2) form in three binary blocks, the degree-24 binary form on block
/// `base` whose roots are the singular fibers: the quartic discriminant of the
/// quadratic discriminant over the two other blocks.
pub fn fibration_disc(f: &MultiPoly, base: usize) -> Result<MultiPoly> {
    if f.blocks().len() != 3 || f.blocks().iter().any(|b| b.vars.len() != 2) {
        return Err(Error::Format("fibration discriminants need a form on P1 x P1 x P1".into()));
    }
    if base >= 3 {
        return Err(Error::Parameter(format!("no block {base}")));
    }
    if f.is_zero() {
        return Ok(f.clone());
    }
    if f.multidegree() != Some(vec![2, 2, 2]) {
        return Err(Error::Degree("not a form of tridegree (2,2,2)".into()));
    }
    let others: Vec<usize> = (0..3).filter(|&b| b != base).collect();
    let q = disc_binary_quadratic(f, others[1])?;
    if q.is_zero() {
        return q.restrict_blocks(&[base]);
    }
    disc_binary_quartic(&q, others[0])?.restrict_blocks(&[base])
}

/// Factor profile mod `p` of the fibration discriminant of a (2,2,2) component.
pub fn fibration_profile(model: &SurfaceModel, surface: &str, base: usize, p: u64) -> Result<FactorProfile> {
    let c = model.component(surface)?;
    let ok = match c.kind {
        ComponentKind::Determinantal { .. } => model.tensor.shape().len() == 5,
        ComponentKind::BoxQuotient => true,
        _ => false,
    };
    if !ok {
        return Err(Error::Format(format!("{surface} is not a (2,2,2) form")));
    }
    let d = fibration_disc(&c.equations[0].reduce_mod(p), base)?;
    if d.is_zero() {
        return Err(Error::Degenerate(format!("fibration discriminant of {surface} vanishes mod {p}")));
    }
    d.binary_profile(0, p)
}
