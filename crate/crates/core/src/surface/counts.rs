//! Rank-singularity counts over the algebraic closure of `F_p`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Component, ComponentKind, SurfaceModel};
use crate::error::{Error, Result};
use crate::gb::{count_projective_zeros, PointCount};
use crate::poly::{det_of_form_matrix, MultiPoly};

#[derive(Clone, Debug, Serialize)]
pub struct SingularCount {
    pub surface: String,
    pub p: u64,
    /// `None` if the singular locus is not finite.
    pub count: Option<PointCount>,
}

impl SingularCount {
    pub fn distinct(&self) -> Option<usize> {
        self.count.as_ref().map(|c| c.distinct)
    }

    /// Rational points over `F_p, F_{p^2}, ..., F_{p^k}`.
    pub fn over_extensions(&self, k: usize) -> Option<Vec<usize>> {
        self.count.as_ref().map(|c| (1..=k).map(|i| c.rational(i)).collect())
    }
}

/// Flattening loci of a cube of linear forms: for each slot, where its 2x4 flattening has rank at most 1.
fn flattening_loci(model: &SurfaceModel, c: &Component, p: u64) -> Result<Vec<Vec<MultiPoly>>> {
    let e: Vec<MultiPoly> = super::substitute_factors(&model.tensor, &c.factors)?.iter().map(|f| f.reduce_mod(p)).collect();
    let mut loci = Vec::new();
    for slot in 0..3 {
        let row = |a: usize| -> Vec<&MultiPoly> {
            (0..8).filter(|o| (o >> (2 - slot)) & 1 == a).map(|o| &e[o]).collect()
        };
        let (r0, r1) = (row(0), row(1));
        let mut minors = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let m = r0[i].mul(r1[j]).sub(&r0[j].mul(r1[i]));
                if !m.is_zero() {
                    minors.push(m);
                }
            }
        }
        loci.push(minors);
    }
    Ok(loci)
}

/// Equations of the rank-singular locus of a component, reduced mod `p`, as a union of zero sets.
fn singular_loci(model: &SurfaceModel, c: &Component, p: u64) -> Result<Vec<Vec<MultiPoly>>> {
    match c.kind {
        ComponentKind::CubeDiscriminant => flattening_loci(model, c, p),
        ComponentKind::Determinantal { rows, cols } => {
            let n = model.tensor.shape()[rows];
            let k = model.tensor.shape()[cols];
            let ent: Vec<MultiPoly> =
                super::substitute_factors(&model.tensor, &c.factors)?.iter().map(|f| f.reduce_mod(p)).collect();
            if n == 2 {
                return Ok(vec![ent.into_iter().filter(|f| !f.is_zero()).collect()]);
            }
            // Rank at most n - 2: all (n-1)-minors vanish.
            let mut out = Vec::new();
            for dr in 0..n {
                for dc in 0..k {
                    let m: Vec<Vec<MultiPoly>> = (0..n)
                        .filter(|&i| i != dr)
                        .map(|i| (0..k).filter(|&j| j != dc).map(|j| ent[i * k + j].clone()).collect())
                        .collect();
                    let d = det_of_form_matrix(&m)?;
                    if !d.is_zero() && !out.contains(&d) {
                        out.push(d);
                    }
                }
            }
            Ok(vec![out])
        }
        ComponentKind::BoxQuotient => {
            let f = c.equations[0].reduce_mod(p);
            let mut out = vec![f.clone()];
            out.extend((0..f.nvars()).map(|i| f.derivative(i)).filter(|d| !d.is_zero()));
            Ok(vec![out])
        }
        ComponentKind::Kernel { .. } => {
            Err(Error::Format(format!("{} is cut out by a kernel system; count its projection instead", c.name)))
        }
    }
}

/// Geometric count of rank singularities: determinantal components use the
/// `(n-1)`-minors, cube discriminants the rank-one flattenings of the cube,
/// and the box quotient its Jacobian.
pub fn singular_count(model: &SurfaceModel, surface: &str, p: u64) -> Result<SingularCount> {
    let c = model.component(surface)?;
    let loci = singular_loci(model, c, p)?;
    Ok(SingularCount { surface: surface.into(), p, count: union_count(&loci, p)? })
}

/// Counts the union of zero sets by inclusion-exclusion; `None` if any is infinite.
fn union_count(loci: &[Vec<MultiPoly>], p: u64) -> Result<Option<PointCount>> {
    let n = loci.len();
    let mut length = 0i64;
    let mut orbits: BTreeMap<usize, i64> = BTreeMap::new();
    for mask in 1u32..(1 << n) {
        let eqs: Vec<MultiPoly> = (0..n).filter(|i| mask >> i & 1 == 1).flat_map(|i| loci[i].iter().cloned()).collect();
        if eqs.is_empty() {
            return Ok(None);
        }
        let Some(c) = count_projective_zeros(&eqs, p)? else { return Ok(None) };
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        length += sign * c.length as i64;
        for (d, k) in c.orbits {
            *orbits.entry(d).or_default() += sign * k as i64;
        }
    }
    let orbits: Vec<(usize, usize)> = orbits.into_iter().filter(|&(_, k)| k > 0).map(|(d, k)| (d, k as usize)).collect();
    let distinct = orbits.iter().map(|(d, k)| d * k).sum();
    Ok(Some(PointCount { length: length.max(0) as usize, distinct, orbits }))
}
