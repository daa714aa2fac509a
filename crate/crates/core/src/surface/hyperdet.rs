//! Decomposable kernel search and the 2x2x2 discriminant.

use num_bigint::BigInt;
use serde::Serialize;

use super::{as_matrix, for_each_point, scan_bound, transpose, GfTensor};
use crate::error::{Error, Result};
use crate::gf::{El, Gf};
use crate::tensor::{Ring, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperdetStatus {
    /// A decomposable kernel element exists over the scanned field.
    Vanishes,
    /// No decomposable kernel element over the scanned field.
    NoRationalKernel,
    /// None over the field, but the exact discriminant vanishes mod p.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct HyperdetResult {
    pub status: HyperdetStatus,
    pub q: u32,
    /// `v_1, ..., v_r` with `A(v_1, .., v_{i-1}, ., v_{i+1}, .., v_r) = 0` for every `i`.
    pub witness: Option<Vec<Vec<El>>>,
    /// Exact discriminant for 2x2x2 cubes.
    #[serde(serialize_with = "opt_string")]
    pub cayley: Option<BigInt>,
}

fn opt_string<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Whether a hyperdeterminant exists for a format: with `k_i = dim V_i - 1`, the
/// largest `k_i` may not exceed the sum of the others. This is the standard
/// direction; the reversed inequality would rule out 4x4x4 and 2^5.
pub fn hyperdet_admissible(shape: &[usize]) -> bool {
    if shape.len() < 2 || shape.contains(&0) {
        return false;
    }
    let k: Vec<usize> = shape.iter().map(|&n| n - 1).collect();
    let max = *k.iter().max().unwrap();
    2 * max <= k.iter().sum::<usize>()
}

/// Cayley's discriminant of a 2x2x2 cube with entries indexed `4i + 2j + k`.
pub fn cayley_discriminant(a: &Tensor) -> Result<BigInt> {
    if a.shape() != [2, 2, 2] {
        return Err(Error::Shape(format!("shape {:?} is not 2x2x2", a.shape())));
    }
    Ok(super::cube_disc(a.entries(), |x, y| x + y, |x, y| x - y, |x, y| x * y, |x| x * 4))
}

/// Exhaustive search over `F_q` for a decomposable element of the kernel of `a`.
///
/// The two largest slots are solved by linear algebra; all other slots are enumerated.
pub fn hyperdet_vanishes(a: &Tensor, q: u64) -> Result<HyperdetResult> {
    hyperdet_vanishes_with(a, q, scan_bound())
}

/// As [`hyperdet_vanishes`] with an explicit scan cap.
pub fn hyperdet_vanishes_with(a: &Tensor, q: u64, bound: u128) -> Result<HyperdetResult> {
    let shape = a.shape().to_vec();
    if !hyperdet_admissible(&shape) {
        return Err(Error::Format(format!("format {shape:?} has no hyperdeterminant")));
    }
    let gf = Gf::of_order(q)?;
    let t = GfTensor::new(a, &gf)?;
    let r = shape.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&s| std::cmp::Reverse(shape[s]));
    let (sa, sb) = (order[0].min(order[1]), order[0].max(order[1]));
    let rest: Vec<usize> = (0..r).filter(|&s| s != sa && s != sb).collect();
    let needed: u128 = rest.iter().map(|&s| gf.projective_count(shape[s])).product();
    if needed > bound {
        return Err(Error::Resource { needed, bound });
    }
    let lists: Vec<Vec<Vec<El>>> = rest.iter().map(|&s| gf.projective_points(shape[s]).collect()).collect();
    let witness = search(&gf, &t, &shape, (sa, sb), &rest, &lists);
    let cayley = if shape == [2, 2, 2] && a.ring() == Ring::Z { Some(cayley_discriminant(a)?) } else { None };
    let status = match (&witness, &cayley) {
        (Some(_), _) => HyperdetStatus::Vanishes,
        (None, Some(d)) if (d % BigInt::from(gf.p())) == BigInt::from(0) => HyperdetStatus::Inconclusive,
        (None, _) => HyperdetStatus::NoRationalKernel,
    };
    Ok(HyperdetResult { status, q: gf.q(), witness, cayley })
}

fn search(
    gf: &Gf,
    t: &GfTensor,
    shape: &[usize],
    (sa, sb): (usize, usize),
    rest: &[usize],
    lists: &[Vec<Vec<El>>],
) -> Option<Vec<Vec<El>>> {
    let r = shape.len();
    let (na, nb) = (shape[sa], shape[sb]);
    let mut found = None;
    for_each_point(lists, |pt| {
        if found.is_some() {
            return;
        }
        let mut vecs: Vec<Option<&[El]>> = vec![None; r];
        for (&s, v) in rest.iter().zip(pt) {
            vecs[s] = Some(v);
        }
        let m = as_matrix(&t.contract(gf, &vecs), na, nb);
        let left = gf.kernel(&transpose(&m), na);
        if left.is_empty() {
            return;
        }
        let right = gf.kernel(&m, nb);
        for x in gf.span_points(&left) {
            for y in gf.span_points(&right) {
                let mut full: Vec<Vec<El>> = vec![vec![]; r];
                for (&s, v) in rest.iter().zip(pt) {
                    full[s] = v.to_vec();
                }
                full[sa] = x.clone();
                full[sb] = y.clone();
                if is_kernel(gf, t, &full, rest) {
                    found = Some(full);
                    return;
                }
            }
        }
    });
    found
}

/// Checks the kernel conditions on the enumerated slots; the other two hold by construction.
fn is_kernel(gf: &Gf, t: &GfTensor, full: &[Vec<El>], check: &[usize]) -> bool {
    check.iter().all(|&s| {
        let vecs: Vec<Option<&[El]>> = (0..full.len()).map(|i| (i != s).then_some(full[i].as_slice())).collect();
        t.contract(gf, &vecs).iter().all(|&x| x == 0)
    })
}

/// Whether `v_1 x ... x v_r` lies in the kernel of `a` over `gf`.
pub fn check_witness(a: &Tensor, gf: &Gf, w: &[Vec<El>]) -> Result<bool> {
    let t = GfTensor::new(a, gf)?;
    let all: Vec<usize> = (0..w.len()).collect();
    Ok(is_kernel(gf, &t, w, &all))
}
