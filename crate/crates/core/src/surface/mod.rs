//! Surfaces attached to tensors: defining forms, rank singularities, the kernel maps
//! between the projections and their composites on finite-field points.

mod counts;
mod fibration;
mod hyperdet;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gb::count_projective_zeros;
use crate::gf::{El, Gf};
use crate::poly::{det_of_form_matrix, Block, CompiledPoly, Field, MultiPoly};
use crate::tensor::{Ring, Tensor};

pub use counts::{singular_count, SingularCount};
pub use fibration::{fibration_disc, fibration_profile};
pub use hyperdet::{cayley_discriminant, check_witness, hyperdet_admissible, hyperdet_vanishes, hyperdet_vanishes_with, HyperdetResult, HyperdetStatus};

/// Default cap on the number of ambient points a scan may visit.
pub const DEFAULT_SCAN_BOUND: u128 = 1_000_000;

/// The scan cap, overridable through `K3TENSOR_SCAN_BOUND`.
pub fn scan_bound() -> u128 {
    std::env::var("K3TENSOR_SCAN_BOUND").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SCAN_BOUND)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentKind {
    /// Determinant of the matrix left after substitution, rows on slot `rows`.
    Determinantal { rows: usize, cols: usize },
    /// The substituted tensor vanishes as a vector on slot `free`.
    Kernel { free: usize },
    /// Discriminant of the 2x2x2 cube `A(u)`.
    CubeDiscriminant,
    /// The (2,2,2) form cut out by the three kernel systems of a 2x2x2x4 box.
    BoxQuotient,
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub name: String,
    /// Tensor slots fed by each projective factor. A factor may feed several slots.
    pub factors: Vec<Vec<usize>>,
    pub kind: ComponentKind,
    pub equations: Vec<MultiPoly>,
    /// Set when the singular locus is not finite, e.g. a union of planes.
    pub non_isolated_singularities: bool,
}

impl Component {
    /// Dimensions of the vector spaces of the projective factors.
    pub fn ambient(&self, shape: &[usize]) -> Vec<usize> {
        self.factors.iter().map(|f| shape[f[0]]).collect()
    }

    fn is_hypersurface(&self) -> bool {
        !matches!(self.kind, ComponentKind::Kernel { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceModel {
    pub family: String,
    pub tensor_hash: String,
    #[serde(skip)]
    pub tensor: Tensor,
    pub components: Vec<Component>,
}

impl SurfaceModel {
    pub fn component(&self, name: &str) -> Result<&Component> {
        self.components
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::Lookup(format!("no surface {name:?} for family {}", self.family)))
    }

    pub fn names(&self) -> Vec<&str> {
        self.components.iter().map(|c| c.name.as_str()).collect()
    }
}

/// A point of a component's ambient space over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PointRecord {
    pub surface: String,
    pub q: u32,
    /// Normalized coordinates, one vector per projective factor.
    pub coords: Vec<Vec<El>>,
    pub on_surface: bool,
    pub rank_singular: bool,
}

fn block_name(shape: &[usize], f: &[usize]) -> String {
    if f.len() > 1 {
        "z".into()
    } else if shape == [2, 2, 2, 4] && f[0] == 3 {
        "u".into()
    } else {
        format!("v{}", f[0] + 1)
    }
}

/// Substitutes variable blocks into tensor slots. `assign[s]` is the block fed into slot
/// `s`, or `None` for a free slot. Returns one polynomial per entry over the free slots.
fn substitute(a: &Tensor, blocks: &[Block], assign: &[Option<usize>]) -> Result<Vec<MultiPoly>> {
    let shape = a.shape();
    let offs: Vec<usize> = blocks.iter().scan(0, |acc, b| {
        let o = *acc;
        *acc += b.vars.len();
        Some(o)
    }).collect();
    let nv: usize = blocks.iter().map(|b| b.vars.len()).sum();
    let free: Vec<usize> = (0..shape.len()).filter(|&s| assign[s].is_none()).collect();
    let out_len: usize = free.iter().map(|&s| shape[s]).product();
    let mut acc: Vec<BTreeMap<Vec<u16>, BigInt>> = vec![BTreeMap::new(); out_len];
    for (off, c) in a.entries().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = a.unravel(off);
        let mut e = vec![0u16; nv];
        let mut o = 0;
        for s in 0..shape.len() {
            match assign[s] {
                Some(b) => e[offs[b] + idx[s]] += 1,
                None => o = o * shape[s] + idx[s],
            }
        }
        *acc[o].entry(e).or_insert_with(BigInt::zero) += c;
    }
    acc.into_iter()
        .map(|m| {
            MultiPoly::from_terms(
                Field::Q,
                blocks.to_vec(),
                m.into_iter().map(|(e, c)| (e, BigRational::from_integer(c))),
            )
        })
        .collect()
}

fn substitute_factors(a: &Tensor, factors: &[Vec<usize>]) -> Result<Vec<MultiPoly>> {
    let shape = a.shape();
    let blocks: Vec<Block> = factors.iter().map(|f| Block::indexed(&block_name(shape, f), shape[f[0]])).collect();
    let mut assign = vec![None; shape.len()];
    for (b, f) in factors.iter().enumerate() {
        for &s in f {
            assign[s] = Some(b);
        }
    }
    substitute(a, &blocks, &assign)
}

/// Cayley's degree-4 invariant of a 2x2x2 cube with entries `e[4i + 2j + k]`,
/// computed as the discriminant of `det(x M_0 + y M_1)`.
pub(crate) fn cube_disc<T: Clone>(
    e: &[T],
    add: impl Fn(&T, &T) -> T,
    sub: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
    times4: impl Fn(&T) -> T,
) -> T {
    let det = |m: [&T; 4]| sub(&mul(m[0], m[3]), &mul(m[1], m[2]));
    let a = det([&e[0], &e[1], &e[2], &e[3]]);
    let c = det([&e[4], &e[5], &e[6], &e[7]]);
    let s: Vec<T> = (0..4).map(|i| add(&e[i], &e[i + 4])).collect();
    let b = sub(&sub(&det([&s[0], &s[1], &s[2], &s[3]]), &a), &c);
    sub(&mul(&b, &b), &times4(&mul(&a, &c)))
}

fn component(name: String, factors: Vec<Vec<usize>>, kind: ComponentKind, equations: Vec<MultiPoly>) -> Component {
    Component { name, factors, kind, equations, non_isolated_singularities: false }
}

fn determinantal(a: &Tensor, name: String, factors: Vec<Vec<usize>>) -> Result<Component> {
    let shape = a.shape();
    let used: Vec<usize> = factors.iter().flatten().copied().collect();
    let free: Vec<usize> = (0..shape.len()).filter(|s| !used.contains(s)).collect();
    let (r, c) = (free[0], free[1]);
    let n = shape[r];
    let ent = substitute_factors(a, &factors)?;
    let m: Vec<Vec<MultiPoly>> = (0..n).map(|i| ent[i * n..(i + 1) * n].to_vec()).collect();
    let det = det_of_form_matrix(&m)?;
    Ok(component(name, factors, ComponentKind::Determinantal { rows: r, cols: c }, vec![det]))
}

fn kernel_component(a: &Tensor, name: String, factors: Vec<Vec<usize>>, free: usize) -> Result<Component> {
    let eqs: Vec<MultiPoly> = substitute_factors(a, &factors)?.into_iter().filter(|f| !f.is_zero()).collect();
    Ok(component(name, factors, ComponentKind::Kernel { free }, eqs))
}

fn digits(slots: &[usize]) -> String {
    slots.iter().map(|s| (s + 1).to_string()).collect()
}

/// The form `f(v1,v2,v3) = D / (det(v1,v1') det(v2,v2') det(v3,v3'))` of a 2x2x2x4 box,
/// where `D` stacks `A(.,.,.,u)` at the point and at the three primed variations.
fn box_quotient(a: &Tensor) -> Result<MultiPoly> {
    let blocks: Vec<Block> = ["v1", "w1", "v2", "w2", "v3", "w3"].iter().map(|n| Block::indexed(n, 2)).collect();
    let rows = [[0, 2, 4], [1, 2, 4], [0, 3, 4], [0, 2, 5]];
    let mut m = Vec::new();
    for r in rows {
        m.push(substitute(a, &blocks, &[Some(r[0]), Some(r[1]), Some(r[2]), None])?);
    }
    let d = det_of_form_matrix(&m)?;
    let var = |i| MultiPoly::var(Field::Q, blocks.clone(), i);
    let mut den = d.one_like();
    for b in 0..3 {
        let (v, w) = (4 * b, 4 * b + 2);
        den = den.mul(&var(v).mul(&var(w + 1)).sub(&var(v + 1).mul(&var(w))));
    }
    if d.is_zero() {
        return Ok(MultiPoly::zero(Field::Q, vec![blocks[0].clone(), blocks[2].clone(), blocks[4].clone()]));
    }
    d.exact_divide(&den)?.restrict_blocks(&[0, 2, 4])
}

fn components_for(a: &Tensor) -> Result<Vec<Component>> {
    let shape = a.shape().to_vec();
    let single = |v: &[usize]| v.iter().map(|&s| vec![s]).collect::<Vec<_>>();
    let mut out = Vec::new();
    match shape.as_slice() {
        [4, 4, 4] => {
            for s in 0..3 {
                out.push(determinantal(a, format!("X{}", s + 1), vec![vec![s]])?);
            }
        }
        [2, 2, 2, 2, 2] => {
            for i in 0..5 {
                for j in i + 1..5 {
                    for k in j + 1..5 {
                        let t = [i, j, k];
                        out.push(determinantal(a, format!("X{}", digits(&t)), single(&t))?);
                    }
                }
            }
            for m in (0..5).rev() {
                let t: Vec<usize> = (0..5).filter(|&s| s != m).collect();
                out.push(kernel_component(a, format!("X{}", digits(&t)), single(&t), m)?);
            }
        }
        [2, 2, 2, 4] => {
            let ent = substitute_factors(a, &[vec![3]])?;
            let disc = cube_disc(
                &ent,
                |x, y| x.add(y),
                |x, y| x.sub(y),
                |x, y| x.mul(y),
                |x| x.scale(&BigRational::from_integer(4.into())),
            );
            out.push(component("XU".into(), vec![vec![3]], ComponentKind::CubeDiscriminant, vec![disc]));
            for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                out.push(kernel_component(a, format!("Y{}{}", i + 1, j + 1), single(&[i, j, 3]), k)?);
            }
            out.push(component("f".into(), single(&[0, 1, 2]), ComponentKind::BoxQuotient, vec![box_quotient(a)?]));
        }
        [2, 2, 4, 4] => {
            out.push(determinantal(a, "X3".into(), vec![vec![2, 3]])?);
            out.push(kernel_component(a, "X13".into(), vec![vec![0], vec![2, 3]], 1)?);
            out.push(kernel_component(a, "X23".into(), vec![vec![1], vec![2, 3]], 0)?);
        }
        _ => return Err(Error::Format(format!("no surface construction for shape {shape:?}"))),
    }
    Ok(out)
}

/// Prime used to test whether singular loci are finite.
const CHECK_PRIME: u64 = 32003;

fn singular_locus_infinite(c: &Component) -> Result<bool> {
    let f = &c.equations[0];
    let g = f.reduce_mod(CHECK_PRIME);
    let mut eqs = vec![g.clone()];
    eqs.extend((0..g.nvars()).map(|i| g.derivative(i)).filter(|d| !d.is_zero()));
    Ok(count_projective_zeros(&eqs, CHECK_PRIME)?.is_none())
}

/// All surfaces attached to a tensor of a supported format.
///
/// Identically vanishing defining forms are rejected. Hypersurface components whose
/// singular locus is positive dimensional are flagged.
pub fn build_surface(a: &Tensor) -> Result<SurfaceModel> {
    let family = a
        .family()
        .ok_or_else(|| Error::Format(format!("shape {:?} with {} is not a supported family", a.shape(), a.symmetry())))?;
    let mut components = components_for(a)?;
    for c in &mut components {
        if c.equations.iter().all(|f| f.is_zero()) {
            return Err(Error::Degenerate(format!("the defining form of {} vanishes identically", c.name)));
        }
        if c.is_hypersurface() {
            c.non_isolated_singularities = singular_locus_infinite(c)?;
        }
    }
    Ok(SurfaceModel { family: family.into(), tensor_hash: a.hash(), tensor: a.clone(), components })
}

/// Dense tensor entries over a finite field.
pub(crate) struct GfTensor {
    shape: Vec<usize>,
    entries: Vec<El>,
}

impl GfTensor {
    pub(crate) fn new(a: &Tensor, gf: &Gf) -> Result<GfTensor> {
        if let Ring::Fp(p) = a.ring() {
            if p != gf.p() as u64 {
                return Err(Error::Parameter(format!("tensor over F_{p} read in a field of characteristic {}", gf.p())));
            }
        }
        Ok(GfTensor { shape: a.shape().to_vec(), entries: a.entries_in(gf) })
    }

    /// Contracts `vecs[s]` into slot `s` where given. The result is indexed
    /// row-major by the remaining slots in increasing order.
    pub(crate) fn contract(&self, gf: &Gf, vecs: &[Option<&[El]>]) -> Vec<El> {
        let r = self.shape.len();
        let out_len: usize = (0..r).filter(|&s| vecs[s].is_none()).map(|s| self.shape[s]).product();
        let mut out = vec![0; out_len];
        let mut idx = vec![0usize; r];
        for &e in &self.entries {
            if e != 0 {
                let mut c = e;
                let mut o = 0;
                for s in 0..r {
                    match vecs[s] {
                        Some(v) => {
                            c = gf.mul(c, v[idx[s]]);
                            if c == 0 {
                                break;
                            }
                        }
                        None => o = o * self.shape[s] + idx[s],
                    }
                }
                if c != 0 {
                    out[o] = gf.add(out[o], c);
                }
            }
            for s in (0..r).rev() {
                idx[s] += 1;
                if idx[s] < self.shape[s] {
                    break;
                }
                idx[s] = 0;
            }
        }
        out
    }
}

fn slot_vectors<'a>(r: usize, factors: &[Vec<usize>], coords: &'a [Vec<El>]) -> Vec<Option<&'a [El]>> {
    let mut v = vec![None; r];
    for (f, c) in factors.iter().zip(coords) {
        for &s in f {
            v[s] = Some(c.as_slice());
        }
    }
    v
}

fn as_matrix(flat: &[El], rows: usize, cols: usize) -> Vec<Vec<El>> {
    (0..rows).map(|i| flat[i * cols..(i + 1) * cols].to_vec()).collect()
}

fn transpose(m: &[Vec<El>]) -> Vec<Vec<El>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

/// Field-specific data for evaluating points of a model.
pub struct Evaluator<'a> {
    pub model: &'a SurfaceModel,
    pub gf: &'a Gf,
    t: GfTensor,
    /// Per component: the defining polynomial followed by its partials (hypersurfaces only).
    compiled: Vec<Vec<CompiledPoly>>,
    bound: u128,
}

impl<'a> Evaluator<'a> {
    pub fn new(model: &'a SurfaceModel, gf: &'a Gf) -> Result<Evaluator<'a>> {
        let t = GfTensor::new(&model.tensor, gf)?;
        let compiled = model
            .components
            .iter()
            .map(|c| {
                if !c.is_hypersurface() {
                    return vec![];
                }
                let f = &c.equations[0];
                let mut v = vec![f.compile(gf)];
                v.extend((0..f.nvars()).map(|i| f.derivative(i).compile(gf)));
                v
            })
            .collect();
        Ok(Evaluator { model, gf, t, compiled, bound: scan_bound() })
    }

    /// Overrides the scan cap.
    pub fn with_bound(mut self, bound: u128) -> Self {
        self.bound = bound;
        self
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.model
            .components
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::Lookup(format!("no surface {name:?} for family {}", self.model.family)))
    }

    fn contract(&self, c: &Component, coords: &[Vec<El>]) -> Vec<El> {
        self.t.contract(self.gf, &slot_vectors(self.t.shape.len(), &c.factors, coords))
    }

    fn check_coords(&self, c: &Component, coords: &[Vec<El>]) -> Result<()> {
        let amb = c.ambient(&self.t.shape);
        if coords.len() != amb.len() || coords.iter().zip(&amb).any(|(v, &n)| v.len() != n) {
            return Err(Error::Shape(format!("coordinates do not fit the ambient space of {}", c.name)));
        }
        if coords.iter().any(|v| v.iter().all(|&x| x == 0)) {
            return Err(Error::Parameter("zero vector is not a projective point".into()));
        }
        Ok(())
    }

    /// `(on_surface, rank_singular)` for coordinates on component `ci`.
    fn classify(&self, ci: usize, coords: &[Vec<El>]) -> (bool, bool) {
        let c = &self.model.components[ci];
        let gf = self.gf;
        match c.kind {
            ComponentKind::Determinantal { rows, cols } => {
                let (n, k) = (self.t.shape[rows], self.t.shape[cols]);
                let m = as_matrix(&self.contract(c, coords), n, k);
                let rk = gf.rank(&m, k);
                (rk < n, rk + 2 <= n)
            }
            ComponentKind::Kernel { .. } => {
                let on = self.contract(c, coords).iter().all(|&x| x == 0);
                (on, on && self.kernel_step_fails(c, coords))
            }
            ComponentKind::CubeDiscriminant => {
                let on = self.compiled[ci][0].eval(gf, &coords.concat()) == 0;
                let e = self.contract(c, coords);
                let flat_rank_one = (0..3).any(|slot| {
                    let rows: Vec<Vec<El>> =
                        (0..2).map(|a| (0..8).filter(|o| (o >> (2 - slot)) & 1 == a).map(|o| e[o]).collect()).collect();
                    gf.rank(&rows, 4) <= 1
                });
                (on, on && flat_rank_one)
            }
            ComponentKind::BoxQuotient => {
                let x: Vec<El> = coords.concat();
                let polys = &self.compiled[ci];
                let on = polys[0].eval(gf, &x) == 0;
                (on, on && polys[1..].iter().all(|d| d.eval(gf, &x) == 0))
            }
        }
    }

    /// Whether dropping some single-slot factor leaves a zero matrix.
    fn kernel_step_fails(&self, c: &Component, coords: &[Vec<El>]) -> bool {
        let r = self.t.shape.len();
        c.factors.iter().enumerate().filter(|(_, f)| f.len() == 1).any(|(drop, _)| {
            let mut v = slot_vectors(r, &c.factors, coords);
            v[c.factors[drop][0]] = None;
            self.t.contract(self.gf, &v).iter().all(|&x| x == 0)
        })
    }

    pub fn record(&self, name: &str, coords: Vec<Vec<El>>) -> Result<PointRecord> {
        let ci = self.index(name)?;
        let c = &self.model.components[ci];
        self.check_coords(c, &coords)?;
        let coords: Vec<Vec<El>> = coords.iter().map(|v| self.gf.normalize(v).expect("nonzero")).collect();
        let (on_surface, rank_singular) = self.classify(ci, &coords);
        Ok(PointRecord { surface: c.name.clone(), q: self.gf.q(), coords, on_surface, rank_singular })
    }

    fn ambient_lists(&self, c: &Component) -> Result<Vec<Vec<Vec<El>>>> {
        let amb = c.ambient(&self.t.shape);
        let needed: u128 = amb.iter().map(|&n| self.gf.projective_count(n)).product();
        if needed > self.bound {
            return Err(Error::Resource { needed, bound: self.bound });
        }
        Ok(amb.iter().map(|&n| self.gf.projective_points(n).collect()).collect())
    }

    /// Every rational point of a component, in a fixed order.
    pub fn surface_points(&self, name: &str) -> Result<Vec<PointRecord>> {
        let ci = self.index(name)?;
        let c = &self.model.components[ci];
        let lists = self.ambient_lists(c)?;
        let mut out = Vec::new();
        for_each_point(&lists, |coords| {
            let coords: Vec<Vec<El>> = coords.iter().map(|v| v.to_vec()).collect();
            let (on, sing) = self.classify(ci, &coords);
            if on {
                out.push(PointRecord { surface: c.name.clone(), q: self.gf.q(), coords, on_surface: on, rank_singular: sing });
            }
        });
        Ok(out)
    }

    /// Rational rank singularities of one component.
    pub fn component_rank_singular(&self, name: &str) -> Result<Vec<PointRecord>> {
        Ok(self.surface_points(name)?.into_iter().filter(|p| p.rank_singular).collect())
    }

    /// Rational rank singularities of every hypersurface component.
    pub fn rank_singular_points(&self) -> Result<Vec<PointRecord>> {
        let mut out = Vec::new();
        for c in self.model.components.iter().filter(|c| c.is_hypersurface()) {
            out.extend(self.component_rank_singular(&c.name)?);
        }
        Ok(out)
    }

    /// The kernel map from one component to another.
    pub fn psi_step(&self, from: &str, to: &str, pt: &PointRecord) -> Result<PointRecord> {
        let (fi, ti) = (self.index(from)?, self.index(to)?);
        let (cf, ct) = (&self.model.components[fi], &self.model.components[ti]);
        if pt.surface != cf.name {
            return Err(Error::Parameter(format!("point lies on {}, not {from}", pt.surface)));
        }
        self.check_coords(cf, &pt.coords)?;
        let (on, sing) = self.classify(fi, &pt.coords);
        if !on {
            return Err(Error::Domain(format!("{:?} is not on {from}", pt.coords)));
        }
        if sing {
            return Err(Error::SingularPoint(format!("{:?} is a rank singularity of {from}", pt.coords)));
        }
        let gf = self.gf;
        let r = self.t.shape.len();
        let single = |c: &Component| c.factors.iter().all(|f| f.len() == 1);
        let new_coords = match (&cf.kind, &ct.kind) {
            (ComponentKind::Determinantal { rows, cols }, ComponentKind::Determinantal { .. })
                if r == 3 && single(cf) && single(ct) && cf.factors != ct.factors =>
            {
                let b = ct.factors[0][0];
                let (n, k) = (self.t.shape[*rows], self.t.shape[*cols]);
                let m = as_matrix(&self.contract(cf, &pt.coords), n, k);
                let ker = if b == *rows { gf.kernel(&transpose(&m), n) } else { gf.kernel(&m, k) };
                if ker.len() != 1 {
                    return Err(Error::SingularPoint(format!("kernel of dimension {} at {:?}", ker.len(), pt.coords)));
                }
                vec![gf.normalize(&ker[0]).expect("kernel vector")]
            }
            (ComponentKind::Kernel { free: m }, ComponentKind::Kernel { free: l })
                if single(cf) && single(ct) && cf.factors.iter().any(|f| f[0] == *l) =>
            {
                let (m, l) = (*m, *l);
                let mut v = slot_vectors(r, &cf.factors, &pt.coords);
                v[l] = None;
                let flat = self.t.contract(gf, &v);
                let (nl, nm) = (self.t.shape[l], self.t.shape[m]);
                // Matrix with rows on the smaller of the two slots.
                let mat = if l < m { as_matrix(&flat, nl, nm) } else { transpose(&as_matrix(&flat, nm, nl)) };
                if mat.iter().flatten().all(|&x| x == 0) {
                    return Err(Error::SingularPoint(format!("zero matrix at {:?}", pt.coords)));
                }
                let ker = gf.kernel(&mat, nm);
                if ker.len() != 1 {
                    return Err(Error::SingularPoint(format!("kernel of dimension {} at {:?}", ker.len(), pt.coords)));
                }
                let vm = gf.normalize(&ker[0]).expect("kernel vector");
                ct.factors
                    .iter()
                    .map(|f| {
                        if f[0] == m {
                            vm.clone()
                        } else {
                            let k = cf.factors.iter().position(|g| g[0] == f[0]).expect("shared slot");
                            pt.coords[k].clone()
                        }
                    })
                    .collect()
            }
            _ => return Err(Error::Format(format!("no kernel map from {from} to {to}"))),
        };
        self.record(to, new_coords)
    }

    /// Applies a closed path of kernel maps once.
    pub fn apply_cycle(&self, path: &[String], pt: &PointRecord) -> Result<PointRecord> {
        let mut p = pt.clone();
        for w in path.windows(2) {
            p = self.psi_step(&w[0], &w[1], &p)?;
        }
        Ok(p)
    }

    /// Iterates a cycle from `pt` until it returns or `max_steps` is reached.
    pub fn phi_orbit(&self, cycle: &str, pt: &PointRecord, max_steps: usize) -> Result<Orbit> {
        let path = parse_cycle(self.model, cycle)?;
        if pt.surface != path[0] {
            return Err(Error::Parameter(format!("cycle {cycle} starts on {}, point lies on {}", path[0], pt.surface)));
        }
        let mut points = vec![pt.clone()];
        let mut cur = pt.clone();
        for n in 1..=max_steps {
            cur = self.apply_cycle(&path, &cur)?;
            if cur.coords == pt.coords {
                return Ok(Orbit { cycle: cycle.into(), points, period: Some(n) });
            }
            points.push(cur.clone());
        }
        Ok(Orbit { cycle: cycle.into(), points, period: None })
    }

    /// Exhaustive search for rational fixed points of a cycle. Points where a step
    /// is undefined are counted, not fatal.
    pub fn fixed_points(&self, cycle: &str) -> Result<FixedPointScan> {
        let path = parse_cycle(self.model, cycle)?;
        let mut scan = FixedPointScan { cycle: cycle.into(), q: self.gf.q(), scanned: 0, singular_hits: 0, fixed: vec![] };
        for p in self.surface_points(&path[0])? {
            if p.rank_singular {
                scan.singular_hits += 1;
                continue;
            }
            scan.scanned += 1;
            match self.apply_cycle(&path, &p) {
                Ok(img) if img.coords == p.coords => scan.fixed.push(p),
                Ok(_) => {}
                Err(Error::SingularPoint(_)) => scan.singular_hits += 1,
                Err(e) => return Err(e),
            }
        }
        Ok(scan)
    }
}

/// Calls `f` on every point of a product of point lists.
fn for_each_point(lists: &[Vec<Vec<El>>], mut f: impl FnMut(&[&[El]])) {
    if lists.iter().any(|l| l.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        let pt: Vec<&[El]> = idx.iter().zip(lists).map(|(&i, l)| l[i].as_slice()).collect();
        f(&pt);
        let mut k = lists.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Orbit {
    pub cycle: String,
    pub points: Vec<PointRecord>,
    /// Exact period if the orbit closed within the step limit.
    pub period: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointScan {
    pub cycle: String,
    pub q: u32,
    pub scanned: usize,
    pub singular_hits: usize,
    pub fixed: Vec<PointRecord>,
}

/// Resolves a cycle descriptor into a closed path of component names.
///
/// `Phi` on a 4x4x4 model is `X1 > X2 > X3 > X1`. On penteract models `Phi_abcde`
/// visits the surfaces missing `a, b, c, d, e, a` in turn and `alpha_kl_m` those
/// missing `m, k, l, m`. Any explicit path `X1>X2>...` is accepted as well.
pub fn parse_cycle(model: &SurfaceModel, desc: &str) -> Result<Vec<String>> {
    let shape = model.tensor.shape();
    let bad = || Error::Lookup(format!("unknown cycle {desc:?} for family {}", model.family));
    let missing = |m: usize| -> String { format!("X{}", digits(&(0..5).filter(|&s| s != m).collect::<Vec<_>>())) };
    let path: Vec<String> = if desc == "Phi" && shape == [4, 4, 4] {
        ["X1", "X2", "X3", "X1"].iter().map(|s| s.to_string()).collect()
    } else if let Some(d) = desc.strip_prefix("Phi_").filter(|_| shape.len() == 5) {
        let s: Vec<usize> = d.chars().map(|c| c.to_digit(10).map(|x| x as usize)).collect::<Option<_>>().ok_or_else(bad)?;
        let mut sorted = s.clone();
        sorted.sort_unstable();
        if sorted != [1, 2, 3, 4, 5] {
            return Err(bad());
        }
        s.iter().chain(std::iter::once(&s[0])).map(|&x| missing(x - 1)).collect()
    } else if let Some(d) = desc.strip_prefix("alpha_").filter(|_| shape.len() == 5) {
        let (kl, m) = d.split_once('_').ok_or_else(bad)?;
        let kl: Vec<usize> = kl.chars().filter_map(|c| c.to_digit(10)).map(|x| x as usize).collect();
        let m: usize = m.parse().map_err(|_| bad())?;
        if kl.len() != 2 || kl[0] == kl[1] || !(1..=5).contains(&m) || kl.iter().any(|&x| x == m || !(1..=5).contains(&x)) {
            return Err(bad());
        }
        [m, kl[0], kl[1], m].iter().map(|&x| missing(x - 1)).collect()
    } else {
        desc.split('>').map(|s| s.trim().to_string()).collect()
    };
    if path.len() < 2 || path.first() != path.last() {
        return Err(bad());
    }
    for n in &path {
        model.component(n)?;
    }
    Ok(path)
}

/// Convenience wrapper for a single-field evaluation.
pub fn rank_singular_points(model: &SurfaceModel, q: u64) -> Result<Vec<PointRecord>> {
    let gf = Gf::of_order(q)?;
    if gf.p() == 2 {
        return Err(Error::Parameter("scans need odd characteristic".into()));
    }
    Evaluator::new(model, &gf)?.rank_singular_points()
}

#[cfg(test)]
mod tests;
