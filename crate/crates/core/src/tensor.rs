//! Integer tensors with symmetry tags, contractions, the GL action and seeded sampling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{param, shape, Error, Result};
use crate::fp::is_prime;
use crate::gf::{El, Gf};
use crate::linalg::{det, IntMatrix};

/// Symmetry classes of the supported tensor formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    None,
    SymLast2,
    SymLast3,
    SymLast4,
    SymAll3,
    SymAll5,
    /// Slots (2,3) and (4,5) symmetric, counting from 1.
    Sym23_45,
    /// Slots (1,2) and (3,4,5) symmetric.
    Sym12_345,
    /// First two and last two slots symmetric.
    SymFirst2Last2,
}

impl Symmetry {
    pub const ALL: [Symmetry; 9] = [
        Symmetry::None,
        Symmetry::SymLast2,
        Symmetry::SymLast3,
        Symmetry::SymLast4,
        Symmetry::SymAll3,
        Symmetry::SymAll5,
        Symmetry::Sym23_45,
        Symmetry::Sym12_345,
        Symmetry::SymFirst2Last2,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Symmetry::None => "none",
            Symmetry::SymLast2 => "sym-last-2",
            Symmetry::SymLast3 => "sym-last-3",
            Symmetry::SymLast4 => "sym-last-4",
            Symmetry::SymAll3 => "sym-all-3",
            Symmetry::SymAll5 => "sym-all-5",
            Symmetry::Sym23_45 => "sym-(23)(45)",
            Symmetry::Sym12_345 => "sym-(12)+(345)",
            Symmetry::SymFirst2Last2 => "sym-first-2-last-2",
        }
    }

    /// Groups of slots that are fully symmetric, for a tensor of order `r`.
    pub fn groups(&self, r: usize) -> Vec<Vec<usize>> {
        let tail = |k: usize| vec![(r - k..r).collect::<Vec<_>>()];
        match self {
            Symmetry::None => vec![],
            Symmetry::SymLast2 => tail(2),
            Symmetry::SymLast3 => tail(3),
            Symmetry::SymLast4 => tail(4),
            Symmetry::SymAll3 | Symmetry::SymAll5 => tail(r),
            Symmetry::Sym23_45 => vec![vec![1, 2], vec![3, 4]],
            Symmetry::Sym12_345 => vec![vec![0, 1], vec![2, 3, 4]],
            Symmetry::SymFirst2Last2 => vec![vec![0, 1], vec![2, 3]],
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Symmetry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Symmetry> {
        Symmetry::ALL
            .into_iter()
            .find(|x| x.tag() == s)
            .ok_or_else(|| Error::Format(format!("unknown symmetry tag {s:?}")))
    }
}

/// Ring of tensor entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Fp(u64),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z => write!(f, "Z"),
            Ring::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ring> {
        if s == "Z" {
            return Ok(Ring::Z);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|x| x.parse::<u64>().ok())
            .ok_or_else(|| Error::Format(format!("unknown field tag {s:?}")))?;
        if !is_prime(p) {
            return param(format!("{p} is not prime"));
        }
        Ok(Ring::Fp(p))
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}
string_serde!(Symmetry);
string_serde!(Ring);

/// Family name of a (shape, symmetry) pair, if it is one of the supported formats.
pub fn family_of(shape: &[usize], sym: Symmetry) -> Option<&'static str> {
    use Symmetry::*;
    Some(match (shape, sym) {
        ([4, 4, 4], None) => "rr",
        ([4, 4, 4], SymLast2) => "sym2rr",
        ([4, 4, 4], SymAll3) => "hessian",
        ([2, 2, 2, 2, 2], None) => "pent",
        ([2, 2, 2, 2, 2], SymLast2) => "2sympent",
        ([2, 2, 2, 2, 2], SymLast3) => "3sympent",
        ([2, 2, 2, 2, 2], Sym23_45) => "22sympent",
        ([2, 2, 2, 2, 2], Sym12_345) => "23sympent",
        ([2, 2, 2, 2, 2], SymLast4) => "4sympent",
        ([2, 2, 2, 2, 2], SymAll5) => "5sympent",
        ([2, 2, 2, 4], None) => "2224",
        ([2, 2, 4, 4], SymLast2) => "22s24",
        ([2, 2, 4, 4], SymFirst2Last2) => "sym22sym24",
        _ => return Option::None,
    })
}

/// Shape and symmetry of a named family.
pub fn family_format(family: &str) -> Result<(Vec<usize>, Symmetry)> {
    const SHAPES: [&[usize]; 4] = [&[4, 4, 4], &[2, 2, 2, 2, 2], &[2, 2, 2, 4], &[2, 2, 4, 4]];
    for s in SHAPES {
        for sym in Symmetry::ALL {
            if family_of(s, sym) == Some(family) {
                return Ok((s.to_vec(), sym));
            }
        }
    }
    Err(Error::Lookup(format!("unknown tensor family {family:?}")))
}

fn check_format(shape: &[usize], sym: Symmetry) -> Result<()> {
    if shape.is_empty() || shape.contains(&0) {
        return self::shape(format!("invalid shape {shape:?}"));
    }
    if sym != Symmetry::None && family_of(shape, sym).is_none() {
        return param(format!("symmetry {sym} is not supported on shape {shape:?}"));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    shape: Vec<usize>,
    symmetry: Symmetry,
    ring: Ring,
    entries: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TensorFile {
    shape: Vec<usize>,
    symmetry: Symmetry,
    field: Ring,
    entries: Vec<String>,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, symmetry: Symmetry, ring: Ring, entries: Vec<BigInt>) -> Result<Tensor> {
        check_format(&shape, symmetry)?;
        let n: usize = shape.iter().product();
        if entries.len() != n {
            return self::shape(format!("{} entries for shape {shape:?}", entries.len()));
        }
        if let Ring::Fp(p) = ring {
            let pb = BigInt::from(p);
            if entries.iter().any(|e| e.is_negative() || *e >= pb) {
                return param(format!("entries must lie in [0,{p})"));
            }
        }
        let t = Tensor { shape, symmetry, ring, entries };
        if !t.is_invariant(symmetry) {
            return param(format!("entries are not invariant under {symmetry}"));
        }
        Ok(t)
    }

    pub fn from_i64(shape: &[usize], symmetry: Symmetry, entries: &[i64]) -> Result<Tensor> {
        Self::new(shape.to_vec(), symmetry, Ring::Z, entries.iter().map(|&x| x.into()).collect())
    }

    pub fn zeros(shape: &[usize], ring: Ring) -> Tensor {
        let n = shape.iter().product();
        Tensor { shape: shape.to_vec(), symmetry: Symmetry::None, ring, entries: vec![BigInt::zero(); n] }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.shape.len()
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn family(&self) -> Option<&'static str> {
        family_of(&self.shape, self.symmetry)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn strides(&self) -> Vec<usize> {
        let mut s = vec![1; self.shape.len()];
        for i in (0..self.shape.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * self.shape[i + 1];
        }
        s
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().zip(self.strides()).map(|(i, s)| i * s).sum()
    }

    pub fn get(&self, idx: &[usize]) -> &BigInt {
        &self.entries[self.offset(idx)]
    }

    pub fn unravel(&self, mut off: usize) -> Vec<usize> {
        let mut idx = vec![0; self.shape.len()];
        for i in (0..self.shape.len()).rev() {
            idx[i] = off % self.shape[i];
            off /= self.shape[i];
        }
        idx
    }

    /// Index with each symmetric group sorted; entries are constant on these classes.
    pub fn canonical_index(&self, idx: &[usize], sym: Symmetry) -> Vec<usize> {
        let mut out = idx.to_vec();
        for g in sym.groups(self.shape.len()) {
            let mut vals: Vec<usize> = g.iter().map(|&s| idx[s]).collect();
            vals.sort_unstable();
            for (s, v) in g.iter().zip(vals) {
                out[*s] = v;
            }
        }
        out
    }

    pub fn is_invariant(&self, sym: Symmetry) -> bool {
        if sym == Symmetry::None {
            return true;
        }
        if sym.groups(self.shape.len()).iter().any(|g| g.iter().any(|&s| s >= self.shape.len())) {
            return false;
        }
        (0..self.entries.len()).all(|o| {
            let idx = self.unravel(o);
            self.entries[o] == *self.get(&self.canonical_index(&idx, sym))
        })
    }

    fn reduce(&self, x: BigInt) -> BigInt {
        match self.ring {
            Ring::Z => x,
            Ring::Fp(p) => x.mod_floor(&BigInt::from(p)),
        }
    }

    /// Contraction `A ⌟ v` in one slot.
    pub fn contract(&self, slot: usize, v: &[BigInt]) -> Result<Tensor> {
        if slot >= self.shape.len() || self.shape.len() < 2 {
            return shape(format!("cannot contract slot {slot} of order-{} tensor", self.shape.len()));
        }
        if v.len() != self.shape[slot] {
            return shape(format!("vector of length {} for slot of size {}", v.len(), self.shape[slot]));
        }
        let mut new_shape = self.shape.clone();
        new_shape.remove(slot);
        let mut out = Tensor::zeros(&new_shape, self.ring);
        for (o, e) in self.entries.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let mut idx = self.unravel(o);
            let i = idx.remove(slot);
            if v[i].is_zero() {
                continue;
            }
            let off = out.offset(&idx);
            out.entries[off] += e * &v[i];
        }
        for e in out.entries.iter_mut() {
            *e = self.reduce(std::mem::take(e));
        }
        Ok(out)
    }

    /// Drops the symmetry tag, giving the full orbit-constant tensor in the unsymmetrized space.
    pub fn symmetrize_embed(&self) -> Tensor {
        Tensor { symmetry: Symmetry::None, ..self.clone() }
    }

    /// Restricts an orbit-constant tensor back to a symmetry class.
    pub fn with_symmetry(&self, sym: Symmetry) -> Result<Tensor> {
        Tensor::new(self.shape.clone(), sym, self.ring, self.entries.clone())
    }

    /// Symmetric tensor of a binary form with coefficients `c_k` of `x^(n-k) y^k`.
    /// Entries are `c_k / binom(n,k)` multiplied by the returned common scale.
    pub fn from_binary_form(coeffs: &[BigInt]) -> Result<(Tensor, BigInt)> {
        let n = coeffs.len().checked_sub(1).filter(|&n| n == 3 || n == 5 || n == 2 || n == 4);
        let Some(n) = n else {
            return param("binary forms of degree 2 to 5 only");
        };
        let binom = |k: usize| -> BigInt { binomial(n as u64, k as u64) };
        let mut scale = BigInt::one();
        for (k, c) in coeffs.iter().enumerate() {
            let b = binom(k);
            let g = c.gcd(&b);
            if !c.is_zero() {
                scale = scale.lcm(&(&b / g));
            }
        }
        let shape = vec![2; n];
        let sym = if n == 5 { Symmetry::SymAll5 } else { Symmetry::None };
        let mut t = Tensor::zeros(&shape, Ring::Z);
        for o in 0..t.entries.len() {
            let k = t.unravel(o).iter().filter(|&&i| i == 1).count();
            t.entries[o] = &coeffs[k] * &scale / binom(k);
        }
        t.symmetry = sym;
        Ok((t, scale))
    }

    /// Coefficients `c_k = binom(n,k) a_{0..01..1}` of the binary form of a fully symmetric binary tensor.
    pub fn to_binary_form(&self) -> Result<Vec<BigInt>> {
        let n = self.shape.len();
        if self.shape.iter().any(|&d| d != 2) || !self.is_invariant(symmetry_all(n)) {
            return param("not a symmetric binary tensor");
        }
        Ok((0..=n)
            .map(|k| {
                let idx: Vec<usize> = (0..n).map(|i| usize::from(i >= n - k)).collect();
                self.get(&idx) * binomial(n as u64, k as u64)
            })
            .collect())
    }

    pub fn reduce_mod(&self, p: u64) -> Result<Tensor> {
        if !is_prime(p) {
            return param(format!("{p} is not prime"));
        }
        let pb = BigInt::from(p);
        Ok(Tensor {
            ring: Ring::Fp(p),
            entries: self.entries.iter().map(|e| e.mod_floor(&pb)).collect(),
            ..self.clone()
        })
    }

    /// Entries as elements of a finite field.
    pub fn entries_in(&self, gf: &Gf) -> Vec<El> {
        self.entries.iter().map(|e| gf.from_bigint(e)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.file()).expect("tensor serializes")
    }

    fn file(&self) -> TensorFile {
        TensorFile {
            shape: self.shape.clone(),
            symmetry: self.symmetry,
            field: self.ring,
            entries: self.entries.iter().map(|e| e.to_string()).collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Tensor> {
        let f: TensorFile = serde_json::from_str(s)
            .map_err(|e| Error::Parse { line: e.line(), column: e.column(), msg: e.to_string() })?;
        let entries = f
            .entries
            .iter()
            .map(|x| x.parse::<BigInt>().map_err(|_| Error::Format(format!("bad integer entry {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Tensor::new(f.shape, f.symmetry, f.field, entries)
    }

    /// Hex SHA-256 of the canonical JSON.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

fn symmetry_all(n: usize) -> Symmetry {
    match n {
        3 => Symmetry::SymAll3,
        4 => Symmetry::SymLast4,
        5 => Symmetry::SymAll5,
        _ => Symmetry::None,
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

impl Serialize for Tensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.file().serialize(s)
    }
}

/// An element of `GL(V_1) x ... x GL(V_r)` together with a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub mats: Vec<IntMatrix>,
    pub scalar: BigInt,
}

impl GroupElement {
    pub fn identity(shape: &[usize]) -> GroupElement {
        GroupElement { mats: shape.iter().map(|&n| IntMatrix::identity(n)).collect(), scalar: BigInt::one() }
    }

    /// Componentwise product; acting by the result equals acting by `other` then `self`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.mats.len() != other.mats.len() {
            return shape("group elements of different order");
        }
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.mul_checked(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElement { mats, scalar: &self.scalar * &other.scalar })
    }

    /// Random element over F_p, invertible in every factor.
    pub fn random(shape: &[usize], sym: Symmetry, p: u64, rng: &mut impl Rng) -> GroupElement {
        let mut mats: Vec<IntMatrix> = Vec::new();
        for &n in shape {
            loop {
                let data: Vec<BigInt> = (0..n * n).map(|_| BigInt::from(rng.random_range(0..p))).collect();
                let m = IntMatrix::from_vec(n, n, data).unwrap();
                if !det(&m).unwrap().mod_floor(&BigInt::from(p)).is_zero() {
                    mats.push(m);
                    break;
                }
            }
        }
        for g in sym.groups(shape.len()) {
            for &s in &g[1..] {
                mats[s] = mats[g[0]].clone();
            }
        }
        GroupElement { mats, scalar: BigInt::from(rng.random_range(1..p)) }
    }
}

/// `A'_{i_1..i_r} = c * sum g_1[i_1][j_1] ... g_r[i_r][j_r] A_{j_1..j_r}`.
pub fn group_act(g: &GroupElement, a: &Tensor) -> Result<Tensor> {
    if g.mats.len() != a.order() {
        return param(format!("{} matrices for an order-{} tensor", g.mats.len(), a.order()));
    }
    for (m, &n) in g.mats.iter().zip(&a.shape) {
        if m.rows() != n || m.cols() != n {
            return param(format!("{}x{} matrix on a slot of size {n}", m.rows(), m.cols()));
        }
    }
    let modulus = match a.ring {
        Ring::Z => None,
        Ring::Fp(p) => Some(BigInt::from(p)),
    };
    if g.scalar.is_zero() || modulus.as_ref().is_some_and(|p| g.scalar.mod_floor(p).is_zero()) {
        return param("scalar must be nonzero");
    }
    for m in &g.mats {
        let d = det(m)?;
        let singular = match &modulus {
            None => d.is_zero(),
            Some(p) => d.mod_floor(p).is_zero(),
        };
        if singular {
            return param("group element has a singular factor");
        }
    }
    for grp in a.symmetry.groups(a.order()) {
        if grp.iter().any(|&s| g.mats[s] != g.mats[grp[0]]) {
            return param(format!("group element does not respect {}", a.symmetry));
        }
    }
    let mut cur = a.entries.clone();
    let strides = a.strides();
    for (slot, m) in g.mats.iter().enumerate() {
        let n = a.shape[slot];
        let st = strides[slot];
        let mut next = vec![BigInt::zero(); cur.len()];
        for (o, out) in next.iter_mut().enumerate() {
            let i = (o / st) % n;
            let base = o - i * st;
            let mut acc = BigInt::zero();
            for j in 0..n {
                let c = &m[(i, j)];
                if !c.is_zero() {
                    acc += c * &cur[base + j * st];
                }
            }
            *out = acc;
        }
        cur = next;
    }
    let entries = cur
        .into_iter()
        .map(|e| {
            let e = e * &g.scalar;
            match &modulus {
                None => e,
                Some(p) => e.mod_floor(p),
            }
        })
        .collect();
    Ok(Tensor { entries, ..a.clone() })
}

/// Deterministic random tensor. Integer entries are drawn from `[-bound, bound]`.
pub fn random_tensor(shape: &[usize], sym: Symmetry, ring: Ring, seed: u64) -> Result<Tensor> {
    random_tensor_with(shape, sym, ring, &mut ChaCha8Rng::seed_from_u64(seed), 9)
}

pub fn random_tensor_with(
    shape: &[usize],
    sym: Symmetry,
    ring: Ring,
    rng: &mut impl Rng,
    bound: i64,
) -> Result<Tensor> {
    check_format(shape, sym)?;
    if sym != Symmetry::None && family_of(shape, sym).is_none() {
        return param(format!("unsupported format {shape:?} with {sym}"));
    }
    let mut t = Tensor::zeros(shape, ring);
    t.symmetry = sym;
    for o in 0..t.entries.len() {
        let idx = t.unravel(o);
        let c = t.canonical_index(&idx, sym);
        if c == idx {
            t.entries[o] = match ring {
                Ring::Z => BigInt::from(rng.random_range(-bound..=bound)),
                Ring::Fp(p) => BigInt::from(rng.random_range(0..p)),
            };
        }
    }
    for o in 0..t.entries.len() {
        let idx = t.unravel(o);
        let c = t.canonical_index(&idx, sym);
        if c != idx {
            t.entries[o] = t.get(&c).clone();
        }
    }
    Ok(t)
}

/// Small helper for tests and reports: entries as `i64` when they fit.
pub fn to_i64_vec(t: &Tensor) -> Option<Vec<i64>> {
    t.entries.iter().map(|e| e.to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn contract_diagonal() {
        let mut e = vec![0; 64];
        for i in 0..4 {
            e[i * 16 + i * 4 + i] = 1;
        }
        let t = Tensor::from_i64(&[4, 4, 4], Symmetry::None, &e).unwrap();
        let m = t.contract(0, &bi(&[1, 0, 0, 0])).unwrap();
        let mut want = vec![0; 16];
        want[0] = 1;
        assert_eq!(to_i64_vec(&m).unwrap(), want);
        assert!(t.contract(1, &bi(&[0, 0, 0, 0])).unwrap().is_zero());
        assert!(matches!(t.contract(0, &bi(&[1, 0])), Err(Error::Shape(_))));
    }

    #[test]
    fn contract_sums_slices() {
        let t = random_tensor(&[2, 2, 2, 2, 2], Symmetry::None, Ring::Fp(5), 3).unwrap();
        let c = t.contract(0, &bi(&[1, 1])).unwrap();
        for o in 0..16 {
            let want = (t.entries()[o].clone() + &t.entries()[16 + o]) % 5;
            assert_eq!(c.entries()[o], want);
        }
    }

    #[test]
    fn binary_forms() {
        let (t, s) = Tensor::from_binary_form(&bi(&[1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(s, BigInt::one());
        assert_eq!(t.entries().iter().filter(|e| !e.is_zero()).count(), 1);
        assert_eq!(t.get(&[0, 0, 0, 0, 0]), &BigInt::one());
        assert_eq!(t.symmetry(), Symmetry::SymAll5);
        let (t, s) = Tensor::from_binary_form(&bi(&[0, 1, 0])).unwrap();
        assert_eq!(s, BigInt::from(2));
        assert_eq!(to_i64_vec(&t).unwrap(), vec![0, 1, 1, 0]);
        let (t, s) = Tensor::from_binary_form(&bi(&[3, 5, -10, 20, 1, 7])).unwrap();
        let back: Vec<BigInt> = t.to_binary_form().unwrap().into_iter().map(|c| c / &s).collect();
        assert_eq!(back, bi(&[3, 5, -10, 20, 1, 7]));
    }

    #[test]
    fn symmetry_checked_on_construction() {
        let mut e = vec![0; 64];
        e[1] = 1; // (0,0,1) without (0,1,0)
        assert!(Tensor::from_i64(&[4, 4, 4], Symmetry::SymLast2, &e).is_err());
        e[4] = 1;
        assert!(Tensor::from_i64(&[4, 4, 4], Symmetry::SymLast2, &e).is_ok());
        assert!(Tensor::from_i64(&[4, 4, 4], Symmetry::SymAll5, &e).is_err());
    }

    #[test]
    fn random_tensors() {
        for sym in [Symmetry::SymLast3, Symmetry::SymAll5, Symmetry::Sym23_45, Symmetry::Sym12_345] {
            let a = random_tensor(&[2; 5], sym, Ring::Z, 11).unwrap();
            assert_eq!(a, random_tensor(&[2; 5], sym, Ring::Z, 11).unwrap());
            assert!(a.is_invariant(sym));
        }
        let f = random_tensor(&[2, 2, 2, 4], Symmetry::None, Ring::Fp(5), 0).unwrap();
        assert!(f.entries().iter().all(|e| *e >= BigInt::zero() && *e < BigInt::from(5)));
        assert!(random_tensor(&[2, 2, 2, 4], Symmetry::SymLast2, Ring::Z, 0).is_err());
    }

    #[test]
    fn act_by_scalar_and_identity() {
        let a = random_tensor(&[4, 4, 4], Symmetry::None, Ring::Z, 1).unwrap();
        let id = GroupElement::identity(a.shape());
        assert_eq!(group_act(&id, &a).unwrap(), a);
        let mut g = id.clone();
        g.mats[1] = IntMatrix::identity(4).scale(&BigInt::from(3));
        let b = group_act(&g, &a).unwrap();
        for (x, y) in a.entries().iter().zip(b.entries()) {
            assert_eq!(x * 3, *y);
        }
    }

    #[test]
    fn act_recombines_slices() {
        let a = random_tensor(&[4, 4, 4], Symmetry::None, Ring::Z, 2).unwrap();
        let m = IntMatrix::from_rows(&[[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, -1], [3, 0, 0, 1]]);
        let mut g = GroupElement::identity(a.shape());
        g.mats[0] = m.clone();
        let b = group_act(&g, &a).unwrap();
        for i in 0..4 {
            for r in 0..16 {
                let want: BigInt = (0..4).map(|j| &m[(i, j)] * &a.entries()[j * 16 + r]).sum();
                assert_eq!(b.entries()[i * 16 + r], want);
            }
        }
    }

    #[test]
    fn act_respects_symmetry() {
        let a = random_tensor(&[4, 4, 4], Symmetry::SymLast2, Ring::Fp(7), 4).unwrap();
        let mut g = GroupElement::identity(a.shape());
        g.mats[2] = IntMatrix::from_rows(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(matches!(group_act(&g, &a), Err(Error::Parameter(_))));
        g.mats[1] = g.mats[2].clone();
        assert!(group_act(&g, &a).unwrap().is_invariant(Symmetry::SymLast2));
    }

    #[test]
    fn json_format() {
        let t = Tensor::from_i64(&[2, 2], Symmetry::None, &[1, -2, 3, 40]).unwrap();
        assert_eq!(t.to_json(), r#"{"shape":[2,2],"symmetry":"none","field":"Z","entries":["1","-2","3","40"]}"#);
        assert_eq!(Tensor::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(t.hash().len(), 64);
        let err = Tensor::from_json(r#"{"shape":[2,2],"symm"#).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
