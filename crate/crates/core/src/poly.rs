//! Sparse multivariate polynomials over Q or F_p with named variable blocks.
//!
//! Variables are grouped into blocks (one block per projective factor, e.g. the
//! coordinates of one P^1). Monomials are exponent vectors over all variables in
//! block order, kept in graded-lex order so iteration is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{shape, Error, Result};
use crate::fp::{binary_form_profile, is_prime, FactorProfile};
use crate::gf::{El, Gf};

/// Coefficient field of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Q,
    Fp(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        if s == "Q" {
            return Ok(Field::Q);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|x| x.parse::<u64>().ok())
            .ok_or_else(|| Error::Format(format!("unknown field tag {s:?}")))?;
        if !is_prime(p) {
            return Err(Error::Parameter(format!("{p} is not prime")));
        }
        Ok(Field::Fp(p))
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Field {
    fn normalize(&self, c: BigRational) -> BigRational {
        match self {
            Field::Q => c,
            Field::Fp(p) => {
                let pb = BigInt::from(*p);
                let num = c.numer().mod_floor(&pb);
                let den = c.denom().mod_floor(&pb);
                let inv = modinv(&den, &pb).expect("denominator invertible mod p");
                BigRational::from_integer((num * inv).mod_floor(&pb))
            }
        }
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a / b)
    }
}

fn modinv(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(p);
    g.gcd.is_one().then(|| g.x.mod_floor(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub vars: Vec<String>,
}

impl Block {
    pub fn new(name: &str, vars: &[&str]) -> Block {
        Block { name: name.into(), vars: vars.iter().map(|s| s.to_string()).collect() }
    }

    /// Block named `name` with variables `name_0 .. name_{n-1}`.
    pub fn indexed(name: &str, n: usize) -> Block {
        Block { name: name.into(), vars: (0..n).map(|i| format!("{name}_{i}")).collect() }
    }
}

/// Exponent vector ordered graded-lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    blocks: Vec<Block>,
    terms: BTreeMap<Mono, BigRational>,
}

impl MultiPoly {
    pub fn zero(field: Field, blocks: Vec<Block>) -> MultiPoly {
        MultiPoly { field, blocks, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, blocks: Vec<Block>, c: BigRational) -> MultiPoly {
        let mut p = Self::zero(field, blocks);
        let n = p.nvars();
        p.add_term(Mono(vec![0; n]), c);
        p
    }

    pub fn one_like(&self) -> MultiPoly {
        Self::constant(self.field, self.blocks.clone(), BigRational::one())
    }

    pub fn zero_like(&self) -> MultiPoly {
        Self::zero(self.field, self.blocks.clone())
    }

    /// The variable with flat index `i`.
    pub fn var(field: Field, blocks: Vec<Block>, i: usize) -> MultiPoly {
        let mut p = Self::zero(field, blocks);
        let mut e = vec![0; p.nvars()];
        e[i] = 1;
        p.add_term(Mono(e), BigRational::one());
        p
    }

    /// Linear form `sum c_i x_i` over the variables of one block.
    pub fn linear_form(field: Field, blocks: Vec<Block>, block: usize, coeffs: &[BigInt]) -> MultiPoly {
        let mut p = Self::zero(field, blocks);
        let off = p.block_offset(block);
        let n = p.nvars();
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[off + i] = 1;
            p.add_term(Mono(e), BigRational::from_integer(c.clone()));
        }
        p
    }

    pub fn from_terms(
        field: Field,
        blocks: Vec<Block>,
        terms: impl IntoIterator<Item = (Vec<u16>, BigRational)>,
    ) -> Result<MultiPoly> {
        let mut p = Self::zero(field, blocks);
        let n = p.nvars();
        for (e, c) in terms {
            if e.len() != n {
                return shape(format!("exponent vector of length {} for {n} variables", e.len()));
            }
            p.add_term(Mono(e), c);
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn nvars(&self) -> usize {
        self.blocks.iter().map(|b| b.vars.len()).sum()
    }

    pub fn block_offset(&self, block: usize) -> usize {
        self.blocks[..block].iter().map(|b| b.vars.len()).sum()
    }

    pub fn block_index(&self, name: &str) -> Result<usize> {
        self.blocks
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| Error::Lookup(format!("no variable block named {name:?}")))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Mono, c: BigRational) {
        let c = self.field.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = self.field.normalize(&*v + c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn same_ring(&self, o: &MultiPoly) -> bool {
        self.field == o.field && self.blocks == o.blocks
    }

    fn check_ring(&self, o: &MultiPoly) {
        assert!(self.same_ring(o), "polynomials from different rings");
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Largest degree in the variables of one block.
    pub fn block_degree(&self, block: usize) -> Option<u32> {
        let off = self.block_offset(block);
        let len = self.blocks[block].vars.len();
        self.terms
            .keys()
            .map(|m| m.0[off..off + len].iter().map(|&e| e as u32).sum())
            .max()
    }

    /// Degrees in every block, if the polynomial is multihomogeneous.
    pub fn multidegree(&self) -> Option<Vec<u32>> {
        let mut out: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            let mut off = 0;
            let d: Vec<u32> = self
                .blocks
                .iter()
                .map(|b| {
                    let s = m.0[off..off + b.vars.len()].iter().map(|&e| e as u32).sum();
                    off += b.vars.len();
                    s
                })
                .collect();
            match &out {
                None => out = Some(d),
                Some(o) if *o != d => return None,
                _ => {}
            }
        }
        out
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        self.check_ring(o);
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.check_ring(o);
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, s: &BigRational) -> MultiPoly {
        let mut r = self.zero_like();
        for (m, c) in &self.terms {
            r.add_term(m.clone(), c * s);
        }
        r
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        self.check_ring(o);
        let mut acc: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        let mut r = self.zero_like();
        for (m, c) in acc {
            r.add_term(m, c);
        }
        r
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(self.one_like(), |acc, _| acc.mul(self))
    }

    fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient; fails if `den` does not divide `self`.
    pub fn exact_divide(&self, den: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(den);
        let Some((lm, lc)) = den.leading() else {
            return Err(Error::Divisibility("division by the zero polynomial".into()));
        };
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return Err(Error::Divisibility("remainder is nonzero".into()));
            }
            let tm = m.div(&lm);
            let tc = self.field.div(c, &lc);
            for (dm, dc) in &den.terms {
                rem.add_term(tm.mul(dm), -(&tc * dc));
            }
            quot.add_term(tm, tc);
        }
        Ok(quot)
    }

    /// Partial derivative with respect to the variable with flat index `i`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut r = self.zero_like();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut mm = m.0.clone();
            mm[i] -= 1;
            r.add_term(Mono(mm), c * BigRational::from_integer(BigInt::from(e)));
        }
        r
    }

    /// Substitutes values for the variables of one block (the block stays, with zero exponents).
    pub fn eval_block(&self, block: usize, vals: &[BigRational]) -> MultiPoly {
        let off = self.block_offset(block);
        let len = self.blocks[block].vars.len();
        assert_eq!(vals.len(), len);
        let mut r = self.zero_like();
        for (m, c) in &self.terms {
            let mut cc = c.clone();
            let mut mm = m.0.clone();
            for (i, v) in vals.iter().enumerate() {
                let e = mm[off + i];
                if e > 0 {
                    cc *= num_traits::pow(v.clone(), e as usize);
                    mm[off + i] = 0;
                }
            }
            r.add_term(Mono(mm), cc);
        }
        r
    }

    /// Value of a constant polynomial (no variables occurring).
    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.degree() == 0 {
                return Some(c.clone());
            }
        }
        None
    }

    /// Coefficients of a binary form in a two-variable block: entry `i` is the
    /// coefficient of `s^(n-i) t^i` where `n` is the degree in the block.
    pub fn binary_coeffs(&self, block: usize, n: u32) -> Result<Vec<MultiPoly>> {
        if self.blocks[block].vars.len() != 2 {
            return shape(format!("block {:?} is not binary", self.blocks[block].name));
        }
        let off = self.block_offset(block);
        let mut out = vec![self.zero_like(); n as usize + 1];
        for (m, c) in &self.terms {
            let (a, b) = (m.0[off] as u32, m.0[off + 1] as u32);
            if a + b != n {
                return Err(Error::Degree(format!(
                    "term of degree {} in block {:?}, expected {n}",
                    a + b,
                    self.blocks[block].name
                )));
            }
            let mut mm = m.0.clone();
            mm[off] = 0;
            mm[off + 1] = 0;
            out[b as usize].add_term(Mono(mm), c.clone());
        }
        Ok(out)
    }

    /// Residue of a coefficient in F_p.
    fn coeff_mod(&self, c: &BigRational, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let num = c.numer().mod_floor(&pb);
        let den = c.denom().mod_floor(&pb);
        let inv = modinv(&den, &pb).expect("denominator invertible");
        (num * inv).mod_floor(&pb).to_u64().unwrap()
    }

    /// Reduction into a finite field for fast point evaluation.
    pub fn compile(&self, gf: &Gf) -> CompiledPoly {
        let p = gf.p() as u64;
        if let Field::Fp(fp) = self.field {
            assert_eq!(fp, p, "field characteristic mismatch");
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.0.clone(), gf.from_i64(self.coeff_mod(c, p) as i64)))
            .filter(|(_, c)| *c != 0)
            .collect();
        CompiledPoly { terms }
    }

    /// Factor profile of a binary form in `block` (no other variables may occur).
    pub fn binary_profile(&self, block: usize, p: u64) -> Result<FactorProfile> {
        let n = self
            .block_degree(block)
            .ok_or_else(|| Error::Parameter("zero binary form".into()))?;
        let coeffs = self.binary_coeffs(block, n)?;
        let mut top = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            let v = c
                .constant_value()
                .ok_or_else(|| Error::Format("binary form has extra variables".into()))?;
            top.push(self.coeff_mod(&v, p));
        }
        binary_form_profile(&top, p)
    }

    /// Reinterprets the polynomial over F_p.
    pub fn reduce_mod(&self, p: u64) -> MultiPoly {
        let mut r = MultiPoly::zero(Field::Fp(p), self.blocks.clone());
        for (m, c) in &self.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    /// Drops blocks whose variables do not occur, keeping `keep` in the given order.
    pub fn restrict_blocks(&self, keep: &[usize]) -> Result<MultiPoly> {
        let blocks: Vec<Block> = keep.iter().map(|&b| self.blocks[b].clone()).collect();
        for (bi, b) in self.blocks.iter().enumerate() {
            if !keep.contains(&bi) && self.block_degree(bi).unwrap_or(0) > 0 {
                return Err(Error::Format(format!("variable block {:?} occurs", b.name)));
            }
        }
        let mut r = MultiPoly::zero(self.field, blocks);
        for (m, c) in &self.terms {
            let mut e = Vec::new();
            for &k in keep {
                let off = self.block_offset(k);
                e.extend_from_slice(&m.0[off..off + self.blocks[k].vars.len()]);
            }
            r.add_term(Mono(e), c.clone());
        }
        Ok(r)
    }
}

/// Polynomial with coefficients in a finite field, for point evaluation.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<(Vec<u16>, El)>,
}

impl CompiledPoly {
    pub fn eval(&self, gf: &Gf, x: &[El]) -> El {
        let mut acc = 0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (xi, &ei) in x.iter().zip(e) {
                if ei > 0 {
                    t = gf.mul(t, gf.pow(*xi, ei as u64));
                }
            }
            acc = gf.add(acc, t);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Determinant of a square matrix of polynomials by fraction-free elimination.
pub fn det_of_form_matrix(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return shape("determinant of a non-square polynomial matrix");
    }
    let Some(first) = m.first().and_then(|r| r.first()) else {
        return shape("empty polynomial matrix");
    };
    if m.iter().flatten().any(|x| !x.same_ring(first)) {
        return Err(Error::Format("matrix entries live in different polynomial rings".into()));
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut prev = first.one_like();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(first.zero_like());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.exact_divide(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// `b^2 - 4ac` for `q = a s^2 + b s t + c t^2` in the given block.
pub fn disc_binary_quadratic(q: &MultiPoly, block: usize) -> Result<MultiPoly> {
    if q.block_degree(block) != Some(2) {
        return Err(Error::Degree("not quadratic in the block".into()));
    }
    let c = q.binary_coeffs(block, 2)?;
    let four = BigRational::from_integer(BigInt::from(4));
    Ok(c[1].mul(&c[1]).sub(&c[0].mul(&c[2]).scale(&four)))
}

/// Discriminant of a binary quartic in the given block, scaled so that
/// `Res(q, dq/ds) = a * disc` for `a` the `s^4` coefficient.
pub fn disc_binary_quartic(q: &MultiPoly, block: usize) -> Result<MultiPoly> {
    if q.block_degree(block) != Some(4) {
        return Err(Error::Degree("not quartic in the block".into()));
    }
    let k = q.binary_coeffs(block, 4)?;
    let (a, b, c, d, e) = (&k[0], &k[1], &k[2], &k[3], &k[4]);
    let terms: [(i64, [u32; 5]); 16] = [
        (256, [3, 0, 0, 0, 3]),
        (-192, [2, 1, 0, 1, 2]),
        (-128, [2, 0, 2, 0, 2]),
        (144, [2, 0, 1, 2, 1]),
        (-27, [2, 0, 0, 4, 0]),
        (144, [1, 2, 1, 0, 2]),
        (-6, [1, 2, 0, 2, 1]),
        (-80, [1, 1, 2, 1, 1]),
        (18, [1, 1, 1, 3, 0]),
        (16, [1, 0, 4, 0, 1]),
        (-4, [1, 0, 3, 2, 0]),
        (-27, [0, 4, 0, 0, 2]),
        (18, [0, 3, 1, 1, 1]),
        (-4, [0, 3, 0, 3, 0]),
        (-4, [0, 2, 3, 0, 1]),
        (1, [0, 2, 2, 2, 0]),
    ];
    // Cache powers of each coefficient.
    let base = [a, b, c, d, e];
    let powers: Vec<Vec<MultiPoly>> = base
        .iter()
        .map(|x| {
            let mut v = vec![x.one_like()];
            for i in 1..=4 {
                let next = v[i - 1].mul(x);
                v.push(next);
            }
            v
        })
        .collect();
    let mut acc = q.zero_like();
    for (coef, exps) in terms {
        let mut t = q.one_like().scale(&BigRational::from_integer(BigInt::from(coef)));
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                t = t.mul(&powers[i][e as usize]);
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: Vec<&String> = self.blocks.iter().flat_map(|b| b.vars.iter()).collect();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.field)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    field: Field,
    blocks: Vec<Block>,
    terms: Vec<(Vec<u16>, String)>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            field: self.field,
            blocks: self.blocks.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.0.clone(), c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        let terms = j
            .terms
            .into_iter()
            .map(|(e, c)| c.parse::<BigRational>().map(|c| (e, c)).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        MultiPoly::from_terms(j.field, j.blocks, terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn st() -> Vec<Block> {
        vec![Block::new("u", &["s", "t"])]
    }

    fn binary(coeffs_from_top: &[i64]) -> MultiPoly {
        let n = coeffs_from_top.len() - 1;
        MultiPoly::from_terms(
            Field::Q,
            st(),
            coeffs_from_top.iter().enumerate().map(|(i, &c)| (vec![(n - i) as u16, i as u16], q(c))),
        )
        .unwrap()
    }

    #[test]
    fn exact_division() {
        let x = MultiPoly::var(Field::Q, st(), 0);
        let y = MultiPoly::var(Field::Q, st(), 1);
        let num = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(num.exact_divide(&x.sub(&y)).unwrap(), x.add(&y));
        assert!(matches!(x.exact_divide(&y), Err(Error::Divisibility(_))));
    }

    #[test]
    fn diagonal_det() {
        let blocks = vec![Block::indexed("x", 4)];
        let m: Vec<Vec<MultiPoly>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j {
                            MultiPoly::var(Field::Q, blocks.clone(), i)
                        } else {
                            MultiPoly::zero(Field::Q, blocks.clone())
                        }
                    })
                    .collect()
            })
            .collect();
        let d = det_of_form_matrix(&m).unwrap();
        assert_eq!(d.to_string(), "x_0*x_1*x_2*x_3");
    }

    #[test]
    fn quadratic_discriminants() {
        assert_eq!(disc_binary_quadratic(&binary(&[1, 0, -1]), 0).unwrap().constant_value(), Some(q(4)));
        assert_eq!(disc_binary_quadratic(&binary(&[1, 2, 1]), 0).unwrap().constant_value(), Some(q(0)));
        assert!(disc_binary_quadratic(&binary(&[1, 0, 0, 1]), 0).is_err());
    }

    #[test]
    fn quartic_discriminants() {
        let d = disc_binary_quartic(&binary(&[1, 0, 0, 0, -1]), 0).unwrap();
        assert_eq!(d.constant_value(), Some(q(-256)));
        let d = disc_binary_quartic(&binary(&[1, 0, -1, 0, 0]), 0).unwrap();
        assert_eq!(d.constant_value(), Some(q(0)));
        // s^4 + s t^3: Res(f, f') / a computed by hand from the Sylvester matrix is -27.
        let d = disc_binary_quartic(&binary(&[1, 0, 0, 1, 0]), 0).unwrap();
        assert_eq!(d.constant_value(), Some(q(-27)));
    }

    #[test]
    fn field_tags() {
        assert_eq!("Fp:7".parse::<Field>().unwrap(), Field::Fp(7));
        assert!("Fp:8".parse::<Field>().is_err());
        assert_eq!(Field::Q.to_string(), "Q");
    }

    #[test]
    fn fp_coefficients_reduced() {
        let p = MultiPoly::constant(Field::Fp(5), st(), q(-7));
        assert_eq!(p.constant_value(), Some(q(3)));
        let half = MultiPoly::constant(Field::Fp(5), st(), BigRational::new(1.into(), 2.into()));
        assert_eq!(half.constant_value(), Some(q(3)));
    }

    #[test]
    fn json_round_trip() {
        let f = binary(&[3, -1, 0, 2]);
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"{"field":"Q","blocks":[{"name":"u","vars":["s","t"]}],"terms":"#));
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
