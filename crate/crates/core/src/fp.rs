//! Prime-field arithmetic, dense univariate polynomials over F_p and their
//! factorization profiles (squarefree, distinct-degree and equal-degree splitting).

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{param, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// Kernel of a matrix over F_p given as rows of residues.
/// Basis vectors are returned in reduced form: free coordinate 1, other free coordinates 0.
pub fn kernel(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivots = rref(&mut rows, cols, p);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - rows[r][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    let t = mul_mod(f, rows[r][j], p);
                    rows[i][j] = (rows[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Dense polynomial over F_p, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn from_i64(p: u64, c: &[i64]) -> Self {
        let pi = p as i64;
        Self::new(p, c.iter().map(|&x| x.rem_euclid(pi) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, s: u64) -> FpPoly {
        Self::new(self.p, self.c.iter().map(|&x| mul_mod(x, s, self.p)).collect())
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        Self::new(p, (0..n).map(|i| (self.get(i) + o.get(i)) % p).collect())
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        Self::new(p, (0..n).map(|i| (self.get(i) + p - o.get(i)) % p).collect())
    }

    fn get(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|x| x as u64).collect())
    }

    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let p = self.p;
        let inv = inv_mod(d.leading(), p);
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = mul_mod(r[i + dd], inv, p);
            q[i] = coef;
            if coef != 0 {
                for (j, &dc) in d.c.iter().enumerate() {
                    r[i + j] = (r[i + j] + p - mul_mod(coef, dc, p)) % p;
                }
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.div_rem(d).1
    }

    /// Monic gcd (zero if both inputs vanish).
    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        Self::new(
            p,
            self.c.iter().enumerate().skip(1).map(|(i, &x)| mul_mod(x, i as u64 % p, p)).collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// `self^e mod m` with a big exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &FpPoly) -> FpPoly {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn pow(&self, e: usize) -> FpPoly {
        (0..e).fold(Self::one(self.p), |acc, _| acc.mul(self))
    }

    /// For a polynomial in `x^p`, returns its p-th root (coefficients are fixed by Frobenius on F_p).
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        Self::new(self.p, self.c.iter().step_by(p).copied().collect())
    }
}

/// Irreducible factor degrees and multiplicities of a polynomial over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorProfile {
    /// `(degree, multiplicity)` pairs sorted by multiplicity then degree.
    pub factors: Vec<(usize, usize)>,
    pub leading: u64,
    #[serde(skip)]
    pub parts: Vec<(FpPoly, usize)>,
}

impl FactorProfile {
    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|(d, m)| d * m).sum()
    }

    /// Sum of degrees of the factors with the given multiplicity.
    pub fn degree_with_multiplicity(&self, m: usize) -> usize {
        self.factors.iter().filter(|f| f.1 == m).map(|f| f.0).sum()
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_roots(&self) -> usize {
        self.factors.iter().map(|f| f.0).sum()
    }

    /// Multiplicity -> total degree, for the multiplicities that occur.
    pub fn multiplicity_structure(&self) -> Vec<(usize, usize)> {
        let mut ms: Vec<usize> = self.factors.iter().map(|f| f.1).collect();
        ms.sort_unstable();
        ms.dedup();
        ms.into_iter().map(|m| (m, self.degree_with_multiplicity(m))).collect()
    }

    /// Count of roots lying in F_{p^k}.
    pub fn roots_in_extension(&self, k: usize) -> usize {
        self.factors.iter().filter(|f| k.is_multiple_of(f.0)).map(|f| f.0).sum()
    }

    fn sort(&mut self) {
        self.factors.sort_by_key(|&(d, m)| (m, d));
        self.parts.sort_by(|a, b| (a.1, a.0.degree(), &a.0.c).cmp(&(b.1, b.0.degree(), &b.0.c)));
    }
}

/// Complete factorization profile of a nonzero polynomial over F_p.
pub fn factor_profile_mod_p(q: &FpPoly) -> Result<FactorProfile> {
    if q.is_zero() {
        return param("factor profile of the zero polynomial");
    }
    let p = q.p;
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    let leading = q.leading();
    let mut parts = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b33_7465_6e73);
    for (sqf, mult) in squarefree_decomposition(&q.monic()) {
        for (g, d) in distinct_degree(&sqf) {
            for f in equal_degree(&g, d, &mut rng) {
                parts.push((f, mult));
            }
        }
    }
    let factors = parts.iter().map(|(f, m)| (f.degree().unwrap(), *m)).collect();
    let mut prof = FactorProfile { factors, leading, parts };
    prof.sort();
    Ok(prof)
}

/// Squarefree decomposition of a monic polynomial: pairs `(f_i, i)` with
/// `q = prod f_i^i`, valid in characteristic p.
pub fn squarefree_decomposition(q: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = q.p;
    let mut out = Vec::new();
    if q.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = q.derivative();
    if d.is_zero() {
        for (f, m) in squarefree_decomposition(&q.pth_root()) {
            out.push((f, m * p as usize));
        }
        return out;
    }
    let mut c = q.gcd(&d);
    let mut w = q.div_rem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.degree().unwrap_or(0) > 0 {
        for (f, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((f, m * p as usize));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.rem(&rest);
    let pb = BigUint::from(p);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pb, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest.monic(), deg));
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.random_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod(&exp, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.div_rem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Profile of a binary form `sum c_i s^(n-i) t^i` of formal degree `n`, accounting for
/// the root at infinity (t = 0) explicitly. Coefficients are given from `s^n` down.
pub fn binary_form_profile(coeffs_from_top: &[u64], p: u64) -> Result<FactorProfile> {
    let n = coeffs_from_top.len().saturating_sub(1);
    // Dehomogenize at t = 1: polynomial in s with c_i the coefficient of s^(n-i).
    let mut low_first: Vec<u64> = coeffs_from_top.to_vec();
    low_first.reverse();
    let f = FpPoly::new(p, low_first);
    if f.is_zero() {
        return param("zero binary form");
    }
    let deg = f.degree().unwrap();
    let mut prof = factor_profile_mod_p(&f)?;
    let at_inf = n - deg;
    if at_inf > 0 {
        prof.factors.push((1, at_inf));
        prof.parts.push((FpPoly::one(p), at_inf));
        prof.sort();
    }
    Ok(prof)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    #[test]
    fn x_to_p_minus_x_splits() {
        for p in [3u64, 5, 7, 101] {
            let mut c = vec![0u64; p as usize + 1];
            c[1] = p - 1;
            c[p as usize] = 1;
            let prof = factor_profile_mod_p(&FpPoly::new(p, c)).unwrap();
            assert_eq!(prof.factors, vec![(1, 1); p as usize]);
        }
    }

    #[test]
    fn cube_of_irreducible_quadratic() {
        let f = FpPoly::from_i64(3, &[1, 0, 1]).pow(3);
        let prof = factor_profile_mod_p(&f).unwrap();
        assert_eq!(prof.factors, vec![(2, 3)]);
    }

    #[test]
    fn mixed_profile_reconstructs() {
        let p = 7;
        let a = FpPoly::from_i64(p, &[3, 1]);
        let b = FpPoly::from_i64(p, &[1, 0, 1]); // irreducible: -1 is a non-residue mod 7
        let c = FpPoly::from_i64(p, &[2, 1, 0, 1]);
        let f = a.pow(2).mul(&b).mul(&c.pow(7)).scale(5);
        let prof = factor_profile_mod_p(&f).unwrap();
        assert_eq!(prof.total_degree(), f.degree().unwrap());
        let rebuilt = prof
            .parts
            .iter()
            .fold(FpPoly::one(p), |acc, (g, m)| acc.mul(&g.pow(*m)))
            .scale(prof.leading);
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn binary_form_root_at_infinity() {
        // s^3 t + 10 s^2 t^2 = s^2 t (s - t) over F_11.
        let prof = binary_form_profile(&[0, 1, 10, 0, 0], 11).unwrap();
        assert_eq!(prof.total_degree(), 4);
        assert_eq!(prof.degree_with_multiplicity(1), 2);
        assert_eq!(prof.degree_with_multiplicity(2), 1);
    }

    #[test]
    fn kernel_rank_three() {
        let p = 7;
        let rows = vec![vec![1, 0, 0, 1], vec![0, 1, 0, 2], vec![0, 0, 1, 3], vec![1, 1, 1, 6]];
        let k = kernel(rows, 4, p);
        assert_eq!(k, vec![vec![6, 5, 4, 1]]);
    }
}
