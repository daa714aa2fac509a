//! Small finite fields F_q, q = p^k, with log/exp tables, plus the projective
//! enumeration and linear algebra the point scans need.
//!
//! An element is a `u32` whose base-p digits are the coefficients of its
//! polynomial representative (digit 0 is the constant term).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{param, Result};
use crate::fp::{factor_profile_mod_p, is_prime, FpPoly};

pub type El = u32;

#[derive(Clone, Debug)]
pub struct Gf {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<El>,
    log: Vec<u32>,
}

/// Largest field order the tables are built for.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;

impl Gf {
    pub fn new(p: u64, k: u32) -> Result<Gf> {
        if !is_prime(p) {
            return param(format!("{p} is not prime"));
        }
        if k == 0 {
            return param("extension degree must be positive");
        }
        let q = (p as u128).pow(k);
        if q > MAX_FIELD_ORDER as u128 {
            return param(format!("field of order {p}^{k} is too large"));
        }
        let (p32, q32) = (p as u32, q as u32);
        let modulus = if k == 1 { vec![0, 1] } else { find_irreducible(p, k) };
        let mut gf = Gf { p: p32, k, q: q32, modulus, exp: vec![], log: vec![] };
        gf.build_tables();
        Ok(gf)
    }

    pub fn prime(p: u64) -> Result<Gf> {
        Gf::new(p, 1)
    }

    /// Field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Gf> {
        let Some((p, k)) = prime_power(q) else {
            return param(format!("{q} is not a prime power"));
        };
        Gf::new(p, k)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn poly_mul_mod(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce by the monic modulus of degree k.
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let t = c * self.modulus[i] as u64 % p;
                prod[d - k + i] = (prod[d - k + i] + p - t) % p;
            }
        }
        prod.truncate(k);
        prod.into_iter().map(|x| x as u32).collect()
    }

    fn digits(&self, mut e: El) -> Vec<u32> {
        let mut d = vec![0; self.k as usize];
        for x in d.iter_mut() {
            *x = e % self.p;
            e /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> El {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as u64;
        let factors = prime_factors(order);
        let mut g = 2.min(self.q - 1);
        if self.q == 2 {
            g = 1;
        }
        loop {
            let gd = self.digits(g);
            let is_gen = factors.iter().all(|&r| self.slow_pow(&gd, order / r) != self.digits(1));
            if is_gen {
                break;
            }
            g += 1;
        }
        let n = (self.q - 1) as usize;
        let gd = self.digits(g);
        let mut exp = Vec::with_capacity(2 * n);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = self.digits(1);
        for i in 0..n {
            let e = self.undigits(&cur);
            exp.push(e);
            log[e as usize] = i as u32;
            cur = self.poly_mul_mod(&cur, &gd);
        }
        for i in 0..n {
            exp.push(exp[i]);
        }
        self.exp = exp;
        self.log = log;
    }

    fn slow_pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = self.digits(1);
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul_mod(&acc, &base);
            }
            base = self.poly_mul_mod(&base, &base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn add(&self, a: El, b: El) -> El {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: El) -> El {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = a % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: El, b: El) -> El {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: El, b: El) -> El {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: El) -> El {
        assert!(a != 0, "inverse of zero");
        let n = self.q - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }

    pub fn div(&self, a: El, b: El) -> El {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: El, e: u64) -> El {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    pub fn from_i64(&self, x: i64) -> El {
        x.rem_euclid(self.p as i64) as El
    }

    pub fn from_bigint(&self, x: &BigInt) -> El {
        x.mod_floor(&BigInt::from(self.p)).to_u32().expect("residue")
    }

    /// `sum a_i b_i`
    pub fn dot(&self, a: &[El], b: &[El]) -> El {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Scales so the first nonzero coordinate is 1; `None` for the zero vector.
    pub fn normalize(&self, v: &[El]) -> Option<Vec<El>> {
        let lead = *v.iter().find(|&&x| x != 0)?;
        let inv = self.inv(lead);
        Some(v.iter().map(|&x| self.mul(x, inv)).collect())
    }

    /// Number of points of P^(n-1)(F_q).
    pub fn projective_count(&self, n: usize) -> u128 {
        let q = self.q as u128;
        (0..n).map(|i| q.pow(i as u32)).sum()
    }

    /// Normalized points of P^(n-1)(F_q), in a fixed order.
    pub fn projective_points(&self, n: usize) -> ProjectivePoints<'_> {
        ProjectivePoints { gf: self, n, lead: 0, tail: vec![0; n], done: n == 0 }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<El>>, cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], t);
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

    /// Basis of the right kernel `{x : M x = 0}` of a matrix given by rows.
    pub fn kernel(&self, rows: &[Vec<El>], cols: usize) -> Vec<Vec<El>> {
        let mut r = rows.to_vec();
        let pivots = self.rref(&mut r, cols);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(r[i][free]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self, rows: &[Vec<El>], cols: usize) -> usize {
        let mut r = rows.to_vec();
        self.rref(&mut r, cols).len()
    }

    pub fn det(&self, m: &[Vec<El>]) -> El {
        let n = m.len();
        let mut a = m.to_vec();
        let mut d = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| a[i][c] != 0) else {
                return 0;
            };
            if p != c {
                a.swap(p, c);
                d = self.neg(d);
            }
            d = self.mul(d, a[c][c]);
            let inv = self.inv(a[c][c]);
            for i in c + 1..n {
                if a[i][c] == 0 {
                    continue;
                }
                let f = self.mul(a[i][c], inv);
                for j in c..n {
                    let t = self.mul(f, a[c][j]);
                    a[i][j] = self.sub(a[i][j], t);
                }
            }
        }
        d
    }

    /// Normalized projective points of the span of the given vectors.
    pub fn span_points(&self, basis: &[Vec<El>]) -> Vec<Vec<El>> {
        if basis.is_empty() {
            return vec![];
        }
        let n = basis[0].len();
        let mut out: Vec<Vec<El>> = self
            .projective_points(basis.len())
            .filter_map(|c| {
                let mut v = vec![0; n];
                for (ci, b) in c.iter().zip(basis) {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = self.add(*x, self.mul(*ci, y));
                    }
                }
                self.normalize(&v)
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

pub struct ProjectivePoints<'a> {
    gf: &'a Gf,
    n: usize,
    lead: usize,
    tail: Vec<El>,
    done: bool,
}

impl Iterator for ProjectivePoints<'_> {
    type Item = Vec<El>;

    fn next(&mut self) -> Option<Vec<El>> {
        if self.done {
            return None;
        }
        let mut v = vec![0; self.n];
        v[self.lead] = 1;
        v[self.lead + 1..].copy_from_slice(&self.tail[self.lead + 1..]);
        // Odometer over the coordinates after the leading 1.
        let mut i = self.n;
        loop {
            if i == self.lead + 1 {
                self.lead += 1;
                if self.lead == self.n {
                    self.done = true;
                }
                self.tail = vec![0; self.n];
                break;
            }
            i -= 1;
            self.tail[i] += 1;
            if self.tail[i] < self.gf.q {
                break;
            }
            self.tail[i] = 0;
        }
        Some(v)
    }
}

fn find_irreducible(p: u64, k: u32) -> Vec<u32> {
    let k = k as usize;
    let total = (p as u128).pow(k as u32);
    for idx in 0..total {
        let mut c = Vec::with_capacity(k + 1);
        let mut t = idx;
        for _ in 0..k {
            c.push((t % p as u128) as u64);
            t /= p as u128;
        }
        if c[0] == 0 {
            continue;
        }
        c.push(1);
        let f = FpPoly::new(p, c.clone());
        let prof = factor_profile_mod_p(&f).expect("nonzero");
        if prof.factors == vec![(k, 1)] {
            return c[..k].iter().map(|&x| x as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut k = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small_extensions() {
        for (p, k) in [(2u64, 3u32), (3, 2), (5, 2), (7, 1), (3, 3)] {
            let f = Gf::new(p, k).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q.min(12) {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    for c in 0..q.min(5) {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_subfield() {
        let f = Gf::new(5, 3).unwrap();
        let fixed = (0..f.q()).filter(|&a| f.pow(a, 5) == a).count();
        assert_eq!(fixed, 5);
    }

    #[test]
    fn projective_enumeration_counts() {
        let f = Gf::new(3, 1).unwrap();
        let pts: Vec<_> = f.projective_points(4).collect();
        assert_eq!(pts.len() as u128, f.projective_count(4));
        assert_eq!(pts.len(), 40);
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 40);
        assert!(pts.iter().all(|v| f.normalize(v).as_ref() == Some(v)));
        let f4 = Gf::new(2, 2).unwrap();
        assert_eq!(f4.projective_points(2).count(), 5);
    }

    #[test]
    fn kernel_and_det() {
        let f = Gf::prime(7).unwrap();
        let m = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(f.det(&m), 0);
        let k = f.kernel(&m, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(f.dot(&m[0], &k[0]), 0);
        assert_eq!(f.det(&[vec![0, 1], vec![1, 0]]), 6);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(121), Some((11, 2)));
        assert_eq!(prime_power(12), None);
    }
}
