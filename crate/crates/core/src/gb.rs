//! Groebner bases over F_p and point counts of zero-dimensional schemes.
//!
//! Points are counted algebraically: the quotient algebra `A = F_p[x]/I` of each
//! affine chart is built from a reduced Groebner basis, and the Frobenius
//! `a -> a^p` on `A` gives both the number of geometric points (the rank of a
//! high Frobenius power, which kills nilpotents) and the number of points over
//! each extension `F_{p^k}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{param, Result};
use crate::fp::{inv_mod, is_prime, rref};
use crate::poly::{Field, MultiPoly};

/// Exponent vector in graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Mon(Vec<u16>);

impl Mon {
    fn deg(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn divides(&self, o: &Mon) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, o: &Mon) -> Mon {
        Mon(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, o: &Mon) -> Mon {
        Mon(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    fn lcm(&self, o: &Mon) -> Mon {
        Mon(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn coprime(&self, o: &Mon) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Mon {
    fn cmp(&self, o: &Mon) -> Ordering {
        self.deg().cmp(&o.deg()).then_with(|| {
            for (a, b) in self.0.iter().zip(&o.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mon {
    fn partial_cmp(&self, o: &Mon) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial over F_p; terms keyed by monomial, largest last.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Pol(BTreeMap<Mon, u64>);

impl Pol {
    fn lead(&self) -> Option<(&Mon, &u64)> {
        self.0.last_key_value()
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn monic(mut self, p: u64) -> Pol {
        if let Some((_, &c)) = self.lead() {
            let inv = inv_mod(c, p);
            for v in self.0.values_mut() {
                *v = *v * inv % p;
            }
        }
        self
    }

    /// `self - c * m * g`.
    fn sub_mul(&mut self, c: u64, m: &Mon, g: &Pol, p: u64) {
        for (gm, gc) in &g.0 {
            let key = gm.mul(m);
            let t = c * gc % p;
            let e = self.0.entry(key.clone()).or_insert(0);
            *e = (*e + p - t) % p;
            if *e == 0 {
                self.0.remove(&key);
            }
        }
    }
}

/// Fully reduces `f` modulo the monic polynomials `g`.
fn normal_form(f: &Pol, g: &[Pol], p: u64) -> Pol {
    let mut work = f.clone();
    let mut out = Pol(BTreeMap::new());
    while let Some((m, c)) = work.0.pop_last() {
        match g.iter().find(|gi| gi.lead().is_some_and(|(lm, _)| lm.divides(&m))) {
            Some(gi) => {
                let (lm, _) = gi.lead().unwrap();
                let q = m.div(lm);
                // The leading term cancels exactly; subtract the rest.
                let mut rest = gi.clone();
                rest.0.pop_last();
                work.sub_mul(c, &q, &rest, p);
            }
            None => {
                out.0.insert(m, c);
            }
        }
    }
    out
}

fn s_poly(a: &Pol, b: &Pol, p: u64) -> Pol {
    let (la, _) = a.lead().unwrap();
    let (lb, _) = b.lead().unwrap();
    let l = la.lcm(lb);
    let mut s = Pol(BTreeMap::new());
    s.sub_mul(p - 1, &l.div(la), a, p);
    s.sub_mul(1, &l.div(lb), b, p);
    s
}

/// Reduced Groebner basis of the ideal generated by `gens` (grevlex).
fn groebner(gens: Vec<Pol>, p: u64) -> Vec<Pol> {
    let mut g: Vec<Pol> = Vec::new();
    for f in gens {
        let r = normal_form(&f, &g, p);
        if !r.is_zero() {
            g.push(r.monic(p));
        }
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let lcm_deg = |g: &[Pol], (i, j): (usize, usize)| g[i].lead().unwrap().0.lcm(g[j].lead().unwrap().0).deg();
    while let Some(&pair) = pairs.iter().min_by_key(|&&pr| (lcm_deg(&g, pr), pr)) {
        pairs.remove(&pair);
        let (i, j) = pair;
        let (li, lj) = (g[i].lead().unwrap().0.clone(), g[j].lead().unwrap().0.clone());
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].lead().unwrap().0.divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_poly(&g[i], &g[j], p), &g, p);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(p);
        if r.lead().unwrap().0.deg() == 0 {
            return vec![r];
        }
        let n = g.len();
        g.push(r);
        for k in 0..n {
            pairs.insert((k, n));
        }
    }
    // Minimalize, then interreduce.
    let mut min: Vec<Pol> = Vec::new();
    for (i, f) in g.iter().enumerate() {
        let lf = f.lead().unwrap().0;
        let redundant = g.iter().enumerate().any(|(k, h)| {
            let lh = h.lead().unwrap().0;
            k != i && lh.divides(lf) && (lh != lf || k < i)
        });
        if !redundant {
            min.push(f.clone());
        }
    }
    let mut out = Vec::with_capacity(min.len());
    for i in 0..min.len() {
        let others: Vec<Pol> = min.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, f)| f.clone()).collect();
        let (lm, lc) = min[i].lead().map(|(m, c)| (m.clone(), *c)).unwrap();
        let mut tail = min[i].clone();
        tail.0.pop_last();
        let mut r = normal_form(&tail, &others, p);
        r.0.insert(lm, lc);
        out.push(r.monic(p));
    }
    out.sort_by(|a, b| a.lead().unwrap().0.cmp(b.lead().unwrap().0));
    out
}

/// Largest quotient dimension handled before declaring an ideal positive-dimensional.
const MAX_LENGTH: usize = 400;

/// Quotient algebra of a zero-dimensional affine ideal.
struct Quotient {
    p: u64,
    basis: Vec<Mon>,
    /// `mult[k]` is the matrix of multiplication by `basis[k]`, column-major in `basis`.
    mult: Vec<Vec<Vec<u64>>>,
}

impl Quotient {
    /// `None` when the ideal is not zero-dimensional.
    fn new(gb: &[Pol], nvars: usize, p: u64) -> Option<Quotient> {
        if gb.len() == 1 && gb[0].lead().unwrap().0.deg() == 0 {
            return Some(Quotient { p, basis: vec![], mult: vec![] });
        }
        let lms: Vec<&Mon> = gb.iter().map(|g| g.lead().unwrap().0).collect();
        for v in 0..nvars {
            let pure = lms.iter().any(|m| m.0[v] > 0 && m.0.iter().enumerate().all(|(i, &e)| i == v || e == 0));
            if !pure {
                return None;
            }
        }
        let standard = |m: &Mon| !lms.iter().any(|l| l.divides(m));
        let mut basis = vec![Mon(vec![0; nvars])];
        let mut seen: BTreeSet<Mon> = basis.iter().cloned().collect();
        let mut i = 0;
        while i < basis.len() {
            for v in 0..nvars {
                let mut m = basis[i].clone();
                m.0[v] += 1;
                if standard(&m) && seen.insert(m.clone()) {
                    basis.push(m);
                }
            }
            i += 1;
            if basis.len() > MAX_LENGTH {
                return None;
            }
        }
        basis.sort();
        let index: BTreeMap<Mon, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = basis.len();
        let coords = |f: &Pol| {
            let mut v = vec![0u64; n];
            for (m, c) in &f.0 {
                v[index[m]] = *c;
            }
            v
        };
        let mult = basis
            .iter()
            .map(|b| {
                // Columns: NF(b * basis[j]).
                let cols: Vec<Vec<u64>> = basis
                    .iter()
                    .map(|bj| {
                        let mut f = Pol(BTreeMap::new());
                        f.0.insert(b.mul(bj), 1);
                        coords(&normal_form(&f, gb, p))
                    })
                    .collect();
                cols
            })
            .collect();
        Some(Quotient { p, basis, mult })
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.len();
        let p = self.p;
        let mut out = vec![0u64; n];
        for (k, &ak) in a.iter().enumerate() {
            if ak == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ak * bj % p;
                for (o, &m) in out.iter_mut().zip(&self.mult[k][j]) {
                    *o = (*o + c * m) % p;
                }
            }
        }
        out
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let n = self.len();
        let mut acc = vec![0u64; n];
        acc[0] = 1;
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Frobenius as a matrix acting on column vectors.
    fn frobenius(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let cols: Vec<Vec<u64>> = (0..n)
            .map(|j| {
                let mut e = vec![0u64; n];
                e[j] = 1;
                self.pow(&e, self.p)
            })
            .collect();
        transpose(&cols)
    }
}

fn transpose(m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len()).map(|i| m.iter().map(|r| r[i]).collect()).collect()
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![0u64; n];
            for (k, &x) in row.iter().enumerate() {
                if x != 0 {
                    for (o, &y) in out.iter_mut().zip(&b[k]) {
                        *o = (*o + x * y) % p;
                    }
                }
            }
            out
        })
        .collect()
}

fn rank(m: &[Vec<u64>], p: u64) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rows = m.to_vec();
    rref(&mut rows, cols, p).len()
}

/// Geometric point count of a zero-dimensional scheme over F_p.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PointCount {
    /// Sum of local lengths, each taken on the coordinate stratum holding the point.
    /// Strata off the main chart are cut by hyperplanes, so this bounds the true
    /// length from below.
    pub length: usize,
    /// Distinct points over the algebraic closure.
    pub distinct: usize,
    /// `(d, n)`: `n` Galois orbits of size `d`.
    pub orbits: Vec<(usize, usize)>,
}

impl PointCount {
    /// Points defined over `F_{p^k}`.
    pub fn rational(&self, k: usize) -> usize {
        self.orbits.iter().filter(|(d, _)| k.is_multiple_of(*d)).map(|(d, n)| d * n).sum()
    }

    /// Smallest `k` with every point defined over `F_{p^k}`.
    pub fn splitting_degree(&self) -> usize {
        self.orbits.iter().fold(1, |l, &(d, _)| l.lcm(&d))
    }

    fn absorb(&mut self, o: PointCount) {
        self.length += o.length;
        self.distinct += o.distinct;
        for (d, n) in o.orbits {
            match self.orbits.iter_mut().find(|x| x.0 == d) {
                Some(x) => x.1 += n,
                None => self.orbits.push((d, n)),
            }
        }
        self.orbits.sort_unstable();
    }
}

fn euler_phi(n: usize) -> usize {
    crate::upoly::totient(n)
}

fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut r = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            r = -r;
        }
        d += 1;
    }
    if m > 1 {
        r = -r;
    }
    r
}

fn count_affine(gens: Vec<Pol>, nvars: usize, p: u64) -> Option<PointCount> {
    let gb = groebner(gens, p);
    let q = Quotient::new(&gb, nvars, p)?;
    let n = q.len();
    if n == 0 {
        return Some(PointCount::default());
    }
    let f = q.frobenius();
    // p^e >= n kills every nilpotent.
    let mut e = 1;
    while (p as u128).pow(e) < n as u128 {
        e += 1;
    }
    let mut fe = f.clone();
    for _ in 1..e {
        fe = mat_mul(&fe, &f, p);
    }
    let distinct = rank(&fe, p);
    // fixed(k) = dim ker(F^k - 1) = sum over points of gcd(k, d).
    let mut fixed = vec![0usize; distinct + 1];
    let mut fk = f.clone();
    for k in 1..=distinct {
        if k > 1 {
            fk = mat_mul(&fk, &f, p);
        }
        let mut m = fk.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = (row[i] + p - 1) % p;
        }
        fixed[k] = n - rank(&m, p);
    }
    // h(k) = #orbits whose size is divisible by k.
    let mut h = vec![0i64; distinct + 1];
    for k in 1..=distinct {
        let lower: i64 = (1..k).filter(|e| k % e == 0).map(|e| euler_phi(e) as i64 * h[e]).sum();
        h[k] = (fixed[k] as i64 - lower) / euler_phi(k) as i64;
    }
    let mut orbits = Vec::new();
    for d in 1..=distinct {
        let g: i64 = (1..=distinct / d).map(|m| mobius(m) * h[d * m]).sum();
        if g > 0 {
            orbits.push((d, g as usize));
        }
    }
    Some(PointCount { length: n, distinct, orbits })
}

fn to_pol(f: &MultiPoly, p: u64) -> Pol {
    let mut out = Pol(BTreeMap::new());
    for (m, c) in f.reduce_mod(p).terms() {
        let c = c.numer().to_u64().expect("reduced coefficient");
        if c != 0 {
            out.0.insert(Mon(m.0.clone()), c);
        }
    }
    out
}

/// Counts the common zeros of `eqs`, each multihomogeneous in the blocks of its ring,
/// in the product of projective spaces given by those blocks.
///
/// Returns `None` if the zero set is not finite.
pub fn count_projective_zeros(eqs: &[MultiPoly], p: u64) -> Result<Option<PointCount>> {
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    let Some(first) = eqs.first() else {
        return param("no equations");
    };
    if let Field::Fp(q) = first.field() {
        if q != p {
            return param(format!("equations live over F_{q}, not F_{p}"));
        }
    }
    let sizes: Vec<usize> = first.blocks().iter().map(|b| b.vars.len()).collect();
    let pols: Vec<Pol> = eqs.iter().map(|f| to_pol(f, p)).collect();
    let mut total = PointCount::default();
    // A chart picks, in every factor, the first nonzero coordinate.
    let mut chart = vec![0usize; sizes.len()];
    loop {
        // Offsets: variables of factor b after the pivot are kept, in order.
        let mut keep: Vec<Option<usize>> = Vec::new();
        let mut zero: Vec<bool> = Vec::new();
        let mut nv = 0;
        for (b, &s) in sizes.iter().enumerate() {
            for i in 0..s {
                zero.push(i < chart[b]);
                if i > chart[b] {
                    keep.push(Some(nv));
                    nv += 1;
                } else {
                    keep.push(None);
                }
            }
        }
        let gens: Vec<Pol> = pols
            .iter()
            .map(|f| {
                let mut g = Pol(BTreeMap::new());
                for (m, c) in &f.0 {
                    if m.0.iter().zip(&zero).any(|(&e, &z)| z && e > 0) {
                        continue;
                    }
                    let mut e = vec![0u16; nv];
                    for (i, &x) in m.0.iter().enumerate() {
                        if let Some(k) = keep[i] {
                            e[k] = x;
                        }
                    }
                    let key = Mon(e);
                    let v = g.0.entry(key.clone()).or_insert(0);
                    *v = (*v + c) % p;
                    if *v == 0 {
                        g.0.remove(&key);
                    }
                }
                g
            })
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() && nv > 0 {
            return Ok(None);
        }
        let found = if gens.is_empty() {
            Some(PointCount { length: 1, distinct: 1, orbits: vec![(1, 1)] })
        } else {
            count_affine(gens, nv, p)
        };
        match found {
            Some(c) => total.absorb(c),
            None => return Ok(None),
        }
        // Next chart.
        let mut b = 0;
        loop {
            if b == sizes.len() {
                return Ok(Some(total));
            }
            chart[b] += 1;
            if chart[b] < sizes[b] {
                break;
            }
            chart[b] = 0;
            b += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Block;
    use num_bigint::BigInt;

    fn p3() -> Vec<Block> {
        vec![Block::indexed("x", 4)]
    }

    fn var(i: usize) -> MultiPoly {
        MultiPoly::var(Field::Q, p3(), i)
    }

    #[test]
    fn twisted_points() {
        // x1^2 + x0^2 = 0, x2 = 0, x3 = 0 in P^3: two points conjugate over F_7.
        let eqs = vec![var(1).mul(&var(1)).add(&var(0).mul(&var(0))), var(2), var(3)];
        let c = count_projective_zeros(&eqs, 7).unwrap().unwrap();
        assert_eq!((c.length, c.distinct), (2, 2));
        assert_eq!(c.orbits, vec![(2, 1)]);
        assert_eq!((c.rational(1), c.rational(2)), (0, 2));
        // Over F_5, -1 is a square, so both points are rational.
        let c = count_projective_zeros(&eqs, 5).unwrap().unwrap();
        assert_eq!(c.orbits, vec![(1, 2)]);
    }

    #[test]
    fn multiplicity_is_not_a_point() {
        // x1^2 = 0, x2 = 0, x3 = 0: one double point.
        let eqs = vec![var(1).mul(&var(1)), var(2), var(3)];
        let c = count_projective_zeros(&eqs, 11).unwrap().unwrap();
        assert_eq!((c.length, c.distinct), (2, 1));
    }

    #[test]
    fn points_at_infinity_and_curves() {
        // x0 x1 = 0, x2 = 0, x3 = 0: the points [1:0:0:0] and [0:1:0:0].
        let eqs = vec![var(0).mul(&var(1)), var(2), var(3)];
        let c = count_projective_zeros(&eqs, 3).unwrap().unwrap();
        assert_eq!(c.distinct, 2);
        // A line is not finite.
        assert!(count_projective_zeros(&[var(2), var(3)], 3).unwrap().is_none());
        // Empty: x0 = x1 = x2 = x3 = 0.
        let c = count_projective_zeros(&[var(0), var(1), var(2), var(3)], 3).unwrap().unwrap();
        assert_eq!(c.distinct, 0);
    }

    #[test]
    fn cubic_orbit() {
        // x1^3 - 2 x0^3 over F_7: 2 is not a cube, so an orbit of size 3.
        let two = MultiPoly::constant(Field::Q, p3(), BigInt::from(2).into());
        let f = var(1).pow(3).sub(&var(0).pow(3).mul(&two));
        let c = count_projective_zeros(&[f, var(2), var(3)], 7).unwrap().unwrap();
        assert_eq!(c.orbits, vec![(3, 1)]);
        assert_eq!(c.splitting_degree(), 3);
    }

    #[test]
    fn product_of_lines() {
        // The diagonal of P^1 x P^1 meets s0 t0 = 0 doubly at ([0:1], [0:1]).
        let blocks = vec![Block::indexed("s", 2), Block::indexed("t", 2)];
        let v = |i| MultiPoly::var(Field::Q, blocks.clone(), i);
        let eqs = vec![v(0).mul(&v(3)).sub(&v(1).mul(&v(2))), v(0).mul(&v(2))];
        let c = count_projective_zeros(&eqs, 5).unwrap().unwrap();
        assert_eq!(c.distinct, 1);
    }
}
