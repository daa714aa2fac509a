//! Exact integer and rational linear algebra.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{param, shape, Error, Result};
use crate::fp::is_prime;
use crate::upoly::IntPoly;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return shape(format!("{} entries for a {rows}x{cols} matrix", data.len()));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Panics on ragged input; intended for literals.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged matrix literal");
            data.extend(row.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return shape("ragged rows");
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(d: &[BigInt]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul_checked(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            ));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return shape("cannot add matrices of different shapes");
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| (0..self.rows).fold(BigInt::zero(), |acc, i| acc + &v[i] * &self[(i, j)]))
            .collect()
    }

    /// Bilinear form `u G v^T`.
    pub fn bilinear(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        let uv = self.vec_mul(u);
        uv.iter().zip(v).fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).fold(BigInt::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Submatrix picking the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.mul_checked(rhs).expect("matrix shape mismatch")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} ", self.rows, self.cols)?;
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let big = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        IntMatrix::from_big_rows(big).map_err(serde::de::Error::custom)
    }
}

/// Signed determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return shape(format!("determinant of a {}x{} matrix", m.rows, m.cols));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            swap_rows(&mut a, k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Rank over the rationals, again by fraction-free elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[(i, j)] * &a[(r, c)] - &a[(i, c)] * &a[(r, j)];
                a[(i, j)] = v / &prev;
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = a[(r, c)].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn swap_rows(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols {
        a.data.swap(i * a.cols + c, j * a.cols + c);
    }
}

fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..a.rows {
        a.data.swap(r * a.cols + i, r * a.cols + j);
    }
}

/// Characteristic polynomial `det(xI - m)` via Faddeev-LeVerrier.
/// Every division in the recurrence is exact over the integers.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return shape(format!("characteristic polynomial of a {}x{} matrix", m.rows, m.cols));
    }
    let n = m.rows;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = m * &mk;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        mk = next;
        let t = (m * &mk).trace();
        let (q, r) = t.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = -q;
    }
    Ok(IntPoly::new(coeffs))
}

/// Evaluates an integer polynomial at a square matrix (Horner).
pub fn poly_at_matrix(p: &IntPoly, m: &IntMatrix) -> IntMatrix {
    let n = m.rows;
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = &acc * m;
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

/// Exact power by binary exponentiation.
pub fn mat_pow(m: &IntMatrix, mut e: u64) -> Result<IntMatrix> {
    if !m.is_square() {
        return shape("power of a non-square matrix");
    }
    let mut base = m.clone();
    let mut acc = IntMatrix::identity(m.rows);
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub left_transform: IntMatrix,
    pub right_transform: IntMatrix,
}

impl SnfResult {
    /// Nontrivial cyclic factors of the cokernel (entries > 1), plus zeros for free parts.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form with unimodular transforms, `left * m * right = diag`.
///
/// Pivot rule: smallest nonzero absolute value in the active block,
/// ties broken by lowest row and then lowest column.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, t) else {
                break;
            };
            swap_rows(&mut a, t, pi);
            swap_rows(&mut left, t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut right, t, pj);
            let p = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    row_axpy(&mut a, i, t, &q);
                    row_axpy(&mut left, i, t, &q);
                }
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    col_axpy(&mut a, j, t, &q);
                    col_axpy(&mut right, j, t, &q);
                }
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the rest.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let one = -BigInt::one();
                    row_axpy(&mut a, t, i, &one);
                    row_axpy(&mut left, t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            for j in 0..cols {
                a[(t, j)] = -a[(t, j)].clone();
            }
            for j in 0..rows {
                left[(t, j)] = -left[(t, j)].clone();
            }
        }
    }
    let invariant_factors = (0..n).map(|i| a[(i, i)].clone()).collect();
    SnfResult { invariant_factors, left_transform: left, right_transform: right }
}

fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(b, _, _)| v < *b) {
                best = Some((v, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// row_i -= q * row_k
fn row_axpy(a: &mut IntMatrix, i: usize, k: usize, q: &BigInt) {
    for j in 0..a.cols {
        let v = &a[(k, j)] * q;
        a[(i, j)] -= v;
    }
}

/// col_j -= q * col_k
fn col_axpy(a: &mut IntMatrix, j: usize, k: usize, q: &BigInt) {
    for i in 0..a.rows {
        let v = &a[(i, k)] * q;
        a[(i, j)] -= v;
    }
}

/// Null space over F_p, one reduced basis vector per free column.
pub fn kernel_mod_p(m: &IntMatrix, p: u64) -> Result<Vec<Vec<u64>>> {
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    let rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|x| mod_u64(x, p)).collect())
        .collect();
    Ok(crate::fp::kernel(rows, m.cols, p))
}

pub(crate) fn mod_u64(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// `(n_plus, n_minus, n_zero)` of a symmetric matrix.
///
/// The characteristic polynomial of a symmetric matrix is real-rooted, so
/// Descartes' rule of signs counts positive and negative roots exactly.
pub fn signature(g: &IntMatrix) -> Result<(usize, usize, usize)> {
    if !g.is_symmetric() {
        return shape("signature of a non-symmetric matrix");
    }
    let cp = char_poly(g)?;
    let c = cp.coeffs();
    let zero = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    let c = &c[zero..];
    let sign_changes = |alt: bool| {
        let signs: Vec<bool> = c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| x.is_negative() ^ (alt && i % 2 == 1))
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    Ok((sign_changes(false), sign_changes(true), zero))
}

/// Dense matrix of normalized rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return shape("rational matrix product shape mismatch");
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Integer matrix if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if self.data.iter().any(|x| !x.is_integer()) {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.to_integer()).collect(),
        })
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return shape("inverse of a non-square matrix");
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return Err(Error::Degenerate("singular matrix".into()));
            };
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let piv = a[(c, c)].clone();
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] / &piv;
                inv[(c, j)] = &inv[(c, j)] / &piv;
            }
            for i in 0..n {
                if i == c || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in 0..n {
                    let (x, y) = (&a[(c, j)] * &f, &inv[(c, j)] * &f);
                    a[(i, j)] -= x;
                    inv[(i, j)] -= y;
                }
            }
        }
        Ok(inv)
    }

    /// Solves `x * self = b` for a row vector `x`; `self` must be invertible.
    pub fn solve_left(&self, b: &[BigRational]) -> Result<Vec<BigRational>> {
        let inv = self.inverse()?;
        Ok((0..self.rows)
            .map(|j| (0..self.cols).fold(BigRational::zero(), |acc, k| acc + &b[k] * &inv[(k, j)]))
            .collect())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&IntMatrix::from_rows(&[[4, 6], [6, 4]])).unwrap(), big(-20));
        assert_eq!(det(&IntMatrix::identity(2)).unwrap(), big(1));
        assert_eq!(det(&IntMatrix::from_rows(&[[0, 1], [1, 0]])).unwrap(), big(-1));
        assert_eq!(det(&IntMatrix::from_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]])).unwrap(), big(0));
        assert!(det(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let m = IntMatrix::from_rows(&[[-3, 8], [-8, 21]]);
        assert_eq!(char_poly(&m).unwrap(), IntPoly::from_i64(&[1, -18, 1]));
        let five = IntMatrix::from_rows(&[[-1, 0, 2, 2], [-2, 1, 2, 4], [-4, 2, 5, 6], [-6, 2, 8, 11]]);
        assert_eq!(char_poly(&five).unwrap(), IntPoly::from_i64(&[1, -16, 14, -16, 1]));
        assert_eq!(char_poly(&IntMatrix::identity(3)).unwrap(), IntPoly::linear(1).pow(3));
    }

    #[test]
    fn snf_simple() {
        let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.invariant_factors, vec![big(2), big(6), big(12)]);
        let d = &(&r.left_transform * &m) * &r.right_transform;
        assert_eq!(d, IntMatrix::diagonal(&r.invariant_factors));
    }

    #[test]
    fn snf_rectangular_and_zero() {
        let m = IntMatrix::from_rows(&[[0, 0, 0], [0, 0, 0]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.invariant_factors, vec![big(0), big(0)]);
        let m = IntMatrix::from_rows(&[[2, 0, 0], [0, 3, 0]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.invariant_factors, vec![big(1), big(6)]);
    }

    #[test]
    fn mat_pow_fibonacci_square() {
        let m = IntMatrix::from_rows(&[[-3, 8], [-8, 21]]);
        assert_eq!(mat_pow(&m, 2).unwrap(), IntMatrix::from_rows(&[[-55, 144], [-144, 377]]));
        assert_eq!(mat_pow(&m, 0).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn kernels_mod_p() {
        assert_eq!(kernel_mod_p(&IntMatrix::zeros(4, 4), 5).unwrap().len(), 4);
        assert_eq!(kernel_mod_p(&IntMatrix::identity(4), 5).unwrap().len(), 0);
        assert!(kernel_mod_p(&IntMatrix::identity(4), 6).is_err());
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&IntMatrix::from_rows(&[[4, 6], [6, 4]])).unwrap(), (1, 1, 0));
        let pent = IntMatrix::from_rows(&[[0, 2, 2, 2], [2, 0, 2, 2], [2, 2, 0, 2], [2, 2, 2, 0]]);
        assert_eq!(signature(&pent).unwrap(), (1, 3, 0));
        assert_eq!(signature(&IntMatrix::identity(5)).unwrap(), (5, 0, 0));
        assert_eq!(signature(&IntMatrix::from_rows(&[[1, 0], [0, 0]])).unwrap(), (1, 0, 1));
        assert!(signature(&IntMatrix::from_rows(&[[1, 2], [3, 4]])).is_err());
    }

    #[test]
    fn rational_inverse() {
        let m = IntMatrix::from_rows(&[[4, 6], [6, 4]]).to_rat();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn json_round_trip() {
        let m = IntMatrix::from_rows(&[[1, -2], [3, 4]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1","-2"],["3","4"]]"#);
        let back: IntMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
