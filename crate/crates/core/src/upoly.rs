//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficients are stored lowest degree first and kept trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds from `i64` coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - c`
    pub fn linear(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut v = vec![BigInt::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Coefficients reversed: `x^n p(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Palindromic coefficient sequence.
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Division by a divisor whose leading coefficient is a unit.
    /// Returns `(quotient, remainder)`, or `None` if the divisor is not unit-led.
    pub fn div_rem_unit(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dl = d.leading();
        if !(dl.is_one() || (-&dl).is_one()) {
            return None;
        }
        let dd = d.degree()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient by a unit-led divisor, if the remainder vanishes.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_unit(d)?;
        r.is_zero().then_some(q)
    }

    /// The n-th cyclotomic polynomial.
    pub fn cyclotomic(n: usize) -> IntPoly {
        assert!(n >= 1);
        let xd1 = |d: usize| IntPoly::monomial(BigInt::one(), d) - IntPoly::one();
        let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        let mut num = IntPoly::one();
        let mut den = IntPoly::one();
        for &d in &divisors {
            match mobius(n / d) {
                1 => num = num * xd1(d),
                -1 => den = den * xd1(d),
                _ => {}
            }
        }
        num.div_exact(&den).expect("cyclotomic division")
    }

    /// Strips cyclotomic factors by repeated trial division.
    /// Returns `(n, multiplicity)` pairs in increasing `n` and the cofactor.
    pub fn split_cyclotomic(&self) -> (Vec<(usize, usize)>, IntPoly) {
        let mut rest = self.clone();
        let mut found = Vec::new();
        let deg = self.degree().unwrap_or(0);
        // phi(n) >= sqrt(n/2), so n <= 2 deg^2 covers every candidate.
        let bound = (2 * deg * deg).max(2);
        for n in 1..=bound {
            let phi = totient(n);
            if phi > rest.degree().unwrap_or(0) {
                continue;
            }
            let c = IntPoly::cyclotomic(n);
            let mut m = 0;
            while let Some(q) = rest.div_exact(&c) {
                rest = q;
                m += 1;
            }
            if m > 0 {
                found.push((n, m));
            }
        }
        (found, rest)
    }

    /// Content-free gcd over the rationals, normalized to positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        if a.leading().is_negative() {
            -a
        } else {
            a
        }
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.leading();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading();
            let shifted = IntPoly::monomial(c, rd - dd) * d.clone();
            r = IntPoly::new(r.coeffs.iter().map(|x| x * &lc).collect()) - shifted;
        }
        r
    }

    /// Human-readable product notation for factor lists, e.g. `(x - 1)^6 (x^2 - 6x + 1)`.
    pub fn format_factors(factors: &[(IntPoly, usize)]) -> String {
        factors
            .iter()
            .map(|(f, m)| {
                if *m == 1 {
                    format!("({f})")
                } else {
                    format!("({f})^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Product of `(factor, multiplicity)` pairs.
    pub fn product(factors: &[(IntPoly, usize)]) -> IntPoly {
        factors
            .iter()
            .fold(IntPoly::one(), |acc, (f, m)| acc * f.pow(*m as u32))
    }
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub(crate) fn totient(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_arith() {
        let p = IntPoly::from_i64(&[1, -18, 1]);
        assert_eq!(p.to_string(), "x^2 - 18x + 1");
        assert_eq!((IntPoly::linear(1) * IntPoly::linear(-1)).to_string(), "x^2 - 1");
        assert!(p.is_reciprocal());
        assert!(!IntPoly::from_i64(&[-1, -1, 1]).is_reciprocal());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(IntPoly::cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(IntPoly::cyclotomic(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(IntPoly::cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(IntPoly::cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(IntPoly::cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn split_cyclotomic_factors() {
        let p = IntPoly::linear(1).pow(6) * IntPoly::linear(-1) * IntPoly::from_i64(&[1, -6, 1]);
        let (cyc, rest) = p.split_cyclotomic();
        assert_eq!(cyc, vec![(1, 6), (2, 1)]);
        assert_eq!(rest, IntPoly::from_i64(&[1, -6, 1]));
    }

    #[test]
    fn gcd_detects_common_factor() {
        let a = IntPoly::linear(2) * IntPoly::linear(3);
        let b = IntPoly::linear(2) * IntPoly::linear(5);
        assert_eq!(a.gcd(&b), IntPoly::linear(2));
    }

    #[test]
    fn totients() {
        let t: Vec<usize> = (1..=12).map(totient).collect();
        assert_eq!(t, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
