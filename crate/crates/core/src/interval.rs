//! Certified real arithmetic on rational intervals: Sturm root counting,
//! bisection on dyadic rationals and logarithm enclosures.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::upoly::IntPoly;

/// A closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Enclosure {
    pub fn point(x: BigRational) -> Enclosure {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// True if the enclosure lies inside `[a, b]`.
    pub fn within(&self, a: &BigRational, b: &BigRational) -> bool {
        a <= &self.lo && &self.hi <= b
    }

    /// Widens the endpoints outward onto the grid `2^-bits`.
    pub fn round_out(&self, bits: u32) -> Enclosure {
        let g = BigRational::from_integer(num_traits::pow(BigInt::from(2), bits as usize));
        Enclosure { lo: (&self.lo * &g).floor() / &g, hi: (&self.hi * &g).ceil() / &g }
    }

    pub fn scale(&self, c: &BigRational) -> Enclosure {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            Enclosure { lo: a, hi: b }
        } else {
            Enclosure { lo: b, hi: a }
        }
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", decimal(&self.lo, 15, false), decimal(&self.hi, 15, true))
    }
}

impl Serialize for Enclosure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [decimal(&self.lo, 15, false), decimal(&self.hi, 15, true)].serialize(s)
    }
}

/// Decimal expansion with `digits` fractional digits, rounded down or up.
pub fn decimal(x: &BigRational, digits: usize, round_up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let n = if round_up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = n.is_negative();
    let (q, r) = n.abs().div_rem(&scale);
    let frac = format!("{:0>width$}", r.to_string(), width = digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, q, frac)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn from_int(p: &IntPoly) -> QPoly {
        QPoly(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()).trim()
    }

    fn trim(mut self) -> QPoly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> QPoly {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    fn rem(&self, d: &QPoly) -> QPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let c = &r[k] / &lc;
            if !c.is_zero() {
                for i in 0..=dd {
                    let t = &c * &d.0[i];
                    r[k - dd + i] -= t;
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        QPoly(r).trim()
    }

    fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

/// Sturm chain of a polynomial.
pub struct Sturm {
    chain: Vec<QPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Sturm {
        let p0 = QPoly::from_int(p);
        let mut chain = vec![p0.clone(), p0.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].0.is_empty() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            if r.0.is_empty() {
                break;
            }
            chain.push(r);
        }
        Sturm { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|q| {
                let v = q.eval(x);
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Cauchy bound: every root has absolute value below it.
pub fn root_bound(p: &IntPoly) -> BigRational {
    let lc = p.leading().abs();
    let m = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::one() + BigRational::new(m, lc)
}

/// Bisects a sign change of `p` on `[lo, hi]` until the width is at most `2^-bits`.
pub fn bisect_root(p: &IntPoly, mut lo: BigRational, mut hi: BigRational, bits: u32) -> Enclosure {
    let two = BigRational::from_integer(2.into());
    let eps = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(2), bits as usize));
    let sign_lo = p.eval_rat(&lo).signum();
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / &two;
        let v = p.eval_rat(&mid);
        if v.is_zero() {
            return Enclosure::point(mid);
        }
        if v.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Enclosure { lo, hi }
}

/// `2 artanh(t)` enclosure for `0 <= t < 1/2`, summing until the tail is below `eps`.
fn two_artanh(t: &BigRational, eps: &BigRational) -> Enclosure {
    let t2 = t * t;
    let mut term = t.clone();
    let mut sum = BigRational::zero();
    let mut k: u64 = 0;
    loop {
        sum += &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        term *= &t2;
        k += 1;
        // Remaining terms are bounded by term / ((2k+1)(1 - t^2)).
        let tail = &term / (BigRational::from_integer(BigInt::from(2 * k + 1)) * (BigRational::one() - &t2));
        if tail < *eps || term.is_zero() {
            let two = BigRational::from_integer(2.into());
            return Enclosure { lo: &sum * &two, hi: (sum + tail) * two };
        }
    }
}

/// Enclosure of `ln(x)` for rational `x > 0`, with width below `2^-bits`.
pub fn ln_rational(x: &BigRational, bits: u32) -> Enclosure {
    assert!(x.is_positive(), "logarithm of a nonpositive number");
    let eps = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(2), bits as usize + 8));
    let two = BigRational::from_integer(2.into());
    // x = 2^k m with m in [1, 2).
    let mut m = x.clone();
    let mut k: i64 = 0;
    while m >= two {
        m /= &two;
        k += 1;
    }
    while m < BigRational::one() {
        m *= &two;
        k -= 1;
    }
    let t = (&m - BigRational::one()) / (&m + BigRational::one());
    let lm = two_artanh(&t, &eps);
    let ln2 = two_artanh(&rat(1, 3), &eps);
    let kq = BigRational::from_integer(BigInt::from(k));
    let k_ln2 = ln2.scale(&kq);
    Enclosure { lo: lm.lo + k_ln2.lo, hi: lm.hi + k_ln2.hi }.round_out(bits + 4)
}

/// Enclosure of `ln` over an interval of positive rationals.
pub fn ln_enclosure(x: &Enclosure, bits: u32) -> Enclosure {
    Enclosure { lo: ln_rational(&x.lo, bits).lo, hi: ln_rational(&x.hi, bits).hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x+3)
        let p = IntPoly::from_i64(&[6, -7, 0, 1]);
        let s = Sturm::new(&p);
        assert_eq!(s.count(&rat(-10, 1), &rat(10, 1)), 3);
        assert_eq!(s.count(&rat(0, 1), &rat(3, 2)), 1);
        assert_eq!(s.count(&rat(1, 1), &rat(2, 1)), 1);
        // x^2 + 1 has none.
        assert_eq!(Sturm::new(&IntPoly::from_i64(&[1, 0, 1])).count(&rat(-5, 1), &rat(5, 1)), 0);
    }

    #[test]
    fn sqrt_two() {
        let e = bisect_root(&IntPoly::from_i64(&[-2, 0, 1]), rat(1, 1), rat(2, 1), 40);
        assert!(e.contains(&rat(14142135623, 10_000_000_000)) || e.lo > rat(14142135623, 10_000_000_000));
        assert!(e.hi < rat(14142135624, 10_000_000_000));
    }

    #[test]
    fn logarithms() {
        let l = ln_rational(&rat(2, 1), 60);
        assert!(l.within(&rat(693147180559945, 1_000_000_000_000_000), &rat(693147180559946, 1_000_000_000_000_000)));
        let l = ln_rational(&rat(1, 10), 60);
        assert!(l.within(&rat(-2302585092994046, 1_000_000_000_000_000), &rat(-2302585092994045, 1_000_000_000_000_000)));
        assert_eq!(ln_rational(&rat(1, 1), 40).lo, BigRational::zero());
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&rat(1, 3), 4, false), "0.3333");
        assert_eq!(decimal(&rat(1, 3), 4, true), "0.3334");
        assert_eq!(decimal(&rat(-5, 2), 2, false), "-2.50");
    }
}
