//! Odd solutions of `m^2 - D n^2 = 1` from the continued fraction of `sqrt(D)`.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{param, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PellSolution {
    pub d: u64,
    pub m: BigInt,
    pub n: BigInt,
    /// Trace `4m^2 - 2` of the matching quadratic Salem factor.
    pub trace: BigInt,
    /// `(trace^2 - 4) / D` is a perfect square, so the splitting field is `Q(sqrt(D))`.
    pub splitting_field_ok: bool,
}

/// Fundamental solution of `x^2 - d y^2 = 1`.
fn fundamental(d: u64) -> (BigInt, BigInt) {
    let a0 = d.sqrt();
    let (mut m, mut den, mut a) = (0u64, 1u64, a0);
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(a0));
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    let db = BigInt::from(d);
    while &p * &p - &db * &q * &q != BigInt::one() {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        let p_next = BigInt::from(a) * &p + &p_prev;
        let q_next = BigInt::from(a) * &q + &q_prev;
        (p_prev, p, q_prev, q) = (p, p_next, q, q_next);
    }
    (p, q)
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Finds `m` odd and `n` with `m^2 - D n^2 = 1`. When the fundamental solution
/// has `m` even, its square `(2m^2 - 1, 2mn)` is used.
pub fn pell_odd_solve(d: u64) -> Result<PellSolution> {
    if d < 2 || d.sqrt().pow(2) == d {
        return param(format!("D = {d} must be a positive nonsquare"));
    }
    let (mut m, mut n) = fundamental(d);
    if m.is_even() {
        (m, n) = (BigInt::from(2) * &m * &m - 1, BigInt::from(2) * &m * &n);
    }
    let trace = BigInt::from(4) * &m * &m - 2;
    let disc: BigInt = &trace * &trace - BigInt::from(4);
    let db = BigInt::from(d);
    let splitting_field_ok = Integer::is_multiple_of(&disc, &db) && is_square(&(&disc / &db)) && squarefree(d);
    Ok(PellSolution { d, m, n, trace, splitting_field_ok })
}

pub fn squarefree(d: u64) -> bool {
    (2..).take_while(|f| f * f <= d).all(|f| !d.is_multiple_of(f * f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let s = pell_odd_solve(5).unwrap();
        assert_eq!((s.m.clone(), s.n.clone()), (9.into(), 4.into()));
        assert_eq!(s.trace, BigInt::from(322));
        let s = pell_odd_solve(2).unwrap();
        assert_eq!((s.m, s.n), (3.into(), 2.into()));
        // Fundamental (2, 1) is even, so it is squared.
        let s = pell_odd_solve(3).unwrap();
        assert_eq!((s.m, s.n), (7.into(), 4.into()));
        assert!(pell_odd_solve(16).is_err());
        assert!(pell_odd_solve(1).is_err());
    }

    #[test]
    fn all_squarefree_to_100() {
        for d in (2..=100).filter(|&d| squarefree(d)) {
            let s = pell_odd_solve(d).unwrap();
            assert_eq!(&s.m * &s.m - BigInt::from(d) * &s.n * &s.n, BigInt::one(), "D = {d}");
            assert!(s.m.is_odd() && s.splitting_field_ok, "D = {d}");
        }
    }

    #[test]
    fn large_period() {
        // D = 61 has fundamental solution 1766319049.
        let s = pell_odd_solve(61).unwrap();
        assert_eq!(s.m, BigInt::from(1766319049u64));
    }
}
