//! Salem certification, entropy of lattice automorphisms and the four quadratic families.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{isometry_check, pent_alpha, NSAction};
use crate::error::{param, Error, Result};
use crate::interval::{bisect_root, ln_enclosure, root_bound, Enclosure, Sturm};
use crate::linalg::{char_poly, mat_pow, IntMatrix};
use crate::upoly::IntPoly;

const BITS: u32 = 48;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum SalemStatus {
    Salem,
    NotSalem(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SalemCertificate {
    pub polynomial: String,
    pub status: SalemStatus,
    /// `lambda` in closed form for quadratic polynomials.
    pub exact_root: Option<String>,
    pub lambda: Option<Enclosure>,
    pub entropy: Option<Enclosure>,
}

impl SalemCertificate {
    pub fn is_salem(&self) -> bool {
        self.status == SalemStatus::Salem
    }
}

/// `T` with `p(x) = x^h T(x + 1/x)` for a reciprocal `p` of degree `2h`.
fn trace_polynomial(p: &IntPoly) -> IntPoly {
    let d = p.degree().expect("nonzero");
    let h = d / 2;
    // C_j(y) = x^j + x^-j: C_0 = 2, C_1 = y, C_{j+1} = y C_j - C_{j-1}.
    let y = IntPoly::x();
    let mut c_prev = IntPoly::from_i64(&[2]);
    let mut c = y.clone();
    let mut t = IntPoly::new(vec![p.coeff(h)]);
    for j in 1..=h {
        t = t + IntPoly::new(vec![p.coeff(h + j)]) * c.clone();
        let next = y.clone() * c.clone() - c_prev;
        c_prev = c;
        c = next;
    }
    t
}

fn not_salem(p: &IntPoly, reason: &str) -> SalemCertificate {
    SalemCertificate {
        polynomial: p.to_string(),
        status: SalemStatus::NotSalem(reason.into()),
        exact_root: None,
        lambda: None,
        entropy: None,
    }
}

/// Decides whether `p` is a Salem polynomial and encloses its root above 1.
pub fn salem_certify(p: &IntPoly) -> Result<SalemCertificate> {
    if p.is_zero() {
        return param("zero polynomial");
    }
    let p = if p.leading().is_negative() { -p.clone() } else { p.clone() };
    let d = p.degree().unwrap();
    if d < 2 {
        return Ok(not_salem(&p, "degree below 2"));
    }
    if !p.is_monic() {
        return Ok(not_salem(&p, "not monic"));
    }
    if !p.is_reciprocal() {
        return Ok(not_salem(&p, "not reciprocal"));
    }
    if p.eval(&BigInt::one()).is_zero() || p.eval(&-BigInt::one()).is_zero() {
        return Ok(not_salem(&p, "root at 1 or -1"));
    }
    let (cyc, _) = p.split_cyclotomic();
    if !cyc.is_empty() {
        return Ok(not_salem(&p, "has cyclotomic factors"));
    }
    if p.gcd(&p.derivative()).degree() != Some(0) {
        return Ok(not_salem(&p, "repeated roots"));
    }
    let t = trace_polynomial(&p);
    let h = d / 2;
    let sturm = Sturm::new(&t);
    let big = root_bound(&t);
    let two = BigRational::from_integer(2.into());
    let above = sturm.count(&two, &big);
    let inside = sturm.count(&-two.clone(), &two);
    if above != 1 {
        return Ok(not_salem(&p, "needs exactly one real root above 1"));
    }
    if inside != h - 1 {
        return Ok(not_salem(&p, "conjugates off the unit circle"));
    }
    // Exactly one root of p in (1, B]: bisect it.
    let b = root_bound(&p);
    debug_assert_eq!(Sturm::new(&p).count(&BigRational::one(), &b), 1);
    let lambda = bisect_root(&p, BigRational::one(), b, BITS);
    let entropy = ln_enclosure(&lambda, BITS);
    let exact_root = (d == 2).then(|| quadratic_root(&-p.coeff(1))).flatten();
    Ok(SalemCertificate { polynomial: p.to_string(), status: SalemStatus::Salem, exact_root, lambda: Some(lambda), entropy: Some(entropy) })
}

/// `(t + sqrt(t^2 - 4)) / 2` with the square part pulled out of the radical.
fn quadratic_root(t: &BigInt) -> Option<String> {
    let disc = t * t - BigInt::from(4);
    let n = disc.to_u128()?;
    if n > 1u128 << 80 {
        return None;
    }
    let (mut s, mut d) = (1u128, n);
    let mut f = 2u128;
    while f * f <= d {
        while d % (f * f) == 0 {
            d /= f * f;
            s *= f;
        }
        f += 1;
    }
    let t = t.to_i128()?;
    let rad = |c: u128| if c == 1 { format!("sqrt({d})") } else { format!("{c}*sqrt({d})") };
    Some(if t % 2 == 0 && s % 2 == 0 {
        format!("{} + {}", t / 2, rad(s / 2))
    } else {
        format!("({t} + {})/2", rad(s))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntropyReport {
    pub action: String,
    pub char_poly: String,
    pub factorization: String,
    /// Cyclotomic indices with multiplicities.
    pub cyclotomic: Vec<(usize, usize)>,
    pub salem: Option<SalemCertificate>,
    /// Lower bound for the entropy: log of the spectral radius on the lattice.
    pub entropy: Enclosure,
}

/// Splits the characteristic polynomial into cyclotomic factors and the rest,
/// certifying the rest as Salem when it is nonconstant.
pub fn entropy_report(a: &NSAction) -> Result<EntropyReport> {
    if !isometry_check(a)? {
        return param(format!("{} does not preserve the form", a.qualified_name()));
    }
    let cp = char_poly(&a.matrix)?;
    let (cyc, rest) = cp.split_cyclotomic();
    let mut factors: Vec<(IntPoly, usize)> = cyc.iter().map(|&(n, m)| (IntPoly::cyclotomic(n), m)).collect();
    let salem = if rest.degree().unwrap_or(0) > 0 {
        factors.push((rest.clone(), 1));
        Some(salem_certify(&rest)?)
    } else {
        None
    };
    let entropy = salem
        .as_ref()
        .and_then(|s| s.entropy.clone())
        .unwrap_or_else(|| Enclosure::point(BigRational::zero()));
    Ok(EntropyReport {
        action: a.qualified_name(),
        char_poly: cp.to_string(),
        factorization: IntPoly::format_factors(&factors),
        cyclotomic: cyc,
        salem,
        entropy,
    })
}

/// The four quadratic Salem families in the penteract generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SalemFamily {
    Main,
    One,
    Two,
    Three,
}

impl std::str::FromStr for SalemFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<SalemFamily> {
        Ok(match s {
            "main" => SalemFamily::Main,
            "one" | "1" => SalemFamily::One,
            "two" | "2" => SalemFamily::Two,
            "three" | "3" => SalemFamily::Three,
            _ => return Err(Error::Lookup(format!("unknown Salem family {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SalemFamilyResult {
    pub family: SalemFamily,
    pub k: u64,
    pub word: String,
    pub predicted: String,
    pub found: Option<String>,
    pub verified: bool,
    /// The predicted factor is (x - 1)^2 or (x + 1)^2.
    pub degenerate: bool,
}

fn word_matrix(pairs: &[(usize, usize)]) -> Result<IntMatrix> {
    let mut m = IntMatrix::identity(4);
    for &(k, l) in pairs {
        m = m.mul_checked(&pent_alpha(k, l)?.matrix)?;
    }
    Ok(m)
}

/// Evaluates the family word at `k` and compares its quadratic factor with the closed form.
pub fn salem_family(family: SalemFamily, k: u64) -> Result<SalemFamilyResult> {
    use SalemFamily::*;
    let kk = BigInt::from(k);
    let (g1, g2, power_first, word, trace): (&[(usize, usize)], &[(usize, usize)], bool, String, BigInt) = match family {
        Main => (&[(3, 4), (2, 4)], &[(1, 3), (1, 2)], true, format!("(a34_5 a24_5)^{k} a13_5 a12_5"), {
            let o = BigInt::from(2) * &kk + 1;
            BigInt::from(4) * &o * &o - 2
        }),
        One => (&[(3, 4), (2, 4)], &[(1, 4)], true, format!("(a34_5 a24_5)^{k} a14_5"), {
            let e = BigInt::from(2) * &kk;
            BigInt::from(4) * &e * &e + 2
        }),
        Two => (&[(3, 4), (2, 4), (3, 4)], &[(2, 3), (1, 2)], false, format!("a34_5 a24_5 a34_5 (a23_5 a12_5)^{k}"), {
            let e = BigInt::from(2) * &kk;
            BigInt::from(12) * &e * &e - 2
        }),
        Three => (&[(1, 2), (3, 4)], &[(2, 3), (3, 4), (2, 4), (3, 4)], false, format!("a12_5 a34_5 (a23_5 a34_5 a24_5 a34_5)^{k}"), {
            let o = BigInt::from(2) * &kk + 1;
            BigInt::from(12) * &o * &o + 2
        }),
    };
    let (a, b) = (word_matrix(g1)?, word_matrix(g2)?);
    let m = if power_first { mat_pow(&a, k)?.mul_checked(&b)? } else { a.mul_checked(&mat_pow(&b, k)?)? };
    let predicted = IntPoly::new(vec![BigInt::one(), -trace.clone(), BigInt::one()]);
    let cp = char_poly(&m)?;
    let (_, rest) = cp.split_cyclotomic();
    let degenerate = trace.abs() <= BigInt::from(2);
    let (found, verified) = if degenerate {
        (None, cp.div_exact(&predicted).is_some())
    } else if rest.degree() == Some(2) {
        (Some(rest.to_string()), rest == predicted)
    } else {
        (None, false)
    };
    Ok(SalemFamilyResult { family, k, word, predicted: predicted.to_string(), found, verified, degenerate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::action_get;
    use crate::interval::rat;

    #[test]
    fn rr_salem() {
        let c = salem_certify(&IntPoly::from_i64(&[1, -18, 1])).unwrap();
        assert!(c.is_salem());
        assert_eq!(c.exact_root.as_deref(), Some("9 + 4*sqrt(5)"));
        let e = c.entropy.unwrap();
        assert!(e.within(&rat(28872, 10000), &rat(28873, 10000)));
        assert!(e.width() < rat(1, 1_000_000_000));
    }

    #[test]
    fn pent_salem() {
        let c = salem_certify(&IntPoly::from_i64(&[1, -16, 14, -16, 1])).unwrap();
        assert!(c.is_salem());
        assert!(c.lambda.unwrap().within(&rat(1514507448, 100_000_000), &rat(1514507449, 100_000_000)));
        assert!(c.entropy.unwrap().within(&rat(27176, 10000), &rat(27178, 10000)));
    }

    #[test]
    fn non_salem() {
        let c = salem_certify(&IntPoly::from_i64(&[-1, -1, 1])).unwrap();
        assert_eq!(c.status, SalemStatus::NotSalem("not reciprocal".into()));
        // x^4 - 10x^2 + 1 has two real roots above 1.
        assert!(!salem_certify(&IntPoly::from_i64(&[1, 0, -10, 0, 1])).unwrap().is_salem());
        assert!(salem_certify(&IntPoly::zero()).is_err());
        // Lehmer's polynomial is Salem.
        let lehmer = IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(salem_certify(&lehmer).unwrap().is_salem());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(quadratic_root(&BigInt::from(6)).unwrap(), "3 + 2*sqrt(2)");
        assert_eq!(quadratic_root(&BigInt::from(3)).unwrap(), "(3 + sqrt(5))/2");
        assert_eq!(quadratic_root(&BigInt::from(4)).unwrap(), "2 + sqrt(3)");
    }

    #[test]
    fn entropy_of_catalog_actions() {
        let r = entropy_report(&action_get("Phi_54321@2sympent").unwrap()).unwrap();
        assert_eq!(r.factorization, "(x - 1)^6 (x + 1) (x^2 - 6x + 1)");
        assert_eq!(r.salem.unwrap().exact_root.unwrap(), "3 + 2*sqrt(2)");
        let r = entropy_report(&action_get("Phi_54123@3sympent").unwrap()).unwrap();
        assert_eq!(r.salem.unwrap().exact_root.unwrap(), "(3 + sqrt(5))/2");
        let r = entropy_report(&action_get("Phi@sym2rr").unwrap()).unwrap();
        assert!(r.salem.is_none());
        assert_eq!(r.entropy.hi, BigRational::zero());
    }

    #[test]
    fn families() {
        let r = salem_family(SalemFamily::Main, 2).unwrap();
        assert_eq!(r.predicted, "x^2 - 98x + 1");
        assert!(r.verified);
        let r = salem_family(SalemFamily::Three, 0).unwrap();
        assert_eq!(r.predicted, "x^2 - 14x + 1");
        assert!(r.verified && !r.degenerate);
        let r = salem_family(SalemFamily::Main, 0).unwrap();
        assert!(r.degenerate);
        let r = salem_family(SalemFamily::One, 1).unwrap();
        assert_eq!(r.found.as_deref(), Some("x^2 - 18x + 1"));
    }
}
