//! Automorphisms acting on Néron–Severi lattices: isometry checks, generator words,
//! Salem certification, entropy and the Pell-equation link.

mod catalog;
pub mod pell;
pub mod salem;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{shape, Error, Result};
use crate::lattice::catalog_get;
use crate::linalg::{mat_pow, IntMatrix};

pub use pell::{pell_odd_solve, PellSolution};
pub use salem::{entropy_report, salem_certify, salem_family, EntropyReport, SalemCertificate, SalemFamily, SalemStatus};

/// A static automorphism matrix.
pub struct ActionEntry {
    pub name: &'static str,
    pub family: &'static str,
    pub matrix: &'static [&'static [i64]],
    pub order: Option<u32>,
}

/// Integer matrix acting on row vectors of a catalog basis: `v -> v M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NSAction {
    pub name: String,
    pub family: String,
    pub matrix: IntMatrix,
    pub declared_order: Option<u32>,
}

impl NSAction {
    pub fn new(name: &str, family: &str, matrix: IntMatrix) -> NSAction {
        NSAction { name: name.into(), family: family.into(), matrix, declared_order: None }
    }

    /// Name qualified by its family, e.g. `Phi_54321@2sympent`.
    pub fn qualified_name(&self) -> String {
        format!("{}@{}", self.name, self.family)
    }

    /// Matrix product `self * other`; on row vectors this applies `self` first.
    pub fn then(&self, other: &NSAction) -> Result<NSAction> {
        Ok(NSAction::new(
            &format!("{} {}", self.name, other.name),
            &self.family,
            self.matrix.mul_checked(&other.matrix)?,
        ))
    }
}

/// Whether `M Q M^T = Q`.
pub fn preserves_form(m: &IntMatrix, q: &IntMatrix) -> Result<bool> {
    if m.rows() != q.rows() || m.cols() != q.cols() || !m.is_square() {
        return shape(format!("{}x{} matrix against a rank-{} form", m.rows(), m.cols(), q.rows()));
    }
    Ok(m.mul_checked(q)?.mul_checked(&m.transpose())? == *q)
}

pub fn isometry_check(a: &NSAction) -> Result<bool> {
    preserves_form(&a.matrix, &catalog_get(&a.family)?.gram)
}

/// Smallest `n <= max` with `M^n = I`.
pub fn exact_order(m: &IntMatrix, max: u32) -> Option<u32> {
    let id = IntMatrix::identity(m.rows());
    let mut p = m.clone();
    for n in 1..=max {
        if p == id {
            return Some(n);
        }
        p = p.mul_checked(m).ok()?;
    }
    None
}

/// The involution on the 11-dimensional lattice: `L1 -> -3L1 + 8L2`, `L2 -> -L1 + 3L2`,
/// `P_i -> -L1 + 2L2 + P_i`.
fn sym2rr_involution() -> NSAction {
    let mut rows = vec![vec![0i64; 11]; 11];
    rows[0][0] = -3;
    rows[0][1] = 8;
    rows[1][0] = -1;
    rows[1][1] = 3;
    for (i, row) in rows.iter_mut().enumerate().skip(2) {
        row[0] = -1;
        row[1] = 2;
        row[i] = 1;
    }
    NSAction { name: "Phi".into(), family: "sym2rr".into(), matrix: IntMatrix::from_rows(&rows), declared_order: Some(2) }
}

/// `alpha_{kl,5}` on the penteract lattice: fixes the other two lines `L_i, L_j`
/// and sends `L_k -> 2L_i + 2L_j - L_k`, likewise `L_l`.
pub fn pent_alpha(k: usize, l: usize) -> Result<NSAction> {
    if !(1..=4).contains(&k) || !(1..=4).contains(&l) || k == l {
        return Err(Error::Lookup(format!("no generator alpha_{k}{l}_5")));
    }
    let (k, l) = (k.min(l), k.max(l));
    let fixed: Vec<usize> = (1..=4).filter(|&x| x != k && x != l).collect();
    let mut rows = vec![vec![0i64; 4]; 4];
    for x in 1..=4 {
        if fixed.contains(&x) {
            rows[x - 1][x - 1] = 1;
        } else {
            for &f in &fixed {
                rows[x - 1][f - 1] = 2;
            }
            rows[x - 1][x - 1] = -1;
        }
    }
    Ok(NSAction {
        name: format!("alpha_{k}{l}_5"),
        family: "pent".into(),
        matrix: IntMatrix::from_rows(&rows),
        declared_order: Some(2),
    })
}

/// Every cataloged automorphism.
pub fn catalog_actions() -> Vec<NSAction> {
    let mut v: Vec<NSAction> = catalog::ACTIONS
        .iter()
        .map(|e| NSAction {
            name: e.name.into(),
            family: e.family.into(),
            matrix: IntMatrix::from_rows(e.matrix),
            declared_order: e.order,
        })
        .collect();
    v.push(sym2rr_involution());
    v
}

/// Looks up `name` or `name@family`.
pub fn action_get(name: &str) -> Result<NSAction> {
    let (n, fam) = match name.split_once('@') {
        Some((n, f)) => (n, Some(f)),
        None => (name, None),
    };
    let hits: Vec<NSAction> = catalog_actions()
        .into_iter()
        .filter(|a| a.name == n && fam.is_none_or(|f| a.family == f))
        .collect();
    match hits.len() {
        1 => Ok(hits.into_iter().next().unwrap()),
        0 => Err(Error::Lookup(format!("unknown automorphism {name:?}"))),
        _ => Err(Error::Lookup(format!("automorphism {name:?} is ambiguous; qualify it with @family"))),
    }
}

/// Generators available for words in a family.
pub fn alpha_generators(family: &str) -> Result<Vec<NSAction>> {
    if family == "pent" {
        let mut v = Vec::new();
        for k in 1..=4 {
            for l in k + 1..=4 {
                v.push(pent_alpha(k, l)?);
            }
        }
        return Ok(v);
    }
    let v: Vec<NSAction> = catalog_actions().into_iter().filter(|a| a.family == family).collect();
    if v.is_empty() || catalog_get(family).is_err() {
        return Err(Error::Lookup(format!("no automorphism generators for family {family:?}")));
    }
    Ok(v)
}

fn generator(family: &str, token: &str) -> Result<NSAction> {
    if family == "pent" {
        let short = token.strip_prefix("alpha_").or_else(|| token.strip_prefix('a'));
        if let Some(s) = short.and_then(|s| s.strip_suffix("_5")) {
            let d: Vec<usize> = s.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect();
            if d.len() == 2 && s.len() == 2 {
                return pent_alpha(d[0], d[1]);
            }
        }
        match token {
            "g1" | "gamma1" => return action_get("gamma1@pent"),
            "g2" | "gamma2" => return action_get("gamma2@pent"),
            _ => {}
        }
    }
    catalog_actions()
        .into_iter()
        .find(|a| a.family == family && a.name == token)
        .ok_or_else(|| Error::Lookup(format!("unknown generator {token:?} for family {family}")))
}

/// Evaluates a word such as `a34_5 a24_5^3`; factors multiply in written order.
pub fn word_eval(family: &str, word: &str) -> Result<NSAction> {
    let n = catalog_get(family)?.rank();
    let mut m = IntMatrix::identity(n);
    for tok in word.split_whitespace() {
        let (g, e) = match tok.split_once('^') {
            Some((g, e)) => {
                let e: u64 = e.parse().map_err(|_| Error::Format(format!("bad exponent in {tok:?}")))?;
                (g, e)
            }
            None => (tok, 1),
        };
        let a = generator(family, g)?;
        m = m.mul_checked(&mat_pow(&a.matrix, e)?)?;
    }
    let name = if word.trim().is_empty() { "id".to_string() } else { word.trim().to_string() };
    Ok(NSAction::new(&name, family, m))
}

/// Power of an action.
pub fn power(a: &NSAction, e: u64) -> Result<NSAction> {
    Ok(NSAction::new(&format!("({})^{e}", a.name), &a.family, mat_pow(&a.matrix, e)?))
}

pub fn is_identity(m: &IntMatrix) -> bool {
    m.is_square() && *m == IntMatrix::identity(m.rows())
}

pub fn det_is_unit(m: &IntMatrix) -> bool {
    crate::linalg::det(m).is_ok_and(|d| d.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_isometries() {
        for a in catalog_actions() {
            assert!(isometry_check(&a).unwrap(), "{}", a.qualified_name());
            assert!(det_is_unit(&a.matrix), "{}", a.qualified_name());
        }
    }

    #[test]
    fn perturbed_matrix_fails() {
        let mut a = action_get("Phi_rr").unwrap();
        let mut rows = a.matrix.to_i64_rows().unwrap();
        rows[0][0] += 1;
        a.matrix = IntMatrix::from_rows(&rows);
        assert!(!isometry_check(&a).unwrap());
        let bad = NSAction::new("x", "rr", IntMatrix::identity(3));
        assert!(matches!(isometry_check(&bad), Err(Error::Shape(_))));
    }

    #[test]
    fn alpha_generators_match_display() {
        assert_eq!(pent_alpha(3, 4).unwrap().matrix, action_get("alpha_34_5").unwrap().matrix);
        for a in alpha_generators("pent").unwrap() {
            assert!(isometry_check(&a).unwrap());
            assert_eq!(exact_order(&a.matrix, 4), Some(2), "{}", a.name);
        }
        let g1 = word_eval("pent", "a34_5 a24_5").unwrap();
        assert_eq!(g1.matrix, action_get("gamma1").unwrap().matrix);
        let g2 = word_eval("pent", "a13_5 a12_5").unwrap();
        assert_eq!(g2.matrix, action_get("gamma2").unwrap().matrix);
    }

    #[test]
    fn declared_orders() {
        for a in catalog_actions() {
            if let Some(o) = a.declared_order {
                assert_eq!(exact_order(&a.matrix, 12), Some(o), "{}", a.qualified_name());
            }
        }
        assert_eq!(exact_order(&action_get("Phi_54321@4sympent").unwrap().matrix, 12), Some(4));
    }

    #[test]
    fn words() {
        assert!(is_identity(&word_eval("pent", "").unwrap().matrix));
        assert!(matches!(word_eval("pent", "a35_5"), Err(Error::Lookup(_))));
        assert!(matches!(word_eval("pent", "bogus"), Err(Error::Lookup(_))));
        let w = word_eval("pent", "g1^2 g2").unwrap();
        assert!(isometry_check(&w).unwrap());
        assert!(matches!(action_get("Phi_53214"), Err(Error::Lookup(_))));
        assert!(action_get("Phi_53214@23sympent").is_ok());
    }
}
