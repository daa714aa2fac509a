//! Néron–Severi lattices: the Gram catalog, discriminant reports, overlattices and
//! the embedding and class-number criteria.

mod catalog;
pub mod rules;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{param, shape, Error, Result};
use crate::fp::{is_prime, kernel};
use crate::gf::prime_factors;
use crate::linalg::{det, mod_u64, signature, smith_normal_form, IntMatrix};

pub use catalog::{CLASSICAL, MAIN};
pub use rules::{gram_from_rules, relation_check, RelationReport};

/// A static catalog row.
pub struct CatalogEntry {
    pub family: &'static str,
    pub description: &'static str,
    pub labels: &'static [&'static str],
    pub gram: &'static [&'static [i64]],
    pub abs_det: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramLattice {
    pub family: String,
    pub labels: Vec<String>,
    pub gram: IntMatrix,
    /// |det| stated alongside the matrix, where there is one.
    pub declared_abs_det: Option<BigInt>,
}

impl GramLattice {
    pub fn new(family: &str, labels: Vec<String>, gram: IntMatrix) -> Result<GramLattice> {
        if !gram.is_symmetric() {
            return shape("Gram matrix is not symmetric");
        }
        if labels.len() != gram.rows() {
            return shape(format!("{} labels for a rank-{} lattice", labels.len(), gram.rows()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(*l)) {
            return param(format!("duplicate basis label {dup}"));
        }
        Ok(GramLattice { family: family.into(), labels, gram, declared_abs_det: None })
    }

    /// Lattice with default labels `e1..en`.
    pub fn anonymous<R: AsRef<[i64]>>(rows: &[R]) -> Result<GramLattice> {
        let g = IntMatrix::from_rows(rows);
        let labels = (1..=g.rows()).map(|i| format!("e{i}")).collect();
        GramLattice::new("anonymous", labels, g)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Lookup(format!("no basis label {label:?} in {}", self.family)))
    }

    pub fn pair(&self, a: &DivisorClass, b: &DivisorClass) -> BigInt {
        self.gram.bilinear(&a.coords, &b.coords)
    }

    pub fn det(&self) -> BigInt {
        det(&self.gram).expect("square")
    }

    fn from_entry(e: &CatalogEntry) -> GramLattice {
        GramLattice {
            family: e.family.into(),
            labels: e.labels.iter().map(|s| s.to_string()).collect(),
            gram: IntMatrix::from_rows(e.gram),
            declared_abs_det: Some(BigInt::from(e.abs_det)),
        }
    }
}

/// A divisor class as integer coordinates in a lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    pub coords: Vec<BigInt>,
}

impl DivisorClass {
    pub fn basis(n: usize, i: usize) -> DivisorClass {
        let mut coords = vec![BigInt::zero(); n];
        coords[i] = BigInt::one();
        DivisorClass { coords }
    }
}

pub fn families() -> impl Iterator<Item = &'static str> {
    MAIN.iter().chain(CLASSICAL).map(|e| e.family)
}

pub fn catalog_get(family: &str) -> Result<GramLattice> {
    MAIN.iter()
        .chain(CLASSICAL)
        .find(|e| e.family == family)
        .map(GramLattice::from_entry)
        .ok_or_else(|| Error::Lookup(format!("unknown lattice family {family:?}")))
}

/// The whole catalog as one JSON value: family -> {labels, matrix}.
pub fn catalog_json() -> serde_json::Value {
    let mut m = serde_json::Map::new();
    for e in MAIN.iter().chain(CLASSICAL) {
        m.insert(
            e.family.into(),
            serde_json::json!({
                "description": e.description,
                "labels": e.labels,
                "matrix": e.gram,
                "abs_det": e.abs_det,
            }),
        );
    }
    serde_json::Value::Object(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub family: String,
    pub rank: usize,
    pub det: String,
    pub abs_det: String,
    pub signature: (usize, usize, usize),
    pub invariant_factors: Vec<String>,
    pub discriminant_group: String,
    pub even: bool,
}

pub fn lattice_report(g: &GramLattice) -> LatticeReport {
    let d = g.det();
    let snf = smith_normal_form(&g.gram);
    LatticeReport {
        family: g.family.clone(),
        rank: g.rank(),
        abs_det: d.abs().to_string(),
        det: d.to_string(),
        signature: signature(&g.gram).expect("symmetric"),
        invariant_factors: snf.invariant_factors.iter().map(|x| x.to_string()).collect(),
        discriminant_group: format_group(&snf.torsion()),
        even: g.is_even(),
    }
}

/// Formats a finite abelian group in primary form, largest cyclic factors first.
pub fn format_group(torsion: &[BigInt]) -> String {
    if torsion.iter().any(|x| x.is_zero()) {
        return "infinite".into();
    }
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for t in torsion.iter().filter(|t| !t.is_one()) {
        let t = t.to_u64().expect("small invariant factor");
        let mut primes = prime_factors(t);
        primes.dedup();
        for p in primes {
            let mut q = 1;
            let mut r = t;
            while r % p == 0 {
                q *= p;
                r /= p;
            }
            *counts.entry(q).or_default() += 1;
        }
    }
    if counts.is_empty() {
        return "0".into();
    }
    counts
        .iter()
        .rev()
        .map(|(n, &k)| if k == 1 { format!("Z/{n}") } else { format!("(Z/{n})^{k}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// An index-p even overlattice `L + Z (y/p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlattice {
    /// Glue vector numerator `y`; the adjoined class is `y/p`.
    pub glue: Vec<BigInt>,
    pub p: u64,
    pub gram: IntMatrix,
    /// Some(true/false) when the glue is a half-sum of orthogonal (-2)-classes,
    /// recording whether the count lies in {8, 16}.
    pub half_sum_count_ok: Option<bool>,
}

/// All index-p even overlattices, one per order-p subgroup of the discriminant group.
pub fn even_overlattices(g: &GramLattice, p: u64) -> Result<Vec<Overlattice>> {
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    let d = g.det();
    if d.is_zero() || !(&d % BigInt::from(p)).is_zero() {
        return param(format!("{p} does not divide the discriminant {d}"));
    }
    let n = g.rank();
    let rows: Vec<Vec<u64>> = (0..n).map(|i| g.gram.row(i).iter().map(|x| mod_u64(x, p)).collect()).collect();
    let basis = kernel(rows, n, p);
    let pb = BigInt::from(p);
    let p2 = &pb * &pb;
    let mut out = Vec::new();
    for y in projective_lines(&basis, p) {
        let yb: Vec<BigInt> = y.iter().map(|&x| BigInt::from(x)).collect();
        let norm = g.gram.bilinear(&yb, &yb);
        let (q, r) = norm.div_rem(&p2);
        if !r.is_zero() || q.is_odd() {
            continue;
        }
        // Pivot: first coordinate equal to 1 after projective normalization.
        let k = y.iter().position(|&x| x == 1).expect("normalized");
        let mut rows_b: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = if i == k {
                yb.iter().map(|x| BigRational::new(x.clone(), pb.clone())).collect()
            } else {
                (0..n).map(|j| BigRational::from_integer(BigInt::from(u8::from(i == j)))).collect()
            };
            rows_b.push(row);
        }
        let gr = g.gram.to_rat();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut s = BigRational::zero();
                for i in 0..n {
                    for j in 0..n {
                        if !rows_b[a][i].is_zero() && !rows_b[b][j].is_zero() {
                            s += &rows_b[a][i] * &gr[(i, j)] * &rows_b[b][j];
                        }
                    }
                }
                entries.push(s.to_integer());
            }
        }
        let gram = IntMatrix::from_vec(n, n, entries)?;
        let half_sum_count_ok = (p == 2).then(|| half_sum_flag(g, &y)).flatten();
        out.push(Overlattice { glue: yb, p, gram, half_sum_count_ok });
    }
    Ok(out)
}

fn half_sum_flag(g: &GramLattice, y: &[u64]) -> Option<bool> {
    let supp: Vec<usize> = (0..y.len()).filter(|&i| y[i] != 0).collect();
    let minus_two = BigInt::from(-2);
    let disjoint = supp.iter().all(|&i| g.gram[(i, i)] == minus_two)
        && supp.iter().all(|&i| supp.iter().all(|&j| i == j || g.gram[(i, j)].is_zero()));
    disjoint.then_some(supp.len() == 8 || supp.len() == 16)
}

/// Normalized representatives of the lines in the F_p-span of `basis`.
fn projective_lines(basis: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let k = basis.len();
    if k == 0 {
        return vec![];
    }
    let n = basis[0].len();
    let total = (p as u128).pow(k as u32);
    let mut out = Vec::new();
    for code in 1..total {
        let mut c = code;
        let mut coef = Vec::with_capacity(k);
        for _ in 0..k {
            coef.push((c % p as u128) as u64);
            c /= p as u128;
        }
        let v: Vec<u64> = (0..n)
            .map(|j| coef.iter().zip(basis).fold(0u64, |acc, (a, b)| (acc + a * b[j]) % p))
            .collect();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out.sort();
    out
}

/// Isometry-class invariants: rank, det, signature, parity, invariant factors.
pub fn isometry_invariants(g: &IntMatrix) -> (usize, BigInt, (usize, usize, usize), bool, Vec<BigInt>) {
    let n = g.rows();
    (
        n,
        det(g).expect("square"),
        signature(g).expect("symmetric"),
        (0..n).all(|i| g[(i, i)].is_even()),
        smith_normal_form(g).invariant_factors,
    )
}

/// Groups overlattices with equal isometry invariants; exact for the unimodular rank-2 case.
pub fn distinct_overlattices(v: &[Overlattice]) -> Vec<Vec<&Overlattice>> {
    let mut groups: Vec<(_, Vec<&Overlattice>)> = Vec::new();
    for o in v {
        let inv = isometry_invariants(&o.gram);
        match groups.iter_mut().find(|(k, _)| *k == inv) {
            Some((_, g)) => g.push(o),
            None => groups.push((inv, vec![o])),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

/// Even, unimodular and indefinite of rank 2: by classification the hyperbolic plane.
pub fn is_hyperbolic_plane(g: &IntMatrix) -> bool {
    g.rows() == 2 && g.is_symmetric() && g[(0, 0)].is_even() && g[(1, 1)].is_even() && det(g).ok() == Some(BigInt::from(-1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum EmbeddingVerdict {
    Holds,
    Fails(Vec<String>),
    /// Conditions (a)-(c) hold but the 2-part is at the bound, where the form type decides.
    BoundaryCase,
}

/// Minimal number of generators of the p-part of the discriminant group.
pub fn length_at(g: &IntMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    smith_normal_form(g)
        .invariant_factors
        .iter()
        .filter(|d| d.is_zero() || (*d % &pb).is_zero())
        .count()
}

pub fn nikulin_embedding_check(g: &GramLattice, ambient: (usize, usize)) -> Result<EmbeddingVerdict> {
    if !g.is_even() {
        return param("lattice is odd");
    }
    let (tp, tm, t0) = signature(&g.gram)?;
    if t0 > 0 {
        return param("lattice is degenerate");
    }
    let (sp, sm) = ambient;
    let mut failed = Vec::new();
    if tp >= sp {
        failed.push("a".to_string());
    }
    if tm >= sm {
        failed.push("b".to_string());
    }
    let rkdiff = (sp + sm) as i64 - g.rank() as i64;
    let d = g.det().abs().to_u64().unwrap_or(u64::MAX);
    let mut odd: Vec<u64> = prime_factors(d).into_iter().filter(|&p| p != 2).collect();
    odd.dedup();
    for p in odd {
        if length_at(&g.gram, p) as i64 > rkdiff - 2 {
            failed.push(format!("c(p={p})"));
        }
    }
    if !failed.is_empty() {
        return Ok(EmbeddingVerdict::Fails(failed));
    }
    if length_at(&g.gram, 2) as i64 == rkdiff {
        return Ok(EmbeddingVerdict::BoundaryCase);
    }
    Ok(EmbeddingVerdict::Holds)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassNumberVerdict {
    Applies,
    DoesNotApply,
}

/// The divisibility criterion for class number one of an indefinite genus of rank >= 3.
pub fn class_number_one_check(g: &GramLattice) -> Result<ClassNumberVerdict> {
    let n = g.rank();
    if n < 3 {
        return param("class number criterion needs rank at least 3");
    }
    let (pos, neg, zero) = signature(&g.gram)?;
    if pos == 0 || neg == 0 || zero > 0 {
        return param("class number criterion needs an indefinite nondegenerate lattice");
    }
    let d = g.det().abs();
    let odd_exp = (n * (n - 1) / 2) as u32;
    let two_exp = (n * (n - 3) / 2 + n.div_ceil(2)) as u32;
    let dv = d.to_u64().ok_or(Error::Resource { needed: u128::MAX, bound: u64::MAX as u128 })?;
    let mut primes = prime_factors(dv);
    primes.dedup();
    let odd_bad = primes
        .iter()
        .filter(|&&p| p != 2)
        .any(|&p| (&d % num_traits::pow(BigInt::from(p), odd_exp as usize)).is_zero());
    let two_bad = (&d % num_traits::pow(BigInt::from(2), two_exp as usize)).is_zero();
    Ok(if odd_bad || two_bad { ClassNumberVerdict::DoesNotApply } else { ClassNumberVerdict::Applies })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_discriminants_and_signatures() {
        for e in MAIN.iter().chain(CLASSICAL) {
            let g = catalog_get(e.family).unwrap();
            let r = lattice_report(&g);
            assert_eq!(r.abs_det, e.abs_det.to_string(), "{}", e.family);
            assert!(g.is_even(), "{}", e.family);
            if e.family != "U" {
                assert_eq!(r.signature, (1, g.rank() - 1, 0), "{}", e.family);
            }
        }
        assert!(matches!(catalog_get("nonsense"), Err(Error::Lookup(_))));
    }

    #[test]
    fn discriminant_groups() {
        assert_eq!(lattice_report(&catalog_get("sym2rr").unwrap()).discriminant_group, "Z/4 + (Z/2)^8");
        assert_eq!(lattice_report(&catalog_get("hessian").unwrap()).discriminant_group, "Z/3 + (Z/2)^4");
        assert_eq!(lattice_report(&catalog_get("U").unwrap()).discriminant_group, "0");
    }

    #[test]
    fn rr_has_no_even_overlattice() {
        assert!(even_overlattices(&catalog_get("rr").unwrap(), 2).unwrap().is_empty());
        assert!(even_overlattices(&GramLattice::anonymous(&[[-2]]).unwrap(), 2).unwrap().is_empty());
        assert!(even_overlattices(&catalog_get("rr").unwrap(), 3).is_err());
    }

    #[test]
    fn u2_has_one_overlattice_class() {
        let u2 = GramLattice::anonymous(&[[0, 2], [2, 0]]).unwrap();
        let v = even_overlattices(&u2, 2).unwrap();
        assert_eq!(v.len(), 2);
        let groups = distinct_overlattices(&v);
        assert_eq!(groups.len(), 1);
        assert!(v.iter().all(|o| is_hyperbolic_plane(&o.gram)));
    }

    #[test]
    fn nikulin_examples() {
        let u = catalog_get("U").unwrap();
        assert_eq!(nikulin_embedding_check(&u, (3, 19)).unwrap(), EmbeddingVerdict::Holds);
        let big = GramLattice::new("big", (0..22).map(|i| format!("e{i}")).collect(), IntMatrix::diagonal(&[vec![BigInt::from(2)], vec![BigInt::from(-2); 21]].concat())).unwrap();
        match nikulin_embedding_check(&big, (3, 19)).unwrap() {
            EmbeddingVerdict::Fails(c) => assert!(c.contains(&"b".to_string())),
            v => panic!("{v:?}"),
        }
        assert_eq!(nikulin_embedding_check(&catalog_get("5sympent").unwrap(), (3, 19)).unwrap(), EmbeddingVerdict::Holds);
        assert!(nikulin_embedding_check(&GramLattice::anonymous(&[[1]]).unwrap(), (3, 19)).is_err());
    }

    #[test]
    fn class_number_examples() {
        assert_eq!(class_number_one_check(&catalog_get("pent").unwrap()).unwrap(), ClassNumberVerdict::DoesNotApply);
        let g = GramLattice::anonymous(&[[2, 0, 0], [0, -2, 1], [0, 1, -2]]).unwrap();
        assert_eq!(g.det(), BigInt::from(6));
        assert_eq!(class_number_one_check(&g).unwrap(), ClassNumberVerdict::Applies);
        assert!(class_number_one_check(&catalog_get("rr").unwrap()).is_err());
    }
}
