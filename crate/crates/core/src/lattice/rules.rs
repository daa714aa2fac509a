//! Intersection rules per family, and Gram matrices and relations derived from them.
//!
//! Each family has a set of atomic divisor labels with a pairing rule, plus a few
//! derived labels that are integer combinations of atoms (classes the rules eliminate).

use num_bigint::BigInt;
use serde::Serialize;

use super::{catalog_get, GramLattice};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Label split into its letter prefix and its digits, e.g. `P12` -> ("P", [1, 2]).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Lab {
    kind: String,
    idx: Vec<u8>,
}

fn parse_label(s: &str) -> Option<Lab> {
    let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    let (kind, digits) = s.split_at(split);
    if kind.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some(Lab { kind: kind.into(), idx: digits.bytes().map(|b| b - b'0').collect() })
}

fn one(l: &Lab, kind: &str, lo: u8, hi: u8) -> Option<u8> {
    (l.kind == kind && l.idx.len() == 1 && (lo..=hi).contains(&l.idx[0])).then(|| l.idx[0])
}

/// Index of a label whose digits form one number, e.g. `E12` -> 12.
fn num(l: &Lab, kind: &str, lo: u32, hi: u32) -> Option<u32> {
    if l.kind != kind || l.idx.is_empty() || l.idx[0] == 0 {
        return None;
    }
    let n = l.idx.iter().fold(0u32, |a, &d| a * 10 + d as u32);
    (lo..=hi).contains(&n).then_some(n)
}

fn lines(a: &Lab, b: &Lab, n: u8) -> Option<i64> {
    let (i, j) = (one(a, "L", 1, n)?, one(b, "L", 1, n)?);
    Some(if i == j { 0 } else { 2 })
}

fn curves(a: &Lab, b: &Lab, kind: &str, lo: u32, hi: u32) -> Option<i64> {
    let (i, j) = (num(a, kind, lo, hi)?, num(b, kind, lo, hi)?);
    Some(if i == j { -2 } else { 0 })
}

fn is_atom(family: &str, l: &Lab) -> bool {
    pair_atoms(family, l, l).is_some()
}

/// Pairing of two atoms, or None if either is not an atom of the family.
fn pair_atoms(family: &str, a: &Lab, b: &Lab) -> Option<i64> {
    let f = match family {
        "rr" => rr,
        "sym2rr" => sym2rr,
        "hessian" => hessian,
        "pent" => pent,
        "2sympent" => sym2pent,
        "3sympent" => sym3pent,
        "22sympent" => sym22pent,
        "23sympent" => sym23pent,
        "4sympent" => sym4pent,
        "5sympent" => sym5pent,
        "2224" => f2224,
        "22s24" => f22s24,
        "sym22sym24" => sym22sym24,
        _ => return None,
    };
    f(a, b).or_else(|| f(b, a))
}

fn rr(a: &Lab, b: &Lab) -> Option<i64> {
    match (a.kind.as_str(), b.kind.as_str(), a.idx.is_empty() && b.idx.is_empty()) {
        ("H", "H", true) | ("C", "C", true) => Some(4),
        ("H", "C", true) => Some(6),
        _ => None,
    }
}

fn sym2rr(a: &Lab, b: &Lab) -> Option<i64> {
    if let (Some(i), Some(j)) = (one(a, "L", 1, 2), one(b, "L", 1, 2)) {
        return Some(if i == j { 4 } else { 6 });
    }
    if let (Some(i), Some(_)) = (one(a, "L", 1, 2), num(b, "P", 1, 9)) {
        return Some(i64::from(i == 2));
    }
    curves(a, b, "P", 1, 9)
}

fn pair_of(l: &Lab) -> Option<[u8; 2]> {
    (l.kind == "L" && l.idx.len() == 2 && l.idx[0] < l.idx[1] && l.idx[0] >= 1 && l.idx[1] <= 5)
        .then(|| [l.idx[0], l.idx[1]])
}

fn triple_of(l: &Lab) -> Option<[u8; 3]> {
    let i = &l.idx;
    (l.kind == "P" && i.len() == 3 && i[0] >= 1 && i[0] < i[1] && i[1] < i[2] && i[2] <= 5).then(|| [i[0], i[1], i[2]])
}

fn hessian(a: &Lab, b: &Lab) -> Option<i64> {
    if let (Some(i), Some(j)) = (one(a, "H", 1, 2), one(b, "H", 1, 2)) {
        return Some(if i == j { 4 } else { 6 });
    }
    if let Some(i) = one(a, "H", 1, 2) {
        if pair_of(b).is_some() {
            return Some(i64::from(i == 1));
        }
        if triple_of(b).is_some() {
            return Some(i64::from(i == 2));
        }
        return None;
    }
    if let (Some(x), Some(y)) = (pair_of(a), pair_of(b)) {
        return Some(if x == y { -2 } else { 0 });
    }
    if let (Some(x), Some(y)) = (triple_of(a), triple_of(b)) {
        return Some(if x == y { -2 } else { 0 });
    }
    if let (Some(x), Some(y)) = (pair_of(a), triple_of(b)) {
        return Some(i64::from(x.iter().all(|i| y.contains(i))));
    }
    None
}

fn pent(a: &Lab, b: &Lab) -> Option<i64> {
    lines(a, b, 4)
}

fn sym2pent(a: &Lab, b: &Lab) -> Option<i64> {
    if let Some(v) = lines(a, b, 4) {
        return Some(v);
    }
    if let (Some(i), Some(_)) = (one(a, "L", 1, 4), num(b, "E", 1, 5)) {
        return Some(i64::from(i == 4));
    }
    curves(a, b, "E", 1, 5)
}

/// Lines meeting P and Q classes: (L meeting every P, L meeting every Q).
fn pq_lines(a: &Lab, b: &Lab, pl: u8, ql: &[u8], n: u32) -> Option<i64> {
    let i = one(a, "L", 1, 4)?;
    if num(b, "P", 1, n).is_some() {
        return Some(i64::from(i == pl));
    }
    if num(b, "Q", 1, n).is_some() {
        return Some(i64::from(ql.contains(&i)));
    }
    None
}

fn sym3pent(a: &Lab, b: &Lab) -> Option<i64> {
    lines(a, b, 4)
        .or_else(|| pq_lines(a, b, 4, &[3], 6))
        .or_else(|| curves(a, b, "P", 1, 6))
        .or_else(|| curves(a, b, "Q", 1, 6))
        .or_else(|| {
            let (i, j) = (num(a, "P", 1, 6)?, num(b, "Q", 1, 6)?);
            Some(i64::from(i == j))
        })
}

fn sym22pent(a: &Lab, b: &Lab) -> Option<i64> {
    lines(a, b, 4)
        .or_else(|| pq_lines(a, b, 4, &[2, 3], 6))
        .or_else(|| curves(a, b, "P", 1, 6))
        .or_else(|| curves(a, b, "Q", 1, 6))
        .or_else(|| {
            let (i, j) = (num(a, "P", 1, 6)?, num(b, "Q", 1, 6)?);
            Some(i64::from(i.div_ceil(2) == j.div_ceil(2)))
        })
}

/// Which E classes meet P_i and Q_i in the (Sym2 x Sym3) family.
fn e_meets(kind: &str, i: u32) -> [u32; 2] {
    match (kind, i.div_ceil(2)) {
        ("P", 1) => [3, 5],
        ("P", 2) => [1, 6],
        ("P", _) => [2, 4],
        (_, 1) => [2, 6],
        (_, 2) => [3, 4],
        _ => [1, 5],
    }
}

fn sym23pent(a: &Lab, b: &Lab) -> Option<i64> {
    if let Some(v) = lines(a, b, 4).or_else(|| pq_lines(a, b, 4, &[3], 6)) {
        return Some(v);
    }
    if let (Some(i), Some(_)) = (one(a, "L", 1, 4), num(b, "E", 1, 6)) {
        return Some(i64::from(i <= 2));
    }
    if let Some(v) = curves(a, b, "P", 1, 6).or_else(|| curves(a, b, "Q", 1, 6)).or_else(|| curves(a, b, "E", 1, 6)) {
        return Some(v);
    }
    if let (Some(i), Some(j)) = (num(a, "P", 1, 6), num(b, "Q", 1, 6)) {
        return Some(i64::from(i == j));
    }
    let e = num(b, "E", 1, 6)?;
    for kind in ["P", "Q"] {
        if let Some(i) = num(a, kind, 1, 6) {
            return Some(i64::from(e_meets(kind, i).contains(&e)));
        }
    }
    None
}

/// `E{i}{j}` with i in 1..6, j in 2..4.
fn e_ij(l: &Lab) -> Option<(i32, i32)> {
    (l.kind == "E" && l.idx.len() == 2 && (1..=6).contains(&l.idx[0]) && (2..=4).contains(&l.idx[1]))
        .then(|| (l.idx[0] as i32, l.idx[1] as i32))
}

fn sym4pent(a: &Lab, b: &Lab) -> Option<i64> {
    if let Some(v) = lines(a, b, 4) {
        return Some(v);
    }
    if let (Some(k), Some((_, j))) = (one(a, "L", 1, 4), e_ij(b)) {
        return Some(i64::from(k as i32 == j));
    }
    let ((i1, j1), (i2, j2)) = (e_ij(a)?, e_ij(b)?);
    let (di, dj) = ((i1 - i2).abs(), (j1 - j2).abs());
    Some(if di == 0 && dj == 0 {
        -2
    } else {
        i64::from((di == 0 && dj == 1) || (di == 3 && dj == 2))
    })
}

/// `E{s1}{s2}{s3}{s4}` with s a permutation of 1234.
fn perm(l: &Lab) -> Option<[u8; 4]> {
    if l.kind != "E" || l.idx.len() != 4 {
        return None;
    }
    let mut s = l.idx.clone();
    s.sort_unstable();
    (s == [1, 2, 3, 4]).then(|| [l.idx[0], l.idx[1], l.idx[2], l.idx[3]])
}

fn sym5pent(a: &Lab, b: &Lab) -> Option<i64> {
    if let Some(v) = lines(a, b, 4) {
        return Some(v);
    }
    if let (Some(i), Some(s)) = (one(a, "L", 1, 4), perm(b)) {
        return Some(i64::from(s[0] == i));
    }
    let (s, t) = (perm(a)?, perm(b)?);
    if s == t {
        return Some(-2);
    }
    let adjacent = (1..4).any(|j| {
        let mut u = s;
        u.swap(0, j);
        u == t
    });
    Some(i64::from(adjacent))
}

fn f2224(a: &Lab, b: &Lab) -> Option<i64> {
    let h = |l: &Lab| l.kind == "H" && l.idx.is_empty();
    if h(a) {
        if h(b) {
            return Some(4);
        }
        if one(b, "L", 1, 3).is_some() {
            return Some(4);
        }
        return num(b, "E", 1, 12).map(|_| 0);
    }
    if let Some(v) = lines(a, b, 3) {
        return Some(v);
    }
    if let (Some(i), Some(e)) = (one(a, "L", 1, 3), num(b, "E", 1, 12)) {
        let meets = match i {
            1 => e >= 5,
            2 => e <= 4 || e >= 9,
            _ => e <= 8,
        };
        return Some(i64::from(meets));
    }
    curves(a, b, "E", 1, 12)
}

fn f22s24(a: &Lab, b: &Lab) -> Option<i64> {
    let (i, j) = (one(a, "L", 1, 3)?, one(b, "L", 1, 3)?);
    Some(match (i.min(j), i.max(j)) {
        (3, 3) => 4,
        (_, 3) => 4,
        (1, 2) => 8,
        _ => 0,
    })
}

fn sym22sym24(a: &Lab, b: &Lab) -> Option<i64> {
    let l = |x: &Lab| one(x, "L", 1, 3).filter(|&i| i != 2);
    if let (Some(i), Some(j)) = (l(a), l(b)) {
        return Some(match (i, j) {
            (1, 1) => 0,
            (3, 3) => 4,
            _ => 4,
        });
    }
    if let (Some(i), Some(_)) = (l(a), num(b, "E", 1, 7)) {
        return Some(i64::from(i == 1));
    }
    curves(a, b, "E", 1, 7)
}

/// Derived labels as integer combinations of atoms.
fn derived(family: &str, label: &str) -> Option<Vec<(i64, String)>> {
    let s = |c: i64, l: &str| (c, l.to_string());
    let many = |c: i64, k: &'static str, r: std::ops::RangeInclusive<u32>| r.map(move |i| (c, format!("{k}{i}")));
    Some(match (family, label) {
        ("rr", "D") => vec![s(3, "H"), s(-1, "C")],
        ("rr", "W") => vec![s(3, "H")],
        ("sym2rr", "P10") => [s(3, "L1"), s(-2, "L2")].into_iter().chain(many(-1, "P", 1..=9)).collect(),
        ("pent", "L5") => vec![s(1, "L1"), s(1, "L2"), s(1, "L3"), s(-1, "L4")],
        ("2sympent", "E6") => {
            [s(1, "L1"), s(1, "L2"), s(1, "L3"), s(-2, "L4")].into_iter().chain(many(-1, "E", 1..=5)).collect()
        }
        ("sym22sym24", "E8") => [s(2, "L3"), s(-2, "L1")].into_iter().chain(many(-1, "E", 1..=7)).collect(),
        _ => return None,
    })
}

/// A label or combination expanded into atoms.
fn expand(family: &str, label: &str) -> Result<Vec<(i64, Lab)>> {
    if let Some(v) = derived(family, label) {
        return v
            .into_iter()
            .map(|(c, l)| Ok((c, parse_label(&l).expect("well-formed derived label"))))
            .collect();
    }
    match parse_label(label) {
        Some(l) if is_atom(family, &l) => Ok(vec![(1, l)]),
        _ => Err(Error::Rule(format!("label {label:?} is not expressible in family {family}"))),
    }
}

fn pair_expanded(family: &str, a: &[(i64, Lab)], b: &[(i64, Lab)]) -> i64 {
    let mut s = 0;
    for (c, x) in a {
        for (d, y) in b {
            s += c * d * pair_atoms(family, x, y).expect("atoms pair");
        }
    }
    s
}

/// Gram matrix of the given labels computed from the family's intersection rules.
pub fn gram_from_rules(family: &str, labels: &[&str]) -> Result<GramLattice> {
    if !has_rules(family) {
        return Err(Error::Lookup(format!("no intersection rules for family {family:?}")));
    }
    let ex = labels.iter().map(|l| expand(family, l)).collect::<Result<Vec<_>>>()?;
    let n = labels.len();
    let data = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| BigInt::from(pair_expanded(family, &ex[i], &ex[j])))
        .collect();
    GramLattice::new(family, labels.iter().map(|s| s.to_string()).collect(), IntMatrix::from_vec(n, n, data)?)
}

pub fn has_rules(family: &str) -> bool {
    matches!(
        family,
        "rr" | "sym2rr"
            | "hessian"
            | "pent"
            | "2sympent"
            | "3sympent"
            | "22sympent"
            | "23sympent"
            | "4sympent"
            | "5sympent"
            | "2224"
            | "22s24"
            | "sym22sym24"
    )
}

/// Parses `3L1 - 2L2 + P1` into (coefficient, label) terms.
fn parse_combination(s: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Format("empty linear combination".into()));
    }
    let mut rest = cleaned.as_str();
    while !rest.is_empty() {
        let (sign, r) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        let end = r[1.min(r.len())..].find(['+', '-']).map(|i| i + 1).unwrap_or(r.len());
        let term = &r[..end];
        let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
        let (coef, label) = term.split_at(digits);
        let c: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| Error::Format(format!("bad coefficient in {term:?}")))?
        };
        if label.is_empty() {
            if c == 0 {
                rest = &r[end..];
                continue;
            }
            return Err(Error::Format(format!("term {term:?} has no label")));
        }
        out.push((sign * c, label.to_string()));
        rest = &r[end..];
    }
    Ok(out)
}

fn expand_combination(family: &str, s: &str) -> Result<Vec<(i64, Lab)>> {
    let mut out = Vec::new();
    for (c, l) in parse_combination(s)? {
        let e = expand(family, &l).map_err(|_| Error::Lookup(format!("unknown label {l:?} in family {family}")))?;
        out.extend(e.into_iter().map(|(d, x)| (c * d, x)));
    }
    Ok(out)
}

/// Intersection number of two linear combinations of labels.
pub fn intersect(family: &str, a: &str, b: &str) -> Result<i64> {
    if !has_rules(family) {
        return Err(Error::Lookup(format!("no intersection rules for family {family:?}")));
    }
    Ok(pair_expanded(family, &expand_combination(family, a)?, &expand_combination(family, b)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub holds: bool,
    /// Intersection of `lhs - rhs` with each catalog basis label.
    pub pairings: Vec<(String, i64)>,
    pub self_intersection: i64,
}

/// Checks `lhs = rhs` by pairing the difference against the family's catalog basis.
pub fn relation_check(family: &str, relation: &str) -> Result<RelationReport> {
    let (lhs, rhs) = relation.split_once('=').unwrap_or((relation, "0"));
    let mut diff = expand_combination(family, lhs)?;
    diff.extend(expand_combination(family, rhs)?.into_iter().map(|(c, l)| (-c, l)));
    let basis = catalog_get(family)?;
    let mut pairings = Vec::new();
    for l in &basis.labels {
        let b = expand(family, l)?;
        pairings.push((l.clone(), pair_expanded(family, &diff, &b)));
    }
    let self_intersection = pair_expanded(family, &diff, &diff);
    let holds = self_intersection == 0 && pairings.iter().all(|(_, v)| *v == 0);
    Ok(RelationReport { relation: relation.into(), holds, pairings, self_intersection })
}

/// `L1 + ... ` helper for building relation strings.
pub fn sum_of(prefix: &str, range: std::ops::RangeInclusive<u32>) -> String {
    range.map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::MAIN;

    #[test]
    fn rules_reproduce_catalog() {
        for e in MAIN {
            let g = gram_from_rules(e.family, e.labels).unwrap();
            assert_eq!(g.gram, IntMatrix::from_rows(e.gram), "{}", e.family);
        }
    }

    #[test]
    fn rr_relation() {
        assert_eq!(intersect("rr", "D", "D").unwrap(), 4);
        assert_eq!(intersect("rr", "C", "D").unwrap(), 14);
        assert!(relation_check("rr", "3H = C + D").unwrap().holds);
        assert!(!relation_check("rr", "3H = C").unwrap().holds);
    }

    #[test]
    fn pent_fifth_line() {
        assert_eq!(intersect("pent", "L5", "L5").unwrap(), 0);
        for (l, v) in [("L1", 2), ("L2", 2), ("L3", 2), ("L4", 6)] {
            assert_eq!(intersect("pent", "L1 + L2 + L3 - L4", l).unwrap(), v);
        }
    }

    #[test]
    fn derived_classes_are_curves() {
        assert_eq!(intersect("2sympent", "E6", "E6").unwrap(), -2);
        assert_eq!(intersect("sym2rr", "P10", "P10").unwrap(), -2);
        assert_eq!(intersect("sym22sym24", "E8", "E8").unwrap(), -2);
        assert_eq!(intersect("sym22sym24", "E8", "L1").unwrap(), 1);
    }

    #[test]
    fn relations_hold() {
        assert!(relation_check("22s24", "2L3 = L1 + L2").unwrap().holds);
        assert!(relation_check("sym2rr", &format!("3L1 = 2L2 + {}", sum_of("P", 1..=10))).unwrap().holds);
        assert!(relation_check("2sympent", &format!("L1 + L2 + L3 = 2L4 + {}", sum_of("E", 1..=6))).unwrap().holds);
        assert!(matches!(relation_check("rr", "3H = X"), Err(Error::Lookup(_))));
    }

    #[test]
    fn unknown_labels_rejected() {
        assert!(matches!(gram_from_rules("pent", &["L1", "Z9"]), Err(Error::Rule(_))));
        assert!(matches!(gram_from_rules("nonsense", &["L1"]), Err(Error::Lookup(_))));
    }
}
