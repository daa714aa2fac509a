//! The acceptance suite: every reproduced number and finite-field property, by criterion.

use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dynamics::{
    action_get, alpha_generators, catalog_actions, entropy_report, exact_order, is_identity, isometry_check,
    pell_odd_solve, salem_family, SalemFamily,
};
use crate::error::{Error, Result};
use crate::gf::Gf;
use crate::lattice::{
    catalog_get, distinct_overlattices, even_overlattices, is_hyperbolic_plane, lattice_report, GramLattice, CLASSICAL, MAIN,
};
use crate::linalg::{char_poly, mat_pow, IntMatrix};
use crate::report::Check;
use crate::surface::{
    build_surface, check_witness, fibration_profile, hyperdet_vanishes, singular_count, Evaluator, HyperdetStatus,
};
use crate::tensor::{family_format, group_act, random_tensor, GroupElement, Ring, Symmetry, Tensor};
use crate::upoly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Lattices,
    Dynamics,
    Geometry,
}

impl Suite {
    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::All => (1..=13).collect(),
            Suite::Lattices => vec![1, 2, 13],
            Suite::Dynamics => vec![3, 4, 5, 6, 7, 8, 12],
            Suite::Geometry => vec![9, 10, 11],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "lattices" => Suite::Lattices,
            "dynamics" => Suite::Dynamics,
            "geometry" => Suite::Geometry,
            _ => return Err(Error::Lookup(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AcceptOptions {
    /// Reduced sample sizes for the property-based criteria.
    pub quick: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    /// Why the criterion cannot pass as stated, when that is known.
    pub known_gap: Option<&'static str>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect()
    }

    /// One summary line, without timing so reports stay reproducible.
    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{status} criterion {:>2}: {} ({} checks)", self.id, self.title, self.checks.len());
        if !self.passed() {
            s += &format!(" failing: {}", self.failing().join(", "));
        }
        s
    }
}

pub const TITLES: [&str; 13] = [
    "lattice discriminants",
    "lattice signatures",
    "automorphism isometries",
    "characteristic polynomials",
    "entropy enclosures",
    "Fibonacci identity",
    "Salem families",
    "Pell solutions",
    "hyperdeterminant vs fixed points",
    "rank singularity counts",
    "fibration discriminant profiles",
    "involutions and orders",
    "even overlattices",
];

pub fn run_suite(suite: Suite, opts: &AcceptOptions) -> Result<Vec<CriterionResult>> {
    suite.criteria().into_iter().map(|id| criterion(id, opts)).collect()
}

pub fn criterion(id: u8, opts: &AcceptOptions) -> Result<CriterionResult> {
    let start = Instant::now();
    let (mut checks, known_gap, budget) = match id {
        1 => (c01()?, None, 1),
        2 => (c02()?, None, 0),
        3 => (c03()?, None, 0),
        4 => (c04()?, Some(C04_GAP), 0),
        5 => (c05()?, Some(C05_GAP), 1),
        6 => (c06()?, None, 0),
        7 => (c07()?, None, 1),
        8 => (c08()?, None, 5),
        9 => (c09(opts)?, None, 300),
        10 => (c10(opts)?, None, 600),
        11 => (c11(opts)?, None, 300),
        12 => (c12()?, None, 0),
        13 => (c13()?, None, 0),
        _ => return Err(Error::Lookup(format!("no criterion {id}"))),
    };
    let elapsed = start.elapsed();
    if budget > 0 {
        let ok = elapsed < Duration::from_secs(budget);
        checks.push(Check::new(
            "runtime",
            "time budget",
            format!("under {budget}s"),
            if ok { format!("under {budget}s") } else { "over budget".into() },
            ok,
        ));
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(CriterionResult { id, title: TITLES[id as usize - 1], checks, known_gap, elapsed })
}

const C04_GAP: &str = "the stated factorizations for 22sympent and 23sympent have degrees 16 and 22, \
                       while the lattices have ranks 12 and 15";
const C05_GAP: &str = "eta_rr = 6 log phi = 2.887271.. lies just below the stated window [2.8873, 2.8875]";

fn c01() -> Result<Vec<Check>> {
    let expected: [(&str, i64); 13] = [
        ("rr", 20),
        ("sym2rr", 1024),
        ("hessian", 48),
        ("pent", 48),
        ("2sympent", 256),
        ("3sympent", 324),
        ("22sympent", 256),
        ("23sympent", 108),
        ("4sympent", 96),
        ("5sympent", 20),
        ("2224", 1024),
        ("22s24", 16),
        ("sym22sym24", 256),
    ];
    let mut out = Vec::new();
    for (fam, d) in expected {
        let r = lattice_report(&catalog_get(fam)?);
        out.push(Check::eq(format!("abs-det {fam}"), format!("{fam}: |disc| = {d}"), d, &r.abs_det));
    }
    for (fam, group) in [("sym2rr", "Z/4 + (Z/2)^8"), ("hessian", "Z/3 + (Z/2)^4")] {
        let r = lattice_report(&catalog_get(fam)?);
        out.push(Check::eq(format!("group {fam}"), format!("{fam}: discriminant group"), group, &r.discriminant_group));
    }
    Ok(out)
}

fn c02() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for fam in MAIN.iter().chain(CLASSICAL).map(|e| e.family) {
        let r = lattice_report(&catalog_get(fam)?);
        out.push(Check::eq(
            format!("signature {fam}"),
            "Neron-Severi lattices are hyperbolic",
            format!("(1, {}, 0)", r.rank - 1),
            format!("({}, {}, {})", r.signature.0, r.signature.1, r.signature.2),
        ));
    }
    Ok(out)
}

fn c03() -> Result<Vec<Check>> {
    let mut acts = catalog_actions();
    acts.extend(alpha_generators("pent")?.into_iter().filter(|a| a.name != "alpha_34_5"));
    let mut out = Vec::new();
    for a in acts {
        let name = a.qualified_name();
        out.push(Check::eq(format!("isometry {name}"), "M Q M^T = Q", true, isometry_check(&a)?));
    }
    Ok(out)
}

/// `(coefficients from the constant term, multiplicity)`.
type Factors = &'static [(&'static [i64], usize)];

const CHAR_POLYS: [(&str, Factors); 6] = [
    ("Phi_rr@rr", &[(&[1, -18, 1], 1)]),
    ("Phi_51234@pent", &[(&[1, -16, 14, -16, 1], 1)]),
    ("Phi_54321@2sympent", &[(&[-1, 1], 6), (&[1, 1], 1), (&[1, -6, 1], 1)]),
    ("Phi_54123@3sympent", &[(&[1, 1], 2), (&[1, -1, 1], 5), (&[1, -3, 1], 1)]),
    ("Phi_53214@22sympent", &[(&[1, 1], 12), (&[1, 0, 1], 1), (&[1, -4, 1], 1)]),
    ("Phi_53214@23sympent", &[(&[-1, 1], 3), (&[1, 1], 1), (&[1, -3, 1], 1), (&[1, 1, 1], 8)]),
];

fn c04() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, factors) in CHAR_POLYS {
        let want: Vec<(IntPoly, usize)> = factors.iter().map(|(c, m)| (IntPoly::from_i64(c), *m)).collect();
        let a = action_get(name)?;
        let got = char_poly(&a.matrix)?;
        let rep = entropy_report(&a)?;
        let pass = got == IntPoly::product(&want);
        out.push(Check::new(
            format!("char-poly {name}"),
            format!("{name}: stated characteristic polynomial"),
            IntPoly::format_factors(&want),
            rep.factorization,
            pass,
        ));
    }
    Ok(out)
}

fn dec(s: &str) -> BigRational {
    let (i, f) = s.split_once('.').unwrap_or((s, ""));
    let den = num_traits::pow(BigInt::from(10), f.len());
    let num = BigInt::from_str(&format!("{i}{f}")).expect("decimal literal");
    BigRational::new(num, den)
}

fn c05() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let tol = dec("0.000000001");
    let rr = entropy_report(&action_get("Phi_rr@rr")?)?;
    let cert = rr.salem.clone().ok_or_else(|| Error::Degenerate("Phi_rr has no Salem factor".into()))?;
    out.push(Check::eq("lambda rr exact", "rr: lambda = 9 + 4 sqrt 5", "9 + 4*sqrt(5)", cert.exact_root.as_deref().unwrap_or("none")));
    out.push(Check::new(
        "eta rr window",
        "rr: entropy approximately 2.887",
        "[2.8873, 2.8875]",
        &rr.entropy,
        rr.entropy.within(&dec("2.8873"), &dec("2.8875")),
    ));
    // 6 log phi = 3 log((3 + sqrt 5)/2) lies in [2.887270, 2.887272].
    out.push(Check::new(
        "eta rr value",
        "rr: entropy equals 6 log of the golden ratio",
        "[2.887270, 2.887272]",
        &rr.entropy,
        rr.entropy.within(&dec("2.887270"), &dec("2.887272")),
    ));
    let pent = entropy_report(&action_get("Phi_51234@pent")?)?;
    let pc = pent.salem.clone().ok_or_else(|| Error::Degenerate("pent cycle has no Salem factor".into()))?;
    let lambda = pc.lambda.clone().ok_or_else(|| Error::Degenerate("no root enclosure".into()))?;
    out.push(Check::new(
        "lambda pent window",
        "pent: lambda approximately 15.1450744834468",
        "[15.14507448, 15.14507449]",
        &lambda,
        lambda.within(&dec("15.14507448"), &dec("15.14507449")),
    ));
    out.push(Check::new(
        "eta pent window",
        "pent: entropy approximately 2.717675362",
        "[2.7176, 2.7178]",
        &pent.entropy,
        pent.entropy.within(&dec("2.7176"), &dec("2.7178")),
    ));
    for (name, e) in [("rr", &rr.entropy), ("pent", &pent.entropy), ("pent lambda", &lambda)] {
        out.push(Check::new(format!("width {name}"), "enclosure width at most 1e-9", "<= 1e-9", e.width() <= tol, e.width() <= tol));
    }
    Ok(out)
}

fn c06() -> Result<Vec<Check>> {
    let m = action_get("Phi_rr@rr")?.matrix;
    let fib: Vec<BigInt> = std::iter::successors(Some((BigInt::zero(), BigInt::one())), |(a, b)| Some((b.clone(), a + b)))
        .map(|(a, _)| a)
        .take(64)
        .collect();
    let mut out = Vec::new();
    for n in 1..=10usize {
        let want = IntMatrix::from_big_rows(vec![
            vec![-fib[6 * n - 2].clone(), fib[6 * n].clone()],
            vec![-fib[6 * n].clone(), fib[6 * n + 2].clone()],
        ])?;
        let got = mat_pow(&m, n as u64)?;
        out.push(Check::new(
            format!("power {n:02}"),
            "rr: M^n = [[-F(6n-2), F(6n)], [-F(6n), F(6n+2)]]",
            format!("{:?}", want.to_rows()),
            format!("{:?}", got.to_rows()),
            got == want,
        ));
    }
    Ok(out)
}

fn quadratic(trace: i64) -> IntPoly {
    IntPoly::from_i64(&[1, -trace, 1])
}

fn c07() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 1..=20i64 {
        let r = salem_family(SalemFamily::Main, k as u64)?;
        let want = quadratic(4 * (2 * k + 1).pow(2) - 2).to_string();
        out.push(Check::eq(
            format!("main k{k:02}"),
            "gamma1^k gamma2 has Salem factor x^2 - (4(2k+1)^2 - 2)x + 1",
            want,
            r.found.as_deref().unwrap_or("none"),
        ));
    }
    for (fam, label) in [(SalemFamily::One, "one"), (SalemFamily::Two, "two"), (SalemFamily::Three, "three")] {
        for k in 1..=20u64 {
            let r = salem_family(fam, k)?;
            out.push(Check::new(
                format!("family {label} k{k:02}"),
                format!("Salem family {label}: closed form {}", r.predicted),
                &r.predicted,
                r.found.as_deref().unwrap_or(if r.degenerate { "degenerate" } else { "none" }),
                r.verified,
            ));
        }
    }
    Ok(out)
}

fn c08() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let squarefree = |d: u64| (2..=d).take_while(|f| f * f <= d).all(|f| !d.is_multiple_of(f * f));
    for d in (2..=100u64).filter(|&d| squarefree(d)) {
        let s = pell_odd_solve(d)?;
        let db = BigInt::from(d);
        let pell = &s.m * &s.m - &db * &s.n * &s.n == BigInt::one();
        let t = BigInt::from(4) * &s.m * &s.m - 2;
        // (4m^2 - 2)^2 - 4 = 16 m^2 (m^2 - 1) = D (4mn)^2.
        let w = BigInt::from(4) * &s.m * &s.n;
        let disc_ok = &t * &t - 4 == &db * &w * &w;
        let pass = s.m.is_odd() && pell && disc_ok && s.trace == t && s.splitting_field_ok;
        out.push(Check::new(
            format!("pell D{d:03}"),
            "odd m with m^2 - D n^2 = 1 and splitting field Q(sqrt D)",
            "m odd, m^2 - D n^2 = 1, disc = D square",
            format!("m = {}, n = {}", s.m, s.n),
            pass,
        ));
    }
    Ok(out)
}

/// Zeroes every entry with at most one nonzero index, so `e_1 x ... x e_1` is a kernel element.
fn plant(a: &Tensor) -> Result<Tensor> {
    let mut e = a.entries().to_vec();
    for (o, x) in e.iter_mut().enumerate() {
        if a.unravel(o).iter().filter(|&&i| i != 0).count() <= 1 {
            *x = BigInt::zero();
        }
    }
    Tensor::new(a.shape().to_vec(), a.symmetry(), a.ring(), e)
}

#[derive(Default)]
struct Tally {
    tried: usize,
    accepted: usize,
    agree: usize,
    witnesses_ok: usize,
    positives: usize,
}

/// Compares the kernel search with the fixed-point scan; `None` if the surface has rational rank singularities.
fn compare(a: &Tensor, p: u64, cycle: &str) -> Result<Option<(bool, bool, bool)>> {
    let model = match build_surface(a) {
        Ok(m) => m,
        Err(Error::Degenerate(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let gf = Gf::prime(p)?;
    let ev = Evaluator::new(&model, &gf)?;
    if !ev.rank_singular_points()?.is_empty() {
        return Ok(None);
    }
    let h = hyperdet_vanishes(a, p)?;
    let vanishes = h.status == HyperdetStatus::Vanishes;
    let witness_ok = match &h.witness {
        Some(w) => check_witness(a, &gf, w)?,
        None => !vanishes,
    };
    let fixed = !ev.fixed_points(cycle)?.fixed.is_empty();
    Ok(Some((vanishes, fixed, witness_ok)))
}

fn c09(opts: &AcceptOptions) -> Result<Vec<Check>> {
    let target = if opts.quick { 12 } else { 200 };
    let planted_target = if opts.quick { 4 } else { 20 };
    let primes = [3u64, 5, 7];
    let mut out = Vec::new();
    for (fi, (shape, cycle, label)) in [(&[4usize, 4, 4][..], "Phi", "4x4x4"), (&[2, 2, 2, 2, 2][..], "Phi_51234", "2^5")].into_iter().enumerate() {
        let mut t = Tally::default();
        let mut per_prime = [0usize; 3];
        let mut i = 0u64;
        while t.accepted < target && t.tried < 50 * target {
            let pi = (i % 3) as usize;
            let p = primes[pi];
            let a = random_tensor(shape, Symmetry::None, Ring::Fp(p), ((fi as u64) << 40) | i)?;
            i += 1;
            t.tried += 1;
            if let Some((v, f, w)) = compare(&a, p, cycle)? {
                t.accepted += 1;
                per_prime[pi] += 1;
                t.agree += usize::from(v == f);
                t.witnesses_ok += usize::from(w);
                t.positives += usize::from(v);
            }
        }
        out.push(Check::new(
            format!("{label} sample size"),
            "random tensors without rank singularities",
            format!(">= {target}"),
            format!("{} of {} tried (p=3: {}, p=5: {}, p=7: {}), {} with a kernel", t.accepted, t.tried, per_prime[0], per_prime[1], per_prime[2], t.positives),
            t.accepted >= target,
        ));
        out.push(Check::new(
            format!("{label} agreement"),
            "a fixed point exists iff the hyperdeterminant vanishes",
            format!("{} of {}", t.accepted, t.accepted),
            format!("{} of {}", t.agree, t.accepted),
            t.agree == t.accepted,
        ));
        out.push(Check::eq(format!("{label} witnesses"), "kernel witnesses verify", t.accepted, t.witnesses_ok));
    }
    // Planted kernels, moved by a random group element.
    let mut detected = 0;
    let mut planted = 0;
    let mut compared = (0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..planted_target as u64 {
        let (shape, cycle): (&[usize], &str) = if i % 2 == 0 { (&[4, 4, 4], "Phi") } else { (&[2, 2, 2, 2, 2], "Phi_51234") };
        let p = [5u64, 7][(i / 2 % 2) as usize];
        let base = plant(&random_tensor(shape, Symmetry::None, Ring::Fp(p), (3 << 40) | i)?)?;
        let g = GroupElement::random(shape, Symmetry::None, p, &mut rng);
        let a = group_act(&g, &base)?;
        planted += 1;
        let h = hyperdet_vanishes(&a, p)?;
        let gf = Gf::prime(p)?;
        if h.status == HyperdetStatus::Vanishes && check_witness(&a, &gf, h.witness.as_deref().unwrap_or(&[]))? {
            detected += 1;
        }
        if let Some((v, f, _)) = compare(&a, p, cycle)? {
            compared.0 += 1;
            compared.1 += usize::from(v && f);
        }
    }
    out.push(Check::new(
        "planted detected",
        "planted decomposable kernels are found with witnesses",
        format!("{planted} of {planted}, at least {planted_target}"),
        format!("{detected} of {planted}"),
        detected == planted && planted >= planted_target,
    ));
    out.push(Check::new(
        "planted fixed points",
        "planted kernels give fixed points on nonsingular surfaces",
        format!("{} of {}", compared.0, compared.0),
        format!("{} of {}", compared.1, compared.0),
        compared.0 == compared.1,
    ));
    Ok(out)
}

fn family_tensor(family: &str, seed: u64) -> Result<Tensor> {
    let (shape, sym) = family_format(family)?;
    random_tensor(&shape, sym, Ring::Z, seed)
}

fn c10(opts: &AcceptOptions) -> Result<Vec<Check>> {
    let seeds: u64 = if opts.quick { 4 } else { 20 };
    let primes: &[u64] = if opts.quick { &[11] } else { &[11, 13] };
    // (family, surface, bound, required generic fraction in percent; 50 means a strict majority)
    let cases = [("2sympent", "X123", 6, 80), ("sym22sym24", "X3", 8, 50), ("sym2rr", "X1", 10, 50), ("2224", "XU", 12, 50)];
    let mut out = Vec::new();
    for (fam, surf, bound, rate) in cases {
        let (mut samples, mut hits, mut within, mut stable, mut bad) = (0usize, 0usize, 0usize, 0usize, 0usize);
        let mut ext = Vec::new();
        for seed in 0..seeds {
            let m = build_surface(&family_tensor(fam, seed)?)?;
            for &p in primes {
                samples += 1;
                let c = singular_count(&m, surf, p)?;
                // An infinite locus means the reduction mod p is not a surface with isolated singularities.
                let Some(pc) = c.count else {
                    bad += 1;
                    continue;
                };
                within += usize::from(pc.distinct <= bound);
                hits += usize::from(pc.distinct == bound);
                stable += usize::from(pc.rational(pc.splitting_degree()) == pc.distinct);
                if ext.len() < 3 {
                    ext.push(format!("seed {seed} p {p}: F_p^k points {:?}, split over degree {}", (1..=3).map(|k| pc.rational(k)).collect::<Vec<_>>(), pc.splitting_degree()));
                }
            }
        }
        let generic = if rate == 50 { 2 * hits > samples } else { 100 * hits >= rate * samples };
        let finite = samples - bad;
        out.push(Check::eq(
            format!("{fam} bound"),
            format!("{fam}: at most {bound} rank singularities"),
            format!("{finite} of {finite} finite loci"),
            format!("{within} of {finite} finite loci"),
        ));
        out.push(Check::new(
            format!("{fam} generic"),
            format!("{fam}: generically {bound} rank singularities"),
            if rate == 50 { "a majority".to_string() } else { format!("at least {rate}%") },
            format!("{hits} of {samples} ({bad} with bad reduction); {}", ext.join("; ")),
            generic,
        ));
        out.push(Check::eq(format!("{fam} stabilization"), "counts stabilize over the splitting field", finite, stable));
    }
    Ok(out)
}

/// Root multiplicities, one entry per root over the algebraic closure.
fn roots(profile: &[(usize, usize)]) -> Vec<usize> {
    profile.iter().flat_map(|&(m, n)| std::iter::repeat_n(m, n)).collect()
}

/// Whether `observed` arises from `generic` by letting roots collide, i.e. the
/// generic multiplicities can be grouped so the group sums are the observed ones.
fn is_coarsening(generic: &[(usize, usize)], observed: &[(usize, usize)]) -> bool {
    fn fill(left: &mut [(usize, usize)], target: usize, rest: &[usize], start: usize) -> bool {
        if target == 0 {
            return assign(left, rest);
        }
        for i in start..left.len() {
            let (m, n) = left[i];
            if n > 0 && m <= target {
                left[i].1 -= 1;
                let ok = fill(left, target - m, rest, i);
                left[i].1 += 1;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    fn assign(left: &mut [(usize, usize)], rest: &[usize]) -> bool {
        match rest.split_first() {
            None => left.iter().all(|&(_, n)| n == 0),
            Some((&t, tail)) => fill(left, t, tail, 0),
        }
    }
    let mut left = generic.to_vec();
    let mut obs = roots(observed);
    obs.sort_unstable_by(|a, b| b.cmp(a));
    assign(&mut left, &obs)
}

fn c11(opts: &AcceptOptions) -> Result<Vec<Check>> {
    let want_exact: u64 = if opts.quick { 2 } else { 5 };
    let cases: [(&str, &str, &[(usize, usize)], &str); 4] = [
        ("2224", "f", &[(1, 16), (2, 4)], "square of a binary quartic times a degree-16 form"),
        ("3sympent", "X123", &[(1, 6), (3, 6)], "cube of a sextic times a sextic"),
        ("22sympent", "X123", &[(1, 12), (4, 3)], "fourth power of a cubic form times a degree-12 form"),
        ("4sympent", "X123", &[(1, 6), (6, 3)], "sixth power of a cubic form times a sextic"),
    ];
    let mut out = Vec::new();
    for (fam, surf, want, anchor) in cases {
        let (mut exact, mut coarse, mut other, mut seed) = (0u64, 0u64, Vec::new(), 0u64);
        // Roots can collide mod 101; such seeds must still be coarsenings of the generic profile.
        while exact < want_exact && seed < 4 * want_exact {
            let m = build_surface(&family_tensor(fam, seed)?)?;
            match fibration_profile(&m, surf, 0, 101) {
                Ok(prof) => {
                    let ms = prof.multiplicity_structure();
                    if ms == want {
                        exact += 1;
                    } else if prof.total_degree() == 24 && is_coarsening(want, &ms) {
                        coarse += 1;
                    } else {
                        other.push(format!("seed {seed}: {ms:?}"));
                    }
                }
                Err(Error::Degenerate(_)) => other.push(format!("seed {seed}: zero discriminant")),
                Err(e) => return Err(e),
            }
            seed += 1;
        }
        out.push(Check::new(
            format!("{fam} profile"),
            format!("{fam}: {anchor}"),
            format!("{want:?} for {want_exact} seeds, others coarsenings"),
            format!("{exact} exact, {coarse} coarsened by collisions mod 101, {} other {}", other.len(), other.join(" ")),
            exact == want_exact && other.is_empty(),
        ));
    }
    Ok(out)
}

fn c12() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let sq = |m: &IntMatrix| -> Result<bool> { Ok(is_identity(&m.mul_checked(m)?)) };
    let phi = action_get("Phi@sym2rr")?;
    out.push(Check::eq("sym2rr Phi squared", "sym2rr: Phi is an involution", true, sq(&phi.matrix)?));
    for a in alpha_generators("pent")? {
        out.push(Check::eq(format!("{} squared", a.name), "pent: alpha generators are involutions", true, sq(&a.matrix)?));
    }
    let o = exact_order(&action_get("Phi_54321@4sympent")?.matrix, 24);
    out.push(Check::eq(
        "4sympent Phi order",
        "4sympent: Phi has order 4",
        4,
        o.map_or("infinite or > 24".into(), |o| o.to_string()),
    ));
    Ok(out)
}

fn c13() -> Result<Vec<Check>> {
    let rr = GramLattice::anonymous(&[[4, 6], [6, 4]])?;
    let v = even_overlattices(&rr, 2)?;
    let u2 = GramLattice::anonymous(&[[0, 2], [2, 0]])?;
    let w = even_overlattices(&u2, 2)?;
    let classes = distinct_overlattices(&w);
    let plane = classes.len() == 1 && is_hyperbolic_plane(&classes[0][0].gram);
    Ok(vec![
        Check::eq("rr saturated", "rr: the span of H and C is saturated at 2", 0, v.len()),
        Check::eq("U(2) classes", "U(2) has one even index-2 overlattice up to isometry", 1, classes.len()),
        Check::eq("U(2) overlattice", "the overlattice of U(2) is the hyperbolic plane", true, plane),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coarsenings() {
        let f = [(1, 16), (2, 4)];
        assert!(is_coarsening(&f, &f));
        assert!(is_coarsening(&f, &[(1, 15), (2, 3), (3, 1)]));
        assert!(is_coarsening(&f, &[(1, 14), (2, 3), (4, 1)]));
        assert!(!is_coarsening(&f, &[(1, 18), (2, 3)]));
        assert!(!is_coarsening(&[(1, 6), (3, 6)], &[(2, 12)]));
    }
}
