use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::tensor::{family_format, group_act, random_tensor, GroupElement, Symmetry};

fn tensor(family: &str, seed: u64) -> Tensor {
    let (shape, sym) = family_format(family).unwrap();
    random_tensor(&shape, sym, Ring::Z, seed).unwrap()
}

fn model(family: &str, seed: u64) -> SurfaceModel {
    build_surface(&tensor(family, seed)).unwrap()
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(gf: &Gf, m: &[Vec<El>]) -> El {
    if m.len() == 1 {
        return m[0][0];
    }
    let mut acc = 0;
    for j in 0..m.len() {
        let minor: Vec<Vec<El>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
        let t = gf.mul(m[0][j], cofactor_det(gf, &minor));
        acc = if j % 2 == 0 { gf.add(acc, t) } else { gf.sub(acc, t) };
    }
    acc
}

#[test]
fn diagonal_cube_is_a_union_of_planes() {
    let mut e = vec![0i64; 64];
    for i in 0..4 {
        e[21 * i] = 1;
    }
    let a = Tensor::from_i64(&[4, 4, 4], Symmetry::None, &e).unwrap();
    let m = build_surface(&a).unwrap();
    let x1 = m.component("X1").unwrap();
    assert_eq!(x1.equations[0].num_terms(), 1);
    assert_eq!(x1.equations[0].multidegree(), Some(vec![4]));
    assert!(x1.non_isolated_singularities);
    assert!(!model("rr", 3).components.iter().any(|c| c.non_isolated_singularities));
}

#[test]
fn zero_tensor_is_degenerate() {
    let a = Tensor::zeros(&[2, 2, 2, 2, 2], Ring::Z);
    assert!(matches!(build_surface(&a), Err(Error::Degenerate(_))));
    let b = Tensor::zeros(&[3, 3], Ring::Z);
    assert!(matches!(build_surface(&b), Err(Error::Format(_))));
}

#[test]
fn rr_quartic_matches_cofactor_determinant() {
    let m = model("rr", 1);
    let gf = Gf::prime(7).unwrap();
    let t = GfTensor::new(&m.tensor, &gf).unwrap();
    for c in &m.components {
        assert_eq!(c.equations[0].multidegree(), Some(vec![4]), "{}", c.name);
        let f = c.equations[0].compile(&gf);
        let slot = c.factors[0][0];
        for x in gf.projective_points(4) {
            let mut v = vec![None; 3];
            v[slot] = Some(x.as_slice());
            let mat = as_matrix(&t.contract(&gf, &v), 4, 4);
            assert_eq!(f.eval(&gf, &x), cofactor_det(&gf, &mat));
        }
    }
}

#[test]
fn component_degrees() {
    let m = model("pent", 2);
    assert_eq!(m.components.len(), 15);
    for c in &m.components {
        match c.kind {
            ComponentKind::Determinantal { .. } => assert_eq!(c.equations[0].multidegree(), Some(vec![2, 2, 2])),
            ComponentKind::Kernel { .. } => {
                assert_eq!(c.equations.len(), 2);
                for f in &c.equations {
                    assert_eq!(f.multidegree(), Some(vec![1, 1, 1, 1]));
                }
            }
            _ => unreachable!(),
        }
    }
    let b = model("2224", 4);
    assert_eq!(b.component("XU").unwrap().equations[0].multidegree(), Some(vec![4]));
    assert_eq!(b.component("f").unwrap().equations[0].multidegree(), Some(vec![2, 2, 2]));
    for y in ["Y12", "Y13", "Y23"] {
        assert_eq!(b.component(y).unwrap().equations.len(), 2);
    }
    let s = model("sym22sym24", 5);
    assert_eq!(s.component("X3").unwrap().equations[0].multidegree(), Some(vec![4]));
}

#[test]
fn box_quotient_vanishes_exactly_where_the_kernel_systems_meet() {
    let a = tensor("2224", 7);
    let m = build_surface(&a).unwrap();
    let gf = Gf::prime(7).unwrap();
    let t = GfTensor::new(&a, &gf).unwrap();
    let f = m.component("f").unwrap().equations[0].compile(&gf);
    let pts: Vec<Vec<El>> = gf.projective_points(2).collect();
    let e = |i: usize| -> Vec<El> { (0..2).map(|k| El::from(k == i)).collect() };
    for v1 in &pts {
        for v2 in &pts {
            for v3 in &pts {
                // Linear conditions on u from the three systems.
                let mut rows = Vec::new();
                for k in 0..2 {
                    let ek = e(k);
                    for v in [
                        [Some(v1.as_slice()), Some(v2.as_slice()), Some(ek.as_slice()), None],
                        [Some(v1.as_slice()), Some(ek.as_slice()), Some(v3.as_slice()), None],
                        [Some(ek.as_slice()), Some(v2.as_slice()), Some(v3.as_slice()), None],
                    ] {
                        rows.push(t.contract(&gf, &v));
                    }
                }
                let solvable = gf.rank(&rows, 4) < 4;
                let x = [v1.clone(), v2.clone(), v3.clone()].concat();
                assert_eq!(f.eval(&gf, &x) == 0, solvable, "{v1:?} {v2:?} {v3:?}");
            }
        }
    }
}

/// Cayley's hyperdeterminant written out in full.
fn cayley_expanded(e: &[i64]) -> i64 {
    let a = |i: usize, j: usize, k: usize| e[4 * i + 2 * j + k];
    a(0, 0, 0).pow(2) * a(1, 1, 1).pow(2)
        + a(0, 0, 1).pow(2) * a(1, 1, 0).pow(2)
        + a(0, 1, 0).pow(2) * a(1, 0, 1).pow(2)
        + a(1, 0, 0).pow(2) * a(0, 1, 1).pow(2)
        - 2 * (a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1)
            + a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1)
            + a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1)
            + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0)
            + a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0)
            + a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1))
        + 4 * (a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1))
}

#[test]
fn cayley_discriminant_oracle() {
    let c = Tensor::from_i64(&[2, 2, 2], Symmetry::None, &[1, 0, 0, 1, 1, 0, 0, -1]).unwrap();
    assert_eq!(cayley_discriminant(&c).unwrap(), BigInt::from(4));
    for p in [3, 5, 7] {
        let r = hyperdet_vanishes(&c, p).unwrap();
        assert_eq!(r.status, HyperdetStatus::NoRationalKernel);
        assert_eq!(r.cayley, Some(BigInt::from(4)));
    }
    for seed in 0..30 {
        let t = random_tensor(&[2, 2, 2], Symmetry::None, Ring::Z, seed).unwrap();
        let e: Vec<i64> = t.entries().iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(cayley_discriminant(&t).unwrap(), BigInt::from(cayley_expanded(&e)));
    }
}

#[test]
fn admissibility() {
    assert!(hyperdet_admissible(&[4, 4, 4]));
    assert!(hyperdet_admissible(&[2, 2, 2, 2, 2]));
    assert!(hyperdet_admissible(&[2, 2, 3]));
    assert!(!hyperdet_admissible(&[2, 2, 4]));
    let a = Tensor::zeros(&[2, 2, 4], Ring::Z);
    assert!(matches!(hyperdet_vanishes(&a, 5), Err(Error::Format(_))));
}

/// 4x4x4 tensor whose entries with at most one nonzero index vanish, so that
/// `e1 x e1 x e1` is in its kernel; returned together with a random translate.
fn planted_rr(seed: u64, p: u64) -> (Tensor, Tensor) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = random_tensor(&[4, 4, 4], Symmetry::None, Ring::Fp(p), seed).unwrap();
    let mut e: Vec<BigInt> = base.entries().to_vec();
    for (o, x) in e.iter_mut().enumerate() {
        let idx = base.unravel(o);
        if idx.iter().filter(|&&i| i != 0).count() <= 1 {
            *x = BigInt::from(0);
        }
    }
    let t = Tensor::new(vec![4, 4, 4], Symmetry::None, Ring::Fp(p), e).unwrap();
    let g = GroupElement::random(&[4, 4, 4], Symmetry::None, p, &mut rng);
    let moved = group_act(&g, &t).unwrap();
    (t, moved)
}

#[test]
fn planted_kernel_is_found_and_fixed() {
    let p = 7;
    let gf = Gf::prime(p).unwrap();
    let e1 = vec![vec![1, 0, 0, 0]; 3];
    let mut clean = 0;
    for seed in 0..6 {
        let (plain, moved) = planted_rr(seed, p);
        assert!(check_witness(&plain, &gf, &e1).unwrap());
        for t in [&plain, &moved] {
            let r = hyperdet_vanishes(t, p).unwrap();
            assert_eq!(r.status, HyperdetStatus::Vanishes);
            assert!(check_witness(t, &gf, r.witness.as_ref().unwrap()).unwrap());
        }
        let m = build_surface(&plain).unwrap();
        let ev = Evaluator::new(&m, &gf).unwrap();
        if !ev.rank_singular_points().unwrap().is_empty() {
            continue;
        }
        clean += 1;
        let scan = ev.fixed_points("Phi").unwrap();
        assert!(scan.fixed.iter().any(|pt| pt.coords == vec![vec![1, 0, 0, 0]]), "seed {seed}");
    }
    assert!(clean > 0);
}

#[test]
fn generic_rr_has_no_kernel_and_no_fixed_point() {
    let m = model("rr", 0);
    let gf = Gf::prime(7).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    let h = hyperdet_vanishes(&m.tensor, 7).unwrap();
    let fixed = ev.fixed_points("Phi").unwrap();
    assert_eq!(h.status == HyperdetStatus::Vanishes, !fixed.fixed.is_empty());
    assert!(fixed.scanned > 0);
}

#[test]
fn generic_rr_over_f11_has_no_rank_singularities() {
    let mut empty = 0;
    for seed in 0..3 {
        if rank_singular_points(&model("rr", seed), 11).unwrap().is_empty() {
            empty += 1;
        }
    }
    assert!(empty >= 2);
}

#[test]
fn psi_maps_are_mutually_inverse() {
    let m = model("rr", 2);
    let gf = Gf::prime(7).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    let mut checked = 0;
    for (a, b) in [("X1", "X2"), ("X2", "X3"), ("X3", "X1"), ("X1", "X3")] {
        for p in ev.surface_points(a).unwrap().into_iter().filter(|p| !p.rank_singular) {
            let y = ev.psi_step(a, b, &p).unwrap();
            assert!(y.on_surface);
            if y.rank_singular {
                continue;
            }
            assert_eq!(ev.psi_step(b, a, &y).unwrap().coords, p.coords);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn psi_errors() {
    let m = model("rr", 2);
    let gf = Gf::prime(7).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    let off = gf.projective_points(4).map(|x| ev.record("X1", vec![x]).unwrap()).find(|p| !p.on_surface).unwrap();
    assert!(matches!(ev.psi_step("X1", "X2", &off), Err(Error::Domain(_))));
    // A rank-2 slice: plant it at e1.
    let mut e = m.tensor.entries().to_vec();
    for j in 2..4 {
        for k in 0..4 {
            e[4 * j + k] = BigInt::from(0);
        }
    }
    let a = Tensor::new(vec![4, 4, 4], Symmetry::None, Ring::Z, e).unwrap();
    let ms = build_surface(&a).unwrap();
    let evs = Evaluator::new(&ms, &gf).unwrap();
    let p = evs.record("X1", vec![vec![1, 0, 0, 0]]).unwrap();
    assert!(p.rank_singular);
    assert!(matches!(evs.psi_step("X1", "X2", &p), Err(Error::SingularPoint(_))));
    assert!(matches!(ev.psi_step("X1", "X1", &off), Err(Error::Format(_)) | Err(Error::Domain(_))));
}

#[test]
fn doubly_symmetric_rr() {
    let m = model("sym2rr", 3);
    let gf = Gf::prime(7).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    let mut involutions = 0;
    for p in ev.surface_points("X1").unwrap().into_iter().filter(|p| !p.rank_singular) {
        let y = ev.psi_step("X1", "X2", &p).unwrap();
        let z = ev.psi_step("X1", "X3", &p).unwrap();
        assert_eq!(y.coords, z.coords);
        if let Ok(o) = ev.phi_orbit("Phi", &p, 2) {
            assert!(matches!(o.period, Some(1) | Some(2)), "{:?}", o.period);
            involutions += 1;
        }
    }
    assert!(involutions > 0);
}

#[test]
fn lifts_between_pent_surfaces() {
    let m = model("pent", 6);
    let gf = Gf::prime(5).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    let on4 = ev.surface_points("X1234").unwrap();
    for p in &on4 {
        let r = ev.record("X123", p.coords[..3].to_vec()).unwrap();
        assert!(r.on_surface);
    }
    // A nonsingular point of X123 has exactly one lift.
    for p in ev.surface_points("X123").unwrap().into_iter().filter(|p| !p.rank_singular) {
        let n = on4.iter().filter(|q| q.coords[..3] == p.coords[..]).count();
        assert_eq!(n, 1, "{:?}", p.coords);
    }
}

#[test]
fn alpha_is_an_involution_on_points() {
    let m = model("pent", 8);
    let gf = Gf::prime(5).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    let mut n = 0;
    for p in ev.surface_points("X1234").unwrap().into_iter().filter(|p| !p.rank_singular) {
        for cyc in ["alpha_34_5", "alpha_12_5", "alpha_13_5"] {
            let path = parse_cycle(&m, cyc).unwrap();
            if let Ok(a) = ev.apply_cycle(&path, &p) {
                if let Ok(b) = ev.apply_cycle(&path, &a) {
                    assert_eq!(b.coords, p.coords);
                    n += 1;
                }
            }
        }
    }
    assert!(n > 0);
}

#[test]
fn quintuply_symmetric_five_cycle_has_order_four() {
    let m = model("5sympent", 1);
    let gf = Gf::prime(7).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    let mut four = 0;
    for p in ev.surface_points("X1234").unwrap().into_iter().filter(|p| !p.rank_singular) {
        if let Ok(o) = ev.phi_orbit("Phi_51234", &p, 8) {
            let k = o.period.expect("orbit closes");
            assert_eq!(4 % k, 0, "period {k}");
            four += usize::from(k == 4);
        }
    }
    assert!(four > 0);
}

#[test]
fn cycle_descriptors() {
    let m = model("pent", 0);
    assert_eq!(parse_cycle(&m, "alpha_34_5").unwrap(), ["X1234", "X1245", "X1235", "X1234"]);
    assert_eq!(parse_cycle(&m, "Phi_51234").unwrap()[..2], ["X1234".to_string(), "X2345".to_string()]);
    assert!(parse_cycle(&m, "Phi_51233").is_err());
    assert!(parse_cycle(&m, "Phi").is_err());
    assert_eq!(parse_cycle(&model("rr", 0), "Phi").unwrap(), ["X1", "X2", "X3", "X1"]);
}

#[test]
fn scan_bound_is_enforced() {
    let m = model("rr", 0);
    let gf = Gf::prime(101).unwrap();
    let ev = Evaluator::new(&m, &gf).unwrap();
    assert!(matches!(ev.surface_points("X1"), Err(Error::Resource { .. })));
}

fn exhaustive_singular(m: &SurfaceModel, name: &str, q: u64) -> usize {
    let gf = Gf::of_order(q).unwrap();
    Evaluator::new(m, &gf).unwrap().component_rank_singular(name).unwrap().len()
}

#[test]
fn singular_counts_agree_with_scans() {
    let cases = [("2sympent", "X123", 6), ("sym22sym24", "X3", 8), ("sym2rr", "X1", 10), ("2224", "XU", 12)];
    for (fam, surf, expected) in cases {
        let mut hits = 0;
        for seed in 0..3 {
            let m = model(fam, seed);
            let c = singular_count(&m, surf, 11).unwrap();
            let pc = c.count.clone().expect("finite");
            assert!(pc.distinct <= expected, "{fam} seed {seed}: {pc:?}");
            hits += usize::from(pc.distinct == expected);
            assert_eq!(pc.rational(1), exhaustive_singular(&m, surf, 11), "{fam} seed {seed}");
            if fam == "2sympent" {
                let c5 = singular_count(&m, surf, 5).unwrap().count.unwrap();
                assert_eq!(c5.rational(2), exhaustive_singular(&m, surf, 25), "{fam} seed {seed}");
                let c3 = singular_count(&m, surf, 3).unwrap().count.unwrap();
                for (k, q) in [(1, 3), (2, 9), (3, 27)] {
                    assert_eq!(c3.rational(k), exhaustive_singular(&m, surf, q), "{fam} seed {seed} q {q}");
                }
            }
        }
        assert!(hits >= 2, "{fam}");
    }
}

#[test]
fn box_singularities_come_from_the_four_point_sets() {
    let mut generic = 0;
    for (seed, p) in [(0, 13), (1, 17), (3, 11)] {
        let m = model("2224", seed);
        let c = singular_count(&m, "XU", p).unwrap().count.unwrap();
        let mut total = 0;
        for i in 0..3 {
            let sys = substitute_factors(&m.tensor, &[vec![i], vec![3]]).unwrap();
            let eqs: Vec<MultiPoly> = sys.iter().map(|f| f.reduce_mod(p)).filter(|f| !f.is_zero()).collect();
            total += count_projective_zeros(&eqs, p).unwrap().unwrap().distinct;
        }
        assert!(c.distinct <= total);
        if c.distinct == 12 {
            assert_eq!(total, 12);
            generic += 1;
        }
    }
    assert!(generic >= 2);
}

#[test]
fn fibration_profiles() {
    let cases: [(&str, &str, &[(usize, usize)]); 5] = [
        ("3sympent", "X123", &[(1, 6), (3, 6)]),
        ("22sympent", "X123", &[(1, 12), (4, 3)]),
        ("4sympent", "X123", &[(1, 6), (6, 3)]),
        ("2224", "f", &[(1, 16), (2, 4)]),
        ("pent", "X123", &[(1, 24)]),
    ];
    for (fam, surf, want) in cases {
        let mut ok = 0;
        for seed in 0..3 {
            let prof = fibration_profile(&model(fam, seed), surf, 0, 101).unwrap();
            assert_eq!(prof.total_degree(), 24);
            ok += usize::from(prof.multiplicity_structure() == want);
        }
        assert!(ok >= 2, "{fam}");
    }
}

#[test]
fn fibration_needs_three_binary_blocks() {
    let m = model("rr", 0);
    assert!(matches!(fibration_profile(&m, "X1", 0, 101), Err(Error::Format(_))));
    assert!(matches!(fibration_disc(&m.components[0].equations[0], 0), Err(Error::Format(_))));
}
