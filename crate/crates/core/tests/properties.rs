//! Property tests for invariants across the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use k3tensor_core::dynamics::{isometry_check, pell_odd_solve, salem_certify, salem_family, word_eval, SalemFamily};
use k3tensor_core::fp::{factor_profile_mod_p, FpPoly};
use k3tensor_core::gf::Gf;
use k3tensor_core::lattice::{lattice_report, GramLattice};
use k3tensor_core::linalg::{char_poly, det, IntMatrix};
use k3tensor_core::surface::{build_surface, fibration_profile, hyperdet_vanishes, HyperdetStatus};
use k3tensor_core::tensor::{family_format, group_act, random_tensor, GroupElement, Ring, Symmetry, Tensor};
use k3tensor_core::upoly::IntPoly;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

const FAMILIES: [&str; 6] = ["rr", "sym2rr", "pent", "2sympent", "2224", "sym22sym24"];

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn tensor_files_round_trip(fam in 0..FAMILIES.len(), seed in any::<u64>()) {
        let (shape, sym) = family_format(FAMILIES[fam]).unwrap();
        let t = random_tensor(&shape, sym, Ring::Z, seed).unwrap();
        let back = Tensor::from_json(&t.to_json()).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.hash(), t.hash());
        prop_assert!(t.is_invariant(sym));
    }

    #[test]
    fn kernel_existence_is_group_invariant(seed in any::<u64>(), pi in 0..3usize) {
        let p = [3u64, 5, 7][pi];
        let a = random_tensor(&[2, 2, 2], Symmetry::None, Ring::Fp(p), seed).unwrap();
        let g = GroupElement::random(&[2, 2, 2], Symmetry::None, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = group_act(&g, &a).unwrap();
        let va = hyperdet_vanishes(&a, p).unwrap().status == HyperdetStatus::Vanishes;
        let vb = hyperdet_vanishes(&b, p).unwrap().status == HyperdetStatus::Vanishes;
        prop_assert_eq!(va, vb);
    }

    #[test]
    fn cube_kernel_matches_cayley_mod_p(seed in any::<u64>(), pi in 0..3usize) {
        // Over F_p a 2x2x2 cube has a decomposable kernel element iff its discriminant
        // vanishes and the kernel is rational; a nonzero discriminant rules one out.
        let p = [5u64, 7, 11][pi];
        let a = random_tensor(&[2, 2, 2], Symmetry::None, Ring::Z, seed).unwrap();
        let r = hyperdet_vanishes(&a, p).unwrap();
        let d = r.cayley.clone().unwrap();
        if r.status == HyperdetStatus::Vanishes {
            prop_assert!((d % BigInt::from(p)).is_zero());
        }
    }

    #[test]
    fn alpha_words_are_isometries(word in proptest::collection::vec((1..=4usize, 1..=4usize), 0..8)) {
        let toks: Vec<String> = word.iter().filter(|(k, l)| k != l).map(|(k, l)| format!("a{}{}_5", k.min(l), k.max(l))).collect();
        let a = word_eval("pent", &toks.join(" ")).unwrap();
        prop_assert!(isometry_check(&a).unwrap());
        prop_assert_eq!(det(&a.matrix).unwrap().abs(), BigInt::one());
        let cp = char_poly(&a.matrix).unwrap();
        prop_assert!(cp.is_reciprocal() || cp.reversed() == -cp.clone());
    }

    #[test]
    fn main_family_closed_form(k in 1u64..200) {
        let r = salem_family(SalemFamily::Main, k).unwrap();
        let t = 4 * (2 * k as i64 + 1).pow(2) - 2;
        prop_assert_eq!(r.found.unwrap(), IntPoly::from_i64(&[1, -t, 1]).to_string());
    }

    #[test]
    fn pell_solutions_are_odd(d in 2u64..5000) {
        prop_assume!((d as f64).sqrt().floor().powi(2) as u64 != d);
        let s = pell_odd_solve(d).unwrap();
        prop_assert!(s.m.bit(0));
        prop_assert_eq!(&s.m * &s.m - BigInt::from(d) * &s.n * &s.n, BigInt::one());
    }

    #[test]
    fn quadratic_salem_enclosure_brackets_root(t in 3i64..10_000) {
        let p = IntPoly::from_i64(&[1, -t, 1]);
        let c = salem_certify(&p).unwrap();
        prop_assert!(c.is_salem());
        let l = c.lambda.unwrap();
        let (lo, hi) = (p.eval_rat(&l.lo), p.eval_rat(&l.hi));
        prop_assert!(lo.is_zero() || hi.is_zero() || lo.is_negative() != hi.is_negative());
    }

    #[test]
    fn discriminant_group_order_is_abs_det(entries in proptest::collection::vec(-6i64..=6, 6), diag in proptest::collection::vec(-3i64..=3, 3)) {
        let g = [
            [2 * diag[0], entries[0], entries[1]],
            [entries[0], 2 * diag[1], entries[2]],
            [entries[1], entries[2], 2 * diag[2]],
        ];
        let d = det(&IntMatrix::from_rows(&g)).unwrap();
        prop_assume!(!d.is_zero());
        let r = lattice_report(&GramLattice::anonymous(&g).unwrap());
        let order: BigInt = r.invariant_factors.iter().map(|s| s.parse::<BigInt>().unwrap()).product();
        prop_assert_eq!(order, d.abs());
        prop_assert!(r.even);
    }

    #[test]
    fn factor_profiles_account_for_degree(c in proptest::collection::vec(0u64..13, 2..12)) {
        let f = FpPoly::new(13, c);
        prop_assume!(!f.is_zero());
        let prof = factor_profile_mod_p(&f).unwrap();
        prop_assert_eq!(prof.total_degree(), f.degree().unwrap());
        let sq = f.mul(&f);
        let prof2 = factor_profile_mod_p(&sq).unwrap();
        prop_assert_eq!(prof2.distinct_roots(), prof.distinct_roots());
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn projective_point_counts(n in 1usize..4, qi in 0..5usize) {
        let gf = Gf::of_order([2u64, 3, 4, 5, 9][qi]).unwrap();
        let pts: Vec<_> = gf.projective_points(n).collect();
        prop_assert_eq!(pts.len() as u128, gf.projective_count(n));
        prop_assert!(pts.iter().all(|v| gf.normalize(v).as_ref() == Some(v)));
    }

    #[test]
    fn pent_fibration_discriminant_has_degree_24(seed in any::<u64>()) {
        let t = random_tensor(&[2, 2, 2, 2, 2], Symmetry::None, Ring::Z, seed).unwrap();
        let m = build_surface(&t).unwrap();
        if let Ok(prof) = fibration_profile(&m, "X123", 0, 101) {
            prop_assert_eq!(prof.total_degree(), 24);
        }
    }
}
