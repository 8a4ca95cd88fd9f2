use algver_core::composition::CompositionAlgebra;
use algver_core::cubic::{HermitianJ, LinearOp};
use algver_core::jordan::{check_jp, contragredient, is_hom, unitary_group, CorruptedPair, CubicPair, DualSpacePair, HermitianPair};
use algver_core::scalars::Scalar;
use algver_core::{Error, Gf25, Gf3, Gf5, Gf9};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn dual_space_pairs_pass_over_gf3_and_its_quadratic_extension() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for dim in 1..=2 {
        check_jp::<Gf3, _, _>(&DualSpacePair::new(dim), 100, &mut rng).unwrap();
        check_jp::<Gf9, _, _>(&DualSpacePair::new(dim), 100, &mut rng).unwrap();
    }
}

#[test]
fn octonion_cubic_pair_passes_over_gf5_and_gf25() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let gam = |n: i64| Gf5::from_i64(n);
    let c = CompositionAlgebra::new(&[gam(2), gam(3), gam(1)]).unwrap();
    check_jp(&CubicPair::new(HermitianJ::new(c).unwrap()).unwrap(), 40, &mut rng).unwrap();
    let ext = |n: i64| Gf25::from_i64(n);
    let c = CompositionAlgebra::new(&[ext(2), ext(3), ext(1)]).unwrap();
    check_jp(&CubicPair::new(HermitianJ::new(c).unwrap()).unwrap(), 20, &mut rng).unwrap();
}

#[test]
fn corrupted_cubic_pair_reports_an_axiom() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let j = HermitianJ::new(CompositionAlgebra::<Gf5>::base()).unwrap();
    let bad = CorruptedPair { inner: CubicPair::new(j).unwrap() };
    match check_jp(&bad, 50, &mut rng) {
        Err(Error::PropertyViolation { identity, witness }) => {
            assert!(identity.starts_with("JP"));
            assert!(!witness.is_empty());
        }
        other => panic!("expected a violation, got {other:?}"),
    }
}

#[test]
fn homomorphisms_compose() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = DualSpacePair::new(2);
    let g = vec![vec![Gf5::from_i64(1), Gf5::from_i64(2)], vec![Gf5::from_i64(3), Gf5::from_i64(4)]];
    let h = vec![vec![Gf5::from_i64(0), Gf5::from_i64(1)], vec![Gf5::from_i64(1), Gf5::from_i64(1)]];
    let (gp, gm) = contragredient(&g).unwrap();
    let (hp, hm) = contragredient(&h).unwrap();
    assert!(is_hom(&gp, &gm, &p, &p, 50, &mut rng).unwrap());
    assert!(is_hom(&gp.compose(&hp), &gm.compose(&hm), &p, &p, 50, &mut rng).unwrap());
    let id = LinearOp { matrix: algver_core::scalars::mat_identity::<Gf5>(2) };
    assert!(is_hom(&id, &id, &p, &p, 50, &mut rng).unwrap());
}

#[test]
fn unitary_automorphisms_are_closed_under_short_words() {
    let one = Gf9::from_i64(1);
    let zero = Gf9::from_i64(0);
    let p = HermitianPair::new(vec![vec![one.clone(), zero.clone()], vec![zero, one]]).unwrap();
    let group = unitary_group(&p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mul = algver_core::scalars::mat_mul::<Gf9>;
    for (a, b, c) in [(0usize, 5usize, 17usize), (3, 40, 77), (95, 12, 60)] {
        let w = mul(&mul(&group[a], &group[b]), &group[c]);
        assert!(group.contains(&w));
        assert!(p.is_automorphism(&w, 20, &mut rng).unwrap());
    }
}
