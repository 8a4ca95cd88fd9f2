use algver_core::groups::{
    alternating, character_table, cyclic, dihedral, induce, inflate, inner, quaternion, restrict, sl2, symmetric, Character, FiniteGroup, Subgroup, ORTHO_TOL,
};
use num_complex::Complex64;

fn fixtures() -> Vec<(FiniteGroup, Vec<usize>)> {
    let s3 = symmetric(3).unwrap();
    let a3 = s3.closure(&[s3.generators()[1]]);
    let d8 = dihedral(4);
    let rot = d8.closure(&[d8.generators()[0]]);
    let q8 = quaternion();
    let i = q8.closure(&[q8.generators()[0]]);
    let a4 = alternating(4).unwrap();
    let v4: Vec<usize> = (0..a4.order()).filter(|&x| a4.element_order(x) <= 2).collect();
    let sl = sl2(3).unwrap();
    let z = sl.center();
    vec![(s3, a3), (d8, rot), (q8, i), (a4, v4), (sl, z)]
}

#[test]
fn frobenius_reciprocity_is_exact() {
    for (g, h) in fixtures() {
        let sub = Subgroup::from_elements(&g, &h).unwrap();
        let tg = character_table(&g).unwrap();
        let th = character_table(&sub.group).unwrap();
        for chi in &th.irreps {
            let ind = induce(chi, &sub, &g, &tg.classes).unwrap();
            for psi in &tg.irreps {
                assert_eq!(inner(&ind, psi).unwrap(), inner(chi, &restrict(psi, &sub)).unwrap(), "{}", g.name());
            }
        }
    }
}

#[test]
fn column_orthogonality_holds() {
    for (g, _) in fixtures() {
        let t = character_table(&g).unwrap();
        for (a, ca) in t.classes.iter().enumerate() {
            for (b, cb) in t.classes.iter().enumerate() {
                let s: Complex64 = t.irreps.iter().map(|chi| chi.values[ca[0]] * chi.values[cb[0]].conj()).sum();
                let expected = if a == b { g.order() as f64 / ca.len() as f64 } else { 0.0 };
                assert!((s.re - expected).abs() < ORTHO_TOL && s.im.abs() < ORTHO_TOL, "{} classes ({a}, {b})", g.name());
            }
        }
    }
}

#[test]
fn inflation_from_central_quotient_is_injective_onto_z_trivial_characters() {
    for g in [quaternion(), sl2(3).unwrap(), dihedral(4)] {
        let z = g.center();
        let (q, proj) = g.central_quotient(&z).unwrap();
        let tq = character_table(&q).unwrap();
        let tg = character_table(&g).unwrap();
        let mut hits: Vec<usize> = tq.irreps.iter().map(|chi| tg.index_of(&inflate(chi, &proj)).expect("irreducible")).collect();
        hits.sort_unstable();
        hits.dedup();
        assert_eq!(hits.len(), tq.irreps.len());
        let z_trivial = tg.irreps.iter().filter(|chi| z.iter().all(|&x| (chi.values[x] - chi.values[0]).norm() < 1e-9)).count();
        assert_eq!(z_trivial, hits.len());
    }
}

#[test]
fn every_row_has_unit_norm_and_regular_character_decomposes_by_degree() {
    for (g, _) in fixtures() {
        let t = character_table(&g).unwrap();
        for chi in &t.irreps {
            assert_eq!(inner(chi, chi).unwrap(), 1);
            assert!(chi.is_class_function(&g));
        }
        let reg = Character::regular(g.order());
        assert_eq!(t.decompose(&reg).unwrap(), t.degrees());
    }
    let t = character_table(&cyclic(7)).unwrap();
    assert_eq!(t.degrees(), vec![1; 7]);
}
