use algver_core::composition::CompositionAlgebra;
use algver_core::cubic::{check_cubic_axioms, parse_hermitian_element, CubicNorm, HermitianJ};
use algver_core::scalars::{self, Scalar};
use algver_core::{Gf7, Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn det3<S: Scalar>(m: &[[S; 3]; 3]) -> S {
    scalars::mat_det(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn adjugate<S: Scalar>(m: &[[S; 3]; 3]) -> [[S; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
            let minor = m[rows[0]][cols[0]].clone() * m[rows[1]][cols[1]].clone() - m[rows[0]][cols[1]].clone() * m[rows[1]][cols[0]].clone();
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
    })
}

fn trace_of_product<S: Scalar>(a: &[[S; 3]; 3], b: &[[S; 3]; 3]) -> S {
    let mut t = S::zero();
    for i in 0..3 {
        for k in 0..3 {
            t = t + a[i][k].clone() * b[k][i].clone();
        }
    }
    t
}

fn gf7_vec() -> impl Strategy<Value = Vec<Gf7>> {
    prop::collection::vec(0u64..7, 6).prop_map(|v| v.into_iter().map(Gf7::new).collect())
}

proptest! {
    #[test]
    fn symmetric_matrices_match_determinant_adjugate_and_trace(x in gf7_vec(), y in gf7_vec()) {
        let j = HermitianJ::new(CompositionAlgebra::<Gf7>::base()).unwrap();
        let (mx, my) = (j.to_matrix(&x).unwrap(), j.to_matrix(&y).unwrap());
        prop_assert_eq!(j.norm(&x), det3(&mx));
        prop_assert_eq!(j.sharp(&x), j.from_matrix(&adjugate(&mx)));
        prop_assert_eq!(j.trace_form(&x, &y), trace_of_product(&mx, &my));
    }
}

#[test]
fn rational_albert_algebra_satisfies_axioms() {
    let c = CompositionAlgebra::new(&[Q::from_i64(-1), Q::from_i64(-1), Q::from_i64(-1)]).unwrap();
    let j = HermitianJ::new(c).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    check_cubic_axioms(&j, 5, &mut rng).unwrap();
}

#[test]
fn rational_fixture_element_has_expected_norm() {
    let j = HermitianJ::new(CompositionAlgebra::<Q>::base()).unwrap();
    let x: Vec<Q> = parse_hermitian_element("(2,3,1/2;[1],[0],[1])", 1).unwrap();
    // det [[2,1,0],[1,3,1],[0,1,1/2]] = 2(3/2 - 1) - 1(1/2) = 1/2
    assert_eq!(j.norm(&x), Q::from_i64(1) / Q::from_i64(2));
}
