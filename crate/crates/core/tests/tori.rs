use algver_core::diagonalizable::{center_iso_check, example3_criterion, idet, imat_mul, smith_normal_form};
use proptest::prelude::*;

#[test]
fn criterion_grid_matches_adjacent_degrees() {
    for n in 1..=6i128 {
        for d in 1..=6usize {
            let e = example3_criterion(n, d).unwrap();
            let gap = (d as i128 - n).abs();
            assert_eq!(e.iso, gap == 1, "(n, d) = ({n}, {d})");
            assert_eq!(e.det.abs(), n.pow(d as u32 - 1) * gap, "(n, d) = ({n}, {d})");
            if e.det != 0 {
                assert_eq!(e.kernel_dual.order(), Some(e.det.abs()));
            } else {
                assert!(e.kernel_dual.free_rank() > 0);
            }
        }
    }
}

#[test]
fn center_map_matches_brute_force_table() {
    for (n, d) in [(2u64, 3u32), (3, 2), (3, 4), (4, 3), (2, 2), (2, 1), (1, 1)] {
        assert!(center_iso_check(n, d).unwrap().iso, "({n}, {d})");
    }
    for (n, d) in [(2u64, 4u32), (3, 3), (4, 4)] {
        assert!(!center_iso_check(n, d).unwrap().iso, "({n}, {d})");
    }
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<Vec<i128>>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(prop::collection::vec(-9i128..=9, c), r)))
}

proptest! {
    #[test]
    fn smith_form_is_a_unimodular_diagonalization((r, c, m) in small_matrix()) {
        let s = smith_normal_form(&m, r, c);
        prop_assert_eq!(imat_mul(&imat_mul(&s.u, &m), &s.v), s.d.clone());
        prop_assert_eq!(idet(&s.u).abs(), 1);
        prop_assert_eq!(idet(&s.v).abs(), 1);
        if r == c {
            prop_assert_eq!(idet(&m).abs(), s.diagonal().iter().product::<i128>().abs());
        }
    }
}
