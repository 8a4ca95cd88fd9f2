//! Finite groups, conjugacy classes and complex characters.

mod build;
mod character;
pub mod cmat;
mod cyclotomic;
mod dixon;
mod group;
mod subgroup;

pub use build::{abelian, alternating, cyclic, dihedral, from_cycles, klein, quaternion, sl2, symmetric};
pub use character::{induce, inflate, inner, inner_raw, restrict, snap_int, Character, ORTHO_TOL, SNAP_TOL};
pub use cyclotomic::parse_cyclotomic;
pub use dixon::{character_table, CharacterTable, TABLE_ORDER_BOUND};
pub use group::{parse_cycles, FiniteGroup, TABLE_BOUND};
pub use subgroup::Subgroup;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let sizes = |g: &FiniteGroup| {
            let mut s: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes(&symmetric(3).unwrap()), vec![1, 2, 3]);
        assert_eq!(quaternion().conjugacy_classes().len(), 5);
        assert_eq!(cyclic(6).conjugacy_classes().len(), 6);
        assert_eq!(sl2(3).unwrap().order(), 24);
    }

    #[test]
    fn standard_tables() {
        assert_eq!(character_table(&symmetric(3).unwrap()).unwrap().degrees(), vec![1, 1, 2]);
        assert_eq!(character_table(&quaternion()).unwrap().degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(character_table(&sl2(3).unwrap()).unwrap().degrees(), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(character_table(&alternating(5).unwrap()).unwrap().degrees(), vec![1, 3, 3, 4, 5]);
        let t = character_table(&cyclic(5)).unwrap();
        assert_eq!(t.irreps.len(), 5);
        for chi in &t.irreps {
            assert!(chi.values.iter().all(|v| (v.norm() - 1.0).abs() < 1e-9));
        }
    }

    #[test]
    fn quotients_and_products() {
        let z4 = cyclic(4);
        let g = z4.direct_product(&z4).unwrap();
        let z = g.closure(&[2 * 4 + 2]);
        let (q, _) = g.central_quotient(&z).unwrap();
        assert_eq!(q.order(), 8);
        let q8 = quaternion();
        let (v, proj) = q8.central_quotient(&q8.center()).unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.exponent(), 2);
        assert_eq!(proj.len(), 8);
        let s3 = symmetric(3).unwrap();
        let t = s3.closure(&[s3.generators()[0]]);
        assert!(matches!(s3.central_quotient(&t), Err(crate::Error::NotCentral(_))));
        assert!(matches!(s3.quotient(&[0, s3.generators()[1]]), Err(crate::Error::NotSubgroup(_))));
        assert!(matches!(s3.quotient(&t), Err(crate::Error::NotNormal(_))));
    }

    #[test]
    fn induction_from_a3() {
        let s3 = symmetric(3).unwrap();
        let table = character_table(&s3).unwrap();
        let a3 = Subgroup::generated(&s3, &[s3.generators()[1]]).unwrap();
        assert_eq!(a3.order(), 3);
        let ind = induce(&Character::trivial(3), &a3, &s3, &table.classes).unwrap();
        assert_eq!(table.decompose(&ind).unwrap(), vec![1, 1, 0]);
        let whole = Subgroup::whole(&s3);
        assert!(restrict(&table.irreps[2], &whole).approx_eq(&table.irreps[2]));
    }

    #[test]
    fn cycle_parser() {
        assert_eq!(parse_cycles("(1 2 3)(4 5)", 5).unwrap(), vec![1, 2, 0, 4, 3]);
        assert!(parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(parse_cycles("(1 9)", 3).is_err());
    }
}
