use algver_core::{FieldDesc, Gf11, Gf13, Gf2, Gf25, Gf3, Gf4, Gf49, Gf5, Gf7, Gf9, Scalar, Q};

/// Concrete scalar types the harness can instantiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Q,
    Gf2,
    Gf3,
    Gf4,
    Gf5,
    Gf7,
    Gf9,
    Gf11,
    Gf13,
    Gf25,
    Gf49,
}

fn desc_of<S: Scalar>() -> FieldDesc {
    S::descriptor().parse().expect("built-in descriptors parse")
}

impl FieldKind {
    pub fn of(desc: &FieldDesc) -> Option<FieldKind> {
        let table = [
            (desc_of::<Q>(), FieldKind::Q),
            (desc_of::<Gf2>(), FieldKind::Gf2),
            (desc_of::<Gf3>(), FieldKind::Gf3),
            (desc_of::<Gf4>(), FieldKind::Gf4),
            (desc_of::<Gf5>(), FieldKind::Gf5),
            (desc_of::<Gf7>(), FieldKind::Gf7),
            (desc_of::<Gf9>(), FieldKind::Gf9),
            (desc_of::<Gf11>(), FieldKind::Gf11),
            (desc_of::<Gf13>(), FieldKind::Gf13),
            (desc_of::<Gf25>(), FieldKind::Gf25),
            (desc_of::<Gf49>(), FieldKind::Gf49),
        ];
        table.into_iter().find(|(d, _)| d == desc).map(|(_, k)| k)
    }

    /// The quadratic extension `F_{q²}` used for unitary groups over `F_q`.
    pub fn quadratic_over(q: u64) -> Option<FieldKind> {
        match q {
            2 => Some(FieldKind::Gf4),
            3 => Some(FieldKind::Gf9),
            5 => Some(FieldKind::Gf25),
            7 => Some(FieldKind::Gf49),
            _ => None,
        }
    }
}

/// Runs `$body` with `$S` bound to the scalar type of a `FieldKind`.
#[macro_export]
macro_rules! with_field {
    ($kind:expr, $S:ident => $body:expr) => {{
        use $crate::field::FieldKind;
        match $kind {
            FieldKind::Q => {
                type $S = algver_core::Q;
                $body
            }
            FieldKind::Gf2 => {
                type $S = algver_core::Gf2;
                $body
            }
            FieldKind::Gf3 => {
                type $S = algver_core::Gf3;
                $body
            }
            FieldKind::Gf4 => {
                type $S = algver_core::Gf4;
                $body
            }
            FieldKind::Gf5 => {
                type $S = algver_core::Gf5;
                $body
            }
            FieldKind::Gf7 => {
                type $S = algver_core::Gf7;
                $body
            }
            FieldKind::Gf9 => {
                type $S = algver_core::Gf9;
                $body
            }
            FieldKind::Gf11 => {
                type $S = algver_core::Gf11;
                $body
            }
            FieldKind::Gf13 => {
                type $S = algver_core::Gf13;
                $body
            }
            FieldKind::Gf25 => {
                type $S = algver_core::Gf25;
                $body
            }
            FieldKind::Gf49 => {
                type $S = algver_core::Gf49;
                $body
            }
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_resolve() {
        assert_eq!(FieldKind::of(&"gf(7)".parse().unwrap()), Some(FieldKind::Gf7));
        assert_eq!(FieldKind::of(&"Q".parse().unwrap()), Some(FieldKind::Q));
        assert_eq!(FieldKind::of(&"gf(3^2;u^2+1)".parse().unwrap()), Some(FieldKind::Gf9));
        assert_eq!(FieldKind::of(&"gf(17)".parse().unwrap()), None);
        assert_eq!(FieldKind::of(&"split(gf(5),3)".parse().unwrap()), None);
    }
}
