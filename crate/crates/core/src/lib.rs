//! Exact-arithmetic verification of composition algebras, cubic norm
//! structures, Jordan pairs, character lattices of tori, Clifford theory and a
//! finite-group model of the similitude theta correspondence.

pub mod check;
pub mod clifford;
pub mod composition;
pub mod cubic;
pub mod diagonalizable;
pub mod error;
pub mod groups;
pub mod jordan;
pub mod scalars;
pub mod theta;

pub use error::{Error, Result};
pub use scalars::{EtaleAlgebra, EtaleElement, Ext, FieldDesc, Fp, Rational, Scalar};

pub type Q = Rational;
pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf5 = Fp<5>;
pub type Gf7 = Fp<7>;
pub type Gf11 = Fp<11>;
pub type Gf13 = Fp<13>;
pub type Gf4 = Ext<scalars::Gf4Spec>;
pub type Gf9 = Ext<scalars::Gf9Spec>;
pub type Gf25 = Ext<scalars::Gf25Spec>;
pub type Gf49 = Ext<scalars::Gf49Spec>;
pub type Qi = Ext<scalars::QiSpec>;
