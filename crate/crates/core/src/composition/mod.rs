mod cayley_dickson;
mod twisted;

pub use cayley_dickson::{check_composition, check_composition_bounded, parse_cd, CompositionAlgebra};
pub use twisted::{beta_square_counterexample, check_twisted, check_twisted_bounded, TwistedComposition};
