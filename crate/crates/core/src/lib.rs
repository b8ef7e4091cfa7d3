//! Exact commutative algebra and combinatorics for coupled-cluster degrees
//! of Grassmannians.

pub mod error;
pub mod grassmann;
pub mod groebner;
pub mod monomial;
pub mod order;
pub mod polytope;
pub mod poset;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod toric;
pub mod univariate;

pub use error::{Error, ParseError, Result};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::Polynomial;
pub use rational::Rational;
pub use ring::{Ring, VariableTable};
