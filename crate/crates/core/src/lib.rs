//! Linear ℓ-intersection pairs of codes over finite fields and the
//! entanglement-assisted quantum codes built from them.

pub mod catalog;
pub mod code;
pub mod eaqecc;
pub mod error;
pub mod gf;
pub mod grs;
pub mod io;
pub mod matrix;
pub mod pairs;
pub mod poly;
pub mod selfcheck;
pub mod worked_example;

pub use code::LinearCode;
pub use eaqecc::{EaqeccParams, Rational};
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use matrix::Matrix;
pub use pairs::IntersectionPair;
pub use poly::Poly;
