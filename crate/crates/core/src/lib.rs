pub mod cli;
pub mod error;
pub mod f2;
pub mod field;
pub mod graph;
pub mod hyperelliptic;
pub mod p1;
pub mod parse;
pub mod poly;
pub mod rational;
mod sqrt;
pub mod squares;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec, Sign};
pub use hyperelliptic::{Curve, CurveFunction, CurvePlace, HyperellipticModel};
pub use p1::{PlaceP1, RationalModel, SquareClassP1};
pub use poly::{Factorization, Poly};
pub use rational::RationalFunction;
pub use squares::{CurveModel, Squares, SubgroupF2};
