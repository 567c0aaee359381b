pub mod ah;
pub mod aut;
pub mod center;
pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod normal;
pub mod parse;
pub mod poly;
pub mod weyl;

pub use ah::{AhContext, OreElement};
pub use error::{Error, Result};
pub use field::{ArithOp, FieldElem, FieldKind, FieldSpec};
pub use poly::{Factor, FactoredPoly, Irreducibility, Poly};
pub use weyl::WeylElement;
