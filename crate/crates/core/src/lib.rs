pub mod algtest;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod group;
pub mod homalg;
pub mod io;
pub mod matrix;
pub mod meataxe;
pub mod module;
pub mod poly;
pub mod sl2tilt;

pub use error::{Error, Result};
pub use field::{Elem, FieldSpec};
pub use group::{Group, GroupSpec, Realization, SubgroupSpec, Word};
pub use matrix::{Matrix, SemiEchelon};
pub use module::ModuleRep;
pub use poly::Poly;
