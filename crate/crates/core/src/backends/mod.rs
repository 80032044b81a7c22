//! Concrete abelian categories.

pub mod modules;
pub mod vect;

pub use modules::{ModMorphism, ModObject, ZpkModules};
pub use vect::{VectMorphism, VectObject, VectSpaces};
