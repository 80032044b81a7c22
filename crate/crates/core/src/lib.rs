//! Homological algebra over computable abelian categories.
//!
//! The generic layer ([`generic`], [`complexes`], [`resolutions`],
//! [`derived`]) is written once against [`AbelianCategory`]. Two backends
//! instantiate it with exact modular arithmetic: finite-dimensional vector
//! spaces over `F_p` and finitely generated modules over `Z/p^k`. Both are
//! generic over the machine word holding residues; [`Vect`] and [`ModZpk`]
//! fix it to `u64`.
//!
//! ```
//! use homalg::{derived::right_derived_object, derived::HomFunctor, AbelianCategory, ModZpk};
//!
//! let cat = ModZpk::new(2, 2).unwrap();
//! let z2 = cat.cyclic(1).unwrap();
//! let ext = HomFunctor::new(cat, z2.clone());
//! assert_eq!(right_derived_object(&ext, &z2, 3).unwrap(), z2);
//! assert!(!cat.is_injective(&z2));
//! ```

pub mod arith;
pub mod backends;
pub mod category;
pub mod complexes;
pub mod derived;
pub mod error;
pub mod generic;
pub mod matrix;
pub mod resolutions;
pub mod sampling;
pub mod smith;

pub use arith::{Residue, ResidueRing};
pub use backends::{ModMorphism, ModObject, VectMorphism, VectObject, VectSpaces, ZpkModules};
pub use category::{AbelianCategory, Arrow, Biproduct, Cokernel, Kernel, Mor, Ob};
pub use complexes::{CochainComplex, CochainMap, Cohomology, Homotopy};
pub use derived::{AdditiveFunctor, DerivedFunctor, HomFunctor, InternalHom};
pub use error::{CategoryError, Result};
pub use matrix::Matrix;
pub use resolutions::InjectiveResolution;

/// Vector spaces over `F_p` with `u64` residues.
pub type Vect = VectSpaces<u64>;
/// Modules over `Z/p^k` with `u64` residues.
pub type ModZpk = ZpkModules<u64>;
/// Morphisms of [`Vect`].
pub type VectMap = VectMorphism<u64>;
/// Morphisms of [`ModZpk`].
pub type ModMap = ModMorphism<u64>;
