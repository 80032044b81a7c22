//! The backend contract: the categorical primitives every concrete abelian
//! category supplies, and the value types shared by the generic layer.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::{CategoryError, Result};

/// A morphism that knows its endpoints.
pub trait Arrow: Clone + PartialEq + Eq + Debug + Send + Sync {
    type Object: Clone + Eq + Debug + Display;

    fn src(&self) -> &Self::Object;
    fn dst(&self) -> &Self::Object;
}

pub type Ob<C> = <C as AbelianCategory>::Object;
pub type Mor<C> = <C as AbelianCategory>::Morphism;

/// Canonical biproduct `A (+) B` with its projections and inclusions.
///
/// Backends guarantee `p1 i1 = 1`, `p2 i2 = 1`, `p1 i2 = 0` and `p2 i1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biproduct<O, M> {
    pub obj: O,
    pub p1: M,
    pub p2: M,
    pub i1: M,
    pub i2: M,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel<O, M> {
    pub object: O,
    pub inclusion: M,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel<O, M> {
    pub object: O,
    pub projection: M,
}

/// A computable abelian category with decidable morphism equality.
///
/// Lifting along monics and colifting along epis are primitives; the
/// universal properties of kernels and cokernels are realized through them.
/// Injective objects and injective extension are part of the contract so
/// that resolutions can be built generically.
pub trait AbelianCategory: Clone + Debug + PartialEq + Eq + Send + Sync {
    type Object: Clone + Eq + Hash + Debug + Display + Send + Sync;
    type Morphism: Arrow<Object = Self::Object>;

    fn zero_object(&self) -> Self::Object;
    fn is_zero_object(&self, a: &Self::Object) -> bool;
    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    fn zero_morphism(&self, a: &Self::Object, b: &Self::Object) -> Self::Morphism;

    /// `g ∘ f`; requires `f.dst == g.src`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    fn add(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn neg(&self, f: &Self::Morphism) -> Self::Morphism;

    fn biproduct(&self, a: &Self::Object, b: &Self::Object) -> Result<Biproduct<Self::Object, Self::Morphism>>;
    /// The unique `u: C -> A (+) B` with `p1 u = f` and `p2 u = g`.
    fn product_universal(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    /// The unique `u: A (+) B -> C` with `u i1 = f` and `u i2 = g`.
    fn coproduct_universal(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;

    fn kernel(&self, f: &Self::Morphism) -> Kernel<Self::Object, Self::Morphism>;
    fn cokernel(&self, f: &Self::Morphism) -> Cokernel<Self::Object, Self::Morphism>;

    /// The unique `h` with `m ∘ h = g`, for `m` monic.
    fn lift_along_mono(&self, m: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    /// The unique `h` with `h ∘ e = g`, for `e` epi.
    fn colift_along_epi(&self, e: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;

    fn is_injective(&self, a: &Self::Object) -> bool;
    /// A monic from `a` into an injective object.
    fn embed_into_injective(&self, a: &Self::Object) -> Self::Morphism;
    /// A canonical `β: B -> I` with `β ∘ m = α`, for `m: A -> B` monic and
    /// `α: A -> I` with `I` injective.
    fn inj_extend(&self, m: &Self::Morphism, alpha: &Self::Morphism) -> Result<Self::Morphism>;

    fn sub(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism> {
        self.add(f, &self.neg(g))
    }

    fn is_zero_morphism(&self, f: &Self::Morphism) -> bool {
        *f == self.zero_morphism(f.src(), f.dst())
    }

    /// Composes a chain given in application order: `compose_all([f, g, h]) = h ∘ g ∘ f`.
    fn compose_all(&self, chain: &[&Self::Morphism]) -> Result<Self::Morphism> {
        let (first, rest) =
            chain.split_first().ok_or_else(|| CategoryError::ShapeMismatch("empty composition chain".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, g| self.compose(g, &acc))
    }
}

pub(crate) fn ensure_parallel<M: Arrow>(f: &M, g: &M) -> Result<()> {
    if f.src() != g.src() || f.dst() != g.dst() {
        return Err(CategoryError::ShapeMismatch(format!(
            "morphisms {} -> {} and {} -> {} are not parallel",
            f.src(),
            f.dst(),
            g.src(),
            g.dst()
        )));
    }
    Ok(())
}

pub(crate) fn ensure_composable<M: Arrow>(g: &M, f: &M) -> Result<()> {
    if f.dst() != g.src() {
        return Err(CategoryError::CompositionMismatch {
            first_dst: f.dst().to_string(),
            second_src: g.src().to_string(),
        });
    }
    Ok(())
}
