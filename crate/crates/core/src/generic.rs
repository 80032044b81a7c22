//! Constructions written purely against [`AbelianCategory`]: the addition
//! induced by biproducts, monic/epi tests, images and coimages, epi-mono
//! factorization, subobject comparison and exactness.

use crate::category::{ensure_composable, ensure_parallel, AbelianCategory, Arrow, Mor, Ob};
use crate::error::{CategoryError, Result};

/// A monic together with its target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subobject<M> {
    mono: M,
}

impl<M: Arrow> Subobject<M> {
    pub fn new<C>(cat: &C, mono: M) -> Result<Self>
    where
        C: AbelianCategory<Morphism = M>,
    {
        if !is_mono(cat, &mono) {
            return Err(CategoryError::NotMonic(format!("{:?}", mono)));
        }
        Ok(Self { mono })
    }

    pub fn mono(&self) -> &M {
        &self.mono
    }

    pub fn target(&self) -> &M::Object {
        self.mono.dst()
    }
}

/// `f = m ∘ e` with `m` monic and `e` epi through `mid`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<O, M> {
    pub m: M,
    pub e: M,
    pub mid: O,
}

/// `d: A -> A (+) A` with both projections the identity.
pub fn diagonal<C: AbelianCategory>(cat: &C, a: &Ob<C>) -> Result<Mor<C>> {
    let one = cat.identity(a);
    cat.product_universal(&one, &one)
}

/// `d': A (+) A -> A` with both inclusions composing to the identity.
pub fn codiagonal<C: AbelianCategory>(cat: &C, a: &Ob<C>) -> Result<Mor<C>> {
    let one = cat.identity(a);
    cat.coproduct_universal(&one, &one)
}

/// `f (+) g: A (+) A' -> B (+) B'`, the unique map with `π1 (f (+) g) = f p1`
/// and `π2 (f (+) g) = g p2`.
pub fn oplus_mor<C: AbelianCategory>(cat: &C, f: &Mor<C>, g: &Mor<C>) -> Result<Mor<C>> {
    let src = cat.biproduct(f.src(), g.src())?;
    cat.product_universal(&cat.compose(f, &src.p1)?, &cat.compose(g, &src.p2)?)
}

/// `f + g = d' ∘ (f (+) g) ∘ d`, built only from biproduct structure.
pub fn hom_add_via_biproduct<C: AbelianCategory>(cat: &C, f: &Mor<C>, g: &Mor<C>) -> Result<Mor<C>> {
    ensure_parallel(f, g)?;
    let d = diagonal(cat, f.src())?;
    let sum = oplus_mor(cat, f, g)?;
    let dd = codiagonal(cat, f.dst())?;
    cat.compose_all(&[&d, &sum, &dd])
}

/// Monic iff the kernel vanishes.
pub fn is_mono<C: AbelianCategory>(cat: &C, f: &Mor<C>) -> bool {
    cat.is_zero_object(&cat.kernel(f).object)
}

/// Epi iff the cokernel vanishes.
pub fn is_epi<C: AbelianCategory>(cat: &C, f: &Mor<C>) -> bool {
    cat.is_zero_object(&cat.cokernel(f).object)
}

pub fn is_iso<C: AbelianCategory>(cat: &C, f: &Mor<C>) -> bool {
    is_mono(cat, f) && is_epi(cat, f)
}

/// `im f = ker(cok f)`.
pub fn image<C: AbelianCategory>(cat: &C, f: &Mor<C>) -> Subobject<Mor<C>> {
    let cok = cat.cokernel(f);
    Subobject { mono: cat.kernel(&cok.projection).inclusion }
}

/// `coim f = cok(ker f)`.
pub fn coimage<C: AbelianCategory>(cat: &C, f: &Mor<C>) -> Mor<C> {
    let ker = cat.kernel(f);
    cat.cokernel(&ker.inclusion).projection
}

/// The subobject given by `ker f`.
pub fn kernel_subobject<C: AbelianCategory>(cat: &C, f: &Mor<C>) -> Subobject<Mor<C>> {
    Subobject { mono: cat.kernel(f).inclusion }
}

pub fn epi_mono_factorize<C: AbelianCategory>(cat: &C, f: &Mor<C>) -> Result<Factorization<Ob<C>, Mor<C>>> {
    let m = image(cat, f).mono;
    let e = cat.lift_along_mono(&m, f)?;
    Ok(Factorization { mid: m.src().clone(), m, e })
}

/// Equal as subobjects: each factors through the other.
pub fn subobject_eq<C: AbelianCategory>(cat: &C, a: &Subobject<Mor<C>>, b: &Subobject<Mor<C>>) -> bool {
    a.target() == b.target()
        && cat.lift_along_mono(&b.mono, &a.mono).is_ok()
        && cat.lift_along_mono(&a.mono, &b.mono).is_ok()
}

/// `b / a`: the cokernel of the comparison `a -> b`; requires `a ⊆ b`.
pub fn quotient_of_subobjects<C: AbelianCategory>(
    cat: &C,
    b: &Subobject<Mor<C>>,
    a: &Subobject<Mor<C>>,
) -> Result<Mor<C>> {
    let f = cat.lift_along_mono(&b.mono, &a.mono)?;
    Ok(cat.cokernel(&f).projection)
}

/// Exactness of `A -f-> B -g-> C` at `B`; errors if `g ∘ f ≠ 0`.
pub fn is_exact_at<C: AbelianCategory>(cat: &C, f: &Mor<C>, g: &Mor<C>) -> Result<bool> {
    ensure_composable(g, f)?;
    if !cat.is_zero_morphism(&cat.compose(g, f)?) {
        return Err(CategoryError::NonzeroComposite { degree: 0 });
    }
    Ok(subobject_eq(cat, &image(cat, f), &kernel_subobject(cat, g)))
}
