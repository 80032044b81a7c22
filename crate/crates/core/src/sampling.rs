//! Random objects, morphisms, complexes and cochain maps for property tests.

use rand::Rng;

use crate::arith::Residue;
use crate::backends::{ModMorphism, ModObject, VectMorphism, VectObject, VectSpaces, ZpkModules};
use crate::category::{AbelianCategory, Arrow, Mor, Ob};
use crate::complexes::{complex_cokernel, complex_kernel, null_homotopic_map, CochainComplex, CochainMap, Homotopy};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::resolutions::{build_injective_resolution_with, InjectiveResolution};

/// Backends that can produce uniformly random data.
pub trait RandomSource: AbelianCategory {
    /// An object with at most `max_rank` cyclic summands.
    fn random_object<R: Rng + ?Sized>(&self, rng: &mut R, max_rank: usize) -> Self::Object;
    /// A uniformly random morphism `a -> b`.
    fn random_morphism<R: Rng + ?Sized>(&self, rng: &mut R, a: &Self::Object, b: &Self::Object) -> Self::Morphism;
    fn random_injective<R: Rng + ?Sized>(&self, rng: &mut R, max_rank: usize) -> Self::Object;
    /// Multiplication by the integer `c`.
    fn scalar_endomorphism(&self, a: &Self::Object, c: i64) -> Self::Morphism;
    /// The additive order of the identity on a free object.
    fn characteristic_modulus(&self) -> i64;
}

impl<T: Residue> RandomSource for ZpkModules<T> {
    fn random_object<R: Rng + ?Sized>(&self, rng: &mut R, max_rank: usize) -> ModObject {
        let rank = rng.gen_range(0..=max_rank);
        self.object((0..rank).map(|_| rng.gen_range(1..=self.k()))).expect("exponents in range")
    }

    fn random_morphism<R: Rng + ?Sized>(&self, rng: &mut R, a: &ModObject, b: &ModObject) -> ModMorphism<T> {
        let ring = self.ring();
        let q = ring.modulus().to_wide();
        let m = Matrix::from_fn(b.rank(), a.rank(), |i, j| {
            let need = b.exponents()[i].saturating_sub(a.exponents()[j]);
            ring.mul(T::from_wide(rng.gen_range(0..q)), ring.p_pow(need))
        });
        self.morphism(a, b, m).expect("divisibility holds by construction")
    }

    fn random_injective<R: Rng + ?Sized>(&self, rng: &mut R, max_rank: usize) -> ModObject {
        self.free(rng.gen_range(0..=max_rank))
    }

    fn scalar_endomorphism(&self, a: &ModObject, c: i64) -> ModMorphism<T> {
        self.scalar(a, c)
    }

    fn characteristic_modulus(&self) -> i64 {
        self.ring().modulus().to_wide() as i64
    }
}

impl<T: Residue> RandomSource for VectSpaces<T> {
    fn random_object<R: Rng + ?Sized>(&self, rng: &mut R, max_rank: usize) -> VectObject {
        self.space(rng.gen_range(0..=max_rank))
    }

    fn random_morphism<R: Rng + ?Sized>(&self, rng: &mut R, a: &VectObject, b: &VectObject) -> VectMorphism<T> {
        let p = self.field().modulus().to_wide();
        let m = Matrix::from_fn(b.dim(), a.dim(), |_, _| T::from_wide(rng.gen_range(0..p)));
        self.morphism(a, b, m).expect("shape matches")
    }

    fn random_injective<R: Rng + ?Sized>(&self, rng: &mut R, max_rank: usize) -> VectObject {
        self.random_object(rng, max_rank)
    }

    fn scalar_endomorphism(&self, a: &VectObject, c: i64) -> VectMorphism<T> {
        self.scalar(a, c)
    }

    fn characteristic_modulus(&self) -> i64 {
        self.p() as i64
    }
}

/// A complex on `[lo, lo + len - 1]` with `d[n+1] = r ∘ cok d[n]` for random
/// `r`, so `d ∘ d = 0` and the cohomology is typically nonzero.
pub fn random_complex<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    lo: i64,
    len: usize,
    max_rank: usize,
) -> Result<CochainComplex<C>> {
    if len == 0 {
        return Ok(CochainComplex::zero(lo));
    }
    let mut objects = vec![cat.random_object(rng, max_rank)];
    let mut differentials: Vec<Mor<C>> = Vec::new();
    for _ in 1..len {
        let prev = objects.last().expect("nonempty");
        let next = cat.random_object(rng, max_rank);
        let d = match differentials.last() {
            None => cat.random_morphism(rng, prev, &next),
            Some(last) => {
                let cok = cat.cokernel(last);
                cat.compose(&cat.random_morphism(rng, &cok.object, &next), &cok.projection)?
            }
        };
        objects.push(next);
        differentials.push(d);
    }
    CochainComplex::new(lo, objects, differentials)
}

/// Random `s[n]: X[n] -> Y[n-1]` over the joint window.
pub fn random_homotopy<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    x: &CochainComplex<C>,
    y: &CochainComplex<C>,
) -> Homotopy<C> {
    let lo = x.lo().min(y.lo() + 1);
    let hi = x.hi().max(y.hi() + 1);
    let components = (lo..=hi).map(|n| cat.random_morphism(rng, &x.object(cat, n), &y.object(cat, n - 1))).collect();
    Homotopy::new(lo, components)
}

pub fn random_null_homotopic<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    x: &CochainComplex<C>,
    y: &CochainComplex<C>,
) -> Result<CochainMap<C>> {
    let s = random_homotopy(cat, rng, x, y);
    null_homotopic_map(cat, x, y, &s)
}

/// `f + (∂s + sd)` for a random homotopy `s`.
pub fn perturb<C: RandomSource, R: Rng + ?Sized>(cat: &C, rng: &mut R, f: &CochainMap<C>) -> Result<CochainMap<C>> {
    let h = random_null_homotopic(cat, rng, f.src(), f.dst())?;
    CochainMap::add(cat, f, &h)
}

/// `c · 1 + (∂s + sd)`.
pub fn random_endomorphism<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    x: &CochainComplex<C>,
) -> Result<CochainMap<C>> {
    let c = rng.gen_range(0..cat.characteristic_modulus());
    let scalar = CochainMap::from_fn(x, x, |n| Ok(cat.scalar_endomorphism(&x.object(cat, n), c)))?;
    perturb(cat, rng, &scalar)
}

/// The inclusion of the kernel of a random endomorphism.
pub fn random_subcomplex_inclusion<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    x: &CochainComplex<C>,
) -> Result<CochainMap<C>> {
    Ok(complex_kernel(cat, &random_endomorphism(cat, rng, x)?)?.1)
}

/// The projection onto the cokernel of a random endomorphism.
pub fn random_quotient_projection<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    x: &CochainComplex<C>,
) -> Result<CochainMap<C>> {
    Ok(complex_cokernel(cat, &random_endomorphism(cat, rng, x)?)?.1)
}

/// A monic `a -> I (+) J` whose first component is the canonical embedding
/// and whose second is random, with `J` a random injective.
pub fn random_embedding<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    a: &Ob<C>,
    max_rank: usize,
) -> Result<Mor<C>> {
    let e = cat.embed_into_injective(a);
    let j = cat.random_injective(rng, max_rank);
    let r = cat.random_morphism(rng, a, &j);
    cat.product_universal(&e, &r)
}

/// A resolution built from random embeddings.
pub fn random_resolution<C: RandomSource, R: Rng + ?Sized>(
    cat: &C,
    rng: &mut R,
    a: &Ob<C>,
    max_degree: i64,
    max_rank: usize,
) -> Result<InjectiveResolution<C>> {
    build_injective_resolution_with(cat, a, max_degree, |o| random_embedding(cat, rng, o, max_rank))
}

/// An extension along monics that differs from `inj_extend` by a random map
/// out of the cokernel: `β = inj_extend(m, α) + r ∘ cok m`.
pub fn random_extender<'a, C: RandomSource, R: Rng + ?Sized>(
    cat: &'a C,
    rng: &'a mut R,
) -> impl FnMut(&Mor<C>, &Mor<C>) -> Result<Mor<C>> + 'a {
    move |m, alpha| {
        let base = cat.inj_extend(m, alpha)?;
        let cok = cat.cokernel(m);
        let r = cat.random_morphism(rng, &cok.object, alpha.dst());
        cat.add(&base, &cat.compose(&r, &cok.projection)?)
    }
}
