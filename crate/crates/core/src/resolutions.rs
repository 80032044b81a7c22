//! Injective resolutions and the comparison of maps between them.
//!
//! A resolution `0 -> A -> I^0 -> I^1 -> ... -> I^N` is stored as its
//! augmentation `A -> I^0` and the deleted complex on `[0, N]`. The complex
//! is exact at `I^n` for `n < N`; the top degree is where it was cut off.
//! Extending along monics only ever happens through a factorization
//! `d = m ∘ e` of a differential: the map to extend kills `ker e`, so it
//! colifts along `e`, and the colift extends along `m` into an injective.

use crate::category::{AbelianCategory, Arrow, Mor, Ob};
use crate::complexes::{is_homotopic_in, CochainComplex, CochainMap, Homotopy};
use crate::error::{CategoryError, Result};
use crate::generic::{epi_mono_factorize, is_exact_at, is_mono, oplus_mor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveResolution<C: AbelianCategory> {
    base: Ob<C>,
    aug: Mor<C>,
    complex: CochainComplex<C>,
}

impl<C: AbelianCategory> InjectiveResolution<C> {
    /// Wraps existing data; use [`InjectiveResolution::verify`] to check it.
    pub fn from_parts(aug: Mor<C>, complex: CochainComplex<C>) -> Result<Self> {
        if complex.lo() != 0 || complex.is_empty() {
            return Err(CategoryError::ShapeMismatch("a resolution complex starts in degree 0".into()));
        }
        if aug.dst() != &complex.objects()[0] {
            return Err(CategoryError::ShapeMismatch("augmentation must land in I^0".into()));
        }
        Ok(Self { base: aug.src().clone(), aug, complex })
    }

    pub fn base(&self) -> &Ob<C> {
        &self.base
    }

    pub fn aug(&self) -> &Mor<C> {
        &self.aug
    }

    pub fn complex(&self) -> &CochainComplex<C> {
        &self.complex
    }

    pub fn max_degree(&self) -> i64 {
        self.complex.hi()
    }

    /// The map into `I^n`: the augmentation for `n = 0`, else `d[n-1]`.
    pub fn incoming(&self, cat: &C, n: i64) -> Mor<C> {
        if n == 0 {
            self.aug.clone()
        } else {
            self.complex.differential(cat, n - 1)
        }
    }

    pub fn truncate(&self, cat: &C, max_degree: i64) -> Result<Self> {
        if max_degree < 0 || max_degree > self.max_degree() {
            return Err(CategoryError::InvalidParameters(format!(
                "cannot truncate a resolution of degree {} to degree {max_degree}",
                self.max_degree()
            )));
        }
        Ok(Self { base: self.base.clone(), aug: self.aug.clone(), complex: self.complex.truncate(cat, 0, max_degree) })
    }

    /// Checks that the augmentation is monic, every object is injective,
    /// `d ∘ d = 0`, and the augmented sequence is exact below the top degree.
    pub fn verify(&self, cat: &C) -> Result<()> {
        if !is_mono(cat, &self.aug) {
            return Err(CategoryError::NotMonic("resolution augmentation".into()));
        }
        if let Some(o) = self.complex.objects().iter().find(|o| !cat.is_injective(o)) {
            return Err(CategoryError::NotInjective(o.to_string()));
        }
        for n in 0..self.max_degree() {
            if !is_exact_at(cat, &self.incoming(cat, n), &self.complex.differential(cat, n))? {
                return Err(CategoryError::Invariant(format!("resolution is not exact at I^{n}")));
            }
        }
        Ok(())
    }
}

/// Resolution using the backend's canonical embeddings.
pub fn build_injective_resolution<C: AbelianCategory>(
    cat: &C,
    a: &Ob<C>,
    max_degree: i64,
) -> Result<InjectiveResolution<C>> {
    build_injective_resolution_with(cat, a, max_degree, |o| Ok(cat.embed_into_injective(o)))
}

/// Resolution with caller-chosen embeddings into injectives:
/// `d[n] = embed(Cok d[n-1]) ∘ cok d[n-1]`.
pub fn build_injective_resolution_with<C: AbelianCategory>(
    cat: &C,
    a: &Ob<C>,
    max_degree: i64,
    mut embed: impl FnMut(&Ob<C>) -> Result<Mor<C>>,
) -> Result<InjectiveResolution<C>> {
    if max_degree < 0 {
        return Err(CategoryError::InvalidParameters(format!("negative resolution degree {max_degree}")));
    }
    let checked = |m: Mor<C>, from: &Ob<C>| -> Result<Mor<C>> {
        if m.src() != from || !cat.is_injective(m.dst()) || !is_mono(cat, &m) {
            return Err(CategoryError::InvalidParameters(format!(
                "embedding of {from} is not a monic into an injective"
            )));
        }
        Ok(m)
    };
    let aug = checked(embed(a)?, a)?;
    let mut objects = vec![aug.dst().clone()];
    let mut differentials = Vec::new();
    let mut prev = aug.clone();
    for _ in 0..max_degree {
        let cok = cat.cokernel(&prev);
        let next = checked(embed(&cok.object)?, &cok.object)?;
        let d = cat.compose(&next, &cok.projection)?;
        objects.push(d.dst().clone());
        differentials.push(d.clone());
        prev = d;
    }
    let res = InjectiveResolution { base: a.clone(), aug, complex: CochainComplex::new(0, objects, differentials)? };
    res.verify(cat)?;
    Ok(res)
}

/// Adds the contractible complex `J --1--> J` in degrees `n, n+1`.
/// The result resolves the same object.
pub fn pad_with_contractible<C: AbelianCategory>(
    cat: &C,
    res: &InjectiveResolution<C>,
    j: &Ob<C>,
    n: i64,
) -> Result<InjectiveResolution<C>> {
    if n < 0 || n + 1 > res.max_degree() {
        return Err(CategoryError::InvalidParameters(format!(
            "padding degrees {n}, {} lie outside the resolution",
            n + 1
        )));
    }
    if !cat.is_injective(j) {
        return Err(CategoryError::NotInjective(j.to_string()));
    }
    let x = res.complex();
    let bps = (0..=res.max_degree())
        .map(|m| {
            let extra = if m == n || m == n + 1 { j.clone() } else { cat.zero_object() };
            Ok((cat.biproduct(&x.object(cat, m), &extra)?, extra))
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = CochainComplex::from_fn(
        0,
        res.max_degree(),
        |m| bps[m as usize].0.obj.clone(),
        |m| {
            let (from, to) = (&bps[m as usize].1, &bps[m as usize + 1].1);
            let inner = if m == n { cat.identity(j) } else { cat.zero_morphism(from, to) };
            oplus_mor(cat, &x.differential(cat, m), &inner)
        },
    )?;
    let aug = cat.compose(&bps[0].0.i1, res.aug())?;
    let padded = InjectiveResolution::from_parts(aug, complex)?;
    padded.verify(cat)?;
    Ok(padded)
}

fn check_pair<C: AbelianCategory>(
    f: &Mor<C>,
    res_a: &InjectiveResolution<C>,
    res_b: &InjectiveResolution<C>,
) -> Result<()> {
    if f.src() != res_a.base() || f.dst() != res_b.base() {
        return Err(CategoryError::ShapeMismatch("morphism does not connect the resolved objects".into()));
    }
    if res_a.max_degree() != res_b.max_degree() {
        return Err(CategoryError::ShapeMismatch(format!(
            "resolutions truncated at different degrees {} and {}",
            res_a.max_degree(),
            res_b.max_degree()
        )));
    }
    Ok(())
}

/// Cochain map `I -> J` over `f: A -> B`, extending with `inj_extend`.
pub fn induce_chain_map<C: AbelianCategory>(
    cat: &C,
    f: &Mor<C>,
    res_a: &InjectiveResolution<C>,
    res_b: &InjectiveResolution<C>,
) -> Result<CochainMap<C>> {
    induce_chain_map_with(cat, f, res_a, res_b, |m, alpha| cat.inj_extend(m, alpha))
}

/// As [`induce_chain_map`] with a caller-supplied extension along monics
/// (any `β` with `β ∘ m = α` is acceptable).
pub fn induce_chain_map_with<C: AbelianCategory>(
    cat: &C,
    f: &Mor<C>,
    res_a: &InjectiveResolution<C>,
    res_b: &InjectiveResolution<C>,
    mut extend: impl FnMut(&Mor<C>, &Mor<C>) -> Result<Mor<C>>,
) -> Result<CochainMap<C>> {
    check_pair(f, res_a, res_b)?;
    let (x, y) = (res_a.complex(), res_b.complex());
    let f0 = extend(res_a.aug(), &cat.compose(res_b.aug(), f)?)?;
    let mut components = vec![f0];
    for n in 0..res_a.max_degree() {
        let fac = epi_mono_factorize(cat, &x.differential(cat, n))?;
        let target = cat.compose(&y.differential(cat, n), &components[n as usize])?;
        let eta = cat.colift_along_epi(&fac.e, &target)?;
        components.push(extend(&fac.m, &eta)?);
    }
    Ok(CochainMap::new(cat, x.clone(), y.clone(), 0, components))
}

/// Homotopy `s` with `f - g = ∂s + sd` in degrees below the truncation
/// degree, for two cochain maps over the same morphism.
pub fn homotopy_between<C: AbelianCategory>(
    cat: &C,
    fmap: &CochainMap<C>,
    gmap: &CochainMap<C>,
    res_a: &InjectiveResolution<C>,
    res_b: &InjectiveResolution<C>,
) -> Result<Homotopy<C>> {
    let (x, y) = (res_a.complex(), res_b.complex());
    if fmap.src() != x || gmap.src() != x || fmap.dst() != y || gmap.dst() != y {
        return Err(CategoryError::ShapeMismatch("cochain maps are not between the given resolutions".into()));
    }
    // s[0]: I^0 -> J^{-1} = 0
    let mut components = vec![cat.zero_morphism(&x.object(cat, 0), &y.object(cat, -1))];
    for n in 0..res_a.max_degree() {
        let through = cat.compose(&y.differential(cat, n - 1), &components[n as usize])?;
        let residual = cat.sub(&cat.sub(&fmap.component(cat, n), &gmap.component(cat, n))?, &through)?;
        if !cat.is_zero_morphism(&cat.compose(&residual, &res_a.incoming(cat, n))?) {
            return Err(CategoryError::HomotopyResidual {
                degree: n,
                detail: "maps do not agree on the image of the previous differential; are they induced by the same morphism?"
                    .into(),
            });
        }
        let fac = epi_mono_factorize(cat, &x.differential(cat, n))?;
        let eta = cat
            .colift_along_epi(&fac.e, &residual)
            .map_err(|e| CategoryError::HomotopyResidual { degree: n, detail: e.to_string() })?;
        components.push(cat.inj_extend(&fac.m, &eta)?);
    }
    let s = Homotopy::new(0, components);
    if !is_homotopic_in(cat, fmap, gmap, &s, -1..=res_a.max_degree() - 1)? {
        return Err(CategoryError::Invariant("constructed homotopy fails the homotopy identity".into()));
    }
    Ok(s)
}

/// Checks `f^0 ∘ aug_A = aug_B ∘ f` and every commuting square.
pub fn lies_over<C: AbelianCategory>(
    cat: &C,
    map: &CochainMap<C>,
    f: &Mor<C>,
    res_a: &InjectiveResolution<C>,
    res_b: &InjectiveResolution<C>,
) -> Result<bool> {
    let aug_square = cat.compose(&map.component(cat, 0), res_a.aug())? == cat.compose(res_b.aug(), f)?;
    Ok(aug_square && crate::complexes::validate_cochain_map(cat, map).is_ok())
}
