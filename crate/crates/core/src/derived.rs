//! Additive functors and their right derived functors.
//!
//! `R^i F(A)` is the degree `i` cohomology of `F` applied to the deleted
//! resolution `F(I^0) -> F(I^1) -> ...`, so `R^0 F = F` for left exact `F`.
//! On a morphism `f` the comparison map `f^•` is induced first and `F` is
//! applied afterwards.

use std::collections::HashMap;
use std::sync::{Arc, PoisonError, RwLock};

use crate::arith::Residue;
use crate::backends::{ModMorphism, ModObject, VectMorphism, VectObject, VectSpaces, ZpkModules};
use crate::category::{AbelianCategory, Arrow, Mor, Ob};
use crate::complexes::{cohomology_object, induced_on_cohomology, CochainComplex, CochainMap, Cohomology};
use crate::error::{CategoryError, Result};
use crate::generic::{is_exact_at, is_mono, oplus_mor};
use crate::matrix::Matrix;
use crate::resolutions::{build_injective_resolution, induce_chain_map, InjectiveResolution};

/// A functor between computable abelian categories that should preserve
/// addition of morphisms. The checks below test that it does.
pub trait AdditiveFunctor: Send + Sync {
    type Source: AbelianCategory;
    type Target: AbelianCategory;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn apply_object(&self, a: &Ob<Self::Source>) -> Result<Ob<Self::Target>>;
    fn apply_morphism(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>>;
}

/// Applies `F` degreewise to a complex.
pub fn apply_complex<F: AdditiveFunctor>(
    functor: &F,
    x: &CochainComplex<F::Source>,
) -> Result<CochainComplex<F::Target>> {
    let objects = x.objects().iter().map(|o| functor.apply_object(o)).collect::<Result<Vec<_>>>()?;
    let differentials = x.differentials().iter().map(|d| functor.apply_morphism(d)).collect::<Result<Vec<_>>>()?;
    CochainComplex::new(x.lo(), objects, differentials)
}

/// Applies `F` degreewise to a cochain map.
pub fn apply_map<F: AdditiveFunctor>(functor: &F, f: &CochainMap<F::Source>) -> Result<CochainMap<F::Target>> {
    let (x, y) = (apply_complex(functor, f.src())?, apply_complex(functor, f.dst())?);
    let cat = functor.source();
    let (lo, hi) = (x.lo().min(y.lo()), x.hi().max(y.hi()));
    let components = (lo..=hi).map(|n| functor.apply_morphism(&f.component(cat, n))).collect::<Result<Vec<_>>>()?;
    Ok(CochainMap::new(functor.target(), x, y, lo, components))
}

#[derive(Clone, Debug)]
pub struct IdentityFunctor<C>(pub C);

impl<C: AbelianCategory> AdditiveFunctor for IdentityFunctor<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.0
    }

    fn target(&self) -> &C {
        &self.0
    }

    fn apply_object(&self, a: &Ob<C>) -> Result<Ob<C>> {
        Ok(a.clone())
    }

    fn apply_morphism(&self, f: &Mor<C>) -> Result<Mor<C>> {
        Ok(f.clone())
    }
}

/// `A -> A (+) A`, `f -> f (+) f`.
#[derive(Clone, Debug)]
pub struct DoublingFunctor<C>(pub C);

impl<C: AbelianCategory> AdditiveFunctor for DoublingFunctor<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.0
    }

    fn target(&self) -> &C {
        &self.0
    }

    fn apply_object(&self, a: &Ob<C>) -> Result<Ob<C>> {
        Ok(self.0.biproduct(a, a)?.obj)
    }

    fn apply_morphism(&self, f: &Mor<C>) -> Result<Mor<C>> {
        oplus_mor(&self.0, f, f)
    }
}

/// Categories whose hom-groups are again objects of the category.
pub trait InternalHom: AbelianCategory {
    fn hom_object(&self, m: &Self::Object, n: &Self::Object) -> Result<Self::Object>;
    /// `Hom(M, g): Hom(M, N) -> Hom(M, N')`, post-composition with `g`.
    fn hom_morphism(&self, m: &Self::Object, g: &Self::Morphism) -> Result<Self::Morphism>;
    /// Coordinates of `h: M -> N` in `hom_object(M, N)`.
    fn hom_element(&self, h: &Self::Morphism) -> Result<Vec<u64>>;
}

/// The order in which the cyclic summands of `Hom(M, N)` are listed: pairs
/// `(i, j)` of a summand of `N` and a summand of `M`, sorted stably by
/// `min(a_j, b_i)`.
fn hom_layout(m: &ModObject, n: &ModObject) -> Vec<(u32, usize, usize)> {
    let mut layout = Vec::with_capacity(m.rank() * n.rank());
    for (i, &b) in n.exponents().iter().enumerate() {
        for (j, &a) in m.exponents().iter().enumerate() {
            layout.push((a.min(b), i, j));
        }
    }
    layout.sort_by_key(|&(e, _, _)| e);
    layout
}

impl<T: Residue> ZpkModules<T> {
    /// The generator of the `(i, j)` summand of `Hom(M, N)`: `p^{max(0, b_i - a_j)}`.
    fn hom_generator_exponent(m: &ModObject, n: &ModObject, i: usize, j: usize) -> u32 {
        n.exponents()[i].saturating_sub(m.exponents()[j])
    }

    /// The morphism `M -> N` with the given coordinates in `hom_object(M, N)`.
    pub fn hom_from_element(&self, m: &ModObject, n: &ModObject, coords: &[u64]) -> Result<ModMorphism<T>> {
        let layout = hom_layout(m, n);
        if coords.len() != layout.len() {
            return Err(CategoryError::ShapeMismatch(format!(
                "Hom({m}, {n}) has {} coordinates, got {}",
                layout.len(),
                coords.len()
            )));
        }
        let ring = self.ring();
        let mut x = Matrix::zeros(n.rank(), m.rank());
        for (&(_, i, j), &t) in layout.iter().zip(coords) {
            let g = ring.p_pow(Self::hom_generator_exponent(m, n, i, j));
            let t = T::from_wide(u128::from(t) % ring.modulus().to_wide());
            x[(i, j)] = ring.mul(t, g);
        }
        self.morphism(m, n, x)
    }
}

impl<T: Residue> InternalHom for ZpkModules<T> {
    fn hom_object(&self, m: &ModObject, n: &ModObject) -> Result<ModObject> {
        self.object(hom_layout(m, n).into_iter().map(|(e, _, _)| e))
    }

    fn hom_morphism(&self, m: &ModObject, g: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        let (n, n2) = (g.src(), g.dst());
        let (src, dst) = (self.hom_object(m, n)?, self.hom_object(m, n2)?);
        let (cols, rows) = (hom_layout(m, n), hom_layout(m, n2));
        let ring = self.ring();
        let x = Matrix::from_fn(rows.len(), cols.len(), |r, c| {
            let ((_, i2, j2), (_, i, j)) = (rows[r], cols[c]);
            if j != j2 {
                return T::zero();
            }
            let s = Self::hom_generator_exponent(m, n, i, j);
            let t = Self::hom_generator_exponent(m, n2, i2, j);
            ring.div_p_pow(ring.mul(g.matrix()[(i2, i)], ring.p_pow(s)), t)
        });
        self.morphism(&src, &dst, x)
    }

    fn hom_element(&self, h: &ModMorphism<T>) -> Result<Vec<u64>> {
        let (m, n) = (h.src(), h.dst());
        let ring = self.ring();
        hom_layout(m, n)
            .into_iter()
            .map(|(_, i, j)| {
                let v = ring.div_p_pow(h.matrix()[(i, j)], Self::hom_generator_exponent(m, n, i, j));
                v.to_u64().ok_or_else(|| CategoryError::Invariant("residue exceeds u64".into()))
            })
            .collect()
    }
}

/// `Hom(F_p^m, F_p^n) = F_p^{nm}`, coordinates in row-major order.
impl<T: Residue> InternalHom for VectSpaces<T> {
    fn hom_object(&self, m: &VectObject, n: &VectObject) -> Result<VectObject> {
        Ok(self.space(m.dim() * n.dim()))
    }

    fn hom_morphism(&self, m: &VectObject, g: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        let d = m.dim();
        let (src, dst) = (self.hom_object(m, g.src())?, self.hom_object(m, g.dst())?);
        let x =
            Matrix::from_fn(
                dst.dim(),
                src.dim(),
                |r, c| {
                    if r % d == c % d {
                        g.matrix()[(r / d, c / d)]
                    } else {
                        T::zero()
                    }
                },
            );
        self.morphism(&src, &dst, x)
    }

    fn hom_element(&self, h: &VectMorphism<T>) -> Result<Vec<u64>> {
        let m = h.matrix();
        (0..m.rows())
            .flat_map(|i| (0..m.cols()).map(move |j| m[(i, j)]))
            .map(|v| v.to_u64().ok_or_else(|| CategoryError::Invariant("residue exceeds u64".into())))
            .collect()
    }
}

/// `Hom(M, -)` as an endofunctor.
#[derive(Clone, Debug)]
pub struct HomFunctor<C: AbelianCategory> {
    cat: C,
    m: Ob<C>,
}

impl<C: InternalHom> HomFunctor<C> {
    pub fn new(cat: C, m: Ob<C>) -> Self {
        Self { cat, m }
    }

    pub fn source_object(&self) -> &Ob<C> {
        &self.m
    }
}

impl<C: InternalHom> AdditiveFunctor for HomFunctor<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.cat
    }

    fn target(&self) -> &C {
        &self.cat
    }

    fn apply_object(&self, a: &Ob<C>) -> Result<Ob<C>> {
        self.cat.hom_object(&self.m, a)
    }

    fn apply_morphism(&self, f: &Mor<C>) -> Result<Mor<C>> {
        self.cat.hom_morphism(&self.m, f)
    }
}

fn require_degree<C: AbelianCategory>(res: &InjectiveResolution<C>, i: i64) -> Result<()> {
    if i < 0 {
        return Err(CategoryError::InvalidParameters(format!("derived functor degree {i} is negative")));
    }
    if res.max_degree() < i + 1 {
        return Err(CategoryError::InvalidParameters(format!(
            "degree {i} needs a resolution to degree {}, got {}",
            i + 1,
            res.max_degree()
        )));
    }
    Ok(())
}

/// `H^i(F(I^•))` with all of its structure maps.
pub fn right_derived_cohomology<F: AdditiveFunctor>(
    functor: &F,
    res: &InjectiveResolution<F::Source>,
    i: i64,
) -> Result<Cohomology<F::Target>> {
    require_degree(res, i)?;
    cohomology_object(functor.target(), &apply_complex(functor, res.complex())?, i)
}

/// `R^i F(A)` against the canonical resolution.
pub fn right_derived_object<F: AdditiveFunctor>(functor: &F, a: &Ob<F::Source>, i: i64) -> Result<Ob<F::Target>> {
    if i < 0 {
        return Err(CategoryError::InvalidParameters(format!("derived functor degree {i} is negative")));
    }
    let res = build_injective_resolution(functor.source(), a, i + 1)?;
    Ok(right_derived_cohomology(functor, &res, i)?.object)
}

/// `R^i F(f) = H^i(F(f^•))` for the comparison map `f^•: res_a -> res_b`.
pub fn right_derived_morphism<F: AdditiveFunctor>(
    functor: &F,
    f: &Mor<F::Source>,
    i: i64,
    res_a: &InjectiveResolution<F::Source>,
    res_b: &InjectiveResolution<F::Source>,
) -> Result<Mor<F::Target>> {
    let lifted = induce_chain_map(functor.source(), f, res_a, res_b)?;
    derived_of_chain_map(functor, &lifted, i, res_a, res_b)
}

/// `H^i(F(φ))` for an arbitrary cochain map `φ` between the resolutions.
pub fn derived_of_chain_map<F: AdditiveFunctor>(
    functor: &F,
    lifted: &CochainMap<F::Source>,
    i: i64,
    res_a: &InjectiveResolution<F::Source>,
    res_b: &InjectiveResolution<F::Source>,
) -> Result<Mor<F::Target>> {
    let hx = right_derived_cohomology(functor, res_a, i)?;
    let hy = right_derived_cohomology(functor, res_b, i)?;
    induced_on_cohomology(functor.target(), &apply_map(functor, lifted)?, i, &hx, &hy)
}

/// The comparison isomorphism `R^i F(A)` (via `res1`) `-> R^i F(A)` (via
/// `res2`). The inverse direction is computed too, and both composites
/// must be identities.
pub fn resolution_independence_iso<F: AdditiveFunctor>(
    functor: &F,
    i: i64,
    res1: &InjectiveResolution<F::Source>,
    res2: &InjectiveResolution<F::Source>,
) -> Result<Mor<F::Target>> {
    if res1.base() != res2.base() {
        return Err(CategoryError::ShapeMismatch("resolutions resolve different objects".into()));
    }
    let one = functor.source().identity(res1.base());
    let there = right_derived_morphism(functor, &one, i, res1, res2)?;
    let back = right_derived_morphism(functor, &one, i, res2, res1)?;
    let cat = functor.target();
    let round1 = cat.compose(&back, &there)?;
    let round2 = cat.compose(&there, &back)?;
    if round1 != cat.identity(there.src()) || round2 != cat.identity(there.dst()) {
        return Err(CategoryError::Invariant(format!("comparison maps in degree {i} are not mutually inverse")));
    }
    Ok(there)
}

/// `R^i F` with one fixed resolution per object, shared between threads.
type ResolutionCache<C> = RwLock<HashMap<Ob<C>, Arc<InjectiveResolution<C>>>>;

#[derive(Debug)]
pub struct DerivedFunctor<F: AdditiveFunctor> {
    functor: F,
    cache: ResolutionCache<F::Source>,
}

impl<F: AdditiveFunctor> DerivedFunctor<F> {
    pub fn new(functor: F) -> Self {
        Self { functor, cache: RwLock::new(HashMap::new()) }
    }

    pub fn functor(&self) -> &F {
        &self.functor
    }

    pub fn cached_objects(&self) -> usize {
        self.cache.read().unwrap_or_else(PoisonError::into_inner).len()
    }

    /// The chosen resolution of `a`, truncated at exactly `degree`.
    pub fn resolution(&self, a: &Ob<F::Source>, degree: i64) -> Result<InjectiveResolution<F::Source>> {
        let cat = self.functor.source();
        let cached = self.cache.read().unwrap_or_else(PoisonError::into_inner).get(a).cloned();
        let res = match cached {
            Some(res) if res.max_degree() >= degree => res,
            _ => {
                let built = Arc::new(build_injective_resolution(cat, a, degree)?);
                let mut cache = self.cache.write().unwrap_or_else(PoisonError::into_inner);
                let slot = cache.entry(a.clone()).or_insert_with(|| built.clone());
                if slot.max_degree() < degree {
                    *slot = built;
                }
                slot.clone()
            }
        };
        res.truncate(cat, degree)
    }

    pub fn cohomology(&self, a: &Ob<F::Source>, i: i64) -> Result<Cohomology<F::Target>> {
        require_nonnegative(i)?;
        right_derived_cohomology(&self.functor, &self.resolution(a, i + 1)?, i)
    }

    pub fn object(&self, a: &Ob<F::Source>, i: i64) -> Result<Ob<F::Target>> {
        Ok(self.cohomology(a, i)?.object)
    }

    pub fn morphism(&self, f: &Mor<F::Source>, i: i64) -> Result<Mor<F::Target>> {
        require_nonnegative(i)?;
        let res_a = self.resolution(f.src(), i + 1)?;
        let res_b = self.resolution(f.dst(), i + 1)?;
        right_derived_morphism(&self.functor, f, i, &res_a, &res_b)
    }
}

fn require_nonnegative(i: i64) -> Result<()> {
    if i < 0 {
        return Err(CategoryError::InvalidParameters(format!("derived functor degree {i} is negative")));
    }
    Ok(())
}

/// `F(1) = 1` and `F(g ∘ f) = F(g) ∘ F(f)`.
pub fn check_functorial<F: AdditiveFunctor>(functor: &F, f: &Mor<F::Source>, g: &Mor<F::Source>) -> Result<bool> {
    let (s, t) = (functor.source(), functor.target());
    let fa = functor.apply_object(f.src())?;
    let unit = functor.apply_morphism(&s.identity(f.src()))? == t.identity(&fa);
    let gf = functor.apply_morphism(&s.compose(g, f)?)?;
    Ok(unit && gf == t.compose(&functor.apply_morphism(g)?, &functor.apply_morphism(f)?)?)
}

/// `F(f + g) = F(f) + F(g)`.
pub fn check_additive<F: AdditiveFunctor>(functor: &F, f: &Mor<F::Source>, g: &Mor<F::Source>) -> Result<bool> {
    let lhs = functor.apply_morphism(&functor.source().add(f, g)?)?;
    let rhs = functor.target().add(&functor.apply_morphism(f)?, &functor.apply_morphism(g)?)?;
    Ok(lhs == rhs)
}

/// `F(A (+) B)` with `F` of the structure maps is again a biproduct.
pub fn preserves_biproduct<F: AdditiveFunctor>(functor: &F, a: &Ob<F::Source>, b: &Ob<F::Source>) -> Result<bool> {
    let (s, t) = (functor.source(), functor.target());
    let bp = s.biproduct(a, b)?;
    let [p1, p2, i1, i2] = [&bp.p1, &bp.p2, &bp.i1, &bp.i2].map(|m| functor.apply_morphism(m));
    let (p1, p2, i1, i2) = (p1?, p2?, i1?, i2?);
    let one_a = t.identity(p1.dst());
    let one_b = t.identity(p2.dst());
    let one = t.identity(p1.src());
    let sum = t.add(&t.compose(&i1, &p1)?, &t.compose(&i2, &p2)?)?;
    Ok(t.compose(&p1, &i1)? == one_a
        && t.compose(&p2, &i2)? == one_b
        && t.is_zero_morphism(&t.compose(&p1, &i2)?)
        && t.is_zero_morphism(&t.compose(&p2, &i1)?)
        && sum == one)
}

/// `0 -> F(Ker f) -> F(A) -> F(B)` is exact.
pub fn preserves_kernel<F: AdditiveFunctor>(functor: &F, f: &Mor<F::Source>) -> Result<bool> {
    let incl = functor.apply_morphism(&functor.source().kernel(f).inclusion)?;
    let ff = functor.apply_morphism(f)?;
    let t = functor.target();
    Ok(is_mono(t, &incl) && is_exact_at(t, &incl, &ff)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolutions::pad_with_contractible;

    type Z4 = ZpkModules<u64>;

    fn z4() -> Z4 {
        ZpkModules::new(2, 2).unwrap()
    }

    #[test]
    fn hom_objects() {
        let c = z4();
        let (z2, z4o) = (c.cyclic(1).unwrap(), c.cyclic(2).unwrap());
        assert_eq!(c.hom_object(&z2, &z2).unwrap(), z2);
        assert_eq!(c.hom_object(&z4o, &z4o).unwrap(), z4o);
        assert_eq!(c.hom_object(&z2, &z4o).unwrap(), z2);
        let m = c.object([1, 2]).unwrap();
        assert_eq!(c.hom_object(&m, &m).unwrap(), c.object([1, 1, 1, 2]).unwrap());
        assert!(c.is_zero_object(&c.hom_object(&c.zero_object(), &m).unwrap()));
    }

    #[test]
    fn hom_of_identity_is_identity() {
        let c = z4();
        let m = c.object([1, 2]).unwrap();
        let n = c.object([1, 1, 2]).unwrap();
        let h = c.hom_morphism(&m, &c.identity(&n)).unwrap();
        assert_eq!(h, c.identity(&c.hom_object(&m, &n).unwrap()));
    }

    #[test]
    fn hom_of_doubling_from_z2_vanishes() {
        let c = z4();
        let (z2, z4o) = (c.cyclic(1).unwrap(), c.cyclic(2).unwrap());
        assert!(c.is_zero_morphism(&c.hom_morphism(&z2, &c.scalar(&z4o, 2)).unwrap()));
    }

    #[test]
    fn hom_elements_round_trip() {
        let c = z4();
        let (m, n) = (c.object([1, 2]).unwrap(), c.object([2]).unwrap());
        let h = c.morphism_from_rows(&m, &n, &[vec![2, 3]]).unwrap();
        let coords = c.hom_element(&h).unwrap();
        assert_eq!(c.hom_from_element(&m, &n, &coords).unwrap(), h);
    }

    #[test]
    fn vect_hom_is_kronecker() {
        let c = VectSpaces::<u64>::new(3).unwrap();
        let (v, w) = (c.space(2), c.space(1));
        let g = c.morphism_from_rows(&w, &c.space(2), &[vec![1], vec![2]]).unwrap();
        let h = c.hom_morphism(&v, &g).unwrap();
        assert_eq!(h.matrix().to_nested(), vec![vec![1, 0], vec![0, 1], vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn ext_of_z2_over_z4() {
        let c = z4();
        let z2 = c.cyclic(1).unwrap();
        let f = HomFunctor::new(c, z2.clone());
        for i in 0..4 {
            assert_eq!(right_derived_object(&f, &z2, i).unwrap(), z2, "degree {i}");
        }
        assert!(right_derived_object(&f, &z2, -1).is_err());
    }

    #[test]
    fn ext_into_injective_vanishes() {
        let c = z4();
        let f = HomFunctor::new(c, c.cyclic(1).unwrap());
        assert!(c.is_zero_object(&right_derived_object(&f, &c.free(2), 1).unwrap()));
        assert_eq!(right_derived_object(&f, &c.free(2), 0).unwrap(), c.object([1, 1]).unwrap());
    }

    #[test]
    fn derived_identity_is_identity() {
        let c = z4();
        let a = c.object([1, 2]).unwrap();
        let d = DerivedFunctor::new(HomFunctor::new(c, c.cyclic(1).unwrap()));
        for i in 0..3 {
            let r = d.morphism(&c.identity(&a), i).unwrap();
            assert_eq!(r, c.identity(r.src()));
        }
        assert_eq!(d.cached_objects(), 1);
    }

    #[test]
    fn cache_serves_shorter_requests() {
        let c = z4();
        let z2 = c.cyclic(1).unwrap();
        let d = DerivedFunctor::new(IdentityFunctor(c));
        let long = d.resolution(&z2, 4).unwrap();
        let short = d.resolution(&z2, 2).unwrap();
        assert_eq!(short, long.truncate(&c, 2).unwrap());
    }

    #[test]
    fn padded_resolution_gives_the_same_ext() {
        let c = z4();
        let z2 = c.cyclic(1).unwrap();
        let f = HomFunctor::new(c, z2.clone());
        let res = build_injective_resolution(&c, &z2, 4).unwrap();
        let padded = pad_with_contractible(&c, &res, &c.free(1), 1).unwrap();
        for i in 0..3 {
            let iso = resolution_independence_iso(&f, i, &res, &padded).unwrap();
            assert_eq!(iso.src(), &z2);
            assert_eq!(iso.dst(), &z2);
        }
    }

    #[test]
    fn functor_contracts() {
        let c = z4();
        let (a, b) = (c.object([1, 2]).unwrap(), c.cyclic(2).unwrap());
        let f = c.morphism_from_rows(&a, &b, &[vec![2, 1]]).unwrap();
        let g = c.scalar(&b, 3);
        let hom = HomFunctor::new(c, c.object([1, 2]).unwrap());
        let dbl = DoublingFunctor(c);
        assert!(check_functorial(&hom, &f, &g).unwrap());
        assert!(check_functorial(&dbl, &f, &g).unwrap());
        assert!(check_additive(&hom, &f, &f).unwrap());
        assert!(preserves_biproduct(&hom, &a, &b).unwrap());
        assert!(preserves_biproduct(&dbl, &a, &b).unwrap());
        assert!(preserves_kernel(&hom, &f).unwrap());
        assert!(preserves_kernel(&hom, &c.scalar(&b, 2)).unwrap());
    }
}
