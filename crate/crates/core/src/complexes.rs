//! Cochain complexes over an abelian category, their maps and homotopies,
//! and cohomology.
//!
//! Differentials raise degree: `d[n]: X[n] -> X[n+1]`, and a cochain map
//! satisfies `∂[n] ∘ f[n] = f[n+1] ∘ d[n]`. A complex stores a finite
//! window `[lo, hi]` and is zero outside it; degreewise checks run over
//! `[lo - 1, hi + 1]`, including the squares against the zero padding.

use std::ops::RangeInclusive;

use crate::category::{AbelianCategory, Arrow, Biproduct, Mor, Ob};
use crate::error::{CategoryError, Result};
use crate::generic::{image, oplus_mor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex<C: AbelianCategory> {
    lo: i64,
    objects: Vec<Ob<C>>,
    differentials: Vec<Mor<C>>,
}

impl<C: AbelianCategory> CochainComplex<C> {
    /// `objects[i]` sits in degree `lo + i` and `differentials[i]` leaves it.
    /// The differential out of the top object is implicit (it maps to 0), so
    /// `differentials.len() + 1 == objects.len()` unless both are empty.
    /// Endpoints and `d ∘ d = 0` are checked by [`validate_complex`].
    pub fn new(lo: i64, objects: Vec<Ob<C>>, differentials: Vec<Mor<C>>) -> Result<Self> {
        if differentials.len() + 1 != objects.len().max(1) {
            return Err(CategoryError::ShapeMismatch(format!(
                "{} objects need {} differentials, got {}",
                objects.len(),
                objects.len().saturating_sub(1),
                differentials.len()
            )));
        }
        Ok(Self { lo, objects, differentials })
    }

    pub fn concentrated(degree: i64, object: Ob<C>) -> Self {
        Self { lo: degree, objects: vec![object], differentials: Vec::new() }
    }

    /// Builds the window `[lo, hi]` from degreewise objects and differentials.
    pub fn from_fn(
        lo: i64,
        hi: i64,
        mut object: impl FnMut(i64) -> Ob<C>,
        mut differential: impl FnMut(i64) -> Result<Mor<C>>,
    ) -> Result<Self> {
        let objects = (lo..=hi).map(&mut object).collect();
        let differentials = (lo..hi).map(&mut differential).collect::<Result<_>>()?;
        Self::new(lo, objects, differentials)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[Ob<C>] {
        &self.objects
    }

    pub fn differentials(&self) -> &[Mor<C>] {
        &self.differentials
    }

    fn slot(&self, n: i64) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    pub fn object(&self, cat: &C, n: i64) -> Ob<C> {
        match self.slot(n) {
            Some(i) => self.objects[i].clone(),
            None => cat.zero_object(),
        }
    }

    /// `d[n]: X[n] -> X[n+1]`.
    pub fn differential(&self, cat: &C, n: i64) -> Mor<C> {
        match self.slot(n) {
            Some(i) if i < self.differentials.len() => self.differentials[i].clone(),
            _ => cat.zero_morphism(&self.object(cat, n), &self.object(cat, n + 1)),
        }
    }

    /// Degrees `[lo - 1, hi + 1]`.
    pub fn window(&self) -> RangeInclusive<i64> {
        self.lo - 1..=self.hi() + 1
    }

    /// The complex restricted to degrees `[lo, hi]` of the original.
    pub fn truncate(&self, cat: &C, lo: i64, hi: i64) -> Self {
        let objects = (lo..=hi).map(|n| self.object(cat, n)).collect();
        let differentials = (lo..hi).map(|n| self.differential(cat, n)).collect();
        Self { lo, objects, differentials }
    }

    pub fn zero(lo: i64) -> Self {
        Self { lo, objects: Vec::new(), differentials: Vec::new() }
    }
}

fn union_support<C: AbelianCategory>(a: &CochainComplex<C>, b: &CochainComplex<C>) -> (i64, i64) {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => (a.lo, a.lo - 1),
        (true, false) => (b.lo, b.hi()),
        (false, true) => (a.lo, a.hi()),
        (false, false) => (a.lo.min(b.lo), a.hi().max(b.hi())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind<C: AbelianCategory> {
    /// A morphism whose endpoints do not match the family it belongs to.
    Endpoints { expected: (Ob<C>, Ob<C>), actual: (Ob<C>, Ob<C>) },
    /// `d[n+1] ∘ d[n]` is not zero.
    NonzeroComposite { composite: Mor<C> },
    /// `∂[n] ∘ f[n] ≠ f[n+1] ∘ d[n]`.
    Square { lhs: Mor<C>, rhs: Mor<C> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<C: AbelianCategory> {
    pub degree: i64,
    pub kind: ViolationKind<C>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<C: AbelianCategory> {
    pub violations: Vec<Violation<C>>,
}

impl<C: AbelianCategory> Report<C> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn endpoints_ok<C: AbelianCategory>(f: &Mor<C>, src: &Ob<C>, dst: &Ob<C>) -> bool {
    f.src() == src && f.dst() == dst
}

/// Reports every degree where a differential has the wrong endpoints or
/// `d ∘ d ≠ 0`.
pub fn validate_complex<C: AbelianCategory>(cat: &C, x: &CochainComplex<C>) -> Report<C> {
    let mut violations = Vec::new();
    let shapes_ok = |n: i64, violations: &mut Vec<Violation<C>>| {
        let d = x.differential(cat, n);
        let (s, t) = (x.object(cat, n), x.object(cat, n + 1));
        if endpoints_ok::<C>(&d, &s, &t) {
            true
        } else {
            violations.push(Violation {
                degree: n,
                kind: ViolationKind::Endpoints { expected: (s, t), actual: (d.src().clone(), d.dst().clone()) },
            });
            false
        }
    };
    let ok: Vec<(i64, bool)> = x.window().map(|n| (n, shapes_ok(n, &mut violations))).collect();
    for w in ok.windows(2) {
        let ((n, a), (_, b)) = (w[0], w[1]);
        if a && b {
            let composite =
                cat.compose(&x.differential(cat, n + 1), &x.differential(cat, n)).expect("endpoints checked");
            if !cat.is_zero_morphism(&composite) {
                violations.push(Violation { degree: n, kind: ViolationKind::NonzeroComposite { composite } });
            }
        }
    }
    Report { violations }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainMap<C: AbelianCategory> {
    src: CochainComplex<C>,
    dst: CochainComplex<C>,
    lo: i64,
    components: Vec<Mor<C>>,
}

impl<C: AbelianCategory> CochainMap<C> {
    /// `components[i]` is the component in degree `lo + i`; all others are
    /// zero. Storage is normalized to the joint support of source and
    /// target, so equality of maps is equality of all components.
    pub fn new(cat: &C, src: CochainComplex<C>, dst: CochainComplex<C>, lo: i64, components: Vec<Mor<C>>) -> Self {
        let raw = Self { src, dst, lo, components };
        let (a, b) = union_support(&raw.src, &raw.dst);
        let components = (a..=b).map(|n| raw.component(cat, n)).collect();
        Self { lo: a, components, ..raw }
    }

    /// Components over the joint support of source and target.
    pub fn from_fn(
        src: &CochainComplex<C>,
        dst: &CochainComplex<C>,
        mut component: impl FnMut(i64) -> Result<Mor<C>>,
    ) -> Result<Self> {
        let (lo, hi) = union_support(src, dst);
        let components = (lo..=hi).map(&mut component).collect::<Result<_>>()?;
        Ok(Self { src: src.clone(), dst: dst.clone(), lo, components })
    }

    pub fn src(&self) -> &CochainComplex<C> {
        &self.src
    }

    pub fn dst(&self) -> &CochainComplex<C> {
        &self.dst
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn components(&self) -> &[Mor<C>] {
        &self.components
    }

    pub fn component(&self, cat: &C, n: i64) -> Mor<C> {
        let i = n - self.lo;
        if i >= 0 && (i as usize) < self.components.len() {
            self.components[i as usize].clone()
        } else {
            cat.zero_morphism(&self.src.object(cat, n), &self.dst.object(cat, n))
        }
    }

    /// Degrees covering both complexes and one step of padding on each side.
    pub fn window(&self) -> RangeInclusive<i64> {
        let (lo, hi) = union_support(&self.src, &self.dst);
        let comp_hi = self.lo + self.components.len() as i64 - 1;
        lo.min(self.lo) - 1..=hi.max(comp_hi) + 1
    }

    pub fn identity(cat: &C, x: &CochainComplex<C>) -> Self {
        let components = x.objects().iter().map(|o| cat.identity(o)).collect();
        Self { src: x.clone(), dst: x.clone(), lo: x.lo(), components }
    }

    pub fn zero(cat: &C, x: &CochainComplex<C>, y: &CochainComplex<C>) -> Self {
        Self::new(cat, x.clone(), y.clone(), x.lo(), Vec::new())
    }

    /// `g ∘ f`.
    pub fn compose(cat: &C, g: &Self, f: &Self) -> Result<Self> {
        if f.dst != g.src {
            return Err(CategoryError::ShapeMismatch("cochain maps are not composable".into()));
        }
        Self::from_fn(&f.src, &g.dst, |n| cat.compose(&g.component(cat, n), &f.component(cat, n)))
    }

    pub fn add(cat: &C, f: &Self, g: &Self) -> Result<Self> {
        ensure_parallel_maps(f, g)?;
        Self::from_fn(&f.src, &f.dst, |n| cat.add(&f.component(cat, n), &g.component(cat, n)))
    }

    pub fn neg(cat: &C, f: &Self) -> Result<Self> {
        Self::from_fn(&f.src, &f.dst, |n| Ok(cat.neg(&f.component(cat, n))))
    }

    pub fn sub(cat: &C, f: &Self, g: &Self) -> Result<Self> {
        Self::add(cat, f, &Self::neg(cat, g)?)
    }
}

fn ensure_parallel_maps<C: AbelianCategory>(f: &CochainMap<C>, g: &CochainMap<C>) -> Result<()> {
    if f.src != g.src || f.dst != g.dst {
        return Err(CategoryError::ShapeMismatch("cochain maps are not parallel".into()));
    }
    Ok(())
}

/// Checks component endpoints and every square `∂[n] ∘ f[n] = f[n+1] ∘ d[n]`.
pub fn validate_cochain_map<C: AbelianCategory>(cat: &C, f: &CochainMap<C>) -> Report<C> {
    let mut violations = Vec::new();
    let window = f.window();
    let mut ok = Vec::new();
    for n in window.clone() {
        let c = f.component(cat, n);
        let (s, t) = (f.src.object(cat, n), f.dst.object(cat, n));
        let good = endpoints_ok::<C>(&c, &s, &t);
        if !good {
            violations.push(Violation {
                degree: n,
                kind: ViolationKind::Endpoints { expected: (s, t), actual: (c.src().clone(), c.dst().clone()) },
            });
        }
        ok.push((n, good));
    }
    for w in ok.windows(2) {
        let ((n, a), (_, b)) = (w[0], w[1]);
        if !(a && b) {
            continue;
        }
        let (d, dd) = (f.src.differential(cat, n), f.dst.differential(cat, n));
        if !endpoints_ok::<C>(&d, &f.src.object(cat, n), &f.src.object(cat, n + 1))
            || !endpoints_ok::<C>(&dd, &f.dst.object(cat, n), &f.dst.object(cat, n + 1))
        {
            continue;
        }
        let lhs = cat.compose(&dd, &f.component(cat, n)).expect("endpoints checked");
        let rhs = cat.compose(&f.component(cat, n + 1), &d).expect("endpoints checked");
        if lhs != rhs {
            violations.push(Violation { degree: n, kind: ViolationKind::Square { lhs, rhs } });
        }
    }
    Report { violations }
}

/// Kernel of a cochain map: degreewise kernels with the induced
/// differentials, obtained by lifting `d[n] ∘ ker f[n]` through `ker f[n+1]`.
pub fn complex_kernel<C: AbelianCategory>(cat: &C, f: &CochainMap<C>) -> Result<(CochainComplex<C>, CochainMap<C>)> {
    let x = f.src();
    let kernels: Vec<_> = (x.lo()..=x.hi()).map(|n| cat.kernel(&f.component(cat, n))).collect();
    let at = |n: i64| &kernels[(n - x.lo()) as usize];
    let k = CochainComplex::from_fn(
        x.lo(),
        x.hi(),
        |n| at(n).object.clone(),
        |n| cat.lift_along_mono(&at(n + 1).inclusion, &cat.compose(&x.differential(cat, n), &at(n).inclusion)?),
    )?;
    let incl =
        CochainMap::new(cat, k.clone(), x.clone(), x.lo(), kernels.iter().map(|kk| kk.inclusion.clone()).collect());
    Ok((k, incl))
}

/// Cokernel of a cochain map, dual to [`complex_kernel`].
pub fn complex_cokernel<C: AbelianCategory>(cat: &C, f: &CochainMap<C>) -> Result<(CochainComplex<C>, CochainMap<C>)> {
    let y = f.dst();
    let cokernels: Vec<_> = (y.lo()..=y.hi()).map(|n| cat.cokernel(&f.component(cat, n))).collect();
    let at = |n: i64| &cokernels[(n - y.lo()) as usize];
    let q = CochainComplex::from_fn(
        y.lo(),
        y.hi(),
        |n| at(n).object.clone(),
        |n| cat.colift_along_epi(&at(n).projection, &cat.compose(&at(n + 1).projection, &y.differential(cat, n))?),
    )?;
    let proj =
        CochainMap::new(cat, y.clone(), q.clone(), y.lo(), cokernels.iter().map(|c| c.projection.clone()).collect());
    Ok((q, proj))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBiproduct<C: AbelianCategory> {
    pub obj: CochainComplex<C>,
    pub p1: CochainMap<C>,
    pub p2: CochainMap<C>,
    pub i1: CochainMap<C>,
    pub i2: CochainMap<C>,
}

type DegreeBiproduct<C> = Biproduct<Ob<C>, Mor<C>>;

/// Degreewise biproduct with block-diagonal differentials.
pub fn complex_biproduct<C: AbelianCategory>(
    cat: &C,
    x: &CochainComplex<C>,
    y: &CochainComplex<C>,
) -> Result<ComplexBiproduct<C>> {
    let (lo, hi) = union_support(x, y);
    let bps = (lo..=hi).map(|n| cat.biproduct(&x.object(cat, n), &y.object(cat, n))).collect::<Result<Vec<_>>>()?;
    let at = |n: i64| &bps[(n - lo) as usize];
    let obj = CochainComplex::from_fn(
        lo,
        hi,
        |n| at(n).obj.clone(),
        |n| oplus_mor(cat, &x.differential(cat, n), &y.differential(cat, n)),
    )?;
    let pick =
        |sel: fn(&DegreeBiproduct<C>) -> &Mor<C>| -> Vec<Mor<C>> { bps.iter().map(|b| sel(b).clone()).collect() };
    Ok(ComplexBiproduct {
        p1: CochainMap::new(cat, obj.clone(), x.clone(), lo, pick(|b| &b.p1)),
        p2: CochainMap::new(cat, obj.clone(), y.clone(), lo, pick(|b| &b.p2)),
        i1: CochainMap::new(cat, x.clone(), obj.clone(), lo, pick(|b| &b.i1)),
        i2: CochainMap::new(cat, y.clone(), obj.clone(), lo, pick(|b| &b.i2)),
        obj,
    })
}

/// `H^n = Ker d[n] / Im d[n-1]` together with the maps that produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohomology<C: AbelianCategory> {
    pub object: Ob<C>,
    /// `ker d[n]: Ker d[n] -> X[n]`.
    pub cycles: Mor<C>,
    /// `a: Im d[n-1] -> Ker d[n]`, the factorization of the image through the kernel.
    pub boundaries: Mor<C>,
    /// `cok a: Ker d[n] -> H^n`.
    pub projection: Mor<C>,
}

pub fn cohomology_object<C: AbelianCategory>(cat: &C, x: &CochainComplex<C>, n: i64) -> Result<Cohomology<C>> {
    let cycles = cat.kernel(&x.differential(cat, n)).inclusion;
    let im = image(cat, &x.differential(cat, n - 1));
    let boundaries = cat.lift_along_mono(&cycles, im.mono())?;
    let cok = cat.cokernel(&boundaries);
    Ok(Cohomology { object: cok.object, cycles, boundaries, projection: cok.projection })
}

/// The induced map `H^n(X) -> H^n(Y)`.
pub fn cohomology_map<C: AbelianCategory>(cat: &C, f: &CochainMap<C>, n: i64) -> Result<Mor<C>> {
    let hx = cohomology_object(cat, f.src(), n)?;
    let hy = cohomology_object(cat, f.dst(), n)?;
    induced_on_cohomology(cat, f, n, &hx, &hy)
}

/// As [`cohomology_map`], reusing already computed cohomology data.
pub fn induced_on_cohomology<C: AbelianCategory>(
    cat: &C,
    f: &CochainMap<C>,
    n: i64,
    hx: &Cohomology<C>,
    hy: &Cohomology<C>,
) -> Result<Mor<C>> {
    let alpha = cat.lift_along_mono(&hy.cycles, &cat.compose(&f.component(cat, n), &hx.cycles)?)?;
    let pushed = cat.compose(&hy.projection, &alpha)?;
    if !cat.is_zero_morphism(&cat.compose(&pushed, &hx.boundaries)?) {
        return Err(CategoryError::Invariant(format!("boundaries of degree {n} do not map to zero in cohomology")));
    }
    cat.colift_along_epi(&hx.projection, &pushed)
}

pub fn is_exact_at_degree<C: AbelianCategory>(cat: &C, x: &CochainComplex<C>, n: i64) -> Result<bool> {
    Ok(cat.is_zero_object(&cohomology_object(cat, x, n)?.object))
}

/// A degree −1 family `s[n]: X[n] -> Y[n-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy<C: AbelianCategory> {
    lo: i64,
    components: Vec<Mor<C>>,
}

impl<C: AbelianCategory> Homotopy<C> {
    pub fn new(lo: i64, components: Vec<Mor<C>>) -> Self {
        Self { lo, components }
    }

    pub fn zero() -> Self {
        Self { lo: 0, components: Vec::new() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn components(&self) -> &[Mor<C>] {
        &self.components
    }

    pub fn component(&self, cat: &C, x: &CochainComplex<C>, y: &CochainComplex<C>, n: i64) -> Mor<C> {
        let i = n - self.lo;
        if i >= 0 && (i as usize) < self.components.len() {
            self.components[i as usize].clone()
        } else {
            cat.zero_morphism(&x.object(cat, n), &y.object(cat, n - 1))
        }
    }
}

/// `(∂s + sd)[n] = ∂[n-1] ∘ s[n] + s[n+1] ∘ d[n]`.
pub fn null_homotopic_component<C: AbelianCategory>(
    cat: &C,
    x: &CochainComplex<C>,
    y: &CochainComplex<C>,
    s: &Homotopy<C>,
    n: i64,
) -> Result<Mor<C>> {
    let left = cat.compose(&y.differential(cat, n - 1), &s.component(cat, x, y, n))?;
    let right = cat.compose(&s.component(cat, x, y, n + 1), &x.differential(cat, n))?;
    cat.add(&left, &right)
}

/// The null-homotopic cochain map `∂s + sd: X -> Y`.
pub fn null_homotopic_map<C: AbelianCategory>(
    cat: &C,
    x: &CochainComplex<C>,
    y: &CochainComplex<C>,
    s: &Homotopy<C>,
) -> Result<CochainMap<C>> {
    CochainMap::from_fn(x, y, |n| null_homotopic_component(cat, x, y, s, n))
}

/// Checks `f[n] - g[n] = ∂[n-1] s[n] + s[n+1] d[n]` over the joint window.
pub fn is_homotopic<C: AbelianCategory>(
    cat: &C,
    f: &CochainMap<C>,
    g: &CochainMap<C>,
    s: &Homotopy<C>,
) -> Result<bool> {
    ensure_parallel_maps(f, g)?;
    let (a, b) = (f.window(), g.window());
    let s_hi = s.lo + s.components.len() as i64;
    let lo = (*a.start()).min(*b.start()).min(s.lo - 1);
    let hi = (*a.end()).max(*b.end()).max(s_hi);
    is_homotopic_in(cat, f, g, s, lo..=hi)
}

/// As [`is_homotopic`], restricted to the given degrees.
pub fn is_homotopic_in<C: AbelianCategory>(
    cat: &C,
    f: &CochainMap<C>,
    g: &CochainMap<C>,
    s: &Homotopy<C>,
    degrees: RangeInclusive<i64>,
) -> Result<bool> {
    ensure_parallel_maps(f, g)?;
    let (x, y) = (f.src(), f.dst());
    for n in degrees {
        let c = s.component(cat, x, y, n);
        if c.src() != &x.object(cat, n) || c.dst() != &y.object(cat, n - 1) {
            return Err(CategoryError::ShapeMismatch(format!("homotopy component in degree {n} has wrong endpoints")));
        }
        let diff = cat.sub(&f.component(cat, n), &g.component(cat, n))?;
        if diff != null_homotopic_component(cat, x, y, s, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}
