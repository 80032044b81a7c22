//! One randomized instance of each law, for any backend that can sample.

use homalg::complexes::{cohomology_map, complex_biproduct, is_homotopic, null_homotopic_map, validate_cochain_map};
use homalg::generic::{
    epi_mono_factorize, hom_add_via_biproduct, image, is_epi, is_exact_at, is_iso, is_mono, kernel_subobject,
    subobject_eq, Subobject,
};
use homalg::resolutions::{
    build_injective_resolution, homotopy_between, induce_chain_map, induce_chain_map_with, lies_over,
};
use homalg::sampling::*;
use homalg::{Arrow, CochainMap, ModZpk};
use rand::Rng;

pub type Outcome = Result<(), String>;
pub type MapTriple<C> = (CochainMap<C>, CochainMap<C>, CochainMap<C>);

fn ensure(ok: bool, what: &str) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Biproduct identities, hom-group laws, distributivity, biproduct-induced
/// addition, kernels monic and cokernels epi, kernels as kernels of their
/// cokernels, epi-mono factorization and exactness versus mono/epi.
pub fn axiom_case<C: RandomSource, R: Rng>(cat: &C, rng: &mut R, max_rank: usize) -> Outcome {
    let a = cat.random_object(rng, max_rank);
    let b = cat.random_object(rng, max_rank);
    let c = cat.random_object(rng, max_rank);
    let (f, f2, f3) =
        (cat.random_morphism(rng, &a, &b), cat.random_morphism(rng, &a, &b), cat.random_morphism(rng, &a, &b));
    let (g, g2) = (cat.random_morphism(rng, &b, &c), cat.random_morphism(rng, &b, &c));

    let bp = cat.biproduct(&a, &b).map_err(err)?;
    let (one_a, one_b) = (cat.identity(&a), cat.identity(&b));
    let comp = |x: &C::Morphism, y: &C::Morphism| cat.compose(x, y).map_err(err);
    let add = |x: &C::Morphism, y: &C::Morphism| cat.add(x, y).map_err(err);
    ensure(comp(&bp.p1, &bp.i1)? == one_a, "p1 i1 = 1")?;
    ensure(comp(&bp.p2, &bp.i2)? == one_b, "p2 i2 = 1")?;
    ensure(cat.is_zero_morphism(&comp(&bp.p1, &bp.i2)?), "p1 i2 = 0")?;
    ensure(cat.is_zero_morphism(&comp(&bp.p2, &bp.i1)?), "p2 i1 = 0")?;
    ensure(add(&comp(&bp.i1, &bp.p1)?, &comp(&bp.i2, &bp.p2)?)? == cat.identity(&bp.obj), "i1 p1 + i2 p2 = 1")?;
    let h = cat.random_morphism(rng, &c, &a);
    let k = cat.random_morphism(rng, &c, &b);
    let u = cat.product_universal(&h, &k).map_err(err)?;
    ensure(comp(&bp.p1, &u)? == h && comp(&bp.p2, &u)? == k, "product universal property")?;
    let (h2, k2) = (cat.random_morphism(rng, &a, &c), cat.random_morphism(rng, &b, &c));
    let v = cat.coproduct_universal(&h2, &k2).map_err(err)?;
    ensure(comp(&v, &bp.i1)? == h2 && comp(&v, &bp.i2)? == k2, "coproduct universal property")?;
    let zero = cat.zero_object();
    ensure(cat.is_zero_object(&zero), "zero object")?;
    ensure(cat.is_zero_morphism(&comp(&cat.zero_morphism(&zero, &a), &cat.zero_morphism(&a, &zero))?), "1_0 = 0")?;

    ensure(add(&add(&f, &f2)?, &f3)? == add(&f, &add(&f2, &f3)?)?, "addition associative")?;
    ensure(add(&f, &f2)? == add(&f2, &f)?, "addition commutative")?;
    ensure(add(&f, &cat.zero_morphism(&a, &b))? == f, "zero is neutral")?;
    ensure(cat.is_zero_morphism(&add(&f, &cat.neg(&f))?), "negatives")?;
    ensure(comp(&add(&g, &g2)?, &f)? == add(&comp(&g, &f)?, &comp(&g2, &f)?)?, "right distributivity")?;
    ensure(comp(&g, &add(&f, &f2)?)? == add(&comp(&g, &f)?, &comp(&g, &f2)?)?, "left distributivity")?;
    ensure(comp(&comp(&h, &g2)?, &f)? == comp(&h, &comp(&g2, &f)?)?, "composition associative")?;
    ensure(comp(&one_b, &f)? == f && comp(&f, &one_a)? == f, "identities")?;
    ensure(hom_add_via_biproduct(cat, &f, &f2).map_err(err)? == add(&f, &f2)?, "biproduct addition = native addition")?;

    let ker = cat.kernel(&f);
    let cok = cat.cokernel(&f);
    ensure(is_mono(cat, &ker.inclusion), "kernels are monic")?;
    ensure(is_epi(cat, &cok.projection), "cokernels are epi")?;
    ensure(cat.is_zero_morphism(&comp(&f, &ker.inclusion)?), "f ker f = 0")?;
    ensure(cat.is_zero_morphism(&comp(&cok.projection, &f)?), "cok f f = 0")?;
    let kk = cat.kernel(&cat.cokernel(&ker.inclusion).projection).inclusion;
    let kk = Subobject::new(cat, kk).map_err(err)?;
    ensure(subobject_eq(cat, &kernel_subobject(cat, &f), &kk), "ker f = ker(cok(ker f))")?;
    let cc = cat.cokernel(&cat.kernel(&cok.projection).inclusion);
    let phi = cat.colift_along_epi(&cc.projection, &cok.projection).map_err(err)?;
    ensure(is_iso(cat, &phi), "cok f = cok(ker(cok f))")?;

    let fac = epi_mono_factorize(cat, &f).map_err(err)?;
    ensure(comp(&fac.m, &fac.e)? == f, "f = m e")?;
    ensure(is_mono(cat, &fac.m) && is_epi(cat, &fac.e), "m monic, e epi")?;
    ensure(subobject_eq(cat, &image(cat, &f), &Subobject::new(cat, fac.m.clone()).map_err(err)?), "m is the image")?;

    let into = cat.zero_morphism(&zero, &a);
    let out = cat.zero_morphism(&b, &zero);
    ensure(is_exact_at(cat, &into, &f).map_err(err)? == is_mono(cat, &f), "0 -> A -> B exact iff mono")?;
    ensure(is_exact_at(cat, &f, &out).map_err(err)? == is_epi(cat, &f), "A -> B -> 0 exact iff epi")?;
    ensure(is_exact_at(cat, &ker.inclusion, &f).map_err(err)?, "ker f -> A -> B exact")?;
    ensure(is_exact_at(cat, &f, &cok.projection).map_err(err)?, "A -> B -> cok f exact")?;
    Ok(())
}

/// A composable pair `f: X -> Y`, `g: Y -> Z` and a second map `f2: X -> Y`,
/// drawn from subcomplex inclusions, quotient projections, biproduct
/// structure maps and endomorphisms, each perturbed by a null-homotopic map.
pub fn random_map_pair<C: RandomSource, R: Rng>(cat: &C, rng: &mut R, max_rank: usize) -> Result<MapTriple<C>, String> {
    let lo = rng.gen_range(-1..=1);
    let len = rng.gen_range(1..=4);
    let x = random_complex(cat, rng, lo, len, max_rank).map_err(err)?;
    let (f, g) = match rng.gen_range(0..3) {
        0 => {
            let incl = random_subcomplex_inclusion(cat, rng, &x).map_err(err)?;
            let src = incl.src().clone();
            let sub_endo = random_endomorphism(cat, rng, &src).map_err(err)?;
            let f = CochainMap::compose(cat, &incl, &sub_endo).map_err(err)?;
            (f, random_quotient_projection(cat, rng, &x).map_err(err)?)
        }
        1 => (random_endomorphism(cat, rng, &x).map_err(err)?, random_endomorphism(cat, rng, &x).map_err(err)?),
        _ => {
            let w = random_complex(cat, rng, lo, len, max_rank).map_err(err)?;
            let bp = complex_biproduct(cat, &x, &w).map_err(err)?;
            (bp.i1, bp.p1)
        }
    };
    let f = perturb(cat, rng, &f).map_err(err)?;
    let g = perturb(cat, rng, &g).map_err(err)?;
    let twist = random_endomorphism(cat, rng, f.src()).map_err(err)?;
    let f2 = CochainMap::compose(cat, &f, &twist).map_err(err)?;
    for m in [&f, &g, &f2] {
        ensure(validate_cochain_map(cat, m).is_ok(), "sampled map is a cochain map")?;
    }
    Ok((f, g, f2))
}

/// `H^n(g f) = H^n(g) H^n(f)`, `H^n(1) = 1` and `H^n(f + f2) = H^n(f) + H^n(f2)`.
pub fn functoriality_case<C: RandomSource, R: Rng>(cat: &C, rng: &mut R, max_rank: usize) -> Outcome {
    let (f, g, f2) = random_map_pair(cat, rng, max_rank)?;
    let gf = CochainMap::compose(cat, &g, &f).map_err(err)?;
    let sum = CochainMap::add(cat, &f, &f2).map_err(err)?;
    let one = CochainMap::identity(cat, f.src());
    let (lo, hi) = (*gf.window().start(), *gf.window().end());
    for n in lo.min(*g.window().start())..=hi.max(*g.window().end()) {
        let h = |m: &CochainMap<C>| cohomology_map(cat, m, n).map_err(err);
        let (hf, hg, hf2) = (h(&f)?, h(&g)?, h(&f2)?);
        ensure(h(&gf)? == cat.compose(&hg, &hf).map_err(err)?, &format!("H^{n}(g f) = H^{n}(g) H^{n}(f)"))?;
        let hone = h(&one)?;
        ensure(hone == cat.identity(hone.src()), &format!("H^{n}(1) = 1"))?;
        ensure(h(&sum)? == cat.add(&hf, &hf2).map_err(err)?, &format!("H^{n}(f + f') = H^{n}(f) + H^{n}(f')"))?;
    }
    Ok(())
}

/// `g = f - (∂s + sd)` induces the same map as `f` in every degree.
pub fn homotopy_case<C: RandomSource, R: Rng>(cat: &C, rng: &mut R, max_rank: usize) -> Outcome {
    let (f, _, _) = random_map_pair(cat, rng, max_rank)?;
    let s = random_homotopy(cat, rng, f.src(), f.dst());
    let ns = null_homotopic_map(cat, f.src(), f.dst(), &s).map_err(err)?;
    let g = CochainMap::sub(cat, &f, &ns).map_err(err)?;
    ensure(is_homotopic(cat, &f, &g, &s).map_err(err)?, "f and g are homotopic through s")?;
    for n in f.window() {
        let hf = cohomology_map(cat, &f, n).map_err(err)?;
        ensure(hf == cohomology_map(cat, &g, n).map_err(err)?, &format!("H^{n}(f) = H^{n}(g)"))?;
    }
    Ok(())
}

/// Induces two maps over a random `f` between random resolutions, one with
/// the canonical extension and one with a randomly perturbed extension,
/// checks every square and verifies the homotopy between them.
pub fn comparison_case<R: Rng>(cat: &ModZpk, rng: &mut R, degree: i64, max_rank: usize) -> Outcome {
    let a = cat.random_object(rng, max_rank);
    let b = cat.random_object(rng, max_rank);
    let f = cat.random_morphism(rng, &a, &b);
    let res = |rng: &mut R, o| {
        if rng.gen_bool(0.5) {
            build_injective_resolution(cat, o, degree)
        } else {
            random_resolution(cat, rng, o, degree, 2)
        }
    };
    let res_a = res(rng, &a).map_err(err)?;
    let res_b = res(rng, &b).map_err(err)?;
    let canonical = induce_chain_map(cat, &f, &res_a, &res_b).map_err(err)?;
    let seeded = induce_chain_map_with(cat, &f, &res_a, &res_b, random_extender(cat, rng)).map_err(err)?;
    ensure(lies_over(cat, &canonical, &f, &res_a, &res_b).map_err(err)?, "canonical map commutes")?;
    ensure(lies_over(cat, &seeded, &f, &res_a, &res_b).map_err(err)?, "seeded map commutes")?;
    let s = homotopy_between(cat, &canonical, &seeded, &res_a, &res_b).map_err(err)?;
    ensure(
        homalg::complexes::is_homotopic_in(cat, &canonical, &seeded, &s, -1..=degree - 1).map_err(err)?,
        "homotopy identity below the truncation degree",
    )
}
