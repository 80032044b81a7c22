//! Set-level brute force for small modules over `Z/p^k`: elements are
//! enumerated explicitly and subgroups are compared as sets.

#![allow(dead_code)]

pub mod laws;

use std::collections::HashSet;

use homalg::generic::image;
use homalg::{AbelianCategory, Arrow, ModMap, ModObject, ModZpk};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Element = Vec<u64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pow(p: u64, e: u32) -> u64 {
    p.pow(e)
}

/// All tuples `(x_i)` with `0 <= x_i < p^{e_i}`.
pub fn elements(a: &ModObject) -> Vec<Element> {
    let mut out = vec![Vec::new()];
    for &e in a.exponents() {
        let q = pow(a.p(), e);
        out = out.into_iter().flat_map(|v| (0..q).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

pub fn zero(a: &ModObject) -> Element {
    vec![0; a.rank()]
}

/// Evaluates a morphism on an element directly from its matrix.
pub fn apply(f: &ModMap, x: &[u64]) -> Element {
    let (src, dst) = (f.src(), f.dst());
    let m = f.matrix();
    (0..dst.rank())
        .map(|i| {
            let q = pow(dst.p(), dst.exponents()[i]) as u128;
            let s: u128 = (0..src.rank()).map(|j| m[(i, j)] as u128 * x[j] as u128).sum();
            (s % q) as u64
        })
        .collect()
}

pub fn scale(a: &ModObject, c: u64, x: &[u64]) -> Element {
    x.iter().zip(a.exponents()).map(|(&v, &e)| (v as u128 * c as u128 % pow(a.p(), e) as u128) as u64).collect()
}

pub fn kernel_set(f: &ModMap) -> HashSet<Element> {
    let z = zero(f.dst());
    elements(f.src()).into_iter().filter(|x| apply(f, x) == z).collect()
}

pub fn image_set(f: &ModMap) -> HashSet<Element> {
    elements(f.src()).iter().map(|x| apply(f, x)).collect()
}

/// `|G[p^j]|` for `j = 0..=k`, which determines a finite abelian `p`-group.
pub fn torsion_profile(a: &ModObject) -> Vec<u64> {
    (0..=a.k()).map(|j| a.exponents().iter().map(|&e| pow(a.p(), e.min(j))).product()).collect()
}

/// The same profile for a subgroup `s` of `ambient`, counted element by element.
pub fn subgroup_profile(ambient: &ModObject, s: &HashSet<Element>) -> Vec<u64> {
    let z = zero(ambient);
    (0..=ambient.k()).map(|j| s.iter().filter(|x| scale(ambient, pow(ambient.p(), j), x) == z).count() as u64).collect()
}

/// The profile of `ambient / s`, counting cosets `y + s` with `p^j y` in `s`.
pub fn quotient_profile(ambient: &ModObject, s: &HashSet<Element>) -> Vec<u64> {
    let all = elements(ambient);
    (0..=ambient.k())
        .map(|j| {
            let hits = all.iter().filter(|y| s.contains(&scale(ambient, pow(ambient.p(), j), y))).count();
            (hits / s.len()) as u64
        })
        .collect()
}

/// Every morphism `a -> b`, enumerated entry by entry: entry `(i, j)`
/// ranges over multiples of `p^{max(0, b_i - a_j)}` below `p^{b_i}`.
pub fn all_morphisms(cat: &ModZpk, a: &ModObject, b: &ModObject) -> Vec<ModMap> {
    let p = cat.p();
    let mut choices: Vec<Vec<i64>> = vec![Vec::new()];
    for i in 0..b.rank() {
        for j in 0..a.rank() {
            let (bi, aj) = (b.exponents()[i], a.exponents()[j]);
            let step = pow(p, bi.saturating_sub(aj));
            let options: Vec<u64> = (0..pow(p, bi)).step_by(step as usize).collect();
            choices = choices
                .into_iter()
                .flat_map(|v| options.iter().map(move |&x| [v.clone(), vec![x as i64]].concat()))
                .collect();
        }
    }
    choices
        .into_iter()
        .map(|flat| {
            let rows: Vec<Vec<i64>> = (0..b.rank()).map(|i| flat[i * a.rank()..(i + 1) * a.rank()].to_vec()).collect();
            cat.morphism_from_rows(a, b, &rows).expect("enumerated entries are well defined")
        })
        .collect()
}

/// Images of the cyclic generators of `a` define a homomorphism iff each
/// image is killed by the order of its generator.
pub fn is_homomorphism_table(a: &ModObject, b: &ModObject, images: &[Element]) -> bool {
    a.exponents().iter().zip(images).all(|(&e, img)| scale(b, pow(a.p(), e), img) == zero(b))
}

/// Modules over `Z/p^k` with at most `max_order` elements.
pub fn small_modules(cat: &ModZpk, max_order: u64) -> Vec<ModObject> {
    fn go(cat: &ModZpk, min_e: u32, order: u64, max_order: u64, acc: &mut Vec<u32>, out: &mut Vec<ModObject>) {
        out.push(cat.object(acc.iter().copied()).expect("valid exponents"));
        for e in min_e..=cat.k() {
            let next = order * pow(cat.p(), e);
            if next <= max_order {
                acc.push(e);
                go(cat, e, next, max_order, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(cat, 1, 1, max_order, &mut Vec::new(), &mut out);
    out
}

/// Compares kernel, cokernel and image of `f` with set-level brute force:
/// the structure maps must realize the right subsets, and the objects must
/// have the right isomorphism type.
pub fn check_against_sets(cat: &ModZpk, f: &ModMap) -> Result<(), String> {
    let (a, b) = (f.src(), f.dst());
    let ker = kernel_set(f);
    let im = image_set(f);

    let k = cat.kernel(f);
    if image_set(&k.inclusion) != ker {
        return Err(format!("kernel inclusion of {f:?} does not hit the kernel"));
    }
    if kernel_set(&k.inclusion).len() != 1 {
        return Err(format!("kernel inclusion of {f:?} is not injective"));
    }
    if torsion_profile(&k.object) != subgroup_profile(a, &ker) {
        return Err(format!("kernel object {} has the wrong type", k.object));
    }

    let c = cat.cokernel(f);
    if image_set(&c.projection).len() as u64 != elements(&c.object).len() as u64 {
        return Err(format!("cokernel projection of {f:?} is not onto"));
    }
    if kernel_set(&c.projection) != im {
        return Err(format!("cokernel projection of {f:?} does not kill exactly the image"));
    }
    if torsion_profile(&c.object) != quotient_profile(b, &im) {
        return Err(format!("cokernel object {} has the wrong type", c.object));
    }

    let m = image(cat, f);
    if image_set(m.mono()) != im || kernel_set(m.mono()).len() != 1 {
        return Err(format!("image of {f:?} is not the set-level image"));
    }
    if torsion_profile(m.mono().src()) != subgroup_profile(b, &im) {
        return Err(format!("image object {} has the wrong type", m.mono().src()));
    }
    Ok(())
}

/// `|ker| / |im|` for `x -> c x` between subsets of `Z/q`, with the
/// subsets and multipliers given by hand.
pub fn hand_cohomology_orders(q: u64, hom_sets: &[Vec<u64>], multipliers: &[u64]) -> Vec<usize> {
    (0..multipliers.len())
        .map(|i| {
            let ker = hom_sets[i].iter().filter(|&&x| (multipliers[i] * x).is_multiple_of(q)).count();
            let im: HashSet<u64> = if i == 0 {
                HashSet::from([0])
            } else {
                hom_sets[i - 1].iter().map(|&x| multipliers[i - 1] * x % q).collect()
            };
            ker / im.len()
        })
        .collect()
}
