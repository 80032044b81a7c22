//! Finitely generated modules over `Z/p^k`.
//!
//! An object `Z/p^{e_1} (+) ... (+) Z/p^{e_r}` is stored by its sorted
//! exponent list. A morphism is a `dst x src` matrix whose column `j` is the
//! image of the `j`-th cyclic generator; entry `(i, j)` must be divisible by
//! `p^{max(0, e_i^dst - e_j^src)}` and is kept reduced mod `p^{e_i^dst}`.
//!
//! Kernels, cokernels and lifts go through the free module `(Z/p^k)^r`, in
//! which the object is the quotient by `diag(p^{e_i})`.

use std::fmt;

use crate::arith::{Residue, ResidueRing};
use crate::category::{ensure_composable, ensure_parallel, AbelianCategory, Arrow, Biproduct, Cokernel, Kernel};
use crate::error::{CategoryError, Result};
use crate::matrix::Matrix;
use crate::smith::{null_space, present_quotient, smith, solve_with};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModObject {
    p: u64,
    k: u32,
    exponents: Vec<u32>,
}

impl ModObject {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Sorted exponents of the cyclic summands.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of cyclic summands.
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// Number of elements, if it fits in a `u128`.
    pub fn order(&self) -> Option<u128> {
        let total: u32 = self.exponents.iter().sum();
        (self.p as u128).checked_pow(total)
    }
}

impl fmt::Display for ModObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "0");
        }
        for (n, e) in self.exponents.iter().enumerate() {
            if n > 0 {
                write!(f, " (+) ")?;
            }
            write!(f, "Z/{}^{}", self.p, e)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMorphism<T> {
    src: ModObject,
    dst: ModObject,
    matrix: Matrix<T>,
}

impl<T: Residue> ModMorphism<T> {
    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }
}

impl<T: Residue> Arrow for ModMorphism<T> {
    type Object = ModObject;

    fn src(&self) -> &ModObject {
        &self.src
    }

    fn dst(&self) -> &ModObject {
        &self.dst
    }
}

/// The category of finitely generated `Z/p^k`-modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZpkModules<T> {
    ring: ResidueRing<T>,
}

impl<T: Residue> ZpkModules<T> {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        Ok(Self { ring: ResidueRing::new(p, k)? })
    }

    pub fn ring(&self) -> &ResidueRing<T> {
        &self.ring
    }

    pub fn p(&self) -> u64 {
        self.ring.p().to_u64().expect("prime fits u64")
    }

    pub fn k(&self) -> u32 {
        self.ring.k()
    }

    /// The module with the given exponents, in any order.
    pub fn object(&self, exponents: impl IntoIterator<Item = u32>) -> Result<ModObject> {
        let mut exponents: Vec<u32> = exponents.into_iter().collect();
        if let Some(e) = exponents.iter().find(|&&e| e == 0 || e > self.k()) {
            return Err(CategoryError::InvalidParameters(format!(
                "exponent {e} outside 1..={} for Z/{}^{}",
                self.k(),
                self.p(),
                self.k()
            )));
        }
        exponents.sort_unstable();
        Ok(ModObject { p: self.p(), k: self.k(), exponents })
    }

    pub fn cyclic(&self, e: u32) -> Result<ModObject> {
        self.object([e])
    }

    /// The free module `(Z/p^k)^n`.
    pub fn free(&self, n: usize) -> ModObject {
        ModObject { p: self.p(), k: self.k(), exponents: vec![self.k(); n] }
    }

    fn check_object(&self, a: &ModObject) -> Result<()> {
        if a.p != self.p() || a.k != self.k() {
            return Err(CategoryError::BackendMismatch(format!(
                "object over Z/{}^{} used in the category of Z/{}^{}-modules",
                a.p,
                a.k,
                self.p(),
                self.k()
            )));
        }
        Ok(())
    }

    /// Builds a morphism from raw residues, reducing each row to its
    /// summand and checking well-definedness.
    pub fn morphism(&self, src: &ModObject, dst: &ModObject, matrix: Matrix<T>) -> Result<ModMorphism<T>> {
        self.check_object(src)?;
        self.check_object(dst)?;
        if matrix.shape() != (dst.rank(), src.rank()) {
            return Err(CategoryError::ShapeMismatch(format!(
                "matrix is {}x{} but {} -> {} needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                src,
                dst,
                dst.rank(),
                src.rank()
            )));
        }
        let matrix = self.reduce_rows(matrix.map_rows(|_, x| self.ring.reduce(x)), dst);
        for i in 0..dst.rank() {
            for j in 0..src.rank() {
                let need = dst.exponents[i].saturating_sub(src.exponents[j]);
                let entry = matrix[(i, j)];
                if !entry.is_zero() && self.ring.valuation(entry) < need {
                    return Err(CategoryError::InvalidMorphism(format!(
                        "entry ({i},{j}) = {entry} is not divisible by {}^{need}, so {} -> {} is not well defined",
                        self.p(),
                        src,
                        dst
                    )));
                }
            }
        }
        Ok(ModMorphism { src: src.clone(), dst: dst.clone(), matrix })
    }

    /// Builds a morphism from signed integer rows.
    pub fn morphism_from_rows(&self, src: &ModObject, dst: &ModObject, rows: &[Vec<i64>]) -> Result<ModMorphism<T>> {
        let nested: Vec<Vec<T>> = rows.iter().map(|r| r.iter().map(|&x| self.ring.reduce_i64(x)).collect()).collect();
        let matrix = Matrix::from_nested(&nested, src.rank())
            .ok_or_else(|| CategoryError::ShapeMismatch("ragged matrix rows".into()))?;
        if matrix.rows() != dst.rank() {
            return Err(CategoryError::ShapeMismatch(format!(
                "matrix has {} rows but {} has rank {}",
                matrix.rows(),
                dst,
                dst.rank()
            )));
        }
        self.morphism(src, dst, matrix)
    }

    /// Multiplication by `c` on `a`.
    pub fn scalar(&self, a: &ModObject, c: i64) -> ModMorphism<T> {
        let c = self.ring.reduce_i64(c);
        let m = Matrix::identity(a.rank()).scale(c, &self.ring);
        self.raw(a, a, m)
    }

    fn reduce_rows(&self, m: Matrix<T>, dst: &ModObject) -> Matrix<T> {
        m.map_rows(|i, x| self.ring.reduce_to(x, dst.exponents[i]))
    }

    /// Trusted constructor for matrices that are well defined by construction.
    fn raw(&self, src: &ModObject, dst: &ModObject, m: Matrix<T>) -> ModMorphism<T> {
        let matrix = self.reduce_rows(m, dst);
        ModMorphism { src: src.clone(), dst: dst.clone(), matrix }
    }

    /// `diag(p^{e_i})`: the relations of `a` inside its free cover.
    fn relations(&self, a: &ModObject) -> Matrix<T> {
        Matrix::from_fn(a.rank(), a.rank(), |i, j| if i == j { self.ring.p_pow(a.exponents[i]) } else { T::zero() })
    }

    /// Scales row `i` by `p^{k - e_i}`, turning congruences mod `p^{e_i}` into congruences mod `p^k`.
    fn lift_rows(&self, m: &Matrix<T>, exps: &[u32]) -> Matrix<T> {
        m.map_rows(|i, x| self.ring.mul(x, self.ring.p_pow(self.k() - exps[i])))
    }

    fn require_mono(&self, m: &ModMorphism<T>) -> Result<()> {
        if !self.is_zero_object(&self.kernel(m).object) {
            return Err(CategoryError::NotMonic(format!("{} -> {}: {}", m.src, m.dst, m.matrix)));
        }
        Ok(())
    }

    fn require_epi(&self, e: &ModMorphism<T>) -> Result<()> {
        if !self.is_zero_object(&self.cokernel(e).object) {
            return Err(CategoryError::NotEpi(format!("{} -> {}: {}", e.src, e.dst, e.matrix)));
        }
        Ok(())
    }

    /// Stable merge of two exponent lists; returns the merged object and
    /// the position of each summand of `a` and `b` in it.
    fn merge(&self, a: &ModObject, b: &ModObject) -> (ModObject, Vec<usize>, Vec<usize>) {
        let mut tagged: Vec<(u32, usize, usize)> = a
            .exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, 0, i))
            .chain(b.exponents.iter().enumerate().map(|(i, &e)| (e, 1, i)))
            .collect();
        tagged.sort_by_key(|&(e, side, i)| (e, side, i));
        let mut pos_a = vec![0; a.rank()];
        let mut pos_b = vec![0; b.rank()];
        for (pos, &(_, side, i)) in tagged.iter().enumerate() {
            if side == 0 {
                pos_a[i] = pos;
            } else {
                pos_b[i] = pos;
            }
        }
        let obj = ModObject { p: a.p, k: a.k, exponents: tagged.iter().map(|t| t.0).collect() };
        (obj, pos_a, pos_b)
    }
}

impl<T: Residue> AbelianCategory for ZpkModules<T> {
    type Object = ModObject;
    type Morphism = ModMorphism<T>;

    fn zero_object(&self) -> ModObject {
        ModObject { p: self.p(), k: self.k(), exponents: Vec::new() }
    }

    fn is_zero_object(&self, a: &ModObject) -> bool {
        a.exponents.is_empty()
    }

    fn identity(&self, a: &ModObject) -> ModMorphism<T> {
        self.raw(a, a, Matrix::identity(a.rank()))
    }

    fn zero_morphism(&self, a: &ModObject, b: &ModObject) -> ModMorphism<T> {
        self.raw(a, b, Matrix::zeros(b.rank(), a.rank()))
    }

    fn compose(&self, g: &ModMorphism<T>, f: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        ensure_composable(g, f)?;
        Ok(self.raw(&f.src, &g.dst, g.matrix.mul(&f.matrix, &self.ring)))
    }

    fn add(&self, f: &ModMorphism<T>, g: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        ensure_parallel(f, g)?;
        Ok(self.raw(&f.src, &f.dst, f.matrix.add(&g.matrix, &self.ring)))
    }

    fn neg(&self, f: &ModMorphism<T>) -> ModMorphism<T> {
        self.raw(&f.src, &f.dst, f.matrix.neg(&self.ring))
    }

    fn biproduct(&self, a: &ModObject, b: &ModObject) -> Result<Biproduct<ModObject, ModMorphism<T>>> {
        self.check_object(a)?;
        self.check_object(b)?;
        let (obj, pos_a, pos_b) = self.merge(a, b);
        let n = obj.rank();
        let i1 = Matrix::from_fn(n, a.rank(), |r, c| if pos_a[c] == r { T::one() } else { T::zero() });
        let i2 = Matrix::from_fn(n, b.rank(), |r, c| if pos_b[c] == r { T::one() } else { T::zero() });
        Ok(Biproduct {
            p1: self.raw(&obj, a, i1.transpose()),
            p2: self.raw(&obj, b, i2.transpose()),
            i1: self.raw(a, &obj, i1),
            i2: self.raw(b, &obj, i2),
            obj,
        })
    }

    fn product_universal(&self, f: &ModMorphism<T>, g: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        if f.src != g.src {
            return Err(CategoryError::ShapeMismatch(format!(
                "product pairing needs a common source, got {} and {}",
                f.src, g.src
            )));
        }
        let (obj, pos_a, pos_b) = self.merge(&f.dst, &g.dst);
        let mut m = Matrix::zeros(obj.rank(), f.src.rank());
        for (r, &pos) in pos_a.iter().enumerate() {
            for c in 0..m.cols() {
                m[(pos, c)] = f.matrix[(r, c)];
            }
        }
        for (r, &pos) in pos_b.iter().enumerate() {
            for c in 0..m.cols() {
                m[(pos, c)] = g.matrix[(r, c)];
            }
        }
        Ok(self.raw(&f.src, &obj, m))
    }

    fn coproduct_universal(&self, f: &ModMorphism<T>, g: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        if f.dst != g.dst {
            return Err(CategoryError::ShapeMismatch(format!(
                "coproduct copairing needs a common target, got {} and {}",
                f.dst, g.dst
            )));
        }
        let (obj, pos_a, pos_b) = self.merge(&f.src, &g.src);
        let mut m = Matrix::zeros(f.dst.rank(), obj.rank());
        for (c, &pos) in pos_a.iter().enumerate() {
            for r in 0..m.rows() {
                m[(r, pos)] = f.matrix[(r, c)];
            }
        }
        for (c, &pos) in pos_b.iter().enumerate() {
            for r in 0..m.rows() {
                m[(r, pos)] = g.matrix[(r, c)];
            }
        }
        Ok(self.raw(&obj, &f.dst, m))
    }

    fn kernel(&self, f: &ModMorphism<T>) -> Kernel<ModObject, ModMorphism<T>> {
        // x lies in the kernel iff p^{k - e_i} (F x)_i = 0 mod p^k for every row
        let lifted = self.lift_rows(&f.matrix, &f.dst.exponents);
        let gens = null_space(&lifted, &self.ring);
        // relations among those generators: combinations landing in diag(p^e) of the source
        let rel = null_space(&self.lift_rows(&gens, &f.src.exponents), &self.ring);
        let pres = present_quotient(&rel, &self.ring);
        let object = ModObject { p: self.p(), k: self.k(), exponents: pres.exponents };
        let inclusion = self.raw(&object, &f.src, gens.mul(&pres.generators, &self.ring));
        Kernel { object, inclusion }
    }

    fn cokernel(&self, f: &ModMorphism<T>) -> Cokernel<ModObject, ModMorphism<T>> {
        let rel = f.matrix.hstack(&self.relations(&f.dst));
        let pres = present_quotient(&rel, &self.ring);
        let object = ModObject { p: self.p(), k: self.k(), exponents: pres.exponents };
        let projection = self.raw(&f.dst, &object, pres.projection);
        Cokernel { object, projection }
    }

    fn lift_along_mono(&self, m: &ModMorphism<T>, g: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        if m.dst != g.dst {
            return Err(CategoryError::ShapeMismatch(format!(
                "cannot lift a map into {} along a monic into {}",
                g.dst, m.dst
            )));
        }
        self.require_mono(m)?;
        let system = m.matrix.hstack(&self.relations(&m.dst));
        let s = smith(&system, &self.ring);
        let mut columns = Vec::with_capacity(g.src.rank());
        for j in 0..g.src.rank() {
            let sol = solve_with(&s, system.shape(), &g.matrix.column(j), &self.ring).ok_or_else(|| {
                CategoryError::NoFactorization(format!(
                    "column {j} of {} is not in the image of {}",
                    g.matrix, m.matrix
                ))
            })?;
            columns.push(sol[..m.src.rank()].to_vec());
        }
        let h = self
            .morphism(&g.src, &m.src, Matrix::from_columns(m.src.rank(), &columns))
            .map_err(|e| CategoryError::NoFactorization(e.to_string()))?;
        if self.compose(m, &h)? != *g {
            return Err(CategoryError::Invariant("lift does not reproduce the target map".into()));
        }
        Ok(h)
    }

    fn colift_along_epi(&self, e: &ModMorphism<T>, g: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        if e.src != g.src {
            return Err(CategoryError::ShapeMismatch(format!(
                "cannot colift a map out of {} along an epi out of {}",
                g.src, e.src
            )));
        }
        self.require_epi(e)?;
        let system = e.matrix.hstack(&self.relations(&e.dst));
        let s = smith(&system, &self.ring);
        let mut columns = Vec::with_capacity(e.dst.rank());
        for j in 0..e.dst.rank() {
            let mut unit = vec![T::zero(); e.dst.rank()];
            unit[j] = T::one();
            let pre = solve_with(&s, system.shape(), &unit, &self.ring)
                .ok_or_else(|| CategoryError::Invariant("epi has a generator outside its image".into()))?;
            columns.push(g.matrix.mul_vec(&pre[..e.src.rank()], &self.ring));
        }
        let not_factoring =
            || CategoryError::NoFactorization(format!("{} does not vanish on the kernel of {}", g.matrix, e.matrix));
        let h =
            self.morphism(&e.dst, &g.dst, Matrix::from_columns(g.dst.rank(), &columns)).map_err(|_| not_factoring())?;
        if self.compose(&h, e)? != *g {
            return Err(not_factoring());
        }
        Ok(h)
    }

    fn is_injective(&self, a: &ModObject) -> bool {
        a.exponents.iter().all(|&e| e == self.k())
    }

    fn embed_into_injective(&self, a: &ModObject) -> ModMorphism<T> {
        let target = self.free(a.rank());
        let m = Matrix::from_fn(a.rank(), a.rank(), |i, j| {
            if i == j {
                self.ring.p_pow(self.k() - a.exponents[i])
            } else {
                T::zero()
            }
        });
        self.raw(a, &target, m)
    }

    fn inj_extend(&self, m: &ModMorphism<T>, alpha: &ModMorphism<T>) -> Result<ModMorphism<T>> {
        if m.src != alpha.src {
            return Err(CategoryError::ShapeMismatch(format!(
                "extension needs a common source, got {} and {}",
                m.src, alpha.src
            )));
        }
        if !self.is_injective(&alpha.dst) {
            return Err(CategoryError::NotInjective(alpha.dst.to_string()));
        }
        self.require_mono(m)?;
        let b = &m.dst;
        // β_ij = p^{k - e^B_j} t_ij; solve Σ_j t_ij C_jl = α_il with C_jl = p^{k - e^B_j} m_jl
        let c = self.lift_rows(&m.matrix, &b.exponents);
        let system = c.transpose();
        let s = smith(&system, &self.ring);
        let mut rows = Vec::with_capacity(alpha.dst.rank());
        for i in 0..alpha.dst.rank() {
            let t = solve_with(&s, system.shape(), alpha.matrix.row(i), &self.ring).ok_or_else(|| {
                CategoryError::NoFactorization(format!("{} does not extend along {}", alpha.matrix, m.matrix))
            })?;
            rows.push(
                t.iter()
                    .enumerate()
                    .map(|(j, &x)| self.ring.mul(x, self.ring.p_pow(self.k() - b.exponents[j])))
                    .collect::<Vec<_>>(),
            );
        }
        let beta = self.raw(b, &alpha.dst, Matrix::from_nested(&rows, b.rank()).expect("rectangular"));
        if self.compose(&beta, m)? != *alpha {
            return Err(CategoryError::Invariant("injective extension does not restrict to α".into()));
        }
        Ok(beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> ZpkModules<u64> {
        ZpkModules::new(2, 2).unwrap()
    }

    #[test]
    fn displays_canonical_form() {
        let c = z4();
        assert_eq!(c.object([2, 1]).unwrap().to_string(), "Z/2^1 (+) Z/2^2");
        assert_eq!(c.zero_object().to_string(), "0");
    }

    #[test]
    fn rejects_ill_defined_maps() {
        let c = z4();
        let (z2, z4o) = (c.cyclic(1).unwrap(), c.cyclic(2).unwrap());
        assert!(c.morphism_from_rows(&z2, &z4o, &[vec![1]]).is_err());
        assert!(c.morphism_from_rows(&z2, &z4o, &[vec![2]]).is_ok());
        assert!(c.morphism_from_rows(&z4o, &z2, &[vec![1]]).is_ok());
    }

    #[test]
    fn addition_mod_four() {
        let c = z4();
        let a = c.cyclic(2).unwrap();
        let f = c.scalar(&a, 1);
        let g = c.scalar(&a, 3);
        assert!(c.is_zero_morphism(&c.add(&f, &g).unwrap()));
    }

    #[test]
    fn kernel_of_doubling() {
        let c = z4();
        let a = c.cyclic(2).unwrap();
        let k = c.kernel(&c.scalar(&a, 2));
        assert_eq!(k.object, c.cyclic(1).unwrap());
        assert_eq!(k.inclusion.matrix(), &Matrix::from_rows(1, 1, vec![2]));
    }

    #[test]
    fn cokernel_of_inclusion() {
        let c = z4();
        let (z2, z4o) = (c.cyclic(1).unwrap(), c.cyclic(2).unwrap());
        let incl = c.morphism_from_rows(&z2, &z4o, &[vec![2]]).unwrap();
        let cok = c.cokernel(&incl);
        assert_eq!(cok.object, z2);
        assert_eq!(cok.projection.matrix(), &Matrix::from_rows(1, 1, vec![1]));
    }

    #[test]
    fn biproduct_merges_exponents() {
        let c = z4();
        let bp = c.biproduct(&c.cyclic(2).unwrap(), &c.cyclic(1).unwrap()).unwrap();
        assert_eq!(bp.obj.exponents(), &[1, 2]);
        assert_eq!(c.compose(&bp.p1, &bp.i1).unwrap(), c.identity(&c.cyclic(2).unwrap()));
        assert!(c.is_zero_morphism(&c.compose(&bp.p2, &bp.i1).unwrap()));
    }

    #[test]
    fn lifts_through_inclusion() {
        let c = z4();
        let (z2, z4o) = (c.cyclic(1).unwrap(), c.cyclic(2).unwrap());
        let incl = c.morphism_from_rows(&z2, &z4o, &[vec![2]]).unwrap();
        let lifted = c.lift_along_mono(&incl, &c.scalar(&z4o, 2)).unwrap();
        // the reduction Z/4 -> Z/2
        assert_eq!(lifted, c.morphism_from_rows(&z4o, &z2, &[vec![1]]).unwrap());
        assert!(matches!(c.lift_along_mono(&incl, &c.identity(&z4o)), Err(CategoryError::NoFactorization(_))));
        assert!(matches!(c.lift_along_mono(&c.scalar(&z4o, 2), &c.scalar(&z4o, 2)), Err(CategoryError::NotMonic(_))));
    }

    #[test]
    fn colift_detects_non_factoring_maps() {
        let c = z4();
        let (z2, z4o) = (c.cyclic(1).unwrap(), c.cyclic(2).unwrap());
        let red = c.morphism_from_rows(&z4o, &z2, &[vec![1]]).unwrap();
        assert!(matches!(c.colift_along_epi(&red, &c.identity(&z4o)), Err(CategoryError::NoFactorization(_))));
        let h = c.colift_along_epi(&red, &c.scalar(&z4o, 2)).unwrap();
        assert_eq!(h, c.morphism_from_rows(&z2, &z4o, &[vec![2]]).unwrap());
    }

    #[test]
    fn injective_extension_is_canonical() {
        let c = z4();
        let (z2, z4o) = (c.cyclic(1).unwrap(), c.cyclic(2).unwrap());
        let incl = c.morphism_from_rows(&z2, &z4o, &[vec![2]]).unwrap();
        assert_eq!(c.inj_extend(&incl, &incl).unwrap(), c.identity(&z4o));
        assert!(matches!(c.inj_extend(&c.identity(&z2), &c.identity(&z2)), Err(CategoryError::NotInjective(_))));
    }

    #[test]
    fn injective_hull_of_z2() {
        let c = z4();
        let z2 = c.cyclic(1).unwrap();
        let e = c.embed_into_injective(&z2);
        assert_eq!(e.dst(), &c.cyclic(2).unwrap());
        assert_eq!(e.matrix(), &Matrix::from_rows(1, 1, vec![2]));
        assert!(c.is_injective(&c.object([2, 2]).unwrap()));
        assert!(!c.is_injective(&c.object([1, 2]).unwrap()));
    }

    #[test]
    fn zero_rank_morphisms() {
        let c = z4();
        let a = c.object([1, 2]).unwrap();
        let z = c.zero_morphism(&c.zero_object(), &a);
        assert_eq!(z.matrix().shape(), (2, 0));
        assert_eq!(c.cokernel(&z).object, a);
        assert!(c.is_zero_object(&c.kernel(&z).object));
    }
}
