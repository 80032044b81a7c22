//! Finite-dimensional vector spaces over `F_p`, by Gaussian elimination.

use std::fmt;

use crate::arith::{Residue, ResidueRing};
use crate::category::{ensure_composable, ensure_parallel, AbelianCategory, Arrow, Biproduct, Cokernel, Kernel};
use crate::error::{CategoryError, Result};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectObject {
    p: u64,
    dim: usize,
}

impl VectObject {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl fmt::Display for VectObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 0 {
            write!(f, "0")
        } else {
            write!(f, "F_{}^{}", self.p, self.dim)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectMorphism<T> {
    src: VectObject,
    dst: VectObject,
    matrix: Matrix<T>,
}

impl<T: Residue> VectMorphism<T> {
    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }
}

impl<T: Residue> Arrow for VectMorphism<T> {
    type Object = VectObject;

    fn src(&self) -> &VectObject {
        &self.src
    }

    fn dst(&self) -> &VectObject {
        &self.dst
    }
}

/// Reduced row echelon form and its pivot columns.
pub(crate) fn rref<T: Residue>(a: &Matrix<T>, field: &ResidueRing<T>) -> (Matrix<T>, Vec<usize>) {
    let mut r = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r.cols() {
        if row == r.rows() {
            break;
        }
        let Some(pr) = (row..r.rows()).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        r.swap_rows(row, pr);
        let inv = field.inverse(r[(row, col)]).expect("nonzero element of a field");
        r.scale_row(row, inv, field);
        for i in 0..r.rows() {
            if i != row && !r[(i, col)].is_zero() {
                let factor = field.neg(r[(i, col)]);
                r.add_row_multiple(i, row, factor, field);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (r, pivots)
}

/// Null-space basis read off the reduced echelon form, one column per free
/// variable in increasing order.
fn null_basis<T: Residue>(a: &Matrix<T>, field: &ResidueRing<T>) -> Matrix<T> {
    let n = a.cols();
    let (r, pivots) = rref(a, field);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let columns: Vec<Vec<T>> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![T::zero(); n];
            v[fc] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(r[(row, fc)]);
            }
            v
        })
        .collect();
    Matrix::from_columns(n, &columns)
}

/// Solution of `A x = b` with free variables zero.
fn solve_canonical<T: Residue>(a: &Matrix<T>, b: &[T], field: &ResidueRing<T>) -> Option<Vec<T>> {
    let n = a.cols();
    let aug = a.hstack(&Matrix::from_columns(a.rows(), &[b.to_vec()]));
    let (r, pivots) = rref(&aug, field);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(row, n)];
    }
    Some(x)
}

/// The category of finite-dimensional `F_p`-vector spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VectSpaces<T> {
    field: ResidueRing<T>,
}

impl<T: Residue> VectSpaces<T> {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self { field: ResidueRing::new(p, 1)? })
    }

    pub fn field(&self) -> &ResidueRing<T> {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p().to_u64().expect("prime fits u64")
    }

    pub fn space(&self, dim: usize) -> VectObject {
        VectObject { p: self.p(), dim }
    }

    fn check_object(&self, a: &VectObject) -> Result<()> {
        if a.p != self.p() {
            return Err(CategoryError::BackendMismatch(format!(
                "space over F_{} used in the category of F_{}-spaces",
                a.p,
                self.p()
            )));
        }
        Ok(())
    }

    pub fn morphism(&self, src: &VectObject, dst: &VectObject, matrix: Matrix<T>) -> Result<VectMorphism<T>> {
        self.check_object(src)?;
        self.check_object(dst)?;
        if matrix.shape() != (dst.dim, src.dim) {
            return Err(CategoryError::ShapeMismatch(format!(
                "matrix is {}x{} but {} -> {} needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                src,
                dst,
                dst.dim,
                src.dim
            )));
        }
        Ok(self.raw(src, dst, matrix))
    }

    pub fn morphism_from_rows(&self, src: &VectObject, dst: &VectObject, rows: &[Vec<i64>]) -> Result<VectMorphism<T>> {
        let nested: Vec<Vec<T>> = rows.iter().map(|r| r.iter().map(|&x| self.field.reduce_i64(x)).collect()).collect();
        let matrix = Matrix::from_nested(&nested, src.dim)
            .ok_or_else(|| CategoryError::ShapeMismatch("ragged matrix rows".into()))?;
        self.morphism(src, dst, matrix)
    }

    pub fn scalar(&self, a: &VectObject, c: i64) -> VectMorphism<T> {
        let c = self.field.reduce_i64(c);
        self.raw(a, a, Matrix::identity(a.dim).scale(c, &self.field))
    }

    fn raw(&self, src: &VectObject, dst: &VectObject, m: Matrix<T>) -> VectMorphism<T> {
        let matrix = m.map_rows(|_, x| self.field.reduce(x));
        VectMorphism { src: src.clone(), dst: dst.clone(), matrix }
    }

    fn rank(&self, m: &Matrix<T>) -> usize {
        rref(m, &self.field).1.len()
    }

    fn blocks(&self, f: &Matrix<T>, g: &Matrix<T>, vertical: bool) -> Matrix<T> {
        if vertical {
            f.transpose().hstack(&g.transpose()).transpose()
        } else {
            f.hstack(g)
        }
    }
}

impl<T: Residue> AbelianCategory for VectSpaces<T> {
    type Object = VectObject;
    type Morphism = VectMorphism<T>;

    fn zero_object(&self) -> VectObject {
        self.space(0)
    }

    fn is_zero_object(&self, a: &VectObject) -> bool {
        a.dim == 0
    }

    fn identity(&self, a: &VectObject) -> VectMorphism<T> {
        self.raw(a, a, Matrix::identity(a.dim))
    }

    fn zero_morphism(&self, a: &VectObject, b: &VectObject) -> VectMorphism<T> {
        self.raw(a, b, Matrix::zeros(b.dim, a.dim))
    }

    fn compose(&self, g: &VectMorphism<T>, f: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        ensure_composable(g, f)?;
        Ok(self.raw(&f.src, &g.dst, g.matrix.mul(&f.matrix, &self.field)))
    }

    fn add(&self, f: &VectMorphism<T>, g: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        ensure_parallel(f, g)?;
        Ok(self.raw(&f.src, &f.dst, f.matrix.add(&g.matrix, &self.field)))
    }

    fn neg(&self, f: &VectMorphism<T>) -> VectMorphism<T> {
        self.raw(&f.src, &f.dst, f.matrix.neg(&self.field))
    }

    fn biproduct(&self, a: &VectObject, b: &VectObject) -> Result<Biproduct<VectObject, VectMorphism<T>>> {
        self.check_object(a)?;
        self.check_object(b)?;
        let obj = self.space(a.dim + b.dim);
        let i1 = Matrix::from_fn(obj.dim, a.dim, |r, c| if r == c { T::one() } else { T::zero() });
        let i2 = Matrix::from_fn(obj.dim, b.dim, |r, c| if r == c + a.dim { T::one() } else { T::zero() });
        Ok(Biproduct {
            p1: self.raw(&obj, a, i1.transpose()),
            p2: self.raw(&obj, b, i2.transpose()),
            i1: self.raw(a, &obj, i1),
            i2: self.raw(b, &obj, i2),
            obj,
        })
    }

    fn product_universal(&self, f: &VectMorphism<T>, g: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        if f.src != g.src {
            return Err(CategoryError::ShapeMismatch(format!(
                "product pairing needs a common source, got {} and {}",
                f.src, g.src
            )));
        }
        let obj = self.space(f.dst.dim + g.dst.dim);
        Ok(self.raw(&f.src, &obj, self.blocks(&f.matrix, &g.matrix, true)))
    }

    fn coproduct_universal(&self, f: &VectMorphism<T>, g: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        if f.dst != g.dst {
            return Err(CategoryError::ShapeMismatch(format!(
                "coproduct copairing needs a common target, got {} and {}",
                f.dst, g.dst
            )));
        }
        let obj = self.space(f.src.dim + g.src.dim);
        Ok(self.raw(&obj, &f.dst, self.blocks(&f.matrix, &g.matrix, false)))
    }

    fn kernel(&self, f: &VectMorphism<T>) -> Kernel<VectObject, VectMorphism<T>> {
        let basis = null_basis(&f.matrix, &self.field);
        let object = self.space(basis.cols());
        Kernel { inclusion: self.raw(&object, &f.src, basis), object }
    }

    fn cokernel(&self, f: &VectMorphism<T>) -> Cokernel<VectObject, VectMorphism<T>> {
        // coordinates along the non-pivot standard vectors, which span a
        // complement of the column space
        let (r, pivots) = rref(&f.matrix.transpose(), &self.field);
        let n = f.dst.dim;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let proj = Matrix::from_fn(free.len(), n, |row, col| {
            if col == free[row] {
                T::one()
            } else if let Some(pi) = pivots.iter().position(|&pc| pc == col) {
                self.field.neg(r[(pi, free[row])])
            } else {
                T::zero()
            }
        });
        let object = self.space(free.len());
        Cokernel { projection: self.raw(&f.dst, &object, proj), object }
    }

    fn lift_along_mono(&self, m: &VectMorphism<T>, g: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        if m.dst != g.dst {
            return Err(CategoryError::ShapeMismatch(format!(
                "cannot lift a map into {} along a monic into {}",
                g.dst, m.dst
            )));
        }
        if self.rank(&m.matrix) != m.src.dim {
            return Err(CategoryError::NotMonic(format!("{} -> {}: {}", m.src, m.dst, m.matrix)));
        }
        let mut columns = Vec::with_capacity(g.src.dim);
        for j in 0..g.src.dim {
            columns.push(solve_canonical(&m.matrix, &g.matrix.column(j), &self.field).ok_or_else(|| {
                CategoryError::NoFactorization(format!(
                    "column {j} of {} is not in the image of {}",
                    g.matrix, m.matrix
                ))
            })?);
        }
        Ok(self.raw(&g.src, &m.src, Matrix::from_columns(m.src.dim, &columns)))
    }

    fn colift_along_epi(&self, e: &VectMorphism<T>, g: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        if e.src != g.src {
            return Err(CategoryError::ShapeMismatch(format!(
                "cannot colift a map out of {} along an epi out of {}",
                g.src, e.src
            )));
        }
        if self.rank(&e.matrix) != e.dst.dim {
            return Err(CategoryError::NotEpi(format!("{} -> {}: {}", e.src, e.dst, e.matrix)));
        }
        // h e = g  <=>  e^T h^T = g^T
        let et = e.matrix.transpose();
        let mut rows = Vec::with_capacity(g.dst.dim);
        for i in 0..g.dst.dim {
            rows.push(solve_canonical(&et, g.matrix.row(i), &self.field).ok_or_else(|| {
                CategoryError::NoFactorization(format!("{} does not vanish on the kernel of {}", g.matrix, e.matrix))
            })?);
        }
        let h = Matrix::from_nested(&rows, e.dst.dim).expect("rectangular");
        Ok(self.raw(&e.dst, &g.dst, h))
    }

    fn is_injective(&self, _a: &VectObject) -> bool {
        true
    }

    fn embed_into_injective(&self, a: &VectObject) -> VectMorphism<T> {
        self.identity(a)
    }

    fn inj_extend(&self, m: &VectMorphism<T>, alpha: &VectMorphism<T>) -> Result<VectMorphism<T>> {
        if m.src != alpha.src {
            return Err(CategoryError::ShapeMismatch(format!(
                "extension needs a common source, got {} and {}",
                m.src, alpha.src
            )));
        }
        if self.rank(&m.matrix) != m.src.dim {
            return Err(CategoryError::NotMonic(format!("{} -> {}: {}", m.src, m.dst, m.matrix)));
        }
        // β m = α  <=>  m^T β^T = α^T
        let mt = m.matrix.transpose();
        let mut rows = Vec::with_capacity(alpha.dst.dim);
        for i in 0..alpha.dst.dim {
            rows.push(
                solve_canonical(&mt, alpha.matrix.row(i), &self.field)
                    .ok_or_else(|| CategoryError::Invariant("monic over a field has a left inverse".into()))?,
            );
        }
        let beta = Matrix::from_nested(&rows, m.dst.dim).expect("rectangular");
        Ok(self.raw(&m.dst, &alpha.dst, beta))
    }
}
