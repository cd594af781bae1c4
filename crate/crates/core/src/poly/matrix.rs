//! Dense matrices over an exact field and their null spaces.

use std::fmt::Debug;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::{Cyclotomic, CyclotomicField};

/// An exact field. `Ctx` carries whatever is needed to build constants
/// (the conductor for cyclotomic fields, nothing for `Q`).
pub trait Field: Clone + PartialEq + Debug {
    type Ctx: Clone + Debug;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for BigRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn from_int(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Cyclotomic {
    type Ctx = Arc<CyclotomicField>;

    fn zero(ctx: &Self::Ctx) -> Self {
        Cyclotomic::zero(ctx.conductor())
    }
    fn one(ctx: &Self::Ctx) -> Self {
        Cyclotomic::one(ctx.conductor())
    }
    fn from_int(ctx: &Self::Ctx, n: &BigInt) -> Self {
        Cyclotomic::from_integer(ctx.conductor(), n.clone())
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        Cyclotomic::div(self, other)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
}

/// Row-major dense matrix over `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    ctx: F::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type RationalMatrix = Matrix<BigRational>;
pub type CyclotomicMatrix = Matrix<Cyclotomic>;

impl<F: Field> Matrix<F> {
    pub fn zeros(ctx: F::Ctx, rows: usize, cols: usize) -> Self {
        let data = vec![F::zero(&ctx); rows * cols];
        Matrix {
            ctx,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(ctx: F::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one(&m.ctx);
        }
        m
    }

    pub fn from_rows(ctx: F::Ctx, rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            ctx,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from integer entries.
    pub fn from_ints(ctx: F::Ctx, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let data = entries
            .iter()
            .map(|&x| F::from_int(&ctx, &BigInt::from(x)))
            .collect();
        Matrix {
            ctx,
            rows,
            cols,
            data,
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.ctx.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(&self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Matrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Matrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(&self.ctx), |acc, i| acc.add(self.get(i, i)))
    }

    /// Maps entries into another field.
    pub fn map<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            ctx,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Fraction-free (Bareiss) forward elimination with first-nonzero
    /// pivoting. Returns the echelon form and the pivot columns.
    fn echelon(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = F::one(&self.ctx);
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let pivot = a.get(r, c).clone();
            for i in r + 1..a.rows {
                let factor = a.get(i, c).clone();
                for j in c..a.cols {
                    let v = pivot
                        .mul(a.get(i, j))
                        .sub(&factor.mul(a.get(r, j)))
                        .div(&prev);
                    a.set(i, j, v);
                }
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Exact basis of the right null space `{ v : M v = 0 }`, one vector per
    /// free column in increasing column order. Empty iff full column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (ech, pivots) = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(&self.ctx); self.cols];
                x[f] = F::one(&self.ctx);
                for (r, &pc) in pivots.iter().enumerate().rev() {
                    let s = (pc + 1..self.cols).fold(F::zero(&self.ctx), |acc, j| {
                        acc.add(&ech.get(r, j).mul(&x[j]))
                    });
                    x[pc] = s.neg().div(ech.get(r, pc));
                }
                x
            })
            .collect()
    }
}

impl RationalMatrix {
    /// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier
    /// recursion; coefficients low to high.
    pub fn char_poly(&self) -> Vec<BigRational> {
        assert_eq!(self.rows, self.cols, "char_poly needs a square matrix");
        let n = self.rows;
        let mut coeffs = vec![<BigRational as Zero>::zero(); n + 1];
        coeffs[n] = <BigRational as One>::one();
        let mut m = Matrix::zeros((), n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            m = next;
            let tr = self.mul(&m).trace();
            coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
        }
        coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(RationalMatrix::identity((), 3).kernel_basis().is_empty());
        let z = RationalMatrix::zeros((), 2, 2);
        assert_eq!(z.kernel_basis(), vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    }

    #[test]
    fn kernel_of_swap_minus_zeta() {
        // (12) acting on Q^2, ζ = -1 for e = 2
        let ctx = CyclotomicField::get(2);
        let swap = CyclotomicMatrix::from_ints(ctx.clone(), 2, 2, &[0, 1, 1, 0]);
        let zeta = Cyclotomic::root_power(2, 1);
        let m = swap.sub(&CyclotomicMatrix::identity(ctx, 2).scale(&zeta));
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        // proportional to (1, -1)
        assert_eq!(v[0].add(&v[1]), Cyclotomic::zero(2));
        assert!(!v[0].is_zero());
    }

    #[test]
    fn char_poly_of_rotation() {
        let rot = RationalMatrix::from_ints((), 2, 2, &[0, -1, 1, 0]);
        assert_eq!(rot.char_poly(), vec![q(1), q(0), q(1)]);
        let m = RationalMatrix::from_ints((), 3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 5]);
        // (x-2)(x-3)(x-5)
        assert_eq!(m.char_poly(), vec![q(-30), q(31), q(-10), q(1)]);
    }

    fn cyclo_matrix() -> impl Strategy<Value = (usize, usize, usize, Vec<(i64, i64)>)> {
        (
            1usize..5,
            1usize..5,
            prop::sample::select(vec![1usize, 3, 4, 5, 8]),
        )
            .prop_flat_map(|(r, c, e)| {
                proptest::collection::vec((-2i64..=2, 0i64..8), r * c)
                    .prop_map(move |v| (r, c, e, v))
            })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated_and_rank_nullity_holds((r, c, e, entries) in cyclo_matrix()) {
            let ctx = CyclotomicField::get(e);
            let rows = (0..r)
                .map(|i| {
                    (0..c)
                        .map(|j| {
                            let (a, k) = entries[i * c + j];
                            Cyclotomic::root_power(e, k).scale(&q(a))
                        })
                        .collect()
                })
                .collect();
            let m = CyclotomicMatrix::from_rows(ctx, rows);
            let ker = m.kernel_basis();
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(Cyclotomic::is_zero));
            }
            prop_assert_eq!(m.rank() + ker.len(), c);
        }
    }
}
