//! Finite-dimensional associative unital algebras given by structure constants.
//!
//! Besides the raw multiplication table an algebra may carry a [`PeirceData`]
//! record. It is present exactly when the basis consists of a complete set of
//! primitive orthogonal idempotents followed by radical elements, each lying in
//! a single Peirce component `e_u A e_v`. Quiver algebras and the output of
//! [`basic_algebra`] always carry it; the homological code requires it.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, unit, zero_vec, Mat, Subspace};
use crate::field::{FieldSpec, Scalar};
use crate::quivalg::QuiverPresentation;

mod split;
mod structure;

pub use split::{primitive_central_idempotents, SplitBlock};
pub use structure::{basic_algebra, quotient_algebra, radical, simples, SimpleDescriptor};

/// Sparse expansion of a vector in a basis: `(index, coefficient)` pairs.
pub type Sparse = Vec<(usize, Scalar)>;

/// Idempotent/Peirce bookkeeping for a basic algebra in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceData {
    pub vertex_labels: Vec<String>,
    /// Basis index of the primitive idempotent of each vertex.
    pub idempotents: Vec<usize>,
    /// For each basis element `b`, the pair `(u, v)` with `b = e_u b e_v`.
    pub slot: Vec<(usize, usize)>,
}

impl PeirceData {
    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_idempotent(&self, b: usize) -> bool {
        self.idempotents.contains(&b)
    }
}

#[derive(Clone, Debug)]
pub struct FdAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    table: Vec<Vec<Sparse>>,
    unit: Vec<Scalar>,
    peirce: Option<PeirceData>,
    provenance: Option<Box<QuiverPresentation>>,
}

impl PartialEq for FdAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.table == o.table && self.unit == o.unit
    }
}

impl FdAlgebra {
    /// Build from a dense table: `products[i][j]` is the coordinate vector of `b_i b_j`.
    /// Associativity and unitality are verified.
    pub fn from_table(
        field: FieldSpec,
        labels: Vec<String>,
        products: &[Vec<Vec<Scalar>>],
        unit: Vec<Scalar>,
    ) -> Result<FdAlgebra> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidStructure("algebra must have dimension at least 1".into()));
        }
        if products.len() != n || products.iter().any(|r| r.len() != n) || unit.len() != n {
            return Err(Error::DimensionMismatch("structure-constant table shape".into()));
        }
        let table = products
            .iter()
            .map(|row| row.iter().map(|v| to_sparse(v)).collect())
            .collect();
        let a = FdAlgebra {
            field,
            labels,
            table,
            unit,
            peirce: None,
            provenance: None,
        };
        a.check_axioms()?;
        Ok(a)
    }

    pub(crate) fn from_sparse_unchecked(
        field: FieldSpec,
        labels: Vec<String>,
        table: Vec<Vec<Sparse>>,
        unit: Vec<Scalar>,
    ) -> FdAlgebra {
        FdAlgebra {
            field,
            labels,
            table,
            unit,
            peirce: None,
            provenance: None,
        }
    }

    pub(crate) fn with_peirce(mut self, p: PeirceData) -> FdAlgebra {
        self.peirce = Some(p);
        self
    }

    pub(crate) fn with_provenance(mut self, p: QuiverPresentation) -> FdAlgebra {
        self.provenance = Some(Box::new(p));
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }
    pub fn peirce(&self) -> Option<&PeirceData> {
        self.peirce.as_ref()
    }
    pub fn provenance(&self) -> Option<&QuiverPresentation> {
        self.provenance.as_deref()
    }

    /// `b_i b_j` as a sparse vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.dim());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.table[i][j] {
                    out[*k].add_mul(&ab, c);
                }
            }
        }
        out
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        unit(self.field, self.dim(), i)
    }

    pub fn zero_elem(&self) -> Vec<Scalar> {
        zero_vec(self.field, self.dim())
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vec(j))).collect();
        Mat::from_cols(self.field, self.dim(), &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Mat {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(&self.basis_vec(j), x)).collect();
        Mat::from_cols(self.field, self.dim(), &cols)
    }

    pub fn pow(&self, x: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Verify associativity on all basis triples and the unit axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = sparse_to_dense(self.field, n, &self.table[i][j]);
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_vec(k));
                    let jk = sparse_to_dense(self.field, n, &self.table[j][k]);
                    let right = self.mul(&self.basis_vec(i), &jk);
                    if left != right {
                        return Err(Error::InvalidStructure(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let b = self.basis_vec(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidStructure(format!(
                    "unit axiom fails on {}",
                    self.labels[i]
                )));
            }
        }
        Ok(())
    }

    /// Span of all products `x y` with `x ∈ u`, `y ∈ v`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in u.basis() {
            for y in v.basis() {
                let p = self.mul(x, y);
                if !is_zero_vec(&p) {
                    vecs.push(p);
                }
            }
        }
        Subspace::from_vectors(self.field, self.dim(), &vecs)
    }

    /// Dense structure constants `products[i][j]`.
    pub fn dense_table(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim();
        self.table
            .iter()
            .map(|row| row.iter().map(|s| sparse_to_dense(self.field, n, s)).collect())
            .collect()
    }

    /// Linear map given on basis images is an algebra homomorphism `self -> target`?
    /// `images` is a `target.dim() x self.dim()` matrix. Returns the failing pair on error.
    pub fn check_morphism(&self, target: &FdAlgebra, images: &Mat) -> Result<()> {
        if images.rows() != target.dim() || images.cols() != self.dim() {
            return Err(Error::DimensionMismatch("morphism matrix shape".into()));
        }
        if images.apply(&self.unit) != target.unit {
            return Err(Error::NotAMorphism("unit is not preserved".into()));
        }
        for i in 0..self.dim() {
            let fi = images.col(i);
            for j in 0..self.dim() {
                let fj = images.col(j);
                let lhs = images.apply(&sparse_to_dense(self.field, self.dim(), &self.table[i][j]));
                if lhs != target.mul(&fi, &fj) {
                    return Err(Error::NotAMorphism(format!(
                        "f({} {}) != f({}) f({})",
                        self.labels[i], self.labels[j], self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Product algebra `self × o` (block-diagonal structure constants).
    pub fn product(&self, o: &FdAlgebra) -> Result<FdAlgebra> {
        if self.field != o.field {
            return Err(Error::DimensionMismatch("fields differ".into()));
        }
        let (n, m) = (self.dim(), o.dim());
        let mut table = vec![vec![Vec::new(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = self.table[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                table[n + i][n + j] = o.table[i][j].iter().map(|(k, c)| (n + k, c.clone())).collect();
            }
        }
        let mut unit = self.unit.clone();
        unit.extend(o.unit.iter().cloned());
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("{l}.0")).collect();
        labels.extend(o.labels.iter().map(|l| format!("{l}.1")));
        Ok(FdAlgebra::from_sparse_unchecked(self.field, labels, table, unit))
    }

    /// Subalgebra/corner algebra on the span of `basis` (closed under products, containing `unit`).
    pub(crate) fn restrict_to(
        &self,
        labels: Vec<String>,
        basis: &[Vec<Scalar>],
        unit_elem: &[Scalar],
    ) -> Result<FdAlgebra> {
        let sub = Mat::from_cols(self.field, self.dim(), basis);
        let k = basis.len();
        let mut table = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in 0..k {
                let p = self.mul(&basis[i], &basis[j]);
                let c = sub
                    .solve(&p)
                    .ok_or_else(|| Error::Inconsistent("product leaves the subspace".into()))?;
                table[i][j] = to_sparse(&c);
            }
        }
        let u = sub
            .solve(unit_elem)
            .ok_or_else(|| Error::Inconsistent("unit not in subspace".into()))?;
        Ok(FdAlgebra::from_sparse_unchecked(self.field, labels, table, u))
    }

    pub fn relabel(mut self, labels: Vec<String>) -> FdAlgebra {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    /// `M_n(k)` with basis of matrix units `e_ij` (row-major order).
    pub fn matrix_algebra(field: FieldSpec, n: usize) -> FdAlgebra {
        let dim = n * n;
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    table[i * n + j][j * n + l] = vec![(i * n + l, field.one())];
                }
            }
        }
        let mut unit = zero_vec(field, dim);
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        let labels = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
            .collect();
        FdAlgebra::from_sparse_unchecked(field, labels, table, unit)
    }

    /// `k[x]/(f)` for a monic polynomial given by its coefficients `f_0 .. f_{n-1}` (lowest first),
    /// basis `1, x, .., x^{n-1}`.
    pub fn truncated_polynomial(field: FieldSpec, lower_coeffs: &[i64]) -> FdAlgebra {
        let n = lower_coeffs.len();
        assert!(n >= 1);
        // x^n = -Σ f_i x^i
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        for k in 0..(2 * n - 1) {
            if k < n {
                powers.push(unit(field, n, k));
            } else {
                let prev = powers[k - 1].clone();
                let mut v = zero_vec(field, n);
                for i in 1..n {
                    v[i] = prev[i - 1].clone();
                }
                let top = prev[n - 1].clone();
                for (i, f) in lower_coeffs.iter().enumerate() {
                    v[i].add_mul(&top, &field.from_i64(-f));
                }
                powers.push(v);
            }
        }
        let table = (0..n)
            .map(|i| (0..n).map(|j| to_sparse(&powers[i + j])).collect())
            .collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => String::from("1"),
                1 => String::from("x"),
                _ => format!("x^{i}"),
            })
            .collect();
        FdAlgebra::from_sparse_unchecked(field, labels, table, unit(field, n, 0))
    }

    /// Upper-triangular `2 x 2` matrices, basis `e11, e12, e22`.
    pub fn upper_triangular_2(field: FieldSpec) -> FdAlgebra {
        let m = FdAlgebra::matrix_algebra(field, 2);
        let basis = [unit(field, 4, 0), unit(field, 4, 1), unit(field, 4, 3)];
        m.restrict_to(
            vec!["e11".into(), "e12".into(), "e22".into()],
            &basis,
            m.unit(),
        )
        .expect("upper triangular matrices form a subalgebra")
    }
}

pub fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense(field: FieldSpec, n: usize, s: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    for (i, c) in s {
        v[*i] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_algebras_satisfy_axioms() {
        let q = FieldSpec::Rationals;
        FdAlgebra::matrix_algebra(q, 2).check_axioms().unwrap();
        FdAlgebra::truncated_polynomial(q, &[0, 0, 0]).check_axioms().unwrap();
        FdAlgebra::truncated_polynomial(q, &[0, -1]).check_axioms().unwrap();
        FdAlgebra::upper_triangular_2(q).check_axioms().unwrap();
        let k = FdAlgebra::truncated_polynomial(q, &[0]);
        k.product(&FdAlgebra::matrix_algebra(q, 2)).unwrap().check_axioms().unwrap();
    }

    #[test]
    fn associativity_failure_is_reported() {
        let q = FieldSpec::Rationals;
        let z = q.zero();
        let o = q.one();
        // basis {1, x} with x*x = 1 + x but 1 acting wrongly on x
        let table = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]],
            vec![vec![z.clone(), o.clone()], vec![o.clone(), o.clone()]],
        ];
        let r = FdAlgebra::from_table(q, vec!["1".into(), "x".into()], &table, vec![o, z]);
        assert!(matches!(r, Err(Error::InvalidStructure(_))));
    }
}
