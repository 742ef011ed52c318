//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Matrices act on column vectors: a map `k^n -> k^m` is an `m x n` [`Mat`].
//! Subspaces are stored by a basis in reduced row echelon form, so two equal
//! subspaces always compare equal structurally.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from row vectors; all rows must share the length `cols`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.iter().cloned());
        }
        Mat {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_cols(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Mat {
        assert_eq!(entries.len(), rows * cols);
        Mat {
            field,
            rows,
            cols,
            data: entries.iter().map(|&x| field.from_i64(x)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out = Mat::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.add_mul(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Stack `o` below `self`.
    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Mat {
            field: self.field,
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).inv();
            for j in c..cols {
                let x = self.get(r, j).mul(&inv);
                self.set(r, j, x);
            }
            let pivot_row: Vec<Scalar> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).neg();
                if f.is_zero() {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        self.data[i * cols + c + off].add_mul(&f, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, f).neg();
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, &basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, &self.transpose().row_vecs())
    }

    /// Kronecker product `self ⊗ o`; index `(i, k)` maps to `i * o.rows + k`.
    pub fn tensor(&self, o: &Mat) -> Mat {
        let mut t = Mat::zeros(self.field, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        t.set(i * o.rows + k, j * o.cols + l, a.mul(o.get(k, l)));
                    }
                }
            }
        }
        t
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Mat::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// A linear subspace of `k^ambient`, canonically represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace::from_vectors(field, ambient, &Mat::identity(field, ambient).row_vecs())
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(field: FieldSpec, ambient: usize, vecs: &[Vec<Scalar>]) -> Subspace {
        let m = Mat::from_rows(field, ambient, vecs);
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: FieldSpec, ambient: usize, idx: &[usize]) -> Subspace {
        let vecs: Vec<Vec<Scalar>> = idx.iter().map(|&i| unit(field, ambient, i)).collect();
        Subspace::from_vectors(field, ambient, &vecs)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_mat(&self) -> Mat {
        Mat::from_rows(self.field, self.ambient, &self.basis)
    }

    /// Subtract the echelon basis from `v`; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].neg();
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    o.add_mul(&c, x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis (valid when `v` is in the subspace).
    pub fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                o.add_mul(c, x);
            }
        }
        out
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient, "ambient dimension mismatch");
        let mut vecs = self.basis.clone();
        vecs.extend(o.basis.iter().cloned());
        Subspace::from_vectors(self.field, self.ambient, &vecs)
    }

    /// Functionals vanishing on the subspace, as a subspace of the dual `k^ambient`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis_mat().kernel()
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.ambient, o.ambient, "ambient dimension mismatch");
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        let ann = o.annihilator();
        if ann.is_zero() {
            return self.clone();
        }
        // x = c^T B with ann * x = 0  <=>  (ann * B^T) c = 0
        let cond = ann.basis_mat().mul(&self.basis_mat().transpose());
        let ks = cond.kernel();
        let vecs: Vec<Vec<Scalar>> = ks.basis.iter().map(|c| self.combine(c)).collect();
        Subspace::from_vectors(self.field, self.ambient, &vecs)
    }

    /// `{v : f v ∈ w}` for `f : k^n -> k^m` and `w ⊆ k^m`.
    pub fn preimage(f: &Mat, w: &Subspace) -> Subspace {
        assert_eq!(f.rows(), w.ambient, "preimage dimension mismatch");
        let ann = w.annihilator();
        if ann.is_zero() {
            return Subspace::full(f.field(), f.cols());
        }
        ann.basis_mat().mul(f).kernel()
    }

    pub fn image_under(&self, f: &Mat) -> Subspace {
        assert_eq!(f.cols(), self.ambient, "image dimension mismatch");
        let vecs: Vec<Vec<Scalar>> = self.basis.iter().map(|v| f.apply(v)).collect();
        Subspace::from_vectors(self.field, f.rows(), &vecs)
    }

    /// Standard basis vectors completing this subspace to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Vectors from `candidates` (in order) that extend this subspace's basis, greedily.
    pub fn extend_with(&self, candidates: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for c in candidates {
            if acc.insert(c) {
                chosen.push(c.clone());
            }
        }
        chosen
    }

    /// Adds `v` to the span, keeping the echelon form; false if `v` was already contained.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for row in self.basis.iter_mut() {
            let f = row[p].neg();
            if f.is_zero() {
                continue;
            }
            for (o, x) in row.iter_mut().zip(&r) {
                if !x.is_zero() {
                    o.add_mul(&f, x);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }
}

pub fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            a.add_mul(c, x);
        }
    }
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}
