//! Finite-dimensional coalgebras by structure constants.
//!
//! `Δ(c_k) = Σ d_k^{ij} c_i ⊗ c_j` is stored sparsely. Functionals on a coalgebra are
//! coordinate vectors in the dual basis, so pairing is the dot product.

mod dagger;
mod duality;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, unit, Mat, Subspace};
use crate::fdalg::{primitive_central_idempotents, radical, to_sparse, FdAlgebra};
use crate::field::{FieldSpec, Scalar};
use crate::quivalg::{enumerate_paths, Path, Quiver};

pub use dagger::{
    compare_dagger, dagger, double_dual_check, loewy_length, radical_layers, oracle_dagger, proper_check, segal_compare, CheckItem,
    CheckReport, DaggerResult, ProperReport,
};
pub use duality::{
    corad_preservation_check, dual_morphism, kostant_exhaustive, kostant_transpose, measuring_check,
    simple_subcoalgebras, zariski_closed, KostantCensus, PreservationReport,
};

/// `(i, j, coefficient)` terms of `Δ` of one basis element.
pub type Coproduct = Vec<(usize, usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Coalgebra {
    field: FieldSpec,
    labels: Vec<String>,
    delta: Vec<Coproduct>,
    counit: Vec<Scalar>,
    coradical_hint: Option<Subspace>,
}

impl PartialEq for Coalgebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.counit == o.counit && self.delta == o.delta
    }
}

fn add_term(map: &mut BTreeMap<(usize, usize), Scalar>, key: (usize, usize), c: Scalar) {
    let e = map.entry(key).or_insert_with(|| c.field().zero());
    *e = e.add(&c);
}

impl Coalgebra {
    pub fn new(field: FieldSpec, labels: Vec<String>, delta: Vec<Coproduct>, counit: Vec<Scalar>) -> Result<Coalgebra> {
        let c = Coalgebra::from_parts(field, labels, delta, counit);
        c.check_axioms()?;
        Ok(c)
    }

    pub(crate) fn from_parts(field: FieldSpec, labels: Vec<String>, delta: Vec<Coproduct>, counit: Vec<Scalar>) -> Coalgebra {
        let delta = delta
            .into_iter()
            .map(|terms| {
                let mut m = BTreeMap::new();
                for (i, j, c) in terms {
                    add_term(&mut m, (i, j), c);
                }
                m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect()
            })
            .collect();
        Coalgebra {
            field,
            labels,
            delta,
            counit,
            coradical_hint: None,
        }
    }

    pub(crate) fn with_coradical_hint(mut self, s: Subspace) -> Coalgebra {
        self.coradical_hint = Some(s);
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn delta(&self, k: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[k]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `Δ(x)` as a sparse tensor.
    pub fn delta_vec(&self, x: &[Scalar]) -> BTreeMap<(usize, usize), Scalar> {
        let mut m = BTreeMap::new();
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, j, d) in &self.delta[k] {
                add_term(&mut m, (*i, *j), c.mul(d));
            }
        }
        m.retain(|_, c| !c.is_zero());
        m
    }

    /// Coassociativity and both counit laws on every basis element.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        if self.delta.len() != n || self.labels.len() != n {
            return Err(Error::DimensionMismatch("coalgebra data has inconsistent sizes".into()));
        }
        for k in 0..n {
            if self.delta[k].iter().any(|(i, j, _)| *i >= n || *j >= n) {
                return Err(Error::DimensionMismatch(format!("Δ({}) has an index out of range", self.labels[k])));
            }
            let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (i, j, c) in &self.delta[k] {
                for (a, b, d) in &self.delta[*i] {
                    let e = left.entry((*a, *b, *j)).or_insert_with(|| self.field.zero());
                    *e = e.add(&c.mul(d));
                }
                for (a, b, d) in &self.delta[*j] {
                    let e = right.entry((*i, *a, *b)).or_insert_with(|| self.field.zero());
                    *e = e.add(&c.mul(d));
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            if left != right {
                return Err(Error::InvalidStructure(format!(
                    "coassociativity fails on {}",
                    self.labels[k]
                )));
            }
            let mut l = vec![self.field.zero(); n];
            let mut r = vec![self.field.zero(); n];
            for (i, j, c) in &self.delta[k] {
                l[*j].add_mul(c, &self.counit[*i]);
                r[*i].add_mul(c, &self.counit[*j]);
            }
            let e = unit(self.field, n, k);
            if l != e || r != e {
                return Err(Error::InvalidStructure(format!("counit law fails on {}", self.labels[k])));
            }
        }
        Ok(())
    }

    /// `x ↦ (φ ⊗ id) Δ x`.
    pub fn left_contract(&self, phi: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field, n, n);
        for k in 0..n {
            for (i, j, c) in &self.delta[k] {
                if !phi[*i].is_zero() {
                    let mut e = m.get(*j, k).clone();
                    e.add_mul(c, &phi[*i]);
                    m.set(*j, k, e);
                }
            }
        }
        m
    }

    /// `x ↦ (id ⊗ φ) Δ x`.
    pub fn right_contract(&self, phi: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(self.field, n, n);
        for k in 0..n {
            for (i, j, c) in &self.delta[k] {
                if !phi[*j].is_zero() {
                    let mut e = m.get(*i, k).clone();
                    e.add_mul(c, &phi[*j]);
                    m.set(*i, k, e);
                }
            }
        }
        m
    }

    pub fn is_subcoalgebra(&self, s: &Subspace) -> bool {
        let q = s.annihilator();
        s.basis().iter().all(|x| {
            q.basis().iter().all(|phi| {
                is_zero_vec(&self.left_contract(phi).apply(x)) && is_zero_vec(&self.right_contract(phi).apply(x))
            })
        })
    }

    /// The subcoalgebra on `s`, in the echelon basis of `s`.
    pub fn restrict(&self, s: &Subspace, labels: Vec<String>) -> Result<Coalgebra> {
        let piv = s.pivots();
        let pos: BTreeMap<usize, usize> = piv.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let mut delta = Vec::new();
        for x in s.basis() {
            let dx = self.delta_vec(x);
            let mut terms = Vec::new();
            for ((i, j), c) in &dx {
                if let (Some(&a), Some(&b)) = (pos.get(i), pos.get(j)) {
                    terms.push((a, b, c.clone()));
                }
            }
            // verify Δx is exactly Σ c_ab x_a ⊗ x_b
            let mut rebuilt: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (a, b, c) in &terms {
                for (i, xi) in s.basis()[*a].iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, xj) in s.basis()[*b].iter().enumerate() {
                        if !xj.is_zero() {
                            add_term(&mut rebuilt, (i, j), c.mul(xi).mul(xj));
                        }
                    }
                }
            }
            rebuilt.retain(|_, c| !c.is_zero());
            if rebuilt != dx {
                return Err(Error::InvalidStructure("subspace is not a subcoalgebra".into()));
            }
            delta.push(terms);
        }
        let counit = s
            .basis()
            .iter()
            .map(|x| {
                let mut e = self.field.zero();
                for (a, b) in x.iter().zip(&self.counit) {
                    e.add_mul(a, b);
                }
                e
            })
            .collect();
        let mut out = Coalgebra::from_parts(self.field, labels, delta, counit);
        if let Some(h) = &self.coradical_hint {
            let meet = h.intersect(s);
            let vecs: Vec<Vec<Scalar>> = meet.basis().iter().map(|v| s.coords(v)).collect();
            out.coradical_hint = Some(Subspace::from_vectors(self.field, s.dim(), &vecs));
        }
        Ok(out)
    }

    /// `M_n(k)*` with `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`.
    pub fn matrix_coalgebra(field: FieldSpec, n: usize) -> Coalgebra {
        let idx = |i: usize, j: usize| i * n + j;
        let mut delta = Vec::new();
        let mut labels = Vec::new();
        let mut counit = Vec::new();
        for i in 0..n {
            for j in 0..n {
                delta.push((0..n).map(|k| (idx(i, k), idx(k, j), field.one())).collect());
                labels.push(format!("e{}{}", i + 1, j + 1));
                counit.push(if i == j { field.one() } else { field.zero() });
            }
        }
        let full = Subspace::full(field, n * n);
        Coalgebra::from_parts(field, labels, delta, counit).with_coradical_hint(full)
    }

    /// Span of `r` group-likes.
    pub fn group_like_coalgebra(field: FieldSpec, r: usize) -> Coalgebra {
        let delta = (0..r).map(|k| vec![(k, k, field.one())]).collect();
        let labels = (0..r).map(|k| format!("g{}", k + 1)).collect();
        Coalgebra::from_parts(field, labels, delta, vec![field.one(); r]).with_coradical_hint(Subspace::full(field, r))
    }
}

/// Path coalgebra on paths of length `≤ max_len`, basis in [`enumerate_paths`] order.
pub fn path_coalgebra(field: FieldSpec, q: &Quiver, max_len: usize) -> (Coalgebra, Vec<Path>) {
    let paths = enumerate_paths(q, max_len);
    let index: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let delta = paths
        .iter()
        .map(|p| {
            p.splittings()
                .into_iter()
                .map(|(a, b)| (index[&a], index[&b], field.one()))
                .collect()
        })
        .collect();
    let counit = paths.iter().map(|p| if p.is_empty() { field.one() } else { field.zero() }).collect();
    let labels = paths.iter().map(|p| q.path_label(p)).collect();
    let verts: Vec<usize> = (0..paths.len()).filter(|&k| paths[k].is_empty()).collect();
    let hint = Subspace::coordinate(field, paths.len(), &verts);
    (Coalgebra::from_parts(field, labels, delta, counit).with_coradical_hint(hint), paths)
}

/// `A*` with `Δ(f)(x ⊗ y) = f(xy)` and `ε(f) = f(1)`.
pub fn dual_coalgebra_fd(a: &FdAlgebra) -> Coalgebra {
    let n = a.dim();
    let mut delta = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.mul_basis(i, j) {
                delta[*k].push((i, j, c.clone()));
            }
        }
    }
    let labels = a.labels().iter().map(|l| format!("{l}*")).collect();
    let c = Coalgebra::from_parts(a.field(), labels, delta, a.unit().to_vec());
    match a.peirce() {
        Some(p) => {
            let hint = Subspace::coordinate(a.field(), n, &p.idempotents);
            c.with_coradical_hint(hint)
        }
        None => c,
    }
}

/// Convolution algebra `C*` on the dual basis; the unit is `ε`.
pub fn dual_algebra(c: &Coalgebra) -> FdAlgebra {
    let n = c.dim();
    let mut table = vec![vec![Vec::new(); n]; n];
    for k in 0..n {
        for (i, j, d) in &c.delta[k] {
            table[*i][*j].push((k, d.clone()));
        }
    }
    let table = table
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|terms| {
                    let mut v = vec![c.field.zero(); n];
                    for (k, d) in terms {
                        v[k] = v[k].add(&d);
                    }
                    to_sparse(&v)
                })
                .collect()
        })
        .collect();
    let labels = c.labels.iter().map(|l| format!("{l}^")).collect();
    FdAlgebra::from_sparse_unchecked(c.field, labels, table, c.counit.clone())
}

/// Sum of the simple subcoalgebras: the annihilator of `rad(C*)`.
pub fn coradical(c: &Coalgebra) -> Result<Subspace> {
    if let Some(h) = &c.coradical_hint {
        return Ok(h.clone());
    }
    Ok(radical(&dual_algebra(c))?.annihilator())
}

/// `X ∧ Y = Δ^{-1}(X ⊗ C + C ⊗ Y)`.
pub fn wedge(c: &Coalgebra, x: &Subspace, y: &Subspace) -> Subspace {
    let n = c.dim();
    let qx = x.annihilator();
    let qy = y.annihilator();
    if qx.is_zero() || qy.is_zero() {
        return Subspace::full(c.field, n);
    }
    let qy_mat = qy.basis_mat();
    let mut rows = Subspace::zero(c.field, n);
    for phi in qx.basis() {
        let m = qy_mat.mul(&c.left_contract(phi));
        for r in m.row_vecs() {
            if !is_zero_vec(&r) {
                rows.insert(&r);
            }
        }
    }
    rows.annihilator()
}

/// `C_0 ⊆ C_1 ⊆ …`, ending with the first term equal to `C`.
pub fn coradical_filtration(c: &Coalgebra) -> Result<Vec<Subspace>> {
    let c0 = coradical(c)?;
    let mut out = vec![c0.clone()];
    while out.last().unwrap().dim() < c.dim() {
        let next = wedge(c, &c0, out.last().unwrap());
        if next.dim() == out.last().unwrap().dim() {
            return Err(Error::Inconsistent("coradical filtration stalls below the whole coalgebra".into()));
        }
        out.push(next);
    }
    Ok(out)
}

pub fn filtration_dims(c: &Coalgebra) -> Result<Vec<usize>> {
    Ok(coradical_filtration(c)?.iter().map(Subspace::dim).collect())
}

/// Largest subcoalgebra inside `w`: `D_{k+1} = {x ∈ D_k : Δx ∈ D_k ⊗ D_k}`.
pub fn max_subcoalgebra_in(c: &Coalgebra, w: &Subspace) -> Subspace {
    let n = c.dim();
    let mut d = w.clone();
    loop {
        let q = d.annihilator();
        if q.is_zero() {
            return d;
        }
        let mut rows = Subspace::zero(c.field, n);
        for phi in q.basis() {
            rows.insert(phi);
            for m in [c.left_contract(phi), c.right_contract(phi)] {
                for r in m.row_vecs() {
                    if !is_zero_vec(&r) {
                        rows.insert(&r);
                    }
                }
            }
        }
        let next = rows.annihilator();
        if next == d {
            return d;
        }
        d = next;
    }
}

/// Group-like elements spanning the coradical of a pointed coalgebra.
pub fn group_likes(c: &Coalgebra) -> Result<Vec<Vec<Scalar>>> {
    let c0 = coradical(c)?;
    let sub = c.restrict(&c0, (0..c0.dim()).map(|k| format!("c{k}")).collect())?;
    let dual = dual_algebra(&sub);
    let idems = primitive_central_idempotents(&dual)?;
    if idems.len() != c0.dim() {
        // some block is a matrix coalgebra of size > 1
        for e in &idems {
            let block = dual.left_mult(e).mul(&dual.right_mult(e)).rank();
            if block > 1 {
                return Err(Error::InvalidStructure(format!(
                    "coalgebra is not pointed: it has a simple subcoalgebra of dimension {block}"
                )));
            }
        }
        return Err(Error::Unsupported("coradical does not split over the ground field".into()));
    }
    let e = Mat::from_rows(c.field, c0.dim(), &idems);
    let inv = e.inverse().ok_or_else(|| Error::Inconsistent("idempotents are dependent".into()))?;
    let basis = Mat::from_cols(c.field, c.dim(), c0.basis());
    let mut out: Vec<Vec<Scalar>> = (0..c0.dim()).map(|k| basis.apply(&inv.col(k))).collect();
    out.sort_by_key(|g| g.iter().position(|x| !x.is_zero()));
    for g in &out {
        let dg = c.delta_vec(g);
        let mut expect = BTreeMap::new();
        for (i, a) in g.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    expect.insert((i, j), a.mul(b));
                }
            }
        }
        if dg != expect {
            return Err(Error::Inconsistent("computed group-like fails Δg = g ⊗ g".into()));
        }
    }
    Ok(out)
}

/// `{x : Δx = g ⊗ x + x ⊗ h}`.
pub fn skew_primitives(c: &Coalgebra, g: &[Scalar], h: &[Scalar]) -> Subspace {
    let n = c.dim();
    let mut cols = Vec::new();
    for k in 0..n {
        let mut m = c.delta_vec(&unit(c.field, n, k));
        for (i, gi) in g.iter().enumerate() {
            if !gi.is_zero() {
                add_term(&mut m, (i, k), gi.neg());
            }
        }
        for (j, hj) in h.iter().enumerate() {
            if !hj.is_zero() {
                add_term(&mut m, (k, j), hj.neg());
            }
        }
        cols.push(m);
    }
    let mut keys: Vec<(usize, usize)> = cols.iter().flat_map(|m| m.keys().copied()).collect();
    keys.sort_unstable();
    keys.dedup();
    let pos: BTreeMap<(usize, usize), usize> = keys.iter().enumerate().map(|(a, &k)| (k, a)).collect();
    let mut mat = Mat::zeros(c.field, keys.len(), n);
    for (k, m) in cols.iter().enumerate() {
        for (key, v) in m {
            mat.set(pos[key], k, v.clone());
        }
    }
    mat.kernel()
}

/// A block of a pointed coalgebra: its group-likes and the subcoalgebra they generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedComponent {
    pub group_likes: Vec<Vec<Scalar>>,
    pub subcoalgebra: Subspace,
}

/// Decomposition into components of the link graph on group-likes.
pub fn pointed_components(c: &Coalgebra) -> Result<Vec<PointedComponent>> {
    let gs = group_likes(c)?;
    let r = gs.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in 0..r {
        for b in 0..r {
            if a == b {
                continue;
            }
            let trivial = 1;
            if skew_primitives(c, &gs[a], &gs[b]).dim() > trivial {
                let (x, y) = (find(&mut parent, a), find(&mut parent, b));
                parent[x.max(y)] = x.min(y);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..r {
        let root = find(&mut parent, a);
        groups.entry(root).or_default().push(a);
    }
    let mut out = Vec::new();
    let mut total = Subspace::zero(c.field, c.dim());
    for members in groups.values() {
        let vecs: Vec<Vec<Scalar>> = members.iter().map(|&k| gs[k].clone()).collect();
        let x = Subspace::from_vectors(c.field, c.dim(), &vecs);
        let mut w = x.clone();
        loop {
            let next = wedge(c, &x, &w);
            if next == w {
                break;
            }
            w = next;
        }
        total = total.sum(&w);
        out.push(PointedComponent {
            group_likes: vecs,
            subcoalgebra: w,
        });
    }
    let sum: usize = out.iter().map(|p| p.subcoalgebra.dim()).sum();
    if sum != c.dim() || total.dim() != c.dim() {
        return Err(Error::Inconsistent(format!(
            "components have total dimension {sum}, coalgebra has {}",
            c.dim()
        )));
    }
    Ok(out)
}

/// Linear map between coalgebras, `dim target × dim source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraMorphism {
    pub map: Mat,
}

impl CoalgebraMorphism {
    /// `Δ∘f = (f⊗f)∘Δ` and `ε∘f = ε`.
    pub fn check(&self, source: &Coalgebra, target: &Coalgebra) -> Result<()> {
        let f = &self.map;
        if f.rows() != target.dim() || f.cols() != source.dim() {
            return Err(Error::DimensionMismatch("morphism has the wrong shape".into()));
        }
        for k in 0..source.dim() {
            let fk = f.col(k);
            let lhs = target.delta_vec(&fk);
            let mut rhs = BTreeMap::new();
            for (i, j, c) in source.delta(k) {
                let (fi, fj) = (f.col(*i), f.col(*j));
                for (a, x) in fi.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in fj.iter().enumerate() {
                        if !y.is_zero() {
                            add_term(&mut rhs, (a, b), c.mul(x).mul(y));
                        }
                    }
                }
            }
            rhs.retain(|_, c: &mut Scalar| !c.is_zero());
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!(
                    "Δ∘f ≠ (f⊗f)∘Δ on {}",
                    source.labels()[k]
                )));
            }
            let mut e = target.field().zero();
            for (a, b) in fk.iter().zip(target.counit()) {
                e.add_mul(a, b);
            }
            if e != source.counit()[k] {
                return Err(Error::NotAMorphism(format!("ε∘f ≠ ε on {}", source.labels()[k])));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn loop_quiver() -> Quiver {
        let mut q = Quiver::new(vec!["v".into()]).unwrap();
        q.add_arrow("a", 0, 0).unwrap();
        q
    }

    fn a2_quiver() -> Quiver {
        let mut q = Quiver::new(vec!["1".into(), "2".into()]).unwrap();
        q.add_arrow("a", 0, 1).unwrap();
        q
    }

    #[test]
    fn dual_numbers_dual() {
        let a = FdAlgebra::truncated_polynomial(Q, &[0, 0]);
        let c = dual_coalgebra_fd(&a);
        c.check_axioms().unwrap();
        assert_eq!(c.delta(0), &[(0, 0, Q.one())]);
        assert_eq!(c.delta(1), &[(0, 1, Q.one()), (1, 0, Q.one())]);
        assert_eq!(coradical(&c).unwrap(), Subspace::coordinate(Q, 2, &[0]));
        assert_eq!(filtration_dims(&c).unwrap(), vec![1, 2]);
        assert_eq!(dual_algebra(&c), a);
    }

    #[test]
    fn matrix_coalgebra_is_dual_of_matrices() {
        let m2 = FdAlgebra::matrix_algebra(Q, 2);
        let c = dual_coalgebra_fd(&m2);
        c.check_axioms().unwrap();
        assert_eq!(c, Coalgebra::matrix_coalgebra(Q, 2));
        assert_eq!(coradical(&c).unwrap().dim(), 4);
        assert_eq!(dual_algebra(&Coalgebra::matrix_coalgebra(Q, 2)), m2);
        assert!(matches!(group_likes(&c), Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn group_like_coalgebra_dualizes_to_product_of_fields() {
        let c = Coalgebra::group_like_coalgebra(Q, 2);
        c.check_axioms().unwrap();
        let a = dual_algebra(&c);
        assert!(radical(&a).unwrap().is_zero());
        assert_eq!(primitive_central_idempotents(&a).unwrap().len(), 2);
    }

    #[test]
    fn path_coalgebra_axioms_and_filtration() {
        let (c, paths) = path_coalgebra(Q, &a2_quiver(), 3);
        assert_eq!(paths.len(), 3);
        c.check_axioms().unwrap();
        assert_eq!(filtration_dims(&c).unwrap(), vec![2, 3]);
        let (c, _) = path_coalgebra(Q, &loop_quiver(), 4);
        c.check_axioms().unwrap();
        assert_eq!(filtration_dims(&c).unwrap(), vec![1, 2, 3, 4, 5]);
        // no hint: the trace-form radical of the dual gives the same coradical
        let plain = Coalgebra::from_parts(Q, c.labels.clone(), c.delta.clone(), c.counit.clone());
        assert_eq!(coradical(&plain).unwrap(), coradical(&c).unwrap());
    }

    #[test]
    fn truncated_polynomial_filtration() {
        for n in 1..=5usize {
            let mut lower = vec![0i64; n];
            lower[0] = 0;
            let a = FdAlgebra::truncated_polynomial(Q, &lower);
            let c = dual_coalgebra_fd(&a);
            let expect: Vec<usize> = (1..=n).collect();
            assert_eq!(filtration_dims(&c).unwrap(), expect);
        }
    }

    #[test]
    fn max_subcoalgebra_examples() {
        let (c, _) = path_coalgebra(Q, &loop_quiver(), 2);
        let full = Subspace::full(Q, 3);
        assert_eq!(max_subcoalgebra_in(&c, &full), full);
        let ea = Subspace::coordinate(Q, 3, &[0, 1]);
        assert_eq!(max_subcoalgebra_in(&c, &ea), ea);
        let a = Subspace::coordinate(Q, 3, &[1]);
        assert!(max_subcoalgebra_in(&c, &a).is_zero());
        let ea2 = Subspace::coordinate(Q, 3, &[0, 2]);
        assert_eq!(max_subcoalgebra_in(&c, &ea2), Subspace::coordinate(Q, 3, &[0]));
    }

    #[test]
    fn pointed_components_examples() {
        let kk = FdAlgebra::truncated_polynomial(Q, &[0, -1]);
        let comps = pointed_components(&dual_coalgebra_fd(&kk)).unwrap();
        assert_eq!(comps.iter().map(|p| p.subcoalgebra.dim()).collect::<Vec<_>>(), vec![1, 1]);
        let dn = FdAlgebra::truncated_polynomial(Q, &[0, 0]);
        let comps = pointed_components(&dual_coalgebra_fd(&dn)).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].subcoalgebra.dim(), 2);
        // x^2 (x - 1)
        let a = FdAlgebra::truncated_polynomial(Q, &[0, 0, -1]);
        let comps = pointed_components(&dual_coalgebra_fd(&a)).unwrap();
        let mut dims: Vec<usize> = comps.iter().map(|p| p.subcoalgebra.dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
        let (c, _) = path_coalgebra(Q, &a2_quiver(), 2);
        let comps = pointed_components(&c).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].group_likes.len(), 2);
    }

    #[test]
    fn restriction_keeps_axioms() {
        let (c, _) = path_coalgebra(Q, &loop_quiver(), 3);
        let s = Subspace::coordinate(Q, 4, &[0, 1, 2]);
        let d = c.restrict(&s, vec!["e".into(), "a".into(), "aa".into()]).unwrap();
        d.check_axioms().unwrap();
        assert_eq!(filtration_dims(&d).unwrap(), vec![1, 2, 3]);
        assert!(c.restrict(&Subspace::coordinate(Q, 4, &[1]), vec!["a".into()]).is_err());
    }

    #[test]
    fn morphism_check() {
        let c = dual_coalgebra_fd(&FdAlgebra::truncated_polynomial(Q, &[0, 0]));
        let id = CoalgebraMorphism { map: Mat::identity(Q, 2) };
        id.check(&c, &c).unwrap();
        let bad = CoalgebraMorphism {
            map: Mat::from_i64(Q, 2, 2, &[0, 1, 1, 0]),
        };
        assert!(bad.check(&c, &c).is_err());
    }
}
