//! Modules, minimal projective resolutions and Ext over a basic algebra in Peirce form.
//!
//! A projective `P = ⊕_g A e_{v_g}` is stored by its generator vertices. Elements
//! are tuples `(x_g)` with `x_g ∈ A e_{v_g}`, laid out as `m · dim A` coordinates.
//! A module map `P -> P'` is a matrix `X` of algebra elements with
//! `X[g][h] ∈ e_{v_g} A e_{v'_h}`; it sends `x` in slot `g` to `(x · X[g][h])_h`.
//! Composing `X` then `Y` is the matrix product `X · Y`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, Mat, Subspace};
use crate::fdalg::{basic_algebra, FdAlgebra, PeirceData, SimpleDescriptor};
use crate::field::{FieldSpec, Scalar};
use crate::quivalg::Quiver;

/// Matrix of algebra elements, `rows × cols × dim A`.
pub type AlgMat = Vec<Vec<Vec<Scalar>>>;

pub(crate) fn peirce_of(a: &FdAlgebra) -> Result<&PeirceData> {
    a.peirce()
        .ok_or_else(|| Error::Unsupported("operation needs a basic algebra in Peirce form".into()))
}

pub fn alg_mat_zero(a: &FdAlgebra, rows: usize, cols: usize) -> AlgMat {
    vec![vec![a.zero_elem(); cols]; rows]
}

pub fn alg_mat_mul(a: &FdAlgebra, x: &AlgMat, y: &AlgMat) -> AlgMat {
    let cols = y.first().map_or(0, Vec::len);
    let mut out = alg_mat_zero(a, x.len(), cols);
    for (g, row) in x.iter().enumerate() {
        for (k, xk) in row.iter().enumerate() {
            if is_zero_vec(xk) {
                continue;
            }
            for h in 0..cols {
                if is_zero_vec(&y[k][h]) {
                    continue;
                }
                let p = a.mul(xk, &y[k][h]);
                for (o, c) in out[g][h].iter_mut().zip(&p) {
                    *o = o.add(c);
                }
            }
        }
    }
    out
}

/// Basis indices `b` with `b = e_u b e_v`.
pub(crate) fn slot_basis(p: &PeirceData, u: usize, v: usize) -> Vec<usize> {
    (0..p.slot.len()).filter(|&b| p.slot[b] == (u, v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    field: FieldSpec,
    dim: usize,
    action: Vec<Mat>,
}

impl LeftModule {
    pub fn new(a: &FdAlgebra, dim: usize, action: Vec<Mat>) -> Result<LeftModule> {
        let m = LeftModule {
            field: a.field(),
            dim,
            action,
        };
        m.check(a)?;
        Ok(m)
    }

    pub fn from_simple(s: &SimpleDescriptor, a: &FdAlgebra) -> LeftModule {
        LeftModule {
            field: a.field(),
            dim: s.dim,
            action: s.action.clone(),
        }
    }

    /// `A e_v` with the left regular action.
    pub fn indecomposable_projective(a: &FdAlgebra, v: usize) -> Result<LeftModule> {
        let p = peirce_of(a)?;
        let basis: Vec<usize> = (0..a.dim()).filter(|&b| p.slot[b].1 == v).collect();
        let sub = Subspace::coordinate(a.field(), a.dim(), &basis);
        LeftModule::regular(a).submodule(a, &sub)
    }

    pub fn regular(a: &FdAlgebra) -> LeftModule {
        LeftModule {
            field: a.field(),
            dim: a.dim(),
            action: (0..a.dim()).map(|b| a.left_mult(&a.basis_vec(b))).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn act(&self, x: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for (c, act) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m = m.add(&act.scale(c));
            }
        }
        m
    }

    pub fn check(&self, a: &FdAlgebra) -> Result<()> {
        if self.action.len() != a.dim() || self.action.iter().any(|m| m.rows() != self.dim || m.cols() != self.dim) {
            return Err(Error::DimensionMismatch("module action has the wrong shape".into()));
        }
        if self.act(a.unit()) != Mat::identity(self.field, self.dim) {
            return Err(Error::InvalidStructure("unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let prod = crate::fdalg::sparse_to_dense(self.field, a.dim(), a.mul_basis(i, j));
                if self.act(&prod) != self.action[i].mul(&self.action[j]) {
                    return Err(Error::InvalidStructure(format!(
                        "action does not respect the product of basis elements {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The submodule on `sub`, in the echelon basis of `sub`.
    pub fn submodule(&self, a: &FdAlgebra, sub: &Subspace) -> Result<LeftModule> {
        let basis = Mat::from_cols(self.field, self.dim, sub.basis());
        let mut action = Vec::new();
        for m in &self.action {
            let mut cols = Vec::new();
            for v in sub.basis() {
                let c = basis
                    .solve(&m.apply(v))
                    .ok_or_else(|| Error::InvalidStructure("subspace is not a submodule".into()))?;
                cols.push(c);
            }
            action.push(Mat::from_cols(self.field, sub.dim(), &cols));
        }
        LeftModule::new(a, sub.dim(), action)
    }

    /// `J M` for the Peirce radical `J`.
    pub fn radical_part(&self, a: &FdAlgebra) -> Result<Subspace> {
        let p = peirce_of(a)?;
        let mut vecs = Vec::new();
        for b in (0..a.dim()).filter(|b| !p.is_idempotent(*b)) {
            for k in 0..self.dim {
                vecs.push(self.action[b].col(k));
            }
        }
        Ok(Subspace::from_vectors(self.field, self.dim, &vecs))
    }
}

/// `P = ⊕ A e_{v_g}` with a surjection onto a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCover {
    pub vertices: Vec<usize>,
    /// Basis of `P`: pairs `(generator, algebra basis index)`.
    pub basis: Vec<(usize, usize)>,
    /// `dim M × dim P`.
    pub surjection: Mat,
}

impl ProjectiveCover {
    pub fn kernel(&self) -> Subspace {
        self.surjection.kernel()
    }
}

/// Projective cover through the top `M / JM`, one generator per top basis vector.
pub fn projective_cover(m: &LeftModule, a: &FdAlgebra) -> Result<ProjectiveCover> {
    let p = peirce_of(a)?;
    let field = a.field();
    let jm = m.radical_part(a)?;
    let mut vertices = Vec::new();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for u in 0..p.vertex_count() {
        let e = m.action[p.idempotents[u]].clone();
        let eu = Subspace::from_vectors(field, m.dim, &(0..m.dim).map(|k| e.col(k)).collect::<Vec<_>>());
        let eu_jm = jm.image_under(&e);
        for g in eu_jm.extend_with(eu.basis()) {
            vertices.push(u);
            gens.push(g);
        }
    }
    let mut basis = Vec::new();
    let mut cols = Vec::new();
    for (g, &u) in vertices.iter().enumerate() {
        for b in (0..a.dim()).filter(|&b| p.slot[b].1 == u) {
            basis.push((g, b));
            cols.push(m.action[b].apply(&gens[g]));
        }
    }
    Ok(ProjectiveCover {
        vertices,
        basis,
        surjection: Mat::from_cols(field, m.dim, &cols),
    })
}

/// Minimal projective resolution of the simple at one vertex, up to a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub vertex: usize,
    /// `gens[i]`: vertex of each indecomposable summand of `P_i`.
    pub gens: Vec<Vec<usize>>,
    /// `diff[i]: P_i -> P_{i-1}` for `i ≥ 1`; `diff[0]` is empty.
    pub diff: Vec<AlgMat>,
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.gens.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn multiplicities(&self, i: usize, vertices: usize) -> Vec<usize> {
        let mut m = vec![0; vertices];
        for &u in &self.gens[i] {
            m[u] += 1;
        }
        m
    }

    /// Matrix of `P_i -> P_{i-1}` from the given domain basis into ambient coordinates.
    fn map_matrix(&self, a: &FdAlgebra, i: usize, domain: &[(usize, usize)]) -> Mat {
        let n = a.dim();
        let rows = self.gens[i - 1].len() * n;
        let cols: Vec<Vec<Scalar>> = domain
            .iter()
            .map(|&(g, b)| {
                let mut v = vec![a.field().zero(); rows];
                let bv = a.basis_vec(b);
                for (h, y) in self.diff[i][g].iter().enumerate() {
                    let p = a.mul(&bv, y);
                    v[h * n..(h + 1) * n].clone_from_slice(&p);
                }
                v
            })
            .collect();
        Mat::from_cols(a.field(), rows, &cols)
    }

    fn projective_basis(&self, p: &PeirceData, i: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (g, &u) in self.gens[i].iter().enumerate() {
            for (b, s) in p.slot.iter().enumerate() {
                if s.1 == u {
                    out.push((g, b));
                }
            }
        }
        out
    }

    /// `d_{i-1} ∘ d_i = 0` for every stored pair.
    pub fn check_complex(&self, a: &FdAlgebra) -> bool {
        (2..self.gens.len()).all(|i| {
            alg_mat_mul(a, &self.diff[i], &self.diff[i - 1])
                .iter()
                .flatten()
                .all(|x| is_zero_vec(x))
        })
    }

    /// No differential entry has an idempotent component.
    pub fn check_minimal(&self, a: &FdAlgebra) -> bool {
        let Some(p) = a.peirce() else { return false };
        self.diff.iter().flatten().flatten().all(|x| p.idempotents.iter().all(|&e| x[e].is_zero()))
    }
}

pub fn minimal_resolution(a: &FdAlgebra, vertex: usize, cutoff: usize) -> Result<Resolution> {
    let p = peirce_of(a)?;
    let field = a.field();
    let n = a.dim();
    if vertex >= p.vertex_count() {
        return Err(Error::DimensionMismatch(format!("no vertex {vertex}")));
    }
    let radical: Vec<usize> = (0..n).filter(|b| !p.is_idempotent(*b)).collect();
    let mut res = Resolution {
        vertex,
        gens: vec![vec![vertex]],
        diff: vec![Vec::new()],
    };
    let k0: Vec<usize> = radical.iter().copied().filter(|&b| p.slot[b].1 == vertex).collect();
    let mut kernel = Subspace::coordinate(field, n, &k0);
    let left = |x: &[Scalar], v: &[Scalar], m: usize| -> Vec<Scalar> {
        let mut out = Vec::with_capacity(m * n);
        for g in 0..m {
            out.extend(a.mul(x, &v[g * n..(g + 1) * n]));
        }
        out
    };
    for i in 1..=cutoff {
        let m = res.gens[i - 1].len();
        let mut jk = Vec::new();
        for &r in &radical {
            let rv = a.basis_vec(r);
            for k in kernel.basis() {
                jk.push(left(&rv, k, m));
            }
        }
        let jk = Subspace::from_vectors(field, m * n, &jk);
        let mut gens = Vec::new();
        let mut rows = Vec::new();
        for u in 0..p.vertex_count() {
            let e = a.basis_vec(p.idempotents[u]);
            let eu_k: Vec<Vec<Scalar>> = kernel.basis().iter().map(|k| left(&e, k, m)).collect();
            let eu_k = Subspace::from_vectors(field, m * n, &eu_k);
            let eu_jk: Vec<Vec<Scalar>> = jk.basis().iter().map(|k| left(&e, k, m)).collect();
            let eu_jk = Subspace::from_vectors(field, m * n, &eu_jk);
            for y in eu_jk.extend_with(eu_k.basis()) {
                gens.push(u);
                rows.push((0..m).map(|h| y[h * n..(h + 1) * n].to_vec()).collect::<Vec<_>>());
            }
        }
        res.gens.push(gens);
        res.diff.push(rows);
        let domain = res.projective_basis(p, i);
        let map = res.map_matrix(a, i, &domain);
        if map.image() != kernel {
            return Err(Error::Inconsistent(format!("resolution not exact in degree {}", i - 1)));
        }
        let ker_params = map.kernel();
        let width = res.gens[i].len() * n;
        let vecs: Vec<Vec<Scalar>> = ker_params
            .basis()
            .iter()
            .map(|c| {
                let mut v = vec![field.zero(); width];
                for (x, &(g, b)) in c.iter().zip(&domain) {
                    if !x.is_zero() {
                        v[g * n + b] = v[g * n + b].add(x);
                    }
                }
                v
            })
            .collect();
        kernel = Subspace::from_vectors(field, width, &vecs);
    }
    Ok(res)
}

/// One basis element of `Ext^i(S_source, S_target)`: generator `gen` of `P_i(S_source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    pub degree: usize,
    pub source: usize,
    pub target: usize,
    pub gen: usize,
}

/// Chain map `P(S_source) -> P(S_target)` of degree `i`: `comps[j - i]: P_j -> P_{j-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub degree: usize,
    pub source: usize,
    pub target: usize,
    pub comps: Vec<AlgMat>,
}

#[derive(Clone, Debug)]
pub struct ExtData {
    pub algebra: FdAlgebra,
    pub cutoff: usize,
    pub resolutions: Vec<Resolution>,
    /// `classes[i]`: basis of `⊕_{S,T} Ext^i(S,T)`, ordered by source then generator.
    pub classes: Vec<Vec<ExtClass>>,
    pub reps: Vec<Vec<ChainMap>>,
}

impl ExtData {
    pub fn vertex_count(&self) -> usize {
        self.resolutions.len()
    }

    /// `dims[i][v][w] = dim Ext^i(S_v, S_w)`.
    pub fn dims(&self) -> Vec<Vec<Vec<usize>>> {
        let r = self.vertex_count();
        (0..=self.cutoff)
            .map(|i| self.resolutions.iter().map(|res| res.multiplicities(i, r)).collect())
            .collect()
    }

    pub fn total_dim(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn class_index(&self, degree: usize, source: usize, gen: usize) -> Option<usize> {
        self.classes[degree].iter().position(|c| c.source == source && c.gen == gen)
    }

    /// Ext coordinates of a chain map: the idempotent coefficient of its top component.
    pub fn evaluate_top(&self, f: &ChainMap) -> Vec<Scalar> {
        let a = &self.algebra;
        let p = a.peirce().expect("basic algebra");
        let mut out = vec![a.field().zero(); self.total_dim(f.degree)];
        let e = p.idempotents[f.target];
        for (g, row) in f.comps[0].iter().enumerate() {
            if let Some(k) = self.class_index(f.degree, f.source, g) {
                out[k] = row[0][e].clone();
            }
        }
        out
    }

    /// Chain-map composite, first `f` then `g`.
    pub fn compose(&self, f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        if f.target != g.source {
            return Err(Error::DimensionMismatch("chain maps are not composable".into()));
        }
        let deg = f.degree + g.degree;
        if deg > self.cutoff {
            return Err(Error::DimensionMismatch("composite degree exceeds the cutoff".into()));
        }
        let comps = (deg..=self.cutoff)
            .map(|j| alg_mat_mul(&self.algebra, &f.comps[j - f.degree], &g.comps[j - f.degree - g.degree]))
            .collect();
        Ok(ChainMap {
            degree: deg,
            source: f.source,
            target: g.target,
            comps,
        })
    }

    /// `D f = (-1)^i f D` on all stored components.
    pub fn is_chain_map(&self, f: &ChainMap) -> bool {
        let a = &self.algebra;
        let i = f.degree;
        let sign = if i % 2 == 0 { a.field().one() } else { a.field().one().neg() };
        let (rs, rt) = (&self.resolutions[f.source], &self.resolutions[f.target]);
        (i + 1..=self.cutoff).all(|j| {
            if j - i >= rt.diff.len() {
                return true;
            }
            let lhs = alg_mat_mul(a, &f.comps[j - i], &rt.diff[j - i]);
            let rhs = alg_mat_mul(a, &rs.diff[j], &f.comps[j - 1 - i]);
            lhs.iter().flatten().zip(rhs.iter().flatten()).all(|(x, y)| {
                x.iter().zip(y).all(|(p, q)| p == &q.mul(&sign))
            })
        })
    }
}

fn lift_class(a: &FdAlgebra, res: &[Resolution], class: &ExtClass, cutoff: usize) -> Result<ChainMap> {
    let p = peirce_of(a)?;
    let field = a.field();
    let (rs, rt) = (&res[class.source], &res[class.target]);
    let i = class.degree;
    let mut top = alg_mat_zero(a, rs.gens[i].len(), 1);
    top[class.gen][0] = a.basis_vec(p.idempotents[class.target]);
    let mut comps = vec![top];
    let sign = if i % 2 == 0 { field.one() } else { field.one().neg() };
    let mut solvers: BTreeMap<(usize, usize), (Vec<(usize, usize)>, Mat)> = BTreeMap::new();
    for j in i + 1..=cutoff {
        let k = j - i;
        let rhs = alg_mat_mul(a, &rs.diff[j], comps.last().unwrap());
        let mut comp = alg_mat_zero(a, rs.gens[j].len(), rt.gens[k].len());
        for (g, row) in rhs.iter().enumerate() {
            if row.iter().all(|x| is_zero_vec(x)) {
                continue;
            }
            let u = rs.gens[j][g];
            let (domain, mat) = solvers.entry((k, u)).or_insert_with(|| {
                let domain: Vec<(usize, usize)> = rt.gens[k]
                    .iter()
                    .enumerate()
                    .flat_map(|(h, &vh)| slot_basis(p, u, vh).into_iter().map(move |b| (h, b)))
                    .collect();
                let mat = rt.map_matrix(a, k, &domain);
                (domain, mat)
            });
            let target: Vec<Scalar> = row.iter().flat_map(|x| x.iter().map(|c| c.mul(&sign))).collect();
            let sol = mat
                .solve(&target)
                .ok_or_else(|| Error::Inconsistent(format!("chain map does not lift to degree {j}")))?;
            for (c, &(h, b)) in sol.iter().zip(domain.iter()) {
                if !c.is_zero() {
                    comp[g][h][b] = comp[g][h][b].add(c);
                }
            }
        }
        comps.push(comp);
    }
    Ok(ChainMap {
        degree: i,
        source: class.source,
        target: class.target,
        comps,
    })
}

/// Ext data up to the cutoff: dimensions from minimal resolutions and chain-map representatives.
pub fn ext_dims(a: &FdAlgebra, cutoff: usize) -> Result<ExtData> {
    let b = basic_algebra(a)?;
    let r = peirce_of(&b)?.vertex_count();
    let resolutions = (0..r)
        .map(|v| minimal_resolution(&b, v, cutoff))
        .collect::<Result<Vec<_>>>()?;
    let classes: Vec<Vec<ExtClass>> = (0..=cutoff)
        .map(|i| {
            resolutions
                .iter()
                .flat_map(|res| {
                    res.gens[i].iter().enumerate().map(move |(g, &w)| ExtClass {
                        degree: i,
                        source: res.vertex,
                        target: w,
                        gen: g,
                    })
                })
                .collect()
        })
        .collect();
    let reps = classes
        .iter()
        .map(|cs| cs.iter().map(|c| lift_class(&b, &resolutions, c, cutoff)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtData {
        algebra: b,
        cutoff,
        resolutions,
        classes,
        reps,
    })
}

/// Yoneda product of two basis classes, first `f` then `g`, in Ext coordinates.
pub fn yoneda_product(ext: &ExtData, f: (usize, usize), g: (usize, usize)) -> Result<Vec<Scalar>> {
    let fm = &ext.reps[f.0][f.1];
    let gm = &ext.reps[g.0][g.1];
    if fm.target != gm.source {
        let field = ext.algebra.field();
        return Ok(vec![field.zero(); ext.total_dim(f.0 + g.0)]);
    }
    Ok(ext.evaluate_top(&ext.compose(fm, gm)?))
}

/// Quiver on the simples with one arrow per `Ext^1` basis class.
#[derive(Clone, Debug)]
pub struct ExtQuiver {
    pub quiver: Quiver,
    /// Index in `ExtData::classes[1]` of each arrow.
    pub arrow_class: Vec<usize>,
}

pub fn ext_quiver(ext: &ExtData) -> Result<ExtQuiver> {
    let a = &ext.algebra;
    let p = peirce_of(a)?;
    let mut quiver = Quiver::new(p.vertex_labels.clone())?;
    let mut arrow_class = Vec::new();
    if ext.cutoff < 1 {
        return Ok(ExtQuiver { quiver, arrow_class });
    }
    for (k, c) in ext.classes[1].iter().enumerate() {
        let y = &ext.resolutions[c.source].diff[1][c.gen][0];
        let nz: Vec<usize> = (0..a.dim()).filter(|&b| !y[b].is_zero()).collect();
        let natural: Option<String> = match nz.as_slice() {
            [b] if !a.labels()[*b].contains('*') && !a.labels()[*b].starts_with("e_") => Some(a.labels()[*b].clone()),
            _ => None,
        };
        let label = match natural {
            Some(l) if quiver.arrow_index(&l).is_none() => l,
            _ => format!("x{}", k + 1),
        };
        quiver.add_arrow(&label, c.source, c.target)?;
        arrow_class.push(k);
    }
    Ok(ExtQuiver { quiver, arrow_class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivalg::{build_algebra, Path, QuiverPresentation};

    const Q: FieldSpec = FieldSpec::Rationals;

    pub(crate) fn loop_algebra(n: usize) -> FdAlgebra {
        let mut q = Quiver::new(vec!["1".into()]).unwrap();
        q.add_arrow("a", 0, 0).unwrap();
        build_algebra(&QuiverPresentation {
            quiver: q,
            relations: vec![],
            truncation: n,
            field: Q,
        })
        .unwrap()
    }

    fn a2() -> FdAlgebra {
        let mut q = Quiver::new(vec!["1".into(), "2".into()]).unwrap();
        q.add_arrow("a", 0, 1).unwrap();
        build_algebra(&QuiverPresentation {
            quiver: q,
            relations: vec![],
            truncation: 2,
            field: Q,
        })
        .unwrap()
    }

    fn two_loops_square() -> FdAlgebra {
        let mut q = Quiver::new(vec!["1".into()]).unwrap();
        q.add_arrow("x", 0, 0).unwrap();
        q.add_arrow("y", 0, 0).unwrap();
        build_algebra(&QuiverPresentation {
            quiver: q,
            relations: vec![],
            truncation: 2,
            field: Q,
        })
        .unwrap()
    }

    #[test]
    fn periodic_resolution_of_dual_numbers() {
        let a = loop_algebra(2);
        let r = minimal_resolution(&a, 0, 4).unwrap();
        assert!(r.gens.iter().all(|g| g == &vec![0]));
        assert!(r.check_complex(&a) && r.check_minimal(&a));
    }

    #[test]
    fn hereditary_resolution() {
        let a = a2();
        let r = minimal_resolution(&a, 0, 3).unwrap();
        assert_eq!(r.gens, vec![vec![0], vec![1], vec![], vec![]]);
        let r = minimal_resolution(&a, 1, 3).unwrap();
        assert_eq!(r.gens, vec![vec![1], vec![], vec![], vec![]]);
        let e = ext_dims(&a, 2).unwrap();
        assert_eq!(e.dims()[1], vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(e.dims()[2], vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn semisimple_has_no_higher_ext() {
        let kk = FdAlgebra::truncated_polynomial(Q, &[0, -1]);
        let e = ext_dims(&kk, 3).unwrap();
        assert_eq!(e.vertex_count(), 2);
        for i in 1..=3 {
            assert_eq!(e.total_dim(i), 0);
        }
        assert_eq!(ext_quiver(&e).unwrap().quiver.arrows().len(), 0);
    }

    #[test]
    fn truncated_polynomial_ext_is_one_dimensional() {
        for n in 2..=5 {
            let e = ext_dims(&loop_algebra(n), 4).unwrap();
            for i in 0..=4 {
                assert_eq!(e.dims()[i], vec![vec![1]]);
            }
            for reps in &e.reps {
                assert!(reps.iter().all(|f| e.is_chain_map(f)));
            }
        }
    }

    #[test]
    fn ext_quiver_examples() {
        let e = ext_dims(&loop_algebra(2), 2).unwrap();
        let q = ext_quiver(&e).unwrap();
        assert_eq!(q.quiver.arrows().len(), 1);
        assert_eq!(q.quiver.arrows()[0].label, "a");
        let e = ext_dims(&two_loops_square(), 2).unwrap();
        let q = ext_quiver(&e).unwrap();
        assert_eq!(q.quiver.arrows().len(), 2);
        // four quadratic relations
        assert_eq!(e.dims()[2], vec![vec![4]]);
    }

    #[test]
    fn commutative_square_relations() {
        let mut q = Quiver::new(vec!["1".into()]).unwrap();
        q.add_arrow("x", 0, 0).unwrap();
        q.add_arrow("y", 0, 0).unwrap();
        let xy = Path::new(&q, vec![0, 1]).unwrap();
        let yx = Path::new(&q, vec![1, 0]).unwrap();
        let rel = vec![(Q.one(), xy), (Q.one().neg(), yx)];
        let a = build_algebra(&QuiverPresentation {
            quiver: q,
            relations: vec![rel],
            truncation: 3,
            field: Q,
        })
        .unwrap();
        let e = ext_dims(&a, 2).unwrap();
        assert_eq!(e.dims()[1], vec![vec![2]]);
        // one commutator and four cubic monomials
        assert_eq!(e.dims()[2], vec![vec![5]]);
    }

    #[test]
    fn yoneda_products_of_loops() {
        let e = ext_dims(&loop_algebra(2), 3).unwrap();
        let sq = yoneda_product(&e, (1, 0), (1, 0)).unwrap();
        assert!(!sq[0].is_zero());
        let id = yoneda_product(&e, (1, 0), (0, 0)).unwrap();
        assert_eq!(id, vec![Q.one()]);
        let e = ext_dims(&loop_algebra(3), 3).unwrap();
        let sq = yoneda_product(&e, (1, 0), (1, 0)).unwrap();
        assert!(sq[0].is_zero());
    }

    #[test]
    fn projective_cover_examples() {
        let a = loop_algebra(3);
        let reg = LeftModule::regular(&a);
        let rad = reg.radical_part(&a).unwrap();
        let m = reg.submodule(&a, &rad).unwrap();
        let c = projective_cover(&m, &a).unwrap();
        assert_eq!(c.vertices, vec![0]);
        assert_eq!(c.kernel().dim(), 1);
        let p = LeftModule::indecomposable_projective(&a2(), 0).unwrap();
        let c = projective_cover(&p, &a2()).unwrap();
        assert_eq!(c.vertices, vec![0]);
        assert!(c.kernel().is_zero());
    }

    #[test]
    fn yoneda_product_is_associative_in_cohomology() {
        let e = ext_dims(&two_loops_square(), 3).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let xy = e.compose(&e.reps[1][x], &e.reps[1][y]).unwrap();
                    let yz = e.compose(&e.reps[1][y], &e.reps[1][z]).unwrap();
                    let l = e.evaluate_top(&e.compose(&xy, &e.reps[1][z]).unwrap());
                    let r = e.evaluate_top(&e.compose(&e.reps[1][x], &yz).unwrap());
                    assert_eq!(l, r);
                }
            }
        }
    }
}
