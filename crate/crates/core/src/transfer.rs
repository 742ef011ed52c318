//! Homotopy transfer from the endomorphism dg algebra of the total minimal resolution
//! onto its cohomology.
//!
//! `E^i = ⊕_{j=i}^{L} Hom(P_j, P_{j-i})` is the quotient of `Hom(P, P)` that forgets
//! components with source degree above `L`; it computes `Ext^i` exactly for `i < L`.
//! The product is composition, `x·y = x ∘ y` (apply `y` first), and
//! `d(x) = D∘x - (-1)^{|x|} x∘D`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, is_zero_vec, unit, vec_sub, Mat, Subspace};
use crate::field::{FieldSpec, Scalar};
use crate::modres::{slot_basis, ChainMap, ExtData};
use crate::quivalg::{enumerate_paths, Path, Quiver};

/// Source degree bound of the dg model; enough for `μ` and arity-4 identities on `ext^1`.
pub const DG_CUTOFF: usize = 3;

#[derive(Clone, Debug)]
struct BlockLayout {
    offset: usize,
    /// `(j, g, h, b)`: entry `b` of the `(g, h)` component of `P_j -> P_{j-i}`.
    coords: Vec<(usize, usize, usize, usize)>,
    /// `cells[j - i][g][h]`: position of the first entry of the `(g, h)` component.
    cells: Vec<Vec<Vec<usize>>>,
    /// `rows[j - i][g]`: range of the entries of row `g` of `P_j -> P_{j-i}`.
    rows: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug)]
pub struct DgAlgebra {
    ext: ExtData,
    verts: usize,
    layout: Vec<Vec<BlockLayout>>,
    dims: Vec<usize>,
    /// Position of each algebra basis element within its Peirce slot.
    slot_pos: Vec<usize>,
}

impl DgAlgebra {
    pub fn new(ext: ExtData) -> DgAlgebra {
        let a = &ext.algebra;
        let p = a.peirce().expect("ext data is over a basic algebra");
        let r = ext.vertex_count();
        let l = ext.cutoff;
        let slot_pos = (0..a.dim())
            .map(|b| (0..b).filter(|&c| p.slot[c] == p.slot[b]).count())
            .collect();
        let mut layout = Vec::new();
        let mut dims = Vec::new();
        for i in 0..=l {
            let mut blocks = Vec::new();
            let mut offset = 0;
            for v in 0..r {
                for w in 0..r {
                    let (rs, rt) = (&ext.resolutions[v], &ext.resolutions[w]);
                    let mut coords = Vec::new();
                    let mut cells = Vec::new();
                    let mut spans = Vec::new();
                    for j in i..=l {
                        let mut rows = Vec::new();
                        let mut span = Vec::new();
                        for &vg in &rs.gens[j] {
                            let mut row = Vec::new();
                            let start = coords.len();
                            for (h, &vh) in rt.gens[j - i].iter().enumerate() {
                                row.push(coords.len());
                                let g = rows.len();
                                for b in slot_basis(p, vg, vh) {
                                    coords.push((j, g, h, b));
                                }
                            }
                            rows.push(row);
                            span.push((start, coords.len()));
                        }
                        cells.push(rows);
                        spans.push(span);
                    }
                    let len = coords.len();
                    blocks.push(BlockLayout {
                        offset,
                        coords,
                        cells,
                        rows: spans,
                    });
                    offset += len;
                }
            }
            layout.push(blocks);
            dims.push(offset);
        }
        DgAlgebra {
            ext,
            verts: r,
            layout,
            dims,
            slot_pos,
        }
    }

    pub fn ext(&self) -> &ExtData {
        &self.ext
    }

    pub fn field(&self) -> FieldSpec {
        self.ext.algebra.field()
    }

    pub fn cutoff(&self) -> usize {
        self.ext.cutoff
    }

    /// `dim E^i`, zero outside `0..=L`.
    pub fn dim(&self, i: usize) -> usize {
        self.dims.get(i).copied().unwrap_or(0)
    }

    pub fn zero(&self, i: usize) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim(i)]
    }

    fn block(&self, i: usize, v: usize, w: usize) -> &BlockLayout {
        &self.layout[i][v * self.verts + w]
    }

    fn block_range(&self, i: usize, v: usize, w: usize) -> core::ops::Range<usize> {
        let b = self.block(i, v, w);
        b.offset..b.offset + b.coords.len()
    }

    /// Absolute index of entry `b` of component `(g, h)` of `P_j -> P_{j-i}` in block `(v, w)`.
    fn pos(&self, i: usize, v: usize, w: usize, j: usize, g: usize, h: usize, b: usize) -> usize {
        let blk = self.block(i, v, w);
        blk.offset + blk.cells[j - i][g][h] + self.slot_pos[b]
    }

    /// Adds `c · (x · y)` for basis element `x` and algebra element `y` (sparse) into `out`,
    /// placing basis element `b'` at `at(b')`.
    fn add_product(
        &self,
        out: &mut [Scalar],
        c: &Scalar,
        left: &[(usize, Scalar)],
        right: &[(usize, Scalar)],
        at: impl Fn(usize) -> usize,
    ) {
        let a = &self.ext.algebra;
        for (x, cx) in left {
            for (y, cy) in right {
                let coef = c.mul(cx).mul(cy);
                for (k, t) in a.mul_basis(*x, *y) {
                    out[at(*k)].add_mul(&coef, t);
                }
            }
        }
    }

    /// `x·y = x ∘ y` for `x ∈ E^a`, `y ∈ E^c`; the empty vector when `a + c > L`.
    pub fn mul(&self, a: usize, x: &[Scalar], c: usize, y: &[Scalar]) -> Vec<Scalar> {
        let deg = a + c;
        if deg > self.cutoff() {
            return Vec::new();
        }
        let r = self.verts;
        let mut out = self.zero(deg);
        for v in 0..r {
            for w in 0..r {
                let yb = self.block(c, v, w);
                for (k, &(j, g, h, b1)) in yb.coords.iter().enumerate() {
                    let cy = &y[yb.offset + k];
                    if cy.is_zero() || j < deg {
                        continue;
                    }
                    let jx = j - c;
                    for u in 0..r {
                        let xb = self.block(a, w, u);
                        let (start, end) = xb.rows[jx - a][h];
                        for kk in start..end {
                            let cx = &x[xb.offset + kk];
                            if cx.is_zero() {
                                continue;
                            }
                            let (_, _, h2, b2) = xb.coords[kk];
                            let coef = cy.mul(cx);
                            for (t, s) in self.ext.algebra.mul_basis(b1, b2) {
                                let idx = self.pos(deg, v, u, j, g, h2, *t);
                                out[idx].add_mul(&coef, s);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `d: E^i -> E^{i+1}`; the empty vector when `i = L`.
    pub fn d(&self, i: usize, x: &[Scalar]) -> Vec<Scalar> {
        if i >= self.cutoff() {
            return Vec::new();
        }
        let l = self.cutoff();
        let r = self.verts;
        let field = self.field();
        let mut out = self.zero(i + 1);
        let minus = if i % 2 == 0 { field.one().neg() } else { field.one() };
        for v in 0..r {
            for w in 0..r {
                let blk = self.block(i, v, w);
                let (rs, rt) = (&self.ext.resolutions[v], &self.ext.resolutions[w]);
                for (k, &(j, g, h, b)) in blk.coords.iter().enumerate() {
                    let c = &x[blk.offset + k];
                    if c.is_zero() {
                        continue;
                    }
                    let one = [(b, field.one())];
                    // D∘x: first x, then the differential of the target resolution
                    if j > i {
                        for (h2, y) in rt.diff[j - i][h].iter().enumerate() {
                            let ys = crate::fdalg::to_sparse(y);
                            self.add_product(&mut out, c, &one, &ys, |t| self.pos(i + 1, v, w, j, g, h2, t));
                        }
                    }
                    // x∘D: first the differential of the source resolution, then x
                    if j < l {
                        let cm = c.mul(&minus);
                        for (g2, row) in rs.diff[j + 1].iter().enumerate() {
                            let ys = crate::fdalg::to_sparse(&row[g]);
                            self.add_product(&mut out, &cm, &ys, &one, |t| self.pos(i + 1, v, w, j + 1, g2, h, t));
                        }
                    }
                }
            }
        }
        out
    }

    fn d_block(&self, i: usize, v: usize, w: usize) -> Mat {
        let field = self.field();
        let src = self.block_range(i, v, w);
        if i >= self.cutoff() {
            return Mat::zeros(field, 0, src.len());
        }
        let dst = self.block_range(i + 1, v, w);
        let mut x = self.zero(i);
        let cols: Vec<Vec<Scalar>> = src
            .clone()
            .map(|k| {
                x[k] = field.one();
                let col = self.d(i, &x)[dst.clone()].to_vec();
                x[k] = field.zero();
                col
            })
            .collect();
        Mat::from_cols(field, dst.len(), &cols)
    }

    pub fn chain_map_element(&self, f: &ChainMap) -> Vec<Scalar> {
        let mut out = self.zero(f.degree);
        for (jj, m) in f.comps.iter().enumerate() {
            for (g, row) in m.iter().enumerate() {
                for (h, y) in row.iter().enumerate() {
                    for (b, c) in y.iter().enumerate() {
                        if !c.is_zero() {
                            let idx = self.pos(f.degree, f.source, f.target, jj + f.degree, g, h, b);
                            out[idx] = c.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// Ext coordinates of a cocycle: idempotent coefficients of its top components.
    pub fn top_eval(&self, i: usize, x: &[Scalar]) -> Vec<Scalar> {
        let p = self.ext.algebra.peirce().expect("basic algebra");
        self.ext.classes[i]
            .iter()
            .map(|cl| x[self.pos(i, cl.source, cl.target, i, cl.gen, 0, p.idempotents[cl.target])].clone())
            .collect()
    }
}

#[derive(Clone, Debug)]
struct BlockData {
    b_count: usize,
    h_basis: Vec<Vec<Scalar>>,
    c_basis: Vec<Vec<Scalar>>,
    inverse: Mat,
    /// Index in the cohomology basis of each `h_basis` vector.
    h_index: Vec<usize>,
}

#[derive(Clone, Debug)]
struct DegreeData {
    blocks: Vec<BlockData>,
    /// `Ext^i` classes come first, then classes created by the truncation.
    h_dim: usize,
}

/// Contraction `(i, p, h)` of `E` onto its cohomology, with
/// `i∘p - id = d∘h + h∘d`, `p∘i = id`, `h∘h = 0`, `h∘i = 0`, `p∘h = 0`.
#[derive(Clone, Debug)]
pub struct Contraction {
    dg: DgAlgebra,
    seed: u64,
    degrees: Vec<DegreeData>,
}

fn random_coeff(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    field.from_i64((rng.next_u32() % 5) as i64 - 2)
}

pub fn build_contraction(dg: DgAlgebra, seed: u64) -> Result<Contraction> {
    let field = dg.field();
    let l = dg.cutoff();
    let r = dg.verts;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degrees: Vec<DegreeData> = Vec::new();
    for i in 0..=l {
        let mut extra = 0;
        let mut blocks = Vec::new();
        let mut pending = Vec::new();
        for v in 0..r {
            for w in 0..r {
                let rng_block = dg.block_range(i, v, w);
                let n = rng_block.len();
                let z = dg.d_block(i, v, w).kernel();
                let b_basis: Vec<Vec<Scalar>> = if i == 0 {
                    Vec::new()
                } else {
                    let prev = &degrees[i - 1].blocks[v * r + w];
                    let src = dg.block_range(i - 1, v, w);
                    prev.c_basis
                        .iter()
                        .map(|c| {
                            let mut full = dg.zero(i - 1);
                            full[src.clone()].clone_from_slice(c);
                            dg.d(i - 1, &full)[rng_block.clone()].to_vec()
                        })
                        .collect()
                };
                let b_space = Subspace::from_vectors(field, n, &b_basis);
                if b_space.dim() != b_basis.len() || !z.contains_space(&b_space) {
                    return Err(Error::Inconsistent(format!("boundaries in degree {i} are malformed")));
                }
                let mut h_basis = Vec::new();
                let mut h_index = Vec::new();
                for (k, cl) in dg.ext.classes[i].iter().enumerate() {
                    if cl.source == v && cl.target == w {
                        let full = dg.chain_map_element(&dg.ext.reps[i][k]);
                        h_basis.push(full[rng_block.clone()].to_vec());
                        h_index.push(k);
                    }
                }
                let bh = b_space.sum(&Subspace::from_vectors(field, n, &h_basis));
                if bh.dim() != b_basis.len() + h_basis.len() || !z.contains_space(&bh) {
                    return Err(Error::Inconsistent(format!(
                        "cocycle representatives in degree {i} are not independent modulo boundaries"
                    )));
                }
                let extras = bh.extend_with(z.basis());
                for x in extras {
                    h_basis.push(x);
                    h_index.push(usize::MAX);
                    extra += 1;
                }
                let mut c_basis: Vec<Vec<Scalar>> =
                    z.complement_indices().into_iter().map(|k| unit(field, n, k)).collect();
                if seed != 0 {
                    for hv in h_basis.iter_mut() {
                        for bv in &b_basis {
                            add_scaled(hv, &random_coeff(&mut rng, field), bv);
                        }
                    }
                    for cv in c_basis.iter_mut() {
                        for zv in z.basis() {
                            add_scaled(cv, &random_coeff(&mut rng, field), zv);
                        }
                    }
                }
                let mut cols = b_basis.clone();
                cols.extend(h_basis.iter().cloned());
                cols.extend(c_basis.iter().cloned());
                if cols.len() != n {
                    return Err(Error::Inconsistent(format!("adapted basis in degree {i} has wrong size")));
                }
                let inverse = Mat::from_cols(field, n, &cols)
                    .inverse()
                    .ok_or_else(|| Error::Inconsistent(format!("adapted basis in degree {i} is singular")))?;
                pending.push(BlockData {
                    b_count: b_basis.len(),
                    h_basis,
                    c_basis,
                    inverse,
                    h_index,
                });
            }
        }
        let ext_dim = dg.ext.total_dim(i);
        let mut next = ext_dim;
        for blk in pending.iter_mut() {
            for idx in blk.h_index.iter_mut() {
                if *idx == usize::MAX {
                    *idx = next;
                    next += 1;
                }
            }
            blocks.push(blk.clone());
        }
        degrees.push(DegreeData {
            blocks,
            h_dim: ext_dim + extra,
        });
    }
    Ok(Contraction { dg, seed, degrees })
}

impl Contraction {
    pub fn dg(&self) -> &DgAlgebra {
        &self.dg
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `dim H^i`; equals `dim Ext^i` for `i < L`.
    pub fn h_dim(&self, i: usize) -> usize {
        self.degrees.get(i).map_or(0, |d| d.h_dim)
    }

    pub fn include(&self, i: usize, k: usize) -> Vec<Scalar> {
        let mut out = self.dg.zero(i);
        let r = self.dg.verts;
        for (bi, blk) in self.degrees[i].blocks.iter().enumerate() {
            if let Some(pos) = blk.h_index.iter().position(|&x| x == k) {
                let range = self.dg.block_range(i, bi / r, bi % r);
                out[range].clone_from_slice(&blk.h_basis[pos]);
            }
        }
        out
    }

    pub fn include_vec(&self, i: usize, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.dg.zero(i);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, c, &self.include(i, k));
            }
        }
        out
    }

    pub fn project(&self, i: usize, x: &[Scalar]) -> Vec<Scalar> {
        let field = self.dg.field();
        let mut out = vec![field.zero(); self.h_dim(i)];
        if i > self.dg.cutoff() {
            return out;
        }
        let r = self.dg.verts;
        for (bi, blk) in self.degrees[i].blocks.iter().enumerate() {
            let xr = &x[self.dg.block_range(i, bi / r, bi % r)];
            if is_zero_vec(xr) {
                continue;
            }
            let coords = blk.inverse.apply(xr);
            for (pos, &k) in blk.h_index.iter().enumerate() {
                out[k] = coords[blk.b_count + pos].clone();
            }
        }
        out
    }

    /// Homotopy with `id - i∘p = d∘h + h∘d`.
    fn homotopy_raw(&self, i: usize, x: &[Scalar]) -> Vec<Scalar> {
        if i == 0 || i > self.dg.cutoff() {
            return Vec::new();
        }
        let mut out = self.dg.zero(i - 1);
        let r = self.dg.verts;
        for (bi, blk) in self.degrees[i].blocks.iter().enumerate() {
            let (v, w) = (bi / r, bi % r);
            let xr = &x[self.dg.block_range(i, v, w)];
            if is_zero_vec(xr) || blk.b_count == 0 {
                continue;
            }
            let coords = blk.inverse.apply(xr);
            let prev = &self.degrees[i - 1].blocks[bi];
            let range = self.dg.block_range(i - 1, v, w);
            for (c, cv) in coords.iter().take(blk.b_count).zip(&prev.c_basis) {
                add_scaled(&mut out[range.clone()], c, cv);
            }
        }
        out
    }

    /// Homotopy `h: E^i -> E^{i-1}` with `i∘p - id = d∘h + h∘d`.
    pub fn homotopy(&self, i: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.homotopy_raw(i, x).iter().map(Scalar::neg).collect()
    }

    /// Checks all five contraction identities on every basis vector.
    pub fn check_identities(&self) -> Result<()> {
        let field = self.dg.field();
        let l = self.dg.cutoff();
        for i in 0..=l {
            for k in 0..self.h_dim(i) {
                let inc = self.include(i, k);
                if self.project(i, &inc) != unit(field, self.h_dim(i), k) {
                    return Err(Error::Inconsistent(format!("p∘i ≠ id in degree {i}")));
                }
                if !is_zero_vec(&self.homotopy(i, &inc)) {
                    return Err(Error::Inconsistent(format!("h∘i ≠ 0 in degree {i}")));
                }
            }
            for k in 0..self.dg.dim(i) {
                let x = unit(field, self.dg.dim(i), k);
                let hx = self.homotopy(i, &x);
                let mut rhs = self.dg.zero(i);
                if i > 0 {
                    rhs = self.dg.d(i - 1, &hx);
                    if !is_zero_vec(&self.homotopy(i - 1, &hx)) {
                        return Err(Error::Inconsistent(format!("h∘h ≠ 0 in degree {i}")));
                    }
                    if !is_zero_vec(&self.project(i - 1, &hx)) {
                        return Err(Error::Inconsistent(format!("p∘h ≠ 0 in degree {i}")));
                    }
                }
                if i < l {
                    let hdx = self.homotopy(i + 1, &self.dg.d(i, &x));
                    rhs = rhs.iter().zip(&hdx).map(|(p, q)| p.add(q)).collect();
                }
                let ip = self.include_vec(i, &self.project(i, &x));
                if vec_sub(&ip, &x) != rhs {
                    return Err(Error::Inconsistent(format!("i∘p - id ≠ dh + hd in degree {i}")));
                }
            }
        }
        Ok(())
    }
}

/// A cohomology basis element: `(degree, index)`.
pub type HClass = (usize, usize);

/// Transferred products `m_n` on `H(E)`, evaluated lazily and memoized on basis tuples.
#[derive(Debug)]
pub struct AInfinityData {
    contraction: Contraction,
    n_max: usize,
    memo: RefCell<BTreeMap<Vec<HClass>, Vec<Scalar>>>,
}

fn sign(odd: bool, field: FieldSpec) -> Scalar {
    if odd {
        field.one().neg()
    } else {
        field.one()
    }
}

pub fn transfer_m(c: Contraction, n_max: usize) -> Result<AInfinityData> {
    if n_max < 2 {
        return Err(Error::DimensionMismatch("arity cutoff must be at least 2".into()));
    }
    Ok(AInfinityData {
        contraction: c,
        n_max,
        memo: RefCell::new(BTreeMap::new()),
    })
}

impl AInfinityData {
    pub fn contraction(&self) -> &Contraction {
        &self.contraction
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn field(&self) -> FieldSpec {
        self.contraction.dg.field()
    }

    fn out_degree(xs: &[HClass]) -> Option<usize> {
        let total: usize = xs.iter().map(|x| x.0).sum::<usize>() + 2;
        total.checked_sub(xs.len())
    }

    /// `λ_n` on included basis classes, with `λ_1 = i`.
    fn lambda(&self, xs: &[HClass]) -> Option<(usize, Vec<Scalar>)> {
        if xs.len() == 1 {
            return Some((xs[0].0, self.contraction.include(xs[0].0, xs[0].1)));
        }
        let deg = Self::out_degree(xs)?;
        if deg > self.contraction.dg.cutoff() {
            return None;
        }
        let field = self.field();
        let dg = &self.contraction.dg;
        let mut out = dg.zero(deg);
        for s in 1..xs.len() {
            let (left, right) = xs.split_at(s);
            let Some(gl) = self.g_lambda(left) else { continue };
            let Some(gr) = self.g_lambda(right) else { continue };
            let t = right.len();
            // Koszul sign of moving G λ_t (degree 1 - t) past the left inputs
            let left_deg: usize = left.iter().map(|x| x.0).sum();
            let odd = ((s + 1) % 2 == 1) ^ (t % 2 == 0 && left_deg % 2 == 1);
            let prod = dg.mul(gl.0, &gl.1, gr.0, &gr.1);
            if prod.is_empty() {
                continue;
            }
            add_scaled(&mut out, &sign(odd, field), &prod);
        }
        Some((deg, out))
    }

    /// `G λ_k`, with `G λ_1 = -i` and `G = h` above arity one.
    fn g_lambda(&self, xs: &[HClass]) -> Option<(usize, Vec<Scalar>)> {
        let (deg, l) = self.lambda(xs)?;
        if xs.len() == 1 {
            return Some((deg, l.iter().map(Scalar::neg).collect()));
        }
        if deg == 0 {
            return None;
        }
        let h = self.contraction.homotopy_raw(deg, &l);
        Some((deg - 1, h))
    }

    /// `m_n(x_1, …, x_n)` in the cohomology basis of the output degree.
    pub fn m(&self, xs: &[HClass]) -> Vec<Scalar> {
        if let Some(v) = self.memo.borrow().get(xs) {
            return v.clone();
        }
        let field = self.field();
        let out = match Self::out_degree(xs) {
            Some(deg) if xs.len() >= 2 => match self.lambda(xs) {
                Some((d, l)) => self.contraction.project(d, &l),
                None => vec![field.zero(); self.contraction.h_dim(deg)],
            },
            _ => Vec::new(),
        };
        self.memo.borrow_mut().insert(xs.to_vec(), out.clone());
        out
    }

    /// `m_n` extended multilinearly to coefficient vectors of the given degrees.
    pub fn m_vec(&self, inputs: &[(usize, Vec<Scalar>)]) -> Vec<Scalar> {
        let field = self.field();
        let deg = {
            let total: usize = inputs.iter().map(|x| x.0).sum::<usize>() + 2;
            total.checked_sub(inputs.len())
        };
        let Some(deg) = deg else { return Vec::new() };
        let mut out = vec![field.zero(); self.contraction.h_dim(deg)];
        let mut idx = vec![0usize; inputs.len()];
        let supports: Vec<Vec<usize>> = inputs
            .iter()
            .map(|(_, v)| (0..v.len()).filter(|&k| !v[k].is_zero()).collect())
            .collect();
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        loop {
            let mut coef = field.one();
            let mut tuple = Vec::with_capacity(inputs.len());
            for (t, &k) in idx.iter().enumerate() {
                let b = supports[t][k];
                coef = coef.mul(&inputs[t].1[b]);
                tuple.push((inputs[t].0, b));
            }
            let val = self.m(&tuple);
            if !val.is_empty() {
                add_scaled(&mut out, &coef, &val);
            }
            let mut t = inputs.len();
            loop {
                if t == 0 {
                    return out;
                }
                t -= 1;
                idx[t] += 1;
                if idx[t] < supports[t].len() {
                    break;
                }
                idx[t] = 0;
            }
        }
    }
}

/// First failing tuple of a Stasheff identity, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StasheffReport {
    pub checked: usize,
    pub violation: Option<(usize, Vec<HClass>)>,
}

impl StasheffReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// `Σ (-1)^{r+st} m_u(1^r ⊗ m_s ⊗ 1^t) = 0` on all `ext^1` tuples of arity `3..=n_max`.
pub fn stasheff_check(ai: &AInfinityData, n_max: usize) -> StasheffReport {
    let field = ai.field();
    let e1 = ai.contraction.h_dim(1);
    let mut checked = 0;
    for n in 3..=n_max {
        let total = e1.checked_pow(n as u32).unwrap_or(usize::MAX);
        for code in 0..total {
            let mut c = code;
            let tuple: Vec<HClass> = (0..n)
                .map(|_| {
                    let k = c % e1;
                    c /= e1;
                    (1, k)
                })
                .collect();
            let deg = AInfinityData::out_degree(&tuple).map(|d| d + 1).unwrap_or(0);
            let mut acc = vec![field.zero(); ai.contraction.h_dim(deg)];
            for s in 2..n {
                for r in 0..=n - s {
                    let t = n - s - r;
                    let inner = ai.m(&tuple[r..r + s]);
                    let inner_deg = AInfinityData::out_degree(&tuple[r..r + s]).unwrap_or(0);
                    let pre: usize = tuple[..r].iter().map(|x| x.0).sum();
                    let koszul = (s % 2 == 1) && pre % 2 == 1;
                    let odd = ((r + s * t) % 2 == 1) ^ koszul;
                    let mut inputs: Vec<(usize, Vec<Scalar>)> =
                        tuple[..r].iter().map(|x| (x.0, unit(field, ai.contraction.h_dim(x.0), x.1))).collect();
                    inputs.push((inner_deg, inner));
                    inputs.extend(tuple[r + s..].iter().map(|x| (x.0, unit(field, ai.contraction.h_dim(x.0), x.1))));
                    let val = ai.m_vec(&inputs);
                    if !val.is_empty() {
                        add_scaled(&mut acc, &sign(odd, field), &val);
                    }
                }
            }
            checked += 1;
            if !is_zero_vec(&acc) {
                return StasheffReport {
                    checked,
                    violation: Some((n, tuple)),
                };
            }
        }
    }
    StasheffReport {
        checked,
        violation: None,
    }
}

/// `μ` on the paths of the `ext^1`-quiver up to a length, as an `ext^2 × paths` matrix.
#[derive(Clone, Debug)]
pub struct MaurerCartanMap {
    pub paths: Vec<Path>,
    pub matrix: Mat,
}

impl MaurerCartanMap {
    pub fn value(&self, k: usize) -> Vec<Scalar> {
        self.matrix.col(k)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `μ(α_1⋯α_n) = m_n(α_n, …, α_1)`: the path is traversed `α_1` first while the
/// product on `E` composes right to left.
pub fn maurer_cartan(ai: &AInfinityData, quiver: &Quiver, arrow_class: &[usize], max_len: usize) -> MaurerCartanMap {
    let field = ai.field();
    let paths = enumerate_paths(quiver, max_len);
    let e2 = ai.contraction.h_dim(2).min(ai.contraction.dg.ext.total_dim(2));
    let cols: Vec<Vec<Scalar>> = paths
        .iter()
        .map(|p| {
            if p.len() < 2 {
                return vec![field.zero(); e2];
            }
            let tuple: Vec<HClass> = p.arrows().iter().rev().map(|&a| (1, arrow_class[a])).collect();
            let mut v = ai.m(&tuple);
            v.truncate(e2);
            v
        })
        .collect();
    MaurerCartanMap {
        paths,
        matrix: Mat::from_cols(field, e2, &cols),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdalg::FdAlgebra;
    use crate::modres::{ext_dims, ext_quiver, yoneda_product};
    use crate::quivalg::{build_algebra, QuiverPresentation};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn loops(labels: &[&str], n: usize, relations: &[&[(i64, &[usize])]]) -> FdAlgebra {
        let mut q = Quiver::new(vec!["1".into()]).unwrap();
        for l in labels {
            q.add_arrow(l, 0, 0).unwrap();
        }
        let relations = relations
            .iter()
            .map(|r| r.iter().map(|(c, p)| (Q.from_i64(*c), Path::new(&q, p.to_vec()).unwrap())).collect())
            .collect();
        build_algebra(&QuiverPresentation {
            quiver: q,
            relations,
            truncation: n,
            field: Q,
        })
        .unwrap()
    }

    fn ainf(a: &FdAlgebra, seed: u64) -> AInfinityData {
        let ext = ext_dims(a, DG_CUTOFF).unwrap();
        let c = build_contraction(DgAlgebra::new(ext), seed).unwrap();
        transfer_m(c, 6).unwrap()
    }

    #[test]
    fn contraction_identities_hold_for_several_seeds() {
        for a in [loops(&["a"], 2, &[]), loops(&["a"], 3, &[]), loops(&["x", "y"], 2, &[])] {
            for seed in 0..3 {
                let ext = ext_dims(&a, DG_CUTOFF).unwrap();
                let c = build_contraction(DgAlgebra::new(ext), seed).unwrap();
                c.check_identities().unwrap();
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        let ext = ext_dims(&loops(&["x", "y"], 2, &[]), DG_CUTOFF).unwrap();
        let dg = DgAlgebra::new(ext);
        for i in 0..DG_CUTOFF - 1 {
            for k in 0..dg.dim(i) {
                let x = unit(Q, dg.dim(i), k);
                assert!(is_zero_vec(&dg.d(i + 1, &dg.d(i, &x))));
            }
        }
    }

    #[test]
    fn truncated_polynomial_products() {
        for n in 2..=5 {
            let ai = ainf(&loops(&["a"], n, &[]), 0);
            for k in 2..n {
                assert!(is_zero_vec(&ai.m(&vec![(1, 0); k])), "m_{k} on x^{n}");
            }
            assert!(!is_zero_vec(&ai.m(&vec![(1, 0); n])), "m_{n} on x^{n}");
        }
    }

    #[test]
    fn stasheff_identities_low_arity() {
        for a in [
            loops(&["a"], 2, &[]),
            loops(&["a"], 3, &[]),
            loops(&["x", "y"], 2, &[]),
            loops(&["x", "y"], 3, &[&[(1, &[0, 1]), (-2, &[1, 0])]]),
        ] {
            for seed in 0..2 {
                let ai = ainf(&a, seed);
                let rep = stasheff_check(&ai, 4);
                assert!(rep.passed(), "{:?}", rep.violation);
            }
        }
    }

    #[test]
    fn m2_matches_yoneda_product() {
        let a = loops(&["x", "y"], 3, &[&[(1, &[0, 1]), (-2, &[1, 0])]]);
        let ai = ainf(&a, 1);
        let ext = ai.contraction().dg().ext();
        for x in 0..2 {
            for y in 0..2 {
                let m2 = ai.m(&[(1, x), (1, y)]);
                let yon = yoneda_product(ext, (1, y), (1, x)).unwrap();
                assert_eq!(m2, yon);
            }
        }
    }

    #[test]
    fn maurer_cartan_examples() {
        let a = loops(&["a"], 2, &[]);
        let ai = ainf(&a, 0);
        let eq = ext_quiver(ai.contraction().dg().ext()).unwrap();
        let mu = maurer_cartan(&ai, &eq.quiver, &eq.arrow_class, 3);
        let labels: Vec<_> = mu.paths.iter().map(|p| p.len()).collect();
        assert_eq!(labels, vec![0, 1, 2, 3]);
        assert!(is_zero_vec(&mu.value(0)) && is_zero_vec(&mu.value(1)));
        assert!(!is_zero_vec(&mu.value(2)));
    }
}
