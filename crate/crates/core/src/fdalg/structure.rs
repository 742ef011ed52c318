use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::split::{corner, split_semisimple};
use super::{FdAlgebra, PeirceData};
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, vec_sub, Mat, Subspace};
use crate::field::{FieldSpec, Scalar};

/// A simple module, given by the action of every algebra basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleDescriptor {
    pub index: usize,
    pub dim: usize,
    pub action: Vec<Mat>,
}

impl SimpleDescriptor {
    pub fn act(&self, a: &FdAlgebra, x: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(a.field(), self.dim, self.dim);
        for (c, act) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m = m.add(&act.scale(c));
            }
        }
        m
    }

    /// The action respects all structure constants and the unit.
    pub fn check_homomorphism(&self, a: &FdAlgebra) -> bool {
        let n = a.dim();
        if self.act(a, a.unit()) != Mat::identity(a.field(), self.dim) {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let prod = super::sparse_to_dense(a.field(), n, a.mul_basis(i, j));
                if self.act(a, &prod) != self.action[i].mul(&self.action[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Irreducibility test. Over `F_p` every nonzero vector is tried when
    /// `p^dim <= brute_force_limit`; otherwise the basis vectors are checked to be cyclic.
    pub fn check_simple(&self, field: FieldSpec, brute_force_limit: u64) -> bool {
        let cyclic = |v: &[Scalar]| -> bool {
            let vecs: Vec<Vec<Scalar>> = self.action.iter().map(|m| m.apply(v)).collect();
            Subspace::from_vectors(field, self.dim, &vecs).dim() == self.dim
        };
        match field {
            FieldSpec::Prime(p) if (p as u128).pow(self.dim as u32) <= brute_force_limit as u128 => {
                let total = p.pow(self.dim as u32);
                (1..total).all(|mut code| {
                    let v: Vec<Scalar> = (0..self.dim)
                        .map(|_| {
                            let d = code % p;
                            code /= p;
                            field.from_i64(d as i64)
                        })
                        .collect();
                    cyclic(&v)
                })
            }
            _ => (0..self.dim).all(|i| cyclic(&crate::exactlin::unit(field, self.dim, i))),
        }
    }
}

/// Jacobson radical.
///
/// Algebras in Peirce normal form report their radical directly. Otherwise the
/// radical is the kernel of the trace form `(x, y) ↦ tr(L_{xy})`, which is valid
/// in characteristic zero and in characteristic `p > dim`.
pub fn radical(a: &FdAlgebra) -> Result<Subspace> {
    if let Some(p) = a.peirce() {
        let idx: Vec<usize> = (0..a.dim()).filter(|b| !p.is_idempotent(*b)).collect();
        return Ok(Subspace::coordinate(a.field(), a.dim(), &idx));
    }
    let field = a.field();
    let n = a.dim();
    match field {
        FieldSpec::Prime(p) if p as usize <= n => {
            return Err(Error::Unsupported(format!(
                "radical of a {n}-dimensional algebra over {field} without a quiver presentation \
                 (trace form criterion needs characteristic 0 or > {n})"
            )))
        }
        _ => {}
    }
    let traces: Vec<Scalar> = (0..n)
        .map(|k| {
            let m = a.left_mult(&a.basis_vec(k));
            let mut t = field.zero();
            for i in 0..n {
                t = t.add(m.get(i, i));
            }
            t
        })
        .collect();
    let mut gram = Mat::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut t = field.zero();
            for (k, c) in a.mul_basis(i, j) {
                t.add_mul(c, &traces[*k]);
            }
            gram.set(i, j, t);
        }
    }
    Ok(gram.transpose().kernel())
}

/// `A / I` for a two-sided ideal, with the projection `A -> A/I` and the section
/// sending each quotient basis vector to the standard basis vector it came from.
pub fn quotient_algebra(a: &FdAlgebra, ideal: &Subspace) -> (FdAlgebra, Mat, Mat) {
    let field = a.field();
    let n = a.dim();
    let keep = ideal.complement_indices();
    let m = keep.len();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let r = ideal.reduce(v);
        keep.iter().map(|&k| r[k].clone()).collect()
    };
    let mut table = vec![vec![Vec::new(); m]; m];
    for (i, &bi) in keep.iter().enumerate() {
        for (j, &bj) in keep.iter().enumerate() {
            let prod = super::sparse_to_dense(field, n, a.mul_basis(bi, bj));
            table[i][j] = super::to_sparse(&project(&prod));
        }
    }
    let unit = project(a.unit());
    let labels = keep.iter().map(|&k| format!("[{}]", a.labels()[k])).collect();
    let proj_cols: Vec<Vec<Scalar>> = (0..n).map(|i| project(&a.basis_vec(i))).collect();
    let proj = Mat::from_cols(field, m, &proj_cols);
    let sec_cols: Vec<Vec<Scalar>> = keep.iter().map(|&k| a.basis_vec(k)).collect();
    let sec = Mat::from_cols(field, n, &sec_cols);
    (FdAlgebra::from_sparse_unchecked(field, labels, table, unit), proj, sec)
}

/// One descriptor per isomorphism class of simple modules.
pub fn simples(a: &FdAlgebra) -> Result<Vec<SimpleDescriptor>> {
    let field = a.field();
    if let Some(p) = a.peirce() {
        return Ok((0..p.vertex_count())
            .map(|v| SimpleDescriptor {
                index: v,
                dim: 1,
                action: (0..a.dim())
                    .map(|b| {
                        let x = if p.idempotents[v] == b { field.one() } else { field.zero() };
                        Mat::from_rows(field, 1, &[vec![x]])
                    })
                    .collect(),
            })
            .collect());
    }
    let j = radical(a)?;
    let (b, proj, _) = quotient_algebra(a, &j);
    let blocks = split_semisimple(&b)?;
    let mut out = Vec::new();
    for (idx, blk) in blocks.iter().enumerate() {
        // the simple module is the left ideal B e
        let module: Vec<Vec<Scalar>> = (0..b.dim()).map(|i| b.mul(&b.basis_vec(i), &blk.primitive)).collect();
        let module = Subspace::from_vectors(field, b.dim(), &module);
        let basis = Mat::from_cols(field, b.dim(), module.basis());
        let action = (0..a.dim())
            .map(|k| {
                let img = proj.apply(&a.basis_vec(k));
                let cols: Vec<Vec<Scalar>> = module
                    .basis()
                    .iter()
                    .map(|m| basis.solve(&b.mul(&img, m)).expect("left ideal is stable"))
                    .collect();
                Mat::from_cols(field, module.dim(), &cols)
            })
            .collect();
        out.push(SimpleDescriptor {
            index: idx,
            dim: module.dim(),
            action,
        });
    }
    Ok(out)
}

fn lift_idempotent(a: &FdAlgebra, t: Vec<Scalar>) -> Result<Vec<Scalar>> {
    let three = a.field().from_i64(3);
    let two = a.field().from_i64(2);
    let mut t = t;
    for _ in 0..64 {
        let t2 = a.mul(&t, &t);
        if t2 == t {
            return Ok(t);
        }
        let t3 = a.mul(&t2, &t);
        t = t2
            .iter()
            .zip(&t3)
            .map(|(x, y)| x.mul(&three).sub(&y.mul(&two)))
            .collect();
    }
    Err(Error::Inconsistent("idempotent lifting did not converge".into()))
}

/// The basic algebra `eAe`, with `e` a sum of one primitive idempotent per simple,
/// returned in Peirce normal form.
pub fn basic_algebra(a: &FdAlgebra) -> Result<FdAlgebra> {
    if a.peirce().is_some() {
        return Ok(a.clone());
    }
    let field = a.field();
    let j = radical(a)?;
    let (b, _proj, sec) = quotient_algebra(a, &j);
    let blocks = split_semisimple(&b)?;
    let mut remaining = a.unit().to_vec();
    let mut idems: Vec<Vec<Scalar>> = Vec::new();
    for blk in &blocks {
        let s = sec.apply(&blk.primitive);
        let t = a.mul(&a.mul(&remaining, &s), &remaining);
        let f = lift_idempotent(a, t)?;
        remaining = vec_sub(&remaining, &f);
        idems.push(f);
    }
    let mut e = a.zero_elem();
    for f in &idems {
        e = e.iter().zip(f).map(|(x, y)| x.add(y)).collect();
    }
    // Peirce-adapted basis of eAe: idempotents, then bases of f_u J f_v.
    let r = idems.len();
    let mut basis = idems.clone();
    let mut labels: Vec<String> = (0..r).map(|u| format!("e_{}", u + 1)).collect();
    let mut slot: Vec<(usize, usize)> = (0..r).map(|u| (u, u)).collect();
    for u in 0..r {
        for v in 0..r {
            let vecs: Vec<Vec<Scalar>> = j
                .basis()
                .iter()
                .map(|x| a.mul(&a.mul(&idems[u], x), &idems[v]))
                .filter(|x| !is_zero_vec(x))
                .collect();
            let piece = Subspace::from_vectors(field, a.dim(), &vecs);
            for (k, x) in piece.basis().iter().enumerate() {
                basis.push(x.clone());
                labels.push(format!("r{}{}_{}", u + 1, v + 1, k + 1));
                slot.push((u, v));
            }
        }
    }
    let expect = corner(a, &e, &e).dim();
    if basis.len() != expect {
        return Err(Error::Inconsistent(format!(
            "Peirce basis has {} elements, corner has dimension {expect}",
            basis.len()
        )));
    }
    let out = a.restrict_to(labels, &basis, &e)?;
    let peirce = PeirceData {
        vertex_labels: (0..r).map(|u| format!("{}", u + 1)).collect(),
        idempotents: (0..r).collect(),
        slot,
    };
    Ok(out.with_peirce(peirce))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivalg::{build_algebra, Quiver, QuiverPresentation};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn a2_path_algebra() -> FdAlgebra {
        let mut q = Quiver::new(vec!["1".into(), "2".into()]).unwrap();
        q.add_arrow("a", 0, 1).unwrap();
        build_algebra(&QuiverPresentation {
            quiver: q,
            relations: vec![],
            truncation: 3,
            field: Q,
        })
        .unwrap()
    }

    fn strip(a: &FdAlgebra) -> FdAlgebra {
        FdAlgebra::from_table(a.field(), a.labels().to_vec(), &a.dense_table(), a.unit().to_vec()).unwrap()
    }

    #[test]
    fn radical_examples() {
        let dual_numbers = FdAlgebra::truncated_polynomial(Q, &[0, 0]);
        let j = radical(&dual_numbers).unwrap();
        assert_eq!(j, Subspace::coordinate(Q, 2, &[1]));
        let kk = FdAlgebra::truncated_polynomial(Q, &[0, -1]);
        assert!(radical(&kk).unwrap().is_zero());
        let a2 = a2_path_algebra();
        let j = radical(&a2).unwrap();
        assert_eq!(j.dim(), 1);
        assert!(a2.product_space(&j, &j).is_zero());
        // the trace form agrees with the Peirce radical
        assert_eq!(radical(&strip(&a2)).unwrap(), j);
    }

    #[test]
    fn radical_small_prime_field_unsupported() {
        let a = FdAlgebra::truncated_polynomial(FieldSpec::Prime(2), &[0, 0, 0]);
        assert!(matches!(radical(&a), Err(Error::Unsupported(_))));
        let a = FdAlgebra::truncated_polynomial(FieldSpec::Prime(5), &[0, 0, 0]);
        assert_eq!(radical(&a).unwrap().dim(), 2);
    }

    #[test]
    fn simples_examples() {
        assert_eq!(simples(&a2_path_algebra()).unwrap().len(), 2);
        let x3 = FdAlgebra::truncated_polynomial(Q, &[0, 0, 0]);
        assert_eq!(simples(&x3).unwrap().len(), 1);
        let t2 = FdAlgebra::upper_triangular_2(Q);
        let s = simples(&t2).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|d| d.dim == 1 && d.check_homomorphism(&t2)));
    }

    #[test]
    fn wedderburn_dimension_count() {
        let k = FdAlgebra::truncated_polynomial(Q, &[0]);
        let a = k
            .product(&FdAlgebra::matrix_algebra(Q, 2))
            .unwrap()
            .product(&FdAlgebra::upper_triangular_2(Q))
            .unwrap();
        let s = simples(&a).unwrap();
        let j = radical(&a).unwrap();
        let total: usize = s.iter().map(|d| d.dim * d.dim).sum();
        assert_eq!(total, a.dim() - j.dim());
        for d in &s {
            assert!(d.check_homomorphism(&a));
            assert!(d.check_simple(Q, 0));
        }
    }

    #[test]
    fn basic_algebra_examples() {
        let m2 = FdAlgebra::matrix_algebra(Q, 2);
        let b = basic_algebra(&m2).unwrap();
        assert_eq!(b.dim(), 1);
        b.check_axioms().unwrap();

        let a2 = a2_path_algebra();
        assert_eq!(basic_algebra(&a2).unwrap(), a2);

        let k = FdAlgebra::truncated_polynomial(Q, &[0]);
        let a = k.product(&m2).unwrap();
        let b = basic_algebra(&a).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(radical(&b).unwrap().is_zero());
        b.check_axioms().unwrap();

        // idempotent stability
        let t2 = FdAlgebra::upper_triangular_2(Q).product(&m2).unwrap();
        let b1 = basic_algebra(&t2).unwrap();
        let b2 = basic_algebra(&strip(&b1)).unwrap();
        assert_eq!(b1.dim(), b2.dim());
        assert_eq!(b1.dim(), 4);
    }

    #[test]
    fn simple_module_brute_force_over_small_field() {
        let m2 = FdAlgebra::matrix_algebra(FieldSpec::Prime(5), 2);
        let s = simples(&m2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].dim, 2);
        assert!(s[0].check_simple(FieldSpec::Prime(5), 1 << 12));
    }
}
