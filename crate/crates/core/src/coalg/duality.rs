use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{coradical, dual_algebra, dual_coalgebra_fd, Coalgebra, CoalgebraMorphism};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Subspace};
use crate::fdalg::{simples, FdAlgebra};
use crate::field::{FieldSpec, Scalar};

/// Transpose of an algebra map `f : A → C*` (given as `dim C × dim A`), checked to be a
/// coalgebra map `C → A*`.
pub fn kostant_transpose(a: &FdAlgebra, c: &Coalgebra, f: &Mat) -> Result<CoalgebraMorphism> {
    a.check_morphism(&dual_algebra(c), f)?;
    let g = CoalgebraMorphism { map: f.transpose() };
    g.check(c, &dual_coalgebra_fd(a))?;
    Ok(g)
}

/// Counts of both sides of the Kostant correspondence over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantCensus {
    pub linear_maps: usize,
    pub algebra_morphisms: usize,
    pub coalgebra_morphisms: usize,
    /// Transposition carries one set exactly onto the other.
    pub bijective: bool,
}

fn all_matrices(field: FieldSpec, rows: usize, cols: usize) -> Result<Vec<Mat>> {
    let elems: Vec<Scalar> = field
        .elements()
        .ok_or_else(|| Error::Unsupported("exhaustive enumeration needs a finite field".into()))?
        .collect();
    let n = rows * cols;
    let total = (elems.len() as u64).checked_pow(n as u32).filter(|&t| t <= 1 << 16);
    let total = total.ok_or_else(|| Error::Unsupported(format!("{} linear maps is too many to enumerate", elems.len())))?;
    let mut out = Vec::with_capacity(total as usize);
    for mut code in 0..total {
        let mut m = Mat::zeros(field, rows, cols);
        for k in 0..n {
            m.set(k / cols, k % cols, elems[(code % elems.len() as u64) as usize].clone());
            code /= elems.len() as u64;
        }
        out.push(m);
    }
    Ok(out)
}

/// Enumerate every linear map both ways and compare algebra maps `A → C*` with
/// coalgebra maps `C → A*`.
pub fn kostant_exhaustive(a: &FdAlgebra, c: &Coalgebra) -> Result<KostantCensus> {
    let cstar = dual_algebra(c);
    let astar = dual_coalgebra_fd(a);
    let maps = all_matrices(a.field(), c.dim(), a.dim())?;
    let alg: Vec<Vec<Vec<Scalar>>> = maps
        .iter()
        .filter(|f| a.check_morphism(&cstar, f).is_ok())
        .map(|f| f.transpose().row_vecs())
        .collect();
    let coal: Vec<Vec<Vec<Scalar>>> = maps
        .iter()
        .map(Mat::transpose)
        .filter(|g| CoalgebraMorphism { map: g.clone() }.check(c, &astar).is_ok())
        .map(|g| g.row_vecs())
        .collect();
    Ok(KostantCensus {
        linear_maps: maps.len(),
        algebra_morphisms: alg.len(),
        coalgebra_morphisms: coal.len(),
        bijective: alg.len() == coal.len() && alg.iter().all(|f| coal.contains(f)),
    })
}

/// `φ* : B* → A*` for an algebra map `φ : A → B` (given as `dim B × dim A`).
pub fn dual_morphism(a: &FdAlgebra, b: &FdAlgebra, phi: &Mat) -> Result<CoalgebraMorphism> {
    a.check_morphism(b, phi)?;
    let g = CoalgebraMorphism { map: phi.transpose() };
    g.check(&dual_coalgebra_fd(b), &dual_coalgebra_fd(a))?;
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub preserved: bool,
    /// A functional in `φ*(corad B*)` outside `corad A*`.
    pub witness: Option<Vec<Scalar>>,
    pub witness_label: Option<String>,
}

fn functional_label(a: &FdAlgebra, v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            if c.is_one() {
                format!("{}*", a.labels()[k])
            } else {
                format!("{c}·{}*", a.labels()[k])
            }
        })
        .collect();
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join(" + ")
    }
}

/// Whether `φ*` carries the coradical of `B*` into the coradical of `A*`.
pub fn corad_preservation_check(a: &FdAlgebra, b: &FdAlgebra, phi: &Mat) -> Result<PreservationReport> {
    let g = dual_morphism(a, b, phi)?;
    let image = coradical(&dual_coalgebra_fd(b))?.image_under(&g.map);
    let target = coradical(&dual_coalgebra_fd(a))?;
    let witness = image.basis().iter().find(|v| !target.contains(v)).cloned();
    Ok(PreservationReport {
        preserved: witness.is_none(),
        witness_label: witness.as_ref().map(|w| functional_label(a, w)),
        witness,
    })
}

/// The simple subcoalgebras of `A*`, one per simple module: the span of its matrix coefficients.
pub fn simple_subcoalgebras(a: &FdAlgebra) -> Result<Vec<Subspace>> {
    let ss = simples(a)?;
    Ok(ss
        .iter()
        .map(|s| {
            let mut coeffs = Vec::new();
            for i in 0..s.dim {
                for j in 0..s.dim {
                    coeffs.push((0..a.dim()).map(|k| s.action[k].get(i, j).clone()).collect::<Vec<_>>());
                }
            }
            Subspace::from_vectors(a.field(), a.dim(), &coeffs)
        })
        .collect())
}

/// Indices of the simples whose subcoalgebra annihilates `elem`.
pub fn zariski_closed(a: &FdAlgebra, elem: &[Scalar]) -> Result<Vec<usize>> {
    if elem.len() != a.dim() {
        return Err(Error::DimensionMismatch("element has the wrong length".into()));
    }
    let subs = simple_subcoalgebras(a)?;
    Ok(subs
        .iter()
        .enumerate()
        .filter(|(_, s)| {
            s.basis().iter().all(|f| {
                let mut v = a.field().zero();
                for (x, y) in f.iter().zip(elem) {
                    v.add_mul(x, y);
                }
                v.is_zero()
            })
        })
        .map(|(k, _)| k)
        .collect())
}

/// `ev(f ⊗ xy) = Σ ev(f₁ ⊗ x) ev(f₂ ⊗ y)` and `ev(f ⊗ 1) = ε(f)` for every basis functional and pair.
pub fn measuring_check(a: &FdAlgebra) -> Result<()> {
    let c = dual_coalgebra_fd(a);
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let xy = a.mul(&a.basis_vec(i), &a.basis_vec(j));
            for (k, value) in xy.iter().enumerate() {
                let mut split = a.field().zero();
                for (p, q, d) in c.delta(k) {
                    if *p == i && *q == j {
                        split = split.add(d);
                    }
                }
                if &split != value {
                    return Err(Error::Inconsistent(format!(
                        "measuring fails for {}* on {} ⊗ {}",
                        a.labels()[k],
                        a.labels()[i],
                        a.labels()[j]
                    )));
                }
            }
        }
    }
    for k in 0..n {
        if c.counit()[k] != a.unit()[k] {
            return Err(Error::Inconsistent(format!("ev({}* ⊗ 1) ≠ ε", a.labels()[k])));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::unit;
    use alloc::vec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn triangular_inclusion_breaks_coradical() {
        let t2 = FdAlgebra::upper_triangular_2(Q);
        let m2 = FdAlgebra::matrix_algebra(Q, 2);
        let cols = [unit(Q, 4, 0), unit(Q, 4, 1), unit(Q, 4, 3)];
        let phi = Mat::from_cols(Q, 4, &cols);
        let r = corad_preservation_check(&t2, &m2, &phi).unwrap();
        assert!(!r.preserved);
        assert_eq!(r.witness_label.as_deref(), Some("e12*"));
        // identity preserves
        let id = corad_preservation_check(&t2, &t2, &Mat::identity(Q, 3)).unwrap();
        assert!(id.preserved);
    }

    #[test]
    fn surjection_preserves_coradical() {
        // k[x]/(x^2) → k, x ↦ 0
        let a = FdAlgebra::truncated_polynomial(Q, &[0, 0]);
        let k = FdAlgebra::truncated_polynomial(Q, &[0]);
        let phi = Mat::from_i64(Q, 1, 2, &[1, 0]);
        assert!(corad_preservation_check(&a, &k, &phi).unwrap().preserved);
    }

    #[test]
    fn zariski_examples() {
        let a = FdAlgebra::truncated_polynomial(Q, &[0, -1]);
        let x = a.basis_vec(1);
        let one_minus_x = vec![Q.one(), Q.from_i64(-1)];
        let vx = zariski_closed(&a, &x).unwrap();
        let vy = zariski_closed(&a, &one_minus_x).unwrap();
        assert_eq!(vx.len(), 1);
        assert_eq!(vy.len(), 1);
        assert_ne!(vx, vy);
        assert!(zariski_closed(&a, &a.unit().to_vec()).unwrap().is_empty());
        assert_eq!(zariski_closed(&a, &a.zero_elem()).unwrap().len(), 2);
    }

    #[test]
    fn simple_subcoalgebras_dims() {
        let m2 = FdAlgebra::matrix_algebra(Q, 2);
        let s = simple_subcoalgebras(&m2).unwrap();
        assert_eq!(s.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![4]);
        let t2 = FdAlgebra::upper_triangular_2(Q);
        let s = simple_subcoalgebras(&t2).unwrap();
        let total = s.iter().fold(Subspace::zero(Q, 3), |acc, x| acc.sum(x));
        assert_eq!(total, coradical(&dual_coalgebra_fd(&t2)).unwrap());
    }

    #[test]
    fn measuring_holds() {
        measuring_check(&FdAlgebra::upper_triangular_2(Q)).unwrap();
        measuring_check(&FdAlgebra::matrix_algebra(Q, 2)).unwrap();
        measuring_check(&FdAlgebra::truncated_polynomial(Q, &[0, 0, 0])).unwrap();
    }

    #[test]
    fn kostant_over_f2() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = FdAlgebra::truncated_polynomial(f2, &[0, 0]);
        let c = dual_coalgebra_fd(&FdAlgebra::truncated_polynomial(f2, &[0, 1]));
        let census = kostant_exhaustive(&a, &c).unwrap();
        assert!(census.bijective);
        assert!(census.algebra_morphisms >= 1);
        let t = FdAlgebra::upper_triangular_2(f2);
        let census = kostant_exhaustive(&t, &dual_coalgebra_fd(&a)).unwrap();
        assert!(census.bijective);
    }

    #[test]
    fn kostant_transpose_of_unit_map() {
        let a = FdAlgebra::truncated_polynomial(Q, &[0]);
        let c = dual_coalgebra_fd(&FdAlgebra::truncated_polynomial(Q, &[0, 0]));
        // k → C*, 1 ↦ ε
        let f = Mat::from_cols(Q, 2, &[c.counit().to_vec()]);
        let g = kostant_transpose(&a, &c, &f).unwrap();
        assert_eq!(g.map.transpose(), f);
    }
}
