//! Splitting split-semisimple algebras into matrix blocks.
//!
//! Central idempotents come from Lagrange interpolation on elements of the
//! centre whose minimal polynomial splits into distinct linear factors.
//! Inside a simple block a primitive idempotent is found by locating a zero
//! divisor and shrinking to the corner of the left ideal it generates.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FdAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, vec_sub, Mat, Subspace};
use crate::field::{FieldSpec, Scalar};

/// One simple block `M_n(k)` of a split semisimple algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitBlock {
    pub central: Vec<Scalar>,
    pub primitive: Vec<Scalar>,
    pub n: usize,
}

/// Minimal polynomial (monic, lowest coefficient first) of `x` inside the corner with unit `e`.
pub(crate) fn min_poly(a: &FdAlgebra, x: &[Scalar], e: &[Scalar]) -> Vec<Scalar> {
    let field = a.field();
    let mut powers: Vec<Vec<Scalar>> = alloc::vec![e.to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), x);
        let m = Mat::from_cols(field, a.dim(), &powers);
        if let Some(c) = m.solve(&next) {
            let mut poly: Vec<Scalar> = c.iter().map(Scalar::neg).collect();
            poly.push(field.one());
            return poly;
        }
        powers.push(next);
    }
}

fn eval_poly(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in p.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Distinct roots of `p` in its field.
pub(crate) fn roots(field: FieldSpec, p: &[Scalar]) -> Vec<Scalar> {
    match field {
        FieldSpec::Prime(_) => field
            .elements()
            .unwrap()
            .filter(|x| eval_poly(p, x).is_zero())
            .collect(),
        FieldSpec::Rationals => rational_roots(p),
    }
}

fn rational_roots(p: &[Scalar]) -> Vec<Scalar> {
    let field = FieldSpec::Rationals;
    let qs: Vec<BigRational> = p.iter().map(Scalar::to_rational).collect();
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut out = Vec::new();
    if ints.first().is_some_and(Zero::is_zero) {
        out.push(field.zero());
        while ints.first().is_some_and(Zero::is_zero) {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        return out;
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let (Some(dn), Some(dd)) = (small_divisors(&a0), small_divisors(&an)) else {
        return out;
    };
    let mut cands: Vec<BigRational> = Vec::new();
    for num in &dn {
        for den in &dd {
            for sign in [1i64, -1] {
                let c = BigRational::new(BigInt::from(*num * sign), BigInt::from(*den));
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
        }
    }
    cands.sort();
    for c in cands {
        let s = FieldSpec::Rationals.from_rational(&c).expect("rational");
        if eval_poly(p, &s).is_zero() {
            out.push(s);
        }
    }
    out
}

fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.to_i64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut d = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            d.push(k);
            if k * k != n {
                d.push(n / k);
            }
        }
        k += 1;
    }
    Some(d)
}

/// Centre `{z : z b = b z for all basis b}`.
pub(crate) fn center(a: &FdAlgebra) -> Subspace {
    let field = a.field();
    let n = a.dim();
    let mut stacked = Mat::zeros(field, 0, n);
    for i in 0..n {
        let b = a.basis_vec(i);
        stacked = stacked.vstack(&a.right_mult(&b).sub(&a.left_mult(&b)));
    }
    stacked.kernel()
}

/// Corner `e A e` as a subspace.
pub(crate) fn corner(a: &FdAlgebra, e: &[Scalar], f: &[Scalar]) -> Subspace {
    let vecs: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|i| a.mul(&a.mul(e, &a.basis_vec(i)), f))
        .collect();
    Subspace::from_vectors(a.field(), a.dim(), &vecs)
}

/// Split `e` into the idempotents `Π_{j≠i} (y - λ_j e)/(λ_i - λ_j)`.
fn lagrange_idempotents(a: &FdAlgebra, y: &[Scalar], e: &[Scalar], lambdas: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for (i, li) in lambdas.iter().enumerate() {
        let mut acc = e.to_vec();
        for (j, lj) in lambdas.iter().enumerate() {
            if i == j {
                continue;
            }
            let shifted: Vec<Scalar> = y.iter().zip(e).map(|(yk, ek)| yk.sub(&lj.mul(ek))).collect();
            let scale = li.sub(lj).inv();
            acc = a.mul(&acc, &shifted).iter().map(|x| x.mul(&scale)).collect();
        }
        out.push(acc);
    }
    out
}

/// Primitive idempotents of the centre of a semisimple algebra.
/// Errors when the centre is not a product of copies of the ground field.
pub fn primitive_central_idempotents(a: &FdAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let z = center(a);
    let mut pending = alloc::vec![a.unit().to_vec()];
    let mut done = Vec::new();
    while let Some(e) = pending.pop() {
        let ez: Vec<Vec<Scalar>> = z.basis().iter().map(|x| a.mul(&e, x)).collect();
        let ez = Subspace::from_vectors(a.field(), a.dim(), &ez);
        if ez.dim() <= 1 {
            done.push(e);
            continue;
        }
        let mut split = false;
        for y in ez.basis() {
            let mp = min_poly(a, y, &e);
            let deg = mp.len() - 1;
            if deg <= 1 {
                continue;
            }
            let rs = roots(a.field(), &mp);
            if rs.len() < deg {
                return Err(Error::Unsupported(format!(
                    "the centre of the semisimple quotient is not split over {} \
                     (a block is a matrix algebra over a proper field extension)",
                    a.field()
                )));
            }
            pending.extend(lagrange_idempotents(a, y, &e, &rs));
            split = true;
            break;
        }
        if !split {
            done.push(e);
        }
    }
    // Stable order: by first nonzero coordinate.
    done.sort_by_key(|e| e.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX));
    Ok(done)
}

fn candidate_elements(field: FieldSpec, basis: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = basis.to_vec();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j {
                continue;
            }
            for c in [1i64, -1, 2] {
                let cs = field.from_i64(c);
                out.push(basis[i].iter().zip(&basis[j]).map(|(x, y)| x.add(&cs.mul(y))).collect());
            }
        }
    }
    out
}

/// A primitive idempotent inside the simple block with central idempotent `c`.
pub(crate) fn primitive_in_block(a: &FdAlgebra, c: &[Scalar]) -> Result<Vec<Scalar>> {
    let field = a.field();
    let mut e = c.to_vec();
    loop {
        let cor = corner(a, &e, &e);
        if cor.dim() == 1 {
            return Ok(e);
        }
        let mut zero_divisor = None;
        for y in candidate_elements(field, cor.basis()) {
            let mp = min_poly(a, &y, &e);
            if mp.len() <= 2 {
                continue;
            }
            if let Some(l) = roots(field, &mp).into_iter().next() {
                let z: Vec<Scalar> = y.iter().zip(&e).map(|(yk, ek)| yk.sub(&l.mul(ek))).collect();
                zero_divisor = Some(z);
                break;
            }
        }
        let Some(z) = zero_divisor else {
            return Err(Error::Unsupported(format!(
                "no zero divisor found in a simple block of dimension {}; \
                 the block may be a division algebra over {}",
                cor.dim(),
                field
            )));
        };
        let ideal: Vec<Vec<Scalar>> = cor.basis().iter().map(|x| a.mul(x, &z)).collect();
        let ideal = Subspace::from_vectors(field, a.dim(), &ideal);
        // f = Σ c_k l_k with l_j f = l_j for every basis element l_j
        let ls = ideal.basis();
        let mut rows = Mat::zeros(field, 0, ls.len());
        let mut rhs = Vec::new();
        for lj in ls {
            let prods: Vec<Vec<Scalar>> = ls.iter().map(|lk| a.mul(lj, lk)).collect();
            rows = rows.vstack(&Mat::from_cols(field, a.dim(), &prods));
            rhs.extend(lj.iter().cloned());
        }
        let coeffs = rows
            .solve(&rhs)
            .ok_or_else(|| Error::Inconsistent("left ideal has no generating idempotent".into()))?;
        let f = ideal.combine(&coeffs);
        if is_zero_vec(&vec_sub(&a.mul(&f, &f), &f)) && !is_zero_vec(&f) && f != e {
            e = f;
        } else {
            return Err(Error::Inconsistent("idempotent refinement failed".into()));
        }
    }
}

/// Decompose a split semisimple algebra into matrix blocks.
pub(crate) fn split_semisimple(a: &FdAlgebra) -> Result<Vec<SplitBlock>> {
    let mut out = Vec::new();
    for c in primitive_central_idempotents(a)? {
        let block_dim = corner(a, &c, &c).dim();
        let n = (1..=block_dim).find(|k| k * k >= block_dim).unwrap_or(1);
        if n * n != block_dim {
            return Err(Error::Unsupported(format!(
                "a simple block of dimension {block_dim} is not a full matrix algebra"
            )));
        }
        let primitive = if n == 1 { c.clone() } else { primitive_in_block(a, &c)? };
        out.push(SplitBlock {
            central: c,
            primitive,
            n,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_product_of_fields() {
        let q = FieldSpec::Rationals;
        // k[x]/(x^2 - x)
        let a = FdAlgebra::truncated_polynomial(q, &[0, -1]);
        let ids = primitive_central_idempotents(&a).unwrap();
        assert_eq!(ids.len(), 2);
        for e in &ids {
            assert_eq!(&a.mul(e, e), e);
        }
    }

    #[test]
    fn matrix_block_has_primitive_idempotent() {
        let q = FieldSpec::Rationals;
        let m = FdAlgebra::matrix_algebra(q, 3);
        let blocks = split_semisimple(&m).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].n, 3);
        let e = &blocks[0].primitive;
        assert_eq!(&m.mul(e, e), e);
        assert_eq!(corner(&m, e, e).dim(), 1);
    }

    #[test]
    fn nonsplit_centre_is_rejected() {
        // Q[x]/(x^2 + 1) is the field Q(i)
        let a = FdAlgebra::truncated_polynomial(FieldSpec::Rationals, &[1, 0]);
        assert!(matches!(primitive_central_idempotents(&a), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rational_roots_found() {
        let q = FieldSpec::Rationals;
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let p = [q.from_i64(-3), q.from_i64(5), q.from_i64(2)];
        let rs = rational_roots(&p);
        assert_eq!(rs.len(), 2);
        assert!(rs.contains(&q.from_i64(-3)));
    }
}
