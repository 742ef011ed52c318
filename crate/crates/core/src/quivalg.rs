//! Quivers, paths and the algebras `kQ/I` of admissible presentations.
//!
//! Convention: a path `a1 a2 .. an` is traversed from `a1` to `an`, so its
//! source is the source of `a1`. Multiplication in the path algebra is written
//! like composition of maps: for paths `p` and `q`, `p · q` is the path that
//! first traverses `q` and then `p` (zero unless `target(q) = source(p)`).
//! With this product the left projective `A e_v` is spanned by the paths
//! starting at `v`, and an arrow `v -> w` contributes to `Ext^1(S_v, S_w)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactlin::{unit, Subspace};
use crate::fdalg::{to_sparse, FdAlgebra, PeirceData};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>) -> Result<Quiver> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidStructure(format!("duplicate vertex label {v}")));
            }
        }
        Ok(Quiver {
            vertices,
            arrows: Vec::new(),
        })
    }

    pub fn add_arrow(&mut self, label: &str, source: usize, target: usize) -> Result<usize> {
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::InvalidStructure(format!("arrow {label} has an unknown endpoint")));
        }
        if self.arrows.iter().any(|a| a.label == label) || self.vertices.iter().any(|v| v == label) {
            return Err(Error::InvalidStructure(format!("duplicate label {label}")));
        }
        self.arrows.push(Arrow {
            label: label.into(),
            source,
            target,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }
    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// The path spelled by arrow labels in traversal order, if composable.
    pub fn path_from_labels(&self, labels: &[&str]) -> Result<Path> {
        let mut arrows = Vec::new();
        for l in labels {
            arrows.push(
                self.arrow_index(l)
                    .ok_or_else(|| Error::InvalidStructure(format!("unknown arrow {l}")))?,
            );
        }
        Path::new(self, arrows)
    }

    pub fn compare_paths(&self, p: &Path, q: &Path) -> Ordering {
        p.len().cmp(&q.len()).then_with(|| {
            if p.is_empty() {
                p.source().cmp(&q.source())
            } else {
                let pl = p.arrows.iter().map(|&a| &self.arrows[a].label);
                let ql = q.arrows.iter().map(|&a| &self.arrows[a].label);
                pl.cmp(ql)
            }
        })
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.is_empty() {
            format!("e_{}", self.vertices[p.source()])
        } else {
            let parts: Vec<&str> = p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect();
            parts.join("*")
        }
    }
}

/// A path: a composable arrow sequence, or a trivial path at a vertex.
/// Stores the visited vertices (`len + 1` of them) alongside the arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    verts: Vec<usize>,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            verts: vec![v],
            arrows: Vec::new(),
        }
    }

    pub fn new(q: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidStructure("empty arrow sequence".into()));
        };
        let mut verts = vec![q.arrows[first].source];
        for &a in &arrows {
            let arrow = &q.arrows[a];
            if arrow.source != *verts.last().unwrap() {
                return Err(Error::InvalidStructure(format!(
                    "arrow {} does not continue the path",
                    arrow.label
                )));
            }
            verts.push(arrow.target);
        }
        Ok(Path { verts, arrows })
    }

    pub fn source(&self) -> usize {
        self.verts[0]
    }
    pub fn target(&self) -> usize {
        *self.verts.last().unwrap()
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// Traverse `self`, then `next`.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target() != next.source() {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        let mut verts = self.verts.clone();
        verts.extend_from_slice(&next.verts[1..]);
        Some(Path { verts, arrows })
    }

    /// Sub-path of arrows `lo..hi`.
    pub fn slice(&self, lo: usize, hi: usize) -> Path {
        Path {
            verts: self.verts[lo..=hi].to_vec(),
            arrows: self.arrows[lo..hi].to_vec(),
        }
    }

    /// All splittings `self = p' p''` in traversal order, shortest `p'` first.
    pub fn splittings(&self) -> Vec<(Path, Path)> {
        (0..=self.len())
            .map(|k| (self.slice(0, k), self.slice(k, self.len())))
            .collect()
    }
}

/// All paths of length at most `max_len`, ordered by length, then by arrow labels
/// (trivial paths by vertex order).
pub fn enumerate_paths(q: &Quiver, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..q.vertices.len()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == p.target() {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    let mut verts = p.verts.clone();
                    verts.push(a.target);
                    next.push(Path { verts, arrows });
                }
            }
        }
        next.sort_by(|x, y| q.compare_paths(x, y));
        out.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    out
}

/// A linear combination of parallel paths.
pub type Relation = Vec<(Scalar, Path)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Every path of length at least `truncation` is set to zero.
    pub truncation: usize,
    pub field: FieldSpec,
}

impl QuiverPresentation {
    /// Check admissibility of every relation; the error names the offending relation.
    pub fn validate(&self) -> Result<()> {
        if self.truncation == 0 {
            return Err(Error::NotAdmissible("truncation degree must be at least 1".into()));
        }
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut ends = None;
            for (c, p) in rel {
                if c.field() != self.field {
                    return Err(Error::DimensionMismatch(format!("relation {ri}: coefficient field")));
                }
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} contains the path {} of length {} < 2",
                        ri + 1,
                        self.quiver.path_label(p),
                        p.len()
                    )));
                }
                match ends {
                    None => ends = Some((p.source(), p.target())),
                    Some(e) if e != (p.source(), p.target()) => {
                        return Err(Error::NotAdmissible(format!(
                            "relation {} combines non-parallel paths",
                            ri + 1
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

/// The algebra `kQ / (relations + paths of length >= N)` on a basis of surviving path classes.
pub fn build_algebra(p: &QuiverPresentation) -> Result<FdAlgebra> {
    p.validate()?;
    let q = &p.quiver;
    let field = p.field;
    let n = p.truncation;
    let paths = enumerate_paths(q, n - 1);
    // Columns ordered longest first so that echelon pivots land on long paths
    // and the surviving residue basis consists of the shortest representatives.
    let mut order: Vec<usize> = (0..paths.len()).collect();
    order.sort_by(|&a, &b| paths[b].len().cmp(&paths[a].len()).then(a.cmp(&b)));
    let mut col_of = BTreeMap::new();
    for (c, &pi) in order.iter().enumerate() {
        col_of.insert(paths[pi].clone(), c);
    }
    let width = paths.len();

    let mut gens = Vec::new();
    for rel in &p.relations {
        let Some((_, first)) = rel.first() else { continue };
        let (s, t) = (first.source(), first.target());
        for u in paths.iter().filter(|u| u.target() == s) {
            for w in paths.iter().filter(|w| w.source() == t) {
                if u.len() + 2 + w.len() >= n {
                    continue;
                }
                let mut v = crate::exactlin::zero_vec(field, width);
                for (c, path) in rel {
                    let full = u.then(path).and_then(|x| x.then(w)).expect("composable by construction");
                    if let Some(&col) = col_of.get(&full) {
                        v[col] = v[col].add(c);
                    }
                }
                gens.push(v);
            }
        }
    }
    let ideal = Subspace::from_vectors(field, width, &gens);
    let free_cols = ideal.complement_indices();
    let mut survivors: Vec<usize> = free_cols.iter().map(|&c| order[c]).collect();
    survivors.sort();
    let basis_paths: Vec<Path> = survivors.iter().map(|&i| paths[i].clone()).collect();
    let mut index_of_col = BTreeMap::new();
    for (bi, &pi) in survivors.iter().enumerate() {
        index_of_col.insert(col_of[&paths[pi]], bi);
    }
    let dim = basis_paths.len();

    let reduce_path = |path: &Path| -> Vec<Scalar> {
        let mut out = crate::exactlin::zero_vec(field, dim);
        if let Some(&col) = col_of.get(path) {
            let r = ideal.reduce(&unit(field, width, col));
            for (c, x) in r.iter().enumerate() {
                if !x.is_zero() {
                    out[index_of_col[&c]] = x.clone();
                }
            }
        }
        out
    };

    let mut table = vec![vec![Vec::new(); dim]; dim];
    for (i, pi) in basis_paths.iter().enumerate() {
        for (j, pj) in basis_paths.iter().enumerate() {
            // b_i · b_j traverses b_j first
            if let Some(prod) = pj.then(pi) {
                table[i][j] = to_sparse(&reduce_path(&prod));
            }
        }
    }
    let nv = q.vertices.len();
    let mut unit_elem = crate::exactlin::zero_vec(field, dim);
    for u in unit_elem.iter_mut().take(nv) {
        *u = field.one();
    }
    let labels = basis_paths.iter().map(|bp| q.path_label(bp)).collect();
    let peirce = PeirceData {
        vertex_labels: q.vertices.clone(),
        idempotents: (0..nv).collect(),
        slot: basis_paths.iter().map(|bp| (bp.target(), bp.source())).collect(),
    };
    Ok(FdAlgebra::from_sparse_unchecked(field, labels, table, unit_elem)
        .with_peirce(peirce)
        .with_provenance(p.clone()))
}

/// Basis paths of an algebra built by [`build_algebra`], in basis order.
pub fn basis_paths(p: &QuiverPresentation, a: &FdAlgebra) -> Vec<Path> {
    let all = enumerate_paths(&p.quiver, p.truncation.saturating_sub(1));
    a.labels()
        .iter()
        .map(|l| {
            all.iter()
                .find(|x| &p.quiver.path_label(x) == l)
                .cloned()
                .expect("basis label names a path")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdalg::radical;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn loop_quiver() -> Quiver {
        let mut q = Quiver::new(vec!["v".into()]).unwrap();
        q.add_arrow("a", 0, 0).unwrap();
        q
    }

    fn a2() -> Quiver {
        let mut q = Quiver::new(vec!["1".into(), "2".into()]).unwrap();
        q.add_arrow("a", 0, 1).unwrap();
        q
    }

    #[test]
    fn enumerate_examples() {
        let q = Quiver::new(vec!["v".into()]).unwrap();
        assert_eq!(enumerate_paths(&q, 3), vec![Path::trivial(0)]);
        let l = loop_quiver();
        let ps: Vec<String> = enumerate_paths(&l, 2).iter().map(|p| l.path_label(p)).collect();
        assert_eq!(ps, ["e_v", "a", "a*a"]);
        let q = a2();
        let ps: Vec<String> = enumerate_paths(&q, 5).iter().map(|p| q.path_label(p)).collect();
        assert_eq!(ps, ["e_1", "e_2", "a"]);
    }

    fn pres(q: Quiver, rels: Vec<Relation>, n: usize) -> QuiverPresentation {
        QuiverPresentation {
            quiver: q,
            relations: rels,
            truncation: n,
            field: Q,
        }
    }

    #[test]
    fn build_examples() {
        let l = loop_quiver();
        let aa = l.path_from_labels(&["a", "a"]).unwrap();
        let a = build_algebra(&pres(l.clone(), vec![vec![(Q.one(), aa)]], 3)).unwrap();
        assert_eq!(a.dim(), 2);
        a.check_axioms().unwrap();
        let a = build_algebra(&pres(l, vec![], 3)).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), ["e_v", "a", "a*a"]);
        let a = build_algebra(&pres(a2(), vec![], 4)).unwrap();
        assert_eq!(a.labels(), ["e_1", "e_2", "a"]);
        a.check_axioms().unwrap();
    }

    #[test]
    fn rejects_short_and_nonparallel_relations() {
        let q = a2();
        let a = q.path_from_labels(&["a"]).unwrap();
        let r = build_algebra(&pres(q, vec![vec![(Q.one(), a)]], 3));
        assert!(matches!(r, Err(Error::NotAdmissible(_))));

        let mut q = Quiver::new(vec!["1".into(), "2".into()]).unwrap();
        q.add_arrow("a", 0, 0).unwrap();
        q.add_arrow("b", 0, 1).unwrap();
        q.add_arrow("c", 1, 1).unwrap();
        let aa = q.path_from_labels(&["a", "a"]).unwrap();
        let bc = q.path_from_labels(&["b", "c"]).unwrap();
        let r = build_algebra(&pres(q, vec![vec![(Q.one(), aa), (Q.one(), bc)]], 4));
        assert!(matches!(r, Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn commutativity_relation_quotient() {
        // two loops x, y with xy - yx, x^2, y^2: k[x,y]/(x^2, y^2), dim 4
        let mut q = Quiver::new(vec!["v".into()]).unwrap();
        q.add_arrow("x", 0, 0).unwrap();
        q.add_arrow("y", 0, 0).unwrap();
        let p = |w: &[&str]| q.path_from_labels(w).unwrap();
        let rels = vec![
            vec![(Q.one(), p(&["x", "y"])), (Q.from_i64(-1), p(&["y", "x"]))],
            vec![(Q.one(), p(&["x", "x"]))],
            vec![(Q.one(), p(&["y", "y"]))],
        ];
        let a = build_algebra(&pres(q.clone(), rels, 4)).unwrap();
        assert_eq!(a.dim(), 4);
        a.check_axioms().unwrap();
    }

    #[test]
    fn path_ideal_is_nilpotent() {
        let mut q = Quiver::new(vec!["1".into(), "2".into()]).unwrap();
        q.add_arrow("a", 0, 1).unwrap();
        q.add_arrow("b", 1, 0).unwrap();
        let n = 4;
        let a = build_algebra(&pres(q, vec![], n)).unwrap();
        a.check_axioms().unwrap();
        let j = radical(&a).unwrap();
        let mut power = j.clone();
        for _ in 1..n {
            power = a.product_space(&power, &j);
        }
        assert!(power.is_zero());
        // relation-free: dimension equals the number of paths of length < N
        assert_eq!(a.dim(), enumerate_paths(&a.provenance().unwrap().quiver, n - 1).len());
    }
}
