use proptest::prelude::*;
use repcoalg_core::coalg::{
    coradical, dagger, double_dual_check, dual_algebra, dual_coalgebra_fd, filtration_dims, loewy_length,
    path_coalgebra,
};
use repcoalg_core::fdalg::FdAlgebra;
use repcoalg_core::quivalg::{build_algebra, Quiver, QuiverPresentation};
use repcoalg_core::transfer::{build_contraction, stasheff_check, transfer_m, DgAlgebra, DG_CUTOFF};
use repcoalg_core::modres::ext_dims;
use repcoalg_core::FieldSpec;

const Q: FieldSpec = FieldSpec::Rationals;

fn quiver(verts: usize, arrows: &[(usize, usize)]) -> Quiver {
    let mut q = Quiver::new((1..=verts).map(|v| v.to_string()).collect()).unwrap();
    for (k, &(s, t)) in arrows.iter().enumerate() {
        q.add_arrow(&format!("a{k}"), s % verts, t % verts).unwrap();
    }
    q
}

fn truncated(verts: usize, arrows: &[(usize, usize)], truncation: usize) -> FdAlgebra {
    let p = QuiverPresentation { quiver: quiver(verts, arrows), relations: Vec::new(), truncation, field: Q };
    build_algebra(&p).unwrap()
}

fn small_quiver() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=2usize, prop::collection::vec((0..2usize, 0..2usize), 1..=3))
}

fn tiny_quiver() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=2usize, prop::collection::vec((0..2usize, 0..2usize), 1..=2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn path_coalgebra_is_a_coalgebra(((verts, arrows), max_len) in (small_quiver(), 0..=3usize)) {
        let (c, paths) = path_coalgebra(Q, &quiver(verts, &arrows), max_len);
        prop_assert!(c.check_axioms().is_ok());
        prop_assert_eq!(c.dim(), paths.len());
        prop_assert_eq!(coradical(&c).unwrap().dim(), verts);
        prop_assert_eq!(*filtration_dims(&c).unwrap().last().unwrap(), c.dim());
    }

    #[test]
    fn dual_round_trips((verts, arrows) in small_quiver(), truncation in 2..=3usize) {
        let a = truncated(verts, &arrows, truncation);
        let c = dual_coalgebra_fd(&a);
        prop_assert!(c.check_axioms().is_ok());
        prop_assert!(double_dual_check(&a));
        prop_assert_eq!(dual_algebra(&c).dim(), a.dim());
    }

    #[test]
    fn filtration_length_is_loewy_length((verts, arrows) in small_quiver(), truncation in 2..=3usize) {
        let a = truncated(verts, &arrows, truncation);
        let f = filtration_dims(&dual_coalgebra_fd(&a)).unwrap();
        prop_assert_eq!(f.len(), loewy_length(&a).unwrap());
        prop_assert!(f.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dagger_recovers_the_dual(
        (verts, arrows) in tiny_quiver(),
        truncation in 2..=3usize,
        seed in 0..4u64,
    ) {
        let a = truncated(verts, &arrows, truncation);
        prop_assume!(a.dim() <= 6);
        let max_len = loewy_length(&a).unwrap();
        let d = dagger(&a, max_len, seed).unwrap();
        prop_assert!(d.coalgebra.check_axioms().is_ok());
        prop_assert_eq!(d.coalgebra.dim(), a.dim());
        prop_assert_eq!(filtration_dims(&d.coalgebra).unwrap(), filtration_dims(&dual_coalgebra_fd(&a)).unwrap());
        prop_assert_eq!(&d.graded_dims, &dagger(&a, max_len, seed + 1).unwrap().graded_dims);
    }

    #[test]
    fn stasheff_to_arity_four((verts, arrows) in tiny_quiver(), truncation in 2..=3usize, seed in 0..4u64) {
        let a = truncated(verts, &arrows, truncation);
        prop_assume!(a.dim() <= 6);
        let ext = ext_dims(&a, DG_CUTOFF).unwrap();
        let ai = transfer_m(build_contraction(DgAlgebra::new(ext), seed).unwrap(), 4).unwrap();
        prop_assert!(stasheff_check(&ai, 4).passed());
    }
}
