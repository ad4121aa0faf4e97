use idemsys::census::{d1_member, kron_corpus};
use idemsys::character::build_psi_p;
use idemsys::field::{FieldSpec, Scalar};
use idemsys::idempotent::{antiautomorphism, IdempotentSystem};
use idemsys::matrix::Matrix;
use idemsys::poly::charpoly;
use idemsys::solid::{
    check_ao, diagonal_equivalence, is_ao, is_normalized, is_solid, kron, normalize,
    DiagonalWitness,
};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rational()),
        Just(FieldSpec::prime(5).unwrap()),
        Just(FieldSpec::prime(7).unwrap()),
    ]
}

fn matrix_in(field: FieldSpec, n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
        Matrix::new(field, n, v.into_iter().map(|x| field.from_i64(x)).collect()).unwrap()
    })
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (field_strategy(), 1usize..=4).prop_flat_map(|(f, n)| matrix_in(f, n))
}

fn invertible() -> impl Strategy<Value = Matrix> {
    any_matrix().prop_filter("invertible", |m| m.inverse().is_ok())
}

fn solid() -> impl Strategy<Value = Matrix> {
    any_matrix().prop_filter("solid", is_solid)
}

fn nonzero_diagonal(field: FieldSpec, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((1i64..=6, prop::bool::ANY), n).prop_map(move |v| {
        v.into_iter()
            .map(|(x, neg)| field.from_i64(if neg { -x } else { x }))
            .map(|x| if x.is_zero() { field.one() } else { x })
            .collect()
    })
}

fn solid_with_scaling() -> impl Strategy<Value = (Matrix, DiagonalWitness)> {
    solid().prop_flat_map(|r| {
        let (f, n) = (r.field(), r.size());
        (Just(r), nonzero_diagonal(f, n), nonzero_diagonal(f, n))
            .prop_map(|(r, h, k)| (r, DiagonalWitness::new(h, k).unwrap()))
    })
}

fn aon_corpus() -> Vec<Matrix> {
    let q = FieldSpec::rational();
    let mut out: Vec<Matrix> = ["1", "2", "-1/2", "3"]
        .iter()
        .map(|k| d1_member(&q.parse(k).unwrap()))
        .collect();
    out.extend(kron_corpus(q).into_iter().filter(|m| m.size() == 4));
    out.extend(
        kron_corpus(FieldSpec::prime(7).unwrap())
            .into_iter()
            .filter(|m| m.size() == 4),
    );
    out
}

fn aon_with_scaling() -> impl Strategy<Value = (Matrix, DiagonalWitness)> {
    prop::sample::select(aon_corpus()).prop_flat_map(|p| {
        let (f, n) = (p.field(), p.size());
        (Just(p), nonzero_diagonal(f, n), nonzero_diagonal(f, n))
            .prop_map(|(p, h, k)| (p, DiagonalWitness::new(h, k).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inverse_is_two_sided(a in invertible()) {
        let inv = a.inverse().unwrap();
        prop_assert!(a.matmul(&inv).unwrap().is_identity());
        prop_assert!(inv.matmul(&a).unwrap().is_identity());
    }

    #[test]
    fn transpose_commutes_with_inverse(a in invertible()) {
        prop_assert_eq!(a.transpose().inverse().unwrap(), a.inverse().unwrap().transpose());
    }

    #[test]
    fn singular_iff_zero_determinant(a in any_matrix()) {
        prop_assert_eq!(a.inverse().is_err(), a.determinant().is_zero());
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (field_strategy(), 1usize..=4)
        .prop_flat_map(|(f, n)| (matrix_in(f, n), matrix_in(f, n)))) {
        prop_assert_eq!(a.matmul(&b).unwrap().determinant(), a.determinant() * b.determinant());
    }

    #[test]
    fn diagonal_iff_commutes_with_units(a in any_matrix()) {
        let (f, n) = (a.field(), a.size());
        let commutes = (0..n).all(|i| a.commutes_with(&Matrix::unit(f, n, i, i)).unwrap());
        prop_assert_eq!(a.is_diagonal(), commutes);
    }

    #[test]
    fn charpoly_matches_determinant(a in any_matrix(), t in -3i64..=3) {
        let (f, n) = (a.field(), a.size());
        let x = f.from_i64(t);
        let shifted = Matrix::identity(f, n).scale(&x).sub(&a).unwrap();
        prop_assert_eq!(charpoly(&a).eval(&x), shifted.determinant());
    }

    #[test]
    fn solid_closed_under_inverse_and_transpose(r in solid()) {
        prop_assert!(is_solid(&r.inverse().unwrap()));
        prop_assert!(is_solid(&r.transpose()));
    }

    #[test]
    fn diagonal_scaling_preserves_solidity((r, w) in solid_with_scaling()) {
        prop_assert!(is_solid(&w.apply(&r).unwrap()));
    }

    #[test]
    fn normalization_is_a_class_invariant((r, w) in solid_with_scaling()) {
        let p = normalize(&r).unwrap();
        prop_assert!(is_normalized(&p));
        prop_assert_eq!(normalize(&w.apply(&r).unwrap()).unwrap(), p.clone());
        prop_assert_eq!(normalize(&p).unwrap(), p);
    }

    #[test]
    fn equivalence_witnesses_compose((r, w) in solid_with_scaling()) {
        let s = w.apply(&r).unwrap();
        let found = diagonal_equivalence(&r, &s).unwrap().unwrap();
        prop_assert_eq!(found.apply(&r).unwrap(), s.clone());
        let back = diagonal_equivalence(&s, &r).unwrap().unwrap();
        prop_assert_eq!(back.apply(&s).unwrap(), r.clone());
        prop_assert_eq!(found.then(&back).apply(&r).unwrap(), r.clone());
        prop_assert_eq!(found.inverse().apply(&s).unwrap(), r.clone());
        let p = normalize(&r).unwrap();
        let to_p = diagonal_equivalence(&s, &p).unwrap().unwrap();
        prop_assert_eq!(found.then(&to_p).apply(&r).unwrap(), p);
    }

    #[test]
    fn ao_preserved_by_diagonal_scaling((p, w) in aon_with_scaling()) {
        let s = w.apply(&p).unwrap();
        prop_assert!(is_ao(&s));
        prop_assert_eq!(normalize(&s).unwrap(), p);
    }

    #[test]
    fn ao_witness_is_valid(r in solid()) {
        if let Some(w) = check_ao(&r).unwrap() {
            prop_assert_eq!(w.apply(&r.inverse().unwrap()).unwrap(), r.transpose());
        }
    }

    #[test]
    fn phi_r_satisfies_axioms(r in solid()) {
        let phi = IdempotentSystem::build_phi_r(&r).unwrap();
        prop_assert!(phi.verify_axioms());
        prop_assert!(phi.dual().verify_axioms());
        prop_assert_eq!(phi.is_symmetric().unwrap(), is_ao(&r));
    }

    #[test]
    fn eigenmatrix_survives_conjugation(((p, w), t) in aon_with_scaling().prop_flat_map(|(p, w)| {
        let t = matrix_in(p.field(), p.size()).prop_filter("invertible", |t| t.inverse().is_ok());
        (Just((p, w)), t)
    })) {
        let phi = IdempotentSystem::build_phi_r(&w.apply(&p).unwrap()).unwrap();
        let moved = phi.conjugate(&t, &t.inverse().unwrap()).unwrap();
        prop_assert!(moved.verify_axioms());
        prop_assert_eq!(moved.first_eigenmatrix().unwrap(), p);
        let m = moved.symmetry_witness().unwrap().unwrap();
        for a in moved.e().iter().chain(moved.estar()) {
            prop_assert_eq!(&antiautomorphism(&m, a).unwrap(), a);
        }
    }

    #[test]
    fn decomposition_recovers_eigenmatrix_rows(p in prop::sample::select(aon_corpus())) {
        let cs = build_psi_p(&p).unwrap();
        let again = cs.algebra().semisimple_decompose().unwrap();
        let key = |m: &Matrix| {
            let mut rows: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            rows[1..].sort();
            rows
        };
        prop_assert_eq!(key(again.eigenmatrix()), key(&p));
    }

    #[test]
    fn kron_of_aon_is_aon(a in prop::sample::select(aon_corpus()), b in prop::sample::select(aon_corpus())) {
        prop_assume!(a.field() == b.field() && a.size() * b.size() <= 8);
        let ab = kron(&a, &b).unwrap();
        prop_assert!(is_normalized(&ab) && is_ao(&ab));
    }
}
