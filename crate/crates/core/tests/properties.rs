use fqhg::algebra::{apply, faithful_functionals, modular_automorphism, validate_algebra};
use fqhg::constructions::{group_algebra, hecke_pair, m2};
use fqhg::exactnum::vector;
use fqhg::{Algebra, FiniteGroup, Matrix, Scalar, SolutionSet};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(n, d, im)| &Scalar::ratio(n, d) + &Scalar::gaussian(0, im))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-2i64..=2, r * c)
            .prop_map(move |v| Matrix::from_entries(r, c, v.into_iter().map(Scalar::from_int).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kron_rank_is_multiplicative(a in matrix(3), b in matrix(3)) {
        prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn solve_describes_the_solution_set(m in matrix(4), x in proptest::collection::vec(-2i64..=2, 4), consistent in any::<bool>()) {
        let x = Matrix::column_vector(&x[..m.cols()].iter().map(|&v| Scalar::from_int(v)).collect::<Vec<_>>());
        let mut y = m.mul(&x);
        if !consistent {
            y.add_at(0, 0, &Scalar::ratio(1, 7));
        }
        let augmented_rank = m.hstack(&y).unwrap().rank();
        match m.solve(&y).unwrap() {
            SolutionSet::None => prop_assert!(augmented_rank > m.rank()),
            SolutionSet::Unique(s) => {
                prop_assert_eq!(m.mul(&s), y);
                prop_assert_eq!(m.rank(), m.cols());
            }
            SolutionSet::Affine { particular, null_basis } => {
                prop_assert_eq!(m.mul(&particular), y);
                prop_assert_eq!(null_basis.len(), m.cols() - m.rank());
                for v in null_basis {
                    prop_assert!(vector::is_zero(&m.mul_vec(&v)));
                }
            }
        }
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(4)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows()));
            prop_assert_eq!(inv.mul(&m), Matrix::identity(m.rows()));
        } else {
            prop_assert!(!m.is_square() || m.rank() < m.rows());
        }
    }

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if let Some(inv) = a.inv() {
            prop_assert_eq!(&a * &inv, Scalar::from_int(1));
        }
    }

    #[test]
    fn scalar_text_and_json_roundtrip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), a);
    }

    #[test]
    fn matrix_json_roundtrip(m in matrix(4)) {
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matrix>(&json).unwrap(), m);
    }

    #[test]
    fn modular_automorphism_property(seed in 0u64..1000, which in 0usize..3) {
        let a = algebras().swap_remove(which);
        for w in faithful_functionals(&a, 2, 50, seed) {
            let sigma = modular_automorphism(&a, &w).unwrap();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let lhs = apply(&w, a.basis_product(i, j));
                    let rhs = apply(&w, &a.multiply(&a.basis_vector(j), &sigma.column(i)));
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

fn algebras() -> Vec<Algebra> {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let hp = hecke_pair(&s3, &s3.subgroup_from_labels(&["(1 2)".into()]).unwrap()).unwrap();
    vec![
        group_algebra(&s3).0,
        hp.example.algebra(fqhg::Side::B).clone(),
        m2(&Scalar::from_int(1), &Scalar::from_int(2)).unwrap().algebra(fqhg::Side::A).clone(),
    ]
}

#[test]
fn algebra_json_roundtrip() {
    for a in algebras() {
        assert!(validate_algebra(&a).ok());
        let json = serde_json::to_string(&a).unwrap();
        let back: Algebra = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
