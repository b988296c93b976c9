use parcomod::linalg::{rref_sparse, Echelon};
use parcomod::{FieldElem, Matrix, Rational, Subspace};
use proptest::prelude::*;

const N: u16 = 24;

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q))
}

fn elem() -> impl Strategy<Value = FieldElem> {
    proptest::collection::vec(rat(), 8).prop_map(|c| FieldElem::from_coeffs(N, c))
}

/// Mostly small integers and zeros so that ranks vary.
fn entry() -> impl Strategy<Value = FieldElem> {
    prop_oneof![
        4 => Just(FieldElem::zero()),
        4 => (-3i64..=3).prop_map(FieldElem::from_int),
        1 => Just(FieldElem::zeta(N)),
        1 => Just(FieldElem::frac(1, 2)),
    ]
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(entry(), r * c).prop_map(move |d| Matrix::from_flat(r, c, d))
    })
}

fn vectors(ambient: usize) -> impl Strategy<Value = Vec<Vec<FieldElem>>> {
    proptest::collection::vec(proptest::collection::vec(entry(), ambient), 0..=ambient + 1)
}

proptest! {
    #[test]
    fn field_ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, FieldElem::zero());
        prop_assert_eq!(&a * &FieldElem::one(), a.clone());
    }

    #[test]
    fn field_inverse(a in elem()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv()).is_one());
        prop_assert_eq!(&a / &a, FieldElem::one());
    }

    #[test]
    fn field_text_round_trip(a in elem()) {
        let s = a.to_string();
        prop_assert_eq!(FieldElem::parse(&s, N).unwrap(), a);
    }

    #[test]
    fn galois_is_ring_map(a in elem(), b in elem(), j in prop::sample::select(vec![1i64, 5, 7, 11, 13, 17, 19, 23])) {
        prop_assert_eq!((&a * &b).galois(j), &a.galois(j) * &b.galois(j));
        prop_assert_eq!((&a + &b).galois(j), &a.galois(j) + &b.galois(j));
    }

    #[test]
    fn rref_idempotent(m in matrix(6, 7)) {
        let r = m.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.rank, r.rank);
        prop_assert_eq!(r.rank, m.transpose().rank());
    }

    #[test]
    fn dense_and_sparse_rref_agree(m in matrix(7, 7)) {
        prop_assert_eq!(rref_sparse(&m), m.rref());
    }

    #[test]
    fn echelon_matches_dense_rank(m in matrix(7, 6)) {
        let mut e = Echelon::new(m.cols());
        for v in m.row_vecs() {
            e.insert(&v);
        }
        prop_assert_eq!(e.rank(), m.rank());
        for v in m.row_vecs() {
            prop_assert!(e.contains(&v));
        }
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(5, 7)) {
        let k = m.kernel();
        prop_assert_eq!(k.len() + m.rank(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_when_full_rank(m in (1usize..=5).prop_flat_map(|n| proptest::collection::vec(entry(), n * n).prop_map(move |d| Matrix::from_flat(n, n, d)))) {
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows()));
                prop_assert!(!m.det().is_zero());
            }
            None => prop_assert!(m.det().is_zero()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn subspace_dimension_formula((n, u, v) in (1usize..=7).prop_flat_map(|n| (Just(n), vectors(n), vectors(n)))) {
        let a = Subspace::span(n, &u);
        let b = Subspace::span(n, &v);
        let sum = a.sum(&b).unwrap();
        let cap = a.intersection(&b).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), a.dim() + b.dim());
        prop_assert!(cap.is_subspace_of(&a) && cap.is_subspace_of(&b));
        prop_assert!(a.is_subspace_of(&sum) && b.is_subspace_of(&sum));
    }
}
