//! Property tests for the quantum torus: associativity, exchange relations,
//! Jacobi, the adjoint involution, and print/parse round trips.

use std::sync::Arc;

use proptest::prelude::*;
use shearq::basis::{GeneratorBasis, GeneratorId, GeneratorKind, OmegaId, OmegaKind, OmegaSymbol};
use shearq::qtorus::{Coefficient, ExponentVector, OmegaMono, QLaurent, Scalar};
use shearq::text::{parse_qlaurent, render};

fn test_basis(eps01: i64, eps02: i64, eps12: i64) -> Arc<GeneratorBasis> {
    GeneratorBasis::new(
        vec!["A".into(), "B".into(), "C".into()],
        vec![GeneratorKind::InnerShear; 3],
        vec![OmegaSymbol {
            name: "w".into(),
            kind: OmegaKind::HolePerimeter,
        }],
        vec![
            vec![0, eps01, eps02],
            vec![-eps01, 0, eps12],
            vec![-eps02, -eps12, 0],
        ],
    )
}

prop_compose! {
    fn arb_term()(e0 in -3i32..=3, e1 in -3i32..=3, e2 in -3i32..=3,
                  q in -2i32..=2, w in 0u32..=2, c in -4i64..=4) -> (ExponentVector, i32, u32, i64) {
        (ExponentVector::from_entries(vec![
            (GeneratorId(0), e0), (GeneratorId(1), e1), (GeneratorId(2), e2)]), q, w, c)
    }
}

fn element(basis: &Arc<GeneratorBasis>, terms: &[(ExponentVector, i32, u32, i64)]) -> QLaurent {
    let mut out = QLaurent::zero(basis.clone());
    for (e, q, w, c) in terms {
        if *c == 0 {
            continue;
        }
        let add = QLaurent::monomial(
            basis.clone(),
            e.clone(),
            Coefficient::term(*q, OmegaMono::single(OmegaId(0), *w), Scalar::from_integer(*c)),
        );
        out = out.add(&add).unwrap();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qmul_is_associative(
        eps in (-2i64..=2, -2i64..=2, -2i64..=2),
        ta in proptest::collection::vec(arb_term(), 1..4),
        tb in proptest::collection::vec(arb_term(), 1..4),
        tc in proptest::collection::vec(arb_term(), 1..4),
    ) {
        let basis = test_basis(eps.0, eps.1, eps.2);
        let a = element(&basis, &ta);
        let b = element(&basis, &tb);
        let c = element(&basis, &tc);
        let lhs = a.qmul(&b).unwrap().qmul(&c).unwrap();
        let rhs = a.qmul(&b.qmul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomials_exchange_with_twice_the_pairing(
        eps in (-2i64..=2, -2i64..=2, -2i64..=2),
        ua in arb_term(),
        ub in arb_term(),
    ) {
        let basis = test_basis(eps.0, eps.1, eps.2);
        let a = QLaurent::monomial(basis.clone(), ua.0.clone(), Coefficient::scalar(Scalar::from_integer(1)));
        let b = QLaurent::monomial(basis.clone(), ub.0.clone(), Coefficient::scalar(Scalar::from_integer(1)));
        let pairing = ua.0.pairing(&ub.0, &basis);
        let ab = a.qmul(&b).unwrap();
        let ba = b.qmul(&a).unwrap();
        // M(u)M(v) = q^{u eps v} M(u+v), M(v)M(u) = q^{-u eps v} M(u+v)
        prop_assert_eq!(ab, ba.shift_q(2 * pairing as i32));
    }

    #[test]
    fn poisson_satisfies_jacobi(
        eps in (-2i64..=2, -2i64..=2, -2i64..=2),
        ta in proptest::collection::vec(arb_term(), 1..3),
        tb in proptest::collection::vec(arb_term(), 1..3),
        tc in proptest::collection::vec(arb_term(), 1..3),
    ) {
        let basis = test_basis(eps.0, eps.1, eps.2);
        let strip = |ts: &[(ExponentVector, i32, u32, i64)]| -> Vec<(ExponentVector, i32, u32, i64)> {
            ts.iter().map(|(e, _, w, c)| (e.clone(), 0, *w, *c)).collect()
        };
        let a = element(&basis, &strip(&ta));
        let b = element(&basis, &strip(&tb));
        let c = element(&basis, &strip(&tc));
        let j1 = a.poisson(&b).unwrap().poisson(&c).unwrap();
        let j2 = b.poisson(&c).unwrap().poisson(&a).unwrap();
        let j3 = c.poisson(&a).unwrap().poisson(&b).unwrap();
        let total = j1.add(&j2).unwrap().add(&j3).unwrap();
        prop_assert!(total.is_zero(), "jacobiator = {total}");
    }

    #[test]
    fn poisson_is_antisymmetric_and_leibniz(
        eps in (-2i64..=2, -2i64..=2, -2i64..=2),
        ta in proptest::collection::vec(arb_term(), 1..3),
        tb in proptest::collection::vec(arb_term(), 1..3),
        tc in proptest::collection::vec(arb_term(), 1..3),
    ) {
        let basis = test_basis(eps.0, eps.1, eps.2);
        let strip = |ts: &[(ExponentVector, i32, u32, i64)]| -> Vec<(ExponentVector, i32, u32, i64)> {
            ts.iter().map(|(e, _, w, c)| (e.clone(), 0, *w, *c)).collect()
        };
        let a = element(&basis, &strip(&ta));
        let b = element(&basis, &strip(&tb));
        let c = element(&basis, &strip(&tc));
        let ab = a.poisson(&b).unwrap();
        let ba = b.poisson(&a).unwrap();
        prop_assert!(ab.add(&ba).unwrap().is_zero());
        // {a, bc} = {a,b} c + b {a,c}
        let bc = b.mul_classical(&c).unwrap();
        let lhs = a.poisson(&bc).unwrap();
        let rhs = a
            .poisson(&b)
            .unwrap()
            .mul_classical(&c)
            .unwrap()
            .add(&b.mul_classical(&a.poisson(&c).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_is_an_antihomomorphic_involution(
        eps in (-2i64..=2, -2i64..=2, -2i64..=2),
        ta in proptest::collection::vec(arb_term(), 1..4),
        tb in proptest::collection::vec(arb_term(), 1..4),
    ) {
        let basis = test_basis(eps.0, eps.1, eps.2);
        let a = element(&basis, &ta);
        let b = element(&basis, &tb);
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        let lhs = a.qmul(&b).unwrap().adjoint();
        let rhs = b.adjoint().qmul(&a.adjoint()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn printing_round_trips(
        eps in (-2i64..=2, -2i64..=2, -2i64..=2),
        ta in proptest::collection::vec(arb_term(), 0..5),
    ) {
        let basis = test_basis(eps.0, eps.1, eps.2);
        let a = element(&basis, &ta);
        let s = render(&a);
        let back = parse_qlaurent(&s, &basis).unwrap();
        prop_assert_eq!(a, back, "text was {}", s);
    }

    #[test]
    fn classical_specialization_of_qmul_is_commutative(
        eps in (-2i64..=2, -2i64..=2, -2i64..=2),
        ta in proptest::collection::vec(arb_term(), 1..4),
        tb in proptest::collection::vec(arb_term(), 1..4),
    ) {
        let basis = test_basis(eps.0, eps.1, eps.2);
        let strip = |ts: &[(ExponentVector, i32, u32, i64)]| -> Vec<(ExponentVector, i32, u32, i64)> {
            ts.iter().map(|(e, _, w, c)| (e.clone(), 0, *w, *c)).collect()
        };
        let a = element(&basis, &strip(&ta));
        let b = element(&basis, &strip(&tb));
        let q1 = a.qmul(&b).unwrap().specialize_q_one();
        let cl = a.mul_classical(&b).unwrap();
        prop_assert_eq!(q1, cl);
    }
}
