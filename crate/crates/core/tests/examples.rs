use rankcode::analysis::{
    a_d_bounds, classify, dually_amrd_recursion, tail_check, CodeClass, Spectra,
};
use rankcode::audit::{audit, Depth};
use rankcode::catalog;
use rankcode::codes::{extend, gabidulin, standard_points, Code, MatrixCode};
use rankcode::enumerate::rank_distribution;
use rankcode::fqlinalg::{Budget, Mat};
use rankcode::genweights::{generalized_weights_matrix, generalized_weights_vector};
use rankcode::gf::{find_irreducible, ExtField};
use rankcode::Error;

const BUDGET: Budget = Budget(1 << 20);

fn report(c: &MatrixCode) -> rankcode::analysis::CodeReport {
    classify(&Spectra::of_matrix(c, BUDGET).unwrap()).unwrap()
}

#[test]
fn fixed_codes() {
    let r = report(&catalog::diagonal_and_corner());
    assert_eq!(r.distribution, [1, 6, 7, 2]);
    assert_eq!(r.dual_distribution, [1, 9, 18, 4]);
    assert_eq!(r.label, "dually AMRD");

    let r = report(&catalog::single_corner());
    assert_eq!(r.class, CodeClass::AsMrd(1));
    assert_eq!(r.dual_class, CodeClass::Qmrd);

    let r = report(&catalog::ternary_shifted_identities());
    assert_eq!((r.d, r.d_dual), (2, 1));
    assert!(r.dually_amrd);

    let r = report(&catalog::binary_shifted_identities());
    assert!(r.dually_amrd);
    assert_eq!(r.distance_sum, 3);

    let r = report(&catalog::amrd_with_sparse_dual());
    assert_eq!(r.dual_distribution, [1, 0, 9, 6]);
    assert!(!r.dually_amrd);

    let r = report(&catalog::two_units_dual());
    assert_eq!((r.class, r.d, r.d_dual), (CodeClass::Qmrd, 1, 1));
}

#[test]
fn irreducible_moduli() {
    assert_eq!(find_irreducible(2, 4).unwrap(), [1, 1, 0, 0, 1]);
    assert_eq!(find_irreducible(2, 3).unwrap(), [1, 1, 0, 1]);
    assert!(matches!(ExtField::new(4, 2), Err(Error::NotPrime(4))));
    assert!(ExtField::with_modulus(2, vec![1, 0, 1]).is_err());
}

#[test]
fn gabidulin_weights_and_extension() {
    let f = ExtField::new(2, 4).unwrap();
    let g = gabidulin(&f, 4, 2, &standard_points(&f, 4)).unwrap();
    assert_eq!(
        generalized_weights_vector(&g, BUDGET).unwrap().weights,
        [3, 4]
    );
    let g3 = gabidulin(&f, 3, 2, &standard_points(&f, 3)).unwrap();
    let e = extend(&g3).unwrap();
    assert_eq!(e.n(), 4);
    let r = classify(&Spectra::of_vector(&e, BUDGET).unwrap()).unwrap();
    assert_eq!((r.rdef, r.d, r.d_dual), (1, 2, 1));
    assert!(e.dual().contains(&[1, 1, 1, 1]));
    assert!(matches!(
        gabidulin(&f, 4, 5, &standard_points(&f, 4)),
        Err(Error::InvalidParameters(_))
    ));
}

#[test]
fn tails_recursions_and_bounds() {
    for c in [
        catalog::diagonal_and_corner(),
        catalog::ternary_shifted_identities(),
        catalog::binary_shifted_identities(),
    ] {
        let sp = Spectra::of_matrix(&c, BUDGET).unwrap();
        assert!(tail_check(&sp).unwrap().holds);
        for row in dually_amrd_recursion(&sp).unwrap() {
            assert_eq!(row.predicted, row.enumerated.to_string(), "A_{}", row.index);
        }
        match a_d_bounds(&sp) {
            Ok(b) => assert!(b.within && sp.params.divisible()),
            Err(e) => assert!(!sp.params.divisible() && matches!(e, Error::HypothesisNotMet(_))),
        }
    }
    let sp = Spectra::of_matrix(&catalog::amrd_with_sparse_dual(), BUDGET).unwrap();
    assert!(matches!(
        dually_amrd_recursion(&sp),
        Err(Error::HypothesisNotMet(_))
    ));
}

#[test]
fn matrix_weights_of_fixed_codes() {
    let p = generalized_weights_matrix(&catalog::diagonal_and_corner(), BUDGET).unwrap();
    assert_eq!(p.weights[0], 1);
    assert_eq!(p.weights.len(), 4);
    let full = MatrixCode::full(2, 2, 3).unwrap();
    let p = generalized_weights_matrix(&full, BUDGET).unwrap();
    assert_eq!(p.weights, [1, 1, 1, 2, 2, 2]);
}

#[test]
fn audits_pass_on_fixed_codes() {
    let codes = [
        Code::Matrix(catalog::diagonal_and_corner()),
        Code::Matrix(catalog::single_corner()),
        Code::Matrix(catalog::ternary_shifted_identities()),
        Code::Matrix(catalog::binary_shifted_identities()),
        Code::Matrix(catalog::amrd_with_sparse_dual()),
        Code::Matrix(catalog::two_units_dual()),
        Code::Matrix(catalog::self_dual_pairs()),
        Code::Vector(catalog::missing_coordinate()),
    ];
    for c in &codes {
        let a = audit(c, Depth::All, true, BUDGET).unwrap();
        let failed: Vec<_> = a.failures().map(|x| &x.name).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}

#[test]
fn errors() {
    let zero = MatrixCode::zero(2, 2, 2).unwrap();
    assert!(matches!(
        Spectra::of_matrix(&zero, BUDGET).and_then(|s| classify(&s)),
        Err(Error::TrivialCode(_))
    ));
    let c = catalog::diagonal_and_corner();
    assert!(matches!(
        rank_distribution(&c, Budget(4)),
        Err(Error::BudgetExceeded { cap: 4, .. })
    ));
    assert!(MatrixCode::new(2, 3, 2, &[Mat::zeros(3, 2)]).is_err());
}
