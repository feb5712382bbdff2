mod common;

use common::*;
use leibniz_gsb::hnn::*;
use leibniz_gsb::Error;

fn seeds(p: &HnnPresentation) -> Vec<leibniz_gsb::freealg::Polynomial> {
    p.system.rules().iter().map(|r| r.poly.clone()).collect()
}

#[test]
fn every_fixture_is_valid() {
    for (name, inp) in hnn_inputs() {
        validate(&inp).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    assert!(!hnn_jordan3().table.is_lie());
    assert!(!hnn_hemi4().table.is_lie());
    assert!(hnn_sl2().table.is_lie());
}

#[test]
fn presentations_are_gsb() {
    for (name, inp) in hnn_inputs() {
        let p = build_presentation(&inp).unwrap();
        let ver = verify_gsb(&p).unwrap();
        assert!(ver.all_trivial(), "{name}");
        for case in ["(i)", "(ii)", "(iii)", "(iv)", "(v)"] {
            assert!(ver.cases.contains_key(case), "{name} {case}");
        }
    }
}

#[test]
fn embedding_holds() {
    for (name, inp) in hnn_inputs() {
        let p = build_presentation(&inp).unwrap();
        let e = check_embedding(&p);
        assert!(e.holds(), "{name}: {:?}", e.failures);
    }
}

#[test]
fn normal_basis_matches_forbidden_words_and_ranks() {
    for (name, inp) in hnn_inputs() {
        let p = build_presentation(&inp).unwrap();
        let nb = normal_basis(&p, 3);
        assert_eq!(nb, normal_basis_by_forbidden(&p, 3), "{name}");
        let size = p.alphabet.full().len();
        let oracle = quotient_counts(size, &ideal_span(size, &seeds(&p), 3), 3);
        let counts: Vec<usize> = (1..=3).map(|k| nb.iter().filter(|t| t.degree() == k).count()).collect();
        assert_eq!(counts, oracle, "{name}");
    }
}

#[test]
fn skew_basis_gets_fresh_letters() {
    let p = build_presentation(&hnn_jordan3_skew()).unwrap();
    assert!(!p.adapted.is_permutation);
    assert!(p.adapted.names.iter().any(|n| n.starts_with('b')));
}

#[test]
fn invalid_inputs_are_rejected() {
    let mut inp = hnn_dim2();
    inp.table.set(1, 0, v(&[1, 0]));
    assert!(!check_leibniz(&inp.table));
    assert!(matches!(build_presentation(&inp), Err(Error::InvalidHnnInput(_))));

    let mut inp = hnn_dim2();
    inp.subalgebra = vec![v(&[1, 0])];
    inp.d = vec![v(&[0, 0])];
    inp.d_prime = vec![v(&[0, 0])];
    assert!(matches!(validate(&inp), Err(Error::InvalidHnnInput(_))));

    let mut inp = hnn_jordan3();
    inp.d = vec![v(&[0, 1, 0])];
    assert!(!check_derivation(&inp.table, &inp.subalgebra, &inp.d, DerivationKind::Derivation).unwrap());

    let mut inp = hnn_jordan3();
    inp.d_prime = vec![v(&[0, 0, 1])];
    assert!(compatibility_failure(&inp).is_some());
}

#[test]
fn perturbed_derivation_leaves_a_residue() {
    let mut inp = hnn_jordan3();
    inp.d = vec![v(&[1, 1, 0])];
    assert!(validate(&inp).is_err());
    let p = build_presentation_unchecked(&inp).unwrap();
    assert!(!verify_gsb(&p).unwrap().all_trivial());
}
