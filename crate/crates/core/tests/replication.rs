mod common;

use common::*;
use leibniz_gsb::freealg::Polynomial;
use leibniz_gsb::linalg::Echelon;
use leibniz_gsb::operads::check_dilie_identities;
use leibniz_gsb::replication::*;
use leibniz_gsb::words::Alphabet;
use leibniz_gsb::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn xy() -> DoubledAlphabet {
    DoubledAlphabet::new(Alphabet::descending(&["x", "y"]).unwrap()).unwrap()
}

const Y: u16 = 0;
const X: u16 = 1;

#[test]
fn translation_dots_the_selected_variable() {
    let d = xy();
    let l = Polynomial::letter;
    let e = DiExpr::di(DiOp::Left, DiExpr::di(DiOp::Left, DiExpr::Gen(X), DiExpr::Gen(Y)), DiExpr::Gen(X));
    assert_eq!(d.translate(&e).unwrap(), l(d.dotted(X)).bracket(&l(Y)).bracket(&l(X)));
    let e = DiExpr::di(DiOp::Right, DiExpr::Gen(X), DiExpr::Gen(Y));
    assert_eq!(d.translate(&e).unwrap(), l(X).bracket(&l(d.dotted(Y))));
    let sym = d
        .translate_relation(&[
            (int1(), DiExpr::di(DiOp::Right, DiExpr::Gen(X), DiExpr::Gen(Y))),
            (int1(), DiExpr::di(DiOp::Left, DiExpr::Gen(Y), DiExpr::Gen(X))),
        ])
        .unwrap();
    assert!(sym.is_zero());
    let lie = DiExpr::Lie(Box::new(DiExpr::Gen(X)), Box::new(DiExpr::Gen(Y)));
    assert!(matches!(d.translate(&lie), Err(Error::MalformedRelation(_))));
}

fn int1() -> leibniz_gsb::freealg::Rational {
    leibniz_gsb::freealg::int(1)
}

#[test]
fn associative_di_products_project_to_the_product() {
    let d = xy();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let f = random_lie_poly(&mut rng, 4, a);
        let g = random_lie_poly(&mut rng, 4, b);
        let fg = d.phi(&(&f * &g));
        assert_eq!(d.phi(&d.di_product_assoc(DiOp::Left, &f, &g)), fg);
        assert_eq!(d.phi(&d.di_product_assoc(DiOp::Right, &f, &g)), fg);
        assert_eq!(d.phi(&d.phi(&f)), d.phi(&f));
    }
}

#[test]
fn free_dilie_basis_is_independent() {
    for n in 1..=3 {
        let base: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let d = DoubledAlphabet::new(Alphabet::descending(&base).unwrap()).unwrap();
        let words = dilie_basis(n, 3);
        let mut e = Echelon::new();
        for k in 1..=3 {
            let deg: Vec<_> = words.iter().filter(|w| w.len() == k).collect();
            assert_eq!(deg.len(), n.pow(k as u32));
            for w in deg {
                assert!(e.insert(&expand_dilie_word(&d, w)));
            }
        }
    }
}

/// Random homogeneous di-relations: combinations of free di-Lie basis words.
fn random_di_relations(rng: &mut impl Rng, d: &DoubledAlphabet) -> Vec<Polynomial> {
    let words = dilie_basis(2, 3);
    (0..rng.gen_range(1..=2))
        .map(|_| {
            let k = rng.gen_range(2..=3);
            let deg: Vec<_> = words.iter().filter(|w| w.len() == k).collect();
            loop {
                let mut p = Polynomial::zero();
                for w in &deg {
                    if rng.gen_bool(0.5) {
                        p.add_scaled(&expand_dilie_word(d, w), &random_coefficient(rng));
                    }
                }
                if !p.is_zero() {
                    return p;
                }
            }
        })
        .collect()
}

#[test]
fn ideal_transfer_holds_on_random_relations() {
    let d = xy();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..4 {
        let s = random_di_relations(&mut rng, &d);
        let check = d.ideal_transfer(&s, 4).unwrap();
        assert!(check.holds(), "{check:?}");
        assert!(d.replicate_system(&s).is_ok());
    }
}

#[test]
fn averaged_dialgebras_are_dilie() {
    let mut count = 0;
    for (name, t) in lie_tables().into_iter().filter(|(_, t)| t.dim() <= 2) {
        for op in small_averaging_operators(&t, 4) {
            let di = averaged_dialgebra(&t, &op).unwrap();
            assert_eq!(check_dilie_identities(&di), None, "{name}");
            count += 1;
        }
    }
    assert!(count >= 20);
}
