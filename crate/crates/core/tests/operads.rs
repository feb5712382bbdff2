mod common;

use common::*;
use leibniz_gsb::operads::*;
use leibniz_gsb::table::DiTable;

#[test]
fn perm_composition_agrees_with_substitution() {
    let rows = perm_composition_table(3);
    assert!(!rows.is_empty());
    let mut discrepancies = 0;
    for r in &rows {
        let args: Vec<(usize, usize)> = r.args.iter().map(|a| (a.n, a.i)).collect();
        assert_eq!((r.result.n, r.result.i), perm_substitute(r.outer.n, r.outer.i, &args));
        if r.printed_index != r.result.i {
            discrepancies += 1;
        }
    }
    assert!(discrepancies > 0);
}

#[test]
fn small_arity_dimensions() {
    assert_eq!(operad_dimensions(OperadKind::Lie, 4).unwrap(), vec![1, 1, 2, 6]);
    assert_eq!(operad_dimensions(OperadKind::Perm, 4).unwrap(), vec![1, 2, 3, 4]);
    assert_eq!(operad_dimension(OperadKind::DiLie, 3).unwrap(), 6);
}

#[test]
fn hadamard_products_of_lie_tables_are_dilie() {
    for (name, t) in lie_tables() {
        for n in 1..=3 {
            let di = hadamard_algebra(&t, n).unwrap();
            assert_eq!(check_dilie_identities(&di), None, "{name} x Perm_{n}");
        }
    }
}

#[test]
fn leibniz_tables_are_dilie_and_others_are_not() {
    let l = hnn_jordan3().table;
    let mut right = l.clone();
    for i in 0..3 {
        for j in 0..3 {
            right.set(i, j, l.get(j, i).iter().map(|c| -c).collect());
        }
    }
    let di = DiTable { left: l.clone(), right: right.clone() };
    assert_eq!(check_dilie_identities(&di), None);
    let mut bad = l.clone();
    bad.set(0, 0, v(&[1, 0, 0]));
    let f = check_dilie_identities(&DiTable { left: bad, right }).unwrap();
    assert!(!f.indices.is_empty());
}

#[test]
fn leibniz_products_from_perm() {
    let e1 = derive_leibniz_product(PermSlot::E1);
    assert_eq!(e1.identity, "[x -| y] = x -| y - y |- x");
    assert!(e1.verified);
    let e2 = derive_leibniz_product(PermSlot::E2);
    assert_eq!(e2.identity, "[x |- y] = x |- y - y -| x");
    assert!(e2.verified);
}
