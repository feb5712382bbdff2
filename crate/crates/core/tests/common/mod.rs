//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use leibniz_gsb::freealg::{expand_nlsw, int, Polynomial, Rational};
use leibniz_gsb::replication::is_averaging;
use leibniz_gsb::hnn::{inner_pair, HnnInput};
use leibniz_gsb::linalg::{invert, Echelon};
use leibniz_gsb::table::{apply_transpose, Table, Vector};
use leibniz_gsb::words::{enumerate_alsw, standard_bracketing, NlswTree, Word};
use num_traits::Zero;
use std::collections::HashSet;
use rand::Rng;

pub fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

/// Table from a list of nonzero products `(i, j, e_i * e_j)`.
pub fn table(dim: usize, products: &[(usize, usize, &[i64])]) -> Table {
    let mut t = Table::zero(dim);
    for &(i, j, p) in products {
        t.set(i, j, v(p));
    }
    t
}

/// Antisymmetric table from `[e_i, e_j]` for `i < j`.
pub fn lie(dim: usize, brackets: &[(usize, usize, &[i64])]) -> Table {
    let mut t = Table::zero(dim);
    for &(i, j, p) in brackets {
        t.set(i, j, v(p));
        t.set(j, i, p.iter().map(|&x| int(-x)).collect());
    }
    t
}

pub fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

// ---- Lie tables ----

pub fn affine() -> Table {
    lie(2, &[(0, 1, &[0, 1])])
}

/// `e, h, f` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> Table {
    lie(3, &[(0, 2, &[0, 1, 0]), (1, 0, &[2, 0, 0]), (1, 2, &[0, 0, -2])])
}

/// `[x, y] = z`.
pub fn heisenberg() -> Table {
    lie(3, &[(0, 1, &[0, 0, 1])])
}

/// `[x, y] = z`, `[y, z] = x`, `[z, x] = y`.
pub fn so3() -> Table {
    lie(3, &[(0, 1, &[0, 0, 1]), (1, 2, &[1, 0, 0]), (2, 0, &[0, 1, 0])])
}

pub fn lie_tables() -> Vec<(&'static str, Table)> {
    vec![
        ("abelian-1", Table::zero(1)),
        ("abelian-2", Table::zero(2)),
        ("affine", affine()),
        ("abelian-3", Table::zero(3)),
        ("heisenberg", heisenberg()),
        ("sl2", sl2()),
        ("so3", so3()),
    ]
}

// ---- HNN inputs ----

/// `[x1 ⊣ x1] = x2`, `A = span{x2}`, `d(x2) = x2`, `d′(x2) = 0`.
pub fn hnn_dim2() -> HnnInput {
    HnnInput {
        names: names(&["x1", "x2"]),
        table: table(2, &[(0, 0, &[0, 1])]),
        subalgebra: vec![v(&[0, 1])],
        d: vec![v(&[0, 1])],
        d_prime: vec![v(&[0, 0])],
    }
}

/// `sl2` with `A = span{h}` and the inner pair of `e` (`d′ = -d`).
pub fn hnn_sl2() -> HnnInput {
    let t = sl2();
    let a = vec![v(&[0, 1, 0])];
    let (d, d_prime) = inner_pair(&t, &a, &v(&[1, 0, 0]));
    HnnInput { names: names(&["e", "h", "f"]), table: t, subalgebra: a, d, d_prime }
}

/// `sl2` with the Borel subalgebra `A = span{e, h}` and the inner pair of `h`.
pub fn hnn_borel() -> HnnInput {
    let t = sl2();
    let a = vec![v(&[1, 0, 0]), v(&[0, 1, 0])];
    let (d, d_prime) = inner_pair(&t, &a, &v(&[0, 1, 0]));
    HnnInput { names: names(&["e", "h", "f"]), table: t, subalgebra: a, d, d_prime }
}

/// Affine Lie algebra `[e, f] = f` with `A = span{f}`, `d(f) = 2f`, `d′ = -d`.
pub fn hnn_affine() -> HnnInput {
    HnnInput {
        names: names(&["e", "f"]),
        table: affine(),
        subalgebra: vec![v(&[0, 1])],
        d: vec![v(&[0, 2])],
        d_prime: vec![v(&[0, -2])],
    }
}

/// `x` acting on `span{y, z}`: `[y ⊣ x] = y`, `[z ⊣ x] = y + z`. Not Lie.
/// `A = span{x}`, `d(x) = x`, `d′(x) = -x + z` (not an inner pair).
pub fn hnn_jordan3() -> HnnInput {
    HnnInput {
        names: names(&["x", "y", "z"]),
        table: table(3, &[(1, 0, &[0, 1, 0]), (2, 0, &[0, 1, 1])]),
        subalgebra: vec![v(&[1, 0, 0])],
        d: vec![v(&[1, 0, 0])],
        d_prime: vec![v(&[-1, 0, 1])],
    }
}

/// Affine algebra plus its adjoint module `u, v` as a right-only ideal.
/// `A = span{e, v}`, inner pair of `f`.
pub fn hnn_hemi4() -> HnnInput {
    let t = table(
        4,
        &[(0, 1, &[0, 1, 0, 0]), (1, 0, &[0, -1, 0, 0]), (2, 1, &[0, 0, 0, 1]), (3, 0, &[0, 0, 0, -1])],
    );
    let a = vec![v(&[1, 0, 0, 0]), v(&[0, 0, 0, 1])];
    let (d, d_prime) = inner_pair(&t, &a, &v(&[0, 1, 0, 0]));
    HnnInput { names: names(&["e", "f", "u", "v"]), table: t, subalgebra: a, d, d_prime }
}

/// The same data in the basis `new_i = Σ_j basis[i][j] e_j`, named `p, q, r, …`.
pub fn rebase(input: &HnnInput, basis: &[Vector]) -> HnnInput {
    let inv = invert(basis).expect("invertible");
    let conv = |xs: &[Vector]| xs.iter().map(|x| apply_transpose(&inv, x)).collect::<Vec<_>>();
    let ns = ["p", "q", "r", "s"];
    HnnInput {
        names: names(&ns[..basis.len()]),
        table: input.table.change_basis(basis).unwrap(),
        subalgebra: conv(&input.subalgebra),
        d: conv(&input.d),
        d_prime: conv(&input.d_prime),
    }
}

/// `hnn_jordan3` in a basis where neither `H₀` nor `A` is spanned by
/// coordinate vectors.
pub fn hnn_jordan3_skew() -> HnnInput {
    rebase(&hnn_jordan3(), &[v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 0, 2])])
}

pub fn hnn_inputs() -> Vec<(&'static str, HnnInput)> {
    vec![
        ("dim2", hnn_dim2()),
        ("affine", hnn_affine()),
        ("sl2", hnn_sl2()),
        ("borel", hnn_borel()),
        ("jordan3", hnn_jordan3()),
        ("jordan3-skew", hnn_jordan3_skew()),
        ("hemi4", hnn_hemi4()),
    ]
}

// ---- linear-algebra oracles ----

/// Basis of the Lie ideal generated by `rels` in `Lie⟨alphabet⟩`, truncated
/// at `max_degree`: the span is closed under `p ↦ [p, x]` for letters `x`
/// whenever `p` has degree below `max_degree`.
pub fn ideal_span(alphabet_size: usize, rels: &[Polynomial], max_degree: usize) -> Echelon {
    let mut e = Echelon::new();
    for r in rels.iter().filter(|r| r.degree() <= max_degree) {
        e.insert(r);
    }
    let mut done: HashSet<Word> = HashSet::new();
    loop {
        let todo: Vec<Polynomial> = e
            .rows()
            .filter(|p| p.degree() < max_degree && !done.contains(p.leading_word().unwrap()))
            .cloned()
            .collect();
        if todo.is_empty() {
            return e;
        }
        for p in todo {
            done.insert(p.leading_word().unwrap().clone());
            for x in 0..alphabet_size as u16 {
                e.insert(&p.bracket(&Polynomial::letter(x)));
            }
        }
    }
}

/// Ranks of `span ∩ F_k` for `k = 0..=max_degree`, where `F_k` is the span
/// of words of length ≤ `k`.
pub fn filtered_ranks(e: &Echelon, max_degree: usize) -> Vec<usize> {
    (0..=max_degree).map(|k| e.pivots().filter(|w| w.len() <= k).count()).collect()
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut k, mut out) = (n, 2, 1);
    while k * k <= n {
        if n % k == 0 {
            n /= k;
            if n % k == 0 {
                return 0;
            }
            out = -out;
        }
        k += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

/// Dimension of the degree-`d` component of the free Lie algebra on `n`
/// letters (Witt's formula).
pub fn witt(n: usize, d: usize) -> usize {
    let s: i64 = (1..=d).filter(|e| d.is_multiple_of(*e)).map(|e| mobius(e) * (n as i64).pow((d / e) as u32)).sum();
    (s / d as i64) as usize
}

/// Per-degree dimension of `Lie⟨X⟩/I` for degrees `1..=max_degree`, with `I`
/// spanned (in each filtration level) by `e`.
pub fn quotient_counts(alphabet_size: usize, e: &Echelon, max_degree: usize) -> Vec<usize> {
    let ranks = filtered_ranks(e, max_degree);
    (1..=max_degree).map(|k| witt(alphabet_size, k) - (ranks[k] - ranks[k - 1])).collect()
}

// ---- Perm operad ----

/// A Perm monomial of arity `n` as the word of its variables; `e_i^(n)` is
/// any word ending in `x_i`.
pub fn perm_word(n: usize, i: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (1..=n).filter(|&k| k != i).collect();
    w.push(i);
    w
}

/// Substitutes the `k`-th argument monomial (shifted) for `x_k` in the
/// outer monomial, then reads off the last variable.
pub fn perm_substitute(n: usize, i: usize, args: &[(usize, usize)]) -> (usize, usize) {
    let outer = perm_word(n, i);
    let mut offsets = vec![0];
    for a in args {
        offsets.push(offsets.last().unwrap() + a.0);
    }
    let mut word = Vec::new();
    for &k in &outer {
        let (m, j) = args[k - 1];
        word.extend(perm_word(m, j).into_iter().map(|x| x + offsets[k - 1]));
    }
    (word.len(), *word.last().unwrap())
}

// ---- random data ----

pub fn random_coefficient(rng: &mut impl Rng) -> Rational {
    loop {
        let c = int(rng.gen_range(-3..=3));
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_word(rng: &mut impl Rng, letters: usize, len: usize) -> Word {
    Word((0..len).map(|_| rng.gen_range(0..letters as u16)).collect())
}

/// A random nonzero homogeneous Lie polynomial of degree `d` on `letters`
/// letters, as a combination of Lyndon basis elements.
pub fn random_lie_poly(rng: &mut impl Rng, letters: usize, d: usize) -> Polynomial {
    let basis: Vec<Word> = enumerate_alsw(letters, d).into_iter().filter(|w| w.len() == d).collect();
    loop {
        let mut p = Polynomial::zero();
        for w in &basis {
            let c = int(rng.gen_range(-2..=2));
            if !c.is_zero() {
                p.add_scaled(&expand_nlsw(&standard_bracketing(w).unwrap()), &c);
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// One or two homogeneous relations of degree 3 or 4 on two letters.
pub fn random_two_letter_system(rng: &mut impl Rng) -> Vec<Polynomial> {
    let k = rng.gen_range(1..=2);
    (0..k)
        .map(|_| {
            let d = rng.gen_range(3..=4);
            random_lie_poly(rng, 2, d)
        })
        .collect()
}

/// A random element of the ideal generated by `rels`: a combination of
/// brackets of a relation with letters on either side, degree ≤ `max_degree`.
pub fn random_ideal_element(rng: &mut impl Rng, letters: usize, rels: &[Polynomial], max_degree: usize) -> Polynomial {
    loop {
        let mut out = Polynomial::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut p = rels[rng.gen_range(0..rels.len())].clone();
            let extra = rng.gen_range(0..=max_degree.saturating_sub(p.degree()));
            for _ in 0..extra {
                let x = Polynomial::letter(rng.gen_range(0..letters as u16));
                p = if rng.gen_bool(0.5) { p.bracket(&x) } else { x.bracket(&p) };
            }
            out.add_scaled(&p, &random_coefficient(rng));
        }
        if !out.is_zero() {
            return out;
        }
    }
}

/// A random nonzero combination of the given basis trees.
pub fn random_combination(rng: &mut impl Rng, trees: &[NlswTree]) -> Polynomial {
    loop {
        let mut out = Polynomial::zero();
        for _ in 0..rng.gen_range(1..=4) {
            let t = &trees[rng.gen_range(0..trees.len())];
            out.add_scaled(&expand_nlsw(t), &random_coefficient(rng));
        }
        if !out.is_zero() {
            return out;
        }
    }
}

/// Averaging operators on `table` with entries in {-1, 0, 1} and at most
/// `max_nonzero` nonzero entries.
pub fn small_averaging_operators(table: &Table, max_nonzero: usize) -> Vec<Vec<Vector>> {
    let n = table.dim();
    let cells = n * n;
    let mut out = Vec::new();
    let mut m = vec![vec![int(0); n]; n];
    fill(table, &mut m, 0, cells, max_nonzero, &mut out);
    out
}

fn fill(table: &Table, m: &mut Vec<Vector>, k: usize, cells: usize, budget: usize, out: &mut Vec<Vec<Vector>>) {
    let n = table.dim();
    if k == cells {
        if is_averaging(table, m).unwrap() {
            out.push(m.clone());
        }
        return;
    }
    fill(table, m, k + 1, cells, budget, out);
    if budget > 0 {
        for c in [-1, 1] {
            m[k / n][k % n] = int(c);
            fill(table, m, k + 1, cells, budget - 1, out);
        }
        m[k / n][k % n] = int(0);
    }
}
