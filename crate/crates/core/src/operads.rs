//! Small-arity operad calculations: the Perm operad, the arity-3 part of the
//! Lie operad, Hadamard products with Perm and Leibniz (di-Lie) identities.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freealg::{int, Polynomial, Rational};
use crate::linalg::rank;
use crate::table::{add, is_zero, sub, DiTable, Table, Vector};

/// The basis element `e_i^(n) = (x_1 ⋯ x̂_i ⋯ x_n) x_i` of `Perm(n)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermElement {
    pub n: usize,
    pub i: usize,
}

impl PermElement {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if n == 0 || i == 0 || i > n {
            return Err(Error::ArityMismatch(format!("e_{i}^({n}) is not a basis element")));
        }
        Ok(PermElement { n, i })
    }

    pub fn all(n: usize) -> impl Iterator<Item = PermElement> {
        (1..=n).map(move |i| PermElement { n, i })
    }
}

impl fmt::Display for PermElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}^({})", self.i, self.n)
    }
}

/// Operadic composition `γ(e_i^(n); e_{j_1}^(m_1), …, e_{j_n}^(m_n))`: the
/// distinguished last variable comes from the `i`-th block, so the result is
/// `e^(m)_{m_1 + ⋯ + m_{i-1} + j_i}`.
pub fn perm_compose(e: PermElement, args: &[PermElement]) -> Result<PermElement> {
    if args.len() != e.n {
        return Err(Error::ArityMismatch(format!("{e} takes {} arguments, got {}", e.n, args.len())));
    }
    let m = args.iter().map(|a| a.n).sum();
    let offset: usize = args[..e.i - 1].iter().map(|a| a.n).sum();
    Ok(PermElement { n: m, i: offset + args[e.i - 1].i })
}

/// The index `m_1 + ⋯ + m_{n-1} + j_i` of the printed composition formula,
/// kept for comparison in reports.
pub fn perm_compose_printed_index(e: PermElement, args: &[PermElement]) -> Result<usize> {
    if args.len() != e.n {
        return Err(Error::ArityMismatch(format!("{e} takes {} arguments, got {}", e.n, args.len())));
    }
    Ok(args[..e.n - 1].iter().map(|a| a.n).sum::<usize>() + args[e.i - 1].i)
}

/// Right action `e_i · σ = e_{σ(i)}`; `sigma[k - 1] = σ(k)`.
pub fn perm_act(sigma: &[usize], e: PermElement) -> Result<PermElement> {
    check_permutation(sigma)?;
    if sigma.len() != e.n {
        return Err(Error::ArityMismatch(format!("permutation of {} acting on {e}", sigma.len())));
    }
    Ok(PermElement { n: e.n, i: sigma[e.i - 1] })
}

/// Product for the right action: `(στ)(k) = τ(σ(k))`.
pub fn compose_permutations(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    sigma.iter().map(|&s| tau[s - 1]).collect()
}

fn check_permutation(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s == 0 || s > sigma.len() || seen[s - 1] {
            return Err(Error::ArityMismatch(format!("{sigma:?} is not a permutation")));
        }
        seen[s - 1] = true;
    }
    Ok(())
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for k in 1..=n {
            if !prefix.contains(&k) {
                prefix.push(k);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// One row of the composition comparison in operad reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermCompositionRow {
    pub outer: PermElement,
    pub args: Vec<PermElement>,
    pub result: PermElement,
    pub printed_index: usize,
}

/// Every composition of total arity at most `max_arity` whose inner
/// arguments all have arity ≥ 1.
pub fn perm_composition_table(max_arity: usize) -> Vec<PermCompositionRow> {
    let mut rows = Vec::new();
    for n in 1..=max_arity {
        for outer in PermElement::all(n) {
            for arities in compositions_of_at_most(n, max_arity) {
                for args in arg_choices(&arities) {
                    let result = perm_compose(outer, &args).expect("arity matches");
                    let printed_index = perm_compose_printed_index(outer, &args).expect("arity matches");
                    rows.push(PermCompositionRow { outer, args, result, printed_index });
                }
            }
        }
    }
    rows
}

/// Sequences of `n` positive arities with sum at most `max`.
fn compositions_of_at_most(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=max.saturating_sub(n - 1) {
        for mut rest in compositions_of_at_most(n - 1, max - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn arg_choices(arities: &[usize]) -> Vec<Vec<PermElement>> {
    let mut out = vec![Vec::new()];
    for &m in arities {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<PermElement>| {
                PermElement::all(m).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// The generator `μ` or its transpose `μ^(12)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mu {
    Id,
    Swap,
}

/// Coset representatives of `S_3 / S_2` used for arity-3 monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CosetRep {
    Id,
    P13,
    P23,
}

impl CosetRep {
    pub const ALL: [CosetRep; 3] = [CosetRep::Id, CosetRep::P13, CosetRep::P23];

    /// The representative for a permutation of `{1,2,3}` given by images,
    /// if it is one of the three.
    pub fn from_permutation(sigma: &[usize]) -> Option<Self> {
        match sigma {
            [1, 2, 3] => Some(CosetRep::Id),
            [3, 2, 1] => Some(CosetRep::P13),
            [1, 3, 2] => Some(CosetRep::P23),
            _ => None,
        }
    }

    fn relabel(self, v: u8) -> u8 {
        match (self, v) {
            (CosetRep::P13, 1) => 3,
            (CosetRep::P13, 3) => 1,
            (CosetRep::P23, 2) => 3,
            (CosetRep::P23, 3) => 2,
            _ => v,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CosetRep::Id => "1",
            CosetRep::P13 => "(13)",
            CosetRep::P23 => "(23)",
        }
    }
}

/// `σ ⊗_{S_2} (ε_1 ⊗ ε_2)`: `ε_1` is the outer operation, `ε_2` the inner one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OperadMonomial {
    pub sigma: CosetRep,
    pub outer: Mu,
    pub inner: Mu,
}

impl OperadMonomial {
    /// The twelve elements in table order.
    pub fn all() -> Vec<OperadMonomial> {
        let mus = [(Mu::Id, Mu::Id), (Mu::Id, Mu::Swap), (Mu::Swap, Mu::Id), (Mu::Swap, Mu::Swap)];
        CosetRep::ALL
            .iter()
            .flat_map(|&sigma| mus.iter().map(move |&(outer, inner)| OperadMonomial { sigma, outer, inner }))
            .collect()
    }
}

impl fmt::Display for OperadMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mu = |m: Mu| if m == Mu::Id { "mu" } else { "mu^(12)" };
        write!(f, "{} (x) ({} (x) {})", self.sigma.name(), mu(self.outer), mu(self.inner))
    }
}

/// A bracket monomial in variables `x_1, x_2, …` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Magma {
    Var(u8),
    Op(Box<Magma>, Box<Magma>),
}

impl Magma {
    pub fn op(l: Magma, r: Magma) -> Self {
        Magma::Op(Box::new(l), Box::new(r))
    }

    /// Commutator expansion in the free associative algebra, variable `x_k`
    /// stored as letter rank `k - 1`.
    pub fn expand(&self) -> Polynomial {
        match self {
            Magma::Var(k) => Polynomial::letter(*k as u16 - 1),
            Magma::Op(l, r) => l.expand().bracket(&r.expand()),
        }
    }

    fn relabel(&self, f: &impl Fn(u8) -> u8) -> Magma {
        match self {
            Magma::Var(k) => Magma::Var(f(*k)),
            Magma::Op(l, r) => Magma::op(l.relabel(f), r.relabel(f)),
        }
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magma::Var(k) => write!(f, "x{k}"),
            Magma::Op(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// Signed multilinear monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMonomial {
    pub sign: i8,
    pub tree: Magma,
}

pub fn monomial_of(o: OperadMonomial) -> MultilinearMonomial {
    let (x1, x2, x3) = (Magma::Var(1), Magma::Var(2), Magma::Var(3));
    let inner = match o.inner {
        Mu::Id => Magma::op(x1, x2),
        Mu::Swap => Magma::op(x2, x1),
    };
    let base = match o.outer {
        Mu::Id => Magma::op(inner, x3),
        Mu::Swap => Magma::op(x3, inner),
    };
    MultilinearMonomial { sign: 1, tree: base.relabel(&|v| o.sigma.relabel(v)) }
}

/// The three summands of the Jacobiator.
pub fn jacobiator() -> Vec<OperadMonomial> {
    vec![
        OperadMonomial { sigma: CosetRep::Id, outer: Mu::Id, inner: Mu::Id },
        OperadMonomial { sigma: CosetRep::P13, outer: Mu::Id, inner: Mu::Swap },
        OperadMonomial { sigma: CosetRep::P23, outer: Mu::Id, inner: Mu::Swap },
    ]
}

/// Expansion of a sum of operad monomials in the free associative algebra.
pub fn expand_sum(terms: &[OperadMonomial]) -> Polynomial {
    terms.iter().fold(Polynomial::zero(), |acc, &o| {
        let m = monomial_of(o);
        let mut acc = acc;
        acc.add_scaled(&m.tree.expand(), &int(m.sign as i64));
        acc
    })
}

/// The Jacobiator maps to the Jacobi combination and expands to zero.
pub fn jacobiator_check() -> bool {
    let monomials: Vec<Magma> = jacobiator().into_iter().map(|o| monomial_of(o).tree).collect();
    let (x1, x2, x3) = (Magma::Var(1), Magma::Var(2), Magma::Var(3));
    let jacobi = [
        Magma::op(Magma::op(x1.clone(), x2.clone()), x3.clone()),
        Magma::op(Magma::op(x2.clone(), x3.clone()), x1.clone()),
        Magma::op(Magma::op(x3, x1), x2),
    ];
    monomials == jacobi && expand_sum(&jacobiator()).is_zero()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperadKind {
    Lie,
    Perm,
    DiLie,
}

impl OperadKind {
    pub fn name(self) -> &'static str {
        match self {
            OperadKind::Lie => "Lie",
            OperadKind::Perm => "Perm",
            OperadKind::DiLie => "DiLie",
        }
    }

    /// Defining identities as signed lists of monomials in `y_1, y_2, y_3`;
    /// the first term of each is a pattern with distinct variables.
    fn identities(self) -> Vec<Vec<(i64, Magma)>> {
        let y = Magma::Var;
        let op = Magma::op;
        match self {
            OperadKind::Lie => vec![
                vec![(1, op(y(1), y(2))), (1, op(y(2), y(1)))],
                vec![
                    (1, op(op(y(1), y(2)), y(3))),
                    (1, op(op(y(2), y(3)), y(1))),
                    (1, op(op(y(3), y(1)), y(2))),
                ],
            ],
            OperadKind::Perm => vec![
                vec![(1, op(op(y(1), y(2)), y(3))), (-1, op(y(1), op(y(2), y(3))))],
                vec![(1, op(op(y(1), y(2)), y(3))), (-1, op(op(y(2), y(1)), y(3)))],
            ],
            OperadKind::DiLie => vec![vec![
                (1, op(op(y(1), y(2)), y(3))),
                (-1, op(op(y(1), y(3)), y(2))),
                (-1, op(y(1), op(y(2), y(3)))),
            ]],
        }
    }
}

/// All multilinear monomials in `x_1..x_n` for one binary operation.
pub fn multilinear_monomials(n: usize) -> Vec<Magma> {
    fn shapes(vars: &[u8]) -> Vec<Magma> {
        if vars.len() == 1 {
            return vec![Magma::Var(vars[0])];
        }
        let mut out = Vec::new();
        for k in 1..vars.len() {
            for l in shapes(&vars[..k]) {
                for r in shapes(&vars[k..]) {
                    out.push(Magma::op(l.clone(), r));
                }
            }
        }
        out
    }
    let mut out = Vec::new();
    for p in permutations(n) {
        let vars: Vec<u8> = p.iter().map(|&k| k as u8).collect();
        out.extend(shapes(&vars));
    }
    out.sort();
    out
}

fn match_pattern(pattern: &Magma, t: &Magma, bind: &mut Vec<Option<Magma>>) -> bool {
    match (pattern, t) {
        (Magma::Var(k), _) => {
            bind[*k as usize] = Some(t.clone());
            true
        }
        (Magma::Op(pl, pr), Magma::Op(tl, tr)) => match_pattern(pl, tl, bind) && match_pattern(pr, tr, bind),
        _ => false,
    }
}

fn instantiate(pattern: &Magma, bind: &[Option<Magma>]) -> Magma {
    match pattern {
        Magma::Var(k) => bind[*k as usize].clone().expect("bound"),
        Magma::Op(l, r) => Magma::op(instantiate(l, bind), instantiate(r, bind)),
    }
}

/// Rewrites every subtree position of `t`, yielding `(position replaced)`.
fn replace_at_each_node(t: &Magma, f: &mut impl FnMut(&Magma) -> Vec<Vec<(i64, Magma)>>) -> Vec<Vec<(i64, Magma)>> {
    let mut out = f(t);
    if let Magma::Op(l, r) = t {
        for rel in replace_at_each_node(l, f) {
            out.push(rel.into_iter().map(|(c, m)| (c, Magma::op(m, (**r).clone()))).collect());
        }
        for rel in replace_at_each_node(r, f) {
            out.push(rel.into_iter().map(|(c, m)| (c, Magma::op((**l).clone(), m))).collect());
        }
    }
    out
}

/// Dimension of the arity-`n` component: multilinear monomials modulo all
/// consequences of the defining identities.
pub fn operad_dimension(which: OperadKind, n: usize) -> Result<usize> {
    if n == 0 || n > 4 {
        return Err(Error::ArityMismatch(format!("arity {n} is outside 1..=4")));
    }
    let monomials = multilinear_monomials(n);
    let index: std::collections::HashMap<&Magma, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let identities = which.identities();
    let mut rows: Vec<Vector> = Vec::new();
    for m in &monomials {
        let rels = replace_at_each_node(m, &mut |sub| {
            let mut found = Vec::new();
            for id in &identities {
                let mut bind = vec![None; 4];
                if match_pattern(&id[0].1, sub, &mut bind) {
                    found.push(id.iter().map(|(c, p)| (*c, instantiate(p, &bind))).collect());
                }
            }
            found
        });
        for rel in rels {
            let mut row = vec![Rational::zero(); monomials.len()];
            for (c, t) in rel {
                row[index[&t]] += int(c);
            }
            rows.push(row);
        }
    }
    Ok(monomials.len() - rank(&rows))
}

/// Dimensions for arities `1..=max_arity`, computed independently per arity.
pub fn operad_dimensions(which: OperadKind, max_arity: usize) -> Result<Vec<usize>> {
    (1..=max_arity).into_par_iter().map(|n| operad_dimension(which, n)).collect()
}

/// `A ⊗ P` for a Lie algebra `A` and the `n`-dimensional Perm algebra
/// `p_i p_j = p_j`: `(a⊗p) ⊣ (b⊗q) = [a,b] ⊗ qp`, `(a⊗p) ⊢ (b⊗q) = [a,b] ⊗ pq`.
/// The basis vector `a_i ⊗ p_k` has index `i * n + k`.
pub fn hadamard_algebra(lie: &Table, n: usize) -> Result<DiTable> {
    if let Some((i, j)) = lie.antisymmetry_failure() {
        return Err(Error::InvalidLieTable(format!("antisymmetry fails on ({}, {})", i + 1, j + 1)));
    }
    if let Some((i, j, k)) = lie.jacobi_failure() {
        return Err(Error::InvalidLieTable(format!("Jacobi identity fails on ({}, {}, {})", i + 1, j + 1, k + 1)));
    }
    let d = lie.dim();
    let mut out = DiTable::zero(d * n);
    for i in 0..d {
        for j in 0..d {
            let ab = lie.get(i, j);
            for p in 0..n {
                for q in 0..n {
                    // p_p p_q = p_q, so qp = p and pq = q.
                    let mut left = vec![Rational::zero(); d * n];
                    let mut right = vec![Rational::zero(); d * n];
                    for (k, c) in ab.iter().enumerate() {
                        left[k * n + p] = c.clone();
                        right[k * n + q] = c.clone();
                    }
                    out.left.set(i * n + p, j * n + q, left);
                    out.right.set(i * n + p, j * n + q, right);
                }
            }
        }
    }
    Ok(out)
}

/// The first violated identity, with the basis indices involved (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiLieFailure {
    /// `"[x |- y] + [y -| x] = 0"` or the right Leibniz identity for `⊣`.
    pub identity: &'static str,
    pub indices: Vec<usize>,
}

pub const IDENTITY_SYMMETRY: &str = "[x |- y] + [y -| x] = 0";
pub const IDENTITY_LEIBNIZ: &str = "[[x -| y] -| z] - [x -| [y -| z]] - [[x -| z] -| y] = 0";

/// Checks the symmetry identity on all pairs and the Leibniz identity on all
/// triples of basis vectors.
pub fn check_dilie_identities(t: &DiTable) -> Option<DiLieFailure> {
    let n = t.dim();
    let e = |i: usize| t.left.unit(i);
    for i in 0..n {
        for j in 0..n {
            let s = add(t.right.get(i, j), t.left.get(j, i));
            if !is_zero(&s) {
                return Some(DiLieFailure { identity: IDENTITY_SYMMETRY, indices: vec![i + 1, j + 1] });
            }
        }
    }
    let l = &t.left;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let a = l.product(&l.product(&x, &y), &z);
                let b = l.product(&x, &l.product(&y, &z));
                let c = l.product(&l.product(&x, &z), &y);
                if !is_zero(&sub(&sub(&a, &b), &c)) {
                    return Some(DiLieFailure { identity: IDENTITY_LEIBNIZ, indices: vec![i + 1, j + 1, k + 1] });
                }
            }
        }
    }
    None
}

/// Which Perm basis element the bracket is tensored with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermSlot {
    E1,
    E2,
}

/// A term `c · (word in x, y) ⊗ e_k^(2)`, optionally acted on by `(12)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct HadamardTerm {
    coef: i64,
    /// `true` for `xy`, `false` for `yx`.
    straight: bool,
    slot: PermSlot,
    swapped: bool,
}

impl HadamardTerm {
    fn show(&self) -> String {
        let w = if self.straight { "xy" } else { "yx" };
        let e = if self.slot == PermSlot::E1 { "e1^(2)" } else { "e2^(2)" };
        let body = format!("{w} (x) {e}");
        if self.swapped {
            format!("({body})^(12)")
        } else {
            body
        }
    }

    /// `xy ⊗ e1 ↦ x -| y`, `xy ⊗ e2 ↦ x |- y`; acting by (12) swaps the arguments.
    fn product(&self) -> String {
        assert!(self.straight);
        let op = if self.slot == PermSlot::E1 { "-|" } else { "|-" };
        if self.swapped {
            format!("y {op} x")
        } else {
            format!("x {op} y")
        }
    }
}

fn show_sum(terms: &[HadamardTerm], f: impl Fn(&HadamardTerm) -> String) -> String {
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let sign = if t.coef < 0 { "-" } else { "+" };
        if k == 0 {
            if t.coef < 0 {
                s.push_str("- ");
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        s.push_str(&f(t));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizDerivation {
    pub steps: Vec<String>,
    pub identity: String,
    /// The identity holds in the dialgebra `M_2(Q) ⊗ P` for all pairs of
    /// elementary tensors.
    pub verified: bool,
}

/// Expands `[x,y] ⊗ e_k^(2)`, rewrites the reversed term through the
/// `S_2`-action and reads off the Leibniz product in terms of `⊣` and `⊢`.
pub fn derive_leibniz_product(slot: PermSlot) -> LeibnizDerivation {
    let other = if slot == PermSlot::E1 { PermSlot::E2 } else { PermSlot::E1 };
    let start = format!("[x,y] (x) {}", if slot == PermSlot::E1 { "e1^(2)" } else { "e2^(2)" });
    let expanded = vec![
        HadamardTerm { coef: 1, straight: true, slot, swapped: false },
        HadamardTerm { coef: -1, straight: false, slot, swapped: false },
    ];
    // (12) acts diagonally: yx ⊗ e_k = (xy ⊗ e_{3-k})^(12).
    let rewritten: Vec<HadamardTerm> = expanded
        .iter()
        .map(|t| {
            if t.straight {
                t.clone()
            } else {
                HadamardTerm { coef: t.coef, straight: true, slot: other, swapped: true }
            }
        })
        .collect();
    let lhs = if slot == PermSlot::E1 { "[x -| y]" } else { "[x |- y]" };
    let identity = format!("{lhs} = {}", show_sum(&rewritten, HadamardTerm::product));
    let steps = vec![
        format!("{start} = {}", show_sum(&expanded, HadamardTerm::show)),
        format!("{start} = {}", show_sum(&rewritten, HadamardTerm::show)),
        identity.clone(),
    ];
    let verified = verify_in_matrix_dialgebra(slot, &rewritten);
    LeibnizDerivation { steps, identity, verified }
}

/// Evaluates both sides in `M_2 ⊗ P_2` with `(a⊗p) ⊣ (b⊗q) = ab ⊗ qp`,
/// `(a⊗p) ⊢ (b⊗q) = ab ⊗ pq`, and the bracket from the Hadamard product.
fn verify_in_matrix_dialgebra(slot: PermSlot, rhs: &[HadamardTerm]) -> bool {
    type M = [[i64; 2]; 2];
    let mul = |a: &M, b: &M| -> M {
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    };
    let elementary: Vec<M> = (0..4)
        .map(|k| {
            let mut m = [[0; 2]; 2];
            m[k / 2][k % 2] = 1;
            m
        })
        .collect();
    // Tensors stored as map (perm index) -> matrix; the Perm product keeps the right factor.
    for a in &elementary {
        for b in &elementary {
            for p in 0..2usize {
                for q in 0..2usize {
                    let ab = mul(a, b);
                    let ba = mul(b, a);
                    let comm: M = [[ab[0][0] - ba[0][0], ab[0][1] - ba[0][1]], [ab[1][0] - ba[1][0], ab[1][1] - ba[1][1]]];
                    // [x ⊣ y] = [a,b] ⊗ qp = [a,b] ⊗ p ; [x ⊢ y] = [a,b] ⊗ pq = [a,b] ⊗ q.
                    let lhs = (comm, if slot == PermSlot::E1 { p } else { q });
                    let mut acc: Vec<(M, usize)> = Vec::new();
                    for t in rhs {
                        // x -| y = ab ⊗ p, x |- y = ab ⊗ q, y -| x = ba ⊗ q, y |- x = ba ⊗ p.
                        let (m, perm) = match (t.slot, t.swapped) {
                            (PermSlot::E1, false) => (ab, p),
                            (PermSlot::E2, false) => (ab, q),
                            (PermSlot::E1, true) => (ba, q),
                            (PermSlot::E2, true) => (ba, p),
                        };
                        let scaled = m.map(|r| r.map(|x| x * t.coef));
                        acc.push((scaled, perm));
                    }
                    let mut total = [[[0i64; 2]; 2]; 2];
                    for (m, perm) in acc {
                        for i in 0..2 {
                            for j in 0..2 {
                                total[perm][i][j] += m[i][j];
                            }
                        }
                    }
                    let mut expect = [[[0i64; 2]; 2]; 2];
                    expect[lhs.1] = lhs.0;
                    if total != expect {
                        return false;
                    }
                }
            }
        }
    }
    true
}
