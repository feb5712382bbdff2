//! Replication of Lie relations into Leibniz (di-Lie) relations.
//!
//! The doubled alphabet `X ∪ Ẋ` stores the undotted letters at ranks
//! `0..n` and their dotted copies at `n..2n` in the same relative order, so
//! every dotted letter exceeds every undotted one.

use crate::error::{Error, Result};
use crate::freealg::{Polynomial, Rational};
use crate::gsb::{inter_reduce, RewriteSystem};
use crate::linalg::Echelon;
use crate::table::{apply_map, is_zero, sub, DiTable, Table, Vector};
use crate::words::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledAlphabet {
    base: Alphabet,
    full: Alphabet,
}

impl DoubledAlphabet {
    pub fn new(base: Alphabet) -> Result<Self> {
        if base.letters().iter().any(|l| l.dotted) {
            return Err(Error::MalformedRelation("base alphabet already contains dotted letters".into()));
        }
        let full = base.doubled()?;
        Ok(DoubledAlphabet { base, full })
    }

    pub fn base(&self) -> &Alphabet {
        &self.base
    }

    pub fn full(&self) -> &Alphabet {
        &self.full
    }

    /// Number of undotted letters.
    pub fn size(&self) -> usize {
        self.base.len()
    }

    pub fn dotted(&self, i: u16) -> u16 {
        i + self.size() as u16
    }

    pub fn is_dotted(&self, r: u16) -> bool {
        r as usize >= self.size()
    }

    /// Letterwise un-dotting.
    pub fn phi(&self, f: &Polynomial) -> Polynomial {
        let n = self.size() as u16;
        f.map_letters(|r| if r >= n { r - n } else { r })
    }

    /// Number of dotted letters in `w`.
    pub fn dotted_degree(&self, w: &Word) -> usize {
        w.0.iter().filter(|&&r| self.is_dotted(r)).count()
    }

    /// True iff every monomial of `f` contains a dotted letter.
    pub fn in_v(&self, f: &Polynomial) -> bool {
        f.words().all(|w| self.dotted_degree(w) > 0)
    }

    /// Lie form of the di-products: `f ⊣ g = [f, φ(g)]`, `f ⊢ g = [φ(f), g]`.
    pub fn di_product(&self, op: DiOp, f: &Polynomial, g: &Polynomial) -> Polynomial {
        match op {
            DiOp::Left => f.bracket(&self.phi(g)),
            DiOp::Right => self.phi(f).bracket(g),
        }
    }

    /// Concatenation form: `f ⊣ g = f φ(g)`, `f ⊢ g = φ(f) g`.
    pub fn di_product_assoc(&self, op: DiOp, f: &Polynomial, g: &Polynomial) -> Polynomial {
        match op {
            DiOp::Left => f.concat_mul(&self.phi(g)),
            DiOp::Right => self.phi(f).concat_mul(g),
        }
    }

    /// Image of a di-expression: the generator every dash points to is dotted.
    pub fn translate(&self, e: &DiExpr) -> Result<Polynomial> {
        match e {
            DiExpr::Gen(i) => {
                if *i as usize >= self.size() {
                    return Err(Error::AlphabetMismatch { index: *i as usize, size: self.size() });
                }
                Ok(Polynomial::letter(self.dotted(*i)))
            }
            DiExpr::Di(op, l, r) => Ok(self.di_product(*op, &self.translate(l)?, &self.translate(r)?)),
            DiExpr::Lie(..) => Err(Error::MalformedRelation(
                "a plain bracket inside a di-expression has no selected variable".into(),
            )),
        }
    }

    pub fn translate_relation(&self, terms: &[(Rational, DiExpr)]) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (c, e) in terms {
            out.add_scaled(&self.translate(e)?, c);
        }
        Ok(out)
    }

    /// Seeds the rewriting system `S ∪ φ(S)` over the doubled alphabet.
    /// Labels are `s{i}` and `phi(s{i})`.
    pub fn replicate_system(&self, s: &[Polynomial]) -> Result<RewriteSystem> {
        let mut polys = Vec::new();
        for (i, f) in s.iter().enumerate() {
            if !self.in_v(f) {
                return Err(Error::NotInV(f.format(&self.full)));
            }
            polys.push((f.clone(), vec![format!("s{i}")]));
            polys.push((self.phi(f), vec![format!("phi(s{i})")]));
        }
        inter_reduce(self.full.clone(), polys)
    }

    /// Compares the ideal generated by `S ∪ φ(S)` intersected with `V` against
    /// the closure of `S` under di-products and brackets with dotted letters,
    /// degree by degree up to `max_degree`. Also compares the part with exactly
    /// one dotted letter against the closure under di-products alone (the
    /// di-ideal of the free Leibniz algebra). `S` must be homogeneous.
    pub fn ideal_transfer(&self, s: &[Polynomial], max_degree: usize) -> Result<TransferCheck> {
        for f in s {
            if !self.in_v(f) {
                return Err(Error::NotInV(f.format(&self.full)));
            }
            let degs: std::collections::BTreeSet<usize> = f.words().map(Word::len).collect();
            if degs.len() > 1 {
                return Err(Error::MalformedRelation(format!("{} is not homogeneous", f.format(&self.full))));
            }
        }
        let lie_gens: Vec<Polynomial> =
            s.iter().flat_map(|f| [f.clone(), self.phi(f)]).collect();
        let ((ideal, v_closure), di_closure) = rayon::join(
            || rayon::join(|| self.lie_closure(&lie_gens, max_degree), || self.v_closure(s, max_degree, true)),
            || self.v_closure(s, max_degree, false),
        );
        let mut degrees = Vec::new();
        for d in 1..=max_degree {
            let rows: Vec<&Polynomial> = ideal[d].rows().collect();
            let dim_v = rows.len() - projected_rank(&rows, |w| self.dotted_degree(w) == 0);
            let dim_v1 = rows.len() - projected_rank(&rows, |w| self.dotted_degree(w) != 1);
            let contained = v_closure[d].rows().all(|p| ideal[d].contains(p))
                && di_closure[d].rows().all(|p| ideal[d].contains(p));
            degrees.push(TransferDegree {
                degree: d,
                ideal_in_v: dim_v,
                closure: v_closure[d].rank(),
                ideal_in_v1: dim_v1,
                di_closure: di_closure[d].rank(),
                contained,
            });
        }
        Ok(TransferCheck { degrees })
    }

    fn lie_closure(&self, gens: &[Polynomial], max_degree: usize) -> Vec<Echelon> {
        let letters: Vec<Polynomial> = (0..self.full.len() as u16).map(Polynomial::letter).collect();
        graded_closure(gens, max_degree, |p| letters.iter().map(|x| p.bracket(x)).collect())
    }

    fn v_closure(&self, gens: &[Polynomial], max_degree: usize, with_lie: bool) -> Vec<Echelon> {
        let dotted: Vec<Polynomial> =
            (0..self.size() as u16).map(|i| Polynomial::letter(self.dotted(i))).collect();
        graded_closure(gens, max_degree, |p| {
            let mut out = Vec::new();
            for x in &dotted {
                for op in [DiOp::Left, DiOp::Right] {
                    out.push(self.di_product(op, x, p));
                    out.push(self.di_product(op, p, x));
                }
                if with_lie {
                    out.push(p.bracket(x));
                }
            }
            out
        })
    }
}

/// Per-degree spans of the closure of homogeneous `gens` under `step`,
/// indexed by degree (entry 0 unused).
fn graded_closure(
    gens: &[Polynomial],
    max_degree: usize,
    step: impl Fn(&Polynomial) -> Vec<Polynomial>,
) -> Vec<Echelon> {
    let mut levels = vec![Echelon::new(); max_degree + 1];
    for g in gens {
        let d = g.degree();
        if d >= 1 && d <= max_degree {
            levels[d].insert(g);
        }
    }
    for d in 1..max_degree {
        let rows: Vec<Polynomial> = levels[d].rows().cloned().collect();
        for p in rows {
            for q in step(&p) {
                levels[d + 1].insert(&q);
            }
        }
    }
    levels
}

fn projected_rank(rows: &[&Polynomial], keep: impl Fn(&Word) -> bool) -> usize {
    let mut e = Echelon::new();
    for p in rows {
        let q = Polynomial::from_terms(p.terms().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())));
        e.insert(&q);
    }
    e.rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferDegree {
    pub degree: usize,
    pub ideal_in_v: usize,
    pub closure: usize,
    pub ideal_in_v1: usize,
    pub di_closure: usize,
    pub contained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferCheck {
    pub degrees: Vec<TransferDegree>,
}

impl TransferCheck {
    pub fn holds(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.contained && d.ideal_in_v == d.closure && d.ideal_in_v1 == d.di_closure)
    }
}

/// `⊣` (`Left`) or `⊢` (`Right`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiOp {
    Left,
    Right,
}

impl DiOp {
    pub fn symbol(self) -> &'static str {
        match self {
            DiOp::Left => "-|",
            DiOp::Right => "|-",
        }
    }
}

/// A binary expression over undotted generators (base ranks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiExpr {
    Gen(u16),
    Di(DiOp, Box<DiExpr>, Box<DiExpr>),
    /// A plain bracket; rejected by translation.
    Lie(Box<DiExpr>, Box<DiExpr>),
}

impl DiExpr {
    pub fn di(op: DiOp, l: DiExpr, r: DiExpr) -> Self {
        DiExpr::Di(op, Box::new(l), Box::new(r))
    }

    /// The left-normed monomial `[⋯[x_{i1} ⊣ x_{i2}] ⊣ ⋯ ⊣ x_{in}]`.
    pub fn left_normed(indices: &[u16]) -> Self {
        let mut e = DiExpr::Gen(indices[0]);
        for &i in &indices[1..] {
            e = DiExpr::di(DiOp::Left, e, DiExpr::Gen(i));
        }
        e
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            DiExpr::Gen(i) => alphabet.letter(*i).token(),
            DiExpr::Di(op, l, r) => format!("[{} {} {}]", l.format(alphabet), op.symbol(), r.format(alphabet)),
            DiExpr::Lie(l, r) => format!("[{},{}]", l.format(alphabet), r.format(alphabet)),
        }
    }
}

/// Left-normed basis words of the free Leibniz algebra on `n` generators up
/// to `max_degree`, as index sequences: degree first, then lexicographic.
pub fn dilie_basis(n: usize, max_degree: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<u16>> = vec![Vec::new()];
    for _ in 0..max_degree {
        level = level
            .iter()
            .flat_map(|w| (0..n as u16).map(move |i| {
                let mut v = w.clone();
                v.push(i);
                v
            }))
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// `[⋯[[ẋ_{i1} x_{i2}] x_{i3}] ⋯ x_{in}]` in `Lie⟨X ∪ Ẋ⟩`.
pub fn expand_dilie_word(alphabet: &DoubledAlphabet, indices: &[u16]) -> Polynomial {
    let mut p = Polynomial::letter(alphabet.dotted(indices[0]));
    for &i in &indices[1..] {
        p = p.bracket(&Polynomial::letter(i));
    }
    p
}

/// Checks `[ta, tb] = t[ta, b] = t[a, tb]` on all basis pairs; `t` is given
/// by the images of the basis vectors.
pub fn is_averaging(table: &Table, t: &[Vector]) -> Result<bool> {
    check_operator(table, t)?;
    Ok(averaging_failure(table, t).is_none())
}

fn check_operator(table: &Table, t: &[Vector]) -> Result<()> {
    let n = table.dim();
    if t.len() != n || t.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!("operator is not {n}x{n}")));
    }
    Ok(())
}

fn averaging_failure(table: &Table, t: &[Vector]) -> Option<(usize, usize)> {
    let n = table.dim();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (table.unit(i), table.unit(j));
            let (ta, tb) = (apply_map(t, &a), apply_map(t, &b));
            let lhs = table.product(&ta, &tb);
            let m1 = apply_map(t, &table.product(&ta, &b));
            let m2 = apply_map(t, &table.product(&a, &tb));
            if !is_zero(&sub(&lhs, &m1)) || !is_zero(&sub(&lhs, &m2)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// The di-algebra `A^(t)`: `a ⊣ b = [a, tb]`, `a ⊢ b = [ta, b]`.
pub fn averaged_dialgebra(table: &Table, t: &[Vector]) -> Result<DiTable> {
    check_operator(table, t)?;
    if let Some((i, j)) = averaging_failure(table, t) {
        return Err(Error::NotAveraging(format!("identity fails on basis pair ({}, {})", i + 1, j + 1)));
    }
    let n = table.dim();
    let mut out = DiTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (table.unit(i), table.unit(j));
            out.left.set(i, j, table.product(&a, &apply_map(t, &b)));
            out.right.set(i, j, table.product(&apply_map(t, &a), &b));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::int;
    use crate::linalg::unit;

    fn xy() -> DoubledAlphabet {
        DoubledAlphabet::new(Alphabet::descending(&["x", "y"]).unwrap()).unwrap()
    }

    // ranks: y=0, x=1, y'=2, x'=3
    const Y: u16 = 0;
    const X: u16 = 1;

    fn l(r: u16) -> Polynomial {
        Polynomial::letter(r)
    }

    #[test]
    fn phi_examples() {
        let a = xy();
        assert_eq!(a.phi(&l(a.dotted(X))), l(X));
        let f = l(a.dotted(X)).concat_mul(&l(Y)) - l(Y).concat_mul(&l(a.dotted(X)));
        assert_eq!(a.phi(&f), l(X).concat_mul(&l(Y)) - l(Y).concat_mul(&l(X)));
        assert_eq!(a.phi(&a.phi(&f)), a.phi(&f));
    }

    #[test]
    fn di_product_examples() {
        let a = xy();
        let (dx, dy) = (l(a.dotted(X)), l(a.dotted(Y)));
        assert_eq!(a.di_product(DiOp::Left, &dx, &dy), dx.bracket(&l(Y)));
        assert_eq!(a.di_product(DiOp::Right, &dx, &dy), l(X).bracket(&dy));
    }

    #[test]
    fn translation_examples() {
        let a = xy();
        let e = DiExpr::di(DiOp::Left, DiExpr::Gen(X), DiExpr::Gen(Y));
        assert_eq!(a.translate(&e).unwrap(), l(a.dotted(X)).bracket(&l(Y)));
        let e2 = DiExpr::di(DiOp::Left, e.clone(), DiExpr::Gen(X));
        assert_eq!(a.translate(&e2).unwrap(), l(a.dotted(X)).bracket(&l(Y)).bracket(&l(X)));
        // [x |- y] + [y -| x] = 0 identically.
        let r = vec![
            (int(1), DiExpr::di(DiOp::Right, DiExpr::Gen(X), DiExpr::Gen(Y))),
            (int(1), DiExpr::di(DiOp::Left, DiExpr::Gen(Y), DiExpr::Gen(X))),
        ];
        assert!(a.translate_relation(&r).unwrap().is_zero());
        let bad = DiExpr::Lie(Box::new(DiExpr::Gen(X)), Box::new(DiExpr::Gen(Y)));
        assert!(matches!(a.translate(&bad), Err(Error::MalformedRelation(_))));
    }

    #[test]
    fn v_membership() {
        let a = xy();
        let f = l(a.dotted(X)).bracket(&l(Y));
        assert!(a.in_v(&f));
        assert!(!a.in_v(&l(X).concat_mul(&l(Y))));
    }

    #[test]
    fn replicate_examples() {
        let a = xy();
        assert!(a.replicate_system(&[]).unwrap().is_empty());
        // [x' y] - y'  and its image [x y] - y
        let f = l(a.dotted(X)).bracket(&l(Y)) - l(a.dotted(Y));
        let s = a.replicate_system(std::slice::from_ref(&f)).unwrap();
        assert_eq!(s.len(), 2);
        let phi = l(X).bracket(&l(Y)) - l(Y);
        assert!(s.member(&f));
        assert!(s.member(&phi));
        assert!(matches!(a.replicate_system(&[phi]), Err(Error::NotInV(_))));
    }

    #[test]
    fn dilie_basis_examples() {
        assert_eq!(dilie_basis(1, 3), vec![vec![0], vec![0, 0], vec![0, 0, 0]]);
        let two: Vec<_> = dilie_basis(2, 2).into_iter().filter(|w| w.len() == 2).collect();
        assert_eq!(two.len(), 4);
    }

    #[test]
    fn averaging_examples() {
        // [e, f] = f
        let mut t = Table::zero(2);
        t.set(0, 1, vec![int(0), int(1)]);
        t.set(1, 0, vec![int(0), int(-1)]);
        let id = vec![unit(2, 0), unit(2, 1)];
        assert!(is_averaging(&t, &id).unwrap());
        let d = averaged_dialgebra(&t, &id).unwrap();
        assert_eq!(d.left, t);
        assert_eq!(d.right, t);
        // t(e) = 0, t(f) = f: [te, tf] = 0 but t[e, tf] = f.
        let p = vec![vec![int(0), int(0)], unit(2, 1)];
        assert!(!is_averaging(&t, &p).unwrap());
        assert!(matches!(averaged_dialgebra(&t, &p), Err(Error::NotAveraging(_))));
        assert!(matches!(is_averaging(&t, &id[..1]), Err(Error::DimensionMismatch(_))));
        let abelian = Table::zero(2);
        assert!(is_averaging(&abelian, &p).unwrap());
    }
}
