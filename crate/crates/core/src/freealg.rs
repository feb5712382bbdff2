//! Exact-rational polynomials in the free associative algebra, and the free
//! Lie algebra embedded in it through the commutator bracket.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::{is_alsw, standard_bracketing, Alphabet, NlswTree, RelativeBracketing, Side, Word};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` form, or just `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A finite linear combination of words with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn letter(r: u16) -> Self {
        Self::from_word(Word::letter(r))
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in deg-lex descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys().rev()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect() }
    }

    /// Bilinear extension of word concatenation.
    pub fn concat_mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `fg - gf`.
    pub fn bracket(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = a * b;
                out.add_term(u.concat(v), c.clone());
                out.add_term(v.concat(u), -c);
            }
        }
        out
    }

    /// Deg-lex largest word and its coefficient.
    pub fn leading(&self) -> Result<(&Word, &Rational)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        let (_, c) = self.leading()?;
        let inv = c.recip();
        Ok(self.scale(&inv))
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Applies a letter substitution `r -> map(r)` word by word.
    pub fn map_letters(&self, map: impl Fn(u16) -> u16) -> Polynomial {
        Polynomial::from_terms(
            self.terms.iter().map(|(w, c)| (Word(w.0.iter().map(|&r| map(r)).collect()), c.clone())),
        )
    }

    pub fn max_letter(&self) -> Option<u16> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max()
    }

    /// Text form over `alphabet`, e.g. `3/2*b.a - a.b`, terms deg-lex descending.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format_rational(&mag));
                out.push('*');
            }
            out.push_str(&alphabet.format_word_dotted(w));
        }
        out
    }
}

impl Polynomial {
    /// Lie form over `alphabet` as a combination of Lyndon basis brackets,
    /// e.g. `[b,a] - 2*[[b,a],a]`.
    pub fn format_lie(&self, alphabet: &Alphabet) -> Result<String> {
        let terms = to_lyndon_basis(self, Some(alphabet))?;
        if terms.is_empty() {
            return Ok("0".to_string());
        }
        let mut out = String::new();
        for (i, (c, t)) in terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format_rational(&mag));
                out.push('*');
            }
            out.push_str(&alphabet.format_tree(t));
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.add_scaled(rhs, &-Rational::one());
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.concat_mul(rhs)
    }
}

/// Recursive commutator expansion of a bracketing tree.
pub fn expand_nlsw(t: &NlswTree) -> Polynomial {
    match t {
        NlswTree::Leaf(r) => Polynomial::letter(*r),
        NlswTree::Node(l, r) => expand_nlsw(l).bracket(&expand_nlsw(r)),
    }
}

/// Expands `tree` with the subtree at `path` replaced by `inner`.
pub fn expand_relative(tree: &NlswTree, path: &[Side], inner: &Polynomial) -> Polynomial {
    match (path.split_first(), tree) {
        (None, _) => inner.clone(),
        (Some((Side::Left, rest)), NlswTree::Node(l, r)) => {
            expand_relative(l, rest, inner).bracket(&expand_nlsw(r))
        }
        (Some((Side::Right, rest)), NlswTree::Node(l, r)) => {
            expand_nlsw(l).bracket(&expand_relative(r, rest, inner))
        }
        _ => panic!("relative path leaves the tree"),
    }
}

/// Coefficient of `w` when the marked subtree is replaced by its underlying
/// word as a single monomial, provided `w` is then the leading word. Any
/// polynomial with that leading word (coefficient 1) substituted in the hole
/// yields the same leading word and coefficient.
pub fn relative_coefficient(rb: &RelativeBracketing, w: &Word) -> Option<Rational> {
    let v = rb.tree.subtree(&rb.path)?.underlying_word();
    let p = expand_relative(&rb.tree, &rb.path, &Polynomial::from_word(v));
    match p.leading() {
        Ok((lw, c)) if lw == w => Some(c.clone()),
        _ => None,
    }
}

/// Rewrites a Lie element as a combination of standard bracketings of ALSWs,
/// deg-lex descending.
pub fn to_lyndon_basis(f: &Polynomial, alphabet: Option<&Alphabet>) -> Result<Vec<(Rational, NlswTree)>> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    while let Some(w) = rest.leading_word().cloned() {
        if !is_alsw(&w) {
            let shown = match alphabet {
                Some(a) => a.format_word(&w),
                None => format!("{:?}", w.0),
            };
            return Err(Error::NotLieElement(shown));
        }
        let c = rest.coefficient(&w);
        let t = standard_bracketing(&w)?;
        rest.add_scaled(&expand_nlsw(&t), &-c.clone());
        out.push((c, t));
    }
    Ok(out)
}

/// True iff `f` lies in the Lie subspace.
pub fn is_lie(f: &Polynomial) -> bool {
    to_lyndon_basis(f, None).is_ok()
}
