//! Presentation files and relation expressions.
//!
//! Files are line oriented; `#` starts a comment. Each nonblank line is
//! `keyword: body` with one of the keywords `alphabet`, `kind`, `table`,
//! `subalgebra`, `derivation NAME`, `antiderivation NAME`, `relation`.

use std::collections::BTreeMap;
use std::fmt;

use leibniz_gsb::freealg::{format_rational, Polynomial, Rational};
use leibniz_gsb::replication::{DiExpr, DiOp, DoubledAlphabet};
use leibniz_gsb::table::{Table, Vector};
use leibniz_gsb::words::{Alphabet, Letter};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: undeclared name `{name}`")]
    Undeclared { line: usize, col: usize, name: String },
    #[error("{line}:{col}: duplicate table entry {entry}")]
    DuplicateEntry { line: usize, col: usize, entry: String },
}

fn syntax<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax { line, col, msg: msg.into() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Lie,
    Leibniz,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Lie => "lie",
            Kind::Leibniz => "leibniz",
        }
    }
}

/// Images of the subalgebra generators under a linear map, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub name: String,
    /// `(generator index, image)`.
    pub values: Vec<(usize, Vector)>,
}

impl LinearMap {
    /// Images aligned with the generators; missing ones are zero.
    pub fn images(&self, gens: usize, dim: usize) -> Vec<Vector> {
        let mut out = vec![vec![Rational::zero(); dim]; gens];
        for (g, v) in &self.values {
            out[*g] = v.clone();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// A Lie polynomial over the declared alphabet.
    Lie(Polynomial),
    /// A combination of di-products over the undotted letters.
    Di(Vec<(Rational, DiExpr)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationFile {
    /// Declared letters, largest first.
    pub letters: Vec<Letter>,
    pub kind: Option<Kind>,
    /// Products of undotted letters, indexed by position among them.
    pub table: BTreeMap<(usize, usize), Vector>,
    pub subalgebra: Vec<Vector>,
    pub derivation: Option<LinearMap>,
    pub antiderivation: Option<LinearMap>,
    pub relations: Vec<Relation>,
}

impl PresentationFile {
    /// The declared alphabet; ranks run opposite to declaration order.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::ascending(self.letters.iter().rev().cloned().collect()).expect("letters are distinct")
    }

    /// Undotted letters in declaration order: the basis of the table.
    pub fn plain_names(&self) -> Vec<String> {
        self.letters.iter().filter(|l| !l.dotted).map(|l| l.id.clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.plain_names().len()
    }

    pub fn base_alphabet(&self) -> Alphabet {
        Alphabet::descending(&self.plain_names()).expect("letters are distinct")
    }

    pub fn doubled(&self) -> DoubledAlphabet {
        DoubledAlphabet::new(self.base_alphabet()).expect("undotted base")
    }

    /// Structure constants; omitted products are zero.
    pub fn structure(&self) -> Table {
        let mut t = Table::zero(self.dim());
        for ((i, j), v) in &self.table {
            t.set(*i, *j, v.clone());
        }
        t
    }

    pub fn has_di_relations(&self) -> bool {
        self.relations.iter().any(|r| matches!(r, Relation::Di(_)))
    }

    pub fn format_vector(&self, v: &[Rational]) -> String {
        let names = self.plain_names();
        let terms: Vec<(Rational, String)> =
            v.iter().zip(&names).filter(|(c, _)| !c.is_zero()).map(|(c, n)| (c.clone(), n.clone())).collect();
        format_sum(&terms)
    }

    /// Text that parses back to an identical structure.
    pub fn print(&self) -> String {
        let mut s = String::new();
        let order: Vec<String> = self.letters.iter().map(Letter::token).collect();
        s.push_str(&format!("alphabet: {}\n", order.join(" > ")));
        if let Some(k) = self.kind {
            s.push_str(&format!("kind: {}\n", k.name()));
        }
        let names = self.plain_names();
        for ((i, j), v) in &self.table {
            s.push_str(&format!("table: [{},{}] = {}\n", names[*i], names[*j], self.format_vector(v)));
        }
        if !self.subalgebra.is_empty() {
            let gens: Vec<String> = self.subalgebra.iter().map(|g| self.format_vector(g)).collect();
            s.push_str(&format!("subalgebra: {}\n", gens.join(", ")));
        }
        for (keyword, map) in [("derivation", &self.derivation), ("antiderivation", &self.antiderivation)] {
            if let Some(m) = map {
                for (g, v) in &m.values {
                    s.push_str(&format!(
                        "{keyword} {0}: {0}({1}) = {2}\n",
                        m.name,
                        self.format_vector(&self.subalgebra[*g]),
                        self.format_vector(v)
                    ));
                }
            }
        }
        let alphabet = self.alphabet();
        let base = self.base_alphabet();
        for r in &self.relations {
            let body = match r {
                Relation::Lie(p) => p.format_lie(&alphabet).expect("parsed relations are Lie elements"),
                Relation::Di(terms) => {
                    format_sum(&terms.iter().map(|(c, e)| (c.clone(), e.format(&base))).collect::<Vec<_>>())
                }
            };
            s.push_str(&format!("relation: {body}\n"));
        }
        s
    }
}

/// `c1*a - c2*b + ...`, with `0` for the empty sum.
pub fn format_sum(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, body)) in terms.iter().enumerate() {
        let neg = c < &Rational::zero();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = if neg { -c.clone() } else { c.clone() };
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push('*');
        }
        out.push_str(body);
    }
    out
}

// ---- lexer ----

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String, bool),
    Num(BigInt),
    Slash,
    Star,
    Plus,
    Minus,
    LBr,
    RBr,
    LPar,
    RPar,
    Comma,
    DiLeft,
    DiRight,
    Eq,
    Gt,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
}

fn lex(chars: &[char], line: usize, col0: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let dotted = i < chars.len() && chars[i] == '\'';
            if dotted {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(name, dotted), col });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Num(digits.parse().expect("ascii digits")), col });
            continue;
        }
        let next = chars.get(i + 1).copied();
        let (tok, width) = match (c, next) {
            ('-', Some('|')) => (Tok::DiLeft, 2),
            ('|', Some('-')) => (Tok::DiRight, 2),
            ('/', _) => (Tok::Slash, 1),
            ('*', _) => (Tok::Star, 1),
            ('+', _) => (Tok::Plus, 1),
            ('-', _) => (Tok::Minus, 1),
            ('[', _) => (Tok::LBr, 1),
            (']', _) => (Tok::RBr, 1),
            ('(', _) => (Tok::LPar, 1),
            (')', _) => (Tok::RPar, 1),
            (',', _) => (Tok::Comma, 1),
            ('=', _) => (Tok::Eq, 1),
            ('>', _) => (Tok::Gt, 1),
            _ => return syntax(line, col, format!("unexpected character `{c}`")),
        };
        out.push(Token { tok, col });
        i += width;
    }
    Ok(out)
}

// ---- expressions ----

/// A parsed linear combination; empty means zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sum(pub Vec<(Rational, Atom)>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Letter { name: String, dotted: bool, col: usize },
    Group(Sum),
    Bracket(Box<Sum>, Box<Sum>),
    Di(DiOp, Box<Sum>, Box<Sum>),
}

impl Sum {
    fn has_di(&self) -> bool {
        self.0.iter().any(|(_, a)| match a {
            Atom::Letter { .. } => false,
            Atom::Group(s) => s.has_di(),
            Atom::Bracket(l, r) => l.has_di() || r.has_di(),
            Atom::Di(..) => true,
        })
    }
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [Token], line: usize, end_col: usize) -> Self {
        Parser { toks, pos: 0, line, end_col }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        syntax(self.line, self.col(), msg)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            self.fail("unexpected trailing input")
        }
    }

    fn ident(&mut self) -> Result<(String, bool, usize), ParseError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Ident(n, d), col }) => {
                self.pos += 1;
                Ok((n.clone(), *d, *col))
            }
            _ => self.fail("expected a name"),
        }
    }

    fn sum(&mut self) -> Result<Sum, ParseError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            if let Some((c, atom)) = self.term()? {
                terms.push((if negative { -c } else { c }, atom));
            }
        }
        Ok(Sum(terms))
    }

    /// `c*atom`, `atom`, or the constant `0` (returned as `None`).
    fn term(&mut self) -> Result<Option<(Rational, Atom)>, ParseError> {
        if let Some(Tok::Num(n)) = self.peek().cloned() {
            let col = self.col();
            self.pos += 1;
            let mut c = Rational::from_integer(n);
            if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                match self.peek().cloned() {
                    Some(Tok::Num(d)) if !d.is_zero() => {
                        self.pos += 1;
                        c /= Rational::from_integer(d);
                    }
                    _ => return self.fail("expected a nonzero denominator"),
                }
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                return Ok(Some((c, self.atom()?)));
            }
            if c.is_zero() {
                return Ok(None);
            }
            return syntax(self.line, col, "constant terms other than 0 are not allowed");
        }
        Ok(Some((Rational::one(), self.atom()?)))
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.peek() {
            Some(Tok::Ident(..)) => {
                let (name, dotted, col) = self.ident()?;
                Ok(Atom::Letter { name, dotted, col })
            }
            Some(Tok::LPar) => {
                self.pos += 1;
                let s = self.sum()?;
                self.expect(Tok::RPar, "`)`")?;
                Ok(Atom::Group(s))
            }
            Some(Tok::LBr) => {
                self.pos += 1;
                let l = self.sum()?;
                let op = match self.peek() {
                    Some(Tok::Comma) => None,
                    Some(Tok::DiLeft) => Some(DiOp::Left),
                    Some(Tok::DiRight) => Some(DiOp::Right),
                    _ => return self.fail("expected `,`, `-|` or `|-`"),
                };
                self.pos += 1;
                let r = self.sum()?;
                self.expect(Tok::RBr, "`]`")?;
                Ok(match op {
                    None => Atom::Bracket(Box::new(l), Box::new(r)),
                    Some(op) => Atom::Di(op, Box::new(l), Box::new(r)),
                })
            }
            _ => self.fail("expected a letter, `[` or `(`"),
        }
    }
}

/// Parses one expression in the surface syntax (no evaluation).
pub fn parse_sum(text: &str) -> Result<Sum, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let toks = lex(&chars, 1, 0)?;
    let mut p = Parser::new(&toks, 1, chars.len() + 1);
    let s = p.sum()?;
    p.finish()?;
    Ok(s)
}

/// An evaluated expression: a Lie polynomial or a di-expression combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluated {
    Lie(Polynomial),
    Di(Vec<(Rational, DiExpr)>),
}

/// Parses and evaluates `text`. Lie expressions resolve letters in
/// `alphabet` (dotted letters included); di-expressions resolve undotted
/// letters in `base`.
pub fn parse_expression(text: &str, alphabet: &Alphabet, base: &Alphabet) -> Result<Evaluated, ParseError> {
    let s = parse_sum(text)?;
    evaluate(&s, 1, alphabet, base)
}

fn evaluate(s: &Sum, line: usize, alphabet: &Alphabet, base: &Alphabet) -> Result<Evaluated, ParseError> {
    if s.has_di() {
        Ok(Evaluated::Di(eval_di(s, line, base)?))
    } else {
        Ok(Evaluated::Lie(eval_lie(s, line, alphabet)?))
    }
}

fn undeclared<T>(line: usize, col: usize, name: &str, dotted: bool) -> Result<T, ParseError> {
    Err(ParseError::Undeclared { line, col, name: Letter { id: name.to_string(), dotted }.token() })
}

fn eval_lie(s: &Sum, line: usize, alphabet: &Alphabet) -> Result<Polynomial, ParseError> {
    let mut out = Polynomial::zero();
    for (c, a) in &s.0 {
        let p = match a {
            Atom::Letter { name, dotted, col } => match alphabet.rank_of(name, *dotted) {
                Some(r) => Polynomial::letter(r),
                None => return undeclared(line, *col, name, *dotted),
            },
            Atom::Group(g) => eval_lie(g, line, alphabet)?,
            Atom::Bracket(l, r) => eval_lie(l, line, alphabet)?.bracket(&eval_lie(r, line, alphabet)?),
            Atom::Di(..) => unreachable!("di atoms are routed to eval_di"),
        };
        out.add_scaled(&p, c);
    }
    Ok(out)
}

/// Expands a di-expression by bilinearity into a combination of trees.
fn eval_di(s: &Sum, line: usize, base: &Alphabet) -> Result<Vec<(Rational, DiExpr)>, ParseError> {
    let mut out = Vec::new();
    for (c, a) in &s.0 {
        let parts = match a {
            Atom::Letter { name, dotted, col } => {
                if *dotted {
                    return syntax(line, *col, "di-expressions take undotted letters");
                }
                match base.rank_of(name, false) {
                    Some(r) => vec![(Rational::one(), DiExpr::Gen(r))],
                    None => return undeclared(line, *col, name, false),
                }
            }
            Atom::Group(g) => eval_di(g, line, base)?,
            Atom::Bracket(..) => {
                return syntax(line, first_col(a), "a plain bracket cannot appear inside a di-expression");
            }
            Atom::Di(op, l, r) => {
                let (l, r) = (eval_di(l, line, base)?, eval_di(r, line, base)?);
                let mut v = Vec::new();
                for (cl, el) in &l {
                    for (cr, er) in &r {
                        v.push((cl * cr, DiExpr::di(*op, el.clone(), er.clone())));
                    }
                }
                v
            }
        };
        out.extend(parts.into_iter().map(|(k, e)| (c * k, e)));
    }
    Ok(out)
}

fn first_col(a: &Atom) -> usize {
    match a {
        Atom::Letter { col, .. } => *col,
        Atom::Group(s) => s.0.first().map_or(0, |(_, a)| first_col(a)),
        Atom::Bracket(s, _) | Atom::Di(_, s, _) => s.0.first().map_or(0, |(_, a)| first_col(a)),
    }
}

/// A linear combination of undotted declared letters as a coordinate vector.
fn eval_vector(s: &Sum, line: usize, names: &[String]) -> Result<Vector, ParseError> {
    let mut v = vec![Rational::zero(); names.len()];
    for (c, a) in &s.0 {
        match a {
            Atom::Letter { name, dotted: false, col } => match names.iter().position(|n| n == name) {
                Some(i) => v[i] += c,
                None => return undeclared(line, *col, name, false),
            },
            Atom::Group(g) => {
                let w = eval_vector(g, line, names)?;
                for (x, y) in v.iter_mut().zip(w) {
                    *x += c * y;
                }
            }
            other => return syntax(line, first_col(other), "expected a linear combination of undotted letters"),
        }
    }
    Ok(v)
}

// ---- files ----

struct Line {
    number: usize,
    keyword: String,
    arg: Option<(String, bool, usize)>,
    body: Vec<Token>,
    end_col: usize,
}

fn split_lines(text: &str) -> Result<Vec<Line>, ParseError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let number = k + 1;
        let chars: Vec<char> = raw.chars().take_while(|&c| c != '#').collect();
        if chars.iter().all(|c| c.is_whitespace()) {
            continue;
        }
        let Some(colon) = chars.iter().position(|&c| c == ':') else {
            let col = chars.iter().position(|c| !c.is_whitespace()).unwrap_or(0) + 1;
            return syntax(number, col, "expected `keyword: ...`");
        };
        let head = lex(&chars[..colon], number, 0)?;
        let body = lex(&chars[colon + 1..], number, colon + 1)?;
        let (keyword, arg) = match head.as_slice() {
            [Token { tok: Tok::Ident(k, false), .. }] => (k.clone(), None),
            [Token { tok: Tok::Ident(k, false), .. }, Token { tok: Tok::Ident(n, d), col }] => {
                (k.clone(), Some((n.clone(), *d, *col)))
            }
            [t, ..] => return syntax(number, t.col, "expected a keyword"),
            [] => return syntax(number, colon + 1, "missing keyword"),
        };
        let takes_arg = matches!(keyword.as_str(), "derivation" | "antiderivation");
        let known = takes_arg
            || matches!(keyword.as_str(), "alphabet" | "kind" | "table" | "subalgebra" | "relation");
        let kw_col = head[0].col;
        if !known {
            return syntax(number, kw_col, format!("unknown keyword `{keyword}`"));
        }
        if takes_arg != arg.is_some() {
            let msg = if takes_arg { format!("`{keyword}` needs a map name") } else { format!("`{keyword}` takes no name") };
            return syntax(number, kw_col, msg);
        }
        out.push(Line { number, keyword, arg, body, end_col: chars.len() + 1 });
    }
    Ok(out)
}

/// Parses a presentation file. Declarations may come in any order.
pub fn parse_presentation(text: &str) -> Result<PresentationFile, ParseError> {
    let lines = split_lines(text)?;
    let mut alphabet_line = None;
    for l in lines.iter().filter(|l| l.keyword == "alphabet") {
        if alphabet_line.is_some() {
            return syntax(l.number, 1, "alphabet declared twice");
        }
        alphabet_line = Some(l);
    }
    let Some(al) = alphabet_line else {
        return syntax(1, 1, "missing `alphabet:` declaration");
    };
    let mut letters: Vec<Letter> = Vec::new();
    {
        let mut p = Parser::new(&al.body, al.number, al.end_col);
        loop {
            let (name, dotted, col) = p.ident()?;
            let l = Letter { id: name, dotted };
            if letters.contains(&l) {
                return syntax(al.number, col, format!("letter `{}` declared twice", l.token()));
            }
            letters.push(l);
            if p.at_end() {
                break;
            }
            p.expect(Tok::Gt, "`>`")?;
        }
    }
    let mut file = PresentationFile {
        letters,
        kind: None,
        table: BTreeMap::new(),
        subalgebra: Vec::new(),
        derivation: None,
        antiderivation: None,
        relations: Vec::new(),
    };
    let names = file.plain_names();
    let alphabet = file.alphabet();
    let base = file.base_alphabet();

    for l in &lines {
        let mut p = Parser::new(&l.body, l.number, l.end_col);
        match l.keyword.as_str() {
            "kind" => {
                if file.kind.is_some() {
                    return syntax(l.number, 1, "kind declared twice");
                }
                let (k, dotted, col) = p.ident()?;
                file.kind = Some(match (k.as_str(), dotted) {
                    ("lie", false) => Kind::Lie,
                    ("leibniz", false) => Kind::Leibniz,
                    _ => return syntax(l.number, col, "kind must be `lie` or `leibniz`"),
                });
                p.finish()?;
            }
            "table" => {
                let lhs_col = p.col();
                let lhs = p.atom()?;
                p.expect(Tok::Eq, "`=`")?;
                let rhs = p.sum()?;
                p.finish()?;
                let (a, b) = match &lhs {
                    Atom::Bracket(a, b) | Atom::Di(DiOp::Left, a, b) => (a, b),
                    _ => return syntax(l.number, lhs_col, "expected `[a,b]` or `[a -| b]`"),
                };
                let i = single_letter(a, l.number, &names)?;
                let j = single_letter(b, l.number, &names)?;
                let v = eval_vector(&rhs, l.number, &names)?;
                if file.table.insert((i, j), v).is_some() {
                    return Err(ParseError::DuplicateEntry {
                        line: l.number,
                        col: lhs_col,
                        entry: format!("[{},{}]", names[i], names[j]),
                    });
                }
            }
            "subalgebra" => loop {
                let s = p.sum()?;
                file.subalgebra.push(eval_vector(&s, l.number, &names)?);
                if p.at_end() {
                    break;
                }
                p.expect(Tok::Comma, "`,`")?;
            },
            "relation" => {
                let s = p.sum()?;
                p.finish()?;
                file.relations.push(match evaluate(&s, l.number, &alphabet, &base)? {
                    Evaluated::Lie(f) => Relation::Lie(f),
                    Evaluated::Di(t) => Relation::Di(t),
                });
            }
            _ => {}
        }
    }
    for l in lines.iter().filter(|l| l.keyword == "derivation" || l.keyword == "antiderivation") {
        let (name, dotted, name_col) = l.arg.clone().expect("checked in split_lines");
        let name = Letter { id: name, dotted }.token();
        let slot = if l.keyword == "derivation" { &mut file.derivation } else { &mut file.antiderivation };
        let map = slot.get_or_insert_with(|| LinearMap { name: name.clone(), values: Vec::new() });
        if map.name != name {
            return syntax(l.number, name_col, format!("{} is already named `{}`", l.keyword, map.name));
        }
        let mut p = Parser::new(&l.body, l.number, l.end_col);
        let (f, fd, fcol) = p.ident()?;
        if (Letter { id: f, dotted: fd }).token() != name {
            return syntax(l.number, fcol, format!("expected `{name}(...)`"));
        }
        p.expect(Tok::LPar, "`(`")?;
        let arg_col = p.col();
        let arg = eval_vector(&p.sum()?, l.number, &names)?;
        p.expect(Tok::RPar, "`)`")?;
        p.expect(Tok::Eq, "`=`")?;
        let value = eval_vector(&p.sum()?, l.number, &names)?;
        p.finish()?;
        let Some(g) = file.subalgebra.iter().position(|s| *s == arg) else {
            return syntax(l.number, arg_col, "argument is not a declared subalgebra generator");
        };
        if map.values.iter().any(|(h, _)| *h == g) {
            return syntax(l.number, arg_col, format!("{name} of this generator given twice"));
        }
        map.values.push((g, value));
    }
    Ok(file)
}

fn single_letter(s: &Sum, line: usize, names: &[String]) -> Result<usize, ParseError> {
    match s.0.as_slice() {
        [(c, Atom::Letter { name, dotted: false, col })] if c.is_one() => match names.iter().position(|n| n == name) {
            Some(i) => Ok(i),
            None => undeclared(line, *col, name, false),
        },
        [(_, a), ..] => syntax(line, first_col(a), "table entries take single undotted letters"),
        [] => syntax(line, 0, "table entries take single undotted letters"),
    }
}

impl fmt::Display for PresentationFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_gsb::freealg::int;
    use leibniz_gsb::words::Word;

    fn ab() -> Alphabet {
        Alphabet::descending(&["b", "a"]).unwrap()
    }

    fn lie(text: &str) -> Polynomial {
        match parse_expression(text, &ab(), &ab()).unwrap() {
            Evaluated::Lie(p) => p,
            Evaluated::Di(_) => panic!("expected a Lie expression"),
        }
    }

    #[test]
    fn brackets_expand() {
        // a = 0, b = 1
        let w = |s: &[u16]| Word::new(s.to_vec());
        let p = lie("[b,a]");
        assert_eq!(p, Polynomial::from_terms([(w(&[1, 0]), int(1)), (w(&[0, 1]), int(-1))]));
        let q = lie("[[b,a],a]");
        let want =
            Polynomial::from_terms([(w(&[1, 0, 0]), int(1)), (w(&[0, 1, 0]), int(-2)), (w(&[0, 0, 1]), int(1))]);
        assert_eq!(q, want);
        assert_eq!(lie("3/2*[b,a] - 1/2*[b,a] + 0"), p);
        assert!(lie("0").is_zero());
    }

    #[test]
    fn di_nodes() {
        let e = parse_expression("[b -| a]", &ab(), &ab()).unwrap();
        assert_eq!(e, Evaluated::Di(vec![(int(1), DiExpr::di(DiOp::Left, DiExpr::Gen(1), DiExpr::Gen(0)))]));
        let e = parse_expression("[b |- (a + 2*b)]", &ab(), &ab()).unwrap();
        let Evaluated::Di(terms) = e else { panic!() };
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[1].0, int(2));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse_expression("[b, a", &ab(), &ab()).unwrap_err();
        assert_eq!(err, ParseError::Syntax { line: 1, col: 6, msg: "expected `]`".into() });
        let err = parse_expression("[b, c]", &ab(), &ab()).unwrap_err();
        assert_eq!(err, ParseError::Undeclared { line: 1, col: 5, name: "c".into() });
        assert!(matches!(parse_expression("2", &ab(), &ab()), Err(ParseError::Syntax { col: 1, .. })));
        assert!(matches!(parse_expression("[[b,a] -| a]", &ab(), &ab()), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn minimal_file() {
        let f = parse_presentation("alphabet: x\n").unwrap();
        assert_eq!(f.dim(), 1);
        assert!(f.structure().is_lie());
        assert!(f.relations.is_empty());
    }
}
