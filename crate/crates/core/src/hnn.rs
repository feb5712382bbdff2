//! HNN-extensions of finite-dimensional Leibniz algebras: input validation,
//! the adapted basis, the replicated presentation over `X ∪ Ẋ ∪ {t, ṫ}`,
//! verification of the Gröbner-Shirshov property, the normal-form basis and
//! the embedding check.
//!
//! Letters of the presentation are ordered `ṫ > Ẋ > t > X`. The undotted
//! letters are the adapted basis of `L`, smallest first: letters spanning
//! `A ∩ H₀`, the rest of `X₀`, the rest of a basis of `A`, then the rest of `L`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::{Polynomial, Rational};
use crate::gsb::{inter_reduce, CompositionKind, CompositionReport, RewriteSystem};
use crate::linalg::{coordinates, extend_within, in_span, intersect, invert, rank, unit};
use crate::replication::DoubledAlphabet;
use crate::table::{add, apply_transpose, is_zero, scale, sub, Table, Vector};
use crate::words::{enumerate_alsw, standard_bracketing, Alphabet, Letter, NlswTree, Word};

/// Name of the stable letter.
pub const STABLE_LETTER: &str = "t";

/// Input data for the HNN construction, in the user's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnnInput {
    /// Basis names, largest letter first.
    pub names: Vec<String>,
    /// `[e_i ⊣ e_j]` in the user basis (index = position in `names`).
    pub table: Table,
    /// Generators of the subalgebra `A`, as user coordinates.
    pub subalgebra: Vec<Vector>,
    /// `d` on each generator.
    pub d: Vec<Vector>,
    /// `d′` on each generator.
    pub d_prime: Vec<Vector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivationKind {
    Derivation,
    AntiDerivation,
}

pub fn check_leibniz(table: &Table) -> bool {
    table.is_leibniz()
}

fn check_independent(gens: &[Vector]) -> Result<()> {
    if rank(gens) < gens.len() {
        return Err(Error::DependentGenerators);
    }
    Ok(())
}

/// Products of generators lie in their span.
pub fn check_subalgebra(table: &Table, gens: &[Vector]) -> Result<bool> {
    check_independent(gens)?;
    for a in gens {
        for b in gens {
            if !in_span(gens, &table.product(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Extends a map given on the generators linearly to `v ∈ span(gens)`.
fn extend_map(gens: &[Vector], values: &[Vector], v: &[Rational], dim: usize) -> Option<Vector> {
    if gens.is_empty() {
        return is_zero(v).then(|| vec![Rational::zero(); dim]);
    }
    let c = coordinates(gens, v)?;
    let mut out = vec![Rational::zero(); dim];
    for (ck, val) in c.iter().zip(values) {
        out = add(&out, &scale(val, ck));
    }
    Some(out)
}

/// The derivation law `d([a⊣b]) = [d(a)⊣b] + [a⊣d(b)]`, or the anti-derivation
/// law `d′([a⊣b]) = [d′(a)⊣b] − [d′(b)⊣a]`, on all generator pairs.
pub fn check_derivation(table: &Table, gens: &[Vector], values: &[Vector], kind: DerivationKind) -> Result<bool> {
    check_independent(gens)?;
    if values.len() != gens.len() || values.iter().any(|v| v.len() != table.dim()) {
        return Err(Error::DimensionMismatch("one value per subalgebra generator is required".into()));
    }
    let n = table.dim();
    for (a, da) in gens.iter().zip(values) {
        for (b, db) in gens.iter().zip(values) {
            let Some(lhs) = extend_map(gens, values, &table.product(a, b), n) else {
                return Ok(false);
            };
            let rhs = match kind {
                DerivationKind::Derivation => add(&table.product(da, b), &table.product(a, db)),
                DerivationKind::AntiDerivation => sub(&table.product(da, b), &table.product(db, a)),
            };
            if !is_zero(&sub(&lhs, &rhs)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Basis of `H₀ = span{[x⊣y] + [y⊣x]}`.
pub fn h0_basis(table: &Table) -> Vec<Vector> {
    let n = table.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            rows.push(add(table.get(i, j), table.get(j, i)));
        }
    }
    crate::linalg::rref(&rows).0
}

/// Conditions on `(d, d′)` under which `[a⊣t] + [t⊣a]` and `[t⊣h]` behave as in a
/// Leibniz algebra: `d(a) + d′(a) ∈ H₀` for every generator and `d′` vanishes
/// on `A ∩ H₀`. Returns a description of the first violation.
pub fn compatibility_failure(input: &HnnInput) -> Option<String> {
    let n = input.table.dim();
    let h0 = h0_basis(&input.table);
    for (k, (d, dp)) in input.d.iter().zip(&input.d_prime).enumerate() {
        let s = add(d, dp);
        if !is_zero(&s) && (h0.is_empty() || !in_span(&h0, &s)) {
            return Some(format!("d(a) + d'(a) is not in H0 for subalgebra generator {}", k + 1));
        }
    }
    for v in intersect(&input.subalgebra, &h0) {
        match extend_map(&input.subalgebra, &input.d_prime, &v, n) {
            Some(w) if is_zero(&w) => {}
            _ => return Some("d' does not vanish on the intersection of A and H0".to_string()),
        }
    }
    None
}

/// Runs every input check, reporting the first failure.
pub fn validate(input: &HnnInput) -> Result<()> {
    let n = input.table.dim();
    if input.names.len() != n {
        return Err(Error::DimensionMismatch(format!("{} names for a {n}-dimensional table", input.names.len())));
    }
    if input.names.iter().any(|s| s == STABLE_LETTER) {
        return Err(Error::InvalidHnnInput(format!("the letter `{STABLE_LETTER}` is reserved for the stable letter")));
    }
    if input.subalgebra.iter().chain(&input.d).chain(&input.d_prime).any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!("vectors must have {n} coordinates")));
    }
    if let Some((i, j, k)) = input.table.leibniz_failure() {
        return Err(Error::InvalidHnnInput(format!(
            "Leibniz identity fails on ({}, {}, {})",
            input.names[i], input.names[j], input.names[k]
        )));
    }
    if !check_subalgebra(&input.table, &input.subalgebra)? {
        return Err(Error::InvalidHnnInput("the subalgebra generators are not closed under the product".into()));
    }
    if !check_derivation(&input.table, &input.subalgebra, &input.d, DerivationKind::Derivation)? {
        return Err(Error::InvalidHnnInput("d violates the derivation law".into()));
    }
    if !check_derivation(&input.table, &input.subalgebra, &input.d_prime, DerivationKind::AntiDerivation)? {
        return Err(Error::InvalidHnnInput("d' violates the anti-derivation law".into()));
    }
    if let Some(msg) = compatibility_failure(input) {
        return Err(Error::InvalidHnnInput(msg));
    }
    Ok(())
}

/// The input rewritten in a basis where `H₀` and `A` are spanned by letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedBasis {
    /// Adapted letters, smallest first; `vectors[r]` in user coordinates.
    pub vectors: Vec<Vector>,
    pub names: Vec<String>,
    /// Ranks of the letters spanning `H₀`.
    pub x0: Vec<u16>,
    /// Ranks of the letters spanning `A`.
    pub a_letters: Vec<u16>,
    pub table: Table,
    /// `d` and `d′` on each `A` letter, in adapted coordinates.
    pub d: Vec<Vector>,
    pub d_prime: Vec<Vector>,
    /// The adapted basis equals the user basis up to order.
    pub is_permutation: bool,
}

impl AdaptedBasis {
    /// Adapted coordinates of a user-coordinate vector.
    pub fn to_adapted(&self, v: &[Rational]) -> Vector {
        let inv = invert(&self.vectors).expect("adapted basis is invertible");
        apply_transpose(&inv, v)
    }
}

fn unit_index(v: &[Rational]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nz[..] {
        [i] if v[i] == Rational::from_integer(1.into()) => Some(i),
        _ => None,
    }
}

/// Computes `H₀`, chooses the adapted basis (unit vectors whenever possible)
/// and rewrites the table, `d` and `d′`. Checks `μ(X, X₀) = 0` and
/// `μ(X₀, X) ⊆ span(X₀)`.
pub fn h0_and_adapt(input: &HnnInput) -> Result<AdaptedBasis> {
    let n = input.table.dim();
    let h0 = h0_basis(&input.table);
    let a_span = &input.subalgebra;
    let a_h0 = intersect(a_span, &h0);
    let everything: Vec<Vector> = (0..n).map(|i| unit(n, i)).collect();
    // User order is largest first, so iterate units from the last declared.
    let units = || (0..n).rev().map(|i| unit(n, i));

    let mut chosen: Vec<Vector> = Vec::new();
    let block = |target: &[Vector], computed: &[Vector], chosen: &mut Vec<Vector>| {
        let mut cands: Vec<Vector> = units().collect();
        cands.extend(computed.iter().cloned());
        extend_within(chosen, target, cands)
    };
    let b1 = block(&a_h0, &a_h0, &mut chosen);
    let b2 = block(&h0, &h0, &mut chosen);
    let b3 = block(a_span, a_span, &mut chosen);
    block(&everything, &everything, &mut chosen);
    debug_assert_eq!(chosen.len(), n);

    let mut used: HashSet<String> = input.names.iter().cloned().collect();
    used.insert(STABLE_LETTER.to_string());
    let mut fresh = 0;
    let mut names = Vec::new();
    for v in &chosen {
        match unit_index(v) {
            Some(i) => names.push(input.names[i].clone()),
            None => loop {
                fresh += 1;
                let name = format!("b{fresh}");
                if used.insert(name.clone()) {
                    names.push(name);
                    break;
                }
            },
        }
    }
    let is_permutation = chosen.iter().all(|v| unit_index(v).is_some());
    let (n1, n2, n3) = (b1.len(), b2.len(), b3.len());
    let x0: Vec<u16> = (0..n1 + n2).map(|r| r as u16).collect();
    let a_letters: Vec<u16> = (0..n1).chain(n1 + n2..n1 + n2 + n3).map(|r| r as u16).collect();

    let table = input.table.change_basis(&chosen)?;
    for r in 0..n {
        for &z in &x0 {
            if !is_zero(table.get(r, z as usize)) {
                return Err(Error::Internal(format!("product with an H0 letter on the right is nonzero ({r}, {z})")));
            }
            let p = table.get(z as usize, r);
            if p.iter().enumerate().any(|(k, c)| !c.is_zero() && !x0.contains(&(k as u16))) {
                return Err(Error::Internal(format!("H0 is not closed under right products ({z}, {r})")));
            }
        }
    }

    let inv = invert(&chosen).ok_or(Error::DependentGenerators)?;
    let mut d = Vec::new();
    let mut d_prime = Vec::new();
    for &r in &a_letters {
        let v = &chosen[r as usize];
        let dv = extend_map(&input.subalgebra, &input.d, v, n)
            .ok_or_else(|| Error::Internal("A letter outside the subalgebra".into()))?;
        let dpv = extend_map(&input.subalgebra, &input.d_prime, v, n)
            .ok_or_else(|| Error::Internal("A letter outside the subalgebra".into()))?;
        d.push(apply_transpose(&inv, &dv));
        d_prime.push(apply_transpose(&inv, &dpv));
    }
    Ok(AdaptedBasis { vectors: chosen, names, x0, a_letters, table, d, d_prime, is_permutation })
}

/// The replicated presentation of the HNN-extension.
#[derive(Debug, Clone)]
pub struct HnnPresentation {
    /// Base letters `X ∪ {t}` (adapted `X` at ranks `0..m`, `t` at `m`) and
    /// their dotted copies.
    pub alphabet: DoubledAlphabet,
    /// The defining relations as listed, before inter-reduction.
    pub seeds: RewriteSystem,
    /// The inter-reduced system used for normal forms.
    pub system: RewriteSystem,
    pub adapted: AdaptedBasis,
    pub input: HnnInput,
}

impl HnnPresentation {
    /// Dimension of `L`.
    pub fn dim(&self) -> usize {
        self.adapted.vectors.len()
    }

    pub fn t(&self) -> u16 {
        self.dim() as u16
    }

    pub fn t_dot(&self) -> u16 {
        self.alphabet.dotted(self.t())
    }

    pub fn x_dot(&self, r: u16) -> u16 {
        self.alphabet.dotted(r)
    }

    /// `Σ v_r x_r` (or with dotted letters) for adapted coordinates `v`.
    pub fn vector_poly(&self, v: &[Rational], dotted: bool) -> Polynomial {
        let mut p = Polynomial::zero();
        for (r, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let letter = if dotted { self.x_dot(r as u16) } else { r as u16 };
                p.add_term(Word::letter(letter), c.clone());
            }
        }
        p
    }

    pub fn x0_letters(&self) -> &[u16] {
        &self.adapted.x0
    }

    /// Reduced presentation in the input grammar: the alphabet line and one
    /// relation per rule.
    pub fn to_text(&self) -> String {
        let full = self.alphabet.full();
        let mut s = format!("alphabet: {}\n", full.describe_order());
        for r in self.system.rules() {
            let lie = r.poly.format_lie(full).expect("rules are Lie polynomials");
            s.push_str(&format!("relation: {lie}\n"));
        }
        s
    }
}

fn seed_rules(ad: &AdaptedBasis, alphabet: &DoubledAlphabet) -> Vec<(Polynomial, Vec<String>)> {
    let m = ad.vectors.len();
    let t = m as u16;
    let letter = Polynomial::letter;
    let vec_poly = |v: &[Rational], dotted: bool| {
        let mut p = Polynomial::zero();
        for (r, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let l = if dotted { alphabet.dotted(r as u16) } else { r as u16 };
                p.add_term(Word::letter(l), c.clone());
            }
        }
        p
    };
    let mut out = Vec::new();
    for x in 0..m {
        for y in 0..m {
            let mu = ad.table.get(x, y);
            let family = match x.cmp(&y) {
                std::cmp::Ordering::Greater => "f1",
                std::cmp::Ordering::Less => "f2",
                std::cmp::Ordering::Equal => "f3",
            };
            let dotted = letter(alphabet.dotted(x as u16)).bracket(&letter(y as u16)) - vec_poly(mu, true);
            out.push((dotted, vec![family.to_string()]));
            let plain = letter(x as u16).bracket(&letter(y as u16)) - vec_poly(mu, false);
            out.push((plain, vec![format!("phi_{family}")]));
        }
    }
    for (k, &a) in ad.a_letters.iter().enumerate() {
        let (d, dp) = (&ad.d[k], &ad.d_prime[k]);
        let g = letter(alphabet.dotted(a)).bracket(&letter(t)) - vec_poly(d, true);
        let h = letter(alphabet.dotted(t)).bracket(&letter(a)) - vec_poly(dp, true);
        let phi_g = letter(a).bracket(&letter(t)) - vec_poly(d, false);
        let phi_h = letter(t).bracket(&letter(a)) - vec_poly(dp, false);
        out.push((g, vec!["g".to_string()]));
        out.push((h, vec!["h".to_string()]));
        out.push((phi_g, vec!["phi_g".to_string()]));
        out.push((phi_h, vec!["phi_h".to_string()]));
    }
    for &z in &ad.x0 {
        out.push((letter(z), vec!["x0".to_string()]));
    }
    out
}

/// Validates the input and builds the reduced presentation.
pub fn build_presentation(input: &HnnInput) -> Result<HnnPresentation> {
    validate(input)?;
    build_presentation_unchecked(input)
}

/// Builds the presentation without checking the Leibniz identity, the
/// subalgebra, the (anti-)derivation laws or compatibility.
pub fn build_presentation_unchecked(input: &HnnInput) -> Result<HnnPresentation> {
    let ad = h0_and_adapt(input)?;
    let mut letters: Vec<Letter> = ad.names.iter().map(Letter::plain).collect();
    letters.push(Letter::plain(STABLE_LETTER));
    let alphabet = DoubledAlphabet::new(Alphabet::ascending(letters)?)?;
    let seeds = seed_rules(&ad, &alphabet);
    let system = inter_reduce(alphabet.full().clone(), seeds.clone())?;
    let seeds = RewriteSystem::with_duplicates(alphabet.full().clone(), seeds)?;
    Ok(HnnPresentation { alphabet, seeds, system, adapted: ad, input: input.clone() })
}

/// Named composition cases, keyed by the labels of the two rules.
const CASES: &[(&str, &str, &str)] = &[
    ("(i)", "f1", "phi_f1"),
    ("(ii)", "f1", "phi_f2"),
    ("(iii)", "f3", "phi_f1"),
    ("(iv)", "h", "phi_f1"),
    ("(v)", "g", "phi_h"),
    ("f2 ^ phi(f1)", "f2", "phi_f1"),
    ("f2 ^ phi(f2)", "f2", "phi_f2"),
    ("f3 ^ phi(f2)", "f3", "phi_f2"),
    ("h ^ phi(f2)", "h", "phi_f2"),
    ("g ^ phi(g)", "g", "phi_g"),
    ("f1 ^ phi(f3)", "f1", "phi_f3"),
    ("f2 ^ phi(f3)", "f2", "phi_f3"),
    ("f3 ^ phi(f3)", "f3", "phi_f3"),
    ("h ^ phi(f3)", "h", "phi_f3"),
];

/// Names of the cases a composition belongs to (possibly several, since
/// merged rules carry several labels).
pub fn classify(system: &RewriteSystem, r: &CompositionReport) -> Vec<String> {
    let (lf, lg) = (&system.rules()[r.f].labels, &system.rules()[r.g].labels);
    let mut out: Vec<String> = CASES
        .iter()
        .filter(|(_, a, b)| lf.iter().any(|l| l == a) && lg.iter().any(|l| l == b))
        .map(|(name, _, _)| name.to_string())
        .collect();
    if out.is_empty() {
        let undotted = |ls: &[String]| ls.iter().all(|l| l.starts_with("phi_") || l == "x0");
        let name = if undotted(lf) && undotted(lg) {
            "quotient Lie table".to_string()
        } else {
            format!("{} ^ {}", lf.join("/"), lg.join("/"))
        };
        out.push(name);
    }
    out
}

/// Tally for one case.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseTally {
    pub intersection: usize,
    pub inclusion: usize,
    pub nonzero: usize,
}

#[derive(Debug, Clone)]
pub struct GsbVerification {
    /// Compositions of the relations as listed, with their cases.
    pub compositions: Vec<(CompositionReport, Vec<String>)>,
    pub cases: BTreeMap<String, CaseTally>,
    /// Compositions of the inter-reduced system.
    pub reduced: Vec<CompositionReport>,
}

impl GsbVerification {
    pub fn total(&self) -> usize {
        self.compositions.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &(CompositionReport, Vec<String>)> {
        self.compositions.iter().filter(|(r, _)| !r.residue.is_zero())
    }

    pub fn reduced_failures(&self) -> impl Iterator<Item = &CompositionReport> {
        self.reduced.iter().filter(|r| !r.residue.is_zero())
    }

    pub fn all_trivial(&self) -> bool {
        self.failures().next().is_none() && self.reduced_failures().next().is_none()
    }
}

/// Runs every composition of the listed relations, classifying each, and
/// every composition of the inter-reduced system.
pub fn verify_gsb(p: &HnnPresentation) -> Result<GsbVerification> {
    let (seeds, reduced) = rayon::join(|| p.seeds.all_compositions(None), || p.system.all_compositions(None));
    let mut cases: BTreeMap<String, CaseTally> = BTreeMap::new();
    for (name, _, _) in CASES {
        cases.insert(name.to_string(), CaseTally::default());
    }
    let mut compositions = Vec::new();
    for r in seeds? {
        let names = classify(&p.seeds, &r);
        for n in &names {
            let e = cases.entry(n.clone()).or_default();
            match r.kind {
                CompositionKind::Intersection => e.intersection += 1,
                CompositionKind::Inclusion => e.inclusion += 1,
            }
            if !r.residue.is_zero() {
                e.nonzero += 1;
            }
        }
        compositions.push((r, names));
    }
    Ok(GsbVerification { compositions, cases, reduced: reduced? })
}

/// The normal-form basis up to `max_degree`, from the rewriting system.
pub fn normal_basis(p: &HnnPresentation, max_degree: usize) -> Vec<NlswTree> {
    p.system.irr_basis(max_degree)
}

/// Forbidden subwords describing the normal forms directly: `X₀` letters,
/// `xy` for `x > y` outside `X₀`, `ta`, `ṫa` for `A` letters outside `X₀`,
/// `ȧt` for `A` letters, and `ẋy` for all `x` and all `y` outside `X₀`.
pub fn forbidden_words(p: &HnnPresentation) -> Vec<Word> {
    let m = p.dim() as u16;
    let x0: BTreeSet<u16> = p.x0_letters().iter().copied().collect();
    let free: Vec<u16> = (0..m).filter(|r| !x0.contains(r)).collect();
    let (t, td) = (p.t(), p.t_dot());
    let mut out: Vec<Word> = x0.iter().map(|&z| Word::letter(z)).collect();
    for &x in &free {
        for &y in &free {
            if x > y {
                out.push(Word(vec![x, y]));
            }
        }
    }
    for &a in &p.adapted.a_letters {
        out.push(Word(vec![p.x_dot(a), t]));
        if !x0.contains(&a) {
            out.push(Word(vec![t, a]));
            out.push(Word(vec![td, a]));
        }
    }
    for x in 0..m {
        for &y in &free {
            out.push(Word(vec![p.x_dot(x), y]));
        }
    }
    out.sort();
    out
}

/// NLSWs of degree ≤ `max_degree` avoiding [`forbidden_words`].
pub fn normal_basis_by_forbidden(p: &HnnPresentation, max_degree: usize) -> Vec<NlswTree> {
    let forbidden = forbidden_words(p);
    enumerate_alsw(p.alphabet.full().len(), max_degree)
        .into_iter()
        .filter(|w| !forbidden.iter().any(|f| w.contains(f)))
        .map(|w| standard_bracketing(&w).expect("ALSW"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCheck {
    /// Every dotted letter of `X` is a normal form.
    pub dotted_letters_irreducible: bool,
    /// `[ė_i, e_j] − (e_i ⊣ e_j)˙` reduces to zero for all user basis pairs.
    pub multiplicative: bool,
    pub failures: Vec<String>,
}

impl EmbeddingCheck {
    pub fn holds(&self) -> bool {
        self.dotted_letters_irreducible && self.multiplicative
    }
}

pub fn check_embedding(p: &HnnPresentation) -> EmbeddingCheck {
    let m = p.dim();
    let full = p.alphabet.full();
    let mut failures = Vec::new();
    let mut dotted_ok = true;
    for r in 0..m as u16 {
        if !p.system.is_irreducible_word(&Word::letter(p.x_dot(r))) {
            dotted_ok = false;
            failures.push(format!("{} is not in normal form", full.letter(p.x_dot(r)).token()));
        }
    }
    let mut mult_ok = true;
    let user = &p.input;
    for i in 0..m {
        for j in 0..m {
            let ui = p.adapted.to_adapted(&unit(m, i));
            let uj = p.adapted.to_adapted(&unit(m, j));
            let prod = p.adapted.to_adapted(&user.table.product(&unit(m, i), &unit(m, j)));
            let f = p.vector_poly(&ui, true).bracket(&p.vector_poly(&uj, false)) - p.vector_poly(&prod, true);
            if !p.system.reduce(&f).is_zero() {
                mult_ok = false;
                failures.push(format!("product ({}, {}) is not preserved", user.names[i], user.names[j]));
            }
        }
    }
    EmbeddingCheck { dotted_letters_irreducible: dotted_ok, multiplicative: mult_ok, failures }
}

/// Inner data `d = [·, z]`, `d′ = [z, ·]` on the given generators.
pub fn inner_pair(table: &Table, gens: &[Vector], z: &[Rational]) -> (Vec<Vector>, Vec<Vector>) {
    let d = gens.iter().map(|a| table.product(a, z)).collect();
    let dp = gens.iter().map(|a| table.product(z, a)).collect();
    (d, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    /// `[x1 ⊣ x1] = x2`, `A = span{x2}`, `d(x2) = x2`, `d′(x2) = 0`.
    fn dim2() -> HnnInput {
        let mut table = Table::zero(2);
        table.set(0, 0, v(&[0, 1]));
        HnnInput {
            names: vec!["x1".into(), "x2".into()],
            table,
            subalgebra: vec![v(&[0, 1])],
            d: vec![v(&[0, 1])],
            d_prime: vec![v(&[0, 0])],
        }
    }

    #[test]
    fn validation_examples() {
        let inp = dim2();
        assert!(check_leibniz(&inp.table));
        assert!(check_leibniz(&Table::zero(3)));
        assert!(check_subalgebra(&inp.table, &[v(&[0, 1])]).unwrap());
        assert!(!check_subalgebra(&inp.table, &[v(&[1, 0])]).unwrap());
        assert!(check_subalgebra(&inp.table, &[v(&[1, 0]), v(&[0, 1])]).unwrap());
        assert!(matches!(
            check_subalgebra(&inp.table, &[v(&[0, 1]), v(&[0, 2])]),
            Err(Error::DependentGenerators)
        ));
        let a = [v(&[0, 1])];
        assert!(check_derivation(&inp.table, &a, &[v(&[0, 0])], DerivationKind::Derivation).unwrap());
        assert!(check_derivation(&inp.table, &a, &[v(&[0, 1])], DerivationKind::Derivation).unwrap());
        assert!(check_derivation(&inp.table, &a, &[v(&[0, 1])], DerivationKind::AntiDerivation).unwrap());
        validate(&inp).unwrap();
    }

    #[test]
    fn adapted_basis_for_dim2() {
        let ad = h0_and_adapt(&dim2()).unwrap();
        assert!(ad.is_permutation);
        assert_eq!(ad.names, vec!["x2", "x1"]);
        assert_eq!(ad.x0, vec![0]);
        assert_eq!(ad.a_letters, vec![0]);
    }

    #[test]
    fn lie_input_has_no_h0() {
        let mut t = Table::zero(2);
        t.set(0, 1, v(&[0, 1]));
        t.set(1, 0, v(&[0, -1]));
        assert!(h0_basis(&t).is_empty());
    }

    #[test]
    fn dim2_presentation_is_gsb_and_embeds() {
        let p = build_presentation(&dim2()).unwrap();
        let ver = verify_gsb(&p).unwrap();
        assert!(ver.all_trivial());
        let deg1: Vec<String> = normal_basis(&p, 1).iter().map(|t| p.alphabet.full().format_tree(t)).collect();
        assert_eq!(deg1, vec!["x1", "t", "x2'", "x1'", "t'"]);
        assert_eq!(normal_basis(&p, 4), normal_basis_by_forbidden(&p, 4));
        assert!(check_embedding(&p).holds());
    }

    #[test]
    fn abelian_dim1() {
        let inp = HnnInput {
            names: vec!["x".into()],
            table: Table::zero(1),
            subalgebra: vec![v(&[1])],
            d: vec![v(&[0])],
            d_prime: vec![v(&[0])],
        };
        let p = build_presentation(&inp).unwrap();
        assert!(verify_gsb(&p).unwrap().all_trivial());
        assert!(check_embedding(&p).holds());
    }

    #[test]
    fn reserved_letter() {
        let mut inp = dim2();
        inp.names[0] = "t".into();
        assert!(matches!(validate(&inp), Err(Error::InvalidHnnInput(_))));
    }
}
