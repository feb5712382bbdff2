//! Composition-Diamond machinery for Lie polynomials: reduction modulo a set
//! of monic rules, intersection and inclusion compositions, completion,
//! the `Irr(S)` basis and ideal membership.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freealg::{expand_nlsw, expand_relative, to_lyndon_basis, Polynomial, Rational};
use crate::words::{
    enumerate_alsw, is_alsw, special_bracketing, standard_bracketing, Alphabet, NlswTree,
    RelativeBracketing, Word,
};

/// A monic Lie polynomial used as a rewriting rule, with free-form labels
/// recording where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub poly: Polynomial,
    pub lead: Word,
    pub labels: Vec<String>,
}

/// A set of monic Lie rules with pairwise distinct ALSW leading words.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    index: HashMap<Word, usize>,
    max_lead: usize,
}

/// One leading-word elimination: `word -= coefficient * [a s b]` where the
/// rule's leading word sits at `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: usize,
    pub word: Word,
    pub offset: usize,
    pub coefficient: Rational,
}

type RelativeCache = Mutex<HashMap<(Word, usize, usize), RelativeBracketing>>;

fn relative_cache() -> &'static RelativeCache {
    static CACHE: OnceLock<RelativeCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached_relative(w: &Word, start: usize, end: usize) -> Result<RelativeBracketing> {
    let key = (w.clone(), start, end);
    if let Some(rb) = relative_cache().lock().unwrap().get(&key) {
        return Ok(rb.clone());
    }
    let rb = special_bracketing(w, start, end)?;
    relative_cache().lock().unwrap().insert(key, rb.clone());
    Ok(rb)
}

/// `[a s b]` relative to the occurrence of `s̄` at `offset` in `w`, scaled so
/// that its leading term is exactly `w` with coefficient 1.
pub fn bracket_in_context(s: &Polynomial, w: &Word, offset: usize) -> Result<Polynomial> {
    let lead = s.leading()?.0.clone();
    let rb = cached_relative(w, offset, offset + lead.len())?;
    let p = expand_relative(&rb.tree, &rb.path, s);
    let (lw, c) = p.leading()?;
    if lw != w {
        return Err(Error::Internal(format!("relative bracketing of {:?} has leading word {:?}", w.0, lw.0)));
    }
    let inv = c.recip();
    Ok(p.scale(&inv))
}

/// Monic rules from nonzero Lie polynomials over `alphabet`.
fn make_rules(alphabet: &Alphabet, polys: Vec<(Polynomial, Vec<String>)>) -> Result<Vec<Rule>> {
    let mut rules = Vec::new();
    for (p, labels) in polys {
        if p.is_zero() {
            continue;
        }
        for w in p.words() {
            alphabet.check_word(w)?;
        }
        to_lyndon_basis(&p, Some(alphabet))?;
        let poly = p.monic()?;
        let lead = poly.leading()?.0.clone();
        rules.push(Rule { poly, lead, labels });
    }
    Ok(rules)
}

impl RewriteSystem {
    /// Builds a system from Lie polynomials, making each monic. Zero inputs
    /// are dropped. Equal leading words are rejected; see [`inter_reduce`].
    pub fn new(alphabet: Alphabet, polys: Vec<Polynomial>) -> Result<Self> {
        Self::with_labels(alphabet, polys.into_iter().map(|p| (p, Vec::new())).collect())
    }

    pub fn with_labels(alphabet: Alphabet, polys: Vec<(Polynomial, Vec<String>)>) -> Result<Self> {
        let rules = make_rules(&alphabet, polys)?;
        Self::from_rules(alphabet, rules, false)
    }

    /// Like [`RewriteSystem::with_labels`] but keeps rules with equal leading
    /// words; reduction uses the first of them and the others meet it in an
    /// inclusion composition (`f − g`).
    pub fn with_duplicates(alphabet: Alphabet, polys: Vec<(Polynomial, Vec<String>)>) -> Result<Self> {
        let rules = make_rules(&alphabet, polys)?;
        Self::from_rules(alphabet, rules, true)
    }

    fn from_rules(alphabet: Alphabet, rules: Vec<Rule>, duplicates: bool) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            match index.get(&r.lead) {
                Some(&j) if !duplicates => return Err(Error::DuplicateLeadingWord(j, i)),
                Some(_) => {}
                None => {
                    index.insert(r.lead.clone(), i);
                }
            }
        }
        let max_lead = rules.iter().map(|r| r.lead.len()).max().unwrap_or(0);
        Ok(RewriteSystem { alphabet, rules, index, max_lead })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        RewriteSystem { alphabet, rules: Vec::new(), index: HashMap::new(), max_lead: 0 }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule_for_lead(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Best rule occurrence inside `w`: the largest rule leading word, then
    /// lowest rule index, then leftmost position.
    fn find_occurrence(&self, w: &Word, skip: Option<usize>) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let n = w.len();
        for len in (1..=self.max_lead.min(n)).rev() {
            for start in 0..=n - len {
                let sub = Word(w.0[start..start + len].to_vec());
                if let Some(&i) = self.index.get(&sub) {
                    if Some(i) == skip {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((j, _)) => {
                            let (a, b) = (&self.rules[i].lead, &self.rules[j].lead);
                            a > b || (a == b && i < j)
                        }
                    };
                    if better {
                        best = Some((i, start));
                    }
                }
            }
            if best.is_some() {
                return best;
            }
        }
        best
    }

    /// True iff `w` contains no rule leading word.
    pub fn is_irreducible_word(&self, w: &Word) -> bool {
        self.find_occurrence(w, None).is_none()
    }

    fn reduce_inner(
        &self,
        f: &Polynomial,
        skip: Option<usize>,
        full: bool,
        trace: &mut Vec<ReductionStep>,
    ) -> Result<(Polynomial, Vec<(Rational, NlswTree)>)> {
        let mut rest = f.clone();
        let mut normal = Vec::new();
        let mut kept = Polynomial::zero();
        while let Ok((w, c)) = rest.leading() {
            let (w, c) = (w.clone(), c.clone());
            if !is_alsw(&w) {
                // Not a Lie element; nothing further can be eliminated.
                kept += &rest;
                break;
            }
            match self.find_occurrence(&w, skip) {
                Some((i, offset)) => {
                    let ctx = bracket_in_context(&self.rules[i].poly, &w, offset)?;
                    rest.add_scaled(&ctx, &-c.clone());
                    trace.push(ReductionStep { rule: i, word: w, offset, coefficient: c });
                }
                None if full => {
                    let t = standard_bracketing(&w)?;
                    let e = expand_nlsw(&t);
                    rest.add_scaled(&e, &-c.clone());
                    kept.add_scaled(&e, &c);
                    normal.push((c, t));
                }
                None => {
                    kept += &rest;
                    break;
                }
            }
        }
        Ok((kept, normal))
    }

    /// Leading-word reduction: eliminates the leading word while it contains
    /// a rule leading word. The result is zero or has an irreducible leading word.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.reduce_traced(f).0
    }

    pub fn reduce_traced(&self, f: &Polynomial) -> (Polynomial, Vec<ReductionStep>) {
        let mut trace = Vec::new();
        let r = self
            .reduce_inner(f, None, false, &mut trace)
            .map(|(p, _)| p)
            .unwrap_or_else(|_| f.clone());
        (r, trace)
    }

    /// Full normal form: a combination of NLSWs from `Irr(S)` congruent to `f`.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.reduce_inner(f, None, true, &mut Vec::new())?.0)
    }

    pub fn normal_form_traced(&self, f: &Polynomial) -> Result<(Polynomial, Vec<ReductionStep>)> {
        let mut trace = Vec::new();
        let p = self.reduce_inner(f, None, true, &mut trace)?.0;
        Ok((p, trace))
    }

    /// Normal form written in the Lyndon basis.
    pub fn normal_form_lyndon(&self, f: &Polynomial) -> Result<Vec<(Rational, NlswTree)>> {
        Ok(self.reduce_inner(f, None, true, &mut Vec::new())?.1)
    }

    /// Ideal membership by reduction; meaningful when the system is a GSB up
    /// to the degree of `f`.
    pub fn member(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Composition of intersection type at `w = f̄ a = b ḡ`.
    pub fn intersection_composition(&self, fi: usize, gi: usize, w: &Word) -> Result<CompositionReport> {
        let (f, g) = (&self.rules[fi], &self.rules[gi]);
        let (lf, lg) = (f.lead.len(), g.lead.len());
        let shape_ok = w.len() > lf
            && w.len() > lg
            && lf + lg > w.len()
            && w.0[..lf] == f.lead.0[..]
            && w.0[w.len() - lg..] == g.lead.0[..];
        if !shape_ok {
            return Err(Error::CompositionShape(format!(
                "{} is not an overlap of {} and {}",
                self.alphabet.format_word(w),
                self.alphabet.format_word(&f.lead),
                self.alphabet.format_word(&g.lead)
            )));
        }
        if !is_alsw(w) {
            return Err(Error::CompositionShape(format!(
                "{} is not an associative Lyndon-Shirshov word",
                self.alphabet.format_word(w)
            )));
        }
        let left = bracket_in_context(&f.poly, w, 0)?;
        let right = bracket_in_context(&g.poly, w, w.len() - lg)?;
        self.finish(CompositionKind::Intersection, fi, gi, w.clone(), w.len() - lg, &left - &right)
    }

    /// Composition of inclusion type: `f̄ = a ḡ b` with `ḡ` at `offset`.
    pub fn inclusion_composition(&self, fi: usize, gi: usize, offset: usize) -> Result<CompositionReport> {
        let (f, g) = (&self.rules[fi], &self.rules[gi]);
        let lg = g.lead.len();
        if offset + lg > f.lead.len() || f.lead.0[offset..offset + lg] != g.lead.0[..] {
            return Err(Error::CompositionShape(format!(
                "{} does not occur in {} at position {offset}",
                self.alphabet.format_word(&g.lead),
                self.alphabet.format_word(&f.lead)
            )));
        }
        let inner = bracket_in_context(&g.poly, &f.lead, offset)?;
        self.finish(CompositionKind::Inclusion, fi, gi, f.lead.clone(), offset, &f.poly - &inner)
    }

    fn finish(
        &self,
        kind: CompositionKind,
        f: usize,
        g: usize,
        w: Word,
        offset: usize,
        value: Polynomial,
    ) -> Result<CompositionReport> {
        if let Some(lw) = value.leading_word() {
            if lw >= &w {
                return Err(Error::Internal(format!(
                    "composition value does not cancel the ambiguity {}",
                    self.alphabet.format_word(&w)
                )));
            }
        }
        let (residue, trace) = self.normal_form_traced(&value)?;
        Ok(CompositionReport { kind, f, g, w, offset, value, residue, trace })
    }

    /// Every composition candidate `(kind, f, g, w, offset)`, in a fixed order.
    fn candidates(&self) -> Vec<(CompositionKind, usize, usize, Word, usize)> {
        let mut out = Vec::new();
        for (i, f) in self.rules.iter().enumerate() {
            for (j, g) in self.rules.iter().enumerate() {
                let (lf, lg) = (f.lead.len(), g.lead.len());
                for k in 1..lf.min(lg) {
                    if f.lead.0[lf - k..] == g.lead.0[..k] {
                        let w = f.lead.concat(&Word(g.lead.0[k..].to_vec()));
                        if is_alsw(&w) {
                            let off = w.len() - lg;
                            out.push((CompositionKind::Intersection, i, j, w, off));
                        }
                    }
                }
                if i != j {
                    for off in f.lead.occurrences(&g.lead) {
                        out.push((CompositionKind::Inclusion, i, j, f.lead.clone(), off));
                    }
                }
            }
        }
        out
    }

    /// All compositions with ambiguity degree at most `max_degree` (all of
    /// them when `None`), each reduced modulo the system.
    pub fn all_compositions(&self, max_degree: Option<usize>) -> Result<Vec<CompositionReport>> {
        self.candidates()
            .into_par_iter()
            .filter(|c| max_degree.is_none_or(|d| c.3.len() <= d))
            .map(|(kind, f, g, w, off)| match kind {
                CompositionKind::Intersection => self.intersection_composition(f, g, &w),
                CompositionKind::Inclusion => self.inclusion_composition(f, g, off),
            })
            .collect()
    }

    /// Number of composition ambiguities of degree above `max_degree`.
    pub fn compositions_above(&self, max_degree: usize) -> usize {
        self.candidates().iter().filter(|c| c.3.len() > max_degree).count()
    }

    pub fn is_gsb(&self, max_degree: Option<usize>) -> Result<GsbCheck> {
        let reports = self.all_compositions(max_degree)?;
        let total = reports.len();
        let failures: Vec<_> = reports.into_iter().filter(|r| !r.residue.is_zero()).collect();
        Ok(GsbCheck { is_gsb: failures.is_empty(), total, failures })
    }

    /// `Irr(S)` up to `max_degree`: standard bracketings of ALSWs avoiding
    /// every leading word, deg-lex ascending.
    pub fn irr_basis(&self, max_degree: usize) -> Vec<NlswTree> {
        enumerate_alsw(self.alphabet.len(), max_degree)
            .into_iter()
            .filter(|w| self.is_irreducible_word(w))
            .map(|w| standard_bracketing(&w).expect("enumerated words are ALSW"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    Intersection,
    Inclusion,
}

impl CompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Intersection => "intersection",
            CompositionKind::Inclusion => "inclusion",
        }
    }
}

/// `(f, g)_w` with its value and its residue modulo the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionReport {
    pub kind: CompositionKind,
    pub f: usize,
    pub g: usize,
    pub w: Word,
    /// Position of `ḡ` inside `w`.
    pub offset: usize,
    pub value: Polynomial,
    pub residue: Polynomial,
    pub trace: Vec<ReductionStep>,
}

#[derive(Debug, Clone)]
pub struct GsbCheck {
    pub is_gsb: bool,
    pub total: usize,
    pub failures: Vec<CompositionReport>,
}

/// Inter-reduces labelled Lie polynomials: every rule is brought to normal
/// form modulo the others and made monic, zero rules are dropped, until
/// nothing changes. Labels of vanished rules move to the rule that absorbed
/// their leading word. Rules come out sorted by leading word.
pub fn inter_reduce(alphabet: Alphabet, polys: Vec<(Polynomial, Vec<String>)>) -> Result<RewriteSystem> {
    let mut work: Vec<Rule> = Vec::new();
    for (p, labels) in polys {
        if p.is_zero() {
            continue;
        }
        for w in p.words() {
            alphabet.check_word(w)?;
        }
        to_lyndon_basis(&p, Some(&alphabet))?;
        let poly = p.monic()?;
        let lead = poly.leading()?.0.clone();
        work.push(Rule { poly, lead, labels });
    }
    loop {
        // Largest leading words first, insertion order among ties.
        let mut order: Vec<usize> = (0..work.len()).collect();
        order.sort_by(|&a, &b| work[b].lead.cmp(&work[a].lead).then(a.cmp(&b)));
        let mut changed = false;
        for &i in &order {
            if work[i].poly.is_zero() {
                continue;
            }
            let others: Vec<Rule> = work
                .iter()
                .enumerate()
                .filter(|&(j, r)| j != i && !r.poly.is_zero())
                .map(|(_, r)| r.clone())
                .collect();
            let sys = PartialSystem::new(&others);
            let nf = sys.normal_form(&work[i].poly)?;
            if nf == work[i].poly {
                continue;
            }
            changed = true;
            if nf.is_zero() {
                let old_lead = work[i].lead.clone();
                let labels = std::mem::take(&mut work[i].labels);
                work[i].poly = Polynomial::zero();
                let target = work
                    .iter()
                    .position(|r| !r.poly.is_zero() && r.lead == old_lead)
                    .or_else(|| {
                        work.iter().position(|r| !r.poly.is_zero() && old_lead.contains(&r.lead))
                    });
                if let Some(t) = target {
                    for l in labels {
                        if !work[t].labels.contains(&l) {
                            work[t].labels.push(l);
                        }
                    }
                }
            } else {
                let poly = nf.monic()?;
                work[i].lead = poly.leading()?.0.clone();
                work[i].poly = poly;
            }
            break;
        }
        if !changed {
            break;
        }
    }
    let mut rules: Vec<Rule> = work.into_iter().filter(|r| !r.poly.is_zero()).collect();
    rules.sort_by(|a, b| a.lead.cmp(&b.lead));
    RewriteSystem::from_rules(alphabet, rules, false)
}

/// Reduction by a list of rules that may share leading words (used while
/// inter-reducing).
struct PartialSystem<'a> {
    rules: &'a [Rule],
    index: HashMap<&'a Word, usize>,
    max_lead: usize,
}

impl<'a> PartialSystem<'a> {
    fn new(rules: &'a [Rule]) -> Self {
        let mut index = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            index.entry(&r.lead).or_insert(i);
        }
        let max_lead = rules.iter().map(|r| r.lead.len()).max().unwrap_or(0);
        PartialSystem { rules, index, max_lead }
    }

    fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let mut rest = f.clone();
        let mut kept = Polynomial::zero();
        while let Ok((w, c)) = rest.leading() {
            let (w, c) = (w.clone(), c.clone());
            let mut hit = None;
            'outer: for len in (1..=self.max_lead.min(w.len())).rev() {
                for start in 0..=w.len() - len {
                    if let Some(&i) = self.index.get(&Word(w.0[start..start + len].to_vec())) {
                        hit = Some((i, start));
                        break 'outer;
                    }
                }
            }
            match hit {
                Some((i, off)) => {
                    let ctx = bracket_in_context(&self.rules[i].poly, &w, off)?;
                    rest.add_scaled(&ctx, &-c);
                }
                None => {
                    let e = expand_nlsw(&standard_bracketing(&w)?);
                    rest.add_scaled(&e, &-c.clone());
                    kept.add_scaled(&e, &c);
                }
            }
        }
        Ok(kept)
    }
}

/// Outcome of [`complete`].
#[derive(Debug, Clone)]
pub struct Completion {
    pub system: RewriteSystem,
    pub rounds: usize,
    /// Ambiguities above the cap were left unchecked.
    pub incomplete_above_cap: bool,
    /// Every input rule reduces to zero modulo the result.
    pub generates_input: bool,
}

/// Adjoins residues of nontrivial compositions (degree ≤ `max_degree`) and
/// inter-reduces until every such composition is trivial.
pub fn complete(system: &RewriteSystem, max_degree: usize) -> Result<Completion> {
    let mut current = inter_reduce(
        system.alphabet.clone(),
        system.rules.iter().map(|r| (r.poly.clone(), r.labels.clone())).collect(),
    )?;
    let mut rounds = 0;
    loop {
        let reports = current.all_compositions(Some(max_degree))?;
        let mut seen = HashSet::new();
        let new: Vec<Polynomial> = reports
            .into_iter()
            .filter(|r| !r.residue.is_zero())
            .filter_map(|r| {
                let m = r.residue.monic().ok()?;
                seen.insert(m.clone()).then_some(m)
            })
            .collect();
        if new.is_empty() {
            break;
        }
        rounds += 1;
        let mut polys: Vec<(Polynomial, Vec<String>)> =
            current.rules.iter().map(|r| (r.poly.clone(), r.labels.clone())).collect();
        polys.extend(new.into_iter().map(|p| (p, vec!["composition".to_string()])));
        current = inter_reduce(current.alphabet.clone(), polys)?;
    }
    let generates_input = system.rules.iter().all(|r| current.member(&r.poly));
    let incomplete_above_cap = current.compositions_above(max_degree) > 0;
    Ok(Completion { system: current, rounds, incomplete_above_cap, generates_input })
}

impl RewriteSystem {
    /// Human-readable reduction certificate `Σ c [a s_i b]` for a trace.
    pub fn format_trace(&self, trace: &[ReductionStep]) -> Vec<String> {
        trace
            .iter()
            .map(|s| {
                let lead = &self.rules[s.rule].lead;
                let a = Word(s.word.0[..s.offset].to_vec());
                let b = Word(s.word.0[s.offset + lead.len()..].to_vec());
                let fmt = |w: &Word| {
                    if w.is_empty() {
                        "1".to_string()
                    } else {
                        self.alphabet.format_word_dotted(w)
                    }
                };
                format!(
                    "{} * [{} s{} {}] at {}",
                    crate::freealg::format_rational(&s.coefficient),
                    fmt(&a),
                    s.rule,
                    fmt(&b),
                    self.alphabet.format_word_dotted(&s.word)
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::int;

    fn w(s: &str) -> Word {
        Word(s.bytes().map(|c| (c - b'a') as u16).collect())
    }

    fn p(terms: &[(i64, &str)]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|&(c, s)| (w(s), int(c))))
    }

    fn ab() -> Alphabet {
        Alphabet::descending(&["b", "a"]).unwrap()
    }

    fn commutator_system() -> RewriteSystem {
        RewriteSystem::new(ab(), vec![p(&[(1, "ba"), (-1, "ab")])]).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let s = commutator_system();
        assert!(s.reduce(&Polynomial::zero()).is_zero());
        assert!(s.reduce(&p(&[(1, "ba"), (-1, "ab")])).is_zero());
        assert!(s.reduce(&p(&[(1, "baa"), (-2, "aba"), (1, "aab")])).is_zero());
    }

    #[test]
    fn member_examples() {
        let s = commutator_system();
        assert!(s.member(&s.rules()[0].poly));
        assert!(s.member(&p(&[(1, "baa"), (-2, "aba"), (1, "aab")])));
        assert!(!s.member(&p(&[(1, "b")])));
    }

    #[test]
    fn intersection_shape_errors() {
        let s = commutator_system();
        assert!(matches!(s.intersection_composition(0, 0, &w("bab")), Err(Error::CompositionShape(_))));
        assert!(matches!(s.intersection_composition(0, 0, &w("bba")), Err(Error::CompositionShape(_))));
    }

    #[test]
    fn inclusion_examples() {
        let s = commutator_system();
        let r = s.inclusion_composition(0, 0, 0).unwrap();
        assert!(r.value.is_zero());

        let s = RewriteSystem::new(ab(), vec![p(&[(1, "ba"), (-1, "ab")]), p(&[(1, "b")])]).unwrap();
        let r = s.inclusion_composition(0, 1, 0).unwrap();
        // [b a] with b replaced by the rule b is the rule itself.
        assert!(r.value.is_zero());
        assert!(r.residue.is_zero());
        assert!(matches!(s.inclusion_composition(0, 1, 1), Err(Error::CompositionShape(_))));
    }

    #[test]
    fn composition_listing() {
        assert!(commutator_system().all_compositions(None).unwrap().is_empty());
        let s = RewriteSystem::new(ab(), vec![p(&[(1, "a")])]).unwrap();
        assert!(s.all_compositions(None).unwrap().is_empty());
        assert!(commutator_system().is_gsb(None).unwrap().is_gsb);
    }

    #[test]
    fn duplicate_leads_rejected_but_merged_by_inter_reduction() {
        let f = p(&[(1, "ba"), (-1, "ab")]);
        let g = p(&[(1, "ba"), (-1, "ab"), (1, "a")]);
        assert!(matches!(
            RewriteSystem::new(ab(), vec![f.clone(), g.clone()]),
            Err(Error::DuplicateLeadingWord(0, 1))
        ));
        let s = inter_reduce(ab(), vec![(f, vec![]), (g, vec![])]).unwrap();
        // The difference is the letter a; then [b,a] reduces to zero.
        assert_eq!(s.len(), 1);
        assert_eq!(s.rules()[0].poly, p(&[(1, "a")]));
    }

    #[test]
    fn completion_examples() {
        let s = commutator_system();
        let c = complete(&s, 5).unwrap();
        assert_eq!(c.system.rules(), s.rules());
        assert_eq!(c.rounds, 0);

        let s = RewriteSystem::new(ab(), vec![p(&[(1, "ba"), (-1, "ab")]), p(&[(1, "b")])]).unwrap();
        let c = complete(&s, 5).unwrap();
        assert!(c.generates_input);
        assert!(c.system.is_gsb(Some(5)).unwrap().is_gsb);
        assert_eq!(c.system.rules().len(), 1);
        assert_eq!(c.system.rules()[0].poly, p(&[(1, "b")]));
    }

    #[test]
    fn irr_examples() {
        let s = commutator_system();
        let irr = s.irr_basis(4);
        assert_eq!(irr, vec![NlswTree::Leaf(0), NlswTree::Leaf(1)]);
        let empty = RewriteSystem::empty(ab());
        assert_eq!(
            empty.irr_basis(2),
            vec![NlswTree::Leaf(0), NlswTree::Leaf(1), NlswTree::node(NlswTree::Leaf(1), NlswTree::Leaf(0))]
        );
    }

    #[test]
    fn non_lie_rules_rejected() {
        assert!(matches!(
            RewriteSystem::new(ab(), vec![p(&[(1, "aa")])]),
            Err(Error::NotLieElement(_))
        ));
    }
}
