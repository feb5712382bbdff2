//! One function per subcommand. Each returns a report and whether the
//! mathematical checks it ran all succeeded.

use std::collections::BTreeMap;

use leibniz_gsb::freealg::{int, Polynomial};
use leibniz_gsb::gsb::{complete, inter_reduce, CompositionReport, RewriteSystem};
use leibniz_gsb::hnn::{self, DerivationKind, HnnInput, HnnPresentation};
use leibniz_gsb::linalg::{invert, Echelon};
use leibniz_gsb::operads::{
    check_dilie_identities, derive_leibniz_product, hadamard_algebra, jacobiator, jacobiator_check, monomial_of,
    operad_dimensions, perm_composition_table, OperadKind, OperadMonomial, PermSlot,
};
use leibniz_gsb::replication::{dilie_basis, expand_dilie_word, DiExpr, DoubledAlphabet};
use leibniz_gsb::table::{Table, Vector};
use leibniz_gsb::words::{Alphabet, NlswTree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::parse::{parse_expression, parse_presentation, Evaluated, Kind, PresentationFile, Relation};
use crate::report::{digest, vector, word, Report};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub max_degree: usize,
    pub verbose: bool,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_degree: 4, verbose: false, seed: 0 }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub ok: bool,
}

fn parse(text: &str) -> Result<PresentationFile, CliError> {
    parse_presentation(text).map_err(|source| CliError::Parse { path: String::new(), source })
}

fn lie_text(p: &Polynomial, a: &Alphabet) -> String {
    p.format_lie(a).unwrap_or_else(|_| p.format(a))
}

fn start(command: &str, text: &str, extra: &[&str], inputs: Value) -> Report {
    let mut parts: Vec<&[u8]> = vec![command.as_bytes(), text.as_bytes()];
    parts.extend(extra.iter().map(|s| s.as_bytes()));
    Report::new(command, digest(&parts), inputs)
}

/// The relations a file stands for, over the alphabet they live in.
pub struct Working {
    pub alphabet: Alphabet,
    pub doubled: Option<DoubledAlphabet>,
    pub polys: Vec<(Polynomial, Vec<String>)>,
}

impl Working {
    pub fn evaluate(&self, expr: &str, file: &PresentationFile) -> Result<Polynomial, CliError> {
        let base = file.base_alphabet();
        let e = parse_expression(expr, &self.alphabet, &base)
            .map_err(|source| CliError::Parse { path: "--expr".into(), source })?;
        match e {
            Evaluated::Lie(p) => Ok(p),
            Evaluated::Di(terms) => match &self.doubled {
                Some(d) => Ok(d.translate_relation(&terms)?),
                None => Err(CliError::Input(
                    "di-expressions need a di-Lie presentation (kind leibniz or di relations)".into(),
                )),
            },
        }
    }

    pub fn system(&self) -> Result<RewriteSystem, CliError> {
        Ok(inter_reduce(self.alphabet.clone(), self.polys.clone())?)
    }
}

/// Table relations are included when the file declares a kind or lists
/// products; the kind defaults to `leibniz`. Leibniz tables and di relations
/// are replicated over the doubled alphabet.
pub fn working_system(file: &PresentationFile, warnings: &mut Vec<String>) -> Result<Working, CliError> {
    let include_table = file.kind.is_some() || !file.table.is_empty();
    let kind = file.kind.unwrap_or(Kind::Leibniz);
    let declared = file.alphabet();
    let names = file.plain_names();
    let table = file.structure();
    let use_doubled = file.has_di_relations() || (include_table && kind == Kind::Leibniz);
    let doubled = use_doubled.then(|| file.doubled());
    let alphabet = doubled.as_ref().map_or_else(|| declared.clone(), |d| d.full().clone());
    let mut remap = Vec::with_capacity(declared.len());
    for l in declared.letters() {
        match alphabet.rank_of(&l.id, l.dotted) {
            Some(r) => remap.push(r),
            None => {
                return Err(CliError::Input(format!(
                    "dotted letter `{}` has no undotted partner in the alphabet",
                    l.token()
                )))
            }
        }
    }
    let plain = |i: usize, dotted: bool| -> Polynomial {
        Polynomial::letter(alphabet.rank_of(&names[i], dotted).expect("declared letter"))
    };
    let combo = |v: &Vector, dotted: bool| -> Polynomial {
        let mut p = Polynomial::zero();
        for (k, c) in v.iter().enumerate() {
            p.add_scaled(&plain(k, dotted), c);
        }
        p
    };
    let mut polys = Vec::new();
    if include_table {
        match kind {
            Kind::Lie => {
                if let Some((i, j)) = table.antisymmetry_failure() {
                    warnings.push(format!("table is not antisymmetric at [{},{}]", names[i], names[j]));
                } else if let Some((i, j, k)) = table.jacobi_failure() {
                    warnings.push(format!(
                        "table fails the Jacobi identity at ({}, {}, {})",
                        names[i], names[j], names[k]
                    ));
                }
                for i in 0..names.len() {
                    for j in i + 1..names.len() {
                        let f = &plain(i, false).bracket(&plain(j, false)) - &combo(table.get(i, j), false);
                        polys.push((f, vec![format!("table [{},{}]", names[i], names[j])]));
                    }
                }
            }
            Kind::Leibniz => {
                let d = doubled.as_ref().expect("leibniz tables use the doubled alphabet");
                if let Some((i, j, k)) = table.leibniz_failure() {
                    warnings.push(format!(
                        "table fails the Leibniz identity at ({}, {}, {})",
                        names[i], names[j], names[k]
                    ));
                }
                for i in 0..names.len() {
                    for j in 0..names.len() {
                        let f = &plain(i, true).bracket(&plain(j, false)) - &combo(table.get(i, j), true);
                        let label = format!("table [{} -| {}]", names[i], names[j]);
                        polys.push((d.phi(&f), vec![format!("phi({label})")]));
                        polys.push((f, vec![label]));
                    }
                }
            }
        }
    }
    for (k, r) in file.relations.iter().enumerate() {
        let label = format!("relation {}", k + 1);
        match r {
            Relation::Lie(p) => polys.push((p.map_letters(|r| remap[r as usize]), vec![label])),
            Relation::Di(terms) => {
                let d = doubled.as_ref().expect("di relations use the doubled alphabet");
                let f = d.translate_relation(terms)?;
                polys.push((d.phi(&f), vec![format!("phi({label})")]));
                polys.push((f, vec![label]));
            }
        }
    }
    Ok(Working { alphabet, doubled, polys })
}

fn rules_json(system: &RewriteSystem) -> Value {
    let a = system.alphabet();
    Value::Array(
        system
            .rules()
            .iter()
            .enumerate()
            .map(|(k, r)| {
                json!({
                    "index": k,
                    "labels": r.labels,
                    "lead": word(a, &r.lead),
                    "relation": lie_text(&r.poly, a),
                })
            })
            .collect(),
    )
}

fn composition_json(system: &RewriteSystem, r: &CompositionReport, verbose: bool) -> Value {
    let a = system.alphabet();
    let mut v = json!({
        "kind": r.kind.name(),
        "f": r.f,
        "g": r.g,
        "w": word(a, &r.w),
        "offset": r.offset,
        "value": lie_text(&r.value, a),
        "residue": lie_text(&r.residue, a),
        "trivial": r.residue.is_zero(),
    });
    if verbose {
        v["trace"] = json!(system.format_trace(&r.trace));
    }
    v
}

fn trees_json(a: &Alphabet, trees: &[NlswTree]) -> Value {
    Value::Array(
        trees
            .iter()
            .map(|t| json!({ "bracket": a.format_tree(t), "word": word(a, &t.underlying_word()) }))
            .collect(),
    )
}

fn counts(trees: &[NlswTree], max_degree: usize) -> Vec<usize> {
    (1..=max_degree).map(|d| trees.iter().filter(|t| t.degree() == d).count()).collect()
}

/// Reads a presentation, or the presentation embedded in an `hnn` report.
pub fn presentation_text(text: &str) -> Result<String, CliError> {
    if !text.trim_start().starts_with('{') {
        return Ok(text.to_string());
    }
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON report: {e}")))?;
    match v.pointer("/results/presentation") {
        Some(Value::String(s)) => Ok(s.clone()),
        _ => Err(CliError::Input("JSON input has no results.presentation".into())),
    }
}

// ---- check ----

pub fn check(text: &str, _opts: &Options) -> Result<Outcome, CliError> {
    let file = parse(text)?;
    let mut report = start("check", text, &[], json!({}));
    report.letter_order = Some(file.alphabet().describe_order());
    let names = file.plain_names();
    let table = file.structure();
    let kind = file.kind.unwrap_or(Kind::Leibniz);
    let mut results = BTreeMap::new();
    let mut ok = true;
    results.insert("kind", json!(kind.name()));
    results.insert("dimension", json!(table.dim()));

    let leib = table.leibniz_failure();
    ok &= leib.is_none();
    results.insert(
        "leibniz",
        json!({
            "ok": leib.is_none(),
            "failure": leib.map(|(i, j, k)| vec![&names[i], &names[j], &names[k]]),
        }),
    );
    if kind == Kind::Lie {
        let anti = table.antisymmetry_failure();
        let jac = table.jacobi_failure();
        ok &= anti.is_none() && jac.is_none();
        results.insert(
            "lie",
            json!({
                "ok": anti.is_none() && jac.is_none(),
                "antisymmetry_failure": anti.map(|(i, j)| vec![&names[i], &names[j]]),
                "jacobi_failure": jac.map(|(i, j, k)| vec![&names[i], &names[j], &names[k]]),
            }),
        );
    }

    let gens = &file.subalgebra;
    let mut sub_ok = false;
    if gens.is_empty() {
        results.insert("subalgebra", Value::Null);
    } else {
        let (okv, err) = match hnn::check_subalgebra(&table, gens) {
            Ok(b) => (b, None),
            Err(e) => (false, Some(e.to_string())),
        };
        sub_ok = okv;
        ok &= okv;
        results.insert("subalgebra", json!({ "ok": okv, "error": err }));
    }
    let dim = table.dim();
    for (key, map, kind) in [
        ("derivation", &file.derivation, DerivationKind::Derivation),
        ("antiderivation", &file.antiderivation, DerivationKind::AntiDerivation),
    ] {
        match map {
            Some(m) if sub_ok => {
                let b = hnn::check_derivation(&table, gens, &m.images(gens.len(), dim), kind)?;
                ok &= b;
                results.insert(key, json!({ "ok": b, "name": m.name }));
            }
            Some(m) => {
                ok = false;
                results.insert(key, json!({ "ok": false, "name": m.name, "error": "subalgebra check failed" }));
            }
            None => {
                results.insert(key, Value::Null);
            }
        }
    }
    let maps_given = file.derivation.is_some() || file.antiderivation.is_some();
    if maps_given && sub_ok && leib.is_none() {
        let input = hnn_input(&file);
        let failure = hnn::compatibility_failure(&input);
        ok &= failure.is_none();
        results.insert("compatibility", json!({ "ok": failure.is_none(), "failure": failure }));
    } else {
        results.insert("compatibility", Value::Null);
    }
    report.results = json!(results);
    Ok(Outcome { report, ok })
}

fn hnn_input(file: &PresentationFile) -> HnnInput {
    let dim = file.dim();
    let gens = file.subalgebra.len();
    let images = |m: &Option<crate::parse::LinearMap>| {
        m.as_ref().map_or_else(|| vec![vec![int(0); dim]; gens], |m| m.images(gens, dim))
    };
    HnnInput {
        names: file.plain_names(),
        table: file.structure(),
        subalgebra: file.subalgebra.clone(),
        d: images(&file.derivation),
        d_prime: images(&file.antiderivation),
    }
}

// ---- hnn ----

pub struct HnnOutput {
    pub outcome: Outcome,
    pub presentation: String,
}

pub fn hnn(text: &str, unchecked: bool, opts: &Options) -> Result<HnnOutput, CliError> {
    let file = parse(text)?;
    if file.letters.iter().any(|l| l.dotted) {
        return Err(CliError::Input("hnn input must declare undotted letters only".into()));
    }
    let input = hnn_input(&file);
    let p: HnnPresentation =
        if unchecked { hnn::build_presentation_unchecked(&input)? } else { hnn::build_presentation(&input)? };
    let cap = opts.max_degree.to_string();
    let mut report = start("hnn", text, &[&cap, if unchecked { "unchecked" } else { "" }], json!({
        "max_degree": opts.max_degree,
        "unchecked": unchecked,
    }));
    let full = p.alphabet.full();
    report.letter_order = Some(full.describe_order());
    let ad = &p.adapted;
    let v = hnn::verify_gsb(&p)?;
    let emb = hnn::check_embedding(&p);
    let irr = hnn::normal_basis(&p, opts.max_degree);
    let forb = hnn::normal_basis_by_forbidden(&p, opts.max_degree);
    let cases: BTreeMap<String, Value> = v
        .cases
        .iter()
        .map(|(k, t)| (k.clone(), json!({ "intersection": t.intersection, "inclusion": t.inclusion, "nontrivial": t.nonzero })))
        .collect();
    let letter_names = |rs: &[u16]| -> Vec<String> { rs.iter().map(|&r| full.letter(r).token()).collect() };
    let mut verification = json!({
        "relations_listed": p.seeds.len(),
        "compositions": v.total(),
        "nontrivial": v.failures().count(),
        "cases": cases,
        "reduced_compositions": v.reduced.len(),
        "reduced_nontrivial": v.reduced_failures().count(),
        "all_trivial": v.all_trivial(),
    });
    let shown: Vec<Value> = v
        .compositions
        .iter()
        .filter(|(r, _)| opts.verbose || !r.residue.is_zero())
        .map(|(r, labels)| {
            let mut c = composition_json(&p.seeds, r, opts.verbose);
            c["case"] = json!(labels);
            c
        })
        .collect();
    verification[if opts.verbose { "composition_list" } else { "failures" }] = Value::Array(shown);
    let results = json!({
        "adapted_basis": ad.names.iter().zip(&ad.vectors).map(|(n, v)| json!({ "name": n, "vector": vector(v) })).collect::<Vec<_>>(),
        "adapted_is_permutation": ad.is_permutation,
        "x0": letter_names(&ad.x0),
        "a_letters": letter_names(&ad.a_letters),
        "presentation": p.to_text(),
        "relations": rules_json(&p.system),
        "verification": verification,
        "embedding": {
            "holds": emb.holds(),
            "dotted_letters_irreducible": emb.dotted_letters_irreducible,
            "multiplicative": emb.multiplicative,
            "failures": emb.failures,
        },
        "normal_basis": {
            "max_degree": opts.max_degree,
            "counts": counts(&irr, opts.max_degree),
            "forbidden_words": hnn::forbidden_words(&p).iter().map(|w| word(full, w)).collect::<Vec<_>>(),
            "matches_forbidden_description": irr == forb,
            "elements": if opts.verbose { trees_json(full, &irr) } else { Value::Null },
        },
    });
    report.results = results;
    let ok = v.all_trivial() && emb.holds() && irr == forb;
    Ok(HnnOutput { outcome: Outcome { report, ok }, presentation: p.to_text() })
}

// ---- gsb ----

pub fn gsb(text: &str, complete_it: bool, opts: &Options) -> Result<Outcome, CliError> {
    let body = presentation_text(text)?;
    let file = parse(&body)?;
    let cap = opts.max_degree.to_string();
    let mut report = start("gsb", &body, &[&cap, if complete_it { "complete" } else { "" }], json!({
        "complete": complete_it,
        "max_degree": opts.max_degree,
    }));
    let w = working_system(&file, &mut report.warnings)?;
    let system = w.system()?;
    report.letter_order = Some(w.alphabet.describe_order());
    let reports = system.all_compositions(None)?;
    let nontrivial: Vec<&CompositionReport> = reports.iter().filter(|r| !r.residue.is_zero()).collect();
    let is_gsb = nontrivial.is_empty();
    let mut results = json!({
        "relations": rules_json(&system),
        "compositions": reports.len(),
        "nontrivial": nontrivial.len(),
        "is_gsb": is_gsb,
        "failures": nontrivial.iter().map(|r| composition_json(&system, r, opts.verbose)).collect::<Vec<_>>(),
    });
    if opts.verbose {
        results["composition_list"] =
            Value::Array(reports.iter().map(|r| composition_json(&system, r, true)).collect());
    }
    if complete_it {
        let c = complete(&system, opts.max_degree)?;
        results["completion"] = json!({
            "relations": rules_json(&c.system),
            "rounds": c.rounds,
            "incomplete_above_cap": c.incomplete_above_cap,
            "generates_input": c.generates_input,
        });
        if c.incomplete_above_cap {
            report.warnings.push(format!("completion stopped at degree {}; compositions above it were not resolved", opts.max_degree));
        }
    }
    report.results = results;
    Ok(Outcome { report, ok: is_gsb })
}

// ---- basis ----

pub fn basis(text: &str, opts: &Options) -> Result<Outcome, CliError> {
    let body = presentation_text(text)?;
    let file = parse(&body)?;
    let cap = opts.max_degree.to_string();
    let mut report = start("basis", &body, &[&cap], json!({ "max_degree": opts.max_degree }));
    let w = working_system(&file, &mut report.warnings)?;
    let system = w.system()?;
    report.letter_order = Some(w.alphabet.describe_order());
    let check = system.is_gsb(Some(opts.max_degree))?;
    if !check.is_gsb {
        report.warnings.push(format!(
            "the relations are not a Groebner-Shirshov basis up to degree {}; the list below need not be a linear basis",
            opts.max_degree
        ));
    }
    let irr = system.irr_basis(opts.max_degree);
    report.results = json!({
        "max_degree": opts.max_degree,
        "counts": counts(&irr, opts.max_degree),
        "irr": trees_json(&w.alphabet, &irr),
        "is_gsb_up_to_cap": check.is_gsb,
    });
    Ok(Outcome { report, ok: true })
}

// ---- normalize / member ----

pub fn normalize(text: &str, expr: &str, opts: &Options) -> Result<Outcome, CliError> {
    let body = presentation_text(text)?;
    let file = parse(&body)?;
    let mut report = start("normalize", &body, &[expr], json!({ "expr": expr }));
    let w = working_system(&file, &mut report.warnings)?;
    let system = w.system()?;
    report.letter_order = Some(w.alphabet.describe_order());
    let f = w.evaluate(expr, &file)?;
    let (nf, trace) = system.normal_form_traced(&f)?;
    let a = &w.alphabet;
    let mut results = json!({
        "expression": lie_text(&f, a),
        "normal_form": lie_text(&nf, a),
        "normal_form_words": nf.format(a),
        "member": nf.is_zero(),
    });
    if opts.verbose {
        results["trace"] = json!(system.format_trace(&trace));
    }
    report.results = results;
    Ok(Outcome { report, ok: true })
}

pub fn member(text: &str, expr: &str, opts: &Options) -> Result<Outcome, CliError> {
    let body = presentation_text(text)?;
    let file = parse(&body)?;
    let mut report = start("member", &body, &[expr], json!({ "expr": expr }));
    let w = working_system(&file, &mut report.warnings)?;
    let system = w.system()?;
    report.letter_order = Some(w.alphabet.describe_order());
    let f = w.evaluate(expr, &file)?;
    let (nf, trace) = system.normal_form_traced(&f)?;
    let mut results = json!({ "expression": lie_text(&f, &w.alphabet), "member": nf.is_zero() });
    if opts.verbose {
        results["trace"] = json!(system.format_trace(&trace));
    }
    report.results = results;
    Ok(Outcome { report, ok: true })
}

// ---- operad-check ----

fn monomial_json(o: OperadMonomial) -> Value {
    let m = monomial_of(o);
    json!({ "monomial": o.to_string(), "tree": m.tree.to_string(), "sign": m.sign })
}

/// A random invertible integer matrix with entries in `-2..=2`.
fn random_basis(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vector> {
    loop {
        let m: Vec<Vector> = (0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
        if invert(&m).is_some() {
            return m;
        }
    }
}

pub fn operad_check(text: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let arity = opts.max_degree.clamp(1, 4);
    let cap = arity.to_string();
    let seed = opts.seed.to_string();
    let mut report =
        start("operad-check", text.unwrap_or(""), &[&cap, &seed], json!({ "max_arity": arity, "seed": opts.seed }));
    let mut ok = true;

    let jac = jacobiator_check();
    ok &= jac;
    let rows = perm_composition_table(arity.min(3));
    let flagged: Vec<_> = rows.iter().filter(|r| r.printed_index != r.result.i).collect();
    if !flagged.is_empty() {
        report.warnings.push(format!(
            "Perm composition: the index m_1 + ... + m_(n-1) + j_i disagrees with substitution in {} of {} compositions; results use m_1 + ... + m_(i-1) + j_i",
            flagged.len(),
            rows.len()
        ));
    }
    let row_json = |r: &&leibniz_gsb::operads::PermCompositionRow| {
        json!({
            "outer": r.outer.to_string(),
            "args": r.args.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "result": r.result.to_string(),
            "printed_index": r.printed_index,
        })
    };
    let mut dims = BTreeMap::new();
    for k in [OperadKind::Lie, OperadKind::Perm, OperadKind::DiLie] {
        dims.insert(k.name(), operad_dimensions(k, arity)?);
    }
    let mut products = Vec::new();
    for (slot, name) in [(PermSlot::E1, "e1"), (PermSlot::E2, "e2")] {
        let d = derive_leibniz_product(slot);
        ok &= d.verified;
        products.push(json!({ "slot": name, "steps": d.steps, "identity": d.identity, "verified": d.verified }));
    }
    report.warnings.push(
        "Leibniz products: the reversed term enters with a minus sign, [x -| y] = x -| y - y |- x and [x |- y] = x |- y - y -| x"
            .to_string(),
    );
    let mut results = json!({
        "monomials": OperadMonomial::all().into_iter().map(monomial_json).collect::<Vec<_>>(),
        "jacobiator": {
            "terms": jacobiator().into_iter().map(monomial_json).collect::<Vec<_>>(),
            "holds": jac,
        },
        "perm_composition": {
            "max_arity": arity.min(3),
            "compositions": rows.len(),
            "index_discrepancies": flagged.len(),
            "rows": if opts.verbose { Value::Array(rows.iter().collect::<Vec<_>>().iter().map(row_json).collect()) } else { Value::Null },
        },
        "dimensions": dims,
        "leibniz_products": products,
    });
    if let Some(text) = text {
        let file = parse(text)?;
        report.letter_order = Some(file.alphabet().describe_order());
        let t = file.structure();
        let dilie = |t: &Table| -> Result<Option<String>, CliError> {
            let h = hadamard_algebra(t, 2)?;
            Ok(check_dilie_identities(&h).map(|f| format!("{} at {:?}", f.identity, f.indices)))
        };
        let plain = dilie(&t)?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let b = random_basis(&mut rng, t.dim());
        let rebased = dilie(&t.change_basis(&b)?)?;
        ok &= plain.is_none() && rebased.is_none();
        results["hadamard"] = json!({
            "perm_dimension": 2,
            "dilie": plain.is_none(),
            "failure": plain,
            "random_basis": b.iter().map(|v| vector(v)).collect::<Vec<_>>(),
            "rebased_dilie": rebased.is_none(),
            "rebased_failure": rebased,
        });
    }
    report.results = results;
    Ok(Outcome { report, ok })
}

// ---- dilie-basis ----

pub fn dilie(text: Option<&str>, alphabet: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let source = match (text, alphabet) {
        (Some(t), _) => t.to_string(),
        (None, Some(a)) => format!("alphabet: {a}\n"),
        (None, None) => return Err(CliError::Input("dilie-basis needs a file or --alphabet".into())),
    };
    let file = parse(&source)?;
    let cap = opts.max_degree.to_string();
    let mut report = start("dilie-basis", &source, &[&cap], json!({ "max_degree": opts.max_degree }));
    let d = file.doubled();
    report.letter_order = Some(d.full().describe_order());
    let n = d.size();
    let basis = dilie_basis(n, opts.max_degree);
    let mut ech = Echelon::new();
    let mut independent = true;
    let mut elements = Vec::new();
    for idx in &basis {
        let p = expand_dilie_word(&d, idx);
        independent &= ech.insert(&p);
        elements.push(json!({
            "expr": DiExpr::left_normed(idx).format(d.base()),
            "lie": lie_text(&p, d.full()),
        }));
    }
    let counts: Vec<usize> = (1..=opts.max_degree).map(|k| basis.iter().filter(|w| w.len() == k).count()).collect();
    let expected: Vec<usize> = (1..=opts.max_degree as u32).map(|k| n.pow(k)).collect();
    report.results = json!({
        "max_degree": opts.max_degree,
        "counts": counts,
        "expected_counts": expected,
        "rank": ech.rank(),
        "independent": independent,
        "elements": elements,
    });
    let ok = independent && counts == expected;
    Ok(Outcome { report, ok })
}
