//! Subcommand implementations.

use std::fs;
use std::path::Path;

use gpw_core::builtins;
use gpw_core::classify::{self, BoundedVerdict};
use gpw_core::eval::{self, HARD_DEGREE_CAP};
use gpw_core::linalg::format_rat;
use gpw_core::shapes::{format_slot, slot_types};
use gpw_core::{
    load_algebra, parse_poly, AlgebraDocument, ClassifyError, Composition, EvalError, EvalOptions, Fillings,
    FiniteGroup, GradedAlgebra, Kind, Multipartition, RankStrategy,
};
use serde_json::Value;

use crate::cache::{sha256_hex, Cache, Lookup};
use crate::report::{Report, Table};
use crate::{Cli, Command, FillingsArg, RankArg};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        let code = if matches!(e, EvalError::ConsistencyViolation(_)) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Eval(e) => e.into(),
            other => input(other.to_string()),
        }
    }
}

struct Input {
    algebra: GradedAlgebra,
    digest: String,
}

fn read(path: &Path) -> Result<(String, String), Failure> {
    let bytes = fs::read(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let digest = format!("sha256:{}", sha256_hex(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| input(format!("{}: not UTF-8", path.display())))?;
    Ok((text, digest))
}

fn load(path: &Path) -> Result<Input, Failure> {
    let (text, digest) = read(path)?;
    let algebra = load_algebra(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    Ok(Input { algebra, digest })
}

fn check_degree(n: usize) -> Result<(), Failure> {
    if n > HARD_DEGREE_CAP {
        return Err(input(format!("degree {n} exceeds the hard cap {HARD_DEGREE_CAP}")));
    }
    Ok(())
}

fn emit(cli: &Cli, output: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, output).map_err(|e| input(format!("{}: {e}", path.display()))),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

/// Serves `command` from the cache when possible, otherwise computes,
/// renders and stores it.
fn cached(cli: &Cli, inp: &Input, command: String, compute: impl FnOnce(&mut Report) -> Result<u8, Failure>) -> Result<u8, Failure> {
    let cache = cli.cache.as_deref().map(Cache::new);
    let key = Cache::key(&inp.digest, &command, cli.format.name());
    if let Some(c) = &cache {
        if let Lookup::Hit(entry) = c.lookup(&key) {
            emit(cli, &entry.output)?;
            return Ok(entry.exit);
        }
    }
    let mut report = Report::new(command, Some((inp.algebra.name().to_string(), inp.digest.clone())));
    let code = compute(&mut report)?;
    let output = report.render(cli.format);
    if let Some(c) = &cache {
        if let Err(e) = c.store(&key, &output, code) {
            eprintln!("warning: cache write failed: {e}");
        }
    }
    emit(cli, &output)?;
    Ok(code)
}

fn composition_label(a: &GradedAlgebra, c: &Composition) -> String {
    let slots = slot_types(a.group(), a.mode());
    let parts: Vec<String> = c
        .parts
        .iter()
        .zip(&slots)
        .filter(|(&k, _)| k > 0)
        .map(|(k, &s)| format!("{k}@{}", format_slot(a.group(), s)))
        .collect();
    format!("({})", parts.join(","))
}

fn shape_label(a: &GradedAlgebra, s: &Multipartition) -> String {
    s.display(a.group(), &slot_types(a.group(), a.mode()))
}

fn options(fillings: FillingsArg, rank: RankArg) -> EvalOptions {
    EvalOptions {
        fillings: match fillings {
            FillingsArg::Standard => Fillings::Standard,
            FillingsArg::All => Fillings::All,
        },
        strategy: strategy(rank),
    }
}

fn strategy(rank: RankArg) -> RankStrategy {
    match rank {
        RankArg::Modular => RankStrategy::ModularFirst,
        RankArg::Exact => RankStrategy::Exact,
    }
}

fn rank_name(rank: RankArg) -> &'static str {
    match rank {
        RankArg::Modular => "modular",
        RankArg::Exact => "exact",
    }
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Validate { file } => validate(cli, file),
        Command::Codim { file, n, rank } => {
            check_degree(*n)?;
            let inp = load(file)?;
            let command = format!("codim --n {n} --rank {}", rank_name(*rank));
            cached(cli, &inp, command, |r| {
                let a = &inp.algebra;
                let c = eval::total_codimension(a, *n, strategy(*rank))?;
                r.set("n", *n);
                r.set("codimension", c.total);
                let mut t = Table::new("slices", &["composition", "weight", "codimension"]);
                for s in &c.slices {
                    t.push(vec![composition_label(a, &s.composition).into(), s.weight.into(), s.codimension.into()]);
                }
                r.tables.push(t);
                Ok(0)
            })
        }
        Command::Cochar { file, n, shape, fillings, rank } => {
            let inp = load(file)?;
            let a = &inp.algebra;
            let opts = options(*fillings, *rank);
            let suffix = format!("--fillings {} --rank {}", fillings_name(*fillings), rank_name(*rank));
            match shape {
                Some(text) => {
                    let s = Multipartition::parse(text, a.group(), a.mode()).map_err(|e| input(e.to_string()))?;
                    if n.is_some_and(|n| n != s.size()) {
                        return Err(input(format!("--n differs from the shape size {}", s.size())));
                    }
                    check_degree(s.size())?;
                    let command = format!("cochar --shape {} {suffix}", shape_label(a, &s));
                    cached(cli, &inp, command, |r| {
                        let m = eval::multiplicity(a, &s, opts)?;
                        let mut t = Table::new("shapes", &["shape", "multiplicity", "degree"]);
                        t.push(vec![shape_label(a, &s).into(), m.into(), s.degree().into()]);
                        r.tables.push(t);
                        Ok(0)
                    })
                }
                None => {
                    let n = n.expect("clap requires --n without --shape");
                    check_degree(n)?;
                    cached(cli, &inp, format!("cochar --n {n} {suffix}"), |r| {
                        let table = eval::cocharacter_table(a, n, opts)?;
                        r.set("n", n);
                        r.set("codimension", table.codimensions.total);
                        r.set("max_multiplicity", table.max_multiplicity());
                        let mut t = Table::new("support", &["shape", "multiplicity", "degree"]);
                        for e in table.support() {
                            t.push(vec![shape_label(a, &e.shape).into(), e.multiplicity.into(), e.degree.into()]);
                        }
                        r.tables.push(t);
                        Ok(0)
                    })
                }
            }
        }
        Command::Identity { file, poly } => {
            let inp = load(file)?;
            let a = &inp.algebra;
            let f = parse_poly(poly, a.mode(), a.group()).map_err(|e| input(e.to_string()))?;
            let degree = f.terms().keys().map(Vec::len).max().unwrap_or(0);
            check_degree(degree)?;
            let shown = f.display(a.group());
            cached(cli, &inp, format!("identity --poly {shown}"), |r| {
                let holds = eval::is_identity(&f, a)?;
                r.set("polynomial", shown.clone());
                r.set("verdict", if holds { "IDENTITY" } else { "NOT IDENTITY" });
                Ok(if holds { 0 } else { 1 })
            })
        }
        Command::ClassifyBounded { file, n_max } => {
            check_degree(*n_max)?;
            let inp = load(file)?;
            cached(cli, &inp, format!("classify-bounded --n-max {n_max}"), |r| bounded(r, &inp.algebra, *n_max))
        }
        Command::ClassifyMultone { file, n_max } => {
            check_degree(*n_max)?;
            let inp = load(file)?;
            cached(cli, &inp, format!("classify-multone --n-max {n_max}"), |r| multone(r, &inp.algebra, *n_max))
        }
        Command::VerifyLemmas { file, n_max } => {
            check_degree(*n_max)?;
            let inp = load(file)?;
            cached(cli, &inp, format!("verify-lemmas --n-max {n_max}"), |r| lemmas(r, &inp.algebra, *n_max))
        }
        Command::Builtin { name, group, g, h, star } => {
            let a = builtin(name, group.as_deref(), g.as_deref(), h.as_deref(), *star)?;
            emit(cli, &(AlgebraDocument::from_algebra(&a).to_json() + "\n"))?;
            Ok(0)
        }
    }
}

fn fillings_name(f: FillingsArg) -> &'static str {
    match f {
        FillingsArg::Standard => "standard",
        FillingsArg::All => "all",
    }
}

fn validate(cli: &Cli, file: &Path) -> Result<u8, Failure> {
    let (text, digest) = read(file)?;
    let parsed = AlgebraDocument::from_json(&text);
    let name = parsed.as_ref().map(|d| d.name.clone()).unwrap_or_default();
    let violations = match &parsed {
        Ok(doc) => doc.violations(),
        Err(e) => e.messages(),
    };
    let mut r = Report::new("validate".into(), Some((name, digest)));
    if violations.is_empty() {
        let a = parsed.and_then(|d| d.load()).map_err(|e| Failure { code: 3, message: e.to_string() })?;
        r.set("status", "valid");
        r.set("mode", a.mode().to_string());
        r.set("group_order", a.group().order());
        r.set("dimension", a.dim());
        let mut t = Table::new("components", &["slot", "dimension"]);
        for s in slot_types(a.group(), a.mode()) {
            t.push(vec![format_slot(a.group(), s).into(), a.component(s.grade, s.kind).len().into()]);
        }
        r.tables.push(t);
        emit(cli, &r.render(cli.format))?;
        return Ok(0);
    }
    r.set("status", "invalid");
    let mut t = Table::new("violations", &["message"]);
    for v in &violations {
        t.push(vec![v.clone().into()]);
    }
    r.tables.push(t);
    emit(cli, &r.render(cli.format))?;
    eprintln!("error: {}: {} violation(s)", file.display(), violations.len());
    Ok(2)
}

fn join_rats(v: &[gpw_core::Rat]) -> String {
    v.iter().map(format_rat).collect::<Vec<_>>().join(",")
}

fn join_ints(v: &[i64]) -> Value {
    if v.is_empty() {
        Value::Null
    } else {
        v.iter().map(i64::to_string).collect::<Vec<_>>().join(",").into()
    }
}

fn bounded(r: &mut Report, a: &GradedAlgebra, n_max: usize) -> Result<u8, Failure> {
    let report = classify::bounded_multiplicity_report(a, n_max)?;
    r.set("verdict", report.verdict.to_string());
    r.set("n_max", n_max);
    r.set("max_multiplicity", report.max_multiplicity);
    let mut t = Table::new("grades", &["grade", "witness_degree", "alpha", "nullity", "excludes_ut2", "growth"]);
    for gw in &report.grades {
        let growth = gw.growth.iter().map(|(n, m)| format!("{n}:{m}")).collect::<Vec<_>>().join(" ");
        let (deg, alpha, nullity) = match &gw.witness {
            Some(w) => (Value::from(w.n), Value::from(join_rats(&w.alpha)), Value::from(w.nullity)),
            None => (Value::Null, Value::Null, Value::Null),
        };
        t.push(vec![
            a.group().label(gw.grade).into(),
            deg,
            alpha,
            nullity,
            gw.excludes_ut2.map_or(Value::Null, Value::from),
            if growth.is_empty() { Value::Null } else { growth.into() },
        ]);
    }
    r.tables.push(t);
    Ok(if report.verdict == BoundedVerdict::Bounded { 0 } else { 1 })
}

fn kind_letter(k: Kind) -> &'static str {
    match k {
        Kind::Symmetric => "y",
        Kind::Skew => "z",
        Kind::Plain => "x",
    }
}

fn multone(r: &mut Report, a: &GradedAlgebra, n_max: usize) -> Result<u8, Failure> {
    let report = classify::star_multone_report(a, n_max)?;
    let group = a.group();
    r.set("verdict", report.verdict());
    r.set("n_max", n_max);
    let mut pairs = Table::new("pairs", &["g", "h", "kinds", "alphas"]);
    for p in &report.pairs {
        let kinds = format!("{}{}", kind_letter(p.kinds.0), kind_letter(p.kinds.1));
        pairs.push(vec![group.label(p.g).into(), group.label(p.h).into(), kinds.into(), join_ints(&p.alphas)]);
    }
    let mut grades = Table::new("grades", &["g", "betas"]);
    for e in &report.grades {
        grades.push(vec![group.label(e.g).into(), join_ints(&e.betas)]);
    }
    let mut empirical = Table::new("empirical", &["n", "max_multiplicity"]);
    for &(n, m) in &report.empirical {
        empirical.push(vec![n.into(), m.into()]);
    }
    r.tables.extend([pairs, grades, empirical]);
    Ok(if report.satisfied { 0 } else { 1 })
}

fn lemmas(r: &mut Report, a: &GradedAlgebra, n_max: usize) -> Result<u8, Failure> {
    let entries = classify::verify_multone_lemmas(a, n_max)?;
    let mut t = Table::new("lemmas", &["lemma", "grade", "satisfied_by", "shapes", "max_multiplicity", "verified"]);
    for e in &entries {
        t.push(vec![
            e.lemma.into(),
            a.group().label(e.grade).into(),
            e.satisfied_by.join("; ").into(),
            e.checks.len().into(),
            e.checks.iter().map(|c| c.multiplicity).max().unwrap_or(0).into(),
            e.conclusion_verified.into(),
        ]);
    }
    r.set("n_max", n_max);
    r.set("applicable", entries.len());
    r.tables.push(t);
    match entries.iter().find(|e| !e.conclusion_verified) {
        Some(e) => Err(Failure {
            code: 3,
            message: format!("lemma {} holds at grade {} but a multiplicity exceeds 1", e.lemma, a.group().label(e.grade)),
        }),
        None => Ok(0),
    }
}

/// `c<N>` or a product `c<N>xc<M>...`.
fn parse_group(text: &str) -> Result<FiniteGroup, Failure> {
    let orders = text
        .split('x')
        .map(|f| f.strip_prefix('c').and_then(|n| n.parse::<usize>().ok()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| input(format!("unknown group `{text}`; use c<N> or c<N>xc<M>")))?;
    let g = if orders.len() == 1 { FiniteGroup::cyclic(orders[0]) } else { FiniteGroup::product(&orders) };
    g.map_err(|e| input(e.to_string()))
}

fn element(group: &FiniteGroup, label: &str) -> Result<gpw_core::GroupElem, Failure> {
    group.element_by_label(label).ok_or_else(|| input(format!("unknown group element `{label}`")))
}

fn builtin(name: &str, group: Option<&str>, g: Option<&str>, h: Option<&str>, star: bool) -> Result<GradedAlgebra, Failure> {
    let grp = |default: &str| parse_group(group.unwrap_or(default));
    let algebra = match name {
        "ut2" => {
            let grp = grp("c2")?;
            builtins::ut2(&grp, element(&grp, g.unwrap_or("g"))?)
        }
        "k_g" | "k" => {
            let grp = grp("c2")?;
            builtins::k_algebra(&grp, element(&grp, g.unwrap_or("g"))?)
        }
        "grassmann2" | "g2" => {
            let grp = grp("c2xc2")?;
            builtins::grassmann2(&grp, element(&grp, g.unwrap_or("g"))?, element(&grp, h.unwrap_or("h"))?)
        }
        "field" => builtins::field(&grp("c1")?, star),
        "m2t" => {
            if group.is_some() {
                return Err(input("m2t is trivially graded and takes no --group"));
            }
            builtins::m2_transpose()
        }
        other => return Err(input(format!("unknown builtin `{other}`; expected ut2, k_g, grassmann2, field or m2t"))),
    };
    algebra.map_err(|e| input(e.to_string()))
}
