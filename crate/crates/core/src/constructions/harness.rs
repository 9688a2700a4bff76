//! Executable checks of the relations between toric polar degrees, gradient
//! multidegrees, plane-curve invariants and Euler characteristics.
//!
//! [`verify_corpus`] runs the checks that are driven by corpus entries;
//! [`verify_constructions`] runs the checks on generated families, line
//! arrangements and monomial transformations. Every random object is derived
//! from the master seed, so a run is reproducible.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::manifest::{Corpus, CorpusEntry};
use super::{example_family, monomial_sum_polynomial, pyramid, Family, MonomialMatrix};
use crate::classes::{
    check_union_general_section, csm_complement_d_from_gradient, csm_standard_complement,
    deg_from_milnor_general_position, toric_from_gradient,
};
use crate::curves::{distinct_intersections_off_h, plane_degree_formula, total_milnor};
use crate::field::{mix_seed, PrimeField};
use crate::gcd::gcd;
use crate::maps::{
    gradient_map, monomial_pullback, multidegrees, random_translate, strip_monomial_factor,
    toric_polar_map, MultidegreeVector, RandomizationConfig,
};
use crate::monomial::ExponentVector;
use crate::poly::Polynomial;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessOptions {
    pub cfg: RandomizationConfig,
    /// Number of random coprime pairs for the reducible-curve check.
    pub reducible_pairs: usize,
    /// Largest `n` for which general translates are checked.
    pub translate_max_n: usize,
    /// Largest `n` of a corpus entry that is extended by a pyramid.
    pub pyramid_max_n: usize,
    /// Largest row sum of the random monomial matrices.
    pub monomial_max_k: u32,
    /// Also run the union identity on the untranslated conic `x0^2 - x1*x2`,
    /// which is not in general position and must fail.
    pub include_nongeneral_conic: bool,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions::new(RandomizationConfig::default())
    }
}

impl HarnessOptions {
    pub fn new(cfg: RandomizationConfig) -> Self {
        HarnessOptions {
            cfg,
            reducible_pairs: 10,
            translate_max_n: 3,
            pyramid_max_n: 3,
            monomial_max_k: 2,
            include_nongeneral_conic: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub subject: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn new(check: &str, subject: impl Into<String>, passed: bool, witness: String) -> Self {
        CheckOutcome { check: check.into(), subject: subject.into(), passed, witness: Some(witness) }
    }

    fn error(check: &str, subject: impl Into<String>, err: crate::Error) -> Self {
        CheckOutcome::new(check, subject, false, format!("error: {err}"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    /// Outcomes of one kind of check.
    pub fn of(&self, check: &str) -> Vec<&CheckOutcome> {
        self.checks.iter().filter(|c| c.check == check).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {} [{}]", c.check, c.subject)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Corpus checks followed by construction checks.
pub fn verify_propositions(corpus: &Corpus, options: &HarnessOptions) -> Report {
    let mut report = verify_corpus(corpus, options);
    report.extend(verify_constructions(options));
    report
}

fn fmt_md(d: &MultidegreeVector) -> String {
    format!("{:?}", d.values())
}

fn fmt_expected(e: &[Option<u64>]) -> String {
    let items: Vec<String> = e.iter().map(|x| x.map_or("*".into(), |v| v.to_string())).collect();
    format!("[{}]", items.join(", "))
}

fn toric(f: &Polynomial, cfg: &RandomizationConfig) -> Result<MultidegreeVector> {
    multidegrees(&toric_polar_map(f)?, cfg)
}

fn toric_degree(f: &Polynomial, cfg: &RandomizationConfig) -> Result<u64> {
    Ok(toric(f, cfg)?.topological_degree())
}

#[derive(Clone, Copy)]
enum Task {
    Expected(usize),
    Reduced(usize),
    DegreeFormula(usize),
    Translate(usize),
    NongeneralConic,
    Pyramid(usize),
    Monomial(usize),
    Reducible(usize, usize),
}

const SALT_TRANSLATE: u64 = 1;
const SALT_PYRAMID: u64 = 2;
const SALT_MONOMIAL: u64 = 3;
const SALT_PAIRS: u64 = 4;

/// Checks driven by the corpus entries; an empty corpus gives an empty
/// report.
pub fn verify_corpus(corpus: &Corpus, options: &HarnessOptions) -> Report {
    let cfg = &options.cfg;
    let entries = &corpus.entries;
    let base: Vec<Result<MultidegreeVector>> =
        entries.par_iter().map(|e| toric(&e.polynomial, cfg)).collect();

    let mut tasks = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let n = e.polynomial.arity() - 1;
        let k = e.polynomial.total_degree().unwrap_or(0);
        if e.expected.is_some() {
            tasks.push(Task::Expected(i));
        }
        tasks.push(Task::Reduced(i));
        if e.is_plane_curve() {
            tasks.push(Task::DegreeFormula(i));
        }
        if n <= options.translate_max_n && k >= 2 {
            tasks.push(Task::Translate(i));
        }
        if n <= options.pyramid_max_n && k >= 1 {
            tasks.push(Task::Pyramid(i));
        }
        if n == 2 && options.monomial_max_k >= 1 {
            tasks.push(Task::Monomial(i));
        }
    }
    if options.include_nongeneral_conic && !entries.is_empty() {
        tasks.push(Task::NongeneralConic);
    }
    tasks.extend(reducible_pairs(entries, options).into_iter().map(|(a, b)| Task::Reducible(a, b)));

    let outcomes: Vec<Vec<CheckOutcome>> =
        tasks.par_iter().map(|&t| run_task(t, entries, &base, options)).collect();
    Report { checks: outcomes.into_iter().flatten().collect() }
}

fn run_task(
    task: Task,
    entries: &[CorpusEntry],
    base: &[Result<MultidegreeVector>],
    options: &HarnessOptions,
) -> Vec<CheckOutcome> {
    let cfg = &options.cfg;
    let seed = cfg.seed;
    let with_base = |i: usize, check: &str, body: &dyn Fn(&MultidegreeVector) -> CheckOutcome| {
        match &base[i] {
            Ok(d) => body(d),
            Err(e) => CheckOutcome::error(check, entries[i].name.clone(), e.clone()),
        }
    };
    match task {
        Task::Expected(i) => {
            let e = &entries[i];
            let expected = e.expected.as_deref().expect("task only scheduled with expectations");
            vec![with_base(i, "multidegrees", &|d| {
                let ok = d.values().len() == expected.len()
                    && d.values().iter().zip(expected).all(|(v, x)| x.map_or(true, |x| x == *v));
                CheckOutcome::new(
                    "multidegrees",
                    e.name.clone(),
                    ok,
                    format!("computed {}, expected {}", fmt_md(d), fmt_expected(expected)),
                )
            })]
        }
        Task::Reduced(i) => {
            let e = &entries[i];
            vec![with_base(i, "reducedness", &|d| {
                let square = &e.polynomial * &e.polynomial;
                match toric(&square, cfg) {
                    Ok(d2) => CheckOutcome::new(
                        "reducedness",
                        e.name.clone(),
                        d2 == *d,
                        format!("f: {}, f^2: {}", fmt_md(d), fmt_md(&d2)),
                    ),
                    Err(err) => CheckOutcome::error("reducedness", e.name.clone(), err),
                }
            })]
        }
        Task::DegreeFormula(i) => {
            let e = &entries[i];
            vec![with_base(i, "degree-formula", &|d| match plane_degree_formula(&e.polynomial) {
                Ok(r) => CheckOutcome::new(
                    "degree-formula",
                    e.name.clone(),
                    r.degree_formula == d.topological_degree() as i64,
                    format!(
                        "{}^2 - {} - {} - {} = {}, engine {}",
                        r.k,
                        r.milnor_sum,
                        r.incidence,
                        r.tangency,
                        r.degree_formula,
                        d.topological_degree()
                    ),
                ),
                Err(err) => CheckOutcome::error("degree-formula", e.name.clone(), err),
            })]
        }
        Task::Translate(i) => {
            let e = &entries[i];
            let first = translate_checks(e, mix_seed(seed, &[SALT_TRANSLATE, i as u64, 0]), cfg);
            if first.iter().all(|c| c.passed) {
                return first;
            }
            // a translate is non-generic with small probability: resample once
            translate_checks(e, mix_seed(seed, &[SALT_TRANSLATE, i as u64, 1]), cfg)
        }
        Task::NongeneralConic => {
            let field = entries[0].polynomial.field();
            let conic = Polynomial::from_int_terms(field, 3, &[(&[2, 0, 0], 1), (&[0, 1, 1], -1)]);
            vec![union_section_outcome("tangent conic (untranslated)", &conic, cfg)]
        }
        Task::Pyramid(i) => {
            let e = &entries[i];
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, &[SALT_PYRAMID, i as u64]));
            let f = &e.polynomial;
            let k = f.total_degree().unwrap_or(0);
            let m = random_monomial(f.field(), f.arity(), k - 1, &mut rng);
            let subject = format!("{} + ({})*x{}", e.name, m, f.arity());
            vec![with_base(i, "pyramid", &|d| {
                match pyramid(f, &m).and_then(|g| toric_degree(&g, cfg)) {
                    Ok(dp) => CheckOutcome::new(
                        "pyramid",
                        subject.clone(),
                        dp == d.topological_degree(),
                        format!("base degree {}, pyramid degree {dp}", d.topological_degree()),
                    ),
                    Err(err) => CheckOutcome::error("pyramid", subject.clone(), err),
                }
            })]
        }
        Task::Monomial(i) => {
            let e = &entries[i];
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, &[SALT_MONOMIAL, i as u64]));
            let k = rng.gen_range(1..=options.monomial_max_k);
            let a = match MonomialMatrix::random_invertible(2, k, &mut rng) {
                Ok(a) => a,
                Err(err) => return vec![CheckOutcome::error("monomial-invariance", e.name.clone(), err)],
            };
            let subject = format!("{} with A = {:?}", e.name, a.rows());
            vec![with_base(i, "monomial-invariance", &|d| {
                let pulled = monomial_pullback(&e.polynomial, &a).map(|g| strip_monomial_factor(&g));
                match pulled.and_then(|g| toric_degree(&g, cfg)) {
                    Ok(dp) => CheckOutcome::new(
                        "monomial-invariance",
                        subject.clone(),
                        dp == d.topological_degree(),
                        format!("degree {} before, {dp} after pullback", d.topological_degree()),
                    ),
                    Err(err) => CheckOutcome::error("monomial-invariance", subject.clone(), err),
                }
            })]
        }
        Task::Reducible(a, b) => {
            let (ea, eb) = (&entries[a], &entries[b]);
            let subject = format!("{} * {}", ea.name, eb.name);
            let run = || -> Result<CheckOutcome> {
                let da = base[a].clone()?.topological_degree();
                let db = base[b].clone()?.topological_degree();
                let off = distinct_intersections_off_h(&ea.polynomial, &eb.polynomial)?;
                let dp = toric_degree(&(&ea.polynomial * &eb.polynomial), cfg)?;
                Ok(CheckOutcome::new(
                    "reducible-curves",
                    subject.clone(),
                    dp == da + db + off,
                    format!("product degree {dp}, {da} + {db} + {off} off-triangle points"),
                ))
            };
            vec![run().unwrap_or_else(|err| CheckOutcome::error("reducible-curves", subject.clone(), err))]
        }
    }
}

fn random_monomial<R: Rng>(field: PrimeField, arity: usize, degree: u32, rng: &mut R) -> Polynomial {
    let mut e = ExponentVector::zero(arity);
    for _ in 0..degree {
        let i = rng.gen_range(0..arity);
        e.set(i, e.exponent(i) + 1);
    }
    Polynomial::monomial(field, e, 1)
}

/// Random coprime pairs of distinct plane-curve entries, without repeats
/// while unused pairs remain.
fn reducible_pairs(entries: &[CorpusEntry], options: &HarnessOptions) -> Vec<(usize, usize)> {
    let plane: Vec<usize> = (0..entries.len()).filter(|&i| entries[i].is_plane_curve()).collect();
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for (x, &a) in plane.iter().enumerate() {
        for &b in &plane[x + 1..] {
            if gcd(&entries[a].polynomial, &entries[b].polynomial).is_constant() {
                candidates.push((a, b));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(options.cfg.seed, &[SALT_PAIRS]));
    candidates.shuffle(&mut rng);
    candidates.truncate(options.reducible_pairs);
    candidates
}

fn translate_checks(e: &CorpusEntry, seed: u64, cfg: &RandomizationConfig) -> Vec<CheckOutcome> {
    let subject = format!("{} (translate)", e.name);
    let names = ["toric-gradient", "union-section", "milnor-general-position"];
    let translate = match random_translate(&e.polynomial, seed) {
        Ok(t) => t,
        Err(err) => return vec![CheckOutcome::error(names[0], subject, err)],
    };
    let maps = toric(&translate, cfg)
        .and_then(|d| Ok((d, multidegrees(&gradient_map(&translate)?, cfg)?)));
    let (d, g) = match maps {
        Ok(x) => x,
        Err(err) => return names[..2].iter().map(|n| CheckOutcome::error(n, subject.clone(), err.clone())).collect(),
    };
    let transformed = toric_from_gradient(&g);
    let mut out = vec![
        CheckOutcome::new(
            names[0],
            subject.clone(),
            transformed == d,
            format!("toric {}, gradient {}, transform {}", fmt_md(&d), fmt_md(&g), fmt_md(&transformed)),
        ),
        union_section_from(&subject, &d, &g),
    ];
    if e.is_plane_curve() {
        let k = translate.total_degree().unwrap_or(0);
        out.push(match total_milnor(&translate) {
            Ok(mu) => {
                let predicted = deg_from_milnor_general_position(k, 2, mu);
                CheckOutcome::new(
                    names[2],
                    subject,
                    predicted == d.topological_degree() as i64,
                    format!("{k}^2 - {mu} = {predicted}, engine {}", d.topological_degree()),
                )
            }
            Err(err) => CheckOutcome::error(names[2], subject, err),
        });
    }
    out
}

fn union_section_from(subject: &str, d: &MultidegreeVector, g: &MultidegreeVector) -> CheckOutcome {
    let lhs = csm_complement_d_from_gradient(g);
    let rhs = csm_standard_complement(d);
    CheckOutcome::new(
        "union-section",
        subject,
        check_union_general_section(&lhs, &rhs),
        format!("c(P^n \\ D) = {lhs}, c(U) = {rhs}"),
    )
}

fn union_section_outcome(subject: &str, f: &Polynomial, cfg: &RandomizationConfig) -> CheckOutcome {
    let run = || -> Result<CheckOutcome> {
        let d = toric(f, cfg)?;
        let g = multidegrees(&gradient_map(f)?, cfg)?;
        Ok(union_section_from(subject, &d, &g))
    };
    run().unwrap_or_else(|err| CheckOutcome::error("union-section", subject, err))
}

const SALT_ARRANGEMENT: u64 = 5;
const SALT_MATRIX: u64 = 6;

/// Checks on generated examples: the birational families, monomial
/// transformations, and line arrangements.
pub fn verify_constructions(options: &HarnessOptions) -> Report {
    let cfg = options.cfg;
    let field = match cfg.field() {
        Ok(f) => f,
        Err(err) => return Report { checks: vec![CheckOutcome::error("configuration", "prime", err)] },
    };
    let mut jobs: Vec<Box<dyn Fn() -> CheckOutcome + Send + Sync>> = Vec::new();

    for (which, label) in [(Family::A, "a"), (Family::B, "b"), (Family::C, "c")] {
        for n in 2..=3 {
            let ks: &[u32] = if which == Family::B { &[2, 3] } else { &[2] };
            for &k in ks {
                let subject = if which == Family::B {
                    format!("family ({label}) n={n} k={k}")
                } else {
                    format!("family ({label}) n={n}")
                };
                jobs.push(Box::new(move || {
                    birational_outcome("birational-family", &subject, example_family(which, n, k, field), &cfg)
                }));
            }
        }
    }
    for n in 1..=3 {
        jobs.push(Box::new(move || {
            birational_outcome("birational-family", &format!("dolgachev n={n}"), super::dolgachev_quadric(n, field), &cfg)
        }));
    }

    for t in 0..3u64 {
        jobs.push(Box::new(move || {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(cfg.seed, &[SALT_MATRIX, t]));
            let k = 1 + t as u32;
            match MonomialMatrix::random_invertible(2, k, &mut rng) {
                Ok(a) => birational_outcome(
                    "monomial-sum",
                    &format!("A = {:?}", a.rows()),
                    monomial_sum_polynomial(&a, field),
                    &cfg,
                ),
                Err(err) => CheckOutcome::error("monomial-sum", "random matrix", err),
            }
        }));
    }
    jobs.push(Box::new(move || cremona_pullback_outcome(field, &cfg)));

    for (idx, kind) in [
        ArrangementKind::Generic(1),
        ArrangementKind::Generic(2),
        ArrangementKind::Generic(3),
        ArrangementKind::Concurrent,
        ArrangementKind::ThroughVertex,
    ]
    .into_iter()
    .enumerate()
    {
        jobs.push(Box::new(move || {
            arrangement_outcome(kind, mix_seed(cfg.seed, &[SALT_ARRANGEMENT, idx as u64]), field, &cfg)
        }));
    }

    Report { checks: jobs.par_iter().map(|job| job()).collect() }
}

fn birational_outcome(
    check: &str,
    subject: &str,
    f: Result<Polynomial>,
    cfg: &RandomizationConfig,
) -> CheckOutcome {
    // coordinate components do not change the toric polar map: q_1 = x1 (x0 + x1)
    match f.and_then(|f| toric_degree(&strip_monomial_factor(&f), cfg)) {
        Ok(d) => CheckOutcome::new(check, subject, d == 1, format!("toric polar degree {d}")),
        Err(err) => CheckOutcome::error(check, subject, err),
    }
}

/// A monomial transformation keeps the toric polar degree of the Cremona
/// polynomial `x1x2 + x0x2 + x0x1` but can change its other multidegrees.
fn cremona_pullback_outcome(field: PrimeField, cfg: &RandomizationConfig) -> CheckOutcome {
    let check = "monomial-multidegrees";
    let run = || -> Result<CheckOutcome> {
        let f = super::cremona_poly(2, field)?;
        let d = toric(&f, cfg)?;
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(cfg.seed, &[SALT_MATRIX, 99]));
        for _ in 0..20 {
            let a = MonomialMatrix::random_invertible(2, 2, &mut rng)?;
            let g = strip_monomial_factor(&monomial_pullback(&f, &a)?);
            let dg = toric(&g, cfg)?;
            if dg.topological_degree() == d.topological_degree() && dg != d {
                return Ok(CheckOutcome::new(
                    check,
                    "cremona pullbacks",
                    true,
                    format!("A = {:?}: {} -> {}", a.rows(), fmt_md(&d), fmt_md(&dg)),
                ));
            }
            if dg.topological_degree() != d.topological_degree() {
                return Ok(CheckOutcome::new(
                    check,
                    "cremona pullbacks",
                    false,
                    format!("A = {:?} changed the degree: {} -> {}", a.rows(), fmt_md(&d), fmt_md(&dg)),
                ));
            }
        }
        Ok(CheckOutcome::new(check, "cremona pullbacks", false, "no matrix changed the multidegrees".into()))
    };
    run().unwrap_or_else(|err| CheckOutcome::error(check, "cremona pullbacks", err))
}

#[derive(Clone, Copy, Debug)]
enum ArrangementKind {
    Generic(usize),
    /// Three lines through one point.
    Concurrent,
    /// Two lines, one through the vertex `(0:0:1)`.
    ThroughVertex,
}

fn random_line<R: Rng>(field: PrimeField, rng: &mut R) -> [u64; 3] {
    [field.random_nonzero(rng), field.random_nonzero(rng), field.random_nonzero(rng)]
}

fn cross(field: PrimeField, a: &[u64; 3], b: &[u64; 3]) -> [u64; 3] {
    let m = |x, y| field.mul(x, y);
    [
        field.sub(m(a[1], b[2]), m(a[2], b[1])),
        field.sub(m(a[2], b[0]), m(a[0], b[2])),
        field.sub(m(a[0], b[1]), m(a[1], b[0])),
    ]
}

fn normalize(field: PrimeField, v: [u64; 3]) -> Option<[u64; 3]> {
    let lead = *v.iter().find(|&&c| c != 0)?;
    let inv = field.inv(lead);
    Some(v.map(|c| field.mul(c, inv)))
}

/// `χ(P^2 \ A) = 3 - (2L - sum_p (m_p - 1))` by counting intersection points
/// of the lines with their multiplicities.
fn arrangement_euler(field: PrimeField, lines: &[[u64; 3]]) -> Option<i64> {
    let lines: Vec<[u64; 3]> = lines.iter().map(|l| normalize(field, *l)).collect::<Option<_>>()?;
    let mut points: BTreeMap<[u64; 3], usize> = BTreeMap::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            let p = normalize(field, cross(field, a, b))?;
            let on = lines
                .iter()
                .filter(|l| (0..3).fold(0, |acc, j| field.add(acc, field.mul(l[j], p[j]))) == 0)
                .count();
            points.insert(p, on);
        }
    }
    let union = 2 * lines.len() as i64 - points.values().map(|&m| m as i64 - 1).sum::<i64>();
    Some(3 - union)
}

fn arrangement_outcome(
    kind: ArrangementKind,
    seed: u64,
    field: PrimeField,
    cfg: &RandomizationConfig,
) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lines: Vec<[u64; 3]> = match kind {
        ArrangementKind::Generic(m) => (0..m).map(|_| random_line(field, &mut rng)).collect(),
        ArrangementKind::Concurrent => {
            let p = random_line(field, &mut rng);
            (0..3)
                .map(|_| {
                    // a line through p: a random a, b and c solving a.p = 0
                    let (a, b) = (field.random_nonzero(&mut rng), field.random_nonzero(&mut rng));
                    let partial = field.add(field.mul(a, p[0]), field.mul(b, p[1]));
                    [a, b, field.mul(field.neg(partial), field.inv(p[2]))]
                })
                .collect()
        }
        ArrangementKind::ThroughVertex => {
            let through = [field.random_nonzero(&mut rng), field.random_nonzero(&mut rng), 0];
            vec![through, random_line(field, &mut rng)]
        }
    };
    let subject = match kind {
        ArrangementKind::Generic(1) => "1 generic line".to_string(),
        ArrangementKind::Generic(m) => format!("{m} generic lines"),
        ArrangementKind::Concurrent => "3 concurrent lines".to_string(),
        ArrangementKind::ThroughVertex => "2 lines, one through a vertex".to_string(),
    };
    let product = lines.iter().fold(Polynomial::one(field, 3), |acc, l| {
        let lin = Polynomial::from_terms(field, 3, (0..3).map(|j| (ExponentVector::variable(3, j), l[j])));
        &acc * &lin
    });
    let mut all = lines.clone();
    all.extend([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    let Some(chi) = arrangement_euler(field, &all) else {
        return CheckOutcome::new("arrangement", subject, false, "repeated line in sample".into());
    };
    match toric_degree(&product, cfg) {
        Ok(d) => CheckOutcome::new(
            "arrangement",
            subject,
            d as i64 == chi,
            format!("toric polar degree {d}, Euler characteristic {chi}"),
        ),
        Err(err) => CheckOutcome::error("arrangement", subject, err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangement_point_counts() {
        let field = PrimeField::default();
        let tri = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        assert_eq!(arrangement_euler(field, &tri), Some(0));
        let mut four = tri.to_vec();
        four.push([1, 1, 1]);
        assert_eq!(arrangement_euler(field, &four), Some(3 - 8 + 6));
        // x0 + x1 passes through (0:0:1), where x0 and x1 already meet
        let mut vertex = tri.to_vec();
        vertex.push([1, 1, 0]);
        assert_eq!(arrangement_euler(field, &vertex), Some(0));
        vertex.push([1, 1, 0]);
        assert_eq!(arrangement_euler(field, &vertex), None);
    }

    #[test]
    fn empty_corpus_gives_empty_report() {
        let report = verify_corpus(&Corpus::default(), &HarnessOptions::default());
        assert!(report.is_empty());
        assert!(report.all_passed());
    }
}
