//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p pseudoalg --test acceptance`.  A criterion may
//! fail for a documented reason (the reference tables disagree with what
//! the code derives); such outcomes are listed in `KNOWN_DEVIATIONS`.  The
//! process exits nonzero only when an outcome differs from that record, so
//! regressions and unexpected fixes both surface.

use std::process::ExitCode;
use std::time::Instant;

use pseudoalg::algebra::virasoro;
use pseudoalg::annihilation::{
    closed_forms, compare, display_instance, generic_bracket, window_jacobi, Current, Labeled, RhoShift, Window,
};
use pseudoalg::catalog::{self, build_mode, family, list_families, sample, verify_all_mode, Mode, Params};
use pseudoalg::derived::{derived_length, derived_series};
use pseudoalg::io::{parse_algebra, print_algebra};
use pseudoalg::lambda::{from_lambda, to_lambda_with, SignConvention};
use pseudoalg::solver::mtype::{enumerate_mtype, solve_eta};
use pseudoalg::solver::{cohomology, default_lambda_grid, Variant};
use pseudoalg::tensor::normal_form;
use pseudoalg::{Classification, HPoly, PseudoAlgebra, Rat, Tensor2, Tensor3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 2024;

/// Criteria whose failure is understood and recorded, with the reason.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[
    (1, "five printed families admit no Lie member of the printed shape (c3, c8, e4, e5, e13)"),
    (2, "the Leibniz table misses the class s⊗1 at λ = 1, κ = 0, where the basis change degenerates"),
];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Outcome {
        Outcome { pass, summary: summary.into(), details: Vec::new() }
    }

    fn detail(mut self, d: impl Into<String>) -> Outcome {
        self.details.push(d.into());
        self
    }
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

// ------------------------------------------------------------------ 1

fn criterion_catalog() -> Outcome {
    let report = verify_all_mode(Mode::Corrected, 5, SEED);
    let refuted: Vec<&str> = report.families.iter().filter(|f| f.refuted).map(|f| f.id.as_str()).collect();
    let failing: Vec<&str> = report.families.iter().filter(|f| !f.pass).map(|f| f.id.as_str()).collect();
    let verified = report.families.iter().filter(|f| f.pass && !f.refuted).count();
    let corrected: Vec<&str> =
        report.families.iter().filter(|f| !f.refuted && !f.corrections.is_empty()).map(|f| f.id.as_str()).collect();
    let pass = failing.is_empty() && refuted.is_empty();
    let mut out = Outcome::new(
        pass,
        format!(
            "{verified}/{} families verified at 5 draws; refuted as printed: {}",
            report.families.len(),
            if refuted.is_empty() { "none".to_string() } else { refuted.join(", ") }
        ),
    );
    if !failing.is_empty() {
        out = out.detail(format!("unexpected failures: {}", failing.join(", ")));
    }
    out = out.detail(format!("{} families verified after a correction: {}", corrected.len(), corrected.join(", ")));
    for id in &corrected {
        for c in catalog::corrections_for(id) {
            out = out.detail(format!("  {} [{}]: {} → {}", c.family, c.slot, or_dash(&c.printed), c.corrected));
        }
    }
    for id in &refuted {
        if let Some(c) = catalog::refutation(id) {
            out = out.detail(format!("  {id} refuted: {}", c.reason));
        }
    }
    out
}

fn or_dash(s: &str) -> &str {
    if s.is_empty() {
        "—"
    } else {
        s
    }
}

// ------------------------------------------------------------------ 2

fn printed_h2(variant: Variant, lambda: &Rat, kappa: &Rat) -> usize {
    if !kappa.is_zero() || !lambda.is_integer() {
        return 0;
    }
    match (variant, lambda.to_i64().unwrap()) {
        (Variant::Lie, 0) | (Variant::Lie, -5) | (Variant::Lie, -7) => 1,
        (Variant::Lie, -1) | (Variant::Lie, -2) => 2,
        (Variant::Leibniz, 1) | (Variant::Leibniz, -1) | (Variant::Leibniz, -2) | (Variant::Leibniz, -3) => 1,
        _ => 0,
    }
}

fn cohomology_grid() -> Vec<Rat> {
    let mut g: Vec<Rat> = (-10..=4).map(Rat::int).collect();
    g.extend([r(1, 2), r(2, 3), r(-5, 3)]);
    g
}

/// Equality up to a nonzero rational scalar.
fn proportional(x: &Tensor2, y: &Tensor2) -> bool {
    let Some(((a, b), cx)) = x.terms().next() else { return y.is_zero() };
    let cy = y.coeff(a, b);
    !cy.is_zero() && &x.scale(&(&cy / cx)) == y
}

fn criterion_cohomology() -> Outcome {
    let mut jobs = Vec::new();
    for v in [Variant::Lie, Variant::Leibniz, Variant::Trivial] {
        for l in cohomology_grid() {
            for k in 0..=2 {
                for bound in [10, 12, 14] {
                    jobs.push((v, l.clone(), Rat::int(k), bound));
                }
            }
        }
    }
    let mismatches: Vec<String> = jobs
        .par_iter()
        .filter_map(|(v, l, k, bound)| {
            let got = cohomology(*v, l, k, *bound).h2_dim;
            let want = printed_h2(*v, l, k);
            (got != want).then(|| format!("{v} (κ,λ)=({k},{l}) bound {bound}: derived {got}, table {want}"))
        })
        .collect();
    let lie = cohomology(Variant::Lie, &Rat::int(-7), &Rat::zero(), 12);
    let lie_rep = &Tensor2::antisym(3, 6) - &Tensor2::antisym(4, 5).scale(&Rat::int(3));
    let leib = cohomology(Variant::Leibniz, &Rat::int(-3), &Rat::zero(), 12);
    let leib_rep = Tensor2::from_terms([(2, 3, Rat::int(1)), (3, 2, Rat::int(4)), (4, 1, Rat::int(2))]);
    let reps_ok = lie.basis.len() == 1
        && proportional(&lie.basis[0], &lie_rep)
        && leib.basis.len() == 1
        && proportional(&leib.basis[0], &leib_rep);
    let mut out = Outcome::new(
        mismatches.is_empty() && reps_ok,
        format!(
            "{}/{} cells agree with the reference tables; representatives {}",
            jobs.len() - mismatches.len(),
            jobs.len(),
            if reps_ok { "match up to scalar" } else { "DIFFER" }
        ),
    );
    for m in mismatches {
        out = out.detail(m);
    }
    out
}

// ------------------------------------------------------------------ 3

fn criterion_mtype() -> Outcome {
    let grid = default_lambda_grid();
    let rows = enumerate_mtype(6, 12, &grid);
    let expected = |m: u32, l: &Rat| match m {
        1 => true,
        2 => *l == r(1, 2) || l.is_zero(),
        3 => *l == r(2, 3),
        _ => false,
    };
    let wrong: Vec<String> = rows
        .iter()
        .filter(|row| row.solvable != expected(row.m, &row.lambda1))
        .map(|row| format!("m={} λ1={}: solvable={}", row.m, row.lambda1, row.solvable))
        .collect();
    let found: Vec<String> = rows
        .iter()
        .filter(|row| row.solvable && row.m >= 2)
        .map(|row| format!("(m={}, λ1={})", row.m, row.lambda1))
        .collect();
    let mut out = Outcome::new(
        wrong.is_empty() && grid.len() >= 12,
        format!("{} λ1 points, m ≤ 6: m=1 everywhere, beyond that only {}", grid.len(), found.join(" ")),
    );
    for w in wrong {
        out = out.detail(w);
    }
    out
}

// ------------------------------------------------------------------ 4

fn criterion_eta() -> Outcome {
    let mut jobs = Vec::new();
    for l in default_lambda_grid() {
        for k in 0..=2 {
            jobs.push((l.clone(), Rat::int(k)));
        }
    }
    let wrong: Vec<String> = jobs
        .par_iter()
        .filter_map(|(l, k)| {
            let dim = solve_eta(6, l, k).dim;
            let want = usize::from(l.is_zero() && k.is_zero());
            (dim != want).then(|| format!("λ1={l} κ1={k}: dim {dim}"))
        })
        .collect();
    let mut out =
        Outcome::new(wrong.is_empty(), format!("dim η = 1 exactly at λ1 = κ1 = 0 over {} points", jobs.len()));
    for w in wrong {
        out = out.detail(w);
    }
    out
}

// ------------------------------------------------------------------ 5

fn display_params(family: &str) -> Params {
    match family {
        "mtype-B" => Params::new().with("lambda1", "1/2").with("kappa1", 0),
        "mtype-C" | "mtype-D" | "mtype-E" => Params::new().with("kappa1", "3/2"),
        "e14" => Params::new().with("lambda1", "2/3").with("kappa1", "-1").with("a00", 2),
        "e15" => Params::new().with("a00", 3).with("b00", "-1/2"),
        other => panic!("no display parameters for {other}"),
    }
}

fn criterion_annihilation() -> Outcome {
    let rhos = [Rat::zero(), r(1, 2), r(1, 3)];
    let window = Window::new(-6, 6);
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    let mut triples = 0usize;
    let mut literal_mismatch = Vec::new();
    for cf in closed_forms() {
        let params = display_params(cf.family);
        for rho in &rhos {
            match compare(cf.family, Mode::Corrected, &params, rho, &window) {
                Ok(rep) => {
                    pairs += rep.pairs_checked;
                    if !rep.pass {
                        failures.push(format!("compare {} ρ={rho}: {} mismatches", cf.family, rep.mismatch_count));
                    }
                }
                Err(e) => failures.push(format!("compare {} ρ={rho}: {e}", cf.family)),
            }
        }
        if !cf.corrections.is_empty() {
            literal_mismatch.push(cf.family);
        }
        let (a, _) = display_instance(cf.family, Mode::Corrected, &params).expect("display instance");
        let w = window_jacobi(&a, &r(1, 2), &window).expect("window");
        triples += w.triples_checked;
        if !w.pass {
            failures.push(format!(
                "window Jacobi {}: {} failures",
                cf.family,
                w.jacobi_failures + w.antisymmetry_failures
            ));
        }
    }
    let vir = window_jacobi(&virasoro(), &Rat::zero(), &Window::new(-5, 5)).expect("window");
    triples += vir.triples_checked;
    if !vir.pass {
        failures.push("window Jacobi Virasoro".into());
    }

    // [L_1, L_{-1}] = 2 L_0
    let l = |n: i64| Current::new(n + 1, 0);
    let b = generic_bracket(&virasoro(), l(1), l(-1));
    if b.len() != 1 || b.coeff(&l(0)) != Rat::int(2) {
        failures.push("[L_1, L_-1] ≠ 2 L_0".into());
    }
    // [Y_p, Y_p'] = (p − p') M_{p+p'} in the conformal Schrödinger–Virasoro algebra
    let sv = catalog::build("sv-conformal", &Params::new()).expect("preset");
    let shift = RhoShift::standard(r(1, 2), sv.rank());
    for (pt, qt) in [(-2i64, 3i64), (0, 2), (1, -1), (4, 4)] {
        let (y1, y2) = (Current::new(pt + 1, 1), Current::new(qt + 1, 1));
        let got = shift.label_combination(&generic_bracket(&sv, y1, y2));
        let (p, q) = (shift.label(y1).index, shift.label(y2).index);
        let coeff = &p - &q;
        let want: std::collections::BTreeMap<Labeled, Rat> =
            if coeff.is_zero() { Default::default() } else { [(Labeled::new(2, &p + &q), coeff)].into() };
        if got != want {
            failures.push(format!("[Y_{p}, Y_{q}] spot value"));
        }
    }
    let mut out = Outcome::new(
        failures.is_empty(),
        format!(
            "6 closed forms × 3 ρ on [-6,6]: {pairs} brackets compared, {triples} Jacobi triples; spot values hold"
        ),
    )
    .detail(format!("printed displays needing a correction: {}", literal_mismatch.join(", ")));
    for f in failures {
        out = out.detail(f);
    }
    out
}

// ------------------------------------------------------------------ 6

fn catalog_instances(seed: u64, per_family: usize) -> Vec<(String, PseudoAlgebra)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for f in list_families() {
        for _ in 0..per_family {
            let Some(p) = sample(f, Mode::Corrected, &mut rng) else { continue };
            if let Ok(b) = build_mode(f.id, &p, Mode::Corrected) {
                if b.report.passed() || b.classification != Classification::NotLeibniz {
                    out.push((f.id.to_string(), b.algebra));
                }
            }
        }
    }
    out
}

fn criterion_mutation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let verified: Vec<(String, PseudoAlgebra)> = catalog_instances(SEED, 1)
        .into_iter()
        .filter(|(_, a)| a.classify() == Classification::Lie && !a.is_abelian())
        .collect();
    let mut detected = 0;
    let mut by_jacobi = 0;
    let mut missed = Vec::new();
    let mut n = 0;
    while n < 50 {
        let (id, a) = &verified[rng.gen_range(0..verified.len())];
        let comps: Vec<((usize, usize, usize), Tensor2)> = a.components().map(|(k, t)| (k, t.clone())).collect();
        let ((i, j, k), t) = &comps[rng.gen_range(0..comps.len())];
        let mut m = t.clone();
        let (x, y) = if rng.gen_bool(0.5) {
            let keys: Vec<(u32, u32)> = t.terms().map(|(k, _)| k).collect();
            keys[rng.gen_range(0..keys.len())]
        } else {
            (rng.gen_range(0..5), rng.gen_range(0..5))
        };
        let delta = Rat::new(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=4));
        m.add_term(x, y, delta);
        if &m == t {
            continue;
        }
        n += 1;
        let mut b = a.clone();
        b.set(*i, *j, *k, m);
        let skew = b.check_skew().passed();
        let jac = b.check_jacobi().passed();
        if !jac {
            by_jacobi += 1;
        }
        if !(skew && jac) {
            detected += 1;
        } else {
            missed.push(format!("{id} ({i},{j},{k}) s^({x})⊗s^({y})"));
        }
    }
    let mut out = Outcome::new(
        missed.is_empty(),
        format!("{detected}/50 mutations detected ({by_jacobi} by the Jacobi check, the rest by skew-symmetry)"),
    );
    for m in missed {
        out = out.detail(format!("undetected: {m}"));
    }
    out
}

// ------------------------------------------------------------------ 7

fn criterion_round_trips() -> Outcome {
    let instances = catalog_instances(SEED + 7, 2);
    let mut failures = Vec::new();
    for (id, a) in &instances {
        for conv in [SignConvention::Canonical, SignConvention::PaperReverse] {
            match from_lambda(&to_lambda_with(a, conv)) {
                Ok(b) if b.components().eq(a.components()) => {}
                _ => failures.push(format!("λ-form {id} ({conv})")),
            }
        }
        let text = print_algebra(a);
        match parse_algebra(&text) {
            Ok(b) if b.components().eq(a.components()) && print_algebra(&b) == text => {}
            _ => failures.push(format!("text {id}")),
        }
    }
    let examples = concat!(env!("CARGO_MANIFEST_DIR"), "/data/examples");
    let mut files = 0;
    for entry in std::fs::read_dir(examples).expect("examples directory") {
        let path = entry.expect("entry").path();
        if path.extension().is_some_and(|e| e == "pa") {
            files += 1;
            let a = parse_algebra(&std::fs::read_to_string(&path).expect("readable")).expect("parses");
            let b = parse_algebra(&print_algebra(&a)).expect("reparses");
            if !b.components().eq(a.components()) {
                failures.push(format!("text {}", path.display()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..200 {
        let t = Tensor2::from_terms((0..rng.gen_range(0..12)).map(|_| {
            (rng.gen_range(0..=8), rng.gen_range(0..=8), Rat::new(rng.gen_range(-30..=30), rng.gen_range(1..=6)))
        }));
        if normal_form(&t).reconstruct() != t {
            failures.push(format!("normal form #{i}"));
        }
    }
    let mut out = Outcome::new(
        failures.is_empty(),
        format!(
            "{} catalog instances (λ-form, both conventions, and text), {files} example files, 200 random tensors",
            instances.len()
        ),
    );
    for f in failures {
        out = out.detail(f);
    }
    out
}

// ------------------------------------------------------------------ 8

fn hopf_failures(max_degree: u32) -> Vec<String> {
    let mut bad = Vec::new();
    for m in 0..=max_degree {
        let x = HPoly::basis(m);
        let dx = x.coproduct();
        let mut left = Tensor3::zero();
        let mut right = Tensor3::zero();
        for ((a, b), c) in dx.terms() {
            for ((p, q), d) in HPoly::basis(a).coproduct().terms() {
                left.add_term(p, q, b, c * d);
            }
            for ((p, q), d) in HPoly::basis(b).coproduct().terms() {
                right.add_term(a, p, q, c * d);
            }
        }
        if left != right {
            bad.push(format!("coassociativity at s^({m})"));
        }
        if dx.partial_counit(1) != x || dx.partial_counit(2) != x {
            bad.push(format!("counit at s^({m})"));
        }
        let mut s = HPoly::zero();
        for ((a, b), c) in dx.terms() {
            s = &s + &HPoly::basis(a).antipode().mul(&HPoly::basis(b)).scale(c);
        }
        if s != HPoly::constant(x.counit()) {
            bad.push(format!("antipode at s^({m})"));
        }
        for n in 0..=max_degree - m {
            let y = HPoly::basis(n);
            if x.mul(&y).coproduct() != dx.mul(&y.coproduct()) {
                bad.push(format!("Δ multiplicative at s^({m})s^({n})"));
            }
        }
    }
    bad
}

fn criterion_derived() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    let mut count = 0;
    for id in ["lemma22-i", "lemma22-ii", "lemma22-iii"] {
        let f = family(id).expect("family");
        for _ in 0..10 {
            let p = sample(f, Mode::Corrected, &mut rng).expect("sampleable");
            let a = build_mode(id, &p, Mode::Corrected).expect("builds").algebra;
            count += 1;
            match derived_length(&a, 5) {
                Some(n) if n <= 2 && n <= a.rank() => {}
                other => failures.push(format!("{id}: derived length {other:?}")),
            }
        }
    }
    let vir = derived_series(&virasoro(), 5);
    if vir.iter().any(|d| d.is_zero) || vir.len() != 6 {
        failures.push("Virasoro derived series terminates".into());
    }
    failures.extend(hopf_failures(8));
    let mut out = Outcome::new(
        failures.is_empty(),
        format!("{count} solvable instances of length ≤ 2; Virasoro perfect for 5 steps; Hopf axioms to degree 8"),
    );
    for f in failures {
        out = out.detail(f);
    }
    out
}

fn main() -> ExitCode {
    if let Ok(n) = std::env::var("PSEUDOAG_THREADS").map(|v| v.parse::<usize>()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.unwrap_or(0)).build_global();
    }
    // libtest passes flags such as --nocapture; listing expects no output.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let criteria: [Criterion; 8] = [
        (1, "catalog Jacobi suite", criterion_catalog),
        (2, "cohomology tables", criterion_cohomology),
        (3, "m-type enumeration", criterion_mtype),
        (4, "η rigidity", criterion_eta),
        (5, "annihilation equivalence", criterion_annihilation),
        (6, "mutation sensitivity", criterion_mutation),
        (7, "round trips", criterion_round_trips),
        (8, "derived series and Hopf axioms", criterion_derived),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let known = KNOWN_DEVIATIONS.iter().find(|(k, _)| *k == n);
        println!(
            "criterion {n} ({name}): {} — {} [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            o.summary,
            start.elapsed().as_secs_f64()
        );
        for d in &o.details {
            println!("    {d}");
        }
        match (o.pass, known) {
            (false, Some((_, why))) => println!("    known deviation: {why}"),
            (false, None) => unexpected.push(format!("criterion {n} failed")),
            (true, Some(_)) => unexpected.push(format!("criterion {n} passed but is recorded as a known deviation")),
            (true, None) => {}
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected outcomes: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}
