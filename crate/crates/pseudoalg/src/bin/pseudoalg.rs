//! Command-line interface.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage, parse or I/O error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pseudoalg::annihilation::{self, Window};
use pseudoalg::catalog::{self, Mode, Params};
use pseudoalg::io::report::{
    self, CatalogBuild, CatalogList, CheckOutput, DerivedOutput, FamilyInfo, MtypeOutput, Requirement,
};
use pseudoalg::io::{parse_algebra, print_algebra};
use pseudoalg::lambda::{self, Charset, SignConvention};
use pseudoalg::solver::{self, Variant};
use pseudoalg::{derived, PseudoAlgebra, Rat};

/// `println!` that ignores a closed standard output (e.g. `| head`).
macro_rules! say {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! say_raw {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "pseudoalg", version, about = "Exact computations with Lie and Leibniz pseudoalgebras over k[s]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check skew-symmetry and the Jacobi identity of a `.pa` file.
    Check {
        file: PathBuf,
        /// Require a Lie pseudoalgebra (skew-symmetry and Jacobi).
        #[arg(long, conflicts_with = "leibniz")]
        lie: bool,
        /// Require a Leibniz pseudoalgebra (Jacobi only; the default).
        #[arg(long)]
        leibniz: bool,
        #[arg(long)]
        json: bool,
    },
    /// The catalog of classified families.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Second cohomology of Virasoro with coefficients in a CK module.
    Cohomology {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        lambda: Rat,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        kappa: Rat,
        #[arg(long, default_value_t = 12)]
        degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Annihilation Lie algebra over Laurent currents.
    Annihilate(AnnihilateArgs),
    /// λ-bracket form of a `.pa` file.
    Lambda {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ConventionArg::Internal)]
        sign_convention: ConventionArg,
        /// Print `lam` and `d` instead of `λ` and `∂`.
        #[arg(long)]
        ascii: bool,
        #[arg(long)]
        json: bool,
    },
    /// Derived series of a `.pa` file.
    Derived {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_steps: usize,
        #[arg(long)]
        json: bool,
    },
    /// Which top degrees m admit a nonzero [e1, e1]-component α'_m.
    EnumerateMtype {
        #[arg(long, default_value_t = 6)]
        m_max: u32,
        #[arg(long, default_value_t = 12)]
        degree: u32,
        /// Comma-separated λ1 values (default: a 14-point grid).
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', value_parser = parse_rat)]
        lambda: Vec<Rat>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat, default_value = "0")]
        kappa: Rat,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the families.
    List {
        #[arg(long)]
        json: bool,
        /// Print the family reference in Markdown.
        #[arg(long, conflicts_with = "json")]
        markdown: bool,
    },
    /// Build one family member.
    Build {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Use the tables as printed, without corrections.
        #[arg(long)]
        literal: bool,
        /// Write the `.pa` file here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build and check random members of every family.
    Verify {
        /// Only these families (default: all).
        ids: Vec<String>,
        #[arg(long, default_value_t = 5)]
        draws: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        literal: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Parameter assignment `name=value` (repeatable).
    #[arg(short = 'p', long = "param", value_name = "NAME=VALUE", allow_hyphen_values = true)]
    params: Vec<String>,
}

#[derive(Args)]
struct AnnihilateArgs {
    /// A `.pa` file.
    #[arg(conflicts_with = "family", required_unless_present = "family")]
    file: Option<PathBuf>,
    /// A catalog family instead of a file.
    #[arg(long)]
    family: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
    rho: Rat,
    /// Index window `A..B`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    window: (i64, i64),
    /// Restrict to the Y and M currents.
    #[arg(long)]
    schrodinger: bool,
    /// Verify antisymmetry and Jacobi on every pair and triple in the window.
    #[arg(long)]
    verify_jacobi: bool,
    /// Compare with the printed display as is (default: corrected display).
    #[arg(long)]
    literal: bool,
    /// Print every bracket in the window.
    #[arg(long)]
    table: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    /// λ is the first tensor slot.
    #[value(alias = "canonical")]
    Internal,
    /// λ ↦ −λ, the usual conformal-algebra convention.
    PaperReverse,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse::<Rat>().map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let p = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("`{x}`: {e}"));
    Ok((p(a)?, p(b)?))
}

/// A command failure: the message and the exit code.
struct Fail(u8, String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Fail {
        Fail(2, e.to_string())
    }
}

type Outcome = Result<bool, Fail>;

fn read_algebra(path: &Path) -> Result<PseudoAlgebra, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn params(p: &ParamArgs) -> Result<Params, Fail> {
    Params::parse_pairs(p.params.iter().map(String::as_str)).map_err(|e| Fail(2, e))
}

fn mode(literal: bool) -> Mode {
    if literal {
        Mode::Literal
    } else {
        Mode::Corrected
    }
}

fn check(file: &Path, lie: bool, json: bool) -> Outcome {
    let a = read_algebra(file)?;
    let out = CheckOutput::new(&a, if lie { Requirement::Lie } else { Requirement::Leibniz });
    if json {
        say!("{}", report::to_json_string("check", &out));
    } else {
        say!("{}: rank {}, {}", out.algebra, out.rank, out.classification);
        say!("skew-symmetry: {}", if out.skew_pass { "ok" } else { "fails" });
        say!("Jacobi identity: {}", if out.jacobi_pass { "ok" } else { "fails" });
        for f in &a.check_all().failures {
            if lie || f.kind == pseudoalg::algebra::FailureKind::Jacobi {
                let idx: Vec<String> = f.indices.iter().map(|i| format!("e{i}")).collect();
                let kind = match f.kind {
                    pseudoalg::algebra::FailureKind::Skew => "skew",
                    pseudoalg::algebra::FailureKind::Jacobi => "jacobi",
                };
                say!("  {kind} failure at ({}) → e{}: {}", idx.join(", "), f.component, f.residual);
            }
        }
        say!("{}", if out.pass { "PASS" } else { "FAIL" });
    }
    Ok(out.pass)
}

fn catalog_cmd(cmd: CatalogCommand) -> Outcome {
    match cmd {
        CatalogCommand::List { json, markdown } => {
            if markdown {
                say_raw!("{}", catalog::reference_markdown());
            } else if json {
                let list =
                    CatalogList { families: catalog::list_families().into_iter().map(FamilyInfo::new).collect() };
                say!("{}", report::to_json_string("catalog-list", &list));
            } else {
                for f in catalog::list_families() {
                    let names: Vec<&str> = f.params.iter().map(|p| p.name).collect();
                    let mark = if catalog::refutation(f.id).is_some() {
                        " [refuted]"
                    } else if !catalog::corrections_for(f.id).is_empty() {
                        " [corrected]"
                    } else {
                        ""
                    };
                    say!("{:<14} rank {}  {}{}  ({})", f.id, f.rank, f.title, mark, names.join(", "));
                }
            }
            Ok(true)
        }
        CatalogCommand::Build { id, params: p, literal, output, json } => {
            let p = params(&p)?;
            let built = catalog::build_mode(&id, &p, mode(literal)).map_err(|e| {
                let code = if matches!(e, catalog::CatalogError::PaperFormulaFails { .. }) { 1 } else { 2 };
                Fail(code, e.to_string())
            })?;
            let text = print_algebra(&built.algebra);
            if let Some(path) = &output {
                std::fs::write(path, &text).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?;
            }
            if json {
                let out = CatalogBuild {
                    family: id,
                    mode: built.mode,
                    params: p,
                    classification: built.classification,
                    corrections: built.corrections.into_iter().cloned().collect(),
                    algebra: text,
                };
                say!("{}", report::to_json_string("catalog-build", &out));
            } else if output.is_none() {
                say_raw!("{text}");
            }
            Ok(true)
        }
        CatalogCommand::Verify { ids, draws, seed, literal, json } => {
            let mode = mode(literal);
            let report = if ids.is_empty() {
                catalog::verify_all_mode(mode, draws, seed)
            } else {
                let families = ids
                    .iter()
                    .map(|id| catalog::family(id).map(|f| catalog::verify_family(f, mode, draws, seed)))
                    .collect::<Result<Vec<_>, _>>()?;
                catalog::VerifyReport {
                    seed,
                    draws_per_family: draws,
                    all_pass: families.iter().all(|f| f.pass),
                    families,
                }
            };
            if json {
                say!("{}", report::to_json_string("catalog-verify", &report));
            } else {
                for f in &report.families {
                    let ok = f.draws.iter().filter(|d| d.ok).count();
                    let status = match (f.pass, f.refuted) {
                        (true, true) => "REFUTED",
                        (true, false) => "ok",
                        (false, _) => "FAIL",
                    };
                    let err = f.error.as_deref().map(|e| format!("  {e}")).unwrap_or_default();
                    say!("{:<14} {status:<8} {ok}/{} draws{err}", f.id, f.draws.len());
                }
                let passed = report.families.iter().filter(|f| f.pass).count();
                say!("{passed}/{} families pass ({mode})", report.families.len());
            }
            Ok(report.all_pass)
        }
    }
}

fn cohomology_cmd(variant: Variant, lambda: &Rat, kappa: &Rat, degree: u32, json: bool) -> Outcome {
    let r = solver::cohomology(variant, lambda, kappa, degree);
    if json {
        say!("{}", report::to_json_string("cohomology", &r));
    } else {
        say!("variant {variant}, λ = {lambda}, κ = {kappa}, degree ≤ {degree}");
        say!("solutions {}, coboundaries {}, dim H² = {}", r.solution_dim, r.coboundary_dim, r.h2_dim);
        for (n, t) in r.basis.iter().enumerate() {
            say!("  x{} = {}", n + 1, t.to_expr());
        }
    }
    Ok(true)
}

#[derive(serde::Serialize)]
struct AnnihilateOutput {
    algebra: String,
    rho: Rat,
    window: Window,
    #[serde(skip_serializing_if = "Option::is_none")]
    compare: Option<annihilation::CompareReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jacobi: Option<annihilation::WindowReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<annihilation::CurrentTable>,
    pass: bool,
}

fn annihilate_cmd(args: AnnihilateArgs) -> Outcome {
    let p = params(&args.params)?;
    let (lo, hi) = args.window;
    let window = if args.schrodinger { Window::schrodinger(lo, hi) } else { Window::new(lo, hi) };
    let (a, compare) = match (&args.file, &args.family) {
        (Some(f), _) => (read_algebra(f)?, None),
        (None, Some(id)) => {
            if annihilation::closed_form(id).is_some() {
                let m = mode(args.literal);
                let (a, _) = annihilation::display_instance(id, m, &p)?;
                (a, Some(annihilation::compare(id, m, &p, &args.rho, &window)?))
            } else {
                (catalog::build(id, &p)?, None)
            }
        }
        (None, None) => return Err(Fail(2, "give a file or --family".into())),
    };
    let jacobi = if args.verify_jacobi { Some(annihilation::window_jacobi(&a, &args.rho, &window)?) } else { None };
    let table = if args.table { Some(annihilation::current_table(&a, &p, &args.rho, &window)?) } else { None };
    let pass = compare.as_ref().is_none_or(|c| c.pass) && jacobi.as_ref().is_none_or(|j| j.pass);
    let out =
        AnnihilateOutput { algebra: a.name().into(), rho: args.rho.clone(), window, compare, jacobi, table, pass };
    if args.json {
        say!("{}", report::to_json_string("annihilate", &out));
        return Ok(pass);
    }
    say!("{}: ρ = {}, window {}..{}", out.algebra, out.rho, lo, hi);
    if let Some(c) = &out.compare {
        say!(
            "closed form ({}): {} pairs, {} mismatches — {}",
            c.mode,
            c.pairs_checked,
            c.mismatch_count,
            if c.pass { "match" } else { "MISMATCH" }
        );
        for m in &c.mismatches {
            say!("  [{}, {}]: generic {} ; closed form {}", m.x, m.y, m.generic, m.closed_form);
        }
    }
    if let Some(j) = &out.jacobi {
        say!(
            "window Jacobi: {} triples, {} Jacobi failures, {} antisymmetry failures — {}",
            j.triples_checked,
            j.jacobi_failures,
            j.antisymmetry_failures,
            if j.pass { "pass" } else { "FAIL" }
        );
        for f in &j.examples {
            let cs: Vec<String> = f.currents.iter().map(|c| c.to_string()).collect();
            say!("  ({}): {}", cs.join(", "), f.residual);
        }
    }
    if let Some(t) = &out.table {
        let shift = annihilation::RhoShift::standard(out.rho.clone(), a.rank());
        for e in &t.brackets {
            let mut comb = annihilation::Combination::zero();
            for term in &e.terms {
                comb.add_term(annihilation::Current::new(term.exponent, term.component), term.coeff.clone());
            }
            say!(
                "[{}, {}] = {}",
                shift.label(e.x),
                shift.label(e.y),
                annihilation::format_labeled(&shift.label_combination(&comb))
            );
        }
    }
    Ok(pass)
}

fn lambda_cmd(file: &Path, conv: ConventionArg, ascii: bool, json: bool) -> Outcome {
    let a = read_algebra(file)?;
    let conv = match conv {
        ConventionArg::Internal => SignConvention::Canonical,
        ConventionArg::PaperReverse => SignConvention::PaperReverse,
    };
    let l = lambda::to_lambda_with(&a, conv);
    if json {
        say!("{}", report::to_json_string("lambda", &l));
    } else {
        say_raw!("{}", lambda::format_lambda(&l, if ascii { Charset::Ascii } else { Charset::Utf8 }));
    }
    Ok(true)
}

fn derived_cmd(file: &Path, max_steps: usize, json: bool) -> Outcome {
    let a = read_algebra(file)?;
    let steps = derived::derived_series(&a, max_steps);
    let length = steps.iter().position(|s| s.is_zero);
    let out = DerivedOutput { algebra: a.name().into(), max_steps, steps, length };
    if json {
        say!("{}", report::to_json_string("derived", &out));
    } else {
        for (n, s) in out.steps.iter().enumerate() {
            say!("A^({n}): {} generators{}", s.rank, if s.is_zero { " (zero)" } else { "" });
        }
        match out.length {
            Some(l) => say!("solvable, derived length {l}"),
            None => say!("not solvable within {max_steps} steps"),
        }
    }
    Ok(true)
}

fn mtype_cmd(m_max: u32, degree: u32, grid: Vec<Rat>, kappa: &Rat, json: bool) -> Outcome {
    let grid = if grid.is_empty() { solver::default_lambda_grid() } else { grid };
    let rows = solver::mtype::enumerate_mtype_with_kappa(m_max, degree, &grid, kappa);
    let out = MtypeOutput { m_max, degree_bound: degree, rows };
    if json {
        say!("{}", report::to_json_string("enumerate-mtype", &out));
    } else {
        for m in 1..=m_max {
            let hits: Vec<String> =
                out.rows.iter().filter(|r| r.m == m && r.solvable).map(|r| r.lambda1.to_string()).collect();
            if hits.is_empty() {
                say!("m = {m}: none");
            } else {
                say!("m = {m}: λ1 ∈ {{{}}}", hits.join(", "));
            }
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { file, lie, leibniz: _, json } => check(&file, lie, json),
        Command::Catalog(c) => catalog_cmd(c),
        Command::Cohomology { variant, lambda, kappa, degree, json } => {
            cohomology_cmd(variant, &lambda, &kappa, degree, json)
        }
        Command::Annihilate(args) => annihilate_cmd(args),
        Command::Lambda { file, sign_convention, ascii, json } => lambda_cmd(&file, sign_convention, ascii, json),
        Command::Derived { file, max_steps, json } => derived_cmd(&file, max_steps, json),
        Command::EnumerateMtype { m_max, degree, lambda, kappa, json } => {
            mtype_cmd(m_max, degree, lambda, &kappa, json)
        }
    }
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("PSEUDOALG_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
