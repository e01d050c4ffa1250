//! `ftft`: fixture generation, file validation, clause-level checking, Morita
//! searches, cohomology enumeration, and the reproduction report.
//!
//! Exit codes: 0 = PASS, 1 = FAIL, 2 = structural/usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ftft_core::fixtures::{self, PinTftParams};
use ftft_core::json;
use ftft_core::repro::{self, Verdict};
use ftft_core::salg;
use ftft_core::stellar::MoritaVerdict;
use ftft_core::twogroup::{self, CochainSpace};
use ftft_core::{CheckReport, FtftError};

#[derive(Parser)]
#[command(name = "ftft", version, about = "exact verification of fermionic TFT classification data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a JSON file, dispatching on its `kind`.
    Check(CheckArgs),
    /// Write a catalog fixture as canonical JSON.
    Fixture(FixtureArgs),
    /// Run the reproduction suite and print one line per check.
    Reproduce(ReproduceArgs),
    /// Skeletal 2-group operations.
    #[command(subcommand)]
    TwoGroup(TwoGroupCommand),
    /// Bounded Morita-equivalence search between stellar structures.
    MoritaSearch(MoritaArgs),
    /// Brute-force group cohomology with ℤ₂ coefficients.
    Cohomology(CohomologyArgs),
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Restrict the report to one clause id.
    #[arg(long)]
    clause: Option<String>,
    /// Machine-readable report.
    #[arg(long)]
    json: bool,
    /// Check 2D bundles in bosonic mode (c = 1, graded-symmetric λ).
    #[arg(long)]
    bosonic: bool,
}

#[derive(Args)]
struct FixtureArgs {
    /// Catalog name; see `ftft fixture list`.
    name: String,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Group fixture name for theory bundles.
    #[arg(long)]
    group: Option<String>,
    /// Base algebra of the pin bundles: `c` or `cl1`.
    #[arg(long, default_value = "c")]
    base: String,
    #[arg(long, default_value_t = 0)]
    xt_parity: u8,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    xt_square: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    xt_dagger: i64,
    /// σ-phase for stellar fixtures, a unit of ℚ(i) such as `1`, `-1`, `i`,
    /// or `3/5+4/5i`.
    #[arg(long, default_value = "1")]
    phase: String,
    /// Output path; defaults to `$FTFT_FIXTURE_DIR/<name>.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(long, default_value = "paper")]
    suite: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum TwoGroupCommand {
    /// Enumerate extension classes (Γ, Ξ) up to 2-isomorphism.
    Enumerate { file: PathBuf },
}

#[derive(Args)]
struct MoritaArgs {
    file_a: PathBuf,
    file_b: PathBuf,
    #[arg(long, default_value_t = 4)]
    bound: usize,
}

#[derive(Args)]
struct CohomologyArgs {
    #[arg(long)]
    group: PathBuf,
    #[arg(long, default_value_t = 2)]
    degree: usize,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<serde_json::Value, FtftError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn run(cli: Cli) -> Result<ExitCode, FtftError> {
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Fixture(args) => cmd_fixture(args),
        Command::Reproduce(args) => cmd_reproduce(args),
        Command::TwoGroup(TwoGroupCommand::Enumerate { file }) => cmd_enumerate(file),
        Command::MoritaSearch(args) => cmd_morita(args),
        Command::Cohomology(args) => cmd_cohomology(args),
    }
}

fn emit_report(report: &CheckReport, args: &CheckArgs) -> ExitCode {
    let report = match &args.clause {
        Some(clause) => report.restrict_to(clause),
        None => report.clone(),
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialization")
        );
    } else {
        println!("{report}");
    }
    if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, FtftError> {
    let value = load(&args.file)?;
    let kind = json::kind_of(&value)?;
    let report = match kind.as_str() {
        "fermionic_group" => json::fermionic_group_from_json(&value)?.check(),
        "skeletal_2group" => json::two_group_from_json(&value)?.check(),
        "superalgebra" => json::superalgebra_from_json(&value)?.check(),
        "bimodule" => json::bimodule_from_json(&value)?.check(),
        "star_algebra" => json::star_algebra_from_json(&value)?.check(),
        "stellar" => json::stellar_from_json(&value)?.to_stellar()?.check(),
        "hilbert_pairing" => {
            let p = json::hilbert_pairing_from_json(&value)?;
            let mut report = p.module.check();
            if !p.is_nondegenerate() {
                report.fail("nondegenerate", "pairing is degenerate");
            }
            report
        }
        "2group_map" => {
            let class = json::extension_class_from_json(&value)?;
            let source = value
                .get("source")
                .ok_or_else(|| {
                    FtftError::Structural(
                        "a 2group_map file needs a `source` skeletal 2-group".into(),
                    )
                })
                .and_then(json::two_group_from_json)?;
            let data = twogroup::extension_to_map_data(&source, &class);
            twogroup::check_map_data(&source, &data, &ftft_core::twogroup::SkeletalTwoGroup::b_z2())
        }
        "tft2d" => {
            if let Some(clause) = &args.clause {
                let known = ftft_core::frob::TFT2D_CLAUSES;
                if !known.iter().any(|k| clause.starts_with(k) || clause.contains(k)) {
                    eprintln!(
                        "note: `{clause}` is not a known tft2d clause family; known: {}",
                        known.join(", ")
                    );
                }
            }
            let t = json::tft2d_from_json(&value)?;
            ftft_core::frob::check_tft2d(&t, args.bosonic)
        }
        "tft1d" => ftft_core::frob::check_tft1d(&json::tft1d_from_json(&value)?),
        other => {
            return Err(FtftError::Structural(format!("unknown kind `{other}`")));
        }
    };
    Ok(emit_report(&report, &args))
}

fn cmd_fixture(args: FixtureArgs) -> Result<ExitCode, FtftError> {
    let value = match args.name.as_str() {
        "clifford" => {
            let (p, q) = (args.p.unwrap_or(1), args.q.unwrap_or(0));
            json::superalgebra_to_json(&salg::clifford(p, q, salg::FieldTag::Real)?)
        }
        "complex-clifford" => {
            json::superalgebra_to_json(&salg::complex_clifford(args.n.unwrap_or(1))?)
        }
        "matrix" => json::superalgebra_to_json(&salg::matrix_superalgebra(
            args.m.unwrap_or(1),
            args.n.unwrap_or(1),
            salg::FieldTag::Complex,
        )),
        "quaternions" => json::superalgebra_to_json(&salg::quaternions()),
        "pin1-minus" | "pin1-plus" | "spin1" | "z2c" | "q8" | "d8" => {
            json::fermionic_group_to_json(&fixtures::fermionic_group_by_name(&args.name)?)
        }
        "o2-model" => json::two_group_to_json(&twogroup::o2_model()),
        "so2-x-z2-model" => json::two_group_to_json(&twogroup::so2_x_z2_model()),
        "pin2-minus-model" => json::two_group_to_json(&twogroup::pin2_minus_model()),
        "bz-model" => json::two_group_to_json(&twogroup::bz_model()),
        "point-model" => json::two_group_to_json(&twogroup::point_model()),
        "trivial-theory" => {
            let group =
                fixtures::fermionic_group_by_name(args.group.as_deref().unwrap_or("q8"))?;
            json::tft2d_to_json(&fixtures::trivial_theory(&group)?)
        }
        "stellar-c" | "stellar-c-shifted" => {
            let star = ftft_core::stellar::StarAlgebra {
                alg: salg::Superalgebra::ground(salg::FieldTag::Complex),
                star: ftft_core::ExactMatrix::identity(1),
            };
            json::stellar_to_json(&ftft_core::stellar::StellarSearchInput {
                star,
                m_shift: args.name.ends_with("shifted"),
                sigma_phase: args.phase.parse()?,
            })
        }
        "stellar-cl1-plus" | "stellar-cl1-minus" => {
            let sign = if args.name.ends_with("plus") { 1 } else { -1 };
            let mut star = ftft_core::ExactMatrix::identity(2);
            star[(1, 1)] = ftft_core::GaussianScalar::gauss(0, sign);
            json::stellar_to_json(&ftft_core::stellar::StellarSearchInput {
                star: ftft_core::stellar::StarAlgebra {
                    alg: salg::complex_clifford(1)?,
                    star,
                },
                m_shift: false,
                sigma_phase: args.phase.parse()?,
            })
        }
        "pin-minus-tft" => json::tft2d_to_json(&fixtures::pin_tft(PinTftParams {
            base_cl1: args.base == "cl1",
            xt_parity: args.xt_parity,
            xt_square: args.xt_square,
            xt_dagger: args.xt_dagger,
        })?),
        "pin-plus-tft" => json::tft2d_to_json(&fixtures::pin1_minus_tft()?),
        "spinc-theory" => json::tft2d_to_json(&fixtures::spinc_theory()?),
        "pin2-minus-tft" => json::tft2d_to_json(&fixtures::pin2_minus_tft()?),
        other => {
            return Err(FtftError::Structural(format!(
                "unknown fixture `{other}` (groups: pin1-minus pin1-plus spin1 z2c q8 d8; \
                 algebras: clifford complex-clifford matrix quaternions; 2-groups: o2-model \
                 so2-x-z2-model pin2-minus-model bz-model point-model; theories: trivial-theory \
                 pin-minus-tft pin-plus-tft spinc-theory pin2-minus-tft; stellar: stellar-c \
                 stellar-c-shifted stellar-cl1-plus stellar-cl1-minus)"
            )));
        }
    };
    let out = match args.out {
        Some(path) => path,
        None => {
            let dir = std::env::var("FTFT_FIXTURE_DIR").unwrap_or_else(|_| ".".into());
            PathBuf::from(dir).join(format!("{}.json", args.name))
        }
    };
    std::fs::write(&out, json::to_canonical_string(&value))?;
    println!("wrote {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<ExitCode, FtftError> {
    let quick = match args.suite.as_str() {
        "paper" => false,
        "quick" => true,
        other => {
            return Err(FtftError::Structural(format!(
                "unknown suite `{other}` (expected `paper` or `quick`)"
            )));
        }
    };
    let report = repro::run_suite(quick);
    if args.json {
        let rows: Vec<serde_json::Value> = report
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.id,
                    "anchor": r.anchor,
                    "verdict": r.verdict.to_string(),
                    "detail": r.detail,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&rows).expect("report"));
    } else {
        for r in &report.rows {
            println!("{} {} — {} — {}", r.verdict, r.id, r.anchor, r.detail);
        }
    }
    // timings are informational and vary; keep stdout byte-stable
    for r in &report.rows {
        if r.verdict != Verdict::Skip {
            eprintln!("{} took {} ms", r.id, r.elapsed_ms);
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_enumerate(file: PathBuf) -> Result<ExitCode, FtftError> {
    let tg = json::two_group_from_json(&load(&file)?)?;
    let class_report = tg.check();
    if !class_report.is_valid() {
        return Err(FtftError::Structural(format!(
            "input is not a valid skeletal 2-group: {class_report}"
        )));
    }
    let classes = twogroup::enumerate_extension_maps(&tg)?;
    let mut per_gamma: std::collections::BTreeMap<Vec<u8>, usize> = Default::default();
    for class in &classes {
        let idx = per_gamma.entry(class.gamma.clone()).or_insert(0);
        let gamma_str = class
            .gamma
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("Gamma=[{gamma_str}] Xi_class={idx}");
        *idx += 1;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_morita(args: MoritaArgs) -> Result<ExitCode, FtftError> {
    let a = json::stellar_from_json(&load(&args.file_a)?)?;
    let b = json::stellar_from_json(&load(&args.file_b)?)?;
    match ftft_core::stellar::morita_search_stellar(&a, &b, args.bound)? {
        MoritaVerdict::Witness(_) => println!("WITNESS"),
        MoritaVerdict::None { obstruction } => {
            println!("NONE");
            eprintln!("obstruction: {obstruction}");
        }
        MoritaVerdict::NoneInField => println!("NONE-IN-FIELD"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cohomology(args: CohomologyArgs) -> Result<ExitCode, FtftError> {
    let value = load(&args.group)?;
    let table = match json::kind_of(&value)?.as_str() {
        "fermionic_group" => json::fermionic_group_from_json(&value)?.table,
        other => {
            return Err(FtftError::Structural(format!(
                "cohomology expects a fermionic_group file, got `{other}`"
            )));
        }
    };
    if table.order() > 16 {
        return Err(FtftError::BoundExceeded("group order exceeds 16".into()));
    }
    let space = CochainSpace::new(&table);
    match args.degree {
        1 => {
            // Hom(G, Z2): cocycles in C¹ (no coboundaries)
            let n = space.dim1();
            let mut rows = twogroup::Gf2Matrix::zeros(n * n, n);
            let nonunit = space.nonunit.clone();
            for (ri, (gi, hi)) in (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).enumerate() {
                // dσ(g,h) = σ(g) + σ(h) + σ(gh)
                let mut add = |e: usize, rows: &mut twogroup::Gf2Matrix| {
                    if let Some(p) = nonunit.iter().position(|&x| x == e) {
                        let v = rows.get(ri, p) ^ 1;
                        rows.set(ri, p, v);
                    }
                };
                add(nonunit[gi], &mut rows);
                add(nonunit[hi], &mut rows);
                add(table.mul(nonunit[gi], nonunit[hi]), &mut rows);
            }
            let rank = rows.kernel().len();
            println!("H^1(G, Z2) = Z2^{rank} ({} classes)", 1usize << rank);
        }
        2 => {
            let reps = space.h2_representatives();
            let rank = reps.len().trailing_zeros();
            println!("H^2(G, Z2) = Z2^{rank} ({} classes)", reps.len());
            if args.json {
                let tables: Vec<Vec<Vec<u8>>> =
                    reps.iter().map(|v| space.cochain2_from_vec(v)).collect();
                println!("{}", serde_json::to_string_pretty(&tables).expect("tables"));
            }
        }
        other => {
            return Err(FtftError::Structural(format!(
                "degree {other} is not supported (use 1 or 2)"
            )));
        }
    }
    Ok(ExitCode::SUCCESS)
}
