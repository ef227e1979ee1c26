//! Command-line surface: parse group and character expressions, run the
//! exact computations, and emit deterministic text or JSON reports.
//!
//! Exit status: 0 = all checks pass, 1 = mathematical mismatch,
//! 2 = usage or parse error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gradedchar_core::chartables::{complex_table, rational_table, Table};
use gradedchar_core::error::Error;
use gradedchar_core::gamma_graded::{
    GammaFiltration, GeneratorSpec, Presentation, PresentationDoc, VerificationReport,
};
use gradedchar_core::groups::{make_group_with, Group};
use gradedchar_core::lambda_ops::parse_character_expr;
use gradedchar_core::modp_quillen::{cyclic_factor_orders, dual_elements, quillen_check};
use gradedchar_core::ring_maps::{continuity_check, eval_valuation, evaluate, kunneth_check};

#[derive(Parser)]
#[command(
    name = "gradedchar",
    version,
    about = "Exact graded character rings of finite groups",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Field {
    C,
    Q,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::C => write!(f, "C"),
            Field::Q => write!(f, "Q"),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Group expression: atoms C<n>, D<n>, Q8 joined by `x`, e.g. C4xC2
    #[arg(short, long)]
    group: String,
    /// Largest graded degree to compute
    #[arg(short = 'n', long, default_value_t = 8)]
    max_degree: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override the group order cap
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Per-degree invariant factors, Chern generators, and their products
    Graded {
        #[command(flatten)]
        common: CommonArgs,
        /// Coefficient field (rational mode requires an abelian group)
        #[arg(long, value_enum, default_value_t = Field::C)]
        field: Field,
    },
    /// Verify a ring presentation degree by degree
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Presentation file (JSON with `generators` and `relations`)
        #[arg(short = 'P', long)]
        presentation: String,
        #[arg(long, value_enum, default_value_t = Field::C)]
        field: Field,
    },
    /// Compare the graded ring of a product with the degreewise tensor formula
    Kunneth {
        /// First factor group expression
        #[arg(long)]
        g1: String,
        /// Second factor group expression
        #[arg(long)]
        g2: String,
        #[arg(short = 'n', long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Mod-p comparison with the filtered group algebra (abelian p-groups)
    Quillen {
        #[command(flatten)]
        common: CommonArgs,
        /// The prime p
        #[arg(short = 'p', long = "prime")]
        prime: u64,
    },
    /// Valuation positivity of all evaluation morphisms (p-groups)
    Valuation {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Evaluate a virtual-character expression at a named element
    Eval {
        #[command(flatten)]
        common: CommonArgs,
        /// Expression over chi0..chiK with + - * ^, lam<n>(), psi<k>(), gam<n>()
        #[arg(long)]
        expr: String,
        /// Element name (e.g. 3, (1,0), r, sr2, -1, i)
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Also report the p-adic valuation for this prime
        #[arg(short = 'p', long = "prime")]
        prime: Option<u64>,
        #[arg(long, value_enum, default_value_t = Field::C)]
        field: Field,
    },
    /// Check the conjectured presentation of C_{2^k} x C_2 (an experiment)
    ExperimentC2n {
        /// The exponent k in C_{2^k} x C_2
        #[arg(long, default_value_t = 3)]
        exponent: u32,
        #[arg(short = 'n', long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        force: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn build_table(group: &Group, field: Field) -> Result<Table, Error> {
    match field {
        Field::C => complex_table(group),
        Field::Q => rational_table(group),
    }
}

fn invariants_json(inv: &gradedchar_core::AbelianInvariants) -> Value {
    let factors: Vec<u64> = inv
        .factors
        .iter()
        .map(|d| u64::try_from(d).unwrap())
        .collect();
    if inv.free_rank == 0 {
        json!(factors)
    } else {
        json!({ "factors": factors, "free_rank": inv.free_rank })
    }
}

fn emit(format: Format, report: &Value, text: &str) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
    }
}

fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Graded { common, field } => cmd_graded(common, field),
        Command::Verify {
            common,
            presentation,
            field,
        } => cmd_verify(common, presentation, field),
        Command::Kunneth {
            g1,
            g2,
            max_degree,
            format,
            force,
        } => cmd_kunneth(&g1, &g2, max_degree, format, force),
        Command::Quillen { common, prime } => cmd_quillen(common, prime),
        Command::Valuation { common } => cmd_valuation(common),
        Command::Eval {
            common,
            expr,
            at,
            prime,
            field,
        } => cmd_eval(common, &expr, &at, prime, field),
        Command::ExperimentC2n {
            exponent,
            max_degree,
            format,
            force,
        } => cmd_experiment(exponent, max_degree, format, force),
    }
}

fn cmd_graded(common: CommonArgs, field: Field) -> Result<bool, Error> {
    let group = make_group_with(&common.group, common.force)?;
    let table = build_table(&group, field)?;
    let f = GammaFiltration::compute(&table, common.max_degree)?;

    let mut degree_blocks = Vec::new();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "group {} over {}, graded ring up to degree {}",
        group.label(),
        field,
        common.max_degree
    );
    for n in 1..=common.max_degree {
        let inv = f.graded_piece(n)?;
        let mut gens_json = Vec::new();
        let _ = writeln!(text, "degree {n}: {inv}");
        for g in &f.generators {
            if g.index as usize != n {
                continue;
            }
            let class = f.chern_class(g.irrep, g.index)?;
            let order = f.additive_order(&class)?;
            let name = format!("c{}(chi{})", g.index, g.irrep);
            let _ = writeln!(
                text,
                "  {name} = {:?}  (order {order})",
                class
                    .coords
                    .iter()
                    .map(u64::try_from)
                    .map(Result::unwrap)
                    .collect::<Vec<_>>()
            );
            gens_json.push(json!({
                "name": name,
                "irrep": g.irrep,
                "index": g.index,
                "degree": n,
                "order": u64::try_from(&order).unwrap(),
                "coords": class.coords.iter().map(|c| u64::try_from(c).unwrap()).collect::<Vec<_>>(),
            }));
        }
        degree_blocks.push(json!({
            "n": n,
            "invariants": invariants_json(inv),
            "generators": gens_json,
        }));
    }

    // multiplication table of the Chern generators up to the degree bound
    let mut products_json = Vec::new();
    let _ = writeln!(text, "products:");
    for (ai, a) in f.generators.iter().enumerate() {
        for b in f.generators.iter().skip(ai) {
            let n = (a.index + b.index) as usize;
            if n > common.max_degree {
                continue;
            }
            let pa = f.chern_class(a.irrep, a.index)?;
            let pb = f.chern_class(b.irrep, b.index)?;
            let prod = f.graded_mul(&pa, &pb)?;
            let order = f.additive_order(&prod)?;
            let coords: Vec<u64> = prod
                .coords
                .iter()
                .map(|c| u64::try_from(c).unwrap())
                .collect();
            let (na, nb) = (
                format!("c{}(chi{})", a.index, a.irrep),
                format!("c{}(chi{})", b.index, b.irrep),
            );
            let _ = writeln!(
                text,
                "  {na} * {nb} = {coords:?} in degree {n} (order {order})"
            );
            products_json.push(json!({
                "a": na,
                "b": nb,
                "degree": n,
                "coords": coords,
                "order": u64::try_from(&order).unwrap(),
            }));
        }
    }

    let report = json!({
        "group": group.label(),
        "field": field.to_string(),
        "max_degree": common.max_degree,
        "degrees": degree_blocks,
        "checks": { "products": products_json },
    });
    emit(common.format, &report, text.trim_end());
    Ok(true)
}

fn verification_json(report: &VerificationReport) -> Value {
    json!({
        "per_degree": report.degrees.iter().map(|d| json!({
            "n": d.degree,
            "computed": invariants_json(&d.computed),
            "presented": invariants_json(&d.presented),
            "surjective": d.surjective,
            "relations_vanish": d.relations_vanish,
            "invariants_match": d.invariants_match,
            "pass": d.pass(),
        })).collect::<Vec<_>>(),
        "pass": report.pass,
    })
}

fn verification_text(report: &VerificationReport, text: &mut String) {
    for d in &report.degrees {
        let _ = writeln!(
            text,
            "degree {}: computed {}, presented {}, surjective {}, relations vanish {} -> {}",
            d.degree,
            d.computed,
            d.presented,
            d.surjective,
            d.relations_vanish,
            if d.pass() { "pass" } else { "FAIL" }
        );
    }
    let _ = writeln!(
        text,
        "verdict: {}",
        if report.pass { "pass" } else { "FAIL" }
    );
}

fn cmd_verify(common: CommonArgs, path: String, field: Field) -> Result<bool, Error> {
    let group = make_group_with(&common.group, common.force)?;
    let table = build_table(&group, field)?;
    let f = GammaFiltration::compute(&table, common.max_degree)?;
    let raw = std::fs::read_to_string(&path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    let pres = Presentation::from_json(&raw)?;
    let report = f.verify_presentation(&pres)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "presentation check for {} over {} up to degree {}",
        group.label(),
        field,
        common.max_degree
    );
    verification_text(&report, &mut text);
    let json_report = json!({
        "group": group.label(),
        "field": field.to_string(),
        "max_degree": common.max_degree,
        "degrees": Vec::<Value>::new(),
        "checks": verification_json(&report),
    });
    emit(common.format, &json_report, text.trim_end());
    Ok(report.pass)
}

fn cmd_kunneth(
    g1: &str,
    g2: &str,
    max_degree: usize,
    format: Format,
    force: bool,
) -> Result<bool, Error> {
    let a = make_group_with(g1, force)?;
    let b = make_group_with(g2, force)?;
    let report = kunneth_check(&a, &b, max_degree)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "tensor comparison for {} x {} (orders {}, {}; coprime: {})",
        a.label(),
        b.label(),
        a.order(),
        b.order(),
        report.coprime
    );
    for d in &report.degrees {
        let _ = writeln!(
            text,
            "degree {}: product {}, tensor {} -> {}",
            d.degree,
            d.product_side,
            d.tensor_side,
            if d.matches { "match" } else { "MISMATCH" }
        );
    }
    let _ = writeln!(
        text,
        "verdict: {}",
        if report.all_match {
            "match"
        } else {
            "MISMATCH"
        }
    );
    let json_report = json!({
        "group": format!("{}x{}", a.label(), b.label()),
        "field": "C",
        "max_degree": max_degree,
        "degrees": Vec::<Value>::new(),
        "checks": {
            "coprime": report.coprime,
            "per_degree": report.degrees.iter().map(|d| json!({
                "n": d.degree,
                "product": invariants_json(&d.product_side),
                "tensor": invariants_json(&d.tensor_side),
                "match": d.matches,
            })).collect::<Vec<_>>(),
            "all_match": report.all_match,
        },
    });
    emit(format, &json_report, text.trim_end());
    Ok(report.all_match)
}

fn cmd_quillen(common: CommonArgs, prime: u64) -> Result<bool, Error> {
    let group = make_group_with(&common.group, common.force)?;
    let table = complex_table(&group)?;
    let f = GammaFiltration::compute(&table, common.max_degree)?;
    let report = quillen_check(&group, prime, &f, common.max_degree)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "mod-{prime} comparison for {} up to degree {}",
        group.label(),
        common.max_degree
    );
    let _ = writeln!(text, "graded algebra dims: {:?}", report.gr_dims);
    let _ = writeln!(text, "truncated poly dims: {:?}", report.poly_dims);
    for n in 1..=common.max_degree {
        let _ = writeln!(
            text,
            "degree {n}: filtration maps in {}, degreewise onto {}",
            report.well_defined[n - 1],
            report.surjective[n - 1]
        );
    }
    let _ = writeln!(
        text,
        "verdict: {}",
        if report.pass { "pass" } else { "FAIL" }
    );
    let json_report = json!({
        "group": group.label(),
        "field": "C",
        "max_degree": common.max_degree,
        "degrees": Vec::<Value>::new(),
        "checks": {
            "p": prime,
            "well_defined": report.well_defined,
            "surjective": report.surjective,
            "gr_dims": report.gr_dims,
            "poly_dims": report.poly_dims,
            "dims_match": report.dims_match,
            "pass": report.pass,
        },
    });
    emit(common.format, &json_report, text.trim_end());
    Ok(report.pass)
}

fn cmd_valuation(common: CommonArgs) -> Result<bool, Error> {
    let group = make_group_with(&common.group, common.force)?;
    let table = complex_table(&group)?;
    let f = GammaFiltration::compute(&table, common.max_degree)?;
    let report = continuity_check(&f)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "evaluation valuations for {} at p = {}",
        group.label(),
        report.prime
    );
    for pair in &report.pairs {
        let _ = writeln!(
            text,
            "  v_{}(chi{}(class {}) - deg) = {}",
            report.prime, pair.irrep, pair.class, pair.valuation
        );
    }
    for (n, v) in report.per_degree_min.iter().enumerate() {
        let _ = writeln!(text, "degree {}: minimum evaluation valuation {}", n + 1, v);
    }
    let _ = writeln!(
        text,
        "all pairs positive: {}",
        if report.all_positive { "yes" } else { "NO" }
    );
    let json_report = json!({
        "group": group.label(),
        "field": "C",
        "max_degree": common.max_degree,
        "degrees": Vec::<Value>::new(),
        "checks": {
            "p": report.prime,
            "pairs": report.pairs.iter().map(|p| json!({
                "irrep": p.irrep,
                "class": p.class,
                "valuation": p.valuation.to_string(),
            })).collect::<Vec<_>>(),
            "per_degree_min": report.per_degree_min.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "all_positive": report.all_positive,
        },
    });
    emit(common.format, &json_report, text.trim_end());
    Ok(report.all_positive)
}

fn cmd_eval(
    common: CommonArgs,
    expr: &str,
    at: &str,
    prime: Option<u64>,
    field: Field,
) -> Result<bool, Error> {
    let group = make_group_with(&common.group, common.force)?;
    let table = build_table(&group, field)?;
    let vc = parse_character_expr(&table, expr)?;
    let element = group.element_by_name(at)?;
    let value = evaluate(&vc, element);
    let prime = prime.or_else(|| group.p_group_prime());
    let valuation = match prime {
        Some(p) => Some(eval_valuation(&vc, element, p)?),
        None => None,
    };
    let mut text = String::new();
    let _ = writeln!(text, "{} at {} = {}", expr, at, value);
    if let (Some(p), Some(v)) = (prime, &valuation) {
        let _ = writeln!(text, "v_{p} = {v}");
    }
    let json_report = json!({
        "group": group.label(),
        "field": field.to_string(),
        "max_degree": common.max_degree,
        "degrees": Vec::<Value>::new(),
        "checks": {
            "expr": expr,
            "at": at,
            "value": value.to_string(),
            "conductor": value.conductor(),
            "coeffs": value.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "valuation": valuation.as_ref().map(ToString::to_string),
        },
    });
    emit(common.format, &json_report, text.trim_end());
    Ok(true)
}

fn cmd_experiment(
    exponent: u32,
    max_degree: usize,
    format: Format,
    force: bool,
) -> Result<bool, Error> {
    let order = 1u64 << exponent;
    let expr = format!("C{order}xC2");
    let group = make_group_with(&expr, force)?;
    let table = complex_table(&group)?;
    let needed = exponent as usize + 2;
    if max_degree < needed {
        return Err(Error::InvalidInput(format!(
            "max degree {max_degree} too small; the candidate relation lives in degree {needed}"
        )));
    }
    let f = GammaFiltration::compute(&table, max_degree)?;
    // coordinate characters via the duality pairing
    let duals = dual_elements(&table)?;
    let orders = cyclic_factor_orders(&group)?;
    let stride0 = orders[1] as usize;
    let x_row = duals.iter().position(|&e| e == stride0).unwrap();
    let y_row = duals.iter().position(|&e| e == 1).unwrap();
    let doc = PresentationDoc {
        generators: vec![
            GeneratorSpec {
                name: "x".into(),
                degree: 1,
                irrep: x_row,
                chern_index: 1,
            },
            GeneratorSpec {
                name: "y".into(),
                degree: 1,
                irrep: y_row,
                chern_index: 1,
            },
        ],
        relations: vec![
            format!("{order}*x"),
            "2*y".into(),
            format!("x*y^{} + x^2*y^{}", exponent + 1, exponent),
        ],
    };
    let pres = Presentation::compile(&doc)?;
    let report = f.verify_presentation(&pres)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "experiment: candidate ring Z[x,y]/({}x, 2y, x*y^{} + x^2*y^{}) for {} up to degree {}",
        order,
        exponent + 1,
        exponent,
        group.label(),
        max_degree
    );
    verification_text(&report, &mut text);
    let _ = writeln!(
        text,
        "(exploratory check, not part of the verified results)"
    );
    let json_report = json!({
        "group": group.label(),
        "field": "C",
        "max_degree": max_degree,
        "degrees": Vec::<Value>::new(),
        "checks": verification_json(&report),
    });
    emit(format, &json_report, text.trim_end());
    Ok(report.pass)
}
