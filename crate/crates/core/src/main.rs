use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use convex_curves::developable::{
    convexity_check, developable_degree_search_with_bound, ConvexityVerdict, IncidencePoly,
    DEFAULT_LINE_BOUND,
};
use convex_curves::error::Error;
use convex_curves::json::{
    chain_to_dto, curve_to_dto, dto_to_curve, dto_to_line, dto_to_mat, dto_to_subspace,
    four_lines_report_to_dto, line_to_dto, mat_to_dto, trigpoly_to_dto,
    unipoly_to_dto, CurveDto, GridDto, SubspaceDto,
};
use convex_curves::matrix::MatQ;
use convex_curves::projective::{lines_skew, rnc_tangent_line, CurveSpec, LineP3};
use convex_curves::rat::{format_rat, parse_rat, rat, rat_i, Rat};
use convex_curves::schubert::{
    counterexample, four_lines_solve, sharp, symbolic_counterexample_discriminant,
    SYMBOLIC_NAMES,
};
use convex_curves::totalpos::{
    is_tnn, is_tp, line_limit_under_flow, product_along_word, tp_violation, ReducedWord,
    UniUpper,
};
use convex_curves::wronski::inverse_wronski4;

/// Exact real Schubert problems for lines in projective 3-space and
/// convexity certificates for projective curves.
#[derive(Parser)]
#[command(name = "convex-curves", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the zero-real-transversals configuration end to end and
    /// compare every value against the built-in expected constants.
    Counterexample,
    /// Solve the four-lines problem for a JSON file of four lines.
    Fourlines {
        /// JSON file: array of four lines, each two rows of four "p/q" strings.
        #[arg(long)]
        input: String,
    },
    /// Total positivity / nonnegativity verdict for a unit upper-triangular matrix.
    TpCheck {
        /// JSON file: square grid of "p/q" strings.
        #[arg(long)]
        matrix: String,
    },
    /// Sample products along the staircase reduced word with random
    /// positive parameters and verify total positivity.
    TpRandom {
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "CONVEX_CURVES_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Tangent lines of the twisted cubic at the given parameters.
    RncTangents {
        /// Comma-separated rational parameters, e.g. "0,1,1/2,-3".
        #[arg(long)]
        params: String,
    },
    /// Histogram of real transversal counts over random tangent-line 4-tuples.
    RealityScan {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "CONVEX_CURVES_SEED", default_value_t = 0)]
        seed: u64,
        /// Emit the histogram as CSV instead of JSON.
        #[arg(long, default_value_t = false)]
        csv: bool,
    },
    /// Wronskian of a polynomial subspace given as a JSON file.
    Wronskian {
        #[arg(long)]
        input: String,
    },
    /// Both pencils of cubics whose Wronskian vanishes at four given roots.
    InverseWronski {
        /// Comma-separated distinct rational roots, e.g. "0,1,2,3".
        #[arg(long)]
        roots: String,
    },
    /// Randomized lower-bound search for the degree of a curve's tangent developable.
    DevDegree {
        /// "rnc" or a curve JSON file.
        #[arg(long, default_value = "rnc")]
        curve: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, env = "CONVEX_CURVES_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_LINE_BOUND)]
        bound: i64,
    },
    /// Hyperplane-multiplicity convexity check.
    Convexity {
        /// "rnc" or a curve JSON file.
        #[arg(long, default_value = "rnc")]
        curve: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, env = "CONVEX_CURVES_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Degree of the Grassmannian of projective k-planes in projective n-space.
    Sharp {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    /// Malformed input or file problem: exit code 2.
    Usage(String),
    /// Mathematical precondition failure: structured JSON, exit code 1.
    Math(Error),
    /// Golden-value mismatch in the counterexample reproduction.
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed JSON in {path}: {e}")))
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>, Failure> {
    s.split(',')
        .map(|piece| {
            parse_rat(piece).map_err(|_| Failure::Usage(format!("bad rational {piece:?}")))
        })
        .collect()
}

fn load_curve(spec: &str) -> Result<CurveSpec, Failure> {
    if spec == "rnc" {
        return Ok(CurveSpec::Rnc);
    }
    let dto: CurveDto = read_json(spec)?;
    Ok(dto_to_curve(&dto)?)
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            emit(&json!({ "error": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => {
            eprintln!("error: counterexample reproduction deviates from the expected constants");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Counterexample => cmd_counterexample(),
        Command::Fourlines { input } => cmd_fourlines(&input),
        Command::TpCheck { matrix } => cmd_tp_check(&matrix),
        Command::TpRandom { m, trials, seed } => cmd_tp_random(m, trials, seed),
        Command::RncTangents { params } => cmd_rnc_tangents(&params),
        Command::RealityScan { trials, seed, csv } => cmd_reality_scan(trials, seed, csv),
        Command::Wronskian { input } => cmd_wronskian(&input),
        Command::InverseWronski { roots } => cmd_inverse_wronski(&roots),
        Command::DevDegree {
            curve,
            trials,
            seed,
            bound,
        } => cmd_dev_degree(&curve, trials, seed, bound),
        Command::Convexity {
            curve,
            trials,
            seed,
        } => cmd_convexity(&curve, trials, seed),
        Command::Sharp { k, n } => {
            println!("{}", sharp(k, n)?);
            Ok(())
        }
    }
}

fn cmd_counterexample() -> Result<(), Failure> {
    let data = counterexample()?;
    let [_, _, l3, l4] = &data.lines;

    let (m12, m23) = convex_curves::schubert::counterexample_transitions();
    let m12_tp = is_tp(&m12)?;
    let m23_tp = is_tp(&m23)?;
    let limit_is_l4 = &line_limit_under_flow(l3) == l4;
    let skew: Vec<Vec<bool>> = (0..4)
        .map(|i| (0..4).map(|j| i != j && lines_skew(&data.lines[i], &data.lines[j])).collect())
        .collect();
    let all_skew = (0..4).all(|i| (0..4).all(|j| i == j || skew[i][j]));

    let dsc = symbolic_counterexample_discriminant();
    let entries = [rat(1, 100), rat(1, 200), rat(1, 500), rat(3, 2), rat_i(1), rat_i(1)];
    let mut specialized = dsc.clone();
    for (i, v) in entries.iter().enumerate() {
        specialized = specialized.substitute_rat(i, v);
    }
    let symbolic_matches =
        specialized.as_constant().as_ref() == Some(&data.report.discriminant);

    let expected_quadric: Vec<String> =
        ["0", "0", "2", "-3", "0", "-3", "6", "0", "0", "0"].map(String::from).to_vec();
    let report_dto = four_lines_report_to_dto(&data.report);
    let matches = m12_tp
        && m23_tp
        && limit_is_l4
        && all_skew
        && report_dto.quadric == expected_quadric
        && report_dto.discriminant == "-2231979/250000"
        && report_dto.real_count == 0
        && symbolic_matches
        && data.report.verified;

    emit(&json!({
        "lines": data.lines.iter().map(line_to_dto).collect::<Vec<_>>(),
        "chain": chain_to_dto(&data.chain),
        "m12_totally_positive": m12_tp,
        "m23_totally_positive": m23_tp,
        "limit_of_l3_is_l4": limit_is_l4,
        "pairwise_skew": skew,
        "quadric": report_dto.quadric,
        "quadric_display": report_dto.quadric_display,
        "restricted": report_dto.restricted,
        "discriminant": report_dto.discriminant,
        "real_count": report_dto.real_count,
        "symbolic_discriminant": dsc.to_string_with(&SYMBOLIC_NAMES),
        "symbolic_specialization_matches": symbolic_matches,
        "matches_expected": matches,
    }));
    if matches {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_fourlines(input: &str) -> Result<(), Failure> {
    let dto: Vec<GridDto> = read_json(input)?;
    if dto.len() != 4 {
        return Err(Failure::Usage(format!("expected four lines, got {}", dto.len())));
    }
    let lines: Vec<LineP3> = dto
        .iter()
        .map(|g| dto_to_line(g))
        .collect::<Result<Vec<_>, Error>>()?;
    let report = four_lines_solve(&lines[0], &lines[1], &lines[2], &lines[3])?;
    emit(&serde_json::to_value(four_lines_report_to_dto(&report)).expect("serializable"));
    Ok(())
}

fn cmd_tp_check(path: &str) -> Result<(), Failure> {
    let grid: GridDto = read_json(path)?;
    let m = UniUpper::new(dto_to_mat(&grid)?)?;
    let tp = is_tp(&m)?;
    let tnn = is_tnn(&m)?;
    let violation = tp_violation(&m)?.map(|v| {
        json!({
            "rows": v.rows,
            "cols": v.cols,
            "value": format_rat(&v.value),
        })
    });
    emit(&json!({
        "totally_positive": tp,
        "totally_nonnegative": tnn,
        "first_violation": violation,
    }));
    Ok(())
}

fn cmd_tp_random(m: usize, trials: usize, seed: u64) -> Result<(), Failure> {
    if !(2..=6).contains(&m) {
        return Err(Failure::Usage(format!("m must be between 2 and 6, got {m}")));
    }
    if trials == 0 {
        return Err(Failure::Math(Error::NoTrials));
    }
    let word = ReducedWord::standard(m);
    let mut all_tp = true;
    let mut sample: Option<MatQ> = None;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial as u64);
        let params: Vec<Rat> = (0..word.len())
            .map(|_| rat(rng.gen_range(1..30), rng.gen_range(1..10)))
            .collect();
        let product = product_along_word(&word, &params)?;
        all_tp &= is_tp(&product)?;
        if trial == 0 {
            sample = Some(product.mat().clone());
        }
    }
    emit(&json!({
        "m": m,
        "trials": trials,
        "seed": seed,
        "word": word.letters(),
        "all_totally_positive": all_tp,
        "first_sample": sample.map(|s| mat_to_dto(&s)),
    }));
    Ok(())
}

fn cmd_rnc_tangents(params: &str) -> Result<(), Failure> {
    let ts = parse_rat_list(params)?;
    if ts.is_empty() {
        return Err(Failure::Usage("no parameters given".into()));
    }
    let tangents: Vec<serde_json::Value> = ts
        .iter()
        .map(|t| {
            json!({
                "t": format_rat(t),
                "line": line_to_dto(&rnc_tangent_line(t)),
            })
        })
        .collect();
    emit(&json!({ "tangents": tangents }));
    Ok(())
}

fn random_distinct_params(rng: &mut ChaCha8Rng) -> [Rat; 4] {
    let mut ts: Vec<Rat> = Vec::new();
    while ts.len() < 4 {
        let t = rat(rng.gen_range(-60..61), rng.gen_range(1..9));
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    ts.try_into().expect("four parameters")
}

fn cmd_reality_scan(trials: usize, seed: u64, csv: bool) -> Result<(), Failure> {
    if trials == 0 {
        return Err(Failure::Math(Error::NoTrials));
    }
    let mut histogram = std::collections::BTreeMap::<usize, usize>::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial as u64);
        let ts = random_distinct_params(&mut rng);
        let ls: Vec<LineP3> = ts.iter().map(rnc_tangent_line).collect();
        let report = four_lines_solve(&ls[0], &ls[1], &ls[2], &ls[3])?;
        *histogram.entry(report.real_count).or_insert(0) += 1;
    }
    if csv {
        println!("real_count,frequency");
        for (count, freq) in &histogram {
            println!("{count},{freq}");
        }
    } else {
        let hist: serde_json::Map<String, serde_json::Value> = histogram
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        emit(&json!({
            "trials": trials,
            "seed": seed,
            "histogram": hist,
        }));
    }
    Ok(())
}

fn cmd_wronskian(input: &str) -> Result<(), Failure> {
    let dto: SubspaceDto = read_json(input)?;
    let s = dto_to_subspace(&dto)?;
    let w = s.wronskian();
    emit(&json!({
        "dimension": s.dim(),
        "degree_bound": s.degree_bound(),
        "wronskian": unipoly_to_dto(&w),
        "wronskian_display": w.to_string(),
    }));
    Ok(())
}

fn cmd_inverse_wronski(roots: &str) -> Result<(), Failure> {
    let ts = parse_rat_list(roots)?;
    let ts: [Rat; 4] = ts
        .try_into()
        .map_err(|v: Vec<Rat>| Failure::Usage(format!("expected four roots, got {}", v.len())))?;
    let report = inverse_wronski4(&ts)?;
    let subspaces: Vec<serde_json::Value> = report
        .subspaces
        .iter()
        .map(|s| {
            let rows: Vec<Vec<convex_curves::json::ExtScalarDto>> = s
                .basis()
                .iter()
                .map(|p| (0..=3).map(|k| convex_curves::json::ext_to_dto(&p.coeff(k))).collect())
                .collect();
            json!({ "basis_coefficients": rows })
        })
        .collect();
    emit(&json!({
        "roots": ts.iter().map(format_rat).collect::<Vec<_>>(),
        "four_lines": four_lines_report_to_dto(&report.four_lines),
        "real_count": report.four_lines.real_count,
        "subspaces": subspaces,
        "wronskian_verified": report.wronskian_verified,
    }));
    Ok(())
}

fn incidence_poly_json(p: &IncidencePoly) -> serde_json::Value {
    match p {
        IncidencePoly::Polynomial(q) => json!({ "polynomial": unipoly_to_dto(q) }),
        IncidencePoly::Trigonometric(q) => json!({ "trigonometric": trigpoly_to_dto(q) }),
    }
}

fn cmd_dev_degree(curve: &str, trials: usize, seed: u64, bound: i64) -> Result<(), Failure> {
    let c = load_curve(curve)?;
    let out = developable_degree_search_with_bound(&c, trials, seed, bound)?;
    emit(&json!({
        "curve": serde_json::to_value(curve_to_dto(&c)).expect("serializable"),
        "trials": out.trials,
        "seed": out.seed,
        "bound": bound,
        "generic_samples": out.generic_samples,
        "max_count": out.max_count,
        "witness_trial": out.witness_trial,
        "witness_line": line_to_dto(&out.witness.line),
        "witness_incidence": incidence_poly_json(&out.witness.poly),
    }));
    Ok(())
}

fn cmd_convexity(curve: &str, trials: usize, seed: u64) -> Result<(), Failure> {
    let c = load_curve(curve)?;
    let verdict = convexity_check(&c, trials, seed)?;
    let value = match verdict {
        ConvexityVerdict::ConvexConsistent { trials } => json!({
            "verdict": "convex-consistent",
            "trials": trials,
            "seed": seed,
        }),
        ConvexityVerdict::NotConvex {
            hyperplane,
            multiplicity,
        } => json!({
            "verdict": "not-convex",
            "witness_hyperplane": hyperplane.iter().map(format_rat).collect::<Vec<_>>(),
            "multiplicity": multiplicity,
            "seed": seed,
        }),
    };
    emit(&value);
    Ok(())
}
