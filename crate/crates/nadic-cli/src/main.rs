//! `nadic` — exact queries against the redistributed measure and its base
//! pairs: far numbers, pair classification, doubling audits, and divergence
//! witnesses. All computation is exact; decimal columns are rendered by long
//! division for display only.

#![allow(clippy::result_large_err)]

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nadic::exact::{decimal_approx, parse_rational, set_factor_bound};
use nadic::farness::{far_constant, is_far};
use nadic::measure::{
    cdf, density, doubling_audit, doubling_ratio_set, measure_interval, non_doubling_witness,
    overlap_mass, unit_cells, MeasureSpec,
};
use nadic::pairs::{classify_pair, is_solvable, lift_to_good, PairClassification};
use nadic::witness::{divergence_sweep, separate_families, DivergenceWitness};
use nadic::{Error, Result};

use render::{Report, Table};

const FACTOR_BOUND_ENV: &str = "NADIC_FACTOR_BOUND";

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Csv,
    Json,
}

fn biguint_arg(text: &str) -> std::result::Result<BigUint, String> {
    text.trim()
        .parse::<BigUint>()
        .map_err(|_| format!("`{text}` is not a nonnegative integer"))
}

fn rational_arg(text: &str) -> std::result::Result<BigRational, String> {
    parse_rational(text)
}

#[derive(Parser)]
#[command(
    name = "nadic",
    version,
    about = "Exact n-adic doubling measures, far numbers, and divergence witnesses",
    after_help = "Rationals are written as `p/q` or plain integers. Exit codes: \
                  0 success, 1 domain error, 2 usage error. Set NADIC_FACTOR_BOUND \
                  to override the factorization input bound (default 2^63)."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Parser)]
struct MeasureArgs {
    /// Measure base (2 is promoted to 4)
    #[arg(long = "n", value_parser = biguint_arg)]
    base: BigUint,
    /// Weight of leftmost children, 0 < a < 1
    #[arg(long = "a", value_parser = rational_arg, default_value = "1/2")]
    left_weight: BigRational,
    /// Weight of rightmost children, b = 2 - a
    #[arg(long = "b", value_parser = rational_arg, default_value = "3/2")]
    right_weight: BigRational,
}

impl MeasureArgs {
    fn spec(&self) -> Result<MeasureSpec> {
        MeasureSpec::new(
            self.base.clone(),
            self.left_weight.clone(),
            self.right_weight.clone(),
        )
    }

    fn inputs(&self) -> Vec<(String, String)> {
        vec![
            ("n".into(), self.base.to_string()),
            ("a".into(), self.left_weight.to_string()),
            ("b".into(), self.right_weight.to_string()),
        ]
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a base pair: dependent, far, or good lift
    Classify {
        #[arg(value_parser = biguint_arg)]
        n: BigUint,
        #[arg(value_parser = biguint_arg)]
        m: BigUint,
    },
    /// Is delta n-far?
    Far {
        #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
        delta: BigRational,
        #[arg(value_parser = biguint_arg)]
        n: BigUint,
    },
    /// The exact optimal far constant of delta against base n
    FarConstant {
        #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
        delta: BigRational,
        #[arg(value_parser = biguint_arg)]
        n: BigUint,
    },
    /// Solvability of k/m^(level-1) = 1/n^level
    Solvable {
        #[arg(value_parser = biguint_arg)]
        m: BigUint,
        #[arg(value_parser = biguint_arg)]
        n: BigUint,
    },
    /// Lift a semi-good pair to a good pair
    Lift {
        #[arg(value_parser = biguint_arg)]
        m: BigUint,
        #[arg(value_parser = biguint_arg)]
        n: BigUint,
    },
    /// Exact density of the measure at a point
    Density {
        #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
        x: BigRational,
        #[command(flatten)]
        measure: MeasureArgs,
    },
    /// Exact cumulative mass F(x) = mu([0, x))
    Cdf {
        #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
        x: BigRational,
        #[command(flatten)]
        measure: MeasureArgs,
    },
    /// Exact mass of [p, q)
    Measure {
        #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
        p: BigRational,
        #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
        q: BigRational,
        #[command(flatten)]
        measure: MeasureArgs,
    },
    /// Maximum child-mass ratio over all base-n intervals in range
    AuditDoubling {
        #[command(flatten)]
        measure: MeasureArgs,
        /// Levels 0..depth are audited
        #[arg(long, default_value_t = 8)]
        depth: u64,
        /// Audit intervals inside [0, range)
        #[arg(long, default_value_t = 4)]
        range: u64,
    },
    /// The symmetric interval at an integer whose half masses blow up
    AuditNondoubling {
        #[command(flatten)]
        measure: MeasureArgs,
        /// The integer point to flank
        #[arg(long)]
        ell: u64,
    },
    /// One divergence witness for the pair (n, m) at a level
    Witness {
        #[arg(value_parser = biguint_arg)]
        n: BigUint,
        #[arg(value_parser = biguint_arg)]
        m: BigUint,
        #[arg(long)]
        ell: u64,
        /// Weight of leftmost children
        #[arg(long = "a", value_parser = rational_arg, default_value = "1/2")]
        left_weight: BigRational,
        /// Weight of rightmost children
        #[arg(long = "b", value_parser = rational_arg, default_value = "3/2")]
        right_weight: BigRational,
    },
    /// Witnesses for a range of levels, as a table
    Sweep {
        #[arg(value_parser = biguint_arg)]
        n: BigUint,
        #[arg(value_parser = biguint_arg)]
        m: BigUint,
        #[arg(long)]
        ell_from: u64,
        #[arg(long)]
        ell_to: u64,
        #[arg(long = "a", value_parser = rational_arg, default_value = "1/2")]
        left_weight: BigRational,
        #[arg(long = "b", value_parser = rational_arg, default_value = "3/2")]
        right_weight: BigRational,
    },
    /// Find a base in `ns` separating its doubling class from all of `ms`
    Separate {
        #[arg(long, num_args = 1.., value_parser = biguint_arg)]
        ns: Vec<BigUint>,
        #[arg(long, num_args = 1.., value_parser = biguint_arg)]
        ms: Vec<BigUint>,
        /// Sample levels for the witness sweeps (use levels >= 2)
        #[arg(long, num_args = 1.., default_values_t = [2u64, 6, 10])]
        ells: Vec<u64>,
        #[arg(long = "a", value_parser = rational_arg, default_value = "1/2")]
        left_weight: BigRational,
        #[arg(long = "b", value_parser = rational_arg, default_value = "3/2")]
        right_weight: BigRational,
    },
    /// Check the CDF against the cell-enumeration oracle on random intervals
    OracleCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u32,
        #[command(flatten)]
        measure: MeasureArgs,
    },
}

fn rational_row(key: &str, value: &BigRational) -> [(String, String); 2] {
    [
        (key.to_string(), value.to_string()),
        (key.to_string(), decimal_approx(value, 12)),
    ]
}

/// Builds `exact` and `approx` key/value lists in one pass.
struct Fields {
    exact: Vec<(String, String)>,
    approx: Vec<(String, String)>,
}

impl Fields {
    fn new() -> Self {
        Fields {
            exact: Vec::new(),
            approx: Vec::new(),
        }
    }

    fn push_rational(&mut self, key: &str, value: &BigRational) {
        let [e, a] = rational_row(key, value);
        self.exact.push(e);
        self.approx.push(a);
    }

    fn push_plain(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        self.exact.push((key.to_string(), value.clone()));
        self.approx.push((key.to_string(), value));
    }
}

fn witness_table(witnesses: &[DivergenceWitness]) -> Table {
    let rows = witnesses
        .iter()
        .map(|w| {
            vec![
                w.level.to_string(),
                w.case.to_string(),
                w.left.to_string(),
                w.right.to_string(),
                w.ratio.numer().to_string(),
                w.ratio.denom().to_string(),
                decimal_approx(&w.ratio, 12),
                w.lower_bound.numer().to_string(),
                w.lower_bound.denom().to_string(),
            ]
        })
        .collect();
    Table {
        columns: vec![
            "ell",
            "case",
            "left",
            "right",
            "ratio_num",
            "ratio_den",
            "ratio_approx",
            "bound_num",
            "bound_den",
        ],
        rows,
    }
}

fn classification_fields(fields: &mut Fields, classification: &PairClassification) {
    match classification {
        PairClassification::Dependent {
            base,
            m_exponent,
            n_exponent,
        } => {
            fields.push_plain("case", "dependent");
            fields.push_plain("common_base", base);
            fields.push_plain("m_exponent", m_exponent);
            fields.push_plain("n_exponent", n_exponent);
        }
        PairClassification::Far(report) => {
            fields.push_plain("case", "far");
            if let (Some(constant), Some(level)) = (&report.constant, report.witness_level) {
                fields.push_rational("far_constant", constant);
                fields.push_plain("attained_at_level", level);
            }
        }
        PairClassification::GoodLift {
            m_exponent,
            n_exponent,
        } => {
            fields.push_plain("case", "good-lift");
            fields.push_plain("m_exponent", m_exponent);
            fields.push_plain("n_exponent", n_exponent);
        }
    }
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Classify { n, m } => {
            let classification = classify_pair(n, m)?;
            let mut fields = Fields::new();
            classification_fields(&mut fields, &classification);
            let result = match &classification {
                PairClassification::Dependent {
                    base,
                    m_exponent,
                    n_exponent,
                } => format!(
                    "dependent: {m} = {base}^{m_exponent} and {n} = {base}^{n_exponent}"
                ),
                PairClassification::Far(_) => format!("far: 1/{n} is {m}-far"),
                PairClassification::GoodLift {
                    m_exponent,
                    n_exponent,
                } => {
                    let lifted_m = nadic::exact::pow(m, *m_exponent);
                    let lifted_n = nadic::exact::pow(n, *n_exponent);
                    fields.push_plain("lifted_m", &lifted_m);
                    fields.push_plain("lifted_n", &lifted_n);
                    format!(
                        "good lift: ({m}^{m_exponent}, {n}^{n_exponent}) = ({lifted_m}, {lifted_n}) is a good pair"
                    )
                }
            };
            Ok(Report {
                command: "classify",
                inputs: vec![("n".into(), n.to_string()), ("m".into(), m.to_string())],
                result,
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Far { delta, n } => {
            let far = is_far(delta, n)?;
            let mut fields = Fields::new();
            fields.push_plain("far", far);
            Ok(Report {
                command: "far",
                inputs: vec![
                    ("delta".into(), delta.to_string()),
                    ("n".into(), n.to_string()),
                ],
                result: format!("far: {far}"),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::FarConstant { delta, n } => {
            let report = far_constant(delta, n)?;
            let mut fields = Fields::new();
            fields.push_plain("far", report.is_far);
            let result = match (&report.constant, report.witness_level) {
                (Some(constant), Some(level)) => {
                    fields.push_rational("constant", constant);
                    fields.push_plain("attained_at_level", level);
                    format!("far constant: {constant} (attained at level {level})")
                }
                _ => format!("{delta} is not {n}-far; no constant exists"),
            };
            Ok(Report {
                command: "far-constant",
                inputs: vec![
                    ("delta".into(), delta.to_string()),
                    ("n".into(), n.to_string()),
                ],
                result,
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Solvable { m, n } => {
            let solution = is_solvable(m, n)?;
            let mut fields = Fields::new();
            fields.push_plain("solvable", solution.solvable);
            let result = match (&solution.min_level, &solution.k) {
                (Some(level), Some(k)) => {
                    fields.push_plain("min_level", level);
                    fields.push_plain("k", k);
                    format!("solvable: {k}/{m}^{} = 1/{n}^{level}", level - 1)
                }
                _ => format!("unsolvable: k/{m}^(level-1) = 1/{n}^level has no solution"),
            };
            Ok(Report {
                command: "solvable",
                inputs: vec![("m".into(), m.to_string()), ("n".into(), n.to_string())],
                result,
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Lift { m, n } => {
            let (x, y) = lift_to_good(m, n)?;
            let lifted_m = nadic::exact::pow(m, x);
            let lifted_n = nadic::exact::pow(n, y);
            let mut fields = Fields::new();
            fields.push_plain("m_exponent", x);
            fields.push_plain("n_exponent", y);
            fields.push_plain("lifted_m", &lifted_m);
            fields.push_plain("lifted_n", &lifted_n);
            Ok(Report {
                command: "lift",
                inputs: vec![("m".into(), m.to_string()), ("n".into(), n.to_string())],
                result: format!("lift: ({m}^{x}, {n}^{y}) = ({lifted_m}, {lifted_n})"),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Density { x, measure } => {
            let spec = measure.spec()?;
            let value = density(x, &spec);
            let mut fields = Fields::new();
            fields.push_rational("density", &value);
            let mut inputs = vec![("x".into(), x.to_string())];
            inputs.extend(measure.inputs());
            Ok(Report {
                command: "density",
                inputs,
                result: format!("density at {x}: {value}"),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Cdf { x, measure } => {
            let spec = measure.spec()?;
            let value = cdf(x, &spec);
            let mut fields = Fields::new();
            fields.push_rational("cdf", &value);
            let mut inputs = vec![("x".into(), x.to_string())];
            inputs.extend(measure.inputs());
            Ok(Report {
                command: "cdf",
                inputs,
                result: format!("F({x}) = {value}"),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Measure { p, q, measure } => {
            let spec = measure.spec()?;
            let value = measure_interval(p, q, &spec)?;
            let mut fields = Fields::new();
            fields.push_rational("mass", &value);
            let mut inputs = vec![("p".into(), p.to_string()), ("q".into(), q.to_string())];
            inputs.extend(measure.inputs());
            Ok(Report {
                command: "measure",
                inputs,
                result: format!("{value}"),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::AuditDoubling {
            measure,
            depth,
            range,
        } => {
            let spec = measure.spec()?;
            let max = doubling_audit(&spec, *depth, *range)?;
            let ratios = doubling_ratio_set(&spec, *depth, *range)?;
            let mut fields = Fields::new();
            fields.push_rational("max_child_ratio", &max);
            let listed: Vec<String> = ratios.iter().map(|r| r.to_string()).collect();
            fields.push_plain("ratio_set", listed.join(" "));
            let mut inputs = measure.inputs();
            inputs.push(("depth".into(), depth.to_string()));
            inputs.push(("range".into(), range.to_string()));
            Ok(Report {
                command: "audit-doubling",
                inputs,
                result: format!("max child-mass ratio up to depth {depth}: {max}"),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::AuditNondoubling { measure, ell } => {
            let spec = measure.spec()?;
            let witness = non_doubling_witness(&spec, *ell)?;
            let mut fields = Fields::new();
            fields.push_rational("interval_lower", &witness.lower);
            fields.push_rational("interval_upper", &witness.upper);
            fields.push_rational("left_mass", &witness.left_mass);
            fields.push_rational("right_mass", &witness.right_mass);
            fields.push_rational("ratio", &witness.ratio);
            let mut inputs = measure.inputs();
            inputs.push(("ell".into(), ell.to_string()));
            Ok(Report {
                command: "audit-nondoubling",
                inputs,
                result: format!(
                    "halves of [{}, {}) have mass ratio {}",
                    witness.lower, witness.upper, witness.ratio
                ),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Witness {
            n,
            m,
            ell,
            left_weight,
            right_weight,
        } => {
            let sweep = divergence_sweep(n, m, left_weight, right_weight, &[*ell])?;
            let witness = &sweep.witnesses[0];
            let mut fields = Fields::new();
            classification_fields(&mut fields, &sweep.classification);
            fields.push_plain("measure_base", &sweep.measure_base);
            fields.push_plain("target_base", &sweep.target_base);
            fields.push_plain("witness_case", witness.case);
            fields.push_plain("left", &witness.left);
            fields.push_plain("left_endpoints", witness.left.endpoints_string());
            fields.push_plain("right", &witness.right);
            fields.push_plain("right_endpoints", witness.right.endpoints_string());
            fields.push_rational("left_mass", &witness.left_mass);
            fields.push_rational("right_mass", &witness.right_mass);
            fields.push_rational("ratio", &witness.ratio);
            fields.push_rational("lower_bound", &witness.lower_bound);
            Ok(Report {
                command: "witness",
                inputs: vec![
                    ("n".into(), n.to_string()),
                    ("m".into(), m.to_string()),
                    ("ell".into(), ell.to_string()),
                    ("a".into(), left_weight.to_string()),
                    ("b".into(), right_weight.to_string()),
                ],
                result: format!(
                    "witness at level {ell} ({}): sibling masses differ by {}",
                    witness.case, witness.ratio
                ),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
        Command::Sweep {
            n,
            m,
            ell_from,
            ell_to,
            left_weight,
            right_weight,
        } => {
            if ell_from > ell_to {
                return Err(Error::EmptyLevels);
            }
            let levels: Vec<u64> = (*ell_from..=*ell_to).collect();
            let sweep = divergence_sweep(n, m, left_weight, right_weight, &levels)?;
            let mut fields = Fields::new();
            classification_fields(&mut fields, &sweep.classification);
            fields.push_plain("measure_base", &sweep.measure_base);
            fields.push_plain("target_base", &sweep.target_base);
            Ok(Report {
                command: "sweep",
                inputs: vec![
                    ("n".into(), n.to_string()),
                    ("m".into(), m.to_string()),
                    ("ell_from".into(), ell_from.to_string()),
                    ("ell_to".into(), ell_to.to_string()),
                    ("a".into(), left_weight.to_string()),
                    ("b".into(), right_weight.to_string()),
                ],
                result: format!(
                    "{} witnesses for measure base {} against target base {}",
                    sweep.witnesses.len(),
                    sweep.measure_base,
                    sweep.target_base
                ),
                exact: fields.exact,
                approx: fields.approx,
                table: Some(witness_table(&sweep.witnesses)),
            })
        }
        Command::Separate {
            ns,
            ms,
            ells,
            left_weight,
            right_weight,
        } => {
            let report = separate_families(ns, ms, ells, left_weight, right_weight)?;
            let mut fields = Fields::new();
            fields.push_plain("separable", report.separable);
            let joined = |values: &[BigUint]| {
                values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let (result, table) = if report.separable {
                let base = report.chosen_base.clone().expect("separable has a base");
                fields.push_plain("chosen_base", &base);
                let columns = vec![
                    "target",
                    "case",
                    "measure_base",
                    "target_base",
                    "max_ratio_approx",
                ];
                let rows = report
                    .targets
                    .iter()
                    .map(|t| {
                        let case = match &t.sweep.classification {
                            PairClassification::Far(_) => "far".to_string(),
                            PairClassification::GoodLift { .. } => "good-lift".to_string(),
                            PairClassification::Dependent { .. } => "dependent".to_string(),
                        };
                        let max_ratio = t
                            .sweep
                            .witnesses
                            .iter()
                            .map(|w| w.ratio.clone())
                            .max()
                            .unwrap_or_else(BigRational::one);
                        vec![
                            t.target.to_string(),
                            case,
                            t.sweep.measure_base.to_string(),
                            t.sweep.target_base.to_string(),
                            decimal_approx(&max_ratio, 12),
                        ]
                    })
                    .collect();
                (
                    format!(
                        "separable: base {base} is independent of every target; witnesses diverge"
                    ),
                    Some(Table { columns, rows }),
                )
            } else {
                for dep in &report.dependencies {
                    fields.push_plain(
                        &format!("common_base_{}_{}", dep.n, dep.m),
                        &dep.common_base,
                    );
                }
                (
                    "inseparable: every candidate base shares a power base with some target"
                        .to_string(),
                    None,
                )
            };
            Ok(Report {
                command: "separate",
                inputs: vec![
                    ("ns".into(), joined(ns)),
                    ("ms".into(), joined(ms)),
                    (
                        "ells".into(),
                        ells.iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                    ),
                ],
                result,
                exact: fields.exact,
                approx: fields.approx,
                table,
            })
        }
        Command::OracleCheck {
            seed,
            cases,
            measure,
        } => {
            let spec = measure.spec()?;
            let mut cells = Vec::new();
            for unit in 0..6 {
                cells.extend(unit_cells(unit, &spec));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut agreed = 0u32;
            for _ in 0..*cases {
                let den_p = rng.gen_range(1..=500i64);
                let den_q = rng.gen_range(1..=500i64);
                let p = BigRational::new(BigInt::from(rng.gen_range(0..6 * den_p)), den_p.into());
                let q = BigRational::new(BigInt::from(rng.gen_range(0..6 * den_q)), den_q.into());
                let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
                let direct = measure_interval(&lo, &hi, &spec)?;
                let oracle = overlap_mass(&cells, &lo, &hi);
                if direct != oracle {
                    return Err(Error::Internal(format!(
                        "oracle mismatch on [{lo}, {hi}): walk {direct} vs cells {oracle}"
                    )));
                }
                agreed += 1;
            }
            let mut fields = Fields::new();
            fields.push_plain("cases", cases);
            fields.push_plain("agreed", agreed);
            let mut inputs = measure.inputs();
            inputs.push(("seed".into(), seed.to_string()));
            inputs.push(("cases".into(), cases.to_string()));
            Ok(Report {
                command: "oracle-check",
                inputs,
                result: format!(
                    "oracle check: {agreed}/{cases} random intervals agree exactly"
                ),
                exact: fields.exact,
                approx: fields.approx,
                table: None,
            })
        }
    }
}

fn main() -> ExitCode {
    if let Ok(text) = std::env::var(FACTOR_BOUND_ENV) {
        match text.parse::<BigUint>() {
            Ok(bound) if !bound.is_zero() => {
                set_factor_bound(bound);
            }
            _ => {
                eprintln!("error: {FACTOR_BOUND_ENV} must be a positive integer, got `{text}`");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Human => report.render_human(),
                Format::Csv => report.render_csv(),
                Format::Json => report.render_json(),
            };
            match &cli.out {
                None => {
                    print!("{rendered}");
                    ExitCode::SUCCESS
                }
                Some(path) => match std::fs::write(path, rendered) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(err) => {
                        eprintln!("error: cannot write {}: {err}", path.display());
                        ExitCode::FAILURE
                    }
                },
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
