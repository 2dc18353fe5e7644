//! Command-line calculator for partition and tableau combinatorics:
//! Schur-function products and skew expansions, single Littlewood-
//! Richardson coefficients, lattice-filling enumeration, jeu de taquin,
//! tableau switching, the two-sided normal form, word rewriting, operator
//! components, Kostka numbers, and a cross-check between the counting and
//! polynomial evaluation routes.
//!
//! All domain objects use the same textual grammar as the library:
//! partitions `[4,2,1]`, skew shapes `[4,2,1]/[2,2]`, tableaux
//! `2:0,1|0:1,2`, words `4 0 1 5`. Every command prints deterministic
//! plain text, or a structured document under `--json`.
//!
//! Exit codes: 0 success, 1 oracle disagreement, 2 malformed input,
//! 3 violated precondition, 4 resource cap exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tabcalc_core::coplactic::{
    coplactic_component, dominant_normal_form_word, format_word, lower, parse_word, raise,
    rob, rob_inverse, Policy, StepKind, DEFAULT_VERTEX_CAP,
};
use tabcalc_core::jdt::{dual_equivalent, rectify, switch};
use tabcalc_core::lr::{kostka, lr_coefficient, schur_product, skew_expand, SchurExpansion};
use tabcalc_core::polyoracle::{multiply, schur_monomials, to_schur_basis};
use tabcalc_core::shapes::{product_shape, Partition, SkewShape};
use tabcalc_core::tableaux::{bender_knuth, companion, SkewTableau, Weight};
use tabcalc_core::Error;

#[derive(Parser)]
#[command(
    name = "tabcalc",
    version,
    about = "Littlewood-Richardson coefficients, Schur expansions, and tableau transformations"
)]
struct Cli {
    /// Emit structured JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the product of two Schur functions over Schur functions.
    Mult {
        /// First partition, e.g. `[4,3,1]`.
        lambda: String,
        /// Second partition, e.g. `[2,2,1]`.
        mu: String,
        /// Keep only expansion shapes with at most N parts.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Expand a skew Schur function over Schur functions.
    Skew {
        /// Skew shape, e.g. `[4,2,1]/[2,2]` (the inner part may be omitted).
        shape: String,
        /// Keep only expansion shapes with at most N parts.
        #[arg(long)]
        n: Option<usize>,
    },
    /// A single Littlewood-Richardson coefficient: `coef χ ν` counts the
    /// lattice fillings of the skew shape χ with weight ν, and
    /// `coef λ μ ν` the multiplicity of ν in the product λ·μ.
    Coef {
        first: String,
        second: String,
        third: Option<String>,
    },
    /// List the lattice (0-dominant) fillings of a skew shape.
    Lrtab {
        /// Skew shape, e.g. `[3,2,1]/[1]`.
        shape: String,
        /// Only fillings of this weight.
        #[arg(long)]
        weight: Option<String>,
        /// Only letters below N.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Rectify a skew tableau by inward jeu de taquin slides.
    Rect {
        /// Tableau, e.g. 2:0,1|0:1,2.
        tableau: String,
    },
    /// Switch a tableau pair: S fills a straight shape, T sits outside it;
    /// prints T moved inward, then S moved outward.
    Switch {
        s: String,
        t: String,
    },
    /// The two-sided normal form of a tableau: its raising normal form,
    /// then its rectification.
    Rob {
        tableau: String,
    },
    /// Invert the two-sided normal form: rebuild the unique tableau with
    /// the given raising normal form L and rectification P.
    Unrob {
        l: String,
        p: String,
    },
    /// Rewrite a word: apply one raising or lowering operator, or reduce
    /// to the dominant normal form.
    Word {
        /// What to do with the word.
        #[arg(value_enum)]
        op: WordOp,
        /// Space-separated letters, e.g. "4 0 1 5 2".
        word: String,
        /// Alphabet size; all letters must be below N.
        #[arg(long)]
        n: usize,
        /// Operator index i for raise (i+1 → i) and lower (i → i+1).
        #[arg(long, required_if_eq_any([("op", "raise"), ("op", "lower")]))]
        index: Option<usize>,
        /// Which applicable operator the normal form picks at each step.
        #[arg(long, value_enum, default_value = "min")]
        policy: PolicyArg,
    },
    /// Explore the full raising/lowering component of a word.
    Crystal {
        /// Space-separated letters.
        word: String,
        /// Alphabet size; operators range over indices 0..N-1.
        #[arg(long)]
        n: usize,
        /// Print `vertices=V same_weight=W` instead of every word.
        #[arg(long)]
        stats: bool,
        /// Abort with a resource error beyond this many vertices.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The Kostka number: fillings of a partition shape with a given weight.
    Kostka {
        lambda: String,
        mu: String,
    },
    /// Expand λ·μ through both the counting route and the polynomial
    /// route in N variables and report whether they agree.
    Oracle {
        lambda: String,
        mu: String,
        #[arg(long)]
        n: usize,
    },
    /// Apply the elementary weight-swap involution exchanging the counts
    /// of letters k and k+1.
    Bk {
        tableau: String,
        k: usize,
    },
    /// The companion tableau of a filling that is dominant over κ.
    Companion {
        tableau: String,
        kappa: String,
    },
    /// Decide whether two equal-shape tableaux are dual equivalent.
    Dual {
        s1: String,
        s2: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WordOp {
    Raise,
    Lower,
    Nf,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Min,
    Max,
}

/// A successful command: the plain-text rendering, the JSON rendering,
/// and the exit status (nonzero only for a failed oracle comparison).
struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Outcome { text, json, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", outcome.json);
            } else if !outcome.text.is_empty() {
                println!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            let (name, code) = match err.category() {
                tabcalc_core::error::ErrorCategory::Parse => ("parse", 2),
                tabcalc_core::error::ErrorCategory::Precondition => ("precondition", 3),
                tabcalc_core::error::ErrorCategory::Resource => ("resource", 4),
            };
            if cli.json {
                println!("{}", json!({ "error": { "category": name, "message": err.to_string() } }));
            }
            eprintln!("error[{name}]: {err}");
            ExitCode::from(code)
        }
    }
}

fn run(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Mult { lambda, mu, n } => {
            let expansion = restrict(schur_product(&partition(lambda)?, &partition(mu)?), *n);
            Ok(expansion_outcome(&expansion))
        }
        Command::Skew { shape, n } => {
            let expansion = skew_expand(&skew_shape(shape)?, *n);
            Ok(expansion_outcome(&expansion))
        }
        Command::Coef { first, second, third } => {
            let count = match third {
                Some(nu) => lr_coefficient(
                    &product_shape(&partition(first)?, &partition(second)?),
                    &partition(nu)?,
                )?,
                None => lr_coefficient(&skew_shape(first)?, &partition(second)?)?,
            };
            Ok(Outcome::new(count.to_string(), json!({ "coefficient": count })))
        }
        Command::Lrtab { shape, weight, n } => {
            let shape = skew_shape(shape)?;
            let weight = weight.as_deref().map(partition).transpose()?;
            let fillings: Vec<String> =
                tabcalc_core::tableaux::enumerate_lr(&shape, weight.as_ref(), *n)
                    .map(|t| t.to_string())
                    .collect();
            Ok(Outcome::new(fillings.join("\n"), json!({ "tableaux": fillings })))
        }
        Command::Rect { tableau } => Ok(tableau_outcome(&rectify(&parse_tableau(tableau)?).0)),
        Command::Switch { s, t } => {
            let (first, second) = switch(&parse_tableau(s)?, &parse_tableau(t)?)?;
            Ok(Outcome::new(
                format!("{first}\n{second}"),
                json!({ "first": first.to_string(), "second": second.to_string() }),
            ))
        }
        Command::Rob { tableau } => {
            let (l, p) = rob(&parse_tableau(tableau)?);
            Ok(Outcome::new(
                format!("{l}\n{p}"),
                json!({ "normal_form": l.to_string(), "rectification": p.to_string() }),
            ))
        }
        Command::Unrob { l, p } => {
            Ok(tableau_outcome(&rob_inverse(&parse_tableau(l)?, &parse_tableau(p)?)?))
        }
        Command::Word { op, word, n, index, policy } => {
            let w = bounded_word(word, *n)?;
            match op {
                WordOp::Raise | WordOp::Lower => {
                    let i = index.expect("clap requires --index for raise and lower");
                    let (name, result) = match op {
                        WordOp::Raise => ("raising", raise(&w, i)),
                        _ => ("lowering", lower(&w, i)),
                    };
                    let out = result.ok_or_else(|| Error::Incompatible {
                        msg: format!("{name} operator {i} is undefined on this word"),
                    })?;
                    Ok(Outcome::new(format_word(&out), json!({ "word": out })))
                }
                WordOp::Nf => {
                    let policy = match policy {
                        PolicyArg::Min => Policy::MinIndex,
                        PolicyArg::Max => Policy::MaxIndex,
                    };
                    let (nf, trace) = dominant_normal_form_word(&w, policy);
                    let steps: Vec<Value> = trace
                        .steps
                        .iter()
                        .map(|s| {
                            json!({
                                "op": match s.kind {
                                    StepKind::Raise => "raise",
                                    StepKind::Lower => "lower",
                                },
                                "index": s.index,
                                "position": s.position,
                            })
                        })
                        .collect();
                    Ok(Outcome::new(
                        format!("{}\n{}", format_word(&nf), trace),
                        json!({ "word": nf, "trace": steps }),
                    ))
                }
            }
        }
        Command::Crystal { word, n, stats, cap } => {
            let w = parse_word(word)?;
            let summary = coplactic_component(&w, *n, cap.unwrap_or(DEFAULT_VERTEX_CAP))?;
            if *stats {
                let mut weight = vec![0usize; *n];
                for &x in &w {
                    weight[x] += 1;
                }
                let same = summary.weight_counts.get(&weight).copied().unwrap_or(0);
                Ok(Outcome::new(
                    format!("vertices={} same_weight={}", summary.vertices.len(), same),
                    json!({ "vertices": summary.vertices.len(), "same_weight": same }),
                ))
            } else {
                let words: Vec<String> = summary.vertices.iter().map(|v| format_word(v)).collect();
                let edges: Vec<Value> = summary
                    .edges
                    .iter()
                    .map(|e| json!({ "from": e.from, "index": e.index, "to": e.to }))
                    .collect();
                Ok(Outcome::new(
                    words.join("\n"),
                    json!({ "vertices": summary.vertices, "edges": edges }),
                ))
            }
        }
        Command::Kostka { lambda, mu } => {
            let count = kostka(&partition(lambda)?, &Weight::from(&partition(mu)?))?;
            Ok(Outcome::new(count.to_string(), json!({ "coefficient": count })))
        }
        Command::Oracle { lambda, mu, n } => {
            let lambda = partition(lambda)?;
            let mu = partition(mu)?;
            let counting = restrict(schur_product(&lambda, &mu), Some(*n));
            let left = schur_monomials(&SkewShape::from(lambda), *n)?;
            let right = schur_monomials(&SkewShape::from(mu), *n)?;
            let polynomial = to_schur_basis(&multiply(&left, &right)?)?;
            let agree = counting.terms().collect::<Vec<_>>()
                == polynomial.terms().collect::<Vec<_>>();
            if agree {
                Ok(Outcome::new(
                    format!("AGREE: {counting}"),
                    json!({ "agree": true, "expansion": expansion_terms(&counting) }),
                ))
            } else {
                Ok(Outcome {
                    text: format!("DISAGREE: counting={counting} polynomial={polynomial}"),
                    json: json!({
                        "agree": false,
                        "counting": expansion_terms(&counting),
                        "polynomial": expansion_terms(&polynomial),
                    }),
                    code: 1,
                })
            }
        }
        Command::Bk { tableau, k } => Ok(tableau_outcome(&bender_knuth(&parse_tableau(tableau)?, *k))),
        Command::Companion { tableau, kappa } => {
            Ok(tableau_outcome(&companion(&parse_tableau(tableau)?, &partition(kappa)?)?))
        }
        Command::Dual { s1, s2 } => {
            let equivalent = dual_equivalent(&parse_tableau(s1)?, &parse_tableau(s2)?)?;
            Ok(Outcome::new(
                equivalent.to_string(),
                json!({ "dual_equivalent": equivalent }),
            ))
        }
    }
}

fn partition(text: &str) -> Result<Partition, Error> {
    text.parse()
}

fn skew_shape(text: &str) -> Result<SkewShape, Error> {
    text.parse()
}

fn parse_tableau(text: &str) -> Result<SkewTableau, Error> {
    text.parse()
}

/// Parses a word and enforces the alphabet bound.
fn bounded_word(text: &str, n: usize) -> Result<Vec<usize>, Error> {
    let w = parse_word(text)?;
    if let Some(&bad) = w.iter().find(|&&x| x >= n) {
        return Err(Error::Incompatible {
            msg: format!("letter {bad} is outside the alphabet of size {n}"),
        });
    }
    Ok(w)
}

/// Drops expansion terms with more than `n` parts (no-op without a bound).
fn restrict(expansion: SchurExpansion, n: Option<usize>) -> SchurExpansion {
    match n {
        None => expansion,
        Some(n) => {
            let mut out = SchurExpansion::new(expansion.degree());
            for (key, coeff) in expansion.terms() {
                if key.len() <= n {
                    out.add(key.clone(), coeff.clone());
                }
            }
            out
        }
    }
}

fn expansion_outcome(expansion: &SchurExpansion) -> Outcome {
    Outcome::new(
        expansion.to_string(),
        json!({ "expansion": expansion_terms(expansion) }),
    )
}

/// The JSON form of an expansion: `[{"partition": [...], "coeff": N}, ...]`
/// in the same descending key order as the textual form.
fn expansion_terms(expansion: &SchurExpansion) -> Vec<Value> {
    expansion
        .terms()
        .map(|(key, coeff)| {
            json!({
                "partition": key.parts(),
                "coeff": json_number(coeff),
            })
        })
        .collect()
}

/// Renders an integer of any width as a JSON number, digit-exact.
fn json_number(value: impl std::fmt::Display) -> Value {
    serde_json::from_str::<serde_json::Number>(&value.to_string())
        .expect("integers are valid JSON numbers")
        .into()
}

fn tableau_outcome(tableau: &SkewTableau) -> Outcome {
    Outcome::new(tableau.to_string(), json!({ "tableau": tableau.to_string() }))
}
