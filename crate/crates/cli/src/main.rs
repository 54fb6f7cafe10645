use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deligne_kit::blocks::{b_set, block_sequence, classify, gamma_q, BlockPosition};
use deligne_kit::characters::{kronecker, mn_character, reduced_kronecker};
use deligne_kit::delta_complex::{derived_gamma, derived_gamma_straightened, EquivariantComplex};
use deligne_kit::diagram::{x_r, Morphism, Relation, SetPartitionDiagram};
use deligne_kit::grothendieck::{
    simple_tensor_multiplicity, tensor_in_simples, tensor_in_standards,
    tensor_standard_multiplicity,
};
use deligne_kit::linalg::Matrix;
use deligne_kit::{Caps, DiagramMorphism, Error, Integer, Partition, Rational};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(
    name = "deligne-kit",
    version,
    about = "Exact computations in the Deligne categories Rep(S_t)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CapArgs {
    /// Largest n for partition enumeration.
    #[arg(long, env = "DK_CAP_N", global = true)]
    cap_n: Option<usize>,
    /// Largest k for the x_R recursion.
    #[arg(long, env = "DK_CAP_BELL", global = true)]
    cap_bell: Option<usize>,
    /// Largest n tried while looking for a Kronecker plateau.
    #[arg(long, env = "DK_STAB_MAX", global = true)]
    cap_stab: Option<usize>,
    /// Largest arity for partial pairings.
    #[arg(long, env = "DK_CAP_PAIRING", global = true)]
    cap_pairing: Option<usize>,
    /// Largest number of matrix entries for evalN.
    #[arg(long, env = "DK_CAP_EVAL", global = true)]
    cap_eval: Option<usize>,
    /// Largest n of a Delta complex.
    #[arg(long, env = "DK_CAP_COMPLEX_N", global = true)]
    cap_complex_n: Option<usize>,
    /// Largest N of a Delta complex.
    #[arg(long, env = "DK_CAP_COMPLEX_BIG_N", global = true)]
    cap_complex_big_n: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            partition_n: self.cap_n.unwrap_or(d.partition_n),
            bell_k: self.cap_bell.unwrap_or(d.bell_k),
            stab_max: self.cap_stab.unwrap_or(d.stab_max),
            pairing_arity: self.cap_pairing.unwrap_or(d.pairing_arity),
            eval_entries: self.cap_eval.unwrap_or(d.eval_entries),
            complex_n: self.cap_complex_n.unwrap_or(d.complex_n),
            complex_big_n: self.cap_complex_big_n.unwrap_or(d.complex_big_n),
        }
    }
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn diagram(s: &str) -> Result<SetPartitionDiagram, String> {
    s.parse::<SetPartitionDiagram>().map_err(|e| e.to_string())
}

fn relation(s: &str) -> Result<Relation, String> {
    s.parse::<Relation>().map_err(|e| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum TensorBasis {
    Standard,
    Simple,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaRule {
    Hook,
    Straightened,
}

#[derive(Subcommand)]
enum Command {
    /// Character value χ_λ(ρ).
    Charval {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        rho: Partition,
    },
    /// Kronecker coefficient g_{λμν}.
    Kron {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        nu: Partition,
    },
    /// Reduced Kronecker coefficient.
    Rkron {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        tau: Partition,
    },
    /// Composite g ∘ f of two diagrams.
    Compose {
        #[arg(long, value_parser = diagram)]
        g: SetPartitionDiagram,
        #[arg(long, value_parser = diagram)]
        f: SetPartitionDiagram,
    },
    /// The idempotent x_R of an equivalence relation, e.g. "[[1,2],[3]]".
    Xr {
        #[arg(long, value_parser = relation)]
        relation: Relation,
    },
    /// Matrix of a diagram or of x_R at t = N.
    #[command(name = "evalN")]
    EvalN {
        #[arg(long, value_parser = diagram, conflicts_with = "relation", required_unless_present = "relation")]
        diagram: Option<SetPartitionDiagram>,
        #[arg(long, value_parser = relation)]
        relation: Option<Relation>,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Block of λ at t and the sequence of its base.
    Blocks {
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        /// Largest index of the printed sequence.
        #[arg(long, default_value_t = 3)]
        length: usize,
    },
    /// The index set B^t_μ.
    Bset {
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = partition)]
        mu: Partition,
    },
    /// Indecomposable summands of Γ_t(Q_λ).
    Gammaq {
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = partition)]
        lambda: Partition,
    },
    /// Cohomology table of the complex K_{n,N}.
    Kcomplex {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        /// Keep only the part computing the derived specialization of L_μ.
        #[arg(long, value_parser = partition)]
        mu: Option<Partition>,
    },
    /// Derived specialization of L_μ to S_N.
    Dgamma {
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, value_enum, default_value_t = GammaRule::Hook)]
        rule: GammaRule,
    },
    /// Tensor product multiplicities of L_λ ⊗ L_μ or M_λ ⊗ M_μ.
    Tensor {
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        tau: Option<Partition>,
        #[arg(long, value_enum, default_value_t = TensorBasis::Simple)]
        basis: TensorBasis,
        /// Treat t as generic: every block is semisimple.
        #[arg(long)]
        generic: bool,
    },
    /// λ[n], the partition with a first row prepended.
    Pad {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Hooks of μ with vertex in row one.
    Hooks {
        #[arg(long, value_parser = partition)]
        mu: Partition,
    },
}

fn int(x: &Integer) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn rational(x: &Rational) -> Value {
    if x.is_integer() {
        int(x.numer())
    } else {
        json!(x.to_string())
    }
}

fn morphism_json(m: &DiagramMorphism) -> Value {
    let terms: Vec<Value> = m
        .terms()
        .iter()
        .map(|(d, c)| json!({ "diagram": d.to_string(), "coeffs": c.coeffs().iter().map(int).collect::<Vec<_>>() }))
        .collect();
    json!({ "source": m.source(), "target": m.target(), "terms": terms })
}

fn matrix_json(m: &Matrix<Rational>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(rational).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "matrix": rows })
}

fn value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library values serialize")
}

fn run(command: &Command, caps: &Caps) -> deligne_kit::Result<Value> {
    Ok(match command {
        Command::Charval { lambda, rho } => json!({ "value": mn_character(lambda, rho)? as i64 }),
        Command::Kron { lambda, mu, nu } => json!({ "value": kronecker(lambda, mu, nu)? }),
        Command::Rkron { lambda, mu, tau } => {
            json!({ "value": reduced_kronecker(lambda, mu, tau, caps)? })
        }
        Command::Compose { g, f } => {
            let g: DiagramMorphism = Morphism::from_diagram(g.clone());
            let f: DiagramMorphism = Morphism::from_diagram(f.clone());
            morphism_json(&g.compose(&f)?)
        }
        Command::Xr { relation } => morphism_json(&x_r::<Integer>(relation, caps)?),
        Command::EvalN {
            diagram,
            relation,
            big_n,
        } => {
            let m: DiagramMorphism = match (diagram, relation) {
                (Some(d), _) => Morphism::from_diagram(d.clone()),
                (None, Some(r)) => x_r(r, caps)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            matrix_json(&m.evaluate_at(*big_n, caps)?)
        }
        Command::Blocks { t, lambda, length } => {
            let position = classify(lambda, *t);
            let sequence = match &position {
                BlockPosition::Semisimple { partition } => vec![partition.clone()],
                BlockPosition::NonSemisimple { base, .. } => block_sequence(base, *t, *length)?,
            };
            json!({ "position": value(&position), "sequence": value(&sequence) })
        }
        Command::Bset { t, mu } => json!({ "bset": value(&b_set(mu, *t)) }),
        Command::Gammaq { t, lambda } => json!({ "mult": value(&gamma_q(lambda, *t)) }),
        Command::Kcomplex { n, big_n, mu } => {
            let cx = EquivariantComplex::build(*n, *big_n, caps)?;
            let table = match mu {
                Some(mu) => {
                    if mu.size() != *n {
                        return Err(Error::SizeMismatch(format!(
                            "{mu} is not a partition of {n}"
                        )));
                    }
                    let conj = mu.transpose();
                    cx.cohomology_filtered(|a| *a == conj)
                }
                None => cx.cohomology(),
            };
            let mut out = Map::new();
            for (k, h) in table.iter().enumerate().rev() {
                out.insert(format!("-{k}"), value(h));
            }
            Value::Object(out)
        }
        Command::Dgamma { mu, big_n, rule } => match rule {
            GammaRule::Hook => value(&derived_gamma(mu, *big_n)),
            GammaRule::Straightened => value(&derived_gamma_straightened(mu, *big_n)),
        },
        Command::Tensor {
            t,
            lambda,
            mu,
            tau,
            basis,
            generic,
        } => tensor(*t, lambda, mu, tau.as_ref(), *basis, *generic, caps)?,
        Command::Pad { lambda, n } => json!({ "value": value(&lambda.pad(*n)?) }),
        Command::Hooks { mu } => json!({ "hooks": value(&mu.row1_hooks()) }),
    })
}

fn tensor(
    t: Option<usize>,
    lambda: &Partition,
    mu: &Partition,
    tau: Option<&Partition>,
    basis: TensorBasis,
    generic: bool,
    caps: &Caps,
) -> deligne_kit::Result<Value> {
    let simple_t = match (basis, generic, t) {
        (TensorBasis::Standard, _, _) | (_, true, _) => None,
        (TensorBasis::Simple, false, Some(t)) => Some(t),
        (TensorBasis::Simple, false, None) => {
            return Err(Error::PreconditionViolated(
                "--basis simple needs --t (or --generic)".into(),
            ))
        }
    };
    let mut mult = Map::new();
    match (tau, simple_t) {
        (Some(tau), Some(t)) => {
            let v = simple_tensor_multiplicity(lambda, mu, tau, t, caps)?;
            mult.insert(tau.to_string(), json!(v));
        }
        (Some(tau), None) => {
            let v = tensor_standard_multiplicity(lambda, mu, tau, caps)?;
            mult.insert(tau.to_string(), json!(v));
        }
        (None, Some(t)) => {
            for (p, c) in tensor_in_simples(lambda, mu, t, caps)?.terms() {
                mult.insert(p.to_string(), json!(c));
            }
        }
        (None, None) => {
            for (p, c) in tensor_in_standards(lambda, mu, caps)?.terms() {
                mult.insert(p.to_string(), json!(c));
            }
        }
    }
    Ok(json!({ "mult": mult }))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::StabilizationNotReached { .. } => 4,
        _ => 2,
    }
}

/// One `key: value` line per leaf, nested keys joined by dots.
fn text(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                text(x, &key, out);
            }
        }
        leaf => {
            let shown = match leaf {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            if prefix.is_empty() {
                out.push_str(&format!("{shown}\n"));
            } else {
                out.push_str(&format!("{prefix}: {shown}\n"));
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = cli.caps.caps();
    match run(&cli.command, &caps) {
        Ok(v) => {
            match cli.format {
                Format::Json => println!("{v}"),
                Format::Text => {
                    let mut s = String::new();
                    text(&v, "", &mut s);
                    print!("{s}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
