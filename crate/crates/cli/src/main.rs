use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use kmcone::cone::{Cone, SaturationMode};
use kmcone::repmult::{b0, tensor_multiplicity, Outcome};
use kmcone::selfcheck::{self, Scale};
use kmcone::syntax::{format_weight, parse_weight};
use kmcone::{Rat, RootData, StructureTable};

const EXIT_UNDECIDED: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "kmcone", version, about = "Tensor cones of untwisted affine Kac-Moody algebras")]
struct Cli {
    /// Worker threads for the parallel table builds (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Serialize)]
struct TypeArg {
    /// Cartan type such as `A1~`, `C2~`, `G2~`.
    #[arg(long = "type")]
    cartan_type: String,
}

#[derive(Args, Serialize)]
struct Triple {
    #[arg(long, allow_hyphen_values = true)]
    lambda1: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda2: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Stretch,
    Shift,
}

#[derive(Subcommand)]
enum Command {
    /// List the inequalities indexed by the truncated structure table.
    Inequalities {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Decide membership of a triple in the saturated tensor cone.
    Member {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 24)]
        max_len: usize,
        #[command(flatten)]
        triple: Triple,
    },
    /// Tensor product multiplicity of `L(mu)` in `L(lambda1) x L(lambda2)`.
    Multiplicity {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 8)]
        depth: i64,
        #[command(flatten)]
        triple: Triple,
    },
    /// Largest `b` with `L(mu + b delta)` a constituent, and the shape of
    /// the support below it. The delta coefficient of `mu` is ignored.
    B0 {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 6)]
        depth: i64,
        #[command(flatten)]
        triple: Triple,
    },
    /// Check a saturation statement on a triple.
    Saturate {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 24)]
        max_len: usize,
        #[arg(long, default_value_t = 16)]
        depth: i64,
        #[arg(long, default_value_t = 2)]
        d: i64,
        #[arg(long, value_enum, default_value_t = Mode::Stretch)]
        mode: Mode,
        #[command(flatten)]
        triple: Triple,
    },
    /// Schubert structure constants of the affine flag variety.
    StructureConstants {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Run the acceptance checks.
    Selfcheck {
        /// Use the full acceptance configuration.
        #[arg(long)]
        full: bool,
    },
}

impl Command {
    fn config(&self) -> Value {
        match self {
            Command::Inequalities { ty, max_len } => {
                json!({"command": "inequalities", "type": ty.cartan_type, "max_len": max_len})
            }
            Command::Member { ty, max_len, triple } => {
                json!({"command": "member", "type": ty.cartan_type, "max_len": max_len, "triple": triple})
            }
            Command::Multiplicity { ty, depth, triple } => {
                json!({"command": "multiplicity", "type": ty.cartan_type, "depth": depth, "triple": triple})
            }
            Command::B0 { ty, depth, triple } => {
                json!({"command": "b0", "type": ty.cartan_type, "depth": depth, "triple": triple})
            }
            Command::Saturate { ty, max_len, depth, d, mode, triple } => json!({
                "command": "saturate", "type": ty.cartan_type, "max_len": max_len, "depth": depth,
                "d": d, "mode": mode, "triple": triple,
            }),
            Command::StructureConstants { ty, max_len } => {
                json!({"command": "structure-constants", "type": ty.cartan_type, "max_len": max_len})
            }
            Command::Selfcheck { full } => json!({"command": "selfcheck", "full": full}),
        }
    }
}

struct Report {
    result: Value,
    code: u8,
}

impl Report {
    fn ok(result: Value) -> Self {
        Report { result, code: 0 }
    }
}

fn data(ty: &TypeArg) -> kmcone::Result<RootData> {
    RootData::parse(&ty.cartan_type)
}

fn weights(d: &RootData, t: &Triple) -> kmcone::Result<[kmcone::Weight; 3]> {
    Ok([parse_weight(d, &t.lambda1)?, parse_weight(d, &t.lambda2)?, parse_weight(d, &t.mu)?])
}

fn outcome_code(o: &Outcome) -> u8 {
    match o {
        Outcome::Value(_) => 0,
        Outcome::Undecided { .. } => EXIT_UNDECIDED,
    }
}

fn execute(cmd: &Command) -> kmcone::Result<Report> {
    match cmd {
        Command::Inequalities { ty, max_len } => {
            let cone = Cone::new(&data(ty)?, *max_len)?;
            Ok(Report::ok(json!({"count": cone.indices.len(), "inequalities": cone.inequalities_json()})))
        }
        Command::Member { ty, max_len, triple } => {
            let d = data(ty)?;
            let [l1, l2, mu] = weights(&d, triple)?;
            let cone = Cone::new(&d, *max_len)?;
            let rep = cone.is_member(&l1, &l2, &mu)?;
            Ok(Report::ok(rep.to_json(&cone)))
        }
        Command::Multiplicity { ty, depth, triple } => {
            let d = data(ty)?;
            let [l1, l2, mu] = weights(&d, triple)?;
            let out = tensor_multiplicity(&d, &l1, &l2, &mu, *depth)?;
            let result = json!({
                "lambda1": format_weight(&d, &l1),
                "lambda2": format_weight(&d, &l2),
                "mu": format_weight(&d, &mu),
                "multiplicity": out.to_json(),
            });
            Ok(Report { result, code: outcome_code(&out) })
        }
        Command::B0 { ty, depth, triple } => {
            let d = data(ty)?;
            let [l1, l2, mu] = weights(&d, triple)?;
            let mu_bar = mu.with_delta(Rat::zero());
            let rep = b0(&d, &l1, &l2, &mu_bar, *depth)?;
            let code = if rep.undecided.is_empty() { 0 } else { EXIT_UNDECIDED };
            Ok(Report { result: rep.to_json(), code })
        }
        Command::Saturate { ty, max_len, depth, d: dd, mode, triple } => {
            let d = data(ty)?;
            let [l1, l2, mu] = weights(&d, triple)?;
            let cone = Cone::new(&d, *max_len)?;
            let mode = match mode {
                Mode::Stretch => SaturationMode::Stretch { d: *dd },
                Mode::Shift => SaturationMode::Shift { d: *dd },
            };
            let rep = cone.saturation_check(&l1, &l2, &mu, mode, *depth)?;
            let code = match rep.confirmed() {
                None => EXIT_UNDECIDED,
                Some(true) => 0,
                Some(false) if rep.membership.in_cone() => EXIT_INTERNAL,
                Some(false) => 0,
            };
            Ok(Report { result: rep.to_json(&d), code })
        }
        Command::StructureConstants { ty, max_len } => {
            Ok(Report::ok(StructureTable::compute(&data(ty)?, *max_len)?.to_json()))
        }
        Command::Selfcheck { full } => {
            let checks = selfcheck::run(if *full { Scale::Full } else { Scale::Quick });
            for c in &checks {
                eprintln!("{}", c.line());
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            let result = json!({"failed": failed, "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>()});
            Ok(Report { result, code: if failed == 0 { 0 } else { EXIT_INTERNAL } })
        }
    }
}

fn emit(doc: &Value, out: Option<&PathBuf>) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("serializable") + "\n";
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    }
    let config = cli.command.config();
    match execute(&cli.command) {
        Ok(rep) => {
            let doc = json!({"config": config, "result": rep.result});
            if let Err(e) = emit(&doc, cli.out.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(rep.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
