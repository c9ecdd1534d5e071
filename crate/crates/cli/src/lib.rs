//! The `focktiles` command line: argument parsing, text and JSON rendering, batch queries and
//! the acceptance-suite driver.

pub mod verify;

use std::io::BufRead;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use focktiles::abacus::{core_quotient_weight, Abacus, BlockId};
use focktiles::beadops::{
    lambda_of_hook, move_along_traced, move_one_traced, mullineux_crystal, mullineux_fast_traced, trace_json,
};
use focktiles::canonical::{closed_g, inductive_g, rouquier_column, rouquier_d, Llt};
use focktiles::fock::FockVector;
use focktiles::labels::{hat_z, hooks_e, modified_basis, z_label};
use focktiles::polytope::{build_tiling, d_closed, pi_membership, Parallelotope};
use focktiles::{Error, LaurentPoly, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "focktiles", version, about = "Abacus labels, parallelotope tilings and q-decomposition numbers")]
pub struct Cli {
    /// Number of abacus runners.
    #[arg(long, global = true, default_value_t = 2)]
    pub e: usize,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Llt,
    Rouquier,
    Inductive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Crystal,
    Fast,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The e-core.
    Core { lambda: Partition },
    /// The e-quotient, runner by runner.
    Quotient { lambda: Partition },
    /// The label z(λ).
    Zlabel { lambda: Partition },
    /// The lifted label ẑ(λ).
    Hatz { lambda: Partition },
    /// The modified basis vectors ε_1..ε_w.
    Epsilon { lambda: Partition },
    /// The vertices of Π(λ), or the index set Γ of a label or partition in it.
    Pi {
        lambda: Partition,
        /// A partition μ, tested through z(μ).
        mu: Option<Partition>,
        /// A label such as "1,2,3".
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        label: Option<Vec<i64>>,
    },
    /// d_{λμ}(q); without arguments, reads "lambda;mu" lines from standard input.
    Dnum {
        lambda: Option<Partition>,
        mu: Option<Partition>,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// The column G(μ).
    Gcolumn {
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Llt)]
        method: Method,
    },
    /// The block of a partition, or of --core and --weight.
    Block {
        lambda: Option<Partition>,
        #[arg(long)]
        core: Option<Partition>,
        #[arg(long)]
        weight: Option<usize>,
        /// List the members with their labels.
        #[arg(long)]
        members: bool,
    },
    /// The tiling of a block by the parallelotopes Π(λ).
    Tiling {
        #[arg(long)]
        core: Partition,
        #[arg(long)]
        weight: usize,
        /// Region parameter: labels are taken m-increasing.
        #[arg(long, default_value_t = 4)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The Mullineux image λ*.
    Mullineux {
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Algo::Crystal)]
        algo: Algo,
    },
    /// The move along one modified basis vector ε_r (1-based r).
    Moveone { lambda: Partition, r: usize },
    /// The move along ε_Γ for a comma-separated set Γ of 1-based indices.
    Movealong {
        lambda: Partition,
        #[arg(value_delimiter = ',')]
        gamma: Vec<usize>,
    },
    /// λ_H for the e-divisible rimhook attached to the r-th bead movement.
    Lambdah { lambda: Partition, r: usize },
    /// Runs acceptance suites: all, or one of ac1..ac9.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

/// The outcome of a command: exit code and the bytes written to standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

/// Parses `argv` (including the program name) and runs it, reading batch input from `stdin`.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = err.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if cli.e < 2 {
        return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: "error: --e must be at least 2\n".into() };
    }
    match execute(&cli, stdin) {
        Ok(out) => out,
        Err(err) => Outcome { code: EXIT_DOMAIN, stdout: String::new(), stderr: format!("error: {err}\n") },
    }
}

fn list(p: &Partition) -> String {
    let items: Vec<String> = p.parts().iter().map(u32::to_string).collect();
    format!("[{}]", items.join(","))
}

fn label(z: &[i64]) -> String {
    let items: Vec<String> = z.iter().map(i64::to_string).collect();
    format!("[{}]", items.join(","))
}

fn render(cli: &Cli, text: String, value: Value) -> String {
    if cli.json {
        format!("{value}\n")
    } else {
        format!("{text}\n")
    }
}

fn column_text(v: &FockVector) -> String {
    v.terms().rev().map(|(l, c)| format!("{} {c}", list(l))).collect::<Vec<_>>().join("\n")
}

fn d_value(lambda: &Partition, mu: &Partition, e: usize, method: Method) -> focktiles::Result<(LaurentPoly, Option<String>)> {
    match method {
        Method::Closed => {
            let v = d_closed(lambda, mu, e);
            let note = (!v.hypothesis).then(|| format!("note: {mu} is not 4-increasing; the closed formula may differ from d"));
            Ok((v.value, note))
        }
        Method::Llt => Ok((Llt::new(e).g(mu)?.pairing(lambda), None)),
        Method::Rouquier => Ok((rouquier_d(lambda, mu, &BlockId::of(mu, e))?, None)),
        Method::Inductive => Ok((inductive_g(mu, e)?.pairing(lambda), None)),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn BufRead) -> focktiles::Result<Outcome> {
    let e = cli.e;
    let out = match &cli.command {
        Command::Core { lambda } => {
            let (core, _, w) = core_quotient_weight(lambda, e);
            render(cli, list(&core), json!({"core": core.parts(), "weight": w}))
        }
        Command::Quotient { lambda } => {
            let quot = Abacus::of(lambda, e).quotient();
            let text = format!("[{}]", quot.iter().map(list).collect::<Vec<_>>().join(","));
            render(cli, text, json!(quot.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>()))
        }
        Command::Zlabel { lambda } => {
            let z = z_label(lambda, e);
            render(cli, label(&z), json!(z))
        }
        Command::Hatz { lambda } => {
            let h = hat_z(lambda, e);
            let upper: Vec<String> = h.upper.iter().map(|(&(i, j), v)| format!("{v}·e_{},{}", i + 1, j + 1)).collect();
            let text = if upper.is_empty() { label(&h.diag) } else { format!("{} + {}", label(&h.diag), upper.join(" + ")) };
            render(cli, text, h.to_json())
        }
        Command::Epsilon { lambda } => {
            let basis = modified_basis(lambda, e)?;
            let text = basis.plain().iter().map(|v| label(v)).collect::<Vec<_>>().join("\n");
            let value = json!(basis
                .vectors
                .iter()
                .map(|v| json!({"index": v.i + 1, "partner": v.partner.map(|p| p + 1), "vector": v.plain(basis.w)}))
                .collect::<Vec<_>>());
            render(cli, text, value)
        }
        Command::Pi { lambda, mu, label: target } => {
            let p = Parallelotope::of(lambda, e)?;
            let target = match (mu, target) {
                (Some(m), _) => Some(z_label(m, e)),
                (None, Some(z)) => Some(z.clone()),
                (None, None) => None,
            };
            match target {
                None => {
                    let vertices = p.vertices();
                    let text = vertices.iter().map(|v| label(v)).collect::<Vec<_>>().join("\n");
                    render(cli, text, json!(vertices))
                }
                Some(z) => {
                    let gamma = pi_membership(lambda, &z, e)?;
                    let text = match &gamma {
                        Some(g) => format!("{} Γ={}", label(&z), label(&g.iter().map(|&i| i as i64).collect::<Vec<_>>())),
                        None => format!("{} not in Π", label(&z)),
                    };
                    render(cli, text, json!({"label": z, "gamma": gamma}))
                }
            }
        }
        Command::Dnum { lambda, mu, method } => match (lambda, mu) {
            (Some(lambda), Some(mu)) => {
                let (d, note) = d_value(lambda, mu, e, *method)?;
                let stderr = note.map(|n| format!("{n}\n")).unwrap_or_default();
                return Ok(Outcome { code: EXIT_OK, stdout: render(cli, d.to_string(), d.to_json()), stderr });
            }
            (None, None) => return batch_dnum(cli, *method, stdin),
            _ => return Err(Error::Parse("dnum needs both λ and μ, or none for batch input".into())),
        },
        Command::Gcolumn { mu, method } => {
            let g = match method {
                Method::Llt => Llt::new(e).g(mu)?,
                Method::Inductive => inductive_g(mu, e)?,
                Method::Closed => closed_g(mu, e),
                Method::Rouquier => rouquier_column(mu, &BlockId::of(mu, e))?,
            };
            render(cli, column_text(&g), g.to_json())
        }
        Command::Block { lambda, core, weight, members } => {
            let b = match (lambda, core, weight) {
                (Some(l), None, None) => BlockId::of(l, e),
                (None, Some(c), Some(w)) => BlockId::new(e, c.clone(), *w)?,
                _ => return Err(Error::Parse("block needs a partition, or --core with --weight".into())),
            };
            let all = b.enumerate();
            let mut text = format!(
                "e={} core={} weight={} size={} members={} rouquier={} levels={}",
                b.e,
                list(&b.core),
                b.weight,
                b.core.size() + b.e * b.weight,
                all.len(),
                b.is_rouquier(),
                label(&b.levels())
            );
            let rows: Vec<Value> = all.iter().map(|l| json!({"partition": l.parts(), "z": z_label(l, e)})).collect();
            if *members {
                for l in &all {
                    text.push_str(&format!("\n{} {}", list(l), label(&z_label(l, e))));
                }
            }
            let mut value = json!({
                "e": b.e, "core": b.core.parts(), "weight": b.weight, "members": all.len(),
                "rouquier": b.is_rouquier(), "levels": b.levels(),
            });
            if *members {
                value["partitions"] = Value::Array(rows);
            }
            render(cli, text, value)
        }
        Command::Tiling { core, weight, m, format } => {
            let b = BlockId::new(e, core.clone(), *weight)?;
            let t = build_tiling(&b, *m);
            match format {
                Format::Json => format!("{}\n", t.to_json()),
                Format::Svg => t.to_svg()?,
            }
        }
        Command::Mullineux { lambda, algo } => match algo {
            Algo::Crystal => {
                let image = mullineux_crystal(lambda, e)?;
                render(cli, list(&image), json!({"partition": image.parts()}))
            }
            Algo::Fast => {
                let (image, trace) = mullineux_fast_traced(lambda, e)?;
                render(cli, list(&image), json!({"partition": image.parts(), "trace": trace_json(&trace)}))
            }
        },
        Command::Moveone { lambda, r } => {
            let tr = move_one_traced(lambda, *r, e)?;
            let value = json!({
                "partition": tr.result.parts(), "z": z_label(&tr.result, e), "b": tr.b, "q": tr.q,
                "g": tr.g, "sigma": tr.sigma.parts(), "k": tr.k, "l": tr.l, "landings": tr.landings,
            });
            render(cli, list(&tr.result), value)
        }
        Command::Movealong { lambda, gamma } => {
            let (mu, trace) = move_along_traced(lambda, gamma, e)?;
            let text = trace
                .iter()
                .map(|s| format!("{} r={} {} {}", s.step, s.r, list(&s.partition), label(&s.z)))
                .chain(std::iter::once(list(&mu)))
                .collect::<Vec<_>>()
                .join("\n");
            render(cli, text, json!({"partition": mu.parts(), "trace": trace_json(&trace)}))
        }
        Command::Lambdah { lambda, r } => {
            let hooks = hooks_e(lambda, e);
            let hook = hooks
                .get(r.wrapping_sub(1))
                .ok_or_else(|| Error::Domain(format!("{lambda} has {} e-divisible rimhooks", hooks.len())))?;
            let mu = lambda_of_hook(lambda, hook, e)?;
            render(cli, list(&mu), json!({"partition": mu.parts(), "hook_size": hook.size, "z": z_label(&mu, e)}))
        }
        Command::Verify { suite } => return Ok(run_verify(cli, suite)),
    };
    Ok(Outcome::ok(out))
}

fn batch_dnum(cli: &Cli, method: Method, stdin: &mut dyn BufRead) -> focktiles::Result<Outcome> {
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut code = EXIT_OK;
    for (n, line) in stdin.lines().enumerate() {
        let line = line.map_err(|err| Error::Parse(format!("reading line {}: {err}", n + 1)))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed = line
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("line {}: expected \"lambda;mu\"", n + 1)))
            .and_then(|(l, m)| Ok((l.parse::<Partition>()?, m.parse::<Partition>()?)));
        match parsed.and_then(|(l, m)| d_value(&l, &m, cli.e, method).map(|d| (l, m, d.0))) {
            Ok((l, m, d)) => {
                if cli.json {
                    stdout.push_str(&format!("{}\n", json!({"lambda": l.parts(), "mu": m.parts(), "d": d.to_json()})));
                } else {
                    stdout.push_str(&format!("{d}\n"));
                }
            }
            Err(err) => {
                code = EXIT_DOMAIN;
                stderr.push_str(&format!("line {}: {err}\n", n + 1));
                stdout.push_str(if cli.json { "null\n" } else { "error\n" });
            }
        }
    }
    Ok(Outcome { code, stdout, stderr })
}

fn run_verify(cli: &Cli, suite: &str) -> Outcome {
    let names: Vec<&str> = if suite.eq_ignore_ascii_case("all") { verify::SUITES.to_vec() } else { vec![suite] };
    let mut stdout = String::new();
    let mut code = EXIT_OK;
    for name in names {
        let Some(report) = verify::run_suite(name) else {
            return Outcome {
                code: EXIT_USAGE,
                stdout,
                stderr: format!("error: unknown suite {name:?}; expected all or one of {}\n", verify::SUITES.join(", ")),
            };
        };
        if !report.passed() {
            code = EXIT_DOMAIN;
        }
        if cli.json {
            let value = json!({
                "suite": report.id, "passed": report.passed(), "checks": report.checks,
                "failures": report.failures, "seconds": report.elapsed.as_secs_f64(),
            });
            stdout.push_str(&format!("{value}\n"));
        } else {
            stdout.push_str(&format!("{report}\n"));
        }
    }
    Outcome { code, stdout, stderr: String::new() }
}

/// Caps the global thread pool at `FOCKTILES_THREADS` when the variable holds a positive integer.
pub fn configure_threads() -> Result<(), String> {
    match std::env::var("FOCKTILES_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().map_err(|_| format!("FOCKTILES_THREADS must be a positive integer, got {v:?}"))?;
            if n == 0 {
                return Err("FOCKTILES_THREADS must be a positive integer, got 0".into());
            }
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|err| err.to_string())
        }
        Err(_) => Ok(()),
    }
}
