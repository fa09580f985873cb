//! The `ubs` command-line front end.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::decompose::{
    compare_components, corrigendum_alternative, decompose, verify_decomposition, DecomposeOptions, Decomposition,
    DEFAULT_MAX_COMPONENTS,
};
use crate::dual::{dual_complex_with, median_check, DualLimits};
use crate::error::{Error, Result};
use crate::generators::{generate, Instance, InstanceSpec};
use crate::hypset::HypSet;
use crate::io::{load_instance, parse_set_text, WallspaceDoc};
use crate::report::{self, envelope, to_json_string};
use crate::scope::Scope;
use crate::ubs::{almost_containment_poset, certify_ubs, is_minimal_ubs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Certify that the designated set is a (minimal) UBS.
    Certify,
    /// Decompose the designated set into minimal UBSs.
    Decompose,
    /// Decompose twice and compare the results.
    Compare,
    /// Build the dual cube complex of a finite truncation.
    Dual,
    /// Almost-containment poset of the given sets.
    Poset,
    /// Print the instance document, with its realized truncation.
    Gen,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "ubs", version, about = "Unidirectional boundary sets of wallspaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Generator spec such as `grid:3`, `corrigendum:5`, `corrigendum:inf`,
    /// `random:8:12`, `planted:low:3`.
    #[arg(long, global = true, conflicts_with = "input")]
    pub gen: Option<String>,
    /// Instance file (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Set literal (JSON); repeat for `poset`. Defaults to the whole ambient.
    #[arg(long = "set", global = true)]
    pub sets: Vec<String>,
    #[arg(long, global = true, default_value_t = 50)]
    pub horizon: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Seed of the second run for `compare` (default: seed + 1).
    #[arg(long, global = true)]
    pub seed2: Option<u64>,
    /// `compare` against the alternative splitting of the counterexample
    /// system instead of a second run.
    #[arg(long, global = true)]
    pub alternative: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COMPONENTS)]
    pub max_components: usize,
    /// Wall budget for `dual`.
    #[arg(long, global = true, default_value_t = 20)]
    pub max_walls: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// What a run produced: the exit code and the rendered report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input { .. } | Error::UnknownWall(_) | Error::OutOfBounds { .. } => EXIT_INPUT,
        Error::Resource { .. } | Error::Undecided(..) => EXIT_RESOURCE,
        Error::Realization { .. } | Error::Precondition { .. } | Error::Consistency { .. } | Error::Cycle(_) => {
            EXIT_FALSIFIED
        }
    }
}

struct Rendered {
    falsified: bool,
    json: serde_json::Value,
    text: String,
    dot: Vec<String>,
}

impl Cli {
    fn label(&self) -> String {
        match (&self.gen, &self.input) {
            (Some(g), _) => g.clone(),
            (None, Some(p)) => p.display().to_string(),
            (None, None) => String::new(),
        }
    }

    fn instance(&self, truncation_walls: usize) -> Result<Instance> {
        if self.horizon < 2 {
            return Err(Error::input("--horizon", "horizon must be at least 2"));
        }
        let mut inst = match (&self.gen, &self.input) {
            (Some(g), None) => generate(
                &InstanceSpec::parse_short(g, self.seed)?,
                self.horizon,
                truncation_walls,
            )?,
            (None, Some(p)) => {
                let text =
                    std::fs::read_to_string(p).map_err(|e| Error::input(p.display().to_string(), e.to_string()))?;
                load_instance(&text, self.horizon, truncation_walls)?
            }
            _ => return Err(Error::input("arguments", "give exactly one of --gen and --input")),
        };
        if self.command != Command::Poset {
            match self.sets.as_slice() {
                [] => {}
                [s] => inst.designated = parse_set_text(s, &inst.ambient)?,
                _ => return Err(Error::input("--set", "only `poset` takes several sets")),
            }
        }
        Ok(inst)
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let rendered = match execute(cli) {
        Ok(r) => r,
        Err(e) => {
            let code = exit_code(&e);
            let output = match cli.format {
                Format::Json => to_json_string(&envelope(
                    &format!("{:?}", cli.command).to_lowercase(),
                    &cli.label(),
                    cli.horizon,
                    cli.seed,
                    "error",
                    json!({ "error": report::error_json(&e) }),
                )),
                _ => format!("error (horizon {}): {e}\n", cli.horizon),
            };
            return Outcome { code, output };
        }
    };
    let code = if rendered.falsified { EXIT_FALSIFIED } else { EXIT_OK };
    let verdict = if rendered.falsified { "falsified" } else { "ok" };
    let output = match cli.format {
        Format::Json => to_json_string(&envelope(
            &format!("{:?}", cli.command).to_lowercase(),
            &cli.label(),
            cli.horizon,
            cli.seed,
            verdict,
            rendered.json,
        )),
        Format::Text => format!("horizon {}\n{}verdict: {verdict}\n", cli.horizon, rendered.text),
        Format::Dot => rendered.dot.concat(),
    };
    Outcome { code, output }
}

fn execute(cli: &Cli) -> Result<Rendered> {
    match cli.command {
        Command::Certify => certify(cli),
        Command::Decompose => run_decompose(cli),
        Command::Compare => compare(cli),
        Command::Dual => dual(cli),
        Command::Poset => poset(cli),
        Command::Gen => gen(cli),
    }
}

fn certify(cli: &Cli) -> Result<Rendered> {
    let inst = cli.instance(0)?;
    let scope = Scope::new(&inst.ambient, cli.horizon)?;
    let ubs = certify_ubs(&inst.designated, &scope)?;
    let min = if ubs.is_ubs() {
        Some(is_minimal_ubs(&inst.designated, &scope)?)
    } else {
        None
    };
    let dimension = inst.ambient.dimension()?;
    let mut text = format!(
        "set {}\nambient {} dimension {dimension}\n",
        inst.designated,
        inst.ambient.describe()
    );
    match ubs.failure() {
        None => text.push_str("UBS: yes\n"),
        Some((msg, w)) => {
            let w: Vec<String> = w.iter().map(|h| h.to_string()).collect();
            text.push_str(&format!("UBS: no ({msg}; witness {})\n", w.join(" ")));
        }
    }
    if let Some(m) = &min {
        text.push_str(&format!(
            "minimal: {}{}\n",
            if m.minimal { "yes" } else { "no" },
            if m.approximate { " (approximate)" } else { "" }
        ));
    }
    Ok(Rendered {
        falsified: !ubs.is_ubs(),
        json: json!({
            "dimension": dimension.to_string(),
            "ubs": report::ubs_json(&ubs),
            "minimality": min.as_ref().map(report::minimality_json),
        }),
        text,
        dot: Vec::new(),
    })
}

fn decomposition_of(cli: &Cli, inst: &Instance, scope: &Scope, seed: u64) -> Result<Decomposition> {
    decompose(
        &inst.designated,
        scope,
        DecomposeOptions {
            seed,
            max_components: cli.max_components,
        },
    )
}

fn run_decompose(cli: &Cli) -> Result<Rendered> {
    let inst = cli.instance(0)?;
    let scope = Scope::new(&inst.ambient, cli.horizon)?;
    let d = decomposition_of(cli, &inst, &scope, cli.seed)?;
    let issues = verify_decomposition(&d, &scope)?;
    Ok(Rendered {
        falsified: !issues.is_empty(),
        json: report::decomposition_json(&d, &issues),
        text: report::decomposition_text(&d, &issues),
        dot: vec![report::prec_graph_dot(&d.prec_graph)],
    })
}

fn compare(cli: &Cli) -> Result<Rendered> {
    let inst = cli.instance(0)?;
    let scope = Scope::new(&inst.ambient, cli.horizon)?;
    let left = decomposition_of(cli, &inst, &scope, cli.seed)?;
    let right = if cli.alternative {
        if inst.designated != inst.ambient.universe() {
            return Err(Error::input(
                "--alternative",
                "the alternative splitting covers the whole ambient only",
            ));
        }
        corrigendum_alternative(&scope, cli.max_components)?
    } else {
        decomposition_of(cli, &inst, &scope, cli.seed2.unwrap_or(cli.seed.wrapping_add(1)))?
    };
    let (l, r) = (left.sets(), right.sets());
    let finite = left.dimension.is_finite() && right.dimension.is_finite();
    let cmp = compare_components(&l, &r, finite);
    Ok(Rendered {
        falsified: !cmp.equal,
        json: json!({
            "comparison": report::comparison_json(&cmp, &l, &r),
            "left_continuation": left.continuation.as_ref().map(|s| s.to_string()),
            "right_continuation": right.continuation.as_ref().map(|s| s.to_string()),
        }),
        text: report::comparison_text(&cmp, &l, &r),
        dot: vec![
            report::prec_graph_dot(&left.prec_graph),
            report::prec_graph_dot(&right.prec_graph),
        ],
    })
}

fn dual(cli: &Cli) -> Result<Rendered> {
    let inst = cli.instance(cli.max_walls.max(1))?;
    let ws = inst.truncation.ok_or_else(|| Error::Resource {
        what: "walls in the truncation".into(),
        limit: cli.max_walls as u64,
        needed: inst.ambient.members_below(cli.horizon).len() as u64,
    })?;
    let sk = dual_complex_with(
        &ws,
        DualLimits {
            max_walls: cli.max_walls,
            ..DualLimits::default()
        },
    )?;
    let median = median_check(&sk).ok();
    Ok(Rendered {
        falsified: median.as_ref().is_some_and(|m| !m.holds()),
        json: report::dual_json(&sk, median.as_ref()),
        text: report::dual_text(&sk, median.as_ref()),
        dot: vec![report::crossing_graph_dot(&ws), report::skeleton_dot(&sk)],
    })
}

fn poset(cli: &Cli) -> Result<Rendered> {
    let inst = cli.instance(0)?;
    let sets: Vec<HypSet> = if cli.sets.is_empty() {
        let scope = Scope::new(&inst.ambient, cli.horizon)?;
        decomposition_of(cli, &inst, &scope, cli.seed)?.sets()
    } else {
        cli.sets
            .iter()
            .enumerate()
            .map(|(k, s)| {
                parse_set_text(s, &inst.ambient).map_err(|e| match e {
                    Error::Input { position, message } => Error::input(format!("--set #{k} {position}"), message),
                    e => e,
                })
            })
            .collect::<Result<_>>()?
    };
    let p = almost_containment_poset(&sets);
    let mut dot = String::from("digraph poset {\n");
    for (a, b) in &p.below {
        dot.push_str(&format!("  {a} -> {b};\n"));
    }
    dot.push_str("}\n");
    Ok(Rendered {
        falsified: false,
        json: report::poset_json(&sets, &p),
        text: report::poset_text(&sets, &p),
        dot: vec![dot],
    })
}

fn gen(cli: &Cli) -> Result<Rendered> {
    let inst = cli.instance(cli.max_walls.max(1))?;
    let truncation = inst.truncation.as_ref().map(WallspaceDoc::from_wallspace);
    let dimension = inst.ambient.dimension()?;
    let text = format!(
        "{} dimension {dimension}, designated {}\ntruncation: {}\n",
        inst.ambient.describe(),
        inst.designated,
        truncation.as_ref().map_or("over budget".to_string(), |t| format!(
            "{} points, {} walls",
            t.points.len(),
            t.walls.len()
        ))
    );
    let dot = inst
        .truncation
        .as_ref()
        .map(report::crossing_graph_dot)
        .into_iter()
        .collect();
    Ok(Rendered {
        falsified: false,
        json: json!({
            "spec": inst.spec,
            "ambient": inst.ambient.describe(),
            "system": inst.ambient.system(),
            "dimension": dimension.to_string(),
            "designated": inst.designated.to_string(),
            "truncation": truncation,
        }),
        text,
        dot,
    })
}
