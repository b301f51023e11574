//! Argument parsing and command dispatch.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cpstrata_core::ballmodels::{default_cap, iemb_model, CircleWeights};
use cpstrata_core::chambers::{
    chamber_label, chamber_signature, enumerate_chambers, is_admissible, Boundary, ChamberLabel,
};
use cpstrata_core::confgeom::{classify, parse_points};
use cpstrata_core::dga::cohomology;
use cpstrata_core::kriz::{kriz_model, KrizParams};
use cpstrata_core::lattice::{area, negative_wall_classes, Capacities};
use cpstrata_core::Rational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::config::{BoundaryConvention, Format, RunConfig};
use crate::format::{csv_table, rational_list, rational_str, ranks_csv, CohomologyJson, DgaJson, H2Json};
use crate::verify::{self, Settings};

#[derive(Debug, Parser)]
#[command(name = "cpstrata", version, about = "Ball-packing chambers and cohomology models of CP2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Degree cap for cohomology computations.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Output format; JSON when writing to `--out`, text otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Closure of the admissible region used for chamber enumeration.
    #[arg(long, global = true, value_enum)]
    pub boundary: Option<BoundaryConvention>,
    /// JSON run configuration; flags take precedence over its fields.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Admissibility and chambers of capacity vectors.
    #[command(subcommand)]
    Chamber(ChamberCmd),
    /// Models of embedding spaces.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Cohomology of the Kriz model of k points in CP^m.
    Kriz {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: usize,
    },
    /// Point configurations in the projective plane.
    #[command(subcommand)]
    Conf(ConfCmd),
    /// Runs a verification suite: chambers, thm13, eq71, eq75, ab-iso, kriz, conf or all.
    Verify { suite: String },
}

#[derive(Debug, Subcommand)]
pub enum ChamberCmd {
    /// Classifies one capacity vector, e.g. `--caps 2/5,2/5,3/10,1/5`.
    Classify {
        #[arg(long)]
        caps: String,
    },
    /// Lists every chamber for `n` balls with a witness.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModelCmd {
    /// Emits the DGA of a chamber as JSON.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        chamber: String,
        /// Circle weights `a,b;a,b`; unit weights by default.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Computes cohomology of a DGA given as JSON.
    Cohomology {
        #[arg(long)]
        spec: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConfCmd {
    /// Stratum and cross-ratio of 3 or 4 points, e.g. `--points 1:0:0,0:1:0,1:1:0`.
    Stratify {
        #[arg(long)]
        points: String,
    },
}

/// Resolved global options.
struct Options {
    cap: Option<u32>,
    format: Format,
    out: Option<PathBuf>,
    boundary: Boundary,
    config: RunConfig,
}

impl Options {
    fn resolve(cli: &Cli) -> Result<Self> {
        let config = match &cli.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        let cap = cli.cap.or(config.degree_cap);
        if let Some(c) = cap {
            if c < 2 {
                bail!("--cap must be at least 2");
            }
        }
        let out = cli.out.clone().or_else(|| config.output.clone());
        let format = match (cli.json, cli.format) {
            (true, Some(f)) if f != Format::Json => bail!("--json conflicts with --format"),
            (true, _) => Format::Json,
            (false, Some(f)) => f,
            (false, None) => config.format.unwrap_or(if out.is_some() { Format::Json } else { Format::Text }),
        };
        let boundary = cli.boundary.or(config.boundary_convention).unwrap_or_default().into();
        Ok(Self { cap, format, out, boundary, config })
    }
}

/// A command result in every format it supports.
struct Rendered {
    json: Value,
    text: String,
    csv: Option<String>,
}

impl Rendered {
    fn select(self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(&self.json)? + "\n",
            Format::Text => self.text,
            Format::Csv => self.csv.context("CSV output is not available for this command")?,
        })
    }
}

fn chamber_classify(caps: &str) -> Result<Rendered> {
    let c = Capacities::parse(caps)?;
    let adm = is_admissible(&c)?;
    let (pattern, label) = if adm.admissible {
        (Some(chamber_signature(&c)?.pattern()), chamber_label(&c).ok().map(|l| l.to_string()))
    } else {
        (None, None)
    };
    let mut walls = Vec::new();
    let mut rows = Vec::new();
    let mut text = format!(
        "capacities: {}\nadmissible: {}\n",
        rational_list(c.values()).join(","),
        adm.admissible
    );
    if let Some(v) = &adm.violator {
        text += &format!("violator: {v}\n");
    }
    for w in negative_wall_classes(c.len())? {
        let value = area(&c, &w)?;
        let positive = value > Rational::zero();
        let a = rational_str(&value);
        text += &format!("wall {w}: area {a} ({})\n", if positive { "+" } else { "-" });
        rows.push([w.to_string(), a.clone(), positive.to_string()]);
        walls.push(json!({ "class": H2Json::from(&w), "name": w.to_string(), "area": a, "positive": positive }));
    }
    if let Some(l) = &label {
        text += &format!("chamber: {l}\n");
    }
    Ok(Rendered {
        json: json!({
            "capacities": rational_list(c.values()),
            "admissible": adm.admissible,
            "violator": adm.violator.map(|v| v.to_string()),
            "volume_defect": rational_str(&c.volume_defect()),
            "pattern": pattern,
            "label": label,
            "walls": walls,
        }),
        text,
        csv: Some(csv_table(&["wall", "area", "positive"], rows)?),
    })
}

fn chamber_enumerate(n: usize, boundary: Boundary) -> Result<Rendered> {
    let chambers = enumerate_chambers(n, boundary)?;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    let mut text = format!("{} chambers for n = {n} ({boundary} boundary)\n", chambers.len());
    for (i, ch) in chambers.iter().enumerate() {
        let label = chamber_label(&ch.witness).ok().map(|l| l.to_string());
        let witness = rational_list(ch.witness.values());
        text += &format!(
            "{i:>3} {:<8} {} witness ({})\n",
            label.clone().unwrap_or_default(),
            ch.signature.pattern(),
            witness.join(",")
        );
        rows.push([i.to_string(), label.clone().unwrap_or_default(), ch.signature.pattern(), witness.join(" ")]);
        items.push(json!({
            "index": i,
            "label": label,
            "pattern": ch.signature.pattern(),
            "positive_walls": ch.signature.positive_count(),
            "witness": witness,
        }));
    }
    Ok(Rendered {
        json: json!({ "n": n, "boundary": boundary.to_string(), "count": chambers.len(), "chambers": items }),
        text,
        csv: Some(csv_table(&["index", "label", "pattern", "witness"], rows)?),
    })
}

fn model_build(n: usize, chamber: &str, weights: Option<&str>, o: &Options) -> Result<Rendered> {
    let chamber: ChamberLabel = chamber.parse()?;
    let w = match weights {
        Some(s) => s.parse::<CircleWeights>()?,
        None => o.config.weights_for(n, chamber)?,
    };
    let spec = iemb_model(n, chamber, &w, o.cap.unwrap_or(default_cap(n)))?;
    let j = DgaJson::from_spec(&spec);
    let mut text = String::from("generators:\n");
    for g in &j.algebra.generators {
        let d = j.differential.get(&g.name).map(String::as_str).unwrap_or("0");
        text += &format!("  {} (degree {}): d = {d}\n", g.name, g.degree);
    }
    text += "relations:\n";
    for r in &j.algebra.relations {
        text += &format!("  {r}\n");
    }
    text += &format!("degree cap: {}\n", j.degree_cap);
    Ok(Rendered { json: serde_json::to_value(&j)?, text, csv: None })
}

fn ranks_text(ranks: &[usize]) -> String {
    ranks.iter().enumerate().map(|(q, r)| format!("H^{q}: {r}\n")).collect()
}

fn model_cohomology(path: &PathBuf, o: &Options) -> Result<Rendered> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let j: DgaJson = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let mut spec = j.to_spec()?;
    if let Some(cap) = o.cap {
        spec = spec.with_cap(cap);
    }
    let rep = cohomology(&spec)?;
    Ok(Rendered {
        json: serde_json::to_value(CohomologyJson::from(&rep))?,
        text: ranks_text(&rep.ranks),
        csv: Some(ranks_csv(&rep.ranks)?),
    })
}

fn kriz(m: u32, k: usize, o: &Options) -> Result<Rendered> {
    let cap = o.cap.unwrap_or(2 * m * k as u32);
    let rep = cohomology(&kriz_model(KrizParams::new(m, k)?, cap))?;
    let mut json = serde_json::to_value(CohomologyJson::from(&rep))?;
    json["m"] = json!(m);
    json["k"] = json!(k);
    Ok(Rendered { json, text: ranks_text(&rep.ranks), csv: Some(ranks_csv(&rep.ranks)?) })
}

fn conf_stratify(points: &str) -> Result<Rendered> {
    let pts = parse_points(points)?;
    let c = classify(&pts)?;
    let triples: Vec<String> = c.collinear_triples.iter().map(|(i, j, k)| format!("{i}{j}{k}")).collect();
    let chi = c.cross_ratio.as_ref().map(|x| x.to_string());
    let mut text = format!("stratum: {}\n", c.stratum);
    if let Some(x) = &chi {
        text += &format!("cross ratio: {x}\n");
    }
    Ok(Rendered {
        json: json!({
            "points": pts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "stratum": c.stratum.to_string(),
            "collinear_triples": triples,
            "cross_ratio": chi,
        }),
        text,
        csv: Some(csv_table(&["stratum", "cross_ratio"], [[c.stratum.to_string(), chi.unwrap_or_default()]])?),
    })
}

fn verify_cmd(suite: &str, o: &Options) -> Result<(Rendered, bool)> {
    let settings = Settings { cap: o.cap, boundary: o.boundary, config: o.config.clone() };
    let report = verify::run(suite, &settings)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for s in &report.suites {
        for c in &s.checks {
            let v = if c.pass { "PASS" } else { "FAIL" };
            text += &format!("{v} {}: {}\n", s.suite, c.name);
            if !c.pass {
                text += &format!("     expected {}\n     computed {}\n", c.expected, c.computed);
            }
            if let Some(n) = &c.note {
                text += &format!("     {n}\n");
            }
            rows.push([s.suite.clone(), c.name.clone(), c.pass.to_string()]);
        }
    }
    for (name, secs) in &report.timings {
        text += &format!("time {name}: {secs:.2}s\n");
    }
    text += if report.pass { "all checks passed\n" } else { "some checks failed\n" };
    let pass = report.pass;
    let rendered = Rendered {
        json: serde_json::to_value(&report)?,
        text,
        csv: Some(csv_table(&["suite", "check", "pass"], rows)?),
    };
    Ok((rendered, pass))
}

/// Runs a parsed command; returns whether it succeeded.
pub fn run(cli: &Cli) -> Result<bool> {
    let o = Options::resolve(cli)?;
    let (rendered, ok) = match &cli.command {
        Command::Chamber(ChamberCmd::Classify { caps }) => (chamber_classify(caps)?, true),
        Command::Chamber(ChamberCmd::Enumerate { n }) => (chamber_enumerate(*n, o.boundary)?, true),
        Command::Model(ModelCmd::Build { n, chamber, weights }) => {
            (model_build(*n, chamber, weights.as_deref(), &o)?, true)
        }
        Command::Model(ModelCmd::Cohomology { spec }) => (model_cohomology(spec, &o)?, true),
        Command::Kriz { m, k } => (kriz(*m, *k, &o)?, true),
        Command::Conf(ConfCmd::Stratify { points }) => (conf_stratify(points)?, true),
        Command::Verify { suite } => verify_cmd(suite, &o)?,
    };
    let body = rendered.select(o.format)?;
    match &o.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(ok)
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
