//! Command implementations behind the `cubenet` binary: run configuration,
//! file exports and the published-count verification harness.
//!
//! Every command writes into `RunConfig::out` and returns the written paths
//! together with a short text summary. Output bytes depend only on the
//! configuration.

mod equilibrium;
mod export;
mod paradox;
mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::congestion::pairwise_congestion_par;
use crate::error::{Error, Result};
use crate::network::{NetworkSelector, DEFAULT_NODE_CAP};

pub use equilibrium::{
    equilibrium_doc, EquilibriumDoc, PlayerReport, ProblemSet, PROBLEM_SCHEMA_VERSION,
};
pub use export::{
    congestion_map_doc, events_csv, links_csv, network_dot, network_obj, summary_doc,
    CongestionMapDoc, CoordinateDoc, FullNodeDoc, LineDoc, SummaryDoc,
};
pub use paradox::{paradox_csv, paradox_doc, paradox_row, ParadoxDoc, ParadoxRow, DEFAULT_SERIES};
pub use verify::{verify_paper, ClaimRow, VerificationReport};

/// Version stamped into every JSON document this module writes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Obj,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
            Format::Obj => "obj",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "dot" => Ok(Format::Dot),
            "obj" => Ok(Format::Obj),
            other => Err(Error::validation(
                "--format",
                format!("unknown format {other:?}; expected json, csv, dot or obj"),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Build,
    Congestion,
    Equilibrium,
    Paradox,
    VerifyPaper,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Build => "build",
            Command::Congestion => "congestion",
            Command::Equilibrium => "equilibrium",
            Command::Paradox => "paradox",
            Command::VerifyPaper => "verify-paper",
        }
    }

    /// Formats the command can write.
    pub fn supported_formats(&self) -> &'static [Format] {
        match self {
            Command::Build | Command::Congestion => {
                &[Format::Json, Format::Csv, Format::Dot, Format::Obj]
            }
            Command::Equilibrium | Command::Paradox | Command::VerifyPaper => {
                &[Format::Json, Format::Csv]
            }
        }
    }
}

/// Everything one CLI invocation needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// One selector for most commands; the paradox series accepts several.
    pub networks: Vec<NetworkSelector>,
    pub out: PathBuf,
    pub formats: BTreeSet<Format>,
    pub seed: u64,
    pub node_cap: usize,
    pub problem: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            networks: Vec::new(),
            out: PathBuf::from("."),
            formats: BTreeSet::from([Format::Json]),
            seed: 0,
            node_cap: DEFAULT_NODE_CAP,
            problem: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.formats.is_empty() {
            return Err(Error::validation(
                "--format",
                "at least one format is required",
            ));
        }
        if let Some(f) = self
            .formats
            .iter()
            .find(|f| !self.command.supported_formats().contains(f))
        {
            return Err(Error::validation(
                "--format",
                format!("{} does not write {f}", self.command.as_str()),
            ));
        }
        match self.command {
            Command::Build | Command::Congestion if self.networks.len() != 1 => Err(
                Error::validation("--network", "exactly one network selector is required"),
            ),
            Command::Equilibrium if self.networks.len() > 1 => Err(Error::validation(
                "--network",
                "at most one network selector is allowed",
            )),
            Command::Equilibrium if self.problem.is_none() => {
                Err(Error::validation("--problem", "a problem file is required"))
            }
            Command::VerifyPaper if !self.networks.is_empty() => Err(Error::validation(
                "--network",
                "verify-paper builds its own networks",
            )),
            _ => Ok(()),
        }
    }

    fn single_network(&self) -> NetworkSelector {
        self.networks[0]
    }

    fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }
}

/// Result of running one command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub written: Vec<PathBuf>,
    /// Human-readable summary for standard output.
    pub summary: String,
    /// False only when a verification row failed.
    pub passed: bool,
}

struct Writer<'a> {
    dir: &'a Path,
    written: Vec<PathBuf>,
}

impl<'a> Writer<'a> {
    fn new(dir: &'a Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Writer {
            dir,
            written: Vec::new(),
        })
    }

    fn write(&mut self, name: &str, contents: &str) -> Result<()> {
        let path = self.dir.join(name);
        fs::write(&path, contents)?;
        self.written.push(path);
        Ok(())
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    match cfg.command {
        Command::Build => cmd_build(cfg),
        Command::Congestion => cmd_congestion(cfg),
        Command::Equilibrium => cmd_equilibrium(cfg),
        Command::Paradox => cmd_paradox(cfg),
        Command::VerifyPaper => cmd_verify_paper(cfg),
    }
}

/// network.json, links.csv, network.dot and network.obj.
pub fn cmd_build(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let net = cfg.single_network().build(cfg.node_cap)?;
    let mut w = Writer::new(&cfg.out)?;
    write_network(&mut w, cfg, &net)?;
    Ok(Outcome {
        written: w.written,
        summary: format!(
            "{}: {} nodes, {} links",
            net.label(),
            net.nodes().len(),
            net.links().len()
        ),
        passed: true,
    })
}

fn write_network(w: &mut Writer<'_>, cfg: &RunConfig, net: &crate::network::Network) -> Result<()> {
    if cfg.wants(Format::Json) {
        w.write("network.json", &net.to_json())?;
    }
    if cfg.wants(Format::Csv) {
        w.write("links.csv", &links_csv(net)?)?;
    }
    if cfg.wants(Format::Dot) {
        w.write("network.dot", &network_dot(net))?;
    }
    if cfg.wants(Format::Obj) {
        w.write("network.obj", &network_obj(net))?;
    }
    Ok(())
}

/// congestion_map.json and summary.json, events.csv, plus the network's
/// dot and obj exports when asked for.
pub fn cmd_congestion(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let net = cfg.single_network().build(cfg.node_cap)?;
    let events = pairwise_congestion_par(&net);
    let summary = summary_doc(&net, &events)?;
    let mut w = Writer::new(&cfg.out)?;
    if cfg.wants(Format::Json) {
        w.write(
            "congestion_map.json",
            &export::to_json_string(&congestion_map_doc(&net, &events))?,
        )?;
        w.write("summary.json", &export::to_json_string(&summary)?)?;
    }
    if cfg.wants(Format::Csv) {
        w.write("events.csv", &events_csv(&net, &events)?)?;
    }
    if cfg.wants(Format::Dot) {
        w.write("network.dot", &network_dot(&net))?;
    }
    if cfg.wants(Format::Obj) {
        w.write("network.obj", &network_obj(&net))?;
    }
    let full: Vec<&str> = summary.full_nodes.iter().map(|n| n.node.as_str()).collect();
    Ok(Outcome {
        written: w.written,
        summary: format!(
            "{}: {} events ({} point, {} line, {} full), {} point coordinates, \
             {}/{} links congested, {} external, full nodes [{}]",
            summary.network,
            summary.events,
            summary.point_congestion_events,
            summary.line_congestion_events,
            summary.full_congestion_events,
            summary.point_coordinates,
            summary.links_congested,
            summary.links,
            summary.external_events,
            full.join(" "),
        ),
        passed: true,
    })
}

/// equilibrium.json and allocations.csv, plus kt_report.txt always.
pub fn cmd_equilibrium(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let path = cfg.problem.as_ref().expect("validated");
    let set = ProblemSet::from_json(&fs::read_to_string(path)?)?;
    let network = match cfg.networks.first() {
        Some(sel) => Some(*sel),
        None => set
            .network
            .as_deref()
            .map(str::parse::<NetworkSelector>)
            .transpose()?,
    };
    let net = network.map(|s| s.build(cfg.node_cap)).transpose()?;
    let doc = equilibrium_doc(&set, net.as_ref(), cfg.seed)?;
    let mut w = Writer::new(&cfg.out)?;
    if cfg.wants(Format::Json) {
        w.write("equilibrium.json", &export::to_json_string(&doc)?)?;
    }
    if cfg.wants(Format::Csv) {
        w.write("allocations.csv", &equilibrium::allocations_csv(&doc)?)?;
    }
    w.write("kt_report.txt", &equilibrium::kt_text(&doc))?;
    Ok(Outcome {
        written: w.written,
        summary: equilibrium::summary_text(&doc),
        passed: true,
    })
}

/// paradox.csv and paradox.json over the selected lattice sizes.
pub fn cmd_paradox(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let selectors: Vec<NetworkSelector> = if cfg.networks.is_empty() {
        DEFAULT_SERIES
            .iter()
            .map(|&(x, y, z)| NetworkSelector::Lattice(x, y, z))
            .collect()
    } else {
        cfg.networks.clone()
    };
    let rows = selectors
        .into_iter()
        .map(|s| paradox_row(s, cfg.node_cap))
        .collect::<Result<Vec<_>>>()?;
    let summary = rows
        .iter()
        .map(|r| {
            let center = match (r.center_congested, r.center_links) {
                (Some(c), Some(t)) => format!(", center {c}/{t}"),
                _ => String::new(),
            };
            format!(
                "{}: {}/{} links congested, {} point coordinates, {} full nodes, {} external{}",
                r.network,
                r.links_congested,
                r.links,
                r.point_coordinates,
                r.full_node_count,
                r.external_events,
                center
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut w = Writer::new(&cfg.out)?;
    if cfg.wants(Format::Csv) {
        w.write("paradox.csv", &paradox_csv(&rows)?)?;
    }
    if cfg.wants(Format::Json) {
        w.write("paradox.json", &export::to_json_string(&paradox_doc(rows))?)?;
    }
    Ok(Outcome {
        written: w.written,
        summary,
        passed: true,
    })
}

/// verification.json (and verification.csv) plus the printed table.
pub fn cmd_verify_paper(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let report = verify_paper();
    let mut w = Writer::new(&cfg.out)?;
    if cfg.wants(Format::Json) {
        w.write("verification.json", &export::to_json_string(&report)?)?;
    }
    if cfg.wants(Format::Csv) {
        let mut c = csv::Writer::from_writer(Vec::new());
        for row in &report.rows {
            c.serialize(row)?;
        }
        let bytes = c
            .into_inner()
            .map_err(|e| std::io::Error::other(e.to_string()))?;
        w.write(
            "verification.csv",
            &String::from_utf8(bytes).expect("utf-8"),
        )?;
    }
    Ok(Outcome {
        written: w.written,
        summary: report.to_string(),
        passed: report.pass,
    })
}
