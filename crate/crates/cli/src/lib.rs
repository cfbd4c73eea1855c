//! Command-line front end for `polycap-core`.
//!
//! [`run`] does all the work and returns the rendered streams and exit code,
//! so tests can drive it without spawning a process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use polycap_core::oracle::{bruteforce_summand_classes, finite_abelian_groups_up_to, DEFAULT_ORDER_BOUND};
use polycap_core::{
    capacity_of, default_max_dim, enumerate_dominated, homology_of, parse_expression, parse_group,
    AbelianGroup, CapacityKind, CapacityResult, Error, ExplicitFiniteGroup, SpaceDescriptor,
    Truncation,
};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "polycap", version, about = "Borsuk capacity of classified polyhedra")]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Capacity of a space, with its dominated list when known.
    Capacity { expr: String },
    /// Dominated homotopy types (or bound candidates) of a space.
    Dominated { expr: String },
    /// Integral homology table.
    Homology {
        expr: String,
        /// Highest degree to report; defaults to the top nonzero degree.
        #[arg(long)]
        max_dim: Option<u32>,
    },
    /// Canonical form, invariant factors, and summand classes of a group.
    Group { literal: String },
    /// Brute-force checks against the structure theory.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Compare brute-force summand classes with Krull-Schmidt enumeration
    /// for every abelian group up to the given order.
    Verify {
        #[arg(long, default_value_t = 128)]
        max_order: u64,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::InvalidDescriptor(_) | Error::InvalidGroup(_) => 2,
        Error::UnsupportedHomology(_) | Error::EnumerationUnavailable(_) | Error::OrderTooLarge { .. } => 3,
        _ => 1,
    }
}

pub fn run(cli: &Cli) -> Output {
    let result = match &cli.command {
        Command::Capacity { expr } => capacity(expr, cli.json),
        Command::Dominated { expr } => dominated(expr, cli.json),
        Command::Homology { expr, max_dim } => homology(expr, *max_dim, cli.json),
        Command::Group { literal } => group(literal, cli.json),
        Command::Oracle(OracleCommand::Verify { max_order }) => {
            return oracle_verify(*max_order, cli.json)
        }
    };
    match result {
        Ok(stdout) => Output { code: 0, stdout, stderr: String::new() },
        Err(e) => Output { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn document(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

fn names(list: &[SpaceDescriptor]) -> Vec<String> {
    list.iter().map(ToString::to_string).collect()
}

fn capacity(expr: &str, as_json: bool) -> Result<String, Error> {
    let d = parse_expression(expr)?;
    let normalized = d.normalize()?;
    let result = capacity_of(&normalized)?;
    if as_json {
        let mut doc = json!({
            "input": expr,
            "normalized": normalized.to_string(),
            "capacity": { "value": result.value(), "kind": result.kind().as_str() },
        });
        if let Some(list) = result.dominated() {
            doc["dominated"] = json!(names(list));
        }
        return Ok(document(doc));
    }
    let mut out = format!("space: {normalized}\n");
    match &result {
        CapacityResult::Exact(list) => {
            let _ = writeln!(out, "capacity = {} ({})", list.len(), result.kind());
            out.push_str("dominated:\n");
            list_lines(&mut out, list);
        }
        CapacityResult::UpperBound(list) => {
            let _ = writeln!(out, "capacity <= {} ({})", list.len(), result.kind());
            out.push_str("candidates:\n");
            list_lines(&mut out, list);
        }
        CapacityResult::CountOnly(n) => {
            let _ = writeln!(out, "capacity = {n} ({})", result.kind());
        }
    }
    Ok(out)
}

fn list_lines(out: &mut String, list: &[SpaceDescriptor]) {
    for d in list {
        let _ = writeln!(out, "  {d}");
    }
}

fn dominated(expr: &str, as_json: bool) -> Result<String, Error> {
    let d = parse_expression(expr)?;
    let normalized = d.normalize()?;
    let list = enumerate_dominated(&normalized)?;
    if as_json {
        return Ok(document(json!({
            "input": expr,
            "normalized": normalized.to_string(),
            "dominated": names(&list),
        })));
    }
    let header = match capacity_of(&normalized)?.kind() {
        CapacityKind::UpperBound => "candidates (upper bound)",
        _ => "dominated (exact)",
    };
    let mut out = format!("space: {normalized}\n{header}:\n");
    list_lines(&mut out, &list);
    Ok(out)
}

fn homology(expr: &str, max_dim: Option<u32>, as_json: bool) -> Result<String, Error> {
    let d = parse_expression(expr)?;
    let normalized = d.normalize()?;
    let max_dim = match max_dim {
        Some(n) => n,
        None => default_max_dim(&normalized)?,
    };
    let table = homology_of(&normalized, max_dim)?;
    let truncated_above = match table.truncation() {
        Truncation::Complete => None,
        Truncation::TruncatedAbove(n) => Some(n),
    };
    let rows: Vec<(u32, String)> = (0..=max_dim).map(|i| (i, table.get(i).to_string())).collect();
    if as_json {
        let groups: serde_json::Map<String, Value> =
            rows.into_iter().map(|(i, g)| (i.to_string(), Value::String(g))).collect();
        return Ok(document(json!({
            "input": expr,
            "normalized": normalized.to_string(),
            "homology": groups,
            "truncated_above": truncated_above,
        })));
    }
    let width = format!("H_{max_dim}").len();
    let mut out = format!("space: {normalized}\n");
    for (i, g) in rows {
        let _ = writeln!(out, "{:<width$} = {g}", format!("H_{i}"));
    }
    if let Some(n) = truncated_above {
        let _ = writeln!(out, "(truncated above degree {n})");
    }
    Ok(out)
}

fn group(literal: &str, as_json: bool) -> Result<String, Error> {
    let g = parse_group(literal)?;
    let factors: Vec<String> = g.invariant_factors().iter().map(ToString::to_string).collect();
    let summands = g.summands_up_to_iso();
    if as_json {
        let factors: Vec<Value> = g
            .invariant_factors()
            .iter()
            .map(|f| u64::try_from(f).map_or_else(|_| Value::String(f.to_string()), Value::from))
            .collect();
        return Ok(document(json!({
            "input": literal,
            "canonical": g.to_string(),
            "free_rank": g.free_rank(),
            "invariant_factors": factors,
            "summands": summands.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "count": g.count_summands(),
        })));
    }
    let mut out = format!("group = {g}\nfree rank = {}\n", g.free_rank());
    if factors.is_empty() {
        out.push_str("invariant factors = none\n");
    } else {
        let _ = writeln!(out, "invariant factors = {}", factors.join(", "));
    }
    let _ = writeln!(out, "summand classes = {}", g.count_summands());
    for s in &summands {
        let _ = writeln!(out, "  {s}");
    }
    Ok(out)
}

struct Check {
    group: AbelianGroup,
    brute: Vec<AbelianGroup>,
    theory: Vec<AbelianGroup>,
}

impl Check {
    fn passed(&self) -> bool {
        self.brute == self.theory
    }
}

fn oracle_verify(max_order: u64, as_json: bool) -> Output {
    if max_order > DEFAULT_ORDER_BOUND {
        let e = Error::OrderTooLarge { order: max_order, bound: DEFAULT_ORDER_BOUND };
        return Output { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") };
    }
    let checks: Vec<Check> = finite_abelian_groups_up_to(max_order)
        .into_iter()
        .map(|group| {
            let explicit = ExplicitFiniteGroup::from_abelian(&group).expect("order within bound");
            let brute = bruteforce_summand_classes(&explicit);
            let theory = group.summands_up_to_iso();
            Check { group, brute, theory }
        })
        .collect();
    let mismatches = checks.iter().filter(|c| !c.passed()).count();
    let code = if mismatches == 0 { 0 } else { 1 };
    let stdout = if as_json {
        let groups: Vec<Value> = checks
            .iter()
            .map(|c| {
                json!({
                    "group": c.group.to_string(),
                    "brute_force": c.brute.len(),
                    "structure_theory": c.theory.len(),
                    "pass": c.passed(),
                })
            })
            .collect();
        document(json!({ "max_order": max_order, "groups": groups, "mismatches": mismatches }))
    } else {
        let mut out = String::new();
        for c in &checks {
            if c.passed() {
                let _ = writeln!(out, "PASS {}: {} summand classes", c.group, c.brute.len());
            } else {
                let _ = writeln!(
                    out,
                    "FAIL {}: brute force {} classes, structure theory {}",
                    c.group,
                    c.brute.len(),
                    c.theory.len()
                );
            }
        }
        let _ = writeln!(out, "{} groups of order <= {max_order}, {mismatches} mismatches", checks.len());
        out
    };
    Output { code, stdout, stderr: String::new() }
}
