//! The `enumerate`, `count`, `character` and `dt` subcommands.

use std::collections::BTreeSet;
use std::path::PathBuf;

use breakdiv::counting::{dt_invariant, orbit_count_d};
use breakdiv::knm::{orbit_keys, sort_orbit_key};
use breakdiv::reptheory::{
    break_character_bruteforce, break_character_closed, class_size, parking_character_bruteforce,
    perm_module_h_expansion, restrict_character, schur_expansion,
};
use breakdiv::series::dt_via_euler_product;
use breakdiv::{Budget, ClassFunction, KnmParams, Multigraph, SymFnExpansion};
use serde_json::Value;

use crate::error::{CliError, Result};
use crate::graph_file::read_graph_file;
use crate::output::{bigint, parts, text, tuple, Report, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SetKind {
    Break,
    Park,
    Residue,
    Classes,
}

/// Where the graph comes from: `K_n^m` or a graph file.
#[derive(Clone, Debug)]
pub enum Input {
    Knm(KnmParams),
    Graph(PathBuf),
}

impl Input {
    pub fn from_flags(m: Option<u32>, n: Option<u32>, graph: Option<PathBuf>) -> Result<Input> {
        match (m, n, graph) {
            (None, None, Some(path)) => Ok(Input::Graph(path)),
            (_, _, Some(_)) => Err(CliError::Usage("--graph cannot be combined with --m/--n".into())),
            (m, n, None) => Ok(Input::Knm(knm_params(m, n)?)),
        }
    }
}

pub fn knm_params(m: Option<u32>, n: Option<u32>) -> Result<KnmParams> {
    match (m, n) {
        (Some(m), Some(n)) => Ok(KnmParams::new(m, n)?),
        _ => Err(CliError::Usage("both --m and --n are required".into())),
    }
}

/// A report plus whether one of its internal cross-checks failed.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub failed: bool,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report, failed: false }
    }
}

pub fn enumerate(input: &Input, set: SetKind, budget: &Budget) -> Result<Outcome> {
    let mut report = Report::new("enumerate");
    match input {
        Input::Graph(path) => {
            let graph = read_graph_file(path)?;
            let table = match set {
                SetKind::Break => {
                    let mut t = Table::new("break", &["divisor"]);
                    for d in graph.enumerate_break_divisors(budget)? {
                        t.push(vec![tuple(d.values())]);
                    }
                    t
                }
                SetKind::Park => {
                    let mut t = Table::new("park", &["parking_function"]);
                    for a in graph_parking_functions(&graph, budget)? {
                        t.push(vec![tuple(&a)]);
                    }
                    t
                }
                SetKind::Residue | SetKind::Classes => {
                    return Err(CliError::Usage(
                        "--set residue and --set classes need --m and --n".into(),
                    ))
                }
            };
            report.tables.push(table);
        }
        Input::Knm(p) => report.tables.push(enumerate_knm(p, set, budget)?),
    }
    Ok(Outcome::ok(report))
}

fn enumerate_knm(p: &KnmParams, set: SetKind, budget: &Budget) -> Result<Table> {
    Ok(match set {
        SetKind::Break => {
            let mut t = Table::new("break", &["divisor", "orbit_key"]);
            for d in p.enumerate_break(budget)? {
                t.push(vec![tuple(&d), tuple(sort_orbit_key(&d).parts())]);
            }
            t
        }
        SetKind::Park => {
            let mut t = Table::new("park", &["parking_function", "orbit_key"]);
            for a in p.enumerate_parking(budget)? {
                t.push(vec![tuple(&a), tuple(sort_orbit_key(&a).parts())]);
            }
            t
        }
        SetKind::Residue => {
            let mut t = Table::new(
                "residue",
                &["residue", "class_key", "break_representative", "parking_representative"],
            );
            for x in p.enumerate_residues(budget)? {
                t.push(vec![
                    tuple(x.values()),
                    tuple(p.class_key(&x).values()),
                    tuple(&p.break_representative(&x)?),
                    tuple(&p.parking_representative(&x)?),
                ]);
            }
            t
        }
        SetKind::Classes => {
            let mut t = Table::new(
                "classes",
                &["class_key", "members", "break_representative", "parking_representative", "orbit_key"],
            );
            let keys: BTreeSet<_> = p.enumerate_residues(budget)?.iter().map(|x| p.class_key(x)).collect();
            for key in keys {
                let class = p.shift_class(&key);
                let mut members: Vec<&[i64]> = class.members().iter().map(|y| y.values()).collect();
                members.sort();
                let rep = p.break_representative(&key)?;
                t.push(vec![
                    tuple(key.values()),
                    Value::Array(members.into_iter().map(tuple).collect()),
                    tuple(&rep),
                    tuple(&p.parking_representative(&key)?),
                    tuple(sort_orbit_key(&rep).parts()),
                ]);
            }
            t
        }
    })
}

/// `G`-parking functions relative to the last vertex, in lexicographic order. Every
/// coordinate of a parking function is below the degree of its vertex, so the box of
/// those bounds is scanned after checking its size against the budget.
pub fn graph_parking_functions(graph: &Multigraph, budget: &Budget) -> Result<Vec<Vec<i64>>> {
    let n = graph.vertex_count();
    let q = n - 1;
    let bounds: Vec<u128> = (0..q).map(|v| graph.degree(v)).collect();
    let size = bounds.iter().fold(1u128, |acc, &b| acc.saturating_mul(b));
    if size > budget.max_items {
        return Err(CliError::Budget(format!(
            "budget exceeded for parking candidates: need {size}, limit {}",
            budget.max_items
        )));
    }
    let mut out = Vec::new();
    let mut current = vec![0i64; q];
    if bounds.iter().any(|&b| b == 0) {
        return Ok(out);
    }
    loop {
        if graph.is_g_parking(q, &current)? {
            out.push(current.clone());
        }
        let mut pos = q;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            current[pos] += 1;
            if (current[pos] as u128) < bounds[pos] {
                break;
            }
            current[pos] = 0;
        }
    }
}

/// Runs an enumeration only if it fits in the budget; `None` means it was skipped.
fn within_budget<T>(result: breakdiv::Result<T>) -> Result<Option<T>> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(breakdiv::Error::Budget { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn count_row(t: &mut Table, quantity: &str, value: Option<Value>, method: &str) {
    let method = if value.is_some() { method.to_string() } else { format!("{method} (skipped: budget)") };
    t.push(vec![text(quantity), value.unwrap_or(Value::Null), text(method)]);
}

pub fn count(input: &Input, budget: &Budget) -> Result<Outcome> {
    let mut t = Table::new("counts", &["quantity", "value", "method"]);
    match input {
        Input::Graph(path) => {
            let graph = read_graph_file(path)?;
            count_row(&mut t, "vertices", Some(Value::from(graph.vertex_count())), "input");
            count_row(&mut t, "edges", Some(bigint(&graph.edge_count().into())), "input");
            count_row(&mut t, "genus", Some(Value::from(graph.genus()?)), "formula");
            count_row(&mut t, "spanning_trees", Some(bigint(&graph.spanning_tree_count()?)), "matrix-tree");
            let breaks = within_budget(graph.enumerate_break_divisors(budget))?;
            count_row(&mut t, "breaks", breaks.map(|b| Value::from(b.len())), "enumeration");
            let parks = match graph_parking_functions(&graph, budget) {
                Ok(v) => Some(Value::from(v.len())),
                Err(CliError::Budget(_)) => None,
                Err(e) => return Err(e),
            };
            count_row(&mut t, "parks", parks, "enumeration");
        }
        Input::Knm(p) => {
            let (m, n) = (p.m() as u64, p.n() as u64);
            count_row(&mut t, "m", Some(Value::from(m)), "input");
            count_row(&mut t, "n", Some(Value::from(n)), "input");
            count_row(&mut t, "genus", Some(Value::from(p.genus())), "formula");
            let trees = bigint(&p.break_count().into());
            count_row(&mut t, "breaks", Some(trees.clone()), "formula");
            let breaks = within_budget(p.enumerate_break(budget))?;
            count_row(&mut t, "breaks", breaks.as_ref().map(|b| Value::from(b.len())), "enumeration");
            count_row(&mut t, "parks", Some(trees), "formula");
            let parks = within_budget(p.enumerate_parking(budget))?;
            count_row(&mut t, "parks", parks.map(|b| Value::from(b.len())), "enumeration");
            count_row(&mut t, "spanning_trees", Some(bigint(&p.graph().spanning_tree_count()?)), "matrix-tree");
            count_row(&mut t, "residues", Some(bigint(&p.residue_count().into())), "formula");
            count_row(&mut t, "shift_classes", Some(bigint(&(p.residue_count() / n as u128).into())), "formula");
            count_row(&mut t, "orbits_D", Some(bigint(&orbit_count_d(m, n)?)), "formula");
            let residues = within_budget(p.enumerate_residues(budget))?;
            let orbits = residues.map(|xs| {
                let keys: BTreeSet<_> = xs.iter().map(|x| sort_orbit_key(x.values())).collect();
                Value::from(keys.len())
            });
            count_row(&mut t, "orbits_D", orbits, "enumeration");
            count_row(&mut t, "dt", Some(bigint(&dt_invariant(m, n)?)), "formula");
            let dt = breaks.map(|b| Value::from(orbit_keys(&b).len()));
            count_row(&mut t, "dt", dt, "enumeration");
        }
    }
    let mut report = Report::new("count");
    report.tables.push(t);
    Ok(Outcome::ok(report))
}

fn verdict(check: &str, status: &str) -> Vec<Value> {
    vec![text(check), text(status), text(format!("{check}: {status}"))]
}

fn compare(check: &str, lhs: Option<&ClassFunction>, rhs: Option<&ClassFunction>, failed: &mut bool) -> Vec<Value> {
    match (lhs, rhs) {
        (Some(a), Some(b)) if a == b => verdict(check, "PASS"),
        (Some(_), Some(_)) => {
            *failed = true;
            verdict(check, "FAIL")
        }
        _ => verdict(check, "SKIPPED"),
    }
}

fn expansion_row(t: &mut Table, module: &str, e: Option<SymFnExpansion>, basis: &str) {
    let value = e.map(|e| text(e.to_string())).unwrap_or(Value::Null);
    t.push(vec![text(module), text(basis), value]);
}

pub fn character(p: &KnmParams, budget: &Budget) -> Result<Outcome> {
    let n = p.n() as u32;
    let closed = break_character_closed(p)?;
    let brute = within_budget(break_character_bruteforce(p, budget))?;
    let mut failed = false;

    let mut classes = Table::new("break_character", &["class", "class_size", "closed", "bruteforce"]);
    for (lambda, value) in closed.entries() {
        let b = brute.as_ref().and_then(|c| c.get(&lambda)).map(bigint).unwrap_or(Value::Null);
        classes.push(vec![
            parts(lambda.parts()),
            bigint(&class_size(&lambda)),
            bigint(&value),
            b,
        ]);
    }

    let restricted = if n >= 2 { Some(restrict_character(&closed)?) } else { None };
    let park_brute = if n >= 2 { within_budget(parking_character_bruteforce(p, budget))? } else { None };
    let mut park = Table::new("park_character", &["class", "restricted_closed", "bruteforce"]);
    if let Some(res) = &restricted {
        for (mu, value) in res.entries() {
            let b = park_brute.as_ref().and_then(|c| c.get(&mu)).map(bigint).unwrap_or(Value::Null);
            park.push(vec![parts(mu.parts()), bigint(&value), b]);
        }
    }

    let breaks = within_budget(p.enumerate_break(budget))?;
    let parks = if n >= 2 { within_budget(p.enumerate_parking(budget))? } else { None };
    let mut frob = Table::new("frobenius", &["module", "basis", "expansion"]);
    let break_h = match &breaks {
        Some(b) => Some(perm_module_h_expansion(n, &orbit_keys(b))?),
        None => None,
    };
    expansion_row(&mut frob, "Break", break_h, "h");
    expansion_row(&mut frob, "Break", Some(schur_expansion(&closed)?), "s");
    let park_h = match &parks {
        Some(a) => Some(perm_module_h_expansion(n - 1, &orbit_keys(a))?),
        None => None,
    };
    expansion_row(&mut frob, "Park", park_h, "h");
    let park_s = match &restricted {
        Some(r) => Some(schur_expansion(r)?),
        None => None,
    };
    expansion_row(&mut frob, "Park", park_s, "s");

    let mut verdicts = Table::new("verdicts", &["check", "status", "verdict"]);
    verdicts.push(compare("closed = brute", Some(&closed), brute.as_ref(), &mut failed));
    if n >= 2 {
        verdicts.push(compare("Res = Park", restricted.as_ref(), park_brute.as_ref(), &mut failed));
    } else {
        verdicts.push(verdict("Res = Park", "SKIPPED"));
    }

    let mut report = Report::new("character");
    report.tables.extend([classes, park, frob, verdicts]);
    Ok(Outcome { report, failed })
}

pub fn dt(m: u32, n_max: u32, budget: &Budget) -> Result<Outcome> {
    if m == 0 || n_max == 0 {
        return Err(CliError::Usage(format!("need --m >= 1 and --n-max >= 1, got {m} and {n_max}")));
    }
    let euler = dt_via_euler_product(m as u64, n_max as usize, budget)?;
    let mut t = Table::new("dt", &["n", "closed", "euler_product", "verdict"]);
    let mut failed = false;
    for n in 1..=n_max {
        let closed = dt_invariant(m as u64, n as u64)?;
        let product = euler.get(n as usize).cloned();
        let agree = product.as_ref() == Some(&closed);
        failed |= !agree;
        t.push(vec![
            Value::from(n),
            bigint(&closed),
            product.as_ref().map(bigint).unwrap_or(Value::Null),
            text(if agree { "AGREE" } else { "DISAGREE" }),
        ]);
    }
    let mut report = Report::new("dt");
    report.tables.push(t);
    Ok(Outcome { report, failed })
}
