//! Command-line front end. Every subcommand writes deterministic,
//! byte-stable text so that outputs can be scripted and golden-tested; big
//! integers print as decimal strings, including in JSON.

use std::fmt::Write as _;
use std::io::Write;

use num_traits::ToPrimitive;

use crate::codec::{decode, encode};
use crate::distance::{bfs_oracle_distance, pattern_contains, perm_distance};
use crate::edit::{delete_at, insert_inner, insert_left, insert_right, neighbors};
use crate::enumeration::{
    average_distance_to_chain, average_distance_to_identity, chain_distance_asymptotic,
    chain_distance_series, deep_leaf_table, leaf_series, narayana, star_distance_series,
    SeriesTable, SERIES_ORDER_CAP,
};
use crate::error::{Error, Result};
use crate::factors::{classify_compact, compact_factors, complete_factors, CompactClass, FactorSpan};
use crate::perm::{common_pattern_brute_force, Permutation};
use crate::tree::OrderedTree;
use crate::verify::run_suite;

const USAGE: &str = "\
Usage: permtree <command> [arguments]

Commands:
  encode TREE                     permutation of an ordered tree
  decode PERM                     tree of a one-stack-sortable permutation
  check PERM                      231-avoidance test (exit 1 when it fails)
  factors PERM [--compact|--complete] [--classify]
                                  list factors (default: complete)
  delete PERM (--pos K | --value V)
                                  remove one letter and renormalize
  insert PERM --op inner|left|right --span I:J
                                  insert at a complete factor
  neighbors PERM                  all one-step results, sorted
  distance A B [--trace] [--oracle dp|bfs|pattern]
                                  edit distance (A, B: permutation or tree)
  pattern HAYSTACK NEEDLE         does NEEDLE occur as a pattern in HAYSTACK
  stats INPUT                     n, lis, lds, leaves, height
  series i|s1|s2|d|narayana --n N [--json]
                                  exact coefficient tables
  avg --target id|chain --n N     exact average distance
  verify --suite SUITE --max-n N  run cross-check suites (suite `all`)

Options:
  --out FILE    write the output to FILE instead of stdout

Permutations parse from \"1,5,2,4,3,7,6\", \"1 5 2 4 3 7 6\", or plain
digits \"1524376\" (values above 9 need separators). Trees parse from Dyck
words such as \"()(()(()))(())\"; a leading '(' selects tree syntax.
";

/// Runs the command line against explicit output sinks; returns the exit
/// status (0 success, 1 negative check/verify outcome, 2 usage or data
/// errors).
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut positional: Vec<&str> = Vec::new();
    let mut flags: Vec<(&str, Option<&str>)> = Vec::new();
    let mut iter = args.iter().map(String::as_str).peekable();
    let Some(command) = iter.next() else {
        let _ = err.write_all(USAGE.as_bytes());
        return 2;
    };
    if command == "--help" || command == "-h" || command == "help" {
        let _ = out.write_all(USAGE.as_bytes());
        return 0;
    }
    while let Some(arg) = iter.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if takes_value(name) {
                match iter.next() {
                    Some(value) => flags.push((name, Some(value))),
                    None => {
                        let _ = writeln!(err, "error: --{name} expects a value");
                        return 2;
                    }
                }
            } else {
                flags.push((name, None));
            }
        } else {
            positional.push(arg);
        }
    }
    let request = Request {
        command,
        positional,
        flags,
    };
    let mut payload = String::new();
    let status = match dispatch(&request, &mut payload) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match request.flag_value("out") {
        Some(path) => {
            if let Err(e) = std::fs::write(path, payload) {
                let _ = writeln!(err, "error: cannot write {path}: {e}");
                return 2;
            }
        }
        None => {
            let _ = out.write_all(payload.as_bytes());
        }
    }
    status
}

fn takes_value(name: &str) -> bool {
    matches!(
        name,
        "pos" | "value" | "op" | "span" | "oracle" | "n" | "target" | "suite" | "max-n" | "out"
    )
}

struct Request<'a> {
    command: &'a str,
    positional: Vec<&'a str>,
    flags: Vec<(&'a str, Option<&'a str>)>,
}

impl<'a> Request<'a> {
    fn flag(&self, name: &str) -> bool {
        self.flags.iter().any(|&(n, _)| n == name)
    }

    fn flag_value(&self, name: &str) -> Option<&'a str> {
        self.flags
            .iter()
            .find(|&&(n, _)| n == name)
            .and_then(|&(_, v)| v)
    }

    fn require_value(&self, name: &str) -> Result<&'a str> {
        self.flag_value(name)
            .ok_or_else(|| Error::Domain(format!("missing required --{name}")))
    }

    fn arg(&self, index: usize, what: &str) -> Result<&'a str> {
        self.positional
            .get(index)
            .copied()
            .ok_or_else(|| Error::Domain(format!("missing {what} argument")))
    }

    fn check_known_flags(&self, known: &[&str]) -> Result<()> {
        for &(name, _) in &self.flags {
            if name != "out" && !known.contains(&name) {
                return Err(Error::Domain(format!(
                    "unknown flag --{name} for {}",
                    self.command
                )));
            }
        }
        Ok(())
    }
}

/// Accepts permutation or tree text, detected by the leading character.
fn parse_either(text: &str) -> Result<Permutation> {
    let perm = parse_either_lenient(text)?;
    perm.require_stack_sortable()?;
    Ok(perm)
}

/// As [`parse_either`], but permits permutations containing 231 (useful as
/// pattern needles, which then simply never occur).
fn parse_either_lenient(text: &str) -> Result<Permutation> {
    if text.trim_start().starts_with('(') {
        Ok(encode(&OrderedTree::parse(text)?))
    } else {
        text.parse()
    }
}

fn parse_perm(text: &str) -> Result<Permutation> {
    text.parse()
}

fn parse_usize(text: &str, what: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::Domain(format!("invalid {what}: {text:?}")))
}

fn parse_span(text: &str) -> Result<FactorSpan> {
    let (start, end) = text
        .split_once(':')
        .ok_or_else(|| Error::Domain(format!("span must look like I:J, got {text:?}")))?;
    let start = parse_usize(start, "span start")?;
    let end = parse_usize(end, "span end")?;
    if start == 0 || end < start {
        return Err(Error::Domain(format!("invalid span {text:?}")));
    }
    Ok(FactorSpan::new(start, end))
}

fn dispatch(request: &Request<'_>, out: &mut String) -> Result<i32> {
    match request.command {
        "encode" => {
            request.check_known_flags(&[])?;
            let tree = OrderedTree::parse(request.arg(0, "tree")?)?;
            writeln!(out, "{}", encode(&tree)).expect("string write");
            Ok(0)
        }
        "decode" => {
            request.check_known_flags(&[])?;
            let perm = parse_perm(request.arg(0, "permutation")?)?;
            writeln!(out, "{}", decode(&perm)?).expect("string write");
            Ok(0)
        }
        "check" => {
            request.check_known_flags(&[])?;
            let perm = parse_perm(request.arg(0, "permutation")?)?;
            match perm.find_231_triple() {
                None => {
                    writeln!(out, "one-stack-sortable").expect("string write");
                    Ok(0)
                }
                Some((positions, values)) => {
                    writeln!(
                        out,
                        "not one-stack-sortable: pattern 231 at positions {},{},{} (values {},{},{})",
                        positions[0], positions[1], positions[2], values[0], values[1], values[2]
                    )
                    .expect("string write");
                    Ok(1)
                }
            }
        }
        "factors" => {
            request.check_known_flags(&["compact", "complete", "classify"])?;
            let perm = parse_perm(request.arg(0, "permutation")?)?;
            if request.flag("compact") && request.flag("complete") {
                return Err(Error::Domain("--compact and --complete conflict".into()));
            }
            let spans = if request.flag("compact") {
                perm.require_stack_sortable()?;
                compact_factors(&perm)
            } else {
                complete_factors(&perm)?
            };
            for span in spans {
                let letters: Vec<String> = span
                    .letters(&perm)
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
                write!(out, "{span}\t{}", letters.join(",")).expect("string write");
                if request.flag("classify") {
                    match classify_compact(&perm, span)? {
                        CompactClass::Subtree => write!(out, "\tsubtree").expect("string write"),
                        CompactClass::InternalPath { edges } => {
                            let edges: Vec<String> =
                                edges.iter().map(|e| e.to_string()).collect();
                            write!(out, "\tpath({})", edges.join(",")).expect("string write");
                        }
                    }
                }
                writeln!(out).expect("string write");
            }
            Ok(0)
        }
        "delete" => {
            request.check_known_flags(&["pos", "value"])?;
            let perm = parse_perm(request.arg(0, "permutation")?)?;
            let pos = match (request.flag_value("pos"), request.flag_value("value")) {
                (Some(p), None) => parse_usize(p, "position")?,
                (None, Some(v)) => perm.position_of(parse_usize(v, "value")?)?,
                _ => {
                    return Err(Error::Domain(
                        "delete needs exactly one of --pos or --value".into(),
                    ))
                }
            };
            writeln!(out, "{}", delete_at(&perm, pos)?).expect("string write");
            Ok(0)
        }
        "insert" => {
            request.check_known_flags(&["op", "span"])?;
            let perm = parse_perm(request.arg(0, "permutation")?)?;
            let span = parse_span(request.require_value("span")?)?;
            let result = match request.require_value("op")? {
                "inner" => insert_inner(&perm, span)?,
                "left" => insert_left(&perm, span)?,
                "right" => insert_right(&perm, span)?,
                other => {
                    return Err(Error::Domain(format!(
                        "unknown insertion {other:?}; expected inner, left, or right"
                    )))
                }
            };
            writeln!(out, "{result}").expect("string write");
            Ok(0)
        }
        "neighbors" => {
            request.check_known_flags(&[])?;
            let perm = parse_perm(request.arg(0, "permutation")?)?;
            for q in neighbors(&perm)? {
                writeln!(out, "{q}").expect("string write");
            }
            Ok(0)
        }
        "distance" => {
            request.check_known_flags(&["trace", "oracle"])?;
            let a = parse_either(request.arg(0, "first input")?)?;
            let b = parse_either(request.arg(1, "second input")?)?;
            let oracle = request.flag_value("oracle").unwrap_or("dp");
            let distance = match oracle {
                "dp" => perm_distance(&a, &b)?.distance,
                "bfs" => bfs_oracle_distance(&a, &b, (a.len() + b.len()).max(1))?,
                "pattern" => {
                    let u = common_pattern_brute_force(&a, &b)?;
                    a.len() + b.len() - 2 * u.len()
                }
                other => {
                    return Err(Error::Domain(format!(
                        "unknown oracle {other:?}; expected dp, bfs, or pattern"
                    )))
                }
            };
            if request.flag("trace") {
                let result = perm_distance(&a, &b)?;
                writeln!(out, "distance: {distance}").expect("string write");
                writeln!(out, "common: {}", result.common).expect("string write");
                if let Some((wa, wb)) = result.witness {
                    writeln!(out, "first: {}", join(&wa)).expect("string write");
                    writeln!(out, "second: {}", join(&wb)).expect("string write");
                }
            } else {
                writeln!(out, "{distance}").expect("string write");
            }
            Ok(0)
        }
        "pattern" => {
            request.check_known_flags(&[])?;
            let haystack = parse_either(request.arg(0, "haystack")?)?;
            let needle = parse_either_lenient(request.arg(1, "needle")?)?;
            let found = pattern_contains(&haystack, &needle)?;
            writeln!(out, "{found}").expect("string write");
            Ok(0)
        }
        "stats" => {
            request.check_known_flags(&[])?;
            let perm = parse_either(request.arg(0, "input")?)?;
            let tree = decode(&perm)?;
            writeln!(out, "n: {}", perm.len()).expect("string write");
            writeln!(out, "lis: {}", perm.lis_length()).expect("string write");
            writeln!(out, "lds: {}", perm.lds_length()).expect("string write");
            writeln!(out, "leaves: {}", tree.leaf_count()).expect("string write");
            writeln!(out, "height: {}", tree.height()).expect("string write");
            Ok(0)
        }
        "series" => {
            request.check_known_flags(&["n", "json"])?;
            let which = request.arg(0, "series name")?;
            let n = parse_usize(request.require_value("n")?, "order")?;
            let table = match which {
                "i" => leaf_series(n)?,
                "s1" => star_distance_series(n)?,
                "s2" => chain_distance_series(n)?,
                "d" => deep_leaf_table(n)?,
                "narayana" => narayana_table(n)?,
                other => {
                    return Err(Error::Domain(format!(
                        "unknown series {other:?}; expected i, s1, s2, d, or narayana"
                    )))
                }
            };
            if request.flag("json") {
                writeln!(out, "{}", table_to_json(which, n, &table)).expect("string write");
            } else {
                for (idx, coeff) in table.iter_nonzero() {
                    for exp in &idx {
                        write!(out, "{exp} ").expect("string write");
                    }
                    writeln!(out, "{coeff}").expect("string write");
                }
            }
            Ok(0)
        }
        "avg" => {
            request.check_known_flags(&["target", "n"])?;
            let n = parse_usize(request.require_value("n")?, "size")?;
            match request.require_value("target")? {
                "id" => {
                    writeln!(out, "{}", average_distance_to_identity(n)?).expect("string write");
                }
                "chain" => {
                    let exact = average_distance_to_chain(n)?;
                    writeln!(out, "{exact}").expect("string write");
                    let asymptotic = chain_distance_asymptotic(n);
                    writeln!(out, "asymptotic: {asymptotic:.6}").expect("string write");
                    if asymptotic > 0.0 {
                        let approx = exact.to_f64().unwrap_or(f64::NAN);
                        let relative = (approx - asymptotic).abs() / asymptotic;
                        writeln!(out, "relative-error: {relative:.6}").expect("string write");
                    }
                }
                other => {
                    return Err(Error::Domain(format!(
                        "unknown target {other:?}; expected id or chain"
                    )))
                }
            }
            Ok(0)
        }
        "verify" => {
            request.check_known_flags(&["suite", "max-n"])?;
            let suite = request.require_value("suite")?;
            let max_n = parse_usize(request.require_value("max-n")?, "max n")?;
            let reports = run_suite(suite, max_n)?;
            let mut failures = 0;
            for r in &reports {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                if !r.passed {
                    failures += 1;
                }
                writeln!(out, "{tag} {}: {}", r.name, r.detail).expect("string write");
            }
            writeln!(
                out,
                "{} of {} checks passed (suite {suite}, max n {max_n})",
                reports.len() - failures,
                reports.len()
            )
            .expect("string write");
            Ok(if failures == 0 { 0 } else { 1 })
        }
        other => Err(Error::Domain(format!(
            "unknown command {other:?}; run with --help for usage"
        ))),
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The Narayana triangle through row n, packaged as a table for uniform
/// printing.
fn narayana_table(n: usize) -> Result<SeriesTable> {
    if n > SERIES_ORDER_CAP {
        return Err(Error::SizeLimit {
            limit: SERIES_ORDER_CAP,
            actual: n,
        });
    }
    let mut table = SeriesTable::new(&["n", "k"], &[n + 1, n + 1]);
    for row in 1..=n {
        for k in 1..=row {
            table.set(&[row, k], narayana(row, k)?);
        }
    }
    Ok(table)
}

fn table_to_json(name: &str, order: usize, table: &SeriesTable) -> String {
    let mut json = String::new();
    write!(json, "{{\"series\":\"{name}\",\"n\":{order},\"vars\":[").expect("string write");
    for (i, var) in table.vars().iter().enumerate() {
        if i > 0 {
            json.push(',');
        }
        write!(json, "\"{var}\"").expect("string write");
    }
    json.push_str("],\"coeffs\":[");
    let mut first = true;
    for (idx, coeff) in table.iter_nonzero() {
        if !first {
            json.push(',');
        }
        first = false;
        json.push('[');
        for exp in &idx {
            write!(json, "{exp},").expect("string write");
        }
        write!(json, "\"{coeff}\"]").expect("string write");
    }
    json.push_str("]}");
    json
}
