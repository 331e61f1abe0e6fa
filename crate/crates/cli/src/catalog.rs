//! Catalog files and the suite runner.
//!
//! One job per line, fields separated by `|`:
//!
//! ```text
//! # comment
//! verify          | C(4) | index:1 | 0..3
//! verify-basis    | S(3) | all     | 0,1,2 | seed:7
//! verify-product  | S(2) | sign    | C(3) | all | 2
//! verify-plethysm | S(2) | unit    | S(2) | unit
//! ```
//!
//! After the command come one `group | character` pair (two for the
//! product and insertion checks; `characters` takes only a group), then
//! optionally a list of `n` values and a `seed:S`. The character `all`
//! stands for every linear character of the group, and `a..b` is an
//! inclusive range.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::json;

use crate::charsel::CharSelector;
use crate::expr::GroupExpr;
use crate::job::{run, Command, JobSpec};
use crate::{CliError, Format, Outcome, Status};
use polya_core::{enumerate_linear_characters, Caps};

#[derive(Clone, Debug, PartialEq, Eq)]
enum CharField {
    All,
    One(CharSelector),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    line: usize,
    raw: String,
    command: Command,
    groups: Vec<GroupExpr>,
    chars: Vec<CharField>,
    ns: Vec<Option<u32>>,
    seed: Option<u64>,
}

fn parse_ns(field: &str) -> Option<Vec<Option<u32>>> {
    let mut out = Vec::new();
    for part in field.split(',').map(str::trim) {
        if let Some((a, b)) = part.split_once("..") {
            let (a, b): (u32, u32) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            if a > b {
                return None;
            }
            out.extend((a..=b).map(Some));
        } else {
            out.push(Some(part.parse().ok()?));
        }
    }
    Some(out)
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CliError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let bad = |why: String| CliError::Usage(format!("catalog line {line}: {why}"));
        let fields: Vec<&str> = body.split('|').map(str::trim).collect();
        let command = Command::from_name(fields[0])
            .ok_or_else(|| bad(format!("unknown command {:?}", fields[0])))?;
        let with_char = command != Command::Characters;
        let per = if with_char { 2 } else { 1 };
        let head = 1 + per * command.arity();
        if fields.len() < head {
            return Err(bad(format!("{} needs {} fields", fields[0], head - 1)));
        }
        let mut groups = Vec::new();
        let mut chars = Vec::new();
        for k in 0..command.arity() {
            let at = 1 + per * k;
            groups.push(GroupExpr::parse(fields[at]).map_err(|e| bad(e.to_string()))?);
            if with_char {
                let c = fields[at + 1];
                chars.push(if c == "all" {
                    CharField::All
                } else {
                    CharField::One(CharSelector::parse(c).map_err(|e| bad(e.to_string()))?)
                });
            }
        }
        let mut ns = vec![None];
        let mut seed = None;
        for f in &fields[head..] {
            if let Some(s) = f.strip_prefix("seed:") {
                seed = Some(
                    s.trim()
                        .parse()
                        .map_err(|_| bad(format!("bad seed {s:?}")))?,
                );
            } else {
                ns = parse_ns(f).ok_or_else(|| bad(format!("bad n list {f:?}")))?;
            }
        }
        entries.push(CatalogEntry {
            line,
            raw: body.to_string(),
            command,
            groups,
            chars,
            ns,
            seed,
        });
    }
    Ok(entries)
}

/// A job ready to run, or an entry that could not be expanded.
enum Planned {
    Job(JobSpec),
    Broken { label: String, error: String },
}

fn expand(entry: &CatalogEntry, caps: Caps) -> Vec<Planned> {
    let mut choices: Vec<Vec<CharSelector>> = Vec::new();
    for (g, c) in entry.groups.iter().zip(&entry.chars) {
        match c {
            CharField::One(sel) => choices.push(vec![sel.clone()]),
            CharField::All => {
                let count = g
                    .build_arc()
                    .and_then(|grp| Ok(enumerate_linear_characters(&grp)?.len()));
                match count {
                    Ok(k) => choices.push((0..k).map(CharSelector::Index).collect()),
                    Err(e) => {
                        return vec![Planned::Broken {
                            label: format!("line {}: {}", entry.line, entry.raw),
                            error: e.to_string(),
                        }]
                    }
                }
            }
        }
    }
    // cartesian product, first pair slowest
    let mut combos: Vec<Vec<CharSelector>> = vec![Vec::new()];
    for opts in &choices {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for chars in combos {
        for &n in &entry.ns {
            out.push(Planned::Job(JobSpec {
                command: entry.command,
                groups: entry.groups.clone(),
                chars: chars.clone(),
                n,
                seed: entry.seed,
                format: Format::Text,
                caps,
            }));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobResult {
    pub label: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub results: Vec<JobResult>,
}

impl SuiteReport {
    pub fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.count(Status::Ok) - self.count(Status::Cap)
    }

    pub fn status(&self) -> Status {
        if self.results.is_empty() {
            Status::Usage
        } else if self.failed() > 0 {
            Status::Mismatch
        } else if self.count(Status::Cap) > 0 {
            Status::Cap
        } else {
            Status::Ok
        }
    }

    pub fn render(&self, format: Format) -> String {
        let (total, passed, capped, failed) = (
            self.results.len(),
            self.count(Status::Ok),
            self.count(Status::Cap),
            self.failed(),
        );
        match format {
            Format::Json => {
                let jobs: Vec<_> = self
                    .results
                    .iter()
                    .map(|r| json!({ "job": r.label, "status": tag(r.status), "detail": r.detail }))
                    .collect();
                let v = json!({
                    "total": total,
                    "passed": passed,
                    "failed": failed,
                    "capped": capped,
                    "jobs": jobs,
                });
                serde_json::to_string_pretty(&v).expect("serializable") + "\n"
            }
            Format::Tsv => {
                let mut s = String::from("status\tjob\tdetail\n");
                for r in &self.results {
                    writeln!(
                        s,
                        "{}\t{}\t{}",
                        tag(r.status),
                        r.label,
                        r.detail.replace('\n', " / ")
                    )
                    .unwrap();
                }
                s
            }
            Format::Text => {
                let mut s = String::new();
                for r in &self.results {
                    let t = match r.status {
                        Status::Ok => "PASS",
                        Status::Cap => "CAP ",
                        _ => "FAIL",
                    };
                    writeln!(s, "{t} {}", r.label).unwrap();
                    if r.status != Status::Ok {
                        for l in r.detail.lines() {
                            writeln!(s, "     {l}").unwrap();
                        }
                    }
                }
                writeln!(
                    s,
                    "summary: {total} jobs, {passed} passed, {failed} failed, {capped} capped"
                )
                .unwrap();
                s
            }
        }
    }
}

fn tag(s: Status) -> &'static str {
    match s {
        Status::Ok => "pass",
        Status::Mismatch => "mismatch",
        Status::Usage => "error",
        Status::Cap => "cap",
    }
}

/// Runs every job of the catalog on `jobs` worker threads (0 = rayon's
/// default). Results keep catalog order.
pub fn run_suite(
    entries: &[CatalogEntry],
    caps: Caps,
    jobs: usize,
) -> Result<SuiteReport, CliError> {
    let planned: Vec<Planned> = entries.iter().flat_map(|e| expand(e, caps)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start workers: {e}")))?;
    let results = pool.install(|| {
        planned
            .par_iter()
            .map(|p| match p {
                Planned::Job(spec) => {
                    let Outcome { status, output } = run(spec);
                    let detail = if status == Status::Ok {
                        String::new()
                    } else {
                        output.trim_end().to_string()
                    };
                    JobResult {
                        label: spec.label(),
                        status,
                        detail,
                    }
                }
                Planned::Broken { label, error } => JobResult {
                    label: label.clone(),
                    status: Status::Usage,
                    detail: format!("error: {error}"),
                },
            })
            .collect()
    });
    Ok(SuiteReport { results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lines() {
        let c = parse_catalog(
            "# header\n\nverify | C(4) | index:1 | 0..2\nverify-product | S(2) | sign | C(3) | all\ncharacters | S(3)\nverify-basis | S(2) | all | 1 | seed:3 # tail\n",
        )
        .unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[0].ns, vec![Some(0), Some(1), Some(2)]);
        assert_eq!(c[1].ns, vec![None]);
        assert_eq!(c[3].seed, Some(3));
        let planned = expand(&c[1], Caps::default());
        assert_eq!(planned.len(), 3);
        for bad in [
            "verify | S(3)",
            "frobnicate | S(3) | unit",
            "verify | S(3) | unit | 3..1",
            "verify | Q(3) | unit | 1",
        ] {
            assert!(parse_catalog(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn statuses() {
        let c =
            parse_catalog("verify | S(3) | all | 1\nverify | S(3) | vals{g1:1/3} | 1\n").unwrap();
        let r = run_suite(&c, Caps::default(), 2).unwrap();
        assert_eq!(r.results.len(), 3);
        assert_eq!(r.failed(), 1);
        assert_eq!(r.status(), Status::Mismatch);
        assert!(r
            .render(Format::Text)
            .contains("FAIL verify | S(3) | vals{g1:1/3} | 1"));
        assert_eq!(
            run_suite(&[], Caps::default(), 1).unwrap().status(),
            Status::Usage
        );
    }
}
