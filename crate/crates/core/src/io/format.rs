//! The election line format.
//!
//! ```text
//! # three candidates, four voters
//! ballots: rankings
//! m: 3
//! labels: a,b,c
//! 3, a>b>c
//! 1, c>b>a
//! ```
//!
//! Approval bodies use `1, {a,c}`. Without a `labels:` line, candidates are
//! written as 0-based ids. Header lines precede the body; `#` starts a comment.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Diagnostic, Error, Result, Violation};
use crate::model::{check_parts, ApprovalBallot, BallotKind, CandidateId, Election, Profile, Ranking};

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || ",>{}#:".contains(c))
}

struct Header {
    kind: Option<BallotKind>,
    m: Option<usize>,
    labels: Option<Vec<String>>,
}

fn resolve(token: &str, m: usize, labels: Option<&HashMap<String, CandidateId>>) -> std::result::Result<CandidateId, String> {
    match labels {
        Some(l) => l.get(token).copied().ok_or_else(|| format!("unknown candidate label {token:?}")),
        None => match token.parse::<usize>() {
            Ok(c) if c < m => Ok(c),
            Ok(c) => Err(format!("candidate id out of range ({c})")),
            Err(_) => Err(format!("unknown candidate label {token:?}")),
        },
    }
}

fn violation_line(v: &Violation, lines: &[usize]) -> usize {
    match v {
        Violation::ZeroWeight { voter }
        | Violation::DuplicateCandidate { voter, .. }
        | Violation::IdOutOfRange { voter, .. }
        | Violation::MissingCandidate { voter, .. } => lines[*voter],
        _ => 0,
    }
}

/// Parses and validates an election. Every problem found is reported, each
/// with its 1-based line (0 for whole-file problems).
pub fn parse_election(text: &str) -> Result<Election> {
    let mut diags = Vec::new();
    let mut header = Header { kind: None, m: None, labels: None };
    let mut rankings = Vec::new();
    let mut approvals = Vec::new();
    let mut body_lines = Vec::new();
    let mut in_body = false;
    let mut index: Option<HashMap<String, CandidateId>> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut diag = |message: String| diags.push(Diagnostic { line: line_no, message });
        if let Some((key, value)) = line.split_once(':') {
            if in_body {
                diag("header line after the first ballot".into());
                continue;
            }
            let value = value.trim();
            match key.trim() {
                "ballots" => match value {
                    "rankings" => header.kind = Some(BallotKind::Rankings),
                    "approval" => header.kind = Some(BallotKind::Approval),
                    other => diag(format!("unknown ballot kind {other:?}")),
                },
                "m" => match value.parse() {
                    Ok(m) => header.m = Some(m),
                    Err(_) => diag(format!("malformed candidate count {value:?}")),
                },
                "labels" => {
                    let labels: Vec<String> = value.split(',').map(|s| s.trim().to_string()).collect();
                    if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
                        diag(format!("malformed label {bad:?}"));
                    }
                    header.labels = Some(labels);
                }
                other => diag(format!("unknown header key {other:?}")),
            }
            continue;
        }

        if !in_body {
            in_body = true;
            match (header.kind, header.m) {
                (None, _) => diag("missing \"ballots:\" header".into()),
                (_, None) => diag("missing \"m:\" header".into()),
                _ => {}
            }
            if let (Some(m), Some(l)) = (header.m, &header.labels) {
                if l.len() != m {
                    diag(format!("expected {m} labels, found {}", l.len()));
                }
            }
            index = header.labels.as_ref().map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect());
        }
        let (Some(kind), Some(m)) = (header.kind, header.m) else { continue };
        let labels = index.as_ref();

        let Some((w, ballot)) = line.split_once(',') else {
            diag("expected \"weight, ballot\"".into());
            continue;
        };
        let weight = match w.trim().parse::<u64>() {
            Ok(w) => w,
            Err(_) => {
                diag(format!("malformed weight {:?}", w.trim()));
                continue;
            }
        };
        let ballot = ballot.trim();
        let tokens: Vec<&str> = match kind {
            BallotKind::Rankings => ballot.split('>').map(str::trim).collect(),
            BallotKind::Approval => {
                let Some(inner) = ballot.strip_prefix('{').and_then(|s| s.strip_suffix('}')) else {
                    diag("approval ballot must be written {a,b,...}".into());
                    continue;
                };
                let inner = inner.trim();
                if inner.is_empty() { Vec::new() } else { inner.split(',').map(str::trim).collect() }
            }
        };
        let mut ids = Vec::with_capacity(tokens.len());
        let mut seen = BTreeSet::new();
        let mut ok = true;
        for t in tokens {
            match resolve(t, m, labels) {
                Ok(c) if !seen.insert(c) => {
                    diag(format!("duplicate candidate {t:?}"));
                    ok = false;
                }
                Ok(c) => ids.push(c),
                Err(message) => {
                    diag(message);
                    ok = false;
                }
            }
        }
        if !ok {
            continue;
        }
        body_lines.push(line_no);
        match kind {
            BallotKind::Rankings => rankings.push(Ranking::new(ids, weight)),
            BallotKind::Approval => approvals.push(ApprovalBallot::new(ids, weight)),
        }
    }

    if !in_body && diags.is_empty() {
        diags.push(Diagnostic { line: 0, message: "no ballots".into() });
    }
    if !diags.is_empty() {
        return Err(Error::Parse(diags));
    }
    let m = header.m.expect("checked at first ballot");
    let profile = match header.kind.expect("checked at first ballot") {
        BallotKind::Rankings => Profile::Rankings(rankings),
        BallotKind::Approval => Profile::Approval(approvals),
    };
    let violations = check_parts(m, header.labels.as_deref(), &profile);
    if !violations.is_empty() {
        return Err(Error::Parse(
            violations
                .iter()
                .map(|v| Diagnostic { line: violation_line(v, &body_lines), message: v.to_string() })
                .collect(),
        ));
    }
    match header.labels {
        Some(labels) => Election::with_labels(labels, profile),
        None => Election::new(m, profile),
    }
}

/// Writes `e` in the line format. Labels must be free of whitespace and of
/// the characters `,>{}#:`.
pub fn serialize_election(e: &Election) -> Result<String> {
    if let Some(labels) = e.labels() {
        if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
            return Err(Error::InvalidArgument(format!("label {bad:?} cannot be written")));
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "ballots: {}", e.kind().name());
    let _ = writeln!(out, "m: {}", e.num_candidates());
    if let Some(labels) = e.labels() {
        let _ = writeln!(out, "labels: {}", labels.join(","));
    }
    let names = |ids: &mut dyn Iterator<Item = CandidateId>, sep: &str| ids.map(|c| e.label(c)).collect::<Vec<_>>().join(sep);
    match e.profile() {
        Profile::Rankings(rs) => {
            for r in rs {
                let _ = writeln!(out, "{}, {}", r.weight(), names(&mut r.order().iter().copied(), ">"));
            }
        }
        Profile::Approval(bs) => {
            for b in bs {
                let _ = writeln!(out, "{}, {{{}}}", b.weight(), names(&mut b.approved().iter().copied(), ","));
            }
        }
    }
    Ok(out)
}
