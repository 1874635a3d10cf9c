//! Command-line front end. [`run`] parses arguments, performs one operation
//! and writes a result document; the binary is a thin wrapper around it.
//!
//! Exit status: 0 success, 1 a "no" answer when `--exit-code` is given,
//! 2 usage or input errors, 3 search budget exhausted.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::document::{committee_value, committees_value, ResultDocument};
use super::format::{parse_election, serialize_election};
use crate::decision::{candidate_winner, winner_verification};
use crate::error::{Error, Result};
use crate::misrep::{committee_score, Aggregation, Dissatisfaction, Objective};
use crate::model::{BallotKind, CandidateId, Committee, Election};
use crate::reductions::{
    gen_cccw_from_vcm, gen_ccwv_from_hitting_set, gen_ccwv_linf_from_hitting_set, gen_mcw_from_vcm, validate_reduction,
    Equivalence, GadgetElection, HittingSetInstance, MonroeScale, Question, Source, VertexCoverMemberInstance,
};
use crate::single_peaked::{
    candidate_winner_single_peaked, recognize_single_peaked, solve_cc_single_peaked, Axis, Recognition, Refutation,
};
use crate::solve::{solve_exact, SolveOptions};

#[derive(Parser, Debug)]
#[command(name = "multiwinner", version, about = "Chamberlin-Courant and Monroe committee elections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleArg {
    Cc,
    Monroe,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BallotArg {
    Rankings,
    Approval,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AggArg {
    L1,
    Linf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScaleArg {
    Original,
    Test,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EmitArg {
    Election,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    #[value(name = "ccwv-l1")]
    CcwvL1,
    #[value(name = "ccwv-linf")]
    CcwvLinf,
    #[value(name = "mcw-l1")]
    McwL1,
    #[value(name = "cccw-linf")]
    CccwLinf,
}

#[derive(Args, Debug)]
struct ElectionArgs {
    /// Election file; `-` reads standard input.
    #[arg(short = 'f', long = "file")]
    file: String,
    /// Expected ballot kind; a mismatch with the file is an error.
    #[arg(long)]
    ballots: Option<BallotArg>,
}

#[derive(Args, Debug)]
struct ObjectiveArgs {
    #[arg(long, value_enum, default_value = "cc")]
    rule: RuleArg,
    #[arg(long, value_enum, default_value = "l1")]
    agg: AggArg,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Abort after this many search nodes (exit 3).
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct GadgetArgs {
    #[arg(value_enum)]
    kind: KindArg,
    /// Source instance (JSON); `-` reads standard input.
    #[arg(short = 'f', long = "file")]
    file: String,
    /// Dummy pool sizes for the Monroe gadget.
    #[arg(long, value_enum, default_value = "original")]
    scale: ScaleArg,
    /// Type-I block size under `--scale test`.
    #[arg(long, default_value_t = 2)]
    type1: usize,
    /// Type-II block size under `--scale test`.
    #[arg(long, default_value_t = 4)]
    type2: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Score a committee.
    Score {
        #[command(flatten)]
        election: ElectionArgs,
        #[command(flatten)]
        objective: ObjectiveArgs,
        /// Comma-separated committee labels.
        #[arg(short = 'w', long = "committee")]
        committee: String,
    },
    /// Find an optimal committee of size k.
    Solve {
        #[command(flatten)]
        election: ElectionArgs,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        k: usize,
        /// List every optimal committee.
        #[arg(long)]
        enumerate_all: bool,
    },
    /// Decide whether a committee is optimal for its size.
    Verify {
        #[command(flatten)]
        election: ElectionArgs,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(short = 'w', long = "committee")]
        committee: String,
        /// Must equal the committee size when given.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        exit_code: bool,
    },
    /// Decide whether a candidate belongs to some optimal committee.
    CandidateWinner {
        #[command(flatten)]
        election: ElectionArgs,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        candidate: String,
        #[arg(long)]
        exit_code: bool,
    },
    /// Find an axis the profile is single-peaked on, or a refutation.
    RecognizeSp {
        #[command(flatten)]
        election: ElectionArgs,
        #[arg(long)]
        exit_code: bool,
    },
    /// Optimal L1 Borda Chamberlin-Courant committee on a single-peaked profile.
    SolveSp {
        #[command(flatten)]
        election: ElectionArgs,
        #[arg(long)]
        k: usize,
        /// Comma-separated axis; recognized from the profile when omitted.
        #[arg(long)]
        axis: Option<String>,
    },
    /// Candidate Winner on a single-peaked profile via dummy voters.
    CandidateWinnerSp {
        #[command(flatten)]
        election: ElectionArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        candidate: String,
        #[arg(long)]
        axis: Option<String>,
        #[arg(long)]
        exit_code: bool,
    },
    /// Build a hardness gadget from a source instance.
    GenGadget {
        #[command(flatten)]
        gadget: GadgetArgs,
        /// Raw election file, or a document with the role table.
        #[arg(long, value_enum, default_value = "election")]
        emit: EmitArg,
    },
    /// Build a gadget, run its structural checks and compare answers.
    ValidateGadget {
        #[command(flatten)]
        gadget: GadgetArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        exit_code: bool,
    },
}

/// What a subcommand produced: text for stdout and, for decisions, the answer.
struct Outcome {
    text: String,
    answer: Option<bool>,
    exit_code: bool,
}

impl Outcome {
    fn doc(d: ResultDocument) -> Self {
        Outcome { text: d.to_json(), answer: None, exit_code: false }
    }

    fn decision(d: ResultDocument, answer: bool, exit_code: bool) -> Self {
        Outcome { text: d.to_json(), answer: Some(answer), exit_code }
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    let res = if path == "-" { std::io::stdin().read_to_string(&mut s).map(|_| ()) } else { std::fs::read_to_string(path).map(|t| s = t) };
    res.map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn load(args: &ElectionArgs) -> Result<Election> {
    let e = parse_election(&read_input(&args.file)?)?;
    let want = args.ballots.map(|b| match b {
        BallotArg::Rankings => BallotKind::Rankings,
        BallotArg::Approval => BallotKind::Approval,
    });
    if let Some(want) = want {
        if want != e.kind() {
            return Err(Error::InvalidArgument(format!("--ballots {} but the file holds {} ballots", want.name(), e.kind().name())));
        }
    }
    Ok(e)
}

fn objective(a: &ObjectiveArgs) -> Objective {
    let mode = match a.agg {
        AggArg::L1 => Aggregation::L1,
        AggArg::Linf => Aggregation::LInf,
    };
    match a.rule {
        RuleArg::Cc => Objective::cc(mode),
        RuleArg::Monroe => Objective::monroe(mode),
    }
}

fn candidate(e: &Election, label: &str) -> Result<CandidateId> {
    e.candidate_by_label(label.trim()).ok_or_else(|| Error::InvalidArgument(format!("unknown candidate {label:?}")))
}

fn label_list(e: &Election, list: &str) -> Result<Vec<CandidateId>> {
    let ids = list.split(',').filter(|s| !s.trim().is_empty()).map(|l| candidate(e, l)).collect::<Result<Vec<_>>>()?;
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ids.len() {
        return Err(Error::InvalidArgument(format!("repeated candidate in {list:?}")));
    }
    Ok(ids)
}

fn axis_for(e: &Election, given: Option<&str>) -> Result<Axis> {
    match given {
        Some(list) => Axis::new(label_list(e, list)?),
        None => match recognize_single_peaked(e)? {
            Recognition::SinglePeaked(axis) => Ok(axis),
            Recognition::NotSinglePeaked(_) => Err(Error::InvalidAxis("the profile is not single-peaked".into())),
        },
    }
}

fn axis_value(e: &Election, axis: &Axis) -> Value {
    Value::Array(axis.order().iter().map(|&c| e.label(c).into()).collect())
}

fn election_input(doc: ResultDocument, args: &ElectionArgs, e: &Election) -> ResultDocument {
    doc.input("file", args.file.as_str())
        .input("candidates", e.num_candidates())
        .input("voters", e.num_voters())
        .input("ballots", e.kind().name())
}

fn gadget(args: &GadgetArgs) -> Result<(GadgetElection, Value, SourceInstance)> {
    let text = read_input(&args.file)?;
    let bad = |e: serde_json::Error| Error::InvalidInstance(format!("{}: {e}", args.file));
    let scale = match args.scale {
        ScaleArg::Original => MonroeScale::Original,
        ScaleArg::Test => MonroeScale::Test { type1: args.type1, type2: args.type2 },
    };
    match args.kind {
        KindArg::CcwvL1 | KindArg::CcwvLinf => {
            let h: HittingSetInstance = serde_json::from_str(&text).map_err(bad)?;
            let ge = if matches!(args.kind, KindArg::CcwvL1) { gen_ccwv_from_hitting_set(&h)? } else { gen_ccwv_linf_from_hitting_set(&h)? };
            Ok((ge, serde_json::to_value(&h).expect("plain struct"), SourceInstance::HittingSet(h)))
        }
        KindArg::McwL1 | KindArg::CccwLinf => {
            let g: VertexCoverMemberInstance = serde_json::from_str(&text).map_err(bad)?;
            let ge = if matches!(args.kind, KindArg::McwL1) { gen_mcw_from_vcm(&g, scale)? } else { gen_cccw_from_vcm(&g)? };
            Ok((ge, serde_json::to_value(&g).expect("plain struct"), SourceInstance::VertexCover(g)))
        }
    }
}

enum SourceInstance {
    HittingSet(HittingSetInstance),
    VertexCover(VertexCoverMemberInstance),
}

fn question_value(ge: &GadgetElection) -> Value {
    let e = &ge.election;
    match &ge.question {
        Question::VerifyCommittee { committee, objective } => json!({
            "type": "winner-verification",
            "committee": committee_value(e, committee),
            "rule": objective.rule.name(),
            "agg": objective.mode.name(),
        }),
        Question::CandidateWinner { candidate, k, objective } => json!({
            "type": "candidate-winner",
            "candidate": e.label(*candidate),
            "k": k,
            "rule": objective.rule.name(),
            "agg": objective.mode.name(),
        }),
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Score { election, objective: o, committee } => {
            let e = load(&election)?;
            let obj = objective(&o);
            let w = Committee::new(label_list(&e, &committee)?);
            let score = committee_score(&e, &w, &obj)?;
            let doc = election_input(ResultDocument::new("score"), &election, &e)
                .objective(&e, &obj)
                .input("committee", committee_value(&e, &w))
                .output("score", score);
            Ok(Outcome::doc(doc))
        }
        Command::Solve { election, objective: o, search, k, enumerate_all } => {
            let e = load(&election)?;
            let obj = objective(&o);
            let opts = SolveOptions { enumerate_all, budget: search.budget };
            let r = solve_exact(&e, k, &obj, &opts)?;
            let doc = election_input(ResultDocument::new("solve"), &election, &e)
                .objective(&e, &obj)
                .input("k", k)
                .input("enumerate_all", enumerate_all)
                .output("opt_score", r.opt_score)
                .output("committees", committees_value(&e, &r.optimal_committees))
                .output("explored", r.explored);
            Ok(Outcome::doc(doc))
        }
        Command::Verify { election, objective: o, search, committee, k, exit_code } => {
            let e = load(&election)?;
            let obj = objective(&o);
            let w = Committee::new(label_list(&e, &committee)?);
            if let Some(k) = k {
                if k != w.size() {
                    return Err(Error::InvalidArgument(format!("--k {k} but the committee has {} members", w.size())));
                }
            }
            let opts = SolveOptions { enumerate_all: false, budget: search.budget };
            let v = winner_verification(&e, &w, &obj, &opts)?;
            let doc = election_input(ResultDocument::new("verify"), &election, &e)
                .objective(&e, &obj)
                .input("committee", committee_value(&e, &w))
                .output("is_optimal", v.is_optimal)
                .output("score", v.committee_score)
                .output("witness", v.witness.as_ref().map_or(Value::Null, |c| committee_value(&e, c)));
            Ok(Outcome::decision(doc, v.is_optimal, exit_code))
        }
        Command::CandidateWinner { election, objective: o, search, k, candidate: c, exit_code } => {
            let e = load(&election)?;
            let obj = objective(&o);
            let id = candidate(&e, &c)?;
            let opts = SolveOptions { enumerate_all: false, budget: search.budget };
            let r = candidate_winner(&e, id, k, &obj, &opts)?;
            let doc = election_input(ResultDocument::new("candidate-winner"), &election, &e)
                .objective(&e, &obj)
                .input("k", k)
                .input("candidate", e.label(id))
                .output("member_of_some_optimum", r.member_of_some_optimum)
                .output("opt", r.opt)
                .output("opt_with_candidate", r.opt_c);
            Ok(Outcome::decision(doc, r.member_of_some_optimum, exit_code))
        }
        Command::RecognizeSp { election, exit_code } => {
            let e = load(&election)?;
            let doc = election_input(ResultDocument::new("recognize-sp"), &election, &e);
            let (answer, doc) = match recognize_single_peaked(&e)? {
                Recognition::SinglePeaked(axis) => {
                    (true, doc.output("single_peaked", true).output("axis", axis_value(&e, &axis)))
                }
                Recognition::NotSinglePeaked(r) => {
                    let refutation = match r {
                        Refutation::ThreeBottoms { subset, witnesses } => json!({
                            "kind": "three-bottoms",
                            "subset": subset.iter().map(|&c| e.label(c)).collect::<Vec<_>>(),
                            "witnesses": witnesses.iter().map(|&(v, c)| json!({"voter": v, "bottom": e.label(c)})).collect::<Vec<_>>(),
                        }),
                        Refutation::NoConsistentAxis => json!({ "kind": "no-consistent-axis" }),
                    };
                    (false, doc.output("single_peaked", false).output("refutation", refutation))
                }
            };
            Ok(Outcome::decision(doc, answer, exit_code))
        }
        Command::SolveSp { election, k, axis } => {
            let e = load(&election)?;
            let axis = axis_for(&e, axis.as_deref())?;
            let alpha = Dissatisfaction::borda(e.num_candidates())?;
            let r = solve_cc_single_peaked(&e, &axis, k, &alpha)?;
            let doc = election_input(ResultDocument::new("solve-sp"), &election, &e)
                .objective(&e, &Objective::cc(Aggregation::L1))
                .input("k", k)
                .input("axis", axis_value(&e, &axis))
                .output("opt_score", r.opt_score)
                .output("committees", committees_value(&e, &r.optimal_committees));
            Ok(Outcome::doc(doc))
        }
        Command::CandidateWinnerSp { election, k, candidate: c, axis, exit_code } => {
            let e = load(&election)?;
            let id = candidate(&e, &c)?;
            let axis = axis_for(&e, axis.as_deref())?;
            let member = candidate_winner_single_peaked(&e, &axis, id, k)?;
            let doc = election_input(ResultDocument::new("candidate-winner-sp"), &election, &e)
                .objective(&e, &Objective::cc(Aggregation::L1))
                .input("k", k)
                .input("candidate", e.label(id))
                .input("axis", axis_value(&e, &axis))
                .output("member_of_some_optimum", member);
            Ok(Outcome::decision(doc, member, exit_code))
        }
        Command::GenGadget { gadget: args, emit } => {
            let (ge, source, _) = gadget(&args)?;
            let text = serialize_election(&ge.election)?;
            match emit {
                EmitArg::Election => Ok(Outcome { text, answer: None, exit_code: false }),
                EmitArg::Json => {
                    let roles: Vec<Value> =
                        (0..ge.roles.len()).map(|c| json!([ge.election.label(c), ge.roles[c].name()])).collect();
                    let doc = ResultDocument::new("gen-gadget")
                        .input("kind", ge.kind.name())
                        .input("source", source)
                        .output("question", question_value(&ge))
                        .output("roles", roles)
                        .output("election", text);
                    Ok(Outcome::doc(doc))
                }
            }
        }
        Command::ValidateGadget { gadget: args, search, exit_code } => {
            let (ge, source_value, source) = gadget(&args)?;
            let src = match &source {
                SourceInstance::HittingSet(h) => Source::HittingSet(h),
                SourceInstance::VertexCover(g) => Source::VertexCover(g),
            };
            let opts = SolveOptions { enumerate_all: false, budget: search.budget };
            let report = validate_reduction(&ge, src, &opts)?;
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            let equivalence = match &report.equivalence {
                Equivalence::Agrees { gadget, expected } => json!({"status": "agrees", "gadget": gadget, "expected": expected}),
                Equivalence::Disagrees { gadget, expected } => json!({"status": "disagrees", "gadget": gadget, "expected": expected}),
                Equivalence::NotClaimed { gadget, expected } => json!({"status": "not-claimed", "gadget": gadget, "expected": expected}),
                Equivalence::BudgetExhausted { explored, expected } => json!({"status": "budget-exhausted", "explored": explored, "expected": expected}),
                Equivalence::Skipped { reason, expected } => json!({"status": "skipped", "reason": reason, "expected": expected}),
            };
            let ok = report.structural_ok() && report.agrees() != Some(false);
            let doc = ResultDocument::new("validate-gadget")
                .input("kind", ge.kind.name())
                .input("source", source_value)
                .input("candidates", ge.election.num_candidates())
                .input("voters", ge.election.num_voters())
                .output("structural_ok", report.structural_ok())
                .output("checks", checks)
                .output("equivalence", equivalence)
                .output("notes", report.notes.clone());
            Ok(Outcome::decision(doc, ok, exit_code))
        }
    }
}

/// Runs the command line `args` (including the program name), writing the
/// result to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            match outcome.answer {
                Some(false) if outcome.exit_code => 1,
                _ => 0,
            }
        }
        Err(Error::BudgetExhausted { explored }) => {
            let doc = ResultDocument::new("error").output("status", "budget-exhausted").output("explored", explored);
            let _ = out.write_all(doc.to_json().as_bytes());
            let _ = writeln!(err, "error: search budget exhausted after {explored} nodes");
            3
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
