//! `squier`: command-line front end.
//!
//! Each subcommand is a [`Subcommand`] trait object in a registry. The driver
//! builds the clap command tree from the registry, dispatches on the chosen name
//! and prints the returned report as JSON, flattened text or DOT.
//!
//! Exit codes: 0 success, 1 a definite negative answer, 2 a search cap was hit,
//! 3 bad input.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{value_parser, Arg, ArgAction, ArgMatches, Command};
use serde_json::{json, Map, Value};

use squier_core::decomposition::{technical_lemma_holds, vertex_spaces_match, Decomposer};
use squier_core::diagrams::Diagram;
use squier_core::farley::{property_b_scan, RankedBall};
use squier_core::interval::{self, IntervalCollection, Recognition, SimpleGraph};
use squier_core::oracle::Oracle;
use squier_core::raag::build_apw;
use squier_core::rewriting::{Move, Presentation, SearchCaps, Verdict, Word};
use squier_core::squier::{dimension_at_least, specialness_report, Squier, SquierBall};
use squier_core::{dot, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    No,
    Unknown,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::No => 1,
            Status::Unknown => 2,
        }
    }

    fn of(v: Verdict) -> Self {
        match v {
            Verdict::Yes => Status::Ok,
            Verdict::No => Status::No,
            Verdict::Unknown => Status::Unknown,
        }
    }

    fn check(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::No
        }
    }
}

struct Report {
    json: Value,
    dot: Option<String>,
    status: Status,
}

impl Report {
    fn new(json: Value, status: Status) -> Self {
        Report { json, dot: None, status }
    }

    fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }
}

trait Subcommand {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn args(&self) -> Vec<Arg>;
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report>;
}

fn registry() -> Vec<Box<dyn Subcommand>> {
    vec![
        Box::new(ClassCmd),
        Box::new(EqualCmd),
        Box::new(ReduceCmd),
        Box::new(ComposeCmd),
        Box::new(SquierCmd),
        Box::new(HyperplanesCmd),
        Box::new(RelateCmd),
        Box::new(SpecialCmd),
        Box::new(DimCmd),
        Box::new(RankTableCmd),
        Box::new(PhiCmd),
        Box::new(FarleyCmd),
        Box::new(EmbedCheckCmd),
        Box::new(PropBCmd),
        Box::new(DecomposeCmd),
        Box::new(EulerCmd),
        Box::new(IntervalCmd),
        Box::new(VerifyRaagCmd),
    ]
}

// ---- shared arguments and loaders ----

fn pres_arg() -> Arg {
    Arg::new("pres").short('p').long("pres").required(true).help("presentation file")
}

fn word_arg() -> Arg {
    Arg::new("word").short('w').long("word").required(true).help("base word, letters separated by spaces")
}

fn diagram_arg(required: bool) -> Arg {
    Arg::new("diagram").short('d').long("diagram").action(ArgAction::Append).required(required).help("diagram file")
}

fn radius_arg(default: &'static str) -> Arg {
    Arg::new("radius").short('r').long("radius").value_parser(value_parser!(usize)).default_value(default)
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))
}

fn presentation(m: &ArgMatches) -> Result<Presentation> {
    Presentation::parse(&read_file(m.get_one::<String>("pres").expect("required"))?)
}

fn word(m: &ArgMatches, p: &Presentation, key: &str) -> Result<Word> {
    p.nonempty_word(m.get_one::<String>(key).expect("required"))
}

fn diagrams(m: &ArgMatches, p: &Presentation) -> Result<Vec<Diagram>> {
    m.get_many::<String>("diagram").into_iter().flatten().map(|f| Diagram::parse(p, &read_file(f)?)).collect()
}

fn moves_json(moves: &[Move]) -> Value {
    Value::from(moves.iter().map(|m| m.to_string()).collect::<Vec<_>>())
}

fn words_json(p: &Presentation, words: &[Word]) -> Value {
    Value::from(words.iter().map(|w| p.render(w)).collect::<Vec<_>>())
}

fn diagram_json(p: &Presentation, d: &Diagram) -> Value {
    json!({
        "top": p.render(d.top()),
        "bottom": p.render(d.bot()),
        "moves": moves_json(d.moves()),
        "cells": d.cells(),
        "spherical": d.is_spherical(),
    })
}

// ---- words and diagrams ----

struct ClassCmd;

impl Subcommand for ClassCmd {
    fn name(&self) -> &'static str {
        "class"
    }
    fn about(&self) -> &'static str {
        "enumerate the words equal to w"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg()]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let class = Oracle::new(&p, caps).class(&w);
        let status = if class.complete { Status::Ok } else { Status::Unknown };
        let json = json!({
            "size": class.len(),
            "complete": class.complete,
            "least": p.render(class.least()),
            "members": words_json(&p, &class.members),
        });
        Ok(Report::new(json, status))
    }
}

struct EqualCmd;

impl Subcommand for EqualCmd {
    fn name(&self) -> &'static str {
        "equal"
    }
    fn about(&self) -> &'static str {
        "decide whether w1 = w2 and give a derivation"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), Arg::new("w1").long("w1").required(true), Arg::new("w2").long("w2").required(true)]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let (w1, w2) = (word(m, &p, "w1")?, word(m, &p, "w2")?);
        let eq = Oracle::new(&p, caps).equal(&w1, &w2);
        let mut json = json!({ "verdict": eq.verdict.as_str(), "exact": eq.verdict != Verdict::Unknown });
        let mut dot_text = None;
        if let Some(moves) = &eq.derivation {
            let d = Diagram::new(&p, &w1, moves.clone())?;
            json["derivation"] = moves_json(moves);
            json["steps"] = words_json(&p, &p.replay(&w1, moves)?);
            json["diagram"] = diagram_json(&p, &d);
            dot_text = Some(dot::diagram(&p, &d));
        }
        let report = Report::new(json, Status::of(eq.verdict));
        Ok(match dot_text {
            Some(d) => report.with_dot(d),
            None => report,
        })
    }
}

struct ReduceCmd;

impl Subcommand for ReduceCmd {
    fn name(&self) -> &'static str {
        "reduce"
    }
    fn about(&self) -> &'static str {
        "cancel all dipoles of a diagram"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), diagram_arg(true)]
    }
    fn run(&self, m: &ArgMatches, _caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let d = diagrams(m, &p)?.remove(0);
        let r = d.reduce(&p);
        let json = json!({ "input_cells": d.cells(), "reduced": diagram_json(&p, &r), "text": r.to_text(&p) });
        Ok(Report::new(json, Status::Ok).with_dot(dot::diagram(&p, &r)))
    }
}

struct ComposeCmd;

impl Subcommand for ComposeCmd {
    fn name(&self) -> &'static str {
        "compose"
    }
    fn about(&self) -> &'static str {
        "glue diagrams top to bottom (or side by side with --sum)"
    }
    fn args(&self) -> Vec<Arg> {
        vec![
            pres_arg(),
            diagram_arg(true),
            Arg::new("sum").long("sum").action(ArgAction::SetTrue),
            Arg::new("reduce").long("reduce").action(ArgAction::SetTrue),
        ]
    }
    fn run(&self, m: &ArgMatches, _caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let ds = diagrams(m, &p)?;
        let mut out = ds[0].clone();
        for d in &ds[1..] {
            out = if m.get_flag("sum") { out.sum(d) } else { out.compose(&p, d)? };
        }
        if m.get_flag("reduce") {
            out = out.reduce(&p);
        }
        let json = json!({ "result": diagram_json(&p, &out), "text": out.to_text(&p) });
        Ok(Report::new(json, Status::Ok).with_dot(dot::diagram(&p, &out)))
    }
}

// ---- Squier complex and hyperplanes ----

struct SquierCmd;

impl Subcommand for SquierCmd {
    fn name(&self) -> &'static str {
        "squier"
    }
    fn about(&self) -> &'static str {
        "build the Squier complex ball around w"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg()]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let oracle = Oracle::new(&p, caps);
        let s = Squier::new(&oracle, &w)?;
        let json = json!({
            "vertices": words_json(&p, &s.ball.vertices),
            "edge_count": s.ball.edges.len(),
            "cube_counts": s.ball.cube_counts(),
            "dimension": s.ball.dimension(),
            "complete": s.ball.complete,
            "hyperplanes_exact": s.table.exact(),
        });
        let status = if s.ball.complete { Status::Ok } else { Status::Unknown };
        Ok(Report::new(json, status).with_dot(dot::squier_ball(&p, &s.ball, Some(&s.table))))
    }
}

struct HyperplanesCmd;

impl Subcommand for HyperplanesCmd {
    fn name(&self) -> &'static str {
        "hyperplanes"
    }
    fn about(&self) -> &'static str {
        "list the hyperplanes met by the ball"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg()]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let oracle = Oracle::new(&p, caps);
        let s = Squier::new(&oracle, &w)?;
        let mut counts = vec![0usize; s.table.len()];
        for &h in &s.table.of_edge {
            counts[h] += 1;
        }
        let rows: Vec<Value> = s
            .table
            .ids
            .iter()
            .zip(&counts)
            .map(|(h, c)| json!({ "hyperplane": h.render(&p), "edges": c, "exact": h.exact }))
            .collect();
        let json = json!({ "count": rows.len(), "hyperplanes": rows, "complete": s.ball.complete, "exact": s.table.exact() });
        Ok(Report::new(json, Status::Ok).with_dot(dot::squier_ball(&p, &s.ball, Some(&s.table))))
    }
}

struct RelateCmd;

impl Subcommand for RelateCmd {
    fn name(&self) -> &'static str {
        "relate"
    }
    fn about(&self) -> &'static str {
        "relative position of two hyperplanes (indices as in rank-table), or of all pairs"
    }
    fn args(&self) -> Vec<Arg> {
        vec![
            pres_arg(),
            word_arg(),
            Arg::new("h1").long("h1").value_parser(value_parser!(usize)).requires("h2"),
            Arg::new("h2").long("h2").value_parser(value_parser!(usize)).requires("h1"),
        ]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let oracle = Oracle::new(&p, caps);
        let s = Squier::new(&oracle, &w)?;
        let ids = s.transversality_graph().ids;
        let pairs: Vec<(usize, usize)> = match (m.get_one::<usize>("h1"), m.get_one::<usize>("h2")) {
            (Some(&i), Some(&j)) => {
                if i >= ids.len() || j >= ids.len() {
                    return Err(Error::Invalid(format!("there are {} hyperplanes", ids.len())));
                }
                vec![(i, j)]
            }
            _ => (0..ids.len()).flat_map(|i| (i + 1..ids.len()).map(move |j| (i, j))).collect(),
        };
        let mut unknown = false;
        let rows: Vec<Value> = pairs
            .iter()
            .map(|&(i, j)| {
                let r = s.relate(&ids[i], &ids[j]);
                unknown |= r.value == squier_core::squier::Position::Unknown;
                json!({
                    "first": ids[i].render(&p),
                    "second": ids[j].render(&p),
                    "position": r.value.as_str(),
                    "witness": r.witness.map(|w| format!("{w:?}")),
                })
            })
            .collect();
        let status = if unknown { Status::Unknown } else { Status::Ok };
        Ok(Report::new(json!({ "pairs": rows }), status))
    }
}

struct SpecialCmd;

impl Subcommand for SpecialCmd {
    fn name(&self) -> &'static str {
        "special"
    }
    fn about(&self) -> &'static str {
        "cleanness and specialness of the Squier complex"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg()]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let oracle = Oracle::new(&p, caps);
        let r = specialness_report(&oracle, &w)?;
        let unclean: Vec<Value> = r
            .unclean
            .iter()
            .map(|u| json!({ "a": p.render(&u.a), "b": p.render(&u.b), "p": p.render(&u.p) }))
            .collect();
        let self_intersections: Vec<Value> = r
            .self_intersections
            .iter()
            .map(|x| {
                json!({ "a": p.render(&x.a), "relation": x.relation, "direction": x.direction.as_str(),
                        "m": p.render(&x.m), "c": p.render(&x.c) })
            })
            .collect();
        let self_osculations: Vec<Value> = r
            .self_osculations
            .iter()
            .map(|x| {
                json!({ "n": x.n, "a": p.render(&x.a), "k": p.render(&x.k), "h": p.render(&x.h),
                        "relation": x.relation, "direction": x.direction.as_str(), "b": p.render(&x.b) })
            })
            .collect();
        let inter_osculations: Vec<Value> = r
            .inter_osculations
            .iter()
            .map(|x| {
                json!({ "a": p.render(&x.a), "u": p.render(&x.u), "v": p.render(&x.v), "w": p.render(&x.w),
                        "b": p.render(&x.b), "p": p.render(&x.p), "q": p.render(&x.q), "xi": p.render(&x.xi) })
            })
            .collect();
        let json = json!({
            "special": r.special.as_str(),
            "clean": r.clean.as_str(),
            "two_sided": r.two_sided.as_str(),
            "finite_class": r.finite_class,
            "unclean": unclean,
            "self_intersections": self_intersections,
            "self_osculations": self_osculations,
            "inter_osculations": inter_osculations,
            "notes": r.notes,
        });
        Ok(Report::new(json, Status::of(r.special)))
    }
}

struct DimCmd;

impl Subcommand for DimCmd {
    fn name(&self) -> &'static str {
        "dim"
    }
    fn about(&self) -> &'static str {
        "does the Squier complex contain an n-cube?"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg(), Arg::new("n").short('n').required(true).value_parser(value_parser!(usize))]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let n = *m.get_one::<usize>("n").expect("required");
        let a = dimension_at_least(&Oracle::new(&p, caps), &w, n);
        let witness = a.witness.as_ref().map(|(v, moves)| json!({ "vertex": p.render(v), "moves": moves_json(moves) }));
        let json = json!({ "n": n, "verdict": a.verdict.as_str(), "witness": witness, "reason": a.reason });
        Ok(Report::new(json, Status::of(a.verdict)))
    }
}

struct RankTableCmd;

impl Subcommand for RankTableCmd {
    fn name(&self) -> &'static str {
        "rank-table"
    }
    fn about(&self) -> &'static str {
        "transversality graph and hyperplane ranks"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg()]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let oracle = Oracle::new(&p, caps);
        let s = Squier::new(&oracle, &w)?;
        let g = s.transversality_graph();
        let rows: Vec<Value> = g
            .ids
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let r = s.rank(&g, i);
                json!({ "index": i, "hyperplane": h.render(&p), "rank": r.value, "rank_exact": r.exact })
            })
            .collect();
        let json = json!({
            "hyperplanes": rows,
            "prec": g.prec,
            "undecided": g.unknown,
            "self_intersecting": g.self_prec,
            "induced_odd_cycles": g.induced_odd_cycles(9),
            "exact": g.exact,
        });
        let status = if g.exact { Status::Ok } else { Status::Unknown };
        Ok(Report::new(json, status).with_dot(dot::transversality(&p, &g, None)))
    }
}

struct PhiCmd;

impl Subcommand for PhiCmd {
    fn name(&self) -> &'static str {
        "phi"
    }
    fn about(&self) -> &'static str {
        "the right-angled Artin group of the hyperplanes and images of spherical diagrams"
    }
    fn args(&self) -> Vec<Arg> {
        vec![
            pres_arg(),
            word_arg(),
            diagram_arg(false),
            Arg::new("labels").long("labels").help("comma-separated generator names, in hyperplane order"),
        ]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let oracle = Oracle::new(&p, caps);
        let mut e = build_apw(&oracle, &w)?;
        if let Some(labels) = m.get_one::<String>("labels") {
            e = e.relabel(labels.split(',').map(|s| s.trim().to_string()).collect())?;
        }
        let images: Vec<Value> = diagrams(m, &p)?
            .iter()
            .map(|d| e.phi(d).map(|img| Value::from(e.graph.render(&img))))
            .collect::<Result<_>>()?;
        let generators: Vec<Value> = e.generator_table().into_iter().map(|(l, h)| json!([l, h])).collect();
        let edges: Vec<Value> =
            e.graph.edges().into_iter().map(|(i, j)| json!([e.graph.label(i), e.graph.label(j)])).collect();
        let json = json!({ "generators": generators, "edges": edges, "images": images, "exact": e.exact() });
        let labels: Vec<String> = (0..e.graph.len()).map(|i| e.graph.label(i).to_string()).collect();
        let dot_text = dot::transversality(&p, &e.transversality, Some(&labels));
        let status = if e.exact() { Status::Ok } else { Status::Unknown };
        Ok(Report::new(json, status).with_dot(dot_text))
    }
}

// ---- Farley complex ----

struct FarleyCmd;

impl Subcommand for FarleyCmd {
    fn name(&self) -> &'static str {
        "farley"
    }
    fn about(&self) -> &'static str {
        "Farley ball with rank partition and tree quotients"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg(), radius_arg("4")]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let radius = *m.get_one::<usize>("radius").expect("defaulted");
        let oracle = Oracle::new(&p, caps);
        let rb = RankedBall::build(&oracle, &w, radius)?;
        let quotients: Vec<Value> = rb
            .quotients
            .iter()
            .map(|q| json!({ "rank": q.rank, "nodes": q.node_count, "edges": q.edges.len(), "acyclic": q.is_acyclic() }))
            .collect();
        let json = json!({
            "radius": radius,
            "vertices": rb.ball.len(),
            "edges": rb.ball.edges.len(),
            "ranks": rb.partition.ranks,
            "quotients": quotients,
            "exact": rb.partition.exact,
        });
        let dot_text: String = rb.quotients.iter().map(|q| q.to_dot()).collect();
        Ok(Report::new(json, Status::Ok).with_dot(dot_text))
    }
}

struct EmbedCheckCmd;

impl Subcommand for EmbedCheckCmd {
    fn name(&self) -> &'static str {
        "embed-check"
    }
    fn about(&self) -> &'static str {
        "check the tree-product distance identity on a Farley ball"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg(), radius_arg("6")]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let radius = *m.get_one::<usize>("radius").expect("defaulted");
        let oracle = Oracle::new(&p, caps);
        let rb = RankedBall::build(&oracle, &w, radius)?;
        let r = rb.check_isometric_embedding(&p)?;
        let violations: Vec<Value> = r
            .violations
            .iter()
            .map(|v| json!({ "x": v.x, "y": v.y, "distance": v.distance, "tree_distances": v.tree_distances }))
            .collect();
        let json = json!({
            "radius": radius,
            "pairs_checked": r.pairs_checked,
            "violations": violations,
            "acyclic": r.acyclic,
            "ranks_seen": r.ranks_seen,
            "exact": r.exact,
        });
        Ok(Report::new(json, Status::check(r.violations.is_empty() && r.acyclic)))
    }
}

struct PropBCmd;

impl Subcommand for PropBCmd {
    fn name(&self) -> &'static str {
        "propb"
    }
    fn about(&self) -> &'static str {
        "compare word length with hyperplane count on a ball of the Cayley graph"
    }
    fn args(&self) -> Vec<Arg> {
        vec![
            pres_arg(),
            word_arg(),
            diagram_arg(true).help("generator diagram file (repeat)"),
            Arg::new("length").short('L').long("length").value_parser(value_parser!(usize)).default_value("6"),
        ]
    }
    fn run(&self, m: &ArgMatches, _caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let length = *m.get_one::<usize>("length").expect("defaulted");
        let r = property_b_scan(&p, &w, &diagrams(m, &p)?, length)?;
        let half = num_rational::Rational64::new(1, 2);
        let three = num_rational::Rational64::from_integer(3);
        let within = r.min_ratio.map_or(true, |x| x >= half) && r.max_ratio.map_or(true, |x| x <= three);
        let json = json!({
            "length": length,
            "elements": r.elements,
            "table": r.table,
            "min_ratio": r.min_ratio.map(|x| x.to_string()),
            "max_ratio": r.max_ratio.map(|x| x.to_string()),
            "within_bounds": within,
        });
        Ok(Report::new(json, Status::check(within)))
    }
}

// ---- decomposition ----

struct DecomposeCmd;

impl Subcommand for DecomposeCmd {
    fn name(&self) -> &'static str {
        "decompose"
    }
    fn about(&self) -> &'static str {
        "graph of groups along the left hyperplanes (right ones with --mirror)"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg(), Arg::new("mirror").long("mirror").action(ArgAction::SetTrue)]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let mut p = presentation(m)?;
        let mut w = word(m, &p, "word")?;
        if m.get_flag("mirror") {
            p = p.mirrored();
            w.reverse();
        }
        let oracle = Oracle::new(&p, caps);
        let gog = Decomposer::new(&oracle).decompose(&w)?;
        let simple = gog.presentation.simplified();
        let vertices: Vec<Value> = gog
            .vertices
            .iter()
            .map(|v| json!({ "space": v.space.render(&p), "trivial": v.trivial.as_str() }))
            .collect();
        let edges: Vec<Value> = gog
            .edges
            .iter()
            .map(|e| {
                let h = &gog.hyperplanes[e.hyperplane];
                json!({
                    "hyperplane": h.id.render(&p),
                    "from": e.from,
                    "to": e.to,
                    "trivial": e.trivial.as_str(),
                    "in_tree": e.in_tree,
                    "split": { "a": p.render(&h.a), "p": p.render(&h.p), "letter": p.letter_name(h.ell),
                               "s": p.render(&h.s), "q": p.render(&h.q), "m": p.letter_name(h.m), "r": p.render(&h.r) },
                })
            })
            .collect();
        let family = simple.commutator_family().map(|f| {
            json!({ "a": simple.generators[f.a], "t": simple.generators[f.t], "h": simple.generators[f.h],
                    "right_action": f.right_action, "bound": f.bound })
        });
        let json = json!({
            "vertices": vertices,
            "edges": edges,
            "all_trivial": gog.all_trivial(),
            "free_rank": gog.free_rank(),
            "presentation": gog.presentation.to_string(),
            "simplified": simple.to_string(),
            "commutator_family": family,
            "vertex_spaces_match": vertex_spaces_match(&oracle, &gog),
            "technical_lemma": technical_lemma_holds(&oracle, &gog),
            "exact": gog.exact,
        });
        let status = if gog.exact { Status::Ok } else { Status::Unknown };
        Ok(Report::new(json, status).with_dot(gog.to_dot(&p)))
    }
}

struct EulerCmd;

impl Subcommand for EulerCmd {
    fn name(&self) -> &'static str {
        "euler"
    }
    fn about(&self) -> &'static str {
        "cube counts and Euler characteristic of a finite Squier complex"
    }
    fn args(&self) -> Vec<Arg> {
        vec![pres_arg(), word_arg()]
    }
    fn run(&self, m: &ArgMatches, caps: SearchCaps) -> Result<Report> {
        let p = presentation(m)?;
        let w = word(m, &p, "word")?;
        let ball = SquierBall::build(&p, &w, caps)?;
        let chi = ball.euler_characteristic().ok();
        let json = json!({
            "cube_counts": ball.cube_counts(),
            "euler_characteristic": chi,
            "one_minus_chi": chi.map(|c| 1 - c),
            "complete": ball.complete,
        });
        Ok(Report::new(json, if chi.is_some() { Status::Ok } else { Status::Unknown }))
    }
}

// ---- intervals ----

fn collection_arg() -> Arg {
    Arg::new("collection").short('c').long("collection").help("interval collection file")
}

fn recognition_json(r: &Recognition) -> Value {
    match r {
        Recognition::Yes { orientation, realization } => json!({
            "accepted": true,
            "orientation": orientation,
            "realization": realization.to_text(),
        }),
        Recognition::InducedTwoEdges(q) => json!({ "accepted": false, "induced_two_edges": q }),
        Recognition::NotTransitivelyOrientable => json!({ "accepted": false, "transitive_orientation": false }),
    }
}

struct IntervalCmd;

impl Subcommand for IntervalCmd {
    fn name(&self) -> &'static str {
        "interval"
    }
    fn about(&self) -> &'static str {
        "interval graph, presentation and generators of a collection, or recognition of a graph"
    }
    fn args(&self) -> Vec<Arg> {
        vec![
            collection_arg().required_unless_present("graph"),
            Arg::new("graph").short('g').long("graph").conflicts_with("collection").help("graph as `n=5 0-1 1-2 …`"),
        ]
    }
    fn run(&self, m: &ArgMatches, _caps: SearchCaps) -> Result<Report> {
        if let Some(g) = m.get_one::<String>("graph") {
            let r = interval::is_complement_of_interval(&SimpleGraph::parse(g)?)?;
            return Ok(Report::new(json!({ "recognition": recognition_json(&r) }), Status::check(r.accepted())));
        }
        let c = IntervalCollection::parse(&read_file(m.get_one::<String>("collection").expect("required"))?)?;
        let g = interval::interval_graph(&c);
        let co = g.complement();
        let names = |edges: Vec<(usize, usize)>| -> Vec<Value> {
            edges.into_iter().map(|(i, j)| json!([c.intervals[i].name, c.intervals[j].name])).collect()
        };
        let p = interval::presentation_for(&c)?;
        let deltas: Vec<Value> = (0..c.intervals.len())
            .map(|k| interval::delta_diagram(&p, &c, k).map(|d| Value::from(d.to_text(&p))))
            .collect::<Result<_>>()?;
        let recognition = interval::is_complement_of_interval(&co)?;
        let json = json!({
            "interval_graph": names(g.edges()),
            "complement": names(co.edges()),
            "presentation": p.to_text(),
            "base_word": p.render(&interval::base_word(&c)),
            "generators": deltas,
            "complement_recognition": recognition_json(&recognition),
        });
        Ok(Report::new(json, Status::Ok))
    }
}

struct VerifyRaagCmd;

impl Subcommand for VerifyRaagCmd {
    fn name(&self) -> &'static str {
        "verify-raag"
    }
    fn about(&self) -> &'static str {
        "check that the interval generators span the Artin group of the complement graph"
    }
    fn args(&self) -> Vec<Arg> {
        vec![
            collection_arg().required_unless_present("all"),
            Arg::new("all")
                .long("all")
                .num_args(2)
                .value_names(["N", "K"])
                .value_parser(value_parser!(usize))
                .conflicts_with("collection")
                .help("every collection of at most K intervals on {1..n}, for n up to N"),
            Arg::new("length").short('L').long("length").value_parser(value_parser!(usize)).default_value("3"),
        ]
    }
    fn run(&self, m: &ArgMatches, _caps: SearchCaps) -> Result<Report> {
        let length = *m.get_one::<usize>("length").expect("defaulted");
        let collections = match m.get_many::<usize>("all") {
            Some(v) => {
                let v: Vec<usize> = v.copied().collect();
                (1..=v[0]).flat_map(|n| IntervalCollection::all_small(n, v[1])).collect()
            }
            None => vec![IntervalCollection::parse(&read_file(m.get_one::<String>("collection").expect("required"))?)?],
        };
        let mut failures = Vec::new();
        let mut rows = Vec::new();
        for c in &collections {
            let r = interval::verify_raag_iso(c, length)?;
            if !r.passed() {
                failures.push(c.to_text());
            }
            if collections.len() == 1 {
                rows.push(json!({
                    "collection": c.to_text(),
                    "passed": r.passed(),
                    "commutation_mismatches": r.commutation_mismatches,
                    "failed_relators": r.failed_relators,
                    "diagram_ball": r.diagram_ball,
                    "raag_ball": r.raag_ball,
                    "generators_reduced": r.generators_reduced,
                }));
            }
        }
        let json = json!({ "length": length, "collections": collections.len(), "failures": failures, "reports": rows });
        Ok(Report::new(json, Status::check(failures.is_empty())))
    }
}

// ---- driver ----

fn text_lines(v: &Value) -> String {
    let Value::Object(map) = v else { return format!("{v}\n") };
    let mut out = String::new();
    for (k, v) in map {
        match v {
            Value::String(s) if s.contains('\n') => {
                out.push_str(&format!("{k}:\n"));
                for line in s.lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
            Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
            Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) && !items.is_empty() => {
                out.push_str(&format!("{k}:\n"));
                for i in items {
                    match i {
                        Value::String(s) => out.push_str(&format!("  - {s}\n")),
                        other => out.push_str(&format!("  - {other}\n")),
                    }
                }
            }
            other => out.push_str(&format!("{k}: {other}\n")),
        }
    }
    out
}

fn build_cli(registry: &[Box<dyn Subcommand>]) -> Command {
    let mut cli = Command::new("squier")
        .about("Diagram groups over semigroup presentations")
        .subcommand_required(true)
        .arg(
            Arg::new("format")
                .long("format")
                .global(true)
                .value_parser(["json", "text", "dot"])
                .default_value("json"),
        )
        .arg(Arg::new("max-word-len").long("max-word-len").global(true).value_parser(value_parser!(usize)).default_value("10"))
        .arg(
            Arg::new("max-class-size").long("max-class-size").global(true).value_parser(value_parser!(usize)).default_value("500"),
        )
        .arg(Arg::new("max-bfs-depth").long("max-bfs-depth").global(true).value_parser(value_parser!(usize)).default_value("64"));
    for sub in registry {
        cli = cli.subcommand(Command::new(sub.name()).about(sub.about()).args(sub.args()));
    }
    cli
}

/// `-w1` and `-w2` are accepted as spellings of `--w1` and `--w2`.
fn normalize_argv(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| match a.as_str() {
        "-w1" | "-w2" => format!("-{a}"),
        _ => a,
    })
    .collect()
}

fn main() -> ExitCode {
    let registry = registry();
    let matches = match build_cli(&registry).try_get_matches_from(normalize_argv(std::env::args())) {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let (name, sub_matches) = matches.subcommand().expect("subcommand is required");
    let cmd = registry.iter().find(|c| c.name() == name).expect("registered");
    let get = |k: &str| *sub_matches.get_one::<usize>(k).expect("defaulted");
    let format = sub_matches.get_one::<String>("format").expect("defaulted").as_str();
    let caps = match SearchCaps::new(get("max-word-len"), get("max-class-size"), get("max-bfs-depth")) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let report = match cmd.run(sub_matches, caps) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let mut json = report.json;
    if let Value::Object(map) = &mut json {
        let mut caps_map = Map::new();
        caps_map.insert("max_word_len".into(), caps.max_word_len.into());
        caps_map.insert("max_class_size".into(), caps.max_class_size.into());
        caps_map.insert("max_bfs_depth".into(), caps.max_bfs_depth.into());
        map.insert("caps".into(), Value::Object(caps_map));
        map.insert("command".into(), name.into());
    }
    let text = match format {
        "dot" => match report.dot {
            Some(d) => d,
            None => {
                eprintln!("error: `{name}` has no DOT output");
                return ExitCode::from(3);
            }
        },
        "text" => text_lines(&json),
        _ => serde_json::to_string_pretty(&json).expect("values serialize") + "\n",
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(report.status.code())
}
