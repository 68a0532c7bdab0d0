//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::{Rng, SeedableRng};

use squier_core::catalog;
use squier_core::decomposition::Decomposer;
use squier_core::diagrams::Diagram;
use squier_core::farley::{property_b_scan, RankedBall};
use squier_core::interval::{self, IntervalCollection, Recognition, SimpleGraph};
use squier_core::oracle::Oracle;
use squier_core::raag::build_apw;
use squier_core::rewriting::{SearchCaps, Verdict};
use squier_core::squier::{dimension_at_least, specialness_report, Squier, SquierBall};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn caps() -> SearchCaps {
    SearchCaps::new(10, 500, 64).unwrap()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn equal_over_commuting() -> Outcome {
    let p = catalog::commuting();
    let (w1, w2) = (p.word("a a b c").unwrap(), p.word("c a b a").unwrap());
    let eq = Oracle::new(&p, caps()).equal(&w1, &w2);
    ensure!(eq.verdict == Verdict::Yes, "verdict {:?}", eq.verdict);
    let moves = eq.derivation.ok_or("no derivation")?;
    ensure!(moves.len() == 4, "derivation has {} moves", moves.len());
    let d = Diagram::new(&p, &w1, moves).map_err(err)?;
    ensure!(d.cells() == 4 && d.bot() == &w2, "diagram has {} cells", d.cells());
    Ok("Yes, 4 moves, 4 cells".into())
}

fn z_bullet_z_hyperplanes() -> Outcome {
    let p = catalog::z_bullet_z();
    let w = p.word("a1 b1").unwrap();
    let oracle = Oracle::new(&p, caps());
    let labels: Vec<String> = ["A1", "A2", "A3", "B1", "B2", "B3", "C", "D"].iter().map(|s| s.to_string()).collect();
    let e = build_apw(&oracle, &w).map_err(err)?.relabel(labels).map_err(err)?;
    let g = &e.transversality;
    ensure!(g.ids.len() == 8 && g.exact, "{} hyperplanes, exact = {}", g.ids.len(), g.exact);
    let part = |names: &[&str]| -> Vec<usize> {
        names.iter().map(|n| e.graph.labels().iter().position(|l| l == n).unwrap()).collect()
    };
    let (left, right) = (part(&["A1", "A2", "A3", "C"]), part(&["B1", "B2", "B3", "D"]));
    ensure!(g.is_oriented_complete_bipartite(&left, &right), "transversality graph is not K4,4: {:?}", g.prec);
    let expected = ["A1 A2 A3^-1", "B1 B2 B3^-1", "C D^-1"];
    for (d, want) in catalog::z_bullet_z_generators(&p).iter().zip(expected) {
        let img = e.graph.render(&e.phi(d).map_err(err)?);
        ensure!(img == want, "image {img}, expected {want}");
    }
    let report = specialness_report(&oracle, &w).map_err(err)?;
    ensure!(report.special == Verdict::Yes, "special = {:?}", report.special);
    Ok("8 hyperplanes, K4,4, images A1A2A3⁻¹ B1B2B3⁻¹ CD⁻¹, special".into())
}

fn z_bullet_z_dimension() -> Outcome {
    let p = catalog::z_bullet_z();
    let w = p.word("a1 b1").unwrap();
    let oracle = Oracle::new(&p, caps());
    let (two, three) = (dimension_at_least(&oracle, &w, 2), dimension_at_least(&oracle, &w, 3));
    ensure!(two.verdict == Verdict::Yes, "n=2: {:?} ({})", two.verdict, two.reason);
    ensure!(three.verdict == Verdict::No, "n=3: {:?} ({})", three.verdict, three.reason);
    Ok("n=2 Yes, n=3 No".into())
}

fn commuting_rank_law() -> Outcome {
    let p = catalog::commuting();
    let oracle = Oracle::new(&p, caps());
    let mut seen = 0;
    for m in 1..=4 {
        for n in 1..=(5 - m) {
            let text = format!("a{}{}", " b".repeat(m), " c".repeat(n));
            let w = p.word(&text).unwrap();
            let gog = Decomposer::new(&oracle).decompose(&w).map_err(err)?;
            let mn = m * n;
            ensure!(gog.exact && gog.all_trivial(), "{text}: exact {} all trivial {}", gog.exact, gog.all_trivial());
            ensure!(gog.free_rank() == Some(mn), "{text}: rank {:?}", gog.free_rank());
            ensure!(gog.hyperplanes.len() == 2 * mn + m + n - 1, "{text}: {} left hyperplanes", gog.hyperplanes.len());
            ensure!(gog.vertices.len() == mn + m + n, "{text}: {} vertices", gog.vertices.len());
            let chi = SquierBall::build(&p, &w, caps()).map_err(err)?.euler_characteristic().map_err(err)?;
            ensure!(1 - chi == mn as i64, "{text}: 1 - χ = {}", 1 - chi);
            seen += 1;
        }
    }
    Ok(format!("{seen} pairs (m, n)"))
}

fn z_bullet_z_decomposition() -> Outcome {
    let p = catalog::z_bullet_z();
    let oracle = Oracle::new(&p, caps());
    let gog = Decomposer::new(&oracle).decompose(&p.word("a1 b1").unwrap()).map_err(err)?;
    let spaces: Vec<String> = gog.vertices.iter().map(|v| v.space.render(&p)).collect();
    ensure!(spaces == ["a1 S(b1)", "a2 S(b1)", "a3 S(b1)"], "vertex spaces {spaces:?}");
    ensure!(gog.edges.len() == 4, "{} edges", gog.edges.len());
    let simple = gog.presentation.simplified();
    let fam = simple.commutator_family().ok_or_else(|| format!("no commutator pattern in {simple}"))?;
    Ok(format!("3 vertices, 4 edges, [t, a^(h^i)] for i ≤ {}", fam.bound))
}

fn farley_tree_embedding() -> Outcome {
    let p = catalog::z_bullet_z();
    let oracle = Oracle::new(&p, caps());
    let rb = RankedBall::build(&oracle, &p.word("a1 b1").unwrap(), 6).map_err(err)?;
    let r = rb.check_isometric_embedding(&p).map_err(err)?;
    ensure!(r.violations.is_empty(), "{} violations", r.violations.len());
    ensure!(r.acyclic, "a tree quotient has a cycle");
    ensure!(r.ranks_seen.iter().all(|&k| k <= 1), "ranks {:?}", r.ranks_seen);
    Ok(format!("{} vertices, {} guarded pairs, ranks {:?}", rb.ball.len(), r.pairs_checked, r.ranks_seen))
}

fn property_b() -> Outcome {
    let p = catalog::z_bullet_z();
    let gens = catalog::z_bullet_z_generators(&p);
    let r = property_b_scan(&p, &p.word("a1 b1").unwrap(), &gens, 6).map_err(err)?;
    let (lo, hi) = (r.min_ratio.ok_or("empty scan")?, r.max_ratio.ok_or("empty scan")?);
    ensure!(lo >= Rational64::new(1, 2) && hi <= Rational64::from_integer(3), "ratios in [{lo}, {hi}]");
    Ok(format!("{} elements, #/|·| in [{lo}, {hi}]", r.elements))
}

fn non_special_witness() -> Outcome {
    let p = catalog::non_special();
    let w = p.word("a b").unwrap();
    let oracle = Oracle::new(&p, caps());
    let r = specialness_report(&oracle, &w).map_err(err)?;
    ensure!(r.clean == Verdict::No, "clean = {:?}", r.clean);
    let wit = r.unclean.first().ok_or("no witness")?;
    ensure!(wit.verify(&oracle, &w) == Verdict::Yes, "witness {wit:?} does not replay");
    Ok(format!("unclean: a = {}, b = {}, p = {}", p.render(&wit.a), p.render(&wit.b), p.render(&wit.p)))
}

fn pathology_round_trips() -> Outcome {
    let mut balls = 0;
    let (mut si, mut so) = (0, 0);
    for c in common::corpus() {
        let (a, b) = common::check_pathologies(c)?;
        si += a;
        so += b;
        balls += 1;
    }
    ensure!(si + so > 0, "no pathology anywhere in the corpus");
    Ok(format!("{balls} balls, {si} self-intersections, {so} self-osculations"))
}

fn odd_cycle_audit() -> Outcome {
    let mut exact = 0;
    for c in common::corpus() {
        if common::check_odd_cycles(c)? {
            exact += 1;
        }
    }
    // Transversality graphs of the commuting presentation over every word of length ≤ 5.
    let p = catalog::commuting();
    let oracle = Oracle::new(&p, caps());
    let mut words: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..5 {
        words = words.iter().flat_map(|w| (0..3).map(move |l| [w.clone(), vec![l]].concat())).collect();
        for w in &words {
            let g = Squier::new(&oracle, w).map_err(err)?.transversality_graph();
            if g.exact {
                ensure!(g.induced_odd_cycles(9).is_empty(), "{}: induced odd cycle", p.render(w));
                exact += 1;
            }
        }
    }
    Ok(format!("{exact} exact graphs, none with an induced 5-, 7- or 9-cycle"))
}

/// Stand-ins for the three pictured graphs: the 6-cycle with two long diagonals,
/// and the complements of the paths on 6 and 7 vertices.
fn pictured_graphs() -> Vec<(&'static str, SimpleGraph)> {
    vec![
        ("C6 + 2 diagonals", SimpleGraph::parse("n=6 0-1 1-2 2-3 3-4 4-5 5-0 0-3 1-4").unwrap()),
        ("complement of P6", SimpleGraph::path(6).complement()),
        ("complement of P7", SimpleGraph::path(7).complement()),
    ]
}

fn interval_pipeline() -> Outcome {
    let p5 = IntervalCollection::from_bounds(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
    ensure!(interval::interval_graph(&p5) == SimpleGraph::path(6), "pictured collection is not a path of length 5");
    let c5 = interval::is_complement_of_interval(&SimpleGraph::cycle(5)).map_err(err)?;
    ensure!(matches!(c5, Recognition::NotTransitivelyOrientable), "C5: {c5:?}");
    for (name, g) in pictured_graphs() {
        match interval::is_complement_of_interval(&g).map_err(err)? {
            Recognition::Yes { orientation, realization } => {
                ensure!(g.is_transitive_orientation(&orientation), "{name}: bad orientation certificate");
                ensure!(interval::interval_graph(&realization) == g.complement(), "{name}: bad realization");
            }
            other => return Err(format!("{name} rejected: {other:?}")),
        }
    }
    let mut swept = 0;
    for n in 1..=4 {
        for c in IntervalCollection::all_small(n, 3) {
            let r = interval::verify_raag_iso(&c, 3).map_err(err)?;
            ensure!(r.passed(), "{}: {r}", c.to_text().replace('\n', " / "));
            swept += 1;
        }
    }
    let named = [
        ("Z²", IntervalCollection::from_bounds(2, &[(1, 1), (2, 2)]).unwrap(), vec![1, 5, 13, 25]),
        ("F₂", IntervalCollection::from_bounds(3, &[(1, 2), (2, 3)]).unwrap(), vec![1, 5, 17, 53]),
        ("Z", IntervalCollection::from_bounds(1, &[(1, 1)]).unwrap(), vec![1, 3, 5, 7]),
    ];
    for (name, c, sizes) in named {
        let r = interval::verify_raag_iso(&c, 3).map_err(err)?;
        ensure!(r.passed() && r.diagram_ball == sizes, "{name}: {r}");
    }
    Ok(format!("P5, C5 rejected, 3 pictured graphs, {swept} collections, Z² F₂ Z ball sizes"))
}

const DIAGRAM_ROUNDS: usize = 10_000;

fn diagram_suite() -> Outcome {
    let cases = common::corpus();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for round in 0..DIAGRAM_ROUNDS {
        let choices: Vec<usize> = (0..13).map(|_| rng.gen_range(0..1000)).collect();
        common::diagram_round(cases, &choices).map_err(|e| format!("round {round}: {e}"))?;
    }
    Ok(format!("{DIAGRAM_ROUNDS} random cases"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 12] = [
        ("equal aabc = caba over the commuting presentation", equal_over_commuting, Duration::from_secs(1)),
        ("Z•Z hyperplanes, K4,4, images, specialness", z_bullet_z_hyperplanes, Duration::from_secs(5)),
        ("Z•Z Squier complex has dimension 2", z_bullet_z_dimension, Duration::from_secs(10)),
        ("U(1,m,n) free rank law", commuting_rank_law, Duration::from_secs(30)),
        ("Z•Z graph of groups", z_bullet_z_decomposition, Duration::from_secs(10)),
        ("tree embedding identity on a radius-6 Farley ball", farley_tree_embedding, Duration::from_secs(60)),
        ("property B scan for Z•Z, L = 6", property_b, Duration::from_secs(60)),
        ("non-special presentation is unclean", non_special_witness, Duration::from_secs(10)),
        ("pathology witnesses round-trip", pathology_round_trips, Duration::from_secs(60)),
        ("odd-cycle audit", odd_cycle_audit, Duration::from_secs(60)),
        ("interval pipeline", interval_pipeline, Duration::from_secs(60)),
        ("diagram algebra property suite", diagram_suite, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (k, (title, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > *budget => Err(format!("{detail}; took {took:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title}: {detail} ({took:.2?})", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {e} ({took:.2?})", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
