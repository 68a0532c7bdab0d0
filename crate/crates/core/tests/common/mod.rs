//! Shared corpus, random derivations and brute-force oracles for the property
//! and acceptance suites. Random choices come in as plain index slices so that
//! proptest and a seeded RNG can drive the same checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use squier_core::catalog;
use squier_core::diagrams::Diagram;
use squier_core::interval::SimpleGraph;
use squier_core::oracle::Oracle;
use squier_core::rewriting::{ClassEnumeration, Move, Presentation, SearchCaps, Verdict, Word};
use squier_core::squier::{HyperplaneId, Pathology, Squier};

pub struct Case {
    pub name: &'static str,
    pub p: Presentation,
    pub w: Word,
    /// Class of `w` under the default caps, for finding ways back to `w`.
    pub class: Arc<ClassEnumeration>,
}

fn case(name: &'static str, p: Presentation, w: &str) -> Case {
    let w = p.word(w).unwrap();
    let class = Oracle::new(&p, SearchCaps::default()).class(&w);
    Case { name, p, w, class }
}

/// Small presentations and base words: finite and infinite classes, special and
/// non-special complexes, relations of several lengths. Built once per process.
pub fn corpus() -> &'static [Case] {
    static CORPUS: OnceLock<Vec<Case>> = OnceLock::new();
    CORPUS.get_or_init(build_corpus)
}

fn build_corpus() -> Vec<Case> {
    let braid = Presentation::from_strs(&["a", "b"], &[("a b a", "b a b")]).unwrap();
    let mixed = Presentation::from_strs(&["a", "b", "c"], &[("a b", "b a"), ("a", "c c")]).unwrap();
    vec![
        case("hexagon", catalog::commuting(), "a b c"),
        case("comm-aabc", catalog::commuting(), "a a b c"),
        case("comm-abbc", catalog::commuting(), "a b b c"),
        case("zbz", catalog::z_bullet_z(), "a1 b1"),
        case("triangle", catalog::triangle(), "a"),
        case("triangle-ab", catalog::triangle(), "a b"),
        case("nonspecial", catalog::non_special(), "a b"),
        case("infinite-dim", catalog::infinite_dimensional(), "x"),
        case("braid", braid, "a b a b"),
        case("mixed", mixed, "a b"),
    ]
}

pub const MAX_WALK_WORD: usize = 7;

/// A derivation from `w` choosing `choices[i] mod (#moves)` at step `i`, never
/// passing through a word longer than `max_len`.
pub fn walk(p: &Presentation, w: &[u32], choices: &[usize], max_len: usize) -> Vec<Move> {
    let mut cur = w.to_vec();
    let mut out = Vec::new();
    for &c in choices {
        let options: Vec<(Move, Word)> =
            p.one_step_rewrites(&cur).into_iter().filter(|(_, v)| v.len() <= max_len).collect();
        if options.is_empty() {
            break;
        }
        let (mv, next) = options[c % options.len()].clone();
        out.push(mv);
        cur = next;
    }
    out
}

pub fn derivation(p: &Presentation, w: &[u32], choices: &[usize]) -> Diagram {
    Diagram::new(p, w, walk(p, w, choices, MAX_WALK_WORD)).unwrap()
}

/// A walk from `w` followed by a shortest way back, when the class search finds one.
pub fn spherical(c: &Case, choices: &[usize]) -> Option<Diagram> {
    let (p, w) = (&c.p, &c.w);
    let mut moves = walk(p, w, choices, MAX_WALK_WORD);
    let end = p.replay(w, &moves).unwrap().pop().unwrap();
    let back = c.class.path_to(&end)?;
    moves.extend(back.iter().rev().map(|m| m.reversed()));
    Diagram::new(p, w, moves).ok()
}

/// The two moves in the other order, if they touch disjoint letters.
pub fn swap(p: &Presentation, m1: Move, m2: Move) -> Option<(Move, Move)> {
    let l1 = p.input_side(m1.relation, m1.direction).len();
    let k1 = p.output_side(m1.relation, m1.direction).len();
    let l2 = p.input_side(m2.relation, m2.direction).len();
    let k2 = p.output_side(m2.relation, m2.direction).len();
    if m2.offset + l2 <= m1.offset {
        let moved = Move::new(m1.offset + k2 - l2, m1.relation, m1.direction);
        Some((m2, moved))
    } else if m2.offset >= m1.offset + k1 {
        let moved = Move::new(m2.offset + l1 - k1, m2.relation, m2.direction);
        Some((moved, m1))
    } else {
        None
    }
}

/// All derivations reachable by swapping adjacent independent moves.
pub fn swap_orbit(p: &Presentation, moves: &[Move]) -> HashSet<Vec<Move>> {
    let mut seen = HashSet::from([moves.to_vec()]);
    let mut queue = VecDeque::from([moves.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if let Some((a, b)) = swap(p, cur[i], cur[i + 1]) {
                let mut next = cur.clone();
                next[i] = a;
                next[i + 1] = b;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Every derivation of exactly `k` moves from `top` through words of length at most `max_len`.
pub fn all_derivations(p: &Presentation, top: &[u32], k: usize, max_len: usize) -> Vec<(Vec<Move>, Word)> {
    let mut level = vec![(Vec::new(), top.to_vec())];
    for _ in 0..k {
        let mut next = Vec::new();
        for (moves, w) in &level {
            for (mv, v) in p.one_step_rewrites(w) {
                if v.len() <= max_len {
                    let mut m = moves.clone();
                    m.push(mv);
                    next.push((m, v));
                }
            }
        }
        level = next;
    }
    level
}

fn orbit_rep(p: &Presentation, moves: &[Move]) -> Vec<Move> {
    swap_orbit(p, moves).into_iter().min_by_key(|m| m.iter().map(|x| (x.offset, x.relation, x.direction as u8)).collect::<Vec<_>>()).unwrap()
}

/// Orbit representatives of every fully cancelled derivation reachable by deleting
/// an adjacent mutually inverse pair in some member of the swap orbit.
pub fn brute_force_reductions(p: &Presentation, moves: &[Move]) -> BTreeSet<Vec<(usize, usize, u8)>> {
    let key = |m: &[Move]| m.iter().map(|x| (x.offset, x.relation, x.direction as u8)).collect::<Vec<_>>();
    let mut results = BTreeSet::new();
    let mut seen = HashSet::new();
    let mut stack = vec![orbit_rep(p, moves)];
    while let Some(cur) = stack.pop() {
        if !seen.insert(key(&cur)) {
            continue;
        }
        let mut reducible = false;
        for member in swap_orbit(p, &cur) {
            for i in 0..member.len().saturating_sub(1) {
                if member[i + 1] == member[i].reversed() {
                    reducible = true;
                    let mut shorter = member.clone();
                    shorter.drain(i..i + 2);
                    stack.push(orbit_rep(p, &shorter));
                }
            }
        }
        if !reducible {
            results.insert(key(&cur));
        }
    }
    results
}

pub fn orbit_key(p: &Presentation, moves: &[Move]) -> Vec<(usize, usize, u8)> {
    orbit_rep(p, moves).iter().map(|x| (x.offset, x.relation, x.direction as u8)).collect()
}

/// Whether some assignment of sub-intervals of `{1..k}` realises `g` as an
/// intersection graph, by exhaustive backtracking.
pub fn brute_force_interval(g: &SimpleGraph) -> bool {
    let k = g.len();
    if k == 0 {
        return true;
    }
    let options: Vec<(usize, usize)> = (1..=k).flat_map(|lo| (lo..=k).map(move |hi| (lo, hi))).collect();
    fn go(g: &SimpleGraph, options: &[(usize, usize)], chosen: &mut Vec<(usize, usize)>) -> bool {
        let v = chosen.len();
        if v == g.len() {
            return true;
        }
        for &(lo, hi) in options {
            let ok = chosen.iter().enumerate().all(|(u, &(a, b))| (a <= hi && lo <= b) == g.adjacent(u, v));
            if ok {
                chosen.push((lo, hi));
                if go(g, options, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(g, &options, &mut Vec::new())
}

/// Graph on `n` vertices whose edges are read off the bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}

// ---- checks shared by the property and acceptance suites ----

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Replaying the moves of a constructed diagram ends at its bottom word.
pub fn check_replay(c: &Case, choices: &[usize]) -> Check {
    let d = derivation(&c.p, &c.w, choices);
    let words = c.p.replay(d.top(), d.moves()).map_err(|e| e.to_string())?;
    ensure!(words.last() == Some(d.bot()), "{}: replay ends at {:?}", c.name, words.last());
    Ok(())
}

/// `reduce` is idempotent, removes an even number of cells, and agrees with
/// every order of brute-force dipole cancellation.
pub fn check_reduce(c: &Case, choices: &[usize]) -> Check {
    let out = derivation(&c.p, &c.w, &choices[..choices.len().min(3)]);
    let mut moves = out.moves().to_vec();
    moves.extend(out.moves().iter().rev().map(|m| m.reversed()));
    // A loop with a few more random steps on top, so that cancellation is partial.
    let end = c.p.replay(&c.w, &moves).unwrap().pop().unwrap();
    moves.extend(walk(&c.p, &end, &choices[choices.len().min(3)..], MAX_WALK_WORD));
    moves.truncate(6);
    let d = Diagram::new(&c.p, &c.w, moves).map_err(|e| e.to_string())?;
    let r = d.reduce(&c.p);
    ensure!(r.reduce(&c.p).canonical_key(&c.p) == r.canonical_key(&c.p), "{}: reduce not idempotent", c.name);
    ensure!(r.cells() <= d.cells() && (d.cells() - r.cells()) % 2 == 0, "{}: cell count {} -> {}", c.name, d.cells(), r.cells());
    let brute = brute_force_reductions(&c.p, d.moves());
    ensure!(brute.len() == 1, "{}: {} distinct reduced forms for {:?}", c.name, brute.len(), d.moves());
    ensure!(
        brute.contains(&orbit_key(&c.p, r.moves())),
        "{}: reduce({:?}) = {:?} disagrees with brute force",
        c.name,
        d.moves(),
        r.moves()
    );
    Ok(())
}

/// For derivations of at most four moves, equal canonical keys coincide with
/// membership in the swap orbit, over every derivation with the same ends.
pub fn check_swap_orbit(c: &Case, choices: &[usize]) -> Check {
    let d = derivation(&c.p, &c.w, &choices[..choices.len().min(4)]);
    let orbit = swap_orbit(&c.p, d.moves());
    let key = d.canonical_key(&c.p);
    for (moves, bot) in all_derivations(&c.p, d.top(), d.cells(), MAX_WALK_WORD) {
        if &bot != d.bot() {
            continue;
        }
        let e = Diagram::new(&c.p, d.top(), moves.clone()).map_err(|e| e.to_string())?;
        let same_key = e.canonical_key(&c.p) == key;
        ensure!(
            same_key == orbit.contains(&moves),
            "{}: {:?} vs {:?}: key says {same_key}, swap orbit disagrees",
            c.name,
            d.moves(),
            moves
        );
    }
    Ok(())
}

/// Associativity, neutral element and inverses on reduced spherical diagrams.
pub fn check_group_laws(c: &Case, x: &[usize], y: &[usize], z: &[usize]) -> Check {
    let p = &c.p;
    let (Some(a), Some(b), Some(cc)) = (spherical(c, x), spherical(c, y), spherical(c, z)) else {
        return Ok(());
    };
    let (a, b, cc) = (a.reduce(p), b.reduce(p), cc.reduce(p));
    let mul = |u: &Diagram, v: &Diagram| u.product(p, v).unwrap();
    let key = |u: &Diagram| u.canonical_key(p);
    let e = Diagram::identity(&c.w);
    ensure!(key(&mul(&mul(&a, &b), &cc)) == key(&mul(&a, &mul(&b, &cc))), "{}: associativity", c.name);
    ensure!(key(&mul(&a, &e)) == key(&a) && key(&mul(&e, &a)) == key(&a), "{}: neutral", c.name);
    ensure!(mul(&a, &a.inverse()).cells() == 0 && mul(&a.inverse(), &a).cells() == 0, "{}: inverse", c.name);
    ensure!(key(&mul(&a, &b).inverse()) == key(&mul(&b.inverse(), &a.inverse())), "{}: inverse of product", c.name);
    Ok(())
}

/// `reduce(A + B) = reduce(A) + reduce(B)`, and sums with an identity keep
/// nontrivial spherical diagrams nontrivial.
pub fn check_sum(c: &Case, x: &[usize], y: &[usize]) -> Check {
    let p = &c.p;
    let (a, b) = (derivation(p, &c.w, x), derivation(p, &c.w, y));
    let (a, b) = (a.compose(p, &a.inverse()).unwrap().compose(p, &derivation(p, &c.w, y)).unwrap(), b);
    ensure!(
        a.sum(&b).reduce(p).canonical_key(p) == a.reduce(p).sum(&b.reduce(p)).canonical_key(p),
        "{}: sum and reduce do not commute",
        c.name
    );
    ensure!(
        key_eq(p, &a.inverse().sum(&b.inverse()), &a.sum(&b).inverse()),
        "{}: inverse of a sum",
        c.name
    );
    if let Some(s) = spherical(c, x) {
        let s = s.reduce(p);
        if s.cells() > 0 {
            let u = &c.w[..1 + x.first().copied().unwrap_or(0) % c.w.len()];
            ensure!(Diagram::identity(u).sum(&s).reduce(p).cells() > 0, "{}: ε(u) + Δ collapsed", c.name);
            ensure!(s.sum(&Diagram::identity(u)).reduce(p).cells() > 0, "{}: Δ + ε(u) collapsed", c.name);
        }
    }
    Ok(())
}

fn key_eq(p: &Presentation, a: &Diagram, b: &Diagram) -> bool {
    a.canonical_key(p) == b.canonical_key(p)
}

/// One round of every diagram check, for a case picked by `choices[0]`.
pub fn diagram_round(cases: &[Case], choices: &[usize]) -> Check {
    let c = &cases[choices[0] % cases.len()];
    let rest = &choices[1..];
    let third = rest.len() / 3;
    let (x, y, z) = (&rest[..third], &rest[third..2 * third], &rest[2 * third..]);
    check_replay(c, rest)?;
    check_reduce(c, rest)?;
    check_swap_orbit(c, rest)?;
    check_group_laws(c, x, y, z)?;
    check_sum(c, x, y)
}

/// Witness and geometry agree in both directions on the ball of `c`. Returns the
/// numbers of self-intersections and self-osculations seen.
pub fn check_pathologies(c: &Case) -> Result<(usize, usize), String> {
    let p = &c.p;
    let oracle = Oracle::new(p, SearchCaps::default());
    let s = Squier::new(&oracle, &c.w).map_err(|e| e.to_string())?;
    let si = s.scan_self_intersections();
    let so = s.scan_self_osculations();
    let corners = |cfg: &Pathology| -> BTreeSet<Word> {
        let v = &cfg.vertex;
        let a = p.apply(v, cfg.first).unwrap();
        let b = p.apply(v, cfg.second).unwrap();
        let len = p.input_side(cfg.first.relation, cfg.first.direction).len();
        let shift = p.output_side(cfg.first.relation, cfg.first.direction).len() as isize - len as isize;
        let second = Move::new((cfg.second.offset as isize + shift) as usize, cfg.second.relation, cfg.second.direction);
        let ab = p.apply(&a, second).unwrap();
        BTreeSet::from([v.clone(), a, b, ab])
    };
    let mut squares = HashSet::new();
    for x in &si {
        let cfg = x.configuration(p);
        ensure!(s.is_self_intersection_square(&cfg), "{}: witness {x:?} has no square", c.name);
        ensure!(x.verify(&oracle) != Verdict::No, "{}: witness {x:?} fails its equations", c.name);
        ensure!(x.unclean_witness(p).verify(&oracle, &c.w) != Verdict::No, "{}: unclean witness of {x:?}", c.name);
        squares.insert(corners(&cfg));
    }
    let mut osculations = HashSet::new();
    for x in &so {
        let cfg = x.configuration();
        ensure!(s.is_self_osculation(&cfg), "{}: witness {x:?} is not an osculation", c.name);
        ensure!(x.verify(&oracle) != Verdict::No, "{}: witness {x:?} fails its equations", c.name);
        ensure!(x.unclean_witness().verify(&oracle, &c.w) != Verdict::No, "{}: unclean witness of {x:?}", c.name);
        osculations.insert(cfg);
    }
    // Geometric scan: every pair of edges leaving a vertex dual to one hyperplane.
    for v in &s.ball.vertices {
        let moves = p.moves(v);
        for &m1 in &moves {
            for &m2 in &moves {
                if m2.offset <= m1.offset {
                    continue;
                }
                let (h1, h2) = (HyperplaneId::of_move(&oracle, v, m1), HyperplaneId::of_move(&oracle, v, m2));
                if h1.unoriented() != h2.unoriented() {
                    continue;
                }
                let cfg = Pathology { vertex: v.clone(), first: m1, second: m2 };
                let end1 = m1.offset + p.input_side(m1.relation, m1.direction).len();
                if end1 <= m2.offset {
                    let sq = corners(&cfg);
                    if sq.iter().all(|w| s.ball.contains(w)) {
                        ensure!(squares.contains(&sq), "{}: square {cfg:?} missing from the scan", c.name);
                    }
                } else if h1 == h2 {
                    // Both edges leave `v` on the same side: a direct osculation.
                    // Indirect ones (h1 the reverse of h2) are allowed in special complexes.
                    ensure!(osculations.contains(&cfg), "{}: osculation {cfg:?} missing from the scan", c.name);
                }
            }
        }
    }
    Ok((si.len(), so.len()))
}

pub const BRUTE_FORCE_CYCLE_VERTICES: usize = 24;

/// Induced cycles of length `len` by trying every vertex subset.
pub fn brute_force_induced_cycle(adj: &[Vec<bool>], len: usize) -> bool {
    let n = adj.len();
    let mut subset = Vec::new();
    fn go(adj: &[Vec<bool>], len: usize, start: usize, subset: &mut Vec<usize>) -> bool {
        if subset.len() == len {
            let deg_two = subset.iter().all(|&i| subset.iter().filter(|&&j| adj[i][j]).count() == 2);
            if !deg_two {
                return false;
            }
            // Connected and 2-regular means a single cycle.
            let mut seen = vec![subset[0]];
            let mut k = 0;
            while k < seen.len() {
                let i = seen[k];
                for &j in subset.iter() {
                    if adj[i][j] && !seen.contains(&j) {
                        seen.push(j);
                    }
                }
                k += 1;
            }
            return seen.len() == len;
        }
        for v in start..adj.len() {
            subset.push(v);
            if go(adj, len, v + 1, subset) {
                return true;
            }
            subset.pop();
        }
        false
    }
    n >= len && go(adj, len, 0, &mut subset)
}

/// No induced 5-, 7- or 9-cycle in the transversality graph, when its data is
/// exact. Returns whether the graph was exact.
pub fn check_odd_cycles(c: &Case) -> Result<bool, String> {
    let oracle = Oracle::new(&c.p, SearchCaps::default());
    let s = Squier::new(&oracle, &c.w).map_err(|e| e.to_string())?;
    let g = s.transversality_graph();
    let found = g.induced_odd_cycles(9);
    let adj = g.adjacency();
    // Subset enumeration is only affordable on small graphs.
    if adj.len() <= BRUTE_FORCE_CYCLE_VERTICES {
        let brute = [5, 7, 9].iter().any(|&k| brute_force_induced_cycle(&adj, k));
        ensure!(brute == !found.is_empty(), "{}: cycle search disagrees with brute force", c.name);
    }
    if g.exact {
        ensure!(found.is_empty(), "{}: induced odd cycles {found:?}", c.name);
    }
    Ok(g.exact)
}
