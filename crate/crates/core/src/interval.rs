//! Interval graphs and the diagram groups `D(P(C), x₁⋯xₙ)` that realise the
//! right-angled Artin groups on their complements.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::raag::RaagGraph;
use crate::rewriting::{Direction, Move, Presentation, Relation, Word};

/// Largest graph the orientation search accepts.
pub const MAX_RECOGNITION_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub name: String,
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn meets(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Intervals of `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCollection {
    pub n: usize,
    pub intervals: Vec<Interval>,
}

impl IntervalCollection {
    pub fn new(n: usize, intervals: Vec<Interval>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("ground set must be nonempty".into()));
        }
        let mut names = HashSet::new();
        for i in &intervals {
            if !(1 <= i.lo && i.lo <= i.hi && i.hi <= n) {
                return Err(Error::Invalid(format!("interval {} = [{}, {}] is not inside [1, {n}]", i.name, i.lo, i.hi)));
            }
            if i.name.is_empty() || i.name.contains(char::is_whitespace) || !names.insert(i.name.as_str()) {
                return Err(Error::Invalid(format!("bad or repeated interval name `{}`", i.name)));
            }
        }
        Ok(IntervalCollection { n, intervals })
    }

    /// Unnamed intervals get the names `I1`, `I2`, ….
    pub fn from_bounds(n: usize, bounds: &[(usize, usize)]) -> Result<Self> {
        let intervals =
            bounds.iter().enumerate().map(|(k, &(lo, hi))| Interval { name: format!("I{}", k + 1), lo, hi }).collect();
        IntervalCollection::new(n, intervals)
    }

    /// `n=7` then one `name: lo hi` per line (or separated by `/`); `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut intervals = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line_no = line_no + 1;
            let content = raw.split('#').next().unwrap_or("");
            for item in content.split('/').map(str::trim).filter(|s| !s.is_empty()) {
                let syntax = |msg: &str| Error::Syntax { line: line_no, msg: msg.to_string() };
                if let Some(v) = item.strip_prefix("n=").or_else(|| item.strip_prefix("n =")) {
                    n = Some(v.trim().parse::<usize>().map_err(|_| syntax("bad ground set size"))?);
                    continue;
                }
                let (name, rest) = item.split_once(':').ok_or_else(|| syntax("expected `name: lo hi`"))?;
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| syntax("bad bound")))
                    .collect::<Result<_>>()?;
                let [lo, hi] = nums[..] else { return Err(syntax("expected two bounds")) };
                intervals.push(Interval { name: name.trim().to_string(), lo, hi });
            }
        }
        let n = n.ok_or(Error::Syntax { line: 1, msg: "missing `n=`".into() })?;
        IntervalCollection::new(n, intervals)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for i in &self.intervals {
            out.push_str(&format!("{}: {} {}\n", i.name, i.lo, i.hi));
        }
        out
    }

    /// Every collection of at most `max_intervals` distinct intervals of `{1..n}`.
    pub fn all_small(n: usize, max_intervals: usize) -> Vec<IntervalCollection> {
        let all: Vec<(usize, usize)> = (1..=n).flat_map(|lo| (lo..=n).map(move |hi| (lo, hi))).collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        fn rec(all: &[(usize, usize)], start: usize, k: usize, chosen: &mut Vec<(usize, usize)>, n: usize, out: &mut Vec<IntervalCollection>) {
            if !chosen.is_empty() {
                out.push(IntervalCollection::from_bounds(n, chosen).expect("bounds are in range"));
            }
            if chosen.len() == k {
                return;
            }
            for i in start..all.len() {
                chosen.push(all[i]);
                rec(all, i + 1, k, chosen, n, out);
                chosen.pop();
            }
        }
        rec(&all, 0, max_intervals, &mut chosen, n, &mut out);
        out
    }
}

/// A finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<bool>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Invalid(format!("bad edge ({a}, {b})")));
            }
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Ok(SimpleGraph { adj })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::new(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::new(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::new(0, &[]).expect("empty").complement_of_size(n)
    }

    fn complement_of_size(&self, n: usize) -> Self {
        SimpleGraph { adj: (0..n).map(|i| (0..n).map(|j| i != j).collect()).collect() }
    }

    /// Whitespace-separated `a-b` edges after an `n=` header, e.g. `n=5 0-1 1-2`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',' || c == '/').filter(|t| !t.is_empty()) {
            let bad = || Error::Syntax { line: 1, msg: format!("bad token `{tok}`") };
            if let Some(v) = tok.strip_prefix("n=") {
                n = Some(v.parse().map_err(|_| bad())?);
            } else {
                let (a, b) = tok.split_once('-').ok_or_else(bad)?;
                edges.push((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
            }
        }
        SimpleGraph::new(n.ok_or(Error::Syntax { line: 1, msg: "missing `n=`".into() })?, &edges)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adj[i][j]).collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        SimpleGraph { adj: (0..n).map(|i| (0..n).map(|j| i != j && !self.adj[i][j]).collect()).collect() }
    }

    pub fn to_raag(&self, labels: Vec<String>) -> Result<RaagGraph> {
        RaagGraph::new(labels, &self.edges())
    }

    /// Two edges `ab`, `cd` on four distinct vertices with no edge between them.
    pub fn induced_two_edges(&self) -> Option<[usize; 4]> {
        let edges = self.edges();
        for (k, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[k + 1..] {
                let distinct = [a, b].iter().all(|x| *x != c && *x != d);
                if distinct && [a, b].iter().all(|&x| !self.adj[x][c] && !self.adj[x][d]) {
                    return Some([a, b, c, d]);
                }
            }
        }
        None
    }

    /// An orientation `(x, y)` of every edge such that `x → y → z` forces `x → z`.
    pub fn transitive_orientation(&self) -> Option<Vec<(usize, usize)>> {
        let edges = self.edges();
        let n = self.len();
        // dir[a][b] = Some(true) when a → b.
        let mut dir: Vec<Vec<Option<bool>>> = vec![vec![None; n]; n];
        fn consistent(adj: &[Vec<bool>], dir: &[Vec<Option<bool>>], a: usize, b: usize) -> bool {
            let forward = |x: usize, y: usize| dir[x][y] == Some(true);
            for y in 0..adj.len() {
                // a → b → y needs a → y; y → a → b needs y → b.
                if forward(b, y) && (!adj[a][y] || forward(y, a)) {
                    return false;
                }
                if forward(y, a) && (!adj[y][b] || forward(b, y)) {
                    return false;
                }
                // a → y → b with b → a impossible here; a → b with b → y → a is a cycle.
                if forward(b, y) && forward(y, a) {
                    return false;
                }
            }
            true
        }
        fn search(adj: &[Vec<bool>], edges: &[(usize, usize)], k: usize, dir: &mut Vec<Vec<Option<bool>>>) -> bool {
            if k == edges.len() {
                return true;
            }
            let (u, v) = edges[k];
            // Reversing a transitive orientation keeps it transitive, so fix the first edge.
            let choices: &[(usize, usize)] = if k == 0 { &[(u, v)] } else { &[(u, v), (v, u)] };
            for &(a, b) in choices {
                dir[a][b] = Some(true);
                dir[b][a] = Some(false);
                if consistent(adj, dir, a, b) && search(adj, edges, k + 1, dir) {
                    return true;
                }
                dir[a][b] = None;
                dir[b][a] = None;
            }
            false
        }
        if !search(&self.adj, &edges, 0, &mut dir) {
            return None;
        }
        Some(edges.iter().map(|&(u, v)| if dir[u][v] == Some(true) { (u, v) } else { (v, u) }).collect())
    }

    /// Whether `orientation` orients every edge once and is transitive.
    pub fn is_transitive_orientation(&self, orientation: &[(usize, usize)]) -> bool {
        let n = self.len();
        let mut arc = vec![vec![false; n]; n];
        for &(a, b) in orientation {
            if !self.adj[a][b] || arc[a][b] || arc[b][a] {
                return false;
            }
            arc[a][b] = true;
        }
        if orientation.len() != self.edges().len() {
            return false;
        }
        (0..n).all(|x| (0..n).all(|y| !arc[x][y] || (0..n).all(|z| !arc[y][z] || arc[x][z])))
    }
}

/// Intersection graph of the intervals, in collection order.
pub fn interval_graph(c: &IntervalCollection) -> SimpleGraph {
    let k = c.intervals.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if c.intervals[i].meets(&c.intervals[j]) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(k, &edges).expect("indices in range")
}

#[derive(Debug, Clone)]
pub enum Recognition {
    /// A transitive orientation of the graph and intervals whose intersection
    /// graph is its complement.
    Yes { orientation: Vec<(usize, usize)>, realization: IntervalCollection },
    /// Two edges inducing the complement of a 4-cycle.
    InducedTwoEdges([usize; 4]),
    NotTransitivelyOrientable,
}

impl Recognition {
    pub fn accepted(&self) -> bool {
        matches!(self, Recognition::Yes { .. })
    }
}

/// Whether `g` is the complement of an interval graph.
///
/// Without an induced pair of independent edges, a transitive orientation is an
/// interval order, and the down-sets of an interval order are nested, which gives
/// the intervals directly.
pub fn is_complement_of_interval(g: &SimpleGraph) -> Result<Recognition> {
    if g.len() > MAX_RECOGNITION_VERTICES {
        return Err(Error::Invalid(format!("graph has {} vertices, limit is {MAX_RECOGNITION_VERTICES}", g.len())));
    }
    if let Some(q) = g.induced_two_edges() {
        return Ok(Recognition::InducedTwoEdges(q));
    }
    let Some(orientation) = g.transitive_orientation() else {
        return Ok(Recognition::NotTransitivelyOrientable);
    };
    let n = g.len();
    let mut below: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(a, b) in &orientation {
        below[b].insert(a);
    }
    let mut levels: Vec<BTreeSet<usize>> = below.clone();
    levels.sort_by_key(|s| s.len());
    levels.dedup();
    let level_of = |s: &BTreeSet<usize>| levels.iter().position(|l| l == s).expect("own down-set is listed");
    let mut bounds = Vec::with_capacity(n);
    for x in 0..n {
        let lo = level_of(&below[x]);
        let hi = levels.iter().position(|l| l.contains(&x)).map_or(levels.len() - 1, |j| j - 1);
        bounds.push((lo + 1, hi + 1));
    }
    let realization = IntervalCollection::from_bounds(levels.len().max(1), &bounds)?;
    if interval_graph(&realization) != g.complement() {
        return Err(Error::Invalid("orientation is not an interval order".into()));
    }
    Ok(Recognition::Yes { orientation, realization })
}

/// `⟨x₁…xₙ, a_I, b_I, c_I | x_I = a_I, a_I = b_I, b_I = c_I, c_I = a_I⟩`, four
/// relations per interval in collection order.
pub fn presentation_for(c: &IntervalCollection) -> Result<Presentation> {
    let mut letters: Vec<String> = (1..=c.n).map(|i| format!("x{i}")).collect();
    let mut relations = Vec::new();
    for i in &c.intervals {
        let base = letters.len() as u32;
        letters.extend(["a", "b", "c"].iter().map(|l| format!("{l}_{}", i.name)));
        let x_i: Word = (i.lo - 1..i.hi).map(|k| k as u32).collect();
        let (a, b, cc) = (vec![base], vec![base + 1], vec![base + 2]);
        relations.push(Relation { lhs: x_i, rhs: a.clone() });
        relations.push(Relation { lhs: a.clone(), rhs: b.clone() });
        relations.push(Relation { lhs: b, rhs: cc.clone() });
        relations.push(Relation { lhs: cc, rhs: a });
    }
    Presentation::new(letters, relations)
}

pub fn base_word(c: &IntervalCollection) -> Word {
    (0..c.n as u32).collect()
}

/// `x_I → a_I → b_I → c_I → a_I → x_I` in place, with the rest of the word fixed.
pub fn delta_diagram(p: &Presentation, c: &IntervalCollection, k: usize) -> Result<Diagram> {
    let i = &c.intervals[k];
    let at = i.lo - 1;
    let r = 4 * k;
    let fwd = Direction::Forward;
    let moves = vec![
        Move::new(at, r, fwd),
        Move::new(at, r + 1, fwd),
        Move::new(at, r + 2, fwd),
        Move::new(at, r + 3, fwd),
        Move::new(at, r, Direction::Backward),
    ];
    Diagram::new(p, &base_word(c), moves)
}

/// Numbers of distinct group elements at word length at most `0..=radius` over
/// the given spherical generators and their inverses.
pub fn diagram_ball_sizes(p: &Presentation, gens: &[Diagram], radius: usize) -> Result<Vec<usize>> {
    let Some(first) = gens.first() else { return Ok(vec![1; radius + 1]) };
    let mut steps = Vec::new();
    for g in gens {
        let g = g.reduce(p);
        steps.push(g.inverse());
        steps.push(g);
    }
    let start = Diagram::identity(first.top());
    let mut seen = HashSet::from([start.canonical_key(p)]);
    let mut frontier = vec![start];
    let mut sizes = vec![1];
    for _ in 0..radius {
        let mut next = Vec::new();
        for d in &frontier {
            for s in &steps {
                let e = d.product(p, s)?;
                if seen.insert(e.canonical_key(p)) {
                    next.push(e);
                }
            }
        }
        frontier = next;
        sizes.push(seen.len());
    }
    Ok(sizes)
}

#[derive(Debug, Clone)]
pub struct RaagIsoReport {
    /// `(I, J, commute)` for every pair where commuting disagrees with disjointness.
    pub commutation_mismatches: Vec<(usize, usize, bool)>,
    /// Relators `[Δ_I, Δ_J]` of `A(Γ̄)` that fail to reduce.
    pub failed_relators: Vec<(usize, usize)>,
    pub diagram_ball: Vec<usize>,
    pub raag_ball: Vec<usize>,
    /// Every `Δ_I` has five cells and is reduced.
    pub generators_reduced: bool,
}

impl RaagIsoReport {
    pub fn passed(&self) -> bool {
        self.commutation_mismatches.is_empty()
            && self.failed_relators.is_empty()
            && self.diagram_ball == self.raag_ball
            && self.generators_reduced
    }
}

impl fmt::Display for RaagIsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "commutation mismatches: {}, failed relators: {}, ball sizes {:?} vs {:?}",
            self.commutation_mismatches.len(),
            self.failed_relators.len(),
            self.diagram_ball,
            self.raag_ball
        )
    }
}

/// Evidence that `I ↦ Δ_I` is an isomorphism `A(Γ̄) → D(P(C), x₁⋯xₙ)`.
pub fn verify_raag_iso(c: &IntervalCollection, radius: usize) -> Result<RaagIsoReport> {
    let p = presentation_for(c)?;
    let k = c.intervals.len();
    let deltas: Vec<Diagram> = (0..k).map(|i| delta_diagram(&p, c, i)).collect::<Result<_>>()?;
    let generators_reduced = deltas.iter().all(|d| d.cells() == 5 && d.reduce(&p).cells() == 5);
    let co = interval_graph(c).complement();
    let mut commutation_mismatches = Vec::new();
    let mut failed_relators = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (di, dj) = (&deltas[i], &deltas[j]);
            let commutator = di.compose(&p, dj)?.compose(&p, &di.inverse())?.compose(&p, &dj.inverse())?.reduce(&p);
            let commute = commutator.cells() == 0;
            if commute != co.adjacent(i, j) {
                commutation_mismatches.push((i, j, commute));
            }
            if co.adjacent(i, j) && !commute {
                failed_relators.push((i, j));
            }
        }
    }
    let labels = c.intervals.iter().map(|i| i.name.clone()).collect();
    let raag_ball = co.to_raag(labels)?.ball_sizes(radius);
    let diagram_ball = diagram_ball_sizes(&p, &deltas, radius)?;
    Ok(RaagIsoReport { commutation_mismatches, failed_relators, diagram_ball, raag_ball, generators_reduced })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pictured_collection_gives_a_path() {
        let c = IntervalCollection::from_bounds(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        assert_eq!(interval_graph(&c), SimpleGraph::path(6));
        let disjoint = IntervalCollection::from_bounds(5, &[(1, 1), (3, 3), (5, 5)]).unwrap();
        assert!(interval_graph(&disjoint).edges().is_empty());
        let nested = IntervalCollection::from_bounds(5, &[(1, 5), (2, 4), (3, 3)]).unwrap();
        assert_eq!(interval_graph(&nested), SimpleGraph::complete(3));
    }

    #[test]
    fn recognition() {
        assert!(matches!(is_complement_of_interval(&SimpleGraph::cycle(5)).unwrap(), Recognition::NotTransitivelyOrientable));
        assert!(matches!(
            is_complement_of_interval(&SimpleGraph::cycle(4).complement()).unwrap(),
            Recognition::InducedTwoEdges(_)
        ));
        match is_complement_of_interval(&SimpleGraph::complete(3)).unwrap() {
            Recognition::Yes { realization, .. } => assert!(interval_graph(&realization).edges().is_empty()),
            other => panic!("{other:?}"),
        }
        for n in 1..=8 {
            let g = SimpleGraph::path(n).complement();
            let Recognition::Yes { orientation, realization } = is_complement_of_interval(&g).unwrap() else {
                panic!("complement of P{n}")
            };
            assert!(g.is_transitive_orientation(&orientation));
            assert_eq!(interval_graph(&realization), SimpleGraph::path(n));
        }
        assert!(is_complement_of_interval(&SimpleGraph::path(13)).is_err());
    }

    #[test]
    fn parsing() {
        let c = IntervalCollection::parse("n=7 / I1: 1 3 / I2: 2 5").unwrap();
        assert_eq!(c.intervals.len(), 2);
        assert_eq!(IntervalCollection::parse(&c.to_text()).unwrap(), c);
        assert!(IntervalCollection::parse("n=3\nI: 2 4").is_err());
        assert!(IntervalCollection::parse("I: 1 1").is_err());
        assert_eq!(SimpleGraph::parse("n=5 0-1 1-2 2-3 3-4 4-0").unwrap(), SimpleGraph::cycle(5));
    }

    #[test]
    fn single_interval_presentation() {
        let c = IntervalCollection::from_bounds(1, &[(1, 1)]).unwrap();
        let p = presentation_for(&c).unwrap();
        assert_eq!(p.to_text().lines().filter(|l| l.starts_with("rel:")).count(), 4);
        let r = verify_raag_iso(&c, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.diagram_ball, vec![1, 3, 5, 7]);
    }

    #[test]
    fn small_groups() {
        let z2 = IntervalCollection::from_bounds(2, &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(verify_raag_iso(&z2, 3).unwrap().diagram_ball, vec![1, 5, 13, 25]);
        let f2 = IntervalCollection::from_bounds(3, &[(1, 2), (2, 3)]).unwrap();
        let r = verify_raag_iso(&f2, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.diagram_ball, vec![1, 5, 17, 53]);
    }
}
