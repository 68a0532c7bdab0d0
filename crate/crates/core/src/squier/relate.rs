//! Transversality of hyperplanes, the `≺` order and ranks.
//!
//! `J₁ = [a, u → v, b]` precedes `J₂ = [c, p → q, d]` when some square has an edge
//! dual to `J₁` to the left of an edge dual to `J₂`. Up to the choice of class
//! representatives this happens exactly when a word `y` (possibly empty) satisfies
//! `c = a u y` and `b = y p d`. Positive answers come from squares of the ball or
//! from an explicit `y`; negative answers come from a closed search, from the
//! completeness of the ball, or from a refuted equation system.

use std::collections::HashMap;

use super::{HyperplaneId, HyperplaneTable, SquierBall};
use crate::certify::{Piece, Refutation, WordSystem};
use crate::error::Result;
use crate::oracle::Oracle;
use crate::rewriting::{concat, Direction, Letter, Move, Verdict, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Position {
    Disjoint,
    FirstPrecSecond,
    SecondPrecFirst,
    Unknown,
}

impl Position {
    pub fn as_str(self) -> &'static str {
        match self {
            Position::Disjoint => "Disjoint",
            Position::FirstPrecSecond => "FirstPrecSecond",
            Position::SecondPrecFirst => "SecondPrecFirst",
            Position::Unknown => "Unknown",
        }
    }
}

/// Evidence behind a [`Position`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelateWitness {
    /// A square of the ball: the vertex where both moves are forward, left move first.
    Square { vertex: Word, left: Move, right: Move },
    /// A word `y` with `c = a u y` and `b = y p d`.
    Middle { y: Word },
    /// Neither order is possible; the reasons for both directions.
    Refuted { forward: String, backward: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneRelation {
    pub value: Position,
    pub witness: Option<RelateWitness>,
}

/// Answer to "does `J₁ ≺ J₂`" with its evidence.
#[derive(Debug, Clone)]
struct Precedence {
    verdict: Verdict,
    witness: Option<RelateWitness>,
    reason: String,
}

impl Precedence {
    fn yes(w: RelateWitness) -> Self {
        Precedence { verdict: Verdict::Yes, witness: Some(w), reason: String::new() }
    }

    fn no(reason: impl Into<String>) -> Self {
        Precedence { verdict: Verdict::No, witness: None, reason: reason.into() }
    }
}

/// A ball together with its hyperplanes and the oracle used to identify them.
pub struct Squier<'a> {
    pub oracle: &'a Oracle,
    pub ball: SquierBall,
    pub table: HyperplaneTable,
    /// `(left, right)` hyperplane indices realised by a square, with the square.
    squares: HashMap<(usize, usize), (usize, Move, Move)>,
}

impl<'a> Squier<'a> {
    pub fn new(oracle: &'a Oracle, w: &[Letter]) -> Result<Self> {
        let ball = SquierBall::build(oracle.presentation(), w, oracle.caps())?;
        Ok(Self::from_ball(oracle, ball))
    }

    pub fn from_ball(oracle: &'a Oracle, ball: SquierBall) -> Self {
        let table = ball.hyperplanes(oracle);
        let mut squares = HashMap::new();
        for sq in ball.squares() {
            let v = &ball.vertices[sq.vertex];
            let (m1, m2) = (sq.moves[0], sq.moves[1]);
            let h1 = table.position(&HyperplaneId::of_move(oracle, v, m1)).expect("edges of the ball are listed");
            let h2 = table.position(&HyperplaneId::of_move(oracle, v, m2)).expect("edges of the ball are listed");
            squares.entry((h1, h2)).or_insert((sq.vertex, m1, m2));
        }
        Squier { oracle, ball, table, squares }
    }

    fn square_witness(&self, i: usize, j: usize) -> Option<RelateWitness> {
        self.squares.get(&(i, j)).map(|&(v, left, right)| RelateWitness::Square {
            vertex: self.ball.vertices[v].clone(),
            left,
            right,
        })
    }

    /// Whether the square scan alone is conclusive for hyperplanes of the ball:
    /// a complete ball contains every square of the component.
    fn squares_are_exhaustive(&self) -> bool {
        self.ball.complete && self.table.exact()
    }

    fn precedes(&self, j1: &HyperplaneId, j2: &HyperplaneId) -> Precedence {
        let p = self.oracle.presentation();
        let (i1, i2) = (self.table.position(j1), self.table.position(j2));
        if let (Some(i), Some(j)) = (i1, i2) {
            if let Some(w) = self.square_witness(i, j) {
                return Precedence::yes(w);
            }
            if self.squares_are_exhaustive() {
                return Precedence::no("no square in the complete ball");
            }
        }
        let u = p.input_side(j1.relation, Direction::Forward).to_vec();
        let side = p.input_side(j2.relation, Direction::Forward).to_vec();
        let (a, b, c, d) = (&j1.left, &j1.right, &j2.left, &j2.right);

        let mut sys = WordSystem::new();
        let y = sys.any_var();
        sys.equation(vec![Piece::Word(c.clone())], vec![Piece::Word(concat(&[a, &u])), y.clone()]);
        sys.equation(vec![Piece::Word(b.clone())], vec![y, Piece::Word(concat(&[&side, d]))]);
        if let Some(r) = self.oracle.refute(&sys) {
            return Precedence::no(r.to_string());
        }

        let au = concat(&[a, &u]);
        let pd = concat(&[&side, d]);
        let mut unknown = false;
        // Members of [c] split as (≡ a u) · y with y p d ≡ b.
        let class_c = self.oracle.class(c);
        for m in &class_c.members {
            for k in 0..=m.len() {
                match self.oracle.equal_verdict(&m[..k], &au) {
                    Verdict::Yes => {
                        let y = &m[k..];
                        match self.oracle.equal_verdict(&concat(&[y, &pd]), b) {
                            Verdict::Yes => return Precedence::yes(RelateWitness::Middle { y: y.to_vec() }),
                            Verdict::Unknown => unknown = true,
                            Verdict::No => {}
                        }
                    }
                    Verdict::Unknown => unknown = true,
                    Verdict::No => {}
                }
            }
        }
        if class_c.complete && !unknown {
            return Precedence::no("closed search over the class of the left context");
        }
        let class_b = self.oracle.class(b);
        let mut unknown_b = false;
        for m in &class_b.members {
            for k in 0..=m.len() {
                match self.oracle.equal_verdict(&m[k..], &pd) {
                    Verdict::Yes => {
                        let y = &m[..k];
                        match self.oracle.equal_verdict(&concat(&[&au, y]), c) {
                            Verdict::Yes => return Precedence::yes(RelateWitness::Middle { y: y.to_vec() }),
                            Verdict::Unknown => unknown_b = true,
                            Verdict::No => {}
                        }
                    }
                    Verdict::Unknown => unknown_b = true,
                    Verdict::No => {}
                }
            }
        }
        if class_b.complete && !unknown_b {
            return Precedence::no("closed search over the class of the right context");
        }
        Precedence { verdict: Verdict::Unknown, witness: None, reason: "search caps reached".into() }
    }

    /// Position of two hyperplanes with respect to each other.
    pub fn relate(&self, j1: &HyperplaneId, j2: &HyperplaneId) -> HyperplaneRelation {
        let forward = self.precedes(j1, j2);
        if forward.verdict == Verdict::Yes {
            return HyperplaneRelation { value: Position::FirstPrecSecond, witness: forward.witness };
        }
        let backward = self.precedes(j2, j1);
        if backward.verdict == Verdict::Yes {
            return HyperplaneRelation { value: Position::SecondPrecFirst, witness: backward.witness };
        }
        if forward.verdict == Verdict::No && backward.verdict == Verdict::No {
            return HyperplaneRelation {
                value: Position::Disjoint,
                witness: Some(RelateWitness::Refuted { forward: forward.reason, backward: backward.reason }),
            };
        }
        HyperplaneRelation { value: Position::Unknown, witness: None }
    }

    /// Relate every pair of hyperplanes of the ball.
    pub fn transversality_graph(&self) -> TransversalityGraph {
        let n = self.table.len();
        let mut prec = Vec::new();
        let mut unknown = Vec::new();
        let mut self_prec = Vec::new();
        for i in 0..n {
            for j in i..n {
                let r = self.relate(&self.table.ids[i], &self.table.ids[j]);
                match r.value {
                    Position::FirstPrecSecond if i == j => self_prec.push(i),
                    Position::FirstPrecSecond => prec.push((i, j)),
                    Position::SecondPrecFirst if i == j => self_prec.push(i),
                    Position::SecondPrecFirst => prec.push((j, i)),
                    Position::Unknown => unknown.push((i, j)),
                    Position::Disjoint => {}
                }
            }
        }
        prec.sort_unstable();
        let exact = unknown.is_empty() && self.table.exact();
        TransversalityGraph { ids: self.table.ids.clone(), prec, unknown, self_prec, exact }
    }

    /// Whether no chain of `k` hyperplanes can sit below `j`: such a chain, with
    /// `j`, would cross in one cube, so the left context of `j` would factor as
    /// `x₀ s₁ x₁ ⋯ s_k x_k` with relation sides `sᵢ`.
    pub fn no_chain_below(&self, j: &HyperplaneId, k: usize) -> bool {
        let sides = self.oracle.presentation().sides();
        let mut tuple = vec![0usize; k];
        loop {
            let mut sys = WordSystem::new();
            let mut rhs = vec![sys.any_var()];
            for &s in &tuple {
                rhs.push(Piece::Word(sides[s].clone()));
                rhs.push(sys.any_var());
            }
            sys.equation(vec![Piece::Word(j.left.clone())], rhs);
            if self.oracle.refute(&sys).is_none() {
                return false;
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return true;
                }
                tuple[pos] += 1;
                if tuple[pos] < sides.len() {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Rank of the `i`-th hyperplane of the ball. Exact when the graph is exact and
    /// either the ball is complete or a longer chain below is refuted.
    pub fn rank(&self, graph: &TransversalityGraph, i: usize) -> Rank {
        let ranks = graph.ranks();
        match ranks[i] {
            None => Rank { value: None, exact: graph.exact },
            Some(r) => {
                let exact =
                    graph.exact && (self.ball.complete || self.no_chain_below(&self.table.ids[i], r + 1));
                Rank { value: Some(r), exact }
            }
        }
    }

    /// Refutation reason for `refute`-based answers, exposed for reports.
    pub fn refute(&self, sys: &WordSystem) -> Option<Refutation> {
        self.oracle.refute(sys)
    }
}

/// `value` is `None` when the hyperplane sits above a cycle (infinite rank).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rank {
    pub value: Option<usize>,
    pub exact: bool,
}

/// Hyperplanes of a ball and the `≺` pairs among them.
#[derive(Debug, Clone)]
pub struct TransversalityGraph {
    pub ids: Vec<HyperplaneId>,
    /// `(i, j)` with `ids[i] ≺ ids[j]`.
    pub prec: Vec<(usize, usize)>,
    /// Pairs whose position could not be decided.
    pub unknown: Vec<(usize, usize)>,
    /// Hyperplanes preceding themselves, which means they self-intersect.
    pub self_prec: Vec<usize>,
    /// Every pair decided and every identity exact.
    pub exact: bool,
}

impl TransversalityGraph {
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.ids.len();
        let mut adj = vec![vec![false; n]; n];
        for &(i, j) in &self.prec {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        adj
    }

    pub fn edge_count(&self) -> usize {
        self.prec.len()
    }

    /// Whether the graph is the complete bipartite graph with the given parts, every
    /// edge oriented from `left` to `right`.
    pub fn is_oriented_complete_bipartite(&self, left: &[usize], right: &[usize]) -> bool {
        let mut expected: Vec<(usize, usize)> =
            left.iter().flat_map(|&i| right.iter().map(move |&j| (i, j))).collect();
        expected.sort_unstable();
        left.len() + right.len() == self.ids.len() && self.prec == expected
    }

    /// Induced cycles of odd length between 5 and `max_len`, each listed once with
    /// its smallest vertex first.
    pub fn induced_odd_cycles(&self, max_len: usize) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let n = adj.len();
        let mut found = Vec::new();
        fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, max_len: usize, found: &mut Vec<Vec<usize>>) {
            let start = path[0];
            let last = *path.last().unwrap();
            for next in (start + 1)..adj.len() {
                if !adj[last][next] || path.contains(&next) {
                    continue;
                }
                // The new vertex may only touch its predecessor, and the start when closing.
                let inner = if path.len() >= 2 { &path[1..path.len() - 1] } else { &path[..0] };
                if inner.iter().any(|&x| adj[x][next]) {
                    continue;
                }
                path.push(next);
                let len = path.len();
                if len >= 3 && adj[start][next] {
                    if len >= 5 && len % 2 == 1 && path[1] < next {
                        found.push(path.clone());
                    }
                } else if len < max_len {
                    extend(adj, path, max_len, found);
                }
                path.pop();
            }
        }
        for s in 0..n {
            let mut path = vec![s];
            extend(&adj, &mut path, max_len, &mut found);
        }
        found
    }

    /// Length of the longest `≺` chain ending at each vertex (not counting the
    /// vertex), or `None` when a cycle lies below.
    pub fn ranks(&self) -> Vec<Option<usize>> {
        let n = self.ids.len();
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(i, j) in &self.prec {
            below[j].push(i);
        }
        for &i in &self.self_prec {
            below[i].push(i);
        }
        // 0 = unvisited, 1 = in progress, 2 = done
        let mut state = vec![0u8; n];
        let mut memo: Vec<Option<usize>> = vec![None; n];
        fn visit(v: usize, below: &[Vec<usize>], state: &mut [u8], memo: &mut [Option<usize>]) -> Option<usize> {
            if state[v] == 2 {
                return memo[v];
            }
            if state[v] == 1 {
                return None;
            }
            state[v] = 1;
            let mut best = Some(0usize);
            for &u in &below[v] {
                best = match (best, visit(u, below, state, memo)) {
                    (Some(b), Some(r)) => Some(b.max(r + 1)),
                    _ => None,
                };
            }
            state[v] = 2;
            memo[v] = best;
            best
        }
        (0..n).map(|v| visit(v, &below, &mut state, &mut memo)).collect()
    }

    /// Number of hyperplanes in the longest `≺` chain.
    pub fn longest_chain(&self) -> Option<usize> {
        if self.ids.is_empty() {
            return Some(0);
        }
        self.ranks().into_iter().map(|r| r.map(|r| r + 1)).try_fold(0, |acc, r| r.map(|r| acc.max(r)))
    }
}
