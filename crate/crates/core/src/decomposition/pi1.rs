//! Fundamental groups of (possibly truncated) Squier balls: a BFS spanning tree,
//! one generator per edge outside it, one relator per square.

use std::collections::{HashMap, VecDeque};

use crate::diagrams::Diagram;
use crate::groups::{GroupPresentation, GroupWord};
use crate::raag::Syllable;
use crate::rewriting::{Letter, Move, Presentation};
use crate::squier::SquierBall;

pub struct BallGroup {
    pub ball: SquierBall,
    /// Edge through which BFS reached each vertex, with `true` when traversed
    /// against its stored direction.
    parent: Vec<Option<(usize, bool)>>,
    generator_of_edge: HashMap<usize, usize>,
    /// Edges outside the tree, in generator order.
    pub generator_edges: Vec<usize>,
    steps: HashMap<(usize, Move), (usize, bool)>,
}

impl BallGroup {
    pub fn new(ball: SquierBall) -> Self {
        let mut steps = HashMap::new();
        for (k, e) in ball.edges.iter().enumerate() {
            steps.insert((e.from, e.mv), (k, false));
            steps.insert((e.to, e.mv.reversed()), (k, true));
        }
        let mut out: Vec<Vec<(usize, bool, usize)>> = vec![Vec::new(); ball.vertices.len()];
        for (k, e) in ball.edges.iter().enumerate() {
            out[e.from].push((k, false, e.to));
            out[e.to].push((k, true, e.from));
        }
        let mut parent = vec![None; ball.vertices.len()];
        let mut seen = vec![false; ball.vertices.len()];
        let mut in_tree = vec![false; ball.edges.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &(k, back, u) in &out[v] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some((k, back));
                    in_tree[k] = true;
                    queue.push_back(u);
                }
            }
        }
        let generator_edges: Vec<usize> = (0..ball.edges.len()).filter(|&k| !in_tree[k]).collect();
        let generator_of_edge = generator_edges.iter().enumerate().map(|(g, &k)| (k, g)).collect();
        BallGroup { ball, parent, generator_of_edge, generator_edges, steps }
    }

    pub fn generator_count(&self) -> usize {
        self.generator_edges.len()
    }

    /// The generators crossed by a path given as moves from `start`, or `None` if
    /// the path leaves the ball.
    pub fn read(&self, start: &[Letter], moves: &[Move]) -> Option<GroupWord> {
        let mut v = self.ball.vertex_index(start)?;
        let mut out = Vec::new();
        for &mv in moves {
            let &(k, back) = self.steps.get(&(v, mv))?;
            if let Some(&g) = self.generator_of_edge.get(&k) {
                out.push(Syllable::new(g, back));
            }
            let e = &self.ball.edges[k];
            v = if back { e.from } else { e.to };
        }
        Some(out)
    }

    /// Moves along the tree from the base to vertex `v`.
    pub fn tree_path(&self, v: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        let mut cur = v;
        while let Some((k, back)) = self.parent[cur] {
            let e = &self.ball.edges[k];
            if back {
                moves.push(e.mv.reversed());
                cur = e.to;
            } else {
                moves.push(e.mv);
                cur = e.from;
            }
        }
        moves.reverse();
        moves
    }

    /// The loop at the base word that goes around generator `g`.
    pub fn generator_loop(&self, g: usize) -> Vec<Move> {
        let e = &self.ball.edges[self.generator_edges[g]];
        let mut moves = self.tree_path(e.from);
        moves.push(e.mv);
        moves.extend(self.tree_path(e.to).iter().rev().map(|m| m.reversed()));
        moves
    }

    /// The spherical diagram of generator `g`.
    pub fn generator_diagram(&self, p: &Presentation, g: usize) -> Diagram {
        Diagram::new(p, &self.ball.vertices[0], self.generator_loop(g)).expect("loops replay")
    }

    /// One relator per square of the ball.
    pub fn presentation(&self, p: &Presentation, prefix: &str) -> GroupPresentation {
        let mut out =
            GroupPresentation::new((0..self.generator_count()).map(|g| format!("{prefix}{}", g + 1)).collect());
        for sq in self.ball.squares() {
            if let Some(r) = self.square_relator(p, sq.vertex, sq.moves[0], sq.moves[1]) {
                out.add_relator(r);
            }
        }
        out.truncated = !self.ball.complete;
        out
    }

    fn square_relator(&self, p: &Presentation, v: usize, m1: Move, m2: Move) -> Option<GroupWord> {
        let (m1, m2) = if m1.offset < m2.offset { (m1, m2) } else { (m2, m1) };
        let delta = p.output_side(m1.relation, m1.direction).len() as isize
            - p.input_side(m1.relation, m1.direction).len() as isize;
        let m2_shifted = Move::new((m2.offset as isize + delta) as usize, m2.relation, m2.direction);
        self.read(&self.ball.vertices[v], &[m1, m2_shifted, m1.reversed(), m2.reversed()])
    }
}
