//! Truncated Squier complexes and their hyperplanes.
//!
//! The vertices of `S(P,w)` are the words of `[w]`, edges are single rewrites and
//! `n`-cubes are `n` rewrites applied at pairwise disjoint places. A hyperplane
//! is identified by the classes of its two contexts and its relation, so its
//! identity does not depend on which part of the complex was explored.

mod relate;
mod special;

pub use relate::{HyperplaneRelation, Position, Rank, RelateWitness, Squier, TransversalityGraph};
pub use special::{
    dimension_at_least, specialness_report, DimensionAnswer, InterOsculation, Pathology, SelfIntersection,
    SelfOsculation, SpecialnessReport, UncleanWitness,
};

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::rewriting::{enumerate_class, shortlex, Direction, Letter, Move, Presentation, SearchCaps, Word};

/// An edge of the ball, stored once in the forward direction of its relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub mv: Move,
    pub to: usize,
}

/// A cube of dimension at least two, given by the vertex where all its moves are
/// forward and the moves themselves, in increasing offset order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cube {
    pub vertex: usize,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone)]
pub struct SquierBall {
    pub base: Word,
    /// Vertices in shortlex order.
    pub vertices: Vec<Word>,
    pub edges: Vec<Edge>,
    /// Cubes of dimension `k ≥ 2`, keyed by `k`.
    pub cubes: BTreeMap<usize, Vec<Cube>>,
    pub complete: bool,
    index: HashMap<Word, usize>,
}

/// Apply pairwise disjoint moves given in increasing offset order.
pub(crate) fn apply_disjoint(p: &Presentation, w: &[Letter], moves: &[Move]) -> Word {
    let mut out = w.to_vec();
    for m in moves.iter().rev() {
        out = p.apply(&out, *m).expect("disjoint moves stay applicable");
    }
    out
}

fn extend_cubes(
    p: &Presentation,
    candidates: &[Move],
    start: usize,
    free_from: usize,
    chosen: &mut Vec<Move>,
    found: &mut Vec<Vec<Move>>,
) {
    for i in start..candidates.len() {
        let m = candidates[i];
        if m.offset < free_from {
            continue;
        }
        chosen.push(m);
        if chosen.len() >= 2 {
            found.push(chosen.clone());
        }
        let end = m.offset + p.input_side(m.relation, m.direction).len();
        extend_cubes(p, candidates, i + 1, end, chosen, found);
        chosen.pop();
    }
}

impl SquierBall {
    /// Explore `[w]` within `caps` and collect every cube whose corners were all reached.
    pub fn build(p: &Presentation, w: &[Letter], caps: SearchCaps) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        let class = enumerate_class(p, w, caps);
        let vertices = class.members.clone();
        let index: HashMap<Word, usize> = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let edges = class
            .edges
            .iter()
            .map(|(a, mv, b)| Edge { from: index[a], mv: *mv, to: index[b] })
            .collect();
        let mut cubes: BTreeMap<usize, Vec<Cube>> = BTreeMap::new();
        for (vi, v) in vertices.iter().enumerate() {
            let forward: Vec<Move> = p.moves(v).into_iter().filter(|m| m.direction == Direction::Forward).collect();
            let mut found = Vec::new();
            extend_cubes(p, &forward, 0, 0, &mut Vec::new(), &mut found);
            for moves in found {
                let all_corners = (1u64..(1 << moves.len())).all(|mask| {
                    let subset: Vec<Move> =
                        moves.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, m)| *m).collect();
                    index.contains_key(&apply_disjoint(p, v, &subset))
                });
                if all_corners {
                    cubes.entry(moves.len()).or_default().push(Cube { vertex: vi, moves });
                }
            }
        }
        Ok(SquierBall { base: w.to_vec(), vertices, edges, cubes, complete: class.complete, index })
    }

    pub fn vertex_index(&self, w: &[Letter]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        self.index.contains_key(w)
    }

    pub fn squares(&self) -> &[Cube] {
        self.cubes.get(&2).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `counts[k]` is the number of `k`-cubes, vertices and edges included.
    pub fn cube_counts(&self) -> Vec<usize> {
        let mut counts = vec![self.vertices.len(), self.edges.len()];
        for (&k, cs) in &self.cubes {
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] = cs.len();
        }
        if self.edges.is_empty() {
            counts.truncate(1);
        }
        counts
    }

    /// Largest dimension of a cube present in the ball.
    pub fn dimension(&self) -> usize {
        self.cube_counts().len() - 1
    }

    /// Alternating count of cubes. Only meaningful on a complete ball.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if !self.complete {
            return Err(Error::Invalid("euler characteristic needs a complete ball".into()));
        }
        Ok(self
            .cube_counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum())
    }

    /// The two contexts of a move applied to `w`.
    pub fn contexts<'a>(p: &Presentation, w: &'a [Letter], mv: Move) -> (&'a [Letter], &'a [Letter]) {
        let end = mv.offset + p.input_side(mv.relation, mv.direction).len();
        (&w[..mv.offset], &w[end..])
    }

    /// Hyperplane of every edge, and the distinct unoriented hyperplanes in order.
    pub fn hyperplanes(&self, oracle: &Oracle) -> HyperplaneTable {
        let mut ids: Vec<HyperplaneId> = Vec::new();
        let mut of_edge_ids = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let id = HyperplaneId::of_move(oracle, &self.vertices[e.from], e.mv).unoriented();
            of_edge_ids.push(id.clone());
            ids.push(id);
        }
        ids.sort();
        ids.dedup();
        let position: HashMap<HyperplaneId, usize> = ids.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        // Duplicates may differ only in exactness; keep the least exact flag.
        for id in &of_edge_ids {
            let i = position[id];
            if !id.exact {
                ids[i].exact = false;
            }
        }
        let of_edge = of_edge_ids.iter().map(|id| position[id]).collect();
        HyperplaneTable { ids, of_edge, position }
    }
}

/// `[a, u → v, b]` with `a` and `b` replaced by class representatives.
#[derive(Debug, Clone)]
pub struct HyperplaneId {
    pub left: Word,
    pub relation: usize,
    /// `None` for the unoriented hyperplane.
    pub direction: Option<Direction>,
    pub right: Word,
    /// Both representatives are certainly the least members of their classes.
    pub exact: bool,
}

impl HyperplaneId {
    /// The oriented hyperplane dual to the edge leaving `w` through `mv`.
    pub fn of_move(oracle: &Oracle, w: &[Letter], mv: Move) -> Self {
        let (a, b) = SquierBall::contexts(oracle.presentation(), w, mv);
        let (ca, cb) = (oracle.canonical(a), oracle.canonical(b));
        HyperplaneId {
            left: ca.word,
            relation: mv.relation,
            direction: Some(mv.direction),
            right: cb.word,
            exact: ca.exact && cb.exact,
        }
    }

    pub fn unoriented(&self) -> Self {
        HyperplaneId { direction: None, ..self.clone() }
    }

    pub fn reversed(&self) -> Self {
        HyperplaneId { direction: self.direction.map(Direction::flip), ..self.clone() }
    }

    fn key(&self) -> (usize, &[Letter], &[Letter], Option<Direction>) {
        (self.relation, &self.left, &self.right, self.direction)
    }

    /// Human-readable form `[a, u → v, b]`, with `ε` for an empty context.
    pub fn render(&self, p: &Presentation) -> String {
        let dir = self.direction.unwrap_or(Direction::Forward);
        format!(
            "[{}, {} → {}, {}]",
            p.render(&self.left),
            p.render(p.input_side(self.relation, dir)),
            p.render(p.output_side(self.relation, dir)),
            p.render(&self.right)
        )
    }
}

impl PartialEq for HyperplaneId {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for HyperplaneId {}

impl Hash for HyperplaneId {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for HyperplaneId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HyperplaneId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.relation
            .cmp(&other.relation)
            .then_with(|| shortlex(&self.left, &other.left))
            .then_with(|| shortlex(&self.right, &other.right))
            .then_with(|| self.direction.cmp(&other.direction))
    }
}

impl fmt::Display for HyperplaneId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, r{}", self.left, self.relation)?;
        if let Some(d) = self.direction {
            write!(f, " {}", d.as_str())?;
        }
        write!(f, ", {:?}]", self.right)
    }
}

/// The unoriented hyperplanes met by a ball.
#[derive(Debug, Clone)]
pub struct HyperplaneTable {
    pub ids: Vec<HyperplaneId>,
    /// Index into `ids` for every edge of the ball.
    pub of_edge: Vec<usize>,
    position: HashMap<HyperplaneId, usize>,
}

impl HyperplaneTable {
    pub fn position(&self, id: &HyperplaneId) -> Option<usize> {
        self.position.get(&id.unoriented()).copied()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn exact(&self) -> bool {
        self.ids.iter().all(|h| h.exact)
    }
}
