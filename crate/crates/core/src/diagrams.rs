//! Semigroup diagrams as derivations considered up to commutation of independent
//! moves.
//!
//! Internally a derivation is unfolded into its cell structure: every letter
//! occurrence gets an identifier, each cell consumes a run of identifiers and
//! produces fresh ones. Two derivations are isotopic exactly when they induce the
//! same cell structure, which is what [`CanonicalKey`] records (as a layered normal
//! form), and a dipole is a cell that consumes precisely the letters produced by an
//! inverse cell.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rewriting::{concat, Direction, Letter, Move, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    top: Word,
    moves: Vec<Move>,
    bot: Word,
}

/// Layered normal form: layer `k` holds the cells whose longest chain of
/// predecessors has length `k`, each given by its offset in the word reached before
/// the layer starts, sorted by offset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub top: Word,
    pub layers: Vec<Vec<Move>>,
}

impl CanonicalKey {
    pub fn cells(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }
}

/// One cell of the unfolded diagram.
#[derive(Debug, Clone)]
struct Cell {
    relation: usize,
    direction: Direction,
    inputs: Vec<u32>,
    outputs: Vec<u32>,
}

/// The cell structure of a derivation: letter occurrences are numbered, the top
/// word uses `0..top.len()`.
#[derive(Debug, Clone)]
struct Unfolded {
    top_len: usize,
    cells: Vec<Cell>,
    labels: Vec<Letter>,
}

impl Unfolded {
    fn new(p: &Presentation, top: &[Letter], moves: &[Move]) -> Self {
        let mut labels: Vec<Letter> = top.to_vec();
        let mut cur: Vec<u32> = (0..top.len() as u32).collect();
        let mut cells = Vec::with_capacity(moves.len());
        for m in moves {
            let input_len = p.input_side(m.relation, m.direction).len();
            let output = p.output_side(m.relation, m.direction);
            let inputs: Vec<u32> = cur[m.offset..m.offset + input_len].to_vec();
            let outputs: Vec<u32> = (0..output.len()).map(|k| (labels.len() + k) as u32).collect();
            labels.extend_from_slice(output);
            cur.splice(m.offset..m.offset + input_len, outputs.iter().copied());
            cells.push(Cell { relation: m.relation, direction: m.direction, inputs, outputs });
        }
        Unfolded { top_len: top.len(), cells, labels }
    }

    /// Re-linearise the cells (in stored order) into positioned moves.
    fn moves(&self) -> Vec<Move> {
        let mut cur: Vec<u32> = (0..self.top_len as u32).collect();
        let mut out = Vec::with_capacity(self.cells.len());
        for c in &self.cells {
            let at = position(&cur, &c.inputs);
            cur.splice(at..at + c.inputs.len(), c.outputs.iter().copied());
            out.push(Move::new(at, c.relation, c.direction));
        }
        out
    }
}

fn position(cur: &[u32], run: &[u32]) -> usize {
    let at = cur.iter().position(|&x| x == run[0]).expect("consumed letters are present");
    debug_assert_eq!(&cur[at..at + run.len()], run);
    at
}

impl Diagram {
    /// The trivial diagram `ε(w)`.
    pub fn identity(w: &[Letter]) -> Self {
        Diagram { top: w.to_vec(), moves: Vec::new(), bot: w.to_vec() }
    }

    /// Build a diagram from a derivation, checking every move applies.
    pub fn new(p: &Presentation, top: &[Letter], moves: Vec<Move>) -> Result<Self> {
        let bot = p.replay(top, &moves)?.pop().unwrap();
        Ok(Diagram { top: top.to_vec(), moves, bot })
    }

    /// The one-cell diagram `(a, u → v, b)` where `u` is the side consumed in direction `dir`.
    pub fn atom(p: &Presentation, a: &[Letter], relation: usize, dir: Direction, b: &[Letter]) -> Self {
        let top = concat(&[a, p.input_side(relation, dir), b]);
        let bot = concat(&[a, p.output_side(relation, dir), b]);
        Diagram { top, moves: vec![Move::new(a.len(), relation, dir)], bot }
    }

    pub fn top(&self) -> &Word {
        &self.top
    }

    pub fn bot(&self) -> &Word {
        &self.bot
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Number of cells, `#(Δ)`.
    pub fn cells(&self) -> usize {
        self.moves.len()
    }

    pub fn is_spherical(&self) -> bool {
        self.top == self.bot
    }

    /// Every word along the derivation, from top to bottom.
    pub fn words(&self, p: &Presentation) -> Vec<Word> {
        p.replay(&self.top, &self.moves).expect("diagram derivations always replay")
    }

    /// `self ∘ other`: glue the bottom of `self` to the top of `other`.
    pub fn compose(&self, p: &Presentation, other: &Diagram) -> Result<Self> {
        if self.bot != other.top {
            return Err(Error::ComposeMismatch { bot: p.render(&self.bot), top: p.render(&other.top) });
        }
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        Ok(Diagram { top: self.top.clone(), moves, bot: other.bot.clone() })
    }

    /// `self + other`: place the diagrams side by side.
    pub fn sum(&self, other: &Diagram) -> Self {
        let shift = self.bot.len();
        let mut moves = self.moves.clone();
        moves.extend(other.moves.iter().map(|m| Move::new(m.offset + shift, m.relation, m.direction)));
        Diagram {
            top: concat(&[&self.top, &other.top]),
            moves,
            bot: concat(&[&self.bot, &other.bot]),
        }
    }

    /// Mirror image: the derivation read backwards.
    pub fn inverse(&self) -> Self {
        Diagram {
            top: self.bot.clone(),
            moves: self.moves.iter().rev().map(|m| m.reversed()).collect(),
            bot: self.top.clone(),
        }
    }

    /// Cancel dipoles until none is left. The reduced form is unique, so the scan
    /// order only matters for determinism: cells are visited top to bottom and each
    /// is cancelled against the cell that produced all of its letters if that cell
    /// is its mirror image.
    pub fn reduce(&self, p: &Presentation) -> Self {
        if self.moves.len() < 2 {
            return self.clone();
        }
        let mut unfolded = Unfolded::new(p, &self.top, &self.moves);
        let mut producer: HashMap<u32, usize> = HashMap::new();
        let mut alias: HashMap<u32, u32> = HashMap::new();
        let mut alive = vec![true; unfolded.cells.len()];
        let mut cancelled = false;
        for j in 0..unfolded.cells.len() {
            let inputs: Vec<u32> = unfolded.cells[j]
                .inputs
                .iter()
                .map(|&x| *alias.get(&x).unwrap_or(&x))
                .collect();
            unfolded.cells[j].inputs = inputs.clone();
            let partner = producer.get(&inputs[0]).copied().filter(|&i| {
                let (ci, cj) = (&unfolded.cells[i], &unfolded.cells[j]);
                alive[i]
                    && ci.relation == cj.relation
                    && ci.direction != cj.direction
                    && ci.outputs == inputs
            });
            match partner {
                Some(i) => {
                    let replacement = unfolded.cells[i].inputs.clone();
                    for (out, inp) in unfolded.cells[j].outputs.clone().into_iter().zip(replacement) {
                        alias.insert(out, inp);
                    }
                    alive[i] = false;
                    alive[j] = false;
                    cancelled = true;
                }
                None => {
                    for &o in &unfolded.cells[j].outputs {
                        producer.insert(o, j);
                    }
                }
            }
        }
        if !cancelled {
            return self.clone();
        }
        let mut keep = alive.iter();
        unfolded.cells.retain(|_| *keep.next().unwrap());
        Diagram { top: self.top.clone(), moves: unfolded.moves(), bot: self.bot.clone() }
    }

    /// Layered normal form of the derivation up to commutation of independent moves.
    pub fn canonical_key(&self, p: &Presentation) -> CanonicalKey {
        let unfolded = Unfolded::new(p, &self.top, &self.moves);
        let mut producer: HashMap<u32, usize> = HashMap::new();
        let mut depth = vec![0usize; unfolded.cells.len()];
        for (j, c) in unfolded.cells.iter().enumerate() {
            depth[j] = 1 + c.inputs.iter().filter_map(|x| producer.get(x)).map(|&i| depth[i]).max().unwrap_or(0);
            for &o in &c.outputs {
                producer.insert(o, j);
            }
        }
        let max_depth = depth.iter().copied().max().unwrap_or(0);
        let mut by_layer: Vec<Vec<usize>> = vec![Vec::new(); max_depth];
        for (j, &d) in depth.iter().enumerate() {
            by_layer[d - 1].push(j);
        }
        let mut cur: Vec<u32> = (0..unfolded.top_len as u32).collect();
        let mut layers = Vec::with_capacity(max_depth);
        for cells in by_layer {
            let mut placed: Vec<(usize, usize)> =
                cells.iter().map(|&j| (position(&cur, &unfolded.cells[j].inputs), j)).collect();
            placed.sort_unstable();
            layers.push(
                placed
                    .iter()
                    .map(|&(at, j)| Move::new(at, unfolded.cells[j].relation, unfolded.cells[j].direction))
                    .collect(),
            );
            for &(at, j) in placed.iter().rev() {
                let c = &unfolded.cells[j];
                cur.splice(at..at + c.inputs.len(), c.outputs.iter().copied());
            }
        }
        CanonicalKey { top: self.top.clone(), layers }
    }

    /// Rebuild the diagram in layered order from its key.
    pub fn from_key(p: &Presentation, key: &CanonicalKey) -> Self {
        let mut moves = Vec::with_capacity(key.cells());
        for layer in &key.layers {
            let mut shift: isize = 0;
            for m in layer {
                let at = (m.offset as isize + shift) as usize;
                moves.push(Move::new(at, m.relation, m.direction));
                shift += p.output_side(m.relation, m.direction).len() as isize
                    - p.input_side(m.relation, m.direction).len() as isize;
            }
        }
        Diagram::new(p, &key.top, moves).expect("keys describe valid derivations")
    }

    /// The group product `reduce(self ∘ other)`.
    pub fn product(&self, p: &Presentation, other: &Diagram) -> Result<Self> {
        Ok(self.compose(p, other)?.reduce(p))
    }

    /// Whether two diagrams represent the same element after reduction.
    pub fn same_element(&self, p: &Presentation, other: &Diagram) -> bool {
        self.top == other.top
            && self.bot == other.bot
            && self.reduce(p).canonical_key(p) == other.reduce(p).canonical_key(p)
    }

    /// Text form: the top word on the first line, then one move per line as
    /// `offset relation fwd|bwd`.
    pub fn to_text(&self, p: &Presentation) -> String {
        let mut out = format!("{}\n", p.render(&self.top));
        for m in &self.moves {
            out.push_str(&format!("{m}\n"));
        }
        out
    }

    pub fn parse(p: &Presentation, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, top_line) = lines.next().ok_or(Error::Syntax { line: 1, msg: "missing top word".into() })?;
        let top = p.nonempty_word(top_line)?;
        let mut moves = Vec::new();
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let bad = |msg: &str| Error::Syntax { line, msg: msg.to_string() };
            if parts.len() != 3 {
                return Err(bad("expected `offset relation fwd|bwd`"));
            }
            let offset = parts[0].parse().map_err(|_| bad("bad offset"))?;
            let relation: usize = parts[1].parse().map_err(|_| bad("bad relation index"))?;
            if relation >= p.relations().len() {
                return Err(bad("relation index out of range"));
            }
            let dir = Direction::parse(parts[2]).ok_or_else(|| bad("direction must be fwd or bwd"))?;
            moves.push(Move::new(offset, relation, dir));
        }
        Diagram::new(p, &top, moves)
    }

    /// Planar picture: points, letter edges `(from, to, letter)` and cells
    /// `(relation, direction, left point, right point, inputs, outputs)` where inputs
    /// and outputs index into the edge list.
    pub fn planar(&self, p: &Presentation) -> PlanarDiagram {
        let unfolded = Unfolded::new(p, &self.top, &self.moves);
        let mut ends: Vec<(usize, usize)> = vec![(0, 0); unfolded.labels.len()];
        for i in 0..unfolded.top_len {
            ends[i] = (i, i + 1);
        }
        let mut points = unfolded.top_len + 1;
        let mut cells = Vec::new();
        for c in &unfolded.cells {
            let start = ends[c.inputs[0] as usize].0;
            let end = ends[*c.inputs.last().unwrap() as usize].1;
            let mut prev = start;
            for (k, &o) in c.outputs.iter().enumerate() {
                let next = if k + 1 == c.outputs.len() {
                    end
                } else {
                    points += 1;
                    points - 1
                };
                ends[o as usize] = (prev, next);
                prev = next;
            }
            cells.push(PlanarCell {
                relation: c.relation,
                direction: c.direction,
                left: start,
                right: end,
                inputs: c.inputs.iter().map(|&x| x as usize).collect(),
                outputs: c.outputs.iter().map(|&x| x as usize).collect(),
            });
        }
        let edges = ends.iter().zip(&unfolded.labels).map(|(&(a, b), &l)| (a, b, l)).collect();
        PlanarDiagram { points, edges, cells }
    }
}

#[derive(Debug, Clone)]
pub struct PlanarCell {
    pub relation: usize,
    pub direction: Direction,
    pub left: usize,
    pub right: usize,
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PlanarDiagram {
    pub points: usize,
    pub edges: Vec<(usize, usize, Letter)>,
    pub cells: Vec<PlanarCell>,
}
