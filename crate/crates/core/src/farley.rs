//! Balls of the Farley complex `X(P,w)`: reduced diagrams with top `w`, joined
//! when they differ by one atom on the bottom. Hyperplanes of the ball are ranked
//! through the covering map `Δ ↦ bot(Δ)`, and each rank family is collapsed into a
//! tree quotient whose distances add up to the cell-count metric.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_rational::Rational64;

use crate::diagrams::{CanonicalKey, Diagram};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::rewriting::{Letter, Move, Presentation, Word};
use crate::squier::{HyperplaneId, Squier};

/// `to` is `from` extended by the atom `mv` applied to `bot(from)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FarleyEdge {
    pub from: usize,
    pub mv: Move,
    pub to: usize,
}

#[derive(Debug, Clone)]
pub struct FarleyBall {
    pub base: Word,
    pub radius: usize,
    /// Reduced diagrams in order of discovery; index 0 is `ε(w)`.
    pub vertices: Vec<Diagram>,
    pub edges: Vec<FarleyEdge>,
    keys: HashMap<CanonicalKey, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl FarleyBall {
    /// Every reduced diagram with top `w` and at most `radius` cells.
    pub fn build(p: &Presentation, w: &[Letter], radius: usize) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        let base = Diagram::identity(w);
        let mut keys = HashMap::from([(base.canonical_key(p), 0)]);
        let mut vertices = vec![base];
        let mut edges = Vec::new();
        let mut i = 0;
        // Vertices are discovered in order of cell count, since a reduced product
        // with an atom has one cell more or one cell less.
        while i < vertices.len() {
            if vertices[i].cells() < radius {
                let d = vertices[i].clone();
                for mv in p.moves(d.bot()) {
                    let mut moves = d.moves().to_vec();
                    moves.push(mv);
                    let ext = Diagram::new(p, w, moves)?.reduce(p);
                    if ext.cells() <= d.cells() {
                        continue;
                    }
                    let key = ext.canonical_key(p);
                    let j = *keys.entry(key).or_insert_with(|| {
                        vertices.push(ext);
                        vertices.len() - 1
                    });
                    edges.push(FarleyEdge { from: i, mv, to: j });
                }
            }
            i += 1;
        }
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            adjacency[e.from].push(k);
            adjacency[e.to].push(k);
        }
        Ok(FarleyBall { base: w.to_vec(), radius, vertices, edges, keys, adjacency })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, p: &Presentation, d: &Diagram) -> Option<usize> {
        self.keys.get(&d.reduce(p).canonical_key(p)).copied()
    }

    fn other_end(&self, e: usize, v: usize) -> usize {
        let e = &self.edges[e];
        if e.from == v {
            e.to
        } else {
            e.from
        }
    }

    /// Shortest path in the 1-skeleton of the ball, as edge indices.
    pub fn geodesic(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut via: Vec<Option<usize>> = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = Vec::new();
                let mut cur = to;
                while let Some(e) = via[cur] {
                    path.push(e);
                    cur = self.other_end(e, cur);
                }
                path.reverse();
                return Some(path);
            }
            for &e in &self.adjacency[v] {
                let u = self.other_end(e, v);
                if !seen[u] {
                    seen[u] = true;
                    via[u] = Some(e);
                    queue.push_back(u);
                }
            }
        }
        None
    }

    /// Pairs whose combinatorial intervals stay inside the ball: both ends and
    /// their distance bounded by a third of the radius.
    pub fn guarded_pairs(&self, p: &Presentation) -> Vec<(usize, usize, usize)> {
        let r3 = self.radius / 3;
        let near: Vec<usize> = (0..self.len()).filter(|&i| self.vertices[i].cells() <= r3).collect();
        let mut out = Vec::new();
        for (k, &x) in near.iter().enumerate() {
            for &y in &near[k..] {
                let d = distance(p, &self.vertices[x], &self.vertices[y]).expect("same top");
                if d <= r3 {
                    out.push((x, y, d));
                }
            }
        }
        out
    }

    fn is_guarded(&self, p: &Presentation, x: usize, y: usize) -> bool {
        let r3 = self.radius / 3;
        self.vertices[x].cells() <= r3
            && self.vertices[y].cells() <= r3
            && distance(p, &self.vertices[x], &self.vertices[y]).is_ok_and(|d| d <= r3)
    }

    /// Whether left multiplication by `g` moves every vertex of the ball.
    pub fn moved_by(&self, p: &Presentation, g: &Diagram) -> Result<bool> {
        for d in &self.vertices {
            let gd = g.product(p, d)?;
            if gd.canonical_key(p) == d.canonical_key(p) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `#(A⁻¹·B)`.
pub fn distance(p: &Presentation, a: &Diagram, b: &Diagram) -> Result<usize> {
    if a.top() != b.top() {
        return Err(Error::ComposeMismatch { bot: p.render(a.top()), top: p.render(b.top()) });
    }
    Ok(a.inverse().product(p, b)?.cells())
}

/// Ranks of the hyperplanes of the Squier ball, pulled back to Farley edges.
#[derive(Debug, Clone)]
pub struct RankPartition {
    pub ids: Vec<HyperplaneId>,
    pub ranks: Vec<Option<usize>>,
    pub exact: bool,
}

impl RankPartition {
    pub fn new(squier: &Squier) -> Self {
        let graph = squier.transversality_graph();
        let mut exact = graph.exact;
        let ranks = (0..graph.ids.len())
            .map(|i| {
                let r = squier.rank(&graph, i);
                exact &= r.exact;
                r.value
            })
            .collect();
        RankPartition { ids: graph.ids, ranks, exact }
    }

    fn rank_of(&self, id: &HyperplaneId) -> Option<usize> {
        let u = id.unoriented();
        self.ids.iter().position(|h| *h == u).and_then(|i| self.ranks[i])
    }

    /// The rank of every edge of a Farley ball.
    pub fn edge_ranks(&self, oracle: &Oracle, ball: &FarleyBall) -> Result<Vec<usize>> {
        let p = oracle.presentation();
        ball.edges
            .iter()
            .map(|e| {
                let id = HyperplaneId::of_move(oracle, ball.vertices[e.from].bot(), e.mv);
                self.rank_of(&id)
                    .ok_or_else(|| Error::Invalid(format!("no rank known for hyperplane {}", id.render(p))))
            })
            .collect()
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.ranks.iter().flatten().max().copied()
    }
}

/// The ball with every edge not of rank `k` contracted.
#[derive(Debug, Clone)]
pub struct TreeQuotient {
    pub rank: usize,
    /// Node of every ball vertex.
    pub node_of: Vec<usize>,
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
    /// Rank-`k` edges whose ends fall in one node, or that close a cycle.
    pub cycle_edges: Vec<(usize, usize)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

impl TreeQuotient {
    pub fn build(ball: &FarleyBall, edge_ranks: &[usize], rank: usize) -> Self {
        let mut uf = UnionFind::new(ball.len());
        for (e, &r) in ball.edges.iter().zip(edge_ranks) {
            if r != rank {
                uf.union(e.from, e.to);
            }
        }
        let mut numbering: HashMap<usize, usize> = HashMap::new();
        let node_of: Vec<usize> = (0..ball.len())
            .map(|v| {
                let root = uf.find(v);
                let next = numbering.len();
                *numbering.entry(root).or_insert(next)
            })
            .collect();
        let node_count = numbering.len();
        let mut links: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut cycle_edges = Vec::new();
        for (e, &r) in ball.edges.iter().zip(edge_ranks) {
            if r != rank {
                continue;
            }
            let (a, b) = (node_of[e.from], node_of[e.to]);
            if a == b {
                cycle_edges.push((a, b));
            } else {
                links.insert((a.min(b), a.max(b)));
            }
        }
        let mut forest = UnionFind::new(node_count);
        let mut edges = Vec::new();
        for (a, b) in links {
            if !forest.union(a, b) {
                cycle_edges.push((a, b));
            }
            edges.push((a, b));
        }
        TreeQuotient { rank, node_of, node_count, edges, cycle_edges }
    }

    pub fn is_acyclic(&self) -> bool {
        self.cycle_edges.is_empty()
    }

    /// Distance between the nodes of two ball vertices, if connected.
    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        let (s, t) = (self.node_of[x], self.node_of[y]);
        let mut adj = vec![Vec::new(); self.node_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut dist = vec![usize::MAX; self.node_count];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                return Some(dist[v]);
            }
            for &u in &adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        None
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph rank{} {{\n", self.rank);
        for v in 0..self.node_count {
            out.push_str(&format!("  n{v};\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  n{a} -- n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// The ball together with ranks and one tree quotient per rank.
pub struct RankedBall {
    pub ball: FarleyBall,
    pub partition: RankPartition,
    pub edge_ranks: Vec<usize>,
    pub quotients: Vec<TreeQuotient>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub x: usize,
    pub y: usize,
    pub distance: usize,
    pub graph_distance: Option<usize>,
    /// Tree distance in each quotient, indexed by rank.
    pub tree_distances: Vec<Option<usize>>,
    /// Edges of a geodesic per rank.
    pub separating: BTreeMap<usize, usize>,
}

impl PairCheck {
    pub fn holds(&self) -> bool {
        let tree_sum: Option<usize> = self.tree_distances.iter().copied().sum();
        let sep_sum: usize = self.separating.values().sum();
        self.graph_distance == Some(self.distance)
            && tree_sum == Some(self.distance)
            && sep_sum == self.distance
            && self.separating.iter().all(|(&k, &c)| self.tree_distances.get(k).copied().flatten() == Some(c))
    }
}

#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub pairs_checked: usize,
    pub violations: Vec<PairCheck>,
    pub acyclic: bool,
    pub ranks_seen: BTreeSet<usize>,
    pub exact: bool,
}

impl RankedBall {
    pub fn build(oracle: &Oracle, w: &[Letter], radius: usize) -> Result<Self> {
        let p = oracle.presentation();
        let ball = FarleyBall::build(p, w, radius)?;
        let squier = Squier::new(oracle, w)?;
        let partition = RankPartition::new(&squier);
        let edge_ranks = partition.edge_ranks(oracle, &ball)?;
        let top = edge_ranks.iter().max().map_or(0, |&r| r + 1);
        let quotients = (0..top).map(|k| TreeQuotient::build(&ball, &edge_ranks, k)).collect();
        Ok(RankedBall { ball, partition, edge_ranks, quotients })
    }

    /// Per-rank counts of the edges on a geodesic, which cross each separating
    /// hyperplane once.
    pub fn separating_counts(&self, p: &Presentation, x: usize, y: usize) -> Result<BTreeMap<usize, usize>> {
        if !self.ball.is_guarded(p, x, y) {
            return Err(Error::Invalid(format!("pair ({x}, {y}) is outside the guarded region")));
        }
        let path = self.ball.geodesic(x, y).ok_or_else(|| Error::Invalid("vertices are not connected".into()))?;
        let mut counts = BTreeMap::new();
        for e in path {
            *counts.entry(self.edge_ranks[e]).or_insert(0) += 1;
        }
        Ok(counts)
    }

    pub fn check_pair(&self, p: &Presentation, x: usize, y: usize, distance: usize) -> Result<PairCheck> {
        Ok(PairCheck {
            x,
            y,
            distance,
            graph_distance: self.ball.geodesic(x, y).map(|g| g.len()),
            tree_distances: self.quotients.iter().map(|q| q.distance(x, y)).collect(),
            separating: self.separating_counts(p, x, y)?,
        })
    }

    /// Compare the sum of tree distances with `#(A⁻¹B)` on every guarded pair.
    pub fn check_isometric_embedding(&self, p: &Presentation) -> Result<EmbeddingReport> {
        let pairs = self.ball.guarded_pairs(p);
        let mut violations = Vec::new();
        for &(x, y, d) in &pairs {
            let check = self.check_pair(p, x, y, d)?;
            if !check.holds() {
                violations.push(check);
            }
        }
        Ok(EmbeddingReport {
            pairs_checked: pairs.len(),
            violations,
            acyclic: self.quotients.iter().all(TreeQuotient::is_acyclic),
            ranks_seen: self.edge_ranks.iter().copied().collect(),
            exact: self.partition.exact,
        })
    }
}

#[derive(Debug, Clone)]
pub struct PropertyBReport {
    /// `(|Δ|, #(Δ), how many elements)`.
    pub table: Vec<(usize, usize, usize)>,
    pub min_ratio: Option<Rational64>,
    pub max_ratio: Option<Rational64>,
    pub elements: usize,
}

/// Word length over `generators` against cell count, for every element of the
/// group ball of radius `length`.
pub fn property_b_scan(p: &Presentation, w: &[Letter], generators: &[Diagram], length: usize) -> Result<PropertyBReport> {
    let mut steps = Vec::with_capacity(2 * generators.len());
    for g in generators {
        if g.top().as_slice() != w || !g.is_spherical() {
            return Err(Error::NotSpherical(p.render(w)));
        }
        let g = g.reduce(p);
        steps.push(g.inverse());
        steps.push(g);
    }
    let start = Diagram::identity(w);
    let mut seen: HashMap<CanonicalKey, ()> = HashMap::from([(start.canonical_key(p), ())]);
    let mut frontier = vec![start];
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    counts.insert((0, 0), 1);
    for depth in 1..=length {
        let mut next = Vec::new();
        for d in &frontier {
            for s in &steps {
                let e = d.product(p, s)?;
                if seen.insert(e.canonical_key(p), ()).is_none() {
                    *counts.entry((depth, e.cells())).or_insert(0) += 1;
                    next.push(e);
                }
            }
        }
        frontier = next;
    }
    let ratios = counts.keys().filter(|(len, _)| *len > 0).map(|&(len, cells)| Rational64::new(cells as i64, len as i64));
    let min_ratio = ratios.clone().min();
    let max_ratio = ratios.max();
    Ok(PropertyBReport {
        table: counts.iter().map(|(&(l, c), &n)| (l, c, n)).collect(),
        min_ratio,
        max_ratio,
        elements: seen.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rewriting::{Direction, SearchCaps};

    #[test]
    fn small_balls() {
        let p = catalog::commuting();
        let w = p.word("a b c").unwrap();
        assert_eq!(FarleyBall::build(&p, &w, 0).unwrap().len(), 1);
        let b1 = FarleyBall::build(&p, &w, 1).unwrap();
        assert_eq!(b1.len(), 3);
        assert_eq!(b1.edges.len(), 2);
    }

    #[test]
    fn hexagon_cover_is_a_line() {
        let p = catalog::commuting();
        let oracle = Oracle::new(&p, SearchCaps::default());
        let w = p.word("a b c").unwrap();
        let rb = RankedBall::build(&oracle, &w, 6).unwrap();
        // The universal cover of a hexagon is a line: two vertices per radius.
        assert_eq!(rb.ball.len(), 13);
        assert_eq!(rb.quotients.len(), 1);
        assert!(rb.quotients[0].is_acyclic());
        assert_eq!(rb.quotients[0].node_count, 13);
        let report = rb.check_isometric_embedding(&p).unwrap();
        assert!(report.violations.is_empty() && report.pairs_checked > 0);
    }

    #[test]
    fn distances_match_the_graph() {
        let p = catalog::z_bullet_z();
        let ball = FarleyBall::build(&p, &p.word("a1 b1").unwrap(), 4).unwrap();
        for (x, y, d) in ball.guarded_pairs(&p) {
            assert_eq!(ball.geodesic(x, y).unwrap().len(), d);
        }
        for (i, v) in ball.vertices.iter().enumerate() {
            assert_eq!(ball.geodesic(0, i).unwrap().len(), v.cells());
        }
    }

    #[test]
    fn cyclic_powers() {
        let p = catalog::triangle();
        let w = p.word("a").unwrap();
        let fwd = Direction::Forward;
        let loop3 = Diagram::new(&p, &w, vec![Move::new(0, 0, fwd), Move::new(0, 1, fwd), Move::new(0, 2, fwd)]).unwrap();
        let r = property_b_scan(&p, &w, &[loop3], 5).unwrap();
        assert_eq!(r.elements, 11);
        assert_eq!(r.min_ratio, Some(Rational64::from_integer(3)));
        assert_eq!(r.max_ratio, Some(Rational64::from_integer(3)));
    }

    #[test]
    fn action_is_free() {
        let p = catalog::z_bullet_z();
        let w = p.word("a1 b1").unwrap();
        let fwd = Direction::Forward;
        let g = Diagram::new(&p, &w, vec![Move::new(0, 6, fwd), Move::new(1, 7, Direction::Backward)]).unwrap();
        let ball = FarleyBall::build(&p, &w, 3).unwrap();
        assert!(ball.moved_by(&p, &g).unwrap());
        assert!(!ball.moved_by(&p, &Diagram::identity(&w)).unwrap());
    }
}
