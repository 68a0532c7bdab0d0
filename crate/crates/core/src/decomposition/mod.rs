//! Cutting a Squier complex along its left hyperplanes.
//!
//! A hyperplane `[a, u → v, b]` is left when `D(P,a)` is trivial but `D(P,au)`
//! is not. Removing the open carriers of all left hyperplanes leaves components
//! of the form `S(P,x) ℓ S(P,y)`, and the left hyperplanes glue them back as the
//! edges of a graph of spaces. Right hyperplanes are the left hyperplanes of the
//! mirrored presentation (see [`Presentation::mirrored`]).

mod pi1;

pub use pi1::BallGroup;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::diagrams::Diagram;
use crate::error::Result;
use crate::groups::{inverse, GroupPresentation, GroupWord};
use crate::oracle::Oracle;
use crate::raag::Syllable;
use crate::rewriting::{concat, Letter, Move, Presentation, Verdict, Word};
use crate::squier::{HyperplaneId, SquierBall};

#[derive(Debug, Clone)]
pub struct Triviality {
    pub verdict: Verdict,
    /// A reduced nontrivial spherical diagram when the group is not trivial.
    pub witness: Option<Diagram>,
    pub reason: &'static str,
}

/// `D(P,w)` together with how its triviality was settled.
struct Factor {
    triviality: Triviality,
    /// Absent for the empty word and for singleton classes.
    group: Option<BallGroup>,
}

fn triviality(oracle: &Oracle, w: &[Letter]) -> Factor {
    let p = oracle.presentation();
    if w.is_empty() || !oracle.has_nontrivial_class(w) {
        let reason = if w.is_empty() { "empty word" } else { "no relation side occurs, so the class is a point" };
        return Factor { triviality: Triviality { verdict: Verdict::Yes, witness: None, reason }, group: None };
    }
    let ball = SquierBall::build(p, w, oracle.caps()).expect("nonempty word");
    let group = BallGroup::new(ball);
    for g in 0..group.generator_count() {
        let d = group.generator_diagram(p, g).reduce(p);
        if d.cells() > 0 {
            return Factor {
                triviality: Triviality { verdict: Verdict::No, witness: Some(d), reason: "loop with nonempty reduced diagram" },
                group: Some(group),
            };
        }
    }
    let triviality = if group.ball.complete {
        Triviality { verdict: Verdict::Yes, witness: None, reason: "every loop of the finite complex reduces" }
    } else {
        Triviality { verdict: Verdict::Unknown, witness: None, reason: "explored loops reduce but the class was truncated" }
    };
    Factor { triviality, group: Some(group) }
}

/// Whether `D(P,w)` is the trivial group.
pub fn is_trivial_group(oracle: &Oracle, w: &[Letter]) -> Triviality {
    triviality(oracle, w).triviality
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftHyperplane {
    pub id: HyperplaneId,
    pub a: Word,
    pub u: Word,
    pub v: Word,
    pub b: Word,
    /// `u = p ℓ s` with `p` the longest prefix keeping `D(P, a p)` trivial.
    pub p: Word,
    pub ell: Letter,
    pub s: Word,
    /// The same split of `v`.
    pub q: Word,
    pub m: Letter,
    pub r: Word,
}

/// `S(P,x) ℓ S(P,y)` with `x`, `y` class representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSpace {
    pub x: Word,
    pub letter: Letter,
    pub y: Word,
}

impl VertexSpace {
    pub fn render(&self, p: &Presentation) -> String {
        let side = |w: &Word| if w.is_empty() { String::new() } else { format!("S({}) ", p.render(w)) };
        let right = if self.y.is_empty() { String::new() } else { format!(" S({})", p.render(&self.y)) };
        format!("{}{}{}", side(&self.x), p.letter_name(self.letter), right)
    }
}

#[derive(Debug, Clone)]
pub struct GogVertex {
    pub space: VertexSpace,
    /// Triviality of `D(P,x) × D(P,y)`.
    pub trivial: Verdict,
}

#[derive(Debug, Clone)]
pub struct GogEdge {
    /// Index into [`GraphOfGroups::hyperplanes`].
    pub hyperplane: usize,
    /// Vertex containing `a u b`.
    pub from: usize,
    /// Vertex containing `a v b`.
    pub to: usize,
    /// Triviality of `D(P,a) × D(P,b)`.
    pub trivial: Verdict,
    pub in_tree: bool,
}

#[derive(Debug, Clone)]
pub struct GraphOfGroups {
    pub base: Word,
    pub hyperplanes: Vec<LeftHyperplane>,
    pub vertices: Vec<GogVertex>,
    pub edges: Vec<GogEdge>,
    /// Fundamental group read off the graph with a maximal tree collapsed.
    pub presentation: GroupPresentation,
    /// All hyperplanes were classified and every descriptor is exact.
    pub exact: bool,
}

impl GraphOfGroups {
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.vertices.len()];
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut count = 0;
        for s in 0..self.vertices.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    pub fn all_trivial(&self) -> bool {
        self.vertices.iter().all(|v| v.trivial == Verdict::Yes) && self.edges.iter().all(|e| e.trivial == Verdict::Yes)
    }

    /// Rank of the free fundamental group of a graph of trivial groups.
    pub fn free_rank(&self) -> Option<usize> {
        if !self.all_trivial() {
            return None;
        }
        Some(self.edges.len() + self.components() - self.vertices.len())
    }

    pub fn to_dot(&self, p: &Presentation) -> String {
        let mut out = String::from("graph gog {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{}\"];\n", v.space.render(p)));
        }
        for e in &self.edges {
            let h = &self.hyperplanes[e.hyperplane];
            out.push_str(&format!("  v{} -- v{} [label=\"{}\"];\n", e.from, e.to, h.id.render(p)));
        }
        out.push_str("}\n");
        out
    }
}

/// Cached triviality and fundamental-group data for the words met while
/// decomposing.
pub struct Decomposer<'a> {
    oracle: &'a Oracle,
    factors: Mutex<HashMap<Word, Arc<Factor>>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(oracle: &'a Oracle) -> Self {
        Decomposer { oracle, factors: Mutex::new(HashMap::new()) }
    }

    fn factor(&self, w: &[Letter]) -> Arc<Factor> {
        let key = self.oracle.canonical(w).word;
        if let Some(f) = self.factors.lock().unwrap().get(&key) {
            return f.clone();
        }
        let f = Arc::new(triviality(self.oracle, &key));
        self.factors.lock().unwrap().insert(key, f.clone());
        f
    }

    pub fn trivial(&self, w: &[Letter]) -> Verdict {
        self.factor(w).triviality.verdict
    }

    /// Split `u = p ℓ s` after `a`; `None` when some triviality is undecided or
    /// `D(P, a u)` is trivial.
    fn split(&self, a: &[Letter], u: &[Letter]) -> Option<(Word, Letter, Word)> {
        for i in 0..u.len() {
            match self.trivial(&concat(&[a, &u[..=i]])) {
                Verdict::Yes => continue,
                Verdict::No => return Some((u[..i].to_vec(), u[i], u[i + 1..].to_vec())),
                Verdict::Unknown => return None,
            }
        }
        None
    }

    /// Left hyperplanes among those met by the ball, and whether the
    /// classification is exact.
    pub fn left_hyperplanes(&self, w: &[Letter]) -> Result<(Vec<LeftHyperplane>, bool)> {
        let p = self.oracle.presentation();
        let ball = SquierBall::build(p, w, self.oracle.caps())?;
        let table = ball.hyperplanes(self.oracle);
        // Hyperplanes missed by a truncated ball cannot be ruled out.
        let mut exact = table.exact() && ball.complete;
        let mut out = Vec::new();
        for id in &table.ids {
            let rel = p.relation(id.relation);
            let (u, v) = (rel.lhs.clone(), rel.rhs.clone());
            match (self.trivial(&id.left), self.trivial(&concat(&[&id.left, &u]))) {
                (Verdict::Yes, Verdict::No) => {}
                (Verdict::No, _) | (_, Verdict::Yes) => continue,
                _ => {
                    exact = false;
                    continue;
                }
            }
            match (self.split(&id.left, &u), self.split(&id.left, &v)) {
                (Some((pp, ell, s)), Some((q, m, r))) => out.push(LeftHyperplane {
                    id: id.clone(),
                    a: id.left.clone(),
                    u,
                    v,
                    b: id.right.clone(),
                    p: pp,
                    ell,
                    s,
                    q,
                    m,
                    r,
                }),
                _ => exact = false,
            }
        }
        Ok((out, exact))
    }

    fn vertex_space(&self, a: &[Letter], p: &[Letter], ell: Letter, s: &[Letter], b: &[Letter]) -> (VertexSpace, bool) {
        let x = self.oracle.canonical(&concat(&[a, p]));
        let y = self.oracle.canonical(&concat(&[s, b]));
        (VertexSpace { x: x.word, letter: ell, y: y.word }, x.exact && y.exact)
    }

    /// The graph of groups of `S(P,w)` and a presentation of its fundamental group.
    pub fn decompose(&self, w: &[Letter]) -> Result<GraphOfGroups> {
        let (hyperplanes, mut exact) = self.left_hyperplanes(w)?;
        let mut index: HashMap<VertexSpace, usize> = HashMap::new();
        let mut vertices: Vec<GogVertex> = Vec::new();
        let mut edges = Vec::new();
        for (k, h) in hyperplanes.iter().enumerate() {
            let mut ends = [0usize; 2];
            for (side, (pre, letter, suf)) in [(&h.p, h.ell, &h.s), (&h.q, h.m, &h.r)].into_iter().enumerate() {
                let (space, ok) = self.vertex_space(&h.a, pre, letter, suf, &h.b);
                exact &= ok;
                ends[side] = *index.entry(space.clone()).or_insert_with(|| {
                    let trivial = self.trivial(&space.x).and(self.trivial(&space.y));
                    vertices.push(GogVertex { space, trivial });
                    vertices.len() - 1
                });
            }
            let trivial = self.trivial(&h.a).and(self.trivial(&h.b));
            edges.push(GogEdge { hyperplane: k, from: ends[0], to: ends[1], trivial, in_tree: false });
        }
        mark_spanning_tree(vertices.len(), &mut edges);
        let presentation = self.presentation(&hyperplanes, &vertices, &edges);
        Ok(GraphOfGroups { base: w.to_vec(), hyperplanes, vertices, edges, presentation, exact })
    }

    /// Generators of every nontrivial factor group of the vertices, a stable
    /// letter per edge outside the tree, and the edge relations
    /// `t · ι₊(g) · t⁻¹ = ι₋(g)` for every generator `g` of the edge group.
    fn presentation(&self, hyperplanes: &[LeftHyperplane], vertices: &[GogVertex], edges: &[GogEdge]) -> GroupPresentation {
        let p = self.oracle.presentation();
        let mut out = GroupPresentation::new(Vec::new());
        // First generator index of each factor of each vertex, if the factor contributes.
        let mut offsets: Vec<[Option<usize>; 2]> = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            let mut slot = [None, None];
            let mut counts = [0usize; 2];
            for (side, word) in [&v.space.x, &v.space.y].into_iter().enumerate() {
                let f = self.factor(word);
                if f.triviality.verdict == Verdict::Yes {
                    continue;
                }
                let Some(group) = &f.group else { continue };
                let start = out.generators.len();
                let tag = if side == 0 { "x" } else { "y" };
                for g in 0..group.generator_count() {
                    out.add_generator(format!("v{}{}{}", i + 1, tag, g + 1));
                }
                let local = group.presentation(p, "");
                for r in &local.relators {
                    out.add_relator(shift(r, start));
                }
                out.truncated |= local.truncated;
                slot[side] = Some(start);
                counts[side] = group.generator_count();
            }
            // The two factors commute.
            if let [Some(sx), Some(sy)] = slot {
                for gx in 0..counts[0] {
                    for gy in 0..counts[1] {
                        let (x, y) = (Syllable::new(sx + gx, false), Syllable::new(sy + gy, false));
                        out.add_relator(vec![x, y, x.inv(), y.inv()]);
                    }
                }
            }
            offsets.push(slot);
        }

        for (k, e) in edges.iter().enumerate() {
            let h = &hyperplanes[e.hyperplane];
            let stable = (!e.in_tree).then(|| out.add_generator(format!("t{}", k + 1)));
            for (factor_word, on_left) in [(&h.a, true), (&h.b, false)] {
                let f = self.factor(factor_word);
                if f.triviality.verdict == Verdict::Yes {
                    continue;
                }
                let Some(group) = &f.group else { continue };
                for g in 0..group.generator_count() {
                    let lp = group.generator_loop(g);
                    let minus = self.image(&offsets, &vertices[e.from].space, e.from, h, on_left, &lp, false);
                    let plus = self.image(&offsets, &vertices[e.to].space, e.to, h, on_left, &lp, true);
                    let (Some(minus), Some(plus)) = (minus, plus) else {
                        out.truncated = true;
                        continue;
                    };
                    let mut r = Vec::new();
                    if let Some(t) = stable {
                        r.push(Syllable::new(t, false));
                    }
                    r.extend(plus);
                    if let Some(t) = stable {
                        r.push(Syllable::new(t, true));
                    }
                    r.extend(inverse(&minus));
                    out.add_relator(r);
                }
            }
        }
        out
    }

    /// Image in a vertex group of a loop of `S(P,a)` (when `on_left`) or of
    /// `S(P,b)`, carried along `a u b` or `a v b`.
    #[allow(clippy::too_many_arguments)]
    fn image(
        &self,
        offsets: &[[Option<usize>; 2]],
        space: &VertexSpace,
        vertex: usize,
        h: &LeftHyperplane,
        on_left: bool,
        lp: &[Move],
        plus: bool,
    ) -> Option<GroupWord> {
        let (pre, suf) = if plus { (&h.q, &h.r) } else { (&h.p, &h.s) };
        let (side, start, moves): (usize, Word, Vec<Move>) = if on_left {
            (0, concat(&[&h.a, pre]), lp.to_vec())
        } else {
            let shift = suf.len();
            (1, concat(&[suf, &h.b]), lp.iter().map(|m| Move::new(m.offset + shift, m.relation, m.direction)).collect())
        };
        let word = if side == 0 { &space.x } else { &space.y };
        let Some(base) = offsets[vertex][side] else {
            // The factor is trivial, so every loop in it is too.
            return Some(Vec::new());
        };
        let f = self.factor(word);
        let group = f.group.as_ref()?;
        let read = group.read(&start, &moves)?;
        Some(shift(&read, base))
    }
}

fn shift(w: &[Syllable], by: usize) -> GroupWord {
    w.iter().map(|s| Syllable::new(s.gen + by, s.inverse)).collect()
}

fn mark_spanning_tree(n: usize, edges: &mut [GogEdge]) {
    let mut adj = vec![Vec::new(); n];
    for (k, e) in edges.iter().enumerate() {
        adj[e.from].push((k, e.to));
        adj[e.to].push((k, e.from));
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(k, u) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    edges[k].in_tree = true;
                    queue.push_back(u);
                }
            }
        }
    }
}

/// Compare each vertex space with the component of the complex, minus the
/// left-hyperplane edges, that contains its attaching word. `None` when the class
/// of `w` is infinite or was truncated.
pub fn vertex_spaces_match(oracle: &Oracle, gog: &GraphOfGroups) -> Option<bool> {
    let p = oracle.presentation();
    let ball = SquierBall::build(p, &gog.base, oracle.caps()).ok()?;
    if !ball.complete {
        return None;
    }
    let table = ball.hyperplanes(oracle);
    let left: BTreeSet<usize> =
        gog.hyperplanes.iter().filter_map(|h| table.position(&h.id)).collect();
    let mut adj = vec![Vec::new(); ball.vertices.len()];
    for (k, e) in ball.edges.iter().enumerate() {
        if !left.contains(&table.of_edge[k]) {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
    }
    let component = |start: usize| {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen
    };
    for e in &gog.edges {
        let h = &gog.hyperplanes[e.hyperplane];
        for (vertex, side) in [(e.from, &h.u), (e.to, &h.v)] {
            let attach = ball.vertex_index(&concat(&[&h.a, side, &h.b]))?;
            let space = &gog.vertices[vertex].space;
            let (cx, cy) = (oracle.class(&space.x), oracle.class(&space.y));
            let xs: Vec<Word> = if space.x.is_empty() { vec![Vec::new()] } else { cx.members.clone() };
            let ys: Vec<Word> = if space.y.is_empty() { vec![Vec::new()] } else { cy.members.clone() };
            let mut expected = BTreeSet::new();
            for x in &xs {
                for y in &ys {
                    expected.insert(ball.vertex_index(&concat(&[x, &[space.letter], y]))?);
                }
            }
            if component(attach) != expected {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// For every left hyperplane and every move at `a u b`, the move's hyperplane is
/// left exactly when its relation side is not inside `a p` or inside `s b`.
pub fn technical_lemma_holds(oracle: &Oracle, gog: &GraphOfGroups) -> bool {
    let p = oracle.presentation();
    let left: BTreeSet<HyperplaneId> = gog.hyperplanes.iter().map(|h| h.id.unoriented()).collect();
    let dec = Decomposer::new(oracle);
    for h in &gog.hyperplanes {
        let word = concat(&[&h.a, &h.u, &h.b]);
        let (ap, apl) = (h.a.len() + h.p.len(), h.a.len() + h.p.len() + 1);
        for mv in p.moves(&word) {
            let end = mv.offset + p.input_side(mv.relation, mv.direction).len();
            let inside = end <= ap || mv.offset >= apl;
            let id = HyperplaneId::of_move(oracle, &word, mv).unoriented();
            let is_left = left.contains(&id) || {
                let u = p.input_side(mv.relation, mv.direction);
                dec.trivial(&id.left) == Verdict::Yes && dec.trivial(&concat(&[&id.left, u])) == Verdict::No
            };
            if is_left == inside {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests;
