//! Dimension bounds, pathological hyperplanes and the specialness verdict.
//!
//! A Squier complex is clean exactly when no words `a, b, p` satisfy `w = ab`,
//! `a = ap`, `b = pb` with `[p] ≠ {p}`, and special when moreover no overlapping
//! relation sides `uv`, `vw'` admit `a, b, ξ` with `w = a u v w' b`,
//! `au = au·vξ` and `w'b = ξv·w'b`. Positive findings are explicit words checked
//! by the oracle; negative findings come from a finite class (which rules out
//! both configurations, since they produce arbitrarily long equal words) or from
//! refuting the corresponding word equations.

use super::{apply_disjoint, HyperplaneId, Squier, SquierBall};
use crate::certify::{Piece, WordSystem};
use crate::error::Result;
use crate::oracle::Oracle;
use crate::rewriting::{concat, Direction, Letter, Move, Presentation, Verdict, Word};

/// How many witnesses of each kind a report keeps.
const WITNESS_LIMIT: usize = 8;

/// Words `a, b, p` with `w = ab`, `a = ap`, `b = pb` and `[p] ≠ {p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UncleanWitness {
    pub a: Word,
    pub b: Word,
    pub p: Word,
}

/// `J = [a, p → q, c]` with `a = a p m` and `c = m p c`; `m` may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SelfIntersection {
    pub a: Word,
    pub relation: usize,
    pub direction: Direction,
    pub m: Word,
    pub c: Word,
}

/// `J = [a, (kh)ⁿk → p, b]` with `a = a k h` and `b = h k b`; `h` may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SelfOsculation {
    pub n: usize,
    pub a: Word,
    pub k: Word,
    pub h: Word,
    pub relation: usize,
    pub direction: Direction,
    pub b: Word,
}

/// Words with `w = a u v w' b`, `au = au·vξ`, `w'b = ξv·w'b` where `uv` and `vw'`
/// are relation sides (`p` and `q`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InterOsculation {
    pub a: Word,
    pub u: Word,
    pub v: Word,
    pub w: Word,
    pub b: Word,
    pub p: Word,
    pub q: Word,
    pub xi: Word,
}

/// A geometric configuration: a vertex and two moves leaving it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pathology {
    pub vertex: Word,
    pub first: Move,
    pub second: Move,
}

fn all_yes(checks: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut out = Verdict::Yes;
    for v in checks {
        match v {
            Verdict::No => return Verdict::No,
            Verdict::Unknown => out = Verdict::Unknown,
            Verdict::Yes => {}
        }
    }
    out
}

impl UncleanWitness {
    pub fn verify(&self, oracle: &Oracle, w: &[Letter]) -> Verdict {
        if self.a.is_empty() || self.b.is_empty() || !oracle.has_nontrivial_class(&self.p) {
            return Verdict::No;
        }
        all_yes([
            oracle.equal_verdict(w, &concat(&[&self.a, &self.b])),
            oracle.equal_verdict(&self.a, &concat(&[&self.a, &self.p])),
            oracle.equal_verdict(&self.b, &concat(&[&self.p, &self.b])),
        ])
    }

    /// The self-intersecting hyperplane built from the first relation side inside
    /// `p = x r y`: it crosses itself in the square `(ax, r → s, yx, r → s, yb)`.
    pub fn self_intersection(&self, pres: &Presentation) -> SelfIntersection {
        let mv = pres.moves(&self.p)[0];
        let (x, y) = SquierBall::contexts(pres, &self.p, mv);
        SelfIntersection {
            a: concat(&[&self.a, x]),
            relation: mv.relation,
            direction: mv.direction,
            m: concat(&[y, x]),
            c: concat(&[y, &self.b]),
        }
    }
}

impl SelfIntersection {
    /// The square's base vertex `a p m p c` with the two moves.
    pub fn configuration(&self, pres: &Presentation) -> Pathology {
        let side = pres.input_side(self.relation, self.direction);
        let vertex = concat(&[&self.a, side, &self.m, side, &self.c]);
        let first = Move::new(self.a.len(), self.relation, self.direction);
        let second = Move::new(self.a.len() + side.len() + self.m.len(), self.relation, self.direction);
        Pathology { vertex, first, second }
    }

    pub fn verify(&self, oracle: &Oracle) -> Verdict {
        let side = oracle.presentation().input_side(self.relation, self.direction);
        all_yes([
            oracle.equal_verdict(&self.a, &concat(&[&self.a, side, &self.m])),
            oracle.equal_verdict(&self.c, &concat(&[&self.m, side, &self.c])),
        ])
    }

    /// `w = (ap)c`, `ap = ap·mp`, `c = mp·c`.
    pub fn unclean_witness(&self, pres: &Presentation) -> UncleanWitness {
        let side = pres.input_side(self.relation, self.direction);
        UncleanWitness { a: concat(&[&self.a, side]), b: self.c.clone(), p: concat(&[&self.m, side]) }
    }
}

impl SelfOsculation {
    fn side(&self) -> Word {
        let kh = concat(&[&self.k, &self.h]);
        let mut s = Vec::new();
        for _ in 0..self.n {
            s.extend_from_slice(&kh);
        }
        s.extend_from_slice(&self.k);
        s
    }

    /// The vertex `a (kh)ⁿ⁺¹ k b` with the two overlapping moves.
    pub fn configuration(&self) -> Pathology {
        let kh = concat(&[&self.k, &self.h]);
        let vertex = concat(&[&self.a, &kh, &self.side(), &self.b]);
        Pathology {
            vertex,
            first: Move::new(self.a.len(), self.relation, self.direction),
            second: Move::new(self.a.len() + kh.len(), self.relation, self.direction),
        }
    }

    pub fn verify(&self, oracle: &Oracle) -> Verdict {
        if self.n == 0 || self.k.is_empty() || oracle.presentation().input_side(self.relation, self.direction) != self.side() {
            return Verdict::No;
        }
        all_yes([
            oracle.equal_verdict(&self.a, &concat(&[&self.a, &self.k, &self.h])),
            oracle.equal_verdict(&self.b, &concat(&[&self.h, &self.k, &self.b])),
        ])
    }

    /// `w = a·kb`, `a = a(kh)ⁿ⁺¹`, `kb = (kh)ⁿ⁺¹·kb`.
    pub fn unclean_witness(&self) -> UncleanWitness {
        let kh = concat(&[&self.k, &self.h]);
        let mut p = Vec::new();
        for _ in 0..=self.n {
            p.extend_from_slice(&kh);
        }
        UncleanWitness { a: self.a.clone(), b: concat(&[&self.k, &self.b]), p }
    }
}

impl InterOsculation {
    pub fn verify(&self, oracle: &Oracle, w: &[Letter]) -> Verdict {
        let (a, u, v, ww, b, xi) = (&self.a, &self.u, &self.v, &self.w, &self.b, &self.xi);
        if [a, u, v, ww, b, xi].iter().any(|x| x.is_empty()) {
            return Verdict::No;
        }
        all_yes([
            oracle.equal_verdict(w, &concat(&[a, u, v, ww, b])),
            oracle.equal_verdict(&concat(&[a, u]), &concat(&[a, u, v, xi])),
            oracle.equal_verdict(&concat(&[ww, b]), &concat(&[xi, v, ww, b])),
        ])
    }
}

impl<'a> Squier<'a> {
    /// Squares whose two edges are dual to the same hyperplane.
    pub fn scan_self_intersections(&self) -> Vec<SelfIntersection> {
        let p = self.oracle.presentation();
        let mut out = Vec::new();
        for sq in self.ball.squares() {
            let v = &self.ball.vertices[sq.vertex];
            let (m1, m2) = (sq.moves[0], sq.moves[1]);
            if m1.relation != m2.relation {
                continue;
            }
            let (h1, h2) = (HyperplaneId::of_move(self.oracle, v, m1), HyperplaneId::of_move(self.oracle, v, m2));
            if h1.unoriented() != h2.unoriented() {
                continue;
            }
            let len = p.input_side(m1.relation, m1.direction).len();
            out.push(SelfIntersection {
                a: v[..m1.offset].to_vec(),
                relation: m1.relation,
                direction: m1.direction,
                m: v[m1.offset + len..m2.offset].to_vec(),
                c: v[m2.offset + len..].to_vec(),
            });
        }
        out
    }

    /// Pairs of edges leaving one vertex, dual to the same oriented hyperplane,
    /// whose rewritten intervals overlap (so they span no square).
    pub fn scan_self_osculations(&self) -> Vec<SelfOsculation> {
        let p = self.oracle.presentation();
        let mut out = Vec::new();
        for v in &self.ball.vertices {
            let moves = p.moves(v);
            for (i, &m1) in moves.iter().enumerate() {
                let side = p.input_side(m1.relation, m1.direction);
                for &m2 in &moves[i + 1..] {
                    if m2.relation != m1.relation
                        || m2.direction != m1.direction
                        || m2.offset <= m1.offset
                        || m2.offset >= m1.offset + side.len()
                    {
                        continue;
                    }
                    if HyperplaneId::of_move(self.oracle, v, m1) != HyperplaneId::of_move(self.oracle, v, m2) {
                        continue;
                    }
                    let d = m2.offset - m1.offset;
                    let n = (side.len() - 1) / d;
                    let klen = side.len() - n * d;
                    out.push(SelfOsculation {
                        n,
                        a: v[..m1.offset].to_vec(),
                        k: side[..klen].to_vec(),
                        h: side[klen..d].to_vec(),
                        relation: m1.relation,
                        direction: m1.direction,
                        b: v[m2.offset + side.len()..].to_vec(),
                    });
                }
            }
        }
        out
    }

    /// Whether `config` is a square of the ball whose edges share a hyperplane.
    pub fn is_self_intersection_square(&self, config: &Pathology) -> bool {
        let p = self.oracle.presentation();
        let (v, m1, m2) = (&config.vertex, config.first, config.second);
        if !self.ball.contains(v) || p.apply(v, m1).is_none() || p.apply(v, m2).is_none() {
            return false;
        }
        let end1 = m1.offset + p.input_side(m1.relation, m1.direction).len();
        if end1 > m2.offset {
            return false;
        }
        let corner = apply_disjoint(p, v, &[m1, m2]);
        self.ball.contains(&corner)
            && HyperplaneId::of_move(self.oracle, v, m1).unoriented()
                == HyperplaneId::of_move(self.oracle, v, m2).unoriented()
    }

    /// Whether `config` is a pair of overlapping moves at a vertex of the ball
    /// dual to the same oriented hyperplane.
    pub fn is_self_osculation(&self, config: &Pathology) -> bool {
        let p = self.oracle.presentation();
        let (v, m1, m2) = (&config.vertex, config.first, config.second);
        if !self.ball.contains(v) || p.apply(v, m1).is_none() || p.apply(v, m2).is_none() {
            return false;
        }
        let end1 = m1.offset + p.input_side(m1.relation, m1.direction).len();
        m1.offset < m2.offset
            && m2.offset < end1
            && HyperplaneId::of_move(self.oracle, v, m1) == HyperplaneId::of_move(self.oracle, v, m2)
    }
}

#[derive(Debug, Clone)]
pub struct SpecialnessReport {
    pub clean: Verdict,
    pub special: Verdict,
    pub unclean: Vec<UncleanWitness>,
    pub self_intersections: Vec<SelfIntersection>,
    pub self_osculations: Vec<SelfOsculation>,
    pub inter_osculations: Vec<InterOsculation>,
    /// Every hyperplane of a Squier complex is 2-sided.
    pub two_sided: Verdict,
    /// The class of the base word was enumerated completely.
    pub finite_class: bool,
    /// How each verdict was reached.
    pub notes: Vec<String>,
}

/// Systems whose solutions are the clean-ness obstructions through side `s`:
/// `w = ab`, `a = a·xsy`, `b = xsy·b`.
fn unclean_system(w: &[Letter], s: &[Letter]) -> WordSystem {
    let mut sys = WordSystem::new();
    let (a, b) = (sys.nonempty_var(), sys.nonempty_var());
    let (x, y) = (sys.any_var(), sys.any_var());
    let side = Piece::Word(s.to_vec());
    sys.equation(vec![Piece::Word(w.to_vec())], vec![a.clone(), b.clone()]);
    sys.equation(vec![a.clone()], vec![a, x.clone(), side.clone(), y.clone()]);
    sys.equation(vec![b.clone()], vec![x, side, y, b]);
    sys
}

/// Overlaps `uv`, `vw'` of relation sides with `u`, `v`, `w'` nonempty.
fn overlaps(p: &Presentation) -> Vec<(Word, Word, Word)> {
    let sides = p.sides();
    let mut out = Vec::new();
    for s1 in &sides {
        for s2 in &sides {
            for k in 1..s1.len().min(s2.len()) {
                if s1[s1.len() - k..] == s2[..k] {
                    let (u, v, w) = (s1[..s1.len() - k].to_vec(), s2[..k].to_vec(), s2[k..].to_vec());
                    if !out.contains(&(u.clone(), v.clone(), w.clone())) {
                        out.push((u, v, w));
                    }
                }
            }
        }
    }
    out
}

fn inter_osculation_system(w: &[Letter], u: &[Letter], v: &[Letter], ww: &[Letter]) -> WordSystem {
    let mut sys = WordSystem::new();
    let (a, b, xi) = (sys.nonempty_var(), sys.nonempty_var(), sys.nonempty_var());
    let (u, v, ww) = (Piece::Word(u.to_vec()), Piece::Word(v.to_vec()), Piece::Word(ww.to_vec()));
    sys.equation(vec![Piece::Word(w.to_vec())], vec![a.clone(), u.clone(), v.clone(), ww.clone(), b.clone()]);
    sys.equation(vec![a.clone(), u.clone()], vec![a, u, v.clone(), xi.clone()]);
    sys.equation(vec![ww.clone(), b.clone()], vec![xi, v, ww, b]);
    sys
}

/// Look for clean-ness obstructions among splits of explored class members.
fn search_unclean(s: &Squier, w: &[Letter], limit: usize) -> (Vec<UncleanWitness>, bool) {
    let oracle = s.oracle;
    let mut found = Vec::new();
    let mut exhaustive = s.ball.complete;
    for m in &s.ball.vertices {
        for k in 1..m.len() {
            let (a, b) = (&m[..k], &m[k..]);
            let class_a = oracle.class(a);
            exhaustive &= class_a.complete;
            for m2 in &class_a.members {
                if m2.len() <= a.len() || &m2[..a.len()] != a {
                    continue;
                }
                let p = &m2[a.len()..];
                if !oracle.has_nontrivial_class(p) {
                    continue;
                }
                match oracle.equal_verdict(b, &concat(&[p, b])) {
                    Verdict::Yes => {
                        let wit = UncleanWitness { a: a.to_vec(), b: b.to_vec(), p: p.to_vec() };
                        if wit.verify(oracle, w) == Verdict::Yes && !found.contains(&wit) {
                            found.push(wit);
                            if found.len() >= limit {
                                return (found, false);
                            }
                        }
                    }
                    Verdict::Unknown => exhaustive = false,
                    Verdict::No => {}
                }
            }
        }
    }
    (found, exhaustive)
}

fn search_inter_osculations(s: &Squier, w: &[Letter], limit: usize) -> Vec<InterOsculation> {
    let oracle = s.oracle;
    let pres = oracle.presentation();
    let mut found = Vec::new();
    for (u, v, ww) in overlaps(pres) {
        let uvw = concat(&[&u, &v, &ww]);
        let (p, q) = (concat(&[&u, &v]), concat(&[&v, &ww]));
        for m in &s.ball.vertices {
            for i in 1..m.len() {
                if i + uvw.len() >= m.len() || m[i..i + uvw.len()] != uvw[..] {
                    continue;
                }
                let (a, b) = (&m[..i], &m[i + uvw.len()..]);
                let au = concat(&[a, &u]);
                let auv = concat(&[&au, &v]);
                for m2 in &oracle.class(&au).members {
                    if m2.len() <= auv.len() || m2[..auv.len()] != auv[..] {
                        continue;
                    }
                    let xi = &m2[auv.len()..];
                    let wit = InterOsculation {
                        a: a.to_vec(),
                        u: u.clone(),
                        v: v.clone(),
                        w: ww.clone(),
                        b: b.to_vec(),
                        p: p.clone(),
                        q: q.clone(),
                        xi: xi.to_vec(),
                    };
                    if wit.verify(oracle, w) == Verdict::Yes && !found.contains(&wit) {
                        found.push(wit);
                        if found.len() >= limit {
                            return found;
                        }
                    }
                }
            }
        }
    }
    found
}

/// Decide clean-ness and specialness of `S(P, w)` as far as the oracle allows.
pub fn specialness_report(oracle: &Oracle, w: &[Letter]) -> Result<SpecialnessReport> {
    let s = Squier::new(oracle, w)?;
    let pres = oracle.presentation();
    let mut notes = Vec::new();
    let finite = s.ball.complete;

    let self_intersections: Vec<SelfIntersection> = s
        .scan_self_intersections()
        .into_iter()
        .filter(|x| x.verify(oracle) == Verdict::Yes)
        .take(WITNESS_LIMIT)
        .collect();
    let self_osculations: Vec<SelfOsculation> = s
        .scan_self_osculations()
        .into_iter()
        .filter(|x| x.verify(oracle) == Verdict::Yes)
        .take(WITNESS_LIMIT)
        .collect();
    let mut unclean: Vec<UncleanWitness> = Vec::new();
    for wit in self_intersections
        .iter()
        .map(|x| x.unclean_witness(pres))
        .chain(self_osculations.iter().map(|x| x.unclean_witness()))
    {
        if wit.verify(oracle, w) == Verdict::Yes && !unclean.contains(&wit) {
            unclean.push(wit);
        }
    }

    let clean = if !unclean.is_empty() {
        notes.push("clean: pathological hyperplane found in the ball".into());
        Verdict::No
    } else if finite {
        notes.push("clean: the class of the base word is finite".into());
        Verdict::Yes
    } else if pres.sides().iter().all(|side| oracle.refute(&unclean_system(w, side)).is_some()) {
        notes.push("clean: every obstruction system is refuted".into());
        Verdict::Yes
    } else {
        let (found, exhaustive) = search_unclean(&s, w, WITNESS_LIMIT);
        unclean.extend(found);
        if !unclean.is_empty() {
            notes.push("clean: obstruction words found".into());
            Verdict::No
        } else if exhaustive {
            notes.push("clean: closed search found no obstruction".into());
            Verdict::Yes
        } else {
            notes.push("clean: search caps reached".into());
            Verdict::Unknown
        }
    };

    let mut inter_osculations = Vec::new();
    let special = match clean {
        Verdict::No => Verdict::No,
        _ if finite => {
            notes.push("special: the class of the base word is finite".into());
            clean
        }
        _ => {
            let open: Vec<_> = overlaps(pres)
                .into_iter()
                .filter(|(u, v, ww)| oracle.refute(&inter_osculation_system(w, u, v, ww)).is_none())
                .collect();
            if open.is_empty() {
                notes.push("special: every inter-osculation system is refuted".into());
                clean
            } else {
                inter_osculations = search_inter_osculations(&s, w, WITNESS_LIMIT);
                if !inter_osculations.is_empty() {
                    notes.push("special: inter-osculating hyperplanes found".into());
                    Verdict::No
                } else {
                    notes.push("special: search caps reached".into());
                    Verdict::Unknown
                }
            }
        }
    };

    Ok(SpecialnessReport {
        clean,
        special,
        unclean,
        self_intersections,
        self_osculations,
        inter_osculations,
        two_sided: Verdict::Yes,
        finite_class: finite,
        notes,
    })
}

/// Answer to "is `dim S(P,w) ≥ n`".
#[derive(Debug, Clone)]
pub struct DimensionAnswer {
    pub verdict: Verdict,
    /// A vertex with `n` pairwise disjoint rewritable places.
    pub witness: Option<(Word, Vec<Move>)>,
    pub reason: String,
}

/// Most pairwise disjoint moves at `w`, chosen greedily by earliest end.
fn disjoint_moves(p: &Presentation, w: &[Letter]) -> Vec<Move> {
    let mut moves: Vec<(usize, Move)> =
        p.moves(w).into_iter().map(|m| (m.offset + p.input_side(m.relation, m.direction).len(), m)).collect();
    moves.sort_by_key(|&(end, m)| (end, m.offset));
    let mut chosen = Vec::new();
    let mut free = 0;
    for (end, m) in moves {
        if m.offset >= free {
            chosen.push(m);
            free = end;
        }
    }
    chosen
}

/// The complex has an `n`-cube iff some word of `[w]` contains `n` disjoint
/// relation sides.
pub fn dimension_at_least(oracle: &Oracle, w: &[Letter], n: usize) -> DimensionAnswer {
    let p = oracle.presentation();
    let class = oracle.class(w);
    for m in &class.members {
        let chosen = disjoint_moves(p, m);
        if chosen.len() >= n {
            return DimensionAnswer {
                verdict: Verdict::Yes,
                witness: Some((m.clone(), chosen[..n].to_vec())),
                reason: "vertex with enough disjoint rewrites".into(),
            };
        }
    }
    if class.complete {
        return DimensionAnswer { verdict: Verdict::No, witness: None, reason: "closed search over the class".into() };
    }
    let sides = p.sides();
    let mut tuple = vec![0usize; n];
    'tuples: loop {
        let mut sys = WordSystem::new();
        let mut rhs = vec![sys.any_var()];
        for &s in &tuple {
            rhs.push(Piece::Word(sides[s].clone()));
            rhs.push(sys.any_var());
        }
        sys.equation(vec![Piece::Word(w.to_vec())], rhs);
        if oracle.refute(&sys).is_none() {
            break 'tuples;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return DimensionAnswer {
                    verdict: Verdict::No,
                    witness: None,
                    reason: "every factorisation through relation sides is refuted".into(),
                };
            }
            tuple[pos] += 1;
            if tuple[pos] < sides.len() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
    DimensionAnswer { verdict: Verdict::Unknown, witness: None, reason: "search caps reached".into() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rewriting::SearchCaps;

    #[test]
    fn z_bullet_z_is_special() {
        let p = catalog::z_bullet_z();
        let oracle = Oracle::new(&p, SearchCaps::new(10, 500, 64).unwrap());
        let r = specialness_report(&oracle, &p.word("a1 b1").unwrap()).unwrap();
        assert_eq!(r.clean, Verdict::Yes, "{:?}", r.notes);
        assert_eq!(r.special, Verdict::Yes, "{:?}", r.notes);
        assert!(r.self_intersections.is_empty() && r.self_osculations.is_empty());
    }

    #[test]
    fn non_special_example_is_unclean() {
        let p = catalog::non_special();
        let oracle = Oracle::new(&p, SearchCaps::new(8, 400, 64).unwrap());
        let w = p.word("a b").unwrap();
        let r = specialness_report(&oracle, &w).unwrap();
        assert_eq!(r.clean, Verdict::No);
        assert_eq!(r.special, Verdict::No);
        assert!(!r.unclean.is_empty());
        for wit in &r.unclean {
            assert_eq!(wit.verify(&oracle, &w), Verdict::Yes);
        }
        assert!(!r.self_intersections.is_empty());
    }

    #[test]
    fn finite_class_is_special() {
        let p = catalog::commuting();
        let oracle = Oracle::new(&p, SearchCaps::default());
        let r = specialness_report(&oracle, &p.word("a b c").unwrap()).unwrap();
        assert_eq!((r.clean, r.special), (Verdict::Yes, Verdict::Yes));
    }

    #[test]
    fn dimensions() {
        let p = catalog::z_bullet_z();
        let oracle = Oracle::new(&p, SearchCaps::new(10, 500, 64).unwrap());
        let w = p.word("a1 b1").unwrap();
        assert_eq!(dimension_at_least(&oracle, &w, 2).verdict, Verdict::Yes);
        assert_eq!(dimension_at_least(&oracle, &w, 3).verdict, Verdict::No);

        let p = catalog::commuting();
        let oracle = Oracle::new(&p, SearchCaps::default());
        assert_eq!(dimension_at_least(&oracle, &p.word("a b c").unwrap(), 2).verdict, Verdict::No);

        let p = catalog::infinite_dimensional();
        let oracle = Oracle::new(&p, SearchCaps::new(12, 2000, 64).unwrap());
        for n in 1..=5 {
            assert_eq!(dimension_at_least(&oracle, &p.word("x").unwrap(), n).verdict, Verdict::Yes);
        }
    }
}
