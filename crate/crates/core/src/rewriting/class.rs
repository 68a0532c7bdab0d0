use std::collections::{HashMap, VecDeque};

use super::{shortlex, Convergent, Letter, Move, Presentation, SearchCaps, Verdict, Word};

/// The outcome of a breadth-first closure of `[seed]` under one-step rewrites.
#[derive(Debug, Clone)]
pub struct ClassEnumeration {
    pub seed: Word,
    /// Members in shortlex order.
    pub members: Vec<Word>,
    /// True iff the closure finished without pruning a word or reaching a cap.
    pub complete: bool,
    /// Each undirected edge once, stored from the endpoint holding the relation's lhs.
    pub edges: Vec<(Word, Move, Word)>,
    index: HashMap<Word, usize>,
    parent: Vec<Option<(usize, Move)>>,
    depth: Vec<usize>,
}

impl ClassEnumeration {
    pub fn contains(&self, w: &[Letter]) -> bool {
        self.index.contains_key(w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Shortlex-least member found.
    pub fn least(&self) -> &Word {
        &self.members[0]
    }

    /// BFS distance from the seed.
    pub fn depth_of(&self, w: &[Letter]) -> Option<usize> {
        self.index.get(w).map(|&i| self.depth[i])
    }

    /// Moves leading from the seed to `w` along the BFS tree.
    pub fn path_to(&self, w: &[Letter]) -> Option<Vec<Move>> {
        let mut i = *self.index.get(w)?;
        let mut moves = Vec::new();
        while let Some((p, m)) = self.parent[i] {
            moves.push(m);
            i = p;
        }
        moves.reverse();
        Some(moves)
    }

    /// Moves leading from `w` back to the seed.
    pub fn path_from(&self, w: &[Letter]) -> Option<Vec<Move>> {
        Some(reverse_path(&self.path_to(w)?))
    }
}

/// Reverse a derivation: reverse the order and flip every direction. Offsets are
/// unchanged because a move and its reversal act on the same interval.
pub(crate) fn reverse_path(moves: &[Move]) -> Vec<Move> {
    moves.iter().rev().map(|m| m.reversed()).collect()
}

/// Breadth-first closure of `[w]` under one-step rewrites, bounded by `caps`.
pub fn enumerate_class(p: &Presentation, w: &[Letter], caps: SearchCaps) -> ClassEnumeration {
    let mut discovered = vec![w.to_vec()];
    let mut index = HashMap::from([(w.to_vec(), 0usize)]);
    let mut parent = vec![None];
    let mut depth = vec![0usize];
    let mut complete = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let current = discovered[i].clone();
        let rewrites = p.one_step_rewrites(&current);
        if depth[i] >= caps.max_bfs_depth {
            if rewrites.iter().any(|(_, r)| !index.contains_key(r)) {
                complete = false;
            }
            continue;
        }
        for (m, next) in rewrites {
            if index.contains_key(&next) {
                continue;
            }
            if next.len() > caps.max_word_len || discovered.len() >= caps.max_class_size {
                complete = false;
                continue;
            }
            let j = discovered.len();
            index.insert(next.clone(), j);
            discovered.push(next);
            parent.push(Some((i, m)));
            depth.push(depth[i] + 1);
            queue.push_back(j);
        }
    }
    let mut members = discovered;
    members.sort_by(|a, b| shortlex(a, b));
    let mut edges = Vec::new();
    for m in &members {
        for (mv, r) in p.one_step_rewrites(m) {
            if mv.direction == super::Direction::Forward && index.contains_key(&r) {
                edges.push((m.clone(), mv, r));
            }
        }
    }
    ClassEnumeration { seed: w.to_vec(), members, complete, edges, index, parent, depth }
}

/// Answer to an equality query; `Yes` always carries a replayable derivation from
/// the first word to the second.
#[derive(Debug, Clone)]
pub struct Equality {
    pub verdict: Verdict,
    pub derivation: Option<Vec<Move>>,
}

/// Decide `w1 = w2` modulo `p` within `caps`.
///
/// Both classes are explored; a common member gives `Yes`. A closed class that
/// misses the other word gives `No`. When neither closes, a convergent shortlex
/// orientation of the relations (if the presentation has one) settles the
/// question through normal forms. Everything else is `Unknown`.
pub fn equal_mod_p(p: &Presentation, w1: &[Letter], w2: &[Letter], caps: SearchCaps) -> Equality {
    equal_with(p, w1, w2, caps, Convergent::check(p).as_ref())
}

/// [`equal_mod_p`] with the convergence check already done by the caller.
pub(crate) fn equal_with(
    p: &Presentation,
    w1: &[Letter],
    w2: &[Letter],
    caps: SearchCaps,
    convergent: Option<&Convergent>,
) -> Equality {
    if w1 == w2 {
        return Equality { verdict: Verdict::Yes, derivation: Some(Vec::new()) };
    }
    if w1.is_empty() || w2.is_empty() {
        return Equality { verdict: Verdict::No, derivation: None };
    }
    let c1 = enumerate_class(p, w1, caps);
    if let Some(path) = c1.path_to(w2) {
        return Equality { verdict: Verdict::Yes, derivation: Some(path) };
    }
    if c1.complete {
        return Equality { verdict: Verdict::No, derivation: None };
    }
    let c2 = enumerate_class(p, w2, caps);
    if c2.complete {
        return Equality { verdict: Verdict::No, derivation: None };
    }
    if let Some(meet) = c1.members.iter().find(|m| c2.contains(m)) {
        let mut path = c1.path_to(meet).unwrap();
        path.extend(c2.path_from(meet).unwrap());
        return Equality { verdict: Verdict::Yes, derivation: Some(path) };
    }
    if let Some(sys) = convergent {
        return sys.equality(w1, w2);
    }
    Equality { verdict: Verdict::Unknown, derivation: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comm() -> Presentation {
        Presentation::from_strs(&["a", "b", "c"], &[("a b", "b a"), ("a c", "c a"), ("b c", "c b")]).unwrap()
    }

    fn zbz() -> Presentation {
        Presentation::from_strs(
            &["a1", "a2", "a3", "b1", "b2", "b3", "p"],
            &[
                ("a1", "a2"),
                ("a2", "a3"),
                ("a3", "a1"),
                ("b1", "b2"),
                ("b2", "b3"),
                ("b3", "b1"),
                ("a1", "a1 p"),
                ("b1", "p b1"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn permutations_of_abc() {
        let p = comm();
        let c = enumerate_class(&p, &p.word("a b c").unwrap(), SearchCaps::default());
        assert!(c.complete);
        assert_eq!(c.len(), 6);
        assert_eq!(c.least(), &p.word("a b c").unwrap());
        assert_eq!(c.edges.len(), 6);
    }

    #[test]
    fn single_letter_class() {
        let p = comm();
        let c = enumerate_class(&p, &p.word("a").unwrap(), SearchCaps::new(1, 1, 1).unwrap());
        assert!(c.complete);
        assert_eq!(c.members, vec![p.word("a").unwrap()]);
    }

    #[test]
    fn infinite_class_is_truncated() {
        let p = zbz();
        let caps = SearchCaps::new(6, 10_000, 100).unwrap();
        let c = enumerate_class(&p, &p.word("a1 b1").unwrap(), caps);
        assert!(!c.complete);
        for a in ["a1", "a2", "a3"] {
            for b in ["b1", "b2", "b3"] {
                for n in 0..=4 {
                    let text = format!("{a} {} {b}", vec!["p"; n].join(" "));
                    assert!(c.contains(&p.word(&text).unwrap()), "{text}");
                }
            }
        }
    }

    #[test]
    fn equality_with_derivation() {
        let p = comm();
        let (x, y) = (p.word("a a b c").unwrap(), p.word("c a b a").unwrap());
        let e = equal_mod_p(&p, &x, &y, SearchCaps::default());
        assert_eq!(e.verdict, Verdict::Yes);
        let d = e.derivation.unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(p.replay(&x, &d).unwrap().last().unwrap(), &y);
    }

    #[test]
    fn inequality_on_closed_class() {
        let p = comm();
        let e = equal_mod_p(&p, &p.word("a").unwrap(), &p.word("b").unwrap(), SearchCaps::default());
        assert_eq!(e.verdict, Verdict::No);
    }

    #[test]
    fn two_step_equality_in_infinite_class() {
        let p = zbz();
        let (x, y) = (p.word("a1 b1").unwrap(), p.word("a1 p p b1").unwrap());
        let e = equal_mod_p(&p, &x, &y, SearchCaps::default());
        assert_eq!(e.verdict, Verdict::Yes);
        assert_eq!(p.replay(&x, &e.derivation.unwrap()).unwrap().last().unwrap(), &y);
    }

    #[test]
    fn infinite_classes_separated_by_normal_forms() {
        let p = zbz();
        let caps = SearchCaps::new(5, 200, 20).unwrap();
        let e = equal_mod_p(&p, &p.word("a1 b1").unwrap(), &p.word("b1 a1").unwrap(), caps);
        assert_eq!(e.verdict, Verdict::No);
    }
}
