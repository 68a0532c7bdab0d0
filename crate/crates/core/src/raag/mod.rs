//! Right-angled Artin groups: words, a normal form solving the word problem, and
//! ball growth.

mod embedding;

pub use embedding::{build_apw, Embedding};

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// A generator index with exponent `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: usize,
    pub inverse: bool,
}

impl Syllable {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Syllable { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Syllable { inverse: !self.inverse, ..self }
    }
}

pub type RaagWord = Vec<Syllable>;

pub fn inverse_word(w: &[Syllable]) -> RaagWord {
    w.iter().rev().map(|s| s.inv()).collect()
}

/// A simple graph on labelled generators. `A(Γ)` has one commutation relation
/// per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagGraph {
    labels: Vec<String>,
    adj: Vec<Vec<bool>>,
}

impl RaagGraph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::Invalid("generator labels must be distinct".into()));
        }
        if let Some(bad) = labels.iter().find(|l| l.is_empty() || l.contains(char::is_whitespace) || l.contains('^')) {
            return Err(Error::Invalid(format!("bad generator label `{bad}`")));
        }
        let mut adj = vec![vec![false; n]; n];
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::Invalid(format!("edge ({i}, {j}) out of range")));
            }
            if i == j {
                return Err(Error::Invalid(format!("loop at generator {}", labels[i])));
            }
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Ok(RaagGraph { labels, adj })
    }

    /// Generators named `prefix1`, `prefix2`, ….
    pub fn numbered(prefix: &str, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")).collect(), edges)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adj[i][j]).collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                adj[i][j] = i != j && !self.adj[i][j];
            }
        }
        RaagGraph { labels: self.labels.clone(), adj }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::Invalid(format!("expected {} labels, got {}", self.len(), labels.len())));
        }
        RaagGraph::new(labels, &self.edges())
    }

    /// Two syllables may swap when their generators are adjacent.
    fn commute(&self, x: Syllable, y: Syllable) -> bool {
        self.adj[x.gen][y.gen]
    }

    /// Parse whitespace-separated `gen` / `gen^-1` tokens.
    pub fn parse_word(&self, text: &str) -> Result<RaagWord> {
        let index: HashMap<&str, usize> = self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        text.split_whitespace()
            .map(|tok| {
                let (name, inverse) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                index
                    .get(name)
                    .map(|&gen| Syllable { gen, inverse })
                    .ok_or_else(|| Error::UnknownLetter(name.to_string()))
            })
            .collect()
    }

    pub fn render(&self, w: &[Syllable]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|s| if s.inverse { format!("{}^-1", self.labels[s.gen]) } else { self.labels[s.gen].clone() })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Freely and commutatively reduced form, then the lexicographically least
    /// ordering of its syllables among those reachable by commutations.
    pub fn normal_form(&self, w: &[Syllable]) -> RaagWord {
        // Appending one syllable to a reduced word either cancels it against the
        // last occurrence of its inverse that can be shuffled to the end, or
        // leaves the word reduced.
        let mut reduced: Vec<Syllable> = Vec::with_capacity(w.len());
        for &s in w {
            let mut cancel = None;
            for (i, &t) in reduced.iter().enumerate().rev() {
                if t == s.inv() {
                    cancel = Some(i);
                    break;
                }
                if !self.commute(t, s) {
                    break;
                }
            }
            match cancel {
                Some(i) => {
                    reduced.remove(i);
                }
                None => reduced.push(s),
            }
        }
        // Least linear extension of the dependence order: repeatedly take the
        // smallest syllable that commutes with everything before it.
        let mut rest = reduced;
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                if rest[..i].iter().all(|&t| self.commute(t, rest[i])) && best.map_or(true, |b| rest[i] < rest[b]) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("first syllable is always available")));
        }
        out
    }

    pub fn equal(&self, u: &[Syllable], v: &[Syllable]) -> bool {
        self.normal_form(u) == self.normal_form(v)
    }

    pub fn multiply(&self, u: &[Syllable], v: &[Syllable]) -> RaagWord {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        self.normal_form(&w)
    }

    /// Numbers of elements of word length at most `0, 1, …, radius`.
    pub fn ball_sizes(&self, radius: usize) -> Vec<usize> {
        let gens: Vec<Syllable> =
            (0..self.len()).flat_map(|g| [Syllable::new(g, false), Syllable::new(g, true)]).collect();
        let mut seen: HashSet<RaagWord> = HashSet::new();
        seen.insert(Vec::new());
        let mut frontier = vec![Vec::new()];
        let mut sizes = vec![1];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &frontier {
                for &g in &gens {
                    let x = self.multiply(w, &[g]);
                    if seen.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            frontier = next;
            sizes.push(seen.len());
        }
        sizes
    }
}

impl fmt::Display for RaagGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices: {}", self.labels.join(" "))?;
        for (i, j) in self.edges() {
            write!(f, "\nedge: {} {}", self.labels[i], self.labels[j])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    fn k44() -> RaagGraph {
        let names = ["A1", "A2", "A3", "C", "B1", "B2", "B3", "D"];
        let edges: Vec<_> = (0..4).flat_map(|i| (4..8).map(move |j| (i, j))).collect();
        RaagGraph::new(names.iter().map(|s| s.to_string()).collect(), &edges).unwrap()
    }

    /// Everything reachable by commuting adjacent syllables and cancelling
    /// adjacent inverse pairs.
    fn orbit(g: &RaagGraph, w: &[Syllable]) -> HashSet<RaagWord> {
        let mut seen: HashSet<RaagWord> = HashSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(u) = queue.pop_front() {
            for i in 0..u.len().saturating_sub(1) {
                let mut next = Vec::new();
                if u[i] == u[i + 1].inv() {
                    let mut v = u.clone();
                    v.drain(i..i + 2);
                    next.push(v);
                } else if g.commute(u[i], u[i + 1]) {
                    let mut v = u.clone();
                    v.swap(i, i + 1);
                    next.push(v);
                }
                for v in next {
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn examples() {
        let g = k44();
        let nf = |s: &str| g.render(&g.normal_form(&g.parse_word(s).unwrap()));
        assert_eq!(nf("A1 A1^-1"), "1");
        assert_eq!(nf("A1 B1 A1^-1 B1^-1"), "1");
        assert_eq!(nf("A1 A2 A2^-1 A3"), "A1 A3");
        assert_eq!(nf("B1 A1"), "A1 B1");
        assert_eq!(nf("A2 A1"), "A2 A1");
        assert!(g.parse_word("Z").is_err());
    }

    #[test]
    fn normal_form_is_least_shortest_word_of_the_orbit() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300 {
            let n = rng.gen_range(1..=4);
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(0.5)).collect();
            let g = RaagGraph::numbered("g", n, &edges).unwrap();
            let len = rng.gen_range(0..=8);
            let w: RaagWord = (0..len).map(|_| Syllable::new(rng.gen_range(0..n), rng.gen_bool(0.5))).collect();
            let orb = orbit(&g, &w);
            let shortest = orb.iter().map(Vec::len).min().unwrap();
            let least = orb.iter().filter(|u| u.len() == shortest).min().unwrap();
            assert_eq!(&g.normal_form(&w), least, "trial {trial}: {}", g.render(&w));
        }
    }

    #[test]
    fn ball_sizes_of_small_groups() {
        assert_eq!(RaagGraph::numbered("x", 2, &[(0, 1)]).unwrap().ball_sizes(3), vec![1, 5, 13, 25]);
        assert_eq!(RaagGraph::numbered("x", 2, &[]).unwrap().ball_sizes(3), vec![1, 5, 17, 53]);
        assert_eq!(RaagGraph::numbered("x", 1, &[]).unwrap().ball_sizes(3), vec![1, 3, 5, 7]);
    }

    #[test]
    fn graph_validation() {
        assert!(RaagGraph::numbered("x", 2, &[(0, 0)]).is_err());
        assert!(RaagGraph::new(vec!["a".into(), "a".into()], &[]).is_err());
        let g = RaagGraph::numbered("x", 3, &[(0, 1)]).unwrap();
        assert_eq!(g.complement().edges(), vec![(0, 2), (1, 2)]);
    }
}
