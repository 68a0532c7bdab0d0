//! Finite group presentations with a bounded Tietze simplifier.

use std::fmt;

use crate::raag::Syllable;

pub type GroupWord = Vec<Syllable>;

/// Longest relator the simplifier is willing to create by substitution.
const MAX_RELATOR_LEN: usize = 400;

pub fn free_reduce(w: &[Syllable]) -> GroupWord {
    let mut out: GroupWord = Vec::with_capacity(w.len());
    for &s in w {
        if out.last() == Some(&s.inv()) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

pub fn cyclic_reduce(w: &[Syllable]) -> GroupWord {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

pub fn inverse(w: &[Syllable]) -> GroupWord {
    w.iter().rev().map(|s| s.inv()).collect()
}

/// Least rotation of `r` or of its inverse: equal for relators that define the
/// same normal closure trivially.
fn cyclic_key(r: &[Syllable]) -> GroupWord {
    let r = cyclic_reduce(r);
    let inv = inverse(&r);
    let mut best = r.clone();
    for w in [&r, &inv] {
        for k in 0..w.len() {
            let rot: GroupWord = w[k..].iter().chain(&w[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<GroupWord>,
    /// Some relators were left out because the underlying data was truncated.
    pub truncated: bool,
}

/// `[t, h^{-i} a h^{i}]` for `i = 0..=bound`, found among the relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorFamily {
    pub a: usize,
    pub t: usize,
    pub h: usize,
    /// The conjugates are `h^{-i} a h^{i}` when set and `h^{i} a h^{-i}` otherwise.
    pub right_action: bool,
    pub bound: usize,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>) -> Self {
        GroupPresentation { generators, relators: Vec::new(), truncated: false }
    }

    pub fn add_generator(&mut self, name: String) -> usize {
        self.generators.push(name);
        self.generators.len() - 1
    }

    pub fn add_relator(&mut self, r: GroupWord) {
        self.relators.push(r);
    }

    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    fn normalize(&mut self) {
        let mut keys = std::collections::HashSet::new();
        let mut out = Vec::new();
        for r in &self.relators {
            let r = cyclic_reduce(r);
            if !r.is_empty() && keys.insert(cyclic_key(&r)) {
                out.push(r);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        self.relators = out;
    }

    /// A relator and generator to eliminate: the shortest relator in which some
    /// generator occurs exactly once, taking the latest such generator.
    fn elimination_candidate(&self) -> Option<(usize, usize)> {
        for (ri, r) in self.relators.iter().enumerate() {
            let mut counts = vec![0usize; self.generators.len()];
            for s in r {
                counts[s.gen] += 1;
            }
            if let Some(g) = (0..counts.len()).rev().find(|&g| counts[g] == 1) {
                let growth = self
                    .relators
                    .iter()
                    .map(|other| other.iter().filter(|s| s.gen == g).count() * (r.len() - 1) + other.len())
                    .max()
                    .unwrap_or(0);
                if growth <= MAX_RELATOR_LEN {
                    return Some((ri, g));
                }
            }
        }
        None
    }

    fn eliminate(&mut self, ri: usize, g: usize) {
        let r = self.relators.remove(ri);
        let pos = r.iter().position(|s| s.gen == g).unwrap();
        // r = A g^ε B, so g^ε = A⁻¹ B⁻¹.
        let (a, b) = (&r[..pos], &r[pos + 1..]);
        let mut value = inverse(a);
        value.extend(inverse(b));
        if r[pos].inverse {
            value = inverse(&value);
        }
        let value_inv = inverse(&value);
        for other in &mut self.relators {
            let mut next = Vec::with_capacity(other.len());
            for &s in other.iter() {
                if s.gen == g {
                    next.extend_from_slice(if s.inverse { &value_inv } else { &value });
                } else {
                    next.push(s);
                }
            }
            *other = free_reduce(&next);
        }
        self.generators.remove(g);
        for other in &mut self.relators {
            for s in other.iter_mut() {
                if s.gen > g {
                    s.gen -= 1;
                }
            }
        }
    }

    /// Cancel, deduplicate and eliminate generators until nothing changes.
    pub fn simplify(&mut self) {
        loop {
            self.normalize();
            match self.elimination_candidate() {
                Some((ri, g)) => self.eliminate(ri, g),
                None => break,
            }
        }
    }

    pub fn simplified(&self) -> Self {
        let mut p = self.clone();
        p.simplify();
        p
    }

    /// Recognize a three-generator presentation whose relators are exactly the
    /// commutators `[t, a^{hⁱ}]` for `0 ≤ i ≤ bound` (some `bound ≥ 1`).
    pub fn commutator_family(&self) -> Option<CommutatorFamily> {
        if self.generators.len() != 3 {
            return None;
        }
        let keys: Vec<GroupWord> = self.relators.iter().map(|r| cyclic_key(r)).collect();
        for (a, t, h) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
            for right_action in [false, true] {
                let commutator = |i: usize| {
                    let hp: GroupWord = vec![Syllable::new(h, right_action); i];
                    let mut conj = hp.clone();
                    conj.push(Syllable::new(a, false));
                    conj.extend(inverse(&hp));
                    let mut w = vec![Syllable::new(t, false)];
                    w.extend_from_slice(&conj);
                    w.push(Syllable::new(t, true));
                    w.extend(inverse(&conj));
                    cyclic_key(&w)
                };
                let mut exponents = Vec::new();
                for k in &keys {
                    match (0..=keys.len()).find(|&i| commutator(i) == *k) {
                        Some(i) => exponents.push(i),
                        None => break,
                    }
                }
                exponents.sort_unstable();
                let contiguous = exponents.iter().enumerate().all(|(k, &i)| k == i);
                if exponents.len() == keys.len() && keys.len() >= 2 && contiguous {
                    return Some(CommutatorFamily { a, t, h, right_action, bound: keys.len() - 1 });
                }
            }
        }
        None
    }

    pub fn render_word(&self, w: &[Syllable]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let run = w[i..].iter().take_while(|&&s| s == w[i]).count();
            let g = &self.generators[w[i].gen];
            parts.push(match (w[i].inverse, run) {
                (false, 1) => g.clone(),
                (false, k) => format!("{g}^{k}"),
                (true, k) => format!("{g}^-{k}"),
            });
            i += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))?;
        if self.truncated {
            write!(f, " (truncated family)")?;
        }
        Ok(())
    }
}
