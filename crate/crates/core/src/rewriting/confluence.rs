//! Recognition of presentations whose relations, each oriented towards its
//! shortlex-smaller side, already form a convergent rewriting system.
//!
//! Nothing is added to the system: if some critical pair fails to resolve, the
//! presentation is simply not recognised. When it is recognised, the normal form
//! of a word is the shortlex-least member of its class, so equality and canonical
//! representatives become exact even for infinite classes.

use super::class::{reverse_path, Equality};
use super::{concat, shortlex, Direction, Letter, Move, Presentation, Verdict, Word};
use std::cmp::Ordering;

#[derive(Debug, Clone)]
struct Rule {
    lhs: Word,
    rhs: Word,
    relation: usize,
    direction: Direction,
}

#[derive(Debug, Clone)]
pub struct Convergent {
    rules: Vec<Rule>,
}

impl Convergent {
    /// Orient every relation towards its shortlex-smaller side and check that all
    /// critical pairs are joinable. Shortlex is a well-order compatible with
    /// concatenation, so the system terminates and local confluence suffices.
    pub fn check(p: &Presentation) -> Option<Self> {
        let rules: Vec<Rule> = p
            .relations()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if shortlex(&r.lhs, &r.rhs) == Ordering::Greater {
                    Rule { lhs: r.lhs.clone(), rhs: r.rhs.clone(), relation: i, direction: Direction::Forward }
                } else {
                    Rule { lhs: r.rhs.clone(), rhs: r.lhs.clone(), relation: i, direction: Direction::Backward }
                }
            })
            .collect();
        let sys = Convergent { rules };
        for (i, r1) in sys.rules.iter().enumerate() {
            for (j, r2) in sys.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let left = concat(&[&r1.rhs, &l2[k..]]);
                        let right = concat(&[&l1[..l1.len() - k], &r2.rhs]);
                        if sys.normal_form(&left).0 != sys.normal_form(&right).0 {
                            return None;
                        }
                    }
                }
                if i != j && l2.len() <= l1.len() {
                    for at in 0..=(l1.len() - l2.len()) {
                        if l1[at..at + l2.len()] == l2[..] {
                            let right = concat(&[&l1[..at], &r2.rhs, &l1[at + l2.len()..]]);
                            if sys.normal_form(&r1.rhs).0 != sys.normal_form(&right).0 {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        Some(sys)
    }

    /// Leftmost-first reduction to the irreducible form, with the moves used.
    pub fn normal_form(&self, w: &[Letter]) -> (Word, Vec<Move>) {
        let mut cur = w.to_vec();
        let mut moves = Vec::new();
        'outer: loop {
            for offset in 0..cur.len() {
                for r in &self.rules {
                    if cur[offset..].starts_with(&r.lhs) {
                        cur = concat(&[&cur[..offset], &r.rhs, &cur[offset + r.lhs.len()..]]);
                        moves.push(Move::new(offset, r.relation, r.direction));
                        continue 'outer;
                    }
                }
            }
            return (cur, moves);
        }
    }

    /// Exact equality through normal forms, with a derivation when equal.
    pub fn equality(&self, w1: &[Letter], w2: &[Letter]) -> Equality {
        let (n1, d1) = self.normal_form(w1);
        let (n2, d2) = self.normal_form(w2);
        if n1 == n2 {
            let mut path = d1;
            path.extend(reverse_path(&d2));
            Equality { verdict: Verdict::Yes, derivation: Some(path) }
        } else {
            Equality { verdict: Verdict::No, derivation: None }
        }
    }
}
