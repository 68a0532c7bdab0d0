//! Sound refutation of word equations modulo a presentation.
//!
//! A [`WordSystem`] is a finite set of equations `L ≡ R` whose sides concatenate
//! constant words and unknowns. [`Refuter::refute`] looks for an invariant of the
//! congruence that no assignment of the unknowns can satisfy:
//!
//! * the class of the empty word is `{ε}` because relation sides are nonempty;
//! * every linear functional on letter counts that vanishes on all relations is
//!   constant on classes, and an exact rational LP decides whether nonnegative
//!   count vectors for the unknowns can balance every equation;
//! * the connected component of the first letter (letters linked when they start
//!   the two sides of a relation) is constant on classes, and likewise for the
//!   last letter.
//!
//! A refutation is a proof that the system has no solution. Failing to refute
//! proves nothing.

mod simplex;

pub use simplex::LinearSystem;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rewriting::{Letter, Presentation, Word};

/// One factor of an equation side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Word(Word),
    Var(usize),
}

/// Equations over unknown words. Each unknown is either required to be nonempty
/// or allowed to be empty.
#[derive(Debug, Clone, Default)]
pub struct WordSystem {
    nonempty: Vec<bool>,
    equations: Vec<(Vec<Piece>, Vec<Piece>)>,
}

impl WordSystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// A fresh unknown ranging over nonempty words.
    pub fn nonempty_var(&mut self) -> Piece {
        self.nonempty.push(true);
        Piece::Var(self.nonempty.len() - 1)
    }

    /// A fresh unknown that may also be the empty word.
    pub fn any_var(&mut self) -> Piece {
        self.nonempty.push(false);
        Piece::Var(self.nonempty.len() - 1)
    }

    pub fn equation(&mut self, lhs: Vec<Piece>, rhs: Vec<Piece>) {
        self.equations.push((lhs, rhs));
    }

    pub fn var_count(&self) -> usize {
        self.nonempty.len()
    }
}

/// Why a system has no solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refutation {
    EmptyWord,
    LetterCounts,
    FirstLetter,
    LastLetter,
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Refutation::EmptyWord => "only the empty word equals the empty word",
            Refutation::LetterCounts => "no letter counts satisfy the linear invariants",
            Refutation::FirstLetter => "first letters lie in different components",
            Refutation::LastLetter => "last letters lie in different components",
        })
    }
}

/// Invariants of one presentation, computed once.
#[derive(Debug, Clone)]
pub struct Refuter {
    alphabet: usize,
    /// Basis of the functionals on letter counts that every relation preserves.
    invariants: Vec<Vec<BigRational>>,
    first: Vec<usize>,
    last: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn components(n: usize, pairs: impl Iterator<Item = (Letter, Letter)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for (a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

/// Basis of the null space of `rows` (each of length `n`) over the rationals.
fn null_space(rows: &[Vec<BigRational>], n: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, pr);
        let inv = BigRational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

fn count(word: &[Letter], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n];
    for &l in word {
        c[l as usize] += 1;
    }
    c
}

/// What the letter-count analysis knows about the unknowns of a system.
struct Analysis {
    nonempty: Vec<bool>,
    empty: Vec<bool>,
    allowed: Vec<Vec<bool>>,
}

impl Refuter {
    pub fn new(p: &Presentation) -> Self {
        let n = p.letters().len();
        let rows: Vec<Vec<BigRational>> = p
            .relations()
            .iter()
            .map(|r| {
                let (cl, cr) = (count(&r.lhs, n), count(&r.rhs, n));
                cl.iter().zip(&cr).map(|(a, b)| BigRational::from_integer(BigInt::from(a - b))).collect()
            })
            .collect();
        Refuter {
            alphabet: n,
            invariants: null_space(&rows, n),
            first: components(n, p.relations().iter().map(|r| (r.lhs[0], r.rhs[0]))),
            last: components(n, p.relations().iter().map(|r| (*r.lhs.last().unwrap(), *r.rhs.last().unwrap()))),
        }
    }

    /// Number of independent linear invariants on letter counts.
    pub fn invariant_count(&self) -> usize {
        self.invariants.len()
    }

    /// A reason why `sys` has no solution, if one of the invariants provides it.
    pub fn refute(&self, sys: &WordSystem) -> Option<Refutation> {
        let Some(empty) = self.forced_empty(sys) else { return Some(Refutation::EmptyWord) };
        let Some(analysis) = self.analyse(sys, empty) else { return Some(Refutation::LetterCounts) };
        for (l, r) in &sys.equations {
            for (first, reason) in [(true, Refutation::FirstLetter), (false, Refutation::LastLetter)] {
                if let (Some(a), Some(b)) = (self.ends(l, &analysis, first), self.ends(r, &analysis, first)) {
                    if a.is_disjoint(&b) {
                        return Some(reason);
                    }
                }
            }
        }
        None
    }

    /// Unknowns forced to be empty because they sit on a side equal to the empty
    /// word, or `None` when that forces a nonempty word to be empty.
    fn forced_empty(&self, sys: &WordSystem) -> Option<Vec<bool>> {
        let mut empty = vec![false; sys.var_count()];
        loop {
            let mut changed = false;
            for (l, r) in &sys.equations {
                for (side, other) in [(l, r), (r, l)] {
                    let side_empty = side.iter().all(|pc| match pc {
                        Piece::Word(w) => w.is_empty(),
                        Piece::Var(v) => empty[*v],
                    });
                    if !side_empty {
                        continue;
                    }
                    for pc in other {
                        match pc {
                            Piece::Word(w) if !w.is_empty() => return None,
                            Piece::Var(v) if sys.nonempty[*v] => return None,
                            Piece::Var(v) if !empty[*v] => {
                                empty[*v] = true;
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !changed {
                return Some(empty);
            }
        }
    }

    fn linear_system(&self, sys: &WordSystem, empty: &[bool]) -> LinearSystem {
        let n = self.alphabet;
        let vars = sys.var_count();
        let mut lp = LinearSystem::new(vars * n);
        for (l, r) in &sys.equations {
            let mut constant = vec![0i64; n];
            let mut mult = vec![0i64; vars];
            for (side, sign) in [(l, 1i64), (r, -1i64)] {
                for pc in side {
                    match pc {
                        Piece::Word(w) => {
                            for &x in w {
                                constant[x as usize] += sign;
                            }
                        }
                        Piece::Var(v) => mult[*v] += sign,
                    }
                }
            }
            for f in &self.invariants {
                let mut row = vec![BigRational::zero(); vars * n];
                for v in 0..vars {
                    if mult[v] != 0 {
                        for k in 0..n {
                            row[v * n + k] += &f[k] * BigRational::from_integer(BigInt::from(mult[v]));
                        }
                    }
                }
                let rhs: BigRational = -(0..n)
                    .map(|k| &f[k] * BigRational::from_integer(BigInt::from(constant[k])))
                    .fold(BigRational::zero(), |a, b| a + b);
                if row.iter().all(Zero::is_zero) && rhs.is_zero() {
                    continue;
                }
                lp.equal_dense(row, rhs);
            }
        }
        for v in 0..vars {
            if empty[v] {
                for k in 0..n {
                    lp.equal(&[(v * n + k, 1)], 0);
                }
            } else if sys.nonempty[v] {
                let all: Vec<(usize, i64)> = (0..n).map(|k| (v * n + k, 1)).collect();
                lp.at_least(&all, 1);
            }
        }
        lp
    }

    fn analyse(&self, sys: &WordSystem, empty: Vec<bool>) -> Option<Analysis> {
        let n = self.alphabet;
        let lp = self.linear_system(sys, &empty);
        if !lp.feasible() {
            return None;
        }
        let allowed = (0..sys.var_count())
            .map(|v| {
                (0..n)
                    .map(|k| {
                        if empty[v] {
                            return false;
                        }
                        let mut probe = lp.clone();
                        probe.at_least(&[(v * n + k, 1)], 1);
                        probe.feasible()
                    })
                    .collect()
            })
            .collect();
        Some(Analysis { nonempty: sys.nonempty.clone(), empty, allowed })
    }

    /// Components that can hold the first (or last) letter of a side, or `None`
    /// when the side might be empty.
    fn ends(&self, side: &[Piece], a: &Analysis, first: bool) -> Option<BTreeSet<usize>> {
        let comp = if first { &self.first } else { &self.last };
        let mut out = BTreeSet::new();
        let pieces: Vec<&Piece> = if first { side.iter().collect() } else { side.iter().rev().collect() };
        for pc in pieces {
            match pc {
                Piece::Word(w) => {
                    if let Some(&x) = if first { w.first() } else { w.last() } {
                        out.insert(comp[x as usize]);
                        return Some(out);
                    }
                }
                Piece::Var(v) => {
                    if a.empty[*v] {
                        continue;
                    }
                    for (k, &ok) in a.allowed[*v].iter().enumerate() {
                        if ok {
                            out.insert(comp[k]);
                        }
                    }
                    if a.allowed[*v].iter().all(|&ok| !ok) {
                        // Only the empty word fits this unknown.
                        continue;
                    }
                    if a.nonempty[*v] {
                        return Some(out);
                    }
                }
            }
        }
        None
    }
}
