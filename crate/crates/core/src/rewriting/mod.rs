//! Semigroup presentations, positioned rewrite moves, bounded class enumeration
//! and the three-valued equality oracle.

mod class;
mod confluence;

pub(crate) use class::equal_with;
pub use class::{enumerate_class, equal_mod_p, ClassEnumeration, Equality};
pub use confluence::Convergent;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Letters are indices into the alphabet of a [`Presentation`], in declaration order.
pub type Letter = u32;

/// A word is a finite sequence of letters. The empty word only shows up as a context.
pub type Word = Vec<Letter>;

/// Length first, then lexicographic by letter index.
pub fn shortlex(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Concatenate any number of word slices.
pub fn concat(parts: &[&[Letter]]) -> Word {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        out.extend_from_slice(p);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// Replace the left-hand side by the right-hand side.
    Forward,
    /// Replace the right-hand side by the left-hand side.
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fwd" | "forward" => Some(Direction::Forward),
            "bwd" | "backward" => Some(Direction::Backward),
            _ => None,
        }
    }
}

/// A single positioned rewrite: at `offset`, replace one side of relation `relation`
/// by the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub offset: usize,
    pub relation: usize,
    pub direction: Direction,
}

impl Move {
    pub fn new(offset: usize, relation: usize, direction: Direction) -> Self {
        Move { offset, relation, direction }
    }

    /// The move that undoes this one on the rewritten word.
    pub fn reversed(self) -> Self {
        Move { direction: self.direction.flip(), ..self }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.offset, self.relation, self.direction.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

/// Three-valued answer. `Unknown` means a search cap was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn negate(self) -> Self {
        match self {
            Verdict::Yes => Verdict::No,
            Verdict::No => Verdict::Yes,
            Verdict::Unknown => Verdict::Unknown,
        }
    }

    /// Three-valued conjunction.
    pub fn and(self, other: Verdict) -> Self {
        match (self, other) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Yes, Verdict::Yes) => Verdict::Yes,
            _ => Verdict::Unknown,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "Yes",
            Verdict::No => "No",
            Verdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Bounds for every breadth-first exploration of a congruence class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    pub max_word_len: usize,
    pub max_class_size: usize,
    pub max_bfs_depth: usize,
}

impl SearchCaps {
    pub fn new(max_word_len: usize, max_class_size: usize, max_bfs_depth: usize) -> Result<Self> {
        if max_word_len == 0 || max_class_size == 0 || max_bfs_depth == 0 {
            return Err(Error::Invalid("search caps must be positive".into()));
        }
        Ok(SearchCaps { max_word_len, max_class_size, max_bfs_depth })
    }
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps { max_word_len: 10, max_class_size: 500, max_bfs_depth: 64 }
    }
}

/// A semigroup presentation: an ordered alphabet and an ordered list of relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    letters: Vec<String>,
    index: HashMap<String, Letter>,
    relations: Vec<Relation>,
}

impl Presentation {
    /// Build a presentation, enforcing the orientation convention: no relation may
    /// appear twice (in either orientation), sides are nonempty and distinct.
    pub fn new(letters: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, name) in letters.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::Invalid(format!("bad letter name `{name}`")));
            }
            if index.insert(name.clone(), i as Letter).is_some() {
                return Err(Error::Invalid(format!("letter `{name}` declared twice")));
            }
        }
        for (i, r) in relations.iter().enumerate() {
            if r.lhs.is_empty() || r.rhs.is_empty() {
                return Err(Error::EmptySide(i));
            }
            if r.lhs == r.rhs {
                return Err(Error::TrivialRelation(i));
            }
            if let Some(&bad) = r.lhs.iter().chain(&r.rhs).find(|&&l| l as usize >= letters.len()) {
                return Err(Error::UnknownLetter(format!("#{bad}")));
            }
            for (j, s) in relations[..i].iter().enumerate() {
                if (s.lhs == r.lhs && s.rhs == r.rhs) || (s.lhs == r.rhs && s.rhs == r.lhs) {
                    return Err(Error::DuplicateRelation { first: j, second: i });
                }
            }
        }
        Ok(Presentation { letters, index, relations })
    }

    /// Convenience constructor from string data, e.g. `from_strs(&["a","b"], &[("a b","b a")])`.
    pub fn from_strs(letters: &[&str], relations: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = letters.iter().map(|s| s.to_string()).collect();
        let index: HashMap<String, Letter> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i as Letter)).collect();
        let parse = |s: &str| -> Result<Word> {
            s.split_whitespace()
                .map(|t| index.get(t).copied().ok_or_else(|| Error::UnknownLetter(t.to_string())))
                .collect()
        };
        let rels = relations
            .iter()
            .map(|(l, r)| Ok(Relation { lhs: parse(l)?, rhs: parse(r)? }))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(names, rels)
    }

    /// Parse the line-oriented file format: `# comment`, `letters: s1 s2 ...`,
    /// `rel: u1 u2 ... = v1 v2 ...`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters: Vec<String> = Vec::new();
        let mut raw_rels: Vec<(usize, String, String)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("letters:") {
                letters.extend(rest.split_whitespace().map(str::to_string));
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let mut sides = rest.split('=');
                let (l, r) = match (sides.next(), sides.next(), sides.next()) {
                    (Some(l), Some(r), None) => (l, r),
                    _ => {
                        return Err(Error::Syntax {
                            line: line_no,
                            msg: "expected exactly one `=` in relation".into(),
                        })
                    }
                };
                raw_rels.push((line_no, l.trim().to_string(), r.trim().to_string()));
            } else {
                return Err(Error::Syntax {
                    line: line_no,
                    msg: format!("unrecognised line `{line}`"),
                });
            }
        }
        if letters.is_empty() {
            return Err(Error::Syntax { line: 0, msg: "no `letters:` line".into() });
        }
        let index: HashMap<&str, Letter> =
            letters.iter().enumerate().map(|(i, n)| (n.as_str(), i as Letter)).collect();
        let mut rels = Vec::new();
        for (line, l, r) in &raw_rels {
            let word = |s: &str| -> Result<Word> {
                s.split_whitespace()
                    .map(|t| {
                        index.get(t).copied().ok_or_else(|| Error::Syntax {
                            line: *line,
                            msg: format!("unknown letter `{t}`"),
                        })
                    })
                    .collect()
            };
            rels.push(Relation { lhs: word(l)?, rhs: word(r)? });
        }
        Presentation::new(letters, rels).map_err(|e| match e {
            Error::DuplicateRelation { second, .. } | Error::TrivialRelation(second) | Error::EmptySide(second) => {
                Error::Syntax { line: raw_rels[second].0, msg: e.to_string() }
            }
            other => other,
        })
    }

    /// Serialize back to the file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("letters: {}\n", self.letters.join(" "));
        for r in &self.relations {
            out.push_str(&format!("rel: {} = {}\n", self.render(&r.lhs), self.render(&r.rhs)));
        }
        out
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, i: usize) -> &Relation {
        &self.relations[i]
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn letter_name(&self, l: Letter) -> &str {
        &self.letters[l as usize]
    }

    /// Parse a whitespace-separated word. The empty string gives the empty word.
    pub fn word(&self, text: &str) -> Result<Word> {
        text.split_whitespace().map(|t| self.letter(t)).collect()
    }

    /// Like [`Presentation::word`] but rejects the empty word.
    pub fn nonempty_word(&self, text: &str) -> Result<Word> {
        let w = self.word(text)?;
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(w)
    }

    /// Space-separated letter names; the empty word renders as `ε`.
    pub fn render(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        w.iter().map(|&l| self.letter_name(l)).collect::<Vec<_>>().join(" ")
    }

    /// The side a move in direction `dir` consumes.
    pub fn input_side(&self, relation: usize, dir: Direction) -> &[Letter] {
        let r = &self.relations[relation];
        match dir {
            Direction::Forward => &r.lhs,
            Direction::Backward => &r.rhs,
        }
    }

    /// The side a move in direction `dir` produces.
    pub fn output_side(&self, relation: usize, dir: Direction) -> &[Letter] {
        self.input_side(relation, dir.flip())
    }

    /// Every distinct relation side, in relation order (lhs before rhs).
    pub fn sides(&self) -> Vec<Word> {
        let mut out: Vec<Word> = Vec::new();
        for r in &self.relations {
            for s in [&r.lhs, &r.rhs] {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// The presentation with every word read backwards. Used for right/left symmetry.
    pub fn mirrored(&self) -> Presentation {
        let rels = self
            .relations
            .iter()
            .map(|r| Relation {
                lhs: r.lhs.iter().rev().copied().collect(),
                rhs: r.rhs.iter().rev().copied().collect(),
            })
            .collect();
        Presentation { letters: self.letters.clone(), index: self.index.clone(), relations: rels }
    }

    /// Apply `mv` to `w`, or `None` if the consumed side does not occur at the offset.
    pub fn apply(&self, w: &[Letter], mv: Move) -> Option<Word> {
        let input = self.input_side(mv.relation, mv.direction);
        let end = mv.offset.checked_add(input.len())?;
        if end > w.len() || &w[mv.offset..end] != input {
            return None;
        }
        let output = self.output_side(mv.relation, mv.direction);
        Some(concat(&[&w[..mv.offset], output, &w[end..]]))
    }

    /// All moves applicable to `w`, ordered by (offset, relation index, direction).
    pub fn moves(&self, w: &[Letter]) -> Vec<Move> {
        let mut out = Vec::new();
        for offset in 0..w.len() {
            for (ri, r) in self.relations.iter().enumerate() {
                for (dir, side) in [(Direction::Forward, &r.lhs), (Direction::Backward, &r.rhs)] {
                    if w[offset..].starts_with(side) {
                        out.push(Move::new(offset, ri, dir));
                    }
                }
            }
        }
        out
    }

    /// One-step rewrites of `w` with their results.
    pub fn one_step_rewrites(&self, w: &[Letter]) -> Vec<(Move, Word)> {
        self.moves(w)
            .into_iter()
            .map(|m| {
                let r = self.apply(w, m).expect("listed move applies");
                (m, r)
            })
            .collect()
    }

    /// `[w] ≠ {w}` exactly when some relation side occurs in `w`.
    pub fn has_nontrivial_class(&self, w: &[Letter]) -> bool {
        (0..w.len()).any(|o| {
            self.relations.iter().any(|r| w[o..].starts_with(&r.lhs) || w[o..].starts_with(&r.rhs))
        })
    }

    /// Replay a sequence of moves from `w`, returning every intermediate word
    /// (including `w` itself and the final word).
    pub fn replay(&self, w: &[Letter], moves: &[Move]) -> Result<Vec<Word>> {
        let mut words = vec![w.to_vec()];
        for (i, &m) in moves.iter().enumerate() {
            let next = self.apply(words.last().unwrap(), m).ok_or_else(|| Error::BadMove {
                index: i,
                msg: format!("{} on `{}`", m, self.render(words.last().unwrap())),
            })?;
            words.push(next);
        }
        Ok(words)
    }
}
