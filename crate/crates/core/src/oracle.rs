//! Word-level questions about one presentation under fixed caps, with caching.
//!
//! The empty word is accepted everywhere here: it is alone in its class, which is
//! what contexts of hyperplanes need.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::certify::{Refutation, Refuter, WordSystem};
use crate::rewriting::{
    enumerate_class, equal_with, ClassEnumeration, Convergent, Equality, Letter, Presentation, SearchCaps, Verdict,
    Word,
};

/// A class representative together with whether it is certainly the
/// shortlex-least member of the class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canonical {
    pub word: Word,
    pub exact: bool,
}

pub struct Oracle {
    p: Presentation,
    caps: SearchCaps,
    convergent: Option<Convergent>,
    refuter: Refuter,
    classes: Mutex<HashMap<Word, Arc<ClassEnumeration>>>,
    canon: Mutex<HashMap<Word, Canonical>>,
}

impl Oracle {
    pub fn new(p: &Presentation, caps: SearchCaps) -> Self {
        Oracle {
            p: p.clone(),
            caps,
            convergent: Convergent::check(p),
            refuter: Refuter::new(p),
            classes: Mutex::new(HashMap::new()),
            canon: Mutex::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.p
    }

    pub fn caps(&self) -> SearchCaps {
        self.caps
    }

    /// Whether relations oriented by shortlex already form a convergent system.
    pub fn is_convergent(&self) -> bool {
        self.convergent.is_some()
    }

    pub fn refute(&self, sys: &WordSystem) -> Option<Refutation> {
        self.refuter.refute(sys)
    }

    /// Bounded enumeration of `[w]`, shared between callers.
    pub fn class(&self, w: &[Letter]) -> Arc<ClassEnumeration> {
        if let Some(c) = self.classes.lock().unwrap().get(w) {
            return c.clone();
        }
        let c = Arc::new(enumerate_class(&self.p, w, self.caps));
        self.classes.lock().unwrap().insert(w.to_vec(), c.clone());
        c
    }

    /// Shortlex-least representative of `[w]`.
    pub fn canonical(&self, w: &[Letter]) -> Canonical {
        if w.is_empty() {
            return Canonical { word: Vec::new(), exact: true };
        }
        if let Some(c) = self.canon.lock().unwrap().get(w) {
            return c.clone();
        }
        let result = match &self.convergent {
            Some(sys) => Canonical { word: sys.normal_form(w).0, exact: true },
            None => {
                let class = self.class(w);
                Canonical { word: class.least().clone(), exact: class.complete }
            }
        };
        self.canon.lock().unwrap().insert(w.to_vec(), result.clone());
        result
    }

    /// Equality modulo the presentation, with a derivation when `Yes`.
    pub fn equal(&self, w1: &[Letter], w2: &[Letter]) -> Equality {
        if w1.is_empty() || w2.is_empty() {
            let same = w1.is_empty() && w2.is_empty();
            return Equality { verdict: Verdict::from_bool(same), derivation: same.then(Vec::new) };
        }
        let (c1, c2) = (self.canonical(w1), self.canonical(w2));
        if c1.word == c2.word {
            return equal_with(&self.p, w1, w2, self.caps, self.convergent.as_ref());
        }
        if c1.exact && c2.exact {
            return Equality { verdict: Verdict::No, derivation: None };
        }
        equal_with(&self.p, w1, w2, self.caps, self.convergent.as_ref())
    }

    pub fn equal_verdict(&self, w1: &[Letter], w2: &[Letter]) -> Verdict {
        if w1.is_empty() || w2.is_empty() {
            return Verdict::from_bool(w1.is_empty() && w2.is_empty());
        }
        let (c1, c2) = (self.canonical(w1), self.canonical(w2));
        if c1.word == c2.word {
            return Verdict::Yes;
        }
        if c1.exact && c2.exact {
            return Verdict::No;
        }
        self.equal(w1, w2).verdict
    }

    /// `[w] ≠ {w}` holds exactly when some relation side occurs in `w`.
    pub fn has_nontrivial_class(&self, w: &[Letter]) -> bool {
        self.p.has_nontrivial_class(w)
    }
}
