//! The graph `Γ(P,w)` of hyperplanes and transversality, and the morphism `Φ`
//! sending a spherical diagram to the word read off the hyperplanes its loop
//! crosses.

use std::cmp::Ordering;

use super::{RaagGraph, RaagWord, Syllable};
use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::rewriting::{shortlex, Letter, Move, Presentation};
use crate::squier::{HyperplaneId, Squier, TransversalityGraph};

/// `A(P,w)` together with the hyperplane behind each generator.
pub struct Embedding<'a> {
    pub squier: Squier<'a>,
    pub transversality: TransversalityGraph,
    pub graph: RaagGraph,
}

/// Hyperplanes of the ball around `w` as generators, transverse pairs as edges.
pub fn build_apw<'a>(oracle: &'a Oracle, w: &[Letter]) -> Result<Embedding<'a>> {
    let squier = Squier::new(oracle, w)?;
    let transversality = squier.transversality_graph();
    let graph = RaagGraph::numbered("H", transversality.ids.len(), &transversality.prec)?;
    Ok(Embedding { squier, transversality, graph })
}

/// Crossing a hyperplane is positive when the edge goes from the shortlex-smaller
/// side of its relation to the larger one.
pub fn is_positive(p: &Presentation, mv: Move) -> bool {
    shortlex(p.input_side(mv.relation, mv.direction), p.output_side(mv.relation, mv.direction)) == Ordering::Less
}

impl<'a> Embedding<'a> {
    pub fn relabel(mut self, labels: Vec<String>) -> Result<Self> {
        self.graph = self.graph.with_labels(labels)?;
        Ok(self)
    }

    pub fn ids(&self) -> &[HyperplaneId] {
        &self.transversality.ids
    }

    /// `(label, rendered hyperplane)` for every generator.
    pub fn generator_table(&self) -> Vec<(String, String)> {
        let p = self.squier.oracle.presentation();
        self.ids().iter().enumerate().map(|(i, h)| (self.graph.label(i).to_string(), h.render(p))).collect()
    }

    /// Whether the graph (hence `A(P,w)`) is known exactly.
    pub fn exact(&self) -> bool {
        self.transversality.exact
    }

    /// The generator word of the loop traced by a spherical diagram, in normal form.
    pub fn phi(&self, d: &Diagram) -> Result<RaagWord> {
        let oracle = self.squier.oracle;
        let p = oracle.presentation();
        if !d.is_spherical() || d.top() != &self.squier.ball.base {
            return Err(Error::NotSpherical(p.render(&self.squier.ball.base)));
        }
        let words = d.words(p);
        let mut out = Vec::with_capacity(d.cells());
        for (v, &mv) in words.iter().zip(d.moves()) {
            let id = HyperplaneId::of_move(oracle, v, mv);
            if !id.exact {
                return Err(Error::InexactIdentity(id.render(p)));
            }
            let gen = self
                .squier
                .table
                .position(&id)
                .ok_or_else(|| Error::Invalid(format!("hyperplane {} lies outside the explored ball", id.render(p))))?;
            out.push(Syllable::new(gen, !is_positive(p, mv)));
        }
        Ok(self.graph.normal_form(&out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rewriting::{Direction, SearchCaps};

    fn zbz_labels() -> Vec<String> {
        ["A1", "A2", "A3", "B1", "B2", "B3", "C", "D"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn example_images() {
        let p = catalog::z_bullet_z();
        let oracle = Oracle::new(&p, SearchCaps::new(10, 500, 64).unwrap());
        let w = p.word("a1 b1").unwrap();
        let emb = build_apw(&oracle, &w).unwrap().relabel(zbz_labels()).unwrap();
        assert!(emb.exact());
        assert_eq!(emb.graph.edges().len(), 16);

        let fwd = Direction::Forward;
        let d1 = Diagram::new(&p, &w, vec![Move::new(0, 0, fwd), Move::new(0, 1, fwd), Move::new(0, 2, fwd)]).unwrap();
        let d2 = Diagram::new(&p, &w, vec![Move::new(1, 3, fwd), Move::new(1, 4, fwd), Move::new(1, 5, fwd)]).unwrap();
        let d3 = Diagram::new(&p, &w, vec![Move::new(0, 6, fwd), Move::new(1, 7, Direction::Backward)]).unwrap();
        let show = |d: &Diagram| emb.graph.render(&emb.phi(d).unwrap());
        assert_eq!(show(&d1), "A1 A2 A3^-1");
        assert_eq!(show(&d2), "B1 B2 B3^-1");
        assert_eq!(show(&d3), "C D^-1");
        assert_eq!(show(&Diagram::identity(&w)), "1");

        let prod = d1.product(&p, &d3).unwrap();
        let lhs = emb.phi(&prod).unwrap();
        let rhs = emb.graph.multiply(&emb.phi(&d1).unwrap(), &emb.phi(&d3).unwrap());
        assert_eq!(lhs, rhs);
        let inv = emb.phi(&d1.inverse()).unwrap();
        assert_eq!(inv, emb.graph.normal_form(&super::super::inverse_word(&emb.phi(&d1).unwrap())));
    }

    #[test]
    fn hexagon_gives_free_group() {
        let p = catalog::commuting();
        let oracle = Oracle::new(&p, SearchCaps::default());
        let emb = build_apw(&oracle, &p.word("a b c").unwrap()).unwrap();
        assert_eq!(emb.graph.len(), 6);
        assert!(emb.graph.edges().is_empty());
    }

    #[test]
    fn single_relation() {
        let p = Presentation::from_strs(&["a", "b"], &[("a", "b")]).unwrap();
        let oracle = Oracle::new(&p, SearchCaps::default());
        let emb = build_apw(&oracle, &p.word("a").unwrap()).unwrap();
        assert_eq!(emb.graph.len(), 1);
        assert!(emb.phi(&Diagram::identity(&[9])).is_err());
    }
}
