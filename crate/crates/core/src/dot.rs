//! Graphviz text for balls, transversality graphs and diagrams.
//!
//! Output depends only on the input objects, so repeated runs are byte-identical.

use std::fmt::Write;

use crate::diagrams::Diagram;
use crate::rewriting::Presentation;
use crate::squier::{HyperplaneTable, SquierBall, TransversalityGraph};

const PALETTE: [&str; 10] =
    ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"];

fn color(class: usize) -> &'static str {
    PALETTE[class % PALETTE.len()]
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

fn word_label(p: &Presentation, w: &[u32]) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        p.render(w)
    }
}

/// The 1-skeleton, with edges coloured by hyperplane class when a table is given.
pub fn squier_ball(p: &Presentation, ball: &SquierBall, table: Option<&HyperplaneTable>) -> String {
    let mut out = String::from("graph squier {\n");
    for (i, v) in ball.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label={}];", quote(&word_label(p, v)));
    }
    for (k, e) in ball.edges.iter().enumerate() {
        let mut attrs = format!("label={}", quote(&e.mv.to_string()));
        if let Some(t) = table {
            let _ = write!(attrs, ", color={}", color(t.of_edge[k]));
        }
        let _ = writeln!(out, "  v{} -- v{} [{attrs}];", e.from, e.to);
    }
    out.push_str("}\n");
    out
}

/// `≺` pairs as directed edges; undecided pairs dashed.
pub fn transversality(p: &Presentation, g: &TransversalityGraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph transversality {\n");
    for (i, h) in g.ids.iter().enumerate() {
        let label = match labels {
            Some(l) => format!("{}\\n{}", l[i], h.render(p)),
            None => h.render(p),
        };
        let _ = writeln!(out, "  h{i} [label={}, color={}];", quote(&label), color(i));
    }
    for &(i, j) in &g.prec {
        let _ = writeln!(out, "  h{i} -> h{j};");
    }
    for &(i, j) in &g.unknown {
        let _ = writeln!(out, "  h{i} -> h{j} [style=dashed, dir=none];");
    }
    out.push_str("}\n");
    out
}

/// Points of the planar picture as nodes, wires as labelled edges, and one box
/// node per cell attached to its left and right corners.
pub fn diagram(p: &Presentation, d: &Diagram) -> String {
    let planar = d.planar(p);
    let mut out = String::from("digraph diagram {\n  rankdir=LR;\n");
    for i in 0..planar.points {
        let _ = writeln!(out, "  p{i} [shape=point];");
    }
    for &(a, b, letter) in &planar.edges {
        let _ = writeln!(out, "  p{a} -> p{b} [label={}];", quote(p.letter_name(letter)));
    }
    for (k, c) in planar.cells.iter().enumerate() {
        let _ = writeln!(
            out,
            "  c{k} [shape=box, label={}, color={}];",
            quote(&format!("{} {}", c.relation, c.direction.as_str())),
            color(c.relation)
        );
        let _ = writeln!(out, "  p{} -> c{k} [style=dotted, arrowhead=none];", c.left);
        let _ = writeln!(out, "  c{k} -> p{} [style=dotted, arrowhead=none];", c.right);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::oracle::Oracle;
    use crate::rewriting::SearchCaps;
    use crate::squier::Squier;

    #[test]
    fn hexagon_is_a_six_cycle() {
        let p = catalog::commuting();
        let w = p.word("a b c").unwrap();
        let ball = SquierBall::build(&p, &w, SearchCaps::default()).unwrap();
        let dot = squier_ball(&p, &ball, None);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert_eq!(dot.matches("[label=").count(), 12);
        assert_eq!(dot, squier_ball(&p, &ball, None));
    }

    #[test]
    fn k44_is_bipartite() {
        let p = catalog::z_bullet_z();
        let oracle = Oracle::new(&p, SearchCaps::default());
        let s = Squier::new(&oracle, &p.word("a1 b1").unwrap()).unwrap();
        let dot = transversality(&p, &s.transversality_graph(), None);
        assert_eq!(dot.matches(" -> ").count(), 16);
    }

    #[test]
    fn identity_diagram_is_a_path() {
        let p = catalog::commuting();
        let d = Diagram::identity(&p.word("a b").unwrap());
        let dot = diagram(&p, &d);
        assert_eq!(dot.matches("shape=point").count(), 3);
        assert_eq!(dot.matches("p0 -> p1").count() + dot.matches("p1 -> p2").count(), 2);
        assert!(!dot.contains("shape=box"));
    }
}
