//! Small presentations used throughout the tests, the acceptance suite and the
//! command-line examples.

use crate::diagrams::Diagram;
use crate::rewriting::{Direction, Move, Presentation};

fn build(letters: &[&str], relations: &[(&str, &str)]) -> Presentation {
    Presentation::from_strs(letters, relations).expect("catalog presentations are well formed")
}

/// Three commuting letters: `⟨a,b,c | ab=ba, ac=ca, bc=cb⟩`.
pub fn commuting() -> Presentation {
    build(&["a", "b", "c"], &[("a b", "b a"), ("a c", "c a"), ("b c", "c b")])
}

/// The presentation whose diagram group over `a1 b1` is `Z • Z`.
pub fn z_bullet_z() -> Presentation {
    build(
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
}

/// `⟨a,b,p,q | a=ap, b=pb, p=q⟩`, whose Squier complex over `ab` is not special.
pub fn non_special() -> Presentation {
    build(&["a", "b", "p", "q"], &[("a", "a p"), ("b", "p b"), ("p", "q")])
}

/// `⟨a,b,c | a=b, b=c, c=a⟩`: the diagram group over `a` is infinite cyclic.
pub fn triangle() -> Presentation {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
}

/// `⟨x,a,b,c | x=xa, a=b, b=c, c=a⟩`, infinite dimensional over `x`.
pub fn infinite_dimensional() -> Presentation {
    build(&["x", "a", "b", "c"], &[("x", "x a"), ("a", "b"), ("b", "c"), ("c", "a")])
}

/// The generators `Δ₁, Δ₂, Δ₃` of `D(P_Z•Z, a1 b1)`: the `a`-triangle, the
/// `b`-triangle, and the loop that grows a `p` on the left and absorbs it on
/// the right.
pub fn z_bullet_z_generators(p: &Presentation) -> [Diagram; 3] {
    let w = p.word("a1 b1").expect("letters of z_bullet_z");
    let fwd = Direction::Forward;
    let d = |moves: Vec<Move>| Diagram::new(p, &w, moves).expect("generators are spherical");
    [
        d(vec![Move::new(0, 0, fwd), Move::new(0, 1, fwd), Move::new(0, 2, fwd)]),
        d(vec![Move::new(1, 3, fwd), Move::new(1, 4, fwd), Move::new(1, 5, fwd)]),
        d(vec![Move::new(0, 6, fwd), Move::new(1, 7, Direction::Backward)]),
    ]
}
