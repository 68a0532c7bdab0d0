use super::*;
use crate::catalog;
use crate::rewriting::SearchCaps;
use crate::squier::SquierBall;

fn u_word(p: &Presentation, m: usize, n: usize) -> Word {
    let mut text = String::from("a");
    text.push_str(&" b".repeat(m));
    text.push_str(&" c".repeat(n));
    p.word(&text).unwrap()
}

#[test]
fn triviality_examples() {
    let p = catalog::z_bullet_z();
    let oracle = Oracle::new(&p, SearchCaps::default());
    let t = is_trivial_group(&oracle, &p.word("a1").unwrap());
    assert_eq!(t.verdict, Verdict::No);
    assert!(t.witness.unwrap().cells() > 0);

    let p = catalog::commuting();
    let oracle = Oracle::new(&p, SearchCaps::default());
    assert_eq!(is_trivial_group(&oracle, &p.word("a").unwrap()).verdict, Verdict::Yes);
    assert_eq!(is_trivial_group(&oracle, &p.word("a a b b").unwrap()).verdict, Verdict::Yes);
    assert_eq!(is_trivial_group(&oracle, &p.word("a b c").unwrap()).verdict, Verdict::No);
}

#[test]
fn z_bullet_z_graph_of_groups() {
    let p = catalog::z_bullet_z();
    let oracle = Oracle::new(&p, SearchCaps::default());
    let dec = Decomposer::new(&oracle);
    let gog = dec.decompose(&p.word("a1 b1").unwrap()).unwrap();
    let names: Vec<String> = gog.hyperplanes.iter().map(|h| h.id.render(&p)).collect();
    assert_eq!(
        names,
        ["[ε, a1 → a2, b1]", "[ε, a2 → a3, b1]", "[ε, a3 → a1, b1]", "[ε, a1 → a1 p, b1]"]
    );
    let spaces: Vec<String> = gog.vertices.iter().map(|v| v.space.render(&p)).collect();
    assert_eq!(spaces, ["a1 S(b1)", "a2 S(b1)", "a3 S(b1)"]);
    assert_eq!(gog.edges.len(), 4);
    assert_eq!((gog.edges[3].from, gog.edges[3].to), (0, 0));
    assert!(gog.vertices.iter().all(|v| v.trivial == Verdict::No));
    assert_eq!(gog.free_rank(), None);

    let simple = gog.presentation.simplified();
    assert!(simple.truncated);
    let family = simple.commutator_family().unwrap_or_else(|| panic!("{simple}"));
    assert!(family.bound >= 3, "{simple}");
}

#[test]
fn u_one_m_n_rank_law() {
    let p = catalog::commuting();
    let oracle = Oracle::new(&p, SearchCaps::default());
    for m in 1..=3 {
        for n in 1..=(4 - m) {
            let w = u_word(&p, m, n);
            let dec = Decomposer::new(&oracle);
            let gog = dec.decompose(&w).unwrap();
            assert!(gog.exact);
            assert_eq!(gog.hyperplanes.len(), 2 * m * n + m + n - 1, "m={m} n={n}");
            assert_eq!(gog.vertices.len(), m * n + m + n, "m={m} n={n}");
            assert_eq!(gog.free_rank(), Some(m * n));
            let chi = SquierBall::build(&p, &w, oracle.caps()).unwrap().euler_characteristic().unwrap();
            assert_eq!(1 - chi, (m * n) as i64);
            let simple = gog.presentation.simplified();
            assert!(simple.is_free() && simple.generators.len() == m * n, "{simple}");
            assert_eq!(vertex_spaces_match(&oracle, &gog), Some(true));
            assert!(technical_lemma_holds(&oracle, &gog));
        }
    }
}

#[test]
fn mirrored_decomposition_of_the_hexagon() {
    let p = catalog::commuting().mirrored();
    let oracle = Oracle::new(&p, SearchCaps::default());
    let w: Word = p.word("c b a").unwrap();
    let gog = Decomposer::new(&oracle).decompose(&w).unwrap();
    assert_eq!(gog.free_rank(), Some(1));
}

#[test]
fn single_vertex_has_rank_zero() {
    let p = Presentation::from_strs(&["a", "b"], &[("a", "b")]).unwrap();
    let oracle = Oracle::new(&p, SearchCaps::default());
    let gog = Decomposer::new(&oracle).decompose(&p.word("a").unwrap()).unwrap();
    // `D(a)` is trivial, so there is no left hyperplane and no vertex at all.
    assert!(gog.hyperplanes.is_empty());
    assert_eq!(gog.free_rank(), Some(0));
}
