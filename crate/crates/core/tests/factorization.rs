//! Unique factorization and the prefix order, exhaustively on small fixtures.

mod common;

use pathspace::fixtures;
use pathspace::{Degree, KGraph, Morphism};

fn corpus() -> Vec<(&'static str, KGraph, Degree)> {
    vec![
        ("e2", fixtures::cuntz(2), Degree::new(vec![4])),
        ("e-inf", fixtures::cuntz_infinite(), Degree::new(vec![3])),
        ("square-2graph", fixtures::square_2graph(), Degree::new(vec![2, 2])),
        ("square-2x2", fixtures::twisted_2graph(), Degree::new(vec![2, 2])),
        ("bipartite-2graph", fixtures::bipartite_2graph(), Degree::new(vec![2, 2])),
        ("square-table", fixtures::square_table(), Degree::new(vec![2, 2])),
        ("cube-3graph", fixtures::cube_3graph(), Degree::new(vec![1, 1, 1])),
    ]
}

fn morphisms(g: &KGraph, bound: &Degree) -> Vec<Morphism> {
    g.morphisms_up_to(bound, None, g.has_infinite_families().then_some(3)).unwrap()
}

fn clamp(bound: &Degree, c: u64) -> Degree {
    bound.meet(&Degree::splat(bound.rank(), c)).unwrap()
}

#[test]
fn factorize_then_compose_is_the_identity() {
    for (name, g, bound) in corpus() {
        for l in morphisms(&g, &bound) {
            for m in l.degree().down_set() {
                let (head, tail) = g.factorize(&l, &m).unwrap();
                assert_eq!(head.degree(), &m, "{name}: head degree");
                assert_eq!(tail.degree(), &l.degree().sub(&m).unwrap(), "{name}: tail degree");
                assert_eq!(g.compose(&head, &tail).unwrap(), l, "{name}: {} at {m}", g.display(&l));
            }
        }
    }
}

#[test]
fn factorization_of_a_composite_recovers_its_parts() {
    for (name, g, bound) in corpus() {
        let all = morphisms(&g, &bound);
        for a in &all {
            for b in &all {
                if a.source() != b.range() || !a.degree().add(b.degree()).unwrap().leq(&bound).unwrap() {
                    continue;
                }
                let ab = g.compose(a, b).unwrap();
                assert_eq!(g.factorize(&ab, a.degree()).unwrap(), (a.clone(), b.clone()), "{name}");
            }
        }
    }
}

#[test]
fn composition_is_associative() {
    for (name, g, bound) in corpus() {
        let small = morphisms(&g, &clamp(&bound, 1));
        let fits = |ms: [&Morphism; 3]| ms.iter().try_fold(Degree::zero(g.rank()), |acc, m| acc.add(m.degree())).unwrap().leq(&bound).unwrap();
        for a in &small {
            for b in small.iter().filter(|b| b.range() == a.source()) {
                for c in small.iter().filter(|c| c.range() == b.source() && fits([a, b, c])) {
                    let left = g.compose(&g.compose(a, b).unwrap(), c).unwrap();
                    let right = g.compose(a, &g.compose(b, c).unwrap()).unwrap();
                    assert_eq!(left, right, "{name}");
                }
            }
        }
    }
}

#[test]
fn prefix_order_is_a_partial_order() {
    for (name, g, bound) in corpus() {
        let all = morphisms(&g, &clamp(&bound, 2));
        let le: Vec<Vec<bool>> = all.iter().map(|a| all.iter().map(|b| g.is_prefix(a, b).unwrap()).collect()).collect();
        for i in 0..all.len() {
            assert!(le[i][i], "{name}: reflexivity");
            for j in 0..all.len() {
                if le[i][j] && le[j][i] {
                    assert_eq!(i, j, "{name}: antisymmetry");
                }
                if !le[i][j] {
                    continue;
                }
                for (jk, ik) in le[j].iter().zip(&le[i]) {
                    assert!(!jk || *ik, "{name}: transitivity");
                }
            }
        }
    }
}

#[test]
fn prefix_means_a_factor_exists() {
    for (name, g, bound) in corpus() {
        let all = morphisms(&g, &clamp(&bound, 2));
        for a in &all {
            for b in &all {
                let witnessed = all.iter().any(|t| t.range() == a.source() && g.compose(a, t).ok().as_ref() == Some(b));
                assert_eq!(g.is_prefix(a, b).unwrap(), witnessed, "{name}: {} ≤ {}", g.display(a), g.display(b));
            }
        }
    }
}

#[test]
fn vertices_are_identities() {
    for (name, g, bound) in corpus() {
        for l in morphisms(&g, &bound) {
            assert_eq!(g.compose(&g.vertex(l.range()), &l).unwrap(), l, "{name}");
            assert_eq!(g.compose(&l, &g.vertex(l.source())).unwrap(), l, "{name}");
        }
    }
}

#[test]
fn literals_round_trip() {
    for (name, g, bound) in corpus() {
        for l in morphisms(&g, &bound) {
            assert_eq!(g.parse_morphism(&g.display(&l)).unwrap(), l, "{name}");
        }
    }
}

#[test]
fn random_one_graphs_factor_by_splitting_words() {
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let g = common::random_one_graph(&mut rng);
        for l in g.morphisms_up_to(&Degree::new(vec![4]), None, None).unwrap() {
            for i in 0..=l.edges().len() {
                let (head, tail) = g.factorize(&l, &Degree::new(vec![i as u64])).unwrap();
                assert_eq!(head.edges(), &l.edges()[..i]);
                assert_eq!(tail.edges(), &l.edges()[i..]);
            }
        }
    }
}
