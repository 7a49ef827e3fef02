//! Laws of finite and infinite paths: coherence of prefixes, products and
//! the independence of the product formula from the auxiliary degree.

mod common;

use pathspace::fixtures;
use pathspace::{Degree, KGraph, Morphism, Path};

struct Case {
    name: &'static str,
    g: KGraph,
    bound: Degree,
    probe: Degree,
    limit: Option<u64>,
}

fn corpus() -> Vec<Case> {
    let case = |name, g, bound: &[u64], probe: &[u64], limit| Case {
        name,
        g,
        bound: Degree::new(bound.to_vec()),
        probe: Degree::new(probe.to_vec()),
        limit,
    };
    vec![
        case("e2", fixtures::cuntz(2), &[2], &[5], None),
        case("e-inf", fixtures::cuntz_infinite(), &[2], &[4], Some(3)),
        case("square-2graph", fixtures::square_2graph(), &[1, 1], &[2, 2], None),
        case("square-2x2", fixtures::twisted_2graph(), &[1, 1], &[2, 2], None),
    ]
}

fn paths(c: &Case) -> Vec<Path> {
    c.g.vertex_ids().flat_map(|v| c.g.enumerate_paths(v, &c.bound, c.limit).unwrap()).collect()
}

/// Degrees below `probe` at which `w` has a prefix.
fn reachable(w: &Path, probe: &Degree) -> Vec<Degree> {
    let n = w.extdegree();
    probe.down_set().into_iter().filter(|m| n.contains(m).unwrap()).collect()
}

#[test]
fn prefixes_are_coherent() {
    for c in corpus() {
        for w in paths(&c) {
            let ms = reachable(&w, &c.probe);
            for m in &ms {
                let wm = c.g.prefix(&w, m).unwrap();
                assert_eq!(wm.degree(), m);
                assert!(c.g.is_path_prefix(&wm, &w).unwrap(), "{}", c.name);
                for n in ms.iter().filter(|n| m.leq(n).unwrap()) {
                    let wn = c.g.prefix(&w, n).unwrap();
                    assert!(c.g.is_prefix(&wm, &wn).unwrap(), "{}: {} at {m} ≤ {n}", c.name, c.g.display_path(&w));
                    assert_eq!(c.g.compose(&wm, &c.g.segment(&w, m, n).unwrap()).unwrap(), wn);
                }
            }
        }
    }
}

#[test]
fn a_path_is_its_prefix_times_its_tail() {
    for c in corpus() {
        for w in paths(&c) {
            for m in reachable(&w, &c.bound) {
                let rebuilt = c.g.product(&c.g.prefix(&w, &m).unwrap(), &c.g.tail(&w, &m).unwrap()).unwrap();
                assert!(c.g.path_eq(&rebuilt, &w).unwrap(), "{}: {} at {m}", c.name, c.g.display_path(&w));
            }
        }
    }
}

fn short(c: &Case) -> Vec<Morphism> {
    c.g.morphisms_up_to(&Degree::splat(c.g.rank(), 1), None, c.limit).unwrap()
}

#[test]
fn products_are_associative() {
    for c in corpus() {
        let ys = short(&c);
        for w in paths(&c) {
            for y2 in ys.iter().filter(|y| y.source() == w.range()) {
                for y1 in ys.iter().filter(|y| y.source() == y2.range()) {
                    let nested = c.g.product(y1, &c.g.product(y2, &w).unwrap()).unwrap();
                    let flat = c.g.product(&c.g.compose(y1, y2).unwrap(), &w).unwrap();
                    assert!(c.g.path_eq(&nested, &flat).unwrap(), "{}", c.name);
                }
            }
        }
    }
}

#[test]
fn product_prefix_is_independent_of_the_auxiliary_degree() {
    for c in corpus() {
        let ys = short(&c);
        for w in paths(&c) {
            let ps = reachable(&w, &c.bound);
            for y in ys.iter().filter(|y| y.source() == w.range()) {
                let yw = c.g.product(y, &w).unwrap();
                for n in reachable(&yw, &y.degree().add(&c.bound).unwrap()) {
                    let direct = c.g.prefix(&yw, &n).unwrap();
                    let mut used = 0;
                    for p in &ps {
                        if !n.leq(&y.degree().add(p).unwrap()).unwrap() {
                            continue;
                        }
                        used += 1;
                        let via = c.g.product_prefix_via(y, &w, &n, p).unwrap();
                        assert_eq!(via, direct, "{}: y = {}, w = {}, n = {n}, p = {p}", c.name, c.g.display(y), c.g.display_path(&w));
                    }
                    assert!(used > 0);
                }
            }
        }
    }
}

#[test]
fn enumerated_paths_are_pairwise_distinct() {
    for c in corpus() {
        let ws = paths(&c);
        for (i, a) in ws.iter().enumerate() {
            for b in &ws[i + 1..] {
                assert!(!c.g.path_eq(a, b).unwrap(), "{}: {} = {}", c.name, c.g.display_path(a), c.g.display_path(b));
            }
        }
    }
}

#[test]
fn literals_round_trip() {
    for c in corpus() {
        for w in paths(&c) {
            let back = c.g.parse_path(&c.g.display_path(&w)).unwrap();
            assert!(c.g.path_eq(&back, &w).unwrap(), "{}: {}", c.name, c.g.display_path(&w));
        }
    }
}

#[test]
fn canonical_forms_are_equal_and_idempotent() {
    let mut rng = common::rng(12);
    for _ in 0..60 {
        let g = common::random_one_graph(&mut rng);
        for v in g.vertex_ids() {
            for w in g.enumerate_paths(v, &Degree::new(vec![3]), None).unwrap() {
                let Path::Infinite(p) = &w else { continue };
                // A non-canonical spelling of the same path: one more unrolling.
                let longer = g.compose(p.prefix(), p.cycle()).unwrap();
                let doubled = g.compose(p.cycle(), p.cycle()).unwrap();
                let other = g.infinite_path(longer, doubled).unwrap();
                assert!(g.path_eq(&other, &w).unwrap());
                let c = g.canonical_path(&other).unwrap();
                assert_eq!(c, w, "{}", g.display_path(&other));
                assert_eq!(g.canonical_path(&c).unwrap(), c);
                for i in 1..=12u64 {
                    let expected = common::letters(&w, i as usize).get(i as usize - 1).copied();
                    assert_eq!(g.edge_at(&other, i).unwrap(), expected);
                }
            }
        }
    }
}
