//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use pathspace::kgraph::Edge;
use pathspace::paths::Path;
use pathspace::symbolic::{Branch, LengthTerm, Ramp, SymbolicSequence, SymbolicWord, Term};
use pathspace::tychonoff::Coord;
use pathspace::{KGraph, Morphism};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x7a7e_5eed;

/// `PATHSPACE_SEED`, or a fixed default.
pub fn seed() -> u64 {
    std::env::var("PATHSPACE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A directed graph with 1 to 5 vertices and at most 8 edges.
pub fn random_one_graph(rng: &mut impl Rng) -> KGraph {
    let n = rng.gen_range(1..=5);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let m = rng.gen_range(0..=8);
    let edges: Vec<(String, String, String)> = (0..m)
        .map(|j| (format!("e{j}"), names[rng.gen_range(0..n)].clone(), names[rng.gen_range(0..n)].clone()))
        .collect();
    let vs: Vec<&str> = names.iter().map(String::as_str).collect();
    let es: Vec<(&str, &str, &str)> = edges.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    KGraph::one_graph(&vs, &es).expect("random graph is well formed")
}

/// The first `n` letters of a 1-graph path (fewer if it is shorter).
pub fn letters(w: &Path, n: usize) -> Vec<Edge> {
    match w {
        Path::Finite(m) => m.edges().iter().take(n).copied().collect(),
        Path::Infinite(p) => {
            let cycle = p.cycle().edges();
            p.prefix().edges().iter().chain(cycle.iter().cycle()).take(n).copied().collect()
        }
    }
}

/// `y ≤ w` in a 1-graph, by comparing letters.
pub fn begins_with(w: &Path, y: &Morphism) -> bool {
    y.range() == w.range() && letters(w, y.edges().len()) == y.edges()
}

fn pt(rng: &mut impl Rng, max: u64) -> Coord {
    Coord::Pt(rng.gen_range(1..=max))
}

fn escaping(rng: &mut impl Rng) -> Term<Coord> {
    Term::Ramp(Ramp { family: (), n_coeff: rng.gen_range(1..=2), pos_coeff: rng.gen_range(0..=1), offset: rng.gen_range(0..=1) })
}

fn stable(rng: &mut impl Rng) -> Term<Coord> {
    match rng.gen_range(0..6) {
        0..=3 => Term::Fixed(pt(rng, 3)),
        4 => Term::Cycle(vec![pt(rng, 3), pt(rng, 3)]),
        _ => Term::Ramp(Ramp { family: (), n_coeff: 0, pos_coeff: 1, offset: 0 }),
    }
}

fn coordinate_term(rng: &mut impl Rng, escape: f64) -> Term<Coord> {
    if rng.gen_bool(escape) {
        escaping(rng)
    } else {
        stable(rng)
    }
}

fn random_length(rng: &mut impl Rng) -> LengthTerm {
    match rng.gen_range(0..3) {
        0 => LengthTerm::Const(rng.gen_range(0..=4)),
        1 => LengthTerm::Affine { slope: rng.gen_range(1..=2), offset: rng.gen_range(-1..=2) },
        _ => LengthTerm::Infinite,
    }
}

pub fn random_branch(rng: &mut impl Rng, length: LengthTerm) -> Branch<Coord> {
    let mut k = rng.gen_range(0..=4);
    if let LengthTerm::Const(c) = length {
        k = k.min(c);
    }
    let rules: BTreeMap<u64, Term<Coord>> = (1..=k).map(|i| (i, coordinate_term(rng, 0.25))).collect();
    let default = Some(coordinate_term(rng, 0.15));
    Branch { length, rules, default }
}

/// A sequence over ℕ-indexed factors with 1 to `max_branches` branches.
pub fn random_w_sequence(rng: &mut impl Rng, max_branches: usize) -> SymbolicSequence<Coord> {
    let b = rng.gen_range(1..=max_branches);
    let len = random_length(rng);
    let first = random_branch(rng, len);
    let mut branches = vec![first.clone()];
    for _ in 1..b {
        // Repeating the first branch keeps convergent multi-branch cases common.
        if rng.gen_bool(0.4) {
            branches.push(first.clone());
        } else {
            let len = random_length(rng);
            branches.push(random_branch(rng, len));
        }
    }
    SymbolicSequence::new(branches).expect("generated sequence is well formed")
}

/// The branch-0 limit, a perturbation of it, or an unrelated word.
pub fn random_target(rng: &mut impl Rng, seq: &SymbolicSequence<Coord>) -> SymbolicWord<Coord> {
    let limit = seq.branches()[0].limit();
    match rng.gen_range(0..4) {
        0 | 1 => limit,
        2 => perturb(rng, &limit),
        _ => {
            if rng.gen_bool(0.5) {
                let len = rng.gen_range(0..=3);
                SymbolicWord::finite((0..len).map(|_| pt(rng, 3)).collect())
            } else {
                SymbolicWord::eventually_periodic(vec![pt(rng, 3)], vec![pt(rng, 3)]).unwrap()
            }
        }
    }
}

pub fn perturb(rng: &mut impl Rng, w: &SymbolicWord<Coord>) -> SymbolicWord<Coord> {
    let len = w.length().unwrap_or(5);
    if len == 0 {
        return SymbolicWord::finite(vec![pt(rng, 3)]);
    }
    if rng.gen_bool(0.5) {
        w.truncate(rng.gen_range(0..len.min(4)))
    } else {
        let p = rng.gen_range(1..=len.min(4));
        let Some(Coord::Pt(j)) = w.letter_at(p) else { unreachable!("targets have no ∞") };
        let mut rules = w.rules().clone();
        rules.insert(p, Term::Fixed(Coord::Pt(j + 1)));
        SymbolicWord::new(w.length(), rules, w.default_term().cloned()).unwrap()
    }
}

fn coord(rng: &mut impl Rng) -> Coord {
    if rng.gen_bool(0.2) {
        Coord::Inf
    } else {
        pt(rng, 4)
    }
}

/// A point of `A` with small coordinates.
pub fn random_apoint(rng: &mut impl Rng) -> SymbolicWord<Coord> {
    let k = rng.gen_range(0..=5);
    let rules: BTreeMap<u64, Term<Coord>> = (1..=k).map(|i| (i, Term::Fixed(coord(rng)))).collect();
    let tail = match rng.gen_range(0..4) {
        0 => Term::Fixed(coord(rng)),
        1 => Term::Fixed(Coord::Inf),
        2 => Term::Cycle(vec![coord(rng), coord(rng)]),
        _ => Term::Ramp(Ramp { family: (), n_coeff: 0, pos_coeff: 1, offset: rng.gen_range(0..=2) }),
    };
    SymbolicWord::new(None, rules, Some(tail)).unwrap()
}

/// Transports a sequence over point indices to the edge family `e[…]`.
pub fn to_edges(seq: &SymbolicSequence<Coord>, family: u32) -> SymbolicSequence<Edge> {
    let letter = |c: &Coord| match *c {
        Coord::Pt(j) => Some(Edge { group: family, index: j }),
        Coord::Inf => None,
    };
    let branches = seq
        .branches()
        .iter()
        .map(|b| Branch {
            length: b.length,
            rules: b.rules.iter().map(|(&i, t)| (i, t.map(&letter, &|_| family).unwrap())).collect(),
            default: b.default.as_ref().map(|t| t.map(&letter, &|_| family).unwrap()),
        })
        .collect();
    SymbolicSequence::new(branches).unwrap()
}

pub fn word_to_edges(w: &SymbolicWord<Coord>, family: u32) -> SymbolicWord<Edge> {
    w.map(
        |c| match *c {
            Coord::Pt(j) => Some(Edge { group: family, index: j }),
            Coord::Inf => None,
        },
        |_| family,
    )
    .unwrap()
}
