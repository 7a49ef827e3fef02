//! Workloads shared by the benchmarks.

use pathspace::symbolic::{Branch, LengthTerm, Ramp, SymbolicSequence, Term};
use pathspace::topology::{PathSequence, Window};
use pathspace::tychonoff::WSequence;
use pathspace::{fixtures, Coord, Degree, KGraph, ProductSpace};

/// `E_∞` with the sequence `x^n = e[1] e[2] … e[n]`.
pub fn einf_staircase() -> (KGraph, PathSequence) {
    let g = fixtures::cuntz_infinite();
    let ramp = Term::Ramp(Ramp { family: 0, n_coeff: 0, pos_coeff: 1, offset: 0 });
    let branch = Branch { length: LengthTerm::Affine { slope: 1, offset: 0 }, rules: Default::default(), default: Some(ramp) };
    let seq = g.path_sequence(0, SymbolicSequence::new(vec![branch]).unwrap()).unwrap();
    (g, seq)
}

/// The same staircase over ℕ-indexed factors.
pub fn factor_staircase() -> (ProductSpace, WSequence) {
    let space = ProductSpace::default();
    let ramp = Term::Ramp(Ramp { family: (), n_coeff: 0, pos_coeff: 1, offset: 0 });
    let branch: Branch<Coord> =
        Branch { length: LengthTerm::Affine { slope: 1, offset: 0 }, rules: Default::default(), default: Some(ramp) };
    let seq = space.w_sequence(SymbolicSequence::new(vec![branch]).unwrap()).unwrap();
    (space, seq)
}

pub fn ball(g: &KGraph, depth: u64, limit: Option<u64>) -> Window {
    Window::ball(g, 0, &Degree::splat(g.rank(), depth), limit).unwrap()
}
