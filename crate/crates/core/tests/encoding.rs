//! The prefix-set encoding into `2^Y`: injectivity, decoding, the window
//! metric, cylinder algebra and sequential closedness.

mod common;

use pathspace::fixtures;
use pathspace::topology::{distance, Cylinder, LemmaVerdict, Window};
use pathspace::{Degree, Distance, KGraph, Path};
use proptest::prelude::*;

fn d(c: &[u64]) -> Degree {
    Degree::new(c.to_vec())
}

fn graphs() -> Vec<(&'static str, KGraph, Option<u64>)> {
    vec![("e2", fixtures::cuntz(2), None), ("e3", fixtures::graph("e3").unwrap(), None), ("e-inf", fixtures::cuntz_infinite(), Some(3))]
}

#[test]
fn alpha_is_injective_on_a_deep_enough_window() {
    for (name, g, limit) in graphs() {
        // Words `λc^∞` with |λ|, |c| ≤ 2 that agree on max|λ| + lcm|c| ≤ 4
        // letters are equal.
        let window = Window::ball(&g, 0, &d(&[4]), limit.map(|l| l + 1)).unwrap();
        let ws = g.enumerate_paths(0, &d(&[2]), limit).unwrap();
        let codes: Vec<Vec<bool>> = ws.iter().map(|w| g.alpha(w, &window).unwrap().bits().to_vec()).collect();
        for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                assert_ne!(codes[i], codes[j], "{name}: {} and {}", g.display_path(&ws[i]), g.display_path(&ws[j]));
            }
        }
    }
}

#[test]
fn encodings_of_paths_satisfy_the_lemma_and_decode_to_truncations() {
    for (name, g, limit) in graphs() {
        for depth in 0..=3 {
            let window = Window::ball(&g, 0, &d(&[depth]), limit).unwrap();
            for w in g.enumerate_paths(0, &d(&[3]), limit).unwrap() {
                let a = g.alpha(&w, &window).unwrap();
                assert_eq!(g.check_lemma_conditions(&a).unwrap(), LemmaVerdict::Pass, "{name}");
                let cut = w.extdegree().meet_finite(&d(&[depth])).unwrap();
                let expected = g.prefix(&w, &cut).unwrap();
                let in_window = expected.edges().iter().all(|e| limit.is_none_or(|l| e.index < g.family_start(e.group).unwrap_or(0) + l));
                if in_window {
                    assert_eq!(g.decode(&a).unwrap(), Path::Finite(expected), "{name}: {}", g.display_path(&w));
                }
            }
        }
    }
}

#[test]
fn the_window_metric_is_an_ultrametric() {
    let g = fixtures::cuntz(2);
    let window = Window::ball(&g, 0, &d(&[3]), None).unwrap();
    let ws = g.enumerate_paths(0, &d(&[2]), None).unwrap();
    let codes: Vec<_> = ws.iter().map(|w| g.alpha(w, &window).unwrap()).collect();
    for a in &codes {
        assert_eq!(distance(a, a), Distance::Zero);
        for b in &codes {
            assert_eq!(distance(a, b), distance(b, a));
            assert_eq!(distance(a, b) == Distance::Zero, a.bits() == b.bits());
            for c in &codes {
                let (ab, bc) = (distance(a, b), distance(b, c));
                let worst = if ab.at_most(bc) { bc } else { ab };
                assert!(distance(a, c).at_most(worst));
            }
        }
    }
}

#[test]
fn growing_windows_never_shrink_distances() {
    let g = fixtures::cuntz(2);
    let ws = g.enumerate_paths(0, &d(&[2]), None).unwrap();
    let windows: Vec<Window> = (0..=4).map(|k| Window::ball(&g, 0, &d(&[k]), None).unwrap()).collect();
    for a in &ws {
        for b in &ws {
            let values: Vec<f64> = windows.iter().map(|w| g.metric(a, b, w).unwrap().value()).collect();
            // Balls are nested and the enumeration puts shorter paths first,
            // so the first differing bit can only appear, never move later.
            assert!(values.windows(2).all(|p| p[0] == 0.0 || p[1] == p[0]), "{values:?}");
        }
    }
}

#[test]
fn cylinder_intersections_are_exact() {
    let mut rng = common::rng(13);
    for (name, g, limit) in graphs() {
        let bases = g.morphisms_up_to(&d(&[2]), Some(0), limit).unwrap();
        let points = g.enumerate_paths(0, &d(&[3]), limit.map(|l| l + 1)).unwrap();
        for _ in 0..200 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                use rand::Rng;
                let base = bases[rng.gen_range(0..bases.len())].clone();
                let holes: Vec<_> = (0..rng.gen_range(0..=1))
                    .map(|_| bases[rng.gen_range(0..bases.len())].clone())
                    .filter(|h| g.is_prefix(&base, h).unwrap() && *h != base)
                    .collect();
                Cylinder { base, holes }
            };
            let (a, b) = (pick(&mut rng), pick(&mut rng));
            let meet = g.cylinder_intersection(&a, &b).unwrap();
            for p in &points {
                let both = g.in_cylinder(&a, p).unwrap() && g.in_cylinder(&b, p).unwrap();
                let union = meet.iter().any(|c| g.in_cylinder(c, p).unwrap());
                assert_eq!(union, both, "{name}: {}", g.display_path(p));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    /// A convergent sequence in `E_∞` has window encodings that stabilise at
    /// the encoding of its limit, and that limit is itself a path encoding.
    #[test]
    fn convergent_sequences_have_closed_limits(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ common::seed());
        let g = fixtures::cuntz_infinite();
        let coords = common::random_w_sequence(&mut rng, 3);
        let seq = g.path_sequence(0, common::to_edges(&coords, 0)).unwrap();
        let limit = g.limit(&seq);
        let target = g.symbolic_path(0, common::word_to_edges(&common::random_target(&mut rng, &coords), 0)).unwrap();
        let converges = g.converges(&seq, &target).unwrap().converges;
        for depth in 1..=3 {
            let window = Window::ball(&g, 0, &d(&[depth]), Some(4)).unwrap();
            if converges {
                prop_assert!(g.converges_on_window(&seq, &target, &window).unwrap().converges);
            }
            if let Some(x) = &limit {
                prop_assert!(g.converges(&seq, x).unwrap().converges);
                let w = g.converges_on_window(&seq, x, &window).unwrap();
                prop_assert!(w.converges);
                let bits = pathspace::Encoding::new(&window, w.limit_bits).unwrap();
                prop_assert!(g.check_lemma_conditions(&bits).unwrap().is_pass());
                // Past the threshold every instance sits at distance zero.
                for n in w.threshold..w.threshold + 4 {
                    let here = g.alpha_word(&g.sequence_instance(&seq, n), &window).unwrap();
                    prop_assert_eq!(distance(&here, &g.alpha_word(x, &window).unwrap()), Distance::Zero);
                }
            }
        }
    }
}
