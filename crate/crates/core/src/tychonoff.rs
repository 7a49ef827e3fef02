//! Products of one-point compactified discrete factors and the quotient
//! `Q: A → W₀`.
//!
//! Each factor `X_i` is `{1, …, size}` or `{1, 2, …}`; `X_i^∞` adjoins `∞`.
//! Points of `A = ∏ X_i^∞` and of `W₀` are symbolic words over [`Coord`].
//! A sequence of coordinates in `X_i^∞` converges iff it is eventually
//! constant or its index grows without bound, in which case the limit is `∞`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kgraph::{Edge, KGraph};
use crate::symbolic::{
    self, Branch, BranchSpec, Convergence, InfTag, LengthTerm, Letter, Ramp, Resolver, SequenceSpec,
    SymbolicSequence, SymbolicWord, Term,
};
use crate::topology::{Encoding, SymbolicPath, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Pt(u64),
    Inf,
}

impl Letter for Coord {
    type Family = ();
    fn from_family(_: &(), index: u64) -> Coord {
        Coord::Pt(index)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Pt(j) => write!(f, "{j}"),
            Coord::Inf => f.write_str("∞"),
        }
    }
}

/// A coordinate in files: a point index or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordSpec {
    Pt(u64),
    Inf(InfTag),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpace {
    pub name: String,
    /// `None` for the ℕ-indexed space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<u64>,
}

impl FactorSpace {
    pub fn naturals() -> FactorSpace {
        FactorSpace { name: "N".into(), size: None }
    }

    pub fn contains(&self, c: Coord) -> bool {
        match c {
            Coord::Pt(j) => j >= 1 && self.size.is_none_or(|s| j <= s),
            Coord::Inf => true,
        }
    }
}

/// The factors `X_1, X_2, …`: a default space with finitely many overrides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSpace {
    pub default: FactorSpace,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub overrides: BTreeMap<u64, FactorSpace>,
}

impl Default for ProductSpace {
    fn default() -> Self {
        ProductSpace { default: FactorSpace::naturals(), overrides: BTreeMap::new() }
    }
}

/// A point of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct APoint(SymbolicWord<Coord>);

/// A point of `W₀`; the empty tuple is `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPoint(SymbolicWord<Coord>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WSequence(SymbolicSequence<Coord>);

impl APoint {
    pub fn word(&self) -> &SymbolicWord<Coord> {
        &self.0
    }

    pub fn at(&self, i: u64) -> Coord {
        self.0.letter_at(i).expect("points of A are infinite")
    }
}

impl WPoint {
    pub fn word(&self) -> &SymbolicWord<Coord> {
        &self.0
    }

    /// `ℓ(w)`, `None` for ∞.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<u64> {
        self.0.length()
    }

    pub fn is_zero(&self) -> bool {
        self.0.length() == Some(0)
    }
}

impl WSequence {
    pub fn symbolic(&self) -> &SymbolicSequence<Coord> {
        &self.0
    }

    pub fn instance(&self, n: u64) -> WPoint {
        WPoint(self.0.instance(n))
    }
}

/// One branch of a lift sequence `y^n ∈ Q⁻¹(x^n)`: the branch of `x^n`,
/// then `∞` at position `ℓ(x^n) + 1`, then junk coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftBranch {
    pub base: Branch<Coord>,
    pub junk_rules: BTreeMap<u64, Term<Coord>>,
    pub junk_default: Term<Coord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftSequence {
    pub branches: Vec<LiftBranch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientWitness {
    pub lift: usize,
    pub cluster: APoint,
    pub image: WPoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientVerdict {
    pub converges: bool,
    pub lifts_checked: usize,
    pub clusters_checked: usize,
    pub witness: Option<QuotientWitness>,
}

/// `Q(a)`: the coordinates before the first `∞`.
pub fn q(a: &APoint) -> WPoint {
    // Ramps never produce ∞, so one period past the explicit rules suffices.
    match (1..=a.0.sample_depth()).find(|&i| a.at(i) == Coord::Inf) {
        Some(p) => WPoint(SymbolicWord::finite((1..p).map(|i| a.at(i)).collect())),
        None => WPoint(a.0.clone()),
    }
}

/// `N(a)`: `∞`, `n` or `0` for the three cases of `Q`.
pub fn n_of(a: &APoint) -> Option<u64> {
    q(a).len()
}

pub fn r_related(a: &APoint, b: &APoint) -> bool {
    n_of(a) == n_of(b) && q(a).0.same_as(&q(b).0)
}

/// The limit in `X_i^∞` of the coordinate sequence given by a term.
pub fn coordinate_limit(t: &Term<Coord>) -> Term<Coord> {
    if t.escapes() {
        Term::Fixed(Coord::Inf)
    } else {
        t.clone()
    }
}

/// `β(a) = α(Q(a))` for the factors `X_i = {e[1], e[2], …}` of a graph with
/// one vertex and a single edge family.
pub fn beta<'w>(g: &KGraph, family: u32, a: &APoint, window: &'w Window) -> Result<Encoding<'w>> {
    let word = q(a)
        .0
        .map(
            |c| match *c {
                Coord::Pt(j) => Some(Edge { group: family, index: j }),
                Coord::Inf => None,
            },
            |_| family,
        )
        .expect("Q(a) has no ∞ coordinates");
    let start = g.edge_src(Edge { group: family, index: g.family_start(family).unwrap_or(0) })?;
    g.alpha_word(&SymbolicPath { start, word }, window)
}

/// `0`, `(1, 2)` or `(1, 2, ∞, 5, 5, …)`.
pub fn show_word(w: &SymbolicWord<Coord>) -> String {
    if w.length() == Some(0) {
        return "0".into();
    }
    let depth = w.length().unwrap_or(w.sample_depth());
    let mut parts: Vec<String> = (1..=depth).map(|i| w.letter_at(i).expect("in range").to_string()).collect();
    if w.length().is_none() {
        parts.push("…".into());
    }
    format!("({})", parts.join(", "))
}

impl fmt::Display for APoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&show_word(&self.0))
    }
}

impl fmt::Display for WPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&show_word(&self.0))
    }
}

struct CoordResolver;

impl Resolver<CoordSpec, Coord> for CoordResolver {
    fn letter(&self, x: &CoordSpec) -> Result<Coord> {
        Ok(match x {
            CoordSpec::Pt(j) => Coord::Pt(*j),
            CoordSpec::Inf(_) => Coord::Inf,
        })
    }

    fn family(&self, _: Option<&str>) -> Result<()> {
        Ok(())
    }

    fn show(&self, c: &Coord) -> CoordSpec {
        match c {
            Coord::Pt(j) => CoordSpec::Pt(*j),
            Coord::Inf => CoordSpec::Inf(InfTag::Inf),
        }
    }

    fn family_name(&self, _: &()) -> Option<String> {
        None
    }
}

pub fn resolve_word(spec: &BranchSpec<CoordSpec>) -> Result<SymbolicWord<Coord>> {
    symbolic::resolve_word(&CoordResolver, spec)
}

pub fn resolve_sequence(spec: &SequenceSpec<CoordSpec>) -> Result<SymbolicSequence<Coord>> {
    symbolic::resolve_sequence(&CoordResolver, spec)
}

pub fn word_spec(w: &SymbolicWord<Coord>) -> BranchSpec<CoordSpec> {
    symbolic::show_word(&CoordResolver, w)
}

fn has_inf(t: &Term<Coord>) -> bool {
    match t {
        Term::Fixed(c) => *c == Coord::Inf,
        Term::Cycle(cs) => cs.contains(&Coord::Inf),
        Term::Ramp(_) => false,
    }
}

impl ProductSpace {
    pub fn factor(&self, i: u64) -> &FactorSpace {
        self.overrides.get(&i).unwrap_or(&self.default)
    }

    fn all_infinite(&self) -> bool {
        self.default.size.is_none() && self.overrides.values().all(|f| f.size.is_none())
    }

    fn check_factors(&self) -> Result<()> {
        for f in std::iter::once(&self.default).chain(self.overrides.values()) {
            if f.size == Some(0) {
                return Err(Error::InvalidPoint(format!("factor {} is empty", f.name)));
            }
        }
        Ok(())
    }

    /// Checks positions `1..=depth` at index `n`, where ramp indices are
    /// smallest, and that nothing grows inside a finite factor.
    fn check_terms(
        &self,
        depth: u64,
        n: u64,
        term: impl Fn(u64) -> Option<Term<Coord>>,
        default: Option<&Term<Coord>>,
    ) -> Result<()> {
        self.check_factors()?;
        for i in 1..=depth {
            let Some(t) = term(i) else { break };
            let c = t.at(n, i)?;
            let factor = self.factor(i);
            if !factor.contains(c) || (factor.size.is_some() && t.escapes()) {
                return Err(Error::InvalidPoint(format!("position {i}: {c} is not a point of {}", factor.name)));
            }
        }
        if let Some(Term::Ramp(r)) = default {
            if (r.n_coeff > 0 || r.pos_coeff > 0) && self.default.size.is_some() {
                return Err(Error::InvalidPoint(format!("indices grow without bound in {}", self.default.name)));
            }
        }
        Ok(())
    }

    fn depth_for(&self, explicit: u64) -> u64 {
        let last_override = self.overrides.keys().next_back().copied().unwrap_or(0);
        explicit.max(last_override) + 4
    }

    pub fn apoint(&self, word: SymbolicWord<Coord>) -> Result<APoint> {
        if word.length().is_some() {
            return Err(Error::InvalidPoint("points of A have infinitely many coordinates".into()));
        }
        let depth = self.depth_for(word.explicit_depth()).max(word.sample_depth());
        self.check_terms(depth, 0, |i| Some(Term::Fixed(word.letter_at(i)?)), word.default_term())?;
        Ok(APoint(word))
    }

    pub fn wpoint(&self, word: SymbolicWord<Coord>) -> Result<WPoint> {
        if word.rules().values().chain(word.default_term()).any(has_inf) {
            return Err(Error::InvalidPoint("points of W have no ∞ coordinates".into()));
        }
        let depth = self.depth_for(word.explicit_depth()).max(word.sample_depth());
        self.check_terms(depth, 0, |i| Some(Term::Fixed(word.letter_at(i)?)), word.default_term())?;
        Ok(WPoint(word))
    }

    pub fn w_sequence(&self, seq: SymbolicSequence<Coord>) -> Result<WSequence> {
        for (b, branch) in seq.branches().iter().enumerate() {
            if branch.rules.values().chain(&branch.default).any(has_inf) {
                return Err(Error::MalformedSequence(format!("branch {b} has an ∞ coordinate")));
            }
            let explicit = branch.rules.keys().next_back().copied().unwrap_or(0);
            let depth = match branch.length {
                LengthTerm::Const(c) => c.min(self.depth_for(explicit) + 2),
                _ => self.depth_for(explicit) + 2,
            };
            self.check_terms(depth, b as u64 + 1, |i| branch.term(i).cloned(), branch.default.as_ref())
                .map_err(|e| Error::MalformedSequence(format!("branch {b}: {e}")))?;
        }
        Ok(WSequence(seq))
    }

    /// `Q⁻¹(w)` padded with `∞` after the finite part.
    pub fn canonical_lift(&self, w: &WPoint) -> APoint {
        match w.len() {
            None => APoint(w.0.clone()),
            Some(l) => {
                let rules = (1..=l).map(|i| (i, Term::Fixed(w.0.letter_at(i).expect("in range")))).collect();
                APoint(SymbolicWord::new(None, rules, Some(Term::Fixed(Coord::Inf))).expect("well formed"))
            }
        }
    }

    pub fn converges_pointwise(&self, seq: &WSequence, x: &WPoint) -> Convergence<Coord> {
        seq.0.converges(&x.0)
    }

    pub fn minimal_lift(&self, seq: &WSequence) -> LiftSequence {
        LiftSequence {
            branches: seq
                .0
                .branches()
                .iter()
                .map(|b| LiftBranch {
                    base: b.clone(),
                    junk_rules: BTreeMap::new(),
                    junk_default: Term::Fixed(Coord::Inf),
                })
                .collect(),
        }
    }

    fn random_junk(&self, i: Option<u64>, rng: &mut impl Rng) -> Term<Coord> {
        let size = match i {
            Some(i) => self.factor(i).size,
            None if self.all_infinite() => None,
            None => Some(1),
        };
        let point = |rng: &mut _| -> Coord {
            if Rng::gen_bool(rng, 0.3) {
                Coord::Inf
            } else {
                Coord::Pt(Rng::gen_range(rng, 1..=size.unwrap_or(6).min(6)))
            }
        };
        match rng.gen_range(0..if size.is_none() { 4 } else { 3 }) {
            0 => Term::Fixed(Coord::Inf),
            1 => Term::Fixed(point(rng)),
            2 => Term::Cycle(vec![point(rng), point(rng)]),
            _ => Term::Ramp(Ramp {
                family: (),
                n_coeff: rng.gen_range(1..=2),
                pos_coeff: rng.gen_range(0..=1),
                offset: 0,
            }),
        }
    }

    /// A lift with random coordinates beyond the first `∞`, explicit up to
    /// position `horizon`.
    pub fn random_lift(&self, seq: &WSequence, horizon: u64, rng: &mut impl Rng) -> LiftSequence {
        let mut lift = self.minimal_lift(seq);
        for b in &mut lift.branches {
            for i in 1..=horizon {
                if rng.gen_bool(0.5) {
                    b.junk_rules.insert(i, self.random_junk(Some(i), rng));
                }
            }
            b.junk_default = self.random_junk(None, rng);
        }
        lift
    }

    /// `y^n`.
    pub fn lift_instance(&self, lift: &LiftSequence, n: u64) -> APoint {
        let b = &lift.branches[((n - 1) % lift.branches.len() as u64) as usize];
        let mut rules = BTreeMap::new();
        let default = match b.base.length.at(n) {
            None => {
                for (&i, t) in &b.base.rules {
                    rules.insert(i, t.at_index(n));
                }
                b.base.default.as_ref().expect("infinite words have a default").at_index(n)
            }
            Some(l) => {
                for i in 1..=l {
                    rules.insert(i, b.base.term(i).expect("validated").at_index(n));
                }
                rules.insert(l + 1, Term::Fixed(Coord::Inf));
                for (&i, t) in b.junk_rules.range(l + 2..) {
                    rules.insert(i, t.at_index(n));
                }
                b.junk_default.at_index(n)
            }
        };
        APoint(SymbolicWord::new(None, rules, Some(default)).expect("well formed"))
    }

    /// The coordinatewise limit in `A` of each branch. Every coordinate term
    /// stabilizes or escapes to `∞`, so these are all the cluster points.
    pub fn cluster_points(&self, lift: &LiftSequence) -> Vec<APoint> {
        let mut out: Vec<APoint> = Vec::new();
        for b in &lift.branches {
            let mut rules = BTreeMap::new();
            let default = match b.base.length {
                LengthTerm::Const(c) => {
                    for i in 1..=c {
                        rules.insert(i, coordinate_limit(b.base.term(i).expect("validated")));
                    }
                    rules.insert(c + 1, Term::Fixed(Coord::Inf));
                    for (&i, t) in b.junk_rules.range(c + 2..) {
                        rules.insert(i, coordinate_limit(t));
                    }
                    coordinate_limit(&b.junk_default)
                }
                _ => {
                    for (&i, t) in &b.base.rules {
                        rules.insert(i, coordinate_limit(t));
                    }
                    coordinate_limit(b.base.default.as_ref().expect("validated"))
                }
            };
            let p = APoint(SymbolicWord::new(None, rules, Some(default)).expect("well formed"));
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Convergence in the quotient topology: every cluster point of the
    /// minimal lift and of `samples` random lifts must map to `x` under `Q`.
    pub fn converges_quotient(
        &self,
        seq: &WSequence,
        x: &WPoint,
        horizon: u64,
        samples: usize,
        rng: &mut impl Rng,
    ) -> QuotientVerdict {
        let mut lifts = vec![self.minimal_lift(seq)];
        lifts.extend((0..samples).map(|_| self.random_lift(seq, horizon, rng)));
        let mut clusters_checked = 0;
        for (k, lift) in lifts.iter().enumerate() {
            for cluster in self.cluster_points(lift) {
                clusters_checked += 1;
                let image = q(&cluster);
                if image != *x {
                    return QuotientVerdict {
                        converges: false,
                        lifts_checked: k + 1,
                        clusters_checked,
                        witness: Some(QuotientWitness { lift: k, cluster, image }),
                    };
                }
            }
        }
        QuotientVerdict { converges: true, lifts_checked: lifts.len(), clusters_checked, witness: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSequenceCase {
    pub name: String,
    pub sequence: SequenceSpec<CoordSpec>,
    pub target: BranchSpec<CoordSpec>,
    pub expect: bool,
}

/// `{"kind": "factor-sequences", "factors": …, "cases": […]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSequenceFile {
    pub kind: String,
    #[serde(default)]
    pub factors: ProductSpace,
    pub cases: Vec<FactorSequenceCase>,
}

impl FactorSequenceFile {
    pub fn load(&self) -> Result<Vec<(String, WSequence, WPoint, bool)>> {
        self.cases
            .iter()
            .map(|c| {
                let seq = self.factors.w_sequence(resolve_sequence(&c.sequence)?)?;
                let target = self.factors.wpoint(resolve_word(&c.target)?)?;
                Ok((c.name.clone(), seq, target, c.expect))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::SeedableRng;

    fn pts(xs: &[u64]) -> Vec<Coord> {
        xs.iter().map(|&j| if j == 0 { Coord::Inf } else { Coord::Pt(j) }).collect()
    }

    /// Explicit coordinates (0 for ∞) followed by a constant tail.
    fn apoint(prefix: &[u64], tail: u64) -> APoint {
        let tail = pts(&[tail])[0];
        ProductSpace::default().apoint(SymbolicWord::eventually_periodic(pts(prefix), vec![tail]).unwrap()).unwrap()
    }

    #[test]
    fn quotient_cases() {
        assert!(q(&apoint(&[0, 5, 3], 1)).is_zero());
        assert_eq!(n_of(&apoint(&[0, 5, 3], 1)), Some(0));
        assert_eq!(q(&apoint(&[1, 2, 0], 7)).to_string(), "(1, 2)");
        assert_eq!(n_of(&apoint(&[4], 0)), Some(1));
        let z = apoint(&[1, 2], 3);
        assert_eq!(q(&z).word(), z.word());
        assert_eq!(n_of(&z), None);
    }

    #[test]
    fn relation_examples() {
        assert!(r_related(&apoint(&[1, 2, 0, 5], 1), &apoint(&[1, 2, 0, 0, 7], 1)));
        assert!(!r_related(&apoint(&[1, 2], 1), &apoint(&[1, 3], 1)));
        let a = apoint(&[3, 0], 2);
        assert!(r_related(&a, &a));
    }

    #[test]
    fn shipped_sequences() {
        let file: FactorSequenceFile = serde_json::from_str(fixtures::FACTOR_SEQUENCES).unwrap();
        let space = file.factors.clone();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (name, seq, target, expect) in file.load().unwrap() {
            assert_eq!(space.converges_pointwise(&seq, &target).converges, expect, "{name}");
            assert_eq!(space.converges_quotient(&seq, &target, 16, 8, &mut rng).converges, expect, "{name}");
        }
    }

    #[test]
    fn wrong_limit_has_a_witness() {
        let space = ProductSpace::default();
        let spec = r#"{"branches": [{"length": "inf", "rules": {"1": {"fixed": 1}, "2": {"fixed": 2},
            "3": {"ramp": {"n": 1}}}, "default": {"fixed": 1}}]}"#;
        let seq = space.w_sequence(resolve_sequence(&serde_json::from_str(spec).unwrap()).unwrap()).unwrap();
        let wrong = space.wpoint(SymbolicWord::finite(pts(&[1, 3]))).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        let v = space.converges_quotient(&seq, &wrong, 16, 8, &mut rng);
        let w = v.witness.unwrap();
        assert_eq!(w.cluster.at(2), Coord::Pt(2));
        assert_eq!(w.image.to_string(), "(1, 2)");
    }

    #[test]
    fn cluster_points_of_simple_lifts() {
        let space = ProductSpace::default();
        let nnn = r#"{"branches": [{"length": "inf", "default": {"ramp": {"n": 1}}}]}"#;
        let seq = space.w_sequence(resolve_sequence(&serde_json::from_str(nnn).unwrap()).unwrap()).unwrap();
        let clusters = space.cluster_points(&space.minimal_lift(&seq));
        assert_eq!(clusters.len(), 1);
        assert!(q(&clusters[0]).is_zero());

        let alternating = r#"{"branches": [{"length": {"const": 1}, "default": {"fixed": 1}},
            {"length": {"const": 1}, "default": {"fixed": 2}}]}"#;
        let seq = space.w_sequence(resolve_sequence(&serde_json::from_str(alternating).unwrap()).unwrap()).unwrap();
        let clusters = space.cluster_points(&space.minimal_lift(&seq));
        assert_eq!(clusters.iter().map(ToString::to_string).collect::<Vec<_>>(), ["(1, ∞, ∞, ∞, ∞, …)", "(2, ∞, ∞, ∞, ∞, …)"]);
        assert_eq!(space.lift_instance(&space.minimal_lift(&seq), 2), clusters[1]);
    }

    #[test]
    fn finite_factors_reject_escaping_terms() {
        let mut space = ProductSpace::default();
        space.overrides.insert(2, FactorSpace { name: "two".into(), size: Some(2) });
        let bad = r#"{"branches": [{"length": "inf", "rules": {"2": {"ramp": {"n": 1}}}, "default": {"fixed": 1}}]}"#;
        assert!(space.w_sequence(resolve_sequence(&serde_json::from_str(bad).unwrap()).unwrap()).is_err());
        assert!(space.wpoint(SymbolicWord::finite(pts(&[1, 3]))).is_err());
        assert!(space.wpoint(SymbolicWord::finite(pts(&[1, 0]))).is_err());
        assert!(space.wpoint(SymbolicWord::finite(pts(&[5, 2]))).is_ok());
    }

    #[test]
    fn beta_examples() {
        let g = fixtures::cuntz_infinite();
        let family = g.group_id("e").unwrap();
        let window = Window::ball(&g, 0, &crate::Degree::new(vec![3]), Some(3)).unwrap();
        let a = apoint(&[1, 2, 0], 3);
        let want = g.alpha(&g.parse_path("v:e[1].e[2]").unwrap(), &window).unwrap();
        assert_eq!(beta(&g, family, &a, &window).unwrap(), want);
        let zero = apoint(&[], 0);
        let v = g.alpha(&g.parse_path("v").unwrap(), &window).unwrap();
        assert_eq!(beta(&g, family, &zero, &window).unwrap(), v);
    }
}
