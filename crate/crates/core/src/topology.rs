//! The encoding `α: W → 2^Y` on finite windows of `Y`, cylinder sets,
//! compactness searches and convergence of symbolic path sequences.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::degree::{Degree, ExtCoord, ExtDegree};
use crate::error::{Error, Result};
use crate::kgraph::{BackendKind, Edge, KGraph, Morphism, VertexId};
use crate::paths::Path;
use crate::symbolic::{
    self, BranchSpec, Convergence, LengthTerm, Letter, Resolver, SequenceSpec, SymbolicSequence, SymbolicWord, Term,
};

impl Letter for Edge {
    type Family = u32;
    fn from_family(family: &u32, index: u64) -> Edge {
        Edge { group: *family, index }
    }
}

/// A finite prefix-closed subset of `Y`, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    paths: Vec<Morphism>,
    index: HashMap<Morphism, usize>,
}

impl Window {
    pub fn new(g: &KGraph, mut paths: Vec<Morphism>) -> Result<Window> {
        paths.sort_by(|a, b| a.cmp_enumeration(b));
        paths.dedup();
        let index: HashMap<Morphism, usize> = paths.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        for y in &paths {
            for m in y.degree().down_set() {
                let p = g.factorize(y, &m)?.0;
                if !index.contains_key(&p) {
                    return Err(Error::InvalidPath(format!(
                        "window is not prefix-closed: {} is missing",
                        g.display(&p)
                    )));
                }
            }
        }
        Ok(Window { paths, index })
    }

    /// All finite paths from `v` of degree at most `depth`, with infinite
    /// families cut to their first `limit` members.
    pub fn ball(g: &KGraph, v: VertexId, depth: &Degree, limit: Option<u64>) -> Result<Window> {
        Window::new(g, g.morphisms_up_to(depth, Some(v), limit)?)
    }

    pub fn paths(&self) -> &[Morphism] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn position(&self, y: &Morphism) -> Option<usize> {
        self.index.get(y).copied()
    }
}

/// The restriction of some `a ∈ 2^Y` to a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding<'w> {
    window: &'w Window,
    bits: Vec<bool>,
}

impl<'w> Encoding<'w> {
    pub fn new(window: &'w Window, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != window.len() {
            return Err(Error::InvalidPath(format!(
                "{} bits for a window of {} paths",
                bits.len(),
                window.len()
            )));
        }
        Ok(Encoding { window, bits })
    }

    pub fn window(&self) -> &'w Window {
        self.window
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `A_a = {y : a(y) = 1}`.
    pub fn members(&self) -> Vec<&'w Morphism> {
        self.window.paths.iter().zip(&self.bits).filter(|(_, &b)| b).map(|(y, _)| y).collect()
    }

    pub fn get(&self, y: &Morphism) -> Option<bool> {
        self.window.position(y).map(|i| self.bits[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaCondition {
    /// `A_a` is non-empty.
    NonEmpty,
    /// `A_a` is closed under prefixes.
    Hereditary,
    /// Any two members of `A_a` have a common extension in `A_a`.
    Directed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaVerdict {
    Pass,
    Fail { condition: LemmaCondition, witness: Vec<Morphism> },
    /// Directedness could only fail through extensions outside the window.
    Bounded { pairs: Vec<(Morphism, Morphism)> },
}

impl LemmaVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, LemmaVerdict::Pass)
    }
}

/// `2^{−j}` for the first window index `j` where two encodings differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Distance {
    Zero,
    Pow2Neg(u32),
}

impl Distance {
    pub fn value(self) -> f64 {
        match self {
            Distance::Zero => 0.0,
            Distance::Pow2Neg(j) => 0.5f64.powi(j as i32),
        }
    }

    /// Comparison by value: `Pow2Neg(j)` shrinks as `j` grows.
    pub fn at_most(self, other: Distance) -> bool {
        self.value() <= other.value()
    }
}

pub fn distance(a: &Encoding, b: &Encoding) -> Distance {
    match a.bits.iter().zip(&b.bits).position(|(x, y)| x != y) {
        Some(j) => Distance::Pow2Neg(j as u32),
        None => Distance::Zero,
    }
}

/// `λW_{s(λ)}` with finitely many sub-cylinders `hW_{s(h)}` removed. The
/// plain cylinder has no holes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cylinder {
    pub base: Morphism,
    pub holes: Vec<Morphism>,
}

impl Cylinder {
    pub fn new(base: Morphism) -> Cylinder {
        Cylinder { base, holes: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubcoverVerdict {
    /// Indices into the given cylinder list.
    Subcover(Vec<usize>),
    Counterexample(Path),
    Inconclusive { bound: Degree, needed: Degree },
}

/// A 1-graph path given symbolically, e.g. the aperiodic `e[1] e[2] e[3] …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPath {
    pub start: VertexId,
    pub word: SymbolicWord<Edge>,
}

/// `n ↦ x^n` in `W_v` of a 1-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSequence {
    pub start: VertexId,
    pub seq: SymbolicSequence<Edge>,
}

/// `n ↦ w_{min(a·n + b, N)}` for a path `w` of any rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationSequence {
    pub path: Path,
    pub slope: Degree,
    pub offset: Degree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowConvergence {
    pub converges: bool,
    /// From this index on the encodings are constant on the window.
    pub threshold: u64,
    pub limit_bits: Vec<bool>,
}

struct EdgeResolver<'g>(&'g KGraph);

impl Resolver<String, Edge> for EdgeResolver<'_> {
    fn letter(&self, x: &String) -> Result<Edge> {
        self.0.parse_edge(x)
    }

    fn family(&self, name: Option<&str>) -> Result<u32> {
        let name = name.ok_or_else(|| Error::MalformedSequence("a ramp needs a family name".into()))?;
        let group = self.0.group_id(name)?;
        if self.0.family_start(group).is_none() {
            return Err(Error::MalformedSequence(format!("`{name}` is not an edge family")));
        }
        Ok(group)
    }

    fn show(&self, l: &Edge) -> String {
        self.0.edge_name(*l)
    }

    fn family_name(&self, f: &u32) -> Option<String> {
        let index = self.0.family_start(*f).unwrap_or(0);
        Some(self.0.edge_name(Edge { group: *f, index }).split('[').next().unwrap_or_default().to_string())
    }
}

/// A symbolic target: a path literal or a word description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TargetSpec {
    Literal(String),
    Word(BranchSpec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSequenceCase {
    pub name: String,
    pub sequence: SequenceSpec<String>,
    pub target: TargetSpec,
    pub expect: bool,
}

/// `{"kind": "path-sequences", "graph": <fixture name>, "cases": […]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSequenceFile {
    pub kind: String,
    pub graph: String,
    pub cases: Vec<PathSequenceCase>,
}

impl KGraph {
    /// `y ≤ w`: `y` is the prefix of `w` of degree `d(y)`.
    pub fn is_path_prefix(&self, y: &Morphism, w: &Path) -> Result<bool> {
        if y.range() != w.range() || !w.extdegree().contains(y.degree())? {
            return Ok(false);
        }
        Ok(self.prefix(w, y.degree())? == *y)
    }

    /// `α(w)` restricted to the window: `y ↦ [y ≤ w]`.
    pub fn alpha<'w>(&self, w: &Path, window: &'w Window) -> Result<Encoding<'w>> {
        let bits = window.paths.iter().map(|y| self.is_path_prefix(y, w)).collect::<Result<_>>()?;
        Ok(Encoding { window, bits })
    }

    /// `α` of a symbolic 1-graph path.
    pub fn alpha_word<'w>(&self, w: &SymbolicPath, window: &'w Window) -> Result<Encoding<'w>> {
        let bits = window
            .paths
            .iter()
            .map(|y| {
                y.range() == w.start
                    && y.edges().len() as u64 <= w.word.length().unwrap_or(u64::MAX)
                    && y.edges().iter().enumerate().all(|(i, &e)| w.word.letter_at(i as u64 + 1) == Some(e))
            })
            .collect();
        Ok(Encoding { window, bits })
    }

    /// The membership conditions for `α(W)`, checked on the window.
    pub fn check_lemma_conditions(&self, a: &Encoding) -> Result<LemmaVerdict> {
        let members = a.members();
        if members.is_empty() {
            return Ok(LemmaVerdict::Fail { condition: LemmaCondition::NonEmpty, witness: Vec::new() });
        }
        for &y in &members {
            for m in y.degree().down_set() {
                let p = self.factorize(y, &m)?.0;
                if a.get(&p) != Some(true) {
                    return Ok(LemmaVerdict::Fail {
                        condition: LemmaCondition::Hereditary,
                        witness: vec![y.clone(), p],
                    });
                }
            }
        }
        let mut bounded = Vec::new();
        for (i, &y1) in members.iter().enumerate() {
            for &y2 in &members[i + 1..] {
                let has_bound = members
                    .iter()
                    .any(|z| self.is_prefix(y1, z).unwrap_or(false) && self.is_prefix(y2, z).unwrap_or(false));
                if has_bound {
                    continue;
                }
                let fail = || LemmaVerdict::Fail { condition: LemmaCondition::Directed, witness: vec![y1.clone(), y2.clone()] };
                if y1.range() != y2.range() {
                    return Ok(fail());
                }
                let ext = match self.common_extensions(y1, y2) {
                    Ok(e) => e,
                    Err(Error::NotEnumerable(_)) => {
                        bounded.push((y1.clone(), y2.clone()));
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                // An upper bound anywhere has its prefix of degree d(y1) ∨ d(y2)
                // in E, and that prefix would have to be in A by heredity.
                if ext.iter().all(|z| a.window.position(z).is_some()) {
                    return Ok(fail());
                }
                bounded.push((y1.clone(), y2.clone()));
            }
        }
        if bounded.is_empty() {
            Ok(LemmaVerdict::Pass)
        } else {
            Ok(LemmaVerdict::Bounded { pairs: bounded })
        }
    }

    /// The path with encoding `a`: the largest member of `A_a`.
    pub fn decode(&self, a: &Encoding) -> Result<Path> {
        match self.check_lemma_conditions(a)? {
            LemmaVerdict::Pass => {}
            v => return Err(Error::NotAPath(format!("{v:?}"))),
        }
        let members = a.members();
        let top = members
            .iter()
            .find(|&&z| members.iter().all(|y| self.is_prefix(y, z).unwrap_or(false)))
            .ok_or_else(|| Error::NotAPath("no largest member".into()))?;
        Ok(Path::Finite((*top).clone()))
    }

    /// The window metric between two paths.
    pub fn metric(&self, w: &Path, w2: &Path, window: &Window) -> Result<Distance> {
        Ok(distance(&self.alpha(w, window)?, &self.alpha(w2, window)?))
    }

    pub fn in_cylinder(&self, c: &Cylinder, w: &Path) -> Result<bool> {
        if !self.is_path_prefix(&c.base, w)? {
            return Ok(false);
        }
        for h in &c.holes {
            if self.is_path_prefix(h, w)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `λW ∩ λ′W = ⋃_{ν ∈ E_{λ,λ′}} νW`.
    pub fn cylinder_intersection(&self, c: &Cylinder, c2: &Cylinder) -> Result<Vec<Cylinder>> {
        if c.base.range() != c2.base.range() {
            return Ok(Vec::new());
        }
        let mut holes = c.holes.clone();
        holes.extend(c2.holes.iter().cloned());
        Ok(self
            .common_extensions(&c.base, &c2.base)?
            .into_iter()
            .map(|base| Cylinder { base, holes: holes.clone() })
            .collect())
    }

    /// Searches for a finite subcover of `W_v`.
    ///
    /// Membership of any point `w` in every given set depends only on the
    /// finite path `w_{D ∧ N(w)}`, where `D` joins all degrees mentioned, so
    /// testing the finite paths of degree at most `D` is exhaustive. One
    /// unmentioned member of each infinite family stands for all of them.
    pub fn finite_subcover(&self, cylinders: &[Cylinder], v: VertexId, bound: &Degree) -> Result<SubcoverVerdict> {
        let mut needed = Degree::zero(self.rank());
        let mut max_index = 0u64;
        for c in cylinders {
            for m in std::iter::once(&c.base).chain(&c.holes) {
                needed = needed.join(m.degree())?;
                for e in m.edges() {
                    let start = self.family_start(e.group).unwrap_or(0);
                    max_index = max_index.max(e.index.saturating_sub(start) + 1);
                }
            }
        }
        if !needed.leq(bound)? {
            return Ok(SubcoverVerdict::Inconclusive { bound: bound.clone(), needed });
        }
        let limit = self.has_infinite_families().then_some(max_index + 2);
        let points: Vec<Path> = self.morphisms_up_to(&needed, Some(v), limit)?.into_iter().map(Path::Finite).collect();
        let mut member = vec![vec![false; points.len()]; cylinders.len()];
        for (i, c) in cylinders.iter().enumerate() {
            for (j, p) in points.iter().enumerate() {
                member[i][j] = self.in_cylinder(c, p)?;
            }
        }
        let covers = |chosen: &[usize]| (0..points.len()).find(|&j| !chosen.iter().any(|&i| member[i][j]));
        let mut chosen: Vec<usize> = (0..cylinders.len()).filter(|&i| cylinders[i].base.range() == v).collect();
        if let Some(j) = covers(&chosen) {
            return Ok(SubcoverVerdict::Counterexample(points[j].clone()));
        }
        let mut k = 0;
        while k < chosen.len() {
            let mut without = chosen.clone();
            without.remove(k);
            if covers(&without).is_none() {
                chosen = without;
            } else {
                k += 1;
            }
        }
        Ok(SubcoverVerdict::Subcover(chosen))
    }

    fn require_one_graph(&self) -> Result<()> {
        if self.backend_kind() == BackendKind::OneGraph {
            Ok(())
        } else {
            Err(Error::MalformedSequence("symbolic path sequences need a 1-graph".into()))
        }
    }

    /// Checks that positions `1..=depth` form a path from `start`.
    fn check_letters(&self, start: VertexId, depth: u64, letter: impl Fn(u64) -> Result<Edge>) -> Result<()> {
        let mut at = start;
        for i in 1..=depth {
            let e = letter(i)?;
            let src = self.edge_src(e).map_err(|_| {
                Error::MalformedSequence(format!("position {i} names a missing edge {}", self.edge_name(e)))
            })?;
            if src != at {
                return Err(Error::MalformedSequence(format!(
                    "position {i}: {} does not leave {}",
                    self.edge_name(e),
                    self.vertex_name(at)
                )));
            }
            at = self.edge_dst(e)?;
        }
        Ok(())
    }

    pub fn symbolic_path(&self, start: VertexId, word: SymbolicWord<Edge>) -> Result<SymbolicPath> {
        self.require_one_graph()?;
        let depth = word.length().map_or(word.sample_depth(), |l| l.min(word.sample_depth()));
        self.check_letters(start, depth, |i| {
            word.rules()
                .get(&i)
                .or(word.default_term())
                .expect("validated word")
                .at(0, i)
        })?;
        Ok(SymbolicPath { start, word })
    }

    /// The symbolic form of a 1-graph path.
    pub fn path_to_symbolic(&self, w: &Path) -> Result<SymbolicPath> {
        self.require_one_graph()?;
        let word = match w {
            Path::Finite(m) => SymbolicWord::finite(m.edges().to_vec()),
            Path::Infinite(p) => {
                SymbolicWord::eventually_periodic(p.prefix().edges().to_vec(), p.cycle().edges().to_vec())?
            }
        };
        Ok(SymbolicPath { start: w.range(), word })
    }

    /// The path denoted by a symbolic path, when it is eventually periodic.
    pub fn symbolic_to_path(&self, w: &SymbolicPath) -> Result<Option<Path>> {
        let word = &w.word;
        if let Some(letters) = word.letters() {
            return Ok(Some(Path::Finite(self.word(w.start, &letters)?)));
        }
        let period = match word.default_term() {
            Some(Term::Fixed(_)) => 1,
            Some(Term::Cycle(c)) => c.len() as u64,
            Some(Term::Ramp(r)) if r.pos_coeff == 0 => 1,
            _ => return Ok(None),
        };
        let p = word.explicit_depth();
        let prefix: Vec<Edge> = (1..=p).map(|i| word.letter_at(i).expect("infinite word")).collect();
        let cycle: Vec<Edge> = (p + 1..=p + period).map(|i| word.letter_at(i).expect("infinite word")).collect();
        let prefix = self.word(w.start, &prefix)?;
        let cycle = self.word(prefix.source(), &cycle)?;
        Ok(Some(self.infinite_path(prefix, cycle)?))
    }

    /// A path literal when the word is eventually periodic, otherwise the
    /// letters through the explicit rules followed by `…`.
    pub fn display_symbolic(&self, w: &SymbolicPath) -> String {
        if let Ok(Some(p)) = self.symbolic_to_path(w) {
            return self.display_path(&p);
        }
        let shown = w.word.sample_depth().max(4);
        let letters: Vec<String> = (1..=shown).filter_map(|i| w.word.letter_at(i)).map(|e| self.edge_name(e)).collect();
        format!("{}:{}.…", self.vertex_name(w.start), letters.join("."))
    }

    pub fn path_sequence(&self, start: VertexId, seq: SymbolicSequence<Edge>) -> Result<PathSequence> {
        self.require_one_graph()?;
        for (b, branch) in seq.branches().iter().enumerate() {
            // Family indices grow with n and with the position, so the first
            // index of the branch and the first positions are the extreme case.
            let n = b as u64 + 1;
            let explicit = branch.rules.keys().next_back().copied().unwrap_or(0);
            let period = match &branch.default {
                Some(Term::Cycle(c)) => c.len() as u64,
                _ => 1,
            };
            let sample = explicit + period + 2;
            let depth = match branch.length {
                LengthTerm::Const(c) => c.min(sample),
                _ => sample,
            };
            self.check_letters(start, depth, |i| branch.term(i).expect("validated sequence").at(n, i))?;
        }
        Ok(PathSequence { start, seq })
    }

    /// `x^n` as a symbolic path.
    pub fn sequence_instance(&self, seq: &PathSequence, n: u64) -> SymbolicPath {
        SymbolicPath { start: seq.start, word: seq.seq.instance(n) }
    }

    /// Decides `x^n → x` by the two-case criterion for 1-graphs.
    pub fn converges(&self, seq: &PathSequence, target: &SymbolicPath) -> Result<Convergence<Edge>> {
        if seq.start != target.start {
            return Err(Error::MalformedSequence("sequence and target start at different vertices".into()));
        }
        Ok(seq.seq.converges(&target.word))
    }

    pub fn limit(&self, seq: &PathSequence) -> Option<SymbolicPath> {
        seq.seq.limit().map(|word| SymbolicPath { start: seq.start, word })
    }

    /// Encoding convergence on a window, by instantiating `x^n` at an index
    /// past which every window bit is constant.
    pub fn converges_on_window(
        &self,
        seq: &PathSequence,
        target: &SymbolicPath,
        window: &Window,
    ) -> Result<WindowConvergence> {
        let depth = window.paths.iter().map(|y| y.edges().len() as u64).max().unwrap_or(0);
        let max_index = window.paths.iter().flat_map(|y| y.edges()).map(|e| e.index).max().unwrap_or(0);
        let mut slack: u64 = 0;
        for branch in seq.seq.branches() {
            if let LengthTerm::Affine { offset, .. } = branch.length {
                slack = slack.max(offset.unsigned_abs());
            }
            for t in branch.rules.values().chain(&branch.default) {
                if let Term::Ramp(r) = t {
                    slack = slack.max(r.offset.unsigned_abs());
                }
            }
        }
        // Past this index lengths exceed the window depth and escaping
        // family indices exceed every index in the window.
        let from = depth.max(max_index) + slack + 2;
        let want = self.alpha_word(target, window)?;
        let b = seq.seq.branches().len() as u64;
        let mut converges = true;
        let mut limit_bits = Vec::new();
        for r in 0..b {
            let n = from + (r + b - (from - 1) % b) % b;
            let here = self.alpha_word(&self.sequence_instance(seq, n), window)?;
            let next = self.alpha_word(&self.sequence_instance(seq, n + b), window)?;
            debug_assert_eq!(here.bits, next.bits);
            if here.bits != want.bits {
                converges = false;
            }
            if r == 0 {
                limit_bits = here.bits;
            }
        }
        Ok(WindowConvergence { converges, threshold: from, limit_bits })
    }

    pub fn truncation_instance(&self, seq: &TruncationSequence, n: u64) -> Result<Morphism> {
        let m = seq.slope.scale(n).add(&seq.offset)?;
        let m = seq.path.extdegree().meet_finite(&m)?;
        self.prefix(&seq.path, &m)
    }

    /// Encoding convergence of a truncation sequence on a window.
    pub fn truncation_converges_on_window(
        &self,
        seq: &TruncationSequence,
        target: &Path,
        window: &Window,
    ) -> Result<WindowConvergence> {
        let mut from = 1u64;
        for y in &window.paths {
            for i in 0..self.rank() {
                let (s, o, need) = (seq.slope.coords()[i], seq.offset.coords()[i], y.degree().coords()[i]);
                if s > 0 && need > o {
                    from = from.max((need - o).div_ceil(s));
                }
            }
        }
        let here = self.alpha(&Path::Finite(self.truncation_instance(seq, from)?), window)?;
        let want = self.alpha(target, window)?;
        Ok(WindowConvergence { converges: here.bits == want.bits, threshold: from, limit_bits: here.bits })
    }

    /// The limit of a truncation sequence, when it is a representable path.
    pub fn truncation_limit(&self, seq: &TruncationSequence) -> Result<Option<Path>> {
        let n = seq.path.extdegree();
        let lim: Vec<ExtCoord> = (0..self.rank())
            .map(|i| match n.coords()[i] {
                ExtCoord::Inf if seq.slope.coords()[i] > 0 => ExtCoord::Inf,
                ExtCoord::Inf => ExtCoord::Fin(seq.offset.coords()[i]),
                ExtCoord::Fin(c) if seq.slope.coords()[i] > 0 => ExtCoord::Fin(c),
                ExtCoord::Fin(c) => ExtCoord::Fin(c.min(seq.offset.coords()[i])),
            })
            .collect();
        let lim = ExtDegree::new(lim);
        if lim == n {
            return Ok(Some(seq.path.clone()));
        }
        match lim.to_finite() {
            Some(m) => Ok(Some(Path::Finite(self.prefix(&seq.path, &m)?))),
            None => Ok(None),
        }
    }

    pub fn load_path_sequences(&self, file: &PathSequenceFile) -> Result<Vec<(String, PathSequence, SymbolicPath, bool)>> {
        let r = EdgeResolver(self);
        file.cases
            .iter()
            .map(|case| {
                let start = case
                    .sequence
                    .start
                    .as_deref()
                    .ok_or_else(|| Error::MalformedSequence(format!("case `{}` has no start vertex", case.name)))?;
                let start = self.vertex_id(start)?;
                let seq = self.path_sequence(start, symbolic::resolve_sequence(&r, &case.sequence)?)?;
                let target = match &case.target {
                    TargetSpec::Literal(lit) => self.path_to_symbolic(&self.parse_path(lit)?)?,
                    TargetSpec::Word(w) => self.symbolic_path(start, symbolic::resolve_word(&r, w)?)?,
                };
                Ok((case.name.clone(), seq, target, case.expect))
            })
            .collect()
    }

    /// File form of a word over this graph's edges.
    pub fn show_word(&self, w: &SymbolicWord<Edge>) -> BranchSpec<String> {
        symbolic::show_word(&EdgeResolver(self), w)
    }

    pub fn parse_sequence(&self, spec: &SequenceSpec<String>) -> Result<PathSequence> {
        let start = self.vertex_id(spec.start.as_deref().unwrap_or("v"))?;
        self.path_sequence(start, symbolic::resolve_sequence(&EdgeResolver(self), spec)?)
    }

    pub fn parse_word(&self, start: VertexId, spec: &BranchSpec<String>) -> Result<SymbolicPath> {
        self.symbolic_path(start, symbolic::resolve_word(&EdgeResolver(self), spec)?)
    }
}

/// A word with explicit rules at positions `1..=len`, for quick construction.
pub fn word_from_rules(length: Option<u64>, rules: Vec<(u64, Term<Edge>)>, default: Option<Term<Edge>>) -> Result<SymbolicWord<Edge>> {
    SymbolicWord::new(length, rules.into_iter().collect::<BTreeMap<_, _>>(), default)
}
