//! Symbolic words and sequences of words.
//!
//! A word assigns a letter to each position `i = 1, 2, …` up to its length.
//! Letters come from explicit per-position rules or a default rule, each a
//! [`Term`]:
//!
//! * `Fixed(a)`: the letter `a`.
//! * `Cycle([a₁, …, a_p])`: the letter `a_{((i−1) mod p)+1}`.
//! * `Ramp`: member `c_n·n + c_i·i + c` of an ℕ-indexed family.
//!
//! In a sequence `n ↦ x^n` (with `n ≥ 1`) terms may depend on `n` through a
//! ramp's `c_n`; a ramp with `c_n > 0` escapes every finite set of letters.
//! Lengths are constant, affine in `n`, or infinite. Several branches may be
//! given; `x^n` uses branch `(n−1) mod B`.
//!
//! Every term either stabilizes or escapes as `n → ∞`, so each branch has a
//! pointwise limit in the same class and convergence is decidable.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter type whose ℕ-indexed families can be addressed by ramps.
pub trait Letter: Clone + Eq + Ord + Hash + Debug {
    type Family: Clone + Eq + Ord + Hash + Debug;
    fn from_family(family: &Self::Family, index: u64) -> Self;
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ramp<F> {
    pub family: F,
    pub n_coeff: u64,
    pub pos_coeff: u64,
    pub offset: i64,
}

impl<F> Ramp<F> {
    fn index(&self, n: u64, i: u64) -> i128 {
        self.n_coeff as i128 * n as i128 + self.pos_coeff as i128 * i as i128 + self.offset as i128
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term<L: Letter> {
    Fixed(L),
    Cycle(Vec<L>),
    Ramp(Ramp<L::Family>),
}

impl<L: Letter> Term<L> {
    /// The letter at position `i` of `x^n`.
    pub fn at(&self, n: u64, i: u64) -> Result<L> {
        match self {
            Term::Fixed(a) => Ok(a.clone()),
            Term::Cycle(letters) => Ok(letters[((i - 1) % letters.len() as u64) as usize].clone()),
            Term::Ramp(r) => {
                let index = r.index(n, i);
                u64::try_from(index)
                    .map(|index| L::from_family(&r.family, index))
                    .map_err(|_| Error::MalformedSequence(format!("family index {index} is negative")))
            }
        }
    }

    pub fn escapes(&self) -> bool {
        matches!(self, Term::Ramp(r) if r.n_coeff > 0)
    }

    pub fn is_n_free(&self) -> bool {
        !self.escapes()
    }

    fn period(&self) -> u64 {
        match self {
            Term::Cycle(letters) => letters.len() as u64,
            _ => 1,
        }
    }

    /// Freezes `n`, giving the term of the word `x^n`.
    pub fn at_index(&self, n: u64) -> Term<L> {
        match self {
            Term::Ramp(r) if r.n_coeff > 0 => Term::Ramp(Ramp {
                family: r.family.clone(),
                n_coeff: 0,
                pos_coeff: r.pos_coeff,
                offset: r.offset + (r.n_coeff * n) as i64,
            }),
            t => t.clone(),
        }
    }

    /// Translates letters and families into another alphabet.
    pub fn map<M: Letter>(
        &self,
        letter: &impl Fn(&L) -> Option<M>,
        family: &impl Fn(&L::Family) -> M::Family,
    ) -> Option<Term<M>> {
        Some(match self {
            Term::Fixed(a) => Term::Fixed(letter(a)?),
            Term::Cycle(xs) => Term::Cycle(xs.iter().map(letter).collect::<Option<_>>()?),
            Term::Ramp(r) => Term::Ramp(Ramp {
                family: family(&r.family),
                n_coeff: r.n_coeff,
                pos_coeff: r.pos_coeff,
                offset: r.offset,
            }),
        })
    }

    fn validate(&self) -> Result<()> {
        match self {
            Term::Cycle(letters) if letters.is_empty() => Err(Error::MalformedSequence("empty cycle".into())),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthTerm {
    Const(u64),
    /// `slope·n + offset`, with `slope ≥ 1`.
    Affine { slope: u64, offset: i64 },
    Infinite,
}

impl LengthTerm {
    /// `ℓ(x^n)`, with `None` for ∞.
    pub fn at(&self, n: u64) -> Option<u64> {
        match *self {
            LengthTerm::Const(c) => Some(c),
            LengthTerm::Affine { slope, offset } => Some((slope as i64 * n as i64 + offset).max(0) as u64),
            LengthTerm::Infinite => None,
        }
    }

    pub fn unbounded(&self) -> bool {
        !matches!(self, LengthTerm::Const(_))
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Shared evaluation of a rule set with a default.
fn term_at<'a, L: Letter>(
    rules: &'a BTreeMap<u64, Term<L>>,
    default: &'a Option<Term<L>>,
    i: u64,
) -> Option<&'a Term<L>> {
    rules.get(&i).or(default.as_ref())
}

fn first_uncovered<L: Letter>(rules: &BTreeMap<u64, Term<L>>) -> u64 {
    (1..).find(|i| !rules.contains_key(i)).expect("finitely many rules")
}

/// A word with no dependence on `n`: a finite or infinite tuple of letters.
#[derive(Debug, Clone)]
pub struct SymbolicWord<L: Letter> {
    length: Option<u64>,
    rules: BTreeMap<u64, Term<L>>,
    default: Option<Term<L>>,
}

impl<L: Letter> SymbolicWord<L> {
    pub fn new(length: Option<u64>, rules: BTreeMap<u64, Term<L>>, default: Option<Term<L>>) -> Result<Self> {
        for (&i, t) in &rules {
            t.validate()?;
            if i == 0 {
                return Err(Error::MalformedSequence("positions start at 1".into()));
            }
            if length.is_some_and(|l| i > l) {
                return Err(Error::MalformedSequence(format!("rule at position {i} lies beyond the length")));
            }
            if t.escapes() {
                return Err(Error::MalformedSequence("a word cannot depend on n".into()));
            }
        }
        if let Some(t) = &default {
            t.validate()?;
            if t.escapes() {
                return Err(Error::MalformedSequence("a word cannot depend on n".into()));
            }
        }
        let uncovered = first_uncovered(&rules);
        if default.is_none() && length.is_none_or(|l| uncovered <= l) {
            return Err(Error::MalformedSequence(format!("position {uncovered} has no rule")));
        }
        let mut word = SymbolicWord { length, rules, default };
        if word.length.is_some_and(|l| word.rules.len() as u64 == l) {
            word.default = None;
        }
        Ok(word)
    }

    pub fn finite(letters: Vec<L>) -> Self {
        let length = Some(letters.len() as u64);
        let rules = letters.into_iter().enumerate().map(|(i, a)| (i as u64 + 1, Term::Fixed(a))).collect();
        SymbolicWord { length, rules, default: None }
    }

    /// `prefix` followed by `cycle` repeated forever.
    pub fn eventually_periodic(prefix: Vec<L>, cycle: Vec<L>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::MalformedSequence("empty cycle".into()));
        }
        let p = prefix.len();
        let mut cyc = cycle;
        let shift = p % cyc.len();
        cyc.rotate_right(shift);
        let rules = prefix.into_iter().enumerate().map(|(i, a)| (i as u64 + 1, Term::Fixed(a))).collect();
        SymbolicWord::new(None, rules, Some(Term::Cycle(cyc)))
    }

    pub fn length(&self) -> Option<u64> {
        self.length
    }

    pub fn rules(&self) -> &BTreeMap<u64, Term<L>> {
        &self.rules
    }

    pub fn default_term(&self) -> Option<&Term<L>> {
        self.default.as_ref()
    }

    pub fn letter_at(&self, i: u64) -> Option<L> {
        if i == 0 || self.length.is_some_and(|l| i > l) {
            return None;
        }
        term_at(&self.rules, &self.default, i).and_then(|t| t.at(0, i).ok())
    }

    /// The largest explicit position, 0 without rules.
    pub fn explicit_depth(&self) -> u64 {
        self.rules.keys().next_back().copied().unwrap_or(0)
    }

    /// Positions beyond which the default rule alone determines the word.
    pub fn sample_depth(&self) -> u64 {
        let period = self.default.as_ref().map_or(1, Term::period);
        self.explicit_depth() + period + 2
    }

    /// The first `len` letters.
    pub fn truncate(&self, len: u64) -> SymbolicWord<L> {
        let len = self.length.map_or(len, |l| l.min(len));
        let rules: BTreeMap<u64, Term<L>> =
            self.rules.iter().filter(|(&i, _)| i <= len).map(|(&i, t)| (i, t.clone())).collect();
        let default = if rules.len() as u64 == len { None } else { self.default.clone() };
        SymbolicWord { length: Some(len), rules, default }
    }

    /// The explicit letters of a finite word.
    pub fn letters(&self) -> Option<Vec<L>> {
        let len = self.length?;
        (1..=len).map(|i| self.letter_at(i)).collect()
    }

    /// Exact equality of the denoted tuples.
    ///
    /// Beyond the explicit positions both words follow their default rules,
    /// and agreement on `lcm(periods) + 2` consecutive positions there forces
    /// agreement everywhere: cycles are periodic, ramps are injective affine
    /// maps into a family, and a ramp never matches a cycle on two positions
    /// one period apart.
    pub fn same_as(&self, other: &SymbolicWord<L>) -> bool {
        if self.length != other.length {
            return false;
        }
        let explicit = self.explicit_depth().max(other.explicit_depth());
        let period = lcm(
            self.default.as_ref().map_or(1, Term::period),
            other.default.as_ref().map_or(1, Term::period),
        );
        let depth = explicit + period + 2;
        let depth = self.length.map_or(depth, |l| l.min(depth));
        (1..=depth).all(|i| self.letter_at(i) == other.letter_at(i))
    }

    /// Translates every term into another alphabet.
    pub fn map<M: Letter>(
        &self,
        letter: impl Fn(&L) -> Option<M>,
        family: impl Fn(&L::Family) -> M::Family,
    ) -> Option<SymbolicWord<M>> {
        let rules = self.rules.iter().map(|(&i, t)| Some((i, t.map(&letter, &family)?))).collect::<Option<_>>()?;
        let default = match &self.default {
            Some(t) => Some(t.map(&letter, &family)?),
            None => None,
        };
        Some(SymbolicWord { length: self.length, rules, default })
    }
}

impl<L: Letter> PartialEq for SymbolicWord<L> {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl<L: Letter> Eq for SymbolicWord<L> {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch<L: Letter> {
    pub length: LengthTerm,
    pub rules: BTreeMap<u64, Term<L>>,
    pub default: Option<Term<L>>,
}

impl<L: Letter> Branch<L> {
    pub fn term(&self, i: u64) -> Option<&Term<L>> {
        term_at(&self.rules, &self.default, i)
    }

    fn first_uncovered(&self) -> u64 {
        first_uncovered(&self.rules)
    }

    /// The pointwise limit along this branch.
    ///
    /// Stable coordinates keep their letter; the first coordinate whose term
    /// escapes caps the limit, as does a constant length.
    pub fn limit(&self) -> SymbolicWord<L> {
        let mut escape = self.rules.iter().filter(|(_, t)| t.escapes()).map(|(&i, _)| i).min();
        if self.default.as_ref().is_some_and(Term::escapes) {
            let i = self.first_uncovered();
            escape = Some(escape.map_or(i, |e| e.min(i)));
        }
        let cap = match self.length {
            LengthTerm::Const(c) => Some(c),
            _ => None,
        };
        let length = match (escape, cap) {
            (Some(j), Some(c)) => Some((j - 1).min(c)),
            (Some(j), None) => Some(j - 1),
            (None, c) => c,
        };
        let rules: BTreeMap<u64, Term<L>> = self
            .rules
            .iter()
            .filter(|(&i, _)| length.is_none_or(|l| i <= l))
            .map(|(&i, t)| (i, t.clone()))
            .collect();
        let needs_default = length.is_none_or(|l| first_uncovered(&rules) <= l);
        let default = if needs_default { self.default.clone() } else { None };
        SymbolicWord { length, rules, default }
    }
}

/// `n ↦ x^n`, one branch per residue of `n − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSequence<L: Letter> {
    branches: Vec<Branch<L>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchVerdict<L: Letter> {
    pub branch: usize,
    pub limit: SymbolicWord<L>,
    pub agrees: bool,
}

/// Outcome of a convergence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergence<L: Letter> {
    pub converges: bool,
    /// When convergent: from this index on every `x^n` is long enough to
    /// exhibit the limit's determining coordinates.
    pub threshold: Option<u64>,
    pub branches: Vec<BranchVerdict<L>>,
}

impl<L: Letter> SymbolicSequence<L> {
    pub fn new(branches: Vec<Branch<L>>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::MalformedSequence("a sequence needs at least one branch".into()));
        }
        for (b, branch) in branches.iter().enumerate() {
            let first_n = b as u64 + 1;
            if let LengthTerm::Affine { slope, offset } = branch.length {
                if slope == 0 {
                    return Err(Error::MalformedSequence("affine lengths need a positive slope".into()));
                }
                if slope as i64 * first_n as i64 + offset < 0 {
                    return Err(Error::MalformedSequence(format!("length is negative at n = {first_n}")));
                }
            }
            for (&i, t) in &branch.rules {
                t.validate()?;
                if i == 0 {
                    return Err(Error::MalformedSequence("positions start at 1".into()));
                }
                if let LengthTerm::Const(c) = branch.length {
                    if i > c {
                        return Err(Error::MalformedSequence(format!("rule at position {i} lies beyond the length")));
                    }
                }
            }
            if let Some(t) = &branch.default {
                t.validate()?;
            }
            let uncovered = branch.first_uncovered();
            let needs_default = match branch.length {
                LengthTerm::Const(c) => uncovered <= c,
                _ => true,
            };
            if needs_default && branch.default.is_none() {
                return Err(Error::MalformedSequence(format!(
                    "branch {b} has no rule for position {uncovered}"
                )));
            }
        }
        Ok(SymbolicSequence { branches })
    }

    pub fn branches(&self) -> &[Branch<L>] {
        &self.branches
    }

    pub fn branch_of(&self, n: u64) -> usize {
        ((n - 1) % self.branches.len() as u64) as usize
    }

    /// The indices `n` served by branch `b`, in order.
    pub fn indices(&self, b: usize) -> impl Iterator<Item = u64> {
        let step = self.branches.len() as u64;
        (0..).map(move |t| b as u64 + 1 + t * step)
    }

    /// `x^n` as a word.
    pub fn instance(&self, n: u64) -> SymbolicWord<L> {
        assert!(n >= 1, "sequence indices start at 1");
        let branch = &self.branches[self.branch_of(n)];
        let length = branch.length.at(n);
        let rules = branch.rules.iter().map(|(&i, t)| (i, t.at_index(n))).collect();
        let default = branch.default.as_ref().map(|t| t.at_index(n));
        let mut word = SymbolicWord { length, rules, default };
        if word.length.is_some_and(|l| first_uncovered(&word.rules) > l) {
            word.default = None;
        }
        word
    }

    /// The common limit of all branches, if they agree.
    pub fn limit(&self) -> Option<SymbolicWord<L>> {
        let mut limits = self.branches.iter().map(Branch::limit);
        let first = limits.next()?;
        limits.all(|l| l == first).then_some(first)
    }

    pub fn converges(&self, target: &SymbolicWord<L>) -> Convergence<L> {
        let branches: Vec<BranchVerdict<L>> = self
            .branches
            .iter()
            .enumerate()
            .map(|(b, branch)| {
                let limit = branch.limit();
                let agrees = limit == *target;
                BranchVerdict { branch: b, limit, agrees }
            })
            .collect();
        let converges = branches.iter().all(|b| b.agrees);
        let threshold = converges.then(|| {
            let depth = target.length().unwrap_or(target.explicit_depth() + 1);
            (0..self.branches.len())
                .map(|b| {
                    self.indices(b)
                        .find(|&n| self.branches[b].length.at(n).is_none_or(|l| l >= depth))
                        .expect("unbounded lengths eventually exceed any depth")
                })
                .max()
                .unwrap_or(1)
        });
        Convergence { converges, threshold, branches }
    }
}

// File formats.

/// `{"const": c}`, `{"affine": [slope, offset]}` or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LengthSpec {
    Infinite(InfTag),
    Const {
        #[serde(rename = "const")]
        value: u64,
    },
    Affine {
        affine: (u64, i64),
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfTag {
    #[serde(rename = "inf")]
    Inf,
}

impl From<LengthSpec> for LengthTerm {
    fn from(s: LengthSpec) -> Self {
        match s {
            LengthSpec::Infinite(_) => LengthTerm::Infinite,
            LengthSpec::Const { value } => LengthTerm::Const(value),
            LengthSpec::Affine { affine: (slope, offset) } => LengthTerm::Affine { slope, offset },
        }
    }
}

impl From<LengthTerm> for LengthSpec {
    fn from(t: LengthTerm) -> Self {
        match t {
            LengthTerm::Infinite => LengthSpec::Infinite(InfTag::Inf),
            LengthTerm::Const(value) => LengthSpec::Const { value },
            LengthTerm::Affine { slope, offset } => LengthSpec::Affine { affine: (slope, offset) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RampSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default)]
    pub n: u64,
    #[serde(default)]
    pub pos: u64,
    #[serde(default)]
    pub offset: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermSpec<X> {
    Fixed(X),
    Cycle(Vec<X>),
    Ramp(RampSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, bound(deserialize = "X: Deserialize<'de>"))]
pub struct BranchSpec<X> {
    pub length: LengthSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub rules: BTreeMap<u64, TermSpec<X>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default: Option<TermSpec<X>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(deserialize = "X: Deserialize<'de>"))]
pub struct SequenceSpec<X> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<String>,
    pub branches: Vec<BranchSpec<X>>,
}

/// Resolves letters and family names of a file-level term.
pub trait Resolver<X, L: Letter> {
    fn letter(&self, x: &X) -> Result<L>;
    fn family(&self, name: Option<&str>) -> Result<L::Family>;
    fn show(&self, l: &L) -> X;
    fn family_name(&self, f: &L::Family) -> Option<String>;
}

pub fn resolve_term<X, L: Letter>(r: &impl Resolver<X, L>, spec: &TermSpec<X>) -> Result<Term<L>> {
    Ok(match spec {
        TermSpec::Fixed(x) => Term::Fixed(r.letter(x)?),
        TermSpec::Cycle(xs) => Term::Cycle(xs.iter().map(|x| r.letter(x)).collect::<Result<_>>()?),
        TermSpec::Ramp(s) => Term::Ramp(Ramp {
            family: r.family(s.family.as_deref())?,
            n_coeff: s.n,
            pos_coeff: s.pos,
            offset: s.offset,
        }),
    })
}

pub fn show_term<X, L: Letter>(r: &impl Resolver<X, L>, t: &Term<L>) -> TermSpec<X> {
    match t {
        Term::Fixed(a) => TermSpec::Fixed(r.show(a)),
        Term::Cycle(xs) => TermSpec::Cycle(xs.iter().map(|a| r.show(a)).collect()),
        Term::Ramp(ramp) => TermSpec::Ramp(RampSpec {
            family: r.family_name(&ramp.family),
            n: ramp.n_coeff,
            pos: ramp.pos_coeff,
            offset: ramp.offset,
        }),
    }
}

type Rules<L> = (BTreeMap<u64, Term<L>>, Option<Term<L>>);

fn resolve_rules<X, L: Letter>(
    r: &impl Resolver<X, L>,
    rules: &BTreeMap<u64, TermSpec<X>>,
    default: &Option<TermSpec<X>>,
) -> Result<Rules<L>> {
    let rules = rules.iter().map(|(&i, t)| Ok((i, resolve_term(r, t)?))).collect::<Result<_>>()?;
    let default = default.as_ref().map(|t| resolve_term(r, t)).transpose()?;
    Ok((rules, default))
}

pub fn resolve_sequence<X, L: Letter>(r: &impl Resolver<X, L>, spec: &SequenceSpec<X>) -> Result<SymbolicSequence<L>> {
    let branches = spec
        .branches
        .iter()
        .map(|b| {
            let (rules, default) = resolve_rules(r, &b.rules, &b.default)?;
            Ok(Branch { length: b.length.into(), rules, default })
        })
        .collect::<Result<_>>()?;
    SymbolicSequence::new(branches)
}

pub fn resolve_word<X, L: Letter>(r: &impl Resolver<X, L>, spec: &BranchSpec<X>) -> Result<SymbolicWord<L>> {
    let length = match LengthTerm::from(spec.length) {
        LengthTerm::Const(c) => Some(c),
        LengthTerm::Infinite => None,
        LengthTerm::Affine { .. } => {
            return Err(Error::MalformedSequence("a single word cannot have an affine length".into()))
        }
    };
    let (rules, default) = resolve_rules(r, &spec.rules, &spec.default)?;
    SymbolicWord::new(length, rules, default)
}

pub fn show_word<X, L: Letter>(r: &impl Resolver<X, L>, w: &SymbolicWord<L>) -> BranchSpec<X> {
    BranchSpec {
        length: match w.length {
            Some(value) => LengthSpec::Const { value },
            None => LengthSpec::Infinite(InfTag::Inf),
        },
        rules: w.rules.iter().map(|(&i, t)| (i, show_term(r, t))).collect(),
        default: w.default.as_ref().map(|t| show_term(r, t)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    impl Letter for u64 {
        type Family = ();
        fn from_family(_: &(), index: u64) -> u64 {
            index
        }
    }

    fn ramp(n: u64, pos: u64, offset: i64) -> Term<u64> {
        Term::Ramp(Ramp { family: (), n_coeff: n, pos_coeff: pos, offset })
    }

    fn word(prefix: &[u64], cycle: &[u64]) -> SymbolicWord<u64> {
        SymbolicWord::eventually_periodic(prefix.to_vec(), cycle.to_vec()).unwrap()
    }

    #[test]
    fn eventual_words_compare_exactly() {
        assert_eq!(word(&[1], &[2]), word(&[1, 2], &[2, 2]));
        assert_ne!(word(&[1], &[2]), word(&[2, 1], &[2]));
        assert_eq!(word(&[], &[1, 2]), word(&[1, 2, 1], &[2, 1]));
        let naturals = SymbolicWord::new(None, BTreeMap::new(), Some(ramp(0, 1, 0))).unwrap();
        let shifted = SymbolicWord::new(None, BTreeMap::from([(1, Term::Fixed(1))]), Some(ramp(0, 1, 0))).unwrap();
        assert_eq!(naturals, shifted);
        assert_ne!(naturals, word(&[1, 2, 3], &[4]));
        assert_eq!(naturals.letter_at(5), Some(5));
    }

    #[test]
    fn branch_limits_follow_the_two_cases() {
        // 1 2 3 … n
        let counting = Branch { length: LengthTerm::Affine { slope: 1, offset: 0 }, rules: BTreeMap::new(), default: Some(ramp(0, 1, 0)) };
        let limit = counting.limit();
        assert_eq!(limit.length(), None);
        assert_eq!(limit.letter_at(9), Some(9));
        // 1 2 n 1 1 …
        let escaping = Branch {
            length: LengthTerm::Infinite,
            rules: BTreeMap::from([(1, Term::Fixed(1)), (2, Term::Fixed(2)), (3, ramp(1, 0, 0))]),
            default: Some(Term::Fixed(1)),
        };
        assert_eq!(escaping.limit(), SymbolicWord::finite(vec![1, 2]));
        // n n n …
        let diagonal = Branch { length: LengthTerm::Infinite, rules: BTreeMap::new(), default: Some(ramp(1, 0, 0)) };
        assert_eq!(diagonal.limit(), SymbolicWord::finite(vec![]));
    }

    #[test]
    fn alternating_sequences_have_no_limit() {
        let seq = SymbolicSequence::new(vec![
            Branch { length: LengthTerm::Const(1), rules: BTreeMap::from([(1, Term::Fixed(1))]), default: None },
            Branch { length: LengthTerm::Const(1), rules: BTreeMap::from([(1, Term::Fixed(2))]), default: None },
        ])
        .unwrap();
        assert!(seq.limit().is_none());
        assert_eq!(seq.instance(4).letters(), Some(vec![2]));
    }

    #[test]
    fn thresholds_wait_for_long_enough_terms() {
        let seq = SymbolicSequence::new(vec![Branch {
            length: LengthTerm::Affine { slope: 1, offset: 0 },
            rules: BTreeMap::from([(1, Term::Fixed(7))]),
            default: Some(ramp(1, 0, 0)),
        }])
        .unwrap();
        let verdict = seq.converges(&SymbolicWord::finite(vec![7]));
        assert!(verdict.converges);
        assert_eq!(verdict.threshold, Some(1));
        assert!(!seq.converges(&SymbolicWord::finite(vec![])).converges);
    }

    #[test]
    fn malformed_sequences_are_rejected() {
        let gap = Branch { length: LengthTerm::Const(2), rules: BTreeMap::from([(1, Term::Fixed(1))]), default: None };
        assert!(SymbolicSequence::new(vec![gap]).is_err());
        assert!(SymbolicSequence::<u64>::new(vec![]).is_err());
        let negative = Branch { length: LengthTerm::Affine { slope: 1, offset: -3 }, rules: BTreeMap::new(), default: Some(Term::Fixed(1)) };
        assert!(SymbolicSequence::new(vec![negative]).is_err());
    }
}
