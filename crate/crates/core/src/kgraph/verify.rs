//! Bounded certification of the k-graph axioms.

use std::collections::HashMap;

use serde::Serialize;

use super::{Backend, Edge, KGraph, Morphism, SquareData, TableData};
use crate::degree::{Degree, DegreeError};
use crate::error::Result;

const DEFAULT_FAMILY_LIMIT: u64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub morphism: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<Degree>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub bound: Degree,
    /// The bound actually covered; smaller than `bound` for tables declared
    /// to a lower degree.
    pub checked_bound: Degree,
    pub family_limit: u64,
    pub morphisms_checked: usize,
    pub splits_checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl KGraph {
    /// Checks degree-additivity, associativity and unique factorization for
    /// every morphism of degree at most `bound`. Infinite families are
    /// truncated to their first three members.
    pub fn verify_axioms(&self, bound: &Degree) -> Result<AxiomReport> {
        self.verify_axioms_with(bound, DEFAULT_FAMILY_LIMIT)
    }

    pub fn verify_axioms_with(&self, bound: &Degree, family_limit: u64) -> Result<AxiomReport> {
        if bound.rank() != self.rank {
            return Err(DegreeError::RankMismatch { left: bound.rank(), right: self.rank }.into());
        }
        let checked_bound = match &self.backend {
            Backend::Table(t) => bound.meet(&t.bound)?,
            _ => bound.clone(),
        };
        let mut report = AxiomReport {
            bound: bound.clone(),
            checked_bound: checked_bound.clone(),
            family_limit,
            morphisms_checked: 0,
            splits_checked: 0,
            counterexample: None,
        };
        let structural = match &self.backend {
            Backend::OneGraph(_) => None,
            Backend::Squares(_, squares) => self.check_squares(squares)?,
            Backend::Table(t) => self.check_table(t, &checked_bound)?,
        };
        if structural.is_some() {
            report.counterexample = structural;
            return Ok(report);
        }
        report.counterexample = self.brute_force(&checked_bound, family_limit, &mut report)?;
        Ok(report)
    }

    fn edge_pair(&self, a: Edge, b: Edge) -> String {
        format!("{}:{}.{}", self.vertex_name(self.edge_src(a).unwrap_or(0)), self.edge_name(a), self.edge_name(b))
    }

    fn check_squares(&self, squares: &SquareData) -> Result<Option<Counterexample>> {
        for sq in &squares.squares {
            let [e, f, f2, e2] = *sq;
            let colors = [self.edge_color(e)?, self.edge_color(f)?, self.edge_color(f2)?, self.edge_color(e2)?];
            let shape = colors == [0, 1, 1, 0]
                && self.edge_dst(e)? == self.edge_src(f)?
                && self.edge_dst(f2)? == self.edge_src(e2)?
                && self.edge_src(e)? == self.edge_src(f2)?
                && self.edge_dst(f)? == self.edge_dst(e2)?;
            if !shape {
                return Ok(Some(Counterexample {
                    morphism: self.edge_pair(e, f),
                    split: None,
                    reason: format!(
                        "square [{}, {}, {}, {}] is not a commuting square of blue-red and red-blue paths",
                        self.edge_name(e),
                        self.edge_name(f),
                        self.edge_name(f2),
                        self.edge_name(e2)
                    ),
                }));
            }
        }
        let mut blue_red: HashMap<(Edge, Edge), usize> = HashMap::new();
        let mut red_blue: HashMap<(Edge, Edge), usize> = HashMap::new();
        for sq in &squares.squares {
            *blue_red.entry((sq[0], sq[1])).or_default() += 1;
            *red_blue.entry((sq[2], sq[3])).or_default() += 1;
        }
        let edges = self.edges().expect("squares backend has edges");
        for v in self.vertex_ids() {
            for (first, second, counts, which) in [(0, 1, &blue_red, (1, 0)), (1, 0, &red_blue, (0, 1))] {
                for &g1 in &edges.out[v as usize][first] {
                    let a = Edge { group: g1, index: 0 };
                    for &g2 in &edges.out[self.edge_dst(a)? as usize][second] {
                        let b = Edge { group: g2, index: 0 };
                        let n = counts.get(&(a, b)).copied().unwrap_or(0);
                        if n != 1 {
                            let split = Degree::new(vec![which.0, which.1]);
                            return Ok(Some(Counterexample {
                                morphism: self.edge_pair(a, b),
                                split: Some(split),
                                reason: format!("path lies in {n} commuting squares, expected exactly one"),
                            }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn check_table(&self, t: &TableData, bound: &Degree) -> Result<Option<Counterexample>> {
        let name = |id: u32| t.morphs[id as usize].name.clone();
        let src_name = |id: u32| self.vertex_name(t.morphs[id as usize].src).to_string();
        let fail = |id: u32, split: Option<Degree>, reason: String| {
            Some(Counterexample { morphism: format!("{}:{}", src_name(id), name(id)), split, reason })
        };
        for &(a, b, c) in &t.entries {
            let (ma, mb, mc) = (&t.morphs[a as usize], &t.morphs[b as usize], &t.morphs[c as usize]);
            if ma.degree.add(&mb.degree)? != mc.degree {
                return Ok(fail(
                    c,
                    Some(ma.degree.clone()),
                    format!("{}·{} = {} is not degree-additive", ma.name, mb.name, mc.name),
                ));
            }
            if ma.dst != mb.src || ma.src != mc.src || mb.dst != mc.dst {
                return Ok(fail(
                    c,
                    Some(ma.degree.clone()),
                    format!("{}·{} = {} has inconsistent endpoints", ma.name, mb.name, mc.name),
                ));
            }
        }
        let within = |d: &Degree| d.leq(bound);
        for &(a, b, ab) in &t.entries {
            for c in 0..t.morphs.len() as u32 {
                if t.morphs[b as usize].dst != t.morphs[c as usize].src {
                    continue;
                }
                let total = t.morphs[ab as usize].degree.add(&t.morphs[c as usize].degree)?;
                if !within(&total)? {
                    continue;
                }
                let left = t.compose.get(&(ab, c));
                let right = t.compose.get(&(b, c)).and_then(|&bc| t.compose.get(&(a, bc)));
                if left != right || left.is_none() {
                    let shown = left.or(right).copied().unwrap_or(ab);
                    return Ok(fail(
                        shown,
                        Some(t.morphs[a as usize].degree.clone()),
                        format!("({}·{})·{} and {}·({}·{}) differ", name(a), name(b), name(c), name(a), name(b), name(c)),
                    ));
                }
            }
        }
        for a in 0..t.morphs.len() as u32 {
            for b in 0..t.morphs.len() as u32 {
                let (ma, mb) = (&t.morphs[a as usize], &t.morphs[b as usize]);
                if ma.dst != mb.src || !within(&ma.degree.add(&mb.degree)?)? {
                    continue;
                }
                // Pairs declared unbounded have no tabulated composite.
                if t.unbounded.iter().any(|&p| p == (a, b) || p == (b, a)) {
                    continue;
                }
                if !t.compose.contains_key(&(a, b)) {
                    return Ok(fail(
                        a,
                        None,
                        format!("composition {}·{} is missing from the table", ma.name, mb.name),
                    ));
                }
            }
        }
        Ok(None)
    }

    fn brute_force(
        &self,
        bound: &Degree,
        family_limit: u64,
        report: &mut AxiomReport,
    ) -> Result<Option<Counterexample>> {
        let all = self.morphisms_up_to(bound, None, Some(family_limit))?;
        report.morphisms_checked = all.len();
        for lambda in &all {
            for m in lambda.degree().down_set() {
                report.splits_checked += 1;
                let fail = |reason: String| {
                    Some(Counterexample { morphism: self.display(lambda), split: Some(m.clone()), reason })
                };
                let (mu, nu) = match self.factorize(lambda, &m) {
                    Ok(pair) => pair,
                    Err(e) => return Ok(fail(e.to_string())),
                };
                if mu.degree() != &m || nu.degree() != &lambda.degree().sub(&m)? {
                    return Ok(fail("factors have the wrong degrees".into()));
                }
                if mu.range() != lambda.range() || nu.source() != lambda.source() || mu.source() != nu.range() {
                    return Ok(fail("factors have inconsistent endpoints".into()));
                }
                match self.compose(&mu, &nu) {
                    Ok(back) if back == *lambda => {}
                    Ok(back) => {
                        return Ok(fail(format!(
                            "factors compose to {} instead",
                            self.display(&back)
                        )))
                    }
                    Err(e) => return Ok(fail(e.to_string())),
                }
            }
        }
        // Uniqueness: every composable pair within the bound must be the
        // factorization its composite reports.
        let mut seen: HashMap<(Morphism, Degree), (Morphism, Morphism)> = HashMap::new();
        for mu in &all {
            let Ok(room) = bound.sub(mu.degree()) else { continue };
            for nu in self.morphisms_up_to(&room, Some(mu.source()), Some(family_limit))? {
                if self.declared_unbounded(mu, &nu) {
                    continue;
                }
                let lambda = match self.compose(mu, &nu) {
                    Ok(l) => l,
                    Err(e) => {
                        return Ok(Some(Counterexample {
                            morphism: format!("{} then {}", self.display(mu), self.display(&nu)),
                            split: Some(mu.degree().clone()),
                            reason: e.to_string(),
                        }))
                    }
                };
                if lambda.degree() != &mu.degree().add(nu.degree())? {
                    return Ok(Some(Counterexample {
                        morphism: self.display(&lambda),
                        split: Some(mu.degree().clone()),
                        reason: "composition is not degree-additive".into(),
                    }));
                }
                let key = (lambda.clone(), mu.degree().clone());
                if let Some((prev, prev_tail)) = seen.insert(key, (mu.clone(), nu.clone())) {
                    if prev != *mu || prev_tail != nu {
                        return Ok(Some(Counterexample {
                            morphism: self.display(&lambda),
                            split: Some(mu.degree().clone()),
                            reason: format!(
                                "distinct factorizations {} then {} and {} then {}",
                                self.display(&prev),
                                self.display(&prev_tail),
                                self.display(mu),
                                self.display(&nu)
                            ),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}
