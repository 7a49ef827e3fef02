//! Minimal common extensions and the finite-alignment check.

use serde::Serialize;

use super::{Backend, KGraph, Morphism};
use crate::degree::{Degree, DegreeError};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlignmentReport {
    pub bound: Degree,
    pub pairs_checked: usize,
    /// Pairs whose join lies beyond a table's declared bound.
    pub pairs_skipped: usize,
    pub max_extensions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending: Option<(String, String)>,
    pub reason: String,
}

impl AlignmentReport {
    pub fn passed(&self) -> bool {
        self.offending.is_none()
    }
}

impl KGraph {
    pub(super) fn declared_unbounded(&self, lambda: &Morphism, mu: &Morphism) -> bool {
        let Backend::Table(t) = &self.backend else { return false };
        let (super::Body::Table(a), super::Body::Table(b)) = (lambda.body(), mu.body()) else {
            return false;
        };
        t.unbounded.iter().any(|&(x, y)| (x, y) == (*a, *b) || (y, x) == (*a, *b))
    }

    /// `E_{λ,μ}`: the common extensions of degree `d(λ) ∨ d(μ)`.
    pub fn common_extensions(&self, lambda: &Morphism, mu: &Morphism) -> Result<Vec<Morphism>> {
        if lambda.range() != mu.range() {
            return Err(Error::RangeMismatch(self.display(lambda), self.display(mu)));
        }
        if let Backend::OneGraph(_) = self.backend {
            let (short, long) = if lambda.degree().leq(mu.degree())? { (lambda, mu) } else { (mu, lambda) };
            return Ok(if self.is_prefix(short, long)? { vec![long.clone()] } else { Vec::new() });
        }
        self.common_extensions_enumerated(lambda, mu, None)
    }

    /// `E_{λ,μ}` by filtering `Λ^{d(λ)∨d(μ)}`, for any backend.
    pub fn common_extensions_enumerated(
        &self,
        lambda: &Morphism,
        mu: &Morphism,
        limit: Option<u64>,
    ) -> Result<Vec<Morphism>> {
        if lambda.range() != mu.range() {
            return Err(Error::RangeMismatch(self.display(lambda), self.display(mu)));
        }
        if self.declared_unbounded(lambda, mu) {
            return Err(Error::NotEnumerable(format!(
                "{} and {} are declared to have infinitely many common extensions",
                self.display(lambda),
                self.display(mu)
            )));
        }
        let join = lambda.degree().join(mu.degree())?;
        let candidates = match self.morphisms_with_limit(&join, Some(lambda.range()), limit) {
            Ok(c) => c,
            Err(Error::LimitRequired) | Err(Error::BeyondTableBound(..)) => {
                return Err(Error::NotEnumerable(format!("degree {join} from {}", self.vertex_name(lambda.range()))))
            }
            Err(e) => return Err(e),
        };
        let mut out = Vec::new();
        for nu in candidates {
            if self.is_prefix(lambda, &nu)? && self.is_prefix(mu, &nu)? {
                out.push(nu);
            }
        }
        Ok(out)
    }

    /// Certifies `|E_{λ,μ}| < ∞` for all pairs of degree at most `bound`.
    pub fn check_finitely_aligned(&self, bound: &Degree) -> Result<AlignmentReport> {
        if bound.rank() != self.rank {
            return Err(DegreeError::RankMismatch { left: bound.rank(), right: self.rank }.into());
        }
        let mut report = AlignmentReport {
            bound: bound.clone(),
            pairs_checked: 0,
            pairs_skipped: 0,
            max_extensions: 0,
            offending: None,
            reason: String::new(),
        };
        match &self.backend {
            Backend::OneGraph(_) => {
                report.max_extensions = 1;
                report.reason = "1-graph: at most one common extension per pair".into();
                return Ok(report);
            }
            Backend::Table(t) => {
                for &(a, b) in &t.unbounded {
                    let (ma, mb) = (self.table_morphism(t, a), self.table_morphism(t, b));
                    if ma.degree().leq(bound)? && mb.degree().leq(bound)? {
                        report.offending = Some((self.display(&ma), self.display(&mb)));
                        report.reason = "declared to have infinitely many common extensions".into();
                        return Ok(report);
                    }
                }
            }
            Backend::Squares(..) => {}
        }
        let table_bound = match &self.backend {
            Backend::Table(t) => Some(t.bound.clone()),
            _ => None,
        };
        let within = match &table_bound {
            Some(b) => bound.meet(b)?,
            None => bound.clone(),
        };
        let all = self.morphisms_up_to(&within, None, None)?;
        for (i, lambda) in all.iter().enumerate() {
            for mu in &all[i..] {
                if lambda.range() != mu.range() {
                    continue;
                }
                let join = lambda.degree().join(mu.degree())?;
                if let Some(b) = &table_bound {
                    if !join.leq(b)? {
                        report.pairs_skipped += 1;
                        continue;
                    }
                }
                report.pairs_checked += 1;
                let e = self.common_extensions(lambda, mu)?;
                report.max_extensions = report.max_extensions.max(e.len());
            }
        }
        report.reason = "every common extension set is finite".into();
        Ok(report)
    }
}
