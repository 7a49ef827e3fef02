//! The path groupoid: triples `(λw, d(λ) − d(μ), μw)` and the basic sets
//! `Z(λ, μ)`.

use serde::Serialize;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::kgraph::{KGraph, Morphism};
use crate::paths::Path;

/// An element `(x, n, y)` together with one witness `(λ, μ, w)`.
///
/// Many witnesses give the same element; compare with [`KGraph::same_element`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidElement {
    pub x: Path,
    pub shift: Vec<i64>,
    pub y: Path,
    pub lambda: Morphism,
    pub mu: Morphism,
    pub w: Path,
}

/// `Z(λ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    pub lambda: Morphism,
    pub mu: Morphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub elements: usize,
    pub range_injective: bool,
    pub range_surjective: bool,
    pub source_injective: bool,
    pub source_surjective: bool,
    /// A tail `w` that reaches an image already produced by another tail.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duplicate: Option<String>,
    /// A path of `λW` or `μW` in the enumeration that is not hit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missed: Option<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.range_injective && self.range_surjective && self.source_injective && self.source_surjective
    }
}

fn add_shift(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl KGraph {
    pub fn make_element(&self, lambda: &Morphism, mu: &Morphism, w: &Path) -> Result<GroupoidElement> {
        if lambda.source() != mu.source() || lambda.source() != w.range() {
            return Err(Error::InvalidElement(format!(
                "s({}) = {}, s({}) = {} and r(w) = {} must agree",
                self.display(lambda),
                self.vertex_name(lambda.source()),
                self.display(mu),
                self.vertex_name(mu.source()),
                self.vertex_name(w.range())
            )));
        }
        Ok(GroupoidElement {
            x: self.product(lambda, w)?,
            shift: lambda.degree().diff(mu.degree())?,
            y: self.product(mu, w)?,
            lambda: lambda.clone(),
            mu: mu.clone(),
            w: w.clone(),
        })
    }

    /// The unit `(w, 0, w)`.
    pub fn unit(&self, w: &Path) -> Result<GroupoidElement> {
        let v = self.vertex(w.range());
        self.make_element(&v, &v, w)
    }

    pub fn is_unit(&self, g: &GroupoidElement) -> Result<bool> {
        Ok(g.shift.iter().all(|&s| s == 0) && self.path_eq(&g.x, &g.y)?)
    }

    /// Equality of `(x, n, y)`, ignoring witnesses.
    pub fn same_element(&self, g: &GroupoidElement, h: &GroupoidElement) -> Result<bool> {
        Ok(g.shift == h.shift && self.path_eq(&g.x, &h.x)? && self.path_eq(&g.y, &h.y)?)
    }

    pub fn invert(&self, g: &GroupoidElement) -> GroupoidElement {
        GroupoidElement {
            x: g.y.clone(),
            shift: g.shift.iter().map(|s| -s).collect(),
            y: g.x.clone(),
            lambda: g.mu.clone(),
            mu: g.lambda.clone(),
            w: g.w.clone(),
        }
    }

    /// `(x, n, y)(y, ℓ, z) = (x, n + ℓ, z)`.
    ///
    /// With `D = d(μ) ∨ d(λ′)` and `y = y_D t`, the witnesses refine to
    /// `(λσ, μ′σ′, t)` where `y_D = μσ = λ′σ′`.
    pub fn compose_elements(&self, g: &GroupoidElement, h: &GroupoidElement) -> Result<GroupoidElement> {
        if !self.path_eq(&g.y, &h.x)? {
            return Err(Error::NotComposableElements(format!(
                "{} ≠ {}",
                self.display_path(&g.y),
                self.display_path(&h.x)
            )));
        }
        let d = g.mu.degree().join(h.lambda.degree())?;
        let head = self.prefix(&g.y, &d)?;
        let tail = self.tail(&g.y, &d)?;
        let sigma = self.factorize(&head, g.mu.degree())?.1;
        let sigma2 = self.factorize(&head, h.lambda.degree())?.1;
        let lambda = self.compose(&g.lambda, &sigma)?;
        let mu = self.compose(&h.mu, &sigma2)?;
        let out = self.make_element(&lambda, &mu, &tail)?;
        debug_assert_eq!(out.shift, add_shift(&g.shift, &h.shift));
        Ok(out)
    }

    /// A second witness for `g`: `(λν, μν, w′)` with `w = νw′` and `d(ν) = m`.
    pub fn refine_witness(&self, g: &GroupoidElement, m: &Degree) -> Result<GroupoidElement> {
        let nu = self.prefix(&g.w, m)?;
        let rest = self.tail(&g.w, m)?;
        self.make_element(&self.compose(&g.lambda, &nu)?, &self.compose(&g.mu, &nu)?, &rest)
    }

    pub fn basis_membership(&self, g: &GroupoidElement, z: &BasisSet) -> Result<bool> {
        if g.shift != z.lambda.degree().diff(z.mu.degree())? {
            return Ok(false);
        }
        if !self.is_path_prefix(&z.lambda, &g.x)? || !self.is_path_prefix(&z.mu, &g.y)? {
            return Ok(false);
        }
        self.path_eq(&self.tail(&g.x, z.lambda.degree())?, &self.tail(&g.y, z.mu.degree())?)
    }

    /// `Z(λ, μ) ∩ Z(λ′, μ′)` as the union of `Z(λα, μα)` over `λα = λ′α′`
    /// in `E_{λ,λ′}` with `μα = μ′α′`.
    pub fn basis_intersection(&self, z: &BasisSet, z2: &BasisSet) -> Result<Vec<BasisSet>> {
        if z.lambda.range() != z2.lambda.range()
            || z.mu.range() != z2.mu.range()
            || z.lambda.degree().diff(z.mu.degree())? != z2.lambda.degree().diff(z2.mu.degree())?
        {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for nu in self.common_extensions(&z.lambda, &z2.lambda)? {
            let alpha = self.factorize(&nu, z.lambda.degree())?.1;
            let alpha2 = self.factorize(&nu, z2.lambda.degree())?.1;
            let tau = self.compose(&z.mu, &alpha)?;
            if tau == self.compose(&z2.mu, &alpha2)? {
                out.push(BasisSet { lambda: nu, mu: tau });
            }
        }
        Ok(out)
    }

    /// Checks that `(λw, ·, μw) ↦ λw` and `↦ μw` are bijections onto the
    /// enumerated parts of `λW` and `μW`, for tails up to `bound`.
    pub fn range_source_bijection_check(&self, z: &BasisSet, bound: &Degree, limit: Option<u64>) -> Result<BijectionReport> {
        let ws = self.enumerate_paths(z.lambda.source(), bound, limit)?;
        self.range_source_bijection_check_on(z, bound, limit, &ws)
    }

    /// As [`Self::range_source_bijection_check`], over the given tails.
    pub fn range_source_bijection_check_on(
        &self,
        z: &BasisSet,
        bound: &Degree,
        limit: Option<u64>,
        ws: &[Path],
    ) -> Result<BijectionReport> {
        let mut report = BijectionReport {
            elements: 0,
            range_injective: true,
            range_surjective: true,
            source_injective: true,
            source_surjective: true,
            duplicate: None,
            missed: None,
        };
        let mut ranges: Vec<Path> = Vec::new();
        let mut sources: Vec<Path> = Vec::new();
        for w in ws {
            let g = self.make_element(&z.lambda, &z.mu, w)?;
            report.elements += 1;
            for (seen, image, flag) in [
                (&mut ranges, &g.x, &mut report.range_injective),
                (&mut sources, &g.y, &mut report.source_injective),
            ] {
                let mut repeated = false;
                for u in seen.iter() {
                    if self.path_eq(u, image)? {
                        repeated = true;
                        break;
                    }
                }
                if repeated {
                    *flag = false;
                    report.duplicate.get_or_insert_with(|| self.display_path(w));
                } else {
                    seen.push(image.clone());
                }
            }
        }
        // Paths of λW in the enumeration whose tail fits the bound must be hit.
        let fits = |t: &Path| -> Result<bool> {
            Ok(match t {
                Path::Finite(m) => m.degree().leq(bound)?,
                Path::Infinite(p) => p.prefix().degree().leq(bound)? && p.cycle().degree().leq(bound)?,
            })
        };
        for (base, images, flag) in [
            (&z.lambda, &ranges, &mut report.range_surjective),
            (&z.mu, &sources, &mut report.source_surjective),
        ] {
            let reach = base.degree().add(bound)?;
            for x in self.enumerate_paths(base.range(), &reach, limit)? {
                if !self.is_path_prefix(base, &x)? || !fits(&self.tail(&x, base.degree())?)? {
                    continue;
                }
                let mut hit = false;
                for u in images.iter() {
                    if self.path_eq(u, &x)? {
                        hit = true;
                        break;
                    }
                }
                if !hit {
                    *flag = false;
                    report.missed.get_or_insert_with(|| self.display_path(&x));
                }
            }
        }
        Ok(report)
    }

    /// `λ|μ|w`.
    pub fn parse_element(&self, literal: &str) -> Result<GroupoidElement> {
        let parts: Vec<&str> = literal.split('|').map(str::trim).collect();
        let [l, m, w] = parts[..] else {
            return Err(Error::Parse { input: literal.into(), reason: "expected λ|μ|w".into() });
        };
        self.make_element(&self.parse_morphism(l)?, &self.parse_morphism(m)?, &self.parse_path(w)?)
    }

    pub fn parse_basis_set(&self, literal: &str) -> Result<BasisSet> {
        let Some((l, m)) = literal.split_once('|') else {
            return Err(Error::Parse { input: literal.into(), reason: "expected λ|μ".into() });
        };
        let (lambda, mu) = (self.parse_morphism(l.trim())?, self.parse_morphism(m.trim())?);
        if lambda.source() != mu.source() {
            return Err(Error::InvalidElement(format!("s({l}) ≠ s({m})")));
        }
        Ok(BasisSet { lambda, mu })
    }

    /// `(x, n, y)`.
    pub fn display_element(&self, g: &GroupoidElement) -> String {
        let shift: Vec<String> = g.shift.iter().map(i64::to_string).collect();
        let show = |p: &Path| self.display_path(&self.canonical_path(p).unwrap_or_else(|_| p.clone()));
        format!("({}, ({}), {})", show(&g.x), shift.join(","), show(&g.y))
    }

    pub fn display_witness(&self, g: &GroupoidElement) -> String {
        format!("{}|{}|{}", self.display(&g.lambda), self.display(&g.mu), self.display_path(&g.w))
    }

    pub fn display_basis_set(&self, z: &BasisSet) -> String {
        format!("Z({}, {})", self.display(&z.lambda), self.display(&z.mu))
    }
}
