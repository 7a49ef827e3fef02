//! Finite and eventually periodic infinite paths.
//!
//! An infinite path is stored as `λ c c c …` with `c` a cycle at `s(λ)`.
//! Its extended degree is infinite exactly on the coordinates where
//! `d(c)` is positive.

use std::collections::HashSet;
use std::fmt;

use crate::degree::{Degree, DegreeError, ExtCoord, ExtDegree};
use crate::error::{Error, Result};
use crate::kgraph::{BackendKind, Edge, KGraph, Morphism, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfinitePath {
    prefix: Morphism,
    cycle: Morphism,
}

impl InfinitePath {
    pub fn prefix(&self) -> &Morphism {
        &self.prefix
    }

    pub fn cycle(&self) -> &Morphism {
        &self.cycle
    }
}

/// A point of the path space `W`.
///
/// Structural equality compares representations; use [`KGraph::path_eq`]
/// for equality of paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Finite(Morphism),
    Infinite(InfinitePath),
}

impl From<Morphism> for Path {
    fn from(m: Morphism) -> Self {
        Path::Finite(m)
    }
}

impl Path {
    pub fn range(&self) -> VertexId {
        match self {
            Path::Finite(m) => m.range(),
            Path::Infinite(p) => p.prefix.range(),
        }
    }

    pub fn extdegree(&self) -> ExtDegree {
        match self {
            Path::Finite(m) => m.degree().into(),
            Path::Infinite(p) => ExtDegree::new(
                p.prefix
                    .degree()
                    .coords()
                    .iter()
                    .zip(p.cycle.degree().coords())
                    .map(|(&a, &c)| if c > 0 { ExtCoord::Inf } else { ExtCoord::Fin(a) })
                    .collect(),
            ),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Path::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Morphism> {
        match self {
            Path::Finite(m) => Some(m),
            Path::Infinite(_) => None,
        }
    }
}

/// Display adapter for a path in its graph's literal syntax.
pub struct ShowPath<'a>(pub &'a KGraph, pub &'a Path);

impl fmt::Display for ShowPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_path(self.1))
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    if a == 0 || b == 0 {
        a.max(b)
    } else {
        a / gcd(a, b) * b
    }
}

impl KGraph {
    /// The infinite path `λ c c c …`.
    pub fn infinite_path(&self, prefix: Morphism, cycle: Morphism) -> Result<Path> {
        if cycle.is_vertex() {
            return Err(Error::InvalidPath("the repeated cycle must have non-zero degree".into()));
        }
        if cycle.range() != cycle.source() {
            return Err(Error::InvalidPath(format!("{} is not a cycle", self.display(&cycle))));
        }
        if prefix.source() != cycle.range() {
            return Err(Error::InvalidPath(format!(
                "cycle {} does not start where {} ends",
                self.display(&cycle),
                self.display(&prefix)
            )));
        }
        Ok(Path::Infinite(InfinitePath { prefix, cycle }))
    }

    fn power(&self, c: &Morphism, t: u64) -> Result<Morphism> {
        let mut acc = self.vertex(c.range());
        for _ in 0..t {
            acc = self.compose(&acc, c)?;
        }
        Ok(acc)
    }

    /// `λ c^t`, long enough to contain the prefix of degree `m`.
    fn unroll_to(&self, p: &InfinitePath, m: &Degree) -> Result<Morphism> {
        let base = p.prefix.degree().coords();
        let step = p.cycle.degree().coords();
        let mut t = 0;
        for i in 0..m.rank() {
            if step[i] > 0 && m.coords()[i] > base[i] {
                t = t.max((m.coords()[i] - base[i]).div_ceil(step[i]));
            }
        }
        self.compose(&p.prefix, &self.power(&p.cycle, t)?)
    }

    fn check_within(&self, w: &Path, m: &Degree) -> Result<()> {
        if m.rank() != self.rank() {
            return Err(DegreeError::RankMismatch { left: m.rank(), right: self.rank() }.into());
        }
        if w.extdegree().contains(m)? {
            Ok(())
        } else {
            Err(Error::InvalidPath(format!("degree {m} is not below {}", w.extdegree())))
        }
    }

    /// `w_m`, the initial segment of degree `m`.
    pub fn prefix(&self, w: &Path, m: &Degree) -> Result<Morphism> {
        self.check_within(w, m)?;
        match w {
            Path::Finite(l) => Ok(self.factorize(l, m)?.0),
            Path::Infinite(p) => Ok(self.factorize(&self.unroll_to(p, m)?, m)?.0),
        }
    }

    /// `x(m, n)`: the segment with `w_n = w_m x(m, n)`.
    pub fn segment(&self, w: &Path, m: &Degree, n: &Degree) -> Result<Morphism> {
        if !m.leq(n)? {
            return Err(Error::NotBelow { split: m.clone(), degree: n.clone() });
        }
        let wn = self.prefix(w, n)?;
        Ok(self.factorize(&wn, m)?.1)
    }

    /// The shifted path `σ^m(w)`, whose prefixes are the segments `x(m, m + n)`.
    pub fn tail(&self, w: &Path, m: &Degree) -> Result<Path> {
        self.check_within(w, m)?;
        match w {
            Path::Finite(l) => Ok(Path::Finite(self.factorize(l, m)?.1)),
            Path::Infinite(p) => {
                let long = self.unroll_to(p, m)?;
                let rest = self.factorize(&long, m)?.1;
                self.infinite_path(rest, p.cycle.clone())
            }
        }
    }

    /// The product `yw`.
    pub fn product(&self, y: &Morphism, w: &Path) -> Result<Path> {
        if y.source() != w.range() {
            return Err(Error::NotComposable {
                source_vertex: self.vertex_name(y.source()).to_string(),
                range_vertex: self.vertex_name(w.range()).to_string(),
            });
        }
        match w {
            Path::Finite(l) => Ok(Path::Finite(self.compose(y, l)?)),
            Path::Infinite(p) => self.infinite_path(self.compose(y, &p.prefix)?, p.cycle.clone()),
        }
    }

    /// `(yw)_n` through the defining formula: factorize `y w_p` at `n`, for a
    /// finite `p ≤ N(w)` with `n ≤ d(y) + p`.
    pub fn product_prefix_via(&self, y: &Morphism, w: &Path, n: &Degree, p: &Degree) -> Result<Morphism> {
        let reach = y.degree().add(p)?;
        if !n.leq(&reach)? {
            return Err(Error::NotBelow { split: n.clone(), degree: reach });
        }
        let yw = self.compose(y, &self.prefix(w, p)?)?;
        Ok(self.factorize(&yw, n)?.0)
    }

    /// Equality of paths. Exact for 1-graphs; for `k ≥ 2` infinite paths are
    /// compared on the prefix of degree `max d(λ) + 2·lcm d(c)` in each
    /// infinite coordinate.
    pub fn path_eq(&self, a: &Path, b: &Path) -> Result<bool> {
        if a.extdegree() != b.extdegree() {
            return Ok(false);
        }
        match (a, b) {
            (Path::Finite(x), Path::Finite(y)) => Ok(x == y),
            (Path::Infinite(p), Path::Infinite(q)) => {
                let m = self.comparison_degree(p, q);
                Ok(self.prefix(a, &m)? == self.prefix(b, &m)?)
            }
            _ => Ok(false),
        }
    }

    fn comparison_degree(&self, p: &InfinitePath, q: &InfinitePath) -> Degree {
        let (pp, qp) = (p.prefix.degree().coords(), q.prefix.degree().coords());
        let (pc, qc) = (p.cycle.degree().coords(), q.cycle.degree().coords());
        Degree::new(
            (0..self.rank())
                .map(|i| {
                    if pc[i] == 0 {
                        pp[i]
                    } else {
                        pp[i].max(qp[i]) + 2 * lcm(pc[i], qc[i])
                    }
                })
                .collect(),
        )
    }

    /// Canonical representative: for 1-graphs, a primitive cycle and the
    /// shortest prefix. Other ranks are returned unchanged.
    pub fn canonical_path(&self, w: &Path) -> Result<Path> {
        let Path::Infinite(p) = w else { return Ok(w.clone()) };
        if self.backend_kind() != BackendKind::OneGraph {
            return Ok(w.clone());
        }
        let cycle = p.cycle.edges();
        let n = cycle.len();
        let period = (1..=n).find(|&q| n % q == 0 && (q..n).all(|i| cycle[i] == cycle[i - q])).unwrap_or(n);
        let mut cycle: Vec<Edge> = cycle[..period].to_vec();
        let mut prefix: Vec<Edge> = p.prefix.edges().to_vec();
        while prefix.last().is_some() && prefix.last() == cycle.last() {
            prefix.pop();
            cycle.rotate_right(1);
        }
        let r = p.prefix.range();
        let prefix = self.word(r, &prefix)?;
        let cycle = self.word(prefix.source(), &cycle)?;
        self.infinite_path(prefix, cycle)
    }

    /// Composes a word of edges starting at `v`.
    pub fn word(&self, v: VertexId, edges: &[Edge]) -> Result<Morphism> {
        let mut acc = self.vertex(v);
        for &e in edges {
            acc = self.compose(&acc, &self.edge_morphism(e)?)?;
        }
        Ok(acc)
    }

    /// The `i`-th edge (1-based) of a path in a 1-graph.
    pub fn edge_at(&self, w: &Path, i: u64) -> Result<Option<Edge>> {
        if self.rank() != 1 || i == 0 {
            return Err(Error::InvalidPath("edge positions are 1-based and need a 1-graph".into()));
        }
        let within = match w.extdegree().coords()[0] {
            ExtCoord::Fin(n) => i <= n,
            ExtCoord::Inf => true,
        };
        if !within {
            return Ok(None);
        }
        let seg = self.segment(w, &Degree::new(vec![i - 1]), &Degree::new(vec![i]))?;
        Ok(seg.edges().first().copied())
    }

    /// Enumerates `W_v`: finite paths of degree at most `bound` and infinite
    /// paths `λ c^∞` with `d(λ), d(c) ≤ bound`, one representative per path.
    pub fn enumerate_paths(&self, v: VertexId, bound: &Degree, limit: Option<u64>) -> Result<Vec<Path>> {
        let finite = self.morphisms_up_to(bound, Some(v), limit)?;
        let mut out: Vec<Path> = finite.iter().cloned().map(Path::Finite).collect();
        let one_graph = self.backend_kind() == BackendKind::OneGraph;
        let mut seen = HashSet::new();
        let mut infinite: Vec<Path> = Vec::new();
        for prefix in &finite {
            for cycle in self.morphisms_up_to(bound, Some(prefix.source()), limit)? {
                if cycle.is_vertex() || cycle.source() != cycle.range() {
                    continue;
                }
                let w = self.infinite_path(prefix.clone(), cycle)?;
                if one_graph {
                    let c = self.canonical_path(&w)?;
                    if seen.insert(c.clone()) {
                        infinite.push(c);
                    }
                } else {
                    let mut fresh = true;
                    for u in &infinite {
                        if self.path_eq(u, &w)? {
                            fresh = false;
                            break;
                        }
                    }
                    if fresh {
                        infinite.push(w);
                    }
                }
            }
        }
        out.extend(infinite);
        Ok(out)
    }

    pub fn display_path(&self, w: &Path) -> String {
        match w {
            Path::Finite(m) => self.display(m),
            Path::Infinite(p) => {
                let mut tokens = self.tokens(&p.prefix);
                tokens.push(format!("({})*", self.tokens(&p.cycle).join(".")));
                format!("{}:{}", self.vertex_name(p.prefix.range()), tokens.join("."))
            }
        }
    }

    /// Parses `v:e1.e2` or `v:e1.(e2.e3)*`.
    pub fn parse_path(&self, literal: &str) -> Result<Path> {
        let literal = literal.trim();
        let Some(open) = literal.find('(') else {
            return Ok(Path::Finite(self.parse_morphism(literal)?));
        };
        let bad = |reason: &str| Error::Parse { input: literal.to_string(), reason: reason.to_string() };
        let inner = literal[open + 1..].strip_suffix(")*").ok_or_else(|| bad("a cycle must end with `)*`"))?;
        if inner.contains(['(', ')']) {
            return Err(bad("only one repeated cycle is allowed"));
        }
        let head = literal[..open].trim_end();
        let head = head.strip_suffix('.').unwrap_or(head);
        let prefix = self.parse_morphism(head)?;
        let v = self.vertex_name(prefix.source()).to_string();
        let cycle = self.parse_morphism(&format!("{v}:{inner}"))?;
        self.infinite_path(prefix, cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn d(c: &[u64]) -> Degree {
        Degree::new(c.to_vec())
    }

    #[test]
    fn prefix_examples() {
        let g = KGraph::one_graph(
            &["a", "b", "c", "e"],
            &[("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "e")],
        )
        .unwrap();
        let w = g.parse_path("a:e1.e2.e3").unwrap();
        assert_eq!(g.display(&g.prefix(&w, &d(&[2])).unwrap()), "a:e1.e2");
        assert_eq!(g.prefix(&w, &d(&[0])).unwrap(), g.vertex(0));
        assert_eq!(g.display(&g.segment(&w, &d(&[1]), &d(&[3])).unwrap()), "b:e2.e3");
        assert!(g.segment(&w, &d(&[2]), &d(&[2])).unwrap().is_vertex());
        assert!(g.prefix(&w, &d(&[4])).is_err());

        let einf = fixtures::cuntz_infinite();
        let w = einf.parse_path("v:e[1].(e[2])*").unwrap();
        assert_eq!(einf.display(&einf.prefix(&w, &d(&[3])).unwrap()), "v:e[1].e[2].e[2]");
    }

    #[test]
    fn product_examples() {
        let einf = fixtures::cuntz_infinite();
        let y = einf.parse_morphism("v:e[1].e[2]").unwrap();
        let w = einf.parse_path("v:(e[1])*").unwrap();
        let yw = einf.product(&y, &w).unwrap();
        assert_eq!(einf.display(&einf.prefix(&yw, &d(&[4])).unwrap()), "v:e[1].e[2].e[1].e[1]");
        for p in [d(&[2]), d(&[3]), d(&[7])] {
            assert_eq!(
                einf.product_prefix_via(&y, &w, &d(&[4]), &p).unwrap(),
                einf.prefix(&yw, &d(&[4])).unwrap()
            );
        }
        let v = einf.vertex(0);
        assert_eq!(einf.product(&v, &w).unwrap(), w);
    }

    #[test]
    fn path_equality_examples() {
        let einf = fixtures::cuntz_infinite();
        let a = einf.parse_path("v:e[1].(e[2])*").unwrap();
        let b = einf.parse_path("v:e[1].e[2].(e[2].e[2])*").unwrap();
        let c = einf.parse_path("v:e[2].e[1].(e[2])*").unwrap();
        assert!(einf.path_eq(&a, &b).unwrap());
        assert!(!einf.path_eq(&a, &c).unwrap());
        assert!(einf.path_eq(&c, &c).unwrap());
        assert_eq!(einf.canonical_path(&b).unwrap(), a);
    }

    #[test]
    fn mixed_degree_infinite_paths() {
        let g = fixtures::twisted_2graph();
        let w = g.parse_path("v:b1.r2.(b2)*").unwrap();
        assert_eq!(w.extdegree().coords(), &[ExtCoord::Inf, ExtCoord::Fin(1)]);
        assert!(g.prefix(&w, &d(&[5, 1])).is_ok());
        assert!(g.prefix(&w, &d(&[0, 2])).is_err());
        let (m, n) = (d(&[0, 1]), d(&[1, 1]));
        let seg = g.segment(&w, &m, &n).unwrap();
        assert_eq!(seg.degree(), &d(&[1, 0]));
        assert_eq!(g.compose(&g.prefix(&w, &m).unwrap(), &seg).unwrap(), g.prefix(&w, &n).unwrap());
    }

    #[test]
    fn enumeration_of_e2() {
        let g = fixtures::cuntz(2);
        let all = g.enumerate_paths(0, &d(&[2]), None).unwrap();
        let finite: Vec<String> = all.iter().filter(|w| w.is_finite()).map(|w| g.display_path(w)).collect();
        assert_eq!(finite, ["v", "v:1", "v:2", "v:1.1", "v:1.2", "v:2.1", "v:2.2"]);
        let infinite: Vec<&Path> = all.iter().filter(|w| !w.is_finite()).collect();
        for (i, a) in infinite.iter().enumerate() {
            for b in &infinite[i + 1..] {
                assert!(!g.path_eq(a, b).unwrap());
            }
        }
        // v:(1)*, v:(2)*, v:(1.2)*, v:(2.1)* and their extensions by 1 or 2 edges.
        assert!(infinite.iter().any(|w| g.display_path(w) == "v:(1.2)*"));
        let sink = KGraph::one_graph(&["v"], &[]).unwrap();
        assert_eq!(sink.enumerate_paths(0, &d(&[3]), None).unwrap(), vec![Path::Finite(sink.vertex(0))]);
    }

    #[test]
    fn literals_round_trip() {
        let g = fixtures::cuntz(3);
        for lit in ["v", "v:1.2", "v:(3)*", "v:1.(2.3)*"] {
            assert_eq!(g.display_path(&g.parse_path(lit).unwrap()), lit);
        }
        assert!(g.parse_path("v:1.(2").is_err());
        assert!(g.parse_path("v:(v)*").is_err());
    }
}
