//! Presentations of k-graphs.
//!
//! Three backends share one morphism type:
//!
//! * `OneGraph`: a directed graph, possibly with ℕ-indexed edge families.
//!   Morphisms are edge words.
//! * `Squares`: a rank-2 graph given by blue and red edges and a set of
//!   commuting squares. Morphisms are stored in color-sorted normal form,
//!   all blue edges before all red ones.
//! * `Table`: every morphism up to a degree bound, with an explicit
//!   composition table. This is the only backend for `k ≥ 3`.
//!
//! Structural equality of [`Morphism`] values is categorical equality.

mod alignment;
pub mod schema;
mod verify;

use std::collections::HashMap;

use crate::degree::Degree;
use crate::error::{Error, Result};

pub use alignment::AlignmentReport;
pub use schema::{BackendSpec, EdgeSpec, FamilyEdgeSpec, GraphSpec, NamedEdgeSpec, TableMorphismSpec};
pub use verify::{AxiomReport, Counterexample};

pub type VertexId = u32;

/// An edge: a named edge (`index == 0`) or a member of an ℕ-indexed family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub group: u32,
    pub index: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Body {
    Vertex,
    Word(Vec<Edge>),
    Table(u32),
}

/// A morphism in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    degree: Degree,
    range: VertexId,
    source: VertexId,
    body: Body,
}

/// A finite path is a single morphism.
pub type FinitePath = Morphism;

impl Morphism {
    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self.body, Body::Vertex)
    }

    /// The edge word, empty for vertices and table morphisms.
    pub fn edges(&self) -> &[Edge] {
        match &self.body {
            Body::Word(w) => w,
            _ => &[],
        }
    }

    pub(crate) fn enumeration_key(&self) -> (u64, &Degree, VertexId, &Body) {
        (self.degree.total(), &self.degree, self.range, &self.body)
    }

    /// The enumeration order of `Y`: total degree, then degree, range, and
    /// the edge word by family and index.
    pub fn cmp_enumeration(&self, other: &Morphism) -> std::cmp::Ordering {
        self.enumeration_key().cmp(&other.enumeration_key())
    }

    pub(crate) fn body(&self) -> &Body {
        &self.body
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendKind {
    OneGraph,
    Squares,
    Table,
}

#[derive(Debug, Clone)]
struct EdgeGroup {
    name: String,
    src: VertexId,
    dst: VertexId,
    color: usize,
    family_start: Option<u64>,
}

#[derive(Debug, Clone, Default)]
struct Edges {
    groups: Vec<EdgeGroup>,
    by_name: HashMap<String, u32>,
    /// Per vertex and color, the groups leaving it, in declaration order.
    out: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone)]
struct SquareData {
    squares: Vec<[Edge; 4]>,
    /// Blue-red pair to red-blue pair.
    blue_red: HashMap<(Edge, Edge), (Edge, Edge)>,
    /// Red-blue pair to blue-red pair.
    red_blue: HashMap<(Edge, Edge), (Edge, Edge)>,
}

#[derive(Debug, Clone)]
struct TableMorph {
    name: String,
    degree: Degree,
    src: VertexId,
    dst: VertexId,
}

#[derive(Debug, Clone)]
struct TableData {
    bound: Degree,
    morphs: Vec<TableMorph>,
    by_name: HashMap<String, u32>,
    entries: Vec<(u32, u32, u32)>,
    compose: HashMap<(u32, u32), u32>,
    factors: HashMap<u32, Vec<(u32, u32)>>,
    unbounded: Vec<(u32, u32)>,
}

#[derive(Debug, Clone)]
enum Backend {
    OneGraph(Edges),
    Squares(Edges, SquareData),
    Table(TableData),
}

/// A k-graph presentation. Immutable after construction.
#[derive(Debug, Clone)]
pub struct KGraph {
    name: Option<String>,
    rank: usize,
    vertices: Vec<String>,
    vertex_ids: HashMap<String, VertexId>,
    backend: Backend,
}

impl KGraph {
    pub fn from_json(json: &str) -> Result<KGraph> {
        let spec: GraphSpec = serde_json::from_str(json).map_err(|e| Error::Parse {
            input: "graph file".into(),
            reason: e.to_string(),
        })?;
        KGraph::from_spec(&spec)
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<KGraph> {
        if spec.rank == 0 {
            return Err(Error::InvalidGraph("rank must be positive".into()));
        }
        let mut vertex_ids = HashMap::new();
        for (i, v) in spec.vertices.iter().enumerate() {
            if v.is_empty() || v.contains([':', '.', '(', ')', '|']) {
                return Err(Error::InvalidGraph(format!("bad vertex name `{v}`")));
            }
            if vertex_ids.insert(v.clone(), i as VertexId).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{v}`")));
            }
        }
        let mut graph = KGraph {
            name: spec.name.clone(),
            rank: spec.rank,
            vertices: spec.vertices.clone(),
            vertex_ids,
            backend: Backend::OneGraph(Edges::default()),
        };
        graph.backend = match &spec.backend {
            BackendSpec::OneGraph { edges } => {
                if spec.rank != 1 {
                    return Err(Error::InvalidGraph("one-graph backend requires rank 1".into()));
                }
                let mut builder = graph.edge_builder(1);
                for edge in edges {
                    match edge {
                        EdgeSpec::Named(e) => builder.add(&graph, &e.name, &e.src, &e.dst, 0, None)?,
                        EdgeSpec::Family(f) => {
                            builder.add(&graph, &f.family, &f.src, &f.dst, 0, Some(f.start))?
                        }
                    }
                }
                Backend::OneGraph(builder)
            }
            BackendSpec::Squares { blue, red, squares } => {
                if spec.rank != 2 {
                    return Err(Error::InvalidGraph("squares backend requires rank 2".into()));
                }
                let mut builder = graph.edge_builder(2);
                for e in blue {
                    builder.add(&graph, &e.name, &e.src, &e.dst, 0, None)?;
                }
                for e in red {
                    builder.add(&graph, &e.name, &e.src, &e.dst, 1, None)?;
                }
                let lookup = |name: &str| -> Result<Edge> {
                    builder
                        .by_name
                        .get(name)
                        .map(|&group| Edge { group, index: 0 })
                        .ok_or_else(|| Error::UnknownEdge(name.to_string()))
                };
                let mut data = SquareData {
                    squares: Vec::new(),
                    blue_red: HashMap::new(),
                    red_blue: HashMap::new(),
                };
                for [e, f, f2, e2] in squares {
                    let sq = [lookup(e)?, lookup(f)?, lookup(f2)?, lookup(e2)?];
                    data.squares.push(sq);
                    data.blue_red.entry((sq[0], sq[1])).or_insert((sq[2], sq[3]));
                    data.red_blue.entry((sq[2], sq[3])).or_insert((sq[0], sq[1]));
                }
                Backend::Squares(builder, data)
            }
            BackendSpec::Table { bound, morphisms, compositions, unbounded_extensions } => {
                if bound.rank() != spec.rank {
                    return Err(Error::InvalidGraph("table bound has the wrong rank".into()));
                }
                let mut table = TableData {
                    bound: bound.clone(),
                    morphs: Vec::new(),
                    by_name: HashMap::new(),
                    entries: Vec::new(),
                    compose: HashMap::new(),
                    factors: HashMap::new(),
                    unbounded: Vec::new(),
                };
                for m in morphisms {
                    if m.degree.rank() != spec.rank || m.degree.is_zero() {
                        return Err(Error::InvalidGraph(format!(
                            "table morphism `{}` needs a non-zero degree of rank {}",
                            m.id, spec.rank
                        )));
                    }
                    if !m.degree.leq(bound)? {
                        return Err(Error::InvalidGraph(format!(
                            "table morphism `{}` exceeds the table bound",
                            m.id
                        )));
                    }
                    if m.id.contains([':', '.', '(', ')', '|']) || graph.vertex_ids.contains_key(&m.id) {
                        return Err(Error::InvalidGraph(format!("bad morphism id `{}`", m.id)));
                    }
                    let id = table.morphs.len() as u32;
                    if table.by_name.insert(m.id.clone(), id).is_some() {
                        return Err(Error::InvalidGraph(format!("duplicate morphism `{}`", m.id)));
                    }
                    table.morphs.push(TableMorph {
                        name: m.id.clone(),
                        degree: m.degree.clone(),
                        src: graph.vertex_id(&m.src)?,
                        dst: graph.vertex_id(&m.dst)?,
                    });
                }
                let find = |name: &str| -> Result<u32> {
                    table.by_name.get(name).copied().ok_or_else(|| Error::UnknownEdge(name.to_string()))
                };
                let mut entries = Vec::new();
                for [a, b, c] in compositions {
                    entries.push((find(a)?, find(b)?, find(c)?));
                }
                let mut unbounded = Vec::new();
                for [a, b] in unbounded_extensions {
                    unbounded.push((find(a)?, find(b)?));
                }
                for &(a, b, c) in &entries {
                    if table.compose.insert((a, b), c).is_some_and(|old| old != c) {
                        return Err(Error::InvalidGraph(format!(
                            "composition of `{}` and `{}` is declared twice",
                            table.morphs[a as usize].name, table.morphs[b as usize].name
                        )));
                    }
                    let pairs = table.factors.entry(c).or_default();
                    if !pairs.contains(&(a, b)) {
                        pairs.push((a, b));
                    }
                }
                table.entries = entries;
                table.unbounded = unbounded;
                Backend::Table(table)
            }
        };
        Ok(graph)
    }

    fn edge_builder(&self, colors: usize) -> Edges {
        Edges {
            groups: Vec::new(),
            by_name: HashMap::new(),
            out: vec![vec![Vec::new(); colors]; self.vertices.len()],
        }
    }

    /// A 1-graph from `(name, src, dst)` triples.
    pub fn one_graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<KGraph> {
        KGraph::from_spec(&GraphSpec {
            name: None,
            rank: 1,
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            backend: BackendSpec::OneGraph {
                edges: edges
                    .iter()
                    .map(|(n, s, d)| {
                        EdgeSpec::Named(NamedEdgeSpec {
                            name: n.to_string(),
                            src: s.to_string(),
                            dst: d.to_string(),
                        })
                    })
                    .collect(),
            },
        })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn backend_kind(&self) -> BackendKind {
        match self.backend {
            Backend::OneGraph(_) => BackendKind::OneGraph,
            Backend::Squares(..) => BackendKind::Squares,
            Backend::Table(_) => BackendKind::Table,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertices.len() as VertexId
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v as usize]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId> {
        self.vertex_ids.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex(&self, v: VertexId) -> Morphism {
        Morphism { degree: Degree::zero(self.rank), range: v, source: v, body: Body::Vertex }
    }

    /// True when some edge family is infinite.
    pub fn has_infinite_families(&self) -> bool {
        match &self.backend {
            Backend::OneGraph(edges) => edges.groups.iter().any(|g| g.family_start.is_some()),
            _ => false,
        }
    }

    fn edges(&self) -> Option<&Edges> {
        match &self.backend {
            Backend::OneGraph(e) | Backend::Squares(e, _) => Some(e),
            Backend::Table(_) => None,
        }
    }

    fn table(&self) -> Option<&TableData> {
        match &self.backend {
            Backend::Table(t) => Some(t),
            _ => None,
        }
    }

    fn group(&self, e: Edge) -> Result<&EdgeGroup> {
        let edges = self.edges().ok_or_else(|| Error::InvalidGraph("table graphs have no edges".into()))?;
        let group = edges
            .groups
            .get(e.group as usize)
            .ok_or_else(|| Error::UnknownEdge(format!("#{}", e.group)))?;
        let valid = match group.family_start {
            None => e.index == 0,
            Some(start) => e.index >= start,
        };
        if valid {
            Ok(group)
        } else {
            Err(Error::UnknownEdge(format!("{}[{}]", group.name, e.index)))
        }
    }

    /// The edge group id of a named edge or family.
    pub fn group_id(&self, name: &str) -> Result<u32> {
        self.edges()
            .and_then(|e| e.by_name.get(name).copied())
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    /// First index of a family, `None` for named edges.
    pub fn family_start(&self, group: u32) -> Option<u64> {
        self.edges().and_then(|e| e.groups.get(group as usize)).and_then(|g| g.family_start)
    }

    pub fn edge_morphism(&self, e: Edge) -> Result<Morphism> {
        let group = self.group(e)?;
        Ok(Morphism {
            degree: Degree::unit(self.rank, group.color),
            range: group.src,
            source: group.dst,
            body: Body::Word(vec![e]),
        })
    }

    pub fn edge_name(&self, e: Edge) -> String {
        match self.group(e) {
            Ok(g) if g.family_start.is_some() => format!("{}[{}]", g.name, e.index),
            Ok(g) => g.name.clone(),
            Err(_) => format!("?{}[{}]", e.group, e.index),
        }
    }

    pub fn edge_color(&self, e: Edge) -> Result<usize> {
        self.group(e).map(|g| g.color)
    }

    pub fn edge_src(&self, e: Edge) -> Result<VertexId> {
        self.group(e).map(|g| g.src)
    }

    pub fn edge_dst(&self, e: Edge) -> Result<VertexId> {
        self.group(e).map(|g| g.dst)
    }

    /// Resolves `name` or `family[index]`.
    pub fn parse_edge(&self, token: &str) -> Result<Edge> {
        let edge = match token.strip_suffix(']').and_then(|t| t.split_once('[')) {
            Some((family, index)) => {
                let index = index.parse::<u64>().map_err(|_| Error::Parse {
                    input: token.to_string(),
                    reason: "family index must be a non-negative integer".into(),
                })?;
                let group = self.group_id(family)?;
                if self.family_start(group).is_none() {
                    return Err(Error::UnknownEdge(token.to_string()));
                }
                Edge { group, index }
            }
            None => {
                let group = self.group_id(token)?;
                if self.family_start(group).is_some() {
                    return Err(Error::UnknownEdge(format!("{token} is a family; write {token}[i]")));
                }
                Edge { group, index: 0 }
            }
        };
        self.group(edge)?;
        Ok(edge)
    }

    fn table_morphism(&self, t: &TableData, id: u32) -> Morphism {
        let m = &t.morphs[id as usize];
        Morphism { degree: m.degree.clone(), range: m.src, source: m.dst, body: Body::Table(id) }
    }

    /// Word tokens of a morphism, without the range vertex.
    pub fn tokens(&self, m: &Morphism) -> Vec<String> {
        match &m.body {
            Body::Vertex => Vec::new(),
            Body::Word(w) => w.iter().map(|&e| self.edge_name(e)).collect(),
            Body::Table(id) => match self.table() {
                Some(t) => vec![t.morphs[*id as usize].name.clone()],
                None => vec![format!("#{id}")],
            },
        }
    }

    /// Literal form `v:e1.e2`, or just `v` for a vertex.
    pub fn display(&self, m: &Morphism) -> String {
        let tokens = self.tokens(m);
        if tokens.is_empty() {
            self.vertex_name(m.range).to_string()
        } else {
            format!("{}:{}", self.vertex_name(m.range), tokens.join("."))
        }
    }

    /// Parses `v`, `v:` or `v:t1.t2…`, composing the tokens in order.
    pub fn parse_morphism(&self, literal: &str) -> Result<Morphism> {
        let literal = literal.trim();
        let (vertex, rest) = literal.split_once(':').unwrap_or((literal, ""));
        let v = self.vertex_id(vertex.trim())?;
        let mut acc = self.vertex(v);
        for token in rest.split('.').map(str::trim).filter(|t| !t.is_empty()) {
            let step = self.parse_token(token)?;
            if step.range != acc.source {
                return Err(Error::Parse {
                    input: literal.to_string(),
                    reason: format!("`{token}` does not start where the path so far ends"),
                });
            }
            acc = self.compose(&acc, &step)?;
        }
        Ok(acc)
    }

    fn parse_token(&self, token: &str) -> Result<Morphism> {
        match &self.backend {
            Backend::Table(t) => {
                let id = t.by_name.get(token).copied().ok_or_else(|| Error::UnknownEdge(token.to_string()))?;
                Ok(self.table_morphism(t, id))
            }
            _ => self.edge_morphism(self.parse_edge(token)?),
        }
    }

    fn word_morphism(&self, word: Vec<Edge>, range: VertexId, source: VertexId, degree: Degree) -> Morphism {
        if word.is_empty() {
            self.vertex(range)
        } else {
            Morphism { degree, range, source, body: Body::Word(word) }
        }
    }

    /// `λν`, defined when `s(λ) = r(ν)`.
    pub fn compose(&self, lambda: &Morphism, nu: &Morphism) -> Result<Morphism> {
        if lambda.source != nu.range {
            return Err(Error::NotComposable {
                source_vertex: self.vertex_name(lambda.source).to_string(),
                range_vertex: self.vertex_name(nu.range).to_string(),
            });
        }
        if lambda.is_vertex() {
            return Ok(nu.clone());
        }
        if nu.is_vertex() {
            return Ok(lambda.clone());
        }
        let degree = lambda.degree.add(&nu.degree)?;
        match &self.backend {
            Backend::OneGraph(_) => {
                let mut word = lambda.edges().to_vec();
                word.extend_from_slice(nu.edges());
                Ok(self.word_morphism(word, lambda.range, nu.source, degree))
            }
            Backend::Squares(_, squares) => {
                let mut word = lambda.edges().to_vec();
                word.extend_from_slice(nu.edges());
                let pattern = color_pattern(&[(degree.coords()[0], 0), (degree.coords()[1], 1)]);
                let word = self.reorder(squares, word, &pattern)?;
                Ok(self.word_morphism(word, lambda.range, nu.source, degree))
            }
            Backend::Table(t) => {
                let (Body::Table(a), Body::Table(b)) = (&lambda.body, &nu.body) else {
                    return Err(Error::InvalidGraph("foreign morphism in a table graph".into()));
                };
                match t.compose.get(&(*a, *b)) {
                    Some(&c) => Ok(self.table_morphism(t, c)),
                    None if degree.leq(&t.bound)? => Err(Error::TableIncomplete(format!(
                        "{} and {}",
                        t.morphs[*a as usize].name, t.morphs[*b as usize].name
                    ))),
                    None => Err(Error::BeyondTableBound(degree, t.bound.clone())),
                }
            }
        }
    }

    /// Rewrites a two-colored word into the given color pattern using the
    /// commuting squares. Adjacent letters of different colors are swapped
    /// through the square relation, so the result is equal in the category.
    fn reorder(&self, squares: &SquareData, mut word: Vec<Edge>, pattern: &[usize]) -> Result<Vec<Edge>> {
        debug_assert_eq!(word.len(), pattern.len());
        for i in 0..word.len() {
            if self.edge_color(word[i])? == pattern[i] {
                continue;
            }
            let mut j = i + 1;
            while self.edge_color(word[j])? != pattern[i] {
                j += 1;
            }
            while j > i {
                let pair = (word[j - 1], word[j]);
                let swapped = if self.edge_color(pair.0)? == 0 {
                    squares.blue_red.get(&pair)
                } else {
                    squares.red_blue.get(&pair)
                };
                let &(x, y) = swapped.ok_or_else(|| {
                    Error::MissingSquare(format!("{}.{}", self.edge_name(pair.0), self.edge_name(pair.1)))
                })?;
                word[j - 1] = x;
                word[j] = y;
                j -= 1;
            }
        }
        Ok(word)
    }

    /// The unique `(μ, ν)` with `λ = μν` and `d(μ) = m`.
    pub fn factorize(&self, lambda: &Morphism, m: &Degree) -> Result<(Morphism, Morphism)> {
        if !m.leq(&lambda.degree)? {
            return Err(Error::NotBelow { split: m.clone(), degree: lambda.degree.clone() });
        }
        if m.is_zero() {
            return Ok((self.vertex(lambda.range), lambda.clone()));
        }
        if *m == lambda.degree {
            return Ok((lambda.clone(), self.vertex(lambda.source)));
        }
        let rest = lambda.degree.sub(m)?;
        match &self.backend {
            Backend::OneGraph(_) => {
                let (head, tail) = lambda.edges().split_at(m.coords()[0] as usize);
                self.split_word(lambda, head, tail, m, rest)
            }
            Backend::Squares(_, squares) => {
                let (p, q) = (m.coords()[0], m.coords()[1]);
                let pattern = color_pattern(&[(p, 0), (q, 1), (rest.coords()[0], 0), (rest.coords()[1], 1)]);
                let word = self.reorder(squares, lambda.edges().to_vec(), &pattern)?;
                let (head, tail) = word.split_at((p + q) as usize);
                self.split_word(lambda, head, tail, m, rest)
            }
            Backend::Table(t) => {
                let Body::Table(id) = lambda.body else {
                    return Err(Error::InvalidGraph("foreign morphism in a table graph".into()));
                };
                let candidates: Vec<(u32, u32)> = t
                    .factors
                    .get(&id)
                    .into_iter()
                    .flatten()
                    .copied()
                    .filter(|&(a, _)| t.morphs[a as usize].degree == *m)
                    .collect();
                match candidates.as_slice() {
                    [(a, b)] => Ok((self.table_morphism(t, *a), self.table_morphism(t, *b))),
                    _ => Err(Error::Factorization {
                        morphism: self.display(lambda),
                        split: m.clone(),
                        count: candidates.len(),
                    }),
                }
            }
        }
    }

    fn split_word(
        &self,
        lambda: &Morphism,
        head: &[Edge],
        tail: &[Edge],
        m: &Degree,
        rest: Degree,
    ) -> Result<(Morphism, Morphism)> {
        let mid = self.edge_dst(*head.last().expect("non-trivial split"))?;
        Ok((
            self.word_morphism(head.to_vec(), lambda.range, mid, m.clone()),
            self.word_morphism(tail.to_vec(), mid, lambda.source, rest),
        ))
    }

    /// `λ ≤ ν`: `λ` is the initial segment of `ν` of its degree.
    pub fn is_prefix(&self, lambda: &Morphism, nu: &Morphism) -> Result<bool> {
        if lambda.range != nu.range || !lambda.degree.leq(&nu.degree)? {
            return Ok(false);
        }
        if let Backend::OneGraph(_) = self.backend {
            return Ok(nu.edges().starts_with(lambda.edges()));
        }
        Ok(self.factorize(nu, &lambda.degree)?.0 == *lambda)
    }

    fn out_edges(&self, edges: &Edges, v: VertexId, color: usize, limit: Option<u64>) -> Result<Vec<Edge>> {
        let mut out = Vec::new();
        for &group in &edges.out[v as usize][color] {
            match edges.groups[group as usize].family_start {
                None => out.push(Edge { group, index: 0 }),
                Some(start) => {
                    let limit = limit.ok_or(Error::LimitRequired)?;
                    out.extend((start..start + limit).map(|index| Edge { group, index }));
                }
            }
        }
        Ok(out)
    }

    /// Single-color words of length `len` from `v`, with their end vertex.
    fn color_words(
        &self,
        edges: &Edges,
        v: VertexId,
        color: usize,
        len: u64,
        limit: Option<u64>,
    ) -> Result<Vec<(Vec<Edge>, VertexId)>> {
        let mut layer = vec![(Vec::new(), v)];
        for _ in 0..len {
            let mut next = Vec::new();
            for (word, end) in layer {
                for e in self.out_edges(edges, end, color, limit)? {
                    let mut w = word.clone();
                    w.push(e);
                    next.push((w, edges.groups[e.group as usize].dst));
                }
            }
            layer = next;
        }
        Ok(layer)
    }

    /// `Λ^n`, optionally restricted to range `from`. Infinite families are
    /// truncated to their first `limit` members.
    pub(crate) fn morphisms_with_limit(
        &self,
        n: &Degree,
        from: Option<VertexId>,
        limit: Option<u64>,
    ) -> Result<Vec<Morphism>> {
        if n.rank() != self.rank {
            return Err(crate::degree::DegreeError::RankMismatch { left: n.rank(), right: self.rank }.into());
        }
        let starts: Vec<VertexId> = match from {
            Some(v) => vec![v],
            None => self.vertex_ids().collect(),
        };
        if n.is_zero() {
            return Ok(starts.into_iter().map(|v| self.vertex(v)).collect());
        }
        let mut out = Vec::new();
        match &self.backend {
            Backend::OneGraph(edges) => {
                for v in starts {
                    for (word, end) in self.color_words(edges, v, 0, n.coords()[0], limit)? {
                        out.push(self.word_morphism(word, v, end, n.clone()));
                    }
                }
            }
            Backend::Squares(edges, _) => {
                for v in starts {
                    for (blue, mid) in self.color_words(edges, v, 0, n.coords()[0], limit)? {
                        for (red, end) in self.color_words(edges, mid, 1, n.coords()[1], limit)? {
                            let mut word = blue.clone();
                            word.extend(red);
                            out.push(self.word_morphism(word, v, end, n.clone()));
                        }
                    }
                }
            }
            Backend::Table(t) => {
                if !n.leq(&t.bound)? {
                    return Err(Error::BeyondTableBound(n.clone(), t.bound.clone()));
                }
                for (id, m) in t.morphs.iter().enumerate() {
                    if m.degree == *n && starts.contains(&m.src) {
                        out.push(self.table_morphism(t, id as u32));
                    }
                }
            }
        }
        out.sort_by(|a, b| a.enumeration_key().cmp(&b.enumeration_key()));
        Ok(out)
    }

    /// Enumerates `Λ^n` (with range `from`, if given), truncated at `limit`
    /// morphisms. Infinite families contribute at most `limit` members.
    pub fn morphisms_of_degree(
        &self,
        n: &Degree,
        from: Option<VertexId>,
        limit: Option<usize>,
    ) -> Result<Vec<Morphism>> {
        let mut all = self.morphisms_with_limit(n, from, limit.map(|l| l as u64))?;
        if let Some(limit) = limit {
            all.truncate(limit);
        }
        Ok(all)
    }

    /// All morphisms of degree at most `bound` from `from`, in enumeration order.
    pub fn morphisms_up_to(
        &self,
        bound: &Degree,
        from: Option<VertexId>,
        limit: Option<u64>,
    ) -> Result<Vec<Morphism>> {
        let mut out = Vec::new();
        for n in bound.down_set() {
            out.extend(self.morphisms_with_limit(&n, from, limit)?);
        }
        out.sort_by(|a, b| a.enumeration_key().cmp(&b.enumeration_key()));
        Ok(out)
    }

    /// Exports the graph as a table of every morphism of degree at most `bound`.
    pub fn tabulate(&self, bound: &Degree, limit: Option<u64>) -> Result<GraphSpec> {
        let all: Vec<Morphism> =
            self.morphisms_up_to(bound, None, limit)?.into_iter().filter(|m| !m.is_vertex()).collect();
        let mut names: HashMap<&Morphism, String> = HashMap::new();
        let mut taken = std::collections::HashSet::new();
        for (i, m) in all.iter().enumerate() {
            let mut name = self.tokens(m).join("_");
            if !taken.insert(name.clone()) || self.vertex_ids.contains_key(&name) {
                name = format!("m{i}");
                taken.insert(name.clone());
            }
            names.insert(m, name);
        }
        let mut compositions = Vec::new();
        for a in &all {
            for b in &all {
                if a.source != b.range || !a.degree.add(&b.degree)?.leq(bound)? {
                    continue;
                }
                let c = self.compose(a, b)?;
                compositions.push([names[a].clone(), names[b].clone(), names[&c].clone()]);
            }
        }
        Ok(GraphSpec {
            name: self.name.as_ref().map(|n| format!("{n}-table")),
            rank: self.rank,
            vertices: self.vertices.clone(),
            backend: BackendSpec::Table {
                bound: bound.clone(),
                morphisms: all
                    .iter()
                    .map(|m| TableMorphismSpec {
                        id: names[m].clone(),
                        degree: m.degree.clone(),
                        src: self.vertex_name(m.range).to_string(),
                        dst: self.vertex_name(m.source).to_string(),
                    })
                    .collect(),
                compositions,
                unbounded_extensions: Vec::new(),
            },
        })
    }
}

fn color_pattern(blocks: &[(u64, usize)]) -> Vec<usize> {
    blocks.iter().flat_map(|&(n, c)| std::iter::repeat_n(c, n as usize)).collect()
}

impl Edges {
    fn add(
        &mut self,
        graph: &KGraph,
        name: &str,
        src: &str,
        dst: &str,
        color: usize,
        family_start: Option<u64>,
    ) -> Result<()> {
        if name.is_empty() || name.contains([':', '.', '(', ')', '[', ']', '|', '*']) {
            return Err(Error::InvalidGraph(format!("bad edge name `{name}`")));
        }
        let group = self.groups.len() as u32;
        if self.by_name.insert(name.to_string(), group).is_some() {
            return Err(Error::InvalidGraph(format!("duplicate edge `{name}`")));
        }
        let src = graph.vertex_id(src)?;
        let dst = graph.vertex_id(dst)?;
        self.groups.push(EdgeGroup { name: name.to_string(), src, dst, color, family_start });
        self.out[src as usize][color].push(group);
        Ok(())
    }
}
