//! Graphs and sequence files shipped with the crate.

use crate::kgraph::{EdgeSpec, GraphSpec, KGraph, NamedEdgeSpec};

pub const E2: &str = include_str!("../fixtures/e2.json");
pub const E3: &str = include_str!("../fixtures/e3.json");
pub const E_INF: &str = include_str!("../fixtures/e-inf.json");
pub const SQUARE_2GRAPH: &str = include_str!("../fixtures/square-2graph.json");
pub const TWISTED_2GRAPH: &str = include_str!("../fixtures/square-2x2.json");
pub const BIPARTITE_2GRAPH: &str = include_str!("../fixtures/bipartite-2graph.json");
pub const CUBE_3GRAPH: &str = include_str!("../fixtures/cube-3graph.json");
pub const SQUARE_TABLE: &str = include_str!("../fixtures/square-table.json");
pub const BIPARTITE_TABLE: &str = include_str!("../fixtures/bipartite-table.json");
pub const BROKEN_SQUARES_DUP: &str = include_str!("../fixtures/broken-squares-dup.json");
pub const BROKEN_SQUARES_SPLIT: &str = include_str!("../fixtures/broken-squares-split.json");
pub const BROKEN_SQUARES_MISSING: &str = include_str!("../fixtures/broken-squares-missing.json");
pub const BROKEN_TABLE_NONUNIQUE: &str = include_str!("../fixtures/broken-table-nonunique.json");
pub const UNALIGNED_TABLE: &str = include_str!("../fixtures/unaligned-table.json");

pub const EINF_SEQUENCES: &str = include_str!("../fixtures/einf-sequences.json");
pub const FACTOR_SEQUENCES: &str = include_str!("../fixtures/factor-sequences.json");

/// Fixture names accepted by [`graph`].
pub const GRAPH_NAMES: &[&str] = &[
    "e2",
    "e3",
    "e-inf",
    "square-2graph",
    "square-2x2",
    "bipartite-2graph",
    "cube-3graph",
    "square-table",
    "bipartite-table",
    "broken-squares-dup",
    "broken-squares-split",
    "broken-squares-missing",
    "broken-table-nonunique",
    "unaligned-table",
];

pub fn graph_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "e2" => E2,
        "e3" => E3,
        "e-inf" => E_INF,
        "square-2graph" => SQUARE_2GRAPH,
        "square-2x2" => TWISTED_2GRAPH,
        "bipartite-2graph" => BIPARTITE_2GRAPH,
        "cube-3graph" => CUBE_3GRAPH,
        "square-table" => SQUARE_TABLE,
        "bipartite-table" => BIPARTITE_TABLE,
        "broken-squares-dup" => BROKEN_SQUARES_DUP,
        "broken-squares-split" => BROKEN_SQUARES_SPLIT,
        "broken-squares-missing" => BROKEN_SQUARES_MISSING,
        "broken-table-nonunique" => BROKEN_TABLE_NONUNIQUE,
        "unaligned-table" => UNALIGNED_TABLE,
        _ => return None,
    })
}

/// Sequence files accepted by the `converge` command.
pub fn sequence_source(name: &str) -> Option<&'static str> {
    match name {
        "einf-sequences" => Some(EINF_SEQUENCES),
        "factor-sequences" => Some(FACTOR_SEQUENCES),
        _ => None,
    }
}

pub fn graph(name: &str) -> Option<KGraph> {
    graph_source(name).map(load)
}

fn load(json: &str) -> KGraph {
    KGraph::from_json(json).expect("shipped fixture parses")
}

/// `E_n`: one vertex `v` with loops `1, …, n`.
pub fn cuntz(n: usize) -> KGraph {
    KGraph::from_spec(&GraphSpec {
        name: Some(format!("E{n}")),
        rank: 1,
        vertices: vec!["v".into()],
        backend: crate::kgraph::BackendSpec::OneGraph {
            edges: (1..=n)
                .map(|i| EdgeSpec::Named(NamedEdgeSpec { name: i.to_string(), src: "v".into(), dst: "v".into() }))
                .collect(),
        },
    })
    .expect("cuntz graph is well formed")
}

/// `E_∞`: one vertex `v` with the loop family `e[1], e[2], …`.
pub fn cuntz_infinite() -> KGraph {
    load(E_INF)
}

/// One vertex, blue `b`, red `r`, square `br = rb`.
pub fn square_2graph() -> KGraph {
    load(SQUARE_2GRAPH)
}

/// One vertex, blue `b1, b2`, red `r1, r2`, squares `b_i r_j = r_i b_j`.
pub fn twisted_2graph() -> KGraph {
    load(TWISTED_2GRAPH)
}

/// Two vertices `u, w` with edges of both colors each way.
pub fn bipartite_2graph() -> KGraph {
    load(BIPARTITE_2GRAPH)
}

/// ℕ^3 on one vertex, tabulated up to (1,1,1).
pub fn cube_3graph() -> KGraph {
    load(CUBE_3GRAPH)
}

pub fn square_table() -> KGraph {
    load(SQUARE_TABLE)
}

pub fn bipartite_table() -> KGraph {
    load(BIPARTITE_TABLE)
}

pub fn unaligned_table() -> KGraph {
    load(UNALIGNED_TABLE)
}
