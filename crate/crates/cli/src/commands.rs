//! One function per subcommand, each producing a [`Report`].

use std::fmt;
use std::path::{Path as FsPath, PathBuf};

use pathspace::groupoid::BijectionReport;
use pathspace::symbolic::Convergence;
use pathspace::topology::{PathSequenceFile, Window};
use pathspace::tychonoff::{n_of, q, FactorSequenceFile};
use pathspace::{fixtures, Cylinder, Degree, Encoding, Error, KGraph, LemmaVerdict, SubcoverVerdict, SymbolicPath};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{Record, Report, Status};
use crate::{GraphSource, GroupoidOp, Options, SequenceSource};

pub const DEFAULT_SEED: u64 = 0x7a7e_5eed;

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError(format!("malformed JSON: {e}"))
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

type Result<T> = std::result::Result<T, CliError>;

/// `PATHSPACE_SEED`, or a fixed default.
pub fn seed() -> Result<u64> {
    match std::env::var("PATHSPACE_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| usage(format!("PATHSPACE_SEED must be an unsigned integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn read(path: &FsPath) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(source: &GraphSource) -> Result<(KGraph, String)> {
    match (&source.fixture, &source.graph) {
        (Some(name), _) => {
            let g = fixtures::graph(name).ok_or_else(|| {
                usage(format!("unknown fixture `{name}`; known: {}", fixtures::GRAPH_NAMES.join(", ")))
            })?;
            Ok((g, name.clone()))
        }
        (None, Some(path)) => Ok((KGraph::from_json(&read(path)?)?, path.display().to_string())),
        (None, None) => Err(usage("give --fixture or --graph")),
    }
}

/// A graph named inside a sequence file: a fixture name or a file next to it.
fn resolve_graph(name: &str, base: Option<&FsPath>) -> Result<KGraph> {
    if let Some(g) = fixtures::graph(name) {
        return Ok(g);
    }
    let path = match base {
        Some(dir) => dir.join(name),
        None => PathBuf::from(name),
    };
    Ok(KGraph::from_json(&read(&path)?)?)
}

fn bound(o: &Options, rank: usize) -> Result<Degree> {
    match o.bound.as_ref().map(|b| b.0.as_slice()) {
        None => Ok(Degree::splat(rank, 3)),
        Some([c]) => Ok(Degree::splat(rank, *c)),
        Some(cs) if cs.len() == rank => Ok(Degree::new(cs.to_vec())),
        Some(cs) => Err(usage(format!("--bound has {} coordinates but the graph has rank {rank}", cs.len()))),
    }
}

fn family_limit(o: &Options, g: &KGraph) -> Option<u64> {
    g.has_infinite_families().then_some(o.limit)
}

fn vertex(g: &KGraph, name: Option<&str>, fallback: u32) -> Result<u32> {
    match name {
        Some(n) => Ok(g.vertex_id(n)?),
        None => Ok(fallback),
    }
}

pub fn validate(o: &Options, source: &GraphSource) -> Result<Report> {
    let (g, subject) = load_graph(source)?;
    let b = bound(o, g.rank())?;
    let r = g.verify_axioms_with(&b, o.limit)?;
    let summary = match &r.counterexample {
        None => format!(
            "{} morphisms and {} factorizations verified up to {}",
            r.morphisms_checked, r.splits_checked, r.checked_bound
        ),
        Some(c) => match &c.split {
            Some(m) => format!("counterexample {} at degree {m}: {}", c.morphism, c.reason),
            None => format!("counterexample {}: {}", c.morphism, c.reason),
        },
    };
    let mut report = Report::new("validate", subject);
    report.push(Record::verdict("axioms", r.passed(), summary, serde_json::to_value(&r)?));
    Ok(report)
}

pub fn align(o: &Options, source: &GraphSource) -> Result<Report> {
    let (g, subject) = load_graph(source)?;
    let r = g.check_finitely_aligned(&bound(o, g.rank())?)?;
    let summary = match &r.offending {
        None => format!("{} ({} pairs, at most {} extensions)", r.reason, r.pairs_checked, r.max_extensions),
        Some((a, b)) => format!("{a} and {b}: {}", r.reason),
    };
    let mut report = Report::new("align", subject);
    report.push(Record::verdict("finite-alignment", r.passed(), summary, serde_json::to_value(&r)?));
    Ok(report)
}

pub fn enumerate(o: &Options, source: &GraphSource, only: Option<&str>) -> Result<Report> {
    let (g, subject) = load_graph(source)?;
    let b = bound(o, g.rank())?;
    let vertices: Vec<u32> = match only {
        Some(name) => vec![g.vertex_id(name)?],
        None => g.vertex_ids().collect(),
    };
    let mut report = Report::new("enumerate", subject);
    for v in vertices {
        let paths = g.enumerate_paths(v, &b, family_limit(o, &g))?;
        let shown: Vec<String> = paths.iter().map(|p| g.display_path(p)).collect();
        let infinite = paths.iter().filter(|p| !p.is_finite()).count();
        let mut summary = format!("{} paths ({} finite, {infinite} infinite) up to {b}", paths.len(), paths.len() - infinite);
        for s in &shown {
            summary.push('\n');
            summary.push_str(s);
        }
        let data = json!({ "vertex": g.vertex_name(v), "bound": b, "paths": shown });
        report.push(Record::new(format!("paths/{}", g.vertex_name(v)), Status::Pass, summary, data));
    }
    Ok(report)
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn lemma_record(g: &KGraph, check: String, label: &str, a: &Encoding) -> Result<Record> {
    let bits = bit_string(a.bits());
    let members: Vec<String> = a.members().iter().map(|m| g.display(m)).collect();
    Ok(match g.check_lemma_conditions(a)? {
        LemmaVerdict::Pass => {
            let decoded = g.display_path(&g.decode(a)?);
            let summary = format!("{label}: bits {bits}, membership conditions hold, decodes to {decoded}");
            Record::new(check, Status::Pass, summary, json!({ "bits": bits, "members": members, "lemma": "pass", "decoded": decoded }))
        }
        LemmaVerdict::Fail { condition, witness } => {
            let witness: Vec<String> = witness.iter().map(|m| g.display(m)).collect();
            let summary = format!("{label}: bits {bits}, {condition:?} fails at {}", witness.join(", "));
            Record::new(check, Status::Fail, summary, json!({ "bits": bits, "members": members, "lemma": "fail", "condition": condition, "witness": witness }))
        }
        LemmaVerdict::Bounded { pairs } => {
            let pairs: Vec<[String; 2]> = pairs.iter().map(|(a, b)| [g.display(a), g.display(b)]).collect();
            let summary = format!("{label}: bits {bits}, directedness needs extensions beyond the window for {} pairs", pairs.len());
            Record::new(check, Status::Inconclusive, summary, json!({ "bits": bits, "members": members, "lemma": "bounded", "pairs": pairs }))
        }
    })
}

pub fn encode(o: &Options, source: &GraphSource, literals: &[String], bits: Option<&str>, at: Option<&str>) -> Result<Report> {
    let (g, subject) = load_graph(source)?;
    if literals.is_empty() && bits.is_none() {
        return Err(usage("give at least one --path or a --bits assignment"));
    }
    let paths = literals.iter().map(|l| g.parse_path(l)).collect::<pathspace::Result<Vec<_>>>()?;
    let v = vertex(&g, at, paths.first().map_or(0, |p| p.range()))?;
    let b = bound(o, g.rank())?;
    let window = Window::ball(&g, v, &b, family_limit(o, &g))?;
    let shown: Vec<String> = window.paths().iter().map(|m| g.display(m)).collect();
    let mut report = Report::new("encode", subject);
    report.push(Record::new(
        "window",
        Status::Pass,
        format!("{} paths from {} up to {b}: {}", window.len(), g.vertex_name(v), shown.join(" ")),
        json!({ "vertex": g.vertex_name(v), "bound": b, "paths": shown }),
    ));
    for (i, (p, literal)) in paths.iter().zip(literals).enumerate() {
        let a = g.alpha(p, &window)?;
        let mut r = lemma_record(&g, format!("alpha/{i:03}"), literal, &a)?;
        r.data["path"] = Value::String(literal.clone());
        report.push(r);
    }
    if let Some(bits) = bits {
        let parsed: Vec<bool> = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(usage(format!("--bits takes 0 and 1 only, got `{c}`"))),
            })
            .collect::<Result<_>>()?;
        let a = Encoding::new(&window, parsed)?;
        report.push(lemma_record(&g, "lemma".into(), "assignment", &a)?);
    }
    Ok(report)
}

fn kind_of(text: &str) -> Result<String> {
    let v: Value = serde_json::from_str(text)?;
    v.get("kind").and_then(Value::as_str).map(str::to_string).ok_or_else(|| usage("sequence file has no `kind`"))
}

fn load_sequences(source: &SequenceSource) -> Result<(String, String, Option<PathBuf>)> {
    match (&source.fixture, &source.input) {
        (Some(name), _) => {
            let text = fixtures::sequence_source(name)
                .ok_or_else(|| usage(format!("unknown sequence fixture `{name}`; known: einf-sequences, factor-sequences")))?;
            Ok((text.to_string(), name.clone(), None))
        }
        (None, Some(path)) => Ok((read(path)?, path.display().to_string(), path.parent().map(FsPath::to_path_buf))),
        (None, None) => Err(usage("give --fixture or --input")),
    }
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn converge(o: &Options, source: &SequenceSource, seed: u64) -> Result<Report> {
    let (text, subject, base) = load_sequences(source)?;
    match kind_of(&text)?.as_str() {
        "path-sequences" => converge_paths(o, &text, subject, base.as_deref()),
        "factor-sequences" => converge_factors(o, &text, subject, seed),
        other => Err(usage(format!("unknown sequence kind `{other}`"))),
    }
}

fn branch_data(g: &KGraph, start: u32, c: &Convergence<pathspace::Edge>) -> Vec<Value> {
    c.branches
        .iter()
        .map(|b| {
            let limit = g.display_symbolic(&SymbolicPath { start, word: b.limit.clone() });
            json!({ "branch": b.branch, "limit": limit, "agrees": b.agrees })
        })
        .collect()
}

fn converge_paths(o: &Options, text: &str, subject: String, base: Option<&FsPath>) -> Result<Report> {
    let file: PathSequenceFile = serde_json::from_str(text)?;
    let g = resolve_graph(&file.graph, base)?;
    let b = bound(o, g.rank())?;
    let mut report = Report::new("converge", subject);
    for (name, seq, target, expect) in g.load_path_sequences(&file)? {
        let c = g.converges(&seq, &target)?;
        let window = Window::ball(&g, seq.start, &b, family_limit(o, &g))?;
        let w = g.converges_on_window(&seq, &target, &window)?;
        let shown = g.display_symbolic(&target);
        let mut summary = match (c.converges, c.threshold) {
            (true, Some(n0)) => format!("converges to {shown} from n₀ = {n0}"),
            (true, None) => format!("converges to {shown}"),
            (false, _) => {
                let off = c.branches.iter().find(|b| !b.agrees).expect("a disagreeing branch");
                let limit = g.display_symbolic(&SymbolicPath { start: seq.start, word: off.limit.clone() });
                format!("does not converge to {shown}: branch {} tends to {limit}", off.branch)
            }
        };
        // Convergence forces the window encodings to settle on the target.
        let consistent = !c.converges || w.converges;
        if !consistent {
            summary.push_str(&format!("; window encodings disagree from n = {}", w.threshold));
        }
        if c.converges != expect {
            summary.push_str(&format!(" (expected {})", if expect { "convergence" } else { "divergence" }));
        }
        let data = json!({
            "case": name,
            "target": shown,
            "expect": expect,
            "converges": c.converges,
            "threshold": c.threshold,
            "branches": branch_data(&g, seq.start, &c),
            "window": { "bound": b, "paths": window.len(), "converges": w.converges, "threshold": w.threshold, "bits": bit_string(&w.limit_bits) },
        });
        report.push(Record::verdict(format!("case/{name}"), c.converges == expect && consistent, summary, data));
    }
    Ok(report)
}

fn converge_factors(o: &Options, text: &str, subject: String, seed: u64) -> Result<Report> {
    let file: FactorSequenceFile = serde_json::from_str(text)?;
    let space = &file.factors;
    let mut report = Report::new("converge", subject);
    for (i, (name, seq, target, expect)) in file.load()?.into_iter().enumerate() {
        let p = space.converges_pointwise(&seq, &target);
        let qv = space.converges_quotient(&seq, &target, o.horizon, o.lifts, &mut case_rng(seed, i));
        let verdict = |b: bool| if b { "converges" } else { "does not converge" };
        let mut summary = format!(
            "pointwise {}, quotient {} to {target} ({} lifts, {} cluster points)",
            verdict(p.converges),
            verdict(qv.converges),
            qv.lifts_checked,
            qv.clusters_checked
        );
        if let Some(w) = &qv.witness {
            summary.push_str(&format!("; lift {} has cluster point {} with Q = {}", w.lift, w.cluster, w.image));
        }
        if p.converges != expect {
            summary.push_str(&format!(" (expected {})", verdict(expect)));
        }
        let data = json!({
            "case": name,
            "target": target.to_string(),
            "expect": expect,
            "pointwise": p.converges,
            "threshold": p.threshold,
            "quotient": qv.converges,
            "lifts": qv.lifts_checked,
            "clusters": qv.clusters_checked,
            "witness": qv.witness.as_ref().map(|w| json!({ "lift": w.lift, "cluster": w.cluster.to_string(), "image": w.image.to_string() })),
            "horizon": o.horizon,
            "seed": seed,
        });
        let ok = p.converges == expect && qv.converges == expect;
        report.push(Record::verdict(format!("case/{name}"), ok, summary, data));
    }
    Ok(report)
}

pub fn tychonoff(o: &Options, source: &SequenceSource, seed: u64, trace: u64) -> Result<Report> {
    let (text, subject, _) = load_sequences(source)?;
    if kind_of(&text)? != "factor-sequences" {
        return Err(usage("tychonoff traces need a factor-sequences file"));
    }
    let file: FactorSequenceFile = serde_json::from_str(&text)?;
    let space = &file.factors;
    let mut report = Report::new("tychonoff", subject);
    for (i, (name, seq, target, expect)) in file.load()?.into_iter().enumerate() {
        let mut rng = case_rng(seed, i);
        let mut lifts = vec![space.minimal_lift(&seq)];
        lifts.extend((0..o.lifts).map(|_| space.random_lift(&seq, o.horizon, &mut rng)));
        let mut lines = Vec::new();
        let mut traces = Vec::new();
        let mut all_hit = true;
        for (k, lift) in lifts.iter().enumerate() {
            let mut instances = Vec::new();
            for n in 1..=trace {
                let a = space.lift_instance(lift, n);
                let (image, len) = (q(&a), n_of(&a));
                let len_shown = len.map_or("∞".to_string(), |l| l.to_string());
                lines.push(format!("lift {k} n={n}: a = {a}, Q(a) = {image}, N(a) = {len_shown}"));
                instances.push(json!({ "n": n, "a": a.to_string(), "q": image.to_string(), "N": len }));
            }
            let mut clusters = Vec::new();
            for c in space.cluster_points(lift) {
                let image = q(&c);
                let hit = image == target;
                all_hit &= hit;
                lines.push(format!("lift {k} cluster {c} ↦ {image}{}", if hit { "" } else { " ≠ target" }));
                clusters.push(json!({ "point": c.to_string(), "q": image.to_string(), "hits": hit }));
            }
            traces.push(json!({ "lift": k, "instances": instances, "clusters": clusters }));
        }
        let pointwise = space.converges_pointwise(&seq, &target).converges;
        let consistent = pointwise == all_hit;
        let mut summary = format!(
            "target {target}: pointwise {}, every cluster point ↦ target: {all_hit}, expected {expect}",
            pointwise
        );
        for l in lines {
            summary.push('\n');
            summary.push_str(&l);
        }
        let data = json!({
            "case": name,
            "target": target.to_string(),
            "target_lift": space.canonical_lift(&target).to_string(),
            "expect": expect,
            "pointwise": pointwise,
            "quotient": all_hit,
            "lifts": traces,
            "seed": seed,
        });
        report.push(Record::verdict(format!("case/{name}"), consistent && pointwise == expect, summary, data));
    }
    Ok(report)
}

pub fn subcover(o: &Options, source: &GraphSource, at: Option<&str>, literals: &[String]) -> Result<Report> {
    let (g, subject) = load_graph(source)?;
    let cylinders: Vec<Cylinder> =
        literals.iter().map(|l| g.parse_morphism(l).map(Cylinder::new)).collect::<pathspace::Result<_>>()?;
    let v = vertex(&g, at, cylinders.first().map_or(0, |c| c.base.range()))?;
    let b = bound(o, g.rank())?;
    let record = match g.finite_subcover(&cylinders, v, &b)? {
        SubcoverVerdict::Subcover(ix) => {
            let chosen: Vec<&str> = ix.iter().map(|&i| literals[i].as_str()).collect();
            Record::new("subcover", Status::Pass, format!("W_{} is covered by {}", g.vertex_name(v), chosen.join(", ")), json!({ "subcover": chosen }))
        }
        SubcoverVerdict::Counterexample(p) => {
            let shown = g.display_path(&p);
            Record::new("subcover", Status::Fail, format!("{shown} lies in no given cylinder"), json!({ "uncovered": shown }))
        }
        SubcoverVerdict::Inconclusive { bound, needed } => Record::new(
            "subcover",
            Status::Inconclusive,
            format!("the cover mentions degree {needed}, beyond the bound {bound}"),
            json!({ "bound": bound, "needed": needed }),
        ),
    };
    let mut report = Report::new("subcover", subject);
    report.push(record);
    Ok(report)
}

fn bijection_summary(r: &BijectionReport) -> String {
    let mut s = format!(
        "{} elements; range injective {}, surjective {}; source injective {}, surjective {}",
        r.elements, r.range_injective, r.range_surjective, r.source_injective, r.source_surjective
    );
    if let Some(d) = &r.duplicate {
        s.push_str(&format!("; duplicate image from {d}"));
    }
    if let Some(m) = &r.missed {
        s.push_str(&format!("; missed {m}"));
    }
    s
}

pub fn groupoid(o: &Options, source: &GraphSource, op: &GroupoidOp) -> Result<Report> {
    let (g, subject) = load_graph(source)?;
    let mut report = Report::new("groupoid", subject);
    match op {
        GroupoidOp::Compose { left, right } => {
            let (a, b) = (g.parse_element(left)?, g.parse_element(right)?);
            if !g.path_eq(&a.y, &b.x)? {
                let summary = format!("not composable: {} ≠ {}", g.display_path(&a.y), g.display_path(&b.x));
                report.push(Record::new("compose", Status::Fail, summary, json!({ "source": g.display_path(&a.y), "range": g.display_path(&b.x) })));
            } else {
                let c = g.compose_elements(&a, &b)?;
                let shown = g.display_element(&c);
                let summary = format!("{shown} with witness {}", g.display_witness(&c));
                report.push(Record::new("compose", Status::Pass, summary, json!({ "element": shown, "witness": g.display_witness(&c) })));
            }
        }
        GroupoidOp::Invert { element } => {
            let a = g.parse_element(element)?;
            let inv = g.invert(&a);
            let shown = g.display_element(&inv);
            report.push(Record::new("invert", Status::Pass, format!("{shown} with witness {}", g.display_witness(&inv)), json!({ "element": shown, "witness": g.display_witness(&inv) })));
            let left = g.compose_elements(&a, &inv)?;
            let right = g.compose_elements(&inv, &a)?;
            let ok = g.is_unit(&left)? && g.is_unit(&right)? && g.path_eq(&left.x, &a.x)? && g.path_eq(&right.x, &a.y)?;
            let summary = format!("g·g⁻¹ = {}, g⁻¹·g = {}", g.display_element(&left), g.display_element(&right));
            report.push(Record::verdict("inverse-laws", ok, summary, json!({ "left": g.display_element(&left), "right": g.display_element(&right) })));
        }
        GroupoidOp::Member { element, set } => {
            let (a, z) = (g.parse_element(element)?, g.parse_basis_set(set)?);
            let inside = g.basis_membership(&a, &z)?;
            let summary = format!("{} {} {}", g.display_element(&a), if inside { "∈" } else { "∉" }, g.display_basis_set(&z));
            report.push(Record::verdict("member", inside, summary, json!({ "element": g.display_element(&a), "set": g.display_basis_set(&z), "member": inside })));
        }
        GroupoidOp::Intersect { left, right } => {
            let (a, b) = (g.parse_basis_set(left)?, g.parse_basis_set(right)?);
            let parts: Vec<String> = g.basis_intersection(&a, &b)?.iter().map(|z| g.display_basis_set(z)).collect();
            let shown = if parts.is_empty() { "∅".to_string() } else { parts.join(" ∪ ") };
            let summary = format!("{} ∩ {} = {shown}", g.display_basis_set(&a), g.display_basis_set(&b));
            report.push(Record::new("intersect", Status::Pass, summary, json!({ "union": parts })));
        }
        GroupoidOp::Bijection { set } => {
            let z = g.parse_basis_set(set)?;
            let r = g.range_source_bijection_check(&z, &bound(o, g.rank())?, family_limit(o, &g))?;
            let summary = format!("{}: {}", g.display_basis_set(&z), bijection_summary(&r));
            report.push(Record::verdict("bijection", r.passed(), summary, serde_json::to_value(&r)?));
        }
    }
    Ok(report)
}
