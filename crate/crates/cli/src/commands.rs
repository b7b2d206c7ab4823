use std::path::Path;
use std::sync::Arc;

use pseudoflower::dot::render_dot;
use pseudoflower::extension::{located_indices, maximalize};
use pseudoflower::flower::PseudoFlower;
use pseudoflower::generators::{gen_anemone, gen_clique, gen_daisy, gen_grid, DaisySpec};
use pseudoflower::io::*;
use pseudoflower::profiles::{flower_distinguished_pairs, locate};
use pseudoflower::{enumerate_separations, FormatError, Graph, Profile, ProfileError, SeparationSystem, VertexSet};
use serde_json::{json, Value};

use crate::report::{read, write_atomic, Failure, RunReport, Status};
use crate::{Command, FlowerArgs, GenCommand};

pub fn name(c: &Command) -> &'static str {
    match c {
        Command::Separations { .. } => "separations",
        Command::Profiles { .. } => "profiles",
        Command::Validate(_) => "validate",
        Command::Locate { .. } => "locate",
        Command::Maximalize { .. } => "maximalize",
        Command::Gen(GenCommand::Daisy { .. }) => "gen daisy",
        Command::Gen(GenCommand::Anemone { .. }) => "gen anemone",
        Command::Gen(GenCommand::Grid { .. }) => "gen grid",
        Command::Gen(GenCommand::Clique { .. }) => "gen clique",
        Command::Render { .. } => "render",
    }
}

fn parse_err(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Parse(format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read(path)?).map_err(|e| parse_err(path, e))
}

fn load_flower(args: &FlowerArgs) -> Result<(Graph, PseudoFlower), Failure> {
    let g = load_graph(&args.graph)?;
    let text = read(&args.flower)?;
    let f = flower_from_json(&text, g.vertices()).map_err(|e| match e {
        FormatError::XMismatch { .. } => Failure::Invalid(format!("{}: {e}", args.flower.display())),
        _ => parse_err(&args.flower, e),
    })?;
    Ok((g, f))
}

/// Profiles must have order one more than the flower.
fn load_profiles(g: &Graph, f: &PseudoFlower, path: &Path) -> Result<Vec<Profile>, Failure> {
    let text = read(path)?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| parse_err(path, e))?;
    let k = doc.get("k").and_then(Value::as_u64).ok_or_else(|| parse_err(path, "missing integer field k"))? as usize;
    if k != f.k() + 1 {
        return Err(Failure::Invalid(format!("profiles have order {k} but the flower has order {}", f.k())));
    }
    let system = Arc::new(SeparationSystem::new(g, k).map_err(|e| parse_err(path, e))?);
    profiles_from_json(&text, &system).map_err(|e| parse_err(path, e))
}

/// Writes `document` to `out` when given, otherwise embeds it in the report.
fn emit(command: &str, document: String, out: Option<&Path>, summary: Value) -> Result<RunReport, Failure> {
    match out {
        Some(path) => {
            write_atomic(path, &document)?;
            let mut payload = summary;
            payload["out"] = json!(path.display().to_string());
            Ok(RunReport::ok(command, payload))
        }
        None => {
            let mut payload = summary;
            payload["document"] = serde_json::from_str(&document).expect("emitted json");
            Ok(RunReport::ok(command, payload))
        }
    }
}

fn parse_groups(spec: &str) -> Result<Vec<VertexSet>, Failure> {
    spec.split(';')
        .map(|grp| {
            grp.split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad vertex {v:?} in --groups"))))
                .collect::<Result<VertexSet, _>>()
        })
        .collect()
}

pub fn run(command: Command) -> Result<RunReport, Failure> {
    match command {
        Command::Separations { graph, max_order, out } => {
            let g = load_graph(&graph)?;
            let seps = enumerate_separations(&g, max_order);
            emit("separations", separations_to_json(&seps), out.as_deref(), json!({ "count": seps.len() }))
        }
        Command::Profiles { graph, order, tangles_only, max_pairs, out } => {
            let g = load_graph(&graph)?;
            let profiles = pseudoflower::enumerate_profiles(&g, order, tangles_only, max_pairs).map_err(|e| match e {
                ProfileError::Guard { .. } => Failure::Guard(e.to_string()),
                _ => Failure::Usage(e.to_string()),
            })?;
            let tangles = profiles.iter().filter(|p| p.is_tangle()).count();
            let summary = json!({ "count": profiles.len(), "tangles": tangles });
            emit("profiles", profiles_to_json(order, &profiles), out.as_deref(), summary)
        }
        Command::Validate(args) => {
            let (g, f) = load_flower(&args)?;
            let report = f.validate(&g);
            let mut payload = json!({
                "valid": report.valid,
                "clauses": serde_json::to_value(&report.clauses).expect("json"),
            });
            if report.valid {
                payload["kind"] = serde_json::to_value(f.kind()).expect("json");
                payload["is_flower"] = json!(f.is_flower(&g).unwrap_or(false));
            }
            let mut r = RunReport::ok("validate", payload);
            if !report.valid {
                r.status = Status::Invalid;
                r.diagnostics = report
                    .failures()
                    .map(|c| {
                        let head = match c.clause.number() {
                            Some(n) => format!("clause {n} ({}) failed", c.clause),
                            None => format!("{} check failed", c.clause),
                        };
                        match &c.counterexample {
                            Some(w) => format!("{head}: {w}"),
                            None => head,
                        }
                    })
                    .collect();
            }
            Ok(r)
        }
        Command::Locate { input, profiles } => {
            let (g, f) = load_flower(&input)?;
            let ps = load_profiles(&g, &f, &profiles)?;
            let mut diagnostics = Vec::new();
            let locations: Vec<Value> = ps
                .iter()
                .enumerate()
                .map(|(id, p)| match locate(&f, p) {
                    Ok(loc) => json!({ "id": id, "kind": p.kind(), "cutpoint": loc.cutpoint, "side": loc.side }),
                    Err(e) => {
                        diagnostics.push(format!("profile {id}: {e}"));
                        json!({ "id": id, "kind": p.kind(), "cutpoint": null, "side": null })
                    }
                })
                .collect();
            let mut r = RunReport::ok("locate", json!({ "locations": locations }));
            r.diagnostics = diagnostics;
            Ok(r)
        }
        Command::Maximalize { input, profiles, out } => {
            let (g, f) = load_flower(&input)?;
            let ps = load_profiles(&g, &f, &profiles)?;
            let m = maximalize(&g, &f, &ps).map_err(|e| Failure::Invalid(e.to_string()))?;
            let pairs = |fl: &PseudoFlower| flower_distinguished_pairs(fl, &ps).map(|s| s.len()).unwrap_or(0);
            let steps: Vec<Value> = m
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "candidate": s.candidate,
                        "anchored": anchored_to_value(&s.anchored),
                        "new_cutpoint": s.new_cutpoint,
                    })
                })
                .collect();
            let summary = json!({
                "steps": steps,
                "pairs_before": pairs(&f),
                "pairs_after": pairs(&m.flower),
                "located": located_indices(&m.flower, &ps),
            });
            emit("maximalize", flower_to_json(&m.flower), out.as_deref(), summary)
        }
        Command::Gen(cmd) => run_gen(cmd),
        Command::Render { input, dot } => {
            let (g, f) = load_flower(&input)?;
            write_atomic(&dot, &render_dot(&g, &f))?;
            Ok(RunReport::ok(
                "render",
                json!({ "dot": dot.display().to_string(), "petals": f.index_len(), "x": f.x() }),
            ))
        }
    }
}

fn graph_document(command: &str, g: &Graph, out: Option<&Path>) -> Result<RunReport, Failure> {
    let mut payload = json!({ "vertices": g.vertex_count(), "edges": g.edge_count() });
    match out {
        Some(path) => {
            write_atomic(path, &g.to_text())?;
            payload["out"] = json!(path.display().to_string());
        }
        None => payload["graph"] = json!(g.to_text()),
    }
    Ok(RunReport::ok(command, payload))
}

fn run_gen(cmd: GenCommand) -> Result<RunReport, Failure> {
    let gen_err = |e: pseudoflower::GeneratorError| Failure::Invalid(e.to_string());
    match cmd {
        GenCommand::Daisy { n, a, d, base, arcs, graph_out, flower_out } => {
            let spec = match base {
                Some(base) => {
                    let arcs_path = arcs.expect("clap enforces --arcs");
                    let spec = arcs_from_json(&read(&arcs_path)?).map_err(|e| parse_err(&arcs_path, e))?;
                    DaisySpec { base: load_graph(&base)?, arcs: spec.arcs, attachment: spec.attachment, copies: d }
                }
                None => DaisySpec::standard(n.unwrap_or(0), a.unwrap_or(0), d).map_err(gen_err)?,
            };
            let (g, f) = gen_daisy(&spec).map_err(gen_err)?;
            let mut payload = json!({ "k": f.k(), "vertices": g.vertex_count(), "petals": f.index_len() });
            match &graph_out {
                Some(p) => {
                    write_atomic(p, &g.to_text())?;
                    payload["graph_out"] = json!(p.display().to_string());
                }
                None => payload["graph"] = json!(g.to_text()),
            }
            let flower = flower_to_json(&f);
            match &flower_out {
                Some(p) => {
                    write_atomic(p, &flower)?;
                    payload["flower_out"] = json!(p.display().to_string());
                }
                None => payload["flower"] = serde_json::from_str(&flower).expect("emitted json"),
            }
            Ok(RunReport::ok("gen daisy", payload))
        }
        GenCommand::Anemone { graph, x, groups, out } => {
            let g = load_graph(&graph)?;
            let groups = parse_groups(&groups)?;
            let f = gen_anemone(&g, x.into_iter().collect(), &groups).map_err(gen_err)?;
            emit("gen anemone", flower_to_json(&f), out.as_deref(), json!({ "k": f.k(), "petals": f.index_len() }))
        }
        GenCommand::Grid { rows, cols, out } => {
            let g = gen_grid(rows, cols).map_err(|e| Failure::Usage(e.to_string()))?;
            graph_document("gen grid", &g, out.as_deref())
        }
        GenCommand::Clique { n, out } => {
            let g = gen_clique(n).map_err(|e| Failure::Usage(e.to_string()))?;
            graph_document("gen clique", &g, out.as_deref())
        }
    }
}
