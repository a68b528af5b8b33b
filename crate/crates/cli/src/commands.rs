use std::fs;
use std::path::Path;

use factorlab::constructions::{
    all_connected, clique_blowup, corpus, gnp, lowerbound_family, named, petersen, random_regular, CorpusSpec,
};
use factorlab::factors::{
    check_forced_criterion, check_gf_criterion, check_near_f_criterion, check_one_f_factor, check_one_factor,
    check_restricted_criterion, find_f_factor, find_gf_factor, find_near_f_factor, FactorCertificate,
};
use factorlab::graph::{emit_graph, Format};
use factorlab::independent::{caro_wei, greedy_color_classes, greedy_weighted_independent, independence_number};
use factorlab::rational::parse_q;
use factorlab::resilience::{
    check_iso_tough, check_strong_tough, check_tough, iso_toughness, strong_toughness, toughness, Mode,
};
use factorlab::theorems::{
    audit, campaign, registry, replay_witness, CaseReport, FnParam, TheoremSpec, Verdict,
};
use factorlab::treeconn::{
    bounded_mtc_factor, connected_24_factor, even_subgraphs, is_tree_connected, mtc_components, omega,
    spanning_eulerian, tree_packing, worst_omega_set, EulerMode,
};
use factorlab::{Budget, MultiGraph, VertexFn};
use serde_json::{json, Map, Value};

use crate::input::{load_graph, read_text, to_format, vertex_fn, CliError, CliResult};
use crate::{Cli, Command, CriterionKind, EulerArg, FactorKind, Family, ToughArgs, ToughMode, VerifyKind};

const SCHEMA: u64 = 1;

fn emit(cli: &Cli, command: &str, body: Value) -> CliResult<()> {
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    match body {
        Value::Object(m) => obj.extend(m),
        other => {
            obj.insert("result".into(), other);
        }
    }
    let text = serde_json::to_string_pretty(&Value::Object(obj))? + "\n";
    match &cli.out {
        Some(path) if command != "gen" => fs::write(path, text)?,
        _ => print!("{text}"),
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialise")
}

fn euler_mode(m: EulerArg) -> EulerMode {
    match m {
        EulerArg::Construct => EulerMode::Construct,
        EulerArg::Exhaustive => EulerMode::Exhaustive,
        EulerArg::Auto => EulerMode::Auto,
    }
}

fn require_seed(seed: Option<u64>, what: &str) -> CliResult<u64> {
    seed.ok_or_else(|| CliError::Usage(format!("{what} is randomized and needs --seed")))
}

fn tough_cmd(cli: &Cli, args: &ToughArgs, iso: bool, budget: &Budget) -> CliResult<u8> {
    let g = load_graph(&args.graph)?;
    let name = if iso { "iso" } else { "toughness" };
    if let Some(t) = &args.check {
        let t = parse_q(t)?;
        let check = if iso {
            check_iso_tough(&g, &VertexFn::constant(g.n(), t), budget)?
        } else {
            check_tough(&g, t, budget)?
        };
        emit(cli, name, json!({ "threshold": t.to_string(), "check": check }))?;
        return Ok(0);
    }
    let mode = match args.mode {
        ToughMode::Exact => Mode::Exact,
        ToughMode::Falsify => Mode::Falsify {
            samples: args.samples.unwrap_or(budget.samples),
            seed: require_seed(args.seed, "falsify mode")?,
        },
    };
    let report = if iso {
        iso_toughness(&g, mode, budget)?
    } else {
        toughness(&g, mode, budget)?
    };
    emit(cli, name, to_value(&report))?;
    Ok(0)
}

fn certificate_value(c: &Option<FactorCertificate>) -> Value {
    json!({ "found": c.is_some(), "certificate": c })
}

fn load_certificate(path: &Path) -> CliResult<FactorCertificate> {
    let v: Value = serde_json::from_str(&read_text(path)?)?;
    // accept a bare certificate or any report that nests one
    fn find(v: &Value) -> Option<FactorCertificate> {
        if let Ok(c) = serde_json::from_value::<FactorCertificate>(v.clone()) {
            return Some(c);
        }
        match v {
            Value::Object(m) => m.values().find_map(find),
            _ => None,
        }
    }
    find(&v).ok_or_else(|| CliError::Usage(format!("{}: no certificate found", path.display())))
}

fn parse_theorem(spec: &str, n: usize, f_file: Option<&Path>) -> CliResult<TheoremSpec> {
    let mut t: TheoremSpec = spec.parse()?;
    if let Some(p) = f_file {
        let f = VertexFn::parse(&read_text(p)?, n)?;
        t.params.f_fn = Some(FnParam::PerVertex(f));
    }
    Ok(t)
}

fn gen_output(cli: &Cli, graphs: &[MultiGraph], format: Option<crate::FormatArg>, meta: Value) -> CliResult<u8> {
    let simple = graphs.iter().all(MultiGraph::is_simple);
    let format = match format.map(to_format) {
        Some(f) => f,
        None if graphs.len() > 1 && simple => Format::Graph6,
        None => Format::Edgelist,
    };
    let texts = graphs.iter().map(|g| emit_graph(g, format)).collect::<Result<Vec<_>, _>>()?;
    let mut body = json!({
        "format": format,
        "count": graphs.len(),
        "vertices": graphs.iter().map(MultiGraph::n).collect::<Vec<_>>(),
        "edges": graphs.iter().map(MultiGraph::m).collect::<Vec<_>>(),
    });
    if let Value::Object(m) = meta {
        body.as_object_mut().expect("object").extend(m);
    }
    match &cli.out {
        Some(path) => {
            let joined: String = texts.iter().map(|t| t.trim_end().to_string() + "\n").collect();
            fs::write(path, joined)?;
            body["written"] = json!(path.display().to_string());
        }
        None => body["graphs"] = json!(texts),
    }
    emit(cli, "gen", body)?;
    Ok(0)
}

pub fn run(cli: &Cli) -> CliResult<u8> {
    let budget = cli.budget.resolve();
    let budget = &budget;
    match &cli.command {
        Command::Toughness(a) => tough_cmd(cli, a, false, budget),
        Command::Iso(a) => tough_cmd(cli, a, true, budget),
        Command::Strong { graph, m, check } => {
            let g = load_graph(graph)?;
            let body = match check {
                Some(t) => {
                    let t = parse_q(t)?;
                    json!({ "m": m, "threshold": t.to_string(), "check": check_strong_tough(&g, *m, t, budget)? })
                }
                None => to_value(&strong_toughness(&g, *m, budget)?),
            };
            emit(cli, "strong", body)?;
            Ok(0)
        }
        Command::Indep { graph, phi, colors } => {
            let g = load_graph(graph)?;
            let phi = vertex_fn(phi, g.n())?;
            let greedy = greedy_weighted_independent(&g, &phi)?;
            let (alpha, max_set) = independence_number(&g)?;
            let mut body = json!({
                "greedy": greedy,
                "holds": greedy.holds(),
                "caro_wei": caro_wei(&g).to_string(),
                "alpha": alpha,
                "max_independent_set": max_set,
            });
            if let Some(k) = colors {
                body["classes"] = to_value(&greedy_color_classes(&g, *k)?);
            }
            emit(cli, "indep", body)?;
            Ok(0)
        }
        Command::Criterion { kind, graph, f, g: lo } => {
            let gr = load_graph(graph)?;
            let n = gr.n();
            let check = match kind {
                CriterionKind::Tutte => check_near_f_criterion(&gr, &vertex_fn(f, n)?, budget)?,
                CriterionKind::Lovasz => check_gf_criterion(&gr, &vertex_fn(lo, n)?, &vertex_fn(f, n)?, budget)?,
                CriterionKind::OneFactor => check_one_factor(&gr, budget)?,
                CriterionKind::Vergnas => check_one_f_factor(&gr, &vertex_fn(f, n)?, budget)?,
                CriterionKind::Restricted => check_restricted_criterion(&gr, &vertex_fn(f, n)?, budget)?,
                CriterionKind::Forced => check_forced_criterion(&gr, &vertex_fn(f, n)?, budget)?,
            };
            emit(cli, "criterion", json!({ "criterion": format!("{kind:?}").to_lowercase(), "check": check }))?;
            Ok(0)
        }
        Command::Factor { kind, graph, f, g: lo, forced } => {
            let g = load_graph(graph)?;
            let n = g.n();
            let fv = vertex_fn(f, n)?;
            let cert = match kind {
                FactorKind::F => find_f_factor(&g, &fv)?,
                FactorKind::Near => find_near_f_factor(&g, &fv, *forced)?,
                FactorKind::Gf => find_gf_factor(&g, &vertex_fn(lo, n)?, &fv)?,
            };
            emit(cli, "factor", certificate_value(&cert))?;
            Ok(0)
        }
        Command::Treepack { graph, m } => {
            let g = load_graph(graph)?;
            emit(cli, "treepack", to_value(&tree_packing(&g, *m)))?;
            Ok(0)
        }
        Command::Mtc { graph, m, worst, bounded, u } => {
            let g = load_graph(graph)?;
            if *m == 0 {
                return Err(CliError::Usage("m must be positive".into()));
            }
            let mut body = json!({
                "partition": mtc_components(&g, *m),
                "omega_m": omega(&g, *m).to_string(),
                "tree_connected": is_tree_connected(&g, *m),
            });
            if *worst {
                body["worst"] = to_value(&worst_omega_set(&g, *m, budget)?);
            }
            if *bounded {
                body["bounded"] = to_value(&bounded_mtc_factor(&g, *m, *u, budget)?);
            }
            emit(cli, "mtc", body)?;
            Ok(0)
        }
        Command::Eulerian { graph, mode } => {
            let g = load_graph(graph)?;
            let body = if *mode == EulerArg::Exhaustive && g.n() > 1 {
                let search = even_subgraphs(&g, |d| d % 2 == 0 && d >= 2, budget)?;
                json!({
                    "found": search.certificate.is_some(),
                    "certificate": search.certificate,
                    "dimension": search.dimension,
                    "candidates": search.candidates,
                })
            } else {
                certificate_value(&spanning_eulerian(&g, euler_mode(*mode), budget)?)
            };
            emit(cli, "eulerian", body)?;
            Ok(0)
        }
        Command::Factor24 { graph, mode } => {
            let g = load_graph(graph)?;
            emit(cli, "factor24", certificate_value(&connected_24_factor(&g, euler_mode(*mode), budget)?))?;
            Ok(0)
        }
        Command::Verify { kind, graph, cert, f, g: lo, m } => {
            let g = load_graph(graph)?;
            let c = load_certificate(cert)?;
            let n = g.n();
            let sub = c.is_subgraph_of(&g);
            let ok = match kind {
                VerifyKind::F => c.audit_exact(&g, &vertex_fn(f, n)?),
                VerifyKind::Near => c.audit_near(&g, &vertex_fn(f, n)?),
                VerifyKind::Gf => c.audit_range(&g, &vertex_fn(lo, n)?, &vertex_fn(f, n)?),
                VerifyKind::Mtc => sub && c.max_degree() <= 2 * m + 1 && is_tree_connected(&c.graph(), *m),
                VerifyKind::Eulerian => sub && c.all_even() && (n <= 1 || c.is_connected()),
                VerifyKind::Factor24 => sub && c.is_connected() && c.degrees.iter().all(|&d| d == 2 || d == 4),
            };
            emit(cli, "verify", json!({ "valid": ok, "subgraph": sub }))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Audit { theorem, graph, graph_id, f_file } => {
            let g = load_graph(graph)?;
            let spec = parse_theorem(theorem, g.n(), f_file.as_deref())?;
            let report = audit(&g, graph_id, &spec.id, &spec.params, budget)?;
            emit(cli, "audit", to_value(&report))?;
            Ok(match report.verdict {
                Verdict::Counterexample => 3,
                Verdict::Inconclusive => 2,
                _ => 0,
            })
        }
        Command::Campaign {
            corpus: corpus_text,
            theorems,
            seed,
            jobs,
            timing,
            reports,
            dump,
        } => {
            let spec: CorpusSpec = corpus_text.parse()?;
            let randomized = matches!(spec, CorpusSpec::Gnp { .. } | CorpusSpec::Regular { .. });
            let seed = if randomized {
                require_seed(*seed, "this corpus")?
            } else {
                seed.unwrap_or(0)
            };
            let specs = theorems
                .iter()
                .flat_map(|t| t.split(';'))
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<TheoremSpec>())
                .collect::<Result<Vec<_>, _>>()?;
            let graphs = corpus(&spec, seed)?;
            let result = campaign(&graphs, &specs, budget, *jobs, *timing)?;
            let counter: Vec<&CaseReport> = result.counterexamples().collect();
            if let Some(dir) = dump {
                fs::create_dir_all(dir)?;
                for rep in &counter {
                    let cg = graphs.iter().find(|g| g.id == rep.graph_id).expect("report graph is in the corpus");
                    let name = format!("{}__{}.json", rep.theorem_id, rep.graph_id.replace(['#', '/', ':'], "_"));
                    let body = json!({
                        "schema": SCHEMA,
                        "graph": emit_graph(&cg.graph, Format::Edgelist)?,
                        "report": rep,
                    });
                    fs::write(dir.join(name), serde_json::to_string_pretty(&body)? + "\n")?;
                }
            }
            let mut body = json!({
                "corpus": corpus_text,
                "seed": seed,
                "graphs": graphs.len(),
                "summary": result.summary,
                "counterexamples": counter,
            });
            if *reports {
                body["reports"] = to_value(&result.reports);
            }
            emit(cli, "campaign", body)?;
            Ok(if counter.is_empty() { 0 } else { 3 })
        }
        Command::Replay { graph, report } => {
            let g = load_graph(graph)?;
            let v: Value = serde_json::from_str(&read_text(report)?)?;
            let rep: CaseReport = serde_json::from_value(v.get("report").cloned().unwrap_or(v))?;
            let ok = replay_witness(&g, &rep)?;
            emit(cli, "replay", json!({ "reproduced": ok, "condition_id": rep.hypothesis.condition_id }))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Gen {
            family,
            r,
            h,
            n,
            p,
            d,
            count,
            seed,
            names,
            format,
        } => match family {
            Family::Petersen => gen_output(cli, &[petersen()], *format, json!({})),
            Family::Blowup => {
                let (g, origin) = clique_blowup(&petersen(), *h)?;
                gen_output(cli, &[g], *format, json!({ "h": h, "origin": origin }))
            }
            Family::Lowerbound => {
                let (g, spec) = lowerbound_family(*r, *h, n.unwrap_or(1))?;
                let matches = spec.matches(&g);
                gen_output(cli, &[g], *format, json!({ "metadata": spec, "counts_match": matches }))
            }
            Family::Gnp => {
                let n = n.ok_or_else(|| CliError::Usage("gnp needs --n".into()))?;
                let seed = require_seed(*seed, "gnp")?;
                let gs = gnp(n, parse_q(p)?, *count, seed)?;
                gen_output(cli, &gs, *format, json!({ "seed": seed }))
            }
            Family::Regular => {
                let n = n.ok_or_else(|| CliError::Usage("regular needs --n".into()))?;
                let seed = require_seed(*seed, "regular")?;
                let gs = random_regular(n, *d, *count, seed)?;
                gen_output(cli, &gs, *format, json!({ "seed": seed }))
            }
            Family::AllConnected => {
                let n = n.ok_or_else(|| CliError::Usage("all-connected needs --n".into()))?;
                gen_output(cli, &all_connected(n)?, *format, json!({}))
            }
            Family::Named => {
                let gs = names
                    .split(',')
                    .map(|s| named(s.trim()))
                    .collect::<Result<Vec<_>, _>>()?;
                gen_output(cli, &gs, *format, json!({}))
            }
        },
        Command::Registry => {
            emit(cli, "registry", json!({ "theorems": registry() }))?;
            Ok(0)
        }
    }
}
