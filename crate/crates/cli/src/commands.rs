use std::fs;

use anyhow::{bail, Context, Result};
use ccdeg_core::grassmann::{
    self, binomial, cc_solution_count_direct, cc_solution_count_on, check_families, map_kernel, Chart, FamilyMember,
    GraphIdeal, GraphRing, Hamiltonian,
};
use ccdeg_core::groebner::{self, io, Budget};
use ccdeg_core::poset::{self, SimplicialComplex};
use ccdeg_core::toric::{self, Route, ToricIdeal};
use ccdeg_core::{polytope, Error, MonomialOrder, Polynomial, Ring};
use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::args::*;
use crate::cache::Cache;

pub struct Ctx {
    pub cache: Cache,
    pub budget: Budget,
    pub seed: u64,
}

/// Command payload; `failed` marks a negative verification outcome,
/// `truncated` a partial payload cut short by the budget.
pub struct Outcome {
    pub results: Value,
    pub failed: bool,
    pub truncated: bool,
}

impl Outcome {
    fn ok(results: Value) -> Self {
        Outcome { results, failed: false, truncated: false }
    }
}

/// Budget errors become `Ok(None)` after marking `r` as partial.
fn partial<T>(r: &mut Value, x: Result<T>) -> Result<Option<T>> {
    match x {
        Ok(v) => Ok(Some(v)),
        Err(e) => match e.downcast_ref::<Error>() {
            Some(Error::Budget(msg)) => {
                r["truncated"] = json!(true);
                r["error"] = json!(format!("budget exceeded: {msg}"));
                Ok(None)
            }
            _ => Err(e),
        },
    }
}

fn invalid(msg: impl Into<String>) -> anyhow::Error {
    Error::Invalid(msg.into()).into()
}

/// Small integers as JSON numbers, the rest as decimal strings.
fn num(b: &BigInt) -> Value {
    match u64::try_from(b) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    }
}

fn chart_of(c: ChartArg) -> Chart {
    match c {
        ChartArg::Intro => Chart::Intro,
        ChartArg::Permuted2n => Chart::Permuted2n,
    }
}

fn graph(ctx: &mut Ctx, d: usize, n: usize, chart: Chart) -> Result<GraphIdeal> {
    if d < 2 || n < d + 2 {
        return Err(invalid(format!("need 2 <= d <= n-2, got d={d}, n={n}")));
    }
    let g = GraphRing::new(d, n, chart)?;
    let what = format!("graph ideal d={d} n={n} chart={}: kernel of v - image(v) by elimination", chart.name());
    let budget = ctx.budget.clone();
    let basis = ctx.cache.basis(&what, &g.ring, &g.canonical_order(), || {
        map_kernel(&g.ring, &g.ambient, &g.images(), &budget)
    })?;
    Ok(GraphIdeal { graph: g, basis })
}

fn toric_ideal(ctx: &mut Ctx, d: usize, n: usize, route: Route) -> Result<ToricIdeal> {
    if d < 2 || n < d + 2 {
        return Err(invalid(format!("need 2 <= d <= n-2, got d={d}, n={n}")));
    }
    let (graph, map) = toric::diagonal_map(d, n)?;
    let what = format!("toric ideal d={d} n={n} chart={} route={route:?}", graph.chart.name());
    let budget = ctx.budget.clone();
    let order = MonomialOrder::grevlex(graph.len());
    let basis = ctx.cache.basis(&what, &graph.ring, &order, || toric::toric_ideal_of(&map, route, &budget))?;
    Ok(ToricIdeal { graph, map, basis })
}

fn complex_of(g: &GraphIdeal) -> Result<SimplicialComplex> {
    let names: Vec<String> = (0..g.graph.len()).map(|v| g.graph.name(v).to_string()).collect();
    Ok(poset::stanley_reisner(&groebner::initial_ideal(&g.basis), &names)?)
}

fn failing_pairs(failures: &[(usize, usize, Polynomial)], gens: &[Polynomial], ring: &Ring, o: &MonomialOrder) -> Value {
    failures
        .iter()
        .map(|(i, j, r)| {
            json!({
                "pair": [i, j],
                "first": gens[*i].to_text_with(ring, o),
                "second": gens[*j].to_text_with(ring, o),
                "remainder": r.to_text_with(ring, o),
            })
        })
        .collect()
}

pub fn degree(ctx: &mut Ctx, a: &DegreeArgs) -> Result<Outcome> {
    if a.method.is_empty() {
        return Err(invalid("no method given"));
    }
    let route = match a.route {
        RouteArg::Elimination => Route::Elimination,
        RouteArg::Lattice => Route::Lattice,
    };
    let mut methods = serde_json::Map::new();
    let mut values: Vec<BigInt> = Vec::new();
    let mut cut = json!({});
    for &m in &a.method {
        let run = |ctx: &mut Ctx| -> Result<(&str, BigInt)> {
            Ok(match m {
            MethodArg::Chains => {
                if a.d != 2 {
                    return Err(invalid("the chains method requires d = 2"));
                }
                ("chains", poset::count_maximal_chains(&poset::p2n_poset(a.n)?))
            }
            MethodArg::Groebner => {
                let g = graph(ctx, a.d, a.n, Chart::canonical(a.d))?;
                ("groebner", groebner::initial_ideal(&g.basis).dim_degree().1)
            }
            MethodArg::Toric => {
                let t = toric_ideal(ctx, a.d, a.n, route)?;
                ("toric", groebner::initial_ideal(&t.basis).dim_degree().1)
            }
            })
        };
        let Some((name, v)) = partial(&mut cut, run(ctx))? else {
            break;
        };
        methods.insert(name.into(), num(&v));
        values.push(v);
    }
    if cut.get("truncated").is_some() {
        cut["d"] = json!(a.d);
        cut["n"] = json!(a.n);
        cut["methods"] = Value::Object(methods);
        return Ok(Outcome { results: cut, failed: false, truncated: true });
    }
    let agreement = values.windows(2).all(|w| w[0] == w[1]);
    let mut results = json!({
        "d": a.d,
        "n": a.n,
        "methods": methods,
        "agreement": agreement,
        "degree": if agreement { num(&values[0]) } else { Value::Null },
    });
    if !agreement {
        results["diff"] = Value::Object(methods);
    }
    Ok(Outcome { results, failed: !agreement, truncated: false })
}

pub fn verify(ctx: &mut Ctx, a: &VerifyArgs) -> Result<Outcome> {
    if let Some(path) = &a.file {
        return verify_file(path, a.order.as_deref());
    }
    let n = a.n.ok_or_else(|| invalid("--n is required"))?;
    if a.khovanskii {
        let g = graph(ctx, a.d, n, Chart::canonical(a.d))?;
        let t = toric_ideal(ctx, a.d, n, Route::Elimination)?;
        let report = toric::khovanskii_report(&g.basis, &t);
        let passed = report.passed();
        let mut results = serde_json::to_value(&report)?;
        results["passed"] = json!(passed);
        results["lifts_missing"] = json!(report.lifts.iter().filter(|l| !l.in_graph || !l.initial_form_ok).count());
        return Ok(Outcome { results, failed: !passed, truncated: false });
    }
    let Some(family) = a.family else {
        return Err(invalid("give --family, --khovanskii or --file"));
    };
    if a.d != 2 {
        return Err(invalid("the generator families are defined for d = 2"));
    }
    let (g, members): (GraphRing, Vec<FamilyMember>) = match family {
        FamilyArg::Lemma31 => grassmann::lemma31_generators(n)?,
        FamilyArg::Prop35 => grassmann::prop35_generators(n)?,
    };
    let reference = if a.reference {
        Some(match family {
            FamilyArg::Lemma31 => graph(ctx, 2, n, Chart::Permuted2n)?.basis,
            FamilyArg::Prop35 => toric_ideal(ctx, 2, n, Route::Elimination)?.basis,
        })
    } else {
        None
    };
    let check = check_families(&g, &members, reference.as_ref());
    let order = g.canonical_order();
    let gens: Vec<Polynomial> = members.iter().map(|m| m.poly.clone()).collect();
    let results = json!({
        "family": family,
        "n": n,
        "members": members.len(),
        "per_family": check.per_family,
        "is_groebner": check.is_groebner,
        "failing_pairs": failing_pairs(&check.failures, &gens, &g.ring, &order),
        "wrong_leading": check.wrong_leading.iter().map(|&i| gens[i].to_text_with(&g.ring, &order)).collect::<Vec<_>>(),
        "matches_reference": check.matches_reference,
        "passed": check.passed(),
    });
    Ok(Outcome { results, failed: !check.passed(), truncated: false })
}

fn verify_file(path: &std::path::Path, order: Option<&str>) -> Result<Outcome> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let has_order = text.lines().any(|l| l.trim_start().starts_with("order:"));
    let (ring, gens, order) = if has_order {
        if order.is_some() {
            return Err(invalid("the file already declares an order"));
        }
        let gb = io::read_basis(&text)?;
        (gb.ring, gb.elements, gb.order)
    } else {
        let ideal = io::read_ideal(&text)?;
        let o = match order {
            Some(s) => MonomialOrder::parse(s, &ideal.ring)?,
            None => MonomialOrder::grevlex(ideal.ring.len()),
        };
        (ideal.ring, ideal.generators, o)
    };
    let check = groebner::is_groebner(&gens, &order);
    let results = json!({
        "file": path.display().to_string(),
        "generators": gens.len(),
        "order": order.display(&ring).to_string(),
        "pairs_checked": check.pairs_checked,
        "is_groebner": check.is_groebner,
        "failing_pairs": failing_pairs(&check.failures, &gens, &ring, &order),
        "passed": check.is_groebner,
    });
    Ok(Outcome { results, failed: !check.is_groebner, truncated: false })
}

pub fn polytope(ctx: &mut Ctx, a: &PolytopeArgs) -> Result<Outcome> {
    let (p, chart) = match a.family {
        PolytopeFamily::Cgt => {
            if a.d != 2 {
                return Err(invalid("CGT is defined for d = 2"));
            }
            (polytope::cgt(a.n)?, Chart::Permuted2n)
        }
        PolytopeFamily::Cfflv => (polytope::cfflv(a.d, a.n)?, Chart::Intro),
    };
    let mut r = json!({
        "family": a.family,
        "d": a.d,
        "n": a.n,
        "vertex_count": p.len(),
        "dim": p.dim,
        "ambient_dim": p.ambient_dim,
    });
    if a.vertices {
        r["vertices"] = p
            .labels
            .iter()
            .zip(&p.vertices)
            .map(|(l, v)| json!({ "label": l, "coordinates": v }))
            .collect();
    }
    if a.volume || a.ehrhart {
        let Some(g) = partial(&mut r, graph(ctx, a.d, a.n, chart))? else {
            return Ok(Outcome { results: r, failed: false, truncated: true });
        };
        let tri = complex_of(&g)?;
        let vol = polytope::normalized_volume(&p, &tri)?;
        r["volume"] = num(&vol);
        r["triangulation_facets"] = json!(tri.facets.len());
        if a.ehrhart {
            let l = poset::ehrhart_from_unimodular(&tri);
            r["ehrhart"] = json!({
                "polynomial": l.factored().unwrap_or_else(|| l.to_string()),
                "expanded": l.to_string(),
                "coefficients": l.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
        }
    }
    if a.fvector {
        let fl = polytope::face_lattice(&p)?;
        r["f_vector"] = json!(fl.f_vector);
        r["facets"] = json!(fl.facets.len());
    }
    if a.points {
        let pts = polytope::lattice_points(&p, a.t, a.max_box).map_err(anyhow::Error::from);
        let Some(c) = partial(&mut r, pts)? else {
            return Ok(Outcome { results: r, failed: false, truncated: true });
        };
        r["lattice_points"] = json!({ "t": a.t, "count": c });
    }
    Ok(Outcome::ok(r))
}

pub fn posets(a: &PosetArgs) -> Result<Outcome> {
    let (p, name) = match a.kind {
        PosetKind::Young => (poset::young_poset(a.n)?, format!("Y_{}", a.n)),
        PosetKind::P2n => (poset::p2n_poset(a.n)?, format!("P_2_{}", a.n)),
        PosetKind::Pbw => (poset::pbw_poset(a.d, a.n)?, format!("PBW_{}_{}", a.d, a.n)),
    };
    let labels = |v: Vec<usize>| v.into_iter().map(|i| p.label(i).to_string()).collect::<Vec<_>>();
    let mut r = json!({
        "kind": a.kind,
        "n": a.n,
        "elements": p.len(),
        "covers": p.covers().len(),
        "maximal_chains": num(&poset::count_maximal_chains(&p)),
        "minimal": labels(p.minimal_elements()),
        "maximal": labels(p.maximal_elements()),
    });
    if a.kind == PosetKind::Pbw {
        r["d"] = json!(a.d);
    }
    if a.dot {
        r["dot"] = json!(p.to_dot(&name));
    }
    Ok(Outcome::ok(r))
}

pub fn solve_count(ctx: &mut Ctx, a: &SolveArgs) -> Result<Outcome> {
    if a.trials == 0 {
        return Err(invalid("--trials must be positive"));
    }
    let g = graph(ctx, a.d, a.n, Chart::Intro)?;
    let dim = g.graph.psi_vars().len();
    let hams: Vec<(Option<u64>, Hamiltonian)> = match &a.hamiltonian {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let h = Hamiltonian::parse(&text)?;
            if h.dim() != dim {
                return Err(invalid(format!("Hamiltonian must be {dim}x{dim}, got {}", h.dim())));
            }
            vec![(None, h)]
        }
        None => (0..a.trials).map(|i| ctx.seed + i).map(|s| (Some(s), Hamiltonian::random(dim, s))).collect(),
    };
    let mut trials = Vec::new();
    let mut counts = Vec::new();
    for (seed, h) in &hams {
        let s = seed.unwrap_or(ctx.seed);
        let c = if a.direct {
            cc_solution_count_direct(&g, h, s, &ctx.budget)?
        } else {
            cc_solution_count_on(&g, h, s, &ctx.budget)?
        };
        log::info!("seed {s}: {c} solutions");
        trials.push(json!({ "seed": seed, "count": num(&c) }));
        counts.push(c);
    }
    let mut r = json!({
        "d": a.d,
        "n": a.n,
        "method": if a.direct { "direct" } else { "chart" },
        "trials": trials,
        "all_equal": counts.windows(2).all(|w| w[0] == w[1]),
    });
    if a.d == 2 {
        let deg = poset::count_maximal_chains(&poset::p2n_poset(a.n)?);
        r["degree"] = num(&deg);
        r["matches_degree"] = json!(counts.iter().all(|c| *c == deg));
    }
    Ok(Outcome::ok(r))
}

/// Text of the requested artifact, plus a short name for the summary.
pub fn export_text(ctx: &mut Ctx, a: &ExportArgs) -> Result<String> {
    let chart = a.chart.map(chart_of).unwrap_or(Chart::canonical(a.d));
    let family = |f: fn(usize) -> ccdeg_core::Result<(GraphRing, Vec<FamilyMember>)>| -> Result<String> {
        if a.d != 2 {
            bail!(invalid("the generator families are defined for d = 2"));
        }
        let (g, members) = f(a.n)?;
        let o = g.canonical_order();
        let mut s = format!("ring: {}\norder: {}\n", g.ring.names().join(","), o.display(&g.ring));
        for m in &members {
            s.push_str(&m.poly.to_text_with(&g.ring, &o));
            s.push('\n');
        }
        Ok(s)
    };
    Ok(match a.what {
        ExportWhat::Graph => io::write_basis(&graph(ctx, a.d, a.n, chart)?.basis),
        ExportWhat::Toric => io::write_basis(&toric_ideal(ctx, a.d, a.n, Route::Elimination)?.basis),
        ExportWhat::Lemma31 => family(grassmann::lemma31_generators)?,
        ExportWhat::Prop35 => family(grassmann::prop35_generators)?,
        ExportWhat::Hamiltonian => {
            if a.d < 1 || a.d >= a.n {
                return Err(invalid("need 1 <= d < n"));
            }
            Hamiltonian::random(binomial(a.n as u64, a.d as u64) as usize, ctx.seed).to_text()
        }
        ExportWhat::Cgt => {
            if a.d != 2 {
                return Err(invalid("CGT is defined for d = 2"));
            }
            polytope::cgt(a.n)?.to_text()
        }
        ExportWhat::Cfflv => polytope::cfflv(a.d, a.n)?.to_text(),
        ExportWhat::Complex => complex_of(&graph(ctx, a.d, a.n, chart)?)?.to_text(),
        ExportWhat::Poset => {
            if a.d == 2 {
                poset::p2n_poset(a.n)?.to_dot(&format!("P_2_{}", a.n))
            } else {
                poset::pbw_poset(a.d, a.n)?.to_dot(&format!("PBW_{}_{}", a.d, a.n))
            }
        }
    })
}

pub fn export_summary(a: &ExportArgs, text: &str) -> Result<Outcome> {
    let path = a.out.as_ref().expect("summary only with --out");
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    let digest: String = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
    Ok(Outcome::ok(json!({
        "what": a.what,
        "path": path.display().to_string(),
        "bytes": text.len(),
        "lines": text.lines().count(),
        "sha256": digest,
    })))
}
