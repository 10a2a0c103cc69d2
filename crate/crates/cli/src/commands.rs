use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use cgrefine::geometry::{
    embedding_from_json, embedding_to_json, moment_curve_embedding, random_polyline,
    random_rectilinear, validate_embedding, GraphKind, SpatialEmbedding,
};
use cgrefine::theorems::{
    census_k6, census_k7, embedding_id, invariant_report, search_minimal_k7, verify_embedding,
    CensusReport, InvariantReport, Verification,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::{BatchArgs, FileArgs, Format, GenArgs, Graph, SearchArgs, Source};

fn kind(g: Graph) -> GraphKind {
    match g {
        Graph::K5 => GraphKind::Complete(5),
        Graph::K33 => GraphKind::K33,
        Graph::K6 => GraphKind::Complete(6),
        Graph::K7 => GraphKind::Complete(7),
        Graph::D4 => GraphKind::D4,
    }
}

pub fn generate(
    g: Graph,
    source: Source,
    seed: u64,
    span: i64,
) -> Result<SpatialEmbedding, Failure> {
    let e = match (source, kind(g)) {
        (Source::Moment, GraphKind::Complete(n)) => moment_curve_embedding(n)?,
        (Source::Moment, k) => {
            return Err(Failure::Usage(format!("no moment-curve embedding of {k}")))
        }
        (Source::Random, GraphKind::Complete(n)) => random_rectilinear(n, seed, span)?,
        (Source::Random, k @ GraphKind::K33) => random_polyline(k, seed, span, 0)?,
        (Source::Random, k) => random_polyline(k, seed, span, 1)?,
    };
    Ok(e)
}

fn summary(e: &SpatialEmbedding) -> String {
    let shape = if e.is_rectilinear() {
        "rectilinear"
    } else {
        "polyline"
    };
    format!(
        "{}: {} vertices, {} edges, {shape}",
        e.kind(),
        e.vertices().len(),
        e.edges().len()
    )
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values print");
    s.push('\n');
    s
}

fn load(path: &PathBuf) -> Result<SpatialEmbedding, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Io(format!("{}: not JSON: {e}", path.display())))?;
    let e = embedding_from_json(&v).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let check = validate_embedding(&e);
    if !check.ok() {
        return Err(Failure::Io(format!(
            "{}: not an embedding:\n  {}",
            path.display(),
            check.failures.join("\n  ")
        )));
    }
    Ok(e)
}

pub fn gen(a: &GenArgs) -> Result<(), Failure> {
    let e = generate(a.graph, a.source, a.seed, a.span)?;
    let check = validate_embedding(&e);
    if !check.ok() {
        return Err(Failure::Io(format!(
            "generated embedding is invalid: {}",
            check.failures.join("; ")
        )));
    }
    eprintln!("{}, valid", summary(&e));
    emit(&a.out, &pretty(&embedding_to_json(&e)))
}

fn verification_json(e: &SpatialEmbedding, v: &Verification, proj_seed: u64) -> Value {
    json!({
        "graph": e.kind().name(),
        "embedding": embedding_id(e),
        "proj_seed": proj_seed,
        "holds": v.holds(),
        "identities": v.identities.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "bounds": v.bounds.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
    })
}

fn verification_text(v: &Verification) -> String {
    let mut s = String::new();
    for r in &v.identities {
        let verdict = if r.holds { "holds" } else { "FAILS" };
        s.push_str(&format!(
            "{:<18} lhs {:>6}  rhs {:>6}  {verdict}\n",
            r.identity, r.lhs, r.rhs
        ));
    }
    for b in &v.bounds {
        for (name, x) in &b.checks {
            let verdict = if x.value >= x.at_least {
                "holds"
            } else {
                "FAILS"
            };
            s.push_str(&format!(
                "{:<18} {name} {} >= {}  {verdict}\n",
                b.identity, x.value, x.at_least
            ));
        }
    }
    s
}

pub fn verify(a: &FileArgs) -> Result<(), Failure> {
    let e = load(&a.file)?;
    let v = verify_embedding(&e, a.common.proj_seed)?;
    let text = match a.common.format {
        Format::Json => pretty(&verification_json(&e, &v, a.common.proj_seed)),
        Format::Text => verification_text(&v),
        Format::Csv => match &v.report {
            Some(r) => r.to_csv()?,
            None => {
                return Err(Failure::Usage(format!(
                    "CSV tables exist for K6 and K7, not {}",
                    e.kind()
                )))
            }
        },
    };
    emit(&a.common.out, &text)?;
    if !v.holds() {
        for r in v.identities.iter().filter(|r| !r.holds) {
            eprintln!("{}", r.to_json());
        }
        return Err(Failure::Violation(v.failures().join(", ")));
    }
    Ok(())
}

fn run_census(r: &InvariantReport) -> Result<CensusReport, Failure> {
    match r.order() {
        6 => Ok(census_k6(r)?),
        7 => Ok(census_k7(r)?),
        _ => Err(Failure::Usage(format!(
            "census covers K6 and K7, not {}",
            r.kind
        ))),
    }
}

fn census_text(c: &CensusReport) -> String {
    let mut s = format!("{} {}\n", c.graph, c.embedding);
    if let Some(case) = c.k6_case {
        s.push_str(&format!("case {case}\n"));
    }
    if let Some(sum) = c.sum_a2_gamma7 {
        s.push_str(&format!("sum a2 over 7-cycles {sum}\n"));
    }
    for (k, n) in &c.classes {
        s.push_str(&format!("{k} {n}\n"));
    }
    s
}

pub fn census(a: &FileArgs) -> Result<(), Failure> {
    let e = load(&a.file)?;
    if !matches!(e.kind(), GraphKind::Complete(6 | 7)) {
        return Err(Failure::Usage(format!(
            "census covers K6 and K7, not {}",
            e.kind()
        )));
    }
    if !e.is_rectilinear() {
        return Err(Failure::Usage(
            "census needs straight edges; the stick bounds do not apply to bent edges".into(),
        ));
    }
    let c = run_census(&invariant_report(&e, a.common.proj_seed)?)?;
    if let Some(case) = c.k6_case {
        eprintln!("K6 case {case}");
    }
    let text = match a.common.format {
        Format::Json => pretty(&c.to_json()),
        Format::Text => census_text(&c),
        Format::Csv => return Err(Failure::Usage("census output is JSON or text".into())),
    };
    emit(&a.common.out, &text)
}

#[derive(Default)]
struct Trial {
    seed: u64,
    identity_failures: Vec<String>,
    census_failure: Option<String>,
    error: Option<String>,
    k6_case: Option<String>,
    sum_a2_gamma7: Option<i64>,
}

fn trial(a: &BatchArgs, seed: u64) -> Trial {
    let mut t = Trial {
        seed,
        ..Default::default()
    };
    let e = match generate(a.graph, Source::Random, seed, a.span) {
        Ok(e) => e,
        Err(f) => {
            t.error = Some(f.to_string());
            return t;
        }
    };
    let v = match verify_embedding(&e, a.common.proj_seed) {
        Ok(v) => v,
        Err(err) => {
            t.error = Some(err.to_string());
            return t;
        }
    };
    t.identity_failures = v.failures();
    if let Some(r) = &v.report {
        match run_census(r) {
            Ok(c) => {
                t.k6_case = c.k6_case.map(|x| x.to_string());
                t.sum_a2_gamma7 = c.sum_a2_gamma7;
            }
            Err(f @ Failure::Violation(_)) => t.census_failure = Some(f.to_string()),
            Err(f) => t.error = Some(f.to_string()),
        }
    }
    t
}

pub fn batch(a: &BatchArgs) -> Result<(), Failure> {
    if a.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    if matches!(a.common.format, Format::Csv) {
        return Err(Failure::Usage("batch output is JSON or text".into()));
    }
    let seeds: Vec<u64> = (0..a.trials).map(|i| a.seed.wrapping_add(i)).collect();
    let trials: Vec<Trial> = seeds.par_iter().map(|&s| trial(a, s)).collect();

    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    let mut sums: BTreeMap<i64, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    let (mut violations, mut errors) = (0, 0);
    for t in &trials {
        if let Some(c) = &t.k6_case {
            *cases.entry(c.clone()).or_default() += 1;
        }
        if let Some(s) = t.sum_a2_gamma7 {
            *sums.entry(s).or_default() += 1;
        }
        for name in &t.identity_failures {
            failures.push(json!({"seed": t.seed, "kind": "identity", "detail": name}));
        }
        if let Some(m) = &t.census_failure {
            failures.push(json!({"seed": t.seed, "kind": "census", "detail": m}));
        }
        if let Some(m) = &t.error {
            failures.push(json!({"seed": t.seed, "kind": "error", "detail": m}));
        }
        if !t.identity_failures.is_empty() || t.census_failure.is_some() {
            violations += 1;
        } else if t.error.is_some() {
            errors += 1;
        }
    }
    let passed = trials.len() - violations - errors;
    let mut out = json!({
        "graph": kind(a.graph).name(),
        "seed": a.seed,
        "trials": a.trials,
        "span": a.span,
        "proj_seed": a.common.proj_seed,
        "passed": passed,
        "holds": violations == 0 && errors == 0,
        "failures": failures,
    });
    if a.graph == Graph::K6 {
        out["k6_cases"] = json!(cases);
    }
    if a.graph == Graph::K7 {
        out["sum_a2_gamma7"] = json!(sums
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect::<BTreeMap<_, _>>());
    }
    let text = match a.common.format {
        Format::Text => {
            let mut s = format!(
                "{} trials of {}: {passed} passed\n",
                a.trials,
                kind(a.graph)
            );
            for (c, n) in &cases {
                s.push_str(&format!("case {c}: {n}\n"));
            }
            for (k, n) in &sums {
                s.push_str(&format!("sum a2 over 7-cycles = {k}: {n}\n"));
            }
            for f in &failures {
                s.push_str(&format!(
                    "seed {} {}: {}\n",
                    f["seed"], f["kind"], f["detail"]
                ));
            }
            s
        }
        _ => pretty(&out),
    };
    emit(&a.common.out, &text)?;
    let first_bad = |pred: &dyn Fn(&Trial) -> bool| {
        trials
            .iter()
            .find(|t| pred(t))
            .map(|t| t.seed)
            .unwrap_or_default()
    };
    if violations > 0 {
        let seed = first_bad(&|t| !t.identity_failures.is_empty() || t.census_failure.is_some());
        return Err(Failure::Violation(format!(
            "{violations} of {} trials failed, first at seed {seed}",
            a.trials
        )));
    }
    if errors > 0 {
        let seed = first_bad(&|t| t.error.is_some());
        return Err(Failure::Io(format!(
            "{errors} of {} trials hit errors, first at seed {seed}",
            a.trials
        )));
    }
    Ok(())
}

pub fn search(a: &SearchArgs) -> Result<(), Failure> {
    if matches!(a.common.format, Format::Csv) {
        return Err(Failure::Usage("search output is JSON or text".into()));
    }
    let hit = search_minimal_k7(a.seed, a.budget, a.span)?;
    let mut out =
        json!({"found": hit.is_some(), "seed": a.seed, "budget": a.budget, "span": a.span});
    let mut text = String::new();
    match &hit {
        Some(h) => {
            let c = census_k7(&invariant_report(&h.embedding, a.common.proj_seed)?)?;
            eprintln!("found at trial {} (embedding seed {})", h.trial, h.seed);
            out["trial"] = json!(h.trial);
            out["embedding_seed"] = json!(h.seed);
            out["embedding"] = embedding_to_json(&h.embedding);
            out["census"] = c.to_json();
            text.push_str(&format!(
                "found at trial {} (embedding seed {})\n",
                h.trial, h.seed
            ));
            text.push_str(&census_text(&c));
        }
        None => {
            eprintln!("no embedding with sum 1 in {} trials", a.budget);
            text.push_str(&format!("not found in {} trials\n", a.budget));
        }
    }
    let text = if matches!(a.common.format, Format::Text) {
        text
    } else {
        pretty(&out)
    };
    emit(&a.common.out, &text)
}
