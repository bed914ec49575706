use std::collections::BTreeMap;
use std::fs;

use dgpoly::commalg::minimal_free_resolution_of_k;
use dgpoly::report::CLAIM_IDS;
use dgpoly::{
    assemble_report, buchberger, classify, eilenberg_moore, extract_presentation, killing_cycles_resolution, AlgebraSpec,
    BoundsConfig, Cohomology, Verdict, SCHEMA_VERSION,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::{render, Command, Common, MethodArg};

pub enum Failure {
    /// Malformed input: exit status 2.
    Input(String),
    /// A computation could not be completed within its bounds: exit status 3.
    Compute(String),
}

#[derive(Debug, Clone, Serialize)]
struct RunConfig {
    spec_source: &'static str,
    max_degree: u32,
    presentation_bound: u32,
    internal_degree_bound: u32,
    steps: Option<usize>,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    claims: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    /// Worker threads for sweep; does not affect the output.
    #[serde(skip)]
    jobs: usize,
}

impl RunConfig {
    fn bounds(&self) -> BoundsConfig {
        BoundsConfig {
            max_degree: self.max_degree,
            presentation_bound: self.presentation_bound,
            internal_degree_bound: self.internal_degree_bound,
            steps: self.steps,
            depth_search_bound: self.internal_degree_bound,
            seed: self.seed,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn read_spec(c: &Common) -> Result<(AlgebraSpec, &'static str), Failure> {
    let (spec, source) = match (&c.t, &c.spec) {
        (Some(_), Some(_)) => return Err(input("give either --t or --spec, not both")),
        (Some(t), None) => (AlgebraSpec::parse_t(t).map_err(input)?, "inline"),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
            (serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))?, "file")
        }
        (None, None) => return Err(input("a spec is required: --t \"a,b,..\" or --spec FILE")),
    };
    if let Some(n) = c.n {
        if n != spec.n() {
            return Err(input(format!("--n {n} does not match the {} entries of t", spec.n())));
        }
    }
    Ok((spec, source))
}

fn run_config(c: &Common, spec_source: &'static str) -> Result<RunConfig, Failure> {
    if c.max_degree < 1 || c.internal_degree_bound < 1 || c.steps == Some(0) {
        return Err(input("all bounds must be at least 1"));
    }
    if c.presentation_bound < 2 {
        return Err(input("--presentation-bound must be at least 2"));
    }
    Ok(RunConfig {
        spec_source,
        max_degree: c.max_degree,
        presentation_bound: c.presentation_bound,
        internal_degree_bound: c.internal_degree_bound,
        steps: c.steps,
        seed: c.seed,
        method: None,
        claims: None,
        count: None,
        n: None,
        jobs: 1,
    })
}

fn parse_claims(raw: &str) -> Result<Vec<String>, Failure> {
    if raw.trim() == "all" {
        return Ok(CLAIM_IDS.iter().map(|s| s.to_string()).collect());
    }
    let ids: Vec<String> = raw.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    if ids.is_empty() {
        return Err(input("--claims is empty"));
    }
    for id in &ids {
        if !CLAIM_IDS.contains(&id.as_str()) {
            return Err(input(format!("unknown claim id {id}; known: {}", CLAIM_IDS.join(", "))));
        }
    }
    Ok(ids)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn envelope(command: &str, run: &RunConfig, result: Value) -> String {
    let mut out = serde_json::Map::new();
    out.insert("command".into(), json!(command));
    out.insert("run".into(), to_value(run));
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    match result {
        Value::Object(fields) => {
            for (k, v) in fields {
                out.entry(k).or_insert(v);
            }
        }
        other => {
            out.insert("result".into(), other);
        }
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(out)).expect("json");
    text.push('\n');
    text
}

fn compute(command: &str, spec: Option<&AlgebraSpec>, run: &RunConfig) -> Result<Value, Failure> {
    let bounds = run.bounds();
    let value = match command {
        "classify" => to_value(&classify(spec.unwrap())),
        "cohomology" => {
            let coh = Cohomology::compute(spec.unwrap(), run.max_degree.max(run.presentation_bound));
            let pres = extract_presentation(&coh, run.presentation_bound).map_err(|e| Failure::Compute(e.to_string()))?;
            json!({ "report": coh.report(), "presentation": pres })
        }
        "resolve" => {
            let spec = spec.unwrap();
            match run.method {
                Some("em") => {
                    let coh = Cohomology::compute(spec, run.max_degree.max(run.presentation_bound));
                    let pres = extract_presentation(&coh, run.presentation_bound).map_err(|e| Failure::Compute(e.to_string()))?;
                    let ring = buchberger(&pres);
                    let steps = run.steps.unwrap_or(ring.ngens() + 2);
                    let res = minimal_free_resolution_of_k(&ring, steps, run.internal_degree_bound)
                        .map_err(|e| Failure::Compute(e.to_string()))?;
                    let f = eilenberg_moore(&coh, &pres, &res, run.max_degree).map_err(|e| Failure::Compute(e.to_string()))?;
                    let mut v = to_value(&f.certificate());
                    v["betti"] = to_value(&res.table);
                    v
                }
                _ => to_value(&killing_cycles_resolution(spec, run.max_degree).certificate()),
            }
        }
        "invariants" => to_value(&assemble_report(spec.unwrap(), &bounds)),
        "verify" => {
            let report = assemble_report(spec.unwrap(), &bounds);
            let ids = run.claims.as_ref().unwrap();
            let rows: Vec<_> = report.verdicts.iter().filter(|r| ids.contains(&r.id)).collect();
            let any_fail = rows.iter().any(|r| r.verdict == Verdict::Fail);
            json!({ "spec": report.spec, "rows": rows, "any_fail": any_fail })
        }
        "sweep" => sweep(run)?,
        _ => unreachable!(),
    };
    Ok(value)
}

fn sweep(run: &RunConfig) -> Result<Value, Failure> {
    let count = run.count.unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(run.seed);
    let specs: Vec<AlgebraSpec> = (0..count)
        .map(|_| {
            let n = run.n.unwrap_or_else(|| rng.gen_range(1..=3));
            let t: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            AlgebraSpec::from_ints(&t)
        })
        .collect();
    let bounds = run.bounds();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(run.jobs.max(1))
        .build()
        .map_err(|e| Failure::Compute(e.to_string()))?;
    let reports: Vec<_> = pool.install(|| specs.par_iter().map(|s| assemble_report(s, &bounds)).collect());
    let mut totals: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let mut entries = Vec::new();
    for r in &reports {
        let mut verdicts = BTreeMap::new();
        for row in &r.verdicts {
            *totals.entry(row.id.clone()).or_default().entry(row.verdict.to_string()).or_insert(0) += 1;
            verdicts.insert(row.id.clone(), row.verdict.to_string());
        }
        entries.push(json!({
            "spec": r.spec,
            "structural_ok": r.structural.all(),
            "verdicts": verdicts,
        }));
    }
    let structural_failures = reports.iter().filter(|r| !r.structural.all()).count();
    Ok(json!({ "count": count, "specs": entries, "totals": totals, "structural_failures": structural_failures }))
}

pub fn run(command: Command) -> Result<u8, Failure> {
    let (name, common, mut run, spec) = match &command {
        Command::Sweep { common, count, jobs } => {
            let mut run = run_config(common, "random")?;
            run.jobs = *jobs;
            run.count = Some(*count);
            run.n = common.n;
            if common.t.is_some() || common.spec.is_some() {
                return Err(input("sweep draws its own specs; drop --t and --spec"));
            }
            if common.n == Some(0) {
                return Err(input("--n must be at least 1"));
            }
            ("sweep", common, run, None)
        }
        other => {
            let (name, common) = match other {
                Command::Classify(c) => ("classify", c),
                Command::Cohomology(c) => ("cohomology", c),
                Command::Resolve { common, .. } => ("resolve", common),
                Command::Invariants(c) => ("invariants", c),
                Command::Verify { common, .. } => ("verify", common),
                Command::Sweep { .. } => unreachable!(),
            };
            let (spec, source) = read_spec(common)?;
            (name, common, run_config(common, source)?, Some(spec))
        }
    };
    match &command {
        Command::Resolve { method, .. } => {
            run.method = Some(match method {
                MethodArg::Em => "em",
                MethodArg::Killing => "killing",
            })
        }
        Command::Verify { claims, .. } => run.claims = Some(parse_claims(claims)?),
        _ => {}
    }

    let material = json!({ "schema_version": SCHEMA_VERSION, "command": name, "spec": spec, "run": run });
    let key = crate::cache::key(&material);
    let cache = match &common.cache_dir {
        Some(dir) => Some(Cache::open(dir).map_err(|e| input(format!("cache dir {}: {e}", dir.display())))?),
        None => None,
    };
    let cached = cache.as_ref().and_then(|c| c.load(&key, name));
    let text = match cached {
        Some(text) => text,
        None => {
            let text = envelope(name, &run, compute(name, spec.as_ref(), &run)?);
            if let Some(c) = &cache {
                if let Err(e) = c.store(&key, &text, name) {
                    eprintln!("warning: could not write cache entry {key}: {e}");
                }
            }
            text
        }
    };
    let value: Value = serde_json::from_str(&text).expect("emitted JSON parses");
    if common.json {
        print!("{text}");
    } else {
        print!("{}", render::human(name, &value));
    }
    let fail = name == "verify" && value["any_fail"].as_bool().unwrap_or(false);
    Ok(u8::from(fail))
}
