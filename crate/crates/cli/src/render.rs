//! Plain-text views of command output. Everything here reads the JSON value
//! the command emitted, so the table never says more than the JSON does.

use std::fmt::Write;

use serde_json::Value;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn spec_line(v: &Value) -> String {
    let t: Vec<String> = v["t"].as_array().map(|a| a.iter().map(s).collect()).unwrap_or_default();
    format!("A({})", t.join(", "))
}

fn interval(v: &Value) -> String {
    match (&v["lower"], &v["upper"]) {
        (lo, Value::Null) => format!("[{}, inf)", s(lo)),
        (lo, hi) if lo == hi => s(lo),
        (lo, hi) => format!("[{}, {}]", s(lo), s(hi)),
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let parts: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out += &line(width.iter().map(|w| "-".repeat(*w)).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

fn claim_table(rows: &Value) -> String {
    let rows: Vec<Vec<String>> = rows
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| vec![s(&r["id"]), s(&r["verdict"]), s(&r["predicted_value"]), s(&r["computed_value"])])
        .collect();
    table(&["claim", "verdict", "predicted", "computed"], &rows)
}

pub fn human(command: &str, v: &Value) -> String {
    let mut out = String::new();
    match command {
        "classify" => {
            let _ = writeln!(out, "{}: class {}", spec_line(&v["spec"]), s(&v["class"]));
            if let Some(p) = v["pivot"].as_u64() {
                let _ = writeln!(out, "pivot: x{p}");
            }
            if let Some(forms) = v["iso"].as_array() {
                let _ = writeln!(out, "change of variables (coefficients of y_i in x_1..x_n):");
                for (i, row) in forms.iter().enumerate() {
                    let cells: Vec<String> = row.as_array().into_iter().flatten().map(s).collect();
                    let _ = writeln!(out, "  y{} = [{}]", i + 1, cells.join(", "));
                }
            }
            for c in v["verification_log"].as_array().into_iter().flatten() {
                let mark = if c["holds"].as_bool() == Some(true) { "ok  " } else { "FAIL" };
                let _ = writeln!(out, "  {mark} {}", s(&c["identity"]));
            }
        }
        "cohomology" => {
            let r = &v["report"];
            let _ = writeln!(out, "{}: cohomology through degree {}", spec_line(&r["spec"]), s(&r["max_degree"]));
            let col = |k: &str, d: usize| s(&r[k][d]);
            let rows: Vec<Vec<String>> = (0..r["dims"].as_array().map_or(0, Vec::len))
                .map(|d| vec![d.to_string(), col("chain_dims", d), col("ranks", d), col("dims", d)])
                .collect();
            out += &table(&["degree", "dim A^d", "rank d^d", "dim H^d"], &rows);
            let p = &v["presentation"];
            let _ = writeln!(out, "\npresentation through degree {}:", s(&p["degree_bound"]));
            for g in p["generators"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "  {} (degree {}) = [{}]", s(&g["symbol"]), s(&g["degree"]), s(&g["representative"]));
            }
            let rels = p["relations"].as_array().cloned().unwrap_or_default();
            if rels.is_empty() {
                let _ = writeln!(out, "  no relations");
            }
            for (rel, deg) in rels.iter().zip(p["relation_degrees"].as_array().into_iter().flatten()) {
                let _ = writeln!(out, "  {} = 0 (degree {})", s(rel), s(deg));
            }
            let _ = writeln!(out, "relations verified: {}", s(&p["relations_verified"]));
        }
        "resolve" => {
            let _ = writeln!(
                out,
                "{}: {} resolution, truncation degree {}, complete {}",
                spec_line(&v["spec"]),
                s(&v["method"]),
                s(&v["truncation_degree"]),
                s(&v["complete"])
            );
            let rows: Vec<Vec<String>> = v["basis"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|b| {
                    let d: Vec<String> = b["differential"]
                        .as_array()
                        .into_iter()
                        .flatten()
                        .map(|t| format!("({}) {}", s(&t[1]), s(&t[0])))
                        .collect();
                    vec![s(&b["symbol"]), s(&b["degree"]), s(&b["level"]), if d.is_empty() { "0".into() } else { d.join(" + ") }]
                })
                .collect();
            out += &table(&["element", "degree", "level", "differential"], &rows);
            let _ = writeln!(out, "level sizes: {}", s(&v["level_sizes"]));
            let _ = writeln!(out, "DG free class: {}", s(&v["dg_free_class"]));
            let c = &v["checks"];
            for k in ["square_zero", "semifree", "minimal", "quasi_isomorphism"] {
                let _ = writeln!(out, "  {k}: {}", s(&c[k]));
            }
        }
        "invariants" => {
            let _ = writeln!(out, "{}: class {}", spec_line(&v["spec"]), s(&v["classification"]["class"]));
            let _ = writeln!(out, "H(A) generators: {}", s(&v["ring"]["symbols"]));
            let _ = writeln!(out, "Groebner basis: {}", s(&v["ring"]["groebner"]));
            let _ = writeln!(out, "Krull dimension of H(A): {}", s(&v["krull_dimension_h"]));
            let _ = writeln!(out, "depth of H(A): {}", interval(&v["depth"]));
            let _ = writeln!(out, "Betti numbers of k: {} (terminated {})", s(&v["betti"]["betti"]), s(&v["betti"]["terminated"]));
            let rows = vec![
                vec!["l.Gl.dim A".into(), interval(&v["gldim"]["left"]), s(&v["gldim"]["predicted"])],
                vec!["r.Gl.dim A".into(), interval(&v["gldim"]["right"]), s(&v["gldim"]["predicted"])],
                vec!["gl.dim H(A)".into(), interval(&v["gldim"]["cohomology_ring"]), "-".into()],
                vec!["DGdim A".into(), s(&v["dgdim"]["value"]), s(&v["dgdim"]["predicted"])],
                vec!["cl_A k".into(), interval(&v["cl_k"]), "-".into()],
                vec!["level k".into(), interval(&v["level_k"]), "-".into()],
                vec!["gh.len k".into(), interval(&v["ghlen_k"]), "-".into()],
                vec!["Rouq.dim".into(), interval(&v["rouqdim"]), "-".into()],
            ];
            out += "\n";
            out += &table(&["invariant", "computed", "predicted"], &rows);
            out += "\n";
            out += &claim_table(&v["verdicts"]);
            for n in v["notes"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "note: {}", s(n));
            }
        }
        "verify" => {
            let _ = writeln!(out, "{}", spec_line(&v["spec"]));
            out += &claim_table(&v["rows"]);
        }
        "sweep" => {
            let _ = writeln!(out, "{} specs, {} with structural failures", s(&v["count"]), s(&v["structural_failures"]));
            let verdicts = ["PASS", "FAIL", "INCONCLUSIVE", "NOT_APPLICABLE"];
            let rows: Vec<Vec<String>> = v["totals"]
                .as_object()
                .into_iter()
                .flatten()
                .map(|(id, counts)| {
                    let mut r = vec![id.clone()];
                    r.extend(verdicts.iter().map(|k| counts[*k].as_u64().unwrap_or(0).to_string()));
                    r
                })
                .collect();
            let mut header = vec!["claim"];
            header.extend(verdicts);
            out += &table(&header, &rows);
        }
        _ => unreachable!(),
    }
    out
}
