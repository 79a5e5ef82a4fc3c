//! Plain, JSON and CSV renderings. Output depends only on the data, so the
//! same invocation always prints the same bytes; timings appear only when
//! asked for.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use qhall_core::enumerate::{render_parts, statistics, PartSequence, StatVector};
use qhall_core::qseries::{Exps, GradedSeries, Var};
use qhall_core::verify::{summary, CheckParams, CheckReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

fn exps_json(e: &Exps) -> Value {
    let mut m = Map::new();
    for (v, x) in e.nonzero() {
        m.insert(v.name().to_string(), json!(x));
    }
    Value::Object(m)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Variables that occur in some term, in canonical order.
fn used_vars(s: &GradedSeries) -> Vec<Var> {
    Var::ALL
        .into_iter()
        .filter(|&v| s.terms().any(|(e, _)| e.get(v) != 0))
        .collect()
}

pub fn series(label: &str, s: &GradedSeries, format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", s),
        Format::Json => {
            let terms: Vec<Value> = s
                .terms()
                .map(|(e, c)| json!({ "exps": exps_json(e), "coeff": c.to_string() }))
                .collect();
            pretty(&json!({
                "spec": label,
                "grading": s.grading().to_string(),
                "order": s.grading().bound(),
                "terms": terms,
            }))
        }
        Format::Csv => {
            let vars = used_vars(s);
            let mut out: Vec<String> = vars.iter().map(|v| v.name().to_string()).collect();
            out.push("coeff".into());
            let mut text = out.join(",") + "\n";
            for (e, c) in s.terms() {
                let mut row: Vec<String> = vars.iter().map(|&v| e.get(v).to_string()).collect();
                row.push(c.to_string());
                text += &(row.join(",") + "\n");
            }
            text
        }
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

fn opt_parts(x: &Option<Vec<u32>>) -> String {
    x.as_deref().map(render_parts).unwrap_or_default()
}

const MEMBER_COLUMNS: [&str; 12] = [
    "parts",
    "weight",
    "odd_index_sum",
    "even_index_sum",
    "positive_parts",
    "last_part",
    "odd_part_count",
    "ceil_image",
    "ceil_weight",
    "ceil_odd_count",
    "floor_image",
    "floor_odd_count",
];

fn member_row(seq: &PartSequence, st: &StatVector) -> Vec<String> {
    vec![
        render_parts(&seq.parts),
        st.weight.to_string(),
        st.odd_index_sum.to_string(),
        st.even_index_sum.to_string(),
        st.positive_parts.to_string(),
        st.last_part.to_string(),
        st.odd_part_count.to_string(),
        opt_parts(&st.ceil_image),
        opt(&st.ceil_weight),
        opt(&st.ceil_odd_count),
        opt_parts(&st.floor_image),
        opt(&st.floor_odd_count),
    ]
}

/// One row per member with its statistics; undefined images are blank.
pub fn members(family: &str, seqs: &[PartSequence], format: Format) -> String {
    let rows: Vec<Vec<String>> = seqs.iter().map(|s| member_row(s, &statistics(s))).collect();
    match format {
        Format::Plain => {
            let mut out = String::new();
            for r in &rows {
                let mut line = format!("{:<14} weight={} odd={} even={}", r[0], r[1], r[2], r[3]);
                if !r[7].is_empty() {
                    let _ = write!(line, " ceil={}", r[7]);
                }
                if !r[10].is_empty() {
                    let _ = write!(line, " floor={}", r[10]);
                }
                out += line.trim_end();
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .zip(seqs)
                .map(|(r, s)| {
                    let mut m = Map::new();
                    m.insert("parts".into(), json!(s.parts));
                    for (k, v) in MEMBER_COLUMNS.iter().zip(r).skip(1) {
                        let val = if v.is_empty() {
                            Value::Null
                        } else if let Ok(n) = v.parse::<u64>() {
                            json!(n)
                        } else {
                            json!(v)
                        };
                        m.insert((*k).into(), val);
                    }
                    Value::Object(m)
                })
                .collect();
            pretty(&json!({ "family": family, "members": items }))
        }
        Format::Csv => {
            let mut out = MEMBER_COLUMNS.join(",") + "\n";
            for r in rows {
                let quoted: Vec<String> = r
                    .into_iter()
                    .map(|c| if c.contains(',') { format!("\"{}\"", c) } else { c })
                    .collect();
                out += &(quoted.join(",") + "\n");
            }
            out
        }
    }
}

fn params_json(p: &CheckParams) -> Value {
    let mut m = Map::new();
    for (k, v) in [("n", p.n), ("k", p.k), ("i", p.i)] {
        if let Some(v) = v {
            m.insert(k.into(), json!(v));
        }
    }
    if let Some(mu) = &p.mu {
        m.insert("mu".into(), json!(mu));
    }
    if let Some(a) = &p.a {
        m.insert("a".into(), json!(a.to_string()));
    }
    if let Some(c) = &p.c {
        m.insert("c".into(), json!(c.to_string()));
    }
    Value::Object(m)
}

fn elapsed_ms(r: &CheckReport, timing: bool) -> Option<f64> {
    if timing {
        r.elapsed.map(|d| d.as_secs_f64() * 1e3)
    } else {
        None
    }
}

pub fn report_json(r: &CheckReport, timing: bool) -> Value {
    json!({
        "check_id": r.check_id.name(),
        "params": params_json(&r.params),
        "order": r.order,
        "status": r.status.to_string(),
        "witness": r.witness.as_ref().map(|w| json!({
            "exps": exps_json(&w.exps),
            "left": w.left.to_string(),
            "right": w.right.to_string(),
        })),
        "elapsed_ms": elapsed_ms(r, timing),
        "note": r.note,
    })
}

/// A table of reports. Plain output ends with the summary line.
pub fn reports(rs: &[CheckReport], format: Format, timing: bool) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for r in rs {
                match elapsed_ms(r, timing) {
                    Some(ms) => {
                        let _ = writeln!(out, "{} [{:.1} ms]", r, ms);
                    }
                    None => {
                        let _ = writeln!(out, "{}", r);
                    }
                }
            }
            out + &summary(rs) + "\n"
        }
        Format::Json => pretty(&Value::Array(rs.iter().map(|r| report_json(r, timing)).collect())),
        Format::Csv => {
            let mut out = String::from("check_id,params,order,status,witness,elapsed_ms,note\n");
            let quote = |s: String| format!("\"{}\"", s.replace('"', "\"\""));
            for r in rs {
                let row = [
                    r.check_id.name().to_string(),
                    quote(r.params.to_string()),
                    r.order.to_string(),
                    r.status.to_string(),
                    quote(opt(&r.witness)),
                    elapsed_ms(r, timing).map(|m| format!("{:.3}", m)).unwrap_or_default(),
                    quote(opt(&r.note)),
                ];
                out += &(row.join(",") + "\n");
            }
            out
        }
    }
}
