//! Text and JSON rendering of reports.
//!
//! dB and dBm values are printed with two decimals, rise times in ps with
//! three, counts as integers. Output depends only on its input, so equal
//! reports render to identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::Error;
use crate::model::Violation;
use crate::plan::PlanReport;
use crate::power_budget::LossBreakdown;
use crate::signal_chain::{BerEstimate, PowerTrace};
use crate::standards::Verdict;
use crate::traffic::{TrafficForecast, TrafficInput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown output format {other:?}"))),
        }
    }
}

fn round_to(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    let r = (x * scale).round() / scale;
    // avoid printing -0.00
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn db(x: f64) -> f64 {
    round_to(x, 2)
}

fn ps(x: f64) -> f64 {
    round_to(x, 3)
}

fn km(x: f64) -> f64 {
    round_to(x, 3)
}

fn fmt_db(x: f64) -> String {
    format!("{:.2}", db(x))
}

fn fmt_ps(x: f64) -> String {
    format!("{:.3}", ps(x))
}

fn fmt_km(x: f64) -> String {
    format!("{:.3}", km(x))
}

fn sig3(x: f64) -> f64 {
    format!("{x:.2e}").parse().unwrap_or(x)
}

/// Column-aligned plain text table. The first column is left aligned, the
/// rest right aligned.
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new<const N: usize>(header: [&str; N]) -> Self {
        Table {
            header: header.iter().map(|h| (*h).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn render(&self, out: &mut String) {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String], out: &mut String| {
            let mut text = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    text.push_str("  ");
                }
                if i == 0 {
                    let _ = write!(text, "{cell:<w$}");
                } else {
                    let _ = write!(text, "{cell:>w$}");
                }
            }
            out.push_str(text.trim_end());
            out.push('\n');
        };
        line(&self.header, out);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        line(&rule, out);
        for row in &self.rows {
            line(row, out);
        }
    }
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn loss_json(b: &LossBreakdown) -> Value {
    json!({
        "connector_total": db(b.connector_total),
        "fiber_total": db(b.fiber_total),
        "splice_total": db(b.splice_total),
        "splitter_total": db(b.splitter_total),
        "margin": db(b.margin),
        "total": db(b.total),
    })
}

fn verdict_json(v: &Verdict) -> Value {
    let round = if v.unit == "ps" { ps } else { db };
    json!({
        "quantity": v.quantity,
        "unit": v.unit,
        "value": round(v.value),
        "threshold": round(v.threshold),
        "comparison": v.comparison,
        "pass": v.pass,
        "margin": round(v.margin),
    })
}

fn fmt_verdict_value(v: &Verdict, x: f64) -> String {
    if v.unit == "ps" {
        fmt_ps(x)
    } else {
        fmt_db(x)
    }
}

fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report values serialize");
    s.push('\n');
    s
}

pub fn render_plan(report: &PlanReport, format: Format) -> String {
    match format {
        Format::Json => to_pretty(&plan_json(report)),
        Format::Text => plan_text(report),
    }
}

fn plan_json(r: &PlanReport) -> Value {
    let spans: Vec<Value> = r
        .spans
        .iter()
        .map(|s| {
            json!({
                "span_id": s.span_id,
                "link": s.link,
                "length_km": km(s.length),
                "connectors": s.connectors,
                "splices": s.splices,
                "installed_gain": db(s.installed_gain),
                "loss": loss_json(&s.loss),
                "rise_time": {
                    "ceiling": ps(s.rise_time.ceiling),
                    "dispersion_component": ps(s.rise_time.dispersion_component),
                    "tx_component": ps(s.rise_time.tx_component),
                    "rx_component": ps(s.rise_time.rx_component),
                    "total": ps(s.rise_time.total),
                    "pass": s.rise_time.pass,
                },
            })
        })
        .collect();
    let a = &r.amplifier_plan;
    json!({
        "standard": r.standard,
        "path": r.path,
        "spans": spans,
        "path_loss": loss_json(&r.path_loss),
        "distribution_loss": db(r.distribution_loss),
        "tx_power": db(r.tx_power),
        "reference_sensitivity": db(r.reference_sensitivity),
        "min_path_exit_power": db(r.min_path_exit_power),
        "max_path_loss": db(r.max_path_loss),
        "amplifier_plan": {
            "gain_deficit": db(a.gain_deficit),
            "unit_gain": db(a.unit_gain),
            "edfa_count": a.edfa_count,
            "total_gain": db(a.total_gain),
        },
        "plan_amplifiers": r.plan_amplifiers,
        "installed_gain": db(r.installed_gain),
        "applied_gain": db(r.applied_gain),
        "path_exit_power": db(r.path_exit_power),
        "received_power": db(r.received_power),
        "verdicts": r.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        "pass": r.pass,
    })
}

fn plan_text(r: &PlanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Plan against {}", r.standard);
    let _ = writeln!(out, "Path: {}", r.path.join(" -> "));
    out.push('\n');

    out.push_str("Span losses (dB)\n");
    let mut t = Table::new([
        "span",
        "link",
        "km",
        "conn",
        "splices",
        "connector",
        "fiber",
        "splice",
        "splitter",
        "total",
    ]);
    for s in &r.spans {
        t.row(vec![
            s.span_id.clone(),
            s.link.clone(),
            fmt_km(s.length),
            s.connectors.to_string(),
            s.splices.to_string(),
            fmt_db(s.loss.connector_total),
            fmt_db(s.loss.fiber_total),
            fmt_db(s.loss.splice_total),
            fmt_db(s.loss.splitter_total),
            fmt_db(s.loss.total),
        ]);
    }
    t.render(&mut out);
    out.push('\n');

    out.push_str("Path loss (dB)\n");
    let p = &r.path_loss;
    let mut t = Table::new(["item", "dB"]);
    for (name, v) in [
        ("connectors", p.connector_total),
        ("fiber", p.fiber_total),
        ("splices", p.splice_total),
        ("splitters", p.splitter_total),
        ("system margin", p.margin),
        ("total", p.total),
    ] {
        t.row(vec![name.to_owned(), fmt_db(v)]);
    }
    t.render(&mut out);
    out.push('\n');

    out.push_str("Rise time\n");
    let mut t = Table::new([
        "link",
        "rise time (ps)",
        "splices",
        "ceiling (ps)",
        "verdict",
    ]);
    for s in &r.spans {
        t.row(vec![
            s.link.clone(),
            fmt_ps(s.rise_time.total),
            s.splices.to_string(),
            fmt_ps(s.rise_time.ceiling),
            pass_word(s.rise_time.pass).to_owned(),
        ]);
    }
    t.render(&mut out);
    out.push('\n');

    out.push_str("Power budget\n");
    let a = &r.amplifier_plan;
    let mut t = Table::new(["quantity", "value"]);
    for (name, v) in [
        ("transmit power (dBm)", fmt_db(r.tx_power)),
        (
            "reference sensitivity (dBm)",
            fmt_db(r.reference_sensitivity),
        ),
        ("distribution loss (dB)", fmt_db(r.distribution_loss)),
        (
            "minimum path exit power (dBm)",
            fmt_db(r.min_path_exit_power),
        ),
        ("maximum path loss (dB)", fmt_db(r.max_path_loss)),
        ("path loss (dB)", fmt_db(r.path_loss.total)),
        ("gain deficit (dB)", fmt_db(a.gain_deficit)),
        ("EDFAs required", a.edfa_count.to_string()),
        ("planned gain (dB)", fmt_db(a.total_gain)),
        ("installed gain (dB)", fmt_db(r.installed_gain)),
        (
            "amplifier planning",
            if r.plan_amplifiers { "on" } else { "off" }.to_owned(),
        ),
        ("applied gain (dB)", fmt_db(r.applied_gain)),
        ("path exit power (dBm)", fmt_db(r.path_exit_power)),
        ("received power (dBm)", fmt_db(r.received_power)),
    ] {
        t.row(vec![name.to_owned(), v]);
    }
    t.render(&mut out);
    out.push('\n');

    out.push_str("Verdicts\n");
    let mut t = Table::new(["check", "value", "threshold", "margin", "unit", "verdict"]);
    for v in &r.verdicts {
        t.row(vec![
            v.quantity.clone(),
            fmt_verdict_value(v, v.value),
            fmt_verdict_value(v, v.threshold),
            fmt_verdict_value(v, v.margin),
            v.unit.to_owned(),
            pass_word(v.pass).to_owned(),
        ]);
    }
    t.render(&mut out);
    out.push('\n');
    let _ = writeln!(out, "Overall: {}", if r.pass { "PASS" } else { "FAIL" });
    out
}

pub fn render_forecast(input: &TrafficInput, f: &TrafficForecast, format: Format) -> String {
    match format {
        Format::Json => to_pretty(&json!({
            "input": {
                "population": input.population,
                "cellular_penetration": input.cellular_penetration,
                "operator_share": input.operator_share,
                "lte_penetration": input.lte_penetration,
                "annual_growth": input.annual_growth,
                "horizon": input.horizon,
            },
            "mobile_subscribers": f.mobile_subscribers,
            "operator_subscribers": f.operator_subscribers,
            "lte_subscribers": f.lte_subscribers,
            "projected_subscribers": f.projected_subscribers,
        })),
        Format::Text => {
            let pct = |x: f64| format!("{}%", round_to(x * 100.0, 4));
            let mut t = Table::new(["stage", "factor", "subscribers"]);
            t.row(vec![
                "population".into(),
                String::new(),
                input.population.to_string(),
            ]);
            t.row(vec![
                "mobile subscribers".into(),
                pct(input.cellular_penetration),
                f.mobile_subscribers.to_string(),
            ]);
            t.row(vec![
                "operator subscribers".into(),
                pct(input.operator_share),
                f.operator_subscribers.to_string(),
            ]);
            t.row(vec![
                "LTE subscribers".into(),
                pct(input.lte_penetration),
                f.lte_subscribers.to_string(),
            ]);
            t.row(vec![
                format!("projected after {} y", input.horizon),
                format!("{}/y", pct(input.annual_growth)),
                f.projected_subscribers.to_string(),
            ]);
            let mut out = String::new();
            t.render(&mut out);
            out
        }
    }
}

pub fn render_trace(trace: &PowerTrace, ber: Option<&BerEstimate>, format: Format) -> String {
    match format {
        Format::Json => {
            let points: Vec<Value> = trace
                .points
                .iter()
                .map(|p| json!({ "label": p.label, "power": db(p.power) }))
                .collect();
            let mut doc = json!({ "points": points, "final_power": db(trace.final_power()) });
            if let Some(b) = ber {
                doc["ber"] = json!({ "q_factor": round_to(b.q_factor, 2), "ber": sig3(b.ber) });
            }
            to_pretty(&doc)
        }
        Format::Text => {
            let mut t = Table::new(["point", "power (dBm)"]);
            for p in &trace.points {
                t.row(vec![p.label.clone(), fmt_db(p.power)]);
            }
            let mut out = String::new();
            t.render(&mut out);
            if let Some(b) = ber {
                let _ = writeln!(out, "\nQ factor {:.2}, BER {:.2e}", b.q_factor, b.ber);
            }
            out
        }
    }
}

pub fn render_violations(violations: &[Violation], format: Format) -> String {
    match format {
        Format::Json => to_pretty(&json!({
            "valid": violations.is_empty(),
            "violations": violations,
        })),
        Format::Text if violations.is_empty() => "valid\n".to_owned(),
        Format::Text => {
            let mut t = Table::new(["element", "rule", "detail"]);
            for v in violations {
                t.row(vec![
                    v.element.clone(),
                    v.rule.to_string(),
                    v.detail.clone(),
                ]);
            }
            let mut out = String::new();
            t.render(&mut out);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::sleman;
    use crate::plan::{plan, PathSpec, PlanRequest};
    use crate::traffic::forecast_subscribers;

    fn sleman_report() -> PlanReport {
        plan(
            &sleman(),
            &PlanRequest {
                standard: "gpon-onu-endpoint".into(),
                path: PathSpec::Ring,
                plan_amplifiers: None,
            },
        )
        .unwrap()
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!(fmt_db(-0.001), "0.00");
        assert_eq!(fmt_db(34.965_000_1), "34.97");
        assert_eq!(fmt_ps(69.552_325), "69.552");
        assert_eq!(sig3(9.865_876e-10), 9.87e-10);
    }

    #[test]
    fn plan_text_has_table_columns() {
        let text = render_plan(&sleman_report(), Format::Text);
        assert!(text.contains("Seyegan-Tempel"));
        assert!(text.contains("69.552"));
        assert!(text.contains("34.97"));
        assert!(text.contains("-2.64"));
        assert!(text.ends_with("Overall: PASS\n"));
        assert!(!text.contains("-0.00"));
    }

    #[test]
    fn plan_json_round_trips() {
        let text = render_plan(&sleman_report(), Format::Json);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["received_power"], json!(-2.64));
        assert_eq!(v["amplifier_plan"]["edfa_count"], json!(2));
        assert_eq!(v["spans"].as_array().unwrap().len(), 7);
        assert_eq!(v["spans"][0]["rise_time"]["total"], json!(69.552));
        assert_eq!(v["pass"], json!(true));
    }

    #[test]
    fn forecast_table() {
        let doc = sleman();
        let input = doc.traffic.unwrap();
        let f = forecast_subscribers(&input).unwrap();
        let text = render_forecast(&input, &f, Format::Text);
        for n in ["850221", "1275331", "535639", "107128", "137378"] {
            assert!(text.contains(n), "{n} missing from\n{text}");
        }
        assert!(text.contains("150%"));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }
}
