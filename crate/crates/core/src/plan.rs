//! End-to-end planning of one path through a network.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;

use crate::document::NetworkDocument;
use crate::error::{Error, Result};
use crate::model::{validate_network, Network, Span, Topology};
use crate::power_budget::{
    amplifier_requirement, max_allowed_loss, minimum_input_power, path_loss, received_power,
    span_physical_loss, AmplifierPlan, LossBreakdown,
};
use crate::risetime::{span_risetime_report, RiseTimeReport};
use crate::signal_chain::{propagate_labelled, ChainElement, PowerTrace};
use crate::standards::{find_profile, power_verdict, risetime_verdict, StandardProfile, Verdict};

/// Which spans a plan walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSpec {
    /// Once around a ring, starting at the first listed node.
    Ring,
    /// Consecutive node ids; each adjacent pair must share a span.
    Nodes(Vec<String>),
}

impl FromStr for PathSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("ring") {
            return Ok(PathSpec::Ring);
        }
        let nodes: Vec<String> = s.split(',').map(|n| n.trim().to_owned()).collect();
        if nodes.len() < 2 || nodes.iter().any(String::is_empty) {
            return Err(Error::Path(format!(
                "expected \"ring\" or at least two comma-separated node ids, got {s:?}"
            )));
        }
        Ok(PathSpec::Nodes(nodes))
    }
}

/// A resolved walk: node ids in order and the span taken between each pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Walk<'a> {
    pub nodes: Vec<&'a str>,
    pub spans: Vec<&'a Span>,
}

pub fn resolve_path<'a>(net: &'a Network, spec: &PathSpec) -> Result<Walk<'a>> {
    match spec {
        PathSpec::Ring => walk_ring(net),
        PathSpec::Nodes(ids) => {
            let mut nodes = Vec::with_capacity(ids.len());
            for id in ids {
                let node = net
                    .node(id)
                    .ok_or_else(|| Error::Path(format!("unknown node {id:?}")))?;
                nodes.push(node.id.as_str());
            }
            let spans = nodes
                .windows(2)
                .map(|pair| {
                    net.spans
                        .iter()
                        .filter(|s| s.joins(pair[0], pair[1]))
                        .min_by(|a, b| a.id.cmp(&b.id))
                        .ok_or_else(|| {
                            Error::Path(format!("no span joins {:?} and {:?}", pair[0], pair[1]))
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Walk { nodes, spans })
        }
    }
}

fn walk_ring(net: &Network) -> Result<Walk<'_>> {
    if net.topology != Topology::Ring {
        return Err(Error::Path("\"ring\" path requires a ring topology".into()));
    }
    let start = net
        .nodes
        .first()
        .ok_or_else(|| Error::Path("network has no nodes".into()))?;
    let mut used = BTreeSet::new();
    let mut nodes = vec![start.id.as_str()];
    let mut spans = Vec::new();
    let mut at = start.id.as_str();
    loop {
        let next = net
            .spans
            .iter()
            .filter(|s| !used.contains(s.id.as_str()) && (s.from == at || s.to == at))
            .min_by(|a, b| a.id.cmp(&b.id));
        let Some(span) = next else { break };
        used.insert(span.id.as_str());
        at = if span.from == at {
            &span.to
        } else {
            &span.from
        };
        nodes.push(at);
        spans.push(span);
        if at == start.id {
            break;
        }
    }
    if at != start.id || spans.len() != net.spans.len() {
        return Err(Error::Path("spans do not close a single ring".into()));
    }
    Ok(Walk { nodes, spans })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanRequest {
    pub standard: String,
    pub path: PathSpec,
    /// Overrides `planning.plan_amplifiers` from the document.
    pub plan_amplifiers: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpanPlan {
    pub span_id: String,
    /// `From-To` using node display names.
    pub link: String,
    pub length: f64,
    pub connectors: u32,
    pub splices: u32,
    pub installed_gain: f64,
    /// Physical loss; the system margin is charged on the path only.
    pub loss: LossBreakdown,
    pub rise_time: RiseTimeReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanReport {
    pub standard: String,
    pub path: Vec<String>,
    /// Sorted by span id.
    pub spans: Vec<SpanPlan>,
    pub path_loss: LossBreakdown,
    pub distribution_loss: f64,
    pub tx_power: f64,
    /// Sensitivity that bounds the power leaving the path.
    pub reference_sensitivity: f64,
    /// Lowest power that may leave the path.
    pub min_path_exit_power: f64,
    pub max_path_loss: f64,
    pub amplifier_plan: AmplifierPlan,
    pub plan_amplifiers: bool,
    pub installed_gain: f64,
    pub applied_gain: f64,
    pub path_exit_power: f64,
    pub received_power: f64,
    pub verdicts: Vec<Verdict>,
    pub pass: bool,
}

/// Validates the network and computes the full plan for one path.
pub fn plan(doc: &NetworkDocument, request: &PlanRequest) -> Result<PlanReport> {
    let net = &doc.network;
    let violations = validate_network(net);
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }
    let standard = find_profile(&request.standard, &doc.standards)?;
    let downlink = match &doc.planning.downlink_standard {
        Some(name) => Some(find_profile(name, &doc.standards)?),
        None => None,
    };
    let reference_sensitivity = reference_sensitivity(doc, Some(&standard))?;
    let walk = resolve_path(net, &request.path)?;
    let planning = &doc.planning;
    let plan_amplifiers = request.plan_amplifiers.unwrap_or(planning.plan_amplifiers);

    let mut spans = walk
        .spans
        .iter()
        .map(|span| span_plan(net, span, &standard))
        .collect::<Result<Vec<_>>>()?;
    spans.sort_by(|a, b| a.span_id.cmp(&b.span_id));
    spans.dedup_by(|a, b| a.span_id == b.span_id);

    let (path_loss, min_path_exit_power, max_path_loss, amplifier_plan) =
        size_amplifiers(doc, &walk, reference_sensitivity)?;
    let tx_power = net.transceiver.tx_power;
    let installed_gain: f64 = walk.spans.iter().map(|s| s.amplifier_gain()).sum();
    let applied_gain = applied_gain(installed_gain, &amplifier_plan, plan_amplifiers);
    let path_exit_power = received_power(tx_power, &[path_loss.total], &[applied_gain]);
    let received = received_power(
        tx_power,
        &[path_loss.total, planning.distribution_loss],
        &[applied_gain],
    );

    let mut verdicts = Vec::new();
    if let Some(downlink) = &downlink {
        verdicts.push(power_verdict(received, downlink));
    }
    verdicts.push(power_verdict(received, &standard));
    for s in &spans {
        let mut v = risetime_verdict(s.rise_time.total, &standard);
        v.quantity = format!("rise time {} ({})", s.link, standard.name());
        verdicts.push(v);
    }
    let pass = verdicts.iter().all(|v| v.pass);

    Ok(PlanReport {
        standard: standard.name().to_owned(),
        path: walk.nodes.iter().map(|n| (*n).to_owned()).collect(),
        spans,
        path_loss,
        distribution_loss: planning.distribution_loss,
        tx_power,
        reference_sensitivity,
        min_path_exit_power,
        max_path_loss,
        amplifier_plan,
        plan_amplifiers,
        installed_gain,
        applied_gain,
        path_exit_power,
        received_power: received,
        verdicts,
        pass,
    })
}

fn span_plan(net: &Network, span: &Span, standard: &StandardProfile) -> Result<SpanPlan> {
    let fiber = net.fiber_for(span)?;
    let name = |id: &str| {
        net.node(id)
            .map_or_else(|| id.to_owned(), |n| n.name.clone())
    };
    Ok(SpanPlan {
        span_id: span.id.clone(),
        link: format!("{}-{}", name(&span.from), name(&span.to)),
        length: span.length,
        connectors: span.connectors,
        splices: span.splice_count(fiber)?,
        installed_gain: span.amplifier_gain(),
        loss: span_physical_loss(span, &net.fibers, &net.losses)?,
        rise_time: span_risetime_report(span, fiber, &net.transceiver, standard)?,
    })
}

/// Sensitivity bounding the power that leaves a path: the document's
/// downlink standard when set, else `standard`, else the transceiver's own.
fn reference_sensitivity(doc: &NetworkDocument, standard: Option<&StandardProfile>) -> Result<f64> {
    Ok(match (&doc.planning.downlink_standard, standard) {
        (Some(name), _) => find_profile(name, &doc.standards)?.rx_sensitivity(),
        (None, Some(standard)) => standard.rx_sensitivity(),
        (None, None) => doc.network.transceiver.rx_sensitivity,
    })
}

/// Gain applied on a path: installed amplifiers, topped up to the planned
/// total when planning is enabled.
fn applied_gain(installed: f64, plan: &AmplifierPlan, plan_amplifiers: bool) -> f64 {
    if plan_amplifiers {
        installed.max(plan.total_gain)
    } else {
        installed
    }
}

fn size_amplifiers(
    doc: &NetworkDocument,
    walk: &Walk<'_>,
    sensitivity: f64,
) -> Result<(LossBreakdown, f64, f64, AmplifierPlan)> {
    let net = &doc.network;
    let loss = path_loss(walk.spans.iter().copied(), &net.fibers, &net.losses)?;
    let min_exit = minimum_input_power(sensitivity, doc.planning.distribution_loss);
    let max_loss = max_allowed_loss(net.transceiver.tx_power, min_exit);
    let plan = amplifier_requirement(loss.total, max_loss, doc.planning.edfa_gain)?;
    Ok((loss, min_exit, max_loss, plan))
}

/// Element chain for a walk: per span a connector, the fiber, its splices,
/// splitters, installed amplifiers and the closing connector(s); then any
/// `planned_gain` top-up, the system margin and the distribution loss.
pub fn path_chain(
    doc: &NetworkDocument,
    walk: &Walk<'_>,
    planned_gain: f64,
) -> Result<Vec<(String, ChainElement)>> {
    let net = &doc.network;
    let mut chain = Vec::new();
    for span in &walk.spans {
        let fiber = net.fiber_for(span)?;
        let leading = span.connectors.div_ceil(2);
        for _ in 0..leading {
            chain.push((format!("{} connector", span.id), ChainElement::Connector));
        }
        chain.push((
            format!("{} fiber {} km", span.id, span.length),
            ChainElement::FiberSegment {
                length: span.length,
                fiber: fiber.clone(),
            },
        ));
        for i in 1..=span.splice_count(fiber)? {
            chain.push((format!("{} splice {i}", span.id), ChainElement::Splice));
        }
        for s in &span.splitters {
            chain.push((
                format!("{} splitter 1x{}", span.id, s.ratio),
                ChainElement::Splitter { ratio: s.ratio },
            ));
        }
        for a in &span.amplifiers {
            chain.push((
                format!("{} amplifier +{} dB", span.id, a.gain),
                ChainElement::Amplifier { gain: a.gain },
            ));
        }
        for _ in leading..span.connectors {
            chain.push((format!("{} connector", span.id), ChainElement::Connector));
        }
    }
    if planned_gain > 0.0 {
        chain.push((
            "planned amplification".to_owned(),
            ChainElement::Amplifier { gain: planned_gain },
        ));
    }
    chain.push((
        "system margin".to_owned(),
        ChainElement::MarginPad {
            loss: net.losses.system_margin,
        },
    ));
    if doc.planning.distribution_loss > 0.0 {
        chain.push((
            "distribution".to_owned(),
            ChainElement::MarginPad {
                loss: doc.planning.distribution_loss,
            },
        ));
    }
    Ok(chain)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TraceRequest {
    pub path: Option<PathSpec>,
    /// dBm; defaults to the transmitter power.
    pub input_power: Option<f64>,
    /// Standard used to size planned amplifiers when the document names no
    /// downlink standard.
    pub standard: Option<String>,
    pub plan_amplifiers: Option<bool>,
}

/// Power trace along a path (a ring walk unless the request names one).
pub fn trace(doc: &NetworkDocument, request: &TraceRequest) -> Result<PowerTrace> {
    let violations = validate_network(&doc.network);
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }
    let standard = match &request.standard {
        Some(name) => Some(find_profile(name, &doc.standards)?),
        None => None,
    };
    let walk = resolve_path(
        &doc.network,
        request.path.as_ref().unwrap_or(&PathSpec::Ring),
    )?;
    let sensitivity = reference_sensitivity(doc, standard.as_ref())?;
    let (_, _, _, plan) = size_amplifiers(doc, &walk, sensitivity)?;
    let installed: f64 = walk.spans.iter().map(|s| s.amplifier_gain()).sum();
    let plan_amplifiers = request
        .plan_amplifiers
        .unwrap_or(doc.planning.plan_amplifiers);
    let top_up = applied_gain(installed, &plan, plan_amplifiers) - installed;
    let chain = path_chain(doc, &walk, top_up)?;
    propagate_labelled(
        request
            .input_power
            .unwrap_or(doc.network.transceiver.tx_power),
        &chain,
        &doc.network.losses,
    )
}
