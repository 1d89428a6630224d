//! Network topology data model and structural validation.
//!
//! A [`Network`] is a set of named nodes joined by fiber [`Span`]s, arranged
//! either as a ring (the backbone) or as a tree rooted at a head node (the
//! GPON distribution side). Every numeric field uses the planning units of
//! the network description file: km, dB, dBm, ps and ps/(nm km).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-km attenuation and chromatic dispersion of a named fiber standard.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberProfile {
    pub name: String,
    /// dB/km.
    pub attenuation: f64,
    /// ps/(nm km).
    pub dispersion: f64,
    /// Length of one cable drum in km; one splice per drum boundary.
    pub drum_length: f64,
}

impl FiberProfile {
    pub fn new(
        name: impl Into<String>,
        attenuation: f64,
        dispersion: f64,
        drum_length: f64,
    ) -> Result<Self> {
        let profile = FiberProfile {
            name: name.into(),
            attenuation,
            dispersion,
            drum_length,
        };
        profile.validate()?;
        Ok(profile)
    }

    pub fn validate(&self) -> Result<()> {
        positive("fiber attenuation", &self.name, self.attenuation)?;
        non_negative("fiber dispersion", &self.name, self.dispersion)?;
        positive("fiber drum length", &self.name, self.drum_length)
    }
}

/// Optical transmitter and receiver pair used on a path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransceiverProfile {
    /// dBm.
    pub tx_power: f64,
    /// Source spectral width in nm.
    pub spectral_width: f64,
    /// ps.
    pub tx_rise_time: f64,
    /// ps.
    pub rx_rise_time: f64,
    /// Minimum receiver input power in dBm.
    pub rx_sensitivity: f64,
    /// Photodetector responsivity in A/W.
    pub responsivity: f64,
}

impl TransceiverProfile {
    pub fn validate(&self) -> Result<()> {
        finite("transmit power", "transceiver", self.tx_power)?;
        finite("receiver sensitivity", "transceiver", self.rx_sensitivity)?;
        positive("spectral width", "transceiver", self.spectral_width)?;
        positive("transmitter rise time", "transceiver", self.tx_rise_time)?;
        positive("receiver rise time", "transceiver", self.rx_rise_time)?;
        positive("responsivity", "transceiver", self.responsivity)
    }
}

/// Per-component loss figures shared by every span of a network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentLosses {
    /// dB per connector.
    pub connector_loss: f64,
    /// dB per splice.
    pub splice_loss: f64,
    /// dB, applied once per evaluated path.
    pub system_margin: f64,
    /// dB added on top of the ideal split loss of every splitter stage.
    #[serde(default)]
    pub splitter_excess_loss: f64,
}

impl ComponentLosses {
    pub fn validate(&self) -> Result<()> {
        non_negative("connector loss", "losses", self.connector_loss)?;
        non_negative("splice loss", "losses", self.splice_loss)?;
        non_negative("system margin", "losses", self.system_margin)?;
        non_negative("splitter excess loss", "losses", self.splitter_excess_loss)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmplifierKind {
    #[default]
    Edfa,
}

/// Fixed-gain in-line optical amplifier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Amplifier {
    /// dB.
    pub gain: f64,
    #[serde(default)]
    pub kind: AmplifierKind,
}

impl Amplifier {
    pub fn edfa(gain: f64) -> Result<Self> {
        let amp = Amplifier {
            gain,
            kind: AmplifierKind::Edfa,
        };
        amp.validate()?;
        Ok(amp)
    }

    pub fn validate(&self) -> Result<()> {
        positive("amplifier gain", "amplifier", self.gain)
    }
}

/// A passive 1xN power splitter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splitter {
    pub ratio: u32,
}

impl Splitter {
    pub fn new(ratio: u32) -> Result<Self> {
        let splitter = Splitter { ratio };
        splitter.validate()?;
        Ok(splitter)
    }

    pub fn validate(&self) -> Result<()> {
        if self.ratio >= 2 && self.ratio.is_power_of_two() {
            Ok(())
        } else {
            Err(Error::domain(
                "splitter ratio",
                format!("1x{} is not a power-of-two split of at least 2", self.ratio),
            ))
        }
    }
}

/// Splice count of a span: fixed, or derived from the drum length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "SplicesRepr", into = "SplicesRepr")]
pub enum Splices {
    #[default]
    Auto,
    Count(u32),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SplicesRepr {
    Count(u32),
    Word(String),
}

impl TryFrom<SplicesRepr> for Splices {
    type Error = String;

    fn try_from(repr: SplicesRepr) -> Result<Self, String> {
        match repr {
            SplicesRepr::Count(n) => Ok(Splices::Count(n)),
            SplicesRepr::Word(w) if w == "auto" => Ok(Splices::Auto),
            SplicesRepr::Word(w) => Err(format!(
                "splices must be a non-negative integer or \"auto\", got {w:?}"
            )),
        }
    }
}

impl From<Splices> for SplicesRepr {
    fn from(s: Splices) -> Self {
        match s {
            Splices::Auto => SplicesRepr::Word("auto".to_owned()),
            Splices::Count(n) => SplicesRepr::Count(n),
        }
    }
}

fn default_connectors() -> u32 {
    2
}

/// A fiber run between two nodes together with its passive and active
/// component inventory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Span {
    pub id: String,
    pub from: String,
    pub to: String,
    /// km.
    pub length: f64,
    /// One connector per span end unless overridden.
    #[serde(default = "default_connectors")]
    pub connectors: u32,
    #[serde(default)]
    pub splices: Splices,
    #[serde(default)]
    pub amplifiers: Vec<Amplifier>,
    #[serde(default)]
    pub splitters: Vec<Splitter>,
    /// Name of a [`FiberProfile`] in the owning network.
    pub fiber: String,
}

impl Span {
    pub fn new(
        id: impl Into<String>,
        from: impl Into<String>,
        to: impl Into<String>,
        length: f64,
        fiber: impl Into<String>,
    ) -> Self {
        Span {
            id: id.into(),
            from: from.into(),
            to: to.into(),
            length,
            connectors: default_connectors(),
            splices: Splices::Auto,
            amplifiers: Vec::new(),
            splitters: Vec::new(),
            fiber: fiber.into(),
        }
    }

    /// Explicit splice count, or the drum-derived count for `Auto`.
    pub fn splice_count(&self, fiber: &FiberProfile) -> Result<u32> {
        match self.splices {
            Splices::Count(n) => Ok(n),
            Splices::Auto => splice_count(self.length, fiber.drum_length),
        }
    }

    pub fn amplifier_gain(&self) -> f64 {
        self.amplifiers.iter().map(|a| a.gain).sum()
    }

    pub fn joins(&self, a: &str, b: &str) -> bool {
        (self.from == a && self.to == b) || (self.from == b && self.to == a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Ring,
    Tree { head: String },
}

/// Fiber profiles keyed by name.
pub type FiberCatalog = BTreeMap<String, FiberProfile>;

#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    pub nodes: Vec<Node>,
    pub spans: Vec<Span>,
    pub topology: Topology,
    pub fibers: FiberCatalog,
    pub losses: ComponentLosses,
    pub transceiver: TransceiverProfile,
}

impl Network {
    pub fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn span(&self, id: &str) -> Option<&Span> {
        self.spans.iter().find(|s| s.id == id)
    }

    pub fn fiber_for(&self, span: &Span) -> Result<&FiberProfile> {
        resolve_fiber(&self.fibers, span)
    }
}

pub(crate) fn resolve_fiber<'a>(fibers: &'a FiberCatalog, span: &Span) -> Result<&'a FiberProfile> {
    fibers.get(&span.fiber).ok_or_else(|| {
        Error::Config(format!(
            "span {:?} references unknown fiber profile {:?}",
            span.id, span.fiber
        ))
    })
}

/// Number of splices on a run of `length` km laid from drums of
/// `drum_length` km: one per drum boundary plus the two terminating joints.
pub fn splice_count(length: f64, drum_length: f64) -> Result<u32> {
    if !(length.is_finite() && length > 0.0) {
        return Err(Error::domain("span length", format!("{length} km")));
    }
    if !(drum_length.is_finite() && drum_length > 0.0) {
        return Err(Error::domain("drum length", format!("{drum_length} km")));
    }
    let drums = (length / drum_length).ceil();
    if drums > f64::from(u32::MAX - 2) {
        return Err(Error::domain(
            "span length",
            format!("{length} km needs more drums than can be counted"),
        ));
    }
    Ok(drums as u32 + 2)
}

/// Structural rule broken by a network element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    EmptyNetwork,
    DuplicateNode,
    DuplicateSpan,
    SelfLoop,
    InvalidLength,
    InvalidComponent,
    UnresolvedNode,
    UnresolvedFiber,
    UnresolvedHead,
    RingDegree,
    RingNotSingleCycle,
    TreeCycle,
    TreeDisconnected,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::EmptyNetwork => "empty-network",
            Rule::DuplicateNode => "duplicate-node",
            Rule::DuplicateSpan => "duplicate-span",
            Rule::SelfLoop => "self-loop",
            Rule::InvalidLength => "invalid-length",
            Rule::InvalidComponent => "invalid-component",
            Rule::UnresolvedNode => "unresolved-node",
            Rule::UnresolvedFiber => "unresolved-fiber",
            Rule::UnresolvedHead => "unresolved-head",
            Rule::RingDegree => "ring-degree",
            Rule::RingNotSingleCycle => "ring-not-single-cycle",
            Rule::TreeCycle => "tree-cycle",
            Rule::TreeDisconnected => "tree-disconnected",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Id of the offending node or span, or `network` for whole-graph rules.
    pub element: String,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.element, self.rule, self.detail)
    }
}

const NETWORK: &str = "network";

/// Returns every structural violation of `net`, sorted by element id and
/// then rule name. An empty list means the network is valid.
pub fn validate_network(net: &Network) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut push = |element: &str, rule: Rule, detail: String| {
        out.push(Violation {
            element: element.to_owned(),
            rule,
            detail,
        })
    };

    if net.nodes.is_empty() {
        push(NETWORK, Rule::EmptyNetwork, "network has no nodes".into());
    }

    let mut node_ids = BTreeSet::new();
    for node in &net.nodes {
        if !node_ids.insert(node.id.as_str()) {
            push(
                &node.id,
                Rule::DuplicateNode,
                "node id appears more than once".into(),
            );
        }
    }

    let mut span_ids = BTreeSet::new();
    // Spans whose endpoints resolve and differ; only these shape the graph.
    let mut edges: Vec<&Span> = Vec::new();
    for span in &net.spans {
        if !span_ids.insert(span.id.as_str()) {
            push(
                &span.id,
                Rule::DuplicateSpan,
                "span id appears more than once".into(),
            );
        }
        if !(span.length.is_finite() && span.length > 0.0) {
            push(
                &span.id,
                Rule::InvalidLength,
                format!("length {} km is not positive", span.length),
            );
        }
        for splitter in &span.splitters {
            if splitter.validate().is_err() {
                push(
                    &span.id,
                    Rule::InvalidComponent,
                    format!("splitter 1x{} is not a power-of-two split", splitter.ratio),
                );
            }
        }
        for amp in &span.amplifiers {
            if amp.validate().is_err() {
                push(
                    &span.id,
                    Rule::InvalidComponent,
                    format!("amplifier gain {} dB is not positive", amp.gain),
                );
            }
        }
        if !net.fibers.contains_key(&span.fiber) {
            push(
                &span.id,
                Rule::UnresolvedFiber,
                format!("unknown fiber profile {:?}", span.fiber),
            );
        }
        let mut resolved = true;
        for end in [&span.from, &span.to] {
            if !node_ids.contains(end.as_str()) {
                resolved = false;
                push(
                    &span.id,
                    Rule::UnresolvedNode,
                    format!("unknown node {end:?}"),
                );
            }
        }
        if span.from == span.to {
            push(
                &span.id,
                Rule::SelfLoop,
                format!("span starts and ends at {:?}", span.from),
            );
        } else if resolved {
            edges.push(span);
        }
    }

    let mut adjacency: BTreeMap<&str, Vec<&str>> =
        node_ids.iter().map(|id| (*id, Vec::new())).collect();
    for span in &edges {
        adjacency.entry(&span.from).or_default().push(&span.to);
        adjacency.entry(&span.to).or_default().push(&span.from);
    }

    match &net.topology {
        Topology::Ring => {
            for (node, neighbours) in &adjacency {
                if neighbours.len() != 2 {
                    push(
                        node,
                        Rule::RingDegree,
                        format!("ring node has degree {}, expected 2", neighbours.len()),
                    );
                }
            }
            if let Some(start) = adjacency.keys().next() {
                let reached = reachable(&adjacency, start);
                if reached.len() != adjacency.len() {
                    push(
                        NETWORK,
                        Rule::RingNotSingleCycle,
                        format!(
                            "spans split the {} nodes into more than one component",
                            adjacency.len()
                        ),
                    );
                }
            }
        }
        Topology::Tree { head } => {
            if !node_ids.contains(head.as_str()) {
                push(
                    head,
                    Rule::UnresolvedHead,
                    "tree head is not a known node".into(),
                );
            } else {
                let reached = reachable(&adjacency, head);
                for node in adjacency.keys() {
                    if !reached.contains(node) {
                        push(
                            node,
                            Rule::TreeDisconnected,
                            format!("node is not reachable from head {head:?}"),
                        );
                    }
                }
            }
            let mut components = DisjointSet::new(node_ids.iter().copied());
            for span in &edges {
                if !components.union(&span.from, &span.to) {
                    push(
                        &span.id,
                        Rule::TreeCycle,
                        format!("span {}-{} closes a cycle", span.from, span.to),
                    );
                }
            }
        }
    }

    out.sort_by(|a, b| {
        (a.element.as_str(), a.rule.as_str()).cmp(&(b.element.as_str(), b.rule.as_str()))
    });
    out
}

fn reachable<'a>(adjacency: &BTreeMap<&'a str, Vec<&'a str>>, start: &'a str) -> BTreeSet<&'a str> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        for next in adjacency.get(node).into_iter().flatten() {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

struct DisjointSet<'a> {
    parent: BTreeMap<&'a str, &'a str>,
}

impl<'a> DisjointSet<'a> {
    fn new(items: impl IntoIterator<Item = &'a str>) -> Self {
        DisjointSet {
            parent: items.into_iter().map(|i| (i, i)).collect(),
        }
    }

    fn find(&mut self, item: &'a str) -> &'a str {
        let mut root = item;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = item;
        while cur != root {
            let next = self.parent[cur];
            self.parent.insert(cur, root);
            cur = next;
        }
        root
    }

    /// Returns false when both items were already joined.
    fn union(&mut self, a: &'a str, b: &'a str) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent.insert(ra.max(rb), ra.min(rb));
        true
    }
}

fn finite(quantity: &'static str, owner: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            quantity,
            format!("{owner}: {v} is not finite"),
        ))
    }
}

fn positive(quantity: &'static str, owner: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(quantity, format!("{owner}: {v} must be > 0")))
    }
}

fn non_negative(quantity: &'static str, owner: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            quantity,
            format!("{owner}: {v} must be >= 0"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fiber() -> FiberProfile {
        FiberProfile::new("G.655", 0.3, 3.5, 3.0).unwrap()
    }

    fn network(node_ids: &[&str], spans: &[(&str, &str, &str)], topology: Topology) -> Network {
        Network {
            nodes: node_ids
                .iter()
                .map(|id| Node {
                    id: (*id).into(),
                    name: id.to_uppercase(),
                })
                .collect(),
            spans: spans
                .iter()
                .map(|(id, a, b)| Span::new(*id, *a, *b, 5.0, "G.655"))
                .collect(),
            topology,
            fibers: FiberCatalog::from([("G.655".into(), fiber())]),
            losses: ComponentLosses {
                connector_loss: 0.3,
                splice_loss: 0.05,
                system_margin: 3.0,
                splitter_excess_loss: 0.0,
            },
            transceiver: TransceiverProfile {
                tx_power: 9.0,
                spectral_width: 0.1,
                tx_rise_time: 60.0,
                rx_rise_time: 35.0,
                rx_sensitivity: -38.0,
                responsivity: 0.9,
            },
        }
    }

    fn seven_ring() -> Network {
        let ids = ["a", "b", "c", "d", "e", "f", "g"];
        let spans: Vec<(String, &str, &str)> = (0..7)
            .map(|i| (format!("L{}", i + 1), ids[i], ids[(i + 1) % 7]))
            .collect();
        let spans: Vec<(&str, &str, &str)> = spans
            .iter()
            .map(|(id, a, b)| (id.as_str(), *a, *b))
            .collect();
        network(&ids, &spans, Topology::Ring)
    }

    fn rules(v: &[Violation]) -> Vec<(&str, Rule)> {
        v.iter().map(|v| (v.element.as_str(), v.rule)).collect()
    }

    #[test]
    fn seven_node_ring_is_valid() {
        assert!(validate_network(&seven_ring()).is_empty());
    }

    #[test]
    fn lone_ring_node_has_degree_violation() {
        let net = network(&["a"], &[], Topology::Ring);
        assert_eq!(
            rules(&validate_network(&net)),
            vec![("a", Rule::RingDegree)]
        );
    }

    #[test]
    fn dangling_node_reference() {
        let mut net = seven_ring();
        net.spans[0].to = "X".into();
        let v = validate_network(&net);
        assert!(rules(&v).contains(&("L1", Rule::UnresolvedNode)));
        assert!(v.iter().any(|v| v.detail.contains("\"X\"")));
    }

    #[test]
    fn empty_network() {
        let net = network(&[], &[], Topology::Ring);
        assert_eq!(
            rules(&validate_network(&net)),
            vec![("network", Rule::EmptyNetwork)]
        );
    }

    #[test]
    fn two_disjoint_triangles_are_not_a_ring() {
        let net = network(
            &["a", "b", "c", "d", "e", "f"],
            &[
                ("1", "a", "b"),
                ("2", "b", "c"),
                ("3", "c", "a"),
                ("4", "d", "e"),
                ("5", "e", "f"),
                ("6", "f", "d"),
            ],
            Topology::Ring,
        );
        assert_eq!(
            rules(&validate_network(&net)),
            vec![("network", Rule::RingNotSingleCycle)]
        );
    }

    #[test]
    fn tree_rules() {
        let head = Topology::Tree { head: "olt".into() };
        let ok = network(
            &["olt", "s1", "onu1", "onu2"],
            &[("a", "olt", "s1"), ("b", "s1", "onu1"), ("c", "s1", "onu2")],
            head.clone(),
        );
        assert!(validate_network(&ok).is_empty());

        let cyclic = network(
            &["olt", "s1", "onu1"],
            &[
                ("a", "olt", "s1"),
                ("b", "s1", "onu1"),
                ("c", "onu1", "olt"),
            ],
            head.clone(),
        );
        assert_eq!(
            rules(&validate_network(&cyclic)),
            vec![("c", Rule::TreeCycle)]
        );

        let split = network(&["olt", "s1", "lost"], &[("a", "olt", "s1")], head);
        assert_eq!(
            rules(&validate_network(&split)),
            vec![("lost", Rule::TreeDisconnected)]
        );

        let headless = network(&["a"], &[], Topology::Tree { head: "zz".into() });
        assert_eq!(
            rules(&validate_network(&headless)),
            vec![("zz", Rule::UnresolvedHead)]
        );
    }

    #[test]
    fn span_level_rules_are_sorted() {
        let mut net = seven_ring();
        net.spans[2].length = 0.0;
        net.spans[2].fiber = "nope".into();
        net.spans[1].splitters.push(Splitter { ratio: 3 });
        net.nodes.push(Node {
            id: "a".into(),
            name: "dup".into(),
        });
        let v = validate_network(&net);
        assert_eq!(
            rules(&v),
            vec![
                ("L2", Rule::InvalidComponent),
                ("L3", Rule::InvalidLength),
                ("L3", Rule::UnresolvedFiber),
                ("a", Rule::DuplicateNode),
            ]
        );
        assert_eq!(validate_network(&net), v);
    }

    #[test]
    fn splice_count_examples() {
        assert_eq!(splice_count(18.8, 3.0).unwrap(), 9);
        assert_eq!(splice_count(3.0, 3.0).unwrap(), 3);
        assert_eq!(splice_count(8.4, 3.0).unwrap(), 5);
        assert_eq!(splice_count(0.01, 3.0).unwrap(), 3);
    }

    #[test]
    fn splice_count_rejects_bad_input() {
        for (l, d) in [
            (0.0, 3.0),
            (-1.0, 3.0),
            (1.0, 0.0),
            (f64::NAN, 3.0),
            (1.0, f64::INFINITY),
        ] {
            assert!(
                matches!(splice_count(l, d), Err(Error::Domain { .. })),
                "{l} {d}"
            );
        }
    }

    #[test]
    fn explicit_splices_override_drums() {
        let mut span = Span::new("s", "a", "b", 18.8, "G.655");
        assert_eq!(span.splice_count(&fiber()).unwrap(), 9);
        span.splices = Splices::Count(4);
        assert_eq!(span.splice_count(&fiber()).unwrap(), 4);
    }

    #[test]
    fn splices_serde_forms() {
        let auto: Splices = serde_json::from_str("\"auto\"").unwrap();
        let fixed: Splices = serde_json::from_str("7").unwrap();
        assert_eq!((auto, fixed), (Splices::Auto, Splices::Count(7)));
        assert!(serde_json::from_str::<Splices>("\"many\"").is_err());
        assert!(serde_json::from_str::<Splices>("-1").is_err());
        assert_eq!(serde_json::to_string(&Splices::Auto).unwrap(), "\"auto\"");
    }

    #[test]
    fn profile_invariants() {
        assert!(FiberProfile::new("x", 0.0, 1.0, 3.0).is_err());
        assert!(FiberProfile::new("x", 0.2, -1.0, 3.0).is_err());
        assert!(FiberProfile::new("x", 0.2, 0.0, 3.0).is_ok());
        assert!(Splitter::new(1).is_err());
        assert!(Splitter::new(6).is_err());
        assert!(Splitter::new(32).is_ok());
        assert!(Amplifier::edfa(0.0).is_err());
        let mut t = seven_ring().transceiver;
        assert!(t.validate().is_ok());
        t.responsivity = 0.0;
        assert!(t.validate().is_err());
    }
}
