//! Network description file (JSON).
//!
//! ```json
//! {
//!   "nodes": [{ "id": "a", "name": "A" }, ...],
//!   "spans": [{ "id": "L1", "from": "a", "to": "b", "length": 10.1,
//!               "connectors": 2, "splices": "auto", "fiber": "G.655",
//!               "amplifiers": [{ "gain": 20 }], "splitters": [{ "ratio": 4 }] }],
//!   "topology": "ring" | { "tree": { "head": "a" } },
//!   "fiber_profiles": [{ "name": "G.655", "attenuation": 0.3,
//!                        "dispersion": 3.5, "drum_length": 3 }],
//!   "transceiver": { ... },
//!   "losses": { ... },
//!   "standards": [ ... ],   // optional custom profiles
//!   "traffic": { ... },     // optional forecast inputs
//!   "planning": { ... }     // optional plan settings
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    ComponentLosses, FiberCatalog, FiberProfile, Network, Node, Span, Topology, TransceiverProfile,
};
use crate::standards::StandardProfile;
use crate::traffic::TrafficInput;

/// Settings for amplifier planning and the downstream (distribution) budget.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanningOptions {
    /// Gain of one planned amplifier in dB.
    #[serde(default = "default_edfa_gain")]
    pub edfa_gain: f64,
    /// Add planned amplifier gain when the installed gain falls short.
    #[serde(default = "default_true")]
    pub plan_amplifiers: bool,
    /// Lumped loss in dB between the end of the planned path and the end
    /// point, e.g. the GPON distribution budget.
    #[serde(default)]
    pub distribution_loss: f64,
    /// Profile whose sensitivity bounds the power entering the downstream
    /// segment. When unset the plan's own standard is used.
    #[serde(default)]
    pub downlink_standard: Option<String>,
}

fn default_edfa_gain() -> f64 {
    20.0
}

fn default_true() -> bool {
    true
}

impl Default for PlanningOptions {
    fn default() -> Self {
        PlanningOptions {
            edfa_gain: default_edfa_gain(),
            plan_amplifiers: true,
            distribution_loss: 0.0,
            downlink_standard: None,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    nodes: Vec<Node>,
    #[serde(default)]
    spans: Vec<Span>,
    topology: Topology,
    fiber_profiles: Vec<FiberProfile>,
    transceiver: TransceiverProfile,
    losses: ComponentLosses,
    #[serde(default)]
    standards: Vec<StandardProfile>,
    #[serde(default)]
    traffic: Option<TrafficInput>,
    #[serde(default)]
    planning: PlanningOptions,
}

/// A parsed network description: the network plus optional custom
/// standards, traffic inputs and planning settings.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkDocument {
    pub network: Network,
    pub standards: Vec<StandardProfile>,
    pub traffic: Option<TrafficInput>,
    pub planning: PlanningOptions,
}

impl NetworkDocument {
    /// Parses and checks profile invariants and name references. Structural
    /// graph rules are left to [`crate::validate_network`].
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text)?;

        let mut fibers = FiberCatalog::new();
        for profile in raw.fiber_profiles {
            profile.validate().map_err(config)?;
            if fibers.contains_key(&profile.name) {
                return Err(Error::Config(format!(
                    "fiber profile {:?} is defined twice",
                    profile.name
                )));
            }
            fibers.insert(profile.name.clone(), profile);
        }
        for span in &raw.spans {
            if !fibers.contains_key(&span.fiber) {
                return Err(Error::Config(format!(
                    "span {:?} references unknown fiber profile {:?}",
                    span.id, span.fiber
                )));
            }
        }
        raw.transceiver.validate().map_err(config)?;
        raw.losses.validate().map_err(config)?;
        for (i, a) in raw.standards.iter().enumerate() {
            if raw.standards[..i].iter().any(|b| b.name() == a.name()) {
                return Err(Error::Config(format!(
                    "standard profile {:?} is defined twice",
                    a.name()
                )));
            }
        }
        if let Some(traffic) = &raw.traffic {
            traffic.validate().map_err(config)?;
        }
        let p = &raw.planning;
        if !(p.edfa_gain.is_finite() && p.edfa_gain > 0.0) {
            return Err(Error::Config(format!(
                "planning.edfa_gain {} must be > 0",
                p.edfa_gain
            )));
        }
        if !(p.distribution_loss.is_finite() && p.distribution_loss >= 0.0) {
            return Err(Error::Config(format!(
                "planning.distribution_loss {} must be >= 0",
                p.distribution_loss
            )));
        }

        Ok(NetworkDocument {
            network: Network {
                nodes: raw.nodes,
                spans: raw.spans,
                topology: raw.topology,
                fibers,
                losses: raw.losses,
                transceiver: raw.transceiver,
            },
            standards: raw.standards,
            traffic: raw.traffic,
            planning: raw.planning,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

fn config(err: Error) -> Error {
    match err {
        Error::Domain { quantity, detail } => Error::Config(format!("{quantity}: {detail}")),
        other => other,
    }
}

/// The seven-node backbone ring with its traffic and planning settings.
///
/// Span lengths are reconstructed from the published per-link rise times
/// and scaled to the 84.9 km ring total.
pub const SLEMAN_FIXTURE: &str = include_str!("../fixtures/sleman.json");

/// A small GPON distribution tree on G.984 plant.
pub const DISTRIBUTION_TREE_FIXTURE: &str = include_str!("../fixtures/distribution-tree.json");

pub fn sleman() -> NetworkDocument {
    NetworkDocument::from_json(SLEMAN_FIXTURE).expect("bundled fixture parses")
}
