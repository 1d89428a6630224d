//! Fiber-optic network planning for backbone rings and GPON distribution
//! trees.
//!
//! The crate models a network as nodes joined by fiber spans and computes,
//! per span and per path:
//!
//! * itemized power loss (connectors, fiber, splices, splitters, margin),
//!   received power and the number of fixed-gain EDFAs needed
//!   ([`power_budget`]);
//! * the rise-time budget with its chromatic-dispersion term ([`risetime`]);
//! * an element-by-element power trace and a Q-factor BER estimate
//!   ([`signal_chain`]);
//! * pass/fail verdicts against named receiver/line-rate profiles
//!   ([`standards`]).
//!
//! [`traffic`] covers the subscriber forecast that sizes the network, and
//! [`plan`] ties everything together for one path of a loaded
//! [`NetworkDocument`].
//!
//! ```
//! use fiberplan_core::{plan, sleman, PathSpec, PlanRequest};
//!
//! let report = plan(
//!     &sleman(),
//!     &PlanRequest {
//!         standard: "gpon-onu-endpoint".into(),
//!         path: PathSpec::Ring,
//!         plan_amplifiers: None,
//!     },
//! )
//! .unwrap();
//! assert_eq!(report.amplifier_plan.edfa_count, 2);
//! assert!(report.pass);
//! ```

pub mod document;
pub mod error;
pub mod model;
pub mod plan;
pub mod power_budget;
pub mod report;
pub mod risetime;
pub mod signal_chain;
pub mod standards;
pub mod traffic;
pub mod units;

pub use document::{sleman, NetworkDocument, PlanningOptions};
pub use error::{Error, Result};
pub use model::{
    splice_count, validate_network, Amplifier, AmplifierKind, ComponentLosses, FiberCatalog,
    FiberProfile, Network, Node, Rule, Span, Splices, Splitter, Topology, TransceiverProfile,
    Violation,
};
pub use plan::{
    plan, resolve_path, trace, PathSpec, PlanReport, PlanRequest, SpanPlan, TraceRequest,
};
pub use power_budget::{
    amplifier_requirement, max_allowed_loss, minimum_input_power, path_loss, received_power,
    span_loss, splitter_loss, AmplifierPlan, LossBreakdown,
};
pub use report::Format;
pub use risetime::{
    dispersion_risetime, max_system_risetime, span_risetime_report, total_risetime, RiseTimeReport,
};
pub use signal_chain::{
    ber_from_q, estimate_ber, propagate, BerEstimate, ChainElement, PowerTrace, TracePoint,
    DEFAULT_NOISE_SIGMA,
};
pub use standards::{
    builtin_profiles, find_profile, power_verdict, risetime_verdict, LineCode, StandardProfile,
    Verdict,
};
pub use traffic::{forecast_subscribers, project_growth, TrafficForecast, TrafficInput};
